//! Arithmetic in GF(p^r).
//!
//! Elements are encoded as integers `0..q`: the coefficient vector
//! `(c_0, .., c_{r-1})` of the polynomial representative becomes
//! `c_0 + c_1 p + .. + c_{r-1} p^{r-1}`. Codes are basis dependent; the
//! modulus is the lexicographically smallest monic irreducible polynomial,
//! coefficients compared from the constant term upward.
//!
//! Multiplication goes through discrete log / antilog tables and addition
//! through a Zech logarithm table, so every operation is a couple of table
//! lookups once the field is built.

use std::fmt;

use thiserror::Error;

/// Largest field order accepted by [`Field::new`].
pub const DEFAULT_ORDER_CAP: u64 = 1 << 16;

const NONE: u32 = u32::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{r} exceeds the cap of {cap}")]
    OrderCapExceeded { p: u32, r: u32, cap: u64 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields (GF({0}) and GF({1}))")]
    MixedFields(u32, u32),
    #[error("GF({0}) is not a quadratic extension of a subfield")]
    NotSquareOrder(u32),
}

/// A finite field GF(p^r) with precomputed log, antilog and Zech tables.
#[derive(Clone, PartialEq, Eq)]
pub struct Field {
    p: u32,
    r: u32,
    q: u32,
    modulus: Vec<u32>,
    primitive: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("r", &self.r)
            .field("modulus", &self.modulus)
            .field("primitive", &self.primitive)
            .finish()
    }
}

impl Field {
    pub fn new(p: u32, r: u32) -> Result<Self, FieldError> {
        Self::with_cap(p, r, DEFAULT_ORDER_CAP)
    }

    pub fn with_cap(p: u32, r: u32, cap: u64) -> Result<Self, FieldError> {
        if !is_prime(u64::from(p)) {
            return Err(FieldError::NotPrime(p));
        }
        if r == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let order = (p as u64).checked_pow(r).filter(|&o| o <= cap);
        let q = match order {
            Some(o) if o <= u64::from(u32::MAX / 2) => o as u32,
            _ => return Err(FieldError::OrderCapExceeded { p, r, cap }),
        };

        let modulus = smallest_irreducible(p, r as usize);
        let ring = PolyRing { p, modulus: &modulus };

        let group = q - 1;
        let prime_factors = distinct_prime_factors(u64::from(group));
        let primitive = (1..q)
            .find(|&c| {
                let c = ring.decode(c, r as usize);
                prime_factors
                    .iter()
                    .all(|&l| !ring.is_one(&ring.pow(&c, u64::from(group) / l)))
            })
            .expect("the multiplicative group of a finite field is cyclic");

        let mut exp = Vec::with_capacity(group as usize);
        let mut log = vec![NONE; q as usize];
        let g = ring.decode(primitive, r as usize);
        let mut acc = ring.decode(1, r as usize);
        for i in 0..group {
            let code = ring.encode(&acc);
            exp.push(code);
            log[code as usize] = i;
            acc = ring.mul(&acc, &g);
        }

        // zech[i] = log(1 + g^i)
        let zech = exp
            .iter()
            .map(|&c| {
                let one_plus = if c % p == p - 1 { c + 1 - p } else { c + 1 };
                if one_plus == 0 {
                    NONE
                } else {
                    log[one_plus as usize]
                }
            })
            .collect();

        Ok(Field {
            p,
            r,
            q,
            modulus,
            primitive,
            exp,
            log,
            zech,
        })
    }

    /// Field of the given prime-power order.
    pub fn of_order(q: u64) -> Result<Self, FieldError> {
        let (p, r) = prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        Self::new(p, r)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.r
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Coefficients of the modulus, constant term first; the last entry is 1.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The generator with the smallest code; the log tables are built on it.
    pub fn primitive(&self) -> u32 {
        self.primitive
    }

    pub fn element(&self, code: u32) -> FieldElement<'_> {
        assert!(code < self.q, "code {code} out of range for GF({})", self.q);
        FieldElement { field: self, code }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement<'_>> + '_ {
        (0..self.q).map(move |code| FieldElement { field: self, code })
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        let n = self.q - 1;
        let la = self.log[a as usize];
        let lb = self.log[b as usize];
        let d = if lb >= la { lb - la } else { lb + n - la };
        match self.zech[d as usize] {
            NONE => 0,
            z => self.exp[((la + z) % n) as usize],
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 || self.p == 2 {
            return a;
        }
        let n = self.q - 1;
        self.exp[((self.log[a as usize] + n / 2) % n) as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.log[a as usize] + self.log[b as usize];
        self.exp[(s % (self.q - 1)) as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.q - 1;
        Some(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32, FieldError> {
        let inv = self.inv(b).ok_or(FieldError::DivisionByZero)?;
        Ok(self.mul(a, inv))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = u64::from(self.q - 1);
        let l = u64::from(self.log[a as usize]) * (e % n) % n;
        self.exp[l as usize]
    }

    /// Code of the integer `k` reduced into the prime subfield.
    pub fn from_int(&self, k: i64) -> u32 {
        k.rem_euclid(i64::from(self.p)) as u32
    }

    /// Discrete logarithm to the base [`Field::primitive`].
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: u32) -> Option<u32> {
        let l = self.log(a)?;
        let n = self.q - 1;
        Some(n / gcd(u64::from(l), u64::from(n)) as u32)
    }

    /// All generators of the multiplicative group, ascending by code.
    pub fn generators(&self) -> Vec<u32> {
        let n = u64::from(self.q - 1);
        (1..self.q)
            .filter(|&c| gcd(u64::from(self.log[c as usize]), n) == 1)
            .collect()
    }

    /// Embedding of GF(sqrt(q)) into this field.
    pub fn subfield_embedding(&self) -> Result<SubfieldEmbedding, FieldError> {
        if !self.r.is_multiple_of(2) {
            return Err(FieldError::NotSquareOrder(self.q));
        }
        let sub = Field::new(self.p, self.r / 2)?;
        let sq = u64::from(sub.order());
        // x^sq = x cuts out the subfield; X of the small field maps to the
        // first root of its modulus found there.
        let root = (0..self.q)
            .filter(|&x| self.pow(x, sq) == x)
            .find(|&x| {
                let value = sub
                    .modulus()
                    .iter()
                    .rev()
                    .fold(0, |acc, &c| self.add(self.mul(acc, x), c));
                value == 0
            })
            .expect("the subfield contains every root of its own modulus");

        let image = (0..sub.order())
            .map(|code| {
                let mut acc = 0;
                let mut power = 1;
                let mut rest = code;
                for _ in 0..sub.degree() {
                    acc = self.add(acc, self.mul(rest % self.p, power));
                    power = self.mul(power, root);
                    rest /= self.p;
                }
                acc
            })
            .collect::<Vec<_>>();
        let mut in_image = vec![false; self.q as usize];
        for &c in &image {
            in_image[c as usize] = true;
        }
        Ok(SubfieldEmbedding {
            subfield: sub,
            image,
            in_image,
        })
    }
}

/// An element tied to the field it belongs to.
#[derive(Clone, Copy)]
pub struct FieldElement<'f> {
    field: &'f Field,
    code: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl<'f> FieldElement<'f> {
    pub fn code(self) -> u32 {
        self.code
    }

    pub fn field(self) -> &'f Field {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.code == 0
    }

    pub fn apply(self, op: ArithOp, rhs: FieldElement<'f>) -> Result<FieldElement<'f>, FieldError> {
        let f = self.field;
        if (f.p, f.r) != (rhs.field.p, rhs.field.r) {
            return Err(FieldError::MixedFields(f.q, rhs.field.q));
        }
        let code = match op {
            ArithOp::Add => f.add(self.code, rhs.code),
            ArithOp::Sub => f.sub(self.code, rhs.code),
            ArithOp::Mul => f.mul(self.code, rhs.code),
            ArithOp::Div => f.div(self.code, rhs.code)?,
        };
        Ok(FieldElement { field: f, code })
    }

    pub fn try_add(self, rhs: Self) -> Result<Self, FieldError> {
        self.apply(ArithOp::Add, rhs)
    }

    pub fn try_sub(self, rhs: Self) -> Result<Self, FieldError> {
        self.apply(ArithOp::Sub, rhs)
    }

    pub fn try_mul(self, rhs: Self) -> Result<Self, FieldError> {
        self.apply(ArithOp::Mul, rhs)
    }

    pub fn try_div(self, rhs: Self) -> Result<Self, FieldError> {
        self.apply(ArithOp::Div, rhs)
    }
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code && (self.field.p, self.field.r) == (other.field.p, other.field.r)
    }
}

impl Eq for FieldElement<'_> {}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})[{}]", self.field.q, self.code)
    }
}

/// Injective homomorphism GF(q) -> GF(q^2).
#[derive(Debug, Clone)]
pub struct SubfieldEmbedding {
    subfield: Field,
    image: Vec<u32>,
    in_image: Vec<bool>,
}

impl SubfieldEmbedding {
    pub fn subfield(&self) -> &Field {
        &self.subfield
    }

    /// Image of a subfield code in the big field.
    pub fn map(&self, code: u32) -> u32 {
        self.image[code as usize]
    }

    pub fn image(&self) -> &[u32] {
        &self.image
    }

    pub fn contains(&self, big_code: u32) -> bool {
        self.in_image[big_code as usize]
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `(p, r)` with `q = p^r`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut r = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        r += 1;
    }
    (rest == 1).then_some((p as u32, r))
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// First monic irreducible of degree `r` over GF(p), comparing coefficient
/// vectors from the constant term upward.
fn smallest_irreducible(p: u32, r: usize) -> Vec<u32> {
    let total = (p as u64).pow(r as u32);
    (0..total)
        .map(|idx| {
            // constant term is the most significant digit of the enumeration
            let mut coeffs = vec![0u32; r + 1];
            let mut rest = idx;
            for i in (0..r).rev() {
                coeffs[i] = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            coeffs[r] = 1;
            coeffs
        })
        .find(|f| is_irreducible(p, f))
        .expect("irreducible polynomials exist in every degree")
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(p: u32, f: &[u32]) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut g = vec![0u32; d + 1];
            let mut rest = idx;
            for c in g.iter_mut().take(d) {
                *c = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            g[d] = 1;
            if poly_rem(p, f, &g).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn poly_rem(p: u32, a: &[u32], m: &[u32]) -> Vec<u32> {
    let dm = m.len() - 1;
    let mut r = a.to_vec();
    while r.len() > dm {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let shift = r.len() - dm;
            for (i, &mc) in m.iter().take(dm).enumerate() {
                let idx = shift + i;
                r[idx] = (r[idx] + p - (lead * mc) % p) % p;
            }
        }
    }
    r
}

/// GF(p)[X] modulo a fixed monic polynomial; only used while building tables.
struct PolyRing<'a> {
    p: u32,
    modulus: &'a [u32],
}

impl PolyRing<'_> {
    fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn decode(&self, mut code: u32, r: usize) -> Vec<u32> {
        let mut out = vec![0; r];
        for c in out.iter_mut() {
            *c = code % self.p;
            code /= self.p;
        }
        out
    }

    fn encode(&self, coeffs: &[u32]) -> u32 {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn is_one(&self, a: &[u32]) -> bool {
        a[0] == 1 && a[1..].iter().all(|&c| c == 0)
    }

    fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let p = u64::from(self.p);
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u64::from(x) * u64::from(y)) % p;
            }
        }
        let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
        let mut r = poly_rem(self.p, &prod, self.modulus);
        r.resize(self.degree(), 0);
        r
    }

    fn pow(&self, base: &[u32], mut e: u64) -> Vec<u32> {
        let mut result = self.decode(1, self.degree());
        let mut b = base.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        result
    }
}
