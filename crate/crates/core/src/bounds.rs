//! Lower bounds on the order of (edge-)girth-regular graphs.
//!
//! Every value is computed in exact integer arithmetic; a bound whose
//! hypotheses fail is reported as inapplicable rather than as a number.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("degree must be at least 3, got {0}")]
    DegreeTooSmall(u64),
    #[error("girth must be at least 3, got {0}")]
    GirthTooSmall(u32),
    #[error("walk length must be even and positive, got {0}")]
    OddWalkLength(u32),
    #[error("signature has {len} entries, expected {k}")]
    SignatureLength { len: usize, k: u64 },
    #[error("give either lambda or a signature")]
    MissingCounts,
    #[error("empty lambda range")]
    EmptyRange,
    #[error("value exceeds 128-bit arithmetic")]
    Overflow,
}

type Result<T> = std::result::Result<T, BoundError>;

fn ceil_div(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    a.div_euclid(b) + i128::from(a.rem_euclid(b) != 0)
}

fn pow(base: u64, e: u32) -> Result<i128> {
    i128::from(base).checked_pow(e).ok_or(BoundError::Overflow)
}

fn check_kg(k: u64, g: u32) -> Result<()> {
    if k < 3 {
        return Err(BoundError::DegreeTooSmall(k));
    }
    if g < 3 {
        return Err(BoundError::GirthTooSmall(g));
    }
    Ok(())
}

/// Moore bound n0(k, g).
pub fn moore(k: u64, g: u32) -> Result<i128> {
    check_kg(k, g)?;
    let k = i128::from(k);
    let num = if g % 2 == 1 {
        k * pow(k as u64 - 1, (g - 1) / 2)? - 2
    } else {
        2 * pow(k as u64 - 1, g / 2)? - 2
    };
    Ok(num / (k - 2))
}

/// Outcome of one bound: a value, or the reason it does not apply.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<i128>,
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

impl BoundEntry {
    fn value(name: &str, value: i128) -> Self {
        BoundEntry {
            name: name.into(),
            value: Some(value),
            applicable: true,
            reason: None,
            warning: None,
        }
    }

    fn inapplicable(name: &str, reason: impl Into<String>) -> Self {
        BoundEntry {
            name: name.into(),
            value: None,
            applicable: false,
            reason: Some(reason.into()),
            warning: None,
        }
    }
}

/// Lower bound on the order of an egr(n, k, g, lambda), or of a bipartite one.
pub fn dfjr(k: u64, g: u32, lambda: u64, bipartite: bool) -> Result<BoundEntry> {
    let n0 = moore(k, g)?;
    let lam = i128::from(lambda);
    let ki = i128::from(k);
    if g % 2 == 1 {
        if bipartite {
            return Ok(BoundEntry::inapplicable("dfjr", "bipartite graphs have even girth"));
        }
        let top = pow(k - 1, (g - 1) / 2)?;
        if lam > top {
            return Ok(BoundEntry::inapplicable("dfjr", format!("lambda > (k-1)^((g-1)/2) = {top}")));
        }
        return Ok(BoundEntry::value("dfjr", n0 + top - lam));
    }
    let top = pow(k - 1, g / 2)?;
    if lam > top {
        return Ok(BoundEntry::inapplicable("dfjr", format!("lambda > (k-1)^(g/2) = {top}")));
    }
    let extra = if bipartite {
        2 * ceil_div(top - lam, ki)
    } else {
        ceil_div(2 * (top - lam), ki)
    };
    Ok(BoundEntry::value("dfjr", n0 + extra))
}

/// Closed walks of length `len` from the root of the infinite k-regular tree.
pub fn tree_walks(len: u32, k: u64) -> Result<u128> {
    if len == 0 || len % 2 == 1 {
        return Err(BoundError::OddWalkLength(len));
    }
    let k = u128::from(k);
    let max_depth = len as usize / 2;
    // ways[d] = walks of the current length ending at depth d
    let mut ways = vec![0u128; max_depth + 2];
    ways[0] = 1;
    for _ in 0..len {
        let mut next = vec![0u128; max_depth + 2];
        for d in 0..=max_depth {
            let w = ways[d];
            if w == 0 {
                continue;
            }
            let out = if d == 0 { k } else { k - 1 };
            next[d + 1] = next[d + 1]
                .checked_add(w.checked_mul(out).ok_or(BoundError::Overflow)?)
                .ok_or(BoundError::Overflow)?;
            if d > 0 {
                next[d - 1] = next[d - 1].checked_add(w).ok_or(BoundError::Overflow)?;
            }
        }
        ways = next;
    }
    Ok(ways[0])
}

fn walks(len: u32, k: u64) -> Result<i128> {
    i128::try_from(tree_walks(len, k)?).map_err(|_| BoundError::Overflow)
}

/// Eigenvalue bound for even girth, with `sum_a = k * lambda` for egr graphs
/// or the signature sum otherwise.
pub fn spectral_bound(k: u64, g: u32, sum_a: u64, bipartite: bool) -> Result<BoundEntry> {
    check_kg(k, g)?;
    if g % 2 == 1 {
        return Ok(BoundEntry::inapplicable("spectral", "odd girth"));
    }
    let s = i128::from(sum_a);
    let c = walks(g, k)?;
    let kg = pow(k, g)?;
    let (num, den) = if g.is_multiple_of(4) {
        let half = walks(g / 2, k)?;
        let kh = pow(k, g / 2)?;
        let num = c + s + kg - 2 * half * kh;
        let den = c - half * half + s;
        (if bipartite { 2 * num } else { num }, den)
    } else if bipartite {
        (2 * kg, c + s)
    } else {
        (c + s + kg, c + s)
    };
    if den <= 0 {
        return Ok(BoundEntry::inapplicable("spectral", format!("denominator {den} is not positive")));
    }
    Ok(BoundEntry::value("spectral", ceil_div(num, den)))
}

fn check_signature(k: u64, a: &[u64]) -> Result<()> {
    if a.len() as u64 != k {
        return Err(BoundError::SignatureLength { len: a.len(), k });
    }
    Ok(())
}

/// Even-girth signature bound, evaluated exactly as printed with `a1` the
/// smallest signature entry.
pub fn sgr_even(k: u64, g: u32, a: &[u64]) -> Result<BoundEntry> {
    check_kg(k, g)?;
    check_signature(k, a)?;
    if g % 2 == 1 {
        return Ok(BoundEntry::inapplicable("sgr-even", "odd girth"));
    }
    let top = pow(k - 1, g / 2)?;
    let ki = i128::from(k);
    let a1 = i128::from(*a.iter().min().unwrap());
    let value = ceil_div(2 * (top - 2), ki - 2) + ceil_div(top - 2 * a1, ki);
    Ok(BoundEntry::value("sgr-even", value))
}

/// Odd-girth signature bound.
pub fn sgr_odd(k: u64, g: u32, a: &[u64]) -> Result<BoundEntry> {
    check_kg(k, g)?;
    check_signature(k, a)?;
    if g.is_multiple_of(2) {
        return Ok(BoundEntry::inapplicable("sgr-odd", "even girth"));
    }
    let ki = i128::from(k);
    let t = ki * pow(k - 1, (g - 1) / 2)?;
    let sum: i128 = a.iter().map(|&x| i128::from(x)).sum();
    Ok(BoundEntry::value("sgr-odd", ceil_div(t - 2, ki - 2) + ceil_div(t - sum, ki)))
}

/// Which printing of the cycle-counting bound to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CycleForm {
    /// `a_i^2` in the inner term, subtracted twice.
    #[default]
    Proof,
    /// `a_i` in the inner term, subtracted once.
    Statement,
}

/// Even-girth bound from counting girth cycles through one endpoint of an
/// edge. A term with zero numerator contributes 0; a term with positive
/// numerator and nonpositive denominator is skipped.
pub fn sgr_cycle(k: u64, g: u32, a: &[u64], form: CycleForm) -> Result<BoundEntry> {
    check_kg(k, g)?;
    check_signature(k, a)?;
    if g % 2 == 1 {
        return Ok(BoundEntry::inapplicable("cycle", "odd girth"));
    }
    let h = g / 2;
    let top = pow(k - 1, h)?;
    let below = pow(k - 1, h - 1)?;
    let sum: i128 = a.iter().map(|&x| i128::from(x)).sum();
    let mut best: Option<i128> = None;
    for &ai in a {
        let ai = i128::from(ai);
        let num = (top - ai) * (top - ai);
        let den = match form {
            CycleForm::Proof => {
                let m = ceil_div(ai * ai - ai * below, 2 * below).max(0);
                sum - 3 * ai + top - 2 * m
            }
            CycleForm::Statement => {
                let m = ceil_div(ai - ai * below, 2 * below).max(0);
                sum - 3 * ai + top - m
            }
        };
        let term = if num == 0 {
            0
        } else if den <= 0 {
            continue;
        } else {
            ceil_div(num, den)
        };
        best = Some(best.map_or(term, |b| b.max(term)));
    }
    let name = match form {
        CycleForm::Proof => "cycle",
        CycleForm::Statement => "cycle-statement",
    };
    Ok(match best {
        Some(extra) => BoundEntry::value(name, moore(k, g)? + extra),
        None => BoundEntry::inapplicable(name, "every denominator is nonpositive"),
    })
}

/// The egr specialization of the cycle bound, written out separately.
pub fn cycle_bound_egr(k: u64, g: u32, lambda: u64) -> Result<Option<i128>> {
    check_kg(k, g)?;
    if g % 2 == 1 {
        return Ok(None);
    }
    let h = g / 2;
    let top = pow(k - 1, h)?;
    let below = pow(k - 1, h - 1)?;
    let (k, l) = (i128::from(k), i128::from(lambda));
    let num = (top - l).pow(2);
    let m = ceil_div(l * l - l * below, 2 * below).max(0);
    let den = (k - 3) * l + top - 2 * m;
    let extra = match (num, den) {
        (0, _) => 0,
        (_, d) if d <= 0 => return Ok(None),
        (n, d) => ceil_div(n, d),
    };
    Ok(Some(2 * (top - 1) / (k - 2) + extra))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundQuery {
    pub k: u64,
    pub g: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signature: Option<Vec<u64>>,
    #[serde(default)]
    pub bipartite: bool,
}

impl BoundQuery {
    pub fn egr(k: u64, g: u32, lambda: u64, bipartite: bool) -> Self {
        BoundQuery {
            k,
            g,
            lambda: Some(lambda),
            signature: None,
            bipartite,
        }
    }

    pub fn signature(k: u64, g: u32, mut a: Vec<u64>, bipartite: bool) -> Self {
        a.sort_unstable();
        BoundQuery {
            k,
            g,
            lambda: None,
            signature: Some(a),
            bipartite,
        }
    }

    /// Full ascending signature; a lambda query expands to `k` copies.
    pub fn resolved_signature(&self) -> Result<Vec<u64>> {
        match (&self.signature, self.lambda) {
            (Some(a), _) => {
                check_signature(self.k, a)?;
                let mut a = a.clone();
                a.sort_unstable();
                Ok(a)
            }
            (None, Some(l)) => Ok(vec![l; self.k as usize]),
            (None, None) => Err(BoundError::MissingCounts),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub query: BoundQuery,
    pub bounds: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn get(&self, name: &str) -> Option<&BoundEntry> {
        self.bounds.iter().find(|b| b.name == name)
    }

    /// Value of a bound, if it applies.
    pub fn value(&self, name: &str) -> Option<i128> {
        self.get(name).and_then(|b| b.value)
    }
}

/// Every bound at once: moore, dfjr, spectral, sgr-even, sgr-odd, cycle.
pub fn evaluate(query: &BoundQuery) -> Result<BoundReport> {
    let (k, g) = (query.k, query.g);
    check_kg(k, g)?;
    let a = query.resolved_signature()?;
    let sum: u64 = a.iter().sum();
    let constant = a.iter().all(|&x| x == a[0]);

    let mut bounds = vec![BoundEntry::value("moore", moore(k, g)?)];
    let dfjr_entry = if constant {
        dfjr(k, g, a[0], query.bipartite)?
    } else {
        BoundEntry::inapplicable("dfjr", "signature is not constant")
    };
    bounds.push(dfjr_entry.clone());
    bounds.push(spectral_bound(k, g, sum, query.bipartite)?);
    let mut even = sgr_even(k, g, &a)?;
    if let (Some(v), Some(d)) = (even.value, dfjr_entry.value) {
        if v < d {
            even.warning = Some(format!("below the egr bound {d}; the printed base term and correction are weaker"));
        }
    }
    bounds.push(even);
    bounds.push(sgr_odd(k, g, &a)?);
    bounds.push(sgr_cycle(k, g, &a, CycleForm::Proof)?);
    Ok(BoundReport {
        query: query.clone(),
        bounds,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub lambda: u64,
    pub moore: Option<i128>,
    pub dfjr: Option<i128>,
    pub spectral: Option<i128>,
    pub cycle: Option<i128>,
}

/// One row per lambda of the egr bounds at fixed `(k, g)`.
pub fn sweep(k: u64, g: u32, lambdas: RangeInclusive<u64>, bipartite: bool) -> Result<Vec<SweepRow>> {
    check_kg(k, g)?;
    if lambdas.is_empty() {
        return Err(BoundError::EmptyRange);
    }
    let n0 = moore(k, g)?;
    lambdas
        .map(|lambda| {
            Ok(SweepRow {
                lambda,
                moore: Some(n0),
                dfjr: dfjr(k, g, lambda, bipartite)?.value,
                spectral: spectral_bound(k, g, k * lambda, bipartite)?.value,
                cycle: sgr_cycle(k, g, &vec![lambda; k as usize], CycleForm::Proof)?.value,
            })
        })
        .collect()
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let cell = |v: Option<i128>| v.map(|x| x.to_string()).unwrap_or_default();
    let mut out = String::from("lambda,moore,dfjr,spectral,cycle\n");
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{}",
            r.lambda,
            cell(r.moore),
            cell(r.dfjr),
            cell(r.spectral),
            cell(r.cycle)
        )
        .unwrap();
    }
    out
}
