//! Builders for the egr and agr families, each paired with the closed-form
//! claim it is expected to satisfy, and a verifier that checks one against
//! the other with the exact census.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{prime_power, Field, FieldError};
use crate::geometry::{
    baer_deletion_set, build_biaffine, build_pg2, build_pg_hyperplanes,
    canonical_flag_deletion_set, canonical_triangle_deletion_set, delete_and_graph,
    hermitian_deletion_set, BiaffineType, GeometryError, IncidenceStructure,
};
use crate::graph::{
    census_oracle, for_each_girth_cycle, girth, girth_profile_with, CensusOptions, Classification,
    Graph, GraphError, ProfileReport, DEFAULT_ORACLE_CAP,
};

/// Stable identifiers, in the order they are listed by the CLI.
pub const NAMES: [&str; 10] = [
    "baer",
    "flag",
    "triangle",
    "hermitian",
    "pg-incidence",
    "amalgam1",
    "cage65",
    "amalgam2",
    "match-even",
    "match-odd",
];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{construction} requires {requirement}")]
    Precondition {
        construction: &'static str,
        requirement: String,
    },
    #[error("no admissible generator pair in GF({q})")]
    NoAdmissiblePair { q: u32 },
    #[error("unknown construction {0:?}")]
    Unknown(String),
    #[error("{construction} needs --{parameter}")]
    MissingParameter {
        construction: &'static str,
        parameter: &'static str,
    },
}

type Result<T> = std::result::Result<T, ConstructionError>;

fn precondition<T>(construction: &'static str, requirement: impl Into<String>) -> Result<T> {
    Err(ConstructionError::Precondition {
        construction,
        requirement: requirement.into(),
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    /// Projective dimension.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<u32>,
}

impl Params {
    pub fn q(q: u64) -> Self {
        Params {
            q: Some(q),
            ..Params::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ExpectedClass {
    Egr { lambda: u64 },
    /// `(value, multiplicity)` pairs, ascending by value.
    Agr { signature: Vec<(u64, usize)> },
    /// Girth-regular or not, but certainly not egr or agr.
    NotAgr,
    /// Only order, degree and girth are claimed.
    StructureOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionClaim {
    pub construction: String,
    pub params: Params,
    pub order: usize,
    pub degree: usize,
    pub girth: u32,
    pub expected: ExpectedClass,
    pub source: String,
}

#[derive(Debug, Clone)]
pub struct Construction {
    pub graph: Graph,
    pub claim: ConstructionClaim,
}

/// Two-valued signature claim; collapses to egr when the values agree.
fn signature_claim(a: u64, ka: usize, b: u64, kb: usize) -> ExpectedClass {
    if a == b {
        ExpectedClass::Egr { lambda: a }
    } else {
        let mut signature = vec![(a, ka), (b, kb)];
        signature.sort_unstable();
        ExpectedClass::Agr { signature }
    }
}

fn field(q: u64) -> Result<Arc<Field>> {
    Ok(Arc::new(Field::of_order(q)?))
}

fn require_q(name: &'static str, params: &Params) -> Result<u64> {
    params.q.ok_or(ConstructionError::MissingParameter {
        construction: name,
        parameter: "q",
    })
}

pub fn build(name: &str, params: &Params) -> Result<Construction> {
    match name {
        "baer" => baer(require_q("baer", params)?),
        "flag" => flag(require_q("flag", params)?),
        "triangle" => triangle(require_q("triangle", params)?),
        "hermitian" => hermitian(require_q("hermitian", params)?),
        "pg-incidence" => {
            let n = params.n.ok_or(ConstructionError::MissingParameter {
                construction: "pg-incidence",
                parameter: "n",
            })?;
            pg_incidence(n, require_q("pg-incidence", params)?)
        }
        "amalgam1" => amalgam_type1(require_q("amalgam1", params)?, params.epsilon),
        "cage65" => Ok(cage65()),
        "amalgam2" => amalgam_type2(require_q("amalgam2", params)?, params.epsilon, params.eta),
        "match-even" => matching_amalgam_even(require_q("match-even", params)?, params.epsilon),
        "match-odd" => {
            matching_amalgam_odd(require_q("match-odd", params)?, params.epsilon, params.eta)
        }
        other => Err(ConstructionError::Unknown(other.to_string())),
    }
}

fn deletion_claim(name: &str, q: u64, order: u64, degree: u64, lambda: u64, source: &str) -> ConstructionClaim {
    ConstructionClaim {
        construction: name.to_string(),
        params: Params::q(q),
        order: order as usize,
        degree: degree as usize,
        girth: 6,
        expected: ExpectedClass::Egr { lambda },
        source: source.to_string(),
    }
}

/// PG(2, q^2) minus a Baer subplane.
pub fn baer(q: u64) -> Result<Construction> {
    if prime_power(q).is_none() {
        return precondition("baer", "a prime power q");
    }
    let plane = build_pg2(field(q * q)?);
    let graph = delete_and_graph(&plane, &baer_deletion_set(&plane)?)?;
    let claim = deletion_claim(
        "baer",
        q,
        2 * (q.pow(4) - q),
        q * q,
        (q * q - 1) * (q.pow(4) - 3 * q * q + q + 2),
        "baer-subplane deletion: egr(2(q^4-q), q^2, 6, (q^2-1)(q^4-3q^2+q+2))",
    );
    Ok(Construction { graph, claim })
}

/// PG(2, q) minus the lines through two points and the points of two lines.
pub fn flag(q: u64) -> Result<Construction> {
    if q <= 3 {
        return precondition("flag", "q > 3");
    }
    let plane = build_pg2(field(q)?);
    let graph = delete_and_graph(&plane, &canonical_flag_deletion_set(&plane)?)?;
    let claim = deletion_claim(
        "flag",
        q,
        2 * (q * q - q),
        q - 1,
        (q - 2) * (q - 3) * (q - 3),
        "2-good flag deletion: egr(2(q^2-q), q-1, 6, (q-2)(q-3)^2)",
    );
    Ok(Construction { graph, claim })
}

/// PG(2, q) minus a triangle's vertex pencils and side points.
pub fn triangle(q: u64) -> Result<Construction> {
    if q <= 4 {
        return precondition("triangle", "q > 4");
    }
    let plane = build_pg2(field(q)?);
    let graph = delete_and_graph(&plane, &canonical_triangle_deletion_set(&plane)?)?;
    let claim = deletion_claim(
        "triangle",
        q,
        2 * (q - 1) * (q - 1),
        q - 2,
        (q - 3) * (q * q + 21 - 9 * q),
        "3-good triangle deletion: egr(2(q-1)^2, q-2, 6, (q-3)(q^2-9q+21))",
    );
    Ok(Construction { graph, claim })
}

/// PG(2, q^2) minus the Hermitian curve and its tangents.
pub fn hermitian(q: u64) -> Result<Construction> {
    if q < 3 {
        return precondition("hermitian", "q >= 3");
    }
    let plane = build_pg2(field(q * q)?);
    let graph = delete_and_graph(&plane, &hermitian_deletion_set(&plane)?)?;
    let claim = deletion_claim(
        "hermitian",
        q,
        2 * (q.pow(4) - q.pow(3) + q * q),
        q * q - q,
        (q * q - q - 1) * (q.pow(4) + 5 * q + 3 - 3 * q.pow(3) - q * q),
        "hermitian-unital deletion: egr(2(q^4-q^3+q^2), q^2-q, 6, (q^2-q-1)(q^4-3q^3-q^2+5q+3))",
    );
    Ok(Construction { graph, claim })
}

/// Point-hyperplane incidence graph of PG(n, q).
pub fn pg_incidence(n: u32, q: u64) -> Result<Construction> {
    if n < 3 {
        return precondition("pg-incidence", "n >= 3");
    }
    let s = build_pg_hyperplanes(field(q)?, n)?;
    let graph = s.incidence_graph();
    let gauss = |m: u32| (q.pow(m) - 1) / (q - 1);
    let lambda = (q.pow(2 * n - 1) + q * q - q.pow(n + 1) - q.pow(n)) / ((q - 1) * (q - 1));
    let claim = ConstructionClaim {
        construction: "pg-incidence".into(),
        params: Params {
            q: Some(q),
            n: Some(n),
            ..Params::default()
        },
        order: 2 * gauss(n + 1) as usize,
        degree: gauss(n) as usize,
        girth: 4,
        expected: ExpectedClass::Egr { lambda },
        source: "point-hyperplane incidence of PG(n,q): egr(2[n+1]_q, [n]_q, 4, (q^(2n-1)-q^(n+1)-q^n+q^2)/(q-1)^2)"
            .into(),
    };
    Ok(Construction { graph, claim })
}

/// Incidence graph of a biaffine plane plus extra point-point and
/// line-line edges, given as structure indices.
fn amalgamate(
    s: &IncidenceStructure,
    point_pairs: impl IntoIterator<Item = (usize, usize)>,
    line_pairs: impl IntoIterator<Item = (usize, usize)>,
) -> Graph {
    let base = s.incidence_graph();
    let np = s.num_points() as u32;
    let mut extra: Vec<(u32, u32)> = point_pairs
        .into_iter()
        .map(|(a, b)| (a as u32, b as u32))
        .chain(
            line_pairs
                .into_iter()
                .map(|(a, b)| (np + a as u32, np + b as u32)),
        )
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    extra.sort_unstable();
    extra.dedup();
    let edges = base.edges().iter().copied().chain(extra);
    Graph::from_edges(base.order(), edges, base.tags().to_vec()).expect("amalgam is simple")
}

fn amalgam1_default_epsilon(f: &Field) -> u32 {
    let p = f.characteristic();
    if p == 5 {
        return 2;
    }
    let forbidden: Vec<u32> = if p > 5 && f.order() >= 11 {
        let half = f.inv(2).unwrap();
        vec![0, 1, f.neg(1), 2, f.neg(2), half, f.neg(half)]
    } else {
        vec![0, 1, f.neg(1)]
    };
    (0..f.order()).find(|c| !forbidden.contains(c)).expect("q > 3 leaves room")
}

/// Type-1 biaffine plane with `(x,y) ~ (x,y+1)` on points and
/// `[m,b] ~ [m,b+eps]` on lines.
pub fn amalgam_type1(q: u64, epsilon: Option<u32>) -> Result<Construction> {
    let f = field(q)?;
    let p = f.characteristic();
    if p <= 3 {
        return precondition("amalgam1", "characteristic p > 3");
    }
    let eps = epsilon.unwrap_or_else(|| amalgam1_default_epsilon(&f));
    if eps >= f.order() || [0, 1, f.neg(1)].contains(&eps) {
        return precondition("amalgam1", "epsilon outside {0, 1, -1}");
    }
    let b = build_biaffine(f.clone(), BiaffineType::One);
    let qq = f.order() as usize;
    let shift = |c: usize, by: u32| (c / qq) * qq + f.add((c % qq) as u32, by) as usize;
    let graph = amalgamate(
        &b,
        (0..qq * qq).map(|i| (i, shift(i, 1))),
        (0..qq * qq).map(|i| (i, shift(i, eps))),
    );

    let qv = q;
    let half = f.inv(2).unwrap();
    let generic = ![2, f.neg(2), half, f.neg(half)].contains(&eps);
    let (expected, source) = if p > 5 && q >= 11 && generic {
        (
            signature_claim(8 * (qv - 1), qq, qv * qv - qv, 2),
            "biaffine cycle amalgam, p > 5: agr(2q^2, q+2, 5, [8(q-1)_(q), (q^2-q)_(2)])",
        )
    } else if p == 5 && eps == 2 {
        (
            signature_claim(8 * qv - 4, qq, (qv + 1) * (qv + 1), 2),
            "biaffine cycle amalgam, p = 5, eps = 2: agr(2q^2, q+2, 5, [8q-4_(q), (q+1)^2_(2)])",
        )
    } else if q == 7 && eps == 2 {
        (
            ExpectedClass::NotAgr,
            "biaffine cycle amalgam at q = 7: (9,5)-graph of order 98, not agr",
        )
    } else {
        (
            ExpectedClass::StructureOnly,
            "biaffine cycle amalgam: (q+2,5)-graph of order 2q^2",
        )
    };
    let claim = ConstructionClaim {
        construction: "amalgam1".into(),
        params: Params {
            q: Some(q),
            epsilon: Some(eps),
            ..Params::default()
        },
        order: 2 * qq * qq,
        degree: qq + 2,
        girth: 5,
        expected,
        source: source.into(),
    };
    Ok(Construction { graph, claim })
}

/// The (6,5)-cage: the q = 5 cycle amalgam without the points on `X = 0`
/// and the lines of slope 0.
pub fn cage65() -> Construction {
    let hs = amalgam_type1(5, Some(2)).expect("q = 5 is admissible");
    // points [x, y] sit at x*5 + y, lines [m, b] at 25 + m*5 + b
    let keep: Vec<bool> = (0..50).map(|v| !(v < 5 || (25..30).contains(&v))).collect();
    let graph = hs.graph.induced_subgraph(&keep);
    let claim = ConstructionClaim {
        construction: "cage65".into(),
        params: Params::default(),
        order: 40,
        degree: 6,
        girth: 5,
        expected: ExpectedClass::Egr { lambda: 22 },
        source: "hoffman-singleton minus a vertical point class and the horizontal lines: egr(40, 6, 5, 22)"
            .into(),
    };
    Construction { graph, claim }
}

fn check_generator(f: &Field, g: u32, name: &'static str, what: &str) -> Result<()> {
    if g >= f.order() || f.multiplicative_order(g) != Some(f.order() - 1) {
        return precondition(name, format!("{what} to generate the multiplicative group"));
    }
    Ok(())
}

fn mutually_inverse(f: &Field, a: u32, b: u32) -> bool {
    a == b || f.mul(a, b) == 1
}

fn strict_pair(f: &Field, e: u32, h: u32) -> bool {
    let sq = |x: u32| f.mul(x, x);
    let inv = |x: u32| f.inv(x).unwrap();
    !mutually_inverse(f, e, h)
        && e != sq(h)
        && e != inv(sq(h))
        && h != sq(e)
        && h != inv(sq(e))
}

/// Picks `(eps, eta)`: given values are checked, missing ones take the first
/// admissible generator in code order.
fn generator_pair(
    f: &Field,
    name: &'static str,
    epsilon: Option<u32>,
    eta: Option<u32>,
    admissible: impl Fn(u32, u32) -> bool,
) -> Result<(u32, u32)> {
    if let Some(e) = epsilon {
        check_generator(f, e, name, "epsilon")?;
    }
    if let Some(h) = eta {
        check_generator(f, h, name, "eta")?;
    }
    let gens = f.generators();
    let candidates = |fixed: Option<u32>| fixed.map_or_else(|| gens.clone(), |x| vec![x]);
    for e in candidates(epsilon) {
        for h in candidates(eta) {
            if admissible(e, h) {
                return Ok((e, h));
            }
        }
    }
    if epsilon.is_some() && eta.is_some() {
        return precondition(name, "epsilon and eta not inverse to each other");
    }
    Err(ConstructionError::NoAdmissiblePair { q: f.order() })
}

/// Type-2 biaffine plane with the points on each line through the origin
/// joined in a cycle `P ~ eps P`, and each parallel class of lines joined
/// in a cycle `aX + bY + eta^i = 0 ~ aX + bY + eta^(i+1) = 0`.
pub fn amalgam_type2(q: u64, epsilon: Option<u32>, eta: Option<u32>) -> Result<Construction> {
    let f = field(q)?;
    let (e, h) = if q >= 11 && (epsilon.is_none() || eta.is_none()) {
        // prefer a pair meeting the stronger constraints
        generator_pair(&f, "amalgam2", epsilon, eta, |e, h| strict_pair(&f, e, h))
            .or_else(|_| generator_pair(&f, "amalgam2", epsilon, eta, |e, h| !mutually_inverse(&f, e, h)))?
    } else {
        generator_pair(&f, "amalgam2", epsilon, eta, |e, h| !mutually_inverse(&f, e, h))?
    };
    let b = build_biaffine(f.clone(), BiaffineType::Two);
    let h_inv = f.inv(h).unwrap();
    let scaled = |label: &[u32], by: u32| -> Vec<u32> { label.iter().map(|&c| f.mul(c, by)).collect() };
    let n = b.num_points();
    let point_pairs: Vec<(usize, usize)> = (0..n)
        .map(|i| (i, b.point_index(&scaled(b.point(i), e)).unwrap()))
        .collect();
    let line_pairs: Vec<(usize, usize)> = (0..n)
        .map(|i| (i, b.line_index(&scaled(b.line(i), h_inv)).unwrap()))
        .collect();
    let graph = amalgamate(&b, point_pairs, line_pairs);

    let (expected, source) = if q >= 11 && strict_pair(&f, e, h) {
        (
            signature_claim(8 * (q - 1), q as usize, q * q - q, 2),
            "type-2 biaffine cycle amalgam: agr(2(q^2-1), q+2, 5, [8(q-1)_(q), (q^2-q)_(2)])",
        )
    } else if q == 8 {
        (
            ExpectedClass::NotAgr,
            "type-2 biaffine cycle amalgam at q = 8: (10,5)-graph of order 126, not agr",
        )
    } else {
        (
            ExpectedClass::StructureOnly,
            "type-2 biaffine cycle amalgam: (q+2,5)-graph of order 2(q^2-1)",
        )
    };
    let claim = ConstructionClaim {
        construction: "amalgam2".into(),
        params: Params {
            q: Some(q),
            epsilon: Some(e),
            eta: Some(h),
            ..Params::default()
        },
        order: 2 * n,
        degree: q as usize + 2,
        girth: 5,
        expected,
        source: source.into(),
    };
    Ok(Construction { graph, claim })
}

/// Type-1 biaffine plane, q even, with the perfect matchings
/// `(x,y) ~ (x,y+1)` and `[m,b] ~ [m,b+eps]`.
pub fn matching_amalgam_even(q: u64, epsilon: Option<u32>) -> Result<Construction> {
    let f = field(q)?;
    if f.characteristic() != 2 || q == 2 {
        return precondition("match-even", "an even q > 2");
    }
    let eps = epsilon.unwrap_or(2);
    if eps >= f.order() || eps <= 1 {
        return precondition("match-even", "epsilon outside {0, 1}");
    }
    let b = build_biaffine(f.clone(), BiaffineType::One);
    let qq = q as usize;
    let shift = |c: usize, by: u32| (c / qq) * qq + f.add((c % qq) as u32, by) as usize;
    let graph = amalgamate(
        &b,
        (0..qq * qq).map(|i| (i, shift(i, 1))),
        (0..qq * qq).map(|i| (i, shift(i, eps))),
    );
    let claim = ConstructionClaim {
        construction: "match-even".into(),
        params: Params {
            q: Some(q),
            epsilon: Some(eps),
            ..Params::default()
        },
        order: 2 * qq * qq,
        degree: qq + 1,
        girth: 5,
        expected: signature_claim(4 * (q - 1), qq, q * q - q, 1),
        source: "type-1 biaffine matching amalgam, q even: agr(2q^2, q+1, 5, [4(q-1)_(q), (q^2-q)_(1)])".into(),
    };
    Ok(Construction { graph, claim })
}

/// Type-2 biaffine plane, q odd, with `P^j ~ P^(j+1)` for even `j` on each
/// line through the origin (`P^j = eps^j P0`, `P0` normalized), and the same
/// on each parallel class of lines with `eta`.
pub fn matching_amalgam_odd(q: u64, epsilon: Option<u32>, eta: Option<u32>) -> Result<Construction> {
    let f = field(q)?;
    if q.is_multiple_of(2) || q <= 5 {
        return precondition("match-odd", "an odd q > 5");
    }
    let (e, h) = generator_pair(&f, "match-odd", epsilon, eta, |e, h| !mutually_inverse(&f, e, h))?;
    let b = build_biaffine(f.clone(), BiaffineType::Two);
    let m = f.order() - 1;

    // exponent tables: power -> j in 1..=q-1
    let exponents = |g: u32| {
        let mut table = vec![0u32; f.order() as usize];
        let mut x = 1;
        for j in 1..=m {
            x = f.mul(x, g);
            table[x as usize] = j;
        }
        table
    };
    let (log_e, log_h) = (exponents(e), exponents(h));
    let partner_exp = |j: u32| {
        let k = if j.is_multiple_of(2) { j + 1 } else { j - 1 };
        (k + m - 1) % m + 1
    };
    let lead = |label: &[u32]| *label.iter().find(|&&c| c != 0).unwrap();
    let scaled = |label: &[u32], by: u32| -> Vec<u32> { label.iter().map(|&c| f.mul(c, by)).collect() };

    let n = b.num_points();
    let point_pairs: Vec<(usize, usize)> = (0..n)
        .map(|i| {
            let label = b.point(i);
            let s = lead(label);
            let base = scaled(label, f.inv(s).unwrap());
            let j = partner_exp(log_e[s as usize]);
            (i, b.point_index(&scaled(&base, f.pow(e, u64::from(j)))).unwrap())
        })
        .collect();
    // a line [a,b] is e^i of its class when its leading coordinate is eta^-i
    let line_pairs: Vec<(usize, usize)> = (0..n)
        .map(|i| {
            let label = b.line(i);
            let s = lead(label);
            let base = scaled(label, f.inv(s).unwrap());
            let i_exp = (m - log_h[s as usize]) % m;
            let j = partner_exp(if i_exp == 0 { m } else { i_exp });
            let factor = f.inv(f.pow(h, u64::from(j))).unwrap();
            (i, b.line_index(&scaled(&base, factor)).unwrap())
        })
        .collect();
    let graph = amalgamate(&b, point_pairs, line_pairs);
    let claim = ConstructionClaim {
        construction: "match-odd".into(),
        params: Params {
            q: Some(q),
            epsilon: Some(e),
            eta: Some(h),
            ..Params::default()
        },
        order: 2 * n,
        degree: q as usize + 1,
        girth: 5,
        expected: signature_claim(4 * (q - 1), q as usize, q * q - q, 1),
        source: "type-2 biaffine matching amalgam, q odd: agr(2(q^2-1), q+1, 5, [4(q-1)_(q), (q^2-q)_(1)])"
            .into(),
    };
    Ok(Construction { graph, claim })
}

/// Longest run of consecutive same-tag vertices on any girth cycle of
/// length `len`, read cyclically.
pub fn longest_same_tag_run(graph: &Graph, len: u32) -> usize {
    let mut best = 0;
    for_each_girth_cycle(graph, len, |cycle| {
        let k = cycle.len();
        for start in 0..k {
            let tag = graph.tag(cycle[start]);
            let run = (0..k).take_while(|&i| graph.tag(cycle[(start + i) % k]) == tag).count();
            best = best.max(run);
        }
    });
    best
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub census: CensusOptions,
    /// The oracle runs on graphs with at most this many vertices.
    pub oracle_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            census: CensusOptions::default(),
            oracle_cap: DEFAULT_ORACLE_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub field: String,
    pub expected: String,
    pub measured: String,
    pub ok: bool,
}

impl Check {
    fn new(field: &str, expected: impl ToString, measured: impl ToString) -> Check {
        let (expected, measured) = (expected.to_string(), measured.to_string());
        Check {
            field: field.to_string(),
            ok: expected == measured,
            expected,
            measured,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: ConstructionClaim,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<ProfileReport>,
    pub checks: Vec<Check>,
    /// Whether the independent cycle enumeration agreed; absent when skipped.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<bool>,
    pub pass: bool,
}

pub fn verify(c: &Construction, opts: VerifyOptions) -> VerificationReport {
    verify_graph(&c.graph, &c.claim, opts)
}

fn multiplicities(signature: &[u64]) -> Vec<(u64, usize)> {
    let mut m = BTreeMap::new();
    for &x in signature {
        *m.entry(x).or_insert(0) += 1;
    }
    m.into_iter().collect()
}

fn describe(pairs: &[(u64, usize)]) -> String {
    let body: Vec<String> = pairs.iter().map(|(v, k)| format!("{v}x{k}")).collect();
    format!("[{}]", body.join(", "))
}

/// Compares a graph against a claim. Mismatches are failures, never errors.
pub fn verify_graph(graph: &Graph, claim: &ConstructionClaim, opts: VerifyOptions) -> VerificationReport {
    let mut checks = vec![Check::new("order", claim.order, graph.order())];
    let degree = match graph.regular_degree() {
        Some(k) => k.to_string(),
        None => {
            let (lo, hi) = graph.degree_range();
            format!("irregular {lo}..={hi}")
        }
    };
    checks.push(Check::new("degree", claim.degree, degree));
    checks.push(Check::new("connected", true, graph.is_connected()));
    let measured_girth = girth(graph).map_or_else(|_| "acyclic".to_string(), |g| g.to_string());
    checks.push(Check::new("girth", claim.girth, measured_girth));

    let profile = girth_profile_with(graph, opts.census).ok();
    let class = profile.as_ref().map(|p| &p.classification);
    let measured_class = class.map_or("unavailable", Classification::label);
    match &claim.expected {
        ExpectedClass::Egr { lambda } => {
            checks.push(Check::new("classification", "egr", measured_class));
            let measured = match class {
                Some(Classification::Egr { lambda }) => lambda.to_string(),
                _ => "-".into(),
            };
            checks.push(Check::new("lambda", lambda, measured));
        }
        ExpectedClass::Agr { signature } => {
            checks.push(Check::new("classification", "agr", measured_class));
            let measured = profile
                .as_ref()
                .and_then(|p| p.common_signature())
                .map_or("-".into(), |s| describe(&multiplicities(s)));
            checks.push(Check::new("signature", describe(signature), measured));
        }
        ExpectedClass::NotAgr => {
            let ok = !matches!(
                class,
                Some(Classification::Egr { .. } | Classification::Agr { .. })
            );
            checks.push(Check {
                field: "classification".into(),
                expected: "neither egr nor agr".into(),
                measured: measured_class.into(),
                ok,
            });
        }
        ExpectedClass::StructureOnly => {}
    }

    let oracle = profile.as_ref().and_then(|p| {
        census_oracle(graph, p.girth, opts.oracle_cap, opts.census)
            .ok()
            .map(|o| o.edge_counts == p.edge_counts && o.total_cycles == p.total_cycles)
    });
    let pass = checks.iter().all(|c| c.ok) && oracle != Some(false);
    VerificationReport {
        claim: claim.clone(),
        profile: profile.map(|p| p.report(graph.order())),
        checks,
        oracle,
        pass,
    }
}
