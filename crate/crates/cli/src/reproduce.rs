//! The reproduction matrix behind `egr reproduce`.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;
use std::time::Instant;

use egr_core::bounds::{self, BoundQuery, CycleForm};
use egr_core::constructions::{self, Params, VerifyOptions};
use egr_core::graph::{Graph, VertexTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    Deletions,
    Amalgams,
    Bounds,
}

impl FromStr for Group {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "deletions" | "sec2" => Ok(Group::Deletions),
            "amalgams" | "sec3" => Ok(Group::Amalgams),
            "bounds" => Ok(Group::Bounds),
            other => anyhow::bail!("unknown group {other:?}; expected deletions, amalgams or bounds"),
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Group::Deletions => "deletions",
            Group::Amalgams => "amalgams",
            Group::Bounds => "bounds",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone)]
pub struct Row {
    pub id: String,
    pub group: Group,
    pub status: Status,
    pub detail: String,
    pub seconds: f64,
}

struct Case {
    group: Group,
    name: &'static str,
    params: Params,
    slow: bool,
}

fn case(group: Group, name: &'static str, q: Option<u64>, n: Option<u32>, epsilon: Option<u32>, slow: bool) -> Case {
    Case {
        group,
        name,
        params: Params {
            q,
            n,
            epsilon,
            eta: None,
        },
        slow,
    }
}

fn cases() -> Vec<Case> {
    use Group::*;
    vec![
        case(Deletions, "baer", Some(2), None, None, false),
        case(Deletions, "baer", Some(3), None, None, false),
        case(Deletions, "baer", Some(4), None, None, true),
        case(Deletions, "flag", Some(4), None, None, false),
        case(Deletions, "flag", Some(5), None, None, false),
        case(Deletions, "triangle", Some(5), None, None, false),
        case(Deletions, "triangle", Some(7), None, None, false),
        case(Deletions, "hermitian", Some(3), None, None, false),
        case(Deletions, "hermitian", Some(4), None, None, true),
        case(Deletions, "pg-incidence", Some(2), Some(3), None, false),
        case(Deletions, "pg-incidence", Some(3), Some(3), None, false),
        case(Deletions, "pg-incidence", Some(2), Some(4), None, false),
        case(Amalgams, "amalgam1", Some(5), None, Some(2), false),
        case(Amalgams, "cage65", None, None, None, false),
        case(Amalgams, "amalgam1", Some(11), None, None, false),
        case(Amalgams, "amalgam1", Some(7), None, Some(2), false),
        case(Amalgams, "amalgam1", Some(25), None, Some(2), true),
        case(Amalgams, "amalgam2", Some(11), None, None, false),
        case(Amalgams, "amalgam2", Some(8), None, None, false),
        case(Amalgams, "match-even", Some(4), None, None, false),
        case(Amalgams, "match-even", Some(8), None, None, false),
        case(Amalgams, "match-odd", Some(9), None, None, false),
    ]
}

fn label(c: &Case) -> String {
    let mut s = c.name.to_string();
    if let Some(n) = c.params.n {
        s += &format!(" n={n}");
    }
    if let Some(q) = c.params.q {
        s += &format!(" q={q}");
    }
    if let Some(e) = c.params.epsilon {
        s += &format!(" eps={e}");
    }
    s
}

fn is_incidence_bipartite(g: &Graph) -> bool {
    g.tags().iter().all(|&t| t != VertexTag::Plain) && g.edges().iter().all(|&(a, b)| g.tag(a) != g.tag(b))
}

/// Every applicable bound evaluated at the measured signature is at most
/// the order.
fn bounds_sound(graph: &Graph, signature: &[u64], girth: u32) -> Result<(), String> {
    let k = signature.len() as u64;
    let query = BoundQuery::signature(k, girth, signature.to_vec(), is_incidence_bipartite(graph));
    let report = bounds::evaluate(&query).map_err(|e| e.to_string())?;
    for b in &report.bounds {
        if let Some(v) = b.value {
            if v > graph.order() as i128 {
                return Err(format!("{} bound {v} exceeds order {}", b.name, graph.order()));
            }
        }
    }
    Ok(())
}

fn run_case(c: &Case, max_n: Option<usize>, slow: bool, opts: VerifyOptions) -> Row {
    let start = Instant::now();
    let mut row = Row {
        id: label(c),
        group: c.group,
        status: Status::Skipped,
        detail: String::new(),
        seconds: 0.0,
    };
    if c.slow && !slow {
        row.detail = "slow; pass --slow".into();
        return row;
    }
    let built = match constructions::build(c.name, &c.params) {
        Ok(b) => b,
        Err(e) => {
            row.status = Status::Fail;
            row.detail = e.to_string();
            return row;
        }
    };
    if max_n.is_some_and(|m| built.graph.order() > m) {
        row.detail = format!("n={} above --max-n", built.graph.order());
        return row;
    }
    let report = constructions::verify(&built, opts);
    let failed: Vec<String> = report
        .checks
        .iter()
        .filter(|ch| !ch.ok)
        .map(|ch| format!("{}: expected {}, got {}", ch.field, ch.expected, ch.measured))
        .collect();
    let mut ok = report.pass;
    let mut detail = match &report.profile {
        Some(p) => {
            let class = match (&p.lambda, &p.signature_multiplicities) {
                (Some(l), _) => format!("egr lambda={l}"),
                (None, Some(m)) if p.classification == "agr" => format!("agr {m:?}"),
                _ => p.classification.clone(),
            };
            format!("n={} k={} g={} {class}", p.n, p.k, p.girth)
        }
        None => "no profile".into(),
    };
    if let Some(sig) = report.profile.as_ref().and_then(|p| p.signature.as_ref()) {
        if let Err(e) = bounds_sound(&built.graph, sig, report.profile.as_ref().unwrap().girth) {
            ok = false;
            detail += &format!("; {e}");
        }
    }
    match report.oracle {
        Some(true) => detail += "; oracle agrees",
        Some(false) => detail += "; ORACLE DISAGREES",
        None => detail += "; oracle skipped",
    }
    if !failed.is_empty() {
        detail += &format!("; {}", failed.join("; "));
    }
    row.status = if ok { Status::Pass } else { Status::Fail };
    row.detail = detail;
    row.seconds = start.elapsed().as_secs_f64();
    row
}

fn bound_row(id: &str, check: impl FnOnce() -> Result<String, String>) -> Row {
    let start = Instant::now();
    let (status, detail) = match check() {
        Ok(d) => (Status::Pass, d),
        Err(d) => (Status::Fail, d),
    };
    Row {
        id: id.into(),
        group: Group::Bounds,
        status,
        detail,
        seconds: start.elapsed().as_secs_f64(),
    }
}

fn expect(name: &str, got: Option<i128>, want: i128) -> Result<String, String> {
    match got {
        Some(v) if v == want => Ok(format!("{name} = {v}")),
        other => Err(format!("{name}: expected {want}, got {other:?}")),
    }
}

fn bound_rows() -> Vec<Row> {
    let mut rows = vec![
        bound_row("dfjr(6,5,22)", || expect("dfjr", bounds::dfjr(6, 5, 22, false).ok().and_then(|b| b.value), 40)),
        bound_row("dfjr bipartite (4,6,24)", || {
            expect("dfjr", bounds::dfjr(4, 6, 24, true).ok().and_then(|b| b.value), 28)
        }),
        bound_row("dfjr bipartite (9,6,472)", || {
            expect("dfjr", bounds::dfjr(9, 6, 472, true).ok().and_then(|b| b.value), 156)
        }),
        bound_row("cycle (3,6,[8,8,8])", || {
            expect(
                "cycle",
                bounds::sgr_cycle(3, 6, &[8, 8, 8], CycleForm::Proof).ok().and_then(|b| b.value),
                14,
            )
        }),
        bound_row("cycle egr (3,6,2)", || {
            expect("cycle", bounds::cycle_bound_egr(3, 6, 2).ok().flatten(), 19)
        }),
    ];
    for q in [2u64, 3] {
        rows.push(bound_row(&format!("spectral PG(3,{q})"), || {
            let claimed = 2 * i128::from(q.pow(3) + q * q + q + 1);
            let lambda = q.pow(3) + q * q;
            let degree = q * q + q + 1;
            let literal = bounds::spectral_bound(q + 1, 4, (q + 1) * lambda, true)
                .ok()
                .and_then(|b| b.value);
            let at_degree = bounds::spectral_bound(degree, 4, degree * lambda, true)
                .ok()
                .and_then(|b| b.value);
            let detail = format!("claimed {claimed}; k=q+1 gives {literal:?}; k={degree} gives {at_degree:?}");
            match at_degree {
                Some(v) if v <= claimed => Ok(detail),
                _ => Err(detail),
            }
        }));
    }
    rows.push(bound_row("sweep k=10 g=6", sweep_shape));
    rows
}

/// dfjr leads near the top of the lambda range; the cycle bound overtakes
/// it for lambda <= (k-1)^2.
fn sweep_shape() -> Result<String, String> {
    let (k, g) = (10u64, 6u32);
    let top = (k - 1).pow(3);
    let plain = bounds::sweep(k, g, 1..=top, false).map_err(|e| e.to_string())?;
    let bip = bounds::sweep(k, g, 1..=top, true).map_err(|e| e.to_string())?;
    let near_top = plain.iter().chain(&bip).filter(|r| 10 * r.lambda >= 9 * top);
    for r in near_top {
        let others = [r.moore, r.spectral, r.cycle];
        if others.iter().flatten().any(|&v| Some(v) > r.dfjr) {
            return Err(format!("dfjr not maximal at lambda={}", r.lambda));
        }
    }
    let small = (k - 1).pow(2);
    for r in plain.iter().take_while(|r| r.lambda <= small) {
        if r.cycle <= r.dfjr {
            return Err(format!("cycle does not exceed dfjr at lambda={}", r.lambda));
        }
    }
    for r in bip.iter().take_while(|r| r.lambda <= small) {
        if r.cycle <= r.dfjr || r.spectral <= r.dfjr {
            return Err(format!("bipartite bounds do not exceed dfjr at lambda={}", r.lambda));
        }
    }
    let plain_spectral_above = plain
        .iter()
        .take_while(|r| r.lambda <= small)
        .filter(|r| r.spectral > r.dfjr)
        .count();
    Ok(format!(
        "dfjr leads within 10% of {top}; cycle > dfjr up to {small}; bipartite spectral > dfjr up to {small}; \
         non-bipartite spectral > dfjr on {plain_spectral_above} of {small} rows"
    ))
}

pub fn run(group: Option<Group>, max_n: Option<usize>, slow: bool, opts: VerifyOptions) -> Vec<Row> {
    let wanted = |g: Group| group.is_none_or(|x| x == g);
    let mut rows: Vec<Row> = cases()
        .iter()
        .filter(|c| wanted(c.group))
        .map(|c| run_case(c, max_n, slow, opts))
        .collect();
    if wanted(Group::Bounds) {
        rows.extend(bound_rows());
    }
    rows
}

pub fn print_table(out: &mut impl Write, rows: &[Row]) -> io::Result<()> {
    for r in rows {
        let status = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "skipped",
        };
        writeln!(out, "{status:<8}{:<10}{:<26}{:>8.2}s  {}", r.group, r.id, r.seconds, r.detail)?;
    }
    let count = |s: Status| rows.iter().filter(|r| r.status == s).count();
    writeln!(
        out,
        "{} passed, {} failed, {} skipped",
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Skipped)
    )
}
