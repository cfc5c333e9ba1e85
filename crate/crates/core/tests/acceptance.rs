//! End-to-end acceptance gate. Each criterion prints one PASS/FAIL line
//! straight to stderr, so the table shows up even when output is captured.

use std::collections::BTreeSet;
use std::io::Write;
use std::time::{Duration, Instant};

use egr_core::bounds::{self, BoundQuery, CycleForm};
use egr_core::constructions::{self, Construction, ConstructionError, VerifyOptions};
use egr_core::graph::{census_oracle, girth_profile, CensusOptions, Classification, GirthProfile, DEFAULT_ORACLE_CAP};

type Outcome = Result<String, String>;

struct Built {
    label: String,
    construction: Construction,
    profile: GirthProfile,
    bipartite: bool,
}

fn build(label: &str, c: Result<Construction, ConstructionError>, bipartite: bool) -> Result<Built, String> {
    let construction = c.map_err(|e| format!("{label}: {e}"))?;
    let profile = girth_profile(&construction.graph).map_err(|e| format!("{label}: {e}"))?;
    let report = constructions::verify(&construction, VerifyOptions::default());
    if !report.pass {
        let bad: Vec<_> = report.checks.iter().filter(|c| !c.ok).collect();
        return Err(format!("{label}: verify failed {bad:?}"));
    }
    Ok(Built {
        label: label.to_string(),
        construction,
        profile,
        bipartite,
    })
}

fn egr(b: &Built, n: usize, k: usize, g: u32, lambda: u64) -> Result<(), String> {
    let got = (b.construction.graph.order(), b.profile.degree, b.profile.girth, &b.profile.classification);
    let want = Classification::Egr { lambda };
    if got != (n, k, g, &want) {
        return Err(format!("{}: expected egr({n},{k},{g},{lambda}), got {got:?}", b.label));
    }
    Ok(())
}

fn agr(b: &Built, n: usize, k: usize, g: u32, (a, k1): (u64, usize), (c, k2): (u64, usize)) -> Result<(), String> {
    let got = (b.construction.graph.order(), b.profile.degree, b.profile.girth, &b.profile.classification);
    let want = Classification::Agr { a, k1, b: c, k2 };
    if got != (n, k, g, &want) {
        return Err(format!("{}: expected agr({n},{k},{g},[{a}x{k1},{c}x{k2}]), got {got:?}", b.label));
    }
    Ok(())
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

struct Gate {
    failures: usize,
}

impl Gate {
    fn run(&mut self, id: u32, name: &str, limit: Duration, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(d) if elapsed <= limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; took {elapsed:.2?}, limit {limit:?}")),
            Err(d) => ("FAIL", d),
        };
        if status == "FAIL" {
            self.failures += 1;
        }
        let line = format!(
            "criterion {id:>2} {status} {name:<28} {:>9.3}s / {:>4}s  {detail}\n",
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
        std::io::stderr().write_all(line.as_bytes()).unwrap();
    }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

/// Closed walks from the root of the infinite k-regular tree, one walk at
/// a time.
fn enumerate_tree_walks(len: u32, k: u64) -> u64 {
    fn go(depth: u32, left: u32, k: u64) -> u64 {
        if depth > left {
            return 0;
        }
        if left == 0 {
            return 1;
        }
        let children = if depth == 0 { k } else { k - 1 };
        let mut total = 0;
        for _ in 0..children {
            total += go(depth + 1, left - 1, k);
        }
        if depth > 0 {
            total += go(depth - 1, left - 1, k);
        }
        total
    }
    go(0, len, k)
}

#[test]
fn acceptance() {
    let mut gate = Gate { failures: 0 };
    let mut graphs: Vec<Built> = Vec::new();

    gate.run(1, "hoffman-singleton", secs(5), || {
        let b = build("amalgam1 q=5", constructions::amalgam_type1(5, Some(2)), false)?;
        egr(&b, 50, 7, 5, 36)?;
        check(b.profile.total_cycles == 1260, || format!("total 5-cycles {}", b.profile.total_cycles))?;
        let d = format!("egr(50,7,5,36), {} pentagons", b.profile.total_cycles);
        graphs.push(b);
        Ok(d)
    });

    gate.run(2, "(6,5)-cage", secs(2), || {
        let b = build("cage65", Ok(constructions::cage65()), false)?;
        egr(&b, 40, 6, 5, 22)?;
        let d = bounds::dfjr(6, 5, 22, false).map_err(|e| e.to_string())?.value;
        check(d == Some(40), || format!("dfjr(6,5,22) = {d:?}"))?;
        graphs.push(b);
        Ok("egr(40,6,5,22), dfjr attained at 40".into())
    });

    gate.run(3, "baer deletion", secs(30), || {
        for (q, n, k, lambda) in [(2, 28, 4, 24), (3, 156, 9, 472)] {
            let b = build(&format!("baer q={q}"), constructions::baer(q), true)?;
            egr(&b, n, k, 6, lambda)?;
            let d = bounds::dfjr(k as u64, 6, lambda, true).map_err(|e| e.to_string())?.value;
            check(d == Some(n as i128), || format!("bipartite dfjr at q={q} is {d:?}"))?;
            graphs.push(b);
        }
        Ok("egr(28,4,6,24), egr(156,9,6,472); bipartite dfjr attained".into())
    });

    gate.run(4, "flag deletion", secs(2), || {
        for (q, n, k, lambda) in [(4, 24, 3, 2), (5, 40, 4, 12)] {
            let b = build(&format!("flag q={q}"), constructions::flag(q), true)?;
            egr(&b, n, k, 6, lambda)?;
            graphs.push(b);
        }
        Ok("egr(24,3,6,2), egr(40,4,6,12)".into())
    });

    gate.run(5, "triangle deletion", secs(5), || {
        for (q, n, k, lambda) in [(5, 32, 3, 2), (7, 72, 5, 28)] {
            let b = build(&format!("triangle q={q}"), constructions::triangle(q), true)?;
            egr(&b, n, k, 6, lambda)?;
            graphs.push(b);
        }
        Ok("egr(32,3,6,2), egr(72,5,6,28)".into())
    });

    gate.run(6, "hermitian deletion", secs(30), || {
        let b = build("hermitian q=3", constructions::hermitian(3), true)?;
        egr(&b, 126, 6, 6, 45)?;
        graphs.push(b);
        Ok("egr(126,6,6,45)".into())
    });

    gate.run(7, "projective incidence", secs(10), || {
        for (n, q, order, k, lambda) in [(3, 2, 30, 7, 12), (3, 3, 80, 13, 36), (4, 2, 62, 15, 84)] {
            let b = build(&format!("pg n={n} q={q}"), constructions::pg_incidence(n, q), true)?;
            egr(&b, order, k, 4, lambda)?;
            if n == 3 {
                let formula = 2 * (q.pow(3) + q * q + q + 1) as usize;
                check(order == formula, || format!("order {order} vs 2(q^3+q^2+q+1) = {formula}"))?;
            }
            // hyperplanes hold [n]_q points; [n-1]_q of them contain a given line
            let gauss = |m: u32| (q.pow(m) - 1) / (q - 1);
            let formula = (gauss(n) - 1) * (gauss(n - 1) - 1);
            check(formula == lambda, || format!("lambda formula gives {formula}"))?;
            let claimed = match b.construction.claim.expected {
                constructions::ExpectedClass::Egr { lambda } => lambda,
                ref other => return Err(format!("pg claim {other:?}")),
            };
            check(claimed == lambda, || format!("claimed lambda {claimed}, measured {lambda}"))?;
            graphs.push(b);
        }
        Ok("egr(30,7,4,12), egr(80,13,4,36), egr(62,15,4,84)".into())
    });

    gate.run(8, "agr families", secs(60), || {
        let b = build("amalgam1 q=11", constructions::amalgam_type1(11, None), false)?;
        agr(&b, 242, 13, 5, (80, 11), (110, 2))?;
        graphs.push(b);
        let b = build("amalgam2 q=11", constructions::amalgam_type2(11, None, None), false)?;
        agr(&b, 240, 13, 5, (80, 11), (110, 2))?;
        graphs.push(b);
        let b = build("match-even q=8", constructions::matching_amalgam_even(8, None), false)?;
        // q^2 - q on the matching edges is 56 at q = 8
        agr(&b, 128, 9, 5, (28, 8), (56, 1))?;
        graphs.push(b);
        let b = build("match-odd q=9", constructions::matching_amalgam_odd(9, None, None), false)?;
        agr(&b, 160, 10, 5, (32, 9), (72, 1))?;
        graphs.push(b);
        Ok("242 [80x11,110x2], 240 [80x11,110x2], 128 [28x8,56x1], 160 [32x9,72x1]".into())
    });

    gate.run(9, "non-agr remarks", secs(30), || {
        let mut details = Vec::new();
        for (label, c, n, k) in [
            ("amalgam1 q=7", constructions::amalgam_type1(7, Some(2)), 98, 9),
            ("amalgam2 q=8", constructions::amalgam_type2(8, None, None), 126, 10),
        ] {
            let b = build(label, c, false)?;
            let p = &b.profile;
            check((b.construction.graph.order(), p.degree, p.girth) == (n, k, 5), || {
                format!("{label}: ({}, {}, {})", b.construction.graph.order(), p.degree, p.girth)
            })?;
            check(!matches!(p.classification, Classification::Agr { .. }), || format!("{label} is agr"))?;
            let values: BTreeSet<u64> = p.edge_counts.iter().copied().collect();
            check(values.len() > 2, || format!("{label}: edge counts {values:?}"))?;
            details.push(format!("{label} {} with edge counts {values:?}", p.classification.label()));
            graphs.push(b);
        }
        Ok(details.join("; "))
    });

    gate.run(10, "oracle equivalence", secs(120), || {
        let mut checked = 0;
        for b in graphs.iter().filter(|b| b.construction.graph.order() <= DEFAULT_ORACLE_CAP) {
            let g = &b.construction.graph;
            let o = census_oracle(g, b.profile.girth, DEFAULT_ORACLE_CAP, CensusOptions::default())
                .map_err(|e| format!("{}: {e}", b.label))?;
            check(o.edge_counts == b.profile.edge_counts, || format!("{}: per-edge counts differ", b.label))?;
            check(o.total_cycles == b.profile.total_cycles, || format!("{}: totals differ", b.label))?;
            checked += 1;
        }
        check(checked == graphs.len(), || format!("only {checked} of {} graphs under the cap", graphs.len()))?;
        Ok(format!("{checked} graphs, every edge agrees"))
    });

    gate.run(11, "bound soundness", secs(5), || {
        let mut evaluated = 0;
        for b in &graphs {
            let Some(sig) = b.profile.common_signature() else { continue };
            let n = b.construction.graph.order() as i128;
            let k = b.profile.degree as u64;
            let modes: &[bool] = if b.bipartite { &[false, true] } else { &[false] };
            for &bip in modes {
                let r = bounds::evaluate(&BoundQuery::signature(k, b.profile.girth, sig.to_vec(), bip))
                    .map_err(|e| format!("{}: {e}", b.label))?;
                for e in &r.bounds {
                    if let Some(v) = e.value {
                        check(v <= n, || format!("{}: {} = {v} > {n}", b.label, e.name))?;
                        evaluated += 1;
                    }
                }
            }
        }
        for k in 3..=10u64 {
            for g in 4..=8u32 {
                let lambda = (k - 1).pow(g / 2);
                let d = bounds::dfjr(k, g, lambda, false).map_err(|e| e.to_string())?.value;
                let m = bounds::moore(k, g).map_err(|e| e.to_string())?;
                check(d == Some(m), || format!("dfjr({k},{g},{lambda}) = {d:?}, moore {m}"))?;
            }
            let w2 = bounds::tree_walks(2, k).map_err(|e| e.to_string())?;
            let w4 = bounds::tree_walks(4, k).map_err(|e| e.to_string())?;
            let k = u128::from(k);
            check(w2 == k && w4 == 2 * k * k - k, || format!("tree walks at k={k}: {w2}, {w4}"))?;
        }
        for k in 3..=6u64 {
            for len in (2..=8).step_by(2) {
                let dp = bounds::tree_walks(len, k).map_err(|e| e.to_string())?;
                let slow = enumerate_tree_walks(len, k);
                check(dp == u128::from(slow), || format!("c({len},{k}): {dp} vs enumeration {slow}"))?;
            }
        }
        Ok(format!("{evaluated} applicable bounds <= order; dfjr meets moore; walk counts agree"))
    });

    gate.run(12, "cycle bound and sweep", secs(5), || {
        let heawood = bounds::sgr_cycle(3, 6, &[8, 8, 8], CycleForm::Proof).map_err(|e| e.to_string())?.value;
        check(heawood == Some(14), || format!("cycle(3,6,[8,8,8]) = {heawood:?}"))?;
        let egr = bounds::cycle_bound_egr(3, 6, 2).map_err(|e| e.to_string())?;
        check(egr == Some(19), || format!("cycle egr (3,6,2) = {egr:?}"))?;

        let (k, g) = (10u64, 6u32);
        let top = (k - 1).pow(3);
        let small = (k - 1).pow(2);
        let mut spectral_plain_above = 0;
        for bipartite in [false, true] {
            let rows = bounds::sweep(k, g, 1..=top, bipartite).map_err(|e| e.to_string())?;
            check(rows.len() == top as usize, || format!("{} rows", rows.len()))?;
            for r in rows.iter().filter(|r| 10 * r.lambda >= 9 * top) {
                let others = [r.moore, r.spectral, r.cycle];
                check(others.iter().flatten().all(|&v| Some(v) <= r.dfjr), || {
                    format!("dfjr not maximal at lambda={} (bipartite {bipartite}): {r:?}", r.lambda)
                })?;
            }
            for r in rows.iter().filter(|r| r.lambda <= small) {
                check(r.cycle > r.dfjr, || format!("cycle <= dfjr at lambda={}: {r:?}", r.lambda))?;
                if bipartite {
                    check(r.spectral > r.dfjr, || format!("bipartite spectral <= dfjr at lambda={}", r.lambda))?;
                } else if r.spectral > r.dfjr {
                    spectral_plain_above += 1;
                }
            }
        }
        Ok(format!(
            "14 and 19 exact; dfjr leads near {top}; cycle beats dfjr up to {small}; \
             bipartite spectral beats dfjr up to {small}, non-bipartite on {spectral_plain_above} rows"
        ))
    });

    assert_eq!(gate.failures, 0, "{} acceptance criteria failed", gate.failures);
}

fn slow_line(name: &str, start: Instant, limit: Duration, detail: &str) {
    let elapsed = start.elapsed();
    let line = format!("slow {name}: {:.2}s / {}s  {detail}\n", elapsed.as_secs_f64(), limit.as_secs());
    std::io::stderr().write_all(line.as_bytes()).unwrap();
    assert!(elapsed <= limit, "{name} took {elapsed:?}");
}

#[test]
#[ignore = "large instance; run with --ignored"]
fn baer_q4() {
    let start = Instant::now();
    let b = build("baer q=4", constructions::baer(4), true).unwrap();
    // The lambda formula evaluates to 3210 here, not 15 * 230.
    egr(&b, 504, 16, 6, 3210).unwrap();
    slow_line("baer q=4", start, secs(600), "egr(504,16,6,3210)");
}

#[test]
#[ignore = "large instance; run with --ignored"]
fn amalgam1_q25() {
    let start = Instant::now();
    let b = build("amalgam1 q=25", constructions::amalgam_type1(25, Some(2)), false).unwrap();
    agr(&b, 1250, 27, 5, (196, 25), (676, 2)).unwrap();
    slow_line("amalgam1 q=25", start, secs(600), "agr(1250,27,5,[196x25,676x2])");
}

#[test]
#[ignore = "large instance; run with --ignored"]
fn hermitian_q4() {
    let start = Instant::now();
    let b = build("hermitian q=4", constructions::hermitian(4), true).unwrap();
    egr(&b, 416, 12, 6, 781).unwrap();
    slow_line("hermitian q=4", start, secs(600), "egr(416,12,6,781)");
}
