//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Built with `harness = false` so the lines always print.

use kpath::bounds::{
    evaluate_bounds, pair_chain, random_order_threshold, table_chordal, Best, FeasiblePair, GraphFlags,
};
use kpath::chordal::clique_number;
use kpath::construct::{cover_chordal_classes, cover_chordal_decomp, cover_random_order, lovasz_partition};
use kpath::exact::psi_exact;
use kpath::graph::{generate_family, FamilySpec};
use kpath::paths::is_cover;
use kpath::verify::{
    build_corpus, conjecture_scan, erdos_gallai_holds, is_cycle_union, isolate_free_sample, random_order_exists,
    tightness_scan, verify_all, ConjectureCorpus, CorpusSpec,
};
use kpath::{int, ratio, Graph, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn fam(s: &str) -> Graph {
    generate_family(&s.parse::<FamilySpec>().unwrap(), 0).unwrap()
}

fn psi(g: &Graph, k: usize) -> usize {
    psi_exact(g, k).unwrap().size()
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn chain() -> Outcome {
    const EXPECTED: [((i64, i64), (i64, i64)); 10] = [
        ((11, 21), (5, 63)),
        ((7, 12), (5, 84)),
        ((17, 27), (5, 108)),
        ((2, 3), (1, 27)),
        ((23, 33), (1, 33)),
        ((13, 18), (5, 198)),
        ((29, 39), (5, 234)),
        ((16, 21), (5, 273)),
        ((7, 9), (1, 63)),
        ((19, 24), (1, 72)),
    ];
    let xs: Vec<usize> = (5..=14).collect();
    let got = pair_chain(&FeasiblePair::four_nm9(), &xs).map_err(|e| e.to_string())?;
    for (i, ((an, ad), (bn, bd))) in EXPECTED.iter().enumerate() {
        let p = &got[i + 1];
        check(p.a == ratio(*an, *ad) && p.b == ratio(*bn, *bd), || format!("x={}: got ({}, {})", i + 5, p.a, p.b))?;
    }
    Ok("10 pairs".into())
}

fn table() -> Outcome {
    // rows k = 2..=6; columns ω = 2..=5 for each formula, `*` on the smaller
    const EXPECTED: [&str; 5] = [
        "*1/2 *2/3 *3/4 *4/5 2/3 3/4 4/5 5/6",
        "*1/3 *5/9 *2/3 11/15 1/2 3/5 *2/3 *5/7",
        "*1/4 *1/2 5/8 7/10 2/5 *1/2 *4/7 *5/8",
        "*1/5 7/15 3/5 17/25 1/3 *3/7 *1/2 *5/9",
        "*1/6 4/9 7/12 2/3 2/7 *3/8 *4/9 *1/2",
    ];
    let rows = table_chordal(&[2, 3, 4, 5, 6], &[2, 3, 4, 5]);
    let mut cells = 0;
    for (row, line) in rows.iter().zip(EXPECTED) {
        let want: Vec<&str> = line.split(' ').collect();
        for (j, c) in row.iter().enumerate() {
            let render = |r: &Rational, starred: bool| format!("{}{r}", if starred { "*" } else { "" });
            let left = render(&c.left, c.best != Best::Right);
            let right = render(&c.right, c.best != Best::Left);
            check(left == want[j] && right == want[j + 4], || {
                format!("k={} ω={}: {left} {right} vs {} {}", c.k, c.omega, want[j], want[j + 4])
            })?;
            cells += 2;
        }
    }
    check(cells == 40, || format!("{cells} cells"))?;
    Ok("40 cells".into())
}

fn named_values() -> Outcome {
    check(psi(&fam("cycle(4)"), 3) == 2, || "ψ3(C4)".into())?;
    check(psi(&fam("complete_minus_pm(6)"), 3) == 4, || "ψ3(K6-M)".into())?;
    check(psi(&fam("cycle(5)"), 4) == 2, || "ψ4(C5)".into())?;
    let mut count = 3;
    for n in 1..=10 {
        let g = fam(&format!("complete({n})"));
        for k in 2..=n {
            check(psi(&g, k) == n - k + 1, || format!("ψ{k}(K{n})"))?;
            count += 1;
        }
    }
    for n in 1..=15 {
        for k in 3..=5 {
            check(psi(&fam(&format!("path({n})")), k) == n / k, || format!("ψ{k}(P{n})"))?;
            count += 1;
            if n >= k.max(3) {
                check(psi(&fam(&format!("cycle({n})")), k) == n.div_ceil(k), || format!("ψ{k}(C{n})"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} values"))
}

fn master_sweep() -> Outcome {
    let report = verify_all(&CorpusSpec::master()).map_err(|e| e.to_string())?;
    let t = &report.totals;
    if let Some(v) = report.violations.first() {
        return Err(format!(
            "{} violations, first {} k={} {}: {}",
            report.violations.len(),
            v.id,
            v.k,
            v.check,
            v.detail
        ));
    }
    Ok(format!("{} graphs, {} bound checks, {} algorithm runs", t.graphs, t.bound_checks, t.algorithm_runs))
}

fn tightness() -> Outcome {
    let ids = |found: Vec<kpath::verify::TightInstance>| -> BTreeSet<(String, usize)> {
        found.into_iter().map(|t| (t.id, t.k)).collect()
    };
    let spec = CorpusSpec::exhaustive(6, &[3]);
    let corpus = build_corpus(&spec).map_err(|e| e.to_string())?;
    let want: BTreeSet<(String, usize)> =
        corpus.iter().filter(|it| is_cycle_union(&it.graph, 4)).map(|it| (it.id.clone(), 3)).collect();
    let got = ids(tightness_scan(&spec, "nm4").map_err(|e| e.to_string())?);
    check(got == want, || format!("nm4 tight on {got:?}, C4 unions {want:?}"))?;
    let nm4 = got.len();

    let mut families: Vec<String> = Vec::new();
    for c in 3..=7 {
        for j in 1..=3 {
            families.push(format!("copies({j},cycle({c}))"));
        }
        families.push(format!("disjoint_union(cycle({c}),path(3))"));
        families.push(format!("disjoint_union(cycle({c}),cycle({}))", c + 1));
    }
    for n in 1..=12 {
        families.push(format!("path({n})"));
    }
    let fs: Vec<(&str, u64)> = families.iter().map(|f| (f.as_str(), 1)).collect();
    let mut delta2 = 0;
    for spec in [CorpusSpec::exhaustive(6, &[3, 4, 5]), CorpusSpec::families(&fs, &[3, 4, 5])] {
        let corpus = build_corpus(&spec).map_err(|e| e.to_string())?;
        let want: BTreeSet<(String, usize)> = corpus
            .iter()
            .flat_map(|it| spec.ks.iter().filter(|&&k| is_cycle_union(&it.graph, k + 1)).map(|&k| (it.id.clone(), k)))
            .collect();
        let got = ids(tightness_scan(&spec, "delta2_n").map_err(|e| e.to_string())?);
        check(got == want, || format!("delta2_n tight on {got:?}, cycle unions {want:?}"))?;
        delta2 += got.len();
    }

    let spec = CorpusSpec::families(&[("cycle(5)", 1), ("copies(2,cycle(5))", 1)], &[4]);
    let got = ids(tightness_scan(&spec, "psi4_n_3m").map_err(|e| e.to_string())?);
    for id in ["cycle(5)@0", "copies(2,cycle(5))@0"] {
        check(got.contains(&(id.to_string(), 4)), || format!("psi4_n_3m not tight on {id}"))?;
    }
    Ok(format!("nm4 {nm4}, delta2_n {delta2}, psi4_n_3m {}", got.len()))
}

fn erdos_gallai() -> Outcome {
    let corpus = build_corpus(&CorpusSpec::master()).map_err(|e| e.to_string())?;
    let mut free = 0;
    for it in &corpus {
        for k in 3..=5 {
            match erdos_gallai_holds(&it.graph, k).map_err(|e| e.to_string())? {
                Some(true) => free += 1,
                Some(false) => return Err(format!("{} k={k}: {} edges", it.id, it.graph.m())),
                None => {}
            }
        }
    }
    for k in 3..=5 {
        for j in 1..=4 {
            let g = fam(&format!("copies({j},complete({}))", k - 1));
            check(erdos_gallai_holds(&g, k).unwrap() == Some(true), || format!("{j}K{} not P{k}-free", k - 1))?;
            check(2 * g.m() == g.n() * (k - 2), || format!("{j}K{} has {} edges", k - 1, g.m()))?;
        }
    }
    Ok(format!("{free} P_k-free (graph, k) pairs, clique unions extremal"))
}

fn random_order() -> Outcome {
    let sample = isolate_free_sample(200, 7, 2024).map_err(|e| e.to_string())?;
    let mut lines = Vec::new();
    for k in 3..=5 {
        let mut sampled = 0;
        for (i, (id, g)) in sample.iter().enumerate() {
            let order = random_order_exists(g, k).map_err(|e| e.to_string())?;
            check(order.is_some(), || format!("{id} k={k}: no ordering reaches {}", random_order_threshold(g, k)))?;
            let r = cover_random_order(g, k, i as u64, 200).map_err(|e| e.to_string())?;
            check(is_cover(g, k, &r.cover).unwrap().is_valid(), || format!("{id} k={k}: invalid cover"))?;
            sampled += usize::from(r.guarantee_certified && r.meets_guarantee());
        }
        check(sampled * 100 >= 95 * sample.len(), || format!("k={k}: sampling met the bound on {sampled}/200"))?;
        lines.push(format!("k={k} {sampled}/200"));
    }
    Ok(format!("orderings exist for all; sampled {}", lines.join(", ")))
}

fn chordal() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut runs, mut exact) = (0, 0);
    for i in 0..200u64 {
        let n = rng.gen_range(4..=40);
        let p = rng.gen_range(1..=4);
        let spec =
            if i % 2 == 0 { FamilySpec::KTree { n, width: p } } else { FamilySpec::Interval { n, max_len: 3 * p } };
        let g = generate_family(&spec, i).unwrap();
        let omega = clique_number(&g).unwrap();
        let chi = omega.max(2) as i64;
        let nn = int(n as i64);
        for k in 3..=5 {
            let kk = k as i64;
            let decomp = cover_chordal_decomp(&g, k).map_err(|e| format!("{spec}@{i}: {e}"))?;
            let classes = cover_chordal_classes(&g, k).map_err(|e| format!("{spec}@{i}: {e}"))?;
            let decomp_cap = ratio(omega as i64, omega as i64 + kk - 1) * &nn;
            let class_cap = (int(1) - ratio(2 * (kk - 1), chi * kk)) * &nn;
            for (r, cap) in [(&decomp, &decomp_cap), (&classes, &class_cap)] {
                check(is_cover(&g, k, &r.cover).unwrap().is_valid(), || {
                    format!("{spec}@{i} k={k}: invalid {}", r.algorithm)
                })?;
                check(int(r.size() as i64) <= *cap, || {
                    format!("{spec}@{i} k={k}: {} size {} > {cap}", r.algorithm, r.size())
                })?;
            }
            if n <= 20 {
                let p = psi(&g, k);
                check(p <= decomp.size() && p <= classes.size(), || format!("{spec}@{i} k={k}: cover below ψ {p}"))?;
                check(int(p as i64) <= decomp_cap && int(p as i64) <= class_cap, || {
                    format!("{spec}@{i} k={k}: ψ {p} above a bound")
                })?;
                exact += 1;
            }
            runs += 1;
        }
    }
    Ok(format!("{runs} runs, {exact} compared with ψ"))
}

fn lovasz() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let pairs = [(1, 1), (2, 1), (3, 3), (5, 5)];
    let mut moves = 0;
    for i in 0..500u64 {
        let (a, b) = pairs[i as usize % 4];
        let n = rng.gen_range(4..=40);
        let m = rng.gen_range(0..=n * (a + b + 1) / 2);
        let g = generate_family(&FamilySpec::BoundedDegree { n, m, cap: a + b + 1 }, i).unwrap();
        check(g.max_degree() <= a + b + 1, || format!("graph {i} has Δ {}", g.max_degree()))?;
        let part = lovasz_partition(&g, a, b).map_err(|e| format!("graph {i}: {e}"))?;
        check(g.induced(&part.a_side).max_degree() <= a, || format!("graph {i} ({a},{b}): A side over cap"))?;
        check(g.induced(&part.b_side).max_degree() <= b, || format!("graph {i} ({a},{b}): B side over cap"))?;
        check(part.moves <= (b + 1) * g.m(), || format!("graph {i} ({a},{b}): {} moves, m = {}", part.moves, g.m()))?;
        moves += part.moves;
    }
    Ok(format!("500 graphs, {moves} moves"))
}

fn petersen() -> Outcome {
    let g = fam("petersen");
    let p3 = psi(&g, 3);
    let rs = evaluate_bounds(&g, 3, GraphFlags::default());
    let lower = rs.iter().find(|r| r.name == "regular_lower").and_then(|r| r.value.clone());
    check(p3 == 4 && lower == Some(int(4)), || format!("ψ3 {p3}, regular lower bound {lower:?}"))?;
    let p4 = psi(&g, 4);
    let rs = evaluate_bounds(&g, 4, GraphFlags::default());
    let girth = rs.iter().find(|r| r.name == "cubic_girth").ok_or("no cubic_girth record")?;
    check(girth.applicable && girth.strict && girth.value == Some(ratio(5, 2)), || format!("{girth:?}"))?;
    check(int(p4 as i64) > ratio(5, 2) && p4 >= 3 && girth.holds(p4) == Some(true), || format!("ψ4 {p4}"))?;
    Ok(format!("ψ3 = 4 = lower bound, ψ4 = {p4} > 5/2"))
}

fn conjectures() -> Outcome {
    let report =
        conjecture_scan(&ConjectureCorpus::standard().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    if let Some(c) = report.counterexamples.first() {
        return Err(format!("counterexample {} k={} ψ={} > {}", c.id, c.k, c.psi, c.value));
    }
    let octa = report.exact.iter().find(|h| h.id == "octahedron" && h.conjecture == "planar_2_3");
    check(octa.is_some_and(|h| h.psi == 4 && h.value == "4"), || "octahedron not exact".into())?;
    Ok(format!("{} checked, {} exact, {} near tight", report.checked, report.exact.len(), report.near_tight.len()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("pair chain", chain, Duration::from_secs(1)),
        ("chordal table", table, Duration::from_secs(1)),
        ("named exact values", named_values, Duration::from_secs(10)),
        ("master sweep", master_sweep, Duration::from_secs(600)),
        ("tightness", tightness, Duration::MAX),
        ("erdos-gallai", erdos_gallai, Duration::MAX),
        ("random order existence", random_order, Duration::MAX),
        ("chordal algorithms", chordal, Duration::MAX),
        ("lovasz partition", lovasz, Duration::MAX),
        ("petersen", petersen, Duration::MAX),
        ("conjecture scan", conjectures, Duration::MAX),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let took = start.elapsed();
        if outcome.is_ok() && took > *budget {
            outcome = Err(format!("took {took:.2?}, budget {budget:?}"));
        }
        match outcome {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail}; {took:.2?})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({detail}; {took:.2?})", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
