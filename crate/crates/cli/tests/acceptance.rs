//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Every expected value is recomputed here
//! by brute force rather than taken from the library.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use edgeweight::bitset::VertexSet;
use edgeweight::formats::parse_graph6_batch;
use edgeweight::generate::gen_random_regular;
use edgeweight::partition::{layered_partition, maximum_independent_set};
use edgeweight::rational::{format_rational, int, ratio, Rational};
use edgeweight::verifier::{verify_proper, AuditStage};
use edgeweight::weighter::{construct, weight_bipartite_lemma3, Options};
use edgeweight::{weight_with_set, Branch, Certificate, Error, Graph, WeightSet};
use edgeweight_cli::run_from;

const CORPUS: &str = include_str!("../../core/tests/fixtures/cubic_connected_le10.g6");

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 7] = [
        ("cubic corpus, five gap pairs, audited", criterion_1),
        ("constructions agree with exhaustive enumeration", criterion_2),
        ("arbitrary sets dispatch by spacing", criterion_3),
        ("structural bounds on random regular graphs", criterion_4),
        ("independent sets and the bipartite lemma", criterion_5),
        ("determinism of weight and batch", criterion_6),
        ("negative controls", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}; {secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({why}; {secs:.2}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn corpus() -> Vec<Graph> {
    parse_graph6_batch(CORPUS).into_iter().map(|(_, g)| g.unwrap()).collect()
}

fn gap_pairs() -> Vec<(Rational, Rational)> {
    vec![
        (int(1), int(2)),
        (int(1), int(3)),
        (int(2), int(3)),
        (ratio(1, 2), int(3)),
        (int(1), int(100)),
    ]
}

/// Sum of incident weights, from the raw edge list.
fn degrees(g: &Graph, w: &[Rational]) -> Vec<Rational> {
    let mut d = vec![int(0); g.n()];
    for (&(u, v), x) in g.edges().iter().zip(w) {
        d[u] += x;
        d[v] += x;
    }
    d
}

fn is_proper_in(g: &Graph, q: &WeightSet, w: &[Rational]) -> bool {
    let d = degrees(g, w);
    w.len() == g.m()
        && w.iter().all(|x| q.values().contains(x))
        && g.edges().iter().all(|&(u, v)| d[u] != d[v])
}

/// Every proper weighting of `g` over `q`, by plain enumeration of `3^m`.
fn enumerate_proper(g: &Graph, q: &WeightSet) -> Vec<Vec<Rational>> {
    let m = g.m();
    let mut digits = vec![0usize; m];
    let mut found = Vec::new();
    loop {
        let w: Vec<Rational> = digits.iter().map(|&i| q.values()[i].clone()).collect();
        if is_proper_in(g, q, &w) {
            found.push(w);
        }
        let mut pos = 0;
        loop {
            if pos == m {
                return found;
            }
            digits[pos] += 1;
            if digits[pos] < 3 {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let graphs = corpus();
    let mut runs = 0;
    for g in &graphs {
        for (d1, d2) in gap_pairs() {
            let opts = Options {
                audit: true,
                ..Options::default()
            };
            let built = construct(g, d1.clone(), d2.clone(), &opts).map_err(|e| format!("n={} ({d1},{d2}): {e}", g.n()))?;
            let q = WeightSet::centered(&d1, &d2).unwrap();
            let w = built.state.weights();
            ensure(is_proper_in(g, &q, &w), || format!("conflict on n={} graph", g.n()))?;
            let report = verify_proper(g, &w, &q).map_err(|e| e.to_string())?;
            ensure(report.conflict_count == 0, || "verifier reported conflicts".into())?;
            let last = built.audits.last().ok_or("no audit recorded")?;
            ensure(
                matches!(last.stage, AuditStage::PostPhase2 | AuditStage::Lemma3) && last.passed(),
                || last.summary(),
            )?;
            runs += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(graphs.len() == 27, || format!("corpus has {} graphs", graphs.len()))?;
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{runs}/{runs} proper and audited"))
}

fn criterion_2() -> Outcome {
    let graphs = [
        ("C3", Graph::cycle(3)),
        ("C4", Graph::cycle(4)),
        ("C5", Graph::cycle(5)),
        ("C6", Graph::cycle(6)),
        ("K4", Graph::complete(4)),
        ("K3,3", Graph::complete_bipartite(3, 3)),
        ("prism", Graph::prism()),
    ];
    let mut sets: Vec<WeightSet> = gap_pairs().iter().map(|(a, b)| WeightSet::centered(a, b).unwrap()).collect();
    sets.push(WeightSet::from_ints(1, 2, 3).unwrap());
    let mut checked = 0;
    for (name, g) in &graphs {
        ensure(g.m() <= 13, || format!("{name} too large"))?;
        for q in &sets {
            let all = enumerate_proper(g, q);
            let built = weight_with_set(g, q, &Options::default());
            match built {
                Ok(cert) => {
                    let w = cert.weights().map_err(|e| e.to_string())?;
                    ensure(all.contains(&w), || format!("{name} over {q}: construction not among proper weightings"))?;
                }
                Err(e) => {
                    ensure(all.is_empty(), || format!("{name} over {q}: failed ({e}) but {} exist", all.len()))?;
                }
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} graph/set pairs"))
}

fn criterion_3() -> Outcome {
    let sets = [(5, 7, 8), (0, 1, 3), (-3, -1, 0), (1, 2, 3)];
    for (name, g) in [("K4", Graph::complete(4)), ("Petersen", Graph::petersen())] {
        for (a, b, c) in sets {
            let q = WeightSet::from_ints(a, b, c).unwrap();
            let cert = weight_with_set(&g, &q, &Options::default()).map_err(|e| format!("{name} {q}: {e}"))?;
            let sign = (b - a) - (c - b);
            let expected_ok = match sign {
                s if s < 0 => cert.branch == Branch::Shifted,
                s if s > 0 => cert.branch == Branch::NegatedShifted,
                _ => cert.branch.is_arithmetic(),
            };
            ensure(expected_ok, || format!("{name} {q}: branch {:?} for spacing sign {sign}", cert.branch))?;
            let w = cert.weights().map_err(|e| e.to_string())?;
            ensure(is_proper_in(&g, &q, &w), || format!("{name} {q}: not a proper weighting over the set"))?;
        }
    }
    Ok("8 instances".into())
}

/// Kuhn's augmenting paths: does `G[a, b]` have a matching covering `b`?
fn covers(g: &Graph, a: &VertexSet, b: &VertexSet) -> bool {
    fn augment(g: &Graph, a: &VertexSet, v: usize, seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for u in g.neighbors(v) {
            if !a.contains(u) || seen[u] {
                continue;
            }
            seen[u] = true;
            if owner[u].is_none() || augment(g, a, owner[u].unwrap(), seen, owner) {
                owner[u] = Some(v);
                return true;
            }
        }
        false
    }
    let mut owner = vec![None; g.n()];
    b.iter().all(|v| augment(g, a, v, &mut vec![false; g.n()], &mut owner))
}

fn criterion_4() -> Outcome {
    let (mut cubic_second_phase, mut colorings) = (0, 0);
    for seed in 0..200u64 {
        let k = 3 + (seed % 6) as usize;
        let mut n = k + 1 + (seed as usize * 37) % (59 - k);
        if n * k % 2 == 1 {
            n += 1;
        }
        let g = gen_random_regular(n, k, seed).map_err(|e| format!("seed {seed}: {e}"))?;
        let p = layered_partition(&g);
        let l = p.last().unwrap_or(0);
        ensure((1..=k + 1).contains(&l), || format!("seed {seed}: {l} layers above base for k={k}"))?;
        for i in 1..=l {
            ensure(covers(&g, p.layer(i - 1), p.layer(i)), || format!("seed {seed}: layer {i} not matchable into layer {}", i - 1))?;
        }
        let built = construct(&g, int(1), int(2), &Options::default()).map_err(|e| format!("seed {seed}: {e}"))?;
        for (layer, _, colors) in built.log.colorings() {
            colorings += 1;
            ensure(colors <= layer, || format!("seed {seed}: {colors} colours at layer {layer}"))?;
        }
        if k == 3 {
            if let Some((x1, x2, _)) = built.log.second_phase_classes() {
                cubic_second_phase += 1;
                ensure(x1 + x2 == 0, || format!("seed {seed}: |X1|={x1}, |X2|={x2} on a cubic graph"))?;
            }
        }
    }
    Ok(format!("200 graphs, {colorings} colourings, {cubic_second_phase} cubic second phases"))
}

fn brute_alpha(g: &Graph) -> usize {
    let n = g.n();
    let nbr: Vec<u32> = (0..n).map(|v| g.neighbors(v).fold(0, |m, u| m | 1 << u)).collect();
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|v| s & 1 << v == 0 || s & nbr[v] == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for t in 0..100 {
        let n = rng.gen_range(1..=18);
        let p = rng.gen_range(0.05..0.8);
        let g = random_graph(&mut rng, n, p);
        let mis = maximum_independent_set(&g);
        ensure(g.is_independent(&mis), || format!("graph {t}: returned set not independent"))?;
        let alpha = brute_alpha(&g);
        ensure(mis.len() == alpha, || format!("graph {t}: {} vs brute force {alpha}", mis.len()))?;
    }
    for t in 0..100 {
        let (a, b) = (rng.gen_range(3..=9), rng.gen_range(1..=8));
        let mut edges = Vec::new();
        for x in a..a + b {
            let deg = rng.gen_range(3..=a);
            let mut ys: Vec<usize> = (0..a).collect();
            for i in 0..deg {
                let j = rng.gen_range(i..a);
                ys.swap(i, j);
                edges.push((ys[i], x));
            }
        }
        let g = Graph::from_edges(a + b, edges).unwrap();
        let d1 = ratio(rng.gen_range(1..20), rng.gen_range(1..6));
        let d2 = &d1 + ratio(rng.gen_range(1..20), rng.gen_range(1..6));
        let i0 = VertexSet::from_iter_in(a + b, 0..a);
        let i1 = VertexSet::from_iter_in(a + b, a..a + b);
        let state = weight_bipartite_lemma3(&g, &i0, &i1, d1.clone(), d2.clone()).map_err(|e| format!("instance {t}: {e}"))?;
        let w = state.weights();
        let d = degrees(&g, &w);
        let low = -int(3) * &d1;
        for (v, dv) in d.iter().enumerate() {
            let ok = if v >= a {
                *dv == low || *dv == d2
            } else {
                *dv < &d2 - &d1 && *dv != low
            };
            ensure(ok, || format!("instance {t}: vertex {v} (side {}) has {}", usize::from(v >= a), format_rational(dv)))?;
        }
        let q = WeightSet::centered(&d1, &d2).unwrap();
        ensure(is_proper_in(&g, &q, &w), || format!("instance {t}: not proper"))?;
    }
    Ok("100 MIS instances, 100 bipartite instances".into())
}

fn cli(args: &[&str]) -> (i32, Vec<u8>, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["edgeweight"];
    argv.extend_from_slice(args);
    let code = run_from(argv, &mut out, &mut err);
    (code, out, String::from_utf8_lossy(&err).into_owned())
}

fn criterion_6() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let graph = dir.path().join("petersen.g6");
    std::fs::write(&graph, "IheA@GUAo\n").map_err(|e| e.to_string())?;
    let g = graph.to_str().unwrap();
    for set in ["-1,0,2", "5,7,8", "1/2,1,3", "1,2,3"] {
        let (c1, a, e1) = cli(&["weight", "--input", g, "--set", set, "--audit"]);
        let (c2, b, _) = cli(&["weight", "--input", g, "--set", set, "--audit"]);
        ensure(c1 == 0 && c2 == 0, || format!("weight {set} exited {c1}/{c2}: {e1}"))?;
        ensure(a == b, || format!("certificates for {set} differ"))?;
    }
    let corpus = dir.path().join("corpus.g6");
    std::fs::write(&corpus, CORPUS).map_err(|e| e.to_string())?;
    let c = corpus.to_str().unwrap();
    let sets = "-1,0,2;-1,0,3;-2,0,3;1,2,3";
    let (c1, one, e1) = cli(&["batch", "--corpus", c, "--sets", sets, "--jobs", "1"]);
    let (c8, eight, _) = cli(&["batch", "--corpus", c, "--sets", sets, "--jobs", "8"]);
    ensure(c1 == 0 && c8 == 0, || format!("batch exited {c1}/{c8}: {e1}"))?;
    ensure(one == eight, || "batch summaries differ between 1 and 8 jobs".into())?;
    let report: serde_json::Value = serde_json::from_slice(&one).map_err(|e| e.to_string())?;
    let rate = report["summary"]["guaranteed_success_rate"].as_f64();
    ensure(rate == Some(1.0), || format!("guaranteed success rate {rate:?}"))?;
    Ok("4 certificates, 108-run batch".into())
}

fn criterion_7() -> Outcome {
    let q = WeightSet::from_ints(-1, 0, 2).unwrap();
    let opts = Options::default();
    let k2 = Graph::complete(2);
    ensure(matches!(weight_with_set(&k2, &q, &opts), Err(Error::NotNice(0, 1))), || "K2 accepted".into())?;
    let with_k2 = Graph::cycle(4).disjoint_union(&k2);
    ensure(matches!(weight_with_set(&with_k2, &q, &opts), Err(Error::NotNice(..))), || "K2 component accepted".into())?;
    for g in [Graph::path(4), Graph::complete_bipartite(1, 3), Graph::complete(4).disjoint_union(&Graph::cycle(5))] {
        ensure(matches!(weight_with_set(&g, &q, &opts), Err(Error::NotRegular)), || "irregular graph accepted".into())?;
    }

    // Corrupt one weight of a valid certificate so that some edge conflicts.
    let g = Graph::petersen();
    let cert = weight_with_set(&g, &q, &opts).map_err(|e| e.to_string())?;
    let w = cert.weights().map_err(|e| e.to_string())?;
    let (bad_edge, bad_w) = (0..g.m())
        .flat_map(|e| q.values().iter().map(move |x| (e, x.clone())))
        .find(|(e, x)| {
            let mut t = w.clone();
            t[*e] = x.clone();
            !is_proper_in(&g, &q, &t)
        })
        .ok_or("no single-edge corruption creates a conflict")?;
    let mut tampered = w.clone();
    tampered[bad_edge] = bad_w.clone();
    let report = verify_proper(&g, &tampered, &q).map_err(|e| e.to_string())?;
    ensure(!report.is_proper() && report.conflict_count > 0, || "corruption not flagged".into())?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let gpath = dir.path().join("g.g6");
    std::fs::write(&gpath, "IheA@GUAo\n").map_err(|e| e.to_string())?;
    let mut bad = cert.clone();
    bad.edges[bad_edge].weight = format_rational(&bad_w);
    let cpath = dir.path().join("bad.json");
    std::fs::write(&cpath, bad.to_json()).map_err(|e| e.to_string())?;
    let (code, out, _) = cli(&["verify", "--input", gpath.to_str().unwrap(), "--cert", cpath.to_str().unwrap()]);
    let listed: serde_json::Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
    ensure(code != 0, || "verify accepted a corrupted certificate".into())?;
    ensure(listed["conflicts"].as_array().is_some_and(|c| !c.is_empty()), || "conflicts not listed".into())?;

    let mut short: Certificate = cert.clone();
    short.edges.pop();
    std::fs::write(&cpath, short.to_json()).map_err(|e| e.to_string())?;
    let (code, _, err) = cli(&["verify", "--input", gpath.to_str().unwrap(), "--cert", cpath.to_str().unwrap()]);
    ensure(code == 1 && err.contains("certificate"), || format!("wrong edge count gave exit {code}: {err}"))?;
    Ok("K2, 3 irregular graphs, 2 bad certificates rejected".into())
}
