//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each
//! and exits non-zero if any criterion fails.

mod common;

use std::io::Write as _;
use std::process::{Command, ExitCode, Stdio};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{as_vecs, brute_force_labelings, cycle_edges, edge_weights, random_oriented};
use ddmog::{
    attach_ornaments, augment_imbalance_one, catalog, chain, construct_ddmog, disjoint_union_ddm, imbalance_vector,
    parse, search_labeling, search_orientation, serialize, skew_matrix, verify_ddm, weight_vector,
    weighted_sum_shifted_ddm, weighted_sum_zero_shift_ddm, windmill, GraphDocument, LabeledGraph, Labeling, Provenance,
    SearchConfig, SearchMode, SearchStatus,
};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn r(name: &str) -> Result<LabeledGraph, String> {
    catalog::labeled(name).map_err(|e| e.to_string())
}

fn within(start: Instant, limit: Duration, what: &str) -> Check {
    let took = start.elapsed();
    ensure!(took <= limit, "{what} took {took:?}, limit {limit:?}");
    Ok(())
}

/// Construction result must be DDM and equal the catalog entry after
/// re-indexing vertices by label.
fn matches_golden(built: &LabeledGraph, name: &str) -> Check {
    ensure!(built.is_ddm(), "{name}: construction is not DDM");
    let canon = built.canonical_by_label().map_err(|e| e.to_string())?;
    ensure!(
        canon == r(name)?,
        "{name}: construction differs from the reference graph"
    );
    Ok(())
}

fn wheel_verification() -> Check {
    let good = r("R5")?;
    let bad = r("W4_NONDDM_LABELING")?;
    ensure!(
        good.graph == bad.graph,
        "the two wheel labelings must share one orientation"
    );
    let start = Instant::now();
    let v = verify_ddm(&good.graph, &good.labeling).map_err(|e| e.to_string())?;
    let w = weight_vector(&bad.graph, &bad.labeling).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    ensure!(
        v.is_ddm && v.weights.is_zero(),
        "DDM wheel labeling fails: {:?}",
        v.weights
    );
    let mut multiset = w.0.clone();
    multiset.sort();
    ensure!(multiset == [-6, -6, 0, 6, 6], "weight multiset {multiset:?}");
    ensure!(took < Duration::from_millis(1), "verification took {took:?}");
    Ok(())
}

fn catalog_soundness() -> Check {
    for name in ["R5", "R6", "R7", "R8", "R9"] {
        let lg = r(name)?;
        ensure!(
            lg.order() == name[1..].parse::<usize>().unwrap(),
            "{name}: order {}",
            lg.order()
        );
        ensure!(
            verify_ddm(&lg.graph, &lg.labeling).map_err(|e| e.to_string())?.is_ddm,
            "{name} not DDM"
        );
    }
    ensure!(r("R6")?.imbalance() == 0, "R6 imbalance");
    ensure!(r("R5")?.imbalance() == 1, "R5 imbalance");
    let demo = &catalog::get("IMBALANCE_DEMO").map_err(|e| e.to_string())?.graph;
    let imb = imbalance_vector(demo);
    ensure!(
        imb.imbalances == [-1, 1, 0, 0, 1, -2, 2, -1],
        "demo vector {:?}",
        imb.imbalances
    );
    ensure!(imb.graph_imbalance == 2, "demo imbalance {}", imb.graph_imbalance);
    Ok(())
}

fn linear_algebra_identities() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for case in 0..1000 {
        let n = rng.gen_range(1..=10);
        let density = rng.gen_range(0.0..1.0);
        let g = random_oriented(&mut rng, n, density);
        let s = skew_matrix(&g);
        for i in 0..n {
            for j in 0..n {
                ensure!(s.get(i, j) == -s.get(j, i), "case {case}: S not skew at ({i},{j})");
            }
        }
        let imb = imbalance_vector(&g).imbalances;
        let mut by_edges = vec![0i64; n];
        for &(u, v) in g.edges() {
            by_edges[v] += 1;
            by_edges[u] -= 1;
        }
        ensure!(imb == by_edges, "case {case}: imbalance vector");
        ensure!(s.mul_vec(&vec![1; n]) == imb, "case {case}: S*1 != imbalance");
        ensure!(imb.iter().sum::<i64>() == 0, "case {case}: imbalance sum");
        let mut labels: Vec<i64> = (1..=n as i64).collect();
        for i in (1..n).rev() {
            labels.swap(i, rng.gen_range(0..=i));
        }
        let expected = edge_weights(n, g.edges(), &labels);
        ensure!(s.mul_vec(&labels) == expected, "case {case}: S*x != weights");
        let f = Labeling::new(labels).map_err(|e| e.to_string())?;
        ensure!(
            weight_vector(&g, &f).map_err(|e| e.to_string())?.0 == expected,
            "case {case}: weight_vector"
        );
    }
    Ok(())
}

fn imbalance_one_augmentation() -> Check {
    let a = augment_imbalance_one(&r("R5")?).map_err(|e| e.to_string())?;
    ensure!(a.order() == 6, "order {}", a.order());
    ensure!(a.imbalance() == 0, "imbalance {}", a.imbalance());
    matches_golden(&a, "AUGMENTED_R5")
}

fn golden_chain() -> Check {
    let start = Instant::now();
    let fig = r("R6_FIG6")?;
    let once = chain(&r("R5")?, &fig).map_err(|e| e.to_string())?;
    matches_golden(&once, "R5_CHAIN_R6")?;
    let twice = chain(&once, &fig).map_err(|e| e.to_string())?;
    matches_golden(&twice, "R5_CHAIN_R6_CHAIN_R6")?;
    for n in 5..=60 {
        let g = construct_ddmog(n).map_err(|e| e.to_string())?;
        ensure!(g.order() == n, "order {n}");
        ensure!(
            verify_ddm(&g.graph, &g.labeling).map_err(|e| e.to_string())?.is_ddm,
            "n = {n} not DDM"
        );
    }
    within(start, Duration::from_secs(5), "chain checks")
}

fn windmills() -> Check {
    for k in 1..=10 {
        let w = windmill(k).map_err(|e| e.to_string())?;
        ensure!(
            verify_ddm(&w.graph, &w.labeling).map_err(|e| e.to_string())?.is_ddm,
            "k = {k}"
        );
    }
    let w = windmill(3).map_err(|e| e.to_string())?;
    matches_golden(&w, "WINDMILL_3")?;
    ensure!(w.labeling.get(0) == Some(13), "hub label {:?}", w.labeling.get(0));
    let mut blades: Vec<Vec<i64>> = w.labeling.as_slice()[1..].chunks(4).map(<[i64]>::to_vec).collect();
    blades.iter_mut().for_each(|b| b.sort());
    ensure!(
        blades == [vec![1, 2, 11, 12], vec![3, 4, 9, 10], vec![5, 6, 7, 8]],
        "blades {blades:?}"
    );
    Ok(())
}

fn disconnected_union() -> Check {
    let c6 = r("C6_REVERSED")?;
    let u = disjoint_union_ddm(&r("R5")?, &[c6.clone(), c6]).map_err(|e| e.to_string())?;
    matches_golden(&u, "R5_UNION_2C6")?;
    let l = u.labeling.as_slice();
    let blocks = [(0..5, 1..=5), (5..11, 6..=11), (11..17, 12..=17)];
    for (range, labels) in blocks {
        let mut got = l[range].to_vec();
        got.sort();
        ensure!(got == labels.collect::<Vec<_>>(), "label block {got:?}");
    }
    Ok(())
}

fn weighted_sums() -> Check {
    let w = windmill(2).map_err(|e| e.to_string())?;
    let shifted = LabeledGraph::new(
        w.graph.clone(),
        w.labeling.shifted(1).map_err(|e| e.to_string())?,
        Provenance::leaf("shift", "+1"),
    )
    .map_err(|e| e.to_string())?;
    let k = weighted_sum_zero_shift_ddm(&r("K1")?, &shifted).map_err(|e| e.to_string())?;
    ensure!(k.order() == 10, "order {}", k.order());
    matches_golden(&k, "K1_WSUM_WINDMILL_2")?;

    let o = attach_ornaments(&r("R7")?, 3).map_err(|e| e.to_string())?;
    ensure!(o.order() == 19, "ornament order {}", o.order());
    matches_golden(&o, "R7_ORNAMENTS_3")?;
    let hub = o.labeling.vertex_with_label(6).ok_or("no vertex labeled 6")?;
    for &(u, v) in o.graph.edges() {
        if (u < 7) != (v < 7) {
            ensure!(u == hub || v == hub, "cross edge {u}->{v} misses the vertex labeled 6");
        }
    }

    let s = weighted_sum_shifted_ddm(&r("C6_REVERSED")?, &r("H4")?).map_err(|e| e.to_string())?;
    ensure!(s.order() == 10, "shifted order {}", s.order());
    matches_golden(&s, "H4_WSUM_C6")?;
    let cross: Vec<_> = s
        .labeled_edges()
        .into_iter()
        .filter(|&(a, b)| (a <= 4) != (b <= 4))
        .collect();
    ensure!(cross == [(3, 6), (6, 1), (6, 2)], "cross edges {cross:?}");
    Ok(())
}

fn negative_results() -> Check {
    let start = Instant::now();
    let g = &catalog::get("W4_NO_LABELING_ORIENTATION")
        .map_err(|e| e.to_string())?
        .graph;
    for cfg in [
        SearchConfig::with_mode(SearchMode::All),
        SearchConfig::unpruned(SearchMode::All),
    ] {
        let out = search_labeling(g, &cfg).map_err(|e| e.to_string())?;
        ensure!(out.status == SearchStatus::ExhaustedNone, "status {:?}", out.status);
        ensure!(out.labelings.is_empty(), "labelings found");
        ensure!(out.leaves_evaluated <= 120, "{} leaves", out.leaves_evaluated);
    }
    for n in 3..=8 {
        let out = search_orientation(n, &cycle_edges(n), &SearchConfig::default()).map_err(|e| e.to_string())?;
        ensure!(!out.is_ddmo && out.witness.is_none(), "C{n} reported DDMO");
    }
    within(start, Duration::from_secs(1), "negative results")
}

fn oracle_equivalence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for case in 0..200 {
        let n = rng.gen_range(1..=7);
        let density = rng.gen_range(0.3..1.0);
        let g = random_oriented(&mut rng, n, density);
        let pruned = search_labeling(&g, &SearchConfig::with_mode(SearchMode::All)).map_err(|e| e.to_string())?;
        let plain = search_labeling(&g, &SearchConfig::unpruned(SearchMode::All)).map_err(|e| e.to_string())?;
        let brute = brute_force_labelings(&g);
        ensure!(
            as_vecs(&pruned.labelings) == brute,
            "case {case}: pruned search disagrees with brute force"
        );
        ensure!(
            as_vecs(&plain.labelings) == brute,
            "case {case}: unpruned search disagrees with brute force"
        );
    }
    Ok(())
}

fn round_trip(doc: &GraphDocument, what: &str) -> Check {
    let text = serialize(doc);
    let back = parse(&text).map_err(|e| format!("{what}: {e}"))?;
    ensure!(&back == doc, "{what}: parse(serialize(x)) != x");
    ensure!(serialize(&back) == text, "{what}: second serialization differs");
    Ok(())
}

fn pipeline(args: &[&str]) -> Check {
    let bin = env!("CARGO_BIN_EXE_ddmog");
    let built = Command::new(bin).args(args).output().map_err(|e| e.to_string())?;
    ensure!(built.status.success(), "{args:?} exited {:?}", built.status.code());
    let mut verify = Command::new(bin)
        .args(["verify", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::null())
        .spawn()
        .map_err(|e| e.to_string())?;
    verify
        .stdin
        .take()
        .ok_or("no stdin")?
        .write_all(&built.stdout)
        .map_err(|e| e.to_string())?;
    let status = verify.wait().map_err(|e| e.to_string())?;
    ensure!(status.code() == Some(0), "{args:?} | verify exited {:?}", status.code());
    Ok(())
}

fn io_round_trip() -> Check {
    for name in catalog::names() {
        round_trip(&catalog::get(name).map_err(|e| e.to_string())?.document, name)?;
        let raw = catalog::source_text(name).map_err(|e| e.to_string())?;
        let canonical = serialize(&parse(raw).map_err(|e| format!("{name}: {e}"))?);
        ensure!(canonical == raw, "{name}: bundled file is not in canonical form");
    }
    let mut built = vec![
        augment_imbalance_one(&r("R5")?),
        chain(&r("R5")?, &r("R6")?),
        construct_ddmog(33),
        windmill(5),
        disjoint_union_ddm(&r("R7")?, &[r("R6")?, r("C6_REVERSED")?]),
        attach_ornaments(&r("R8")?, 4),
        weighted_sum_shifted_ddm(&r("C6_REVERSED")?, &r("H4")?),
    ];
    built.push(weighted_sum_zero_shift_ddm(&r("K1")?, &{
        let w = windmill(2).map_err(|e| e.to_string())?;
        LabeledGraph::new(w.graph, w.labeling.shifted(1).map_err(|e| e.to_string())?, w.provenance)
            .map_err(|e| e.to_string())?
    }));
    for (i, lg) in built.into_iter().enumerate() {
        let lg = lg.map_err(|e| e.to_string())?;
        let comments = lg
            .provenance
            .to_string()
            .lines()
            .map(str::to_string)
            .collect::<Vec<_>>();
        round_trip(
            &GraphDocument::from_labeled(&lg).with_comments(comments),
            &format!("construction {i}"),
        )?;
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let file = |name: &str| -> Result<String, String> {
        let p = dir.path().join(format!("{name}.ddmog"));
        std::fs::write(&p, serialize(&catalog::get(name).map_err(|e| e.to_string())?.document))
            .map_err(|e| e.to_string())?;
        Ok(p.to_string_lossy().into_owned())
    };
    let (r5, r6, r7, c6, h4) = (file("R5")?, file("R6")?, file("R7")?, file("C6_REVERSED")?, file("H4")?);
    pipeline(&["construct", "order", "10"])?;
    pipeline(&["construct", "windmill", "4"])?;
    pipeline(&["construct", "chain", &r5, &r6])?;
    pipeline(&["construct", "augment", &r5])?;
    pipeline(&["construct", "union", &r5, &c6, &c6])?;
    pipeline(&["construct", "ornaments", &r7, "3"])?;
    pipeline(&["construct", "wsum", &c6, &h4, "--shift", "4"])?;
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("wheel labeling verification", wheel_verification),
        ("catalog soundness", catalog_soundness),
        (
            "linear-algebra identities on 1000 random graphs",
            linear_algebra_identities,
        ),
        ("imbalance-one augmentation golden", imbalance_one_augmentation),
        ("chain goldens and construct_ddmog 5..60", golden_chain),
        ("windmills k = 1..10 and k = 3 labels", windmills),
        ("disjoint union golden", disconnected_union),
        ("weighted sum goldens", weighted_sums),
        ("negative results via search", negative_results),
        ("pruned vs unpruned search on 200 random graphs", oracle_equivalence),
        ("I/O round-trip and construct | verify pipelines", io_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        match result {
            Ok(()) => println!("PASS  criterion {:>2}: {name} ({took:.2?})", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL  criterion {:>2}: {name}: {e}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
