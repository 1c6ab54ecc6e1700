use ddmog::{
    attach_ornaments, augment_imbalance_one, catalog, chain, construct_ddmog, disjoint_union_ddm,
    weighted_sum_shifted_ddm, weighted_sum_zero_shift_ddm, windmill, LabeledGraph, Provenance,
};

fn r(name: &str) -> LabeledGraph {
    catalog::labeled(name).unwrap()
}

fn assert_golden(built: &LabeledGraph, name: &str) {
    assert!(built.is_ddm(), "{name} construction is not DDM");
    assert_eq!(built.canonical_by_label().unwrap(), r(name), "{name}");
}

#[test]
fn augmented_wheel() {
    let a = augment_imbalance_one(&r("R5")).unwrap();
    assert_eq!(a.order(), 6);
    assert_eq!(a.imbalance(), 0);
    assert_golden(&a, "AUGMENTED_R5");
}

#[test]
fn chain_of_reference_graphs() {
    let once = chain(&r("R5"), &r("R6_FIG6")).unwrap();
    assert_golden(&once, "R5_CHAIN_R6");
    let twice = chain(&once, &r("R6_FIG6")).unwrap();
    assert_golden(&twice, "R5_CHAIN_R6_CHAIN_R6");
    assert_eq!(construct_ddmog(10).unwrap(), once);
    assert_eq!(construct_ddmog(15).unwrap(), twice);
}

#[test]
fn construct_every_order_up_to_sixty() {
    for n in 5..=60 {
        let g = construct_ddmog(n).unwrap();
        assert_eq!(g.order(), n);
        assert!(g.is_ddm(), "n = {n}");
        assert!(g.graph.is_connected(), "n = {n}");
    }
}

#[test]
fn windmill_of_three() {
    let w = windmill(3).unwrap();
    assert_golden(&w, "WINDMILL_3");
    assert_eq!(w.labeling.get(0), Some(13));
    let blades: Vec<Vec<i64>> = w.labeling.as_slice()[1..]
        .chunks(4)
        .map(|c| {
            let mut c = c.to_vec();
            c.sort();
            c
        })
        .collect();
    assert_eq!(blades, vec![vec![1, 2, 11, 12], vec![3, 4, 9, 10], vec![5, 6, 7, 8]]);
}

#[test]
fn windmills_are_ddm() {
    for k in 1..=10 {
        let w = windmill(k).unwrap();
        assert_eq!(w.order(), 4 * k + 1);
        assert!(w.is_ddm(), "k = {k}");
    }
}

#[test]
fn wheel_with_two_circulants() {
    let c6 = r("C6_REVERSED");
    let u = disjoint_union_ddm(&r("R5"), &[c6.clone(), c6]).unwrap();
    assert_golden(&u, "R5_UNION_2C6");
    let blocks: Vec<(i64, i64)> = [0..5, 5..11, 11..17]
        .into_iter()
        .map(|range| {
            let ls = &u.labeling.as_slice()[range];
            (*ls.iter().min().unwrap(), *ls.iter().max().unwrap())
        })
        .collect();
    assert_eq!(blocks, vec![(1, 5), (6, 11), (12, 17)]);
}

#[test]
fn trivial_graph_plus_shifted_windmill() {
    let w = windmill(2).unwrap();
    let shifted = LabeledGraph::new(
        w.graph.clone(),
        w.labeling.shifted(1).unwrap(),
        Provenance::leaf("shift", "+1"),
    )
    .unwrap();
    let s = weighted_sum_zero_shift_ddm(&r("K1"), &shifted).unwrap();
    assert_golden(&s, "K1_WSUM_WINDMILL_2");
}

#[test]
fn ornaments_on_seven() {
    let o = attach_ornaments(&r("R7"), 3).unwrap();
    assert_eq!(o.order(), 19);
    assert_golden(&o, "R7_ORNAMENTS_3");
    let hub = o.labeling.vertex_with_label(6).unwrap();
    let cross = o.graph.edges().iter().filter(|&&(u, v)| (u < 7) != (v < 7));
    let mut count = 0;
    for &(u, v) in cross {
        assert!(u == hub || v == hub);
        count += 1;
    }
    assert_eq!(count, 12);
}

#[test]
fn shifted_sum_of_circulant_and_h4() {
    let s = weighted_sum_shifted_ddm(&r("C6_REVERSED"), &r("H4")).unwrap();
    assert_golden(&s, "H4_WSUM_C6");
    let cross: Vec<(i64, i64)> = s
        .labeled_edges()
        .into_iter()
        .filter(|&(a, b)| (a <= 4) != (b <= 4))
        .collect();
    assert_eq!(cross, vec![(3, 6), (6, 1), (6, 2)]);
}
