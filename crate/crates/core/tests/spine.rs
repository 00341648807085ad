use std::collections::BTreeSet;
use std::f64::consts::PI;

use skeinwrt::scalars::Scalar;
use skeinwrt::spine_rep::{
    delete_zero_edge, dim, enumerate_weights, flip, flip_spine, is_admissible, is_flippable,
    reduce_trace, standard_spine, verify_shadow, Component, OperatorMatrix, PartialSpine,
    ReductionCase, SpineError, SpineRep, WeightSystem,
};

// Admissible triple at level n, written out from scratch.
fn vertex_ok(t: [u32; 3], n: u32) -> bool {
    let [a, b, c] = t;
    let s = a + b + c;
    if s % 2 == 1 || a > b + c || b > a + c || c > a + b {
        return false;
    }
    if n % 2 == 1 {
        t.iter().all(|x| x % 2 == 0 && x + 2 <= n) && s + 4 <= 2 * n
    } else {
        t.iter().all(|x| x + 2 <= n / 2) && s + 4 <= n
    }
}

fn color_ok(x: u32, n: u32) -> bool {
    if n % 2 == 1 {
        x % 2 == 0 && x + 2 <= n
    } else {
        x + 2 <= n / 2
    }
}

fn brute_force_dim(spine: &PartialSpine, n: u32) -> usize {
    let (ne, nc) = (spine.edge_count(), spine.circle_count());
    let total = ne + nc;
    let mut count = 0;
    let mut w = vec![0u32; total];
    loop {
        let edges_ok = (0..spine.vertex_count()).all(|v| {
            let es = spine.vertex_edges(v);
            vertex_ok([w[es[0]], w[es[1]], w[es[2]]], n)
        });
        if edges_ok && w[ne..].iter().all(|&x| color_ok(x, n)) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == total {
                return count;
            }
            w[i] += 1;
            if w[i] <= n {
                break;
            }
            w[i] = 0;
            i += 1;
        }
    }
}

fn verlinde(g: u32, n: u32) -> f64 {
    let e = 2.0 - 2.0 * g as f64;
    if n % 2 == 1 {
        let s: f64 = (1..=(n - 1) / 2).map(|j| (2.0 * PI * j as f64 / n as f64).sin().powf(e)).sum();
        (n as f64 / 4.0).powi(g as i32 - 1) * s
    } else {
        let r = n / 2;
        let s: f64 = (1..r).map(|j| (PI * j as f64 / r as f64).sin().powf(e)).sum();
        (r as f64 / 2.0).powi(g as i32 - 1) * s
    }
}

#[test]
fn dimensions_match_brute_force_and_verlinde() {
    for g in 1..=3 {
        let s = standard_spine(g).unwrap();
        for n in 3..=10 {
            let d = dim(&s, n);
            assert_eq!(d, brute_force_dim(&s, n), "g={g} N={n}");
            assert_eq!(d as f64, verlinde(g, n).round(), "g={g} N={n}");
        }
    }
    let s4 = standard_spine(4).unwrap();
    for n in [5, 6, 7] {
        assert_eq!(dim(&s4, n) as f64, verlinde(4, n).round(), "g=4 N={n}");
    }
    assert_eq!(dim(&standard_spine(2).unwrap(), 5), 5);
    assert_eq!(dim(&standard_spine(3).unwrap(), 7), 98);
}

#[test]
fn enumeration_is_sorted_distinct_and_admissible() {
    let s = standard_spine(3).unwrap();
    for n in [5, 6, 7] {
        let ws = enumerate_weights(&s, n);
        assert!(ws.windows(2).all(|p| p[0] < p[1]));
        assert!(ws.iter().all(|w| is_admissible(&s, w, n)));
    }
}

fn check_flip_involution(g: u32, n: u32) {
    let rep = SpineRep::new(standard_spine(g).unwrap(), n);
    for e in 0..rep.spine().edge_count() {
        let fwd = flip(&rep, e).unwrap();
        let back = flip(&fwd.target, e).unwrap();
        assert_eq!(fwd.target.dim(), rep.dim());
        let id = OperatorMatrix::identity(rep.dim(), rep.ring());
        assert_eq!(&back.matrix * &fwd.matrix, id, "g={g} N={n} edge {e}");
    }
}

#[test]
fn flipping_twice_is_the_identity() {
    check_flip_involution(2, 5);
    check_flip_involution(2, 7);
    check_flip_involution(3, 5);
}

#[test]
fn loops_cannot_be_flipped() {
    let theta = standard_spine(2).unwrap();
    let barbell = flip_spine(&theta, 0).unwrap();
    let loops: Vec<usize> = (0..3).filter(|&e| barbell.is_loop(e)).collect();
    assert_eq!(loops.len(), 2);
    for e in loops {
        assert!(!is_flippable(&barbell, e));
        let rep = SpineRep::new(barbell.clone(), 5);
        assert!(matches!(flip(&rep, e), Err(SpineError::NonFlippableEdge(_))));
    }
}

#[test]
fn boundary_operators_separate_the_basis() {
    for (g, n) in [(1, 5), (2, 5), (2, 7), (3, 5), (2, 8)] {
        let rep = SpineRep::new(standard_spine(g).unwrap(), n);
        let ops: Vec<OperatorMatrix> = rep
            .spine()
            .components()
            .into_iter()
            .map(|c| rep.boundary_curve_operator(c))
            .collect();
        for x in &ops {
            for y in &ops {
                assert_eq!(x * y, y * x);
            }
        }
        // joint eigenvalues determine the basis vector
        let joint: BTreeSet<String> = (0..rep.dim())
            .map(|i| ops.iter().map(|m| m.get(i, i).to_string()).collect::<Vec<_>>().join("|"))
            .collect();
        assert_eq!(joint.len(), rep.dim(), "g={g} N={n}");
    }
}

#[test]
fn boundary_eigenvalues_are_distinct_per_color() {
    for n in [5u32, 7, 9] {
        let rep = SpineRep::new(standard_spine(1).unwrap(), n);
        let m = rep.boundary_curve_operator(Component::Circle(0));
        let vals: Vec<&Scalar> = (0..rep.dim()).map(|i| m.get(i, i)).collect();
        for i in 0..vals.len() {
            for j in 0..i {
                assert_ne!(vals[i], vals[j], "N={n}");
            }
        }
    }
}

#[test]
fn every_basis_vector_reduces_to_zero() {
    for n in [5, 6, 7, 8] {
        for g in 1..=3 {
            let s = standard_spine(g).unwrap();
            for w in enumerate_weights(&s, n) {
                let trace = reduce_trace(&s, &w, n).unwrap();
                assert_eq!(trace.is_empty(), w.is_zero());
                let mut prev = None;
                for m in &trace {
                    assert!(m.after < m.before);
                    if let Some(p) = prev {
                        assert_eq!(m.before, p);
                    }
                    prev = Some(m.after);
                    if let Some(c) = &m.coefficient {
                        assert!(!c.is_zero());
                    }
                    assert_ne!(m.case, ReductionCase::Done);
                }
                if let Some(last) = trace.last() {
                    assert!(last.result().1.is_zero(), "g={g} N={n} {w}");
                }
            }
        }
    }
}

#[test]
fn odd_and_even_levels_thread_different_curves() {
    let s = standard_spine(1).unwrap();
    let odd = reduce_trace(&s, &WeightSystem::new(vec![], vec![2]), 7).unwrap();
    assert_eq!(odd.iter().map(|m| m.case.number()).collect::<Vec<_>>(), [4]);
    let even = reduce_trace(&s, &WeightSystem::new(vec![], vec![2]), 8).unwrap();
    assert_eq!(even.iter().map(|m| m.case.number()).collect::<Vec<_>>(), [5, 5]);
}

#[test]
fn deleting_a_zero_edge_is_a_bijection_on_weights() {
    for (g, n) in [(2, 5), (2, 7), (3, 5), (3, 6)] {
        let s = standard_spine(g).unwrap();
        let all = enumerate_weights(&s, n);
        for e in 0..s.edge_count() {
            let zero: Vec<&WeightSystem> = all.iter().filter(|w| w.edges[e] == 0).collect();
            let mut images = BTreeSet::new();
            let mut target = None;
            for w in &zero {
                let (s2, w2, _) = delete_zero_edge(&s, w, e);
                assert!(is_admissible(&s2, &w2, n));
                assert!(images.insert(w2));
                target = Some(s2);
            }
            let target = target.unwrap();
            assert_eq!(images.len(), enumerate_weights(&target, n).len(), "g={g} N={n} e={e}");
        }
    }
}

#[test]
fn theta_with_a_zero_edge_becomes_a_circle() {
    let theta = standard_spine(2).unwrap();
    let w = WeightSystem::new(vec![2, 2, 0], vec![]);
    let (s2, w2, _) = delete_zero_edge(&theta, &w, 2);
    assert_eq!((s2.vertex_count(), s2.edge_count(), s2.circle_count()), (0, 0, 1));
    assert_eq!(w2, WeightSystem::new(vec![], vec![2]));
}

#[test]
fn spine_text_round_trips() {
    for g in 1..=4 {
        let s = standard_spine(g).unwrap();
        let back = PartialSpine::parse(&s.to_text()).unwrap();
        assert_eq!(back.to_text(), s.to_text());
        assert_eq!(dim(&back, 7), dim(&s, 7));
    }
}

#[test]
fn malformed_spines_are_rejected() {
    let cases = [
        ("vertex u\nedge e0 u w\n", "unknown vertex"),
        ("vertex u\nbogus\n", "unrecognised"),
        ("circle c\ncircle c\n", "duplicate"),
    ];
    for (text, what) in cases {
        match PartialSpine::parse(text) {
            Err(SpineError::Parse { msg, .. }) => assert!(msg.contains(what), "{msg}"),
            other => panic!("{text:?}: {other:?}"),
        }
    }
    let degree_two = "vertex u\nvertex v\nedge a u v\nedge b u v\n";
    assert!(matches!(PartialSpine::parse(degree_two), Err(SpineError::BadVertex { .. })));
    assert_eq!(standard_spine(0).unwrap_err(), SpineError::UnsupportedGenus(0));
}

#[test]
fn spine_curves_need_a_circle_or_loop() {
    let rep = SpineRep::new(standard_spine(2).unwrap(), 5);
    let z = skeinwrt::chebyshev_annulus::AnnulusElement::z();
    assert!(matches!(
        rep.spine_curve_operator(Component::Edge(0), &z),
        Err(SpineError::IncompatibleComponent(_))
    ));
    assert_eq!(verify_shadow(2, 6).unwrap_err(), SpineError::EvenN(6));
}
