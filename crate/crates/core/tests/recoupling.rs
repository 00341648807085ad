use skeinwrt::recoupling::{
    is_admissible_triple, is_admissible_weight, minimal_flip_color, six_j, tet, theta,
    RecouplingError, SixJ,
};
use skeinwrt::scalars::{Scalar, ScalarRing};
use skeinwrt::tl_net::{colored_loop_value, eval_network, ColoredNetwork};

const G: ScalarRing = ScalarRing::Generic;

fn admissible_symbols(max: u32) -> Vec<SixJ> {
    let mut out = Vec::new();
    let r = 0..=max;
    for a in r.clone() {
        for b in r.clone() {
            for e in r.clone() {
                for c in r.clone() {
                    for d in r.clone() {
                        for f in r.clone() {
                            let s = SixJ::new(a, b, e, c, d, f);
                            if s.is_admissible() {
                                out.push(s);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

// Two vertices joined by `f` on one side and `f2` on the other, with the
// outer edges a, b (left) and c, d (right) running across.
fn prism(a: u32, b: u32, c: u32, d: u32, f: u32, f2: u32) -> ColoredNetwork {
    let mut net = ColoredNetwork::new();
    let u = net.add_vertex("u");
    let v = net.add_vertex("v");
    let l = net.add_vertex("l");
    let r = net.add_vertex("r");
    let e1 = net.add_edge(u, l, a);
    let e2 = net.add_edge(u, l, b);
    let e3 = net.add_edge(v, r, c);
    let e4 = net.add_edge(v, r, d);
    let ef = net.add_edge(u, v, f);
    let eg = net.add_edge(l, r, f2);
    net.set_rotation(u, vec![(ef, 0), (e2, 0), (e1, 0)]);
    net.set_rotation(v, vec![(ef, 1), (e4, 0), (e3, 0)]);
    net.set_rotation(l, vec![(e2, 1), (eg, 0), (e1, 1)]);
    net.set_rotation(r, vec![(eg, 1), (e3, 1), (e4, 1)]);
    net
}

#[test]
fn tet_matches_network_evaluation() {
    for s in admissible_symbols(3) {
        let SixJ { a, b, e, c, d, f } = s;
        let net = eval_network(&ColoredNetwork::tetrahedron(a, b, e, c, d, f), G).unwrap();
        assert_eq!(tet(s, G).unwrap(), net, "{s}");
    }
}

#[test]
fn flip_expansion_closes_up_to_the_prism() {
    // Writing the H diagram through f in the basis through e and closing
    // with an H through f2 gives the prism on one side and tetrahedra on the
    // other; the prism is a multiple of delta(f, f2).
    for a in 0..=2 {
        for b in 0..=2 {
            for c in 0..=2 {
                for d in 0..=2 {
                    for f in 0..=4 {
                        for f2 in 0..=4 {
                            let left = [[a, b, f], [c, d, f], [a, b, f2], [c, d, f2]];
                            if !left.iter().all(|&[x, y, z]| is_admissible_triple(x, y, z)) {
                                continue;
                            }
                            let net = eval_network(&prism(a, b, c, d, f, f2), G).unwrap();
                            let mut sum = Scalar::zero(G);
                            for e in 0..=4 {
                                if !is_admissible_triple(b, c, e) || !is_admissible_triple(a, d, e) {
                                    continue;
                                }
                                let x = six_j(SixJ::new(a, b, e, c, d, f), G).unwrap();
                                let t = tet(SixJ::new(a, b, e, c, d, f2), G).unwrap();
                                sum = &sum + &(&x * &t);
                            }
                            assert_eq!(sum, net, "a={a} b={b} c={c} d={d} f={f} f2={f2}");
                            let expected = if f == f2 {
                                (&theta(a, b, f, G).unwrap() * &theta(c, d, f, G).unwrap())
                                    .checked_div(&colored_loop_value(f, G))
                                    .unwrap()
                            } else {
                                Scalar::zero(G)
                            };
                            assert_eq!(net, expected);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn flipping_back_is_orthogonal() {
    for a in 0..=3 {
        for b in 0..=3 {
            for c in 0..=3 {
                for d in 0..=3 {
                    let fs: Vec<u32> = (0..=6)
                        .filter(|&f| is_admissible_triple(a, b, f) && is_admissible_triple(c, d, f))
                        .collect();
                    let es: Vec<u32> = (0..=6)
                        .filter(|&e| is_admissible_triple(b, c, e) && is_admissible_triple(a, d, e))
                        .collect();
                    for &f in &fs {
                        for &f2 in &fs {
                            let mut sum = Scalar::zero(G);
                            for &e in &es {
                                let there = six_j(SixJ::new(a, b, e, c, d, f), G).unwrap();
                                let back = six_j(SixJ::new(b, c, f2, d, a, e), G).unwrap();
                                sum = &sum + &(&there * &back);
                            }
                            assert_eq!(sum.is_one(), f == f2);
                            assert_eq!(sum.is_zero(), f != f2);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn tet_has_the_klein_four_symmetries() {
    for s in admissible_symbols(3) {
        let SixJ { a, b, e, c, d, f } = s;
        let v = tet(s, G).unwrap();
        assert_eq!(tet(SixJ::new(c, d, e, a, b, f), G).unwrap(), v);
        assert_eq!(tet(SixJ::new(b, a, e, d, c, f), G).unwrap(), v);
        assert_eq!(tet(SixJ::new(d, c, e, b, a, f), G).unwrap(), v);
    }
}

#[test]
fn cyclotomic_values_are_specializations() {
    for n in [5u32, 7] {
        let ring = ScalarRing::Cyclotomic(n);
        for s in admissible_symbols(2) {
            if !s.triples().iter().all(|&t| is_admissible_weight(t, n)) {
                continue;
            }
            let g = six_j(s, G).unwrap().to_ring(ring).unwrap();
            assert_eq!(six_j(s, ring).unwrap(), g, "{s} at N={n}");
        }
    }
}

#[test]
fn minimal_flip_entries_are_nonzero_at_roots() {
    for n in [5u32, 7, 9] {
        let ring = ScalarRing::Cyclotomic(n);
        for s in admissible_symbols(n - 3) {
            if !s.triples()[..2].iter().all(|&t| is_admissible_weight(t, n)) {
                continue;
            }
            let e = minimal_flip_color(s.a, s.b, s.c, s.d);
            let s = SixJ { e, ..s };
            if s.is_admissible() && s.triples().iter().all(|&t| is_admissible_weight(t, n)) {
                assert!(!six_j(s, ring).unwrap().is_zero(), "{s} at N={n}");
            }
        }
    }
}

#[test]
fn inadmissible_inputs_are_reported() {
    assert_eq!(
        six_j(SixJ::new(1, 0, 0, 0, 0, 0), G),
        Err(RecouplingError::Inadmissible([1, 0, 0]))
    );
    assert!(tet(SixJ::new(2, 2, 2, 2, 2, 1), G).is_err());
}
