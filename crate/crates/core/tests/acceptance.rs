//! Acceptance run: one line per criterion, exit status 1 if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use skeinwrt::chebyshev_annulus::{
    chebyshev, reduce_index, reduce_wrt, shadow_check, AnnulusElement, ChebKind,
};
use skeinwrt::recoupling::{is_admissible_weight, minimal_flip_color, six_j, tet, theta, SixJ};
use skeinwrt::scalars::{quantum_integer, Scalar, ScalarRing};
use skeinwrt::spine_rep::{
    dim, enumerate_weights, flip, flip_symbol, reduce_step, standard_spine, verify_irreducible,
    BurnsideBudget, Component, OperatorMatrix, ReductionCase, SpineRep,
};
use skeinwrt::tl_net::{colored_loop_value, eval_network, jones_wenzl, ColoredNetwork, TLElement};

const G: ScalarRing = ScalarRing::Generic;

type Check = fn() -> Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn jones_wenzl_suite() -> Result<(), String> {
    for n in 1..=6 {
        let jw = jones_wenzl(n, G).map_err(|e| e.to_string())?;
        ensure(jw.compose(&jw).unwrap() == jw, || format!("JW_{n} is not idempotent"))?;
        for i in 1..n {
            let e = TLElement::cupcap(n, i, G);
            ensure(jw.compose(&e).unwrap().is_zero(), || format!("JW_{n} e_{i} != 0"))?;
            ensure(e.compose(&jw).unwrap().is_zero(), || format!("e_{i} JW_{n} != 0"))?;
        }
    }
    let jw4 = jones_wenzl(4, G).unwrap();
    let expected = quantum_integer(3, G).checked_div(&quantum_integer(4, G)).unwrap();
    for i in [1, 3] {
        let c = jw4.coeff(&skeinwrt::tl_net::PlanarMatching::cupcap(4, i));
        ensure(c == expected, || format!("JW_4 coefficient of e_{i} is {c}"))?;
    }
    Ok(())
}

fn oracle_equality() -> Result<(), String> {
    let r = 0..=4u32;
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                if !is_admissible_weight_generic([a, b, c]) {
                    continue;
                }
                let net = eval_network(&ColoredNetwork::theta(a, b, c), G).unwrap();
                ensure(theta(a, b, c, G).unwrap() == net, || format!("theta({a},{b},{c})"))?;
            }
        }
    }
    for a in r.clone() {
        for b in r.clone() {
            for e in r.clone() {
                for c in r.clone() {
                    for d in r.clone() {
                        for f in r.clone() {
                            let s = SixJ::new(a, b, e, c, d, f);
                            if !s.is_admissible() {
                                continue;
                            }
                            let t = eval_network(&ColoredNetwork::tetrahedron(a, b, e, c, d, f), G)
                                .unwrap();
                            ensure(tet(s, G).unwrap() == t, || format!("tet {s}"))?;
                            let th1 = eval_network(&ColoredNetwork::theta(a, d, e), G).unwrap();
                            let th2 = eval_network(&ColoredNetwork::theta(b, c, e), G).unwrap();
                            let from_nets = (&t * &colored_loop_value(e, G))
                                .checked_div(&(&th1 * &th2))
                                .unwrap();
                            ensure(six_j(s, G).unwrap() == from_nets, || format!("six_j {s}"))?;
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn is_admissible_weight_generic([a, b, c]: [u32; 3]) -> bool {
    (a + b + c) % 2 == 0 && a <= b + c && b <= a + c && c <= a + b
}

fn flip_contracts() -> Result<(), String> {
    for n in [5, 7] {
        let rep = SpineRep::new(standard_spine(2).unwrap(), n);
        for e0 in 0..3 {
            let fwd = flip(&rep, e0).map_err(|e| e.to_string())?;
            let back = flip(&fwd.target, e0).map_err(|e| e.to_string())?;
            let id = OperatorMatrix::identity(rep.dim(), rep.ring());
            ensure(&back.matrix * &fwd.matrix == id, || format!("N={n} edge {e0}: round trip"))?;
            for (col, w) in rep.basis().iter().enumerate() {
                let s = flip_symbol(rep.spine(), e0, w, 0);
                let m = minimal_flip_color(s.a, s.b, s.c, s.d);
                let mut w2 = w.clone();
                w2.edges[e0] = m;
                let row = fwd
                    .target
                    .index_of(&w2)
                    .ok_or_else(|| format!("N={n} {w}: minimal color {m} not admissible"))?;
                ensure(!fwd.matrix.get(row, col).is_zero(), || {
                    format!("N={n} {w}: zero entry at the minimal color {m}")
                })?;
            }
        }
    }
    Ok(())
}

fn eigenvalue_separation() -> Result<(), String> {
    for n in [5u32, 7, 9] {
        let ring = ScalarRing::Cyclotomic(n);
        let vals: Vec<Scalar> = (0..n)
            .filter(|&i| is_admissible_weight([i, i, 0], n))
            .map(|i| {
                let k = 2 * (i as i64 + 1);
                -(&Scalar::a_power(k, ring) + &Scalar::a_power(-k, ring))
            })
            .collect();
        ensure(vals.len() == (n as usize - 1) / 2, || format!("N={n}: admissible range"))?;
        for (i, x) in vals.iter().enumerate() {
            ensure(!x.is_zero(), || format!("N={n}: eigenvalue {i} vanishes"))?;
            for y in &vals[..i] {
                ensure(x != y, || format!("N={n}: repeated eigenvalue {x}"))?;
            }
        }
        let rep = SpineRep::new(standard_spine(1).unwrap(), n);
        let m = rep.boundary_curve_operator(Component::Circle(0));
        let diag: Vec<Scalar> = (0..rep.dim()).map(|i| m.get(i, i).clone()).collect();
        ensure(diag == vals, || format!("N={n}: operator diagonal differs"))?;
    }
    Ok(())
}

// Admissible color tuples on a spine, filtered from all tuples in 0..=n.
fn brute_force_dim(g: u32, n: u32) -> usize {
    let s = standard_spine(g).unwrap();
    let ok = |x: u32| {
        if n % 2 == 1 {
            x % 2 == 0 && x + 2 <= n
        } else {
            x + 2 <= n / 2
        }
    };
    let vertex = |[a, b, c]: [u32; 3]| {
        let sum = a + b + c;
        is_admissible_weight_generic([a, b, c])
            && ok(a)
            && ok(b)
            && ok(c)
            && sum + 4 <= if n % 2 == 1 { 2 * n } else { n }
    };
    let total = s.edge_count() + s.circle_count();
    let mut count = 0;
    let mut w = vec![0u32; total];
    'outer: loop {
        let good = (0..s.vertex_count()).all(|v| {
            let es = s.vertex_edges(v);
            vertex([w[es[0]], w[es[1]], w[es[2]]])
        }) && w[s.edge_count()..].iter().all(|&x| ok(x));
        count += usize::from(good);
        for x in w.iter_mut() {
            *x += 1;
            if *x <= n {
                continue 'outer;
            }
            *x = 0;
        }
        return count;
    }
}

fn dimensions() -> Result<(), String> {
    for (g, n, d) in [(1, 5, 2), (1, 7, 3), (2, 5, 5), (1, 4, 1)] {
        let got = dim(&standard_spine(g).unwrap(), n);
        let oracle = brute_force_dim(g, n);
        ensure(got == d && oracle == d, || {
            format!("genus {g}, N={n}: enumeration {got}, brute force {oracle}, expected {d}")
        })?;
    }
    Ok(())
}

fn irreducibility() -> Result<(), String> {
    for (g, n, span) in [(1, 5, 4), (1, 7, 9), (2, 5, 25), (1, 3, 1)] {
        let r = verify_irreducible(g, n, BurnsideBudget::default()).map_err(|e| e.to_string())?;
        ensure(r.span == span && r.irreducible(), || {
            format!("genus {g}, N={n}: span {} of {}", r.span, r.dim * r.dim)
        })?;
    }
    Ok(())
}

// z acting on S_0, S_2, ... with S_{N-1} = 0 and odd S_m replaced by
// S_{N-2-m}, over the integers.
fn longitude_oracle(n: usize) -> Vec<Vec<i64>> {
    let d = (n - 1) / 2;
    let mut m = vec![vec![0i64; d]; d];
    for (col, w) in (0..n - 1).step_by(2).enumerate() {
        for k in [w as i64 - 1, w as i64 + 1] {
            if k < 0 || k as usize == n - 1 {
                continue;
            }
            let k = k as usize;
            let even = if k % 2 == 0 { k } else { n - 2 - k };
            m[even / 2][col] += 1;
        }
    }
    m
}

fn classical_shadow() -> Result<(), String> {
    for n in [3u32, 5, 7] {
        let ring = ScalarRing::Cyclotomic(n);
        for w in (0..n - 1).step_by(2) {
            let v = shadow_check(w, n).map_err(|e| e.to_string())?;
            ensure(v == Scalar::from_int(-2, ring), || format!("N={n} color {w}: {v}"))?;
        }
        let rep = SpineRep::new(standard_spine(1).unwrap(), n);
        let m = rep
            .spine_curve_operator(Component::Circle(0), &AnnulusElement::z())
            .map_err(|e| e.to_string())?;
        let oracle = longitude_oracle(n as usize);
        for (i, row) in oracle.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                ensure(*m.get(i, j) == Scalar::from_int(x, ring), || {
                    format!("N={n}: longitude entry ({i},{j})")
                })?;
            }
        }
        let minus_two = OperatorMatrix::scalar(rep.dim(), &Scalar::from_int(-2, ring));
        ensure(m.eval_poly(&chebyshev(ChebKind::T, n)) == minus_two, || {
            format!("N={n}: T_N(M) != -2 Id")
        })?;
    }
    let ring = ScalarRing::Cyclotomic(5);
    let m = SpineRep::new(standard_spine(1).unwrap(), 5)
        .spine_curve_operator(Component::Circle(0), &AnnulusElement::z())
        .unwrap();
    let id = OperatorMatrix::identity(2, ring);
    ensure(&m * &m == &m + &id, || "N=5: M^2 != M + I".into())?;
    Ok(())
}

fn reduction_termination() -> Result<(), String> {
    for n in [5, 7] {
        for g in 1..=3 {
            let spine = standard_spine(g).unwrap();
            for w0 in enumerate_weights(&spine, n) {
                let (mut s, mut w) = (spine.clone(), w0.clone());
                loop {
                    let m = reduce_step(&s, &w, n).map_err(|e| format!("{w0}: {e}"))?;
                    if m.case == ReductionCase::Done {
                        break;
                    }
                    ensure(m.after < m.before, || {
                        format!("genus {g}, N={n}, {w0}: {} to {}", m.before, m.after)
                    })?;
                    if let Some(c) = &m.coefficient {
                        ensure(!c.is_zero(), || format!("{w0}: zero certificate"))?;
                    }
                    let (s2, w2) = m.result();
                    (s, w) = (s2.clone(), w2.clone());
                }
            }
        }
    }
    Ok(())
}

fn chebyshev_relations() -> Result<(), String> {
    let s = |k: u32| chebyshev(ChebKind::S, k);
    for n in [5u32, 7] {
        ensure(reduce_wrt(&s(n - 1), n).unwrap().is_empty(), || format!("N={n}: S_(N-1)"))?;
        for m in -2i64..=n as i64 + 2 {
            let a = reduce_index(n as i64 - 2 - m, n).map_err(|e| e.to_string())?;
            let b = reduce_index(m, n).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("N={n}: S_(N-2-{m}) is {a:?}, S_{m} is {b:?}"))?;
        }
    }
    let p = s(2);
    for w in 0..=10u32 {
        let lhs = &p * &s(w);
        let rhs = match w {
            0 => s(2),
            1 => &s(3) + &s(1),
            _ => &(&s(w + 2) + &s(w)) + &s(w - 2),
        };
        ensure(lhs == rhs, || format!("(z^2-1) S_{w}"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, Check, u64); 9] = [
        ("jones-wenzl suite", jones_wenzl_suite, 10),
        ("theta/tet/6j oracle equality", oracle_equality, 60),
        ("flip contracts", flip_contracts, 30),
        ("eigenvalue separation", eigenvalue_separation, 5),
        ("dimensions", dimensions, 5),
        ("irreducibility", irreducibility, 120),
        ("classical shadow", classical_shadow, 10),
        ("reduction termination", reduction_termination, 60),
        ("chebyshev relations", chebyshev_relations, 5),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(()) if elapsed > Duration::from_secs(limit) => Err("over the time limit".into()),
            o => o,
        };
        let timing = format!("{:.2}s, limit {limit}s", elapsed.as_secs_f64());
        match outcome {
            Ok(()) => println!("PASS [{}] {name} ({timing})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{}] {name} ({timing}): {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
