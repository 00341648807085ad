//! Reduction of a basis vector towards the zero coloring.
//!
//! Each step replaces `(spine, w)` by a pair of strictly smaller complexity
//! and records the nonzero coefficient that certifies the step.

use std::collections::HashMap;
use std::fmt;

use crate::chebyshev_annulus::{chebyshev, curve_action, AnnulusElement, ChebKind};
use crate::recoupling::{minimal_flip_color, six_j};
use crate::scalars::{Scalar, ScalarRing};

use super::flip::{flip_spine, flip_symbol};
use super::spine::{Dart, PartialSpine};
use super::weights::{is_admissible, WeightSystem};
use super::SpineError;

/// `(edge count, largest color, number of components with that color)`,
/// ordered lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Complexity {
    pub edges: usize,
    pub max: u32,
    pub n_max: usize,
}

impl fmt::Display for Complexity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.edges, self.max, self.n_max)
    }
}

pub fn complexity(spine: &PartialSpine, w: &WeightSystem) -> Complexity {
    let max = w.max();
    let n_max = w.edges.iter().chain(&w.circles).filter(|&&c| c == max).count();
    Complexity {
        edges: spine.edge_count(),
        max,
        n_max,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionCase {
    /// Nothing left to do: every color is zero.
    Done,
    /// An edge colored zero is erased.
    DeleteZeroEdge,
    /// The largest color sits on an edge with distinct ends, which is
    /// flipped to its smallest admissible color.
    FlipMaxEdge,
    /// The largest color sits on a loop; the edge next to it is flipped
    /// first.
    FlipNextToLoop,
    /// The largest color sits on a circle and `S_2` is threaded along it.
    ThreadS2,
    /// The largest color sits on a circle and `z` is threaded along it.
    ThreadZ,
}

impl ReductionCase {
    pub fn number(self) -> u8 {
        match self {
            ReductionCase::Done => 0,
            ReductionCase::DeleteZeroEdge => 1,
            ReductionCase::FlipMaxEdge => 2,
            ReductionCase::FlipNextToLoop => 3,
            ReductionCase::ThreadS2 => 4,
            ReductionCase::ThreadZ => 5,
        }
    }
}

/// One reduction step. For [`ReductionCase::FlipNextToLoop`] the step that
/// follows the first flip is stored in `then`, and `after` is the
/// complexity at the end of both.
#[derive(Debug, Clone)]
pub struct ReductionMove {
    pub case: ReductionCase,
    pub description: String,
    pub coefficient: Option<Scalar>,
    pub spine: PartialSpine,
    pub weights: WeightSystem,
    pub before: Complexity,
    pub after: Complexity,
    pub then: Option<Box<ReductionMove>>,
}

impl ReductionMove {
    /// The spine and weights at the end of the whole move.
    pub fn result(&self) -> (&PartialSpine, &WeightSystem) {
        match &self.then {
            Some(m) => m.result(),
            None => (&self.spine, &self.weights),
        }
    }
}

/// Erase zero edge `e` (or the stem of `e` if `e` is a loop). The edges
/// meeting at each of its ends are joined; chains that close up become
/// circles.
pub fn delete_zero_edge(
    spine: &PartialSpine,
    w: &WeightSystem,
    e: usize,
) -> (PartialSpine, WeightSystem, String) {
    let e = spine.loop_stem(e).unwrap_or(e);
    let [(u, _), (v, _)] = spine.edge_ends(e);
    let dead = |x: usize| x == u || x == v;
    let mut pass: HashMap<Dart, Dart> = HashMap::new();
    for x in [u, v] {
        let ds: Vec<Dart> = spine.rotation(x).into_iter().filter(|d| d.0 != e).collect();
        pass.insert(ds[0], ds[1]);
        pass.insert(ds[1], ds[0]);
    }
    let vertex_of = |d: Dart| spine.edge_ends(d.0)[d.1];

    // chains of old edges: (darts at live ends, constituent edges)
    let mut seen = vec![false; spine.edge_count()];
    seen[e] = true;
    let mut paths: Vec<(Dart, Dart, Vec<usize>)> = Vec::new();
    for x in (0..spine.vertex_count()).filter(|&x| !dead(x)) {
        for start in spine.rotation(x) {
            if seen[start.0] {
                continue;
            }
            let mut chain = vec![start.0];
            seen[start.0] = true;
            let mut cur = (start.0, 1 - start.1);
            while dead(vertex_of(cur).0) {
                let next = pass[&cur];
                chain.push(next.0);
                seen[next.0] = true;
                cur = (next.0, 1 - next.1);
            }
            paths.push((start, cur, chain));
        }
    }
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for g in 0..spine.edge_count() {
        if seen[g] {
            continue;
        }
        let mut chain = vec![g];
        seen[g] = true;
        let mut cur = (g, 1);
        loop {
            let next = pass[&cur];
            if next.0 == g {
                break;
            }
            chain.push(next.0);
            seen[next.0] = true;
            cur = (next.0, 1 - next.1);
        }
        cycles.push(chain);
    }

    paths.sort_by_key(|p| *p.2.iter().min().unwrap());
    let name = |chain: &[usize]| {
        chain
            .iter()
            .map(|&g| spine.edge_name(g))
            .collect::<Vec<_>>()
            .join("+")
    };
    let mut new_dart: HashMap<Dart, Dart> = HashMap::new();
    let mut edge_names = Vec::new();
    let mut edge_weights = Vec::new();
    for (i, (start, end, chain)) in paths.iter().enumerate() {
        new_dart.insert(*start, (i, 0));
        new_dart.insert(*end, (i, 1));
        edge_names.push(name(chain));
        edge_weights.push(w.edges[chain[0]]);
    }
    let (vnames_old, rot_old, _, mut circles, genus) = spine.clone().into_parts();
    let mut vnames = Vec::new();
    let mut rotations = Vec::new();
    for x in (0..vnames_old.len()).filter(|&x| !dead(x)) {
        vnames.push(vnames_old[x].clone());
        rotations.push(rot_old[x].map(|d| new_dart[&d]));
    }
    let mut circle_weights = w.circles.clone();
    for chain in &cycles {
        circles.push(name(chain));
        circle_weights.push(w.edges[chain[0]]);
    }
    let out = PartialSpine::new(vnames, rotations, edge_names, circles, genus)
        .expect("edge deletion keeps the rotation system valid");
    let note = format!("delete zero edge {}", spine.edge_name(e));
    (out, WeightSystem::new(edge_weights, circle_weights), note)
}

fn nonzero(c: Scalar, what: impl Fn() -> String) -> Result<Scalar, SpineError> {
    if c.is_zero() {
        Err(SpineError::ReductionStuck(format!("{} vanishes", what())))
    } else {
        Ok(c)
    }
}

fn flip_step(
    spine: &PartialSpine,
    w: &WeightSystem,
    e0: usize,
    n: u32,
) -> Result<(PartialSpine, WeightSystem, Scalar, String), SpineError> {
    let probe = flip_symbol(spine, e0, w, 0);
    let new_color = minimal_flip_color(probe.a, probe.b, probe.c, probe.d);
    let s = flip_symbol(spine, e0, w, new_color);
    let coef = nonzero(six_j(s, ScalarRing::Cyclotomic(n))?, || format!("6j-symbol {s}"))?;
    let spine2 = flip_spine(spine, e0)?;
    let mut w2 = w.clone();
    w2.edges[e0] = new_color;
    if !is_admissible(&spine2, &w2, n) {
        return Err(SpineError::ReductionStuck(format!(
            "flip of {} to color {new_color} is not admissible",
            spine.edge_name(e0)
        )));
    }
    let note = format!(
        "flip {} from color {} to {new_color} via {s}",
        spine.edge_name(e0),
        w.edges[e0]
    );
    Ok((spine2, w2, coef, note))
}

/// One reduction step at level `n`.
pub fn reduce_step(
    spine: &PartialSpine,
    w: &WeightSystem,
    n: u32,
) -> Result<ReductionMove, SpineError> {
    let before = complexity(spine, w);
    let done = |case, description: String, coefficient, spine: PartialSpine, weights| {
        let after = complexity(&spine, &weights);
        ReductionMove {
            case,
            description,
            coefficient,
            spine,
            weights,
            before,
            after,
            then: None,
        }
    };
    if w.is_zero() {
        return Ok(done(ReductionCase::Done, "all colors zero".into(), None, spine.clone(), w.clone()));
    }
    if let Some(e) = w.edges.iter().position(|&c| c == 0) {
        let (s2, w2, note) = delete_zero_edge(spine, w, e);
        return Ok(done(ReductionCase::DeleteZeroEdge, note, None, s2, w2));
    }
    let max = w.max();
    let max_edges: Vec<usize> = (0..spine.edge_count()).filter(|&e| w.edges[e] == max).collect();
    if let Some(&e0) = max_edges.iter().find(|&&e| !spine.is_loop(e)) {
        let (s2, w2, coef, note) = flip_step(spine, w, e0, n)?;
        return Ok(done(ReductionCase::FlipMaxEdge, note, Some(coef), s2, w2));
    }
    if let Some(&e0) = max_edges.first() {
        let e1 = spine.loop_stem(e0).expect("max edges here are loops");
        let (s2, w2, coef, note) = flip_step(spine, w, e1, n)?;
        let next = reduce_step(&s2, &w2, n)?;
        let after = next.after;
        return Ok(ReductionMove {
            case: ReductionCase::FlipNextToLoop,
            description: format!("loop {} carries the maximum; {note}", spine.edge_name(e0)),
            coefficient: Some(coef),
            spine: s2,
            weights: w2,
            before,
            after,
            then: Some(Box::new(next)),
        });
    }
    let i = w.circles.iter().position(|&c| c == max).unwrap();
    let (case, p, step, label) = if n % 2 == 1 {
        (ReductionCase::ThreadS2, chebyshev(ChebKind::S, 2), 2, "S_2")
    } else {
        (ReductionCase::ThreadZ, AnnulusElement::z(), 1, "z")
    };
    let action = curve_action(max, &p, n)?;
    let c = action.get(&(max - step)).cloned().unwrap_or_default();
    let coef = nonzero(Scalar::from_bigint(c, ScalarRing::Cyclotomic(n)), || {
        format!("coefficient of S_{} in {label}*S_{max}", max - step)
    })?;
    let mut w2 = w.clone();
    w2.circles[i] = max - step;
    let note = format!(
        "thread {label} on circle {}: color {max} to {}",
        spine.circle_name(i),
        max - step
    );
    Ok(done(case, note, Some(coef), spine.clone(), w2))
}

/// Reduce `w` on `spine` to the zero coloring, returning every step (none
/// when `w` is already zero). Each step is checked to lower the
/// complexity.
pub fn reduce_trace(
    spine: &PartialSpine,
    w: &WeightSystem,
    n: u32,
) -> Result<Vec<ReductionMove>, SpineError> {
    if !is_admissible(spine, w, n) {
        return Err(SpineError::Inadmissible(w.to_string()));
    }
    let mut moves = Vec::new();
    let (mut s, mut w) = (spine.clone(), w.clone());
    loop {
        let m = reduce_step(&s, &w, n)?;
        if m.case == ReductionCase::Done {
            return Ok(moves);
        }
        if m.after >= m.before {
            return Err(SpineError::ReductionStuck(format!(
                "complexity did not drop: {} to {}",
                m.before, m.after
            )));
        }
        let (s2, w2) = m.result();
        (s, w) = (s2.clone(), w2.clone());
        moves.push(m);
    }
}
