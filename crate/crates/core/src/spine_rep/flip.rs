//! Flip moves on spines and the induced change of basis.

use crate::recoupling::{six_j, SixJ};
use crate::scalars::ScalarRing;

use super::matrix::OperatorMatrix;
use super::operators::SpineRep;
use super::spine::{Dart, PartialSpine};
use super::weights::WeightSystem;
use super::SpineError;

/// The darts around an edge `e0` from `u` (end 0) to `v` (end 1):
/// `[e1, e2, e3, e4]`, with `e2`, `e1` following `e0` counterclockwise at
/// `u` and `e4`, `e3` following it at `v`.
fn neighbours(spine: &PartialSpine, e0: usize) -> [Dart; 4] {
    let [(u, k), (v, j)] = spine.edge_ends(e0);
    let ru = spine.rotation(u);
    let rv = spine.rotation(v);
    [ru[(k + 2) % 3], ru[(k + 1) % 3], rv[(j + 2) % 3], rv[(j + 1) % 3]]
}

/// Whether `e` can be flipped: its ends lie at distinct vertices.
pub fn is_flippable(spine: &PartialSpine, e: usize) -> bool {
    e < spine.edge_count() && !spine.is_loop(e)
}

/// The spine obtained by flipping edge `e0`. The edge keeps its index and
/// name; vertex `u` becomes `(e0, e3, e2)` and `v` becomes `(e0, e1, e4)`.
/// Flipping twice gives back the original spine with `u` and `v`
/// exchanged.
pub fn flip_spine(spine: &PartialSpine, e0: usize) -> Result<PartialSpine, SpineError> {
    if !is_flippable(spine, e0) {
        let name = spine.edge_name(e0.min(spine.edge_count().saturating_sub(1)));
        return Err(SpineError::NonFlippableEdge(name.to_string()));
    }
    let [(u, _), (v, _)] = spine.edge_ends(e0);
    let [d1, d2, d3, d4] = neighbours(spine, e0);
    let (vnames, mut rotations, enames, circles, genus) = spine.clone().into_parts();
    rotations[u] = [(e0, 0), d3, d2];
    rotations[v] = [(e0, 1), d1, d4];
    PartialSpine::new(vnames, rotations, enames, circles, genus)
}

/// The 6j-symbol giving the coefficient of `b_{w2}` in the image of `b_w`
/// under the flip at `e0`.
pub fn flip_symbol(spine: &PartialSpine, e0: usize, w: &WeightSystem, new_color: u32) -> SixJ {
    let [d1, d2, d3, d4] = neighbours(spine, e0);
    let c = |d: Dart| w.edges[d.0];
    SixJ::new(c(d1), c(d2), new_color, c(d3), c(d4), w.edges[e0])
}

/// A flip together with its change-of-basis matrix from the old basis to
/// the new one.
#[derive(Debug, Clone)]
pub struct Flip {
    pub edge: usize,
    pub target: SpineRep,
    pub matrix: OperatorMatrix,
}

/// Flip `rep`'s spine at `e0` and build the matrix `C` with
/// `C[w2][w] = {w(e1) w(e2) w2(e0); w(e3) w(e4) w(e0)}`.
pub fn flip(rep: &SpineRep, e0: usize) -> Result<Flip, SpineError> {
    let spine = rep.spine();
    let target = SpineRep::new(flip_spine(spine, e0)?, rep.n());
    let ring = ScalarRing::Cyclotomic(rep.n());
    assert_eq!(target.dim(), rep.dim(), "flips preserve the dimension");
    let mut matrix = OperatorMatrix::zero(rep.dim(), ring);
    for (col, w) in rep.basis().iter().enumerate() {
        for (row, w2) in target.basis().iter().enumerate() {
            let same_elsewhere = w2.circles == w.circles
                && (0..spine.edge_count()).all(|e| e == e0 || w2.edges[e] == w.edges[e]);
            if !same_elsewhere {
                continue;
            }
            let s = flip_symbol(spine, e0, w, w2.edges[e0]);
            matrix.set(row, col, six_j(s, ring)?);
        }
    }
    Ok(Flip {
        edge: e0,
        target,
        matrix,
    })
}

/// Transport an operator on the flipped spine back: `C' M C`, where `C'`
/// is the matrix of the reverse flip.
pub fn conjugate(forward: &Flip, backward: &Flip, m: &OperatorMatrix) -> OperatorMatrix {
    &(&backward.matrix * m) * &forward.matrix
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spine_rep::standard_spine;

    #[test]
    fn theta_flips_to_barbell() {
        let s = standard_spine(2).unwrap();
        let t = flip_spine(&s, 0).unwrap();
        assert!(!t.is_loop(0));
        assert!(t.is_loop(1) && t.is_loop(2));
    }

    #[test]
    fn double_flip_swaps_vertices() {
        for g in 2..5 {
            let s = standard_spine(g).unwrap();
            for e in 0..s.edge_count() {
                let t = flip_spine(&flip_spine(&s, e).unwrap(), e).unwrap();
                let [(u, _), (v, _)] = s.edge_ends(e);
                for x in 0..s.vertex_count() {
                    let y = if x == u { v } else if x == v { u } else { x };
                    let mut a = s.rotation(x).map(|d| d.0);
                    let mut b = t.rotation(y).map(|d| d.0);
                    a.sort();
                    b.sort();
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn flip_matrix_is_inverted_by_the_reverse_flip() {
        let rep = SpineRep::new(standard_spine(2).unwrap(), 5);
        let f = flip(&rep, 0).unwrap();
        let b = flip(&f.target, 0).unwrap();
        assert_eq!(b.target.basis(), rep.basis());
        let id = OperatorMatrix::identity(rep.dim(), rep.ring());
        assert_eq!(&b.matrix * &f.matrix, id);
    }

    #[test]
    fn loops_are_not_flippable() {
        let rep = SpineRep::new(flip_spine(&standard_spine(2).unwrap(), 0).unwrap(), 5);
        assert!(matches!(flip(&rep, 1), Err(SpineError::NonFlippableEdge(_))));
    }
}
