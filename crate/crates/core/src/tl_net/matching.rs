//! Noncrossing perfect matchings on the boundary of a rectangle.
//!
//! Points `0..n` sit on the bottom edge left to right and `n..2n` on the top
//! edge left to right. Going once around the boundary visits the bottom
//! points left to right and then the top points right to left; a matching is
//! planar exactly when it is noncrossing in that cyclic order.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarMatching {
    n: usize,
    partner: Vec<usize>,
}

impl PlanarMatching {
    /// Build from an explicit partner table, checking that it is a fixed-point
    /// free involution with no crossings.
    pub fn from_partner(partner: Vec<usize>) -> Option<Self> {
        if partner.len() % 2 != 0 {
            return None;
        }
        let m = PlanarMatching {
            n: partner.len() / 2,
            partner,
        };
        m.is_valid().then_some(m)
    }

    fn is_valid(&self) -> bool {
        let len = self.partner.len();
        let involution = self
            .partner
            .iter()
            .enumerate()
            .all(|(i, &j)| j < len && j != i && self.partner[j] == i);
        if !involution {
            return false;
        }
        // noncrossing iff the boundary word is a balanced parenthesisation
        let mut stack = Vec::new();
        for p in self.boundary_order() {
            let q = self.partner[p];
            if stack.last() == Some(&q) {
                stack.pop();
            } else {
                stack.push(p);
            }
        }
        stack.is_empty()
    }

    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|i| (i + n) % (2 * n)).collect();
        PlanarMatching { n, partner }
    }

    /// The cup-cap `e_i` for `1 <= i < n`: bottom points `i-1, i` are joined,
    /// as are top points `i-1, i`; all other strands run straight through.
    pub fn cupcap(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "e_{i} does not exist on {n} strands");
        let mut m = Self::identity(n);
        let (a, b) = (i - 1, i);
        m.partner[a] = b;
        m.partner[b] = a;
        m.partner[n + a] = n + b;
        m.partner[n + b] = n + a;
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partner(&self, p: usize) -> usize {
        self.partner[p]
    }

    pub fn partners(&self) -> &[usize] {
        &self.partner
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// Points in cyclic boundary order.
    pub fn boundary_order(&self) -> impl Iterator<Item = usize> {
        let n = self.n;
        (0..n).chain((n..2 * n).rev())
    }

    /// Balanced-parenthesis word read in boundary order.
    pub fn to_parens(&self) -> String {
        let mut pos = vec![0; 2 * self.n];
        for (k, p) in self.boundary_order().enumerate() {
            pos[p] = k;
        }
        self.boundary_order()
            .map(|p| if pos[p] < pos[self.partner[p]] { '(' } else { ')' })
            .collect()
    }

    /// Number of cup-caps on the bottom edge (arcs with both ends there).
    pub fn bottom_caps(&self) -> usize {
        (0..self.n).filter(|&p| self.partner[p] < p).count()
    }

    /// Add `k` straight strands on the right.
    pub fn tensor_identity(&self, k: usize) -> Self {
        let (n, m) = (self.n, self.n + k);
        let lift = |p: usize| if p < n { p } else { p + k };
        let mut partner = vec![0; 2 * m];
        for p in 0..2 * n {
            partner[lift(p)] = lift(self.partner[p]);
        }
        for j in n..m {
            partner[j] = m + j;
            partner[m + j] = j;
        }
        PlanarMatching { n: m, partner }
    }

    /// Stack `self` on top of `below`, gluing the top of `below` to the bottom
    /// of `self`. Returns the resulting matching and the number of closed
    /// loops formed in the middle.
    pub fn stack_on(&self, below: &Self) -> (Self, usize) {
        assert_eq!(self.n, below.n, "strand count mismatch");
        let n = self.n;
        let mut partner = vec![usize::MAX; 2 * n];
        let mut seen_mid = vec![false; n];
        // Walk from an outer point; `in_below` tracks which diagram we are in.
        let walk = |start_in_below: bool, start: usize, seen_mid: &mut Vec<bool>| -> usize {
            let mut in_below = start_in_below;
            let mut p = start;
            loop {
                let q = if in_below { below.partner[p] } else { self.partner[p] };
                if in_below {
                    if q < n {
                        return q;
                    }
                    seen_mid[q - n] = true;
                    in_below = false;
                    p = q - n;
                } else {
                    if q >= n {
                        return n + (q - n);
                    }
                    seen_mid[q] = true;
                    in_below = true;
                    p = q + n;
                }
            }
        };
        for s in 0..2 * n {
            if partner[s] != usize::MAX {
                continue;
            }
            let t = if s < n {
                walk(true, s, &mut seen_mid)
            } else {
                walk(false, s, &mut seen_mid)
            };
            partner[s] = t;
            partner[t] = s;
        }
        let mut loops = 0;
        for m in 0..n {
            if seen_mid[m] {
                continue;
            }
            loops += 1;
            // trace the closed loop through the middle row
            let mut cur = m;
            loop {
                seen_mid[cur] = true;
                let up = self.partner[cur];
                debug_assert!(up < n);
                seen_mid[up] = true;
                let down = below.partner[n + up];
                debug_assert!(down >= n);
                cur = down - n;
                if cur == m {
                    break;
                }
            }
        }
        (PlanarMatching { n, partner }, loops)
    }

    /// Number of loops in the Markov closure (top `i` joined to bottom `i`
    /// around the side).
    pub fn closure_loops(&self) -> usize {
        let n = self.n;
        let mut seen = vec![false; 2 * n];
        let mut loops = 0;
        for s in 0..2 * n {
            if seen[s] {
                continue;
            }
            loops += 1;
            let mut p = s;
            loop {
                seen[p] = true;
                let q = self.partner[p];
                seen[q] = true;
                p = if q < n { q + n } else { q - n };
                if seen[p] {
                    break;
                }
            }
        }
        loops
    }

    /// All noncrossing matchings on `2n` points, in sorted order.
    pub fn all(n: usize) -> Vec<Self> {
        fn words(open: usize, close: usize, cur: &mut String, out: &mut Vec<String>) {
            if open == 0 && close == 0 {
                out.push(cur.clone());
                return;
            }
            if open > 0 {
                cur.push('(');
                words(open - 1, close + 1, cur, out);
                cur.pop();
            }
            if close > 0 {
                cur.push(')');
                words(open, close - 1, cur, out);
                cur.pop();
            }
        }
        let mut ws = Vec::new();
        words(n, 0, &mut String::new(), &mut ws);
        let mut out: Vec<Self> = ws.iter().map(|w| Self::from_parens(n, w).unwrap()).collect();
        out.sort();
        out
    }

    /// Inverse of [`PlanarMatching::to_parens`].
    pub fn from_parens(n: usize, word: &str) -> Option<Self> {
        if word.len() != 2 * n {
            return None;
        }
        let order: Vec<usize> = (0..n).chain((n..2 * n).rev()).collect();
        let mut partner = vec![0; 2 * n];
        let mut stack = Vec::new();
        for (k, ch) in word.chars().enumerate() {
            match ch {
                '(' => stack.push(order[k]),
                ')' => {
                    let p = stack.pop()?;
                    partner[p] = order[k];
                    partner[order[k]] = p;
                }
                _ => return None,
            }
        }
        stack.is_empty().then_some(PlanarMatching { n, partner })
    }
}

impl fmt::Display for PlanarMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_parens())
    }
}

impl fmt::Debug for PlanarMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlanarMatching({})", self.to_parens())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (0..7).map(|n| PlanarMatching::all(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn cupcap_squares_to_a_loop() {
        let e = PlanarMatching::cupcap(2, 1);
        assert_eq!(e.stack_on(&e), (e.clone(), 1));
    }

    #[test]
    fn zigzag() {
        let e1 = PlanarMatching::cupcap(3, 1);
        let e2 = PlanarMatching::cupcap(3, 2);
        let (m, loops) = e1.stack_on(&e2);
        assert_eq!(loops, 0);
        // e1 * e2 * e1 = e1
        assert_eq!(m.stack_on(&e1), (e1.clone(), 0));
        assert!(!m.is_identity());
    }

    #[test]
    fn rejects_crossings() {
        // bottom 0 - top 1 and bottom 1 - top 0 cross
        assert!(PlanarMatching::from_partner(vec![3, 2, 1, 0]).is_none());
        assert!(PlanarMatching::from_partner(vec![2, 3, 0, 1]).is_some());
    }

    #[test]
    fn closure_of_identity() {
        assert_eq!(PlanarMatching::identity(4).closure_loops(), 4);
        assert_eq!(PlanarMatching::cupcap(2, 1).closure_loops(), 1);
    }
}
