//! Admissible weight systems, which index the basis of the representation.

use std::fmt;

use crate::recoupling::{admissible_colors, is_admissible_color, is_admissible_weight};

use super::spine::{Component, PartialSpine};

/// Colors on the edges and circles of a spine, in component order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightSystem {
    pub edges: Vec<u32>,
    pub circles: Vec<u32>,
}

impl WeightSystem {
    pub fn new(edges: Vec<u32>, circles: Vec<u32>) -> Self {
        WeightSystem { edges, circles }
    }

    pub fn zero(spine: &PartialSpine) -> Self {
        WeightSystem::new(vec![0; spine.edge_count()], vec![0; spine.circle_count()])
    }

    pub fn is_zero(&self) -> bool {
        self.edges.iter().chain(&self.circles).all(|&w| w == 0)
    }

    /// Largest color on any component.
    pub fn max(&self) -> u32 {
        self.edges.iter().chain(&self.circles).copied().max().unwrap_or(0)
    }

    /// Parse a weight list. Either named, `"e0=2,e1=2,e2=0"` (every
    /// component exactly once, any order), or positional, `"2,2,0"` for
    /// edges and `"2,2,0;4"` for edges then circles. A spine without edges
    /// takes just the circle list, e.g. `"4"`.
    pub fn parse(text: &str, spine: &PartialSpine) -> Option<Self> {
        if text.contains('=') {
            return Self::parse_named(text, spine);
        }
        let list = |s: &str| -> Option<Vec<u32>> {
            let s = s.trim();
            if s.is_empty() {
                return Some(Vec::new());
            }
            s.split(',').map(|t| t.trim().parse().ok()).collect()
        };
        let (edges, circles) = match text.split_once(';') {
            Some((e, c)) => (list(e)?, list(c)?),
            None if spine.edge_count() == 0 => (Vec::new(), list(text)?),
            None => (list(text)?, Vec::new()),
        };
        let w = WeightSystem::new(edges, circles);
        (w.edges.len() == spine.edge_count() && w.circles.len() == spine.circle_count()).then_some(w)
    }

    fn parse_named(text: &str, spine: &PartialSpine) -> Option<Self> {
        let mut edges = vec![None; spine.edge_count()];
        let mut circles = vec![None; spine.circle_count()];
        for item in text.split([',', ' ', ';']).filter(|t| !t.trim().is_empty()) {
            let (name, val) = item.split_once('=')?;
            let val: u32 = val.trim().parse().ok()?;
            let slot = match spine.component_by_name(name.trim())? {
                Component::Edge(e) => &mut edges[e],
                Component::Circle(i) => &mut circles[i],
            };
            if slot.replace(val).is_some() {
                return None;
            }
        }
        Some(WeightSystem::new(
            edges.into_iter().collect::<Option<_>>()?,
            circles.into_iter().collect::<Option<_>>()?,
        ))
    }

    /// The named form accepted by [`WeightSystem::parse`].
    pub fn to_named(&self, spine: &PartialSpine) -> String {
        spine
            .components()
            .into_iter()
            .map(|c| {
                let w = match c {
                    Component::Edge(e) => self.edges[e],
                    Component::Circle(i) => self.circles[i],
                };
                format!("{}={w}", spine.component_name(c))
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        if self.circles.is_empty() {
            write!(f, "{}", join(&self.edges))
        } else if self.edges.is_empty() {
            write!(f, "{}", join(&self.circles))
        } else {
            write!(f, "{};{}", join(&self.edges), join(&self.circles))
        }
    }
}

/// Whether `w` is an `n`-admissible coloring of `spine`.
pub fn is_admissible(spine: &PartialSpine, w: &WeightSystem, n: u32) -> bool {
    w.edges.len() == spine.edge_count()
        && w.circles.len() == spine.circle_count()
        && w.circles.iter().all(|&c| is_admissible_color(c, n))
        && w.edges.iter().all(|&c| is_admissible_color(c, n))
        && (0..spine.vertex_count()).all(|v| {
            is_admissible_weight(spine.vertex_edges(v).map(|e| w.edges[e]), n)
        })
}

/// All admissible weight systems in lexicographic order.
pub fn enumerate_weights(spine: &PartialSpine, n: u32) -> Vec<WeightSystem> {
    let colors = admissible_colors(n);
    let ne = spine.edge_count();
    // the vertex checks that become decidable once edge i is colored
    let mut ready: Vec<Vec<usize>> = vec![Vec::new(); ne];
    for v in 0..spine.vertex_count() {
        let last = *spine.vertex_edges(v).iter().max().unwrap();
        ready[last].push(v);
    }
    let mut edge_lists = Vec::new();
    let mut cur = vec![0u32; ne];
    fn dfs(
        i: usize,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
        colors: &[u32],
        ready: &[Vec<usize>],
        spine: &PartialSpine,
        n: u32,
    ) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for &c in colors {
            cur[i] = c;
            let ok = ready[i]
                .iter()
                .all(|&v| is_admissible_weight(spine.vertex_edges(v).map(|e| cur[e]), n));
            if ok {
                dfs(i + 1, cur, out, colors, ready, spine, n);
            }
        }
    }
    dfs(0, &mut cur, &mut edge_lists, &colors, &ready, spine, n);

    let mut circle_lists: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..spine.circle_count() {
        circle_lists = circle_lists
            .into_iter()
            .flat_map(|l| {
                colors.iter().map(move |&c| {
                    let mut l = l.clone();
                    l.push(c);
                    l
                })
            })
            .collect();
    }
    let mut out = Vec::with_capacity(edge_lists.len() * circle_lists.len());
    for e in &edge_lists {
        for c in &circle_lists {
            out.push(WeightSystem::new(e.clone(), c.clone()));
        }
    }
    out
}

/// Dimension of the representation space for `spine` at level `n`.
pub fn dim(spine: &PartialSpine, n: u32) -> usize {
    enumerate_weights(spine, n).len()
}
