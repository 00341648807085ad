//! Partial spines: trivalent ribbon graphs plus disjoint circles.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::SpineError;

/// One end of an edge: `(edge, end)` with `end` 0 or 1.
pub type Dart = (usize, usize);

/// A component carrying a weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Component {
    Edge(usize),
    Circle(usize),
}

/// A partial spine. Each vertex lists its three darts in counterclockwise
/// order; an edge with both ends at one vertex is a loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialSpine {
    vertex_names: Vec<String>,
    rotations: Vec<[Dart; 3]>,
    edge_names: Vec<String>,
    // (vertex, slot) of each end, derived from the rotations
    edge_ends: Vec<[(usize, usize); 2]>,
    circles: Vec<String>,
    genus: Option<u32>,
}

impl PartialSpine {
    /// Assemble a spine from its rotation system, checking that every edge
    /// end occurs exactly once.
    pub fn new(
        vertex_names: Vec<String>,
        rotations: Vec<[Dart; 3]>,
        edge_names: Vec<String>,
        circles: Vec<String>,
        genus: Option<u32>,
    ) -> Result<Self, SpineError> {
        assert_eq!(vertex_names.len(), rotations.len());
        let unset = (usize::MAX, usize::MAX);
        let mut edge_ends = vec![[unset; 2]; edge_names.len()];
        for (v, rot) in rotations.iter().enumerate() {
            for (slot, &(e, end)) in rot.iter().enumerate() {
                let bad = |msg: &str| SpineError::BadVertex {
                    vertex: vertex_names[v].clone(),
                    msg: msg.to_string(),
                };
                if e >= edge_names.len() || end > 1 {
                    return Err(bad("dart refers to a missing edge"));
                }
                if edge_ends[e][end] != unset {
                    return Err(bad("edge end used twice"));
                }
                edge_ends[e][end] = (v, slot);
            }
        }
        if let Some(e) = edge_ends.iter().position(|ends| ends.contains(&unset)) {
            return Err(SpineError::BadVertex {
                vertex: String::new(),
                msg: format!("edge {} has a free end", edge_names[e]),
            });
        }
        Ok(PartialSpine {
            vertex_names,
            rotations,
            edge_names,
            edge_ends,
            circles,
            genus,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_names.len()
    }

    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }

    pub fn genus(&self) -> Option<u32> {
        self.genus
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertex_names[v]
    }

    pub fn edge_name(&self, e: usize) -> &str {
        &self.edge_names[e]
    }

    pub fn circle_name(&self, c: usize) -> &str {
        &self.circles[c]
    }

    pub fn rotation(&self, v: usize) -> [Dart; 3] {
        self.rotations[v]
    }

    /// `(vertex, slot)` of each end of `e`.
    pub fn edge_ends(&self, e: usize) -> [(usize, usize); 2] {
        self.edge_ends[e]
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.edge_ends[e][0].0 == self.edge_ends[e][1].0
    }

    /// The other edge at the vertex carrying loop `e`.
    pub fn loop_stem(&self, e: usize) -> Option<usize> {
        if !self.is_loop(e) {
            return None;
        }
        let v = self.edge_ends[e][0].0;
        self.rotations[v].iter().map(|d| d.0).find(|&f| f != e)
    }

    /// Edges first, then circles.
    pub fn components(&self) -> Vec<Component> {
        (0..self.edge_count())
            .map(Component::Edge)
            .chain((0..self.circle_count()).map(Component::Circle))
            .collect()
    }

    pub fn component_name(&self, c: Component) -> &str {
        match c {
            Component::Edge(e) => self.edge_name(e),
            Component::Circle(i) => self.circle_name(i),
        }
    }

    pub fn component_by_name(&self, name: &str) -> Option<Component> {
        if let Some(e) = self.edge_names.iter().position(|n| n == name) {
            return Some(Component::Edge(e));
        }
        self.circles
            .iter()
            .position(|n| n == name)
            .map(Component::Circle)
    }

    /// The edges at each vertex, in rotation order.
    pub fn vertex_edges(&self, v: usize) -> [usize; 3] {
        self.rotations[v].map(|d| d.0)
    }

    pub(crate) fn into_parts(
        self,
    ) -> (Vec<String>, Vec<[Dart; 3]>, Vec<String>, Vec<String>, Option<u32>) {
        (
            self.vertex_names,
            self.rotations,
            self.edge_names,
            self.circles,
            self.genus,
        )
    }

    /// Parse the spine text format:
    ///
    /// ```text
    /// # comment
    /// genus 2              (optional)
    /// vertex u
    /// edge e0 u v          (end 0 at u, end 1 at v)
    /// circle c0
    /// order u e0 e2 e1     (optional counterclockwise order of edges at u)
    /// ```
    ///
    /// Without `order` lines the edges at a vertex are taken in file order.
    /// A loop edge is listed twice at its vertex; the first mention is end 0.
    pub fn parse(text: &str) -> Result<Self, SpineError> {
        let perr = |line: usize, msg: &str| SpineError::Parse {
            line,
            msg: msg.to_string(),
        };
        let mut vertex_names: Vec<String> = Vec::new();
        let mut vids: HashMap<String, usize> = HashMap::new();
        let mut edge_names: Vec<String> = Vec::new();
        let mut eids: HashMap<String, usize> = HashMap::new();
        let mut edge_vertices: Vec<[usize; 2]> = Vec::new();
        let mut circles = Vec::new();
        let mut genus = None;
        let mut darts: Vec<Vec<Dart>> = Vec::new();
        let mut orders: Vec<(usize, usize, Vec<String>)> = Vec::new();
        let mut names_used = std::collections::HashSet::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap().trim();
            let toks: Vec<&str> = body.split_whitespace().collect();
            match toks.as_slice() {
                [] => {}
                ["genus", g] => genus = Some(g.parse().map_err(|_| perr(line, "bad genus"))?),
                ["vertex", name] => {
                    if vids.contains_key(*name) {
                        return Err(perr(line, "duplicate vertex"));
                    }
                    vids.insert(name.to_string(), vertex_names.len());
                    vertex_names.push(name.to_string());
                    darts.push(Vec::new());
                }
                ["edge", name, u, v] => {
                    if !names_used.insert(name.to_string()) {
                        return Err(perr(line, "duplicate component name"));
                    }
                    let u = *vids.get(*u).ok_or_else(|| perr(line, "unknown vertex"))?;
                    let v = *vids.get(*v).ok_or_else(|| perr(line, "unknown vertex"))?;
                    let e = edge_names.len();
                    eids.insert(name.to_string(), e);
                    edge_names.push(name.to_string());
                    edge_vertices.push([u, v]);
                    darts[u].push((e, 0));
                    darts[v].push((e, 1));
                }
                ["circle", name] => {
                    if !names_used.insert(name.to_string()) {
                        return Err(perr(line, "duplicate component name"));
                    }
                    circles.push(name.to_string());
                }
                ["order", v, rest @ ..] => {
                    let v = *vids.get(*v).ok_or_else(|| perr(line, "unknown vertex"))?;
                    orders.push((line, v, rest.iter().map(|s| s.to_string()).collect()));
                }
                _ => return Err(perr(line, "unrecognised line")),
            }
        }
        for (line, v, es) in orders {
            let mut used = vec![0usize; edge_names.len()];
            let mut order = Vec::new();
            for name in es {
                let e = *eids.get(&name).ok_or_else(|| perr(line, "unknown edge"))?;
                let ends = edge_vertices[e];
                let end = if ends == [v, v] {
                    used[e] += 1;
                    used[e] - 1
                } else if ends[0] == v {
                    0
                } else if ends[1] == v {
                    1
                } else {
                    return Err(perr(line, "edge is not incident to this vertex"));
                };
                order.push((e, end));
            }
            darts[v] = order;
        }
        let mut rotations = Vec::with_capacity(darts.len());
        for (v, ds) in darts.into_iter().enumerate() {
            let rot: [Dart; 3] = ds.try_into().map_err(|ds: Vec<Dart>| SpineError::BadVertex {
                vertex: vertex_names[v].clone(),
                msg: format!("degree {} (expected 3)", ds.len()),
            })?;
            rotations.push(rot);
        }
        Self::new(vertex_names, rotations, edge_names, circles, genus)
    }

    /// Serialize to the format read by [`PartialSpine::parse`].
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if let Some(g) = self.genus {
            writeln!(s, "genus {g}").unwrap();
        }
        for v in &self.vertex_names {
            writeln!(s, "vertex {v}").unwrap();
        }
        for (e, name) in self.edge_names.iter().enumerate() {
            let [(u, _), (v, _)] = self.edge_ends[e];
            writeln!(s, "edge {name} {} {}", self.vertex_names[u], self.vertex_names[v]).unwrap();
        }
        for c in &self.circles {
            writeln!(s, "circle {c}").unwrap();
        }
        for (v, rot) in self.rotations.iter().enumerate() {
            let es: Vec<&str> = rot.iter().map(|&(e, _)| self.edge_names[e].as_str()).collect();
            writeln!(s, "order {} {}", self.vertex_names[v], es.join(" ")).unwrap();
        }
        s
    }
}

/// The standard spine of the closed surface of genus `g`.
///
/// Genus 1 is a single circle `c0`. For `g >= 2` it is a necklace of
/// `g - 1` bubbles: bubble `i` has vertices `v{2i}`, `v{2i+1}` joined by an
/// upper edge `e{3i}` and a lower edge `e{3i+1}`, and the connector
/// `e{3i+2}` runs from `v{2i+1}` to the next bubble. Genus 2 is the theta
/// graph.
pub fn standard_spine(g: u32) -> Result<PartialSpine, SpineError> {
    match g {
        0 => Err(SpineError::UnsupportedGenus(g)),
        1 => PartialSpine::new(vec![], vec![], vec![], vec!["c0".into()], Some(1)),
        _ => {
            let bubbles = (g - 1) as usize;
            let nv = 2 * bubbles;
            let vertex_names = (0..nv).map(|i| format!("v{i}")).collect();
            let edge_names = (0..3 * bubbles).map(|i| format!("e{i}")).collect();
            let mut rotations = vec![[(0, 0); 3]; nv];
            for i in 0..bubbles {
                let (upper, lower, conn) = (3 * i, 3 * i + 1, 3 * i + 2);
                let prev_conn = 3 * ((i + bubbles - 1) % bubbles) + 2;
                rotations[2 * i] = [(prev_conn, 1), (lower, 0), (upper, 0)];
                rotations[2 * i + 1] = [(upper, 1), (lower, 1), (conn, 0)];
            }
            PartialSpine::new(vertex_names, rotations, edge_names, vec![], Some(g))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_counts() {
        let s1 = standard_spine(1).unwrap();
        assert_eq!((s1.vertex_count(), s1.edge_count(), s1.circle_count()), (0, 0, 1));
        for g in 2..6 {
            let s = standard_spine(g).unwrap();
            assert_eq!(s.vertex_count(), 2 * g as usize - 2);
            assert_eq!(s.edge_count(), 3 * g as usize - 3);
        }
        assert!(matches!(standard_spine(0), Err(SpineError::UnsupportedGenus(0))));
    }

    #[test]
    fn theta_has_three_parallel_edges() {
        let s = standard_spine(2).unwrap();
        for e in 0..3 {
            let [(u, _), (v, _)] = s.edge_ends(e);
            assert_ne!(u, v);
        }
    }

    #[test]
    fn text_round_trip() {
        for g in 1..5 {
            let s = standard_spine(g).unwrap();
            assert_eq!(PartialSpine::parse(&s.to_text()).unwrap(), s);
        }
    }

    #[test]
    fn parse_loop_edge() {
        let text = "vertex a\nvertex b\nedge l a a\nedge s a b\nedge m b b\norder a l s l\n";
        let s = PartialSpine::parse(text).unwrap();
        assert!(s.is_loop(0));
        assert_eq!(s.loop_stem(0), Some(1));
        assert_eq!(s.rotation(0), [(0, 0), (1, 0), (0, 1)]);
    }
}
