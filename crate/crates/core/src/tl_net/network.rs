//! Closed colored trivalent networks and their bracket evaluation.
//!
//! Every edge of color `c` carries a `JW_c` box; at a vertex with colors
//! `a, b, c` the strands are wired planarly with `(a+b-c)/2` arcs between
//! the `a` and `b` legs, and so on around the vertex. The value is obtained
//! by summing over the terms of all boxes, counting closed loops at the
//! loop value.

use std::collections::{HashMap, VecDeque};

use crate::scalars::{
    quantum_integer, IntPoly, LaurentPoly, RatFn, Scalar, ScalarIterExt, ScalarRing,
};

use super::element::jones_wenzl_generic;
use super::TlError;

/// Default cap on the total color of a network.
pub const DEFAULT_BUDGET: u32 = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetEdge {
    /// `ends[k]` is the vertex at end `k`.
    pub ends: [usize; 2],
    pub color: u32,
}

/// A planar colored graph with vertices of degree two or three.
///
/// The embedding is a rotation system: each vertex lists its edge ends
/// `(edge, end)` in counterclockwise order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ColoredNetwork {
    names: Vec<String>,
    rotation: Vec<Vec<(usize, usize)>>,
    edges: Vec<NetEdge>,
    loops: Vec<u32>,
}

fn admissible(a: u32, b: u32, c: u32) -> bool {
    (a + b + c) % 2 == 0 && a <= b + c && b <= a + c && c <= a + b
}

impl ColoredNetwork {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, name: impl Into<String>) -> usize {
        self.names.push(name.into());
        self.rotation.push(Vec::new());
        self.rotation.len() - 1
    }

    /// Add an edge from `u` to `v`. Each end is appended to its vertex's
    /// rotation; use [`ColoredNetwork::set_rotation`] to fix a different order.
    pub fn add_edge(&mut self, u: usize, v: usize, color: u32) -> usize {
        let e = self.edges.len();
        self.edges.push(NetEdge {
            ends: [u, v],
            color,
        });
        self.rotation[u].push((e, 0));
        self.rotation[v].push((e, 1));
        e
    }

    pub fn set_rotation(&mut self, v: usize, order: Vec<(usize, usize)>) {
        self.rotation[v] = order;
    }

    /// A free closed component of the given color.
    pub fn add_loop(&mut self, color: u32) {
        self.loops.push(color);
    }

    pub fn edges(&self) -> &[NetEdge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn rotation(&self, v: usize) -> &[(usize, usize)] {
        &self.rotation[v]
    }

    pub fn free_loops(&self) -> &[u32] {
        &self.loops
    }

    pub fn total_color(&self) -> u32 {
        self.edges.iter().map(|e| e.color).sum::<u32>() + self.loops.iter().sum::<u32>()
    }

    /// A single closed component of color `c`.
    pub fn colored_loop(c: u32) -> Self {
        let mut net = Self::new();
        net.add_loop(c);
        net
    }

    /// The theta graph with edge colors `a, b, c`.
    pub fn theta(a: u32, b: u32, c: u32) -> Self {
        let mut net = Self::new();
        let u = net.add_vertex("u");
        let v = net.add_vertex("v");
        let ea = net.add_edge(u, v, a);
        let eb = net.add_edge(u, v, b);
        let ec = net.add_edge(u, v, c);
        net.set_rotation(u, vec![(ea, 0), (ec, 0), (eb, 0)]);
        net.set_rotation(v, vec![(ea, 1), (eb, 1), (ec, 1)]);
        net
    }

    /// The tetrahedron whose vertex triples are `(a,d,e)`, `(b,c,e)`,
    /// `(a,b,f)` and `(c,d,f)`.
    pub fn tetrahedron(a: u32, b: u32, e: u32, c: u32, d: u32, f: u32) -> Self {
        let mut net = Self::new();
        let v1 = net.add_vertex("ade");
        let v2 = net.add_vertex("bce");
        let v3 = net.add_vertex("abf");
        let v4 = net.add_vertex("cdf");
        let ea = net.add_edge(v1, v3, a);
        let eb = net.add_edge(v2, v3, b);
        let ec = net.add_edge(v2, v4, c);
        let ed = net.add_edge(v1, v4, d);
        let ee = net.add_edge(v1, v2, e);
        let ef = net.add_edge(v3, v4, f);
        net.set_rotation(v1, vec![(ee, 0), (ea, 0), (ed, 0)]);
        net.set_rotation(v2, vec![(ec, 0), (eb, 0), (ee, 1)]);
        net.set_rotation(v3, vec![(ea, 1), (eb, 1), (ef, 0)]);
        net.set_rotation(v4, vec![(ed, 1), (ef, 1), (ec, 1)]);
        net
    }

    /// Split edge `e` in two with a new bivalent vertex.
    pub fn subdivide(&self, e: usize) -> Self {
        let mut net = self.clone();
        let [u, v] = self.edges[e].ends;
        let color = self.edges[e].color;
        let mid = net.add_vertex(format!("mid{e}"));
        net.edges[e].ends = [u, mid];
        let e2 = net.edges.len();
        net.edges.push(NetEdge {
            ends: [mid, v],
            color,
        });
        for slot in net.rotation[v].iter_mut() {
            if *slot == (e, 1) {
                *slot = (e2, 1);
            }
        }
        net.rotation[mid] = vec![(e, 1), (e2, 0)];
        net
    }

    /// Check degrees, rotation consistency, vertex admissibility and
    /// planarity of the embedding.
    pub fn validate(&self) -> Result<(), TlError> {
        let mut seen = vec![[false; 2]; self.edges.len()];
        for (v, rot) in self.rotation.iter().enumerate() {
            if !(2..=3).contains(&rot.len()) {
                return Err(TlError::BadVertex {
                    vertex: self.names[v].clone(),
                    msg: format!("degree {} (expected 2 or 3)", rot.len()),
                });
            }
            for &(e, end) in rot {
                if e >= self.edges.len() || end > 1 || self.edges[e].ends[end] != v || seen[e][end] {
                    return Err(TlError::BadVertex {
                        vertex: self.names[v].clone(),
                        msg: "rotation does not match the edge list".into(),
                    });
                }
                seen[e][end] = true;
            }
            let colors: Vec<u32> = rot.iter().map(|&(e, _)| self.edges[e].color).collect();
            let ok = match colors[..] {
                [a, b] => a == b,
                [a, b, c] => admissible(a, b, c),
                _ => unreachable!(),
            };
            if !ok {
                return Err(TlError::InadmissibleVertex {
                    vertex: self.names[v].clone(),
                    colors,
                });
            }
        }
        if seen.iter().flatten().any(|s| !s) {
            return Err(TlError::BadVertex {
                vertex: String::new(),
                msg: "an edge end is missing from every rotation".into(),
            });
        }
        if !self.is_planar() {
            return Err(TlError::NonPlanar);
        }
        Ok(())
    }

    fn is_planar(&self) -> bool {
        let nv = self.rotation.len();
        if nv == 0 {
            return true;
        }
        let dart = |(e, end): (usize, usize)| 2 * e + end;
        let mut next_ccw = vec![0; 2 * self.edges.len()];
        for rot in &self.rotation {
            for (k, &h) in rot.iter().enumerate() {
                next_ccw[dart(h)] = dart(rot[(k + 1) % rot.len()]);
            }
        }
        let mut seen = vec![false; next_ccw.len()];
        let mut faces = 0;
        for s in 0..next_ccw.len() {
            if seen[s] {
                continue;
            }
            faces += 1;
            let mut d = s;
            while !seen[d] {
                seen[d] = true;
                d = next_ccw[d ^ 1];
            }
        }
        // connected components by union-find over vertices
        let mut parent: Vec<usize> = (0..nv).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.ends[0]), find(&mut parent, e.ends[1]));
            parent[a] = b;
        }
        let comps = (0..nv).filter(|&v| find(&mut parent, v) == v).count();
        nv as i64 - self.edges.len() as i64 + faces == 2 * comps as i64
    }

    /// Parse the text format:
    ///
    /// ```text
    /// # comment
    /// vertex u            (optional; vertices are also created on first use)
    /// edge u v 2          (edges are numbered 0, 1, ... in file order)
    /// order u 0 2 1       (optional counterclockwise edge order at u)
    /// loop 4              (a free closed component)
    /// ```
    ///
    /// An edge with both ends at one vertex appears twice in that vertex's
    /// `order` line; its first occurrence is end 0.
    pub fn parse(text: &str) -> Result<Self, TlError> {
        let mut net = Self::new();
        let mut ids: HashMap<String, usize> = HashMap::new();
        let mut orders: Vec<(usize, usize, Vec<usize>)> = Vec::new();
        let perr = |line: usize, msg: &str| TlError::Parse {
            line,
            msg: msg.to_string(),
        };
        fn vid(net: &mut ColoredNetwork, ids: &mut HashMap<String, usize>, name: &str) -> usize {
            if let Some(&v) = ids.get(name) {
                return v;
            }
            let v = net.add_vertex(name);
            ids.insert(name.to_string(), v);
            v
        }
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap().trim();
            let toks: Vec<&str> = body.split_whitespace().collect();
            match toks.as_slice() {
                [] => {}
                ["vertex", name] => {
                    if ids.contains_key(*name) {
                        return Err(perr(line, "duplicate vertex"));
                    }
                    vid(&mut net, &mut ids, name);
                }
                ["edge", u, v, c] => {
                    let c = c.parse().map_err(|_| perr(line, "bad color"))?;
                    let u = vid(&mut net, &mut ids, u);
                    let v = vid(&mut net, &mut ids, v);
                    net.add_edge(u, v, c);
                }
                ["order", v, rest @ ..] => {
                    let v = *ids.get(*v).ok_or_else(|| perr(line, "unknown vertex"))?;
                    let es = rest
                        .iter()
                        .map(|t| t.parse::<usize>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|_| perr(line, "bad edge index"))?;
                    orders.push((line, v, es));
                }
                ["loop", c] => net.add_loop(c.parse().map_err(|_| perr(line, "bad color"))?),
                _ => return Err(perr(line, "unrecognised line")),
            }
        }
        for (line, v, es) in orders {
            let mut used = vec![0usize; net.edges.len()];
            let mut order = Vec::with_capacity(es.len());
            for e in es {
                let edge = net.edges.get(e).ok_or_else(|| perr(line, "edge index out of range"))?;
                let end = if edge.ends == [v, v] {
                    used[e] += 1;
                    used[e] - 1
                } else if edge.ends[0] == v {
                    0
                } else if edge.ends[1] == v {
                    1
                } else {
                    return Err(perr(line, "edge is not incident to this vertex"));
                };
                order.push((e, end));
            }
            net.set_rotation(v, order);
        }
        Ok(net)
    }

    /// Serialize to the text format accepted by [`ColoredNetwork::parse`].
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for n in &self.names {
            s += &format!("vertex {n}\n");
        }
        for e in &self.edges {
            s += &format!(
                "edge {} {} {}\n",
                self.names[e.ends[0]], self.names[e.ends[1]], e.color
            );
        }
        for (v, rot) in self.rotation.iter().enumerate() {
            let es: Vec<String> = rot.iter().map(|(e, _)| e.to_string()).collect();
            s += &format!("order {} {}\n", self.names[v], es.join(" "));
        }
        for c in &self.loops {
            s += &format!("loop {c}\n");
        }
        s
    }
}

/// `Delta_n = (-1)^n [n+1]`, the value of a loop colored `n`.
pub fn colored_loop_value(n: u32, ring: ScalarRing) -> Scalar {
    let q = quantum_integer(n + 1, ring);
    if n % 2 == 0 {
        q
    } else {
        -q
    }
}

/// Evaluate a closed network with the default color budget.
pub fn eval_network(net: &ColoredNetwork, ring: ScalarRing) -> Result<Scalar, TlError> {
    eval_network_with_budget(net, ring, DEFAULT_BUDGET)
}

/// Evaluate a closed network, refusing networks whose total color exceeds
/// `budget`. Cyclotomic values are computed generically and specialized.
pub fn eval_network_with_budget(
    net: &ColoredNetwork,
    ring: ScalarRing,
    budget: u32,
) -> Result<Scalar, TlError> {
    let total = net.total_color();
    if total > budget {
        return Err(TlError::BudgetExceeded { total, budget });
    }
    net.validate()?;
    let generic = eval_generic(net);
    match ring {
        ScalarRing::Generic => Ok(generic),
        ScalarRing::Cyclotomic(n) => generic
            .to_ring(ring)
            .map_err(|_| TlError::PoleAtRoot { big_n: n }),
    }
}

type PairState = Vec<(u32, u32)>;

fn eval_generic(net: &ColoredNetwork) -> Scalar {
    let g = ScalarRing::Generic;
    let loops = net
        .loops
        .iter()
        .map(|&c| colored_loop_value(c, g))
        .product_in(g);
    if net.edges.is_empty() {
        return loops;
    }

    let mut base = Vec::with_capacity(net.edges.len());
    let mut nports = 0u32;
    for e in &net.edges {
        base.push(nports);
        nports += 2 * e.color;
    }
    let port = |e: usize, end: usize, strand: u32| -> u32 {
        let c = net.edges[e].color;
        if end == 0 {
            base[e] + (c - 1 - strand)
        } else {
            base[e] + c + strand
        }
    };

    let mut pairs: PairState = Vec::new();
    for rot in &net.rotation {
        let k = rot.len();
        let colors: Vec<u32> = rot.iter().map(|&(e, _)| net.edges[e].color).collect();
        let sum: u32 = colors.iter().sum();
        for i in 0..k {
            let j = (i + 1) % k;
            // arcs between consecutive legs i and j
            let arcs = if k == 2 {
                if i == 0 {
                    colors[0]
                } else {
                    0
                }
            } else {
                (sum - 2 * colors[(i + 2) % 3]) / 2
            };
            let (ei, endi) = rot[i];
            let (ej, endj) = rot[j];
            for s in 0..arcs {
                let p = port(ei, endi, colors[i] - 1 - s);
                let q = port(ej, endj, s);
                pairs.push((p.min(q), p.max(q)));
            }
        }
    }
    pairs.sort_unstable();

    // process boxes in breadth-first order to keep the frontier small
    let mut order = Vec::with_capacity(net.edges.len());
    let mut done = vec![false; net.edges.len()];
    for start in 0..net.edges.len() {
        if done[start] {
            continue;
        }
        let mut queue = VecDeque::from([start]);
        done[start] = true;
        while let Some(e) = queue.pop_front() {
            order.push(e);
            for &v in &net.edges[e].ends {
                for &(f, _) in &net.rotation[v] {
                    if !done[f] {
                        done[f] = true;
                        queue.push_back(f);
                    }
                }
            }
        }
    }

    let delta = LaurentPoly::from_terms(&[(2, -1), (-2, -1)]);
    let mut delta_pows = vec![LaurentPoly::one()];
    let mut denom = IntPoly::one();
    let mut states: HashMap<PairState, LaurentPoly> = HashMap::from([(pairs, LaurentPoly::one())]);

    for e in order {
        let c = net.edges[e].color;
        if c == 0 {
            continue;
        }
        let jw = jones_wenzl_generic(c as usize);
        let (d, terms) = jw.scaled();
        denom = denom.mul(&d);
        let lo = base[e];
        let hi = lo + 2 * c;
        let inside = |p: u32| (lo..hi).contains(&p);
        let mut next: HashMap<PairState, LaurentPoly> = HashMap::with_capacity(states.len());
        for (state, coef) in &states {
            let mut kept: PairState = Vec::with_capacity(state.len());
            let mut outer = vec![u32::MAX; (2 * c) as usize];
            for &(p, q) in state {
                match (inside(p), inside(q)) {
                    (false, false) => kept.push((p, q)),
                    (true, true) => {
                        outer[(p - lo) as usize] = q;
                        outer[(q - lo) as usize] = p;
                    }
                    (true, false) => outer[(p - lo) as usize] = q,
                    (false, true) => outer[(q - lo) as usize] = p,
                }
            }
            for (m, p_m) in &terms {
                let mut new_pairs = kept.clone();
                let mut visited = vec![false; (2 * c) as usize];
                for x in 0..2 * c as usize {
                    let y = outer[x];
                    if visited[x] || inside(y) {
                        continue;
                    }
                    // y is an outside port attached to x; follow to the other end
                    let mut cur = x;
                    let w = loop {
                        visited[cur] = true;
                        let z = m.partner(cur);
                        visited[z] = true;
                        let w = outer[z];
                        if !inside(w) {
                            break w;
                        }
                        cur = (w - lo) as usize;
                    };
                    if y < w {
                        new_pairs.push((y, w));
                    } else {
                        new_pairs.push((w, y));
                    }
                }
                let mut closed = 0;
                for x in 0..2 * c as usize {
                    if visited[x] {
                        continue;
                    }
                    closed += 1;
                    let mut cur = x;
                    while !visited[cur] {
                        visited[cur] = true;
                        let z = m.partner(cur);
                        visited[z] = true;
                        cur = (outer[z] - lo) as usize;
                    }
                }
                while delta_pows.len() <= closed {
                    let next_pow = delta_pows.last().unwrap() * &delta;
                    delta_pows.push(next_pow);
                }
                new_pairs.sort_unstable();
                let t = &(coef * p_m) * &delta_pows[closed];
                let slot = next.entry(new_pairs).or_default();
                *slot += &t;
            }
        }
        next.retain(|_, v| !v.is_zero());
        states = next;
    }

    let numer = states.remove(&Vec::new()).unwrap_or_default();
    debug_assert!(states.is_empty());
    let value = RatFn::from_laurent(&numer).mul(&RatFn::new(IntPoly::one(), denom));
    &Scalar::Generic(value) * &loops
}
