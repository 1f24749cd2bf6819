//! Compact simple undirected graphs on at most 32 vertices.
//!
//! Each adjacency row fits in a `u32`, which keeps every structural query a
//! handful of bit operations. All editing operations return fresh values;
//! nothing here mutates shared state.

use crate::Error;

/// Hard cap on vertex count. Every adjacency row is one machine word.
pub const MAX_ORDER: usize = 32;

/// Simple undirected graph: symmetric, irreflexive adjacency over 0..order-1.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    adj: [u32; MAX_ORDER],
}

/// Role of a vertex per its neighborhood: empty, full, or neither.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexRole {
    Isolated,
    Dominating,
    Ordinary,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph, Error> {
        if n > MAX_ORDER {
            return Err(Error::OrderCapExceeded(n));
        }
        Ok(Graph {
            n: n as u8,
            adj: [0; MAX_ORDER],
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.order() && v < self.order());
        self.adj[u] >> v & 1 == 1
    }

    /// Adds the edge uv. Panics on a loop or out-of-range index.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.order() && v < self.order());
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.order() && v < self.order());
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// Neighborhood of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u32 {
        debug_assert!(v < self.order());
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Bitmask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.order()]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges in lexicographic order (i, j) with i < j.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.order() {
            for j in i + 1..self.order() {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, Error> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidVertex(u.max(v)));
            }
            if u == v {
                return Err(Error::ParameterOutOfRange("loop edge".into()));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Edge uv present in the output iff absent here (u != v).
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.order()).expect("order already validated");
        let mask = self.vertex_mask();
        for v in 0..self.order() {
            g.adj[v] = !self.adj[v] & mask & !(1 << v);
        }
        g
    }

    /// Induced subgraph on the vertices of `mask`, relabeled to 0.. in
    /// ascending original order.
    pub fn induced_by_mask(&self, mask: u32) -> Graph {
        debug_assert_eq!(mask & !self.vertex_mask(), 0);
        let mut verts = [0usize; MAX_ORDER];
        let mut k = 0;
        let mut m = mask;
        while m != 0 {
            verts[k] = m.trailing_zeros() as usize;
            m &= m - 1;
            k += 1;
        }
        let mut g = Graph::empty(k).expect("subset order within cap");
        for a in 0..k {
            for b in a + 1..k {
                if self.has_edge(verts[a], verts[b]) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    pub fn induced_subgraph(&self, s: &[usize]) -> Result<Graph, Error> {
        let mut mask = 0u32;
        for &v in s {
            if v >= self.order() {
                return Err(Error::InvalidVertex(v));
            }
            mask |= 1 << v;
        }
        Ok(self.induced_by_mask(mask))
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph, Error> {
        if v >= self.order() {
            return Err(Error::InvalidVertex(v));
        }
        Ok(self.induced_by_mask(self.vertex_mask() & !(1 << v)))
    }

    /// Appends a vertex (index = old order) adjacent exactly to `neighbors`.
    pub fn add_vertex(&self, neighbors: u32) -> Result<Graph, Error> {
        let n = self.order();
        if n + 1 > MAX_ORDER {
            return Err(Error::OrderCapExceeded(n + 1));
        }
        if neighbors & !self.vertex_mask() != 0 {
            return Err(Error::InvalidVertex(31 - neighbors.leading_zeros() as usize));
        }
        let mut g = *self;
        g.n += 1;
        g.adj[n] = neighbors;
        let mut m = neighbors;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            g.adj[u] |= 1 << n;
            m &= m - 1;
        }
        Ok(g)
    }

    /// Block-diagonal union; `self`'s vertices come first.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, Error> {
        let n = self.order() + other.order();
        if n > MAX_ORDER {
            return Err(Error::OrderCapExceeded(n));
        }
        let mut g = *self;
        g.n = n as u8;
        for v in 0..other.order() {
            g.adj[self.order() + v] = other.adj[v] << self.order();
        }
        Ok(g)
    }

    /// Isolated iff degree 0, dominating iff degree = order-1. The sole
    /// vertex of a 1-vertex graph is reported isolated (documented tie-break
    /// so threshold peeling is deterministic).
    pub fn vertex_role(&self, v: usize) -> Result<VertexRole, Error> {
        if v >= self.order() {
            return Err(Error::InvalidVertex(v));
        }
        let d = self.degree(v);
        if d == 0 {
            Ok(VertexRole::Isolated)
        } else if d == self.order() - 1 {
            Ok(VertexRole::Dominating)
        } else {
            Ok(VertexRole::Ordinary)
        }
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.order();
        let mut color = [2u8; MAX_ORDER];
        for s in 0..n {
            if color[s] != 2 {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let mut m = self.adj[v];
                while m != 0 {
                    let u = m.trailing_zeros() as usize;
                    m &= m - 1;
                    if color[u] == 2 {
                        color[u] = 1 - color[v];
                        stack.push(u);
                    } else if color[u] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Vertex masks of the connected components, ordered by smallest member.
    pub fn component_masks(&self) -> Vec<u32> {
        let mut seen = 0u32;
        let mut out = Vec::new();
        for s in 0..self.order() {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u32 << s;
            loop {
                let mut grown = comp;
                let mut m = comp;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    grown |= self.adj[v];
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Drops all degree-zero vertices, relabeling the rest in ascending order.
    pub fn without_isolated(&self) -> Graph {
        let mut mask = 0u32;
        for v in 0..self.order() {
            if self.degree(v) > 0 {
                mask |= 1 << v;
            }
        }
        self.induced_by_mask(mask)
    }
}

/// Parameterized constructors for the named graphs and families used
/// throughout: cycles, paths, cliques, bicliques, the claw, double stars,
/// the sun-with-pendant, and disjoint-union expressions.
#[derive(Clone, Debug)]
pub enum NamedFamily {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    EmptyGraph(usize),
    Claw,
    /// Adjacent centers of degree m and k (pendants included in the degree).
    DoubleStar(usize, usize),
    /// 3-sun (triangle a,b,c; independent x,y,z with x~a,b; y~b,c; z~c,a)
    /// with one pendant attached to x.
    SunWithPendant,
    Union(Vec<NamedFamily>),
}

pub fn construct_named(family: &NamedFamily) -> Result<Graph, Error> {
    match family {
        NamedFamily::Cycle(n) => {
            if *n < 3 {
                return Err(Error::ParameterOutOfRange(format!("cycle needs n >= 3, got {n}")));
            }
            let mut g = Graph::empty(*n)?;
            for v in 0..*n {
                g.add_edge(v, (v + 1) % n);
            }
            Ok(g)
        }
        NamedFamily::Path(n) => {
            if *n < 1 {
                return Err(Error::ParameterOutOfRange("path needs n >= 1".into()));
            }
            let mut g = Graph::empty(*n)?;
            for v in 0..n - 1 {
                g.add_edge(v, v + 1);
            }
            Ok(g)
        }
        NamedFamily::Complete(n) => {
            let mut g = Graph::empty(*n)?;
            for u in 0..*n {
                for v in u + 1..*n {
                    g.add_edge(u, v);
                }
            }
            Ok(g)
        }
        NamedFamily::CompleteBipartite(k, l) => {
            let mut g = Graph::empty(k + l)?;
            for u in 0..*k {
                for v in 0..*l {
                    g.add_edge(u, k + v);
                }
            }
            Ok(g)
        }
        NamedFamily::EmptyGraph(n) => Graph::empty(*n),
        NamedFamily::Claw => construct_named(&NamedFamily::CompleteBipartite(1, 3)),
        NamedFamily::DoubleStar(m, k) => {
            if *m < 1 || *k < 1 {
                return Err(Error::ParameterOutOfRange("double-star degrees must be >= 1".into()));
            }
            // Centers 0 and 1, then center 0's pendants, then center 1's.
            let n = m + k;
            let mut g = Graph::empty(n)?;
            g.add_edge(0, 1);
            for p in 0..m - 1 {
                g.add_edge(0, 2 + p);
            }
            for p in 0..k - 1 {
                g.add_edge(1, 2 + (m - 1) + p);
            }
            Ok(g)
        }
        NamedFamily::SunWithPendant => {
            // triangle 0,1,2; x=3 ~ 0,1; y=4 ~ 1,2; z=5 ~ 2,0; pendant 6 ~ x.
            Graph::from_edges(
                7,
                &[(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0), (6, 3)],
            )
        }
        NamedFamily::Union(parts) => {
            let mut g = Graph::empty(0)?;
            for p in parts {
                g = g.disjoint_union(&construct_named(p)?)?;
            }
            Ok(g)
        }
    }
}

// ---------------------------------------------------------------------------
// graph6 (order <= 32, so a single size byte)
// ---------------------------------------------------------------------------

/// Standard graph6 line: size byte at n+63, then the upper triangle in
/// column-major order (x01, x02, x12, x03, ...) packed 6 bits per character,
/// zero-padded, each group offset by 63.
pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut s = String::new();
    s.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut nb = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nb += 1;
            if nb == 6 {
                s.push((acc + 63) as char);
                acc = 0;
                nb = 0;
            }
        }
    }
    if nb > 0 {
        s.push(((acc << (6 - nb)) + 63) as char);
    }
    s
}

pub fn graph6_decode(line: &str) -> Result<Graph, Error> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedGraph6("empty line".into()));
    }
    let first = bytes[0];
    if !(63..=126).contains(&first) {
        return Err(Error::MalformedGraph6(format!("bad size byte {first}")));
    }
    if first == 126 {
        return Err(Error::MalformedGraph6("multi-byte order not supported".into()));
    }
    let n = (first - 63) as usize;
    if n > MAX_ORDER {
        return Err(Error::OrderCapExceeded(n));
    }
    let nbits = n * (n - 1) / 2;
    let ngroups = nbits.div_ceil(6);
    if bytes.len() != 1 + ngroups {
        return Err(Error::MalformedGraph6(format!(
            "expected {} data characters for n={}, got {}",
            ngroups,
            n,
            bytes.len() - 1
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let b = bytes[1 + k / 6];
            if !(63..=126).contains(&b) {
                return Err(Error::MalformedGraph6(format!("bad data byte {b}")));
            }
            let bit = (b - 63) >> (5 - k % 6) & 1;
            if bit == 1 {
                g.add_edge(i, j);
            }
            k += 1;
            if k == nbits {
                break 'outer;
            }
        }
    }
    // padding bits must be zero
    if nbits % 6 != 0 {
        let last = bytes[bytes.len() - 1] - 63;
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(Error::MalformedGraph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        construct_named(&NamedFamily::Cycle(n)).unwrap()
    }
    fn path(n: usize) -> Graph {
        construct_named(&NamedFamily::Path(n)).unwrap()
    }
    fn complete(n: usize) -> Graph {
        construct_named(&NamedFamily::Complete(n)).unwrap()
    }

    /// Reference graph6 codec written straight from the format definition,
    /// kept independent of the production encoder.
    fn reference_graph6(g: &Graph) -> String {
        let n = g.order();
        let mut bits = Vec::new();
        for j in 1..n {
            for i in 0..j {
                bits.push(g.has_edge(i, j) as u8);
            }
        }
        while bits.len() % 6 != 0 {
            bits.push(0);
        }
        let mut s = String::new();
        s.push((n as u8 + 63) as char);
        for chunk in bits.chunks(6) {
            let v = chunk.iter().fold(0u8, |a, &b| (a << 1) | b);
            s.push((v + 63) as char);
        }
        s
    }

    #[test]
    fn named_graph_examples() {
        let c5 = cycle(5);
        assert_eq!(c5.order(), 5);
        assert_eq!(c5.edge_count(), 5);
        let p1 = path(1);
        assert_eq!((p1.order(), p1.edge_count()), (1, 0));
        // double-star(3,4): 7 vertices, adjacent centers of degree 3 and 4
        let ds = construct_named(&NamedFamily::DoubleStar(3, 4)).unwrap();
        assert_eq!(ds.order(), 7);
        assert!(ds.has_edge(0, 1));
        assert_eq!(ds.degree(0), 3);
        assert_eq!(ds.degree(1), 4);
        let mut degs: Vec<usize> = (0..7).map(|v| ds.degree(v)).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 1, 1, 1, 3, 4]);
    }

    #[test]
    fn named_graph_bounds() {
        assert!(construct_named(&NamedFamily::Cycle(2)).is_err());
        assert!(construct_named(&NamedFamily::Path(0)).is_err());
        assert!(construct_named(&NamedFamily::Complete(33)).is_err());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complete(5).complement().edge_count(), 0);
        // C5 is self-complementary
        let c5 = cycle(5);
        let cc = c5.complement();
        assert_eq!(cc.edge_count(), 5);
        assert!((0..5).all(|v| cc.degree(v) == 2));
        // involution
        let p4 = path(4);
        assert_eq!(p4.complement().complement(), p4);
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = cycle(5);
        assert_eq!(c5.induced_subgraph(&[0, 1, 2, 3]).unwrap(), path(4));
        assert_eq!(c5.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap(), c5);
        let c7 = cycle(7);
        assert_eq!(c7.induced_subgraph(&[0, 1, 2, 3, 4, 5]).unwrap(), path(6));
        assert!(c5.induced_subgraph(&[0, 9]).is_err());
    }

    #[test]
    fn delete_vertex_examples() {
        assert_eq!(complete(3).delete_vertex(0).unwrap(), complete(2));
        assert_eq!(cycle(5).delete_vertex(0).unwrap(), path(4));
        let claw = construct_named(&NamedFamily::Claw).unwrap();
        // deleting a pendant leaves a 3-vertex star = P3 up to labels
        let g = claw.delete_vertex(3).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(claw.delete_vertex(4).is_err());
    }

    #[test]
    fn add_vertex_examples() {
        let k2 = complete(2);
        let g = k2.add_vertex(0).unwrap();
        assert_eq!((g.order(), g.edge_count()), (3, 1));
        let k4 = complete(3).add_vertex(0b111).unwrap();
        assert_eq!(k4, complete(4));
        // vertex adjacent to the endpoints of P3 closes C4
        let c4 = path(3).add_vertex(0b101).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert!((0..4).all(|v| c4.degree(v) == 2));
    }

    #[test]
    fn disjoint_union_examples() {
        let k2 = complete(2);
        let g = k2.disjoint_union(&k2).unwrap().disjoint_union(&k2).unwrap();
        assert_eq!((g.order(), g.edge_count()), (6, 3));
        let p5 = path(5);
        assert_eq!(p5.disjoint_union(&Graph::empty(0).unwrap()).unwrap(), p5);
        let u = p5.disjoint_union(&path(3)).unwrap();
        assert_eq!((u.order(), u.edge_count()), (8, 6));
    }

    #[test]
    fn vertex_role_examples() {
        let claw = construct_named(&NamedFamily::Claw).unwrap();
        assert_eq!(claw.vertex_role(0).unwrap(), VertexRole::Dominating);
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(e3.vertex_role(1).unwrap(), VertexRole::Isolated);
        assert_eq!(cycle(5).vertex_role(0).unwrap(), VertexRole::Ordinary);
        // 1-vertex tie-break
        assert_eq!(Graph::empty(1).unwrap().vertex_role(0).unwrap(), VertexRole::Isolated);
    }

    #[test]
    fn role_complement_duality() {
        let ds = construct_named(&NamedFamily::DoubleStar(2, 3)).unwrap();
        let c = ds.complement();
        for v in 0..ds.order() {
            let (a, b) = (ds.vertex_role(v).unwrap(), c.vertex_role(v).unwrap());
            match a {
                VertexRole::Isolated => assert_eq!(b, VertexRole::Dominating),
                VertexRole::Dominating => assert_eq!(b, VertexRole::Isolated),
                VertexRole::Ordinary => assert_eq!(b, VertexRole::Ordinary),
            }
        }
    }

    #[test]
    fn graph6_frozen_values() {
        // expected strings computed by the reference codec
        let k2 = complete(2);
        assert_eq!(reference_graph6(&k2), "A_");
        assert_eq!(graph6_encode(&k2), "A_");
        let e2 = Graph::empty(2).unwrap();
        assert_eq!(reference_graph6(&e2), "A?");
        assert_eq!(graph6_encode(&e2), "A?");
    }

    #[test]
    fn graph6_round_trip() {
        for g in [cycle(5), path(7), complete(6), construct_named(&NamedFamily::SunWithPendant).unwrap()] {
            let enc = graph6_encode(&g);
            assert_eq!(enc, reference_graph6(&g));
            assert_eq!(graph6_decode(&enc).unwrap(), g);
        }
    }

    #[test]
    fn graph6_malformed() {
        assert!(graph6_decode("").is_err());
        assert!(graph6_decode("A").is_err()); // missing data char
        assert!(matches!(graph6_decode("a?"), Err(Error::OrderCapExceeded(_)))); // n=34
        assert!(graph6_decode("B@").is_err()); // nonzero padding for n=3
    }

    #[test]
    fn sun_with_pendant_shape() {
        let g = construct_named(&NamedFamily::SunWithPendant).unwrap();
        assert_eq!(g.order(), 7);
        assert_eq!(g.edge_count(), 10);
        let mut degs: Vec<usize> = (0..7).map(|v| g.degree(v)).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 2, 2, 3, 4, 4, 4]);
    }
}
