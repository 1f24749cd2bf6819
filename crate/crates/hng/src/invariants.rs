//! Exact graph invariants by complete search: clique and independence
//! numbers, chromatic and clique cover numbers, matching number,
//! perfection, thresholdness, and sum-perfection.

use crate::canon::contains_induced;
use crate::graph::{construct_named, Graph, NamedFamily, VertexRole};
use crate::Error;
use std::collections::HashMap;

/// Maximum clique by branch and bound over candidate bitmasks.
pub fn clique_number(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let mut best = 1;
    clique_expand(g, 0, g.vertex_mask(), &mut best);
    best
}

fn clique_expand(g: &Graph, size: usize, cand: u32, best: &mut usize) {
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    if cand == 0 {
        if size > *best {
            *best = size;
        }
        return;
    }
    let mut m = cand;
    while m != 0 {
        if size + m.count_ones() as usize <= *best {
            return;
        }
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        clique_expand(g, size + 1, m & g.neighbors(v), best);
    }
}

/// Vertices of one maximum clique, found by the same search.
pub fn max_clique_vertices(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let target = clique_number(g);
    let mut chosen = Vec::new();
    assert!(clique_find(g, g.vertex_mask(), target, &mut chosen));
    chosen
}

fn clique_find(g: &Graph, cand: u32, need: usize, chosen: &mut Vec<usize>) -> bool {
    if need == 0 {
        return true;
    }
    if (cand.count_ones() as usize) < need {
        return false;
    }
    let mut m = cand;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        chosen.push(v);
        if clique_find(g, m & g.neighbors(v), need - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

/// Exact chromatic number: iterative deepening on k-colorability, seeded
/// with a maximum clique (pre-colored) and capped by a greedy coloring.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let clique = max_clique_vertices(g);
    let lower = clique.len();
    let upper = greedy_coloring_bound(g);
    for k in lower..upper {
        if colorable(g, k, &clique) {
            return k;
        }
    }
    upper
}

fn greedy_coloring_bound(g: &Graph) -> usize {
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut color = vec![usize::MAX; n];
    let mut used = 0;
    for &v in &order {
        let mut taken = 0u32;
        let mut m = g.neighbors(v);
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            if color[u] != usize::MAX {
                taken |= 1 << color[u];
            }
        }
        let c = (!taken).trailing_zeros() as usize;
        color[v] = c;
        used = used.max(c + 1);
    }
    used
}

fn colorable(g: &Graph, k: usize, clique: &[usize]) -> bool {
    if clique.len() > k {
        return false;
    }
    let n = g.order();
    let mut color = vec![usize::MAX; n];
    for (c, &v) in clique.iter().enumerate() {
        color[v] = c;
    }
    // order uncolored vertices by descending degree for earlier conflicts
    let mut order: Vec<usize> = (0..n).filter(|v| color[*v] == usize::MAX).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    color_recurse(g, k, clique.len(), &order, 0, &mut color)
}

fn color_recurse(
    g: &Graph,
    k: usize,
    used: usize,
    order: &[usize],
    idx: usize,
    color: &mut [usize],
) -> bool {
    if idx == order.len() {
        return true;
    }
    let v = order[idx];
    let mut taken = 0u32;
    let mut m = g.neighbors(v);
    while m != 0 {
        let u = m.trailing_zeros() as usize;
        m &= m - 1;
        if color[u] != usize::MAX {
            taken |= 1 << color[u];
        }
    }
    // symmetry break: at most one brand-new color may be opened
    let limit = k.min(used + 1);
    for c in 0..limit {
        if taken >> c & 1 == 1 {
            continue;
        }
        color[v] = c;
        let new_used = used.max(c + 1);
        if color_recurse(g, k, new_used, order, idx + 1, color) {
            return true;
        }
        color[v] = usize::MAX;
    }
    false
}

/// Minimum clique cover, computed as the chromatic number of the complement.
pub fn clique_cover_number(g: &Graph) -> usize {
    chromatic_number(&g.complement())
}

/// Maximum matching size by memoized recursion over the remaining vertices.
pub fn matching_number(g: &Graph) -> usize {
    let mut memo = HashMap::new();
    matching_recurse(g, g.vertex_mask(), &mut memo)
}

fn matching_recurse(g: &Graph, mask: u32, memo: &mut HashMap<u32, usize>) -> usize {
    if mask == 0 {
        return 0;
    }
    if let Some(&v) = memo.get(&mask) {
        return v;
    }
    let v = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << v);
    let mut best = matching_recurse(g, rest, memo); // v unmatched
    let mut m = g.neighbors(v) & rest;
    while m != 0 {
        let u = m.trailing_zeros() as usize;
        m &= m - 1;
        best = best.max(1 + matching_recurse(g, rest & !(1 << u), memo));
    }
    memo.insert(mask, best);
    best
}

/// Searches for an induced odd cycle of length >= 5 by DFS over induced
/// paths: an extension must be adjacent to the path's last vertex and to no
/// other path vertex; a closing vertex is additionally adjacent to the
/// first.
fn has_odd_hole(g: &Graph) -> bool {
    let n = g.order();
    let mut path = Vec::with_capacity(n);
    for s in 0..n {
        path.push(s);
        if hole_dfs(g, s, &mut path) {
            return true;
        }
        path.pop();
    }
    false
}

fn hole_dfs(g: &Graph, s: usize, path: &mut Vec<usize>) -> bool {
    let last = *path.last().unwrap();
    let len = path.len();
    'cand: for v in s + 1..g.order() {
        if !g.has_edge(last, v) || path.contains(&v) {
            continue;
        }
        // v must avoid all path vertices except last (and possibly the
        // first, which closes a cycle once the path has two vertices)
        let closes = len >= 2 && g.has_edge(path[0], v);
        if len >= 2 {
            for &p in &path[1..len - 1] {
                if g.has_edge(p, v) {
                    continue 'cand;
                }
            }
        }
        if closes {
            if len + 1 >= 5 && (len + 1) % 2 == 1 {
                return true;
            }
            // adjacent to the first vertex: cannot extend without a chord
            continue;
        }
        path.push(v);
        if hole_dfs(g, s, path) {
            return true;
        }
        path.pop();
    }
    false
}

/// Perfection via the absence of induced odd holes in the graph and its
/// complement. Bounded to order 16; the definitional chi = omega scan is
/// kept as a test oracle.
pub fn is_perfect(g: &Graph) -> Result<bool, Error> {
    if g.order() > 16 {
        return Err(Error::OrderCapExceeded(g.order()));
    }
    Ok(!has_odd_hole(g) && !has_odd_hole(&g.complement()))
}

/// Definitional perfection oracle: chi(H) = omega(H) for every induced H.
pub fn is_perfect_definitional(g: &Graph) -> bool {
    let n = g.order();
    for mask in 1u32..=g.vertex_mask().max(1) {
        if n == 0 {
            break;
        }
        let h = g.induced_by_mask(mask & g.vertex_mask());
        if chromatic_number(&h) != clique_number(&h) {
            return false;
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistinctMode {
    Chi,
    Theta,
}

/// Vertices whose deletion decrements chi (or theta): the chi-distinct
/// (theta-distinct) vertices, via the deletion characterization.
pub fn distinct_vertices(g: &Graph, mode: DistinctMode) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let full = match mode {
        DistinctMode::Chi => chromatic_number(g),
        DistinctMode::Theta => clique_cover_number(g),
    };
    (0..n)
        .filter(|&v| {
            let h = g.delete_vertex(v).expect("v < order");
            let hv = match mode {
                DistinctMode::Chi => chromatic_number(&h),
                DistinctMode::Theta => clique_cover_number(&h),
            };
            hv + 1 == full
        })
        .collect()
}

/// Threshold test by peeling: repeatedly remove an isolated or dominating
/// vertex; threshold iff the graph empties.
pub fn is_threshold(g: &Graph) -> bool {
    let mut h = *g;
    'peel: while h.order() > 0 {
        for v in 0..h.order() {
            if h.vertex_role(v).expect("in range") != VertexRole::Ordinary {
                h = h.delete_vertex(v).expect("in range");
                continue 'peel;
            }
        }
        return false;
    }
    true
}

/// Threshold test via the forbidden triple 2K2, P4, C4; test oracle for
/// the peeling route.
pub fn is_threshold_by_forbidden(g: &Graph) -> bool {
    let two_k2 = construct_named(&NamedFamily::Union(vec![
        NamedFamily::Complete(2),
        NamedFamily::Complete(2),
    ]))
    .expect("2K2");
    let p4 = construct_named(&NamedFamily::Path(4)).expect("P4");
    let c4 = construct_named(&NamedFamily::Cycle(4)).expect("C4");
    [two_k2, p4, c4].iter().all(|f| contains_induced(g, f).is_none())
}

/// Sum-perfection: omega(H) + alpha(H) >= |H| for every induced subgraph H.
pub fn is_sum_perfect(g: &Graph) -> Result<bool, Error> {
    if g.order() > 16 {
        return Err(Error::OrderCapExceeded(g.order()));
    }
    let full = g.vertex_mask();
    for mask in 1..=full.max(1) {
        if full == 0 {
            break;
        }
        let h = g.induced_by_mask(mask);
        if clique_number(&h) + independence_number(&h) < h.order() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All invariants plus structural flags for one graph.
#[derive(Clone, Debug, serde::Serialize)]
pub struct InvariantRecord {
    pub order: usize,
    pub edges: usize,
    pub omega: usize,
    pub alpha: usize,
    pub chi: usize,
    pub theta: usize,
    pub nu: usize,
    pub bipartite: bool,
    pub triangle_free: bool,
    pub claw_free: bool,
    pub c5_free: bool,
    pub perfect: bool,
    pub threshold: bool,
    pub sum_perfect: bool,
}

pub fn invariant_record(g: &Graph) -> Result<InvariantRecord, Error> {
    let claw = construct_named(&NamedFamily::Claw).expect("claw");
    let c5 = construct_named(&NamedFamily::Cycle(5)).expect("C5");
    let omega = clique_number(g);
    Ok(InvariantRecord {
        order: g.order(),
        edges: g.edge_count(),
        omega,
        alpha: independence_number(g),
        chi: chromatic_number(g),
        theta: clique_cover_number(g),
        nu: matching_number(g),
        bipartite: g.is_bipartite(),
        triangle_free: omega <= 2,
        claw_free: contains_induced(g, &claw).is_none(),
        c5_free: contains_induced(g, &c5).is_none(),
        perfect: is_perfect(g)?,
        threshold: is_threshold(g),
        sum_perfect: is_sum_perfect(g)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(f: NamedFamily) -> Graph {
        construct_named(&f).unwrap()
    }

    #[test]
    fn clique_and_independence_examples() {
        let c5 = named(NamedFamily::Cycle(5));
        assert_eq!((clique_number(&c5), independence_number(&c5)), (2, 2));
        let k23 = named(NamedFamily::CompleteBipartite(2, 3));
        assert_eq!((clique_number(&k23), independence_number(&k23)), (2, 3));
        let three_k2 = named(NamedFamily::Union(vec![
            NamedFamily::Complete(2),
            NamedFamily::Complete(2),
            NamedFamily::Complete(2),
        ]));
        assert_eq!((clique_number(&three_k2), independence_number(&three_k2)), (2, 3));
        assert_eq!(clique_number(&Graph::empty(0).unwrap()), 0);
    }

    #[test]
    fn coloring_examples() {
        let c5 = named(NamedFamily::Cycle(5));
        assert_eq!((chromatic_number(&c5), clique_cover_number(&c5)), (3, 3));
        let c7 = named(NamedFamily::Cycle(7));
        assert_eq!((chromatic_number(&c7), clique_cover_number(&c7)), (3, 4));
        let p6 = named(NamedFamily::Path(6));
        assert_eq!((chromatic_number(&p6), clique_cover_number(&p6)), (2, 3));
        assert_eq!(chromatic_number(&Graph::empty(0).unwrap()), 0);
    }

    #[test]
    fn matching_examples() {
        let three_k2 = named(NamedFamily::Union(vec![
            NamedFamily::Complete(2),
            NamedFamily::Complete(2),
            NamedFamily::Complete(2),
        ]));
        assert_eq!(matching_number(&three_k2), 3);
        assert_eq!(matching_number(&named(NamedFamily::Claw)), 1);
        assert_eq!(matching_number(&named(NamedFamily::Cycle(6))), 3);
    }

    #[test]
    fn perfect_examples() {
        assert!(!is_perfect(&named(NamedFamily::Cycle(5))).unwrap());
        assert!(is_perfect(&named(NamedFamily::Path(6))).unwrap());
        assert!(!is_perfect(&named(NamedFamily::Cycle(7)).complement()).unwrap());
        assert!(is_perfect(&named(NamedFamily::Cycle(6))).unwrap());
        assert!(is_perfect(&Graph::empty(17).unwrap()).is_err());
    }

    #[test]
    fn perfect_matches_definition_on_small_graphs() {
        for g in [
            named(NamedFamily::Cycle(5)),
            named(NamedFamily::Cycle(6)),
            named(NamedFamily::Cycle(7)),
            named(NamedFamily::Cycle(7)).complement(),
            named(NamedFamily::Path(7)),
            named(NamedFamily::Complete(5)),
        ] {
            assert_eq!(is_perfect(&g).unwrap(), is_perfect_definitional(&g));
        }
    }

    #[test]
    fn distinct_vertex_examples() {
        // isolated vertices are theta-distinct
        let g = named(NamedFamily::Cycle(5)).disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        assert!(distinct_vertices(&g, DistinctMode::Theta).contains(&5));
        // every vertex of K_n is chi-distinct
        let k4 = named(NamedFamily::Complete(4));
        assert_eq!(distinct_vertices(&k4, DistinctMode::Chi), vec![0, 1, 2, 3]);
        // C6 has no chi-distinct vertex (chi stays 2 after any deletion)
        assert!(distinct_vertices(&named(NamedFamily::Cycle(6)), DistinctMode::Chi).is_empty());
        // every C5 vertex is chi-distinct: deletion leaves P4 with chi 2
        assert_eq!(distinct_vertices(&named(NamedFamily::Cycle(5)), DistinctMode::Chi).len(), 5);
    }

    #[test]
    fn threshold_examples() {
        assert!(is_threshold(&named(NamedFamily::Complete(5))));
        assert!(!is_threshold(&named(NamedFamily::Path(4))));
        assert!(!is_threshold(&named(NamedFamily::Cycle(4))));
        assert!(is_threshold(&Graph::empty(4).unwrap()));
        for g in [
            named(NamedFamily::Complete(4)),
            named(NamedFamily::Path(4)),
            named(NamedFamily::Cycle(4)),
            named(NamedFamily::Claw),
            named(NamedFamily::Cycle(5)),
        ] {
            assert_eq!(is_threshold(&g), is_threshold_by_forbidden(&g));
        }
    }

    #[test]
    fn sum_perfect_examples() {
        // threshold graph: K1 repeatedly dominated
        let mut t = Graph::empty(1).unwrap();
        for _ in 0..3 {
            t = t.add_vertex(t.vertex_mask()).unwrap();
        }
        assert!(is_sum_perfect(&t).unwrap());
        assert!(!is_sum_perfect(&named(NamedFamily::Cycle(5))).unwrap());
        assert!(is_sum_perfect(&named(NamedFamily::Path(4))).unwrap());
    }
}
