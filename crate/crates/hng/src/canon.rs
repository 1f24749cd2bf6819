//! Canonical forms, isomorphism tests, and subgraph containment.
//!
//! The canonical code of a graph is the lexicographically minimal
//! upper-triangle adjacency bitstring over all vertex relabelings. The
//! search is restricted to relabelings compatible with an iterated
//! degree-partition refinement, which is an isomorphism-invariant
//! restriction, and pruned against the best prefix found so far.

use crate::graph::{Graph, MAX_ORDER};

/// Isomorphism-invariant key: order plus the minimal adjacency bitstring.
///
/// Pair (i, j) with i < j occupies bit index k = j(j-1)/2 + i, stored
/// MSB-first inside `bits`, so the derived `Ord` equals lexicographic order
/// on the bitstring. This matches graph6 bit order, so sorted codes and
/// sorted graph6 lines agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    pub order: u8,
    pub bits: [u64; 8],
}

#[inline]
fn set_bit(bits: &mut [u64; 8], k: usize) {
    bits[k / 64] |= 1u64 << (63 - k % 64);
}

#[inline]
fn get_bit(bits: &[u64; 8], k: usize) -> bool {
    bits[k / 64] >> (63 - k % 64) & 1 == 1
}

/// Reads `len` consecutive bits starting at `start` as an integer, first
/// bit most significant. `len` <= 63.
fn get_run(bits: &[u64; 8], start: usize, len: usize) -> u64 {
    let mut v = 0u64;
    for k in start..start + len {
        v = v << 1 | get_bit(bits, k) as u64;
    }
    v
}

impl CanonicalCode {
    /// Reconstructs the canonical representative graph.
    pub fn to_graph(&self) -> Graph {
        let n = self.order as usize;
        let mut g = Graph::empty(n).expect("code order within cap");
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if get_bit(&self.bits, k) {
                    g.add_edge(i, j);
                }
                k += 1;
            }
        }
        g
    }
}

/// Iterated degree refinement: start from degrees, repeatedly re-rank
/// vertices by (current rank, sorted neighbor ranks) until stable. The
/// resulting ranks are isomorphism-invariant.
fn refinement_ranks(g: &Graph) -> Vec<u32> {
    let n = g.order();
    let mut rank: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    loop {
        let mut sigs: Vec<(u32, Vec<u32>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut ns: Vec<u32> = Vec::with_capacity(g.degree(v));
            let mut m = g.neighbors(v);
            while m != 0 {
                ns.push(rank[m.trailing_zeros() as usize]);
                m &= m - 1;
            }
            ns.sort_unstable();
            sigs.push((rank[v], ns));
        }
        let mut sorted: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        let new_rank: Vec<u32> = (0..n)
            .map(|v| sorted.binary_search(&&sigs[v]).unwrap() as u32)
            .collect();
        if new_rank == rank {
            return rank;
        }
        rank = new_rank;
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    n: usize,
    /// class rank expected at each position
    slot_rank: Vec<u32>,
    rank: Vec<u32>,
    perm: [usize; MAX_ORDER],
    cur: [u64; 8],
    best: [u64; 8],
    have_best: bool,
}

pub fn canonical_code(g: &Graph) -> CanonicalCode {
    let n = g.order();
    if n <= 1 {
        return CanonicalCode {
            order: n as u8,
            bits: [0; 8],
        };
    }
    let rank = refinement_ranks(g);
    let mut slot_rank = rank.clone();
    slot_rank.sort_unstable();
    let mut s = CanonSearch {
        g,
        n,
        slot_rank,
        rank,
        perm: [0; MAX_ORDER],
        cur: [0; 8],
        best: [0; 8],
        have_best: false,
    };
    // perm is threaded through cur/placed; store positions explicitly
    canon_recurse(&mut s, 0, true);
    CanonicalCode {
        order: n as u8,
        bits: s.best,
    }
}

fn canon_recurse(s: &mut CanonSearch, pos: usize, tight: bool) {
    if pos == s.n {
        if !s.have_best || s.cur < s.best {
            s.best = s.cur;
            s.have_best = true;
        }
        return;
    }
    let start = pos * pos.saturating_sub(1) / 2;
    let mut placed = 0u32;
    for i in 0..pos {
        placed |= 1 << s.perm[i];
    }
    // tight: cur's bits so far equal best's. After any completed child the
    // best extends cur's prefix, so comparisons re-tighten.
    let mut tight = tight;
    for v in 0..s.n {
        if placed >> v & 1 == 1 || s.rank[v] != s.slot_rank[pos] {
            continue;
        }
        let mut col = 0u64;
        for i in 0..pos {
            col = col << 1 | s.g.has_edge(s.perm[i], v) as u64;
        }
        let mut t = tight;
        if s.have_best && tight && pos > 0 {
            // best may improve while scanning this level, so re-read it
            let best_col = get_run(&s.best, start, pos);
            if col > best_col {
                continue;
            }
            if col < best_col {
                t = false;
            }
        }
        let saved = s.cur;
        for i in 0..pos {
            if col >> (pos - 1 - i) & 1 == 1 {
                set_bit(&mut s.cur, start + i);
            }
        }
        s.perm[pos] = v;
        canon_recurse(s, pos + 1, t);
        s.cur = saved;
        tight = s.have_best;
    }
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    canonical_code(a) == canonical_code(b)
}

/// Sorted canonical codes of the connected components. Complete
/// isomorphism invariant that stays cheap on unions of small components,
/// where a whole-graph canonical search would wade through the full
/// component-permutation symmetry.
pub fn component_key(g: &Graph) -> Vec<CanonicalCode> {
    let mut key: Vec<CanonicalCode> = g
        .component_masks()
        .into_iter()
        .map(|m| canonical_code(&g.induced_by_mask(m)))
        .collect();
    key.sort_unstable();
    key
}

/// Visit order for pattern vertices: greedily pick the vertex with the most
/// already-ordered neighbors (ties: higher degree, then lower index), so the
/// backtracking search gains adjacency constraints as early as possible.
fn pattern_order(p: &Graph) -> Vec<usize> {
    let n = p.order();
    let mut order = Vec::with_capacity(n);
    let mut chosen = 0u32;
    for _ in 0..n {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..n {
            if chosen >> v & 1 == 1 {
                continue;
            }
            let anchored = (p.neighbors(v) & chosen).count_ones() as usize;
            let key = (anchored, p.degree(v), n - v);
            if best.map_or(true, |(a, d, i)| key > (a, d, i)) {
                best = Some(key);
            }
        }
        let (_, _, inv) = best.unwrap();
        let v = n - inv;
        order.push(v);
        chosen |= 1 << v;
    }
    order
}

/// Degree-profile filter: an embedding (induced or not) maps pattern
/// vertices of degree >= d to distinct host vertices of degree >= d.
fn degree_profile_ok(host: &Graph, pattern: &Graph) -> bool {
    let mut hd: Vec<usize> = (0..host.order()).map(|v| host.degree(v)).collect();
    let mut pd: Vec<usize> = (0..pattern.order()).map(|v| pattern.degree(v)).collect();
    hd.sort_unstable_by(|a, b| b.cmp(a));
    pd.sort_unstable_by(|a, b| b.cmp(a));
    pd.iter().zip(hd.iter()).all(|(p, h)| p <= h)
}

/// First induced copy of `pattern` in `host`, as a sorted host vertex
/// subset, searched in a deterministic order (ascending candidates).
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let np = pattern.order();
    if np > host.order() {
        return None;
    }
    if np == 0 {
        return Some(Vec::new());
    }
    if !degree_profile_ok(host, pattern) {
        return None;
    }
    let order = pattern_order(pattern);
    let mut map = vec![usize::MAX; np];
    let mut used = 0u32;
    if induced_recurse(host, pattern, &order, 0, &mut map, &mut used) {
        let mut w: Vec<usize> = map;
        w.sort_unstable();
        return Some(w);
    }
    None
}

fn induced_recurse(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut u32,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    let du = pattern.degree(u);
    'cand: for v in 0..host.order() {
        if *used >> v & 1 == 1 || host.degree(v) < du {
            continue;
        }
        for &w in &order[..depth] {
            if pattern.has_edge(u, w) != host.has_edge(v, map[w]) {
                continue 'cand;
            }
        }
        map[u] = v;
        *used |= 1 << v;
        if induced_recurse(host, pattern, order, depth + 1, map, used) {
            return true;
        }
        *used &= !(1 << v);
        map[u] = usize::MAX;
    }
    false
}

/// First (not necessarily induced) subgraph embedding: injective vertex map
/// `pattern index -> host vertex` preserving edges.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let np = pattern.order();
    if np > host.order() {
        return None;
    }
    if np == 0 {
        return Some(Vec::new());
    }
    if !degree_profile_ok(host, pattern) {
        return None;
    }
    let order = pattern_order(pattern);
    let mut map = vec![usize::MAX; np];
    let mut used = 0u32;
    if subgraph_recurse(host, pattern, &order, 0, &mut map, &mut used) {
        return Some(map);
    }
    None
}

fn subgraph_recurse(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut u32,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    let du = pattern.degree(u);
    'cand: for v in 0..host.order() {
        if *used >> v & 1 == 1 || host.degree(v) < du {
            continue;
        }
        for &w in &order[..depth] {
            if pattern.has_edge(u, w) && !host.has_edge(v, map[w]) {
                continue 'cand;
            }
        }
        map[u] = v;
        *used |= 1 << v;
        if subgraph_recurse(host, pattern, order, depth + 1, map, used) {
            return true;
        }
        *used &= !(1 << v);
        map[u] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{construct_named, NamedFamily};

    fn cycle(n: usize) -> Graph {
        construct_named(&NamedFamily::Cycle(n)).unwrap()
    }
    fn path(n: usize) -> Graph {
        construct_named(&NamedFamily::Path(n)).unwrap()
    }
    fn complete(n: usize) -> Graph {
        construct_named(&NamedFamily::Complete(n)).unwrap()
    }

    #[test]
    fn canonical_code_examples() {
        assert_eq!(canonical_code(&cycle(5)), canonical_code(&cycle(5).complement()));
        // relabeling invariance: reverse P_4
        let p4 = path(4);
        let rev = p4.induced_subgraph(&[3, 2, 1, 0]).unwrap();
        let _ = rev; // induced_subgraph relabels ascending; build reverse by edges
        let rev = Graph::from_edges(4, &[(3, 2), (2, 1), (1, 0)]).unwrap();
        assert_eq!(canonical_code(&p4), canonical_code(&rev));
        assert_ne!(canonical_code(&p4), canonical_code(&complete(4)));
    }

    #[test]
    fn codes_round_trip_through_graph() {
        for g in [cycle(6), path(5), complete(4), construct_named(&NamedFamily::Claw).unwrap()] {
            let c = canonical_code(&g);
            let rep = c.to_graph();
            assert_eq!(canonical_code(&rep), c);
            assert!(are_isomorphic(&g, &rep));
        }
    }

    #[test]
    fn are_isomorphic_examples() {
        assert!(are_isomorphic(&cycle(5), &cycle(5).complement()));
        let claw = construct_named(&NamedFamily::Claw).unwrap();
        assert!(!are_isomorphic(&path(4), &claw));
        let three_k2 = construct_named(&NamedFamily::Union(vec![
            NamedFamily::Complete(2),
            NamedFamily::Complete(2),
            NamedFamily::Complete(2),
        ]))
        .unwrap();
        assert!(!are_isomorphic(&three_k2, &cycle(6)));
    }

    #[test]
    fn contains_induced_examples() {
        let c7 = cycle(7);
        let w = contains_induced(&c7, &path(6)).unwrap();
        assert_eq!(w.len(), 6);
        assert!(are_isomorphic(&c7.induced_subgraph(&w).unwrap(), &path(6)));
        assert!(contains_induced(&c7, &cycle(5)).is_none());
        assert_eq!(contains_induced(&cycle(5), &cycle(5)).unwrap(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn contains_subgraph_examples() {
        assert!(contains_subgraph(&complete(4), &cycle(4)).is_some());
        let three_k2 = construct_named(&NamedFamily::Union(vec![
            NamedFamily::Complete(2),
            NamedFamily::Complete(2),
            NamedFamily::Complete(2),
        ]))
        .unwrap();
        assert!(contains_subgraph(&cycle(6), &three_k2).is_some());
        let claw = construct_named(&NamedFamily::Claw).unwrap();
        assert!(contains_subgraph(&claw, &path(4)).is_none());
        // induced fails where plain subgraph succeeds
        assert!(contains_induced(&complete(4), &cycle(4)).is_none());
    }

    #[test]
    fn subgraph_witness_preserves_edges() {
        let map = contains_subgraph(&cycle(6), &path(4)).unwrap();
        let p4 = path(4);
        for (u, v) in p4.edges() {
            assert!(cycle(6).has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn component_key_is_order_insensitive() {
        let a = construct_named(&NamedFamily::Union(vec![
            NamedFamily::Path(3),
            NamedFamily::Complete(3),
        ]))
        .unwrap();
        let b = construct_named(&NamedFamily::Union(vec![
            NamedFamily::Complete(3),
            NamedFamily::Path(3),
        ]))
        .unwrap();
        assert_eq!(component_key(&a), component_key(&b));
        let c = construct_named(&NamedFamily::Union(vec![
            NamedFamily::Path(3),
            NamedFamily::Path(3),
        ]))
        .unwrap();
        assert_ne!(component_key(&a), component_key(&c));
    }
}
