//! Structure analyzers for graphs of hereditary defect at most one: C5 type
//! profiles, the fast recognition and invariant algorithms driven by them,
//! the three C5-based families D1/D2/D3, and clause-by-clause checks for the
//! line-graph, claw-free, and triangle-free characterizations.

use crate::graph::{Graph, VertexRole};
use crate::invariants::{clique_number, is_perfect};
use crate::mine::ObstructionSet;
use crate::Error;

/// A vertex type is the subset of an induced C5 a vertex is adjacent to:
/// bit i set means adjacent to c_{i+1}.
pub fn type_mask(labels: &[usize]) -> u8 {
    let mut t = 0u8;
    for &l in labels {
        assert!((1..=5).contains(&l), "labels are c1..c5");
        t |= 1 << (l - 1);
    }
    t
}

/// The ten symmetries of the pentagon as maps on positions 0..5: five
/// rotations and five reflections.
pub const DIHEDRAL: [[usize; 5]; 10] = {
    let mut syms = [[0usize; 5]; 10];
    let mut k = 0;
    while k < 5 {
        let mut i = 0;
        while i < 5 {
            syms[k][i] = (i + k) % 5;
            syms[5 + k][i] = (5 + k - i) % 5;
            i += 1;
        }
        k += 1;
    }
    syms
};

/// Image of a type under one pentagon symmetry.
pub fn apply_sym(t: u8, sym: &[usize; 5]) -> u8 {
    let mut out = 0u8;
    for i in 0..5 {
        if t >> i & 1 == 1 {
            out |= 1 << sym[i];
        }
    }
    out
}

/// Lexicographically least image over the ten symmetries.
pub fn canonical_type(t: u8) -> u8 {
    DIHEDRAL.iter().map(|s| apply_sym(t, s)).min().expect("ten symmetries")
}

/// An induced C5 ordered so its edges are c1c2, c2c3, c3c4, c4c5, c1c5,
/// plus the type of every outside vertex with respect to it.
#[derive(Clone, Debug)]
pub struct C5TypeProfile {
    pub c5: [usize; 5],
    /// (outside vertex, type mask), ascending by vertex
    pub types: Vec<(usize, u8)>,
}

fn order_c5(g: &Graph, verts: &[usize; 5]) -> [usize; 5] {
    let in_set = |v: usize| verts.contains(&v);
    let c1 = verts[0];
    let mut nbrs: Vec<usize> = verts[1..]
        .iter()
        .copied()
        .filter(|&v| g.has_edge(c1, v))
        .collect();
    nbrs.sort_unstable();
    let (c2, c5) = (nbrs[0], nbrs[1]);
    let c3 = (0..g.order())
        .find(|&v| in_set(v) && v != c1 && v != c5 && g.has_edge(c2, v))
        .expect("cycle");
    let c4 = verts
        .iter()
        .copied()
        .find(|&v| v != c1 && v != c2 && v != c3 && v != c5)
        .expect("five vertices");
    [c1, c2, c3, c4, c5]
}

fn is_induced_c5(g: &Graph, mask: u32) -> bool {
    let h = g.induced_by_mask(mask);
    (0..5).all(|v| h.degree(v) == 2) && h.component_masks().len() == 1
}

/// Vertex sets (ascending) inducing a C5, ordered with edges c1c2..c1c5.
pub fn all_induced_c5(g: &Graph) -> Vec<[usize; 5]> {
    let n = g.order();
    let mut out = Vec::new();
    if n < 5 {
        return out;
    }
    let mut idx = [0usize; 5];
    combos(n, 5, &mut idx, 0, 0, &mut |sel: &[usize; 5]| {
        let mask = sel.iter().fold(0u32, |m, &v| m | 1 << v);
        if is_induced_c5(g, mask) {
            out.push(order_c5(g, sel));
        }
    });
    out
}

fn combos<F: FnMut(&[usize; 5])>(n: usize, k: usize, idx: &mut [usize; 5], pos: usize, start: usize, f: &mut F) {
    if pos == k {
        f(idx);
        return;
    }
    for v in start..n {
        idx[pos] = v;
        combos(n, k, idx, pos + 1, v + 1, f);
    }
}

fn profile_for(g: &Graph, c5: [usize; 5]) -> C5TypeProfile {
    let in_c5 = c5.iter().fold(0u32, |m, &v| m | 1 << v);
    let mut types = Vec::new();
    for v in 0..g.order() {
        if in_c5 >> v & 1 == 1 {
            continue;
        }
        let mut t = 0u8;
        for (i, &c) in c5.iter().enumerate() {
            if g.has_edge(v, c) {
                t |= 1 << i;
            }
        }
        types.push((v, t));
    }
    C5TypeProfile { c5, types }
}

/// Type profile for the first induced C5 in deterministic search order.
pub fn find_induced_c5(g: &Graph) -> Option<C5TypeProfile> {
    all_induced_c5(g).into_iter().next().map(|c5| profile_for(g, c5))
}

/// Can vertices of types t1 and t2 (adjacent or not) coexist outside one
/// induced C5 in the class? Decided by testing the 7-vertex gadget for
/// obstruction-freeness.
pub fn type_compatible(t1: u8, adjacent: bool, t2: u8, f: &ObstructionSet) -> bool {
    let mut g = Graph::empty(7).expect("7 <= 32");
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
    }
    for i in 0..5 {
        if t1 >> i & 1 == 1 {
            g.add_edge(5, i);
        }
        if t2 >> i & 1 == 1 {
            g.add_edge(6, i);
        }
    }
    if adjacent {
        g.add_edge(5, 6);
    }
    f.free_of(&g)
}

/// Class recognition by obstruction scan.
pub fn is_1hng_fast(g: &Graph, f: &ObstructionSet) -> bool {
    f.free_of(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ApexPerfect {
    AlreadyPerfect,
    Vertex(usize),
}

fn require_member(g: &Graph, f: &ObstructionSet) -> Result<(), Error> {
    if !is_1hng_fast(g, f) {
        return Err(Error::NotInClass(
            "graph contains an obstruction to hereditary defect <= 1".into(),
        ));
    }
    Ok(())
}

/// A vertex whose deletion is perfect. An imperfect member's only minimal
/// imperfection is C5 (longer odd holes and their complements have
/// hereditary defect 2), so the witness is searched on an induced C5.
pub fn apex_perfect_witness(g: &Graph, f: &ObstructionSet) -> Result<ApexPerfect, Error> {
    require_member(g, f)?;
    apex_perfect_unchecked(g)
}

fn apex_perfect_unchecked(g: &Graph) -> Result<ApexPerfect, Error> {
    if is_perfect(g)? {
        return Ok(ApexPerfect::AlreadyPerfect);
    }
    let profile = find_induced_c5(g)
        .ok_or_else(|| Error::NotInClass("imperfect member without an induced C5".into()))?;
    for &v in &profile.c5 {
        if is_perfect(&g.delete_vertex(v)?)? {
            return Ok(ApexPerfect::Vertex(v));
        }
    }
    Err(Error::NotInClass("no C5 vertex deletion is perfect".into()))
}

/// Clique number via the class structure: exact on perfect members, and on
/// imperfect members the maximum clique survives the deletion of some
/// vertex of an induced C5 whose removal leaves a perfect graph.
pub fn clique_number_fast(g: &Graph, f: &ObstructionSet) -> Result<usize, Error> {
    require_member(g, f)?;
    clique_number_fast_unchecked(g)
}

pub(crate) fn clique_number_fast_unchecked(g: &Graph) -> Result<usize, Error> {
    if is_perfect(g)? {
        return Ok(clique_number(g));
    }
    let profile = find_induced_c5(g)
        .ok_or_else(|| Error::NotInClass("imperfect member without an induced C5".into()))?;
    let mut best = None;
    for &v in &profile.c5 {
        let h = g.delete_vertex(v)?;
        if is_perfect(&h)? {
            let w = clique_number(&h);
            best = Some(best.map_or(w, |b: usize| b.max(w)));
        }
    }
    best.ok_or_else(|| Error::NotInClass("no C5 vertex deletion is perfect".into()))
}

pub fn independence_number_fast(g: &Graph, f: &ObstructionSet) -> Result<usize, Error> {
    clique_number_fast(&g.complement(), f)
}

const EXCEPTIONAL_SINGLE: [u8; 3] = [
    0b00001, // {c1}
    0b00101, // {c1,c3}
    0b01001, // {c1,c4}
];
const EXCEPTIONAL_PAIR: [u8; 2] = [
    0b01011, // {c1,c2,c4}
    0b10111, // {c1,c2,c3,c5}
];

/// Does g reduce to an induced C5 plus a stable set whose types fall in the
/// exceptional lists? Outside vertices of type empty (in no maximum clique)
/// and of full type (in every maximum clique) shift chi and omega together,
/// so they are deleted before the shape is read.
fn exceptional_shape(g: &Graph) -> bool {
    for c5 in all_induced_c5(g) {
        let profile = profile_for(g, c5);
        let keep: Vec<(usize, u8)> = profile
            .types
            .iter()
            .copied()
            .filter(|&(_, t)| t != 0 && t != 0b11111)
            .collect();
        // surviving outside vertices must form a stable set
        let stable = keep
            .iter()
            .all(|&(v, _)| keep.iter().all(|&(w, _)| v >= w || !g.has_edge(v, w)));
        if !stable {
            continue;
        }
        for sym in &DIHEDRAL {
            let ts: Vec<u8> = keep.iter().map(|&(_, t)| apply_sym(t, sym)).collect();
            let case_one = ts.iter().all(|t| EXCEPTIONAL_SINGLE.contains(t));
            let case_two = ts.iter().all(|t| EXCEPTIONAL_PAIR.contains(t))
                && EXCEPTIONAL_PAIR.iter().all(|t| ts.contains(t));
            if case_one || case_two {
                return true;
            }
        }
    }
    false
}

/// Chromatic number via the class structure: omega on perfect members;
/// omega + 1 exactly on the exceptional C5-plus-stable-set shape, else
/// omega.
pub fn chromatic_number_fast(g: &Graph, f: &ObstructionSet) -> Result<usize, Error> {
    require_member(g, f)?;
    chromatic_number_fast_unchecked(g)
}

pub(crate) fn chromatic_number_fast_unchecked(g: &Graph) -> Result<usize, Error> {
    if is_perfect(g)? {
        return Ok(clique_number(g));
    }
    let omega = clique_number_fast_unchecked(g)?;
    Ok(if exceptional_shape(g) { omega + 1 } else { omega })
}

pub fn clique_cover_number_fast(g: &Graph, f: &ObstructionSet) -> Result<usize, Error> {
    chromatic_number_fast(&g.complement(), f)
}

/// One vertex per edge (lexicographic order); adjacent iff the edges share
/// an endpoint.
pub fn line_graph(g: &Graph) -> Result<Graph, Error> {
    let edges = g.edges();
    if edges.len() > 32 {
        return Err(Error::TooManyEdges(edges.len()));
    }
    let mut l = Graph::empty(edges.len())?;
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            let (u1, v1) = edges[a];
            let (u2, v2) = edges[b];
            if u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2 {
                l.add_edge(a, b);
            }
        }
    }
    Ok(l)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DFamily {
    D1,
    D2,
    D3,
}

impl DFamily {
    pub fn name(self) -> &'static str {
        match self {
            DFamily::D1 => "D1",
            DFamily::D2 => "D2",
            DFamily::D3 => "D3",
        }
    }
}

/// Allowed added-vertex types per family.
pub fn allowed_types(family: DFamily) -> [u8; 3] {
    match family {
        DFamily::D1 => [0b00101, 0b01001, 0b01101], // {c1,c3},{c1,c4},{c1,c3,c4}
        DFamily::D2 => [0b01000, 0b01001, 0b01101], // {c4},{c1,c4},{c1,c3,c4}
        DFamily::D3 => [0b00001, 0b00101, 0b01001], // {c1},{c1,c3},{c1,c4}
    }
}

/// A family member: C5 plus a stable set of typed vertices.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub family: DFamily,
    /// (type mask, number of added vertices of that type)
    pub counts: Vec<(u8, usize)>,
}

pub fn generate_family(spec: &FamilySpec) -> Result<Graph, Error> {
    let allowed = allowed_types(spec.family);
    let extra: usize = spec.counts.iter().map(|&(_, k)| k).sum();
    if 5 + extra > crate::graph::MAX_ORDER {
        return Err(Error::OrderCapExceeded(5 + extra));
    }
    let mut g = Graph::empty(5)?;
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
    }
    for &(t, k) in &spec.counts {
        if !allowed.contains(&t) {
            return Err(Error::InvalidTypeForFamily(t, spec.family.name()));
        }
        for _ in 0..k {
            let nb = (0..5).filter(|&i| t >> i & 1 == 1).fold(0u32, |m, i| m | 1 << i);
            g = g.add_vertex(nb)?;
        }
    }
    Ok(g)
}

/// Is g a member of the family: some induced C5 and pentagon symmetry under
/// which all outside vertices form a stable set of allowed types?
pub fn in_d_family(g: &Graph, family: DFamily) -> bool {
    let allowed = allowed_types(family);
    for c5 in all_induced_c5(g) {
        let profile = profile_for(g, c5);
        let stable = profile
            .types
            .iter()
            .all(|&(v, _)| profile.types.iter().all(|&(w, _)| v >= w || !g.has_edge(v, w)));
        if !stable {
            continue;
        }
        for sym in &DIHEDRAL {
            if profile
                .types
                .iter()
                .all(|&(_, t)| allowed.contains(&apply_sym(t, sym)))
            {
                return true;
            }
        }
    }
    false
}

/// Subgraph shape report: covered by a nonadjacent pair (so a subgraph of
/// K_{2,n-2}) and/or by a pair with no common neighbor (a double star).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubgraphShape {
    pub biclique: bool,
    pub doublestar: bool,
}

pub fn biclique_or_doublestar(g: &Graph) -> SubgraphShape {
    let n = g.order();
    if n < 2 || g.edge_count() == 0 {
        return SubgraphShape { biclique: true, doublestar: true };
    }
    let all_edges: Vec<(usize, usize)> = g.edges();
    let covers = |u: usize, v: usize| all_edges.iter().all(|&(a, b)| a == u || a == v || b == u || b == v);
    let mut shape = SubgraphShape { biclique: false, doublestar: false };
    for u in 0..n {
        for v in u + 1..n {
            if !covers(u, v) {
                continue;
            }
            if !g.has_edge(u, v) {
                shape.biclique = true;
            }
            if g.neighbors(u) & g.neighbors(v) == 0 {
                shape.doublestar = true;
            }
        }
    }
    shape
}

fn peel_role(g: &Graph, role: VertexRole) -> Graph {
    let mut h = *g;
    'peel: loop {
        for v in 0..h.order() {
            if h.vertex_role(v).expect("in range") == role {
                h = h.delete_vertex(v).expect("in range");
                continue 'peel;
            }
        }
        return h;
    }
}

/// Peel neutral vertices for the claw-free characterization: isolated
/// vertices always (they change neither membership nor claw-freeness), and
/// dominating vertices only when the remainder has independence number at
/// most 2, since a dominating vertex over three pairwise nonadjacent
/// vertices is the center of a claw. For claw-free inputs this removes
/// every extremal vertex.
fn peel_claw_neutral(g: &Graph) -> Graph {
    let mut h = *g;
    'peel: loop {
        for v in 0..h.order() {
            let keep = match h.vertex_role(v).expect("in range") {
                VertexRole::Ordinary => true,
                VertexRole::Isolated => false,
                VertexRole::Dominating => {
                    crate::invariants::independence_number(&h.delete_vertex(v).expect("in range")) > 2
                }
            };
            if !keep {
                h = h.delete_vertex(v).expect("in range");
                continue 'peel;
            }
        }
        return h;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremId {
    /// Line graphs with hereditary defect <= 1 vs. root-graph obstructions.
    LineGraphs,
    /// Claw-free members vs. induced obstructions and the D-families.
    ClawFree,
    /// Triangle-free members vs. induced obstructions and explicit shapes.
    TriangleFree,
}

#[derive(Clone, Debug)]
pub struct ClauseReport {
    pub clauses: Vec<(&'static str, bool)>,
    pub consistent: bool,
}

/// Evaluates the mechanized clauses of one characterization on g. `f` is
/// the base induced-obstruction set; `aux` the theorem's own set (root
/// subgraph obstructions, claw variant, or triangle variant).
pub fn check_characterization(
    theorem: TheoremId,
    g: &Graph,
    f: &ObstructionSet,
    aux: &ObstructionSet,
) -> Result<ClauseReport, Error> {
    if f.total() == 0 || aux.total() == 0 {
        return Err(Error::MissingObstructionSet(
            "characterization checks need mined sets".into(),
        ));
    }
    let clauses: Vec<(&'static str, bool)> = match theorem {
        TheoremId::LineGraphs => {
            let line_member = is_1hng_fast(&line_graph(g)?, f);
            let no_root_subgraph = aux
                .graphs
                .iter()
                .all(|p| crate::canon::contains_subgraph(g, p).is_none());
            vec![("line graph in class", line_member), ("no root obstruction subgraph", no_root_subgraph)]
        }
        TheoremId::ClawFree => {
            let claw = crate::graph::construct_named(&crate::graph::NamedFamily::Claw)?;
            let claw_free = crate::canon::contains_induced(g, &claw).is_none();
            let i = is_1hng_fast(g, f) && claw_free;
            let ii = aux.free_of(g);
            let perfect_branch = is_perfect(g)? && claw_free && is_1hng_fast(g, f);
            let peeled = peel_claw_neutral(g).complement();
            let family_branch = [DFamily::D1, DFamily::D2, DFamily::D3]
                .into_iter()
                .any(|d| in_d_family(&peeled, d));
            vec![
                ("claw-free member", i),
                ("no induced obstruction", ii),
                ("perfect branch or complement D-family", perfect_branch || family_branch),
            ]
        }
        TheoremId::TriangleFree => {
            let i = is_1hng_fast(g, f) && clique_number(g) <= 2;
            let ii = aux.free_of(g);
            let shape = biclique_or_doublestar(g);
            let d3 = in_d_family(&peel_role(g, VertexRole::Isolated), DFamily::D3);
            vec![
                ("triangle-free member", i),
                ("no induced obstruction", ii),
                ("biclique, double star, or D3", shape.biclique || shape.doublestar || d3),
            ]
        }
    };
    let consistent = clauses.iter().all(|&(_, b)| b) || clauses.iter().all(|&(_, b)| !b);
    Ok(ClauseReport { clauses, consistent })
}
