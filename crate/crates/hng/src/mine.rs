//! Mining of minimal forbidden induced subgraphs from exhaustive catalogs,
//! plus the derived obstruction sets: the hereditary-defect-one set and its
//! C5-free / C5-containing split, the claw-free and triangle-free variants,
//! and the minimal forbidden subgraphs for line graphs of the class.

use crate::canon::{canonical_code, component_key, contains_induced, CanonicalCode};
use crate::enumerate::GraphCatalog;
use crate::graph::{graph6_decode, graph6_encode, construct_named, Graph, NamedFamily};
use crate::membership::{hereditary_defect_at_most, ng_defect};
use crate::Error;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::io::Write;
use std::path::Path;

/// A named set of obstruction graphs, sorted by canonical code (which is
/// order-major), with per-order counts and a machine-checked flag for
/// closure under complementation.
#[derive(Clone, Debug)]
pub struct ObstructionSet {
    pub name: String,
    pub graphs: Vec<Graph>,
    pub codes: Vec<CanonicalCode>,
    pub counts_by_order: BTreeMap<usize, usize>,
    pub provenance: String,
    pub complement_closed: bool,
}

impl ObstructionSet {
    pub fn from_graphs(name: &str, graphs: Vec<Graph>, provenance: &str) -> ObstructionSet {
        let mut by_code: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
        for g in graphs {
            by_code.insert(canonical_code(&g), g);
        }
        let codes: Vec<CanonicalCode> = by_code.keys().cloned().collect();
        let graphs: Vec<Graph> = by_code.values().cloned().collect();
        let mut counts_by_order = BTreeMap::new();
        for g in &graphs {
            *counts_by_order.entry(g.order()).or_insert(0usize) += 1;
        }
        let code_set: HashSet<&CanonicalCode> = codes.iter().collect();
        let complement_closed = graphs
            .iter()
            .all(|g| code_set.contains(&canonical_code(&g.complement())));
        ObstructionSet {
            name: name.into(),
            graphs,
            codes,
            counts_by_order,
            provenance: provenance.into(),
            complement_closed,
        }
    }

    pub fn total(&self) -> usize {
        self.codes.len()
    }

    pub fn contains_code(&self, code: &CanonicalCode) -> bool {
        self.codes.binary_search(code).is_ok()
    }

    /// True iff no member occurs as an induced subgraph of `g`. Members are
    /// scanned in ascending order of size, so small obstructions exit early.
    pub fn free_of(&self, g: &Graph) -> bool {
        for p in &self.graphs {
            if p.order() > g.order() {
                return true; // sorted by order; the rest cannot fit
            }
            if contains_induced(g, p).is_some() {
                return false;
            }
        }
        true
    }
}

/// Hereditary defect of every graph in the catalogs, bottom-up: the value
/// for a graph is the max of its own defect and the values of its one-vertex
/// deletions, which the previous catalog already holds.
pub fn hereditary_defect_table(
    catalogs: &[GraphCatalog],
) -> Result<HashMap<CanonicalCode, usize>, Error> {
    let mut table: HashMap<CanonicalCode, usize> = HashMap::new();
    for (i, cat) in catalogs.iter().enumerate() {
        if cat.order != i + 1 {
            return Err(Error::CorruptCatalog(format!(
                "catalog orders must be 1..=k, found {} at position {i}",
                cat.order
            )));
        }
        for (g, code) in cat.graphs.iter().zip(&cat.codes) {
            let mut h = ng_defect(g);
            for v in 0..g.order() {
                let child = g.delete_vertex(v)?;
                if child.order() == 0 {
                    continue;
                }
                let hv = *table
                    .get(&canonical_code(&child))
                    .ok_or_else(|| Error::CorruptCatalog("missing child entry".into()))?;
                h = h.max(hv);
            }
            table.insert(code.clone(), h);
        }
    }
    Ok(table)
}

/// Minimal graphs outside a hereditary class: every one-vertex deletion is
/// in the class but the graph itself is not.
pub fn mine_minimal_fis<F>(
    name: &str,
    catalogs: &[GraphCatalog],
    provenance: &str,
    mut in_class: F,
) -> Result<ObstructionSet, Error>
where
    F: FnMut(&Graph) -> Result<bool, Error>,
{
    let mut found = Vec::new();
    for cat in catalogs {
        'graphs: for g in &cat.graphs {
            if in_class(g)? {
                continue;
            }
            for v in 0..g.order() {
                if !in_class(&g.delete_vertex(v)?)? {
                    continue 'graphs;
                }
            }
            found.push(*g);
        }
    }
    Ok(ObstructionSet::from_graphs(name, found, provenance))
}

/// The minimal forbidden induced subgraphs for hereditary defect <= a,
/// via the precomputed table.
pub fn mine_defect_obstructions(
    name: &str,
    catalogs: &[GraphCatalog],
    table: &HashMap<CanonicalCode, usize>,
    a: usize,
) -> Result<ObstructionSet, Error> {
    let lookup = |g: &Graph| -> Result<bool, Error> {
        if g.order() == 0 {
            return Ok(true);
        }
        table
            .get(&canonical_code(g))
            .map(|&h| h <= a)
            .ok_or_else(|| Error::CorruptCatalog("graph missing from defect table".into()))
    };
    mine_minimal_fis(
        name,
        catalogs,
        &format!("minimal graphs with hereditary defect > {a}, orders 1..={}", catalogs.len()),
        lookup,
    )
}

/// The full obstruction set for hereditary defect <= 1 together with its
/// split into C5-free members and members containing an induced C5.
pub fn derive_f(
    catalogs: &[GraphCatalog],
    table: &HashMap<CanonicalCode, usize>,
) -> Result<(ObstructionSet, ObstructionSet, ObstructionSet), Error> {
    let f = mine_defect_obstructions("f", catalogs, table, 1)?;
    let c5 = construct_named(&NamedFamily::Cycle(5))?;
    let (mut c5_free, mut with_c5) = (Vec::new(), Vec::new());
    for g in &f.graphs {
        if contains_induced(g, &c5).is_none() {
            c5_free.push(*g);
        } else {
            with_c5.push(*g);
        }
    }
    let fs = ObstructionSet::from_graphs("f_s", c5_free, "C5-free members of f");
    let fc = ObstructionSet::from_graphs("f_c", with_c5, "members of f with an induced C5");
    Ok((f, fs, fc))
}

/// Obstructions for claw-free membership: the claw plus every claw-free
/// member of the base set.
pub fn derive_claw_obstructions(f: &ObstructionSet) -> Result<ObstructionSet, Error> {
    let claw = construct_named(&NamedFamily::Claw)?;
    let mut graphs = vec![claw];
    for g in &f.graphs {
        if contains_induced(g, &claw).is_none() {
            graphs.push(*g);
        }
    }
    Ok(ObstructionSet::from_graphs(
        "claw",
        graphs,
        "claw plus claw-free members of f",
    ))
}

/// Obstructions for triangle-free membership: K3 plus every triangle-free
/// member of the base set.
pub fn derive_triangle_obstructions(f: &ObstructionSet) -> Result<ObstructionSet, Error> {
    let k3 = construct_named(&NamedFamily::Complete(3))?;
    let mut graphs = vec![k3];
    for g in &f.graphs {
        if crate::invariants::clique_number(g) <= 2 {
            graphs.push(*g);
        }
    }
    Ok(ObstructionSet::from_graphs(
        "triangle",
        graphs,
        "K3 plus triangle-free members of f",
    ))
}

/// All isolate-free graphs with 1..=max_edges edges, grouped by edge count.
/// Grown by single-edge extensions (new edge between existing vertices, a
/// pendant at an existing vertex, or a fresh K2 component) and deduplicated
/// by component key.
pub fn isolate_free_by_edges(max_edges: usize) -> Result<Vec<Vec<Graph>>, Error> {
    let k2 = construct_named(&NamedFamily::Complete(2))?;
    let mut layers: Vec<Vec<Graph>> = vec![vec![k2]];
    for _ in 1..max_edges {
        let mut seen: HashMap<Vec<CanonicalCode>, Graph> = HashMap::new();
        for g in layers.last().expect("nonempty") {
            let n = g.order();
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        let mut h = *g;
                        h.add_edge(u, v);
                        seen.entry(component_key(&h)).or_insert(h);
                    }
                }
                let h = g.add_vertex(1 << u)?;
                seen.entry(component_key(&h)).or_insert(h);
            }
            let h = g.disjoint_union(&construct_named(&NamedFamily::Complete(2))?)?;
            seen.entry(component_key(&h)).or_insert(h);
        }
        layers.push(seen.into_values().collect());
    }
    Ok(layers)
}

/// Minimal forbidden subgraphs h (no isolated vertices, up to max_edges
/// edges) whose line graph leaves the hereditary-defect-one class. An edge
/// subset of h induces a subgraph of its line graph, so the underlying
/// class of root graphs is closed under subgraphs and minimality reduces to
/// single-edge deletions.
pub fn derive_line_obstructions(max_edges: usize) -> Result<ObstructionSet, Error> {
    let in_class = |h: &Graph| -> Result<bool, Error> {
        let l = crate::structure::line_graph(h)?;
        hereditary_defect_at_most(&l, 1)
    };
    let mut found = Vec::new();
    for layer in isolate_free_by_edges(max_edges)? {
        'graphs: for h in layer {
            if in_class(&h)? {
                continue;
            }
            for (u, v) in h.edges() {
                let mut d = h;
                d.remove_edge(u, v);
                if !in_class(&d.without_isolated())? {
                    continue 'graphs;
                }
            }
            found.push(h.without_isolated());
        }
    }
    Ok(ObstructionSet::from_graphs(
        "line",
        found,
        &format!("minimal root graphs with <= {max_edges} edges whose line graph has hereditary defect > 1"),
    ))
}

#[derive(serde::Serialize, serde::Deserialize)]
struct SetSidecar {
    name: String,
    total: usize,
    counts_by_order: BTreeMap<usize, usize>,
    provenance: String,
    complement_closed: bool,
}

/// Writes `{name}.g6` (sorted graph6 lines) and `{name}.json` (summary) in
/// `dir`, atomically per file.
pub fn store_obstruction_set(set: &ObstructionSet, dir: &Path) -> Result<(), Error> {
    std::fs::create_dir_all(dir)?;
    let g6_path = dir.join(format!("{}.g6", set.name));
    let tmp = g6_path.with_extension("g6.tmp");
    {
        let mut f = std::fs::File::create(&tmp)?;
        writeln!(f, "# hng-obstructions v1 name={} count={}", set.name, set.total())?;
        for g in &set.graphs {
            writeln!(f, "{}", graph6_encode(g))?;
        }
    }
    std::fs::rename(&tmp, &g6_path)?;
    let sidecar = SetSidecar {
        name: set.name.clone(),
        total: set.total(),
        counts_by_order: set.counts_by_order.clone(),
        provenance: set.provenance.clone(),
        complement_closed: set.complement_closed,
    };
    let json_path = dir.join(format!("{}.json", set.name));
    let tmp = json_path.with_extension("json.tmp");
    std::fs::write(&tmp, serde_json::to_string_pretty(&sidecar)?)?;
    std::fs::rename(&tmp, &json_path)?;
    Ok(())
}

pub fn load_obstruction_set(name: &str, dir: &Path) -> Result<ObstructionSet, Error> {
    let g6_path = dir.join(format!("{name}.g6"));
    if !g6_path.exists() {
        return Err(Error::MissingObstructionSet(name.into()));
    }
    let text = std::fs::read_to_string(&g6_path)?;
    let mut graphs = Vec::new();
    for line in text.lines() {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        graphs.push(graph6_decode(line)?);
    }
    let json_path = dir.join(format!("{name}.json"));
    let provenance = if json_path.exists() {
        let sidecar: SetSidecar = serde_json::from_str(&std::fs::read_to_string(&json_path)?)
            .map_err(|e| Error::CorruptCatalog(format!("bad sidecar for {name}: {e}")))?;
        sidecar.provenance
    } else {
        format!("loaded from {}", g6_path.display())
    };
    Ok(ObstructionSet::from_graphs(name, graphs, &provenance))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_up_to;
    use crate::membership::hereditary_ng_defect;

    #[test]
    fn defect_table_matches_direct_scan() {
        let catalogs = enumerate_up_to(6).unwrap();
        let table = hereditary_defect_table(&catalogs).unwrap();
        for cat in &catalogs {
            for (g, code) in cat.graphs.iter().zip(&cat.codes) {
                let direct = hereditary_ng_defect(g).unwrap().hereditary_defect;
                assert_eq!(table[code], direct, "{:?}", g);
            }
        }
    }

    #[test]
    fn defect_zero_obstructions_are_the_threshold_triple() {
        let catalogs = enumerate_up_to(5).unwrap();
        let table = hereditary_defect_table(&catalogs).unwrap();
        let set = mine_defect_obstructions("t", &catalogs, &table, 0).unwrap();
        assert_eq!(set.total(), 3);
        assert_eq!(set.counts_by_order.get(&4), Some(&3));
        let expected = [
            construct_named(&NamedFamily::Path(4)).unwrap(),
            construct_named(&NamedFamily::Cycle(4)).unwrap(),
            construct_named(&NamedFamily::Union(vec![
                NamedFamily::Complete(2),
                NamedFamily::Complete(2),
            ]))
            .unwrap(),
        ];
        for g in expected {
            assert!(set.contains_code(&canonical_code(&g)));
        }
        assert!(set.complement_closed);
    }

    #[test]
    fn isolate_free_layer_counts() {
        let layers = isolate_free_by_edges(3).unwrap();
        let counts: Vec<usize> = layers.iter().map(|l| l.len()).collect();
        assert_eq!(counts, vec![1, 2, 5]);
    }

    #[test]
    fn obstruction_set_round_trip() {
        let graphs = vec![
            construct_named(&NamedFamily::Path(4)).unwrap(),
            construct_named(&NamedFamily::Cycle(5)).unwrap(),
        ];
        let set = ObstructionSet::from_graphs("demo", graphs, "unit test");
        let dir = std::env::temp_dir().join(format!("hng-obs-test-{}", std::process::id()));
        store_obstruction_set(&set, &dir).unwrap();
        let back = load_obstruction_set("demo", &dir).unwrap();
        assert_eq!(back.codes, set.codes);
        assert_eq!(back.provenance, "unit test");
        assert!(matches!(
            load_obstruction_set("absent", &dir),
            Err(Error::MissingObstructionSet(_))
        ));
        std::fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn free_of_examples() {
        let set = ObstructionSet::from_graphs(
            "demo",
            vec![construct_named(&NamedFamily::Path(4)).unwrap()],
            "unit test",
        );
        assert!(set.free_of(&construct_named(&NamedFamily::Complete(5)).unwrap()));
        assert!(!set.free_of(&construct_named(&NamedFamily::Cycle(5)).unwrap()));
    }
}
