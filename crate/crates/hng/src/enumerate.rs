//! Generation of all non-isomorphic graphs of a given order, a persistent
//! graph6 catalog format, and an independent labeled-graph oracle used to
//! validate the generated counts.

use crate::canon::{canonical_code, CanonicalCode};
use crate::graph::{graph6_decode, graph6_encode, Graph};
use crate::Error;
use std::collections::HashSet;
use std::io::Write;
use std::path::Path;

pub const CATALOG_FORMAT_VERSION: u32 = 1;

/// All isomorphism classes of one order, sorted by canonical code.
/// `graphs[i]` is the canonical representative decoded from `codes[i]`.
#[derive(Clone, Debug)]
pub struct GraphCatalog {
    pub order: usize,
    pub codes: Vec<CanonicalCode>,
    pub graphs: Vec<Graph>,
    pub provenance: String,
}

impl GraphCatalog {
    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn contains(&self, code: &CanonicalCode) -> bool {
        self.codes.binary_search(code).is_ok()
    }

    fn from_codes(order: usize, mut codes: Vec<CanonicalCode>, provenance: String) -> GraphCatalog {
        codes.sort_unstable();
        codes.dedup();
        let graphs = codes.iter().map(|c| c.to_graph()).collect();
        GraphCatalog {
            order,
            codes,
            graphs,
            provenance,
        }
    }
}

/// Every isomorphism class on n vertices, built by extending each class of
/// order n-1 with a new vertex over all of its possible neighborhoods.
pub fn enumerate_order(n: usize) -> Result<GraphCatalog, Error> {
    if !(1..=9).contains(&n) {
        return Err(Error::OrderOutOfRange(n, "1..=9"));
    }
    Ok(enumerate_up_to(n)?.pop().expect("nonempty"))
}

/// Catalogs for orders 1..=n, sharing the extension work.
pub fn enumerate_up_to(n: usize) -> Result<Vec<GraphCatalog>, Error> {
    if !(1..=9).contains(&n) {
        return Err(Error::OrderOutOfRange(n, "1..=9"));
    }
    let mut out: Vec<GraphCatalog> = Vec::with_capacity(n);
    let one = Graph::empty(1)?;
    out.push(GraphCatalog::from_codes(
        1,
        vec![canonical_code(&one)],
        "extension v1".into(),
    ));
    for k in 2..=n {
        let mut seen: HashSet<CanonicalCode> = HashSet::new();
        for parent in &out[k - 2].graphs {
            for nb in 0..1u32 << (k - 1) {
                let child = parent.add_vertex(nb)?;
                seen.insert(canonical_code(&child));
            }
        }
        out.push(GraphCatalog::from_codes(
            k,
            seen.into_iter().collect(),
            "extension v1".into(),
        ));
    }
    Ok(out)
}

/// Atomic write: sorted graph6 lines with a header carrying the format
/// version and order.
pub fn store_catalog(c: &GraphCatalog, path: &Path) -> Result<(), Error> {
    let tmp = path.with_extension("tmp");
    {
        let mut f = std::fs::File::create(&tmp)?;
        writeln!(f, "# hng-catalog v{} order={} count={}", CATALOG_FORMAT_VERSION, c.order, c.len())?;
        for g in &c.graphs {
            writeln!(f, "{}", graph6_encode(g))?;
        }
        f.flush()?;
    }
    std::fs::rename(&tmp, path)?;
    Ok(())
}

pub fn load_catalog(path: &Path) -> Result<GraphCatalog, Error> {
    let text = std::fs::read_to_string(path)?;
    let mut order: Option<usize> = None;
    let mut codes: Vec<CanonicalCode> = Vec::new();
    let mut graphs: Vec<Graph> = Vec::new();
    let mut declared: Option<(u32, usize)> = None;
    for line in text.lines() {
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            // header: "# hng-catalog v<V> order=<N> count=<M>"
            let mut version = None;
            let mut ord = None;
            for tok in rest.split_whitespace() {
                if let Some(v) = tok.strip_prefix('v') {
                    version = v.parse::<u32>().ok();
                }
                if let Some(v) = tok.strip_prefix("order=") {
                    ord = v.parse::<usize>().ok();
                }
            }
            if let (Some(v), Some(o)) = (version, ord) {
                if v != CATALOG_FORMAT_VERSION {
                    return Err(Error::CorruptCatalog(format!(
                        "format version {v} does not match expected {CATALOG_FORMAT_VERSION}"
                    )));
                }
                declared = Some((v, o));
            }
            continue;
        }
        let g = graph6_decode(line)?;
        match order {
            None => order = Some(g.order()),
            Some(o) if o != g.order() => {
                return Err(Error::CorruptCatalog(format!(
                    "mixed orders {o} and {} in one catalog",
                    g.order()
                )))
            }
            _ => {}
        }
        let code = canonical_code(&g);
        if let Some(last) = codes.last() {
            if *last >= code {
                return Err(Error::CorruptCatalog(format!(
                    "lines not strictly sorted near {line:?}"
                )));
            }
        }
        codes.push(code);
        graphs.push(g);
    }
    let order = match (order, declared) {
        (Some(o), Some((_, d))) if o != d => {
            return Err(Error::CorruptCatalog(format!(
                "header order {d} does not match contents ({o})"
            )))
        }
        (Some(o), _) => o,
        (None, Some((_, d))) => d,
        (None, None) => 0,
    };
    Ok(GraphCatalog {
        order,
        codes,
        graphs,
        provenance: format!("loaded from {}", path.display()),
    })
}

/// Independent oracle for small orders: walks every labeled graph on n
/// vertices (as an edge-set bitmask), marks whole isomorphism orbits by
/// applying all n! vertex permutations, and counts orbits. The first mask
/// visited in each orbit is its minimum, so the representatives double as
/// labeled-minimal forms.
pub fn naive_oracle(n: usize) -> Result<(usize, Vec<Graph>), Error> {
    if !(1..=7).contains(&n) {
        return Err(Error::OrderOutOfRange(n, "1..=7 for the labeled oracle"));
    }
    let pairs = n * (n - 1) / 2;
    let perms = permutations(n);
    // pair index map per permutation: k -> image of pair k
    let maps: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            let mut m = vec![0usize; pairs];
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    let (a, b) = (p[i].min(p[j]), p[i].max(p[j]));
                    m[k] = b * (b - 1) / 2 + a;
                    k += 1;
                }
            }
            m
        })
        .collect();
    let total = 1usize << pairs;
    let mut visited = vec![false; total];
    let mut reps = Vec::new();
    for mask in 0..total as u32 {
        if visited[mask as usize] {
            continue;
        }
        reps.push(mask_to_graph(n, mask));
        for map in &maps {
            let mut img = 0u32;
            let mut m = mask;
            while m != 0 {
                let k = m.trailing_zeros() as usize;
                m &= m - 1;
                img |= 1 << map[k];
            }
            visited[img as usize] = true;
        }
    }
    Ok((reps.len(), reps))
}

fn mask_to_graph(n: usize, mask: u32) -> Graph {
    let mut g = Graph::empty(n).expect("n <= 7");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    g
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permute(&mut items, n, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_order_counts() {
        assert_eq!(enumerate_order(1).unwrap().len(), 1);
        assert_eq!(enumerate_order(2).unwrap().len(), 2);
        assert_eq!(enumerate_order(3).unwrap().len(), 4);
        assert_eq!(enumerate_order(4).unwrap().len(), 11);
        assert_eq!(enumerate_order(5).unwrap().len(), 34);
    }

    #[test]
    fn oracle_counts_match() {
        for n in 1..=5 {
            let (count, reps) = naive_oracle(n).unwrap();
            assert_eq!(count, enumerate_order(n).unwrap().len());
            assert_eq!(reps.len(), count);
        }
    }

    #[test]
    fn oracle_representatives_appear_in_catalog() {
        for n in 1..=5 {
            let catalog = enumerate_order(n).unwrap();
            let (_, reps) = naive_oracle(n).unwrap();
            for r in reps {
                assert!(catalog.contains(&canonical_code(&r)));
            }
        }
    }

    #[test]
    fn store_load_round_trip() {
        let c = enumerate_order(5).unwrap();
        let dir = std::env::temp_dir().join(format!("hng-cat-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("order5.g6");
        store_catalog(&c, &path).unwrap();
        let back = load_catalog(&path).unwrap();
        assert_eq!(back.order, 5);
        assert_eq!(back.codes, c.codes);
        std::fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn load_rejects_duplicates_and_disorder() {
        let dir = std::env::temp_dir().join(format!("hng-cat-bad-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let dup = dir.join("dup.g6");
        std::fs::write(&dup, "A_\nA_\n").unwrap();
        assert!(matches!(load_catalog(&dup), Err(Error::CorruptCatalog(_))));
        let mixed = dir.join("mixed.g6");
        std::fs::write(&mixed, "A_\nBw\n").unwrap();
        assert!(matches!(load_catalog(&mixed), Err(Error::CorruptCatalog(_))));
        let empty = dir.join("empty.g6");
        std::fs::write(&empty, "").unwrap();
        let c = load_catalog(&empty).unwrap();
        assert!(c.is_empty());
        std::fs::remove_dir_all(&dir).ok();
    }
}
