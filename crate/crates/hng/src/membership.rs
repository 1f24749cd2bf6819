//! Defect computations and a-NG / a-HNG membership.
//!
//! The defect of a graph is n + 1 - chi - theta, which is nonnegative for
//! every graph. Membership in a-NG means defect <= a; membership in a-HNG
//! means every induced subgraph has defect <= a. The hereditary maximum is
//! computed by scanning induced subgraphs, ascending by size so that
//! threshold queries can exit on the first violation.

use crate::graph::{construct_named, Graph, NamedFamily};
use crate::invariants::{chromatic_number, clique_cover_number};
use crate::Error;

/// n + 1 - chi - theta. Zero for the empty graph.
pub fn ng_defect(g: &Graph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    let slack = g.order() + 1;
    let sum = chromatic_number(g) + clique_cover_number(g);
    debug_assert!(sum <= slack, "chi + theta exceeds n + 1");
    slack - sum
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct DefectReport {
    pub defect: usize,
    pub hereditary_defect: usize,
    /// vertex subset inducing a subgraph of maximum defect
    pub witness: Vec<usize>,
}

/// Maximum defect over all induced subgraphs, with a witness subset.
/// Bounded to order 16 (exponential scan).
pub fn hereditary_ng_defect(g: &Graph) -> Result<DefectReport, Error> {
    let n = g.order();
    if n > 16 {
        return Err(Error::OrderCapExceeded(n));
    }
    let defect = ng_defect(g);
    let mut max = 0usize;
    let mut witness = Vec::new();
    let full = g.vertex_mask();
    for mask in 1..=full.max(1) {
        if full == 0 {
            break;
        }
        let d = ng_defect(&g.induced_by_mask(mask));
        if d > max {
            max = d;
            witness = mask_vertices(mask);
        }
    }
    Ok(DefectReport {
        defect,
        hereditary_defect: max,
        witness,
    })
}

fn mask_vertices(mask: u32) -> Vec<usize> {
    let mut out = Vec::new();
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Threshold query: hereditary defect <= a? Scans subsets ascending by
/// size and exits on the first violation, which small obstructions make
/// fast in practice.
pub fn hereditary_defect_at_most(g: &Graph, a: usize) -> Result<bool, Error> {
    let n = g.order();
    if n > 16 {
        return Err(Error::OrderCapExceeded(n));
    }
    let full = g.vertex_mask();
    for size in 1..=n {
        for mask in 1..=full.max(1) {
            if full == 0 {
                break;
            }
            if mask.count_ones() as usize != size {
                continue;
            }
            if ng_defect(&g.induced_by_mask(mask)) > a {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct ChainCounterexample {
    pub graph6: String,
    pub a: usize,
    pub defect: usize,
    pub hereditary_defect: usize,
    pub detail: String,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct InclusionChainReport {
    pub a_max: usize,
    pub n_max: usize,
    pub graphs_checked: usize,
    pub counterexamples: Vec<ChainCounterexample>,
    pub witness_failures: Vec<String>,
    pub pass: bool,
}

/// Checks a-HNG subset of a-NG subset of (a+1)-HNG over all graphs of
/// order <= n_max, plus the strictness witnesses C_{2a+5} and P_{2a+4}.
pub fn verify_inclusion_chain(a_max: usize, n_max: usize) -> Result<InclusionChainReport, Error> {
    if n_max > 8 {
        return Err(Error::OrderOutOfRange(n_max, "1..=8 for the exhaustive chain"));
    }
    let mut counterexamples = Vec::new();
    let mut checked = 0usize;
    for n in 1..=n_max {
        let catalog = crate::enumerate::enumerate_order(n)?;
        for g in &catalog.graphs {
            checked += 1;
            let defect = ng_defect(g);
            let hdef = hereditary_ng_defect(g)?.hereditary_defect;
            for a in 0..a_max {
                // a-HNG subset a-NG: hdef <= a implies defect <= a
                if hdef <= a && defect > a {
                    counterexamples.push(ChainCounterexample {
                        graph6: crate::graph::graph6_encode(g),
                        a,
                        defect,
                        hereditary_defect: hdef,
                        detail: "in a-HNG but not a-NG".into(),
                    });
                }
                // a-NG subset (a+1)-HNG
                if defect <= a && hdef > a + 1 {
                    counterexamples.push(ChainCounterexample {
                        graph6: crate::graph::graph6_encode(g),
                        a,
                        defect,
                        hereditary_defect: hdef,
                        detail: "in a-NG but not (a+1)-HNG".into(),
                    });
                }
            }
        }
    }
    let mut witness_failures = Vec::new();
    for a in 0..a_max {
        if 2 * a + 5 <= 16 {
            let c = construct_named(&NamedFamily::Cycle(2 * a + 5))?;
            let d = ng_defect(&c);
            let h = hereditary_ng_defect(&c)?.hereditary_defect;
            if !(d <= a && h > a) {
                witness_failures.push(format!(
                    "cycle of order {} should separate {a}-NG from {a}-HNG (defect {d}, hereditary {h})",
                    2 * a + 5
                ));
            }
        }
        if 2 * a + 4 <= 16 {
            let p = construct_named(&NamedFamily::Path(2 * a + 4))?;
            let d = ng_defect(&p);
            let h = hereditary_ng_defect(&p)?.hereditary_defect;
            if !(d > a && h <= a + 1) {
                witness_failures.push(format!(
                    "path of order {} should separate ({}-HNG) from {a}-NG (defect {d}, hereditary {h})",
                    2 * a + 4,
                    a + 1
                ));
            }
        }
    }
    let pass = counterexamples.is_empty() && witness_failures.is_empty();
    Ok(InclusionChainReport {
        a_max,
        n_max,
        graphs_checked: checked,
        counterexamples,
        witness_failures,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(f: NamedFamily) -> Graph {
        construct_named(&f).unwrap()
    }

    #[test]
    fn defect_examples() {
        assert_eq!(ng_defect(&named(NamedFamily::Cycle(5))), 0);
        assert_eq!(ng_defect(&named(NamedFamily::Path(4))), 1);
        assert_eq!(ng_defect(&named(NamedFamily::Cycle(7))), 1);
        assert_eq!(ng_defect(&Graph::empty(0).unwrap()), 0);
    }

    #[test]
    fn hereditary_defect_examples() {
        let c7 = hereditary_ng_defect(&named(NamedFamily::Cycle(7))).unwrap();
        assert_eq!(c7.hereditary_defect, 2);
        assert_eq!(c7.witness.len(), 6); // an induced P6
        let c5 = hereditary_ng_defect(&named(NamedFamily::Cycle(5))).unwrap();
        assert_eq!((c5.defect, c5.hereditary_defect), (0, 1));
        // a threshold graph: repeated domination
        let mut t = Graph::empty(1).unwrap();
        for _ in 0..4 {
            t = t.add_vertex(t.vertex_mask()).unwrap();
        }
        assert_eq!(hereditary_ng_defect(&t).unwrap().hereditary_defect, 0);
    }

    #[test]
    fn threshold_queries_match_full_reports() {
        for g in [
            named(NamedFamily::Cycle(5)),
            named(NamedFamily::Cycle(7)),
            named(NamedFamily::Path(6)),
            named(NamedFamily::Claw),
        ] {
            let h = hereditary_ng_defect(&g).unwrap().hereditary_defect;
            for a in 0..4 {
                assert_eq!(hereditary_defect_at_most(&g, a).unwrap(), h <= a);
            }
        }
    }

    #[test]
    fn inclusion_chain_small() {
        let r = verify_inclusion_chain(2, 5).unwrap();
        assert!(r.pass, "{:?}", r);
    }
}
