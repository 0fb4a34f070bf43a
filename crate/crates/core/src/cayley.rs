//! Cayley graphs and the graph-level definitions of (total) perfect codes.
//!
//! `Cay(G, S)` has vertex set `G` with `x ~ y` iff `y x⁻¹ ∈ S`, so the
//! neighbours of `x` are `{s x : s ∈ S}`. Adjacency is computed from the
//! multiplication table on demand.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::group::{ElementId, Group, IDENTITY};
use crate::mask::SubsetMask;
use crate::transversal::Transversal;

#[derive(Clone, Debug)]
pub struct CayleyGraph<'g> {
    group: &'g Group,
    connection: SubsetMask,
}

impl<'g> CayleyGraph<'g> {
    pub fn group(&self) -> &'g Group {
        self.group
    }

    pub fn connection_set(&self) -> &SubsetMask {
        &self.connection
    }

    pub fn degree(&self) -> usize {
        self.connection.len()
    }

    pub fn neighbors(&self, x: ElementId) -> impl Iterator<Item = ElementId> + '_ {
        self.connection.iter().map(move |s| self.group.mul(s, x))
    }

    pub fn adjacent(&self, x: ElementId, y: ElementId) -> bool {
        self.connection
            .contains(self.group.mul(y, self.group.inv(x)))
    }

    /// Edges `u v` with `u < v`, one per line, in ascending order.
    pub fn edge_list(&self) -> String {
        let mut s = String::new();
        for u in self.group.elements() {
            let mut nb: Vec<_> = self.neighbors(u).filter(|&v| v > u).collect();
            nb.sort_unstable();
            for v in nb {
                writeln!(s, "{u} {v}").unwrap();
            }
        }
        s
    }
}

/// `Cay(G, S)`; `S` must be inverse-closed and avoid the identity.
pub fn build_cayley(g: &Group, s: SubsetMask) -> Result<CayleyGraph<'_>> {
    if s.width() != g.order() {
        return Err(Error::WidthMismatch {
            expected: g.order(),
            found: s.width(),
        });
    }
    if s.contains(IDENTITY) {
        return Err(Error::Precondition("connection set contains the identity".into()));
    }
    if let Some(x) = s.iter().find(|&x| !s.contains(g.inv(x))) {
        return Err(Error::Precondition(format!(
            "connection set is not inverse-closed: missing inverse of {x}"
        )));
    }
    Ok(CayleyGraph {
        group: g,
        connection: s,
    })
}

/// `T ∖ {1}` for a transversal containing the identity.
pub fn connection_set_from_transversal(t: &Transversal) -> Result<SubsetMask> {
    if !t.elements.contains(IDENTITY) {
        return Err(Error::Precondition("transversal lacks the identity".into()));
    }
    let mut s = t.elements.clone();
    s.remove(IDENTITY);
    Ok(s)
}

/// `c` is independent and every vertex outside `c` has exactly one
/// neighbour in `c`. In the empty graph this holds only for `c = V`.
pub fn is_perfect_code_in_graph(graph: &CayleyGraph<'_>, c: &SubsetMask) -> bool {
    graph.group.elements().all(|v| {
        let hits = graph.neighbors(v).filter(|&u| c.contains(u)).count();
        if c.contains(v) {
            hits == 0
        } else {
            hits == 1
        }
    })
}

/// Every vertex, in `c` or not, has exactly one neighbour in `c`.
pub fn is_total_perfect_code_in_graph(graph: &CayleyGraph<'_>, c: &SubsetMask) -> bool {
    graph
        .group
        .elements()
        .all(|v| graph.neighbors(v).filter(|&u| c.contains(u)).count() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::GroupSpec;
    use crate::subgroup::{conjugate_subgroup, Subgroup};
    use crate::transversal::{find_cayley_transversal, find_total_transversal};

    fn build(s: &str) -> Group {
        s.parse::<GroupSpec>().unwrap().build().unwrap().group
    }

    fn mask(g: &Group, e: &[ElementId]) -> SubsetMask {
        SubsetMask::from_elements(g.order(), e.iter().copied())
    }

    #[test]
    fn conventions() {
        let g = build("c5");
        let empty = build_cayley(&g, SubsetMask::empty(5)).unwrap();
        assert_eq!(empty.edge_list(), "");
        assert!(is_perfect_code_in_graph(&empty, &SubsetMask::full(5)));
        assert!(!is_perfect_code_in_graph(&empty, &mask(&g, &[0])));
        assert!(!is_total_perfect_code_in_graph(&empty, &mask(&g, &[0, 1])));
        let mut all = SubsetMask::full(5);
        all.remove(0);
        let complete = build_cayley(&g, all).unwrap();
        assert_eq!(complete.edge_list().lines().count(), 10);
        assert!(is_perfect_code_in_graph(&complete, &mask(&g, &[0])));
    }

    #[test]
    fn rejects_bad_connection_sets() {
        let g = build("c4");
        assert!(build_cayley(&g, mask(&g, &[0, 1, 3])).is_err());
        assert!(build_cayley(&g, mask(&g, &[1])).is_err());
        assert!(build_cayley(&g, SubsetMask::empty(3)).is_err());
    }

    #[test]
    fn four_cycle() {
        let g = build("c4");
        let c4 = build_cayley(&g, mask(&g, &[1, 3])).unwrap();
        assert_eq!(c4.edge_list(), "0 1\n0 3\n1 2\n2 3\n");
        assert!(c4.adjacent(0, 1) && !c4.adjacent(0, 2));
        // Vertex 1 sees both 0 and 2.
        assert!(!is_perfect_code_in_graph(&c4, &mask(&g, &[0, 2])));
    }

    #[test]
    fn k2_total() {
        let g = build("c2");
        let k2 = build_cayley(&g, mask(&g, &[1])).unwrap();
        assert!(is_total_perfect_code_in_graph(&k2, &SubsetMask::full(2)));
    }

    #[test]
    fn connection_sets() {
        let g = build("c6");
        let t = Transversal::from_elements(6, [0]);
        assert!(connection_set_from_transversal(&t).unwrap().is_empty());
        let t = Transversal::from_elements(6, 0..6);
        assert_eq!(connection_set_from_transversal(&t).unwrap().len(), 5);
        assert!(connection_set_from_transversal(&Transversal::from_elements(6, [1, 5])).is_err());
        let _ = g;
    }

    #[test]
    fn regular() {
        let g = build("d5");
        let s = mask(&g, &[1, 4, 5, 7]);
        let cay = build_cayley(&g, s).unwrap();
        for v in g.elements() {
            let mut nb: Vec<_> = cay.neighbors(v).collect();
            nb.sort_unstable();
            nb.dedup();
            assert_eq!(nb.len(), cay.degree());
        }
    }

    #[test]
    fn d4_total_witness() {
        let g = build("d4");
        let h = Subgroup::new(&g, mask(&g, &[0, 4])).unwrap();
        let t = find_total_transversal(&g, &h).unwrap().unwrap();
        let cay = build_cayley(&g, t.elements.clone()).unwrap();
        assert!(is_total_perfect_code_in_graph(&cay, h.mask()));
    }

    #[test]
    fn conjugated_codes_stay_perfect() {
        let g = build("d6");
        let h = Subgroup::new(&g, mask(&g, &[0, 6])).unwrap();
        let t = find_cayley_transversal(&g, &h).unwrap().unwrap();
        let s = connection_set_from_transversal(&t).unwrap();
        assert!(is_perfect_code_in_graph(&build_cayley(&g, s.clone()).unwrap(), h.mask()));
        for x in g.elements() {
            let sx = SubsetMask::from_elements(12, s.iter().map(|y| g.conj(y, x)));
            let hx = conjugate_subgroup(&g, &h, x);
            assert!(is_perfect_code_in_graph(&build_cayley(&g, sx).unwrap(), hx.mask()));
        }
    }
}
