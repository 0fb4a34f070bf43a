//! Exhaustive search for inverse-closed transversals.
//!
//! An inverse-closed right transversal `T` of `H` ("Cayley transversal")
//! exists exactly when `H` is a subgroup perfect code: with `1 ∈ T`, `H` is
//! a perfect code of `Cay(G, T∖{1})`.
//!
//! For the total variant, `H` is a total perfect code of `Cay(G, S)` iff
//! every vertex `y` has exactly one neighbour in `H`. Neighbours of `h` are
//! the `y` with `y h⁻¹ ∈ S`, so the condition is that every `y` is uniquely
//! `s h` with `s ∈ S`, `h ∈ H`: `S` is a left transversal, hence (being
//! inverse-closed) a right one. Since `1 ∉ S`, the representative of the
//! coset `H` itself must be a non-identity element of `H` equal to its own
//! inverse, i.e. an involution of `H`.
//!
//! The search treats right cosets as vertices of a pairing problem. Picking
//! `t` for coset `C` forces `t⁻¹` as the representative of the coset of
//! `t⁻¹`; when that is `C` itself, `t` must be an involution. Cosets are
//! filled most-constrained first (fewest viable candidates, ties to the
//! lower canonical index) and candidates are tried involutions first, then
//! in ascending id, unless a custom ranking is supplied.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{ElementId, Group, IDENTITY};
use crate::mask::SubsetMask;
use crate::subgroup::{check_width, coset_system, CosetSystem, Side, Subgroup};

/// Default node budget for one search.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// An inverse-closed set of coset representatives.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Transversal {
    pub elements: SubsetMask,
    pub contains_identity: bool,
}

impl Transversal {
    pub fn from_elements(width: usize, elems: impl IntoIterator<Item = ElementId>) -> Transversal {
        let elements = SubsetMask::from_elements(width, elems);
        Transversal {
            contains_identity: elements.contains(IDENTITY),
            elements,
        }
    }

    pub fn to_vec(&self) -> Vec<ElementId> {
        self.elements.to_vec()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

impl Serialize for Transversal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Transversal {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<ElementId>::deserialize(d)?;
        let width = v.iter().max().map_or(1, |m| m + 1);
        Ok(Transversal::from_elements(width, v))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Cayley,
    Total,
}

/// Configurable transversal search over one `(G, H)` pair.
pub struct TransversalSearch<'a> {
    group: &'a Group,
    subgroup: &'a Subgroup,
    budget: u64,
    rank: Option<Box<dyn Fn(ElementId) -> u64 + 'a>>,
}

impl<'a> TransversalSearch<'a> {
    pub fn new(group: &'a Group, subgroup: &'a Subgroup) -> Self {
        TransversalSearch {
            group,
            subgroup,
            budget: DEFAULT_BUDGET,
            rank: None,
        }
    }

    pub fn budget(mut self, nodes: u64) -> Self {
        self.budget = nodes;
        self
    }

    /// Orders candidates within a coset by ascending `key`, then by id.
    pub fn rank_by(mut self, key: impl Fn(ElementId) -> u64 + 'a) -> Self {
        self.rank = Some(Box::new(key));
        self
    }

    /// A Cayley transversal containing the identity, if one exists.
    pub fn cayley(&self) -> Result<Option<Transversal>> {
        self.run(Mode::Cayley)
    }

    /// An inverse-closed transversal whose representative of `H` is an
    /// involution in `H`, if one exists.
    pub fn total(&self) -> Result<Option<Transversal>> {
        self.run(Mode::Total)
    }

    fn run(&self, mode: Mode) -> Result<Option<Transversal>> {
        let g = self.group;
        check_width(g, self.subgroup)?;
        let cosets = coset_system(g, self.subgroup, Side::Right);
        let k = cosets.len();
        let key = |t: ElementId| -> (u64, u64, ElementId) {
            let inv_first = u64::from(g.inv(t) != t);
            match &self.rank {
                Some(r) => (r(t), inv_first, t),
                None => (inv_first, 0, t),
            }
        };
        // (candidate, partner coset) per coset.
        let mut cands: Vec<Vec<(ElementId, usize)>> = vec![Vec::new(); k];
        for t in g.elements() {
            let c = cosets.coset_of(t);
            let p = cosets.coset_of(g.inv(t));
            if c == 0 {
                let ok = match mode {
                    Mode::Cayley => t == IDENTITY,
                    Mode::Total => g.is_involution(t),
                };
                if ok {
                    cands[0].push((t, 0));
                }
            } else if p != c || g.inv(t) == t {
                cands[c].push((t, p));
            }
        }
        for list in &mut cands {
            list.sort_by_key(|&(t, _)| key(t));
        }
        let mut state = Search {
            cands,
            rep: vec![None; k],
            nodes: 0,
            budget: self.budget,
        };
        let found = state.solve(g)?;
        Ok(found.then(|| {
            let t = Transversal::from_elements(g.order(), state.rep.iter().map(|r| r.unwrap()));
            debug_assert!(verify_with(g, self.subgroup, &cosets, &t));
            t
        }))
    }
}

struct Search {
    cands: Vec<Vec<(ElementId, usize)>>,
    rep: Vec<Option<ElementId>>,
    nodes: u64,
    budget: u64,
}

impl Search {
    fn viable(&self, c: usize) -> usize {
        self.cands[c]
            .iter()
            .filter(|&&(_, p)| p == c || self.rep[p].is_none())
            .count()
    }

    fn solve(&mut self, g: &Group) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        let mut best: Option<(usize, usize)> = None;
        for c in 0..self.rep.len() {
            if self.rep[c].is_some() {
                continue;
            }
            let v = self.viable(c);
            if best.map_or(true, |(_, bv)| v < bv) {
                best = Some((c, v));
                if v == 0 {
                    return Ok(false);
                }
            }
        }
        let Some((c, _)) = best else {
            return Ok(true);
        };
        for i in 0..self.cands[c].len() {
            let (t, p) = self.cands[c][i];
            if p != c && self.rep[p].is_some() {
                continue;
            }
            self.rep[c] = Some(t);
            if p != c {
                self.rep[p] = Some(g.inv(t));
            }
            if self.solve(g)? {
                return Ok(true);
            }
            self.rep[c] = None;
            if p != c {
                self.rep[p] = None;
            }
        }
        Ok(false)
    }
}

/// A Cayley transversal of `h` in `g` containing the identity, or `None`
/// when `h` is not a subgroup perfect code.
pub fn find_cayley_transversal(g: &Group, h: &Subgroup) -> Result<Option<Transversal>> {
    TransversalSearch::new(g, h).cayley()
}

/// The total-perfect-code variant of [`find_cayley_transversal`].
pub fn find_total_transversal(g: &Group, h: &Subgroup) -> Result<Option<Transversal>> {
    TransversalSearch::new(g, h).total()
}

/// True iff `t` is inverse-closed and meets every right coset of `h`
/// exactly once. An inverse-closed right transversal is always a left
/// transversal too; that is asserted.
pub fn verify_transversal(g: &Group, h: &Subgroup, t: &Transversal) -> bool {
    if t.elements.width() != g.order() || h.mask().width() != g.order() {
        return false;
    }
    let right = coset_system(g, h, Side::Right);
    verify_with(g, h, &right, t)
}

fn verify_with(g: &Group, h: &Subgroup, right: &CosetSystem, t: &Transversal) -> bool {
    let closed = t.elements.iter().all(|x| t.elements.contains(g.inv(x)));
    let hits = |cs: &CosetSystem| {
        let mut seen = SubsetMask::empty(cs.len());
        t.elements.len() == cs.len() && t.elements.iter().all(|x| seen.insert(cs.coset_of(x)))
    };
    let right_ok = hits(right);
    if closed {
        let left = coset_system(g, h, Side::Left);
        assert_eq!(right_ok, hits(&left), "inverse-closed set: left/right transversal mismatch");
    }
    closed && right_ok
}
