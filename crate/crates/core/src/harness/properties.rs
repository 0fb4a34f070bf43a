//! The property checks. Each runs over every applicable pair of the
//! catalog and keeps the smallest counterexample.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::run::{Context, Entry, OracleVerdict, Row};
use super::PropertyId;
use crate::classify::classify;
use crate::decider::{two_group_dichotomy, Horn, Subproblem};
use crate::group::Group;
use crate::lattice::two_elements;
use crate::mask::SubsetMask;
use crate::subgroup::{conjugate_subgroup, quotient_group, Subgroup};
use crate::transversal::TransversalSearch;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub group: String,
    pub group_order: usize,
    pub subgroup_order: usize,
    pub subgroup_mask_hex: String,
    pub detail: String,
}

impl Counterexample {
    fn key(&self) -> (usize, usize, &str, &str) {
        (
            self.group_order,
            self.subgroup_order,
            &self.group,
            &self.subgroup_mask_hex,
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyResult {
    pub id: PropertyId,
    pub description: String,
    pub passed: bool,
    /// Number of individual facts checked.
    pub checked: u64,
    pub failures: u64,
    /// The smallest failing case, by group order then subgroup order.
    pub counterexample: Option<Counterexample>,
}

#[derive(Default)]
struct Tally {
    checked: u64,
    failures: u64,
    worst: Option<Counterexample>,
}

impl Tally {
    fn check(&mut self, ok: bool, entry: &Entry, h: &Subgroup, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if ok {
            return;
        }
        self.failures += 1;
        let c = Counterexample {
            group: entry.spec.clone(),
            group_order: entry.group().order(),
            subgroup_order: h.order(),
            subgroup_mask_hex: h.to_hex(),
            detail: detail(),
        };
        if self.worst.as_ref().map_or(true, |w| c.key() < w.key()) {
            self.worst = Some(c);
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failures += other.failures;
        if let Some(c) = other.worst {
            if self.worst.as_ref().map_or(true, |w| c.key() < w.key()) {
                self.worst = Some(c);
            }
        }
        self
    }
}

pub(crate) fn check_property(id: PropertyId, ctx: &Context) -> PropertyResult {
    let per_entry = |e: &Entry| {
        let mut t = Tally::default();
        match id {
            PropertyId::P1 => p1(ctx, e, &mut t),
            PropertyId::P2 => p2(ctx, e, &mut t),
            PropertyId::P3 => p3(ctx, e, &mut t),
            PropertyId::P4 => p4(ctx, e, &mut t),
            PropertyId::P5 => p5(ctx, e, &mut t),
            PropertyId::P6 => p6(ctx, e, &mut t),
            PropertyId::P7 => p7(ctx, e, &mut t),
            PropertyId::P8 => p8(ctx, e, &mut t),
            PropertyId::P9 => p9(ctx, e, &mut t),
            PropertyId::P10 => p10(ctx, e, &mut t),
        }
        t
    };
    let tally = ctx
        .entries
        .par_iter()
        .map(per_entry)
        .reduce(Tally::default, Tally::merge);
    PropertyResult {
        id,
        description: id.description().to_string(),
        passed: tally.failures == 0,
        checked: tally.checked,
        failures: tally.failures,
        counterexample: tally.worst,
    }
}

/// Oracle verdict on a subproblem; `None` when the budget runs out.
fn oracle(g: &Group, h: &Subgroup, budget: u64) -> Option<bool> {
    TransversalSearch::new(g, h)
        .budget(budget)
        .cayley()
        .ok()
        .map(|t| t.is_some())
}

fn yes(row: &Row) -> Option<bool> {
    row.is_yes()
}

fn p1(ctx: &Context, e: &Entry, t: &mut Tally) {
    for (h, row) in e.lattice.iter().zip(e.rows(&ctx.rows)) {
        let ok = row.agree && row.error.is_none() && row.graph_ok != Some(false);
        t.check(ok, e, h, || {
            format!(
                "decider {:?}, oracle {:?}, graph_ok {:?}, error {:?}",
                row.verdict, row.oracle, row.graph_ok, row.error
            )
        });
    }
}

fn p2(ctx: &Context, e: &Entry, t: &mut Tally) {
    let g = e.group();
    for (h, row) in e.lattice.iter().zip(e.rows(&ctx.rows)) {
        if h.order() % 2 == 1 || h.index_in(g) % 2 == 1 {
            t.check(yes(row) == Some(true), e, h, || "odd order or index but not a perfect code".into());
        }
    }
}

fn p3(ctx: &Context, e: &Entry, t: &mut Tally) {
    let g = e.group();
    let gens = Subgroup::whole(g).generators(g);
    for (h, row) in e.lattice.iter().zip(e.rows(&ctx.rows)) {
        for &x in &gens {
            let hx = conjugate_subgroup(g, h, x);
            let other = e.row_of(&ctx.rows, hx.mask());
            t.check(yes(row) == yes(other), e, h, || {
                format!("conjugate by {x} ({}) has a different verdict", hx.to_hex())
            });
        }
    }
}

fn p4(ctx: &Context, e: &Entry, t: &mut Tally) {
    let g = e.group();
    let rows = e.rows(&ctx.rows);
    for k in e.lattice.iter().filter(|k| !k.is_whole(g) && !k.is_trivial()) {
        let inside: Vec<&Subgroup> = e
            .lattice
            .iter()
            .zip(rows)
            .filter(|(h, r)| h.is_subgroup_of(k) && *h != k && yes(r) == Some(true))
            .map(|(h, _)| h)
            .collect();
        if inside.is_empty() {
            continue;
        }
        let (kg, embed) = g.restrict(k);
        for h in inside {
            let local = Subgroup::from_mask_unchecked(SubsetMask::from_elements(
                kg.order(),
                (0..embed.len()).filter(|&i| h.contains(embed[i])),
            ));
            t.check(oracle(&kg, &local, ctx.budget) == Some(true), e, h, || {
                format!("perfect in G but not in K = {}", k.to_hex())
            });
        }
    }
}

fn p5(ctx: &Context, e: &Entry, t: &mut Tally) {
    let g = e.group();
    for n in e.lattice.iter().filter(|n| !n.is_trivial() && n.is_normal(g)) {
        let (q, proj) = quotient_group(g, n).expect("normal subgroup");
        let n_yes = yes(e.row_of(&ctx.rows, n.mask()));
        for (h, row) in e.lattice.iter().zip(e.rows(&ctx.rows)) {
            if !n.is_subgroup_of(h) {
                continue;
            }
            let hq = Subgroup::from_mask_unchecked(SubsetMask::from_elements(
                q.order(),
                h.elements().map(|x| proj[x]),
            ));
            let q_yes = oracle(&q, &hq, ctx.budget);
            let h_yes = yes(row);
            let part_a = h_yes == Some(false) || q_yes == Some(true);
            let part_b = !(n_yes == Some(true) && q_yes == Some(true)) || h_yes == Some(true);
            t.check(part_a && part_b && q_yes.is_some() && h_yes.is_some(), e, h, || {
                format!(
                    "N = {}: G,H {:?}; G,N {:?}; G/N,H/N {:?}",
                    n.to_hex(),
                    h_yes,
                    n_yes,
                    q_yes
                )
            });
        }
    }
}

fn p6(ctx: &Context, e: &Entry, t: &mut Tally) {
    let g = e.group();
    let Some(d) = g.dihedral_structure() else {
        return;
    };
    let a = &d.abelian;
    let (ag, embed) = g.restrict(a);
    for (h, row) in e.lattice.iter().zip(e.rows(&ctx.rows)) {
        let expected = if h.is_subgroup_of(a) {
            let local = Subgroup::from_mask_unchecked(SubsetMask::from_elements(
                ag.order(),
                (0..embed.len()).filter(|&i| h.contains(embed[i])),
            ));
            oracle(&ag, &local, ctx.budget)
        } else {
            Some(true)
        };
        t.check(expected.is_some() && expected == yes(row), e, h, || {
            format!("expected {expected:?}, row says {:?}", yes(row))
        });
    }
}

fn p7(ctx: &Context, e: &Entry, t: &mut Tally) {
    let g = e.group();
    if !classify(g).is_nilpotent {
        return;
    }
    let p = Subgroup::from_mask_unchecked(two_elements(g, &Subgroup::whole(g)));
    let mut in_p: HashMap<SubsetMask, Option<bool>> = HashMap::new();
    for (h, row) in e.lattice.iter().zip(e.rows(&ctx.rows)) {
        let q = Subgroup::from_mask_unchecked(two_elements(g, h));
        let via_g = yes(e.row_of(&ctx.rows, q.mask()));
        let via_p = *in_p.entry(q.mask().clone()).or_insert_with(|| {
            let sp = Subproblem::new(g, &p, &q);
            oracle(&sp.group, &sp.subgroup, ctx.budget)
        });
        let direct = yes(row);
        t.check(direct.is_some() && direct == via_g && direct == via_p, e, h, || {
            format!("direct {direct:?}, Sylow part in G {via_g:?}, in P {via_p:?}")
        });
    }
}

fn p8(ctx: &Context, e: &Entry, t: &mut Tally) {
    if classify(e.group()).has_order4_element {
        return;
    }
    for (h, row) in e.lattice.iter().zip(e.rows(&ctx.rows)) {
        t.check(yes(row) == Some(true), e, h, || "no element of order 4, yet not a perfect code".into());
    }
}

fn p9(ctx: &Context, e: &Entry, t: &mut Tally) {
    let g = e.group();
    if !g.order().is_power_of_two() {
        return;
    }
    let whole = Subgroup::whole(g);
    match two_group_dichotomy(&ctx.decider, g) {
        Ok(report) => {
            let certified = report.certify(g, ctx.budget);
            t.check(certified.as_ref().is_ok_and(|&c| c), e, &whole, || {
                let horn = match &report.horn {
                    Horn::Cyclic { .. } => "cyclic",
                    Horn::Quaternion { .. } => "quaternion",
                };
                format!("{horn} horn not certified: {certified:?}")
            });
        }
        Err(err) => t.check(false, e, &whole, || err.to_string()),
    }
}

fn p10(ctx: &Context, e: &Entry, t: &mut Tally) {
    for (h, row) in e.lattice.iter().zip(e.rows(&ctx.rows)) {
        let ok = match row.oracle {
            OracleVerdict::Yes => {
                row.total == Some(h.order() % 2 == 0)
                    && (row.total != Some(true) || row.total_graph_ok == Some(true))
            }
            OracleVerdict::No => row.total == Some(false),
            OracleVerdict::BudgetExceeded => false,
        };
        t.check(ok, e, h, || {
            format!(
                "oracle {:?}, total {:?}, total graph {:?}",
                row.oracle, row.total, row.total_graph_ok
            )
        });
    }
}
