//! Deciding whether a subgroup is a perfect code, with a proof trace.
//!
//! The dispatcher tries cheap sufficient conditions and class-specific
//! reductions before falling back to the double-coset criterion, which is
//! always conclusive. A "yes" is confirmed by searching for a Cayley
//! transversal unless confirmation is turned off; a "no" always carries an
//! element certifying it.

mod criteria;
mod reductions;

use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

pub use criteria::{
    check_no_witness, criterion_basic, criterion_normal, criterion_normalizer, normalizer_gate,
    refine_no_witness, shortcut_odd, Finding,
};
pub use reductions::{
    commutator_transfer, quotient_transfer, shortcut_gen_dihedral, shortcut_metabelian_normal,
    shortcut_nilpotent, shortcut_qk, shortcut_sylow_lift, sylow_containment_reduction,
    two_group_dichotomy, DichotomyReport, Equivalence, Horn, QuotientTransfer, Reduction,
    Subproblem, SylowContainment,
};

use crate::classify::classify;
use crate::error::{Error, Result};
use crate::group::{ElementId, Group};
use crate::lattice::sylow_2_subgroup;
use crate::subgroup::{check_width, Subgroup};
use crate::transversal::{Transversal, TransversalSearch, DEFAULT_BUDGET};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    PerfectCode,
    NotPerfectCode,
}

impl Verdict {
    pub fn from_bool(yes: bool) -> Verdict {
        if yes {
            Verdict::PerfectCode
        } else {
            Verdict::NotPerfectCode
        }
    }

    pub fn is_yes(self) -> bool {
        self == Verdict::PerfectCode
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::PerfectCode => "perfect_code",
            Verdict::NotPerfectCode => "not_perfect_code",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// A Cayley transversal containing the identity.
    Transversal(Transversal),
    /// A 2-element `x ∉ H` with `x² ∈ H`, `|H : H ∩ xHx⁻¹|` odd and no
    /// involution in `xH`.
    Element(ElementId),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    Trivial,
    ShortcutOdd,
    GenDihedral,
    Nilpotent,
    CriterionNormal,
    CriterionNormalizer,
    SylowLift,
    CriterionBasic,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Criterion::Trivial => "trivial",
            Criterion::ShortcutOdd => "shortcut_odd",
            Criterion::GenDihedral => "gen_dihedral",
            Criterion::Nilpotent => "nilpotent",
            Criterion::CriterionNormal => "criterion_normal",
            Criterion::CriterionNormalizer => "criterion_normalizer",
            Criterion::SylowLift => "sylow_lift",
            Criterion::CriterionBasic => "criterion_basic",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Yes,
    No,
    Inapplicable,
    /// The subproblem the step handed off to, as `g=<hash> h=<mask>`.
    ReducedTo(String),
}

impl Outcome {
    pub fn is_conclusive(&self) -> bool {
        matches!(self, Outcome::Yes | Outcome::No)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Yes => f.write_str("yes"),
            Outcome::No => f.write_str("no"),
            Outcome::Inapplicable => f.write_str("inapplicable"),
            Outcome::ReducedTo(s) => write!(f, "reduced_to({s})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionStep {
    pub criterion: Criterion,
    /// `g=<group hash> h=<subgroup mask>`.
    pub inputs: String,
    pub outcome: Outcome,
}

impl fmt::Display for CriterionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}] -> {}", self.criterion, self.inputs, self.outcome)
    }
}

fn inputs(g: &Group, h: &Subgroup) -> String {
    format!("g={} h={}", g.hash(), h.to_hex())
}

#[derive(Clone, Debug)]
pub struct Decision {
    pub verdict: Verdict,
    /// Absent only for an unconfirmed "yes".
    pub witness: Option<Witness>,
    pub trace: Vec<CriterionStep>,
    pub elapsed: Duration,
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        self.verdict.is_yes()
    }

    pub fn transversal(&self) -> Option<&Transversal> {
        match &self.witness {
            Some(Witness::Transversal(t)) => Some(t),
            _ => None,
        }
    }

    pub fn record(&self, g: &Group, h: &Subgroup) -> DecisionRecord {
        DecisionRecord {
            group_hash: g.hash().to_string(),
            subgroup_mask_hex: h.to_hex(),
            verdict: self.verdict,
            witness: self.witness.clone(),
            trace: self.trace.clone(),
            elapsed_ns: self.elapsed.as_nanos() as u64,
        }
    }
}

/// Serialized form of a [`Decision`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionRecord {
    pub group_hash: String,
    pub subgroup_mask_hex: String,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub trace: Vec<CriterionStep>,
    pub elapsed_ns: u64,
}

/// Dispatcher settings.
#[derive(Clone, Copy, Debug)]
pub struct Decider {
    confirm: bool,
    budget: u64,
}

impl Default for Decider {
    fn default() -> Self {
        Decider {
            confirm: true,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// [`Decider::decide`] with default settings.
pub fn decide(g: &Group, h: &Subgroup) -> Result<Decision> {
    Decider::default().decide(g, h)
}

impl Decider {
    pub fn new() -> Self {
        Self::default()
    }

    /// Whether a "yes" must be backed by a transversal (default on).
    pub fn confirm(mut self, on: bool) -> Self {
        self.confirm = on;
        self
    }

    /// Node budget for transversal searches.
    pub fn budget(mut self, nodes: u64) -> Self {
        self.budget = nodes;
        self
    }

    pub fn node_budget(&self) -> u64 {
        self.budget
    }

    pub fn decide(&self, g: &Group, h: &Subgroup) -> Result<Decision> {
        check_width(g, h)?;
        let start = Instant::now();
        let mut trace = Vec::new();
        let (verdict, raw) = self.route(g, h, &mut trace)?;
        debug_assert!(trace.last().is_some_and(|s| s.outcome.is_conclusive()));
        let witness = match verdict {
            Verdict::PerfectCode if self.confirm => {
                let t = TransversalSearch::new(g, h)
                    .budget(self.budget)
                    .cayley()?
                    .ok_or_else(|| {
                        Error::Inconsistent(format!(
                            "criteria say perfect code but no Cayley transversal exists ({})",
                            inputs(g, h)
                        ))
                    })?;
                Some(Witness::Transversal(t))
            }
            Verdict::PerfectCode => None,
            Verdict::NotPerfectCode => Some(Witness::Element(self.no_witness(g, h, raw)?)),
        };
        Ok(Decision {
            verdict,
            witness,
            trace,
            elapsed: start.elapsed(),
        })
    }

    /// The routed verdict alone: no confirmation, no witness.
    pub fn verdict(&self, g: &Group, h: &Subgroup) -> Result<Verdict> {
        check_width(g, h)?;
        Ok(self.route(g, h, &mut Vec::new())?.0)
    }

    fn no_witness(&self, g: &Group, h: &Subgroup, raw: Option<ElementId>) -> Result<ElementId> {
        let raw = match raw {
            Some(x) => x,
            None => match criterion_basic(g, h)? {
                Finding::No(x) => x,
                _ => {
                    return Err(Error::Inconsistent(format!(
                        "a reduction says not a perfect code but the double-coset criterion \
                         passes ({})",
                        inputs(g, h)
                    )))
                }
            },
        };
        let x = refine_no_witness(g, h, raw)?;
        if !check_no_witness(g, h, x) {
            return Err(Error::Inconsistent(format!(
                "refined witness {x} fails its checks ({})",
                inputs(g, h)
            )));
        }
        Ok(x)
    }

    /// Returns the verdict and, when a criterion on `(g, h)` itself said
    /// no, the element it found.
    fn route(
        &self,
        g: &Group,
        h: &Subgroup,
        trace: &mut Vec<CriterionStep>,
    ) -> Result<(Verdict, Option<ElementId>)> {
        let here = inputs(g, h);
        let mut step = |criterion, outcome| {
            trace.push(CriterionStep {
                criterion,
                inputs: here.clone(),
                outcome,
            })
        };
        let yes = Ok((Verdict::PerfectCode, None));

        if h.is_whole(g) || h.is_trivial() {
            step(Criterion::Trivial, Outcome::Yes);
            return yes;
        }
        if shortcut_odd(g, h) == Finding::Yes {
            step(Criterion::ShortcutOdd, Outcome::Yes);
            return yes;
        }
        step(Criterion::ShortcutOdd, Outcome::Inapplicable);

        if let Some(d) = g.dihedral_structure() {
            match shortcut_gen_dihedral(g, &d.abelian, h)? {
                Reduction::Yes => {
                    step(Criterion::GenDihedral, Outcome::Yes);
                    return yes;
                }
                Reduction::Subproblem(sp) => {
                    step(Criterion::GenDihedral, Outcome::ReducedTo(sp.describe()));
                    let (v, _) = self.route(&sp.group, &sp.subgroup, trace)?;
                    return Ok((v, None));
                }
            }
        }

        let class = classify(g);
        // For 2-groups the reduction would return the same pair.
        if class.is_nilpotent && !class.is_2group {
            let sp = shortcut_nilpotent(g, h)?;
            step(Criterion::Nilpotent, Outcome::ReducedTo(sp.describe()));
            let (v, _) = self.route(&sp.group, &sp.subgroup, trace)?;
            return Ok((v, None));
        }

        if h.is_normal(g) {
            return Ok(conclude(criterion_normal(g, h)?, Criterion::CriterionNormal, step));
        }
        match criterion_normalizer(g, h)? {
            Finding::Inapplicable => step(Criterion::CriterionNormalizer, Outcome::Inapplicable),
            f => return Ok(conclude(f, Criterion::CriterionNormalizer, step)),
        }

        let q = sylow_2_subgroup(g, h)?;
        step(
            Criterion::SylowLift,
            Outcome::ReducedTo(format!("g={} h={}", g.hash(), q.to_hex())),
        );
        let (qv, _) = self.route(g, &q, trace)?;
        let here = inputs(g, h);
        let mut step = |criterion, outcome| {
            trace.push(CriterionStep {
                criterion,
                inputs: here.clone(),
                outcome,
            })
        };
        if qv.is_yes() {
            step(Criterion::SylowLift, Outcome::Yes);
            return yes;
        }
        step(Criterion::SylowLift, Outcome::Inapplicable);

        Ok(conclude(criterion_basic(g, h)?, Criterion::CriterionBasic, step))
    }
}

fn conclude(
    f: Finding,
    criterion: Criterion,
    mut step: impl FnMut(Criterion, Outcome),
) -> (Verdict, Option<ElementId>) {
    match f {
        Finding::Yes => {
            step(criterion, Outcome::Yes);
            (Verdict::PerfectCode, None)
        }
        Finding::No(x) => {
            step(criterion, Outcome::No);
            (Verdict::NotPerfectCode, Some(x))
        }
        Finding::Inapplicable => unreachable!("conclusive criterion returned inapplicable"),
    }
}
