use std::collections::HashMap;
use std::io::{self, Write};
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::properties::{check_property, PropertyResult};
use super::CatalogConfig;
use crate::builders::{BuiltGroup, GroupSpec};
use crate::cayley::{
    build_cayley, connection_set_from_transversal, is_perfect_code_in_graph,
    is_total_perfect_code_in_graph,
};
use crate::classify::classify;
use crate::decider::{Decider, Verdict, Witness};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::lattice::enumerate_subgroups;
use crate::mask::SubsetMask;
use crate::subgroup::Subgroup;
use crate::transversal::{Transversal, TransversalSearch};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleVerdict {
    Yes,
    No,
    BudgetExceeded,
}

/// One `(group, subgroup)` pair.
#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub group: String,
    pub group_hash: String,
    pub group_order: usize,
    pub subgroup_order: usize,
    pub subgroup_mask_hex: String,
    pub normal: bool,
    /// Decider verdict; absent when the decider failed (see `error`).
    pub verdict: Option<Verdict>,
    pub witness: Option<Witness>,
    pub trace: Vec<String>,
    pub oracle: OracleVerdict,
    pub agree: bool,
    /// Every transversal produced for this row is a perfect code witness in
    /// its Cayley graph.
    pub graph_ok: Option<bool>,
    /// Whether a total-perfect-code transversal exists.
    pub total: Option<bool>,
    pub total_graph_ok: Option<bool>,
    /// A perfect code with even order and even index: the converse of the
    /// odd rule fails here.
    pub even_order_even_index: bool,
    pub error: Option<String>,
    pub elapsed_ns: u64,
}

impl Row {
    /// Decider verdict as a bool, falling back to the oracle.
    pub fn is_yes(&self) -> Option<bool> {
        match (self.verdict, self.oracle) {
            (Some(v), _) => Some(v.is_yes()),
            (None, OracleVerdict::Yes) => Some(true),
            (None, OracleVerdict::No) => Some(false),
            (None, OracleVerdict::BudgetExceeded) => None,
        }
    }

    pub fn budget_exceeded(&self) -> bool {
        self.oracle == OracleVerdict::BudgetExceeded
            || self.error.as_deref() == Some(BUDGET_MESSAGE)
    }
}

const BUDGET_MESSAGE: &str = "budget exceeded";

#[derive(Clone, Debug, Serialize)]
pub struct GroupSummary {
    pub spec: String,
    pub hash: String,
    pub order: usize,
    pub subgroups: usize,
    pub perfect_codes: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub groups: usize,
    pub rows: usize,
    pub agreements: usize,
    pub disagreements: usize,
    pub budget_exceeded: usize,
    pub errors: usize,
    pub perfect_codes: usize,
    pub even_order_even_index: usize,
    pub properties_passed: usize,
    pub properties_failed: usize,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogReport {
    pub config: CatalogConfig,
    pub groups: Vec<GroupSummary>,
    pub rows: Vec<Row>,
    pub properties: Vec<PropertyResult>,
    pub summary: Summary,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum Line<'a> {
    Config(&'a CatalogConfig),
    Group(&'a GroupSummary),
    Row(&'a Row),
    Property(&'a PropertyResult),
    Summary(&'a Summary),
}

impl CatalogReport {
    /// One JSON object per line: config, groups, rows, properties, summary.
    pub fn write_jsonl(&self, mut w: impl Write) -> io::Result<()> {
        let mut emit = |line: Line<'_>| -> io::Result<()> {
            serde_json::to_writer(&mut w, &line)?;
            w.write_all(b"\n")
        };
        emit(Line::Config(&self.config))?;
        for g in &self.groups {
            emit(Line::Group(g))?;
        }
        for r in &self.rows {
            emit(Line::Row(r))?;
        }
        for p in &self.properties {
            emit(Line::Property(p))?;
        }
        emit(Line::Summary(&self.summary))
    }

    pub fn property(&self, id: super::PropertyId) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| p.id == id)
    }

    pub fn rows_of<'a>(&'a self, spec: &'a str) -> impl Iterator<Item = &'a Row> + 'a {
        self.rows.iter().filter(move |r| r.group == spec)
    }
}

/// A catalog group with its lattice and the rows that belong to it.
pub(crate) struct Entry {
    pub spec: String,
    pub built: BuiltGroup,
    pub lattice: Arc<Vec<Subgroup>>,
    pub first_row: usize,
    /// Subgroup mask to row index.
    pub index: HashMap<SubsetMask, usize>,
}

impl Entry {
    pub fn group(&self) -> &Group {
        &self.built.group
    }

    pub fn row_of<'r>(&self, rows: &'r [Row], h: &SubsetMask) -> &'r Row {
        &rows[self.index[h]]
    }

    pub fn rows<'r>(&self, rows: &'r [Row]) -> &'r [Row] {
        &rows[self.first_row..self.first_row + self.lattice.len()]
    }
}

pub(crate) struct Context {
    pub entries: Vec<Entry>,
    pub rows: Vec<Row>,
    pub decider: Decider,
    pub budget: u64,
}

/// Runs every pair in the catalog, then the selected property checks.
pub fn run_catalog(config: &CatalogConfig) -> Result<CatalogReport> {
    let start = Instant::now();
    let specs = config.expand()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;
    let decider = Decider::new()
        .confirm(config.confirm_witnesses)
        .budget(config.budget);
    pool.install(|| {
        let built: Vec<(GroupSpec, BuiltGroup, Arc<Vec<Subgroup>>)> = specs
            .par_iter()
            .map(|s| {
                let b = s.build()?;
                let l = enumerate_subgroups(&b.group)?;
                classify(&b.group);
                Ok((s.clone(), b, l))
            })
            .collect::<Result<_>>()?;
        let per_group: Vec<Vec<Row>> = built
            .par_iter()
            .map(|(s, b, l)| {
                let name = s.to_string();
                l.par_iter()
                    .map(|h| compute_row(&name, &b.group, h, &decider, config.budget))
                    .collect()
            })
            .collect();

        let mut rows = Vec::new();
        let mut entries = Vec::new();
        for ((spec, built, lattice), group_rows) in built.into_iter().zip(per_group) {
            let first_row = rows.len();
            let index = lattice
                .iter()
                .enumerate()
                .map(|(i, h)| (h.mask().clone(), first_row + i))
                .collect();
            rows.extend(group_rows);
            entries.push(Entry {
                spec: spec.to_string(),
                built,
                lattice,
                first_row,
                index,
            });
        }
        let ctx = Context {
            entries,
            rows,
            decider,
            budget: config.budget,
        };
        let mut selected = config.properties.clone();
        selected.sort();
        selected.dedup();
        let properties: Vec<PropertyResult> =
            selected.iter().map(|&p| check_property(p, &ctx)).collect();

        let groups: Vec<GroupSummary> = ctx
            .entries
            .iter()
            .map(|e| GroupSummary {
                spec: e.spec.clone(),
                hash: e.group().hash().to_string(),
                order: e.group().order(),
                subgroups: e.lattice.len(),
                perfect_codes: e
                    .rows(&ctx.rows)
                    .iter()
                    .filter(|r| r.is_yes() == Some(true))
                    .count(),
            })
            .collect();
        let rows = ctx.rows;
        let summary = Summary {
            groups: groups.len(),
            rows: rows.len(),
            agreements: rows.iter().filter(|r| r.agree).count(),
            disagreements: rows
                .iter()
                .filter(|r| !r.agree && r.verdict.is_some() && r.oracle != OracleVerdict::BudgetExceeded)
                .count(),
            budget_exceeded: rows.iter().filter(|r| r.budget_exceeded()).count(),
            errors: rows.iter().filter(|r| r.error.is_some()).count(),
            perfect_codes: rows.iter().filter(|r| r.oracle == OracleVerdict::Yes).count(),
            even_order_even_index: rows.iter().filter(|r| r.even_order_even_index).count(),
            properties_passed: properties.iter().filter(|p| p.passed).count(),
            properties_failed: properties.iter().filter(|p| !p.passed).count(),
            elapsed_ms: start.elapsed().as_millis() as u64,
        };
        Ok(CatalogReport {
            config: config.clone(),
            groups,
            rows,
            properties,
            summary,
        })
    })
}

fn graph_check(g: &Group, h: &Subgroup, t: &Transversal) -> bool {
    let Ok(s) = connection_set_from_transversal(t) else {
        return false;
    };
    build_cayley(g, s).is_ok_and(|cay| is_perfect_code_in_graph(&cay, h.mask()))
}

fn compute_row(name: &str, g: &Group, h: &Subgroup, decider: &Decider, budget: u64) -> Row {
    let start = Instant::now();
    let mut row = Row {
        group: name.to_string(),
        group_hash: g.hash().to_string(),
        group_order: g.order(),
        subgroup_order: h.order(),
        subgroup_mask_hex: h.to_hex(),
        normal: h.is_normal(g),
        verdict: None,
        witness: None,
        trace: Vec::new(),
        oracle: OracleVerdict::BudgetExceeded,
        agree: false,
        graph_ok: None,
        total: None,
        total_graph_ok: None,
        even_order_even_index: false,
        error: None,
        elapsed_ns: 0,
    };
    let mut graph_ok = None;
    match decider.decide(g, h) {
        Ok(d) => {
            if let Some(t) = d.transversal() {
                graph_ok = Some(graph_check(g, h, t));
            }
            row.verdict = Some(d.verdict);
            row.witness = d.witness;
            row.trace = d.trace.iter().map(|s| s.to_string()).collect();
        }
        Err(Error::BudgetExceeded(_)) => row.error = Some(BUDGET_MESSAGE.into()),
        Err(e) => row.error = Some(e.to_string()),
    }
    let search = TransversalSearch::new(g, h).budget(budget);
    match search.cayley() {
        Ok(Some(t)) => {
            row.oracle = OracleVerdict::Yes;
            graph_ok = Some(graph_ok.unwrap_or(true) && graph_check(g, h, &t));
        }
        Ok(None) => row.oracle = OracleVerdict::No,
        Err(_) => row.oracle = OracleVerdict::BudgetExceeded,
    }
    row.graph_ok = graph_ok;
    row.agree = match (row.verdict, row.oracle) {
        (Some(v), OracleVerdict::Yes) => v.is_yes(),
        (Some(v), OracleVerdict::No) => !v.is_yes(),
        _ => false,
    };
    if let Ok(total) = search.total() {
        row.total = Some(total.is_some());
        if let Some(t) = total {
            row.total_graph_ok = Some(
                build_cayley(g, t.elements.clone())
                    .is_ok_and(|cay| is_total_perfect_code_in_graph(&cay, h.mask())),
            );
        }
    }
    row.even_order_even_index = row.oracle == OracleVerdict::Yes
        && h.order() % 2 == 0
        && h.index_in(g) % 2 == 0;
    row.elapsed_ns = start.elapsed().as_nanos() as u64;
    row
}
