//! The `analyze` report.

use std::fmt;

use pmas_core::assignment::side_optimal_vertices;
use pmas_core::game::{grand_coalition, superadditivity_violation};
use pmas_core::pmas::{classify_blocks, BlockDecomposition, BlockKind};
use pmas_core::solutions::{
    kohlberg_check, nucleolus, shapley_value, tau_value, tau_value_assignment,
};
use pmas_core::Error;
use serde::Serialize;

use crate::error::CliError;
use crate::input::Loaded;
use crate::output::{level, strings, unbalance, vector};

#[derive(Clone, Debug, Serialize)]
pub struct BlockReport {
    pub verdict: &'static str,
    pub null_rows: Vec<usize>,
    pub null_cols: Vec<usize>,
    pub blocks: Vec<String>,
    pub witness: Option<String>,
}

impl BlockReport {
    pub fn new(d: &BlockDecomposition) -> Self {
        let one_based = |v: &[usize]| v.iter().map(|i| i + 1).collect::<Vec<_>>();
        let join = |v: &[usize]| {
            v.iter()
                .map(|i| (i + 1).to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let blocks = d
            .blocks()
            .unwrap_or_default()
            .iter()
            .map(|b| {
                let kind = match b.kind {
                    BlockKind::RowVector => "row vector".to_string(),
                    BlockKind::ColVector => "column vector".to_string(),
                    BlockKind::GammaDominant { corner } => {
                        format!("dominant corner ({},{})", corner.0 + 1, corner.1 + 1)
                    }
                };
                format!("rows {} cols {}: {kind}", join(&b.rows), join(&b.cols))
            })
            .collect();
        BlockReport {
            verdict: if d.is_admissible() {
                "admissible"
            } else {
                "not-admissible"
            },
            null_rows: one_based(&d.null_rows),
            null_cols: one_based(&d.null_cols),
            blocks,
            witness: d.witness().map(ToString::to_string),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TauReport {
    pub upper: Vec<String>,
    pub lower: Vec<String>,
    pub kappa: String,
    pub tau: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SideReport {
    pub row_optimal: Vec<String>,
    pub column_optimal: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateReport {
    pub point: &'static str,
    pub passes: bool,
    pub levels: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub input: String,
    pub format: &'static str,
    pub players: usize,
    pub rows: Option<usize>,
    pub cols: Option<usize>,
    pub grand_worth: String,
    pub essential: Vec<String>,
    pub warnings: Vec<String>,
    pub blocks: Option<BlockReport>,
    pub side_optimal: Option<SideReport>,
    pub tau: Option<TauReport>,
    pub nucleolus: Option<Vec<String>>,
    pub shapley: Vec<String>,
    pub certificates: Vec<CertificateReport>,
    pub notes: Vec<String>,
}

pub fn analyze(input: &str, loaded: &Loaded) -> Result<AnalysisReport, CliError> {
    let g = loaded.game();
    crate::check_sweep(g.players())?;
    let mut warnings = Vec::new();
    let mut notes = Vec::new();
    if let Loaded::Explicit { game, .. } = loaded {
        if let Some((a, b)) = superadditivity_violation(game) {
            warnings.push(format!(
                "not superadditive: w({a}) + w({b}) exceeds w({})",
                a.union(b)
            ));
        }
    }
    let all = grand_coalition(g);
    let essential = g
        .essential_coalitions()
        .iter()
        .map(ToString::to_string)
        .collect();

    let (rows, cols, blocks, side_optimal) = match loaded.assignment() {
        Some(a) => {
            let side = side_optimal_vertices(a)?;
            let mid = tau_value_assignment(a)?;
            notes.push(format!("vertex midpoint {}", vector(&mid)));
            (
                Some(a.rows()),
                Some(a.cols()),
                Some(BlockReport::new(&classify_blocks(a.matrix()))),
                Some(SideReport {
                    row_optimal: strings(&side.row_optimal),
                    column_optimal: strings(&side.column_optimal),
                }),
            )
        }
        None => (None, None, None, None),
    };

    let mut certificates = Vec::new();
    let tau = match tau_value(g) {
        Ok(b) => Some(b),
        Err(Error::Unbalanced) => {
            notes.push("the core is empty; tau-value and nucleolus are undefined".into());
            None
        }
        Err(Error::DegenerateTau) => {
            notes.push("upper and lower vectors coincide but are not efficient".into());
            None
        }
        Err(e) => return Err(e.into()),
    };
    let eta = match nucleolus(g) {
        Ok(x) => Some(x),
        Err(Error::Unbalanced) => None,
        Err(e) => return Err(e.into()),
    };
    if let Some(x) = &eta {
        let c = kohlberg_check(g, x)?;
        certificates.push(CertificateReport {
            point: "nucleolus",
            passes: c.is_nucleolus(),
            levels: c.levels.iter().map(level).collect(),
        });
    }
    if let Some(b) = &tau {
        let c = kohlberg_check(g, &b.tau)?;
        if let Some(fail) = c.first_failure() {
            if let pmas_core::solutions::FamilyVerdict::NotBalanced(u) = &fail.verdict {
                notes.push(format!(
                    "tau-value fails the certificate at t={}: {}",
                    fail.threshold,
                    unbalance(u)
                ));
            }
        }
        certificates.push(CertificateReport {
            point: "tau",
            passes: c.is_nucleolus(),
            levels: c.levels.iter().map(level).collect(),
        });
    }

    Ok(AnalysisReport {
        input: input.to_string(),
        format: loaded.format().name(),
        players: g.players(),
        rows,
        cols,
        grand_worth: g.worth(all).to_string(),
        essential,
        warnings,
        blocks,
        side_optimal,
        tau: tau.map(|b| TauReport {
            upper: strings(&b.upper),
            lower: strings(&b.lower),
            kappa: b.kappa.to_string(),
            tau: strings(&b.tau),
        }),
        nucleolus: eta.as_deref().map(strings),
        shapley: strings(&shapley_value(g)?),
        certificates,
        notes,
    })
}

fn bracket(v: &[String]) -> String {
    format!("[{}]", v.join(","))
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shape = match (self.rows, self.cols) {
            (Some(r), Some(c)) => format!(", {r}x{c}"),
            _ => String::new(),
        };
        writeln!(f, "input        {} ({}{shape})", self.input, self.format)?;
        writeln!(f, "players      {}", self.players)?;
        writeln!(f, "w(N)         {}", self.grand_worth)?;
        writeln!(f, "essential    {}", self.essential.join(" "))?;
        for w in &self.warnings {
            writeln!(f, "warning      {w}")?;
        }
        if let Some(b) = &self.blocks {
            writeln!(f, "blocks       {}", b.verdict)?;
            for line in &b.blocks {
                writeln!(f, "  {line}")?;
            }
            if !b.null_rows.is_empty() || !b.null_cols.is_empty() {
                writeln!(
                    f,
                    "  null rows {:?} null cols {:?}",
                    b.null_rows, b.null_cols
                )?;
            }
            if let Some(w) = &b.witness {
                writeln!(f, "  witness: {w}")?;
            }
        }
        if let Some(s) = &self.side_optimal {
            writeln!(f, "row-optimal  {}", bracket(&s.row_optimal))?;
            writeln!(f, "col-optimal  {}", bracket(&s.column_optimal))?;
        }
        if let Some(t) = &self.tau {
            writeln!(f, "upper M      {}", bracket(&t.upper))?;
            writeln!(f, "lower m      {}", bracket(&t.lower))?;
            writeln!(f, "kappa        {}", t.kappa)?;
            writeln!(f, "tau          {}", bracket(&t.tau))?;
        }
        if let Some(eta) = &self.nucleolus {
            writeln!(f, "nucleolus    {}", bracket(eta))?;
        }
        writeln!(f, "shapley      {}", bracket(&self.shapley))?;
        for c in &self.certificates {
            let verdict = if c.passes { "passes" } else { "fails" };
            writeln!(f, "kohlberg     {} {verdict}", c.point)?;
            for l in &c.levels {
                writeln!(f, "  {l}")?;
            }
        }
        for n in &self.notes {
            writeln!(f, "note         {n}")?;
        }
        Ok(())
    }
}
