//! Game input records, classical-vs-quantum comparison reports and their
//! text renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{expected_payoff, nash_equilibria, BimatrixGame, NashSet, SymmetricGame};
use crate::kantian::{solve_ske_with_tol, SkeSolution};
use crate::quantum::{quantum_ske_with_tol, QuantumBranch, QuantumSkeResult};

/// One game as read from the command line or an input file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GameSpec {
    #[serde(flatten)]
    pub game: GameInput,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GameInput {
    /// `[a00, a01, a10, a11]`
    Symmetric([f64; 4]),
    Bimatrix {
        a: [[f64; 2]; 2],
        b: [[f64; 2]; 2],
    },
}

impl GameSpec {
    pub fn symmetric(payoffs: [f64; 4]) -> Self {
        Self {
            game: GameInput::Symmetric(payoffs),
            label: None,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// The symmetric game described by this record. Bimatrix records must be
    /// symmetric within `tol`.
    pub fn to_symmetric(&self, tol: f64) -> Result<SymmetricGame> {
        match &self.game {
            GameInput::Symmetric(p) => SymmetricGame::from_array(*p),
            GameInput::Bimatrix { a, b } => {
                let g = BimatrixGame::new(*a, *b)?;
                SymmetricGame::from_bimatrix(&g, tol)
            }
        }
    }

    pub fn label_or_empty(&self) -> &str {
        self.label.as_deref().unwrap_or("")
    }
}

impl FromStr for GameSpec {
    type Err = Error;

    /// Parses `"a00,a01,a10,a11"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(Error::Malformed(format!(
                "expected four comma-separated payoffs, got {}",
                parts.len()
            )));
        }
        let mut p = [0.0; 4];
        for (slot, text) in p.iter_mut().zip(&parts) {
            *slot = text
                .parse::<f64>()
                .map_err(|e| Error::Malformed(format!("payoff {text:?}: {e}")))?;
            if !slot.is_finite() {
                return Err(Error::Malformed(format!("payoff {text:?} is not finite")));
            }
        }
        Ok(GameSpec::symmetric(p))
    }
}

/// Parses one JSON game record per non-blank line. Errors carry 1-based line
/// numbers; good lines are returned regardless of bad ones.
pub fn parse_game_lines(text: &str) -> Vec<Result<GameSpec>> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| {
            serde_json::from_str::<GameSpec>(line).map_err(|e| Error::BadLine {
                line: i + 1,
                message: e.to_string(),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    Equal,
    QuantumAdvantage,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::Equal => "Equal",
            Classification::QuantumAdvantage => "QuantumAdvantage",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NashEntry {
    pub row_p: f64,
    pub column_p: f64,
    pub row_payoff: f64,
    pub column_payoff: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NashBaseline {
    Profiles {
        equilibria: Vec<NashEntry>,
    },
    Continuum {
        row_indifferent: bool,
        column_indifferent: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub game: GameSpec,
    /// `[a00, a01, a10, a11]` of the symmetric game that was solved.
    pub payoffs: [f64; 4],
    pub classical: SkeSolution,
    pub quantum: QuantumSkeResult,
    /// Quantum payoff minus classical payoff.
    pub gap: f64,
    pub classification: Classification,
    pub nash_baseline: NashBaseline,
}

/// Closed form of the quantum-minus-classical gap in the advantage region,
/// `(s - 2 max)(s - 2 min) / (4 (s - a00 - a11))` with `s = a01 + a10`.
pub fn advantage_gap(g: &SymmetricGame) -> f64 {
    let s = g.a01() + g.a10();
    let (hi, lo) = (g.a00().max(g.a11()), g.a00().min(g.a11()));
    (s - 2.0 * hi) * (s - 2.0 * lo) / (4.0 * (s - g.a00() - g.a11()))
}

/// Solves one game classically and in the quantum scheme. `tol` is used for
/// the symmetry check, the solvers' branch comparisons and the
/// classification threshold.
pub fn compare_game(spec: &GameSpec, tol: f64) -> Result<ComparisonReport> {
    let g = spec.to_symmetric(tol)?;
    let classical = solve_ske_with_tol(&g, tol);
    let quantum = quantum_ske_with_tol(&g, tol);
    let gap = quantum.payoff - classical.payoff;
    let classification = if quantum.branch == QuantumBranch::OffDiagonalSplit && gap > tol {
        Classification::QuantumAdvantage
    } else {
        Classification::Equal
    };

    let bimatrix = g.to_bimatrix();
    let nash_baseline = match nash_equilibria(&bimatrix, tol) {
        NashSet::Profiles { profiles } => NashBaseline::Profiles {
            equilibria: profiles
                .into_iter()
                .map(|(s1, s2)| {
                    let (u1, u2) = expected_payoff(&bimatrix, s1, s2);
                    NashEntry {
                        row_p: s1.p(),
                        column_p: s2.p(),
                        row_payoff: u1,
                        column_payoff: u2,
                    }
                })
                .collect(),
        },
        NashSet::Continuum {
            row_indifferent,
            column_indifferent,
        } => NashBaseline::Continuum {
            row_indifferent,
            column_indifferent,
        },
    };

    Ok(ComparisonReport {
        game: spec.clone(),
        payoffs: g.to_array(),
        classical,
        quantum,
        gap,
        classification,
        nash_baseline,
    })
}

/// [`compare_game`] over a batch, keeping order and per-game errors.
pub fn compare(specs: &[GameSpec], tol: f64) -> Vec<Result<ComparisonReport>> {
    specs.iter().map(|s| compare_game(s, tol)).collect()
}

/// Output encodings for reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    JsonLines,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "human" => Ok(Format::Human),
            "json-lines" | "jsonl" => Ok(Format::JsonLines),
            "csv" => Ok(Format::Csv),
            other => Err(Error::InvalidArgument(format!("unknown format {other:?}"))),
        }
    }
}

/// Renders a number with at most 12 significant digits and no trailing zeros.
pub fn fmt_num(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.11e}")
        .parse()
        .expect("scientific literal parses");
    format!("{rounded}")
}

pub const CSV_HEADER: [&str; 10] = [
    "label",
    "a00",
    "a01",
    "a10",
    "a11",
    "classical_p_repr",
    "classical_payoff",
    "quantum_payoff",
    "gap",
    "classification",
];

pub fn emit_report(reports: &[ComparisonReport], format: Format) -> String {
    match format {
        Format::Human => emit_human(reports),
        Format::JsonLines => reports
            .iter()
            .map(|r| serde_json::to_string(r).expect("reports serialize") + "\n")
            .collect(),
        Format::Csv => emit_csv(reports),
    }
}

fn emit_csv(reports: &[ComparisonReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for r in reports {
        let mut row = vec![r.game.label_or_empty().to_string()];
        row.extend(r.payoffs.iter().map(|&x| fmt_num(x)));
        row.push(r.classical.strategies.token());
        row.push(fmt_num(r.classical.payoff));
        row.push(fmt_num(r.quantum.payoff));
        row.push(fmt_num(r.gap));
        row.push(r.classification.as_str().to_string());
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("csv output is utf-8")
}

fn emit_human(reports: &[ComparisonReport]) -> String {
    let header = [
        "label",
        "game",
        "classical p",
        "classical",
        "quantum",
        "witness (θ,α,β)",
        "gap",
        "class",
    ];
    let rows: Vec<[String; 8]> = reports
        .iter()
        .map(|r| {
            let w = r.quantum.witness;
            [
                r.game.label_or_empty().to_string(),
                format!(
                    "({})",
                    r.payoffs
                        .iter()
                        .map(|&x| fmt_num(x))
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
                r.classical.strategies.token(),
                fmt_num(r.classical.payoff),
                fmt_num(r.quantum.payoff),
                format!(
                    "({}, {}, {})",
                    fmt_num(w.theta()),
                    fmt_num(w.alpha()),
                    fmt_num(w.beta())
                ),
                fmt_num(r.gap),
                r.classification.as_str().to_string(),
            ]
        })
        .collect();

    let mut widths = header.map(|h| h.chars().count());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row.iter()) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[&str]| {
        let text = cells
            .iter()
            .zip(widths.iter())
            .map(|(c, w)| format!("{c:<w$}", w = *w))
            .collect::<Vec<_>>()
            .join("  ");
        writeln!(out, "{}", text.trim_end()).expect("string write");
    };
    line(&header);
    for row in &rows {
        line(&row.iter().map(String::as_str).collect::<Vec<_>>());
    }
    out
}
