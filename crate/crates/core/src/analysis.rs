//! Batch runs over random games: prevalence of quantum advantage and
//! cross-checks of the closed forms against numerical optimizers.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kantian::{brute_force_ske, diagonal_payoff, solve_ske};
use crate::quantum::{optimize_diagonal, quantum_diagonal_payoff, quantum_ske};
use crate::report::fmt_num;
use crate::sampling::{GameSampler, UniformPayoffs, RNG_NAME};

/// z-value of a two-sided 95% normal interval.
const Z95: f64 = 1.959_963_984_540_054;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Distribution {
    pub kind: String,
    pub low: f64,
    pub high: f64,
    pub rng: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleReport {
    pub seed: u64,
    pub n: u64,
    pub distribution: Distribution,
    pub advantage_count: u64,
    pub advantage_fraction: f64,
    /// Half-width of the normal-approximation 95% interval for the fraction.
    pub ci95_halfwidth: f64,
    /// Mean quantum-minus-classical gap over advantaged games; absent when
    /// no game was advantaged.
    pub mean_gap: Option<f64>,
}

/// Draws `n` games and counts those with `a01 + a10 > 2 max(a00, a11)`.
pub fn sample(n: u64, seed: u64, dist: UniformPayoffs) -> Result<SampleReport> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "sample count must be at least 1".into(),
        ));
    }
    let sampler = GameSampler::new(seed, dist);
    let gaps: Vec<Option<f64>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let g = sampler.game(i);
            (g.off_diagonal_surplus() > 0.0).then(|| quantum_ske(&g).payoff - solve_ske(&g).payoff)
        })
        .collect();

    // sequential reduction keeps the sum independent of the thread count
    let mut count = 0u64;
    let mut total = 0.0;
    for gap in gaps.iter().flatten() {
        count += 1;
        total += gap;
    }
    let fraction = count as f64 / n as f64;
    Ok(SampleReport {
        seed,
        n,
        distribution: Distribution {
            kind: "uniform".into(),
            low: dist.low,
            high: dist.high,
            rng: RNG_NAME.into(),
        },
        advantage_count: count,
        advantage_fraction: fraction,
        ci95_halfwidth: Z95 * (fraction * (1.0 - fraction) / n as f64).sqrt(),
        mean_gap: (count > 0).then(|| total / count as f64),
    })
}

impl SampleReport {
    pub fn to_human(&self) -> String {
        format!(
            "games            {}\n\
             payoffs          uniform [{}, {}) via {}, seed {}\n\
             advantaged       {} ({} ± {} at 95%)\n\
             mean gap         {}\n",
            self.n,
            fmt_num(self.distribution.low),
            fmt_num(self.distribution.high),
            self.distribution.rng,
            self.seed,
            self.advantage_count,
            fmt_num(self.advantage_fraction),
            fmt_num(self.ci95_halfwidth),
            self.mean_gap.map(fmt_num).unwrap_or_else(|| "-".into()),
        )
    }

    pub fn to_csv(&self) -> String {
        format!(
            "seed,n,low,high,advantage_count,advantage_fraction,ci95_halfwidth,mean_gap\n{},{},{},{},{},{},{},{}\n",
            self.seed,
            self.n,
            fmt_num(self.distribution.low),
            fmt_num(self.distribution.high),
            self.advantage_count,
            fmt_num(self.advantage_fraction),
            fmt_num(self.ci95_halfwidth),
            self.mean_gap.map(fmt_num).unwrap_or_default(),
        )
    }
}

/// Payoff range of the games drawn by [`verify`].
pub const VERIFY_RANGE: (f64, f64) = (-10.0, 10.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// Closed-form classical payoff vs grid + golden-section maximum.
    ClassicalPayoff,
    /// Diagonal payoff at the closed-form argmax vs the numerical maximum.
    ClassicalArgmax,
    /// Closed-form quantum payoff vs simplex-refined grid search.
    QuantumPayoff,
    /// Diagonal payoff at the canonical witness vs the closed-form payoff.
    QuantumWitness,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyFailure {
    pub index: u64,
    pub payoffs: [f64; 4],
    pub check: Check,
    pub deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub n_games: u64,
    pub seed: u64,
    pub tol: f64,
    pub grid: usize,
    pub max_classical_deviation: f64,
    pub max_quantum_deviation: f64,
    pub failures: Vec<VerifyFailure>,
    pub passed: bool,
}

/// Grid used by the classical brute-force check.
pub const CLASSICAL_GRID: usize = 1001;

/// Runs both numerical oracles on `n_games` random games with payoffs in
/// [`VERIFY_RANGE`]. `grid` is the per-dimension grid of the quantum search.
pub fn verify(n_games: u64, seed: u64, tol: f64, grid: usize) -> Result<VerifySummary> {
    if grid < 2 {
        return Err(Error::InvalidArgument("grid must be at least 2".into()));
    }
    if !(tol >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be non-negative, got {tol}"
        )));
    }
    let dist = UniformPayoffs::new(VERIFY_RANGE.0, VERIFY_RANGE.1)?;
    let sampler = GameSampler::new(seed, dist);

    let per_game: Vec<[(Check, f64); 4]> = (0..n_games)
        .into_par_iter()
        .map(|i| {
            let g = sampler.game(i);
            let closed = solve_ske(&g);
            let (_, brute_max) = brute_force_ske(&g, CLASSICAL_GRID);
            let at_argmax = diagonal_payoff(&g, closed.strategies.representative());

            let q = quantum_ske(&g);
            let (_, q_max) = optimize_diagonal(&g, grid, 1e-9);
            let at_witness = quantum_diagonal_payoff(&g, &q.witness);
            [
                (Check::ClassicalPayoff, (brute_max - closed.payoff).abs()),
                (Check::ClassicalArgmax, (brute_max - at_argmax).abs()),
                (Check::QuantumPayoff, (q_max - q.payoff).abs()),
                (Check::QuantumWitness, (at_witness - q.payoff).abs()),
            ]
        })
        .collect();

    let mut max_c: f64 = 0.0;
    let mut max_q: f64 = 0.0;
    let mut failures = Vec::new();
    for (i, checks) in per_game.iter().enumerate() {
        for &(check, dev) in checks {
            match check {
                Check::ClassicalPayoff | Check::ClassicalArgmax => max_c = max_c.max(dev),
                Check::QuantumPayoff | Check::QuantumWitness => max_q = max_q.max(dev),
            }
            if !(dev <= tol) {
                failures.push(VerifyFailure {
                    index: i as u64,
                    payoffs: sampler.game(i as u64).to_array(),
                    check,
                    deviation: dev,
                });
            }
        }
    }
    Ok(VerifySummary {
        n_games,
        seed,
        tol,
        grid,
        max_classical_deviation: max_c,
        max_quantum_deviation: max_q,
        passed: failures.is_empty(),
        failures,
    })
}

impl VerifySummary {
    pub fn to_human(&self) -> String {
        let mut out = format!(
            "games                 {} (seed {}, payoffs uniform [{}, {}))\n\
             max classical dev     {:e}\n\
             max quantum dev       {:e}\n\
             tolerance             {:e}\n\
             result                {}\n",
            self.n_games,
            self.seed,
            fmt_num(VERIFY_RANGE.0),
            fmt_num(VERIFY_RANGE.1),
            self.max_classical_deviation,
            self.max_quantum_deviation,
            self.tol,
            if self.passed { "pass" } else { "FAIL" },
        );
        for f in self.failures.iter().take(20) {
            out.push_str(&format!(
                "  game {} {:?}: {:?} off by {:e}\n",
                f.index, f.payoffs, f.check, f.deviation
            ));
        }
        if self.failures.len() > 20 {
            out.push_str(&format!("  ... {} more\n", self.failures.len() - 20));
        }
        out
    }
}
