//! Eisert–Wilkens–Lewenstein quantization of 2×2 games.
//!
//! Each player applies an SU(2) unitary `U(θ, α, β)` to one qubit of the
//! maximally entangled state `(|00⟩ + i|11⟩)/√2`. The outcome `(k, l)` is
//! read in the entangled basis `|Ψ_kl⟩ = C_k ⊗ C_l |Ψ⟩` and each player
//! receives the classical payoff weighted by `|⟨Ψ_kl|U1 ⊗ U2|Ψ⟩|²`.
//!
//! [`evolve`] computes the amplitudes by explicit 4×4 tensor products and is
//! the reference for everything else in the module.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, PI, TAU};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{BimatrixGame, SymmetricGame, DEFAULT_TOL};
use crate::optim::{nelder_mead_min, SimplexOptions};

pub type Mat2 = [[Complex64; 2]; 2];
pub type Mat4 = [[Complex64; 4]; 4];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Parameters of the SU(2) strategy `U(θ, α, β)` with `θ ∈ [0, π]` and
/// `α, β ∈ [0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitaryParams {
    theta: f64,
    alpha: f64,
    beta: f64,
}

impl UnitaryParams {
    /// Rejects `theta` outside `[0, π]`; wraps `alpha` and `beta` into `[0, 2π)`.
    pub fn new(theta: f64, alpha: f64, beta: f64) -> Result<Self> {
        for x in [theta, alpha, beta] {
            if !x.is_finite() {
                return Err(Error::NonFiniteParameter(x));
            }
        }
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::ThetaOutOfRange(theta));
        }
        Ok(Self {
            theta,
            alpha: wrap_angle(alpha),
            beta: wrap_angle(beta),
        })
    }

    /// Parameters of the same matrix as `U(theta, alpha, beta)` for any real
    /// inputs, brought into the canonical ranges.
    pub fn from_any(theta: f64, alpha: f64, beta: f64) -> Self {
        let (mut theta, mut alpha, mut beta) = (theta.rem_euclid(2.0 * TAU), alpha, beta);
        // U(θ + 2π, α, β) = -U(θ, α, β) = U(θ, α + π, β + π)
        if theta >= TAU {
            theta -= TAU;
            alpha += PI;
            beta += PI;
        }
        // cos((2π - θ)/2) = -cos(θ/2) and the sine is unchanged
        if theta > PI {
            theta = TAU - theta;
            alpha += PI;
        }
        Self {
            theta,
            alpha: wrap_angle(alpha),
            beta: wrap_angle(beta),
        }
    }

    pub const IDENTITY: UnitaryParams = UnitaryParams {
        theta: 0.0,
        alpha: 0.0,
        beta: 0.0,
    };

    pub fn theta(&self) -> f64 {
        self.theta
    }
    pub fn alpha(&self) -> f64 {
        self.alpha
    }
    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn to_array(&self) -> [f64; 3] {
        [self.theta, self.alpha, self.beta]
    }
}

fn wrap_angle(x: f64) -> f64 {
    let w = x.rem_euclid(TAU);
    // rem_euclid can round up to exactly 2π for tiny negative inputs
    if w >= TAU {
        0.0
    } else {
        w
    }
}

/// The 2×2 matrix of `U(θ, α, β)`.
pub fn unitary_matrix(u: &UnitaryParams) -> Mat2 {
    let (s, c) = (u.theta / 2.0).sin_cos();
    [
        [
            Complex64::from_polar(c, u.alpha),
            I * Complex64::from_polar(s, u.beta),
        ],
        [
            I * Complex64::from_polar(s, -u.beta),
            Complex64::from_polar(c, -u.alpha),
        ],
    ]
}

/// Kronecker product `a ⊗ b`, first factor acting on the first qubit.
pub fn kron(a: &Mat2, b: &Mat2) -> Mat4 {
    let mut out = [[ZERO; 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

/// State of two qubits in the computational basis `|00⟩, |01⟩, |10⟩, |11⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitState {
    pub amplitudes: [Complex64; 4],
}

impl TwoQubitState {
    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|c| c.norm_sqr()).sum()
    }

    /// `⟨self|other⟩`, antilinear in `self`.
    pub fn inner(&self, other: &TwoQubitState) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(other.amplitudes.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn apply(&self, m: &Mat4) -> TwoQubitState {
        let mut out = [ZERO; 4];
        for (i, row) in m.iter().enumerate() {
            out[i] = row
                .iter()
                .zip(self.amplitudes.iter())
                .map(|(x, y)| x * y)
                .sum();
        }
        TwoQubitState { amplitudes: out }
    }
}

/// `(|00⟩ + i|11⟩)/√2`.
pub fn initial_state() -> TwoQubitState {
    TwoQubitState {
        amplitudes: [
            Complex64::new(FRAC_1_SQRT_2, 0.0),
            ZERO,
            ZERO,
            Complex64::new(0.0, FRAC_1_SQRT_2),
        ],
    }
}

fn c_operator(bit: u8) -> Mat2 {
    match bit {
        0 => [[ONE, ZERO], [ZERO, ONE]],
        _ => [[ZERO, I], [I, ZERO]],
    }
}

/// Measurement basis vector `|Ψ_kl⟩ = C_k ⊗ C_l |Ψ⟩`.
///
/// Panics unless `k` and `l` are 0 or 1.
pub fn basis_state(k: u8, l: u8) -> TwoQubitState {
    assert!(k <= 1 && l <= 1, "basis labels are bits");
    initial_state().apply(&kron(&c_operator(k), &c_operator(l)))
}

/// Amplitudes `⟨Ψ_kl|U1 ⊗ U2|Ψ⟩` for the four outcomes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplitudeVector {
    pub c00: Complex64,
    pub c01: Complex64,
    pub c10: Complex64,
    pub c11: Complex64,
}

impl AmplitudeVector {
    /// Outcome probabilities ordered `00, 01, 10, 11`.
    pub fn probabilities(&self) -> [f64; 4] {
        [
            self.c00.norm_sqr(),
            self.c01.norm_sqr(),
            self.c10.norm_sqr(),
            self.c11.norm_sqr(),
        ]
    }

    pub fn as_array(&self) -> [Complex64; 4] {
        [self.c00, self.c01, self.c10, self.c11]
    }
}

/// Applies `U1 ⊗ U2` to the initial state and projects onto the four
/// measurement basis vectors.
pub fn evolve(u1: &UnitaryParams, u2: &UnitaryParams) -> AmplitudeVector {
    let op = kron(&unitary_matrix(u1), &unitary_matrix(u2));
    let out = initial_state().apply(&op);
    let amp = |k, l| basis_state(k, l).inner(&out);
    AmplitudeVector {
        c00: amp(0, 0),
        c01: amp(0, 1),
        c10: amp(1, 0),
        c11: amp(1, 1),
    }
}

/// Trigonometric closed forms of the four amplitudes. They are real and
/// agree with [`evolve`] component by component.
pub fn amplitudes_closed_form(u1: &UnitaryParams, u2: &UnitaryParams) -> AmplitudeVector {
    let (s1, c1) = (u1.theta / 2.0).sin_cos();
    let (s2, c2) = (u2.theta / 2.0).sin_cos();
    let (a1, b1, a2, b2) = (u1.alpha, u1.beta, u2.alpha, u2.beta);
    let re = |x: f64| Complex64::new(x, 0.0);
    AmplitudeVector {
        c00: re((a1 + a2).cos() * c1 * c2 + (b1 + b2).sin() * s1 * s2),
        c01: re((a1 - b2).cos() * c1 * s2 + (a2 - b1).sin() * s1 * c2),
        c10: re((a2 - b1).cos() * s1 * c2 + (a1 - b2).sin() * c1 * s2),
        c11: re((b1 + b2).cos() * s1 * s2 - (a1 + a2).sin() * c1 * c2),
    }
}

/// Expected payoffs `(v1, v2)` of the quantum profile `(u1, u2)`.
pub fn quantum_payoff(g: &BimatrixGame, u1: &UnitaryParams, u2: &UnitaryParams) -> (f64, f64) {
    let probs = evolve(u1, u2).probabilities();
    let mut v = (0.0, 0.0);
    for (idx, w) in probs.iter().enumerate() {
        let (x, y) = g.outcome(idx / 2, idx % 2);
        v.0 += w * x;
        v.1 += w * y;
    }
    v
}

/// Payoff to either player when both apply `u`.
pub fn quantum_diagonal_payoff(g: &SymmetricGame, u: &UnitaryParams) -> f64 {
    quantum_payoff(&g.to_bimatrix(), u, u).0
}

/// Which case of the closed-form quantum payoff applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuantumBranch {
    /// All weight on the better diagonal outcome.
    DiagonalOutcome,
    /// Weight split evenly over the two off-diagonal outcomes.
    OffDiagonalSplit,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuantumSkeResult {
    pub payoff: f64,
    /// A common strategy attaining `payoff`.
    pub witness: UnitaryParams,
    pub branch: QuantumBranch,
}

/// [`quantum_ske_with_tol`] at the default tolerance.
pub fn quantum_ske(g: &SymmetricGame) -> QuantumSkeResult {
    quantum_ske_with_tol(g, DEFAULT_TOL)
}

/// Maximum of the quantum diagonal payoff over SU(2) with a canonical
/// maximizer.
pub fn quantum_ske_with_tol(g: &SymmetricGame, eps: f64) -> QuantumSkeResult {
    let top = g.a00().max(g.a11());
    if g.off_diagonal_surplus() <= eps {
        let witness = if g.a11() > g.a00() + eps {
            // all weight on Ψ_11
            UnitaryParams {
                theta: PI,
                alpha: 0.0,
                beta: 0.0,
            }
        } else {
            UnitaryParams {
                theta: 0.0,
                alpha: FRAC_PI_2,
                beta: 0.0,
            }
        };
        QuantumSkeResult {
            payoff: top,
            witness,
            branch: QuantumBranch::DiagonalOutcome,
        }
    } else {
        QuantumSkeResult {
            payoff: (g.a01() + g.a10()) / 2.0,
            witness: UnitaryParams {
                theta: FRAC_PI_2,
                alpha: FRAC_PI_4,
                beta: 0.0,
            },
            branch: QuantumBranch::OffDiagonalSplit,
        }
    }
}

/// Settings for [`maximize_su2`].
#[derive(Debug, Clone, Copy)]
pub struct OptimizerConfig {
    /// Grid points per dimension.
    pub grid: usize,
    /// Number of best grid points refined by the simplex search.
    pub seeds: usize,
    /// Simplex diameter at which refinement stops.
    pub refine_tol: f64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self {
            grid: 16,
            seeds: 5,
            refine_tol: 1e-9,
        }
    }
}

/// Maximizes `f` over SU(2): grid search on `[0, π] × [0, 2π)²` followed by
/// Nelder–Mead refinement from the best grid points. Deterministic; ties on
/// the grid are broken lexicographically on `(θ, α, β)`.
pub fn maximize_su2<F>(f: F, cfg: &OptimizerConfig) -> (UnitaryParams, f64)
where
    F: Fn(&UnitaryParams) -> f64 + Sync,
{
    assert!(
        cfg.grid >= 2,
        "grid needs at least two points per dimension"
    );
    let n = cfg.grid;
    let theta_step = PI / (n - 1) as f64;
    let angle_step = TAU / n as f64;

    let mut scored: Vec<(f64, [f64; 3])> = (0..n * n * n)
        .into_par_iter()
        .map(|idx| {
            let x = [
                (idx / (n * n)) as f64 * theta_step,
                ((idx / n) % n) as f64 * angle_step,
                (idx % n) as f64 * angle_step,
            ];
            let u = UnitaryParams::from_any(x[0], x[1], x[2]);
            (f(&u), x)
        })
        .collect();
    scored.sort_by(|a, b| {
        b.0.total_cmp(&a.0).then_with(|| {
            a.1.iter()
                .zip(b.1.iter())
                .map(|(x, y)| x.total_cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
    });

    let opts = SimplexOptions {
        diameter_tol: cfg.refine_tol,
        ..SimplexOptions::default()
    };
    let objective = |x: &[f64; 3]| -f(&UnitaryParams::from_any(x[0], x[1], x[2]));

    let mut best = (
        UnitaryParams::from_any(scored[0].1[0], scored[0].1[1], scored[0].1[2]),
        scored[0].0,
    );
    for &(_, seed) in scored.iter().take(cfg.seeds.max(1)) {
        let (x, neg) = nelder_mead_min(objective, seed, angle_step / 2.0, opts);
        if -neg > best.1 {
            best = (UnitaryParams::from_any(x[0], x[1], x[2]), -neg);
        }
    }
    best
}

/// Numerical maximum of the quantum diagonal payoff, independent of the
/// closed form in [`quantum_ske`].
pub fn optimize_diagonal(g: &SymmetricGame, grid: usize, refine_tol: f64) -> (UnitaryParams, f64) {
    let cfg = OptimizerConfig {
        grid,
        refine_tol,
        ..OptimizerConfig::default()
    };
    let bimatrix = g.to_bimatrix();
    maximize_su2(|u| quantum_payoff(&bimatrix, u, u).0, &cfg)
}

/// The quantum diagonal payoff at `U(2 arccos √p, 0, 0)`, which reproduces
/// the classical mixed strategy `(p, 1 - p)`.
pub fn classical_embedding(g: &SymmetricGame, p: f64) -> f64 {
    let theta = 2.0 * p.clamp(0.0, 1.0).sqrt().acos();
    let u = UnitaryParams::from_any(theta, 0.0, 0.0);
    quantum_diagonal_payoff(g, &u)
}
