//! Simple Kantian equilibria of symmetric 2×2 games.
//!
//! A simple Kantian equilibrium is a common mixed strategy `(p, 1 - p)` that
//! maximizes a player's payoff when both players use it. For a symmetric
//! 2×2 game this is the maximum of a quadratic in `p` over `[0, 1]`, solved
//! in closed form by [`solve_ske`]. [`brute_force_ske`] is an independent
//! numerical check that does not share any of the closed-form logic.

use serde::{Deserialize, Serialize};

use crate::game::{normalize_with_tol, NormalForm, NormalizedGame, SymmetricGame, DEFAULT_TOL};
use crate::optim::golden_section_max;

/// Argmax set of the diagonal payoff over `p ∈ [0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SkeStrategySet {
    Singleton {
        p: f64,
    },
    /// Both pure strategies, `{0, 1}`.
    Endpoints,
    /// Every mixed strategy, `[0, 1]`.
    FullInterval,
}

impl SkeStrategySet {
    /// Deterministic member used for display and evaluation.
    pub fn representative(&self) -> f64 {
        match *self {
            SkeStrategySet::Singleton { p } => p,
            SkeStrategySet::Endpoints | SkeStrategySet::FullInterval => 1.0,
        }
    }

    /// Fixed text token: the probability itself, `{0,1}` or `[0,1]`.
    pub fn token(&self) -> String {
        match *self {
            SkeStrategySet::Singleton { p } => crate::report::fmt_num(p),
            SkeStrategySet::Endpoints => "{0,1}".to_string(),
            SkeStrategySet::FullInterval => "[0,1]".to_string(),
        }
    }

    /// The set after renumbering strategies (`p -> 1 - p`).
    pub fn relabeled(&self) -> Self {
        match *self {
            SkeStrategySet::Singleton { p } => SkeStrategySet::Singleton { p: 1.0 - p },
            other => other,
        }
    }

    pub fn contains(&self, p: f64, tol: f64) -> bool {
        match *self {
            SkeStrategySet::Singleton { p: q } => (p - q).abs() <= tol,
            SkeStrategySet::Endpoints => p.abs() <= tol || (p - 1.0).abs() <= tol,
            SkeStrategySet::FullInterval => (-tol..=1.0 + tol).contains(&p),
        }
    }
}

/// Which case of the closed-form solution applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassicalBranch {
    /// Distinct diagonal payoffs, off-diagonal sum too small: the better
    /// diagonal outcome is played for sure.
    PureDiagonal,
    /// Equal diagonal payoffs, off-diagonal sum below them: `{0, 1}`.
    Endpoints,
    /// Equal diagonal payoffs, off-diagonal sum equal to them: `[0, 1]`.
    FullInterval,
    /// Off-diagonal sum large enough for an interior maximizer.
    Interior,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SkeSolution {
    /// Argmax set with respect to the game's original strategy labels.
    pub strategies: SkeStrategySet,
    pub payoff: f64,
    pub branch: ClassicalBranch,
    /// Representative probability in the normalized (possibly relabeled) game.
    pub normalized_p: f64,
}

/// Payoff to either player when both play `(p, 1 - p)`.
pub fn diagonal_payoff(g: &SymmetricGame, p: f64) -> f64 {
    let q = 1.0 - p;
    p * p * g.a00 + p * q * (g.a01 + g.a10) + q * q * g.a11
}

/// Argmax set of the diagonal payoff of a normalized game. Comparisons
/// within `eps` of a boundary take the boundary case.
pub fn solve_ske_normalized(n: &NormalizedGame, eps: f64) -> SkeStrategySet {
    match n.form {
        NormalForm::DiagDistinct { d, .. } => {
            if d < 2.0 - eps {
                SkeStrategySet::Singleton { p: 1.0 }
            } else {
                // vertex of p^2 + d p (1 - p); equals 1 at d = 2
                let p = -d / (2.0 * (1.0 - d));
                SkeStrategySet::Singleton {
                    p: p.clamp(0.0, 1.0),
                }
            }
        }
        NormalForm::DiagEqual { e, .. } => {
            if e.abs() <= eps {
                SkeStrategySet::FullInterval
            } else if e < 0.0 {
                SkeStrategySet::Endpoints
            } else {
                SkeStrategySet::Singleton { p: 0.5 }
            }
        }
    }
}

/// [`solve_ske_with_tol`] at the default tolerance.
pub fn solve_ske(g: &SymmetricGame) -> SkeSolution {
    solve_ske_with_tol(g, DEFAULT_TOL)
}

/// Closed-form simple Kantian equilibrium and its payoff.
pub fn solve_ske_with_tol(g: &SymmetricGame, eps: f64) -> SkeSolution {
    let (n, _) = normalize_with_tol(g, eps);
    let normalized = solve_ske_normalized(&n, eps);
    let strategies = if n.swapped {
        normalized.relabeled()
    } else {
        normalized
    };

    let top = g.a00.max(g.a11);
    let sum = g.a01 + g.a10;
    let surplus = sum - 2.0 * top;
    let payoff = if surplus <= eps {
        top
    } else {
        (sum * sum - 4.0 * g.a00 * g.a11) / (4.0 * (sum - g.a00 - g.a11))
    };

    let branch = match normalized {
        SkeStrategySet::Endpoints => ClassicalBranch::Endpoints,
        SkeStrategySet::FullInterval => ClassicalBranch::FullInterval,
        SkeStrategySet::Singleton { .. } if surplus <= eps => match n.form {
            NormalForm::DiagDistinct { .. } => ClassicalBranch::PureDiagonal,
            // DiagEqual singletons only occur for e > eps
            NormalForm::DiagEqual { .. } => ClassicalBranch::Interior,
        },
        SkeStrategySet::Singleton { .. } => ClassicalBranch::Interior,
    };

    SkeSolution {
        strategies,
        payoff,
        branch,
        normalized_p: normalized.representative(),
    }
}

/// Grid search over `grid_points` equally spaced values of `p`, refined by
/// golden-section search on the two grid cells around the best point.
/// Returns `(argmax, max)`.
pub fn brute_force_ske(g: &SymmetricGame, grid_points: usize) -> (f64, f64) {
    assert!(grid_points >= 3, "need at least 3 grid points");
    let h = 1.0 / (grid_points - 1) as f64;
    let mut best = (0.0, diagonal_payoff(g, 0.0));
    let mut best_idx = 0;
    for i in 1..grid_points {
        let p = i as f64 * h;
        let v = diagonal_payoff(g, p);
        if v > best.1 {
            best = (p, v);
            best_idx = i;
        }
    }
    let lo = best_idx.saturating_sub(1) as f64 * h;
    let hi = ((best_idx + 1).min(grid_points - 1) as f64 * h).min(1.0);
    let refined = golden_section_max(|p| diagonal_payoff(g, p), lo, hi, 1e-10);
    if refined.1 > best.1 {
        refined
    } else {
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::normalize;

    fn game(a: [f64; 4]) -> SymmetricGame {
        SymmetricGame::from_array(a).unwrap()
    }

    #[test]
    fn diagonal_payoff_examples() {
        let normalized = game([1.0, -0.5, 2.0, 0.0]); // form with a=-0.5, d=1.5
        assert_eq!(diagonal_payoff(&normalized, 1.0), 1.0);
        assert_eq!(diagonal_payoff(&game([1.0, 5.0, 3.0, 1.0]), 0.5), 2.5);
    }

    #[test]
    fn normalized_branches() {
        let distinct = |d: f64| NormalizedGame {
            form: NormalForm::DiagDistinct { a: 0.0, d },
            swapped: false,
            transform: crate::game::AffineTransform::IDENTITY,
        };
        let equal = |e: f64| NormalizedGame {
            form: NormalForm::DiagEqual { b: 0.0, e },
            swapped: false,
            transform: crate::game::AffineTransform::IDENTITY,
        };
        assert_eq!(
            solve_ske_normalized(&distinct(1.5), 1e-9),
            SkeStrategySet::Singleton { p: 1.0 }
        );
        assert_eq!(
            solve_ske_normalized(&distinct(2.0), 1e-9),
            SkeStrategySet::Singleton { p: 1.0 }
        );
        assert_eq!(
            solve_ske_normalized(&distinct(-3.0), 1e-9),
            SkeStrategySet::Singleton { p: 1.0 }
        );
        // d = 4: p = -4 / (2 * -3) = 2/3
        match solve_ske_normalized(&distinct(4.0), 1e-9) {
            SkeStrategySet::Singleton { p } => assert!((p - 2.0 / 3.0).abs() < 1e-15),
            other => panic!("{other:?}"),
        }
        assert_eq!(
            solve_ske_normalized(&equal(0.0), 1e-9),
            SkeStrategySet::FullInterval
        );
        assert_eq!(
            solve_ske_normalized(&equal(-1.0), 1e-9),
            SkeStrategySet::Endpoints
        );
        assert_eq!(
            solve_ske_normalized(&equal(6.0), 1e-9),
            SkeStrategySet::Singleton { p: 0.5 }
        );
    }

    #[test]
    fn interior_maximizer_of_equal_form_is_one_half() {
        // e p (1 - p) on a fine grid, e = 6
        let best = (0..=10_000)
            .map(|i| i as f64 / 10_000.0)
            .max_by(|a, b| (a * (1.0 - a)).total_cmp(&(b * (1.0 - b))))
            .unwrap();
        assert_eq!(best, 0.5);
    }

    #[test]
    fn prisoners_dilemma() {
        let s = solve_ske(&game([3.0, 0.0, 5.0, 1.0]));
        assert_eq!(s.strategies, SkeStrategySet::Singleton { p: 1.0 });
        assert_eq!(s.payoff, 3.0);
        assert_eq!(s.branch, ClassicalBranch::PureDiagonal);
    }

    #[test]
    fn battle_of_the_sexes_like() {
        let s = solve_ske(&game([1.0, 5.0, 3.0, 1.0]));
        assert_eq!(s.strategies, SkeStrategySet::Singleton { p: 0.5 });
        assert!((s.payoff - 2.5).abs() < 1e-12);
        assert_eq!(s.branch, ClassicalBranch::Interior);
    }

    #[test]
    fn constant_and_zero_games() {
        let s = solve_ske(&game([0.0; 4]));
        assert_eq!(s.strategies, SkeStrategySet::FullInterval);
        assert_eq!(s.payoff, 0.0);
        assert_eq!(s.strategies.representative(), 1.0);

        let (p, v) = brute_force_ske(&game([2.5; 4]), 11);
        assert!((v - 2.5).abs() < 1e-14);
        assert!((0.0..=1.0).contains(&p));
    }

    #[test]
    fn endpoints_case() {
        let g = game([2.0, 1.0, 0.0, 2.0]);
        let s = solve_ske(&g);
        assert_eq!(s.strategies, SkeStrategySet::Endpoints);
        assert_eq!(s.payoff, 2.0);
        assert_eq!(diagonal_payoff(&g, 0.0), 2.0);
        assert_eq!(diagonal_payoff(&g, 1.0), 2.0);
    }

    #[test]
    fn swapped_game_reports_original_labels() {
        // a11 > a00 with an interior maximizer
        let g = game([0.0, 4.0, 3.0, 1.0]);
        let s = solve_ske(&g);
        let (n, _) = normalize(&g);
        assert!(n.swapped);
        let (bp, bv) = brute_force_ske(&g, 1001);
        match s.strategies {
            SkeStrategySet::Singleton { p } => {
                assert!((p - bp).abs() < 1e-6);
                assert!((s.normalized_p - (1.0 - p)).abs() < 1e-15);
            }
            other => panic!("{other:?}"),
        }
        assert!((s.payoff - bv).abs() < 1e-9);

        // pure case: the second strategy is played
        let s = solve_ske(&game([1.0, 0.0, 0.0, 3.0]));
        assert_eq!(s.strategies, SkeStrategySet::Singleton { p: 0.0 });
        assert_eq!(s.payoff, 3.0);
    }

    #[test]
    fn brute_force_examples() {
        let (p, v) = brute_force_ske(&game([1.0, 5.0, 3.0, 1.0]), 1001);
        assert!((p - 0.5).abs() < 1e-6 && (v - 2.5).abs() < 1e-6);
        let (p, v) = brute_force_ske(&game([3.0, 0.0, 5.0, 1.0]), 1001);
        assert!((p - 1.0).abs() < 1e-6 && (v - 3.0).abs() < 1e-6);
    }

    #[test]
    fn payoff_is_continuous_across_branch_boundary() {
        // a00 = 2, a11 = 0, a01 + a10 = 4 + t crosses 2 a00 at t = 0
        let at = |t: f64| solve_ske(&game([2.0, 2.0 + t, 2.0, 0.0])).payoff;
        let left = at(-1e-7);
        let right = at(1e-7);
        assert!((left - 2.0).abs() < 1e-12);
        assert!((right - 2.0).abs() < 1e-6);
        let mut prev = at(-1.0);
        for i in -1000..=1000 {
            let cur = at(i as f64 * 1e-3);
            assert!((cur - prev).abs() < 2e-3, "jump at t = {}", i as f64 * 1e-3);
            prev = cur;
        }
    }
}
