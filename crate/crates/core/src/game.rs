//! Game representations for 2×2 normal-form games.
//!
//! [`BimatrixGame`] holds an arbitrary two-player game, [`SymmetricGame`] the
//! four payoffs `a00, a01, a10, a11` of a symmetric one (the column player's
//! matrix is the transpose). Everything here is a pure function of its inputs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default absolute tolerance for equality tests on payoffs.
pub const DEFAULT_TOL: f64 = 1e-9;

fn check_finite(entry: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinitePayoff { entry, value })
    }
}

/// A 2×2 bimatrix game. `a[k][l]` is the row player's payoff when the row
/// player picks strategy `k` and the column player picks `l`; `b` likewise for
/// the column player.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BimatrixGame {
    a: [[f64; 2]; 2],
    b: [[f64; 2]; 2],
}

impl BimatrixGame {
    pub fn new(a: [[f64; 2]; 2], b: [[f64; 2]; 2]) -> Result<Self> {
        const A: [[&str; 2]; 2] = [["a00", "a01"], ["a10", "a11"]];
        const B: [[&str; 2]; 2] = [["b00", "b01"], ["b10", "b11"]];
        for k in 0..2 {
            for l in 0..2 {
                check_finite(A[k][l], a[k][l])?;
                check_finite(B[k][l], b[k][l])?;
            }
        }
        Ok(Self { a, b })
    }

    /// Row player's payoff matrix.
    pub fn a(&self) -> &[[f64; 2]; 2] {
        &self.a
    }

    /// Column player's payoff matrix.
    pub fn b(&self) -> &[[f64; 2]; 2] {
        &self.b
    }

    /// Payoff pair for the pure profile `(k, l)`.
    pub fn outcome(&self, k: usize, l: usize) -> (f64, f64) {
        (self.a[k][l], self.b[k][l])
    }

    /// Entries where `b` departs from the transpose of `a` by more than `tol`.
    pub fn symmetry_violations(&self, tol: f64) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for k in 0..2 {
            for l in 0..2 {
                if (self.b[k][l] - self.a[l][k]).abs() > tol {
                    out.push((k, l));
                }
            }
        }
        out
    }
}

/// Symmetric 2×2 game given by the row player's payoffs; the column player
/// receives the transpose.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SymmetricGame {
    pub(crate) a00: f64,
    pub(crate) a01: f64,
    pub(crate) a10: f64,
    pub(crate) a11: f64,
}

impl SymmetricGame {
    pub fn new(a00: f64, a01: f64, a10: f64, a11: f64) -> Result<Self> {
        Ok(Self {
            a00: check_finite("a00", a00)?,
            a01: check_finite("a01", a01)?,
            a10: check_finite("a10", a10)?,
            a11: check_finite("a11", a11)?,
        })
    }

    pub fn from_array(p: [f64; 4]) -> Result<Self> {
        Self::new(p[0], p[1], p[2], p[3])
    }

    /// Extracts the symmetric game from a bimatrix game whose column payoffs
    /// are the transpose of the row payoffs within `tol`.
    pub fn from_bimatrix(g: &BimatrixGame, tol: f64) -> Result<Self> {
        let bad = g.symmetry_violations(tol);
        if !bad.is_empty() {
            let detail = bad
                .iter()
                .map(|&(k, l)| format!("b{k}{l}={} but a{l}{k}={}", g.b[k][l], g.a[l][k]))
                .collect::<Vec<_>>()
                .join(", ");
            return Err(Error::Asymmetric(detail));
        }
        let a = g.a();
        Self::new(a[0][0], a[0][1], a[1][0], a[1][1])
    }

    pub fn a00(&self) -> f64 {
        self.a00
    }
    pub fn a01(&self) -> f64 {
        self.a01
    }
    pub fn a10(&self) -> f64 {
        self.a10
    }
    pub fn a11(&self) -> f64 {
        self.a11
    }

    pub fn to_array(&self) -> [f64; 4] {
        [self.a00, self.a01, self.a10, self.a11]
    }

    pub fn to_bimatrix(&self) -> BimatrixGame {
        BimatrixGame {
            a: [[self.a00, self.a01], [self.a10, self.a11]],
            b: [[self.a00, self.a10], [self.a01, self.a11]],
        }
    }

    /// The same game with both players' strategies renumbered.
    pub fn relabeled(&self) -> Self {
        Self {
            a00: self.a11,
            a01: self.a10,
            a10: self.a01,
            a11: self.a00,
        }
    }

    /// `a01 + a10 - 2 max(a00, a11)`; positive exactly when playing the
    /// off-diagonal outcomes beats the better diagonal one on average.
    pub fn off_diagonal_surplus(&self) -> f64 {
        self.a01 + self.a10 - 2.0 * self.a00.max(self.a11)
    }
}

/// Mixed strategy `(p, 1 - p)` of a 2×2 game.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MixedStrategy(f64);

impl MixedStrategy {
    pub fn new(p: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&p) {
            Ok(Self(p))
        } else {
            Err(Error::InvalidProbability(p))
        }
    }

    pub const FIRST: MixedStrategy = MixedStrategy(1.0);
    pub const SECOND: MixedStrategy = MixedStrategy(0.0);

    /// Probability of the first pure strategy.
    pub fn p(&self) -> f64 {
        self.0
    }

    pub fn weights(&self) -> [f64; 2] {
        [self.0, 1.0 - self.0]
    }
}

/// Positive affine map `x -> scale * x + shift`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AffineTransform {
    scale: f64,
    shift: f64,
}

impl AffineTransform {
    pub const IDENTITY: AffineTransform = AffineTransform {
        scale: 1.0,
        shift: 0.0,
    };

    pub fn new(scale: f64, shift: f64) -> Result<Self> {
        if !(scale > 0.0 && scale.is_finite()) {
            return Err(Error::NonPositiveScale(scale));
        }
        if !shift.is_finite() {
            return Err(Error::InvalidArgument(format!("non-finite shift {shift}")));
        }
        Ok(Self { scale, shift })
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn shift(&self) -> f64 {
        self.shift
    }

    pub fn apply(&self, x: f64) -> f64 {
        self.scale * x + self.shift
    }

    pub fn invert(&self, y: f64) -> f64 {
        (y - self.shift) / self.scale
    }

    pub fn inverse(&self) -> Self {
        Self {
            scale: 1.0 / self.scale,
            shift: -self.shift / self.scale,
        }
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn after(&self, inner: &AffineTransform) -> Self {
        Self {
            scale: self.scale * inner.scale,
            shift: self.scale * inner.shift + self.shift,
        }
    }
}

/// Canonical payoff shape reached by [`normalize`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "form")]
pub enum NormalForm {
    /// Diagonal payoffs mapped to 1 and 0: `[(1,1), (a,d-a); (d-a,a), (0,0)]`.
    DiagDistinct { a: f64, d: f64 },
    /// Equal diagonal payoffs shifted to 0: `[(0,0), (b,e-b); (e-b,b), (0,0)]`.
    DiagEqual { b: f64, e: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormalizedGame {
    pub form: NormalForm,
    /// Strategies were renumbered because `a11 > a00`.
    pub swapped: bool,
    /// Map from original payoffs to normalized payoffs.
    pub transform: AffineTransform,
}

impl NormalizedGame {
    /// The normalized game as a symmetric game.
    pub fn as_game(&self) -> SymmetricGame {
        match self.form {
            NormalForm::DiagDistinct { a, d } => SymmetricGame {
                a00: 1.0,
                a01: a,
                a10: d - a,
                a11: 0.0,
            },
            NormalForm::DiagEqual { b, e } => SymmetricGame {
                a00: 0.0,
                a01: b,
                a10: e - b,
                a11: 0.0,
            },
        }
    }
}

/// Expected payoffs `(u1, u2)` of the mixed profile `(s1, s2)`.
pub fn expected_payoff(g: &BimatrixGame, s1: MixedStrategy, s2: MixedStrategy) -> (f64, f64) {
    let (p, q) = (s1.p(), s2.p());
    let bilinear = |m: &[[f64; 2]; 2]| {
        p * q * m[0][0]
            + p * (1.0 - q) * m[0][1]
            + (1.0 - p) * q * m[1][0]
            + (1.0 - p) * (1.0 - q) * m[1][1]
    };
    (bilinear(&g.a), bilinear(&g.b))
}

/// True when `b` equals the transpose of `a` entrywise within `tol`.
pub fn is_symmetric(g: &BimatrixGame, tol: f64) -> bool {
    g.symmetry_violations(tol).is_empty()
}

/// Maps the row player's payoffs through `t1` and the column player's through `t2`.
pub fn apply_affine(g: &BimatrixGame, t1: &AffineTransform, t2: &AffineTransform) -> BimatrixGame {
    let map = |m: &[[f64; 2]; 2], t: &AffineTransform| {
        [
            [t.apply(m[0][0]), t.apply(m[0][1])],
            [t.apply(m[1][0]), t.apply(m[1][1])],
        ]
    };
    BimatrixGame {
        a: map(&g.a, t1),
        b: map(&g.b, t2),
    }
}

/// [`normalize_with_tol`] at [`DEFAULT_TOL`].
pub fn normalize(g: &SymmetricGame) -> (NormalizedGame, AffineTransform) {
    normalize_with_tol(g, DEFAULT_TOL)
}

/// Brings a symmetric game to one of the two canonical forms by a positive
/// affine transformation, renumbering strategies first when `a11 > a00`.
/// Diagonal payoffs closer than `tol` count as equal.
pub fn normalize_with_tol(g: &SymmetricGame, tol: f64) -> (NormalizedGame, AffineTransform) {
    let equal = (g.a00 - g.a11).abs() <= tol;
    let swapped = !equal && g.a00 < g.a11;
    let h = if swapped { g.relabeled() } else { *g };

    let (form, transform) = if equal {
        let t = AffineTransform {
            scale: 1.0,
            shift: -h.a00,
        };
        let form = NormalForm::DiagEqual {
            b: h.a01 - h.a00,
            e: h.a01 + h.a10 - 2.0 * h.a00,
        };
        (form, t)
    } else {
        let span = h.a00 - h.a11;
        let t = AffineTransform {
            scale: 1.0 / span,
            shift: -h.a11 / span,
        };
        let form = NormalForm::DiagDistinct {
            a: (h.a01 - h.a11) / span,
            d: (h.a01 + h.a10 - 2.0 * h.a11) / span,
        };
        (form, t)
    };
    (
        NormalizedGame {
            form,
            swapped,
            transform,
        },
        transform,
    )
}

/// Maps a payoff of the normalized game back to the original payoff scale.
pub fn denormalize_payoff(n: &NormalizedGame, t: &AffineTransform, v: f64) -> f64 {
    debug_assert_eq!(&n.transform, t, "transform does not belong to this game");
    t.invert(v)
}

/// Result of the 2×2 Nash baseline.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum NashSet {
    /// Isolated equilibrium profiles (row strategy, column strategy).
    Profiles {
        profiles: Vec<(MixedStrategy, MixedStrategy)>,
    },
    /// A player is indifferent between its strategies against every
    /// opponent strategy, so equilibria form a continuum.
    Continuum {
        row_indifferent: bool,
        column_indifferent: bool,
    },
}

impl NashSet {
    pub fn profiles(&self) -> Option<&[(MixedStrategy, MixedStrategy)]> {
        match self {
            NashSet::Profiles { profiles } => Some(profiles),
            NashSet::Continuum { .. } => None,
        }
    }
}

/// Nash equilibria of a 2×2 game: pure equilibria by best-response
/// enumeration plus the interior equilibrium from the indifference
/// conditions when it lies strictly inside the unit square.
///
/// Games with a tie in only one row or column comparison can have equilibrium
/// segments along an edge; only their vertex profiles are listed.
pub fn nash_equilibria(g: &BimatrixGame, tol: f64) -> NashSet {
    let (a, b) = (&g.a, &g.b);
    // row advantage of strategy 0 over 1 against column l
    let dr = [a[0][0] - a[1][0], a[0][1] - a[1][1]];
    // column advantage of strategy 0 over 1 against row k
    let dc = [b[0][0] - b[0][1], b[1][0] - b[1][1]];

    let row_flat = dr.iter().all(|d| d.abs() <= tol);
    let col_flat = dc.iter().all(|d| d.abs() <= tol);
    if row_flat || col_flat {
        return NashSet::Continuum {
            row_indifferent: row_flat,
            column_indifferent: col_flat,
        };
    }

    let best = |adv: f64, choice: usize| if choice == 0 { adv >= -tol } else { adv <= tol };
    let pure = |k: usize| {
        if k == 0 {
            MixedStrategy::FIRST
        } else {
            MixedStrategy::SECOND
        }
    };

    let mut profiles: Vec<(MixedStrategy, MixedStrategy)> = Vec::new();
    for k in 0..2 {
        for l in 0..2 {
            if best(dr[l], k) && best(dc[k], l) {
                profiles.push((pure(k), pure(l)));
            }
        }
    }

    // q makes the row player indifferent, p the column player
    let row_den = dr[1] - dr[0];
    let col_den = dc[1] - dc[0];
    if row_den.abs() > tol && col_den.abs() > tol {
        let q = dr[1] / row_den;
        let p = dc[1] / col_den;
        let inside = |x: f64| x > tol && x < 1.0 - tol;
        if inside(p) && inside(q) {
            profiles.push((MixedStrategy(p), MixedStrategy(q)));
        }
    }

    let mut unique: Vec<(MixedStrategy, MixedStrategy)> = Vec::with_capacity(profiles.len());
    for prof in profiles {
        let dup = unique
            .iter()
            .any(|u| (u.0.p() - prof.0.p()).abs() <= tol && (u.1.p() - prof.1.p()).abs() <= tol);
        if !dup {
            unique.push(prof);
        }
    }
    NashSet::Profiles { profiles: unique }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Example 1 with the bottom-right row payoff at -12; the only value that
    // the stated transform maps onto the zero-sum game below.
    fn game_12() -> BimatrixGame {
        BimatrixGame::new([[-14.0, -2.0], [-4.0, -12.0]], [[15.0, -3.0], [0.0, 12.0]]).unwrap()
    }

    fn game_13() -> BimatrixGame {
        BimatrixGame::new([[-2.0, 4.0], [3.0, -1.0]], [[2.0, -4.0], [-3.0, 1.0]]).unwrap()
    }

    fn pd() -> SymmetricGame {
        SymmetricGame::new(3.0, 0.0, 5.0, 1.0).unwrap()
    }

    fn bos() -> SymmetricGame {
        SymmetricGame::new(1.0, 5.0, 3.0, 1.0).unwrap()
    }

    fn s(p: f64) -> MixedStrategy {
        MixedStrategy::new(p).unwrap()
    }

    #[test]
    fn rejects_non_finite_entries() {
        assert!(SymmetricGame::new(f64::NAN, 0.0, 0.0, 0.0).is_err());
        assert!(BimatrixGame::new([[0.0, f64::INFINITY], [0.0, 0.0]], [[0.0; 2]; 2]).is_err());
    }

    #[test]
    fn rejects_bad_probability_and_scale() {
        assert!(MixedStrategy::new(1.5).is_err());
        assert!(MixedStrategy::new(f64::NAN).is_err());
        assert!(AffineTransform::new(0.0, 1.0).is_err());
        assert!(AffineTransform::new(-2.0, 1.0).is_err());
    }

    #[test]
    fn expected_payoff_examples() {
        assert_eq!(expected_payoff(&game_12(), s(1.0), s(1.0)), (-14.0, 15.0));
        let g = game_13();
        assert_eq!(expected_payoff(&g, s(1.0), s(0.0)), (4.0, -4.0));

        let (p, q) = (0.4, 0.5);
        let w = [p * q, p * (1.0 - q), (1.0 - p) * q, (1.0 - p) * (1.0 - q)];
        let mut u1 = 0.0;
        let mut u2 = 0.0;
        for (i, (k, l)) in [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
            let (x, y) = g.outcome(k, l);
            u1 += w[i] * x;
            u2 += w[i] * y;
        }
        let got = expected_payoff(&g, s(p), s(q));
        assert!((got.0 - u1).abs() < 1e-12 && (got.1 - u2).abs() < 1e-12);
        // zero-sum at the equilibrium
        assert!((got.0 + got.1).abs() < 1e-12);
    }

    #[test]
    fn symmetry_checks() {
        assert!(is_symmetric(&pd().to_bimatrix(), 0.0));
        assert!(!is_symmetric(&game_12(), DEFAULT_TOL));
        let g = BimatrixGame::new([[1.0, 5.0], [3.0, 1.0]], [[1.0, 3.0], [5.0, 1.0]]).unwrap();
        assert!(is_symmetric(&g, 0.0));
        let err = SymmetricGame::from_bimatrix(&game_12(), DEFAULT_TOL).unwrap_err();
        assert!(matches!(err, Error::Asymmetric(ref m) if m.contains("b01")));
    }

    #[test]
    fn affine_maps_game_12_to_game_13() {
        let t1 = AffineTransform::new(0.5, 5.0).unwrap();
        let t2 = AffineTransform::new(1.0 / 3.0, -3.0).unwrap();
        let mapped = apply_affine(&game_12(), &t1, &t2);
        let target = game_13();
        for k in 0..2 {
            for l in 0..2 {
                assert!((mapped.a()[k][l] - target.a()[k][l]).abs() < 1e-12);
                assert!((mapped.b()[k][l] - target.b()[k][l]).abs() < 1e-12);
            }
        }
        let id = AffineTransform::IDENTITY;
        assert_eq!(apply_affine(&target, &id, &id), target);

        let back = apply_affine(&mapped, &t1.inverse(), &t2.inverse());
        for k in 0..2 {
            for l in 0..2 {
                assert!((back.a()[k][l] - game_12().a()[k][l]).abs() < 1e-12);
                assert!((back.b()[k][l] - game_12().b()[k][l]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn normalize_prisoners_dilemma() {
        let (n, t) = normalize(&pd());
        assert!(!n.swapped);
        match n.form {
            NormalForm::DiagDistinct { a, d } => {
                assert!((a + 0.5).abs() < 1e-15);
                assert!((d - 1.5).abs() < 1e-15);
            }
            other => panic!("unexpected form {other:?}"),
        }
        assert!((denormalize_payoff(&n, &t, 1.0) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn normalize_equal_diagonal() {
        let (n, t) = normalize(&bos());
        assert_eq!(n.form, NormalForm::DiagEqual { b: 4.0, e: 6.0 });
        assert_eq!(denormalize_payoff(&n, &t, 3.0), 4.0);
        assert_eq!(denormalize_payoff(&n, &t, 0.0), 1.0);

        let (n, t) = normalize(&SymmetricGame::new(0.0, 2.0, -7.0, 0.0).unwrap());
        assert_eq!(n.form, NormalForm::DiagEqual { b: 2.0, e: -5.0 });
        assert_eq!(t, AffineTransform::IDENTITY);
    }

    #[test]
    fn normalize_swaps_when_second_diagonal_is_better() {
        let g = SymmetricGame::new(1.0, 0.0, 5.0, 3.0).unwrap();
        let (n, t) = normalize(&g);
        assert!(n.swapped);
        let (m, _) = normalize(&g.relabeled());
        assert_eq!(n.form, m.form);
        // the transform reproduces the normalized payoffs from the relabeled game
        let h = g.relabeled();
        let ng = n.as_game();
        for (x, y) in h.to_array().iter().zip(ng.to_array()) {
            assert!((t.apply(*x) - y).abs() < 1e-12);
        }
    }

    #[test]
    fn normalize_treats_near_equal_diagonal_as_equal() {
        let g = SymmetricGame::new(1.0, 5.0, 3.0, 1.0 + 1e-12).unwrap();
        let (n, _) = normalize(&g);
        assert!(matches!(n.form, NormalForm::DiagEqual { .. }));
        let (n, _) = normalize_with_tol(&g, 0.0);
        assert!(matches!(n.form, NormalForm::DiagDistinct { .. }));
    }

    #[test]
    fn nash_example_1() {
        let expect = (0.4, 0.5);
        for g in [game_12(), game_13()] {
            let set = nash_equilibria(&g, DEFAULT_TOL);
            let profiles = set.profiles().unwrap();
            assert_eq!(profiles.len(), 1);
            assert!((profiles[0].0.p() - expect.0).abs() < 1e-12);
            assert!((profiles[0].1.p() - expect.1).abs() < 1e-12);
        }
    }

    #[test]
    fn printed_game_12_has_a_dominant_second_row() {
        let g =
            BimatrixGame::new([[-14.0, -2.0], [-4.0, 12.0]], [[15.0, -3.0], [0.0, 12.0]]).unwrap();
        let set = nash_equilibria(&g, DEFAULT_TOL);
        assert_eq!(
            set.profiles().unwrap(),
            &[(MixedStrategy::SECOND, MixedStrategy::SECOND)]
        );
    }

    #[test]
    fn nash_dominance_and_coordination() {
        // first strategy strictly dominant for both
        let g = SymmetricGame::new(4.0, 3.0, 1.0, 0.0)
            .unwrap()
            .to_bimatrix();
        assert_eq!(
            nash_equilibria(&g, DEFAULT_TOL).profiles().unwrap(),
            &[(MixedStrategy::FIRST, MixedStrategy::FIRST)]
        );
        // Prisoner's Dilemma: mutual defection only
        assert_eq!(
            nash_equilibria(&pd().to_bimatrix(), DEFAULT_TOL)
                .profiles()
                .unwrap(),
            &[(MixedStrategy::SECOND, MixedStrategy::SECOND)]
        );
        // coordination game: two pure and one mixed
        let g = SymmetricGame::new(2.0, 0.0, 0.0, 1.0)
            .unwrap()
            .to_bimatrix();
        let set = nash_equilibria(&g, DEFAULT_TOL);
        let prof = set.profiles().unwrap();
        assert_eq!(prof.len(), 3);
        assert!((prof[2].0.p() - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn nash_reports_continuum() {
        let g = SymmetricGame::new(1.0, 1.0, 1.0, 1.0)
            .unwrap()
            .to_bimatrix();
        assert_eq!(
            nash_equilibria(&g, DEFAULT_TOL),
            NashSet::Continuum {
                row_indifferent: true,
                column_indifferent: true
            }
        );
        let g = BimatrixGame::new([[2.0, 0.0], [2.0, 0.0]], [[1.0, 0.0], [0.0, 1.0]]).unwrap();
        assert_eq!(
            nash_equilibria(&g, DEFAULT_TOL),
            NashSet::Continuum {
                row_indifferent: true,
                column_indifferent: false
            }
        );
    }
}
