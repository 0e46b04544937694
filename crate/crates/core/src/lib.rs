//! Simple Kantian equilibria of symmetric 2×2 games, played classically and
//! in the Eisert–Wilkens–Lewenstein quantum scheme.
//!
//! - [`game`]: bimatrix and symmetric games, expected payoffs, positive affine
//!   transformations, normalization and a 2×2 Nash baseline
//! - [`kantian`]: closed-form classical equilibrium and a brute-force oracle
//! - [`quantum`]: two-qubit simulation, closed-form quantum equilibrium payoff
//!   and a numerical optimizer over SU(2)
//! - [`report`], [`analysis`], [`sampling`]: comparison reports, Monte Carlo
//!   sampling of game space and oracle verification runs
//!
//! ```
//! use kantian::{game::SymmetricGame, kantian::solve_ske, quantum::quantum_ske};
//!
//! let g = SymmetricGame::new(1.0, 5.0, 3.0, 1.0).unwrap();
//! assert_eq!(solve_ske(&g).payoff, 2.5);
//! assert_eq!(quantum_ske(&g).payoff, 4.0);
//! ```

pub mod analysis;
pub mod error;
pub mod game;
pub mod kantian;
pub mod optim;
pub mod quantum;
pub mod report;
pub mod sampling;

pub use error::{Error, Result};
pub use game::{BimatrixGame, MixedStrategy, SymmetricGame};
pub use kantian::{solve_ske, SkeSolution, SkeStrategySet};
pub use quantum::{quantum_ske, QuantumSkeResult, UnitaryParams};
pub use report::{ComparisonReport, Format, GameSpec};
