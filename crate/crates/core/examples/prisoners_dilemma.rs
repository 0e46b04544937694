//! In the Prisoner's Dilemma the Kantian equilibrium already reaches mutual
//! cooperation, so quantum strategies cannot improve on it.
//!
//! cargo run --example prisoners_dilemma

use kantian::game::{nash_equilibria, SymmetricGame, DEFAULT_TOL};
use kantian::kantian::solve_ske;
use kantian::quantum::{evolve, quantum_ske};

fn main() -> kantian::Result<()> {
    let pd = SymmetricGame::new(3.0, 0.0, 5.0, 1.0)?;

    let nash = nash_equilibria(&pd.to_bimatrix(), DEFAULT_TOL);
    println!("Nash equilibria         {nash:?}");

    let classical = solve_ske(&pd);
    println!(
        "Kantian equilibrium     {:?} ({:?}), payoff {}",
        classical.strategies, classical.branch, classical.payoff
    );

    let quantum = quantum_ske(&pd);
    let probs = evolve(&quantum.witness, &quantum.witness).probabilities();
    println!(
        "quantum payoff          {} via {:?}",
        quantum.payoff, quantum.witness
    );
    println!("outcome probabilities   {probs:?}");
    Ok(())
}
