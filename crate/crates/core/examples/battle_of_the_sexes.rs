//! Classical and quantum Kantian equilibria of a game where both players
//! prefer to do different things.
//!
//! cargo run --example battle_of_the_sexes

use kantian::game::SymmetricGame;
use kantian::kantian::{diagonal_payoff, solve_ske};
use kantian::quantum::{quantum_diagonal_payoff, quantum_ske};

fn main() -> kantian::Result<()> {
    let g = SymmetricGame::new(1.0, 5.0, 3.0, 1.0)?;

    let classical = solve_ske(&g);
    println!("classical strategy set  {:?}", classical.strategies);
    println!("classical payoff        {}", classical.payoff);
    println!("  check: u(p,p) at p=1/2 = {}", diagonal_payoff(&g, 0.5));

    let quantum = quantum_ske(&g);
    let w = quantum.witness;
    println!("quantum payoff          {}", quantum.payoff);
    println!(
        "  witness U(θ={:.4}, α={:.4}, β={:.4}) gives {}",
        w.theta(),
        w.alpha(),
        w.beta(),
        quantum_diagonal_payoff(&g, &w)
    );
    println!(
        "gain from quantum play  {}",
        quantum.payoff - classical.payoff
    );
    Ok(())
}
