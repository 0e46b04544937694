//! Rediscovers the closed-form quantum payoff numerically by grid search and
//! simplex refinement over SU(2).
//!
//! cargo run --release --example optimizer_check

use kantian::quantum::{optimize_diagonal, quantum_ske};
use kantian::sampling::{GameSampler, UniformPayoffs};

fn main() -> kantian::Result<()> {
    let sampler = GameSampler::new(1, UniformPayoffs::new(-10.0, 10.0)?);
    let mut worst: f64 = 0.0;
    for i in 0..10 {
        let g = sampler.game(i);
        let closed = quantum_ske(&g);
        let (u, found) = optimize_diagonal(&g, 16, 1e-9);
        worst = worst.max((found - closed.payoff).abs());
        println!(
            "{:>8.3?}  closed {:>8.4} ({:?})  numeric {:>8.4} at {:.3?}",
            g.to_array(),
            closed.payoff,
            closed.branch,
            found,
            u.to_array()
        );
    }
    println!("largest deviation {worst:e}");
    Ok(())
}
