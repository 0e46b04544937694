//! Monte Carlo estimate of how many symmetric games reward quantum play.
//!
//! cargo run --release --example advantage_sampling

use kantian::analysis::sample;
use kantian::sampling::UniformPayoffs;

fn main() -> kantian::Result<()> {
    for (low, high) in [(0.0, 1.0), (-10.0, 10.0)] {
        let report = sample(200_000, 7, UniformPayoffs::new(low, high)?)?;
        print!("{}", report.to_human());
        println!();
    }
    // for i.i.d. payoffs the fraction does not depend on the bounds: 7/24
    println!("exact value for uniform payoffs: {}", 7.0 / 24.0);
    Ok(())
}
