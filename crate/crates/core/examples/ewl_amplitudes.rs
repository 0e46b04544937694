//! Two-qubit evolution in the quantum scheme: direct tensor products against
//! the trigonometric amplitude formulas.
//!
//! cargo run --example ewl_amplitudes

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use kantian::quantum::{amplitudes_closed_form, basis_state, evolve, UnitaryParams};

fn main() -> kantian::Result<()> {
    for k in 0..2 {
        for l in 0..2 {
            println!("|Ψ{k}{l}⟩ = {:?}", basis_state(k, l).amplitudes);
        }
    }

    let profiles = [
        (UnitaryParams::IDENTITY, UnitaryParams::IDENTITY),
        (
            UnitaryParams::new(0.0, FRAC_PI_2, 0.0)?,
            UnitaryParams::new(0.0, FRAC_PI_2, 0.0)?,
        ),
        (
            UnitaryParams::new(FRAC_PI_2, FRAC_PI_4, 0.0)?,
            UnitaryParams::new(FRAC_PI_2, FRAC_PI_4, 0.0)?,
        ),
        (
            UnitaryParams::new(1.2, 0.3, 4.0)?,
            UnitaryParams::new(2.5, 5.1, 0.7)?,
        ),
    ];
    for (u1, u2) in profiles {
        let direct = evolve(&u1, &u2);
        let closed = amplitudes_closed_form(&u1, &u2);
        println!("U1 = {:?}, U2 = {:?}", u1.to_array(), u2.to_array());
        println!("  direct      {:?}", direct.probabilities());
        println!("  closed form {:?}", closed.probabilities());
    }
    Ok(())
}
