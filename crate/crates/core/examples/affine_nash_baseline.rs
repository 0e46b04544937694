//! Positive affine transformations of payoffs change neither Nash equilibria
//! nor Kantian equilibria.
//!
//! cargo run --example affine_nash_baseline

use kantian::game::{
    apply_affine, nash_equilibria, normalize, AffineTransform, BimatrixGame, SymmetricGame,
};
use kantian::kantian::solve_ske;

fn main() -> kantian::Result<()> {
    let g = BimatrixGame::new([[-14.0, -2.0], [-4.0, -12.0]], [[15.0, -3.0], [0.0, 12.0]])?;
    let t1 = AffineTransform::new(0.5, 5.0)?;
    let t2 = AffineTransform::new(1.0 / 3.0, -3.0)?;
    let zero_sum = apply_affine(&g, &t1, &t2);
    println!(
        "transformed game        a = {:?}, b = {:?}",
        zero_sum.a(),
        zero_sum.b()
    );
    println!("equilibria before       {:?}", nash_equilibria(&g, 1e-9));
    println!(
        "equilibria after        {:?}",
        nash_equilibria(&zero_sum, 1e-9)
    );

    // symmetric games reduce to two canonical shapes
    for payoffs in [
        [3.0, 0.0, 5.0, 1.0],
        [1.0, 5.0, 3.0, 1.0],
        [1.0, 4.0, 0.0, 6.0],
    ] {
        let s = SymmetricGame::from_array(payoffs)?;
        let (n, t) = normalize(&s);
        println!(
            "{payoffs:?} -> {:?} (relabeled: {}, scale {}, shift {}), SKE {:?}",
            n.form,
            n.swapped,
            t.scale(),
            t.shift(),
            solve_ske(&s).strategies
        );
    }
    Ok(())
}
