//! Derivative-free optimizers used by the numerical cross-checks.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Maximizes a unimodal `f` on `[lo, hi]` by golden-section search until the
/// bracket is narrower than `tol`. Returns `(argmax, max)`.
pub fn golden_section_max<F>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    let mut c = hi - INV_PHI * (hi - lo);
    let mut d = lo + INV_PHI * (hi - lo);
    let mut fc = f(c);
    let mut fd = f(d);
    // the bracket shrinks by 1/phi per step; cap far above what tol needs
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        if fc >= fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - INV_PHI * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + INV_PHI * (hi - lo);
            fd = f(d);
        }
    }
    // report the best evaluated point including the bracket ends
    [(lo, f(lo)), (c, fc), (d, fd), (hi, f(hi))]
        .into_iter()
        .fold((f64::NAN, f64::NEG_INFINITY), |best, cand| {
            if cand.1 > best.1 {
                cand
            } else {
                best
            }
        })
}

/// Stopping rules for [`nelder_mead_min`].
#[derive(Debug, Clone, Copy)]
pub struct SimplexOptions {
    /// Stop once every vertex lies within this distance of the best one.
    pub diameter_tol: f64,
    pub max_iter: usize,
}

impl Default for SimplexOptions {
    fn default() -> Self {
        Self {
            diameter_tol: 1e-9,
            max_iter: 10_000,
        }
    }
}

/// Nelder–Mead simplex minimization starting from `x0` with an axis-aligned
/// initial simplex of edge `step`. Returns `(argmin, min)`.
pub fn nelder_mead_min<F, const N: usize>(
    f: F,
    x0: [f64; N],
    step: f64,
    opts: SimplexOptions,
) -> ([f64; N], f64)
where
    F: Fn(&[f64; N]) -> f64,
{
    const ALPHA: f64 = 1.0;
    const GAMMA: f64 = 2.0;
    const RHO: f64 = 0.5;
    const SIGMA: f64 = 0.5;

    let mut simplex: Vec<([f64; N], f64)> = Vec::with_capacity(N + 1);
    simplex.push((x0, f(&x0)));
    for i in 0..N {
        let mut x = x0;
        x[i] += step;
        simplex.push((x, f(&x)));
    }

    let lerp = |from: &[f64; N], to: &[f64; N], t: f64| {
        let mut out = [0.0; N];
        for i in 0..N {
            out[i] = from[i] + t * (to[i] - from[i]);
        }
        out
    };

    for _ in 0..opts.max_iter {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));

        let best = simplex[0].0;
        let diameter = simplex[1..]
            .iter()
            .map(|(x, _)| {
                x.iter()
                    .zip(best.iter())
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max);
        if diameter <= opts.diameter_tol {
            break;
        }

        let mut centroid = [0.0; N];
        for (x, _) in &simplex[..N] {
            for i in 0..N {
                centroid[i] += x[i] / N as f64;
            }
        }
        let (worst, f_worst) = simplex[N];
        let f_best = simplex[0].1;
        let f_second_worst = simplex[N - 1].1;

        let reflected = lerp(&centroid, &worst, -ALPHA);
        let f_reflected = f(&reflected);

        if f_reflected < f_best {
            let expanded = lerp(&centroid, &worst, -GAMMA);
            let f_expanded = f(&expanded);
            simplex[N] = if f_expanded < f_reflected {
                (expanded, f_expanded)
            } else {
                (reflected, f_reflected)
            };
            continue;
        }
        if f_reflected < f_second_worst {
            simplex[N] = (reflected, f_reflected);
            continue;
        }

        let (contracted, f_contracted) = if f_reflected < f_worst {
            let c = lerp(&centroid, &reflected, RHO);
            let fc = f(&c);
            (c, fc)
        } else {
            let c = lerp(&centroid, &worst, RHO);
            let fc = f(&c);
            (c, fc)
        };
        if f_contracted < f_worst.min(f_reflected) {
            simplex[N] = (contracted, f_contracted);
            continue;
        }

        // shrink toward the best vertex
        for vertex in simplex.iter_mut().skip(1) {
            let x = lerp(&best, &vertex.0, SIGMA);
            *vertex = (x, f(&x));
        }
    }

    simplex
        .into_iter()
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("simplex has N + 1 vertices")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_section_finds_parabola_peak() {
        let (x, fx) = golden_section_max(|x| -(x - 0.3) * (x - 0.3) + 2.0, 0.0, 1.0, 1e-10);
        // argmax resolution of a flat peak is about sqrt(machine epsilon)
        assert!((x - 0.3).abs() < 1e-7);
        assert!((fx - 2.0).abs() < 1e-15);
    }

    #[test]
    fn golden_section_handles_monotone_functions() {
        let (x, fx) = golden_section_max(|x| 3.0 * x, 0.0, 1.0, 1e-10);
        assert_eq!(x, 1.0);
        assert_eq!(fx, 3.0);
        let (x, _) = golden_section_max(|x| -x, 0.0, 1.0, 1e-10);
        assert_eq!(x, 0.0);
    }

    #[test]
    fn nelder_mead_rosenbrock() {
        let rosen = |x: &[f64; 2]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2);
        let (x, fx) = nelder_mead_min(rosen, [-1.2, 1.0], 0.5, SimplexOptions::default());
        assert!(fx < 1e-12, "fx = {fx}");
        assert!((x[0] - 1.0).abs() < 1e-5 && (x[1] - 1.0).abs() < 1e-5);
    }

    #[test]
    fn nelder_mead_three_dimensional_bowl() {
        let bowl = |x: &[f64; 3]| {
            (x[0] - 1.0).powi(2) + 2.0 * (x[1] + 0.5).powi(2) + 3.0 * (x[2] - 2.0).powi(2)
        };
        let (x, fx) = nelder_mead_min(bowl, [0.0; 3], 0.3, SimplexOptions::default());
        assert!(fx < 1e-14);
        assert!((x[2] - 2.0).abs() < 1e-7);
    }
}
