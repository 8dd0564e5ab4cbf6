//! Global maximization of a periodic function on `[0, 2π)`.

use std::f64::consts::TAU;

pub const DEFAULT_GRID: usize = 4096;
const BRACKET_WIDTH: f64 = 1e-12;
/// Grid-local maxima refined by golden-section search, best first.
const REFINED_CANDIDATES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleMax {
    /// Maximizer in `[0, 2π)`.
    pub arg: f64,
    pub value: f64,
}

fn golden_max(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > BRACKET_WIDTH {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
        // guards against a stalled bracket when the width reaches rounding level
        if x1 >= x2 {
            break;
        }
    }
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Grid scan with `grid_n` points followed by golden-section refinement of the best
/// grid-local maxima on their neighbouring cells.
pub fn max_on_circle(f: impl Fn(f64) -> f64, grid_n: usize) -> CircleMax {
    let n = grid_n.max(64);
    let h = TAU / n as f64;
    let values: Vec<f64> = (0..n).map(|k| f(k as f64 * h)).collect();

    let mut candidates: Vec<usize> = (0..n)
        .filter(|&k| {
            let prev = values[(k + n - 1) % n];
            let next = values[(k + 1) % n];
            values[k] >= prev && values[k] >= next
        })
        .collect();
    candidates.sort_by(|&i, &j| values[j].total_cmp(&values[i]));
    candidates.truncate(REFINED_CANDIDATES);

    let mut best = (0usize..n)
        .max_by(|&i, &j| values[i].total_cmp(&values[j]))
        .map(|k| CircleMax { arg: k as f64 * h, value: values[k] })
        .unwrap_or(CircleMax { arg: 0.0, value: f64::NEG_INFINITY });

    for k in candidates {
        let center = k as f64 * h;
        let (arg, value) = golden_max(&f, center - h, center + h);
        if value > best.value {
            best = CircleMax { arg: arg.rem_euclid(TAU), value };
        }
    }
    best
}
