//! Discrete Laplacians shared by the series engine and the reference
//! integrator.

use num_complex::Complex64;

use crate::model::grid::{Boundary, Grid};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StencilOrder {
    Two,
    Four,
}

/// Second spatial derivative of the sampled values.
///
/// Periodic grids wrap; fixed-zero grids use shifted stencils at the edges
/// (second-order there, so the outermost points of a fourth-order run are
/// less accurate — interior comparisons should skirt them).
pub fn laplacian(values: &[Complex64], grid: &Grid, order: StencilOrder) -> Vec<Complex64> {
    let n = values.len();
    let h2 = grid.spacing() * grid.spacing();
    let at = |i: isize| -> Complex64 {
        match grid.boundary() {
            Boundary::Periodic => values[i.rem_euclid(n as isize) as usize],
            Boundary::FixedZero => values[i as usize],
        }
    };
    let centered2 = |i: isize| (at(i - 1) - 2.0 * at(i) + at(i + 1)) / h2;
    let centered4 = |i: isize| {
        (-at(i - 2) + 16.0 * at(i - 1) - 30.0 * at(i) + 16.0 * at(i + 1) - at(i + 2)) / (12.0 * h2)
    };
    let forward2 = |i: usize| {
        (2.0 * values[i] - 5.0 * values[i + 1] + 4.0 * values[i + 2] - values[i + 3]) / h2
    };
    let backward2 = |i: usize| {
        (2.0 * values[i] - 5.0 * values[i - 1] + 4.0 * values[i - 2] - values[i - 3]) / h2
    };

    (0..n)
        .map(|i| {
            let interior = match order {
                StencilOrder::Two => 1,
                StencilOrder::Four => 2,
            };
            match grid.boundary() {
                Boundary::Periodic => match order {
                    StencilOrder::Two => centered2(i as isize),
                    StencilOrder::Four => centered4(i as isize),
                },
                Boundary::FixedZero => {
                    if i == 0 {
                        forward2(0)
                    } else if i == n - 1 {
                        backward2(n - 1)
                    } else if i < interior || i >= n - interior {
                        centered2(i as isize)
                    } else {
                        match order {
                            StencilOrder::Two => centered2(i as isize),
                            StencilOrder::Four => centered4(i as isize),
                        }
                    }
                }
            }
        })
        .collect()
}
