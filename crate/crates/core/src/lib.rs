//! Trigonometric interpolation splines with Riemann convergence multipliers.
//!
//! The crate builds, for any pair of stitching and interpolation grids,
//! the interpolating spline `St`, its kernels of the first and second kind
//! (`KR0`, `KR1`, `KR0*`, `KR1*`) and the trigonometric B-splines `BR` and
//! `BR*`, all as sparse [`HarmonicSeries`]. Splines can be reassembled from
//! kernels and B-splines by periodic convolution, and [`oracles`] supplies
//! polynomial B-splines and periodic polynomial splines to compare against.
//!
//! Numerical code is generic over [`Scalar`] (`f32` or `f64`); the aliases
//! below fix it to `f64`.

pub mod error;
pub mod grid;
pub mod harmonic;
pub mod multipliers;
pub mod oracles;
pub mod scalar;
pub mod spline;
pub mod suite;
pub mod sum;
pub mod trigpoly;
pub mod verify;

pub use error::{Error, Result};
pub use grid::{attach_samples, grid_step, make_grid, GridId};
pub use harmonic::{convolve, linear_combine, max_relative_coeff_diff, sup_diff};
pub use multipliers::{interp_multiplier, sigma, Truncation, DEFAULT_TERMS};
pub use scalar::Scalar;
pub use spline::{
    build_bspline_first_kind, build_bspline_second_kind, build_kernel_first_kind,
    build_kernel_second_kind, build_spline, spline_via_convolution_first,
    spline_via_convolution_second, Parity, SplineConfig,
};
pub use trigpoly::{compute_coeffs, eval_poly};

pub type UniformGrid = grid::UniformGrid<f64>;
pub type SampleSet = grid::SampleSet<f64>;
pub type TrigPolyCoeffs = trigpoly::TrigPolyCoeffs<f64>;
pub type HarmonicSeries = harmonic::HarmonicSeries<f64>;
pub type MultiplierTable = multipliers::MultiplierTable<f64>;

pub type UniformGrid32 = grid::UniformGrid<f32>;
pub type SampleSet32 = grid::SampleSet<f32>;
pub type TrigPolyCoeffs32 = trigpoly::TrigPolyCoeffs<f32>;
pub type HarmonicSeries32 = harmonic::HarmonicSeries<f32>;
pub type MultiplierTable32 = multipliers::MultiplierTable<f32>;

/// The nine sample values used as the running example: `2, 1, 3, 2, 4, 1, 3, 1, 3`.
pub const EXAMPLE_DATA: [f64; 9] = [2.0, 1.0, 3.0, 2.0, 4.0, 1.0, 3.0, 1.0, 3.0];
