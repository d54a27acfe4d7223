//! Trigonometric interpolation splines and their factorizations.
//!
//! Every object is a [`HarmonicSeries`] whose harmonics come in aliasing
//! chains `k, mN − k, mN + k` (`1 ≤ k ≤ n`, `1 ≤ m ≤ M`). A chain carries the
//! interpolation-grid coefficients `(a_k, b_k)` scaled by a damping factor
//! `σ_ω(·)` and a sign `(−1)^(m·e)`; the sine amplitude of `mN − k` is
//! negated, so that on a grid the whole chain collapses back onto
//! `a_k cos kt + b_k sin kt`.
//!
//! | object | damping | scale | sign exponent `e` |
//! |---|---|---|---|
//! | `St(I1, I2, r)` | `σ(r)` | `1/H_k(r)` | `r + 1 + I1` |
//! | `KR0(I1, I2, r)`, even `r` | `σ(0)` | `1/H_k(r)` | `1 + I1` |
//! | `KR1(I1, I2, r)`, odd `r` | `σ(0)` | `1/H_k(r)` | `I1` |
//! | `BR(r)` | `σ(r)` | `1/π` | none |
//! | `KR0*(I1, I2)` | `σ(0)` | 1 | `1 + I1` |
//! | `KR1*(I1, I2)` | `σ(0)` | 1 | `I1` |
//! | `BR*(I1, I2, r)` | `σ(r)` | `1/(π H_k(1 + r))` | none |
//!
//! The B-splines carry the constant coefficient `1/π` (unit integral); the
//! data-carrying series carry `a_0`.

use std::fmt;

use crate::error::{Error, Result};
use crate::grid::{half_order, GridId, SampleSet};
use crate::harmonic::{convolve, HarmonicSeries};
use crate::multipliers::{alternates, chain_sign, sigma, MultiplierTable, Truncation};
use crate::scalar::Scalar;
use crate::trigpoly::{compute_coeffs, TrigPolyCoeffs};

/// Parity of the spline order, selecting the even (`KR0`) or odd (`KR1`)
/// kernel family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(order: u32) -> Self {
        if order.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Everything needed to build one spline: stitching grid, interpolation
/// grid, order, node count and truncation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplineConfig {
    pub stitching: GridId,
    pub interpolation: GridId,
    pub order: u32,
    pub nodes: usize,
    pub trunc: Truncation,
}

impl SplineConfig {
    pub fn new(
        stitching: GridId,
        interpolation: GridId,
        order: u32,
        nodes: usize,
        trunc: Truncation,
    ) -> Result<Self> {
        half_order(nodes)?;
        Ok(Self {
            stitching,
            interpolation,
            order,
            nodes,
            trunc,
        })
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.order)
    }

    pub fn with_order(self, order: u32) -> Self {
        Self { order, ..self }
    }

    fn multipliers<T: Scalar>(&self, order: u32) -> Result<MultiplierTable<T>> {
        MultiplierTable::new(
            self.stitching,
            self.interpolation,
            order,
            self.nodes,
            self.trunc,
        )
    }
}

fn check_samples<T: Scalar>(
    interpolation: GridId,
    nodes: usize,
    samples: &SampleSet<T>,
) -> Result<()> {
    let found = samples.grid().variant();
    if found != interpolation {
        return Err(Error::GridMismatch {
            expected: interpolation,
            found,
        });
    }
    if samples.len() != nodes {
        return Err(Error::NodeCountMismatch {
            expected: nodes,
            found: samples.len(),
        });
    }
    Ok(())
}

fn stitch_exponent(stitching: GridId, offset: u32) -> u32 {
    offset + u32::from(stitching.value())
}

/// Lays out the aliasing chains.
///
/// `amplitude(k)` returns the `(cos, sin)` pair every member of chain `k`
/// is built from, before damping and sign.
fn assemble<T: Scalar, F: Fn(usize) -> (T, T)>(
    constant: T,
    nodes: usize,
    trunc: Truncation,
    alternating: bool,
    damping: u32,
    amplitude: F,
) -> HarmonicSeries<T> {
    let n = (nodes - 1) / 2;
    let big_n = nodes as u64;
    let damping = damping as i32;
    let mut terms = Vec::with_capacity(n * (2 * trunc.terms() + 1));
    for k in 1..=n {
        let (ca, sa) = amplitude(k);
        let kk = k as u64;
        let s = sigma::<T>(kk, damping, nodes);
        terms.push((kk, s * ca, s * sa));
        for m in 1..=trunc.terms() as u64 {
            let sign = chain_sign::<T>(m, alternating);
            let lo = m * big_n - kk;
            let hi = m * big_n + kk;
            let s_lo = sign * sigma::<T>(lo, damping, nodes);
            let s_hi = sign * sigma::<T>(hi, damping, nodes);
            terms.push((lo, s_lo * ca, -(s_lo * sa)));
            terms.push((hi, s_hi * ca, s_hi * sa));
        }
    }
    terms.sort_unstable_by_key(|t| t.0);
    HarmonicSeries::from_terms(constant, terms).with_truncation(trunc.terms())
}

fn data_chains<T: Scalar>(
    coeffs: &TrigPolyCoeffs<T>,
    nodes: usize,
    trunc: Truncation,
    alternating: bool,
    damping: u32,
    scale: impl Fn(usize) -> T,
) -> HarmonicSeries<T> {
    assemble(coeffs.a(0), nodes, trunc, alternating, damping, |k| {
        let c = scale(k);
        (c * coeffs.a(k), c * coeffs.b(k))
    })
}

/// Interpolating trigonometric spline `St(I1, I2, r, ·)`.
pub fn build_spline<T: Scalar>(
    config: &SplineConfig,
    samples: &SampleSet<T>,
) -> Result<HarmonicSeries<T>> {
    check_samples(config.interpolation, config.nodes, samples)?;
    let h = config.multipliers::<T>(config.order)?;
    let coeffs = compute_coeffs(samples);
    let alternating = alternates(stitch_exponent(config.stitching, config.order + 1));
    Ok(data_chains(
        &coeffs,
        config.nodes,
        config.trunc,
        alternating,
        config.order,
        |k| h.get(k).recip(),
    ))
}

/// First-kind kernel: `KR0(I1, I2, r)` for even `r`, `KR1(I1, I2, r)` for odd `r`.
pub fn build_kernel_first_kind<T: Scalar>(
    config: &SplineConfig,
    samples: &SampleSet<T>,
) -> Result<HarmonicSeries<T>> {
    check_samples(config.interpolation, config.nodes, samples)?;
    let h = config.multipliers::<T>(config.order)?;
    let coeffs = compute_coeffs(samples);
    let offset = match config.parity() {
        Parity::Even => 1,
        Parity::Odd => 0,
    };
    let alternating = alternates(stitch_exponent(config.stitching, offset));
    Ok(data_chains(
        &coeffs,
        config.nodes,
        config.trunc,
        alternating,
        0,
        |k| h.get(k).recip(),
    ))
}

/// First-kind trigonometric B-spline `BR(r, ·)`.
pub fn build_bspline_first_kind<T: Scalar>(
    order: u32,
    nodes: usize,
    trunc: Truncation,
) -> Result<HarmonicSeries<T>> {
    half_order(nodes)?;
    let inv_pi = T::FRAC_1_PI();
    Ok(assemble(inv_pi, nodes, trunc, false, order, |_| {
        (inv_pi, T::zero())
    }))
}

/// Second-kind kernel `KR0*(I1, I2)` / `KR1*(I1, I2)`. Independent of the
/// spline order.
pub fn build_kernel_second_kind<T: Scalar>(
    stitching: GridId,
    interpolation: GridId,
    parity: Parity,
    samples: &SampleSet<T>,
    trunc: Truncation,
) -> Result<HarmonicSeries<T>> {
    let nodes = samples.len();
    half_order(nodes)?;
    check_samples(interpolation, nodes, samples)?;
    let coeffs = compute_coeffs(samples);
    let offset = match parity {
        Parity::Even => 1,
        Parity::Odd => 0,
    };
    let alternating = alternates(stitch_exponent(stitching, offset));
    Ok(data_chains(&coeffs, nodes, trunc, alternating, 0, |_| {
        T::one()
    }))
}

/// Second-kind trigonometric B-spline `BR*(I1, I2, r, ·)`: the chains of
/// `BR(r)` each divided by `H_k(I1, I2, 1 + r)`.
pub fn build_bspline_second_kind<T: Scalar>(
    stitching: GridId,
    interpolation: GridId,
    order: u32,
    nodes: usize,
    trunc: Truncation,
) -> Result<HarmonicSeries<T>> {
    half_order(nodes)?;
    let h = MultiplierTable::<T>::new(stitching, interpolation, order + 1, nodes, trunc)?;
    let inv_pi = T::FRAC_1_PI();
    Ok(assemble(inv_pi, nodes, trunc, false, order, |k| {
        (inv_pi / h.get(k), T::zero())
    }))
}

/// Order of the B-spline paired with an order-`r` kernel, `r − 1`.
fn paired_order(order: u32) -> Result<u32> {
    if order == 0 {
        return Err(Error::UnsupportedOrder {
            order,
            reason: "convolution routes need r >= 1",
        });
    }
    Ok(order - 1)
}

/// `St` as `KR0(r) ⋆ BR(r − 1)` (even `r ≥ 2`) or `KR1(r) ⋆ BR(r − 1)` (odd `r`).
pub fn spline_via_convolution_first<T: Scalar>(
    config: &SplineConfig,
    samples: &SampleSet<T>,
) -> Result<HarmonicSeries<T>> {
    let paired = paired_order(config.order)?;
    let kernel = build_kernel_first_kind(config, samples)?;
    let bspline = build_bspline_first_kind(paired, config.nodes, config.trunc)?;
    Ok(convolve(&kernel, &bspline))
}

/// `St` as `KR0*(I1, I2) ⋆ BR*(I1, I2, r − 1)` (even `r ≥ 2`) or
/// `KR1*(I1, I2) ⋆ BR*(I1, I2, r − 1)` (odd `r`).
pub fn spline_via_convolution_second<T: Scalar>(
    config: &SplineConfig,
    samples: &SampleSet<T>,
) -> Result<HarmonicSeries<T>> {
    let paired = paired_order(config.order)?;
    let kernel = build_kernel_second_kind(
        config.stitching,
        config.interpolation,
        config.parity(),
        samples,
        config.trunc,
    )?;
    let bspline = build_bspline_second_kind(
        config.stitching,
        config.interpolation,
        paired,
        config.nodes,
        config.trunc,
    )?;
    Ok(convolve(&kernel, &bspline))
}

/// The interpolating trigonometric polynomial `T_n` as a series.
pub fn polynomial_series<T: Scalar>(coeffs: &TrigPolyCoeffs<T>) -> HarmonicSeries<T> {
    HarmonicSeries::from_terms(
        coeffs.a(0),
        (1..=coeffs.degree()).map(|k| (k as u64, coeffs.a(k), coeffs.b(k))),
    )
}
