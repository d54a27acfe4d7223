//! The interpolating trigonometric polynomial of degree `n` on an `N = 2n + 1`
//! point grid:
//!
//! ```text
//! T(t) = a_0/2 + Σ_{k=1..n} (a_k cos kt + b_k sin kt)
//! a_k  = (2/N) Σ_j f_j cos(k t_j),   b_k = (2/N) Σ_j f_j sin(k t_j)
//! ```

use crate::grid::{GridId, SampleSet};
use crate::scalar::Scalar;
use crate::sum::{compensated_sum, CompensatedSum};

#[derive(Debug, Clone, PartialEq)]
pub struct TrigPolyCoeffs<T> {
    grid: GridId,
    /// `a_0 … a_n`
    a: Vec<T>,
    /// `b_1 … b_n`
    b: Vec<T>,
}

impl<T: Scalar> TrigPolyCoeffs<T> {
    /// Builds coefficients directly. `a` holds `a_0..=a_n`, `b` holds `b_1..=b_n`.
    ///
    /// # Panics
    /// If `a.len() != b.len() + 1`.
    pub fn from_parts(grid: GridId, a: Vec<T>, b: Vec<T>) -> Self {
        assert_eq!(
            a.len(),
            b.len() + 1,
            "need n + 1 cosine and n sine coefficients"
        );
        Self { grid, a, b }
    }

    pub fn grid(&self) -> GridId {
        self.grid
    }

    /// Degree `n`.
    pub fn degree(&self) -> usize {
        self.b.len()
    }

    pub fn a(&self, k: usize) -> T {
        self.a[k]
    }

    /// `b_k` for `1 ≤ k ≤ n`.
    pub fn b(&self, k: usize) -> T {
        self.b[k - 1]
    }

    pub fn cosines(&self) -> &[T] {
        &self.a
    }

    pub fn sines(&self) -> &[T] {
        &self.b
    }

    pub fn eval(&self, t: T) -> T {
        let mut acc = CompensatedSum::new();
        acc.add(self.a[0] / T::lit(2.0));
        for k in 1..=self.degree() {
            let (s, c) = (T::from_index(k as u64) * t).sin_cos();
            acc.add(self.a[k] * c);
            acc.add(self.b[k - 1] * s);
        }
        acc.value()
    }
}

/// Discrete Fourier coefficients of the samples, by direct compensated summation.
///
/// The harmonic sums for `k ≥ 1` run over the samples minus their mean, which
/// leaves them unchanged in exact arithmetic and makes constant data produce
/// exact zeros.
pub fn compute_coeffs<T: Scalar>(samples: &SampleSet<T>) -> TrigPolyCoeffs<T> {
    let grid = samples.grid();
    let n = grid.half_order();
    let count = T::from_index(grid.len() as u64);
    let scale = T::lit(2.0) / count;
    let total = compensated_sum(samples.values().iter().copied());
    let mean = total / count;
    let pairs: Vec<(T, T)> = grid
        .nodes()
        .iter()
        .copied()
        .zip(samples.values().iter().map(|&f| f - mean))
        .collect();

    let a = std::iter::once(scale * total)
        .chain((1..=n).map(|k| {
            let kf = T::from_index(k as u64);
            scale * compensated_sum(pairs.iter().map(|&(t, f)| f * (kf * t).cos()))
        }))
        .collect();
    let b = (1..=n)
        .map(|k| {
            let kf = T::from_index(k as u64);
            scale * compensated_sum(pairs.iter().map(|&(t, f)| f * (kf * t).sin()))
        })
        .collect();
    TrigPolyCoeffs {
        grid: grid.variant(),
        a,
        b,
    }
}

pub fn eval_poly<T: Scalar>(coeffs: &TrigPolyCoeffs<T>, t: T) -> T {
    coeffs.eval(t)
}
