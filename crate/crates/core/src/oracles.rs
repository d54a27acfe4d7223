//! Independent reference implementations.
//!
//! Nothing here touches the multiplier or spline modules: polynomial
//! B-splines come from the Cox–de Boor recursion, periodic polynomial
//! splines from a cyclic tridiagonal solve, and convolution from the
//! trapezoid rule.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::grid::{GridId, SampleSet};
use crate::harmonic::HarmonicSeries;

/// Uniform-knot B-spline of the given degree, centred at 0 and scaled to
/// unit integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CardinalBSpline {
    pub degree: usize,
    pub step: f64,
}

impl CardinalBSpline {
    pub fn new(degree: usize, step: f64) -> Self {
        assert!(step > 0.0, "knot spacing must be positive");
        assert!(degree <= 10, "degree above 10 is not supported");
        Self { degree, step }
    }

    pub fn support_half_width(&self) -> f64 {
        0.5 * (self.degree + 1) as f64 * self.step
    }

    pub fn eval(&self, t: f64) -> f64 {
        let x = t / self.step + 0.5 * (self.degree + 1) as f64;
        cox_de_boor(0, self.degree, x) / self.step
    }

    /// Sum of all `2π`-translates, i.e. the periodic version.
    pub fn eval_periodic(&self, t: f64) -> f64 {
        let reach = (self.support_half_width() / TAU).ceil() as i64 + 1;
        (-reach..=reach)
            .map(|j| self.eval(t + j as f64 * TAU))
            .sum()
    }
}

/// `N_{i,p}(x)` on the integer knots `0, 1, 2, …`.
fn cox_de_boor(i: usize, p: usize, x: f64) -> f64 {
    let left = i as f64;
    if p == 0 {
        return if (left..left + 1.0).contains(&x) {
            1.0
        } else {
            0.0
        };
    }
    let pf = p as f64;
    (x - left) / pf * cox_de_boor(i, p - 1, x)
        + (left + pf + 1.0 - x) / pf * cox_de_boor(i + 1, p - 1, x)
}

pub fn eval_cardinal_bspline(spec: &CardinalBSpline, t: f64) -> f64 {
    spec.eval(t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolySplineKind {
    Linear,
    Cubic,
}

/// Periodic piecewise polynomial interpolating samples on grid 0.
///
/// On `[t_i, t_i + h)` the spline is `c0 + c1 s + c2 s² + c3 s³`, `s = t − t_i`.
#[derive(Debug, Clone)]
pub struct PeriodicPolySpline {
    kind: PolySplineKind,
    samples: SampleSet<f64>,
    coefficients: Vec<[f64; 4]>,
}

impl PeriodicPolySpline {
    pub fn new(kind: PolySplineKind, samples: SampleSet<f64>) -> Result<Self> {
        if samples.grid().variant() != GridId::Zero {
            return Err(Error::GridMismatch {
                expected: GridId::Zero,
                found: samples.grid().variant(),
            });
        }
        let f = samples.values();
        let n = f.len();
        let h = samples.grid().step();
        let coefficients = match kind {
            PolySplineKind::Linear => (0..n)
                .map(|i| [f[i], (f[(i + 1) % n] - f[i]) / h, 0.0, 0.0])
                .collect(),
            PolySplineKind::Cubic => {
                // Moments M_i = s''(t_i): M_{i-1} + 4 M_i + M_{i+1} = 6/h² (f_{i+1} − 2 f_i + f_{i-1}).
                let rhs: Vec<f64> = (0..n)
                    .map(|i| 6.0 / (h * h) * (f[(i + 1) % n] - 2.0 * f[i] + f[(i + n - 1) % n]))
                    .collect();
                let m = solve_cyclic_tridiagonal(1.0, 4.0, 1.0, &rhs)?;
                (0..n)
                    .map(|i| {
                        let j = (i + 1) % n;
                        [
                            f[i],
                            (f[j] - f[i]) / h - h * (2.0 * m[i] + m[j]) / 6.0,
                            m[i] / 2.0,
                            (m[j] - m[i]) / (6.0 * h),
                        ]
                    })
                    .collect()
            }
        };
        Ok(Self {
            kind,
            samples,
            coefficients,
        })
    }

    pub fn kind(&self) -> PolySplineKind {
        self.kind
    }

    pub fn samples(&self) -> &SampleSet<f64> {
        &self.samples
    }

    pub fn coefficients(&self) -> &[[f64; 4]] {
        &self.coefficients
    }

    fn locate(&self, t: f64) -> (usize, f64) {
        let n = self.coefficients.len();
        let h = self.samples.grid().step();
        let t = t.rem_euclid(TAU);
        let i = ((t / h).floor() as usize).min(n - 1);
        (i, t - i as f64 * h)
    }

    pub fn eval(&self, t: f64) -> f64 {
        let (i, s) = self.locate(t);
        let [c0, c1, c2, c3] = self.coefficients[i];
        c0 + s * (c1 + s * (c2 + s * c3))
    }

    /// Largest jump of value, first and second derivative across the nodes,
    /// wrap-around included, relative to the largest magnitude involved.
    pub fn continuity_residuals(&self) -> [f64; 3] {
        let n = self.coefficients.len();
        let h = self.samples.grid().step();
        let mut worst = [0.0f64; 3];
        for i in 0..n {
            let [c0, c1, c2, c3] = self.coefficients[i];
            let end = [
                c0 + h * (c1 + h * (c2 + h * c3)),
                c1 + h * (2.0 * c2 + 3.0 * h * c3),
                2.0 * c2 + 6.0 * h * c3,
            ];
            let next = self.coefficients[(i + 1) % n];
            let start = [next[0], next[1], 2.0 * next[2]];
            for d in 0..3 {
                let scale = end[d].abs().max(start[d].abs()).max(1.0);
                worst[d] = worst[d].max((end[d] - start[d]).abs() / scale);
            }
        }
        worst
    }
}

pub fn build_periodic_spline(
    kind: PolySplineKind,
    samples: SampleSet<f64>,
) -> Result<PeriodicPolySpline> {
    PeriodicPolySpline::new(kind, samples)
}

/// Solves the circulant tridiagonal system with constant `sub`, `diag`,
/// `sup` bands via the Sherman–Morrison correction of the Thomas algorithm.
pub fn solve_cyclic_tridiagonal(sub: f64, diag: f64, sup: f64, rhs: &[f64]) -> Result<Vec<f64>> {
    let n = rhs.len();
    if n < 3 {
        return Err(Error::SingularSystem);
    }
    // A = T + u vᵀ with u = (γ, 0, …, 0, sub), v = (1, 0, …, 0, sup/γ).
    let gamma = -diag;
    let mut main = vec![diag; n];
    main[0] = diag - gamma;
    main[n - 1] = diag - sub * sup / gamma;
    let x = thomas(sub, &main, sup, rhs)?;
    let mut u = vec![0.0; n];
    u[0] = gamma;
    u[n - 1] = sub;
    let z = thomas(sub, &main, sup, &u)?;
    let denom = 1.0 + z[0] + sup / gamma * z[n - 1];
    if denom.abs() < f64::EPSILON {
        return Err(Error::SingularSystem);
    }
    let factor = (x[0] + sup / gamma * x[n - 1]) / denom;
    Ok(x.iter().zip(&z).map(|(xi, zi)| xi - factor * zi).collect())
}

fn thomas(sub: f64, main: &[f64], sup: f64, rhs: &[f64]) -> Result<Vec<f64>> {
    let n = main.len();
    let mut c = vec![0.0; n];
    let mut d = vec![0.0; n];
    let mut beta = main[0];
    if beta == 0.0 {
        return Err(Error::SingularSystem);
    }
    d[0] = rhs[0] / beta;
    for i in 1..n {
        c[i] = sup / beta;
        beta = main[i] - sub * c[i];
        if beta == 0.0 {
            return Err(Error::SingularSystem);
        }
        d[i] = (rhs[i] - sub * d[i - 1]) / beta;
    }
    for i in (0..n - 1).rev() {
        d[i] -= c[i + 1] * d[i + 1];
    }
    Ok(d)
}

/// Term-by-term evaluation, independent of the series' own evaluator.
fn eval_direct(s: &HarmonicSeries<f64>, t: f64) -> f64 {
    s.const_coeff() / 2.0
        + s.terms()
            .map(|(w, a, b)| {
                let (sn, cs) = (w as f64 * t).sin_cos();
                a * cs + b * sn
            })
            .sum::<f64>()
}

/// Trapezoid value of `∫_0^{2π} a(t − v) b(v) dv` on `points` nodes.
pub fn quadrature_convolve(
    a: &HarmonicSeries<f64>,
    b: &HarmonicSeries<f64>,
    t: f64,
    points: usize,
) -> Result<f64> {
    let required = 2 * (a.max_frequency() + b.max_frequency()) as usize + 2;
    if points < required {
        return Err(Error::InsufficientQuadraturePoints {
            required,
            given: points,
        });
    }
    let dv = TAU / points as f64;
    let sum: f64 = (0..points)
        .map(|j| {
            let v = j as f64 * dv;
            eval_direct(a, t - v) * eval_direct(b, v)
        })
        .sum();
    Ok(sum * dv)
}
