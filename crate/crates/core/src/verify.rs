//! Measured checks of the equalities between second-kind kernels built on
//! different grid pairs.
//!
//! The same values are attached to grid 0 and grid 1; `h = 2π/N`, so a
//! shift by `h/2` carries grid 0 onto grid 1. Two families are reported:
//!
//! * [`IdentityFamily::Stated`]: the chains
//!   `KR0*(0,0,t) = KR0*(1,1,t) = KR1*(1,0,t) = KR1*(0,1,t+h/2)` and
//!   `KR1*(0,0,t) = KR1*(1,1,t+h/2) = KR0*(1,0,t) = KR0*(0,1,t)`, one check
//!   per adjacent pair.
//! * [`IdentityFamily::Structural`]: relations that follow from the sign
//!   patterns alone. A second-kind kernel is a box-smoothed comb on grid 1
//!   when its sign alternates and on grid 0 otherwise, so kernels sharing
//!   comb grid and data grid coincide coefficient for coefficient, and the
//!   two comb placements differ by an `h/2` translation.
//!
//! Residuals are sup-norm differences over an equispaced sample of `[0, 2π)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{grid_step, GridId, SampleSet};
use crate::harmonic::{sup_diff, HarmonicSeries};
use crate::multipliers::Truncation;
use crate::scalar::Scalar;
use crate::spline::{build_kernel_second_kind, Parity};

/// Residuals at or below this level are rounding noise for trend purposes.
pub const TREND_FLOOR: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityFamily {
    Stated,
    Structural,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub label: String,
    pub family: IdentityFamily,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub nodes: usize,
    pub terms: usize,
    pub samples: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn family(&self, family: IdentityFamily) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(move |c| c.family == family)
    }

    pub fn get(&self, label: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.label == label)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }
}

struct Kernels<T> {
    /// `[I1][I2]`
    even: [[HarmonicSeries<T>; 2]; 2],
    odd: [[HarmonicSeries<T>; 2]; 2],
}

impl<T: Scalar> Kernels<T> {
    fn build(grid0: &SampleSet<T>, grid1: &SampleSet<T>, trunc: Truncation) -> Result<Self> {
        let data = [grid0, grid1];
        let make = |parity: Parity| -> Result<[[HarmonicSeries<T>; 2]; 2]> {
            let one = |i1: GridId| -> Result<[HarmonicSeries<T>; 2]> {
                Ok([
                    build_kernel_second_kind(i1, GridId::Zero, parity, data[0], trunc)?,
                    build_kernel_second_kind(i1, GridId::One, parity, data[1], trunc)?,
                ])
            };
            Ok([one(GridId::Zero)?, one(GridId::One)?])
        };
        Ok(Self {
            even: make(Parity::Even)?,
            odd: make(Parity::Odd)?,
        })
    }

    fn get(&self, parity: Parity, i1: usize, i2: usize) -> &HarmonicSeries<T> {
        match parity {
            Parity::Even => &self.even[i1][i2],
            Parity::Odd => &self.odd[i1][i2],
        }
    }
}

/// One side of an equality: a kernel, optionally evaluated at `t + h/2`.
#[derive(Clone, Copy)]
struct Side {
    parity: Parity,
    i1: usize,
    i2: usize,
    shifted: bool,
}

const fn side(parity: Parity, i1: usize, i2: usize, shifted: bool) -> Side {
    Side {
        parity,
        i1,
        i2,
        shifted,
    }
}

impl Side {
    fn label(&self) -> String {
        let name = match self.parity {
            Parity::Even => "KR0*",
            Parity::Odd => "KR1*",
        };
        let arg = if self.shifted { "t+h/2" } else { "t" };
        format!("{name}({},{},{arg})", self.i1, self.i2)
    }
}

use Parity::{Even, Odd};

const STATED: [(Side, Side); 6] = [
    (side(Even, 0, 0, false), side(Even, 1, 1, false)),
    (side(Even, 1, 1, false), side(Odd, 1, 0, false)),
    (side(Odd, 1, 0, false), side(Odd, 0, 1, true)),
    (side(Odd, 0, 0, false), side(Odd, 1, 1, true)),
    (side(Odd, 1, 1, true), side(Even, 1, 0, false)),
    (side(Even, 1, 0, false), side(Even, 0, 1, false)),
];

const STRUCTURAL: [(Side, Side); 6] = [
    (side(Even, 0, 0, false), side(Odd, 1, 0, false)),
    (side(Even, 1, 1, false), side(Odd, 0, 1, false)),
    (side(Even, 0, 0, false), side(Even, 1, 1, true)),
    (side(Odd, 0, 0, false), side(Even, 1, 0, false)),
    (side(Odd, 1, 1, false), side(Even, 0, 1, false)),
    (side(Even, 1, 0, false), side(Even, 0, 1, true)),
];

fn validate<T: Scalar>(grid0: &SampleSet<T>, grid1: &SampleSet<T>) -> Result<usize> {
    for (s, want) in [(grid0, GridId::Zero), (grid1, GridId::One)] {
        if s.grid().variant() != want {
            return Err(Error::GridMismatch {
                expected: want,
                found: s.grid().variant(),
            });
        }
    }
    if grid0.len() != grid1.len() {
        return Err(Error::NodeCountMismatch {
            expected: grid0.len(),
            found: grid1.len(),
        });
    }
    Ok(grid0.len())
}

/// Measures every stated and structural kernel equality.
pub fn verify_identities<T: Scalar>(
    grid0: &SampleSet<T>,
    grid1: &SampleSet<T>,
    trunc: Truncation,
    tolerance: f64,
    samples: usize,
) -> Result<IdentityReport> {
    let nodes = validate(grid0, grid1)?;
    let half_step = grid_step::<T>(nodes)? / T::lit(2.0);
    let kernels = Kernels::build(grid0, grid1, trunc)?;
    let resolve = |s: Side| -> HarmonicSeries<T> {
        let k = kernels.get(s.parity, s.i1, s.i2);
        if s.shifted {
            k.shift(half_step)
        } else {
            k.clone()
        }
    };
    let families = [
        (IdentityFamily::Stated, &STATED),
        (IdentityFamily::Structural, &STRUCTURAL),
    ];
    let checks = families
        .iter()
        .flat_map(|&(family, pairs)| pairs.iter().map(move |pair| (family, pair)))
        .map(|(family, &(lhs, rhs))| {
            let residual = sup_diff(&resolve(lhs), &resolve(rhs), samples)
                .to_f64()
                .unwrap_or(f64::NAN);
            IdentityCheck {
                label: format!("{} = {}", lhs.label(), rhs.label()),
                family,
                residual,
                tolerance,
                passed: residual <= tolerance,
            }
        })
        .collect();
    Ok(IdentityReport {
        nodes,
        terms: trunc.terms(),
        samples,
        checks,
    })
}

/// Identity reports for a sequence of truncation orders.
pub fn identity_trend<T: Scalar>(
    grid0: &SampleSet<T>,
    grid1: &SampleSet<T>,
    terms: &[usize],
    tolerance: f64,
    samples: usize,
) -> Result<Vec<IdentityReport>> {
    terms
        .iter()
        .map(|&m| verify_identities(grid0, grid1, Truncation::new(m)?, tolerance, samples))
        .collect()
}

/// `true` when each residual is at most twice its predecessor, residuals
/// below `floor` being treated as equal to `floor`.
pub fn trend_is_monotone(residuals: &[f64], floor: f64) -> bool {
    residuals.windows(2).all(|w| w[1] <= 2.0 * w[0].max(floor))
}
