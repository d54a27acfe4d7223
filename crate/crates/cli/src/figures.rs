//! Curve bundles for the nine figures. All figures use the example data
//! where data is needed, attached to whichever grid a curve interpolates on.

use trigspline::spline::polynomial_series;
use trigspline::{
    build_bspline_first_kind, build_bspline_second_kind, build_kernel_first_kind,
    build_kernel_second_kind, build_spline, compute_coeffs, GridId, HarmonicSeries, Parity,
    SplineConfig, Truncation,
};

use crate::error::CliError;
use crate::naming;
use crate::source::Source;

pub const FIGURES: std::ops::RangeInclusive<u8> = 1..=9;

pub struct Curve {
    pub stem: String,
    pub series: HarmonicSeries,
}

fn pairs() -> impl Iterator<Item = (GridId, GridId)> {
    GridId::ALL
        .into_iter()
        .flat_map(|a| GridId::ALL.into_iter().map(move |b| (a, b)))
}

fn splines_and_kernels(
    src: &Source,
    i2: GridId,
    orders: [u32; 3],
    trunc: Truncation,
) -> Result<Vec<Curve>, CliError> {
    let s = src.on(i2)?;
    let mut out = Vec::new();
    for r in orders {
        let cfg = SplineConfig::new(GridId::Zero, i2, r, s.len(), trunc)?;
        out.push(Curve {
            stem: naming::spline(&cfg),
            series: build_spline(&cfg, &s)?,
        });
        out.push(Curve {
            stem: naming::kernel_first(&cfg),
            series: build_kernel_first_kind(&cfg, &s)?,
        });
    }
    Ok(out)
}

pub fn curves(id: u8, src: &Source, trunc: Truncation) -> Result<Vec<Curve>, CliError> {
    let nodes = src.nodes();
    let mut out = Vec::new();
    match id {
        1 => {
            for (i1, i2) in pairs() {
                let s = src.on(i2)?;
                let cfg = SplineConfig::new(i1, i2, 1, nodes, trunc)?;
                out.push(Curve {
                    stem: naming::spline(&cfg),
                    series: build_spline(&cfg, &s)?,
                });
                out.push(Curve {
                    stem: naming::polynomial(i1, i2),
                    series: polynomial_series(&compute_coeffs(&s)),
                });
            }
        }
        2 => {
            for r in 0..=3 {
                out.push(Curve {
                    stem: naming::bspline_first(r),
                    series: build_bspline_first_kind(r, nodes, trunc)?,
                });
            }
        }
        3 => out = splines_and_kernels(src, GridId::Zero, [2, 4, 6], trunc)?,
        4 => out = splines_and_kernels(src, GridId::Zero, [1, 3, 5], trunc)?,
        5 => out = splines_and_kernels(src, GridId::One, [2, 4, 6], trunc)?,
        6 => out = splines_and_kernels(src, GridId::One, [1, 3, 5], trunc)?,
        7 | 8 => {
            let i1 = if id == 7 { GridId::Zero } else { GridId::One };
            for r in 0..=3 {
                out.push(Curve {
                    stem: naming::bspline_second(i1, GridId::Zero, r),
                    series: build_bspline_second_kind(i1, GridId::Zero, r, nodes, trunc)?,
                });
            }
        }
        9 => {
            let s = src.on(GridId::Zero)?;
            for parity in [Parity::Even, Parity::Odd] {
                out.push(Curve {
                    stem: naming::kernel_second(GridId::Zero, GridId::Zero, parity),
                    series: build_kernel_second_kind(
                        GridId::Zero,
                        GridId::Zero,
                        parity,
                        &s,
                        trunc,
                    )?,
                });
            }
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown figure {other}; expected 1..=9"
            )))
        }
    }
    Ok(out)
}
