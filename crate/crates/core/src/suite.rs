//! End-to-end verification run over one data vector, as driven by the
//! `verify` command. Every check records its measured residual next to the
//! tolerance it is held to.

use std::f64::consts::{PI, TAU};

use serde::Serialize;

use crate::error::Result;
use crate::grid::{attach_samples, grid_step, make_grid, GridId, SampleSet};
use crate::harmonic::{convolve, max_relative_coeff_diff, HarmonicSeries};
use crate::multipliers::{sigma, MultiplierTable, Truncation};
use crate::oracles::{quadrature_convolve, CardinalBSpline, PeriodicPolySpline, PolySplineKind};
use crate::spline::{
    build_bspline_first_kind, build_bspline_second_kind, build_kernel_first_kind,
    build_kernel_second_kind, build_spline, spline_via_convolution_first,
    spline_via_convolution_second, Parity, SplineConfig,
};
use crate::trigpoly::compute_coeffs;
use crate::verify::{identity_trend, trend_is_monotone, IdentityFamily, TREND_FLOOR};

pub const INTERPOLATION_TOL: f64 = 1e-8;
pub const NORMALIZATION_TOL: f64 = 1e-14;
pub const NORMALIZATION_QUADRATURE_TOL: f64 = 1e-6;
pub const NORMALIZATION_QUADRATURE_POINTS: usize = 4096;
pub const COEFFICIENT_TOL: f64 = 1e-10;
pub const QUADRATURE_TOL: f64 = 1e-9;
pub const IDENTITY_TOL: f64 = 1e-3;
pub const HAT_TOL: f64 = 1e-3;
pub const CUBIC_BSPLINE_TOL: f64 = 1e-4;
pub const BOX_TOL: f64 = 1e-2;
pub const POLY_SPLINE_TOL: f64 = 1e-3;
pub const COMPOSITION_TOL: f64 = 1e-14;
pub const CONSTANT_TOL: f64 = 1e-12;
pub const TRANSFORM_TOL: f64 = 1e-12;
pub const NODE_INTERPOLATION_TOL: f64 = 1e-10;

/// Truncation for checks that compare against trapezoid sums; keeps every
/// harmonic below the quadrature's aliasing limit.
pub const QUADRATURE_TERMS: usize = 20;

pub const SUP_SAMPLES: usize = 1000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub criterion: u8,
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl Check {
    fn new(criterion: u8, name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Self {
            criterion,
            name: name.into(),
            residual,
            tolerance,
            passed: residual <= tolerance,
        }
    }

    fn flag(criterion: u8, name: impl Into<String>, ok: bool) -> Self {
        Self {
            criterion,
            name: name.into(),
            residual: if ok { 0.0 } else { 1.0 },
            tolerance: 0.0,
            passed: ok,
        }
    }
}

/// Residuals of the truncation-sensitive checks at one `M`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SensitivityRow {
    pub terms: usize,
    pub interpolation: f64,
    pub hat: f64,
    pub linear_spline: f64,
    pub cubic_spline: f64,
    pub identities_stated: f64,
    pub identities_structural: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub nodes: usize,
    pub terms: usize,
    pub data: Vec<f64>,
    pub checks: Vec<Check>,
    pub sensitivity: Vec<SensitivityRow>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    /// Sample values, attached to grid 0 and re-attached to grid 1.
    pub data: Vec<f64>,
    pub trunc: Truncation,
    pub samples: usize,
}

fn pairs() -> impl Iterator<Item = (GridId, GridId)> {
    GridId::ALL
        .into_iter()
        .flat_map(|a| GridId::ALL.into_iter().map(move |b| (a, b)))
}

fn max_abs(it: impl IntoIterator<Item = f64>) -> f64 {
    it.into_iter().fold(0.0, |m, v| m.max(v.abs()))
}

fn rel(a: f64, b: f64) -> f64 {
    let s = a.abs().max(b.abs());
    if s == 0.0 {
        0.0
    } else {
        (a - b).abs() / s
    }
}

struct Data {
    on: [SampleSet<f64>; 2],
}

impl Data {
    fn new(values: &[f64]) -> Result<Self> {
        let g0 = attach_samples(make_grid(GridId::Zero, values.len())?, values.to_vec())?;
        let g1 = g0.reattach(GridId::One)?;
        Ok(Self { on: [g0, g1] })
    }

    fn grid(&self, g: GridId) -> &SampleSet<f64> {
        &self.on[g.value() as usize]
    }

    fn nodes(&self) -> usize {
        self.on[0].len()
    }
}

fn interpolation_residual(
    data: &Data,
    i1: GridId,
    i2: GridId,
    r: u32,
    trunc: Truncation,
) -> Result<f64> {
    let s = data.grid(i2);
    let st = build_spline(&SplineConfig::new(i1, i2, r, data.nodes(), trunc)?, s)?;
    Ok(max_abs(
        s.grid()
            .nodes()
            .iter()
            .zip(s.values())
            .map(|(&t, &f)| st.eval(t) - f),
    ))
}

fn worst_interpolation(data: &Data, trunc: Truncation) -> Result<f64> {
    let mut worst = 0.0f64;
    for (i1, i2) in pairs() {
        for r in 0..=5 {
            worst = worst.max(interpolation_residual(data, i1, i2, r, trunc)?);
        }
    }
    Ok(worst)
}

/// Sup-distance on `[−π, π]` between a first-kind B-spline and its
/// polynomial counterpart, skipping points within `exclude` of a jump.
pub fn bspline_oracle_residual(
    order: u32,
    nodes: usize,
    trunc: Truncation,
    points: usize,
    exclude: f64,
) -> Result<f64> {
    let br = build_bspline_first_kind::<f64>(order, nodes, trunc)?;
    let h = grid_step::<f64>(nodes)?;
    let oracle = CardinalBSpline::new(order as usize, h);
    let ts: Vec<f64> = (0..=points)
        .map(|i| -PI + TAU * i as f64 / points as f64)
        .filter(|&t| exclude <= 0.0 || ((t.abs() - h / 2.0).abs() >= exclude))
        .collect();
    let vals = br.eval_many(&ts);
    Ok(max_abs(
        ts.iter()
            .zip(vals)
            .map(|(&t, v)| v - oracle.eval_periodic(t)),
    ))
}

/// Sup-distance over `[0, 2π)` between `St(0,0,r)` and a periodic polynomial spline.
pub fn poly_spline_residual(
    samples: &SampleSet<f64>,
    order: u32,
    kind: PolySplineKind,
    trunc: Truncation,
    points: usize,
) -> Result<f64> {
    let cfg = SplineConfig::new(GridId::Zero, GridId::Zero, order, samples.len(), trunc)?;
    let st = build_spline(&cfg, samples)?;
    let oracle = PeriodicPolySpline::new(kind, samples.clone())?;
    let ts = crate::harmonic::period_points::<f64>(points);
    let vals = st.eval_many(&ts);
    Ok(max_abs(
        ts.iter().zip(vals).map(|(&t, v)| v - oracle.eval(t)),
    ))
}

fn quadrature_residual(a: &HarmonicSeries<f64>, b: &HarmonicSeries<f64>, at: usize) -> Result<f64> {
    let conv = convolve(a, b);
    let points = 2 * (a.max_frequency() + b.max_frequency()) as usize + 2;
    let mut worst = 0.0f64;
    for i in 0..at {
        let t = TAU * i as f64 / at as f64;
        let q = quadrature_convolve(a, b, t, points)?;
        worst = worst.max((conv.eval(t) - q).abs() / q.abs().max(1.0));
    }
    Ok(worst)
}

/// Ascending `M` values from 10 up to `max`, by decades, ending at `max`.
pub fn decade_ladder(max: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut m = 10;
    while m < max {
        out.push(m);
        m *= 10;
    }
    out.push(max);
    out
}

pub fn run_suite(opts: &SuiteOptions) -> Result<SuiteReport> {
    let data = Data::new(&opts.data)?;
    let nodes = data.nodes();
    let n = (nodes - 1) / 2;
    let trunc = opts.trunc;
    let samples = opts.samples;
    let mut checks = Vec::new();

    // 1. interpolation
    for (i1, i2) in pairs() {
        let mut worst = 0.0f64;
        for r in 0..=5 {
            worst = worst.max(interpolation_residual(&data, i1, i2, r, trunc)?);
        }
        checks.push(Check::new(
            1,
            format!("interpolation St({i1},{i2},r) r=0..5"),
            worst,
            INTERPOLATION_TOL,
        ));
    }

    // 2. normalization
    let quad_terms =
        Truncation::new(((NORMALIZATION_QUADRATURE_POINTS - 1 - n) / nodes).min(trunc.terms()))?;
    let mut coeff_worst = 0.0f64;
    let mut quad_worst = 0.0f64;
    let trapezoid = |s: &HarmonicSeries<f64>| {
        s.sample_period(NORMALIZATION_QUADRATURE_POINTS)
            .iter()
            .sum::<f64>()
            * TAU
            / NORMALIZATION_QUADRATURE_POINTS as f64
    };
    for r in 0..=3 {
        coeff_worst = coeff_worst.max(
            (build_bspline_first_kind::<f64>(r, nodes, trunc)?.integrate_period() - 1.0).abs(),
        );
        quad_worst = quad_worst
            .max((trapezoid(&build_bspline_first_kind(r, nodes, quad_terms)?) - 1.0).abs());
        for (i1, i2) in pairs() {
            let b = build_bspline_second_kind::<f64>(i1, i2, r, nodes, trunc)?;
            coeff_worst = coeff_worst.max((b.integrate_period() - 1.0).abs());
            let b = build_bspline_second_kind::<f64>(i1, i2, r, nodes, quad_terms)?;
            quad_worst = quad_worst.max((trapezoid(&b) - 1.0).abs());
        }
    }
    checks.push(Check::new(
        2,
        "normalization, coefficient route",
        coeff_worst,
        NORMALIZATION_TOL,
    ));
    checks.push(Check::new(
        2,
        "normalization, 4096-point trapezoid",
        quad_worst,
        NORMALIZATION_QUADRATURE_TOL,
    ));

    // 3. convolution representations
    let mut first = 0.0f64;
    let mut second = 0.0f64;
    let mut quad = 0.0f64;
    let small = Truncation::new(QUADRATURE_TERMS.min(trunc.terms()))?;
    for (i1, i2) in pairs() {
        let s = data.grid(i2);
        for r in 1..=3 {
            let cfg = SplineConfig::new(i1, i2, r, nodes, trunc)?;
            let direct = build_spline(&cfg, s)?;
            second = second.max(max_relative_coeff_diff(
                &direct,
                &spline_via_convolution_second(&cfg, s)?,
            ));
            if r % 2 == 1 || r >= 2 {
                first = first.max(max_relative_coeff_diff(
                    &direct,
                    &spline_via_convolution_first(&cfg, s)?,
                ));
            }
            let small_cfg = SplineConfig::new(i1, i2, r, nodes, small)?;
            let k = build_kernel_second_kind(i1, i2, Parity::of(r), s, small)?;
            let b = build_bspline_second_kind(i1, i2, r - 1, nodes, small)?;
            quad = quad.max(quadrature_residual(&k, &b, 64)?);
            let k = build_kernel_first_kind(&small_cfg, s)?;
            let b = build_bspline_first_kind(r - 1, nodes, small)?;
            quad = quad.max(quadrature_residual(&k, &b, 64)?);
        }
    }
    checks.push(Check::new(
        3,
        "St = KR (x) BR, coefficients",
        first,
        COEFFICIENT_TOL,
    ));
    checks.push(Check::new(
        3,
        "St = KR* (x) BR*, coefficients",
        second,
        COEFFICIENT_TOL,
    ));
    checks.push(Check::new(
        3,
        "convolution vs trapezoid quadrature, 64 points",
        quad,
        QUADRATURE_TOL,
    ));

    // 4. kernel identities and their truncation trend
    let ladder: Vec<usize> = [100, 1000]
        .into_iter()
        .filter(|&m| m < trunc.terms())
        .chain([trunc.terms()])
        .collect();
    let trend = identity_trend(
        data.grid(GridId::Zero),
        data.grid(GridId::One),
        &ladder,
        IDENTITY_TOL,
        samples,
    )?;
    let last = trend.last().expect("ladder is never empty");
    for c in &last.checks {
        let family = match c.family {
            IdentityFamily::Stated => "stated",
            IdentityFamily::Structural => "structural",
        };
        checks.push(Check::new(
            4,
            format!("{family}: {}", c.label),
            c.residual,
            c.tolerance,
        ));
    }
    for (idx, c) in last.checks.iter().enumerate() {
        let series: Vec<f64> = trend.iter().map(|rep| rep.checks[idx].residual).collect();
        checks.push(Check::flag(
            4,
            format!("trend M={ladder:?}: {}", c.label),
            trend_is_monotone(&series, TREND_FLOOR),
        ));
    }

    // 5. B-spline coincidence
    let h = grid_step::<f64>(nodes)?;
    checks.push(Check::new(
        5,
        "BR(1) vs degree-1 B-spline",
        bspline_oracle_residual(1, nodes, trunc, 2000, 0.0)?,
        HAT_TOL,
    ));
    checks.push(Check::new(
        5,
        "BR(3) vs degree-3 B-spline",
        bspline_oracle_residual(3, nodes, trunc, 2000, 0.0)?,
        CUBIC_BSPLINE_TOL,
    ));
    checks.push(Check::new(
        5,
        "BR(0) vs box, +-h/4 around jumps excluded",
        bspline_oracle_residual(0, nodes, trunc, 2000, h / 4.0)?,
        BOX_TOL,
    ));

    // 6. periodic polynomial splines
    let s0 = data.grid(GridId::Zero);
    let linear = poly_spline_residual(s0, 1, PolySplineKind::Linear, trunc, samples)?;
    let cubic = poly_spline_residual(s0, 3, PolySplineKind::Cubic, trunc, samples)?;
    checks.push(Check::new(
        6,
        "St(0,0,1) vs periodic broken line",
        linear,
        POLY_SPLINE_TOL,
    ));
    checks.push(Check::new(
        6,
        "St(0,0,3) vs periodic C2 cubic",
        cubic,
        POLY_SPLINE_TOL,
    ));

    // 7. multiplier algebra
    let mut comp = 0.0f64;
    for x in 1..=200u64 {
        for a in -1..=4 {
            for b in -1..=4 {
                comp = comp.max(rel(
                    sigma::<f64>(x, a, nodes) * sigma::<f64>(x, b, nodes),
                    sigma::<f64>(x, a + b + 1, nodes),
                ));
            }
        }
    }
    checks.push(Check::new(
        7,
        "sigma(a) sigma(b) = sigma(a+b+1)",
        comp,
        COMPOSITION_TOL,
    ));
    let mut symmetric = true;
    for r in 0..=5 {
        let h =
            |a, b| MultiplierTable::<f64>::new(a, b, r, nodes, trunc).map(|t| t.values().to_vec());
        symmetric &= h(GridId::Zero, GridId::One)? == h(GridId::One, GridId::Zero)?;
        symmetric &= h(GridId::Zero, GridId::Zero)? == h(GridId::One, GridId::One)?;
    }
    checks.push(Check::flag(
        7,
        "H(0,1) = H(1,0), H(0,0) = H(1,1) bitwise",
        symmetric,
    ));

    // 8. constant data end to end
    let constant = Data::new(&vec![1.5; nodes])?;
    let mut worst = 0.0f64;
    let ts = crate::harmonic::period_points::<f64>(64);
    let mut dev = |s: &HarmonicSeries<f64>| {
        worst = worst.max(max_abs(s.eval_many(&ts).into_iter().map(|v| v - 1.5)));
    };
    for (i1, i2) in pairs() {
        let s = constant.grid(i2);
        for r in 0..=3 {
            let cfg = SplineConfig::new(i1, i2, r, nodes, trunc)?;
            dev(&build_spline(&cfg, s)?);
            dev(&build_kernel_first_kind(&cfg, s)?);
            dev(&build_kernel_second_kind(i1, i2, Parity::of(r), s, trunc)?);
            if r >= 1 {
                dev(&spline_via_convolution_first(&cfg, s)?);
                dev(&spline_via_convolution_second(&cfg, s)?);
            }
        }
    }
    checks.push(Check::new(
        8,
        "constant data stays constant",
        worst,
        CONSTANT_TOL,
    ));

    // 9. discrete transform
    let mut unit = 0.0f64;
    for variant in GridId::ALL {
        let g = make_grid::<f64>(variant, nodes)?;
        for k in 1..=n {
            let kf = k as f64;
            let cc = compute_coeffs(&g.sample(|t| (kf * t).cos())?);
            let sc = compute_coeffs(&g.sample(|t| (kf * t).sin())?);
            for j in 0..=n {
                let want = if j == k { 1.0 } else { 0.0 };
                unit = unit.max((cc.a(j) - want).abs()).max(sc.a(j).abs());
                if j >= 1 {
                    unit = unit.max(cc.b(j).abs()).max((sc.b(j) - want).abs());
                }
            }
        }
    }
    checks.push(Check::new(
        9,
        "unit harmonics recovered",
        unit,
        TRANSFORM_TOL,
    ));
    let mut interp = 0.0f64;
    for s in &data.on {
        let c = compute_coeffs(s);
        interp = interp.max(max_abs(
            s.grid()
                .nodes()
                .iter()
                .zip(s.values())
                .map(|(&t, &f)| c.eval(t) - f),
        ));
    }
    checks.push(Check::new(
        9,
        "T_n interpolates the data",
        interp,
        NODE_INTERPOLATION_TOL,
    ));

    // truncation sensitivity
    let mut sensitivity = Vec::new();
    for m in decade_ladder(trunc.terms()) {
        let t = Truncation::new(m)?;
        let ids = match trend.iter().find(|rep| rep.terms == m) {
            Some(rep) => rep.clone(),
            None => identity_trend(
                data.grid(GridId::Zero),
                data.grid(GridId::One),
                &[m],
                IDENTITY_TOL,
                samples,
            )?
            .remove(0),
        };
        let fam = |f| ids.family(f).map(|c| c.residual).fold(0.0, f64::max);
        sensitivity.push(SensitivityRow {
            terms: m,
            interpolation: worst_interpolation(&data, t)?,
            hat: bspline_oracle_residual(1, nodes, t, 2000, 0.0)?,
            linear_spline: poly_spline_residual(s0, 1, PolySplineKind::Linear, t, samples)?,
            cubic_spline: poly_spline_residual(s0, 3, PolySplineKind::Cubic, t, samples)?,
            identities_stated: fam(IdentityFamily::Stated),
            identities_structural: fam(IdentityFamily::Structural),
        });
    }

    Ok(SuiteReport {
        nodes,
        terms: trunc.terms(),
        data: opts.data.clone(),
        checks,
        sensitivity,
    })
}
