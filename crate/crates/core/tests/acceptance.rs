//! Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::f64::consts::{PI, TAU};
use std::process::ExitCode;
use std::time::Instant;

use trigspline::harmonic::period_points;
use trigspline::multipliers::MultiplierTable;
use trigspline::oracles::{
    quadrature_convolve, CardinalBSpline, PeriodicPolySpline, PolySplineKind,
};
use trigspline::spline::{
    build_bspline_first_kind, build_bspline_second_kind, build_kernel_first_kind,
    build_kernel_second_kind, build_spline, spline_via_convolution_first,
    spline_via_convolution_second, Parity, SplineConfig,
};
use trigspline::verify::{identity_trend, trend_is_monotone, IdentityFamily, TREND_FLOOR};
use trigspline::{
    attach_samples, compute_coeffs, convolve, grid_step, make_grid, max_relative_coeff_diff, sigma,
    GridId, HarmonicSeries, SampleSet, Truncation, EXAMPLE_DATA,
};

const M: usize = 10_000;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn pairs() -> Vec<(GridId, GridId)> {
    GridId::ALL
        .into_iter()
        .flat_map(|a| GridId::ALL.into_iter().map(move |b| (a, b)))
        .collect()
}

fn trunc(m: usize) -> Truncation {
    Truncation::new(m).unwrap()
}

fn example_on(variant: GridId) -> SampleSet {
    attach_samples(
        make_grid(variant, EXAMPLE_DATA.len()).unwrap(),
        EXAMPLE_DATA.to_vec(),
    )
    .unwrap()
}

fn max_abs(it: impl IntoIterator<Item = f64>) -> f64 {
    it.into_iter().fold(0.0, |m, v| m.max(v.abs()))
}

fn node_residual(series: &HarmonicSeries, s: &SampleSet) -> f64 {
    let vals = series.eval_many(s.grid().nodes());
    max_abs(vals.iter().zip(s.values()).map(|(v, f)| v - f))
}

fn interpolation() -> Outcome {
    let tol = 1e-8;
    let mut worst = 0.0f64;
    let mut count = 0;
    let sources: [fn(f64) -> f64; 2] = [f64::cos, |t| (2.0 * t).sin()];
    for nodes in [5, 9, 13] {
        for (i1, i2) in pairs() {
            let mut sets = vec![];
            for f in sources {
                sets.push(make_grid(i2, nodes).unwrap().sample(f).unwrap());
            }
            if nodes == EXAMPLE_DATA.len() {
                sets.push(example_on(i2));
            }
            for s in &sets {
                for r in 0..=5 {
                    let cfg = SplineConfig::new(i1, i2, r, nodes, trunc(M)).unwrap();
                    worst = worst.max(node_residual(&build_spline(&cfg, s).unwrap(), s));
                    count += 1;
                }
            }
        }
    }
    outcome(
        worst <= tol,
        format!("{count} splines, max node error {worst:.3e} (tol {tol:.0e})"),
    )
}

fn trapezoid(series: &HarmonicSeries, points: usize) -> f64 {
    series.sample_period(points).iter().sum::<f64>() * TAU / points as f64
}

fn normalization() -> Outcome {
    let points = 4096;
    let nodes = 9;
    // Largest M whose harmonics all stay below the trapezoid's aliasing limit.
    let quad_m = (points - 1 - (nodes - 1) / 2) / nodes;
    let mut coeff = 0.0f64;
    let mut quad = 0.0f64;
    for r in 0..=3 {
        let mut series = vec![(
            build_bspline_first_kind::<f64>(r, nodes, trunc(M)).unwrap(),
            build_bspline_first_kind::<f64>(r, nodes, trunc(quad_m)).unwrap(),
        )];
        for (i1, i2) in pairs() {
            series.push((
                build_bspline_second_kind(i1, i2, r, nodes, trunc(M)).unwrap(),
                build_bspline_second_kind(i1, i2, r, nodes, trunc(quad_m)).unwrap(),
            ));
        }
        for (full, band) in &series {
            coeff = coeff.max((full.integrate_period() - 1.0).abs());
            quad = quad.max((trapezoid(band, points) - 1.0).abs());
        }
    }
    outcome(
        coeff <= 1e-14 && quad <= 1e-6,
        format!("coefficient route {coeff:.3e} (tol 1e-14), {points}-point trapezoid at M={quad_m} {quad:.3e} (tol 1e-6)"),
    )
}

fn convolution() -> Outcome {
    let nodes = EXAMPLE_DATA.len();
    let mut first = 0.0f64;
    let mut second = 0.0f64;
    for (i1, i2) in pairs() {
        let s = example_on(i2);
        for r in 1..=3 {
            let cfg = SplineConfig::new(i1, i2, r, nodes, trunc(M)).unwrap();
            let direct = build_spline(&cfg, &s).unwrap();
            first = first.max(max_relative_coeff_diff(
                &direct,
                &spline_via_convolution_first(&cfg, &s).unwrap(),
            ));
            second = second.max(max_relative_coeff_diff(
                &direct,
                &spline_via_convolution_second(&cfg, &s).unwrap(),
            ));
        }
    }
    // The quadrature side is a direct trapezoid sum of the two factors, exact
    // for band-limited factors, so a short truncation keeps it cheap.
    let small = trunc(20);
    let mut quad = 0.0f64;
    for (i1, i2) in pairs() {
        let s = example_on(i2);
        for r in 1..=3 {
            let cfg = SplineConfig::new(i1, i2, r, nodes, small).unwrap();
            let factors = [
                (
                    build_kernel_first_kind(&cfg, &s).unwrap(),
                    build_bspline_first_kind(r - 1, nodes, small).unwrap(),
                ),
                (
                    build_kernel_second_kind(i1, i2, Parity::of(r), &s, small).unwrap(),
                    build_bspline_second_kind(i1, i2, r - 1, nodes, small).unwrap(),
                ),
            ];
            for (a, b) in &factors {
                let conv = convolve(a, b);
                let points = 2 * (a.max_frequency() + b.max_frequency()) as usize + 2;
                for t in period_points::<f64>(64) {
                    let q = quadrature_convolve(a, b, t, points).unwrap();
                    quad = quad.max((conv.eval(t) - q).abs() / q.abs().max(1.0));
                }
            }
        }
    }
    outcome(
        first <= 1e-10 && second <= 1e-10 && quad <= 1e-9,
        format!("first kind {first:.3e}, second kind {second:.3e} (tol 1e-10), quadrature {quad:.3e} (tol 1e-9)"),
    )
}

fn identities() -> Outcome {
    let tol = 1e-3;
    let ladder = [100, 1_000, M];
    let trend = identity_trend(
        &example_on(GridId::Zero),
        &example_on(GridId::One),
        &ladder,
        tol,
        1000,
    )
    .unwrap();
    let last = trend.last().unwrap();
    let mut failing = vec![];
    let mut stated_worst = 0.0f64;
    for (idx, c) in last.checks.iter().enumerate() {
        if c.family != IdentityFamily::Stated {
            continue;
        }
        stated_worst = stated_worst.max(c.residual);
        let series: Vec<f64> = trend.iter().map(|rep| rep.checks[idx].residual).collect();
        let monotone = trend_is_monotone(&series, TREND_FLOOR);
        if !c.passed || !monotone {
            failing.push(format!(
                "{} ({:.3e}{})",
                c.label,
                c.residual,
                if monotone { "" } else { ", non-monotone" }
            ));
        }
        println!(
            "    {:<40} M=1e2..1e4: {:.3e} {:.3e} {:.3e}",
            c.label, series[0], series[1], series[2]
        );
    }
    let structural = last
        .family(IdentityFamily::Structural)
        .map(|c| c.residual)
        .fold(0.0, f64::max);
    let mut detail = format!("stated max {stated_worst:.3e} (tol {tol:.0e}); shift-corrected structural max {structural:.3e}");
    if !failing.is_empty() {
        detail.push_str(&format!("; failing: {}", failing.join(", ")));
    }
    outcome(failing.is_empty(), detail)
}

fn bspline_residual(order: u32, nodes: usize, exclude: f64) -> f64 {
    let br = build_bspline_first_kind::<f64>(order, nodes, trunc(M)).unwrap();
    let h = grid_step::<f64>(nodes).unwrap();
    let oracle = CardinalBSpline::new(order as usize, h);
    let ts: Vec<f64> = (0..=2000)
        .map(|i| -PI + TAU * i as f64 / 2000.0)
        .filter(|&t| exclude == 0.0 || (t.abs() - h / 2.0).abs() >= exclude)
        .collect();
    let vals = br.eval_many(&ts);
    max_abs(
        ts.iter()
            .zip(vals)
            .map(|(&t, v)| v - oracle.eval_periodic(t)),
    )
}

fn bsplines() -> Outcome {
    let nodes = 9;
    let h = grid_step::<f64>(nodes).unwrap();
    let hat = bspline_residual(1, nodes, 0.0);
    let cubic = bspline_residual(3, nodes, 0.0);
    let boxed = bspline_residual(0, nodes, h / 4.0);
    outcome(
        hat <= 1e-3 && cubic <= 1e-4 && boxed <= 1e-2,
        format!("degree 1 {hat:.3e} (tol 1e-3), degree 3 {cubic:.3e} (tol 1e-4), box {boxed:.3e} (tol 1e-2)"),
    )
}

fn poly_splines() -> Outcome {
    let s = example_on(GridId::Zero);
    let ts = period_points::<f64>(1000);
    let mut res = vec![];
    for (order, kind) in [(1, PolySplineKind::Linear), (3, PolySplineKind::Cubic)] {
        let cfg = SplineConfig::new(GridId::Zero, GridId::Zero, order, s.len(), trunc(M)).unwrap();
        let st = build_spline(&cfg, &s).unwrap();
        let oracle = PeriodicPolySpline::new(kind, s.clone()).unwrap();
        let vals = st.eval_many(&ts);
        res.push(max_abs(
            ts.iter().zip(vals).map(|(&t, v)| v - oracle.eval(t)),
        ));
    }
    outcome(
        res.iter().all(|&r| r <= 1e-3),
        format!(
            "broken line {:.3e}, C2 cubic {:.3e} (tol 1e-3)",
            res[0], res[1]
        ),
    )
}

fn multiplier_algebra() -> Outcome {
    let mut comp = 0.0f64;
    let mut symmetric = true;
    for nodes in [5, 9, 13] {
        for x in 1..=200u64 {
            for a in -1..=4 {
                for b in -1..=4 {
                    let lhs = sigma::<f64>(x, a, nodes) * sigma::<f64>(x, b, nodes);
                    let rhs = sigma::<f64>(x, a + b + 1, nodes);
                    let scale = lhs.abs().max(rhs.abs());
                    if scale > 0.0 {
                        comp = comp.max((lhs - rhs).abs() / scale);
                    }
                }
            }
        }
        for r in 0..=5 {
            let h = |a, b| {
                MultiplierTable::<f64>::new(a, b, r, nodes, trunc(M))
                    .unwrap()
                    .values()
                    .to_vec()
            };
            symmetric &= h(GridId::Zero, GridId::One) == h(GridId::One, GridId::Zero);
            symmetric &= h(GridId::Zero, GridId::Zero) == h(GridId::One, GridId::One);
        }
    }
    outcome(
        comp <= 1e-14 && symmetric,
        format!("composition {comp:.3e} (tol 1e-14), parity symmetry exact: {symmetric}"),
    )
}

fn constant_data() -> Outcome {
    let c = 2.75;
    let ts = period_points::<f64>(512);
    let mut worst = 0.0f64;
    let mut dev = |s: &HarmonicSeries| {
        worst = worst.max(max_abs(s.eval_many(&ts).into_iter().map(|v| v - c)));
    };
    for nodes in [5, 9, 13] {
        for (i1, i2) in pairs() {
            let s = make_grid(i2, nodes).unwrap().sample(|_| c).unwrap();
            for r in 0..=3 {
                let cfg = SplineConfig::new(i1, i2, r, nodes, trunc(M)).unwrap();
                dev(&build_spline(&cfg, &s).unwrap());
                dev(&build_kernel_first_kind(&cfg, &s).unwrap());
                dev(&build_kernel_second_kind(i1, i2, Parity::of(r), &s, trunc(M)).unwrap());
                if r >= 1 {
                    dev(&spline_via_convolution_first(&cfg, &s).unwrap());
                    dev(&spline_via_convolution_second(&cfg, &s).unwrap());
                }
            }
        }
    }
    outcome(
        worst <= 1e-12,
        format!("max deviation {worst:.3e} (tol 1e-12)"),
    )
}

fn discrete_transform() -> Outcome {
    let mut unit = 0.0f64;
    let mut interp = 0.0f64;
    for nodes in [3, 5, 9, 13] {
        let n = (nodes - 1) / 2;
        for variant in GridId::ALL {
            let g = make_grid::<f64>(variant, nodes).unwrap();
            for k in 1..=n {
                let kf = k as f64;
                let cc = compute_coeffs(&g.sample(|t| (kf * t).cos()).unwrap());
                let sc = compute_coeffs(&g.sample(|t| (kf * t).sin()).unwrap());
                for j in 0..=n {
                    let want = if j == k { 1.0 } else { 0.0 };
                    unit = unit.max((cc.a(j) - want).abs()).max(sc.a(j).abs());
                    if j >= 1 {
                        unit = unit.max(cc.b(j).abs()).max((sc.b(j) - want).abs());
                    }
                }
            }
            let mut sets = vec![
                g.sample(|t| (3.0 * t).exp().sin()).unwrap(),
                g.sample(|t| (t - PI).abs()).unwrap(),
                attach_samples(
                    g.clone(),
                    (0..nodes).map(|i| ((i * 7919) % 13) as f64 - 6.0).collect(),
                )
                .unwrap(),
            ];
            if nodes == EXAMPLE_DATA.len() {
                sets.push(example_on(variant));
            }
            for s in &sets {
                let c = compute_coeffs(s);
                interp = interp.max(max_abs(
                    s.grid()
                        .nodes()
                        .iter()
                        .zip(s.values())
                        .map(|(&t, &f)| c.eval(t) - f),
                ));
            }
        }
    }
    outcome(
        unit <= 1e-12 && interp <= 1e-10,
        format!("unit vectors {unit:.3e} (tol 1e-12), node interpolation {interp:.3e} (tol 1e-10)"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("interpolation", interpolation),
        ("normalization", normalization),
        ("convolution representations", convolution),
        ("kernel identities", identities),
        ("B-spline coincidence", bsplines),
        ("polynomial spline coincidence", poly_splines),
        ("multiplier algebra", multiplier_algebra),
        ("constant data", constant_data),
        ("discrete transform", discrete_transform),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let verdict = if out.passed { "PASS" } else { "FAIL" };
        println!(
            "criterion {} {name}: {verdict} ({}) [{:.1}s]",
            i + 1,
            out.detail,
            start.elapsed().as_secs_f64()
        );
        failed += usize::from(!out.passed);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
