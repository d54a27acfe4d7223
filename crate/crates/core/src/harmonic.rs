//! Sparse real trigonometric series
//!
//! ```text
//! F(t) = c/2 + Σ_ω (A_ω cos ωt + B_ω sin ωt),   ω ≥ 1
//! ```
//!
//! and the algebra the spline objects are assembled with.
//!
//! # Periodic convolution
//!
//! `(F ⋆ G)(t) = ∫_0^{2π} F(t − v) G(v) dv` acts frequency by frequency.
//! Writing each harmonic as `Re((A − iB) e^{iωt})` and using
//! `∫_0^{2π} cos²(ωv) dv = ∫_0^{2π} sin²(ωv) dv = π`, the product of the
//! complex amplitudes picks up a factor π:
//!
//! ```text
//! A' = π (A_F A_G − B_F B_G),   B' = π (A_F B_G + B_F A_G)
//! ```
//!
//! For the constant terms, `∫_0^{2π} (c_F/2)(c_G/2) dv = π c_F c_G / 2`,
//! which in the `c/2` convention is `c' = π c_F c_G`. A frequency carried
//! by only one operand integrates to zero.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;
use crate::sum::CompensatedSum;

/// Magnitude below which an amplitude is stored as zero.
pub const AMPLITUDE_FLOOR: f64 = 1e-300;

/// Re-anchor the phasor recurrence with a direct `sin_cos` this often.
const REANCHOR_EVERY: usize = 64;

#[derive(Debug, Clone, PartialEq, Default)]
pub struct HarmonicSeries<T> {
    constant: T,
    terms: BTreeMap<u64, (T, T)>,
    truncation: Option<usize>,
}

impl<T: Scalar> HarmonicSeries<T> {
    /// Series with constant coefficient `constant` (the function value is
    /// `constant / 2`) and no harmonics.
    pub fn constant(constant: T) -> Self {
        Self {
            constant,
            terms: BTreeMap::new(),
            truncation: None,
        }
    }

    pub fn zero() -> Self {
        Self::constant(T::zero())
    }

    /// Builds a series from `(ω, cos amplitude, sin amplitude)` triples.
    /// Repeated frequencies accumulate.
    pub fn from_terms<I: IntoIterator<Item = (u64, T, T)>>(constant: T, terms: I) -> Self {
        let mut s = Self::constant(constant);
        for (w, c, si) in terms {
            s.add_term(w, c, si);
        }
        s
    }

    /// Records the truncation order `M` the series was built with.
    pub fn with_truncation(mut self, terms: usize) -> Self {
        self.truncation = Some(terms);
        self
    }

    pub fn truncation(&self) -> Option<usize> {
        self.truncation
    }

    fn floor() -> T {
        T::lit(AMPLITUDE_FLOOR).max(T::min_positive_value())
    }

    fn clean(x: T) -> T {
        if x.abs() < Self::floor() {
            T::zero()
        } else {
            x
        }
    }

    /// Adds `c cos ωt + s sin ωt`.
    ///
    /// # Panics
    /// If `freq == 0`; the constant term is set through [`Self::constant`].
    pub fn add_term(&mut self, freq: u64, cos_amp: T, sin_amp: T) {
        assert!(freq >= 1, "harmonic frequencies start at 1");
        let entry = self.terms.entry(freq).or_insert((T::zero(), T::zero()));
        entry.0 = Self::clean(entry.0 + cos_amp);
        entry.1 = Self::clean(entry.1 + sin_amp);
        if entry.0 == T::zero() && entry.1 == T::zero() {
            self.terms.remove(&freq);
        }
    }

    /// The `c` in the `c/2` constant term.
    pub fn const_coeff(&self) -> T {
        self.constant
    }

    pub fn term(&self, freq: u64) -> Option<(T, T)> {
        self.terms.get(&freq).copied()
    }

    /// Harmonics in ascending frequency.
    pub fn terms(&self) -> impl Iterator<Item = (u64, T, T)> + '_ {
        self.terms.iter().map(|(&w, &(c, s))| (w, c, s))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_frequency(&self) -> u64 {
        self.terms.keys().next_back().copied().unwrap_or(0)
    }

    pub fn has_sine_terms(&self) -> bool {
        self.terms.values().any(|&(_, s)| s != T::zero())
    }

    /// Value at `t`.
    ///
    /// Harmonics are visited in ascending order; `e^{iωt}` is advanced by
    /// multiplication when consecutive frequencies differ by one or two and
    /// recomputed directly otherwise and every few dozen steps.
    pub fn eval(&self, t: T) -> T {
        let (s1, c1) = t.sin_cos();
        let (c2, s2) = (c1 * c1 - s1 * s1, T::lit(2.0) * s1 * c1);
        let mut acc = CompensatedSum::new();
        acc.add(self.constant / T::lit(2.0));
        let (mut zc, mut zs) = (T::one(), T::zero());
        let mut prev = 0u64;
        for (i, (&w, &(a, b))) in self.terms.iter().enumerate() {
            let gap = w - prev;
            if i % REANCHOR_EVERY == 0 || gap > 2 {
                let (s, c) = (T::from_index(w) * t).sin_cos();
                zc = c;
                zs = s;
            } else {
                let (mc, ms) = if gap == 1 { (c1, s1) } else { (c2, s2) };
                let nc = zc * mc - zs * ms;
                zs = zc * ms + zs * mc;
                zc = nc;
            }
            prev = w;
            acc.add(a * zc + b * zs);
        }
        acc.value()
    }

    /// Values at many points, evaluated in parallel.
    pub fn eval_many(&self, ts: &[T]) -> Vec<T> {
        ts.par_iter().map(|&t| self.eval(t)).collect()
    }

    /// Values at `count` equispaced points `2πi/count`, `i = 0..count`.
    pub fn sample_period(&self, count: usize) -> Vec<T> {
        self.eval_many(&period_points(count))
    }

    /// Multiplies every coefficient by `factor`.
    pub fn scaled(&self, factor: T) -> Self {
        linear_combine(&[(factor, self)])
    }

    /// Coefficients of `t ↦ self(t + s)`.
    pub fn shift(&self, s: T) -> Self {
        let mut out = Self::constant(self.constant);
        out.truncation = self.truncation;
        for (&w, &(a, b)) in &self.terms {
            let (sn, cs) = (T::from_index(w) * s).sin_cos();
            out.add_term(w, a * cs + b * sn, b * cs - a * sn);
        }
        out
    }

    /// `∫_0^{2π} self(t) dt = π c`.
    pub fn integrate_period(&self) -> T {
        T::PI() * self.constant
    }
}

/// `2πi/count` for `i = 0..count`.
pub fn period_points<T: Scalar>(count: usize) -> Vec<T> {
    let n = T::from_index(count as u64);
    (0..count as u64)
        .map(|i| T::two_pi() * T::from_index(i) / n)
        .collect()
}

pub fn eval<T: Scalar>(series: &HarmonicSeries<T>, t: T) -> T {
    series.eval(t)
}

/// Periodic convolution `∫_0^{2π} a(t − v) b(v) dv`.
pub fn convolve<T: Scalar>(a: &HarmonicSeries<T>, b: &HarmonicSeries<T>) -> HarmonicSeries<T> {
    let pi = T::PI();
    let (small, large, swapped) = if a.terms.len() <= b.terms.len() {
        (a, b, false)
    } else {
        (b, a, true)
    };
    let mut out = HarmonicSeries::constant(pi * a.constant * b.constant);
    out.truncation = match (a.truncation, b.truncation) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    };
    for (&w, &(sc, ss)) in &small.terms {
        if let Some(&(lc, ls)) = large.terms.get(&w) {
            let ((ac, as_), (bc, bs)) = if swapped {
                ((lc, ls), (sc, ss))
            } else {
                ((sc, ss), (lc, ls))
            };
            out.add_term(w, pi * (ac * bc - as_ * bs), pi * (ac * bs + as_ * bc));
        }
    }
    out
}

pub fn shift<T: Scalar>(series: &HarmonicSeries<T>, s: T) -> HarmonicSeries<T> {
    series.shift(s)
}

pub fn integrate_period<T: Scalar>(series: &HarmonicSeries<T>) -> T {
    series.integrate_period()
}

/// Frequency-wise `Σ c_i · S_i`.
pub fn linear_combine<T: Scalar>(pairs: &[(T, &HarmonicSeries<T>)]) -> HarmonicSeries<T> {
    let mut constant = CompensatedSum::new();
    let mut merged: BTreeMap<u64, (CompensatedSum<T>, CompensatedSum<T>)> = BTreeMap::new();
    for &(coef, s) in pairs {
        constant.add(coef * s.constant);
        for (&w, &(a, b)) in &s.terms {
            let e = merged.entry(w).or_default();
            e.0.add(coef * a);
            e.1.add(coef * b);
        }
    }
    let mut out = HarmonicSeries::constant(constant.value());
    out.truncation = pairs.iter().filter_map(|(_, s)| s.truncation).min();
    for (w, (a, b)) in merged {
        out.add_term(w, a.value(), b.value());
    }
    out
}

/// `max |a(t) − b(t)|` over `samples` equispaced points of `[0, 2π)`.
///
/// # Panics
/// If `samples < 2`.
pub fn sup_diff<T: Scalar>(a: &HarmonicSeries<T>, b: &HarmonicSeries<T>, samples: usize) -> T {
    assert!(samples >= 2, "sup_diff needs at least two sample points");
    let diff = linear_combine(&[(T::one(), a), (-T::one(), b)]);
    diff.sample_period(samples)
        .into_iter()
        .fold(T::zero(), |m, v| m.max(v.abs()))
}

/// Largest relative discrepancy between two coefficient maps, over the
/// constant term and every amplitude present in either series. Amplitudes
/// that are zero in both count as equal; one present in a single series
/// counts as a relative difference of 1.
pub fn max_relative_coeff_diff<T: Scalar>(a: &HarmonicSeries<T>, b: &HarmonicSeries<T>) -> T {
    fn rel<T: Scalar>(x: T, y: T) -> T {
        let scale = x.abs().max(y.abs());
        if scale == T::zero() {
            T::zero()
        } else {
            (x - y).abs() / scale
        }
    }
    let zero = (T::zero(), T::zero());
    let mut worst = rel(a.constant, b.constant);
    for w in a.terms.keys().chain(b.terms.keys()) {
        let (ac, as_) = a.terms.get(w).copied().unwrap_or(zero);
        let (bc, bs) = b.terms.get(w).copied().unwrap_or(zero);
        worst = worst.max(rel(ac, bc)).max(rel(as_, bs));
    }
    worst
}

/// On-disk form: `{"const": c, "terms": [[ω, cos, sin], ...]}`, ascending ω.
#[derive(Debug, Serialize, Deserialize)]
struct SeriesWire<T> {
    #[serde(rename = "const")]
    constant: T,
    terms: Vec<(u64, T, T)>,
}

impl<T: Scalar + Serialize> Serialize for HarmonicSeries<T> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesWire {
            constant: self.constant,
            terms: self.terms().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de, T: Scalar + Deserialize<'de>> Deserialize<'de> for HarmonicSeries<T> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = SeriesWire::<T>::deserialize(deserializer)?;
        if let Some(&(w, _, _)) = wire.terms.iter().find(|t| t.0 == 0) {
            return Err(serde::de::Error::custom(format!(
                "frequency {w} is not positive"
            )));
        }
        Ok(HarmonicSeries::from_terms(wire.constant, wire.terms))
    }
}

impl<T: Scalar + Serialize> HarmonicSeries<T> {
    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string(self)
    }
}

impl<T: Scalar + for<'de> Deserialize<'de>> HarmonicSeries<T> {
    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn cos_w(w: u64) -> HarmonicSeries<f64> {
        HarmonicSeries::from_terms(0.0, [(w, 1.0, 0.0)])
    }

    fn sin_w(w: u64) -> HarmonicSeries<f64> {
        HarmonicSeries::from_terms(0.0, [(w, 0.0, 1.0)])
    }

    /// Direct term-by-term evaluation, independent of the phasor walk.
    fn eval_direct(s: &HarmonicSeries<f64>, t: f64) -> f64 {
        s.const_coeff() / 2.0
            + s.terms()
                .map(|(w, a, b)| a * (w as f64 * t).cos() + b * (w as f64 * t).sin())
                .sum::<f64>()
    }

    /// Trapezoid rule for `∫ a(t − v) b(v) dv`.
    fn trapezoid(a: &HarmonicSeries<f64>, b: &HarmonicSeries<f64>, t: f64, points: usize) -> f64 {
        let dv = 2.0 * PI / points as f64;
        (0..points)
            .map(|j| {
                let v = j as f64 * dv;
                eval_direct(a, t - v) * eval_direct(b, v)
            })
            .sum::<f64>()
            * dv
    }

    fn arb_series(max_freq: u64) -> impl Strategy<Value = HarmonicSeries<f64>> {
        (
            -2.0f64..2.0,
            proptest::collection::vec((1..=max_freq, -1.0f64..1.0, -1.0f64..1.0), 0..12),
        )
            .prop_map(|(c, t)| HarmonicSeries::from_terms(c, t))
    }

    #[test]
    fn basic_evaluation() {
        let s = HarmonicSeries::from_terms(2.0, [(1, 1.0, 0.0)]);
        assert_eq!(s.eval(0.0), 2.0);
        let e = HarmonicSeries::constant(3.0);
        assert_eq!(e.eval(1.7), 1.5);
    }

    #[test]
    fn phasor_walk_matches_direct_evaluation() {
        // Dense band with gaps at multiples of 9, like the spline series.
        let terms = (1..5000u64)
            .filter(|w| w % 9 != 0)
            .map(|w| (w, 1.0 / w as f64, 0.5 / (w as f64).powi(2)));
        let s = HarmonicSeries::from_terms(0.3, terms);
        for i in 0..50 {
            let t = -3.0 + 0.2 * i as f64;
            assert!((s.eval(t) - eval_direct(&s, t)).abs() < 1e-11);
        }
    }

    #[test]
    fn convolution_examples() {
        let one = HarmonicSeries::constant(2.0);
        let c = convolve(&one, &one);
        assert!((c.eval(0.3) - 2.0 * PI).abs() < 1e-14);

        let cc = convolve(&cos_w(3), &cos_w(3));
        let cs = convolve(&cos_w(3), &sin_w(3));
        for i in 0..20 {
            let t = 0.31 * i as f64;
            let q = trapezoid(&cos_w(3), &cos_w(3), t, 14);
            assert!((cc.eval(t) - q).abs() < 1e-12);
            assert!((cc.eval(t) - PI * (3.0 * t).cos()).abs() < 1e-12);
            let q = trapezoid(&cos_w(3), &sin_w(3), t, 14);
            assert!((cs.eval(t) - q).abs() < 1e-12);
            assert!((cs.eval(t) - PI * (3.0 * t).sin()).abs() < 1e-12);
        }
        assert!(convolve(&cos_w(2), &cos_w(5)).is_empty());
    }

    #[test]
    fn shift_examples() {
        let s = HarmonicSeries::from_terms(1.0, [(1, 0.5, -0.25), (4, 2.0, 1.0)]);
        assert_eq!(s.shift(0.0), s);
        let wrapped = s.shift(2.0 * PI);
        assert!(max_relative_coeff_diff(&s, &wrapped) < 1e-12);
        let q = cos_w(1).shift(PI / 2.0);
        let (a, b) = q.term(1).unwrap();
        assert!(a.abs() < 1e-16 && (b + 1.0).abs() < 1e-15);
    }

    #[test]
    fn integration_examples() {
        assert!((HarmonicSeries::constant(1.0 / PI).integrate_period() - 1.0).abs() < 1e-15);
        assert_eq!(HarmonicSeries::<f64>::zero().integrate_period(), 0.0);
    }

    #[test]
    fn sup_diff_examples() {
        let a: HarmonicSeries<f64> = HarmonicSeries::from_terms(1.0, [(2, 0.3, 0.1)]);
        assert_eq!(sup_diff(&a, &a, 100), 0.0);
        let b: HarmonicSeries<f64> = HarmonicSeries::from_terms(1.5, [(2, 0.3, 0.1)]);
        assert!((sup_diff(&a, &b, 100) - 0.25).abs() < 1e-15);
        assert!((sup_diff(&cos_w(1), &HarmonicSeries::zero(), 1000) - 1.0).abs() < 1e-4);
    }

    #[test]
    fn linear_combination_examples() {
        let a = HarmonicSeries::from_terms(1.0, [(2, 0.3, 0.1), (7, -1.0, 0.0)]);
        let z = linear_combine(&[(1.0, &a), (-1.0, &a)]);
        assert!(z.is_empty() && z.const_coeff() == 0.0);
        assert_eq!(
            linear_combine(&[(2.0, &cos_w(1))]).term(1),
            Some((2.0, 0.0))
        );
        let half = linear_combine(&[(0.5, &a), (0.5, &a)]);
        for i in 0..50 {
            let t = 0.123 * i as f64;
            assert!((half.eval(t) - a.eval(t)).abs() < 1e-13);
        }
    }

    #[test]
    fn floor_drops_negligible_amplitudes() {
        let s = HarmonicSeries::from_terms(0.0, [(3, 1e-310, 0.0), (4, 1e-310, 1.0)]);
        assert_eq!(s.term(3), None);
        assert_eq!(s.term(4), Some((0.0, 1.0)));
    }

    #[test]
    fn json_layout() {
        let s = HarmonicSeries::from_terms(0.5, [(3, 1.0, -2.0), (1, 0.25, 0.0)]);
        assert_eq!(
            s.to_json().unwrap(),
            r#"{"const":0.5,"terms":[[1,0.25,0.0],[3,1.0,-2.0]]}"#
        );
        assert!(HarmonicSeries::<f64>::from_json(r#"{"const":0,"terms":[[0,1,1]]}"#).is_err());
    }

    proptest! {
        #[test]
        fn json_round_trip_is_lossless(s in arb_series(500)) {
            let back = HarmonicSeries::<f64>::from_json(&s.to_json().unwrap()).unwrap();
            prop_assert_eq!(back, s);
        }

        #[test]
        fn convolution_commutes(a in arb_series(40), b in arb_series(40)) {
            prop_assert!(max_relative_coeff_diff(&convolve(&a, &b), &convolve(&b, &a)) <= 1e-14);
        }

        #[test]
        fn convolution_matches_trapezoid(a in arb_series(30), b in arb_series(30), t in -4.0f64..4.0) {
            let f = a.max_frequency().max(b.max_frequency()) as usize;
            let q = trapezoid(&a, &b, t, 2 * f + 2);
            let c = convolve(&a, &b).eval(t);
            prop_assert!((c - q).abs() <= 1e-9 * q.abs().max(1.0));
        }

        #[test]
        fn cosine_filter_scales_amplitudes(a in arb_series(30), weights in proptest::collection::vec(-1.0f64..1.0, 30)) {
            let filter = HarmonicSeries::from_terms(
                0.0,
                weights.iter().enumerate().map(|(i, &c)| (i as u64 + 1, c, 0.0)),
            );
            let out = convolve(&a, &filter);
            for (w, ca, sa) in a.terms() {
                let c = weights[w as usize - 1];
                let (co, so) = out.term(w).unwrap_or((0.0, 0.0));
                prop_assert!((co - PI * c * ca).abs() < 1e-14);
                prop_assert!((so - PI * c * sa).abs() < 1e-14);
            }
        }

        #[test]
        fn shift_is_pointwise_translation(a in arb_series(60), s in -7.0f64..7.0, t in -7.0f64..7.0) {
            prop_assert!((a.shift(s).eval(t) - a.eval(t + s)).abs() < 1e-12);
        }

        #[test]
        fn shift_round_trip(a in arb_series(60), s in -7.0f64..7.0) {
            let back = a.shift(s).shift(-s);
            for (w, ca, sa) in a.terms() {
                let (cb, sb) = back.term(w).unwrap_or((0.0, 0.0));
                prop_assert!((ca - cb).abs() < 1e-13 && (sa - sb).abs() < 1e-13);
            }
        }
    }
}
