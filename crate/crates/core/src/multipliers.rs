//! Riemann convergence multipliers and the interpolation multiplier.
//!
//! ```text
//! σ_k(r) = (sin(πk/N) / (πk/N))^(1+r),         σ_0(r) = 1
//! H_k    = σ_k(r) + Σ_{m≥1} (−1)^(m(r+1+I1+I2)) [σ_{mN+k}(r) + σ_{mN−k}(r)]
//! ```
//!
//! The aliasing sum is truncated at `m = M`. `H_k` depends on the grid pair
//! only through the parity of `I1 + I2`, which the cache key reflects.

use std::any::{Any, TypeId};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::grid::{half_order, GridId};
use crate::scalar::Scalar;
use crate::sum::CompensatedSum;

/// Default number of aliasing terms `M` kept from every infinite chain.
pub const DEFAULT_TERMS: usize = 10_000;

/// Below this magnitude `H_k` is treated as non-invertible.
pub const DEGENERATE_THRESHOLD: f64 = 1e-12;

/// How many `m`-terms of each aliasing chain are retained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Truncation {
    terms: usize,
    tail_tol: f64,
}

impl Truncation {
    pub fn new(terms: usize) -> Result<Self> {
        if terms == 0 {
            return Err(Error::EmptyTruncation);
        }
        Ok(Self {
            terms,
            tail_tol: 0.0,
        })
    }

    /// Attaches an advisory tail tolerance reported by diagnostics.
    pub fn with_tail_tol(mut self, tail_tol: f64) -> Self {
        self.tail_tol = tail_tol.max(0.0);
        self
    }

    /// `M`.
    pub fn terms(&self) -> usize {
        self.terms
    }

    pub fn tail_tol(&self) -> f64 {
        self.tail_tol
    }
}

impl Default for Truncation {
    fn default() -> Self {
        Self {
            terms: DEFAULT_TERMS,
            tail_tol: 0.0,
        }
    }
}

/// Riemann convergence multiplier `σ_freq(r)` for an `N`-point grid.
///
/// Frequencies are reduced as `freq = qN + s`, so the sine is always taken of
/// an angle in `[0, π)` and `sin(π freq/N) = (−1)^q sin(πs/N)` carries no
/// cancellation. Multiples of `N` give exactly zero for `r > −1`; `r = −1`
/// gives 1 for every frequency.
///
/// # Panics
/// If `r < −1`.
pub fn sigma<T: Scalar>(freq: u64, r: i32, nodes: usize) -> T {
    assert!(r >= -1, "convergence multiplier order must be at least -1");
    if r == -1 || freq == 0 {
        return T::one();
    }
    let n = nodes as u64;
    let (q, s) = (freq / n, freq % n);
    if s == 0 {
        return T::zero();
    }
    let nf = T::from_index(n);
    let mut num = (T::PI() * T::from_index(s) / nf).sin();
    if q % 2 == 1 {
        num = -num;
    }
    let x = T::PI() * T::from_index(freq) / nf;
    (num / x).powi(r + 1)
}

/// `true` when the sign `(−1)^(m·exponent)` alternates with `m`.
#[inline]
pub(crate) fn alternates(exponent: u32) -> bool {
    exponent % 2 == 1
}

#[inline]
pub(crate) fn chain_sign<T: Scalar>(m: u64, alternating: bool) -> T {
    if alternating && m % 2 == 1 {
        -T::one()
    } else {
        T::one()
    }
}

/// Partial sum of `H_k` with `terms` aliasing terms, `terms` possibly zero.
///
/// Consecutive `m` are grouped in pairs before entering the compensated
/// accumulator.
pub(crate) fn multiplier_partial<T: Scalar>(
    k: usize,
    alternating: bool,
    r: u32,
    nodes: usize,
    terms: usize,
) -> T {
    let r = r as i32;
    let (k, n) = (k as u64, nodes as u64);
    let term = |m: u64| -> T {
        chain_sign::<T>(m, alternating)
            * (sigma::<T>(m * n + k, r, nodes) + sigma::<T>(m * n - k, r, nodes))
    };
    let mut acc = CompensatedSum::new();
    acc.add(sigma::<T>(k, r, nodes));
    let terms = terms as u64;
    let mut m = 1;
    while m <= terms {
        if m < terms {
            acc.add(term(m) + term(m + 1));
        } else {
            acc.add(term(m));
        }
        m += 2;
    }
    acc.value()
}

fn check_invertible<T: Scalar>(k: usize, h: T) -> Result<T> {
    if h.abs() < T::lit(DEGENERATE_THRESHOLD) || !h.is_finite() {
        return Err(Error::DegenerateMultiplier {
            k,
            value: h.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(h)
}

/// Interpolation multiplier `H_k(I1, I2, r)` truncated at `trunc.terms()`.
///
/// # Panics
/// If `k` is outside `1..=n`.
pub fn interp_multiplier<T: Scalar>(
    k: usize,
    stitching: GridId,
    interpolation: GridId,
    r: u32,
    nodes: usize,
    trunc: Truncation,
) -> Result<T> {
    let n = half_order(nodes)?;
    assert!((1..=n).contains(&k), "harmonic index {k} outside 1..={n}");
    let alternating =
        alternates(r + 1 + u32::from(stitching.value()) + u32::from(interpolation.value()));
    check_invertible(
        k,
        multiplier_partial(k, alternating, r, nodes, trunc.terms()),
    )
}

/// Upper bound on `|H_k(∞) − H_k(M)|`, valid for every `k` and grid pair.
///
/// Uses `|σ_{mN±k}(r)| ≤ (π(m − 1/2))^−(1+r)` for `r ≥ 1`, and for `r = 0` the
/// fact that the `mN ± k` pair already cancels to `O(1/m²)`.
pub fn tail_bound(r: u32, nodes: usize, terms: usize) -> f64 {
    let n = ((nodes - 1) / 2) as f64;
    let m = terms as f64;
    let pi = std::f64::consts::PI;
    if r == 0 {
        2.0 * n / (pi * nodes as f64 * (m + 0.5))
    } else {
        let rf = f64::from(r);
        2.0 / pi.powf(rf + 1.0) * (m - 0.5).powf(-rf) / rf
    }
}

type CacheKey = (TypeId, bool, u32, usize, usize);
type CacheMap = HashMap<CacheKey, Arc<dyn Any + Send + Sync>>;

fn cache() -> &'static Mutex<CacheMap> {
    static CACHE: OnceLock<Mutex<CacheMap>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached_multipliers<T: Scalar>(
    alternating: bool,
    r: u32,
    nodes: usize,
    terms: usize,
) -> Arc<Vec<T>> {
    let key = (TypeId::of::<T>(), alternating, r, nodes, terms);
    if let Some(hit) = cache().lock().expect("multiplier cache poisoned").get(&key) {
        if let Ok(v) = Arc::clone(hit).downcast::<Vec<T>>() {
            return v;
        }
    }
    // Computed outside the lock; concurrent writers store identical tables.
    let n = (nodes - 1) / 2;
    let table: Arc<Vec<T>> = Arc::new(
        (1..=n)
            .map(|k| multiplier_partial(k, alternating, r, nodes, terms))
            .collect(),
    );
    cache()
        .lock()
        .expect("multiplier cache poisoned")
        .insert(key, Arc::clone(&table) as Arc<dyn Any + Send + Sync>);
    table
}

/// `H_1 … H_n` for one `(I1, I2, r, N, M)` configuration.
#[derive(Debug, Clone)]
pub struct MultiplierTable<T> {
    stitching: GridId,
    interpolation: GridId,
    r: u32,
    nodes: usize,
    terms: usize,
    values: Arc<Vec<T>>,
}

impl<T: Scalar> MultiplierTable<T> {
    pub fn new(
        stitching: GridId,
        interpolation: GridId,
        r: u32,
        nodes: usize,
        trunc: Truncation,
    ) -> Result<Self> {
        half_order(nodes)?;
        let alternating =
            alternates(r + 1 + u32::from(stitching.value()) + u32::from(interpolation.value()));
        let values = cached_multipliers::<T>(alternating, r, nodes, trunc.terms());
        for (i, &h) in values.iter().enumerate() {
            check_invertible(i + 1, h)?;
        }
        Ok(Self {
            stitching,
            interpolation,
            r,
            nodes,
            terms: trunc.terms(),
            values,
        })
    }

    /// `H_k` for `1 ≤ k ≤ n`.
    pub fn get(&self, k: usize) -> T {
        self.values[k - 1]
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn stitching(&self) -> GridId {
        self.stitching
    }

    pub fn interpolation(&self) -> GridId {
        self.interpolation
    }

    pub fn order(&self) -> u32 {
        self.r
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn terms(&self) -> usize {
        self.terms
    }

    pub fn tail_bound(&self) -> f64 {
        tail_bound(self.r, self.nodes, self.terms)
    }
}
