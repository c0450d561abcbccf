//! Adaptive Gauss-Kronrod integration on a finite interval.
//!
//! Globally adaptive: the subinterval with the largest error estimate is
//! bisected until the summed error meets `max(abs_tol, rel_tol * |I|)`.
//! Every subinterval remembers how many bisections produced it; running
//! into `max_depth` is reported as a convergence failure.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// Tolerances for every integral evaluated by the crate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_depth: u32,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_depth: 60,
        }
    }
}

impl QuadratureConfig {
    pub fn new(abs_tol: f64, rel_tol: f64, max_depth: u32) -> Result<Self> {
        let cfg = QuadratureConfig {
            abs_tol,
            rel_tol,
            max_depth,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return Err(domain(format!(
                "abs_tol = {} must be positive",
                self.abs_tol
            )));
        }
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(domain(format!(
                "rel_tol = {} must be positive",
                self.rel_tol
            )));
        }
        if self.max_depth < 10 {
            return Err(domain(format!(
                "max_depth = {} must be at least 10",
                self.max_depth
            )));
        }
        Ok(())
    }
}

/// Result of a successful integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error_bound: f64,
    pub intervals: usize,
}

// Upper bound on live subintervals, independent of max_depth.
const MAX_INTERVALS: usize = 200_000;

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// One application of the 21-point Kronrod rule with its embedded
/// 10-point Gauss rule. Returns (integral, error estimate).
fn gk21<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);

    let mut res_k = WGK[10] * f_center;
    let mut res_g = 0.0;
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];

    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        // Gauss nodes sit at the odd Kronrod indices.
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }

    let mean = 0.5 * res_k;
    let mut res_asc = WGK[10] * (f_center - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let integral = res_k * half;
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    let mut err = ((res_k - res_g) * half).abs();

    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    (integral, err)
}

#[derive(Debug)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    depth: u32,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    // Largest error first; ties broken by position so the order is total.
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

/// Integrate `f` over `[a, b]`.
///
/// The result is deterministic for a fixed integrand and configuration.
/// `a > b` is allowed and flips the sign; `a == b` gives zero.
pub fn quad_adaptive<F>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<Estimate>
where
    F: Fn(f64) -> f64,
{
    cfg.validate()?;
    if !(a.is_finite() && b.is_finite()) {
        return Err(domain("integration limits must be finite"));
    }
    if a == b {
        return Ok(Estimate {
            value: 0.0,
            error_bound: 0.0,
            intervals: 0,
        });
    }
    if a > b {
        let est = quad_adaptive(f, b, a, cfg)?;
        return Ok(Estimate {
            value: -est.value,
            ..est
        });
    }

    let (value, error) = gk21(&f, a, b);
    if !value.is_finite() {
        return Err(domain(format!("integrand is not finite on [{a}, {b}]")));
    }
    let mut heap = BinaryHeap::new();
    heap.push(Segment {
        a,
        b,
        value,
        error,
        depth: 0,
    });
    let mut total = value;
    let mut total_err = error;

    loop {
        let tolerance = cfg.abs_tol.max(cfg.rel_tol * total.abs());
        if total_err <= tolerance {
            break;
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if worst.depth >= cfg.max_depth
            || heap.len() + 2 > MAX_INTERVALS
            || mid <= worst.a
            || mid >= worst.b
        {
            return Err(Error::Convergence {
                estimate: total,
                error_bound: total_err,
            });
        }
        let (v1, e1) = gk21(&f, worst.a, mid);
        let (v2, e2) = gk21(&f, mid, worst.b);
        if !(v1.is_finite() && v2.is_finite()) {
            return Err(domain(format!(
                "integrand is not finite on [{}, {}]",
                worst.a, worst.b
            )));
        }
        total += v1 + v2 - worst.value;
        total_err += e1 + e2 - worst.error;
        let depth = worst.depth + 1;
        heap.push(Segment {
            a: worst.a,
            b: mid,
            value: v1,
            error: e1,
            depth,
        });
        heap.push(Segment {
            a: mid,
            b: worst.b,
            value: v2,
            error: e2,
            depth,
        });
    }

    // Re-sum to shed the drift of the running updates.
    let intervals = heap.len();
    let (mut value, mut error_bound) = (0.0, 0.0);
    let mut segments = heap.into_vec();
    segments.sort_by(|l, r| l.a.total_cmp(&r.a));
    for s in &segments {
        value += s.value;
        error_bound += s.error;
    }
    Ok(Estimate {
        value,
        error_bound,
        intervals,
    })
}

/// Convenience wrapper returning only the value.
pub fn integrate<F>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    quad_adaptive(f, a, b, cfg).map(|e| e.value)
}
