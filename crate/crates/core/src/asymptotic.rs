//! Asymptotic rate–distance bounds for fixed locality `(r, δ)`.
//!
//! All curves are the `n → ∞` limit lines with the `o(1)` terms dropped,
//! clamped to `[0, 1]`. `δ_n` is the relative distance `d/n`.

use std::fmt::Write as _;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{griesmer_length, kappa_a, kappa_b, LogConvex};
use crate::error::{Error, Result};

/// Absolute tolerance on the objective of the inner minimization.
pub const OBJECTIVE_TOLERANCE: f64 = 1e-6;
/// Grid points used to seed the golden-section search.
pub const SEED_GRID: usize = 1024;
/// Default number of `δ_n` samples.
pub const DEFAULT_GRID: usize = 512;

fn clamp01(x: f64) -> f64 {
    x.clamp(0.0, 1.0)
}

/// `1 - δ_n`.
pub fn singleton(delta_n: f64) -> f64 {
    clamp01(1.0 - delta_n)
}

/// `r/(r+1) (1 - δ_n)`.
pub fn gopalan(delta_n: f64, r: usize) -> f64 {
    clamp01(r as f64 / (r + 1) as f64 * (1.0 - delta_n))
}

/// `r/(r+δ-1) (1 - δ_n)`.
pub fn prakash(delta_n: f64, r: usize, delta: usize) -> f64 {
    clamp01(r as f64 / (r + delta - 1) as f64 * (1.0 - delta_n))
}

/// `κ_B / G(κ_B, δ) · (1 - δ_n)`.
pub fn singleton_g(delta_n: f64, r: usize, delta: usize, q: u32) -> f64 {
    let kb = kappa_b(r, delta, q);
    clamp01(kb as f64 / griesmer_length(kb, delta, q) as f64 * (1.0 - delta_n))
}

/// `κ_A / (r+δ-1) · (1 - δ_n)`.
pub fn abhmt(delta_n: f64, r: usize, delta: usize, q: u32, choice: LogConvex) -> Result<f64> {
    let ka = kappa_a(r, delta, q, choice)?;
    Ok(clamp01(ka as f64 / (r + delta - 1) as f64 * (1.0 - delta_n)))
}

/// Binary entropy in bits, with `h(0) = h(1) = 0`.
pub fn binary_entropy(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
}

/// Asymptotic Plotkin bound `1 - q/(q-1) δ_n`, zero from `(q-1)/q` on.
pub fn r_opt_plotkin(delta_n: f64, q: u32) -> f64 {
    let q = q as f64;
    clamp01(1.0 - q / (q - 1.0) * delta_n)
}

/// First MRRW bound `h(1/2 - sqrt(δ_n (1 - δ_n)))`, zero from `1/2` on.
pub fn r_opt_mrrw(delta_n: f64) -> f64 {
    if delta_n >= 0.5 {
        return 0.0;
    }
    if delta_n <= 0.0 {
        return 1.0;
    }
    clamp01(binary_entropy(0.5 - (delta_n * (1.0 - delta_n)).sqrt()))
}

/// Choice of asymptotic bound on the rate of unrestricted codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ROpt {
    Plotkin,
    Mrrw,
}

impl FromStr for ROpt {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "plotkin" => Ok(ROpt::Plotkin),
            "mrrw" => Ok(ROpt::Mrrw),
            other => Err(Error::InvalidParameters(format!("unknown rate bound '{other}' (use mrrw or plotkin)"))),
        }
    }
}

impl ROpt {
    pub fn name(self) -> &'static str {
        match self {
            ROpt::Plotkin => "plotkin",
            ROpt::Mrrw => "mrrw",
        }
    }

    fn check(self, q: u32) -> Result<()> {
        if self == ROpt::Mrrw && q != 2 {
            return Err(Error::InvalidParameters(format!(
                "the MRRW bound is binary only; use the Plotkin bound for q = {q}"
            )));
        }
        Ok(())
    }

    /// `R_opt(δ_n)`; relative distances above 1 give rate 0.
    pub fn eval(self, delta_n: f64, q: u32) -> f64 {
        if delta_n > 1.0 {
            return 0.0;
        }
        match self {
            ROpt::Plotkin => r_opt_plotkin(delta_n, q),
            ROpt::Mrrw => r_opt_mrrw(delta_n),
        }
    }
}

/// Minimizer and value of the inner problem.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Minimum {
    pub x: f64,
    pub value: f64,
}

/// `min_{0 <= x < 1/ν} x + (1 - xν) R_opt(δ_n / (1 - xν))`: a grid scan of
/// [`SEED_GRID`] points followed by golden-section search in the bracket
/// around the best grid point.
pub fn minimize_shortening(delta_n: f64, nu: f64, ropt: ROpt, q: u32) -> Minimum {
    let objective = |x: f64| {
        let rest = 1.0 - x * nu;
        if rest <= 0.0 {
            return x;
        }
        x + rest * ropt.eval(delta_n / rest, q)
    };
    let hi = (1.0 / nu) * (1.0 - 1e-12);
    let step = hi / (SEED_GRID - 1) as f64;
    let (best_i, _) = (0..SEED_GRID)
        .map(|i| (i, objective(i as f64 * step)))
        .fold((0, f64::INFINITY), |acc, (i, v)| if v < acc.1 { (i, v) } else { acc });
    let mut a = best_i.saturating_sub(1) as f64 * step;
    let mut b = ((best_i + 1).min(SEED_GRID - 1)) as f64 * step;
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (objective(c), objective(d));
    while b - a > 1e-12 {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = objective(d);
        }
    }
    let mut best = Minimum { x: best_i as f64 * step, value: objective(best_i as f64 * step) };
    for x in [a, b, c, d] {
        let v = objective(x);
        if v < best.value {
            best = Minimum { x, value: v };
        }
    }
    best.value = clamp01(best.value);
    best
}

/// Shortening bound with `ν = G(κ_B, δ) / κ_B`.
pub fn cmg(delta_n: f64, r: usize, delta: usize, q: u32, ropt: ROpt) -> Result<f64> {
    ropt.check(q)?;
    let kb = kappa_b(r, delta, q);
    let nu = griesmer_length(kb, delta, q) as f64 / kb as f64;
    Ok(minimize_shortening(delta_n, nu, ropt, q).value)
}

/// Same optimization with `ν = (r+δ-1)/r`, the limit of the `t`-indexed bound
/// using whole repair sets of size `r + δ - 1`.
pub fn cm_rdelta(delta_n: f64, r: usize, delta: usize, q: u32, ropt: ROpt) -> Result<f64> {
    ropt.check(q)?;
    let nu = (r + delta - 1) as f64 / r as f64;
    Ok(minimize_shortening(delta_n, nu, ropt, q).value)
}

/// Closed form of [`cmg`] with the Plotkin choice:
/// `κ/G(κ,δ) · (1 - δ_n/(1 - 1/q))`.
pub fn cmg_plotkin_closed(delta_n: f64, kappa: usize, delta: usize, q: u32) -> f64 {
    let qf = q as f64;
    clamp01(kappa as f64 / griesmer_length(kappa, delta, q) as f64 * (1.0 - delta_n / (1.0 - 1.0 / qf)))
}

/// Unclamped line `κ/G(κ,δ) · (1 - δ_n/(1 - 1/q))`.
pub fn cmg_plotkin_line(delta_n: f64, kappa: usize, delta: usize, q: u32) -> f64 {
    let qf = q as f64;
    kappa as f64 / griesmer_length(kappa, delta, q) as f64 * (1.0 - delta_n / (1.0 - 1.0 / qf))
}

/// Unclamped line `κ_A/(r+δ-1) · (1 - δ_n)`.
pub fn abhmt_line(delta_n: f64, r: usize, delta: usize, q: u32, choice: LogConvex) -> Result<f64> {
    let ka = kappa_a(r, delta, q, choice)?;
    Ok(ka as f64 / (r + delta - 1) as f64 * (1.0 - delta_n))
}

/// The relative distance beyond which the Plotkin-based shortening bound
/// (with `κ_A`) beats the log-convex bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Threshold {
    Defined { delta_t: f64, kappa_a: usize, griesmer: usize, size: usize },
    Undefined { reason: String },
}

/// `δ_t = 1 / (1 + 1/(q-1) · 1/(1 - G(κ_A,δ)/(r+δ-1)))`, defined only when
/// `G(κ_A, δ) < r + δ - 1`.
pub fn threshold_delta_t(r: usize, delta: usize, q: u32, choice: LogConvex) -> Result<Threshold> {
    let ka = kappa_a(r, delta, q, choice)?;
    let g = griesmer_length(ka, delta, q);
    let size = r + delta - 1;
    if g >= size {
        return Ok(Threshold::Undefined {
            reason: format!(
                "G(κ_A, δ) = {g} is not below r + δ - 1 = {size}; the bounds coincide or Griesmer exceeds the repair-set size"
            ),
        });
    }
    let ratio = 1.0 - g as f64 / size as f64;
    let delta_t = 1.0 / (1.0 + 1.0 / (q as f64 - 1.0) / ratio);
    Ok(Threshold::Defined { delta_t, kappa_a: ka, griesmer: g, size })
}

/// One curve to emit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CurveKind {
    Singleton,
    Gopalan,
    Prakash,
    CmRdelta(ROpt),
    Abhmt(LogConvex),
    SingletonG,
    Cmg(ROpt),
    CmgPlotkinClosed,
}

impl CurveKind {
    pub fn label(&self) -> String {
        match self {
            CurveKind::Singleton => "singleton".into(),
            CurveKind::Gopalan => "gopalan".into(),
            CurveKind::Prakash => "prakash".into(),
            CurveKind::CmRdelta(o) => format!("cm_rdelta_{}", o.name()),
            CurveKind::Abhmt(c) => format!("abhmt_{}", format!("{c:?}").to_lowercase()),
            CurveKind::SingletonG => "singleton_g".into(),
            CurveKind::Cmg(o) => format!("cmg_{}", o.name()),
            CurveKind::CmgPlotkinClosed => "cmg_plotkin_closed".into(),
        }
    }

    pub fn eval(&self, delta_n: f64, r: usize, delta: usize, q: u32) -> Result<f64> {
        match *self {
            CurveKind::Singleton => Ok(singleton(delta_n)),
            CurveKind::Gopalan => Ok(gopalan(delta_n, r)),
            CurveKind::Prakash => Ok(prakash(delta_n, r, delta)),
            CurveKind::CmRdelta(o) => cm_rdelta(delta_n, r, delta, q, o),
            CurveKind::Abhmt(c) => abhmt(delta_n, r, delta, q, c),
            CurveKind::SingletonG => Ok(singleton_g(delta_n, r, delta, q)),
            CurveKind::Cmg(o) => cmg(delta_n, r, delta, q, o),
            CurveKind::CmgPlotkinClosed => {
                Ok(cmg_plotkin_closed(delta_n, kappa_b(r, delta, q), delta, q))
            }
        }
    }
}

impl FromStr for CurveKind {
    type Err = Error;
    /// Accepts `singleton`, `gopalan`, `prakash`, `singleton_g`,
    /// `cmg_plotkin_closed`, `abhmt[_singleton|_hamming|_plotkin|_best]`,
    /// and `cmg` / `cm_rdelta` with an optional `_mrrw` / `_plotkin` suffix.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let kind = match s.as_str() {
            "singleton" => CurveKind::Singleton,
            "gopalan" => CurveKind::Gopalan,
            "prakash" => CurveKind::Prakash,
            "singleton_g" => CurveKind::SingletonG,
            "cmg_plotkin_closed" => CurveKind::CmgPlotkinClosed,
            "abhmt" => CurveKind::Abhmt(LogConvex::Best),
            "cmg" => CurveKind::Cmg(ROpt::Mrrw),
            "cm_rdelta" => CurveKind::CmRdelta(ROpt::Mrrw),
            other => {
                if let Some(c) = other.strip_prefix("abhmt_") {
                    CurveKind::Abhmt(c.parse()?)
                } else if let Some(o) = other.strip_prefix("cmg_") {
                    CurveKind::Cmg(o.parse()?)
                } else if let Some(o) = other.strip_prefix("cm_rdelta_") {
                    CurveKind::CmRdelta(o.parse()?)
                } else {
                    return Err(Error::InvalidParameters(format!("unknown curve '{other}'")));
                }
            }
        };
        Ok(kind)
    }
}

/// Columns used when none are requested.
pub fn default_curves(ropt: ROpt) -> Vec<CurveKind> {
    vec![
        CurveKind::Prakash,
        CurveKind::CmRdelta(ropt),
        CurveKind::Abhmt(LogConvex::Best),
        CurveKind::SingletonG,
        CurveKind::Cmg(ropt),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct CurveParams {
    pub r: usize,
    pub delta: usize,
    pub q: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct AsymptoticCurve {
    pub label: String,
    pub params: CurveParams,
    pub samples: Vec<(f64, f64)>,
}

/// `n` uniform points on `[0, 1]`, endpoints included.
pub fn uniform_grid(n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![0.0],
        _ => (0..n).map(|i| i as f64 / (n - 1) as f64).collect(),
    }
}

pub fn sample_curves(params: &CurveParams, kinds: &[CurveKind], grid: &[f64]) -> Result<Vec<AsymptoticCurve>> {
    if params.r == 0 || params.delta < 2 {
        return Err(Error::InvalidParameters("need r >= 1 and δ >= 2".into()));
    }
    if let Some(bad) = grid.iter().find(|x| !(0.0..=1.0).contains(*x)) {
        return Err(Error::InvalidParameters(format!("grid value {bad} lies outside [0, 1]")));
    }
    kinds
        .iter()
        .map(|kind| {
            let samples = grid
                .par_iter()
                .map(|&x| Ok((x, kind.eval(x, params.r, params.delta, params.q)?)))
                .collect::<Result<Vec<_>>>()?;
            Ok(AsymptoticCurve { label: kind.label(), params: params.clone(), samples })
        })
        .collect()
}

/// `v` with 9 significant digits.
pub fn format_sig(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{}", if v == 0.0 { 0.0 } else { v });
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (8 - magnitude).max(0) as usize;
    format!("{v:.decimals$}")
}

/// Writes the curves as CSV: `#` metadata lines, a header row, then one row
/// per grid point.
pub fn write_csv<W: Write>(mut out: W, params: &CurveParams, curves: &[AsymptoticCurve]) -> Result<()> {
    let mut head = String::new();
    writeln!(head, "# locality r={} delta={} q={}", params.r, params.delta, params.q).unwrap();
    writeln!(head, "# asymptotic limit lines (o(1) terms dropped), rates clamped to [0,1]").unwrap();
    writeln!(
        head,
        "# inner minimization: {SEED_GRID}-point grid scan + golden-section search, objective tolerance {OBJECTIVE_TOLERANCE:e}"
    )
    .unwrap();
    let kb = kappa_b(params.r, params.delta, params.q);
    writeln!(head, "# kappa_B={kb} G(kappa_B,delta)={}", griesmer_length(kb, params.delta, params.q)).unwrap();
    out.write_all(head.as_bytes())?;
    let labels: Vec<&str> = curves.iter().map(|c| c.label.as_str()).collect();
    writeln!(out, "delta_n,{}", labels.join(","))?;
    let rows = curves.first().map_or(0, |c| c.samples.len());
    for i in 0..rows {
        let mut line = format_sig(curves[0].samples[i].0);
        for c in curves {
            line.push(',');
            line.push_str(&format_sig(c.samples[i].1));
        }
        writeln!(out, "{line}")?;
    }
    Ok(())
}

/// Samples the requested curves and writes them as CSV.
pub fn emit_curves<W: Write>(out: W, params: &CurveParams, kinds: &[CurveKind], grid: &[f64]) -> Result<()> {
    let curves = sample_curves(params, kinds, grid)?;
    write_csv(out, params, &curves)
}
