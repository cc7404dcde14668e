//! Finite-length bounds for linear (locally repairable) codes over GF(q).
//!
//! Dimension bounds are returned as `BoundReport`s carrying the optimizing
//! internal parameter. The min-form bounds (`cm_rdelta`, `cmg_*`) are
//! evaluated self-consistently: the reported value is the largest `k'` such
//! that `k' <= B(λ)` for every feasible `λ <= k'`, since the set
//! construction behind each term only exists for `λ <= k`.

use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};

/// `G(k, d) = sum_{i<k} ceil(d / q^i)`, the minimum length of a linear
/// `[n, k, d]` code.
pub fn griesmer_length(k: usize, d: usize, q: u32) -> usize {
    let mut total = 0usize;
    let mut pw: u128 = 1;
    for i in 0..k {
        if pw >= d as u128 {
            // every remaining term is ceil(d / q^i) = 1 (or 0 when d = 0)
            return total + (k - i) * usize::from(d > 0);
        }
        total += (d as u128).div_ceil(pw) as usize;
        pw *= q as u128;
    }
    total
}

/// Largest `k` with `G(k, d) <= n`; 0 when `d > n`.
pub fn griesmer_dim(n: usize, d: usize, q: u32) -> usize {
    if d == 0 {
        return n;
    }
    let mut k = 0;
    while griesmer_length(k + 1, d, q) <= n {
        k += 1;
    }
    k
}

pub fn k_singleton(n: usize, d: usize) -> usize {
    (n + 1).saturating_sub(d.max(1))
}

/// Hamming-ball volume `V_q(n, t)`.
pub fn hamming_ball(n: usize, t: usize, q: u32) -> BigUint {
    let mut total = BigUint::from(0u32);
    let mut binom = BigUint::from(1u32);
    let mut pw = BigUint::from(1u32);
    for i in 0..=t.min(n) {
        if i > 0 {
            binom = binom * BigUint::from(n - i + 1) / BigUint::from(i);
            pw *= q - 1;
        }
        total += &binom * &pw;
    }
    total
}

/// Largest `k` with `q^k * V_q(n, floor((d-1)/2)) <= q^n`.
pub fn k_hamming(n: usize, d: usize, q: u32) -> usize {
    let t = d.saturating_sub(1) / 2;
    let vol = hamming_ball(n, t, q);
    let mut e = 0usize;
    let mut pw = BigUint::from(1u32);
    while pw < vol {
        pw *= q;
        e += 1;
    }
    n - e
}

/// Plotkin cardinality bound, `None` where it does not apply.
///
/// q-ary form: `M <= floor(qd / (qd - (q-1)n))` when `qd > (q-1)n`. Over
/// GF(2) the sharper classical variant is also used: for even `d`,
/// `M <= 2 floor(d / (2d - n))` when `2d > n` and `M <= 4d` when `n = 2d`;
/// odd `d` reduces to `(n+1, d+1)`.
pub fn plotkin_cardinality(n: usize, d: usize, q: u32) -> Option<u128> {
    if d > n {
        return Some(1);
    }
    let (n128, d128, q128) = (n as u128, d as u128, q as u128);
    let general = (q128 * d128 > (q128 - 1) * n128)
        .then(|| q128 * d128 / (q128 * d128 - (q128 - 1) * n128));
    let binary = if q == 2 { binary_plotkin(n128, d128) } else { None };
    match (general, binary) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    }
}

fn binary_plotkin(n: u128, d: u128) -> Option<u128> {
    if d % 2 == 1 {
        return binary_plotkin(n + 1, d + 1);
    }
    if 2 * d > n {
        Some(2 * (d / (2 * d - n)))
    } else if 2 * d == n {
        Some(4 * d)
    } else {
        None
    }
}

fn floor_log(q: u32, m: u128) -> usize {
    let mut e = 0;
    let mut pw: u128 = q as u128;
    while pw <= m {
        e += 1;
        pw = pw.saturating_mul(q as u128);
        if pw == u128::MAX {
            break;
        }
    }
    e
}

/// Dimension form of [`plotkin_cardinality`].
pub fn k_plotkin(n: usize, d: usize, q: u32) -> Option<usize> {
    plotkin_cardinality(n, d, q).map(|m| floor_log(q, m.max(1)))
}

/// The classical bounds combined into `k_opt`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Component {
    Singleton,
    Hamming,
    Plotkin,
    Griesmer,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Component::Singleton => "singleton",
            Component::Hamming => "hamming",
            Component::Plotkin => "plotkin",
            Component::Griesmer => "griesmer",
        };
        f.write_str(s)
    }
}

/// `k_opt` together with the components that attain it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KOpt {
    pub value: usize,
    pub active: Vec<Component>,
}

/// Upper bound on the dimension of any linear code of length `n` and
/// distance `d`: the minimum of Singleton, Hamming, Plotkin (when
/// applicable) and Griesmer. Zero when `n < d`.
pub fn k_opt_detail(n: usize, d: usize, q: u32) -> KOpt {
    if n < d {
        return KOpt { value: 0, active: Vec::new() };
    }
    let mut parts = vec![
        (Component::Singleton, k_singleton(n, d)),
        (Component::Hamming, k_hamming(n, d, q)),
        (Component::Griesmer, griesmer_dim(n, d, q)),
    ];
    if let Some(p) = k_plotkin(n, d, q) {
        parts.push((Component::Plotkin, p));
    }
    let value = parts.iter().map(|&(_, v)| v).min().unwrap();
    let active = parts.into_iter().filter(|&(_, v)| v == value).map(|(c, _)| c).collect();
    KOpt { value, active }
}

pub fn k_opt(n: usize, d: usize, q: u32) -> usize {
    k_opt_detail(n, d, q).value
}

/// `k_opt` at a signed length; nonpositive lengths are treated like `n < d`.
fn k_opt_signed(len: i64, d: usize, q: u32) -> usize {
    if len <= 0 { 0 } else { k_opt(len as usize, d, q) }
}

fn check_locality(k: usize, r: usize) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidParameters("locality r must be at least 1".into()));
    }
    if r > k {
        return Err(Error::InvalidParameters(format!(
            "locality r = {r} exceeds the dimension k = {k}"
        )));
    }
    Ok(())
}

/// `d <= n - k - ceil(k/r) + 2`.
pub fn bound_gopalan(n: usize, k: usize, r: usize) -> Result<i64> {
    check_locality(k, r)?;
    Ok(n as i64 - k as i64 - k.div_ceil(r) as i64 + 2)
}

/// `d <= n - k + 1 - (ceil(k/r) - 1)(δ - 1)`.
pub fn bound_prakash(n: usize, k: usize, r: usize, delta: usize) -> Result<i64> {
    check_locality(k, r)?;
    if delta < 2 {
        return Err(Error::InvalidParameters("local distance δ must be at least 2".into()));
    }
    Ok(n as i64 - k as i64 + 1 - (k.div_ceil(r) as i64 - 1) * (delta as i64 - 1))
}

/// What a bound constrains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Dimension,
    Distance,
}

/// The term of a min-form bound that attains the reported value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Entropy budget of the constructed set (`λ`, or `t·r`, or `t·κ`).
    pub lambda: usize,
    /// `λ = a·κ + b` with `0 <= b < κ`; for the t-indexed bounds `a = t`, `b = 0`.
    pub a: usize,
    pub b: usize,
    pub shortened_length: i64,
    pub k_opt: usize,
    /// `λ + k_opt(shortened_length, d)`.
    pub term: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub name: String,
    pub target: Target,
    pub value: i64,
    pub witness: Option<Witness>,
    /// Components of `k_opt` active in the witness term.
    pub components: Vec<Component>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = match self.target {
            Target::Dimension => "k",
            Target::Distance => "d",
        };
        write!(f, "{:<17} {rel} <= {:>4}", self.name, self.value)?;
        if let Some(w) = &self.witness {
            write!(
                f,
                "   λ={} (a={}, b={}): {} + k_opt({}) = {}",
                w.lambda, w.a, w.b, w.lambda, w.shortened_length, w.term
            )?;
        }
        if !self.components.is_empty() {
            let names: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
            write!(f, "   [k_opt: {}]", names.join(","))?;
        }
        if let Some(n) = &self.note {
            write!(f, "   ({n})")?;
        }
        Ok(())
    }
}

struct Term {
    lambda: usize,
    a: usize,
    b: usize,
    len: i64,
}

/// Self-consistent minimum over a family of terms `λ + k_opt(len(λ), d)`.
/// `terms` yields candidates in increasing `λ`; infeasible ones
/// (nonpositive shortened length) are skipped.
fn self_consistent(
    name: &str,
    n: usize,
    d: usize,
    q: u32,
    terms: impl Iterator<Item = Term>,
) -> BoundReport {
    let ceiling = k_opt(n, d, q);
    let evaluated: Vec<(Term, usize)> = terms
        .take_while(|t| t.lambda <= ceiling)
        .filter(|t| t.len > 0)
        .map(|t| {
            let v = t.lambda + k_opt_signed(t.len, d, q);
            (t, v)
        })
        .collect();
    let mut best: Option<(usize, usize)> = None;
    for cand in (0..=ceiling).rev() {
        let argmin = evaluated
            .iter()
            .enumerate()
            .filter(|(_, (t, _))| t.lambda <= cand)
            .min_by_key(|(i, (_, v))| (*v, *i));
        match argmin {
            Some((i, (_, v))) if cand <= *v => {
                best = Some((cand, i));
                break;
            }
            None => {
                best = Some((cand, usize::MAX));
                break;
            }
            _ => {}
        }
    }
    let (value, idx) = best.expect("k' = 0 always satisfies the λ = 0 term");
    let witness = evaluated.get(idx).map(|(t, v)| Witness {
        lambda: t.lambda,
        a: t.a,
        b: t.b,
        shortened_length: t.len,
        k_opt: v - t.lambda,
        term: *v,
    });
    let components = witness
        .as_ref()
        .map(|w| k_opt_detail(w.shortened_length.max(0) as usize, d, q).active)
        .unwrap_or_default();
    BoundReport {
        name: name.to_string(),
        target: Target::Dimension,
        value: value as i64,
        witness,
        components,
        note: None,
    }
}

/// `k <= min_{1 <= t <= n/(r+1)} { t r + k_opt(n - t(r+1), d) }`, evaluated
/// literally over the stated range. When the range is empty the
/// locality-free `k_opt(n, d)` is reported instead.
pub fn bound_cm(n: usize, d: usize, r: usize, q: u32) -> Result<BoundReport> {
    if r == 0 {
        return Err(Error::InvalidParameters("locality r must be at least 1".into()));
    }
    let t_max = n / (r + 1);
    let best = (1..=t_max)
        .map(|t| {
            let len = (n - t * (r + 1)) as i64;
            let ko = k_opt_signed(len, d, q);
            (t, len, ko, t * r + ko)
        })
        .min_by_key(|&(t, _, _, v)| (v, t));
    Ok(match best {
        Some((t, len, ko, v)) => BoundReport {
            name: "cm".into(),
            target: Target::Dimension,
            value: v as i64,
            witness: Some(Witness { lambda: t * r, a: t, b: 0, shortened_length: len, k_opt: ko, term: v }),
            components: k_opt_detail(len as usize, d, q).active,
            note: None,
        },
        None => {
            let ko = k_opt_detail(n, d, q);
            BoundReport {
                name: "cm".into(),
                target: Target::Dimension,
                value: ko.value as i64,
                witness: None,
                components: ko.active,
                note: Some("no t in 1..=n/(r+1); locality-free k_opt reported".into()),
            }
        }
    })
}

/// `k <= min_t { t r + k_opt(n - t(r+δ-1), d) }`, self-consistent in `t <= k/r`.
pub fn bound_cm_rdelta(n: usize, d: usize, r: usize, delta: usize, q: u32) -> Result<BoundReport> {
    if r == 0 || delta < 2 {
        return Err(Error::InvalidParameters("need r >= 1 and δ >= 2".into()));
    }
    let size = r + delta - 1;
    let terms = (0..).map(move |t: usize| Term {
        lambda: t * r,
        a: t,
        b: 0,
        len: n as i64 - (t * size) as i64,
    });
    Ok(self_consistent("cm_rdelta", n, d, q, terms))
}

/// Dimension-locality bound: `k <= min_λ { λ + k_opt(n - (a+1) G(κ,δ) + G(κ-b,δ), d) }`
/// with `λ = aκ + b`, `0 <= b < κ`.
pub fn bound_cmg_kappa(n: usize, d: usize, kappa: usize, delta: usize, q: u32) -> Result<BoundReport> {
    if kappa == 0 || delta < 2 {
        return Err(Error::InvalidParameters("need κ >= 1 and δ >= 2".into()));
    }
    let g = griesmer_length(kappa, delta, q) as i64;
    let terms = (0..).map(move |lambda: usize| {
        let (a, b) = (lambda / kappa, lambda % kappa);
        let tail = griesmer_length(kappa - b, delta, q) as i64;
        Term { lambda, a, b, len: n as i64 - (a as i64 + 1) * g + tail }
    });
    Ok(self_consistent("cmg_kappa", n, d, q, terms))
}

/// [`bound_cmg_kappa`] restricted to `λ = tκ`.
pub fn bound_cmg_tkappa(n: usize, d: usize, kappa: usize, delta: usize, q: u32) -> Result<BoundReport> {
    if kappa == 0 || delta < 2 {
        return Err(Error::InvalidParameters("need κ >= 1 and δ >= 2".into()));
    }
    let g = griesmer_length(kappa, delta, q) as i64;
    let terms = (0..).map(move |t: usize| Term {
        lambda: t * kappa,
        a: t,
        b: 0,
        len: n as i64 - t as i64 * g,
    });
    Ok(self_consistent("cmg_tkappa", n, d, q, terms))
}

/// Best available upper bound on the dimension of a repair set of size
/// `r + δ - 1` with distance `δ`.
pub fn kappa_b_detail(r: usize, delta: usize, q: u32) -> KOpt {
    k_opt_detail(r + delta - 1, delta, q)
}

pub fn kappa_b(r: usize, delta: usize, q: u32) -> usize {
    kappa_b_detail(r, delta, q).value
}

/// [`bound_cmg_kappa`] at `κ = κ_B(r, δ)`, for codes with locality `(r, δ)`.
pub fn bound_cmg_r(n: usize, d: usize, r: usize, delta: usize, q: u32) -> Result<BoundReport> {
    if r == 0 || delta < 2 {
        return Err(Error::InvalidParameters("need r >= 1 and δ >= 2".into()));
    }
    let kb = kappa_b(r, delta, q);
    let mut rep = bound_cmg_kappa(n, d, kb, delta, q)?;
    rep.name = "cmg_r".into();
    rep.note = Some(format!("κ_B = {kb}"));
    Ok(rep)
}

/// `d <= n - ceil(k/κ) G(κ,δ) + G(κ - b, δ)` with `b = k - 1 - (ceil(k/κ) - 1) κ`.
pub fn bound_singleton_g_kappa(n: usize, k: usize, kappa: usize, delta: usize, q: u32) -> Result<i64> {
    if k == 0 || kappa == 0 || delta < 2 {
        return Err(Error::InvalidParameters("need k >= 1, κ >= 1 and δ >= 2".into()));
    }
    let c = k.div_ceil(kappa);
    let b = k - 1 - (c - 1) * kappa;
    Ok(n as i64 - (c * griesmer_length(kappa, delta, q)) as i64
        + griesmer_length(kappa - b, delta, q) as i64)
}

/// Singleton-type bound on `d` for locality `(r, δ)`, through `κ_B`.
pub fn bound_singleton_g(n: usize, k: usize, r: usize, delta: usize, q: u32) -> Result<BoundReport> {
    check_locality(k, r)?;
    let kb = kappa_b(r, delta, q);
    let value = bound_singleton_g_kappa(n, k, kb, delta, q)?;
    let c = k.div_ceil(kb);
    let b = k - 1 - (c - 1) * kb;
    Ok(BoundReport {
        name: "singleton_g".into(),
        target: Target::Distance,
        value,
        witness: None,
        components: kappa_b_detail(r, delta, q).active,
        note: Some(format!("κ_B = {kb}, ceil(k/κ_B) = {c}, b = {b}")),
    })
}

/// The log-convex cardinality bounds usable inside the ABHMT bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LogConvex {
    Singleton,
    Hamming,
    Plotkin,
    /// Minimum over the applicable ones.
    Best,
}

impl std::str::FromStr for LogConvex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "singleton" => Ok(LogConvex::Singleton),
            "hamming" => Ok(LogConvex::Hamming),
            "plotkin" => Ok(LogConvex::Plotkin),
            "best" => Ok(LogConvex::Best),
            other => Err(Error::InvalidParameters(format!("unknown log-convex bound '{other}'"))),
        }
    }
}

/// `κ_A = log_q B(r + δ - 1, δ)` for the chosen log-convex bound `B`.
pub fn kappa_a(r: usize, delta: usize, q: u32, choice: LogConvex) -> Result<usize> {
    let (n, d) = (r + delta - 1, delta);
    let plotkin = || {
        k_plotkin(n, d, q).ok_or_else(|| {
            Error::InvalidParameters(format!("Plotkin bound does not apply at length {n}, distance {d}"))
        })
    };
    match choice {
        LogConvex::Singleton => Ok(k_singleton(n, d)),
        LogConvex::Hamming => Ok(k_hamming(n, d, q)),
        LogConvex::Plotkin => plotkin(),
        LogConvex::Best => {
            let mut v = k_singleton(n, d).min(k_hamming(n, d, q));
            if let Ok(p) = plotkin() {
                v = v.min(p);
            }
            Ok(v)
        }
    }
}

/// `k <= (ceil((n - d + 1) / (r + δ - 1)) + 1) κ_A`.
pub fn bound_abhmt(n: usize, d: usize, r: usize, delta: usize, q: u32, choice: LogConvex) -> Result<BoundReport> {
    if r == 0 || delta < 2 || d == 0 || d > n {
        return Err(Error::InvalidParameters("need r >= 1, δ >= 2 and 1 <= d <= n".into()));
    }
    let ka = kappa_a(r, delta, q, choice)?;
    let blocks = (n - d + 1).div_ceil(r + delta - 1);
    Ok(BoundReport {
        name: "abhmt".into(),
        target: Target::Dimension,
        value: ((blocks + 1) * ka) as i64,
        witness: None,
        components: Vec::new(),
        note: Some(format!("κ_A = {ka} ({choice:?})").to_lowercase()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g_naive(k: usize, d: usize, q: u32) -> usize {
        (0..k).map(|i| (d as u128).div_ceil((q as u128).pow(i as u32)) as usize).sum()
    }

    #[test]
    fn griesmer_length_values() {
        assert_eq!(griesmer_length(3, 3, 2), 6);
        assert_eq!(griesmer_length(4, 3, 2), 7);
        assert_eq!(griesmer_length(1, 17, 3), 17);
        assert_eq!(griesmer_length(0, 5, 2), 0);
        assert_eq!(griesmer_length(4, 8, 2), 15);
        assert_eq!(griesmer_length(5, 9, 2), 20);
        for q in [2, 3, 4, 5] {
            for k in 0..40 {
                for d in 1..70 {
                    assert_eq!(griesmer_length(k, d, q), g_naive(k, d, q), "G({k},{d}) q={q}");
                }
            }
        }
    }

    #[test]
    fn griesmer_dim_values() {
        assert_eq!(griesmer_dim(8, 5, 2), 2);
        assert_eq!(griesmer_dim(7, 5, 2), 1);
        assert_eq!(griesmer_dim(9, 5, 2), 2);
        assert_eq!(griesmer_dim(20, 9, 2), 5);
        assert_eq!(griesmer_dim(4, 5, 2), 0);
        for n in 1..30 {
            assert_eq!(griesmer_dim(n, n, 3), 1);
        }
    }

    #[test]
    fn classical_component_values() {
        assert_eq!(k_hamming(8, 3, 2), 4);
        assert_eq!(k_hamming(20, 9, 2), 7);
        assert_eq!(k_hamming(7, 3, 2), 4);
        assert_eq!(k_plotkin(4, 3, 2), Some(1));
        assert_eq!(k_plotkin(6, 3, 2), Some(3));
        assert_eq!(k_plotkin(20, 9, 2), None);
        assert_eq!(k_singleton(10, 3), 8);
    }

    #[test]
    fn q_ary_plotkin_form() {
        // 3 * 4 > 2 * 5: M <= 12 / 2 = 6, k = floor(log_3 6) = 1
        assert_eq!(plotkin_cardinality(5, 4, 3), Some(6));
        assert_eq!(k_plotkin(5, 4, 3), Some(1));
        assert_eq!(k_plotkin(6, 4, 3), None);
    }

    #[test]
    fn log_convex_choices_are_normalized_at_zero_length() {
        // B(0, d) = 1, i.e. dimension 0, for the Hamming and Plotkin forms
        for d in 1..10 {
            for q in [2, 3, 4] {
                assert_eq!(hamming_ball(0, (d - 1) / 2, q), BigUint::from(1u32));
                assert_eq!(plotkin_cardinality(0, d, q), Some(1));
            }
        }
    }

    #[test]
    fn k_opt_values() {
        assert_eq!(k_opt(4, 3, 2), 1);
        assert_eq!(k_opt(2, 3, 2), 0);
        for n in 1..20 {
            assert_eq!(k_opt(n, 1, 3), n);
        }
        let ko = k_opt_detail(20, 9, 2);
        assert_eq!(ko.value, 5);
        assert_eq!(ko.active, vec![Component::Griesmer]);
    }

    #[test]
    fn k_opt_monotone() {
        for q in [2, 3, 4] {
            for d in 1..15 {
                for n in 1..45 {
                    assert!(k_opt(n, d, q) <= k_opt(n + 1, d, q), "n: {n} {d} {q}");
                    assert!(k_opt(n, d + 1, q) <= k_opt(n, d, q), "d: {n} {d} {q}");
                }
            }
        }
    }

    #[test]
    fn gopalan_and_prakash() {
        assert_eq!(bound_prakash(10, 4, 4, 3).unwrap(), 7);
        for (n, k, r) in [(10, 4, 2), (20, 6, 3), (15, 5, 1)] {
            assert_eq!(bound_prakash(n, k, r, 2).unwrap(), bound_gopalan(n, k, r).unwrap());
            assert_eq!(bound_prakash(n, k, k, 4).unwrap(), (n - k + 1) as i64);
        }
        assert!(bound_gopalan(10, 3, 4).is_err());
        assert!(bound_prakash(10, 3, 0, 3).is_err());
    }

    #[test]
    fn cmg_kappa_on_example_two_parameters() {
        let rep = bound_cmg_kappa(13, 3, 3, 3, 2).unwrap();
        assert_eq!(rep.value, 6);
        let w = rep.witness.unwrap();
        assert_eq!((w.lambda, w.a, w.b, w.shortened_length, w.k_opt), (5, 1, 2, 4, 1));
    }

    #[test]
    fn cmg_r_on_example_three_parameters() {
        assert_eq!(kappa_b(2, 3, 2), 1);
        let rep = bound_cmg_r(10, 3, 2, 3, 2).unwrap();
        assert_eq!(rep.value, 3);
        let w = rep.witness.unwrap();
        assert_eq!((w.lambda, w.shortened_length, w.k_opt), (2, 4, 1));
    }

    #[test]
    fn cmg_on_example_one_parameters() {
        assert_eq!(bound_cmg_kappa(10, 4, 3, 3, 2).unwrap().value, 4);
        assert_eq!(bound_cmg_r(10, 4, 4, 3, 2).unwrap().value, 4);
    }

    #[test]
    fn lambda_zero_term_is_locality_free() {
        for (n, d) in [(13, 3), (10, 4), (30, 7)] {
            assert!(bound_cmg_kappa(n, d, 3, 3, 2).unwrap().value <= k_opt(n, d, 2) as i64);
            assert!(bound_cmg_tkappa(n, d, 3, 3, 2).unwrap().value <= k_opt(n, d, 2) as i64);
            assert!(bound_cm_rdelta(n, d, 3, 3, 2).unwrap().value <= k_opt(n, d, 2) as i64);
        }
        // a huge repair set makes every t >= 1 term infeasible
        assert_eq!(bound_cmg_tkappa(10, 3, 9, 9, 2).unwrap().value, k_opt(10, 3, 2) as i64);
    }

    #[test]
    fn cm_rdelta_example_three_parameters() {
        // t = 2 term: 4 + k_opt(2, 3) = 4; t = 1 term: 2 + k_opt(6, 3) = 5
        let rep = bound_cm_rdelta(10, 3, 2, 3, 2).unwrap();
        assert_eq!(rep.value, 4);
        assert!(bound_cmg_r(10, 3, 2, 3, 2).unwrap().value <= rep.value);
    }

    #[test]
    fn cm_literal_range() {
        let rep = bound_cm(10, 4, 4, 2).unwrap();
        assert!(rep.value >= bound_cmg_r(10, 4, 4, 2, 2).unwrap().value);
        let empty = bound_cm(3, 2, 4, 2).unwrap();
        assert!(empty.witness.is_none());
        assert_eq!(empty.value, k_opt(3, 2, 2) as i64);
    }

    #[test]
    fn kappa_b_values() {
        assert_eq!(kappa_b(4, 3, 2), 3);
        assert_eq!(kappa_b(12, 9, 2), 5);
        assert_eq!(kappa_b(6, 3, 2), 4);
        assert_eq!(kappa_b(7, 2, 256), 7);
    }

    #[test]
    fn kappa_a_values() {
        assert_eq!(kappa_a(6, 3, 2, LogConvex::Hamming).unwrap(), 4);
        assert_eq!(kappa_a(12, 9, 2, LogConvex::Singleton).unwrap(), 12);
        assert_eq!(kappa_a(12, 9, 2, LogConvex::Hamming).unwrap(), 7);
        assert!(kappa_a(12, 9, 2, LogConvex::Plotkin).is_err());
        assert_eq!(kappa_a(12, 9, 2, LogConvex::Best).unwrap(), 7);
        assert_eq!(kappa_a(4, 3, 2, LogConvex::Plotkin).unwrap(), 3);
    }

    #[test]
    fn abhmt_value() {
        // (ceil(8 / 8) + 1) * 4
        let rep = bound_abhmt(10, 3, 6, 3, 2, LogConvex::Hamming).unwrap();
        assert_eq!(rep.value, 8);
        assert!(bound_abhmt(30, 9, 12, 9, 2, LogConvex::Plotkin).is_err());
    }

    #[test]
    fn singleton_g_values() {
        assert_eq!(bound_singleton_g(10, 4, 4, 3, 2).unwrap().value, 4);
        // large field, δ = 2: κ_B = r and the bound equals the δ = 2 Prakash bound
        for (n, k, r) in [(20, 6, 3), (12, 5, 2), (30, 7, 7)] {
            let sg = bound_singleton_g(n, k, r, 2, 256).unwrap().value;
            assert_eq!(sg, bound_prakash(n, k, r, 2).unwrap(), "{n} {k} {r}");
        }
    }

    #[test]
    fn griesmer_additivity_small() {
        for q in [2, 3, 4] {
            for a in 0..6 {
                for b in 0..6 {
                    for d in 1..20 {
                        let lhs = griesmer_length(a, d, q)
                            + griesmer_length(b, (d as u128).div_ceil((q as u128).pow(a as u32)) as usize, q);
                        assert_eq!(lhs, griesmer_length(a + b, d, q));
                    }
                }
            }
        }
    }
}
