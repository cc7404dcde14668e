//! Locality `(r, δ)` and dimension-locality `(κ, δ)` of linear codes.
//!
//! A repair set for coordinate `i` is any `R ∋ i` with `d(C|_R) >= δ`.
//! Locality `(r, δ)` asks for one of size at most `r + δ - 1` per coordinate;
//! dimension-locality `(κ, δ)` asks for one of entropy at most `κ`.

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::code::LinearCode;
use crate::coords::CoordSet;
use crate::error::{Error, Result};

/// Exact check of one candidate repair set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepairCheck {
    pub entropy: usize,
    pub size: usize,
    /// `None` when the restriction is zero-dimensional.
    pub exact_distance: Option<usize>,
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

pub fn verify_repair_set(code: &LinearCode, set: &CoordSet, delta: usize) -> Result<RepairCheck> {
    if set.is_empty() {
        return Err(Error::InvalidParameters("repair set is empty".into()));
    }
    let entropy = code.entropy(set)?;
    let exact_distance = code.restrict(set)?.min_distance()?;
    let (valid, reason) = match exact_distance {
        None => (false, Some("restriction is zero-dimensional".to_string())),
        Some(d) if d < delta => (false, Some(format!("restricted distance {d} < δ = {delta}"))),
        Some(_) => (true, None),
    };
    Ok(RepairCheck { entropy, size: set.len(), exact_distance, valid, reason })
}

fn one_based<S: Serializer>(i: &usize, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(*i as u64 + 1)
}

/// The chosen repair set for one coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepairWitness {
    #[serde(serialize_with = "one_based")]
    pub coordinate: usize,
    pub set: CoordSet,
    pub entropy: usize,
    pub distance: usize,
}

impl RepairWitness {
    pub fn size(&self) -> usize {
        self.set.len()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalityProfile {
    pub delta: usize,
    pub cap: usize,
    /// True when the cap is below `n`, so larger sets were never examined.
    pub cap_active: bool,
    /// Minimal `r` (from the size-minimizing witnesses); `None` if some
    /// coordinate has no repair set within the cap.
    pub r: Option<usize>,
    /// Minimal `κ` (from the entropy-minimizing witnesses).
    pub kappa: Option<usize>,
    pub size_witnesses: Vec<Option<RepairWitness>>,
    pub entropy_witnesses: Vec<Option<RepairWitness>>,
    /// Coordinates with no repair set within the cap.
    pub infeasible: Vec<usize>,
}

impl LocalityProfile {
    /// Entropy witnesses, failing if any coordinate lacks one.
    pub fn kappa_sets(&self) -> Result<Vec<CoordSet>> {
        self.entropy_witnesses
            .iter()
            .enumerate()
            .map(|(i, w)| {
                w.as_ref().map(|w| w.set.clone()).ok_or_else(|| {
                    Error::Precondition(format!("coordinate {} has no repair set", i + 1))
                })
            })
            .collect()
    }
}

/// `min(n, δ + k)`.
pub fn default_cap(code: &LinearCode, delta: usize) -> usize {
    code.n().min(delta + code.k())
}

/// Visits every `size`-subset of `pool` in lexicographic order until `f`
/// returns `Ok(true)`.
fn for_each_combination(
    pool: &[usize],
    size: usize,
    f: &mut dyn FnMut(&[usize]) -> Result<bool>,
) -> Result<bool> {
    if size > pool.len() {
        return Ok(false);
    }
    let mut idx: Vec<usize> = (0..size).collect();
    let mut buf = vec![0usize; size];
    loop {
        for (b, &i) in buf.iter_mut().zip(&idx) {
            *b = pool[i];
        }
        if f(&buf)? {
            return Ok(true);
        }
        let Some(pos) = (0..size).rev().find(|&p| idx[p] != p + pool.len() - size) else {
            return Ok(false);
        };
        idx[pos] += 1;
        for p in pos + 1..size {
            idx[p] = idx[p - 1] + 1;
        }
    }
}

fn with_coordinate(i: usize, others: &[usize]) -> Vec<usize> {
    let mut v = Vec::with_capacity(others.len() + 1);
    let at = others.partition_point(|&x| x < i);
    v.extend_from_slice(&others[..at]);
    v.push(i);
    v.extend_from_slice(&others[at..]);
    v
}

fn distance_of(code: &LinearCode, cols: &[usize]) -> Result<Option<usize>> {
    code.restrict_unchecked(cols).min_distance()
}

/// Smallest repair set for `i` (lexicographically first among the smallest).
fn min_size_set(code: &LinearCode, i: usize, delta: usize, cap: usize) -> Result<Option<RepairWitness>> {
    let others: Vec<usize> = (0..code.n()).filter(|&j| j != i).collect();
    let mut found = None;
    for size in delta.max(1)..=cap {
        let hit = for_each_combination(&others, size - 1, &mut |rest| {
            let cols = with_coordinate(i, rest);
            if let Some(d) = distance_of(code, &cols)? {
                if d >= delta {
                    found = Some(RepairWitness {
                        coordinate: i,
                        entropy: code.rank_of(&cols),
                        set: CoordSet::from_indices(cols),
                        distance: d,
                    });
                    return Ok(true);
                }
            }
            Ok(false)
        })?;
        if hit {
            break;
        }
    }
    Ok(found)
}

/// Repair set for `i` of least entropy; ties go to the smaller set, then
/// the lexicographically first.
fn min_entropy_set(code: &LinearCode, i: usize, delta: usize, cap: usize) -> Result<Option<RepairWitness>> {
    let others: Vec<usize> = (0..code.n()).filter(|&j| j != i).collect();
    let mut best: Option<RepairWitness> = None;
    for size in delta.max(1)..=cap {
        let done = for_each_combination(&others, size - 1, &mut |rest| {
            let cols = with_coordinate(i, rest);
            let h = code.rank_of(&cols);
            if best.as_ref().is_some_and(|b| h >= b.entropy) {
                return Ok(false);
            }
            if let Some(d) = distance_of(code, &cols)? {
                if d >= delta {
                    best = Some(RepairWitness {
                        coordinate: i,
                        entropy: h,
                        set: CoordSet::from_indices(cols),
                        distance: d,
                    });
                    // a valid set has a nonzero restriction, so entropy 1 is optimal
                    return Ok(h == 1);
                }
            }
            Ok(false)
        })?;
        if done {
            break;
        }
    }
    Ok(best)
}

/// Exact locality search. For each coordinate, subsets containing it are
/// examined in increasing size from `δ` up to `cap`, once for the smallest
/// repair set and once for the least-entropy repair set.
pub fn compute_locality(code: &LinearCode, delta: usize, cap: Option<usize>) -> Result<LocalityProfile> {
    if delta < 2 {
        return Err(Error::InvalidParameters("local distance δ must be at least 2".into()));
    }
    let cap = cap.unwrap_or_else(|| default_cap(code, delta));
    if cap > code.n() {
        return Err(Error::InvalidParameters(format!(
            "size cap {cap} exceeds the code length {}",
            code.n()
        )));
    }
    let per_coord: Vec<(Option<RepairWitness>, Option<RepairWitness>)> = (0..code.n())
        .into_par_iter()
        .map(|i| Ok((min_size_set(code, i, delta, cap)?, min_entropy_set(code, i, delta, cap)?)))
        .collect::<Result<_>>()?;
    let (size_witnesses, entropy_witnesses): (Vec<_>, Vec<_>) = per_coord.into_iter().unzip();
    let infeasible: Vec<usize> = size_witnesses
        .iter()
        .enumerate()
        .filter(|(_, w)| w.is_none())
        .map(|(i, _)| i)
        .collect();
    let (r, kappa) = if infeasible.is_empty() && code.n() > 0 {
        let max_size = size_witnesses.iter().flatten().map(|w| w.size()).max().unwrap();
        let max_h = entropy_witnesses.iter().flatten().map(|w| w.entropy).max().unwrap();
        (Some(max_size + 1 - delta), Some(max_h))
    } else {
        (None, None)
    };
    Ok(LocalityProfile {
        delta,
        cap,
        cap_active: cap < code.n(),
        r,
        kappa,
        size_witnesses,
        entropy_witnesses,
        infeasible,
    })
}

/// Profile induced by a list of declared repair sets: each coordinate takes
/// the smallest valid set containing it for `r`, the least-entropy one for `κ`.
pub fn profile_from_sets(code: &LinearCode, sets: &[CoordSet], delta: usize) -> Result<LocalityProfile> {
    let mut checked = Vec::new();
    for s in sets {
        let c = verify_repair_set(code, s, delta)?;
        if c.valid {
            checked.push((s, c));
        }
    }
    let pick = |i: usize, by_entropy: bool| {
        checked
            .iter()
            .filter(|(s, _)| s.contains(i))
            .min_by(|(sa, ca), (sb, cb)| {
                let ka = if by_entropy { (ca.entropy, ca.size) } else { (ca.size, ca.entropy) };
                let kb = if by_entropy { (cb.entropy, cb.size) } else { (cb.size, cb.entropy) };
                ka.cmp(&kb).then_with(|| sa.cmp(sb))
            })
            .map(|(s, c)| RepairWitness {
                coordinate: i,
                set: (*s).clone(),
                entropy: c.entropy,
                distance: c.exact_distance.unwrap(),
            })
    };
    let size_witnesses: Vec<_> = (0..code.n()).map(|i| pick(i, false)).collect();
    let entropy_witnesses: Vec<_> = (0..code.n()).map(|i| pick(i, true)).collect();
    let infeasible: Vec<usize> = (0..code.n()).filter(|&i| size_witnesses[i].is_none()).collect();
    let (r, kappa) = if infeasible.is_empty() && code.n() > 0 {
        let max_size = size_witnesses.iter().flatten().map(|w| w.size()).max().unwrap();
        let max_h = entropy_witnesses.iter().flatten().map(|w| w.entropy).max().unwrap();
        (Some(max_size + 1 - delta), Some(max_h))
    } else {
        (None, None)
    };
    Ok(LocalityProfile {
        delta,
        cap: code.n(),
        cap_active: false,
        r,
        kappa,
        size_witnesses,
        entropy_witnesses,
        infeasible,
    })
}

/// Locality of the simplex code `S(m, q)` through its `S(κ, q)` subcodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SimplexLocality {
    pub r: usize,
    pub delta_local: usize,
}

/// `δ = q^(κ-1)` and `r = (q^κ - 1)/(q - 1) - q^(κ-1) + 1 = (q^(κ-1) + q - 2)/(q - 1)`.
pub fn simplex_locality(m: usize, q: u32, kappa: usize) -> Result<SimplexLocality> {
    if kappa < 2 || kappa > m {
        return Err(Error::InvalidParameters(format!("κ = {kappa} must lie in 2..={m}")));
    }
    let q = q as usize;
    let delta_local = q.pow(kappa as u32 - 1);
    let r = (delta_local + q - 2) / (q - 1);
    Ok(SimplexLocality { r, delta_local })
}
