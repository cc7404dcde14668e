//! Residual codes and res-chains.
//!
//! The residual of an `[n, k, d]` code is its restriction to the zero set of
//! a minimum-weight codeword; it has parameters `[n - d, k - 1, >= ceil(d/q)]`.
//! Iterating from a base set down to entropy zero gives the res-chain, whose
//! sets are always reported as subsets of the ambient coordinates of the
//! original code.

use serde::Serialize;

use crate::code::{LinearCode, DEFAULT_ENUMERATION_CAP};
use crate::coords::CoordSet;
use crate::error::{Error, Result};

/// One residual step taken inside an ambient code.
#[derive(Clone, Debug)]
pub struct Residual {
    /// Kept coordinates, as a subset of the ambient `[n]`.
    pub set: CoordSet,
    /// The restricted code on `set`.
    pub code: LinearCode,
    /// Weight of the minimum-weight codeword whose support was removed.
    pub removed_weight: usize,
}

/// Residual of `code` itself: kept coordinates are the zero positions of the
/// lexicographically first minimum-weight codeword.
pub fn residual(code: &LinearCode) -> Result<Residual> {
    residual_within(code, &CoordSet::full(code.n()))
}

/// Residual of `code|_base`, with the result expressed in ambient coordinates.
pub fn residual_within(code: &LinearCode, base: &CoordSet) -> Result<Residual> {
    let local = code.restrict(base)?;
    if local.is_zero_dimensional() {
        return Err(Error::ZeroDimensional(format!(
            "restriction to {base} has no nonzero codeword, so it has no residual"
        )));
    }
    let mw = local
        .min_weight_codeword_with_cap(DEFAULT_ENUMERATION_CAP)?
        .expect("k >= 1");
    let keep: Vec<usize> = mw
        .codeword
        .iter()
        .enumerate()
        .filter(|(_, x)| x.is_zero())
        .map(|(j, _)| j)
        .collect();
    let set: CoordSet = keep.iter().map(|&j| base.as_slice()[j]).collect();
    let code_on_set = local.restrict_unchecked(&keep);
    Ok(Residual { set, code: code_on_set, removed_weight: mw.weight })
}

/// One level of a res-chain.
#[derive(Clone, Debug, Serialize)]
pub struct ChainLevel {
    pub set: CoordSet,
    pub entropy: usize,
    /// Exact distance of the restriction; `None` once the level is zero-dimensional.
    pub distance: Option<usize>,
}

/// `S_0 ⊇ S_1 ⊇ ... ⊇ S_h` with `H(S_i) = h - i`, where `S_0` is the base set
/// and `h = H(S_0)`.
#[derive(Clone, Debug, Serialize)]
pub struct ResChain {
    pub q: u32,
    pub levels: Vec<ChainLevel>,
}

impl ResChain {
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Entropy of the top set.
    pub fn top_entropy(&self) -> usize {
        self.levels[0].entropy
    }

    /// Distance of the top set (zero-dimensional tops have none).
    pub fn top_distance(&self) -> Option<usize> {
        self.levels[0].distance
    }

    /// `ceil(d_top / q^(H(S_0) - H(S)))`, the distance every level must reach.
    pub fn guaranteed_distance(&self, level: usize) -> usize {
        let Some(d) = self.top_distance() else { return 0 };
        let drop = (self.top_entropy() - self.levels[level].entropy) as u32;
        let denom = (self.q as u128).checked_pow(drop).unwrap_or(u128::MAX);
        (d as u128).div_ceil(denom) as usize
    }

    /// Checks the level entropies step down by one and every level meets its
    /// guaranteed distance. Returns the first violation found.
    pub fn check(&self) -> std::result::Result<(), String> {
        let h = self.top_entropy();
        if self.levels.len() != h + 1 {
            return Err(format!("chain has {} levels for entropy {h}", self.levels.len()));
        }
        for (i, lvl) in self.levels.iter().enumerate() {
            if lvl.entropy != h - i {
                return Err(format!("level {i} has entropy {} instead of {}", lvl.entropy, h - i));
            }
            if i > 0 && !lvl.set.is_subset(&self.levels[i - 1].set) {
                return Err(format!("level {i} is not nested in level {}", i - 1));
            }
            if lvl.entropy > 0 {
                let need = self.guaranteed_distance(i);
                match lvl.distance {
                    Some(d) if d >= need => {}
                    other => {
                        return Err(format!("level {i} has distance {other:?}, needs >= {need}"))
                    }
                }
            }
        }
        Ok(())
    }
}

/// The res-chain of the whole code, `S_0 = [n]`.
pub fn res_chain(code: &LinearCode) -> Result<ResChain> {
    res_chain_within(code, &CoordSet::full(code.n()))
}

/// The res-chain of `code|_base`, reported in ambient coordinates.
pub fn res_chain_within(code: &LinearCode, base: &CoordSet) -> Result<ResChain> {
    let top = code.restrict(base)?;
    let mut levels = vec![ChainLevel {
        set: base.clone(),
        entropy: top.k(),
        distance: top.min_distance()?,
    }];
    let mut current = base.clone();
    let mut remaining = top.k();
    while remaining > 0 {
        let step = residual_within(code, &current)?;
        remaining -= 1;
        debug_assert_eq!(step.code.k(), remaining);
        levels.push(ChainLevel {
            set: step.set.clone(),
            entropy: step.code.k(),
            distance: step.code.min_distance()?,
        });
        current = step.set;
    }
    Ok(ResChain { q: code.q(), levels })
}
