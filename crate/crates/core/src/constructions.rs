//! Simplex codes, the three worked example codes, and optimality checks.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::bounds::{self, BoundReport};
use crate::code::LinearCode;
use crate::coords::CoordSet;
use crate::error::{Error, Result};
use crate::galois::{Field, FieldElem};
use crate::locality::{compute_locality, profile_from_sets};

/// `S(m, q)`: one column per projective point of GF(q)^m, represented with
/// first nonzero entry 1, in lexicographic column order.
pub fn simplex(m: usize, q: u32) -> Result<LinearCode> {
    if m < 1 {
        return Err(Error::InvalidParameters("simplex dimension m must be at least 1".into()));
    }
    let field = Arc::new(Field::new(q)?);
    let total = (q as u64).checked_pow(m as u32).filter(|&t| t <= 1 << 24).ok_or_else(|| {
        Error::InvalidParameters(format!("simplex S({m},{q}) is too large"))
    })?;
    let mut columns: Vec<Vec<u32>> = Vec::new();
    for idx in 0..total {
        let mut v = vec![0u32; m];
        let mut x = idx;
        for slot in v.iter_mut().rev() {
            *slot = (x % q as u64) as u32;
            x /= q as u64;
        }
        if v.iter().find(|&&c| c != 0) == Some(&1) {
            columns.push(v);
        }
    }
    let rows = (0..m)
        .map(|i| columns.iter().map(|c| field.elem(c[i])).collect::<Result<Vec<FieldElem>>>())
        .collect::<Result<Vec<_>>>()?;
    LinearCode::new(field, rows)
}

/// `(q^m - 1) / (q - 1)`.
pub fn simplex_length(m: usize, q: u32) -> usize {
    ((q as usize).pow(m as u32) - 1) / (q as usize - 1)
}

/// Whether `code` is a simplex code up to column order and choice of basis:
/// its columns are exactly the projective points of GF(q)^k, each once.
pub fn is_simplex(code: &LinearCode) -> bool {
    let k = code.k();
    if k == 0 || code.n() != simplex_length(k, code.q()) {
        return false;
    }
    let (basis, _) = code.rref();
    let field = code.field();
    let mut seen = BTreeSet::new();
    for j in 0..code.n() {
        let col: Vec<FieldElem> = basis.iter().take(k).map(|r| r[j]).collect();
        let Some(&lead) = col.iter().find(|x| !x.is_zero()) else {
            return false;
        };
        let inv = field.inv(lead).expect("nonzero");
        let canon: Vec<u32> = col.iter().map(|&x| field.mul(x, inv).value()).collect();
        if !seen.insert(canon) {
            return false;
        }
    }
    true
}

/// Declared parameters of a named code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Declared {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub delta: usize,
    /// Locality read off the declared repair sets (largest size minus `δ - 1`).
    pub r: usize,
    pub kappa: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct NamedCode {
    pub name: String,
    #[serde(skip)]
    pub code: LinearCode,
    pub declared: Declared,
    pub repair_sets: Vec<CoordSet>,
    pub provenance: String,
}

fn one_based_sets(sets: &[&[usize]], n: usize) -> Result<Vec<CoordSet>> {
    sets.iter().map(|s| CoordSet::from_one_based(s, n)).collect()
}

/// The three worked example codes, numbered 1 to 3.
pub fn paper_example(which: u32) -> Result<NamedCode> {
    match which {
        1 => {
            let code = LinearCode::from_u32_rows(
                2,
                &[
                    vec![1, 0, 0, 0, 1, 0, 1, 1, 1, 1],
                    vec![0, 1, 0, 0, 1, 1, 0, 1, 1, 1],
                    vec![0, 0, 1, 0, 0, 1, 0, 1, 0, 1],
                    vec![0, 0, 0, 1, 0, 0, 1, 0, 1, 1],
                ],
            )?;
            Ok(NamedCode {
                name: "example-1".into(),
                repair_sets: one_based_sets(
                    &[&[1, 2, 3, 5, 6, 8], &[2, 3, 6, 7, 9, 10], &[1, 4, 6, 7, 8, 10]],
                    10,
                )?,
                code,
                declared: Declared { n: 10, k: 4, d: 4, delta: 3, r: 4, kappa: 3 },
                provenance: "binary [10,4,4] code with three overlapping repair sets of entropy 3".into(),
            })
        }
        2 => {
            let c1 = simplex(3, 2)?;
            let c2 = c1.puncture(&CoordSet::from_indices([6]))?;
            let code = c1.direct_sum(&c2)?;
            Ok(NamedCode {
                name: "example-2".into(),
                repair_sets: one_based_sets(&[&[1, 2, 3, 4, 5, 6, 7], &[8, 9, 10, 11, 12, 13]], 13)?,
                code,
                declared: Declared { n: 13, k: 6, d: 3, delta: 3, r: 5, kappa: 3 },
                provenance: "S(3,2) ⊕ S(3,2) punctured on its last coordinate".into(),
            })
        }
        3 => {
            let code = LinearCode::from_u32_rows(
                2,
                &[
                    vec![1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
                    vec![0, 0, 0, 0, 1, 1, 1, 0, 0, 0],
                    vec![0, 0, 0, 0, 0, 0, 0, 1, 1, 1],
                ],
            )?;
            Ok(NamedCode {
                name: "example-3".into(),
                repair_sets: one_based_sets(&[&[1, 2, 3, 4], &[5, 6, 7], &[8, 9, 10]], 10)?,
                code,
                declared: Declared { n: 10, k: 3, d: 3, delta: 3, r: 2, kappa: 1 },
                provenance: "three repetition blocks of lengths 4, 3, 3".into(),
            })
        }
        other => Err(Error::InvalidParameters(format!("no example {other}; choose 1, 2 or 3"))),
    }
}

/// Which bounds a code meets with equality.
#[derive(Clone, Debug, Serialize)]
pub struct OptimalityReport {
    pub name: String,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub delta: usize,
    /// Minimal locality found by exhaustive search.
    pub r: usize,
    pub kappa: usize,
    /// Locality of the declared repair sets, when there are any.
    pub declared_r: Option<usize>,
    pub declared_kappa: Option<usize>,
    pub singleton_g: BoundReport,
    pub cmg_kappa: BoundReport,
    pub cmg_r: BoundReport,
    pub meets: Vec<String>,
    /// True when no bound is violated by the actual parameters.
    pub sound: bool,
}

/// Computes the exact locality profile at `δ` and compares `k` and `d`
/// against the Singleton-type and CMG bounds.
pub fn verify_optimality(named: &NamedCode, delta: usize) -> Result<OptimalityReport> {
    let code = &named.code;
    let (n, k) = (code.n(), code.k());
    let d = code
        .min_distance()?
        .ok_or_else(|| Error::ZeroDimensional(format!("{} has no nonzero codeword", named.name)))?;
    let profile = compute_locality(code, delta, Some(n))?;
    let (Some(r), Some(kappa)) = (profile.r, profile.kappa) else {
        return Err(Error::Precondition(format!(
            "{} has no repair set of distance {delta} for coordinates {:?}",
            named.name,
            profile.infeasible.iter().map(|i| i + 1).collect::<Vec<_>>()
        )));
    };
    let declared = if named.repair_sets.is_empty() {
        None
    } else {
        Some(profile_from_sets(code, &named.repair_sets, delta)?)
    };
    let q = code.q();
    let singleton_g = bounds::bound_singleton_g(n, k, r, delta, q)?;
    let cmg_kappa = bounds::bound_cmg_kappa(n, d, kappa, delta, q)?;
    let cmg_r = bounds::bound_cmg_r(n, d, r, delta, q)?;
    let mut meets = Vec::new();
    if singleton_g.value == d as i64 {
        meets.push(singleton_g.name.clone());
    }
    for b in [&cmg_kappa, &cmg_r] {
        if b.value == k as i64 {
            meets.push(b.name.clone());
        }
    }
    let sound = singleton_g.value >= d as i64 && cmg_kappa.value >= k as i64 && cmg_r.value >= k as i64;
    Ok(OptimalityReport {
        name: named.name.clone(),
        n,
        k,
        d,
        delta,
        r,
        kappa,
        declared_r: declared.as_ref().and_then(|p| p.r),
        declared_kappa: declared.as_ref().and_then(|p| p.kappa),
        singleton_g,
        cmg_kappa,
        cmg_r,
        meets,
        sound,
    })
}
