//! Constructive large low-entropy sets.
//!
//! Three constructions, each checked exactly after it runs:
//!
//! * [`correct_with_reschain`]: grow a closed set `F` by a res-chain element
//!   `S` of a repair set so that the entropy rises by at most `α` while the
//!   size rises by at least `G(α, ceil(δ / q^(κ-α)))`.
//! * [`extend_by_kappa`]: greedily add repair sets until the entropy budget
//!   `κ` would be exceeded, then finish with one correction; the size grows
//!   by at least `G(κ, δ)`.
//! * [`build_low_entropy_set`]: for `λ = aκ + b`, a set `I` with `H(I) <= λ`
//!   and `|I| >= (a+1) G(κ,δ) - G(κ-b,δ)`.

use std::fmt;

use serde::Serialize;

use crate::bounds::griesmer_length;
use crate::code::LinearCode;
use crate::coords::CoordSet;
use crate::error::{Error, Result};
use crate::locality::LocalityProfile;
use crate::residual::res_chain_within;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StepKind {
    /// `cl(∅)` as the starting set.
    Start,
    /// `F ← cl(F ∪ R)` for a whole repair set.
    RepairSet { repair_set: CoordSet },
    /// `F ← cl(F ∪ S)` with `S` a res-chain element of `chain_top`.
    Correction { repair_set: CoordSet, chain_top: CoordSet, element: CoordSet, alpha: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    #[serde(flatten)]
    pub kind: StepKind,
    pub entropy_before: usize,
    pub entropy_after: usize,
    pub size_before: usize,
    pub size_after: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Trace(pub Vec<Step>);

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            let what = match &s.kind {
                StepKind::Start => "start cl(∅)".to_string(),
                StepKind::RepairSet { repair_set } => format!("add repair set {repair_set}"),
                StepKind::Correction { repair_set, chain_top, element, alpha } => format!(
                    "correct with α={alpha} via {element} in the chain of {chain_top} (repair set {repair_set})"
                ),
            };
            writeln!(
                f,
                "{:>3}. {what}: H {} -> {}, |F| {} -> {}",
                i + 1,
                s.entropy_before,
                s.entropy_after,
                s.size_before,
                s.size_after
            )?;
        }
        Ok(())
    }
}

/// Mutable state of a construction: a closed set, the entropy used since
/// the start, and the steps taken.
#[derive(Clone, Debug, Serialize)]
pub struct BuilderState {
    pub current: CoordSet,
    pub initial_entropy: usize,
    pub gamma: usize,
    pub trace: Trace,
}

impl BuilderState {
    pub fn new(code: &LinearCode, start: CoordSet) -> Result<Self> {
        let current = code.closure(&start)?;
        let initial_entropy = code.entropy(&current)?;
        Ok(BuilderState { current, initial_entropy, gamma: 0, trace: Trace::default() })
    }

    fn advance(&mut self, code: &LinearCode, next: CoordSet, kind: StepKind) -> Result<()> {
        let entropy_before = code.entropy(&self.current)?;
        let entropy_after = code.entropy(&next)?;
        self.trace.0.push(Step {
            kind,
            entropy_before,
            entropy_after,
            size_before: self.current.len(),
            size_after: next.len(),
        });
        self.current = next;
        self.gamma = entropy_after - self.initial_entropy;
        Ok(())
    }

    fn fail(&self, message: String) -> Error {
        Error::Construction { message, trace: self.trace.to_string() }
    }
}

fn is_closed(code: &LinearCode, set: &CoordSet) -> Result<bool> {
    Ok(&code.closure(set)? == set)
}

/// `H(R) - H(F ∩ R)`.
fn gain(code: &LinearCode, f: &CoordSet, r: &CoordSet) -> Result<usize> {
    Ok(code.entropy(r)? - code.entropy(&f.intersection(r))?)
}

/// Result of one res-chain correction.
#[derive(Clone, Debug, Serialize)]
pub struct Correction {
    pub result: CoordSet,
    /// Top of the res-chain that was walked: `cl(R)`, or `R` itself when the
    /// closure's intersection with `F` leaves too little entropy.
    pub chain_top: CoordSet,
    pub element: CoordSet,
    pub entropy: usize,
    pub size: usize,
    /// `G(α, ceil(δ / q^(κ-α)))`.
    pub guaranteed_growth: usize,
}

pub(crate) fn ceil_div_pow(delta: usize, q: u32, e: usize) -> usize {
    let denom = (q as u128).checked_pow(e as u32).unwrap_or(u128::MAX);
    (delta as u128).div_ceil(denom) as usize
}

/// Finds `S` in the res-chain of `cl(R)` with `H(S) - H(S ∩ F) = α` and
/// returns `cl(F ∪ S)`.
///
/// Requires `F` closed, `1 <= α <= κ`, `H(R) <= κ`, `d(C|_R) >= δ` and
/// `H(R) - H(F ∩ R) >= α`. The chain is walked from the top; the first
/// element meeting the equality is used. If `cl(R)` meets `F` in more
/// entropy than `R` does, the chain of `R` is walked instead.
pub fn correct_with_reschain(
    code: &LinearCode,
    f: &CoordSet,
    r: &CoordSet,
    alpha: usize,
    kappa: usize,
    delta: usize,
) -> Result<Correction> {
    if !is_closed(code, f)? {
        return Err(Error::Precondition(format!("F = {f} is not closed")));
    }
    if alpha == 0 || alpha > kappa {
        return Err(Error::Precondition(format!("α = {alpha} must lie in 1..={kappa}")));
    }
    let h_r = code.entropy(r)?;
    if h_r > kappa {
        return Err(Error::Precondition(format!("H(R) = {h_r} exceeds κ = {kappa}")));
    }
    let g = gain(code, f, r)?;
    if g < alpha {
        return Err(Error::Precondition(format!(
            "H(R) - H(F ∩ R) = {g} is smaller than α = {alpha}"
        )));
    }
    match code.restrict(r)?.min_distance()? {
        Some(d) if d >= delta => {}
        other => {
            return Err(Error::Precondition(format!(
                "d(C|_R) = {other:?} is below δ = {delta}"
            )))
        }
    }
    let closed_r = code.closure(r)?;
    let chain_top = if gain(code, f, &closed_r)? >= alpha { closed_r } else { r.clone() };
    let chain = res_chain_within(code, &chain_top)?;
    let element = chain
        .levels
        .iter()
        .map(|l| &l.set)
        .find(|s| gain(code, f, s).ok() == Some(alpha))
        .cloned()
        .ok_or_else(|| Error::Construction {
            message: format!("no res-chain element of {chain_top} has entropy gain {alpha}"),
            trace: String::new(),
        })?;
    let result = code.closure(&f.union(&element))?;
    let entropy = code.entropy(&result)?;
    let guaranteed_growth =
        griesmer_length(alpha, ceil_div_pow(delta, code.q(), kappa - alpha), code.q());
    let h_f = code.entropy(f)?;
    if entropy > h_f + alpha || result.len() < f.len() + guaranteed_growth {
        return Err(Error::Construction {
            message: format!(
                "correction broke its guarantee: H {h_f} -> {entropy} (α = {alpha}), |F| {} -> {} (need +{guaranteed_growth})",
                f.len(),
                result.len()
            ),
            trace: String::new(),
        });
    }
    Ok(Correction { size: result.len(), result, chain_top, element, entropy, guaranteed_growth })
}

/// Validated repair sets for dimension-locality `(κ, δ)`, deduplicated
/// and sorted.
#[derive(Clone, Debug)]
pub struct RepairFamily {
    pub sets: Vec<CoordSet>,
    pub kappa: usize,
    pub delta: usize,
}

impl RepairFamily {
    /// Checks that every set has entropy at most `κ` and restricted distance
    /// at least `δ`, and that every coordinate is covered.
    pub fn new(code: &LinearCode, sets: &[CoordSet], kappa: usize, delta: usize) -> Result<Self> {
        let mut sets: Vec<CoordSet> = sets.to_vec();
        sets.sort();
        sets.dedup();
        for s in &sets {
            let h = code.entropy(s)?;
            if h > kappa {
                return Err(Error::Precondition(format!("repair set {s} has entropy {h} > κ = {kappa}")));
            }
            match code.restrict(s)?.min_distance()? {
                Some(d) if d >= delta => {}
                other => {
                    return Err(Error::Precondition(format!(
                        "repair set {s} has restricted distance {other:?} < δ = {delta}"
                    )))
                }
            }
        }
        if let Some(i) = (0..code.n()).find(|&i| !sets.iter().any(|s| s.contains(i))) {
            return Err(Error::Precondition(format!("coordinate {} has no repair set", i + 1)));
        }
        Ok(RepairFamily { sets, kappa, delta })
    }

    /// The least-entropy witnesses of a computed profile.
    pub fn from_profile(code: &LinearCode, profile: &LocalityProfile) -> Result<Self> {
        let kappa = profile
            .kappa
            .ok_or_else(|| Error::Precondition("the locality profile has uncovered coordinates".into()))?;
        Self::new(code, &profile.kappa_sets()?, kappa, profile.delta)
    }
}

/// The greedy accumulation with a final correction. Starting from the
/// closed set in `state` with `H + budget <= k`, ends with entropy at most
/// `H + budget` and size at least `|F| + G(budget, δ)`.
///
/// Each round either finishes with a correction, when some repair set `R`
/// has `H(R) - H(F ∩ R) >= budget - γ`, or adds the repair set of largest
/// such gain (ties to the earliest in the family) with `cl(R) ⊄ F`.
pub fn extend_by_kappa(
    code: &LinearCode,
    family: &RepairFamily,
    budget: usize,
    state: &mut BuilderState,
) -> Result<()> {
    let start_entropy = code.entropy(&state.current)?;
    let start_size = state.current.len();
    let start_gamma = state.gamma;
    if start_entropy + budget > code.k() {
        return Err(Error::Precondition(format!(
            "H(F) + κ = {} exceeds k = {}",
            start_entropy + budget,
            code.k()
        )));
    }
    loop {
        let used = state.gamma - start_gamma;
        let need = budget - used;
        let mut best: Option<(usize, &CoordSet)> = None;
        for r in &family.sets {
            if r.is_subset(&state.current) {
                continue;
            }
            let g = gain(code, &state.current, r)?;
            if best.is_none_or(|(bg, _)| g > bg) {
                best = Some((g, r));
            }
        }
        let Some((g, r)) = best else {
            return Err(state.fail(format!(
                "every repair set lies inside F with H(F) = {} < H(F_0) + κ; the preconditions cannot hold",
                code.entropy(&state.current)?
            )));
        };
        if g >= need {
            let c = correct_with_reschain(code, &state.current, r, need, budget, family.delta)
                .map_err(|e| state.fail(e.to_string()))?;
            let kind = StepKind::Correction {
                repair_set: r.clone(),
                chain_top: c.chain_top,
                element: c.element,
                alpha: need,
            };
            state.advance(code, c.result, kind)?;
            break;
        }
        let next = code.closure(&state.current.union(r))?;
        state.advance(code, next, StepKind::RepairSet { repair_set: r.clone() })?;
    }
    let h = code.entropy(&state.current)?;
    let need_size = start_size + griesmer_length(budget, family.delta, code.q());
    if h > start_entropy + budget || state.current.len() < need_size {
        return Err(state.fail(format!(
            "greedy extension broke its guarantee: H = {h} (limit {}), |F| = {} (need {need_size})",
            start_entropy + budget,
            state.current.len()
        )));
    }
    Ok(())
}

/// A low-entropy set with its guarantee.
#[derive(Clone, Debug, Serialize)]
pub struct BuiltSet {
    pub set: CoordSet,
    pub entropy: usize,
    pub size: usize,
    pub lambda: usize,
    pub a: usize,
    pub b: usize,
    pub kappa: usize,
    pub delta: usize,
    /// `(a+1) G(κ,δ) - G(κ-b,δ)`.
    pub guaranteed_size: usize,
    pub trace: Trace,
}

/// Builds `I` with `H(I) <= λ` and `|I| >= (a+1) G(κ,δ) - G(κ-b,δ)`
/// where `λ = aκ + b`, `0 <= b < κ`.
///
/// The start is `cl(∅)` when `b = 0`; otherwise a correction of `cl(∅)`
/// by the repair set of largest entropy if that entropy is at least `b`,
/// or else the greedy extension with budget `b` (every repair set then has
/// entropy below `b`). The greedy extension with budget `κ` is then applied
/// `a` times.
pub fn build_low_entropy_set(code: &LinearCode, family: &RepairFamily, lambda: usize) -> Result<BuiltSet> {
    if lambda > code.k() {
        return Err(Error::Precondition(format!("λ = {lambda} exceeds k = {}", code.k())));
    }
    let (kappa, delta, q) = (family.kappa, family.delta, code.q());
    if kappa == 0 {
        return Err(Error::Precondition("κ must be at least 1".into()));
    }
    let (a, b) = (lambda / kappa, lambda % kappa);
    let mut state = BuilderState::new(code, CoordSet::empty())?;
    state.trace.0.push(Step {
        kind: StepKind::Start,
        entropy_before: 0,
        entropy_after: state.initial_entropy,
        size_before: 0,
        size_after: state.current.len(),
    });
    if b > 0 {
        let mut best: Option<(usize, &CoordSet)> = None;
        for r in &family.sets {
            let h = code.entropy(r)?;
            if best.is_none_or(|(bh, _)| h > bh) {
                best = Some((h, r));
            }
        }
        match best {
            Some((h, r)) if h >= b => {
                let c = correct_with_reschain(code, &state.current, r, b, kappa, delta)
                    .map_err(|e| state.fail(e.to_string()))?;
                let kind = StepKind::Correction {
                    repair_set: r.clone(),
                    chain_top: c.chain_top,
                    element: c.element,
                    alpha: b,
                };
                state.advance(code, c.result, kind)?;
            }
            _ => {
                let reduced = RepairFamily { sets: family.sets.clone(), kappa: b, delta };
                extend_by_kappa(code, &reduced, b, &mut state)?;
            }
        }
    }
    for _ in 0..a {
        extend_by_kappa(code, family, kappa, &mut state)?;
    }
    let entropy = code.entropy(&state.current)?;
    let g = griesmer_length(kappa, delta, q);
    let guaranteed_size = (a + 1) * g - griesmer_length(kappa - b, delta, q);
    if entropy > lambda || state.current.len() < guaranteed_size {
        return Err(state.fail(format!(
            "result broke its guarantee: H(I) = {entropy} (λ = {lambda}), |I| = {} (need {guaranteed_size})",
            state.current.len()
        )));
    }
    Ok(BuiltSet {
        size: state.current.len(),
        set: state.current,
        entropy,
        lambda,
        a,
        b,
        kappa,
        delta,
        guaranteed_size,
        trace: state.trace,
    })
}
