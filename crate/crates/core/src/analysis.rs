//! Full analysis of one code: parameters, locality, every applicable bound,
//! and which bounds the code meets.

use std::fmt;

use serde::Serialize;

use crate::bounds::{self, BoundReport, LogConvex, Target};
use crate::code::LinearCode;
use crate::coords::CoordSet;
use crate::error::Result;
use crate::locality::{compute_locality, profile_from_sets, verify_repair_set, LocalityProfile, RepairCheck};

/// Parameters for [`bound_table`]; each bound is evaluated when its inputs
/// are present.
#[derive(Clone, Debug, Default, Serialize)]
pub struct BoundInputs {
    pub n: usize,
    pub q: u32,
    pub k: Option<usize>,
    pub d: Option<usize>,
    pub r: Option<usize>,
    pub delta: Option<usize>,
    pub kappa: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Skipped {
    pub name: String,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundTable {
    pub inputs: BoundInputs,
    pub bounds: Vec<BoundReport>,
    pub skipped: Vec<Skipped>,
}

fn distance_report(name: &str, value: i64, note: Option<String>) -> BoundReport {
    BoundReport {
        name: name.into(),
        target: Target::Distance,
        value,
        witness: None,
        components: Vec::new(),
        note,
    }
}

/// Every bound whose inputs are available.
pub fn bound_table(inputs: &BoundInputs) -> BoundTable {
    let BoundInputs { n, q, k, d, r, delta, kappa } = *inputs;
    let mut bounds = Vec::new();
    let mut skipped = Vec::new();
    let mut push = |name: &str, res: Result<BoundReport>| match res {
        Ok(b) => bounds.push(b),
        Err(e) => skipped.push(Skipped { name: name.into(), reason: e.to_string() }),
    };
    if let Some(d) = d {
        let ko = bounds::k_opt_detail(n, d, q);
        push(
            "k_opt",
            Ok(BoundReport {
                name: "k_opt".into(),
                target: Target::Dimension,
                value: ko.value as i64,
                witness: None,
                components: ko.active,
                note: None,
            }),
        );
    }
    if let (Some(k), Some(r)) = (k, r) {
        push("gopalan", bounds::bound_gopalan(n, k, r).map(|v| distance_report("gopalan", v, None)));
        if let Some(delta) = delta {
            push("prakash", bounds::bound_prakash(n, k, r, delta).map(|v| distance_report("prakash", v, None)));
            push("singleton_g", bounds::bound_singleton_g(n, k, r, delta, q));
        }
    }
    if let (Some(k), Some(kappa), Some(delta)) = (k, kappa, delta) {
        push(
            "singleton_g_kappa",
            bounds::bound_singleton_g_kappa(n, k, kappa, delta, q)
                .map(|v| distance_report("singleton_g_kappa", v, Some(format!("κ = {kappa}")))),
        );
    }
    if let (Some(d), Some(r)) = (d, r) {
        push("cm", bounds::bound_cm(n, d, r, q));
        if let Some(delta) = delta {
            push("cm_rdelta", bounds::bound_cm_rdelta(n, d, r, delta, q));
            push("abhmt", bounds::bound_abhmt(n, d, r, delta, q, LogConvex::Best));
            push("cmg_r", bounds::bound_cmg_r(n, d, r, delta, q));
        }
    }
    if let (Some(d), Some(kappa), Some(delta)) = (d, kappa, delta) {
        push("cmg_kappa", bounds::bound_cmg_kappa(n, d, kappa, delta, q));
        push("cmg_tkappa", bounds::bound_cmg_tkappa(n, d, kappa, delta, q));
    }
    BoundTable { inputs: inputs.clone(), bounds, skipped }
}

impl fmt::Display for BoundTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bounds {
            writeln!(f, "  {b}")?;
        }
        for s in &self.skipped {
            writeln!(f, "  {:<17} skipped: {}", s.name, s.reason)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Verdicts {
    /// Bounds the code meets with equality.
    pub meets: Vec<String>,
    /// Bounds the actual parameters exceed; nonempty only if something is wrong.
    pub violated: Vec<String>,
}

fn verdicts(table: &BoundTable, k: usize, d: usize) -> Verdicts {
    let mut v = Verdicts::default();
    for b in &table.bounds {
        let actual = match b.target {
            Target::Dimension => k as i64,
            Target::Distance => d as i64,
        };
        if actual == b.value {
            v.meets.push(b.name.clone());
        } else if actual > b.value {
            v.violated.push(b.name.clone());
        }
    }
    v
}

#[derive(Clone, Debug, Serialize)]
pub struct DeclaredSets {
    pub r: Option<usize>,
    pub kappa: Option<usize>,
    pub checks: Vec<(CoordSet, RepairCheck)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DeltaAnalysis {
    pub delta: usize,
    pub profile: LocalityProfile,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub declared: Option<DeclaredSets>,
    pub bounds: BoundTable,
    pub verdicts: Verdicts,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub source: String,
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub declared_k: usize,
    pub d: Option<usize>,
    pub warnings: Vec<String>,
    pub localities: Vec<DeltaAnalysis>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
}

/// Analyses `code` at each requested local distance.
pub fn analyze(
    source: &str,
    code: &LinearCode,
    declared_k: usize,
    repair_sets: &[CoordSet],
    deltas: &[usize],
    cap: Option<usize>,
    warnings: Vec<String>,
) -> Result<AnalysisReport> {
    let d = code.min_distance()?;
    let mut localities = Vec::new();
    for &delta in deltas {
        let profile = compute_locality(code, delta, cap.map(|c| c.min(code.n())))?;
        let declared = if repair_sets.is_empty() {
            None
        } else {
            let p = profile_from_sets(code, repair_sets, delta)?;
            let checks = repair_sets
                .iter()
                .map(|s| Ok((s.clone(), verify_repair_set(code, s, delta)?)))
                .collect::<Result<Vec<_>>>()?;
            Some(DeclaredSets { r: p.r, kappa: p.kappa, checks })
        };
        let inputs = BoundInputs {
            n: code.n(),
            q: code.q(),
            k: (code.k() > 0).then_some(code.k()),
            d,
            r: profile.r,
            delta: Some(delta),
            kappa: profile.kappa,
        };
        let table = bound_table(&inputs);
        let verdicts = verdicts(&table, code.k(), d.unwrap_or(0));
        localities.push(DeltaAnalysis { delta, profile, declared, bounds: table, verdicts });
    }
    Ok(AnalysisReport {
        source: source.into(),
        q: code.q(),
        n: code.n(),
        k: code.k(),
        declared_k,
        d,
        warnings,
        localities,
        timestamp: None,
    })
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "code: {}", self.source)?;
        if let Some(t) = &self.timestamp {
            writeln!(f, "generated: {t}")?;
        }
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        let d = self.d.map_or("-".to_string(), |d| d.to_string());
        writeln!(f, "parameters: [n={}, k={}, d={d}] over GF({})", self.n, self.k, self.q)?;
        for a in &self.localities {
            let p = &a.profile;
            writeln!(f)?;
            writeln!(f, "δ = {} (repair sets searched up to size {})", a.delta, p.cap)?;
            match (p.r, p.kappa) {
                (Some(r), Some(kappa)) => writeln!(f, "  locality: r = {r}, κ = {kappa}")?,
                _ => {
                    let names: Vec<String> = p.infeasible.iter().map(|i| (i + 1).to_string()).collect();
                    writeln!(f, "  locality: infeasible under the cap for coordinates {}", names.join(","))?
                }
            }
            if p.cap_active {
                writeln!(f, "  note: the size cap {} is below n = {}; a larger --cap might lower κ", p.cap, self.n)?;
            }
            for w in p.entropy_witnesses.iter().flatten() {
                writeln!(
                    f,
                    "    coord {:>3}: {} (H = {}, d = {})",
                    w.coordinate + 1,
                    w.set,
                    w.entropy,
                    w.distance
                )?;
            }
            if let Some(dec) = &a.declared {
                let show = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
                writeln!(f, "  declared repair sets: r = {}, κ = {}", show(dec.r), show(dec.kappa))?;
                for (s, c) in &dec.checks {
                    let dist = c.exact_distance.map_or("-".to_string(), |v| v.to_string());
                    let state = if c.valid { "valid".to_string() } else { format!("invalid: {}", c.reason.as_deref().unwrap_or("")) };
                    writeln!(f, "    {s}: H = {}, |R| = {}, d = {dist}, {state}", c.entropy, c.size)?;
                }
            }
            writeln!(f, "  bounds:")?;
            write!(f, "{}", a.bounds)?;
            writeln!(f, "  meets with equality: {}", if a.verdicts.meets.is_empty() { "none".into() } else { a.verdicts.meets.join(", ") })?;
            if !a.verdicts.violated.is_empty() {
                writeln!(f, "  VIOLATED: {}", a.verdicts.violated.join(", "))?;
            }
        }
        Ok(())
    }
}
