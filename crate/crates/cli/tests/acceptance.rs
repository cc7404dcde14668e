//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the lines always reach the output.

use std::collections::HashSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use lrc_core::asymptotic::{self, uniform_grid, ROpt, Threshold};
use lrc_core::bounds::{
    bound_cm_rdelta, bound_cmg_kappa, bound_cmg_r, bound_prakash, bound_singleton_g, griesmer_dim, griesmer_length,
    k_opt, kappa_a, kappa_b, LogConvex,
};
use lrc_core::constructions::{is_simplex, paper_example, simplex};
use lrc_core::locality::{compute_locality, verify_repair_set};
use lrc_core::residual::{res_chain, residual};
use lrc_core::set_builder::{build_low_entropy_set, RepairFamily};
use lrc_core::{CoordSet, LinearCode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed;
/// Tolerance for numerically optimized curve values.
const CURVE_TOL: f64 = 1e-6;
/// Tolerance for closed-form threshold values.
const THRESHOLD_TOL: f64 = 1e-12;
/// Slack on exact line values evaluated in floating point.
const LINE_TOL: f64 = 1e-12;
const GRID: usize = 512;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome, Duration);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if $cond {
        } else {
            return Err(format!($($msg)+));
        }
    };
}

/// Brute-force facts about a code over a prime field, from its generator rows.
struct Oracle {
    q: u32,
    words: Vec<Vec<u32>>,
}

impl Oracle {
    fn new(q: u32, rows: &[Vec<u32>]) -> Self {
        let n = rows.first().map_or(0, Vec::len);
        let mut words = Vec::new();
        let mut msg = vec![0u32; rows.len()];
        loop {
            words.push((0..n).map(|j| msg.iter().zip(rows).map(|(m, r)| m * r[j]).sum::<u32>() % q).collect());
            let mut i = 0;
            while i < msg.len() && msg[i] == q - 1 {
                msg[i] = 0;
                i += 1;
            }
            if i == msg.len() {
                break;
            }
            msg[i] += 1;
        }
        Oracle { q, words }
    }

    fn of(code: &LinearCode) -> Self {
        Oracle::new(code.q(), &code.generator_u32())
    }

    fn distance(&self) -> Option<usize> {
        self.words.iter().map(|w| w.iter().filter(|&&x| x != 0).count()).filter(|&w| w > 0).min()
    }

    fn dimension(&self) -> usize {
        self.entropy(None)
    }

    fn entropy(&self, set: Option<&CoordSet>) -> usize {
        let distinct: HashSet<Vec<u32>> = self
            .words
            .iter()
            .map(|w| match set {
                Some(s) => s.iter().map(|j| w[j]).collect(),
                None => w.clone(),
            })
            .collect();
        let mut count = distinct.len();
        let mut h = 0;
        while count > 1 {
            count /= self.q as usize;
            h += 1;
        }
        h
    }

    fn restricted_distance(&self, set: &CoordSet) -> Option<usize> {
        self.words
            .iter()
            .map(|w| set.iter().filter(|&j| w[j] != 0).count())
            .filter(|&w| w > 0)
            .min()
    }
}

/// Σ_{i<k} ⌈d/q^i⌉, summed directly.
fn griesmer_oracle(k: usize, d: usize, q: u32) -> usize {
    let mut p: u128 = 1;
    let mut total = 0;
    for _ in 0..k {
        total += (d as u128).div_ceil(p) as usize;
        p = p.saturating_mul(q as u128);
    }
    total
}

fn criterion_1() -> Outcome {
    let e = paper_example(1).map_err(|e| e.to_string())?;
    let c = &e.code;
    let o = Oracle::of(c);
    ensure!((c.n(), o.dimension(), o.distance()) == (10, 4, Some(4)), "oracle parameters differ");
    ensure!((c.k(), c.min_distance().unwrap()) == (4, Some(4)), "library parameters differ");
    for s in &e.repair_sets {
        let chk = verify_repair_set(c, s, 3).map_err(|e| e.to_string())?;
        ensure!(
            (chk.entropy, chk.size, chk.exact_distance) == (3, 6, Some(3)) && chk.valid,
            "repair set {s}: {chk:?}"
        );
        ensure!(o.entropy(Some(s)) == 3 && o.restricted_distance(s) == Some(3), "oracle disagrees on {s}");
    }
    let p = compute_locality(c, 3, None).map_err(|e| e.to_string())?;
    ensure!((p.kappa, p.r) == (Some(3), Some(4)), "locality (κ, r) = ({:?}, {:?})", p.kappa, p.r);
    let b = bound_singleton_g(10, 4, 4, 3, 2).map_err(|e| e.to_string())?.value;
    ensure!(b == 4, "singleton_g = {b}");
    Ok("[10,4,4], κ=3, r=4, singleton_g = 4 = d".into())
}

fn criterion_2() -> Outcome {
    let e = paper_example(2).map_err(|e| e.to_string())?;
    let o = Oracle::of(&e.code);
    ensure!((e.code.n(), o.dimension(), o.distance()) == (13, 6, Some(3)), "oracle parameters differ");
    ensure!(e.code.min_distance().unwrap() == Some(3), "library distance differs");
    let b = bound_cmg_kappa(13, 3, 3, 3, 2).map_err(|e| e.to_string())?;
    ensure!(b.value == 6, "cmg_kappa = {}", b.value);
    let w = b.witness.ok_or("no witness")?;
    ensure!((w.lambda, w.shortened_length, w.k_opt, w.term) == (5, 4, 1, 6), "witness {w:?}");
    ensure!(k_opt(4, 3, 2) == 1, "k_opt(4,3) = {}", k_opt(4, 3, 2));
    Ok("[13,6,3], cmg_kappa = 6 via 5 + k_opt(4,3) = 6".into())
}

fn criterion_3() -> Outcome {
    let e = paper_example(3).map_err(|e| e.to_string())?;
    let o = Oracle::of(&e.code);
    ensure!((e.code.n(), o.dimension(), o.distance()) == (10, 3, Some(3)), "oracle parameters differ");
    ensure!(kappa_b(2, 3, 2) == 1, "κ_B = {}", kappa_b(2, 3, 2));
    ensure!(griesmer_length(1, 3, 2) == 3 && griesmer_oracle(1, 3, 2) == 3, "G(1,3) != 3");
    let b = bound_cmg_r(10, 3, 2, 3, 2).map_err(|e| e.to_string())?;
    ensure!(b.value == 3, "cmg_r = {}", b.value);
    let w = b.witness.ok_or("no witness")?;
    ensure!((w.lambda, w.shortened_length, w.k_opt, w.term) == (2, 4, 1, 3), "witness {w:?}");
    Ok("[10,3,3], κ_B = 1, G(1,3) = 3, cmg_r = 3 via 2 + k_opt(4,3) = 3".into())
}

fn criterion_4() -> Outcome {
    for (m, q) in [(3usize, 2u32), (4, 2), (2, 3), (3, 3)] {
        let s = simplex(m, q).map_err(|e| e.to_string())?;
        let n = ((q as usize).pow(m as u32) - 1) / (q as usize - 1);
        let d = (q as usize).pow(m as u32 - 1);
        let o = Oracle::of(&s);
        ensure!((s.n(), o.dimension(), o.distance()) == (n, m, Some(d)), "S({m},{q}) oracle parameters");
        ensure!(griesmer_oracle(m, d, q) == n && griesmer_length(m, d, q) == n, "S({m},{q}) not Griesmer");
        let res = residual(&s).map_err(|e| e.to_string())?;
        let expect = simplex(m - 1, q).map_err(|e| e.to_string())?;
        ensure!(
            res.code.n() == expect.n() && res.code.k() == m - 1 && is_simplex(&res.code),
            "S({m},{q}) residual is not S({},{q})",
            m - 1
        );
        for kappa in 2..=m {
            let delta = (q as usize).pow(kappa as u32 - 1);
            let p = compute_locality(&s, delta, Some(s.n())).map_err(|e| e.to_string())?;
            ensure!(p.kappa == Some(kappa), "S({m},{q}) δ={delta}: κ = {:?}, expected {kappa}", p.kappa);
        }
    }
    Ok("S(3,2), S(4,2), S(2,3), S(3,3)".into())
}

fn criterion_5() -> Outcome {
    let mut count = 0;
    for q in [2u32, 3, 4] {
        for a in 0..=8usize {
            for b in 0..=8usize {
                for delta in 1..=32usize {
                    let shrunk = (delta as u128).div_ceil((q as u128).pow(a as u32)) as usize;
                    let lhs = griesmer_oracle(a, delta, q) + griesmer_oracle(b, shrunk, q);
                    let rhs = griesmer_oracle(a + b, delta, q);
                    ensure!(lhs == rhs, "oracle additivity fails at a={a} b={b} δ={delta} q={q}");
                    ensure!(griesmer_length(a + b, delta, q) == rhs, "G({}, {delta}) over GF({q}) differs", a + b);
                    count += 1;
                }
            }
        }
    }
    let gk = |n, d| (0..=n).rev().find(|&k| griesmer_oracle(k, d, 2) <= n).unwrap();
    ensure!((gk(8, 5), gk(7, 5), gk(9, 5)) == (2, 1, 2), "oracle G_k values");
    ensure!((griesmer_dim(8, 5, 2), griesmer_dim(7, 5, 2), griesmer_dim(9, 5, 2)) == (2, 1, 2), "library G_k values");
    Ok(format!("{count} additivity cases; G_k(8,5)=2, G_k(7,5)=1, G_k(9,5)=2"))
}

fn random_binary_code(rng: &mut ChaCha8Rng, max_n: usize, max_k: usize) -> (Vec<Vec<u32>>, LinearCode) {
    loop {
        let k = rng.gen_range(1..=max_k);
        let n = rng.gen_range(k..=max_n);
        let rows: Vec<Vec<u32>> = (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..2)).collect()).collect();
        if let Ok(code) = LinearCode::from_u32_rows(2, &rows) {
            return (rows, code);
        }
    }
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for case in 0..200 {
        let (rows, code) = random_binary_code(&mut rng, 12, 5);
        let o = Oracle::new(2, &rows);
        let d = o.distance().ok_or("oracle found no nonzero word")?;
        let res = residual(&code).map_err(|e| e.to_string())?;
        ensure!(res.code.n() == code.n() - d, "case {case}: residual length {} != {}", res.code.n(), code.n() - d);
        ensure!(res.code.k() == code.k() - 1, "case {case}: residual dimension {}", res.code.k());
        if res.code.k() > 0 {
            let dr = Oracle::of(&res.code).distance().unwrap();
            ensure!(dr >= d.div_ceil(2), "case {case}: residual distance {dr} < ⌈{d}/2⌉");
        }
        let chain = res_chain(&code).map_err(|e| e.to_string())?;
        chain.check().map_err(|e| format!("case {case}: {e}"))?;
        for (i, lvl) in chain.levels.iter().enumerate() {
            if lvl.entropy > 0 {
                let actual = o.restricted_distance(&lvl.set).unwrap_or(0);
                ensure!(actual >= chain.guaranteed_distance(i), "case {case}: level {i} distance {actual}");
            }
        }
    }
    Ok("200 codes, zero violations".into())
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> CoordSet {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    for case in 0..1000 {
        let q = [2u32, 3][rng.gen_range(0..2)];
        let k = rng.gen_range(1..=4);
        let n = rng.gen_range(k..=10);
        let rows: Vec<Vec<u32>> = (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..q)).collect()).collect();
        let Ok(code) = LinearCode::from_u32_rows(q, &rows) else { continue };
        let o = Oracle::new(q, &rows);
        let (i, j) = (random_subset(&mut rng, n), random_subset(&mut rng, n));
        let h = |s: &CoordSet| code.entropy(s).unwrap();
        for s in [&i, &j] {
            ensure!(h(s) == o.entropy(Some(s)), "case {case}: entropy of {s} disagrees with enumeration");
        }
        ensure!(h(&CoordSet::empty()) == 0, "case {case}: H(∅) != 0");
        ensure!(h(&i) <= i.len(), "case {case}: H(I) > |I|");
        let u = i.union(&j);
        ensure!(h(&i) <= h(&u), "case {case}: not monotone");
        ensure!(h(&u) + h(&i.intersection(&j)) <= h(&i) + h(&j), "case {case}: not submodular");
        let ci = code.closure(&i).unwrap();
        ensure!(i.is_subset(&ci), "case {case}: I ⊄ cl(I)");
        ensure!(code.closure(&ci).unwrap() == ci, "case {case}: closure not idempotent");
        ensure!(ci.is_subset(&code.closure(&u).unwrap()), "case {case}: closure not monotone");
        ensure!(h(&ci) == h(&i), "case {case}: closure changes entropy");
    }
    Ok("1000 triples, zero violations".into())
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    let mut tuples = 0;
    while tuples < 1200 {
        let q = [2u32, 3][rng.gen_range(0..2)];
        let delta = rng.gen_range(2..=9);
        let n = rng.gen_range(delta..=40);
        let r = rng.gen_range(1..=(n + 1 - delta));
        let d = rng.gen_range(1..=n);
        let k = rng.gen_range(r..=n);
        let cmg = bound_cmg_r(n, d, r, delta, q).map_err(|e| e.to_string())?.value;
        let cm = bound_cm_rdelta(n, d, r, delta, q).map_err(|e| e.to_string())?.value;
        ensure!(cmg <= cm, "cmg_r {cmg} > cm_rdelta {cm} at n={n} d={d} r={r} δ={delta} q={q}");
        let sg = bound_singleton_g(n, k, r, delta, q).map_err(|e| e.to_string())?.value;
        let pr = bound_prakash(n, k, r, delta).map_err(|e| e.to_string())?;
        ensure!(sg <= pr, "singleton_g {sg} > prakash {pr} at n={n} k={k} r={r} δ={delta} q={q}");
        tuples += 1;
    }
    Ok(format!("{tuples} tuples, zero violations"))
}

fn criterion_9() -> Outcome {
    let mut cases: Vec<(String, LinearCode, RepairFamily)> = Vec::new();
    for which in 1..=3 {
        let e = paper_example(which).map_err(|e| e.to_string())?;
        let fam = RepairFamily::new(&e.code, &e.repair_sets, e.declared.kappa, e.declared.delta)
            .map_err(|e| e.to_string())?;
        cases.push((e.name, e.code, fam));
    }
    let s = simplex(4, 2).map_err(|e| e.to_string())?;
    for delta in [2, 4] {
        let p = compute_locality(&s, delta, Some(s.n())).map_err(|e| e.to_string())?;
        let fam = RepairFamily::from_profile(&s, &p).map_err(|e| e.to_string())?;
        cases.push((format!("S(4,2) δ={delta}"), s.clone(), fam));
    }
    let mut builds = 0;
    for (name, code, fam) in &cases {
        let o = Oracle::of(code);
        let d = o.distance().unwrap();
        for lambda in 0..=code.k() {
            let b = build_low_entropy_set(code, fam, lambda).map_err(|e| format!("{name} λ={lambda}: {e}"))?;
            let h = o.entropy(Some(&b.set));
            let guarantee = (b.a + 1) * griesmer_oracle(fam.kappa, fam.delta, code.q())
                - griesmer_oracle(fam.kappa - b.b, fam.delta, code.q());
            ensure!(b.a * fam.kappa + b.b == lambda && b.b < fam.kappa, "{name} λ={lambda}: bad split");
            ensure!(h <= lambda, "{name} λ={lambda}: H(I) = {h}");
            ensure!(b.set.len() >= guarantee, "{name} λ={lambda}: |I| = {} < {guarantee}", b.set.len());
            let short = code.shorten(&b.set).map_err(|e| e.to_string())?;
            let so = Oracle::of(&short);
            ensure!(so.dimension() == code.k() - h, "{name} λ={lambda}: shortened dimension {}", so.dimension());
            if let Some(ds) = so.distance() {
                ensure!(ds >= d, "{name} λ={lambda}: shortened distance {ds} < {d}");
            }
            builds += 1;
        }
    }
    Ok(format!("{builds} builds over examples 1-3 and S(4,2), zero violations"))
}

fn criterion_10() -> Outcome {
    let sg = asymptotic::singleton_g(0.0, 12, 9, 2);
    ensure!((sg - 0.25).abs() <= LINE_TOL, "singleton_g(0; 12,9,2) = {sg}");
    let sg = asymptotic::singleton_g(0.0, 4, 3, 2);
    ensure!((sg - 0.5).abs() <= LINE_TOL, "singleton_g(0; 4,3,2) = {sg}");
    let ab = asymptotic::abhmt(0.0, 6, 3, 2, LogConvex::Hamming).map_err(|e| e.to_string())?;
    ensure!((ab - 0.5).abs() <= LINE_TOL, "abhmt_hamming(0; 6,3,2) = {ab}");
    let delta_t = match asymptotic::threshold_delta_t(6, 3, 2, LogConvex::Hamming).map_err(|e| e.to_string())? {
        Threshold::Defined { delta_t, .. } => delta_t,
        other => return Err(format!("threshold undefined: {other:?}")),
    };
    ensure!((delta_t - 1.0 / 9.0).abs() <= THRESHOLD_TOL, "δ_t = {delta_t}");

    let grid = uniform_grid(GRID);
    let mut worst: f64 = 0.0;
    for (r, delta, q) in [(4usize, 3usize, 2u32), (6, 3, 2), (12, 9, 2), (3, 3, 3)] {
        let kb = kappa_b(r, delta, q);
        for &x in &grid {
            let num = asymptotic::cmg(x, r, delta, q, ROpt::Plotkin).map_err(|e| e.to_string())?;
            let closed = asymptotic::cmg_plotkin_closed(x, kb, delta, q);
            worst = worst.max((num - closed).abs());
        }
    }
    ensure!(worst <= CURVE_TOL, "numeric vs closed form differ by {worst:e}");

    for &x in &grid {
        let ab = asymptotic::abhmt(x, 6, 3, 2, LogConvex::Hamming).unwrap();
        let sg = asymptotic::singleton_g(x, 6, 3, 2);
        ensure!(ab <= sg + LINE_TOL, "(6,3,2) at {x}: abhmt {ab} > singleton_g {sg}");
        let ab = asymptotic::abhmt(x, 12, 9, 2, LogConvex::Best).unwrap();
        let sg = asymptotic::singleton_g(x, 12, 9, 2);
        ensure!(sg <= ab + LINE_TOL, "(12,9,2) at {x}: singleton_g {sg} > abhmt {ab}");
    }

    let ka = kappa_a(6, 3, 2, LogConvex::Hamming).map_err(|e| e.to_string())?;
    let mut strict_points = 0;
    for &x in grid.iter().filter(|&&x| x > delta_t) {
        let ours = asymptotic::cmg_plotkin_line(x, ka, 3, 2);
        let theirs = asymptotic::abhmt_line(x, 6, 3, 2, LogConvex::Hamming).unwrap();
        ensure!(ours < theirs, "(6,3,2) at {x}: {ours} is not below {theirs}");
        if x < 1.0 {
            let ours = asymptotic::cmg(x, 6, 3, 2, ROpt::Plotkin).unwrap();
            let theirs = asymptotic::abhmt(x, 6, 3, 2, LogConvex::Hamming).unwrap();
            ensure!(ours < theirs, "(6,3,2) at {x}: clamped {ours} is not below {theirs}");
        }
        strict_points += 1;
    }
    Ok(format!(
        "intercepts exact, δ_t = 1/9, closed form within {worst:.1e}, orderings hold, strict at {strict_points} points"
    ))
}

fn criterion_11() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_lrc")).arg("verify-paper").output().map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&out.stdout);
    ensure!(out.status.code() == Some(0), "exit status {:?}\n{text}", out.status);
    let passes = text.lines().filter(|l| l.starts_with("[PASS]")).count();
    ensure!(passes == 5, "{passes} of 5 checks passed\n{text}");
    Ok("verify-paper exits 0 with 5 passing checks".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (1, "example 1 golden values", criterion_1, Duration::from_secs(1)),
        (2, "example 2 golden values", criterion_2, Duration::from_secs(1)),
        (3, "example 3 golden values", criterion_3, Duration::from_secs(1)),
        (4, "simplex suite", criterion_4, Duration::from_secs(30)),
        (5, "Griesmer additivity and non-log-convexity", criterion_5, Duration::from_secs(5)),
        (6, "residual parameters on random binary codes", criterion_6, Duration::from_secs(60)),
        (7, "polymatroid and closure properties", criterion_7, Duration::from_secs(30)),
        (8, "bound dominance sweep", criterion_8, Duration::from_secs(60)),
        (9, "set-builder guarantees", criterion_9, Duration::from_secs(60)),
        (10, "asymptotic values and orderings", criterion_10, Duration::from_secs(10)),
        (11, "verify-paper exit status", criterion_11, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (id, name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > limit => Err(format!("{msg}, but took {elapsed:.2?} (limit {limit:?})")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("PASS criterion {id:>2} {name} ({elapsed:.2?}): {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {id:>2} {name} ({elapsed:.2?}): {msg}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
