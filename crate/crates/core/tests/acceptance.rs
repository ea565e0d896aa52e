//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::time::{Duration, Instant};

use lincomp::bench::{run_bench, BenchConfig};
use lincomp::ggc_lincomp;
use lincomp::reduction::{antisymmetric_image, compose_factors};
use lincomp::solve::{solve_with, Strategy};
use lincomp::{
    bm_lincomp, decompose, make_field, oracle_lincomp, plan_reduction, solve_auto_traced, verify_recurrence, Arith,
    FieldElement, FieldSpec, LinCompResult, PeriodicSequence, Poly,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

/// Every result produced by criteria 1-4, re-checked in criterion 7.
#[derive(Default)]
struct Produced(Vec<(PeriodicSequence, LinCompResult)>);

impl Produced {
    fn push(&mut self, s: &PeriodicSequence, r: &LinCompResult) {
        self.0.push((s.clone(), r.clone()));
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gf(p: u64, m: usize) -> FieldSpec {
    make_field(p, m, None).expect("field")
}

fn digits(s: &PeriodicSequence) -> String {
    s.elements().iter().map(|&e| s.field().coords(e)[0].to_string()).collect()
}

/// (1 - a x)^k by repeated multiplication.
fn linear_power(f: &FieldSpec, a: i64, k: usize) -> Poly {
    let ar = Arith::new(f);
    let lin = Poly::from_ints(f, &[1, -a]);
    (0..k).fold(Poly::one(f), |acc, _| acc.mul(&lin, &ar).unwrap())
}

fn criterion_1(out: &mut Produced) -> Outcome {
    let start = Instant::now();
    let f = gf(7, 1);
    let s = PeriodicSequence::from_ints(&f, &[1, 2, 3, 4, 0, 1, 5, 2, 0, 1, 1, 3, 0, 6, 1, 2, 5, 6, 3, 3, 1])
        .map_err(|e| e.to_string())?;
    let sol = solve_auto_traced(&s);
    out.push(&s, &sol.result);
    ensure(sol.result.complexity == 21, || format!("c = {}", sol.result.complexity))?;
    let ar = Arith::new(&f);
    let expected = [1, 4, 2]
        .iter()
        .fold(Poly::one(&f), |acc, &a| acc.mul(&linear_power(&f, a, 7), &ar).unwrap());
    ensure(sol.result.min_poly == expected, || "m differs from (1-x)^7 (1-4x)^7 (1-2x)^7".into())?;

    let trace = sol.reduction.as_ref().ok_or("no reduction ran")?;
    let mut got: Vec<String> = trace.components.iter().map(digits).collect();
    got.sort();
    let mut want = vec!["4424645".to_string(), "4366203".into(), "2622130".into()];
    want.sort();
    ensure(got == want, || format!("components {got:?}"))?;
    let unit = linear_power(&f, 1, 7);
    for (a, r) in trace.components.iter().zip(&trace.component_results) {
        out.push(a, r);
        ensure(r.complexity == 7 && r.min_poly == unit, || format!("component {} gives c={}", digits(a), r.complexity))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("c=21, components {{4424645, 4366203, 2622130}} each c=7, {elapsed:.2?}"))
}

fn instances() -> Vec<PeriodicSequence> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE);
    let mut v = Vec::new();
    for (p, m, n, count) in [(7, 1, 21, 60), (7, 1, 42, 50), (7, 1, 147, 40), (13, 1, 39, 50), (3, 2, 40, 50), (7, 1, 49, 50)] {
        let f = gf(p, m);
        for _ in 0..count {
            v.push(PeriodicSequence::random(&f, n, &mut rng));
        }
    }
    let f2 = gf(2, 1);
    for bits in 0u32..256 {
        let vals: Vec<i64> = (0..8).map(|i| ((bits >> i) & 1) as i64).collect();
        v.push(PeriodicSequence::from_ints(&f2, &vals).unwrap());
    }
    v
}

fn criterion_2(all: &[PeriodicSequence], out: &mut Produced) -> Outcome {
    let start = Instant::now();
    let mut ggc_runs = 0;
    for s in all {
        let oracle = oracle_lincomp(s);
        let auto = solve_auto_traced(s);
        let bm = bm_lincomp(s);
        out.push(s, &oracle);
        out.push(s, &auto.result);
        out.push(s, &bm);
        if let Some(t) = &auto.reduction {
            for (a, r) in t.components.iter().zip(&t.component_results) {
                out.push(a, r);
            }
        }
        let tag = || format!("{} N={} {:?}", s.field(), s.len(), s.elements());
        ensure(auto.result.same_answer(&oracle), || format!("auto disagrees on {}", tag()))?;
        ensure(bm.same_answer(&oracle), || format!("bm disagrees on {}", tag()))?;
        match ggc_lincomp(s) {
            Ok(g) => {
                ggc_runs += 1;
                out.push(s, &g);
                ensure(g.same_answer(&oracle), || format!("ggc disagrees on {}", tag()))?;
            }
            Err(_) => ensure(
                lincomp::num::exact_log(s.len() as u64, s.field().characteristic()).is_none(),
                || format!("ggc refused {}", tag()),
            )?,
        }
    }
    let elapsed = start.elapsed();
    ensure(all.len() >= 500, || format!("only {} sequences", all.len()))?;
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    Ok(format!("{} sequences ({} also via ggc), all equal to the oracle, {elapsed:.2?}", all.len(), ggc_runs))
}

fn criterion_3(all: &[PeriodicSequence], out: &mut Produced) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut checked = 0;
    for s in all {
        let Ok(plan) = plan_reduction(s.field(), s.len()) else { continue };
        let d = decompose(s, &plan).map_err(|e| e.to_string())?;
        let whole = oracle_lincomp(s);
        let parts: Vec<LinCompResult> = d.components.iter().map(oracle_lincomp).collect();
        for (a, r) in d.components.iter().zip(&parts) {
            out.push(a, r);
        }
        let sum: usize = parts.iter().map(|r| r.complexity).sum();
        ensure(sum == whole.complexity, || format!("N={}: sum c_j = {sum} but c = {}", s.len(), whole.complexity))?;
        let mut pairs: Vec<(Poly, FieldElement)> =
            parts.iter().map(|r| r.min_poly.clone()).zip(plan.roots_b.iter().copied()).collect();
        let (m, _) = compose_factors(s.field(), &pairs).map_err(|e| e.to_string())?;
        ensure(m == whole.min_poly, || format!("N={}: product form differs", s.len()))?;
        pairs.reverse();
        let (rev, _) = compose_factors(s.field(), &pairs).map_err(|e| e.to_string())?;
        pairs.shuffle(&mut rng);
        let (shuf, _) = compose_factors(s.field(), &pairs).map_err(|e| e.to_string())?;
        ensure(rev == m && shuf == m, || format!("N={}: composition depends on order", s.len()))?;
        checked += 1;
    }
    ensure(checked > 0, || "no decomposable instances".into())?;
    Ok(format!("{checked} decomposable instances: additivity, product form, permutation invariance"))
}

fn criterion_4(out: &mut Produced) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut count = 0;
    for (p, ns) in [(7u64, [1usize, 5, 7, 11, 13, 25]), (13, [1, 5, 7, 11, 13, 25])] {
        let f = gf(p, 1);
        let ar = Arith::new(&f);
        for k in 0..50 {
            let n = ns[k % ns.len()];
            let half = PeriodicSequence::random(&f, n, &mut rng);
            let mut vals = half.elements().to_vec();
            vals.extend(half.elements().iter().map(|&e| ar.neg(e)));
            // an occasional zero half keeps the trivial case in the mix
            if rng.random_ratio(1, 25) {
                vals.iter_mut().for_each(|e| *e = FieldElement::ZERO);
            }
            let s = PeriodicSequence::new(&f, vals).unwrap();
            let img = antisymmetric_image(&s).map_err(|e| e.to_string())?;
            let ra = oracle_lincomp(&s);
            let rb = oracle_lincomp(&img.image);
            out.push(&s, &ra);
            out.push(&img.image, &rb);
            ensure(ra.complexity == rb.complexity, || format!("{f} N={}: c(a)={} c(a')={}", s.len(), ra.complexity, rb.complexity))?;
            let scaled = rb.min_poly.scale_argument(img.b, &ar).map_err(|e| e.to_string())?;
            ensure(scaled == ra.min_poly, || format!("{f} N={}: m(a)(x) != m(a')(bx)", s.len()))?;
            count += 1;
        }
    }
    Ok(format!("{count} antisymmetric instances over GF(7) and GF(13)"))
}

const H_MAX: u32 = 4;
const TRIALS: usize = 3;
const SEED: u64 = 2024;

fn criterion_5(out: &mut Produced) -> Outcome {
    let f = gf(7, 1);
    let p = 7u64;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut runs = 0;
    for h in 1..=H_MAX {
        let n_total = 3 * 7usize.pow(h);
        for _ in 0..TRIALS {
            let s = PeriodicSequence::random(&f, n_total, &mut rng);
            let sol = solve_with(&s, Strategy::Reduction).map_err(|e| e.to_string())?;
            out.push(&s, &sol.result);
            let t = sol.reduction.as_ref().unwrap();
            let (u, n, big_n) = (t.plan.u as u64, t.plan.n as u64, n_total as u64);
            ensure(t.decompose_ops <= 3 * (u - 1) * big_n, || format!("N={big_n}: decompose {}", t.decompose_ops))?;
            for (a, r) in t.components.iter().zip(&t.component_results) {
                out.push(a, r);
                ensure(r.algorithm == lincomp::Algorithm::Ggc, || "component not solved by GGC".into())?;
                ensure(r.field_ops <= 2 * p * p * n, || format!("N'={n}: GGC {} > {}", r.field_ops, 2 * p * p * n))?;
            }
            let ops = sol.phase_ops();
            let budget = ops.reduction + ops.components;
            ensure(budget <= (3 * (u - 1) + 2 * p * p) * big_n, || format!("N={big_n}: reduction+GGC {budget}"))?;
            runs += 1;
        }
    }
    Ok(format!("{runs} runs over N = 3*7^h, h=1..{H_MAX}: decompose, GGC and combined bounds hold"))
}

fn criterion_6() -> Outcome {
    let cfg = BenchConfig {
        p: 7,
        m: 1,
        modulus: None,
        multiplier: 3,
        base: None,
        h_min: 1,
        h_max: H_MAX,
        trials: TRIALS,
        seed: SEED,
        algorithms: vec!["auto".into(), "bm".into()],
    };
    let report = run_bench(&cfg).map_err(|e| e.to_string())?;
    println!("{}", report.to_table().trim_end());
    ensure(report.violations == 0, || format!("{} violations", report.violations))?;
    const C: u64 = 3 * 2 + 2 * 49;
    const K: f64 = 1.0;
    let mut worst_linear = 0.0f64;
    let mut min_quadratic = f64::INFINITY;
    for row in &report.rows {
        let n = row.period as u64;
        match row.algorithm {
            Strategy::Auto => {
                ensure(row.path == "reduction", || format!("N={n}: auto took {}", row.path))?;
                ensure(row.max_budget_ops <= C * n, || format!("N={n}: {} > {C}N", row.max_budget_ops))?;
                worst_linear = worst_linear.max(row.max_budget_ops as f64 / n as f64);
            }
            Strategy::Bm if row.h >= 3 => {
                ensure(row.mean_ops > K * (n * n) as f64, || format!("N={n}: bm {} <= {K} N^2", row.mean_ops))?;
                min_quadratic = min_quadratic.min(row.mean_ops / (n * n) as f64);
            }
            _ => {}
        }
    }
    Ok(format!(
        "reduction+GGC ops/N <= {worst_linear:.2} (C = {C}); bm ops/N^2 >= {min_quadratic:.2} (k = {K}) at h >= 3"
    ))
}

/// Checks `s_{i+L} = -(m_1 s_{i+L-1} + ... + m_L s_i)` over GF(p) with
/// plain integers, for `m` given by its non-constant coefficients.
fn satisfies(s: &[u32], p: u32, m: &[u32]) -> bool {
    let n = s.len();
    let l = m.len();
    (0..2 * n).all(|i| {
        if i < l {
            return true;
        }
        let acc: u32 = (1..=l).map(|k| m[k - 1] * s[(i - k) % n]).sum::<u32>() + s[i % n];
        acc % p == 0
    })
}

fn minimal_by_search(s: &[u32], p: u32) -> usize {
    for l in 0.. {
        let total = (p as usize).pow(l as u32);
        for code in 0..total {
            let m: Vec<u32> = (0..l).map(|k| (code / (p as usize).pow(k as u32)) as u32 % p).collect();
            if satisfies(s, p, &m) {
                return l;
            }
        }
    }
    unreachable!()
}

fn criterion_7(produced: &Produced) -> Outcome {
    for (s, r) in &produced.0 {
        ensure(r.is_well_formed(), || format!("ill-formed result for N={}", s.len()))?;
        ensure(verify_recurrence(s, &r.min_poly) == Ok(true), || format!("recurrence fails for N={}", s.len()))?;
    }
    let mut exhaustive = 0;
    for (p, max_n) in [(2u32, 6usize), (3, 4)] {
        let f = gf(p as u64, 1);
        for n in 1..=max_n {
            for code in 0..(p as usize).pow(n as u32) {
                let vals: Vec<u32> = (0..n).map(|i| (code / (p as usize).pow(i as u32)) as u32 % p).collect();
                let s = PeriodicSequence::from_ints(&f, &vals.iter().map(|&v| v as i64).collect::<Vec<_>>()).unwrap();
                let brute = minimal_by_search(&vals, p);
                for r in [solve_auto_traced(&s).result, bm_lincomp(&s), oracle_lincomp(&s)] {
                    ensure(r.is_well_formed() && verify_recurrence(&s, &r.min_poly) == Ok(true), || {
                        format!("GF({p}) {vals:?}: bad {} result", r.algorithm.name())
                    })?;
                    ensure(r.complexity == brute, || {
                        format!("GF({p}) {vals:?}: {} says {} but search finds {brute}", r.algorithm.name(), r.complexity)
                    })?;
                }
                exhaustive += 1;
            }
        }
    }
    Ok(format!("{} results well-formed with valid recurrences; {exhaustive} tiny sequences minimal", produced.0.len()))
}

fn main() {
    let mut produced = Produced::default();
    let all = instances();
    let results: Vec<(&str, Outcome)> = vec![
        ("1 golden example", criterion_1(&mut produced)),
        ("2 oracle equivalence", criterion_2(&all, &mut produced)),
        ("3 split properties", criterion_3(&all, &mut produced)),
        ("4 antisymmetric case", criterion_4(&mut produced)),
        ("5 cost bounds", criterion_5(&mut produced)),
        ("6 scaling shape", criterion_6()),
        ("7 minimality and recurrence", criterion_7(&produced)),
    ];

    let mut failed = 0;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS [{name}] {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL [{name}] {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", results.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", results.len());
}
