//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line per
//! criterion, and exits nonzero if any fails.

#![allow(clippy::needless_range_loop)]

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use kstab::degeneration::{
    build_from_strings, conic_double_line, cuspidal_cubic, degree_profile, structural_checks, CheckStatus,
    WeightedSeries,
};
use kstab::exact::{frac, rat, LimitClass, Rational};
use kstab::groebner::IdealHandle;
use kstab::invariants::{
    analyze_invariants, chow_weight_sweep, chow_weight_symbolic, classify_f1, donaldson_diagnostic, donaldson_futaki,
    refined_closed_form, F1Class, RefinedInput,
};
use kstab::polyring::{Monomial, MonomialOrder, MultiPoly};
use kstab::report::{analyze, fixture, render_csv, render_json};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("Z{i}")).collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let c = cuspidal_cubic();
    let report = analyze_invariants(&c, 12, None).map_err(|e| e.to_string())?;
    for row in &report.rows {
        let l = row.l as i64;
        ensure!(row.s == Some(rat(-l)), "s_{l} = {:?}, expected {}", row.s, -l);
        // bound s_l <= -l (n+1)!/2 with n = 1
        ensure!(row.s.as_ref().unwrap() <= &rat(-l), "bound fails at l = {l}");
    }
    ensure!(report.rows.len() == 12, "expected 12 rows");
    let sym = report.refined.symbolic.as_ref().ok_or("no closed form for s")?;
    ensure!(sym.s.to_string() == "-l", "s(l) = {}", sym.s);
    ensure!(report.f1 == F1Class::Exact(LimitClass::MinusInfinity), "F1 class {:?}", report.f1);
    ensure!(classify_f1(RefinedInput::Symbolic(&sym.s)) == F1Class::Exact(LimitClass::MinusInfinity), "classify_f1");
    let elapsed = start.elapsed();
    ensure!(elapsed.as_secs() < 60, "took {elapsed:?}");
    Ok(())
}

fn criterion_2() -> Outcome {
    let c = cuspidal_cubic();
    let model = c.model().map_err(|e| e.to_string())?;
    let q = chow_weight_symbolic(model);
    let f = donaldson_futaki(model, &q, 3).map_err(|e| e.to_string())?;
    ensure!(f.df1.is_zero(), "F̄1 = {}", f.df1);
    ensure!(donaldson_diagnostic(model).is_zero(), "diagnostic = {}", donaldson_diagnostic(model));
    Ok(())
}

fn criterion_3() -> Outcome {
    let c = cuspidal_cubic();
    let model = c.model().map_err(|e| e.to_string())?;
    let q = chow_weight_symbolic(model);
    let fact = rat(2); // (n+1)! with n = 1
    for l in 1..=6usize {
        let li = l as i64;
        let sweep = chow_weight_sweep(&c, l, None).map_err(|e| e.to_string())?.q;
        let p = degree_profile(&c, l);
        let anchor = &fact * -(&p.gamma * &model.a_n * rat(li));
        let expected = frac(-6 * li, 3 * li + 1);
        ensure!(sweep == anchor, "l = {l}: sweep {sweep} vs (n+1)!(-gamma a_n l) {anchor}");
        ensure!(sweep == expected, "l = {l}: sweep {sweep} vs -6l/(3l+1) = {expected}");
        ensure!(q.eval(&rat(li)) == Some(sweep.clone()), "l = {l}: symbolic q differs");
    }
    ensure!(chow_weight_sweep(&c, 1, None).unwrap().q == frac(-3, 2), "q_1");
    ensure!(chow_weight_sweep(&c, 2, None).unwrap().q == frac(-12, 7), "q_2");
    Ok(())
}

fn criterion_4() -> Outcome {
    let c = cuspidal_cubic();
    let n = names(4);
    let expected = IdealHandle::parse(&n, &["Z1^2", "Z1*Z2", "Z1*Z3", "Z2^3 - Z0*Z3^2"]).map_err(|e| e.to_string())?;
    let fiber = c.central_fiber().groebner(&MonomialOrder::Grevlex).map_err(|e| e.to_string())?;
    let exp_gb = expected.groebner(&MonomialOrder::Grevlex).map_err(|e| e.to_string())?;
    ensure!(fiber.generators == exp_gb.generators, "central fiber basis differs");

    let checks = structural_checks(&c, 12).map_err(|e| e.to_string())?;
    ensure!(checks.reduced_fiber.status == CheckStatus::Pass, "reduced fiber {}", checks.reduced_fiber.status);
    let j = IdealHandle::parse(&n, &["Z1", "Z2^3 - Z0*Z3^2"]).map_err(|e| e.to_string())?;
    ensure!(c.image_ideal().same_ideal(&j).map_err(|e| e.to_string())?, "J differs");
    ensure!(checks.flatness.status == CheckStatus::Pass, "flatness");
    for l in 1..=12u64 {
        let p = degree_profile(&c, l as usize);
        ensure!(p.big_n == 3 * l + 1, "N_{l} = {}", p.big_n);
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    for (name, c) in [("cubic", cuspidal_cubic()), ("conic", conic_double_line())] {
        for l in 1..=12 {
            let p = degree_profile(&c, l);
            ensure!(p.normalized_sum().is_zero(), "{name} l = {l}: sum of normalized weights nonzero");
            let lower = &p.gamma * Rational::from_integer(p.small_n.into());
            let upper = &p.gamma * Rational::from_integer(p.big_n.into()) * rat(2);
            ensure!(lower <= p.norm && p.norm <= upper, "{name} l = {l}: {lower} <= {} <= {upper} fails", p.norm);
        }
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    let c = conic_double_line();
    let report = analyze_invariants(&c, 12, None).map_err(|e| e.to_string())?;
    ensure!(report.futaki.df1 == frac(-1, 2), "F̄1 = {}", report.futaki.df1);
    ensure!(report.f1 == F1Class::Exact(LimitClass::MinusInfinity), "F1 class {:?}", report.f1);
    let checks = structural_checks(&c, 12).map_err(|e| e.to_string())?;
    ensure!(checks.growth.status == CheckStatus::Fail, "growth not flagged");
    ensure!(checks.growth.degree == Some(c.dimension()), "growth degree {:?}", checks.growth.degree);
    Ok(())
}

fn random_monomial_ideal(rng: &mut StdRng) -> (Vec<Monomial>, Vec<u64>) {
    let nvars = rng.gen_range(1..=4);
    let ngens = rng.gen_range(1..=5);
    let gens = (0..ngens)
        .map(|_| Monomial::new((0..nvars).map(|_| rng.gen_range(0..=3)).collect()))
        .filter(|m| !m.is_one())
        .collect();
    let weights = (0..nvars).map(|_| rng.gen_range(0..=3)).collect();
    (gens, weights)
}

fn enumerate(gens: &[Monomial], weights: &[u64], l: u32) -> (u64, u64, u64) {
    let mut counts = (0, 0, 0);
    for m in Monomial::all_of_degree(weights.len(), l) {
        if gens.iter().any(|g| g.divides(&m)) {
            continue;
        }
        let w: u64 = m.exponents().iter().zip(weights).map(|(&e, &u)| e as u64 * u).sum();
        counts.0 += 1;
        counts.1 += w;
        counts.2 += (w == 0) as u64;
    }
    counts
}

fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][col];
        let pivot: Vec<Rational> = rows[r].iter().map(|x| x * &inv).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

/// `dim (S/I)_d` by linear algebra on the span of `m * g`.
fn quotient_dim_by_rank(gens: &[MultiPoly], nvars: usize, d: u32) -> usize {
    let basis = Monomial::all_of_degree(nvars, d);
    let mut rows = Vec::new();
    for g in gens {
        let Some(gd) = g.degree() else { continue };
        if gd > d {
            continue;
        }
        for m in Monomial::all_of_degree(nvars, d - gd) {
            let prod = g.mul_term(&m, &Rational::one());
            rows.push(basis.iter().map(|b| prod.coeff(b)).collect());
        }
    }
    basis.len() - rank(rows)
}

fn random_homogeneous_ideal(rng: &mut StdRng, nvars: usize) -> Vec<MultiPoly> {
    let ngens = rng.gen_range(1..=3);
    (0..ngens)
        .map(|_| {
            let d = rng.gen_range(2..=3);
            let monos = Monomial::all_of_degree(nvars, d);
            let nterms = rng.gen_range(1..=3);
            let terms: Vec<(Monomial, Rational)> = (0..nterms)
                .map(|_| {
                    let m = monos[rng.gen_range(0..monos.len())].clone();
                    let c = loop {
                        let c = rng.gen_range(-3i64..=3);
                        if c != 0 {
                            break c;
                        }
                    };
                    (m, rat(c))
                })
                .collect();
            MultiPoly::from_terms(nvars, terms)
        })
        .filter(|p| !p.is_zero())
        .collect()
}

fn criterion_7() -> Outcome {
    for (name, c) in [("cubic", cuspidal_cubic()), ("conic", conic_double_line())] {
        let hs = c.series().histograms(10);
        for l in 1..=10 {
            let p = degree_profile(&c, l);
            let h = &hs[l];
            ensure!(
                h.total() == p.big_n.into() && h.weight_sum() == p.b_sum.into() && h.zero_weight() == p.small_n.into(),
                "{name} l = {l}: series and enumeration differ"
            );
        }
    }

    let mut rng = StdRng::seed_from_u64(0x5eed);
    for trial in 0..20 {
        let (gens, weights) = random_monomial_ideal(&mut rng);
        let series = WeightedSeries::new(&gens, &weights);
        let hs = series.histograms(10);
        for l in 0..=10 {
            let (n, b, z) = enumerate(&gens, &weights, l as u32);
            let h = &hs[l];
            ensure!(
                h.total() == n.into() && h.weight_sum() == b.into() && h.zero_weight() == z.into(),
                "monomial ideal #{trial} {gens:?} weights {weights:?}, l = {l}: series ({}, {}, {}) vs enumeration ({n}, {b}, {z})",
                h.total(),
                h.weight_sum(),
                h.zero_weight()
            );
        }
    }

    let nvars = 3;
    let mut done = 0;
    while done < 10 {
        let gens = random_homogeneous_ideal(&mut rng, nvars);
        if gens.is_empty() {
            continue;
        }
        let ideal = IdealHandle::new(names(nvars), gens.clone()).map_err(|e| e.to_string())?;
        let lms = ideal.leading_monomials().map_err(|e| e.to_string())?;
        for d in 0..=8u32 {
            let by_gb = Monomial::all_of_degree(nvars, d).iter().filter(|m| !lms.iter().any(|g| g.divides(m))).count();
            let by_rank = quotient_dim_by_rank(&gens, nvars, d);
            let shown: Vec<String> = gens.iter().map(|g| g.to_string_with(&names(nvars))).collect();
            ensure!(by_gb == by_rank, "ideal {shown:?}, degree {d}: basis count {by_gb} vs rank oracle {by_rank}");
        }
        done += 1;
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    for name in ["lixu-cubic", "conic-double-line"] {
        let doc = fixture(name).map_err(|e| e.to_string())?;
        let a = analyze(&doc, None, None).map_err(|e| e.to_string())?;
        let b = analyze(&doc, None, None).map_err(|e| e.to_string())?;
        ensure!(render_json(&a) == render_json(&b), "{name}: JSON reports differ");
        ensure!(render_csv(&a) == render_csv(&b), "{name}: CSV reports differ");
    }

    let n = names(4);
    let base = ["Z1^2 - Z0*Z2", "Z1*Z2 - Z0*Z3", "Z2^2 - Z1*Z3"];
    let permuted = ["-2*Z2^2 + 2*Z1*Z3", "Z1^2 - Z0*Z2", "3/5*Z1*Z2 - 3/5*Z0*Z3"];
    for order in [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::WeightRefined(vec![0, 1, 0, 0])] {
        let a =
            IdealHandle::parse(&n, &base).map_err(|e| e.to_string())?.groebner(&order).map_err(|e| e.to_string())?;
        let b = IdealHandle::parse(&n, &permuted)
            .map_err(|e| e.to_string())?
            .groebner(&order)
            .map_err(|e| e.to_string())?;
        ensure!(a.generators == b.generators, "basis under {order} depends on generator order/scale");
    }

    let mut rng = StdRng::seed_from_u64(8);
    for _ in 0..10 {
        let gens = random_homogeneous_ideal(&mut rng, 3);
        if gens.is_empty() {
            continue;
        }
        let mut other: Vec<MultiPoly> = gens.iter().rev().map(|g| g.scale(&frac(-7, 3))).collect();
        other.rotate_left(1);
        let a = IdealHandle::new(names(3), gens).map_err(|e| e.to_string())?;
        let b = IdealHandle::new(names(3), other).map_err(|e| e.to_string())?;
        let ga = a.groebner(&MonomialOrder::Grevlex).map_err(|e| e.to_string())?;
        let gb = b.groebner(&MonomialOrder::Grevlex).map_err(|e| e.to_string())?;
        ensure!(ga.generators == gb.generators, "random ideal basis not canonical");
    }
    Ok(())
}

/// Rescaling all weights keeps the symbolic limit class.
fn rescaling_check() -> Outcome {
    for c in [2u64, 3] {
        let cfg = build_from_strings(
            &["Z0", "Z1", "Z2", "Z3"],
            &["Z1^2 - Z0*Z2", "Z1*Z2 - Z0*Z3", "Z2^2 - Z1*Z3"],
            &["Z0", "Z2", "Z3"],
            &[("Z1", c)],
        )
        .map_err(|e| e.to_string())?;
        let q = chow_weight_symbolic(cfg.model().map_err(|e| e.to_string())?);
        let sym = refined_closed_form(&cfg, &q).map_err(|e| e.to_string())?.map_err(|e| e.to_string())?;
        let class = classify_f1(RefinedInput::Symbolic(&sym.s));
        ensure!(class == F1Class::Exact(LimitClass::MinusInfinity), "weight {c}: {class}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 cuspidal cubic: s_l = -l for l = 1..12, s(l) = -l, F1 = -infinity", criterion_1),
        ("2 cuspidal cubic: F̄1 = 0 and Donaldson diagnostic 0", criterion_2),
        ("3 Chow weight anchor: sweep = (n+1)!(-gamma_l a_n l) = -6l/(3l+1) = q(l), l = 1..6", criterion_3),
        ("4 central fiber, reduced-fiber check, N_l = 3l + 1", criterion_4),
        ("5 norm identities on both built-in examples", criterion_5),
        ("6 conic: F̄1 = -1/2, F1 = -infinity, growth flagged", criterion_6),
        ("7 series vs enumeration, Groebner counts vs rank oracle", criterion_7),
        ("8 deterministic reports and canonical bases", criterion_8),
        ("8b F1 class invariant under weight rescaling", rescaling_check),
    ];
    let mut failed = 0;
    for (label, f) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS criterion {label} ({secs:.2}s)"),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {label} ({secs:.2}s): {e}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
