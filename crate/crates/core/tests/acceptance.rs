//! Acceptance gate: one test per criterion, each printing a single
//! PASS/FAIL line (visible with `--nocapture`). Tolerances are zero;
//! every comparison is exact.

use std::sync::OnceLock;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use weylpsi_core::coxeter::CartanType;
use weylpsi_core::exactalg::{rat, BigRat, QPoly};
use weylpsi_core::families::{self, Gamma};
use weylpsi_core::hecke::{self, ClassPolynomials};
use weylpsi_core::psi::{golden_mismatches, golden_table, palindromic, PsiContext};

fn report(n: usize, ok: bool, desc: &str) {
    println!("criterion {n}: {} — {desc}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {n} failed: {desc}");
}

fn contexts() -> &'static [(String, PsiContext)] {
    static ALL: OnceLock<Vec<(String, PsiContext)>> = OnceLock::new();
    ALL.get_or_init(|| {
        CartanType::supported_names()
            .iter()
            .map(|n| {
                let ctx = PsiContext::new(CartanType::parse(n).unwrap()).unwrap();
                ((*n).to_string(), ctx)
            })
            .collect()
    })
}

fn golden_criterion(n: usize, name: &str, budget_secs: f64, extra: &str) {
    let started = Instant::now();
    let ctx = PsiContext::new(CartanType::parse(name).unwrap()).unwrap();
    let bad = golden_mismatches(&ctx).unwrap().unwrap();
    let rows = golden_table(ctx.ctype).unwrap().len();
    let elapsed = started.elapsed().as_secs_f64();
    let ok = bad.is_empty() && elapsed < budget_secs;
    report(
        n,
        ok,
        &format!(
            "reference table {name} ({rows} classes{extra}) exact in {elapsed:.2}s \
             (budget {budget_secs}s); mismatches: {bad:?}"
        ),
    );
}

#[test]
fn criterion_01_reference_table_a1() {
    golden_criterion(1, "A1", 1.0, "");
}

#[test]
fn criterion_02_reference_table_a2() {
    golden_criterion(2, "A2", 1.0, "");
}

#[test]
fn criterion_03_reference_table_b2() {
    golden_criterion(3, "B2", 1.0, ", eps labels pinned by the s1 value");
}

#[test]
fn criterion_04_reference_table_g2() {
    golden_criterion(4, "G2", 5.0, "");
}

#[test]
fn criterion_05_longest_element_stretch_tier() {
    println!(
        "criterion 5: SKIP — stretch tier (type F4) not built; \
         the longest-element coefficient check does not apply"
    );
}

#[test]
fn criterion_06_integrality() {
    let mut ok = true;
    let mut classes = 0usize;
    let mut bad = Vec::new();
    for (name, ctx) in contexts() {
        match ctx.psi_all() {
            Ok(values) => {
                classes += values.len();
                for v in &values {
                    for p in &v.coeffs {
                        if p.int_coeffs().is_err() {
                            ok = false;
                            bad.push(format!("{name} class {}", v.class_idx));
                        }
                    }
                }
            }
            Err(e) => {
                ok = false;
                bad.push(format!("{name}: {e}"));
            }
        }
    }
    report(
        6,
        ok,
        &format!("integer coefficients for all {classes} class values across 6 types; failures: {bad:?}"),
    );
}

#[test]
fn criterion_07_degree_bound_parity_top_coefficient() {
    let mut ok = true;
    let mut bad = Vec::new();
    for (name, ctx) in contexts() {
        for v in ctx.psi_all().unwrap() {
            let cls = &ctx.group.classes[v.class_idx];
            let bound = cls.min_length - (ctx.group.rank - cls.m);
            let mut good = v.bound == bound && bound % 2 == 0;
            for p in &v.coeffs {
                if let Some(d) = p.degree() {
                    good &= d <= bound;
                }
            }
            good &= v.coeffs[ctx.table.trivial].coeff(bound) == rat(1);
            if !good {
                ok = false;
                bad.push(format!("{name} class {}", cls.label));
            }
        }
    }
    report(
        7,
        ok,
        &format!(
            "degree bound len(w)-(r-m) respected, bound even, trivial character \
             monic at the bound; failures: {bad:?}"
        ),
    );
}

#[test]
fn criterion_08_representative_independence() {
    let mut ok = true;
    let mut reps = 0usize;
    let mut bad = Vec::new();
    for (name, ctx) in contexts() {
        for c in 0..ctx.group.classes.len() {
            reps += ctx.group.classes[c].min_reps.len();
            if let Err(e) = ctx.min_rep_independent(c) {
                ok = false;
                bad.push(format!("{name}: {e}"));
            }
        }
    }
    report(
        8,
        ok,
        &format!("identical values from all {reps} minimal representatives; failures: {bad:?}"),
    );
}

#[test]
fn criterion_09_parabolic_induction() {
    let mut ok = true;
    let mut checked = 0usize;
    let mut bad = Vec::new();
    for (name, ctx) in contexts() {
        if name == "A1" {
            continue;
        }
        for (c, cls) in ctx.group.classes.iter().enumerate() {
            if cls.elliptic {
                continue;
            }
            checked += 1;
            match ctx.induction_check(c) {
                Ok(true) => {}
                Ok(false) => {
                    ok = false;
                    bad.push(format!("{name} class {}", cls.label));
                }
                Err(e) => {
                    ok = false;
                    bad.push(format!("{name} class {}: {e}", cls.label));
                }
            }
        }
    }
    report(
        9,
        ok,
        &format!(
            "induced class function matches on {checked} non-elliptic classes \
             of A2, A3, B2, B3, G2; failures: {bad:?}"
        ),
    );
}

#[test]
fn criterion_10_unipotent_assignment() {
    let mut ok = true;
    let mut bad = Vec::new();
    for (name, ctx) in contexts() {
        let mut hit = vec![false; ctx.springer.classes.len()];
        for v in ctx.psi_all().unwrap() {
            match ctx.theta_of(&v) {
                Ok(t) => {
                    hit[t] = true;
                    let d = ctx.springer.classes[t].d;
                    if v.class_idx == ctx.group.identity_class() && d != ctx.group.nu {
                        ok = false;
                        bad.push(format!("{name}: identity endpoint"));
                    }
                    if v.class_idx == ctx.group.coxeter_class() && d != 0 {
                        ok = false;
                        bad.push(format!("{name}: Coxeter endpoint"));
                    }
                }
                Err(e) => {
                    ok = false;
                    bad.push(format!("{name}: {e}"));
                }
            }
        }
        if !hit.iter().all(|&h| h) {
            ok = false;
            bad.push(format!("{name}: not surjective"));
        }
    }
    report(
        10,
        ok,
        &format!(
            "assignment total and surjective with identity -> trivial class and \
             Coxeter -> regular class on all types; failures: {bad:?}"
        ),
    );
}

#[test]
fn criterion_11_substrate_suites() {
    let mut ok = true;
    let mut bad = Vec::new();
    let mut dets = Vec::new();
    for (idx, (name, ctx)) in contexts().iter().enumerate() {
        if !ctx.group.poincare_check() {
            ok = false;
            bad.push(format!("{name}: length generating function"));
        }
        let k = ctx.table.len();
        let order = ctx.group.order() as i64;
        for i in 0..k {
            for j in 0..=i {
                let want = if i == j { order } else { 0 };
                if ctx.table.inner(&ctx.table.values[i], &ctx.table.values[j]) != want {
                    ok = false;
                    bad.push(format!("{name}: row orthogonality ({i},{j})"));
                }
            }
        }
        // Rebuilding the models re-runs the quadratic, braid, and q -> 1
        // specialization checks they are constructed under.
        if let Err(e) = hecke::build(&ctx.group, &ctx.table) {
            ok = false;
            bad.push(format!("{name}: {e}"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002 + idx as u64);
        let mut cp = ClassPolynomials::new(&ctx.group);
        for _ in 0..200 {
            let x = rng.gen_range(0..ctx.group.order());
            let f = cp.of(x).unwrap();
            let word = &ctx.group.element(x).word;
            for (r, model) in ctx.algebra.models.iter().enumerate() {
                let direct = hecke::trace_along_word(model, word).unwrap();
                let mut via = QPoly::zero();
                for (c, fc) in f.iter().enumerate() {
                    if !fc.is_zero() {
                        via = &via + &(fc * &ctx.algebra.char_values[r][c]);
                    }
                }
                if direct != via {
                    ok = false;
                    bad.push(format!("{name}: class polynomials at element {x} row {r}"));
                }
            }
        }
        match families::a_prime_invertible(&ctx.a_prime) {
            Ok((true, det)) => dets.push(format!("{name} det={det}")),
            Ok((false, _)) => {
                ok = false;
                bad.push(format!("{name}: middle factor singular"));
            }
            Err(e) => {
                ok = false;
                bad.push(format!("{name}: {e}"));
            }
        }
    }
    for g in [Gamma::One, Gamma::Z2, Gamma::S3, Gamma::S4] {
        match families::fourier_matrix(g) {
            Ok(fd) => {
                let n = fd.matrix.len();
                let mut sym = true;
                let mut invol = true;
                for i in 0..n {
                    for j in 0..n {
                        sym &= fd.matrix[i][j] == fd.matrix[j][i];
                        let mut dot = BigRat::from_integer(0.into());
                        for l in 0..n {
                            dot += &fd.matrix[i][l] * &fd.matrix[l][j];
                        }
                        invol &= dot == if i == j { rat(1) } else { rat(0) };
                    }
                }
                if !(sym && invol) {
                    ok = false;
                    bad.push(format!("fourier {}: not a symmetric involution", g.name()));
                }
            }
            Err(e) => {
                ok = false;
                bad.push(format!("fourier {}: {e}", g.name()));
            }
        }
    }
    report(
        11,
        ok,
        &format!(
            "length generating function, character orthogonality, deformation \
             relations, 200 random class-polynomial traces per type, Fourier \
             symmetric involutions, middle factor invertible ({}); failures: {bad:?}",
            dets.join(", ")
        ),
    );
}

#[test]
fn criterion_12_palindromy_report() {
    let mut ok = true;
    let mut notes = Vec::new();
    for (name, ctx) in contexts() {
        let values = ctx.psi_all().unwrap();
        let pal = values.iter().filter(|v| palindromic(v)).count();
        notes.push(format!("{name} {pal}/{}", values.len()));
        if golden_table(ctx.ctype).is_some() && pal != values.len() {
            ok = false;
        }
    }
    report(
        12,
        ok,
        &format!(
            "palindromic coefficient vectors (must hold on the reference types, \
             reported elsewhere): {}",
            notes.join(", ")
        ),
    );
}
