//! Acceptance suite: one line per criterion, non-zero exit on any failure.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use leibniz_forge::corpus::{
    graph_random_family, heisenberg_action, hemi_heisenberg, hemi_so3, leibniz_corpus, scaling_values, so3,
};
use leibniz_forge::courant::{
    courant_bracket, courant_suite, double_jacobiator, double_projected_bracket, graph_closure_check,
    jacobiator_of_bivector, random_section, suite_samples, Bivector, DoubleElement, GraphKind, OneForm, Section,
    TwoForm, VectorField,
};
use leibniz_forge::envelope::{
    canonical_envelope_with, hemisemidirect_envelope, lambda_envelope, EnvelopeTriple, IdealChoice,
};
use leibniz_forge::lie_yamaguti::{
    ly_envelope_default, ly_from_decomposition, ly_from_leibniz, torsion_curvature, validate_ly, DEFAULT_DIM_CAP,
};
use leibniz_forge::linalg::{int, rat, unit_vector, vec_scale, vec_sub, Vector};
use leibniz_forge::loops::{
    connection_curvature, connection_torsion, constant_field, constant_value, exact_mode_check,
    hemisemidirect_loop_product, loop_product_via_envelope, loop_property_check, LoopContext, LoopValue,
};
use leibniz_forge::poly::Poly;
use leibniz_forge::products::graph_criterion;
use leibniz_forge::sampling::Sampler;
use leibniz_forge::StructureAlgebra;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn within(limit: Duration, elapsed: Duration) -> bool {
    elapsed <= limit
}

fn envelopes(a: &StructureAlgebra) -> Vec<(String, EnvelopeTriple)> {
    let mut out = Vec::new();
    for (tag, choice) in [("squares", IdealChoice::Squares), ("kernel", IdealChoice::Kernel)] {
        out.push((format!("{}/{tag}", a.name()), canonical_envelope_with(a, &choice).expect("canonical envelope")));
    }
    out.push((format!("{}/lambda", a.name()), lambda_envelope(a).expect("lambda envelope")));
    out
}

fn all_envelopes() -> Vec<(String, EnvelopeTriple)> {
    let mut out: Vec<(String, EnvelopeTriple)> = leibniz_corpus().iter().flat_map(envelopes).collect();
    out.push(("h3_hemi/direct".into(), hemisemidirect_envelope(&heisenberg_action()).expect("hemi envelope")));
    out
}

fn recovery() -> Outcome {
    let start = Instant::now();
    let corpus = leibniz_corpus();
    let envs = all_envelopes();
    let failed: Vec<&String> = envs.iter().filter(|(_, t)| !t.recovery_check()).map(|(n, _)| n).collect();
    let elapsed = start.elapsed();
    let pass = failed.is_empty() && corpus.len() >= 10 && within(Duration::from_secs(5), elapsed);
    outcome(
        pass,
        format!(
            "{} algebras, {} envelopes, failures {:?}, {:.2}s (limit 5s)",
            corpus.len(),
            envs.len(),
            failed,
            elapsed.as_secs_f64()
        ),
    )
}

fn scaling() -> Outcome {
    let envs = all_envelopes();
    let mut failed = Vec::new();
    for s in scaling_values() {
        for (name, t) in &envs {
            if !t.projected_formula_check(&s) {
                failed.push(format!("{name} at s={s}"));
            }
        }
    }
    outcome(failed.is_empty(), format!("{} envelopes x 4 values of s, failures {:?}", envs.len(), failed))
}

fn graph_criteria() -> Outcome {
    let mut algebras = leibniz_corpus();
    algebras.extend(graph_random_family(0x9e37));
    let mut mismatches = Vec::new();
    let mut negatives = 0;
    for a in &algebras {
        let r = graph_criterion(a);
        let leib = a.check_leibniz().holds;
        let lie = a.check_lie().holds;
        if !leib {
            negatives += 1;
        }
        if r.graph_closed_under_leibniz != leib || r.graph_is_lie_subalgebra != lie {
            mismatches.push(a.name().to_string());
        }
    }
    outcome(
        mismatches.is_empty() && negatives > 0,
        format!("{} algebras ({} non-Leibniz), mismatches {:?}", algebras.len(), negatives, mismatches),
    )
}

fn lie_yamaguti() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    let mut failed = Vec::new();
    for a in leibniz_corpus().iter().filter(|a| a.dim() <= 6) {
        checked += 1;
        let l = ly_from_leibniz(a).expect("Leibniz input");
        if !validate_ly(&l).holds {
            failed.push(format!("{}: axioms", a.name()));
            continue;
        }
        let round = ly_envelope_default(&l, DEFAULT_DIM_CAP).and_then(|env| env.induced());
        if round.as_ref().ok() != Some(&l) {
            failed.push(format!("{}: round trip", a.name()));
        }
    }
    let elapsed = start.elapsed();
    outcome(
        failed.is_empty() && within(Duration::from_secs(60), elapsed),
        format!("{checked} algebras of dim <= 6, failures {:?}, {:.2}s (limit 60s)", failed, elapsed.as_secs_f64()),
    )
}

fn loops() -> Outcome {
    let half = rat(1, 2);
    let mut notes = Vec::new();
    let mut pass = true;
    let mut exact_count = 0;
    for a in leibniz_corpus() {
        if exact_mode_check(&a).is_err() {
            continue;
        }
        exact_count += 1;
        let ctx = LoopContext::exact(a.clone(), half.clone()).expect("nilpotent");
        let r = loop_property_check(&ctx, 200, 7);
        if !r.all_pass() {
            pass = false;
            notes.push(format!("{} exact: {:?}", a.name(), r.witnesses));
        }
    }
    for a in [so3(), hemi_so3()] {
        let ctx = LoopContext::float(a.clone(), half.clone(), 1e-8);
        let r = loop_property_check(&ctx, 200, 7);
        if !r.all_pass() {
            pass = false;
            notes.push(format!("{} float: {:?}", a.name(), r.witnesses));
        }
    }

    // closed form for 𝔥 ⋉_H V against the generic product, and the product
    // through an envelope action
    let act = heisenberg_action();
    let e = hemi_heisenberg();
    let ctx = LoopContext::exact(e.clone(), half.clone()).expect("nilpotent");
    let env = canonical_envelope_with(&e, &IdealChoice::Squares).expect("envelope");
    let mut sampler = Sampler::new(11);
    let mut closed_ok = true;
    for _ in 0..200 {
        let (x, y) = (sampler.vector(e.dim()), sampler.vector(e.dim()));
        let generic = match ctx.product(&x, &y).expect("product") {
            LoopValue::Exact(v) => v,
            LoopValue::Float(_) => unreachable!("exact context"),
        };
        let closed = hemisemidirect_loop_product(&act, &half, &x, &y).expect("closed form");
        let via_env = loop_product_via_envelope(&env, &half, &x, &y).expect("envelope product");
        closed_ok &= closed == generic && via_env == generic;
    }
    if !closed_ok {
        pass = false;
        notes.push("closed-form product mismatch".into());
    }
    outcome(
        pass && exact_count > 0,
        format!("{exact_count} exact algebras x 200 samples, so3 and so3_hemi float within 1e-8, closed form over 200 samples; {:?}", notes),
    )
}

fn connection() -> Outcome {
    let half = rat(1, 2);
    let mut failed = Vec::new();
    let mut count = 0;
    for a in leibniz_corpus().iter().filter(|a| a.dim() <= 6) {
        count += 1;
        let n = a.dim();
        let t = canonical_envelope_with(a, &IdealChoice::Squares).expect("envelope");
        let sigma = t.section_sigma(&half);
        let m_basis: Vec<Vector> = (0..n).map(|i| sigma.column(i)).collect();
        let l_s = ly_from_decomposition(t.g(), &t.h_subspace(), &m_basis).expect("reductive");
        let tc = torsion_curvature(&l_s);
        let mut ok = l_s == ly_from_leibniz(a).expect("Leibniz");
        let quarter = &half * &half;
        let fields: Vec<VectorField> = (0..n).map(|i| constant_field(&unit_vector(n, i))).collect();
        for i in 0..n {
            for j in 0..n {
                let tor = constant_value(&connection_torsion(a, &half, &fields[i], &fields[j]).expect("fields"))
                    .expect("constant");
                let skew = vec_scale(&rat(1, 2), &vec_sub(a.basis_product(i, j), a.basis_product(j, i)));
                let expected = vec_scale(&(-int(2) * &half), &skew);
                ok &= tor == expected && tor[..] == tc.torsion[(i * n + j) * n..(i * n + j + 1) * n];
                for k in 0..n {
                    let cur = constant_value(
                        &connection_curvature(a, &half, &fields[i], &fields[j], &fields[k]).expect("fields"),
                    )
                    .expect("constant");
                    let xy = a.basis_product(i, j).to_vec();
                    let expected = vec_scale(&quarter, &a.product(&xy, &unit_vector(n, k)).expect("dims"));
                    let base = ((i * n + j) * n + k) * n;
                    ok &= cur == expected && cur[..] == tc.curvature[base..base + n];
                }
            }
        }
        if !ok {
            failed.push(a.name().to_string());
        }
    }
    outcome(failed.is_empty(), format!("{count} algebras, all basis fields at s=1/2, failures {:?}", failed))
}

fn x(n: usize, i: usize) -> Poly {
    Poly::var(n, i)
}

fn courant() -> Outcome {
    let start = Instant::now();
    let n = 2;
    let given = vec![
        Section::from_vf(VectorField::basis(n, 0)),
        Section::new(
            VectorField::new(vec![Poly::zero(n), x(n, 0)]).unwrap(),
            OneForm::new(vec![x(n, 1), Poly::zero(n)]).unwrap(),
        )
        .unwrap(),
        Section::from_form(OneForm::new(vec![Poly::zero(n), &x(n, 0) * &x(n, 1)]).unwrap()),
    ];
    let funcs = vec![&x(n, 0) * &x(n, 0), &x(n, 0) * &x(n, 1)];
    let mut samples = suite_samples(&given, &funcs, 2, 50, 0xc0de);
    samples.extend(suite_samples(&[], &[], 3, 60, 0xc0df));
    let random = samples.len() - given.len();
    let checks = courant_suite(&samples);
    let failed: Vec<String> =
        checks.iter().filter(|c| !c.holds).map(|c| format!("{}: {:?}", c.name, c.witness)).collect();
    let elapsed = start.elapsed();
    outcome(
        failed.is_empty() && random >= 100 && within(Duration::from_secs(60), elapsed),
        format!(
            "{} checks (axioms 1-5, Dorfman Leibniz, x.Df = 2D<x,Df>, skew/symmetric parts) on {} random + {} given triples, {:.2}s (limit 60s), failures {:?}",
            checks.len(),
            random,
            given.len(),
            elapsed.as_secs_f64(),
            failed
        ),
    )
}

fn graph_closure() -> Outcome {
    let c = |n: usize, v: i64| Poly::constant(n, int(v));
    let forms2 = vec![OneForm::basis(2, 0), OneForm::new(vec![x(2, 1), x(2, 0)]).unwrap()];
    let forms3 = vec![OneForm::basis(3, 0), OneForm::new(vec![Poly::zero(3), x(3, 2), x(3, 0)]).unwrap()];
    let fields2 = vec![VectorField::basis(2, 0), VectorField::new(vec![x(2, 1), x(2, 0)]).unwrap()];
    let fields3 = vec![VectorField::basis(3, 0), VectorField::new(vec![Poly::zero(3), x(3, 2), x(3, 0)]).unwrap()];

    let constant_pi = Bivector::from_entries(2, vec![(0, 1, c(2, 1))]).unwrap();
    let lie_poisson = Bivector::from_entries(3, vec![(0, 1, x(3, 2)), (1, 2, x(3, 0)), (2, 0, x(3, 1))]).unwrap();
    let omega = TwoForm::from_entries(2, vec![(0, 1, x(2, 0))]).unwrap();
    let omega_bad = TwoForm::from_entries(3, vec![(0, 1, x(3, 2))]).unwrap();
    let non_jacobi = Bivector::from_entries(3, vec![(0, 1, c(3, 1)), (1, 2, x(3, 1))]).unwrap();

    let closed = [
        ("constant pi", graph_closure_check(&GraphKind::Poisson(constant_pi), &forms2, &[], 20, 1)),
        ("so(3)* Lie-Poisson", graph_closure_check(&GraphKind::Poisson(lie_poisson.clone()), &forms3, &[], 20, 2)),
        ("x1 dx1^dx2", graph_closure_check(&GraphKind::TwoForm(omega), &[], &fields2, 20, 3)),
    ];
    let open = [
        ("x3 dx1^dx2", graph_closure_check(&GraphKind::TwoForm(omega_bad), &[], &fields3, 20, 4)),
        ("non-Jacobi bivector", graph_closure_check(&GraphKind::Poisson(non_jacobi.clone()), &forms3, &[], 20, 5)),
    ];
    let mut pass = jacobiator_of_bivector(&lie_poisson).is_empty() && !jacobiator_of_bivector(&non_jacobi).is_empty();
    let mut notes = Vec::new();
    for (name, r) in &closed {
        pass &= r.closed && r.witness.is_none();
        notes.push(format!("{name}: closed={} over {} pairs", r.closed, r.pairs_checked));
    }
    for (name, r) in &open {
        pass &= !r.closed && r.witness.is_some();
        notes.push(format!("{name}: witness={}", r.witness.is_some()));
    }
    outcome(pass, notes.join("; "))
}

fn double_semidirect() -> Outcome {
    let mut sampler = Sampler::new(0xd5);
    let mut mismatches = 0;
    let pairs = 60;
    for k in 0..pairs {
        let n = 2 + k % 2;
        let (a, b) = (random_section(&mut sampler, n), random_section(&mut sampler, n));
        if double_projected_bracket(&a, &b) != courant_bracket(&a, &b) {
            mismatches += 1;
        }
    }
    let mut jacobi_ok = true;
    for _ in 0..10 {
        let el = |s: &mut Sampler| {
            let h = random_section(s, 2);
            DoubleElement::new(h.vf, &h.form, random_section(s, 2)).expect("vars")
        };
        let (a, b, c) = (el(&mut sampler), el(&mut sampler), el(&mut sampler));
        jacobi_ok &= double_jacobiator(&a, &b, &c).is_zero();
    }
    outcome(
        mismatches == 0 && jacobi_ok,
        format!("{pairs} random pairs, {mismatches} mismatches; Jacobi on 10 random triples: {jacobi_ok}"),
    )
}

fn bin() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_leibniz-forge"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("data").join(name)
}

fn cli_determinism() -> Outcome {
    let leibniz2 = fixture("leibniz2.json");
    let section_x = fixture("section_x.json");
    let section_y = fixture("section_y.json");
    let l2 = leibniz2.to_str().unwrap();
    let commands: Vec<Vec<&str>> = vec![
        vec!["algebra", "check", l2],
        vec!["envelope", "build", l2, "--ideal", "squares"],
        vec!["envelope", "verify", l2, "--ideal", "kernel"],
        vec!["ly", "derive", l2],
        vec!["loop", "eval", "--algebra", l2, "--s", "1/2", "--x", "0,1", "--y", "0,1"],
        vec!["loop", "verify", "--algebra", l2, "--s", "1/2", "--samples", "50", "--seed", "7"],
        vec!["omni", "--dim", "2"],
        vec!["courant", "bracket", section_x.to_str().unwrap(), section_y.to_str().unwrap()],
        vec!["courant", "axioms", "--vars", "2", "--seed", "7", "--samples", "10"],
    ];
    let mut failed = Vec::new();
    for args in &commands {
        let run = || Command::new(bin()).args(args).args(["--format", "json"]).output().expect("spawn cli");
        let (a, b) = (run(), run());
        if a.stdout != b.stdout || a.stdout.is_empty() || a.status.code() != b.status.code() {
            failed.push(args.join(" "));
        }
    }
    outcome(failed.is_empty(), format!("{} commands run twice, differing {:?}", commands.len(), failed))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("recovery", recovery),
        ("s-scaling", scaling),
        ("graph criteria", graph_criteria),
        ("Lie-Yamaguti", lie_yamaguti),
        ("loops", loops),
        ("connection", connection),
        ("Courant suite", courant),
        ("graph closure", graph_closure),
        ("double semidirect recovery", double_semidirect),
        ("CLI determinism", cli_determinism),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        if !o.pass {
            failures += 1;
        }
        println!("[{tag}] {:>2} {name} ({:.2}s): {}", i + 1, start.elapsed().as_secs_f64(), o.detail);
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
