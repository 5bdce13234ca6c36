use rayon::prelude::*;
use waring_core::engine::suite::{claim_trial, theorem_trial, ClaimTrial, TheoremTrial};
use waring_core::engine::{
    analyze, extract_cofactor, generate_six_term_family, six_term_claim_check,
    two_value_witness_check, verify_identity_perturbed, verify_identity_specialized,
    CLAIM_VARS,
};
use waring_core::forms::{conic_rank, line_tangent_to_conic, BinaryQuadratic};
use waring_core::{Certificate, Decomposition, Form, Rational, Report, Scalar};

use crate::report::RunReport;

pub fn list<T: ToString>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn quadratic(q: &BinaryQuadratic<Rational>) -> String {
    let names = ["y0", "y1"];
    q.to_form().to_string().replace("x0", names[0]).replace("x1", names[1])
}

pub fn verify(dec: &Decomposition, line: &Form, command: &str) -> RunReport {
    let mut r = RunReport::new(command, None);
    r.value("terms", dec.len());
    r.value("pure", dec.is_pure());
    r.value("line", line);
    let report = match analyze(dec, line) {
        Ok(report) => report,
        Err(e) => {
            r.error("analysis", e.to_string());
            return r;
        }
    };
    r.value("value", &report.value);
    match &report.remainder {
        Some(rem) => r.check("value is divisible by the square of the line", false, Some(format!("remainder {rem}"))),
        None => r.check("value is divisible by the square of the line", true, None),
    }
    r.check("report fields are consistent", report.check_consistency().is_ok(), None);
    describe_analysis(&mut r, &report);
    r
}

fn describe_analysis(r: &mut RunReport, report: &Report) {
    let Some(q) = &report.q else { return };
    r.value("q", q);
    if let Some(rank) = report.conic_rank {
        r.value("conic rank", rank);
    }
    match &report.tangency {
        Some(t) => {
            r.value("restriction", quadratic(&t.restriction));
            r.value("discriminant", t.restriction.discriminant());
            r.value("tangent", t.tangent);
            if let Some(p) = &t.point_in_plane {
                r.value("tangency point", list(p));
            }
        }
        None => r.value("tangent", "undefined (q = 0)"),
    }
    match &report.certificate {
        Some(cert) => describe_certificate(r, cert),
        None => {
            if let Some(reason) = &report.certificate_skipped {
                r.value("certificate", format!("none ({reason})"));
            }
        }
    }
}

fn describe_certificate(r: &mut RunReport, cert: &Certificate) {
    r.check("certificate verifies", cert.verify().is_ok(), None);
    r.value("certificate a", list(&cert.a));
    r.value("certificate w", list(&cert.w));
    r.value("certificate v", list(&cert.v));
    r.value("certificate l(v)", list(&cert.lv));
    r.value("certificate b", cert.b.to_string().replace("x0", "y0").replace("x1", "y1"));
    r.value("certificate Q", quadratic(&cert.q_restricted));
    r.value("certificate point", list(&cert.tangency_point_in_plane));
}

/// The six-term identity `2 l1^4 - l2^4 - l3^4 + 2 l4^4 - l5^4 - l6^4`.
pub fn example() -> RunReport {
    let mut r = RunReport::new("example", None);
    let forms = ["x0", "x0 + x2", "x0 - x2", "x0 + x1", "x0 + x1 + x2", "x0 + x1 - x2"];
    let alphas = [2, -1, -1, 2, -1, -1];
    let dec = Decomposition::from_pairs(
        forms.iter().zip(alphas).map(|(l, a)| (Rational::int(a), Form::parse(l, 3).expect("fixed form"))),
    )
    .expect("fixed decomposition");
    let x2 = Form::var(3, 2);
    let conic = Form::parse("6*x0^2 + 6*x0*x1 + 3*x1^2 + x2^2", 3).expect("fixed form");
    let scale = Rational::int(-4);
    let expected = conic.mul(&x2.pow(2)).expect("ternary forms").scale(&scale);
    let value = dec.value();
    r.check("value equals -4 (6x0^2 + 6x0x1 + 3x1^2 + x2^2) x2^2", value == expected, None);
    let mut sum = String::new();
    for (i, (l, a)) in forms.iter().zip(alphas).enumerate() {
        let sign = if a < 0 { " - " } else if i > 0 { " + " } else { "" };
        let coeff = if a.abs() == 1 { String::new() } else { format!("{}*", a.abs()) };
        sum.push_str(&format!("{sign}{coeff}({l})^4"));
    }
    r.value("terms", sum);
    r.value("value", &value);
    match extract_cofactor(&value, &x2) {
        Ok(q) => {
            r.check("cofactor is -4 times the conic", q == conic.scale(&scale), None);
            let rank = conic_rank(&q).unwrap_or(0);
            r.check("conic is nondegenerate", rank == 3, Some(format!("rank {rank}")));
            match line_tangent_to_conic(&x2, &conic) {
                Ok(t) => {
                    let disc = t.restriction.discriminant();
                    r.check("x2 = 0 is not tangent", !t.tangent, Some(format!("discriminant {disc}")));
                    r.value("restriction", quadratic(&t.restriction));
                }
                Err(e) => r.error("tangency", e.to_string()),
            }
            r.value("cofactor", &q);
            r.value("q", &conic);
            r.value("normalization", "cofactor = -4 q");
        }
        Err(e) => r.error("cofactor", e.to_string()),
    }
    r
}

pub fn identity_check(h: &[Rational], command: &str) -> RunReport {
    let mut r = RunReport::new(command, None);
    r.value("h", list(h));
    let main = match verify_identity_specialized(h) {
        Ok(x) => x,
        Err(e) => {
            r.error("slice", e.to_string());
            return r;
        }
    };
    r.check(
        "cleared numerator of f is the zero polynomial",
        main.is_zero(),
        (!main.is_zero()).then(|| main.residue()),
    );
    r.value("g", &main.g_value);
    r.value("alpha parameters", main.alpha_dim);
    r.value("beta parameters", main.beta_dim);
    r.value("variables", main.alpha_dim + main.beta_dim);
    r.value("monomials before cancellation", main.raw_products);
    r.value("monomials after cancellation", main.f_value.num_terms());
    match verify_identity_perturbed(h) {
        Ok(neg) => {
            r.check(
                "negative control f + 1 is nonzero",
                !neg.is_zero(),
                Some(format!("{} terms", neg.f_value.num_terms())),
            );
        }
        Err(e) => r.error("negative control", e.to_string()),
    }
    r
}

pub fn claim_check_nodes(h: &[Rational], seed: u64, command: &str) -> RunReport {
    let mut r = RunReport::new(command, Some(seed));
    r.value("h", list(h));
    match six_term_claim_check(h) {
        Ok(c) => {
            let residue = c.quartic.display_with(&CLAIM_VARS).to_string();
            r.check("quartic identically zero", c.identically_zero(), (!c.identically_zero()).then_some(residue));
            r.check("k-space is span{1, h}", c.translation_family, None);
            r.value("alpha", list(&c.alpha));
            for (i, k) in c.k_basis.iter().enumerate() {
                r.value(format!("k basis {i}"), list(k));
            }
        }
        Err(e) => {
            r.error("claim", e.to_string());
            return r;
        }
    }
    let pair = (h[0].clone(), h[1].clone());
    match generate_six_term_family(pair, seed).and_then(|inst| two_value_witness_check(&inst).map(|w| (inst, w))) {
        Ok((inst, w)) => {
            r.check("two-value family on (h0, h1) is nondegenerate and not tangent", w.applicable, None);
            r.value("family k", list(&inst.k));
            r.value("family alpha", list(&inst.alpha));
            r.value("family q", &w.q);
        }
        Err(e) => r.error("two-value family", e.to_string()),
    }
    r
}

fn run_parallel<R: Send>(n: u64, f: impl Fn(u64) -> R + Sync + Send) -> Vec<R> {
    (0..n).into_par_iter().map(f).collect()
}

pub fn claim_check_random(n: u64, seed: u64, range: i64, command: &str) -> RunReport {
    let mut r = RunReport::new(command, Some(seed));
    let trials: Vec<Result<ClaimTrial<Rational>, String>> =
        run_parallel(n, |i| claim_trial(seed, i, range).map_err(|e| e.to_string()));
    let mut passed = 0;
    let mut failures = Vec::new();
    for (i, t) in trials.iter().enumerate() {
        match t {
            Ok(t) if t.passed() => passed += 1,
            Ok(t) => failures.push(format!("trial {i}: h = {} {:?}", list(&t.h), t.error)),
            Err(e) => failures.push(format!("trial {i}: {e}")),
        }
    }
    r.check("all trials pass", failures.is_empty(), (!failures.is_empty()).then(|| failures.join("; ")));
    r.value("trials", n);
    r.value("passed", passed);
    r.value("range", range);
    r
}

pub fn theorem_check(n: u64, seed: u64, range: i64, command: &str) -> RunReport {
    let mut r = RunReport::new(command, Some(seed));
    let trials: Vec<Result<TheoremTrial<Rational>, String>> =
        run_parallel(n, |i| theorem_trial(seed, i, range).map_err(|e| e.to_string()));
    let (mut passed, mut tangent, mut degenerate, mut retries) = (0, 0, 0, 0);
    let mut failures = Vec::new();
    for (i, t) in trials.iter().enumerate() {
        match t {
            Ok(t) => {
                retries += t.alpha_draws - 1;
                if t.q_zero() {
                    degenerate += 1;
                }
                if t.tangent == Some(true) {
                    tangent += 1;
                }
                if t.passed() {
                    passed += 1;
                } else {
                    failures.push(format!(
                        "trial {i}: h = {}, f zero {}, tangent {:?}, certificate {}, Q matches {}, error {:?}",
                        list(&t.instance.h),
                        t.f_zero,
                        t.tangent,
                        t.certificate.is_some(),
                        t.q_matches,
                        t.error
                    ));
                }
            }
            Err(e) => failures.push(format!("trial {i}: {e}")),
        }
    }
    r.check(
        "every nonzero q is tangent with a valid certificate",
        failures.is_empty(),
        (!failures.is_empty()).then(|| failures.join("; ")),
    );
    r.value("trials", n);
    r.value("passed", format!("{passed}/{n}"));
    r.value("tangent", tangent);
    r.value("degenerate (q = 0)", degenerate);
    r.value("alpha retries", retries);
    r.value("range", range);
    r
}
