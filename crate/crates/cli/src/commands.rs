//! One function per subcommand. Each computes its records in parallel
//! (collected in input order) and reports whether every check passed.

use std::time::Instant;

use localh::basis::{location_counts, realrootedness_transfer_check, LocationCounts};
use localh::chebyshev::{
    dyadic_width, h_poly, oracle_agreement, reciprocal_substitution_check, u_poly, u_poly_closed,
};
use localh::cluster::{local_h, narayana_poly, verify_d_identity, xi_vector, RootSystem};
use localh::multiplier::{polya_schur_report, MultiplierSeq};
use localh::real_roots::{
    certify_real_rooted_with, count_roots_in, CertifyOptions, ExtendedBound, IsolatingInterval,
    RootInterval,
};
use localh::{ExactPoly, ExactRational};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::error::CliError;

pub type Records = Vec<Map<String, Value>>;

pub struct Outcome {
    pub records: Records,
    pub passed: bool,
}

#[derive(Clone, Copy)]
pub struct Settings {
    pub timing: bool,
    pub show_roots: bool,
    pub width_bits: u32,
    pub precision_bits: usize,
}

fn obj(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("records are objects"),
    }
}

fn q(r: &ExactRational) -> Value {
    Value::String(r.to_string())
}

fn coeffs(p: &ExactPoly) -> Value {
    Value::Array(p.coeffs().iter().map(q).collect())
}

fn system_header(rs: RootSystem) -> Map<String, Value> {
    obj(json!({"type": rs.family(), "rank": rs.rank(), "name": rs.to_string()}))
}

fn counts_json(c: &LocationCounts) -> Value {
    json!({
        "neg_inf_to_m1": c.neg_inf_to_m1,
        "m1_to_0": c.m1_to_0,
        "at_0": c.at_0,
        "at_m1": c.at_m1,
    })
}

fn interval_json(iv: &RootInterval) -> Value {
    json!({"lo": q(&iv.lo), "hi": q(&iv.hi)})
}

fn isolating_json(iv: &IsolatingInterval) -> Value {
    json!({"lo": q(&iv.interval.lo), "hi": q(&iv.interval.hi), "multiplicity": iv.multiplicity})
}

fn runtime(start: Instant, s: &Settings) -> Value {
    if s.timing {
        json!((start.elapsed().as_secs_f64() * 1e6).round() / 1e3)
    } else {
        Value::Null
    }
}

pub fn xi(systems: &[RootSystem]) -> Result<Outcome, CliError> {
    let records = systems
        .par_iter()
        .map(|&rs| {
            let v = xi_vector(rs)?;
            let mut m = system_header(rs);
            m.insert("xi".into(), Value::Array(v.xi().iter().map(q).collect()));
            Ok(m)
        })
        .collect::<Result<Records, CliError>>()?;
    Ok(Outcome {
        records,
        passed: true,
    })
}

pub fn local_h_table(systems: &[RootSystem]) -> Result<Outcome, CliError> {
    let records = systems
        .par_iter()
        .map(|&rs| {
            let p = local_h(rs)?;
            let mut m = system_header(rs);
            m.insert("coeffs".into(), coeffs(&p));
            Ok(m)
        })
        .collect::<Result<Records, CliError>>()?;
    Ok(Outcome {
        records,
        passed: true,
    })
}

fn certify_one(rs: RootSystem, s: &Settings) -> Result<Map<String, Value>, CliError> {
    let start = Instant::now();
    let p = local_h(rs)?;
    let opts = if s.show_roots {
        CertifyOptions::isolating(Some(dyadic_width(s.width_bits)))
    } else {
        CertifyOptions::counts_only()
    };
    let cert = certify_real_rooted_with(&p, &opts);
    let counts = if p.is_zero() {
        Value::Null
    } else {
        counts_json(&location_counts(&p)?)
    };
    let mut m = system_header(rs);
    m.insert("coeffs".into(), coeffs(&p));
    m.insert("real_rooted".into(), json!(cert.is_real_rooted));
    m.insert("distinct_roots".into(), json!(cert.distinct_real_roots));
    m.insert("degenerate".into(), json!(p.is_zero()));
    m.insert("counts".into(), counts);
    m.insert(
        "certificate".into(),
        json!({
            "degree": cert.degree,
            "roots_with_multiplicity": cert.total_with_multiplicity,
            "variations": [cert.variations.0, cert.variations.1],
        }),
    );
    if let Some(ivs) = &cert.isolating_intervals {
        m.insert(
            "intervals".into(),
            Value::Array(ivs.iter().map(isolating_json).collect()),
        );
    }
    m.insert("runtime_ms".into(), runtime(start, s));
    Ok(m)
}

pub fn certify(systems: &[RootSystem], s: &Settings) -> Result<Outcome, CliError> {
    let records = systems
        .par_iter()
        .map(|&rs| certify_one(rs, s))
        .collect::<Result<Records, CliError>>()?;
    let passed = records.iter().all(|r| r["real_rooted"] == json!(true));
    Ok(Outcome { records, passed })
}

pub fn transfer_check(systems: &[RootSystem]) -> Result<Outcome, CliError> {
    let records = systems
        .par_iter()
        .map(|&rs| {
            let v = xi_vector(rs)?;
            let mut m = system_header(rs);
            if v.is_zero() {
                m.insert("degenerate".into(), json!(true));
                for k in [
                    "xi_real_rooted",
                    "poly_real_rooted",
                    "agreement",
                    "locations",
                ] {
                    m.insert(k.into(), Value::Null);
                }
                m.insert("passed".into(), json!(true));
                return Ok(m);
            }
            let r = realrootedness_transfer_check(&v)?;
            let locations = r.locations.as_ref().map_or(Value::Null, |l| {
                json!({
                    "observed": counts_json(&l.observed),
                    "expected": counts_json(&l.expected),
                    "holds": l.holds,
                })
            });
            let holds = r.locations.as_ref().is_none_or(|l| l.holds);
            m.insert("degenerate".into(), json!(false));
            m.insert(
                "xi_real_rooted".into(),
                json!(r.xi_certificate.is_real_rooted),
            );
            m.insert(
                "poly_real_rooted".into(),
                json!(r.poly_certificate.is_real_rooted),
            );
            m.insert("agreement".into(), json!(r.agreement));
            m.insert("locations".into(), locations);
            m.insert("passed".into(), json!(r.agreement && holds));
            Ok(m)
        })
        .collect::<Result<Records, CliError>>()?;
    let passed = records.iter().all(|r| r["passed"] == json!(true));
    Ok(Outcome { records, passed })
}

pub fn narayana_check(orders: &[usize]) -> Result<Outcome, CliError> {
    let records = orders
        .par_iter()
        .map(|&n| {
            let holds = verify_d_identity(n)?;
            let lhs = local_h(RootSystem::D(n))?;
            let rhs = narayana_poly(n - 2)
                .shift_up(1)
                .scale(&ExactRational::from_integer((n as i64 - 2).into()));
            Ok(obj(json!({
                "n": n,
                "local_h_d": coeffs(&lhs),
                "narayana_side": coeffs(&rhs),
                "identity_holds": holds,
            })))
        })
        .collect::<Result<Records, CliError>>()?;
    let passed = records.iter().all(|r| r["identity_holds"] == json!(true));
    Ok(Outcome { records, passed })
}

pub fn ms_test(seq: &MultiplierSeq, depth: usize, s: &Settings) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let report = polya_schur_report(seq, depth)?;
    let mut records: Records = report
        .verdicts
        .iter()
        .map(|v| {
            obj(json!({
                "record": "verdict",
                "n": v.n,
                "identically_zero": v.identically_zero,
                "real_rooted": v.real_rooted,
                "same_sign": v.same_sign,
                "passed": v.passed,
                "degree": v.certificate.as_ref().and_then(|c| c.degree),
                "distinct_roots": v.certificate.as_ref().map(|c| c.distinct_real_roots),
            }))
        })
        .collect();
    records.push(obj(json!({
        "record": "summary",
        "sequence": seq.to_string(),
        "depth": report.max_n,
        "passed": report.passed,
        "first_failure": report.first_failure(),
        "partial": report.is_partial(),
        "runtime_ms": runtime(start, s),
    })));
    Ok(Outcome {
        records,
        passed: report.passed,
    })
}

pub fn chebyshev(n: usize, s: &Settings) -> Result<Outcome, CliError> {
    let h = h_poly(n);
    let cert = certify_real_rooted_with(&h, &CertifyOptions::counts_only());
    let nonneg = count_roots_in(&h, &ExtendedBound::int(0), &ExtendedBound::PosInfinity)?;
    let simple_negative = cert.is_real_rooted
        && cert.distinct_real_roots == n / 2
        && cert.total_with_multiplicity == n / 2
        && nonneg == 0
        && h.low_order_zeros() == 0;
    let agreement = oracle_agreement(n, &dyadic_width(s.width_bits), s.precision_bits)?;

    let mut records = vec![
        obj(
            json!({"check": "recurrence_closed_form", "n": n, "passed": u_poly(n) == u_poly_closed(n)}),
        ),
        obj(
            json!({"check": "reciprocal_substitution", "n": n, "passed": reciprocal_substitution_check(n)}),
        ),
        obj(json!({
            "check": "h_simple_negative_roots",
            "n": n,
            "passed": simple_negative,
            "h_coeffs": coeffs(&h),
            "distinct_roots": cert.distinct_real_roots,
        })),
    ];
    let mut oracle = obj(json!({
        "check": "oracle_agreement",
        "n": n,
        "passed": agreement.agrees,
        "precision_bits": agreement.precision_bits,
        "width_bits": s.width_bits,
    }));
    if s.show_roots {
        let m = n / 2;
        let roots: Vec<Value> = (0..m)
            .map(|idx| {
                let iv = &agreement.intervals[m - 1 - idx];
                let mut r = obj(json!({"k": idx + 1, "oracle": agreement.oracle[idx].to_f64()}));
                if let Value::Object(extra) = interval_json(iv) {
                    r.extend(extra);
                }
                r.insert(
                    "placement".into(),
                    json!(format!("{:?}", agreement.placements[idx]).to_lowercase()),
                );
                Value::Object(r)
            })
            .collect();
        oracle.insert("roots".into(), Value::Array(roots));
    }
    records.push(oracle);
    let passed = records.iter().all(|r| r["passed"] == json!(true));
    Ok(Outcome { records, passed })
}
