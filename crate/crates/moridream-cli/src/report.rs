//! Report envelopes and their JSON/CSV/text renderings.
//!
//! Every numeric payload is a decimal string so that arbitrary-precision
//! values survive any JSON consumer; rationals render as `p` or `p/q`,
//! quadratic surds as `{a, b, radicand}` triples of such strings.

use num::{BigInt, BigRational, One};
use serde_json::{json, Map, Value};

use moridream::blowup::{ConePair, DivisorClass, Ray};
use moridream::classify::{
    CertificateBundle, Obstruction, Quantifier, QuarticCertificates, Status, Verdict,
};
use moridream::linkage::{EndContraction, H1Route, Rigidity};
use moridream::pell::{Certificate, PellOutcome};
use moridream::surd::QuadraticSurd;

pub fn bigint(v: &BigInt) -> Value {
    Value::String(v.to_string())
}

pub fn int(v: i64) -> Value {
    Value::String(v.to_string())
}

pub fn rational(r: &BigRational) -> Value {
    if r.denom().is_one() {
        Value::String(r.numer().to_string())
    } else {
        Value::String(format!("{}/{}", r.numer(), r.denom()))
    }
}

pub fn surd(s: &QuadraticSurd) -> Value {
    json!({
        "a": rational(s.rational_part()),
        "b": rational(s.surd_part()),
        "radicand": bigint(s.radicand()),
    })
}

pub fn divisor(d: &DivisorClass) -> Value {
    json!({ "h": rational(&d.h), "e": rational(&d.e) })
}

pub fn ray(r: &Ray) -> Value {
    match r {
        Ray::Rational(d) => json!({
            "type": "rational",
            "h": rational(&d.h),
            "e": rational(&d.e),
        }),
        Ray::Irrational { h, e } => json!({
            "type": "irrational",
            "h": surd(h),
            "e": surd(e),
        }),
    }
}

pub fn cone_pair(c: &ConePair) -> Value {
    json!({
        "effective": [divisor(&c.effective[0]), divisor(&c.effective[1])],
        "movable": [ray(&c.movable[0]), ray(&c.movable[1])],
        "nef": [ray(&c.nef[0]), ray(&c.nef[1])],
    })
}

pub fn certificate(c: &Certificate) -> Value {
    match c {
        Certificate::WitnessFound => json!({ "type": "witness-found" }),
        Certificate::ModulusSieve { modulus, d, n } => json!({
            "type": "modulus-sieve",
            "modulus": modulus.to_string(),
            "reduced_d": bigint(d),
            "reduced_n": bigint(n),
        }),
        Certificate::SquareTestFailed => json!({ "type": "square-test-failed" }),
        Certificate::FundamentalSearchExhausted => {
            json!({ "type": "fundamental-search-exhausted" })
        }
    }
}

pub fn pell_outcome(out: &PellOutcome) -> Value {
    json!({
        "solvable": out.solvable,
        "witness": out
            .witness
            .as_ref()
            .map(|(x, y)| json!({ "x": bigint(x), "y": bigint(y) }))
            .unwrap_or(Value::Null),
        "certificate": certificate(&out.certificate),
    })
}

pub fn status(s: Status) -> &'static str {
    match s {
        Status::MoriDream => "MDS",
        Status::NotMoriDream => "NotMDS",
        Status::Inconclusive => "Inconclusive",
    }
}

pub fn quantifier(q: Quantifier) -> &'static str {
    match q {
        Quantifier::EveryElement => "every",
        Quantifier::GeneralElement => "general",
        Quantifier::VeryGeneralElement => "very-general",
    }
}

pub fn obstruction(o: Obstruction) -> &'static str {
    match o {
        Obstruction::IrrationalMovableRay => "irrational-movable-ray",
        Obstruction::NefNotSemiample => "nef-not-semiample",
    }
}

pub fn quartic_certificates(c: &QuarticCertificates) -> Value {
    json!({
        "r": bigint(&c.r),
        "pell_rational": pell_outcome(&c.rational_outcome),
        "pell_elliptic": pell_outcome(&c.elliptic_outcome),
        "inequality_64_8d_2g_2": int(c.inequality_value),
        "d_ge_16": c.d_ge_16,
    })
}

pub fn verdict(v: &Verdict) -> (Value, Value) {
    let result = json!({
        "status": status(v.status),
        "quantifier": v.quantifier.map(|q| Value::String(quantifier(q).into())).unwrap_or(Value::Null),
        "obstruction": v.obstruction.map(|o| Value::String(obstruction(o).into())).unwrap_or(Value::Null),
        "citations": v.citations,
        "notes": v.notes,
    });
    let certificates = match &v.certificates {
        CertificateBundle::None => Value::Null,
        CertificateBundle::Quartic(c) => quartic_certificates(c),
        CertificateBundle::Linked(report) => json!({
            "hypotheses_ok": report.hypotheses_ok,
            "super_rigidity": report
                .super_rigidity
                .iter()
                .map(|(n, v)| json!({ "n": int(*n), "value": int(*v) }))
                .collect::<Vec<_>>(),
            "h1_route": match report.h1_route {
                H1Route::AcmCertificate => "acm-certificate",
                H1Route::RegularityBound => "regularity-bound-sufficient-only",
                H1Route::Unverified => "unverified",
            },
            "linked": report
                .linked
                .as_ref()
                .map(|n| json!({ "g": int(n.g()), "d": int(n.d()) }))
                .unwrap_or(Value::Null),
        }),
    };
    (result, certificates)
}

pub fn rigidity(r: Rigidity) -> &'static str {
    match r {
        Rigidity::SuperRigid => "super-rigid",
        Rigidity::Rigid => "rigid",
        Rigidity::NotRigid => "not-rigid",
    }
}

pub fn end_contraction(e: EndContraction) -> &'static str {
    match e {
        EndContraction::FibrationToP1 => "fibration-to-p1",
        EndContraction::DivisorialToPoint => "divisorial-to-point",
        EndContraction::Divisorial => "divisorial",
        EndContraction::Fibration => "fibration",
    }
}

/// The stable outer shape of every command's JSON output.
pub struct Envelope {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub certificates: Value,
    pub citations: Value,
}

impl Envelope {
    pub fn new(command: &'static str, inputs: Value, result: Value) -> Self {
        Envelope {
            command,
            inputs,
            result,
            certificates: Value::Null,
            citations: Value::Null,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        map.insert("command".into(), Value::String(self.command.into()));
        map.insert(
            "version".into(),
            Value::String(env!("CARGO_PKG_VERSION").into()),
        );
        map.insert("inputs".into(), self.inputs.clone());
        map.insert("result".into(), self.result.clone());
        map.insert("certificates".into(), self.certificates.clone());
        map.insert("citations".into(), self.citations.clone());
        Value::Object(map)
    }

    pub fn print_json(&self) {
        println!("{}", serde_json::to_string_pretty(&self.to_json()).unwrap());
    }
}
