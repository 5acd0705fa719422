//! JSON report schema and the verify pipeline shared by the binary and
//! the integration tests. Exit codes are a function of the report
//! alone, so replays are deterministic.

use serde::{Deserialize, Serialize};

use prymcert_core::cert::{replay_verdict, CertError, Certificate, Status};
use prymcert_core::intfact::BaseField;
use prymcert_core::parse::parse_poly;
use prymcert_core::prym::{assemble_theorem_report, CurveProfile, PrymError, TheoremReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_STRUCTURAL: i32 = 1;
pub const EXIT_FAILED: i32 = 2;
pub const EXIT_HEURISTIC: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Input {
    pub poly: String,
    pub field: BaseField,
    pub budget: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conclusion {
    pub statement: String,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub certificate: String,
    pub prime: u64,
    pub cycle_type: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub input: Input,
    pub profile: CurveProfile,
    pub certificates: Vec<Certificate>,
    pub conclusions: Vec<Conclusion>,
    pub witnesses: Vec<WitnessEntry>,
}

pub fn parse_field(text: &str) -> Result<BaseField, String> {
    match text {
        "q" => Ok(BaseField::Q),
        "q-sqrt-minus-3" => Ok(BaseField::QSqrtMinus3),
        other => Err(format!(
            "unknown field {:?}; expected \"q\" or \"q-sqrt-minus-3\"",
            other
        )),
    }
}

fn report_from(theorem: TheoremReport, input: Input) -> Report {
    let certificates = vec![
        theorem.galois.subset.clone(),
        theorem.galois.quotient.clone(),
        theorem.galois.kernel.clone(),
        theorem.galois.disjointness.clone(),
    ];
    let mut witnesses = Vec::new();
    for cert in &certificates {
        for (prime, t) in &cert.witnesses {
            witnesses.push(WitnessEntry {
                certificate: cert.name.clone(),
                prime: *prime,
                cycle_type: t.parts().to_vec(),
            });
        }
    }
    let conclusions = theorem
        .conclusions
        .iter()
        .map(|(statement, status)| Conclusion {
            statement: statement.clone(),
            status: *status,
        })
        .collect();
    Report {
        input,
        profile: theorem.profile,
        certificates,
        conclusions,
        witnesses,
    }
}

/// Run the whole verification pipeline on a polynomial given as text.
/// The error string is a structural diagnostic (exit code 1 territory).
pub fn run_verify(poly: &str, field: BaseField, budget: usize) -> Result<Report, String> {
    let f = parse_poly(poly).map_err(|e| format!("parse error: {}", e))?;
    let theorem = assemble_theorem_report(&f, field, budget).map_err(describe)?;
    // internal soundness check: every PROVEN certificate must replay
    // from its recorded witnesses
    match replay_verdict(&f, field, &theorem.galois) {
        Ok(true) => {}
        Ok(false) => return Err("internal error: witness replay failed".to_string()),
        Err(e) => return Err(format!("internal error during replay: {}", e)),
    }
    Ok(report_from(
        theorem,
        Input {
            poly: poly.to_string(),
            field,
            budget,
        },
    ))
}

fn describe(e: PrymError) -> String {
    match e {
        PrymError::BadCongruence(n) => format!(
            "degree {} is not congruent to 11 mod 12; f must have degree 12k+11",
            n
        ),
        PrymError::Cert(CertError::PreconditionViolated(msgs)) => {
            format!("structural check failed: {}", msgs.join("; "))
        }
        PrymError::Cert(other) => format!("{}", other),
    }
}

/// The verify exit code is read off the "(ii)(b1)" conclusion.
pub fn exit_code(report: &Report) -> i32 {
    let b1 = report
        .conclusions
        .iter()
        .find(|c| c.statement.starts_with("(ii)(b1)"))
        .map(|c| c.status);
    match b1 {
        Some(Status::Proven) => EXIT_OK,
        Some(Status::Failed) => EXIT_FAILED,
        Some(_) => EXIT_HEURISTIC,
        None => EXIT_STRUCTURAL,
    }
}

pub fn render_human(report: &Report) -> String {
    let mut out = String::new();
    let p = &report.profile;
    out.push_str(&format!(
        "f = {} over {}, prime budget {}\n",
        report.input.poly, report.input.field, report.input.budget
    ));
    out.push_str(&format!(
        "n = {} = 12*{}+11, m = {}; genus {}, quotient genus {}, Prym dimension {}\n",
        p.n, p.k, p.m, p.genus_c, p.genus_quotient, p.prym_dim
    ));
    out.push_str(&format!(
        "jacobian eigenvalue multiplicities ({}, {}); Prym eigenform multiplicities ({}, {})\n",
        p.jac_mult.0, p.jac_mult.1, p.prym_mult.0, p.prym_mult.1
    ));
    out.push_str("\ncertificates:\n");
    for cert in &report.certificates {
        out.push_str(&format!(
            "  {:<13} {:<9} {}\n",
            cert.name, cert.status, cert.narrative
        ));
        if !cert.witnesses.is_empty() {
            let primes: Vec<String> = cert
                .witnesses
                .iter()
                .map(|(p, t)| format!("{} -> {}", p, t))
                .collect();
            out.push_str(&format!("  {:<13} witnesses: {}\n", "", primes.join(", ")));
        }
    }
    out.push_str("\nconclusions:\n");
    for c in &report.conclusions {
        out.push_str(&format!("  [{}] {}\n", c.status, c.statement));
    }
    out
}

pub fn render_profile(p: &CurveProfile) -> String {
    let mut out = String::new();
    out.push_str(&format!("n                    {}\n", p.n));
    out.push_str(&format!("k                    {}\n", p.k));
    out.push_str(&format!("m                    {}\n", p.m));
    out.push_str(&format!("genus of C           {}\n", p.genus_c));
    out.push_str(&format!("genus of quotient    {}\n", p.genus_quotient));
    out.push_str(&format!("Prym dimension       {}\n", p.prym_dim));
    out.push_str(&format!(
        "jacobian mult        ({}, {})\n",
        p.jac_mult.0, p.jac_mult.1
    ));
    out.push_str(&format!(
        "Prym mult            ({}, {})\n",
        p.prym_mult.0, p.prym_mult.1
    ));
    out.push_str(&format!(
        "eigenbasis dx/y      x^{:?}\n",
        p.anti_invariant_basis.0
    ));
    out.push_str(&format!(
        "eigenbasis dx/y^2    x^{:?}\n",
        p.anti_invariant_basis.1
    ));
    out.push_str(&format!(
        "non-jacobian bound   {} > {}\n",
        p.nonjacobian_lhs, p.nonjacobian_rhs
    ));
    out
}

/// Substitute an integer for the standalone parameter `a` in a family
/// template; errors when no standalone `a` occurs.
pub fn instantiate_family(template: &str, value: i64) -> Result<String, String> {
    let bytes = template.as_bytes();
    let mut out = String::new();
    let mut replaced = false;
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c == 'a' {
            let prev_word = i > 0 && (bytes[i - 1].is_ascii_alphanumeric() || bytes[i - 1] == b'_');
            let next_word = i + 1 < bytes.len()
                && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_');
            if !prev_word && !next_word {
                out.push_str(&format!("({})", value));
                replaced = true;
                i += 1;
                continue;
            }
        }
        out.push(c);
        i += 1;
    }
    if !replaced {
        return Err("family template contains no standalone parameter 'a'".to_string());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instantiation() {
        assert_eq!(
            instantiate_family("x*(x^10 - x^2 - a)", 3).unwrap(),
            "x*(x^10 - x^2 - (3))"
        );
        // 'a' inside a longer word is untouched
        assert!(instantiate_family("x^10 - alpha", 3).is_err());
    }

    #[test]
    fn field_parsing() {
        assert_eq!(parse_field("q").unwrap(), BaseField::Q);
        assert_eq!(
            parse_field("q-sqrt-minus-3").unwrap(),
            BaseField::QSqrtMinus3
        );
        assert!(parse_field("q(i)").is_err());
    }

    #[test]
    fn json_round_trip() {
        let report = run_verify("x*(x^10 - x^2 - 1)", BaseField::QSqrtMinus3, 40).unwrap();
        let text = serde_json::to_string_pretty(&report).unwrap();
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        assert_eq!(exit_code(&report), EXIT_OK);
    }

    #[test]
    fn exit_codes() {
        let failed = run_verify("x*(x^10 - x^2 - 2)", BaseField::Q, 10).unwrap();
        assert_eq!(exit_code(&failed), EXIT_FAILED);
        let heuristic = run_verify("x*(x^10 - x^2 - 1)", BaseField::Q, 3).unwrap();
        assert_eq!(exit_code(&heuristic), EXIT_HEURISTIC);
        assert!(run_verify("x^2 + 1", BaseField::Q, 10).is_err());
    }
}
