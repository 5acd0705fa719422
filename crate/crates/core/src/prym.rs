//! Numerology of the trigonal curve y^3 = f(x) with deg f = n = 12k+11
//! and its Prym variety: genus, eigenform multiplicities, the
//! non-Jacobian inequality, and assembly of the endomorphism-ring
//! conclusions from the Galois verdict and the F3 commutant.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::cert::{assemble_galois_verdict, CertError, GaloisVerdict, Status};
use crate::intfact::BaseField;
use crate::modf3::{commutant_dimension, split_odd_even, stabilizer_orbit_count};
use crate::perm::PermGroup;
use crate::poly::IntPolynomial;
use crate::signed::build_wreath;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrymError {
    /// n not congruent to 11 mod 12.
    BadCongruence(usize),
    Cert(CertError),
}

impl fmt::Display for PrymError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrymError::BadCongruence(n) => {
                write!(f, "n = {} is not congruent to 11 mod 12", n)
            }
            PrymError::Cert(e) => write!(f, "{}", e),
        }
    }
}

impl From<CertError> for PrymError {
    fn from(e: CertError) -> Self {
        PrymError::Cert(e)
    }
}

/// Numeric profile of the curve y^3 = f(x), deg f = n = 12k+11, and of
/// its Prym variety.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveProfile {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub genus_c: usize,
    pub genus_quotient: usize,
    pub prym_dim: usize,
    /// Multiplicities (floor(n/3), floor(2n/3)) of the two eigenvalues
    /// of the order-3 automorphism on the holomorphic differentials.
    pub jac_mult: (usize, usize),
    /// Eigenform multiplicities (2k+1, 4k+4) on the Prym.
    pub prym_mult: (usize, usize),
    /// Exponent lists of the anti-invariant eigenbases: x^e dx/y and
    /// x^e dx/y^2.
    pub anti_invariant_basis: (Vec<usize>, Vec<usize>),
    pub nonjacobian_lhs: usize,
    pub nonjacobian_rhs: usize,
}

pub fn curve_profile(n: usize) -> Result<CurveProfile, PrymError> {
    if n < 11 || n % 12 != 11 {
        return Err(PrymError::BadCongruence(n));
    }
    let k = (n - 11) / 12;
    let m = 6 * k + 5;
    debug_assert_eq!(n, 2 * m + 1);
    let dx_over_y: Vec<usize> = (0..=2 * k).map(|i| 2 * i + 1).collect();
    let dx_over_y2: Vec<usize> = (0..=4 * k + 3).map(|j| 2 * j).collect();
    Ok(CurveProfile {
        n,
        k,
        m,
        genus_c: n - 1,
        genus_quotient: m,
        prym_dim: m,
        jac_mult: (n / 3, 2 * n / 3),
        prym_mult: (2 * k + 1, 4 * k + 4),
        anti_invariant_basis: (dx_over_y, dx_over_y2),
        nonjacobian_lhs: 6 * k + 9,
        nonjacobian_rhs: m + 2,
    })
}

/// Non-Jacobian criterion 3|a - b| > dim + 2 applied to the Prym
/// eigenform multiplicities; the margin is the constant 2 in scope.
pub fn nonjacobian_check(profile: &CurveProfile) -> bool {
    profile.nonjacobian_lhs > profile.nonjacobian_rhs
}

/// Rank bookkeeping: the lambda-torsion of the Prym is free of rank
/// 2 dim P / 2 = m, which must match the dimension of the odd part of
/// the permutation module.
pub fn rank_consistency(profile: &CurveProfile) -> bool {
    2 * profile.prym_dim / 2 == profile.m && profile.prym_dim == profile.m
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub profile: CurveProfile,
    pub galois: GaloisVerdict,
    /// Dimension over F3 of the commutant of the odd part of the
    /// permutation module of the certified group.
    pub commutant: usize,
    /// (statement, status) in the order of the theorem's conclusions.
    pub conclusions: Vec<(String, Status)>,
}

/// Full pipeline: profile, Galois verdict, commutant, and the list of
/// conclusions with their proof level.
pub fn assemble_theorem_report(
    f: &IntPolynomial,
    field: BaseField,
    budget: usize,
) -> Result<TheoremReport, PrymError> {
    let n = f
        .degree()
        .ok_or_else(|| CertError::PreconditionViolated(vec!["f must be nonzero".to_string()]))?;
    let profile = curve_profile(n)?;
    let galois = assemble_galois_verdict(f, field, budget)?;

    // the commutant of the odd part under the full even-signed wreath
    // group; valid for the Galois module exactly when the verdict holds
    let wd = build_wreath(&PermGroup::symmetric(profile.m), true);
    let (odd, _) = split_odd_even(&wd).map_err(|_| {
        CertError::PreconditionViolated(vec!["wreath action lost its pairing".to_string()])
    })?;
    let commutant = commutant_dimension(&odd).map_err(|_| {
        CertError::PreconditionViolated(vec!["odd module too large".to_string()])
    })?;
    // cross-check: stabilizer orbit count = commutant of the full
    // module = commutant(odd) + commutant(even)
    debug_assert_eq!(stabilizer_orbit_count(&wd), Ok(3));

    let b1 = if galois.conclusion == Status::Proven && commutant == 1 {
        Status::Proven
    } else if galois.conclusion == Status::Failed {
        Status::Failed
    } else {
        Status::Heuristic
    };
    let c_status = if nonjacobian_check(&profile) {
        Status::Proven
    } else {
        Status::Failed
    };
    let b2 = if b1 == Status::Proven && c_status == Status::Proven {
        Status::Proven
    } else if b1 == Status::Failed || c_status == Status::Failed {
        Status::Failed
    } else {
        Status::Heuristic
    };

    let conclusions = vec![
        (
            format!(
                "(i)(1)(A) the Prym P has dimension m = {} and admits Z[zeta_3] with lambda-torsion of rank m",
                profile.m
            ),
            if rank_consistency(&profile) {
                Status::Proven
            } else {
                Status::Failed
            },
        ),
        (
            "(i)(1)(B) the induced polarization is twice a principal one".to_string(),
            Status::Cited,
        ),
        (
            format!(
                "(i)(1)(C) P is not a Jacobian: 3|{} - {}| = {} > {} = dim + 2",
                profile.prym_mult.0,
                profile.prym_mult.1,
                profile.nonjacobian_lhs,
                profile.nonjacobian_rhs
            ),
            c_status,
        ),
        (
            format!(
                "(i)(2) the eigenform multiplicities on P are ({}, {})",
                profile.prym_mult.0, profile.prym_mult.1
            ),
            Status::Proven,
        ),
        (
            "(ii)(a) the lambda-torsion of P is the odd part of the permutation module".to_string(),
            Status::Cited,
        ),
        (
            "(ii)(b1) End(P) = Z[zeta_3] and P is absolutely simple".to_string(),
            b1,
        ),
        (
            "(ii)(b2) P is not isogenous to a product of Jacobians".to_string(),
            b2,
        ),
    ];

    Ok(TheoremReport {
        profile,
        galois,
        commutant,
        conclusions,
    })
}
