//! Exact-arithmetic core for certifying that an odd squarefree polynomial
//! `f(x) = x·h(x)` of degree `n = 12k + 11` has Galois group `W(D_m)` over
//! `Q(sqrt(-3))` (`m = 6k + 5`), and for deriving the numeric consequences
//! for the Prym variety of the trigonal curve `y^3 = f(x)`: endomorphism
//! ring `Z[zeta_3]`, dimension `m`, differential eigenvalue multiplicities
//! `(2k+1, 4k+4)`, and the non-jacobian inequality.
//!
//! Everything here is pure and allocation-only (`no_std` + `alloc`); IO,
//! JSON and the CLI live in the companion `prymcert-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cert;
pub mod intfact;
pub mod modf3;
pub mod modp;
pub mod parse;
pub mod perm;
pub mod poly;
pub mod prym;
pub mod signed;

pub use cert::{assemble_galois_verdict, Certificate, GaloisVerdict, Status};
pub use intfact::{factor_integer, is_square_in, squarefree_part, BaseField, FactoredInteger};
pub use modp::{ddf_cycle_type, sample_frobenius, CycleType, FrobeniusSample};
pub use perm::{PermGroup, Permutation};
pub use poly::IntPolynomial;
pub use prym::{assemble_theorem_report, curve_profile, CurveProfile, TheoremReport};
pub use signed::SignedPerm;
