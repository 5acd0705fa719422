//! Polynomial arithmetic modulo a prime and distinct-degree
//! factorization. Only degree multisets are produced, never the factors:
//! that is the Frobenius cycle type at an unramified prime, which is all
//! the certification chain consumes.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::intfact::{is_prime_u64, PrimeStream};
use crate::poly::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModPError {
    NotPrime,
    /// `p mod prime` is not squarefree (or the leading coefficient
    /// vanishes), so the prime carries no Frobenius cycle type.
    Ramified,
    /// The configured prime scan cap was reached before `budget`
    /// unramified primes were found.
    BudgetExhausted,
}

impl fmt::Display for ModPError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModPError::NotPrime => write!(f, "modulus is not prime"),
            ModPError::Ramified => write!(f, "polynomial is ramified at this prime"),
            ModPError::BudgetExhausted => write!(f, "prime scan cap reached before budget"),
        }
    }
}

/// Multiset of degrees of the irreducible factors of a polynomial at an
/// unramified prime; parts stored ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable();
        CycleType { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Signature of a permutation with these cycle lengths:
    /// `(-1)^(sum (part - 1))`.
    pub fn sign(&self) -> i8 {
        if self.parts.iter().map(|p| p - 1).sum::<usize>() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All achievable sums of sub-multisets, as a sorted list. Degrees of
    /// rational factors are constrained to lie in this set.
    pub fn subset_sums(&self) -> Vec<usize> {
        let total = self.total();
        let mut reachable = vec![false; total + 1];
        reachable[0] = true;
        for &p in &self.parts {
            for s in (0..=total - p).rev() {
                if reachable[s] {
                    reachable[s + p] = true;
                }
            }
        }
        (0..=total).filter(|&s| reachable[s]).collect()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "}}")
    }
}

/// Frobenius data at one unramified prime: cycle types on the roots of
/// `h` (2m points) and of `g` (m points).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusSample {
    pub prime: u64,
    pub type_h: CycleType,
    pub type_g: CycleType,
}

/// Dense polynomial over `F_p`, `p < 2^31`, coefficients in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl ModPoly {
    fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn x(p: u64) -> Self {
        ModPoly::new(p, vec![0, 1])
    }

    fn mul(&self, other: &ModPoly) -> ModPoly {
        if self.is_zero() || other.is_zero() {
            return ModPoly::new(self.p, Vec::new());
        }
        let p = self.p as u128;
        let mut out = vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u128 * b as u128) % p;
            }
        }
        ModPoly::new(self.p, out.into_iter().map(|c| c as u64).collect())
    }

    fn sub(&self, other: &ModPoly) -> ModPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &Vec<u64>, i: usize| v.get(i).copied().unwrap_or(0);
        ModPoly::new(
            self.p,
            (0..n)
                .map(|i| (get(&self.coeffs, i) + self.p - get(&other.coeffs, i)) % self.p)
                .collect(),
        )
    }

    fn scale(&self, c: u64) -> ModPoly {
        let p = self.p as u128;
        ModPoly::new(
            self.p,
            self.coeffs
                .iter()
                .map(|&a| (a as u128 * c as u128 % p) as u64)
                .collect(),
        )
    }

    /// Remainder of division by `d` (any nonzero divisor).
    fn rem(&self, d: &ModPoly) -> ModPoly {
        let dd = d.degree().expect("division by zero polynomial");
        let lc_inv = mod_inverse(*d.coeffs.last().unwrap(), self.p);
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let factor = (*r.coeffs.last().unwrap() as u128 * lc_inv as u128 % self.p as u128) as u64;
            let shift = rd - dd;
            let p128 = self.p as u128;
            for (i, &dc) in d.coeffs.iter().enumerate() {
                let sub = factor as u128 * dc as u128 % p128;
                let idx = shift + i;
                r.coeffs[idx] = ((r.coeffs[idx] as u128 + p128 - sub) % p128) as u64;
            }
            while r.coeffs.last() == Some(&0) {
                r.coeffs.pop();
            }
        }
        r
    }

    fn monic(&self) -> ModPoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) if lc == 1 => self.clone(),
            Some(&lc) => self.scale(mod_inverse(lc, self.p)),
        }
    }

    fn gcd(&self, other: &ModPoly) -> ModPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn derivative(&self) -> ModPoly {
        if self.coeffs.len() <= 1 {
            return ModPoly::new(self.p, Vec::new());
        }
        ModPoly::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| (c as u128 * (i as u64 % self.p) as u128 % self.p as u128) as u64)
                .collect(),
        )
    }

    /// `self^e mod modulus`, binary exponentiation.
    fn pow_mod(&self, mut e: u64, modulus: &ModPoly) -> ModPoly {
        let mut base = self.rem(modulus);
        let mut acc = ModPoly::new(self.p, vec![1]);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(modulus);
            }
        }
        acc
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p prime, a != 0 mod p
    let mut t = (0i128, 1i128);
    let mut r = (p as i128, a as i128);
    while r.1 != 0 {
        let q = r.0 / r.1;
        t = (t.1, t.0 - q * t.1);
        r = (r.1, r.0 - q * r.1);
    }
    (t.0.rem_euclid(p as i128)) as u64
}

/// Reduce an integer polynomial modulo a certified prime.
pub fn poly_mod_p(p: &IntPolynomial, prime: u64) -> Result<ModPoly, ModPError> {
    if prime >= 1 << 31 || !is_prime_u64(prime) {
        return Err(ModPError::NotPrime);
    }
    let bp = BigInt::from(prime);
    let coeffs = p
        .coefficients()
        .iter()
        .map(|c| {
            let mut r = c % &bp;
            if r.is_negative() {
                r += &bp;
            }
            r.to_u64().expect("residue fits")
        })
        .collect();
    Ok(ModPoly::new(prime, coeffs))
}

/// Distinct-degree factorization of `p mod prime`, returning only the
/// multiset of factor degrees. The Frobenius power `x^(prime^d)` is
/// maintained by repeated squaring of the step `w -> w^prime`, reusing
/// the previous power; cost is `O(d * deg^2 * log prime)` coefficient
/// operations.
pub fn ddf_cycle_type(p: &IntPolynomial, prime: u64) -> Result<CycleType, ModPError> {
    let reduced = poly_mod_p(p, prime)?;
    if reduced.degree() != p.degree() {
        return Err(ModPError::Ramified); // leading coefficient vanished
    }
    ddf_of_modpoly(&reduced)
}

fn ddf_of_modpoly(reduced: &ModPoly) -> Result<CycleType, ModPError> {
    let deg = match reduced.degree() {
        Some(d) if d >= 1 => d,
        _ => return Ok(CycleType::new(Vec::new())),
    };
    let deriv = reduced.derivative();
    if deriv.is_zero() || reduced.gcd(&deriv).degree() != Some(0) {
        return Err(ModPError::Ramified);
    }
    let mut rem = reduced.monic();
    let mut parts = Vec::new();
    let mut w = ModPoly::x(reduced.p).rem(&rem);
    let mut d = 0usize;
    let _ = deg;
    while rem.degree().map_or(false, |r| r >= 2 * (d + 1)) {
        d += 1;
        w = w.pow_mod(reduced.p, &rem);
        let x = ModPoly::x(reduced.p);
        let g = w.sub(&x).gcd(&rem);
        if let Some(gd) = g.degree() {
            if gd > 0 {
                debug_assert!(gd % d == 0);
                for _ in 0..gd / d {
                    parts.push(d);
                }
                let (q, r) = divide(&rem, &g);
                debug_assert!(r.is_zero());
                rem = q;
                if rem.degree() == Some(0) {
                    break;
                }
                w = w.rem(&rem);
            }
        }
    }
    if let Some(rd) = rem.degree() {
        if rd > 0 {
            parts.push(rd);
        }
    }
    Ok(CycleType::new(parts))
}

fn divide(a: &ModPoly, d: &ModPoly) -> (ModPoly, ModPoly) {
    let dd = d.degree().expect("division by zero polynomial");
    let lc_inv = mod_inverse(*d.coeffs.last().unwrap(), a.p);
    let mut r = a.clone();
    let adeg = match a.degree() {
        Some(x) if x >= dd => x,
        _ => return (ModPoly::new(a.p, Vec::new()), a.clone()),
    };
    let mut q = vec![0u64; adeg - dd + 1];
    let p128 = a.p as u128;
    while let Some(rd) = r.degree() {
        if rd < dd {
            break;
        }
        let factor = (*r.coeffs.last().unwrap() as u128 * lc_inv as u128 % p128) as u64;
        let shift = rd - dd;
        q[shift] = factor;
        for (i, &dc) in d.coeffs.iter().enumerate() {
            let sub = factor as u128 * dc as u128 % p128;
            let idx = shift + i;
            r.coeffs[idx] = ((r.coeffs[idx] as u128 + p128 - sub) % p128) as u64;
        }
        while r.coeffs.last() == Some(&0) {
            r.coeffs.pop();
        }
    }
    (ModPoly::new(a.p, q), r)
}

/// Outcome of deterministic Frobenius sampling over the ascending prime
/// stream: `budget` unramified samples plus the ramified primes that
/// were skipped along the way.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplingOutcome {
    pub samples: Vec<FrobeniusSample>,
    pub ramified_skipped: Vec<u64>,
}

/// Default cap on how many primes are scanned while looking for
/// `budget` unramified ones.
pub const DEFAULT_SCAN_CAP: usize = 100_000;

/// Sample Frobenius cycle types of `h` (and its even part `g`) at the
/// first `budget` unramified primes in ascending order. A prime is
/// unramified when both `h` and `g` stay squarefree of full degree mod
/// that prime.
pub fn sample_frobenius(
    h: &IntPolynomial,
    g: &IntPolynomial,
    budget: usize,
    scan_cap: usize,
) -> Result<SamplingOutcome, ModPError> {
    let mut samples = Vec::with_capacity(budget);
    let mut ramified = Vec::new();
    if budget == 0 {
        return Ok(SamplingOutcome {
            samples,
            ramified_skipped: ramified,
        });
    }
    for (scanned, prime) in PrimeStream::new().enumerate() {
        if scanned >= scan_cap {
            return Err(ModPError::BudgetExhausted);
        }
        match (ddf_cycle_type(h, prime), ddf_cycle_type(g, prime)) {
            (Ok(type_h), Ok(type_g)) => {
                samples.push(FrobeniusSample {
                    prime,
                    type_h,
                    type_g,
                });
                if samples.len() == budget {
                    return Ok(SamplingOutcome {
                        samples,
                        ramified_skipped: ramified,
                    });
                }
            }
            _ => ramified.push(prime),
        }
    }
    unreachable!("prime stream is unbounded")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    #[test]
    fn reduction_examples() {
        let h = parse_poly("x^10 - x^2 - 1").unwrap();
        let r = poly_mod_p(&h, 5).unwrap();
        let mut expect = vec![0u64; 11];
        expect[10] = 1;
        expect[2] = 4;
        expect[0] = 4;
        assert_eq!(r.coefficients(), &expect[..]);

        let z = poly_mod_p(&parse_poly("3*x^2").unwrap(), 3).unwrap();
        assert!(z.is_zero());

        assert_eq!(poly_mod_p(&IntPolynomial::x(), 4), Err(ModPError::NotPrime));
    }

    #[test]
    fn ddf_small_cases() {
        let p = parse_poly("x^2 - 1").unwrap();
        assert_eq!(ddf_cycle_type(&p, 5).unwrap(), CycleType::new(alloc::vec![1, 1]));
        let p = parse_poly("x^2 + 1").unwrap();
        assert_eq!(ddf_cycle_type(&p, 3).unwrap(), CycleType::new(alloc::vec![2]));
    }

    #[test]
    fn ddf_quintic_witness() {
        // smallest unramified prime giving {2,3} for x^5 - x - 1 is 2
        let g = parse_poly("x^5 - x - 1").unwrap();
        assert_eq!(ddf_cycle_type(&g, 2).unwrap(), CycleType::new(alloc::vec![2, 3]));
        assert_eq!(ddf_cycle_type(&g, 3).unwrap(), CycleType::new(alloc::vec![5]));
        // ramified exactly at 19 and 151 (disc = 19 * 151)
        assert_eq!(ddf_cycle_type(&g, 19), Err(ModPError::Ramified));
        assert_eq!(ddf_cycle_type(&g, 151), Err(ModPError::Ramified));
    }

    #[test]
    fn sampling_is_deterministic_and_skips_ramified() {
        let h = parse_poly("x^10 - x^2 - 1").unwrap();
        let g = h.even_part().unwrap();
        let out = sample_frobenius(&h, &g, 3, DEFAULT_SCAN_CAP).unwrap();
        // 2 is ramified for every even polynomial; first samples at 3, 5, 7
        assert_eq!(out.ramified_skipped, alloc::vec![2]);
        let primes: Vec<u64> = out.samples.iter().map(|s| s.prime).collect();
        assert_eq!(primes, alloc::vec![3, 5, 7]);
        assert_eq!(out.samples[0].type_h, CycleType::new(alloc::vec![5, 5]));
        assert_eq!(out.samples[0].type_g, CycleType::new(alloc::vec![5]));
        assert_eq!(out.samples[2].type_h, CycleType::new(alloc::vec![4, 6]));
        assert_eq!(out.samples[2].type_g, CycleType::new(alloc::vec![2, 3]));
    }

    #[test]
    fn zero_budget_is_empty() {
        let h = parse_poly("x^10 - x^2 - 1").unwrap();
        let g = h.even_part().unwrap();
        let out = sample_frobenius(&h, &g, 0, DEFAULT_SCAN_CAP).unwrap();
        assert!(out.samples.is_empty());
    }

    #[test]
    fn non_squarefree_exhausts_budget() {
        let sq = parse_poly("x^2").unwrap();
        assert_eq!(
            sample_frobenius(&sq, &IntPolynomial::x(), 1, 25),
            Err(ModPError::BudgetExhausted)
        );
    }

    #[test]
    fn subset_sums() {
        let t = CycleType::new(alloc::vec![2, 3]);
        assert_eq!(t.subset_sums(), alloc::vec![0, 2, 3, 5]);
        assert_eq!(t.sign(), -1); // (2-1)+(3-1) = 3, odd
        assert_eq!(CycleType::new(alloc::vec![1, 1, 1, 2]).sign(), -1);
        assert_eq!(CycleType::new(alloc::vec![5]).sign(), 1);
    }
}
