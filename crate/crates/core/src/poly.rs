//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients: parity and squarefreeness tests, even-part extraction,
//! exact resultants (Bareiss and pseudo-remainder routes) and
//! discriminants.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    ZeroPolynomial,
    DegreeZero,
    NotEven,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ZeroPolynomial => write!(f, "operation undefined for the zero polynomial"),
            PolyError::DegreeZero => write!(f, "operation requires degree at least 1"),
            PolyError::NotEven => write!(f, "polynomial has a nonzero odd-index coefficient"),
        }
    }
}

/// Dense integer polynomial; `coeffs[i]` is the coefficient of `x^i`,
/// trailing zeros stripped. The zero polynomial has empty `coeffs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![BigInt::zero(), BigInt::one()])
    }

    /// `c * x^e`.
    pub fn monomial(c: BigInt, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        Self::new(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coefficient(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> IntPolynomial {
        if self.coeffs.len() <= 1 {
            return IntPolynomial::zero();
        }
        IntPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coefficient(i) + other.coefficient(i)).collect())
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coefficient(i) - other.coefficient(i)).collect())
    }

    pub fn neg(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> IntPolynomial {
        let mut base = self.clone();
        let mut acc = IntPolynomial::constant(BigInt::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `p(x^2)`.
    pub fn substitute_square(&self) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); 2 * self.coeffs.len() - 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[2 * i] = c.clone();
        }
        IntPolynomial::new(out)
    }

    /// gcd of coefficient absolute values; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    pub fn primitive_part(&self) -> IntPolynomial {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPolynomial::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Pseudo-remainder: the `R` in `lc(d)^(deg self - deg d + 1) * self = Q*d + R`.
    pub fn pseudo_rem(&self, d: &IntPolynomial) -> IntPolynomial {
        let dd = d.degree().expect("pseudo_rem by zero");
        let lc = d.leading_coefficient().unwrap().clone();
        let mut r = self.clone();
        let sd = match self.degree() {
            Some(s) if s >= dd => s,
            _ => return r,
        };
        let mut e = (sd - dd + 1) as i64;
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let t = IntPolynomial::monomial(r.leading_coefficient().unwrap().clone(), rd - dd);
            r = r.scale(&lc).sub(&t.mul(d));
            e -= 1;
        }
        if e > 0 {
            r = r.scale(&lc.pow(e as u32));
        }
        r
    }

    /// gcd computed on primitive parts with contents tracked separately,
    /// via the primitive pseudo-remainder sequence. Result has positive
    /// leading coefficient.
    pub fn gcd(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() {
            return normalize_sign(other.clone());
        }
        if other.is_zero() {
            return normalize_sign(self.clone());
        }
        let cont = self.content().gcd(&other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        normalize_sign(a.primitive_part().scale(&cont))
    }

    /// True iff `p(-x) = -p(x)`, i.e. all even-index coefficients vanish.
    pub fn is_odd_poly(&self) -> bool {
        self.coeffs.iter().step_by(2).all(Zero::is_zero)
    }

    /// True iff all odd-index coefficients vanish.
    pub fn is_even_poly(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    /// True iff `gcd(p, p')` has degree 0.
    pub fn is_squarefree(&self) -> Result<bool, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(true);
        }
        Ok(self.gcd(&self.derivative()).degree() == Some(0))
    }

    /// The `g` with `h(x) = g(x^2)`, for even `h`.
    pub fn even_part(&self) -> Result<IntPolynomial, PolyError> {
        if !self.is_even_poly() {
            return Err(PolyError::NotEven);
        }
        Ok(IntPolynomial::new(
            self.coeffs.iter().step_by(2).cloned().collect(),
        ))
    }

    /// Quotient by `x`; requires a zero constant term.
    pub fn divide_by_x(&self) -> Option<IntPolynomial> {
        if self.is_zero() {
            return Some(IntPolynomial::zero());
        }
        if !self.coeffs[0].is_zero() {
            return None;
        }
        Some(IntPolynomial::new(self.coeffs[1..].to_vec()))
    }

    /// Exact resultant as the determinant of the Sylvester matrix with the
    /// rows of `self` first, computed by fraction-free Bareiss elimination.
    /// This determinant is the frozen sign convention:
    /// `res(x-a, x-b) = a - b`.
    pub fn resultant(&self, other: &IntPolynomial) -> Result<BigInt, PolyError> {
        let dp = self.degree().ok_or(PolyError::ZeroPolynomial)?;
        let dq = other.degree().ok_or(PolyError::ZeroPolynomial)?;
        if dp == 0 {
            return Ok(self.coeffs[0].pow(dq as u32));
        }
        if dq == 0 {
            return Ok(other.coeffs[0].pow(dp as u32));
        }
        let n = dp + dq;
        let mut m = vec![vec![BigInt::zero(); n]; n];
        for row in 0..dq {
            for (i, c) in self.coeffs.iter().rev().enumerate() {
                m[row][row + i] = c.clone();
            }
        }
        for row in 0..dp {
            for (i, c) in other.coeffs.iter().rev().enumerate() {
                m[dq + row][row + i] = c.clone();
            }
        }
        Ok(bareiss_determinant(m))
    }

    /// Independent resultant route through the pseudo-remainder sequence,
    /// with the same sign convention as `resultant`. Used as the second
    /// leg of the dual-route check.
    pub fn resultant_prs(&self, other: &IntPolynomial) -> Result<BigInt, PolyError> {
        if self.is_zero() || other.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let r = resultant_prs_rational(self, other);
        debug_assert!(r.is_integer());
        Ok(r.to_integer())
    }

    /// `disc(p) = (-1)^(d(d-1)/2) * res(p, p') / lc(p)`.
    pub fn discriminant(&self) -> Result<BigInt, PolyError> {
        let d = self.degree().ok_or(PolyError::ZeroPolynomial)?;
        if d == 0 {
            return Err(PolyError::DegreeZero);
        }
        if d == 1 {
            return Ok(BigInt::one());
        }
        let res = self.resultant(&self.derivative())?;
        let lc = self.leading_coefficient().unwrap();
        let signed = if (d * (d - 1) / 2) % 2 == 1 { -res } else { res };
        let (q, r) = signed.div_rem(lc);
        debug_assert!(r.is_zero());
        Ok(q)
    }

    /// Plain-text rendering, highest degree first.
    pub fn render(&self) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    out.push('-');
                }
                first = false;
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if i == 0 || !mag.is_one() {
                let _ = write!(out, "{}", mag);
                if i > 0 {
                    out.push('*');
                }
            }
            if i == 1 {
                out.push('x');
            } else if i > 1 {
                let _ = write!(out, "x^{}", i);
            }
        }
        out
    }
}

fn normalize_sign(p: IntPolynomial) -> IntPolynomial {
    match p.leading_coefficient() {
        Some(lc) if lc.is_negative() => p.neg(),
        _ => p,
    }
}

/// Fraction-free determinant; consumes the matrix.
fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero());
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// res(A, B) through pseudo-remainders, with exact rational bookkeeping:
/// res(A, B) = (-1)^(pq) lc(B)^(p - eq - r) res(B, R) where
/// R = prem(A, B), e = p - q + 1, r = deg R.
fn resultant_prs_rational(a: &IntPolynomial, b: &IntPolynomial) -> BigRational {
    let p = a.degree().unwrap();
    let q = b.degree().unwrap();
    if p < q {
        let s = resultant_prs_rational(b, a);
        return if (p * q) % 2 == 1 { -s } else { s };
    }
    if q == 0 {
        return BigRational::from_integer(b.coeffs[0].pow(p as u32));
    }
    let lcb = b.leading_coefficient().unwrap().clone();
    let e = (p - q + 1) as i64;
    let rem = a.pseudo_rem(b);
    if rem.is_zero() {
        return BigRational::zero();
    }
    let cont = rem.content();
    let rem = rem.primitive_part();
    let r = rem.degree().unwrap();
    // res(B, prem) = cont^q * res(B, rem)
    let sub = resultant_prs_rational(b, &rem);
    let mut factor = BigRational::from_integer(cont.pow(q as u32));
    let exp = p as i64 - e * q as i64 - r as i64;
    let lc_pow = BigRational::from_integer(lcb.pow(exp.unsigned_abs() as u32));
    if exp >= 0 {
        factor *= lc_pow;
    } else {
        factor /= lc_pow;
    }
    let res = factor * sub;
    if (p * q) % 2 == 1 {
        -res
    } else {
        res
    }
}


#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = IntPolynomial> {
        proptest::collection::vec(-9i64..=9, 1..=max_deg + 1)
            .prop_map(|cs| IntPolynomial::new(cs.into_iter().map(BigInt::from).collect()))
    }

    proptest! {
        #[test]
        fn bareiss_and_prs_resultants_agree(
            a in arb_poly(6),
            b in arb_poly(6),
        ) {
            prop_assume!(a.degree().is_some() && b.degree().is_some());
            prop_assert_eq!(a.resultant(&b), a.resultant_prs(&b));
        }

        #[test]
        fn resultant_with_linear_is_evaluation(p in arb_poly(6), c in -9i64..=9) {
            prop_assume!(p.degree().is_some());
            let linear = IntPolynomial::new(alloc::vec![BigInt::from(-c), BigInt::from(1)]);
            prop_assert_eq!(linear.resultant(&p), Ok(p.evaluate(&BigInt::from(c))));
        }

        #[test]
        fn discriminant_zero_iff_repeated_root(p in arb_poly(5)) {
            prop_assume!(p.degree().unwrap_or(0) >= 1);
            let disc = p.discriminant().unwrap();
            let squarefree = p.is_squarefree().unwrap();
            prop_assert_eq!(disc == BigInt::from(0), !squarefree);
        }

        #[test]
        fn even_part_round_trip(p in arb_poly(5)) {
            prop_assume!(p.degree().is_some());
            let h = p.substitute_square();
            prop_assert!(h.is_even_poly());
            prop_assert_eq!(h.even_part(), Ok(p.clone()));
        }

        #[test]
        fn gcd_divides_both(a in arb_poly(5), b in arb_poly(5)) {
            prop_assume!(a.degree().is_some() && b.degree().is_some());
            let g = a.gcd(&b);
            // primitive gcd divides the primitive parts: remainder of
            // pseudo-division by g is zero
            for p in [&a, &b] {
                let r = p.primitive_part().pseudo_rem(&g);
                prop_assert_eq!(r.degree(), None);
            }
        }

        #[test]
        fn render_parse_round_trip(p in arb_poly(6)) {
            let text = p.render();
            let back = crate::parse::parse_poly(&text).unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn resultant_multiplicative(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3)) {
            prop_assume!(a.degree().is_some() && b.degree().is_some() && c.degree().is_some());
            prop_assume!(a.degree() != Some(0) || b.degree() != Some(0));
            let ab = a.mul(&b);
            let lhs = ab.resultant(&c).unwrap();
            let rhs = a.resultant(&c).unwrap() * b.resultant(&c).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn resultant_degenerate_shapes() {
        // fixed sanity points the random strategies may miss
        let zero = IntPolynomial::zero();
        let x = IntPolynomial::x();
        assert_eq!(zero.resultant(&x), Err(PolyError::ZeroPolynomial));
        // two constants: empty Sylvester matrix, resultant 1
        let five = IntPolynomial::constant(BigInt::from(5));
        assert_eq!(five.resultant(&five), Ok(BigInt::from(1)));
    }
}
