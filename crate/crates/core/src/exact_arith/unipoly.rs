//! Dense univariate polynomials over Q, lowest-degree coefficient first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{sign_of, Rational};
use crate::error::Error;

/// A univariate polynomial over Q. The zero polynomial is the empty
/// coefficient list; otherwise the leading coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monomial c * U^deg.
    pub fn monomial(c: Rational, deg: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); deg];
        coeffs.push(c);
        UniPoly::new(coeffs)
    }

    /// Convenience constructor from integer coefficients, lowest first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| super::rational::int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().map_or(false, |c| c.is_one())
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading_coeff() {
            None => UniPoly::zero(),
            Some(lc) => {
                let inv = lc.recip();
                UniPoly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k + 1)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division; panics if `div` is zero.
    pub fn div_rem(&self, div: &UniPoly) -> (UniPoly, UniPoly) {
        let d = div.degree().expect("division by zero polynomial");
        if self.degree().map_or(true, |n| n < d) {
            return (UniPoly::zero(), self.clone());
        }
        let n = self.degree().unwrap();
        let lc_inv = div.leading_coeff().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); n - d + 1];
        for k in (d..=n).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] * &lc_inv;
            for j in 0..d {
                let t = &div.coeffs[j] * &q;
                rem[k - d + j] -= t;
            }
            rem[k] = Rational::zero();
            quot[k - d] = q;
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn rem(&self, div: &UniPoly) -> UniPoly {
        self.div_rem(div).1
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn exact_div(&self, div: &UniPoly) -> UniPoly {
        let (q, r) = self.div_rem(div);
        assert!(r.is_zero(), "exact_div with nonzero remainder");
        q
    }

    pub fn divides(&self, other: &UniPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly, Error> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::UndefinedGcd);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            // primitive-ish normalization keeps coefficient growth in check
            b = r.normalized_sign();
        }
        Ok(a.monic())
    }

    /// Divides out the numerator/denominator content; keeps the sign of the
    /// leading coefficient positive. Same roots, smaller coefficients.
    fn normalized_sign(&self) -> UniPoly {
        match self.leading_coeff() {
            None => UniPoly::zero(),
            Some(lc) => {
                if lc.is_negative() {
                    self.scale(&-Rational::one())
                } else {
                    self.clone()
                }
            }
        }
    }

    /// Extended gcd: returns (g, s, t) monic with s*self + t*other = g.
    pub fn extended_gcd(&self, other: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = UniPoly::one();
        let mut s1 = UniPoly::zero();
        let mut t0 = UniPoly::zero();
        let mut t1 = UniPoly::one();
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (UniPoly::zero(), s0, t0);
        }
        let lc_inv = r0.leading_coeff().unwrap().recip();
        let c = UniPoly::constant(lc_inv);
        (&r0 * &c, &s0 * &c, &t0 * &c)
    }

    /// Inverse of `self` modulo `m`; None when gcd(self, m) != 1.
    pub fn inverse_mod(&self, m: &UniPoly) -> Option<UniPoly> {
        let (g, s, _) = self.extended_gcd(m);
        if g.is_one() {
            Some(s.rem(m))
        } else {
            None
        }
    }

    /// Monic squarefree part: self / gcd(self, self').
    pub fn squarefree_part(&self) -> Result<UniPoly, Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(UniPoly::one());
        }
        let g = self.gcd(&self.derivative())?;
        Ok(self.exact_div(&g).monic())
    }

    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.is_constant() {
            return true;
        }
        self.gcd(&self.derivative())
            .map_or(false, |g| g.is_one())
    }

    /// self(g) reduced modulo q, by Horner over the quotient ring.
    pub fn compose_mod(&self, g: &UniPoly, q: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = (&(&acc * g) + &UniPoly::constant(c.clone())).rem(q);
        }
        acc
    }

    /// self^e reduced modulo q.
    pub fn pow_mod(&self, e: usize, q: &UniPoly) -> UniPoly {
        let mut base = self.rem(q);
        let mut e = e;
        let mut acc = UniPoly::one().rem(q);
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(q);
            }
            base = (&base * &base).rem(q);
            e >>= 1;
        }
        acc
    }

    pub fn pow(&self, e: usize) -> UniPoly {
        let mut acc = UniPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Clears denominators and content: returns (primitive integer
    /// coefficients lowest-first with positive leading sign, scale) with
    /// self = scale * primitive.
    pub fn to_primitive_integers(&self) -> (Vec<BigInt>, Rational) {
        use num_integer::Integer;
        if self.is_zero() {
            return (Vec::new(), Rational::one());
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
        (prim, Rational::new(content, den_lcm))
    }

    /// Cauchy root bound: every real root lies in (-M, M).
    pub fn cauchy_bound(&self) -> Rational {
        let lc = self
            .leading_coeff()
            .expect("root bound of zero polynomial")
            .abs();
        let mut max = Rational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let v = c.abs() / &lc;
            if v > max {
                max = v;
            }
        }
        max + Rational::one()
    }

    /// Sign of the polynomial at +infinity / -infinity.
    pub fn sign_at_pos_inf(&self) -> i8 {
        self.leading_coeff().map_or(0, sign_of)
    }

    pub fn sign_at_neg_inf(&self) -> i8 {
        match self.degree() {
            None => 0,
            Some(d) => {
                let s = self.sign_at_pos_inf();
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        UniPoly::new(out)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        UniPoly::new(out)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if k == 0 || !a.is_one() {
                if a.denom().is_one() {
                    write!(f, "{}", a.numer())?;
                } else {
                    write!(f, "{}/{}", a.numer(), a.denom())?;
                }
                if k > 0 {
                    write!(f, "*")?;
                }
            }
            if k == 1 {
                write!(f, "U")?;
            } else if k > 1 {
                write!(f, "U^{k}")?;
            }
        }
        Ok(())
    }
}

/// Monic gcd as a free function, matching the operation name used elsewhere.
pub fn uni_gcd(a: &UniPoly, b: &UniPoly) -> Result<UniPoly, Error> {
    a.gcd(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational::{int, rat};

    #[test]
    fn gcd_examples() {
        // (U^2-1, U-1) -> U-1
        let a = UniPoly::from_ints(&[-1, 0, 1]);
        let b = UniPoly::from_ints(&[-1, 1]);
        assert_eq!(a.gcd(&b).unwrap(), b.monic());
        // (U^4-1, U^2-1) -> U^2-1
        let a = UniPoly::from_ints(&[-1, 0, 0, 0, 1]);
        let b = UniPoly::from_ints(&[-1, 0, 1]);
        assert_eq!(a.gcd(&b).unwrap(), b);
        // (U^2+1, U^2-1) -> 1
        let a = UniPoly::from_ints(&[1, 0, 1]);
        let b = UniPoly::from_ints(&[-1, 0, 1]);
        assert_eq!(a.gcd(&b).unwrap(), UniPoly::one());
        // both zero -> error
        assert!(UniPoly::zero().gcd(&UniPoly::zero()).is_err());
    }

    #[test]
    fn squarefree_examples() {
        // (U-1)^2 -> U-1
        let p = UniPoly::from_ints(&[1, -2, 1]);
        assert_eq!(p.squarefree_part().unwrap(), UniPoly::from_ints(&[-1, 1]));
        // U^4-1 already squarefree
        let p = UniPoly::from_ints(&[-1, 0, 0, 0, 1]);
        assert_eq!(p.squarefree_part().unwrap(), p);
        // U^3-U^2 -> U^2-U
        let p = UniPoly::from_ints(&[0, 0, -1, 1]);
        assert_eq!(p.squarefree_part().unwrap(), UniPoly::from_ints(&[0, -1, 1]));
        assert!(UniPoly::zero().squarefree_part().is_err());
    }

    #[test]
    fn division_and_composition() {
        let p = UniPoly::from_ints(&[-1, 0, 0, 0, 1]); // U^4 - 1
        let d = UniPoly::from_ints(&[-1, 0, 1]); // U^2 - 1
        let (q, r) = p.div_rem(&d);
        assert!(r.is_zero());
        assert_eq!(q, UniPoly::from_ints(&[1, 0, 1]));
        // compose: (U^2)(U^2) mod U^4 - 2 = 2
        let sq = UniPoly::from_ints(&[0, 0, 1]);
        let m = UniPoly::from_ints(&[-2, 0, 0, 0, 1]);
        assert_eq!(sq.compose_mod(&sq, &m), UniPoly::constant(int(2)));
    }

    #[test]
    fn extended_gcd_inverse() {
        let m = UniPoly::from_ints(&[1, 0, 1]); // U^2+1
        let a = UniPoly::from_ints(&[1, 1]); // U+1
        let inv = a.inverse_mod(&m).unwrap();
        let prod = (&a * &inv).rem(&m);
        assert!(prod.is_one());
        // (U-1) not invertible mod U^2-1
        let m = UniPoly::from_ints(&[-1, 0, 1]);
        let a = UniPoly::from_ints(&[-1, 1]);
        assert!(a.inverse_mod(&m).is_none());
    }

    #[test]
    fn primitive_integers() {
        let p = UniPoly::new(vec![rat(1, 2), rat(-3, 4), int(1)]);
        let (prim, scale) = p.to_primitive_integers();
        let back: Vec<Rational> = prim
            .iter()
            .map(|c| Rational::from_integer(c.clone()) * &scale)
            .collect();
        assert_eq!(UniPoly::new(back), p);
        assert_eq!(prim, vec![2.into(), (-3).into(), 4.into()]);
    }

    #[test]
    fn cauchy_bound_contains_roots() {
        let p = UniPoly::from_ints(&[-2, 0, 1]); // roots ±sqrt(2)
        let m = p.cauchy_bound();
        assert!(m >= int(2));
    }
}
