//! Sturm sequences and exact real-root counting.
//!
//! The chain starts with `p` and `p'`; each later entry is the negated
//! remainder of the two before it. For squarefree `p` the chain ends in a
//! nonzero constant, and the difference of sign variations counts the
//! distinct real roots in a half-open interval `(lo, hi]`. One consistent
//! half-open convention keeps all the bisection bookkeeping downstream
//! honest.

use super::rational::{sign_of, Rational};
use super::unipoly::UniPoly;
use crate::error::Error;

/// An interval endpoint: a rational value or an infinity.
#[derive(Clone, Debug, PartialEq)]
pub enum Endpoint {
    NegInf,
    Value(Rational),
    PosInf,
}

impl Endpoint {
    fn strictly_below(&self, other: &Endpoint) -> bool {
        match (self, other) {
            (Endpoint::NegInf, Endpoint::NegInf) => false,
            (Endpoint::NegInf, _) => true,
            (_, Endpoint::PosInf) => !matches!(self, Endpoint::PosInf),
            (Endpoint::Value(a), Endpoint::Value(b)) => a < b,
            _ => false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<UniPoly>,
}

impl SturmSequence {
    /// Builds the canonical chain for `p`. The polynomial need not be
    /// squarefree, but root counting requires the last entry to be a
    /// nonzero constant, which holds exactly when it is.
    pub fn new(p: &UniPoly) -> Result<Self, Error> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut chain = vec![p.clone(), p.derivative()];
        while !chain.last().unwrap().is_zero() {
            let k = chain.len();
            let r = chain[k - 2].rem(&chain[k - 1]);
            chain.push(-&r);
        }
        chain.pop(); // drop the trailing zero
        Ok(SturmSequence { chain })
    }

    pub fn chain(&self) -> &[UniPoly] {
        &self.chain
    }

    /// Sign variations of the chain at an endpoint, ignoring zeros.
    pub fn variations_at(&self, at: &Endpoint) -> usize {
        let mut count = 0;
        let mut last: i8 = 0;
        for p in &self.chain {
            let s = match at {
                Endpoint::NegInf => p.sign_at_neg_inf(),
                Endpoint::PosInf => p.sign_at_pos_inf(),
                Endpoint::Value(x) => sign_of(&p.eval(x)),
            };
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_roots(&self, lo: &Endpoint, hi: &Endpoint) -> usize {
        let vl = self.variations_at(lo);
        let vh = self.variations_at(hi);
        vl.saturating_sub(vh)
    }
}

/// Counts distinct real roots of squarefree `p` in `(lo, hi]`.
/// Infinite endpoints use the sign limits of the leading term.
pub fn sturm_root_count(p: &UniPoly, lo: &Endpoint, hi: &Endpoint) -> Result<usize, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if !lo.strictly_below(hi) {
        return Err(Error::DimensionMismatch(
            "interval endpoints must satisfy lo < hi".into(),
        ));
    }
    Ok(SturmSequence::new(p)?.count_roots(lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational::int;

    fn count_inf(p: &UniPoly) -> usize {
        sturm_root_count(p, &Endpoint::NegInf, &Endpoint::PosInf).unwrap()
    }

    #[test]
    fn counting_examples() {
        // U^2 - 1 has two real roots
        assert_eq!(count_inf(&UniPoly::from_ints(&[-1, 0, 1])), 2);
        // U^2 + 1 has none
        assert_eq!(count_inf(&UniPoly::from_ints(&[1, 0, 1])), 0);
        // U^3 - U on (0, 2]: only the root 1
        let p = UniPoly::from_ints(&[0, -1, 0, 1]);
        let n = sturm_root_count(
            &p,
            &Endpoint::Value(int(0)),
            &Endpoint::Value(int(2)),
        )
        .unwrap();
        assert_eq!(n, 1);
    }

    #[test]
    fn half_open_convention() {
        // root at the right endpoint is counted, at the left it is not
        let p = UniPoly::from_ints(&[0, 1]); // U
        let n = sturm_root_count(&p, &Endpoint::Value(int(-1)), &Endpoint::Value(int(0))).unwrap();
        assert_eq!(n, 1);
        let n = sturm_root_count(&p, &Endpoint::Value(int(0)), &Endpoint::Value(int(2))).unwrap();
        assert_eq!(n, 0);
    }

    #[test]
    fn rejects_non_squarefree() {
        let p = UniPoly::from_ints(&[1, -2, 1]); // (U-1)^2
        assert!(matches!(
            sturm_root_count(&p, &Endpoint::NegInf, &Endpoint::PosInf),
            Err(Error::NotSquarefree)
        ));
    }

    #[test]
    fn chain_shape() {
        let p = UniPoly::from_ints(&[-2, 0, 1]);
        let s = SturmSequence::new(&p).unwrap();
        assert_eq!(s.chain()[0], p);
        assert_eq!(s.chain()[1], p.derivative());
        assert!(s.chain().last().unwrap().is_constant());
    }
}
