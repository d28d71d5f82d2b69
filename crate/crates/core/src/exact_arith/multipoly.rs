//! Sparse multivariate polynomials over Q.
//!
//! Terms are kept in a `BTreeMap` from exponent vectors to nonzero
//! coefficients, so iteration order (and therefore everything derived from
//! it) is deterministic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use super::unipoly::UniPoly;

/// A polynomial in `n_vars` variables. Exponent vectors always have length
/// `n_vars`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    n_vars: usize,
    terms: BTreeMap<Vec<u16>, Rational>,
}

impl MultiPoly {
    pub fn zero(n_vars: usize) -> Self {
        MultiPoly {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n_vars: usize, c: Rational) -> Self {
        let mut p = MultiPoly::zero(n_vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; n_vars], c);
        }
        p
    }

    pub fn one(n_vars: usize) -> Self {
        MultiPoly::constant(n_vars, Rational::one())
    }

    /// The variable X_k (0-based).
    pub fn var(n_vars: usize, k: usize) -> Self {
        assert!(k < n_vars);
        let mut exp = vec![0u16; n_vars];
        exp[k] = 1;
        let mut p = MultiPoly::zero(n_vars);
        p.terms.insert(exp, Rational::one());
        p
    }

    pub fn from_terms(n_vars: usize, terms: impl IntoIterator<Item = (Vec<u16>, Rational)>) -> Self {
        let mut p = MultiPoly::zero(n_vars);
        for (exp, c) in terms {
            assert_eq!(exp.len(), n_vars);
            p.add_term(exp, c);
        }
        p
    }

    fn add_term(&mut self, exp: Vec<u16>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(
                self.terms
                    .get(&vec![0u16; self.n_vars])
                    .cloned()
                    .unwrap_or_else(Rational::zero),
            )
        } else {
            None
        }
    }

    /// Total degree; None for the zero polynomial.
    pub fn total_degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
    }

    pub fn degree_in(&self, var: usize) -> usize {
        self.terms
            .keys()
            .map(|e| e[var] as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn derivative(&self, var: usize) -> MultiPoly {
        assert!(var < self.n_vars);
        let mut out = MultiPoly::zero(self.n_vars);
        for (exp, c) in &self.terms {
            let e = exp[var];
            if e == 0 {
                continue;
            }
            let mut new_exp = exp.clone();
            new_exp[var] = e - 1;
            out.add_term(new_exp, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.n_vars);
        let mut acc = Rational::zero();
        for (exp, c) in &self.terms {
            let mut t = c.clone();
            for (k, &e) in exp.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[k];
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes a rational for variable `var` and drops that variable,
    /// returning a polynomial in `n_vars - 1` variables.
    pub fn substitute(&self, var: usize, value: &Rational) -> MultiPoly {
        assert!(var < self.n_vars);
        let mut out = MultiPoly::zero(self.n_vars - 1);
        // cache powers of value
        let max_e = self.degree_in(var);
        let mut powers = Vec::with_capacity(max_e + 1);
        powers.push(Rational::one());
        for _ in 0..max_e {
            powers.push(powers.last().unwrap() * value);
        }
        for (exp, c) in &self.terms {
            let mut new_exp = Vec::with_capacity(self.n_vars - 1);
            new_exp.extend_from_slice(&exp[..var]);
            new_exp.extend_from_slice(&exp[var + 1..]);
            out.add_term(new_exp, c * &powers[exp[var] as usize]);
        }
        out
    }

    /// Collects the polynomial as univariate in `var` with coefficients in
    /// the remaining variables, lowest degree first.
    pub fn coeffs_in(&self, var: usize) -> Vec<MultiPoly> {
        let d = self.degree_in(var);
        let mut out = vec![MultiPoly::zero(self.n_vars - 1); d + 1];
        for (exp, c) in &self.terms {
            let mut new_exp = Vec::with_capacity(self.n_vars - 1);
            new_exp.extend_from_slice(&exp[..var]);
            new_exp.extend_from_slice(&exp[var + 1..]);
            out[exp[var] as usize].add_term(new_exp, c.clone());
        }
        out
    }

    /// Views a 1-variable polynomial as a UniPoly.
    pub fn to_unipoly(&self) -> UniPoly {
        assert_eq!(self.n_vars, 1, "to_unipoly needs exactly one variable");
        let d = self.degree_in(0);
        let mut coeffs = vec![Rational::zero(); d + 1];
        for (exp, c) in &self.terms {
            coeffs[exp[0] as usize] = c.clone();
        }
        UniPoly::new(coeffs)
    }

    pub fn from_unipoly(p: &UniPoly) -> MultiPoly {
        MultiPoly::from_terms(
            1,
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (vec![k as u16], c.clone())),
        )
    }

    /// Restriction to the line `x = a + t*b`, as a univariate polynomial
    /// in `t`.
    pub fn restrict_to_line(&self, a: &[Rational], b: &[Rational]) -> UniPoly {
        assert_eq!(a.len(), self.n_vars);
        assert_eq!(b.len(), self.n_vars);
        let lines: Vec<UniPoly> = (0..self.n_vars)
            .map(|k| UniPoly::new(vec![a[k].clone(), b[k].clone()]))
            .collect();
        let mut acc = UniPoly::zero();
        for (exp, c) in &self.terms {
            let mut t = UniPoly::constant(c.clone());
            for (k, &e) in exp.iter().enumerate() {
                if e > 0 {
                    t = &t * &lines[k].pow(e as usize);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Evaluates at a tuple of univariate polynomials, reducing modulo `q`
    /// after every operation. This is the composition `self(p_1, ..., p_n)
    /// mod q` used by the representation checks.
    pub fn eval_unipoly_mod(&self, ps: &[UniPoly], q: &UniPoly) -> UniPoly {
        assert_eq!(ps.len(), self.n_vars);
        let mut power_cache: Vec<Vec<UniPoly>> = (0..self.n_vars)
            .map(|k| vec![UniPoly::one().rem(q), ps[k].rem(q)])
            .collect();
        let mut acc = UniPoly::zero();
        for (exp, c) in &self.terms {
            let mut t = UniPoly::constant(c.clone()).rem(q);
            for (k, &e) in exp.iter().enumerate() {
                let cache = &mut power_cache[k];
                while cache.len() <= e as usize {
                    let next = (&cache[cache.len() - 1] * &cache[1]).rem(q);
                    cache.push(next);
                }
                if e > 0 {
                    t = (&t * &cache[e as usize]).rem(q);
                }
            }
            acc = (&acc + &t).rem(q);
        }
        acc
    }

    pub fn pow(&self, e: usize) -> MultiPoly {
        let mut acc = MultiPoly::one(self.n_vars);
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

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.n_vars);
        }
        MultiPoly {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.clone(), a * c))
                .collect(),
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.n_vars, rhs.n_vars);
        let mut out = self.clone();
        for (exp, c) in &rhs.terms {
            out.add_term(exp.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.n_vars, rhs.n_vars);
        let mut out = self.clone();
        for (exp, c) in &rhs.terms {
            out.add_term(exp.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.n_vars, rhs.n_vars);
        let mut out = MultiPoly::zero(self.n_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exp: Vec<u16> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exp, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, c) in self.terms.iter().rev() {
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
            let has_vars = exp.iter().any(|&e| e > 0);
            if !has_vars || !a.is_one() {
                if a.denom().is_one() {
                    write!(f, "{}", a.numer())?;
                } else {
                    write!(f, "{}/{}", a.numer(), a.denom())?;
                }
                if has_vars {
                    write!(f, "*")?;
                }
            }
            let mut first_var = true;
            for (k, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first_var {
                    write!(f, "*")?;
                }
                first_var = false;
                write!(f, "x{}", k + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational::{int, rat};

    fn circle() -> MultiPoly {
        // x^2 + y^2 - 1
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        &(&(&x * &x) + &(&y * &y)) - &MultiPoly::one(2)
    }

    #[test]
    fn eval_and_derivative() {
        let f = circle();
        assert_eq!(f.eval(&[rat(3, 5), rat(4, 5)]), int(0));
        assert_eq!(f.eval(&[int(1), int(1)]), int(1));
        let fx = f.derivative(0);
        assert_eq!(fx.eval(&[int(3), int(7)]), int(6));
    }

    #[test]
    fn substitution_drops_variable() {
        let f = circle();
        let g = f.substitute(0, &rat(1, 2)); // 1/4 + y^2 - 1
        assert_eq!(g.n_vars(), 1);
        let u = g.to_unipoly();
        assert_eq!(u, UniPoly::new(vec![rat(-3, 4), int(0), int(1)]));
    }

    #[test]
    fn line_restriction() {
        let f = circle();
        // x = t, y = t: f|line = 2t^2 - 1
        let r = f.restrict_to_line(&[int(0), int(0)], &[int(1), int(1)]);
        assert_eq!(r, UniPoly::new(vec![int(-1), int(0), int(2)]));
    }

    #[test]
    fn composition_mod() {
        let f = circle();
        // p = (0, U), q = U^2 - 1: f(0, U) = U^2 - 1 = 0 mod q
        let q = UniPoly::from_ints(&[-1, 0, 1]);
        let ps = vec![UniPoly::zero(), UniPoly::from_ints(&[0, 1])];
        assert!(f.eval_unipoly_mod(&ps, &q).is_zero());
    }

    #[test]
    fn display_is_readable() {
        let f = circle();
        assert_eq!(format!("{f}"), "x1^2 + x2^2 - 1");
    }
}
