//! Univariate polynomial arithmetic modulo a machine-word prime.
//!
//! Supports the factorization pipeline: squarefree-ness checks mod p,
//! distinct-degree splitting, and Cantor–Zassenhaus equal-degree splitting.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    // p prime
    pow_mod(a, p - 2, p)
}

/// Dense polynomial over Z/pZ, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModPoly {
    pub p: u64,
    pub coeffs: Vec<u64>,
}

impl ModPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in &mut coeffs {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        ModPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        ModPoly::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        ModPoly::new(p, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn monic(&self) -> ModPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.lc(), self.p);
        ModPoly::new(
            self.p,
            self.coeffs.iter().map(|&c| mul_mod(c, inv, self.p)).collect(),
        )
    }

    pub fn add(&self, rhs: &ModPoly) -> ModPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![0u64; n];
        for k in 0..n {
            let a = self.coeffs.get(k).copied().unwrap_or(0);
            let b = rhs.coeffs.get(k).copied().unwrap_or(0);
            out[k] = (a + b) % self.p;
        }
        ModPoly::new(self.p, out)
    }

    pub fn sub(&self, rhs: &ModPoly) -> ModPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![0u64; n];
        for k in 0..n {
            let a = self.coeffs.get(k).copied().unwrap_or(0);
            let b = rhs.coeffs.get(k).copied().unwrap_or(0);
            out[k] = (a + self.p - b) % self.p;
        }
        ModPoly::new(self.p, out)
    }

    pub fn mul(&self, rhs: &ModPoly) -> ModPoly {
        if self.is_zero() || rhs.is_zero() {
            return ModPoly::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        ModPoly::new(self.p, out)
    }

    pub fn div_rem(&self, div: &ModPoly) -> (ModPoly, ModPoly) {
        let d = div.degree().expect("division by zero polynomial");
        if self.degree().map_or(true, |n| n < d) {
            return (ModPoly::zero(self.p), self.clone());
        }
        let p = self.p;
        let n = self.degree().unwrap();
        let lc_inv = inv_mod(div.lc(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; n - d + 1];
        for k in (d..=n).rev() {
            if rem[k] == 0 {
                continue;
            }
            let q = mul_mod(rem[k], lc_inv, p);
            for j in 0..=d {
                let t = mul_mod(div.coeffs[j], q, p);
                rem[k - d + j] = (rem[k - d + j] + p - t) % p;
            }
            quot[k - d] = q;
        }
        (ModPoly::new(p, quot), ModPoly::new(p, rem))
    }

    pub fn rem(&self, div: &ModPoly) -> ModPoly {
        self.div_rem(div).1
    }

    pub fn gcd(&self, rhs: &ModPoly) -> ModPoly {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> ModPoly {
        if self.coeffs.len() <= 1 {
            return ModPoly::zero(self.p);
        }
        ModPoly::new(
            self.p,
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, &c)| mul_mod(c, (k as u64 + 1) % self.p, self.p))
                .collect(),
        )
    }

    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.gcd(&self.derivative()).is_one()
    }

    /// self^e mod m, with a big-integer exponent (needed for p^d powers).
    pub fn pow_mod_big(&self, e: &BigUint, m: &ModPoly) -> ModPoly {
        let mut acc = ModPoly::one(self.p);
        let mut base = self.rem(m);
        let mut e = e.clone();
        let two = BigUint::from(2u32);
        while !e.is_zero() {
            if (&e % &two).is_one() {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e /= &two;
        }
        acc
    }
}

/// Distinct-degree decomposition of a squarefree monic polynomial:
/// returns (product of irreducible factors of degree d, d) pairs.
pub fn distinct_degree(f: &ModPoly) -> Vec<(ModPoly, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut f = f.monic();
    let mut h = ModPoly::x(p); // x^(p^d) mod f, iterated
    let mut d = 0usize;
    while f.degree().map_or(0, |n| n) >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod_big(&BigUint::from(p), &f);
        let g = f.gcd(&h.sub(&ModPoly::x(p)));
        if !g.is_one() {
            out.push((g.clone(), d));
            f = f.div_rem(&g).0;
            h = h.rem(&f);
        }
    }
    if f.degree().map_or(0, |n| n) > 0 {
        let d = f.degree().unwrap();
        out.push((f, d));
    }
    out
}

/// Cantor–Zassenhaus equal-degree splitting: factors a monic squarefree
/// product of degree-`d` irreducibles. Randomized internally but seeded by
/// the caller, so the overall factorization is deterministic.
pub fn equal_degree_split<R: Rng>(f: &ModPoly, d: usize, rng: &mut R) -> Vec<ModPoly> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        return vec![f.monic()];
    }
    let p = f.p;
    // odd prime: r^((p^d - 1)/2) - 1 splits
    let exp = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    loop {
        let coeffs: Vec<u64> = (0..n).map(|_| rng.gen_range(0..p)).collect();
        let r = ModPoly::new(p, coeffs);
        if r.degree().map_or(true, |dr| dr == 0) {
            continue;
        }
        let g = f.gcd(&r);
        if !g.is_one() && g.degree() != f.degree() {
            let rest = f.div_rem(&g).0;
            let mut out = equal_degree_split(&g, d, rng);
            out.extend(equal_degree_split(&rest, d, rng));
            return out;
        }
        let h = r.pow_mod_big(&exp, f).sub(&ModPoly::one(p));
        let g = f.gcd(&h);
        if !g.is_one() && g.degree() != f.degree() {
            let rest = f.div_rem(&g).0;
            let mut out = equal_degree_split(&g, d, rng);
            out.extend(equal_degree_split(&rest, d, rng));
            return out;
        }
    }
}

/// Full factorization of a squarefree monic polynomial mod p into monic
/// irreducibles.
pub fn factor_squarefree_mod_p<R: Rng>(f: &ModPoly, rng: &mut R) -> Vec<ModPoly> {
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f) {
        out.extend(equal_degree_split(&g, d, rng));
    }
    out.sort_by(|a, b| (a.degree(), &a.coeffs).cmp(&(b.degree(), &b.coeffs)));
    out
}

/// First odd primes via trial division; plenty for choosing a good
/// reduction prime.
pub fn small_primes(count: usize) -> Vec<u64> {
    let mut primes: Vec<u64> = Vec::with_capacity(count);
    let mut candidate = 3u64;
    while primes.len() < count {
        if primes
            .iter()
            .take_while(|&&q| q * q <= candidate)
            .all(|&q| candidate % q != 0)
        {
            primes.push(candidate);
        }
        candidate += 2;
    }
    primes
}

pub fn rational_num_mod_p(r: &crate::exact_arith::Rational, p: u64) -> Option<u64> {
    let pm = num_bigint::BigInt::from(p);
    let num = ((r.numer() % &pm) + &pm) % &pm;
    let den = ((r.denom() % &pm) + &pm) % &pm;
    let den_u = den.to_u64()?;
    if den_u == 0 {
        return None;
    }
    Some(mul_mod(num.to_u64()?, inv_mod(den_u, p), p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn arithmetic_mod_p() {
        let p = 10007;
        let f = ModPoly::new(p, vec![p - 1, 0, 1]); // x^2 - 1
        let g = ModPoly::new(p, vec![1, 1]); // x + 1
        let (q, r) = f.div_rem(&g);
        assert!(r.is_zero());
        assert_eq!(q, ModPoly::new(p, vec![p - 1, 1]));
        assert_eq!(f.gcd(&g), g.monic());
    }

    #[test]
    fn factor_x4_minus_1_mod_5() {
        // x^4 - 1 = (x-1)(x+1)(x-2)(x+2) mod 5
        let p = 5;
        let f = ModPoly::new(p, vec![4, 0, 0, 0, 1]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let factors = factor_squarefree_mod_p(&f, &mut rng);
        assert_eq!(factors.len(), 4);
        let mut prod = ModPoly::one(p);
        for g in &factors {
            assert_eq!(g.degree(), Some(1));
            prod = prod.mul(g);
        }
        assert_eq!(prod, f.monic());
    }

    #[test]
    fn factor_irreducible_quadratic() {
        // x^2 + 1 irreducible mod 7 (since -1 is not a QR mod 7)
        let p = 7;
        let f = ModPoly::new(p, vec![1, 0, 1]);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let factors = factor_squarefree_mod_p(&f, &mut rng);
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0], f.monic());
    }

    #[test]
    fn primes_list() {
        assert_eq!(small_primes(5), vec![3, 5, 7, 11, 13]);
    }
}
