//! Factorization of univariate polynomials over Q.
//!
//! Squarefree decomposition (Yun), then for each squarefree part:
//! monicize, reduce modulo a machine-word prime that keeps it squarefree,
//! factor mod p, Hensel-lift the modular factors past the coefficient
//! bound, and recombine subsets (Zassenhaus). Desk-scale degrees make the
//! exponential recombination a non-issue.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{factor_squarefree_mod_p, ModPoly};
use super::rational::Rational;
use super::unipoly::UniPoly;
use crate::error::Error;

/// Integer polynomial, lowest degree first. Internal to factorization.
#[derive(Clone, PartialEq, Debug)]
struct ZPoly(Vec<BigInt>);

impl ZPoly {
    fn trim(mut v: Vec<BigInt>) -> Self {
        while v.last().map_or(false, |c| c.is_zero()) {
            v.pop();
        }
        ZPoly(v)
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lc(&self) -> BigInt {
        self.0.last().cloned().unwrap_or_else(BigInt::zero)
    }

    fn mul(&self, rhs: &ZPoly) -> ZPoly {
        if self.0.is_empty() || rhs.0.is_empty() {
            return ZPoly(vec![]);
        }
        let mut out = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly::trim(out)
    }

    fn sub(&self, rhs: &ZPoly) -> ZPoly {
        let n = self.0.len().max(rhs.0.len());
        let mut out = vec![BigInt::zero(); n];
        for k in 0..n {
            let a = self.0.get(k).cloned().unwrap_or_else(BigInt::zero);
            let b = rhs.0.get(k).cloned().unwrap_or_else(BigInt::zero);
            out[k] = a - b;
        }
        ZPoly::trim(out)
    }

    fn add(&self, rhs: &ZPoly) -> ZPoly {
        let n = self.0.len().max(rhs.0.len());
        let mut out = vec![BigInt::zero(); n];
        for k in 0..n {
            let a = self.0.get(k).cloned().unwrap_or_else(BigInt::zero);
            let b = rhs.0.get(k).cloned().unwrap_or_else(BigInt::zero);
            out[k] = a + b;
        }
        ZPoly::trim(out)
    }

    fn to_mod(&self, p: u64) -> ModPoly {
        let pm = BigInt::from(p);
        ModPoly::new(
            p,
            self.0
                .iter()
                .map(|c| {
                    use num_traits::ToPrimitive;
                    (((c % &pm) + &pm) % &pm).to_u64().unwrap()
                })
                .collect(),
        )
    }

    fn to_unipoly(&self) -> UniPoly {
        UniPoly::new(
            self.0
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Max-norm-based bound: any monic factor of a monic g has coefficients
    /// bounded by 2^deg * (1 + |g|_2), so p^k must exceed twice that.
    fn factor_coeff_bound(&self) -> BigInt {
        let sum_sq: BigInt = self.0.iter().map(|c| c * c).sum();
        let norm = sum_sq.sqrt() + BigInt::one();
        (BigInt::one() << self.degree()) * norm * 2
    }
}

/// Coefficients of f mod p^k in symmetric representation (-p^k/2, p^k/2].
fn symmetric(v: &BigInt, modulus: &BigInt) -> BigInt {
    let m = ((v % modulus) + modulus) % modulus;
    if &m * 2 > *modulus {
        m - modulus
    } else {
        m
    }
}

/// Modular arithmetic on ZPoly coefficients mod m (non-symmetric).
fn zpoly_mod(f: &ZPoly, m: &BigInt) -> ZPoly {
    ZPoly::trim(f.0.iter().map(|c| ((c % m) + m) % m).collect())
}

fn zpoly_mul_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    zpoly_mod(&a.mul(b), m)
}

/// Division with remainder mod m where the divisor is monic.
fn zpoly_divrem_monic_mod(f: &ZPoly, div: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly) {
    let d = div.degree();
    let mut rem = zpoly_mod(f, m).0;
    if rem.len() <= d {
        return (ZPoly(vec![]), ZPoly::trim(rem));
    }
    let n = rem.len() - 1;
    let mut quot = vec![BigInt::zero(); n - d + 1];
    for k in (d..=n).rev() {
        let q = rem[k].clone();
        if q.is_zero() {
            continue;
        }
        for j in 0..=d {
            let t = (&div.0[j] * &q) % m;
            rem[k - d + j] = (((&rem[k - d + j] - t) % m) + m) % m;
        }
        quot[k - d] = q;
    }
    (ZPoly::trim(quot), ZPoly::trim(rem))
}

/// Lifts a two-factor factorization g = u*w (mod p) of monic g to mod p^K,
/// K the smallest power with p^K >= target. Linear Hensel steps; u, w
/// monic. Returns (u, w, p^K).
fn hensel_lift_pair(
    g: &ZPoly,
    u0: &ModPoly,
    w0: &ModPoly,
    p: u64,
    target: &BigInt,
) -> (ZPoly, ZPoly, BigInt) {
    let pb = BigInt::from(p);
    // Bezout: s*u + t*w = 1 mod p
    let (s0, t0) = {
        // extended euclid over Z/pZ
        let (mut r0, mut r1) = (u0.clone(), w0.clone());
        let (mut s0, mut s1) = (ModPoly::one(p), ModPoly::zero(p));
        let (mut t0, mut t1) = (ModPoly::zero(p), ModPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        // r0 is a nonzero constant
        let inv = super::modp::inv_mod(r0.lc(), p);
        let scale = ModPoly::new(p, vec![inv]);
        (s0.mul(&scale), t0.mul(&scale))
    };
    let mod_to_z = |f: &ModPoly| ZPoly::trim(f.coeffs.iter().map(|&c| BigInt::from(c)).collect());
    let mut u = mod_to_z(u0);
    let mut w = mod_to_z(w0);
    let s = mod_to_z(&s0);
    let t = mod_to_z(&t0);
    let mut modulus = pb.clone();
    while &modulus < target {
        let next = &modulus * &pb;
        // error e = (g - u*w) mod next; divisible by modulus
        let e = zpoly_mod(&g.sub(&u.mul(&w)), &next);
        if e.0.is_empty() {
            modulus = next;
            continue;
        }
        let e_div: ZPoly = ZPoly::trim(e.0.iter().map(|c| c / &modulus).collect());
        // du = (t*e mod u), q = (t*e div u), dw = s*e + q*w, all mod p;
        // then u*dw + w*du = e*(s*u + t*w) = e (mod p)
        let te = zpoly_mul_mod(&t, &e_div, &pb);
        let (q, du) = zpoly_divrem_monic_mod(&te, &u, &pb);
        let se = zpoly_mul_mod(&s, &e_div, &pb);
        let qw = zpoly_mul_mod(&q, &w, &pb);
        let dw = zpoly_mod(&se.add(&qw), &pb);
        // u' = u + modulus*du, w' = w + modulus*dw
        let bump = |f: &ZPoly, df: &ZPoly| -> ZPoly {
            let n = f.0.len().max(df.0.len());
            let mut out = vec![BigInt::zero(); n];
            for k in 0..n {
                let a = f.0.get(k).cloned().unwrap_or_else(BigInt::zero);
                let b = df.0.get(k).cloned().unwrap_or_else(BigInt::zero);
                out[k] = a + b * &modulus;
            }
            ZPoly::trim(out)
        };
        u = zpoly_mod(&bump(&u, &du), &next);
        w = zpoly_mod(&bump(&w, &dw), &next);
        modulus = next;
    }
    (u, w, modulus)
}

/// Multifactor Hensel lifting via a factor tree.
fn hensel_lift_tree(
    g: &ZPoly,
    factors: &[ModPoly],
    p: u64,
    target: &BigInt,
) -> (Vec<ZPoly>, BigInt) {
    if factors.len() == 1 {
        // g itself lifts the single factor (g monic, factor = g mod p)
        let mut modulus = BigInt::from(p);
        while &modulus < target {
            modulus *= BigInt::from(p);
        }
        return (vec![zpoly_mod(g, &modulus)], modulus);
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let mut u0 = ModPoly::one(p);
    for f in left {
        u0 = u0.mul(f);
    }
    let mut w0 = ModPoly::one(p);
    for f in right {
        w0 = w0.mul(f);
    }
    let (u, w, modulus) = hensel_lift_pair(g, &u0, &w0, p, target);
    let (mut lu, _) = hensel_lift_tree(&u, left, p, target);
    let (rw, _) = hensel_lift_tree(&w, right, p, target);
    lu.extend(rw);
    (lu, modulus)
}

/// Factors a squarefree primitive integer polynomial into monic irreducible
/// UniPolys over Q. Non-monic inputs are monicized first: for lc = l, the
/// polynomial l^(d-1) * g(x/l) is monic with integer coefficients and its
/// factors map back by x -> l*x.
fn factor_squarefree_z(g: &ZPoly) -> Vec<UniPoly> {
    let ell = g.lc();
    if ell.is_one() {
        return factor_squarefree_monic_z(g);
    }
    let n = g.degree();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for k in 0..n {
        coeffs[k] = &g.0[k] * ell.pow((n - 1 - k) as u32);
    }
    coeffs[n] = BigInt::one();
    let ghat = ZPoly::trim(coeffs);
    factor_squarefree_monic_z(&ghat)
        .into_iter()
        .map(|h| {
            // substitute x -> l*x and renormalize monic
            let scaled = UniPoly::new(
                h.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c * Rational::from_integer(ell.pow(k as u32)))
                    .collect(),
            );
            scaled.monic()
        })
        .collect()
}

/// Factors a squarefree monic UniPoly with integer coefficients into monic
/// irreducible UniPolys over Q.
fn factor_squarefree_monic_z(g: &ZPoly) -> Vec<UniPoly> {
    let deg = g.degree();
    if deg == 0 {
        return vec![];
    }
    if deg == 1 {
        return vec![g.to_unipoly().monic()];
    }
    // pick a prime keeping g squarefree (g monic, so lc never vanishes)
    let primes = super::modp::small_primes(2000);
    let mut chosen = None;
    for &p in &primes {
        let gp = g.to_mod(p);
        if gp.degree() == Some(deg) && gp.is_squarefree() {
            chosen = Some(p);
            break;
        }
    }
    let p = chosen.expect("no squarefree reduction prime among the first 2000 odd primes");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ p);
    let modular = factor_squarefree_mod_p(&g.to_mod(p).monic(), &mut rng);
    if modular.len() == 1 {
        return vec![g.to_unipoly().monic()];
    }
    let bound = g.factor_coeff_bound();
    let (lifted, modulus) = hensel_lift_tree(g, &modular, p, &bound);

    // Zassenhaus recombination over subsets of lifted factors.
    let mut remaining: Vec<ZPoly> = lifted;
    let mut current = g.clone();
    let mut out: Vec<UniPoly> = Vec::new();
    let mut subset_size = 1usize;
    'outer: while 2 * subset_size <= remaining.len() {
        let idxs: Vec<usize> = (0..remaining.len()).collect();
        for combo in combinations(&idxs, subset_size) {
            // candidate = product of chosen factors mod p^K, symmetric lift
            let mut cand = ZPoly(vec![BigInt::one()]);
            for &i in &combo {
                cand = zpoly_mod(&cand.mul(&remaining[i]), &modulus);
            }
            let cand = ZPoly::trim(cand.0.iter().map(|c| symmetric(c, &modulus)).collect());
            if cand.0.is_empty() {
                continue;
            }
            if let Some(quot) = exact_divide_z(&current, &cand) {
                out.push(cand.to_unipoly().monic());
                current = quot;
                let keep: Vec<ZPoly> = remaining
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, f)| f.clone())
                    .collect();
                remaining = keep;
                continue 'outer;
            }
        }
        subset_size += 1;
    }
    if current.degree() > 0 {
        out.push(current.to_unipoly().monic());
    }
    out
}

/// Exact division over Z for monic divisor candidates; None if not exact.
fn exact_divide_z(f: &ZPoly, div: &ZPoly) -> Option<ZPoly> {
    if div.0.is_empty() || !div.lc().is_one() {
        return None;
    }
    let d = div.degree();
    if f.degree() < d {
        return None;
    }
    let mut rem = f.0.clone();
    let n = f.degree();
    let mut quot = vec![BigInt::zero(); n - d + 1];
    for k in (d..=n).rev() {
        let q = rem[k].clone();
        if !q.is_zero() {
            for j in 0..=d {
                rem[k - d + j] -= &div.0[j] * &q;
            }
        }
        quot[k - d] = q;
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(ZPoly::trim(quot))
    } else {
        None
    }
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut combo: Vec<usize> = Vec::with_capacity(k);
    fn rec(items: &[usize], k: usize, start: usize, combo: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if combo.len() == k {
            out.push(combo.clone());
            return;
        }
        for i in start..items.len() {
            combo.push(items[i]);
            rec(items, k, i + 1, combo, out);
            combo.pop();
        }
    }
    rec(items, k, 0, &mut combo, &mut out);
    out
}

/// Yun's squarefree decomposition: returns (squarefree part, multiplicity)
/// pairs whose powers multiply to the monic normalization of `p`.
pub fn squarefree_decomposition(p: &UniPoly) -> Result<Vec<(UniPoly, usize)>, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = p.monic();
    if f.is_constant() {
        return Ok(vec![]);
    }
    let df = f.derivative();
    let a = f.gcd(&df)?;
    let mut b = f.exact_div(&a);
    let mut c = df.exact_div(&a);
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut mult = 1usize;
    while !b.is_constant() {
        let g = b.gcd(&d)?;
        if g.degree().unwrap_or(0) > 0 {
            out.push((g.monic(), mult));
        }
        b = b.exact_div(&g);
        c = d.exact_div(&g);
        d = &c - &b.derivative();
        mult += 1;
    }
    Ok(out)
}

/// Factors a nonzero polynomial of degree >= 1 into monic Q-irreducible
/// factors with multiplicities, sorted by degree then by coefficient
/// sequence from the leading term down. The product of the factor powers
/// times a rational constant reproduces the input.
pub fn factor_over_q(p: &UniPoly) -> Result<Vec<(UniPoly, usize)>, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Err(Error::ConstantInput);
    }
    let mut out: Vec<(UniPoly, usize)> = Vec::new();
    for (part, mult) in squarefree_decomposition(p)? {
        let (prim, _) = part.to_primitive_integers();
        let g = ZPoly::trim(prim);
        for irr in factor_squarefree_z(&g) {
            out.push((irr, mult));
        }
    }
    out.sort_by(|(a, ma), (b, mb)| {
        let ka = (a.degree(), coeff_key(a), *ma);
        let kb = (b.degree(), coeff_key(b), *mb);
        ka.cmp(&kb)
    });
    Ok(out)
}

fn coeff_key(p: &UniPoly) -> Vec<Rational> {
    p.coeffs().iter().rev().cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational::int;

    fn check_recombine(p: &UniPoly, factors: &[(UniPoly, usize)]) {
        let mut prod = UniPoly::one();
        for (f, m) in factors {
            prod = &prod * &f.pow(*m);
        }
        // product matches up to the leading constant
        let scaled = prod.scale(p.leading_coeff().unwrap());
        assert_eq!(scaled, *p, "recombination mismatch for {p}");
    }

    #[test]
    fn cyclotomic_splitting() {
        let p = UniPoly::from_ints(&[-1, 0, 0, 0, 1]); // U^4 - 1
        let fs = factor_over_q(&p).unwrap();
        assert_eq!(
            fs,
            vec![
                (UniPoly::from_ints(&[-1, 1]), 1),
                (UniPoly::from_ints(&[1, 1]), 1),
                (UniPoly::from_ints(&[1, 0, 1]), 1),
            ]
        );
        check_recombine(&p, &fs);
    }

    #[test]
    fn sqrt2_irreducible() {
        let p = UniPoly::from_ints(&[-2, 0, 1]);
        let fs = factor_over_q(&p).unwrap();
        assert_eq!(fs, vec![(p.clone(), 1)]);
    }

    #[test]
    fn two_circles_eliminant() {
        // U^4 - 10U^2 + 9 = (U-1)(U+1)(U-3)(U+3); verified by expanding
        // (U^2-1)(U^2-9) = U^4 - 10U^2 + 9
        let a = UniPoly::from_ints(&[-1, 0, 1]);
        let b = UniPoly::from_ints(&[-9, 0, 1]);
        assert_eq!(&a * &b, UniPoly::from_ints(&[9, 0, -10, 0, 1]));
        let p = UniPoly::from_ints(&[9, 0, -10, 0, 1]);
        let fs = factor_over_q(&p).unwrap();
        assert_eq!(
            fs,
            vec![
                (UniPoly::from_ints(&[-3, 1]), 1),
                (UniPoly::from_ints(&[-1, 1]), 1),
                (UniPoly::from_ints(&[1, 1]), 1),
                (UniPoly::from_ints(&[3, 1]), 1),
            ]
        );
        check_recombine(&p, &fs);
    }

    #[test]
    fn multiplicities() {
        // (U-1)^2 (U^2+1)
        let p = &UniPoly::from_ints(&[1, -2, 1]) * &UniPoly::from_ints(&[1, 0, 1]);
        let fs = factor_over_q(&p).unwrap();
        assert_eq!(
            fs,
            vec![
                (UniPoly::from_ints(&[-1, 1]), 2),
                (UniPoly::from_ints(&[1, 0, 1]), 1),
            ]
        );
        check_recombine(&p, &fs);
    }

    #[test]
    fn non_monic_and_rational_coeffs() {
        // 3U^2 - 3 = 3(U-1)(U+1)
        let p = UniPoly::from_ints(&[-3, 0, 3]);
        let fs = factor_over_q(&p).unwrap();
        assert_eq!(fs.len(), 2);
        check_recombine(&p, &fs);
        // constant input is an error
        assert!(factor_over_q(&UniPoly::constant(int(5))).is_err());
    }

    #[test]
    fn swinnerton_dyer_like() {
        // minimal polynomial of sqrt(2)+sqrt(3): U^4 - 10U^2 + 1, irreducible
        let p = UniPoly::from_ints(&[1, 0, -10, 0, 1]);
        let fs = factor_over_q(&p).unwrap();
        assert_eq!(fs, vec![(p.clone(), 1)]);
    }
}
