//! Truncated power series solving the algebraic systems behind the counts.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::{count, Family};

type Monomial = [u32; 3];

/// Power series in `x, y, z` truncated above a total degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriSeries {
    degree: u32,
    coeffs: BTreeMap<Monomial, BigInt>,
}

impl TriSeries {
    pub fn zero(degree: u32) -> Self {
        TriSeries {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    fn monomial(degree: u32, m: Monomial) -> Self {
        let mut s = TriSeries::zero(degree);
        if m.iter().sum::<u32>() <= degree {
            s.coeffs.insert(m, BigInt::one());
        }
        s
    }

    pub fn one(degree: u32) -> Self {
        Self::monomial(degree, [0, 0, 0])
    }

    pub fn x(degree: u32) -> Self {
        Self::monomial(degree, [1, 0, 0])
    }

    pub fn y(degree: u32) -> Self {
        Self::monomial(degree, [0, 1, 0])
    }

    pub fn z(degree: u32) -> Self {
        Self::monomial(degree, [0, 0, 1])
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeff(&self, i: u32, j: u32, m: u32) -> BigInt {
        self.coeffs.get(&[i, j, m]).cloned().unwrap_or_default()
    }

    /// Nonzero coefficients by exponent `[i, j, m]`.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.coeffs {
            *out.coeffs.entry(*m).or_default() += c;
        }
        out.coeffs.retain(|_, c| !c.is_zero());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.coeffs {
            *out.coeffs.entry(*m).or_default() -= c;
        }
        out.coeffs.retain(|_, c| !c.is_zero());
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = TriSeries::zero(self.degree);
        for (a, ca) in &self.coeffs {
            let da: u32 = a.iter().sum();
            for (b, cb) in &other.coeffs {
                if da + b.iter().sum::<u32>() > self.degree {
                    continue;
                }
                let m = [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
                *out.coeffs.entry(m).or_default() += ca * cb;
            }
        }
        out.coeffs.retain(|_, c| !c.is_zero());
        out
    }

    /// `1 / (1 - self)`, for a series without constant term.
    pub fn geometric(&self) -> Self {
        assert!(self.coeff(0, 0, 0).is_zero(), "constant term must vanish");
        let one = TriSeries::one(self.degree);
        let mut g = one.clone();
        for _ in 0..self.degree {
            g = one.add(&self.mul(&g));
        }
        g
    }
}

/// Coefficients `I_{i,j,m}` of the trivariate generating function, for all
/// interval sizes `i + j + m - 1 <= max_size`, with the system solved by
/// fixed-point iteration. Fails if the solution breaks the `x`/`y` symmetry
/// or the relation `(i + j + m - 1) I_{i,j,m} = [x^i y^j z^m] A B`.
pub fn trivariate_coefficients(max_size: usize) -> Result<TriSeries> {
    let d = max_size as u32 + 1;
    let (x, y, z) = (TriSeries::x(d), TriSeries::y(d), TriSeries::z(d));
    let mut a = TriSeries::zero(d);
    let mut b = TriSeries::zero(d);
    loop {
        let ga = a.geometric();
        let gb = b.geometric();
        let na = gb.mul(&gb).mul(&y.add(&z.mul(&a).mul(&ga)));
        let nb = ga.mul(&ga).mul(&x.add(&z.mul(&b).mul(&gb)));
        if na == a && nb == b {
            break;
        }
        a = na;
        b = nb;
    }
    let ga = a.geometric();
    let gb = b.geometric();
    let ab = a.mul(&b);
    let f = x
        .mul(&a)
        .mul(&ga)
        .add(&y.mul(&b).mul(&gb))
        .add(&z.mul(&ab).mul(&ga).mul(&gb))
        .sub(&ab);

    for (&[i, j, m], c) in a.terms() {
        if b.coeff(j, i, m) != *c {
            return Err(Error::OracleDisagreement(format!("A and B are not symmetric at x^{i} y^{j} z^{m}")));
        }
    }
    for i in 0..=d {
        for j in 0..=d - i {
            for m in 0..=d - i - j {
                let lhs = BigInt::from(i + j + m).checked_sub(&BigInt::one()).unwrap() * f.coeff(i, j, m);
                if i + j + m >= 1 && lhs != ab.coeff(i, j, m) {
                    return Err(Error::OracleDisagreement(format!(
                        "F and AB disagree at x^{i} y^{j} z^{m}"
                    )));
                }
            }
        }
    }
    Ok(f)
}

/// Coefficients of the series for modern intervals, up to `z^max_size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModernSeries {
    pub a: Vec<BigUint>,
    pub b: Vec<BigUint>,
    /// `A / (1 - B)`.
    pub c: Vec<BigUint>,
    /// Modern intervals by size, read off as `[z^n] (1 + C)^2 / (n + 1)`.
    pub modern: Vec<BigUint>,
}

fn mul1(p: &[BigUint], q: &[BigUint]) -> Vec<BigUint> {
    let len = p.len();
    let mut out = vec![BigUint::zero(); len];
    for (i, a) in p.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.iter().enumerate().take(len - i) {
            out[i + j] += a * b;
        }
    }
    out
}

fn geometric1(p: &[BigUint]) -> Vec<BigUint> {
    assert!(p[0].is_zero(), "constant term must vanish");
    let mut g = vec![BigUint::zero(); p.len()];
    g[0] = BigUint::one();
    for _ in 1..p.len() {
        let mut next = mul1(p, &g);
        next[0] += 1u8;
        g = next;
    }
    g
}

fn one_plus(p: &[BigUint]) -> Vec<BigUint> {
    let mut out = p.to_vec();
    out[0] += 1u8;
    out
}

fn times_z(p: &[BigUint]) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); p.len()];
    out[1..].clone_from_slice(&p[..p.len() - 1]);
    out
}

/// Solves the system for modern intervals up to `z^max_size` and checks the
/// closed forms for `C` and for the number of modern intervals.
pub fn modern_series_coefficients(max_size: usize) -> Result<ModernSeries> {
    let len = max_size + 1;
    let mut a = vec![BigUint::zero(); len];
    let mut b = vec![BigUint::zero(); len];
    loop {
        let gb = geometric1(&b);
        let c = mul1(&a, &gb);
        let base = times_z(&gb);
        let factor = one_plus(&c);
        let nb = mul1(&base, &factor);
        let na = mul1(&nb, &factor);
        if na == a && nb == b {
            break;
        }
        a = na;
        b = nb;
    }
    let c = mul1(&a, &geometric1(&b));
    let sq = {
        let p = one_plus(&c);
        mul1(&p, &p)
    };
    let mut modern = Vec::with_capacity(len);
    for (n, s) in sq.iter().enumerate() {
        let q = s / BigUint::from(n + 1);
        if &q * BigUint::from(n + 1) != *s {
            return Err(Error::OracleDisagreement(format!("(1 + C)^2 not divisible at z^{n}")));
        }
        modern.push(q);
    }
    for n in 1..len {
        let closed = (BigUint::one() << (n - 1)) * super::binomial(2 * n, n) / BigUint::from(n + 1);
        if c[n] != closed {
            return Err(Error::OracleDisagreement(format!("[z^{n}] C = {} but closed form gives {closed}", c[n])));
        }
        if modern[n] != count(Family::Modern, n)? {
            return Err(Error::OracleDisagreement(format!("modern count mismatch at size {n}")));
        }
    }
    Ok(ModernSeries { a, b, c, modern })
}
