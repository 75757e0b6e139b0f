//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! A [`Cyclotomic`] is stored in the power basis `1, ζ_n, ..., ζ_n^{φ(n)-1}`
//! of `Q[x]/(Φ_n)`, with the conductor `n` reduced to its minimum after every
//! operation. Conductors are never `2 mod 4` (since `Q(ζ_{2m}) = Q(ζ_m)` for odd
//! `m`), so two values are equal exactly when their stored forms are.

mod field;
mod parse;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use field::cyclotomic_polynomial;
use field::{euler_phi, field, lcm, prime_factors};

pub type Rational = num_rational::BigRational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    pub fn fraction(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(num.into(), den.into()))
    }

    /// `ζ_n^k`, written `E(n)^k`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n > 0, "root of unity of order zero");
        Self::from_exponents(n, [(k, Rational::one())])
    }

    /// `Σ c · ζ_n^e` over the given `(e, c)` terms.
    pub fn from_exponents<I>(n: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        assert!(n > 0);
        let (n, terms): (u32, Vec<(i64, Rational)>) = if n % 4 == 2 {
            // ζ_{2m}^j = (-1)^j ζ_m^{j(m+1)/2}
            let m = n / 2;
            let half = (m as i64 + 1) / 2;
            let mapped = terms
                .into_iter()
                .map(|(e, c)| {
                    let e = e.rem_euclid(n as i64);
                    let c = if e % 2 == 1 { -c } else { c };
                    (e * half, c)
                })
                .collect();
            (m, mapped)
        } else {
            (n, terms.into_iter().collect())
        };
        let f = field(n);
        let mut coeffs = vec![Rational::zero(); f.phi];
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            let e = e.rem_euclid(n as i64) as usize;
            accumulate(&mut coeffs, &f.powers[e], &c);
        }
        Self::canonical(n, coeffs)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Power-basis coefficients in `Q(ζ_conductor)`.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        (self.conductor == 1).then(|| &self.coeffs[0])
    }

    /// The value as a machine integer, if it is a rational integer.
    pub fn as_integer(&self) -> Option<i64> {
        let q = self.as_rational()?;
        if q.is_integer() {
            q.to_integer().to_i64()
        } else {
            None
        }
    }

    pub fn as_big_integer(&self) -> Option<BigInt> {
        let q = self.as_rational()?;
        q.is_integer().then(|| q.to_integer())
    }

    /// Coefficients of `self` viewed in `Q(ζ_big)`, where `conductor | big`.
    fn lift(&self, big: u32) -> Vec<Rational> {
        if big == self.conductor {
            return self.coeffs.clone();
        }
        debug_assert_eq!(big % self.conductor, 0);
        let f = field(big);
        let step = (big / self.conductor) as usize;
        let mut out = vec![Rational::zero(); f.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                accumulate(&mut out, &f.powers[(i * step) % big as usize], c);
            }
        }
        out
    }

    /// Image under `ζ_n ↦ ζ_n^k`. `k = -1` is complex conjugation.
    pub fn galois_twist(&self, k: i64) -> Result<Self> {
        let n = self.conductor;
        if n == 1 {
            return Ok(self.clone());
        }
        if (k.rem_euclid(n as i64) as u32).gcd(&n) != 1 {
            return Err(Error::NotCoprime { k, conductor: n });
        }
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64 * k, c.clone()));
        Ok(Self::from_exponents(n, terms))
    }

    pub fn conj(&self) -> Self {
        self.galois_twist(-1).expect("-1 is a unit modulo every conductor")
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn div_int(&self, d: i64) -> Self {
        assert!(d != 0, "division by zero");
        self.scale(&Rational::new(BigInt::one(), BigInt::from(d)))
    }

    pub fn mul_int(&self, m: i64) -> Self {
        self.scale(&Rational::from_integer(BigInt::from(m)))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(q.recip()));
        }
        // Solve (multiplication-by-self) · y = 1 in the power basis.
        let n = self.conductor;
        let f = field(n);
        let phi = f.phi;
        let mut columns = Vec::with_capacity(phi);
        for j in 0..phi {
            let mut col = vec![Rational::zero(); phi];
            for (i, c) in self.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    accumulate(&mut col, &f.powers[(i + j) % n as usize], c);
                }
            }
            columns.push(col);
        }
        let matrix: Vec<Vec<Rational>> = (0..phi)
            .map(|r| (0..phi).map(|c| columns[c][r].clone()).collect())
            .collect();
        let inverse = field::invert(matrix).ok_or(Error::DivisionByZero)?;
        let coeffs = inverse.into_iter().map(|row| row[0].clone()).collect();
        Ok(Self::canonical(n, coeffs))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Reduce to the minimal conductor.
    fn canonical(mut n: u32, mut coeffs: Vec<Rational>) -> Self {
        'outer: loop {
            if n == 1 || coeffs[1..].iter().all(|c| c.is_zero()) {
                coeffs.truncate(1);
                return Cyclotomic { conductor: 1, coeffs };
            }
            for p in prime_factors(n) {
                if let Some((d, c)) = descend(n, &coeffs, p) {
                    if d % 4 == 2 {
                        let terms = c.into_iter().enumerate().map(|(j, q)| (j as i64, q));
                        let v = Self::from_exponents(d, terms);
                        n = v.conductor;
                        coeffs = v.coeffs;
                    } else {
                        n = d;
                        coeffs = c;
                    }
                    continue 'outer;
                }
            }
            return Cyclotomic {
                conductor: n,
                coeffs,
            };
        }
    }

    /// Order key used for sorting character table rows: rationals first,
    /// then by conductor, then by coefficients in decreasing order.
    pub(crate) fn row_order(&self, other: &Self) -> Ordering {
        self.conductor
            .cmp(&other.conductor)
            .then_with(|| other.coeffs.cmp(&self.coeffs))
    }
}

/// Try to express `coeffs ∈ Q(ζ_n)` in `Q(ζ_{n/p})`.
fn descend(n: u32, coeffs: &[Rational], p: u32) -> Option<(u32, Vec<Rational>)> {
    let d = n / p;
    if d.is_multiple_of(p) {
        // ζ_d = ζ_n^p and the subfield basis is {x^{pj}} ⊂ power basis.
        if coeffs
            .iter()
            .enumerate()
            .any(|(i, c)| i % p as usize != 0 && !c.is_zero())
        {
            return None;
        }
        let phi_d = euler_phi(d);
        return Some((d, (0..phi_d).map(|j| coeffs[j * p as usize].clone()).collect()));
    }
    let f = field(n);
    let desc = f.descent(p);
    let rhs: Vec<&Rational> = desc.pivots.iter().map(|&r| &coeffs[r]).collect();
    let sol: Vec<Rational> = desc
        .inverse
        .iter()
        .map(|row| {
            row.iter()
                .zip(&rhs)
                .filter(|(a, _)| !a.is_zero())
                .fold(Rational::zero(), |acc, (a, b)| acc + a * *b)
        })
        .collect();
    let mut check = vec![Rational::zero(); f.phi];
    for (c, col) in sol.iter().zip(&desc.cols) {
        if !c.is_zero() {
            accumulate(&mut check, col, c);
        }
    }
    (check.as_slice() == coeffs).then_some((desc.d, sol))
}

fn accumulate(acc: &mut [Rational], v: &[i64], c: &Rational) {
    for (a, &x) in acc.iter_mut().zip(v) {
        match x {
            0 => {}
            1 => *a += c,
            -1 => *a -= c,
            _ => *a += c * Rational::from_integer(BigInt::from(x)),
        }
    }
}

fn add_impl(a: &Cyclotomic, b: &Cyclotomic, negate_b: bool) -> Cyclotomic {
    if a.conductor == b.conductor && a.conductor == 1 {
        let v = if negate_b {
            &a.coeffs[0] - &b.coeffs[0]
        } else {
            &a.coeffs[0] + &b.coeffs[0]
        };
        return Cyclotomic::from_rational(v);
    }
    let n = lcm(a.conductor, b.conductor);
    let mut x = a.lift(n);
    let y = b.lift(n);
    for (u, v) in x.iter_mut().zip(y) {
        if negate_b {
            *u -= v;
        } else {
            *u += v;
        }
    }
    Cyclotomic::canonical(n, x)
}

fn mul_impl(a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
    if let Some(q) = a.as_rational() {
        return b.scale(q);
    }
    if let Some(q) = b.as_rational() {
        return a.scale(q);
    }
    let n = lcm(a.conductor, b.conductor);
    let x = a.lift(n);
    let y = b.lift(n);
    let mut by_exponent = vec![Rational::zero(); n as usize];
    for (i, u) in x.iter().enumerate() {
        if u.is_zero() {
            continue;
        }
        for (j, v) in y.iter().enumerate() {
            if !v.is_zero() {
                by_exponent[(i + j) % n as usize] += u * v;
            }
        }
    }
    let f = field(n);
    let mut out = vec![Rational::zero(); f.phi];
    for (e, c) in by_exponent.iter().enumerate() {
        if !c.is_zero() {
            accumulate(&mut out, &f.powers[e], c);
        }
    }
    Cyclotomic::canonical(n, out)
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A total order on canonical forms (conductor, then coefficients). It is
/// not compatible with the field operations; it only makes sorting
/// deterministic.
impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.conductor
            .cmp(&other.conductor)
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                $body(self, rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                $body(&self, &rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                $body(&self, rhs)
            }
        }
        impl $tr<Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_impl(a, b, false));
forward_binop!(Sub, sub, |a, b| add_impl(a, b, true));
forward_binop!(Mul, mul, mul_impl);
forward_binop!(Div, div, |a: &Cyclotomic, b: &Cyclotomic| a
    .checked_div(b)
    .expect("cyclotomic division by zero"));

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = add_impl(self, rhs, false);
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        *self = add_impl(self, rhs, true);
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = mul_impl(self, rhs);
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| acc + x)
    }
}

impl<'a> std::iter::Sum<&'a Cyclotomic> for Cyclotomic {
    fn sum<I: Iterator<Item = &'a Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| acc + x)
    }
}

fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = if i == 0 {
                fmt_rational(c)
            } else {
                let mono = if i == 1 {
                    format!("E({})", self.conductor)
                } else {
                    format!("E({})^{}", self.conductor, i)
                };
                if c.is_one() {
                    mono
                } else if (-c).is_one() {
                    format!("-{mono}")
                } else {
                    format!("{}*{}", fmt_rational(c), mono)
                }
            };
            if !out.is_empty() && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Cyclotomic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse::parse(s)
    }
}

impl serde::Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Cyclotomic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
