//! Per-conductor data for `Q(ζ_n)`: the cyclotomic polynomial, reduced powers
//! of `x`, and the linear data needed to descend into subfields.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use num_traits::{One, Zero};

use super::Rational;

pub(crate) fn euler_phi(n: u32) -> usize {
    let mut result = n as usize;
    for p in prime_factors(n) {
        result = result / p as usize * (p as usize - 1);
    }
    result
}

pub(crate) fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Integer coefficients of `Φ_n`, lowest degree first.
///
/// Obtained by dividing `x^n - 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n > 0);
    let mut memo: HashMap<u32, Vec<i64>> = HashMap::new();
    cyclo_poly_memo(n, &mut memo)
}

fn cyclo_poly_memo(n: u32, memo: &mut HashMap<u32, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    // x^n - 1
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let div = cyclo_poly_memo(d, memo);
            num = exact_monic_division(&num, &div);
        }
    }
    memo.insert(n, num.clone());
    num
}

fn exact_monic_division(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Data for descending from conductor `n` to `n / p` when `p` divides `n`
/// exactly once. The subfield basis `ζ_d^j = x^{pj}` is not a subset of the
/// power basis, so membership is decided by solving a linear system.
pub(crate) struct Descent {
    pub d: u32,
    /// Columns `x^{pj} mod Φ_n`, as dense integer vectors.
    pub cols: Vec<Vec<i64>>,
    /// Row indices whose square submatrix is invertible.
    pub pivots: Vec<usize>,
    /// Inverse of the pivot submatrix, row-major.
    pub inverse: Vec<Vec<Rational>>,
}

pub(crate) struct CycloField {
    pub n: u32,
    pub phi: usize,
    /// `x^j mod Φ_n` for `0 <= j < n`.
    pub powers: Vec<Vec<i64>>,
    descents: RwLock<HashMap<u32, Arc<Descent>>>,
}

impl CycloField {
    fn new(n: u32) -> Self {
        let poly = cyclotomic_polynomial(n);
        let phi = poly.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi.max(1)];
        cur[0] = 1;
        if phi == 0 {
            // unreachable for n >= 1, Φ_1 = x - 1 has degree 1
            unreachable!();
        }
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by x and reduce with x^phi = -(poly[0] + ... + poly[phi-1] x^{phi-1})
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..phi {
                    cur[i] -= top * poly[i];
                }
            }
        }
        CycloField {
            n,
            phi,
            powers,
            descents: RwLock::new(HashMap::new()),
        }
    }

    pub fn descent(&self, p: u32) -> Arc<Descent> {
        if let Some(d) = self.descents.read().unwrap().get(&p) {
            return d.clone();
        }
        let built = Arc::new(self.build_descent(p));
        self.descents
            .write()
            .unwrap()
            .entry(p)
            .or_insert(built)
            .clone()
    }

    fn build_descent(&self, p: u32) -> Descent {
        let d = self.n / p;
        let phi_d = euler_phi(d);
        let cols: Vec<Vec<i64>> = (0..phi_d)
            .map(|j| self.powers[(p as usize * j) % self.n as usize].clone())
            .collect();

        // Independent rows of the phi x phi_d matrix: pivot columns of its transpose.
        let mut rows: Vec<Vec<Rational>> = (0..phi_d)
            .map(|j| cols[j].iter().map(|&v| Rational::from_integer(v.into())).collect())
            .collect();
        let mut pivots = Vec::with_capacity(phi_d);
        let mut r = 0;
        for c in 0..self.phi {
            if r == phi_d {
                break;
            }
            let Some(piv) = (r..phi_d).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, piv);
            let inv = rows[r][c].recip();
            for v in rows[r].iter_mut() {
                *v = &*v * &inv;
            }
            for i in 0..phi_d {
                if i != r && !rows[i][c].is_zero() {
                    let f = rows[i][c].clone();
                    for k in 0..self.phi {
                        let t = &rows[r][k] * &f;
                        rows[i][k] -= t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        assert_eq!(pivots.len(), phi_d, "subfield basis must be independent");

        let sub: Vec<Vec<Rational>> = pivots
            .iter()
            .map(|&row| {
                cols.iter()
                    .map(|col| Rational::from_integer(col[row].into()))
                    .collect()
            })
            .collect();
        let inverse = invert(sub).expect("pivot submatrix is invertible");
        Descent {
            d,
            cols,
            pivots,
            inverse,
        }
    }
}

/// Gauss-Jordan inverse over the rationals.
pub(crate) fn invert(mut m: Vec<Vec<Rational>>) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, piv);
        inv.swap(c, piv);
        let f = m[c][c].recip();
        for k in 0..n {
            m[c][k] = &m[c][k] * &f;
            inv[c][k] = &inv[c][k] * &f;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let g = m[i][c].clone();
                for k in 0..n {
                    let a = &m[c][k] * &g;
                    m[i][k] -= a;
                    let b = &inv[c][k] * &g;
                    inv[i][k] -= b;
                }
            }
        }
    }
    Some(inv)
}

pub(crate) fn field(n: u32) -> Arc<CycloField> {
    static FIELDS: OnceLock<RwLock<HashMap<u32, Arc<CycloField>>>> = OnceLock::new();
    let cache = FIELDS.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(f) = cache.read().unwrap().get(&n) {
        return f.clone();
    }
    let built = Arc::new(CycloField::new(n));
    cache.write().unwrap().entry(n).or_insert(built).clone()
}

pub(crate) fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}
