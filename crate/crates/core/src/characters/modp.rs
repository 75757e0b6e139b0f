//! Arithmetic and linear algebra over a prime field `F_p`.

#[derive(Clone, Copy, Debug)]
pub(crate) struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        Fp { p }
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }


    /// A generator of the multiplicative group.
    pub fn primitive_root(self) -> u64 {
        let n = self.p - 1;
        let factors = prime_divisors(n);
        (2..self.p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, n / q) != 1))
            .unwrap_or(1)
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(self, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            if r == rows.len() {
                break;
            }
            let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, pr);
            let inv = self.inv(rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row[c] != 0 {
                    let f = row[c];
                    for (x, &y) in row.iter_mut().zip(&pivot_row) {
                        *x = self.sub(*x, self.mul(f, y));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        pivots
    }

    /// Basis of the right kernel `{x : A x = 0}` of a square matrix.
    pub fn kernel(self, a: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let n = a.first().map_or(0, Vec::len);
        let mut rows = a.to_vec();
        let pivots = self.rref(&mut rows);
        let mut basis = Vec::new();
        for free in (0..n).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0; n];
            v[free] = 1;
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = self.neg(row[free]);
            }
            basis.push(v);
        }
        basis
    }

    /// Characteristic polynomial `det(xI − A)`, coefficients from the
    /// constant term up, via reduction to upper Hessenberg form.
    pub fn charpoly(self, a: &[Vec<u64>]) -> Vec<u64> {
        let n = a.len();
        let mut h = a.to_vec();
        for k in 0..n.saturating_sub(2) {
            let Some(piv) = (k + 1..n).find(|&i| h[i][k] != 0) else {
                continue;
            };
            if piv != k + 1 {
                h.swap(piv, k + 1);
                for row in h.iter_mut() {
                    row.swap(piv, k + 1);
                }
            }
            let inv = self.inv(h[k + 1][k]);
            for j in k + 2..n {
                if h[j][k] == 0 {
                    continue;
                }
                let f = self.mul(h[j][k], inv);
                for c in 0..n {
                    let t = self.mul(f, h[k + 1][c]);
                    h[j][c] = self.sub(h[j][c], t);
                }
                for row in h.iter_mut() {
                    let t = self.mul(f, row[j]);
                    row[k + 1] = self.add(row[k + 1], t);
                }
            }
        }
        // p_k = (x − h_kk) p_{k−1} − Σ_{i<k} h_ik (Π_{j=i+1..k} h_{j,j−1}) p_{i−1}
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 1..=n {
            let prev = &polys[k - 1];
            let mut next = vec![0; k + 1];
            for (d, &c) in prev.iter().enumerate() {
                next[d + 1] = self.add(next[d + 1], c);
                next[d] = self.sub(next[d], self.mul(h[k - 1][k - 1], c));
            }
            let mut prod = 1;
            for i in (1..k).rev() {
                prod = self.mul(prod, h[i][i - 1]);
                if prod == 0 {
                    break;
                }
                let coef = self.mul(h[i - 1][k - 1], prod);
                if coef == 0 {
                    continue;
                }
                for (d, &c) in polys[i - 1].iter().enumerate() {
                    next[d] = self.sub(next[d], self.mul(coef, c));
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    pub fn eval(self, poly: &[u64], x: u64) -> u64 {
        poly.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// Roots in `F_p`, without multiplicity, by exhaustive search.
    pub fn roots(self, poly: &[u64]) -> Vec<u64> {
        (0..self.p).filter(|&x| self.eval(poly, x) == 0).collect()
    }
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn det_naive(f: Fp, a: &[Vec<u64>]) -> u64 {
        let n = a.len();
        if n == 0 {
            return 1;
        }
        let mut total = 0;
        for c in 0..n {
            let minor: Vec<Vec<u64>> = a[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, &v)| v).collect())
                .collect();
            let term = f.mul(a[0][c], det_naive(f, &minor));
            total = if c % 2 == 0 { f.add(total, term) } else { f.sub(total, term) };
        }
        total
    }

    #[test]
    fn charpoly_matches_determinant() {
        let f = Fp::new(101);
        let a = vec![
            vec![3, 0, 7, 1],
            vec![0, 0, 5, 2],
            vec![9, 4, 1, 0],
            vec![2, 8, 0, 6],
        ];
        let cp = f.charpoly(&a);
        assert_eq!(cp.len(), 5);
        assert_eq!(cp[4], 1);
        for x in [0u64, 1, 5, 17, 100] {
            let m: Vec<Vec<u64>> = (0..4)
                .map(|i| {
                    (0..4)
                        .map(|j| {
                            let d = if i == j { x } else { 0 };
                            f.sub(d, a[i][j])
                        })
                        .collect()
                })
                .collect();
            assert_eq!(f.eval(&cp, x), det_naive(f, &m));
        }
    }

    #[test]
    fn kernel_and_roots() {
        let f = Fp::new(13);
        let a = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        let k = f.kernel(&a);
        assert_eq!(k.len(), 1);
        for row in &a {
            let s = row.iter().zip(&k[0]).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)));
            assert_eq!(s, 0);
        }
        // (x-2)(x-5)
        assert_eq!(f.roots(&[10, f.neg(7), 1]), vec![2, 5]);
        assert_eq!(f.primitive_root(), 2);
        assert!(is_prime(13) && !is_prime(91));
    }
}
