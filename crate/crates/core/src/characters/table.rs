use std::cmp::Ordering;

use serde::Serialize;

use super::modp::{is_prime, Fp};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::Subgroup;

/// Irreducible characters of a finite group, one row per irreducible and one
/// column per conjugacy class (in the group's class order).
///
/// Rows are sorted by degree, then lexicographically by value with each
/// value keyed by (conductor ascending, coefficients descending). The trivial
/// character is always row 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterTable {
    order: usize,
    class_sizes: Vec<usize>,
    element_orders: Vec<u32>,
    rows: Vec<Vec<Cyclotomic>>,
}

impl CharacterTable {
    /// Exact table: the abelian case directly, otherwise by simultaneous
    /// diagonalization of the class matrices over a prime field and a lift
    /// to cyclotomic integers. The result is checked against the
    /// orthogonality relations before it is returned.
    pub fn compute(h: &Subgroup) -> Result<Self> {
        let rows = if h.is_abelian() {
            abelian_rows(h)
        } else {
            dixon_rows(h)?
        };
        Self::from_rows(h, rows)
    }

    /// Table from the modular algorithm even for abelian groups.
    pub fn compute_modular(h: &Subgroup) -> Result<Self> {
        Self::from_rows(h, dixon_rows(h)?)
    }

    /// Sort and validate a candidate set of irreducible rows.
    pub fn from_rows(h: &Subgroup, mut rows: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        let r = h.num_classes();
        if rows.len() != r || rows.iter().any(|row| row.len() != r) {
            return Err(Error::Modular(format!(
                "expected a {r}x{r} table, got {} rows",
                rows.len()
            )));
        }
        rows.sort_by(|a, b| compare_rows(a, b));
        let table = CharacterTable {
            order: h.order(),
            class_sizes: h.class_sizes(),
            element_orders: (0..r).map(|c| h.class_element_order(c)).collect(),
            rows,
        };
        table.check_orthogonality()?;
        Ok(table)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn num_irreducibles(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Cyclotomic>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.rows[i]
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.element_orders
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.rows
            .iter()
            .map(|row| row[0].as_integer().expect("degrees are integers"))
            .collect()
    }

    fn weighted_inner(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
        let sum: Cyclotomic = a
            .iter()
            .zip(b)
            .zip(&self.class_sizes)
            .map(|((x, y), &s)| (x * &y.conj()).mul_int(s as i64))
            .sum();
        sum.div_int(self.order as i64)
    }

    /// Row orthonormality, column orthogonality and `Σ χ(1)² = |H|`, exactly.
    pub fn check_orthogonality(&self) -> Result<()> {
        let r = self.rows.len();
        let mut deg_sq = 0i64;
        for row in &self.rows {
            let d = row[0]
                .as_integer()
                .filter(|&d| d > 0)
                .ok_or_else(|| Error::Modular(format!("bad degree {}", row[0])))?;
            deg_sq += d * d;
        }
        if deg_sq != self.order as i64 {
            return Err(Error::Modular(format!(
                "sum of squared degrees {deg_sq} differs from the group order {}",
                self.order
            )));
        }
        for i in 0..r {
            for j in i..r {
                let ip = self.weighted_inner(&self.rows[i], &self.rows[j]);
                let expect = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
                if ip != expect {
                    return Err(Error::Modular(format!(
                        "rows {i} and {j} have inner product {ip}"
                    )));
                }
            }
        }
        for c in 0..r {
            for d in c..r {
                let s: Cyclotomic = self
                    .rows
                    .iter()
                    .map(|row| &row[c] * &row[d].conj())
                    .sum();
                let expect = if c == d {
                    Cyclotomic::from_int((self.order / self.class_sizes[c]) as i64)
                } else {
                    Cyclotomic::zero()
                };
                if s != expect {
                    return Err(Error::Modular(format!(
                        "columns {c} and {d} fail orthogonality"
                    )));
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn compare_rows(a: &[Cyclotomic], b: &[Cyclotomic]) -> Ordering {
    let deg = |row: &[Cyclotomic]| row[0].as_integer().unwrap_or(i64::MAX);
    deg(a).cmp(&deg(b)).then_with(|| {
        a.iter()
            .zip(b)
            .map(|(x, y)| x.row_order(y))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

/// Characters of an abelian group, built along the chain
/// `⟨g₁⟩ ⊂ ⟨g₁, g₂⟩ ⊂ …` by choosing all `m`-th roots at each step.
fn abelian_rows(h: &Subgroup) -> Vec<Vec<Cyclotomic>> {
    let g = h.group();
    let e = h.exponent() as u64;
    let n = g.order();
    // index of each ambient element within the current chain member
    let mut members: Vec<usize> = vec![0];
    let mut pos = vec![usize::MAX; n];
    pos[0] = 0;
    // characters as exponent vectors mod e over `members`
    let mut chars: Vec<Vec<u64>> = vec![vec![0]];
    for &x in h.elements() {
        if pos[x] != usize::MAX {
            continue;
        }
        let mut m = 1;
        let mut xm = x;
        while pos[xm] == usize::MAX {
            xm = g.mul(xm, x);
            m += 1;
        }
        let base = members.len();
        let mut next_members = members.clone();
        let mut xk = x;
        for _ in 1..m {
            for &y in &members {
                let z = g.mul(y, xk);
                pos[z] = next_members.len();
                next_members.push(z);
            }
            xk = g.mul(xk, x);
        }
        let mut next_chars = Vec::with_capacity(chars.len() * m as usize);
        for chi in &chars {
            let c0 = chi[pos[xm]];
            debug_assert_eq!(c0 % m, 0);
            for j in 0..m {
                let c = (c0 / m + j * (e / m)) % e;
                let mut vals = Vec::with_capacity(next_members.len());
                for k in 0..m {
                    for idx in 0..base {
                        vals.push((chi[idx] + k * c) % e);
                    }
                }
                next_chars.push(vals);
            }
        }
        members = next_members;
        chars = next_chars;
    }
    chars
        .iter()
        .map(|chi| {
            (0..h.num_classes())
                .map(|cl| {
                    let x = h.class_rep(cl);
                    Cyclotomic::root_of_unity(e as u32, chi[pos[x]] as i64)
                })
                .collect()
        })
        .collect()
}

/// Smallest prime `p ≡ 1 (mod e)` with `p > 2√|H|`.
pub(crate) fn dixon_prime(exponent: u64, order: u64) -> u64 {
    let mut p = 1 + exponent;
    loop {
        if p * p > 4 * order && is_prime(p) {
            return p;
        }
        p += exponent;
    }
}

/// Rows of the character table by the modular eigenspace method, unsorted.
pub fn dixon_rows(h: &Subgroup) -> Result<Vec<Vec<Cyclotomic>>> {
    let r = h.num_classes();
    let order = h.order();
    if r == 1 {
        return Ok(vec![vec![Cyclotomic::one()]]);
    }
    let g = h.group();
    let e = h.exponent() as u64;
    let f = Fp::new(dixon_prime(e, order as u64));

    // a[j][i][k] = #{x ∈ K_j : x⁻¹ g_k ∈ K_i}, so that ω_j ω_i = Σ_k a_jik ω_k
    let mut coeff = vec![0u64; r * r * r];
    for k in 0..r {
        let gk = h.class_rep(k);
        for &x in h.elements() {
            let j = h.class_of(x).unwrap();
            let i = h.class_of(g.mul(g.inv(x), gk)).unwrap();
            coeff[(j * r + i) * r + k] += 1;
        }
    }
    let apply = |j: usize, v: &[u64]| -> Vec<u64> {
        (0..r)
            .map(|i| {
                let row = &coeff[(j * r + i) * r..(j * r + i + 1) * r];
                row.iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &x)| f.add(acc, f.mul(a % f.p, x)))
            })
            .collect()
    };

    // each space: basis rows in reduced echelon form, with pivots
    let mut identity: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let piv = f.rref(&mut identity);
    let mut spaces = vec![(identity, piv)];
    for j in 1..r {
        if spaces.iter().all(|(b, _)| b.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for (basis, pivots) in spaces {
            let m = basis.len();
            if m == 1 {
                next.push((basis, pivots));
                continue;
            }
            let images: Vec<Vec<u64>> = basis.iter().map(|w| apply(j, w)).collect();
            // restricted matrix, columns indexed by basis vectors
            let a: Vec<Vec<u64>> = (0..m)
                .map(|row| (0..m).map(|col| images[col][pivots[row]]).collect())
                .collect();
            let roots = f.roots(&f.charpoly(&a));
            let mut found = 0;
            for lambda in roots {
                let shifted: Vec<Vec<u64>> = (0..m)
                    .map(|row| {
                        (0..m)
                            .map(|col| {
                                if row == col {
                                    f.sub(a[row][col], lambda)
                                } else {
                                    a[row][col]
                                }
                            })
                            .collect()
                    })
                    .collect();
                let ker = f.kernel(&shifted);
                if ker.is_empty() {
                    continue;
                }
                let mut vecs: Vec<Vec<u64>> = ker
                    .iter()
                    .map(|c| {
                        let mut v = vec![0; r];
                        for (coef, w) in c.iter().zip(&basis) {
                            if *coef != 0 {
                                for (x, &y) in v.iter_mut().zip(w) {
                                    *x = f.add(*x, f.mul(*coef, y));
                                }
                            }
                        }
                        v
                    })
                    .collect();
                let p = f.rref(&mut vecs);
                found += vecs.len();
                next.push((vecs, p));
            }
            if found != m {
                return Err(Error::Modular(format!(
                    "class matrix {j} is not diagonalizable mod {}",
                    f.p
                )));
            }
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(Error::Modular("eigenspaces did not split into lines".into()));
    }

    let sizes = h.class_sizes();
    let inv_class: Vec<usize> = (0..r).map(|c| h.inverse_class(c)).collect();
    let root = f.primitive_root();
    let z = f.pow(root, (f.p - 1) / e);
    let mut rows = Vec::with_capacity(r);
    for (mut basis, _) in spaces {
        let mut w = basis.pop().unwrap();
        if w[0] == 0 {
            return Err(Error::Modular("central character vanishes at the identity".into()));
        }
        let s = f.inv(w[0]);
        for x in w.iter_mut() {
            *x = f.mul(*x, s);
        }
        // χ(1)² = |H| / Σ_i ω_i ω_{i*} / |K_i|
        let mut denom = 0;
        for i in 0..r {
            let t = f.mul(f.mul(w[i], w[inv_class[i]]), f.inv(sizes[i] as u64 % f.p));
            denom = f.add(denom, t);
        }
        if denom == 0 {
            return Err(Error::Modular("degenerate central character".into()));
        }
        let d_sq = f.mul(order as u64 % f.p, f.inv(denom));
        let d = (1..=order as u64)
            .take_while(|d| d * d <= order as u64)
            .find(|d| f.mul(*d, *d) == d_sq)
            .ok_or_else(|| Error::Modular("no integral degree".into()))?;
        let chi: Vec<u64> = (0..r)
            .map(|i| f.mul(f.mul(w[i], d), f.inv(sizes[i] as u64 % f.p)))
            .collect();

        let mut row = Vec::with_capacity(r);
        for i in 0..r {
            let o = h.class_element_order(i) as u64;
            let zo = f.pow(z, e / o);
            let inv_o = f.inv(o % f.p);
            let powers: Vec<u64> = (0..o).map(|l| chi[h.power_class(i, l as i64)]).collect();
            let mut terms = Vec::new();
            let mut total = 0;
            for jj in 0..o {
                let mut m = 0;
                for (l, &v) in powers.iter().enumerate() {
                    let tw = f.pow(zo, (o - (jj * l as u64) % o) % o);
                    m = f.add(m, f.mul(v, tw));
                }
                let m = f.mul(m, inv_o);
                if m > d {
                    return Err(Error::Modular(format!(
                        "eigenvalue multiplicity {m} exceeds degree {d}"
                    )));
                }
                total += m;
                if m > 0 {
                    terms.push((jj as i64, crate::cyclo::Rational::from_integer((m as i64).into())));
                }
            }
            if total != d {
                return Err(Error::Modular("eigenvalue multiplicities do not sum to the degree".into()));
            }
            row.push(Cyclotomic::from_exponents(o as u32, terms));
        }
        rows.push(row);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin, GroupContext};

    fn table(name: &str) -> CharacterTable {
        let ctx = GroupContext::new(builtin(name).unwrap());
        ctx.whole().character_table().unwrap().clone()
    }

    #[test]
    fn prime_choice() {
        assert_eq!(dixon_prime(6, 6), 7);
        assert_eq!(dixon_prime(2, 2), 3);
        assert_eq!(dixon_prime(4, 8), 13);
    }

    #[test]
    fn small_tables() {
        assert_eq!(table("S3").degrees(), vec![1, 1, 2]);
        assert_eq!(table("D4").degrees(), vec![1, 1, 1, 1, 2]);
        assert_eq!(table("Q8").degrees(), vec![1, 1, 1, 1, 2]);
        assert_eq!(table("S4").degrees(), vec![1, 1, 2, 3, 3]);
        assert_eq!(table("S5").degrees(), vec![1, 1, 4, 4, 5, 5, 6]);
        assert_eq!(table("Z5").degrees(), vec![1; 5]);
        assert_eq!(table("trivial").degrees(), vec![1]);
    }

    #[test]
    fn trivial_row_first() {
        for name in ["S3", "D4", "Q8", "Z4", "S4", "D5"] {
            let t = table(name);
            assert!(t.row(0).iter().all(Cyclotomic::is_one), "{name}");
        }
    }

    #[test]
    fn modular_agrees_with_abelian_path() {
        for name in ["Z2", "Z3", "Z4", "Z6", "Z8"] {
            let ctx = GroupContext::new(builtin(name).unwrap());
            let w = ctx.whole();
            assert_eq!(
                CharacterTable::compute_modular(w).unwrap(),
                CharacterTable::compute(w).unwrap(),
                "{name}"
            );
        }
    }

    #[test]
    fn z4_has_imaginary_values() {
        let t = table("Z4");
        let i = Cyclotomic::root_of_unity(4, 1);
        assert!(t.rows().iter().any(|row| row.contains(&i)));
    }

    #[test]
    fn d5_irrational_values() {
        let t = table("D5");
        assert_eq!(t.degrees(), vec![1, 1, 2, 2]);
        let golden = "E(5)+E(5)^4".parse::<Cyclotomic>().unwrap();
        assert!(t.row(2).contains(&golden) || t.row(3).contains(&golden));
    }
}
