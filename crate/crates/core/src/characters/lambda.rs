use super::ClassFunction;
use crate::cyclo::Cyclotomic;
use crate::error::Result;

/// `e_0, …, e_n` from power sums `p_1, …, p_n` by Newton's identities,
/// `i e_i = Σ_{j=1}^{i} (−1)^{j−1} e_{i−j} p_j`.
pub fn elementary_from_power_sums(p: &[Cyclotomic], n: usize) -> Vec<Cyclotomic> {
    let mut e = vec![Cyclotomic::one()];
    for i in 1..=n {
        let mut s = Cyclotomic::zero();
        for j in 1..=i.min(p.len()) {
            let t = &e[i - j] * &p[j - 1];
            if j % 2 == 1 {
                s += &t;
            } else {
                s -= &t;
            }
        }
        e.push(s.div_int(i as i64));
    }
    e
}

/// `h_0, …, h_n` from power sums, `i h_i = Σ_{j=1}^{i} p_j h_{i−j}`.
pub fn complete_from_power_sums(p: &[Cyclotomic], n: usize) -> Vec<Cyclotomic> {
    let mut h = vec![Cyclotomic::one()];
    for i in 1..=n {
        let mut s = Cyclotomic::zero();
        for j in 1..=i.min(p.len()) {
            s += &(&h[i - j] * &p[j - 1]);
        }
        h.push(s.div_int(i as i64));
    }
    h
}

impl ClassFunction {
    /// `ψ^k φ(g) = φ(g^k)`.
    pub fn adams(&self, k: i64) -> ClassFunction {
        let h = self.group.clone();
        let values = (0..h.num_classes())
            .map(|c| self.values[h.power_class(c, k)].clone())
            .collect();
        ClassFunction { group: h, values }
    }

    /// Power sums `φ(g^j)` for `j = 1..=n` at class `c`.
    pub fn power_sums(&self, c: usize, n: usize) -> Vec<Cyclotomic> {
        (1..=n)
            .map(|j| self.values[self.group.power_class(c, j as i64)].clone())
            .collect()
    }

    fn honest_degree(&self, what: &str) -> Result<usize> {
        self.ensure_honest(what)?;
        Ok(self.degree().as_integer().unwrap_or(0) as usize)
    }

    /// `Λ^i` of an honest character; zero above the degree.
    pub fn exterior_power(&self, i: usize) -> Result<ClassFunction> {
        let d = self.honest_degree("exterior power")?;
        if i > d {
            return Ok(ClassFunction::zero(self.group.clone()));
        }
        let values = (0..self.group.num_classes())
            .map(|c| elementary_from_power_sums(&self.power_sums(c, i), i).swap_remove(i))
            .collect();
        Ok(ClassFunction {
            group: self.group.clone(),
            values,
        })
    }

    /// `Sym^i` of an honest character.
    pub fn symmetric_power(&self, i: usize) -> Result<ClassFunction> {
        self.ensure_honest("symmetric power")?;
        let values = (0..self.group.num_classes())
            .map(|c| complete_from_power_sums(&self.power_sums(c, i), i).swap_remove(i))
            .collect();
        Ok(ClassFunction {
            group: self.group.clone(),
            values,
        })
    }

    /// `λ₋₁(φ^∨) = Σ_i (−1)^i Λ^i(φ^∨)` of an honest character, whose value
    /// at `g` is `det(1 − g⁻¹)` on the representation.
    pub fn lambda_minus_one_dual(&self) -> Result<ClassFunction> {
        let d = self.honest_degree("λ₋₁")?;
        let values = (0..self.group.num_classes())
            .map(|c| {
                let p: Vec<Cyclotomic> = self.power_sums(c, d).iter().map(Cyclotomic::conj).collect();
                elementary_from_power_sums(&p, d)
                    .into_iter()
                    .enumerate()
                    .map(|(i, e)| if i % 2 == 0 { e } else { -e })
                    .sum()
            })
            .collect();
        Ok(ClassFunction {
            group: self.group.clone(),
            values,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin, GroupContext};

    #[test]
    fn newton_on_eigenvalues() {
        // eigenvalues 1, -1, i
        let i = Cyclotomic::root_of_unity(4, 1);
        let eig = [Cyclotomic::one(), Cyclotomic::from_int(-1), i.clone()];
        let p: Vec<Cyclotomic> = (1..=4u32)
            .map(|k| eig.iter().map(|x| x.pow(k)).sum())
            .collect();
        let e = elementary_from_power_sums(&p, 4);
        assert_eq!(e[1], i);
        assert_eq!(e[2], Cyclotomic::from_int(-1));
        assert_eq!(e[3], -&i);
        assert!(e[4].is_zero());
        let h = complete_from_power_sums(&p, 2);
        // h_2 = Σ_{a≤b} x_a x_b
        let mut expect = Cyclotomic::zero();
        for a in 0..3 {
            for b in a..3 {
                expect += &(&eig[a] * &eig[b]);
            }
        }
        assert_eq!(h[2], expect);
    }

    #[test]
    fn lambda_of_regular_z2() {
        let ctx = GroupContext::new(builtin("Z2").unwrap());
        let reg = ClassFunction::regular(ctx.whole().clone());
        let lam = reg.lambda_minus_one_dual().unwrap();
        // eigenvalues 1, -1 ⇒ det(1 − g⁻¹) = 0 at both classes
        assert!(lam.is_zero());
        let sign = ClassFunction::from_ints(ctx.whole().clone(), &[1, -1]).unwrap();
        let lam = sign.lambda_minus_one_dual().unwrap();
        assert_eq!(lam, ClassFunction::from_ints(ctx.whole().clone(), &[0, 2]).unwrap());
        assert!(ClassFunction::from_ints(ctx.whole().clone(), &[-1, 1])
            .unwrap()
            .lambda_minus_one_dual()
            .is_err());
    }

    #[test]
    fn exterior_powers_of_s3_standard() {
        let ctx = GroupContext::new(builtin("S3").unwrap());
        let w = ctx.whole();
        let irr = ClassFunction::irreducibles(w).unwrap();
        let std = irr[2].clone();
        assert_eq!(std.exterior_power(2).unwrap(), irr[1]);
        assert_eq!(std.exterior_power(0).unwrap(), irr[0]);
        assert!(std.exterior_power(3).unwrap().is_zero());
        assert_eq!(std.symmetric_power(2).unwrap(), &irr[0] + &irr[2]);
        assert_eq!(std.adams(1), std);
        assert_eq!(std.adams(2), &std * &std - std.exterior_power(2).unwrap().scale(&Cyclotomic::from_int(2)));
    }
}
