//! Character tables by brute force: start from characters induced from
//! cyclic subgroups, close up under tensor, symmetric and exterior squares,
//! and peel off irreducibles by Gram–Schmidt against those already found.
//! Slow, but it shares nothing with the modular algorithm.

use std::collections::VecDeque;
use std::sync::Arc;

use super::{ClassFunction, CharacterTable};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{generated_subgroup, Subgroup};

fn norm(chi: &ClassFunction) -> Result<Cyclotomic> {
    chi.inner_product(chi)
}

/// Irreducibles of `h`, sorted in table order.
pub fn tensor_reduce_table(h: &Arc<Subgroup>) -> Result<CharacterTable> {
    let g = h.group().clone();
    let order = h.order() as i64;
    let mut found: Vec<ClassFunction> = Vec::new();
    let mut queue: VecDeque<ClassFunction> = VecDeque::new();
    let mut residuals: Vec<ClassFunction> = Vec::new();

    queue.push_back(ClassFunction::trivial(h.clone()));
    for c in 0..h.num_classes() {
        let x = h.class_rep(c);
        let cyc_elems = generated_subgroup(&g, &[x]);
        let cyc = Arc::new(Subgroup::new(g.clone(), cyc_elems)?);
        let o = g.element_order(x);
        for j in 0..o {
            let lin = ClassFunction::from_fn(cyc.clone(), |y| {
                let l = (0..o).find(|&l| g.pow(x, l as i64) == y).unwrap();
                Cyclotomic::root_of_unity(o, (j * l) as i64)
            });
            queue.push_back(lin.induce(h)?);
        }
    }

    let budget = 64 * h.num_classes() * h.num_classes() + 256;
    let mut steps = 0;
    let total = |found: &[ClassFunction]| -> i64 {
        found
            .iter()
            .map(|f| {
                let d = f.degree().as_integer().unwrap_or(0);
                d * d
            })
            .sum()
    };
    while total(&found) < order {
        steps += 1;
        let Some(cand) = queue.pop_front() else {
            return Err(Error::Modular("candidate pool exhausted".into()));
        };
        if steps > budget {
            return Err(Error::Modular("candidate budget exceeded".into()));
        }
        let mut rest = cand;
        for psi in &found {
            let m = rest.inner_product(psi)?;
            if !m.is_zero() {
                rest = &rest - &psi.scale(&m);
            }
        }
        let n = norm(&rest)?;
        if n.is_zero() {
            continue;
        }
        if n.is_one() {
            let chi = if rest.degree().as_integer().unwrap_or(0) < 0 {
                -rest
            } else {
                rest
            };
            for psi in &found {
                queue.push_back(&chi * psi);
            }
            queue.push_back(&chi * &chi);
            queue.push_back(chi.symmetric_power_virtual(2));
            queue.push_back(chi.exterior_power_virtual(2));
            // earlier residuals may now reduce further
            for r in residuals.drain(..) {
                queue.push_front(r);
            }
            found.push(chi);
            continue;
        }
        for r in &residuals {
            queue.push_back(&rest - r);
        }
        for psi in &found {
            queue.push_back(&rest * psi);
        }
        residuals.push(rest);
    }

    let regular = ClassFunction::regular(h.clone());
    let sum = found
        .iter()
        .fold(ClassFunction::zero(h.clone()), |acc, chi| acc + chi.scale(chi.degree()));
    if sum != regular {
        return Err(Error::Modular("found characters do not sum to the regular character".into()));
    }
    CharacterTable::from_rows(h, found.into_iter().map(|c| c.values).collect())
}

impl ClassFunction {
    /// `Sym²` from `(φ(g)² + φ(g²)) / 2`, without an honesty check.
    fn symmetric_power_virtual(&self, _i: usize) -> ClassFunction {
        let sq = self.adams(2);
        let values = self
            .values
            .iter()
            .zip(&sq.values)
            .map(|(a, b)| (a * a + b).div_int(2))
            .collect();
        ClassFunction {
            group: self.group.clone(),
            values,
        }
    }

    /// `Λ²` from `(φ(g)² − φ(g²)) / 2`.
    fn exterior_power_virtual(&self, _i: usize) -> ClassFunction {
        let sq = self.adams(2);
        let values = self
            .values
            .iter()
            .zip(&sq.values)
            .map(|(a, b)| (a * a - b).div_int(2))
            .collect();
        ClassFunction {
            group: self.group.clone(),
            values,
        }
    }
}
