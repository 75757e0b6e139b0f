use std::sync::Arc;

use super::lambda::{complete_from_power_sums, elementary_from_power_sums};
use super::ClassFunction;
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{generated_subgroup, Subgroup};

/// Character of `Z` on `V^⟨A⟩` by averaging over `⟨A⟩`:
/// `χ(z) = (1/|⟨A⟩|) Σ_{a ∈ ⟨A⟩} χ_V(z a)`. `Z` must centralize `A`.
pub fn fixed_subspace_character(
    chi_v: &ClassFunction,
    a: &[usize],
    z: &Arc<Subgroup>,
) -> Result<ClassFunction> {
    let g = chi_v.group().group();
    if !Arc::ptr_eq(g, z.group()) {
        return Err(Error::GroupMismatch);
    }
    for &x in z.elements() {
        if let Some(&y) = a.iter().find(|&&y| !g.commute(x, y)) {
            return Err(Error::Contract(format!(
                "element {x} does not centralize {y}"
            )));
        }
    }
    let gen = generated_subgroup(g, a);
    let n = gen.len() as i64;
    let mut values = Vec::with_capacity(z.num_classes());
    for c in 0..z.num_classes() {
        let x = z.class_rep(c);
        let mut s = Cyclotomic::zero();
        for &y in &gen {
            let v = chi_v.value_at(g.mul(x, y)).ok_or_else(|| {
                Error::NotSubgroup("products z·a leave the domain of the character".into())
            })?;
            s += v;
        }
        values.push(s.div_int(n));
    }
    ClassFunction::new(z.clone(), values)
}

/// Graded identity `λ_{−t}((V/V^g)^∨) · Hilb_t(Sym V^∨) = Hilb_t(Sym (V^g)^∨)`
/// in `R(Z)[t]` modulo `t^{degree+1}`, checked at every class of `Z ⊆ C(g)`.
pub fn molien_check(chi_v: &ClassFunction, g: usize, z: &Arc<Subgroup>, degree: usize) -> Result<bool> {
    let fixed = fixed_subspace_character(chi_v, &[g], z)?;
    let v_z = chi_v.restrict(z)?;
    let quotient = &v_z - &fixed;
    quotient.ensure_honest("V/V^g")?;
    for c in 0..z.num_classes() {
        let dual_sums = |f: &ClassFunction| -> Vec<Cyclotomic> {
            f.power_sums(c, degree).iter().map(Cyclotomic::conj).collect()
        };
        let lam: Vec<Cyclotomic> = elementary_from_power_sums(&dual_sums(&quotient), degree)
            .into_iter()
            .enumerate()
            .map(|(i, e)| if i % 2 == 0 { e } else { -e })
            .collect();
        let hv = complete_from_power_sums(&dual_sums(&v_z), degree);
        let hf = complete_from_power_sums(&dual_sums(&fixed), degree);
        for n in 0..=degree {
            let lhs: Cyclotomic = (0..=n).map(|i| &lam[i] * &hv[n - i]).sum();
            if lhs != hf[n] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
