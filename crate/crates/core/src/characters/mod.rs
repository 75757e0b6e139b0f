//! Exact class functions on finite groups and their calculus: inner products,
//! induction, restriction along conjugation, Adams and exterior powers,
//! `λ₋₁` classes, fixed-subspace characters and graded Molien checks.

mod fixed;
mod lambda;
mod modp;
pub mod oracle;
mod table;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::Subgroup;

pub use fixed::{fixed_subspace_character, molien_check};
pub use lambda::{complete_from_power_sums, elementary_from_power_sums};
pub use table::CharacterTable;

/// A class function on a (sub)group, one exact value per conjugacy class in
/// the group's class order. Virtual characters and K-theory classes in
/// representation-ring coordinates are both stored this way.
#[derive(Clone)]
pub struct ClassFunction {
    group: Arc<Subgroup>,
    values: Vec<Cyclotomic>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.values == other.values
    }
}

impl Eq for ClassFunction {}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClassFunction(|H|={}, {:?})", self.group.order(), self.values)
    }
}

impl serde::Serialize for ClassFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.values.serialize(s)
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl ClassFunction {
    pub fn new(group: Arc<Subgroup>, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != group.num_classes() {
            return Err(Error::Input(format!(
                "class function needs {} values, got {}",
                group.num_classes(),
                values.len()
            )));
        }
        Ok(ClassFunction { group, values })
    }

    pub fn from_ints(group: Arc<Subgroup>, values: &[i64]) -> Result<Self> {
        Self::new(group, values.iter().map(|&v| Cyclotomic::from_int(v)).collect())
    }

    /// Parse one value per class in the cyclotomic text syntax.
    pub fn parse(group: Arc<Subgroup>, values: &[&str]) -> Result<Self> {
        let vals = values
            .iter()
            .map(|s| s.parse::<Cyclotomic>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, vals)
    }

    /// Evaluate `f` on each class representative.
    pub fn from_fn(group: Arc<Subgroup>, mut f: impl FnMut(usize) -> Cyclotomic) -> Self {
        let values = (0..group.num_classes())
            .map(|c| f(group.class_rep(c)))
            .collect();
        ClassFunction { group, values }
    }

    pub fn zero(group: Arc<Subgroup>) -> Self {
        let values = vec![Cyclotomic::zero(); group.num_classes()];
        ClassFunction { group, values }
    }

    pub fn constant(group: Arc<Subgroup>, v: Cyclotomic) -> Self {
        let values = vec![v; group.num_classes()];
        ClassFunction { group, values }
    }

    pub fn trivial(group: Arc<Subgroup>) -> Self {
        Self::constant(group, Cyclotomic::one())
    }

    pub fn regular(group: Arc<Subgroup>) -> Self {
        let order = group.order() as i64;
        Self::from_fn(group, |g| {
            if g == 0 {
                Cyclotomic::from_int(order)
            } else {
                Cyclotomic::zero()
            }
        })
    }

    /// Irreducible number `i` in character-table order.
    pub fn irreducible(group: &Arc<Subgroup>, i: usize) -> Result<Self> {
        let table = group.character_table()?;
        let row = table
            .rows()
            .get(i)
            .ok_or_else(|| Error::Input(format!("no irreducible with index {i}")))?;
        Ok(ClassFunction {
            group: group.clone(),
            values: row.clone(),
        })
    }

    pub fn irreducibles(group: &Arc<Subgroup>) -> Result<Vec<Self>> {
        let table = group.character_table()?;
        Ok(table
            .rows()
            .iter()
            .map(|row| ClassFunction {
                group: group.clone(),
                values: row.clone(),
            })
            .collect())
    }

    /// `Σ m_i χ_i` over the irreducibles.
    pub fn from_multiplicities(group: &Arc<Subgroup>, mults: &[i64]) -> Result<Self> {
        let table = group.character_table()?;
        if mults.len() != table.num_irreducibles() {
            return Err(Error::Input(format!(
                "expected {} multiplicities, got {}",
                table.num_irreducibles(),
                mults.len()
            )));
        }
        let mut out = Self::zero(group.clone());
        for (m, row) in mults.iter().zip(table.rows()) {
            if *m != 0 {
                for (v, x) in out.values.iter_mut().zip(row) {
                    *v += &x.mul_int(*m);
                }
            }
        }
        Ok(out)
    }

    pub fn group(&self) -> &Arc<Subgroup> {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    /// Value at an element of the ambient group, if it lies in this group.
    pub fn value_at(&self, g: usize) -> Option<&Cyclotomic> {
        self.group.class_of(g).map(|c| &self.values[c])
    }

    /// Value at the identity.
    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_zero)
    }

    pub fn map(&self, f: impl FnMut(&Cyclotomic) -> Cyclotomic) -> Self {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, s: &Cyclotomic) -> Self {
        self.map(|v| v * s)
    }

    /// Complex conjugate, the character of the dual representation.
    pub fn dual(&self) -> Self {
        self.map(Cyclotomic::conj)
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if self.group == other.group {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic) -> Self {
        assert!(
            self.group == other.group,
            "class functions on different groups"
        );
        ClassFunction {
            group: self.group.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    /// `(1/|H|) Σ_h φ(h) · conj(ψ(h))`
    pub fn inner_product(&self, other: &Self) -> Result<Cyclotomic> {
        self.same_group(other)?;
        let sum: Cyclotomic = self
            .values
            .iter()
            .zip(&other.values)
            .enumerate()
            .filter(|(_, (a, b))| !a.is_zero() && !b.is_zero())
            .map(|(c, (a, b))| (a * &b.conj()).mul_int(self.group.class_size(c) as i64))
            .sum();
        Ok(sum.div_int(self.group.order() as i64))
    }

    /// Inner products against every irreducible, in table order.
    pub fn decompose(&self) -> Result<Vec<Cyclotomic>> {
        ClassFunction::irreducibles(&self.group)?
            .iter()
            .map(|chi| self.inner_product(chi))
            .collect()
    }

    /// Integer multiplicities against the irreducibles; an error if some
    /// multiplicity is not a rational integer.
    pub fn multiplicities(&self) -> Result<Vec<i64>> {
        self.decompose()?
            .into_iter()
            .map(|m| {
                m.as_integer().ok_or_else(|| {
                    Error::Contract(format!("non-integral multiplicity {m} in {self}"))
                })
            })
            .collect()
    }

    pub fn is_virtual_character(&self) -> Result<bool> {
        Ok(self.decompose()?.iter().all(|m| m.as_integer().is_some()))
    }

    /// All multiplicities are nonnegative integers.
    pub fn is_honest(&self) -> Result<bool> {
        Ok(self
            .decompose()?
            .iter()
            .all(|m| m.as_integer().is_some_and(|v| v >= 0)))
    }

    pub fn ensure_honest(&self, what: &str) -> Result<()> {
        if self.is_honest()? {
            Ok(())
        } else {
            Err(Error::NotHonest(format!("{what}: {self}")))
        }
    }

    /// Restriction to a subgroup.
    pub fn restrict(&self, target: &Arc<Subgroup>) -> Result<Self> {
        self.restrict_transport(0, target)
    }

    /// Transport along conjugation by `t`, then restrict: the value at `z` is
    /// `φ(t⁻¹ z t)`. Defined when `t⁻¹ · target · t` lies in this group.
    pub fn restrict_transport(&self, t: usize, target: &Arc<Subgroup>) -> Result<Self> {
        let g = self.group.group();
        if !Arc::ptr_eq(g, target.group()) {
            return Err(Error::GroupMismatch);
        }
        let t_inv = g.inv(t);
        let mut values = Vec::with_capacity(target.num_classes());
        for c in 0..target.num_classes() {
            let z = target.class_rep(c);
            let pulled = g.conjugate(t_inv, z);
            let v = self.value_at(pulled).ok_or_else(|| {
                Error::NotSubgroup(format!(
                    "conjugate of element {z} by {t} is outside the source group"
                ))
            })?;
            values.push(v.clone());
        }
        // every element of the target must transport into the source
        for &z in target.elements() {
            if !self.group.contains(g.conjugate(t_inv, z)) {
                return Err(Error::NotSubgroup(format!(
                    "target is not contained in the transported group (element {z})"
                )));
            }
        }
        Ok(ClassFunction {
            group: target.clone(),
            values,
        })
    }

    /// Induction to a supergroup:
    /// `Ind φ(g) = (|C_K(g)| / |H|) Σ_{x ∈ H ∩ [g]_K} φ(x)`.
    pub fn induce(&self, sup: &Arc<Subgroup>) -> Result<Self> {
        if !self.group.is_subgroup_of(sup) {
            return Err(Error::NotSubgroup(
                "induction source is not contained in the target".into(),
            ));
        }
        if self.group == *sup {
            return Ok(ClassFunction {
                group: sup.clone(),
                values: self.values.clone(),
            });
        }
        let mut sums = vec![Cyclotomic::zero(); sup.num_classes()];
        for c in 0..self.group.num_classes() {
            let v = &self.values[c];
            if v.is_zero() {
                continue;
            }
            let k = sup
                .class_of(self.group.class_rep(c))
                .expect("subgroup elements lie in the supergroup");
            sums[k] += &v.mul_int(self.group.class_size(c) as i64);
        }
        let h = self.group.order() as i64;
        let values = sums
            .into_iter()
            .enumerate()
            .map(|(k, s)| {
                if s.is_zero() {
                    s
                } else {
                    s.mul_int(sup.centralizer_order(k) as i64).div_int(h)
                }
            })
            .collect();
        Ok(ClassFunction {
            group: sup.clone(),
            values,
        })
    }
}

macro_rules! class_fn_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<&ClassFunction> for &ClassFunction {
            type Output = ClassFunction;
            fn $method(self, rhs: &ClassFunction) -> ClassFunction {
                self.zip_with(rhs, |a, b| a $op b)
            }
        }
        impl $tr<ClassFunction> for ClassFunction {
            type Output = ClassFunction;
            fn $method(self, rhs: ClassFunction) -> ClassFunction {
                self.zip_with(&rhs, |a, b| a $op b)
            }
        }
        impl $tr<&ClassFunction> for ClassFunction {
            type Output = ClassFunction;
            fn $method(self, rhs: &ClassFunction) -> ClassFunction {
                self.zip_with(rhs, |a, b| a $op b)
            }
        }
    };
}

class_fn_binop!(Add, add, +);
class_fn_binop!(Sub, sub, -);
class_fn_binop!(Mul, mul, *);

impl Neg for &ClassFunction {
    type Output = ClassFunction;
    fn neg(self) -> ClassFunction {
        self.map(|v| -v)
    }
}

impl Neg for ClassFunction {
    type Output = ClassFunction;
    fn neg(self) -> ClassFunction {
        -&self
    }
}
