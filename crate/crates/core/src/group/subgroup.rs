use std::sync::{Arc, OnceLock};

use num_integer::Integer;

use super::{ConjugacyData, FiniteGroup};
use crate::characters::CharacterTable;
use crate::error::{Error, Result};

/// A subgroup of an ambient [`FiniteGroup`], stored as a sorted element
/// subset with its own conjugacy data. The whole group is the improper
/// subgroup. Its character table is computed on first use.
pub struct Subgroup {
    group: Arc<FiniteGroup>,
    elements: Vec<usize>,
    conj: ConjugacyData,
    table: OnceLock<std::result::Result<CharacterTable, String>>,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Subgroup")
            .field("order", &self.elements.len())
            .field("elements", &self.elements)
            .finish()
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
            || (Arc::ptr_eq(&self.group, &other.group) && self.elements == other.elements)
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    pub fn new(group: Arc<FiniteGroup>, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        let n = group.order();
        let mut member = vec![false; n];
        for &x in &elements {
            if x >= n {
                return Err(Error::NotSubgroup(format!("element {x} out of range")));
            }
            member[x] = true;
        }
        if !member[0] {
            return Err(Error::NotSubgroup("missing the identity".into()));
        }
        for &a in &elements {
            for &b in &elements {
                if !member[group.mul(a, b)] {
                    return Err(Error::NotSubgroup(format!(
                        "not closed: {a} * {b} = {}",
                        group.mul(a, b)
                    )));
                }
            }
        }
        Ok(Self::new_unchecked(group, elements))
    }

    pub(crate) fn new_unchecked(group: Arc<FiniteGroup>, elements: Vec<usize>) -> Self {
        let conj = ConjugacyData::compute(&group, &elements, None);
        Subgroup {
            group,
            elements,
            conj,
            table: OnceLock::new(),
        }
    }

    pub fn whole(group: Arc<FiniteGroup>) -> Self {
        let elements = (0..group.order()).collect();
        Self::new_unchecked(group, elements)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, g: usize) -> bool {
        self.conj.class_of(g).is_some()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn conjugacy(&self) -> &ConjugacyData {
        &self.conj
    }

    pub fn num_classes(&self) -> usize {
        self.conj.num_classes()
    }

    pub fn class_of(&self, g: usize) -> Option<usize> {
        self.conj.class_of(g)
    }

    pub fn class_rep(&self, c: usize) -> usize {
        self.conj.rep(c)
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.conj.class_size(c)
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        (0..self.num_classes()).map(|c| self.class_size(c)).collect()
    }

    /// Order of the elements in class `c`.
    pub fn class_element_order(&self, c: usize) -> u32 {
        self.group.element_order(self.conj.rep(c))
    }

    pub fn centralizer_order(&self, c: usize) -> usize {
        self.order() / self.class_size(c)
    }

    /// Class of `g^k` for `g` in class `c`.
    pub fn power_class(&self, c: usize, k: i64) -> usize {
        let x = self.group.pow(self.conj.rep(c), k);
        self.conj.class_of(x).expect("powers stay in the subgroup")
    }

    pub fn inverse_class(&self, c: usize) -> usize {
        self.power_class(c, -1)
    }

    pub fn exponent(&self) -> u32 {
        (0..self.num_classes()).fold(1, |acc, c| acc.lcm(&self.class_element_order(c)))
    }

    pub fn is_abelian(&self) -> bool {
        self.num_classes() == self.order()
    }

    pub fn character_table(&self) -> Result<&CharacterTable> {
        self.table
            .get_or_init(|| CharacterTable::compute(self).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(|msg| Error::Modular(msg.clone()))
    }
}
