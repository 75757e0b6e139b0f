use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use serde::Serialize;

use super::{generated_subgroup, ConjugacyData, FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// One `C(k)`-orbit of pairs `(g, h)` with `g · h = k`.
#[derive(Clone, Debug, Serialize)]
pub struct PairOrbit {
    pub target_class: usize,
    pub target: usize,
    pub g: usize,
    pub h: usize,
    /// `Z(g, h) = C(g) ∩ C(h)`, sorted.
    pub stabilizer: Vec<usize>,
    pub orbit_size: usize,
}

/// An ambient group together with its (possibly seeded) conjugacy data and a
/// cache of subgroups and their character tables.
pub struct GroupContext {
    group: Arc<FiniteGroup>,
    conj: ConjugacyData,
    whole: Arc<Subgroup>,
    seed: Option<u64>,
    subgroups: RwLock<HashMap<Vec<usize>, Arc<Subgroup>>>,
}

impl std::fmt::Debug for GroupContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupContext")
            .field("order", &self.group.order())
            .field("class_reps", &self.conj.reps())
            .field("seed", &self.seed)
            .finish()
    }
}

impl GroupContext {
    pub fn new(group: FiniteGroup) -> Self {
        Self::with_seed(group, None)
    }

    /// A seed randomizes the class representatives and transporters of the
    /// ambient group. Everything computed downstream must be independent of
    /// that choice up to relabeling.
    pub fn with_seed(group: FiniteGroup, seed: Option<u64>) -> Self {
        let group = Arc::new(group);
        let all: Vec<usize> = (0..group.order()).collect();
        let conj = ConjugacyData::compute(&group, &all, seed);
        let whole = Arc::new(Subgroup::whole(group.clone()));
        let subgroups = RwLock::new(HashMap::from([(all, whole.clone())]));
        GroupContext {
            group,
            conj,
            whole,
            seed,
            subgroups,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    /// The whole group as a subgroup. Its classes are in the same order as
    /// [`GroupContext::conjugacy`]'s.
    pub fn whole(&self) -> &Arc<Subgroup> {
        &self.whole
    }

    pub fn conjugacy(&self) -> &ConjugacyData {
        &self.conj
    }

    pub fn num_classes(&self) -> usize {
        self.conj.num_classes()
    }

    pub fn class_rep(&self, c: usize) -> usize {
        self.conj.rep(c)
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.conj.class_of(g).expect("every element has a class")
    }

    pub fn transporter(&self, g: usize) -> usize {
        self.conj.transporter(g).expect("every element has a transporter")
    }

    /// Cached subgroup on the given element set.
    pub fn subgroup(&self, mut elements: Vec<usize>) -> Result<Arc<Subgroup>> {
        elements.sort_unstable();
        elements.dedup();
        if let Some(s) = self.subgroups.read().unwrap().get(&elements) {
            return Ok(s.clone());
        }
        let sub = Arc::new(Subgroup::new(self.group.clone(), elements.clone())?);
        Ok(self
            .subgroups
            .write()
            .unwrap()
            .entry(elements)
            .or_insert(sub)
            .clone())
    }

    /// `C(g)` for an arbitrary element.
    pub fn centralizer_of(&self, g: usize) -> Arc<Subgroup> {
        let elems: Vec<usize> = (0..self.order())
            .filter(|&t| self.group.commute(t, g))
            .collect();
        self.subgroup(elems).expect("centralizers are subgroups")
    }

    /// `C(rep)` for the representative of class `c`.
    pub fn centralizer(&self, c: usize) -> Arc<Subgroup> {
        self.subgroup(self.conj.centralizer(c).to_vec())
            .expect("centralizers are subgroups")
    }

    pub fn generated(&self, elems: &[usize]) -> Arc<Subgroup> {
        self.subgroup(generated_subgroup(&self.group, elems))
            .expect("generated sets are subgroups")
    }

    /// Orbit representatives of `C(k)` acting by simultaneous conjugation on
    /// `{(g, h) : g h = k}`. Pairs are parametrized by `h`, with `g = k h⁻¹`;
    /// each orbit is represented by its least `h`.
    pub fn pair_orbits(&self, k: usize) -> Result<Vec<PairOrbit>> {
        let target_class = self.conj.rep_class(k).ok_or(Error::NotClassRep(k))?;
        let cent = self.conj.centralizer(target_class);
        let g = &self.group;
        let mut seen = vec![false; g.order()];
        let mut out = Vec::new();
        for h in 0..g.order() {
            if seen[h] {
                continue;
            }
            let mut orbit_size = 0;
            for &z in cent {
                let y = g.conjugate(z, h);
                if !seen[y] {
                    seen[y] = true;
                    orbit_size += 1;
                }
            }
            let stabilizer: Vec<usize> = cent.iter().copied().filter(|&z| g.commute(z, h)).collect();
            out.push(PairOrbit {
                target_class,
                target: k,
                g: g.mul(k, g.inv(h)),
                h,
                stabilizer,
                orbit_size,
            });
        }
        Ok(out)
    }
}
