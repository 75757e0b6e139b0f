use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::FiniteGroup;

const NONE: u32 = u32::MAX;

/// Conjugacy classes of a group `H` (given as a subset of an ambient group),
/// with one representative per class, the centralizer of each representative
/// and a transporter for every element.
#[derive(Clone, Debug)]
pub struct ConjugacyData {
    classes: Vec<Vec<usize>>,
    reps: Vec<usize>,
    centralizers: Vec<Vec<usize>>,
    /// ambient index -> class, `NONE` outside `H`
    class_of: Vec<u32>,
    /// ambient index -> `t ∈ H` with `t · rep · t⁻¹ = g`
    transporters: Vec<u32>,
}

impl ConjugacyData {
    /// Classes are ordered by their least element. Without a seed each
    /// representative is that least element and transporters are the first
    /// hit of an ascending scan over `H`. A seed picks random representatives
    /// and scans in a random order (the identity always transports the
    /// representative to itself).
    pub fn compute(group: &FiniteGroup, elements: &[usize], seed: Option<u64>) -> Self {
        let n = group.order();
        let mut class_of = vec![NONE; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &x in elements {
            if class_of[x] != NONE {
                continue;
            }
            let c = classes.len() as u32;
            let mut members = Vec::new();
            for &t in elements {
                let y = group.conjugate(t, x);
                if class_of[y] == NONE {
                    class_of[y] = c;
                    members.push(y);
                }
            }
            members.sort_unstable();
            classes.push(members);
        }

        let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
        let mut scan: Vec<usize> = elements.to_vec();
        let reps: Vec<usize> = classes
            .iter()
            .map(|cls| match rng.as_mut() {
                Some(r) => cls[r.gen_range(0..cls.len())],
                None => cls[0],
            })
            .collect();

        let mut transporters = vec![NONE; n];
        for &rep in &reps {
            if let Some(r) = rng.as_mut() {
                scan.shuffle(r);
            }
            transporters[rep] = 0;
            for &t in &scan {
                let y = group.conjugate(t, rep);
                if transporters[y] == NONE {
                    transporters[y] = t as u32;
                }
            }
        }

        let centralizers = reps
            .iter()
            .map(|&rep| {
                elements
                    .iter()
                    .copied()
                    .filter(|&t| group.commute(t, rep))
                    .collect()
            })
            .collect();

        ConjugacyData {
            classes,
            reps,
            centralizers,
            class_of,
            transporters,
        }
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn rep(&self, c: usize) -> usize {
        self.reps[c]
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    /// Class index of `g`, or `None` if `g` is outside the group.
    pub fn class_of(&self, g: usize) -> Option<usize> {
        match self.class_of.get(g) {
            Some(&c) if c != NONE => Some(c as usize),
            _ => None,
        }
    }

    pub fn centralizer(&self, c: usize) -> &[usize] {
        &self.centralizers[c]
    }

    /// `t` with `t · rep · t⁻¹ = g`, where `rep` represents the class of `g`.
    pub fn transporter(&self, g: usize) -> Option<usize> {
        match self.transporters.get(g) {
            Some(&t) if t != NONE => Some(t as usize),
            _ => None,
        }
    }

    /// Class index if `g` is a chosen representative.
    pub fn rep_class(&self, g: usize) -> Option<usize> {
        let c = self.class_of(g)?;
        (self.reps[c] == g).then_some(c)
    }
}
