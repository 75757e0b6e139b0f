//! Finite groups stored by their full Cayley table.
//!
//! Elements are indices `0..order`, with the identity at index `0`. Every
//! downstream computation is an exhaustive sum over elements, so the table
//! form is all that is needed.

mod builtin;
mod conjugacy;
mod context;
mod input;
mod subgroup;

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

pub use builtin::{builtin, cyclic, dihedral, quaternion8, symmetric};
pub use conjugacy::ConjugacyData;
pub use context::{GroupContext, PairOrbit};
pub use input::GroupSpec;
pub use subgroup::Subgroup;

/// Hard cap on group order.
pub const MAX_ORDER: usize = 4096;
/// Largest permutation degree accepted for generator input.
pub const MAX_DEGREE: usize = 32;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    elem_order: Vec<u32>,
    /// Images of `0..degree` under each element, when the group came from
    /// permutation generators.
    perms: Option<Vec<Vec<u8>>>,
}

impl FiniteGroup {
    pub fn trivial() -> Self {
        Self::from_table_unchecked(1, vec![0], None)
    }

    /// Closure of permutation generators given in cycle notation on the
    /// points `1..=degree`.
    pub fn from_cycles(degree: usize, generators: &[Vec<Vec<usize>>]) -> Result<Self> {
        let mut images = Vec::with_capacity(generators.len());
        for cycles in generators {
            let mut img: Vec<usize> = (0..degree).collect();
            let mut seen = vec![false; degree];
            for cycle in cycles {
                for &pt in cycle {
                    if pt == 0 || pt > degree {
                        return Err(Error::InvalidGroup(format!(
                            "point {pt} outside 1..={degree}"
                        )));
                    }
                    if std::mem::replace(&mut seen[pt - 1], true) {
                        return Err(Error::InvalidGroup(format!(
                            "point {pt} repeated within one generator"
                        )));
                    }
                }
                for (i, &pt) in cycle.iter().enumerate() {
                    img[pt - 1] = cycle[(i + 1) % cycle.len()] - 1;
                }
            }
            images.push(img);
        }
        Self::from_permutations(degree, &images)
    }

    /// Closure of permutations given as image lists on `0..degree`.
    ///
    /// Elements are numbered in breadth-first order from the identity,
    /// multiplying on the right by the generators in the given order.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<Self> {
        if degree > MAX_DEGREE {
            return Err(Error::InvalidGroup(format!(
                "degree {degree} exceeds {MAX_DEGREE}"
            )));
        }
        let gens: Vec<Vec<u8>> = generators
            .iter()
            .map(|g| {
                if g.len() != degree {
                    return Err(Error::InvalidGroup(format!(
                        "permutation has {} images, expected {degree}",
                        g.len()
                    )));
                }
                let mut seen = vec![false; degree];
                for &x in g {
                    if x >= degree || std::mem::replace(&mut seen[x], true) {
                        return Err(Error::InvalidGroup(format!("{g:?} is not a permutation")));
                    }
                }
                Ok(g.iter().map(|&x| x as u8).collect())
            })
            .collect::<Result<_>>()?;

        let identity: Vec<u8> = (0..degree as u8).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<u8>, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for s in &gens {
                let prod = compose(&elements[i], s);
                if !index.contains_key(&prod) {
                    if elements.len() == MAX_ORDER {
                        return Err(Error::GroupTooLarge { cap: MAX_ORDER });
                    }
                    index.insert(prod.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(prod);
                }
            }
        }

        let n = elements.len();
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = index[&compose(&elements[a], &elements[b])] as u16;
            }
        }
        Ok(Self::from_table_unchecked(n, mul, Some(elements)))
    }

    /// Validate and adopt an explicit Cayley table. Element `0` must be the
    /// identity.
    pub fn from_cayley_table(table: &[Vec<usize>]) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty Cayley table".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::GroupTooLarge { cap: MAX_ORDER });
        }
        let mut mul = Vec::with_capacity(n * n);
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!(
                    "row {a} has {} entries, expected {n}",
                    row.len()
                )));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n {
                    return Err(Error::InvalidGroup(format!("entry {x} out of range")));
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidGroup(format!("row {a} repeats entry {x}")));
                }
                mul.push(x as u16);
            }
        }
        for a in 0..n {
            if mul[a] as usize != a || mul[a * n] as usize != a {
                return Err(Error::InvalidGroup(
                    "element 0 is not a two-sided identity".into(),
                ));
            }
        }
        for b in 0..n {
            let mut seen = vec![false; n];
            for a in 0..n {
                let x = mul[a * n + b] as usize;
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidGroup(format!("column {b} repeats entry {x}")));
                }
            }
        }
        check_associative(n, &mul)?;
        Ok(Self::from_table_unchecked(n, mul, None))
    }

    fn from_table_unchecked(n: usize, mul: Vec<u16>, perms: Option<Vec<Vec<u8>>>) -> Self {
        let mut inv = vec![0u16; n];
        for a in 0..n {
            inv[a] = (0..n)
                .find(|&b| mul[a * n + b] == 0)
                .expect("latin square has an inverse in every row") as u16;
        }
        let mut elem_order = vec![1u32; n];
        for a in 1..n {
            let mut x = a;
            let mut k = 1;
            while x != 0 {
                x = mul[x * n + a] as usize;
                k += 1;
            }
            elem_order[a] = k;
        }
        FiniteGroup {
            order: n,
            mul,
            inv,
            elem_order,
            perms,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub const fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `t g t⁻¹`
    #[inline]
    pub fn conjugate(&self, t: usize, g: usize) -> usize {
        self.mul(self.mul(t, g), self.inv(t))
    }

    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn element_order(&self, a: usize) -> u32 {
        self.elem_order[a]
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let o = self.elem_order[a] as i64;
        let mut e = k.rem_euclid(o);
        let mut acc = 0;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u32 {
        use num_integer::Integer;
        self.elem_order.iter().fold(1, |acc, &o| acc.lcm(&o))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.commute(a, b)))
    }

    /// Degree of the defining permutation action, if any.
    pub fn degree(&self) -> Option<usize> {
        self.perms.as_ref().map(|p| p[0].len())
    }

    /// Image list of element `a` in the defining permutation action.
    pub fn permutation(&self, a: usize) -> Option<&[u8]> {
        self.perms.as_ref().map(|p| p[a].as_slice())
    }

    /// Row-major Cayley table.
    pub fn cayley_table(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }
}

/// `(a ∘ b)(i) = a(b(i))`
fn compose(a: &[u8], b: &[u8]) -> Vec<u8> {
    b.iter().map(|&i| a[i as usize]).collect()
}

/// Light's associativity test: a magma is associative iff `(x s) y = x (s y)`
/// for all `x, y` and every `s` in a generating set.
fn check_associative(n: usize, mul: &[u16]) -> Result<()> {
    let m = |a: usize, b: usize| mul[a * n + b] as usize;
    let mut gens = Vec::new();
    let mut covered = vec![false; n];
    covered[0] = true;
    let mut members = vec![0usize];
    while let Some(s) = (0..n).find(|&x| !covered[x]) {
        gens.push(s);
        // closure of gens under multiplication
        let mut queue: VecDeque<usize> = members.iter().copied().collect();
        if !covered[s] {
            covered[s] = true;
            members.push(s);
            queue.push_back(s);
        }
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                for y in [m(x, g), m(g, x)] {
                    if !covered[y] {
                        covered[y] = true;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
        }
    }
    for &s in &gens {
        for x in 0..n {
            let xs = m(x, s);
            for y in 0..n {
                if m(xs, y) != m(x, m(s, y)) {
                    return Err(Error::InvalidGroup(format!(
                        "table is not associative: ({x}*{s})*{y} != {x}*({s}*{y})"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Closure of `elems` under multiplication and inverse.
pub fn generated_subgroup(group: &FiniteGroup, elems: &[usize]) -> Vec<usize> {
    let mut member = vec![false; group.order()];
    member[0] = true;
    let mut out = vec![0];
    let mut queue = VecDeque::new();
    let gens: Vec<usize> = elems.iter().copied().filter(|&g| g != 0).collect();
    for &g in &gens {
        if !member[g] {
            member[g] = true;
            out.push(g);
            queue.push_back(g);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &g in &gens {
            let y = group.mul(x, g);
            if !member[y] {
                member[y] = true;
                out.push(y);
                queue.push_back(y);
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_cycles(3, &[vec![vec![1, 2]], vec![vec![1, 2, 3]]]).unwrap()
    }

    fn find(g: &FiniteGroup, images: &[u8]) -> usize {
        (0..g.order()).find(|&a| g.permutation(a).unwrap() == images).unwrap()
    }

    #[test]
    fn s3_from_generators() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.exponent(), 6);
        for a in 0..6 {
            assert_eq!(g.mul(g.inv(a), a), 0);
        }
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = FiniteGroup::from_cycles(4, &[]).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn cayley_table_of_z4() {
        let table: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect();
        let g = FiniteGroup::from_cayley_table(&table).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.is_abelian());
        assert_eq!(g.element_order(1), 4);
        assert_eq!(g.exponent(), 4);
    }

    #[test]
    fn rejects_bad_tables() {
        // identity not at 0
        let t = vec![vec![1, 0], vec![0, 1]];
        assert!(FiniteGroup::from_cayley_table(&t).is_err());
        // a latin square with identity 0 that is not associative
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_cayley_table(&t),
            Err(Error::InvalidGroup(msg)) if msg.contains("associative")
        ));
        assert!(FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1, 1]]).is_err());
    }

    #[test]
    fn rejects_malformed_permutations() {
        assert!(FiniteGroup::from_cycles(3, &[vec![vec![1, 4]]]).is_err());
        assert!(FiniteGroup::from_cycles(3, &[vec![vec![1, 2, 1]]]).is_err());
        assert!(FiniteGroup::from_permutations(3, &[vec![0, 0, 1]]).is_err());
    }

    #[test]
    fn generator_closure_is_capped() {
        // S_8 has order 40320 > 4096
        let r = FiniteGroup::from_cycles(8, &[vec![vec![1, 2]], vec![vec![1, 2, 3, 4, 5, 6, 7, 8]]]);
        assert!(matches!(r, Err(Error::GroupTooLarge { .. })));
    }

    #[test]
    fn generated_subgroups_of_s3() {
        let g = s3();
        let c = find(&g, &[1, 2, 0]);
        let t = find(&g, &[1, 0, 2]);
        let sub = generated_subgroup(&g, &[c]);
        assert_eq!(sub.len(), 3);
        assert!(sub.contains(&0) && sub.contains(&c) && sub.contains(&g.mul(c, c)));
        assert_eq!(generated_subgroup(&g, &[]), vec![0]);
        assert_eq!(generated_subgroup(&g, &[t, c]), (0..6).collect::<Vec<_>>());
    }
}
