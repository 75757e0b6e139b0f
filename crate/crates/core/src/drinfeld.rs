//! Fusion ring of the Drinfeld double `D(k[G])`, modelled as
//! conjugation-equivariant vector bundles on `G` with the convolution tensor
//! product `(V ⊗ W)_a = ⊕_{bc=a} V_b ⊗ W_c`. Characters live on commuting
//! pairs `(a, x)`.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::characters::ClassFunction;
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::GroupContext;
use crate::product::{BasisLabel, ProductTable};

/// Simple object `([a], σ)` with `σ` an irreducible of `C(a)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleSimple {
    pub class: usize,
    pub rep: usize,
    pub irrep: usize,
}

pub fn double_simples(ctx: &GroupContext) -> Result<Vec<DoubleSimple>> {
    let mut out = Vec::new();
    for c in 0..ctx.num_classes() {
        let n = ctx.centralizer(c).character_table()?.num_irreducibles();
        for irrep in 0..n {
            out.push(DoubleSimple {
                class: c,
                rep: ctx.class_rep(c),
                irrep,
            });
        }
    }
    Ok(out)
}

pub struct DrinfeldDouble {
    ctx: Arc<GroupContext>,
    simples: Vec<DoubleSimple>,
    /// commuting pairs `(a, x)` in lexicographic order
    pairs: Vec<(usize, usize)>,
    /// `a * |G| + x -> position in pairs`
    pair_index: Vec<u32>,
    /// per element `b`, a fixed `t` with `t · rep · t⁻¹ = b`
    transversal: Vec<usize>,
    characters: Vec<Vec<Cyclotomic>>,
}

impl DrinfeldDouble {
    /// Transversal from an ascending scan, or a shuffled one under `seed`.
    pub fn new(ctx: Arc<GroupContext>, seed: Option<u64>) -> Result<Self> {
        let g = ctx.group().clone();
        let n = g.order();
        let mut pairs = Vec::new();
        let mut pair_index = vec![u32::MAX; n * n];
        for a in 0..n {
            for x in 0..n {
                if g.commute(a, x) {
                    pair_index[a * n + x] = pairs.len() as u32;
                    pairs.push((a, x));
                }
            }
        }

        let mut rng = seed.map(|s| ChaCha8Rng::seed_from_u64(s ^ 0x9e37_79b9_7f4a_7c15));
        let mut transversal = vec![usize::MAX; n];
        let mut scan: Vec<usize> = (0..n).collect();
        for c in 0..ctx.num_classes() {
            let a = ctx.class_rep(c);
            if let Some(r) = rng.as_mut() {
                scan.shuffle(r);
            }
            for &t in &scan {
                let b = g.conjugate(t, a);
                if transversal[b] == usize::MAX {
                    transversal[b] = t;
                }
            }
        }

        let simples = double_simples(&ctx)?;
        let mut characters = Vec::with_capacity(simples.len());
        for s in &simples {
            let cent = ctx.centralizer(s.class);
            let sigma = ClassFunction::irreducible(&cent, s.irrep)?;
            let values = pairs
                .iter()
                .map(|&(b, x)| {
                    if ctx.class_of(b) != s.class {
                        return Cyclotomic::zero();
                    }
                    let t = transversal[b];
                    let pulled = g.conjugate(g.inv(t), x);
                    sigma
                        .value_at(pulled)
                        .cloned()
                        .expect("conjugated centralizer element")
                })
                .collect();
            characters.push(values);
        }
        Ok(DrinfeldDouble {
            ctx,
            simples,
            pairs,
            pair_index,
            transversal,
            characters,
        })
    }

    pub fn context(&self) -> &Arc<GroupContext> {
        &self.ctx
    }

    pub fn simples(&self) -> &[DoubleSimple] {
        &self.simples
    }

    pub fn commuting_pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn transversal(&self, b: usize) -> usize {
        self.transversal[b]
    }

    /// Values of the character of simple `i` on the commuting pairs.
    pub fn character(&self, i: usize) -> &[Cyclotomic] {
        &self.characters[i]
    }

    pub fn value(&self, i: usize, a: usize, x: usize) -> Option<&Cyclotomic> {
        let n = self.ctx.order();
        match self.pair_index.get(a * n + x) {
            Some(&p) if p != u32::MAX => Some(&self.characters[i][p as usize]),
            _ => None,
        }
    }

    /// `|[a]| · σ(1)`
    pub fn dimension(&self, i: usize) -> i64 {
        let s = &self.simples[i];
        let size = self.ctx.conjugacy().class_size(s.class) as i64;
        let deg = self
            .ctx
            .centralizer(s.class)
            .character_table()
            .map(|t| t.degrees()[s.irrep])
            .unwrap_or(0);
        size * deg
    }

    /// `(1/|G|) Σ_{(a,x)} φ(a,x) · conj(ψ(a,x))`
    pub fn pair_inner_product(&self, phi: &[Cyclotomic], psi: &[Cyclotomic]) -> Cyclotomic {
        let s: Cyclotomic = phi
            .iter()
            .zip(psi)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .map(|(a, b)| a * &b.conj())
            .sum();
        s.div_int(self.ctx.order() as i64)
    }

    /// Character of the convolution product of simples `i` and `j`.
    pub fn fusion_product(&self, i: usize, j: usize) -> Vec<Cyclotomic> {
        let g = self.ctx.group();
        let class_i = self.ctx.conjugacy().class(self.simples[i].class);
        self.pairs
            .iter()
            .map(|&(a, x)| {
                let mut s = Cyclotomic::zero();
                for &b in class_i {
                    let c = g.mul(g.inv(b), a);
                    if !g.commute(x, b) || !g.commute(x, c) {
                        continue;
                    }
                    let (Some(u), Some(v)) = (self.value(i, b, x), self.value(j, c, x)) else {
                        continue;
                    };
                    if !u.is_zero() && !v.is_zero() {
                        s += &(u * v);
                    }
                }
                s
            })
            .collect()
    }

    pub fn labels(&self) -> Vec<BasisLabel> {
        self.simples
            .iter()
            .map(|s| BasisLabel {
                class: s.class,
                rep: s.rep,
                irrep: s.irrep,
            })
            .collect()
    }

    /// `N_ij^k = ⟨χ_i · χ_j, χ_k⟩`; an error unless every constant is a
    /// nonnegative integer.
    pub fn fusion_constants(&self) -> Result<ProductTable> {
        let n = self.simples.len();
        let rows = (0..n * n)
            .into_par_iter()
            .map(|idx| {
                let (i, j) = (idx / n, idx % n);
                let prod = self.fusion_product(i, j);
                (0..n)
                    .map(|k| {
                        let m = self.pair_inner_product(&prod, &self.characters[k]);
                        m.as_integer().filter(|&v| v >= 0).ok_or_else(|| {
                            Error::Contract(format!("fusion constant N_{i}{j}^{k} = {m}"))
                        })
                    })
                    .collect::<Result<Vec<i64>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let dense: Vec<i64> = rows.into_iter().flatten().collect();
        Ok(ProductTable::from_dense(self.labels(), &dense))
    }

    /// `⟨χ_i, χ_j⟩ = δ_ij` for all simples.
    pub fn orthonormal(&self) -> bool {
        let n = self.simples.len();
        (0..n).all(|i| {
            (i..n).all(|j| {
                let ip = self.pair_inner_product(&self.characters[i], &self.characters[j]);
                if i == j {
                    ip.is_one()
                } else {
                    ip.is_zero()
                }
            })
        })
    }

    /// `Σ_k N_ij^k dim(k) = dim(i) dim(j)` for every entry of `table`.
    pub fn dimension_homomorphism(&self, table: &ProductTable) -> bool {
        let n = self.simples.len();
        let dims: Vec<i64> = (0..n).map(|i| self.dimension(i)).collect();
        let d = table.dense();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let s: i64 = (0..n).map(|k| d[(i * n + j) * n + k] * dims[k]).sum();
                s == dims[i] * dims[j]
            })
        })
    }
}

/// Fusion table on the canonical basis.
pub fn fusion_constants(ctx: &Arc<GroupContext>, seed: Option<u64>) -> Result<ProductTable> {
    DrinfeldDouble::new(ctx.clone(), seed)?
        .fusion_constants()?
        .canonicalize(ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin;

    fn double(name: &str, seed: Option<u64>) -> DrinfeldDouble {
        let ctx = Arc::new(GroupContext::new(builtin(name).unwrap()));
        DrinfeldDouble::new(ctx, seed).unwrap()
    }

    #[test]
    fn simple_counts() {
        assert_eq!(double("Z2", None).simples().len(), 4);
        assert_eq!(double("S3", None).simples().len(), 8);
        assert_eq!(double("D4", None).simples().len(), 22);
        assert_eq!(double("Q8", None).simples().len(), 22);
    }

    #[test]
    fn pair_measure_and_orthonormality() {
        for name in ["Z2", "S3", "Q8"] {
            let d = double(name, None);
            let g = d.context();
            assert_eq!(d.commuting_pairs().len(), g.order() * g.num_classes());
            assert!(d.orthonormal(), "{name}");
        }
    }

    #[test]
    fn z2_fusion() {
        let d = double("Z2", None);
        let t = d.fusion_constants().unwrap();
        // ([σ], sgn)^2 = ([e], triv)
        assert_eq!(t.get(3, 3, 0), 1);
        assert_eq!((0..4).map(|k| t.get(3, 3, k)).sum::<i64>(), 1);
    }

    #[test]
    fn s3_values_and_dimensions() {
        let d = double("S3", None);
        let ctx = d.context().clone();
        let tc = (0..3)
            .find(|&c| ctx.group().element_order(ctx.class_rep(c)) == 2)
            .unwrap();
        let a = ctx.class_rep(tc);
        let sgn = d.simples().iter().position(|s| s.class == tc && s.irrep == 1).unwrap();
        assert_eq!(d.value(sgn, a, a), Some(&Cyclotomic::from_int(-1)));
        let t = d.fusion_constants().unwrap();
        assert!(d.dimension_homomorphism(&t));
    }

    #[test]
    fn transversal_independence() {
        let a = double("S3", None).fusion_constants().unwrap();
        let b = double("S3", Some(17)).fusion_constants().unwrap();
        assert_eq!(a, b);
    }
}
