//! Sectors of `[V/G]` in representation-ring coordinates: the components
//! `V^g` of the inertia, the pair sectors `V^{g,h}` of the double inertia, and
//! the excess classes attached to them.

use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::characters::{fixed_subspace_character, ClassFunction};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{GroupContext, PairOrbit, Subgroup};

/// One sector `[g]`: the `C(g)`-representation on `V^g`.
#[derive(Clone, Debug)]
pub struct Sector {
    pub class: usize,
    pub rep: usize,
    pub centralizer: Arc<Subgroup>,
    pub fixed: ClassFunction,
}

impl Sector {
    pub fn fixed_dim(&self) -> i64 {
        self.fixed.degree().as_integer().unwrap_or(0)
    }
}

/// One `C(k)`-orbit of pairs `(g, h)` with `gh = k`, with the
/// `Z(g,h)`-characters that enter the product.
#[derive(Clone, Debug)]
pub struct PairSector {
    pub orbit: PairOrbit,
    pub stabilizer: Arc<Subgroup>,
    pub g_class: usize,
    pub h_class: usize,
    /// `V|_Z`
    pub ambient: ClassFunction,
    /// `V^g|_Z`, transported from the sector of `[g]`
    pub fixed_g: ClassFunction,
    pub fixed_h: ClassFunction,
    /// `V^k|_Z`
    pub fixed_k: ClassFunction,
    /// `V^{⟨g,h⟩}` on `Z`
    pub fixed_gh: ClassFunction,
    /// `V + V^{g,h} − V^g − V^h`
    pub b: ClassFunction,
    /// the same class from fixed-point projectors, without transport
    pub e_i2: ClassFunction,
    /// `V + V^{g,h}`
    pub e_p: ClassFunction,
    /// `V^k − V^{g,h}`, the normal data of `V^{g,h} ⊂ V^k`
    pub n: ClassFunction,
    /// `λ₋₁(B^∨)`
    pub d: ClassFunction,
    /// `λ₋₁(N^∨)`
    pub koszul: ClassFunction,
}

/// `λ₋₁(B^∨)`.
pub fn derived_class_d(pair: &PairSector) -> Result<ClassFunction> {
    pair.b.lambda_minus_one_dual()
}

/// `λ₋₁(E_P^∨)`.
pub fn pants_class(pair: &PairSector) -> Result<ClassFunction> {
    pair.e_p.lambda_minus_one_dual()
}

/// A group with a linear representation `V`, given by its character, and the
/// sector data of its inertia.
pub struct Orbifold {
    ctx: Arc<GroupContext>,
    v: ClassFunction,
    sectors: Vec<Sector>,
    pairs: Vec<OnceLock<Vec<PairSector>>>,
}

impl Orbifold {
    pub fn new(ctx: Arc<GroupContext>, v: ClassFunction) -> Result<Self> {
        if v.group() != ctx.whole() {
            return Err(Error::GroupMismatch);
        }
        v.ensure_honest("representation")?;
        let sectors = (0..ctx.num_classes())
            .map(|c| {
                let rep = ctx.class_rep(c);
                let centralizer = ctx.centralizer(c);
                let fixed = fixed_subspace_character(&v, &[rep], &centralizer)?;
                Ok(Sector {
                    class: c,
                    rep,
                    centralizer,
                    fixed,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let pairs = (0..ctx.num_classes()).map(|_| OnceLock::new()).collect();
        Ok(Orbifold {
            ctx,
            v,
            sectors,
            pairs,
        })
    }

    /// `BG`: the zero representation.
    pub fn classifying(ctx: Arc<GroupContext>) -> Self {
        let v = ClassFunction::zero(ctx.whole().clone());
        Self::new(ctx, v).expect("the zero representation is honest")
    }

    pub fn context(&self) -> &Arc<GroupContext> {
        &self.ctx
    }

    pub fn representation(&self) -> &ClassFunction {
        &self.v
    }

    pub fn dim(&self) -> i64 {
        self.v.degree().as_integer().unwrap_or(0)
    }

    pub fn sectors(&self) -> &[Sector] {
        &self.sectors
    }

    pub fn sector(&self, c: usize) -> &Sector {
        &self.sectors[c]
    }

    /// `V^g` on `Z ⊆ C(g)` for an arbitrary element `g`, transported from the
    /// sector of its class.
    fn transported_fixed(&self, g: usize, z: &Arc<Subgroup>) -> Result<ClassFunction> {
        let c = self.ctx.class_of(g);
        let t = self.ctx.transporter(g);
        self.sectors[c].fixed.restrict_transport(t, z)
    }

    fn build_pair(&self, orbit: PairOrbit) -> Result<PairSector> {
        let ctx = &self.ctx;
        let z = ctx.subgroup(orbit.stabilizer.clone())?;
        let (g, h, k) = (orbit.g, orbit.h, orbit.target);
        let ambient = self.v.restrict(&z)?;
        let fixed_g = self.transported_fixed(g, &z)?;
        let fixed_h = self.transported_fixed(h, &z)?;
        let fixed_k = self.transported_fixed(k, &z)?;
        let fixed_gh = fixed_subspace_character(&self.v, &[g, h], &z)?;

        let b = &(&ambient + &fixed_gh) - &(&fixed_g + &fixed_h);
        let e_i2 = &(&ambient + &fixed_gh)
            - &(&fixed_subspace_character(&self.v, &[g], &z)?
                + &fixed_subspace_character(&self.v, &[h], &z)?);
        if b != e_i2 {
            return Err(Error::Contract(format!(
                "excess class differs from B on the pair ({g}, {h}): {b} vs {e_i2}"
            )));
        }
        let e_p = &ambient + &fixed_gh;
        let n = &fixed_k - &fixed_gh;
        let what = format!("pair ({g}, {h})");
        b.ensure_honest(&format!("B on {what}"))?;
        e_p.ensure_honest(&format!("E_P on {what}"))?;
        n.ensure_honest(&format!("N on {what}"))?;
        let d = b.lambda_minus_one_dual()?;
        let koszul = n.lambda_minus_one_dual()?;
        Ok(PairSector {
            g_class: ctx.class_of(g),
            h_class: ctx.class_of(h),
            orbit,
            stabilizer: z,
            ambient,
            fixed_g,
            fixed_h,
            fixed_k,
            fixed_gh,
            b,
            e_i2,
            e_p,
            n,
            d,
            koszul,
        })
    }

    /// Pair sectors over the target class `k_class`, in orbit order.
    pub fn pair_sectors(&self, k_class: usize) -> Result<&[PairSector]> {
        if k_class >= self.pairs.len() {
            return Err(Error::Input(format!("no class {k_class}")));
        }
        if let Some(p) = self.pairs[k_class].get() {
            return Ok(p);
        }
        let k = self.ctx.class_rep(k_class);
        let built = self
            .ctx
            .pair_orbits(k)?
            .into_iter()
            .map(|o| self.build_pair(o))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.pairs[k_class].get_or_init(|| built))
    }

    /// Pair sectors over the class representative `k`.
    pub fn pair_sector_data(&self, k: usize) -> Result<&[PairSector]> {
        let c = self.ctx.conjugacy().rep_class(k).ok_or(Error::NotClassRep(k))?;
        self.pair_sectors(c)
    }

    pub fn all_pair_sectors(&self) -> Result<Vec<&PairSector>> {
        let mut out = Vec::new();
        for c in 0..self.ctx.num_classes() {
            out.extend(self.pair_sectors(c)?);
        }
        Ok(out)
    }

    pub fn report(&self) -> Result<SectorReport> {
        let sectors = self
            .sectors
            .iter()
            .map(|s| SectorEntry {
                class: s.class,
                rep: s.rep,
                centralizer_order: s.centralizer.order(),
                fixed_dim: s.fixed_dim(),
                fixed_character: s.fixed.clone(),
            })
            .collect();
        let mut pair_sectors = Vec::new();
        for p in self.all_pair_sectors()? {
            pair_sectors.push(PairEntry {
                target_class: p.orbit.target_class,
                target: p.orbit.target,
                g: p.orbit.g,
                h: p.orbit.h,
                stabilizer_order: p.stabilizer.order(),
                orbit_size: p.orbit.orbit_size,
                fixed_gh_dim: p.fixed_gh.degree().as_integer().unwrap_or(0),
                b: p.b.clone(),
                e_p: p.e_p.clone(),
                n: p.n.clone(),
                d: p.d.clone(),
            });
        }
        Ok(SectorReport {
            group_order: self.ctx.order(),
            dim: self.dim(),
            sectors,
            pair_sectors,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SectorEntry {
    pub class: usize,
    pub rep: usize,
    pub centralizer_order: usize,
    pub fixed_dim: i64,
    pub fixed_character: ClassFunction,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairEntry {
    pub target_class: usize,
    pub target: usize,
    pub g: usize,
    pub h: usize,
    pub stabilizer_order: usize,
    pub orbit_size: usize,
    pub fixed_gh_dim: i64,
    #[serde(rename = "B")]
    pub b: ClassFunction,
    #[serde(rename = "E_P")]
    pub e_p: ClassFunction,
    #[serde(rename = "N")]
    pub n: ClassFunction,
    #[serde(rename = "D")]
    pub d: ClassFunction,
}

/// JSON sector report: fixed dimensions per class and the pair-sector classes.
#[derive(Clone, Debug, Serialize)]
pub struct SectorReport {
    pub group_order: usize,
    pub dim: i64,
    pub sectors: Vec<SectorEntry>,
    pub pair_sectors: Vec<PairEntry>,
}

/// An element of `K_G(I_G V) = ⊕_{[g]} R(C(g))`: one class function on each
/// sector centralizer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct InertiaClass {
    components: Vec<ClassFunction>,
}

impl InertiaClass {
    pub fn zero(orb: &Orbifold) -> Self {
        InertiaClass {
            components: orb
                .sectors
                .iter()
                .map(|s| ClassFunction::zero(s.centralizer.clone()))
                .collect(),
        }
    }

    /// Trivial character on the untwisted sector.
    pub fn unit(orb: &Orbifold) -> Self {
        let mut x = Self::zero(orb);
        x.components[0] = ClassFunction::trivial(orb.sectors[0].centralizer.clone());
        x
    }

    /// Irreducible `irrep` of `C(g)` placed on the sector `[g]`.
    pub fn basis(orb: &Orbifold, class: usize, irrep: usize) -> Result<Self> {
        let s = orb
            .sectors
            .get(class)
            .ok_or_else(|| Error::Input(format!("no class {class}")))?;
        let mut x = Self::zero(orb);
        x.components[class] = ClassFunction::irreducible(&s.centralizer, irrep)?;
        Ok(x)
    }

    pub fn from_components(orb: &Orbifold, components: Vec<ClassFunction>) -> Result<Self> {
        if components.len() != orb.sectors.len()
            || components
                .iter()
                .zip(&orb.sectors)
                .any(|(c, s)| c.group() != &s.centralizer)
        {
            return Err(Error::Contract(
                "components do not match the sector centralizers".into(),
            ));
        }
        Ok(InertiaClass { components })
    }

    /// Place a single class function on the sector `class`.
    pub fn supported_at(orb: &Orbifold, class: usize, value: ClassFunction) -> Result<Self> {
        let mut x = Self::zero(orb);
        let slot = x
            .components
            .get_mut(class)
            .ok_or_else(|| Error::Input(format!("no class {class}")))?;
        if value.group() != slot.group() {
            return Err(Error::GroupMismatch);
        }
        *slot = value;
        Ok(x)
    }

    pub fn components(&self) -> &[ClassFunction] {
        &self.components
    }

    pub fn component(&self, class: usize) -> &ClassFunction {
        &self.components[class]
    }

    pub(crate) fn component_mut(&mut self, class: usize) -> &mut ClassFunction {
        &mut self.components[class]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(ClassFunction::is_zero)
    }

    pub fn scale(&self, s: &Cyclotomic) -> Self {
        InertiaClass {
            components: self.components.iter().map(|c| c.scale(s)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        InertiaClass {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        InertiaClass {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Integer coordinates in the basis of irreducibles, sector by sector.
    pub fn coordinates(&self) -> Result<Vec<i64>> {
        let mut out = Vec::new();
        for c in &self.components {
            out.extend(c.multiplicities()?);
        }
        Ok(out)
    }
}
