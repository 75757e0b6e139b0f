//! Inertial products on `K_G(I_G V)`: the generic product twisted by a class
//! on the double inertia, the virtual orbifold product, structure-constant
//! tables and ring-axiom checks.

use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::ClassFunction;
use crate::error::{Error, Result};
use crate::group::GroupContext;
use crate::inertia::{InertiaClass, Orbifold, PairSector};

fn check_shape(orb: &Orbifold, x: &InertiaClass) -> Result<()> {
    let sectors = orb.sectors();
    if x.components().len() != sectors.len()
        || x
            .components()
            .iter()
            .zip(sectors)
            .any(|(c, s)| c.group() != &s.centralizer)
    {
        return Err(Error::Contract("class does not match the sectors".into()));
    }
    Ok(())
}

/// `μ_*(q₁^*x · q₂^*y · R · λ₋₁(N^∨))` with the factor `R` supplied per pair
/// sector by `rfactor(target class, orbit index, pair)`.
pub fn inertial_product_with<F>(
    orb: &Orbifold,
    x: &InertiaClass,
    y: &InertiaClass,
    rfactor: F,
) -> Result<InertiaClass>
where
    F: Fn(usize, usize, &PairSector) -> Result<ClassFunction>,
{
    check_shape(orb, x)?;
    check_shape(orb, y)?;
    let ctx = orb.context();
    let mut out = InertiaClass::zero(orb);
    for k in 0..ctx.num_classes() {
        let target = orb.sector(k).centralizer.clone();
        let mut acc = ClassFunction::zero(target.clone());
        for (o, pair) in orb.pair_sectors(k)?.iter().enumerate() {
            let xg = x.component(pair.g_class);
            let yh = y.component(pair.h_class);
            if xg.is_zero() || yh.is_zero() {
                continue;
            }
            let z = &pair.stabilizer;
            let r = rfactor(k, o, pair)?;
            if r.group() != z {
                return Err(Error::Contract(format!(
                    "multiplier for orbit {o} over class {k} lives on the wrong group"
                )));
            }
            let xg = xg.restrict_transport(ctx.transporter(pair.orbit.g), z)?;
            let yh = yh.restrict_transport(ctx.transporter(pair.orbit.h), z)?;
            let term = &(&(&xg * &yh) * &r) * &pair.koszul;
            if !term.is_zero() {
                acc = acc + term.induce(&target)?;
            }
        }
        *out.component_mut(k) = acc;
    }
    Ok(out)
}

/// Generic inertial product with multipliers shaped `[target class][orbit]`.
pub fn inertial_product_generic(
    orb: &Orbifold,
    x: &InertiaClass,
    y: &InertiaClass,
    rfactor: &[Vec<ClassFunction>],
) -> Result<InertiaClass> {
    let ctx = orb.context();
    if rfactor.len() != ctx.num_classes() {
        return Err(Error::Contract(format!(
            "multipliers given for {} target classes, expected {}",
            rfactor.len(),
            ctx.num_classes()
        )));
    }
    for (k, row) in rfactor.iter().enumerate() {
        let n = orb.pair_sectors(k)?.len();
        if row.len() != n {
            return Err(Error::Contract(format!(
                "class {k} has {n} pair sectors but {} multipliers",
                row.len()
            )));
        }
    }
    inertial_product_with(orb, x, y, |k, o, _| Ok(rfactor[k][o].clone()))
}

/// Multiplier `1` on every pair sector.
pub fn unit_multipliers(orb: &Orbifold) -> Result<Vec<Vec<ClassFunction>>> {
    (0..orb.context().num_classes())
        .map(|k| {
            Ok(orb
                .pair_sectors(k)?
                .iter()
                .map(|p| ClassFunction::trivial(p.stabilizer.clone()))
                .collect())
        })
        .collect()
}

/// The virtual orbifold product: multiplier `λ₋₁(B^∨)` on each pair sector.
pub fn virtual_product(orb: &Orbifold, x: &InertiaClass, y: &InertiaClass) -> Result<InertiaClass> {
    inertial_product_with(orb, x, y, |_, _, p| Ok(p.d.clone()))
}

/// The inverse map of the inertia: the component at `[r]` is the component of
/// `x` at `[r⁻¹]`, transported to `C(r)`.
pub fn involution(orb: &Orbifold, x: &InertiaClass) -> Result<InertiaClass> {
    check_shape(orb, x)?;
    let ctx = orb.context();
    let g = ctx.group();
    let mut out = InertiaClass::zero(orb);
    for s in orb.sectors() {
        let inv = g.inv(s.rep);
        let c = ctx.class_of(inv);
        let moved = x
            .component(c)
            .restrict_transport(ctx.transporter(inv), &s.centralizer)?;
        *out.component_mut(s.class) = moved;
    }
    Ok(out)
}

/// Basis element `(class, irreducible of C(rep))`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BasisLabel {
    pub class: usize,
    pub rep: usize,
    pub irrep: usize,
}

/// Basis of `⊕ R(C(g))`: classes in order, irreducibles in table order.
pub fn basis(ctx: &GroupContext) -> Result<Vec<BasisLabel>> {
    let mut out = Vec::new();
    for c in 0..ctx.num_classes() {
        let n = ctx.centralizer(c).character_table()?.num_irreducibles();
        out.extend((0..n).map(|irrep| BasisLabel {
            class: c,
            rep: ctx.class_rep(c),
            irrep,
        }));
    }
    Ok(out)
}

/// Integer structure constants `N_ij^k` on a labelled basis, stored sparsely
/// as `[i, j, k, N]` in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductTable {
    pub basis: Vec<BasisLabel>,
    pub constants: Vec<(usize, usize, usize, i64)>,
}

impl ProductTable {
    pub fn from_dense(basis: Vec<BasisLabel>, dense: &[i64]) -> Self {
        let n = basis.len();
        assert_eq!(dense.len(), n * n * n);
        let constants = dense
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(idx, &v)| (idx / (n * n), (idx / n) % n, idx % n, v))
            .collect();
        ProductTable { basis, constants }
    }

    pub fn size(&self) -> usize {
        self.basis.len()
    }

    pub fn dense(&self) -> Vec<i64> {
        let n = self.size();
        let mut d = vec![0; n * n * n];
        for &(i, j, k, v) in &self.constants {
            d[(i * n + j) * n + k] = v;
        }
        d
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> i64 {
        self.constants
            .binary_search_by(|&(a, b, c, _)| (a, b, c).cmp(&(i, j, k)))
            .map(|p| self.constants[p].3)
            .unwrap_or(0)
    }

    pub fn unit_index(&self) -> Option<usize> {
        self.basis
            .iter()
            .position(|b| b.class == 0 && b.irrep == 0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tables serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("product table: {e}")))
    }

    /// Entries that differ, counted over all `n³` index triples. Tables on
    /// different bases differ everywhere.
    pub fn mismatches(&self, other: &ProductTable) -> usize {
        if self.basis != other.basis {
            return self.size().max(other.size()).pow(3);
        }
        self.dense()
            .iter()
            .zip(other.dense())
            .filter(|(a, b)| **a != *b)
            .count()
    }

    pub fn render_text(&self) -> String {
        let n = self.size();
        let mut out = String::new();
        for (i, b) in self.basis.iter().enumerate() {
            let _ = writeln!(out, "b{i} = class {} (rep {}) irrep {}", b.class, b.rep, b.irrep);
        }
        let dense = self.dense();
        for i in 0..n {
            for j in 0..n {
                let mut rhs = String::new();
                for k in 0..n {
                    let v = dense[(i * n + j) * n + k];
                    if v == 0 {
                        continue;
                    }
                    let sign = if v < 0 { "-" } else { "+" };
                    if rhs.is_empty() {
                        if v < 0 {
                            rhs.push('-');
                        }
                    } else {
                        let _ = write!(rhs, " {sign} ");
                    }
                    if v.abs() != 1 {
                        let _ = write!(rhs, "{}*", v.abs());
                    }
                    let _ = write!(rhs, "b{k}");
                }
                if rhs.is_empty() {
                    rhs.push('0');
                }
                let _ = writeln!(out, "b{i} * b{j} = {rhs}");
            }
        }
        out
    }

    /// Relabel a table computed with arbitrary class representatives onto the
    /// canonical ones (least element of each class): each basis character is
    /// transported to the centralizer of the canonical representative and
    /// matched against that centralizer's irreducibles.
    pub fn canonicalize(&self, ctx: &GroupContext) -> Result<ProductTable> {
        let mut labels = Vec::with_capacity(self.size());
        for b in &self.basis {
            let m = ctx.conjugacy().class(b.class)[0];
            if b.rep == m {
                labels.push(b.clone());
                continue;
            }
            if ctx.class_of(b.rep) != b.class {
                return Err(Error::Contract(format!(
                    "label rep {} is not in class {}",
                    b.rep, b.class
                )));
            }
            let src = ctx.centralizer_of(b.rep);
            let sigma = ClassFunction::irreducible(&src, b.irrep)?;
            // t · rep · t⁻¹ = m
            let t = (0..ctx.order())
                .find(|&t| ctx.group().conjugate(t, b.rep) == m)
                .expect("same class");
            let dst = ctx.centralizer_of(m);
            let moved = sigma.restrict_transport(t, &dst)?;
            let irr = ClassFunction::irreducibles(&dst)?;
            let irrep = irr.iter().position(|c| *c == moved).ok_or_else(|| {
                Error::Contract("transported basis character is not irreducible".into())
            })?;
            labels.push(BasisLabel {
                class: b.class,
                rep: m,
                irrep,
            });
        }
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let mut position = vec![0; labels.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let basis = order.iter().map(|&old| labels[old].clone()).collect();
        let mut constants: Vec<_> = self
            .constants
            .iter()
            .map(|&(i, j, k, v)| (position[i], position[j], position[k], v))
            .collect();
        constants.sort_unstable();
        Ok(ProductTable { basis, constants })
    }
}

/// The virtual product on every pair of basis elements.
pub fn product_table(orb: &Orbifold) -> Result<ProductTable> {
    let labels = basis(orb.context())?;
    let elems = labels
        .iter()
        .map(|b| InertiaClass::basis(orb, b.class, b.irrep))
        .collect::<Result<Vec<_>>>()?;
    // populate the pair-sector cache before fanning out
    orb.all_pair_sectors()?;
    let n = labels.len();
    let rows = (0..n * n)
        .into_par_iter()
        .map(|idx| {
            let (i, j) = (idx / n, idx % n);
            virtual_product(orb, &elems[i], &elems[j])?.coordinates()
        })
        .collect::<Result<Vec<_>>>()?;
    let dense: Vec<i64> = rows.into_iter().flatten().collect();
    Ok(ProductTable::from_dense(labels, &dense))
}

/// Outcome of the ring-axiom checks on a structure-constant table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingReport {
    pub basis_size: usize,
    pub unit: bool,
    pub commutative: bool,
    pub associative: bool,
    pub counterexample: Option<String>,
}

impl RingReport {
    pub fn passed(&self) -> bool {
        self.unit && self.commutative && self.associative
    }
}

pub fn ring_property_check(table: &ProductTable) -> RingReport {
    let n = table.size();
    let d = table.dense();
    let at = |i: usize, j: usize, k: usize| d[(i * n + j) * n + k];
    let mut counterexample = None;
    let mut note = |msg: String| {
        if counterexample.is_none() {
            counterexample = Some(msg);
        }
    };

    let unit = match table.unit_index() {
        None => {
            note("no unit basis element".into());
            false
        }
        Some(u) => {
            let mut ok = true;
            'outer: for j in 0..n {
                for k in 0..n {
                    let want = i64::from(j == k);
                    if at(u, j, k) != want || at(j, u, k) != want {
                        note(format!("unit fails on b{j}, coefficient of b{k}"));
                        ok = false;
                        break 'outer;
                    }
                }
            }
            ok
        }
    };

    let mut commutative = true;
    'comm: for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                if at(i, j, k) != at(j, i, k) {
                    note(format!("b{i} * b{j} != b{j} * b{i} at b{k}"));
                    commutative = false;
                    break 'comm;
                }
            }
        }
    }

    let mut associative = true;
    'assoc: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let left: i64 = (0..n).map(|m| at(i, j, m) * at(m, k, l)).sum();
                    let right: i64 = (0..n).map(|m| at(j, k, m) * at(i, m, l)).sum();
                    if left != right {
                        note(format!(
                            "(b{i} * b{j}) * b{k} != b{i} * (b{j} * b{k}) at b{l}"
                        ));
                        associative = false;
                        break 'assoc;
                    }
                }
            }
        }
    }

    RingReport {
        basis_size: n,
        unit,
        commutative,
        associative,
        counterexample,
    }
}

/// Product table recomputed in a context with seeded representatives and
/// relabelled onto the canonical basis.
pub fn seeded_product_table(ctx: &Arc<GroupContext>, v: &ClassFunction) -> Result<ProductTable> {
    let orb = Orbifold::new(ctx.clone(), v.clone())?;
    product_table(&orb)?.canonicalize(ctx)
}
