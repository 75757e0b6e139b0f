//! The inertial product with a user-supplied multiplier per pair sector:
//! constant 1, the excess class D, and λ₋₁ of the pants class.

use std::sync::Arc;

use orbik::group::builtin;
use orbik::inertia::{pants_class, InertiaClass};
use orbik::product::{inertial_product_generic, inertial_product_with, unit_multipliers};
use orbik::{ClassFunction, GroupContext, Orbifold};

fn main() -> orbik::Result<()> {
    let ctx = Arc::new(GroupContext::new(builtin("Z3")?));
    let v = ClassFunction::from_multiplicities(ctx.whole(), &[0, 1, 1])?;
    let orb = Orbifold::new(ctx, v)?;
    let x = InertiaClass::basis(&orb, 1, 0)?;
    let y = InertiaClass::basis(&orb, 2, 0)?;

    let plain = inertial_product_generic(&orb, &x, &y, &unit_multipliers(&orb)?)?;
    let virt = inertial_product_with(&orb, &x, &y, |_, _, p| Ok(p.d.clone()))?;
    let pants = inertial_product_with(&orb, &x, &y, |_, _, p| pants_class(p))?;
    println!("R = 1        {:?}", plain.coordinates()?);
    println!("R = D        {:?}", virt.coordinates()?);
    println!("R = λ₋₁(E_P) {:?}", pants.coordinates()?);
    Ok(())
}
