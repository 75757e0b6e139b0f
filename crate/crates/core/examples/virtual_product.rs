//! The virtual product on (Z/2, sign) and on (S3, standard): a few products
//! by hand, then the full table and its ring axioms.

use std::sync::Arc;

use orbik::cli::resolve_rep;
use orbik::group::builtin;
use orbik::inertia::InertiaClass;
use orbik::product::{product_table, ring_property_check, virtual_product};
use orbik::{GroupContext, Orbifold};

fn main() -> orbik::Result<()> {
    let ctx = Arc::new(GroupContext::new(builtin("Z2")?));
    let v = resolve_rep(&ctx, "sign")?;
    let orb = Orbifold::new(ctx, v)?;
    let x = InertiaClass::basis(&orb, 1, 0)?;
    let sq = virtual_product(&orb, &x, &x)?;
    println!("Z2, sign: (1 at [σ])² = {:?} at [e] in irreducibles", sq.component(0).multiplicities()?);

    for name in ["Z2", "S3"] {
        let ctx = Arc::new(GroupContext::new(builtin(name)?));
        let v = resolve_rep(&ctx, if name == "Z2" { "sign" } else { "standard" })?;
        let orb = Orbifold::new(ctx, v)?;
        let table = product_table(&orb)?;
        print!("{}", table.render_text());
        let report = ring_property_check(&table);
        println!("{name}: {} basis elements, ring axioms hold: {}\n", report.basis_size, report.passed());
    }
    Ok(())
}
