//! The fusion ring of the Drinfeld double next to the virtual product on BG.

use std::sync::Arc;

use orbik::drinfeld::DrinfeldDouble;
use orbik::group::builtin;
use orbik::product::product_table;
use orbik::{GroupContext, Orbifold};

fn main() -> orbik::Result<()> {
    for name in ["Z2", "S3", "D4", "Q8", "D5", "S4"] {
        let ctx = Arc::new(GroupContext::new(builtin(name)?));
        let double = DrinfeldDouble::new(ctx.clone(), None)?;
        let fusion = double.fusion_constants()?.canonicalize(&ctx)?;
        let virt = product_table(&Orbifold::classifying(ctx.clone()))?.canonicalize(&ctx)?;
        println!(
            "{name:>3}: {:>2} simples, orthonormal {}, {} mismatches",
            double.simples().len(),
            double.orthonormal(),
            virt.mismatches(&fusion)
        );
    }
    Ok(())
}
