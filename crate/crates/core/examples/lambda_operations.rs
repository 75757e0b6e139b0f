//! Adams operations, exterior and symmetric powers, and λ₋₁ on the standard
//! representation of S4.

use std::sync::Arc;

use orbik::cli::resolve_rep;
use orbik::group::builtin;
use orbik::GroupContext;

fn main() -> orbik::Result<()> {
    let ctx = Arc::new(GroupContext::new(builtin("S4")?));
    let std = resolve_rep(&ctx, "standard")?;
    println!("V        {std}");
    println!("ψ²V      {}", std.adams(2));
    println!("ψ³V      {}", std.adams(3));
    for i in 0..=3 {
        println!("Λ^{i}V     {}", std.exterior_power(i)?);
    }
    println!("Sym²V    {}", std.symmetric_power(2)?);
    println!("λ₋₁(V^∨) {}", std.lambda_minus_one_dual()?);
    println!("Sym²V = {:?} in irreducibles", std.symmetric_power(2)?.multiplicities()?);
    Ok(())
}
