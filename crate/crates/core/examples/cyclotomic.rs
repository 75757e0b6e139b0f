//! Exact arithmetic in cyclotomic fields.

use orbik::Cyclotomic;

fn main() -> orbik::Result<()> {
    let w: Cyclotomic = "E(3)".parse()?;
    println!("w + w^2 = {}", &w + &w.pow(2));
    println!("1 / (1 - w) = {}", (Cyclotomic::one() - &w).inv()?);

    let s: Cyclotomic = "E(8) + E(8)^-1".parse()?;
    println!("s^2 = {}", &s * &s);
    println!("s under ζ ↦ ζ^3: {}", s.galois_twist(3)?);
    println!("conductor of E(12)^4: {}", "E(12)^4".parse::<Cyclotomic>()?.conductor());
    Ok(())
}
