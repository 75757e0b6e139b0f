//! Sector and pair-sector data for the standard representation of S3, as
//! the JSON report printed by `--cmd sectors`.

use std::sync::Arc;

use orbik::cli::resolve_rep;
use orbik::group::builtin;
use orbik::{GroupContext, Orbifold};

fn main() -> orbik::Result<()> {
    let ctx = Arc::new(GroupContext::new(builtin("S3")?));
    let v = resolve_rep(&ctx, "standard")?;
    let orb = Orbifold::new(ctx, v)?;
    for p in orb.all_pair_sectors()? {
        println!(
            "k={} g={} h={} |Z|={}  B={}  N={}  D={}",
            p.orbit.target, p.orbit.g, p.orbit.h, p.stabilizer.order(), p.b, p.n, p.d
        );
    }
    println!("{}", serde_json::to_string_pretty(&orb.report()?)?);
    Ok(())
}
