//! Fixed subspaces and the graded Molien identity on every sector of a
//! representation of D4.

use std::sync::Arc;

use orbik::characters::molien_check;
use orbik::group::builtin;
use orbik::{ClassFunction, GroupContext, Orbifold};

fn main() -> orbik::Result<()> {
    let ctx = Arc::new(GroupContext::new(builtin("D4")?));
    let v = ClassFunction::from_multiplicities(ctx.whole(), &[0, 1, 0, 0, 1])?;
    let orb = Orbifold::new(ctx, v.clone())?;
    for s in orb.sectors() {
        let ok = molien_check(&v, s.rep, &s.centralizer, 12)?;
        println!(
            "[{}] |C| = {}  dim V^g = {}  V^g = {}  molien to degree 12: {ok}",
            s.rep,
            s.centralizer.order(),
            s.fixed_dim(),
            s.fixed
        );
    }
    Ok(())
}
