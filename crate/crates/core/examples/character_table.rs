//! Character tables of the builtin groups, and a cross-check against a
//! brute-force decomposition of tensor products.

use std::sync::Arc;

use orbik::characters::oracle::tensor_reduce_table;
use orbik::group::builtin;
use orbik::GroupContext;

fn main() -> orbik::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "S4".into());
    let ctx = Arc::new(GroupContext::new(builtin(&name)?));
    let table = ctx.whole().character_table()?;
    println!("{name}: order {}, {} classes", table.order(), table.num_irreducibles());
    println!("class sizes    {:?}", table.class_sizes());
    println!("element orders {:?}", table.element_orders());
    for row in table.rows() {
        let cells: Vec<String> = row.iter().map(|v| format!("{:>8}", v.to_string())).collect();
        println!("{}", cells.join(""));
    }
    let oracle = tensor_reduce_table(ctx.whole())?;
    println!("matches tensor reduction: {}", oracle == *table);
    Ok(())
}
