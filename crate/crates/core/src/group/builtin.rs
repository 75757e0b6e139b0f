use super::FiniteGroup;
use crate::error::{Error, Result};

/// `Z/n` acting on `n` points by rotation.
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::Input("cyclic group of order 0".into()));
    }
    if n == 1 {
        return Ok(FiniteGroup::trivial());
    }
    FiniteGroup::from_permutations(n, &[(0..n).map(|i| (i + 1) % n).collect()])
}

/// Symmetry group of a regular `n`-gon, of order `2n`.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 3 {
        return Err(Error::Input(format!("dihedral group needs n >= 3, got {n}")));
    }
    let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    FiniteGroup::from_permutations(n, &[rotation, reflection])
}

/// `S_n` for `n <= 5`.
pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    if n == 0 || n > 5 {
        return Err(Error::Input(format!("symmetric group needs 1 <= n <= 5, got {n}")));
    }
    if n == 1 {
        return FiniteGroup::from_permutations(1, &[]);
    }
    let transposition: Vec<usize> = (0..n)
        .map(|i| match i {
            0 => 1,
            1 => 0,
            _ => i,
        })
        .collect();
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    FiniteGroup::from_permutations(n, &[transposition, cycle])
}

/// The quaternion group `{±1, ±i, ±j, ±k}` by explicit Cayley table.
///
/// Index layout: `0 = 1, 1 = -1, 2 = i, 3 = -i, 4 = j, 5 = -j, 6 = k, 7 = -k`.
pub fn quaternion8() -> FiniteGroup {
    // unit products on {1, i, j, k} as (sign, unit)
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let table: Vec<Vec<usize>> = (0..8)
        .map(|a| {
            (0..8)
                .map(|b| {
                    let (sa, ua) = (a % 2 == 1, a / 2);
                    let (sb, ub) = (b % 2 == 1, b / 2);
                    let (s, u) = UNIT[ua][ub];
                    2 * u + usize::from(sa ^ sb ^ s)
                })
                .collect()
        })
        .collect();
    FiniteGroup::from_cayley_table(&table).expect("quaternion table is a group")
}

/// Resolve a builtin name: `trivial`, `cyclic:N` (or `ZN`), `dihedral:N`
/// (or `DN`, the symmetries of an `N`-gon), `symmetric:N` (or `SN`),
/// `quaternion8` (or `Q8`).
pub fn builtin(name: &str) -> Result<FiniteGroup> {
    let lower = name.trim().to_ascii_lowercase();
    let num = |s: &str| -> Result<usize> {
        s.parse()
            .map_err(|_| Error::Parse(format!("bad builtin group {name:?}")))
    };
    if lower == "trivial" {
        return Ok(FiniteGroup::trivial());
    }
    if lower == "quaternion8" || lower == "q8" {
        return Ok(quaternion8());
    }
    if let Some((family, n)) = lower.split_once(':') {
        let n = num(n)?;
        return match family {
            "cyclic" => cyclic(n),
            "dihedral" => dihedral(n),
            "symmetric" => symmetric(n),
            _ => Err(Error::Parse(format!("unknown builtin group {name:?}"))),
        };
    }
    let (head, tail) = lower.split_at(1);
    match head {
        "z" | "c" => cyclic(num(tail)?),
        "d" => dihedral(num(tail)?),
        "s" => symmetric(num(tail)?),
        _ => Err(Error::Parse(format!("unknown builtin group {name:?}"))),
    }
}
