use std::sync::Arc;

use orbik::drinfeld::{double_simples, fusion_constants, DrinfeldDouble};
use orbik::group::builtin;
use orbik::product::ring_property_check;
use orbik::{ClassFunction, Cyclotomic, GroupContext};

fn ctx(name: &str) -> Arc<GroupContext> {
    Arc::new(GroupContext::new(builtin(name).unwrap()))
}

/// Orbits of conjugation on commuting pairs, by Burnside: commuting triples / |G|.
fn commuting_triples_over_order(c: &GroupContext) -> usize {
    let g = c.group();
    let n = g.order();
    let mut triples = 0;
    for a in 0..n {
        for b in 0..n {
            if !g.commute(a, b) {
                continue;
            }
            triples += (0..n).filter(|&x| g.commute(a, x) && g.commute(b, x)).count();
        }
    }
    assert_eq!(triples % n, 0);
    triples / n
}

#[test]
fn simple_counts() {
    for (name, expect) in [("trivial", 1), ("Z2", 4), ("Z5", 25), ("S3", 8), ("D4", 22), ("Q8", 22), ("S4", 21), ("D5", 16)] {
        let c = ctx(name);
        let n = double_simples(&c).unwrap().len();
        assert_eq!(n, expect, "{name}");
        assert_eq!(n, commuting_triples_over_order(&c), "{name}");
    }
}

#[test]
fn dimensions_square_to_the_order_of_the_double() {
    for name in ["S3", "D4", "Q8", "S4"] {
        let c = ctx(name);
        let d = DrinfeldDouble::new(c.clone(), None).unwrap();
        let total: i64 = (0..d.simples().len()).map(|i| d.dimension(i).pow(2)).sum();
        assert_eq!(total as usize, c.order() * c.order(), "{name}");
    }
}

#[test]
fn abelian_characters_are_products() {
    let c = ctx("Z4");
    let d = DrinfeldDouble::new(c.clone(), Some(5)).unwrap();
    for (i, s) in d.simples().iter().enumerate() {
        let chi = ClassFunction::irreducible(c.whole(), s.irrep).unwrap();
        for x in 0..4 {
            assert_eq!(d.value(i, s.rep, x), chi.value_at(x));
            for a in (0..4).filter(|&a| a != s.rep) {
                assert!(d.value(i, a, x).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn unit_object_and_ring_axioms() {
    for name in ["Z3", "S3", "D4", "Q8"] {
        let c = ctx(name);
        let d = DrinfeldDouble::new(c.clone(), None).unwrap();
        assert!(d.orthonormal());
        let t = d.fusion_constants().unwrap();
        assert_eq!(t.unit_index(), Some(0));
        assert!(ring_property_check(&t).passed(), "{name}");
        assert!(d.dimension_homomorphism(&t));
        let unit_values = d.character(0);
        for (&(a, _), v) in d.commuting_pairs().iter().zip(unit_values) {
            assert_eq!(v, &Cyclotomic::from_int(i64::from(a == 0)));
        }
    }
}

#[test]
fn s3_transposition_sign_value() {
    let c = ctx("S3");
    let d = DrinfeldDouble::new(c.clone(), None).unwrap();
    let t = c.class_rep(1);
    let i = d
        .simples()
        .iter()
        .position(|s| s.class == 1 && s.irrep == 1)
        .unwrap();
    assert_eq!(d.value(i, t, t), Some(&Cyclotomic::from_int(-1)));
    assert_eq!(d.value(i, t, 0), Some(&Cyclotomic::one()));
    assert_eq!(d.value(i, t, c.class_rep(2)), None);
}

#[test]
fn z2_fusion_rules() {
    let t = fusion_constants(&ctx("Z2"), None).unwrap();
    // Z2 × Z2 as a group: every simple squares to the unit
    for i in 0..4 {
        for j in 0..4 {
            let row: Vec<i64> = (0..4).map(|k| t.get(i, j, k)).collect();
            assert_eq!(row.iter().sum::<i64>(), 1);
        }
        assert_eq!(t.get(i, i, 0), 1);
    }
}

#[test]
fn transversal_choice_does_not_matter() {
    for name in ["S3", "D4", "Q8", "D5"] {
        let c = ctx(name);
        let base = fusion_constants(&c, None).unwrap();
        for seed in [1, 2, 77] {
            let seeded = Arc::new(GroupContext::with_seed(builtin(name).unwrap(), Some(seed)));
            assert_eq!(fusion_constants(&seeded, Some(seed)).unwrap(), base, "{name} seed {seed}");
        }
    }
}
