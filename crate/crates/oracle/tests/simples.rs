use std::sync::Arc;

use bilax_core::group::FiniteGroup;
use bilax_oracle::{enumerate_simples, fusion_law, fusion_table, is_elementary_abelian_2, simple_count};

#[test]
fn z2_has_four_simples_closing_like_the_klein_group() {
    let g = Arc::new(FiniteGroup::builtin("z2").unwrap());
    let simples = enumerate_simples(&g).unwrap();
    assert_eq!(simples.len(), 4);
    assert_eq!(simple_count(&g), 4);
    let law = fusion_law(&fusion_table(&simples)).expect("products of simples are simple");
    assert!(is_elementary_abelian_2(&law));
}

#[test]
fn klein_group_double_closes_like_an_elementary_2_group() {
    let g = Arc::new(FiniteGroup::builtin("z2xz2").unwrap());
    let simples = enumerate_simples(&g).unwrap();
    assert_eq!(simples.len(), 16);
    let law = fusion_law(&fusion_table(&simples)).unwrap();
    assert!(is_elementary_abelian_2(&law));
}

#[test]
fn cyclic_simples_have_one_dimensional_fibres() {
    for name in ["z3", "z4"] {
        let g = Arc::new(FiniteGroup::builtin(name).unwrap());
        for s in enumerate_simples(&g).unwrap() {
            assert_eq!(s.module.dim(), 1);
            assert_eq!(s.module.support().len(), 1);
        }
    }
}
