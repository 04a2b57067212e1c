use omega_power::dict::{DictionaryExpression, Expr, FiniteDict};
use omega_power::engine::{member_lasso, run_safety, SafetyAutomaton, SafetyRun};
use omega_power::oracle;
use omega_power::reductions::{
    alpha0_death_step, alpha0_rank, branch_check, encode_binary, is_alpha0_factor, phi_pf,
    phi_prime_member, phi_range, tree_dict, tree_ranges, FiniteTree, PhiWord,
};
use omega_power::streams::{alpha0, Lasso, OmegaStream};
use omega_power::words::{w, Alphabet, Word};
use proptest::prelude::*;

fn ternary_word(min: usize, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..3, min..=max).prop_map(Word::new)
}

fn ternary_expr() -> impl Strategy<Value = DictionaryExpression> {
    (
        prop::collection::vec(ternary_word(1, 3), 0..4),
        prop::collection::vec(ternary_word(1, 2), 0..2),
    )
        .prop_map(|(fin, ext)| {
            let mut parts = vec![Expr::finite(fin)];
            parts.extend(ext.into_iter().map(Expr::Ext));
            DictionaryExpression::new(Alphabet::new(3).unwrap(), Expr::union(parts)).unwrap()
        })
}

/// Letters the φ-words of `t` would occupy, when small enough to build.
fn materialized_size(t: &FiniteTree) -> Option<u128> {
    let ranges = tree_ranges(t).ok()?;
    let total: u128 = ranges.iter().map(PhiWord::len).sum();
    (total <= 1 << 14).then_some(total)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn encoding_preserves_membership(d in ternary_expr(), u in ternary_word(0, 2), v in ternary_word(1, 3)) {
        let alpha = Lasso::new(u, v).unwrap();
        let (b, code) = encode_binary(&d).unwrap();
        prop_assert_eq!(member_lasso(&d, &alpha), member_lasso(&b, &code.lasso(&alpha)));
    }

    #[test]
    fn phi_pf_gives_antichain_codes(gamma in prop::collection::vec(0u8..2, 0..10)) {
        let d = phi_pf(&gamma);
        prop_assert!(d.is_antichain());
        prop_assert!(d.is_code().unwrap());
        prop_assert_eq!(d.len(), gamma.iter().filter(|&&g| g == 1).count());
    }

    #[test]
    fn branches_always_align(gamma in prop::collection::vec(0u32..4, 0..4), len in 0usize..4) {
        prop_assert!(branch_check(&gamma, len.min(gamma.len())).unwrap());
    }

    #[test]
    fn factor_test_matches_search(s in prop::collection::vec(0u8..2, 0..12).prop_map(Word::new)) {
        let hay = alpha0().prefix(400);
        let found = (0..hay.len() - s.len()).any(|k| &hay.letters()[k..k + s.len()] == s.letters());
        prop_assert_eq!(is_alpha0_factor(&s), found);
    }
}

#[test]
fn death_step_matches_letter_runs() {
    for t in FiniteTree::enumerate(6, 4) {
        if materialized_size(&t).is_none() {
            continue;
        }
        let d = tree_dict(&t).unwrap();
        let sa = SafetyAutomaton::build(&d).unwrap();
        let k = alpha0_death_step(&t).unwrap();
        assert_eq!(run_safety(&sa, &alpha0(), k as usize + 10), SafetyRun::Dead(k as usize), "{t}");
    }
}

#[test]
fn alpha0_rank_matches_search() {
    for t in FiniteTree::enumerate(6, 4) {
        if materialized_size(&t).is_none() {
            continue;
        }
        let d = tree_dict(&t).unwrap();
        let prefix = alpha0_death_step(&t).unwrap() as usize + d.max_len() + 1;
        let r = alpha0_rank(&t).unwrap();
        assert_eq!(r, oracle::alpha0_rank_by_search(&d, prefix), "{t}");
        assert!(t.rank() <= r, "{t}");
    }
}

#[test]
fn tree_examples() {
    let t = |s: &str| s.parse::<FiniteTree>().unwrap();
    assert_eq!(alpha0_rank(&t("()")).unwrap(), 2);
    assert_eq!(alpha0_rank(&FiniteTree::empty()).unwrap(), 1);
    assert!(alpha0_rank(&t("()\n0")).unwrap() >= 2);
    assert_eq!(alpha0_death_step(&t("()")).unwrap(), 8);
    assert_eq!(alpha0_death_step(&FiniteTree::empty()).unwrap(), 0);
    assert_eq!(phi_range(&[]).unwrap(), PhiWord { lo: 1, hi: 2 });
}

#[test]
fn phi_prime_examples() {
    let t: FiniteTree = "()".parse().unwrap();
    assert!(phi_prime_member(&t, &w("0110")).unwrap());
    assert!(phi_prime_member(&t, &w("10100")).unwrap());
    assert!(!phi_prime_member(&t, &w("1010")).unwrap());
    assert_eq!(phi_pf(&[1, 0, 1]), FiniteDict::binary(&["1", "001"]).unwrap());
    assert!(phi_pf(&[0, 0]).is_empty());
}
