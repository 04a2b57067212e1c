use omega_power::dict::{parse_dictionary, DictionaryExpression, Expr, FiniteDict};
use omega_power::words::{w, Alphabet, Word};
use proptest::prelude::*;

fn word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..2, 0..=max).prop_map(Word::new)
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        prop::collection::vec(word(3), 0..3).prop_map(Expr::finite),
        word(2).prop_map(Expr::Ext),
        (0u8..2).prop_map(Expr::Letter),
        Just(Expr::Epsilon),
    ];
    leaf.prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 1..3).prop_map(Expr::Concat),
            prop::collection::vec(inner.clone(), 1..3).prop_map(Expr::union),
            inner.clone().prop_map(Expr::star),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::diff(a, b)),
        ]
    })
}

fn finite_dict(max_len: usize, max_words: usize) -> impl Strategy<Value = FiniteDict> {
    prop::collection::vec(word(max_len), 0..=max_words)
        .prop_map(|ws| FiniteDict::new(Alphabet::BINARY, ws).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn compiled_matches_structural(e in expr()) {
        let d = DictionaryExpression::binary(e).unwrap();
        let a = d.compile();
        for s in Alphabet::BINARY.words_up_to(7) {
            prop_assert_eq!(a.accepts(&s), d.expr().matches(s.letters()), "{} on {}", d.expr(), s);
        }
    }

    #[test]
    fn finite_languages_are_recovered(d in finite_dict(4, 5)) {
        let e = DictionaryExpression::from(&d);
        prop_assert_eq!(e.to_finite().unwrap(), d.clone());
        let text = d.to_file_string("main");
        prop_assert_eq!(parse_dictionary(&text).unwrap().to_finite().unwrap(), d);
    }

    #[test]
    fn expressions_round_trip_through_text(e in expr()) {
        let d = DictionaryExpression::binary(e).unwrap();
        let text = format!("alphabet 2\nmain = {}\n", d.expr());
        let back = parse_dictionary(&text).unwrap();
        for s in Alphabet::BINARY.words_up_to(6) {
            prop_assert_eq!(back.contains(&s), d.contains(&s), "{}", text);
        }
    }

    #[test]
    fn chains_partition_the_dictionary(d in finite_dict(4, 6)) {
        let parts = d.chain_decomposition();
        let mut all: Vec<Word> = parts.iter().flatten().cloned().collect();
        all.sort();
        let total = all.len();
        all.dedup();
        prop_assert_eq!(total, all.len());
        prop_assert_eq!(all.into_iter().collect::<std::collections::BTreeSet<_>>(), d.words().clone());
        for part in &parts {
            let v: Vec<&Word> = part.iter().collect();
            for i in 0..v.len() {
                for j in i + 1..v.len() {
                    prop_assert!(v[i].is_compatible(v[j]));
                }
            }
        }
        if d.is_antichain() {
            prop_assert_eq!(parts.len(), d.len());
            prop_assert!(parts.iter().all(|p| p.len() == 1));
        }
    }
}

#[test]
fn non_commuting_pairs_are_codes() {
    let words: Vec<Word> = Alphabet::BINARY.words_up_to(5).into_iter().skip(1).collect();
    for (i, s1) in words.iter().enumerate() {
        for s2 in &words[i + 1..] {
            let d = FiniteDict::new(Alphabet::BINARY, [s1.clone(), s2.clone()]).unwrap();
            assert_eq!(d.is_code().unwrap(), !s1.commutes(s2), "{s1} {s2}");
        }
    }
}

#[test]
fn code_test_examples() {
    let fd = |ws: &[&str]| FiniteDict::binary(ws).unwrap();
    assert!(fd(&["0", "01", "11"]).is_code().unwrap());
    assert!(!fd(&["0", "01", "10"]).is_code().unwrap());
    assert!(fd(&["e", "0"]).is_code().is_err());
    assert!(fd(&[]).is_code().unwrap());
}

#[test]
fn parse_errors_carry_lines() {
    let err = parse_dictionary("alphabet 2\nmain = {0, 2}\n").unwrap_err();
    assert!(err.to_string().contains('2'));
    assert!(parse_dictionary("alphabet 2\nmain = ext(\n").is_err());
    assert!(parse_dictionary("alphabet 1\n").is_err());
    assert!(parse_dictionary("main = undefined_name\n").is_err());
    let d = parse_dictionary("alphabet 3\nX = {2}\nmain = X | ext(01)\n").unwrap();
    assert!(d.contains(&w("2")) && d.contains(&w("0122")) && !d.contains(&w("02")));
}
