use omega_power::oracle::same_omega_word;
use omega_power::streams::{alpha0, Alpha0, Lasso, OmegaStream};
use omega_power::words::Word;
use proptest::prelude::*;

fn raw_lasso() -> impl Strategy<Value = (Word, Word)> {
    (
        prop::collection::vec(0u8..2, 0..5).prop_map(Word::new),
        prop::collection::vec(0u8..2, 1..5).prop_map(Word::new),
    )
}

fn raw_letter(head: &Word, cycle: &Word, k: usize) -> u8 {
    if k < head.len() {
        head.letters()[k]
    } else {
        cycle.letters()[(k - head.len()) % cycle.len()]
    }
}

proptest! {
    #[test]
    fn normal_form_denotes_the_same_word((u, v) in raw_lasso()) {
        let l = Lasso::new(u.clone(), v.clone()).unwrap();
        for k in 0..40 {
            prop_assert_eq!(l.letter(k), raw_letter(&u, &v, k));
        }
        prop_assert!(l.cycle().is_primitive());
        prop_assert!(l.head().len() <= u.len());
    }

    #[test]
    fn normal_form_is_idempotent((u, v) in raw_lasso()) {
        let l = Lasso::new(u, v).unwrap();
        prop_assert_eq!(Lasso::new(l.head().clone(), l.cycle().clone()).unwrap(), l.clone());
        prop_assert_eq!(l.to_string().parse::<Lasso>().unwrap(), l);
    }

    #[test]
    fn equal_iff_same_word((u1, v1) in raw_lasso(), (u2, v2) in raw_lasso()) {
        let a = Lasso::new(u1, v1).unwrap();
        let b = Lasso::new(u2, v2).unwrap();
        prop_assert_eq!(a == b, same_omega_word(&a, &b));
    }

    #[test]
    fn shifts_compose((u, v) in raw_lasso(), j in 0usize..10, k in 0usize..10) {
        let l = Lasso::new(u, v).unwrap();
        prop_assert_eq!(l.shift(j + k), l.shift(j).shift(k));
        for i in 0..20 {
            prop_assert_eq!(l.shift(j).letter(i), l.letter(i + j));
        }
    }

    #[test]
    fn classes_identify_equal_suffixes((u, v) in raw_lasso(), i in 0usize..20, j in 0usize..20) {
        let l = Lasso::new(u, v).unwrap();
        if l.class_of(i) == l.class_of(j) {
            prop_assert_eq!(l.shift(i), l.shift(j));
        }
        prop_assert!(l.class_of(i) < l.classes());
    }
}

#[test]
fn alpha0_runs_increase() {
    let p = alpha0().prefix(2000);
    let mut runs = Vec::new();
    let mut k = 0;
    while k < p.len() {
        assert_eq!(p.letters()[k], 1);
        let start = k + 1;
        k = start;
        while k < p.len() && p.letters()[k] == 0 {
            k += 1;
        }
        runs.push(k - start);
    }
    runs.pop();
    assert!(runs.iter().enumerate().all(|(i, &r)| r == i + 1));
    for b in 1..50u128 {
        let s = Alpha0::block_start(b);
        assert_eq!(Alpha0::block_at(s), (b, 0));
        assert_eq!(Alpha0::block_at(s + b), (b, b));
    }
}

#[test]
fn enumeration_is_canonical() {
    let all = Lasso::enumerate(omega_power::words::Alphabet::BINARY, 2, 3);
    for (i, a) in all.iter().enumerate() {
        for b in &all[i + 1..] {
            assert!(!same_omega_word(a, b), "{a} {b}");
        }
    }
}
