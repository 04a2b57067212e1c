use omega_power::corpus::{a_p_source, a_p_witness};
use omega_power::dict::{parse_dictionary, DictionaryExpression, FiniteDict};
use omega_power::engine::member_lasso;
use omega_power::rank::{e_level, rank_lasso, rank_summary, PositionGraph, RankResult, RankSummary};
use omega_power::streams::{lasso, Lasso};
use omega_power::words::{Alphabet, Word};
use proptest::prelude::*;

fn word(min: usize, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..2, min..=max).prop_map(Word::new)
}

fn dict() -> impl Strategy<Value = DictionaryExpression> {
    prop::collection::vec(word(0, 4), 0..=4).prop_map(|ws| {
        DictionaryExpression::from(&FiniteDict::new(Alphabet::BINARY, ws).unwrap())
    })
}

fn any_lasso() -> impl Strategy<Value = Lasso> {
    (word(0, 5), word(1, 3)).prop_map(|(u, v)| Lasso::new(u, v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(192))]

    #[test]
    fn member_iff_no_rank(d in dict(), alpha in any_lasso()) {
        prop_assert_eq!(rank_lasso(&d, &alpha) == RankResult::Member, member_lasso(&d, &alpha));
    }

    #[test]
    fn levels_stratify_rank(d in dict(), alpha in any_lasso()) {
        if let RankResult::Rank(r) = rank_lasso(&d, &alpha) {
            for k in 0..=6 {
                prop_assert_eq!(r <= k + 1, e_level(&d, &alpha, k), "rank {} level {}", r, k);
            }
        } else {
            for k in 0..=6 {
                prop_assert!(!e_level(&d, &alpha, k));
            }
        }
    }

    #[test]
    fn rank_drops_along_edges(d in dict(), alpha in any_lasso()) {
        let g = PositionGraph::build(&d, &alpha);
        if let RankResult::Rank(r) = g.rank() {
            for &(_, len) in g.edges(0) {
                match rank_lasso(&d, &alpha.shift(len)) {
                    RankResult::Rank(s) => prop_assert!(s < r),
                    RankResult::Member => prop_assert!(false, "shift became a member"),
                }
            }
        }
    }
}

#[test]
fn rank_family() {
    for p in 1..=6 {
        let d = parse_dictionary(&a_p_source(p)).unwrap();
        assert_eq!(rank_lasso(&d, &a_p_witness(p)), RankResult::Rank(p), "p = {p}");
    }
}

#[test]
fn removing_a_redundant_word_lowers_rank() {
    let a = parse_dictionary(&a_p_source(2)).unwrap();
    let b = parse_dictionary("main = ext(1) | ext(001) | ext(00001) | ext(00000)").unwrap();
    assert_eq!(rank_lasso(&a, &lasso("000(1)")), RankResult::Rank(2));
    assert_eq!(rank_lasso(&b, &lasso("000(1)")), RankResult::Rank(1));
    for alpha in Lasso::enumerate_total(Alphabet::BINARY, 8) {
        assert_eq!(member_lasso(&a, &alpha), member_lasso(&b, &alpha), "{alpha}");
    }
}

#[test]
fn summaries() {
    let fd = |ws: &[&str]| FiniteDict::binary(ws).unwrap();
    assert_eq!(rank_summary(&fd(&["0", "1"])).unwrap(), RankSummary::Zero);
    assert_eq!(rank_summary(&fd(&["e"])).unwrap(), RankSummary::One);
    assert_eq!(rank_summary(&fd(&["0"])).unwrap(), RankSummary::Omega);
    match rank_summary(&fd(&["0", "01", "11", "111"])).unwrap() {
        RankSummary::FiniteClopen(r) => assert!(r >= 1),
        other => panic!("{other:?}"),
    }
}
