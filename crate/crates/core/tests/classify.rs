use omega_power::classify::{classify_report, g1, g2, g_search, gclass_report};
use omega_power::dict::FiniteDict;
use omega_power::engine::{equivalent, TopoClass};
use omega_power::oracle;
use omega_power::words::{w, Alphabet, Word};
use proptest::prelude::*;

fn finite_dict() -> impl Strategy<Value = FiniteDict> {
    prop::collection::vec(prop::collection::vec(0u8..2, 0..=4).prop_map(Word::new), 0..=4)
        .prop_map(|ws| FiniteDict::new(Alphabet::BINARY, ws).unwrap())
}

fn pair(a: &Word, b: &Word) -> FiniteDict {
    FiniteDict::new(Alphabet::BINARY, [a.clone(), b.clone()]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn classes_nest_and_witnesses_verify(d in finite_dict()) {
        let r = gclass_report(&d, 3).unwrap();
        prop_assert!(!r.g0 || r.g1);
        prop_assert!(!r.g1 || r.g2);
        if let Some(wit) = &r.g1_witness {
            let single = FiniteDict::new(Alphabet::BINARY, [wit.clone()]).unwrap();
            prop_assert!(equivalent(&single, &d).unwrap());
        }
        if let Some((a, b)) = &r.g2_witness {
            prop_assert!(equivalent(&pair(a, b), &d).unwrap());
        }
        if let Some(deeper) = &r.deeper {
            if let Some(ws) = &deeper.witness {
                let g = FiniteDict::new(Alphabet::BINARY, ws.iter().cloned()).unwrap();
                prop_assert!(equivalent(&g, &d).unwrap());
            }
        }
    }

    #[test]
    fn two_word_generators_are_member_prefixes(d in finite_dict()) {
        let (one, _) = g1(&d);
        if let (false, (true, Some((a, b)))) = (one, g2(&d).unwrap()) {
            let prefixes = d.nonempty().prefixes();
            prop_assert!(prefixes.contains(&a) && prefixes.contains(&b));
        }
    }
}

#[test]
fn one_word_decision_matches_search() {
    let pool: Vec<Word> = Alphabet::BINARY.words_up_to(3).into_iter().skip(1).collect();
    for d in oracle::dictionaries_from(Alphabet::BINARY, &pool, 3) {
        assert_eq!(g1(&d).0, oracle::g1_by_search(&d, 3), "{d}");
    }
}

#[test]
fn examples() {
    let fd = |ws: &[&str]| FiniteDict::binary(ws).unwrap();
    assert_eq!(g1(&fd(&["00", "0000"])), (true, Some(w("00"))));
    assert_eq!(g1(&fd(&["0", "111"])), (false, None));
    assert_eq!(g1(&fd(&[])), (true, Some(w("e"))));
    assert_eq!(g2(&fd(&["0", "01", "001"])).unwrap(), (true, Some((w("0"), w("01")))));
    assert_eq!(g2(&fd(&["0", "1"])).unwrap(), (true, Some((w("0"), w("1")))));
    assert_eq!(g2(&fd(&["001", "010", "100"])).unwrap(), (false, None));
    let s = g_search(&fd(&["001", "010", "100"]), 2).unwrap();
    assert!(!s.found && s.conclusive);
    assert!(g_search(&fd(&["00", "0000"]), 1).unwrap().found);
    let r = classify_report(&fd(&["e"])).unwrap();
    assert!(r.gclass.g0 && r.class == TopoClass::Empty);
    let r = classify_report(&fd(&["0"])).unwrap();
    assert!(r.gclass.g1 && r.class == TopoClass::ClosedNotOpen);
    let r = classify_report(&fd(&["0", "1"])).unwrap();
    assert!(r.gclass.g2 && r.class == TopoClass::Full);
}
