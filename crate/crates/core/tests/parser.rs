use proptest::prelude::*;
use tvsat::engine::{KnotExpr, PatternId};
use tvsat::Error;

fn pattern() -> impl Strategy<Value = PatternId> {
    prop_oneof![
        (-5i64..=5).prop_map(PatternId::D),
        Just(PatternId::Meridian),
        Just(PatternId::F10),
        Just(PatternId::P21),
        Just(PatternId::P31),
        Just(PatternId::T31),
    ]
}

fn knot() -> impl Strategy<Value = KnotExpr> {
    Just(KnotExpr::Unknot).prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (any::<i64>(), inner.clone()).prop_map(|(k, c)| KnotExpr::double(k, c)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| KnotExpr::sum(a, b)),
            (inner, pattern()).prop_map(|(c, p)| KnotExpr::sat(c, p)),
        ]
    })
}

/// Inserts whitespace after every token boundary the grammar allows.
fn spaced(text: &str) -> String {
    text.chars().flat_map(|ch| if "(),".contains(ch) { vec![' ', ch, ' '] } else { vec![ch] }).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn canonical_form_round_trips(k in knot()) {
        let text = k.to_string();
        let back = KnotExpr::parse(&text).unwrap();
        prop_assert_eq!(&back, &k);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn whitespace_is_insignificant(k in knot()) {
        prop_assert_eq!(KnotExpr::parse(&spaced(&k.to_string())).unwrap(), k);
    }

    #[test]
    fn arbitrary_text_never_panics(s in "\\PC{0,40}") {
        let _ = KnotExpr::parse(&s);
    }

    #[test]
    fn grammar_alphabet_never_panics(s in "[UMERFTPD0-9a-z(), -]{0,40}") {
        if let Err(e) = KnotExpr::parse(&s) {
            let expected = matches!(e, Error::Syntax { .. } | Error::UnknownPattern(_));
            prop_assert!(expected, "unexpected error kind: {}", e);
        }
    }

    #[test]
    fn truncations_are_rejected(k in knot(), cut in any::<prop::sample::Index>()) {
        let text = k.to_string();
        let n = cut.index(text.len());
        prop_assume!(n > 0 && n < text.len());
        let prefix = &text[..n];
        // a prefix can only parse if it is itself a complete knot
        if let Ok(short) = KnotExpr::parse(prefix) {
            prop_assert_eq!(short.to_string(), prefix);
        }
    }
}

#[test]
fn error_offsets() {
    match KnotExpr::parse("sum(U,V)") {
        Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 6),
        other => panic!("{other:?}"),
    }
    assert!(matches!(KnotExpr::parse("sat(U,P99)"), Err(Error::UnknownPattern(_))));
    assert!(matches!(KnotExpr::parse("double(99999999999999999999,U)"), Err(Error::Syntax { .. })));
    assert!(KnotExpr::parse("").is_err());
}
