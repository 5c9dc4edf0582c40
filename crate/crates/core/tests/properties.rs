use proptest::prelude::*;

use kmerwait::automata::{kmp_automaton, ClumpAutomaton};
use kmerwait::words::{correlation_set, count_hits, minimal_period};
use kmerwait::{Alphabet, HitFilter, MutationType, Word};

fn binary_word(min: usize, max: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..2, min..=max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn clump_marks_count_hits(b in binary_word(2, 5), text in binary_word(0, 40)) {
        let a = Alphabet::binary();
        let b = Word::from_indices(b);
        let ca = ClumpAutomaton::new(&b, &a).unwrap();
        let f = HitFilter::Typed(MutationType { from: 1, to: 0 });
        let mut q = Some(ca.dfa.initial);
        let (mut pos, mut typed) = (0, 0);
        for &x in &text {
            let Some(s) = q else { break };
            pos += ca.mark(s, x, HitFilter::Positions) as usize;
            typed += ca.mark(s, x, f) as usize;
            q = ca.dfa.step(s, x);
        }
        let contains = text.windows(b.len()).any(|w| w == b.letters());
        prop_assert_eq!(q.is_none(), contains);
        if !contains {
            prop_assert_eq!(pos, count_hits(&text, b.letters(), HitFilter::Positions));
            prop_assert_eq!(typed, count_hits(&text, b.letters(), f));
        }
    }

    #[test]
    fn kmp_detects_first_occurrence(b in prop::collection::vec(0u8..4, 1..6), text in prop::collection::vec(0u8..4, 0..60)) {
        let b = Word::from_indices(b);
        let d = kmp_automaton(&b, 4);
        let mut q = d.initial;
        for (i, &x) in text.iter().enumerate() {
            q = d.step(q, x).unwrap();
            let seen = i + 1 >= b.len() && text[..=i].windows(b.len()).any(|w| w == b.letters());
            prop_assert_eq!(d.finals[q], seen);
        }
    }

    #[test]
    fn correlations_are_overlaps(u in binary_word(1, 7), v in binary_word(1, 7)) {
        let (u, v) = (Word::from_indices(u), Word::from_indices(v));
        for e in correlation_set(&u, &v) {
            let uv = u.concat(&e);
            prop_assert!(uv.ends_with(&v));
            prop_assert!(e.len() < v.len() || (e.len() == v.len() && e.is_empty()));
        }
    }

    #[test]
    fn period_divides_self_overlap(b in binary_word(1, 10)) {
        let b = Word::from_indices(b);
        let p = minimal_period(&b);
        prop_assert!(p >= 1 && p <= b.len());
        let l = b.letters();
        prop_assert!((p..l.len()).all(|i| l[i] == l[i - p]));
    }
}
