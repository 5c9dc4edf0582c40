//! Independent routes to the same quantity must agree.

use kmerwait::automata::{
    constrained_language_automaton, gf_from_clump_automaton, ClumpAutomaton, Language, EXACT_STATE_LIMIT,
};
use kmerwait::evolution::{
    asymptotics_exact, asymptotics_numeric, bnn_probability, bv_probability, clump_probability, expected_hits,
    ModelParams,
};
use kmerwait::gfcore::{rat, to_f64};
use kmerwait::languages::{clump_gf_language, clump_gf_language_pairwise, constrained_languages, LetterDistribution};
use kmerwait::oracle::exact_pn_tiny;
use kmerwait::words::neighbors_lex;
use kmerwait::{Alphabet, HitFilter, MutationType};

const TOYS: [&str; 5] = ["AAA", "ACC", "ACAC", "AACC", "AACA"];

#[test]
fn automaton_gf_equals_language_gf() {
    let a = Alphabet::binary();
    let nu = LetterDistribution::new(vec![rat(1, 3), rat(2, 3)]).unwrap();
    let mut checked = 0;
    for w in TOYS {
        let b = a.parse(w).unwrap();
        let ca = ClumpAutomaton::new(&b, &a).unwrap();
        if ca.len() > EXACT_STATE_LIMIT {
            assert!(gf_from_clump_automaton(&ca, &nu, HitFilter::Positions).is_err());
            continue;
        }
        checked += 1;
        for f in [HitFilter::Positions, HitFilter::Typed(MutationType { from: 0, to: 1 })] {
            let x = gf_from_clump_automaton(&ca, &nu, f).unwrap();
            let y = clump_gf_language(&b, &a, &nu, f).unwrap();
            assert_eq!(x, y, "{w} {f:?}");
        }
    }
    assert!(checked >= 2);
}

#[test]
fn constrained_languages_match_their_automata() {
    let a = Alphabet::binary();
    let nu = LetterDistribution::uniform(2);
    let w = vec![rat(1, 2); 2];
    for t in ["ACC", "AACA"] {
        let b = a.parse(t).unwrap();
        let set = neighbors_lex(&b, &a).unwrap();
        let (lang, _) = constrained_languages(&b, &a, &nu).unwrap();
        let n = constrained_language_automaton(&set, &b, 2, Language::Not).series(&w, 14);
        assert_eq!(lang.n.taylor_coeffs(&rat(1, 1), 14).unwrap(), n, "{t} N");
        for i in 0..set.len() {
            let r = constrained_language_automaton(&set, &b, 2, Language::Right(i)).series(&w, 14);
            assert_eq!(lang.r[i].taylor_coeffs(&rat(1, 1), 14).unwrap(), r, "{t} R{i}");
            for j in 0..set.len() {
                let m = constrained_language_automaton(&set, &b, 2, Language::Minimal(i, j)).series(&w, 14);
                assert_eq!(lang.m[(i, j)].taylor_coeffs(&rat(1, 1), 14).unwrap(), m, "{t} M{i}{j}");
            }
        }
    }
}

#[test]
fn pairwise_marking_overcounts_somewhere() {
    // the plain (I - K̄)^{-1} assembly double-counts a hit reached through two extensions
    let a = Alphabet::binary();
    let nu = LetterDistribution::uniform(2);
    let differs = TOYS.iter().any(|w| {
        let b = a.parse(w).unwrap();
        clump_gf_language_pairwise(&b, &a, &nu, HitFilter::Positions).unwrap()
            != clump_gf_language(&b, &a, &nu, HitFilter::Positions).unwrap()
    });
    assert!(differs);
}

#[test]
fn three_methods_agree_to_first_order() {
    let p = ModelParams::promoter();
    for w in ["ACGTA", "GATTACA", "CGCGCG"] {
        let b = p.alphabet.parse(w).unwrap();
        let x = bnn_probability(&b, 500, &p);
        let c = clump_probability(&b, 500, &p).unwrap();
        let v = bv_probability(&b, 500, &p);
        assert!(((c - x) / x).abs() < 1e-4, "{w}");
        // inclusion-exclusion ignores overlap; still the same order of magnitude
        assert!((v / x - 1.0).abs() < 0.5, "{w}");
    }
}

#[test]
fn enumeration_matches_product_automaton() {
    let base = ModelParams::binary_uniform().with_uniform_rate(&rat(1, 50));
    for w in ["AAA", "ACA", "AACC"] {
        let b = base.alphabet.parse(w).unwrap();
        for n in [w.len(), 7, 11] {
            let e = to_f64(&exact_pn_tiny(&b, n, &base).unwrap());
            let x = bnn_probability(&b, n, &base);
            assert!(((e - x) / e).abs() < 1e-12, "{w} n={n}: {e} {x}");
        }
    }
}

#[test]
fn clump_probability_is_first_order_expected_hits() {
    let p = ModelParams::binary_uniform();
    let b = p.alphabet.parse("ACAC").unwrap();
    let per_type: f64 = MutationType::all(2)
        .into_iter()
        .map(|t| to_f64(&expected_hits(&b, 40, &p.alphabet, &p.nu, HitFilter::Typed(t)).unwrap().conditioned) * p.rate(t))
        .sum();
    let c = clump_probability(&b, 40, &p).unwrap();
    assert!(((c - per_type) / c).abs() < 1e-12);
}

#[test]
fn numeric_and_exact_asymptotics_agree() {
    let p = ModelParams::binary_uniform();
    for w in ["AAA", "AACA"] {
        let b = p.alphabet.parse(w).unwrap();
        let e = asymptotics_exact(&b, &p).unwrap();
        let n = asymptotics_numeric(&b, &p).unwrap();
        assert!((e.tau - n.tau).abs() < 1e-10, "{w}");
        assert!((e.hits_c1 - n.hits_c1).abs() < 1e-8, "{w}");
        assert!((e.hits_c2 - n.hits_c2).abs() < 1e-6, "{w}");
    }
}
