use std::collections::HashSet;

use crate::words::{Word, WordSet};

use super::{kmp_avoiding, Dfa};

/// The four languages attached to a reduced set `V`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Language {
    /// Texts with no occurrence of `V`.
    Not,
    /// Texts whose only occurrence of `V` is `v_j`, at the end.
    Right(usize),
    /// Words `w` such that `v_i w` ends with `v_j` and has exactly two occurrences.
    Minimal(usize, usize),
    /// Words `u` such that `v_i u` has exactly one occurrence.
    Ultimate(usize),
}

pub(crate) fn prefixes(words: &[Word]) -> HashSet<Vec<u8>> {
    let mut p = HashSet::new();
    for w in words {
        for l in 0..=w.len() {
            p.insert(w.letters()[..l].to_vec());
        }
    }
    p
}

/// Longest suffix of `s` that lies in `pref`.
pub(crate) fn longest_suffix_in(pref: &HashSet<Vec<u8>>, s: &[u8]) -> Vec<u8> {
    (0..=s.len()).map(|x| &s[x..]).find(|t| pref.contains(*t)).unwrap_or(&[]).to_vec()
}

/// Recogniser of one language of `V`. Occurrences are counted with an Aho-Corasick style
/// automaton on `Pref(V)`; for `Minimal` and `Ultimate` the run starts after `v_i`.
pub fn language_automaton(set: &WordSet, sigma: usize, lang: Language) -> Dfa {
    let words = set.members();
    let pref = prefixes(words);
    let hits = |s: &[u8]| words.iter().any(|v| s.ends_with(v.letters())) as u8;
    let init = match lang {
        Language::Minimal(i, _) | Language::Ultimate(i) => {
            let v = words[i].letters();
            (longest_suffix_in(&pref, v), 1u8)
        }
        _ => (Vec::new(), 0u8),
    };
    Dfa::from_step(
        sigma,
        init,
        |(s, c), a| {
            let mut sa = s.clone();
            sa.push(a);
            let next = longest_suffix_in(&pref, &sa);
            let c = (c + hits(&next)).min(3);
            Some((next, c))
        },
        |(s, c)| match lang {
            Language::Not => *c == 0,
            Language::Right(j) => *c == 1 && s.ends_with(words[j].letters()),
            Language::Minimal(_, j) => *c == 2 && s.ends_with(words[j].letters()),
            Language::Ultimate(_) => *c == 1,
        },
        |(s, c)| format!("{}:{c}", s.iter().map(|x| x.to_string()).collect::<String>()),
    )
}

/// The same language restricted to texts (for `Minimal`/`Ultimate`, to `v_i`-extensions)
/// avoiding `b`, realised as a product with the complement of the `b` recogniser.
pub fn constrained_language_automaton(set: &WordSet, b: &Word, sigma: usize, lang: Language) -> Dfa {
    let l = language_automaton(set, sigma, lang);
    let avoid = kmp_avoiding(b, sigma);
    let avoid = match lang {
        Language::Minimal(i, _) | Language::Ultimate(i) => {
            let q = avoid.run(set.get(i).letters()).unwrap();
            avoid.restart(q)
        }
        _ => avoid,
    };
    // the b recogniser is absorbing, so a final pair needs b never read
    Dfa::product(&l, &avoid, |x, y| x && y)
}
