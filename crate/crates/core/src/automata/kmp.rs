use crate::words::Word;

use super::Dfa;

fn failure(b: &[u8]) -> Vec<usize> {
    let mut f = vec![0; b.len() + 1];
    let mut k = 0;
    for q in 1..b.len() {
        while k > 0 && b[q] != b[k] {
            k = f[k];
        }
        if b[q] == b[k] {
            k += 1;
        }
        f[q + 1] = k;
    }
    f
}

/// Automaton of `A* b A*`: state `q` is the length of the longest prefix of `b` that is a
/// suffix of the input, state `k` is absorbing and final.
pub fn kmp_automaton(b: &Word, sigma: usize) -> Dfa {
    let l = b.letters();
    let k = l.len();
    let f = failure(l);
    let mut delta = vec![vec![Some(0); sigma]; k + 1];
    for q in 0..=k {
        for a in 0..sigma as u8 {
            delta[q][a as usize] = Some(if q == k {
                k
            } else if l[q] == a {
                q + 1
            } else if q == 0 {
                0
            } else {
                delta[f[q]][a as usize].unwrap()
            });
        }
    }
    let labels = (0..=k).map(|q| q.to_string()).collect();
    let finals = (0..=k).map(|q| q == k).collect();
    Dfa { sigma, delta, initial: 0, finals, labels }
}

/// Complement of [`kmp_automaton`]: finals `{0..k-1}`.
pub fn kmp_avoiding(b: &Word, sigma: usize) -> Dfa {
    kmp_automaton(b, sigma).complement()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Alphabet;

    #[test]
    fn textbook_transitions() {
        let a = Alphabet::binary();
        let k = kmp_automaton(&a.parse("AAA").unwrap(), 2);
        assert_eq!(k.step(2, 0), Some(3));
        assert_eq!(k.step(2, 1), Some(0));
        assert_eq!(k.step(3, 0), Some(3));
        assert_eq!(k.step(3, 1), Some(3));
        let k = kmp_automaton(&a.parse("ACC").unwrap(), 2);
        assert_eq!(k.step(1, 0), Some(1));
    }

    #[test]
    fn state_is_longest_prefix_suffix() {
        let a = Alphabet::binary();
        for s in ["AAA", "ACC", "ACAC", "AACA", "ACCAC"] {
            let b = a.parse(s).unwrap();
            let k = kmp_automaton(&b, 2);
            for n in 0..=12 {
                for w in a.words(n) {
                    let q = k.run(w.letters()).unwrap();
                    assert_eq!(k.accepts(w.letters()), w.contains(&b));
                    if !w.contains(&b) {
                        let expect = (0..b.len()).rev().find(|&l| w.ends_with(&b.prefix(l))).unwrap();
                        assert_eq!(q, expect);
                    }
                }
            }
        }
    }

    #[test]
    fn dna_sampled() {
        let a = Alphabet::dna();
        let b = a.parse("ACGAC").unwrap();
        let k = kmp_automaton(&b, 4);
        for w in a.words(7) {
            assert_eq!(k.accepts(w.letters()), w.contains(&b));
        }
    }
}
