//! Alphabets, words and the small combinatorics on words everything else is built on.

use std::collections::BTreeSet;
use std::fmt;

use crate::{Error, Result};

/// An ordered alphabet. The order of `symbols` is the lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new(symbols: &str) -> Result<Self> {
        let symbols: Vec<char> = symbols.chars().collect();
        if symbols.len() < 2 {
            return Err(Error::InvalidAlphabet(format!(
                "need at least 2 symbols, got {}",
                symbols.len()
            )));
        }
        if symbols.len() > u8::MAX as usize {
            return Err(Error::InvalidAlphabet("too many symbols".into()));
        }
        let mut seen = BTreeSet::new();
        for &c in &symbols {
            if !seen.insert(c) {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol {c:?}")));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// `{A, C}`
    pub fn binary() -> Self {
        Alphabet { symbols: vec!['A', 'C'] }
    }

    /// `{A, C, G, T}`
    pub fn dna() -> Self {
        Alphabet { symbols: vec!['A', 'C', 'G', 'T'] }
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn index(&self, c: char) -> Result<u8> {
        self.symbols
            .iter()
            .position(|&s| s == c)
            .map(|i| i as u8)
            .ok_or(Error::UnknownSymbol(c))
    }

    pub fn symbol(&self, i: u8) -> char {
        self.symbols[i as usize]
    }

    pub fn parse(&self, s: &str) -> Result<Word> {
        let letters = s.chars().map(|c| self.index(c)).collect::<Result<Vec<_>>>()?;
        Ok(Word { letters })
    }

    pub fn render(&self, w: &Word) -> String {
        w.letters.iter().map(|&i| self.symbol(i)).collect()
    }

    /// All `size()^len` words of length `len`, in lexicographic order.
    pub fn words(&self, len: usize) -> WordsOfLength {
        WordsOfLength { sigma: self.size() as u8, current: Some(vec![0; len]) }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.symbols.iter().collect();
        f.write_str(&s)
    }
}

/// Odometer over `A^len`.
pub struct WordsOfLength {
    sigma: u8,
    current: Option<Vec<u8>>,
}

impl Iterator for WordsOfLength {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let cur = self.current.as_mut()?;
        let out = Word { letters: cur.clone() };
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < self.sigma {
                break;
            }
            cur[i] = 0;
        }
        Some(out)
    }
}

/// A word, stored as alphabet indices. Ordering is lexicographic in the alphabet order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<u8>,
}

impl Word {
    pub fn from_indices(letters: Vec<u8>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn push(&mut self, a: u8) {
        self.letters.push(a);
    }

    pub fn suffix(&self, len: usize) -> Word {
        Word { letters: self.letters[self.len() - len..].to_vec() }
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word { letters: self.letters[..len].to_vec() }
    }

    pub fn ends_with(&self, other: &Word) -> bool {
        self.letters.ends_with(&other.letters)
    }

    pub fn starts_with(&self, other: &Word) -> bool {
        self.letters.starts_with(&other.letters)
    }

    pub fn contains(&self, u: &Word) -> bool {
        count_occurrences(self, u) > 0
    }
}

impl From<&[u8]> for Word {
    fn from(s: &[u8]) -> Self {
        Word { letters: s.to_vec() }
    }
}

/// A reduced set of words: no member is a factor of another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSet {
    members: Vec<Word>,
}

impl WordSet {
    pub fn new(members: Vec<Word>) -> Result<Self> {
        for (i, u) in members.iter().enumerate() {
            if u.is_empty() {
                return Err(Error::NotReduced("empty word".into()));
            }
            for (j, v) in members.iter().enumerate() {
                if i != j && v.contains(u) {
                    return Err(Error::NotReduced(format!("member {i} is a factor of member {j}")));
                }
            }
        }
        Ok(WordSet { members })
    }

    pub fn members(&self) -> &[Word] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn get(&self, i: usize) -> &Word {
        &self.members[i]
    }

    /// Returns a new set with `w` appended.
    pub fn with(&self, w: Word) -> Result<WordSet> {
        let mut m = self.members.clone();
        m.push(w);
        WordSet::new(m)
    }

    /// True if some member occurs in `w`.
    pub fn occurs_in(&self, w: &Word) -> bool {
        self.members.iter().any(|v| w.contains(v))
    }
}

/// Number of (possibly overlapping) occurrences of `u` in `w`.
pub fn count_occurrences(w: &Word, u: &Word) -> usize {
    if u.is_empty() || u.len() > w.len() {
        return 0;
    }
    w.letters.windows(u.len()).filter(|win| *win == u.letters()).count()
}

/// The correlation set `C_{v1,v2}`: suffixes `e` of `v2`, `|e| < |v2|`, with `v1.e` ending in `v2`.
/// Sorted by length; contains the empty word exactly when `v1` ends with `v2`.
pub fn correlation_set(v1: &Word, v2: &Word) -> Vec<Word> {
    let mut out = Vec::new();
    for l in 0..v2.len() {
        let overlap = v2.len() - l;
        if overlap <= v1.len() && v1.letters[v1.len() - overlap..] == v2.letters[..overlap] {
            out.push(v2.suffix(l));
        }
    }
    out
}

/// `d(b)`: all words at substitution distance exactly 1 from `b`, by position then letter.
pub fn neighbors(b: &Word, alphabet: &Alphabet) -> Result<WordSet> {
    if b.len() < 2 {
        return Err(Error::WordTooShort { len: b.len(), min: 2 });
    }
    let mut out = Vec::with_capacity(b.len() * (alphabet.size() - 1));
    for i in 0..b.len() {
        for a in 0..alphabet.size() as u8 {
            if a != b.letters[i] {
                let mut v = b.clone();
                v.letters[i] = a;
                out.push(v);
            }
        }
    }
    WordSet::new(out)
}

/// `d_l(b)`: the neighbours of `b` in lexicographic order.
pub fn neighbors_lex(b: &Word, alphabet: &Alphabet) -> Result<WordSet> {
    let mut m = neighbors(b, alphabet)?.members;
    m.sort();
    WordSet::new(m)
}

/// Offset (0-based) of the single letter where `v` differs from `b`, if exactly one.
pub fn mismatch_offset(b: &Word, v: &Word) -> Option<usize> {
    if b.len() != v.len() {
        return None;
    }
    let mut diffs = b.letters.iter().zip(&v.letters).enumerate().filter(|(_, (x, y))| x != y);
    let (q, _) = diffs.next()?;
    if diffs.next().is_some() {
        None
    } else {
        Some(q)
    }
}

/// Smallest `i` such that `b` is a prefix of `(b[..i])^infinity`.
pub fn minimal_period(b: &Word) -> usize {
    let l = &b.letters;
    (1..=l.len()).find(|&i| (i..l.len()).all(|j| l[j] == l[j - i])).unwrap_or(0)
}

/// A substitution `from -> to` of one letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MutationType {
    pub from: u8,
    pub to: u8,
}

impl MutationType {
    /// All `sigma(sigma-1)` ordered pairs of distinct letters.
    pub fn all(sigma: usize) -> Vec<MutationType> {
        let mut out = Vec::new();
        for from in 0..sigma as u8 {
            for to in 0..sigma as u8 {
                if from != to {
                    out.push(MutationType { from, to });
                }
            }
        }
        out
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        format!("{}>{}", alphabet.symbol(self.from), alphabet.symbol(self.to))
    }

    /// Parses `X>Y`, `X->Y` or `XY`.
    pub fn parse(s: &str, alphabet: &Alphabet) -> Result<MutationType> {
        let chars: Vec<char> = s.chars().filter(|c| !matches!(c, '-' | '>' | '→')).collect();
        if chars.len() != 2 {
            return Err(Error::Parse(format!("mutation type {s:?}: expected two letters")));
        }
        let from = alphabet.index(chars[0])?;
        let to = alphabet.index(chars[1])?;
        if from == to {
            return Err(Error::Parse(format!("mutation type {s:?}: letters must differ")));
        }
        Ok(MutationType { from, to })
    }
}

/// Which putative hits get counted: every position once, or only one mutation type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum HitFilter {
    #[default]
    Positions,
    Typed(MutationType),
}

/// Putative hits of a text that avoids `b`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PutativeHits {
    /// `(position, target letter)`, positions 1-indexed.
    pub pairs: BTreeSet<(usize, u8)>,
    pub positions: BTreeSet<usize>,
}

/// Pairs `(i, beta)` (1-indexed) such that setting `w[i] := beta` creates an occurrence of `b`.
/// Does not check that `w` avoids `b`.
pub fn hit_pairs(w: &[u8], b: &[u8]) -> BTreeSet<(usize, u8)> {
    let k = b.len();
    let mut out = BTreeSet::new();
    if k == 0 || w.len() < k {
        return out;
    }
    for j in 0..=w.len() - k {
        let mut miss = None;
        let mut count = 0;
        for q in 0..k {
            if w[j + q] != b[q] {
                count += 1;
                if count > 1 {
                    break;
                }
                miss = Some(q);
            }
        }
        if count == 1 {
            let q = miss.unwrap();
            out.insert((j + q + 1, b[q]));
        }
    }
    out
}

pub fn putative_hit_positions(w: &Word, b: &Word) -> Result<PutativeHits> {
    if w.contains(b) {
        return Err(Error::ContainsForbidden);
    }
    let pairs = hit_pairs(&w.letters, &b.letters);
    let positions = pairs.iter().map(|&(i, _)| i).collect();
    Ok(PutativeHits { pairs, positions })
}

/// Hit count of `w` under `filter`. Does not check that `w` avoids `b`.
pub fn count_hits(w: &[u8], b: &[u8], filter: HitFilter) -> usize {
    let pairs = hit_pairs(w, b);
    match filter {
        HitFilter::Positions => {
            let mut last = 0;
            let mut n = 0;
            for &(i, _) in &pairs {
                if i != last {
                    n += 1;
                    last = i;
                }
            }
            n
        }
        HitFilter::Typed(t) => {
            pairs.iter().filter(|&&(i, beta)| w[i - 1] == t.from && beta == t.to).count()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Alphabet::dna().parse(s).unwrap()
    }

    fn render_all(a: &Alphabet, v: &[Word]) -> Vec<String> {
        v.iter().map(|x| a.render(x)).collect()
    }

    #[test]
    fn occurrences() {
        assert_eq!(count_occurrences(&w("AAAA"), &w("AA")), 3);
        assert_eq!(count_occurrences(&w("CCCAACAC"), &w("ACC")), 0);
        assert_eq!(count_occurrences(&w("AC"), &w("ACC")), 0);
    }

    #[test]
    fn correlation_examples() {
        let a = Alphabet::dna();
        assert_eq!(render_all(&a, &correlation_set(&w("CATAT"), &w("TATAT"))), ["AT", "ATAT"]);
        assert_eq!(render_all(&a, &correlation_set(&w("CAA"), &w("AAT"))), ["T", "AT"]);
        assert_eq!(render_all(&a, &correlation_set(&w("AAAA"), &w("AAAA"))), ["", "A", "AA", "AAA"]);
        assert_eq!(render_all(&a, &correlation_set(&w("ACC"), &w("ACC"))), [""]);
    }

    #[test]
    fn neighbour_sets() {
        let a = Alphabet::binary();
        let b = a.parse("ACC").unwrap();
        assert_eq!(render_all(&a, neighbors(&b, &a).unwrap().members()), ["CCC", "AAC", "ACA"]);
        assert_eq!(render_all(&a, neighbors_lex(&b, &a).unwrap().members()), ["AAC", "ACA", "CCC"]);
        let b = a.parse("AAA").unwrap();
        assert_eq!(render_all(&a, neighbors_lex(&b, &a).unwrap().members()), ["AAC", "ACA", "CAA"]);
        assert_eq!(neighbors(&w("AAAAA"), &Alphabet::dna()).unwrap().len(), 15);
        assert!(matches!(neighbors(&w("A"), &Alphabet::dna()), Err(Error::WordTooShort { .. })));
    }

    #[test]
    fn periods() {
        assert_eq!(minimal_period(&w("AAAAA")), 1);
        assert_eq!(minimal_period(&w("CTCTCTCTCT")), 2);
        assert_eq!(minimal_period(&w("AACCC")), 5);
        assert_eq!(minimal_period(&w("ACGAC")), 3);
    }

    #[test]
    fn periods_match_naive() {
        let a = Alphabet::binary();
        for n in 1..=9 {
            for b in a.words(n) {
                let l = b.letters();
                let naive = (1..=n)
                    .find(|&i| (0..n).all(|j| l[j] == l[j % i]))
                    .unwrap();
                assert_eq!(minimal_period(&b), naive);
            }
        }
    }

    #[test]
    fn hits_examples() {
        let h = putative_hit_positions(&w("CCCAACAC"), &w("ACC")).unwrap();
        // window 5..7 = ACA also completes ACC at position 7
        assert_eq!(h.positions.into_iter().collect::<Vec<_>>(), [1, 5, 7]);

        let a = Alphabet::binary();
        let h = putative_hit_positions(&a.parse("AAC").unwrap(), &a.parse("AAA").unwrap()).unwrap();
        assert_eq!(h.pairs.into_iter().collect::<Vec<_>>(), [(3, 0)]);

        let a3 = Alphabet::new("ACG").unwrap();
        let h = putative_hit_positions(&a3.parse("AGC").unwrap(), &a3.parse("AC").unwrap()).unwrap();
        assert_eq!(h.pairs.into_iter().collect::<Vec<_>>(), [(2, 0), (2, 1)]);
        assert_eq!(h.positions.len(), 1);

        assert_eq!(
            putative_hit_positions(&w("AACC"), &w("ACC")),
            Err(Error::ContainsForbidden)
        );
    }

    #[test]
    fn clump_occurrences_exceed_hits() {
        let a = Alphabet::binary();
        let b = a.parse("AAA").unwrap();
        let text = a.parse("CAACAACAAC").unwrap();
        let d = neighbors(&b, &a).unwrap();
        let occ: usize = d.members().iter().map(|v| count_occurrences(&text, v)).sum();
        let h = putative_hit_positions(&text, &b).unwrap();
        assert_eq!((occ, h.positions.len()), (8, 4));
    }

    #[test]
    fn hits_exhaustive() {
        let a = Alphabet::new("ACG").unwrap();
        for b in [a.parse("AC").unwrap(), a.parse("AA").unwrap(), a.parse("ACA").unwrap()] {
            for n in 0..=6 {
                for t in a.words(n) {
                    let Ok(h) = putative_hit_positions(&t, &b) else { continue };
                    assert!(h.pairs.len() >= h.positions.len());
                    for i in 1..=n {
                        for beta in 0..3u8 {
                            if beta == t.letters()[i - 1] {
                                continue;
                            }
                            let mut m = t.clone();
                            m.letters[i - 1] = beta;
                            assert_eq!(m.contains(&b), h.pairs.contains(&(i, beta)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn typed_equals_untyped_binary() {
        let a = Alphabet::binary();
        let b = a.parse("ACAC").unwrap();
        for t in a.words(9) {
            if t.contains(&b) {
                continue;
            }
            let typed: usize = MutationType::all(2)
                .into_iter()
                .map(|m| count_hits(t.letters(), b.letters(), HitFilter::Typed(m)))
                .sum();
            assert_eq!(typed, count_hits(t.letters(), b.letters(), HitFilter::Positions));
        }
    }

    #[test]
    fn alphabet_errors() {
        assert!(Alphabet::new("A").is_err());
        assert!(Alphabet::new("AA").is_err());
        assert_eq!(Alphabet::dna().parse("ACX"), Err(Error::UnknownSymbol('X')));
        assert_eq!(Alphabet::binary().words(3).count(), 8);
    }

    #[test]
    fn reduced_sets() {
        assert!(WordSet::new(vec![w("AC"), w("GACT")]).is_err());
        assert!(WordSet::new(vec![w("AC"), w("CA")]).is_ok());
    }

    #[test]
    fn mutation_type_parse() {
        let a = Alphabet::dna();
        assert_eq!(MutationType::parse("A>C", &a).unwrap(), MutationType { from: 0, to: 1 });
        assert_eq!(MutationType::parse("G->T", &a).unwrap(), MutationType { from: 2, to: 3 });
        assert!(MutationType::parse("AA", &a).is_err());
        assert_eq!(MutationType::all(4).len(), 12);
    }
}
