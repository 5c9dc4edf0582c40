use crate::gfcore::{Poly, RFMatrix, RatFun};
use crate::words::{correlation_set, count_hits, neighbors_lex, Alphabet, HitFilter, Word, WordSet};
use crate::Result;

use super::LetterDistribution;

/// Finite code sets `K_ij` (or constrained `K̄_ij`) indexed by the words of a reduced set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeMatrix {
    pub words: Vec<Word>,
    pub codes: Vec<Vec<Vec<Word>>>,
}

impl CodeMatrix {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> &[Word] {
        &self.codes[i][j]
    }
}

/// True if some member of `set` occurs in `w` starting after position 0 and ending before
/// the last letter.
fn has_inner_occurrence(w: &Word, set: &[Word]) -> bool {
    let l = w.letters();
    set.iter().any(|s| {
        let s = s.letters();
        l.len() > s.len() + 1 && (1..l.len() - s.len()).any(|x| &l[x..x + s.len()] == s)
    })
}

/// `K_ij = B_ij - B_ij A^+`, `B_ij = C_ij ∩ M_ij` (without the empty word on the diagonal).
pub fn code_matrix(set: &WordSet) -> CodeMatrix {
    let words = set.members().to_vec();
    let codes = words
        .iter()
        .map(|vi| {
            words
                .iter()
                .map(|vj| {
                    let b: Vec<Word> = correlation_set(vi, vj)
                        .into_iter()
                        .filter(|e| !e.is_empty())
                        .filter(|e| !has_inner_occurrence(&vi.concat(e), &words))
                        .collect();
                    b.iter()
                        .filter(|e| !b.iter().any(|p| p.len() < e.len() && e.starts_with(p)))
                        .cloned()
                        .collect()
                })
                .collect()
        })
        .collect();
    CodeMatrix { words, codes }
}

/// `K̄_ij`: codes of `d_l(b)` whose extension `v_i.h` does not contain `b`.
pub fn constrained_code_matrix(b: &Word, alphabet: &Alphabet) -> Result<CodeMatrix> {
    let mut k = code_matrix(&neighbors_lex(b, alphabet)?);
    for (i, row) in k.codes.iter_mut().enumerate() {
        let vi = &k.words[i];
        for cell in row.iter_mut() {
            cell.retain(|h| !vi.concat(h).contains(b));
        }
    }
    Ok(k)
}

/// Marked generating functions of a constrained code matrix.
#[derive(Debug, Clone)]
pub struct MarkedCodes {
    /// `K̄_ij(z,t)`
    pub k: RFMatrix,
    /// `v_i(z,t) = Pr(v_i) t^{h(v_i)} z^|v_i|`
    pub v: Vec<RatFun>,
}

/// `K̄_ij(z,t) = sum Pr(w) t^{h(v_i w) - h(v_i)} z^|w|` with `h` the hit count under `filter`.
pub fn marked_code_gf(
    b: &Word,
    codes: &CodeMatrix,
    nu: &LetterDistribution,
    filter: HitFilter,
) -> MarkedCodes {
    let r = codes.len();
    let h = |w: &Word| count_hits(w.letters(), b.letters(), filter) as u32;
    let mut k = RFMatrix::zeros(r, r);
    for i in 0..r {
        let vi = &codes.words[i];
        let hi = h(vi);
        for j in 0..r {
            let mut p = Poly::zero();
            for e in codes.get(i, j) {
                let m = h(&vi.concat(e)) - hi;
                p = &p + &Poly::monomial(nu.word_prob(e.letters()), e.len() as u32, m);
            }
            k[(i, j)] = RatFun::from_poly(p);
        }
    }
    let v = codes
        .words
        .iter()
        .map(|w| RatFun::from_poly(Poly::monomial(nu.word_prob(w.letters()), w.len() as u32, h(w))))
        .collect();
    MarkedCodes { k, v }
}
