use std::collections::{BTreeSet, HashMap};

use crate::gfcore::{Poly, RFMatrix, RatFun};
use crate::words::{mismatch_offset, Alphabet, HitFilter, Word};
use crate::Result;

use super::codes::{constrained_code_matrix, marked_code_gf, CodeMatrix};
use super::{constrained_languages, LanguageGFs, LetterDistribution};

/// Clump states refined by the hit offsets already marked inside the current window.
///
/// A state is `(j, mask)`: the clump currently ends with an occurrence of `v_j`, and `mask`
/// holds the offsets, relative to the start of that occurrence, of marked hits.
#[derive(Debug, Clone)]
pub struct RefinedClumps {
    pub states: Vec<(usize, BTreeSet<usize>)>,
    /// Start state of a clump beginning with `v_i`.
    pub starts: Vec<usize>,
    /// `K'`: transitions weighted `Pr(e) z^|e| t^{new}`.
    pub k: RFMatrix,
}

fn marks(b: &Word, v: &Word, filter: HitFilter) -> Option<usize> {
    let q = mismatch_offset(b, v)?;
    match filter {
        HitFilter::Positions => Some(q),
        HitFilter::Typed(t) => {
            (v.letters()[q] == t.from && b.letters()[q] == t.to).then_some(q)
        }
    }
}

impl RefinedClumps {
    pub fn build(b: &Word, codes: &CodeMatrix, nu: &LetterDistribution, filter: HitFilter) -> Self {
        let words = &codes.words;
        let mut states: Vec<(usize, BTreeSet<usize>)> = Vec::new();
        let mut index: HashMap<(usize, BTreeSet<usize>), usize> = HashMap::new();
        let mut get = |s: (usize, BTreeSet<usize>), states: &mut Vec<_>| -> usize {
            *index.entry(s.clone()).or_insert_with(|| {
                states.push(s);
                states.len() - 1
            })
        };
        let starts: Vec<usize> = (0..words.len())
            .map(|i| get((i, marks(b, &words[i], filter).into_iter().collect()), &mut states))
            .collect();
        let mut edges = Vec::new();
        let mut q = 0;
        while q < states.len() {
            let (i, mask) = states[q].clone();
            for j in 0..words.len() {
                for e in codes.get(i, j) {
                    let l = e.len();
                    let mut shifted: BTreeSet<usize> =
                        mask.iter().filter(|&&o| o >= l).map(|&o| o - l).collect();
                    let mut new = 0;
                    if let Some(p) = marks(b, &words[j], filter) {
                        if shifted.insert(p) {
                            new = 1;
                        }
                    }
                    let target = get((j, shifted), &mut states);
                    edges.push((q, target, Poly::monomial(nu.word_prob(e.letters()), l as u32, new)));
                }
            }
            q += 1;
        }
        let n = states.len();
        let mut k = RFMatrix::zeros(n, n);
        for (a, c, p) in edges {
            k[(a, c)] = &k[(a, c)] + &RatFun::from_poly(p);
        }
        RefinedClumps { states, starts, k }
    }

    /// `G_ij = v_i(z,t) * sum over refined states of v_j of (I - K')^{-1}`.
    pub fn g_matrix(&self, v: &[RatFun]) -> Result<RFMatrix> {
        let n = self.states.len();
        let r = self.starts.len();
        // rows of (I - K')^{-1} at the start states: solve (I - K')^T X = E
        let a = RFMatrix::identity(n).sub(&self.k)?.transpose();
        let mut e = RFMatrix::zeros(n, r);
        for (i, &s) in self.starts.iter().enumerate() {
            e[(s, i)] = RatFun::one();
        }
        let x = a.solve(&e)?;
        let mut g = RFMatrix::zeros(r, r);
        for i in 0..r {
            for (s, (j, _)) in self.states.iter().enumerate() {
                g[(i, *j)] = &g[(i, *j)] + &x[(s, i)];
            }
            for j in 0..r {
                g[(i, j)] = &v[i] * &g[(i, j)];
            }
        }
        Ok(g)
    }
}

/// `N̄ + sum_ij (R̄_i / v_i(z)) [G (I - gap G)^{-1}]_ij Ū_j`, with
/// `gap_ij = (M̄_ij - K̄_ij(z,1)) / v_j(z)`.
fn assemble(lang: &LanguageGFs, k_unmarked: &RFMatrix, g: &RFMatrix) -> Result<RatFun> {
    let r = lang.len();
    let mut gap = RFMatrix::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            gap[(i, j)] = (&lang.m[(i, j)] - &k_unmarked[(i, j)]).div(&lang.v[j])?;
        }
    }
    let a = RFMatrix::identity(r).sub(&gap.mul(g)?)?;
    // X = G (I - gap G)^{-1}; compute Y = (I - gap G)^{-1} U first
    let y = a.solve(&RFMatrix::column(lang.u.clone()))?;
    let gy = g.mul(&y)?;
    let mut f = lang.n.clone();
    for i in 0..r {
        let ri = lang.r[i].div(&lang.v[i])?;
        f = &f + &(&ri * &gy[(i, 0)]);
    }
    Ok(f)
}

fn unmarked(codes: &CodeMatrix, nu: &LetterDistribution) -> RFMatrix {
    let r = codes.len();
    let mut k = RFMatrix::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            let mut p = Poly::zero();
            for e in codes.get(i, j) {
                p = &p + &Poly::monomial(nu.word_prob(e.letters()), e.len() as u32, 0);
            }
            k[(i, j)] = RatFun::from_poly(p);
        }
    }
    k
}

/// `F_b(z,t)` by clump decomposition of `d_l(b)`, with hits counted exactly through
/// refined clump states.
pub fn clump_gf_language(
    b: &Word,
    alphabet: &Alphabet,
    nu: &LetterDistribution,
    filter: HitFilter,
) -> Result<RatFun> {
    let (lang, _) = constrained_languages(b, alphabet, nu)?;
    let codes = constrained_code_matrix(b, alphabet)?;
    let marked = marked_code_gf(b, &codes, nu, filter);
    let refined = RefinedClumps::build(b, &codes, nu, filter);
    let g = refined.g_matrix(&marked.v)?;
    assemble(&lang, &unmarked(&codes, nu), &g)
}

/// Same assembly with `G_ij = v_i(z,t) [(I - K̄(z,t))^{-1}]_ij`, marking each code extension
/// by the hits it adds relative to `v_i` alone. Overcounts when a hit reappears after more
/// than one extension.
pub fn clump_gf_language_pairwise(
    b: &Word,
    alphabet: &Alphabet,
    nu: &LetterDistribution,
    filter: HitFilter,
) -> Result<RatFun> {
    let (lang, _) = constrained_languages(b, alphabet, nu)?;
    let codes = constrained_code_matrix(b, alphabet)?;
    let marked = marked_code_gf(b, &codes, nu, filter);
    let r = codes.len();
    let s = RFMatrix::identity(r).sub(&marked.k)?.inverse()?;
    let mut g = RFMatrix::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            g[(i, j)] = &marked.v[i] * &s[(i, j)];
        }
    }
    assemble(&lang, &unmarked(&codes, nu), &g)
}
