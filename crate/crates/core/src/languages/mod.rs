//! Right / Minimal / Ultimate / Not languages of a reduced word set, codes, and the clump
//! decomposition of `F_b(z,t)`.

mod clump;
mod codes;

pub use clump::{clump_gf_language, clump_gf_language_pairwise, RefinedClumps};
pub use codes::{code_matrix, constrained_code_matrix, marked_code_gf, CodeMatrix, MarkedCodes};

use num_traits::{One, Signed};

use crate::gfcore::{rat, Poly, RFMatrix, RatFun, Rational};
use crate::words::{correlation_set, neighbors_lex, Alphabet, Word, WordSet};
use crate::{Error, Result};

/// Exact letter probabilities `nu(a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterDistribution {
    p: Vec<Rational>,
}

impl LetterDistribution {
    pub fn new(p: Vec<Rational>) -> Result<Self> {
        if p.len() < 2 {
            return Err(Error::InvalidArgument("distribution needs at least 2 letters".into()));
        }
        if p.iter().any(|x| x.is_negative()) {
            return Err(Error::InvalidArgument("negative letter probability".into()));
        }
        let s: Rational = p.iter().sum();
        if !s.is_one() {
            return Err(Error::InvalidArgument(format!("letter probabilities sum to {s}")));
        }
        Ok(LetterDistribution { p })
    }

    pub fn uniform(sigma: usize) -> Self {
        LetterDistribution { p: vec![rat(1, sigma as i64); sigma] }
    }

    pub fn size(&self) -> usize {
        self.p.len()
    }

    pub fn prob(&self, a: u8) -> &Rational {
        &self.p[a as usize]
    }

    pub fn probs(&self) -> &[Rational] {
        &self.p
    }

    /// `Pr(w) = prod nu(w_i)`
    pub fn word_prob(&self, w: &[u8]) -> Rational {
        w.iter().fold(Rational::one(), |acc, &a| acc * &self.p[a as usize])
    }

    /// `Pr(w) z^|w|`
    pub fn word_gf(&self, w: &Word) -> RatFun {
        RatFun::from_poly(Poly::monomial(self.word_prob(w.letters()), w.len() as u32, 0))
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.p.iter().map(crate::gfcore::to_f64).collect()
    }
}

/// Generating functions of the languages attached to a reduced set `V = (v_1..v_r)`.
#[derive(Debug, Clone)]
pub struct LanguageGFs {
    pub words: Vec<Word>,
    pub n: RatFun,
    pub r: Vec<RatFun>,
    pub m: RFMatrix,
    pub u: Vec<RatFun>,
    /// Correlation polynomials `C_ij(z)`.
    pub c: RFMatrix,
    /// `v_j(z) = Pr(v_j) z^|v_j|`.
    pub v: Vec<RatFun>,
}

fn correlation_matrix(words: &[Word], nu: &LetterDistribution) -> RFMatrix {
    let r = words.len();
    let mut c = RFMatrix::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            let mut p = Poly::zero();
            for e in correlation_set(&words[i], &words[j]) {
                p = &p + &Poly::monomial(nu.word_prob(e.letters()), e.len() as u32, 0);
            }
            c[(i, j)] = RatFun::from_poly(p);
        }
    }
    c
}

/// Solves the generating-function translation of the language equations for `V`.
pub fn rs_solve(set: &WordSet, nu: &LetterDistribution) -> Result<LanguageGFs> {
    let words = set.members().to_vec();
    let r = words.len();
    if r == 0 {
        return Err(Error::InvalidArgument("empty word set".into()));
    }
    let c = correlation_matrix(&words, nu);
    let v: Vec<RatFun> = words.iter().map(|w| nu.word_gf(w)).collect();
    let geo = RatFun::geometric();

    // W = C + 1 v / (1 - z), M = I - W^{-1}
    let mut w = c.clone();
    for i in 0..r {
        for j in 0..r {
            w[(i, j)] = &w[(i, j)] + &(&v[j] * &geo);
        }
    }
    let m = RFMatrix::identity(r).sub(&w.inverse()?)?;

    let u: Vec<RatFun> = (0..r)
        .map(|i| {
            let row_sum = (0..r).fold(RatFun::zero(), |acc, j| &acc + &m[(i, j)]);
            &(&RatFun::one() - &row_sum) * &geo
        })
        .collect();
    let i_minus_m = RFMatrix::identity(r).sub(&m)?;
    let r_row: Vec<RatFun> = (0..r)
        .map(|j| {
            let s = (0..r).fold(RatFun::zero(), |acc, i| &acc + &(&v[i] * &i_minus_m[(i, j)]));
            &s * &geo
        })
        .collect();

    // avoiding GF: 1 / (1 - z + v C^{-1} 1)
    let ones = RFMatrix::column(vec![RatFun::one(); r]);
    let cinv1 = c.solve(&ones)?;
    let mut den = &RatFun::one() - &RatFun::z();
    for (j, vj) in v.iter().enumerate() {
        den = &den + &(vj * &cinv1[(j, 0)]);
    }
    let n = den.recip()?;

    Ok(LanguageGFs { words, n, r: r_row, m, u, c, v })
}

impl LanguageGFs {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// `N + R (I - M)^{-1} U = 1 / (1 - z)`
    pub fn parse_identity(&self) -> Result<bool> {
        let r = self.len();
        let i_minus_m = RFMatrix::identity(r).sub(&self.m)?;
        let x = i_minus_m.solve(&RFMatrix::column(self.u.clone()))?;
        let mut lhs = self.n.clone();
        for i in 0..r {
            lhs = &lhs + &(&self.r[i] * &x[(i, 0)]);
        }
        Ok(lhs == RatFun::geometric())
    }

    /// `z U_i = sum_j M_ij + U_i - 1` for every `i`.
    pub fn ultimate_identity(&self) -> bool {
        let r = self.len();
        (0..r).all(|i| {
            let lhs = &RatFun::z() * &self.u[i];
            let mut rhs = &self.u[i] - &RatFun::one();
            for j in 0..r {
                rhs = &rhs + &self.m[(i, j)];
            }
            lhs == rhs
        })
    }

    /// `N v_j = sum_i R_i C_ij` for every `j`.
    pub fn right_identity(&self) -> bool {
        let r = self.len();
        (0..r).all(|j| {
            let lhs = &self.n * &self.v[j];
            let rhs = (0..r).fold(RatFun::zero(), |acc, i| &acc + &(&self.r[i] * &self.c[(i, j)]));
            lhs == rhs
        })
    }

    /// All three identities.
    pub fn check_identities(&self) -> Result<bool> {
        Ok(self.parse_identity()? && self.ultimate_identity() && self.right_identity())
    }

    /// Keeps the first `r` words.
    pub fn restrict(&self, r: usize) -> LanguageGFs {
        let idx: Vec<usize> = (0..r).collect();
        LanguageGFs {
            words: self.words[..r].to_vec(),
            n: self.n.clone(),
            r: self.r[..r].to_vec(),
            m: self.m.select(&idx, &idx),
            u: self.u[..r].to_vec(),
            c: self.c.select(&idx, &idx),
            v: self.v[..r].to_vec(),
        }
    }
}

/// Languages of `d_l(b)` in texts avoiding `b`: solve on `(d_l(b), b)` and keep the first `r`.
/// Also returns the full extended solution.
pub fn constrained_languages(
    b: &Word,
    alphabet: &Alphabet,
    nu: &LetterDistribution,
) -> Result<(LanguageGFs, LanguageGFs)> {
    let d = neighbors_lex(b, alphabet)?;
    let ext = d.with(b.clone())?;
    let full = rs_solve(&ext, nu)?;
    Ok((full.restrict(d.len()), full))
}
