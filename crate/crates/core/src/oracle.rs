//! Brute-force ground truth: exhaustive enumeration of short texts and a seeded Monte Carlo
//! estimate of `p_n`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::automata::kmp_automaton;
use crate::evolution::ModelParams;
use crate::gfcore::Rational;
use crate::languages::LetterDistribution;
use crate::words::{count_hits, Alphabet, HitFilter, MutationType, Word};
use crate::{Error, Result};

/// Largest number of texts [`enumerate`] will visit.
pub const ENUMERATION_LIMIT: u64 = 1 << 26;
const PN_LIMIT: u64 = 1 << 20;
const BLOCK: u64 = 10_000;
pub const MIN_TRIALS: u64 = 10_000;

#[derive(Debug, Clone, PartialEq)]
pub struct EnumerationReport {
    pub b: Word,
    pub n: usize,
    pub avoid_count: u64,
    /// `f̄_n`
    pub avoid_mass: Rational,
    /// `sum Pr(w) hits(w)` over texts avoiding `b`.
    pub hit_sum: Rational,
    pub typed_hit_sums: Vec<(MutationType, Rational)>,
    /// Hit count -> probability mass.
    pub census: BTreeMap<usize, Rational>,
}

fn guard(sigma: usize, n: usize, limit: u64) -> Result<u64> {
    let total = (sigma as f64).powi(n as i32);
    if total > limit as f64 {
        return Err(Error::Guard(format!("{sigma}^{n} texts exceeds {limit}")));
    }
    Ok(total as u64)
}

fn decode(mut i: u64, sigma: u64, n: usize, out: &mut [u8]) {
    for x in out[..n].iter_mut().rev() {
        *x = (i % sigma) as u8;
        i /= sigma;
    }
}

#[derive(Default)]
struct Tally {
    count: u64,
    // (letter counts, hits) -> number of texts
    census: HashMap<(Vec<u32>, usize), u64>,
    typed: HashMap<(Vec<u32>, usize), u64>,
}

/// Visits every text of length `n`, keeps those avoiding `b` and tallies putative hits.
pub fn enumerate(b: &Word, n: usize, alphabet: &Alphabet, nu: &LetterDistribution) -> Result<EnumerationReport> {
    let sigma = alphabet.size();
    let total = guard(sigma, n, ENUMERATION_LIMIT)?;
    let types = MutationType::all(sigma);
    let bl = b.letters();
    let chunk = (total / 256).max(1);
    let tallies: Vec<Tally> = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let mut t = Tally::default();
            let mut w = vec![0u8; n];
            for i in c * chunk..((c + 1) * chunk).min(total) {
                decode(i, sigma as u64, n, &mut w);
                if w.windows(bl.len()).any(|x| x == bl) {
                    continue;
                }
                t.count += 1;
                let mut counts = vec![0u32; sigma];
                for &x in &w {
                    counts[x as usize] += 1;
                }
                let h = count_hits(&w, bl, HitFilter::Positions);
                *t.census.entry((counts.clone(), h)).or_default() += 1;
                for (ti, &ty) in types.iter().enumerate() {
                    let h = count_hits(&w, bl, HitFilter::Typed(ty)) as u64;
                    if h > 0 {
                        *t.typed.entry((counts.clone(), ti)).or_default() += h;
                    }
                }
            }
            t
        })
        .collect();

    let prob = |counts: &[u32]| -> Rational {
        counts.iter().enumerate().fold(Rational::one(), |acc, (a, &c)| acc * num_traits::pow(nu.prob(a as u8).clone(), c as usize))
    };
    let mut census: BTreeMap<usize, Rational> = BTreeMap::new();
    let mut typed = vec![Rational::zero(); types.len()];
    let mut avoid_count = 0;
    let mut merged: BTreeMap<(Vec<u32>, usize), u64> = BTreeMap::new();
    let mut merged_typed: BTreeMap<(Vec<u32>, usize), u64> = BTreeMap::new();
    for t in tallies {
        avoid_count += t.count;
        for (k, v) in t.census {
            *merged.entry(k).or_default() += v;
        }
        for (k, v) in t.typed {
            *merged_typed.entry(k).or_default() += v;
        }
    }
    for ((counts, h), m) in merged {
        *census.entry(h).or_insert_with(Rational::zero) += prob(&counts) * Rational::from_integer(BigInt::from(m));
    }
    for ((counts, ti), m) in merged_typed {
        typed[ti] += prob(&counts) * Rational::from_integer(BigInt::from(m));
    }
    let avoid_mass = census.values().fold(Rational::zero(), |s, x| s + x);
    let hit_sum = census.iter().fold(Rational::zero(), |s, (&h, x)| s + x * Rational::from_integer(BigInt::from(h)));
    Ok(EnumerationReport {
        b: b.clone(),
        n,
        avoid_count,
        avoid_mass,
        hit_sum,
        typed_hit_sums: types.into_iter().zip(typed).collect(),
        census,
    })
}

/// Exact `p_n` under the full mutation model: every avoiding `S(0)` is enumerated and the
/// probability that its independent per-position mutation contains `b` is computed by
/// dynamic programming over the `b` recogniser.
pub fn exact_pn_tiny(b: &Word, n: usize, params: &ModelParams) -> Result<Rational> {
    let sigma = params.sigma();
    let total = guard(sigma, n, PN_LIMIT)?;
    let kmp = kmp_automaton(b, sigma);
    let k = b.len();
    let bl = b.letters();
    let parts: Vec<(Rational, Rational)> = (0..total)
        .into_par_iter()
        .filter_map(|i| {
            let mut w = vec![0u8; n];
            decode(i, sigma as u64, n, &mut w);
            if w.windows(k).any(|x| x == bl) {
                return None;
            }
            let pw = params.nu.word_prob(&w);
            // distribution over recogniser states of S(1), restricted to "b not yet read"
            let mut x = vec![Rational::zero(); k];
            x[0] = Rational::one();
            for &a in &w {
                let mut y = vec![Rational::zero(); k];
                for (q, v) in x.iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    for c in 0..sigma as u8 {
                        let t = kmp.step(q, c).unwrap();
                        let p = &params.p1[a as usize][c as usize];
                        if t < k && !p.is_zero() {
                            y[t] += v * p;
                        }
                    }
                }
                x = y;
            }
            let stay: Rational = x.iter().sum();
            Some((pw.clone(), pw * (Rational::one() - stay)))
        })
        .collect();
    let (avoid, hit) = parts.into_iter().fold((Rational::zero(), Rational::zero()), |(a, h), (x, y)| (a + x, h + y));
    if avoid.is_zero() {
        return Err(Error::InvalidArgument("no text avoids the word".into()));
    }
    Ok(hit / avoid)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub trials: u64,
    pub hits: u64,
    pub p: f64,
    pub stderr: f64,
}

fn sample(cum: &[f64], u: f64) -> u8 {
    cum.iter().position(|&c| u < c).unwrap_or(cum.len() - 1) as u8
}

fn cumulative(p: &[f64]) -> Vec<f64> {
    p.iter()
        .scan(0.0, |s, &x| {
            *s += x;
            Some(*s)
        })
        .collect()
}

/// Rejection-samples `S(0)` avoiding `b`, mutates every position independently and counts
/// the fraction of `S(1)` containing `b`. Blocks of trials use their own ChaCha stream, so
/// the estimate depends only on `seed`.
pub fn monte_carlo_pn(b: &Word, n: usize, params: &ModelParams, trials: u64, seed: u64) -> Result<McEstimate> {
    if trials < MIN_TRIALS {
        return Err(Error::InvalidArgument(format!("need at least {MIN_TRIALS} trials, got {trials}")));
    }
    let sigma = params.sigma();
    let kmp = kmp_automaton(b, sigma);
    let k = b.len();
    let nu = cumulative(&params.nu_f64);
    let rows: Vec<Vec<f64>> = params.p1_f64.iter().map(|r| cumulative(r)).collect();
    let max_attempts = 1_000_000u64;
    let blocks = trials.div_ceil(BLOCK);
    let counts: Vec<Result<u64>> = (0..blocks)
        .into_par_iter()
        .map(|blk| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(blk);
            let m = BLOCK.min(trials - blk * BLOCK);
            let mut s0 = vec![0u8; n];
            let mut hits = 0;
            for _ in 0..m {
                let mut attempts = 0;
                loop {
                    attempts += 1;
                    if attempts > max_attempts {
                        return Err(Error::Rejection(max_attempts));
                    }
                    let mut q = 0;
                    let mut ok = true;
                    for x in s0.iter_mut() {
                        *x = sample(&nu, rng.gen());
                        q = kmp.step(q, *x).unwrap();
                        if q == k {
                            ok = false;
                            break;
                        }
                    }
                    if ok {
                        break;
                    }
                }
                let mut q = 0;
                for &x in &s0 {
                    let y = sample(&rows[x as usize], rng.gen());
                    q = kmp.step(q, y).unwrap();
                }
                if q == k {
                    hits += 1;
                }
            }
            Ok(hits)
        })
        .collect();
    let hits = counts.into_iter().sum::<Result<u64>>()?;
    let p = hits as f64 / trials as f64;
    Ok(McEstimate { trials, hits, p, stderr: (p * (1.0 - p) / trials as f64).sqrt() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evolution::{bnn_probability, expected_hits};
    use crate::gfcore::{rat, to_f64};

    #[test]
    fn aaa_length_three() {
        let a = Alphabet::binary();
        let r = enumerate(&a.parse("AAA").unwrap(), 3, &a, &LetterDistribution::uniform(2)).unwrap();
        assert_eq!(r.avoid_count, 7);
        assert_eq!(r.hit_sum, rat(3, 8));
        assert_eq!(r.census, BTreeMap::from([(0, rat(4, 8)), (1, rat(3, 8))]));
    }

    #[test]
    fn short_texts_have_no_hits() {
        let a = Alphabet::dna();
        let r = enumerate(&a.parse("ACGT").unwrap(), 3, &a, &LetterDistribution::uniform(4)).unwrap();
        assert_eq!(r.avoid_count, 64);
        assert!(r.hit_sum.is_zero());
    }

    #[test]
    fn guard_trips() {
        let a = Alphabet::dna();
        assert!(matches!(enumerate(&a.parse("ACGT").unwrap(), 14, &a, &LetterDistribution::uniform(4)), Err(Error::Guard(_))));
    }

    #[test]
    fn exact_pn_first_order() {
        let base = ModelParams::binary_uniform();
        let b = base.alphabet.parse("AAA").unwrap();
        let n = 4;
        let mut last = 0.0;
        for r in [rat(1, 10_000), rat(1, 1000), rat(1, 100)] {
            let p = base.with_uniform_rate(&r);
            let exact = to_f64(&exact_pn_tiny(&b, n, &p).unwrap());
            assert!(exact > last);
            last = exact;
            if r == rat(1, 1000) {
                let e = expected_hits(&b, n, &p.alphabet, &p.nu, HitFilter::Positions).unwrap();
                let first = to_f64(&e.conditioned) * 1e-3;
                assert!(((exact - first) / exact).abs() < 4e-3);
                assert!(((exact - bnn_probability(&b, n, &p)) / exact).abs() < 1e-12);
            }
        }
        let p0 = base.with_uniform_rate(&rat(0, 1));
        assert!(exact_pn_tiny(&b, n, &p0).unwrap().is_zero());
    }

    #[test]
    fn monte_carlo_is_deterministic_and_close() {
        let p = ModelParams::promoter().with_uniform_rate(&rat(1, 1000));
        let b = p.alphabet.parse("AAAAA").unwrap();
        let x = monte_carlo_pn(&b, 200, &p, 200_000, 7).unwrap();
        let y = monte_carlo_pn(&b, 200, &p, 200_000, 7).unwrap();
        assert_eq!(x, y);
        let exact = bnn_probability(&b, 200, &p);
        assert!((x.p - exact).abs() < 3.0 * x.stderr, "{x:?} {exact}");
        assert!(monte_carlo_pn(&b, 200, &p, 0, 7).is_err());
    }
}
