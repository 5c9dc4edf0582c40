use num_traits::Zero;

use crate::automata::ClumpAutomaton;
use crate::gfcore::Rational;
use crate::languages::LetterDistribution;
use crate::words::{Alphabet, HitFilter, Word};
use crate::{Error, Result};

use super::ModelParams;

/// `p_n ≈ sum over types of E(H̃_n^{type}) p_type`, from one weighted pass over the clump
/// automaton.
pub fn clump_probability(b: &Word, n: usize, params: &ModelParams) -> Result<f64> {
    let ca = ClumpAutomaton::new(b, &params.alphabet)?;
    let s = ca.hit_stream(&params.nu_f64, |t| params.rate(t), n);
    Ok(s.conditioned(n))
}

/// Expected number of putative hits at one length.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpectedHits {
    pub n: usize,
    /// `f̄_n`
    pub avoid: Rational,
    /// `E(H_n)`
    pub unconditioned: Rational,
    /// `E(H̃_n) = E(H_n) / f̄_n`
    pub conditioned: Rational,
}

/// `E(H_m)` and `E(H̃_m)` for all `m <= n_max`, exact.
pub fn expected_hits_series(
    b: &Word,
    alphabet: &Alphabet,
    nu: &LetterDistribution,
    filter: HitFilter,
    n_max: usize,
) -> Result<Vec<ExpectedHits>> {
    let ca = ClumpAutomaton::new(b, alphabet)?;
    let (avoid, hits) = ca.hit_moments(nu, filter, n_max);
    avoid
        .into_iter()
        .zip(hits)
        .enumerate()
        .map(|(n, (a, h))| {
            if a.is_zero() {
                return Err(Error::InvalidArgument(format!("no text of length {n} avoids the word")));
            }
            let conditioned = &h / &a;
            Ok(ExpectedHits { n, avoid: a, unconditioned: h, conditioned })
        })
        .collect()
}

pub fn expected_hits(
    b: &Word,
    n: usize,
    alphabet: &Alphabet,
    nu: &LetterDistribution,
    filter: HitFilter,
) -> Result<ExpectedHits> {
    Ok(expected_hits_series(b, alphabet, nu, filter, n)?.pop().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evolution::bnn_probability;
    use crate::gfcore::rat;
    use crate::languages::clump_gf_language;
    use crate::words::MutationType;

    #[test]
    fn aaa_small_values() {
        let a = Alphabet::binary();
        let b = a.parse("AAA").unwrap();
        let e = expected_hits(&b, 3, &a, &LetterDistribution::uniform(2), HitFilter::Positions).unwrap();
        assert_eq!(e.unconditioned, rat(3, 8));
        assert_eq!(e.conditioned, rat(3, 7));
        let e = expected_hits(&b, 2, &a, &LetterDistribution::uniform(2), HitFilter::Positions).unwrap();
        assert!(e.unconditioned.is_zero());
    }

    #[test]
    fn matches_language_route() {
        let a = Alphabet::binary();
        let b = a.parse("ACAC").unwrap();
        let nu = LetterDistribution::new(vec![rat(1, 3), rat(2, 3)]).unwrap();
        let f = MutationType { from: 1, to: 0 };
        let gf = clump_gf_language(&b, &a, &nu, HitFilter::Typed(f)).unwrap();
        let e = gf.dt_at_one().taylor_coeffs(&rat(1, 1), 30).unwrap();
        let s = expected_hits_series(&b, &a, &nu, HitFilter::Typed(f), 30).unwrap();
        for n in 0..=30 {
            assert_eq!(s[n].unconditioned, e[n]);
        }
    }

    #[test]
    fn types_sum_to_positions_on_two_letters() {
        let a = Alphabet::binary();
        let b = a.parse("AACA").unwrap();
        let nu = LetterDistribution::uniform(2);
        let pos = expected_hits(&b, 25, &a, &nu, HitFilter::Positions).unwrap();
        let typed: Rational = MutationType::all(2)
            .into_iter()
            .map(|t| expected_hits(&b, 25, &a, &nu, HitFilter::Typed(t)).unwrap().unconditioned)
            .sum();
        assert_eq!(pos.unconditioned, typed);
    }

    #[test]
    fn close_to_bnn_on_promoter_params() {
        let p = ModelParams::promoter();
        let b = p.alphabet.parse("AAAAA").unwrap();
        let c = clump_probability(&b, 1000, &p).unwrap();
        let x = bnn_probability(&b, 1000, &p);
        assert!(((c - x) / x).abs() < 1e-4);
    }
}
