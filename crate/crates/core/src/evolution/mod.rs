//! Model parameters and the three routes to `p_n`, plus waiting times, expected hit counts,
//! asymptotic constants and the full k-mer scan.

mod asymptotics;
mod bnn;
mod bv;
mod clump;
mod params;

pub use asymptotics::{
    asymptotics, asymptotics_exact, asymptotics_numeric, conditioned_pairs_series, dominant_pole, hit_residues,
    linear_fit, AsymptoticConstants, AsymptoticsRoute, LinearFit, TypeConstants, FIT_RANGE,
};
pub use bnn::{bnn_drift, bnn_probability, bnn_probability_in, bnn_product};
pub use bv::{bv_probability, bv_single};
pub use clump::{clump_probability, expected_hits, expected_hits_series, ExpectedHits};
pub use params::ModelParams;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::words::{minimal_period, Word};
use crate::{Error, Result};

/// Beyond this value of `n * max p`, first-order results are flagged.
pub const FIRST_ORDER_LIMIT: f64 = 1e-2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Bv,
    Bnn,
    Clump,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Bv, Method::Bnn, Method::Clump];
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Method::Bv => "bv",
            Method::Bnn => "bnn",
            Method::Clump => "clump",
        })
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bv" => Ok(Method::Bv),
            "bnn" => Ok(Method::Bnn),
            "clump" => Ok(Method::Clump),
            _ => Err(Error::Parse(format!("unknown method {s:?} (bv, bnn, clump)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WaitingTimeResult {
    pub word: Word,
    pub n: usize,
    pub method: Method,
    pub p_n: f64,
    pub expected_t: f64,
    /// `n * max p` is small enough for first-order results to be trusted.
    pub first_order: bool,
}

pub fn probability(b: &Word, n: usize, params: &ModelParams, method: Method) -> Result<f64> {
    if b.len() < 2 {
        return Err(Error::WordTooShort { len: b.len(), min: 2 });
    }
    if n < b.len() {
        return Err(Error::InvalidArgument(format!("length {n} is shorter than the word")));
    }
    Ok(match method {
        Method::Bv => bv_probability(b, n, params),
        Method::Bnn => bnn_probability(b, n, params),
        Method::Clump => clump_probability(b, n, params)?,
    })
}

/// `p_n` and `E(T_n) = 1 / p_n`.
pub fn waiting_time(b: &Word, n: usize, params: &ModelParams, method: Method) -> Result<WaitingTimeResult> {
    let p_n = probability(b, n, params, method)?;
    let first_order = method == Method::Bnn || n as f64 * params.max_rate() <= FIRST_ORDER_LIMIT;
    Ok(WaitingTimeResult { word: b.clone(), n, method, p_n, expected_t: 1.0 / p_n, first_order })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub word: Word,
    pub method: Method,
    pub p_n: f64,
    pub expected_t: f64,
    pub rank: usize,
    pub minimal_period: usize,
}

/// Rounds to 10 significant digits so that ties from symmetric parameters compare equal.
fn key(x: f64) -> f64 {
    format!("{x:.9e}").parse().unwrap_or(x)
}

/// All `sigma^k` words ranked by increasing `E(T_n)` (rank 1 emerges fastest). Values that
/// agree to 10 significant digits are ordered lexicographically.
pub fn scan_kmers(k: usize, n: usize, params: &ModelParams, method: Method) -> Result<Vec<ScanRow>> {
    if k < 2 {
        return Err(Error::WordTooShort { len: k, min: 2 });
    }
    let total = (params.sigma() as f64).powi(k as i32);
    if total > 4f64.powi(10) {
        return Err(Error::Guard(format!("{total} words of length {k}")));
    }
    let words: Vec<Word> = params.alphabet.words(k).collect();
    let mut rows: Vec<ScanRow> = words
        .par_iter()
        .map(|w| {
            let r = waiting_time(w, n, params, method)?;
            Ok(ScanRow {
                word: w.clone(),
                method,
                p_n: r.p_n,
                expected_t: r.expected_t,
                rank: 0,
                minimal_period: minimal_period(w),
            })
        })
        .collect::<Result<_>>()?;
    rows.sort_by(|a, b| key(a.expected_t).partial_cmp(&key(b.expected_t)).unwrap_or(Ordering::Equal).then(a.word.cmp(&b.word)));
    for (i, r) in rows.iter_mut().enumerate() {
        r.rank = i + 1;
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Alphabet;

    #[test]
    fn method_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.to_string().parse::<Method>().unwrap(), m);
        }
        assert!("exact".parse::<Method>().is_err());
    }

    #[test]
    fn waiting_time_is_reciprocal() {
        let p = ModelParams::promoter();
        let b = Alphabet::dna().parse("CGCGC").unwrap();
        let r = waiting_time(&b, 1000, &p, Method::Bnn).unwrap();
        assert_eq!(r.expected_t, 1.0 / r.p_n);
        assert!(r.first_order);
        assert!(waiting_time(&b, 3, &p, Method::Bv).is_err());
    }

    #[test]
    fn scan_ties_break_lexicographically() {
        let p = ModelParams::binary_uniform();
        let rows = scan_kmers(3, 50, &p, Method::Bnn).unwrap();
        assert_eq!(rows.len(), 8);
        // AAA and CCC are symmetric under the parameters
        let a = rows.iter().position(|r| p.alphabet.render(&r.word) == "AAA").unwrap();
        let c = rows.iter().position(|r| p.alphabet.render(&r.word) == "CCC").unwrap();
        assert_eq!(c, a + 1);
        assert_eq!(rows.iter().map(|r| r.rank).collect::<Vec<_>>(), (1..=8).collect::<Vec<_>>());
    }

    #[test]
    fn trivial_rates_never_mutate() {
        let p = ModelParams::binary_uniform().with_uniform_rate(&crate::gfcore::rat(0, 1));
        assert!(p.is_trivial());
        let b = Alphabet::binary().parse("ACA").unwrap();
        for m in Method::ALL {
            assert_eq!(probability(&b, 20, &p, m).unwrap(), 0.0);
        }
    }
}
