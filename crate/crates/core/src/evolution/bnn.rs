use crate::automata::{kmp_automaton, Dfa};
use crate::numeric::{DoubleDouble, Scalar};
use crate::words::Word;

use super::ModelParams;

/// Pairs `(S(0) state, S(1) state)` over letters `x * sigma + y`; pairs whose first component
/// has read `b` are dropped. Finals: `S(1)` has read `b`.
pub fn bnn_product(b: &Word, sigma: usize) -> Dfa {
    let a = kmp_automaton(b, sigma);
    let k = b.len();
    Dfa::from_step(
        sigma * sigma,
        (0usize, 0usize),
        |&(p, q), xy| {
            let (x, y) = (xy as usize / sigma, xy as usize % sigma);
            let p2 = a.step(p, x as u8)?;
            (p2 < k).then(|| (p2, a.step(q, y as u8).unwrap()))
        },
        |&(_, q)| q == k,
        |&(p, q)| format!("({p},{q})"),
    )
}

fn iterate<S: Scalar>(d: &Dfa, weights: &[S], n: usize) -> S {
    let mut x = vec![S::zero(); d.len()];
    x[d.initial] = S::one();
    for _ in 0..n {
        let mut y = vec![S::zero(); d.len()];
        for (q, &v) in x.iter().enumerate() {
            for (a, t) in d.delta[q].iter().enumerate() {
                if let Some(t) = *t {
                    y[t] = y[t] + v * weights[a];
                }
            }
        }
        x = y;
    }
    x.iter().enumerate().filter(|(q, _)| d.finals[*q]).fold(S::zero(), |s, (_, &v)| s + v)
}

/// `p_n` from the weighted product automaton, in any scalar type.
pub fn bnn_probability_in<S: Scalar>(b: &Word, n: usize, params: &ModelParams) -> S {
    let sigma = params.sigma();
    let nu = &params.nu_f64;
    let pair = bnn_product(b, sigma);
    let pw: Vec<S> = (0..sigma * sigma)
        .map(|xy| S::from_f64(nu[xy / sigma]) * S::from_f64(params.p1_f64[xy / sigma][xy % sigma]))
        .collect();
    let num = iterate(&pair, &pw, n);
    let avoid = crate::automata::kmp_avoiding(b, sigma);
    let aw: Vec<S> = nu.iter().map(|&v| S::from_f64(v)).collect();
    let den = iterate(&avoid, &aw, n);
    num / den
}

pub fn bnn_probability(b: &Word, n: usize, params: &ModelParams) -> f64 {
    bnn_probability_in::<f64>(b, n, params)
}

/// Relative difference between the `f64` run and a double-double shadow run.
pub fn bnn_drift(b: &Word, n: usize, params: &ModelParams) -> f64 {
    let x = bnn_probability_in::<f64>(b, n, params);
    let y = bnn_probability_in::<DoubleDouble>(b, n, params).to_f64();
    ((x - y) / y).abs()
}
