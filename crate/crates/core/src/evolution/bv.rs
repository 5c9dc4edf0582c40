use crate::words::Word;

use super::ModelParams;

/// Probability that a random `k`-mer other than `b` turns into `b` in one generation:
/// `prod_i (sum_x nu(x) p(x, b_i)) - prod_i nu(b_i) p(b_i, b_i)`.
pub fn bv_single(b: &Word, params: &ModelParams) -> f64 {
    let nu = &params.nu_f64;
    let p = &params.p1_f64;
    let mut all = 1.0;
    let mut stay = 1.0;
    for &bi in b.letters() {
        let bi = bi as usize;
        all *= (0..nu.len()).map(|x| nu[x] * p[x][bi]).sum::<f64>();
        stay *= nu[bi] * p[bi][bi];
    }
    all - stay
}

fn ln_binomial(m: usize, l: usize) -> f64 {
    (0..l).map(|i| ((m - i) as f64).ln() - ((i + 1) as f64).ln()).sum()
}

/// Inclusion-exclusion estimate `sum_l (-1)^{l+1} C(n-(k-1)l, l) s^l`, stopped once a term
/// drops below `1e-30` of the partial sum.
pub fn bv_probability(b: &Word, n: usize, params: &ModelParams) -> f64 {
    let k = b.len();
    let s = bv_single(b, params);
    if s <= 0.0 || k == 0 {
        return 0.0;
    }
    let ls = s.ln();
    let mut sum = 0.0;
    for l in 1..=n / k {
        let m = n - (k - 1) * l;
        if m < l {
            break;
        }
        let term = (ln_binomial(m, l) + l as f64 * ls).exp();
        sum += if l % 2 == 1 { term } else { -term };
        if term < 1e-30 * sum.abs() {
            break;
        }
    }
    sum
}
