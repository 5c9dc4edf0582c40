use crate::automata::ClumpAutomaton;
use crate::gfcore::{rat, to_f64, RatFun, UPoly};
use crate::languages::clump_gf_language;
use crate::words::{HitFilter, MutationType, Word};
use crate::{Error, Result};

use super::ModelParams;

/// Fit window for the linear regime.
pub const FIT_RANGE: (usize, usize) = (50, 200);

/// Constants of one mutation type: `E(H_n) = τ^{-n} (φ1 n + φ2)`, `E(H̃_n) = c1 n + c2`.
#[derive(Debug, Clone, PartialEq)]
pub struct TypeConstants {
    pub mutation: MutationType,
    pub phi1: f64,
    pub phi2: f64,
    pub c1: f64,
    pub c2: f64,
}

/// Least-squares line through `(n, y_n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    pub max_residual: f64,
}

pub fn linear_fit(points: &[(f64, f64)]) -> LinearFit {
    let m = points.len() as f64;
    let sx: f64 = points.iter().map(|p| p.0).sum::<f64>() / m;
    let sy: f64 = points.iter().map(|p| p.1).sum::<f64>() / m;
    let sxy: f64 = points.iter().map(|p| (p.0 - sx) * (p.1 - sy)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - sx) * (p.0 - sx)).sum();
    let slope = sxy / sxx;
    let intercept = sy - slope * sx;
    let max_residual = points.iter().map(|p| (p.1 - slope * p.0 - intercept).abs()).fold(0.0, f64::max);
    LinearFit { slope, intercept, max_residual }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AsymptoticsRoute {
    /// Poles of the exact generating functions.
    Exact,
    /// Dominant eigenvalue and linear fit of the floating-point stream.
    Numeric,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticConstants {
    pub route: AsymptoticsRoute,
    /// Dominant singularity of `F_b(z,1)`.
    pub tau: f64,
    /// `f̄_n = ψ τ^{-(n-1)}`
    pub psi: f64,
    /// Per type (exact route only).
    pub types: Vec<TypeConstants>,
    /// Slope and intercept of the expected number of hit pairs, all types counted once.
    pub hits_c1: f64,
    pub hits_c2: f64,
    /// `sum_type p_type c1_type`, `sum_type p_type c2_type`.
    pub c1: f64,
    pub c2: f64,
    /// Linear fit of the unweighted conditioned counts over [`FIT_RANGE`].
    pub fit: LinearFit,
    /// Geometric rate of the residuals `E(H̃_n) - (c1 n + c2)`.
    pub decay: f64,
}

fn z_poly(f: &RatFun) -> (UPoly, UPoly) {
    let one = rat(1, 1);
    (f.num().at_t(&one), f.den().at_t(&one))
}

fn scale(p: &UPoly, x: f64) -> f64 {
    p.coeffs().iter().enumerate().map(|(i, c)| to_f64(c).abs() * x.powi(i as i32)).sum::<f64>().max(1e-300)
}

/// Smallest positive root of the denominator of `F(z,1)` and `ψ`.
pub fn dominant_pole(f1: &RatFun) -> Result<(f64, f64)> {
    let (n, d) = z_poly(f1);
    let (lo, hi) = (rat(0, 1), rat(64, 1));
    let tau = d.smallest_root_in(&lo, &hi, 1e-15)?;
    let dd = d.derivative();
    if dd.eval_f64(tau).abs() <= 1e-9 * scale(&dd, tau) {
        return Err(Error::PoleOrder(format!("denominator of F(z,1) has a multiple root at {tau}")));
    }
    let psi = -n.eval_f64(tau) / (tau * tau * dd.eval_f64(tau));
    Ok((tau, psi))
}

/// `(φ1, φ2)` of `E(z) = NE / DE` at `τ` (pole of order 0, 1 or 2).
pub fn hit_residues(e: &RatFun, tau: f64) -> Result<(f64, f64)> {
    let (ne, de) = z_poly(e);
    let d1 = de.derivative();
    let d2 = d1.derivative();
    let d3 = d2.derivative();
    let small = |p: &UPoly| p.eval_f64(tau).abs() <= 1e-9 * scale(p, tau);
    if ne.is_zero() || !small(&de) {
        // no pole at τ: contributions decay faster than τ^{-n}
        return Ok((0.0, 0.0));
    }
    if !small(&d1) {
        return Ok((0.0, -ne.eval_f64(tau) / (tau * d1.eval_f64(tau))));
    }
    if small(&d2) {
        return Err(Error::PoleOrder(format!("E(z) has a pole of order > 2 at {tau}")));
    }
    // DE = (z - τ)^2 R(z)
    let r = d2.eval_f64(tau) / 2.0;
    let r1 = d3.eval_f64(tau) / 6.0;
    let nt = ne.eval_f64(tau);
    let n1 = ne.derivative().eval_f64(tau);
    let a = nt / (tau * tau * r);
    let g1 = (n1 * r - nt * r1) / (tau * tau * r * r);
    Ok((a, a - tau * g1))
}

fn decay_rate(series: &[f64], c1: f64, c2: f64) -> f64 {
    let pts: Vec<(f64, f64)> = series
        .iter()
        .enumerate()
        .filter_map(|(n, &y)| {
            let r = (y - c1 * n as f64 - c2).abs();
            (n >= 4 && r > 1e-11).then(|| (n as f64, r.ln()))
        })
        .collect();
    if pts.len() < 3 {
        return 0.0;
    }
    linear_fit(&pts).slope.exp()
}

/// Unweighted conditioned expectations, every `(position, target)` pair counted, exact
/// per type and summed.
pub fn conditioned_pairs_series(b: &Word, params: &ModelParams, n_max: usize) -> Result<Vec<f64>> {
    let ca = ClumpAutomaton::new(b, &params.alphabet)?;
    let mut total = vec![rat(0, 1); n_max + 1];
    let mut avoid = Vec::new();
    for t in MutationType::all(params.sigma()) {
        let (a, h) = ca.hit_moments(&params.nu, HitFilter::Typed(t), n_max);
        for (x, y) in total.iter_mut().zip(&h) {
            *x += y;
        }
        avoid = a;
    }
    Ok(total.iter().zip(&avoid).map(|(h, a)| to_f64(&(h / a))).collect())
}

/// Exact route: one generating function per mutation type (small alphabets).
pub fn asymptotics_exact(b: &Word, params: &ModelParams) -> Result<AsymptoticConstants> {
    let mut types = Vec::new();
    let mut pole: Option<(f64, f64)> = None;
    for t in MutationType::all(params.sigma()) {
        let f = clump_gf_language(b, &params.alphabet, &params.nu, HitFilter::Typed(t))?;
        let (tau, psi) = match pole {
            Some(p) => p,
            None => {
                let p = dominant_pole(&f.at_t(&rat(1, 1))?)?;
                pole = Some(p);
                p
            }
        };
        let (phi1, phi2) = hit_residues(&f.dt_at_one(), tau)?;
        types.push(TypeConstants { mutation: t, phi1, phi2, c1: phi1 / (psi * tau), c2: phi2 / (psi * tau) });
    }
    let (tau, psi) = pole.ok_or_else(|| Error::InvalidArgument("alphabet has no mutation types".into()))?;
    let hits_c1 = types.iter().map(|t| t.c1).sum();
    let hits_c2 = types.iter().map(|t| t.c2).sum();
    let c1 = types.iter().map(|t| params.rate(t.mutation) * t.c1).sum();
    let c2 = types.iter().map(|t| params.rate(t.mutation) * t.c2).sum();
    let series = conditioned_pairs_series(b, params, FIT_RANGE.1)?;
    let fit = fit_window(&series);
    let decay = decay_rate(&series, hits_c1, hits_c2);
    Ok(AsymptoticConstants { route: AsymptoticsRoute::Exact, tau, psi, types, hits_c1, hits_c2, c1, c2, fit, decay })
}

fn fit_window(series: &[f64]) -> LinearFit {
    let pts: Vec<(f64, f64)> = (FIT_RANGE.0..=FIT_RANGE.1).map(|n| (n as f64, series[n])).collect();
    linear_fit(&pts)
}

/// Numeric route: `τ` from the ratio of successive avoidance probabilities, constants from
/// the linear fit of the floating-point stream.
pub fn asymptotics_numeric(b: &Word, params: &ModelParams) -> Result<AsymptoticConstants> {
    let ca = ClumpAutomaton::new(b, &params.alphabet)?;
    let long = 2000;
    let pairs = ca.hit_stream(&params.nu_f64, |_| 1.0, long);
    let weighted = ca.hit_stream(&params.nu_f64, |t| params.rate(t), FIT_RANGE.1);
    let tau = pairs.avoid[long - 1] / pairs.avoid[long];
    if !(tau.is_finite() && tau >= 1.0) {
        return Err(Error::NoRoot { lo: 1.0, hi: f64::INFINITY });
    }
    let psi = (pairs.avoid[long].ln() + (long as f64 - 1.0) * tau.ln()).exp();
    let series: Vec<f64> = (0..=FIT_RANGE.1).map(|n| pairs.conditioned(n)).collect();
    let fit = fit_window(&series);
    let wseries: Vec<f64> = (0..=FIT_RANGE.1).map(|n| weighted.conditioned(n)).collect();
    let wfit = fit_window(&wseries);
    let decay = decay_rate(&series, fit.slope, fit.intercept);
    Ok(AsymptoticConstants {
        route: AsymptoticsRoute::Numeric,
        tau,
        psi,
        types: Vec::new(),
        hits_c1: fit.slope,
        hits_c2: fit.intercept,
        c1: wfit.slope,
        c2: wfit.intercept,
        fit,
        decay,
    })
}

/// Exact route on two-letter alphabets, numeric otherwise.
pub fn asymptotics(b: &Word, params: &ModelParams) -> Result<AsymptoticConstants> {
    if params.sigma() == 2 {
        asymptotics_exact(b, params)
    } else {
        asymptotics_numeric(b, params)
    }
}
