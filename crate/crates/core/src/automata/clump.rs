use std::collections::{BTreeSet, HashMap};

use num_traits::{One, Zero};

use crate::gfcore::{Poly, RFMatrix, RatFun, Rational, UPoly};
use crate::languages::LetterDistribution;
use crate::words::{
    correlation_set, hit_pairs, mismatch_offset, neighbors_lex, Alphabet, HitFilter, MutationType, Word,
};
use crate::{Error, Result};

use super::lang::{longest_suffix_in, prefixes};
use super::Dfa;

/// Largest automaton for which [`gf_from_clump_automaton`] inverts `I - zH(t)` exactly.
pub const EXACT_STATE_LIMIT: usize = 24;

/// Automaton of clumps of `d(b)` in texts avoiding `b`.
///
/// States are the prefixes of `X = { v_i e : e in {ε} ∪ C_ij }`, a transition goes to the
/// longest suffix in `Pref(X)`, and letters completing `b` are pruned. Every state is final.
#[derive(Debug, Clone)]
pub struct ClumpAutomaton {
    pub alphabet: Alphabet,
    pub b: Word,
    pub dfa: Dfa,
    pub words: Vec<Word>,
    /// `O`: states reached by reading a word of `X` from the initial state.
    pub occurrence: Vec<bool>,
    /// `Ē`: states reached by strict prefixes of `d(b)` words. `E` is the rest.
    pub ebar: Vec<bool>,
    pub theta: Vec<Option<Word>>,
    /// A hit position not seen before appears on this transition.
    pub new_position: Vec<Vec<bool>>,
    /// The new `(position, target)` pair created on this transition, by type.
    pub new_pair: Vec<Vec<Option<MutationType>>>,
}

impl ClumpAutomaton {
    pub fn new(b: &Word, alphabet: &Alphabet) -> Result<Self> {
        let d = neighbors_lex(b, alphabet)?;
        let mut x: BTreeSet<Word> = BTreeSet::new();
        for vi in d.members() {
            x.insert(vi.clone());
            for vj in d.members() {
                for e in correlation_set(vi, vj) {
                    x.insert(vi.concat(&e));
                }
            }
        }
        let x: Vec<Word> = x.into_iter().collect();
        let pref = prefixes(&x);
        let bl = b.letters();
        let dfa = Dfa::from_step(
            alphabet.size(),
            Vec::<u8>::new(),
            |s, a| {
                let mut sa = s.clone();
                sa.push(a);
                if sa.ends_with(bl) {
                    None
                } else {
                    Some(longest_suffix_in(&pref, &sa))
                }
            },
            |_| true,
            |s| alphabet.render(&Word::from_indices(s.clone())),
        );
        let words: Vec<Word> = dfa.labels.iter().map(|l| alphabet.parse(l)).collect::<Result<_>>()?;

        let mut occurrence = vec![false; dfa.len()];
        for w in &x {
            if let Some(q) = dfa.run(w.letters()) {
                occurrence[q] = true;
            }
        }
        let mut ebar = vec![false; dfa.len()];
        for v in d.members() {
            for l in 0..v.len() {
                if let Some(q) = dfa.run(&v.letters()[..l]) {
                    ebar[q] = true;
                }
            }
        }

        let sigma = alphabet.size();
        let mut new_position = vec![vec![false; sigma]; dfa.len()];
        let mut new_pair = vec![vec![None; sigma]; dfa.len()];
        for q in 0..dfa.len() {
            for a in 0..sigma as u8 {
                let Some(t) = dfa.step(q, a) else { continue };
                let s = words[t].letters();
                let after = hit_pairs(s, bl);
                let before = if s.is_empty() { BTreeSet::new() } else { hit_pairs(&s[..s.len() - 1], bl) };
                let old_pos: BTreeSet<usize> = before.iter().map(|p| p.0).collect();
                new_position[q][a as usize] = after.iter().any(|p| !old_pos.contains(&p.0));
                new_pair[q][a as usize] = after
                    .difference(&before)
                    .next()
                    .map(|&(i, to)| MutationType { from: s[i - 1], to });
            }
        }

        let mut ca = ClumpAutomaton {
            alphabet: alphabet.clone(),
            b: b.clone(),
            dfa,
            words,
            occurrence,
            ebar,
            theta: Vec::new(),
            new_position,
            new_pair,
        };
        ca.theta = ca.compute_theta();
        Ok(ca)
    }

    pub fn len(&self) -> usize {
        self.dfa.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dfa.is_empty()
    }

    pub fn k(&self) -> usize {
        self.b.len()
    }

    pub fn state_by_label(&self, label: &str) -> Option<usize> {
        self.dfa.labels.iter().position(|l| l == label)
    }

    pub fn label(&self, q: usize) -> &str {
        &self.dfa.labels[q]
    }

    /// Clump-core states `E = Q \ Ē`.
    pub fn core(&self) -> Vec<bool> {
        self.ebar.iter().map(|e| !e).collect()
    }

    /// Longest word `w`, `|w| <= k`, reaching `o` from some state without passing through
    /// an occurrence state on the way.
    fn compute_theta(&self) -> Vec<Option<Word>> {
        let mut theta: Vec<Option<Word>> = vec![None; self.len()];
        let k = self.k();
        for q in 0..self.len() {
            let mut stack = vec![(q, Vec::<u8>::new())];
            while let Some((s, w)) = stack.pop() {
                if w.len() == k {
                    continue;
                }
                for a in 0..self.dfa.sigma as u8 {
                    let Some(t) = self.dfa.step(s, a) else { continue };
                    let mut wa = w.clone();
                    wa.push(a);
                    if self.occurrence[t] {
                        let better = match &theta[t] {
                            None => true,
                            Some(old) => wa.len() > old.len() || (wa.len() == old.len() && wa.as_slice() < old.letters()),
                        };
                        if better {
                            theta[t] = Some(Word::from_indices(wa));
                        }
                    } else {
                        stack.push((t, wa));
                    }
                }
            }
        }
        theta
    }

    /// Mark exponent (0 or 1) of a transition under `filter`.
    pub fn mark(&self, q: usize, a: u8, filter: HitFilter) -> u32 {
        match filter {
            HitFilter::Positions => self.new_position[q][a as usize] as u32,
            HitFilter::Typed(t) => (self.new_pair[q][a as usize] == Some(t)) as u32,
        }
    }

    /// Mark placement read off `θ`: a transition into an occurrence state is marked when the
    /// hit position of the occurrence it completes falls inside `θ` of that state.
    pub fn theta_mark(&self, q: usize, a: u8) -> Option<bool> {
        let t = self.dfa.step(q, a)?;
        if !self.occurrence[t] {
            return Some(false);
        }
        let k = self.k();
        let v = self.words[t].suffix(k);
        let off = mismatch_offset(&self.b, &v)?;
        let th = self.theta[t].as_ref().map_or(0, |w| w.len());
        Some(k - 1 - off < th)
    }

    /// Transitions where the `θ` placement and the exact count differ.
    pub fn theta_mark_disagreements(&self) -> Vec<(usize, u8)> {
        let mut out = Vec::new();
        for q in 0..self.len() {
            for a in 0..self.dfa.sigma as u8 {
                if let Some(m) = self.theta_mark(q, a) {
                    if m != (self.mark(q, a, HitFilter::Positions) == 1) {
                        out.push((q, a));
                    }
                }
            }
        }
        out
    }

    /// `H(t)`: `h_ij = sum Pr(a) t^{mark}` over transitions `i -a-> j`.
    pub fn transfer_matrix(&self, nu: &LetterDistribution, filter: HitFilter) -> RFMatrix {
        let n = self.len();
        let mut h = RFMatrix::zeros(n, n);
        for q in 0..n {
            for a in 0..self.dfa.sigma as u8 {
                if let Some(t) = self.dfa.step(q, a) {
                    let m = Poly::monomial(nu.prob(a).clone(), 0, self.mark(q, a, filter));
                    h[(q, t)] = &h[(q, t)] + &RatFun::from_poly(m);
                }
            }
        }
        h
    }

    /// `[z^n] F_b(z,t)` as polynomials in `t`, for `n <= n_max`, exact.
    pub fn series(&self, nu: &LetterDistribution, filter: HitFilter, n_max: usize) -> Vec<UPoly> {
        let mut x = vec![UPoly::zero(); self.len()];
        x[self.dfa.initial] = UPoly::one();
        let mut out = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            out.push(x.iter().fold(UPoly::zero(), |s, p| &s + p));
            if n == n_max {
                break;
            }
            let mut y = vec![UPoly::zero(); self.len()];
            for (q, p) in x.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                for a in 0..self.dfa.sigma as u8 {
                    if let Some(t) = self.dfa.step(q, a) {
                        let m = UPoly::monomial(nu.prob(a).clone(), self.mark(q, a, filter) as usize);
                        y[t] = &y[t] + &(p * &m);
                    }
                }
            }
            x = y;
        }
        out
    }

    /// `f̄_n` and `E(H_n) = [z^n] dF/dt(z,1)` for `n <= n_max`, exact.
    pub fn hit_moments(&self, nu: &LetterDistribution, filter: HitFilter, n_max: usize) -> (Vec<Rational>, Vec<Rational>) {
        let n = self.len();
        let mut mass = vec![Rational::zero(); n];
        let mut hits = vec![Rational::zero(); n];
        mass[self.dfa.initial] = Rational::one();
        let (mut avoid, mut total) = (Vec::with_capacity(n_max + 1), Vec::with_capacity(n_max + 1));
        for step in 0..=n_max {
            avoid.push(mass.iter().fold(Rational::zero(), |s, x| s + x));
            total.push(hits.iter().fold(Rational::zero(), |s, x| s + x));
            if step == n_max {
                break;
            }
            let mut m2 = vec![Rational::zero(); n];
            let mut h2 = vec![Rational::zero(); n];
            for q in 0..n {
                if mass[q].is_zero() {
                    continue;
                }
                for a in 0..self.dfa.sigma as u8 {
                    if let Some(t) = self.dfa.step(q, a) {
                        let pa = nu.prob(a);
                        let pm = &mass[q] * pa;
                        h2[t] += &hits[q] * pa;
                        if self.mark(q, a, filter) == 1 {
                            h2[t] += &pm;
                        }
                        m2[t] += pm;
                    }
                }
            }
            mass = m2;
            hits = h2;
        }
        (avoid, total)
    }

    /// Floating-point avoidance probabilities and weighted hit expectations; each new
    /// `(position, target)` pair of type `τ` contributes `pair_weight(τ)`.
    pub fn hit_stream(&self, letter: &[f64], pair_weight: impl Fn(MutationType) -> f64, n_max: usize) -> HitStream {
        let n = self.len();
        let sigma = self.dfa.sigma;
        let w: Vec<Vec<f64>> = (0..n)
            .map(|q| (0..sigma).map(|a| self.new_pair[q][a].map_or(0.0, &pair_weight)).collect())
            .collect();
        let mut mass = vec![0.0; n];
        let mut hits = vec![0.0; n];
        mass[self.dfa.initial] = 1.0;
        let mut out = HitStream { avoid: Vec::with_capacity(n_max + 1), hits: Vec::with_capacity(n_max + 1) };
        for step in 0..=n_max {
            out.avoid.push(mass.iter().sum());
            out.hits.push(hits.iter().sum());
            if step == n_max {
                break;
            }
            let mut m2 = vec![0.0; n];
            let mut h2 = vec![0.0; n];
            for q in 0..n {
                if mass[q] == 0.0 {
                    continue;
                }
                for a in 0..sigma {
                    if let Some(t) = self.dfa.delta[q][a] {
                        let pm = mass[q] * letter[a];
                        m2[t] += pm;
                        h2[t] += hits[q] * letter[a] + pm * w[q][a];
                    }
                }
            }
            mass = m2;
            hits = h2;
        }
        out
    }

    /// DOT dump: occurrence states drawn double, marked transitions prefixed with `~`.
    pub fn to_dot(&self, filter: HitFilter) -> String {
        let mut d = self.dfa.clone();
        d.finals = self.occurrence.clone();
        d.to_dot(|a| self.alphabet.symbol(a).to_string(), |q, a| self.mark(q, a, filter) == 1)
    }
}

/// Per-length totals from [`ClumpAutomaton::hit_stream`].
#[derive(Debug, Clone, PartialEq)]
pub struct HitStream {
    /// `f̄_n`
    pub avoid: Vec<f64>,
    /// `E(H_n)` (weighted)
    pub hits: Vec<f64>,
}

impl HitStream {
    pub fn conditioned(&self, n: usize) -> f64 {
        self.hits[n] / self.avoid[n]
    }
}

/// `F_b(z,t) = e_0 (I - zH(t))^{-1} 1`, exact.
pub fn gf_from_clump_automaton(ca: &ClumpAutomaton, nu: &LetterDistribution, filter: HitFilter) -> Result<RatFun> {
    let n = ca.len();
    if n > EXACT_STATE_LIMIT {
        return Err(Error::Guard(format!(
            "clump automaton has {n} states; exact inversion is limited to {EXACT_STATE_LIMIT}, use the series"
        )));
    }
    let zh = ca.transfer_matrix(nu, filter).map(|x| x * &RatFun::z());
    let a = RFMatrix::identity(n).sub(&zh)?;
    let x = a.solve(&RFMatrix::column(vec![RatFun::one(); n]))?;
    Ok(x[(ca.dfa.initial, 0)].clone())
}

/// Every core state is entered by at most one word of each length `<= k`, over all start
/// states.
pub fn markov_property_check(dfa: &Dfa, core: &[bool], k: usize) -> bool {
    let mut seen: HashMap<(usize, usize), Vec<u8>> = HashMap::new();
    let mut stack: Vec<(usize, Vec<u8>)> = (0..dfa.len()).map(|q| (q, Vec::new())).collect();
    while let Some((s, w)) = stack.pop() {
        if w.len() == k {
            continue;
        }
        for a in 0..dfa.sigma as u8 {
            let Some(t) = dfa.step(s, a) else { continue };
            let mut wa = w.clone();
            wa.push(a);
            if core[t] {
                match seen.get(&(t, wa.len())) {
                    Some(old) if *old != wa => return false,
                    Some(_) => {}
                    None => {
                        seen.insert((t, wa.len()), wa.clone());
                    }
                }
            }
            stack.push((t, wa));
        }
    }
    true
}

impl ClumpAutomaton {
    pub fn markov_property(&self) -> bool {
        markov_property_check(&self.dfa, &self.core(), self.k())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfcore::rat;
    use crate::words::count_hits;

    fn aaa() -> ClumpAutomaton {
        let a = Alphabet::binary();
        ClumpAutomaton::new(&a.parse("AAA").unwrap(), &a).unwrap()
    }

    fn set_of(ca: &ClumpAutomaton, mask: &[bool]) -> BTreeSet<String> {
        (0..ca.len()).filter(|&q| mask[q]).map(|q| ca.label(q).to_string()).collect()
    }

    #[test]
    fn aaa_structure() {
        let ca = aaa();
        assert_eq!(ca.len(), 17);
        let ebar: BTreeSet<String> = ["", "A", "AA", "AC", "CA", "C"].iter().map(|s| s.to_string()).collect();
        assert_eq!(set_of(&ca, &ca.ebar), ebar);
        for (o, th) in [("ACA", "ACA"), ("CAAC", "C"), ("CAACA", "A")] {
            let q = ca.state_by_label(o).unwrap();
            assert!(ca.occurrence[q]);
            assert_eq!(ca.alphabet.render(ca.theta[q].as_ref().unwrap()), th);
        }
        // the edge AA -> AAC reads a C and is marked
        let q = ca.state_by_label("AA").unwrap();
        assert_eq!(ca.dfa.step(q, 1), ca.state_by_label("AAC"));
        assert_eq!(ca.mark(q, 1, HitFilter::Positions), 1);
        assert_eq!(ca.dfa.step(q, 0), None);
    }

    #[test]
    fn runs_count_hits() {
        let a = Alphabet::binary();
        for s in ["AAA", "ACC", "ACAC", "AACC", "AACA"] {
            let b = a.parse(s).unwrap();
            let ca = ClumpAutomaton::new(&b, &a).unwrap();
            let filters = [HitFilter::Positions, HitFilter::Typed(MutationType { from: 0, to: 1 })];
            for n in 0..=12 {
                for w in a.words(n) {
                    let mut q = Some(0);
                    let mut marks = [0u32; 2];
                    for &x in w.letters() {
                        let Some(s) = q else { break };
                        for (m, f) in marks.iter_mut().zip(filters) {
                            *m += ca.mark(s, x, f);
                        }
                        q = ca.dfa.step(s, x);
                    }
                    assert_eq!(q.is_some(), !w.contains(&b), "{s} {w:?}");
                    if q.is_some() {
                        for (m, f) in marks.iter().zip(filters) {
                            assert_eq!(*m as usize, count_hits(w.letters(), b.letters(), f));
                        }
                    }
                }
            }
            assert!(ca.markov_property(), "{s}");
        }
    }

    #[test]
    fn merged_states_break_markov() {
        let mut ca = aaa();
        let x = ca.state_by_label("AAC").unwrap();
        let y = ca.state_by_label("ACA").unwrap();
        for row in ca.dfa.delta.iter_mut() {
            for t in row.iter_mut() {
                if *t == Some(x) {
                    *t = Some(y);
                }
            }
        }
        assert!(!ca.markov_property());
    }

    #[test]
    fn exact_gf_matches_series() {
        let ca = aaa();
        let nu = LetterDistribution::uniform(2);
        let f = gf_from_clump_automaton(&ca, &nu, HitFilter::Positions).unwrap();
        assert_eq!(f.series_in_t(15).unwrap(), ca.series(&nu, HitFilter::Positions, 15));
        let (av, _) = ca.hit_moments(&nu, HitFilter::Positions, 3);
        assert_eq!(av[3], rat(7, 8));
        assert!(av[0].is_one());
    }

    #[test]
    fn hit_stream_matches_exact() {
        let a = Alphabet::binary();
        let b = a.parse("ACAC").unwrap();
        let ca = ClumpAutomaton::new(&b, &a).unwrap();
        let nu = LetterDistribution::new(vec![rat(1, 3), rat(2, 3)]).unwrap();
        let s = ca.series(&nu, HitFilter::Positions, 12);
        let st = ca.hit_stream(&nu.to_f64(), |_| 1.0, 12);
        for n in 0..=12 {
            let e: Rational = s[n].derivative().coeffs().iter().fold(Rational::zero(), |x, c| x + c);
            assert!((crate::gfcore::to_f64(&e) - st.hits[n]).abs() < 1e-14);
        }
    }
}
