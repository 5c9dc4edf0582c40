//! Deterministic automata: KMP recognisers, products, the language recognisers of a word set,
//! and the clump automaton with its transfer matrix.

mod clump;
mod kmp;
mod lang;

pub use clump::{gf_from_clump_automaton, markov_property_check, ClumpAutomaton, HitStream, EXACT_STATE_LIMIT};
pub use kmp::{kmp_automaton, kmp_avoiding};
pub use lang::{constrained_language_automaton, language_automaton, Language};

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;
use std::hash::Hash;

use num_traits::Zero;

use crate::gfcore::Rational;

/// A deterministic automaton over letters `0..sigma`. A missing transition (`None`) is a
/// pruned one: runs reading it are rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    pub sigma: usize,
    pub delta: Vec<Vec<Option<usize>>>,
    pub initial: usize,
    pub finals: Vec<bool>,
    pub labels: Vec<String>,
}

impl Dfa {
    /// Builds the reachable part of an implicitly given automaton, numbering states in
    /// breadth-first order from `init` (letters in increasing order).
    pub fn from_step<S, F, P, L>(sigma: usize, init: S, step: F, is_final: P, label: L) -> Dfa
    where
        S: Clone + Eq + Hash,
        F: Fn(&S, u8) -> Option<S>,
        P: Fn(&S) -> bool,
        L: Fn(&S) -> String,
    {
        let mut index: HashMap<S, usize> = HashMap::new();
        let mut states = vec![init.clone()];
        index.insert(init, 0);
        let mut delta = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(q) = queue.pop_front() {
            let s = states[q].clone();
            let mut row = Vec::with_capacity(sigma);
            for a in 0..sigma as u8 {
                row.push(step(&s, a).map(|t| {
                    *index.entry(t.clone()).or_insert_with(|| {
                        states.push(t);
                        queue.push_back(states.len() - 1);
                        states.len() - 1
                    })
                }));
            }
            if delta.len() <= q {
                delta.resize(q + 1, Vec::new());
            }
            delta[q] = row;
        }
        let finals = states.iter().map(&is_final).collect();
        let labels = states.iter().map(&label).collect();
        Dfa { sigma, delta, initial: 0, finals, labels }
    }

    pub fn len(&self) -> usize {
        self.delta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.delta.is_empty()
    }

    pub fn step(&self, q: usize, a: u8) -> Option<usize> {
        self.delta[q][a as usize]
    }

    pub fn run_from(&self, q: usize, w: &[u8]) -> Option<usize> {
        w.iter().try_fold(q, |q, &a| self.step(q, a))
    }

    pub fn run(&self, w: &[u8]) -> Option<usize> {
        self.run_from(self.initial, w)
    }

    pub fn accepts(&self, w: &[u8]) -> bool {
        self.run(w).is_some_and(|q| self.finals[q])
    }

    pub fn is_pruned(&self) -> bool {
        self.delta.iter().flatten().any(|t| t.is_none())
    }

    pub fn complement(&self) -> Dfa {
        let mut d = self.clone();
        for f in d.finals.iter_mut() {
            *f = !*f;
        }
        d
    }

    /// Same automaton started elsewhere; only states reachable from `q` are kept.
    pub fn restart(&self, q: usize) -> Dfa {
        Dfa::from_step(
            self.sigma,
            q,
            |&s, a| self.step(s, a),
            |&s| self.finals[s],
            |&s| self.labels[s].clone(),
        )
    }

    /// Product over a common alphabet; `rule` combines the final flags.
    pub fn product(a: &Dfa, b: &Dfa, rule: impl Fn(bool, bool) -> bool) -> Dfa {
        assert_eq!(a.sigma, b.sigma, "product needs a common alphabet");
        Dfa::from_step(
            a.sigma,
            (a.initial, b.initial),
            |&(p, q), x| Some((a.step(p, x)?, b.step(q, x)?)),
            |&(p, q)| rule(a.finals[p], b.finals[q]),
            |&(p, q)| format!("({},{})", a.labels[p], b.labels[q]),
        )
    }

    /// Product over the paired alphabet `A x A`: letter `x * sigma + y` moves `a` on `x`
    /// and `b` on `y`.
    pub fn paired_product(a: &Dfa, b: &Dfa, rule: impl Fn(bool, bool) -> bool) -> Dfa {
        let s = a.sigma;
        assert_eq!(s, b.sigma, "paired product needs a common alphabet");
        Dfa::from_step(
            s * s,
            (a.initial, b.initial),
            |&(p, q), xy| {
                let (x, y) = (xy as usize / s, xy as usize % s);
                Some((a.step(p, x as u8)?, b.step(q, y as u8)?))
            },
            |&(p, q)| rule(a.finals[p], b.finals[q]),
            |&(p, q)| format!("({},{})", a.labels[p], b.labels[q]),
        )
    }

    /// `[z^n]` of `sum_{accepted w} weight(w) z^|w|` for `n <= n_max`, exact.
    pub fn series(&self, weights: &[Rational], n_max: usize) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.len()];
        x[self.initial] = Rational::from_integer(1.into());
        let mut out = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let acc = x.iter().enumerate().filter(|(q, _)| self.finals[*q]).fold(Rational::zero(), |s, (_, v)| s + v);
            out.push(acc);
            if n == n_max {
                break;
            }
            let mut y = vec![Rational::zero(); self.len()];
            for (q, v) in x.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                for (a, t) in self.delta[q].iter().enumerate() {
                    if let Some(t) = t {
                        y[*t] += v * &weights[a];
                    }
                }
            }
            x = y;
        }
        out
    }

    /// Floating-point version of [`Dfa::series`].
    pub fn series_f64(&self, weights: &[f64], n_max: usize) -> Vec<f64> {
        let mut x = vec![0.0; self.len()];
        x[self.initial] = 1.0;
        let mut out = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            out.push(x.iter().enumerate().filter(|(q, _)| self.finals[*q]).map(|(_, v)| v).sum());
            if n == n_max {
                break;
            }
            let mut y = vec![0.0; self.len()];
            for (q, v) in x.iter().enumerate() {
                if *v == 0.0 {
                    continue;
                }
                for (a, t) in self.delta[q].iter().enumerate() {
                    if let Some(t) = t {
                        y[*t] += v * weights[a];
                    }
                }
            }
            x = y;
        }
        out
    }

    /// Graphviz rendering; `letter` names letters, `annotate` may decorate a transition.
    pub fn to_dot(&self, letter: impl Fn(u8) -> String, annotate: impl Fn(usize, u8) -> bool) -> String {
        let mut s = String::from("digraph {\n  rankdir=LR;\n  node [shape=circle];\n");
        let _ = writeln!(s, "  start [shape=point];\n  start -> {};", self.initial);
        for q in 0..self.len() {
            let shape = if self.finals[q] { ", shape=doublecircle" } else { "" };
            let label = if self.labels[q].is_empty() { "ε" } else { &self.labels[q] };
            let _ = writeln!(s, "  {q} [label=\"{q}\\n{label}\"{shape}];");
        }
        for q in 0..self.len() {
            for a in 0..self.sigma as u8 {
                if let Some(t) = self.step(q, a) {
                    let mark = if annotate(q, a) { "~" } else { "" };
                    let _ = writeln!(s, "  {q} -> {t} [label=\"{mark}{}\"];", letter(a));
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Alphabet;

    #[test]
    fn product_with_universal_is_identity() {
        let a = Alphabet::binary();
        let k = kmp_automaton(&a.parse("ACA").unwrap(), 2);
        let u = Dfa::from_step(2, (), |_, _| Some(()), |_| true, |_| String::new());
        let p = Dfa::product(&k, &u, |x, y| x && y);
        assert_eq!(p.delta, k.delta);
        assert_eq!(p.finals, k.finals);
    }

    #[test]
    fn bnn_product_states() {
        let a = Alphabet::dna();
        for (w, bound) in [("AAAAA", 36), ("ACGTC", 36)] {
            let b = a.parse(w).unwrap();
            let k = kmp_automaton(&b, 4);
            let p = Dfa::paired_product(&kmp_avoiding(&b, 4), &k, |x, y| x && y);
            assert!(p.len() <= bound);
            let finals: Vec<&String> = p.labels.iter().zip(&p.finals).filter(|(_, f)| **f).map(|(l, _)| l).collect();
            assert!(finals.iter().all(|l| l.ends_with(",5)")));
        }
    }

    #[test]
    fn complement_and_dot() {
        let a = Alphabet::binary();
        let k = kmp_automaton(&a.parse("AA").unwrap(), 2);
        let c = k.complement();
        assert!(k.accepts(&[0, 0]) && !c.accepts(&[0, 0]));
        let dot = k.to_dot(|x| a.symbol(x).to_string(), |_, _| false);
        assert!(dot.contains("0 -> 1 [label=\"A\"]"));
    }
}
