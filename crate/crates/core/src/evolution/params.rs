use std::path::Path;

use num_traits::{Signed, Zero};

use crate::gfcore::{parse_decimal, rat, to_f64, Rational};
use crate::languages::LetterDistribution;
use crate::words::{Alphabet, MutationType};
use crate::{Error, Result};

const PROMOTER: &str = include_str!("../../params/promoter.params");
const BINARY_UNIFORM: &str = include_str!("../../params/binary_uniform.params");

const NU_TOL: f64 = 1e-12;
const ROW_TOL: f64 = 1e-7;

/// Letter distribution and one-generation substitution matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelParams {
    pub alphabet: Alphabet,
    pub nu: LetterDistribution,
    /// `p1[x][y] = p_{x -> y}(1)`, exact as written.
    pub p1: Vec<Vec<Rational>>,
    pub nu_f64: Vec<f64>,
    pub p1_f64: Vec<Vec<f64>>,
}

impl ModelParams {
    /// Parses the line format `nu <SYMBOL> <decimal>` / `p <FROM> <TO> <decimal>`, `#` comments.
    pub fn parse(text: &str) -> Result<Self> {
        let mut symbols = String::new();
        let mut nu: Vec<(usize, Rational)> = Vec::new();
        let mut p: Vec<(usize, char, char, Rational)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |msg: String| Error::Params { line, msg };
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let f: Vec<&str> = body.split_whitespace().collect();
            let num = |s: &str| parse_decimal(s).ok_or_else(|| err(format!("bad number {s:?}")));
            let sym = |s: &str| {
                let mut c = s.chars();
                match (c.next(), c.next()) {
                    (Some(x), None) => Ok(x),
                    _ => Err(err(format!("bad symbol {s:?}"))),
                }
            };
            match f.as_slice() {
                ["nu", s, v] => {
                    let c = sym(s)?;
                    if symbols.contains(c) {
                        return Err(err(format!("duplicate nu for {c}")));
                    }
                    symbols.push(c);
                    nu.push((line, num(v)?));
                }
                ["p", a, b, v] => p.push((line, sym(a)?, sym(b)?, num(v)?)),
                _ => return Err(err(format!("unrecognised line {body:?}"))),
            }
        }
        let alphabet = Alphabet::new(&symbols).map_err(|e| Error::Params { line: 0, msg: e.to_string() })?;
        let sigma = alphabet.size();

        for (line, v) in &nu {
            if v.is_negative() {
                return Err(Error::Params { line: *line, msg: "negative letter probability".into() });
            }
        }
        let total: Rational = nu.iter().map(|(_, v)| v.clone()).sum();
        if (to_f64(&total) - 1.0).abs() > NU_TOL {
            return Err(Error::Params { line: 0, msg: format!("letter probabilities sum to {}", to_f64(&total)) });
        }
        let nu = LetterDistribution::new(nu.into_iter().map(|(_, v)| v / &total).collect())?;

        let mut p1: Vec<Vec<Option<Rational>>> = vec![vec![None; sigma]; sigma];
        for (line, a, b, v) in p {
            let e = |msg: String| Error::Params { line, msg };
            let x = alphabet.index(a).map_err(|x| e(x.to_string()))? as usize;
            let y = alphabet.index(b).map_err(|x| e(x.to_string()))? as usize;
            if v.is_negative() {
                return Err(e("negative substitution probability".into()));
            }
            if p1[x][y].replace(v).is_some() {
                return Err(e(format!("duplicate entry p {a} {b}")));
            }
        }
        let p1: Vec<Vec<Rational>> = p1
            .into_iter()
            .enumerate()
            .map(|(x, row)| {
                row.into_iter()
                    .enumerate()
                    .map(|(y, v)| {
                        v.ok_or_else(|| Error::Params {
                            line: 0,
                            msg: format!("missing p {} {}", alphabet.symbol(x as u8), alphabet.symbol(y as u8)),
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        for (x, row) in p1.iter().enumerate() {
            let s: Rational = row.iter().sum();
            if (to_f64(&s) - 1.0).abs() > ROW_TOL {
                return Err(Error::Params {
                    line: 0,
                    msg: format!("row {} sums to {}", alphabet.symbol(x as u8), to_f64(&s)),
                });
            }
        }
        let nu_f64 = nu.to_f64();
        let p1_f64 = p1.iter().map(|r| r.iter().map(to_f64).collect()).collect();
        Ok(ModelParams { alphabet, nu, p1, nu_f64, p1_f64 })
    }

    pub fn promoter() -> Self {
        Self::parse(PROMOTER).expect("shipped promoter params")
    }

    pub fn binary_uniform() -> Self {
        Self::parse(BINARY_UNIFORM).expect("shipped binary params")
    }

    /// A builtin name (`promoter`, `binary-uniform`) or a file path.
    pub fn load(source: &str) -> Result<Self> {
        match source {
            "promoter" | "default" => Ok(Self::promoter()),
            "binary-uniform" | "binary_uniform" => Ok(Self::binary_uniform()),
            path => {
                let text = std::fs::read_to_string(Path::new(path))
                    .map_err(|e| Error::Io(format!("{path}: {e}")))?;
                Self::parse(&text)
            }
        }
    }

    /// Same letters, every substitution `x -> y` set to `rate`, diagonal filled up to 1.
    pub fn with_uniform_rate(&self, rate: &Rational) -> Self {
        let sigma = self.alphabet.size();
        let p1: Vec<Vec<Rational>> = (0..sigma)
            .map(|x| {
                (0..sigma)
                    .map(|y| if x == y { rat(1, 1) - rate * rat(sigma as i64 - 1, 1) } else { rate.clone() })
                    .collect()
            })
            .collect();
        let p1_f64 = p1.iter().map(|r| r.iter().map(to_f64).collect()).collect();
        ModelParams { p1, p1_f64, ..self.clone() }
    }

    pub fn sigma(&self) -> usize {
        self.alphabet.size()
    }

    pub fn rate(&self, t: MutationType) -> f64 {
        self.p1_f64[t.from as usize][t.to as usize]
    }

    pub fn max_rate(&self) -> f64 {
        MutationType::all(self.sigma()).into_iter().map(|t| self.rate(t)).fold(0.0, f64::max)
    }

    pub fn is_trivial(&self) -> bool {
        MutationType::all(self.sigma()).iter().all(|t| self.p1[t.from as usize][t.to as usize].is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn promoter_values() {
        let p = ModelParams::promoter();
        assert_eq!(p.alphabet.symbols(), &['A', 'C', 'G', 'T']);
        assert_eq!(p.nu.prob(0), &parse_decimal("0.23889").unwrap());
        assert_eq!(p.nu.prob(3), &parse_decimal("0.24004").unwrap());
        assert_eq!(p.p1[0][1], parse_decimal("4.54999995e-09").unwrap());
    }

    #[test]
    fn binary_uniform_values() {
        let p = ModelParams::binary_uniform();
        assert_eq!(p.nu, LetterDistribution::uniform(2));
        assert_eq!(p.rate(MutationType { from: 0, to: 1 }), 1e-6);
    }

    #[test]
    fn rejects_bad_files() {
        let e = ModelParams::parse("nu A 0.5\nnu C 0.5\np A A 1\np A C x").unwrap_err();
        assert!(matches!(e, Error::Params { line: 4, .. }));
        let e = ModelParams::parse("nu A 0.5\nnu C 0.5\np A A 0.9\np A C 0.0\np C A 0\np C C 1").unwrap_err();
        assert!(e.to_string().contains("row A"));
        let e = ModelParams::parse("nu A 0.5\nnu C 0.5\np A G 1").unwrap_err();
        assert!(matches!(e, Error::Params { line: 3, .. }));
        assert!(ModelParams::parse("nu A 0.6\nnu C 0.5").is_err());
    }
}
