//! Right, minimal, ultimate and avoiding languages of a reduced set: the rational
//! solution, its identities, and coefficients from the matching automata.

use kmerwait::automata::{language_automaton, Language};
use kmerwait::gfcore::rat;
use kmerwait::languages::{rs_solve, LetterDistribution};
use kmerwait::{Alphabet, WordSet};

fn main() -> kmerwait::Result<()> {
    let a = Alphabet::binary();
    let set = WordSet::new(vec![a.parse("ACA")?, a.parse("CAA")?])?;
    let nu = LetterDistribution::uniform(2);
    let l = rs_solve(&set, &nu)?;
    println!("N(z) = {}", l.n);
    println!("parse identity: {}, all identities: {}", l.parse_identity()?, l.check_identities()?);
    let weights = vec![rat(1, 2); 2];
    let n_coeffs = l.n.taylor_coeffs(&rat(1, 1), 8)?;
    let auto = language_automaton(&set, 2, Language::Not).series(&weights, 8);
    println!("[z^n] N:         {:?}", n_coeffs.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    println!("automaton count: {:?}", auto.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    let m01 = l.m[(0, 1)].taylor_coeffs(&rat(1, 1), 8)?;
    let auto = language_automaton(&set, 2, Language::Minimal(0, 1)).series(&weights, 8);
    println!("M_12 agrees with its automaton: {}", m01 == auto);
    Ok(())
}
