//! Hit census of short texts three ways: enumeration, clump decomposition of the
//! neighbour set, and the clump automaton.

use kmerwait::automata::ClumpAutomaton;
use kmerwait::gfcore::rat;
use kmerwait::languages::{clump_gf_language, LetterDistribution};
use kmerwait::oracle::enumerate;
use kmerwait::{Alphabet, HitFilter};

fn main() -> kmerwait::Result<()> {
    let a = Alphabet::binary();
    let nu = LetterDistribution::new(vec![rat(1, 3), rat(2, 3)])?;
    let n_max = 10;
    for w in ["AAA", "ACC", "ACAC", "AACC", "AACA"] {
        let b = a.parse(w)?;
        let lang = clump_gf_language(&b, &a, &nu, HitFilter::Positions)?.series_in_t(n_max)?;
        let auto = ClumpAutomaton::new(&b, &a)?.series(&nu, HitFilter::Positions, n_max);
        let mut agree = true;
        for n in 0..=n_max {
            let census = enumerate(&b, n, &a, &nu)?.census;
            for (m, c) in auto[n].coeffs().iter().enumerate() {
                let e = census.get(&m).cloned().unwrap_or_else(|| rat(0, 1));
                agree &= *c == e && lang[n].coeff(m) == e;
            }
        }
        println!("{w:<5} n <= {n_max}: {}", if agree { "all three agree" } else { "MISMATCH" });
    }
    Ok(())
}
