//! Correlation sets, neighbour sets and minimal periods.

use kmerwait::words::{correlation_set, minimal_period, neighbors_lex};
use kmerwait::Alphabet;

fn main() -> kmerwait::Result<()> {
    let a = Alphabet::dna();
    let (u, v) = (a.parse("CATAT")?, a.parse("TATAT")?);
    let c: Vec<String> = correlation_set(&u, &v).iter().map(|w| a.render(w)).collect();
    println!("C(CATAT, TATAT) = {{{}}}", c.join(", "));
    for w in ["AAAAA", "CACAC", "ACGTA", "GCGCG"] {
        let b = a.parse(w)?;
        println!("{w}: minimal period {}, |d(b)| = {}", minimal_period(&b), neighbors_lex(&b, &a)?.len());
    }
    let bin = Alphabet::binary();
    let d = neighbors_lex(&bin.parse("ACAC")?, &bin)?;
    let r: Vec<String> = d.members().iter().map(|w| bin.render(w)).collect();
    println!("d(ACAC) over {{A,C}} in order: {}", r.join(" "));
    Ok(())
}
