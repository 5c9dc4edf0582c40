//! CSV of the expected number of putative hits, conditioned on avoidance, for the binary
//! toys. Linear in n after a short transient.

use kmerwait::automata::ClumpAutomaton;
use kmerwait::evolution::ModelParams;

fn main() -> kmerwait::Result<()> {
    let p = ModelParams::binary_uniform();
    let words = ["AAA", "ACC", "ACAC", "AACC", "AACA"];
    let streams = words
        .iter()
        .map(|w| Ok(ClumpAutomaton::new(&p.alphabet.parse(w)?, &p.alphabet)?.hit_stream(&p.nu_f64, |_| 1.0, 60)))
        .collect::<kmerwait::Result<Vec<_>>>()?;
    println!("n,{}", words.join(","));
    for n in 1..=60 {
        let row: Vec<String> = streams.iter().map(|s| format!("{:.10}", s.conditioned(n))).collect();
        println!("{n},{}", row.join(","));
    }
    Ok(())
}
