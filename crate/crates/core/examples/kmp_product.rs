//! Occurrence automaton of a word and the paired automaton behind the exact p_n.

use kmerwait::automata::kmp_automaton;
use kmerwait::evolution::{bnn_product, ModelParams};

fn main() -> kmerwait::Result<()> {
    let p = ModelParams::promoter();
    let b = p.alphabet.parse("ACACA")?;
    let kmp = kmp_automaton(&b, 4);
    for q in 0..kmp.len() {
        let row: Vec<String> = (0..4u8)
            .map(|c| format!("{}->{}", p.alphabet.symbol(c), kmp.step(q, c).map_or("-".into(), |t| t.to_string())))
            .collect();
        println!("{q}: {}", row.join(" "));
    }
    let pair = bnn_product(&b, 4);
    println!("paired automaton: {} states, {} final", pair.len(), pair.finals.iter().filter(|&&f| f).count());
    Ok(())
}
