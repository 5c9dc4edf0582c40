//! The clump automaton of AAA over {A,C}: states, occurrence set, theta and the Markov
//! property. Pass `--dot` for Graphviz output.

use kmerwait::automata::ClumpAutomaton;
use kmerwait::{Alphabet, HitFilter};

fn main() -> kmerwait::Result<()> {
    let a = Alphabet::binary();
    let word = std::env::args().nth(1).filter(|s| s != "--dot").unwrap_or_else(|| "AAA".into());
    let ca = ClumpAutomaton::new(&a.parse(&word)?, &a)?;
    if std::env::args().any(|s| s == "--dot") {
        print!("{}", ca.to_dot(HitFilter::Positions));
        return Ok(());
    }
    println!("{} states, Markov property: {}", ca.len(), ca.markov_property());
    for q in 0..ca.len() {
        let theta = ca.theta[q].as_ref().map(|w| a.render(w)).unwrap_or_default();
        let class = if ca.ebar[q] { "Ebar" } else { "E" };
        let o = if ca.occurrence[q] { "O" } else { "" };
        println!("{q:>3} {:<8} {o:<2} {class:<5} {theta}", ca.label(q));
    }
    let d = ca.theta_mark_disagreements();
    println!("transitions where theta-based marks differ from exact marks: {}", d.len());
    Ok(())
}
