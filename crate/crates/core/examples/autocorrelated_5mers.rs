//! Expected waiting times of the ten most autocorrelated 5-mers at n = 1000, with the
//! BNN and BV ranks over all 1024 5-mers.

use kmerwait::evolution::{scan_kmers, Method, ModelParams};

const WORDS: [&str; 10] = ["CCCCC", "GGGGG", "TTTTT", "AAAAA", "CGCGC", "TCCCC", "CCCCT", "GCGCG", "CTCTC", "CACAC"];

fn main() -> kmerwait::Result<()> {
    let p = ModelParams::promoter();
    let bnn = scan_kmers(5, 1000, &p, Method::Bnn)?;
    let bv = scan_kmers(5, 1000, &p, Method::Bv)?;
    println!("{:<6} {:>9} {:>5} {:>9} {:>5} {:>6}", "word", "E_BNN/1e6", "rank", "E_BV/1e6", "rank", "ratio");
    for w in WORDS {
        let find = |rows: &[kmerwait::evolution::ScanRow]| {
            rows.iter().find(|r| p.alphabet.render(&r.word) == w).cloned().expect("every 5-mer is scanned")
        };
        let (x, y) = (find(&bnn), find(&bv));
        println!(
            "{w:<6} {:>9.3} {:>5} {:>9.3} {:>5} {:>6.2}",
            x.expected_t / 1e6,
            x.rank,
            y.expected_t / 1e6,
            y.rank,
            x.expected_t / y.expected_t
        );
    }
    Ok(())
}
