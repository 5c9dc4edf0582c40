//! `cargo run --example waiting_time -- CACAC 1000`: p_n and E(T_n) by every method.

use kmerwait::evolution::{bnn_drift, waiting_time, Method, ModelParams};

fn main() -> kmerwait::Result<()> {
    let mut args = std::env::args().skip(1);
    let word = args.next().unwrap_or_else(|| "CACAC".into());
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(1000);
    let p = ModelParams::promoter();
    let b = p.alphabet.parse(&word)?;
    for m in Method::ALL {
        let r = waiting_time(&b, n, &p, m)?;
        println!("{m:<6} p_n = {:.6e}  E(T) = {:.1} generations ({:.3}e6)", r.p_n, r.expected_t, r.expected_t / 1e6);
    }
    println!("f64 vs double-double drift: {:.1e}", bnn_drift(&b, n, &p));
    Ok(())
}
