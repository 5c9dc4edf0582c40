//! Seeded Monte Carlo estimate of p_n against the product automaton, with mutation rates
//! inflated so hits are frequent enough to count.

use kmerwait::evolution::{bnn_probability, ModelParams};
use kmerwait::gfcore::{rat, to_f64};
use kmerwait::oracle::{exact_pn_tiny, monte_carlo_pn};

fn main() -> kmerwait::Result<()> {
    let p = ModelParams::promoter().with_uniform_rate(&rat(1, 500));
    let b = p.alphabet.parse("AAAAA")?;
    let mc = monte_carlo_pn(&b, 300, &p, 400_000, 42)?;
    let exact = bnn_probability(&b, 300, &p);
    println!(
        "n = 300: MC {:.4e} ± {:.1e} ({} hits), automaton {:.4e}, z = {:.2}",
        mc.p,
        mc.stderr,
        mc.hits,
        exact,
        (mc.p - exact) / mc.stderr
    );

    let small = ModelParams::binary_uniform().with_uniform_rate(&rat(1, 100));
    let b = small.alphabet.parse("ACA")?;
    let e = exact_pn_tiny(&b, 10, &small)?;
    println!("ACA, n = 10: enumeration {:.12e}, automaton {:.12e}", to_f64(&e), bnn_probability(&b, 10, &small));
    Ok(())
}
