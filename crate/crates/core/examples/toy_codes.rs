//! Marked constrained code matrices and linear-regime constants for the binary toys
//! ACAC and AACC under uniform letters.

use kmerwait::evolution::{asymptotics_exact, ModelParams};
use kmerwait::languages::{constrained_code_matrix, marked_code_gf};
use kmerwait::HitFilter;

fn main() -> kmerwait::Result<()> {
    let p = ModelParams::binary_uniform();
    for w in ["ACAC", "AACC"] {
        let b = p.alphabet.parse(w)?;
        let codes = constrained_code_matrix(&b, &p.alphabet)?;
        let marked = marked_code_gf(&b, &codes, &p.nu, HitFilter::Positions);
        println!("b = {w}");
        for (i, v) in codes.words.iter().enumerate() {
            println!("  v{} = {}", i + 1, p.alphabet.render(v));
        }
        println!("  Kbar(z,t) =\n{}", marked.k);
        let c = asymptotics_exact(&b, &p)?;
        println!("  tau = {:.12}  C1 = {:.10}  C2 = {:.10}", c.tau, c.hits_c1, c.hits_c2);
        println!("  fit over n in [50,200]: slope {:.10}, max residual {:.1e}\n", c.fit.slope, c.fit.max_residual);
    }
    Ok(())
}
