//! `kmerwait` command line. Every subcommand prints an aligned table by default and CSV with
//! `--csv`; floating-point values carry 10 significant digits.

use std::collections::HashSet;
use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use crate::automata::ClumpAutomaton;
use crate::evolution::{self, AsymptoticsRoute, Method, ModelParams};
use crate::gfcore::to_f64;
use crate::languages::{clump_gf_language, code_matrix, constrained_code_matrix, marked_code_gf};
use crate::oracle;
use crate::words::{correlation_set, neighbors_lex, Alphabet, HitFilter, MutationType, Word};
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(name = "kmerwait", version, about = "Waiting times for k-mer emergence under point mutation")]
pub struct Cli {
    /// CSV with a header row instead of an aligned table
    #[arg(long, global = true)]
    pub csv: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Bv,
    Bnn,
    Clump,
    All,
}

impl MethodArg {
    fn expand(self) -> Vec<Method> {
        match self {
            MethodArg::Bv => vec![Method::Bv],
            MethodArg::Bnn => vec![Method::Bnn],
            MethodArg::Clump => vec![Method::Clump],
            MethodArg::All => Method::ALL.to_vec(),
        }
    }
}

fn expand_methods(args: &[MethodArg]) -> Vec<Method> {
    let mut seen = HashSet::new();
    args.iter().flat_map(|m| m.expand()).filter(|m| seen.insert(*m)).collect()
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// p_n and E(T_n) of one word
    Wait {
        word: String,
        #[arg(long, short = 'n')]
        length: usize,
        /// Params file, or a builtin: promoter, binary-uniform
        #[arg(long, default_value = "promoter")]
        params: String,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "bnn")]
        method: Vec<MethodArg>,
    },
    /// Rank every k-mer by expected waiting time
    Scan {
        #[arg(long)]
        k: usize,
        #[arg(long, short = 'n')]
        length: usize,
        #[arg(long, default_value = "promoter")]
        params: String,
        /// Repeat or comma-separate; bnn together with bv adds the ratio column
        #[arg(long, value_enum, value_delimiter = ',', default_value = "bnn")]
        method: Vec<MethodArg>,
        /// One method: the T slowest words. Several: the T largest BNN/BV ratios
        #[arg(long)]
        top: Option<usize>,
    },
    /// Correlation set of two words (or of a word with itself)
    Corr {
        w1: String,
        w2: Option<String>,
        #[arg(long, default_value = "ACGT")]
        alphabet: String,
    },
    /// Code matrices K and K̄ of d_l(b) with marked generating functions
    Codes {
        b: String,
        #[arg(long, default_value = "binary-uniform")]
        params: String,
        /// Count only hits of this mutation type, e.g. A>C
        #[arg(long = "type")]
        mutation: Option<String>,
    },
    /// Bivariate generating function F_b(z,t)
    Gf {
        b: String,
        #[arg(long, default_value = "binary-uniform")]
        params: String,
        #[arg(long = "type")]
        mutation: Option<String>,
        /// Print [z^n t^m] for n <= N instead of the closed form
        #[arg(long)]
        coeffs: Option<usize>,
    },
    /// Asymptotic constants of the expected hit counts
    Asym {
        b: String,
        #[arg(long, default_value = "binary-uniform")]
        params: String,
    },
    /// Clump automaton as a state table or DOT
    Automaton {
        b: String,
        #[arg(long, default_value = "AC")]
        alphabet: String,
        #[arg(long)]
        dot: bool,
        #[arg(long = "type")]
        mutation: Option<String>,
    },
    /// Brute-force reports on short texts
    Oracle {
        b: String,
        #[arg(long, short = 'n')]
        n: usize,
        #[arg(long, default_value = "binary-uniform")]
        params: String,
        /// Hit-count census of texts avoiding b (default)
        #[arg(long, conflicts_with_all = ["pn", "mc"])]
        census: bool,
        /// Exact p_n by enumeration
        #[arg(long, conflicts_with = "mc")]
        pn: bool,
        /// Monte Carlo estimate of p_n with this many trials
        #[arg(long, value_name = "TRIALS")]
        mc: Option<u64>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// f̄_n, E(H_n) and E(H̃_n) for n = 1..=max, hit pairs of all types counted once
    Series {
        b: String,
        b2: Option<String>,
        #[arg(long, default_value = "binary-uniform")]
        params: String,
        #[arg(long, default_value_t = 200)]
        max: usize,
    },
}

/// Formats with 10 significant digits; scientific outside `[1e-4, 1e10)`.
pub fn sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let e = x.abs().log10().floor() as i32;
    if (-4..10).contains(&e) {
        format!("{:.*}", (9 - e) as usize, x)
    } else {
        format!("{x:.9e}")
    }
}

struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&str]) -> Self {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn write(&self, out: &mut dyn Write, csv: bool) -> Result<()> {
        if csv {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(&self.header).map_err(|e| Error::Io(e.to_string()))?;
            for r in &self.rows {
                w.write_record(r).map_err(|e| Error::Io(e.to_string()))?;
            }
            return w.flush().map_err(Error::from);
        }
        let mut width: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for r in &self.rows {
            for (w, c) in width.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let s: Vec<String> = cells.iter().zip(&width).map(|(c, &w)| format!("{c:<w$}")).collect();
            s.join("  ").trim_end().to_string()
        };
        writeln!(out, "{}", line(&self.header))?;
        for r in &self.rows {
            writeln!(out, "{}", line(r))?;
        }
        Ok(())
    }
}

fn word(alphabet: &Alphabet, s: &str) -> Result<Word> {
    alphabet.parse(&s.to_ascii_uppercase())
}

fn filter(alphabet: &Alphabet, mutation: &Option<String>) -> Result<HitFilter> {
    Ok(match mutation {
        Some(s) => HitFilter::Typed(MutationType::parse(s, alphabet)?),
        None => HitFilter::Positions,
    })
}

fn render_set(alphabet: &Alphabet, ws: &[Word]) -> String {
    let s: Vec<String> = ws.iter().map(|w| if w.is_empty() { "ε".to_string() } else { alphabet.render(w) }).collect();
    format!("{{{}}}", s.join(", "))
}

fn wait(b: &str, n: usize, params: &str, methods: &[MethodArg], csv: bool, out: &mut dyn Write) -> Result<()> {
    let p = ModelParams::load(params)?;
    let b = word(&p.alphabet, b)?;
    let mut t = Table::new(&["word", "method", "n", "p_n", "expected_T", "expected_T_1e6", "first_order"]);
    for m in expand_methods(methods) {
        let r = evolution::waiting_time(&b, n, &p, m)?;
        t.push(vec![
            p.alphabet.render(&b),
            m.to_string(),
            n.to_string(),
            sig(r.p_n),
            sig(r.expected_t),
            sig(r.expected_t / 1e6),
            if r.first_order { "ok" } else { "outside" }.to_string(),
        ]);
    }
    t.write(out, csv)
}

fn scan(k: usize, n: usize, params: &str, methods: &[MethodArg], top: Option<usize>, csv: bool, out: &mut dyn Write) -> Result<()> {
    let p = ModelParams::load(params)?;
    let methods = expand_methods(methods);
    let runs: Vec<Vec<evolution::ScanRow>> =
        methods.iter().map(|&m| evolution::scan_kmers(k, n, &p, m)).collect::<Result<_>>()?;

    if let [rows] = runs.as_slice() {
        let mut t = Table::new(if csv {
            &["word", "method", "p_n", "expected_T", "rank", "minimal_period"]
        } else {
            &["word", "method", "p_n", "expected_T", "expected_T_1e6", "rank", "minimal_period"]
        });
        let skip = top.map_or(0, |t| rows.len().saturating_sub(t));
        for r in &rows[skip..] {
            let mut row = vec![p.alphabet.render(&r.word), r.method.to_string(), sig(r.p_n), sig(r.expected_t)];
            if !csv {
                row.push(sig(r.expected_t / 1e6));
            }
            row.extend([r.rank.to_string(), r.minimal_period.to_string()]);
            t.push(row);
        }
        return t.write(out, csv);
    }

    // wide layout, one (E/1e6, rank) pair per method
    let mut by_word: Vec<(Word, usize, Vec<(f64, usize)>)> = runs[0]
        .iter()
        .map(|r| (r.word.clone(), r.minimal_period, Vec::new()))
        .collect();
    by_word.sort_by(|a, b| a.0.cmp(&b.0));
    for rows in &runs {
        for r in rows {
            let i = by_word.binary_search_by(|x| x.0.cmp(&r.word)).expect("same words in every scan");
            by_word[i].2.push((r.expected_t, r.rank));
        }
    }
    let bnn = methods.iter().position(|&m| m == Method::Bnn);
    let bv = methods.iter().position(|&m| m == Method::Bv);
    let ratio = |v: &[(f64, usize)]| match (bnn, bv) {
        (Some(a), Some(b)) => Some(v[a].0 / v[b].0),
        _ => None,
    };
    // sort: ratio descending if available, else rank of the first method
    by_word.sort_by(|x, y| match (ratio(&x.2), ratio(&y.2)) {
        (Some(a), Some(b)) => b.total_cmp(&a).then(x.0.cmp(&y.0)),
        _ => x.2[0].1.cmp(&y.2[0].1),
    });
    if let Some(t) = top {
        by_word.truncate(t);
    }
    let mut header = vec!["word".to_string()];
    for m in &methods {
        header.push(format!("E_{}_1e6", m.to_string().to_uppercase()));
        header.push(format!("rank_{}", m.to_string().to_uppercase()));
    }
    if bnn.is_some() && bv.is_some() {
        header.push("ratio".into());
    }
    header.push("minimal_period".into());
    let mut t = Table { header, rows: Vec::new() };
    for (w, period, v) in &by_word {
        let mut row = vec![p.alphabet.render(w)];
        for &(e, rank) in v {
            row.push(sig(e / 1e6));
            row.push(rank.to_string());
        }
        if let Some(r) = ratio(v) {
            row.push(sig(r));
        }
        row.push(period.to_string());
        t.push(row);
    }
    t.write(out, csv)
}

fn corr(w1: &str, w2: Option<&str>, alphabet: &str, csv: bool, out: &mut dyn Write) -> Result<()> {
    let a = Alphabet::new(alphabet)?;
    let v1 = word(&a, w1)?;
    let v2 = match w2 {
        Some(s) => word(&a, s)?,
        None => v1.clone(),
    };
    let c = correlation_set(&v1, &v2);
    if csv {
        let mut t = Table::new(&["w1", "w2", "correlation"]);
        for e in &c {
            t.push(vec![a.render(&v1), a.render(&v2), a.render(e)]);
        }
        return t.write(out, true);
    }
    writeln!(out, "{}", render_set(&a, &c))?;
    Ok(())
}

fn codes(b: &str, params: &str, mutation: &Option<String>, csv: bool, out: &mut dyn Write) -> Result<()> {
    let p = ModelParams::load(params)?;
    let a = &p.alphabet;
    let b = word(a, b)?;
    let f = filter(a, mutation)?;
    let set = neighbors_lex(&b, a)?;
    let k = code_matrix(&set);
    let kbar = constrained_code_matrix(&b, a)?;
    let marked = marked_code_gf(&b, &kbar, &p.nu, f);

    let mut words = Table::new(&["i", "v_i", "v_i(z,t)"]);
    for (i, w) in set.members().iter().enumerate() {
        words.push(vec![(i + 1).to_string(), a.render(w), marked.v[i].to_string()]);
    }
    words.write(out, csv)?;
    writeln!(out)?;
    let mut t = Table::new(&["i", "j", "v_i", "v_j", "K_ij", "Kbar_ij", "Kbar_ij(z,t)"]);
    for i in 0..k.len() {
        for j in 0..k.len() {
            if k.get(i, j).is_empty() && kbar.get(i, j).is_empty() {
                continue;
            }
            t.push(vec![
                (i + 1).to_string(),
                (j + 1).to_string(),
                a.render(&k.words[i]),
                a.render(&k.words[j]),
                render_set(a, k.get(i, j)),
                render_set(a, kbar.get(i, j)),
                marked.k[(i, j)].to_string(),
            ]);
        }
    }
    t.write(out, csv)
}

fn gf(b: &str, params: &str, mutation: &Option<String>, coeffs: Option<usize>, csv: bool, out: &mut dyn Write) -> Result<()> {
    let p = ModelParams::load(params)?;
    let b = word(&p.alphabet, b)?;
    let f = filter(&p.alphabet, mutation)?;
    match coeffs {
        Some(n_max) => {
            let ca = ClumpAutomaton::new(&b, &p.alphabet)?;
            let mut t = Table::new(&["n", "m", "coefficient", "value"]);
            for (n, poly) in ca.series(&p.nu, f, n_max).iter().enumerate() {
                for (m, c) in poly.coeffs().iter().enumerate() {
                    if !c.is_zero() {
                        t.push(vec![n.to_string(), m.to_string(), c.to_string(), sig(to_f64(c))]);
                    }
                }
            }
            t.write(out, csv)
        }
        None => {
            if p.sigma() > 2 {
                return Err(Error::Guard("closed form limited to two-letter alphabets; use --coeffs".into()));
            }
            let g = clump_gf_language(&b, &p.alphabet, &p.nu, f)?;
            if csv {
                let mut t = Table::new(&["word", "filter", "numerator", "denominator"]);
                t.push(vec![p.alphabet.render(&b), filter_name(&p.alphabet, f), g.num().to_string(), g.den().to_string()]);
                return t.write(out, true);
            }
            writeln!(out, "F_{}(z,t) = {g}", p.alphabet.render(&b))?;
            Ok(())
        }
    }
}

fn filter_name(a: &Alphabet, f: HitFilter) -> String {
    match f {
        HitFilter::Positions => "positions".into(),
        HitFilter::Typed(t) => t.render(a),
    }
}

fn asym(b: &str, params: &str, csv: bool, out: &mut dyn Write) -> Result<()> {
    let p = ModelParams::load(params)?;
    let b = word(&p.alphabet, b)?;
    let c = evolution::asymptotics(&b, &p)?;
    let mut t = Table::new(&["quantity", "value"]);
    let mut kv = |k: String, v: String| t.push(vec![k, v]);
    kv("route".into(), if c.route == AsymptoticsRoute::Exact { "exact" } else { "numeric" }.into());
    kv("tau".into(), sig(c.tau));
    kv("psi".into(), sig(c.psi));
    for ty in &c.types {
        let name = ty.mutation.render(&p.alphabet);
        kv(format!("phi1[{name}]"), sig(ty.phi1));
        kv(format!("phi2[{name}]"), sig(ty.phi2));
        kv(format!("C1[{name}]"), sig(ty.c1));
        kv(format!("C2[{name}]"), sig(ty.c2));
    }
    kv("hits_C1".into(), sig(c.hits_c1));
    kv("hits_C2".into(), sig(c.hits_c2));
    kv("C1".into(), sig(c.c1));
    kv("C2".into(), sig(c.c2));
    kv("fit_slope".into(), sig(c.fit.slope));
    kv("fit_intercept".into(), sig(c.fit.intercept));
    kv("fit_max_residual".into(), sig(c.fit.max_residual));
    kv("decay".into(), sig(c.decay));
    t.write(out, csv)
}

fn automaton(b: &str, alphabet: &str, dot: bool, mutation: &Option<String>, csv: bool, out: &mut dyn Write) -> Result<()> {
    let a = Alphabet::new(alphabet)?;
    let b = word(&a, b)?;
    let f = filter(&a, mutation)?;
    let ca = ClumpAutomaton::new(&b, &a)?;
    if dot {
        write!(out, "{}", ca.to_dot(f))?;
        return Ok(());
    }
    let mut t = Table::new(&["state", "label", "occurrence", "class", "theta"]);
    for q in 0..ca.len() {
        let label = ca.label(q);
        t.push(vec![
            q.to_string(),
            if label.is_empty() { "ε".into() } else { label.to_string() },
            if ca.occurrence[q] { "O" } else { "" }.into(),
            if ca.ebar[q] { "Ebar" } else { "E" }.into(),
            ca.theta[q].as_ref().map(|w| a.render(w)).unwrap_or_default(),
        ]);
    }
    t.write(out, csv)
}

#[allow(clippy::too_many_arguments)]
fn oracle_cmd(
    b: &str,
    n: usize,
    params: &str,
    pn: bool,
    mc: Option<u64>,
    seed: u64,
    csv: bool,
    out: &mut dyn Write,
) -> Result<()> {
    let p = ModelParams::load(params)?;
    let b = word(&p.alphabet, b)?;
    if let Some(trials) = mc {
        let e = oracle::monte_carlo_pn(&b, n, &p, trials, seed)?;
        let mut t = Table::new(&["word", "n", "trials", "hits", "p_n", "stderr", "seed"]);
        t.push(vec![
            p.alphabet.render(&b),
            n.to_string(),
            e.trials.to_string(),
            e.hits.to_string(),
            sig(e.p),
            sig(e.stderr),
            seed.to_string(),
        ]);
        return t.write(out, csv);
    }
    if pn {
        let x = oracle::exact_pn_tiny(&b, n, &p)?;
        let mut t = Table::new(&["word", "n", "p_n", "value"]);
        t.push(vec![p.alphabet.render(&b), n.to_string(), x.to_string(), sig(to_f64(&x))]);
        return t.write(out, csv);
    }
    let r = oracle::enumerate(&b, n, &p.alphabet, &p.nu)?;
    let mut t = Table::new(&["hits", "mass", "value"]);
    for (h, m) in &r.census {
        t.push(vec![h.to_string(), m.to_string(), sig(to_f64(m))]);
    }
    t.write(out, csv)?;
    writeln!(out)?;
    let mut s = Table::new(&["quantity", "exact", "value"]);
    s.push(vec!["avoid_count".into(), r.avoid_count.to_string(), r.avoid_count.to_string()]);
    s.push(vec!["avoid_mass".into(), r.avoid_mass.to_string(), sig(to_f64(&r.avoid_mass))]);
    s.push(vec!["hit_sum".into(), r.hit_sum.to_string(), sig(to_f64(&r.hit_sum))]);
    if !r.avoid_mass.is_zero() {
        let c = &r.hit_sum / &r.avoid_mass;
        s.push(vec!["conditioned_hits".into(), c.to_string(), sig(to_f64(&c))]);
    }
    for (ty, v) in &r.typed_hit_sums {
        s.push(vec![format!("hit_sum[{}]", ty.render(&p.alphabet)), v.to_string(), sig(to_f64(v))]);
    }
    s.write(out, csv)
}

fn series(words: &[&str], params: &str, max: usize, csv: bool, out: &mut dyn Write) -> Result<()> {
    let p = ModelParams::load(params)?;
    let mut t = Table::new(&["word", "n", "avoid", "expected_hits", "conditioned_hits"]);
    for s in words {
        let b = word(&p.alphabet, s)?;
        let ca = ClumpAutomaton::new(&b, &p.alphabet)?;
        let h = ca.hit_stream(&p.nu_f64, |_| 1.0, max);
        for n in 1..=max {
            t.push(vec![p.alphabet.render(&b), n.to_string(), sig(h.avoid[n]), sig(h.hits[n]), sig(h.conditioned(n))]);
        }
    }
    t.write(out, csv)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    let csv = cli.csv;
    match &cli.command {
        Command::Wait { word, length, params, method } => wait(word, *length, params, method, csv, out),
        Command::Scan { k, length, params, method, top } => scan(*k, *length, params, method, *top, csv, out),
        Command::Corr { w1, w2, alphabet } => corr(w1, w2.as_deref(), alphabet, csv, out),
        Command::Codes { b, params, mutation } => codes(b, params, mutation, csv, out),
        Command::Gf { b, params, mutation, coeffs } => gf(b, params, mutation, *coeffs, csv, out),
        Command::Asym { b, params } => asym(b, params, csv, out),
        Command::Automaton { b, alphabet, dot, mutation } => automaton(b, alphabet, *dot, mutation, csv, out),
        Command::Oracle { b, n, params, census: _, pn, mc, seed } => oracle_cmd(b, *n, params, *pn, *mc, *seed, csv, out),
        Command::Series { b, b2, params, max } => {
            let mut ws = vec![b.as_str()];
            ws.extend(b2.as_deref());
            series(&ws, params, *max, csv, out)
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the exit status.
/// Diagnostics go to `err` as a single line.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let msg = e.to_string();
            let detail: Vec<&str> = msg
                .lines()
                .take_while(|l| !l.starts_with("Usage"))
                .map(|l| l.trim().trim_start_matches("error: "))
                .filter(|l| !l.is_empty() && !l.starts_with("tip:") && !l.starts_with("For more information"))
                .collect();
            let _ = writeln!(err, "error: {}", detail.join(" "));
            return 2;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("kmerwait").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn significant_digits() {
        assert_eq!(sig(10.656_123_456_78), "10.65612346");
        assert_eq!(sig(0.245_250_388_928_9), "0.2452503889");
        assert_eq!(sig(1.5e-7), "1.500000000e-7");
        assert_eq!(sig(0.0), "0");
    }

    #[test]
    fn correlation_example() {
        let (code, out, _) = call(&["corr", "CATAT", "TATAT"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "{AT, ATAT}");
    }

    #[test]
    fn bad_input_is_one_line() {
        let (code, _, err) = call(&["wait", "AXA", "--length", "10"]);
        assert_eq!(code, 1);
        assert_eq!(err.lines().count(), 1);
        assert!(err.starts_with("error: "));
        let (code, _, err) = call(&["wait", "AAA"]);
        assert_eq!(code, 2);
        assert_eq!(err.lines().count(), 1);
    }

    #[test]
    fn csv_has_header() {
        let (code, out, _) = call(&["--csv", "wait", "AAAAA", "--length", "1000", "--method", "bv,bnn"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "word,method,n,p_n,expected_T,expected_T_1e6,first_order");
        assert_eq!(lines.len(), 3);
        assert!(lines[2].starts_with("AAAAA,bnn,1000,"));
    }

    #[test]
    fn automaton_table_lists_states() {
        let (code, out, _) = call(&["automaton", "AAA"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 18);
        let (_, dot, _) = call(&["automaton", "AAA", "--dot"]);
        assert!(dot.starts_with("digraph"));
    }

    #[test]
    fn guard_is_reported() {
        let (code, _, err) = call(&["oracle", "ACGT", "--n", "30", "--params", "promoter"]);
        assert_eq!(code, 1);
        assert!(err.contains("size guard"));
    }

    #[test]
    fn gf_coefficients_match_avoidance() {
        let (_, out, _) = call(&["--csv", "gf", "AAA", "--coeffs", "3"]);
        // n = 3, m = 0: four avoiding words without a hit, each of probability 1/8
        assert!(out.lines().any(|l| l == "3,0,1/2,0.5000000000"));
    }
}
