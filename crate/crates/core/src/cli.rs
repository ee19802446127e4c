//! The `qtfock` command line. [`run`] parses arguments, executes one
//! subcommand and returns the exit code together with everything to print.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::config::{Config, OutputFormat};
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::fock::{check_comm_phi, check_cor1, check_heisenberg, check_thm1, check_thm2};
use crate::localization::{check_single_box, ext_char, geometric_w_element};
use crate::macdonald::{
    check_hm2, check_interpolation, interpolation_hstar, macdonald_j, macdonald_p, modified_h,
    set_cache_dir,
};
use crate::mmc::{cherednik_check, combine, finmac_check, stabilization_check};
use crate::localization::ideal_point;
use crate::partition::{partitions_up_to, Partition};
use crate::report::{Report, Status};
use crate::symfunc::{basis_convert, Basis, SymFunc};
use crate::zfun::{check_pert, check_quiver, compare_zfun, z_inst_trace, z_pert, QuiverSpec};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "qtfock", version, about = "Exact (q,t) Fock-space and Macdonald computations")]
struct Cli {
    /// Configuration file of `key = value` lines; flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Macdonald table cache directory (overrides QTFOCK_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MacBasis {
    P,
    J,
    H,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Expand {
    P,
    M,
    S,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Thm2,
    Cor1,
    Thm1,
    Comm,
    Hm2,
    Interp,
    Fixed,
    Pert,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Print P_μ, J_μ or H_μ.
    Macdonald {
        #[arg(long)]
        mu: String,
        #[arg(long, value_enum, default_value = "h", ignore_case = true)]
        basis: MacBasis,
        /// Basis of the printed expansion.
        #[arg(long, value_enum, default_value = "p")]
        expand: Expand,
    },
    /// Print the interpolation polynomial H*_μ.
    Interp {
        #[arg(long)]
        mu: String,
        /// Tabulate H*_μ at the points of all λ with |λ| ≤ --max.
        #[arg(long)]
        check_vanishing: bool,
        #[arg(long)]
        max: Option<u32>,
    },
    /// Run an identity suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        max_degree: Option<u32>,
        #[arg(long)]
        m_order: Option<u32>,
    },
    /// Ext character at a pair of fixed points and the W(m) matrix element.
    Ext {
        #[arg(long)]
        lam: String,
        #[arg(long)]
        mu: String,
    },
    /// Instanton partition function as a trace of W operators.
    Zfun {
        #[arg(long, default_value_t = 0)]
        r: usize,
        #[arg(long, default_value_t = 4)]
        order: u32,
        /// Compare against the closed form at m ↦ m q t.
        #[arg(long)]
        redefine_mass: bool,
        /// Comma-separated node masses (default `m` at every node).
        #[arg(long)]
        masses: Option<String>,
        /// Also print the perturbative factor through this total order.
        #[arg(long)]
        pert: Option<u32>,
    },
    /// Cherednik's constant-term identity at t = q^k in N variables.
    Mmc {
        #[arg(long = "N")]
        n: usize,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        qprec: Option<u32>,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        /// Also check the N → ∞ form and the finite-N stabilization.
        #[arg(long)]
        limit: bool,
    },
}

/// Output of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn usage(stderr: String) -> Outcome {
    Outcome {
        code: EXIT_USAGE,
        stdout: String::new(),
        stderr,
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            return if code == EXIT_PASS {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                usage(text)
            };
        }
    };
    let config = match load_config(&cli) {
        Ok(c) => c,
        Err(e) => return usage(format!("error: {e}\n")),
    };
    set_cache_dir(config.usable_cache_dir());
    let reports = match execute(&cli.cmd, &config) {
        Ok(r) => r,
        Err(e) => return usage(format!("error: {e}\n")),
    };
    let mut stdout = String::new();
    for r in &reports {
        stdout.push_str(&match config.output_format {
            OutputFormat::Text => r.to_text(),
            OutputFormat::Structured => r.to_structured(),
        });
    }
    let code = if reports.iter().all(Report::passed) { EXIT_PASS } else { EXIT_FAIL };
    Outcome { code, stdout, stderr: String::new() }
}

fn load_config(cli: &Cli) -> Result<Config> {
    let mut c = Config::default();
    if let Some(p) = &cli.config {
        c = c.merge_file(p)?;
    }
    if let Some(d) = &cli.cache_dir {
        c.cache_dir = Some(d.clone());
    }
    if let Some(f) = cli.format {
        c.output_format = match f {
            Format::Text => OutputFormat::Text,
            Format::Structured => OutputFormat::Structured,
        };
    }
    match &cli.cmd {
        Cmd::Verify { max_degree, m_order, .. } => {
            c.max_degree = positive("--max-degree", max_degree.unwrap_or(c.max_degree))?;
            c.m_order = positive("--m-order", m_order.unwrap_or(c.m_order))?;
        }
        Cmd::Mmc { qprec: Some(p), .. } => c.q_precision = positive("--qprec", *p)?,
        _ => {}
    }
    Ok(c.with_env())
}

fn positive(flag: &str, v: u32) -> Result<u32> {
    if v == 0 {
        return Err(Error::Domain(format!("{flag} must be positive")));
    }
    Ok(v)
}

fn parse_partition(s: &str) -> Result<Partition> {
    s.parse()
}

/// `Σ c_λ b[λ]` with unit coefficients omitted.
pub fn render(coeffs: &BTreeMap<Partition, FieldElem>, letter: char) -> String {
    if coeffs.is_empty() {
        return "0".into();
    }
    let terms: Vec<String> = coeffs
        .iter()
        .map(|(la, c)| {
            let parts: Vec<String> = la.parts().iter().map(u32::to_string).collect();
            let b = format!("{letter}[{}]", parts.join(","));
            match (la.is_empty(), c.is_one()) {
                (true, _) => format!("({c})"),
                (false, true) => b,
                (false, false) => format!("({c})*{b}"),
            }
        })
        .collect();
    terms.join(" + ")
}

fn render_in(f: &SymFunc, e: Expand) -> String {
    let (basis, letter) = match e {
        Expand::P => (Basis::Power, 'p'),
        Expand::M => (Basis::Monomial, 'm'),
        Expand::S => (Basis::Schur, 's'),
    };
    render(&basis_convert(f, basis), letter)
}

fn execute(cmd: &Cmd, config: &Config) -> Result<Vec<Report>> {
    match cmd {
        Cmd::Macdonald { mu, basis, expand } => {
            let mu = parse_partition(mu)?;
            let (name, f) = match basis {
                MacBasis::P => ("P", macdonald_p(&mu)),
                MacBasis::J => ("J", macdonald_j(&mu)),
                MacBasis::H => ("H", modified_h(&mu)),
            };
            let mut rep = Report::listing("macdonald").param("mu", &mu).param("basis", name);
            rep.row(format!("{name}{mu}"), render_in(&f, *expand));
            Ok(vec![rep])
        }
        Cmd::Interp { mu, check_vanishing, max } => {
            let mu = parse_partition(mu)?;
            let hs = interpolation_hstar(&mu);
            let mut rep = Report::listing("interp").param("mu", &mu);
            rep.row(format!("H*{mu}"), render_in(&hs, Expand::P));
            if *check_vanishing {
                let max = max.unwrap_or(config.max_degree.max(mu.size()));
                rep = rep.param("max", max);
                rep.status = Status::Inconclusive;
                for la in partitions_up_to(max) {
                    let v = hs.evaluate(&ideal_point(&la).negated());
                    rep.row(format!("at{la}"), &v);
                    if !la.contains(&mu) {
                        rep.check(v.is_zero(), || format!("nonzero at {la}: {v}"));
                    } else if la == mu {
                        rep.check(!v.is_zero(), || format!("vanishes at its own point {la}"));
                    }
                }
            }
            Ok(vec![rep])
        }
        Cmd::Verify { suite, .. } => {
            let d = config.max_degree;
            let rep = match suite {
                Suite::Thm2 => check_thm2(d),
                Suite::Cor1 => check_cor1(d),
                Suite::Thm1 => check_thm1(d, config.m_order),
                Suite::Comm => {
                    let mode = i32::try_from(d).map_err(|_| Error::Domain("degree too large".into()))?;
                    combine("comm", &[check_heisenberg(mode, d), check_comm_phi(d, d)])
                        .param("max_degree", d)
                }
                Suite::Hm2 => check_hm2(d),
                Suite::Interp => check_interpolation(d),
                Suite::Fixed => check_single_box(d),
                Suite::Pert => check_pert(d),
            };
            Ok(vec![rep])
        }
        Cmd::Ext { lam, mu } => {
            let la = parse_partition(lam)?;
            let mu = parse_partition(mu)?;
            let e = ext_char(&la, &mu);
            let mut rep = Report::listing("ext").param("lambda", &la).param("mu", &mu);
            rep.row("rank", e.rank());
            rep.row("weights", &e);
            rep.row("w_element", geometric_w_element(&la, &mu));
            Ok(vec![rep])
        }
        Cmd::Zfun { r, order, redefine_mass, masses, pert } => {
            let masses = match masses {
                Some(s) => s
                    .split(',')
                    .map(|x| x.trim().parse::<FieldElem>())
                    .collect::<Result<Vec<_>>>()?,
                None => vec![FieldElem::m(); r + 1],
            };
            if masses.len() != r + 1 {
                return Err(Error::Domain(format!(
                    "--r {r} needs {} masses, got {}",
                    r + 1,
                    masses.len()
                )));
            }
            let spec = QuiverSpec::new(masses)?;
            let mut out = Vec::new();
            if *r == 0 && spec.masses[0] == FieldElem::m() {
                out.push(compare_zfun(*order, *redefine_mass)?);
            } else {
                let mut rep = check_quiver(&spec, *order)?;
                for (k, v) in z_inst_trace(&spec, *order)? {
                    let k: Vec<String> = k.iter().map(u32::to_string).collect();
                    rep.row(format!("trace.{}", k.join(",")), v);
                }
                out.push(rep);
            }
            if let Some(p) = pert {
                let mut rep = check_pert(*p);
                rep.rows.clear();
                for (d, c) in z_pert(*p).iter().enumerate() {
                    rep.row(format!("pert.{d}"), c);
                }
                out.push(rep);
            }
            Ok(out)
        }
        Cmd::Mmc { n, k, mu, nu, limit, .. } => {
            let mu = parse_partition(mu)?;
            let nu = parse_partition(nu)?;
            if mu.len() > *n || nu.len() > *n {
                return Err(Error::Domain(format!("partitions need at most {n} parts")));
            }
            if *k == 0 || *n == 0 {
                return Err(Error::Domain("--N and --k must be positive".into()));
            }
            let prec = config.q_precision;
            let mut out = vec![cherednik_check(&mu, &nu, *n, *k, prec)];
            if *limit {
                out.push(finmac_check(&mu, &nu));
                let window = k * (*n as u32 - 1);
                out.push(stabilization_check(&mu, &nu, *n, *k, window.min(prec)));
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h1_prints_p1() {
        let o = run(["qtfock", "macdonald", "--mu", "1", "--basis", "H"]);
        assert_eq!(o.code, EXIT_PASS);
        assert!(o.stdout.contains("H(1): p[1]"), "{}", o.stdout);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(["qtfock", "macdonald", "--mu", "1,2"]).code, EXIT_USAGE);
        assert_eq!(run(["qtfock", "frobnicate"]).code, EXIT_USAGE);
        assert_eq!(run(["qtfock", "verify", "thm2", "--max-degree", "0"]).code, EXIT_USAGE);
    }
}
