//! Command-line front end: computes Bessel zeros with enclosures, the
//! admissible velocity table, disk spectra, sandwich-bound scans, ground
//! states, radial levels, the nonradiality sweep, and the constrained
//! angular-eigenspace minimizer. Output is deterministic JSON or CSV.

mod cache;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rotwave::{asymptotics, groundstate, specfun, spectrum, Error};
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "rotwave", version, about = "Spectral toolkit for the rotating-wave operator on the unit disk")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Directory for the persistent zero cache (default: $ROTWAVE_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct AlphaArg {
    /// Use the n-th admissible velocity.
    #[arg(long, conflicts_with = "alpha")]
    alpha_n: Option<u32>,
    /// Use a generic velocity (> 1); no gap guarantee.
    #[arg(long)]
    alpha: Option<f64>,
}

impl AlphaArg {
    fn resolve(&self) -> Result<(f64, bool), Error> {
        match (self.alpha_n, self.alpha) {
            (Some(n), None) => Ok((spectrum::alpha_n(n)?.alpha, true)),
            (None, Some(a)) if a > 1.0 => Ok((a, false)),
            (None, Some(a)) => Err(Error::Domain(format!("--alpha must be > 1 (got {a})"))),
            _ => Err(Error::Config(
                "exactly one of --alpha-n or --alpha is required".to_string(),
            )),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Bessel-function zeros with rigorous enclosures.
    Zeros {
        /// Comma-separated orders, e.g. `0,0.5,1`.
        #[arg(long, value_delimiter = ',', required = true)]
        nu: Vec<f64>,
        /// Index range `lo..hi` (inclusive) or a single index.
        #[arg(long)]
        k: String,
    },
    /// Admissible velocity table with kappa and empirical gap constants.
    AlphaSeq {
        /// Range `lo..hi` (inclusive) or a single n.
        #[arg(long)]
        n: String,
        /// Gap-estimate cutoff in ℓ.
        #[arg(long, default_value_t = 200)]
        lmax: u32,
        /// Gap-estimate cutoff in k.
        #[arg(long, default_value_t = 200)]
        kmax: u32,
        /// Skip the gap estimate (fast).
        #[arg(long)]
        no_gap: bool,
    },
    /// Eigenvalue enumeration of the operator at (α, m).
    Spectrum {
        #[command(flatten)]
        alpha: AlphaArg,
        #[arg(long, default_value_t = 0.0)]
        m: f64,
        #[arg(long, default_value_t = 100)]
        lmax: u32,
        #[arg(long, default_value_t = 100)]
        kmax: u32,
        /// Optional μ-shift: enumerate both ± branches.
        #[arg(long)]
        mu: Option<f64>,
    },
    /// Two-sided bound scan for the zero-ratio approach to its limit.
    Sandwich {
        #[arg(long)]
        x: f64,
        #[arg(long)]
        eps: f64,
        #[arg(long, default_value_t = 1)]
        kmin: u32,
        #[arg(long)]
        kmax: u32,
    },
    /// Ground state of the reduced equation on the truncated eigenbasis.
    Ground {
        #[command(flatten)]
        alpha: AlphaArg,
        #[arg(long)]
        m: f64,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 60.0)]
        j_cut: f64,
    },
    /// Positive radial solution and its energy level.
    Radial {
        #[arg(long)]
        m: f64,
        #[arg(long)]
        p: f64,
    },
    /// Mass sweep comparing ground-state and radial levels.
    Scan {
        #[command(flatten)]
        alpha: AlphaArg,
        #[arg(long)]
        p: f64,
        /// Comma-separated masses.
        #[arg(long, value_delimiter = ',', required = true)]
        m: Vec<f64>,
        #[arg(long, default_value_t = 60.0)]
        j_cut: f64,
    },
    /// Constrained minimizer on the angular eigenspace ∂_θu = iku.
    Vk {
        #[command(flatten)]
        alpha: AlphaArg,
        #[arg(long)]
        m: f64,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        p: f64,
    },
}

fn parse_range(s: &str) -> Result<(u32, u32), Error> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo = lo
            .parse::<u32>()
            .map_err(|e| Error::Config(format!("bad range start {lo:?}: {e}")))?;
        let hi = hi
            .parse::<u32>()
            .map_err(|e| Error::Config(format!("bad range end {hi:?}: {e}")))?;
        if lo < 1 || hi < lo {
            return Err(Error::Config(format!("bad range {s:?}")));
        }
        Ok((lo, hi))
    } else {
        let v = s
            .parse::<u32>()
            .map_err(|e| Error::Config(format!("bad index {s:?}: {e}")))?;
        Ok((v, v))
    }
}

fn emit(cli: &Cli, text: String) -> Result<(), Error> {
    match &cli.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Config(format!("writing {path:?}: {e}"))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<(), Error> {
    match &cli.command {
        Command::Zeros { nu, k } => {
            let (k_lo, k_hi) = parse_range(k)?;
            for &n in nu {
                if !(0.0..=1000.0).contains(&n) {
                    return Err(Error::Range(format!(
                        "order {n} outside the validated range [0, 1000]"
                    )));
                }
            }
            if k_hi > 10_000 {
                return Err(Error::Range("zero index above 10000".to_string()));
            }
            let cache_dir = cli
                .cache_dir
                .clone()
                .or_else(|| std::env::var_os("ROTWAVE_CACHE_DIR").map(PathBuf::from));
            let mut cache = cache::ZeroCache::open(cache_dir.as_deref())?;
            let mut zeros = Vec::new();
            for &n in nu {
                for k in k_lo..=k_hi {
                    let value = match cache.get(n, k) {
                        Some(v) => v,
                        None => {
                            let v = specfun::bessel_j_zero(n, k)?.value;
                            cache.insert(n, k, v);
                            v
                        }
                    };
                    let (lower, upper) = specfun::prop_bracket(n, k)?;
                    zeros.push(specfun::BesselZero {
                        order: n,
                        index: k,
                        value,
                        lower,
                        upper,
                    });
                }
            }
            cache.flush()?;
            let text = match cli.format {
                Format::Csv => {
                    let mut s = String::from("nu,k,value,lower,upper\n");
                    for z in &zeros {
                        s.push_str(&format!(
                            "{:.16e},{},{:.16e},{:.16e},{:.16e}\n",
                            z.order, z.index, z.value, z.lower, z.upper
                        ));
                    }
                    s
                }
                Format::Json => serde_json::json!({ "schema": 1, "zeros": zeros }).to_string(),
            };
            emit(cli, text)
        }
        Command::AlphaSeq {
            n,
            lmax,
            kmax,
            no_gap,
        } => {
            let (lo, hi) = parse_range(n)?;
            let cutoff = if *no_gap { None } else { Some((*lmax, *kmax)) };
            let seq = spectrum::alpha_sequence(lo, hi, cutoff)?;
            let text = match cli.format {
                Format::Csv => {
                    let mut s = String::from("n,sigma,alpha,residual,kappa,c_empirical\n");
                    for a in &seq {
                        s.push_str(&format!(
                            "{},{:.16e},{:.16e},{:.3e},{:.16e},{}\n",
                            a.n,
                            a.sigma,
                            a.alpha,
                            a.residual(),
                            a.kappa,
                            a.c_empirical
                                .map_or("".to_string(), |g| format!("{:.16e}", g.c_estimate)),
                        ));
                    }
                    s
                }
                Format::Json => serde_json::json!({ "schema": 1, "alphas": seq }).to_string(),
            };
            emit(cli, text)
        }
        Command::Spectrum {
            alpha,
            m,
            lmax,
            kmax,
            mu,
        } => {
            if *lmax > 4096 || *kmax > 10_000 {
                return Err(Error::Range("cutoffs above the validated range".to_string()));
            }
            let (a, admissible) = alpha.resolve()?;
            let text = if let Some(mu) = mu {
                let s = spectrum::shifted_spectrum(a, *m, *mu, *lmax, *kmax)?;
                match cli.format {
                    Format::Csv => {
                        let mut out = String::from("ell,k,branch,j,lambda,class\n");
                        for p in &s.points {
                            out.push_str(&format!(
                                "{},{},{},{:.16e},{:.16e},{}\n",
                                p.ell,
                                p.k,
                                match p.branch {
                                    spectrum::Branch::Plus => "+",
                                    spectrum::Branch::Minus => "-",
                                },
                                p.j_value,
                                p.lambda,
                                p.sign_class
                            ));
                        }
                        out
                    }
                    Format::Json => serde_json::json!({
                        "schema": 1,
                        "alpha": a,
                        "admissible": admissible,
                        "m": m,
                        "mu": mu,
                        "cutoffs": {"ell_max": lmax, "k_max": kmax},
                        "min_abs_nonkernel": s.min_abs_nonkernel,
                        "min_gap_ratio": s.min_gap_ratio,
                    })
                    .to_string(),
                }
            } else {
                let w = spectrum::enumerate_spectrum(a, *m, *lmax, *kmax)?;
                match cli.format {
                    Format::Csv => w.to_csv(),
                    Format::Json => {
                        let mut v: serde_json::Value =
                            serde_json::from_str(&w.to_json_summary()).unwrap();
                        v["admissible"] = serde_json::json!(admissible);
                        if !admissible {
                            v["gap_guarantee"] = serde_json::json!(false);
                        }
                        v.to_string()
                    }
                }
            };
            emit(cli, text)
        }
        Command::Sandwich { x, eps, kmin, kmax } => {
            if *kmax > 10_000 || x * *kmax as f64 > 1000.0 {
                return Err(Error::Range(
                    "scan exceeds the validated order range (x·kmax <= 1000)".to_string(),
                ));
            }
            let rep = asymptotics::verify_sandwich(*x, *eps, *kmin, *kmax)?;
            let text = match cli.format {
                Format::Csv => rep.to_csv(),
                Format::Json => serde_json::json!({
                    "schema": 1,
                    "x": rep.x,
                    "epsilon": rep.epsilon,
                    "k_min": rep.k_min,
                    "k_max": rep.k_max,
                    "observed_k0": rep.observed_k0,
                })
                .to_string(),
            };
            emit(cli, text)
        }
        Command::Ground { alpha, m, p, j_cut } => {
            validate_p_window(*p)?;
            if !(*j_cut > 3.0 && *j_cut <= 200.0) {
                return Err(Error::Range("j_cut outside (3, 200]".to_string()));
            }
            let (a, _) = alpha.resolve()?;
            let basis = groundstate::assemble_basis(a, *m, *j_cut)?;
            let quad = groundstate::DiskQuadrature::for_basis(&basis)?;
            let gs = groundstate::ground_state(
                &basis,
                &quad,
                *p,
                &groundstate::GroundStateOptions::default(),
            )?;
            emit(cli, gs.to_json(&basis))
        }
        Command::Radial { m, p } => {
            if !(*p > 2.0) {
                return Err(Error::Domain(format!("--p must exceed 2 (got {p})")));
            }
            if !(*m >= 0.0) {
                return Err(Error::Domain("--m must be >= 0".to_string()));
            }
            let res = groundstate::radial_ground_state(*m, *p)?;
            let text = match cli.format {
                Format::Csv => res.to_csv(),
                Format::Json => serde_json::json!({
                    "schema": 1, "m": res.m, "p": res.p, "beta_rad": res.beta,
                })
                .to_string(),
            };
            emit(cli, text)
        }
        Command::Scan { alpha, p, m, j_cut } => {
            validate_p_window(*p)?;
            let (a, _) = alpha.resolve()?;
            let report = groundstate::nonradiality_scan(
                a,
                *p,
                m,
                *j_cut,
                (300, 300),
                &groundstate::GroundStateOptions::default(),
            )?;
            let text = match cli.format {
                Format::Csv => {
                    let mut s = String::from(
                        "m,c_energy,upper_bound,beta_rad,crossed,nonradial_energy_fraction\n",
                    );
                    for r in &report.rows {
                        s.push_str(&format!(
                            "{:.16e},{},{:.16e},{:.16e},{},{}\n",
                            r.m,
                            r.c_energy
                                .map_or("".to_string(), |v| format!("{v:.16e}")),
                            r.upper_bound,
                            r.beta_rad,
                            r.crossed,
                            r.nonradial_energy_fraction
                                .map_or("".to_string(), |v| format!("{v:.16e}")),
                        ));
                    }
                    s
                }
                Format::Json => report.to_json(),
            };
            emit(cli, text)
        }
        Command::Vk { alpha, m, k, p } => {
            if !(*p > 2.0) {
                return Err(Error::Domain(format!("--p must exceed 2 (got {p})")));
            }
            let (a, _) = alpha.resolve()?;
            let res = groundstate::complex_vk_minimizer(a, *m, *k, *p)?;
            let text = match cli.format {
                Format::Csv => {
                    let mut s = String::from("r,value\n");
                    for (r, v) in res.r.iter().zip(&res.profile) {
                        s.push_str(&format!("{:.16e},{:.16e}\n", r, v));
                    }
                    s
                }
                Format::Json => serde_json::json!({
                    "schema": 1,
                    "alpha": res.alpha,
                    "m": res.m,
                    "k": res.k,
                    "p": res.p,
                    "k0": res.k0,
                    "j_value": res.j_value,
                    "angular_variance": res.angular_variance,
                    "weak_residual": res.weak_residual,
                })
                .to_string(),
            };
            emit(cli, text)
        }
    }
}

fn validate_p_window(p: f64) -> Result<(), Error> {
    if !(p > 2.0 && p < 4.0) {
        return Err(Error::Domain(format!(
            "--p must lie in (2, 4) for ground-state commands (got {p})"
        )));
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => {}
        Err(e @ (Error::Domain(_) | Error::Range(_) | Error::Config(_))) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
        Err(e @ Error::Convergence(_)) => {
            eprintln!("error: {e}");
            std::process::exit(3);
        }
    }
}
