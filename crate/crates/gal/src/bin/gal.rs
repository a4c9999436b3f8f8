//! Command-line front end: graph generation, parameter queries, products,
//! blow-ups, activation reports, and the verification battery.
//!
//! Exit codes: 0 success / all asserted checks pass; 1 asserted checks
//! failed; 2 usage; 3 input or parse error; 4 guard exceeded; 5 solver
//! failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use gal::activation::{
    activation_series, default_battery, duality_battery, rosenfeld_construct, zeta_probe,
    ActivationOptions, ActivationVariant,
};
use gal::bounds::asymptotic_bounds;
use gal::coloring::{chi, sigma};
use gal::error::Error;
use gal::format::{parse_graph, write_graph};
use gal::graph::{self, Graph};
use gal::independence::alpha;
use gal::packing::fractional_packing;
use gal::rational;
use gal::report::{
    self, Check, Document, GraphSummary, Meta, Series, SeriesLevel, Tolerances, Value, Witness,
};
use gal::theta::{weighted_theta, CertifiedValue, ThetaOptions, ThetaVariant};
use gal::weights::Weights;

#[derive(Parser)]
#[command(
    name = "gal",
    version,
    about = "Graph activation laboratory: exact and certified graph parameters",
    after_help = "Exit codes: 0 ok, 1 checks failed, 2 usage, 3 input, 4 guard, 5 solver."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct SolveFlags {
    /// Duality-gap tolerance for certified solves.
    #[arg(long, default_value_t = 1e-7)]
    tol_gap: f64,
    /// Vertex guard override for exact searches (both alpha and sigma/chi).
    #[arg(long)]
    max_vertices: Option<usize>,
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named graph (cycle, complete, empty, petersen, random).
    Gen {
        family: String,
        /// Vertex count (ignored for petersen).
        #[arg(default_value_t = 1)]
        n: usize,
        /// Edge probability for random graphs.
        #[arg(default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute parameters of a graph file.
    Param {
        file: PathBuf,
        #[arg(long)]
        alpha: bool,
        #[arg(long)]
        alpha_star: bool,
        #[arg(long)]
        theta: bool,
        #[arg(long)]
        theta_minus: bool,
        #[arg(long)]
        theta_plus: bool,
        #[arg(long)]
        sigma: bool,
        #[arg(long)]
        chi: bool,
        /// Exact power table alpha(G^n)^(1/n) etc. up to this n.
        #[arg(long)]
        asymptotic: Option<u32>,
        #[command(flatten)]
        solve: SolveFlags,
    },
    /// Strong or disjunctive product of two graph files.
    Product {
        kind: String,
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Complement of a graph file.
    Complement {
        a: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Blow each vertex up to an independent set; multiplicities from --m or
    /// the file's integer weights.
    Blowup {
        a: PathBuf,
        /// Comma-separated multiplicities, e.g. 1,2,1,1,1.
        #[arg(long)]
        m: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Activation report: extracted weights, weighted equalities, blow-up
    /// series.
    Activate {
        file: PathBuf,
        /// theta, theta_pm_first or theta_pm_second.
        #[arg(long, default_value = "theta")]
        variant: String,
        /// Comma-separated blow-up levels.
        #[arg(long, default_value = "1,2,4,8")]
        levels: String,
        #[command(flatten)]
        solve: SolveFlags,
    },
    /// Exact blow-up witness for alpha(G x H') = alpha*(G) alpha(H').
    Rosenfeld {
        file: PathBuf,
        #[command(flatten)]
        solve: SolveFlags,
    },
    /// Run the verification battery.
    Verify {
        #[arg(long, default_value = "default")]
        suite: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        solve: SolveFlags,
    },
    /// Single probe of sigma(G * H) / sigma(H).
    Zeta {
        g: PathBuf,
        h: PathBuf,
        #[command(flatten)]
        solve: SolveFlags,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Parse { .. } | Error::InvalidInput(_) | Error::UnknownFamily(_) => 3,
                Error::Guard { .. } => 4,
                Error::Solver(_) => 5,
                Error::Io(_) => 3,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode, Error> {
    match cmd {
        Command::Gen {
            family,
            n,
            p,
            seed,
            output,
        } => {
            let g = graph::generate(&family, n, p, seed)?;
            let text = write_graph(&g, &Weights::ones(g.n()))?;
            emit(output.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Param {
            file,
            alpha: want_alpha,
            alpha_star: want_star,
            theta: want_theta,
            theta_minus: want_tm,
            theta_plus: want_tp,
            sigma: want_sigma,
            chi: want_chi,
            asymptotic,
            solve,
        } => {
            let (g, w) = read_graph(&file)?;
            let opts = activation_options(&solve);
            let none_requested = !(want_alpha
                || want_star
                || want_theta
                || want_tm
                || want_tp
                || want_sigma
                || want_chi
                || asymptotic.is_some());
            let mut summary = GraphSummary {
                id: file.display().to_string(),
                n: g.n(),
                edges: g.edge_count(),
                alpha: None,
                theta_minus: None,
                theta: None,
                theta_plus: None,
                alpha_star: None,
                sigma: None,
            };
            if want_alpha || none_requested {
                guard(g.n(), opts.alpha_guard, "graph for exact alpha")?;
                let r = alpha(&g, &w)?;
                match r.value.as_exact() {
                    Some(v) => {
                        println!(
                            "alpha = {} (witness verified, {} vertices)",
                            rational::fmt_short(v),
                            r.witness.count()
                        );
                        summary.alpha = rational::to_u64(v);
                    }
                    None => println!(
                        "alpha = {:.7} (witness verified, {} vertices)",
                        r.value.to_f64(),
                        r.witness.count()
                    ),
                }
            }
            for (flag, variant) in [
                (want_theta || none_requested, ThetaVariant::Lovasz),
                (want_tm, ThetaVariant::SchrijverMinus),
                (want_tp, ThetaVariant::SzegedyPlus),
            ] {
                if flag {
                    let cert = weighted_theta(&g, variant, &w, &opts.theta)?;
                    println!(
                        "{} = {:.7} (gap {:.1e})",
                        variant.name(),
                        cert.value,
                        cert.gap.max(0.0)
                    );
                    store_theta(&mut summary, variant, &cert);
                }
            }
            if want_star || none_requested {
                let p = fractional_packing(&g, &w)?;
                println!(
                    "alpha_star = {} (primal = dual, exact, {} clique constraints)",
                    rational::fmt_short(&p.value),
                    p.cliques.len()
                );
                summary.alpha_star = Some(report::rational_value(&p.value));
            }
            if want_sigma || none_requested {
                guard(g.n(), opts.chi_guard, "graph for exact sigma")?;
                let (s, _) = sigma(&g)?;
                println!("sigma = {s} (cover verified)");
                summary.sigma = Some(s as u64);
            }
            if want_chi {
                guard(g.n(), opts.chi_guard, "graph for exact chi")?;
                let c = chi(&g)?;
                println!("chi = {} (coloring verified)", c.count);
            }
            if let Some(n_max) = asymptotic {
                let table = asymptotic_bounds(&g, n_max, opts.chi_guard, &opts.theta)?;
                println!(
                    "power table (theta = {:.7}, alpha_star = {}):",
                    table.theta,
                    rational::fmt_short(&table.alpha_star)
                );
                println!("  n  alpha  alpha^(1/n)  sigma_strong  root  sigma_disj  root");
                for r in &table.rows {
                    println!(
                        "  {}  {}  {:.7}  {}  {:.7}  {}  {:.7}",
                        r.n,
                        r.alpha,
                        r.alpha_root,
                        r.sigma_strong,
                        r.sigma_strong_root,
                        r.sigma_disjunctive,
                        r.sigma_disjunctive_root
                    );
                }
            }
            if let Some(path) = &solve.json {
                let mut doc = Document::new(Meta::new(tolerances(&solve), 0));
                doc.graphs.push(summary);
                std::fs::write(path, doc.to_json())?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Product { kind, a, b, output } => {
            let (ga, wa) = read_graph(&a)?;
            let (gb, wb) = read_graph(&b)?;
            let g = match kind.as_str() {
                "strong" => ga.strong_product(&gb),
                "disjunctive" => ga.disjunctive_product(&gb),
                other => {
                    return Err(Error::invalid(format!(
                        "product kind must be strong or disjunctive, got {other:?}"
                    )))
                }
            };
            let w = wa.product(&wb);
            emit(output.as_deref(), &write_graph(&g, &w)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Complement { a, output } => {
            let (g, w) = read_graph(&a)?;
            emit(output.as_deref(), &write_graph(&g.complement(), &w)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Blowup { a, m, output } => {
            let (g, w) = read_graph(&a)?;
            let mult: Vec<u64> = match m {
                Some(list) => list
                    .split(',')
                    .map(|s| {
                        s.trim()
                            .parse::<u64>()
                            .map_err(|_| Error::invalid(format!("bad multiplicity {s:?}")))
                    })
                    .collect::<Result<_, _>>()?,
                None => w.as_integers().map_err(|_| {
                    Error::invalid("blow-up needs --m or integer weights in the file")
                })?,
            };
            let b = g.blowup(&mult)?;
            emit(output.as_deref(), &write_graph(&b, &Weights::ones(b.n()))?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Activate {
            file,
            variant,
            levels,
            solve,
        } => {
            let (g, _) = read_graph(&file)?;
            let variant = ActivationVariant::parse(&variant)?;
            let levels: Vec<u64> = levels
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::invalid(format!("bad level {s:?}")))
                })
                .collect::<Result<_, _>>()?;
            let opts = activation_options(&solve);
            let rep = activation_series(&g, &file.display().to_string(), &levels, variant, &opts)?;

            println!(
                "{} activation of {}: base value {:.7}",
                variant.name(),
                file.display(),
                rep.base_value
            );
            println!(
                "weighted equalities: alpha residual {:.2e}, unit residual {:.2e}",
                rep.equality.alpha_residual, rep.equality.unit_residual
            );
            let mut doc = Document::new(Meta::new(tolerances(&solve), 0));
            let mut levels_json = Vec::new();
            let mut pass = rep.equality.within(1e-4, 1e-5);
            doc.checks.push(Check {
                name: "weighted_equality".into(),
                paper_ref: "alpha(G x (Gc,p)) = value(G), partner(Gc,p) = 1".into(),
                lhs: Value::float(rep.equality.alpha_product),
                rhs: Value::float(rep.equality.base_value),
                residual: report::round_sig(rep.equality.alpha_residual, 9),
                pass: Some(rep.equality.within(1e-4, 1e-5)),
                note: None,
            });
            for level in &rep.levels {
                let in_bounds =
                    level.ratio <= 1.0 + 1e-4 && level.ratio >= level.lower_bound - 1e-4;
                pass &= in_bounds;
                println!(
                    "level {:>3}: alpha = {}, partner = {:.7}, ratio = {:.7} (floor {:.7})",
                    level.level,
                    rational::fmt_short(&level.alpha),
                    level.partner_value,
                    level.ratio,
                    level.lower_bound
                );
                doc.checks.push(Check {
                    name: format!("series_level_{}", level.level),
                    paper_ref: "alpha(G x H_l) >= value(G) value(H_l) - |V|^2".into(),
                    lhs: Value::float(level.ratio),
                    rhs: Value::float(level.lower_bound),
                    residual: report::round_sig(level.ratio - level.lower_bound, 9),
                    pass: Some(in_bounds),
                    note: None,
                });
                levels_json.push(SeriesLevel {
                    level: level.level,
                    multiplicities: level.multiplicities.clone(),
                    alpha: report::rational_value(&level.alpha),
                    partner_value: report::round_sig(level.partner_value, 9),
                    ratio: report::round_sig(level.ratio, 9),
                    lower_bound: report::round_sig(level.lower_bound, 9),
                });
            }
            doc.series.push(Series {
                graph: rep.graph_id.clone(),
                variant: variant.name().into(),
                weights: rep
                    .weights
                    .iter()
                    .map(|&x| report::round_sig(x, 9))
                    .collect(),
                base_value: report::round_sig(rep.base_value, 9),
                base_gap: report::round_sig(rep.base_gap, 9),
                unit_value: report::round_sig(rep.equality.unit_value, 9),
                alpha_equality_residual: report::round_sig(rep.equality.alpha_residual, 9),
                unit_residual: report::round_sig(rep.equality.unit_residual, 9),
                levels: levels_json,
            });
            if let Some(path) = &solve.json {
                std::fs::write(path, doc.to_json())?;
            }
            Ok(if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Rosenfeld { file, solve } => {
            let (g, _) = read_graph(&file)?;
            let opts = activation_options(&solve);
            let w = rosenfeld_construct(&g, &file.display().to_string(), &opts)?;
            println!(
                "alpha*({}) = {} with packing denominator {}",
                file.display(),
                rational::fmt_short(&w.alpha_star),
                w.denominator
            );
            println!(
                "H' = Blup(complement, {:?}) on {} vertices",
                w.multiplicities, w.blowup_vertices
            );
            println!(
                "alpha(G x H') = {} = alpha*(G) * alpha(H') = {} * {} (residual {})",
                rational::fmt_short(&w.alpha_product),
                rational::fmt_short(&w.alpha_star),
                rational::fmt_short(&w.alpha_blowup),
                rational::fmt_short(&w.residual)
            );
            if let Some(path) = &solve.json {
                let mut doc = Document::new(Meta::new(tolerances(&solve), 0));
                doc.witnesses.push(Witness {
                    graph: w.graph_id.clone(),
                    packing: w.packing.iter().map(Value::rational).collect(),
                    denominator: w.denominator.to_string(),
                    multiplicities: w.multiplicities.clone(),
                    blowup_vertices: w.blowup_vertices,
                    alpha_product: report::rational_value(&w.alpha_product),
                    alpha_blowup: report::rational_value(&w.alpha_blowup),
                    alpha_star: report::rational_value(&w.alpha_star),
                    residual: report::rational_value(&w.residual),
                });
                std::fs::write(path, doc.to_json())?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, seed, solve } => {
            if suite != "default" {
                return Err(Error::invalid(format!("unknown suite {suite:?}")));
            }
            let opts = activation_options(&solve);
            let (graphs, pairs) = default_battery(seed)?;
            let battery = duality_battery(&graphs, &pairs, &opts);
            let failures = battery.failures();
            let mut doc = Document::new(Meta::new(tolerances(&solve), seed));
            doc.graphs = battery.graphs;
            doc.checks = battery.checks;
            for c in &doc.checks {
                let state = match c.pass {
                    Some(true) => "pass",
                    Some(false) => "FAIL",
                    None => "info",
                };
                println!("[{state}] {}", c.name);
            }
            println!("{} checks, {} failures", doc.checks.len(), failures);
            if let Some(path) = &solve.json {
                std::fs::write(path, doc.to_json())?;
            }
            Ok(if failures == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Zeta { g, h, solve } => {
            let (gg, _) = read_graph(&g)?;
            let (hh, _) = read_graph(&h)?;
            let opts = activation_options(&solve);
            let probe = zeta_probe(&gg, &hh, &opts)?;
            println!(
                "sigma(G * H) / sigma(H) = {} / {} = {}",
                probe.sigma_product,
                probe.sigma_h,
                rational::fmt_short(&probe.ratio)
            );
            println!(
                "finite probe only: an upper bound on the infimum; theta floor {:.7}",
                probe.theta_floor
            );
            if let Some(path) = &solve.json {
                let mut doc = Document::new(Meta::new(tolerances(&solve), 0));
                doc.checks.push(Check {
                    name: "zeta_probe".into(),
                    paper_ref: "sigma(G * H) / sigma(H) >= theta(G) theta(H) / sigma(H)".into(),
                    lhs: Value::float(probe.theta_floor),
                    rhs: report::rational_value(&probe.ratio),
                    residual: report::round_sig(
                        rational::to_f64(&probe.ratio) - probe.theta_floor,
                        9,
                    ),
                    pass: Some(rational::to_f64(&probe.ratio) >= probe.theta_floor - 1e-5),
                    note: None,
                });
                std::fs::write(path, doc.to_json())?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn read_graph(path: &std::path::Path) -> Result<(Graph, Weights), Error> {
    let text = std::fs::read_to_string(path)?;
    parse_graph(&text)
}

fn emit(path: Option<&std::path::Path>, text: &str) -> Result<(), Error> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn guard(n: usize, limit: usize, what: &str) -> Result<(), Error> {
    if n > limit {
        return Err(Error::guard(what, n, limit));
    }
    Ok(())
}

fn activation_options(solve: &SolveFlags) -> ActivationOptions {
    let mut opts = ActivationOptions {
        theta: ThetaOptions {
            tol_gap: solve.tol_gap,
            ..ThetaOptions::default()
        },
        ..ActivationOptions::default()
    };
    if let Some(n) = solve.max_vertices {
        opts.alpha_guard = n;
        opts.chi_guard = n;
    }
    opts
}

fn tolerances(solve: &SolveFlags) -> Tolerances {
    Tolerances {
        tol_gap: solve.tol_gap,
        ..Tolerances::default()
    }
}

fn store_theta(summary: &mut GraphSummary, variant: ThetaVariant, cert: &CertifiedValue) {
    let v = report::round_sig(cert.value, 9);
    match variant {
        ThetaVariant::Lovasz => summary.theta = Some(v),
        ThetaVariant::SchrijverMinus => summary.theta_minus = Some(v),
        ThetaVariant::SzegedyPlus => summary.theta_plus = Some(v),
    }
}
