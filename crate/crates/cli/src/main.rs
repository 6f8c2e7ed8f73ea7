use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};

use k3web::dataio::{self, Dataset, FamilyTable};
use k3web::transitions::{candidate, render_search, search_all};
use k3web::web::{self, DotOptions};
use k3web::{rr, Basket, Family, WeightSystem};

/// K3 transitions between canonical 3-folds.
#[derive(Parser, Debug)]
#[command(name = "k3web", version)]
struct Cli {
    /// Directory holding families.txt, k3s.txt and edges.txt. Defaults to
    /// the built-in seed data.
    #[arg(long, global = true, env = "K3WEB_DATA_DIR")]
    data_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hilbert series of a family, by id or inline (`weights=1,1,1,1,2 degrees=7`).
    Hilbert {
        family: String,
        /// Look the id up in the K3 table.
        #[arg(long)]
        k3: bool,
        /// Number of series coefficients to print.
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// Riemann-Roch invariants recovered from the Hilbert series.
    Invariants {
        id: u32,
        #[arg(long)]
        k3: bool,
    },
    /// Test one candidate transition X -> Y.
    Candidate { x: u32, y: u32 },
    /// Test every ordered pair of families.
    Search {
        /// Families file; defaults to the data directory.
        families: Option<PathBuf>,
        /// K3 file; defaults to the data directory.
        k3s: Option<PathBuf>,
    },
    /// Graph summaries of the web.
    Web {
        #[command(subcommand)]
        action: WebAction,
    },
    /// δ of a basket such as `2*(1/2),(1/3)`.
    Delta { basket: String },
    /// e(X) - e(Y) from e(W), e(S) and the number of nodes.
    Euler {
        #[arg(long, allow_negative_numbers = true)]
        ew: i64,
        #[arg(long, allow_negative_numbers = true)]
        es: i64,
        #[arg(long)]
        n: u64,
    },
    /// Weighted Bezout number Π d / Π a.
    Bezout {
        /// Comma separated weights.
        weights: String,
        /// Comma separated cutting degrees.
        degrees: String,
    },
}

#[derive(Subcommand, Debug)]
enum WebAction {
    Stats {
        /// Edge kinds, comma separated, or `proven` / `all`.
        #[arg(long, default_value = "proven")]
        kinds: String,
        /// Restrict to nodes of this codimension.
        #[arg(long)]
        codim: Option<u8>,
    },
    Dot {
        #[arg(long, default_value = "all")]
        kinds: String,
        #[arg(long)]
        codim: Option<u8>,
        /// Do not group nodes of equal p_g.
        #[arg(long)]
        no_rank: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn dataset(dir: Option<&Path>) -> Result<Dataset> {
    match dir {
        Some(d) => Dataset::load(d).with_context(|| format!("loading {}", d.display())),
        None => Ok(Dataset::seed()),
    }
}

fn lookup(table: &FamilyTable, id: u32) -> Result<&Family> {
    table.get(id).ok_or_else(|| {
        if table.contains_id(id) {
            anyhow!("family {id} has no presentation in the table")
        } else {
            anyhow!("no family with id {id}")
        }
    })
}

fn run(cli: Cli) -> Result<String> {
    let dir = cli.data_dir.as_deref();
    match cli.command {
        Command::Hilbert { family, k3, order } => {
            let f = match family.trim().parse::<u32>() {
                Ok(id) => {
                    let data = dataset(dir)?;
                    let table = if k3 { &data.k3s } else { &data.families };
                    lookup(table, id)?.clone()
                }
                Err(_) => dataio::parse_presentation(&family)?,
            };
            hilbert(&f, order)
        }
        Command::Invariants { id, k3 } => {
            let data = dataset(dir)?;
            let table = if k3 { &data.k3s } else { &data.families };
            invariants(lookup(table, id)?)
        }
        Command::Candidate { x, y } => {
            let data = dataset(dir)?;
            let (x, y) = (lookup(&data.families, x)?, lookup(&data.families, y)?);
            let numerical = dataio::numerical_pairs(&data.edges);
            Ok(candidate(x, y, &data.k3s.families, &numerical).render())
        }
        Command::Search { families, k3s } => {
            let data = match (&families, &k3s) {
                (Some(_), Some(_)) => None,
                _ => Some(dataset(dir)?),
            };
            let fams = match families {
                Some(p) => dataio::load_families(&p)?,
                None => data.as_ref().expect("dataset loaded").families.clone(),
            };
            let k3 = match k3s {
                Some(p) => dataio::load_k3s(&p)?,
                None => data.as_ref().expect("dataset loaded").k3s.clone(),
            };
            let numerical = data
                .as_ref()
                .map(|d| dataio::numerical_pairs(&d.edges))
                .unwrap_or_default();
            Ok(render_search(&search_all(&fams.families, &k3.families, &numerical)))
        }
        Command::Web { action } => {
            let data = dataset(dir)?;
            let mut g = data.web();
            let (kinds, codim) = match &action {
                WebAction::Stats { kinds, codim } | WebAction::Dot { kinds, codim, .. } => (kinds, *codim),
            };
            let kinds = web::parse_kinds(kinds)?;
            if let Some(c) = codim {
                g = web::subweb(&g, |_, info| info.codim == Some(c));
            }
            Ok(match action {
                WebAction::Stats { .. } => web::stats(&g, &kinds).to_string(),
                WebAction::Dot { no_rank, .. } => web::to_dot(
                    &g,
                    &DotOptions {
                        kinds,
                        rank_by_pg: !no_rank,
                    },
                ),
            })
        }
        Command::Delta { basket } => {
            let b: Basket = basket.parse()?;
            Ok(format!("{}\n", rr::delta_of_basket(&b)))
        }
        Command::Euler { ew, es, n } => Ok(format!("{}\n", rr::euler_delta(ew, es, n))),
        Command::Bezout { weights, degrees } => {
            let w: WeightSystem = weights.parse()?;
            let d = degrees
                .split(',')
                .map(|x| x.trim().parse::<u64>().with_context(|| format!("bad degree {x:?}")))
                .collect::<Result<Vec<_>>>()?;
            Ok(format!("{}\n", k3web::families::weighted_bezout(&w, &d)?))
        }
    }
}

fn hilbert(f: &Family, order: usize) -> Result<String> {
    let form = f.hilbert_form()?;
    let p = f.hilbert_series()?;
    let series = p.expand(order)?;
    Ok(format!("{f}\nfactored: {form}\nexpanded: {p}\nseries:   {series}\n"))
}

fn invariants(f: &Family) -> Result<String> {
    let mut out = format!("{f}\n");
    if f.is_k3() {
        let inv = rr::k3_invariants(f)?;
        out += &format!("A^2 = {}\n", inv.a_squared);
        out += &format!("h0(A) = {}\n", inv.g1);
        out += &format!("basket: {}\n", inv.basket);
        out += &format!("delta = {}\n", inv.delta);
    } else if f.dimension == 3 {
        let inv = rr::threefold_invariants(f)?;
        out += &format!("K^3 = {}\n", inv.k_cubed);
        out += &format!("p_g = {}\n", inv.p_g);
        out += &format!("chi = {}\n", inv.chi);
        out += &format!("basket: {}\n", inv.basket);
        if let Some(k) = &inv.kc2 {
            out += &format!("K.c2 = {k}\n");
        }
    } else {
        bail!("no Riemann-Roch formula for dimension {}", f.dimension);
    }
    Ok(out)
}
