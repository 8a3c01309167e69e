mod cache;

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use mckay_core::bounds::{self, BoundReport, ConstantsTable, Verdict};
use mckay_core::builders;
use mckay_core::chartable::{export_table, import_table, CharacterTable};
use mckay_core::mckay::{diameter, mckay_graph_named, to_csv, to_dot, Diameter};

use cache::{Cache, Origin};

const DEFAULT_EXPANSION_L: u64 = 6;
const DEFAULT_DELTA_L: u64 = 16;

#[derive(Parser)]
#[command(name = "mckay", version, about = "Character tables, McKay graphs and diameter bound checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a character table and write it in the exchange format.
    Build {
        family: Family,
        /// n for sym/alt, q for the rank-one families.
        param: u64,
        /// Output file; the table is stored in the cache when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// McKay graph of one character: prints the diameter.
    Graph {
        /// Table file or builder key such as psl2_7.
        table: String,
        /// Character name.
        alpha: String,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Run a verification suite and emit its JSON report.
    Verify(VerifyArgs),
}

#[derive(clap::Args)]
struct VerifyArgs {
    suite: Suite,
    #[arg(long)]
    table: Option<String>,
    /// Degree for the alt suite.
    #[arg(long)]
    n: Option<u32>,
    /// Quasi-simple group for the qs suite.
    #[arg(long)]
    g: Option<String>,
    /// Simple quotient for the qs suite.
    #[arg(long)]
    s: Option<String>,
    /// Restrict bb/lower/conjecture to one character.
    #[arg(long)]
    alpha: Option<String>,
    /// Constituent of the multiplicity-free character (repeatable).
    #[arg(long = "constituent")]
    constituents: Vec<String>,
    /// Power for delta, largest power for expansion.
    #[arg(long)]
    l: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Sym,
    Alt,
    Psl2,
    Sl2,
    Pgl2,
}

impl Family {
    fn build(self, param: u64) -> Result<CharacterTable> {
        let small = || u32::try_from(param).map_err(|_| anyhow!("n = {param} is too large"));
        Ok(match self {
            Family::Sym => builders::build_sym_table(small()?)?,
            Family::Alt => builders::build_alt_table(small()?)?,
            Family::Psl2 => builders::build_psl2_table(param)?,
            Family::Sl2 => builders::build_sl2_table(param)?,
            Family::Pgl2 => builders::build_pgl2_table(param)?,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.to_possible_value().expect("no skipped variants");
        f.write_str(v.get_name())
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Bb,
    Lower,
    Stsq,
    Stval,
    Expansion,
    Sigma,
    Gluck,
    Alt,
    Qs,
    Multfree,
    Classcount,
    Conjecture,
    Delta,
    Threshold,
    Transvection,
}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow!(msg.into())
}

struct BuilderKey {
    family: Family,
    param: u64,
}

impl FromStr for BuilderKey {
    type Err = ();

    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        let (fam, param) = s.rsplit_once('_').ok_or(())?;
        let family = Family::from_str(fam, true).map_err(|_| ())?;
        let param = param.parse().map_err(|_| ())?;
        Ok(BuilderKey { family, param })
    }
}

/// A table from a file path, or from the cache for keys like `sym_5`.
fn load_table(spec: &str, cache: &Cache) -> Result<CharacterTable> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {spec}"))?;
        return import_table(&text).with_context(|| format!("importing {spec}"));
    }
    let key: BuilderKey = spec
        .parse()
        .map_err(|_| usage(format!("{spec} is neither a file nor a table key such as psl2_7")))?;
    let name = format!("{}_{}", key.family, key.param);
    let (t, origin) = cache.get_or_build(&name, || key.family.build(key.param))?;
    if origin == Origin::Rebuilt {
        eprintln!("cache entry {name} failed its digest check and was rebuilt");
    }
    Ok(t)
}

fn degree_multiset(t: &CharacterTable) -> String {
    let mut d = t.degrees();
    d.sort_unstable();
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < d.len() {
        let j = d[i..].iter().take_while(|&&x| x == d[i]).count();
        parts.push(if j == 1 { d[i].to_string() } else { format!("{}^{j}", d[i]) });
        i += j;
    }
    parts.join(", ")
}

fn cmd_build(family: Family, param: u64, out: Option<PathBuf>, cache: &Cache) -> Result<Verdict> {
    let t = family.build(param).map_err(|e| usage(e.to_string()))?;
    println!("table {}", t.name);
    println!("order {}", t.order);
    println!("classes {}", t.num_classes());
    println!("degrees {}", degree_multiset(&t));
    match out {
        Some(p) => {
            std::fs::write(&p, export_table(&t)).with_context(|| format!("writing {}", p.display()))?;
            println!("written {}", p.display());
        }
        None => {
            let e = cache.store(&format!("{family}_{param}"), &t)?;
            println!("cached {} at {} sha256 {}", e.key, e.path.display(), e.digest);
        }
    }
    Ok(Verdict::Report)
}

fn cmd_graph(
    table: &str,
    alpha: &str,
    dot: Option<PathBuf>,
    csv: Option<PathBuf>,
    cache: &Cache,
) -> Result<Verdict> {
    let t = load_table(table, cache)?;
    if t.character_index(alpha).is_none() {
        return Err(usage(format!("no character {alpha} in {}", t.name)));
    }
    let g = mckay_graph_named(&t, alpha)?;
    if let Some(p) = dot {
        std::fs::write(&p, to_dot(&g)).with_context(|| format!("writing {}", p.display()))?;
    }
    if let Some(p) = csv {
        std::fs::write(&p, to_csv(&g)).with_context(|| format!("writing {}", p.display()))?;
    }
    match diameter(&g) {
        Diameter::Finite(d) => println!("diameter {d}"),
        Diameter::Disconnected => println!("disconnected"),
    }
    Ok(Verdict::Report)
}

fn required<'a>(v: &'a Option<String>, flag: &str, suite: Suite) -> Result<&'a str> {
    v.as_deref()
        .ok_or_else(|| usage(format!("suite {suite:?} needs --{flag}").to_lowercase()))
}

fn index_of(t: &CharacterTable, name: &str) -> Result<usize> {
    t.character_index(name)
        .ok_or_else(|| usage(format!("no character {name} in {}", t.name)))
}

fn run_suite(a: &VerifyArgs, cache: &Cache) -> Result<BoundReport> {
    let k = ConstantsTable::standard();
    let table = || -> Result<CharacterTable> { load_table(required(&a.table, "table", a.suite)?, cache) };
    Ok(match a.suite {
        Suite::Bb | Suite::Lower | Suite::Conjecture => {
            let t = table()?;
            match &a.alpha {
                Some(name) => {
                    let i = index_of(&t, name)?;
                    let case = match a.suite {
                        Suite::Bb => bounds::burnside_brauer(&t, i)?.case(&t.name),
                        Suite::Lower => bounds::lower_bound(&t, i)?.case(&t.name),
                        _ => bounds::conjecture_ratio(&t, i, &k)?.case(&t.name),
                    };
                    let suite = format!("{:?}", a.suite).to_lowercase();
                    BoundReport::new(suite, vec![case])
                }
                None => match a.suite {
                    Suite::Bb => bounds::bb_suite(&t)?,
                    Suite::Lower => bounds::lower_suite(&t)?,
                    _ => bounds::conjecture_suite(&t, &k)?,
                },
            }
        }
        Suite::Stsq => bounds::verify_stsq(&table()?)?,
        Suite::Stval => bounds::verify_stval(&table()?)?,
        Suite::Expansion => bounds::expansion_suite(&table()?, a.l.unwrap_or(DEFAULT_EXPANSION_L))?,
        Suite::Sigma => bounds::sigma_suite(&table()?, &k)?,
        Suite::Gluck => bounds::gluck_suite(&table()?, &k)?,
        Suite::Alt => {
            let n = a.n.ok_or_else(|| usage("suite alt needs --n"))?;
            bounds::verify_alt(n)?
        }
        Suite::Qs => {
            let g = load_table(required(&a.g, "g", a.suite)?, cache)?;
            let s = load_table(required(&a.s, "s", a.suite)?, cache)?;
            bounds::verify_quasisimple(&g, &s)?
        }
        Suite::Multfree => {
            let t = table()?;
            if a.constituents.is_empty() {
                return Err(usage("suite multfree needs at least one --constituent"));
            }
            let idx = a
                .constituents
                .iter()
                .map(|c| index_of(&t, c))
                .collect::<Result<Vec<_>>>()?;
            bounds::verify_multfree(&t, &idx, &k)?
        }
        Suite::Classcount => bounds::class_count_check(&table()?, &k)?,
        Suite::Delta => bounds::delta_suite(&table()?, a.l.unwrap_or(DEFAULT_DELTA_L), &k)?,
        Suite::Threshold => bounds::threshold_suite(&table()?, &k)?,
        Suite::Transvection => bounds::transvection_check(&table()?)?,
    })
}

fn cmd_verify(a: &VerifyArgs, cache: &Cache) -> Result<Verdict> {
    let report = run_suite(a, cache)?;
    let json = report.to_json();
    match &a.out {
        Some(p) => {
            std::fs::write(p, &json).with_context(|| format!("writing {}", p.display()))?;
            println!("{} {}", report.suite, report.verdict);
        }
        None => print!("{json}"),
    }
    Ok(report.verdict)
}

fn run(cli: Cli) -> Result<Verdict> {
    let cache = Cache::from_env();
    match cli.command {
        Command::Build { family, param, out } => cmd_build(family, param, out, &cache),
        Command::Graph {
            table,
            alpha,
            dot,
            csv,
        } => cmd_graph(&table, &alpha, dot, csv, &cache),
        Command::Verify(a) => cmd_verify(&a, &cache),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Verdict::Pass | Verdict::Report) => ExitCode::SUCCESS,
        Ok(Verdict::Fail | Verdict::Inconclusive) => ExitCode::from(1),
        // bad arguments, unreadable tables and unmet preconditions
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
