use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use colperm::bijection::{
    cat_patterns, certify_bijection, reverse_irreducible_blocks, render_matrix, to_dyck, to_lattice_path,
};
use colperm::closed_forms::registry::{lookup, registry};
use colperm::enumeration::{avoiders, count_avoiders, distribution, sequence, EnumSpec, DEFAULT_BUDGET};
use colperm::series::{ogf_upsilon_coeffs, pat2_coeffs, pat2_ode_residual, DEFAULT_ORDER};
use colperm::verify::verify_all;
use colperm::{ColoredPattern, ColoredPermutation, Error, Mode, PatternSet};

mod output;

use output::{Format, Report};

#[derive(Parser)]
#[command(name = "colperm", version, about = "Pattern avoidance in coloured permutations C_k wr S_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Largest group order k^n n! an exhaustive run may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct PatternArgs {
    /// Semicolon-separated encodings, e.g. "1-2/0,0;1-2/0,1".
    #[arg(long)]
    patterns: String,

    #[arg(long, value_enum, default_value_t = ModeArg::Reduced)]
    mode: ModeArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Reduced,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Reduced => Mode::Reduced,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesArg {
    /// Recursion for (1-2,0 1) in C_2 wr S_n.
    Pat2,
    /// Residual of (1-x)^2 A' - (2-x) A for the pat2 EGF.
    Ode,
    /// Coefficients of (1+C(t))/(1-(k-1)C(t)).
    Ogf,
}

#[derive(Subcommand)]
enum Command {
    /// Number of avoiders in C_k wr S_n.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        patterns: PatternArgs,
        /// List the avoiders instead of counting them.
        #[arg(long)]
        list: bool,
    },
    /// Avoider counts for n = 1..n-max.
    Sequence {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n_max: usize,
        #[command(flatten)]
        patterns: PatternArgs,
    },
    /// Number of elements with exactly j occurrences of one pattern, per j.
    Distribution {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        patterns: PatternArgs,
    },
    /// Evaluate a registered closed form.
    Formula {
        #[arg(long, visible_alias = "formula-id", required_unless_present = "list")]
        id: Option<String>,
        #[arg(long, required_unless_present = "list")]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Require the oracle cross-check (fails with status 3 over budget).
        #[arg(long, conflicts_with = "no_check")]
        check: bool,
        #[arg(long)]
        no_check: bool,
        /// Print the registry instead.
        #[arg(long)]
        list: bool,
    },
    /// Generating-function coefficients.
    Series {
        #[arg(long, value_enum)]
        kind: SeriesArg,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        n_max: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Catalan bijection to Dyck paths.
    Bijection {
        #[arg(long, required_unless_present = "show")]
        n: Option<usize>,
        /// Check validity, injectivity and the count instead of listing.
        #[arg(long)]
        certify: bool,
        /// One element, e.g. "sigma=2,1 colors=1,0 k=2", drawn as a matrix.
        #[arg(long, conflicts_with = "certify")]
        show: Option<String>,
    },
    /// Check every formula and identity against the oracle.
    Verify {
        #[arg(long, default_value_t = 1_000_000)]
        max_budget: u64,
    },
}

fn pattern_set(p: &PatternArgs) -> colperm::Result<PatternSet> {
    PatternSet::parse(&p.patterns, p.mode.into())
}

fn spec(n: usize, k: usize, budget: u64) -> colperm::Result<EnumSpec> {
    Ok(EnumSpec::new(n, k)?.with_budget(budget))
}

fn run(cli: &Cli) -> colperm::Result<Report> {
    let budget = cli.budget;
    match &cli.command {
        Command::Count { n, k, patterns, list } => {
            let set = pattern_set(patterns)?;
            let mut r = Report::new("count", &["n", "k", "mode", "patterns", "count"]);
            r.param("n", *n).param("k", *k).param("mode", set.mode()).param("patterns", &set);
            if *list {
                let all = avoiders(spec(*n, *k, budget)?, &set)?;
                r = Report::new("avoiders", &["sigma", "colors"]);
                r.param("n", *n).param("k", *k).param("mode", set.mode()).param("patterns", &set);
                for g in all {
                    r.row(vec![join(g.sigma()), join(g.word())]);
                }
            } else {
                let c = count_avoiders(spec(*n, *k, budget)?, &set)?;
                r.row(vec![n.to_string(), k.to_string(), set.mode().to_string(), set.to_string(), c.to_string()]);
                r.headline(c.to_string());
            }
            Ok(r)
        }
        Command::Sequence { k, n_max, patterns } => {
            let set = pattern_set(patterns)?;
            let seq = sequence(*k, &set, *n_max, budget)?;
            let mut r = Report::new("sequence", &["n", "count"]);
            r.param("k", *k).param("mode", set.mode()).param("patterns", &set);
            for (i, v) in seq.values.iter().enumerate() {
                r.row(vec![(i + 1).to_string(), v.to_string()]);
            }
            let line: Vec<String> = seq.values.iter().map(|v| v.to_string()).collect();
            r.headline(line.join(" "));
            if let Some(n) = seq.truncated_at {
                r.param("truncated_at", n);
                r.fail_with_budget(format!("stopped at n={n}: k^n n! exceeds the budget of {budget}"));
            }
            Ok(r)
        }
        Command::Distribution { n, k, patterns } => {
            let set = pattern_set(patterns)?;
            let [p]: [ColoredPattern; 1] = set.patterns().to_vec().try_into().map_err(|_| {
                Error::InvalidInput("distribution takes exactly one pattern".into())
            })?;
            let table = distribution(spec(*n, *k, budget)?, &p)?;
            let mut r = Report::new("distribution", &["j", "count"]);
            r.param("n", *n).param("k", *k).param("mode", p.mode()).param("patterns", &p);
            for (j, c) in table.iter() {
                r.row(vec![j.to_string(), c.to_string()]);
            }
            Ok(r)
        }
        Command::Formula { id, n, k, check, no_check, list } => {
            if *list {
                let mut r = Report::new("registry", &["id", "title", "mode", "patterns", "n_min", "k"]);
                for e in registry() {
                    r.row(vec![
                        e.id.clone(),
                        e.title.clone(),
                        e.mode.to_string(),
                        e.patterns.clone(),
                        e.n_min.to_string(),
                        e.k_domain.to_string(),
                    ]);
                }
                return Ok(r);
            }
            let (id, n) = (id.as_deref().unwrap_or_default(), n.unwrap_or_default());
            let entry = lookup(id)?;
            let k = k.unwrap_or_else(|| entry.default_k());
            let value = entry.evaluate(n, k)?;
            let mut r = Report::new("formula", &["id", "n", "k", "value", "oracle", "verdict"]);
            r.param("id", &entry.id).param("title", &entry.title).param("patterns", &entry.patterns);
            let (oracle, verdict) = if *no_check {
                (String::new(), "skipped".to_string())
            } else {
                match count_avoiders(spec(n, k, budget)?, &entry.pattern_set()?) {
                    Ok(o) if o == value => (o.to_string(), "PASS".into()),
                    Ok(o) => {
                        r.fail(format!("{id} at n={n} k={k}: formula {value}, oracle {o}"));
                        (o.to_string(), "FAIL".into())
                    }
                    Err(Error::BudgetExceeded { .. }) if !*check => (String::new(), "skipped (budget)".into()),
                    Err(e) => return Err(e),
                }
            };
            r.headline(format!("{value}\ncheck: {verdict}"));
            r.row(vec![entry.id.clone(), n.to_string(), k.to_string(), value.to_string(), oracle, verdict]);
            Ok(r)
        }
        Command::Series { kind, n_max, k } => {
            let mut r = Report::new("series", &["n", "coefficient"]);
            let coeffs: Vec<String> = match kind {
                SeriesArg::Pat2 => pat2_coeffs(*n_max).values().iter().map(|c| c.to_string()).collect(),
                SeriesArg::Ogf => {
                    r.param("k", *k);
                    ogf_upsilon_coeffs(*k, *n_max)?.iter().map(|c| c.to_string()).collect()
                }
                SeriesArg::Ode => {
                    let res = pat2_ode_residual(*n_max);
                    if !res.is_zero() {
                        r.fail(format!("nonzero residual {res}"));
                    }
                    res.coeffs().iter().map(|c| c.to_string()).collect()
                }
            };
            r.param("kind", kind.to_possible_value().unwrap().get_name());
            for (i, c) in coeffs.into_iter().enumerate() {
                r.row(vec![i.to_string(), c]);
            }
            Ok(r)
        }
        Command::Bijection { n, certify, show } => {
            if let Some(text) = show {
                let g: ColoredPermutation = text.parse()?;
                let path = to_lattice_path(&g)?;
                let dyck = to_dyck(&path)?;
                let mut r = Report::new("bijection", &["sigma", "colors", "blocks", "lattice", "dyck"]);
                r.row(vec![
                    join(g.sigma()),
                    join(g.word()),
                    reverse_irreducible_blocks(g.perm()).to_string(),
                    path.to_string(),
                    dyck.to_string(),
                ]);
                r.headline(format!("{}\nlattice: {path}\ndyck:    {dyck}", render_matrix(&g).trim_end()));
                return Ok(r);
            }
            let n = n.unwrap_or_default();
            if *certify {
                let rep = certify_bijection(n, budget)?;
                let mut r = Report::new(
                    "certify",
                    &["n", "avoiders", "valid", "distinct", "expected", "verdict"],
                );
                let verdict = if rep.passed() { "PASS" } else { "FAIL" };
                if !rep.passed() {
                    r.fail(rep.counterexample.clone().unwrap_or_else(|| "count mismatch".into()));
                }
                r.row(vec![
                    n.to_string(),
                    rep.avoiders.to_string(),
                    rep.valid_images.to_string(),
                    rep.distinct_images.to_string(),
                    rep.expected.to_string(),
                    verdict.into(),
                ]);
                return Ok(r);
            }
            let mut r = Report::new("bijection", &["sigma", "colors", "blocks", "lattice", "dyck"]);
            r.param("n", n);
            for g in avoiders(spec(n, 2, budget)?, &cat_patterns())? {
                let path = to_lattice_path(&g)?;
                let dyck = to_dyck(&path)?;
                r.row(vec![
                    join(g.sigma()),
                    join(g.word()),
                    reverse_irreducible_blocks(g.perm()).to_string(),
                    path.to_string(),
                    dyck.to_string(),
                ]);
            }
            Ok(r)
        }
        Command::Verify { max_budget } => {
            let mut r = Report::new("verify", &["id", "cases", "verdict", "first_mismatch"]);
            r.param("max_budget", *max_budget);
            let mut lines = Vec::new();
            for c in verify_all(*max_budget)? {
                let verdict = if c.passed() { "PASS" } else { "FAIL" };
                let first = c.mismatches.first().cloned().unwrap_or_default();
                if !c.passed() {
                    r.fail(format!("{}: {}", c.id, if first.is_empty() { "no cases" } else { &first }));
                }
                lines.push(format!("{verdict} {} ({} cases){}", c.id, c.cases, if first.is_empty() { String::new() } else { format!(" {first}") }));
                r.row(vec![c.id, c.cases.to_string(), verdict.into(), first]);
            }
            r.headline(lines.join("\n"));
            Ok(r)
        }
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: cannot configure {jobs} worker threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            report.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Parse(_) | Error::InvalidInput(_) => 2,
                Error::BudgetExceeded { .. } => 3,
                Error::Inconsistent(_) => 1,
            })
        }
    }
}
