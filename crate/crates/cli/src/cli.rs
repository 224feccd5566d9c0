//! The `folkdyn` command line.
//!
//! Exit codes: 0 success, 1 validation or usage error, 2 I/O error. Every
//! random choice derives from `--seed`, and outputs are assembled in memory
//! and written once, so identical invocations produce identical bytes.

use std::collections::{BTreeMap, BTreeSet};
use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use folkdyn_core::analytics::{
    classify_peak_buckets, classify_tag_kind, detect_peak, detect_stabilization, distinct_tag_growth, ks_statistic,
    position_rank_analysis, tag_growth_curve, user_activity_stats, user_tag_counts, Lexicons, OlsFit, PeakBucket,
};
use folkdyn_core::urn::{exact_fraction_distribution, simulate_urn, UrnState};
use folkdyn_core::{build_dataset, proportion_trajectory, Dataset, Seed, Timestamp};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::config::{AnalysisParams, RunConfig};
use crate::fixture::{generate_fixture, relabel_users, Profile};
use crate::logfile::{bookmark_log_bytes, format_timestamp, parse_bookmark_log, parse_timestamp, ParseOptions};
use crate::parallel::{default_threads, par_limit_fraction_samples, par_map_indexed};
use crate::report::{Cell, Format, Report};
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(name = "folkdyn", version, about = "Collaborative tagging simulator and bookmark-log analytics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Simulate tagged bookmark streams and write a bookmark log.
    Simulate(SimulateArgs),
    /// Polya urn tools.
    #[command(subcommand)]
    Urn(UrnCommand),
    /// Analyze a bookmark log and write a CSV or JSON report.
    #[command(subcommand)]
    Analyze(AnalyzeCommand),
    /// Write a synthetic bookmark log plus its ground-truth sidecar.
    Fixture(FixtureArgs),
    /// Export a URL's tag-proportion trajectory as long-format CSV.
    ExportChart(ExportChartArgs),
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// TOML run configuration.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Overrides the configured seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output file (default: stdout).
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Overrides `sim.total_bookmarks`.
    #[arg(long)]
    pub bookmarks: Option<usize>,
    /// Overrides the number of URL streams.
    #[arg(long)]
    pub urls: Option<usize>,
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Args)]
pub struct UrnCommon {
    /// Initial ball counts per color, e.g. `1,1`.
    #[arg(long, value_delimiter = ',', default_value = "1,1")]
    pub init: Vec<u64>,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum UrnCommand {
    /// One urn trajectory: counts and fractions after every draw.
    Simulate {
        #[command(flatten)]
        common: UrnCommon,
        #[arg(long)]
        steps: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exact law of a color's fraction after `steps` draws.
    Exact {
        #[command(flatten)]
        common: UrnCommon,
        #[arg(long)]
        steps: u64,
        /// Color index, 0-based in `--init` order.
        #[arg(long, default_value_t = 0)]
        color: usize,
    },
    /// Kolmogorov-Smirnov test of terminal fractions against Uniform(0, 1).
    LimitTest {
        #[command(flatten)]
        common: UrnCommon,
        #[arg(long, default_value_t = 10_000)]
        steps: u64,
        #[arg(long, default_value_t = 10_000)]
        replicates: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.01)]
        alpha: f64,
        #[arg(long, default_value_t = 0)]
        color: usize,
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct AnalyzeCommon {
    /// Bookmark log to read.
    #[arg(long)]
    pub input: PathBuf,
    /// Report file (default: stdout).
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = Format::Csv)]
    pub format: Format,
    /// Fail on the first malformed line.
    #[arg(long)]
    pub strict: bool,
    /// Lowercase tags on input.
    #[arg(long)]
    pub normalize_case: bool,
    /// TOML run configuration supplying analysis defaults.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum AnalyzeCommand {
    /// Per-URL stabilization index of tag proportions.
    Stability {
        #[command(flatten)]
        common: AnalyzeCommon,
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long)]
        window: Option<usize>,
    },
    /// Peak-day bucket mix (or per-URL peaks).
    Peaks {
        #[command(flatten)]
        common: AnalyzeCommon,
        #[arg(long)]
        per_url: bool,
    },
    /// Median tag frequency rank by position within bookmarks, per URL.
    Positions {
        #[command(flatten)]
        common: AnalyzeCommon,
    },
    /// Per-user activity, or the activity regressions with `--summary`.
    Users {
        #[command(flatten)]
        common: AnalyzeCommon,
        /// Reference instant (default: end of the last bookmark's UTC day).
        #[arg(long)]
        as_of: Option<String>,
        #[arg(long)]
        summary: bool,
    },
    /// Tag vocabulary sizes, or one user's tag growth curves.
    Growth {
        #[command(flatten)]
        common: AnalyzeCommon,
        #[arg(long)]
        user: Option<String>,
        #[arg(long = "tag")]
        tags: Vec<String>,
        /// Include the distinct-tag curve for `--user`.
        #[arg(long)]
        distinct: bool,
    },
    /// Tag kind for every distinct tag.
    Kinds {
        #[command(flatten)]
        common: AnalyzeCommon,
        /// JSON lexicon file with optional `what_it_is`, `quality`, `task`, `ownership` word lists.
        #[arg(long)]
        lexicon: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct FixtureArgs {
    /// popular-mix, people-mix or urn-pure.
    #[arg(long)]
    pub profile: Profile,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub output: PathBuf,
    /// Ground-truth sidecar (default: `<output>.truth`).
    #[arg(long)]
    pub truth: Option<PathBuf>,
    /// URLs, users or streams to generate.
    #[arg(long)]
    pub count: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ExportChartArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// URL to export; optional when the log holds a single URL.
    #[arg(long)]
    pub url: Option<String>,
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Only the N most used tags.
    #[arg(long)]
    pub top: Option<usize>,
    #[arg(long)]
    pub strict: bool,
    #[arg(long)]
    pub normalize_case: bool,
}

/// Parses `args` (including the program name) and runs the command, writing
/// diagnostics to `stderr`. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{}", e.render());
                0
            } else {
                let _ = write!(stderr, "{}", e.render());
                1
            };
        }
    };
    match execute(cli.command, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(command: Command, stdout: &mut dyn Write) -> Result<()> {
    match command {
        Command::Simulate(a) => simulate(a, stdout),
        Command::Urn(c) => urn(c, stdout),
        Command::Analyze(c) => analyze(c, stdout),
        Command::Fixture(a) => fixture(a),
        Command::ExportChart(a) => export_chart(a, stdout),
    }
}

fn emit(output: Option<&Path>, bytes: &[u8], stdout: &mut dyn Write) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, bytes).map_err(|e| Error::io(format!("writing {}", path.display()), e)),
        None => stdout.write_all(bytes).and_then(|_| stdout.flush()).map_err(|e| Error::io("writing stdout", e)),
    }
}

fn read_dataset(path: &Path, opts: ParseOptions) -> Result<Dataset> {
    let file = File::open(path).map_err(|e| Error::io(format!("opening {}", path.display()), e))?;
    let parsed = parse_bookmark_log(BufReader::new(file), opts)?;
    if parsed.skipped > 0 {
        log::warn!("{}: skipped {} malformed lines", path.display(), parsed.skipped);
    }
    Ok(build_dataset(parsed.bookmarks))
}

fn simulate(a: SimulateArgs, stdout: &mut dyn Write) -> Result<()> {
    let mut cfg = match &a.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    if let Some(n) = a.bookmarks {
        cfg.sim.total_bookmarks = n;
    }
    if let Some(n) = a.urls {
        cfg.urls = n;
    }
    cfg.validate()?;
    let sim = cfg.sim_config()?;
    let seed = a.seed.unwrap_or(cfg.seed);
    let urls = cfg.urls;
    let streams = par_map_indexed(urls as u64, a.threads.unwrap_or_else(default_threads), |i| {
        let url = format!("http://sim.example/{i}");
        folkdyn_core::tagsim::simulate_url_stream(&sim, &url, Seed::sub_seed(seed, i))
    });
    let mut bookmarks = Vec::with_capacity(urls * sim.total_bookmarks);
    for (i, history) in streams.into_iter().enumerate() {
        let history = history?;
        if urls == 1 {
            bookmarks.extend(history.into_entries());
        } else {
            // user ids restart at u1 in every stream; keep them distinct across URLs
            bookmarks.extend(relabel_users(history, &format!("s{i}-"))?);
        }
    }
    bookmarks.sort_by_key(|b| b.timestamp());
    emit(a.output.as_deref(), &bookmark_log_bytes(&bookmarks), stdout)
}

fn urn_state(init: &[u64]) -> Result<UrnState<usize>> {
    Ok(UrnState::new(init.iter().copied().enumerate())?)
}

fn urn(c: UrnCommand, stdout: &mut dyn Write) -> Result<()> {
    match c {
        UrnCommand::Simulate { common, steps, seed } => {
            let init = urn_state(&common.init)?;
            let traj = simulate_urn(&init, steps, Seed::new(seed));
            let mut report = Report::new("urn_simulate", &["step", "color", "count", "fraction"]);
            for step in 0..traj.len() {
                let counts = traj.counts_at(step);
                let total: u64 = counts.iter().sum();
                for (color, &n) in counts.iter().enumerate() {
                    report.push(vec![step.into(), color.into(), n.into(), (n as f64 / total as f64).into()]);
                }
            }
            let report = report.with_extra("seed", seed).with_extra("init", common.init.clone());
            emit(common.output.as_deref(), &report.render(common.format)?, stdout)
        }
        UrnCommand::Exact { common, steps, color } => {
            let init = urn_state(&common.init)?;
            let law = exact_fraction_distribution(&init, steps, &color)?;
            let mut report = Report::new("urn_exact", &["fraction", "probability", "fraction_exact", "probability_exact"]);
            for (fraction, probability) in law.atoms() {
                report.push(vec![
                    fraction.to_f64().into(),
                    probability.to_f64().into(),
                    fraction.to_string().into(),
                    probability.to_string().into(),
                ]);
            }
            let report = report.with_extra("init", common.init.clone()).with_extra("steps", steps).with_extra("color", color);
            emit(common.output.as_deref(), &report.render(common.format)?, stdout)
        }
        UrnCommand::LimitTest { common, steps, replicates, seed, alpha, color, threads } => {
            let init = urn_state(&common.init)?;
            if init.index_of(&color).is_none() {
                return Err(Error::Usage(format!("--color {color} is not a color of --init")));
            }
            if common.init.len() != 2 || common.init.iter().any(|&n| n != 1) {
                log::warn!("the limiting fraction is uniform only for --init 1,1; testing against Uniform(0, 1) anyway");
            }
            let samples =
                par_limit_fraction_samples(&init, steps, replicates, seed, color, threads.unwrap_or_else(default_threads))?;
            let ks = ks_statistic(&samples, alpha)?;
            let mut report = Report::new(
                "urn_limit_test",
                &["statistic", "n", "alpha", "critical_value", "pass", "steps", "seed"],
            );
            report.push(vec![
                ks.statistic.into(),
                ks.n.into(),
                ks.alpha.into(),
                ks.critical_value.into(),
                ks.pass.into(),
                steps.into(),
                seed.into(),
            ]);
            let report = report.with_extra("init", common.init.clone());
            emit(common.output.as_deref(), &report.render(common.format)?, stdout)
        }
    }
}

struct AnalyzeContext {
    dataset: Dataset,
    analysis: AnalysisParams,
}

fn load_for_analysis(common: &AnalyzeCommon) -> Result<AnalyzeContext> {
    let cfg = match &common.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    let opts = ParseOptions {
        strict: common.strict || cfg.strict,
        normalize_case: common.normalize_case || cfg.normalize_case,
    };
    let dataset = read_dataset(&common.input, opts)?;
    Ok(AnalyzeContext { dataset, analysis: cfg.analysis })
}

fn fit_cells(fit: &folkdyn_core::Result<OlsFit>) -> Vec<Cell> {
    match fit {
        Ok(f) => vec![f.n.into(), f.slope.into(), f.intercept.into(), f.r2.into(), Cell::Null],
        Err(e) => vec![Cell::Null, Cell::Null, Cell::Null, Cell::Null, e.to_string().into()],
    }
}

fn analyze(c: AnalyzeCommand, stdout: &mut dyn Write) -> Result<()> {
    let (common, report) = match c {
        AnalyzeCommand::Stability { common, epsilon, window } => {
            let ctx = load_for_analysis(&common)?;
            let epsilon = epsilon.unwrap_or(ctx.analysis.epsilon);
            let window = window.unwrap_or(ctx.analysis.window);
            let mut report = Report::new(
                "stability",
                &["url", "bookmarks", "epsilon", "window", "stabilization_index", "status", "final_proportions"],
            );
            for (url, history) in ctx.dataset.by_url() {
                let traj = proportion_trajectory(history)?;
                let (index, status, finals) = match detect_stabilization(&traj, epsilon, window) {
                    Ok(r) => (r.stabilization_index, "ok".to_string(), json!(r.final_proportions)),
                    Err(folkdyn_core::Error::InsufficientData { .. }) => {
                        let finals: BTreeMap<&str, f64> = traj.last().map(|v| v.fractions().collect()).unwrap_or_default();
                        (None, "insufficient_data".to_string(), json!(finals))
                    }
                    Err(e) => return Err(e.into()),
                };
                let status = if status == "ok" && index.is_none() { "unstable".to_string() } else { status };
                report.push(vec![
                    url.as_str().into(),
                    history.len().into(),
                    epsilon.into(),
                    window.into(),
                    index.into(),
                    status.into(),
                    Cell::Json(finals),
                ]);
            }
            (common, report)
        }
        AnalyzeCommand::Peaks { common, per_url } => {
            let ctx = load_for_analysis(&common)?;
            let report = if per_url {
                let mut report = Report::new("peaks_per_url", &["url", "bookmarks", "peak_day", "bucket"]);
                for (url, history) in ctx.dataset.by_url() {
                    let peak = detect_peak(history)?;
                    report.push(vec![url.as_str().into(), history.len().into(), peak.peak_day.into(), peak.bucket.as_str().into()]);
                }
                report
            } else {
                let mix = classify_peak_buckets(&ctx.dataset)?;
                let mut report = Report::new("peaks", &["bucket", "count", "fraction"]);
                for bucket in PeakBucket::ALL {
                    let share = mix[&bucket];
                    report.push(vec![bucket.as_str().into(), share.count.into(), share.fraction.into()]);
                }
                report.with_extra("urls", ctx.dataset.by_url().len())
            };
            (common, report)
        }
        AnalyzeCommand::Positions { common } => {
            let ctx = load_for_analysis(&common)?;
            let mut report =
                Report::new("positions", &["url", "position", "median_rank", "observations", "general_first"]);
            for (url, history) in ctx.dataset.by_url() {
                let analysis = match position_rank_analysis(history) {
                    Ok(a) => a,
                    Err(folkdyn_core::Error::EmptyInput(_)) => continue,
                    Err(e) => return Err(e.into()),
                };
                let general_first = analysis.is_general_first();
                for p in &analysis.positions {
                    report.push(vec![
                        url.as_str().into(),
                        p.position.into(),
                        p.median_rank.into(),
                        p.observations.into(),
                        general_first.into(),
                    ]);
                }
            }
            (common, report)
        }
        AnalyzeCommand::Users { common, as_of, summary } => {
            let ctx = load_for_analysis(&common)?;
            let as_of = match as_of {
                Some(s) => parse_timestamp(&s).map_err(Error::Usage)?,
                None => {
                    let last = ctx.dataset.bookmarks().last().ok_or(folkdyn_core::Error::EmptyInput("dataset"))?;
                    let day = last.timestamp().utc_day();
                    Timestamp((day + 1) * folkdyn_core::model::SECONDS_PER_DAY - 1)
                }
            };
            let stats = user_activity_stats(&ctx.dataset, as_of)?;
            let report = if summary {
                let mut report = Report::new("user_regressions", &["name", "n", "slope", "intercept", "r2", "error"]);
                for (name, fit) in [
                    ("age_vs_active_days", &stats.age_vs_active_days),
                    ("bookmarks_vs_distinct_tags", &stats.bookmarks_vs_distinct_tags),
                ] {
                    let mut row = vec![name.into()];
                    row.extend(fit_cells(fit));
                    report.push(row);
                }
                report
            } else {
                let mut report = Report::new(
                    "users",
                    &["user", "account_age_days", "active_days", "bookmark_count", "distinct_tag_count", "tag_tokens"],
                );
                for u in &stats.users {
                    report.push(vec![
                        u.user.as_str().into(),
                        u.account_age_days.into(),
                        u.active_days.into(),
                        u.bookmark_count.into(),
                        u.distinct_tag_count.into(),
                        u.tag_tokens.into(),
                    ]);
                }
                report
            };
            (common, report.with_extra("as_of", format_timestamp(as_of)))
        }
        AnalyzeCommand::Growth { common, user, tags, distinct } => {
            let ctx = load_for_analysis(&common)?;
            let report = match user {
                None => {
                    if !tags.is_empty() || distinct {
                        return Err(Error::Usage("--tag and --distinct need --user".into()));
                    }
                    let mut report = Report::new("user_tag_counts", &["user", "distinct_tag_count"]);
                    for (u, n) in user_tag_counts(&ctx.dataset) {
                        report.push(vec![u.into(), n.into()]);
                    }
                    report
                }
                Some(user) => {
                    let history = ctx
                        .dataset
                        .user(&user)
                        .ok_or_else(|| Error::Usage(format!("user `{user}` not found in the log")))?;
                    if tags.is_empty() && !distinct {
                        return Err(Error::Usage("give at least one --tag or --distinct".into()));
                    }
                    let mut report = Report::new("tag_growth", &["user", "series", "tag", "bookmark_index", "count"]);
                    for tag in &tags {
                        for (i, n) in tag_growth_curve(history, tag)?.into_iter().enumerate() {
                            report.push(vec![user.as_str().into(), "tag".into(), tag.as_str().into(), (i + 1).into(), n.into()]);
                        }
                    }
                    if distinct {
                        for (i, n) in distinct_tag_growth(history).into_iter().enumerate() {
                            report.push(vec![user.as_str().into(), "distinct".into(), Cell::Null, (i + 1).into(), n.into()]);
                        }
                    }
                    report
                }
            };
            (common, report)
        }
        AnalyzeCommand::Kinds { common, lexicon } => {
            let lexicons = match &lexicon {
                Some(p) => load_lexicons(p)?,
                None => Lexicons::default(),
            };
            let ctx = load_for_analysis(&common)?;
            let mut uses: BTreeMap<&str, u64> = BTreeMap::new();
            for b in ctx.dataset.bookmarks() {
                for t in b.tags() {
                    *uses.entry(t.as_str()).or_insert(0) += 1;
                }
            }
            let mut report = Report::new("kinds", &["tag", "kind", "uses"]);
            for (tag, n) in uses {
                report.push(vec![tag.into(), classify_tag_kind(tag, &lexicons)?.as_str().into(), n.into()]);
            }
            (common, report)
        }
    };
    emit(common.output.as_deref(), &report.render(common.format)?, stdout)
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct LexiconFile {
    what_it_is: Option<BTreeSet<String>>,
    quality: Option<BTreeSet<String>>,
    task: Option<BTreeSet<String>>,
    ownership: Option<BTreeSet<String>>,
}

/// Lists present in the file replace the built-in ones.
fn load_lexicons(path: &Path) -> Result<Lexicons> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(format!("reading {}", path.display()), e))?;
    let file: LexiconFile = serde_json::from_str(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    let mut lex = Lexicons::default();
    if let Some(w) = file.what_it_is {
        lex.what_it_is = w;
    }
    if let Some(w) = file.quality {
        lex.quality = w;
    }
    if let Some(w) = file.task {
        lex.task = w;
    }
    if let Some(w) = file.ownership {
        lex.ownership = w;
    }
    Ok(lex)
}

fn fixture(a: FixtureArgs) -> Result<()> {
    let fixture = generate_fixture(a.profile, a.seed, a.count)?;
    let truth = a.truth.unwrap_or_else(|| {
        let mut p = a.output.clone().into_os_string();
        p.push(".truth");
        PathBuf::from(p)
    });
    let mut sink = std::io::sink();
    emit(Some(&a.output), &fixture.log_bytes(), &mut sink)?;
    emit(Some(&truth), &fixture.truth_bytes(), &mut sink)
}

fn export_chart(a: ExportChartArgs, stdout: &mut dyn Write) -> Result<()> {
    let dataset = read_dataset(&a.input, ParseOptions { strict: a.strict, normalize_case: a.normalize_case })?;
    let history = match &a.url {
        Some(url) => dataset.url(url).ok_or_else(|| Error::Usage(format!("url `{url}` not found in the log")))?,
        None => match dataset.by_url().len() {
            1 => dataset.by_url().values().next().expect("one url"),
            0 => return Err(folkdyn_core::Error::EmptyInput("dataset").into()),
            n => return Err(Error::Usage(format!("the log holds {n} URLs; choose one with --url"))),
        },
    };
    let traj = proportion_trajectory(history)?;
    let last = traj.last().expect("non-empty trajectory");
    let mut tags: Vec<(&str, u64)> = last.counts().iter().map(|(t, &n)| (t.as_str(), n)).collect();
    tags.sort_by(|x, y| y.1.cmp(&x.1).then_with(|| x.0.cmp(y.0)));
    if let Some(top) = a.top {
        tags.truncate(top);
    }
    tags.sort_by(|x, y| x.0.cmp(y.0));
    let mut report = Report::new("chart", &["bookmark_index", "tag", "proportion"]);
    for t in 1..=traj.len() {
        let v = traj.at(t).expect("index within trajectory");
        for &(tag, _) in &tags {
            report.push(vec![t.into(), tag.into(), v.fraction(tag).into()]);
        }
    }
    emit(a.output.as_deref(), &report.to_csv()?, stdout)
}

impl From<Value> for Cell {
    fn from(v: Value) -> Self {
        Cell::Json(v)
    }
}
