//! `msynth`: synthesize stable and multistable moving-average paths, report
//! error bounds, tune cut-offs and run localisability checks.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use msynth_core::acceptance::{run_criterion, CRITERIA};
use msynth_core::analysis::{
    estimate_scale, estimate_scaling_exponent, lalpha_distance, QuadConfig, TailHandling,
};
use msynth_core::bounds::{
    exfrequency_bound, extime_bound, generic_bound, kernel_bound, lfsn_bound, optimal_omega,
    rev_ou_bound, true_error, BoundBreakdown,
};
use msynth_core::error::Error as CoreError;
use msynth_core::kernels::{
    exfrequency_kernel, extime_kernel, lfsn_kernel, reverse_ou_kernel, KernelDescriptor, KernelKind,
};
use msynth_core::multistable::{synthesize_multistable, AlphaFunction, MultistableConfig};
use msynth_core::synthesis::{synthesize_fft, Path, SynthesisConfig};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(name = "msynth", version, about = "Stable and multistable moving-average synthesis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Synthesize a stable moving-average path.
    Synth(SynthArgs),
    /// Synthesize a multistable path with a time-varying alpha.
    Multisynth(MultisynthArgs),
    /// Report the discretization and truncation error bound.
    Bound(BoundArgs),
    /// Choose the truncation Omega for a given omega.
    Tune(TuneArgs),
    /// Localisability distances for a kernel, or the scaling exponent of a path file.
    Check(CheckArgs),
    /// Run the acceptance suite and print a pass/fail table.
    Validate(ValidateArgs),
}

#[derive(Args)]
struct KernelArgs {
    /// rev_ou, extime, exfrequency or lfsn.
    #[arg(long)]
    kernel: String,
    /// Reverse OU rate.
    #[arg(long)]
    lambda: Option<f64>,
    /// Exfrequency exponent.
    #[arg(long, allow_hyphen_values = true, default_value_t = -0.5)]
    gamma: f64,
    /// lfsn self-similarity index.
    #[arg(long = "H")]
    h: Option<f64>,
}

#[derive(Args)]
struct GridArgs {
    /// Points per unit length.
    #[arg(long)]
    omega: u64,
    /// Kernel truncation half-width.
    #[arg(long = "Omega")]
    big_omega: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Args)]
struct OutputArgs {
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Add wall-clock time to the output.
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct PathArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    seed: u64,
    /// Noise scale.
    #[arg(long, default_value_t = 1.0)]
    scale: f64,
    /// Also write the path metadata as JSON.
    #[arg(long)]
    meta: Option<PathBuf>,
}

#[derive(Args)]
struct SynthArgs {
    #[command(flatten)]
    kernel: KernelArgs,
    #[arg(long)]
    alpha: f64,
    #[command(flatten)]
    grid: GridArgs,
    #[command(flatten)]
    path: PathArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct MultisynthArgs {
    #[command(flatten)]
    kernel: KernelArgs,
    /// `constant:A`, `logistic` (default ramp over the path),
    /// `logistic:LO,HI,RATE,CENTER` or `table:T1=A1,T2=A2,...`.
    #[arg(long = "alpha-fn")]
    alpha_fn: String,
    /// Number of alpha lines; 0 synthesizes one line per distinct alpha.
    #[arg(long = "alpha-grid", default_value_t = msynth_core::multistable::DEFAULT_ALPHA_GRID)]
    alpha_grid: usize,
    /// Map each alpha line onto [-1, 1] by its own range before gluing.
    #[arg(long)]
    renormalize: bool,
    #[command(flatten)]
    grid: GridArgs,
    #[command(flatten)]
    path: PathArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// The tightest bound available for the kernel.
    Best,
    /// The bound from the kernel's increment condition.
    Generic,
    /// The kernel's closed-form bound.
    ClosedForm,
}

#[derive(Args)]
struct BoundArgs {
    #[command(flatten)]
    kernel: KernelArgs,
    #[arg(long)]
    alpha: f64,
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long, value_enum, default_value_t = Method::Best)]
    method: Method,
    /// Also compute the actual error by quadrature.
    #[arg(long)]
    truth: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct TuneArgs {
    #[command(flatten)]
    kernel: KernelArgs,
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    omega: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct CheckArgs {
    /// Kernel to check; omit when using --path.
    #[arg(long)]
    kernel: Option<String>,
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long, allow_hyphen_values = true, default_value_t = -0.5)]
    gamma: f64,
    #[arg(long = "H")]
    h: Option<f64>,
    #[arg(long)]
    alpha: f64,
    /// Offsets t.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "-1,0.5,2")]
    t: Vec<f64>,
    /// Rescaling factors r, largest first.
    #[arg(long, value_delimiter = ',', default_value = "1,0.1,0.01,0.001")]
    r: Vec<f64>,
    #[arg(long = "z-cut", default_value_t = 1e3)]
    z_cut: f64,
    #[arg(long, default_value_t = 512)]
    panels: usize,
    /// Drop the tails beyond z-cut instead of integrating them.
    #[arg(long = "no-tail")]
    no_tail: bool,
    /// CSV path file (index,t,value) whose scaling exponent to estimate.
    #[arg(long)]
    path: Option<PathBuf>,
    #[arg(long, value_delimiter = ',', default_value = "1,2,4,8,16,32,64,128,256")]
    lags: Vec<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ValidateArgs {
    /// Run only these criteria.
    #[arg(long, value_delimiter = ',')]
    only: Vec<usize>,
}

enum Failure {
    Invalid(String),
    Internal(String),
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::NonIntegrable(_) => Failure::Internal(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

type Outcome<T> = Result<T, Failure>;

fn invalid<T>(msg: impl Into<String>) -> Outcome<T> {
    Err(Failure::Invalid(msg.into()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Synth(a) => synth(a),
        Command::Multisynth(a) => multisynth(a),
        Command::Bound(a) => bound(a),
        Command::Tune(a) => tune(a),
        Command::Check(a) => check(a),
        Command::Validate(a) => validate(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Invalid(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(2)
        }
    }
}

fn build_kernel(label: &str, lambda: Option<f64>, gamma: f64, h: Option<f64>, alpha: f64) -> Outcome<KernelDescriptor> {
    Ok(match label {
        "rev_ou" => reverse_ou_kernel(lambda.ok_or(Failure::Invalid("rev_ou needs --lambda".into()))?)?,
        "extime" => extime_kernel(),
        "exfrequency" => exfrequency_kernel(gamma)?,
        "lfsn" => lfsn_kernel(alpha, h.ok_or(Failure::Invalid("lfsn needs --H".into()))?)?,
        other => return invalid(format!("unknown kernel `{other}` (rev_ou, extime, exfrequency, lfsn)")),
    })
}

fn kernel_of(k: &KernelArgs, alpha: f64) -> Outcome<KernelDescriptor> {
    build_kernel(&k.kernel, k.lambda, k.gamma, k.h, alpha)
}

// Fails before any computation if the file cannot be created there.
fn check_out(out: &Option<PathBuf>) -> Outcome<()> {
    let Some(p) = out else { return Ok(()) };
    let dir = parent_dir(p);
    if !dir.is_dir() {
        return invalid(format!("cannot write {}: {} is not a directory", p.display(), dir.display()));
    }
    if p.is_dir() {
        return invalid(format!("cannot write {}: is a directory", p.display()));
    }
    tempfile::NamedTempFile::new_in(dir)
        .map(drop)
        .or_else(|e| invalid(format!("cannot write in {}: {e}", dir.display())))
}

fn parent_dir(p: &FsPath) -> &FsPath {
    match p.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => FsPath::new("."),
    }
}

fn emit(out: &Option<PathBuf>, body: &str) -> Outcome<()> {
    match out {
        None => {
            std::io::stdout()
                .write_all(body.as_bytes())
                .map_err(|e| Failure::Internal(e.to_string()))
        }
        Some(p) => write_atomic(p, body).map_err(|e| Failure::Internal(format!("writing {}: {e}", p.display()))),
    }
}

fn write_atomic(p: &FsPath, body: &str) -> std::io::Result<()> {
    let mut tmp = tempfile::NamedTempFile::new_in(parent_dir(p))?;
    tmp.write_all(body.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(p).map_err(|e| e.error)?;
    Ok(())
}

fn report_json(map: Map<String, Value>) -> String {
    let mut s = serde_json::to_string_pretty(&Value::Object(map)).expect("json values are finite");
    s.push('\n');
    s
}

// JSON has no infinities or NaN
fn num(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        json!(x.to_string())
    }
}

fn kernel_fields(map: &mut Map<String, Value>, k: &KernelDescriptor) {
    map.insert("kernel".into(), json!(k.label()));
    for (name, v) in k.params() {
        if name != "alpha" {
            map.insert(format!("kernel_{name}"), num(v));
        }
    }
}

fn path_csv(path: &Path) -> String {
    let mut s = String::with_capacity(32 * path.len() + 16);
    s.push_str("index,t,value\n");
    for (i, v) in path.values.iter().enumerate() {
        let _ = writeln!(s, "{},{},{:.16e}", path.start_index + i as i64, path.time(i), v);
    }
    s
}

fn path_svg(path: &Path, label: &str) -> String {
    let (w, h, pad) = (800.0, 400.0, 40.0);
    let (lo, hi) = path
        .values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| (a.min(v), b.max(v)));
    let span = if hi > lo { hi - lo } else { 1.0 };
    let n = path.len().max(2) - 1;
    let mut pts = String::new();
    for (i, v) in path.values.iter().enumerate() {
        let x = pad + (w - 2.0 * pad) * i as f64 / n as f64;
        let y = h - pad - (h - 2.0 * pad) * (v - lo) / span;
        let _ = write!(pts, "{x:.2},{y:.2} ");
    }
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<path d="M{pad},{pad} V{y0} H{x1}" fill="none" stroke="black" stroke-width="1"/>"#,
        y0 = h - pad,
        x1 = w - pad
    );
    let _ = writeln!(s, r#"<polyline points="{}" fill="none" stroke="steelblue" stroke-width="0.8"/>"#, pts.trim_end());
    let _ = writeln!(s, r#"<text x="{pad}" y="{}" font-family="sans-serif" font-size="12">{}</text>"#, pad - 12.0, escape(label));
    let _ = writeln!(s, r#"<text x="4" y="{}" font-family="sans-serif" font-size="10">{hi:.4}</text>"#, pad + 4.0);
    let _ = writeln!(s, r#"<text x="4" y="{}" font-family="sans-serif" font-size="10">{lo:.4}</text>"#, h - pad);
    s.push_str("</svg>\n");
    s
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn write_path(path: &Path, output: &OutputArgs, meta: &Option<PathBuf>, label: &str, started: Instant) -> Outcome<u8> {
    let body = match output.format.unwrap_or(Format::Csv) {
        Format::Csv => path_csv(path),
        Format::Svg => path_svg(path, label),
        Format::Json => unreachable!("rejected before synthesis"),
    };
    emit(&output.out, &body)?;
    if let Some(m) = meta {
        let mut map: Map<String, Value> = path.meta.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
        map.insert("version".into(), json!(VERSION));
        map.insert("n_points".into(), json!(path.len()));
        write_atomic(m, &report_json(map)).map_err(|e| Failure::Internal(e.to_string()))?;
    }
    if output.timing {
        eprintln!("elapsed_seconds {:.3}", started.elapsed().as_secs_f64());
    }
    Ok(0)
}

fn path_preflight(output: &OutputArgs, p: &PathArgs) -> Outcome<()> {
    if output.format == Some(Format::Json) {
        return invalid("paths are written as csv or svg; use --meta for a JSON summary");
    }
    check_out(&output.out)?;
    check_out(&p.meta)
}

fn synth(a: SynthArgs) -> Outcome<u8> {
    let started = Instant::now();
    path_preflight(&a.output, &a.path)?;
    let k = kernel_of(&a.kernel, a.alpha)?;
    let cfg = SynthesisConfig::new(a.grid.omega, a.grid.big_omega, a.path.n, a.path.seed, a.path.scale)?;
    let p = synthesize_fft(&k, a.alpha, &cfg)?;
    let label = format!("{} alpha={} omega={} Omega={} seed={}", k.label(), a.alpha, cfg.omega, cfg.big_omega, cfg.seed);
    write_path(&p, &a.output, &a.path.meta, &label, started)
}

fn parse_alpha_fn(spec: &str, n: usize) -> Outcome<AlphaFunction> {
    let (head, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let nums = |s: &str| -> Outcome<Vec<f64>> {
        s.split(',')
            .map(|x| x.trim().parse::<f64>().map_err(|_| Failure::Invalid(format!("bad number `{x}` in --alpha-fn"))))
            .collect()
    };
    let f = match (head, rest.is_empty()) {
        ("constant", false) => match nums(rest)?[..] {
            [a] => AlphaFunction::Constant(a),
            _ => return invalid("constant takes one value"),
        },
        ("logistic", true) => AlphaFunction::logistic_ramp(n),
        ("logistic", false) => match nums(rest)?[..] {
            [lo, hi, rate, center] => AlphaFunction::Logistic { lo, hi, rate, center },
            _ => return invalid("logistic takes LO,HI,RATE,CENTER"),
        },
        ("table", false) => {
            let mut knots = Vec::new();
            for pair in rest.split(',') {
                let Some((t, a)) = pair.split_once('=') else {
                    return invalid(format!("table entry `{pair}` is not T=A"));
                };
                let v = nums(&format!("{t},{a}"))?;
                knots.push((v[0], v[1]));
            }
            AlphaFunction::Table(knots)
        }
        _ => return invalid(format!("unrecognised --alpha-fn `{spec}`")),
    };
    f.validate()?;
    Ok(f)
}

fn multisynth(a: MultisynthArgs) -> Outcome<u8> {
    let started = Instant::now();
    path_preflight(&a.output, &a.path)?;
    let f = parse_alpha_fn(&a.alpha_fn, a.path.n)?;
    // lfsn is built for one alpha; the others do not depend on it
    let alpha0 = msynth_core::multistable::eval_alpha(&f, 1.0)?;
    let k = kernel_of(&a.kernel, alpha0)?;
    if matches!(k.kind(), KernelKind::Lfsn { .. }) {
        return invalid("the lfsn kernel depends on alpha and cannot be used for multistable synthesis");
    }
    let base = SynthesisConfig::new(a.grid.omega, a.grid.big_omega, a.path.n, a.path.seed, a.path.scale)?;
    let mut cfg = MultistableConfig::new(base, f);
    cfg.renormalize = a.renormalize;
    cfg.alpha_grid = a.alpha_grid;
    cfg.validate()?;
    let p = synthesize_multistable(&k, &cfg)?;
    if let Some(w) = p.meta.get("advisory") {
        eprintln!("warning: {w}");
    }
    let label = format!("{} multistable alpha={} omega={} Omega={} seed={}", k.label(), cfg.alpha_fn, base.omega, base.big_omega, base.seed);
    write_path(&p, &a.output, &a.path.meta, &label, started)
}

fn json_only(o: &OutputArgs) -> Outcome<()> {
    if matches!(o.format, Some(Format::Csv | Format::Svg)) {
        return invalid("reports are JSON only");
    }
    check_out(&o.out)
}

fn breakdown_fields(map: &mut Map<String, Value>, prefix: &str, b: &BoundBreakdown) {
    map.insert(format!("{prefix}discretization_alpha_power"), num(b.discretization));
    map.insert(format!("{prefix}truncation_alpha_power"), num(b.truncation));
    map.insert(format!("{prefix}total_alpha_power"), num(b.total_alpha_power));
    map.insert(format!("{prefix}err_scale_alpha_norm"), num(b.err_scale));
}

fn finish(mut map: Map<String, Value>, o: &OutputArgs, started: Instant) -> Outcome<u8> {
    map.insert("version".into(), json!(VERSION));
    if o.timing {
        map.insert("elapsed_seconds".into(), num(started.elapsed().as_secs_f64()));
    }
    emit(&o.out, &report_json(map))?;
    Ok(0)
}

fn bound(a: BoundArgs) -> Outcome<u8> {
    let started = Instant::now();
    json_only(&a.output)?;
    let k = kernel_of(&a.kernel, a.alpha)?;
    let (alpha, w, big) = (a.alpha, a.grid.omega, a.grid.big_omega);
    let (b, name) = match a.method {
        Method::Best => (kernel_bound(&k, alpha, w, big)?, "best"),
        Method::Generic => (generic_bound(&k, alpha, w, big)?, "generic"),
        Method::ClosedForm => (
            match k.kind() {
                KernelKind::ReverseOu { lambda } => rev_ou_bound(lambda, alpha, w, big)?,
                KernelKind::Extime => extime_bound(alpha, w, big)?,
                KernelKind::ExFrequency { gamma } if gamma == -0.5 => exfrequency_bound(alpha, w, big)?,
                KernelKind::ExFrequency { .. } => return invalid("the closed form needs --gamma -0.5"),
                KernelKind::Lfsn { h, .. } => lfsn_bound(alpha, h, w, big)?,
            },
            "closed-form",
        ),
    };
    let mut map = Map::new();
    kernel_fields(&mut map, &k);
    map.insert("alpha".into(), num(alpha));
    map.insert("omega".into(), json!(w));
    map.insert("Omega".into(), json!(big));
    map.insert("method".into(), json!(name));
    breakdown_fields(&mut map, "", &b);
    if a.truth {
        let t = true_error(&k, alpha, w, big)?;
        breakdown_fields(&mut map, "actual_", &t);
    }
    finish(map, &a.output, started)
}

fn tune(a: TuneArgs) -> Outcome<u8> {
    let started = Instant::now();
    json_only(&a.output)?;
    let k = kernel_of(&a.kernel, a.alpha)?;
    let c = optimal_omega(&k, a.alpha, a.omega)?;
    let mut map = Map::new();
    kernel_fields(&mut map, &k);
    map.insert("alpha".into(), num(a.alpha));
    map.insert("omega".into(), json!(a.omega));
    map.insert("Omega_asymptotic".into(), num(c.asymptotic));
    map.insert("Omega_balanced".into(), json!(c.balanced));
    breakdown_fields(&mut map, "balanced_", &c.bound);
    finish(map, &a.output, started)
}

fn read_path_csv(p: &FsPath) -> Outcome<Path> {
    let text = std::fs::read_to_string(p).or_else(|e| invalid(format!("reading {}: {e}", p.display())))?;
    let mut lines = text.lines();
    if lines.next() != Some("index,t,value") {
        return invalid(format!("{}: expected header index,t,value", p.display()));
    }
    let mut start = None;
    let mut values = Vec::new();
    for (i, line) in lines.enumerate() {
        let bad = || Failure::Invalid(format!("{}: malformed row {}", p.display(), i + 2));
        let mut cols = line.split(',');
        let idx: i64 = cols.next().and_then(|c| c.parse().ok()).ok_or_else(bad)?;
        let v: f64 = cols.nth(1).and_then(|c| c.parse().ok()).ok_or_else(bad)?;
        start.get_or_insert(idx);
        values.push(v);
    }
    Ok(Path {
        start_index: start.unwrap_or(0),
        values,
        dt: 1.0,
        meta: BTreeMap::new(),
    })
}

fn check(a: CheckArgs) -> Outcome<u8> {
    let started = Instant::now();
    json_only(&a.output)?;
    let mut map = Map::new();
    map.insert("alpha".into(), num(a.alpha));
    if let Some(file) = &a.path {
        let p = read_path_csv(file)?;
        let h = estimate_scaling_exponent(&p, a.alpha, &a.lags)?;
        let inc: Vec<f64> = p.values.windows(2).map(|w| w[1] - w[0]).collect();
        let s = estimate_scale(&inc, a.alpha)?;
        map.insert("n_points".into(), json!(p.len()));
        map.insert("scaling_exponent".into(), num(h));
        map.insert("increment_scale".into(), num(s.value));
        map.insert("increment_scale_stderr".into(), num(s.stderr));
        return finish(map, &a.output, started);
    }
    let Some(label) = &a.kernel else {
        return invalid("check needs --kernel or --path");
    };
    if a.r.iter().any(|&r| !(r > 0.0)) {
        return invalid("every r must be positive");
    }
    let k = build_kernel(label, a.lambda, a.gamma, a.h, a.alpha)?;
    let quad = QuadConfig::new(a.z_cut, a.panels, if a.no_tail { TailHandling::None } else { TailHandling::PowerLaw })?;
    let form = k.local_form(a.alpha)?;
    kernel_fields(&mut map, &k);
    map.insert("local_form".into(), json!(format!("{form:?}")));
    let mut decreasing = true;
    for &t in &a.t {
        let mut prev = f64::INFINITY;
        for &r in &a.r {
            let d = lalpha_distance(&k, a.alpha, &form, t, r, &quad)?;
            decreasing &= d <= prev;
            prev = d;
            map.insert(format!("lalpha_distance_t={t}_r={r}"), num(d));
        }
    }
    map.insert("decreasing_in_r".into(), json!(decreasing));
    finish(map, &a.output, started)
}

fn validate(a: ValidateArgs) -> Outcome<u8> {
    let ids: Vec<usize> = if a.only.is_empty() { (1..=CRITERIA).collect() } else { a.only };
    if let Some(bad) = ids.iter().find(|&&i| !(1..=CRITERIA).contains(&i)) {
        return invalid(format!("no criterion {bad}; they run from 1 to {CRITERIA}"));
    }
    let mut all = true;
    println!("{:<4} {:>2}  {:<30} {:>9}  detail", "", "id", "criterion", "seconds");
    for id in ids {
        let r = run_criterion(id);
        all &= r.pass;
        println!(
            "{:<4} {:>2}  {:<30} {:>9.2}  {}",
            if r.pass { "PASS" } else { "FAIL" },
            r.id,
            r.name,
            r.elapsed.as_secs_f64(),
            r.detail
        );
    }
    Ok(if all { 0 } else { 1 })
}
