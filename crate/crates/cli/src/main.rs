//! `hilbert`: distances, Hilbert circles and spheres, the Hölder bound and
//! the verification suites from the command line.

mod render;

use std::fmt;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hilbert_core::hilbert::{
    h_chord, hexagon_fit_residual, hilbert_ball_boundary, hilbert_sphere_ellipsoid, nsc_residual, h_ball,
};
use hilbert_core::holder::{holder_rhs, holder_verify, HolderBoundInput, QcMapSpec};
use hilbert_core::hyperbolic::rho_ball;
use hilbert_core::related::{apollonian, mobius_delta};
use hilbert_core::report::fmt_sig;
use hilbert_core::sample::{self, DEFAULT_SEED};
use hilbert_core::special::c_bounds;
use hilbert_core::verify::{run_suites, SuiteConfig, SUITES};
use hilbert_core::{vecn, Complex64, ConvexDomain, ConvexPolygon, GeomError, MetricReport};

#[derive(Parser)]
#[command(name = "hilbert", version, about = "Hilbert and related metrics of convex domains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert, hyperbolic, Apollonian and Möbius distances of two points.
    Dist(DistArgs),
    /// Trace the Hilbert circle of a planar domain.
    Ball(BallArgs),
    /// Ellipsoid of a Hilbert sphere of the unit ball.
    Sphere(SphereArgs),
    /// The constant c(K), its bounds and the Hölder bound.
    Holder(HolderArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
#[group(multiple = false)]
struct DomainArgs {
    /// Unit ball of dimension N (the default is the unit disk).
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u32).range(1..))]
    ball: Option<u32>,
    /// Convex polygon read from FILE, one `x y` vertex per line.
    #[arg(long, value_name = "FILE")]
    polygon: Option<PathBuf>,
    /// Named polygon: square, triangle, inscribed-square, inscribed-triangle,
    /// sector:<degrees>[:<segments>].
    #[arg(long, value_name = "NAME")]
    preset: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Svg,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the result to PATH instead of standard output.
    #[arg(short, value_name = "PATH")]
    o: Option<PathBuf>,
}

#[derive(Args)]
struct DistArgs {
    #[command(flatten)]
    domain: DomainArgs,
    #[arg(short, value_name = "POINT", allow_hyphen_values = true, value_parser = parse_point)]
    a: Point,
    #[arg(short, value_name = "POINT", allow_hyphen_values = true, value_parser = parse_point)]
    b: Point,
    /// Refinement evaluations for the Möbius metric on polygons.
    #[arg(long, default_value_t = 10_000)]
    budget: u64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct BallArgs {
    #[command(flatten)]
    domain: DomainArgs,
    /// Center of the circle.
    #[arg(short = 'c', long = "center", short_alias = 'a', value_name = "POINT", allow_hyphen_values = true,
          value_parser = parse_point, default_value = "0,0")]
    center: Point,
    /// Hilbert radius.
    #[arg(short, value_parser = parse_positive)]
    t: f64,
    #[arg(long, default_value_t = 360, value_parser = clap::value_parser!(u32).range(8..))]
    ndirs: u32,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct SphereArgs {
    /// Center, in any dimension.
    #[arg(short = 'c', long = "center", short_alias = 'a', value_name = "POINT", allow_hyphen_values = true,
          value_parser = parse_point)]
    center: Point,
    /// Hilbert radius.
    #[arg(short = 'R', value_parser = parse_positive)]
    r: f64,
    /// Surface points used for the residuals.
    #[arg(long, default_value_t = 1_000)]
    samples: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct HolderArgs {
    /// Distortion constant, at least 1.
    #[arg(short = 'K', value_parser = parse_k)]
    k: f64,
    /// Map to verify: identity, mobius:x[,y], power:m, radial-stretch[:K].
    #[arg(long)]
    map: Option<String>,
    /// Evaluate the bound for one pair instead.
    #[arg(short, value_name = "POINT", allow_hyphen_values = true, value_parser = parse_point, requires = "b")]
    a: Option<Point>,
    #[arg(short, value_name = "POINT", allow_hyphen_values = true, value_parser = parse_point, requires = "a")]
    b: Option<Point>,
    #[arg(long, visible_alias = "samples", default_value_t = 10_000)]
    pairs: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run; repeat for several. All suites run by default.
    #[arg(long, value_parser = suite_names())]
    suite: Vec<String>,
    /// Sample count for every suite, replacing the per-suite defaults.
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(flatten)]
    out: OutputArgs,
}

fn suite_names() -> clap::builder::PossibleValuesParser {
    clap::builder::PossibleValuesParser::new(SUITES.iter().map(|s| s.name))
}

/// Coordinates as given on the command line.
#[derive(Clone, Debug)]
struct Point(Vec<f64>);

/// `x,y,...` or a single number for a point on the first axis.
fn parse_point(s: &str) -> Result<Point, String> {
    s.split(',')
        .map(|t| match t.trim().parse::<f64>() {
            Ok(x) if x.is_finite() => Ok(x),
            _ => Err(format!("`{t}` is not a finite number")),
        })
        .collect::<Result<_, _>>()
        .map(Point)
}

fn parse_positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("expected a positive number, got `{s}`")),
    }
}

fn parse_k(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x >= 1.0 && x.is_finite() => Ok(x),
        _ => Err(format!("K must be a number at least 1, got `{s}`")),
    }
}

enum CliError {
    Usage(String),
    Geometry(String),
    Failed,
}

impl CliError {
    fn geom(context: &str, e: GeomError) -> Self {
        match e {
            GeomError::PolygonParse { .. } => Self::Usage(format!("{context}: {e}")),
            _ => Self::Geometry(format!("{context}: {e}")),
        }
    }

    fn code(&self) -> u8 {
        match self {
            Self::Failed => 1,
            Self::Usage(_) => 2,
            Self::Geometry(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Usage(m) | Self::Geometry(m) => f.write_str(m),
            Self::Failed => f.write_str("verification failed"),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

trait Context<T> {
    fn ctx(self, what: &str) -> CliResult<T>;
}

impl<T> Context<T> for hilbert_core::Result<T> {
    fn ctx(self, what: &str) -> CliResult<T> {
        self.map_err(|e| CliError::geom(what, e))
    }
}

fn load_domain(args: &DomainArgs) -> CliResult<ConvexDomain> {
    if let Some(path) = &args.polygon {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        return Ok(ConvexDomain::Polygon(ConvexPolygon::parse(&text).ctx(&path.display().to_string())?));
    }
    if let Some(name) = &args.preset {
        return Ok(ConvexDomain::Polygon(ConvexPolygon::preset(name).ctx("--preset")?));
    }
    ConvexDomain::ball(args.ball.unwrap_or(2) as usize).ctx("--ball")
}

/// Pads a point given by a single coordinate to the domain dimension.
fn fit_point(p: &[f64], dim: usize, name: &str) -> CliResult<Vec<f64>> {
    match p.len() {
        n if n == dim => Ok(p.to_vec()),
        1 => {
            let mut v = vec![0.0; dim];
            v[0] = p[0];
            Ok(v)
        }
        n => Err(CliError::Geometry(format!("{name}: expected {dim} coordinates, got {n}"))),
    }
}

fn emit(out: &OutputArgs, body: &str) -> CliResult<()> {
    match &out.o {
        Some(path) => fs::write(path, body)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes()).and_then(|_| stdout.flush()).map_err(|e| CliError::Usage(e.to_string()))
        }
    }
}

fn report_format(out: &OutputArgs) -> CliResult<Format> {
    match out.format.unwrap_or(Format::Text) {
        f @ (Format::Text | Format::Json) => Ok(f),
        _ => Err(CliError::Usage("this command writes text or json".into())),
    }
}

fn render_report(r: &MetricReport, f: Format) -> String {
    match f {
        Format::Json => r.to_json() + "\n",
        _ => r.to_text(),
    }
}

fn cmd_dist(args: DistArgs) -> CliResult<()> {
    let format = report_format(&args.out)?;
    let domain = load_domain(&args.domain)?;
    let dim = domain.dim();
    let (a, b) = (fit_point(&args.a.0, dim, "-a")?, fit_point(&args.b.0, dim, "-b")?);
    domain.check_interior(&a).ctx("-a")?;
    domain.check_interior(&b).ctx("-b")?;
    let mut r = MetricReport::new();
    let h = h_chord(&domain, &a, &b).ctx("Hilbert distance")?;
    let alpha = apollonian(&domain, &a, &b).ctx("Apollonian metric")?;
    let delta = mobius_delta(&domain, &a, &b, args.budget).ctx("Möbius metric")?;
    r.metric("h", h).metric("alpha", alpha).metric("delta", delta.value);
    r.margin_with_slack("h_le_alpha", alpha - h, 1e-12);
    match &domain {
        ConvexDomain::Ball(_) => {
            let rho = rho_ball(&a, &b).ctx("hyperbolic distance")?;
            let m = hilbert_core::geom::dist_origin_line(&a, &b).unwrap_or(0.0);
            r.metric("rho", rho)
                .margin_with_slack("h_le_rho", rho - h, 1e-12)
                .margin_with_slack("rho_le_h_over_sqrt", h / ((1.0 - m) * (1.0 + m)).sqrt() - rho, 1e-12);
        }
        ConvexDomain::Polygon(_) => {
            r.budget = Some(args.budget);
            r.metric("delta_evaluations", delta.evaluations as f64)
                .margin_with_slack("alpha_le_delta", delta.value - alpha, 1e-4)
                .margin_with_slack("delta_le_log_bound", (alpha.exp() + 2.0).ln() - delta.value, 1e-4);
        }
    }
    emit(&args.out, &render_report(&r, format))?;
    if r.all_pass() {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

fn cmd_ball(args: BallArgs) -> CliResult<()> {
    let domain = load_domain(&args.domain)?;
    if domain.dim() != 2 {
        return Err(CliError::Usage("ball needs a planar domain".into()));
    }
    let z = fit_point(&args.center.0, 2, "--center")?;
    domain.check_interior(&z).ctx("--center")?;
    let poly = hilbert_ball_boundary(&domain, &z, args.t, args.ndirs as usize).ctx("Hilbert circle")?;
    let zc = Complex64::new(z[0], z[1]);
    let mut summary = MetricReport::new();
    summary.metric("points", poly.points.len() as f64).metric("convex", if poly.is_convex() { 1.0 } else { 0.0 });
    match &domain {
        ConvexDomain::Polygon(_) => {
            summary.metric("hexagon_fit_residual", hexagon_fit_residual(&domain, &z, args.t, &poly).ctx("corner fit")?);
        }
        ConvexDomain::Ball(_) => {
            let dev = poly.points.iter().map(|p| (h_ball(&z, &[p.re, p.im]).unwrap_or(f64::NAN) - args.t).abs());
            summary.metric("max_distance_error", dev.fold(0.0, f64::max));
        }
    }
    let body = match args.out.format.unwrap_or(Format::Csv) {
        Format::Csv => render::polyline_csv(&poly),
        Format::Svg => render::circle_svg(&domain, zc, &poly),
        Format::Text => summary.to_text(),
        Format::Json => summary.to_json() + "\n",
    };
    emit(&args.out, &body)?;
    if matches!(args.out.format.unwrap_or(Format::Csv), Format::Csv | Format::Svg) {
        eprint!("{}", summary.to_text());
    }
    Ok(())
}

fn cmd_sphere(args: SphereArgs) -> CliResult<()> {
    let format = report_format(&args.out)?;
    let ell = hilbert_sphere_ellipsoid(&args.center.0, args.r).ctx("--center")?;
    let mut rng = sample::stream(args.seed, 0);
    let (mut dist, mut nsc) = (0.0f64, 0.0f64);
    for _ in 0..args.samples {
        let x = ell.surface_point(&sample::unit_vector(&mut rng, ell.n));
        dist = dist.max((h_ball(&x, &args.center.0).ctx("surface point")? - args.r).abs());
        nsc = nsc.max(nsc_residual(&args.center.0, args.r, &x).abs());
    }
    let mut r = MetricReport::new();
    for (i, (c, e)) in ell.center.iter().zip(&ell.axis).enumerate() {
        r.metric(&format!("center.{i}"), *c).metric(&format!("axis.{i}"), *e);
    }
    r.metric("a_min", ell.a_min)
        .metric("a_max", ell.a_max)
        .metric("dim", ell.n as f64)
        .metric("center_shift", vecn::dist(&ell.center, &args.center.0))
        .residual("distance", dist, 1e-9)
        .residual("level_set", nsc, 1e-10);
    r.seed = Some(args.seed);
    r.count = Some(args.samples);
    emit(&args.out, &render_report(&r, format))?;
    if r.all_pass() {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

fn parse_map(s: &str, k: f64) -> CliResult<QcMapSpec> {
    let spec = if s == "radial-stretch" { QcMapSpec::RadialStretch(k) } else { s.parse().ctx("--map")? };
    Ok(spec)
}

fn cmd_holder(args: HolderArgs) -> CliResult<()> {
    let format = report_format(&args.out)?;
    let chain = c_bounds(args.k).ctx("-K")?;
    let mut r = match (&args.map, &args.a, &args.b) {
        (Some(m), _, _) => {
            let spec = parse_map(m, args.k)?;
            let mut rep = holder_verify(&spec, args.k, args.pairs, args.seed).ctx("--map")?;
            rep.metric("map_distortion", spec.distortion());
            rep
        }
        (None, Some(a), Some(b)) => {
            let (a, b) = (fit_point(&a.0, 2, "-a")?, fit_point(&b.0, 2, "-b")?);
            let inp = HolderBoundInput::new(args.k, Complex64::new(a[0], a[1]), Complex64::new(b[0], b[1]))
                .ctx("-a/-b")?;
            let mut rep = MetricReport::new();
            rep.metric("h", h_ball(&a, &b).ctx("-a/-b")?).metric("rhs", holder_rhs(&inp).ctx("-a/-b")?);
            rep
        }
        _ => MetricReport::new(),
    };
    r.metric("K", chain.k)
        .metric("c_K", chain.c)
        .metric("bound.linear_lower", chain.linear_lower)
        .metric("bound.log_cosh_lower", chain.log_cosh_lower)
        .metric("bound.upper", chain.upper)
        .margin_with_slack("bounds_chain", chain.min_gap(), 1e-12);
    emit(&args.out, &render_report(&r, format))?;
    if r.all_pass() {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

fn cmd_verify(args: VerifyArgs) -> CliResult<()> {
    let format = report_format(&args.out)?;
    let names: Vec<&str> = args.suite.iter().map(String::as_str).collect();
    let cfg = SuiteConfig { samples: args.samples, seed: args.seed };
    let outcomes = run_suites(&names, &cfg).ctx("--suite")?;
    let all = outcomes.iter().all(|o| o.passed());
    let body = match format {
        Format::Json => {
            let doc: Vec<String> = outcomes
                .iter()
                .map(|o| {
                    let rep = match &o.report {
                        Ok(r) => r.to_json(),
                        Err(e) => format!("{{\"error\": {:?}}}", e.to_string()),
                    };
                    format!("{{\"suite\": \"{}\", \"pass\": {}, \"report\": {}}}", o.name, o.passed(), rep)
                })
                .collect();
            format!("[\n{}\n]\n", doc.join(",\n"))
        }
        _ => {
            let mut text = String::new();
            for o in &outcomes {
                let verdict = if o.passed() { "PASS" } else { "FAIL" };
                match &o.report {
                    Ok(r) => {
                        text += &format!("{verdict} {} (worst margin {})\n", o.name, fmt_sig(r.min_margin()));
                        for line in r.to_text().lines() {
                            text += &format!("  {line}\n");
                        }
                    }
                    Err(e) => text += &format!("{verdict} {}: {e}\n", o.name),
                }
            }
            let passed = outcomes.iter().filter(|o| o.passed()).count();
            text += &format!("{passed} of {} suites passed\n", outcomes.len());
            text
        }
    };
    emit(&args.out, &body)?;
    if all {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Dist(a) => cmd_dist(a),
        Command::Ball(a) => cmd_ball(a),
        Command::Sphere(a) => cmd_sphere(a),
        Command::Holder(a) => cmd_holder(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !matches!(e, CliError::Failed) {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.code())
        }
    }
}
