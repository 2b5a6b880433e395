//! `bumpkit`: statistics, polynomials, renderings and cross-checks for the
//! RS bump statistic.
//!
//! Exit status is 0 on success, 1 when a verification or golden comparison
//! fails (or on I/O trouble), and 2 for usage errors and exceeded caps.

use std::fmt::Display;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bumpkit::bump_diagram::{build_bump_diagram, render_diagram_ascii, render_diagram_svg};
use bumpkit::poly::{
    bn_321_by_enumeration, bn_321_closed_form, bn_bivariate, bn_by_enumeration, bn_by_shapes, mean_bump_exact,
    tn_direct, tn_head_series, tn_via_product, weakbump_polynomial, Method, PolynomialReport,
};
use bumpkit::report::PermutationReport;
use bumpkit::svg::SvgOptions;
use bumpkit::verify::{registry, run_suite, select_suites};
use bumpkit::viennot::{render_shadows_svg, shadow_diagram};
use bumpkit::{parse_permutation, Caps, Error, Permutation};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bumpkit", version, about = "Bump statistics of the Robinson-Schensted correspondence")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Shape, tableaux and every bump statistic of one permutation.
    Stats {
        /// One-line notation: digits (n <= 9) or comma/space separated values.
        permutation: String,
        #[arg(long, value_enum, default_value_t = DataFormat::Text)]
        format: DataFormat,
    },
    /// A generating polynomial for size n.
    Poly {
        #[arg(value_enum)]
        kind: PolyKind,
        /// Size (for `head`, the largest exponent).
        n: usize,
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
        #[arg(long, value_enum, default_value_t = DataFormat::Text)]
        format: DataFormat,
    },
    /// Draw the Viennot shadows or the bump diagram of a permutation.
    Render {
        #[arg(value_enum)]
        kind: RenderKind,
        permutation: String,
        #[arg(long, value_enum, default_value_t = RenderFormat::Svg)]
        format: RenderFormat,
        /// Write here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Grid spacing in SVG user units.
        #[arg(long, default_value_t = bumpkit::svg::DEFAULT_PITCH)]
        pitch: u32,
        /// Leave out numeric labels in SVG output.
        #[arg(long)]
        no_labels: bool,
    },
    /// Run oracle cross-check suites, one JSON line per check.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Comma-separated suite names; all suites when omitted.
        #[arg(long, value_delimiter = ',')]
        suites: Vec<String>,
        /// Print the suite names and exit.
        #[arg(long)]
        list: bool,
    },
    /// Compare (or rewrite) the checked-in reference tables.
    Golden {
        /// Overwrite the golden files with freshly computed tables.
        #[arg(long)]
        regenerate: bool,
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DataFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyKind {
    Bn,
    Bn321,
    Tn,
    Bivariate,
    Weakbump,
    Head,
    Mean,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Enum,
    Shape,
    Product,
    Closed,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Enum => Method::Enumeration,
            MethodArg::Shape => Method::Shape,
            MethodArg::Product => Method::Product,
            MethodArg::Closed => Method::Closed,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderKind {
    Shadows,
    Diagram,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderFormat {
    Svg,
    Ascii,
}

enum Failure {
    Usage(String),
    Check(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type CliResult<T = ()> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = Caps::from_env();
    let outcome = match cli.command {
        Command::Stats { permutation, format } => cmd_stats(&permutation, format),
        Command::Poly { kind, n, method, format } => cmd_poly(kind, n, method, format, &caps),
        Command::Render { kind, permutation, format, output, pitch, no_labels } => {
            let opts = SvgOptions { pitch, labels: !no_labels };
            cmd_render(kind, &permutation, format, output.as_deref(), &opts)
        }
        Command::Verify { max_n, suites, list } => {
            if list {
                cmd_list_suites()
            } else {
                cmd_verify(max_n, &suites, &caps)
            }
        }
        Command::Golden { regenerate, dir } => {
            let dir = dir.unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("golden"));
            cmd_golden(&dir, regenerate, &caps)
        }
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("bumpkit: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) | Err(Failure::Io(msg)) => {
            eprintln!("bumpkit: {msg}");
            ExitCode::from(1)
        }
    }
}

fn read_permutation(text: &str) -> CliResult<Permutation> {
    if text.trim().is_empty() {
        return Err(Failure::Usage("expected a permutation, got empty input".into()));
    }
    Ok(parse_permutation(text)?)
}

fn print(text: impl Display) -> CliResult {
    let mut out = io::stdout().lock();
    writeln!(out, "{text}")?;
    Ok(())
}

fn to_json<T: serde::Serialize>(value: &T) -> CliResult<String> {
    serde_json::to_string(value).map_err(|e| Failure::Check(format!("JSON encoding failed: {e}")))
}

fn cmd_stats(text: &str, format: DataFormat) -> CliResult {
    let report = PermutationReport::new(&read_permutation(text)?);
    match format {
        DataFormat::Text => print(report.to_text().trim_end()),
        DataFormat::Json => print(to_json(&report)?),
    }
}

fn check_cap(what: &'static str, n: usize, cap: usize) -> CliResult {
    if n > cap {
        return Err(Error::CapExceeded { what, n, cap }.into());
    }
    Ok(())
}

fn unsupported(kind: &str, method: Method) -> Failure {
    Failure::Usage(format!("`poly {kind}` does not support --method {method:?}"))
}

fn emit_polynomial<P: Display + serde::Serialize>(n: usize, poly: P, format: DataFormat) -> CliResult {
    match format {
        DataFormat::Text => print(&poly),
        DataFormat::Json => print(to_json(&PolynomialReport { n, coeffs: poly })?),
    }
}

fn cmd_poly(kind: PolyKind, n: usize, method: Option<MethodArg>, format: DataFormat, caps: &Caps) -> CliResult {
    let method = method.map(Method::from);
    match kind {
        PolyKind::Bn => {
            let poly = match method.unwrap_or(Method::Shape) {
                Method::Enumeration => bn_by_enumeration(n, caps.polynomial_enumeration)?,
                Method::Shape => {
                    check_cap("B_n(q) over shapes", n, caps.shape_sums)?;
                    bn_by_shapes(n)?
                }
                other => return Err(unsupported("bn", other)),
            };
            emit_polynomial(n, poly, format)
        }
        PolyKind::Bn321 => {
            let poly = match method.unwrap_or(Method::Closed) {
                Method::Closed => bn_321_closed_form(n)?,
                Method::Enumeration => bn_321_by_enumeration(n, caps.permutations)?,
                other => return Err(unsupported("bn321", other)),
            };
            emit_polynomial(n, poly, format)
        }
        PolyKind::Tn => {
            check_cap("T_n(q)", n, caps.shape_sums)?;
            let poly = match method.unwrap_or(Method::Enumeration) {
                Method::Enumeration => tn_direct(n),
                Method::Product => tn_via_product(n),
                other => return Err(unsupported("tn", other)),
            };
            emit_polynomial(n, poly, format)
        }
        PolyKind::Bivariate => {
            let method = method.unwrap_or(Method::Shape);
            if method == Method::Shape {
                check_cap("B_n(q,t) over shapes", n, caps.shape_sums)?;
            }
            emit_polynomial(n, bn_bivariate(n, method, caps.polynomial_enumeration)?, format)
        }
        PolyKind::Weakbump => {
            let method = method.unwrap_or(Method::Shape);
            if method == Method::Shape {
                check_cap("weakbump polynomial over shapes", n, caps.shape_sums)?;
            }
            emit_polynomial(n, weakbump_polynomial(n, method, caps.polynomial_enumeration)?, format)
        }
        PolyKind::Head => {
            if let Some(m) = method {
                return Err(unsupported("head", m));
            }
            emit_polynomial(n, tn_head_series(n), format)
        }
        PolyKind::Mean => {
            if let Some(m) = method {
                return Err(unsupported("mean", m));
            }
            let mean = mean_bump_exact(n, caps.mean_bump)?;
            match format {
                DataFormat::Json => print(to_json(&mean)?),
                DataFormat::Text => print(format!(
                    "mean bump over S_{n}: {} ~ {:.6}\n128 n^(3/2) / (27 pi^2): {:.6}\nratio: {:.6}",
                    mean.exact, mean.approx, mean.asymptotic, mean.ratio
                )),
            }
        }
    }
}

fn cmd_render(
    kind: RenderKind,
    text: &str,
    format: RenderFormat,
    output: Option<&Path>,
    opts: &SvgOptions,
) -> CliResult {
    let pi = read_permutation(text)?;
    let rendered = match (kind, format) {
        (RenderKind::Shadows, RenderFormat::Svg) => render_shadows_svg(&shadow_diagram(&pi), opts),
        (RenderKind::Shadows, RenderFormat::Ascii) => {
            return Err(Failure::Usage("shadow diagrams render as svg only".into()));
        }
        (RenderKind::Diagram, RenderFormat::Svg) => render_diagram_svg(&build_bump_diagram(&pi)?, opts),
        (RenderKind::Diagram, RenderFormat::Ascii) => render_diagram_ascii(&build_bump_diagram(&pi)?),
    };
    match output {
        Some(path) => fs::write(path, rendered).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            io::stdout().lock().write_all(rendered.as_bytes())?;
            Ok(())
        }
    }
}

fn cmd_list_suites() -> CliResult {
    for suite in registry() {
        print(format!(
            "{:<16}{:<13}n <= {:<3} {}",
            suite.name,
            format!("{:?}", suite.domain).to_lowercase(),
            suite.oracle_limit,
            suite.about
        ))?;
    }
    Ok(())
}

fn cmd_verify(max_n: usize, names: &[String], caps: &Caps) -> CliResult {
    let suites = select_suites(names, max_n, caps)?;
    let mut out = io::stdout().lock();
    let mut checks = 0usize;
    let mut failures = 0usize;
    let mut first_failure = None;
    for suite in suites {
        for line in run_suite(suite, max_n, caps)? {
            checks += 1;
            if !line.report.agree {
                failures += 1;
                first_failure.get_or_insert_with(|| line.clone());
            }
            writeln!(out, "{}", to_json(&line)?)?;
        }
    }
    out.flush()?;
    match first_failure {
        None => {
            eprintln!("{checks} checks, all agree");
            Ok(())
        }
        Some(bad) => Err(Failure::Check(format!(
            "{failures} of {checks} checks disagree; first: [{}] {} fast={} oracle={}",
            bad.suite, bad.report.instance, bad.report.fast_value, bad.report.oracle_value
        ))),
    }
}

/// Reference tables kept under version control.
fn golden_tables(caps: &Caps) -> CliResult<Vec<(&'static str, String)>> {
    let mut table1 = String::new();
    for n in 1..=5 {
        table1 += &format!("B_{n}(q) = {}\n", bn_by_enumeration(n, caps.polynomial_enumeration)?);
    }
    for n in 1..=5 {
        table1 += &format!("T_{n}(q) = {}\n", tn_direct(n));
    }
    let b8 = format!("B_8(q) = {}\n", bn_by_shapes(8)?);
    let tn: String = (1..=12).map(|n| format!("T_{n}(q) = {}\n", tn_direct(n))).collect();
    Ok(vec![("table1.txt", table1), ("b8.txt", b8), ("tn.txt", tn)])
}

fn cmd_golden(dir: &Path, regenerate: bool, caps: &Caps) -> CliResult {
    let tables = golden_tables(caps)?;
    if regenerate {
        fs::create_dir_all(dir).map_err(|e| Failure::Io(format!("{}: {e}", dir.display())))?;
        for (name, content) in &tables {
            let path = dir.join(name);
            fs::write(&path, content).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            eprintln!("wrote {}", path.display());
        }
        return Ok(());
    }
    let mut stale = Vec::new();
    for (name, content) in &tables {
        let path = dir.join(name);
        let stored = fs::read_to_string(&path)
            .map_err(|e| Failure::Io(format!("{}: {e} (run `bumpkit golden --regenerate`)", path.display())))?;
        if &stored == content {
            print(format!("ok    {name}"))?;
        } else {
            for (line_no, (want, got)) in stored.lines().zip(content.lines()).enumerate() {
                if want != got {
                    eprintln!("{name}:{}: stored `{want}`, computed `{got}`", line_no + 1);
                }
            }
            print(format!("FAIL  {name}"))?;
            stale.push(*name);
        }
    }
    if stale.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("golden files differ: {}", stale.join(", "))))
    }
}
