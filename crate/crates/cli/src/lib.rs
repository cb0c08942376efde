//! The `qforms` command line.
//!
//! Exit status is 0 on success, 1 when the library rejects the input on
//! mathematical grounds, and 2 for usage errors (including malformed
//! form, point, element or word text).

pub mod plot;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use qforms::classes::{enumerate_almost_reduced, enumerate_reduced, DiscriminantQuery};
use qforms::field::OrbitExplorer;
use qforms::{
    base_point, equivalent, form_from_point, legendre, reduce, AlgebraicPoint, EquivalenceMode,
    GeneratorWord, GroupElement, QuadFieldElement, QuadraticForm,
};

use plot::Region;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "qforms",
    version,
    about = "Positive definite binary quadratic forms under the extended modular group"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Proper,
    Extended,
}

impl From<Mode> for EquivalenceMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Proper => EquivalenceMode::Proper,
            Mode::Extended => EquivalenceMode::Extended,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduce a positive definite form "a,b,c" and print the witness.
    Reduce {
        #[arg(allow_hyphen_values = true)]
        form: QuadraticForm,
    },
    /// Test two forms for equivalence.
    Equiv {
        #[arg(allow_hyphen_values = true)]
        first: QuadraticForm,
        #[arg(allow_hyphen_values = true)]
        second: QuadraticForm,
        #[arg(long, value_enum, default_value_t = Mode::Proper)]
        mode: Mode,
    },
    /// Class number h(Δ): the number of primitive reduced forms.
    ClassNumber {
        #[arg(allow_hyphen_values = true)]
        delta: BigInt,
    },
    /// List the reduced (or almost reduced) forms of discriminant Δ.
    Enumerate {
        #[arg(allow_hyphen_values = true)]
        delta: BigInt,
        /// Only primitive forms.
        #[arg(long)]
        primitive: bool,
        /// Almost reduced forms (no tie rules).
        #[arg(long)]
        almost: bool,
    },
    /// Base point (b + √Δ)/(2a) of a form, printed as "p,q,D".
    BasePoint {
        #[arg(allow_hyphen_values = true)]
        form: QuadraticForm,
    },
    /// Primitive form whose base point is "p,q,D", with the rational scale.
    PointForm {
        #[arg(allow_hyphen_values = true)]
        point: AlgebraicPoint,
    },
    /// Legendre symbol (λ/p).
    Legendre {
        #[arg(allow_hyphen_values = true)]
        lambda: BigInt,
        #[arg(allow_hyphen_values = true)]
        p: BigInt,
    },
    /// Elements reachable from "a/c/n" by at most --depth generators.
    Orbit {
        #[arg(allow_hyphen_values = true)]
        element: QuadFieldElement,
        #[arg(long, default_value_t = qforms::field::DEFAULT_MAX_DEPTH)]
        depth: usize,
        /// Require gcd(a, b, c) = 1.
        #[arg(long)]
        primitive: bool,
    },
    /// Compare orbit reachability with equivalence of the attached forms.
    CheckT32 {
        #[arg(allow_hyphen_values = true)]
        alpha: QuadFieldElement,
        #[arg(allow_hyphen_values = true)]
        beta: QuadFieldElement,
        #[arg(long, default_value_t = qforms::field::DEFAULT_MAX_DEPTH)]
        depth: usize,
    },
    /// Render base points against a fundamental region as SVG.
    Plot {
        /// Forms "a,b,c" (or points "p,q,D" with --points). Put items that
        /// start with a minus sign after `--`.
        items: Vec<String>,
        /// Treat the items as points rather than forms.
        #[arg(long)]
        points: bool,
        /// Add the reduced forms of this discriminant.
        #[arg(long, allow_hyphen_values = true)]
        delta: Option<BigInt>,
        #[arg(long, value_enum, default_value_t = Region::Pi)]
        region: Region,
        /// Write the SVG here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Domain(String),
    Usage(String),
}

impl From<qforms::Error> for Failure {
    fn from(e: qforms::Error) -> Self {
        match e {
            qforms::Error::Parse { .. } => Failure::Usage(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn word_text(w: &GeneratorWord) -> String {
    if w.is_empty() {
        "1".to_string()
    } else {
        w.to_string()
    }
}

#[derive(Serialize)]
struct ReduceOut {
    form: String,
    reduced: String,
    witness: String,
    word: String,
    steps: usize,
}

#[derive(Serialize)]
struct EquivOut {
    mode: &'static str,
    equivalent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    word: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    det: Option<i8>,
}

#[derive(Serialize)]
struct ClassNumberOut {
    delta: String,
    h: usize,
}

#[derive(Serialize)]
struct EnumerateOut {
    delta: String,
    forms: Vec<String>,
    h: usize,
}

#[derive(Serialize)]
struct BasePointOut {
    form: String,
    base_point: String,
    re: String,
    abs_sq: String,
    in_f_pi: bool,
    in_f_pibar: bool,
}

#[derive(Serialize)]
struct PointFormOut {
    point: String,
    form: String,
    scale: String,
}

#[derive(Serialize)]
struct LegendreOut {
    lambda: String,
    p: String,
    symbol: i8,
}

#[derive(Serialize)]
struct OrbitOut {
    element: String,
    depth: usize,
    size: usize,
    elements: Vec<String>,
}

#[derive(Serialize)]
struct CheckOut {
    alpha: String,
    beta: String,
    depth: usize,
    reachable: bool,
    forms_equivalent: bool,
    violation: bool,
    unconfirmed: bool,
}

trait Render: Serialize {
    fn text(&self) -> String;
}

impl Render for ReduceOut {
    fn text(&self) -> String {
        format!(
            "form: {}\nreduced: {}\nwitness: {}\nword: {}\nsteps: {}\n",
            self.form, self.reduced, self.witness, self.word, self.steps
        )
    }
}

impl Render for EquivOut {
    fn text(&self) -> String {
        let mut s = format!(
            "mode: {}\nequivalent: {}\n",
            self.mode,
            yes_no(self.equivalent)
        );
        if let (Some(w), Some(word), Some(det)) = (&self.witness, &self.word, self.det) {
            s.push_str(&format!("witness: {w}\nword: {word}\ndet: {det}\n"));
        }
        s
    }
}

impl Render for ClassNumberOut {
    fn text(&self) -> String {
        format!("h={}\n", self.h)
    }
}

impl Render for EnumerateOut {
    fn text(&self) -> String {
        let mut s = String::new();
        for f in &self.forms {
            s.push_str(f);
            s.push('\n');
        }
        s.push_str(&format!("h={}\n", self.h));
        s
    }
}

impl Render for BasePointOut {
    fn text(&self) -> String {
        format!(
            "form: {}\nbase point: {}\nre: {}\nabs_sq: {}\nin F_pi: {}\nin F_pibar: {}\n",
            self.form,
            self.base_point,
            self.re,
            self.abs_sq,
            yes_no(self.in_f_pi),
            yes_no(self.in_f_pibar)
        )
    }
}

impl Render for PointFormOut {
    fn text(&self) -> String {
        format!(
            "point: {}\nform: {}\nscale: {}\n",
            self.point, self.form, self.scale
        )
    }
}

impl Render for LegendreOut {
    fn text(&self) -> String {
        format!("{}\n", self.symbol)
    }
}

impl Render for OrbitOut {
    fn text(&self) -> String {
        let mut s = format!(
            "element: {}\ndepth: {}\nsize: {}\n",
            self.element, self.depth, self.size
        );
        for e in &self.elements {
            s.push_str(e);
            s.push('\n');
        }
        s
    }
}

impl Render for CheckOut {
    fn text(&self) -> String {
        format!(
            "alpha: {}\nbeta: {}\ndepth: {}\nreachable: {}\nforms equivalent: {}\nviolation: {}\nunconfirmed: {}\n",
            self.alpha,
            self.beta,
            self.depth,
            yes_no(self.reachable),
            yes_no(self.forms_equivalent),
            yes_no(self.violation),
            yes_no(self.unconfirmed)
        )
    }
}

fn emit<R: Render>(value: &R, format: Format) -> String {
    match format {
        Format::Text => value.text(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
            s.push('\n');
            s
        }
    }
}

fn query(delta: &BigInt, primitive: bool) -> Result<DiscriminantQuery, Failure> {
    Ok(DiscriminantQuery::from_bigint(delta, primitive)?)
}

fn execute(cli: Cli) -> Result<String, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Reduce { form } => {
            let r = reduce(&form)?;
            Ok(emit(
                &ReduceOut {
                    form: form.to_string(),
                    reduced: r.reduced.to_string(),
                    witness: r.witness.to_string(),
                    word: word_text(&r.word),
                    steps: r.steps,
                },
                format,
            ))
        }
        Command::Equiv {
            first,
            second,
            mode,
        } => {
            let witness = equivalent(&first, &second, mode.into())?;
            let out = EquivOut {
                mode: match mode {
                    Mode::Proper => "proper",
                    Mode::Extended => "extended",
                },
                equivalent: witness.is_some(),
                word: witness.as_ref().map(|g| word_text(&g.to_word())),
                det: witness.as_ref().map(GroupElement::det),
                witness: witness.as_ref().map(ToString::to_string),
            };
            Ok(emit(&out, format))
        }
        Command::ClassNumber { delta } => {
            let h = enumerate_reduced(&query(&delta, true)?).len();
            Ok(emit(
                &ClassNumberOut {
                    delta: delta.to_string(),
                    h,
                },
                format,
            ))
        }
        Command::Enumerate {
            delta,
            primitive,
            almost,
        } => {
            let q = query(&delta, primitive)?;
            let forms = if almost {
                enumerate_almost_reduced(&q)
            } else {
                enumerate_reduced(&q)
            };
            Ok(emit(
                &EnumerateOut {
                    delta: delta.to_string(),
                    h: forms.len(),
                    forms: forms.iter().map(ToString::to_string).collect(),
                },
                format,
            ))
        }
        Command::BasePoint { form } => {
            let z = base_point(&form)?;
            Ok(emit(
                &BasePointOut {
                    form: form.to_string(),
                    base_point: z.to_string(),
                    re: z.re().to_string(),
                    abs_sq: z.abs_sq().to_string(),
                    in_f_pi: z.in_fundamental_domain_pi(),
                    in_f_pibar: z.in_fundamental_domain_pibar(),
                },
                format,
            ))
        }
        Command::PointForm { point } => {
            let (form, scale) = form_from_point(&point);
            Ok(emit(
                &PointFormOut {
                    point: point.to_string(),
                    form: form.to_string(),
                    scale: scale.to_string(),
                },
                format,
            ))
        }
        Command::Legendre { lambda, p } => {
            let symbol = legendre(&lambda, &p)?;
            Ok(emit(
                &LegendreOut {
                    lambda: lambda.to_string(),
                    p: p.to_string(),
                    symbol,
                },
                format,
            ))
        }
        Command::Orbit {
            element,
            depth,
            primitive,
        } => {
            if primitive && !element.is_primitive() {
                return Err(Failure::Domain(format!("{element} is not primitive")));
            }
            let orbit = OrbitExplorer::default().explore(&element, depth)?;
            Ok(emit(
                &OrbitOut {
                    element: element.to_string(),
                    depth,
                    size: orbit.len(),
                    elements: orbit.iter().map(ToString::to_string).collect(),
                },
                format,
            ))
        }
        Command::CheckT32 { alpha, beta, depth } => {
            let report = OrbitExplorer::default().same_orbit_form_check(&alpha, &beta, depth)?;
            Ok(emit(
                &CheckOut {
                    alpha: alpha.to_string(),
                    beta: beta.to_string(),
                    depth: report.depth,
                    reachable: report.reachable,
                    forms_equivalent: report.forms_equivalent,
                    violation: report.violation,
                    unconfirmed: report.unconfirmed,
                },
                format,
            ))
        }
        Command::Plot {
            items,
            points,
            delta,
            region,
            out,
        } => {
            let mut pts = Vec::with_capacity(items.len());
            for item in &items {
                if points {
                    pts.push(item.parse::<AlgebraicPoint>()?);
                } else {
                    pts.push(base_point(&item.parse::<QuadraticForm>()?)?);
                }
            }
            if let Some(delta) = delta {
                for f in enumerate_reduced(&query(&delta, false)?) {
                    pts.push(base_point(&f)?);
                }
            }
            if pts.len() > MAX_PLOT_POINTS {
                return Err(Failure::Domain(format!(
                    "{} points exceed the plot limit of {MAX_PLOT_POINTS}",
                    pts.len()
                )));
            }
            let svg = plot::render(&pts, region);
            match out {
                Some(path) => {
                    std::fs::write(&path, svg).map_err(|e| {
                        Failure::Domain(format!("cannot write {}: {e}", path.display()))
                    })?;
                    Ok(String::new())
                }
                None => Ok(svg),
            }
        }
    }
}

pub const MAX_PLOT_POINTS: usize = 10_000;

/// Parses `args` (program name first), runs the command and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DOMAIN
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            let _ = writeln!(err, "run `qforms --help` for usage");
            EXIT_USAGE
        }
    }
}
