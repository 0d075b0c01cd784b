//! `prismlv`: command-line front end for the prism manifold toolkit.
//!
//! Exit status: 0 on success, 1 on domain or input errors, 2 on usage errors.

mod input;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use input::{int_list, Source};
use prismlv::audit::{prism_verify, range_from_bounds};
use prismlv::braid::{bennequin_chi, bennequin_genus, closure_components, parse_artin, twisted_torus_braid};
use prismlv::montesinos::{double_branched_cover, ln_link};
use prismlv::orbifold::{chi_orb, prism_case_analysis, riemann_hurwitz_cover, solve_any};
use prismlv::seifert::{base_orbifold, first_homology};
use prismlv::slopes::enumerate_constrained_slopes;
use prismlv::{
    count_representations, BraidWord, GroupPresentation, MontesinosLink, Orbifold2D, RepresentationFilter,
    SeifertSymbol, Slope, SurfaceData,
};

const DEFAULT_FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures");

#[derive(Parser, Debug)]
#[command(name = "prismlv", version, about = "Computable steps of the link-volume bound for prism manifolds")]
struct Cli {
    /// Emit JSON instead of a text table
    #[arg(long, global = true)]
    json: bool,
    /// Default output format
    #[arg(long, global = true, env = "PRISMLV_FORMAT", value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Directory holding `<name>.json` fixtures
    #[arg(long, global = true, env = "PRISMLV_FIXTURES", default_value = DEFAULT_FIXTURES)]
    fixtures: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Seifert symbol arithmetic
    #[command(subcommand)]
    Seifert(SeifertCmd),
    /// 2-orbifolds and horizontal surfaces
    #[command(subcommand)]
    Orbifold(OrbifoldCmd),
    /// Montesinos links and double branched covers
    #[command(subcommand)]
    Montesinos(MontesinosCmd),
    /// Slopes on a torus
    #[command(subcommand)]
    Slopes(SlopesCmd),
    /// Braid words and closure invariants
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Branched-cover counting
    #[command(subcommand)]
    Covers(CoversCmd),
    /// The verification pipeline
    #[command(subcommand)]
    Prism(PrismCmd),
}

#[derive(Subcommand, Debug)]
enum SeifertCmd {
    Normalize(Source),
    Euler(Source),
    H1(Source),
    Base(Source),
}

#[derive(Args, Debug)]
struct OrbifoldArgs {
    #[arg(long, default_value_t = true, action = ArgAction::Set)]
    orientable: bool,
    /// Genus, or number of cross-caps when non-orientable
    #[arg(long, default_value_t = 0)]
    genus: u32,
    #[arg(long, default_value_t = 0)]
    boundary: u32,
    /// Cone orders, comma-separated
    #[arg(long, value_delimiter = ',')]
    cones: Vec<u64>,
}

impl OrbifoldArgs {
    fn build(&self) -> prismlv::Result<Orbifold2D> {
        Orbifold2D::new(self.orientable, self.genus, self.boundary, self.cones.clone())
    }
}

#[derive(Subcommand, Debug)]
enum OrbifoldCmd {
    /// Orbifold Euler characteristic
    Chi(OrbifoldArgs),
    /// Riemann–Hurwitz: the branched cover of a surface
    Cover {
        #[arg(long, default_value_t = true, action = ArgAction::Set)]
        orientable: bool,
        #[arg(long, default_value_t = 0)]
        genus: u32,
        #[arg(long, default_value_t = 1)]
        boundary: u32,
        #[arg(long)]
        degree: u32,
        /// Local degrees over one branch point, comma-separated; repeatable
        #[arg(long)]
        branch: Vec<String>,
        /// Add this many simple branch points (one local degree 2)
        #[arg(long, default_value_t = 0)]
        simple: u32,
    },
    /// Degrees d with χ(F) = d·χ^orb(B) for an orientable surface F
    Solve {
        #[command(flatten)]
        base: OrbifoldArgs,
        #[arg(long, default_value_t = 2)]
        fiber_genus: u32,
        #[arg(long, default_value_t = 1)]
        fiber_boundary: u32,
    },
    /// The five drilled bases of M_n with the F_{2,1} degree equation
    Cases {
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
}

#[derive(Subcommand, Debug)]
enum MontesinosCmd {
    /// Double branched cover as a normalized Seifert symbol
    Cover(Source),
    /// The two Montesinos presentations of L_n and their covers
    Ln {
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
}

#[derive(Subcommand, Debug)]
enum SlopesCmd {
    /// Intersection number of two slopes `p,q`
    Delta {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Slopes s with Δ(s,f) = k1 and Δ(s,c) ≤ k2
    Enumerate {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(long, default_value_t = 1)]
        k1: u64,
        #[arg(long, default_value_t = 2)]
        k2: u64,
    },
}

#[derive(Args, Debug)]
struct BraidInput {
    /// Artin word, e.g. "s1 s2 s1^-1"
    word: Option<String>,
    #[arg(long)]
    strands: Option<usize>,
    /// Use the twisted torus braid `p,q,r,s`
    #[arg(long, conflicts_with = "word", allow_hyphen_values = true)]
    ttk: Option<String>,
}

impl BraidInput {
    fn build(&self) -> Result<BraidWord, String> {
        if let Some(t) = &self.ttk {
            let v: Vec<i64> = int_list(t)?;
            let [p, q, r, s] = v[..] else {
                return Err(format!("--ttk needs four integers p,q,r,s, got {t:?}"));
            };
            let (p, r) = (usize::try_from(p).map_err(|_| "p must be positive")?, usize::try_from(r).map_err(|_| "r must be positive")?);
            return twisted_torus_braid(p, q, r, s).map_err(|e| e.to_string());
        }
        let word = self.word.as_deref().ok_or("no braid: pass a word or --ttk")?;
        match self.strands {
            Some(n) => parse_artin(n, word),
            None => word.parse(),
        }
        .map_err(|e| e.to_string())
    }
}

#[derive(Subcommand, Debug)]
enum BraidCmd {
    /// Braid word of the twisted torus knot T(p,q;r,s)
    Ttk {
        p: usize,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        r: usize,
        #[arg(allow_negative_numbers = true)]
        s: i64,
    },
    /// Number of components of the closure
    Components(BraidInput),
    /// Euler characteristic of the braid surface (positive braids)
    Chi(BraidInput),
}

#[derive(Subcommand, Debug)]
enum CoversCmd {
    /// Homomorphisms from a presented group to S_d
    Count {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        degree: usize,
        /// Count only transitive representations
        #[arg(long)]
        transitive: bool,
    },
}

#[derive(Subcommand, Debug)]
enum PrismCmd {
    /// Run every computable step for n in [from, to]
    Verify {
        #[arg(long, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, allow_negative_numbers = true)]
        to: i64,
    },
}

/// What a command produced: JSON documents (one per line) and a text form.
struct Report {
    json: Vec<Value>,
    text: String,
}

impl Report {
    fn scalar(key: &str, value: impl Serialize + ToString) -> Report {
        let text = value.to_string();
        Report { json: vec![json!({ key: to_value(&value) })], text }
    }

    fn table(value: Value) -> Report {
        let text = render::table(&value);
        Report { json: vec![value], text }
    }

    fn display(value: &(impl Serialize + ToString)) -> Report {
        Report { json: vec![to_value(value)], text: value.to_string() }
    }
}

fn to_value(v: &impl Serialize) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn slope(s: &str) -> Result<Slope, String> {
    s.parse::<Slope>().map_err(|e| e.to_string())
}

fn domain<T>(r: prismlv::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn validated<T>(x: T, check: impl FnOnce(&T) -> prismlv::Result<()>) -> Result<T, String> {
    domain(check(&x)).map(|_| x)
}

fn run(cli: &Cli) -> Result<Report, String> {
    let fx = cli.fixtures.as_path();
    let symbol = |s: &Source| validated(s.load::<SeifertSymbol>(fx)?, SeifertSymbol::validate);
    Ok(match &cli.command {
        Command::Seifert(cmd) => match cmd {
            SeifertCmd::Normalize(s) => Report::display(&domain(symbol(s)?.normalize())?),
            SeifertCmd::Euler(s) => Report::scalar("euler_number", symbol(s)?.euler_number()),
            SeifertCmd::H1(s) => {
                let h = domain(first_homology(&symbol(s)?))?;
                let mut rows = serde_json::Map::new();
                rows.insert("group".into(), json!(h.to_string()));
                rows.insert("invariant_factors".into(), to_value(&h)["invariant_factors"].clone());
                Report { json: vec![to_value(&h)], text: render::table(&Value::Object(rows)) }
            }
            SeifertCmd::Base(s) => {
                let b = base_orbifold(&symbol(s)?);
                let mut rows = serde_json::Map::new();
                rows.insert("orbifold".into(), json!(b.describe()));
                rows.extend(to_value(&b).as_object().expect("struct serializes to an object").clone());
                Report { json: vec![to_value(&b)], text: render::table(&Value::Object(rows)) }
            }
        },
        Command::Orbifold(cmd) => match cmd {
            OrbifoldCmd::Chi(a) => Report::scalar("chi_orb", chi_orb(&domain(a.build())?)),
            OrbifoldCmd::Cover { orientable, genus, boundary, degree, branch, simple } => {
                let base = domain(SurfaceData::new(*genus, *boundary, *orientable))?;
                let mut data: Vec<Vec<u32>> = branch.iter().map(|b| int_list(b)).collect::<Result<_, _>>()?;
                let simple_point: Vec<u32> = std::iter::once(2).chain(std::iter::repeat(1).take(degree.saturating_sub(2) as usize)).collect();
                data.extend(std::iter::repeat(simple_point).take(*simple as usize));
                Report::table(to_value(&domain(riemann_hurwitz_cover(&base, *degree, &data))?))
            }
            OrbifoldCmd::Solve { base, fiber_genus, fiber_boundary } => {
                let f = domain(SurfaceData::new(*fiber_genus, *fiber_boundary, true))?;
                Report::table(to_value(&domain(solve_any(&f, &domain(base.build())?))?))
            }
            OrbifoldCmd::Cases { n } => {
                let f = prismlv::orbifold::five_point_disk_cover();
                let a = domain(prism_case_analysis(*n, &f))?;
                let text = format!("n={}  admits_horizontal={}\n{}", a.n, a.admits_horizontal, render::case_table(&a, ""));
                Report { json: vec![to_value(&a)], text }
            }
        },
        Command::Montesinos(cmd) => match cmd {
            MontesinosCmd::Cover(s) => {
                let l = validated(s.load::<MontesinosLink>(fx)?, MontesinosLink::validate)?;
                Report::display(&domain(double_branched_cover(&l))?)
            }
            MontesinosCmd::Ln { n } => {
                let (planar, crosscap) = ln_link(*n);
                let covers = [domain(double_branched_cover(&planar))?, domain(double_branched_cover(&crosscap))?];
                let fmt_link = |l: &MontesinosLink| {
                    let t: Vec<String> = l.tangles.iter().map(|t| format!("{}/{}", t.beta, t.alpha)).collect();
                    format!("({}; {})", l.genus, t.join(", "))
                };
                let text = render::table(&json!({
                    "n": n,
                    "planar": fmt_link(&planar),
                    "crosscap": fmt_link(&crosscap),
                    "planar_cover": covers[0].to_string(),
                    "crosscap_cover": covers[1].to_string(),
                }));
                let v = json!({"n": n, "planar": planar, "crosscap": crosscap, "covers": covers});
                Report { json: vec![v], text }
            }
        },
        Command::Slopes(cmd) => match cmd {
            SlopesCmd::Delta { a, b } => Report::scalar("delta", slope(a)?.delta(&slope(b)?)),
            SlopesCmd::Enumerate { f, c, k1, k2 } => {
                let (f, c) = (slope(f)?, slope(c)?);
                let found = domain(enumerate_constrained_slopes(&f, &c, *k1, *k2))?;
                Report::table(json!({"f": f, "c": c, "k1": k1, "k2": k2, "count": found.len(), "slopes": found}))
            }
        },
        Command::Braid(cmd) => match cmd {
            BraidCmd::Ttk { p, q, r, s } => Report::table(to_value(&domain(twisted_torus_braid(*p, *q, *r, *s))?)),
            BraidCmd::Components(b) => Report::scalar("components", closure_components(&b.build()?)),
            BraidCmd::Chi(b) => {
                let w = b.build()?;
                let chi = domain(bennequin_chi(&w))?;
                // genus only makes sense for knots
                let genus = bennequin_genus(&w).ok();
                Report::table(json!({"chi": chi, "genus": genus}))
            }
        },
        Command::Covers(CoversCmd::Count { source, degree, transitive }) => {
            let g = validated(source.load::<GroupPresentation>(fx)?, GroupPresentation::validate)?;
            let filter = if *transitive { RepresentationFilter::Transitive } else { RepresentationFilter::All };
            Report::scalar("count", domain(count_representations(&g, *degree, filter))?)
        }
        Command::Prism(PrismCmd::Verify { from, to }) => {
            let report = domain(prism_verify(domain(range_from_bounds(*from, *to))?))?;
            Report { json: report.entries.iter().map(to_value).collect(), text: render::prism_report(&report) }
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    let json_out = cli.json || cli.format == Format::Json;
    match run(&cli) {
        Ok(r) => {
            if json_out {
                for v in &r.json {
                    println!("{v}");
                }
            } else if !r.text.is_empty() {
                println!("{}", r.text);
            }
            ExitCode::SUCCESS
        }
        Err(msg) => {
            eprintln!("error: {}", msg.replace('\n', " "));
            ExitCode::from(1)
        }
    }
}
