use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use oig_core::covec::all_covectors;
use oig_core::flats::{FlatId, FlatLattice};
use oig_core::geom::{complexified_oig, convex_geometry, om_from_vectors};
use oig_core::io::{
    from_json, parse_label_list, to_json, ArrangementDoc, AxiomCheckDoc, BundleDoc, CovectorDoc, LatticeDoc, PointsDoc,
    SetSystemDoc, ValidationDoc, VectorsDoc,
};
use oig_core::orient::{contract_oig, oig_from_antimatroid, restrict_oig, OrientedSystem};
use oig_core::setsys::{check_axioms, AxiomClass, SetSystem};
use oig_core::topo::flags::descending_chains;
use oig_core::topo::{
    augment, flag_count, homology_evidence, order_complex, recursive_coatom_ordering, tope_graph, tope_poset,
    FinitePoset, HomologyReport, RcoNode,
};
use oig_core::Error;

#[derive(Parser)]
#[command(name = "oig", version, about = "Interval greedoids and their orientations")]
struct Cli {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to a file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of a class on a set system.
    Check {
        /// Axiom class to check.
        #[arg(long, default_value = "interval_greedoid")]
        class: AxiomClass,
        /// Report every violation, not just the first per axiom.
        #[arg(long)]
        exhaustive: bool,
        input: PathBuf,
    },
    /// Lattice of flats of an interval greedoid.
    Flats { input: PathBuf },
    /// All covectors of an interval greedoid.
    Covectors { input: PathBuf },
    /// Validate an oriented interval greedoid bundle.
    Orient {
        /// Report every witness, not just the first per axiom.
        #[arg(long)]
        exhaustive: bool,
        input: PathBuf,
    },
    /// Convex geometry of a point set and its orientation.
    FromPoints { input: PathBuf },
    /// Oriented matroid of a vector configuration.
    FromVectors { input: PathBuf },
    /// Orientation of a complexified hyperplane arrangement.
    FromArrangement { input: PathBuf },
    /// Contraction of a system or bundle by a feasible set.
    Contract {
        /// Comma-separated labels of a feasible set; empty for the empty set.
        #[arg(long, value_name = "LABELS", allow_hyphen_values = true)]
        by: String,
        input: PathBuf,
    },
    /// Restriction of a system or bundle to a subset.
    Restrict {
        /// Comma-separated labels to keep; empty for the empty set.
        #[arg(long, value_name = "LABELS", allow_hyphen_values = true)]
        to: String,
        input: PathBuf,
    },
    /// Tope graph and tope poset.
    Topes {
        /// Base tope as a sign string; defaults to the first tope.
        #[arg(long)]
        base: Option<String>,
        input: PathBuf,
    },
    /// Build and verify a recursive coatom ordering.
    Rco {
        /// Base tope as a sign string; defaults to the first tope.
        #[arg(long)]
        base: Option<String>,
        input: PathBuf,
    },
    /// Order complex of the augmented covector poset and its homology.
    Sphere {
        /// Emit the order complex as a facet list instead of the report.
        #[arg(long)]
        facets: bool,
        input: PathBuf,
    },
    /// Compare chain counts with the Möbius product over chains of flats.
    Flags {
        /// A flat of the chain, from the top down, named by a set whose
        /// maximal feasible subsets lie in it. The bottom is appended.
        #[arg(long = "flat", value_name = "LABELS")]
        flats: Vec<String>,
        input: PathBuf,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::AxiomFailure { .. }
            | Error::NotALattice(_)
            | Error::NotSemimodular(_)
            | Error::NotFeasible(_)
            | Error::Internal(_) => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

/// Rendered output and whether the subcommand's check passed.
struct Outcome {
    text: String,
    passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(p) => fs::write(p, &out.text).map_err(|e| format!("cannot write {}: {e}", p.display())),
                None => {
                    print!("{}", out.text);
                    Ok(())
                }
            };
            match written {
                Err(msg) => {
                    eprintln!("error: {msg}");
                    ExitCode::from(2)
                }
                Ok(()) if out.passed => ExitCode::SUCCESS,
                Ok(()) => ExitCode::from(1),
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

enum Input {
    System(SetSystemDoc),
    Bundle(BundleDoc),
}

impl Input {
    fn system(&self) -> CliResult<SetSystem> {
        match self {
            Input::System(s) => Ok(s.to_system()?),
            Input::Bundle(b) => Ok(b.system.to_system()?),
        }
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> CliResult<Input> {
    let text = read(path)?;
    let value: serde_json::Value = from_json(&text)?;
    if value.get("covectors").is_some() {
        Ok(Input::Bundle(from_json(&text)?))
    } else {
        Ok(Input::System(from_json(&text)?))
    }
}

fn load_bundle(path: &Path) -> CliResult<BundleDoc> {
    match load(path)? {
        Input::Bundle(b) => Ok(b),
        Input::System(_) => Err(usage(format!("{} is a set system; a bundle with covectors is required", path.display()))),
    }
}

/// A bundle that must pass validation before further work.
fn load_oig(path: &Path) -> CliResult<OrientedSystem> {
    let oig = load_bundle(path)?.to_oig()?;
    if !oig.passed() {
        let report = ValidationDoc::from_oig(&oig).to_text();
        return Err(Failure { code: 1, message: format!("bundle is not an oriented interval greedoid\n{report}") });
    }
    Ok(oig)
}

fn json<T: Serialize>(value: &T) -> CliResult<String> {
    Ok(to_json(value)?)
}

fn unsupported(format: Format, command: &str) -> Failure {
    let name = match format {
        Format::Json => "json",
        Format::Dot => "dot",
        Format::Text => "text",
    };
    usage(format!("{command} does not support --format {name}"))
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    let fmt = |default: Format| cli.format.unwrap_or(default);
    match &cli.command {
        Command::Check { class, exhaustive, input } => {
            let sys = load(input)?.system()?;
            let report = check_axioms(&sys, *class, *exhaustive);
            let doc = AxiomCheckDoc::new(&report, sys.ground());
            let text = match fmt(Format::Text) {
                Format::Json => json(&doc)?,
                Format::Text => {
                    let mut s = String::from(if doc.passed { "passed\n" } else { "failed\n" });
                    for v in &doc.violations {
                        s.push_str(&format!("  {v}\n"));
                    }
                    if !doc.loops.is_empty() {
                        s.push_str(&format!("loops: {}\n", doc.loops.join(",")));
                    }
                    s
                }
                f => return Err(unsupported(f, "check")),
            };
            Ok(Outcome { text, passed: doc.passed })
        }
        Command::Flats { input } => {
            let lat = FlatLattice::new(&load(input)?.system()?)?;
            let text = match fmt(Format::Text) {
                Format::Json => json(&LatticeDoc::from_lattice(&lat))?,
                Format::Dot => lat.to_dot(),
                Format::Text => {
                    let mut s = String::new();
                    for f in lat.flats() {
                        let covers: Vec<String> = lat.upper_covers(f.id).iter().map(|&c| lat.label(c)).collect();
                        s.push_str(&format!(
                            "{} corank {} gamma {} covered by {}\n",
                            lat.label(f.id),
                            f.corank,
                            lat.system().format_set(f.gamma),
                            if covers.is_empty() { "-".into() } else { covers.join(" ") }
                        ));
                    }
                    s
                }
            };
            Ok(Outcome::ok(text))
        }
        Command::Covectors { input } => {
            let lat = FlatLattice::new(&load(input)?.system()?)?;
            let cov = all_covectors(&lat)?;
            let text = match fmt(Format::Text) {
                Format::Json => json(&cov.iter().map(|c| CovectorDoc::new(&lat, c)).collect::<Vec<_>>())?,
                Format::Text => cov.iter().map(|c| format!("{c}\n")).collect(),
                Format::Dot => {
                    let labels = cov.iter().map(|c| c.to_string()).collect();
                    FinitePoset::from_leq(labels, |a, b| cov[a].leq(&cov[b]))?.to_dot("covectors")
                }
            };
            Ok(Outcome::ok(text))
        }
        Command::Orient { exhaustive, input } => {
            let bundle = load_bundle(input)?;
            let oig = oig_core::orient::validate_oig_with(&bundle.system.to_system()?, &bundle.sign_vectors()?, *exhaustive)?;
            let doc = ValidationDoc::from_oig(&oig);
            let text = match fmt(Format::Text) {
                Format::Json => json(&doc)?,
                Format::Text => doc.to_text(),
                f => return Err(unsupported(f, "orient")),
            };
            Ok(Outcome { text, passed: doc.passed })
        }
        Command::FromPoints { input } => {
            let doc: PointsDoc = from_json(&read(input)?)?;
            let geometry = convex_geometry(&doc.to_configuration()?)?;
            emit_bundle(&oig_from_antimatroid(geometry.system())?, fmt(Format::Json), "from-points")
        }
        Command::FromVectors { input } => {
            let doc: VectorsDoc = from_json(&read(input)?)?;
            let oig = om_from_vectors(&doc.rows()?, doc.labels.as_deref())?;
            emit_bundle(&oig, fmt(Format::Json), "from-vectors")
        }
        Command::FromArrangement { input } => {
            let doc: ArrangementDoc = from_json(&read(input)?)?;
            emit_bundle(&complexified_oig(&doc.to_arrangement()?)?, fmt(Format::Json), "from-arrangement")
        }
        Command::Contract { by, input } => match load(input)? {
            Input::System(s) => {
                let sys = s.to_system()?;
                let x = parse_label_list(sys.ground(), by)?;
                emit_system(&sys.contract(x)?, fmt(Format::Json), "contract")
            }
            Input::Bundle(_) => {
                let oig = load_oig(input)?;
                let x = parse_label_list(oig.system().ground(), by)?;
                emit_bundle(&contract_oig(&oig, x)?, fmt(Format::Json), "contract")
            }
        },
        Command::Restrict { to, input } => match load(input)? {
            Input::System(s) => {
                let sys = s.to_system()?;
                let w = parse_label_list(sys.ground(), to)?;
                emit_system(&sys.restrict(w)?, fmt(Format::Json), "restrict")
            }
            Input::Bundle(_) => {
                let oig = load_oig(input)?;
                let w = parse_label_list(oig.system().ground(), to)?;
                let r = restrict_oig(&oig, w)?;
                let mut doc = BundleDoc::from_parts(&r.system, &r.covectors);
                doc.restriction_hypothesis = Some(r.hypothesis_holds);
                let text = match fmt(Format::Json) {
                    Format::Json => json(&doc)?,
                    Format::Text => {
                        let mut s = bundle_text(&r.oig);
                        if !r.hypothesis_holds {
                            s.push_str("note: some member does not restrict to its plain restriction\n");
                        }
                        s
                    }
                    f => return Err(unsupported(f, "restrict")),
                };
                Ok(Outcome::ok(text))
            }
        },
        Command::Topes { base, input } => topes(&load_oig(input)?, base.as_deref(), fmt(Format::Text)),
        Command::Rco { base, input } => rco(&load_oig(input)?, base.as_deref(), fmt(Format::Text)),
        Command::Sphere { facets, input } => sphere(&load_oig(input)?, *facets, fmt(Format::Text)),
        Command::Flags { flats, input } => flags(&load_oig(input)?, flats, fmt(Format::Text)),
    }
}

fn bundle_text(oig: &OrientedSystem) -> String {
    let sys = oig.system();
    format!(
        "ground: {}\nfeasible sets: {}\nflats: {}\nrank: {}\ncovectors: {}\n{}",
        sys.ground().labels().join(","),
        sys.feasible().len(),
        oig.lattice().len(),
        oig.rank(),
        oig.len(),
        oig.sign_strings().iter().map(|s| format!("  {s}\n")).collect::<String>()
    )
}

fn emit_bundle(oig: &OrientedSystem, format: Format, command: &str) -> CliResult<Outcome> {
    let text = match format {
        Format::Json => json(&BundleDoc::from_oig(oig))?,
        Format::Text => bundle_text(oig),
        f => return Err(unsupported(f, command)),
    };
    Ok(Outcome { text, passed: oig.passed() })
}

fn emit_system(sys: &SetSystem, format: Format, command: &str) -> CliResult<Outcome> {
    let text = match format {
        Format::Json => json(&SetSystemDoc::from_system(sys))?,
        Format::Text => sys.feasible().iter().map(|&s| format!("{}\n", sys.format_set(s))).collect(),
        f => return Err(unsupported(f, command)),
    };
    Ok(Outcome::ok(text))
}

fn base_tope(oig: &OrientedSystem, base: Option<&str>) -> CliResult<oig_core::covec::Covector> {
    let topes = oig.topes();
    match base {
        None => topes.first().copied().ok_or_else(|| usage("no topes")),
        Some(s) => {
            let c = oig.covector(s)?;
            if !topes.contains(&c) {
                return Err(usage(format!("{s} is not a tope")));
            }
            Ok(c)
        }
    }
}

#[derive(Serialize)]
struct TopesDoc {
    base: String,
    topes: Vec<String>,
    edges: Vec<[String; 2]>,
    /// Cover pairs `[lower, upper]` of the tope poset at the base.
    poset_covers: Vec<[String; 2]>,
    linear_extension: Vec<String>,
}

fn topes(oig: &OrientedSystem, base: Option<&str>, format: Format) -> CliResult<Outcome> {
    let g = tope_graph(oig)?;
    let base = base_tope(oig, base)?;
    let tp = tope_poset(oig, &base)?;
    let name = |i: usize| g.topes[i].to_string();
    let covers: Vec<[String; 2]> = (0..tp.topes.len())
        .flat_map(|a| tp.poset.upper_covers(a).iter().map(move |&b| (a, b)))
        .map(|(a, b)| [tp.topes[a].to_string(), tp.topes[b].to_string()])
        .collect();
    let doc = TopesDoc {
        base: base.to_string(),
        topes: g.topes.iter().map(|t| t.to_string()).collect(),
        edges: g.edges.iter().map(|&(a, b)| [name(a), name(b)]).collect(),
        poset_covers: covers,
        linear_extension: tp.default_extension().iter().map(|t| t.to_string()).collect(),
    };
    let text = match format {
        Format::Json => json(&doc)?,
        Format::Dot => g.to_dot(),
        Format::Text => {
            let mut s = format!("topes: {}\n", doc.topes.join(" "));
            for [a, b] in &doc.edges {
                s.push_str(&format!("edge {a} -- {b}\n"));
            }
            s.push_str(&format!("base {}\n", doc.base));
            for [a, b] in &doc.poset_covers {
                s.push_str(&format!("cover {a} < {b}\n"));
            }
            s.push_str(&format!("extension: {}\n", doc.linear_extension.join(" ")));
            s
        }
    };
    Ok(Outcome::ok(text))
}

#[derive(Serialize)]
struct RcoTreeDoc {
    element: String,
    children: Vec<RcoTreeDoc>,
}

impl RcoTreeDoc {
    fn new(p: &FinitePoset, n: &RcoNode) -> Self {
        RcoTreeDoc { element: p.label(n.element).to_string(), children: n.children.iter().map(|c| Self::new(p, c)).collect() }
    }

    fn write_text(&self, depth: usize, out: &mut String) {
        out.push_str(&format!("{}{}\n", "  ".repeat(depth), self.element));
        for c in &self.children {
            c.write_text(depth + 1, out);
        }
    }
}

#[derive(Serialize)]
struct RcoDoc {
    base: String,
    verified: bool,
    nodes: usize,
    tree: RcoTreeDoc,
}

fn rco(oig: &OrientedSystem, base: Option<&str>, format: Format) -> CliResult<Outcome> {
    let aug = augment(oig)?;
    let base = base_tope(oig, base)?;
    let root = recursive_coatom_ordering(oig, &aug, &base, None)?;
    let verified = oig_core::topo::verify_rco(&aug.poset, &root)?.is_none();
    let doc = RcoDoc { base: base.to_string(), verified, nodes: root.size(), tree: RcoTreeDoc::new(&aug.poset, &root) };
    let text = match format {
        Format::Json => json(&doc)?,
        Format::Text => {
            let mut s = format!("base {}\nverified: {}\nnodes: {}\n", doc.base, doc.verified, doc.nodes);
            doc.tree.write_text(0, &mut s);
            s
        }
        f => return Err(unsupported(f, "rco")),
    };
    Ok(Outcome { text, passed: verified })
}

#[derive(Serialize)]
struct SphereDoc {
    thin: bool,
    eulerian: bool,
    cell_counts: Vec<usize>,
    sphere_dimension: usize,
    is_sphere: bool,
    homology: HomologyReport,
}

fn sphere(oig: &OrientedSystem, facets: bool, format: Format) -> CliResult<Outcome> {
    let aug = augment(oig)?;
    if format == Format::Dot {
        return Ok(Outcome::ok(aug.poset.to_dot("augmented")));
    }
    let complex = order_complex(&aug.poset)?;
    if facets {
        return match format {
            Format::Json => Ok(Outcome::ok(json(&complex)?)),
            _ => Err(usage("--facets requires --format json")),
        };
    }
    let dim = aug.rank().saturating_sub(2);
    let homology = homology_evidence(&complex)?;
    let doc = SphereDoc {
        thin: aug.poset.is_thin()?,
        eulerian: aug.eulerian_violation().is_none(),
        cell_counts: aug.cell_counts(),
        sphere_dimension: dim,
        is_sphere: homology.is_sphere(dim),
        homology,
    };
    let passed = doc.thin && doc.is_sphere;
    let text = match format {
        Format::Json => json(&doc)?,
        _ => {
            let nums = |v: &[usize]| v.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(" ");
            let torsion: Vec<String> = doc
                .homology
                .torsion
                .iter()
                .enumerate()
                .filter(|(_, t)| !t.is_empty())
                .map(|(k, t)| format!("degree {k}: {}", t.join(" ")))
                .collect();
            format!(
                "thin: {}\neulerian: {}\ncells by rank: {}\nf-vector: {}\neuler characteristic: {}\nreduced betti: {}\ntorsion: {}\nsphere S^{}: {}\n",
                doc.thin,
                doc.eulerian,
                nums(&doc.cell_counts),
                nums(&doc.homology.f_vector),
                doc.homology.euler_characteristic,
                nums(&doc.homology.reduced_betti),
                if torsion.is_empty() { "none".into() } else { torsion.join("; ") },
                dim,
                doc.is_sphere
            )
        }
    };
    Ok(Outcome { text, passed })
}

#[derive(Serialize)]
struct FlagRowDoc {
    /// Flats of the chain from the top down, each named by its `ξ`.
    chain: Vec<Vec<String>>,
    observed: u64,
    predicted: u64,
    agrees: bool,
}

fn flags(oig: &OrientedSystem, named: &[String], format: Format) -> CliResult<Outcome> {
    let lat = oig.lattice();
    let chains: Vec<Vec<FlatId>> = if named.is_empty() {
        descending_chains(lat)
    } else {
        let mut chain = named
            .iter()
            .map(|s| Ok(lat.mu_map(parse_label_list(lat.system().ground(), s)?)?))
            .collect::<CliResult<Vec<FlatId>>>()?;
        if chain.last() != Some(&lat.bottom()) {
            chain.push(lat.bottom());
        }
        vec![chain]
    };
    let mut rows = Vec::new();
    for c in &chains {
        let f = flag_count(oig, c)?;
        rows.push(FlagRowDoc {
            chain: c.iter().map(|&a| lat.system().ground().labels_of(lat.xi(a))).collect(),
            observed: f.observed,
            predicted: f.predicted,
            agrees: f.agrees(),
        });
    }
    let passed = rows.iter().all(|r| r.agrees);
    let text = match format {
        Format::Json => json(&rows)?,
        Format::Text => {
            let mut s = String::from("chain\tobserved\tpredicted\n");
            for r in &rows {
                let chain: Vec<String> = r.chain.iter().map(|x| format!("{{{}}}", x.join(","))).collect();
                s.push_str(&format!("{}\t{}\t{}{}\n", chain.join(" > "), r.observed, r.predicted, if r.agrees { "" } else { "\tMISMATCH" }));
            }
            s
        }
        f => return Err(unsupported(f, "flags")),
    };
    Ok(Outcome { text, passed })
}
