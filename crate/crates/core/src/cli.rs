//! The `ccf` command line: verify, convert, enumerate, search, fixtures.
//!
//! Exit codes: 0 pass, 1 semantic failure (with witness), 2 input error,
//! 3 internal invariant breach.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::choicefn::Axiom;
use crate::enumerate;
use crate::error::Error;
use crate::fixtures;
use crate::ground::{GroundSet, DEFAULT_MAX_N};
use crate::io::{self, Document, Stamp};
use crate::lattice::FiniteLattice;
use crate::latticecf::{self, LatticeCF};
use crate::pretop::{self, NeighborhoodSystem};
use crate::random::DEFAULT_SEED;
use crate::search::{self, Pattern, SearchConfig};
use crate::supermod::{self, Rational};
use crate::transport;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BREACH: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "ccf", version, about = "Complementary choice functions: verify, convert, enumerate, search")]
pub struct Cli {
    /// Largest ground set for which 2^n tables are built.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,
    /// Perturbation size for the supermodular route, e.g. `1/4`.
    #[arg(long, global = true)]
    pub epsilon: Option<String>,
    /// Seed for randomized work.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Write the main output here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the properties of a document (`-` reads standard input).
    Verify {
        input: String,
        /// Comma-separated properties that must hold; `!name` must fail.
        #[arg(long, value_delimiter = ',')]
        expect: Vec<String>,
    },
    /// Convert a document along a route and re-verify the result.
    Convert {
        input: String,
        /// Target form, e.g. `pretopology`, `preorder`, `lift`, `supermodular`.
        #[arg(long)]
        to: String,
    },
    /// Count complementary choice functions on n points two ways.
    Enumerate {
        n: usize,
        /// Also list every pre-topology (n <= 4).
        #[arg(long)]
        list: bool,
    },
    /// Hunt for instances of a pattern.
    Search {
        pattern: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Literals for `custom-predicate`, e.g. `u.submodular,!f.substitutable`.
        #[arg(long)]
        predicate: Option<String>,
        #[arg(long, default_value_t = 0)]
        lo: i64,
        #[arg(long, default_value_t = 4)]
        hi: i64,
        /// Random draws when the space is too large to exhaust.
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        /// Instances shown in human output.
        #[arg(long, default_value_t = 10)]
        limit: usize,
    },
    /// List built-in fixtures, or print one as a document.
    Fixtures { name: Option<String> },
}

/// Settings shared by every subcommand.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub max_n: usize,
    pub epsilon: Option<Rational>,
    pub seed: u64,
    pub output: Option<PathBuf>,
    pub format: Format,
}

impl RunConfig {
    fn from_cli(cli: &Cli) -> Result<Self, Failure> {
        if cli.max_n < 1 {
            return Err(Failure::input("--max-n must be at least 1"));
        }
        let epsilon = match &cli.epsilon {
            None => None,
            Some(text) => {
                let e = Rational::from_str(text.trim())
                    .map_err(|_| Failure::input(format!("--epsilon `{text}` is not an exact rational")))?;
                if e <= Rational::from_integer(0.into()) {
                    return Err(Failure::input("--epsilon must be positive"));
                }
                Some(e)
            }
        };
        Ok(RunConfig {
            max_n: cli.max_n,
            epsilon,
            seed: cli.seed,
            output: cli.output.clone(),
            format: cli.format,
        })
    }
}

/// A non-passing outcome with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn semantic(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_FAIL,
            message: message.into(),
        }
    }

    fn breach(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_BREACH,
            message: message.into(),
        }
    }
}

/// Errors raised while loading are input errors; the rest are route failures.
fn semantic(e: Error) -> Failure {
    match e {
        Error::InvariantBreach(m) => Failure::breach(m),
        other => Failure::semantic(other.to_string()),
    }
}

/// Output of a run: main text, diagnostics, and exit code.
pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses arguments and runs; `stdin` feeds inputs named `-`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Run
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let text = e.render().to_string();
            return if code == EXIT_PASS {
                Run { stdout: text, stderr: String::new(), code }
            } else {
                Run { stdout: String::new(), stderr: text, code }
            };
        }
    };
    let mut out = String::new();
    let result = RunConfig::from_cli(&cli).and_then(|cfg| dispatch(&cli.command, &cfg, stdin, &mut out).map(|c| (c, cfg)));
    match result {
        Ok((code, cfg)) => match &cfg.output {
            Some(path) => match std::fs::write(path, &out) {
                Ok(()) => Run { stdout: String::new(), stderr: String::new(), code },
                Err(e) => Run {
                    stdout: String::new(),
                    stderr: format!("error: cannot write {}: {e}\n", path.display()),
                    code: EXIT_INPUT,
                },
            },
            None => Run { stdout: out, stderr: String::new(), code },
        },
        Err(f) => Run {
            stdout: out,
            stderr: format!("error: {}\n", f.message),
            code: f.code,
        },
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let r = run(std::env::args_os(), &mut std::io::stdin());
    // A closed pipe downstream is not an error of ours.
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(r.stdout.as_bytes()).and_then(|()| stdout.flush());
    let _ = std::io::stderr().write_all(r.stderr.as_bytes());
    r.code
}

fn dispatch(cmd: &Command, cfg: &RunConfig, stdin: &mut dyn Read, out: &mut String) -> Result<i32, Failure> {
    match cmd {
        Command::Verify { input, expect } => {
            let (doc, _) = load(input, cfg, stdin)?;
            verify(&doc, expect, cfg, out)
        }
        Command::Convert { input, to } => {
            let (doc, _) = load(input, cfg, stdin)?;
            convert(&doc, to, cfg, out)
        }
        Command::Enumerate { n, list } => enumerate_cmd(*n, *list, cfg, out),
        Command::Search {
            pattern,
            n,
            predicate,
            lo,
            hi,
            samples,
            limit,
        } => {
            let pattern = Pattern::parse(pattern, predicate.as_deref()).map_err(|e| Failure::input(e.to_string()))?;
            if *n > cfg.max_n {
                return Err(Failure::input(format!("n = {n} exceeds --max-n {}", cfg.max_n)));
            }
            let sc = SearchConfig {
                n: *n,
                lo: *lo,
                hi: *hi,
                seed: cfg.seed,
                samples: *samples,
            };
            search_cmd(&pattern, &sc, *limit, cfg, out)
        }
        Command::Fixtures { name } => fixtures_cmd(name.as_deref(), cfg, out),
    }
}

fn load(input: &str, cfg: &RunConfig, stdin: &mut dyn Read) -> Result<(Document, Option<Stamp>), Failure> {
    let text = if input == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| Failure::input(format!("cannot read standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(input).map_err(|e| Failure::input(format!("cannot read {input}: {e}")))?
    };
    io::parse_with(&text, cfg.max_n).map_err(|e| Failure::input(format!("{input}: {e}")))
}

fn emit_json(out: &mut String, v: &Value) {
    out.push_str(&serde_json::to_string_pretty(v).expect("json values serialize"));
    out.push('\n');
}

/// Checked properties of a document: name, holds, witness when failing.
type Checks = Vec<(String, bool, Option<String>)>;

fn checks_of(doc: &Document) -> Checks {
    let modularity = |sup: bool, sub: bool, sw: Option<String>, bw: Option<String>| -> Checks {
        vec![
            ("supermodular".into(), sup, sw.clone()),
            ("submodular".into(), sub, bw.clone()),
            ("modular".into(), sup && sub, sw.or(bw)),
        ]
    };
    match doc {
        Document::ChoiceFunction(f) => {
            let r = f.analyze();
            let g = f.ground();
            Axiom::ALL
                .iter()
                .map(|&a| (a.name().to_string(), r.holds(a), r.witness(a).map(|w| w.describe(g))))
                .collect()
        }
        Document::SetFunction(u) => {
            let g = u.ground();
            let c = supermod::classify(u);
            let pair = |p: Option<(crate::Subset, crate::Subset)>, op: &str| {
                p.map(|(a, b)| {
                    format!(
                        "u({0}) + u({1}) {op} u({0} ∩ {1}) + u({0} ∪ {1})",
                        g.render(a),
                        g.render(b)
                    )
                })
            };
            let mut checks = modularity(
                c.is_supermodular(),
                c.is_submodular(),
                pair(c.supermodular_violation, ">"),
                pair(c.submodular_violation, "<"),
            );
            checks.push(("monotone".into(), u.is_monotone(), None));
            let induced = supermod::induce_cf(u);
            checks.push(("induces".into(), induced.is_ok(), induced.as_ref().err().map(Error::to_string)));
            if let Ok(f) = induced {
                let r = f.analyze();
                for a in Axiom::ALL {
                    checks.push((format!("f.{}", a.name()), r.holds(a), r.witness(a).map(|w| w.describe(g))));
                }
            }
            checks
        }
        Document::WeakOrder(w) => {
            let c = supermod::is_supermodular_order(w);
            let g = w.ground();
            vec![(
                "supermodular-order".into(),
                c.holds,
                c.witness.map(|(a, b)| format!("pair A = {}, B = {}", g.render(a), g.render(b))),
            )]
        }
        Document::Family(fam) => vec![
            ("union-closed".into(), fam.is_union_closed(), None),
            ("intersection-closed".into(), fam.is_intersection_closed(), None),
            ("antichain".into(), fam.is_antichain(), None),
        ],
        Document::LatticeCf(f) => {
            let r = latticecf::analyze_lattice(f);
            let l = f.lattice();
            let cw = r.consistency_witness.map(|(x, y)| format!("x = {}, y = {}", l.name(x), l.name(y)));
            let mw = r.monotonicity_witness.map(|(x, y)| format!("x = {}, y = {}", l.name(x), l.name(y)));
            vec![
                ("consistent".into(), r.consistent, cw.clone()),
                ("monotone".into(), r.monotone, mw.clone()),
                ("complementary".into(), r.complementary, cw.or(mw)),
            ]
        }
        Document::LatticeFunction(u) => {
            let c = latticecf::classify_lattice(u);
            let l = u.lattice();
            let pair = |p: Option<(usize, usize)>| p.map(|(x, y)| format!("x = {}, y = {}", l.name(x), l.name(y)));
            let mut checks = modularity(
                c.is_supermodular(),
                c.is_submodular(),
                pair(c.supermodular_violation),
                pair(c.submodular_violation),
            );
            checks.push(("monotone".into(), latticecf::is_monotone(u), None));
            checks
        }
        Document::Lift(lift) => vec![
            ("completely-complementary".into(), lift.lifted().analyze().completely_complementary, None),
            ("transports".into(), true, None),
        ],
        Document::Preorder(_) | Document::Lattice(_) | Document::NeighborhoodSystem(_) => {
            vec![("valid".into(), true, None)]
        }
    }
}

fn verify(doc: &Document, expect: &[String], cfg: &RunConfig, out: &mut String) -> Result<i32, Failure> {
    let checks = checks_of(doc);
    let find = |name: &str| {
        let canonical = Axiom::parse(name).map(Axiom::name).unwrap_or(name);
        checks.iter().find(|(n, _, _)| n == canonical || n == name)
    };
    let mut failed = Vec::new();
    for e in expect {
        let (want, name) = match e.strip_prefix('!') {
            Some(rest) => (false, rest),
            None => (true, e.as_str()),
        };
        let Some((_, holds, witness)) = find(name) else {
            let known: Vec<&str> = checks.iter().map(|c| c.0.as_str()).collect();
            return Err(Failure::input(format!(
                "`{name}` is not a property of a {} document (known: {})",
                doc.kind(),
                known.join(", ")
            )));
        };
        if *holds != want {
            failed.push((e.clone(), witness.clone()));
        }
    }
    let pass = failed.is_empty();
    match cfg.format {
        Format::Json => {
            let props: serde_json::Map<String, Value> =
                checks.iter().map(|(n, h, _)| (n.clone(), Value::Bool(*h))).collect();
            let witnesses: serde_json::Map<String, Value> = checks
                .iter()
                .filter_map(|(n, h, w)| (!h).then(|| w.clone().map(|w| (n.clone(), Value::String(w))))?)
                .collect();
            emit_json(
                out,
                &json!({"kind": doc.kind(), "properties": props, "witnesses": witnesses,
                        "expect": expect, "pass": pass}),
            );
        }
        Format::Human => {
            let _ = writeln!(out, "{} document", doc.kind());
            for (n, h, w) in &checks {
                let _ = write!(out, "  {:<26} {}", n, if *h { "yes" } else { "no" });
                if let (false, Some(w)) = (h, w) {
                    let _ = write!(out, "  ({w})");
                }
                out.push('\n');
            }
            for (e, w) in &failed {
                let _ = writeln!(out, "expectation `{e}` failed{}", w.as_ref().map(|w| format!(": {w}")).unwrap_or_default());
            }
            if !expect.is_empty() {
                let _ = writeln!(out, "{}", if pass { "PASS" } else { "FAIL" });
            }
        }
    }
    Ok(if pass { EXIT_PASS } else { EXIT_FAIL })
}

/// Converted document plus the check that re-derives the input from it.
struct Converted {
    doc: Document,
    route: &'static str,
    verified: bool,
}

fn converted(doc: Document, route: &'static str, verified: bool) -> Converted {
    Converted { doc, route, verified }
}

fn routes_for(kind: &str) -> &'static [&'static str] {
    match kind {
        "choice_function" => &[
            "pretopology",
            "decomposition",
            "neighborhoods",
            "preorder",
            "lift",
            "economical-lift",
            "supermodular",
            "lattice-cf",
        ],
        "family" | "preorder" | "neighborhood_system" | "weak_order" | "lift" => &["choice-function"],
        "set_function" => &["choice-function", "weak-order"],
        "lattice_cf" => &["lattice-function", "choice-function"],
        "lattice_function" => &["lattice-cf"],
        _ => &[],
    }
}

fn convert_doc(doc: &Document, to: &str, cfg: &RunConfig) -> Result<Converted, Error> {
    Ok(match (doc, to) {
        (Document::ChoiceFunction(f), "pretopology") => {
            f.require_complementary()?;
            let fam = pretop::open_sets(f);
            let ok = pretop::interior_cf(&fam)? == *f;
            converted(Document::Family(fam), "choice_function->pretopology", ok)
        }
        (Document::ChoiceFunction(f), "decomposition") => {
            let fam = pretop::decompose(f)?;
            let ok = pretop::recompose(&fam)? == *f;
            converted(Document::Family(fam), "choice_function->decomposition", ok)
        }
        (Document::ChoiceFunction(f), "neighborhoods") => {
            f.require_complementary()?;
            let m = NeighborhoodSystem::of(f)?;
            let ok = pretop::cf_from_neighborhood_system(&m)? == *f;
            converted(Document::NeighborhoodSystem(m), "choice_function->neighborhoods", ok)
        }
        (Document::ChoiceFunction(f), "preorder") => {
            let p = pretop::preorder_from_cf(f)?;
            let ok = crate::choicefn::ideal_cf(f.ground(), &p)? == *f;
            converted(Document::Preorder(p), "choice_function->preorder", ok)
        }
        (Document::ChoiceFunction(f), "lift" | "economical-lift") => {
            let lift = if to == "lift" { transport::theorem2_lift(f)? } else { transport::economical_lift(f)? };
            let ok = transport::direct_image(lift.phi(), lift.lifted())? == *f
                && lift.lifted().analyze().completely_complementary;
            let route = if to == "lift" { "choice_function->lift" } else { "choice_function->economical-lift" };
            converted(Document::Lift(Box::new(lift)), route, ok)
        }
        (Document::ChoiceFunction(f), "supermodular") => {
            let u = supermod::synthesize(f)?;
            let u = match &cfg.epsilon {
                Some(e) => supermod::perturb(&u, e)?,
                None => u,
            };
            let mut ok = supermod::induce_cf(&u)? == *f && supermod::classify(&u).is_supermodular();
            if cfg.epsilon.is_some() {
                ok &= f.ground().subsets().all(|a| {
                    let am = supermod::argmax_family(&u, a);
                    am.len() == 1 && am.contains(f.choose(a))
                });
            }
            converted(Document::SetFunction(u), "choice_function->supermodular", ok)
        }
        (Document::ChoiceFunction(f), "lattice-cf") => {
            let lf = LatticeCF::from_powerset(f)?;
            let ok = lf.to_powerset(f.ground())? == *f;
            converted(Document::LatticeCf(lf), "choice_function->lattice-cf", ok)
        }
        (Document::Family(fam), "choice-function") => {
            let f = pretop::interior_cf(fam)?;
            let ok = pretop::open_sets(&f) == fam.union_closure()?;
            converted(Document::ChoiceFunction(f), "family->choice_function", ok)
        }
        (Document::Preorder(p), "choice-function") => {
            let f = crate::choicefn::ideal_cf(p.carrier(), p)?;
            let ok = pretop::preorder_from_cf(&f)? == *p;
            converted(Document::ChoiceFunction(f), "preorder->choice_function", ok)
        }
        (Document::NeighborhoodSystem(m), "choice-function") => {
            let f = pretop::cf_from_neighborhood_system(m)?;
            let ok = NeighborhoodSystem::of(&f)? == *m;
            converted(Document::ChoiceFunction(f), "neighborhoods->choice_function", ok)
        }
        (Document::SetFunction(u), "choice-function") => {
            let f = supermod::induce_cf(u)?;
            // each choice is a maximizer contained in every maximizer
            let ok = u.ground().subsets().all(|a| {
                let am = supermod::argmax_family(u, a);
                am.contains(f.choose(a)) && am.iter().all(|b| f.choose(a).is_subset_of(b))
            });
            converted(Document::ChoiceFunction(f), "set_function->choice_function", ok)
        }
        (Document::SetFunction(u), "weak-order") => {
            let w = supermod::order_from_setfn(u)?;
            let g = u.ground();
            let ok = g
                .subsets()
                .all(|a| g.subsets().all(|b| (u.value(a) <= u.value(b)) == w.weakly_below(a, b)));
            converted(Document::WeakOrder(w), "set_function->weak_order", ok)
        }
        (Document::WeakOrder(w), "choice-function") => {
            let f = supermod::cf_from_order(w)?;
            let ok = f.analyze().complementary;
            converted(Document::ChoiceFunction(f), "weak_order->choice_function", ok)
        }
        (Document::Lift(lift), "choice-function") => {
            let f = lift.source().clone();
            let ok = transport::direct_image(lift.phi(), lift.lifted())? == f;
            converted(Document::ChoiceFunction(f), "lift->choice_function", ok)
        }
        (Document::LatticeCf(f), "lattice-function") => {
            let u = latticecf::theorem4_synthesize(f)?;
            let ok = latticecf::induce_lattice_cf(&u)? == *f;
            converted(Document::LatticeFunction(u), "lattice_cf->lattice_function", ok)
        }
        (Document::LatticeCf(f), "choice-function") => {
            let names = boolean_ground(f.lattice()).ok_or(Error::NotPowersetLattice)?;
            let cf = f.to_powerset(&names)?;
            let ok = LatticeCF::from_powerset(&cf)? == *f;
            converted(Document::ChoiceFunction(cf), "lattice_cf->choice_function", ok)
        }
        (Document::LatticeFunction(u), "lattice-cf") => {
            let f = latticecf::induce_lattice_cf(u)?;
            let l = u.lattice();
            let ok = l.elements().all(|x| {
                let am = latticecf::argmax_downset(u, x);
                am.contains(&f.apply(x)) && am.iter().all(|&b| l.leq(f.apply(x), b))
            });
            converted(Document::LatticeCf(f), "lattice_function->lattice_cf", ok)
        }
        _ => {
            return Err(Error::doc(
                "--to",
                format!(
                    "no route from {} to `{to}` (available: {})",
                    doc.kind(),
                    routes_for(doc.kind()).join(", ")
                ),
            ))
        }
    })
}

/// The ground set whose powerset lattice is `l`, read off the atoms' names.
fn boolean_ground(l: &Arc<FiniteLattice>) -> Option<GroundSet> {
    let atoms: Vec<usize> = l
        .elements()
        .filter(|&x| x != l.bottom() && l.elements().all(|y| !l.lt(y, x) || y == l.bottom()))
        .collect();
    // atoms of `2^X` sit at indices 1, 2, 4, ...
    if atoms.iter().enumerate().any(|(i, &a)| a != 1 << i) {
        return None;
    }
    let names: Vec<String> = atoms
        .iter()
        .map(|&a| l.name(a).trim_start_matches('{').trim_end_matches('}').to_string())
        .collect();
    let g = GroundSet::new(names).ok()?;
    (FiniteLattice::boolean(&g).ok()? == **l).then_some(g)
}

fn convert(doc: &Document, to: &str, cfg: &RunConfig, out: &mut String) -> Result<i32, Failure> {
    if !routes_for(doc.kind()).contains(&to) {
        return Err(Failure::input(format!(
            "no route from {} to `{to}` (available: {})",
            doc.kind(),
            routes_for(doc.kind()).join(", ")
        )));
    }
    let c = convert_doc(doc, to, cfg).map_err(semantic)?;
    if !c.verified {
        return Err(Failure::breach(format!("{} did not re-derive its input", c.route)));
    }
    // the emitted text must load back to the same document
    let stamp = Stamp {
        route: c.route.to_string(),
        verified: true,
    };
    let text = io::to_json(&c.doc, Some(&stamp));
    let again = io::parse_with(&text, cfg.max_n).map_err(|e| Failure::breach(format!("output does not reload: {e}")))?;
    if io::to_json(&again.0, again.1.as_ref()) != text {
        return Err(Failure::breach("output is not canonical"));
    }
    out.push_str(&text);
    Ok(EXIT_PASS)
}

fn enumerate_cmd(n: usize, list: bool, cfg: &RunConfig, out: &mut String) -> Result<i32, Failure> {
    if n > enumerate::MAX_N_FAMILIES {
        return Err(Failure::input(format!(
            "n = {n} is too large for enumeration (limit {})",
            enumerate::MAX_N_FAMILIES
        )));
    }
    if list && n > enumerate::MAX_N_PRETOPOLOGIES {
        return Err(Failure::input(format!("--list needs n <= {}", enumerate::MAX_N_PRETOPOLOGIES)));
    }
    let families = enumerate::count_union_closed(n).map_err(semantic)?;
    let filtered = if n <= enumerate::MAX_N_CONTRACTING {
        Some(enumerate::count_complementary_by_filter(n).map_err(semantic)?)
    } else {
        None
    };
    let agree = filtered.is_none_or(|c| c == families);
    let listing = if list {
        let g = GroundSet::letters(n);
        enumerate::pretopologies(&g)
            .map_err(semantic)?
            .iter()
            .map(|f| f.render())
            .collect()
    } else {
        Vec::new()
    };
    match cfg.format {
        Format::Json => {
            let mut v = json!({"n": n, "union_closed_families": families, "filtered_tables": filtered, "agree": agree});
            if list {
                v["pretopologies"] = json!(listing);
            }
            emit_json(out, &v);
        }
        Format::Human => {
            let _ = writeln!(out, "n = {n}");
            let _ = writeln!(out, "  union-closed families: {families}");
            match filtered {
                Some(c) => {
                    let _ = writeln!(out, "  filtered contracting tables: {c}");
                }
                None => {
                    let _ = writeln!(out, "  filtered contracting tables: skipped (n > {})", enumerate::MAX_N_CONTRACTING);
                }
            }
            for fam in &listing {
                let _ = writeln!(out, "  {fam}");
            }
            let _ = writeln!(out, "{}", if agree { "counts agree" } else { "COUNTS DISAGREE" });
        }
    }
    if agree {
        Ok(EXIT_PASS)
    } else {
        Err(Failure::breach("the two enumeration routes disagree"))
    }
}

fn search_cmd(pattern: &Pattern, sc: &SearchConfig, limit: usize, cfg: &RunConfig, out: &mut String) -> Result<i32, Failure> {
    let outcome = search::search(pattern, sc).map_err(|e| match e {
        Error::InvariantBreach(m) => Failure::breach(m),
        Error::Document { .. } | Error::TableLimit { .. } => Failure::input(e.to_string()),
        other => Failure::semantic(other.to_string()),
    })?;
    match cfg.format {
        Format::Json => {
            let findings: Vec<Value> = outcome
                .findings
                .iter()
                .map(|f| {
                    let doc: Value = serde_json::from_str(&io::to_json(&Document::SetFunction(f.u.clone()), None))
                        .expect("documents are json");
                    json!({"set_function": doc, "detail": f.detail})
                })
                .collect();
            emit_json(
                out,
                &json!({"pattern": outcome.pattern, "n": outcome.n, "seed": outcome.seed,
                        "exhaustive": outcome.exhaustive, "examined": outcome.examined,
                        "found": outcome.findings.len(), "findings": findings}),
            );
        }
        Format::Human => {
            let _ = writeln!(
                out,
                "pattern {} on n = {} ({} over {} tables, seed {})",
                outcome.pattern,
                outcome.n,
                if outcome.exhaustive { "exhaustive" } else { "sampled" },
                outcome.examined,
                outcome.seed
            );
            let _ = writeln!(out, "found {} instance(s)", outcome.findings.len());
            for f in outcome.findings.iter().take(limit) {
                let _ = writeln!(out, "  {}  [{}]", search::compact_table(&f.u), f.detail);
            }
            if outcome.findings.len() > limit {
                let _ = writeln!(out, "  ... {} more (use --format json for all)", outcome.findings.len() - limit);
            }
        }
    }
    Ok(EXIT_PASS)
}

/// Built-in documents by name, with a one-line description.
pub fn fixture_documents() -> Vec<(&'static str, &'static str, Document)> {
    let div = Arc::new(FiniteLattice::divisors(12));
    let fam: Vec<usize> = ["1", "2", "3", "6", "12"]
        .iter()
        .map(|n| div.index_of(n).expect("divisor"))
        .collect();
    vec![
        (
            "example5",
            "submodular set function on {a,b,c} with a non-substitutable induced choice",
            Document::SetFunction(fixtures::example5()),
        ),
        (
            "example5-choice",
            "the choice function induced by example5",
            Document::ChoiceFunction(supermod::induce_cf(&fixtures::example5()).expect("fixture induces")),
        ),
        (
            "fork",
            "interior of {∅,{a,b},{a,c},X}: complementary, not completely complementary",
            Document::ChoiceFunction(fixtures::fork()),
        ),
        (
            "blocks",
            "interior of {∅,{a,b},{c},X}: ideal choice of a ~ b with c apart",
            Document::ChoiceFunction(fixtures::blocks()),
        ),
        ("bundle", "packaged choice of {a,b} on {a,b,c}", Document::ChoiceFunction(fixtures::bundle())),
        ("chain-ab", "ideal choice of a <= b on {a,b,c}", Document::ChoiceFunction(fixtures::chain_ab())),
        (
            "divisors-12",
            "choice on the divisors of 12 fixing {1,2,3,6,12}",
            Document::LatticeCf(latticecf::cf_from_fix(div, &fam).expect("join-closed")),
        ),
    ]
}

fn fixtures_cmd(name: Option<&str>, cfg: &RunConfig, out: &mut String) -> Result<i32, Failure> {
    let all = fixture_documents();
    match name {
        Some(name) => {
            let (_, _, doc) = all
                .iter()
                .find(|(n, _, _)| *n == name)
                .ok_or_else(|| Failure::input(format!("no fixture named `{name}`")))?;
            out.push_str(&io::to_json(doc, None));
        }
        None => match cfg.format {
            Format::Json => {
                let v: Vec<Value> = all
                    .iter()
                    .map(|(n, d, doc)| {
                        let body: Value = serde_json::from_str(&io::to_json(doc, None)).expect("documents are json");
                        json!({"name": n, "description": d, "document": body})
                    })
                    .collect();
                emit_json(out, &Value::Array(v));
            }
            Format::Human => {
                for (n, d, doc) in &all {
                    let _ = writeln!(out, "{n:<16} {:<16} {d}", doc.kind());
                }
                if let Document::SetFunction(u) = &all[0].2 {
                    let _ = writeln!(out, "\nexample5: {}", search::compact_table(u));
                }
            }
        },
    }
    Ok(EXIT_PASS)
}
