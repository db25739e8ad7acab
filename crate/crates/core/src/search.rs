//! Counterexample searches over small set functions.
//!
//! Candidate tables are screened with plain integer arithmetic; every hit is
//! then re-derived through the exact library routines, and a disagreement is
//! reported as an invariant breach.

use std::fmt;
use std::str::FromStr;

use crate::choicefn::{Axiom, ChoiceFunction};
use crate::enumerate;
use crate::error::{Error, Result};
use crate::ground::{GroundSet, Subset};
use crate::random::Rng;
use crate::supermod::{self, integer, SetFunction};

/// Exhaustive search is used when the space has at most this many tables.
pub const MAX_EXHAUSTIVE: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    /// Submodular `u` whose induced choice is not substitutable.
    SubmodularNotSubstitutable,
    /// Synthesized supermodular `u` whose value order is not a supermodular order.
    SupermodularOrderViolation,
    /// Conjunction of literals over integer tables.
    Custom(Predicate),
}

impl Pattern {
    pub fn name(&self) -> &'static str {
        match self {
            Pattern::SubmodularNotSubstitutable => "submodular-not-substitutable",
            Pattern::SupermodularOrderViolation => "supermodular-order-violation",
            Pattern::Custom(_) => "custom-predicate",
        }
    }

    /// Parses a pattern name; `custom-predicate` needs the predicate text.
    pub fn parse(name: &str, predicate: Option<&str>) -> Result<Pattern> {
        match name {
            "submodular-not-substitutable" => Ok(Pattern::SubmodularNotSubstitutable),
            "supermodular-order-violation" => Ok(Pattern::SupermodularOrderViolation),
            "custom-predicate" => {
                let text = predicate.ok_or_else(|| Error::doc("predicate", "custom-predicate needs --predicate"))?;
                Ok(Pattern::Custom(text.parse()?))
            }
            other => Err(Error::doc("pattern", format!("unknown pattern `{other}`"))),
        }
    }
}

/// A property a table or its induced choice may have.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Term {
    Supermodular,
    Submodular,
    Modular,
    Monotone,
    /// Every menu has a least maximizer.
    Induces,
    /// An axiom of the induced choice; the literal fails, negated or not,
    /// when nothing is induced.
    Choice(Axiom),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Literal {
    pub term: Term,
    pub negated: bool,
}

/// Comma-separated literals such as `u.submodular,!f.substitutable`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Predicate(pub Vec<Literal>);

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lits = Vec::new();
        for raw in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (negated, body) = match raw.strip_prefix('!') {
                Some(rest) => (true, rest),
                None => (false, raw),
            };
            let term = match body {
                "u.supermodular" => Term::Supermodular,
                "u.submodular" => Term::Submodular,
                "u.modular" => Term::Modular,
                "u.monotone" => Term::Monotone,
                "f.defined" => Term::Induces,
                _ => match body.strip_prefix("f.").and_then(Axiom::parse) {
                    Some(a) => Term::Choice(a),
                    None => return Err(Error::doc("predicate", format!("unknown literal `{raw}`"))),
                },
            };
            lits.push(Literal { term, negated });
        }
        if lits.is_empty() {
            return Err(Error::doc("predicate", "empty predicate"));
        }
        Ok(Predicate(lits))
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|l| {
                let body = match l.term {
                    Term::Supermodular => "u.supermodular".to_string(),
                    Term::Submodular => "u.submodular".to_string(),
                    Term::Modular => "u.modular".to_string(),
                    Term::Monotone => "u.monotone".to_string(),
                    Term::Induces => "f.defined".to_string(),
                    Term::Choice(a) => format!("f.{}", a.name()),
                };
                if l.negated { format!("!{body}") } else { body }
            })
            .collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub n: usize,
    /// Values range over `lo..=hi`; `u(∅) = 0` throughout.
    pub lo: i64,
    pub hi: i64,
    pub seed: u64,
    /// Draws used when the space is too large to exhaust.
    pub samples: u64,
}

impl SearchConfig {
    pub fn new(n: usize) -> Self {
        SearchConfig {
            n,
            lo: 0,
            hi: 4,
            seed: crate::random::DEFAULT_SEED,
            samples: 100_000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Finding {
    pub u: SetFunction,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub pattern: String,
    pub n: usize,
    pub seed: u64,
    pub exhaustive: bool,
    pub examined: u64,
    pub findings: Vec<Finding>,
}

/// Integer screen of one table: modularity flags, monotonicity and the
/// induced choice when every menu has a least maximizer.
struct Screen {
    supermodular: bool,
    submodular: bool,
    monotone: bool,
    induced: Option<Vec<u32>>,
}

fn screen(v: &[i64]) -> Screen {
    let size = v.len() as u32;
    let mut supermodular = true;
    let mut submodular = true;
    for a in 0..size {
        for b in a + 1..size {
            let lhs = v[a as usize] + v[b as usize];
            let rhs = v[(a & b) as usize] + v[(a | b) as usize];
            supermodular &= lhs <= rhs;
            submodular &= lhs >= rhs;
        }
    }
    let monotone = (0..size).all(|a| (0..size.trailing_zeros()).all(|i| v[a as usize] <= v[(a | 1 << i) as usize]));
    let mut induced = Some(Vec::with_capacity(v.len()));
    for menu in 0..size {
        let mut best = i64::MIN;
        let mut meet = menu;
        let mut sub = menu;
        loop {
            let val = v[sub as usize];
            if val > best {
                best = val;
                meet = sub;
            } else if val == best {
                meet &= sub;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & menu;
        }
        if v[meet as usize] != best {
            induced = None;
            break;
        }
        if let Some(t) = induced.as_mut() {
            t.push(meet);
        }
    }
    Screen {
        supermodular,
        submodular,
        monotone,
        induced,
    }
}

fn heredity_holds(t: &[u32]) -> bool {
    let size = t.len() as u32;
    (0..size).all(|b| {
        let mut a = b;
        loop {
            if t[b as usize] & a & !t[a as usize] != 0 {
                return false;
            }
            if a == 0 {
                return true;
            }
            a = (a - 1) & b;
        }
    })
}

/// Calls `visit` with integer tables (`u(∅) = 0`), exhaustively or by sampling.
fn for_each_table(cfg: &SearchConfig, mut visit: impl FnMut(&[i64]) -> Result<()>) -> Result<(bool, u64)> {
    let size = 1usize << cfg.n;
    let width = (cfg.hi - cfg.lo + 1) as u64;
    if cfg.hi < cfg.lo {
        return Err(Error::doc("range", "empty value range"));
    }
    let total = (1..size).try_fold(1u64, |acc, _| acc.checked_mul(width));
    let mut v = vec![0i64; size];
    match total {
        Some(total) if total <= MAX_EXHAUSTIVE => {
            for slot in v.iter_mut().skip(1) {
                *slot = cfg.lo;
            }
            for _ in 0..total {
                visit(&v)?;
                for slot in v.iter_mut().skip(1) {
                    if *slot < cfg.hi {
                        *slot += 1;
                        break;
                    }
                    *slot = cfg.lo;
                }
            }
            Ok((true, total))
        }
        _ => {
            let mut rng = Rng::seeded(cfg.seed);
            for _ in 0..cfg.samples {
                for slot in v.iter_mut().skip(1) {
                    *slot = rng.int(cfg.lo, cfg.hi);
                }
                visit(&v)?;
            }
            Ok((false, cfg.samples))
        }
    }
}

fn to_setfn(g: &GroundSet, v: &[i64]) -> Result<SetFunction> {
    SetFunction::from_integers(g.clone(), v)
}

fn breach(what: &str, u: &SetFunction) -> Error {
    Error::InvariantBreach(format!("integer screen and exact check disagree on {what} for {u:?}"))
}

fn literal_holds(lit: &Literal, s: &Screen, report: Option<&crate::AxiomReport>) -> bool {
    let value = match lit.term {
        Term::Supermodular => s.supermodular,
        Term::Submodular => s.submodular,
        Term::Modular => s.supermodular && s.submodular,
        Term::Monotone => s.monotone,
        Term::Induces => s.induced.is_some(),
        Term::Choice(a) => match report {
            Some(r) => r.holds(a),
            None => return false,
        },
    };
    value != lit.negated
}

pub fn search(pattern: &Pattern, cfg: &SearchConfig) -> Result<SearchOutcome> {
    let g = GroundSet::letters(cfg.n);
    g.require_tables()?;
    let mut findings = Vec::new();
    let (exhaustive, examined) = match pattern {
        Pattern::SubmodularNotSubstitutable => for_each_table(cfg, |v| {
            let s = screen(v);
            let Some(t) = s.induced.as_ref() else { return Ok(()) };
            if !s.submodular || heredity_holds(t) {
                return Ok(());
            }
            let u = to_setfn(&g, v)?;
            if !supermod::classify(&u).is_submodular() {
                return Err(breach("submodularity", &u));
            }
            let f = supermod::induce_cf(&u).map_err(|_| breach("the induced choice", &u))?;
            let r = f.analyze();
            let Some(w) = r.witness(Axiom::SubstitutableHeredity) else {
                return Err(breach("heredity", &u));
            };
            let detail = w.describe(&g);
            findings.push(Finding { u, detail });
            Ok(())
        })?,
        Pattern::Custom(pred) => for_each_table(cfg, |v| {
            let s = screen(v);
            let cf = match &s.induced {
                Some(t) => Some(ChoiceFunction::new(g.clone(), t.iter().map(|&m| Subset::from_bits(m)).collect())?),
                None => None,
            };
            let report = cf.as_ref().map(ChoiceFunction::analyze);
            if !pred.0.iter().all(|l| literal_holds(l, &s, report.as_ref())) {
                return Ok(());
            }
            let u = to_setfn(&g, v)?;
            let class = supermod::classify(&u);
            if class.is_supermodular() != s.supermodular || class.is_submodular() != s.submodular {
                return Err(breach("modularity", &u));
            }
            if supermod::induce_cf(&u).ok() != cf {
                return Err(breach("the induced choice", &u));
            }
            findings.push(Finding {
                u,
                detail: format!("satisfies {pred}"),
            });
            Ok(())
        })?,
        Pattern::SupermodularOrderViolation => {
            let mut check = |f: &ChoiceFunction| -> Result<()> {
                let u = supermod::synthesize(f)?;
                let w = supermod::order_from_setfn(&u)?;
                if let Some((a, b)) = supermod::is_supermodular_order(&w).witness {
                    findings.push(Finding {
                        u,
                        detail: format!("order fails at A = {}, B = {}", g.render(a), g.render(b)),
                    });
                }
                Ok(())
            };
            if cfg.n <= enumerate::MAX_N_PRETOPOLOGIES.min(3) {
                let fs = enumerate::complementary_cfs(&g)?;
                for f in &fs {
                    check(f)?;
                }
                (true, fs.len() as u64)
            } else {
                let mut rng = Rng::seeded(cfg.seed);
                let draws = cfg.samples.min(10_000);
                for _ in 0..draws {
                    let f = rng.complementary_cf(&g, 2 * cfg.n);
                    check(&f)?;
                }
                (false, draws)
            }
        }
    };
    Ok(SearchOutcome {
        pattern: pattern.name().to_string(),
        n: cfg.n,
        seed: cfg.seed,
        exhaustive,
        examined,
        findings,
    })
}

/// `∅:0 a:3 b:2 ...` in bitmask order.
pub fn compact_table(u: &SetFunction) -> String {
    let g = u.ground();
    g.subsets()
        .map(|a| {
            let name = if a.is_empty() { "∅".to_string() } else { g.sorted_names(a).concat() };
            format!("{name}:{}", u.value(a))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Whether `u` has the same values as an integer table.
pub fn matches_integers(u: &SetFunction, v: &[i64]) -> bool {
    u.values().len() == v.len() && u.values().iter().zip(v).all(|(a, &b)| *a == integer(b))
}
