//! JSON documents for every object kind.
//!
//! Subsets are written as alphabetically sorted name arrays and rationals as
//! strings such as `"3"` or `"-1/4"`. Output of [`to_json`] is canonical:
//! loading it and writing it again reproduces the same bytes.

use std::collections::{BTreeMap, HashSet};
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::choicefn::ChoiceFunction;
use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::ground::{GroundSet, Subset, DEFAULT_MAX_N};
use crate::lattice::FiniteLattice;
use crate::latticecf::{LatticeCF, LatticeFunction};
use crate::preorder::Preorder;
use crate::pretop::NeighborhoodSystem;
use crate::supermod::{Rational, SetFunction};
use crate::transport::{Lift, LiftKind};
use crate::weakorder::SubsetWeakOrder;

/// A loaded object of any supported kind.
#[derive(Clone, Debug)]
pub enum Document {
    Family(SetFamily),
    Preorder(Preorder),
    Lattice(FiniteLattice),
    ChoiceFunction(ChoiceFunction),
    SetFunction(SetFunction),
    WeakOrder(SubsetWeakOrder),
    NeighborhoodSystem(NeighborhoodSystem),
    Lift(Box<Lift>),
    LatticeCf(LatticeCF),
    LatticeFunction(LatticeFunction),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Family(_) => "family",
            Document::Preorder(_) => "preorder",
            Document::Lattice(_) => "lattice",
            Document::ChoiceFunction(_) => "choice_function",
            Document::SetFunction(_) => "set_function",
            Document::WeakOrder(_) => "weak_order",
            Document::NeighborhoodSystem(_) => "neighborhood_system",
            Document::Lift(_) => "lift",
            Document::LatticeCf(_) => "lattice_cf",
            Document::LatticeFunction(_) => "lattice_function",
        }
    }
}

/// Record of a conversion: the route taken and whether the original was
/// re-derived from the output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stamp {
    pub route: String,
    pub verified: bool,
}

type Names = Vec<String>;

#[derive(Serialize, Deserialize)]
struct Envelope {
    #[serde(flatten)]
    body: Raw,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    stamp: Option<Stamp>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum Raw {
    Family {
        ground: Names,
        members: Vec<Names>,
    },
    Preorder {
        carrier: Names,
        pairs: Vec<(String, String)>,
        #[serde(default, skip_serializing_if = "std::ops::Not::not")]
        closed: bool,
    },
    Lattice(RawLattice),
    ChoiceFunction {
        ground: Names,
        table: Vec<RawChoice>,
    },
    SetFunction {
        ground: Names,
        values: Vec<RawValue>,
    },
    WeakOrder {
        ground: Names,
        ranks: Vec<RawRank>,
    },
    NeighborhoodSystem {
        ground: Names,
        minimal: BTreeMap<String, Vec<Names>>,
    },
    Lift {
        lift: String,
        target: Names,
        source: Vec<RawChoice>,
        points: Names,
        phi: Vec<(String, String)>,
        order: Vec<(String, String)>,
        verified: bool,
    },
    LatticeCf {
        lattice: RawLattice,
        table: Vec<(String, String)>,
    },
    LatticeFunction {
        lattice: RawLattice,
        values: Vec<(String, String)>,
    },
}

#[derive(Serialize, Deserialize)]
struct RawLattice {
    elements: Names,
    leq: Vec<(String, String)>,
}

#[derive(Serialize, Deserialize)]
struct RawChoice {
    menu: Names,
    choice: Names,
}

#[derive(Serialize, Deserialize)]
struct RawValue {
    subset: Names,
    value: String,
}

#[derive(Serialize, Deserialize)]
struct RawRank {
    subset: Names,
    rank: i64,
}

/// Parses a document with the default table limit.
pub fn parse(text: &str) -> Result<(Document, Option<Stamp>)> {
    parse_with(text, DEFAULT_MAX_N)
}

/// Parses a document; ground sets get the given table limit.
pub fn parse_with(text: &str, max_n: usize) -> Result<(Document, Option<Stamp>)> {
    let env: Envelope = serde_json::from_str(text)?;
    Ok((load(env.body, max_n)?, env.stamp))
}

/// Canonical pretty JSON with a trailing newline.
pub fn to_json(doc: &Document, stamp: Option<&Stamp>) -> String {
    let env = Envelope {
        body: dump(doc),
        stamp: stamp.cloned(),
    };
    let mut s = serde_json::to_string_pretty(&env).expect("documents always serialize");
    s.push('\n');
    s
}

fn ground_at(names: Names, path: &str, max_n: usize) -> Result<GroundSet> {
    GroundSet::new(names)
        .map(|g| g.with_max_n(max_n))
        .map_err(|e| Error::doc(path, e.to_string()))
}

fn subset_at(g: &GroundSet, names: &[String], path: &str) -> Result<Subset> {
    let mut s = Subset::EMPTY;
    for n in names {
        let i = g.index_of(n).map_err(|e| Error::doc(path, e.to_string()))?;
        if s.contains(i) {
            return Err(Error::doc(path, format!("element `{n}` listed twice")));
        }
        s = s.with(i);
    }
    Ok(s)
}

fn tables_at(g: &GroundSet, path: &str) -> Result<()> {
    g.require_tables().map_err(|e| Error::doc(path, e.to_string()))
}

fn rational_at(text: &str, path: &str) -> Result<Rational> {
    let bad = || Error::doc(path, format!("`{text}` is not an exact rational"));
    let r = Rational::from_str(text.trim()).map_err(|_| bad())?;
    if r.denom().to_string() == "0" {
        return Err(bad());
    }
    Ok(r)
}

fn index_at(names: &[String], name: &str, path: &str) -> Result<usize> {
    names
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| Error::doc(path, format!("unknown element `{name}`")))
}

/// Reads a full powerset table of entries keyed by subset, rejecting
/// duplicates and gaps; `fill_empty` supplies a value when `∅` is absent.
fn keyed_table<T: Clone, E>(
    g: &GroundSet,
    entries: &[E],
    field: &str,
    key: impl Fn(&E) -> &Names,
    key_name: &str,
    mut value: impl FnMut(&E, Subset, &str) -> Result<T>,
    fill_empty: Option<T>,
) -> Result<Vec<T>> {
    tables_at(g, field)?;
    let mut table: Vec<Option<T>> = vec![None; g.powerset_size()];
    for (i, e) in entries.iter().enumerate() {
        let path = format!("{field}[{i}]");
        let s = subset_at(g, key(e), &format!("{path}.{key_name}"))?;
        if table[s.index()].is_some() {
            return Err(Error::doc(
                format!("{path}.{key_name}"),
                format!("duplicate entry for {}", g.render(s)),
            ));
        }
        table[s.index()] = Some(value(e, s, &path)?);
    }
    if table[0].is_none() {
        table[0] = fill_empty;
    }
    table
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| {
                Error::doc(field, format!("missing entry for {}", g.render(Subset::from_bits(i as u32))))
            })
        })
        .collect()
}

fn choice_table(g: &GroundSet, entries: &[RawChoice], field: &str) -> Result<ChoiceFunction> {
    let table = keyed_table(
        g,
        entries,
        field,
        |e| &e.menu,
        "menu",
        |e, menu, path| {
            let c = subset_at(g, &e.choice, &format!("{path}.choice"))?;
            if !c.is_subset_of(menu) {
                return Err(Error::doc(
                    format!("{path}.choice"),
                    format!("choice {} is not inside menu {}", g.render(c), g.render(menu)),
                ));
            }
            Ok(c)
        },
        None,
    )?;
    ChoiceFunction::new(g.clone(), table)
}

fn load_lattice(raw: RawLattice, path: &str) -> Result<FiniteLattice> {
    let mut pairs = Vec::with_capacity(raw.leq.len());
    for (i, (y, x)) in raw.leq.iter().enumerate() {
        let at = format!("{path}.leq[{i}]");
        pairs.push((index_at(&raw.elements, y, &at)?, index_at(&raw.elements, x, &at)?));
    }
    FiniteLattice::from_pairs(raw.elements, &pairs).map_err(|e| Error::doc(path, e.to_string()))
}

/// Entries `[x, v]` keyed by lattice element, each element exactly once.
fn lattice_entries<'a>(l: &FiniteLattice, entries: &'a [(String, String)], field: &str) -> Result<Vec<&'a str>> {
    let mut out: Vec<Option<&str>> = vec![None; l.len()];
    for (i, (x, v)) in entries.iter().enumerate() {
        let path = format!("{field}[{i}]");
        let xi = l.index_of(x).map_err(|e| Error::doc(&path, e.to_string()))?;
        if out[xi].replace(v.as_str()).is_some() {
            return Err(Error::doc(path, format!("duplicate entry for `{x}`")));
        }
    }
    out.into_iter()
        .enumerate()
        .map(|(x, v)| v.ok_or_else(|| Error::doc(field, format!("missing entry for `{}`", l.name(x)))))
        .collect()
}

fn load(raw: Raw, max_n: usize) -> Result<Document> {
    Ok(match raw {
        Raw::Family { ground, members } => {
            let g = ground_at(ground, "ground", max_n)?;
            let mut seen = HashSet::new();
            let mut out = Vec::with_capacity(members.len());
            for (i, m) in members.iter().enumerate() {
                let path = format!("members[{i}]");
                let s = subset_at(&g, m, &path)?;
                if !seen.insert(s) {
                    return Err(Error::doc(path, format!("duplicate member {}", g.render(s))));
                }
                out.push(s);
            }
            Document::Family(SetFamily::new(g, out)?)
        }
        Raw::Preorder { carrier, pairs, closed } => {
            let g = ground_at(carrier, "carrier", max_n)?;
            let mut idx = Vec::with_capacity(pairs.len());
            for (i, (y, x)) in pairs.iter().enumerate() {
                let path = format!("pairs[{i}]");
                idx.push((index_at(g.names(), y, &path)?, index_at(g.names(), x, &path)?));
            }
            let p = if closed {
                // reflexivity is implied by the format
                let refl = (0..g.len()).map(|x| (x, x));
                Preorder::from_closed_pairs(g, idx.into_iter().chain(refl))
            } else {
                Preorder::from_pairs(g, idx)
            };
            Document::Preorder(p.map_err(|e| Error::doc("pairs", e.to_string()))?)
        }
        Raw::Lattice(raw) => Document::Lattice(load_lattice(raw, "$")?),
        Raw::ChoiceFunction { ground, table } => {
            let g = ground_at(ground, "ground", max_n)?;
            Document::ChoiceFunction(choice_table(&g, &table, "table")?)
        }
        Raw::SetFunction { ground, values } => {
            let g = ground_at(ground, "ground", max_n)?;
            let table = keyed_table(
                &g,
                &values,
                "values",
                |e| &e.subset,
                "subset",
                |e, _, path| rational_at(&e.value, &format!("{path}.value")),
                Some(Rational::from_integer(0.into())),
            )?;
            Document::SetFunction(SetFunction::new(g, table)?)
        }
        Raw::WeakOrder { ground, ranks } => {
            let g = ground_at(ground, "ground", max_n)?;
            let table = keyed_table(&g, &ranks, "ranks", |e| &e.subset, "subset", |e, _, _| Ok(e.rank), None)?;
            Document::WeakOrder(SubsetWeakOrder::new(g, table)?)
        }
        Raw::NeighborhoodSystem { ground, minimal } => {
            let g = ground_at(ground, "ground", max_n)?;
            let mut fams = vec![SetFamily::empty(g.clone()); g.len()];
            for (name, members) in &minimal {
                let path = format!("minimal.{name}");
                let x = g.index_of(name).map_err(|e| Error::doc(&path, e.to_string()))?;
                let mut fam = SetFamily::empty(g.clone());
                for (i, m) in members.iter().enumerate() {
                    let at = format!("{path}[{i}]");
                    let s = subset_at(&g, m, &at)?;
                    if !fam.insert(s)? {
                        return Err(Error::doc(at, format!("duplicate member {}", g.render(s))));
                    }
                }
                fams[x] = fam;
            }
            Document::NeighborhoodSystem(
                NeighborhoodSystem::new(g, fams).map_err(|e| Error::doc("minimal", e.to_string()))?,
            )
        }
        Raw::Lift {
            lift,
            target,
            source,
            points,
            phi,
            order,
            verified: _,
        } => {
            let kind = match lift.as_str() {
                "full" => LiftKind::Full,
                "economical" => LiftKind::Economical,
                other => return Err(Error::doc("lift", format!("unknown lift kind `{other}`"))),
            };
            let x = ground_at(target, "target", max_n)?;
            let f = choice_table(&x, &source, "source")?;
            let y = ground_at(points, "points", max_n)?;
            let mut image: Vec<Option<usize>> = vec![None; y.len()];
            for (i, (p, t)) in phi.iter().enumerate() {
                let path = format!("phi[{i}]");
                let pi = index_at(y.names(), p, &path)?;
                let ti = index_at(x.names(), t, &path)?;
                if image[pi].replace(ti).is_some() {
                    return Err(Error::doc(path, format!("point `{p}` mapped twice")));
                }
            }
            let image = image
                .into_iter()
                .enumerate()
                .map(|(k, v)| v.ok_or_else(|| Error::doc("phi", format!("point `{}` is unmapped", y.name(k)))))
                .collect::<Result<Vec<_>>>()?;
            let mut idx = Vec::with_capacity(order.len());
            for (i, (a, b)) in order.iter().enumerate() {
                let path = format!("order[{i}]");
                idx.push((index_at(y.names(), a, &path)?, index_at(y.names(), b, &path)?));
            }
            let p = Preorder::from_pairs(y.clone(), idx)?;
            Document::Lift(Box::new(Lift::from_parts(kind, x, y, image, p, Some(&f))?))
        }
        Raw::LatticeCf { lattice, table } => {
            let l = Arc::new(load_lattice(lattice, "lattice")?);
            let entries = lattice_entries(&l, &table, "table")?;
            let mut t = Vec::with_capacity(l.len());
            for (x, v) in entries.into_iter().enumerate() {
                t.push(l.index_of(v).map_err(|e| Error::doc(format!("table.{}", l.name(x)), e.to_string()))?);
            }
            Document::LatticeCf(LatticeCF::new(l, t).map_err(|e| Error::doc("table", e.to_string()))?)
        }
        Raw::LatticeFunction { lattice, values } => {
            let l = Arc::new(load_lattice(lattice, "lattice")?);
            let entries = lattice_entries(&l, &values, "values")?;
            let vals = entries
                .into_iter()
                .enumerate()
                .map(|(x, v)| rational_at(v, &format!("values.{}", l.name(x))))
                .collect::<Result<Vec<_>>>()?;
            Document::LatticeFunction(LatticeFunction::new(l, vals)?)
        }
    })
}

fn names_of(g: &GroundSet, s: Subset) -> Names {
    g.sorted_names(s)
}

fn dump_lattice(l: &FiniteLattice) -> RawLattice {
    RawLattice {
        elements: l.names().to_vec(),
        leq: l
            .strict_pairs()
            .into_iter()
            .map(|(y, x)| (l.name(y).to_string(), l.name(x).to_string()))
            .collect(),
    }
}

fn dump_choices(f: &ChoiceFunction) -> Vec<RawChoice> {
    let g = f.ground();
    g.subsets()
        .map(|a| RawChoice {
            menu: names_of(g, a),
            choice: names_of(g, f.choose(a)),
        })
        .collect()
}

fn dump(doc: &Document) -> Raw {
    match doc {
        Document::Family(fam) => Raw::Family {
            ground: fam.ground().names().to_vec(),
            members: fam.iter().map(|s| names_of(fam.ground(), s)).collect(),
        },
        Document::Preorder(p) => {
            let g = p.carrier();
            Raw::Preorder {
                carrier: g.names().to_vec(),
                pairs: p
                    .strict_pairs()
                    .into_iter()
                    .map(|(y, x)| (g.name(y).to_string(), g.name(x).to_string()))
                    .collect(),
                closed: false,
            }
        }
        Document::Lattice(l) => Raw::Lattice(dump_lattice(l)),
        Document::ChoiceFunction(f) => Raw::ChoiceFunction {
            ground: f.ground().names().to_vec(),
            table: dump_choices(f),
        },
        Document::SetFunction(u) => {
            let g = u.ground();
            Raw::SetFunction {
                ground: g.names().to_vec(),
                values: g
                    .subsets()
                    .map(|a| RawValue {
                        subset: names_of(g, a),
                        value: u.value(a).to_string(),
                    })
                    .collect(),
            }
        }
        Document::WeakOrder(w) => {
            let g = w.ground();
            Raw::WeakOrder {
                ground: g.names().to_vec(),
                ranks: g
                    .subsets()
                    .map(|a| RawRank {
                        subset: names_of(g, a),
                        rank: w.rank(a),
                    })
                    .collect(),
            }
        }
        Document::NeighborhoodSystem(m) => {
            let g = m.ground();
            Raw::NeighborhoodSystem {
                ground: g.names().to_vec(),
                minimal: (0..g.len())
                    .map(|x| {
                        let fam = m.minimal(x).iter().map(|s| names_of(g, s)).collect();
                        (g.name(x).to_string(), fam)
                    })
                    .collect(),
            }
        }
        Document::Lift(lift) => {
            let y = lift.points();
            let x = lift.source().ground();
            Raw::Lift {
                lift: lift.kind().name().to_string(),
                target: x.names().to_vec(),
                source: dump_choices(lift.source()),
                points: y.names().to_vec(),
                phi: (0..y.len())
                    .map(|p| (y.name(p).to_string(), x.name(lift.phi().apply(p)).to_string()))
                    .collect(),
                order: lift
                    .order()
                    .strict_pairs()
                    .into_iter()
                    .map(|(a, b)| (y.name(a).to_string(), y.name(b).to_string()))
                    .collect(),
                verified: true,
            }
        }
        Document::LatticeCf(f) => {
            let l = f.lattice();
            Raw::LatticeCf {
                lattice: dump_lattice(l),
                table: l
                    .elements()
                    .map(|x| (l.name(x).to_string(), l.name(f.apply(x)).to_string()))
                    .collect(),
            }
        }
        Document::LatticeFunction(u) => {
            let l = u.lattice();
            Raw::LatticeFunction {
                lattice: dump_lattice(l),
                values: l
                    .elements()
                    .map(|x| (l.name(x).to_string(), u.value(x).to_string()))
                    .collect(),
            }
        }
    }
}
