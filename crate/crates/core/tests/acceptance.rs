//! Acceptance gate: nine criteria, each timed against its budget.
//!
//! Runs without the libtest harness so each criterion prints exactly one line.

use std::collections::HashSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use complementary_choice::choicefn::{self, Axiom};
use complementary_choice::cli::fixture_documents;
use complementary_choice::enumerate;
use complementary_choice::io::{self, Document};
use complementary_choice::latticecf::{self, LatticeCF, LatticeFunction};
use complementary_choice::pretop;
use complementary_choice::random::Rng;
use complementary_choice::search::{self, Pattern, SearchConfig};
use complementary_choice::supermod::{self, integer, Modularity};
use complementary_choice::transport::{self, PointMap};
use complementary_choice::{ChoiceFunction, GroundSet, SetFunction, Subset, Witness};

type Check = Result<(), String>;
type Criterion = (&'static str, u64, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn s(g: &GroundSet, spec: &str) -> Subset {
    g.parse_compact(spec).unwrap()
}

fn example5_reproduction() -> Check {
    let (_, _, doc) = fixture_documents().into_iter().find(|(n, _, _)| *n == "example5").unwrap();
    let (doc, _) = io::parse(&io::to_json(&doc, None)).map_err(|e| e.to_string())?;
    let Document::SetFunction(u) = doc else { return Err("fixture is not a set function".into()) };
    let g = u.ground().clone();
    let table = [("", 0), ("a", 3), ("b", 2), ("c", 2), ("ab", 2), ("ac", 2), ("bc", 4), ("abc", 1)];
    for (spec, v) in table {
        ensure!(*u.value(s(&g, spec)) == integer(v), "u({spec}) = {}", u.value(s(&g, spec)));
    }
    let class = supermod::classify(&u);
    ensure!(class.kind == Modularity::Submodular, "classified {:?}", class.kind);
    let lhs = u.value(s(&g, "ab")) + u.value(s(&g, "ac"));
    let rhs = u.value(s(&g, "a")) + u.value(s(&g, "abc"));
    ensure!(lhs == integer(4) && rhs == integer(4), "spot inequality {lhs} vs {rhs}");
    let f = supermod::induce_cf(&u).map_err(|e| e.to_string())?;
    ensure!(f.choose(g.full()) == s(&g, "bc"), "f(X) = {}", g.render(f.choose(g.full())));
    ensure!(f.choose(s(&g, "ab")) == s(&g, "a"), "f(ab) = {}", g.render(f.choose(s(&g, "ab"))));
    let b = g.index_of("b").unwrap();
    ensure!(f.choose(g.full()).contains(b) && !f.choose(s(&g, "ab")).contains(b), "b not rejected");
    let r = f.analyze();
    ensure!(!r.substitutable_heredity, "heredity holds");
    match r.witness(Axiom::SubstitutableHeredity) {
        Some(Witness::Heredity { element, .. }) if *element == b => Ok(()),
        other => Err(format!("heredity witness {other:?}")),
    }
}

fn all_complementary(max_n: usize) -> Vec<ChoiceFunction> {
    (0..=max_n)
        .flat_map(|n| enumerate::complementary_cfs(&GroundSet::letters(n)).unwrap())
        .collect()
}

fn packaged_decomposition() -> Check {
    for f in all_complementary(3) {
        let g = f.ground().clone();
        let opens = pretop::decompose(&f).map_err(|e| e.to_string())?;
        let parts: Vec<ChoiceFunction> = opens.iter().map(|k| choicefn::packaged(&g, k).unwrap()).collect();
        let back = choicefn::union(&parts).map_err(|e| e.to_string())?;
        ensure!(back == f, "reconstruction differs for {f:?}");
    }
    Ok(())
}

fn synthesis_roundtrip(f: &ChoiceFunction) -> Check {
    let g = f.ground();
    let u = supermod::synthesize(f).map_err(|e| e.to_string())?;
    ensure!(supermod::classify(&u).is_supermodular(), "not supermodular: {u:?}");
    let back = supermod::induce_cf(&u).map_err(|e| e.to_string())?;
    ensure!(back == *f, "induced choice differs");
    let ue = supermod::perturb(&u, &supermod::default_epsilon(g.len())).map_err(|e| e.to_string())?;
    for a in g.subsets() {
        let am = supermod::argmax_family(&ue, a);
        ensure!(am.len() == 1 && am.contains(f.choose(a)), "perturbed argmax on {} is {}", g.render(a), am.render());
    }
    Ok(())
}

fn synthesis_and_perturbation() -> Check {
    let start = Instant::now();
    for f in all_complementary(3) {
        synthesis_roundtrip(&f)?;
    }
    ensure!(start.elapsed() < Duration::from_secs(30), "exhaustive part over 30s");
    let start = Instant::now();
    let mut rng = Rng::seeded(3);
    for n in [4, 5] {
        let g = GroundSet::letters(n);
        for _ in 0..100 {
            synthesis_roundtrip(&rng.complementary_cf(&g, 2 * n))?;
        }
    }
    ensure!(start.elapsed() < Duration::from_secs(60), "randomized part over 60s");
    Ok(())
}

fn universal_lifts() -> Check {
    for f in all_complementary(3) {
        let full = transport::theorem2_lift(&f).map_err(|e| e.to_string())?;
        let eco = transport::economical_lift(&f).map_err(|e| e.to_string())?;
        for lift in [&full, &eco] {
            ensure!(lift.lifted().analyze().completely_complementary, "lift not completely complementary");
            let back = transport::direct_image(lift.phi(), lift.lifted()).map_err(|e| e.to_string())?;
            ensure!(back == f, "transport differs for {f:?}");
        }
        let labels: HashSet<&String> = full.labels().iter().collect();
        ensure!(eco.labels().iter().all(|l| labels.contains(l)), "economical points not in full lift");
    }
    Ok(())
}

fn ideal_characterizations() -> Check {
    for n in 0..=4 {
        let g = GroundSet::letters(n);
        let ideal_forms: HashSet<Vec<Subset>> = enumerate::all_preorders(&g)
            .unwrap()
            .iter()
            .map(|p| choicefn::ideal_cf(&g, p).unwrap().table().to_vec())
            .collect();
        for f in enumerate::complementary_cfs(&g).unwrap() {
            let ideal = ideal_forms.contains(f.table());
            let complete = f.analyze().completely_complementary;
            let unique = pretop::has_unique_minimal_neighborhoods(&f).map_err(|e| e.to_string())?;
            ensure!(ideal == complete && complete == unique, "characterizations disagree on {f:?}");
            if complete {
                let p = pretop::preorder_from_cf(&f).map_err(|e| e.to_string())?;
                ensure!(choicefn::ideal_cf(&g, &p).unwrap() == f, "ideal roundtrip differs on {f:?}");
            }
        }
    }
    Ok(())
}

fn property_suites() -> Check {
    let mut rng = Rng::seeded(6);
    for _ in 0..200 {
        let g = GroundSet::letters(1 + rng.below(5));
        let k = 1 + rng.below(3);
        let fs: Vec<ChoiceFunction> = (0..k).map(|_| rng.complementary_cf(&g, 4)).collect();
        let u = choicefn::union(&fs).map_err(|e| e.to_string())?;
        ensure!(u.analyze().complementary, "union of complementary choices is not complementary");
    }
    for _ in 0..200 {
        let x = GroundSet::letters(1 + rng.below(4));
        let m = 1 + rng.below(5);
        let y = GroundSet::new((0..m).map(|i| format!("y{i}"))).unwrap();
        let phi = PointMap::new(y.clone(), x.clone(), (0..m).map(|_| rng.below(x.len())).collect()).unwrap();
        let gcf = rng.complementary_cf(&y, 4);
        let f = transport::direct_image(&phi, &gcf).map_err(|e| e.to_string())?;
        ensure!(f.analyze().complementary, "direct image is not complementary");
    }
    for _ in 0..200 {
        let g = GroundSet::letters(1 + rng.below(5));
        let u = rng.supermodular(&g);
        let f = supermod::induce_cf(&u).map_err(|e| e.to_string())?;
        ensure!(f.analyze().complementary, "induced choice is not complementary for {u:?}");
        let w = supermod::order_from_setfn(&u).map_err(|e| e.to_string())?;
        let via_order = supermod::cf_from_order(&w).map_err(|e| e.to_string())?;
        ensure!(via_order == f, "weak-order route differs for {u:?}");
    }
    Ok(())
}

fn dual_counts() -> Check {
    for (n, want) in [(1, 2), (2, 7)] {
        let families = enumerate::count_union_closed(n).map_err(|e| e.to_string())?;
        let filtered = enumerate::count_complementary_by_filter(n).map_err(|e| e.to_string())?;
        ensure!(families == want && filtered == want, "n = {n}: {families} and {filtered}");
    }
    let families = enumerate::count_union_closed(3).map_err(|e| e.to_string())?;
    let filtered = enumerate::count_complementary_by_filter(3).map_err(|e| e.to_string())?;
    ensure!(families == filtered, "n = 3: {families} vs {filtered}");
    Ok(())
}

fn lattice_suite() -> Check {
    for (name, lat) in latticecf::reference_suite() {
        let lat = Arc::new(lat);
        let families = latticecf::join_closed_families(&lat).map_err(|e| e.to_string())?;
        for fam in &families {
            let f = latticecf::cf_from_fix(lat.clone(), fam).map_err(|e| e.to_string())?;
            ensure!(latticecf::fix_set(&f).map_err(|e| e.to_string())? == *fam, "{name}: Fix roundtrip");
        }
        let mut complementary = 0usize;
        let mut failure = None;
        latticecf::for_each_contracting(&lat, |f| {
            if failure.is_some() || !latticecf::analyze_lattice(f).complementary {
                return;
            }
            complementary += 1;
            let fix = latticecf::fix_set(f).unwrap();
            if latticecf::cf_from_fix(lat.clone(), &fix).unwrap() != *f {
                failure = Some(format!("{name}: cf_from_fix(fix_set(f)) differs"));
                return;
            }
            let u = latticecf::theorem4_synthesize(f).unwrap();
            let ok = latticecf::classify_lattice(&u).is_supermodular()
                && latticecf::is_monotone(&u)
                && latticecf::is_integer_valued(&u)
                && latticecf::induce_lattice_cf(&u).is_ok_and(|c| c == *f);
            if !ok {
                failure = Some(format!("{name}: synthesized function fails for {:?}", f.table()));
            }
        })
        .map_err(|e| e.to_string())?;
        if let Some(msg) = failure {
            return Err(msg);
        }
        ensure!(complementary == families.len(), "{name}: {complementary} maps vs {} families", families.len());
    }
    let g = GroundSet::letters(3);
    for f in enumerate::complementary_cfs(&g).unwrap() {
        let lf = LatticeCF::from_powerset(&f).map_err(|e| e.to_string())?;
        let lu = latticecf::theorem4_synthesize(&lf).map_err(|e| e.to_string())?;
        let pu: SetFunction = supermod::synthesize(&f).map_err(|e| e.to_string())?;
        ensure!(lu == LatticeFunction::from_set_function(&pu).unwrap(), "synthesized values differ");
        let lattice_route = latticecf::induce_lattice_cf(&lu).unwrap().to_powerset(&g).unwrap();
        ensure!(lattice_route == supermod::induce_cf(&pu).unwrap(), "induced choices differ");
    }
    Ok(())
}

fn counterexample_search() -> Check {
    let out = search::search(&Pattern::SubmodularNotSubstitutable, &SearchConfig::new(3)).map_err(|e| e.to_string())?;
    ensure!(out.exhaustive, "search was not exhaustive");
    ensure!(!out.findings.is_empty(), "no instance found over {} tables", out.examined);
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("example5 fixture reproduction", 1, example5_reproduction),
        ("packaged decomposition, n <= 3", 10, packaged_decomposition),
        ("supermodular synthesis and perturbation", 90, synthesis_and_perturbation),
        ("universal lifts, n <= 3", 60, universal_lifts),
        ("ideal-form characterizations, n <= 4", 60, ideal_characterizations),
        ("closure property suites", 60, property_suites),
        ("dual enumeration counts", 60, dual_counts),
        ("lattice suite", 60, lattice_suite),
        ("counterexample search", 60, counterexample_search),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let result = result.and_then(|()| {
            if elapsed > Duration::from_secs(*budget) {
                Err(format!("over budget of {budget}s"))
            } else {
                Ok(())
            }
        });
        match result {
            Ok(()) => println!("criterion {} PASS  {name} ({:.3}s, budget {budget}s)", i + 1, elapsed.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("criterion {} FAIL  {name} ({:.3}s): {msg}", i + 1, elapsed.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
