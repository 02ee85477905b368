//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use singgraph::blowdown::FiberKind;
use singgraph::catalog::ConfigClass;
use singgraph::corpus::{
    ade_graphs, catalog_instances, cyclic_chains, random_negative_definite_trees,
    random_permutation, seed_from_env, TreeParams, DEFAULT_SEED,
};
use singgraph::cycles::{analyze, is_rational_laufer};
use singgraph::generate::{gen_catalog, gen_chain};
use singgraph::report::{batch_reports, batch_reports_seq, check_graph, InvariantReport, ReportOptions};
use singgraph::{analyze_graph, blowdown_tower, Analysis, DualGraph, Error, Severity, VertexId};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

struct Corpus {
    /// Graphs with at most nine vertices: ADE, catalog rows, cyclic
    /// quotients, random trees and a few hand-picked ones.
    small: Vec<DualGraph>,
    /// Random negative definite trees with at most eight vertices.
    trees: Vec<DualGraph>,
}

impl Corpus {
    fn build(seed: u64) -> Self {
        let mut small = ade_graphs(9);
        for w in [-3, -4] {
            small.extend(catalog_instances(9, w).into_iter().map(|(_, g)| g));
        }
        small.extend(cyclic_chains(40).into_iter().filter(|g| g.len() <= 9));
        small.push(
            DualGraph::from_weights(&[-2, -3, -2, -2, -2, -2], &[(0, 1), (1, 2), (2, 3), (1, 4), (1, 5)])
                .unwrap(),
        );
        small.push(
            DualGraph::from_weights(&[-2, -3, -3, -3, -3], &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap(),
        );
        let p9 = TreeParams {
            max_vertices: 9,
            ..TreeParams::default()
        };
        small.extend(random_negative_definite_trees(seed, 200, &p9));
        let p8 = TreeParams {
            max_vertices: 8,
            p_minus_two: 0.55,
            ..TreeParams::default()
        };
        let trees = random_negative_definite_trees(seed ^ 0x9e37_79b9, 500, &p8);
        Corpus { small, trees }
    }

    fn all(&self) -> impl Iterator<Item = &DualGraph> {
        self.small.iter().chain(&self.trees)
    }

    fn rational(&self) -> Vec<(&DualGraph, Analysis)> {
        self.all()
            .filter_map(|g| analyze_graph(g).ok().map(|a| (g, a)))
            .collect()
    }
}

fn c1_fundamental_cycle(corpus: &Corpus) -> Check {
    let mut n = 0;
    for g in corpus.small.iter().filter(|g| g.len() <= 9) {
        let z = analyze(g).map_err(|e| format!("{e} on {}", g.to_json()))?;
        let oracle = common::fixed_point_fundamental_cycle(g);
        ensure!(z.z().as_slice() == oracle.as_slice(), "Laufer {:?} != oracle {:?}", z.z(), oracle);
        n += 1;
    }
    ensure!(n >= 300, "only {n} graphs");
    Ok(format!("{n} graphs, Laufer = fixed-point oracle"))
}

fn c2_rationality(corpus: &Corpus) -> Check {
    let (mut yes, mut no) = (0, 0);
    for g in &corpus.trees {
        let data = analyze(g).map_err(|e| e.to_string())?;
        let oracle = common::fixed_point_fundamental_cycle(g);
        let pa = common::genus(&common::matrix(g), &oracle);
        let laufer = is_rational_laufer(&data.sequence);
        ensure!(laufer == (pa == 0), "Laufer {laufer} but p_a = {pa}");
        if laufer {
            yes += 1;
        } else {
            no += 1;
        }
    }
    ensure!(yes + no >= 500 && yes > 0 && no > 0, "degenerate sample {yes}/{no}");
    Ok(format!("{} trees ({yes} rational, {no} not)", yes + no))
}

fn c3_identity(corpus: &Corpus) -> Check {
    let mut n = 0;
    for (g, a) in corpus.rational() {
        let Ok(configs) = &a.configs else { continue };
        let m = common::matrix(g);
        let z = a.cycle.z().as_slice();
        let z_minus_e: Vec<i64> = z.iter().map(|x| x - 1).collect();
        let pairing = common::canonical(&m, &z_minus_e) - common::pair(&m, &z_minus_e, z);
        let sum: i64 = configs.iter().map(|c| c.s - 1).sum();
        ensure!(pairing == sum, "(Z-E).(K-Z) = {pairing}, sum(s-1) = {sum}");
        n += 1;
    }
    for (class, s) in [(ConfigClass::OneE6, 2), (ConfigClass::OneE7, 3)] {
        let a = analyze_graph(&gen_catalog(class, &[-3]).unwrap()).map_err(|e| e.to_string())?;
        let configs = a.configs.map_err(|e| e.to_string())?;
        ensure!(configs[0].s == s, "{class}: s = {}", configs[0].s);
        ensure!(a.h1a.map_err(|e| e.to_string())?.value == s - 1, "{class}: h1");
    }
    Ok(format!("{n} rational almost reduced graphs; 1-E6 s=2, 1-E7 s=3"))
}

fn c4_catalog(corpus: &Corpus) -> Check {
    let mut configs_seen = 0;
    for g in corpus.all() {
        match analyze_graph(g) {
            Ok(a) => configs_seen += a.configs.map(|c| c.len()).unwrap_or(0),
            Err(e) if e.severity() == Severity::Internal => {
                return Err(format!("{e} on {}", g.to_json()))
            }
            Err(_) => {}
        }
    }
    let mut round_trips = 0;
    for class in ConfigClass::enumerate(10) {
        let t = class.template().map_err(|e| e.to_string())?;
        for w in [-3, -4, -5] {
            let g = gen_catalog(class, &vec![w; class.n()]).map_err(|e| e.to_string())?;
            if check_graph(&g).is_err() {
                continue;
            }
            let a = analyze_graph(&g).map_err(|e| e.to_string())?;
            let configs = a.configs.map_err(|e| e.to_string())?;
            let core: Vec<usize> = (0..t.mult.len())
                .map(|i| g.index_of(&VertexId(format!("c{i}"))).unwrap())
                .collect();
            let c = configs
                .iter()
                .find(|c| c.core.contains(&core[0]))
                .ok_or("core not found")?;
            ensure!(c.class == Some(class), "{class} classified as {:?}", c.class);
            let z: Vec<i64> = core.iter().map(|&v| a.cycle.z()[v]).collect();
            ensure!(z == t.mult, "{class}: multiplicities {z:?} vs {:?}", t.mult);
            round_trips += 1;
        }
    }
    ensure!(round_trips > 50, "only {round_trips} round trips");
    Ok(format!(
        "{configs_seen} configurations classified; {round_trips} catalog round trips"
    ))
}

fn c5_correction(corpus: &Corpus) -> Check {
    let (mut a_count, mut b_count) = (0, 0);
    for (g, a) in corpus.rational() {
        let (Ok(c), Ok(configs)) = (&a.correction, &a.configs) else { continue };
        let three_a = configs.iter().filter(|c| c.class.unwrap().is_three_a()).count() as i64;
        if three_a == 0 {
            ensure!(c.lo == 0 && c.hi == 0, "no 3-A but c = [{}, {}]", c.lo, c.hi);
            a_count += 1;
        }
        let strong = (0..g.len())
            .filter(|&i| g.sq(i) != -2)
            .all(|i| a.profile.values[i] < 0);
        if strong {
            ensure!(c.exact() && c.lo == three_a, "strong hypothesis but c = [{}, {}]", c.lo, c.hi);
            b_count += 1;
        }
    }
    let g = gen_catalog(ConfigClass::ThreeA { q: 2, m: 1 }, &[-3, -3, -3]).unwrap();
    let a = analyze_graph(&g).map_err(|e| e.to_string())?;
    let c = a.correction.map_err(|e| e.to_string())?;
    ensure!((c.lo, c.hi) == (1, 1), "3-A instance: c = [{}, {}]", c.lo, c.hi);
    Ok(format!("(a) {a_count} graphs c=0, (b) {b_count} graphs c=#3-A, (c) c=1"))
}

fn c6_reduced(corpus: &Corpus) -> Check {
    let mut n = 0;
    for (_, a) in corpus.rational() {
        if !a.cycle.z().is_reduced() {
            continue;
        }
        if let Ok(c) = &a.correction {
            ensure!(c.lo == 0 && c.hi == 0, "Z = E but c = [{}, {}]", c.lo, c.hi);
            n += 1;
        }
    }
    ensure!(n > 0, "no reduced graphs with e >= 4");
    Ok(format!("{n} graphs with Z = E have c = 0"))
}

fn c7_cones() -> Check {
    for d in 3..=10i64 {
        let r = InvariantReport::build(&gen_chain(&[-d]).unwrap(), ReportOptions::default(), None)
            .map_err(|e| e.to_string())?;
        let b = &r.body;
        let c = b.c.ok_or("c missing")?;
        let (t1, t2) = (b.dt1.ok_or("dT1 missing")?, b.dt2.ok_or("dT2 missing")?);
        ensure!(b.invariants.e == d + 1 && b.invariants.mult == d, "d={d}: e={}", b.invariants.e);
        ensure!(c.exact && c.lo == 0, "d={d}: c");
        ensure!(t1.lo == d - 3 && t1.hi == d - 3, "d={d}: dT1 {t1:?}");
        ensure!(t2.lo == (d - 1) * (d - 3) && t2.hi == t2.lo, "d={d}: dT2 {t2:?}");
    }
    Ok("d = 3..10".into())
}

fn c8_blowdown(corpus: &Corpus) -> Check {
    let fibers = |g: &DualGraph| -> Result<Vec<usize>, String> {
        let a = analyze_graph(g).map_err(|e| e.to_string())?;
        Ok(a.step.fibers.iter().map(|f| f.graph.len()).collect())
    };
    let d4 = DualGraph::from_weights(&[-2; 4], &[(0, 1), (0, 2), (0, 3)]).unwrap();
    ensure!(fibers(&d4)? == vec![1, 1, 1], "D4");
    ensure!(fibers(&gen_chain(&[-2; 3]).unwrap())? == vec![1], "A3");
    ensure!(fibers(&gen_chain(&[-2, -3, -2]).unwrap())?.is_empty(), "(-2,-3,-2)");

    let mut n_fibers = 0;
    let mut strong = 0;
    for (g, a) in corpus.rational() {
        let tower = blowdown_tower(g).map_err(|e| e.to_string())?;
        for f in tower.fibers() {
            let z = common::fixed_point_fundamental_cycle(&f.graph);
            ensure!(common::genus(&common::matrix(&f.graph), &z) == 0, "irrational fiber");
            if let FiberKind::Rdp { name, tau } = &f.kind {
                ensure!(*tau == f.graph.len() && name.vertex_count() == *tau, "tau");
            }
            n_fibers += 1;
        }
        let hypothesis = (0..g.len())
            .filter(|&i| g.sq(i) != -2)
            .all(|i| a.profile.values[i] < 0);
        if hypothesis {
            for f in &a.step.fibers {
                ensure!(f.is_rdp(), "level-0 fiber with a non-(-2) curve");
            }
            strong += 1;
        }
    }
    Ok(format!(
        "D4, A3, (-2,-3,-2) ok; {n_fibers} tower fibers rational; {strong} graphs with only RDP fibers"
    ))
}

fn c9_determinism(corpus: &Corpus, seed: u64) -> Check {
    let graphs: Vec<DualGraph> = corpus.small.iter().take(150).cloned().collect();
    let opts = ReportOptions { tower: true };
    let render = |rs: Vec<Result<InvariantReport, Error>>| -> Vec<String> {
        rs.into_iter()
            .map(|r| r.map(|r| r.to_json()).unwrap_or_else(|e| e.code().to_owned()))
            .collect()
    };
    let first = render(batch_reports(&graphs, opts));
    ensure!(first == render(batch_reports(&graphs, opts)), "parallel runs differ");
    ensure!(first == render(batch_reports_seq(&graphs, opts)), "parallel and sequential differ");

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut n = 0;
    for g in corpus.small.iter().chain(&corpus.trees).take(300) {
        let Ok(a) = analyze_graph(g) else { continue };
        let order = random_permutation(&mut rng, g.len());
        let names: Vec<VertexId> = (0..g.len()).map(|i| VertexId(format!("x{}", order[i]))).collect();
        let h = g.relabeled(&order, &names).map_err(|e| e.to_string())?;
        let b = analyze_graph(&h).map_err(|e| e.to_string())?;
        ensure!(a.cycle.invariants == b.cycle.invariants, "scalar invariants changed");
        for (pos, &old) in order.iter().enumerate() {
            ensure!(a.cycle.z()[old] == b.cycle.z()[pos], "Z changed");
        }
        let interval = |x: &Analysis| x.correction.as_ref().ok().map(|c| (c.lo, c.hi));
        ensure!(interval(&a) == interval(&b), "c changed");
        let classes = |x: &Analysis| {
            let mut v: Vec<String> = x
                .configs
                .as_ref()
                .map(|c| c.iter().map(|c| c.class.unwrap().to_string()).collect())
                .unwrap_or_default();
            v.sort();
            v
        };
        ensure!(classes(&a) == classes(&b), "classes changed");
        ensure!(a.step.fibers.len() == b.step.fibers.len(), "fiber count changed");
        n += 1;
    }
    Ok(format!("{} reports byte-identical; {n} relabelings invariant", graphs.len()))
}

type Criterion<'a> = Box<dyn Fn() -> Check + 'a>;

fn main() {
    let start = Instant::now();
    let seed = seed_from_env(DEFAULT_SEED);
    let corpus = Corpus::build(seed);
    let checks: Vec<(u32, &str, Criterion<'_>)> = vec![
        (1, "fundamental cycle oracle", Box::new(|| c1_fundamental_cycle(&corpus))),
        (2, "rationality criteria agree", Box::new(|| c2_rationality(&corpus))),
        (3, "h1 identity", Box::new(|| c3_identity(&corpus))),
        (4, "catalog totality and round trip", Box::new(|| c4_catalog(&corpus))),
        (5, "correction term bounds", Box::new(|| c5_correction(&corpus))),
        (6, "reduced cycle vanishing", Box::new(|| c6_reduced(&corpus))),
        (7, "cone series", Box::new(c7_cones)),
        (8, "blowdown", Box::new(|| c8_blowdown(&corpus))),
        (9, "determinism and relabeling", Box::new(|| c9_determinism(&corpus, seed))),
    ];
    println!("acceptance (seed {seed}, {} + {} corpus graphs)", corpus.small.len(), corpus.trees.len());
    let mut failed = 0;
    for (id, name, check) in &checks {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let ms = t.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {id} PASS  {name}: {detail} ({ms} ms)"),
            Err(why) => {
                failed += 1;
                println!("criterion {id} FAIL  {name}: {why} ({ms} ms)");
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.1} s",
        checks.len() - failed,
        checks.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
