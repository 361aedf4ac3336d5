//! One pass/fail line per acceptance criterion.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use flexrig::algebra::{coupled_unit, halfangle_unit, int, rat, to_f64, RatPoint2, Rational};
use flexrig::graph::{automorphisms, parse_catalog, triangle_components, Edge, FlexGraph};
use flexrig::motion::{analyze_motion, fix_edge, grid_motion, spatial_motion, ParametricMotion, ZigZag};
use flexrig::movable::{
    constant_distance_closure, has_injective_grid_construction, has_injective_spatial_embedding, unicolor_pairs,
};
use flexrig::nac::{has_nac_coloring, isomorphism_classes, nac_colorings};

const FLOAT_TOL: f64 = 1e-12;
const SAMPLE_TS: [f64; 3] = [1.0 / 7.0, 3.0 / 5.0, 2.0];
const LIMIT_C1: Duration = Duration::from_secs(1);
const LIMIT_C2: Duration = Duration::from_secs(5);
const LIMIT_C4: Duration = Duration::from_secs(1);
const LIMIT_C6: Duration = Duration::from_secs(5);
const LIMIT_ENUM_12: Duration = Duration::from_secs(5);
const LIMIT_REPLAY: Duration = Duration::from_secs(30);

const PRISM_GRID: &str = "{0: (0, 0),
 1: (sin(alpha) + 1, cos(alpha)),
 2: (2*sin(alpha) + 1, 2*cos(alpha)),
 3: (2*sin(alpha), 2*cos(alpha)),
 4: (sin(alpha), cos(alpha)),
 5: (1, 0)}";

const Q1_FIXED: &str = "{1: ((3*t^2 - 3)/(t^2 + 1), -6*t/(t^2 + 1)),
 2: ((t^4 + 23*t^2 + 4)/(t^4 + 5*t^2 + 4), (6*t^3 - 12*t)/(t^4 + 5*t^2 + 4)),
 3: ((4*t^2 - 2)/(t^2 + 1), -6*t/(t^2 + 1)),
 4: (18*t^2/(t^4 + 5*t^2 + 4), (6*t^3 - 12*t)/(t^4 + 5*t^2 + 4)),
 5: (0, 0),
 6: (2, 0),
 7: (1, 0)}";

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn g(name: &str) -> FlexGraph {
    parse_catalog(name).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn within(start: Instant, limit: Duration, what: &str) -> Check {
    let t = start.elapsed();
    ensure!(t < limit, "{what} took {t:?}, limit {limit:?}");
    Ok(())
}

fn reds(cs: &[flexrig::nac::NacColoring]) -> Vec<Vec<Edge>> {
    cs.iter().map(|c| c.red().to_vec()).collect()
}

fn edges(pairs: &[(u32, u32)]) -> Vec<Edge> {
    pairs.iter().map(|&(a, b)| Edge::new(a, b)).collect()
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let c4 = g("C4");
    let cs = nac_colorings(&c4, false);
    let expect = vec![edges(&[(0, 1), (0, 3)]), edges(&[(0, 1), (1, 2)]), edges(&[(0, 1), (2, 3)])];
    ensure!(reds(&cs) == expect, "red sets {:?}", reds(&cs));
    let classes = isomorphism_classes(&c4, &cs).map_err(|e| e.to_string())?;
    let names: Vec<Vec<String>> =
        classes.iter().map(|k| k.members.iter().map(|c| c.name().unwrap_or("").to_string()).collect()).collect();
    ensure!(names == vec![vec!["alpha1", "alpha2"], vec!["beta"]], "class names {names:?}");
    ensure!(reds(&classes[0].members) == expect[..2] && reds(&classes[1].members) == expect[2..], "class members");
    within(start, LIMIT_C1, "C4 enumeration")
}

fn criterion_2() -> Check {
    let start = Instant::now();
    for name in common::SMALL_CATALOG {
        let graph = g(name);
        ensure!(graph.num_edges() <= 12, "{name} has {} edges", graph.num_edges());
        let fast = reds(&nac_colorings(&graph, false));
        let brute = common::brute_nac(&graph);
        ensure!(fast == brute, "{name}: {} colorings, oracle {}", fast.len(), brute.len());
    }
    within(start, LIMIT_C2, "oracle comparison")
}

fn criterion_3() -> Check {
    for name in ["K4", "Diamond", "K2"] {
        ensure!(!has_nac_coloring(&g(name)), "{name} has a NAC-coloring");
    }
    let prism = g("ThreePrism");
    let cs = nac_colorings(&prism, false);
    ensure!(cs.len() == 1, "ThreePrism has {} colorings", cs.len());
    ensure!(reds(&cs) == common::brute_nac(&prism), "ThreePrism disagrees with the oracle");
    Ok(())
}

fn prism_motion() -> ParametricMotion {
    let prism = g("ThreePrism");
    grid_motion(&prism, &nac_colorings(&prism, false)[0], None).unwrap()
}

fn q1_motion() -> ParametricMotion {
    let q1 = g("Q1");
    let w = has_injective_spatial_embedding(&q1).unwrap().expect("Q1 spatial embedding");
    fix_edge(&spatial_motion(&q1, &w.embedding, &int(3)).unwrap(), 5, 6).unwrap()
}

fn criterion_4() -> Check {
    let start = Instant::now();
    let m = prism_motion();
    ensure!(m.parametrization() == PRISM_GRID, "parametrization differs:\n{}", m.parametrization());
    let a = analyze_motion(&m);
    ensure!(a.is_flex && a.labeling.len() == 9, "{} constant edges, flex {}", a.labeling.len(), a.is_flex);
    ensure!(a.nontrivial && a.proper, "nontrivial {} proper {}", a.nontrivial, a.proper);
    within(start, LIMIT_C4, "prism grid motion")
}

fn criterion_5() -> Check {
    let prism = has_injective_grid_construction(&g("ThreePrism")).unwrap();
    ensure!(prism == nac_colorings(&g("ThreePrism"), false).first().cloned(), "ThreePrism witness {prism:?}");
    ensure!(has_injective_grid_construction(&g("Q1")).unwrap().is_none(), "Q1 has an injective grid");
    Ok(())
}

fn criterion_6() -> Check {
    let start = Instant::now();
    let m = q1_motion();
    let expect: BTreeMap<Edge, Rational> = [
        ((5, 6), 4),
        ((5, 7), 1),
        ((6, 7), 1),
        ((1, 3), 1),
        ((2, 4), 1),
        ((2, 6), 1),
        ((4, 7), 1),
        ((1, 5), 9),
        ((3, 7), 9),
        ((1, 4), 9),
        ((2, 3), 9),
    ]
    .into_iter()
    .map(|((a, b), l)| (Edge::new(a, b), int(l)))
    .collect();
    let a = analyze_motion(&m);
    ensure!(a.is_flex && a.labeling == expect, "labeling {:?}", a.labeling);
    for (v, x) in [(5, 0), (6, 2), (7, 1)] {
        ensure!(*m.point(v) == RatPoint2::constant(int(x), int(0)), "vertex {v} at {}", m.point(v));
    }
    ensure!(a.nontrivial && a.proper, "nontrivial {} proper {}", a.nontrivial, a.proper);
    ensure!(m.parametrization() == Q1_FIXED, "parametrization differs:\n{}", m.parametrization());
    within(start, LIMIT_C6, "Q1 spatial pipeline")
}

fn criterion_7() -> Check {
    let c4 = g("C4");
    ensure!(unicolor_pairs(&c4).is_empty(), "U(C4) = {:?}", unicolor_pairs(&c4));
    ensure!(constant_distance_closure(&c4).closure == c4, "CDC(C4) grew");
    ensure!(constant_distance_closure(&g("Diamond")).closure == g("K4"), "CDC(Diamond) is not K4");
    ensure!(!constant_distance_closure(&g("Q1")).is_complete(), "CDC(Q1) is complete");
    let t = constant_distance_closure(&g("MaxEmbeddingsLaman(7)"));
    ensure!(t.is_complete(), "CDC of MaxEmbeddingsLaman(7) is incomplete");
    let u0 = &t.stages[0].upairs;
    ensure!(u0.contains(&Edge::new(3, 4)) && u0.contains(&Edge::new(5, 6)), "stage 0 U = {u0:?}");
    Ok(())
}

fn float_agrees(name: &str, m: &ParametricMotion) -> Check {
    let a = analyze_motion(m);
    ensure!(a.is_flex, "{name} is not a flex");
    for t in SAMPLE_TS {
        let s = m.sample(t);
        for (e, l) in &a.labeling {
            let (p, q) = (s[&e.u()], s[&e.v()]);
            let d = (p.0 - q.0).powi(2) + (p.1 - q.1).powi(2);
            let err = (d - to_f64(l)).abs();
            ensure!(err.total_cmp(&FLOAT_TOL).is_lt(), "{name} {e} at t = {t}: error {err:e}");
        }
    }
    Ok(())
}

fn criterion_8() -> Check {
    let prism = g("ThreePrism");
    let c = &nac_colorings(&prism, false)[0];
    let zz = ZigZag {
        rotated: vec![(int(0), int(0)), (rat(3, 4), rat(1, 2)), (int(2), int(0))],
        translated: vec![(int(0), int(0)), (int(1), int(0))],
    };
    float_agrees("prism grid", &prism_motion())?;
    float_agrees("prism zig-zag", &grid_motion(&prism, c, Some(&zz)).map_err(|e| e.to_string())?)?;
    float_agrees("Q1 spatial", &q1_motion())
}

fn small_graph() -> impl Strategy<Value = FlexGraph> {
    (3usize..=7).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut pairs = Vec::new();
            let mut k = 0;
            for j in 1..n as u32 {
                for i in 0..j {
                    if bits[k] {
                        pairs.push((i, j));
                    }
                    k += 1;
                }
            }
            FlexGraph::new(&pairs, Some(&(0..n as u32).collect::<Vec<_>>())).unwrap()
        })
    })
}

fn criterion_9() -> Check {
    let config = Config { cases: 64, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    let scales = (1i64..=9, 1i64..=5).prop_map(|(p, q)| rat(p, q));
    runner
        .run(&(scales.clone(), (-7i64..=7, 1i64..=3)), |(a, (p, q))| {
            let z = halfangle_unit(&a).unwrap();
            prop_assert!(z.defect().is_zero());
            let l = rat(p, q);
            if l == int(0) || l == int(1) || l == int(-1) {
                return Ok(());
            }
            let zc = coupled_unit(&z, &l).unwrap();
            prop_assert!(zc.defect().is_zero());
            let one = RatPoint2::constant(int(1), int(0));
            let (zp, zcp) = (z.point(), zc.point());
            prop_assert!(one.sub(&zp.scale(&l)).add(&zcp.scale(&l)).sub(&zp.complex_mul(&zcp)).is_zero());
            Ok(())
        })
        .map_err(|e| format!("unit curves: {e}"))?;
    runner
        .run(&small_graph().prop_filter("few edges", |g| g.num_edges() <= 11), |graph| {
            let cs = nac_colorings(&graph, false);
            let parts = triangle_components(&graph);
            let auts = automorphisms(&graph).unwrap();
            let set: std::collections::BTreeSet<Vec<Edge>> = reds(&cs).into_iter().collect();
            for c in &cs {
                prop_assert!(!c.blue().is_empty() && c.is_red(&graph.edges()[0]));
                for comp in &parts.components {
                    prop_assert!(comp.iter().all(|e| c.is_red(e) == c.is_red(&comp[0])));
                }
                for a in &auts {
                    let img: Vec<Edge> =
                        graph.edges().iter().copied().filter(|e| c.is_red(&a.inverse().apply_edge(e))).collect();
                    let canon = if img.contains(&graph.edges()[0]) {
                        img
                    } else {
                        graph.edges().iter().copied().filter(|e| !img.contains(e)).collect()
                    };
                    prop_assert!(set.contains(&canon));
                }
            }
            let t = constant_distance_closure(&graph);
            prop_assert_eq!(constant_distance_closure(&t.closure).closure, t.closure.clone());
            if graph.is_connected() {
                if let Some(c) = cs.first() {
                    let m = grid_motion(&graph, c, None).unwrap();
                    let e = graph.edges()[graph.num_edges() / 2];
                    let f = fix_edge(&m, e.u(), e.v()).unwrap();
                    for (i, &u) in graph.vertices().iter().enumerate() {
                        for &v in &graph.vertices()[i + 1..] {
                            prop_assert_eq!(m.distance_sq(u, v), f.distance_sq(u, v));
                        }
                    }
                }
            }
            Ok(())
        })
        .map_err(|e| format!("graph invariants: {e}"))
}

fn replay_commands() -> Vec<Vec<String>> {
    let dir = std::env::temp_dir().join(format!("flexrig-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let svg = dir.join("3-prism_grid.svg").display().to_string();
    let zz = "[[[0,0],[3/4,1/2],[2,0]],[[0,0],[1,0]]]";
    let mut cmds: Vec<Vec<String>> = [
        "graph info catalog:C4",
        "nac list catalog:C4",
        "nac list catalog:C4 --names",
        "nac classes catalog:C4",
        "graph info catalog:ThreePrism",
        "motion grid catalog:ThreePrism --nac 0 --display trig",
        "movable catalog:ThreePrism --grid",
        "movable catalog:Q1 --grid",
        "movable catalog:Q1 --spatial",
        "motion spatial catalog:Q1 --fix-edge 5,6",
        "cdc catalog:MaxEmbeddingsLaman(7)",
        "movable catalog:NoNAC",
    ]
    .iter()
    .map(|c| c.split(' ').map(String::from).collect())
    .collect();
    cmds.push(["motion", "grid", "catalog:ThreePrism", "--nac", "0", "--svg", &svg].map(String::from).to_vec());
    cmds.push(["motion", "grid", "catalog:ThreePrism", "--nac", "0", "--zigzag", zz].map(String::from).to_vec());
    cmds
}

fn criterion_10() -> Check {
    for name in ["NoNAC", "CompleteBipartite(3,4)"] {
        let graph = g(name);
        ensure!(graph.num_edges() == 12, "{name} has {} edges", graph.num_edges());
        let start = Instant::now();
        nac_colorings(&graph, false);
        within(start, LIMIT_ENUM_12, &format!("enumeration on {name}"))?;
    }
    let start = Instant::now();
    for args in replay_commands() {
        let out = Command::new(env!("CARGO_BIN_EXE_flexrig")).args(&args).output().map_err(|e| e.to_string())?;
        ensure!(out.status.success(), "{args:?} exited with {:?}", out.status.code());
    }
    within(start, LIMIT_REPLAY, "transcript replay")
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("C4 enumeration and class names", criterion_1),
        ("enumeration equals brute-force oracle", criterion_2),
        ("graphs without NAC-colorings", criterion_3),
        ("prism grid motion", criterion_4),
        ("injective grid construction", criterion_5),
        ("Q1 spatial motion", criterion_6),
        ("constant distance closure", criterion_7),
        ("floating-point verification", criterion_8),
        ("property suites", criterion_9),
        ("performance smoke", criterion_10),
    ];
    let mut failed = 0;
    for (k, (label, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or(p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let ms = start.elapsed().as_millis();
        match result {
            Ok(()) => println!("criterion {:>2} PASS {label} ({ms} ms)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {label} ({ms} ms): {why}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
