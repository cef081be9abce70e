//! End-to-end acceptance suite. Each test covers one numbered criterion
//! and prints a single `criterion N: PASS` line with its runtime; a
//! failed assertion marks the criterion failed.
//!
//! Run with `--nocapture` to see the lines on success.

mod common;

use std::process::Command;
use std::time::Instant;

use linsys::incidence::{are_isomorphic, IsoOutcome, LinearSystem, DEFAULT_ISO_BUDGET};
use linsys::instances;
use linsys::levi::{levi_planarity_of, planar_edge_bound};
use linsys::planarity::{is_planar, validate_certificate, Certificate};
use linsys::segment::{
    conjecture_check, enumerate, ConjectureVerdict, SearchParams, Seg, SegmentSystem,
};
use linsys::solvers::{
    transversal_number, two_packing_number, SmallInvariantSolver, DEFAULT_NODE_BUDGET,
};
use linsys::{graph, levi};

use common::{oracle_nu2, oracle_tau, random_planar_graph, random_valid_system};
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

fn pass(n: u32, what: &str, start: Instant) {
    println!(
        "criterion {n}: PASS — {what} ({:.2}s)",
        start.elapsed().as_secs_f64()
    );
}

#[test]
fn criterion_1_fano_reference_values() {
    let start = Instant::now();
    let fano = instances::fano();

    let tau = transversal_number(&fano, DEFAULT_NODE_BUDGET);
    let nu2 = two_packing_number(&fano, DEFAULT_NODE_BUDGET);
    assert_eq!(tau.exact_value(), Some(3));
    assert_eq!(nu2.exact_value(), Some(4));
    assert_eq!(oracle_tau(&fano), 3, "independent subset oracle");
    assert_eq!(oracle_nu2(&fano), 4, "independent subfamily oracle");

    let levi = levi_planarity_of(&fano);
    assert_eq!(levi.vertex_count, 14);
    assert_eq!(levi.edge_count, 21);
    assert_eq!(levi.girth, Some(6));
    assert!(!levi.planar);
    // 21 edges against the girth-6 planar maximum of 6·12/4 = 18.
    let bound = planar_edge_bound(14, 6).unwrap();
    assert_eq!(bound, num_rational::Rational64::from_integer(18));
    assert!(levi.exceeds_edge_bound);

    assert!(start.elapsed().as_secs() < 1, "must finish within 1s");
    pass(1, "fano reference values and incidence graph", start);
}

#[test]
fn criterion_2_pendant_extension_reproduced_by_search() {
    let start = Instant::now();
    let target = instances::fano_minus_line_with_pendants();

    assert_eq!(target.uniformity(), Some(4));
    assert!(target.is_intersecting());
    let tau = transversal_number(&target, DEFAULT_NODE_BUDGET).exact_value();
    let nu2 = two_packing_number(&target, DEFAULT_NODE_BUDGET).exact_value();
    assert_eq!(tau, Some(3));
    assert_eq!(nu2, Some(4));
    assert_eq!(target.line_count(), 6);
    assert!(target.line_count() <= (3 * 4 + 1) / 2, "6 <= 6 line bound");
    assert!(tau.unwrap() <= 2 * (4 + 1) / 3, "3 <= 3 transversal bound");

    // Exhaust 4-point segments in box half-width 6 and find a
    // realization. The target has every line at size 4, six lines and
    // 13 points; a candidate matching those counts whose pendant-free
    // core is isomorphic to the target's core is isomorphic outright,
    // because each line then carries exactly one pendant on both sides.
    let params = SearchParams {
        r: 4,
        max_lines: 6,
        box_half_width: 6,
        shard: None,
        require_triangle: false,
    };
    let mut found = false;
    let mut classes = 0u64;
    enumerate(&params, |ss| {
        classes += 1;
        if found || ss.line_count() != 6 || ss.points().len() != 13 {
            return;
        }
        let candidate = ss.to_linear_system();
        if matches!(
            are_isomorphic(&target, &candidate, DEFAULT_ISO_BUDGET),
            IsoOutcome::Isomorphic(_)
        ) {
            found = true;
        }
    });
    assert!(
        found,
        "no realization isomorphic to the pendant extension among {classes} classes"
    );

    assert!(start.elapsed().as_secs() < 30, "must finish within 30s");
    pass(2, "pendant extension realized by lattice search", start);
}

#[test]
fn criterion_3_transversal_packing_sandwich_sweep() {
    let start = Instant::now();
    let mut solver = SmallInvariantSolver::new();
    for r in [2usize, 3, 4] {
        let params = SearchParams {
            r,
            max_lines: 6,
            box_half_width: 4,
            shard: None,
            require_triangle: false,
        };
        let mut seen = 0u64;
        let mut violations = 0u64;
        enumerate(&params, |ss| {
            seen += 1;
            // A lone line has tau 1 against a packing upper bound of
            // 0; the sandwich starts making claims at two lines.
            if ss.line_count() < 2 {
                return;
            }
            let inv = solver.solve(ss);
            let lower = inv.nu2.div_ceil(2);
            let upper = inv.nu2 * (inv.nu2 - 1) / 2;
            if !(lower <= inv.tau && inv.tau <= upper) {
                violations += 1;
                eprintln!("sandwich violated at {:?}", ss.encoding());
            }
            if seen % 25_000 == 0 {
                // Spot-check the fast bitmask solver against the
                // branch-and-bound solvers.
                let ls = ss.to_linear_system();
                assert_eq!(
                    transversal_number(&ls, DEFAULT_NODE_BUDGET).exact_value(),
                    Some(inv.tau)
                );
                assert_eq!(
                    two_packing_number(&ls, DEFAULT_NODE_BUDGET).exact_value(),
                    Some(inv.nu2)
                );
            }
        });
        assert_eq!(violations, 0, "sandwich violations at r = {r}");
        println!(
            "  r = {r}: {seen} classes swept, 0 violations ({:.1}s elapsed)",
            start.elapsed().as_secs_f64()
        );
    }
    // Runtime target for the full sweep is five minutes; report only.
    pass(3, "tau within the packing sandwich across the sweep", start);
}

#[test]
fn criterion_4_degree_one_point_sweep() {
    let start = Instant::now();
    let mut solver = SmallInvariantSolver::new();
    for r in [3usize, 4] {
        let params = SearchParams {
            r,
            max_lines: 6,
            box_half_width: 4,
            shard: None,
            require_triangle: false,
        };
        let mut violations = 0u64;
        enumerate(&params, |ss| {
            let inv = solver.solve(ss);
            if !inv.has_degree_one_point || inv.tau > r - 1 {
                violations += 1;
                eprintln!("degree-1/transversal bound violated at {:?}", ss.encoding());
            }
        });
        assert_eq!(violations, 0, "violations at r = {r}");
    }
    pass(4, "every swept system has a degree-1 point and tau <= r-1", start);
}

#[test]
fn criterion_5_packing_bounded_by_length_sweep() {
    let start = Instant::now();

    // The bound needs r >= 3: the unit lattice triangle is an
    // intersecting 2-segment system with a 2-packing number of 3.
    let unit_triangle = SegmentSystem::build(vec![
        Seg::new((0, 0), (1, 0), 2).unwrap(),
        Seg::new((0, 0), (0, 1), 2).unwrap(),
        Seg::new((1, 0), (-1, 1), 2).unwrap(),
    ])
    .unwrap();
    let mut solver = SmallInvariantSolver::new();
    assert!(unit_triangle.is_intersecting());
    assert_eq!(solver.solve(&unit_triangle).nu2, 3);

    for r in [3usize, 4] {
        let params = SearchParams {
            r,
            max_lines: 6,
            box_half_width: 4,
            shard: None,
            require_triangle: false,
        };
        let mut violations = 0u64;
        enumerate(&params, |ss| {
            let inv = solver.solve(ss);
            if inv.nu2 >= 3 && r < inv.nu2 {
                violations += 1;
                eprintln!("length/packing bound violated at {:?}", ss.encoding());
            }
        });
        assert_eq!(violations, 0, "violations at r = {r}");
    }
    pass(5, "nu2 >= 3 forces r >= nu2 across the sweep", start);
}

#[test]
fn criterion_6_half_length_bound_desk_test() {
    let start = Instant::now();
    let params = SearchParams {
        r: 5,
        max_lines: 6,
        box_half_width: 5,
        shard: None,
        require_triangle: false,
    };
    let mut solver = SmallInvariantSolver::new();
    let mut counterexamples: Vec<String> = Vec::new();
    let mut seen = 0u64;
    enumerate(&params, |ss| {
        seen += 1;
        let inv = solver.solve(ss);
        if inv.tau > 3 {
            counterexamples.push(format!(
                "tau = {} > 3 at {:?}",
                inv.tau,
                ss.encoding()
            ));
        }
        if seen % 1000 == 0 {
            assert!(matches!(
                conjecture_check(ss, DEFAULT_NODE_BUDGET),
                ConjectureVerdict::Holds { .. }
            ));
        }
    });
    for c in &counterexamples {
        println!("COUNTEREXAMPLE: {c}");
    }
    assert!(
        counterexamples.is_empty(),
        "{} counterexamples found",
        counterexamples.len()
    );
    pass(6, "tau <= 3 on every 5-point-segment class swept", start);
}

#[test]
fn criterion_7_planarity_certificates() {
    let start = Instant::now();

    let (planar, cert) = is_planar(&graph::complete(4));
    assert!(planar);
    assert!(matches!(cert, Certificate::Embedding(_)));
    assert!(validate_certificate(&graph::complete(4), &cert));

    let obstructed = [
        ("K5", graph::complete(5)),
        ("K3,3", graph::complete_bipartite(3, 3)),
        ("Petersen", graph::petersen()),
        ("Heawood", levi::levi_graph(&instances::fano())),
    ];
    for (name, g) in &obstructed {
        let (planar, cert) = is_planar(g);
        assert!(!planar, "{name} must be non-planar");
        assert!(
            matches!(cert, Certificate::Obstruction(_)),
            "{name} needs an obstruction certificate"
        );
        assert!(validate_certificate(g, &cert), "{name} certificate check");
    }

    let mut rng = ChaCha12Rng::seed_from_u64(0x5eed_7001);
    for i in 0..10 {
        let g = random_planar_graph(&mut rng, 27);
        assert!(g.vertex_count() <= 30);
        let (planar, cert) = is_planar(&g);
        assert!(planar, "stacked-triangulation subgraph {i} must be planar");
        assert!(validate_certificate(&g, &cert));
    }
    pass(7, "planarity verdicts and certificates validate", start);
}

#[test]
fn criterion_8_solver_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = ChaCha12Rng::seed_from_u64(0x5eed_8002);
    for i in 0..200 {
        let ls: LinearSystem = random_valid_system(&mut rng, 20, 12);
        let tau = transversal_number(&ls, DEFAULT_NODE_BUDGET)
            .exact_value()
            .expect("instances are far below the budget");
        let nu2 = two_packing_number(&ls, DEFAULT_NODE_BUDGET)
            .exact_value()
            .expect("instances are far below the budget");
        assert_eq!(tau, oracle_tau(&ls), "tau mismatch on instance {i}");
        assert_eq!(nu2, oracle_nu2(&ls), "nu2 mismatch on instance {i}");
    }
    pass(8, "solvers agree with the exhaustive oracles on 200 instances", start);
}

#[test]
fn criterion_9_sharded_search_is_deterministic() {
    let start = Instant::now();
    let bin = env!("CARGO_BIN_EXE_linsys");
    let run = |extra: &[&str]| -> Vec<String> {
        let out = Command::new(bin)
            .args(["search", "--r", "3", "--box", "3", "--list"])
            .args(extra)
            .output()
            .expect("search run");
        assert!(out.status.success());
        String::from_utf8(out.stdout)
            .unwrap()
            .lines()
            .map(str::to_string)
            .collect()
    };

    let single = run(&[]);
    let mut merged: Vec<String> = Vec::new();
    for shard in 0..4 {
        merged.extend(run(&["--shards", "4", "--shard", &shard.to_string()]));
    }
    merged.sort();
    assert!(!single.is_empty());
    assert_eq!(merged.len(), single.len());
    assert_eq!(
        merged.join("\n"),
        single.join("\n"),
        "merged shard stream must be byte-identical to the single run"
    );
    pass(9, "4-shard merge matches the unsharded stream byte for byte", start);
}
