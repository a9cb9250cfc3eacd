//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! with its timing against the budget. Run with
//! `cargo test -p depthkit --test acceptance -- --nocapture --test-threads=1`.

mod common;

use std::time::{Duration, Instant};

use depthkit::bigraph::InclusionGraph;
use depthkit::depth::{self, IdealSpec};
use depthkit::sym::{self, combinatorial_depth, normalizer_bound, DepthBound, PermGroup, DEFAULT_GROUP_LIMIT};
use depthkit::tower::{verify_relations, CentralizerElement, GroupAlgebraElement, Rational, VerifyOptions};
use depthkit::NonNegMatrix;
use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{
    check_isomorphism, compose, connected, end_basis, group, naive_depths, s3_in_s4, random_matrix, rank,
    s2_in_s3, to_tower,
};

fn line(id: u32, name: &str, ok: bool, elapsed: Duration, budget: Duration, detail: &str) -> bool {
    let in_budget = elapsed <= budget;
    let status = if ok && in_budget { "PASS" } else { "FAIL" };
    println!(
        "{status} criterion {id:>2} {name}: {detail} [{:.3?} / budget {:?}]",
        elapsed, budget
    );
    ok && in_budget
}

/// Median wall time of `runs` calls.
fn median_time(runs: usize, mut f: impl FnMut()) -> Duration {
    let mut times: Vec<Duration> = (0..runs)
        .map(|_| {
            let t = Instant::now();
            f();
            t.elapsed()
        })
        .collect();
    times.sort();
    times[runs / 2]
}

fn depths(m: &NonNegMatrix) -> (usize, usize, usize) {
    let r = depth::min_depth(m).unwrap();
    (r.min_depth, r.min_odd_depth, r.min_even_depth)
}

#[test]
fn criterion_01_s3_in_s4_depth() {
    let m = s3_in_s4();
    let got = depths(&m);
    let elapsed = median_time(9, || {
        depth::min_depth(&m).unwrap();
    });
    assert!(line(
        1,
        "S3 in S4 depths",
        got == (5, 5, 6),
        elapsed,
        Duration::from_millis(1),
        &format!("(min, odd, even) = {got:?}, expected (5, 5, 6)")
    ));
}

#[test]
fn criterion_02_ideal_depths() {
    let m = s3_in_s4();
    let cases: [(&[usize], usize); 4] = [(&[3], 1), (&[1, 2, 3], 3), (&[2, 3, 4], 4), (&[1, 2, 3, 4], 5)];
    let mut ok = true;
    let mut worst = Duration::ZERO;
    let mut got = Vec::new();
    for (cols, expected) in cases {
        let ideal = IdealSpec::from_one_based(cols.iter().copied()).unwrap();
        let d = depth::ideal_depth(&m, &ideal).unwrap().min_depth;
        ok &= d == expected;
        got.push(d);
        worst = worst.max(median_time(9, || {
            depth::ideal_depth(&m, &ideal).unwrap();
        }));
    }
    assert!(line(
        2,
        "ideal depths on S3 in S4",
        ok,
        worst,
        Duration::from_millis(1),
        &format!("{got:?}, expected [1, 3, 4, 5] (slowest case timed)")
    ));
}

#[test]
fn criterion_03_upper_corner_depth() {
    let m = NonNegMatrix::from_rows(&[[1, 1, 0], [0, 1, 1]]).unwrap();
    let t = Instant::now();
    let d = depth::min_depth(&m).unwrap().min_depth;
    assert!(line(3, "M' depth", d == 3, t.elapsed(), Duration::from_secs(1), &format!("{d}, expected 3")));
}

#[test]
fn criterion_04_symmetric_chain() {
    let t = Instant::now();
    let got: Vec<usize> = (1..=5).map(|n| sym::sym_depth(n).unwrap().min_depth).collect();
    let expected: Vec<usize> = (1..=5).map(|n| 2 * n - 1).collect();
    assert!(line(
        4,
        "S_n in S_n+1 depth",
        got == expected,
        t.elapsed(),
        Duration::from_secs(1),
        &format!("{got:?}, expected {expected:?}")
    ));
}

#[test]
fn criterion_05_graph_matches_matrix() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let t = Instant::now();
    let mut mismatches = Vec::new();
    for _ in 0..200 {
        let rows = random_matrix(&mut rng, 6, 8, true);
        assert!(connected(&rows));
        let m = NonNegMatrix::from_rows(&rows).unwrap();
        let g = InclusionGraph::from_matrix(&m).unwrap();
        let matrix = depths(&m);
        let graph = (g.min_depth(), g.odd_depth(), g.even_depth());
        if matrix != graph || matrix != naive_depths(&rows) {
            mismatches.push(rows);
        }
    }
    assert!(line(
        5,
        "graph method vs matrix method",
        mismatches.is_empty(),
        t.elapsed(),
        Duration::from_secs(5),
        &format!("200 connected matrices, {} disagreements", mismatches.len())
    ));
}

/// Matrix rows, ideal columns, ideal depth and depth.
type Violation = (Vec<Vec<u64>>, Vec<usize>, usize, usize);

/// Every `(matrix, ideal)` pair among 100 seeded random matrices and ideals
/// of at most three columns where the ideal is deeper than the matrix.
fn ideal_bound_violations() -> (usize, Vec<Violation>) {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut checked = 0;
    let mut bad = Vec::new();
    for _ in 0..100 {
        let rows = random_matrix(&mut rng, 6, 8, false);
        let m = NonNegMatrix::from_rows(&rows).unwrap();
        let d = depth::min_depth(&m).unwrap().min_depth;
        for k in 1..=3.min(m.cols()) {
            for cols in (0..m.cols()).combinations(k) {
                checked += 1;
                let di = depth::ideal_depth(&m, &IdealSpec::new(cols.clone()).unwrap()).unwrap().min_depth;
                if di > d {
                    bad.push((rows.clone(), cols, di, d));
                }
            }
        }
    }
    (checked, bad)
}

/// The bound fails on general inclusion matrices (see
/// `ideal_depth_can_exceed_depth` in the property tests), so this criterion
/// reports FAIL. The test itself checks that each violation is genuine by
/// recomputing both depths with the independent oracle.
#[test]
fn criterion_06_ideal_depth_bound() {
    let t = Instant::now();
    let (checked, bad) = ideal_bound_violations();
    let elapsed = t.elapsed();
    let detail = match bad.first() {
        None => format!("{checked} ideals, no violations"),
        Some((rows, cols, di, d)) => format!(
            "{checked} ideals, {} with d^I > d; first: M = {rows:?}, columns {:?}: d^I = {di} > d = {d}",
            bad.len(),
            cols.iter().map(|c| c + 1).collect::<Vec<_>>()
        ),
    };
    line(6, "ideal depth bounded by depth", bad.is_empty(), elapsed, Duration::from_secs(10), &detail);
    for (rows, cols, di, d) in &bad {
        assert_eq!(naive_depths(rows).0, *d);
        let m = NonNegMatrix::from_rows(rows).unwrap();
        let (_, sub) = depth::ideal_submatrix(&m, &IdealSpec::new(cols.clone()).unwrap()).unwrap();
        let sub_rows = sub.to_u64_rows().unwrap();
        assert_eq!(naive_depths(&sub_rows).0, *di);
    }
    assert!(elapsed <= Duration::from_secs(10));
}

/// The literal form of criterion 6; fails on the seeded sample.
#[test]
#[ignore = "the bound does not hold for general inclusion matrices"]
fn criterion_06_literal_bound() {
    let (_, bad) = ideal_bound_violations();
    assert!(bad.is_empty(), "{} violations", bad.len());
}

#[test]
fn criterion_07_tower_identities() {
    let sys = s2_in_s3();
    let t = Instant::now();
    let report = verify_relations(&sys, &VerifyOptions::new(4)).unwrap();
    let elapsed = t.elapsed();
    let required = [
        "frobenius equations",
        "tl commute",
        "tl braid",
        "tl2 contraction",
        "tl3 absorption",
        "tl3 trace",
        "tl4 commutation",
        "unit laws",
        "associativity",
        "inclusion homomorphism",
        "dual basis unit",
        "tensor factorization",
    ];
    let missing: Vec<&str> = required
        .iter()
        .copied()
        .filter(|name| report.check(name).is_none_or(|c| !c.levels_checked.contains(&4)))
        .collect();
    let failed: Vec<&str> = report.checks.iter().filter(|c| !c.passed()).map(|c| c.name.as_str()).collect();
    let sampled: Vec<&str> = report.checks.iter().filter(|c| c.sampled).map(|c| c.name.as_str()).collect();
    assert!(line(
        7,
        "tower identities for S2 in S3 up to level 4",
        missing.is_empty() && report.all_passed,
        elapsed,
        Duration::from_secs(60),
        &format!(
            "{} identities, failed {failed:?}, missing {missing:?}, sampled {sampled:?}",
            report.checks.len()
        )
    ));
}

#[test]
fn criterion_08_endomorphism_oracle() {
    let sys = s2_in_s3();
    let t = Instant::now();
    let basis = end_basis(&sys);
    let images: Vec<_> = basis.iter().map(|f| to_tower(&sys, f)).collect();
    let mut bad = 0;
    for (f, tf) in basis.iter().zip(&images) {
        for (h, th) in basis.iter().zip(&images) {
            if to_tower(&sys, &compose(sys.group(), f, h)) != sys.multiply(tf, th).unwrap() {
                bad += 1;
            }
        }
    }
    let r = rank(&images);
    assert!(line(
        8,
        "level-2 multiplication is endomorphism composition",
        bad == 0 && r == 18,
        t.elapsed(),
        Duration::from_secs(1),
        &format!("{} basis pairs, {bad} mismatches, image rank {r}/18", basis.len().pow(2))
    ));
}

#[test]
fn criterion_09_combinatorial_depth() {
    let t = Instant::now();
    let s3 = PermGroup::symmetric(3);
    let a3 = group(3, &["(1 2 3)"]);
    let normal = combinatorial_depth(&s3, &a3, 8, DEFAULT_GROUP_LIMIT).unwrap();
    let s2 = group(3, &["(1 2)"]);
    let bound = normalizer_bound(&s3, &s2).unwrap();
    let pair = combinatorial_depth(&s3, &s2, bound, DEFAULT_GROUP_LIMIT).unwrap();
    let matrix_depth = sym::sym_depth(2).unwrap().min_depth;
    let normal_ok = matches!(normal.depth, DepthBound::Exact(d) if d <= 2) && normal.normal;
    let pair_ok = matches!(pair.depth, DepthBound::Exact(d) if matrix_depth <= d && d <= bound);
    assert!(line(
        9,
        "combinatorial depth",
        normal_ok && pair_ok,
        t.elapsed(),
        Duration::from_secs(10),
        &format!(
            "A3 in S3: {:?} normal={}; S2 in S3: {:?} within [{matrix_depth}, {bound}]",
            normal.depth, normal.normal, pair.depth
        )
    ));
}

#[test]
fn criterion_10_change_of_coordinates() {
    let sys = s2_in_s3();
    let t = Instant::now();
    let two = Rational::from_integer(2.into());
    let scalar = CentralizerElement::new(&sys, GroupAlgebraElement::scalar(two.clone())).unwrap();
    check_isomorphism(&sys, &scalar);
    let h = group(3, &["(1 2)"]);
    let swap = sys.group().index_of(h.element(1)).unwrap();
    let d = GroupAlgebraElement::from_terms([(0, two), (swap, Rational::from_integer(1.into()))]);
    let d = CentralizerElement::new(&sys, d).unwrap();
    check_isomorphism(&sys, &d);
    assert!(line(
        10,
        "change of coordinates",
        true,
        t.elapsed(),
        Duration::from_secs(10),
        "d = 2 and d = 2 + (1 2): unital, multiplicative, inclusion-commuting on levels 1 to 3"
    ));
}
