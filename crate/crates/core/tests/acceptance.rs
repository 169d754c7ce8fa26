//! The ten acceptance criteria, one PASS/FAIL line each.

use std::io::Write;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{rngs::StdRng, Rng, SeedableRng};

use severi::braid::{
    admissible_masks, jaeger_homfly, markov_checks, parse_braid, pinf_positive, BraidWord, Letter,
    DEFAULT_BUDGET,
};
use severi::dynkin::{dynkin_nh, independence_polynomial, SimpleGraph};
use severi::genus_transform::{combine_local, series_from_nh, solve_global, NhVector};
use severi::laurent::{binomial, LaurentPoly1, LaurentPoly2, TruncatedSeries};
use severi::models::{catalog, degree_bound_check, find_model, predicted_pinf, Germ};
use severi::staircase::{ade_closed_nh, ade_nh, counted_series, model_series, AdeType, Model};

fn z(terms: &[(i64, i64)]) -> LaurentPoly1 {
    LaurentPoly1::from_terms(terms.iter().copied())
}

fn local_is(n: &NhVector, expected: &[i64]) -> bool {
    n.values
        == expected
            .iter()
            .map(|&v| BigInt::from(v))
            .collect::<Vec<_>>()
}

/// Runs `check` and reports whether it held within `limit`.
fn criterion(id: usize, name: &str, limit: Option<Duration>, check: impl FnOnce() -> bool) -> bool {
    let start = Instant::now();
    let held = check();
    let elapsed = start.elapsed();
    let in_time = limit.is_none_or(|l| elapsed <= l);
    let pass = held && in_time;
    let budget = limit.map_or(String::new(), |l| format!(" / {l:?}"));
    // bypass the test harness capture so the lines always show up
    let _ = writeln!(
        std::io::stdout(),
        "[{}] {id:>2}. {name} ({elapsed:.2?}{budget}){}",
        if pass { "PASS" } else { "FAIL" },
        if held && !in_time { " over time" } else { "" }
    );
    pass
}

fn ade_tables() -> bool {
    let exact = local_is(&ade_nh(AdeType::E6), &[5, 10, 6, 1])
        && local_is(&ade_nh(AdeType::E7), &[2, 11, 15, 7, 1])
        && local_is(&ade_nh(AdeType::E8), &[7, 21, 21, 8, 1]);
    let closed = [AdeType::E6, AdeType::E7, AdeType::E8]
        .into_iter()
        .all(|t| ade_closed_nh(t) == ade_nh(t));
    // A and D: the binomial formulas written out here, independent of the library
    let families = AdeType::all_up_to(12).into_iter().all(|t| {
        let d = t.delta() as i64;
        let formula = |h: i64| match t {
            AdeType::A(n) if n % 2 == 1 => Some(binomial(d + h, d - h)),
            AdeType::A(_) => Some(binomial(d + h + 1, d - h)),
            AdeType::D(n) if n % 2 == 0 => Some(
                binomial(d + h - 3, d - h)
                    + 2 * binomial(d + h - 3, d - h - 1)
                    + binomial(d + h - 2, d - h - 2),
            ),
            AdeType::D(_) => Some(
                binomial(d + h - 2, d - h)
                    + 2 * binomial(d + h - 2, d - h - 1)
                    + binomial(d + h - 1, d - h - 2),
            ),
            _ => None,
        };
        let truncation = ade_nh(t);
        (0..=d).all(|h| formula(h).is_none_or(|f| f == truncation.get(h)))
            && ade_closed_nh(t) == truncation
    });
    exact && closed && families
}

fn model_series_agree() -> bool {
    Model::ALL
        .into_iter()
        .all(|m| model_series(m, 30) == counted_series(m, 30))
}

fn brute_force(g: &SimpleGraph) -> Vec<BigInt> {
    let n = g.vertex_count();
    let mut counts = vec![0u64; n + 1];
    for mask in 0u32..(1 << n) {
        if g.edges()
            .iter()
            .all(|&(u, v)| mask >> u & 1 == 0 || mask >> v & 1 == 0)
        {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    counts.into_iter().map(BigInt::from).collect()
}

fn dynkin_cross_check() -> bool {
    let nh = AdeType::all_up_to(12)
        .into_iter()
        .all(|t| dynkin_nh(t) == ade_nh(t));
    let mut diagrams: Vec<AdeType> = (1..=16).map(AdeType::A).collect();
    diagrams.extend((4..=16).map(AdeType::D));
    diagrams.extend([AdeType::E6, AdeType::E7, AdeType::E8]);
    let dp = diagrams.into_iter().all(|t| {
        let g = SimpleGraph::dynkin(t);
        independence_polynomial(&g).unwrap() == brute_force(&g)
    });
    nh && dp
}

fn trefoil() -> bool {
    let w = parse_braid("1 1 1", 2).unwrap();
    let h = jaeger_homfly(&w, DEFAULT_BUDGET).unwrap();
    let expected = LaurentPoly2::from_terms([((2, 0), 2), ((4, 0), -1), ((2, 2), 1)]);
    let (_, low) = h.unnormalized.lowest_a_part().unwrap();
    let masks = admissible_masks(&w, DEFAULT_BUDGET).unwrap();
    // the listed sequences, bit j set when letter j is kept
    let mut listed = vec![0b000u64, 0b011, 0b100, 0b110, 0b111];
    let mut got = masks.clone();
    listed.sort();
    got.sort();
    h.normalized == Some(expected)
        && low == z(&[(-1, 2), (1, 1)])
        && masks.len() == 5
        && got == listed
}

fn t34() -> bool {
    let w = parse_braid("(1 2)^4", 3).unwrap();
    let p = pinf_positive(&w, DEFAULT_BUDGET).unwrap();
    let expected = z(&[(-1, 5), (1, 10), (3, 6), (5, 1)]);
    let predicted = predicted_pinf(&ade_nh(AdeType::E6), 1);
    p.counts == vec![1, 6, 10, 5] && p.poly == expected && predicted == expected
}

fn e8_conjecture() -> bool {
    let w = parse_braid("(1 2)^5", 3).unwrap();
    let (_, full) = jaeger_homfly(&w, DEFAULT_BUDGET)
        .unwrap()
        .unnormalized
        .lowest_a_part()
        .unwrap();
    let table = NhVector::local(vec![7, 21, 21, 8, 1]);
    let right = predicted_pinf(&table, 1);
    full == right && right == z(&[(-1, 7), (1, 21), (3, 21), (5, 8), (7, 1)])
}

fn a_sweep() -> bool {
    (1..=10).all(|n| {
        let w = BraidWord::torus(2, n + 1).unwrap();
        let m = find_model(&format!("A{n}")).unwrap();
        let (_, full) = jaeger_homfly(&w, DEFAULT_BUDGET)
            .unwrap()
            .unnormalized
            .lowest_a_part()
            .unwrap();
        full == predicted_pinf(&ade_nh(AdeType::A(n)), m.branches)
    })
}

fn transform_properties() -> bool {
    let mut rng = StdRng::seed_from_u64(2024);
    let round_trip = (0..500).all(|_| {
        let g = rng.gen_range(0..=8usize);
        let order = g + rng.gen_range(0..=4usize);
        let coeffs: Vec<i64> = (0..=order).map(|_| rng.gen_range(-9..=9)).collect();
        let f = TruncatedSeries::new(coeffs.clone(), order);
        let n = solve_global(g, &f).unwrap();
        let gi = g as i64;
        series_from_nh(&n, order).unwrap() == f
            && n.get(gi) == BigInt::from(coeffs[0])
            && (order == 0 || n.get(gi - 1) == BigInt::from(coeffs[1] + (2 * gi - 2) * coeffs[0]))
    });
    let node = NhVector::local(vec![1, 1]);
    let nodal = (0..=10i64).all(|g| {
        (0..=g).all(|gt| {
            let n = combine_local(gt as usize, &vec![node.clone(); (g - gt) as usize]);
            (0..=g).all(|h| n.get(h) == binomial(g - gt, g - h))
        })
    });
    round_trip && nodal
}

fn markov() -> bool {
    let mut rng = StdRng::seed_from_u64(99);
    (0..100).all(|_| {
        let strands = rng.gen_range(2..=4);
        let len = rng.gen_range(0..=10);
        let letters = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..strands);
                if rng.gen_bool(0.5) {
                    Letter::pos(i)
                } else {
                    Letter::neg(i)
                }
            })
            .collect();
        let w = BraidWord::new(strands, letters).unwrap();
        markov_checks(&w, DEFAULT_BUDGET).unwrap().ok()
    })
}

fn degree_bound() -> bool {
    catalog().iter().all(|m| match degree_bound_check(m) {
        Some(r) => r.ok,
        // torus germs beyond ADE carry no local Hilbert series in the catalog
        None => matches!(m.germ, Germ::Torus { .. }),
    })
}

#[test]
fn acceptance() {
    let s = Some(Duration::from_secs(1));
    let results = [
        criterion(
            1,
            "ADE tables via truncation and closed formulas",
            s,
            ade_tables,
        ),
        criterion(
            2,
            "staircase counts equal closed forms to order 30",
            Some(Duration::from_secs(5)),
            model_series_agree,
        ),
        criterion(
            3,
            "Dynkin independent sets match ade_nh and brute force",
            None,
            dynkin_cross_check,
        ),
        criterion(
            4,
            "trefoil HOMFLY, P_inf and admissible sequences",
            s,
            trefoil,
        ),
        criterion(5, "T(3,4) counts and P_inf equal the E6 prediction", s, t34),
        criterion(
            6,
            "E8: P_inf of (1 2)^5 equals the table prediction",
            Some(Duration::from_secs(10)),
            e8_conjecture,
        ),
        criterion(
            7,
            "A-family sweep n <= 10",
            Some(Duration::from_secs(30)),
            a_sweep,
        ),
        criterion(
            8,
            "transform round trip, triangularity, nodal binomials",
            None,
            transform_properties,
        ),
        criterion(9, "Markov invariance on 100 random words", None, markov),
        criterion(
            10,
            "degree bound for every catalog germ",
            None,
            degree_bound,
        ),
    ];
    let passed = results.iter().filter(|p| **p).count();
    let _ = writeln!(
        std::io::stdout(),
        "acceptance: {passed}/{} criteria passed",
        results.len()
    );
    assert!(results.iter().all(|p| *p));
}
