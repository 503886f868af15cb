mod common;

use common::{exact_centroid, reference_22_parts, to_aggregate, OraclePart, COMPOSITION_TABLE};
use fuzzyzoom::fuzzy::{
    aggregate, clip, defuzz_cog, defuzz_discrete_cog, defuzz_fom, defuzz_mom, defuzzify,
    mom_of_samples, sample, Degree, FuzzyError, MembershipFunction, Method, SampledSet, Universe,
};
use proptest::prelude::*;

fn zoom_universe() -> Universe {
    Universe::new(-10.0, 10.0).unwrap()
}

#[test]
fn oracle_matches_closed_forms() {
    let t = [OraclePart::tri(0.0, 2.0, 6.0, 1.0)];
    assert!((exact_centroid(&t, -10.0, 10.0) - 8.0 / 3.0).abs() < 1e-12);
    let r = [OraclePart::trap(-10.0, -10.0, -8.0, -6.0, 1.0)];
    assert!((exact_centroid(&r, -10.0, 10.0) + 76.0 / 9.0).abs() < 1e-12);
    // Clipped triangle tri(0,2,6) at h: trapezoid (0, 2h, 6-4h, 6) of height h.
    let h = 0.5;
    let (a, b, c, d) = (0.0, 2.0 * h, 6.0 - 4.0 * h, 6.0);
    let area = h * ((d - a) + (c - b)) / 2.0;
    let m = h * ((d * d + c * d + c * c) - (a * a + a * b + b * b)) / 6.0;
    let clipped = [OraclePart::tri(0.0, 2.0, 6.0, h)];
    assert!((exact_centroid(&clipped, -10.0, 10.0) - m / area).abs() < 1e-12);
}

#[test]
fn reference_composition_centroid() {
    let parts = reference_22_parts();
    let expected = exact_centroid(&parts, -10.0, 10.0);
    assert!((expected - 1.75).abs() < 0.01, "oracle {expected}");
    let set = to_aggregate(zoom_universe(), &parts);
    let got = defuzz_cog(&set, 4001).unwrap();
    assert!((got - expected).abs() < 1e-3, "{got} vs {expected}");
}

#[test]
fn composition_table_samples() {
    // Sampling the composed set at the tabulated z-values reproduces the
    // membership column, except z = 1.6 where default = tri(-2,0,2) gives 0.2.
    let parts = [
        OraclePart::tri(-2.0, 0.0, 2.0, 0.24),
        OraclePart::tri(0.0, 2.0, 6.0, 0.2),
    ];
    let set = to_aggregate(zoom_universe(), &parts);
    for (z, mu) in COMPOSITION_TABLE {
        let expected = if z == 1.6 { 0.2 } else { mu };
        let got = set.membership(z).value();
        assert!((got - expected).abs() < 1e-12, "z={z}: {got} vs {expected}");
    }
    assert_eq!(set.membership(3.0).value(), 0.2);
}

#[test]
fn discrete_cog_of_composition_table() {
    let s = SampledSet::from_pairs(&COMPOSITION_TABLE).unwrap();
    let z = defuzz_discrete_cog(&s).unwrap();
    // Σμ = 2.44, Σzμ = 4.224.
    assert!((z - 4.224 / 2.44).abs() < 1e-12);
    assert!((z - 1.731).abs() < 0.001);
}

#[test]
fn mom_of_plateau_rows() {
    let rows: Vec<(f64, f64)> = COMPOSITION_TABLE
        .iter()
        .copied()
        .filter(|&(_, mu)| mu == 0.24)
        .collect();
    assert_eq!(rows.len(), 6);
    let m = mom_of_samples(&SampledSet::from_pairs(&rows).unwrap()).unwrap();
    assert!((m - 1.6 / 6.0).abs() < 1e-12);
    // The same rows over the whole table: the plateau is the argmax set.
    let all = mom_of_samples(&SampledSet::from_pairs(&COMPOSITION_TABLE).unwrap()).unwrap();
    assert!((all - 1.6 / 6.0).abs() < 1e-12);
}

#[test]
fn fom_of_reference_composition() {
    let set = to_aggregate(zoom_universe(), &reference_22_parts());
    let fom = defuzz_fom(&set, 20001).unwrap();
    assert!((fom + 2.0 * (1.0 - 2.2 / 9.2)).abs() < 0.01, "{fom}");
    assert!((fom + 1.52).abs() < 0.01);
    let mom = defuzz_mom(&set, 4001).unwrap();
    assert!(mom.abs() < 0.01, "{mom}");
}

#[test]
fn clip_at_table_point() {
    let mf = MembershipFunction::triangular(-2.0, 0.0, 2.0).unwrap();
    let s = clip(mf, Degree::new(0.24).unwrap(), zoom_universe());
    assert_eq!(s.membership(0.0).value(), 0.24);
}

// ---- property suites ----

fn arb_mf() -> impl Strategy<Value = MembershipFunction> {
    let tri = prop::collection::vec(-10.0f64..10.0, 3).prop_filter_map("degenerate", |mut v| {
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        MembershipFunction::triangular(v[0], v[1], v[2]).ok()
    });
    let trap = prop::collection::vec(-10.0f64..10.0, 4).prop_filter_map("degenerate", |mut v| {
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        MembershipFunction::trapezoidal(v[0], v[1], v[2], v[3]).ok()
    });
    prop_oneof![tri, trap]
}

fn oracle_part(mf: &MembershipFunction, cap: f64) -> OraclePart {
    match *mf {
        MembershipFunction::Triangular { a, b, c } => OraclePart::tri(a, b, c, cap),
        MembershipFunction::Trapezoidal { a, b, c, d } => OraclePart::trap(a, b, c, d, cap),
    }
}

fn arb_parts() -> impl Strategy<Value = Vec<(MembershipFunction, f64)>> {
    prop::collection::vec((arb_mf(), 0.05f64..=1.0), 1..5)
}

fn build(parts: &[(MembershipFunction, f64)]) -> fuzzyzoom::fuzzy::AggregatedSet {
    let u = zoom_universe();
    aggregate(
        u,
        parts
            .iter()
            .map(|(mf, cap)| clip(*mf, Degree::new(*cap).unwrap(), u))
            .collect(),
    )
    .unwrap()
}

/// Parts wide enough that coarse grids still see them.
fn wide(parts: &[(MembershipFunction, f64)]) -> bool {
    parts.iter().all(|(mf, _)| {
        let (lo, hi) = mf.support();
        hi - lo > 0.5
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha, ..ProptestConfig::default() })]

    #[test]
    fn degrees_bounded_and_zero_outside_support(mf in arb_mf(), x in -1e3f64..1e3) {
        let mu = mf.eval(x).value();
        prop_assert!((0.0..=1.0).contains(&mu));
        let (lo, hi) = mf.support();
        if x < lo || x > hi {
            prop_assert_eq!(mu, 0.0);
        }
    }

    #[test]
    fn membership_is_continuous(mf in arb_mf(), x in -12.0f64..12.0) {
        // Lipschitz bound from the steepest edge.
        let p = mf.params();
        let min_edge = p.windows(2).map(|w| w[1] - w[0]).filter(|d| *d > 0.0).fold(f64::INFINITY, f64::min);
        let eps = 1e-7;
        let jump = (mf.eval(x + eps).value() - mf.eval(x).value()).abs();
        // Degenerate (vertical) edges are shoulders at the universe boundary; skip exact hits.
        let on_vertical = p.windows(2).any(|w| w[0] == w[1] && (x..=x + eps).contains(&w[0]));
        if !on_vertical {
            prop_assert!(jump <= eps / min_edge * (1.0 + 1e-6) + 1e-12, "jump {}", jump);
        }
    }

    #[test]
    fn clip_identity_zero_and_monotone(mf in arb_mf(), s1 in 0.0f64..=1.0, s2 in 0.0f64..=1.0, x in -10.0f64..10.0) {
        let u = zoom_universe();
        prop_assert_eq!(clip(mf, Degree::ONE, u).membership(x), mf.eval(x));
        prop_assert_eq!(clip(mf, Degree::ZERO, u).membership(x), Degree::ZERO);
        let (lo, hi) = if s1 <= s2 { (s1, s2) } else { (s2, s1) };
        let a = clip(mf, Degree::new(lo).unwrap(), u).membership(x);
        let b = clip(mf, Degree::new(hi).unwrap(), u).membership(x);
        prop_assert!(a <= b);
        prop_assert_eq!(a.value(), mf.eval(x).value().min(lo));
    }

    #[test]
    fn aggregate_permutation_and_duplication_invariant(
        parts in arb_parts(),
        seed in any::<u64>(),
        x in -10.0f64..10.0,
    ) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let base = build(&parts);
        let mut shuffled = parts.clone();
        shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let mut doubled = parts.clone();
        doubled.extend(parts.iter().copied());
        prop_assert_eq!(build(&shuffled).membership(x), base.membership(x));
        prop_assert_eq!(build(&doubled).membership(x), base.membership(x));
        // Associativity: max of the aggregate of a prefix and the rest.
        let k = parts.len() / 2;
        let left = build(&parts[..k]).membership(x);
        let right = build(&parts[k..]).membership(x);
        prop_assert_eq!(left.max(right), base.membership(x));
    }

    #[test]
    fn defuzzified_values_stay_in_support(parts in arb_parts(), method_idx in 0usize..4) {
        prop_assume!(wide(&parts));
        let set = build(&parts);
        let (lo, hi) = set.support().unwrap();
        let z = defuzzify(&set, Method::ALL[method_idx], 2001).unwrap();
        prop_assert!(z >= lo - 1e-9 && z <= hi + 1e-9, "{} not in [{}, {}]", z, lo, hi);
        prop_assert!((-10.0..=10.0).contains(&z));
    }

    #[test]
    fn cog_matches_exact_oracle(parts in arb_parts()) {
        prop_assume!(wide(&parts));
        let set = build(&parts);
        let oracle: Vec<OraclePart> = parts.iter().map(|(mf, cap)| oracle_part(mf, *cap)).collect();
        let expected = exact_centroid(&oracle, -10.0, 10.0);
        let got = defuzz_cog(&set, 4001).unwrap();
        prop_assert!((got - expected).abs() < 1e-3, "{} vs {}", got, expected);
    }

    #[test]
    fn cog_quadrature_converges(parts in arb_parts()) {
        prop_assume!(wide(&parts));
        let set = build(&parts);
        let oracle: Vec<OraclePart> = parts.iter().map(|(mf, cap)| oracle_part(mf, *cap)).collect();
        let exact = exact_centroid(&oracle, -10.0, 10.0);
        let err = |n: usize| (defuzz_cog(&set, n).unwrap() - exact).abs();
        // Grid aliasing makes single steps non-monotone; the envelope shrinks.
        let coarse = err(201).max(err(251));
        let fine = err(8001).max(err(8051));
        prop_assert!(fine <= coarse + 1e-9, "{} then {}", coarse, fine);
        prop_assert!(fine < 1e-3);
    }

    #[test]
    fn discrete_cog_converges_to_cog(parts in arb_parts()) {
        prop_assume!(wide(&parts));
        let set = build(&parts);
        let dense = defuzz_discrete_cog(&sample(&set, 10_000).unwrap()).unwrap();
        let cog = defuzz_cog(&set, 10_000).unwrap();
        prop_assert!((dense - cog).abs() < 1e-2);
    }

    #[test]
    fn cap_scaling_leaves_single_symmetric_centroid(
        center in -6.0f64..6.0,
        half in 0.5f64..3.0,
        plateau in 0.0f64..1.0,
        h in 0.05f64..=1.0,
        lambda in 0.05f64..=1.0,
    ) {
        let u = zoom_universe();
        let mf = if plateau == 0.0 {
            MembershipFunction::triangular(center - half, center, center + half).unwrap()
        } else {
            MembershipFunction::trapezoidal(center - half - plateau, center - plateau, center + plateau, center + half + plateau).unwrap()
        };
        let one = |cap: f64| aggregate(u, vec![clip(mf, Degree::new(cap).unwrap(), u)]).unwrap();
        let a = defuzz_cog(&one(h), 4001).unwrap();
        let b = defuzz_cog(&one(h * lambda), 4001).unwrap();
        prop_assert!((a - center).abs() < 1e-3 && (b - center).abs() < 1e-3, "{} {} {}", a, b, center);
        prop_assert!((a - b).abs() < 1e-3);
    }

    #[test]
    fn unique_maximizer_mom_equals_fom(peak in -8.0f64..8.0, left in 0.5f64..2.0, right in 0.5f64..2.0) {
        let u = zoom_universe();
        let mf = MembershipFunction::triangular(peak - left, peak, peak + right).unwrap();
        let set = aggregate(u, vec![clip(mf, Degree::ONE, u)]).unwrap();
        let spacing = 20.0 / 4000.0;
        let mom = defuzz_mom(&set, 4001).unwrap();
        let fom = defuzz_fom(&set, 4001).unwrap();
        prop_assert!((mom - peak).abs() <= spacing && (fom - peak).abs() <= spacing);
        prop_assert!((mom - fom).abs() <= spacing);
    }
}

#[test]
fn empty_samples_are_an_error() {
    let s = SampledSet::from_pairs(&[(0.0, 0.0)]).unwrap();
    assert_eq!(mom_of_samples(&s), Err(FuzzyError::EmptyOutput));
    assert_eq!(defuzz_discrete_cog(&s), Err(FuzzyError::EmptyOutput));
}
