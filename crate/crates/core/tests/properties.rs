use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use sphere_sets::analysis::{adjacency_matrices, adjacency_partition_holds, k_coefficients, zonal_bracket, zonal_psd_check};
use sphere_sets::bounds::{
    equiangular_max_bound, harmonic_bound, s_distance_bound, split_bound, split_envelope, two_distance_bound,
    FactTable,
};
use sphere_sets::config::{
    derive_set, generate_named, generate_simplex_face_centers, inner_product_spectrum, lift_to_equiangular,
    negate_points, parse_configuration, switch_to_common_product, write_configuration, Configuration, NamedFamily,
    PointConfiguration,
};
use sphere_sets::extremal::{certify_extremal, srg_parameters_from_a, srg_spectrum};
use sphere_sets::gegenbauer::{gegenbauer_eval, gegenbauer_eval_recurrence, leading_coefficient, GegenbauerSpec, ZonalCombination};
use sphere_sets::linalg::{is_psd, nullity_at, rank, SymMatrix};
use sphere_sets::scalar::{int, rat, Rational, Scalar};

fn exact(family: NamedFamily) -> PointConfiguration<Rational> {
    match generate_named(family) {
        Configuration::Exact(c) => c,
        Configuration::Floating(_) => panic!("{family} is floating"),
    }
}

fn sym_matrix() -> impl Strategy<Value = SymMatrix<Rational>> {
    (1usize..7).prop_flat_map(|n| {
        proptest::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
            SymMatrix::from_fn(n, 0.0, |i, j| {
                let (a, b) = if i <= j { (i, j) } else { (j, i) };
                int(v[a * n + b])
            })
        })
    })
}

/// Distinct rationals in (-1, 1).
fn betas(max_s: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::btree_set((-59i64..=59, 2i64..=60), 1..=max_s).prop_filter_map("repeated value", |set| {
        let mut out: Vec<Rational> = Vec::new();
        for (p, q) in set {
            let v = rat(p, q);
            if v.numer().abs() >= *v.denom() || out.contains(&v) {
                return None;
            }
            out.push(v);
        }
        Some(out)
    })
}

fn odd_a() -> impl Strategy<Value = u64> {
    (1u64..=49).prop_map(|k| 2 * k + 1)
}

fn simplex(n: usize, s: usize) -> PointConfiguration<Rational> {
    generate_simplex_face_centers(n, s).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity_is_order(m in sym_matrix()) {
        prop_assert_eq!(rank(&m) + nullity_at(&m, &Rational::zero()), m.order());
    }

    #[test]
    fn nullity_is_permutation_invariant(m in sym_matrix(), seed in any::<u64>(), shift in -3i64..=3) {
        let n = m.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        let lambda = int(shift);
        prop_assert_eq!(nullity_at(&m, &lambda), nullity_at(&m.permuted(&perm), &lambda));
    }

    #[test]
    fn simplex_gram_is_psd_with_bounded_rank(n in 2usize..8, s in 1usize..4) {
        prop_assume!(s <= n);
        let cfg = simplex(n, s);
        let g = cfg.gram();
        prop_assert!(is_psd(&g));
        prop_assert!(rank(&g) <= n);
    }

    #[test]
    fn low_degree_closed_forms(n in 2u32..50, p in -24i64..=24) {
        let t = rat(p, 12);
        let nn = int(i64::from(n));
        let g2 = gegenbauer_eval(GegenbauerSpec::new(n, 2).unwrap(), &t);
        let g3 = gegenbauer_eval(GegenbauerSpec::new(n, 3).unwrap(), &t);
        prop_assert_eq!(g2, (&nn * &t * &t - int(1)) / (&nn - int(1)));
        prop_assert_eq!(g3, ((&nn + int(2)) * t.pow(3) - int(3) * &t) / (&nn - int(1)));
    }

    #[test]
    fn normalization_parity_and_recurrence(n in 2u32..50, k in 0u32..10, p in -24i64..=24) {
        let spec = GegenbauerSpec::new(n, k).unwrap();
        let t = rat(p, 12);
        prop_assert!(gegenbauer_eval(spec, &Rational::one()).is_one());
        let sign = if k % 2 == 0 { int(1) } else { int(-1) };
        prop_assert_eq!(gegenbauer_eval(spec, &-t.clone()), sign * gegenbauer_eval(spec, &t));
        prop_assert_eq!(gegenbauer_eval(spec, &t), gegenbauer_eval_recurrence(spec, &t));
    }

    #[test]
    fn interpolation_identities(b in betas(6), tau0 in 1i64..=3) {
        let tau0 = int(tau0);
        let kc = k_coefficients(&tau0, &b, 0.0).unwrap();
        for d in 0..b.len() as u32 {
            prop_assert!(kc.power_sum(d).is_zero());
        }
        let prod = b.iter().fold(Rational::one(), |acc, x| acc * (&tau0 - x));
        prop_assert_eq!(kc.power_sum(b.len() as u32), prod);
    }

    #[test]
    fn general_and_two_distance_bounds_agree(n in 2u64..200, b in betas(2)) {
        prop_assume!(b.len() == 2);
        let (alpha, beta) = if b[0] > b[1] { (&b[0], &b[1]) } else { (&b[1], &b[0]) };
        let general = s_distance_bound(n, &[alpha.clone(), beta.clone()], false).unwrap();
        let two = two_distance_bound(n, alpha, beta, false).unwrap();
        prop_assert_eq!(general.exact, two.exact);
        let general = s_distance_bound(n, &[alpha.clone(), beta.clone()], true).unwrap();
        let two = two_distance_bound(n, alpha, beta, true).unwrap();
        prop_assert_eq!(general.exact, two.exact);
    }

    #[test]
    fn split_bound_below_envelope(a in odd_a(), m in prop::sample::select(vec![1u64, 3, 10])) {
        let n = m * a * a;
        let v = split_bound(n, a).unwrap().value.unwrap();
        prop_assert!(Rational::from_integer(v) <= split_envelope(n, a));
    }

    #[test]
    fn first_case_dominates(n in 359u64..2000) {
        let r = equiangular_max_bound(n, &FactTable::shipped()).unwrap();
        let first = &r.cases[0].1;
        prop_assert!(r.cases[1..].iter().all(|(_, v)| v < first), "{:?}", r.cases);
        prop_assert_eq!(r.value.as_ref(), Some(first));
    }

    #[test]
    fn srg_parameters(a in odd_a()) {
        let p = srg_parameters_from_a(a).unwrap();
        prop_assert!(p.satisfies_identity());
        prop_assert_eq!(srg_spectrum(&p, a).unwrap().d1, a * a - 3);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn adjacency_partition(n in 2usize..8, s in 1usize..4) {
        prop_assume!(s <= n);
        let cfg = simplex(n, s);
        let spectrum = inner_product_spectrum(&cfg).unwrap();
        prop_assert!(adjacency_partition_holds(cfg.len(), &adjacency_matrices(&cfg, &spectrum)));
    }

    #[test]
    fn zonal_matrices_are_psd(n in 2usize..6, s in 1usize..3) {
        prop_assume!(s <= n);
        let report = zonal_psd_check(&simplex(n, s), 6);
        prop_assert!(report.pass(), "{:?}", report.first_failure());
    }

    #[test]
    fn bracket_identity(n in 3usize..9, s in 2usize..4) {
        prop_assume!(s <= n);
        let cfg = simplex(n, s);
        let spectrum = inner_product_spectrum(&cfg).unwrap();
        let dim = cfg.span_dimension().max(2) as u32;
        let kc = k_coefficients(&Rational::one(), spectrum.values(), 0.0).unwrap();
        let s_val = spectrum.s() as u32;
        let bracket = zonal_bracket(&kc, &ZonalCombination::pure(dim, s_val).unwrap());
        let expected = spectrum
            .values()
            .iter()
            .fold(leading_coefficient(dim, s_val), |acc, b| acc * (Rational::one() - b));
        prop_assert_eq!(bracket, expected);
    }

    #[test]
    fn size_within_applicable_bounds(n in 2usize..9, s in 1usize..4) {
        prop_assume!(s <= n);
        let cfg = simplex(n, s);
        let spectrum = inner_product_spectrum(&cfg).unwrap();
        let size = BigInt::from(cfg.len());
        let dim = cfg.span_dimension().max(2) as u64;
        let harmonic = harmonic_bound(dim, spectrum.s() as u64).unwrap();
        prop_assert!(harmonic.value.unwrap() >= size);
        let general = s_distance_bound(dim, spectrum.values(), false).unwrap();
        if let Some(v) = general.value {
            prop_assert!(v >= size);
        }
    }

    #[test]
    fn derived_spectrum_map(n in 3usize..8, base in 0usize..8) {
        let cfg = simplex(n, 2);
        let base = base % cfg.len();
        let spectrum = inner_product_spectrum(&cfg).unwrap();
        for alpha in spectrum.values() {
            let Ok(derived) = derive_set(&cfg, base, alpha) else { continue };
            if derived.len() < 2 {
                continue;
            }
            let a2 = alpha * alpha;
            let mapped: Vec<Rational> = spectrum.values().iter().map(|b| (b - &a2) / (Rational::one() - &a2)).collect();
            for v in inner_product_spectrum(&derived).unwrap().values() {
                prop_assert!(mapped.contains(v), "{v} not in {mapped:?}");
            }
        }
    }

    #[test]
    fn switching(base in 0usize..28, flips in proptest::collection::btree_set(0usize..28, 0..10)) {
        let lines = exact(NamedFamily::Lines28);
        let switched = switch_to_common_product(&lines, base).unwrap();
        prop_assert_eq!(switched.len(), lines.len());
        let values = inner_product_spectrum(&switched).unwrap().values().to_vec();
        prop_assert_eq!(values, inner_product_spectrum(&lines).unwrap().values().to_vec());
        for j in (0..28).filter(|&j| j != base) {
            prop_assert_eq!(switched.inner(j, base), rat(1, 3));
        }
        let flips: Vec<usize> = flips.into_iter().collect();
        let twice = negate_points(&negate_points(&lines, &flips).unwrap(), &flips).unwrap();
        prop_assert_eq!(twice.gram(), lines.gram());
    }

    #[test]
    fn lifting(n in 3usize..7) {
        let cfg = simplex(n, 2);
        let (lifted, params) = lift_to_equiangular(&cfg).unwrap();
        prop_assert_eq!(lifted.len(), cfg.len());
        for i in 0..lifted.len() {
            prop_assert!(lifted.inner(i, i).is_one());
        }
        let values = inner_product_spectrum(&lifted).unwrap().values().to_vec();
        let gamma = params.gamma.clone();
        prop_assert_eq!(values.len(), 2);
        prop_assert!(values.contains(&gamma) && values.contains(&-gamma));
    }

    #[test]
    fn round_trip(n in 2usize..8, s in 1usize..4) {
        prop_assume!(s <= n);
        let cfg: Configuration = simplex(n, s).into();
        let text = write_configuration(&cfg);
        let back = parse_configuration(&text, 1e-9).unwrap();
        prop_assert_eq!(write_configuration(&back), text);
        prop_assert_eq!(back, cfg);
    }
}

#[test]
fn simplex_edge_midpoints() {
    for n in 3..=30usize {
        let cfg = simplex(n, 2);
        assert_eq!(cfg.len(), n * (n + 1) / 2);
        let m = n as i64;
        let mut expected = vec![rat(m - 3, 2 * m - 2), rat(-2, m - 1)];
        expected.sort();
        expected.dedup();
        let mut got = inner_product_spectrum(&cfg).unwrap().values().to_vec();
        got.sort();
        assert_eq!(got, expected, "n = {n}");
    }
}

#[test]
fn lines28_is_tight() {
    let lines = exact(NamedFamily::Lines28);
    let spectrum = inner_product_spectrum(&lines).unwrap();
    assert_eq!(spectrum.equiangular_alpha(0.0), Some(rat(1, 3)));
    assert_eq!(lines.span_dimension(), 7);
    assert_eq!(lines.len(), 7 * 8 / 2);
}

#[test]
fn certificate_rank_matches_angle() {
    let cert = certify_extremal(&exact(NamedFamily::Lines28), 3);
    assert!(cert.pass());
    assert_eq!(cert.original_rank, Some(9 - 2));
}

#[test]
fn named_families_round_trip() {
    for f in NamedFamily::ALL {
        let cfg = generate_named(f);
        let text = write_configuration(&cfg);
        let back = parse_configuration(&text, 1e-9).unwrap();
        if cfg.is_exact() {
            assert_eq!(back, cfg, "{f}");
        }
        assert_eq!(back.len(), cfg.len());
    }
}

#[test]
fn floating_regime_psd() {
    for f in [NamedFamily::Pentagon, NamedFamily::Icosahedron] {
        let Configuration::Floating(cfg) = generate_named(f) else {
            panic!("{f} is exact")
        };
        assert!(zonal_psd_check(&cfg, 6).pass(), "{f}");
        let spectrum = inner_product_spectrum(&cfg).unwrap();
        assert!(adjacency_partition_holds(cfg.len(), &adjacency_matrices(&cfg, &spectrum)));
        let kc = k_coefficients(spectrum.tau0(), spectrum.values(), 1e-9).unwrap();
        assert!(kc.power_sum(0).abs() < 1e-9);
        let _ = f64::from_rational(&rat(1, 2));
    }
}
