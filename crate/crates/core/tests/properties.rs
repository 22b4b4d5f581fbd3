use multseq::hilbert::{self, HilbertConfig};
use multseq::newton::{self, NewtonPolyhedron, Pivot};
use multseq::oracle;
use multseq::{ExponentVector, MonomialIdeal, RingSpec};
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

fn ideal_strategy(
    max_dim: usize,
    max_exp: u32,
    max_gens: usize,
) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_dim)
        .prop_flat_map(move |d| {
            prop::collection::vec(prop::collection::vec(0..=max_exp, d), 1..=max_gens)
                .prop_map(move |pts| (d, pts))
        })
        .prop_filter_map("unit ideal", |(d, pts)| {
            let ring = RingSpec::with_dimension(d).unwrap();
            let pts = pts.into_iter().filter(|p| p.iter().any(|&e| e > 0));
            let ideal = MonomialIdeal::minimalize(pts.map(ExponentVector::new), &ring).unwrap();
            (!ideal.is_zero()).then_some(ideal)
        })
}

fn m_primary_strategy() -> impl Strategy<Value = MonomialIdeal> {
    (1..=3usize).prop_flat_map(|d| {
        (
            prop::collection::vec(1u32..=4, d),
            prop::collection::vec(prop::collection::vec(0u32..=3, d), 0..4),
        )
            .prop_map(move |(pure, extra)| {
                let ring = RingSpec::with_dimension(d).unwrap();
                let mut pts: Vec<ExponentVector> = pure
                    .iter()
                    .enumerate()
                    .map(|(k, &e)| ExponentVector::unit(d, k).checked_scale(e).unwrap())
                    .collect();
                pts.extend(
                    extra
                        .into_iter()
                        .filter(|p| p.iter().any(|&e| e > 0))
                        .map(ExponentVector::new),
                );
                MonomialIdeal::minimalize(pts, &ring).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        rng_seed: RngSeed::Fixed(0x5eed),
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn generators_form_an_antichain(ideal in ideal_strategy(4, 5, 6)) {
        let g = ideal.gens();
        for a in g {
            for b in g {
                prop_assert!(a == b || !a.divides(b));
            }
        }
        prop_assert!(g.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn product_and_sum_laws(a in ideal_strategy(3, 4, 4), b in ideal_strategy(3, 4, 4)) {
        prop_assume!(a.dim() == b.dim());
        let ab = a.product(&b).unwrap();
        prop_assert_eq!(&ab, &b.product(&a).unwrap());
        let s = a.sum(&b).unwrap();
        prop_assert!(s.contains_ideal(&a).unwrap() && s.contains_ideal(&b).unwrap());
        prop_assert!(a.contains_ideal(&ab).unwrap() && b.contains_ideal(&ab).unwrap());
        prop_assert_eq!(a.power(2).unwrap(), a.product(&a).unwrap());
    }

    #[test]
    fn newton_polyhedron_scales(ideal in ideal_strategy(3, 4, 5), k in 2u32..4) {
        let np = NewtonPolyhedron::of(&ideal).unwrap();
        let npk = NewtonPolyhedron::of(&ideal.power(k).unwrap()).unwrap();
        let mut scaled: Vec<ExponentVector> =
            np.vertices().iter().map(|v| v.checked_scale(k).unwrap()).collect();
        scaled.sort();
        let mut got = npk.vertices().to_vec();
        got.sort();
        prop_assert_eq!(got, scaled);
        let d = ideal.dim() as u32;
        prop_assert_eq!(
            newton::mon_j_mult(&ideal.power(k).unwrap()).unwrap(),
            newton::mon_j_mult(&ideal).unwrap() * u64::from(k).pow(d)
        );
        prop_assert_eq!(npk.analytic_spread(), np.analytic_spread());
    }

    #[test]
    fn vertices_are_generators_and_satisfy_facets(ideal in ideal_strategy(4, 4, 6)) {
        let np = NewtonPolyhedron::of(&ideal).unwrap();
        for v in np.vertices() {
            prop_assert!(ideal.gens().contains(v));
        }
        for g in ideal.gens() {
            prop_assert!(np.contains_lattice_point(g).unwrap());
        }
        for (f, h) in np.facets().iter().enumerate() {
            prop_assert!(np.facet_vertices(f).all(|v| h.slack(v.as_slice()) == 0.into()));
        }
    }

    #[test]
    fn reduction_has_the_same_closure(ideal in ideal_strategy(3, 4, 5)) {
        let red = newton::mon_reduction(&ideal).unwrap();
        prop_assert!(ideal.contains_ideal(&red).unwrap());
        prop_assert_eq!(
            newton::integral_closure(&red).unwrap(),
            newton::integral_closure(&ideal).unwrap()
        );
        // J I^n = I^(n+1) for some small n
        let mut power = ideal.clone();
        let mut reduces = false;
        for _ in 0..8 {
            let next = power.product(&ideal).unwrap();
            if red.product(&power).unwrap() == next {
                reduces = true;
                break;
            }
            power = next;
        }
        prop_assert!(reduces);
    }

    #[test]
    fn closure_is_idempotent(ideal in ideal_strategy(3, 4, 5)) {
        let c = newton::integral_closure(&ideal).unwrap();
        prop_assert!(c.contains_ideal(&ideal).unwrap());
        prop_assert_eq!(newton::integral_closure(&c).unwrap(), c);
    }

    #[test]
    fn pivot_choice_does_not_change_volume(ideal in ideal_strategy(3, 4, 5)) {
        let np = NewtonPolyhedron::of(&ideal).unwrap();
        prop_assert_eq!(
            np.pyramid_volume_with(Pivot::LexMin).unwrap(),
            np.pyramid_volume_with(Pivot::LexMax).unwrap()
        );
    }

    #[test]
    fn m_primary_volume_is_the_classical_multiplicity(ideal in m_primary_strategy()) {
        // e(I) = lim d! * colength(I^n) / n^d; the Hilbert route gives c_d = e(I)
        // and only c_d is nonzero
        let e = newton::normalized_covolume(&ideal).unwrap();
        prop_assert_eq!(newton::mon_j_mult(&ideal).unwrap(), e);
        let seq = hilbert::multiplicity_sequence(&ideal).unwrap();
        let d = ideal.dim();
        prop_assert_eq!(seq.get(d), e);
        prop_assert!(seq.nonzero().all(|(i, _)| i == d));
        prop_assert_eq!(ideal.dim_quotient().unwrap(), 0);
    }

    #[test]
    fn hilbert_route_matches_polyhedral_route(ideal in ideal_strategy(3, 3, 4)) {
        let seq = hilbert::multiplicity_sequence(&ideal).unwrap();
        let d = ideal.dim();
        prop_assert_eq!(seq.get(d), newton::mon_j_mult(&ideal).unwrap());
        let lower = d - ideal.dim_quotient().unwrap();
        let spread = newton::mon_analytic_spread(&ideal).unwrap();
        for (i, _) in seq.nonzero() {
            prop_assert!(lower <= i && i <= spread);
        }
    }

    #[test]
    fn lambda_cell_matches_oracle(ideal in ideal_strategy(3, 3, 4), i in 0u32..4, j in 0u32..4) {
        prop_assert_eq!(
            hilbert::lambda_cell(&ideal, i, j).unwrap(),
            oracle::brute_lambda(&ideal, i, j).unwrap()
        );
    }

    #[test]
    fn spread_matches_growth_oracle(ideal in ideal_strategy(3, 3, 4)) {
        prop_assert_eq!(
            newton::mon_analytic_spread(&ideal).unwrap(),
            oracle::mu_growth_spread(&ideal, 12).unwrap()
        );
    }

    #[test]
    fn driver_is_deterministic(ideal in ideal_strategy(3, 3, 4)) {
        let cfg = HilbertConfig::default();
        let a = hilbert::multiplicity_sequence_with(&ideal, &cfg).unwrap();
        let b = hilbert::multiplicity_sequence_with(&ideal, &cfg).unwrap();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn cyclic_ideal_both_routes() {
    let ring = RingSpec::new(["a", "b", "c", "d"]).unwrap();
    let ideal = MonomialIdeal::minimalize(
        [[1, 2, 0, 0], [0, 1, 3, 0], [0, 0, 1, 4], [5, 0, 0, 1]].map(ExponentVector::from),
        &ring,
    )
    .unwrap();
    assert_eq!(newton::mon_j_mult(&ideal.power(3).unwrap()).unwrap(), 9639);
    assert_eq!(newton::mon_j_mult(&ideal).unwrap(), 119);
    assert_eq!(newton::mon_analytic_spread(&ideal).unwrap(), 4);
    let seq = hilbert::multiplicity_sequence(&ideal).unwrap();
    assert_eq!(seq.as_slice(), &[0, 0, 2, 48, 119]);
}
