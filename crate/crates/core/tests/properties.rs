use pantsbound::hplane::{build_right_hexagon, HPoint, Isometry, Region};
use pantsbound::hyptrig::{collar_width, hexagon_opposite, pentagon_opposite, square_side_for_cuff};
use pantsbound::pants::{diameter_bound, seam_lengths, CuffTriple};
use pantsbound::quadlemma::{random_config, verify_lemma, Arc, ChordConfig, Verdict};
use pantsbound::surfaces::{build_square_grid, scheme_mixed, scheme_qch, scheme_reflection, Label, Window};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #[test]
    fn collar_identity_holds(l in 0.01f64..20.0) {
        let v = collar_width(l).unwrap().sinh() * (l / 2.0).sinh();
        prop_assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn hexagon_opposite_is_symmetric(a in 0.1f64..5.0, b in 0.1f64..5.0, c in 0.1f64..5.0) {
        let x = hexagon_opposite(a, b, c).unwrap();
        let y = hexagon_opposite(b, a, c).unwrap();
        prop_assert!((x - y).abs() <= 1e-12 * x.max(1.0));
    }

    #[test]
    fn built_hexagon_has_right_angles_and_sides(a in 0.2f64..4.0, b in 0.2f64..4.0, c in 0.2f64..4.0) {
        let corners = build_right_hexagon(a, b, c).unwrap();
        let region = Region::geodesic(corners.to_vec()).unwrap();
        for k in 0..6 {
            prop_assert!((region.corner_angle(k) - std::f64::consts::FRAC_PI_2).abs() < 1e-7);
        }
        let lens: Vec<f64> = (0..6).map(|k| region.side_length(k)).collect();
        prop_assert!((lens[0] - a).abs() < 1e-7 && (lens[2] - b).abs() < 1e-7 && (lens[4] - c).abs() < 1e-7);
        prop_assert!((lens[1] - hexagon_opposite(a, b, c).unwrap()).abs() < 1e-7);
    }

    #[test]
    fn square_side_inverts_the_hole(cuff in 0.1f64..10.0) {
        let b = square_side_for_cuff(cuff).unwrap();
        let c = pentagon_opposite(b, b).unwrap().side().unwrap();
        prop_assert!((4.0 * c - cuff).abs() < 1e-9);
    }

    #[test]
    fn thick_bound_exceeds_longest_seam(l1 in 0.5f64..4.0, l2 in 0.5f64..4.0, l3 in 0.5f64..4.0) {
        let cuffs = CuffTriple::new(l1, l2, l3).unwrap();
        let seams = seam_lengths(&cuffs).unwrap();
        let bound = diameter_bound(&cuffs).unwrap();
        prop_assert!(seams.iter().all(|&s| s < bound));
    }

    #[test]
    fn width_is_linear_in_m(b in 0.9f64..3.0, m in 1u32..50) {
        prop_assert_eq!(build_square_grid(b, m).unwrap().width, 2.0 * m as f64 * b);
    }

    #[test]
    fn lemma_agrees_with_separation_oracle(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let config = random_config(&mut rng, 8);
        let faces = config.path_exists(Arc::A, Arc::C).connected;
        prop_assert_eq!(faces, config.path_exists_by_separation(Arc::A, Arc::C));
        prop_assert!(!matches!(verify_lemma(&config), Verdict::Counterexample));
    }

    #[test]
    fn chord_config_text_round_trips(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let config = random_config(&mut rng, 6);
        let back: ChordConfig = config.to_string().parse().unwrap();
        prop_assert_eq!(back, config);
    }

    #[test]
    fn schemes_are_involutions(r in 1i64..12, i in -20i64..20, j in -20i64..20) {
        let w = Window::centered(r);
        for scheme in [scheme_qch(), scheme_reflection(), scheme_mixed()] {
            prop_assert!(scheme.is_involution_on(&w));
        }
        prop_assert_eq!(Label::new(i, j).to_string().parse::<Label>().unwrap(), Label::new(i, j));
    }

    #[test]
    fn isometries_preserve_distance(
        r1 in 0.0f64..4.0, a1 in -3.2f64..3.2, r2 in 0.0f64..4.0, a2 in -3.2f64..3.2,
        t in -3.0f64..3.0, theta in -3.2f64..3.2, mirror in any::<bool>(),
    ) {
        let (p, q) = (HPoint::polar(r1, a1), HPoint::polar(r2, a2));
        let mut g = Isometry::rotation(theta) * Isometry::boost(t);
        if mirror {
            g = g * Isometry::reflection();
        }
        let (d, e) = (p.dist(&q).unwrap(), g.apply(&p).dist(&g.apply(&q)).unwrap());
        prop_assert!((d - e).abs() < 1e-8 * d.max(1.0), "{d} vs {e}");
    }
}
