use maxsurf_core::bjorling::{circle_identities, linear_solve, solve};
use maxsurf_core::fourier::fourier_analyze;
use maxsurf_core::interpolation::{
    build_surface, family_curve, modified_coeffs, scalar_residual, SpacelikeCurve, ROOT_THRESHOLD,
};
use maxsurf_core::{corpus, Annulus, Complex64, FourierSeries, HarmonicOnAnnulus, MaximalSurface, VerificationGrid};
use proptest::prelude::*;

fn complex(range: f64) -> impl Strategy<Value = Complex64> {
    (-range..range, -range..range).prop_map(|(re, im)| Complex64::new(re, im))
}

fn harmonic() -> impl Strategy<Value = HarmonicOnAnnulus> {
    (
        prop::collection::vec((complex(1.0), complex(1.0)), 7),
        complex(1.0),
    )
        .prop_map(|(pairs, log)| {
            let mut h = HarmonicOnAnnulus::zero(3, Annulus::punctured_plane()).with_log(log);
            for (i, (a, b)) in pairs.into_iter().enumerate() {
                let n = i as i64 - 3;
                h.set_holo(n, a);
                if n != 0 {
                    h.set_antiholo(n, b);
                }
            }
            h
        })
}

/// `z` with `0.6 ≤ |z| ≤ 1.6`.
fn annulus_point() -> impl Strategy<Value = Complex64> {
    (0.6f64..1.6, 0.0f64..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

fn laplacian(h: &HarmonicOnAnnulus, z: Complex64, step: f64) -> Complex64 {
    let f = |dx: f64, dy: f64| h.eval(z + Complex64::new(dx, dy)).unwrap();
    (f(step, 0.0) + f(-step, 0.0) + f(0.0, step) + f(0.0, -step) - f(0.0, 0.0) * 4.0) / (step * step)
}

/// Valid Björling data: `(m, phase, ŝ_1..ŝ_3, t̂_0..t̂_2)`.
fn bjorling_data() -> impl Strategy<Value = maxsurf_core::BjorlingData> {
    (
        prop_oneof![-2i64..=-1, 1i64..=2],
        0.0f64..std::f64::consts::TAU,
        prop::collection::vec(complex(0.5), 3),
        prop::collection::vec(complex(0.5), 3),
    )
        .prop_map(|(m, phase, s, t)| corpus::null_bjorling(m, phase, &s, &t))
}

fn single_mode_curve() -> impl Strategy<Value = SpacelikeCurve> {
    (0.2f64..3.0, -2.0f64..2.0, prop_oneof![Just(1i64), Just(-1i64), Just(2i64)]).prop_map(|(a, k, n)| {
        SpacelikeCurve::new(
            FourierSeries::from_modes(&[(n, Complex64::new(a, 0.0))]),
            FourierSeries::constant(Complex64::new(k, 0.0)),
        )
        .unwrap()
    })
}

/// `A e^{iθ}` plus small modes, with a small height; spacelike by construction.
fn multi_mode_curve() -> impl Strategy<Value = SpacelikeCurve> {
    (
        1.0f64..2.0,
        prop::collection::vec(complex(0.02), 7),
        prop::collection::vec(complex(0.02), 4),
    )
        .prop_map(|(a, planar, height)| {
            let mut f = FourierSeries::from_modes(&[(1, Complex64::new(a, 0.0))]);
            for (i, v) in planar.into_iter().enumerate() {
                let n = i as i64 - 3;
                f.set(n, f.coeff(n) + v);
            }
            let mut g = FourierSeries::constant(Complex64::new(height[0].re, 0.0));
            for (i, v) in height.into_iter().enumerate().skip(1) {
                g.set(i as i64, v);
                g.set(-(i as i64), v.conj());
            }
            SpacelikeCurve::new(f, g).unwrap()
        })
}

fn radius() -> impl Strategy<Value = f64> {
    prop_oneof![0.05f64..0.9, 1.1f64..20.0]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evaluation_is_harmonic(h in harmonic(), z in annulus_point()) {
        let coarse = laplacian(&h, z, 1e-2).norm();
        let fine = laplacian(&h, z, 5e-3).norm();
        // O(step²): halving the step quarters the discretization error
        if coarse > 1e-7 {
            let ratio = coarse / fine;
            prop_assert!((3.5..4.5).contains(&ratio), "ratio {ratio}");
        }
    }

    #[test]
    fn wirtinger_derivatives_match_finite_differences(h in harmonic(), z in annulus_point()) {
        let step = 1e-6;
        let dx = (h.eval(z + step).unwrap() - h.eval(z - step).unwrap()) / (2.0 * step);
        let iy = Complex64::new(0.0, step);
        let dy = (h.eval(z + iy).unwrap() - h.eval(z - iy).unwrap()) / (2.0 * step);
        let (hz, hzb) = h.gradient(z).unwrap();
        let i = Complex64::i();
        prop_assert!((hz - (dx - i * dy) * 0.5).norm() < 1e-7);
        prop_assert!((hzb - (dx + i * dy) * 0.5).norm() < 1e-7);
    }

    #[test]
    fn fourier_round_trip(coeffs in prop::collection::vec(complex(1.0), 31)) {
        let modes: Vec<_> = coeffs.iter().enumerate().map(|(i, v)| (i as i64 - 15, *v)).collect();
        let series = FourierSeries::from_modes(&modes);
        let back = fourier_analyze(&series.synthesize(64).unwrap());
        for n in -32..=32 {
            prop_assert!((back.coeff(n) - series.coeff(n)).norm() < 1e-13);
        }
    }

    #[test]
    fn normal_is_unit_timelike(z in annulus_point()) {
        for surface in [corpus::catenoid(), corpus::family_surface(), corpus::exp_plus_conj(40)] {
            if surface.singular_gap(z).unwrap().abs() < 1e-3 {
                continue;
            }
            let n = surface.normal(z).unwrap();
            prop_assert!((n.minkowski_norm_sq() + 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn metric_is_isothermal(z in annulus_point()) {
        let dot = |a: &maxsurf_core::SpacePoint, b: &maxsurf_core::SpacePoint| {
            (a.planar * b.planar.conj()).re - a.height * b.height
        };
        for surface in [corpus::catenoid(), corpus::family_surface()] {
            let eta = surface.metric_factor(z).unwrap();
            let (fx, fy) = surface.jacobian_fd(z, 1e-5).unwrap();
            let scale = 1e-6 * (1.0 + eta);
            prop_assert!((dot(&fx, &fx) - eta).abs() < scale);
            prop_assert!((dot(&fy, &fy) - eta).abs() < scale);
            prop_assert!(dot(&fx, &fy).abs() < scale);
        }
    }

    #[test]
    fn bjorling_solve_is_linear(a in bjorling_data(), b in bjorling_data()) {
        let (ha, wa) = linear_solve(&a);
        let (hb, wb) = linear_solve(&b);
        let (hs, ws) = linear_solve(&a.add(&b));
        prop_assert!(hs.max_coeff_diff(&ha.add(&hb)) < 1e-14);
        prop_assert!(ws.max_coeff_diff(&wa.add(&wb)) < 1e-14);
    }

    #[test]
    fn bjorling_surfaces_are_conformal_and_singular_on_the_circle(data in bjorling_data()) {
        let surface = solve(&data).unwrap();
        let identities = circle_identities(&surface, &data).unwrap();
        prop_assert!(identities.max() < 1e-9, "{identities:?}");
        prop_assert!(identities.singular_gap < 1e-9);
        let grid = VerificationGrid::new(16, 8, 0.5, 2.0);
        let scale = surface.h().max_abs_coeff().powi(2).max(1.0);
        prop_assert!(surface.max_conformality_residual(&grid) < 1e-10 * scale * 16.0);
    }

    #[test]
    fn residual_is_inversion_symmetric(curve in single_mode_curve(), r0 in radius()) {
        let a = scalar_residual(&curve, r0, None).unwrap();
        let b = scalar_residual(&curve, 1.0 / r0, None).unwrap();
        prop_assert!((a - b).abs() < 1e-10 * a.max(1.0));
    }

    #[test]
    fn multi_mode_residual_is_inversion_symmetric(curve in multi_mode_curve(), r0 in radius()) {
        let a = scalar_residual(&curve, r0, None).unwrap();
        let b = scalar_residual(&curve, 1.0 / r0, None).unwrap();
        prop_assert!((a - b).abs() < 1e-10 * a.max(1.0));
    }

    #[test]
    fn modified_coefficients_reconstruct_the_curve(curve in multi_mode_curve(), r0 in 0.3f64..3.0) {
        prop_assume!((r0 - 1.0).abs() > 1e-2);
        let (h, w) = modified_coeffs(&curve, r0).unwrap().harmonics();
        for j in 0..64 {
            let t = maxsurf_core::fourier::angle(j, 64);
            let z = Complex64::from_polar(r0, t);
            prop_assert!((h.eval(z).unwrap() - curve.planar().eval(t)).norm() < 1e-10);
            let wz = w.eval(z).unwrap();
            prop_assert!((wz.re - curve.height().eval(t).re).abs() < 1e-10);
            prop_assert!(wz.im.abs() < 1e-10);
        }
    }

    #[test]
    fn family_surfaces_round_trip_through_bjorling(c in prop_oneof![0.3f64..0.9, 1.1f64..3.0]) {
        let curve = family_curve(c).unwrap();
        let surface = build_surface(&curve, c).unwrap();
        let drift = maxsurf_core::interpolation::bjorling_cross_check(&surface).unwrap();
        prop_assert!(drift < 1e-10 * surface.h().max_abs_coeff().max(1.0));
    }
}

fn theorem_equivalence_corpus() -> Vec<(SpacelikeCurve, Vec<f64>)> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let mut out = Vec::new();
    for c in [0.25, 0.4, 0.5, 0.7, 0.9, 1.2, 1.5, 2.0, 3.0, 4.0] {
        out.push((family_curve(c).unwrap(), vec![c, 1.0 / c, 1.7 * c]));
    }
    for _ in 0..5 {
        let mut f = FourierSeries::from_modes(&[(1, Complex64::new(rng.gen_range(1.0..2.0), 0.0))]);
        for n in -3..=3 {
            let v = Complex64::new(rng.gen_range(-0.02..0.02), rng.gen_range(-0.02..0.02));
            f.set(n, f.coeff(n) + v);
        }
        let mut g = FourierSeries::constant(Complex64::new(rng.gen_range(-1.0..1.0), 0.0));
        for n in 1..=3 {
            let v = Complex64::new(rng.gen_range(-0.02..0.02), rng.gen_range(-0.02..0.02));
            g.set(n, v);
            g.set(-n, v.conj());
        }
        out.push((SpacelikeCurve::new(f, g).unwrap(), vec![0.3, 0.5, 2.0]));
    }
    for s in [0.5, 0.8, 1.0] {
        out.push((corpus::scaled_circle_curve(s), vec![0.1, 0.5, 2.0, 10.0]));
    }
    out.push((corpus::catenoid_curve(), vec![0.25, 3.0]));
    out.push((family_curve(2.0).unwrap(), vec![0.7, 3.5]));
    out
}

#[test]
fn build_succeeds_exactly_when_series_conditions_hold() {
    let corpus = theorem_equivalence_corpus();
    assert_eq!(corpus.len(), 20);
    let mut accepted = 0;
    for (curve, radii) in corpus {
        for r0 in radii {
            let passes = scalar_residual(&curve, r0, None).unwrap() < ROOT_THRESHOLD;
            let built = build_surface(&curve, r0);
            assert_eq!(passes, built.is_ok(), "r0 = {r0}: {built:?}");
            accepted += passes as usize;
        }
    }
    // every family member at r0 = c and 1/c
    assert_eq!(accepted, 20);
}

#[test]
fn corpus_surfaces_are_conformal() {
    let grid = VerificationGrid::standard(&Annulus::punctured_plane());
    for surface in [corpus::catenoid(), corpus::family_surface()] {
        assert!(surface.max_conformality_residual(&grid) < 1e-12);
    }
    let exp: MaximalSurface = corpus::exp_plus_conj(40);
    assert!(exp.max_conformality_residual(&grid) < 1e-10);
}
