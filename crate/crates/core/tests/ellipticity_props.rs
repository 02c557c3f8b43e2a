mod common;

use common::*;
use elasticity_core::*;
use proptest::prelude::*;

/// Global minimum of `f` on the sphere pair: smallest numeric M-eigenvalue
/// combined with a coarse refined grid scan.
fn min_f(t: &ElasticityTensor) -> f64 {
    let cfg = SolverConfig {
        n_starts: 60,
        grid_n: 16,
        ..SolverConfig::default()
    };
    let s = m_spectrum(t, &cfg).unwrap();
    let o = numeric::oracle(t, &cfg).unwrap();
    let m = s.pairs.first().map_or(f64::INFINITY, |p| p.theta);
    m.min(o.refined.theta).min(o.grid_min)
}

#[test]
fn exact_checkers_match_global_minimum() {
    for tag in [
        ClassTag::Isotropic,
        ClassTag::Cubic,
        ClassTag::TransverseIsotropic,
        ClassTag::Tetragonal,
    ] {
        let mut rng = SplitMix64::new(41, tag as u64);
        for _ in 0..100 {
            let sc = draw_class(&mut rng, tag, -0.3, 5.0);
            let m = min_f(&tensor(&sc));
            if m.abs() < 1e-6 {
                continue;
            }
            let v = check_class(&sc).unwrap();
            assert_eq!(v.mode, Mode::Exact);
            let want = if m > 0.0 {
                Status::Elliptic
            } else {
                Status::NotElliptic
            };
            assert_eq!(v.status, want, "{sc:?} min f = {m}");
        }
    }
}

#[test]
fn orthotropic_verdicts_are_sound() {
    let mut rng = SplitMix64::new(42, 0);
    let mut seen = [0; 3];
    for _ in 0..150 {
        let sc = draw_class(&mut rng, ClassTag::Orthotropic, -0.2, 3.0);
        let m = min_f(&tensor(&sc));
        let v = check_orthotropic_sufficient(&sc).unwrap();
        assert_eq!(v.mode, Mode::Sufficient);
        match v.status {
            Status::Elliptic => {
                seen[0] += 1;
                assert!(m > -1e-9, "{sc:?}");
            }
            Status::NotElliptic => {
                seen[1] += 1;
                assert!(m < 1e-9, "{sc:?}");
                assert!(!v.decided_by.unwrap().holds());
            }
            Status::Inconclusive => seen[2] += 1,
        }
    }
    assert!(seen.iter().all(|n| *n > 0), "{seen:?}");
}

#[test]
fn orthotropic_block_holds_only_for_elliptic_tensors() {
    // Draws concentrated where the sufficient block can hold.
    let mut rng = SplitMix64::new(43, 0);
    let mut hits = 0;
    for _ in 0..8000 {
        let d: Vec<f64> = (0..6).map(|_| rng.uniform(0.5, 3.0)).collect();
        let c23 = rng.uniform(-1.0, 1.0);
        let c13 = rng.uniform(-1.0, 1.0);
        let c12 = rng.uniform(-1.0, 2.0);
        let sc = SymmetryClass::orthotropic([d[0], d[1], d[2], d[3], d[4], d[5], c23, c13, c12]);
        let v = check_orthotropic_sufficient(&sc).unwrap();
        if v.status == Status::Elliptic {
            hits += 1;
            if hits <= 60 {
                assert!(min_f(&tensor(&sc)) > 0.0, "{sc:?}");
            }
        }
    }
    assert!(hits >= 60, "{hits}");
}

#[test]
fn tetragonal_reduction_matches_transverse() {
    let mut rng = SplitMix64::new(44, 0);
    for _ in 0..100 {
        let sc = draw_class(&mut rng, ClassTag::TransverseIsotropic, -0.3, 5.0);
        let SymmetryClass::TransverseIsotropic(p) = sc else {
            unreachable!()
        };
        let te = SymmetryClass::Tetragonal(p.into());
        assert_eq!(
            check_transverse(&sc).unwrap().status,
            check_tetragonal(&te).unwrap().status,
            "{p:?}"
        );
    }
}

#[test]
fn orthotropic_embedding_consistent_with_tetragonal() {
    let mut rng = SplitMix64::new(45, 0);
    let mut elliptic = 0;
    for _ in 0..2000 {
        let sc = draw_class(&mut rng, ClassTag::Tetragonal, 0.2, 3.0);
        let SymmetryClass::Tetragonal(p) = sc else {
            unreachable!()
        };
        let o = check_orthotropic_sufficient(&SymmetryClass::Orthotropic(p.into())).unwrap();
        let t = check_tetragonal(&sc).unwrap();
        match o.status {
            Status::Elliptic => {
                elliptic += 1;
                assert!(p.c12 + 2.0 * p.c66 > p.c11);
                assert_eq!(t.status, Status::Elliptic, "{p:?}");
            }
            Status::NotElliptic => assert_eq!(t.status, Status::NotElliptic, "{p:?}"),
            Status::Inconclusive => {}
        }
    }
    assert!(elliptic > 0);
}

#[test]
fn cubic_classical_conditions_equivalence() {
    let mut rng = SplitMix64::new(46, 0);
    for _ in 0..20000 {
        let sc = SymmetryClass::cubic(
            rng.uniform(-2.0, 4.0),
            rng.uniform(-2.0, 4.0),
            rng.uniform(-8.0, 8.0),
        );
        let SymmetryClass::Cubic(c) = sc else {
            unreachable!()
        };
        let m = m_eigenvalues(&sc).unwrap();
        let lhs = m[..4].iter().all(|l| l.value.unwrap() > 0.0);
        let rhs = c.c11 > 0.0 && c.c66 > 0.0 && (c.c12 + c.c66).abs() < c.c11 + c.c66;
        assert_eq!(lhs, rhs, "{c:?}");
    }
}

#[test]
fn transverse_classical_condition_follows() {
    let mut rng = SplitMix64::new(47, 0);
    for _ in 0..20000 {
        let sc = draw_class(&mut rng, ClassTag::TransverseIsotropic, -0.3, 5.0);
        let v = check_transverse(&sc).unwrap();
        if v.status == Status::Elliptic {
            let c = v.condition("|c13 + c55| < c55 + sqrt(c11*c33)").unwrap();
            assert!(c.holds(), "{sc:?}");
        }
    }
}

#[test]
fn tetragonal_classical_conditions_follow() {
    let mut rng = SplitMix64::new(48, 0);
    let mut checked = 0;
    for _ in 0..20000 {
        let sc = draw_class(&mut rng, ClassTag::Tetragonal, -0.3, 5.0);
        let v = check_tetragonal(&sc).unwrap();
        let holds = |l: &str| v.condition(l).unwrap().holds();
        let base = [
            "c11 > 0",
            "c33 > 0",
            "c55 > 0",
            "c66 > 0",
            "zeta > 0",
            "c11 > c12",
        ];
        if !base.iter().all(|l| holds(l))
            || !holds("|2*c55 + c13| < min(sqrt(c11*c33), sqrt(zeta*c33))")
        {
            continue;
        }
        checked += 1;
        assert!(
            holds("(|c55 + c13| - c55)^2 < c33*(c11 + c12 + min(c11 - c12, 2*c66))/2"),
            "{sc:?}"
        );
        if holds("|c13| < sqrt(c11*c33)") && holds("|c13| < sqrt(zeta*c33)") {
            assert!(
                holds("-2*c55 - sqrt(c11*c33) < c13 < sqrt(c11*c33)"),
                "{sc:?}"
            );
        }
    }
    assert!(checked > 100);
}

proptest! {
    #[test]
    fn verdicts_invariant_under_scaling(
        tag in prop::sample::select(CLASSED.to_vec()),
        seed in any::<u64>(),
        k in 1e-3..1e3f64,
    ) {
        let mut rng = SplitMix64::new(seed, 0);
        let sc = draw_class(&mut rng, tag, -0.3, 5.0);
        let scaled = SymmetryClass::from_params(tag, &sc.params().iter().map(|v| v * k).collect::<Vec<_>>()).unwrap();
        let a = check_class(&sc).unwrap();
        let b = check_class(&scaled).unwrap();
        prop_assert_eq!(a.status, b.status);
        prop_assert_eq!(a.mode, b.mode);
        prop_assert_eq!(a.fired.len(), b.fired.len());
        for (x, y) in a.fired.iter().zip(&b.fired) {
            prop_assert_eq!(&x.label, &y.label);
            prop_assert_eq!(x.role, y.role);
            if x.margin.abs() > 1e-9 * sc.scale() {
                prop_assert_eq!(x.margin > 0.0, y.margin > 0.0);
                let r = y.margin / x.margin;
                prop_assert!(rel_close(r, k, 1e-9) || rel_close(r, k * k, 1e-9), "{} {r} {k}", x.label);
            }
        }
    }
}

#[test]
fn positive_definite_implies_elliptic() {
    let mut rng = SplitMix64::new(49, 0);
    let cfg = SolverConfig {
        grid_n: 16,
        ..SolverConfig::default()
    };
    let mut pd = 0;
    for _ in 0..100 {
        let shift = rng.uniform(0.0, 3.0);
        let t = dense(&mut rng, shift);
        let p = positive_definite(&t).unwrap();
        if p.min_eigenvalue > 1e-6 * t.scale() {
            pd += 1;
            let v = strong_ellipticity_numeric(&t, &cfg).unwrap();
            assert_eq!(v.status, Status::Elliptic);
            assert_eq!(v.mode, Mode::Numeric);
        }
    }
    assert!(pd > 10);
}

#[test]
fn isotropic_pd_is_stricter_than_se() {
    let mut rng = SplitMix64::new(50, 0);
    for _ in 0..500 {
        let iso = Isotropic::from_lame(rng.uniform(-3.0, 3.0), rng.uniform(-1.0, 3.0));
        let sc = SymmetryClass::Isotropic(iso);
        let pd = positive_definite(&tensor(&sc)).unwrap().positive_definite;
        let want_pd = iso.mu() > 0.0 && iso.lambda() + 2.0 * iso.mu() / 3.0 > 0.0;
        if (iso.lambda() + 2.0 * iso.mu() / 3.0).abs() > 1e-9 && iso.mu().abs() > 1e-9 {
            assert_eq!(pd, want_pd, "{iso:?}");
        }
        if pd {
            assert_eq!(check_isotropic(&sc).unwrap().status, Status::Elliptic);
        }
    }
}

#[test]
fn worked_examples() {
    let v = check_transverse(&SymmetryClass::transverse(2.0, 2.0, 1.0, 1.0, -3.0)).unwrap();
    assert!(!v.condition("|c13| < sqrt(c11*c33)").unwrap().holds());
    let v = check_tetragonal(&SymmetryClass::tetragonal(3.0, 3.0, 1.0, 1.0, 1.0, 1.0)).unwrap();
    assert_eq!(v.status, Status::Elliptic);
    assert_eq!(v.condition("zeta > 0").unwrap().margin, 3.0);
    let v = check_orthotropic_sufficient(&SymmetryClass::orthotropic([
        3.0, 3.0, 3.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0,
    ]))
    .unwrap();
    assert_eq!(v.status, Status::Inconclusive);
    assert!(v
        .fired
        .iter()
        .filter(|c| c.label.starts_with("|c") || c.label.starts_with("orthotropic.θ"))
        .all(|c| c.holds()));
    assert!(check_class(&SymmetryClass::General).is_err());
    assert!(check_tetragonal(&SymmetryClass::cubic(3.0, 1.0, 1.0)).is_err());
}
