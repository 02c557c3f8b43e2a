mod common;

use approx::assert_relative_eq;
use common::*;
use elasticity_core::*;

fn values(list: &[LabeledEigenvalue]) -> Vec<f64> {
    list.iter().filter_map(|l| l.value).collect()
}

fn dedup(mut v: Vec<f64>, tol: f64) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v.dedup_by(|a, b| rel_close(*a, *b, tol));
    v
}

fn same_set(a: Vec<f64>, b: Vec<f64>, tol: f64) -> bool {
    let (a, b) = (dedup(a, 1e-9), dedup(b, 1e-9));
    a.len() == b.len() && covered(&a, &b, tol) && covered(&b, &a, tol)
}

#[test]
fn list_lengths_and_labels() {
    let mut rng = SplitMix64::new(21, 0);
    for (tag, m, z) in [
        (ClassTag::Isotropic, 2, 1),
        (ClassTag::Cubic, 6, 3),
        (ClassTag::TransverseIsotropic, 6, 3),
        (ClassTag::Tetragonal, 10, 4),
        (ClassTag::Orthotropic, 13, 7),
    ] {
        let sc = draw_class(&mut rng, tag, 0.5, 2.0);
        let ml = m_eigenvalues(&sc).unwrap();
        let zl = z_eigenvalues(&sc).unwrap();
        assert_eq!((ml.len(), zl.len()), (m, z));
        assert_eq!(ml[0].label, format!("{tag}.θ1"));
        assert_eq!(zl[0].label, format!("{tag}.η1"));
    }
    assert!(matches!(
        m_eigenvalues(&SymmetryClass::General),
        Err(Error::UnsupportedClass(ClassTag::General))
    ));
    assert!(z_eigenvalues(&SymmetryClass::General).is_err());
}

#[test]
fn worked_values() {
    let v = values(&m_eigenvalues(&SymmetryClass::isotropic(1.0, 1.0)).unwrap());
    assert_eq!(v, vec![1.0, 7.0 / 3.0]);
    let v = values(&m_eigenvalues(&SymmetryClass::cubic(3.0, 1.0, 1.0)).unwrap());
    assert_eq!(v, vec![3.0, 1.0, 1.0, 3.0, 3.0, 1.0]);
    let l = m_eigenvalues(&SymmetryClass::transverse(3.0, 2.0, 0.8, 1.0, 0.5)).unwrap();
    assert_relative_eq!(l[5].value.unwrap(), 1.9875, max_relative = 1e-14);
    let l = m_eigenvalues(&SymmetryClass::transverse(3.0, 3.0, 1.0, 1.0, 1.0)).unwrap();
    assert!(l[5].degenerate && l[5].value.is_none());
    let z = values(&z_eigenvalues(&SymmetryClass::isotropic(1.0, 1.0)).unwrap());
    assert_eq!(z, vec![7.0 / 3.0]);
    let z = values(&z_eigenvalues(&SymmetryClass::cubic(3.0, 1.0, 1.0)).unwrap());
    assert_eq!(z, vec![3.0, 3.0, 3.0]);
}

#[test]
fn realizable_pairs_solve_the_eigenproblem() {
    let mut rng = SplitMix64::new(22, 0);
    for tag in CLASSED {
        for _ in 0..300 {
            let sc = draw_class(&mut rng, tag, -0.5, 4.0);
            let t = tensor(&sc);
            for l in m_eigenvalues(&sc).unwrap() {
                if let (Some(v), Some(x), Some(y)) = (l.realized(), l.x, l.y) {
                    let r = residual(&t, v, &x, &y);
                    assert!(r < 1e-10 * sc.scale(), "{} {sc:?} r={r}", l.label);
                    assert!(rel_close(t.quad_form(&x, &y), v, 1e-10));
                }
                if l.degenerate {
                    assert!(l.value.is_none() && !l.realizable);
                } else {
                    assert!(l.value.unwrap().is_finite());
                }
            }
        }
    }
}

#[test]
fn z_values_are_m_values() {
    let mut rng = SplitMix64::new(23, 0);
    for tag in CLASSED {
        for _ in 0..200 {
            let sc = draw_class(&mut rng, tag, -0.5, 4.0);
            let m = m_eigenvalues(&sc).unwrap();
            for z in z_eigenvalues(&sc).unwrap() {
                let src = m
                    .iter()
                    .find(|l| Some(&l.label) == z.coincides_with.as_ref())
                    .unwrap();
                assert_eq!(z.value, src.value);
                if let Some(v) = z.value {
                    assert!(values(&m).iter().any(|w| rel_close(v, *w, 1e-12)));
                }
                if let (Some(x), Some(y)) = (z.x, z.y) {
                    assert_eq!(x, y, "{}", z.label);
                }
            }
        }
    }
}

#[test]
fn tetragonal_reduces_to_transverse() {
    let mut rng = SplitMix64::new(24, 0);
    for _ in 0..100 {
        let SymmetryClass::TransverseIsotropic(p) =
            draw_class(&mut rng, ClassTag::TransverseIsotropic, 0.2, 3.0)
        else {
            unreachable!()
        };
        let tr = SymmetryClass::TransverseIsotropic(p);
        let te = SymmetryClass::Tetragonal(p.into());
        assert!(same_set(
            values(&m_eigenvalues(&te).unwrap()),
            values(&m_eigenvalues(&tr).unwrap()),
            1e-12
        ));
        let zt = z_eigenvalues(&te).unwrap();
        assert!(rel_close(zt[0].value.unwrap(), p.c11, 1e-12));
        assert!(rel_close(zt[2].value.unwrap(), zt[3].value.unwrap(), 1e-12));
        assert!(same_set(
            values(&zt),
            values(&z_eigenvalues(&tr).unwrap()),
            1e-12
        ));
    }
}

#[test]
fn orthotropic_reduces_to_tetragonal() {
    let mut rng = SplitMix64::new(25, 0);
    for _ in 0..100 {
        let SymmetryClass::Tetragonal(p) = draw_class(&mut rng, ClassTag::Tetragonal, 0.2, 3.0)
        else {
            unreachable!()
        };
        let te = SymmetryClass::Tetragonal(p);
        let or = SymmetryClass::Orthotropic(p.into());
        let mo = m_eigenvalues(&or).unwrap();
        let mt = m_eigenvalues(&te).unwrap();
        let pairs = [
            (1, 1),
            (2, 1),
            (3, 2),
            (4, 3),
            (5, 3),
            (6, 4),
            (7, 5),
            (8, 5),
            (9, 8),
            (10, 6),
            (11, 6),
            (12, 7),
            (13, 10),
        ];
        for (o, t) in pairs {
            match (mo[o - 1].value, mt[t - 1].value) {
                (Some(a), Some(b)) => assert!(rel_close(a, b, 1e-12), "θ{o} {a} vs θ{t} {b}"),
                (a, b) => assert_eq!(a.is_some(), b.is_some(), "θ{o} vs θ{t} {p:?}"),
            }
        }
        // The diagonal-plane opposed value θ9 of the tetragonal list has no
        // orthotropic counterpart.
        assert!(covered(&values(&mo), &values(&mt), 1e-12));
        assert!(covered(
            &values(&z_eigenvalues(&te).unwrap()),
            &values(&z_eigenvalues(&or).unwrap()),
            1e-12
        ));
    }
}

#[test]
fn isotropic_embeddings_collapse() {
    let mut rng = SplitMix64::new(26, 0);
    for _ in 0..200 {
        let iso = Isotropic::from_lame(rng.uniform(-1.0, 3.0), rng.uniform(0.1, 3.0));
        let want = [iso.mu(), iso.lambda() + 2.0 * iso.mu()];
        let cubic: Cubic = iso.into();
        let tr: TransverseIsotropic = iso.into();
        let te: Tetragonal = tr.into();
        let or: Orthotropic = te.into();
        for sc in [
            SymmetryClass::Isotropic(iso),
            SymmetryClass::Cubic(cubic),
            SymmetryClass::TransverseIsotropic(tr),
            SymmetryClass::Tetragonal(te),
            SymmetryClass::Orthotropic(or),
        ] {
            let got: Vec<f64> = m_eigenvalues(&sc)
                .unwrap()
                .iter()
                .filter_map(|l| l.value)
                .collect();
            assert!(covered(&got, &want, 1e-12), "{sc:?}: {got:?}");
        }
    }
}

#[test]
fn theta13_forms_agree() {
    let mut rng = SplitMix64::new(27, 0);
    let mut compared = 0;
    for _ in 0..2000 {
        let SymmetryClass::Orthotropic(o) = draw_class(&mut rng, ClassTag::Orthotropic, -0.5, 4.0)
        else {
            unreachable!()
        };
        let (n1, d1) = orthotropic_theta13_polynomial(&o);
        let (n2, d2) = orthotropic_theta13_factored(&o);
        let s = SymmetryClass::Orthotropic(o).scale();
        if d1.abs() < 1e-12 * s * s || d2.abs() < 1e-12 * s * s {
            continue;
        }
        compared += 1;
        assert!(rel_close(n1 / d1, n2 / d2, 1e-10), "{o:?}");
    }
    assert!(compared > 1900);
}

#[test]
fn numeric_solver_recovers_closed_forms() {
    let mut rng = SplitMix64::new(28, 0);
    let cfg = SolverConfig::default();
    for tag in CLASSED {
        for _ in 0..5 {
            let sc = draw_class(&mut rng, tag, 0.2, 3.0);
            let s = m_spectrum(&tensor(&sc), &cfg).unwrap();
            let th: Vec<f64> = s.pairs.iter().map(|p| p.theta).collect();
            for l in m_eigenvalues(&sc).unwrap() {
                if let Some(v) = l.realized() {
                    assert!(covered(&[v], &th, 1e-6), "{} = {v} not in {th:?}", l.label);
                }
            }
            assert!(s.pairs.iter().all(|p| p.residual < 1e-8));
        }
    }
}

#[test]
fn transverse_table_rows_are_eigenpairs() {
    let mut rng = SplitMix64::new(29, 0);
    let mut emitted = 0;
    for _ in 0..300 {
        let sc = draw_class(&mut rng, ClassTag::TransverseIsotropic, 0.2, 4.0);
        let t = tensor(&sc);
        let table = transverse_eigenpairs(&sc).unwrap();
        for row in &table.rows {
            let n = |v: &Vec3| v.iter().map(|c| c * c).sum::<f64>().sqrt();
            assert!((n(&row.x) - 1.0).abs() < 1e-12 && (n(&row.y) - 1.0).abs() < 1e-12);
            let r = residual(&t, row.theta, &row.x, &row.y);
            assert!(r < 1e-10 * sc.scale(), "{} r={r}", row.label);
            emitted += 1;
        }
        for pair in [(table.zeta, table.eta), (table.phi, table.psi)] {
            if let (Some(a), Some(b)) = pair {
                assert!(a <= 1.0 + 1e-12 && b <= 1.0 + 1e-12);
                assert!((a * a + b * b - 1.0).abs() < 1e-12);
            }
        }
        let families = 2 - table.omitted.len();
        assert!(table.rows.len() >= 36 + 16 * families);
    }
    assert!(emitted > 0);

    let sc = SymmetryClass::transverse(3.0, 2.0, 2.0, 1.0, 0.5);
    let table = transverse_eigenpairs(&sc).unwrap();
    let find = |x: Vec3, y: Vec3| {
        table
            .rows
            .iter()
            .find(|r| r.x == x && r.y == y)
            .unwrap()
            .theta
    };
    assert_eq!(find([1.0, 0.0, 0.0], [0.0, 1.0, 0.0]), 1.0);
    assert_eq!(find([1.0, 0.0, 0.0], [1.0, 0.0, 0.0]), 3.0);
    assert!(table.omitted.is_empty());
    assert!(transverse_eigenpairs(&SymmetryClass::cubic(3.0, 1.0, 1.0)).is_err());
}

#[test]
fn anisotropy_and_waves() {
    assert_eq!(
        anisotropy_factor(&SymmetryClass::cubic(3.0, 1.0, 1.0)).unwrap(),
        1.0
    );
    assert_relative_eq!(
        anisotropy_factor(&SymmetryClass::cubic(4.0, 1.0, 1.0)).unwrap(),
        2.0 / 3.0,
        max_relative = 1e-15
    );
    assert_eq!(
        anisotropy_factor(&SymmetryClass::cubic(3.0, 2.0, 1.0)).unwrap(),
        2.0
    );
    assert!(matches!(
        anisotropy_factor(&SymmetryClass::cubic(3.0, 2.0, 3.0)),
        Err(Error::Degenerate(_))
    ));
    let mut rng = SplitMix64::new(30, 0);
    for _ in 0..100 {
        let sc = draw_class(&mut rng, ClassTag::Cubic, 0.2, 3.0);
        let SymmetryClass::Cubic(c) = sc else {
            unreachable!()
        };
        let m = m_eigenvalues(&sc).unwrap();
        let a = anisotropy_factor(&sc).unwrap();
        assert!(
            rel_close(a, m[1].value.unwrap() / m[2].value.unwrap(), 1e-12),
            "{c:?}"
        );
    }

    let (vp, vs) = wave_velocities(&SymmetryClass::isotropic(1.0, 1.0), 1.0).unwrap();
    assert_relative_eq!(vp, (7.0f64 / 3.0).sqrt(), max_relative = 1e-15);
    assert_eq!(vs, 1.0);
    let (_, vs) = wave_velocities(&SymmetryClass::isotropic(1.0, 0.0), 1.0).unwrap();
    assert_eq!(vs, 0.0);
    for _ in 0..100 {
        let sc = SymmetryClass::isotropic(rng.uniform(0.01, 5.0), rng.uniform(0.0, 5.0));
        let (vp, vs) = wave_velocities(&sc, rng.uniform(0.1, 10.0)).unwrap();
        assert!(vp > vs);
    }
    let iso = SymmetryClass::isotropic(1.0, 1.0);
    assert!(matches!(wave_velocities(&iso, 0.0), Err(Error::Domain(_))));
    assert!(wave_velocities(&SymmetryClass::isotropic(-5.0, 1.0), 1.0).is_err());
    assert!(wave_velocities(&SymmetryClass::cubic(3.0, 1.0, 1.0), 1.0).is_err());
}
