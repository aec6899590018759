//! Corpus-wide algebraic identities for the generalized inverses.

use ginv_core::classical::{core_ep_decompose, drazin_inverse, group_inverse, weak_mp_inverse};
use ginv_core::hgroup::{build_bc_pair, compressed_cube, hgroup_inverse, solve_image_system, solve_projected_system};
use ginv_core::matrix::{subspace_relate, SubspaceDescriptor, SubspaceRelation};
use ginv_core::pinv::{coimage_projector, image_projector, mp_inverse};
use ginv_core::verify::{check_axioms, residual_summary, InverseKind};
use ginv_core::weak_hgroup::weak_hgroup_inverse;
use ginv_core::{Error, Matrix};
use ginv_testkit::{corpus, greville_pinv, CorpusEntry};

fn suite() -> Vec<CorpusEntry> {
    corpus(90)
}

#[test]
fn mp_matches_greville_oracle() {
    for e in suite() {
        let a = &e.matrix;
        assert_eq!(mp_inverse(a).unwrap(), greville_pinv(a), "{}: {a}", e.label);
    }
    let rect = Matrix::parse_rows(&[&["1", "1+1i"], &["0", "2"], &["-1/2", "i"]]).unwrap();
    assert_eq!(mp_inverse(&rect).unwrap(), greville_pinv(&rect));
}

#[test]
fn projectors_and_bridge_identity() {
    for e in suite() {
        let a = &e.matrix;
        let p = image_projector(a).unwrap();
        let q = coimage_projector(a).unwrap();
        assert!(p.is_hermitian() && p.is_idempotent(), "{}", e.label);
        assert!(q.is_hermitian() && q.is_idempotent(), "{}", e.label);
        let eq = |u: &Matrix, v: &Matrix| {
            subspace_relate(
                &SubspaceDescriptor::image(u.clone()),
                &SubspaceDescriptor::image(v.clone()),
                SubspaceRelation::Equals,
            )
            .unwrap()
        };
        assert!(eq(&p, a) && eq(&q, &a.adjoint()), "{}", e.label);
        assert_eq!(&(&q * a) * &p, compressed_cube(a).unwrap(), "{}", e.label);
    }
}

#[test]
fn every_output_passes_its_own_axioms() {
    for e in suite() {
        let a = &e.matrix;
        let mut outputs = vec![
            (InverseKind::MP, mp_inverse(a).unwrap()),
            (InverseKind::Drazin, drazin_inverse(a).unwrap()),
            (InverseKind::HGroup, hgroup_inverse(a).unwrap()),
        ];
        if let (Ok(w), Ok(wh)) = (weak_mp_inverse(a), weak_hgroup_inverse(a)) {
            outputs.push((InverseKind::WeakMP, w));
            outputs.push((InverseKind::WeakHGroup, wh));
        }
        match group_inverse(a) {
            Ok(g) => outputs.push((InverseKind::Group, g)),
            Err(Error::NotGroupInvertible) => assert!(a.pow(2).unwrap().rank() < a.rank()),
            Err(other) => panic!("{}: {other}", e.label),
        }
        for (kind, x) in outputs {
            let report = check_axioms(&kind, a, &x).unwrap();
            assert!(report.overall, "{} {}: {}", e.label, kind.name(), residual_summary(&report));
        }
    }
}

#[test]
fn drazin_and_group_agree_at_index_one() {
    for e in suite() {
        let a = &e.matrix;
        if a.drazin_index().unwrap() <= 1 {
            assert_eq!(drazin_inverse(a).unwrap(), group_inverse(a).unwrap(), "{}", e.label);
            assert_eq!(weak_mp_inverse(a).unwrap(), mp_inverse(a).unwrap(), "{}", e.label);
        }
    }
}

/// `(core)†` passes the weak-MP conditions exactly when `nil·core* = 0`.
#[test]
fn weak_mp_domain() {
    let mut rejected = 0;
    for e in suite() {
        let a = &e.matrix;
        let d = core_ep_decompose(a).unwrap();
        let orthogonal = (&d.nil * &d.core.adjoint()).is_zero();
        match weak_mp_inverse(a) {
            Ok(w) => {
                assert!(orthogonal, "{}", e.label);
                assert_eq!(w, mp_inverse(&d.core).unwrap());
                assert_eq!(weak_hgroup_inverse(a).unwrap(), hgroup_inverse(&d.core).unwrap(), "{}", e.label);
            }
            Err(Error::Inconsistent(msg)) => {
                assert!(!orthogonal, "{}", e.label);
                assert!(msg.contains("(aw)*=aw"), "{}: {msg}", e.label);
                let report = check_axioms(&InverseKind::WeakMP, a, &mp_inverse(&d.core).unwrap()).unwrap();
                assert!(!report.check("(ax)*=ax").unwrap().holds);
                rejected += 1;
            }
            Err(other) => panic!("{}: {other}", e.label),
        }
    }
    assert!(rejected > 0, "corpus should contain non-orthogonal splits");
}

#[test]
fn decomposition_invariants() {
    for e in suite() {
        let d = core_ep_decompose(&e.matrix).unwrap();
        for (name, ok) in d.invariant_checks(&e.matrix) {
            assert!(ok, "{}: {name}", e.label);
        }
        assert!(d.index <= e.matrix.rows());
    }
}

#[test]
fn constrained_solvers_are_unique() {
    for e in suite() {
        let a = &e.matrix;
        let h = hgroup_inverse(a).unwrap();
        for res in [solve_projected_system(a).unwrap(), solve_image_system(a).unwrap()] {
            assert!(res.unique, "{}", e.label);
            assert_eq!(res.solution, h, "{}", e.label);
        }
    }
}

#[test]
fn image_and_kernel_of_hgroup_inverse() {
    for e in suite() {
        let a = &e.matrix;
        let h = hgroup_inverse(a).unwrap();
        let pair = build_bc_pair(a).unwrap();
        let same = |p, q| subspace_relate(&p, &q, SubspaceRelation::Equals).unwrap();
        assert!(same(SubspaceDescriptor::image(h.clone()), SubspaceDescriptor::image(pair.b)), "{}", e.label);
        assert!(same(SubspaceDescriptor::kernel(h.clone()), SubspaceDescriptor::kernel(pair.c)), "{}", e.label);
    }
}

/// Perturbing the inverse along any direction that keeps `a²xa² = a³`
/// breaks one of the remaining defining conditions.
#[test]
fn hgroup_perturbations_are_rejected() {
    for e in suite().into_iter().take(40) {
        let a = &e.matrix;
        let n = a.rows();
        let h = hgroup_inverse(a).unwrap();
        let a2 = a.pow(2).unwrap();
        let map = a2.transpose().kron(&a2);
        for v in map.nullspace_basis() {
            let dir = Matrix::unvectorize(&v, n, n).unwrap();
            let perturbed = &h + &dir;
            let report = check_axioms(&InverseKind::HGroup, a, &perturbed).unwrap();
            assert!(report.check("a2xa2=a3").unwrap().holds);
            assert!(!report.overall, "{}: perturbation {dir} survived", e.label);
        }
    }
}

/// The two inverses agree at index ≤ 1 and generally part ways above it.
#[test]
fn hgroup_versus_weak_hgroup_by_index() {
    let mut diverging = Vec::new();
    for e in suite() {
        let a = &e.matrix;
        let Ok(wh) = weak_hgroup_inverse(a) else { continue };
        let h = hgroup_inverse(a).unwrap();
        if a.drazin_index().unwrap() <= 1 {
            assert_eq!(h, wh, "{}", e.label);
        } else if h != wh {
            diverging.push(e.label.clone());
        }
    }
    assert!(!diverging.is_empty(), "expected at least one index ≥ 2 divergence");
    // The canonical A is index 2 but not among them.
    assert!(!diverging.contains(&"A".to_string()));
}

#[test]
fn known_divergence() {
    // 4x4 Jordan block: the core is zero, but a†·a³·a† = e23.
    let a = Matrix::from_fn(4, 4, |i, j| if j == i + 1 { 1.into() } else { 0.into() });
    assert_eq!(a.drazin_index().unwrap(), 4);
    assert!(weak_hgroup_inverse(&a).unwrap().is_zero());
    let e32 = Matrix::from_fn(4, 4, |i, j| if (i, j) == (2, 1) { 1.into() } else { 0.into() });
    assert_eq!(hgroup_inverse(&a).unwrap(), e32);
}

/// The factored sandwich solver returns exactly the canonical solution of
/// the explicit Kronecker system, including on inconsistent systems.
#[test]
fn sandwich_solver_matches_kronecker_system() {
    let mats: Vec<Matrix> = suite().into_iter().map(|e| e.matrix).collect();
    let mut consistent = 0;
    for (k, b) in mats.iter().enumerate() {
        let n = b.rows();
        let same_size: Vec<&Matrix> = mats.iter().filter(|m| m.rows() == n).collect();
        let c = same_size[k % same_size.len()];
        let y = same_size[(k * 7 + 3) % same_size.len()];
        for rhs in [y.clone(), &(b * y) * c] {
            let explicit = c
                .transpose()
                .kron(b)
                .solve_right(&rhs.vectorize())
                .and_then(|v| Matrix::unvectorize(&v, n, n));
            let factored = Matrix::solve_sandwich(b, c, &rhs);
            assert_eq!(factored, explicit, "b = {b}, c = {c}, y = {rhs}");
            if let Ok(r) = factored {
                assert_eq!(&(b * &r) * c, rhs);
                consistent += 1;
            }
        }
    }
    assert!(consistent > mats.len());
}
