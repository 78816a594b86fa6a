mod common;

use lazyq::matcore::{
    herm_eig, herm_exp, kron, partial_trace_a, partial_trace_b, partial_transpose_b, svd3, ComplexMatrix,
    RealMatrix3, C64,
};
use lazyq::sampling::{ginibre_matrix, haar_su2};
use proptest::prelude::*;

fn random_hermitian(rng: &mut impl rand::Rng) -> ComplexMatrix {
    let g = ginibre_matrix(rng, 4);
    (&g + &g.adjoint()).scale_real(0.5)
}

#[test]
fn eig_reconstructs_random_hermitian_matrices() {
    let mut rng = common::rng(1);
    for _ in 0..1000 {
        let m = random_hermitian(&mut rng);
        let eig = herm_eig(&m, 1e-12).unwrap();
        let err = (&eig.reconstruct() - &m).frob_norm();
        assert!(err <= 1e-10 * m.frob_norm().max(1.0), "reconstruction error {err}");
        assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
        let vtv = &eig.vectors.adjoint() * &eig.vectors;
        assert!(common::max_entry_diff(&vtv, &ComplexMatrix::identity(4)) < 1e-12);
    }
}

#[test]
fn eig_handles_degenerate_spectra() {
    // U diag(1,1,2,2) U† with a random unitary.
    let mut rng = common::rng(2);
    for _ in 0..200 {
        let u = kron(&haar_su2(&mut rng), &haar_su2(&mut rng));
        let d = ComplexMatrix::diag_real(&[1.0, 1.0, 2.0, 2.0]);
        let m = &(&u * &d) * &u.adjoint();
        let eig = herm_eig(&m, 1e-12).unwrap();
        for (w, e) in eig.values.iter().zip([1.0, 1.0, 2.0, 2.0]) {
            assert!((w - e).abs() < 1e-12);
        }
        assert!((&eig.reconstruct() - &m).frob_norm() < 1e-12);
    }
}

#[test]
fn partial_transpose_is_an_involution() {
    let mut rng = common::rng(3);
    for _ in 0..500 {
        let m = random_hermitian(&mut rng);
        let pt = partial_transpose_b(&m).unwrap();
        assert_eq!(partial_transpose_b(&pt).unwrap(), m);
        assert!((pt.trace() - m.trace()).norm() < 1e-15);
        assert!(pt.hermiticity_deviation() < 1e-15);
    }
}

#[test]
fn partial_traces_preserve_trace() {
    let mut rng = common::rng(4);
    for _ in 0..500 {
        let m = ginibre_matrix(&mut rng, 4);
        assert!((partial_trace_b(&m).unwrap().trace() - m.trace()).norm() <= 1e-12);
        assert!((partial_trace_a(&m).unwrap().trace() - m.trace()).norm() <= 1e-12);
    }
}

#[test]
fn exp_forward_and_back_is_identity() {
    let mut rng = common::rng(5);
    for k in 0..300 {
        let h = random_hermitian(&mut rng);
        let t = 0.01 * k as f64;
        let u = herm_exp(&h, t).unwrap();
        let v = herm_exp(&h, -t).unwrap();
        assert!(common::max_entry_diff(&(&u * &v), &ComplexMatrix::identity(4)) < 1e-10);
        assert!(common::max_entry_diff(&(&u * &u.adjoint()), &ComplexMatrix::identity(4)) < 1e-10);
    }
}

#[test]
fn exp_rejects_non_hermitian() {
    let m = ComplexMatrix::from_vec(2, 2, vec![C64::new(0.0, 0.0), C64::new(1.0, 0.0), C64::new(2.0, 0.0), C64::new(0.0, 0.0)]).unwrap();
    assert!(herm_exp(&m, 1.0).is_err());
}

fn rotation_from(rng: &mut impl rand::Rng) -> RealMatrix3 {
    // Orthogonal factor of a random matrix's SVD.
    let t = RealMatrix3(std::array::from_fn(|_| std::array::from_fn(|_| rng.random_range(-1.0..1.0))));
    let svd = svd3(&t);
    svd.u.mul(&svd.v.transpose())
}

proptest! {
    #[test]
    fn svd3_factorizes(entries in proptest::array::uniform9(-2.0f64..2.0)) {
        let t = RealMatrix3(std::array::from_fn(|i| std::array::from_fn(|j| entries[3 * i + j])));
        let svd = svd3(&t);
        let back = svd.u.mul(&RealMatrix3::diag(svd.s)).mul(&svd.v.transpose());
        prop_assert!(back.max_abs_diff(&t) < 1e-12);
        prop_assert!(svd.u.transpose().mul(&svd.u).max_abs_diff(&RealMatrix3::identity()) < 1e-12);
        prop_assert!(svd.v.transpose().mul(&svd.v).max_abs_diff(&RealMatrix3::identity()) < 1e-12);
        prop_assert!(svd.s[0] >= svd.s[1] && svd.s[1] >= svd.s[2] && svd.s[2] >= 0.0);
    }

    #[test]
    fn svd3_values_are_orthogonally_invariant(entries in proptest::array::uniform9(-1.0f64..1.0), seed in 0u64..1000) {
        let t = RealMatrix3(std::array::from_fn(|i| std::array::from_fn(|j| entries[3 * i + j])));
        let mut rng = common::rng(seed);
        let (l, r) = (rotation_from(&mut rng), rotation_from(&mut rng));
        let a = svd3(&t).s;
        let b = svd3(&l.mul(&t).mul(&r)).s;
        for k in 0..3 {
            prop_assert!((a[k] - b[k]).abs() < 1e-12);
        }
    }

    #[test]
    fn svd3_handles_low_rank(u in proptest::array::uniform3(-1.0f64..1.0), v in proptest::array::uniform3(-1.0f64..1.0)) {
        let t = RealMatrix3(std::array::from_fn(|i| std::array::from_fn(|j| u[i] * v[j])));
        let svd = svd3(&t);
        prop_assert!(svd.s[1] < 1e-14);
        let back = svd.u.mul(&RealMatrix3::diag(svd.s)).mul(&svd.v.transpose());
        prop_assert!(back.max_abs_diff(&t) < 1e-12);
        prop_assert!(svd.u.transpose().mul(&svd.u).max_abs_diff(&RealMatrix3::identity()) < 1e-12);
    }
}
