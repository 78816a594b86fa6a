mod common;

use lazyq::classify::{classify, DEFAULT_TOL};
use lazyq::fano::{decompose, normal_form, FanoParams};
use lazyq::matcore::RealMatrix3;

fn norm(v: [f64; 3]) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

#[test]
fn compose_decompose_round_trips() {
    let mut rng = common::rng(10);
    for i in 0..1000 {
        let rho = common::mixed_state(&mut rng, i);
        let p = decompose(&rho);
        let back = p.compose();
        assert!(common::max_entry_diff(back.matrix(), rho.matrix()) <= 1e-12);
        assert!(decompose(&back).max_abs_diff(&p) <= 1e-12);
        assert!(norm(p.x) <= 1.0 + 1e-9 && norm(p.y) <= 1.0 + 1e-9);
    }
}

#[test]
fn normal_form_invariants() {
    let mut rng = common::rng(11);
    for i in 0..1000 {
        let rho = common::mixed_state(&mut rng, i);
        let p = decompose(&rho);
        let nf = normal_form(&p);

        let diag = nf.o_a.mul(&p.t).mul(&nf.o_b.transpose());
        assert!(diag.max_abs_diff(&RealMatrix3::diag(nf.d)) <= 1e-10);
        assert!((nf.o_a.det() - 1.0).abs() <= 1e-12 && (nf.o_b.det() - 1.0).abs() <= 1e-12);
        assert!(nf.sigma.windows(2).all(|w| w[0] <= w[1]));
        for k in 0..3 {
            assert!((nf.sigma[k] - nf.d[k].abs()).abs() <= 1e-15);
        }
        assert!((norm(nf.x_rot) - norm(p.x)).abs() <= 1e-12);
        assert!((norm(nf.y_rot) - norm(p.y)).abs() <= 1e-12);

        // Rotated state is locally equivalent: same spectrum, same verdicts.
        let rotated = nf.params().compose();
        let a = common::sorted(rho.eigenvalues());
        let b = common::sorted(rotated.eigenvalues());
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() <= 1e-10, "{a:?} vs {b:?}");
        }
        let ca = classify(&rho, DEFAULT_TOL).unwrap();
        let cb = classify(&rotated, DEFAULT_TOL).unwrap();
        assert_eq!(ca.signature(), cb.signature(), "state {i}");
    }
}

#[test]
fn degenerate_singular_values_do_not_change_verdicts() {
    // Werner-like states have sigma = (s, s, s); any rotation choice is valid.
    for s in [0.1, 0.3, 1.0 / 3.0, 0.5, 0.9] {
        let p = FanoParams::bell_diagonal([s, -s, s]);
        let nf = normal_form(&p);
        let ca = classify(&p.compose(), DEFAULT_TOL).unwrap();
        let cb = classify(&nf.params().compose(), DEFAULT_TOL).unwrap();
        assert_eq!(ca.signature(), cb.signature());
        assert_eq!(normal_form(&p), nf);
    }
}
