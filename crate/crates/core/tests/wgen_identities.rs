use wq_core::wgen::*;
use wq_core::GaussianRational;

fn g(v: i64) -> GaussianRational {
    GaussianRational::from_int(v)
}

#[test]
fn anticommutator_relations_up_to_six() {
    for n in 1..=6 {
        let c = check_oddrel(n, n - 1);
        assert!(c.holds, "{c:?}");
    }
}

#[test]
fn anticommutator_relations_beyond_range() {
    for n in 1..=4 {
        let c = check_oddrel(n, n + 1);
        assert!(c.holds, "{c:?}");
    }
}

#[test]
fn gram_determinant_constants() {
    for n in 1..=5 {
        let r = verify_gram_det(n).unwrap();
        assert!(r.holds, "n = {n}");
        assert_eq!(r.constant, Some(g(1 << n)), "n = {n}");
    }
}

#[test]
fn decomposition_all_splits() {
    for n in 2..=6 {
        for s in 1..n {
            let c = check_decomposition(n, s).unwrap();
            assert!(c.holds, "{c:?}");
        }
    }
}

#[test]
fn odd_z_formulas_agree() {
    for n in 1..=6 {
        assert!(check_odd_z_matches_u(n).holds);
    }
}

#[test]
fn recursion_and_closed_forms() {
    for n in 1..=6 {
        let c = check_z_recursion(n);
        assert!(c.holds, "{c:?}");
    }
}

#[test]
fn q_symmetry_and_leading_terms() {
    for n in 2..=6 {
        for k in [0, 2, 4] {
            let c = check_q_symmetry(n, k).unwrap();
            assert!(c.holds, "{c:?}");
        }
        assert!(check_phi_antidiagonal(n, 2 * n).unwrap().holds);
    }
    for n in 1..=6 {
        let c = check_leading_terms(n);
        assert!(c.holds, "{c:?}");
    }
}

#[test]
fn jacobian_certificates() {
    let c = check_jacobian_independence(2, &[g(1), g(2)]).unwrap();
    assert!(c.holds);
    assert_eq!(c.constants["det"], "-1");
    assert!(check_jacobian_independence(1, &[g(3)]).unwrap().holds);
    assert!(check_jacobian_independence(4, &[g(1), g(2), g(3), g(5)]).unwrap().holds);
    for n in 1..=6 {
        let point: Vec<_> = (1..=n as i64).map(|v| GaussianRational::ratio(v * v + 1, v + 1)).collect();
        assert!(check_jacobian_independence(n, &point).unwrap().holds, "n = {n}");
    }
}
