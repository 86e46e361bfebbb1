use wq_core::yangian::{
    check_diagram, check_eta_images, check_rtt_with, check_sign_symmetry, check_step_identities,
    check_threeterms_with, YangianImages,
};

const SIGNS: [i8; 2] = [1, -1];

#[test]
fn rtt_relation_small_orders() {
    for n in 1..=3 {
        let img = YangianImages::new(n);
        for m in 1..=n + 1 {
            for r in 1..=n + 1 {
                for i in SIGNS {
                    for j in SIGNS {
                        for k in SIGNS {
                            for l in SIGNS {
                                let c = check_rtt_with(&img, m, r, [i, j, k, l]);
                                assert!(c.holds, "{c:?}");
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn threeterm_recursion() {
    for n in 1..=4 {
        let img = YangianImages::new(n);
        for k in 1..=n {
            for i in 0..=n + 1 {
                let c = check_threeterms_with(&img, k, i);
                assert!(c.holds, "{c:?}");
            }
            let c = check_step_identities(&img, k);
            assert!(c.holds, "{c:?}");
        }
    }
}

#[test]
fn eta_matches_phi_and_index_negation() {
    for n in 1..=5 {
        let img = YangianImages::new(n);
        let c = check_eta_images(&img).unwrap();
        assert!(c.holds, "{c:?}");
        assert!(check_sign_symmetry(&img, n + 1).holds);
    }
}

#[test]
fn coproduct_diagram_selects_one_flip() {
    let mut seen = Vec::new();
    for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let c = check_diagram(m, n, m + n).unwrap();
        assert!(c.holds, "{c:?}");
        seen.push(c.constants["flip"].clone());
    }
    seen.dedup();
    assert_eq!(seen.len(), 1, "{seen:?}");
}
