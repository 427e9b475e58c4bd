mod common;

use proptest::prelude::*;
use psdef::group::{abelian_2group, class_structure, cyclic, dihedral, extraspecial_32_plus, FiniteGroup, GroupSpec};
use psdef::repcount::{candidate_profile, irrep_profile, span_upper_bound, Family};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn family_groups() -> Vec<(String, FiniteGroup)> {
    let mut out = common::groups_up_to_four();
    for orders in [vec![8], vec![4, 2], vec![2, 2, 2], vec![2, 2, 2, 2]] {
        out.push((format!("abelian {orders:?}"), abelian_2group(&orders).unwrap().0));
    }
    for m in [3, 4, 5, 8] {
        out.push((format!("D{}", 2 * m), dihedral(m).unwrap().0));
    }
    out.push(("extraspecial".into(), extraspecial_32_plus().0));
    out
}

#[test]
fn group_axioms_hold() {
    for (name, g) in family_groups() {
        let n = g.order();
        assert_eq!(g.identity(), 0, "{name}");
        for a in 0..n {
            assert_eq!(g.mul(a, g.inv(a)), 0, "{name}");
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)), "{name}");
                }
            }
        }
    }
}

#[test]
fn class_equation_and_abelianization() {
    for (name, g) in family_groups() {
        let cs = class_structure(&g);
        let total: usize = cs.classes.iter().map(|c| c.len()).sum();
        assert_eq!(total, g.order(), "{name}");
        for c in &cs.classes {
            assert_eq!(g.order() % c.len(), 0, "{name}");
        }
        assert_eq!(cs.commutator_subgroup.len() * cs.abelianization.order(), g.order(), "{name}");
        assert!(cs.abelianization.is_abelian());
        for x in 0..g.order() {
            for y in 0..g.order() {
                let p = cs.ab_projection[g.mul(x, y)];
                assert_eq!(p, cs.abelianization.mul(cs.ab_projection[x], cs.ab_projection[y]), "{name}");
            }
        }
        let z = g.center();
        assert_eq!(cs.classes.iter().filter(|c| c.len() == 1).count(), z.len(), "{name}");
    }
}

#[test]
fn irrep_profiles_are_consistent() {
    for (name, g) in family_groups() {
        let p = candidate_profile(&g);
        for ms in &p.nonlinear_degree_multisets {
            assert_eq!(p.n1 + ms.iter().map(|d| d * d).sum::<usize>(), g.order(), "{name}");
            assert_eq!(p.n1 + ms.len(), p.num_classes, "{name}");
        }
        assert!(irrep_profile(&g).is_ok(), "{name}");
    }
}

#[test]
fn squeeze_bounds_match_counts() {
    for orders in [vec![2], vec![4], vec![2, 2], vec![8], vec![4, 2], vec![2, 2, 2]] {
        let g = abelian_2group(&orders).unwrap().0;
        assert_eq!(span_upper_bound(&g, Family::Abelian).unwrap(), candidate_profile(&g).n_g.unwrap());
    }
    for m in [4, 8, 16] {
        let g = dihedral(m).unwrap().0;
        assert_eq!(span_upper_bound(&g, Family::Dihedral).unwrap(), candidate_profile(&g).n_g.unwrap());
    }
}

#[test]
fn extraspecial_structure() {
    let (g, pres) = extraspecial_32_plus();
    assert!(pres.holds_in(&g));
    let cs = class_structure(&g);
    assert_eq!(cs.num_classes(), 17);
    assert_eq!(g.center(), cs.commutator_subgroup);
    let a2 = g.eval_word(&[(0, 2)], &pres.generator_elements);
    let c2 = g.eval_word(&[(2, 2)], &pres.generator_elements);
    assert_eq!(a2, c2);
    assert_eq!(g.center(), vec![0, a2]);
    // the generators generate
    assert_eq!(g.generated_subgroup(&pres.generator_elements).len(), 32);
}

#[test]
fn spec_files_and_names() {
    let json = r#"{"name": "z3", "kind": "table", "table": [[0,1,2],[1,2,0],[2,0,1]], "builtin": null}"#;
    let g = GroupSpec::from_json(json).unwrap().build().unwrap();
    assert_eq!(g.group.order(), 3);
    let b = r#"{"name": "d8", "kind": "builtin", "table": null, "builtin": {"family": "dihedral", "params": [4]}}"#;
    let d8 = GroupSpec::from_json(b).unwrap().build().unwrap();
    assert_eq!(d8.group.order(), 8);
    assert_eq!(d8.element("r^2").unwrap(), d8.group.eval_word(&[(0, 2)], &d8.presentation.as_ref().unwrap().generator_elements));
    for bad in ["dihedral", "abelian:", "extraspecial32:2", "klein"] {
        assert!(GroupSpec::from_cli_name(bad).is_err(), "{bad}");
    }
    assert!(GroupSpec::from_json(r#"{"name": "x", "kind": "table", "table": [[0,1],[0,1]], "builtin": null}"#).unwrap().build().is_err());
    assert!(cyclic(0).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn class_data_survives_relabeling(seed in any::<u64>(), which in 0usize..4) {
        let g = [dihedral(4).unwrap().0, abelian_2group(&[4, 2]).unwrap().0, dihedral(3).unwrap().0, extraspecial_32_plus().0][which].clone();
        let h = common::relabel(&g, &mut ChaCha8Rng::seed_from_u64(seed));
        let (a, b) = (class_structure(&g), class_structure(&h));
        let mut sa: Vec<usize> = a.classes.iter().map(|c| c.len()).collect();
        let mut sb: Vec<usize> = b.classes.iter().map(|c| c.len()).collect();
        sa.sort();
        sb.sort();
        prop_assert_eq!(sa, sb);
        prop_assert_eq!(a.abelianization.order(), b.abelianization.order());
        prop_assert_eq!(g.center().len(), h.center().len());
        prop_assert_eq!(candidate_profile(&g).n_g, candidate_profile(&h).n_g);
    }

    #[test]
    fn quotients_by_center_are_groups(which in 0usize..3) {
        let g = [dihedral(4).unwrap().0, dihedral(8).unwrap().0, extraspecial_32_plus().0][which].clone();
        let z = g.center();
        let (q, proj) = g.quotient_by_normal(&z).unwrap();
        prop_assert_eq!(q.order() * z.len(), g.order());
        for x in 0..g.order() {
            for y in 0..g.order() {
                prop_assert_eq!(proj[g.mul(x, y)], q.mul(proj[x], proj[y]));
            }
        }
    }
}
