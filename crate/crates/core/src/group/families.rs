//! The group families used throughout: cyclic, abelian and dihedral
//! 2-groups and the extraspecial group of order 32.

use super::{FiniteGroup, GroupError, GroupPresentation, Word};

fn names(k: usize) -> Vec<String> {
    (0..k).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

fn power_word(s: usize, e: i32) -> Word {
    vec![(s, e)]
}

pub fn cyclic(n: usize) -> Result<(FiniteGroup, GroupPresentation), GroupError> {
    abelian_group(&[n], format!("C{n}"))
}

/// Direct product of cyclic 2-groups, element index in mixed radix with the
/// first factor least significant.
pub fn abelian_2group(orders: &[usize]) -> Result<(FiniteGroup, GroupPresentation), GroupError> {
    if let Some(&o) = orders.iter().find(|&&o| !o.is_power_of_two() || o < 2) {
        return Err(GroupError::InvalidParameter(format!("cyclic order {o} is not a power of 2")));
    }
    let name = orders.iter().map(|o| format!("C{o}")).collect::<Vec<_>>().join("x");
    abelian_group(orders, name)
}

fn abelian_group(orders: &[usize], name: String) -> Result<(FiniteGroup, GroupPresentation), GroupError> {
    if orders.is_empty() || orders.contains(&0) {
        return Err(GroupError::InvalidParameter("need at least one positive cyclic order".into()));
    }
    let n: usize = orders.iter().product();
    let digits = |mut x: usize| {
        orders
            .iter()
            .map(|&o| {
                let d = x % o;
                x /= o;
                d
            })
            .collect::<Vec<_>>()
    };
    let compose = |ds: &[usize]| ds.iter().zip(orders).rev().fold(0, |acc, (&d, &o)| acc * o + d);
    let table = (0..n)
        .map(|a| {
            let da = digits(a);
            (0..n)
                .map(|b| {
                    let s: Vec<usize> = da.iter().zip(digits(b)).zip(orders).map(|((x, y), o)| (x + y) % o).collect();
                    compose(&s)
                })
                .collect()
        })
        .collect();
    let group = FiniteGroup::build_from_table(table)?;
    let k = orders.len();
    let mut relations: Vec<(Word, Word)> = orders.iter().enumerate().map(|(i, &o)| (power_word(i, o as i32), vec![])).collect();
    for i in 0..k {
        for j in i + 1..k {
            relations.push((vec![(i, 1), (j, 1)], vec![(j, 1), (i, 1)]));
        }
    }
    let mut unit = vec![0; k];
    let generator_elements = (0..k)
        .map(|i| {
            unit.iter_mut().for_each(|d| *d = 0);
            unit[i] = 1 % orders[i];
            compose(&unit)
        })
        .collect();
    let pres = GroupPresentation { name, generator_names: names(k), relations, generator_elements };
    Ok((group, pres))
}

/// Dihedral group of order `2m`; `r^i s^j` has index `i + m*j`.
pub fn dihedral(m: usize) -> Result<(FiniteGroup, GroupPresentation), GroupError> {
    if m < 2 {
        return Err(GroupError::InvalidParameter(format!("dihedral needs m >= 2, got {m}")));
    }
    let n = 2 * m;
    let table = (0..n)
        .map(|a| {
            let (i, j) = (a % m, a / m);
            (0..n)
                .map(|b| {
                    let (k, l) = (b % m, b / m);
                    // (r^i s^j)(r^k s^l) = r^(i +- k) s^(j+l)
                    let e = if j == 0 { (i + k) % m } else { (i + m - k) % m };
                    e + m * ((j + l) % 2)
                })
                .collect()
        })
        .collect();
    let labels = (0..n)
        .map(|a| {
            let (i, j) = (a % m, a / m);
            match (i, j) {
                (0, 0) => "1".to_string(),
                (0, 1) => "s".to_string(),
                (1, 0) => "r".to_string(),
                (1, 1) => "r*s".to_string(),
                (_, 0) => format!("r^{i}"),
                _ => format!("r^{i}*s"),
            }
        })
        .collect();
    let group = FiniteGroup::build_labeled(table, Some(labels))?;
    let pres = GroupPresentation {
        name: format!("D{n}"),
        generator_names: vec!["r".into(), "s".into()],
        relations: vec![(vec![(0, m as i32)], vec![]), (vec![(1, 2)], vec![]), (vec![(1, 1), (0, 1), (1, 1), (0, 1)], vec![])],
        generator_elements: vec![1, m],
    };
    Ok((group, pres))
}

/// The extraspecial group `2^(1+4)_+` of order 32, as `D8 x D8` modulo the
/// central element `a^2 c^2`, with generators `a, b, c, d`.
pub fn extraspecial_32_plus() -> (FiniteGroup, GroupPresentation) {
    let (d8, _) = dihedral(4).expect("D8");
    let prod = d8.direct_product(&d8);
    // in D8: r = 1, s = 4; in the product (x, y) = x + 8y
    let (a, b, c, d) = (1, 4, 8, 32);
    let z = prod.mul(prod.pow(a, 2), prod.pow(c, 2));
    let (g, proj) = prod.quotient_by_normal(&[0, z]).expect("a^2 c^2 is central of order 2");
    let generator_elements = vec![proj[a], proj[b], proj[c], proj[d]];

    // label every element by its normal form a^i b^j c^k d^l, c^k with k < 2
    let mut labels = vec![String::new(); 32];
    for i in 0..4 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    let word: Word = vec![(0, i), (1, j), (2, k), (3, l)];
                    let x = g.eval_word(&word, &generator_elements);
                    let text: Vec<String> = ["a", "b", "c", "d"]
                        .iter()
                        .zip([i, j, k, l])
                        .filter(|(_, e)| *e > 0)
                        .map(|(n, e)| if e == 1 { n.to_string() } else { format!("{n}^{e}") })
                        .collect();
                    labels[x] = if text.is_empty() { "1".into() } else { text.join("*") };
                }
            }
        }
    }
    let g = g.with_labels(labels).expect("32 labels");

    let w = |v: &[(usize, i32)]| v.to_vec();
    let relations = vec![
        (w(&[(0, 4)]), w(&[])),
        (w(&[(1, 2)]), w(&[])),
        (w(&[(3, 2)]), w(&[])),
        (w(&[(2, 2)]), w(&[(0, 2)])),
        (w(&[(1, 1), (0, 1), (1, 1)]), w(&[(0, -1)])),
        (w(&[(0, 1), (2, 1)]), w(&[(2, 1), (0, 1)])),
        (w(&[(0, 1), (3, 1)]), w(&[(3, 1), (0, 1)])),
        (w(&[(1, 1), (2, 1)]), w(&[(2, 1), (1, 1)])),
        (w(&[(1, 1), (3, 1)]), w(&[(3, 1), (1, 1)])),
        (w(&[(3, 1), (2, 1), (3, 1)]), w(&[(0, 2), (2, 1)])),
    ];
    let pres = GroupPresentation {
        name: "extraspecial32".into(),
        generator_names: names(4),
        relations,
        generator_elements,
    };
    assert!(pres.holds_in(&g), "extraspecial relations must hold");
    (g, pres)
}

#[cfg(test)]
mod tests {
    use super::super::class_structure;
    use super::*;

    /// Conjugacy classes by brute force, independent of `class_structure`.
    fn brute_classes(g: &FiniteGroup) -> usize {
        let n = g.order();
        let mut seen = vec![false; n];
        let mut count = 0;
        for x in 0..n {
            if !seen[x] {
                count += 1;
                for y in 0..n {
                    let c = g.table()[g.table()[y][x]][g.inv(y)];
                    seen[c] = true;
                }
            }
        }
        count
    }

    #[test]
    fn dihedral_orders_and_classes() {
        for (m, order, classes) in [(2, 4, 4), (4, 8, 5), (8, 16, 7), (16, 32, 11)] {
            let (g, p) = dihedral(m).unwrap();
            assert_eq!(g.order(), order);
            assert_eq!(brute_classes(&g), classes);
            assert_eq!(class_structure(&g).num_classes(), classes);
            assert!(p.holds_in(&g));
        }
        assert!(dihedral(2).unwrap().0.is_abelian());
        assert!(dihedral(1).is_err());
    }

    #[test]
    fn abelian_groups() {
        let (g, p) = abelian_2group(&[4, 2]).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(class_structure(&g).num_classes(), 8);
        assert!(p.holds_in(&g));
        let (h, _) = abelian_2group(&[2, 2, 2, 2]).unwrap();
        assert_eq!(h.order(), 16);
        assert_eq!(class_structure(&h).commutator_subgroup, vec![0]);
        assert!(abelian_2group(&[3]).is_err());
        assert_eq!(cyclic(5).unwrap().0.order(), 5);
    }

    #[test]
    fn extraspecial_structure() {
        let (g, p) = extraspecial_32_plus();
        let cs = class_structure(&g);
        assert_eq!(g.order(), 32);
        assert_eq!(g.center().len(), 2);
        let a2 = g.pow(p.generator_elements[0], 2);
        assert_eq!(cs.commutator_subgroup, {
            let mut v = vec![0, a2];
            v.sort();
            v
        });
        assert_eq!(cs.abelianization.order(), 16);
        assert!(cs.abelianization.is_abelian());
        assert!((1..16).all(|x| cs.abelianization.element_order(x) == 2));
        assert_eq!(cs.num_classes(), 17);
        assert_eq!(brute_classes(&g), 17);
        assert_eq!(g.label(a2), "a^2");
        assert_eq!(p.relators().len(), 10);
    }
}
