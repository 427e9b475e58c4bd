use psdef::group::{class_structure, dihedral, GroupSpec};
use psdef::repcount::candidate_profile;

fn main() {
    let g = GroupSpec::from_cli_name("extraspecial32").unwrap().build().unwrap();
    let pres = g.presentation.as_ref().unwrap();
    let cs = class_structure(&g.group);
    println!("{}: order {}, {} classes", g.name, g.group.order(), cs.num_classes());
    let center: Vec<String> = g.group.center().iter().map(|&z| g.group.label(z)).collect();
    println!("center {:?}", center);
    println!("|[G,G]| = {}, |G/[G,G]| = {}", cs.commutator_subgroup.len(), cs.abelianization.order());
    println!("presentation: {} generators, {} relations, holds: {}", pres.generator_names.len(), pres.relations.len(), pres.holds_in(&g.group));
    for (lhs, rhs) in &pres.relations {
        println!("  {} = {}", pres.format_word(lhs), pres.format_word(rhs));
    }
    let p = candidate_profile(&g.group);
    println!("nonlinear irreducible degrees {:?}, n_G = {:?}", p.nonlinear_degree_multisets, p.n_g);

    for m in [4, 8, 16] {
        let (d, _) = dihedral(m).unwrap();
        let p = candidate_profile(&d);
        println!("D{}: classes {}, n1 {}, n2 {:?}, n_G {:?}", 2 * m, p.num_classes, p.n1, p.n2, p.n_g);
    }
}
