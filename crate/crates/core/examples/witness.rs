use psdef::group::{class_structure, GroupSpec};
use psdef::psring::{witness_membership, PsOptions};

fn main() {
    let g = GroupSpec::from_cli_name("extraspecial32").unwrap().build().unwrap();
    let opts = PsOptions::default();
    let a2 = g.element("a^2").unwrap();
    for k in 1..=3 {
        let m = witness_membership(&g.group, a2, k, &opts).unwrap();
        println!("T({}) in I + m^{k}: {m}", g.group.label(a2));
    }
    // every other element: which T(g) die already modulo m^3
    let cs = class_structure(&g.group);
    for &rep in &cs.class_reps {
        let m = witness_membership(&g.group, rep, 3, &opts).unwrap();
        println!("  class of {:<8} size {:>2}: T in I + m^3: {m}", g.group.label(rep), cs.classes[cs.class_of[rep]].len());
    }
}
