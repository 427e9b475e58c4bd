use psdef::group::GroupSpec;
use psdef::repcount::{iso_verdict, span_upper_bound, Family, VerdictOptions};

fn main() {
    let opts = VerdictOptions::default();
    for (spec, family) in [
        ("abelian:2", Family::Abelian),
        ("abelian:4", Family::Abelian),
        ("abelian:2x2", Family::Abelian),
        ("abelian:2x2x2", Family::Abelian),
        ("dihedral:4", Family::Dihedral),
        ("dihedral:8", Family::Dihedral),
        ("extraspecial32", Family::Extraspecial),
    ] {
        let g = GroupSpec::from_cli_name(spec).unwrap().build().unwrap();
        let r = iso_verdict(&g, family, &opts).unwrap();
        println!(
            "{spec:<14} upper {:>4} lower {:>4} computed {:>4} -> {:?}",
            fmt(r.upper_bound_d_ps),
            fmt(r.lower_bound_rank),
            fmt(r.computed_dim),
            r.verdict
        );
        if let Some(w) = r.witness {
            println!("{:14} T({}) - 2 in I + m^{}: {}; in the lifting ideal: {}", "", w.element, w.ps_k, w.ps_member, w.lift_member);
        }
    }
    let g = GroupSpec::from_cli_name("dihedral:16").unwrap().build().unwrap();
    println!("dihedral:16 upper bound {}", span_upper_bound(&g.group, Family::Dihedral).unwrap());
}

fn fmt(v: Option<usize>) -> String {
    v.map_or("-".into(), |v| v.to_string())
}
