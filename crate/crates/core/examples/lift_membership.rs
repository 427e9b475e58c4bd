use psdef::group::{cyclic, parse_word, GroupPresentation, GroupSpec};
use psdef::liftring::{
    build_lift_ideal, coeff_certificate, coeff_membership, find_point_certificate, trace_defect, LiftOptions, WitnessMode,
};
use psdef::groebner::verify_certificate;

fn main() {
    let g = GroupSpec::from_cli_name("extraspecial32").unwrap().build().unwrap();
    let pres = g.presentation.as_ref().unwrap();
    let model = build_lift_ideal(pres, WitnessMode::AsNeeded).unwrap();
    println!("lifting ideal: {} variables, {} generators", model.ring.num_vars, model.ideal.generators.len());
    let opts = LiftOptions::default();
    for w in ["a^2", "c^2", "a", "a*c"] {
        let word = parse_word(w, &pres.generator_names).unwrap();
        let t = trace_defect(&model, &word).unwrap();
        let out = coeff_membership(&model, &t, &opts).unwrap();
        print!("tr({w}) - 2: member {} (mod 2 {}), basis {} of degree <= {}", out.member, out.mod2, out.basis_size, out.max_degree);
        if out.member == psdef::groebner::Membership::Yes {
            let (_, cert) = coeff_certificate(&model, &t, &opts).unwrap();
            let cert = cert.unwrap();
            print!(", certificate of {} steps verifies: {}", cert.nodes.len(), verify_certificate(&cert));
        }
        println!();
    }

    // Z/2 = <s | s^2 = 1>: tr(s) - 2 survives, with an explicit integer point
    let (z2, _) = cyclic(2).unwrap();
    let p = GroupPresentation {
        name: "Z/2".into(),
        generator_names: vec!["s".into()],
        relations: vec![(vec![(0, 2)], vec![])],
        generator_elements: vec![1],
    };
    assert!(p.holds_in(&z2));
    let m = build_lift_ideal(&p, WitnessMode::AsNeeded).unwrap();
    let t = trace_defect(&m, &vec![(0, 1)]).unwrap();
    println!("Z/2: tr(s) - 2 member {}", coeff_membership(&m, &t, &opts).unwrap().member);
    if let Some(pt) = find_point_certificate(&m, &t, 2, 100_000) {
        println!("  nonzero at X = {pt:?}: value {}", t.polynomial.eval(&pt));
    }
}
