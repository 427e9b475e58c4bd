use psdef::groebner::{
    buchberger_field, is_member, macaulay_oracle_dim, membership_certificate, standard_monomials, strong_buchberger_int,
    verify_certificate, IdealBasis, IntOptions,
};
use psdef::poly::{parse_poly, F2Poly, Ring, ZPoly};

fn main() {
    // x^2 + y^3, x*y + x over F2, truncated at increasing degree
    let ring = Ring::grevlex(2);
    let gens: Vec<F2Poly> = ["x0^2 + x1^3", "x0*x1 + x0"].iter().map(|s| parse_poly(ring, s).unwrap()).collect();
    let ideal = IdealBasis::new(ring, gens, "example").unwrap();
    for k in 1..=5 {
        let gb = buchberger_field(&ideal, Some(k));
        let std = standard_monomials(&gb).unwrap();
        let oracle = macaulay_oracle_dim(&ideal, k).unwrap();
        println!("k={k}: {} basis elements, {} standard monomials (oracle {oracle})", gb.basis.len(), std.len());
    }
    let gb = buchberger_field(&ideal, None);
    let x0: F2Poly = parse_poly(ring, "x0").unwrap();
    println!("global basis: {}", gb.basis.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "));
    println!("x0 in ideal: {}", is_member(&x0, &gb).unwrap());

    // strong basis over the integers keeps track of 2-torsion
    let r = Ring::grevlex(2);
    let zg: Vec<ZPoly> = ["2*x0 + x1", "3*x1^2 - 1", "x0*x1 + 4"].iter().map(|s| parse_poly(r, s).unwrap()).collect();
    let zideal = IdealBasis::new(r, zg, "integer example").unwrap();
    let sgb = strong_buchberger_int(&zideal);
    println!("strong basis over Z: {}", sgb.basis.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "));
    let target: ZPoly = parse_poly(r, "6*x0*x1^2 + 3*x1^3 - 2*x0 - x1").unwrap();
    let (m, cert) = membership_certificate(&target, &zideal, &IntOptions::default()).unwrap();
    let cert = cert.unwrap();
    println!("target {m}; certificate with {} steps verifies: {}", cert.nodes.len(), verify_certificate(&cert));
}
