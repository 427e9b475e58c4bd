use psdef::poly::{format_canonical, mat_word, parse_poly, Integer, PolyMatrix2, Ring, ZPoly};

fn main() {
    let r = Ring::grevlex(4);
    let f: ZPoly = parse_poly(r, "2*x0 + x1*x2 - 3").unwrap();
    let g: ZPoly = parse_poly(r, "x0^2 - x3").unwrap();
    let h = &f * &g;
    println!("f*g      = {h}");
    println!("lead     = {:?}", h.leading_term());
    println!("mod 2    = {}", h.reduce_mod2());
    println!("canonical: {}", format_canonical(&h));

    // generic 2x2 matrix I + X and the trace of its square
    let m = PolyMatrix2::generic_unipotent(r, 0);
    let sq = mat_word(r, std::slice::from_ref(&m), &[None], &[(0, 2)]).unwrap();
    println!("tr((I+X)^2) - 2 = {}", &sq.trace() - &ZPoly::constant(r, Integer::from(2)));
    println!("det(I+X) = {}", m.det());
}
