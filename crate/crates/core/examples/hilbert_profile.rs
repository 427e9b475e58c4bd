use std::time::Instant;

use psdef::group::{abelian_2group, extraspecial_32_plus};
use psdef::psring::{hilbert_profile, PsOptions};

fn main() {
    let opts = PsOptions::default();
    let (g, _) = extraspecial_32_plus();
    let t = Instant::now();
    let p = hilbert_profile(&g, 8, &opts).expect("profile");
    println!("extraspecial 2^(1+4): dims {:?} series {:?} ({:.1?})", p.dims, p.series, t.elapsed());
    let (h, _) = abelian_2group(&[2, 2, 2, 2]).unwrap();
    let t = Instant::now();
    let p = hilbert_profile(&h, 8, &opts).expect("profile");
    println!("(Z/2)^4:             dims {:?} series {:?} ({:.1?})", p.dims, p.series, t.elapsed());
}
