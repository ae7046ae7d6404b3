//! Certificate shifting: from one tame certificate, infinitely many m
//! carry the same summand pair.  Shifting by any multiple of
//! lcm(im1, im2) preserves the identity (the shifted n need not be
//! prime).

use erdos_straus::arith::SpfTable;
use erdos_straus::tame::{certificate_to_triple, find_tame, shift_certificate, SearchMode};

fn main() {
    let m = 4;
    let spf = SpfTable::new(18 * m).expect("sieve");
    let cert = find_tame(m, SearchMode::First, &spf).expect("search")[0];
    println!("base: {cert:?}");
    for c in 1..=3 {
        let shifted = shift_certificate(&cert, c).expect("shift");
        let t = certificate_to_triple(&shifted).expect("still a valid certificate");
        println!(
            "shift {c}: m = {}, 4/{} = 1/{} + 1/{} + 1/{}",
            shifted.m,
            shifted.n(),
            t.n1,
            t.n2,
            t.n3
        );
    }
}
