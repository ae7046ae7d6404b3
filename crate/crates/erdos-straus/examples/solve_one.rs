//! Solves 4/n for a few representative n, one per reduction rule, and
//! prints each derivation.

use erdos_straus::solver::solve;

fn main() {
    // One n per rule: even, multiple of 3, 2 mod 3, 3 mod 4, 13 mod 24,
    // composite 1 mod 24, tame prime, wild prime.
    for n in [6u64, 9, 11, 7, 13, 25, 97, 409] {
        let d = solve(n).expect("every n >= 3 solves");
        println!(
            "4/{} = 1/{} + 1/{} + 1/{}   via {:?}",
            n, d.triple.n1, d.triple.n2, d.triple.n3, d.steps
        );
    }
}
