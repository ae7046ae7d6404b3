//! Reverse lookup: which catalog families produce a given m?

use erdos_straus::family::match_m;

fn main() {
    for m in [4u64, 10, 304, 1302] {
        let hits = match_m(m);
        let labels: Vec<String> = hits.iter().map(|i| i.label()).collect();
        println!("m = {m} (n = {}): {}", 24 * m + 1, labels.join(", "));
    }
}
