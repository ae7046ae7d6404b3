//! Classifies every m <= 200 with 24m+1 prime and prints the records as
//! JSONL, exactly as the `classify` subcommand would.

use erdos_straus::arith::SpfTable;
use erdos_straus::survey::{classify_range, write_jsonl};

fn main() {
    let m_max = 200;
    let spf = SpfTable::new(18 * m_max).expect("sieve");
    let records = classify_range(m_max, 4, &spf).expect("classification");
    eprintln!("{} prime records for m <= {m_max}", records.len());
    write_jsonl(&records, true, std::io::stdout().lock()).expect("write");
}
