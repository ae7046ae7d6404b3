//! Full census for m <= 2000: prime/tame/wild counts and per-family
//! coverage, printed as the human-readable summary plus the CSV table.

use erdos_straus::arith::SpfTable;
use erdos_straus::survey::{coverage, write_family_csv};

fn main() {
    let m_max = 2000;
    let spf = SpfTable::new(18 * m_max).expect("sieve");
    let rep = coverage(m_max, 4, &spf).expect("survey");
    eprint!("{}", rep.render_text());
    write_family_csv(&rep, std::io::stdout().lock()).expect("write");
}
