//! Prints the whole family catalog as the versioned TSV table.
//! `data/catalog.tsv` in the repository is exactly this output.

fn main() {
    print!("{}", erdos_straus::family::render_catalog_table());
}
