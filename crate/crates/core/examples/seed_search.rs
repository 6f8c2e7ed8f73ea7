//! Prints the transition search over the bundled seed tables.

use k3web::dataio::{numerical_pairs, Dataset};
use k3web::transitions::{render_search, search_all};

fn main() {
    let d = Dataset::seed();
    let results = search_all(&d.families.families, &d.k3s.families, &numerical_pairs(&d.edges));
    print!("{}", render_search(&results));
}
