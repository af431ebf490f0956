//! Enumerate every longest common subsequence, and count them without
//! enumerating when there are too many.

use concord::index::{build_position_index, build_truth_table};
use concord::lcs::{all_lcs, count_lcs, psi_lengths};
use concord::model::OrderingSet;
use concord::report::render;
use concord::Error;

fn main() -> concord::Result<()> {
    let set = OrderingSet::from_char_strings(&["abcdef", "badcfe"])?;
    let found = all_lcs(&set, 100)?;
    println!("llcs = {}, {} sequences", found.llcs, found.len());
    for q in &found.sequences {
        println!("  {}", render(q, " "));
    }

    let t = build_truth_table(&build_position_index(&set));
    let psi = psi_lengths(&t);
    println!("psi   = {:?}", psi.psi);
    println!("count = {}", count_lcs(&psi, &t));

    match all_lcs(&set, 5) {
        Err(Error::CapExceeded { cap }) => println!("with cap {cap}: refused"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
