//! The smallest covering set: the maximal common subsequences, which
//! together contain every common subsequence. Checked against brute force.

use concord::model::OrderingSet;
use concord::oracle;
use concord::report::render;
use concord::scs::smallest_covering_set;
use concord::DEFAULT_CAP;

fn main() -> concord::Result<()> {
    let set = OrderingSet::from_char_strings(&["abcdef", "acfbde", "abdcfe"])?;
    let report = smallest_covering_set(&set, DEFAULT_CAP)?;

    for q in &report.lcs {
        println!("lcs   {}", render(q, " "));
    }
    for q in &report.covering_set.sequences {
        println!("cover {}", render(q, " "));
    }
    let processed: Vec<String> = report
        .uncovered_symbols_processed
        .iter()
        .map(|s| s.to_string())
        .collect();
    println!("symbols processed after the lcs: {}", processed.join(" "));

    let brute = oracle::intersect_all(&set)?;
    println!("{} common subsequences in total", brute.len());
    let mut expected: Vec<String> = oracle::maximal_elements(&brute)
        .into_iter()
        .map(|q| q.join(" "))
        .collect();
    expected.sort();
    let mut got: Vec<String> = report
        .covering_set
        .sequences
        .iter()
        .map(|q| render(q, " "))
        .collect();
    got.sort();
    println!("matches brute force: {}", got == expected);
    Ok(())
}
