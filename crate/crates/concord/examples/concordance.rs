//! Count the subsequences shared by a panel and normalize the count.
//!
//! ```text
//! cargo run -p concord --example concordance
//! ```

use concord::kernel::{kappa_set, normalized_concordance};
use concord::model::OrderingSet;

fn main() -> concord::Result<()> {
    let set = OrderingSet::from_char_strings(&["abcde", "abdce", "bdce"])?;
    let report = kappa_set(&set);

    println!("orderings:");
    for o in set.orderings() {
        println!("  {o}");
    }
    println!("kappa      = {}", report.kappa);
    let per: Vec<String> = report.per_symbol.iter().map(|c| c.to_string()).collect();
    println!("per symbol = [{}]", per.join(", "));
    println!("normalized = {:.6}", normalized_concordance(&set));
    println!("llcs       = {}", report.llcs);
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(())
}
