//! Pairwise distances between judges and a ranking of likely outliers.
//!
//! ```text
//! cargo run -p concord --example distances -- crates/concord/data/panel.txt
//! ```

use std::env;
use std::fs;

use concord::kernel::{distance_matrix, outlier_scores};
use concord::model::{parse_orderings, OrderingSet};

const PANEL: &str = include_str!("../data/panel.txt");

fn main() -> concord::Result<()> {
    let text = match env::args().nth(1) {
        Some(path) => fs::read_to_string(path).expect("readable file"),
        None => PANEL.to_string(),
    };
    let set = OrderingSet::dedupe(parse_orderings(&text)?)?;

    let m = distance_matrix(&set);
    print!("{:>6}", "");
    for j in &m.judges {
        print!("{j:>10}");
    }
    println!();
    for (j, row) in m.judges.iter().zip(&m.values) {
        print!("{j:>6}");
        for v in row {
            print!("{v:>10.3}");
        }
        println!();
    }

    println!();
    for s in outlier_scores(&set)? {
        println!("{:>6} {:.3}", s.judge, s.score);
    }
    Ok(())
}
