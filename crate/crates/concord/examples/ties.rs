//! Weak orderings. Items in one bucket are tied and never count as ordered,
//! so ties shrink the set of common subsequences.

use concord::kernel::{kappa_pair, self_kernel};
use concord::model::{parse_orderings, OrderingSet};
use concord::oracle;

fn main() -> concord::Result<()> {
    let set = OrderingSet::dedupe(parse_orderings(
        "strict: a b c d\nloose: {a b} c {d}\nflat: {a b c d}\n",
    )?)?;
    for (k, o) in set.orderings().iter().enumerate() {
        println!(
            "{:<7} {:<12} buckets={} self={}",
            set.judge_label(k),
            o.to_string(),
            o.bucket_count(),
            self_kernel(o)
        );
    }

    let (x, y) = (&set.orderings()[0], &set.orderings()[1]);
    println!("kappa(strict, loose) = {}", kappa_pair(x, y));
    let shared = oracle::intersect_orderings(&[x.clone(), y.clone()])?;
    for q in shared.sequences.iter() {
        println!("  {}", q.join(" "));
    }
    Ok(())
}
