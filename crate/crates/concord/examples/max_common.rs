//! Upper bound on how many common subsequences of length k two
//! permutations of n items can share, next to what random pairs reach.

use concord::kernel::max_common_count;
use concord::lcs::all_lcs;
use concord::model::{BucketOrdering, OrderingSet};
use concord::DEFAULT_CAP;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn main() -> concord::Result<()> {
    for (n, k) in [(6, 2), (8, 3), (20, 7), (100, 10)] {
        println!("f({n}, {k}) = {}", max_common_count(n, k)?);
    }

    let mut rng = StdRng::seed_from_u64(7);
    let items: Vec<String> = (0..8).map(|i| format!("x{i}")).collect();
    for _ in 0..5 {
        let mut a = items.clone();
        let mut b = items.clone();
        a.shuffle(&mut rng);
        b.shuffle(&mut rng);
        let set = OrderingSet::dedupe(vec![BucketOrdering::strict(a)?, BucketOrdering::strict(b)?])?;
        let found = all_lcs(&set, DEFAULT_CAP)?;
        let bound = max_common_count(8, found.llcs)?;
        println!("llcs {} with {} sequences, bound {}", found.llcs, found.len(), bound);
    }
    Ok(())
}
