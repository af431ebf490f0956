#![allow(dead_code)]

use concord::model::{BucketOrdering, OrderingSet, Symbol};
use concord::oracle::Sequence;
use concord::report::render;
use rand::seq::SliceRandom;
use rand::Rng;

pub const ALPHABET: [&str; 10] = ["a", "b", "c", "d", "e", "f", "g", "h", "i", "j"];

/// A random weak ordering over a random subset of the first `n` symbols.
/// Adjacent items are merged into one bucket with probability `tie`.
pub fn random_ordering<R: Rng>(rng: &mut R, n: usize, tie: f64, full: bool) -> BucketOrdering {
    let mut items: Vec<&str> = ALPHABET[..n].to_vec();
    items.shuffle(rng);
    if !full {
        let keep = rng.gen_range(1..=n);
        items.truncate(keep);
    }
    let mut buckets: Vec<Vec<Symbol>> = Vec::new();
    for it in items {
        let sym = Symbol::new(it).unwrap();
        match buckets.last_mut() {
            Some(b) if rng.gen_bool(tie) => b.push(sym),
            _ => buckets.push(vec![sym]),
        }
    }
    BucketOrdering::from_buckets(buckets).unwrap()
}

/// A random set of `count` orderings. Three quarters of the sets rank the
/// full alphabet; the rest use random subsets.
pub fn random_set<R: Rng>(rng: &mut R, n: usize, count: usize, tie: f64) -> OrderingSet {
    let full = rng.gen_bool(0.75);
    let list = (0..count).map(|_| random_ordering(rng, n, tie, full)).collect();
    OrderingSet::dedupe(list).unwrap()
}

pub fn joined(seqs: &[Vec<Symbol>]) -> Vec<String> {
    let mut v: Vec<String> = seqs.iter().map(|q| render(q, " ")).collect();
    v.sort();
    v
}

pub fn oracle_joined(seqs: Vec<Sequence>) -> Vec<String> {
    let mut v: Vec<String> = seqs.into_iter().map(|q| q.join(" ")).collect();
    v.sort();
    v
}

pub fn compact(seqs: &[Vec<Symbol>]) -> Vec<String> {
    let mut v: Vec<String> = seqs.iter().map(|q| render(q, "")).collect();
    v.sort();
    v
}

pub fn set(items: &[&str]) -> OrderingSet {
    OrderingSet::from_char_strings(items).unwrap()
}
