//! Brute-force reference: explicit subsequence sets by position masks.
//!
//! Nothing here uses the position index, truth table or counting code. It
//! exists to cross-check them, in tests and behind the CLI `--oracle` flag.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::model::{BucketOrdering, OrderingSet};

/// Longest ordering the oracle will enumerate (2^20 masks).
pub const MAX_ORACLE_LEN: usize = 20;

pub type Sequence = Vec<String>;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SubsequenceSet {
    pub sequences: BTreeSet<Sequence>,
}

impl SubsequenceSet {
    pub fn len(&self) -> usize {
        self.sequences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequences.is_empty()
    }

    pub fn contains(&self, seq: &[&str]) -> bool {
        let owned: Sequence = seq.iter().map(|s| s.to_string()).collect();
        self.sequences.contains(&owned)
    }

    /// Members of maximal length.
    pub fn longest(&self) -> Vec<Sequence> {
        let best = self.sequences.iter().map(Vec::len).max().unwrap_or(0);
        self.sequences.iter().filter(|s| s.len() == best).cloned().collect()
    }
}

/// All non-empty subsequences. With ties, a subsequence must take its symbols
/// from strictly increasing buckets.
pub fn enumerate_subsequences(x: &BucketOrdering) -> Result<SubsequenceSet> {
    let n = x.len();
    if n > MAX_ORACLE_LEN {
        return Err(Error::OracleBound {
            len: n,
            max: MAX_ORACLE_LEN,
        });
    }
    let symbols = x.symbols();
    let labels = x.labels();
    let mut sequences = BTreeSet::new();
    'masks: for mask in 1u32..(1u32 << n) {
        let mut seq = Vec::new();
        let mut last_label = 0;
        for p in 0..n {
            if mask & (1 << p) != 0 {
                if labels[p] <= last_label {
                    continue 'masks;
                }
                last_label = labels[p];
                seq.push(symbols[p].as_str().to_string());
            }
        }
        sequences.insert(seq);
    }
    Ok(SubsequenceSet { sequences })
}

/// The common subsequences of every ordering in the set.
pub fn intersect_all(set: &OrderingSet) -> Result<SubsequenceSet> {
    intersect_orderings(set.orderings())
}

pub fn intersect_orderings(orderings: &[BucketOrdering]) -> Result<SubsequenceSet> {
    let mut iter = orderings.iter();
    let Some(first) = iter.next() else {
        return Err(Error::EmptySet);
    };
    let mut acc = enumerate_subsequences(first)?;
    for o in iter {
        let other = enumerate_subsequences(o)?;
        acc.sequences.retain(|s| other.sequences.contains(s));
    }
    Ok(acc)
}

/// Greedy subsequence test on token sequences.
pub fn is_subsequence<T: PartialEq>(short: &[T], long: &[T]) -> bool {
    let mut it = long.iter();
    short.iter().all(|s| it.any(|l| l == s))
}

/// Whether `seq` occurs in `x` with strictly increasing bucket labels.
pub fn occurs_in(seq: &[&str], x: &BucketOrdering) -> bool {
    let mut last = 0;
    for tok in seq {
        let Some(p) = x.symbols().iter().position(|s| s.as_str() == *tok) else {
            return false;
        };
        let label = x.labels()[p];
        if label <= last {
            return false;
        }
        last = label;
    }
    true
}

/// Members not a proper subsequence of another member.
pub fn maximal_elements(s: &SubsequenceSet) -> Vec<Sequence> {
    s.sequences
        .iter()
        .filter(|a| {
            !s.sequences
                .iter()
                .any(|b| b.len() > a.len() && is_subsequence(a, b))
        })
        .cloned()
        .collect()
}

/// Checks the two defining properties of a covering antichain of `s`:
/// nothing in `cover` is below another member, and every member of `s` is
/// below some member of `cover`.
pub fn is_covering_antichain(s: &SubsequenceSet, cover: &[Sequence]) -> bool {
    let antichain = cover.iter().enumerate().all(|(i, a)| {
        cover
            .iter()
            .enumerate()
            .all(|(j, b)| i == j || !is_subsequence(a, b))
    });
    let covers = s
        .sequences
        .iter()
        .all(|x| cover.iter().any(|c| is_subsequence(x, c)));
    antichain && covers
}
