//! Smallest covering set: the antichain of common subsequences that covers
//! every common subsequence.
//!
//! Common subsequences are exactly the chains of the precedence order encoded
//! in the truth table, so the smallest covering set is the set of maximal
//! chains. Construction starts from the longest common subsequences and, for
//! every common symbol not yet covered, adds the longest prefixes ending on it
//! extended by every saturated postfix. A final scan over maximal chains adds
//! anything that construction cannot reach: a maximal chain that is not
//! longest and whose symbols all already appear in other members.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::index::{build_position_index, build_truth_table, TruthTable};
use crate::lcs::{lcs_positions, psi_lengths, theta, PsiArray};
use crate::model::{OrderingSet, Symbol};

/// Reference positions still allowed in extension searches. Starts all set
/// and is only ever cleared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaMask(Vec<bool>);

impl OmegaMask {
    pub fn new(m: usize) -> Self {
        OmegaMask(vec![true; m])
    }

    pub fn allows(&self, i: usize) -> bool {
        self.0[i]
    }

    pub fn consume(&mut self, i: usize) {
        self.0[i] = false;
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.0
    }
}

/// Reference positions of symbols that occur in every ordering.
pub fn common_symbols(t: &TruthTable) -> Vec<usize> {
    (0..t.size()).filter(|&i| t.is_common(i)).collect()
}

/// Immediate successors of `i`: positions `j > i` with `x_i x_j` common and
/// no common `x_i x_k x_j` in between.
fn covers(i: usize, t: &TruthTable) -> Vec<usize> {
    let succ: Vec<usize> = (i + 1..t.size()).filter(|&j| t.get(j, i)).collect();
    succ.iter()
        .copied()
        .filter(|&j| !succ.iter().any(|&k| k < j && t.get(j, k)))
        .collect()
}

/// Postfix expansion. `u` ends at position `i`; returns every extension of
/// `u` by a saturated chain of successors that cannot be extended further,
/// or nothing when `omega[i]` is cleared.
pub fn upsilon(
    i: usize,
    u: Vec<usize>,
    t: &TruthTable,
    omega: &[bool],
    cap: usize,
) -> Result<Vec<Vec<usize>>> {
    debug_assert_eq!(u.last(), Some(&i));
    let mut out = Vec::new();
    let mut stack = vec![(i, u)];
    while let Some((i, u)) = stack.pop() {
        if !omega[i] {
            continue;
        }
        let next = covers(i, t);
        let Some((last, rest)) = next.split_last() else {
            if out.len() == cap {
                return Err(Error::CapExceeded { cap });
            }
            out.push(u);
            continue;
        };
        for &j in rest {
            let mut v = u.clone();
            v.push(j);
            stack.push((j, v));
        }
        let mut v = u;
        v.push(*last);
        stack.push((*last, v));
    }
    Ok(out)
}

/// Every longest prefix ending at position `i`, extended by every saturated
/// postfix. Each member contains `x_i` and is a common subsequence.
pub fn build_b_set(
    i: usize,
    psi: &PsiArray,
    t: &TruthTable,
    omega: &[bool],
    cap: usize,
) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for prefix in theta(i, vec![i], psi, t, omega, cap)? {
        let left = cap.saturating_sub(out.len());
        out.extend(upsilon(i, prefix, t, omega, left).map_err(|_| Error::CapExceeded { cap })?);
    }
    Ok(out)
}

/// All maximal chains of the precedence order: paths along immediate
/// successors from a minimal to a maximal common symbol.
pub fn maximal_chains(t: &TruthTable, cap: usize) -> Result<Vec<Vec<usize>>> {
    let omega = vec![true; t.size()];
    let mut out = Vec::new();
    for i in common_symbols(t) {
        if (0..i).any(|k| t.get(i, k)) {
            continue;
        }
        let left = cap.saturating_sub(out.len());
        out.extend(upsilon(i, vec![i], t, &omega, left).map_err(|_| Error::CapExceeded { cap })?);
    }
    out.sort();
    Ok(out)
}

fn is_subsequence(short: &[usize], long: &[usize]) -> bool {
    let mut it = long.iter();
    short.iter().all(|s| it.any(|l| l == s))
}

/// Drops duplicates and every member that is a subsequence of another.
pub fn prune_to_antichain(seqs: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let mut unique: Vec<Vec<usize>> = seqs.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    unique.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut kept: Vec<Vec<usize>> = Vec::new();
    for s in unique {
        if !kept.iter().any(|k| k.len() > s.len() && is_subsequence(&s, k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CoveringSet {
    #[serde(serialize_with = "crate::report::sequences")]
    pub sequences: Vec<Vec<Symbol>>,
}

impl CoveringSet {
    pub fn len(&self) -> usize {
        self.sequences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequences.is_empty()
    }
}

/// Result of a covering-set run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScsReport {
    #[serde(serialize_with = "crate::report::sequences")]
    pub lcs: Vec<Vec<Symbol>>,
    pub covering_set: CoveringSet,
    /// Uncovered symbols expanded, in processing order.
    #[serde(serialize_with = "crate::report::symbols")]
    pub uncovered_symbols_processed: Vec<Symbol>,
    /// Maximal chains found only by the final chain scan.
    #[serde(serialize_with = "crate::report::sequences")]
    pub added_by_chain_scan: Vec<Vec<Symbol>>,
}

/// Smallest covering set, processing uncovered symbols in reference order.
pub fn smallest_covering_set(set: &OrderingSet, cap: usize) -> Result<ScsReport> {
    smallest_covering_set_with(set, cap, |candidates| candidates[0])
}

/// Smallest covering set with a caller-chosen processing order: `pick`
/// receives the uncovered positions (ascending) and returns one of them.
pub fn smallest_covering_set_with<F>(set: &OrderingSet, cap: usize, mut pick: F) -> Result<ScsReport>
where
    F: FnMut(&[usize]) -> usize,
{
    let t = build_truth_table(&build_position_index(set));
    let psi = psi_lengths(&t);
    let lcs = lcs_positions(&psi, &t, cap)?;
    let common = common_symbols(&t);

    let mut found: Vec<Vec<usize>> = lcs.clone();
    let mut covered = vec![false; t.size()];
    let mut omega = OmegaMask::new(t.size());
    let mut processed = Vec::new();
    let mark = |covered: &mut Vec<bool>, seqs: &[Vec<usize>]| {
        for &p in seqs.iter().flatten() {
            covered[p] = true;
        }
    };
    mark(&mut covered, &found);

    loop {
        let uncovered: Vec<usize> = common.iter().copied().filter(|&i| !covered[i]).collect();
        if uncovered.is_empty() {
            break;
        }
        let lambda = pick(&uncovered);
        assert!(uncovered.contains(&lambda), "pick must return an uncovered position");
        let left = cap.saturating_sub(found.len());
        let mut b = build_b_set(lambda, &psi, &t, omega.as_slice(), left)?;
        if b.is_empty() {
            let all = vec![true; t.size()];
            b = build_b_set(lambda, &psi, &t, &all, left)?;
        }
        mark(&mut covered, &b);
        if !covered[lambda] {
            return Err(Error::NoProgress(set.reference().symbols()[lambda].to_string()));
        }
        found.extend(b);
        omega.consume(lambda);
        processed.push(lambda);
    }

    let constructed = prune_to_antichain(found);
    let chains = maximal_chains(&t, cap)?;
    let added: Vec<Vec<usize>> = chains
        .iter()
        .filter(|c| constructed.binary_search(c).is_err())
        .cloned()
        .collect();
    let covering = prune_to_antichain(constructed.into_iter().chain(added.iter().cloned()).collect());

    let to_symbols = |seqs: &[Vec<usize>]| -> Vec<Vec<Symbol>> {
        let mut v: Vec<Vec<Symbol>> = seqs.iter().map(|p| set.reference_symbols(p)).collect();
        v.sort();
        v
    };
    Ok(ScsReport {
        lcs: to_symbols(&lcs),
        covering_set: CoveringSet {
            sequences: to_symbols(&covering),
        },
        uncovered_symbols_processed: set.reference_symbols(&processed),
        added_by_chain_scan: to_symbols(&added),
    })
}
