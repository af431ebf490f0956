//! Length and full set of longest common subsequences.
//!
//! `psi[i]` is the length of the longest common subsequence ending on
//! reference symbol `i`. All longest common subsequences are recovered by a
//! depth-first prefix search from every position where `psi` is maximal,
//! stepping back only to positions whose `psi` is exactly one less.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::index::{build_position_index, build_truth_table, TruthTable};
use crate::model::{OrderingSet, Symbol};

/// Default limit on the number of materialized sequences.
pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiArray {
    pub psi: Vec<usize>,
    pub llcs: usize,
}

impl PsiArray {
    pub fn get(&self, i: usize) -> usize {
        self.psi[i]
    }

    /// Positions where a longest common subsequence ends.
    pub fn roots(&self) -> Vec<usize> {
        if self.llcs == 0 {
            return Vec::new();
        }
        (0..self.psi.len()).filter(|&i| self.psi[i] == self.llcs).collect()
    }
}

/// `psi[i] = 0` if symbol `i` is not common, else
/// `1 + max{0, T[i][j] * psi[j] : j < i}`.
pub fn psi_lengths(t: &TruthTable) -> PsiArray {
    let m = t.size();
    let mut psi = vec![0usize; m];
    for i in 0..m {
        if !t.is_common(i) {
            continue;
        }
        let row = t.row(i);
        let best = (0..i).filter(|&j| row[j]).map(|j| psi[j]).max().unwrap_or(0);
        psi[i] = best + 1;
    }
    let llcs = psi.iter().copied().max().unwrap_or(0);
    PsiArray { psi, llcs }
}

/// Positions `j < i` that can precede `i` on a longest path into `i`.
fn longest_prefixes<'a>(
    i: usize,
    psi: &'a PsiArray,
    t: &'a TruthTable,
) -> impl Iterator<Item = usize> + 'a {
    let target = psi.get(i).wrapping_sub(1);
    (0..i).filter(move |&j| psi.get(j) == target && t.get(i, j))
}

/// Prefix expansion. `u` is a sequence of reference positions starting at
/// `i`; returns every extension of `u` by a longest chain of prefixes, or
/// nothing when `omega[i]` is cleared. Iterative depth-first search.
pub fn theta(
    i: usize,
    u: Vec<usize>,
    psi: &PsiArray,
    t: &TruthTable,
    omega: &[bool],
    cap: usize,
) -> Result<Vec<Vec<usize>>> {
    debug_assert_eq!(u.first(), Some(&i));
    let mut out = Vec::new();
    // Sequences are kept reversed so prefixing is a push.
    let mut stack = vec![(i, u.into_iter().rev().collect::<Vec<_>>())];
    while let Some((i, rev)) = stack.pop() {
        if !omega[i] {
            continue;
        }
        let prefixes: Vec<usize> = longest_prefixes(i, psi, t).collect();
        if prefixes.is_empty() {
            if out.len() == cap {
                return Err(Error::CapExceeded { cap });
            }
            out.push(rev.into_iter().rev().collect());
            continue;
        }
        let (last, rest) = prefixes.split_last().expect("non-empty");
        for &j in rest {
            let mut v = rev.clone();
            v.push(j);
            stack.push((j, v));
        }
        let mut v = rev;
        v.push(*last);
        stack.push((*last, v));
    }
    Ok(out)
}

/// All longest common subsequences as reference positions, sorted.
pub fn lcs_positions(psi: &PsiArray, t: &TruthTable, cap: usize) -> Result<Vec<Vec<usize>>> {
    let omega = vec![true; t.size()];
    let mut all = Vec::new();
    for i in psi.roots() {
        let left = cap.saturating_sub(all.len());
        match theta(i, vec![i], psi, t, &omega, left) {
            Ok(found) => all.extend(found),
            Err(Error::CapExceeded { .. }) => return Err(Error::CapExceeded { cap }),
            Err(e) => return Err(e),
        }
    }
    all.sort();
    Ok(all)
}

/// Number of longest common subsequences, counted without enumerating them.
pub fn count_lcs(psi: &PsiArray, t: &TruthTable) -> BigUint {
    let m = t.size();
    let mut ways: Vec<BigUint> = vec![BigUint::zero(); m];
    for i in 0..m {
        match psi.get(i) {
            0 => {}
            1 => ways[i] = BigUint::one(),
            _ => {
                let mut w = BigUint::zero();
                for j in longest_prefixes(i, psi, t) {
                    w += &ways[j];
                }
                ways[i] = w;
            }
        }
    }
    psi.roots().into_iter().map(|i| &ways[i]).sum()
}

/// The longest common subsequences of a set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LcsSet {
    pub llcs: usize,
    #[serde(serialize_with = "crate::report::sequences")]
    pub sequences: Vec<Vec<Symbol>>,
}

impl LcsSet {
    pub fn len(&self) -> usize {
        self.sequences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequences.is_empty()
    }
}

/// All longest common subsequences, lexicographically sorted by symbol token.
/// Fails with [`Error::CapExceeded`] when more than `cap` exist.
pub fn all_lcs(set: &OrderingSet, cap: usize) -> Result<LcsSet> {
    let t = build_truth_table(&build_position_index(set));
    let psi = psi_lengths(&t);
    let mut sequences: Vec<Vec<Symbol>> = lcs_positions(&psi, &t, cap)?
        .iter()
        .map(|p| set.reference_symbols(p))
        .collect();
    sequences.sort();
    Ok(LcsSet {
        llcs: psi.llcs,
        sequences,
    })
}
