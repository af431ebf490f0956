//! Position index and truth table over the reference ordering.
//!
//! Entry `(k, j)` of the position index is the label of reference symbol `j`
//! in ordering `k` (its position for strict orderings, its bucket index for
//! tied ones). The truth table records, for every reference symbol, whether
//! it occurs in all orderings, and for every earlier/later pair whether the
//! pair is a common subsequence of all orderings. Reference positions are
//! 0-based throughout the API.

use std::fmt::Write as _;

use crate::model::OrderingSet;

/// Marker for a reference symbol that does not occur in an ordering.
pub const ABSENT: u32 = u32::MAX;

/// N x m matrix of labels of reference symbols in each ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionIndex {
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl PositionIndex {
    /// Number of orderings (N).
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Length of the reference ordering (m).
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Label of reference symbol `j` in ordering `k`, `None` when absent.
    pub fn get(&self, k: usize, j: usize) -> Option<u32> {
        match self.entries[k * self.cols + j] {
            ABSENT => None,
            v => Some(v),
        }
    }

    pub fn row(&self, k: usize) -> &[u32] {
        &self.entries[k * self.cols..(k + 1) * self.cols]
    }

    /// True when reference symbol `j` occurs in every ordering.
    pub fn is_common(&self, j: usize) -> bool {
        (0..self.rows).all(|k| self.entries[k * self.cols + j] != ABSENT)
    }

    /// True when `earlier < later` and the pair is ordered the same way
    /// (strictly increasing labels) in every ordering.
    pub fn precedes_everywhere(&self, earlier: usize, later: usize) -> bool {
        earlier < later
            && (0..self.rows).all(|k| {
                let row = self.row(k);
                let (a, b) = (row[earlier], row[later]);
                a != ABSENT && b != ABSENT && a < b
            })
    }

    /// Tab-separated dump, absent entries rendered as `-`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for k in 0..self.rows {
            let line: Vec<String> = self
                .row(k)
                .iter()
                .map(|&v| if v == ABSENT { "-".into() } else { v.to_string() })
                .collect();
            let _ = writeln!(out, "{}", line.join("\t"));
        }
        out
    }

    /// Heap bytes held by the matrix.
    pub fn heap_bytes(&self) -> usize {
        self.entries.capacity() * std::mem::size_of::<u32>()
    }
}

/// Builds the position index in O(N * alphabet) using a per-ordering
/// id -> label table.
pub fn build_position_index(set: &OrderingSet) -> PositionIndex {
    let reference = set.encoded(0);
    let cols = reference.len();
    let rows = set.len();
    let mut entries = vec![ABSENT; rows * cols];
    let mut label_of = vec![ABSENT; set.alphabet_len()];
    for k in 0..rows {
        let ids = set.encoded(k);
        let labels = set.orderings()[k].labels();
        for (&id, &label) in ids.iter().zip(labels) {
            label_of[id as usize] = label;
        }
        for (j, &id) in reference.iter().enumerate() {
            entries[k * cols + j] = label_of[id as usize];
        }
        for &id in ids {
            label_of[id as usize] = ABSENT;
        }
    }
    PositionIndex {
        rows,
        cols,
        entries,
    }
}

/// m x m 0/1 matrix; `get(j, j)` is symbol commonality and `get(j, k)` for
/// `k < j` is commonality of the pair "x_k then x_j". Upper entries are 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    m: usize,
    bits: Vec<bool>,
}

impl TruthTable {
    pub fn size(&self) -> usize {
        self.m
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.bits[row * self.m + col]
    }

    /// Reference symbol `j` occurs in every ordering.
    pub fn is_common(&self, j: usize) -> bool {
        self.get(j, j)
    }

    /// `x_earlier x_later` is a common subsequence (requires earlier < later).
    pub fn precedes(&self, earlier: usize, later: usize) -> bool {
        earlier < later && self.get(later, earlier)
    }

    /// Row `j`: entries `0..=j` are meaningful.
    pub fn row(&self, j: usize) -> &[bool] {
        &self.bits[j * self.m..(j + 1) * self.m]
    }

    /// Builds a table directly from 0/1 rows; rows must be square.
    pub fn from_rows(rows: &[Vec<u8>]) -> Self {
        let m = rows.len();
        let mut bits = vec![false; m * m];
        for (j, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), m, "truth table rows must be square");
            for (k, &v) in row.iter().enumerate() {
                bits[j * m + k] = v != 0;
            }
        }
        TruthTable { m, bits }
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.m)
            .map(|j| self.row(j).iter().map(|&b| b as u8).collect())
            .collect()
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for row in self.to_rows() {
            let line: Vec<String> = row.iter().map(u8::to_string).collect();
            let _ = writeln!(out, "{}", line.join("\t"));
        }
        out
    }

    pub fn heap_bytes(&self) -> usize {
        self.bits.capacity()
    }
}

/// Fills `out` (length >= j + 1) with row `j` of the truth table, computed
/// straight from the index. Used by the low-memory counting path.
pub fn truth_row(index: &PositionIndex, j: usize, out: &mut [bool]) {
    let common = index.is_common(j);
    out[j] = common;
    for (k, cell) in out[..j].iter_mut().enumerate() {
        *cell = common && index.precedes_everywhere(k, j);
    }
}

/// Builds the full truth table. The reference row takes part in the test, so
/// with a tied reference a pair from one reference bucket is never common.
pub fn build_truth_table(index: &PositionIndex) -> TruthTable {
    let m = index.cols();
    let mut bits = vec![false; m * m];
    let common: Vec<bool> = (0..m).map(|j| index.is_common(j)).collect();
    for j in 0..m {
        if !common[j] {
            continue;
        }
        bits[j * m + j] = true;
        for k in 0..j {
            if !common[k] {
                continue;
            }
            bits[j * m + k] = (0..index.rows()).all(|r| {
                let row = index.row(r);
                row[k] < row[j]
            });
        }
    }
    TruthTable { m, bits }
}
