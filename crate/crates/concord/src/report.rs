//! Rendering helpers shared by the JSON and TSV outputs.

use serde::Serializer;

use crate::model::Symbol;

/// Joins symbol tokens with `sep`.
pub fn render(seq: &[Symbol], sep: &str) -> String {
    seq.iter().map(Symbol::as_str).collect::<Vec<_>>().join(sep)
}

/// Serializes sequences as space-joined token strings.
pub(crate) fn sequences<S: Serializer>(
    seqs: &[Vec<Symbol>],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(seqs.iter().map(|q| render(q, " ")))
}

pub(crate) fn symbols<S: Serializer>(syms: &[Symbol], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(syms.iter().map(Symbol::as_str))
}
