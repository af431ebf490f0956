//! Items, strict and tied preference orderings, and ordering sets.
//!
//! A strict ordering is stored as the special case of a bucket ordering in
//! which every bucket holds a single item. Each symbol carries the 1-based
//! index of its bucket (its label); two items of one ordering are ordered
//! iff their labels differ.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, ParseError, Result};

/// An item label. Two orderings refer to the same item iff the tokens are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(String);

impl Symbol {
    pub fn new(token: impl Into<String>) -> Result<Self> {
        let token = token.into();
        if token.is_empty() || token.chars().any(|c| c.is_whitespace() || c == '{' || c == '}') {
            return Err(Error::InvalidOrdering(format!("bad symbol token {token:?}")));
        }
        Ok(Symbol(token))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::borrow::Borrow<str> for Symbol {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for Symbol {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// A weak ordering: ordered, disjoint, non-empty buckets of items.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BucketOrdering {
    symbols: Vec<Symbol>,
    labels: Vec<u32>,
    judge: Option<String>,
}

impl BucketOrdering {
    /// A strict ordering, one item per bucket.
    pub fn strict<I, S>(items: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let buckets = items
            .into_iter()
            .map(|s| Symbol::new(s).map(|sym| vec![sym]))
            .collect::<Result<Vec<_>>>()?;
        Self::from_buckets(buckets)
    }

    /// Builds a strict ordering from a string of single-character items, e.g. `"abcd"`.
    pub fn from_chars(items: &str) -> Result<Self> {
        Self::strict(items.chars().map(String::from))
    }

    pub fn from_buckets(buckets: Vec<Vec<Symbol>>) -> Result<Self> {
        if buckets.is_empty() {
            return Err(Error::InvalidOrdering("ordering has no items".into()));
        }
        let mut seen = HashSet::new();
        let mut symbols = Vec::new();
        let mut labels = Vec::new();
        for (b, bucket) in buckets.into_iter().enumerate() {
            if bucket.is_empty() {
                return Err(Error::InvalidOrdering(format!("bucket {} is empty", b + 1)));
            }
            for sym in bucket {
                if !seen.insert(sym.clone()) {
                    return Err(Error::InvalidOrdering(format!("duplicate symbol '{sym}'")));
                }
                symbols.push(sym);
                labels.push(b as u32 + 1);
            }
        }
        Ok(BucketOrdering {
            symbols,
            labels,
            judge: None,
        })
    }

    pub fn with_judge(mut self, judge: impl Into<String>) -> Self {
        self.judge = Some(judge.into());
        self
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// The labeling sequence: 1-based bucket index of each flattened symbol.
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn judge(&self) -> Option<&str> {
        self.judge.as_deref()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn bucket_count(&self) -> usize {
        self.labels.last().copied().unwrap_or(0) as usize
    }

    pub fn is_strict(&self) -> bool {
        self.bucket_count() == self.len()
    }

    pub fn buckets(&self) -> Vec<&[Symbol]> {
        let mut out = Vec::with_capacity(self.bucket_count());
        let mut start = 0;
        for end in 1..=self.len() {
            if end == self.len() || self.labels[end] != self.labels[start] {
                out.push(&self.symbols[start..end]);
                start = end;
            }
        }
        out
    }

    /// Key under which two orderings express the same preferences: bucket
    /// contents are compared as sets and the judge is ignored.
    pub fn preference_key(&self) -> Vec<Vec<&str>> {
        self.buckets()
            .into_iter()
            .map(|b| {
                let mut v: Vec<&str> = b.iter().map(Symbol::as_str).collect();
                v.sort_unstable();
                v
            })
            .collect()
    }

    /// The input-format line, including a `judge:` prefix when present.
    pub fn to_line(&self) -> String {
        match &self.judge {
            Some(j) => format!("{j}: {self}"),
            None => self.to_string(),
        }
    }
}

impl fmt::Display for BucketOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, bucket) in self.buckets().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if bucket.len() == 1 {
                write!(f, "{}", bucket[0])?;
            } else {
                f.write_str("{")?;
                for (k, s) in bucket.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{s}")?;
                }
                f.write_str("}")?;
            }
        }
        Ok(())
    }
}

enum Token {
    Open(usize),
    Close(usize),
    Word(String, usize),
}

fn tokenize(line: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut word = String::new();
    let mut word_col = 0;
    for (i, c) in line.chars().enumerate() {
        let col = i + 1;
        if c.is_whitespace() || c == '{' || c == '}' {
            if !word.is_empty() {
                tokens.push(Token::Word(std::mem::take(&mut word), word_col));
            }
            match c {
                '{' => tokens.push(Token::Open(col)),
                '}' => tokens.push(Token::Close(col)),
                _ => {}
            }
        } else {
            if word.is_empty() {
                word_col = col;
            }
            word.push(c);
        }
    }
    if !word.is_empty() {
        tokens.push(Token::Word(word, word_col));
    }
    tokens
}

/// Parses a single ordering; see [`parse_ordering_at`].
pub fn parse_ordering(line: &str) -> std::result::Result<BucketOrdering, ParseError> {
    parse_ordering_at(line, 1)
}

/// Parses one ordering line. Bare tokens are singleton buckets, brace groups
/// are tie buckets: `"{a b} c"` is `{a,b}` followed by `{c}`. A leading token
/// ending in `:` names the judge, e.g. `"ann: a b c"`.
pub fn parse_ordering_at(
    line: &str,
    line_no: usize,
) -> std::result::Result<BucketOrdering, ParseError> {
    let mut tokens = tokenize(line).into_iter().peekable();
    let mut judge = None;
    if let Some(Token::Word(w, _)) = tokens.peek() {
        if w.len() > 1 && w.ends_with(':') {
            judge = Some(w[..w.len() - 1].to_string());
            tokens.next();
        }
    }

    let mut seen: HashSet<String> = HashSet::new();
    let mut buckets: Vec<Vec<Symbol>> = Vec::new();
    let mut open: Option<(usize, Vec<Symbol>)> = None;
    for tok in tokens {
        match tok {
            Token::Open(col) => {
                if open.is_some() {
                    return Err(ParseError::UnbalancedBrace { line: line_no, column: col });
                }
                open = Some((col, Vec::new()));
            }
            Token::Close(col) => match open.take() {
                None => return Err(ParseError::UnbalancedBrace { line: line_no, column: col }),
                Some((start, bucket)) => {
                    if bucket.is_empty() {
                        return Err(ParseError::EmptyBucket { line: line_no, column: start });
                    }
                    buckets.push(bucket);
                }
            },
            Token::Word(w, col) => {
                if !seen.insert(w.clone()) {
                    return Err(ParseError::DuplicateSymbol {
                        symbol: w,
                        line: line_no,
                        column: col,
                    });
                }
                let sym = Symbol(w);
                match open.as_mut() {
                    Some((_, bucket)) => bucket.push(sym),
                    None => buckets.push(vec![sym]),
                }
            }
        }
    }
    if let Some((col, _)) = open {
        return Err(ParseError::UnbalancedBrace { line: line_no, column: col });
    }
    if buckets.is_empty() {
        return Err(ParseError::EmptyLine { line: line_no });
    }
    let ordering = BucketOrdering::from_buckets(buckets)
        .expect("parser already rejected empty buckets and duplicates");
    Ok(match judge {
        Some(j) => ordering.with_judge(j),
        None => ordering,
    })
}

/// Parses a whole input text, one ordering per line. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_orderings(text: &str) -> std::result::Result<Vec<BucketOrdering>, ParseError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| parse_ordering_at(l, i + 1))
        .collect()
}

/// A non-empty set of orderings. The first ordering is the reference; all
/// common-subsequence structure is expressed in terms of its positions.
///
/// Symbols are interned: `encoded(k)` is ordering `k` as symbol ids, and the
/// id space is shared by all orderings of the set.
#[derive(Debug, Clone)]
pub struct OrderingSet {
    orderings: Vec<BucketOrdering>,
    origins: Vec<usize>,
    alphabet: Vec<Symbol>,
    ids: HashMap<Symbol, u32>,
    encoded: Vec<Vec<u32>>,
    duplicates_dropped: usize,
    distinct: bool,
}

impl OrderingSet {
    /// Collapses duplicate orderings, keeping first occurrences in input order.
    pub fn dedupe(orderings: Vec<BucketOrdering>) -> Result<Self> {
        Self::build(orderings, true)
    }

    /// Keeps every ordering, duplicates included (multiset semantics).
    pub fn keep_duplicates(orderings: Vec<BucketOrdering>) -> Result<Self> {
        Self::build(orderings, false)
    }

    /// Convenience constructor from strings of single-character items.
    pub fn from_char_strings(items: &[&str]) -> Result<Self> {
        let orderings = items
            .iter()
            .map(|s| BucketOrdering::from_chars(s))
            .collect::<Result<Vec<_>>>()?;
        Self::dedupe(orderings)
    }

    fn build(orderings: Vec<BucketOrdering>, distinct: bool) -> Result<Self> {
        if orderings.is_empty() {
            return Err(Error::EmptySet);
        }
        let total = orderings.len();
        let mut kept = Vec::with_capacity(total);
        let mut origins = Vec::with_capacity(total);
        if distinct {
            let mut seen = HashSet::new();
            for (i, o) in orderings.into_iter().enumerate() {
                let key: Vec<Vec<String>> = o
                    .preference_key()
                    .into_iter()
                    .map(|b| b.into_iter().map(str::to_owned).collect())
                    .collect();
                if seen.insert(key) {
                    kept.push(o);
                    origins.push(i);
                }
            }
        } else {
            origins.extend(0..total);
            kept = orderings;
        }

        let mut alphabet = Vec::new();
        let mut ids = HashMap::new();
        let encoded = kept
            .iter()
            .map(|o| {
                o.symbols()
                    .iter()
                    .map(|s| {
                        *ids.entry(s.clone()).or_insert_with(|| {
                            alphabet.push(s.clone());
                            alphabet.len() as u32 - 1
                        })
                    })
                    .collect()
            })
            .collect();

        Ok(OrderingSet {
            duplicates_dropped: total - kept.len(),
            orderings: kept,
            origins,
            alphabet,
            ids,
            encoded,
            distinct,
        })
    }

    pub fn orderings(&self) -> &[BucketOrdering] {
        &self.orderings
    }

    pub fn reference(&self) -> &BucketOrdering {
        &self.orderings[0]
    }

    pub fn len(&self) -> usize {
        self.orderings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orderings.is_empty()
    }

    pub fn is_distinct(&self) -> bool {
        self.distinct
    }

    pub fn duplicates_dropped(&self) -> usize {
        self.duplicates_dropped
    }

    /// Number of distinct symbols across all orderings.
    pub fn alphabet_len(&self) -> usize {
        self.alphabet.len()
    }

    pub fn symbol(&self, id: u32) -> &Symbol {
        &self.alphabet[id as usize]
    }

    pub fn symbol_id(&self, sym: &str) -> Option<u32> {
        self.ids.get(sym).copied()
    }

    /// Ordering `k` as interned symbol ids.
    pub fn encoded(&self, k: usize) -> &[u32] {
        &self.encoded[k]
    }

    /// Judge label of ordering `k`: the parsed label, or `#i` with `i` the
    /// 1-based position in the original input.
    pub fn judge_label(&self, k: usize) -> String {
        match self.orderings[k].judge() {
            Some(j) => j.to_string(),
            None => format!("#{}", self.origins[k] + 1),
        }
    }

    /// True when orderings do not all rank the same item set.
    pub fn lengths_differ(&self) -> bool {
        let n = self.alphabet.len();
        self.orderings.iter().any(|o| o.len() != n)
    }

    /// The same set with ordering `k` moved to the front as reference.
    pub fn with_reference(&self, k: usize) -> Self {
        let mut list = self.orderings.clone();
        let chosen = list.remove(k);
        list.insert(0, chosen);
        Self::build(list, self.distinct).expect("non-empty by construction")
    }

    /// Set union; `self`'s orderings come first.
    pub fn union(&self, other: &OrderingSet) -> Self {
        let list = self
            .orderings
            .iter()
            .chain(other.orderings.iter())
            .cloned()
            .collect();
        Self::build(list, true).expect("non-empty by construction")
    }

    /// Maps reference positions to symbols.
    pub fn reference_symbols(&self, positions: &[usize]) -> Vec<Symbol> {
        let reference = self.reference().symbols();
        positions.iter().map(|&i| reference[i].clone()).collect()
    }
}
