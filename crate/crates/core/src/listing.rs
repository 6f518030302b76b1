//! Listings (finite enumeration prefixes), finite sets and order patterns.
//!
//! Positions are 1-based and values are natural numbers starting at 1.
//! A [`Listing`] never repeats a value: it records the order in which a
//! machine first emitted each element of the set it enumerates.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// A natural number as it appears in a listing. Zero is never a valid value.
pub type Value = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ListingError {
    #[error("duplicate value {value} at positions {first} and {second}")]
    DuplicateValue {
        value: Value,
        first: usize,
        second: usize,
    },
    #[error("value at position {position} is 0; listing values start at 1")]
    ZeroValue { position: usize },
    #[error("line {line}: expected a positive integer, found {token:?}")]
    Parse { line: usize, token: String },
    #[error("shift {requested} exceeds listing length {len}")]
    OutOfRange { requested: usize, len: usize },
    #[error("value {0} occurs in both listings")]
    ValueCollision(Value),
    #[error("listings do not enumerate the same value set")]
    SetMismatch,
    #[error("length mismatch: {left} != {right}")]
    LengthMismatch { left: usize, right: usize },
}

/// An injective sequence of natural numbers, logically indexed `1..=len`.
///
/// Equality compares values only; the optional name is a label for reports.
#[derive(Debug, Clone, Default)]
pub struct Listing {
    values: Vec<Value>,
    name: Option<String>,
}

impl Listing {
    /// Checks distinctness and positivity.
    pub fn new(values: Vec<Value>) -> Result<Self, ListingError> {
        let mut seen: HashMap<Value, usize> = HashMap::with_capacity(values.len());
        for (idx, &value) in values.iter().enumerate() {
            if value == 0 {
                return Err(ListingError::ZeroValue { position: idx + 1 });
            }
            if let Some(&first) = seen.get(&value) {
                return Err(ListingError::DuplicateValue {
                    value,
                    first,
                    second: idx + 1,
                });
            }
            seen.insert(value, idx + 1);
        }
        Ok(Listing { values, name: None })
    }

    pub fn empty() -> Self {
        Listing::default()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn values(&self) -> &[Value] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at 1-based `position`.
    pub fn get(&self, position: usize) -> Option<Value> {
        position
            .checked_sub(1)
            .and_then(|idx| self.values.get(idx).copied())
    }

    /// The first `len` values (or all of them, if shorter).
    pub fn prefix(&self, len: usize) -> Listing {
        Listing {
            values: self.values[..len.min(self.values.len())].to_vec(),
            name: self.name.clone(),
        }
    }

    pub fn order_pattern(&self) -> OrderPattern {
        order_pattern(self)
    }

    pub fn to_set(&self) -> FiniteSet {
        FiniteSet {
            elements: self.values.iter().copied().collect(),
        }
    }

    /// Renders in the newline-delimited text format.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.values.len() * 4);
        for v in &self.values {
            out.push_str(&v.to_string());
            out.push('\n');
        }
        out
    }
}

impl PartialEq for Listing {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values
    }
}

impl Eq for Listing {}

impl TryFrom<Vec<Value>> for Listing {
    type Error = ListingError;

    fn try_from(values: Vec<Value>) -> Result<Self, Self::Error> {
        Listing::new(values)
    }
}

impl Serialize for Listing {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.values.serialize(serializer)
    }
}

impl fmt::Display for Listing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// A finite set of natural numbers (all elements ≥ 1).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FiniteSet {
    elements: BTreeSet<Value>,
}

impl FiniteSet {
    pub fn new(elements: impl IntoIterator<Item = Value>) -> Result<Self, ListingError> {
        let elements: BTreeSet<Value> = elements.into_iter().collect();
        if elements.contains(&0) {
            return Err(ListingError::ZeroValue { position: 1 });
        }
        Ok(FiniteSet { elements })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, value: Value) -> bool {
        self.elements.contains(&value)
    }

    pub fn iter(&self) -> impl Iterator<Item = Value> + '_ {
        self.elements.iter().copied()
    }

    pub fn symmetric_difference(&self, other: &FiniteSet) -> FiniteSet {
        symmetric_difference(self, other)
    }

    pub fn sorted_listing(&self) -> Listing {
        sorted_listing(self)
    }
}

/// The rank vector of a listing: `ranks[i]` is the 1-based rank of the i-th
/// value among all values. Two listings of equal length compare identically
/// at every index pair exactly when their patterns are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderPattern {
    ranks: Vec<usize>,
}

impl OrderPattern {
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Comma-joined ranks, e.g. `"4,1,2,3,5"`. Used as the group key when
    /// bucketing listings into uniformity classes.
    pub fn key(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for OrderPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.ranks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Monotonicity {
    Increasing,
    Decreasing,
    Neither,
    /// Length 0 or 1.
    Trivial,
}

/// Parses the newline-delimited listing format. Blank lines and lines whose
/// first non-space character is `#` are skipped.
pub fn parse_listing(text: &str) -> Result<Listing, ListingError> {
    let mut values = Vec::new();
    let mut seen: HashMap<Value, usize> = HashMap::new();
    for (line_idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let value = match line.parse::<Value>() {
            Ok(v) if v >= 1 => v,
            _ => {
                return Err(ListingError::Parse {
                    line: line_idx + 1,
                    token: line.to_string(),
                })
            }
        };
        let position = values.len() + 1;
        if let Some(&first) = seen.get(&value) {
            return Err(ListingError::DuplicateValue {
                value,
                first,
                second: position,
            });
        }
        seen.insert(value, position);
        values.push(value);
    }
    Ok(Listing { values, name: None })
}

/// Parses a finite set from the listing format; order is irrelevant but
/// repeated elements are still rejected.
pub fn parse_set(text: &str) -> Result<FiniteSet, ListingError> {
    Ok(parse_listing(text)?.to_set())
}

pub fn order_pattern(h: &Listing) -> OrderPattern {
    ranks_of(&h.values)
}

pub(crate) fn ranks_of(values: &[Value]) -> OrderPattern {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_unstable_by_key(|&i| values[i]);
    let mut ranks = vec![0; values.len()];
    for (rank, idx) in order.into_iter().enumerate() {
        ranks[idx] = rank + 1;
    }
    OrderPattern { ranks }
}

pub fn is_monotonic(h: &Listing) -> Monotonicity {
    let v = &h.values;
    if v.len() <= 1 {
        Monotonicity::Trivial
    } else if v.windows(2).all(|w| w[0] < w[1]) {
        Monotonicity::Increasing
    } else if v.windows(2).all(|w| w[0] > w[1]) {
        Monotonicity::Decreasing
    } else {
        Monotonicity::Neither
    }
}

/// The listing `i ↦ h(i + m)`.
pub fn drop_prefix(h: &Listing, m: usize) -> Result<Listing, ListingError> {
    if m > h.len() {
        return Err(ListingError::OutOfRange {
            requested: m,
            len: h.len(),
        });
    }
    Ok(Listing {
        values: h.values[m..].to_vec(),
        name: h.name.clone(),
    })
}

/// Emits every value of `p`, then every value of `h`.
pub fn prepend(p: &Listing, h: &Listing) -> Result<Listing, ListingError> {
    let head: BTreeSet<Value> = p.values.iter().copied().collect();
    if let Some(&v) = h.values.iter().find(|v| head.contains(v)) {
        return Err(ListingError::ValueCollision(v));
    }
    let mut values = Vec::with_capacity(p.len() + h.len());
    values.extend_from_slice(&p.values);
    values.extend_from_slice(&h.values);
    Ok(Listing {
        values,
        name: h.name.clone(),
    })
}

/// Carries `h` over to the value set of `g_ref` through the reference pair:
/// `g(i) = g_ref(k)` where `h_ref(k) = h(i)`.
///
/// When `h_ref` and `g_ref` share an order pattern, the result shares the
/// order pattern of `h`.
pub fn compose_transport(
    h: &Listing,
    h_ref: &Listing,
    g_ref: &Listing,
) -> Result<Listing, ListingError> {
    if h_ref.len() != g_ref.len() {
        return Err(ListingError::LengthMismatch {
            left: h_ref.len(),
            right: g_ref.len(),
        });
    }
    if h.len() != h_ref.len() {
        return Err(ListingError::SetMismatch);
    }
    let position_in_ref: HashMap<Value, usize> = h_ref
        .values
        .iter()
        .enumerate()
        .map(|(k, &v)| (v, k))
        .collect();
    let values = h
        .values
        .iter()
        .map(|v| {
            position_in_ref
                .get(v)
                .map(|&k| g_ref.values[k])
                .ok_or(ListingError::SetMismatch)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Listing { values, name: None })
}

pub fn symmetric_difference(a: &FiniteSet, b: &FiniteSet) -> FiniteSet {
    FiniteSet {
        elements: a
            .elements
            .symmetric_difference(&b.elements)
            .copied()
            .collect(),
    }
}

/// Finite-scale "almost equal": the symmetric difference has at most
/// `budget` elements.
pub fn almost_equal(a: &FiniteSet, b: &FiniteSet, budget: usize) -> bool {
    a.elements.symmetric_difference(&b.elements).count() <= budget
}

pub fn sorted_listing(a: &FiniteSet) -> Listing {
    Listing {
        values: a.elements.iter().copied().collect(),
        name: None,
    }
}
