//! Uniformity and type-2 uniformity of listing prefixes.
//!
//! Every verdict here is about finite prefixes. A `Uniform` verdict on a
//! prefix is a necessary condition for two infinite listings to be uniform,
//! never a proof of it, so each verdict records how many positions it
//! actually compared.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::listing::{ranks_of, sorted_listing, FiniteSet, Listing, Value};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UniformityError {
    #[error("shift {shift} exceeds length {len} of listing {which}")]
    OutOfRange {
        which: &'static str,
        shift: usize,
        len: usize,
    },
    #[error("listing {name} is shorter than the prefix length {prefix_len}")]
    TooShort { name: String, prefix_len: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VerdictKind {
    Uniform,
    NotUniform,
    /// The common prefix is uniform but the inputs had different lengths.
    Truncated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniformityVerdict {
    pub kind: VerdictKind,
    pub compared_length: usize,
    /// Lexicographically least discordant `(i, j)`, 1-based, `i < j`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(usize, usize)>,
}

impl UniformityVerdict {
    /// True for `Uniform` and `Truncated`: no discordance on the compared prefix.
    pub fn is_uniform(&self) -> bool {
        self.kind != VerdictKind::NotUniform
    }
}

/// The index pairs on which `i ↦ h(i+m)` and `i ↦ g(i+n)` disagree in order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscordanceSet {
    pub m: usize,
    pub n: usize,
    pub overlap: usize,
    pub pairs: BTreeSet<(usize, usize)>,
}

impl DiscordanceSet {
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Shifts that make two listings uniform over `overlap` positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Type2Witness {
    pub m: usize,
    pub n: usize,
    pub overlap: usize,
}

#[inline]
fn discordant(h: &[Value], g: &[Value], i: usize, j: usize) -> bool {
    (h[i] < h[j]) != (g[i] < g[j])
}

fn least_discordant_pair(h: &[Value], g: &[Value]) -> Option<(usize, usize)> {
    let len = h.len().min(g.len());
    (0..len)
        .flat_map(|i| (i + 1..len).map(move |j| (i, j)))
        .find(|&(i, j)| discordant(h, g, i, j))
        .map(|(i, j)| (i + 1, j + 1))
}

fn same_pattern(h: &[Value], g: &[Value]) -> bool {
    debug_assert_eq!(h.len(), g.len());
    ranks_of(h) == ranks_of(g)
}

/// Compares two listings on their common prefix.
pub fn uniform_prefix(h: &Listing, g: &Listing) -> UniformityVerdict {
    let len = h.len().min(g.len());
    let (hv, gv) = (&h.values()[..len], &g.values()[..len]);
    if same_pattern(hv, gv) {
        let kind = if h.len() == g.len() {
            VerdictKind::Uniform
        } else {
            VerdictKind::Truncated
        };
        return UniformityVerdict {
            kind,
            compared_length: len,
            witness: None,
        };
    }
    UniformityVerdict {
        kind: VerdictKind::NotUniform,
        compared_length: len,
        witness: least_discordant_pair(hv, gv),
    }
}

pub fn discordant_pairs(
    h: &Listing,
    g: &Listing,
    m: usize,
    n: usize,
) -> Result<DiscordanceSet, UniformityError> {
    if m > h.len() {
        return Err(UniformityError::OutOfRange {
            which: "h",
            shift: m,
            len: h.len(),
        });
    }
    if n > g.len() {
        return Err(UniformityError::OutOfRange {
            which: "g",
            shift: n,
            len: g.len(),
        });
    }
    let overlap = (h.len() - m).min(g.len() - n);
    let hv = &h.values()[m..m + overlap];
    let gv = &g.values()[n..n + overlap];
    let mut pairs = BTreeSet::new();
    for i in 0..overlap {
        for j in i + 1..overlap {
            if discordant(hv, gv, i, j) {
                pairs.insert((i + 1, j + 1));
            }
        }
    }
    Ok(DiscordanceSet {
        m,
        n,
        overlap,
        pairs,
    })
}

/// Searches shifts `(m, n)` with `m ≤ max_m`, `n ≤ max_n` in order of
/// increasing `m + n` (ties: smaller `m` first) for the first pair whose
/// shifted listings are uniform over at least `min_overlap` positions.
///
/// Shifts beyond a listing's length are never tried. `min_overlap = 0`
/// accepts an empty overlap, which every shift pair satisfies.
pub fn type2_search(
    h: &Listing,
    g: &Listing,
    max_m: usize,
    max_n: usize,
    min_overlap: usize,
) -> Option<Type2Witness> {
    let max_m = max_m.min(h.len());
    let max_n = max_n.min(g.len());
    for total in 0..=max_m + max_n {
        let lo = total.saturating_sub(max_n);
        for m in lo..=total.min(max_m) {
            let n = total - m;
            let overlap = (h.len() - m).min(g.len() - n);
            if overlap < min_overlap {
                continue;
            }
            let hv = &h.values()[m..m + overlap];
            let gv = &g.values()[n..n + overlap];
            if same_pattern(hv, gv) {
                return Some(Type2Witness { m, n, overlap });
            }
        }
    }
    None
}

/// Finite sets of equal cardinality are uniform: their ascending listings
/// witness it. Returns that witness pair, or `None` when the sizes differ.
pub fn sets_uniform_finite(a: &FiniteSet, b: &FiniteSet) -> Option<(Listing, Listing)> {
    (a.len() == b.len()).then(|| (sorted_listing(a), sorted_listing(b)))
}

/// Buckets listings by the order pattern of their first `prefix_len` values.
///
/// Keys are pattern keys (`"3,1,2"`); each group lists member names in
/// sorted order. Unnamed listings are called `#k` after their 1-based
/// position in `listings`.
pub fn classify_corpus(
    listings: &[Listing],
    prefix_len: usize,
) -> Result<BTreeMap<String, Vec<String>>, UniformityError> {
    let mut groups: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for (idx, listing) in listings.iter().enumerate() {
        let name = listing
            .name()
            .map(str::to_string)
            .unwrap_or_else(|| format!("#{}", idx + 1));
        if listing.len() < prefix_len {
            return Err(UniformityError::TooShort { name, prefix_len });
        }
        let key = ranks_of(&listing.values()[..prefix_len]).key();
        groups.entry(key).or_default().push(name);
    }
    for names in groups.values_mut() {
        names.sort();
    }
    Ok(groups)
}
