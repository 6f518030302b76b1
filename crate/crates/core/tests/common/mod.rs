//! Oracles shared by the integration tests. Nothing here calls into the
//! pattern or arena code paths it is used to check.

#![allow(dead_code)]

use std::path::PathBuf;

use enumorder::{Listing, Value};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data")
}

pub fn listing(values: &[Value]) -> Listing {
    Listing::new(values.to_vec()).unwrap()
}

/// Every permutation of `1..=n` as a listing.
pub fn permutations(n: u64) -> Vec<Listing> {
    (1..=n)
        .permutations(n as usize)
        .map(|p| Listing::new(p).unwrap())
        .collect()
}

/// Uniformity straight from the definition: every index pair compares the
/// same way in both listings.
pub fn all_pairs_uniform(h: &[Value], g: &[Value]) -> bool {
    assert_eq!(h.len(), g.len());
    (0..h.len()).all(|i| (0..h.len()).all(|j| (h[i] < h[j]) == (g[i] < g[j])))
}

/// A plain boxed BST, grown recursively, used to cross-check the arena tree.
#[derive(Debug)]
pub struct BoxNode {
    pub value: Value,
    pub left: Option<Box<BoxNode>>,
    pub right: Option<Box<BoxNode>>,
}

pub fn box_insert(node: &mut Option<Box<BoxNode>>, value: Value) {
    match node {
        None => {
            *node = Some(Box::new(BoxNode {
                value,
                left: None,
                right: None,
            }))
        }
        Some(n) if value < n.value => box_insert(&mut n.left, value),
        Some(n) => box_insert(&mut n.right, value),
    }
}

pub fn box_tree(values: &[Value]) -> Option<Box<BoxNode>> {
    let mut root = None;
    for &v in values {
        box_insert(&mut root, v);
    }
    root
}

pub fn box_shape(node: &Option<Box<BoxNode>>) -> String {
    match node {
        None => String::new(),
        Some(n) => format!("({},{})", box_shape(&n.left), box_shape(&n.right)),
    }
}

/// `len` distinct values drawn from `1..=max`, in random order.
pub fn random_listing<R: Rng>(rng: &mut R, len: usize, max: Value) -> Listing {
    assert!(max as usize >= len);
    let mut pool: Vec<Value> = (1..=max).collect();
    pool.shuffle(rng);
    pool.truncate(len);
    Listing::new(pool).unwrap()
}

/// A listing with the same order pattern as `h` but fresh random values:
/// sample `len` distinct values, sort them, and place the k-th smallest where
/// `h` has its k-th smallest.
pub fn same_pattern_as<R: Rng>(rng: &mut R, h: &Listing, max: Value) -> Listing {
    let mut fresh = random_listing(rng, h.len(), max).values().to_vec();
    fresh.sort_unstable();
    let vals = h.values();
    let out: Vec<Value> = vals
        .iter()
        .map(|v| {
            let rank = vals.iter().filter(|w| *w < v).count();
            fresh[rank]
        })
        .collect();
    Listing::new(out).unwrap()
}
