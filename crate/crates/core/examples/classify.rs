//! Bucket a corpus of listings into uniformity classes by order pattern.
//!
//! Run with `cargo run --example classify`.

use enumorder::{classify_corpus, sets_uniform_finite, FiniteSet, Listing};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = vec![
        Listing::new(vec![2, 4, 6, 8])?.with_name("evens"),
        Listing::new(vec![3, 4, 5, 6])?.with_name("from-three"),
        Listing::new(vec![9, 1, 2, 3])?.with_name("nine-first"),
        Listing::new(vec![40, 10, 20, 30])?.with_name("forty-first"),
        Listing::new(vec![4, 3, 2, 1])?.with_name("countdown"),
    ];
    for prefix_len in [1, 2, 4] {
        println!("prefix {prefix_len}:");
        for (key, names) in classify_corpus(&corpus, prefix_len)? {
            println!("  [{key}] {}", names.join(", "));
        }
    }

    let a = FiniteSet::new([1, 5, 9])?;
    let b = FiniteSet::new([2, 3, 4])?;
    if let Some((ha, hb)) = sets_uniform_finite(&a, &b) {
        println!("equal-size finite sets are uniform via {ha} and {hb}");
    }
    Ok(())
}
