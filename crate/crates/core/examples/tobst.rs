//! Grow output binary search trees step by step and compare their shapes.
//!
//! Run with `cargo run --example tobst`; pipe the DOT output through
//! `dot -Tsvg` to draw it.

use enumorder::{first_divergent_step, isomorphic_at_step, tobst_build, Listing, Tobst};

fn show(h: &Listing) {
    println!("listing {h}");
    for (i, snap) in tobst_build(h).iter().enumerate() {
        println!(
            "  step {}: {:<24} {:?}",
            i + 1,
            snap.shape(),
            snap.spine_kind()
        );
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    show(&Listing::new(vec![1, 2, 3, 4, 5])?);
    show(&Listing::new(vec![5, 4, 3, 2, 1])?);
    show(&Listing::new(vec![3, 5, 4, 1, 2])?);

    let h1 = Listing::new(vec![7, 2, 5, 6, 14])?;
    let h2 = Listing::new(vec![6, 8, 1, 2, 5])?;
    for i in 1..=5 {
        println!(
            "{h1} ~ {h2} at step {i}: {}",
            isomorphic_at_step(&h1, &h2, i)?
        );
    }
    println!(
        "first divergent step: {:?}",
        first_divergent_step(&h1, &h2)?
    );

    println!("{}", Tobst::from_listing(&h1).to_dot());
    Ok(())
}
