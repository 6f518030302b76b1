//! Carry any listing of one set over to a uniform listing of another set.
//!
//! Run with `cargo run --example transport`.

use enumorder::{
    almost_equal, compose_transport, order_pattern, symmetric_difference, FiniteSet, Listing,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // A uniform reference pair over {1,2,3} and {5,6,7}.
    let h_ref = Listing::new(vec![1, 2, 3])?;
    let g_ref = Listing::new(vec![5, 6, 7])?;
    for h in [vec![3, 1, 2], vec![2, 3, 1], vec![3, 2, 1]] {
        let h = Listing::new(h)?;
        let g = compose_transport(&h, &h_ref, &g_ref)?;
        println!(
            "{h} -> {g}  patterns {} / {}",
            order_pattern(&h),
            order_pattern(&g)
        );
    }

    let a = FiniteSet::new([1, 2, 3, 10])?;
    let b = FiniteSet::new([2, 3, 4, 10])?;
    let diff = symmetric_difference(&a, &b);
    println!(
        "symmetric difference {:?}; almost equal within 2: {}, within 1: {}",
        diff.iter().collect::<Vec<_>>(),
        almost_equal(&a, &b, 2),
        almost_equal(&a, &b, 1)
    );
    Ok(())
}
