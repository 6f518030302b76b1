//! Enumeration-order analysis for finite prefixes of set enumerations.
//!
//! A [`Listing`] records the order in which some machine emitted the
//! elements of a set. This crate compares listings by the relative order of
//! their values:
//!
//! - [`uniformity`]: do two listings compare identically at every index
//!   pair, possibly after dropping finite prefixes?
//! - [`tobst`]: the binary search tree grown by inserting a listing's values
//!   in emission order, its canonical shape, and step-by-step comparison.
//! - [`enumerator`]: a small register machine and a dovetailing scheduler
//!   that produce listings under step budgets.
//! - [`cli`]: the `enumorder` command-line front end.
//!
//! ```
//! use enumorder::{uniform_prefix, Listing, VerdictKind};
//!
//! let h = Listing::new((1..=10).map(|i| 2 * i).collect()).unwrap();
//! let g = Listing::new((1..=10).map(|i| i + 1).collect()).unwrap();
//! assert_eq!(uniform_prefix(&h, &g).kind, VerdictKind::Uniform);
//! ```

pub mod cli;
pub mod enumerator;
pub mod listing;
pub mod tobst;
pub mod uniformity;

pub use enumerator::{
    dovetail_union, run_budgeted, EnumProgram, EnumRun, Instruction, ProgramError,
};
pub use listing::{
    almost_equal, compose_transport, drop_prefix, is_monotonic, order_pattern, parse_listing,
    parse_set, prepend, sorted_listing, symmetric_difference, FiniteSet, Listing, ListingError,
    Monotonicity, OrderPattern, Value,
};
pub use tobst::{
    export_dot, first_divergent_step, isomorphic_at_step, shape_encode, spine_kind, tobst_build,
    tobst_insert, uniform_via_tobst, NodeRef, SpineKind, Tobst, TobstError, TobstShape,
};
pub use uniformity::{
    classify_corpus, discordant_pairs, sets_uniform_finite, type2_search, uniform_prefix,
    DiscordanceSet, Type2Witness, UniformityError, UniformityVerdict, VerdictKind,
};
