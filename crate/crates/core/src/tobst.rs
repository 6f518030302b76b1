//! Output binary search trees: the BST grown by inserting a listing's values
//! in emission order, each node labelled `(step, value)`.
//!
//! Nodes live in an append-only arena indexed by `step - 1`. A child is
//! always inserted after its parent, so the tree after `k` insertions is
//! exactly the first `k` arena slots with links to later slots ignored.
//! Every snapshot of a build is therefore a cheap view over one shared
//! arena, and no traversal here recurses.

use std::fmt::{self, Write as _};
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::listing::{Listing, Value};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TobstError {
    #[error("value {0} is already in the tree")]
    DuplicateValue(Value),
    #[error("expected step {expected}, got {got}")]
    StepGap { expected: usize, got: usize },
    #[error("step {step} is beyond the available {available}")]
    OutOfRange { step: usize, available: usize },
    #[error("length mismatch: {left} != {right}")]
    LengthMismatch { left: usize, right: usize },
}

#[derive(Debug, Clone, Copy)]
struct Slot {
    value: Value,
    left: Option<usize>,
    right: Option<usize>,
}

#[derive(Debug, Clone, Default)]
pub struct Tobst {
    arena: Arc<Vec<Slot>>,
    size: usize,
}

/// Borrowed view of one node.
#[derive(Clone, Copy)]
pub struct NodeRef<'a> {
    tree: &'a Tobst,
    index: usize,
}

impl<'a> NodeRef<'a> {
    pub fn step(&self) -> usize {
        self.index + 1
    }

    pub fn value(&self) -> Value {
        self.tree.arena[self.index].value
    }

    pub fn left(&self) -> Option<NodeRef<'a>> {
        self.tree.left_of(self.index).map(|index| NodeRef {
            tree: self.tree,
            index,
        })
    }

    pub fn right(&self) -> Option<NodeRef<'a>> {
        self.tree.right_of(self.index).map(|index| NodeRef {
            tree: self.tree,
            index,
        })
    }
}

impl fmt::Debug for NodeRef<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.step(), self.value())
    }
}

/// Canonical ordered-shape encoding: a node is `"(" + left + "," + right + ")"`
/// and an absent subtree is the empty string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct TobstShape(String);

impl TobstShape {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for TobstShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SpineKind {
    RightSpine,
    LeftSpine,
    /// Zero or one node.
    Both,
    Neither,
}

impl SpineKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SpineKind::RightSpine => "RightSpine",
            SpineKind::LeftSpine => "LeftSpine",
            SpineKind::Both => "Both",
            SpineKind::Neither => "Neither",
        }
    }
}

impl Tobst {
    pub fn new() -> Self {
        Tobst::default()
    }

    /// The final tree of `h`.
    pub fn from_listing(h: &Listing) -> Self {
        let mut arena: Vec<Slot> = Vec::with_capacity(h.len());
        for &value in h.values() {
            // Listings are injective, so the descent never meets `value`.
            let _ = attach(&mut arena, value);
        }
        let size = arena.len();
        Tobst {
            arena: Arc::new(arena),
            size,
        }
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn root(&self) -> Option<NodeRef<'_>> {
        (self.size > 0).then_some(NodeRef {
            tree: self,
            index: 0,
        })
    }

    fn left_of(&self, index: usize) -> Option<usize> {
        self.arena[index].left.filter(|&c| c < self.size)
    }

    fn right_of(&self, index: usize) -> Option<usize> {
        self.arena[index].right.filter(|&c| c < self.size)
    }

    /// The tree as it stood after `step` insertions.
    pub fn snapshot(&self, step: usize) -> Result<Tobst, TobstError> {
        if step > self.size {
            return Err(TobstError::OutOfRange {
                step,
                available: self.size,
            });
        }
        Ok(Tobst {
            arena: Arc::clone(&self.arena),
            size: step,
        })
    }

    /// Inserts `(step, value)` by the usual BST descent, returning a new tree.
    /// `step` must be `len() + 1`.
    pub fn insert(&self, step: usize, value: Value) -> Result<Tobst, TobstError> {
        if step != self.size + 1 {
            return Err(TobstError::StepGap {
                expected: self.size + 1,
                got: step,
            });
        }
        if let Some(next) = self.arena.get(self.size) {
            // The shared arena already holds this exact continuation.
            if next.value == value {
                return Ok(Tobst {
                    arena: Arc::clone(&self.arena),
                    size: step,
                });
            }
        }
        let mut arena: Vec<Slot> = Vec::with_capacity(self.size + 1);
        arena.extend(self.arena[..self.size].iter().map(|s| Slot {
            value: s.value,
            left: s.left.filter(|&c| c < self.size),
            right: s.right.filter(|&c| c < self.size),
        }));
        attach(&mut arena, value)?;
        Ok(Tobst {
            arena: Arc::new(arena),
            size: step,
        })
    }

    /// Values in in-order (ascending for a well-formed BST).
    pub fn in_order_values(&self) -> Vec<Value> {
        let mut out = Vec::with_capacity(self.size);
        let mut stack = Vec::new();
        let mut cursor = (self.size > 0).then_some(0);
        while cursor.is_some() || !stack.is_empty() {
            while let Some(idx) = cursor {
                stack.push(idx);
                cursor = self.left_of(idx);
            }
            if let Some(idx) = stack.pop() {
                out.push(self.arena[idx].value);
                cursor = self.right_of(idx);
            }
        }
        out
    }

    /// Node indices in preorder.
    fn preorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.size);
        let mut stack: Vec<usize> = Vec::new();
        if self.size > 0 {
            stack.push(0);
        }
        while let Some(idx) = stack.pop() {
            out.push(idx);
            if let Some(r) = self.right_of(idx) {
                stack.push(r);
            }
            if let Some(l) = self.left_of(idx) {
                stack.push(l);
            }
        }
        out
    }

    pub fn height(&self) -> usize {
        let mut depth = vec![0usize; self.size];
        let mut height = 0;
        for idx in self.preorder() {
            let d = depth[idx] + 1;
            height = height.max(d);
            for c in [self.left_of(idx), self.right_of(idx)]
                .into_iter()
                .flatten()
            {
                depth[c] = d;
            }
        }
        height
    }

    pub fn shape(&self) -> TobstShape {
        shape_encode(self)
    }

    pub fn spine_kind(&self) -> SpineKind {
        spine_kind(self)
    }

    pub fn to_dot(&self) -> String {
        export_dot(self)
    }
}

/// Appends a slot for `value` and links it below its BST parent. `arena`
/// must be a well-formed tree with no dangling links.
fn attach(arena: &mut Vec<Slot>, value: Value) -> Result<(), TobstError> {
    let new_index = arena.len();
    if new_index > 0 {
        let mut cur = 0;
        loop {
            let slot = &mut arena[cur];
            let link = if value < slot.value {
                &mut slot.left
            } else if value > slot.value {
                &mut slot.right
            } else {
                return Err(TobstError::DuplicateValue(value));
            };
            match *link {
                Some(next) => cur = next,
                None => {
                    *link = Some(new_index);
                    break;
                }
            }
        }
    }
    arena.push(Slot {
        value,
        left: None,
        right: None,
    });
    Ok(())
}

/// Free-function form of [`Tobst::insert`].
pub fn tobst_insert(t: &Tobst, step: usize, value: Value) -> Result<Tobst, TobstError> {
    t.insert(step, value)
}

/// Snapshots after 1, 2, …, `len(h)` insertions. All snapshots share one arena.
pub fn tobst_build(h: &Listing) -> Vec<Tobst> {
    let full = Tobst::from_listing(h);
    (1..=full.len())
        .map(|step| Tobst {
            arena: Arc::clone(&full.arena),
            size: step,
        })
        .collect()
}

pub fn shape_encode(t: &Tobst) -> TobstShape {
    enum Emit {
        Node(usize),
        Text(&'static str),
    }
    let mut out = String::with_capacity(t.size * 3);
    let mut stack = Vec::new();
    if t.size > 0 {
        stack.push(Emit::Node(0));
    }
    while let Some(item) = stack.pop() {
        match item {
            Emit::Text(s) => out.push_str(s),
            Emit::Node(idx) => {
                out.push('(');
                stack.push(Emit::Text(")"));
                if let Some(r) = t.right_of(idx) {
                    stack.push(Emit::Node(r));
                }
                stack.push(Emit::Text(","));
                if let Some(l) = t.left_of(idx) {
                    stack.push(Emit::Node(l));
                }
            }
        }
    }
    TobstShape(out)
}

/// Whether the trees of the length-`i` prefixes of `h` and `g` have the same
/// ordered shape.
pub fn isomorphic_at_step(h: &Listing, g: &Listing, i: usize) -> Result<bool, TobstError> {
    let available = h.len().min(g.len());
    if i > available {
        return Err(TobstError::OutOfRange { step: i, available });
    }
    let th = Tobst::from_listing(&h.prefix(i));
    let tg = Tobst::from_listing(&g.prefix(i));
    Ok(shape_encode(&th) == shape_encode(&tg))
}

/// First step at which the two listings' trees differ in shape, if any.
pub fn first_divergent_step(h: &Listing, g: &Listing) -> Result<Option<usize>, TobstError> {
    if h.len() != g.len() {
        return Err(TobstError::LengthMismatch {
            left: h.len(),
            right: g.len(),
        });
    }
    let th = Tobst::from_listing(h);
    let tg = Tobst::from_listing(g);
    for step in 1..=h.len() {
        let a = shape_encode(&th.snapshot(step)?);
        let b = shape_encode(&tg.snapshot(step)?);
        if a != b {
            return Ok(Some(step));
        }
    }
    Ok(None)
}

/// Uniformity decided through trees: the snapshots agree in shape at every step.
pub fn uniform_via_tobst(h: &Listing, g: &Listing) -> Result<bool, TobstError> {
    Ok(first_divergent_step(h, g)?.is_none())
}

pub fn spine_kind(t: &Tobst) -> SpineKind {
    if t.size <= 1 {
        return SpineKind::Both;
    }
    let any_left = (0..t.size).any(|i| t.left_of(i).is_some());
    let any_right = (0..t.size).any(|i| t.right_of(i).is_some());
    match (any_left, any_right) {
        (false, true) => SpineKind::RightSpine,
        (true, false) => SpineKind::LeftSpine,
        _ => SpineKind::Neither,
    }
}

/// DOT digraph, nodes labelled `step:value`, edges labelled `L`/`R`,
/// emitted in preorder.
pub fn export_dot(t: &Tobst) -> String {
    let mut out = String::from("digraph tobst {\n");
    for idx in t.preorder() {
        let step = idx + 1;
        let _ = writeln!(out, "  n{step} [label=\"{step}:{}\"];", t.arena[idx].value);
        for (child, side) in [(t.left_of(idx), "L"), (t.right_of(idx), "R")] {
            if let Some(c) = child {
                let _ = writeln!(out, "  n{step} -> n{} [label=\"{side}\"];", c + 1);
            }
        }
    }
    out.push_str("}\n");
    out
}
