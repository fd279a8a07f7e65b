use std::fmt;
use std::sync::Arc;

use crate::error::EngineError;

/// Maximum number of variables in a ring, so variable sets fit in a `u64`.
pub const MAX_ARITY: usize = 64;

/// An ordered list of named variables; the polynomial ring `K[x1,...,xn]` is
/// identified by this list, with K fixed to the rationals.
#[derive(Debug, PartialEq, Eq)]
pub struct VarRing {
    names: Vec<String>,
}

impl VarRing {
    /// Creates a ring from a list of distinct variable names.
    pub fn new<I, S>(names: I) -> Result<Arc<VarRing>, EngineError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_ARITY {
            return Err(EngineError::InvalidRing(format!(
                "at most {MAX_ARITY} variables supported, got {}",
                names.len()
            )));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(EngineError::InvalidRing("empty variable name".into()));
            }
            if names[..i].contains(n) {
                return Err(EngineError::InvalidRing(format!(
                    "duplicate variable name `{n}`"
                )));
            }
        }
        Ok(Arc::new(VarRing { names }))
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Two ring handles denote the same ring when the variable lists agree.
    pub fn same(a: &Arc<VarRing>, b: &Arc<VarRing>) -> bool {
        Arc::ptr_eq(a, b) || a.names == b.names
    }

    /// Returns a new ring with one fresh internal variable appended.
    ///
    /// The generated name starts with `#`, which the polynomial grammar cannot
    /// produce, so it never collides with caller-visible variables. Panics
    /// when the ring is already at `MAX_ARITY`; operations that adjoin a
    /// helper variable need one slot of headroom.
    pub fn extended_internal(self: &Arc<Self>) -> Arc<VarRing> {
        assert!(
            self.names.len() < MAX_ARITY,
            "cannot extend a ring that is already at {MAX_ARITY} variables"
        );
        let mut k = 0usize;
        let fresh = loop {
            let candidate = if k == 0 {
                "#t".to_string()
            } else {
                format!("#t{k}")
            };
            if self.index_of(&candidate).is_none() {
                break candidate;
            }
            k += 1;
        };
        let mut names = self.names.clone();
        names.push(fresh);
        Arc::new(VarRing { names })
    }

    /// The ring on a subset of this ring's variables, declaration order kept.
    pub fn subring(self: &Arc<Self>, keep: VarSet) -> Arc<VarRing> {
        let names: Vec<String> = keep.iter().map(|i| self.names[i].clone()).collect();
        Arc::new(VarRing { names })
    }

    /// Renders a variable set using this ring's names, e.g. `{x, z}`.
    pub fn set_to_string(&self, set: VarSet) -> String {
        let names: Vec<&str> = set.iter().map(|i| self.name(i)).collect();
        format!("{{{}}}", names.join(", "))
    }
}

/// A subset of a ring's variables, stored as a bitmask over variable indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VarSet(u64);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn singleton(index: usize) -> VarSet {
        debug_assert!(index < MAX_ARITY);
        VarSet(1u64 << index)
    }

    pub fn full(arity: usize) -> VarSet {
        debug_assert!(arity <= MAX_ARITY);
        if arity == 64 {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << arity) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> VarSet {
        let mut s = VarSet::EMPTY;
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, index: usize) {
        debug_assert!(index < MAX_ARITY);
        self.0 |= 1u64 << index;
    }

    pub fn contains(&self, index: usize) -> bool {
        index < MAX_ARITY && self.0 & (1u64 << index) != 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn union(&self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: VarSet) -> VarSet {
        VarSet(self.0 & other.0)
    }

    pub fn is_subset_of(&self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn complement(&self, arity: usize) -> VarSet {
        VarSet(VarSet::full(arity).0 & !self.0)
    }

    /// Iterates member indices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.0;
        (0..MAX_ARITY).filter(move |i| bits & (1u64 << i) != 0)
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let indices: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", indices.join(","))
    }
}
