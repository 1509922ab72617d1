//! Domination predicates and the 2-movability check.
//!
//! A set `T` is 2-movable (with respect to a base predicate, plain or total
//! domination) when it satisfies the base predicate and every pair of
//! distinct members `x, y` can either be dropped outright, or be replaced by
//! outside vertices `u ~ x` and `v ~ y` while keeping the predicate.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexId, VertexSet};

/// Which domination predicate a set must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Base {
    /// `N[S] = V`.
    Dominating,
    /// `N(S) = V`.
    Total,
}

impl Base {
    /// Vertices covered by `s` under this predicate.
    #[inline]
    pub fn coverage(self, g: &Graph, s: VertexSet) -> VertexSet {
        match self {
            Base::Dominating => closed_neighborhood(g, s),
            Base::Total => open_neighborhood(g, s),
        }
    }

    /// What a single added vertex `v` contributes to the coverage.
    #[inline]
    fn reach(self, g: &Graph, v: VertexId) -> VertexSet {
        match self {
            Base::Dominating => g.neighbors(v).with(v),
            Base::Total => g.neighbors(v),
        }
    }

    #[inline]
    pub fn holds(self, g: &Graph, s: VertexSet) -> bool {
        self.coverage(g, s) == g.vertices()
    }
}

/// `s ∪ N(s)`.
pub fn closed_neighborhood(g: &Graph, s: VertexSet) -> VertexSet {
    s | open_neighborhood(g, s)
}

/// Union of the neighborhoods of the members of `s`.
pub fn open_neighborhood(g: &Graph, s: VertexSet) -> VertexSet {
    s.iter()
        .fold(VertexSet::EMPTY, |acc, v| acc | g.neighbors(v))
}

pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    Base::Dominating.holds(g, s)
}

/// Every vertex, members of `s` included, has a neighbor in `s`.
pub fn is_total_dominating(g: &Graph, s: VertexSet) -> bool {
    Base::Total.holds(g, s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveAction {
    Remove,
    Replace,
}

/// Evidence that the pair `{x, y}` of a set `T` can be moved.
///
/// For `Replace`, `u` is an outside neighbor of `x` and `v` an outside
/// neighbor of `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MoveWitness {
    pub x: VertexId,
    pub y: VertexId,
    pub action: MoveAction,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<VertexId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<VertexId>,
}

impl MoveWitness {
    pub fn remove(x: VertexId, y: VertexId) -> Self {
        MoveWitness {
            x,
            y,
            action: MoveAction::Remove,
            u: None,
            v: None,
        }
    }

    pub fn replace(x: VertexId, y: VertexId, u: VertexId, v: VertexId) -> Self {
        MoveWitness {
            x,
            y,
            action: MoveAction::Replace,
            u: Some(u),
            v: Some(v),
        }
    }

    /// The set obtained from `t` by applying this move.
    pub fn apply(&self, t: VertexSet) -> VertexSet {
        let rest = t.without(self.x).without(self.y);
        match (self.u, self.v) {
            (Some(u), Some(v)) => rest.with(u).with(v),
            _ => rest,
        }
    }

    /// Re-checks the move against `t` from scratch.
    pub fn is_valid_for(
        &self,
        g: &Graph,
        t: VertexSet,
        base: Base,
        allow_equal_replacements: bool,
    ) -> bool {
        if self.x == self.y || !t.contains(self.x) || !t.contains(self.y) {
            return false;
        }
        match (self.action, self.u, self.v) {
            (MoveAction::Remove, None, None) => {}
            (MoveAction::Replace, Some(u), Some(v)) => {
                let outside = t.complement(g.order());
                if !outside.contains(u) || !outside.contains(v) {
                    return false;
                }
                if !g.has_edge(self.x, u) || !g.has_edge(self.y, v) {
                    return false;
                }
                if u == v && !allow_equal_replacements {
                    return false;
                }
            }
            _ => return false,
        }
        base.holds(g, self.apply(t))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("vertex {0} is not a member of the set")]
    NotMember(VertexId),
    #[error("pair members must be distinct, got ({0}, {0})")]
    SameVertex(VertexId),
    #[error("the set does not satisfy the base domination predicate")]
    BaseFails,
}

/// Finds a move for the pair `(x, y)` of `t`.
///
/// Removal is preferred. Otherwise the lexicographically first `(u, v)` with
/// `u ∈ N(x) \ t`, `v ∈ N(y) \ t` is returned. The resulting set `{u, v}` is
/// unordered, so trying the swapped assignment (`u ~ y`, `v ~ x`) can never
/// succeed where this one fails; the decision is symmetric in `x` and `y`.
pub fn find_pair_move(
    g: &Graph,
    t: VertexSet,
    x: VertexId,
    y: VertexId,
    base: Base,
    allow_equal_replacements: bool,
) -> Result<Option<MoveWitness>, MoveError> {
    for w in [x, y] {
        if !t.contains(w) {
            return Err(MoveError::NotMember(w));
        }
    }
    if x == y {
        return Err(MoveError::SameVertex(x));
    }
    if !base.holds(g, t) {
        return Err(MoveError::BaseFails);
    }
    Ok(pair_move(g, t, x, y, base, allow_equal_replacements))
}

/// [`find_pair_move`] without precondition checks.
#[inline]
pub(crate) fn pair_move(
    g: &Graph,
    t: VertexSet,
    x: VertexId,
    y: VertexId,
    base: Base,
    allow_equal_replacements: bool,
) -> Option<MoveWitness> {
    let rest = t.without(x).without(y);
    let missing = g.vertices() - base.coverage(g, rest);
    if missing.is_empty() {
        return Some(MoveWitness::remove(x, y));
    }
    let outside = t.complement(g.order());
    let (us, vs) = (g.neighbors(x) & outside, g.neighbors(y) & outside);
    for u in us {
        let still = missing - base.reach(g, u);
        for v in vs {
            if u == v && !allow_equal_replacements {
                continue;
            }
            if (still - base.reach(g, v)).is_empty() {
                return Some(MoveWitness::replace(x, y, u, v));
            }
        }
    }
    None
}

/// Outcome of [`is_2movable`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Movability {
    /// One witness per unordered pair, pairs in lexicographic order.
    Movable(Vec<MoveWitness>),
    /// The set fails the base predicate itself.
    NotDominating,
    /// The first pair (lexicographically) with no move.
    Stuck { x: VertexId, y: VertexId },
}

impl Movability {
    pub fn holds(&self) -> bool {
        matches!(self, Movability::Movable(_))
    }

    pub fn witnesses(&self) -> Option<&[MoveWitness]> {
        match self {
            Movability::Movable(w) => Some(w),
            _ => None,
        }
    }
}

/// Full 2-movability check with witnesses. Sets with fewer than two members
/// are vacuously movable once they pass the base predicate.
pub fn is_2movable(
    g: &Graph,
    t: VertexSet,
    base: Base,
    allow_equal_replacements: bool,
) -> Movability {
    if !base.holds(g, t) {
        return Movability::NotDominating;
    }
    let mut moves = Vec::with_capacity(t.len() * t.len().saturating_sub(1) / 2);
    for x in t {
        for y in t.iter().filter(|&y| y > x) {
            match pair_move(g, t, x, y, base, allow_equal_replacements) {
                Some(w) => moves.push(w),
                None => return Movability::Stuck { x, y },
            }
        }
    }
    Movability::Movable(moves)
}

/// Decision-only variant of [`is_2movable`] for the search loops.
pub(crate) fn movable(g: &Graph, t: VertexSet, base: Base, allow_equal_replacements: bool) -> bool {
    base.holds(g, t)
        && t.iter().all(|x| {
            t.iter()
                .filter(|&y| y > x)
                .all(|y| pair_move(g, t, x, y, base, allow_equal_replacements).is_some())
        })
}
