//! How a (2-movable) total dominating set of a corona restricts to the
//! attached copies of `H`.
//!
//! For a center `a` outside `T`, only copy vertices can dominate the copy
//! `H^a`, so `T ∩ V(H^a)` must totally dominate it. For a center `a` inside
//! a 2-movable `T`, each `u ∈ T_a = T ∩ V(H^a)` must satisfy either
//! (i) `T_a \ {u}` totally dominates `H^a`, or (ii) some `x_a, x_u ∈ V(H^a)`
//! with `x_u ~ u` in `H^a` make `(T_a \ {u}) ∪ {x_a, x_u}` a TDS of `H^a`
//! (`x_a ~ a` holds for every copy vertex). The center itself lies outside
//! `V(H^a)`, so removing it from `T_a` changes nothing.

use crate::domination::{is_2movable, is_total_dominating};
use crate::graph::{CoronaLayout, Graph, VertexId, VertexSet};
use crate::io::Certificate;
use crate::solver::{all_minimum_sets, InvariantKind, MAX_ALL_MINIMUM_ORDER};

use super::{CheckConfig, HarnessError, InstanceVerdict, Outcome};

/// How one member `u` of `T_a` satisfied the center-in-set property.
/// Vertex ids are in the corona's numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProjectionBranch {
    /// `T_a \ {u}` already totally dominates the copy.
    Removal,
    /// `(T_a \ {u}) ∪ {x_a, x_u}` totally dominates the copy.
    Replacement { x_a: VertexId, x_u: VertexId },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionVerdict {
    pub center: VertexId,
    /// `T ∩ V(H^a)` in corona numbering.
    pub restricted: VertexSet,
    /// Per member of the restriction; `None` marks a violation.
    pub members: Vec<(VertexId, Option<ProjectionBranch>)>,
}

impl ProjectionVerdict {
    pub fn holds(&self) -> bool {
        self.members.iter().all(|(_, b)| b.is_some())
    }
}

fn require_center(layout: &CoronaLayout, gh: &Graph, a: VertexId) -> Result<(), HarnessError> {
    if gh.order() != layout.total_order() {
        return Err(HarnessError::Precondition(format!(
            "graph order {} does not match the layout ({})",
            gh.order(),
            layout.total_order()
        )));
    }
    if a >= layout.g_order {
        return Err(HarnessError::Precondition(format!(
            "{a} is not a center vertex"
        )));
    }
    Ok(())
}

/// Center-in-set projection check for a 2-movable TDS `t` of the corona.
pub fn check_lemma_projection_in(
    gh: &Graph,
    layout: &CoronaLayout,
    t: VertexSet,
    a: VertexId,
    allow_equal_replacements: bool,
) -> Result<ProjectionVerdict, HarnessError> {
    require_center(layout, gh, a)?;
    if !t.contains(a) {
        return Err(HarnessError::Precondition(format!(
            "center {a} is not in the set"
        )));
    }
    if !is_2movable(
        gh,
        t,
        crate::domination::Base::Total,
        allow_equal_replacements,
    )
    .holds()
    {
        return Err(HarnessError::Precondition(
            "the set is not a 2-movable total dominating set of the corona".into(),
        ));
    }
    let copy_ids = layout.copy_set(a);
    let copy = gh.induced(copy_ids);
    let local = layout.project_to_copy(t, a);
    let lift = |v: VertexId| layout.copy_vertex(a, v);

    let members = local
        .iter()
        .map(|u| {
            let rest = local.without(u);
            if is_total_dominating(&copy, rest) {
                return (lift(u), Some(ProjectionBranch::Removal));
            }
            let replacement = copy.vertices().iter().find_map(|xa| {
                copy.neighbors(u)
                    .iter()
                    .filter(|&xu| xu != xa || allow_equal_replacements)
                    .find(|&xu| is_total_dominating(&copy, rest.with(xa).with(xu)))
                    .map(|xu| ProjectionBranch::Replacement {
                        x_a: lift(xa),
                        x_u: lift(xu),
                    })
            });
            (lift(u), replacement)
        })
        .collect();

    Ok(ProjectionVerdict {
        center: a,
        restricted: t & copy_ids,
        members,
    })
}

/// Center-outside-set projection check for a TDS `t` of the corona: the
/// restriction to the copy at `a` must totally dominate that copy.
pub fn check_lemma_projection_out(
    gh: &Graph,
    layout: &CoronaLayout,
    t: VertexSet,
    a: VertexId,
) -> Result<bool, HarnessError> {
    require_center(layout, gh, a)?;
    if t.contains(a) {
        return Err(HarnessError::Precondition(format!(
            "center {a} is in the set"
        )));
    }
    if !is_total_dominating(gh, t) {
        return Err(HarnessError::Precondition(
            "the set is not a total dominating set of the corona".into(),
        ));
    }
    let copy = gh.induced(layout.copy_set(a));
    Ok(is_total_dominating(&copy, layout.project_to_copy(t, a)))
}

/// Runs the applicable projection check for every minimum 2-movable TDS of
/// `G ∘ H` and every center.
pub fn check_projection(
    g: &Graph,
    h: &Graph,
    cfg: &CheckConfig,
) -> Result<InstanceVerdict, HarnessError> {
    if cfg.require_connected && !(g.is_connected() && h.is_connected()) {
        return Ok(InstanceVerdict::skipped(&[g, h], "operand not connected"));
    }
    let (gh, layout) = g.corona(h)?;
    if gh.order() > MAX_ALL_MINIMUM_ORDER {
        return Err(HarnessError::Precondition(format!(
            "corona order {} exceeds {MAX_ALL_MINIMUM_ORDER}",
            gh.order()
        )));
    }
    let eq = cfg.allow_equal_replacements;
    let sets = all_minimum_sets(&gh, InvariantKind::GammaMt2, eq)?;
    if sets.is_empty() {
        return Ok(InstanceVerdict::skipped(
            &[g, h],
            "no 2-movable total dominating set",
        ));
    }
    let mut v = InstanceVerdict::new(&[g, h]);
    v.got = Some(sets[0].len());
    let mut checks = 0usize;
    for &t in &sets {
        for a in layout.centers() {
            checks += 1;
            let ok = if t.contains(a) {
                let pv = check_lemma_projection_in(&gh, &layout, t, a, eq)?;
                if !pv.holds() {
                    let bad: Vec<_> = pv
                        .members
                        .iter()
                        .filter(|(_, b)| b.is_none())
                        .map(|(u, _)| *u)
                        .collect();
                    v.detail = format!("set {t}, center {a} in set: no branch for members {bad:?}");
                }
                pv.holds()
            } else {
                let ok = check_lemma_projection_out(&gh, &layout, t, a)?;
                if !ok {
                    v.detail = format!(
                        "set {t}, center {a} outside: restriction is not a TDS of the copy"
                    );
                }
                ok
            };
            if !ok {
                v.outcome = Outcome::Fail;
                v.certificate = Some(Certificate::new(&gh, InvariantKind::GammaMt2, Some(t), eq)?);
                return Ok(v);
            }
        }
    }
    v.detail = format!("{} minimum sets, {checks} center checks", sets.len());
    Ok(v)
}
