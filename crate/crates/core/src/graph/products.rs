use super::{Graph, GraphError, VertexId, VertexSet};

/// Vertex numbering of a corona `G ∘ H`.
///
/// Vertex `i` of `G` keeps id `i`; vertex `j` of the copy attached to
/// center `i` gets id `g_order + i * h_order + j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoronaLayout {
    pub g_order: usize,
    pub h_order: usize,
}

impl CoronaLayout {
    pub fn total_order(&self) -> usize {
        self.g_order * (1 + self.h_order)
    }

    /// The vertices of `G` inside the corona.
    pub fn centers(&self) -> VertexSet {
        VertexSet::full(self.g_order)
    }

    #[inline]
    pub fn copy_vertex(&self, center: VertexId, j: VertexId) -> VertexId {
        debug_assert!(center < self.g_order && j < self.h_order);
        self.g_order + center * self.h_order + j
    }

    /// Vertex set of the copy attached to `center`.
    pub fn copy_set(&self, center: VertexId) -> VertexSet {
        let start = self.copy_vertex(center, 0);
        VertexSet::from_bits(VertexSet::full(self.h_order).bits() << start)
    }

    /// `(center, j)` when `id` is vertex `j` of the copy at `center`;
    /// `None` for centers and out-of-range ids.
    pub fn copy_of(&self, id: VertexId) -> Option<(VertexId, VertexId)> {
        if id < self.g_order || id >= self.total_order() {
            return None;
        }
        let offset = id - self.g_order;
        Some((offset / self.h_order, offset % self.h_order))
    }

    /// The center owning `id`: itself for a center, the attachment point
    /// for a copy vertex.
    pub fn center_of(&self, id: VertexId) -> Option<VertexId> {
        if id < self.g_order {
            Some(id)
        } else {
            self.copy_of(id).map(|(c, _)| c)
        }
    }

    /// Relabels the part of `set` that lies in the copy at `center` into
    /// `0..h_order`.
    pub fn project_to_copy(&self, set: VertexSet, center: VertexId) -> VertexSet {
        let start = self.copy_vertex(center, 0);
        VertexSet::from_bits((set & self.copy_set(center)).bits() >> start)
    }

    /// Inverse of [`CoronaLayout::project_to_copy`].
    pub fn lift_from_copy(&self, local: VertexSet, center: VertexId) -> VertexSet {
        VertexSet::from_bits(local.bits() << self.copy_vertex(center, 0))
    }
}

fn require_nonempty(g: &Graph, name: &'static str) -> Result<(), GraphError> {
    if g.order() == 0 {
        return Err(GraphError::OrderTooSmall {
            family: name,
            min: 1,
            order: 0,
        });
    }
    Ok(())
}

impl Graph {
    /// The join `G + H`: disjoint union with every cross edge added. Vertex
    /// `i` of `H` becomes `g.order() + i`.
    pub fn join(&self, h: &Graph) -> Result<Graph, GraphError> {
        require_nonempty(self, "join operand")?;
        require_nonempty(h, "join operand")?;
        let (gp, hp) = (self.order(), h.order());
        let mut out = Graph::empty(gp + hp)?;
        let g_side = VertexSet::full(gp);
        let h_side = VertexSet::full(gp + hp) - g_side;
        for v in 0..gp {
            out.rows[v] = self.rows[v] | h_side;
        }
        for v in 0..hp {
            let shifted = VertexSet::from_bits(h.rows[v].bits() << gp);
            out.rows[gp + v] = shifted | g_side;
        }
        Ok(out)
    }

    /// The corona `G ∘ H`: one copy of `H` per vertex `a` of `G`, with `a`
    /// adjacent to every vertex of its copy.
    pub fn corona(&self, h: &Graph) -> Result<(Graph, CoronaLayout), GraphError> {
        require_nonempty(self, "corona operand")?;
        require_nonempty(h, "corona operand")?;
        let layout = CoronaLayout {
            g_order: self.order(),
            h_order: h.order(),
        };
        let mut out = Graph::empty(layout.total_order())?;
        for a in 0..layout.g_order {
            let copy = layout.copy_set(a);
            out.rows[a] = self.rows[a] | copy;
            for j in 0..layout.h_order {
                let id = layout.copy_vertex(a, j);
                out.rows[id] = layout.lift_from_copy(h.rows[j], a).with(a);
            }
        }
        Ok((out, layout))
    }
}
