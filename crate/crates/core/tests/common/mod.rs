//! Definition-literal reference implementations over dense adjacency
//! matrices and boolean membership vectors. Nothing here touches the
//! library's bitset kernels or subset enumeration.

#![allow(dead_code)]

use movdom::{Graph, InvariantKind, VertexSet};

pub struct Dense {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl Dense {
    pub fn from_graph(g: &Graph) -> Dense {
        let n = g.order();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Dense { n, adj }
    }

    /// Every vertex outside `s` has a neighbor in `s`.
    pub fn dominating(&self, s: &[bool]) -> bool {
        (0..self.n).all(|v| s[v] || (0..self.n).any(|u| s[u] && self.adj[u][v]))
    }

    /// Every vertex has a neighbor in `s`.
    pub fn total(&self, s: &[bool]) -> bool {
        (0..self.n).all(|v| (0..self.n).any(|u| s[u] && self.adj[u][v]))
    }

    pub fn base(&self, s: &[bool], total: bool) -> bool {
        if total {
            self.total(s)
        } else {
            self.dominating(s)
        }
    }

    /// The movability clause for one pair, by exhausting all (u, v).
    pub fn pair_ok(&self, s: &[bool], x: usize, y: usize, total: bool, allow_equal: bool) -> bool {
        let mut rest = s.to_vec();
        rest[x] = false;
        rest[y] = false;
        if self.base(&rest, total) {
            return true;
        }
        for u in 0..self.n {
            for v in 0..self.n {
                if s[u] || s[v] || !self.adj[x][u] || !self.adj[y][v] || (u == v && !allow_equal) {
                    continue;
                }
                let mut t = rest.clone();
                t[u] = true;
                t[v] = true;
                if self.base(&t, total) {
                    return true;
                }
            }
        }
        false
    }

    pub fn movable(&self, s: &[bool], total: bool, allow_equal: bool) -> bool {
        if !s.iter().any(|&b| b) || !self.base(s, total) {
            return false;
        }
        for x in 0..self.n {
            for y in x + 1..self.n {
                if s[x] && s[y] && !self.pair_ok(s, x, y, total, allow_equal) {
                    return false;
                }
            }
        }
        true
    }

    pub fn accepts(&self, s: &[bool], kind: InvariantKind, allow_equal: bool) -> bool {
        if !s.iter().any(|&b| b) {
            return false;
        }
        match kind {
            InvariantKind::Gamma => self.dominating(s),
            InvariantKind::GammaT => self.total(s),
            InvariantKind::GammaM2 => self.movable(s, false, allow_equal),
            InvariantKind::GammaMt2 => self.movable(s, true, allow_equal),
        }
    }

    /// Minimum size and the lexicographically least member list of that
    /// size, by listing every subset.
    pub fn minimum(&self, kind: InvariantKind, allow_equal: bool) -> Option<Vec<usize>> {
        let mut best: Option<Vec<usize>> = None;
        let mut s = vec![false; self.n];
        loop {
            if self.accepts(&s, kind, allow_equal) {
                let members: Vec<usize> = (0..self.n).filter(|&i| s[i]).collect();
                let better = match &best {
                    None => true,
                    Some(b) => (members.len(), &members) < (b.len(), b),
                };
                if better {
                    best = Some(members);
                }
            }
            // binary increment over the membership vector
            let mut i = 0;
            while i < self.n && s[i] {
                s[i] = false;
                i += 1;
            }
            if i == self.n {
                return best;
            }
            s[i] = true;
        }
    }
}

pub fn members(n: usize, vs: &[usize]) -> Vec<bool> {
    let mut s = vec![false; n];
    for &v in vs {
        s[v] = true;
    }
    s
}

pub fn to_bools(n: usize, s: VertexSet) -> Vec<bool> {
    (0..n).map(|v| s.contains(v)).collect()
}

/// Graph6 decoding the long way: every data byte expanded to six explicit
/// bits, then a dense matrix filled column by column.
#[allow(clippy::needless_range_loop)]
pub fn naive_graph6(text: &str) -> Option<Vec<Vec<bool>>> {
    let bytes = text.trim().as_bytes();
    let n = (*bytes.first()? as usize).checked_sub(63)?;
    if n > 62 {
        return None;
    }
    let mut bits = Vec::new();
    for &b in &bytes[1..] {
        let val = (b as usize).checked_sub(63)?;
        if val > 63 {
            return None;
        }
        for shift in [5, 4, 3, 2, 1, 0] {
            bits.push((val >> shift) & 1 == 1);
        }
    }
    let mut adj = vec![vec![false; n]; n];
    let mut k = 0;
    for j in 0..n {
        for i in 0..j {
            let bit = *bits.get(k)?;
            adj[i][j] = bit;
            adj[j][i] = bit;
            k += 1;
        }
    }
    Some(adj)
}
