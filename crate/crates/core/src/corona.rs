//! Constructions: `R(G)`, the generalized R-vertex and R-edge coronae, and
//! the apex join `H ∨ {v}`, each with a vertex-role map.
//!
//! Vertex ids of every corona follow `[V(G); I(G); V(H₁); …; V(Hₖ)]`, with
//! `I(G)` (one vertex per edge of `G`) in canonical edge order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoronaKind {
    RGraph,
    RVertexCorona,
    REdgeCorona,
    ApexJoin,
}

/// What a vertex of a constructed graph is the image of.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    /// Vertex `i` of `G` (or of `H`, for an apex join).
    Original(usize),
    /// The vertex added for edge `e` of `G`.
    EdgeVertex(usize),
    /// Vertex `local` of crown `crown`.
    Crown {
        crown: usize,
        local: usize,
    },
    Apex,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct VertexPartition {
    pub original: Vec<usize>,
    pub edge_vertices: Vec<usize>,
    pub crowns: Vec<Vec<usize>>,
    pub apex: Option<usize>,
}

impl VertexPartition {
    pub fn len(&self) -> usize {
        self.original.len()
            + self.edge_vertices.len()
            + self.crowns.iter().map(Vec::len).sum::<usize>()
            + usize::from(self.apex.is_some())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn crown_sizes(&self) -> Vec<usize> {
        self.crowns.iter().map(Vec::len).collect()
    }

    /// Roles indexed by vertex id, or `None` if the lists are not a
    /// partition of `0..n_total`.
    pub fn roles(&self, n_total: usize) -> Option<Vec<Role>> {
        let mut roles = vec![None; n_total];
        let mut place = |v: usize, r: Role| -> bool {
            match roles.get_mut(v) {
                Some(slot @ None) => {
                    *slot = Some(r);
                    true
                }
                _ => false,
            }
        };
        for (i, &v) in self.original.iter().enumerate() {
            if !place(v, Role::Original(i)) {
                return None;
            }
        }
        for (e, &v) in self.edge_vertices.iter().enumerate() {
            if !place(v, Role::EdgeVertex(e)) {
                return None;
            }
        }
        for (k, crown) in self.crowns.iter().enumerate() {
            for (local, &v) in crown.iter().enumerate() {
                if !place(v, Role::Crown { crown: k, local }) {
                    return None;
                }
            }
        }
        if let Some(a) = self.apex {
            if !place(a, Role::Apex) {
                return None;
            }
        }
        roles.into_iter().collect()
    }

    pub fn role(&self, v: usize) -> Option<Role> {
        if let Some(i) = self.original.iter().position(|&x| x == v) {
            return Some(Role::Original(i));
        }
        if let Some(e) = self.edge_vertices.iter().position(|&x| x == v) {
            return Some(Role::EdgeVertex(e));
        }
        for (k, crown) in self.crowns.iter().enumerate() {
            if let Some(local) = crown.iter().position(|&x| x == v) {
                return Some(Role::Crown { crown: k, local });
            }
        }
        (self.apex == Some(v)).then_some(Role::Apex)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoronaResult {
    pub graph: Graph,
    pub partition: VertexPartition,
    pub kind: CoronaKind,
}

impl CoronaResult {
    /// The vertex crown `k` hangs off: original vertex `k` in an R-vertex
    /// corona, edge-vertex `k` in an R-edge corona.
    pub fn anchor(&self, k: usize) -> Option<usize> {
        match self.kind {
            CoronaKind::RVertexCorona => self.partition.original.get(k).copied(),
            CoronaKind::REdgeCorona => self.partition.edge_vertices.get(k).copied(),
            _ => None,
        }
    }

    pub fn is_consistent(&self) -> bool {
        self.partition.roles(self.graph.n()).is_some()
    }
}

fn r_graph_edges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut edges = g.edges().to_vec();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        edges.push((u, n + e));
        edges.push((v, n + e));
    }
    edges
}

/// `R(G)`: one new vertex per edge, adjacent to both endpoints.
pub fn r_graph(g: &Graph) -> CoronaResult {
    let (n, m) = (g.n(), g.m());
    CoronaResult {
        graph: Graph::new(n + m, r_graph_edges(g)).expect("R(G) is simple"),
        partition: VertexPartition {
            original: (0..n).collect(),
            edge_vertices: (n..n + m).collect(),
            crowns: Vec::new(),
            apex: None,
        },
        kind: CoronaKind::RGraph,
    }
}

fn attach_crowns(
    g: &Graph,
    crowns: &[Graph],
    anchor_of: impl Fn(usize) -> usize,
    kind: CoronaKind,
) -> CoronaResult {
    let (n, m) = (g.n(), g.m());
    let mut edges = r_graph_edges(g);
    let mut crown_ids = Vec::with_capacity(crowns.len());
    let mut offset = n + m;
    for (k, h) in crowns.iter().enumerate() {
        let anchor = anchor_of(k);
        let ids: Vec<usize> = (offset..offset + h.n()).collect();
        edges.extend(ids.iter().map(|&w| (anchor, w)));
        edges.extend(h.edges().iter().map(|&(a, b)| (offset + a, offset + b)));
        crown_ids.push(ids);
        offset += h.n();
    }
    CoronaResult {
        graph: Graph::new(offset, edges).expect("corona is simple"),
        partition: VertexPartition {
            original: (0..n).collect(),
            edge_vertices: (n..n + m).collect(),
            crowns: crown_ids,
            apex: None,
        },
        kind,
    }
}

/// Generalized R-vertex corona: `R(G)` with original vertex `i` joined to
/// every vertex of `crowns[i]`. Requires `crowns.len() == g.n()`.
pub fn r_vertex_corona(g: &Graph, crowns: &[Graph]) -> Result<CoronaResult> {
    if crowns.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            found: crowns.len(),
        });
    }
    Ok(attach_crowns(g, crowns, |k| k, CoronaKind::RVertexCorona))
}

/// Generalized R-edge corona: `R(G)` with edge-vertex `e` joined to every
/// vertex of `crowns[e]`. Requires `crowns.len() == g.m()`.
pub fn r_edge_corona(g: &Graph, crowns: &[Graph]) -> Result<CoronaResult> {
    if crowns.len() != g.m() {
        return Err(Error::LengthMismatch {
            expected: g.m(),
            found: crowns.len(),
        });
    }
    let n = g.n();
    Ok(attach_crowns(g, crowns, |k| n + k, CoronaKind::REdgeCorona))
}

/// `H ∨ {v}`: the apex gets id `h.n()`.
pub fn apex_join(h: &Graph) -> CoronaResult {
    let t = h.n();
    let edges = h.edges().iter().copied().chain((0..t).map(|w| (w, t)));
    CoronaResult {
        graph: Graph::new(t + 1, edges).expect("apex join is simple"),
        partition: VertexPartition {
            original: (0..t).collect(),
            apex: Some(t),
            ..Default::default()
        },
        kind: CoronaKind::ApexJoin,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{complete, path};

    #[test]
    fn r_graph_examples() {
        assert_eq!(r_graph(&complete(2)).graph, complete(3));
        let rp3 = r_graph(&path(3));
        assert_eq!((rp3.graph.n(), rp3.graph.m()), (5, 6));
        assert_eq!(r_graph(&Graph::empty(3)).graph, Graph::empty(3));
    }

    #[test]
    fn r_vertex_examples() {
        let k1 = complete(1);
        let c = r_vertex_corona(&complete(2), &[k1.clone(), k1]).unwrap();
        assert_eq!((c.graph.n(), c.graph.m()), (5, 5));
        assert!(c.is_consistent());

        let c = r_vertex_corona(&complete(2), &[complete(2), Graph::empty(0)]).unwrap();
        assert_eq!(c.graph.n(), 5);
        assert!(c.graph.has_edge(0, 3) && c.graph.has_edge(0, 4));
        assert!(c.graph.has_edge(3, 4));
        assert_eq!(c.partition.crowns, vec![vec![3, 4], vec![]]);
    }

    #[test]
    fn r_vertex_degree_of_original_is_two_d_plus_t() {
        let g = path(4);
        let crowns = [complete(2), Graph::empty(0), complete(1), path(3)];
        let c = r_vertex_corona(&g, &crowns).unwrap();
        let dg = g.degrees();
        let dc = c.graph.degrees();
        for i in 0..g.n() {
            assert_eq!(dc[i], 2 * dg[i] + crowns[i].n());
        }
    }

    #[test]
    fn r_edge_examples() {
        let c = r_edge_corona(&complete(2), &[complete(1)]).unwrap();
        assert_eq!((c.graph.n(), c.graph.m()), (4, 4));
        assert!(c.graph.has_edge(2, 3));
        assert_eq!(c.anchor(0), Some(2));

        let c = r_edge_corona(&path(3), &[complete(2), complete(2)]).unwrap();
        assert_eq!((c.graph.n(), c.graph.m()), (9, 12));
        let d = c.graph.degrees();
        for e in 0..2 {
            assert_eq!(d[3 + e], 2 + 2);
        }
    }

    #[test]
    fn length_mismatch() {
        assert_eq!(
            r_vertex_corona(&complete(2), &[complete(1)]).unwrap_err(),
            Error::LengthMismatch {
                expected: 2,
                found: 1
            }
        );
        assert!(r_edge_corona(&path(3), &[complete(1)]).is_err());
    }

    #[test]
    fn apex_join_examples() {
        assert_eq!(apex_join(&complete(1)).graph, complete(2));
        let s = apex_join(&Graph::empty(2));
        assert_eq!(s.graph, Graph::new(3, [(0, 2), (1, 2)]).unwrap());
        assert_eq!(s.partition.apex, Some(2));
        assert_eq!(apex_join(&complete(2)).graph, complete(3));
    }

    #[test]
    fn roles_follow_fixed_order() {
        let c = r_vertex_corona(&path(3), &[complete(1), Graph::empty(0), complete(2)]).unwrap();
        let roles = c.partition.roles(c.graph.n()).unwrap();
        assert_eq!(roles[0], Role::Original(0));
        assert_eq!(roles[3], Role::EdgeVertex(0));
        assert_eq!(roles[5], Role::Crown { crown: 0, local: 0 });
        assert_eq!(roles[7], Role::Crown { crown: 2, local: 1 });
        assert_eq!(
            c.partition.role(7),
            Some(Role::Crown { crown: 2, local: 1 })
        );
    }
}
