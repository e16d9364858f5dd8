//! Brute-force resistance distances from the Laplacian group inverse, and
//! executable checks of the classical resistance identities.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::{pseudo_group_inverse, DenseSymMatrix, Matrix};

/// Symmetric, nonnegative, zero-diagonal matrix of effective resistances
/// (unit resistors).
#[derive(Debug, Clone, PartialEq)]
pub struct ResistanceMatrix(DenseSymMatrix);

impl ResistanceMatrix {
    /// `r_uv = X_uu + X_vv − X_uv − X_vu` for any {1}-inverse `X` of a
    /// connected Laplacian.
    pub fn from_one_inverse(x: &DenseSymMatrix) -> Self {
        let n = x.order();
        let mut r = Matrix::zeros(n, n);
        for u in 0..n {
            for v in (u + 1)..n {
                let val = x[(u, u)] + x[(v, v)] - x[(u, v)] - x[(v, u)];
                r[(u, v)] = val;
                r[(v, u)] = val;
            }
        }
        Self(DenseSymMatrix::new(r).expect("mirrored"))
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    pub fn get(&self, u: usize, v: usize) -> f64 {
        self.0[(u, v)]
    }

    pub fn as_matrix(&self) -> &DenseSymMatrix {
        &self.0
    }

    /// `Σ_{u<v} r_uv`.
    pub fn pair_sum(&self) -> f64 {
        let n = self.order();
        (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .map(|(u, v)| self.get(u, v))
            .sum()
    }

    /// Largest violation of `r_uw ≤ r_uv + r_vw` over all triples
    /// (`0.0` when the triangle inequality holds).
    pub fn triangle_violation(&self) -> f64 {
        let n = self.order();
        let mut worst = 0.0_f64;
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    worst = worst.max(self.get(u, w) - self.get(u, v) - self.get(v, w));
                }
            }
        }
        worst
    }

    /// Smallest off-diagonal entry (negative means the matrix is not a
    /// valid resistance matrix).
    pub fn min_off_diagonal(&self) -> f64 {
        let n = self.order();
        let mut min = f64::INFINITY;
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    min = min.min(self.get(u, v));
                }
            }
        }
        min
    }
}

/// Group inverse and resistances of one connected graph; computed once and
/// queried by every check below.
#[derive(Debug, Clone)]
pub struct ResistanceOracle {
    graph: Graph,
    group_inverse: DenseSymMatrix,
    resistances: ResistanceMatrix,
}

impl ResistanceOracle {
    pub fn new(g: &Graph) -> Result<Self> {
        g.require_connected()?;
        let group_inverse = pseudo_group_inverse(&g.laplacian())?;
        let resistances = ResistanceMatrix::from_one_inverse(&group_inverse);
        Ok(Self {
            graph: g.clone(),
            group_inverse,
            resistances,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn group_inverse(&self) -> &DenseSymMatrix {
        &self.group_inverse
    }

    pub fn resistances(&self) -> &ResistanceMatrix {
        &self.resistances
    }

    pub fn resistance(&self, u: usize, v: usize) -> Result<f64> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.resistances.get(u, v))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.graph.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.graph.n(),
            });
        }
        Ok(())
    }

    /// `n · tr(L♯)`.
    pub fn kirchhoff_index(&self) -> f64 {
        self.graph.n() as f64 * self.group_inverse.trace()
    }

    /// `max |(L♯ 1)_i|`.
    pub fn ones_residual(&self) -> f64 {
        self.group_inverse
            .as_matrix()
            .row_sums()
            .into_iter()
            .fold(0.0, |acc, s| acc.max(s.abs()))
    }

    /// `|Σ_{uv ∈ E} r_uv − (n − 1)|`.
    pub fn edge_sum_residual(&self) -> f64 {
        let sum: f64 = self
            .graph
            .edges()
            .iter()
            .map(|&(u, v)| self.resistances.get(u, v))
            .sum();
        (sum - (self.graph.n() as f64 - 1.0)).abs()
    }

    /// Residual of the neighbor recursion
    /// `r_ij = dᵢ⁻¹ (1 + Σ_{k∈N(i)} r_kj − dᵢ⁻¹ Σ_{k,l∈N(i)} r_kl)` under the
    /// given pair convention for the double sum.
    pub fn neighbor_recursion_residual(
        &self,
        i: usize,
        j: usize,
        convention: PairConvention,
    ) -> Result<f64> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(Error::InvalidArgument(
                "neighbor recursion needs distinct vertices".into(),
            ));
        }
        let nbrs = self.graph.neighbors(i);
        if nbrs.is_empty() {
            return Err(Error::ZeroDegree(i));
        }
        let d = nbrs.len() as f64;
        let r = &self.resistances;
        let to_j: f64 = nbrs.iter().map(|&k| r.get(k, j)).sum();
        let mut pair_sum = 0.0;
        for (a, &k) in nbrs.iter().enumerate() {
            for &l in &nbrs[a + 1..] {
                pair_sum += r.get(k, l);
            }
        }
        if convention == PairConvention::Ordered {
            pair_sum *= 2.0;
        }
        let predicted = (1.0 + to_j - pair_sum / d) / d;
        Ok((r.get(i, j) - predicted).abs())
    }

    /// `|r_ij − r_ik − r_kj|`. Zero (up to rounding) whenever `k` separates
    /// `i` from `j`; the caller is responsible for that precondition.
    pub fn cut_vertex_residual(&self, i: usize, k: usize, j: usize) -> Result<f64> {
        Ok((self.resistance(i, j)? - self.resistance(i, k)? - self.resistance(k, j)?).abs())
    }
}

/// How the double sum over neighbor pairs is read. The recursion holds with
/// `Unordered` (each pair `{k, l}` once); `Ordered` counts both `(k, l)` and
/// `(l, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairConvention {
    Ordered,
    #[default]
    Unordered,
}

pub fn resistance_matrix(g: &Graph) -> Result<ResistanceMatrix> {
    Ok(ResistanceOracle::new(g)?.resistances)
}

pub fn resistance_from_one_inverse(x: &DenseSymMatrix, u: usize, v: usize) -> Result<f64> {
    for w in [u, v] {
        if w >= x.order() {
            return Err(Error::VertexOutOfRange {
                vertex: w,
                order: x.order(),
            });
        }
    }
    Ok(x[(u, u)] + x[(v, v)] - x[(u, v)] - x[(v, u)])
}

pub fn kirchhoff_index(g: &Graph) -> Result<f64> {
    Ok(ResistanceOracle::new(g)?.kirchhoff_index())
}

/// `N · tr(X) − 1ᵀ X 1` for a symmetric {1}-inverse `X` of order `N`.
pub fn kirchhoff_from_one_inverse(x: &DenseSymMatrix) -> f64 {
    x.order() as f64 * x.trace() - x.as_matrix().sum()
}

pub fn edge_sum_check(g: &Graph) -> Result<f64> {
    Ok(ResistanceOracle::new(g)?.edge_sum_residual())
}

pub fn neighbor_recursion_check(g: &Graph, i: usize, j: usize) -> Result<f64> {
    ResistanceOracle::new(g)?.neighbor_recursion_residual(i, j, PairConvention::default())
}

pub fn cut_vertex_check(g: &Graph, i: usize, k: usize, j: usize) -> Result<f64> {
    ResistanceOracle::new(g)?.cut_vertex_residual(i, k, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corona::r_vertex_corona;
    use crate::graph::families::{complete, path, star};

    const TOL: f64 = 1e-10;

    #[test]
    fn small_resistances() {
        let r = resistance_matrix(&complete(2)).unwrap();
        assert!((r.get(0, 1) - 1.0).abs() < TOL);

        let r = resistance_matrix(&complete(3)).unwrap();
        for (u, v) in [(0, 1), (0, 2), (1, 2)] {
            assert!((r.get(u, v) - 2.0 / 3.0).abs() < TOL);
        }

        let r = resistance_matrix(&path(3)).unwrap();
        assert!((r.get(0, 1) - 1.0).abs() < TOL);
        assert!((r.get(1, 2) - 1.0).abs() < TOL);
        assert!((r.get(0, 2) - 2.0).abs() < TOL);
    }

    #[test]
    fn disconnected_is_rejected() {
        assert_eq!(
            resistance_matrix(&Graph::empty(2)).unwrap_err(),
            Error::Disconnected
        );
        assert!(kirchhoff_index(&Graph::empty(3)).is_err());
        assert!(edge_sum_check(&Graph::empty(2)).is_err());
    }

    #[test]
    fn one_inverse_route() {
        let o = ResistanceOracle::new(&complete(2)).unwrap();
        assert!((resistance_from_one_inverse(o.group_inverse(), 0, 1).unwrap() - 1.0).abs() < TOL);
        assert!(resistance_from_one_inverse(o.group_inverse(), 0, 2).is_err());

        // Adding c·J to a {1}-inverse leaves the four-entry combination unchanged.
        let g = path(4);
        let o = ResistanceOracle::new(&g).unwrap();
        let shifted = DenseSymMatrix::new(
            o.group_inverse()
                .as_matrix()
                .add(&Matrix::ones(4, 4).scale(3.7))
                .unwrap(),
        )
        .unwrap();
        for u in 0..4 {
            for v in 0..4 {
                let a = resistance_from_one_inverse(o.group_inverse(), u, v).unwrap();
                let b = resistance_from_one_inverse(&shifted, u, v).unwrap();
                assert!((a - b).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn kirchhoff_examples() {
        assert!((kirchhoff_index(&complete(2)).unwrap() - 1.0).abs() < TOL);
        assert!((kirchhoff_index(&complete(3)).unwrap() - 2.0).abs() < TOL);
        assert!((kirchhoff_index(&path(3)).unwrap() - 4.0).abs() < TOL);
        let r = resistance_matrix(&complete(3)).unwrap();
        assert!((r.pair_sum() - 2.0).abs() < TOL);
    }

    #[test]
    fn edge_sums() {
        assert!(edge_sum_check(&complete(3)).unwrap() < TOL);
        assert!(edge_sum_check(&star(5)).unwrap() < TOL);
        assert!(edge_sum_check(&path(6)).unwrap() < TOL);
    }

    #[test]
    fn neighbor_recursion_pair_convention_is_unordered() {
        assert!(neighbor_recursion_check(&complete(2), 0, 1).unwrap() < TOL);

        let p3 = ResistanceOracle::new(&path(3)).unwrap();
        let unordered = p3
            .neighbor_recursion_residual(1, 0, PairConvention::Unordered)
            .unwrap();
        let ordered = p3
            .neighbor_recursion_residual(1, 0, PairConvention::Ordered)
            .unwrap();
        assert!(unordered < 1e-8);
        // 1/2 · (1 + 2 − 4/2) = 1/2 against r = 1.
        assert!((ordered - 0.5).abs() < 1e-10);

        let k3 = ResistanceOracle::new(&complete(3)).unwrap();
        for (i, j) in [(0, 1), (1, 2), (2, 0)] {
            assert!(
                k3.neighbor_recursion_residual(i, j, PairConvention::Unordered)
                    .unwrap()
                    < 1e-8
            );
            assert!(
                k3.neighbor_recursion_residual(i, j, PairConvention::Ordered)
                    .unwrap()
                    > 1e-3
            );
        }
    }

    #[test]
    fn neighbor_recursion_errors() {
        let o = ResistanceOracle::new(&complete(2)).unwrap();
        assert!(o
            .neighbor_recursion_residual(0, 0, PairConvention::Unordered)
            .is_err());
    }

    #[test]
    fn cut_vertices() {
        assert!(cut_vertex_check(&path(3), 0, 1, 2).unwrap() < TOL);
        assert!(cut_vertex_check(&star(3), 1, 0, 2).unwrap() < TOL);

        let k1 = complete(1);
        let c = r_vertex_corona(&complete(2), &[k1.clone(), k1]).unwrap();
        // crown vertex 3 hangs off original 0; vertex 1 lies on the other side.
        assert!(cut_vertex_check(&c.graph, 3, 0, 1).unwrap() < 1e-8);
    }
}
