//! Generalized R-vertex corona `R(G) ⊡ ∧ Hᵢ`.
//!
//! With vertices ordered `[V(G); I(G); V(H₁); …; V(Hₙ)]` the Laplacian is
//!
//! ```text
//! [[ P + L_G,  −B,    −Q ],
//!  [ −Bᵀ,      2Iₘ,    0 ],
//!  [ −Qᵀ,      0,      T ]]
//! ```
//!
//! with `P = diag(dᵢ + tᵢ)`, `Q` the crown indicator and
//! `T = ⊕ (L_{Hᵢ} + I)`. Eliminating the `[I(G); crowns]` block gives the
//! Schur complement `(3/2) L_G`, and with `Q T⁻¹ = Q` the {1}-inverse is
//!
//! ```text
//! [[ (2/3)L♯,      (1/3)L♯B,              (2/3)L♯Q          ],
//!  [ (1/3)BᵀL♯,    (1/2)I + (1/6)BᵀL♯B,   (1/3)BᵀL♯Q        ],
//!  [ (2/3)QᵀL♯,    (1/3)QᵀL♯B,            T⁻¹ + (2/3)QᵀL♯Q  ]]
//! ```

use crate::corona::{r_vertex_corona, CoronaResult, Role};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::{block_one_inverse, DenseSymMatrix, Matrix, SYMMETRY_TOL};
use crate::resistance::kirchhoff_from_one_inverse;

use super::{
    term, BaseFactors, Coefficients, CrownFactors, KirchhoffExpansion, KirchhoffReport,
    RGraphVertex, ResistanceCase, IDENTITY_TOL,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RVertexIdentities {
    /// `max |H − (3/2) L_G|` for the numerically formed Schur complement.
    pub schur_deviation: f64,
    /// `|1ᵀ T⁻¹ 1 − Σ tᵢ|`.
    pub crown_sum_deviation: f64,
    /// `|tr(T⁻¹) − Σᵢ Σⱼ 1/(μⱼ(Hᵢ) + 1)|`.
    pub spectral_trace_deviation: f64,
}

#[derive(Debug, Clone)]
pub struct RVertexClosedForm {
    base: BaseFactors,
    crowns: CrownFactors,
    coefficients: Coefficients,
    indicator: Matrix,
    corona: CoronaResult,
    roles: Vec<Role>,
    identities: RVertexIdentities,
}

impl RVertexClosedForm {
    pub fn new(g: &Graph, crowns: &[Graph]) -> Result<Self> {
        Self::with_coefficients(g, crowns, Coefficients::DERIVED)
    }

    pub fn with_coefficients(
        g: &Graph,
        crowns: &[Graph],
        coefficients: Coefficients,
    ) -> Result<Self> {
        let corona = r_vertex_corona(g, crowns)?;
        let base = BaseFactors::new(g)?;
        let crown_factors = CrownFactors::new(crowns)?;
        let indicator = crown_factors.indicator(g.n());
        let roles = corona
            .partition
            .roles(corona.graph.n())
            .expect("builder output is a partition");

        // H = (P + L_G) − ½ B Bᵀ − Q T⁻¹ Qᵀ
        let t_inv = DenseSymMatrix::block_diagonal(&crown_factors.shifted_inverses);
        let p: Vec<f64> = base
            .degrees
            .iter()
            .zip(crown_factors.sizes())
            .map(|(d, t)| d + t as f64)
            .collect();
        let b = &base.incidence;
        let schur = Matrix::from_diagonal(&p)
            .add(g.laplacian().as_matrix())?
            .sub(&b.matmul(&b.transpose())?.scale(0.5))?
            .sub(
                &indicator
                    .matmul(t_inv.as_matrix())?
                    .matmul(&indicator.transpose())?,
            )?;
        let schur_deviation = base.schur_deviation(&schur)?;
        if schur_deviation > IDENTITY_TOL {
            return Err(Error::IdentityViolated {
                name: "H = (3/2) L_G",
                deviation: schur_deviation,
            });
        }
        let identities = RVertexIdentities {
            schur_deviation,
            crown_sum_deviation: (crown_factors.direct_inverse_sum()
                - crown_factors.total() as f64)
                .abs(),
            spectral_trace_deviation: (crown_factors.direct_inverse_trace()
                - crown_factors.spectral_trace())
            .abs(),
        };

        Ok(Self {
            base,
            crowns: crown_factors,
            coefficients,
            indicator,
            corona,
            roles,
            identities,
        })
    }

    pub fn corona(&self) -> &CoronaResult {
        &self.corona
    }

    pub fn base(&self) -> &BaseFactors {
        &self.base
    }

    pub fn crowns(&self) -> &CrownFactors {
        &self.crowns
    }

    pub fn coefficients(&self) -> &Coefficients {
        &self.coefficients
    }

    pub fn identities(&self) -> &RVertexIdentities {
        &self.identities
    }

    pub fn laplacian(&self) -> DenseSymMatrix {
        self.corona.graph.laplacian()
    }

    pub fn order(&self) -> usize {
        self.corona.graph.n()
    }

    /// The structured symmetric {1}-inverse of the corona Laplacian.
    pub fn one_inverse(&self) -> Result<DenseSymMatrix> {
        let c = &self.coefficients;
        let (top_left, top_mid, mid) = self.base.leading_blocks(c)?;
        let lq = self.base.lsharp.as_matrix().matmul(&self.indicator)?;
        let top_right = lq.scale(c.original_crown);
        let mid_right = self
            .base
            .lsharp_incidence
            .transpose()
            .matmul(&self.indicator)?
            .scale(c.edge_crown);
        let t_inv = DenseSymMatrix::block_diagonal(&self.crowns.shifted_inverses);
        let bottom = t_inv
            .as_matrix()
            .add(&self.indicator.transpose().matmul(&lq)?.scale(c.crown_block))?;

        let (tm_t, tr_t, mr_t) = (
            top_mid.transpose(),
            top_right.transpose(),
            mid_right.transpose(),
        );
        let x = Matrix::from_blocks(&[
            vec![&top_left, &top_mid, &top_right],
            vec![&tm_t, &mid, &mid_right],
            vec![&tr_t, &mr_t, &bottom],
        ])?;
        DenseSymMatrix::symmetrize(x, SYMMETRY_TOL)
    }

    /// The generic block {1}-inverse of the corona Laplacian split as
    /// `[V(G) | rest]`; an independent route to [`Self::one_inverse`].
    pub fn generic_one_inverse(&self) -> Result<DenseSymMatrix> {
        let l = self.laplacian();
        let (n, total) = (self.base.n(), self.order());
        let a = l.principal(0, n);
        let b = l.as_matrix().submatrix(0, n, n, total - n);
        let d = l.principal(n, total - n);
        Ok(block_one_inverse(&a, &b, &d)?.inverse)
    }

    fn role(&self, v: usize) -> Result<Role> {
        self.roles.get(v).copied().ok_or(Error::VertexOutOfRange {
            vertex: v,
            order: self.order(),
        })
    }

    pub fn case(&self, u: usize, v: usize) -> Result<ResistanceCase> {
        Ok(self.resistance_with_case(u, v)?.1)
    }

    pub fn resistance(&self, u: usize, v: usize) -> Result<f64> {
        Ok(self.resistance_with_case(u, v)?.0)
    }

    pub fn resistance_with_case(&self, u: usize, v: usize) -> Result<(f64, ResistanceCase)> {
        let (ru, rv) = (self.role(u)?, self.role(v)?);
        if u == v {
            return Ok((0.0, ResistanceCase::Identical));
        }
        let c = &self.coefficients;
        let as_rgraph = |r: Role| match r {
            Role::Original(i) => Some(RGraphVertex::Original(i)),
            Role::EdgeVertex(e) => Some(RGraphVertex::Edge(e)),
            _ => None,
        };
        let crown_of = |r: Role| match r {
            Role::Crown { crown, local } => Some((crown, local)),
            _ => None,
        };
        let anchor = RGraphVertex::Original;

        let out = match (as_rgraph(ru), as_rgraph(rv)) {
            (Some(x), Some(y)) => {
                let case = match (x, y) {
                    (RGraphVertex::Original(_), RGraphVertex::Original(_)) => {
                        ResistanceCase::OriginalPair
                    }
                    _ => ResistanceCase::RGraphPair,
                };
                (self.base.rgraph_resistance(c, x, y), case)
            }
            (Some(x), None) | (None, Some(x)) => {
                let (k, a) = crown_of(if as_rgraph(ru).is_some() { rv } else { ru }).unwrap();
                let r = self.base.rgraph_resistance(c, x, anchor(k))
                    + self.crowns.apex_resistances[k][a];
                (r, ResistanceCase::AnchorCrown)
            }
            (None, None) => {
                let (k, a) = crown_of(ru).unwrap();
                let (l, b) = crown_of(rv).unwrap();
                if k == l {
                    let r = CrownFactors::four_entry(&self.crowns.shifted_inverses[k], a, b);
                    (r, ResistanceCase::SameCrown)
                } else {
                    let r = self.base.rgraph_resistance(c, anchor(k), anchor(l))
                        + self.crowns.apex_resistances[k][a]
                        + self.crowns.apex_resistances[l][b];
                    (r, ResistanceCase::CrossCrown)
                }
            }
        };
        Ok(out)
    }

    /// Term-by-term Kirchhoff expression over base-graph and crown quantities.
    pub fn expansion(&self) -> KirchhoffExpansion {
        let c = &self.coefficients;
        let b = &self.base;
        let (n, m) = (b.n() as f64, b.m() as f64);
        let delta: Vec<f64> = self.crowns.sizes().into_iter().map(|t| t as f64).collect();
        let total: f64 = delta.iter().sum();
        let anchor_trace: f64 = delta
            .iter()
            .enumerate()
            .map(|(k, t)| t * b.lsharp[(k, k)])
            .sum();
        KirchhoffExpansion {
            prefactor: n + m + total,
            trace_terms: vec![
                term("base_kirchhoff", c.original * b.kirchhoff / n),
                term("edge_identity", c.edge_identity * m),
                term("degree_trace", 2.0 * c.edge_block * b.degree_trace()),
                term("rank_constant", -c.edge_block * (n - 1.0)),
                term("crown_spectral", self.crowns.spectral_trace()),
                term("crown_anchor", c.crown_block * anchor_trace),
            ],
            ones_terms: vec![
                term("edge_identity", c.edge_identity * m),
                term(
                    "degree_quadratic",
                    c.edge_block * b.lsharp_form(&b.degrees, &b.degrees),
                ),
                term(
                    "degree_crown_cross",
                    2.0 * c.edge_crown * b.lsharp_form(&b.degrees, &delta),
                ),
                term("crown_inverse_sum", total),
                term(
                    "crown_quadratic",
                    c.crown_block * b.lsharp_form(&delta, &delta),
                ),
            ],
        }
    }

    pub fn kirchhoff(&self) -> Result<KirchhoffReport> {
        let value = kirchhoff_from_one_inverse(&self.one_inverse()?);
        let expansion = self.expansion();
        let expansion_deviation = (expansion.value() - value).abs();
        Ok(KirchhoffReport {
            value,
            expansion,
            expansion_deviation,
        })
    }
}

pub fn rv_one_inverse(g: &Graph, crowns: &[Graph]) -> Result<DenseSymMatrix> {
    RVertexClosedForm::new(g, crowns)?.one_inverse()
}

pub fn rv_resistance(g: &Graph, crowns: &[Graph], u: usize, v: usize) -> Result<f64> {
    RVertexClosedForm::new(g, crowns)?.resistance(u, v)
}

pub fn rv_kirchhoff(g: &Graph, crowns: &[Graph]) -> Result<KirchhoffReport> {
    RVertexClosedForm::new(g, crowns)?.kirchhoff()
}
