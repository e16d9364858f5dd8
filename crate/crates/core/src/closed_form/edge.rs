//! Generalized R-edge corona `R(G) ⊖ ∧ Hᵢ`.
//!
//! With vertices ordered `[V(G); I(G); V(H₁); …; V(Hₘ)]` the Laplacian is
//!
//! ```text
//! [[ L_G + D_G,  −B,    0   ],
//!  [ −Bᵀ,        P,    −M   ],
//!  [ 0,          −Mᵀ,   Q   ]]
//! ```
//!
//! with `P = diag(2 + tₑ)`, `M` the crown indicator over edges and
//! `Q = ⊕ (L_{Hₑ} + I)`. The trailing block `D = [[P, −M], [−Mᵀ, Q]]` has
//!
//! ```text
//! D⁻¹ = [[ ½ Iₘ,  F   ],      F   = +½ M,
//!        [ Fᵀ,    S⁻¹ ]]      S⁻¹ = ⊕ (L_{Hₑ} + I − J/(2 + tₑ))⁻¹
//!                                 = ⊕ ((L_{Hₑ} + I)⁻¹ + ½ J),
//! ```
//!
//! so the Schur complement is again `(3/2) L_G` and the {1}-inverse is
//!
//! ```text
//! [[ (2/3)L♯,       (1/3)L♯B,              (2/3)L♯BF            ],
//!  [ (1/3)BᵀL♯,     ½I + (1/6)BᵀL♯B,       F + (1/3)BᵀL♯BF      ],
//!  [ (2/3)FᵀBᵀL♯,   Fᵀ + (1/3)FᵀBᵀL♯B,     S⁻¹ + (2/3)FᵀBᵀL♯BF  ]]
//! ```

use crate::corona::{r_edge_corona, CoronaResult, Role};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::{
    block_one_inverse, shifted_rank_one_inverse, sym_inverse, DenseSymMatrix, Matrix, SYMMETRY_TOL,
};
use crate::resistance::kirchhoff_from_one_inverse;

use super::{
    term, BaseFactors, Coefficients, CrownFactors, KirchhoffExpansion, KirchhoffReport,
    RGraphVertex, ResistanceCase, IDENTITY_TOL,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct REdgeIdentities {
    /// `max |(P − M Q⁻¹ Mᵀ) − 2Iₘ|`.
    pub edge_schur_deviation: f64,
    /// `max |H − (3/2) L_G|`.
    pub schur_deviation: f64,
    /// `max |D⁻¹ − [[½I, F], [Fᵀ, S⁻¹]]|` against a direct inverse of `D`,
    /// with `F` taken from the active coefficients.
    pub d_inverse_deviation: f64,
    /// `|1ᵀ S⁻¹ 1 − ½ Σ tₑ(2 + tₑ)|`.
    pub crown_sum_deviation: f64,
    /// `|tr(S⁻¹) − (Σₑ Σⱼ 1/(μⱼ(Hₑ) + 1) + ½ Σ tₑ)|`.
    pub s_trace_deviation: f64,
    /// `|tr(S⁻¹) − Σₑ Σⱼ 1/(μⱼ(Hₑ) + 1)|`: nonzero whenever a crown is
    /// nonempty, because the rank-one term moves the eigenvalue on `1`.
    pub s_spectrum_gap: f64,
}

#[derive(Debug, Clone)]
pub struct REdgeClosedForm {
    base: BaseFactors,
    crowns: CrownFactors,
    coefficients: Coefficients,
    /// `M` (`m x Σtₑ`).
    indicator: Matrix,
    /// `(L_{Hₑ} + I − J/(2 + tₑ))⁻¹` per crown.
    s_inverses: Vec<DenseSymMatrix>,
    corona: CoronaResult,
    roles: Vec<Role>,
    identities: REdgeIdentities,
}

impl REdgeClosedForm {
    pub fn new(g: &Graph, crowns: &[Graph]) -> Result<Self> {
        Self::with_coefficients(g, crowns, Coefficients::DERIVED)
    }

    pub fn with_coefficients(
        g: &Graph,
        crowns: &[Graph],
        coefficients: Coefficients,
    ) -> Result<Self> {
        let corona = r_edge_corona(g, crowns)?;
        let base = BaseFactors::new(g)?;
        let crown_factors = CrownFactors::new(crowns)?;
        let m = g.m();
        let indicator = crown_factors.indicator(m);
        let roles = corona
            .partition
            .roles(corona.graph.n())
            .expect("builder output is a partition");

        let s_inverses = crowns
            .iter()
            .map(|h| shifted_rank_one_inverse(&h.laplacian(), 1.0, 2.0 + h.n() as f64))
            .collect::<Result<Vec<_>>>()?;

        let sizes = crown_factors.sizes();
        let p: Vec<f64> = sizes.iter().map(|&t| 2.0 + t as f64).collect();
        let q_inv = DenseSymMatrix::block_diagonal(&crown_factors.shifted_inverses);
        let edge_schur = Matrix::from_diagonal(&p).sub(
            &indicator
                .matmul(q_inv.as_matrix())?
                .matmul(&indicator.transpose())?,
        )?;
        let edge_schur_deviation = edge_schur.max_abs_diff(&Matrix::identity(m).scale(2.0))?;
        if edge_schur_deviation > IDENTITY_TOL {
            return Err(Error::IdentityViolated {
                name: "P - M Q^-1 M^T = 2I",
                deviation: edge_schur_deviation,
            });
        }

        // H = (L_G + D_G) − B (P − M Q⁻¹ Mᵀ)⁻¹ Bᵀ
        let edge_schur_inv = sym_inverse(
            &DenseSymMatrix::symmetrize(edge_schur, SYMMETRY_TOL)?,
            "P - M Q^-1 M^T",
        )?;
        let b = &base.incidence;
        let schur = g
            .laplacian()
            .as_matrix()
            .add(g.degree_matrix().as_matrix())?
            .sub(
                &b.matmul(edge_schur_inv.as_matrix())?
                    .matmul(&b.transpose())?,
            )?;
        let schur_deviation = base.schur_deviation(&schur)?;
        if schur_deviation > IDENTITY_TOL {
            return Err(Error::IdentityViolated {
                name: "H = (3/2) L_G",
                deviation: schur_deviation,
            });
        }

        let total = crown_factors.total();
        let d = Matrix::from_blocks(&[
            vec![&Matrix::from_diagonal(&p), &indicator.scale(-1.0)],
            vec![
                &indicator.transpose().scale(-1.0),
                q_inv_source(&crown_factors)?.as_matrix(),
            ],
        ])?;
        let d_inv_direct = sym_inverse(&DenseSymMatrix::symmetrize(d, SYMMETRY_TOL)?, "D")?;
        let f = indicator.scale(coefficients.crown_link);
        let s_inv = DenseSymMatrix::block_diagonal(&s_inverses);
        let ft = f.transpose();
        let d_inv_structured = Matrix::from_blocks(&[
            vec![&Matrix::identity(m).scale(0.5), &f],
            vec![&ft, s_inv.as_matrix()],
        ])?;
        let d_inverse_deviation = d_inv_direct.as_matrix().max_abs_diff(&d_inv_structured)?;

        let crown_sum_closed: f64 = sizes.iter().map(|&t| 0.5 * (t * (2 + t)) as f64).sum();
        let s_trace = s_inv.trace();
        let spectral = crown_factors.spectral_trace();
        let identities = REdgeIdentities {
            edge_schur_deviation,
            schur_deviation,
            d_inverse_deviation,
            crown_sum_deviation: (s_inv.as_matrix().sum() - crown_sum_closed).abs(),
            s_trace_deviation: (s_trace - (spectral + 0.5 * total as f64)).abs(),
            s_spectrum_gap: (s_trace - spectral).abs(),
        };

        Ok(Self {
            base,
            crowns: crown_factors,
            coefficients,
            indicator,
            s_inverses,
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

    pub fn identities(&self) -> &REdgeIdentities {
        &self.identities
    }

    pub fn s_inverses(&self) -> &[DenseSymMatrix] {
        &self.s_inverses
    }

    /// `F = crown_link · M`.
    pub fn link_block(&self) -> Matrix {
        self.indicator.scale(self.coefficients.crown_link)
    }

    pub fn laplacian(&self) -> DenseSymMatrix {
        self.corona.graph.laplacian()
    }

    pub fn order(&self) -> usize {
        self.corona.graph.n()
    }

    pub fn one_inverse(&self) -> Result<DenseSymMatrix> {
        let c = &self.coefficients;
        let (top_left, top_mid, mid) = self.base.leading_blocks(c)?;
        let f = self.link_block();
        let gram_f = self.base.edge_gram.as_matrix().matmul(&f)?;
        let top_right = self
            .base
            .lsharp_incidence
            .matmul(&f)?
            .scale(c.original_crown);
        let mid_right = f.add(&gram_f.scale(c.edge_crown))?;
        let s_inv = DenseSymMatrix::block_diagonal(&self.s_inverses);
        let bottom = s_inv
            .as_matrix()
            .add(&f.transpose().matmul(&gram_f)?.scale(c.crown_block))?;

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

    /// Generic block {1}-inverse with the `[V(G) | rest]` split.
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
        let anchor = RGraphVertex::Edge;
        let apex = &self.crowns.apex_resistances;

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
                let r = self.base.rgraph_resistance(c, x, anchor(k)) + apex[k][a];
                (r, ResistanceCase::AnchorCrown)
            }
            (None, None) => {
                let (k, a) = crown_of(ru).unwrap();
                let (l, b) = crown_of(rv).unwrap();
                if k == l {
                    let r = CrownFactors::four_entry(&self.s_inverses[k], a, b);
                    (r, ResistanceCase::SameCrown)
                } else {
                    let r = self.base.rgraph_resistance(c, anchor(k), anchor(l))
                        + apex[k][a]
                        + apex[l][b];
                    (r, ResistanceCase::CrossCrown)
                }
            }
        };
        Ok(out)
    }

    pub fn expansion(&self) -> KirchhoffExpansion {
        let c = &self.coefficients;
        let b = &self.base;
        let f = c.crown_link;
        let (n, m) = (b.n() as f64, b.m() as f64);
        let tau: Vec<f64> = self.crowns.sizes().into_iter().map(|t| t as f64).collect();
        let total: f64 = tau.iter().sum();
        let g = &b.edge_gram;
        let anchor_trace: f64 = tau.iter().enumerate().map(|(e, t)| t * g[(e, e)]).sum();
        let b_tau = b.incidence.matvec(&tau).expect("length m");
        let g_tau = g.as_matrix().matvec(&tau).expect("length m");
        let tau_g_tau: f64 = tau.iter().zip(&g_tau).map(|(a, b)| a * b).sum();
        let crown_sum: f64 = tau.iter().map(|t| 0.5 * t * (2.0 + t)).sum();
        KirchhoffExpansion {
            prefactor: n + m + total,
            trace_terms: vec![
                term("base_kirchhoff", c.original * b.kirchhoff / n),
                term("edge_identity", c.edge_identity * m),
                term("degree_trace", 2.0 * c.edge_block * b.degree_trace()),
                term("rank_constant", -c.edge_block * (n - 1.0)),
                term("crown_spectral", self.crowns.spectral_trace()),
                term("crown_rank_one_shift", 0.5 * total),
                term("crown_anchor", c.crown_block * f * f * anchor_trace),
            ],
            ones_terms: vec![
                term("edge_identity", c.edge_identity * m),
                term(
                    "degree_quadratic",
                    c.edge_block * b.lsharp_form(&b.degrees, &b.degrees),
                ),
                term("crown_link", 2.0 * f * total),
                term(
                    "degree_crown_cross",
                    2.0 * c.edge_crown * f * b.lsharp_form(&b.degrees, &b_tau),
                ),
                term("crown_inverse_sum", crown_sum),
                term("crown_quadratic", c.crown_block * f * f * tau_g_tau),
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

fn q_inv_source(crowns: &CrownFactors) -> Result<DenseSymMatrix> {
    let blocks = crowns
        .graphs
        .iter()
        .map(|h| h.laplacian().add(&DenseSymMatrix::identity(h.n())))
        .collect::<Result<Vec<_>>>()?;
    Ok(DenseSymMatrix::block_diagonal(&blocks))
}

pub fn re_one_inverse(g: &Graph, crowns: &[Graph]) -> Result<DenseSymMatrix> {
    REdgeClosedForm::new(g, crowns)?.one_inverse()
}

pub fn re_resistance(g: &Graph, crowns: &[Graph], u: usize, v: usize) -> Result<f64> {
    REdgeClosedForm::new(g, crowns)?.resistance(u, v)
}

pub fn re_kirchhoff(g: &Graph, crowns: &[Graph]) -> Result<KirchhoffReport> {
    REdgeClosedForm::new(g, crowns)?.kirchhoff()
}
