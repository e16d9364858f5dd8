//! Seeded cross-validation battery: random bases and crowns, every
//! structural identity and oracle comparison, folded into one report.

use std::collections::BTreeMap;

use corona_core::closed_form::conformance::KIRCHHOFF_RTOL;
use corona_core::random::{random_connected_graph, random_crowns};
use corona_core::{
    block_one_inverse, kirchhoff_matches, serialize_edge_list, shifted_rank_one_inverse,
    verify_one_inverse, Coefficients, CoronaResult, Graph, Matrix, PairConvention, REdgeClosedForm,
    RVertexClosedForm, ResistanceCase, ResistanceOracle,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::format::{ser_opt_value, ser_residual, ser_value};

pub const SCHEMA: &str = "corona-suite/1";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Every check the battery knows, with its pass threshold. Residuals marked
/// relative are divided by `max(1, |reference|)` before comparison.
pub const CHECKS: &[(&str, f64, &str)] = &[
    ("group_inverse_ones", 1e-9, "max |L♯ 1| on the base graph"),
    (
        "kirchhoff_routes",
        1e-8,
        "relative |n tr(L♯) − Σ r_uv| on the base graph",
    ),
    (
        "edge_sum",
        1e-8,
        "|Σ_(u,v)∈E r_uv − (n − 1)| on the base graph",
    ),
    (
        "neighbor_recursion",
        1e-8,
        "max over i ≠ j of the neighbor recursion residual (unordered pairs)",
    ),
    (
        "shifted_rank_one",
        1e-8,
        "max |(L + aI − (a/b)J) X − I| for random a, b",
    ),
    (
        "block_one_inverse",
        1e-8,
        "relative L X L = L residual of the Schur-complement {1}-inverse",
    ),
    (
        "cut_vertex",
        1e-8,
        "|r_ij − r_ik − r_kj| through crown anchors k of both coronae",
    ),
    ("rv_schur_identity", 1e-12, "R-vertex: max |H − (3/2) L_G|"),
    ("rv_crown_sum", 1e-8, "R-vertex: |1ᵀ T⁻¹ 1 − Σ t|"),
    (
        "rv_spectral_trace",
        1e-8,
        "R-vertex: |tr(T⁻¹) − Σ 1/(μ + 1)|",
    ),
    (
        "rv_one_inverse",
        1e-8,
        "R-vertex: relative L N L = L residual",
    ),
    (
        "rv_resistance",
        1e-8,
        "R-vertex: max pairwise |closed form − oracle|",
    ),
    (
        "rv_kirchhoff",
        KIRCHHOFF_RTOL,
        "R-vertex: relative |N tr(N) − 1ᵀN1 − oracle Kf|",
    ),
    (
        "rv_kirchhoff_expansion",
        KIRCHHOFF_RTOL,
        "R-vertex: relative |term expansion − oracle Kf|",
    ),
    (
        "re_edge_schur_identity",
        1e-12,
        "R-edge: max |P − M Q⁻¹ Mᵀ − 2I|",
    ),
    ("re_schur_identity", 1e-12, "R-edge: max |H − (3/2) L_G|"),
    (
        "re_d_inverse",
        1e-8,
        "R-edge: max |D⁻¹ − [[½I, F], [Fᵀ, S⁻¹]]|",
    ),
    ("re_crown_sum", 1e-8, "R-edge: |1ᵀ S⁻¹ 1 − ½ Σ t(2 + t)|"),
    (
        "re_s_trace",
        1e-8,
        "R-edge: |tr(S⁻¹) − Σ 1/(μ + 1) − ½ Σ t|",
    ),
    (
        "re_one_inverse",
        1e-8,
        "R-edge: relative L N L = L residual",
    ),
    (
        "re_resistance",
        1e-8,
        "R-edge: max pairwise |closed form − oracle|",
    ),
    (
        "re_kirchhoff",
        KIRCHHOFF_RTOL,
        "R-edge: relative |N tr(N) − 1ᵀN1 − oracle Kf|",
    ),
    (
        "re_kirchhoff_expansion",
        KIRCHHOFF_RTOL,
        "R-edge: relative |term expansion − oracle Kf|",
    ),
    (
        "degenerate_r_graph",
        1e-8,
        "empty crowns: max |r − (2/3) r_G| on originals and |r − oracle| on R(G)",
    ),
];

pub fn tolerance(name: &str) -> f64 {
    CHECKS
        .iter()
        .find(|(n, _, _)| *n == name)
        .map(|c| c.1)
        .unwrap_or_else(|| panic!("unknown check `{name}`"))
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckTally {
    pub name: &'static str,
    pub description: &'static str,
    #[serde(serialize_with = "ser_residual")]
    pub tolerance: f64,
    pub evaluations: usize,
    pub failures: usize,
    pub errors: usize,
    #[serde(serialize_with = "ser_opt_residual")]
    pub worst: Option<f64>,
    pub pass: bool,
}

fn ser_opt_residual<S: serde::Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_some(&crate::format::round_residual(*v)),
        None => s.serialize_none(),
    }
}

/// Accumulates residuals per named check.
#[derive(Debug, Clone)]
pub struct Battery {
    tallies: BTreeMap<&'static str, CheckTally>,
}

impl Default for Battery {
    fn default() -> Self {
        Self::new()
    }
}

impl Battery {
    pub fn new() -> Self {
        let tallies = CHECKS
            .iter()
            .map(|&(name, tolerance, description)| {
                let t = CheckTally {
                    name,
                    description,
                    tolerance,
                    evaluations: 0,
                    failures: 0,
                    errors: 0,
                    worst: None,
                    pass: true,
                };
                (name, t)
            })
            .collect();
        Self { tallies }
    }

    /// Record a residual; returns whether it is within tolerance. NaN fails.
    pub fn record(&mut self, name: &'static str, residual: f64) -> bool {
        let t = self
            .tallies
            .get_mut(name)
            .unwrap_or_else(|| panic!("unknown check `{name}`"));
        let ok = residual <= t.tolerance;
        t.evaluations += 1;
        t.worst = Some(match t.worst {
            Some(w) if w >= residual => w,
            _ if residual.is_nan() => f64::INFINITY,
            _ => residual,
        });
        if !ok {
            t.failures += 1;
            t.pass = false;
        }
        ok
    }

    /// Record that a check could not be evaluated.
    pub fn error(&mut self, name: &'static str) {
        let t = self
            .tallies
            .get_mut(name)
            .unwrap_or_else(|| panic!("unknown check `{name}`"));
        t.errors += 1;
        t.pass = false;
    }

    pub fn tally(&self, name: &str) -> &CheckTally {
        &self.tallies[name]
    }

    pub fn tallies(&self) -> Vec<CheckTally> {
        CHECKS
            .iter()
            .map(|(n, _, _)| self.tallies[n].clone())
            .collect()
    }

    pub fn pass(&self) -> bool {
        self.tallies.values().all(|t| t.pass)
    }
}

pub fn graph_hash(g: &Graph) -> String {
    Sha256::digest(serialize_edge_list(g).as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn relative(residual: f64, reference: f64) -> f64 {
    residual / reference.abs().max(1.0)
}

/// Lemma-level checks on a connected base graph.
pub fn lemma_checks<R: Rng + ?Sized>(g: &Graph, rng: &mut R, battery: &mut Battery) {
    let oracle = match ResistanceOracle::new(g) {
        Ok(o) => o,
        Err(_) => {
            for name in [
                "group_inverse_ones",
                "kirchhoff_routes",
                "edge_sum",
                "neighbor_recursion",
            ] {
                battery.error(name);
            }
            return;
        }
    };
    battery.record("group_inverse_ones", oracle.ones_residual());
    let kf = oracle.kirchhoff_index();
    let pair_sum = oracle.resistances().pair_sum();
    battery.record(
        "kirchhoff_routes",
        relative((kf - pair_sum).abs(), pair_sum),
    );
    battery.record("edge_sum", oracle.edge_sum_residual());

    let n = g.n();
    let mut worst: Option<f64> = None;
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            match oracle.neighbor_recursion_residual(i, j, PairConvention::Unordered) {
                Ok(r) => worst = Some(worst.map_or(r, |w: f64| w.max(r))),
                Err(_) => battery.error("neighbor_recursion"),
            }
        }
    }
    if let Some(w) = worst {
        battery.record("neighbor_recursion", w);
    }

    let l = g.laplacian();
    let nf = n as f64;
    let a = 10.0 * (1.0 - rng.gen::<f64>());
    let b = loop {
        let b = 2.0 * nf * (1.0 - rng.gen::<f64>());
        if (b - nf).abs() > 1e-3 * nf && (b - a).abs() > 1e-3 {
            break b;
        }
    };
    match shifted_rank_one_inverse(&l, a, b) {
        Ok(inv) => {
            let target = l
                .as_matrix()
                .add(&Matrix::identity(n).scale(a))
                .and_then(|t| t.sub(&Matrix::ones(n, n).scale(a / b)))
                .and_then(|t| t.matmul(inv.as_matrix()))
                .and_then(|p| p.max_abs_diff(&Matrix::identity(n)));
            match target {
                Ok(r) => battery.record("shifted_rank_one", r),
                Err(_) => {
                    battery.error("shifted_rank_one");
                    false
                }
            };
        }
        Err(_) => battery.error("shifted_rank_one"),
    }

    if n >= 2 {
        let k = rng.gen_range(1..n);
        let split = block_one_inverse(
            &l.principal(0, k),
            &l.as_matrix().submatrix(0, k, k, n - k),
            &l.principal(k, n - k),
        );
        match split.and_then(|x| verify_one_inverse(&l, &x.inverse)) {
            Ok(r) => {
                battery.record("block_one_inverse", r / l.max_abs().max(1.0));
            }
            Err(_) => battery.error("block_one_inverse"),
        }
    }
}

/// `|r_ij − r_ik − r_kj|` for every crown vertex `i` (first of each crown),
/// its anchor `k`, and every non-crown vertex `j ≠ k`.
pub fn cut_vertex_checks(corona: &CoronaResult, oracle: &ResistanceOracle, battery: &mut Battery) {
    let partition = &corona.partition;
    let outside: Vec<usize> = partition
        .original
        .iter()
        .chain(&partition.edge_vertices)
        .copied()
        .collect();
    let mut worst: Option<f64> = None;
    for (k, crown) in partition.crowns.iter().enumerate() {
        let (Some(&i), Some(anchor)) = (crown.first(), corona.anchor(k)) else {
            continue;
        };
        for &j in outside.iter().filter(|&&j| j != anchor) {
            match oracle.cut_vertex_residual(i, anchor, j) {
                Ok(r) => worst = Some(worst.map_or(r, |w: f64| w.max(r))),
                Err(_) => battery.error("cut_vertex"),
            }
        }
    }
    if let Some(w) = worst {
        battery.record("cut_vertex", w);
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphDescriptor {
    pub sha256: String,
    pub n: usize,
    pub m: usize,
}

impl GraphDescriptor {
    pub fn of(g: &Graph) -> Self {
        Self {
            sha256: graph_hash(g),
            n: g.n(),
            m: g.m(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CoronaComparison {
    pub kind: &'static str,
    pub crown_sizes: Vec<usize>,
    pub crown_sha256: Vec<String>,
    pub order: usize,
    #[serde(serialize_with = "ser_opt_value")]
    pub kf_closed: Option<f64>,
    #[serde(serialize_with = "ser_opt_value")]
    pub kf_expansion: Option<f64>,
    #[serde(serialize_with = "ser_value")]
    pub kf_oracle: f64,
    #[serde(serialize_with = "ser_opt_residual")]
    pub kf_residual: Option<f64>,
    #[serde(serialize_with = "ser_opt_residual")]
    pub max_pair_residual: Option<f64>,
    #[serde(serialize_with = "ser_opt_residual")]
    pub one_inverse_residual: Option<f64>,
    /// Number of vertex pairs handled by each resistance case.
    pub cases: BTreeMap<String, usize>,
    pub error: Option<String>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceReport {
    pub index: usize,
    pub base: GraphDescriptor,
    pub r_vertex: CoronaComparison,
    pub r_edge: CoronaComparison,
    pub pass: bool,
}

/// The two closed forms behind one interface.
pub enum ClosedForm {
    Vertex(RVertexClosedForm),
    Edge(REdgeClosedForm),
}

impl ClosedForm {
    pub fn build(
        kind: &'static str,
        g: &Graph,
        crowns: &[Graph],
        c: Coefficients,
    ) -> corona_core::Result<Self> {
        Ok(match kind {
            "r_vertex" => Self::Vertex(RVertexClosedForm::with_coefficients(g, crowns, c)?),
            _ => Self::Edge(REdgeClosedForm::with_coefficients(g, crowns, c)?),
        })
    }

    pub fn corona(&self) -> &CoronaResult {
        match self {
            Self::Vertex(c) => c.corona(),
            Self::Edge(c) => c.corona(),
        }
    }

    pub fn resistance_with_case(
        &self,
        u: usize,
        v: usize,
    ) -> corona_core::Result<(f64, ResistanceCase)> {
        match self {
            Self::Vertex(c) => c.resistance_with_case(u, v),
            Self::Edge(c) => c.resistance_with_case(u, v),
        }
    }

    pub fn one_inverse(&self) -> corona_core::Result<corona_core::DenseSymMatrix> {
        match self {
            Self::Vertex(c) => c.one_inverse(),
            Self::Edge(c) => c.one_inverse(),
        }
    }

    pub fn kirchhoff(&self) -> corona_core::Result<corona_core::KirchhoffReport> {
        match self {
            Self::Vertex(c) => c.kirchhoff(),
            Self::Edge(c) => c.kirchhoff(),
        }
    }

    /// Structural identity residuals under the battery's check names.
    pub fn identities(&self) -> Vec<(&'static str, f64)> {
        match self {
            Self::Vertex(c) => {
                let id = c.identities();
                vec![
                    ("rv_schur_identity", id.schur_deviation),
                    ("rv_crown_sum", id.crown_sum_deviation),
                    ("rv_spectral_trace", id.spectral_trace_deviation),
                ]
            }
            Self::Edge(c) => {
                let id = c.identities();
                vec![
                    ("re_edge_schur_identity", id.edge_schur_deviation),
                    ("re_schur_identity", id.schur_deviation),
                    ("re_d_inverse", id.d_inverse_deviation),
                    ("re_crown_sum", id.crown_sum_deviation),
                    ("re_s_trace", id.s_trace_deviation),
                ]
            }
        }
    }
}

fn check_names(kind: &str) -> [&'static str; 4] {
    if kind == "r_vertex" {
        [
            "rv_one_inverse",
            "rv_resistance",
            "rv_kirchhoff",
            "rv_kirchhoff_expansion",
        ]
    } else {
        [
            "re_one_inverse",
            "re_resistance",
            "re_kirchhoff",
            "re_kirchhoff_expansion",
        ]
    }
}

/// Closed form vs oracle on one corona; `kind` is `r_vertex` or `r_edge`.
pub fn corona_checks(
    kind: &'static str,
    g: &Graph,
    crowns: &[Graph],
    coefficients: Coefficients,
    battery: &mut Battery,
) -> CoronaComparison {
    let [inv_name, res_name, kf_name, exp_name] = check_names(kind);
    let built = if kind == "r_vertex" {
        corona_core::r_vertex_corona(g, crowns)
    } else {
        corona_core::r_edge_corona(g, crowns)
    };
    let mut cmp = CoronaComparison {
        kind,
        crown_sizes: crowns.iter().map(Graph::n).collect(),
        crown_sha256: crowns.iter().map(graph_hash).collect(),
        order: 0,
        kf_closed: None,
        kf_expansion: None,
        kf_oracle: f64::NAN,
        kf_residual: None,
        max_pair_residual: None,
        one_inverse_residual: None,
        cases: BTreeMap::new(),
        error: None,
        pass: false,
    };
    let fail_all = |battery: &mut Battery, cmp: &mut CoronaComparison, msg: String| {
        for name in [inv_name, res_name, kf_name, exp_name] {
            battery.error(name);
        }
        cmp.error = Some(msg);
    };
    let corona = match built {
        Ok(c) => c,
        Err(e) => {
            fail_all(battery, &mut cmp, e.to_string());
            return cmp;
        }
    };
    cmp.order = corona.graph.n();
    let oracle = match ResistanceOracle::new(&corona.graph) {
        Ok(o) => o,
        Err(e) => {
            fail_all(battery, &mut cmp, e.to_string());
            return cmp;
        }
    };
    cmp.kf_oracle = oracle.kirchhoff_index();
    cut_vertex_checks(&corona, &oracle, battery);

    let cf = match ClosedForm::build(kind, g, crowns, coefficients) {
        Ok(cf) => cf,
        Err(e) => {
            fail_all(battery, &mut cmp, e.to_string());
            return cmp;
        }
    };
    let mut ok = true;
    for (name, r) in cf.identities() {
        ok &= battery.record(name, r);
    }

    let l = corona.graph.laplacian();
    match cf.one_inverse().and_then(|x| verify_one_inverse(&l, &x)) {
        Ok(r) => {
            let r = r / l.max_abs().max(1.0);
            cmp.one_inverse_residual = Some(r);
            ok &= battery.record(inv_name, r);
        }
        Err(_) => {
            battery.error(inv_name);
            ok = false;
        }
    }

    let order = corona.graph.n();
    let mut worst = 0.0f64;
    let mut dispatch_ok = true;
    for u in 0..order {
        for v in u..order {
            match cf.resistance_with_case(u, v) {
                Ok((r, case)) => {
                    *cmp.cases.entry(case.to_string()).or_default() += 1;
                    let d = (r - oracle.resistances().get(u, v)).abs();
                    worst = if d.is_nan() {
                        f64::INFINITY
                    } else {
                        worst.max(d)
                    };
                }
                Err(_) => dispatch_ok = false,
            }
        }
    }
    if dispatch_ok {
        cmp.max_pair_residual = Some(worst);
        ok &= battery.record(res_name, worst);
    } else {
        battery.error(res_name);
        ok = false;
    }

    match cf.kirchhoff() {
        Ok(rep) => {
            let r = relative((rep.value - cmp.kf_oracle).abs(), cmp.kf_oracle);
            let e = relative((rep.expansion.value() - cmp.kf_oracle).abs(), cmp.kf_oracle);
            cmp.kf_closed = Some(rep.value);
            cmp.kf_expansion = Some(rep.expansion.value());
            cmp.kf_residual = Some(r);
            ok &= battery.record(kf_name, r);
            ok &= battery.record(exp_name, e);
            debug_assert_eq!(
                kirchhoff_matches(rep.value, cmp.kf_oracle, KIRCHHOFF_RTOL),
                r <= KIRCHHOFF_RTOL
            );
        }
        Err(_) => {
            battery.error(kf_name);
            battery.error(exp_name);
            ok = false;
        }
    }
    cmp.pass = ok;
    cmp
}

/// Both coronae with all crowns empty must reduce to `R(G)`, with
/// `r = (2/3) r_G` between original vertices.
pub fn degenerate_checks(g: &Graph, coefficients: Coefficients, battery: &mut Battery) -> bool {
    let (Ok(base), Ok(rg)) = (
        ResistanceOracle::new(g),
        ResistanceOracle::new(&corona_core::r_graph(g).graph),
    ) else {
        battery.error("degenerate_r_graph");
        return false;
    };
    let mut ok = true;
    for (kind, slots) in [("r_vertex", g.n()), ("r_edge", g.m())] {
        let empty = vec![Graph::empty(0); slots];
        let Ok(cf) = ClosedForm::build(kind, g, &empty, coefficients) else {
            battery.error("degenerate_r_graph");
            ok = false;
            continue;
        };
        let order = g.n() + g.m();
        let mut worst = 0.0f64;
        for u in 0..order {
            for v in u..order {
                let Ok((r, _)) = cf.resistance_with_case(u, v) else {
                    worst = f64::INFINITY;
                    continue;
                };
                worst = worst.max((r - rg.resistances().get(u, v)).abs());
                if u < g.n() && v < g.n() {
                    worst = worst.max((r - 2.0 / 3.0 * base.resistances().get(u, v)).abs());
                }
            }
        }
        ok &= battery.record("degenerate_r_graph", worst);
    }
    ok
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub cases: usize,
    pub nmax: usize,
    pub tmax: usize,
    pub mmax: Option<usize>,
    pub coefficients: Coefficients,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 1,
            cases: 50,
            nmax: 6,
            tmax: 3,
            mmax: None,
            coefficients: Coefficients::DERIVED,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ComparisonReport {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub config: SuiteConfig,
    /// Coefficients that differ from the shipped ones.
    pub mutated: Vec<&'static str>,
    pub instances: Vec<InstanceReport>,
    pub checks: Vec<CheckTally>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

impl ComparisonReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Totals of each resistance case over every instance and corona.
    pub fn case_coverage(&self, kind: &str) -> BTreeMap<String, usize> {
        let mut out = BTreeMap::new();
        for inst in &self.instances {
            let cmp = if kind == "r_vertex" {
                &inst.r_vertex
            } else {
                &inst.r_edge
            };
            for (case, count) in &cmp.cases {
                *out.entry(case.clone()).or_default() += count;
            }
        }
        out
    }
}

/// Draw one random instance: a connected base and crowns for both coronae.
pub fn draw_instance<R: Rng + ?Sized>(
    rng: &mut R,
    config: &SuiteConfig,
) -> (Graph, Vec<Graph>, Vec<Graph>) {
    let n = rng.gen_range(1..=config.nmax.max(1));
    let extra = rng.gen_range(0..=n * n.saturating_sub(1) / 2);
    let g = random_connected_graph(rng, n, extra, config.mmax);
    let rv = random_crowns(rng, g.n(), config.tmax);
    let re = random_crowns(rng, g.m(), config.tmax);
    (g, rv, re)
}

pub fn run_suite(config: &SuiteConfig) -> ComparisonReport {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut battery = Battery::new();
    let mut instances = Vec::with_capacity(config.cases);
    for index in 0..config.cases {
        let (g, rv_crowns, re_crowns) = draw_instance(&mut rng, config);
        lemma_checks(&g, &mut rng, &mut battery);
        let degenerate = degenerate_checks(&g, config.coefficients, &mut battery);
        let r_vertex = corona_checks(
            "r_vertex",
            &g,
            &rv_crowns,
            config.coefficients,
            &mut battery,
        );
        let r_edge = corona_checks("r_edge", &g, &re_crowns, config.coefficients, &mut battery);
        let pass = degenerate && r_vertex.pass && r_edge.pass;
        instances.push(InstanceReport {
            index,
            base: GraphDescriptor::of(&g),
            r_vertex,
            r_edge,
            pass,
        });
    }
    let verdict = if battery.pass() && instances.iter().all(|i| i.pass) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    ComparisonReport {
        schema: SCHEMA,
        tool_version: TOOL_VERSION,
        config: config.clone(),
        mutated: config.coefficients.mutated(),
        instances,
        checks: battery.tallies(),
        verdict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_suite_passes() {
        let report = run_suite(&SuiteConfig {
            cases: 0,
            ..Default::default()
        });
        assert!(report.passed());
        assert!(report.instances.is_empty());
        assert!(report.checks.iter().all(|c| c.evaluations == 0));
    }

    #[test]
    fn small_suite_passes_and_is_deterministic() {
        let config = SuiteConfig {
            cases: 5,
            nmax: 4,
            tmax: 2,
            ..Default::default()
        };
        let a = serde_json::to_string(&run_suite(&config)).unwrap();
        let b = serde_json::to_string(&run_suite(&config)).unwrap();
        assert_eq!(a, b);
        assert!(run_suite(&config).passed());
    }

    #[test]
    fn battery_rejects_nan() {
        let mut b = Battery::new();
        assert!(!b.record("edge_sum", f64::NAN));
        assert!(!b.pass());
    }
}
