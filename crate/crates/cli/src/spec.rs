//! Corona spec files: `key = value` lines naming a construction and the
//! edge-list files it is built from.
//!
//! ```text
//! # two pendants on K2
//! kind = r_vertex
//! base = k2.txt
//! crown.0 = k1.txt
//! crown.1 = k1.txt
//! ```
//!
//! Paths are relative to the spec file. A crown index with no entry is the
//! empty graph.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use corona_core::{parse_edge_list, r_edge_corona, r_graph, r_vertex_corona, CoronaResult, Graph};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpecKind {
    RGraph,
    RVertex,
    REdge,
}

impl FromStr for SpecKind {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "r_graph" => Ok(Self::RGraph),
            "r_vertex" => Ok(Self::RVertex),
            "r_edge" => Ok(Self::REdge),
            other => bail!("unknown kind `{other}` (expected r_graph, r_vertex or r_edge)"),
        }
    }
}

impl fmt::Display for SpecKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::RGraph => "r_graph",
            Self::RVertex => "r_vertex",
            Self::REdge => "r_edge",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoronaSpec {
    pub kind: SpecKind,
    pub base: Graph,
    /// One entry per anchor (`n` for r_vertex, `m` for r_edge, none for r_graph).
    pub crowns: Vec<Graph>,
}

impl CoronaSpec {
    pub fn build(&self) -> corona_core::Result<CoronaResult> {
        match self.kind {
            SpecKind::RGraph => Ok(r_graph(&self.base)),
            SpecKind::RVertex => r_vertex_corona(&self.base, &self.crowns),
            SpecKind::REdge => r_edge_corona(&self.base, &self.crowns),
        }
    }

    pub fn crown_sizes(&self) -> Vec<usize> {
        self.crowns.iter().map(Graph::n).collect()
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_edge_list(&text).map_err(|e| anyhow!("{}:{}: {}", path.display(), e.line, e.kind))
}

/// Parse spec text; `origin` names the file for messages and anchors
/// relative paths.
pub fn parse_spec(text: &str, origin: &Path) -> Result<CoronaSpec> {
    let dir = origin.parent().unwrap_or(Path::new("."));
    let at = |line: usize| format!("{}:{}", origin.display(), line);
    let mut kind: Option<SpecKind> = None;
    let mut base: Option<(usize, PathBuf)> = None;
    let mut crowns: BTreeMap<usize, (usize, PathBuf)> = BTreeMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .map(|(k, v)| (k.trim(), v.trim()))
            .ok_or_else(|| anyhow!("{}: expected `key = value`", at(line)))?;
        if value.is_empty() {
            bail!("{}: empty value for `{key}`", at(line));
        }
        match key {
            "kind" => {
                if kind.is_some() {
                    bail!("{}: duplicate `kind`", at(line));
                }
                kind = Some(value.parse().with_context(|| at(line))?);
            }
            "base" => {
                if base.is_some() {
                    bail!("{}: duplicate `base`", at(line));
                }
                base = Some((line, dir.join(value)));
            }
            _ => {
                let index = key
                    .strip_prefix("crown.")
                    .and_then(|i| i.parse::<usize>().ok())
                    .ok_or_else(|| anyhow!("{}: unknown key `{key}`", at(line)))?;
                if crowns.insert(index, (line, dir.join(value))).is_some() {
                    bail!("{}: duplicate `crown.{index}`", at(line));
                }
            }
        }
    }

    let kind = kind.ok_or_else(|| anyhow!("{}: missing `kind`", origin.display()))?;
    let (base_line, base_path) =
        base.ok_or_else(|| anyhow!("{}: missing `base`", origin.display()))?;
    let base = read_graph(&base_path).with_context(|| format!("{}: base graph", at(base_line)))?;
    let slots = match kind {
        SpecKind::RGraph => 0,
        SpecKind::RVertex => base.n(),
        SpecKind::REdge => base.m(),
    };
    let mut graphs = vec![Graph::empty(0); slots];
    for (index, (line, path)) in crowns {
        if index >= slots {
            bail!(
                "{}: crown.{index} out of range: {kind} over a base with n = {}, m = {} has {slots} crown slot(s)",
                at(line),
                base.n(),
                base.m()
            );
        }
        graphs[index] =
            read_graph(&path).with_context(|| format!("{}: crown.{index}", at(line)))?;
    }
    Ok(CoronaSpec {
        kind,
        base,
        crowns: graphs,
    })
}

pub fn load_spec(path: &Path) -> Result<CoronaSpec> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_spec(&text, path)
}
