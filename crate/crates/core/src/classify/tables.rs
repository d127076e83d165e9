//! Embedded data tables driving the classification.
//!
//! The file `data/tables.json` holds four hand-curated datasets (schema
//! documented in `docs/tables-schema.md` at the workspace root):
//!
//! - `elashvili`: the classical table of fundamental representations with
//!   `dim V < dim g`, together with the generic stationary subalgebra of a
//!   general vector and its dimension;
//! - `section_stabs`: dimensions of the stabilizer of a generic codimension-r
//!   linear span, for the handful of ambients where codimension ≥ 2 linear
//!   sections can be rigid;
//! - `aliases`: expected canonical-presentation rewrites, used to cross-check
//!   the normalization rules;
//! - `theorem_lists`: the expected outcome sets that `verify` reproduces,
//!   plus open-orbit descriptions;
//! - `special_constants`: report-only constants for the special (non-generic)
//!   sections of S5.
//!
//! Family rows carry closed-form integer polynomials in a parameter; every
//! row is instantiated and verified against the Weyl dimension formula at
//! load time, so a corrupted table cannot silently classify anything.

use crate::rootdata::{RootSystem, Series, SpaceId, Weight};
use crate::{Error, Result};
use num_bigint::BigInt;
use serde::Deserialize;
use std::path::Path;
use std::sync::OnceLock;

/// An integer constant or a polynomial `c0 + c1·p + c2·p²` in the family
/// parameter.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum IntOrPoly {
    Int(i64),
    Poly { poly: Vec<i64> },
}

impl IntOrPoly {
    pub fn eval(&self, p: i64) -> i64 {
        match self {
            IntOrPoly::Int(v) => *v,
            IntOrPoly::Poly { poly } => {
                let mut acc = 0i64;
                for c in poly.iter().rev() {
                    acc = acc * p + c;
                }
                acc
            }
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct ParamSpec {
    pub min: i64,
}

#[derive(Debug, Clone, Deserialize)]
pub struct ElashviliRow {
    pub series: String,
    pub node: usize,
    pub param: Option<ParamSpec>,
    pub rank: IntOrPoly,
    pub dim_v: IntOrPoly,
    pub h: String,
    pub dim_h: IntOrPoly,
    pub reductive: bool,
    pub source: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct SectionStabRow {
    pub series: String,
    pub node: usize,
    pub param: Option<ParamSpec>,
    pub rank: IntOrPoly,
    pub r: usize,
    pub stab_dim: IntOrPoly,
    pub desc: String,
    pub source: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct AliasCheck {
    pub from: String,
    pub to: String,
    pub aut_dim: i64,
    pub note: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct RigidCiExtras {
    pub pt2_bidegree_one_one: bool,
    pub gr2_odd_codim2_min_k: i64,
    pub s5_linear_codims: Vec<usize>,
    pub gr25_linear_codims: Vec<usize>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct TheoremLists {
    pub rigid_hyperplane_ambients: Vec<String>,
    pub quasi_homogeneous_hyperplane_ambients: Vec<String>,
    pub homogeneous_hyperplane_ambients: Vec<String>,
    pub rigid_ci_extras: RigidCiExtras,
    pub open_orbit_descriptions: std::collections::BTreeMap<String, String>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct SpecialSection {
    pub h0: i64,
    pub h1: i64,
    pub note: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct SpecialConstants {
    pub s5_codim2_special: SpecialSection,
    pub s5_codim3_very_special: SpecialSection,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Tables {
    pub elashvili: Vec<ElashviliRow>,
    pub section_stabs: Vec<SectionStabRow>,
    pub aliases: Vec<AliasCheck>,
    pub theorem_lists: TheoremLists,
    pub special_constants: SpecialConstants,
}

/// A stationary-subalgebra row instantiated at a concrete rank.
#[derive(Debug, Clone)]
pub struct StabRow {
    pub dim_v: i64,
    pub h_desc: String,
    pub dim_h: i64,
    pub reductive: bool,
    pub source: String,
}

/// A section-stabilizer row instantiated at a concrete rank.
#[derive(Debug, Clone)]
pub struct SectionStab {
    pub stab_dim: i64,
    pub desc: String,
    pub source: String,
}

const EMBEDDED: &str = include_str!("../../data/tables.json");

static TABLES: OnceLock<std::result::Result<Tables, String>> = OnceLock::new();
static OVERRIDE_PATH: OnceLock<std::path::PathBuf> = OnceLock::new();

/// Install an alternative table file. Must be called before the first use of
/// [`tables`]; later calls are ignored.
pub fn install_override(path: &Path) -> Result<()> {
    if TABLES.get().is_some() {
        return Err(Error::Internal(
            "data tables were already loaded; install the override first".into(),
        ));
    }
    let _ = OVERRIDE_PATH.set(path.to_path_buf());
    Ok(())
}

/// The verified data tables (embedded unless an override was installed).
pub fn tables() -> Result<&'static Tables> {
    let slot = TABLES.get_or_init(|| {
        let text = match OVERRIDE_PATH.get() {
            Some(p) => std::fs::read_to_string(p)
                .map_err(|e| format!("cannot read table override {}: {e}", p.display()))?,
            None => EMBEDDED.to_string(),
        };
        let t: Tables =
            serde_json::from_str(&text).map_err(|e| format!("cannot parse tables: {e}"))?;
        verify_integrity(&t).map_err(|e| e.to_string())?;
        Ok(t)
    });
    match slot {
        Ok(t) => Ok(t),
        Err(e) => Err(Error::DataIntegrity(e.clone())),
    }
}

/// Nodes identified with `node` by a diagram automorphism, for row lookups.
fn equivalent_nodes(series: Series, rank: usize, node: usize) -> Vec<usize> {
    match series {
        Series::A => {
            let dual = rank + 1 - node;
            if dual == node {
                vec![node]
            } else {
                vec![node, dual]
            }
        }
        Series::D if rank == 4 && [1, 3, 4].contains(&node) => vec![1, 3, 4],
        Series::D if rank >= 5 && (node == rank || node == rank - 1) => vec![rank - 1, rank],
        Series::E if rank == 6 && (node == 1 || node == 6) => vec![1, 6],
        Series::E if rank == 6 && (node == 3 || node == 5) => vec![3, 5],
        _ => vec![node],
    }
}

/// Instantiations of a family row with rank up to `max_rank`.
fn family_params(row_rank: &IntOrPoly, param: &Option<ParamSpec>, max_rank: i64) -> Vec<i64> {
    match param {
        None => vec![0],
        Some(p) => {
            let mut out = Vec::new();
            let mut v = p.min;
            loop {
                let rank = row_rank.eval(v);
                if rank > max_rank {
                    break;
                }
                out.push(v);
                v += 1;
                if v > p.min + 2 * max_rank {
                    break;
                }
            }
            out
        }
    }
}

/// Load-time verification: every row instantiation with rank ≤ 30 must match
/// the Weyl dimension formula exactly, and each stationary subalgebra must be
/// a proper subalgebra.
fn verify_integrity(t: &Tables) -> Result<()> {
    let max_rank = 30i64;
    let mut checked = 0usize;
    for row in &t.elashvili {
        let series: Series = row.series.parse()?;
        for p in family_params(&row.rank, &row.param, max_rank) {
            let rank = row.rank.eval(p);
            if rank < 1 || row.node as i64 > rank {
                return Err(Error::DataIntegrity(format!(
                    "stationary row {}{rank} node {} out of range",
                    row.series, row.node
                )));
            }
            let rs = RootSystem::new(series, rank as usize)?;
            let dim_v = rs.weyl_dim(&Weight::fundamental(rank as usize, row.node))?;
            if dim_v != BigInt::from(row.dim_v.eval(p)) {
                return Err(Error::DataIntegrity(format!(
                    "stationary row {}{rank} node {}: table dim {} != Weyl dim {}",
                    row.series,
                    rank,
                    row.node,
                    row.dim_v.eval(p),
                    dim_v
                )));
            }
            let dim_h = row.dim_h.eval(p);
            if dim_h < 0 || dim_h >= rs.lie_dim() {
                return Err(Error::DataIntegrity(format!(
                    "stationary row {}{rank} node {}: dim h = {dim_h} not below dim g = {}",
                    row.series,
                    rank,
                    row.node,
                    rs.lie_dim()
                )));
            }
            checked += 1;
        }
    }
    if checked == 0 {
        return Err(Error::DataIntegrity("stationary table is empty".into()));
    }
    for row in &t.section_stabs {
        let series: Series = row.series.parse()?;
        for p in family_params(&row.rank, &row.param, max_rank) {
            let rank = row.rank.eval(p);
            let rs = RootSystem::new(series, rank as usize)?;
            let stab = row.stab_dim.eval(p);
            if stab < 0 || stab >= rs.lie_dim() {
                return Err(Error::DataIntegrity(format!(
                    "section stabilizer row {}{rank} r={}: dim {stab} out of range",
                    row.series, rank, row.r
                )));
            }
        }
    }
    Ok(())
}

impl Tables {
    /// The stationary-subalgebra row for a canonical Picard-rank-one space,
    /// instantiated at its rank. Lookup is modulo diagram automorphisms.
    pub fn stationary_row(&self, id: &SpaceId) -> Result<Option<StabRow>> {
        let Some(node) = id.node() else {
            return Ok(None);
        };
        let nodes = equivalent_nodes(id.series, id.rank, node);
        for row in &self.elashvili {
            let series: Series = row.series.parse()?;
            if series != id.series || !nodes.contains(&row.node) {
                continue;
            }
            let Some(p) = solve_rank(&row.rank, &row.param, id.rank as i64) else {
                continue;
            };
            return Ok(Some(StabRow {
                dim_v: row.dim_v.eval(p),
                h_desc: row.h.clone(),
                dim_h: row.dim_h.eval(p),
                reductive: row.reductive,
                source: row.source.clone(),
            }));
        }
        Ok(None)
    }

    /// The linear-span stabilizer row for codimension-r sections.
    pub fn section_stab(&self, id: &SpaceId, r: usize) -> Result<Option<SectionStab>> {
        let Some(node) = id.node() else {
            return Ok(None);
        };
        let nodes = equivalent_nodes(id.series, id.rank, node);
        for row in &self.section_stabs {
            let series: Series = row.series.parse()?;
            if series != id.series || !nodes.contains(&row.node) || row.r != r {
                continue;
            }
            let Some(p) = solve_rank(&row.rank, &row.param, id.rank as i64) else {
                continue;
            };
            return Ok(Some(SectionStab {
                stab_dim: row.stab_dim.eval(p),
                desc: row.desc.clone(),
                source: row.source.clone(),
            }));
        }
        Ok(None)
    }

    /// Whether a canonical ambient matches a theorem-list token.
    pub fn token_matches(token: &str, id: &SpaceId) -> bool {
        let Some(node) = id.node() else {
            return false;
        };
        match token {
            "projective" => id.series == Series::A && node == 1,
            "quadric" => {
                (id.series == Series::B || id.series == Series::D) && node == 1
            }
            "gr2-family" => id.series == Series::A && node == 2 && id.rank >= 4,
            // Gr(2, n+1) with n+1 even means odd rank.
            "gr2-even-family" => {
                id.series == Series::A && node == 2 && id.rank >= 4 && id.rank % 2 == 1
            }
            exact => match parse_space_token(exact) {
                Some(t) => &t == id,
                None => false,
            },
        }
    }

    pub fn ambient_in(list: &[String], id: &SpaceId) -> bool {
        list.iter().any(|tok| Self::token_matches(tok, id))
    }

    pub fn open_orbit_description(&self, id: &SpaceId) -> Option<&str> {
        let key = format!("{id}");
        if let Some(d) = self.theorem_lists.open_orbit_descriptions.get(&key) {
            return Some(d);
        }
        if Self::token_matches("gr2-family", id) {
            return self
                .theorem_lists
                .open_orbit_descriptions
                .get("gr2-family")
                .map(|s| s.as_str());
        }
        None
    }
}

/// Solve `rank_expr(p) = rank` for the family parameter (affine expressions
/// only, which is all the tables use).
fn solve_rank(rank_expr: &IntOrPoly, param: &Option<ParamSpec>, rank: i64) -> Option<i64> {
    match param {
        None => {
            if rank_expr.eval(0) == rank {
                Some(0)
            } else {
                None
            }
        }
        Some(ps) => match rank_expr {
            IntOrPoly::Int(v) => {
                if *v == rank {
                    Some(ps.min)
                } else {
                    None
                }
            }
            IntOrPoly::Poly { poly } => {
                let c0 = *poly.first().unwrap_or(&0);
                let c1 = *poly.get(1).unwrap_or(&0);
                if poly.len() > 2 && poly[2..].iter().any(|&c| c != 0) {
                    return None;
                }
                if c1 == 0 {
                    return None;
                }
                let num = rank - c0;
                if num % c1 != 0 {
                    return None;
                }
                let p = num / c1;
                if p >= ps.min {
                    Some(p)
                } else {
                    None
                }
            }
        },
    }
}

/// Parse a `X9/P9`-style space token.
pub fn parse_space_token(s: &str) -> Option<SpaceId> {
    let (head, tail) = s.split_once("/P")?;
    let series: Series = head.get(0..1)?.parse().ok()?;
    let rank: usize = head.get(1..)?.parse().ok()?;
    let marked: Vec<usize> = tail
        .split(',')
        .map(|t| t.parse().ok())
        .collect::<Option<Vec<usize>>>()?;
    if !series.rank_ok(rank) {
        return None;
    }
    Some(SpaceId::new(series, rank, marked))
}
