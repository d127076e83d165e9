//! Line bundle cohomology on `G/P` via the ρ-shifted Weyl group action.
//!
//! A Picard class supported on the marked nodes extends by zero to a weight
//! of the full lattice; its cohomology is computed by regularizing `w + ρ`
//! with simple reflections. Singularity (a zero coordinate at any step) means
//! every cohomology group vanishes; otherwise the cohomology is concentrated
//! in a single degree equal to the number of reflections used, with the
//! regularized dominant weight as highest weight.
//!
//! Singularity detection happens *during* the reflection walk, never by
//! enumerating the Weyl group — for E8 the group is far too large, while the
//! walk is bounded by the number of positive roots.

use crate::rootdata::{HomSpace, RootSystem, Weight};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::HashMap;
use std::sync::Mutex;

/// Result of regularizing `w + ρ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regularized {
    /// `w + ρ` lies on a wall of the dominant chamber.
    Singular,
    /// `w + ρ` is regular; `length` simple reflections bring it to the
    /// dominant chamber, and `dominant` is the ρ-shift-removed result.
    Regular { length: usize, dominant: Weight },
}

/// Cohomology of an equivariant line bundle: zero, or one irreducible
/// representation concentrated in a single degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cohomology {
    Zero,
    Concentrated {
        degree: usize,
        highest_weight: Weight,
        dim: BigInt,
    },
}

impl Cohomology {
    pub fn h0(&self) -> BigInt {
        match self {
            Cohomology::Concentrated { degree: 0, dim, .. } => dim.clone(),
            _ => BigInt::zero(),
        }
    }
}

/// Regularize `w + ρ` by simple reflections, counting steps.
///
/// The choice of which negative coordinate to reflect at is immaterial: the
/// returned length equals the number of positive coroots made negative by
/// `w + ρ`, independent of the order. `reflect_order` lets tests drive the
/// walk in scrambled orders to exercise exactly that.
pub fn dot_regularize(rs: &RootSystem, w: &Weight) -> Regularized {
    dot_regularize_with(rs, w, |coords| {
        coords.iter().position(|&c| c < 0)
    })
}

pub fn dot_regularize_with<F>(rs: &RootSystem, w: &Weight, mut pick: F) -> Regularized
where
    F: FnMut(&[i64]) -> Option<usize>,
{
    let rank = rs.rank();
    let mut v = Weight((0..rank).map(|i| w.0[i] + 1).collect());
    let max_steps = rs.positive_roots().len() + 1;
    let mut length = 0usize;
    for _ in 0..=max_steps {
        if v.0.iter().any(|&c| c == 0) {
            return Regularized::Singular;
        }
        match pick(&v.0) {
            None => {
                let dominant = Weight(v.0.iter().map(|c| c - 1).collect());
                return Regularized::Regular { length, dominant };
            }
            Some(i) => {
                v = rs.reflect_weight(&v, i + 1);
                length += 1;
            }
        }
    }
    unreachable!("regularization walk exceeded the longest Weyl element");
}

/// Number of positive coroots on which `w + ρ` is negative. Independent of
/// the reflection walk; equals its step count for regular weights.
pub fn inversion_count(rs: &RootSystem, w: &Weight) -> usize {
    let shifted = Weight(w.0.iter().map(|c| c + 1).collect());
    (0..rs.positive_roots().len())
        .filter(|&k| rs.pairing(&shifted, k) < 0)
        .count()
}

/// Full cohomology of the line bundle with the given Picard class.
pub fn line_cohomology(space: &HomSpace, weight: &Weight) -> Result<Cohomology> {
    if !weight.supported_on(space.marked()) {
        return Err(Error::Domain(format!(
            "class {weight} is not supported on the marked nodes of {}",
            space.id()
        )));
    }
    let rs = space.root_system();
    match dot_regularize(rs, weight) {
        Regularized::Singular => Ok(Cohomology::Zero),
        Regularized::Regular { length, dominant } => {
            let dim = rs.weyl_dim(&dominant)?;
            if length > space.dimension() {
                return Err(Error::Internal(format!(
                    "cohomological degree {length} exceeds dim {} of {}",
                    space.dimension(),
                    space.id()
                )));
            }
            Ok(Cohomology::Concentrated {
                degree: length,
                highest_weight: dominant,
                dim,
            })
        }
    }
}

/// Euler characteristic of the line bundle: `0` or `(-1)^degree · dim`.
pub fn euler_char_line(space: &HomSpace, weight: &Weight) -> Result<BigInt> {
    Ok(match line_cohomology(space, weight)? {
        Cohomology::Zero => BigInt::zero(),
        Cohomology::Concentrated { degree, dim, .. } => {
            if degree % 2 == 0 {
                dim
            } else {
                -dim
            }
        }
    })
}

/// An equivariant line bundle class on a fixed `G/P`.
#[derive(Debug, Clone)]
pub struct LineBundle<'a> {
    pub space: &'a HomSpace,
    pub weight: Weight,
}

impl<'a> LineBundle<'a> {
    pub fn new(space: &'a HomSpace, weight: Weight) -> Result<Self> {
        if !weight.supported_on(space.marked()) {
            return Err(Error::Domain(format!(
                "class {weight} is not supported on the marked nodes of {}",
                space.id()
            )));
        }
        Ok(LineBundle { space, weight })
    }

    pub fn is_ample(&self) -> bool {
        self.space.is_ample(&self.weight)
    }

    pub fn cohomology(&self) -> Result<Cohomology> {
        line_cohomology(self.space, &self.weight)
    }

    pub fn euler_char(&self) -> Result<BigInt> {
        euler_char_line(self.space, &self.weight)
    }
}

/// A memoizing wrapper for the enumerator. Purity first, speed second: the
/// core functions stay cache-free, and this layer is keyed by root system
/// identity plus the full weight.
#[derive(Debug, Default)]
pub struct CohomologyMemo {
    map: Mutex<HashMap<(char, usize, Vec<i64>), Cohomology>>,
}

impl CohomologyMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn euler_char(&self, space: &HomSpace, weight: &Weight) -> Result<BigInt> {
        let key = (
            space.root_system().series().letter(),
            space.root_system().rank(),
            weight.0.clone(),
        );
        if let Some(c) = self.map.lock().unwrap().get(&key) {
            return Ok(signed_dim(c));
        }
        let c = line_cohomology(space, weight)?;
        let val = signed_dim(&c);
        self.map.lock().unwrap().insert(key, c);
        Ok(val)
    }

    pub fn cohomology(&self, space: &HomSpace, weight: &Weight) -> Result<Cohomology> {
        let key = (
            space.root_system().series().letter(),
            space.root_system().rank(),
            weight.0.clone(),
        );
        if let Some(c) = self.map.lock().unwrap().get(&key) {
            return Ok(c.clone());
        }
        let c = line_cohomology(space, weight)?;
        self.map.lock().unwrap().insert(key, c.clone());
        Ok(c)
    }
}

fn signed_dim(c: &Cohomology) -> BigInt {
    match c {
        Cohomology::Zero => BigInt::zero(),
        Cohomology::Concentrated { degree, dim, .. } => {
            if degree % 2 == 0 {
                dim.clone()
            } else {
                -dim.clone()
            }
        }
    }
}
