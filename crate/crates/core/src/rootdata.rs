//! Simple root systems, weights, and marked-diagram geometry.
//!
//! Conventions, fixed once and used everywhere:
//!
//! - Simple roots are numbered following Bourbaki. The Cartan matrix entry is
//!   `cartan[i][j] = ⟨α_i, α_j^∨⟩ = 2(α_i, α_j)/(α_j, α_j)`, so for `G_2` with
//!   `α_1` short this gives `[[2, -1], [-3, 2]]`.
//! - Weights are stored in fundamental-weight coordinates, roots in
//!   simple-root coordinates. Under these conventions a simple reflection
//!   `s_i` acts on a weight `w` by `w_k ← w_k - w_i · cartan[i][k]`.
//! - For each positive root we precompute its coroot expanded in simple
//!   coroots, so that every pairing `⟨w, α^∨⟩` is an exact integer dot
//!   product with the fundamental coordinates of `w`.
//!
//! A misnumbered node changes every downstream answer, so the Cartan matrices
//! are spelled out explicitly per series and the construction cross-checks
//! the positive-root counts.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// The series of a simple Lie type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub const ALL: [Series; 7] = [
        Series::A,
        Series::B,
        Series::C,
        Series::D,
        Series::E,
        Series::F,
        Series::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    /// Ranks admitted for the series (Bourbaki bounds, no low-rank aliases).
    pub fn rank_ok(self, rank: usize) -> bool {
        match self {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        }
    }
}

impl std::str::FromStr for Series {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Series::A),
            "B" | "b" => Ok(Series::B),
            "C" | "c" => Ok(Series::C),
            "D" | "d" => Ok(Series::D),
            "E" | "e" => Ok(Series::E),
            "F" | "f" => Ok(Series::F),
            "G" | "g" => Ok(Series::G),
            other => Err(Error::InvalidType(format!("unknown series `{other}`"))),
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The i-th fundamental weight (1-based node index).
    pub fn fundamental(rank: usize, node: usize) -> Self {
        let mut v = vec![0; rank];
        v[node - 1] = 1;
        Weight(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    /// Support restricted to a marked node set (1-based indices).
    pub fn supported_on(&self, marked: &[usize]) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || marked.contains(&(i + 1)))
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A simple root system with its Weyl-invariant pairing data.
#[derive(Debug, Clone)]
pub struct RootSystem {
    series: Series,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    /// Positive roots in simple-root coordinates, sorted by height then lex.
    positive_roots: Vec<Vec<i64>>,
    /// For each positive root, its coroot in simple-coroot coordinates.
    coroots: Vec<Vec<i64>>,
    /// `⟨ρ, α^∨⟩` per positive root (the height of the coroot).
    rho_pairings: Vec<i64>,
}

fn cartan_matrix(series: Series, n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |c: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        c[i - 1][j - 1] = -1;
        c[j - 1][i - 1] = -1;
    };
    match series {
        Series::A => {
            for i in 1..n {
                link(&mut c, i, i + 1);
            }
        }
        Series::B => {
            // α_n is the short root: a single arrow n-1 ⇒ n.
            for i in 1..n - 1 {
                link(&mut c, i, i + 1);
            }
            c[n - 2][n - 1] = -2;
            c[n - 1][n - 2] = -1;
        }
        Series::C => {
            // α_n is the long root: transpose of the B chain end.
            for i in 1..n - 1 {
                link(&mut c, i, i + 1);
            }
            c[n - 2][n - 1] = -1;
            c[n - 1][n - 2] = -2;
        }
        Series::D => {
            for i in 1..n - 1 {
                link(&mut c, i, i + 1);
            }
            // undo the chain's last edge and attach the fork
            c[n - 2][n - 1] = 0;
            c[n - 1][n - 2] = 0;
            link(&mut c, n - 2, n - 1);
            link(&mut c, n - 2, n);
            // For D3 the above would double-link; rebuild explicitly.
            if n == 3 {
                for row in c.iter_mut() {
                    row.fill(0);
                }
                for (i, row) in c.iter_mut().enumerate() {
                    row[i] = 2;
                }
                link(&mut c, 1, 2);
                link(&mut c, 1, 3);
            }
        }
        Series::E => {
            // Node 2 hangs off node 4; the chain is 1-3-4-5-…-n.
            link(&mut c, 1, 3);
            link(&mut c, 3, 4);
            link(&mut c, 2, 4);
            for i in 4..n {
                link(&mut c, i, i + 1);
            }
        }
        Series::F => {
            link(&mut c, 1, 2);
            c[1][2] = -2;
            c[2][1] = -1;
            link(&mut c, 3, 4);
        }
        Series::G => {
            c[0][1] = -1;
            c[1][0] = -3;
        }
    }
    c
}

/// Squared lengths `(α_i, α_i)` of the simple roots, in a scaling where long
/// roots have length squared 2 except for `C` (long 4) and `G2` (long 6).
fn root_norms(series: Series, n: usize) -> Vec<i64> {
    match series {
        Series::A | Series::D | Series::E => vec![2; n],
        Series::B => {
            let mut v = vec![2; n];
            v[n - 1] = 1;
            v
        }
        Series::C => {
            let mut v = vec![2; n];
            v[n - 1] = 4;
            v
        }
        Series::F => vec![2, 2, 1, 1],
        Series::G => vec![2, 6],
    }
}

/// The expected number of positive roots, used as a construction cross-check.
fn expected_positive_count(series: Series, n: usize) -> usize {
    match series {
        Series::A => n * (n + 1) / 2,
        Series::B | Series::C => n * n,
        Series::D => n * (n - 1),
        Series::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Series::F => 24,
        Series::G => 6,
    }
}

impl RootSystem {
    /// Build the root system of the given type, generating the positive roots
    /// by reflection closure from the simple roots.
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        if !series.rank_ok(rank) {
            return Err(Error::InvalidType(format!(
                "rank {rank} out of bounds for series {series}"
            )));
        }
        let cartan = cartan_matrix(series, rank);
        let norms = root_norms(series, rank);
        let lcm = norms.iter().fold(1i64, |a, &b| num_integer::lcm(a, b));
        let symmetrizer: Vec<i64> = norms.iter().map(|&n| lcm / n).collect();
        for i in 0..rank {
            for j in 0..rank {
                debug_assert_eq!(
                    symmetrizer[i] * cartan[i][j],
                    symmetrizer[j] * cartan[j][i],
                    "symmetrizer must symmetrize the Cartan matrix"
                );
            }
        }

        // Closure of the simple roots under all simple reflections; the
        // positive roots are the members with non-negative coordinates.
        let mut all: std::collections::BTreeSet<Vec<i64>> = std::collections::BTreeSet::new();
        let mut queue: Vec<Vec<i64>> = Vec::new();
        for i in 0..rank {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            all.insert(v.clone());
            queue.push(v);
        }
        while let Some(root) = queue.pop() {
            for i in 0..rank {
                let pairing: i64 = (0..rank).map(|j| root[j] * cartan[j][i]).sum();
                let mut refl = root.clone();
                refl[i] -= pairing;
                if all.insert(refl.clone()) {
                    queue.push(refl);
                }
            }
        }
        let mut positive_roots: Vec<Vec<i64>> = all
            .into_iter()
            .filter(|r| r.iter().all(|&c| c >= 0))
            .collect();
        positive_roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        let expected = expected_positive_count(series, rank);
        if positive_roots.len() != expected {
            return Err(Error::Internal(format!(
                "{series}{rank}: reflection closure produced {} positive roots, expected {expected}",
                positive_roots.len()
            )));
        }

        // Coroot coordinates: α^∨ = Σ_j c_j (α_j,α_j)/(α,α) · α_j^∨.
        let mut coroots = Vec::with_capacity(positive_roots.len());
        let mut rho_pairings = Vec::with_capacity(positive_roots.len());
        for root in &positive_roots {
            let mut norm = Rational64::zero();
            for j in 0..rank {
                for k in 0..rank {
                    // (α_j, α_k) = cartan[j][k] · (α_k,α_k)/2
                    let g = Rational64::new(cartan[j][k] * norms[k], 2);
                    norm += Rational64::from_integer(root[j] * root[k]) * g;
                }
            }
            let mut cr = Vec::with_capacity(rank);
            for j in 0..rank {
                let m = Rational64::from_integer(root[j] * norms[j]) / norm;
                if !m.is_integer() {
                    return Err(Error::Internal(format!(
                        "{series}{rank}: non-integral coroot coordinate for root {root:?}"
                    )));
                }
                cr.push(m.to_integer());
            }
            rho_pairings.push(cr.iter().sum());
            coroots.push(cr);
        }

        Ok(RootSystem {
            series,
            rank,
            cartan,
            symmetrizer,
            positive_roots,
            coroots,
            rho_pairings,
        })
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// ρ, the half-sum of positive roots: all fundamental coordinates are 1.
    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    /// `⟨w, α^∨⟩` for the k-th positive root.
    pub fn pairing(&self, w: &Weight, root_index: usize) -> i64 {
        self.coroots[root_index]
            .iter()
            .zip(&w.0)
            .map(|(m, c)| m * c)
            .sum()
    }

    /// Convert a vector in simple-root coordinates to fundamental-weight
    /// coordinates: `fund[k] = Σ_j c_j · cartan[j][k]`.
    pub fn root_to_weight(&self, root: &[i64]) -> Weight {
        Weight(
            (0..self.rank)
                .map(|k| (0..self.rank).map(|j| root[j] * self.cartan[j][k]).sum())
                .collect(),
        )
    }

    /// Convert a weight to simple-root coordinates. The result is rational in
    /// general; the conversion is exact via the inverse Cartan matrix.
    pub fn weight_to_root_coords(&self, w: &Weight) -> Vec<Rational64> {
        // Solve cᵀ · C = w, i.e. Cᵀ x = w, by Gaussian elimination over ℚ.
        let n = self.rank;
        let mut a: Vec<Vec<Rational64>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rational64> = (0..n)
                    .map(|j| Rational64::from_integer(self.cartan[j][i]))
                    .collect();
                row.push(Rational64::from_integer(w.0[i]));
                row
            })
            .collect();
        for col in 0..n {
            let p = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .expect("Cartan matrix is invertible");
            a.swap(col, p);
            let pivot = a[col][col];
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let factor = a[r][col] / pivot;
                    for c in col..=n {
                        let sub = factor * a[col][c];
                        a[r][c] -= sub;
                    }
                }
            }
        }
        (0..n).map(|i| a[i][n] / a[i][i]).collect()
    }

    /// Apply the simple reflection `s_i` (1-based) to a weight.
    pub fn reflect_weight(&self, w: &Weight, i: usize) -> Weight {
        let mut out = w.clone();
        let wi = w.0[i - 1];
        for k in 0..self.rank {
            out.0[k] -= wi * self.cartan[i - 1][k];
        }
        out
    }

    /// dim g = rank + 2 · #positive roots.
    pub fn lie_dim(&self) -> i64 {
        self.rank as i64 + 2 * self.positive_roots.len() as i64
    }

    /// Dimension of the irreducible representation with highest weight `w`,
    /// by the Weyl dimension formula evaluated as two exact big-integer
    /// products with an asserted exact division.
    pub fn weyl_dim(&self, w: &Weight) -> Result<BigInt> {
        if w.rank() != self.rank {
            return Err(Error::Domain(format!(
                "weight rank {} does not match root system rank {}",
                w.rank(),
                self.rank
            )));
        }
        if !w.is_dominant() {
            return Err(Error::Domain(format!("weight {w} is not dominant")));
        }
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (k, _) in self.positive_roots.iter().enumerate() {
            let shifted = self.pairing(w, k) + self.rho_pairings[k];
            num *= BigInt::from(shifted);
            den *= BigInt::from(self.rho_pairings[k]);
        }
        let (q, r) = num_integer::Integer::div_rem(&num, &den);
        if !r.is_zero() {
            return Err(Error::Internal(format!(
                "Weyl dimension product not divisible for weight {w} on {}{}",
                self.series, self.rank
            )));
        }
        if !q.is_positive() {
            return Err(Error::Internal(format!(
                "Weyl dimension non-positive for dominant weight {w}"
            )));
        }
        Ok(q)
    }
}

/// Identity of a marked diagram: series, rank, and the marked node set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct SpaceId {
    pub series: Series,
    pub rank: usize,
    pub marked: Vec<usize>,
}

impl SpaceId {
    pub fn new(series: Series, rank: usize, mut marked: Vec<usize>) -> Self {
        marked.sort_unstable();
        marked.dedup();
        SpaceId {
            series,
            rank,
            marked,
        }
    }

    pub fn single(series: Series, rank: usize, node: usize) -> Self {
        SpaceId::new(series, rank, vec![node])
    }

    pub fn node(&self) -> Option<usize> {
        if self.marked.len() == 1 {
            Some(self.marked[0])
        } else {
            None
        }
    }

    /// True for the projectivized tangent bundle of projective space,
    /// `A_m` with nodes `{1, m}`, m ≥ 2 (the adjoint variety of type A).
    pub fn is_projectivized_tangent(&self) -> bool {
        self.series == Series::A && self.rank >= 2 && self.marked == vec![1, self.rank]
    }

    /// A human-readable geometric name where one is standard.
    pub fn display_name(&self) -> String {
        if self.is_projectivized_tangent() {
            return format!("P(T_P{})", self.rank);
        }
        if let Some(k) = self.node() {
            let n = self.rank;
            match self.series {
                Series::A if k == 1 || k == n => return format!("P{n}"),
                Series::A => return format!("Gr({},{})", k.min(n + 1 - k), n + 1),
                Series::B if k == 1 => return format!("Q{}", 2 * n - 1),
                Series::D if k == 1 => return format!("Q{}", 2 * n - 2),
                Series::B if k == n => return format!("OGr({n},{})", 2 * n + 1),
                Series::D if k == n || k == n - 1 => return format!("S{n}"),
                Series::C if k == 1 => return format!("P{}", 2 * n - 1),
                Series::C if k == n => return format!("Lag({n},{})", 2 * n),
                Series::C => return format!("IGr({k},{})", 2 * n),
                _ => {}
            }
        }
        format!("{self}")
    }
}

impl fmt::Display for SpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}/P", self.series, self.rank)?;
        for (i, k) in self.marked.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

/// A rational homogeneous variety `G/P`, encoded by a marked Dynkin diagram,
/// with the derived geometric data computed on construction.
#[derive(Debug, Clone)]
pub struct HomSpace {
    rs: RootSystem,
    marked: Vec<usize>,
    dimension: usize,
    anticanonical: Weight,
    minimal_ample: Weight,
    fundamental_dim: BigInt,
}

impl HomSpace {
    pub fn new(rs: RootSystem, marked: Vec<usize>) -> Result<Self> {
        let mut marked = marked;
        marked.sort_unstable();
        marked.dedup();
        if marked.is_empty() {
            return Err(Error::InvalidType("marked node set must be non-empty".into()));
        }
        if marked.iter().any(|&k| k == 0 || k > rs.rank()) {
            return Err(Error::InvalidType(format!(
                "marked node out of range 1..={}",
                rs.rank()
            )));
        }
        let outside: Vec<usize> = rs
            .positive_roots()
            .iter()
            .enumerate()
            .filter(|(_, r)| marked.iter().any(|&k| r[k - 1] > 0))
            .map(|(i, _)| i)
            .collect();
        let dimension = outside.len();
        let mut sum = vec![0i64; rs.rank()];
        for &i in &outside {
            for (s, c) in sum.iter_mut().zip(&rs.positive_roots()[i]) {
                *s += c;
            }
        }
        let anticanonical = rs.root_to_weight(&sum);
        for (i, &c) in anticanonical.0.iter().enumerate() {
            let is_marked = marked.contains(&(i + 1));
            if is_marked && c < 1 {
                return Err(Error::Internal(format!(
                    "anticanonical coordinate {c} < 1 on marked node {}",
                    i + 1
                )));
            }
            if !is_marked && c != 0 {
                return Err(Error::Internal(format!(
                    "anticanonical has nonzero coordinate on unmarked node {}",
                    i + 1
                )));
            }
        }
        let mut min_ample = vec![0i64; rs.rank()];
        for &k in &marked {
            min_ample[k - 1] = 1;
        }
        let minimal_ample = Weight(min_ample);
        let fundamental_dim = rs.weyl_dim(&minimal_ample)?;
        if dimension == 0 {
            return Err(Error::Internal("marked diagram has dimension 0".into()));
        }
        if fundamental_dim < BigInt::from(dimension as i64 + 1) {
            return Err(Error::Internal(
                "minimal embedding would be degenerate: dim V_P < dim G/P + 1".into(),
            ));
        }
        Ok(HomSpace {
            rs,
            marked,
            dimension,
            anticanonical,
            minimal_ample,
            fundamental_dim,
        })
    }

    pub fn from_id(id: &SpaceId) -> Result<Self> {
        HomSpace::new(RootSystem::new(id.series, id.rank)?, id.marked.clone())
    }

    pub fn id(&self) -> SpaceId {
        SpaceId::new(self.rs.series(), self.rs.rank(), self.marked.clone())
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn marked(&self) -> &[usize] {
        &self.marked
    }

    pub fn picard_rank(&self) -> usize {
        self.marked.len()
    }

    /// dim G/P: the number of positive roots outside the parabolic.
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// The anticanonical class, i.e. the weight of `det T_{G/P}`.
    pub fn anticanonical(&self) -> &Weight {
        &self.anticanonical
    }

    /// The minimal ample class `L_0` (coordinate 1 on each marked node).
    pub fn minimal_ample(&self) -> &Weight {
        &self.minimal_ample
    }

    /// dim V_P = h⁰(G/P, L_0).
    pub fn fundamental_dim(&self) -> &BigInt {
        &self.fundamental_dim
    }

    pub fn lie_dim(&self) -> i64 {
        self.rs.lie_dim()
    }

    /// Ample test for a Picard class supported on the marked nodes.
    pub fn is_ample(&self, w: &Weight) -> bool {
        w.supported_on(&self.marked) && self.marked.iter().all(|&k| w.0[k - 1] > 0)
    }
}

/// The canonical presentation of a `G/P` together with its automorphism data.
///
/// A handful of homogeneous varieties admit more than one homogeneous
/// presentation; the canonical one is the presentation whose group realizes
/// the full connected automorphism group (Demazure's theorem). Everything in
/// the classification is normalized through this table first.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub canonical: HomSpace,
    /// Marked diagrams known to present the same variety, other than the
    /// canonical one.
    pub aliases: Vec<SpaceId>,
    /// dim H⁰(G/P, T) = dim g of the canonical presentation.
    pub aut_dim: i64,
    /// Whether the *given* presentation already has H⁰(T) ≅ g.
    pub aut_is_g: bool,
}

/// One rewriting step of the coincidence table. The list is hand-curated
/// data, not inference; sources are classical:
///
/// - diagram automorphisms (type A duality, the half-spin swap of D_n,
///   Spin_8 triality, the E6 involution) relate markings of one diagram;
/// - the exceptional-automorphism families are Demazure's: P^{2l-1} presented
///   as C_l/P_1, the 5-dimensional quadric as G_2/P_1, and the odd spinor
///   variety B_l/P_l as the half-spin variety D_{l+1}/P_{l+1};
/// - low-rank isogenies: Gr(2,4) = Q^4 (Pluecker), sp_4 = so_5, sl_4 = so_6.
fn rewrite_once(id: &SpaceId) -> Option<SpaceId> {
    let (series, rank) = (id.series, id.rank);
    let k = id.node()?;
    let single = |s, r, n| Some(SpaceId::single(s, r, n));
    match series {
        // Type A duality Gr(k, n+1) = Gr(n+1-k, n+1).
        Series::A if k > rank + 1 - k => single(Series::A, rank, rank + 1 - k),
        // P(C^2l) has automorphism group PGL_2l, not PSp_2l (Demazure).
        Series::C if k == 1 => single(Series::A, 2 * rank - 1, 1),
        // Lagrangian Gr(2,4) is the 3-dimensional quadric (sp_4 = so_5).
        Series::C if rank == 2 && k == 2 => single(Series::B, 2, 1),
        // Odd spinor variety = even half-spin variety (Demazure).
        Series::B if k == rank => single(Series::D, rank + 1, rank + 1),
        // Spin_8 triality: nodes 1, 3, 4 of D4 are equivalent.
        Series::D if rank == 4 && (k == 3 || k == 4) => single(Series::D, 4, 1),
        // Half-spin swap: take the last node as canonical.
        Series::D if rank >= 5 && k == rank - 1 => single(Series::D, rank, rank),
        // so_6 = sl_4: D3/P1 is Gr(2,4), D3/P2 and D3/P3 are P^3.
        Series::D if rank == 3 && (k == 2 || k == 3) => single(Series::A, 3, 1),
        // Gr(2,4) is a quadric in P^5; the quadric form is canonical.
        Series::A if rank == 3 && k == 2 => single(Series::D, 3, 1),
        // The 5-dimensional quadric presented as G2/P1 (Demazure).
        Series::G if k == 1 => single(Series::B, 3, 1),
        // E6 outer automorphism.
        Series::E if rank == 6 && k == 6 => single(Series::E, 6, 1),
        Series::E if rank == 6 && k == 5 => single(Series::E, 6, 3),
        _ => None,
    }
}

/// Known non-canonical presentations of a canonical marked diagram (the
/// inverse of the rewrite table, restricted to admissible ranks).
fn known_aliases(canonical: &SpaceId) -> Vec<SpaceId> {
    let mut out = Vec::new();
    let (series, rank) = (canonical.series, canonical.rank);
    let Some(k) = canonical.node() else {
        return out;
    };
    let mut push = |s: Series, r: usize, n: usize| {
        if s.rank_ok(r) {
            out.push(SpaceId::single(s, r, n));
        }
    };
    if series == Series::A && k < rank + 1 - k {
        push(Series::A, rank, rank + 1 - k);
    }
    if series == Series::A && k == 1 {
        push(Series::A, rank, rank);
        if rank % 2 == 1 && rank >= 3 {
            push(Series::C, (rank + 1) / 2, 1);
        }
        if rank == 3 {
            push(Series::D, 3, 2);
            push(Series::D, 3, 3);
            push(Series::B, 2, 2);
        }
    }
    if series == Series::B && rank == 3 && k == 1 {
        push(Series::G, 2, 1);
    }
    if series == Series::B && rank == 2 && k == 1 {
        push(Series::C, 2, 2);
    }
    if series == Series::D && k == rank && rank >= 5 {
        push(Series::D, rank, rank - 1);
        push(Series::B, rank - 1, rank - 1);
    }
    if series == Series::D && rank == 4 && k == 1 {
        push(Series::D, 4, 3);
        push(Series::D, 4, 4);
        push(Series::B, 3, 3);
    }
    if series == Series::D && rank == 3 && k == 1 {
        push(Series::A, 3, 2);
    }
    if series == Series::E && rank == 6 && k == 1 {
        push(Series::E, 6, 6);
    }
    if series == Series::E && rank == 6 && k == 3 {
        push(Series::E, 6, 5);
    }
    out.sort();
    out.dedup();
    out.retain(|a| a != canonical);
    out
}

/// Normalize a marked diagram to the presentation with the full automorphism
/// group. Scope: Picard rank one, plus the projectivized tangent bundles of
/// projective spaces (the one Picard-rank-2 family the classification needs).
pub fn normalize(hs: &HomSpace) -> Result<Presentation> {
    let id = hs.id();
    if id.node().is_none() && !id.is_projectivized_tangent() {
        return Err(Error::NotImplemented(format!(
            "normalization of {id} (supported: Picard rank 1 and P(T_Pm))"
        )));
    }
    let mut canon = id.clone();
    let mut steps = 0;
    while let Some(next) = rewrite_once(&canon) {
        canon = next;
        steps += 1;
        if steps > 8 {
            return Err(Error::Internal("alias rewriting did not terminate".into()));
        }
    }
    let canonical = if canon == id {
        hs.clone()
    } else {
        HomSpace::from_id(&canon)?
    };
    let aut_dim = canonical.lie_dim();
    let aut_is_g = hs.lie_dim() == aut_dim;
    Ok(Presentation {
        aliases: known_aliases(&canon),
        canonical,
        aut_dim,
        aut_is_g,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(series: Series, rank: usize) -> RootSystem {
        RootSystem::new(series, rank).unwrap()
    }

    #[test]
    fn reflection_closure_counts() {
        assert_eq!(rs(Series::A, 2).positive_roots().len(), 3);
        assert_eq!(rs(Series::G, 2).positive_roots().len(), 6);
        assert_eq!(rs(Series::F, 4).positive_roots().len(), 24);
        assert_eq!(rs(Series::E, 6).positive_roots().len(), 36);
        assert_eq!(rs(Series::E, 7).positive_roots().len(), 63);
        assert_eq!(rs(Series::E, 8).positive_roots().len(), 120);
        assert_eq!(rs(Series::B, 5).positive_roots().len(), 25);
        assert_eq!(rs(Series::C, 4).positive_roots().len(), 16);
        assert_eq!(rs(Series::D, 5).positive_roots().len(), 20);
    }

    #[test]
    fn g2_cartan_matrix() {
        let g2 = rs(Series::G, 2);
        assert_eq!(g2.cartan(), &[vec![2, -1], vec![-3, 2]]);
        assert_eq!(g2.symmetrizer(), &[3, 1]);
    }

    #[test]
    fn rho_is_all_ones_and_pairs_to_height() {
        let e6 = rs(Series::E, 6);
        assert_eq!(e6.rho(), Weight(vec![1; 6]));
        // highest root of E6 pairs with rho to the Coxeter number minus 1
        let h: i64 = *e6.rho_pairings.iter().max().unwrap();
        assert_eq!(h, 11);
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(RootSystem::new(Series::E, 5).is_err());
        assert!(RootSystem::new(Series::D, 2).is_err());
        assert!(RootSystem::new(Series::F, 3).is_err());
        assert!(RootSystem::new(Series::B, 1).is_err());
    }

    #[test]
    fn weyl_dim_fundamental_examples() {
        // a few values cross-checked against classical dimension tables
        assert_eq!(rs(Series::A, 4).weyl_dim(&Weight::fundamental(4, 1)).unwrap(), BigInt::from(5));
        assert_eq!(rs(Series::E, 7).weyl_dim(&Weight::fundamental(7, 7)).unwrap(), BigInt::from(56));
        assert_eq!(rs(Series::E, 6).weyl_dim(&Weight::fundamental(6, 1)).unwrap(), BigInt::from(27));
        assert_eq!(rs(Series::D, 5).weyl_dim(&Weight::fundamental(5, 5)).unwrap(), BigInt::from(16));
        assert_eq!(rs(Series::G, 2).weyl_dim(&Weight::fundamental(2, 1)).unwrap(), BigInt::from(7));
        assert_eq!(rs(Series::F, 4).weyl_dim(&Weight::fundamental(4, 4)).unwrap(), BigInt::from(26));
        assert_eq!(rs(Series::B, 4).weyl_dim(&Weight::fundamental(4, 4)).unwrap(), BigInt::from(16));
        // trivial representation
        assert_eq!(rs(Series::E, 8).weyl_dim(&Weight::zero(8)).unwrap(), BigInt::one());
        // adjoint of E8
        assert_eq!(rs(Series::E, 8).weyl_dim(&Weight::fundamental(8, 8)).unwrap(), BigInt::from(248));
    }

    #[test]
    fn weyl_dim_rejects_non_dominant() {
        let a2 = rs(Series::A, 2);
        assert!(a2.weyl_dim(&Weight(vec![-1, 0])).is_err());
    }

    #[test]
    fn lie_dims() {
        assert_eq!(rs(Series::E, 6).lie_dim(), 78);
        assert_eq!(rs(Series::D, 5).lie_dim(), 45);
        assert_eq!(rs(Series::A, 1).lie_dim(), 3);
        assert_eq!(rs(Series::E, 8).lie_dim(), 248);
        assert_eq!(rs(Series::F, 4).lie_dim(), 52);
        assert_eq!(rs(Series::G, 2).lie_dim(), 14);
    }

    #[test]
    fn weight_root_coordinate_round_trip() {
        for (series, rank) in [(Series::B, 3), (Series::G, 2), (Series::F, 4), (Series::E, 6)] {
            let r = rs(series, rank);
            for root in r.positive_roots() {
                let w = r.root_to_weight(root);
                let back = r.weight_to_root_coords(&w);
                for (c, b) in root.iter().zip(back) {
                    assert_eq!(Rational64::from_integer(*c), b);
                }
            }
        }
    }

    #[test]
    fn homspace_dimensions() {
        let gr25 = HomSpace::from_id(&SpaceId::single(Series::A, 4, 2)).unwrap();
        assert_eq!(gr25.dimension(), 6);
        assert_eq!(gr25.fundamental_dim(), &BigInt::from(10));
        assert_eq!(gr25.anticanonical(), &Weight(vec![0, 5, 0, 0]));

        let s5 = HomSpace::from_id(&SpaceId::single(Series::D, 5, 5)).unwrap();
        assert_eq!(s5.dimension(), 10);
        assert_eq!(s5.fundamental_dim(), &BigInt::from(16));

        let e6 = HomSpace::from_id(&SpaceId::single(Series::E, 6, 1)).unwrap();
        assert_eq!(e6.dimension(), 16);
        assert_eq!(e6.fundamental_dim(), &BigInt::from(27));
    }

    #[test]
    fn anticanonical_projective_space_and_pt() {
        // P^n has index n+1
        let pn = HomSpace::from_id(&SpaceId::single(Series::A, 6, 1)).unwrap();
        assert_eq!(pn.anticanonical(), &Weight(vec![7, 0, 0, 0, 0, 0]));
        // P(T_Pm) has anticanonical class (m, 0, …, 0, m)
        let pt = HomSpace::from_id(&SpaceId::new(Series::A, 4, vec![1, 4])).unwrap();
        assert_eq!(pt.anticanonical(), &Weight(vec![4, 0, 0, 4]));
        assert_eq!(pt.dimension(), 7);
    }

    #[test]
    fn normalize_coincidences() {
        let b6 = HomSpace::from_id(&SpaceId::single(Series::B, 6, 6)).unwrap();
        let p = normalize(&b6).unwrap();
        assert_eq!(p.canonical.id(), SpaceId::single(Series::D, 7, 7));
        assert_eq!(p.aut_dim, 91);
        assert!(!p.aut_is_g);

        let c3 = HomSpace::from_id(&SpaceId::single(Series::C, 3, 1)).unwrap();
        let p = normalize(&c3).unwrap();
        assert_eq!(p.canonical.id(), SpaceId::single(Series::A, 5, 1));
        assert!(!p.aut_is_g);

        let s5 = HomSpace::from_id(&SpaceId::single(Series::D, 5, 5)).unwrap();
        let p = normalize(&s5).unwrap();
        assert_eq!(p.canonical.id(), s5.id());
        assert!(p.aut_is_g);
        assert_eq!(p.aut_dim, 45);

        // chains resolve fully: B3/P3 -> D4/P4 -> Q6, B2/P2 -> D3/P3 -> P3
        let b3 = HomSpace::from_id(&SpaceId::single(Series::B, 3, 3)).unwrap();
        assert_eq!(normalize(&b3).unwrap().canonical.id(), SpaceId::single(Series::D, 4, 1));
        let b2 = HomSpace::from_id(&SpaceId::single(Series::B, 2, 2)).unwrap();
        assert_eq!(normalize(&b2).unwrap().canonical.id(), SpaceId::single(Series::A, 3, 1));

        // Gr(2,4) is the Pluecker quadric
        let gr24 = HomSpace::from_id(&SpaceId::single(Series::A, 3, 2)).unwrap();
        let p = normalize(&gr24).unwrap();
        assert_eq!(p.canonical.id(), SpaceId::single(Series::D, 3, 1));
        assert!(p.aut_is_g); // sl_4 = so_6
    }

    #[test]
    fn normalize_is_idempotent() {
        for series in Series::ALL {
            for rank in 1..=8 {
                if !series.rank_ok(rank) {
                    continue;
                }
                for node in 1..=rank {
                    let hs = HomSpace::from_id(&SpaceId::single(series, rank, node)).unwrap();
                    let p = normalize(&hs).unwrap();
                    let again = normalize(&p.canonical).unwrap();
                    assert_eq!(p.canonical.id(), again.canonical.id(), "{}", hs.id());
                    assert!(again.aut_is_g, "canonical form of {} must satisfy aut_is_g", hs.id());
                }
            }
        }
    }

    #[test]
    fn aliases_listed_for_spinor_coincidence() {
        let d7 = HomSpace::from_id(&SpaceId::single(Series::D, 7, 7)).unwrap();
        let p = normalize(&d7).unwrap();
        assert!(p.aliases.contains(&SpaceId::single(Series::B, 6, 6)));
        assert!(p.aliases.contains(&SpaceId::single(Series::D, 7, 6)));
    }

    #[test]
    fn normalize_rejects_unsupported_markings() {
        let flag = HomSpace::from_id(&SpaceId::new(Series::B, 3, vec![1, 2])).unwrap();
        assert!(matches!(normalize(&flag), Err(Error::NotImplemented(_))));
    }

    #[test]
    fn display_names() {
        assert_eq!(SpaceId::single(Series::D, 5, 5).display_name(), "S5");
        assert_eq!(SpaceId::single(Series::A, 4, 2).display_name(), "Gr(2,5)");
        assert_eq!(SpaceId::single(Series::C, 3, 3).display_name(), "Lag(3,6)");
        assert_eq!(SpaceId::single(Series::B, 3, 1).display_name(), "Q5");
        assert_eq!(SpaceId::new(Series::A, 2, vec![1, 2]).display_name(), "P(T_P2)");
    }
}
