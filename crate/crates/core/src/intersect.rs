//! Koszul-resolution computations for complete intersections in `G/P`.
//!
//! For `X = D_1 ∩ … ∩ D_r` the structure sheaf is resolved by the twists
//! `O(-Σ_{i∈S} D_i)` over subsets `S`, so restricted section counts are
//! alternating sums of line-bundle Euler characteristics. An `exact` flag
//! tracks whether the vanishing chain certifies the alternating sum as a
//! literal `h⁰`; when it does not, callers must downgrade to a χ-only claim
//! rather than overstate.

use crate::bwb::{self, Cohomology, CohomologyMemo};
use crate::rootdata::{self, HomSpace, Series, Weight};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Hard cap on the Koszul subset enumeration. Every reachable classification
/// case has r ≤ 5; the enumeration is 2^r.
pub const MAX_CODIM: usize = 20;

/// A complete-intersection specification: an ambient `G/P` and ample divisor
/// classes.
#[derive(Debug, Clone)]
pub struct CiSpec {
    space: HomSpace,
    divisors: Vec<Weight>,
}

impl CiSpec {
    pub fn new(space: HomSpace, divisors: Vec<Weight>) -> Result<Self> {
        if divisors.is_empty() {
            return Err(Error::InvalidType("divisor list must be non-empty".into()));
        }
        if divisors.len() > MAX_CODIM {
            return Err(Error::InvalidType(format!(
                "codimension {} exceeds the supported bound {MAX_CODIM}",
                divisors.len()
            )));
        }
        for d in &divisors {
            if !space.is_ample(d) {
                return Err(Error::InvalidType(format!(
                    "divisor class {d} is not ample on {}",
                    space.id()
                )));
            }
        }
        if divisors.len() >= space.dimension() {
            return Err(Error::InvalidType(format!(
                "codimension {} is not smaller than dim {} = {}",
                divisors.len(),
                space.id(),
                space.dimension()
            )));
        }
        Ok(CiSpec { space, divisors })
    }

    /// Convenience: `r` divisors all equal to the minimal ample class.
    pub fn linear(space: HomSpace, r: usize) -> Result<Self> {
        let l0 = space.minimal_ample().clone();
        CiSpec::new(space, vec![l0; r])
    }

    pub fn space(&self) -> &HomSpace {
        &self.space
    }

    pub fn divisors(&self) -> &[Weight] {
        &self.divisors
    }

    pub fn codim(&self) -> usize {
        self.divisors.len()
    }

    /// The total class `D = Σ D_i`.
    pub fn total(&self) -> Weight {
        let mut t = Weight::zero(self.space.root_system().rank());
        for d in &self.divisors {
            t = &t + d;
        }
        t
    }

    pub fn dim_x(&self) -> usize {
        self.space.dimension() - self.codim()
    }
}

/// Whether `K_{G/P}^* ⊗ O(-Σ D_i)` is ample, the standing positivity
/// assumption of the whole classification (it forces `X` to be Fano).
pub fn is_fano_pair(spec: &CiSpec) -> bool {
    let rest = &(spec.space().anticanonical() - &spec.total());
    spec.space()
        .marked()
        .iter()
        .all(|&k| rest.0[k - 1] > 0)
}

/// A section count together with its exactness certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionCount {
    pub value: BigInt,
    /// True when every Koszul term's cohomology vanishes high enough for the
    /// alternating sum to be a literal `h⁰`; false when only the Euler
    /// characteristic is certified.
    pub exact: bool,
}

/// `h⁰(X, O(m)|_X)` via the Koszul resolution, for ample `m`.
///
/// The subset enumeration is deliberately the plain `2^r` one; the largest
/// reachable case has `r = 5` and clarity wins over cleverness here.
pub fn restricted_sections(spec: &CiSpec, m: &Weight) -> Result<SectionCount> {
    restricted_sections_memo(spec, m, None)
}

pub fn restricted_sections_memo(
    spec: &CiSpec,
    m: &Weight,
    memo: Option<&CohomologyMemo>,
) -> Result<SectionCount> {
    if !spec.space().is_ample(m) {
        return Err(Error::Domain(format!(
            "restricted_sections requires an ample class, got {m}"
        )));
    }
    if !is_fano_pair(spec) {
        return Err(Error::FanoViolation(format!(
            "K^* ⊗ O(-D) is not ample on {}",
            spec.space().id()
        )));
    }
    let r = spec.codim();
    let mut value = BigInt::zero();
    let mut exact = true;
    for mask in 0u32..(1u32 << r) {
        let mut w = m.clone();
        for (i, d) in spec.divisors().iter().enumerate() {
            if mask & (1 << i) != 0 {
                w = &w - d;
            }
        }
        let k = mask.count_ones() as usize;
        let coh = match memo {
            Some(memo) => memo.cohomology(spec.space(), &w)?,
            None => bwb::line_cohomology(spec.space(), &w)?,
        };
        match &coh {
            Cohomology::Zero => {}
            Cohomology::Concentrated { degree, dim, .. } => {
                // Vanishing chain: the |S| = k term may contribute to h^q(X)
                // for q ≥ k, so concentration in degree ≤ k-1 (degree 0 for
                // the k = 0 term) keeps the alternating sum equal to h⁰.
                let bound = if k == 0 { 0 } else { k - 1 };
                if *degree > bound {
                    exact = false;
                }
                if k % 2 == 0 {
                    value += if degree % 2 == 0 { dim.clone() } else { -dim.clone() };
                } else {
                    value -= if degree % 2 == 0 { dim.clone() } else { -dim.clone() };
                }
            }
        }
    }
    if exact && value.is_negative() {
        return Err(Error::Internal(format!(
            "exact section count came out negative ({value}) for m = {m}"
        )));
    }
    Ok(SectionCount { value, exact })
}

/// Whether `G/P` satisfies the standing condition ruling out the exceptional
/// cases of the twisted-tangent vanishing theorem: the canonical presentation
/// must not be a projective space, a quadric, an isotropic-plane Grassmannian
/// `C_l/P_2`, `F_4/P_4`, or a projectivized tangent bundle `P(T_Pm)`.
pub fn clubsuit(hs: &HomSpace) -> Result<bool> {
    let p = rootdata::normalize(hs)?;
    let id = p.canonical.id();
    if id.is_projectivized_tangent() {
        return Ok(false);
    }
    let Some(k) = id.node() else {
        return Ok(true);
    };
    let bad = match id.series {
        Series::A => k == 1,
        Series::B | Series::D => k == 1,
        Series::C => k == 2 && id.rank >= 3,
        Series::F => k == 4,
        _ => false,
    };
    Ok(!bad)
}

/// Exception table for `H^1(G/P, T ⊗ L^*) ≠ 0` with `L` ample, quoted from
/// the classification of twisted tangent cohomology on rational homogeneous
/// spaces. Encoded as data and matched after normalization; the two product
/// rows (P1 × P1 and P1 × Pn) have non-simple groups and are unreachable
/// through [`HomSpace`], but are kept in the table for completeness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TangentException {
    /// P^1 with O(k), k ≥ 4
    P1HighDegree,
    /// P^2 with O(3)
    P2Cubic,
    /// Q^n with O(2), n ≥ 3
    QuadricDegree2,
    /// C_l/P2 with O(1)
    IsotropicGrassmannianMinimal,
    /// F4/P4 with O(1)
    F4Minimal,
    /// P(T_Pm) with O(1,1)
    ProjectivizedTangentMinimal,
    /// P1 × P1 with O(k,2), k ≥ 2 (non-simple, unreachable here)
    P1xP1,
    /// P1 × Pn with O(k,1), k ≥ 2 (non-simple, unreachable here)
    P1xPn,
}

pub const TANGENT_EXCEPTIONS: [TangentException; 8] = [
    TangentException::P1HighDegree,
    TangentException::P2Cubic,
    TangentException::QuadricDegree2,
    TangentException::IsotropicGrassmannianMinimal,
    TangentException::F4Minimal,
    TangentException::ProjectivizedTangentMinimal,
    TangentException::P1xP1,
    TangentException::P1xPn,
];

/// Whether `(G/P, L)` matches a row of the exception table, after
/// normalization. `L` must be ample.
pub fn ms_exception(hs: &HomSpace, l: &Weight) -> Result<bool> {
    if !hs.is_ample(l) {
        return Err(Error::Domain(format!("{l} is not ample on {}", hs.id())));
    }
    let p = rootdata::normalize(hs)?;
    let id = p.canonical.id();
    if id.is_projectivized_tangent() {
        // O(1,1) transported through normalization is the minimal class.
        return Ok(l == hs.minimal_ample());
    }
    let Some(k) = id.node() else {
        return Ok(false);
    };
    let deg = l.0[hs.marked()[0] - 1];
    let hit = match (id.series, id.rank, k) {
        (Series::A, 1, 1) => deg >= 4,
        (Series::A, 2, 1) => deg == 3,
        (Series::B, n, 1) if n >= 2 => deg == 2,
        (Series::D, n, 1) if n >= 3 => deg == 2,
        (Series::C, n, 2) if n >= 3 => deg == 1,
        (Series::F, 4, 4) => deg == 1,
        _ => false,
    };
    Ok(hit)
}

/// `χ(X, T_X) = h⁰(T_X) − h¹(T_X)`, by the Euler-characteristic identity
/// `dim g − Σ_i h⁰(X, O(D_i)|_X)` valid on spaces satisfying the standing
/// condition with full automorphism presentation; on `P(T_Pm)` the variant
/// `dim g + s − Σ_i h⁰` applies, where `s` counts divisors of bidegree (1,1).
pub fn chi_tangent(spec: &CiSpec) -> Result<BigInt> {
    chi_tangent_memo(spec, None)
}

pub fn chi_tangent_memo(spec: &CiSpec, memo: Option<&CohomologyMemo>) -> Result<BigInt> {
    if !is_fano_pair(spec) {
        return Err(Error::FanoViolation(format!(
            "K^* ⊗ O(-D) is not ample on {}",
            spec.space().id()
        )));
    }
    let pres = rootdata::normalize(spec.space())?;
    let id = spec.space().id();
    if id.is_projectivized_tangent() {
        let one_one = spec.space().minimal_ample();
        let s = spec.divisors().iter().filter(|d| *d == one_one).count() as i64;
        let mut chi = BigInt::from(pres.aut_dim + s);
        for d in spec.divisors() {
            chi -= restricted_sections_memo(spec, d, memo)?.value;
        }
        return Ok(chi);
    }
    if !pres.aut_is_g {
        return Err(Error::Hypothesis(format!(
            "{} does not realize its automorphism group; re-express as {} first",
            id,
            pres.canonical.id()
        )));
    }
    if !clubsuit(spec.space())? {
        return Err(Error::Hypothesis(format!(
            "{} is an exceptional case of the twisted-tangent vanishing; \
             reduce to its canonical ambient before computing χ",
            id
        )));
    }
    let mut chi = BigInt::from(pres.aut_dim);
    for d in spec.divisors() {
        chi -= restricted_sections_memo(spec, d, memo)?.value;
    }
    Ok(chi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::SpaceId;

    fn space(series: Series, rank: usize, node: usize) -> HomSpace {
        HomSpace::from_id(&SpaceId::single(series, rank, node)).unwrap()
    }

    fn pt(m: usize) -> HomSpace {
        HomSpace::from_id(&SpaceId::new(Series::A, m, vec![1, m])).unwrap()
    }

    #[test]
    fn fano_pair_examples() {
        let gr25 = space(Series::A, 4, 2);
        let one = CiSpec::linear(gr25.clone(), 1).unwrap();
        assert!(is_fano_pair(&one));

        // r = m hyperplanes of bidegree (1,1) on P(T_Pm) fail the bound
        let z = pt(3);
        let spec = CiSpec::linear(z.clone(), 3).unwrap();
        assert!(!is_fano_pair(&spec));
        let spec = CiSpec::linear(z, 2).unwrap();
        assert!(is_fano_pair(&spec));

        // the anticanonical hypersurface of P^2 is excluded (3 - 3 = 0)
        let p2 = space(Series::A, 2, 1);
        let cubic = CiSpec::new(p2, vec![Weight(vec![3, 0])]).unwrap();
        assert!(!is_fano_pair(&cubic));
    }

    #[test]
    fn sections_on_gr27() {
        // one minimal divisor on Gr(2,7); restrict the minimal bundle itself
        let gr27 = space(Series::A, 6, 2);
        let spec = CiSpec::linear(gr27, 1).unwrap();
        let m = spec.space().minimal_ample().clone();
        let s = restricted_sections(&spec, &m).unwrap();
        assert_eq!(s.value, BigInt::from(20));
        assert!(s.exact);
    }

    #[test]
    fn sections_of_quadric_hypersurface() {
        // degree-2 hypersurface in P^6, restrict O(2): binom(8,2) - 1 = 27
        let p6 = space(Series::A, 6, 1);
        let two = Weight(vec![2, 0, 0, 0, 0, 0]);
        let spec = CiSpec::new(p6, vec![two.clone()]).unwrap();
        let s = restricted_sections(&spec, &two).unwrap();
        assert_eq!(s.value, BigInt::from(27));
        assert!(s.exact);
    }

    #[test]
    fn sections_with_singular_correction_term() {
        // One quadric divisor on P^5 and m = O(1): the correction term
        // O(1-2) is singular, so the count equals weyl_dim(m) = 6.
        let p5 = space(Series::A, 5, 1);
        let spec = CiSpec::new(p5, vec![Weight(vec![2, 0, 0, 0, 0])]).unwrap();
        let m = Weight(vec![1, 0, 0, 0, 0]);
        let s = restricted_sections(&spec, &m).unwrap();
        assert_eq!(s.value, BigInt::from(6));
        assert!(s.exact);
    }

    #[test]
    fn chi_tangent_spot_values() {
        // codimension-2 linear sections
        let s5 = space(Series::D, 5, 5);
        assert_eq!(chi_tangent(&CiSpec::linear(s5.clone(), 2).unwrap()).unwrap(), BigInt::from(17));
        assert_eq!(chi_tangent(&CiSpec::linear(s5, 3).unwrap()).unwrap(), BigInt::from(6));
        let e7 = space(Series::E, 7, 7);
        assert_eq!(chi_tangent(&CiSpec::linear(e7, 2).unwrap()).unwrap(), BigInt::from(25));
        // Gr(2,n+1) codim 2 → n + 4
        for n in 4..=8usize {
            let gr = space(Series::A, n, 2);
            assert_eq!(
                chi_tangent(&CiSpec::linear(gr, 2).unwrap()).unwrap(),
                BigInt::from(n as i64 + 4)
            );
        }
        // bidegree (1,1) hypersurface of P(T_P2)
        let z = pt(2);
        let spec = CiSpec::linear(z, 1).unwrap();
        assert_eq!(chi_tangent(&spec).unwrap(), BigInt::from(2));
    }

    #[test]
    fn chi_tangent_guards() {
        // P^n violates the standing condition and is redirected
        let p4 = space(Series::A, 4, 1);
        let spec = CiSpec::new(p4, vec![Weight(vec![2, 0, 0, 0])]).unwrap();
        assert!(matches!(chi_tangent(&spec), Err(Error::Hypothesis(_))));
        // F4/P4 likewise
        let f4 = space(Series::F, 4, 4);
        let spec = CiSpec::linear(f4, 1).unwrap();
        assert!(matches!(chi_tangent(&spec), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn clubsuit_examples() {
        assert!(!clubsuit(&space(Series::G, 2, 1)).unwrap()); // = Q^5
        assert!(!clubsuit(&space(Series::F, 4, 4)).unwrap());
        assert!(!clubsuit(&space(Series::C, 4, 2)).unwrap());
        assert!(!clubsuit(&pt(3)).unwrap());
        assert!(clubsuit(&space(Series::A, 4, 2)).unwrap()); // Gr(2,5)
        assert!(clubsuit(&space(Series::D, 5, 5)).unwrap());
        assert!(clubsuit(&space(Series::C, 3, 3)).unwrap()); // Lag(3,6)
        // A3/P2 normalizes to the Pluecker quadric
        assert!(!clubsuit(&space(Series::A, 3, 2)).unwrap());
    }

    #[test]
    fn ms_exception_examples() {
        let p2 = space(Series::A, 2, 1);
        assert!(ms_exception(&p2, &Weight(vec![3, 0])).unwrap());
        assert!(!ms_exception(&p2, &Weight(vec![2, 0])).unwrap());
        let q5 = space(Series::B, 3, 1);
        assert!(ms_exception(&q5, &Weight(vec![2, 0, 0])).unwrap());
        // G2/P1 is Q^5 in disguise
        let g2 = space(Series::G, 2, 1);
        assert!(ms_exception(&g2, &Weight(vec![2, 0])).unwrap());
        let gr25 = space(Series::A, 4, 2);
        assert!(!ms_exception(&gr25, &Weight(vec![0, 1, 0, 0])).unwrap());
        let c4 = space(Series::C, 4, 2);
        assert!(ms_exception(&c4, &c4.minimal_ample().clone()).unwrap());
        let p1 = space(Series::A, 1, 1);
        assert!(ms_exception(&p1, &Weight(vec![4])).unwrap());
        assert!(!ms_exception(&p1, &Weight(vec![3])).unwrap());
    }

    #[test]
    fn permutation_invariance_of_sections() {
        let e6 = space(Series::E, 6, 1);
        let d1 = Weight(vec![1, 0, 0, 0, 0, 0]);
        let d2 = Weight(vec![2, 0, 0, 0, 0, 0]);
        let a = CiSpec::new(e6.clone(), vec![d1.clone(), d2.clone()]).unwrap();
        let b = CiSpec::new(e6, vec![d2, d1.clone()]).unwrap();
        assert_eq!(restricted_sections(&a, &d1).unwrap(), restricted_sections(&b, &d1).unwrap());
    }

    #[test]
    fn rejects_oversized_codimension() {
        let p30 = space(Series::A, 30, 1);
        let d = Weight({
            let mut v = vec![0; 30];
            v[0] = 1;
            v
        });
        assert!(CiSpec::new(p30, vec![d; 21]).is_err());
    }
}
