//! Dimensions of global section spaces of homogeneous bundles.
//!
//! For a bundle induced by an irreducible P-module the section space is the
//! irreducible G-module with the same highest weight when that weight is
//! dominant, and zero otherwise; this decides the dimension exactly, and
//! extends to direct sums constituent by constituent.  For a bundle that is
//! only known through its fiber character, each irreducible constituent of
//! the section space with highest weight w and multiplicity t forces w to
//! appear in the character with weight multiplicity at least t.  That gives
//! an upper bound over the dominant support, and an exact vanishing test
//! when the support has no dominant weight at all.

use std::collections::BTreeSet;

use crate::chars::{weyl_dim, Character};
use crate::flag::PModule;
use crate::roots::Weight;
use crate::{Error, Result};

/// Section-space dimension, pinned exactly or bracketed by bounds.
/// Serializes as a bare integer when exact, `{"lo": .., "hi": ..}` otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dim {
    Exact(u64),
    Interval { lo: u64, hi: u64 },
}

impl serde::Serialize for Dim {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        match *self {
            Dim::Exact(n) => s.serialize_u64(n),
            Dim::Interval { lo, hi } => {
                let mut m = s.serialize_struct("Interval", 2)?;
                m.serialize_field("lo", &lo)?;
                m.serialize_field("hi", &hi)?;
                m.end()
            }
        }
    }
}

impl Dim {
    pub fn lo(&self) -> u64 {
        match *self {
            Dim::Exact(n) => n,
            Dim::Interval { lo, .. } => lo,
        }
    }

    pub fn hi(&self) -> u64 {
        match *self {
            Dim::Exact(n) => n,
            Dim::Interval { hi, .. } => hi,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Dim::Exact(_))
    }

    pub fn contains(&self, n: u64) -> bool {
        self.lo() <= n && n <= self.hi()
    }

    /// Collapse an interval whose ends meet.
    pub fn normalized(self) -> Dim {
        match self {
            Dim::Interval { lo, hi } if lo == hi => Dim::Exact(lo),
            d => d,
        }
    }
}

/// How a section-space dimension was decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Method {
    #[serde(rename = "BBW-exact")]
    BbwExact,
    #[serde(rename = "Lemma5-bound")]
    Lemma5Bound,
    #[serde(rename = "vanishing")]
    Vanishing,
}

/// A section-space dimension with its provenance: the dominant constituents
/// that carry it and the route that decided it.
#[derive(Clone, Debug, serde::Serialize)]
pub struct SectionReport {
    pub dimension: Dim,
    pub constituents: Vec<(Weight, i64)>,
    pub method: Method,
}

impl SectionReport {
    pub fn dim(&self) -> u64 {
        self.dimension.lo()
    }
}

/// Report form of [`sections_irreducible`].
pub fn report_irreducible(phi: &PModule) -> Result<SectionReport> {
    let sys = phi.parabolic().system();
    let (dim, constituents) = if sys.is_dominant(phi.hw())? {
        (weyl_dim(sys, phi.hw())?, vec![(phi.hw().clone(), 1)])
    } else {
        (0, vec![])
    };
    Ok(SectionReport {
        dimension: Dim::Exact(dim),
        constituents,
        method: Method::BbwExact,
    })
}

/// Report form of [`sections_completely_reducible`].
pub fn report_completely_reducible(
    chi: &Character,
    levi: &BTreeSet<usize>,
) -> Result<SectionReport> {
    let constituents = dominant_constituents(chi, levi)?;
    let mut total: u64 = 0;
    for (hw, mult) in &constituents {
        total += (*mult as u64) * weyl_dim(chi.system(), hw)?;
    }
    Ok(SectionReport {
        dimension: Dim::Exact(total),
        constituents,
        method: Method::BbwExact,
    })
}

/// Report form of [`sections_upper_bound`]; collapses to an exact zero with
/// the vanishing method when the dominant support is empty.
pub fn report_upper_bound(chi: &Character) -> Result<SectionReport> {
    if chi.is_virtual() {
        return Err(Error::VirtualCharacter);
    }
    let support = dominant_weights(chi)?;
    if support.is_empty() {
        return Ok(SectionReport {
            dimension: Dim::Exact(0),
            constituents: vec![],
            method: Method::Vanishing,
        });
    }
    let mut bound: u64 = 0;
    for (w, mult) in &support {
        bound += (*mult as u64) * weyl_dim(chi.system(), w)?;
    }
    Ok(SectionReport {
        dimension: Dim::Interval { lo: 0, hi: bound },
        constituents: support,
        method: Method::Lemma5Bound,
    })
}

/// Sections of the bundle induced by an irreducible P-module.  Exact: the
/// G-module with the same highest weight if dominant, zero otherwise.
pub fn sections_irreducible(phi: &PModule) -> Result<u64> {
    let sys = phi.parabolic().system();
    if sys.is_dominant(phi.hw())? {
        weyl_dim(sys, phi.hw())
    } else {
        Ok(0)
    }
}

/// Levi constituents of the character whose highest weight is G-dominant.
pub fn dominant_constituents(
    chi: &Character,
    levi: &BTreeSet<usize>,
) -> Result<Vec<(Weight, i64)>> {
    let mut out = Vec::new();
    for (hw, mult) in chi.decompose_levi(levi)? {
        if chi.system().is_dominant(&hw)? {
            out.push((hw, mult));
        }
    }
    Ok(out)
}

/// Sections of a bundle whose fiber is a direct sum of irreducible
/// P-modules with this total character.  Exact: each dominant summand
/// contributes its full G-module, the rest contribute nothing.
pub fn sections_completely_reducible(
    chi: &Character,
    levi: &BTreeSet<usize>,
) -> Result<u64> {
    let mut total: u64 = 0;
    for (hw, mult) in dominant_constituents(chi, levi)? {
        total += (mult as u64) * weyl_dim(chi.system(), &hw)?;
    }
    Ok(total)
}

/// The G-dominant part of the weight support, with weight multiplicities.
pub fn dominant_weights(chi: &Character) -> Result<Vec<(Weight, i64)>> {
    let mut out = Vec::new();
    for (w, mult) in chi.weights() {
        if chi.system().is_dominant(w)? {
            out.push((w.clone(), mult));
        }
    }
    Ok(out)
}

/// Upper bound for the section space of any bundle with this fiber
/// character, irreducible or not: every section constituent's highest
/// weight is a dominant weight of the fiber, with no more multiplicity
/// than the fiber grants it.
pub fn sections_upper_bound(chi: &Character) -> Result<u64> {
    if chi.is_virtual() {
        return Err(Error::VirtualCharacter);
    }
    let mut total: u64 = 0;
    for (w, mult) in dominant_weights(chi)? {
        total += (mult as u64) * weyl_dim(chi.system(), &w)?;
    }
    Ok(total)
}

/// Exact vanishing test: a fiber character with no dominant weight leaves
/// no room for any section constituent, so the section space is zero.
pub fn vanishes_by_dominance(chi: &Character) -> Result<bool> {
    Ok(dominant_weights(chi)?.is_empty())
}

/// True when every dominant weight in the support is zero.  Every section
/// constituent is then a trivial G-module, so the section space consists
/// of invariants only and its dimension equals the dimension of the
/// isotropy-fixed vectors in the fiber.
pub fn dominant_support_only_zero(chi: &Character) -> Result<bool> {
    Ok(dominant_weights(chi)?.iter().all(|(w, _)| w.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flag::ParabolicSpec;
    use crate::roots::{build_root_system, RootSystem, SemisimpleType, Weight};
    use std::sync::Arc;

    fn sys(s: &str) -> Arc<RootSystem> {
        build_root_system(&s.parse::<SemisimpleType>().unwrap()).unwrap()
    }

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec())
    }

    fn parabolic(t: &str, levi: &[usize]) -> ParabolicSpec {
        ParabolicSpec::new(sys(t), levi.iter().copied().collect()).unwrap()
    }

    #[test]
    fn borel_weil_line_bundles() {
        // degree-k line bundles on the projective line
        for k in 0..6 {
            let phi = PModule::new(parabolic("A1", &[]), w(&[k])).unwrap();
            assert_eq!(sections_irreducible(&phi).unwrap(), (k + 1) as u64);
        }
        let neg = PModule::new(parabolic("A1", &[]), w(&[-1])).unwrap();
        assert_eq!(sections_irreducible(&neg).unwrap(), 0);
    }

    #[test]
    fn borel_weil_tangent_modules() {
        // tangent module of P^2: sections are the full symmetry algebra
        let tmod = PModule::new(parabolic("A2", &[0]), w(&[1, 1])).unwrap();
        assert_eq!(sections_irreducible(&tmod).unwrap(), 8);

        // Levi-dominant but not dominant: no sections
        let cot = PModule::new(parabolic("A2", &[0]), w(&[1, -2])).unwrap();
        assert_eq!(sections_irreducible(&cot).unwrap(), 0);

        let g2 = PModule::new(parabolic("G2", &[]), w(&[0, 1])).unwrap();
        assert_eq!(sections_irreducible(&g2).unwrap(), 14);
    }

    #[test]
    fn tangent_character_bounds() {
        // bound for vector fields; equals the symmetry algebra dimension
        // for the first two, exceeds it for B2
        for (t, expect) in [("A1", 3), ("A2", 8), ("B2", 15)] {
            let p = parabolic(t, &[]);
            let tau = p.tangent_character();
            assert_eq!(sections_upper_bound(&tau).unwrap(), expect, "{t}");
        }
    }

    #[test]
    fn vanishing_by_dominance() {
        let p = parabolic("A2", &[0]);
        let tau = p.tangent_character();
        assert!(!vanishes_by_dominance(&tau).unwrap());
        assert!(vanishes_by_dominance(&tau.dual()).unwrap());
        assert_eq!(sections_upper_bound(&tau.dual()).unwrap(), 0);
        assert!(vanishes_by_dominance(&Character::empty(sys("A2"))).unwrap());
    }

    #[test]
    fn weight_bound_vs_summand_sum() {
        // End of the tangent fiber on the projective plane: the zero weight
        // appears twice, once inside the Levi adjoint summand; the weight
        // bound sees both copies, the summand route only the trivial one
        let p = parabolic("A2", &[0]);
        let tau = p.tangent_character();
        let endo = tau.tensor(&tau.dual()).unwrap();
        assert!(dominant_support_only_zero(&endo).unwrap());
        assert_eq!(sections_upper_bound(&endo).unwrap(), 2);
        assert_eq!(
            endo.decompose_levi(p.levi()).unwrap(),
            vec![(w(&[2, -1]), 1), (w(&[0, 0]), 1)]
        );
        assert_eq!(sections_completely_reducible(&endo, p.levi()).unwrap(), 1);
    }

    #[test]
    fn dominant_support_detection() {
        let p = parabolic("A2", &[]);
        let tau = p.tangent_character();
        let endo = tau.tensor(&tau.dual()).unwrap();
        assert!(dominant_support_only_zero(&endo).unwrap());
        assert!(!dominant_support_only_zero(&tau).unwrap());
        // the zero-weight space of End(tangent) is 3-dim, all of it dominant
        assert_eq!(sections_upper_bound(&endo).unwrap(), 3);
        assert_eq!(sections_completely_reducible(&endo, p.levi()).unwrap(), 3);
    }

    #[test]
    fn summand_sum_never_exceeds_weight_bound() {
        for (t, levi, hw) in [
            ("A2", &[][..], [1i64, 1].as_slice()),
            ("A2", &[0][..], [1, 1].as_slice()),
            ("B2", &[][..], [1, 0].as_slice()),
            ("B2", &[1][..], [0, 1].as_slice()),
        ] {
            let p = parabolic(t, levi);
            let phi = PModule::new(p.clone(), Weight::new(hw.to_vec())).unwrap();
            let chi = crate::flag::pmodule_character(&phi).unwrap();
            let endo = chi.tensor(&chi.dual()).unwrap();
            let exact = sections_completely_reducible(&endo, p.levi()).unwrap();
            let bound = sections_upper_bound(&endo).unwrap();
            assert!(exact <= bound, "{t}: {exact} > {bound}");
        }
    }

    #[test]
    fn report_forms() {
        let phi = PModule::new(parabolic("A1", &[]), w(&[2])).unwrap();
        let r = report_irreducible(&phi).unwrap();
        assert_eq!(r.dimension, Dim::Exact(3));
        assert_eq!(r.constituents, vec![(w(&[2]), 1)]);
        let j = serde_json::to_value(&r).unwrap();
        assert_eq!(j["method"], "BBW-exact");
        assert_eq!(j["dimension"], 3);

        let p = parabolic("A2", &[]);
        let r = report_upper_bound(&p.tangent_character()).unwrap();
        assert_eq!(r.dimension, Dim::Interval { lo: 0, hi: 8 });
        let j = serde_json::to_value(&r).unwrap();
        assert_eq!(j["method"], "Lemma5-bound");
        assert_eq!(j["dimension"]["hi"], 8);

        let r = report_upper_bound(&p.tangent_character().dual()).unwrap();
        assert_eq!(r.dimension, Dim::Exact(0));
        assert_eq!(
            serde_json::to_value(&r).unwrap()["method"],
            "vanishing"
        );
    }

    #[test]
    fn dim_arithmetic() {
        let d = Dim::Interval { lo: 2, hi: 2 }.normalized();
        assert_eq!(d, Dim::Exact(2));
        assert!(Dim::Interval { lo: 1, hi: 4 }.contains(4));
        assert!(!Dim::Interval { lo: 1, hi: 4 }.contains(0));
        assert!(Dim::Exact(3).contains(3));
        assert_eq!(Dim::Interval { lo: 1, hi: 4 }.hi(), 4);
    }
}
