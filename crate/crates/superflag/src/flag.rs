//! Flag varieties M = G/P for parabolic subgroups P containing a fixed Borel,
//! and the irreducible P-modules that induce homogeneous vector bundles on M.
//!
//! A parabolic is recorded by the set of simple roots spanning its Levi part.
//! The tangent module of M has the positive roots outside the Levi span as
//! weights, each once; an irreducible P-module is an irreducible Levi module
//! with the nilradical acting trivially, so its character is a Levi character.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::chars::{levi_irrep_character, Character};
use crate::roots::{RootSystem, Weight};
use crate::{Error, Result};

/// A parabolic subgroup given by its Levi simple-root subset (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicSpec {
    system: Arc<RootSystem>,
    levi: BTreeSet<usize>,
}

impl ParabolicSpec {
    pub fn new(system: Arc<RootSystem>, levi: BTreeSet<usize>) -> Result<Self> {
        for &i in &levi {
            if i >= system.rank() {
                return Err(Error::SimpleIndexOutOfRange(i, system.rank()));
            }
        }
        Ok(ParabolicSpec { system, levi })
    }

    /// The Borel case: empty Levi subset.
    pub fn borel(system: Arc<RootSystem>) -> Self {
        ParabolicSpec { system, levi: BTreeSet::new() }
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.system
    }

    pub fn levi(&self) -> &BTreeSet<usize> {
        &self.levi
    }

    fn root_in_levi_span(&self, idx: usize) -> bool {
        self.system.positive_roots()[idx]
            .simple_coords()
            .iter()
            .enumerate()
            .all(|(j, &c)| c == 0 || self.levi.contains(&j))
    }

    /// Indices of the positive roots outside the Levi span (tangent weights).
    pub fn tangent_root_indices(&self) -> Vec<usize> {
        (0..self.system.num_positive_roots())
            .filter(|&i| !self.root_in_levi_span(i))
            .collect()
    }

    /// dim M = number of positive roots outside the Levi span.
    pub fn dim_m(&self) -> usize {
        self.tangent_root_indices().len()
    }

    /// Character of the tangent module g/p: each outside root once.
    pub fn tangent_character(&self) -> Character {
        let mut m = BTreeMap::new();
        for i in self.tangent_root_indices() {
            m.insert(self.system.positive_roots()[i].weight().clone(), 1);
        }
        Character::from_weights(self.system.clone(), m).expect("tangent weights are simple")
    }
}

/// Irreducible P-module: Levi-dominant highest weight, nilradical trivial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PModule {
    parabolic: ParabolicSpec,
    hw: Weight,
}

impl PModule {
    pub fn new(parabolic: ParabolicSpec, hw: Weight) -> Result<Self> {
        if !parabolic.system.is_dominant_on(&hw, &parabolic.levi)? {
            return Err(Error::NotDominant(
                hw.coords().to_vec(),
                format!("on the Levi subset {:?}", parabolic.levi),
            ));
        }
        Ok(PModule { parabolic, hw })
    }

    pub fn parabolic(&self) -> &ParabolicSpec {
        &self.parabolic
    }

    pub fn hw(&self) -> &Weight {
        &self.hw
    }
}

/// Character of the underlying Levi-irreducible module.
pub fn pmodule_character(phi: &PModule) -> Result<Character> {
    levi_irrep_character(&phi.parabolic.system, &phi.hw, &phi.parabolic.levi)
}

/// The dual P-module: highest weight -w_0^L(hw) for the Levi longest element.
pub fn dual_pmodule(phi: &PModule) -> Result<PModule> {
    let sys = &phi.parabolic.system;
    let image = sys.longest_element_image(&phi.hw, &phi.parabolic.levi)?;
    PModule::new(phi.parabolic.clone(), image.neg())
}

/// Characters of the two outer terms of the degree-p piece of the derivation
/// sheaf sequence: (dual(phi) (x) Lambda^(p+1) phi, tangent (x) Lambda^p phi).
/// Degree -1 is the seed case: the quotient side is zero there.
pub fn der_sequence_characters(phi: &PModule, p: i64) -> Result<(Character, Character)> {
    if p < -1 {
        return Err(Error::DegreeOutOfRange(p));
    }
    let chi = pmodule_character(phi)?;
    let dual_chi = chi.dual();
    if p == -1 {
        return Ok((dual_chi, Character::empty(phi.parabolic.system.clone())));
    }
    let p = p as usize;
    let sub = dual_chi.tensor(&chi.exterior_power(p + 1)?)?;
    let quot = phi.parabolic.tangent_character().tensor(&chi.exterior_power(p)?)?;
    Ok((sub, quot))
}
