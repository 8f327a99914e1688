//! Characters of finite-dimensional modules as exact weight multisets.
//!
//! A `Character` maps weights (fundamental coordinates) to integer
//! multiplicities. Irreducible characters come from Freudenthal's recursion,
//! run either against the full system or against the subsystem spanned by a
//! subset S of simple roots (Levi case); the recursion only ever touches the
//! invariant form through integer quantities, so everything stays exact.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::linalg::Q;
use crate::roots::{RootSystem, Weight};
use crate::{Error, Result};

/// Weight multiset over a fixed ambient root system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    system: Arc<RootSystem>,
    weights: BTreeMap<Weight, i64>,
    is_virtual: bool,
}

impl Character {
    /// The zero character.
    pub fn empty(system: Arc<RootSystem>) -> Self {
        Character { system, weights: BTreeMap::new(), is_virtual: false }
    }

    /// Character of the one-dimensional trivial module.
    pub fn trivial(system: Arc<RootSystem>) -> Self {
        let rank = system.rank();
        let mut weights = BTreeMap::new();
        weights.insert(Weight::zero(rank), 1);
        Character { system, weights, is_virtual: false }
    }

    /// Builds an actual (non-virtual) character; multiplicities must be positive.
    pub fn from_weights(system: Arc<RootSystem>, entries: BTreeMap<Weight, i64>) -> Result<Self> {
        for (w, &m) in &entries {
            if w.len() != system.rank() {
                return Err(Error::WeightLength { got: w.len(), want: system.rank() });
            }
            if m <= 0 {
                return Err(Error::InternalNegativeMultiplicity);
            }
        }
        Ok(Character { system, weights: entries, is_virtual: false })
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.system
    }

    pub fn is_virtual(&self) -> bool {
        self.is_virtual
    }

    pub fn mult(&self, w: &Weight) -> i64 {
        self.weights.get(w).copied().unwrap_or(0)
    }

    /// Signed dimension: the multiplicity sum.
    pub fn dimension(&self) -> i64 {
        self.weights.values().sum()
    }

    pub fn weights(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.weights.iter().map(|(w, &m)| (w, m))
    }

    pub fn support_len(&self) -> usize {
        self.weights.len()
    }

    fn same_system(&self, other: &Character) -> Result<()> {
        if self.system.stype() != other.system.stype() {
            return Err(Error::SystemMismatch(
                self.system.stype().to_string(),
                other.system.stype().to_string(),
            ));
        }
        Ok(())
    }

    fn insert_raw(&mut self, w: Weight, m: i64) {
        if m == 0 {
            return;
        }
        match self.weights.get_mut(&w) {
            Some(e) => {
                *e += m;
                if *e == 0 {
                    self.weights.remove(&w);
                }
            }
            None => {
                self.weights.insert(w, m);
            }
        }
    }

    /// Pointwise sum; the result is virtual when either side is.
    pub fn add(&self, other: &Character) -> Result<Character> {
        self.same_system(other)?;
        let mut out = self.clone();
        out.is_virtual = self.is_virtual || other.is_virtual;
        for (w, m) in other.weights() {
            out.insert_raw(w.clone(), m);
        }
        Ok(out)
    }

    /// Pointwise difference; always virtual.
    pub fn sub(&self, other: &Character) -> Result<Character> {
        self.same_system(other)?;
        let mut out = self.clone();
        out.is_virtual = true;
        for (w, m) in other.weights() {
            out.insert_raw(w.clone(), -m);
        }
        Ok(out)
    }

    pub fn scaled(&self, k: i64) -> Character {
        let mut out = Character {
            system: self.system.clone(),
            weights: BTreeMap::new(),
            is_virtual: self.is_virtual || k < 0,
        };
        if k != 0 {
            for (w, m) in self.weights() {
                out.weights.insert(w.clone(), m * k);
            }
        }
        out
    }

    /// Convolution of weight multisets (character of the tensor product).
    pub fn tensor(&self, other: &Character) -> Result<Character> {
        self.same_system(other)?;
        let mut out = Character {
            system: self.system.clone(),
            weights: BTreeMap::new(),
            is_virtual: self.is_virtual || other.is_virtual,
        };
        for (a, ma) in self.weights() {
            for (b, mb) in other.weights() {
                out.insert_raw(a.add(b), ma * mb);
            }
        }
        Ok(out)
    }

    /// Character of the dual module: weights negated.
    pub fn dual(&self) -> Character {
        let weights = self.weights.iter().map(|(w, &m)| (w.neg(), m)).collect();
        Character { system: self.system.clone(), weights, is_virtual: self.is_virtual }
    }

    /// Adams operation: scales every weight by k, keeping multiplicities.
    fn adams(&self, k: i64) -> Character {
        let weights = self.weights.iter().map(|(w, &m)| (w.scale(k), m)).collect();
        Character { system: self.system.clone(), weights, is_virtual: self.is_virtual }
    }

    /// Character of the p-th exterior power, via the Newton identity
    /// `p * E_p = sum_{k=1..p} (-1)^(k-1) psi^k(chi) * E_{p-k}`.
    ///
    /// Intermediate sums are virtual; the final result must divide exactly by
    /// p and come out nonnegative, anything else is an internal error.
    pub fn exterior_power(&self, p: usize) -> Result<Character> {
        if self.is_virtual {
            return Err(Error::VirtualCharacter);
        }
        let mut e: Vec<Character> = vec![Character::trivial(self.system.clone())];
        for j in 1..=p {
            let mut acc = Character::empty(self.system.clone());
            acc.is_virtual = true;
            for k in 1..=j {
                let term = self.adams(k as i64).tensor(&e[j - k])?;
                let signed = if k % 2 == 1 { term } else { term.scaled(-1) };
                acc = acc.add(&signed)?;
            }
            let mut weights = BTreeMap::new();
            for (w, m) in acc.weights() {
                if m % (j as i64) != 0 {
                    return Err(Error::Internal(format!(
                        "exterior power: multiplicity {m} at {w:?} not divisible by {j}"
                    )));
                }
                let q = m / (j as i64);
                if q < 0 {
                    return Err(Error::InternalNegativeMultiplicity);
                }
                if q > 0 {
                    weights.insert(w.clone(), q);
                }
            }
            e.push(Character { system: self.system.clone(), weights, is_virtual: false });
        }
        Ok(e.swap_remove(p))
    }

    /// The (height, lex)-maximal weight of the support, if any.
    pub fn maximal_weight(&self) -> Option<&Weight> {
        let mut best: Option<(&Weight, Q)> = None;
        for (w, _) in self.weights() {
            let h = self.system.rational_height(w).expect("support weights have full rank");
            match &best {
                Some((bw, bh)) if (&h, w.coords()) <= (bh, bw.coords()) => {}
                _ => best = Some((w, h)),
            }
        }
        best.map(|(w, _)| w)
    }

    /// Splits an S-completely-reducible character into Levi highest weights:
    /// greedily peel the (height, lex)-maximal residual weight. A residual
    /// that turns negative, or a maximal weight that is not S-dominant, means
    /// the input was not a character of a completely reducible module over
    /// the chosen Levi.
    pub fn decompose_levi(&self, s: &BTreeSet<usize>) -> Result<Vec<(Weight, i64)>> {
        if self.is_virtual {
            return Err(Error::VirtualCharacter);
        }
        let mut residual = self.clone();
        residual.is_virtual = true;
        let mut out = Vec::new();
        while let Some(mu) = residual.maximal_weight().cloned() {
            let t = residual.mult(&mu);
            if t < 0 || !self.system.is_dominant_on(&mu, s)? {
                return Err(Error::NotCompletelyReducible);
            }
            let piece = levi_irrep_character(&self.system, &mu, s)?;
            residual = residual.sub(&piece.scaled(t))?;
            out.push((mu, t));
        }
        Ok(out)
    }
}

/// Full irreducible character of highest weight lambda (Freudenthal).
pub fn irrep_character(rs: &Arc<RootSystem>, lambda: &Weight) -> Result<Character> {
    let all: BTreeSet<usize> = (0..rs.rank()).collect();
    levi_irrep_character(rs, lambda, &all)
}

/// Irreducible character of the Levi subalgebra spanned by the simple roots
/// in S, of highest weight lambda, written in ambient coordinates. lambda
/// must be S-dominant; coordinates off S ride along untouched.
pub fn levi_irrep_character(
    rs: &Arc<RootSystem>,
    lambda: &Weight,
    s: &BTreeSet<usize>,
) -> Result<Character> {
    if !rs.is_dominant_on(lambda, s)? {
        return Err(Error::NotDominant(
            lambda.coords().to_vec(),
            format!("on the Levi subset {s:?}"),
        ));
    }
    let rank = rs.rank();
    // positive roots of the S-span
    let s_roots: Vec<usize> = (0..rs.num_positive_roots())
        .filter(|&i| {
            rs.positive_roots()[i]
                .simple_coords()
                .iter()
                .enumerate()
                .all(|(j, &c)| c == 0 || s.contains(&j))
        })
        .collect();
    // weight acting as rho for the subsystem: 1 on S, 0 elsewhere
    let rho_hat = Weight::new((0..rank).map(|i| i64::from(s.contains(&i))).collect());

    // mult and simple-coordinate offset from lambda, keyed by weight
    let mut table: BTreeMap<Weight, (i64, Vec<i64>)> = BTreeMap::new();
    table.insert(lambda.clone(), (1, vec![0; rank]));
    let mut level: Vec<Weight> = vec![lambda.clone()];

    while !level.is_empty() {
        let mut candidates: BTreeSet<Weight> = BTreeSet::new();
        let mut cand_off: BTreeMap<Weight, Vec<i64>> = BTreeMap::new();
        for mu in &level {
            let off = table[mu].1.clone();
            for &i in s {
                let alpha = rs.simple_root(i)?;
                let nu = mu.sub(&alpha);
                if table.contains_key(&nu) {
                    continue;
                }
                let mut noff = off.clone();
                noff[i] += 1;
                candidates.insert(nu.clone());
                cand_off.insert(nu, noff);
            }
        }
        let mut next = Vec::new();
        for nu in candidates {
            let off = &cand_off[&nu];
            // denominator: (lambda + nu + 2 rho_hat, lambda - nu)
            let x = lambda.add(&nu).add(&rho_hat.scale(2));
            let den: i128 = (0..rank)
                .map(|j| off[j] as i128 * x.coords()[j] as i128 * rs.sym_d(j) as i128)
                .sum();
            let mut num: i128 = 0;
            for &ri in &s_roots {
                let alpha_simple = rs.positive_roots()[ri].simple_coords();
                let mut k = 1i64;
                loop {
                    // nu + k*alpha is above lambda once any offset coordinate
                    // would go negative; multiplicities vanish from there on
                    if (0..rank).any(|j| off[j] - k * alpha_simple[j] < 0) {
                        break;
                    }
                    let w = nu.add(&rs.positive_roots()[ri].weight().scale(k));
                    if let Some((m, _)) = table.get(&w) {
                        num += 2 * (*m as i128) * rs.form_with_root(&w, ri) as i128;
                    }
                    k += 1;
                }
            }
            let m = if den == 0 { 0 } else { num / den };
            if den != 0 && num % den != 0 {
                return Err(Error::Internal("Freudenthal division not exact".into()));
            }
            if m > 0 {
                let m64 =
                    i64::try_from(m).map_err(|_| Error::DimensionOverflow)?;
                table.insert(nu.clone(), (m64, off.clone()));
                next.push(nu);
            }
        }
        level = next;
    }

    let weights: BTreeMap<Weight, i64> = table.into_iter().map(|(w, (m, _))| (w, m)).collect();
    Character::from_weights(rs.clone(), weights)
}

/// Dimension of the irreducible module of highest weight lambda, by the Weyl
/// product formula over the positive roots. Exact; errors if the result does
/// not fit u64.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<u64> {
    if !rs.is_dominant(lambda)? {
        return Err(Error::NotDominant(lambda.coords().to_vec(), "for the Weyl formula".into()));
    }
    let rho = rs.rho();
    let shifted = lambda.add(&rho);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..rs.num_positive_roots() {
        let a = rs.form_with_root(&shifted, i);
        let b = rs.form_with_root(&rho, i);
        debug_assert!(a > 0 && b > 0);
        num *= BigUint::from(a as u64);
        den *= BigUint::from(b as u64);
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    if !r.is_zero() {
        return Err(Error::Internal("Weyl product is not integral".into()));
    }
    q.to_u64().ok_or(Error::DimensionOverflow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{build_root_system, SemisimpleType};
    use proptest::prelude::*;

    fn sys(s: &str) -> Arc<RootSystem> {
        build_root_system(&s.parse::<SemisimpleType>().unwrap()).unwrap()
    }

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec())
    }

    /// Exterior power straight from the definition: sums over p-element index
    /// subsets of the expanded weight list.
    fn exterior_bruteforce(chi: &Character, p: usize) -> Character {
        let mut expanded: Vec<Weight> = Vec::new();
        for (wt, m) in chi.weights() {
            for _ in 0..m {
                expanded.push(wt.clone());
            }
        }
        let mut out: BTreeMap<Weight, i64> = BTreeMap::new();
        let n = expanded.len();
        let mut idx: Vec<usize> = (0..p).collect();
        if p > n {
            return Character::empty(chi.system().clone());
        }
        loop {
            let mut sum = Weight::zero(chi.system().rank());
            for &i in &idx {
                sum = sum.add(&expanded[i]);
            }
            *out.entry(sum).or_insert(0) += 1;
            // next combination
            let mut i = p;
            loop {
                if i == 0 {
                    return Character {
                        system: chi.system().clone(),
                        weights: out,
                        is_virtual: false,
                    };
                }
                i -= 1;
                if idx[i] != i + n - p {
                    break;
                }
            }
            idx[i] += 1;
            for j in i + 1..p {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }

    #[test]
    fn a1_strings() {
        let rs = sys("A1");
        for k in 0..6i64 {
            let chi = irrep_character(&rs, &w(&[k])).unwrap();
            assert_eq!(chi.dimension(), k + 1);
            for j in 0..=k {
                assert_eq!(chi.mult(&w(&[k - 2 * j])), 1);
            }
        }
    }

    #[test]
    fn a2_adjoint_has_a_double_zero_weight() {
        let rs = sys("A2");
        let chi = irrep_character(&rs, &w(&[1, 1])).unwrap();
        assert_eq!(chi.dimension(), 8);
        assert_eq!(chi.mult(&w(&[0, 0])), 2);
        // six roots with multiplicity one
        for r in rs.positive_roots() {
            assert_eq!(chi.mult(r.weight()), 1);
            assert_eq!(chi.mult(&r.weight().neg()), 1);
        }
    }

    #[test]
    fn freudenthal_totals_match_weyl_dimension() {
        let cases: &[(&str, &[i64])] = &[
            ("A1", &[1]),
            ("A1", &[2]),
            ("A1", &[5]),
            ("A2", &[1, 0]),
            ("A2", &[1, 1]),
            ("A2", &[2, 1]),
            ("A2", &[3, 0]),
            ("A3", &[1, 0, 0]),
            ("A3", &[0, 1, 0]),
            ("A3", &[1, 0, 1]),
            ("A3", &[1, 1, 1]),
            ("A3", &[2, 0, 1]),
            ("B2", &[1, 0]),
            ("B2", &[0, 1]),
            ("B2", &[1, 1]),
            ("B2", &[2, 0]),
            ("B2", &[0, 2]),
            ("C3", &[1, 0, 0]),
            ("C3", &[0, 0, 1]),
            ("C3", &[1, 1, 0]),
            ("D4", &[1, 0, 0, 0]),
            ("D4", &[0, 1, 0, 0]),
            ("G2", &[1, 0]),
            ("G2", &[0, 1]),
            ("G2", &[1, 1]),
            ("F4", &[0, 0, 0, 1]),
            ("A1xA1", &[1, 1]),
            ("A1xA1", &[2, 3]),
        ];
        assert!(cases.len() >= 20);
        for (t, lam) in cases {
            let rs = sys(t);
            let lam = w(lam);
            let chi = irrep_character(&rs, &lam).unwrap();
            let wd = weyl_dim(&rs, &lam).unwrap();
            assert_eq!(chi.dimension() as u64, wd, "{t} {lam:?}");
            assert!(wd <= 10_000);
        }
    }

    #[test]
    fn classical_dimensions() {
        assert_eq!(weyl_dim(&sys("A2"), &w(&[1, 1])).unwrap(), 8);
        assert_eq!(weyl_dim(&sys("A3"), &w(&[0, 1, 0])).unwrap(), 6);
        assert_eq!(weyl_dim(&sys("B2"), &w(&[1, 0])).unwrap(), 5);
        assert_eq!(weyl_dim(&sys("B2"), &w(&[0, 2])).unwrap(), 10);
        assert_eq!(weyl_dim(&sys("G2"), &w(&[0, 1])).unwrap(), 14);
        assert_eq!(weyl_dim(&sys("G2"), &w(&[1, 0])).unwrap(), 7);
        assert_eq!(weyl_dim(&sys("F4"), &w(&[0, 0, 0, 1])).unwrap(), 26);
        assert_eq!(weyl_dim(&sys("A1"), &w(&[0])).unwrap(), 1);
        assert!(weyl_dim(&sys("A1"), &w(&[-1])).is_err());
    }

    #[test]
    fn tensor_of_standard_and_dual() {
        let rs = sys("A2");
        let std = irrep_character(&rs, &w(&[1, 0])).unwrap();
        let dual = std.dual();
        let prod = std.tensor(&dual).unwrap();
        assert_eq!(prod.dimension(), 9);
        assert_eq!(prod.mult(&w(&[0, 0])), 3);
        assert_eq!(prod.mult(&w(&[1, 1])), 1);
        // tensor is symmetric
        assert_eq!(prod, dual.tensor(&std).unwrap());
    }

    #[test]
    fn dual_is_an_involution_and_flips_the_highest_weight() {
        let rs = sys("A2");
        let std = irrep_character(&rs, &w(&[1, 0])).unwrap();
        assert_eq!(std.dual().dual(), std);
        assert_eq!(std.maximal_weight().unwrap(), &w(&[1, 0]));
        assert_eq!(std.dual().maximal_weight().unwrap(), &w(&[0, 1]));
    }

    #[test]
    fn exterior_powers_of_the_standard_a2_module() {
        let rs = sys("A2");
        let std = irrep_character(&rs, &w(&[1, 0])).unwrap();
        let e2 = std.exterior_power(2).unwrap();
        // Lambda^2 of the standard module is its dual
        assert_eq!(e2, std.dual());
        let e3 = std.exterior_power(3).unwrap();
        assert_eq!(e3, Character::trivial(rs.clone()));
        assert_eq!(std.exterior_power(4).unwrap().dimension(), 0);
        assert_eq!(std.exterior_power(0).unwrap(), Character::trivial(rs));
    }

    #[test]
    fn newton_matches_bruteforce_for_small_characters() {
        let rs = sys("A2");
        let b2 = sys("B2");
        let chars = [
            irrep_character(&rs, &w(&[1, 0])).unwrap(),
            irrep_character(&rs, &w(&[0, 1])).unwrap(),
            irrep_character(&rs, &w(&[1, 1])).unwrap(), // dim 8
            irrep_character(&b2, &w(&[0, 1])).unwrap(), // dim 4
            irrep_character(&b2, &w(&[1, 0])).unwrap(), // dim 5
        ];
        for chi in &chars {
            let dim = chi.dimension() as usize;
            assert!(dim <= 8);
            let mut total = 0i64;
            for p in 0..=dim + 1 {
                let newton = chi.exterior_power(p).unwrap();
                let brute = exterior_bruteforce(chi, p);
                assert_eq!(newton, brute, "p = {p}");
                total += newton.dimension();
            }
            assert_eq!(total, 1i64 << dim); // sum over all p of C(dim, p)
        }
    }

    #[test]
    fn levi_restriction_of_the_adjoint_tangent_weights() {
        let rs = sys("A2");
        let s: BTreeSet<usize> = [0].into();
        // theta restricted to the alpha_1-Levi: a 2-dimensional string
        let chi = levi_irrep_character(&rs, &w(&[1, 1]), &s).unwrap();
        assert_eq!(chi.dimension(), 2);
        assert_eq!(chi.mult(&w(&[1, 1])), 1);
        assert_eq!(chi.mult(&w(&[-1, 2])), 1);
        // empty Levi: just the weight itself, dominance is vacuous
        let chi0 = levi_irrep_character(&rs, &w(&[-3, 1]), &BTreeSet::new()).unwrap();
        assert_eq!(chi0.dimension(), 1);
        // non-dominant highest weight is rejected
        assert!(levi_irrep_character(&rs, &w(&[-1, 0]), &s).is_err());
    }

    #[test]
    fn decompose_levi_peels_strings() {
        let rs = sys("A2");
        let s: BTreeSet<usize> = [0].into();
        let mut m = BTreeMap::new();
        m.insert(w(&[-1, 2]), 1); // alpha_2
        m.insert(w(&[1, 1]), 1); // theta
        let chi = Character::from_weights(rs.clone(), m).unwrap();
        let parts = chi.decompose_levi(&s).unwrap();
        assert_eq!(parts, vec![(w(&[1, 1]), 1)]);

        // full decomposition of std (x) dual over the whole algebra
        let std = irrep_character(&rs, &w(&[1, 0])).unwrap();
        let prod = std.tensor(&std.dual()).unwrap();
        let all: BTreeSet<usize> = [0, 1].into();
        let parts = prod.decompose_levi(&all).unwrap();
        assert_eq!(parts, vec![(w(&[1, 1]), 1), (w(&[0, 0]), 1)]);

        // a bare theta weight is not a Levi character over {alpha_1}
        let mut m = BTreeMap::new();
        m.insert(w(&[1, 1]), 1);
        let bad = Character::from_weights(rs.clone(), m).unwrap();
        assert!(matches!(bad.decompose_levi(&s), Err(Error::NotCompletelyReducible)));
    }

    #[test]
    fn virtual_characters_are_fenced_off() {
        let rs = sys("A1");
        let a = irrep_character(&rs, &w(&[2])).unwrap();
        let b = irrep_character(&rs, &w(&[0])).unwrap();
        let v = a.sub(&b).unwrap();
        assert!(v.is_virtual());
        assert!(v.exterior_power(2).is_err());
        assert!(v.decompose_levi(&[0usize].into()).is_err());
        // sums against virtual characters stay virtual
        assert!(a.add(&v).unwrap().is_virtual());
    }

    #[test]
    fn system_mismatch_is_rejected() {
        let a = irrep_character(&sys("A1"), &w(&[1])).unwrap();
        let b = irrep_character(&sys("A2"), &w(&[1, 0])).unwrap();
        assert!(a.tensor(&b).is_err());
        assert!(a.add(&b).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        /// Rebuilding a sum of Levi irreducibles and decomposing it returns
        /// exactly the constituents we started from.
        #[test]
        fn decompose_levi_round_trips(
            c1 in 0..3i64, c2 in 0..3i64, t1 in 1..3i64, t2 in 1..3i64,
            pick in 0usize..3,
        ) {
            let rs = sys("A2");
            let s: BTreeSet<usize> = match pick {
                0 => BTreeSet::new(),
                1 => [0].into(),
                _ => [0, 1].into(),
            };
            // two distinct S-dominant weights (off-S coordinates arbitrary)
            let mu1 = Weight::new(vec![c1, 1]);
            let mu2 = Weight::new(vec![c2 + 1, 0]);
            prop_assume!(rs.is_dominant_on(&mu1, &s).unwrap());
            prop_assume!(rs.is_dominant_on(&mu2, &s).unwrap());
            let x1 = levi_irrep_character(&rs, &mu1, &s).unwrap().scaled(t1);
            let x2 = levi_irrep_character(&rs, &mu2, &s).unwrap().scaled(t2);
            let chi = x1.add(&x2).unwrap();
            let parts = chi.decompose_levi(&s).unwrap();
            let mut expect = vec![(mu1, t1), (mu2, t2)];
            expect.sort();
            let mut got = parts.clone();
            got.sort();
            prop_assert_eq!(got, expect);
        }

        /// Tensor dimension is the product of dimensions.
        #[test]
        fn tensor_dimension_multiplies(a in 0..4i64, b in 0..4i64, c in 0..3i64, d in 0..3i64) {
            let rs = sys("A2");
            let x = irrep_character(&rs, &w(&[a, b])).unwrap();
            let y = irrep_character(&rs, &w(&[c, d])).unwrap();
            prop_assert_eq!(x.tensor(&y).unwrap().dimension(), x.dimension() * y.dimension());
        }

        /// Duality preserves irreducible dimensions and is an involution.
        #[test]
        fn dual_preserves_dimension(a in 0..4i64, b in 0..4i64) {
            let rs = sys("B2");
            let x = irrep_character(&rs, &w(&[a, b])).unwrap();
            prop_assert_eq!(x.dual().dimension(), x.dimension());
            prop_assert_eq!(x.dual().dual(), x);
        }
    }
}
