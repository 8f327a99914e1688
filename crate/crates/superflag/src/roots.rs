//! Semisimple root-system data in the fundamental-weight basis.
//!
//! A weight is an integer coordinate vector against the fundamental weights,
//! so `coords[i] = λ(h_i)` for the simple coroots `h_i`. Simple roots are the
//! rows of the Cartan matrix, positive roots are enumerated by additive
//! closure level by level, and all derived data (string lengths, coroot
//! expansions, Weyl-group operations) is exact.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::linalg::{q, QMat, Q};
use crate::{Error, Result};

/// Simple-factor families, Bourbaki labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn valid_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    fn positive_root_count(self, n: usize) -> usize {
        match self {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    fn weyl_order(self, n: usize) -> u128 {
        let fact = |k: usize| -> u128 { (1..=k as u128).product() };
        match self {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }
}

/// A product of simple factors, e.g. `A2` or `A1xA1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SemisimpleType {
    factors: Vec<(Family, usize)>,
}

impl SemisimpleType {
    pub fn new(factors: Vec<(Family, usize)>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidType(String::new()));
        }
        for &(f, n) in &factors {
            if !f.valid_rank(n) {
                return Err(Error::RankOutOfRange { family: f.letter(), rank: n });
            }
        }
        Ok(SemisimpleType { factors })
    }

    pub fn factors(&self) -> &[(Family, usize)] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|&(_, n)| n).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.factors.len() == 1
    }
}

impl FromStr for SemisimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        for part in s.split('x') {
            let mut chars = part.chars();
            let fam = match chars.next() {
                Some('A') => Family::A,
                Some('B') => Family::B,
                Some('C') => Family::C,
                Some('D') => Family::D,
                Some('E') => Family::E,
                Some('F') => Family::F,
                Some('G') => Family::G,
                _ => return Err(Error::InvalidType(s.to_string())),
            };
            let rank: usize = chars
                .as_str()
                .parse()
                .map_err(|_| Error::InvalidType(s.to_string()))?;
            if !fam.valid_rank(rank) {
                return Err(Error::RankOutOfRange { family: fam.letter(), rank });
            }
            factors.push((fam, rank));
        }
        SemisimpleType::new(factors)
    }
}

impl fmt::Display for SemisimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.factors.iter().map(|&(fam, n)| format!("{}{}", fam.letter(), n)).collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// Integral weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight { coords: vec![0; rank] }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Weight {
        Weight { coords: self.coords.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight { coords: self.coords.iter().map(|c| c * k).collect() }
    }
}

/// A positive root with its cached coordinate data.
#[derive(Clone, Debug)]
pub struct Root {
    fund: Weight,
    simple: Vec<i64>,
    height: i64,
    factor: usize,
    /// Half the squared length, normalized so short roots of each factor have 1.
    half_norm: i64,
}

impl Root {
    pub fn weight(&self) -> &Weight {
        &self.fund
    }

    pub fn simple_coords(&self) -> &[i64] {
        &self.simple
    }

    pub fn height(&self) -> i64 {
        self.height
    }

    pub fn factor(&self) -> usize {
        self.factor
    }

    pub fn half_norm(&self) -> i64 {
        self.half_norm
    }
}

/// Immutable root-system data for a semisimple type.
#[derive(Debug)]
pub struct RootSystem {
    stype: SemisimpleType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    sym_d: Vec<i64>,
    factor_of_simple: Vec<usize>,
    positive: Vec<Root>,
    by_simple: HashMap<Vec<i64>, usize>,
    by_fund: HashMap<Vec<i64>, usize>,
    inv_cartan_rows: Vec<Vec<Q>>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.stype == other.stype
    }
}
impl Eq for RootSystem {}

/// Builds the full root-system data for a type; validates classical counts.
pub fn build_root_system(stype: &SemisimpleType) -> Result<Arc<RootSystem>> {
    let rank = stype.rank();
    let mut cartan = vec![vec![0i64; rank]; rank];
    let mut factor_of_simple = vec![0usize; rank];
    let mut offset = 0;
    for (fi, &(fam, n)) in stype.factors().iter().enumerate() {
        let block = cartan_block(fam, n);
        for i in 0..n {
            factor_of_simple[offset + i] = fi;
            for j in 0..n {
                cartan[offset + i][offset + j] = block[i][j];
            }
        }
        offset += n;
    }

    let sym_d = symmetrizer(&cartan, &factor_of_simple, stype.factors().len());
    for i in 0..rank {
        for j in 0..rank {
            debug_assert_eq!(cartan[i][j] * sym_d[j], cartan[j][i] * sym_d[i]);
        }
    }

    let positive = enumerate_positive_roots(&cartan, &sym_d, &factor_of_simple)?;
    let expected: usize =
        stype.factors().iter().map(|&(f, n)| f.positive_root_count(n)).sum();
    if positive.len() != expected {
        return Err(Error::Internal(format!(
            "positive-root count {} does not match the classical value {} for {}",
            positive.len(),
            expected,
            stype
        )));
    }

    let by_simple = positive.iter().enumerate().map(|(i, r)| (r.simple.clone(), i)).collect();
    let by_fund =
        positive.iter().enumerate().map(|(i, r)| (r.fund.coords.to_vec(), i)).collect();

    // rows of the inverse Cartan matrix: fundamental -> simple-root coordinates
    let cartan_t = QMat::from_rows(
        (0..rank).map(|j| (0..rank).map(|k| q(cartan[k][j])).collect()).collect(),
    );
    let mut inv_cartan_rows = Vec::with_capacity(rank);
    for i in 0..rank {
        let mut e = vec![Q::zero(); rank];
        e[i] = q(1);
        let row = cartan_t
            .solve(&e)
            .ok_or_else(|| Error::Internal("Cartan matrix is singular".into()))?;
        inv_cartan_rows.push(row);
    }

    Ok(Arc::new(RootSystem {
        stype: stype.clone(),
        rank,
        cartan,
        sym_d,
        factor_of_simple,
        positive,
        by_simple,
        by_fund,
        inv_cartan_rows,
    }))
}

fn cartan_block(fam: Family, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
    }
    let single = |i: usize, j: usize, a: &mut Vec<Vec<i64>>| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match fam {
        Family::A => {
            for i in 0..n.saturating_sub(1) {
                single(i, i + 1, &mut a);
            }
        }
        Family::B => {
            for i in 0..n - 2 {
                single(i, i + 1, &mut a);
            }
            a[n - 2][n - 1] = -2;
            a[n - 1][n - 2] = -1;
        }
        Family::C => {
            for i in 0..n - 2 {
                single(i, i + 1, &mut a);
            }
            a[n - 2][n - 1] = -1;
            a[n - 1][n - 2] = -2;
        }
        Family::D => {
            for i in 0..n - 2 {
                single(i, i + 1, &mut a);
            }
            single(n - 3, n - 1, &mut a);
            a[n - 2][n - 1] = 0;
            a[n - 1][n - 2] = 0;
        }
        Family::E => {
            // Bourbaki numbering: chain 1-3-4-5-6(-7(-8)), node 2 on node 4
            let chain: &[(usize, usize)] = match n {
                6 => &[(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)],
                7 => &[(0, 2), (2, 3), (3, 4), (4, 5), (1, 3), (5, 6)],
                _ => &[(0, 2), (2, 3), (3, 4), (4, 5), (1, 3), (5, 6), (6, 7)],
            };
            for &(i, j) in chain {
                single(i, j, &mut a);
            }
        }
        Family::F => {
            single(0, 1, &mut a);
            single(2, 3, &mut a);
            a[1][2] = -2;
            a[2][1] = -1;
        }
        Family::G => {
            a[0][1] = -1;
            a[1][0] = -3;
        }
    }
    a
}

/// Per-simple-root half squared lengths, normalized to minimum 1 per factor.
fn symmetrizer(cartan: &[Vec<i64>], factor_of_simple: &[usize], nfactors: usize) -> Vec<i64> {
    let rank = cartan.len();
    let mut d: Vec<Option<BigRational>> = vec![None; rank];
    for start in 0..rank {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(q(1));
        let mut queue = vec![start];
        while let Some(i) = queue.pop() {
            let di = d[i].clone().unwrap();
            for j in 0..rank {
                if cartan[i][j] != 0 && i != j && d[j].is_none() {
                    d[j] = Some(&di * q(cartan[j][i]) / q(cartan[i][j]));
                    queue.push(j);
                }
            }
        }
    }
    let d: Vec<BigRational> = d.into_iter().map(Option::unwrap).collect();
    let mut out = vec![0i64; rank];
    for f in 0..nfactors {
        let idx: Vec<usize> = (0..rank).filter(|&i| factor_of_simple[i] == f).collect();
        let min = idx.iter().map(|&i| d[i].clone()).min().unwrap();
        for &i in &idx {
            let v = &d[i] / &min;
            assert!(v.is_integer() && v.is_positive(), "non-integral symmetrizer");
            out[i] = i64::try_from(v.to_integer()).expect("symmetrizer fits i64");
        }
    }
    out
}

fn enumerate_positive_roots(
    cartan: &[Vec<i64>],
    sym_d: &[i64],
    factor_of_simple: &[usize],
) -> Result<Vec<Root>> {
    let rank = cartan.len();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut level: Vec<Vec<i64>> = Vec::new();
    for i in 0..rank {
        let mut e = vec![0i64; rank];
        e[i] = 1;
        seen.insert(e.clone());
        level.push(e);
    }
    let mut all: Vec<Vec<i64>> = level.clone();
    let is_root = |seen: &BTreeSet<Vec<i64>>, c: &[i64]| -> bool {
        if c.iter().all(|&x| x == 0) {
            return false;
        }
        if c.iter().all(|&x| x >= 0) {
            return seen.contains(c);
        }
        if c.iter().all(|&x| x <= 0) {
            let n: Vec<i64> = c.iter().map(|&x| -x).collect();
            return seen.contains(&n);
        }
        false
    };
    while !level.is_empty() {
        let mut next = Vec::new();
        for beta in &level {
            for i in 0..rank {
                // p = length of the downward alpha_i-string from beta
                let mut p = 0i64;
                loop {
                    let mut c = beta.clone();
                    c[i] -= p + 1;
                    if is_root(&seen, &c) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..rank).map(|j| beta[j] * cartan[j][i]).sum();
                if p - pairing >= 1 {
                    let mut c = beta.clone();
                    c[i] += 1;
                    if seen.insert(c.clone()) {
                        next.push(c.clone());
                        all.push(c);
                    }
                }
            }
        }
        level = next;
    }

    // canonical order: height, then lexicographic on simple-root coordinates
    all.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));

    let mut roots = Vec::with_capacity(all.len());
    for c in all {
        let support: Vec<usize> = (0..rank).filter(|&i| c[i] != 0).collect();
        let factor = factor_of_simple[support[0]];
        if support.iter().any(|&i| factor_of_simple[i] != factor) {
            return Err(Error::Internal("root support crosses factors".into()));
        }
        let mut fund = vec![0i64; rank];
        for j in 0..rank {
            fund[j] = (0..rank).map(|k| c[k] * cartan[k][j]).sum();
        }
        // (alpha, alpha)/2 via (alpha, alpha_j) = cartan-coords times d
        let norm2: i64 = (0..rank)
            .map(|i| c[i] * (0..rank).map(|j| c[j] * cartan[i][j] * sym_d[j]).sum::<i64>())
            .sum();
        assert!(norm2 > 0 && norm2 % 2 == 0, "root norm must be a positive even integer");
        let height = c.iter().sum();
        roots.push(Root {
            fund: Weight::new(fund),
            simple: c,
            height,
            factor,
            half_norm: norm2 / 2,
        });
    }
    Ok(roots)
}

impl RootSystem {
    pub fn stype(&self) -> &SemisimpleType {
        &self.stype
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Half squared length of the i-th simple root (short = 1 per factor).
    pub fn sym_d(&self, i: usize) -> i64 {
        self.sym_d[i]
    }

    pub fn factor_count(&self) -> usize {
        self.stype.factors().len()
    }

    pub fn factor_of_simple(&self, i: usize) -> usize {
        self.factor_of_simple[i]
    }

    /// Simple-root indices belonging to one factor, ascending.
    pub fn factor_simple_indices(&self, f: usize) -> Vec<usize> {
        (0..self.rank).filter(|&i| self.factor_of_simple[i] == f).collect()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive.len()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn simple_root(&self, i: usize) -> Result<Weight> {
        self.check_simple(i)?;
        Ok(Weight::new(self.cartan[i].clone()))
    }

    /// Sum of fundamental weights (half-sum of positive roots).
    pub fn rho(&self) -> Weight {
        Weight::new(vec![1; self.rank])
    }

    pub fn weyl_order(&self) -> u128 {
        self.stype.factors().iter().map(|&(f, n)| f.weyl_order(n)).product()
    }

    fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.len() != self.rank {
            return Err(Error::WeightLength { got: w.len(), want: self.rank });
        }
        Ok(())
    }

    fn check_simple(&self, i: usize) -> Result<()> {
        if i >= self.rank {
            return Err(Error::SimpleIndexOutOfRange(i, self.rank));
        }
        Ok(())
    }

    /// Index of a positive root given by fundamental coordinates.
    pub fn positive_root_index(&self, w: &Weight) -> Option<usize> {
        self.by_fund.get(w.coords()).copied()
    }

    pub(crate) fn positive_root_index_simple(&self, c: &[i64]) -> Option<usize> {
        self.by_simple.get(c).copied()
    }

    /// True when w (fundamental coordinates) is a root of either sign.
    pub fn is_root(&self, w: &Weight) -> bool {
        self.positive_root_index(w).is_some() || self.positive_root_index(&w.neg()).is_some()
    }

    /// `<lambda, alpha^vee>` for a positive root alpha given by its weight.
    pub fn pairing(&self, lambda: &Weight, alpha: &Weight) -> Result<i64> {
        self.check_weight(lambda)?;
        self.check_weight(alpha)?;
        let idx = self
            .positive_root_index(alpha)
            .ok_or_else(|| Error::NotARoot(alpha.coords().to_vec()))?;
        Ok(self.pairing_with_root(lambda, idx))
    }

    /// `<lambda, alpha^vee>` by positive-root index.
    pub fn pairing_with_root(&self, lambda: &Weight, idx: usize) -> i64 {
        let r = &self.positive[idx];
        let num: i64 = (0..self.rank)
            .map(|j| r.simple[j] * lambda.coords()[j] * self.sym_d[j])
            .sum();
        debug_assert_eq!(num % r.half_norm, 0);
        num / r.half_norm
    }

    /// `(lambda, alpha)` against the invariant form, by positive-root index.
    /// Always an integer in the normalization used here.
    pub(crate) fn form_with_root(&self, lambda: &Weight, idx: usize) -> i64 {
        let r = &self.positive[idx];
        (0..self.rank).map(|j| r.simple[j] * lambda.coords()[j] * self.sym_d[j]).sum()
    }

    pub fn is_dominant(&self, w: &Weight) -> Result<bool> {
        self.check_weight(w)?;
        Ok(w.coords().iter().all(|&c| c >= 0))
    }

    /// Dominance restricted to the simple roots in S.
    pub fn is_dominant_on(&self, w: &Weight, s: &BTreeSet<usize>) -> Result<bool> {
        self.check_weight(w)?;
        for &i in s {
            self.check_simple(i)?;
        }
        Ok(s.iter().all(|&i| w.coords()[i] >= 0))
    }

    /// Reflection in the i-th simple root.
    pub fn simple_reflection(&self, i: usize, w: &Weight) -> Result<Weight> {
        self.check_simple(i)?;
        self.check_weight(w)?;
        let c = w.coords()[i];
        let mut out = w.coords().to_vec();
        for j in 0..self.rank {
            out[j] -= c * self.cartan[i][j];
        }
        Ok(Weight::new(out))
    }

    /// Full Weyl orbit of a weight.
    pub fn weyl_orbit(&self, w: &Weight) -> Result<BTreeSet<Weight>> {
        self.check_weight(w)?;
        let mut orbit = BTreeSet::new();
        orbit.insert(w.clone());
        let mut frontier = vec![w.clone()];
        while let Some(v) = frontier.pop() {
            for i in 0..self.rank {
                let r = self.simple_reflection(i, &v)?;
                if orbit.insert(r.clone()) {
                    frontier.push(r);
                }
            }
        }
        Ok(orbit)
    }

    /// Image of w under the longest element of the parabolic Weyl group W_S.
    ///
    /// A regular dominant probe for W_S is dragged to the antidominant chamber
    /// and the recorded reflection word (a reduced expression for w_0^S on the
    /// probe's orbit) is replayed on w.
    pub fn longest_element_image(&self, w: &Weight, s: &BTreeSet<usize>) -> Result<Weight> {
        self.check_weight(w)?;
        for &i in s {
            self.check_simple(i)?;
        }
        let mut probe = Weight::new(
            (0..self.rank).map(|i| if s.contains(&i) { 1 } else { 0 }).collect(),
        );
        let mut word = Vec::new();
        let cap = 4 * self.positive.len() * self.positive.len() + 16;
        loop {
            let Some(&i) = s.iter().find(|&&i| probe.coords()[i] > 0) else {
                break;
            };
            probe = self.simple_reflection(i, &probe)?;
            word.push(i);
            if word.len() > cap {
                return Err(Error::Internal("longest-element descent did not terminate".into()));
            }
        }
        let mut out = w.clone();
        for &i in &word {
            out = self.simple_reflection(i, &out)?;
        }
        Ok(out)
    }

    /// Highest root of one simple factor.
    pub fn highest_root(&self, factor: usize) -> Result<Weight> {
        if factor >= self.factor_count() {
            return Err(Error::FactorIndexOutOfRange(factor, self.factor_count()));
        }
        let best = self
            .positive
            .iter()
            .filter(|r| r.factor == factor)
            .max_by_key(|r| r.height)
            .expect("factor has roots");
        debug_assert_eq!(
            self.positive.iter().filter(|r| r.factor == factor && r.height == best.height).count(),
            1,
            "highest root must be unique"
        );
        Ok(best.fund.clone())
    }

    /// Height of an arbitrary weight: coordinate sum against the simple roots.
    pub fn rational_height(&self, w: &Weight) -> Result<Q> {
        self.check_weight(w)?;
        let mut h = Q::zero();
        for k in 0..self.rank {
            let ck: Q = (0..self.rank)
                .map(|j| &self.inv_cartan_rows[j][k] * q(w.coords()[j]))
                .sum();
            h += ck;
        }
        Ok(h)
    }

    /// Expansion of the coroot h_alpha over the simple coroots h_i; integral.
    pub(crate) fn coroot_coeffs(&self, idx: usize) -> Vec<i64> {
        let r = &self.positive[idx];
        (0..self.rank)
            .map(|i| {
                let num = r.simple[i] * self.sym_d[i];
                debug_assert_eq!(num % r.half_norm, 0);
                num / r.half_norm
            })
            .collect()
    }

    /// Length of the downward alpha-string from beta: max k with beta - k*alpha
    /// a root, scanning contiguously. Both arguments in simple coordinates.
    pub(crate) fn string_down_len(&self, beta: &[i64], alpha: &[i64]) -> i64 {
        let is_root = |c: &[i64]| -> bool {
            if c.iter().all(|&x| x == 0) {
                return false;
            }
            if c.iter().all(|&x| x >= 0) {
                return self.by_simple.contains_key(c);
            }
            if c.iter().all(|&x| x <= 0) {
                let n: Vec<i64> = c.iter().map(|&x| -x).collect();
                return self.by_simple.contains_key(&n[..]);
            }
            false
        };
        let mut p = 0i64;
        loop {
            let c: Vec<i64> =
                beta.iter().zip(alpha).map(|(&b, &a)| b - (p + 1) * a).collect();
            if is_root(&c) {
                p += 1;
            } else {
                return p;
            }
        }
    }

    /// Simple-root coordinates of a weight, when they are rational (always).
    pub fn simple_coords_of(&self, w: &Weight) -> Result<Vec<Q>> {
        self.check_weight(w)?;
        Ok((0..self.rank)
            .map(|k| {
                (0..self.rank).map(|j| &self.inv_cartan_rows[j][k] * q(w.coords()[j])).sum()
            })
            .collect())
    }
}

/// Weight sum over a BTreeMap-friendly alias used by characters.
pub type WeightSet = BTreeMap<Weight, i64>;
