//! The real neutral fermion Fock space.
//!
//! A basis monomial `phi_{-n_k-1/2} ... phi_{-n_1-1/2} |0>` with
//! `n_k > ... > n_1 >= 0` is stored as the increasing occupation list
//! `[n_1, ..., n_k]`. Mode indices `m` in `Z + 1/2` are passed around as the
//! odd integer `2m`.
//!
//! Sign convention: the largest occupation sits leftmost, so moving a mode
//! `phi_{+-(j+1/2)}` from the far left to its slot passes every occupation
//! greater than `j`, giving the sign `(-1)^{#{n_i > j}}`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{combine_radicands, Surd};

/// Canonical basis monomial, as a strictly increasing occupation list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct BasisVector {
    occupations: Vec<u32>,
}

impl BasisVector {
    pub fn vacuum() -> Self {
        BasisVector::default()
    }

    /// Builds a basis vector from occupations in any order; repeated indices are rejected.
    pub fn from_occupations(occupations: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut occ: Vec<u32> = occupations.into_iter().collect();
        occ.sort_unstable();
        if occ.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::OutOfRange(format!(
                "repeated occupation in {occ:?} (Pauli exclusion)"
            )));
        }
        Ok(BasisVector { occupations: occ })
    }

    pub fn occupations(&self) -> &[u32] {
        &self.occupations
    }

    pub fn len(&self) -> usize {
        self.occupations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.occupations.is_empty()
    }

    pub fn is_occupied(&self, n: u32) -> bool {
        self.occupations.binary_search(&n).is_ok()
    }

    pub fn max_occupation(&self) -> Option<u32> {
        self.occupations.last().copied()
    }

    /// `L^{1/2}_0` eigenvalue `sum (n_i + 1/2)`, in quarters.
    pub fn energy_quarters(&self) -> i64 {
        self.occupations.iter().map(|&n| 4 * n as i64 + 2).sum()
    }

    /// Charge grading: odd occupations minus even occupations.
    pub fn dg(&self) -> i64 {
        self.occupations
            .iter()
            .map(|&n| if n % 2 == 1 { 1 } else { -1 })
            .sum()
    }

    /// Level of the vector above `vacuum_like(dg)`: the weight
    /// `floor((n+1)/2)` of occupations present beyond `v_dg`, minus the weight
    /// of those of `v_dg` that are missing. Equals the Heisenberg level.
    pub fn degh(&self) -> u64 {
        let weight = |n: &u32| (*n as i64 + 1) / 2;
        let reference = vacuum_like(self.dg());
        let extra: i64 = self
            .occupations
            .iter()
            .filter(|n| !reference.is_occupied(**n))
            .map(weight)
            .sum();
        let missing: i64 = reference
            .occupations
            .iter()
            .filter(|n| !self.is_occupied(**n))
            .map(weight)
            .sum();
        u64::try_from(extra - missing).expect("level is non-negative on every charge sector")
    }

    /// Applies `phi_m` (`mode2 = 2m`, odd) and returns the signed image, or
    /// `None` when the result is zero.
    pub fn apply_mode(&self, mode2: i32) -> Option<(bool, BasisVector)> {
        debug_assert!(mode2 % 2 != 0, "mode index must be a half-integer");
        let creation = mode2 < 0;
        let j = (mode2.unsigned_abs() - 1) / 2;
        let pos = self.occupations.binary_search(&j);
        let (slot, present) = match pos {
            Ok(p) => (p, true),
            Err(p) => (p, false),
        };
        if creation == present {
            return None;
        }
        let passed = match pos {
            Ok(p) => self.occupations.len() - p - 1,
            Err(p) => self.occupations.len() - p,
        };
        let mut occ = self.occupations.clone();
        if creation {
            occ.insert(slot, j);
        } else {
            occ.remove(slot);
        }
        Some((passed % 2 == 1, BasisVector { occupations: occ }))
    }

    pub fn gradings(&self) -> GradingRecord {
        let length = self.occupations.len() as u64;
        GradingRecord {
            parity: if length.is_multiple_of(2) {
                Parity::Even
            } else {
                Parity::Odd
            },
            length,
            dg: self.dg(),
            degh: self.degh(),
            energy_quarters: self.energy_quarters(),
        }
    }
}

impl Ord for BasisVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.energy_quarters()
            .cmp(&other.energy_quarters())
            .then_with(|| self.occupations.cmp(&other.occupations))
    }
}

impl PartialOrd for BasisVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for BasisVector {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        BasisVector::from_occupations(v)
    }
}

impl From<BasisVector> for Vec<u32> {
    fn from(v: BasisVector) -> Self {
        v.occupations
    }
}

/// `phi[n_k]...phi[n_1]|0>`, largest occupation first.
impl fmt::Display for BasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for n in self.occupations.iter().rev() {
            write!(f, "phi[{n}]")?;
        }
        write!(f, "|0>")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: i64) -> Parity {
        if n.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingRecord {
    pub parity: Parity,
    pub length: u64,
    pub dg: i64,
    pub degh: u64,
    pub energy_quarters: i64,
}

/// The vacuum-like vector `v_n` of the charge-`n` sector.
pub fn vacuum_like(n: i64) -> BasisVector {
    let occupations = if n >= 0 {
        (0..n as u32).map(|i| 2 * i + 1).collect()
    } else {
        (0..n.unsigned_abs() as u32).map(|i| 2 * i).collect()
    };
    BasisVector { occupations }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisFilter {
    Charge(i64),
    Parity(Parity),
}

/// All basis vectors with energy at most `max_energy_quarters`, ordered by
/// energy and then lexicographically by occupations.
pub fn enumerate_basis(max_energy_quarters: i64, filter: Option<BasisFilter>) -> Vec<BasisVector> {
    fn extend(
        next: u32,
        budget: i64,
        current: &mut Vec<u32>,
        out: &mut Vec<BasisVector>,
        filter: Option<BasisFilter>,
    ) {
        let v = BasisVector {
            occupations: current.clone(),
        };
        let keep = match filter {
            None => true,
            Some(BasisFilter::Charge(n)) => v.dg() == n,
            Some(BasisFilter::Parity(p)) => Parity::of(v.len() as i64) == p,
        };
        if keep {
            out.push(v);
        }
        let mut n = next;
        while 4 * n as i64 + 2 <= budget {
            current.push(n);
            extend(n + 1, budget - (4 * n as i64 + 2), current, out, filter);
            current.pop();
            n += 1;
        }
    }

    let mut out = Vec::new();
    if max_energy_quarters >= 0 {
        extend(0, max_energy_quarters, &mut Vec::new(), &mut out, filter);
    }
    out.sort();
    out
}

/// A finite linear combination of basis vectors with exact coefficients.
///
/// All coefficients share one quadratic field; the state's `radicand` tracks it.
/// Equality compares terms only.
#[derive(Clone, Debug, Default)]
pub struct State {
    terms: BTreeMap<BasisVector, Surd>,
    radicand: u64,
}

impl PartialEq for State {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for State {}

impl State {
    pub fn zero() -> Self {
        State {
            terms: BTreeMap::new(),
            radicand: 1,
        }
    }

    pub fn basis(v: BasisVector) -> Self {
        let mut s = State::zero();
        s.terms.insert(v, Surd::one());
        s
    }

    pub fn vacuum() -> Self {
        State::basis(BasisVector::vacuum())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (BasisVector, Surd)>) -> Result<Self> {
        let mut s = State::zero();
        for (v, c) in terms {
            s.try_add_term(v, &c)?;
        }
        Ok(s)
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, v: &BasisVector) -> Surd {
        self.terms.get(v).cloned().unwrap_or_else(Surd::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisVector, &Surd)> {
        self.terms.iter()
    }

    pub fn try_add_term(&mut self, v: BasisVector, c: &Surd) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        self.radicand = combine_radicands(self.radicand, c.radicand())?;
        match self.terms.get_mut(&v) {
            Some(existing) => {
                let sum = existing.try_add(c)?;
                if sum.is_zero() {
                    self.terms.remove(&v);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(v, c.clone());
            }
        }
        Ok(())
    }

    /// Adds `scale * other` into `self`.
    pub fn try_axpy(&mut self, scale: &Surd, other: &State) -> Result<()> {
        if scale.is_zero() {
            return Ok(());
        }
        for (v, c) in &other.terms {
            self.try_add_term(v.clone(), &c.try_mul(scale)?)?;
        }
        Ok(())
    }

    pub fn try_add(&self, other: &State) -> Result<State> {
        let mut out = self.clone();
        out.try_axpy(&Surd::one(), other)?;
        Ok(out)
    }

    pub fn try_sub(&self, other: &State) -> Result<State> {
        let mut out = self.clone();
        out.try_axpy(&Surd::from_integer(-1), other)?;
        Ok(out)
    }

    pub fn try_scale(&self, scale: &Surd) -> Result<State> {
        let mut out = State::zero();
        out.try_axpy(scale, self)?;
        Ok(out)
    }

    pub fn scale_rational(&self, factor: &BigRational) -> State {
        let mut out = State::zero();
        if num_traits::Zero::is_zero(factor) {
            return out;
        }
        out.radicand = self.radicand;
        out.terms = self
            .terms
            .iter()
            .map(|(v, c)| (v.clone(), c.scale(factor)))
            .collect();
        out
    }

    /// Image under a single Clifford mode `phi_m` (`mode2 = 2m`).
    pub fn apply_mode(&self, mode2: i32) -> State {
        let mut out = State::zero();
        for (v, c) in &self.terms {
            if let Some((negative, w)) = v.apply_mode(mode2) {
                let c = if negative { -c } else { c.clone() };
                out.try_add_term(w, &c)
                    .expect("coefficients share the state's field");
            }
        }
        out
    }

    /// `Some(lambda)` if `self = lambda * v` for the single basis vector `v`.
    pub fn eigenvalue_on(&self, v: &BasisVector) -> Option<Surd> {
        match self.terms.len() {
            0 => Some(Surd::zero()),
            1 => self.terms.get(v).cloned(),
            _ => None,
        }
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (v, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){v}")?;
        }
        Ok(())
    }
}

/// Applies `phi_m` (`mode2 = 2m`) to a state.
pub fn apply_mode(mode2: i32, s: &State) -> State {
    s.apply_mode(mode2)
}
