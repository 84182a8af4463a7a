//! Heisenberg and Virasoro mode operators acting on Fock states.
//!
//! Mode formulas (`m + n` fixed, `:..:` the fermionic normal order that puts
//! `phi_{>0}` to the right with a sign):
//!
//! * `h_k = 1/2 sum_{m+n=2k} (-1)^{n+1/2} :phi_m phi_n:` from
//!   `h(z) = 1/2 :phi(z) phi(-z):`, using `(-z)^{-n-1/2} = (-1)^{n+1/2} z^{-n-1/2}`;
//! * `L^{1/2}_K = 1/2 sum_{m+n=K} (-m-1/2) :phi_m phi_n:` from `1/2 :d(phi) phi:`;
//! * `L^1_n = 1/2 sum_{i+j=n} :h_i h_j:` with the bosonic normal order
//!   (`h_{>=0}` to the right);
//! * `L^{lambda,b}_n = L^1_n - (a(2n+1) + b) h_n + delta_{n,0} ((b+a)^2 - 4a^2)/2`,
//!   where `a = (1 - 2 lambda)/4`.
//!
//! Every bilinear is an infinite formal sum, but only a finite window of
//! terms can act nontrivially on a fixed basis vector. Windows are computed
//! per vector from its top occupation or its energy.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::{BasisVector, State};
use crate::scalar::{combine_radicands, Surd};

/// Symbolic handle for one mode operator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[allow(clippy::large_enum_variant)]
pub enum OperatorSpec {
    /// `phi_m`, stored as `2m` (odd).
    Clifford(i32),
    /// `h_k`.
    Heisenberg(i64),
    /// `L^{1/2}_n`, central charge 1/2.
    VirHalf(i64),
    /// `L^1_n`, central charge 1.
    VirOne(i64),
    /// `L^{lambda,b}_n`, central charge `-12 lambda^2 + 12 lambda - 2`.
    VirLambda { n: i64, lambda: Surd, b: Surd },
}

impl OperatorSpec {
    pub fn vir_lambda(n: i64, lambda: &Surd, b: &Surd) -> Self {
        OperatorSpec::VirLambda {
            n,
            lambda: lambda.clone(),
            b: b.clone(),
        }
    }

    /// Fermionic parity: only Clifford modes are odd.
    pub fn is_odd(&self) -> bool {
        matches!(self, OperatorSpec::Clifford(_))
    }

    /// Mode index (for Clifford modes, `2m`).
    pub fn index(&self) -> i64 {
        match self {
            OperatorSpec::Clifford(m2) => *m2 as i64,
            OperatorSpec::Heisenberg(k) => *k,
            OperatorSpec::VirHalf(n) | OperatorSpec::VirOne(n) => *n,
            OperatorSpec::VirLambda { n, .. } => *n,
        }
    }

    /// The same family at a different index.
    pub fn with_index(&self, index: i64) -> Self {
        match self {
            OperatorSpec::Clifford(_) => OperatorSpec::Clifford(index as i32),
            OperatorSpec::Heisenberg(_) => OperatorSpec::Heisenberg(index),
            OperatorSpec::VirHalf(_) => OperatorSpec::VirHalf(index),
            OperatorSpec::VirOne(_) => OperatorSpec::VirOne(index),
            OperatorSpec::VirLambda { lambda, b, .. } => OperatorSpec::vir_lambda(index, lambda, b),
        }
    }

    /// Radicand of the operator's parameters (1 for parameter-free kinds).
    pub fn radicand(&self) -> Result<u64> {
        match self {
            OperatorSpec::VirLambda { lambda, b, .. } => lambda.common_radicand(b),
            _ => Ok(1),
        }
    }

    /// Central charge for Virasoro kinds.
    pub fn central_charge(&self) -> Option<Surd> {
        match self {
            OperatorSpec::VirHalf(_) => Some(Surd::ratio(1, 2)),
            OperatorSpec::VirOne(_) => Some(Surd::one()),
            OperatorSpec::VirLambda { lambda, .. } => Some(lambda_central_charge(lambda)),
            _ => None,
        }
    }
}

/// `-12 lambda^2 + 12 lambda - 2`.
pub fn lambda_central_charge(lambda: &Surd) -> Surd {
    let twelve = Surd::from_integer(12);
    &(&(-&(&twelve * &lambda.square())) + &(&twelve * lambda)) - &Surd::from_integer(2)
}

impl fmt::Display for OperatorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorSpec::Clifford(m2) => {
                let m = BigRational::new(BigInt::from(*m2), BigInt::from(2));
                write!(f, "phi[{m}]")
            }
            OperatorSpec::Heisenberg(k) => write!(f, "h[{k}]"),
            OperatorSpec::VirHalf(n) => write!(f, "Lhalf[{n}]"),
            OperatorSpec::VirOne(n) => write!(f, "Lone[{n}]"),
            OperatorSpec::VirLambda { n, lambda, b } => write!(f, "L[{n};lambda={lambda};b={b}]"),
        }
    }
}

impl FromStr for OperatorSpec {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Parse {
            what: "operator",
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let s = input.trim();
        let open = s.find('[').ok_or_else(|| bad("missing '['"))?;
        let body = s[open + 1..]
            .strip_suffix(']')
            .ok_or_else(|| bad("missing ']'"))?;
        let int = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| bad("index must be an integer"))
        };
        match &s[..open] {
            "phi" => {
                let m = BigRational::from_str(body.trim())
                    .map_err(|_| bad("index must be a half-integer"))?;
                let m2 = m * BigRational::from_integer(BigInt::from(2));
                if !m2.is_integer() || (m2.to_integer() % 2u8).is_zero() {
                    return Err(bad("Clifford index must lie in Z + 1/2"));
                }
                let m2: i32 = m2
                    .to_integer()
                    .try_into()
                    .map_err(|_| bad("index too large"))?;
                Ok(OperatorSpec::Clifford(m2))
            }
            "h" => Ok(OperatorSpec::Heisenberg(int(body)?)),
            "Lhalf" => Ok(OperatorSpec::VirHalf(int(body)?)),
            "Lone" => Ok(OperatorSpec::VirOne(int(body)?)),
            "L" => {
                let mut parts = body.split(';');
                let n = int(parts.next().unwrap_or(""))?;
                let mut lambda = None;
                let mut b = None;
                for part in parts {
                    let (key, value) = part
                        .split_once('=')
                        .ok_or_else(|| bad("expected key=value"))?;
                    let value: Surd = value.parse()?;
                    match key.trim() {
                        "lambda" => lambda = Some(value),
                        "b" => b = Some(value),
                        _ => return Err(bad("unknown parameter")),
                    }
                }
                let lambda = lambda.ok_or_else(|| bad("missing lambda"))?;
                let b = b.ok_or_else(|| bad("missing b"))?;
                lambda.common_radicand(&b)?;
                Ok(OperatorSpec::VirLambda { n, lambda, b })
            }
            _ => Err(bad("unknown operator family")),
        }
    }
}

impl Serialize for OperatorSpec {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for OperatorSpec {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

type RatState = BTreeMap<BasisVector, BigRational>;

fn add_rat(acc: &mut RatState, v: BasisVector, c: BigRational) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&v) {
        Some(existing) => {
            *existing += c;
            if existing.is_zero() {
                acc.remove(&v);
            }
        }
        None => {
            acc.insert(v, c);
        }
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `:phi_m phi_n: v` with `m2 = 2m`, `n2 = 2n`, as a signed basis vector.
fn normal_ordered_pair(m2: i32, n2: i32, v: &BasisVector) -> Option<(bool, BasisVector)> {
    let (first, second, flip) = if m2 < 0 {
        (n2, m2, false)
    } else {
        (m2, n2, true)
    };
    let (s1, w) = v.apply_mode(first)?;
    let (s2, u) = w.apply_mode(second)?;
    Some((s1 ^ s2 ^ flip, u))
}

/// `sum_{m+n=total} coeff(m) :phi_m phi_n: v`, indices doubled.
fn apply_bilinear(total2: i32, coeff: impl Fn(i32) -> BigRational, v: &BasisVector) -> RatState {
    let top = v.max_occupation().map_or(0, |n| n as i32);
    let bound = 2 * (top + total2.abs() / 2 + 2) + 1;
    let mut out = RatState::new();
    let mut m2 = -bound;
    while m2 <= bound {
        let n2 = total2 - m2;
        if let Some((negative, w)) = normal_ordered_pair(m2, n2, v) {
            let c = coeff(m2);
            add_rat(&mut out, w, if negative { -c } else { c });
        }
        m2 += 2;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum RationalOp {
    Heisenberg(i64),
    Half(i64),
    One(i64),
}

/// Applies mode operators with memoized images of basis vectors.
///
/// Not `Sync`; concurrent callers should each hold their own engine.
#[derive(Default)]
pub struct ModeEngine {
    cache: RefCell<HashMap<(RationalOp, BasisVector), Rc<RatState>>>,
}

impl ModeEngine {
    pub fn new() -> Self {
        ModeEngine::default()
    }

    fn rational_image(&self, op: RationalOp, v: &BasisVector) -> Rc<RatState> {
        let key = (op, v.clone());
        if let Some(hit) = self.cache.borrow().get(&key) {
            return Rc::clone(hit);
        }
        let image = Rc::new(self.compute(op, v));
        self.cache.borrow_mut().insert(key, Rc::clone(&image));
        image
    }

    fn compute(&self, op: RationalOp, v: &BasisVector) -> RatState {
        let energy = v.energy_quarters();
        match op {
            // h_k lowers the energy by 2k, L^{1/2}_n and L^1_n by n
            RationalOp::Heisenberg(k) if 8 * k > energy => RatState::new(),
            RationalOp::Half(n) | RationalOp::One(n) if 4 * n > energy => RatState::new(),
            RationalOp::Heisenberg(k) => apply_bilinear(
                (4 * k) as i32,
                |m2| {
                    let n2 = (4 * k) as i32 - m2;
                    let sign = if ((n2 + 1) / 2).rem_euclid(2) == 0 {
                        1
                    } else {
                        -1
                    };
                    rat(sign, 2)
                },
                v,
            ),
            RationalOp::Half(n) => apply_bilinear((2 * n) as i32, |m2| rat(-(m2 as i64 + 1), 4), v),
            RationalOp::One(n) => self.sugawara(n, v),
        }
    }

    /// `1/2 sum_{i+j=n} :h_i h_j: v`.
    fn sugawara(&self, n: i64, v: &BasisVector) -> RatState {
        let reach = v.energy_quarters() / 8 + 1;
        let half = rat(1, 2);
        let mut out = RatState::new();
        for i in (n.min(0) - reach - 1)..=(n.max(0) + reach + 1) {
            let j = n - i;
            let (left, right) = if i < 0 { (i, j) } else { (j, i) };
            let inner = self.rational_image(RationalOp::Heisenberg(right), v);
            for (w, c) in inner.iter() {
                let outer = self.rational_image(RationalOp::Heisenberg(left), w);
                for (u, d) in outer.iter() {
                    add_rat(&mut out, u.clone(), &half * c * d);
                }
            }
        }
        out
    }

    fn accumulate(
        &self,
        out: &mut State,
        op: RationalOp,
        v: &BasisVector,
        scale: &Surd,
    ) -> Result<()> {
        if scale.is_zero() {
            return Ok(());
        }
        for (w, r) in self.rational_image(op, v).iter() {
            out.try_add_term(w.clone(), &scale.scale(r))?;
        }
        Ok(())
    }

    /// Exact image of `s` under `op`.
    pub fn apply(&self, op: &OperatorSpec, s: &State) -> Result<State> {
        combine_radicands(op.radicand()?, s.radicand())?;
        let mut out = State::zero();
        match op {
            OperatorSpec::Clifford(m2) => return Ok(s.apply_mode(*m2)),
            OperatorSpec::Heisenberg(k) => {
                for (v, c) in s.terms() {
                    self.accumulate(&mut out, RationalOp::Heisenberg(*k), v, c)?;
                }
            }
            OperatorSpec::VirHalf(n) => {
                for (v, c) in s.terms() {
                    self.accumulate(&mut out, RationalOp::Half(*n), v, c)?;
                }
            }
            OperatorSpec::VirOne(n) => {
                for (v, c) in s.terms() {
                    self.accumulate(&mut out, RationalOp::One(*n), v, c)?;
                }
            }
            OperatorSpec::VirLambda { n, lambda, b } => {
                let (h_coeff, constant) = lambda_shift(*n, lambda, b);
                for (v, c) in s.terms() {
                    self.accumulate(&mut out, RationalOp::One(*n), v, c)?;
                    self.accumulate(
                        &mut out,
                        RationalOp::Heisenberg(*n),
                        v,
                        &c.try_mul(&h_coeff)?,
                    )?;
                    out.try_add_term(v.clone(), &c.try_mul(&constant)?)?;
                }
            }
        }
        Ok(out)
    }

    /// `a(b(s)) - (-1)^{p(a)p(b)} b(a(s))`.
    pub fn commutator(&self, a: &OperatorSpec, b: &OperatorSpec, s: &State) -> Result<State> {
        let ab = self.apply(a, &self.apply(b, s)?)?;
        let ba = self.apply(b, &self.apply(a, s)?)?;
        if a.is_odd() && b.is_odd() {
            ab.try_add(&ba)
        } else {
            ab.try_sub(&ba)
        }
    }
}

/// Coefficient of `h_n` and the scalar term in `L^{lambda,b}_n - L^1_n`.
fn lambda_shift(n: i64, lambda: &Surd, b: &Surd) -> (Surd, Surd) {
    let a = (&Surd::one() - &(&Surd::from_integer(2) * lambda)).scale(&rat(1, 4));
    let h_coeff = -&(&a.scale(&BigRational::from_integer(BigInt::from(2 * n + 1))) + b);
    let constant = if n == 0 {
        (&(&a + b).square() - &a.square().scale(&rat(4, 1))).scale(&rat(1, 2))
    } else {
        Surd::zero()
    };
    (h_coeff, constant)
}

/// Exact image of `s` under `op`, with a fresh cache.
pub fn apply_op(op: &OperatorSpec, s: &State) -> Result<State> {
    ModeEngine::new().apply(op, s)
}

/// Graded commutator of two mode operators applied to `s`.
pub fn commutator_apply(a: &OperatorSpec, b: &OperatorSpec, s: &State) -> Result<State> {
    ModeEngine::new().commutator(a, b, s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModeIdentity {
    /// `L^{1/2}_0 = 2 L^1_0 + 1/2 h_0`.
    HalfEqualsSugawara,
    /// `L^{1/2,-1/4}_n = 1/2 L^{1/2}_{2n} + delta_{n,0}/32`.
    ShiftedBQuarter,
}

impl FromStr for ModeIdentity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "half-equals-sugawara" => Ok(ModeIdentity::HalfEqualsSugawara),
            "shifted-b-quarter" => Ok(ModeIdentity::ShiftedBQuarter),
            other => Err(Error::Parse {
                what: "mode identity",
                input: other.to_string(),
                reason: "expected half-equals-sugawara or shifted-b-quarter".into(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityFailure {
    pub vector: BasisVector,
    pub index: i64,
    pub defect: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DefectReport {
    pub identity: ModeIdentity,
    pub vectors_checked: usize,
    pub indices: Vec<i64>,
    /// Largest support of a nonzero defect; 0 when the identity holds everywhere.
    pub max_defect_support: usize,
    pub first_failure: Option<IdentityFailure>,
}

impl DefectReport {
    pub fn holds(&self) -> bool {
        self.max_defect_support == 0
    }
}

/// Applies both sides of `identity` to every vector of `basis`. For the
/// shifted identity the index runs over `|n| <= index_bound`.
pub fn mode_identity_check(
    identity: ModeIdentity,
    basis: &[BasisVector],
    index_bound: i64,
) -> DefectReport {
    let engine = ModeEngine::new();
    let indices: Vec<i64> = match identity {
        ModeIdentity::HalfEqualsSugawara => vec![0],
        ModeIdentity::ShiftedBQuarter => (-index_bound..=index_bound).collect(),
    };
    let mut report = DefectReport {
        identity,
        vectors_checked: basis.len(),
        indices: indices.clone(),
        max_defect_support: 0,
        first_failure: None,
    };
    for v in basis {
        let s = State::basis(v.clone());
        for &n in &indices {
            let defect =
                identity_defect(&engine, identity, n, &s).expect("rational operators only");
            if !defect.is_zero() {
                report.max_defect_support = report.max_defect_support.max(defect.len());
                if report.first_failure.is_none() {
                    report.first_failure = Some(IdentityFailure {
                        vector: v.clone(),
                        index: n,
                        defect: defect.to_string(),
                    });
                }
            }
        }
    }
    report
}

fn identity_defect(
    engine: &ModeEngine,
    identity: ModeIdentity,
    n: i64,
    s: &State,
) -> Result<State> {
    match identity {
        ModeIdentity::HalfEqualsSugawara => {
            let lhs = engine.apply(&OperatorSpec::VirHalf(0), s)?;
            let mut rhs = engine
                .apply(&OperatorSpec::VirOne(0), s)?
                .scale_rational(&rat(2, 1));
            rhs.try_axpy(
                &Surd::ratio(1, 2),
                &engine.apply(&OperatorSpec::Heisenberg(0), s)?,
            )?;
            lhs.try_sub(&rhs)
        }
        ModeIdentity::ShiftedBQuarter => {
            let op = OperatorSpec::vir_lambda(n, &Surd::ratio(1, 2), &Surd::ratio(-1, 4));
            let lhs = engine.apply(&op, s)?;
            let mut rhs = engine
                .apply(&OperatorSpec::VirHalf(2 * n), s)?
                .scale_rational(&rat(1, 2));
            if n == 0 {
                rhs.try_axpy(&Surd::ratio(1, 32), s)?;
            }
            lhs.try_sub(&rhs)
        }
    }
}

/// Expected right-hand side of the Virasoro bracket `[L_m, L_n] v`.
pub fn virasoro_bracket_rhs(
    engine: &ModeEngine,
    family: &OperatorSpec,
    m: i64,
    n: i64,
    s: &State,
) -> Result<State> {
    let c = family
        .central_charge()
        .ok_or_else(|| Error::UnsupportedSector(format!("{family} is not a Virasoro mode")))?;
    let mut rhs = engine
        .apply(&family.with_index(m + n), s)?
        .scale_rational(&BigRational::from_integer(BigInt::from(m - n)));
    if m + n == 0 {
        let anomaly = c.scale(&rat(m * m * m - m, 12));
        rhs.try_axpy(&anomaly, s)?;
    }
    Ok(rhs)
}

/// `true` iff `[L_m, L_n] s` matches the Virasoro relation exactly.
pub fn virasoro_bracket_holds(
    engine: &ModeEngine,
    family: &OperatorSpec,
    m: i64,
    n: i64,
    s: &State,
) -> Result<bool> {
    let lhs = engine.commutator(&family.with_index(m), &family.with_index(n), s)?;
    Ok(lhs == virasoro_bracket_rhs(engine, family, m, n, s)?)
}

impl ModeEngine {
    /// Convenience: `[h_m, h_n] s == m delta_{m+n,0} s`.
    pub fn heisenberg_bracket_holds(&self, m: i64, n: i64, s: &State) -> Result<bool> {
        let lhs = self.commutator(
            &OperatorSpec::Heisenberg(m),
            &OperatorSpec::Heisenberg(n),
            s,
        )?;
        let rhs = if m + n == 0 {
            s.scale_rational(&BigRational::from_integer(BigInt::from(m)))
        } else {
            State::zero()
        };
        Ok(lhs == rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{enumerate_basis, vacuum_like, BasisFilter};

    fn bv(occ: &[u32]) -> BasisVector {
        BasisVector::from_occupations(occ.iter().copied()).unwrap()
    }

    #[test]
    fn h0_on_even_occupation() {
        let s = State::basis(bv(&[0]));
        let out = apply_op(&OperatorSpec::Heisenberg(0), &s).unwrap();
        assert_eq!(out, s.scale_rational(&rat(-1, 1)));
    }

    #[test]
    fn half_energy_of_v2() {
        let s = State::basis(bv(&[1, 3]));
        let out = apply_op(&OperatorSpec::VirHalf(0), &s).unwrap();
        assert_eq!(out, s.scale_rational(&rat(5, 1)));
    }

    #[test]
    fn heisenberg_vacuum_bracket() {
        let out = commutator_apply(
            &OperatorSpec::Heisenberg(1),
            &OperatorSpec::Heisenberg(-1),
            &State::vacuum(),
        )
        .unwrap();
        assert_eq!(out, State::vacuum());
    }

    #[test]
    fn sugawara_vacuum_bracket() {
        let out = commutator_apply(
            &OperatorSpec::VirOne(2),
            &OperatorSpec::VirOne(-2),
            &State::vacuum(),
        )
        .unwrap();
        assert_eq!(out, State::vacuum().scale_rational(&rat(1, 2)));
    }

    #[test]
    fn clifford_bracket_is_graded() {
        let s = State::basis(bv(&[2]));
        let out =
            commutator_apply(&OperatorSpec::Clifford(3), &OperatorSpec::Clifford(-3), &s).unwrap();
        assert_eq!(out, s);
    }

    #[test]
    fn energy_commutes_with_heisenberg_by_minus_2k() {
        let engine = ModeEngine::new();
        for v in enumerate_basis(40, None) {
            let s = State::basis(v);
            for k in -3i64..=3 {
                let lhs = engine
                    .commutator(&OperatorSpec::VirHalf(0), &OperatorSpec::Heisenberg(k), &s)
                    .unwrap();
                let rhs = engine
                    .apply(&OperatorSpec::Heisenberg(k), &s)
                    .unwrap()
                    .scale_rational(&rat(-2 * k, 1));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn h0_is_charge_and_energy_is_diagonal() {
        let engine = ModeEngine::new();
        for v in enumerate_basis(60, None) {
            let s = State::basis(v.clone());
            let h0 = engine.apply(&OperatorSpec::Heisenberg(0), &s).unwrap();
            assert_eq!(h0, s.scale_rational(&rat(v.dg(), 1)));
            let l0 = engine.apply(&OperatorSpec::VirHalf(0), &s).unwrap();
            assert_eq!(l0, s.scale_rational(&rat(v.energy_quarters(), 4)));
        }
    }

    #[test]
    fn heisenberg_modes_shift_degh() {
        let engine = ModeEngine::new();
        for v in enumerate_basis(48, None) {
            let s = State::basis(v.clone());
            for k in 1i64..=3 {
                for (w, _) in engine
                    .apply(&OperatorSpec::Heisenberg(-k), &s)
                    .unwrap()
                    .terms()
                {
                    assert_eq!(w.dg(), v.dg());
                    assert_eq!(w.degh(), v.degh() + k as u64);
                }
                for (w, _) in engine
                    .apply(&OperatorSpec::Heisenberg(k), &s)
                    .unwrap()
                    .terms()
                {
                    assert_eq!(w.dg(), v.dg());
                    assert_eq!(w.degh() + k as u64, v.degh());
                }
            }
        }
    }

    #[test]
    fn lambda_highest_weight_examples() {
        let lambda = Surd::ratio(1, 3);
        let b = Surd::ratio(1, 5);
        for n in -3i64..=3 {
            let v = State::basis(vacuum_like(n));
            let out = apply_op(&OperatorSpec::vir_lambda(1, &lambda, &b), &v).unwrap();
            assert!(out.is_zero());
        }
        // n = 0: ((b + a)^2)/2 - 2a^2 with a = 1/12
        let out = apply_op(&OperatorSpec::vir_lambda(0, &lambda, &b), &State::vacuum()).unwrap();
        let a = Surd::ratio(1, 12);
        let expected =
            &(&(&a + &b).square() * &Surd::ratio(1, 2)) - &(&a.square() * &Surd::from_integer(2));
        assert_eq!(out, State::vacuum().try_scale(&expected).unwrap());
    }

    #[test]
    fn vir_one_is_lambda_half_zero() {
        let engine = ModeEngine::new();
        let half = Surd::ratio(1, 2);
        for v in enumerate_basis(32, Some(BasisFilter::Charge(0))) {
            let s = State::basis(v);
            for n in -2i64..=2 {
                assert_eq!(
                    engine.apply(&OperatorSpec::VirOne(n), &s).unwrap(),
                    engine
                        .apply(&OperatorSpec::vir_lambda(n, &half, &Surd::zero()), &s)
                        .unwrap()
                );
            }
        }
    }

    #[test]
    fn identity_examples() {
        let basis = enumerate_basis(24, None);
        assert!(mode_identity_check(ModeIdentity::HalfEqualsSugawara, &basis, 0).holds());
        let vac = [BasisVector::vacuum()];
        assert!(mode_identity_check(ModeIdentity::ShiftedBQuarter, &vac, 0).holds());
        let empty: [BasisVector; 0] = [];
        let report = mode_identity_check(ModeIdentity::ShiftedBQuarter, &empty, 2);
        assert!(report.holds());
        assert_eq!(report.vectors_checked, 0);
    }

    #[test]
    fn virasoro_brackets_small_window() {
        let engine = ModeEngine::new();
        let families = [
            OperatorSpec::VirHalf(0),
            OperatorSpec::VirOne(0),
            OperatorSpec::vir_lambda(0, &Surd::ratio(1, 3), &Surd::ratio(1, 5)),
            OperatorSpec::vir_lambda(0, &Surd::ratio(1, 2), &"1/2*sqrt(2)".parse().unwrap()),
        ];
        for family in &families {
            for v in enumerate_basis(24, None) {
                let s = State::basis(v.clone());
                for m in -3i64..=3 {
                    for n in -3i64..=3 {
                        assert!(
                            virasoro_bracket_holds(&engine, family, m, n, &s).unwrap(),
                            "{family} [{m},{n}] on {v}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn radicand_mismatch_is_reported() {
        let s = State::vacuum().try_scale(&Surd::sqrt(2)).unwrap();
        let op = OperatorSpec::vir_lambda(0, &Surd::ratio(1, 2), &Surd::sqrt(3));
        assert_eq!(
            apply_op(&op, &s),
            Err(Error::RadicandMismatch { left: 3, right: 2 })
        );
    }

    #[test]
    fn operator_text_round_trip() {
        for text in [
            "h[-3]",
            "Lhalf[2]",
            "Lone[0]",
            "L[1;lambda=1/3;b=0+1/2*sqrt(2)]",
            "phi[-3/2]",
        ] {
            let op: OperatorSpec = text.parse().unwrap();
            assert_eq!(op.to_string(), text);
        }
        assert!("phi[1]".parse::<OperatorSpec>().is_err());
        assert!("L[1;lambda=sqrt(2);b=sqrt(3)]"
            .parse::<OperatorSpec>()
            .is_err());
        assert!("Q[1]".parse::<OperatorSpec>().is_err());
    }
}
