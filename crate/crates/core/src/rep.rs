//! Trace characters, singular vectors and charge-sector decompositions of the
//! Virasoro representations carried by the Fock space.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fock::{enumerate_basis, vacuum_like, BasisFilter, BasisVector, Parity, State};
use crate::linalg::{nullspace, rank};
use crate::modes::{lambda_central_charge, ModeEngine, OperatorSpec};
use crate::scalar::Surd;
use crate::series::{
    known_character, partition_series, product_form, sum_form, CharSeries, KnownCharacter,
    ProductForm, SeriesTerm, SumForm,
};

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selector {
    Full,
    Parity(Parity),
    Charge(i64),
}

/// Which vectors to trace over and which zero mode grades them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorSpec {
    pub selector: Selector,
    /// `VirHalf(0)`, `VirOne(0)` or `VirLambda { n: 0, .. }`.
    pub weight: OperatorSpec,
    /// Weight each vector by `z^{h_0}`.
    pub include_charge_variable: bool,
    /// Subtracted from every eigenvalue before it becomes a `q` exponent.
    pub weight_offset: Surd,
}

impl SectorSpec {
    pub fn new(selector: Selector, weight: OperatorSpec) -> Self {
        SectorSpec {
            selector,
            weight,
            include_charge_variable: false,
            weight_offset: Surd::zero(),
        }
    }

    pub fn with_charge_variable(mut self) -> Self {
        self.include_charge_variable = true;
        self
    }

    pub fn relative_to(mut self, offset: Surd) -> Self {
        self.weight_offset = offset;
        self
    }

    fn check_weight(&self) -> Result<()> {
        match &self.weight {
            OperatorSpec::VirHalf(0)
            | OperatorSpec::VirOne(0)
            | OperatorSpec::VirLambda { n: 0, .. } => {
                self.weight.radicand()?;
                Ok(())
            }
            other => Err(Error::UnsupportedSector(format!("weight operator {other}"))),
        }
    }

    /// Eigenvalue of the weight operator on `v_n`.
    fn sector_weight(&self, n: i64) -> Result<Surd> {
        match &self.weight {
            OperatorSpec::VirHalf(_) => Ok(Surd::from_rational(rat(4 * n * n + 2 * n, 4))),
            OperatorSpec::VirOne(_) => Ok(Surd::from_rational(rat(n * n, 2))),
            OperatorSpec::VirLambda { lambda, b, .. } => hw_weight(lambda, b, n),
            other => Err(Error::UnsupportedSector(format!("weight operator {other}"))),
        }
    }

    /// Where `sector_weight` is smallest as a function of a real charge.
    fn vertex(&self) -> Result<Surd> {
        match &self.weight {
            OperatorSpec::VirHalf(_) => Ok(Surd::ratio(-1, 4)),
            OperatorSpec::VirLambda { lambda, b, .. } => b.try_add(&lambda_shift(lambda)),
            _ => Ok(Surd::zero()),
        }
    }

    /// Eigenvalue increase per Heisenberg level.
    fn level_gap(&self) -> i64 {
        match self.weight {
            OperatorSpec::VirHalf(_) => 2,
            _ => 1,
        }
    }

    fn charges(&self, bound: &Surd) -> Result<Vec<i64>> {
        let parity = match self.selector {
            Selector::Charge(n) => return Ok(vec![n]),
            Selector::Full => None,
            Selector::Parity(p) => Some(p),
        };
        let vertex = self.vertex()?;
        let mut out = Vec::new();
        for (start, dir, away) in [(0, 1, Ordering::Greater), (-1, -1, Ordering::Less)] {
            let mut n: i64 = start;
            loop {
                let rel = self.sector_weight(n)?.try_sub(&self.weight_offset)?;
                let beyond = rel.compare(bound)? == Ordering::Greater;
                if beyond && Surd::from_integer(n).compare(&vertex)? == away {
                    break;
                }
                if !beyond && parity.is_none_or(|p| Parity::of(n) == p) {
                    out.push(n);
                }
                n += dir;
            }
        }
        out.sort_unstable();
        Ok(out)
    }
}

/// `(1 - 2 lambda) / 4`.
fn lambda_shift(lambda: &Surd) -> Surd {
    (&Surd::one() - &lambda.scale(&rat(2, 1))).scale(&rat(1, 4))
}

/// `tr q^{L_0 - offset} z^{h_0}` over the selected sector, exact through `q_order`.
///
/// Fails if the weight operator is not diagonal on some enumerated basis vector
/// or an exponent leaves the quarter lattice.
pub fn trace_character(
    engine: &ModeEngine,
    sector: &SectorSpec,
    q_order: i64,
    z_window: i64,
) -> Result<CharSeries> {
    sector.check_weight()?;
    let bound = Surd::from_rational(rat(q_order, 4));
    let mut out = CharSeries::zero(q_order, z_window);
    for n in sector.charges(&bound)? {
        let rel = sector.sector_weight(n)?.try_sub(&sector.weight_offset)?;
        let Some(rel) = rel.to_rational() else {
            return Err(Error::OffLattice(format!(
                "lowest weight of charge {n} relative to offset is {rel}"
            )));
        };
        let room = (rat(q_order, 4) - rel) / rat(sector.level_gap(), 1);
        if room.is_negative() {
            continue;
        }
        let max_level = room.floor().to_integer().to_i64().unwrap_or(i64::MAX);
        let z = if sector.include_charge_variable { n } else { 0 };
        for v in enumerate_basis(
            8 * max_level + 4 * n * n + 2 * n,
            Some(BasisFilter::Charge(n)),
        ) {
            let image = engine.apply(&sector.weight, &State::basis(v.clone()))?;
            let eigen = image
                .eigenvalue_on(&v)
                .ok_or_else(|| Error::NonDiagonal(v.to_string()))?;
            let e = eigen.try_sub(&sector.weight_offset)?;
            let q4 = e
                .as_quarters()
                .ok_or_else(|| Error::OffLattice(format!("{e} on {v}")))?;
            out.add_term(z, q4, BigRational::from_integer(BigInt::from(1)));
        }
    }
    Ok(out)
}

/// Partitions of `level` as non-decreasing part lists, in lexicographic order.
pub fn partitions(level: u64) -> Vec<Vec<u64>> {
    fn extend(rest: u64, min: u64, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 0 {
            out.push(current.clone());
            return;
        }
        for part in min..=rest {
            current.push(part);
            extend(rest - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(level, 1, &mut Vec::new(), &mut out);
    out
}

/// Basis vectors of charge `n` at Heisenberg level `level`.
pub fn level_cell(n: i64, level: u64) -> Vec<BasisVector> {
    let energy = 8 * level as i64 + 4 * n * n + 2 * n;
    enumerate_basis(energy, Some(BasisFilter::Charge(n)))
        .into_iter()
        .filter(|v| v.degh() == level)
        .collect()
}

fn coordinates(states: &[State], cell: &[BasisVector]) -> Vec<Vec<Surd>> {
    states
        .iter()
        .map(|s| cell.iter().map(|v| s.coefficient(v)).collect())
        .collect()
}

/// `h_{-k_l} ... h_{-k_1} v_n` over the partitions `k_1 <= ... <= k_l` of `level`,
/// checked to form a basis of the level cell.
pub fn h_eigenbasis(engine: &ModeEngine, n: i64, level: u64) -> Result<Vec<State>> {
    let mut states = Vec::new();
    for parts in partitions(level) {
        let mut s = State::basis(vacuum_like(n));
        for &k in &parts {
            s = engine.apply(&OperatorSpec::Heisenberg(-(k as i64)), &s)?;
        }
        states.push(s);
    }
    let cell = level_cell(n, level);
    let r = rank(&coordinates(&states, &cell), cell.len())?;
    if r != states.len() || r != cell.len() {
        return Err(Error::Inconsistent(format!(
            "charge {n} level {level}: {} monomials of rank {r} in a cell of dimension {}",
            states.len(),
            cell.len()
        )));
    }
    Ok(states)
}

/// Basis of the vectors in the level cell of `F_(n)` killed by
/// `L^{lambda,b}_j` for `1 <= j <= j_max`, in reduced echelon form.
pub fn singular_vector_search(
    engine: &ModeEngine,
    lambda: &Surd,
    b: &Surd,
    n: i64,
    level: u64,
    j_max: i64,
) -> Result<Vec<State>> {
    lambda.common_radicand(b)?;
    if level < 1 || j_max < 1 {
        return Err(Error::OutOfRange(format!("level {level}, j_max {j_max}")));
    }
    let cell = level_cell(n, level);
    let mut rows: BTreeMap<(i64, BasisVector), Vec<Surd>> = BTreeMap::new();
    for (col, v) in cell.iter().enumerate() {
        let source = State::basis(v.clone());
        for j in 1..=j_max {
            let image = engine.apply(&OperatorSpec::vir_lambda(j, lambda, b), &source)?;
            for (w, c) in image.terms() {
                rows.entry((j, w.clone()))
                    .or_insert_with(|| vec![Surd::zero(); cell.len()])[col] = c.clone();
            }
        }
    }
    let matrix: Vec<Vec<Surd>> = rows.into_values().collect();
    nullspace(&matrix, cell.len())?
        .into_iter()
        .map(|coords| {
            State::from_terms(
                cell.iter()
                    .cloned()
                    .zip(coords)
                    .filter(|(_, c)| !c.is_zero()),
            )
        })
        .collect()
}

/// Level `k(k+m)` of the singular vector `explicit_singular(m, k)` above `|0>`.
pub fn singular_level(m: i64, k: i64) -> i64 {
    k * (k + m)
}

/// The monomial singular vector of `F_(0)` at `b = m/sqrt(2)`, `lambda = 1/2`.
///
/// For `m >= 0` it occupies the odd modes `2m+1, ..., 2(k+m)-1` and the even
/// modes `0, ..., 2(k-1)`; for `m < 0` the odd modes `1, ..., 2(k+m)-1` and
/// the even modes `-2m, ..., 2(k-1)`.
pub fn explicit_singular(m: i64, k: i64) -> Result<BasisVector> {
    let out_of_range = || Error::OutOfRange(format!("(m, k) = ({m}, {k})"));
    let (odd, even): (Vec<i64>, Vec<i64>) = if m >= 0 {
        if k < 0 {
            return Err(out_of_range());
        }
        (
            (0..k).map(|i| 2 * (m + i) + 1).collect(),
            (0..k).map(|i| 2 * i).collect(),
        )
    } else {
        if k < -m {
            return Err(out_of_range());
        }
        (
            (0..k + m).map(|i| 2 * i + 1).collect(),
            (-m..k).map(|i| 2 * i).collect(),
        )
    };
    let occupations = odd
        .into_iter()
        .chain(even)
        .map(|x| u32::try_from(x).map_err(|_| out_of_range()))
        .collect::<Result<Vec<u32>>>()?;
    let mut sorted = occupations;
    sorted.sort_unstable();
    BasisVector::from_occupations(sorted)
}

/// `(b + a - n)^2 / 2 - 2 a^2` with `a = (1 - 2 lambda)/4`: the `L^{lambda,b}_0`
/// eigenvalue on `v_n`.
pub fn hw_weight(lambda: &Surd, b: &Surd, n: i64) -> Result<Surd> {
    let a = lambda_shift(lambda);
    let shifted = b.try_add(&a)?.try_sub(&Surd::from_integer(n))?;
    let half = rat(1, 2);
    shifted
        .square()
        .scale(&half)
        .try_sub(&a.square().scale(&rat(2, 1)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn factor(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// The eight sign triples, `+++` first.
    pub fn triples() -> Vec<[Sign; 3]> {
        let both = [Sign::Plus, Sign::Minus];
        let mut out = Vec::with_capacity(8);
        for a in both {
            for b in both {
                for c in both {
                    out.push([a, b, c]);
                }
            }
        }
        out
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscreteSolution {
    pub lambda: Surd,
    pub b: Surd,
    pub c: Surd,
    pub h: Surd,
}

fn check_kac(m: u32, r: i64, s: i64) -> Result<()> {
    if 1 <= s && s <= r && r <= m as i64 + 1 {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!(
            "(m, r, s) = ({m}, {r}, {s}) needs 1 <= s <= r <= m+1"
        )))
    }
}

/// Solves for `(lambda, b)` placing `F_(n)` in the unitary discrete series:
/// `2 lambda - 1 = s1 sqrt(2/P)` and
/// `b - n = s2 (2((m+3)r - (m+2)s) + s3) / (2 sqrt(2P))`, `P = (m+2)(m+3)`.
pub fn discrete_series_solve(
    m: u32,
    r: i64,
    s: i64,
    n: i64,
    signs: [Sign; 3],
) -> Result<DiscreteSolution> {
    check_kac(m, r, s)?;
    let m = m as i64;
    let p = (m + 2) * (m + 3);
    let root = Surd::sqrt(2 * p as u64);
    let [s1, s2, s3] = signs.map(Sign::factor);
    let lambda = Surd::ratio(1, 2).try_add(&root.scale(&rat(s1, 2 * p)))?;
    let x = (m + 3) * r - (m + 2) * s;
    let b = Surd::from_integer(n).try_add(&root.scale(&rat(s2 * (2 * x + s3), 4 * p)))?;
    let c = lambda_central_charge(&lambda);
    let h = hw_weight(&lambda, &b, n)?;
    Ok(DiscreteSolution { lambda, b, c, h })
}

/// `c = 1 - 6/P` and `h_{r,s} = (((m+3)r - (m+2)s)^2 - 1) / (4P)`.
pub fn discrete_series_targets(m: u32, r: i64, s: i64) -> Result<(BigRational, BigRational)> {
    check_kac(m, r, s)?;
    let m = m as i64;
    let p = (m + 2) * (m + 3);
    let x = (m + 3) * r - (m + 2) * s;
    Ok((rat(p - 6, p), rat(x * x - 1, 4 * p)))
}

/// First sign triple (at `n = 0`) whose solution reproduces both targets exactly.
pub fn discrete_series_match(
    m: u32,
    r: i64,
    s: i64,
) -> Result<Option<([Sign; 3], DiscreteSolution)>> {
    let (c, h) = discrete_series_targets(m, r, s)?;
    let (c, h) = (Surd::from_rational(c), Surd::from_rational(h));
    for signs in Sign::triples() {
        let sol = discrete_series_solve(m, r, s, 0, signs)?;
        if sol.c == c && sol.h == h {
            return Ok(Some((signs, sol)));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DecompositionCase {
    I,
    II,
    III,
}

impl fmt::Display for DecompositionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecompositionCase::I => "I",
            DecompositionCase::II => "II",
            DecompositionCase::III => "III",
        })
    }
}

impl FromStr for DecompositionCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "I" | "1" => Ok(DecompositionCase::I),
            "II" | "2" => Ok(DecompositionCase::II),
            "III" | "3" => Ok(DecompositionCase::III),
            _ => Err(Error::Parse {
                what: "decomposition case",
                input: s.to_string(),
                reason: "expected I, II or III".into(),
            }),
        }
    }
}

/// `(n1, m)` with `b = n1 + m/sqrt(2)`, if `b` has that form.
pub fn degenerate_form(b: &Surd) -> Option<(i64, i64)> {
    let n1 = b.rational_part();
    if !n1.is_integer() {
        return None;
    }
    let m = if b.surd_part().is_zero() {
        BigRational::zero()
    } else if b.radicand() == 2 {
        b.surd_part() * rat(2, 1)
    } else {
        return None;
    };
    if !m.is_integer() {
        return None;
    }
    Some((n1.to_integer().to_i64()?, m.to_integer().to_i64()?))
}

pub fn case_of(b: &Surd) -> DecompositionCase {
    match degenerate_form(b) {
        None => DecompositionCase::I,
        Some((n1, _)) if n1.rem_euclid(2) == 0 => DecompositionCase::II,
        Some(_) => DecompositionCase::III,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SectorComparison {
    pub charge: i64,
    pub hw: Surd,
    pub reducible: bool,
    /// `4 hw` is the square of an integer.
    pub degenerate_weight: bool,
    pub computed: Vec<SeriesTerm>,
    pub predicted: Vec<SeriesTerm>,
    pub agree_to_q4: i64,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TelescopingCheck {
    pub m: i64,
    pub terms: usize,
    pub agree_to_q4: i64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReassemblyCheck {
    pub parity: Parity,
    /// Brute-force `L^{1/2}_0` trace against the reassembled computed sectors.
    pub trace_agree_to_q4: i64,
    /// Closed sum form against the reassembled predicted sectors.
    pub closed_form_agree_to_q4: i64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub case: DecompositionCase,
    pub b: Surd,
    pub q_order: i64,
    pub reducible_charge: Option<i64>,
    pub sectors: Vec<SectorComparison>,
    pub telescoping: Option<TelescopingCheck>,
    pub reassembly: Vec<ReassemblyCheck>,
    pub verdict: bool,
}

fn is_degenerate_weight(hw: &Surd) -> bool {
    let Some(h) = hw.to_rational() else {
        return false;
    };
    let four_h = h * rat(4, 1);
    if !four_h.is_integer() || four_h.is_negative() {
        return false;
    }
    let n = four_h.to_integer();
    let root = n.sqrt();
    &root * &root == n
}

/// `sum_{k >= max(0,-m)} ch M(1, (m+2k)^2/4)` through `q_order`, and the number of terms.
fn telescoping_sum(m: i64, q_order: i64) -> Result<(CharSeries, usize)> {
    let mut k = 0.max(-m);
    let mut acc = CharSeries::zero(q_order, 0);
    let mut terms = 0;
    while (m + 2 * k) * (m + 2 * k) <= q_order {
        acc = acc.add(&known_character(
            &KnownCharacter::C1Degenerate(m + 2 * k),
            q_order,
        )?);
        terms += 1;
        k += 1;
    }
    Ok((acc, terms))
}

/// `sum_k ch_{q^2} M(1, (m+2k)^2/4)` against `q^{m^2/2} / prod (1 - q^{2i})`.
fn telescoping_check(m: i64, q_order: i64) -> Result<TelescopingCheck> {
    let (sum, terms) = telescoping_sum(m, q_order)?;
    let lhs = sum.q_power(2).truncate(q_order, 0);
    let rhs = product_form(ProductForm::EulerEven, q_order, 0)
        .reciprocal()?
        .shift_q(2 * m * m)
        .truncate(q_order, 0);
    let agree = lhs.agree_to_q4(&rhs);
    Ok(TelescopingCheck {
        m,
        terms,
        agree_to_q4: agree,
        holds: lhs.first_discrepancy(&rhs).is_none(),
    })
}

/// Predicted character of a charge sector relative to its lowest weight.
fn predicted_relative(reducible_m: Option<i64>, q_order: i64) -> Result<CharSeries> {
    match reducible_m {
        None => Ok(partition_series(1, q_order)),
        Some(m) => {
            let (sum, _) = telescoping_sum(m, q_order + m * m)?;
            Ok(sum.shift_q(-m * m).truncate(q_order, 0))
        }
    }
}

/// Largest `|n|` with `4n^2 - 2|n| <= q_order`.
fn reassembly_reach(q_order: i64) -> i64 {
    let mut n = 0;
    while 4 * (n + 1) * (n + 1) - 2 * (n + 1) <= q_order {
        n += 1;
    }
    n
}

/// Checks the charge-sector decomposition of the fermion space under
/// `L^{1/2,b}` at `c = 1` for the sectors `|n| <= window`, plus the
/// telescoping and parity reassembly identities through `q_order`.
pub fn decomposition_report(
    engine: &ModeEngine,
    case: DecompositionCase,
    b: &Surd,
    q_order: i64,
    window: i64,
) -> Result<DecompositionReport> {
    if case_of(b) != case {
        return Err(Error::CaseMismatch {
            case: case.to_string(),
            b: b.to_string(),
        });
    }
    let lambda = Surd::ratio(1, 2);
    let degenerate = degenerate_form(b);
    let reach = window.max(reassembly_reach(q_order));

    let mut sectors = Vec::new();
    let mut computed_pieces = BTreeMap::new();
    let mut predicted_pieces = BTreeMap::new();
    for n in -reach..=reach {
        let hw = hw_weight(&lambda, b, n)?;
        let spec = SectorSpec::new(Selector::Charge(n), OperatorSpec::vir_lambda(0, &lambda, b))
            .relative_to(hw.clone());
        let computed = trace_character(engine, &spec, q_order, 0)?;
        let reducible_m = degenerate.filter(|&(n1, _)| n1 == n).map(|(_, m)| m);
        let predicted = predicted_relative(reducible_m, q_order)?;
        if n.abs() <= window {
            sectors.push(SectorComparison {
                charge: n,
                degenerate_weight: is_degenerate_weight(&hw),
                hw,
                reducible: reducible_m.is_some(),
                computed: computed.to_terms(),
                predicted: predicted.to_terms(),
                agree_to_q4: computed.agree_to_q4(&predicted),
                matches: computed.first_discrepancy(&predicted).is_none(),
            });
        }
        computed_pieces.insert(n, computed);
        predicted_pieces.insert(n, predicted);
    }

    let telescoping = match degenerate {
        Some((_, m)) => Some(telescoping_check(m, q_order)?),
        None => None,
    };

    let mut reassembly = Vec::new();
    for (parity, closed) in [
        (Parity::Even, SumForm::CharHalfEven),
        (Parity::Odd, SumForm::CharHalfOdd),
    ] {
        let assemble = |pieces: &BTreeMap<i64, CharSeries>| {
            let mut acc = CharSeries::zero(q_order, 0);
            for (&n, piece) in pieces.iter().filter(|(&n, _)| Parity::of(n) == parity) {
                acc = acc.add(
                    &piece
                        .q_power(2)
                        .shift_q(4 * n * n + 2 * n)
                        .truncate(q_order, 0),
                );
            }
            acc
        };
        let spec = SectorSpec::new(Selector::Parity(parity), OperatorSpec::VirHalf(0));
        let trace = trace_character(engine, &spec, q_order, 0)?;
        let from_computed = assemble(&computed_pieces);
        let from_predicted = assemble(&predicted_pieces);
        let closed = sum_form(closed, q_order, 0);
        reassembly.push(ReassemblyCheck {
            parity,
            trace_agree_to_q4: trace.agree_to_q4(&from_computed),
            closed_form_agree_to_q4: closed.agree_to_q4(&from_predicted),
            holds: trace.first_discrepancy(&from_computed).is_none()
                && closed.first_discrepancy(&from_predicted).is_none(),
        });
    }

    let verdict = sectors
        .iter()
        .all(|s| s.matches && s.degenerate_weight == s.reducible)
        && telescoping.as_ref().is_none_or(|t| t.holds)
        && reassembly.iter().all(|r| r.holds);
    Ok(DecompositionReport {
        case,
        b: b.clone(),
        q_order,
        reducible_charge: degenerate.map(|(n1, _)| n1),
        sectors,
        telescoping,
        reassembly,
        verdict,
    })
}
