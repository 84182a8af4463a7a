//! Truncated bivariate series in `z` and `q`, with `q`-exponents on the
//! quarter lattice (stored as integer quarters), and the character formulas
//! built from them.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Exact truncated series `sum c_{j,e} z^j q^{e/4}`.
///
/// Terms with `e > q_order` or `|j| > z_window` are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharSeries {
    /// keyed by (q4, z) so iteration follows the serialization order
    coeffs: BTreeMap<(i64, i64), BigRational>,
    q_order: i64,
    z_window: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesTerm {
    pub z: i64,
    pub q4: i64,
    pub coeff: String,
}

/// First cell where two series differ, within their common truncation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub z: i64,
    pub q4: i64,
    pub left: String,
    pub right: String,
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl CharSeries {
    pub fn zero(q_order: i64, z_window: i64) -> Self {
        CharSeries {
            coeffs: BTreeMap::new(),
            q_order,
            z_window: z_window.max(0),
        }
    }

    pub fn one(q_order: i64, z_window: i64) -> Self {
        CharSeries::monomial(0, 0, BigRational::one(), q_order, z_window)
    }

    pub fn monomial(z: i64, q4: i64, coeff: BigRational, q_order: i64, z_window: i64) -> Self {
        let mut s = CharSeries::zero(q_order, z_window);
        s.add_term(z, q4, coeff);
        s
    }

    pub fn q_order(&self) -> i64 {
        self.q_order
    }

    pub fn z_window(&self) -> i64 {
        self.z_window
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds a term, silently dropping it if it lies outside the truncation.
    pub fn add_term(&mut self, z: i64, q4: i64, coeff: BigRational) {
        if q4 > self.q_order || z.abs() > self.z_window || coeff.is_zero() {
            return;
        }
        let key = (q4, z);
        let entry = self.coeffs.entry(key).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn coefficient(&self, z: i64, q4: i64) -> BigRational {
        self.coeffs
            .get(&(q4, z))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// `(z, q4, coeff)` in `(q4, z)` order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, &BigRational)> {
        self.coeffs.iter().map(|(&(q4, z), c)| (z, q4, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_q4(&self) -> Option<i64> {
        self.coeffs.keys().next().map(|k| k.0)
    }

    pub fn truncate(&self, q_order: i64, z_window: i64) -> Self {
        let mut out = CharSeries::zero(q_order.min(self.q_order), z_window.min(self.z_window));
        for (z, q4, c) in self.terms() {
            out.add_term(z, q4, c.clone());
        }
        out
    }

    pub fn add(&self, other: &CharSeries) -> CharSeries {
        let mut out = self.truncate(other.q_order, other.z_window);
        for (z, q4, c) in other.terms() {
            out.add_term(z, q4, c.clone());
        }
        out
    }

    pub fn neg(&self) -> CharSeries {
        let mut out = self.clone();
        for c in out.coeffs.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &CharSeries) -> CharSeries {
        self.add(&other.neg())
    }

    pub fn scale(&self, factor: &BigRational) -> CharSeries {
        let mut out = CharSeries::zero(self.q_order, self.z_window);
        for (z, q4, c) in self.terms() {
            out.add_term(z, q4, c * factor);
        }
        out
    }

    /// Exact product. Products are formed without a `z` cut and truncated once.
    pub fn mul(&self, other: &CharSeries) -> CharSeries {
        let low_a = self.min_q4().unwrap_or(0).min(0);
        let low_b = other.min_q4().unwrap_or(0).min(0);
        let q_order = (self.q_order + low_b).min(other.q_order + low_a);
        let mut out = CharSeries::zero(q_order, self.z_window.min(other.z_window));
        for (za, qa, ca) in self.terms() {
            for (zb, qb, cb) in other.terms() {
                if qa + qb > q_order {
                    // terms are sorted by q4
                    break;
                }
                out.add_term(za + zb, qa + qb, ca * cb);
            }
        }
        out
    }

    /// Inverse of a series `c + (terms with q4 > 0)`, `c` a nonzero constant.
    pub fn reciprocal(&self) -> Result<CharSeries> {
        let constant = self.coefficient(0, 0);
        if constant.is_zero() {
            return Err(Error::NonInvertible("constant term is zero".into()));
        }
        if self.terms().any(|(z, q4, _)| q4 < 0 || (q4 == 0 && z != 0)) {
            return Err(Error::NonInvertible(
                "series has terms of non-positive q-degree besides the constant".into(),
            ));
        }
        let inv_c = constant.recip();
        // coefficient cells of the answer, solved in increasing q4
        let mut out = CharSeries::zero(self.q_order, self.z_window);
        out.add_term(0, 0, inv_c.clone());
        // z range of the answer can exceed the window before truncation; track untruncated cells
        let mut cells: BTreeMap<(i64, i64), BigRational> = BTreeMap::new();
        cells.insert((0, 0), inv_c.clone());
        let tail: Vec<(i64, i64, BigRational)> = self
            .terms()
            .filter(|&(_, q4, _)| q4 > 0)
            .map(|(z, q4, c)| (z, q4, c.clone()))
            .collect();
        for q4 in 1..=self.q_order {
            let mut level: BTreeMap<i64, BigRational> = BTreeMap::new();
            for (za, qa, ca) in &tail {
                if *qa > q4 {
                    break;
                }
                for (&(_, zb), cb) in cells.range((q4 - qa, i64::MIN)..=(q4 - qa, i64::MAX)) {
                    *level.entry(za + zb).or_insert_with(BigRational::zero) -= ca * cb;
                }
            }
            for (z, c) in level {
                let c = c * &inv_c;
                if !c.is_zero() {
                    out.add_term(z, q4, c.clone());
                    cells.insert((q4, z), c);
                }
            }
        }
        Ok(out)
    }

    /// Substitutes `q -> q^k` (`k >= 1`).
    pub fn q_power(&self, k: i64) -> CharSeries {
        let mut out = CharSeries::zero(self.q_order * k, self.z_window);
        for (z, q4, c) in self.terms() {
            out.add_term(z, q4 * k, c.clone());
        }
        out
    }

    /// Multiplies by `q^{shift/4}`; the truncation order moves with it.
    pub fn shift_q(&self, shift_q4: i64) -> CharSeries {
        let mut out = CharSeries::zero(self.q_order + shift_q4, self.z_window);
        for (z, q4, c) in self.terms() {
            out.add_term(z, q4 + shift_q4, c.clone());
        }
        out
    }

    /// Specializes `z = 1`.
    pub fn at_z_one(&self) -> CharSeries {
        let mut out = CharSeries::zero(self.q_order, 0);
        for (_, q4, c) in self.terms() {
            out.add_term(0, q4, c.clone());
        }
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// First differing cell, comparing both series truncated to their common orders.
    pub fn first_discrepancy(&self, other: &CharSeries) -> Option<Discrepancy> {
        let q = self.q_order.min(other.q_order);
        let zw = self.z_window.min(other.z_window);
        let a = self.truncate(q, zw);
        let b = other.truncate(q, zw);
        let mut keys: Vec<(i64, i64)> = a.coeffs.keys().chain(b.coeffs.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter().find_map(|(q4, z)| {
            let (x, y) = (a.coefficient(z, q4), b.coefficient(z, q4));
            (x != y).then(|| Discrepancy {
                z,
                q4,
                left: x.to_string(),
                right: y.to_string(),
            })
        })
    }

    /// Highest `q4` through which the two series agree (`q_order` when identical).
    pub fn agree_to_q4(&self, other: &CharSeries) -> i64 {
        match self.first_discrepancy(other) {
            Some(d) => d.q4 - 1,
            None => self.q_order.min(other.q_order),
        }
    }

    pub fn to_terms(&self) -> Vec<SeriesTerm> {
        self.terms()
            .map(|(z, q4, c)| SeriesTerm {
                z,
                q4,
                coeff: c.to_string(),
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_terms()).expect("plain data serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("z,q4,coeff\n");
        for t in self.to_terms() {
            let _ = writeln!(out, "{},{},{}", t.z, t.q4, t.coeff);
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Mul,
    Reciprocal,
}

/// Dispatches one arithmetic operation; `Add`/`Mul` need `b`.
pub fn series_arith(op: SeriesOp, a: &CharSeries, b: Option<&CharSeries>) -> Result<CharSeries> {
    let need_b =
        || b.ok_or_else(|| Error::OutOfRange("binary series operation needs two operands".into()));
    match op {
        SeriesOp::Add => Ok(a.add(need_b()?)),
        SeriesOp::Mul => Ok(a.mul(need_b()?)),
        SeriesOp::Reciprocal => a.reciprocal(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductForm {
    /// `prod_{i>=1} (1 + z q^{2i-1/2}) (1 + z^{-1} q^{2i-3/2})`
    Jac1TwoVariable,
    /// `prod_{i>=1} (1 - q^{2i})`
    EulerEven,
    /// `prod_{i>=0} (1 + q^{i+1/2})`
    NegQHalf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumForm {
    /// `prod (1-q^{2i})^{-1} sum_n z^n q^{n^2 + n/2}`
    Jac2TwoVariable,
    /// `sum_m z^m q^{m(2m+1)/2}`
    JacidTheta,
    /// `prod (1-q^{2i})^{-1} sum_{n even} q^{n^2 + n/2}`
    CharHalfEven,
    /// `prod (1-q^{2i})^{-1} sum_{n odd} q^{n^2 + n/2}`
    CharHalfOdd,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnownCharacter {
    /// `q^h / prod (1 - q^i)`, `h` on the quarter lattice.
    C1Generic(BigRational),
    /// `(q^{m^2/4} - q^{(m+2)^2/4}) / prod (1 - q^i)`.
    C1Degenerate(i64),
    /// Integer-exponent half of `prod (1 + q^{i+1/2})`.
    Ising0,
    /// Half-integer-exponent half of `prod (1 + q^{i+1/2})`.
    IsingHalf,
}

/// `prod_{i>=start} (1 + sign * z^z_exp * q^{(step*i + offset)/4})`, cut where the
/// factor exponent exceeds `q_order`.
fn linear_product(
    start: i64,
    step: i64,
    offset: i64,
    z_exp: i64,
    sign: i64,
    q_order: i64,
    z_window: i64,
) -> CharSeries {
    let mut acc = CharSeries::one(q_order, z_window);
    let mut i = start;
    loop {
        let e = step * i + offset;
        if e > q_order {
            break;
        }
        let mut factor = CharSeries::one(q_order, z_window);
        factor.add_term(z_exp, e, int(sign));
        acc = acc.mul(&factor);
        i += 1;
    }
    acc
}

/// `1 / prod_{i>=1} (1 - q^{k i})`, via series inversion.
pub fn partition_series(k: i64, q_order: i64) -> CharSeries {
    windowed_partition_series(k, q_order, 0)
}

/// Same as [`partition_series`], carried with a `z` window so that products
/// with two-variable series keep their `z` range.
fn windowed_partition_series(k: i64, q_order: i64, z_window: i64) -> CharSeries {
    linear_product(1, 4 * k, 0, 0, -1, q_order, z_window)
        .reciprocal()
        .expect("Euler product has unit constant term")
}

/// The named infinite product, exact through `q_order`.
pub fn product_form(which: ProductForm, q_order: i64, z_window: i64) -> CharSeries {
    match which {
        ProductForm::Jac1TwoVariable => {
            // each z^{+-1} costs at least 2 quarters, so this internal window loses nothing
            let inner = z_window.max(q_order / 2 + 1);
            let plus = linear_product(1, 8, -2, 1, 1, q_order, inner);
            let minus = linear_product(1, 8, -6, -1, 1, q_order, inner);
            plus.mul(&minus).truncate(q_order, z_window)
        }
        ProductForm::EulerEven => linear_product(1, 8, 0, 0, -1, q_order, z_window),
        ProductForm::NegQHalf => linear_product(0, 4, 2, 0, 1, q_order, z_window),
    }
}

/// Exponents `4n^2 + 2n` (quarters) over all `n` with the exponent in range.
fn theta_exponents(q_order: i64) -> impl Iterator<Item = (i64, i64)> {
    let bound = ((q_order.max(0) as f64).sqrt() as i64) + 2;
    (-bound..=bound)
        .map(|n| (n, 4 * n * n + 2 * n))
        .filter(move |&(_, e)| e <= q_order)
}

/// The named sum, exact through `q_order`.
pub fn sum_form(which: SumForm, q_order: i64, z_window: i64) -> CharSeries {
    let mut theta = CharSeries::zero(q_order, z_window);
    for (n, e) in theta_exponents(q_order) {
        let keep = match which {
            SumForm::Jac2TwoVariable | SumForm::JacidTheta => true,
            SumForm::CharHalfEven => n % 2 == 0,
            SumForm::CharHalfOdd => n % 2 != 0,
        };
        if !keep {
            continue;
        }
        let z = match which {
            SumForm::Jac2TwoVariable | SumForm::JacidTheta => n,
            _ => 0,
        };
        theta.add_term(z, e, BigRational::one());
    }
    match which {
        SumForm::JacidTheta => theta,
        _ => theta.mul(&windowed_partition_series(2, q_order, z_window)),
    }
}

/// A z-free character from a closed formula.
pub fn known_character(family: &KnownCharacter, q_order: i64) -> Result<CharSeries> {
    let pochhammer = || partition_series(1, q_order);
    match family {
        KnownCharacter::C1Generic(h) => {
            let q4 = h * int(4);
            if !q4.is_integer() {
                return Err(Error::OffLattice(format!("h = {h}")));
            }
            let q4: i64 = q4
                .to_integer()
                .try_into()
                .map_err(|_| Error::OffLattice(format!("h = {h}")))?;
            Ok(pochhammer().shift_q(q4).truncate(q_order, 0))
        }
        KnownCharacter::C1Degenerate(m) => {
            let mut numerator = CharSeries::zero(q_order, 0);
            numerator.add_term(0, m * m, BigRational::one());
            numerator.add_term(0, (m + 2) * (m + 2), -BigRational::one());
            Ok(numerator.mul(&pochhammer()))
        }
        KnownCharacter::Ising0 | KnownCharacter::IsingHalf => {
            let plus = linear_product(0, 4, 2, 0, 1, q_order, 0);
            let minus = linear_product(0, 4, 2, 0, -1, q_order, 0);
            let half = BigRational::new(BigInt::one(), BigInt::from(2));
            let combined = if *family == KnownCharacter::Ising0 {
                plus.add(&minus)
            } else {
                plus.sub(&minus)
            };
            Ok(combined.scale(&half))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum JacobiOutcome {
    Ok,
    FirstDiscrepancy(Discrepancy),
}

/// Expands both sides of the triple product identity
/// `prod (1-q^{2i})(1+z q^{2i-1/2})(1+z^{-1} q^{2i-3/2}) = sum_m z^m q^{m(2m+1)/2}`
/// and compares them cell by cell.
pub fn jacobi_check(q_order: i64, z_window: i64) -> JacobiOutcome {
    let inner = z_window.max(q_order / 2 + 1);
    let mut lhs = CharSeries::one(q_order, inner);
    let mut i = 1;
    while 8 * i - 6 <= q_order {
        let mut factor = CharSeries::one(q_order, inner);
        factor.add_term(0, 8 * i, -BigRational::one());
        lhs = lhs.mul(&factor);
        let mut factor = CharSeries::one(q_order, inner);
        factor.add_term(1, 8 * i - 2, BigRational::one());
        lhs = lhs.mul(&factor);
        let mut factor = CharSeries::one(q_order, inner);
        factor.add_term(-1, 8 * i - 6, BigRational::one());
        lhs = lhs.mul(&factor);
        i += 1;
    }
    let lhs = lhs.truncate(q_order, z_window);
    let mut rhs = CharSeries::zero(q_order, z_window);
    let bound = z_window.max(0) + 1;
    for m in -bound..=bound {
        rhs.add_term(m, 2 * m * (2 * m + 1), BigRational::one());
    }
    match lhs.first_discrepancy(&rhs) {
        None => JacobiOutcome::Ok,
        Some(d) => JacobiOutcome::FirstDiscrepancy(d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64) -> BigRational {
        int(n)
    }

    /// Partitions of `n` by the classical recurrence, independent of series code.
    fn partitions(n: usize) -> Vec<i64> {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for part in 1..=n {
            for k in part..=n {
                p[k] += p[k - part];
            }
        }
        p
    }

    #[test]
    fn reciprocal_examples() {
        let mut a = CharSeries::one(40, 0);
        a.add_term(0, 2, r(-1));
        let inv = series_arith(SeriesOp::Reciprocal, &a, None).unwrap();
        assert_eq!(a.mul(&inv), CharSeries::one(40, 0));
        let euler = product_form(ProductForm::EulerEven, 40, 0);
        assert_eq!(euler.reciprocal().unwrap().coefficient(0, 32), r(5));
        assert!(CharSeries::zero(8, 0).reciprocal().is_err());
        assert!(series_arith(SeriesOp::Mul, &a, None).is_err());
    }

    #[test]
    fn add_negation_is_zero() {
        let s = sum_form(SumForm::Jac2TwoVariable, 40, 3);
        assert!(series_arith(SeriesOp::Add, &s, Some(&s.neg()))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn product_form_examples() {
        let jac1 = product_form(ProductForm::Jac1TwoVariable, 20, 3);
        assert_eq!(jac1.coefficient(0, 0), r(1));
        assert_eq!(jac1.coefficient(1, 6), r(1));
        assert_eq!(
            product_form(ProductForm::NegQHalf, 20, 0).coefficient(0, 2),
            r(1)
        );
        assert_eq!(
            product_form(ProductForm::EulerEven, 20, 0).coefficient(0, 4),
            r(0)
        );
    }

    #[test]
    fn sum_form_examples() {
        let odd = sum_form(SumForm::CharHalfOdd, 40, 0);
        assert_eq!(odd.min_q4(), Some(2));
        assert_eq!(odd.coefficient(0, 2), r(1));
        assert_eq!(
            sum_form(SumForm::CharHalfEven, 40, 0).coefficient(0, 0),
            r(1)
        );
        let theta = sum_form(SumForm::JacidTheta, 40, 3);
        let z1: Vec<_> = theta
            .terms()
            .filter(|t| t.0 == 1)
            .map(|t| (t.1, t.2.clone()))
            .collect();
        assert_eq!(z1, vec![(6, r(1))]);
    }

    #[test]
    fn known_character_examples() {
        let deg0 = known_character(&KnownCharacter::C1Degenerate(0), 40).unwrap();
        let p = partitions(10);
        // 1/prod_{i>=2}(1-q^i): p(n) - p(n-1)
        for n in 0..=10usize {
            let expected = p[n] - if n > 0 { p[n - 1] } else { 0 };
            assert_eq!(deg0.coefficient(0, 4 * n as i64), r(expected));
        }
        assert_eq!(deg0.coefficient(0, 4), r(0));
        let generic = known_character(
            &KnownCharacter::C1Generic(BigRational::new(1.into(), 2.into())),
            40,
        )
        .unwrap();
        assert_eq!(generic.min_q4(), Some(2));
        assert_eq!(generic.coefficient(0, 6), r(1));
        assert!(known_character(
            &KnownCharacter::C1Generic(BigRational::new(1.into(), 3.into())),
            40
        )
        .is_err());
        let ising_half = known_character(&KnownCharacter::IsingHalf, 40).unwrap();
        assert_eq!(ising_half, sum_form(SumForm::CharHalfOdd, 40, 0));
    }

    #[test]
    fn partition_series_matches_recurrence() {
        let p = partitions(20);
        let s = partition_series(1, 80);
        for (n, &count) in p.iter().enumerate() {
            assert_eq!(s.coefficient(0, 4 * n as i64), r(count));
        }
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi_check(80, 6), JacobiOutcome::Ok);
        assert_eq!(jacobi_check(80, 0), JacobiOutcome::Ok);
        let theta = sum_form(SumForm::JacidTheta, 80, 6);
        assert_eq!(theta.coefficient(0, 0), r(1));
    }

    #[test]
    fn jac_identities_and_specializations() {
        let q = 60;
        let jac1 = product_form(ProductForm::Jac1TwoVariable, q, 8);
        assert_eq!(jac1, sum_form(SumForm::Jac2TwoVariable, q, 8));
        let neg = product_form(ProductForm::NegQHalf, q, 0);
        assert_eq!(jac1.at_z_one(), neg);
        let ising = known_character(&KnownCharacter::Ising0, q)
            .unwrap()
            .add(&known_character(&KnownCharacter::IsingHalf, q).unwrap());
        assert_eq!(ising, neg);
        for s in [
            sum_form(SumForm::CharHalfEven, q, 0),
            sum_form(SumForm::CharHalfOdd, q, 0),
            known_character(&KnownCharacter::Ising0, q).unwrap(),
            jac1.clone(),
        ] {
            assert!(s.is_nonnegative());
        }
    }

    #[test]
    fn serialization_order() {
        let mut s = CharSeries::zero(20, 2);
        s.add_term(1, 4, r(2));
        s.add_term(-1, 4, BigRational::new(1.into(), 2.into()));
        s.add_term(0, 0, r(1));
        assert_eq!(
            s.to_json(),
            r#"[{"z":0,"q4":0,"coeff":"1"},{"z":-1,"q4":4,"coeff":"1/2"},{"z":1,"q4":4,"coeff":"2"}]"#
        );
        assert_eq!(s.to_csv(), "z,q4,coeff\n0,0,1\n-1,4,1/2\n1,4,2\n");
    }

    fn z_free(max_q4: i64) -> impl Strategy<Value = CharSeries> {
        proptest::collection::vec((0..=max_q4, -3i64..=3), 0..8).prop_map(|terms| {
            let mut s = CharSeries::zero(24, 0);
            for (q4, c) in terms {
                s.add_term(0, q4, r(c));
            }
            s
        })
    }

    proptest! {
        #[test]
        fn truncation_commutes_with_products(a in z_free(30), b in z_free(30), cut in 0i64..24) {
            let full = a.mul(&b).truncate(cut, 0);
            let early = a.truncate(cut, 0).mul(&b.truncate(cut, 0)).truncate(cut, 0);
            prop_assert_eq!(full, early);
        }

        #[test]
        fn reciprocal_inverts(a in z_free(24)) {
            let mut unit = CharSeries::one(24, 0);
            for (z, q4, c) in a.terms() {
                if q4 > 0 {
                    unit.add_term(z, q4, c.clone());
                }
            }
            prop_assert_eq!(unit.mul(&unit.reciprocal().unwrap()), CharSeries::one(24, 0));
        }
    }
}
