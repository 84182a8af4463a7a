//! Exact scalars in a real quadratic field `Q(sqrt(d))`.
//!
//! A [`Surd`] is `a + b*sqrt(d)` with `a`, `b` arbitrary-precision rationals
//! and `d` a squarefree positive integer. Pure rationals carry `d = 1` and are
//! compatible with every field. Mixing two different non-trivial radicands is
//! an error: every parameter set handled by this crate lives in a single
//! quadratic extension.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Splits `n` as `squarefree * factor^2`.
///
/// `n = 0` maps to `(1, 0)` so that `sqrt(0) = 0 * sqrt(1)`.
pub fn normalize_radicand(n: u64) -> (u64, u64) {
    if n == 0 {
        return (1, 0);
    }
    let mut rest = n;
    let mut squarefree = 1u64;
    let mut factor = 1u64;
    let mut p = 2u64;
    while p * p <= rest {
        let mut count = 0u32;
        while rest.is_multiple_of(p) {
            rest /= p;
            count += 1;
        }
        factor *= p.pow(count / 2);
        if count % 2 == 1 {
            squarefree *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // whatever is left is a prime to the first power
    squarefree *= rest;
    (squarefree, factor)
}

/// `rat + irr * sqrt(radicand)`, always stored in normal form.
///
/// Normal form: `radicand` is squarefree, and `irr == 0` iff `radicand == 1`.
/// Structural equality is therefore value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Surd {
    rat: BigRational,
    irr: BigRational,
    radicand: u64,
}

impl Surd {
    /// Builds `rat + irr * sqrt(radicand)` for any radicand, extracting square factors.
    pub fn new(rat: BigRational, irr: BigRational, radicand: u64) -> Self {
        let (squarefree, factor) = normalize_radicand(radicand);
        let irr = irr * BigRational::from_integer(BigInt::from(factor));
        if squarefree == 1 {
            Surd::from_rational(rat + irr)
        } else if irr.is_zero() {
            Surd::from_rational(rat)
        } else {
            Surd {
                rat,
                irr,
                radicand: squarefree,
            }
        }
    }

    pub fn from_rational(rat: BigRational) -> Self {
        Surd {
            rat,
            irr: BigRational::zero(),
            radicand: 1,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Surd::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Surd::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `sqrt(n)` for a non-negative integer `n`.
    pub fn sqrt(n: u64) -> Self {
        Surd::new(BigRational::zero(), BigRational::one(), n)
    }

    /// `sqrt(q)` for a non-negative rational `q`, rationalized as `sqrt(num*den)/den`.
    pub fn sqrt_rational(q: &BigRational) -> Result<Self> {
        if q.is_negative() {
            return Err(Error::OutOfRange(format!("sqrt of negative rational {q}")));
        }
        let num = q.numer();
        let den = q.denom();
        let product: u64 = (num * den)
            .try_into()
            .map_err(|_| Error::OutOfRange(format!("radicand of sqrt({q}) exceeds u64")))?;
        Ok(Surd::new(
            BigRational::zero(),
            BigRational::new(BigInt::one(), den.clone()),
            product,
        ))
    }

    pub fn zero() -> Self {
        Surd::from_integer(0)
    }

    pub fn one() -> Self {
        Surd::from_integer(1)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rat
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.irr
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.radicand == 1
    }

    pub fn to_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.rat)
    }

    /// The radicand shared by `self` and `other`, or a mismatch error.
    pub fn common_radicand(&self, other: &Surd) -> Result<u64> {
        combine_radicands(self.radicand, other.radicand)
    }

    pub fn try_add(&self, other: &Surd) -> Result<Surd> {
        let d = self.common_radicand(other)?;
        Ok(Surd::new(&self.rat + &other.rat, &self.irr + &other.irr, d))
    }

    pub fn try_sub(&self, other: &Surd) -> Result<Surd> {
        let d = self.common_radicand(other)?;
        Ok(Surd::new(&self.rat - &other.rat, &self.irr - &other.irr, d))
    }

    pub fn try_mul(&self, other: &Surd) -> Result<Surd> {
        let d = self.common_radicand(other)?;
        let dr = BigRational::from_integer(BigInt::from(d));
        let rat = &self.rat * &other.rat + &self.irr * &other.irr * dr;
        let irr = &self.rat * &other.irr + &self.irr * &other.rat;
        Ok(Surd::new(rat, irr, d))
    }

    pub fn try_div(&self, other: &Surd) -> Result<Surd> {
        self.common_radicand(other)?;
        let inv = other.inverse()?;
        self.try_mul(&inv)
    }

    pub fn inverse(&self) -> Result<Surd> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = BigRational::from_integer(BigInt::from(self.radicand));
        // norm is nonzero: d is squarefree, so a^2 = b^2 d forces a = b = 0
        let norm = &self.rat * &self.rat - &self.irr * &self.irr * d;
        Ok(Surd::new(
            &self.rat / &norm,
            -(&self.irr / &norm),
            self.radicand,
        ))
    }

    pub fn scale(&self, factor: &BigRational) -> Surd {
        Surd::new(&self.rat * factor, &self.irr * factor, self.radicand)
    }

    pub fn square(&self) -> Surd {
        self * self
    }

    /// Sign of the real value, decided by squaring (no floating point).
    pub fn signum(&self) -> Ordering {
        let a = self.rat.cmp(&BigRational::zero());
        let b = self.irr.cmp(&BigRational::zero());
        match (a, b) {
            (x, Ordering::Equal) => x,
            (Ordering::Equal, y) => y,
            (x, y) if x == y => x,
            (x, _) => {
                let d = BigRational::from_integer(BigInt::from(self.radicand));
                let a2 = &self.rat * &self.rat;
                let b2d = &self.irr * &self.irr * d;
                // rational part dominates iff a^2 > b^2 d
                match a2.cmp(&b2d) {
                    Ordering::Greater => x,
                    Ordering::Less => x.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    /// Exact total order on real values; errors on incompatible radicands.
    pub fn compare(&self, other: &Surd) -> Result<Ordering> {
        Ok(self.try_sub(other)?.signum())
    }

    /// If the value is a rational multiple of 1/4, the numerator over 4.
    pub fn as_quarters(&self) -> Option<i64> {
        let r = self.to_rational()?;
        let q = r * BigRational::from_integer(BigInt::from(4));
        if q.is_integer() {
            i64::try_from(q.to_integer()).ok()
        } else {
            None
        }
    }
}

pub(crate) fn combine_radicands(left: u64, right: u64) -> Result<u64> {
    match (left, right) {
        (1, d) | (d, 1) => Ok(d),
        (l, r) if l == r => Ok(l),
        (l, r) => Err(Error::RadicandMismatch { left: l, right: r }),
    }
}

fn expect_ok(r: Result<Surd>) -> Surd {
    match r {
        Ok(s) => s,
        Err(e) => panic!("{e}"),
    }
}

// Operator sugar panics on radicand mismatch; checked variants are `try_*`.
impl Add for &Surd {
    type Output = Surd;
    fn add(self, rhs: &Surd) -> Surd {
        expect_ok(self.try_add(rhs))
    }
}

impl Sub for &Surd {
    type Output = Surd;
    fn sub(self, rhs: &Surd) -> Surd {
        expect_ok(self.try_sub(rhs))
    }
}

impl Mul for &Surd {
    type Output = Surd;
    fn mul(self, rhs: &Surd) -> Surd {
        expect_ok(self.try_mul(rhs))
    }
}

impl Add for Surd {
    type Output = Surd;
    fn add(self, rhs: Surd) -> Surd {
        &self + &rhs
    }
}

impl Sub for Surd {
    type Output = Surd;
    fn sub(self, rhs: Surd) -> Surd {
        &self - &rhs
    }
}

impl Mul for Surd {
    type Output = Surd;
    fn mul(self, rhs: Surd) -> Surd {
        &self * &rhs
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd {
            rat: -&self.rat,
            irr: -&self.irr,
            radicand: self.radicand,
        }
    }
}

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        -&self
    }
}

impl From<BigRational> for Surd {
    fn from(r: BigRational) -> Self {
        Surd::from_rational(r)
    }
}

impl From<i64> for Surd {
    fn from(n: i64) -> Self {
        Surd::from_integer(n)
    }
}

/// Canonical text: `p/q` for rationals, `p/q+r/s*sqrt(d)` otherwise.
impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rat)?;
        if self.irr.is_zero() {
            return Ok(());
        }
        if self.irr.is_negative() {
            write!(f, "-{}*sqrt({})", -&self.irr, self.radicand)
        } else {
            write!(f, "+{}*sqrt({})", self.irr, self.radicand)
        }
    }
}

fn parse_error(input: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        what: "surd",
        input: input.to_string(),
        reason: reason.into(),
    }
}

fn parse_rational(text: &str, whole: &str) -> Result<BigRational> {
    BigRational::from_str(text)
        .map_err(|e| parse_error(whole, format!("bad rational {text:?}: {e}")))
}

/// Accepts the canonical form plus shorthands such as `sqrt(3)`,
/// `-1/2*sqrt(2)`, `1+sqrt(2)` and unnormalized radicands like `sqrt(12)`.
impl FromStr for Surd {
    type Err = Error;

    fn from_str(input: &str) -> Result<Surd> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(parse_error(input, "empty input"));
        }
        // split into signed terms at top-level '+'/'-' (skip a leading sign)
        let mut terms = Vec::new();
        let mut start = 0;
        let mut depth = 0i32;
        for (i, c) in s.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                '+' | '-' if depth == 0 && i > start => {
                    terms.push(&s[start..i]);
                    start = i;
                }
                _ => {}
            }
        }
        terms.push(&s[start..]);

        let mut total = Surd::zero();
        for term in terms {
            let value = match term.find("sqrt(") {
                Some(pos) => {
                    let close = term[pos..]
                        .find(')')
                        .map(|c| pos + c)
                        .ok_or_else(|| parse_error(input, "unterminated sqrt("))?;
                    let radicand: u64 = term[pos + 5..close].parse().map_err(|_| {
                        parse_error(input, "radicand must be a non-negative integer")
                    })?;
                    let coeff_text = term[..pos].strip_suffix('*').unwrap_or(&term[..pos]);
                    let mut coeff = match coeff_text {
                        "" | "+" => BigRational::one(),
                        "-" => -BigRational::one(),
                        other => parse_rational(other.strip_prefix('+').unwrap_or(other), input)?,
                    };
                    match &term[close + 1..] {
                        "" => {}
                        tail => {
                            let den = tail
                                .strip_prefix('/')
                                .and_then(|d| d.parse::<BigInt>().ok())
                                .filter(|d| !d.is_zero())
                                .ok_or_else(|| {
                                    parse_error(input, "expected /denominator after sqrt(...)")
                                })?;
                            coeff /= BigRational::from_integer(den);
                        }
                    }
                    Surd::new(BigRational::zero(), coeff, radicand)
                }
                None => Surd::from_rational(parse_rational(
                    term.strip_prefix('+').unwrap_or(term),
                    input,
                )?),
            };
            total = total.try_add(&value)?;
        }
        Ok(total)
    }
}

impl serde::Serialize for Surd {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Surd {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(text: &str) -> Surd {
        text.parse().unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&s("1+sqrt(2)") * &s("1-sqrt(2)"), Surd::from_integer(-1));
    }

    #[test]
    fn rationalize_inverse_root() {
        let r = Surd::one().try_div(&Surd::sqrt(2)).unwrap();
        assert_eq!(r, s("0+1/2*sqrt(2)"));
    }

    #[test]
    fn rational_plus_surd() {
        let r = &Surd::ratio(1, 2) + &s("1/2*sqrt(2)");
        assert_eq!(r.to_string(), "1/2+1/2*sqrt(2)");
    }

    #[test]
    fn radicand_examples() {
        assert_eq!(normalize_radicand(12), (3, 2));
        assert_eq!(normalize_radicand(2), (2, 1));
        assert_eq!(normalize_radicand(1), (1, 1));
        assert_eq!(normalize_radicand(0), (1, 0));
    }

    #[test]
    fn compare_examples() {
        assert_eq!(
            Surd::sqrt(2).compare(&Surd::ratio(3, 2)).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            s("1+0*sqrt(3)").compare(&Surd::one()).unwrap(),
            Ordering::Equal
        );
        assert_eq!(
            (-Surd::sqrt(2)).compare(&Surd::zero()).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn mismatch_and_division_errors() {
        assert_eq!(
            Surd::sqrt(2).try_add(&Surd::sqrt(3)),
            Err(Error::RadicandMismatch { left: 2, right: 3 })
        );
        assert_eq!(
            Surd::one().try_div(&Surd::zero()),
            Err(Error::DivisionByZero)
        );
        assert!("sqrt(2)+sqrt(3)".parse::<Surd>().is_err());
        assert!(Surd::sqrt(2).compare(&Surd::sqrt(5)).is_err());
    }

    #[test]
    fn zero_surd_part_is_rational() {
        let x = Surd::new(BigRational::from_integer(3.into()), BigRational::zero(), 7);
        assert_eq!(x, Surd::from_integer(3));
        assert!(x.is_rational());
        assert_eq!(s("sqrt(12)"), s("2*sqrt(3)"));
        assert_eq!(s("sqrt(4)"), Surd::from_integer(2));
    }

    #[test]
    fn parse_shorthands() {
        assert_eq!(s("sqrt(3)").to_string(), "0+1*sqrt(3)");
        assert_eq!(s("-1/2*sqrt(2)").to_string(), "0-1/2*sqrt(2)");
        assert_eq!(s(" 3/6 ").to_string(), "1/2");
        assert_eq!(s("-7").to_string(), "-7");
        assert!("1/0".parse::<Surd>().is_err());
        assert!("abc".parse::<Surd>().is_err());
        assert!("sqrt(x)".parse::<Surd>().is_err());
        assert_eq!(s("sqrt(2)/2"), s("1/2*sqrt(2)"));
        assert_eq!(s("-3+2*sqrt(5)/7").to_string(), "-3+2/7*sqrt(5)");
        assert!("sqrt(2)/0".parse::<Surd>().is_err());
        assert!("sqrt(2)x".parse::<Surd>().is_err());
    }

    fn small_rational() -> impl Strategy<Value = BigRational> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
    }

    fn surd_in(d: u64) -> impl Strategy<Value = Surd> {
        (small_rational(), small_rational()).prop_map(move |(a, b)| Surd::new(a, b, d))
    }

    /// floor(x * 10^30) bounds via integer square roots, for an independent sign oracle.
    fn interval(x: &Surd) -> (BigInt, BigInt) {
        let scale = BigInt::from(10u8).pow(30);
        let d = BigInt::from(x.radicand());
        let root_lo = (&d * &scale * &scale).sqrt();
        let root_hi = &root_lo + 1;
        let a = x.rational_part() * BigRational::from_integer(scale.clone());
        let a_lo = a.floor().to_integer();
        let a_hi = a.ceil().to_integer();
        let b = x.surd_part();
        let (bl, bh) = if b.is_negative() {
            (&root_hi, &root_lo)
        } else {
            (&root_lo, &root_hi)
        };
        let lo = (b * BigRational::from_integer(bl.clone()))
            .floor()
            .to_integer();
        let hi = (b * BigRational::from_integer(bh.clone()))
            .ceil()
            .to_integer();
        (a_lo + lo, a_hi + hi)
    }

    proptest! {
        #[test]
        fn field_axioms(x in surd_in(2), y in surd_in(2), z in surd_in(2)) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x - &x, Surd::zero());
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.inverse().unwrap(), Surd::one());
            }
        }

        #[test]
        fn radicand_reconstructs(n in 0u64..1_000_000) {
            let (sf, f) = normalize_radicand(n);
            prop_assert_eq!(sf * f * f, if n == 0 { 0 } else { n });
            let (sf2, f2) = normalize_radicand(sf);
            prop_assert_eq!((sf2, f2), (sf, 1));
        }

        #[test]
        fn compare_matches_interval(x in surd_in(7), y in surd_in(7)) {
            let diff = &x - &y;
            let (lo, hi) = interval(&diff);
            let zero = BigInt::zero();
            match x.compare(&y).unwrap() {
                Ordering::Less => prop_assert!(lo < zero),
                Ordering::Greater => prop_assert!(hi > zero),
                Ordering::Equal => prop_assert!(diff.is_zero()),
            }
        }

        #[test]
        fn text_round_trip(x in surd_in(6)) {
            let text = x.to_string();
            let back: Surd = text.parse().unwrap();
            prop_assert_eq!(back.to_string(), text);
            prop_assert_eq!(back, x);
        }
    }
}
