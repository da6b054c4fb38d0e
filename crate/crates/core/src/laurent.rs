//! Exact arithmetic in `Z[v, v^-1]` and in the field of rational functions in `v`.
//!
//! [`LaurentPoly`] keeps its terms as a sorted list of `(exponent, coefficient)`
//! pairs with no zero coefficients, so structural equality is polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// An integer Laurent polynomial in `v`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    // sorted by exponent, coefficients nonzero
    terms: Vec<(i32, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * v^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i32) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(e, c)] }
        }
    }

    /// `v`.
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    /// `v^-1`.
    pub fn v_inv() -> Self {
        Self::monomial(1, -1)
    }

    /// `v + v^-1`, the quantum two.
    pub fn quantum_two() -> Self {
        LaurentPoly { terms: vec![(-1, BigInt::one()), (1, BigInt::one())] }
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// summing repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut map: BTreeMap<i32, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c.into();
        }
        LaurentPoly { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Coefficients of `v^low, v^(low+1), ...`.
    pub fn from_dense(low: i32, coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(k, &c)| (low + k as i32, c)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(k) => self.terms[k].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    /// True when every exponent is at least 1, i.e. the polynomial lies in `vZ[v]`.
    pub fn in_v_z_v(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 1)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.iter().all(|(_, c)| !c.is_negative())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect() }
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// `self += c * v^k * other`, the workhorse of the table builders.
    pub fn add_scaled_shifted(&mut self, other: &LaurentPoly, c: &BigInt, k: i32) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(ea, _)), Some(&&(eb, _))) if ea < eb + k => out.push(a.next().unwrap().clone()),
                (Some(&&(ea, _)), Some(&&(eb, _))) if ea > eb + k => {
                    let (eb, cb) = b.next().unwrap();
                    out.push((eb + k, cb * c));
                }
                (Some(_), Some(_)) => {
                    let (ea, ca) = a.next().unwrap();
                    let (_, cb) = b.next().unwrap();
                    let s = ca + cb * c;
                    if !s.is_zero() {
                        out.push((*ea, s));
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (eb, cb) = b.next().unwrap();
                    out.push((eb + k, cb * c));
                }
                (None, None) => break,
            }
        }
        self.terms = out;
    }

    /// The bar involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().rev().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c).sum()
    }

    /// Keeps the terms with exponent `<= order`.
    pub fn truncate(&self, order: i32) -> Self {
        LaurentPoly { terms: self.terms.iter().filter(|(e, _)| *e <= order).cloned().collect() }
    }

    /// Exact quotient `self / d` in `Z[v, v^-1]`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.terms.len() == 1 {
            let (de, dc) = &d.terms[0];
            let mut terms = Vec::with_capacity(self.terms.len());
            for (e, c) in &self.terms {
                if !(c % dc).is_zero() {
                    return None;
                }
                terms.push((e - de, c / dc));
            }
            return Some(LaurentPoly { terms });
        }
        // long division from the top; d is a unit multiple of a polynomial with
        // nonzero constant term, so the quotient is unique when it exists
        let d_lo = d.min_exp().unwrap();
        let d_hi = d.max_exp().unwrap();
        let lead = d.terms.last().unwrap().1.clone();
        let mut rem = self.clone();
        let mut quot: Vec<(i32, BigInt)> = Vec::new();
        let self_lo = self.min_exp().unwrap();
        while let Some(r_hi) = rem.max_exp() {
            let qe = r_hi - d_hi;
            if r_hi - (d_hi - d_lo) < self_lo {
                return None;
            }
            let rc = rem.terms.last().unwrap().1.clone();
            if !(&rc % &lead).is_zero() {
                return None;
            }
            let qc = rc / &lead;
            rem.add_scaled_shifted(d, &-&qc, qe);
            quot.push((qe, qc));
        }
        quot.reverse();
        Some(LaurentPoly { terms: quot })
    }

    fn mul_ref(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let lo = self.min_exp().unwrap() + other.min_exp().unwrap();
        let hi = self.max_exp().unwrap() + other.max_exp().unwrap();
        let mut dense = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                dense[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        LaurentPoly {
            terms: dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (lo + k as i32, c))
                .collect(),
        }
    }

    fn add_ref(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_scaled_shifted(other, &BigInt::one(), 0);
        out
    }

    fn sub_ref(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_scaled_shifted(other, &-BigInt::one(), 0);
        out
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::monomial(c, 0)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::monomial(c, 0)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$inner(rhs)
            }
        }
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$inner(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$inner(rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$inner(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled_shifted(rhs, &BigInt::one(), 0);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled_shifted(rhs, &-BigInt::one(), 0);
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

/// Canonical rendering: ascending exponents, `c*v^e`, e.g. `v^-2 + 2 + v^2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            match *e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if *e == 1 {
                        f.write_str("v")?;
                    } else {
                        write!(f, "v^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

// JSON: {"<exponent>": <coefficient>} in ascending exponent order. Coefficients
// outside the i64 range are written as decimal strings.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            match c.to_i64() {
                Some(small) => map.serialize_entry(&e.to_string(), &small)?,
                None => map.serialize_entry(&e.to_string(), &c.to_string())?,
            }
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coeff {
            Small(i64),
            Text(String),
        }

        struct PolyVisitor;

        impl<'de> Visitor<'de> for PolyVisitor {
            type Value = LaurentPoly;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from exponent strings to integer coefficients")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<LaurentPoly, A::Error> {
                let mut terms = Vec::new();
                while let Some((key, value)) = access.next_entry::<String, Coeff>()? {
                    let e: i32 = key.parse().map_err(de::Error::custom)?;
                    let c = match value {
                        Coeff::Small(c) => BigInt::from(c),
                        Coeff::Text(s) => s.parse::<BigInt>().map_err(de::Error::custom)?,
                    };
                    terms.push((e, c));
                }
                Ok(LaurentPoly::from_terms(terms))
            }
        }

        deserializer.deserialize_map(PolyVisitor)
    }
}

/// A rational function `num / den` in `v`.
///
/// Canonical representative: the lowest exponent of `den` is 0 and its
/// highest coefficient is positive. Common polynomial factors are not cancelled,
/// so equality is decided by cross-multiplication.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RationalV {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalV {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let shift = -den.min_exp().unwrap();
        let (mut num, mut den) = (num.shift(shift), den.shift(shift));
        if den.terms.last().unwrap().1.is_negative() {
            num = -num;
            den = -den;
        }
        Ok(RationalV { num, den })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalV { num: p, den: LaurentPoly::one() }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    /// Truncated power-series expansion of `num / den`, exact through `v^order`.
    pub fn series_expand(&self, order: i32) -> Result<LaurentPoly, Error> {
        series_expand(self, order)
    }
}

impl PartialEq for RationalV {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalV {}

impl fmt::Display for RationalV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Expands `r` as a Laurent series in `v`, exact through exponent `order`.
///
/// The denominator is written `v^m * d(v)` with `d(0) = +-1`; the expansion is
/// `num * v^-m * d^-1` with `d^-1` the formal power-series inverse.
pub fn series_expand(r: &RationalV, order: i32) -> Result<LaurentPoly, Error> {
    let den = &r.den;
    if den.is_zero() {
        return Err(Error::NonInvertibleDenominator);
    }
    let m = den.min_exp().unwrap();
    let d0 = den.terms[0].1.clone();
    if !d0.abs().is_one() {
        return Err(Error::NonInvertibleDenominator);
    }
    let num = r.num.shift(-m);
    let Some(num_lo) = num.min_exp() else {
        return Ok(LaurentPoly::zero());
    };
    if num_lo > order {
        return Ok(LaurentPoly::zero());
    }
    // inverse of d(v) = den * v^-m through degree order - num_lo
    let len = (order - num_lo + 1) as usize;
    let d: Vec<BigInt> = {
        let mut dense = vec![BigInt::zero(); len];
        for (e, c) in den.terms() {
            let k = (e - m) as usize;
            if k < len {
                dense[k] = c.clone();
            }
        }
        dense
    };
    let mut inv = vec![BigInt::zero(); len];
    inv[0] = d0.clone(); // 1/d0 == d0 for a unit
    for k in 1..len {
        let mut acc = BigInt::zero();
        for j in 1..=k {
            if !d[j].is_zero() && !inv[k - j].is_zero() {
                acc += &d[j] * &inv[k - j];
            }
        }
        inv[k] = -acc * &d0;
    }
    let inv = LaurentPoly {
        terms: inv.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k as i32, c)).collect(),
    };
    Ok((num * inv).truncate(order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(low: i32, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_dense(low, c)
    }

    fn convolve(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn quantum_two_squared() {
        let q = LaurentPoly::quantum_two();
        assert_eq!(&q * &q, p(-2, &[1, 0, 2, 0, 1]));
    }

    #[test]
    fn product_matches_convolution() {
        let a = [1, 0, 1];
        let b = [1, 0, 1, 0, 1];
        let expected = convolve(&a, &b);
        assert_eq!(expected, vec![1, 0, 2, 0, 2, 0, 1]);
        assert_eq!(p(0, &a) * p(0, &b), p(0, &expected));
    }

    #[test]
    fn zero_is_identity() {
        let a = p(-3, &[2, 0, -1, 5]);
        assert_eq!(&a + &LaurentPoly::zero(), a);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn bar_examples() {
        assert_eq!(LaurentPoly::v().bar(), LaurentPoly::v_inv());
        assert_eq!(LaurentPoly::quantum_two().bar(), LaurentPoly::quantum_two());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(LaurentPoly::quantum_two().eval_at_one(), BigInt::from(2));
        assert_eq!(LaurentPoly::zero().eval_at_one(), BigInt::zero());
        // sum over S_3 of v^(2 l(w)): lengths 0,1,1,2,2,3
        let poincare: LaurentPoly = [0, 1, 1, 2, 2, 3].iter().map(|l| LaurentPoly::monomial(1, 2 * l)).sum();
        assert_eq!(poincare.eval_at_one(), BigInt::from(6));
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::v().to_string(), "v");
        assert_eq!(LaurentPoly::quantum_two().to_string(), "v^-1 + v");
        assert_eq!(p(-2, &[1, 0, 2, 0, 1]).to_string(), "v^-2 + 2 + v^2");
        assert_eq!(p(-1, &[-1, 0, 3]).to_string(), "-v^-1 + 3*v");
        assert_eq!(p(0, &[1, -1]).to_string(), "1 - v");
        assert_eq!(p(0, &[-1, 0, -2]).to_string(), "-1 - 2*v^2");
    }

    #[test]
    fn json_roundtrip_and_shape() {
        let a = p(-1, &[3, 0, -2]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"-1":3,"1":-2}"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        let huge = LaurentPoly::monomial("123456789012345678901234567890".parse::<BigInt>().unwrap(), 2);
        let back: LaurentPoly = serde_json::from_str(&serde_json::to_string(&huge).unwrap()).unwrap();
        assert_eq!(back, huge);
    }

    #[test]
    fn exact_division() {
        let a = p(0, &[1, 0, 1]);
        let b = p(-1, &[1, 1, 1, 1]);
        assert_eq!((&a * &b).div_exact(&a), Some(b.clone()));
        assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        assert_eq!(p(0, &[1, 1]).div_exact(&p(0, &[1, 0, 1])), None);
        assert_eq!(p(0, &[3]).div_exact(&p(0, &[2])), None);
        assert_eq!(p(0, &[4, 0, 2]).div_exact(&p(3, &[2])), Some(p(-3, &[2, 0, 1])));
    }

    #[test]
    fn series_examples() {
        let r = RationalV::new(LaurentPoly::one(), p(0, &[1, 0, 1])).unwrap();
        let s = series_expand(&r, 5).unwrap();
        assert_eq!(s, p(0, &[1, 0, -1, 0, 1]));
        // multiply back: agrees with 1 modulo v^6
        assert_eq!((&s * r.den()).truncate(5), LaurentPoly::one());

        let q = p(-2, &[1, 4, 0, 7]);
        assert_eq!(series_expand(&RationalV::from_poly(q.clone()), 5).unwrap(), q);

        let geo = RationalV::new(LaurentPoly::one(), p(0, &[1, -1])).unwrap();
        assert_eq!(series_expand(&geo, 3).unwrap(), p(0, &[1, 1, 1, 1]));
    }

    #[test]
    fn series_with_shifted_denominator() {
        // v^2 / (v + v^3) = v / (1 + v^2)
        let r = RationalV::new(p(2, &[1]), p(1, &[1, 0, 1])).unwrap();
        assert_eq!(series_expand(&r, 6).unwrap(), p(1, &[1, 0, -1, 0, 1, 0]));
    }

    #[test]
    fn series_rejects_bad_denominators() {
        let bad = RationalV { num: LaurentPoly::one(), den: LaurentPoly::zero() };
        assert!(matches!(series_expand(&bad, 3), Err(Error::NonInvertibleDenominator)));
        let two = RationalV::new(LaurentPoly::one(), p(0, &[2, 1])).unwrap();
        assert!(matches!(series_expand(&two, 3), Err(Error::NonInvertibleDenominator)));
        assert!(matches!(RationalV::new(LaurentPoly::one(), LaurentPoly::zero()), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn rational_canonical_form() {
        let r = RationalV::new(p(0, &[1]), p(-2, &[-1, 0, -1])).unwrap();
        assert_eq!(r.den(), &p(0, &[1, 0, 1]));
        assert_eq!(r.num(), &p(2, &[-1]));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        (-4i32..4, proptest::collection::vec(-5i64..6, 0..7)).prop_map(|(lo, c)| LaurentPoly::from_dense(lo, &c))
    }

    proptest! {
        #[test]
        fn bar_is_a_ring_involution(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a * &b).bar(), a.bar() * b.bar());
            prop_assert_eq!((&a + &b).bar(), a.bar() + b.bar());
            prop_assert_eq!(a.bar().bar(), a.clone());
        }

        #[test]
        fn eval_is_a_homomorphism(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
            prop_assert_eq!((&a + &b).eval_at_one(), a.eval_at_one() + b.eval_at_one());
        }

        #[test]
        fn series_times_den_recovers_num(num in arb_poly(), tail in proptest::collection::vec(-3i64..4, 0..5), order in 0i32..12) {
            let mut den = vec![1i64];
            den.extend(tail);
            let r = RationalV::new(num.clone(), LaurentPoly::from_dense(0, &den)).unwrap();
            let s = series_expand(&r, order).unwrap();
            prop_assert_eq!((&s * r.den()).truncate(order), r.num().truncate(order));
        }

        #[test]
        fn canonical_form_has_no_zero_coeffs(a in arb_poly(), b in arb_poly()) {
            let c = &a * &b - &a;
            prop_assert!(c.terms().all(|(_, c)| !c.is_zero()));
        }
    }
}
