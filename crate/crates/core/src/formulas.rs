//! Closed-form dimension formulas and capability criteria for the abelian
//! and Heisenberg families, used as oracles against the presentation
//! computations in [`crate::pairs`].

use std::fmt;

use num_traits::One;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::families::HeisenbergKind;
use crate::scalar::{format, frac, int, to_i64, Scalar};
use crate::superdim::SuperDim;

/// A super-dimension whose components may come out non-integral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalDim {
    pub even: Scalar,
    pub odd: Scalar,
}

impl RationalDim {
    pub fn new(even: Scalar, odd: Scalar) -> RationalDim {
        RationalDim { even, odd }
    }

    pub fn total(&self) -> Scalar {
        &self.even + &self.odd
    }

    pub fn is_integral(&self) -> bool {
        self.even.is_integer() && self.odd.is_integer()
    }

    /// `Some` when both parts are non-negative integers.
    pub fn to_superdim(&self) -> Option<SuperDim> {
        let e = usize::try_from(to_i64(&self.even)?).ok()?;
        let o = usize::try_from(to_i64(&self.odd)?).ok()?;
        Some(SuperDim::new(e, o))
    }
}

impl From<SuperDim> for RationalDim {
    fn from(d: SuperDim) -> Self {
        RationalDim::new(int(d.even as i64), int(d.odd as i64))
    }
}

impl fmt::Display for RationalDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", format(&self.even), format(&self.odd))
    }
}

fn serialize_scalar<S: SerializeStruct>(s: &mut S, key: &'static str, q: &Scalar) -> std::result::Result<(), S::Error> {
    match to_i64(q) {
        Some(n) => s.serialize_field(key, &n),
        None => s.serialize_field(key, &format(q)),
    }
}

impl Serialize for RationalDim {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("RationalDim", 2)?;
        serialize_scalar(&mut s, "even", &self.even)?;
        serialize_scalar(&mut s, "odd", &self.odd)?;
        s.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "type", content = "value")]
pub enum FormulaValue {
    Dim(RationalDim),
    /// Only the total dimension is stated; several values mean the
    /// statement leaves the choice open.
    Total(Vec<u64>),
    Bool(bool),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub value: FormulaValue,
    pub source: &'static str,
    pub caveat: Option<String>,
}

impl FormulaResult {
    fn plain(value: FormulaValue, source: &'static str) -> FormulaResult {
        FormulaResult { value, source, caveat: None }
    }

    /// Whether a computed super-dimension is consistent with the formula.
    pub fn matches(&self, d: SuperDim) -> bool {
        match &self.value {
            FormulaValue::Dim(r) => r.to_superdim() == Some(d),
            FormulaValue::Total(options) => options.contains(&(d.total() as u64)),
            FormulaValue::Bool(_) => false,
        }
    }
}

pub const SRC_ABELIAN: &str = "abelian multiplier";
pub const SRC_HEIS_EVEN: &str = "even-center Heisenberg multiplier";
pub const SRC_HEIS_ODD: &str = "odd-center Heisenberg multiplier";
pub const SRC_PAIR_ABELIAN: &str = "abelian pair multiplier";
pub const SRC_PAIR_HEIS_EVEN: &str = "even-center Heisenberg pair multiplier";
pub const SRC_PAIR_HEIS_ODD: &str = "odd-center Heisenberg pair multiplier";

fn u(n: usize) -> Scalar {
    int(n as i64)
}

/// `(½(m²+n²+n−m) | mn)`
pub fn dim_mult_abelian(m: usize, n: usize) -> SuperDim {
    SuperDim::new((m * m + n * n + n - m) / 2, m * n)
}

pub fn dim_mult_heis_even(m: usize, n: usize) -> Result<SuperDim> {
    match (m, n) {
        (0, 0) => Err(Error::InvalidParameters("H(m,n) needs m + n >= 1".into())),
        (0, 1) => Ok(SuperDim::ZERO),
        (1, 0) => Ok(SuperDim::new(2, 0)),
        _ => Ok(SuperDim::new(2 * m * m - m + n * (n + 1) / 2 - 1, 2 * m * n)),
    }
}

pub fn dim_mult_heis_odd(m: usize) -> Result<SuperDim> {
    match m {
        0 => Err(Error::InvalidParameters("H_m needs m >= 1".into())),
        1 => Ok(SuperDim::new(1, 1)),
        _ => Ok(SuperDim::new(m * m, m * m - 1)),
    }
}

/// `(½[k(2m−k−1)+h(2n−h+1)] | mn−(m−k)(n−h))` for a `(k|h)` ideal.
pub fn dim_mult_pair_abelian(m: usize, n: usize, k: usize, h: usize) -> Result<SuperDim> {
    if k > m || h > n {
        return Err(Error::InvalidParameters(format!("({k}|{h}) is not a subspace dimension of A({m}|{n})")));
    }
    let even_part = if k == 0 { 0 } else { k * (2 * m - k - 1) };
    Ok(SuperDim::new((even_part + h * (2 * n + 1 - h)) / 2, m * n - (m - k) * (n - h)))
}

/// Pair multiplier of `H(m,n)` with a `(k|h)` ideal. The `k+h ≥ 2` branch
/// is evaluated exactly as stated and flagged when it is not an integer.
pub fn dim_mult_pair_heis_even(m: usize, n: usize, k: usize, h: usize) -> Result<FormulaResult> {
    let dim = HeisenbergKind::EvenCenter { m, n }.dim();
    if m + n == 0 || k == 0 || k > dim.even || h > dim.odd {
        return Err(Error::InvalidParameters(format!("({k}|{h}) is not the dimension of a nonzero ideal of H({m},{n})")));
    }
    if k + h == 1 {
        let total = match (m, n) {
            (1, 0) => 2,
            (0, 1) => 1,
            _ => 2 * m + n,
        };
        return Ok(FormulaResult::plain(FormulaValue::Total(vec![total as u64]), SRC_PAIR_HEIS_EVEN));
    }
    let (mq, nq, kq, hq) = (u(m), u(n), u(k), u(h));
    let one = Scalar::one();
    let even = frac(1, 2)
        * ((&kq - &one) * (int(4) * &mq - &kq) + &hq * (int(2) * &nq - &hq + &one) - &one);
    let odd = int(2) * &mq * &nq - (int(2) * &mq - &kq + &one) * (&nq - &hq);
    let value = RationalDim::new(even, odd);
    let caveat = (!value.is_integral()).then(|| format!("non-integral value {value}"));
    Ok(FormulaResult { value: FormulaValue::Dim(value), source: SRC_PAIR_HEIS_EVEN, caveat })
}

/// Pair multiplier of `H_m` with a `(k|k+1)` ideal.
pub fn dim_mult_pair_heis_odd(m: usize, k: usize) -> Result<FormulaResult> {
    if m == 0 || k > m {
        return Err(Error::InvalidParameters(format!("no ({k}|{}) ideal of H_{m}", k + 1)));
    }
    if m == 1 && k == 1 {
        return Ok(FormulaResult {
            value: FormulaValue::Total(vec![1, 2]),
            source: SRC_PAIR_HEIS_ODD,
            caveat: Some("stated as \"1 or 2\" without a rule for choosing".into()),
        });
    }
    if k == 0 {
        return Ok(FormulaResult::plain(FormulaValue::Total(vec![2 * m as u64]), SRC_PAIR_HEIS_ODD));
    }
    let (mq, kq) = (u(m), u(k));
    let one = Scalar::one();
    let even = frac(1, 2) * &kq * ((int(2) * &mq - &kq - &one) + (int(2) * &mq - &kq + &one));
    let odd = &mq * &mq - (&mq - &kq) * (&mq - &kq) - &one;
    Ok(FormulaResult::plain(FormulaValue::Dim(RationalDim::new(even, odd)), SRC_PAIR_HEIS_ODD))
}

pub fn capable_abelian(m: usize, n: usize) -> bool {
    (m == 0 && n == 1) || m + n >= 2
}

pub fn capable_abelian_pair(m: usize, n: usize, k: usize, h: usize) -> Result<bool> {
    if k + h == 0 || k > m || h > n {
        return Err(Error::InvalidParameters(format!("({k}|{h}) is not a nonzero ideal dimension of A({m}|{n})")));
    }
    Ok(capable_abelian(m, n))
}

pub fn capable_heis_even_pair(m: usize, n: usize, dim_ideal: usize) -> Result<bool> {
    if m + n == 0 || dim_ideal == 0 || dim_ideal > 2 * m + 1 + n {
        return Err(Error::InvalidParameters(format!("no nonzero ideal of dimension {dim_ideal} in H({m},{n})")));
    }
    Ok((m == 1 && n == 0) || dim_ideal == 1)
}

pub fn capable_heis_odd_pair(m: usize, dim_ideal: usize) -> Result<bool> {
    if m == 0 || dim_ideal == 0 || dim_ideal > 2 * m + 1 {
        return Err(Error::InvalidParameters(format!("no nonzero ideal of dimension {dim_ideal} in H_{m}")));
    }
    Ok(m == 1 || dim_ideal == 1)
}

pub fn capable_heis(m: usize, n: usize) -> Result<bool> {
    if m + n == 0 {
        return Err(Error::InvalidParameters("H(m,n) needs m + n >= 1".into()));
    }
    Ok(m == 1 && n == 0)
}

pub fn capable_heis_odd(m: usize) -> Result<bool> {
    if m == 0 {
        return Err(Error::InvalidParameters("H_m needs m >= 1".into()));
    }
    Ok(m == 1)
}

/// A nilpotent algebra with one-dimensional derived algebra, described by
/// its dimension and the Heisenberg summand in `L ≅ H ⊕ A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DerivedDimOne {
    pub dim: SuperDim,
    pub heisenberg: HeisenbergKind,
}

impl DerivedDimOne {
    pub fn new(dim: SuperDim, heisenberg: HeisenbergKind) -> Result<DerivedDimOne> {
        let h = heisenberg.dim();
        if h.even > dim.even || h.odd > dim.odd {
            return Err(Error::InvalidParameters(format!("{heisenberg} does not fit in dimension {dim}")));
        }
        Ok(DerivedDimOne { dim, heisenberg })
    }

    /// `(r|s) = dim L²`.
    pub fn derived(&self) -> SuperDim {
        match self.heisenberg {
            HeisenbergKind::EvenCenter { .. } => SuperDim::new(1, 0),
            HeisenbergKind::OddCenter { .. } => SuperDim::new(0, 1),
        }
    }

    /// Dimension of the abelian summand.
    pub fn abelian(&self) -> SuperDim {
        self.dim.checked_sub(self.heisenberg.dim()).expect("checked at construction")
    }
}

/// Capable iff `L ≅ H(1,0) ⊕ A(k−3|l)` or `L ≅ H_1 ⊕ A(k−1|l−2)`.
pub fn capable_derived_dim_one(sig: &DerivedDimOne) -> bool {
    matches!(sig.heisenberg, HeisenbergKind::EvenCenter { m: 1, n: 0 } | HeisenbergKind::OddCenter { m: 1 })
}

/// `true` when every entry of a formula value is an integer.
pub fn is_integral(r: &FormulaResult) -> bool {
    match &r.value {
        FormulaValue::Dim(d) => d.is_integral(),
        _ => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_values() {
        assert_eq!(dim_mult_abelian(2, 0), SuperDim::new(1, 0));
        assert_eq!(dim_mult_abelian(1, 1), SuperDim::new(1, 1));
        assert_eq!(dim_mult_abelian(0, 0), SuperDim::ZERO);
        assert_eq!(dim_mult_pair_abelian(2, 0, 1, 0).unwrap(), SuperDim::new(1, 0));
        assert_eq!(dim_mult_pair_abelian(1, 1, 0, 1).unwrap(), SuperDim::new(1, 1));
        assert_eq!(dim_mult_pair_abelian(3, 2, 0, 0).unwrap(), SuperDim::ZERO);
        for m in 0..6 {
            for n in 0..6 {
                assert_eq!(dim_mult_pair_abelian(m, n, m, n).unwrap(), dim_mult_abelian(m, n));
            }
        }
        assert!(dim_mult_pair_abelian(1, 1, 2, 0).is_err());
    }

    #[test]
    fn heisenberg_values() {
        assert_eq!(dim_mult_heis_even(1, 0).unwrap(), SuperDim::new(2, 0));
        assert_eq!(dim_mult_heis_even(0, 1).unwrap(), SuperDim::ZERO);
        assert_eq!(dim_mult_heis_even(1, 1).unwrap(), SuperDim::new(1, 2));
        assert!(dim_mult_heis_even(0, 0).is_err());
        assert_eq!(dim_mult_heis_odd(1).unwrap(), SuperDim::new(1, 1));
        assert_eq!(dim_mult_heis_odd(2).unwrap(), SuperDim::new(4, 3));
        assert_eq!(dim_mult_heis_odd(3).unwrap(), SuperDim::new(9, 8));
    }

    #[test]
    fn even_pair_formula() {
        assert_eq!(dim_mult_pair_heis_even(1, 0, 1, 0).unwrap().value, FormulaValue::Total(vec![2]));
        assert_eq!(dim_mult_pair_heis_even(0, 1, 1, 0).unwrap().value, FormulaValue::Total(vec![1]));
        assert_eq!(dim_mult_pair_heis_even(2, 1, 1, 0).unwrap().value, FormulaValue::Total(vec![5]));
        let r = dim_mult_pair_heis_even(1, 0, 2, 0).unwrap();
        assert_eq!(r.value, FormulaValue::Dim(RationalDim::new(frac(1, 2), int(0))));
        assert!(r.caveat.is_some());
        assert!(dim_mult_pair_heis_even(1, 0, 0, 1).is_err());
    }

    #[test]
    fn odd_pair_formula() {
        assert_eq!(dim_mult_pair_heis_odd(3, 0).unwrap().value, FormulaValue::Total(vec![6]));
        let r = dim_mult_pair_heis_odd(2, 1).unwrap();
        assert_eq!(r.value, FormulaValue::Dim(RationalDim::new(int(3), int(2))));
        assert!(r.caveat.is_none());
        let amb = dim_mult_pair_heis_odd(1, 1).unwrap();
        assert_eq!(amb.value, FormulaValue::Total(vec![1, 2]));
        assert!(amb.caveat.is_some());
        // (k(2m−k) | k(2m−k)−1)
        for m in 2..6 {
            for k in 1..=m {
                let v = k * (2 * m - k);
                let expect = FormulaValue::Dim(SuperDim::new(v, v - 1).into());
                assert_eq!(dim_mult_pair_heis_odd(m, k).unwrap().value, expect);
            }
        }
    }

    #[test]
    fn capability_predicates() {
        assert!(!capable_abelian(1, 0));
        assert!(capable_abelian(0, 1));
        assert!(capable_abelian_pair(2, 1, 1, 1).unwrap());
        assert!(capable_heis_even_pair(2, 0, 1).unwrap());
        assert!(!capable_heis_even_pair(2, 0, 3).unwrap());
        assert!(capable_heis(1, 0).unwrap());
        assert!(!capable_heis(0, 1).unwrap());
        assert!(capable_heis_odd(1).unwrap());
        let yes = DerivedDimOne::new(SuperDim::new(5, 0), HeisenbergKind::EvenCenter { m: 1, n: 0 }).unwrap();
        assert!(capable_derived_dim_one(&yes));
        let no = DerivedDimOne::new(SuperDim::new(5, 0), HeisenbergKind::EvenCenter { m: 2, n: 0 }).unwrap();
        assert!(!capable_derived_dim_one(&no));
        assert!(DerivedDimOne::new(SuperDim::new(2, 0), HeisenbergKind::EvenCenter { m: 1, n: 0 }).is_err());
    }

    #[test]
    fn serializes_rationals() {
        let r = dim_mult_pair_heis_even(1, 0, 2, 0).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"value":{"type":"dim","value":{"even":"1/2","odd":0}},"source":"even-center Heisenberg pair multiplier","caveat":"non-integral value (1/2|0)"}"#
        );
    }
}
