//! Exact polynomials over big integers: sparse bivariate (`x`, `y`) and dense univariate.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// `Σ c_{i,j} x^i y^j` with no zero coefficient stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: BigInt, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    /// Adds `c x^i y^j` in place, keeping the canonical form.
    pub fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((i, j)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending `(i, j)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = ((u32, u32), &BigInt)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `[x^i y^j] p`; zero for absent terms.
    pub fn coefficient(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Same as [`coefficient`](Self::coefficient) but takes signed degrees; negative degrees read as zero.
    pub fn coefficient_at(&self, i: i64, j: i64) -> BigInt {
        if i < 0 || j < 0 {
            return BigInt::zero();
        }
        self.coefficient(i as u32, j as u32)
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// `(var + shift)^exponent`.
    pub fn binomial_power(shift: i64, exponent: u32, var: Var) -> Self {
        let shift = BigInt::from(shift);
        let mut p = Self::zero();
        let mut binom = BigInt::one();
        for k in 0..=exponent {
            // term C(e, k) var^k shift^(e-k)
            let c = &binom * num_traits::pow(shift.clone(), (exponent - k) as usize);
            match var {
                Var::X => p.add_term(k, 0, c),
                Var::Y => p.add_term(0, k, c),
            }
            binom = binom * BigInt::from(exponent - k) / BigInt::from(k + 1);
        }
        p
    }

    /// `p(y, x)`.
    pub fn swap_variables(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    /// `p(x, 0)` as a polynomial in `x`.
    pub fn at_y_zero(&self) -> UniPoly {
        UniPoly::from_coeffs(self.slice(|i, j| (j == 0).then_some(i)))
    }

    /// `p(0, y)` as a polynomial in `y`.
    pub fn at_x_zero(&self) -> UniPoly {
        UniPoly::from_coeffs(self.slice(|i, j| (i == 0).then_some(j)))
    }

    fn slice(&self, pick: impl Fn(u32, u32) -> Option<u32>) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = Vec::new();
        for (&(i, j), c) in &self.terms {
            if let Some(k) = pick(i, j) {
                let k = k as usize;
                if out.len() <= k {
                    out.resize(k + 1, BigInt::zero());
                }
                out[k] += c;
            }
        }
        out
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x0: &BigRational, y0: &BigRational) -> BigRational {
        let xs = powers(x0, self.degree_x().unwrap_or(0));
        let ys = powers(y0, self.degree_y().unwrap_or(0));
        let mut acc = BigRational::zero();
        for (&(i, j), c) in &self.terms {
            acc += BigRational::from_integer(c.clone()) * &xs[i as usize] * &ys[j as usize];
        }
        acc
    }

    /// Product of two univariate polynomials, one in `x` and one in `y`.
    pub fn from_product(px: &UniPoly, py: &UniPoly) -> Self {
        let mut out = Self::zero();
        for (i, a) in px.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in py.coeffs().iter().enumerate() {
                out.add_term(i as u32, j as u32, a * b);
            }
        }
        out
    }

    pub fn to_json_value(&self) -> PolyJson {
        PolyJson {
            terms: self
                .terms
                .iter()
                .map(|(&(x, y), c)| TermJson {
                    x,
                    y,
                    c: c.to_string(),
                })
                .collect(),
        }
    }

    /// `{"terms":[{"x":i,"y":j,"c":"<decimal>"}, ...]}`, ascending by `(x, y)`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("polynomial serializes")
    }

    /// Parses the JSON rendering. Only canonical input is accepted: strictly
    /// ascending `(x, y)` keys, nonzero decimal coefficients.
    pub fn from_json(s: &str) -> Result<Self> {
        let raw: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_value(&raw)
    }

    pub fn from_json_value(raw: &PolyJson) -> Result<Self> {
        let mut p = Self::zero();
        let mut last: Option<(u32, u32)> = None;
        for t in &raw.terms {
            if last.is_some_and(|l| l >= (t.x, t.y)) {
                return Err(Error::Parse(format!(
                    "term ({}, {}) out of order or repeated",
                    t.x, t.y
                )));
            }
            last = Some((t.x, t.y));
            let c = parse_decimal(&t.c)?;
            if c.is_zero() {
                return Err(Error::Parse(format!(
                    "zero coefficient at ({}, {})",
                    t.x, t.y
                )));
            }
            p.terms.insert((t.x, t.y), c);
        }
        Ok(p)
    }
}

fn powers(v: &BigRational, max: u32) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(max as usize + 1);
    out.push(BigRational::one());
    for k in 1..=max as usize {
        let next = &out[k - 1] * v;
        out.push(next);
    }
    out
}

/// Plain decimal: optional `-`, then ASCII digits.
pub(crate) fn parse_decimal(s: &str) -> Result<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("not a decimal integer: {s:?}")));
    }
    BigInt::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub x: u32,
    pub y: u32,
    pub c: String,
}

impl<'a> Add<&'a BivarPoly> for &'a BivarPoly {
    type Output = BivarPoly;

    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for BivarPoly {
    type Output = BivarPoly;

    fn add(mut self, rhs: BivarPoly) -> BivarPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&BivarPoly> for BivarPoly {
    fn add_assign(&mut self, rhs: &BivarPoly) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(i, j, c.clone());
        }
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;

    fn neg(self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl<'a> Sub<&'a BivarPoly> for &'a BivarPoly {
    type Output = BivarPoly;

    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        out += &-rhs;
        out
    }
}

impl<'a> Mul<&'a BivarPoly> for &'a BivarPoly {
    type Output = BivarPoly;

    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, a * b);
            }
        }
        out
    }
}

impl Mul for BivarPoly {
    type Output = BivarPoly;

    fn mul(self, rhs: BivarPoly) -> BivarPoly {
        &self * &rhs
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, var: &str, e: u32) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{var}"),
        _ => write!(f, "{var}^{e}"),
    }
}

fn write_signed_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &BigInt,
    body: impl FnOnce(&mut fmt::Formatter<'_>) -> fmt::Result,
    constant: bool,
) -> fmt::Result {
    match (first, c.is_negative()) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    let mag = c.abs();
    if constant || !mag.is_one() {
        write!(f, "{mag}")?;
    }
    body(f)
}

/// Descending `(i, j)` order, e.g. `x^2 + x + y`.
impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (&(i, j), c)) in self.terms.iter().rev().enumerate() {
            write_signed_term(
                f,
                k == 0,
                c,
                |f| {
                    write_monomial(f, "x", i)?;
                    write_monomial(f, "y", j)
                },
                i == 0 && j == 0,
            )?;
        }
        Ok(())
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarPoly({self})")
    }
}

/// Parses the text rendering. Whitespace is ignored, terms may repeat and appear
/// in any order (they are summed), and a coefficient may sit in front of the
/// monomial (`3x^2y`).
impl FromStr for BivarPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let src: Vec<u8> = s.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
        if src.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = BivarPoly::zero();
        let mut pos = 0;
        let mut first = true;
        while pos < src.len() {
            let negative = match src[pos] {
                b'+' if !first => {
                    pos += 1;
                    false
                }
                b'-' => {
                    pos += 1;
                    true
                }
                _ if first => false,
                other => {
                    return Err(Error::Parse(format!(
                        "expected '+' or '-' at byte {pos}, found {:?}",
                        other as char
                    )))
                }
            };
            first = false;
            let (c, i, j, next) = parse_term(&src, pos)?;
            pos = next;
            p.add_term(i, j, if negative { -c } else { c });
        }
        Ok(p)
    }
}

fn parse_term(src: &[u8], mut pos: usize) -> Result<(BigInt, u32, u32, usize)> {
    let start = pos;
    while pos < src.len() && src[pos].is_ascii_digit() {
        pos += 1;
    }
    let coeff = if pos > start {
        let digits = std::str::from_utf8(&src[start..pos]).expect("ascii digits");
        Some(BigInt::from_str(digits).map_err(|e| Error::Parse(e.to_string()))?)
    } else {
        None
    };
    let (i, pos) = parse_power(src, pos, b'x')?;
    let (j, pos) = parse_power(src, pos, b'y')?;
    if coeff.is_none() && i.is_none() && j.is_none() {
        return Err(Error::Parse(format!("expected a term at byte {start}")));
    }
    Ok((
        coeff.unwrap_or_else(BigInt::one),
        i.unwrap_or(0),
        j.unwrap_or(0),
        pos,
    ))
}

fn parse_power(src: &[u8], pos: usize, var: u8) -> Result<(Option<u32>, usize)> {
    if src.get(pos) != Some(&var) {
        return Ok((None, pos));
    }
    let mut pos = pos + 1;
    if src.get(pos) != Some(&b'^') {
        return Ok((Some(1), pos));
    }
    pos += 1;
    let start = pos;
    while pos < src.len() && src[pos].is_ascii_digit() {
        pos += 1;
    }
    let digits = std::str::from_utf8(&src[start..pos]).expect("ascii digits");
    let e = digits
        .parse::<u32>()
        .map_err(|_| Error::Parse(format!("bad exponent {digits:?} at byte {start}")))?;
    Ok((Some(e), pos))
}

/// Dense univariate polynomial `Σ c_k t^k` with no trailing zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![BigInt::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `[t^k] q`; zero outside the support, including negative `k`.
    pub fn coefficient(&self, k: i64) -> BigInt {
        if k < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(k as usize).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, k: usize, c: &BigInt) {
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, BigInt::zero());
        }
        self.coeffs[k] += c;
        self.normalize();
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|v| v * c).collect())
    }

    /// `(-1)^s q`.
    pub fn negate_by_parity(&self, s: i64) -> Self {
        if s.rem_euclid(2) == 0 {
            self.clone()
        } else {
            self.scale(&BigInt::from(-1))
        }
    }

    /// `q(1 - t)`.
    pub fn compose_one_minus(&self) -> Self {
        let one_minus = UniPoly::from_i64s(&[1, -1]);
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &one_minus) + &UniPoly::from_coeffs(vec![c.clone()]);
        }
        acc
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Renders with the given variable name.
    pub fn display_in(&self, var: &'static str) -> UniDisplay<'_> {
        UniDisplay { poly: self, var }
    }
}

impl<'a> Add<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs(
            (0..len)
                .map(|k| self.coefficient(k as i64) + rhs.coefficient(k as i64))
                .collect(),
        )
    }
}

impl<'a> Sub<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &rhs.scale(&BigInt::from(-1))
    }
}

impl<'a> Mul<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

pub struct UniDisplay<'a> {
    poly: &'a UniPoly,
    var: &'static str,
}

impl fmt::Display for UniDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            write_signed_term(
                f,
                first,
                c,
                |f| write_monomial(f, self.var, k as u32),
                k == 0,
            )?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_in("x").fmt(f)
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> BivarPoly {
        s.parse().unwrap()
    }

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&p("x + y") + &p("x - y"), p("2x"));
        assert_eq!(&p("x - 1") * &p("x - 1"), p("x^2 - 2x + 1"));
        assert!(p("x + 1").scale(&BigInt::zero()).is_zero());
    }

    #[test]
    fn binomial_powers() {
        assert_eq!(BivarPoly::binomial_power(-1, 2, Var::X), p("x^2 - 2x + 1"));
        assert_eq!(BivarPoly::binomial_power(-1, 0, Var::Y), BivarPoly::one());
        assert_eq!(
            BivarPoly::binomial_power(-1, 3, Var::X),
            p("x^3 - 3x^2 + 3x - 1")
        );
    }

    #[test]
    fn coefficients() {
        let t = p("x^2 + x + y");
        assert_eq!(t.coefficient(1, 0), BigInt::one());
        assert_eq!(t.coefficient(0, 0), BigInt::zero());
        assert_eq!(BivarPoly::zero().coefficient(5, 5), BigInt::zero());
        assert_eq!(t.coefficient_at(-1, 0), BigInt::zero());
        assert_eq!(UniPoly::from_i64s(&[1, 2]).coefficient(-2), BigInt::zero());
    }

    #[test]
    fn substitution() {
        // λ² − 3λ + 2 at λ = 1 − x
        let chi = UniPoly::from_i64s(&[2, -3, 1]);
        assert_eq!(chi.compose_one_minus(), UniPoly::from_i64s(&[0, 1, 1]));
        let xx = UniPoly::from_i64s(&[0, 1, 1]);
        assert_eq!(xx.negate_by_parity(2), xx);
        assert_eq!(
            UniPoly::from_i64s(&[0, 1]).compose_one_minus(),
            UniPoly::from_i64s(&[1, -1])
        );
        assert_eq!(xx.negate_by_parity(3), UniPoly::from_i64s(&[0, -1, -1]));
    }

    #[test]
    fn evaluation() {
        assert_eq!(p("x + y").eval(&q(2), &q(3)), q(5));
        assert_eq!(p("x^2 + x + y").eval(&q(1), &q(1)), q(3));
        assert_eq!(BivarPoly::zero().eval(&q(7), &q(-2)), q(0));
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(p("4xy").eval(&half, &half), q(1));
    }

    #[test]
    fn text_rendering() {
        assert_eq!(p("y + x + x^2").to_string(), "x^2 + x + y");
        assert_eq!(p("x + 1").to_string(), "x + 1");
        assert_eq!(p("-x + 3xy^2 - 1").to_string(), "3xy^2 - x - 1");
        assert_eq!(BivarPoly::zero().to_string(), "0");
        assert_eq!(p("x - x").to_string(), "0");
        assert_eq!(
            UniPoly::from_i64s(&[2, -3, 1]).display_in("λ").to_string(),
            "λ^2 - 3λ + 2"
        );
    }

    #[test]
    fn text_parse_errors() {
        for bad in ["", "x^", "x +", "++x", "2x3", "x^-1", "z", "x y^a"] {
            assert!(
                bad.parse::<BivarPoly>().is_err(),
                "{bad:?} should not parse"
            );
        }
    }

    #[test]
    fn json_rendering() {
        let t = p("x^2 + x + y");
        assert_eq!(
            t.to_json(),
            r#"{"terms":[{"x":0,"y":1,"c":"1"},{"x":1,"y":0,"c":"1"},{"x":2,"y":0,"c":"1"}]}"#
        );
        assert_eq!(BivarPoly::from_json(&t.to_json()).unwrap(), t);
        assert_eq!(BivarPoly::zero().to_json(), r#"{"terms":[]}"#);
    }

    #[test]
    fn json_rejects_non_canonical() {
        for bad in [
            r#"{"terms":[{"x":1,"y":0,"c":"1"},{"x":0,"y":0,"c":"1"}]}"#,
            r#"{"terms":[{"x":1,"y":0,"c":"1"},{"x":1,"y":0,"c":"2"}]}"#,
            r#"{"terms":[{"x":1,"y":0,"c":"0"}]}"#,
            r#"{"terms":[{"x":1,"y":0,"c":"+1"}]}"#,
            r#"{"terms":[{"x":1,"y":0,"c":1}]}"#,
            r#"{"terms":[],"extra":1}"#,
        ] {
            assert!(BivarPoly::from_json(bad).is_err(), "{bad}");
        }
    }

    fn arb_poly() -> impl Strategy<Value = BivarPoly> {
        prop::collection::vec((0u32..4, 0u32..4, -20i64..20), 0..6).prop_map(|ts| {
            let mut p = BivarPoly::zero();
            for (i, j, c) in ts {
                p.add_term(i, j, c.into());
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn eval_is_multiplicative(a in arb_poly(), b in arb_poly(), x0 in -5i64..5, y0 in -5i64..5) {
            let (x0, y0) = (q(x0), q(y0));
            prop_assert_eq!((&a * &b).eval(&x0, &y0), a.eval(&x0, &y0) * b.eval(&x0, &y0));
        }

        #[test]
        fn renderings_are_fixed_points(a in arb_poly()) {
            let text = a.to_string();
            let back: BivarPoly = text.parse().unwrap();
            prop_assert_eq!(&back, &a);
            prop_assert_eq!(back.to_string(), text);
            prop_assert_eq!(BivarPoly::from_json(&a.to_json()).unwrap(), a);
        }

        #[test]
        fn compose_one_minus_matches_pointwise(cs in prop::collection::vec(-9i64..9, 0..6), t in -4i64..4) {
            let u = UniPoly::from_i64s(&cs);
            prop_assert_eq!(u.compose_one_minus().eval(&q(t)), u.eval(&q(1 - t)));
        }
    }
}
