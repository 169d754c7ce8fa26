//! Exact Laurent polynomials and truncated power series over `Z`.
//!
//! [`LaurentPoly1`] carries a single variable (printed as `z`, or `q` when
//! it stands for a generating series). [`LaurentPoly2`] carries the two
//! HOMFLY variables `a` and `z`, keyed by `(a_exp, z_exp)`.
//! Zero coefficients are never stored, so derived equality is ring equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};

/// Exponent monoid of a Laurent polynomial.
pub trait Monomial: Copy + Ord + fmt::Debug + Send + Sync {
    fn unit() -> Self;
    fn times(self, other: Self) -> Self;
    fn is_unit(&self) -> bool {
        *self == Self::unit()
    }
}

impl Monomial for i64 {
    fn unit() -> Self {
        0
    }
    fn times(self, other: Self) -> Self {
        self + other
    }
}

impl Monomial for (i64, i64) {
    fn unit() -> Self {
        (0, 0)
    }
    fn times(self, other: Self) -> Self {
        (self.0 + other.0, self.1 + other.1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Laurent<E: Monomial> {
    coeffs: BTreeMap<E, BigInt>,
}

pub type LaurentPoly1 = Laurent<i64>;
pub type LaurentPoly2 = Laurent<(i64, i64)>;

impl<E: Monomial> Laurent<E> {
    pub fn zero() -> Self {
        Self {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(E::unit(), BigInt::one())
    }

    pub fn monomial(exp: E, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn from_terms<C, I>(terms: I) -> Self
    where
        C: Into<BigInt>,
        I: IntoIterator<Item = (E, C)>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Adds `coeff * x^exp` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, exp: E, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: E) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (E, &BigInt)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<E> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<E> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplication by the monomial `x^exp`.
    pub fn shift(&self, exp: E) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, x)| (e.times(exp), x.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Applies `f` to every exponent; `f` must be injective.
    pub fn map_exponents<F, M>(&self, f: M) -> Laurent<F>
    where
        F: Monomial,
        M: Fn(E) -> F,
    {
        Laurent::from_terms(self.coeffs.iter().map(|(e, c)| (f(*e), c.clone())))
    }
}

impl<E: Monomial> Add for &Laurent<E> {
    type Output = Laurent<E>;
    fn add(self, rhs: Self) -> Laurent<E> {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<E: Monomial> Sub for &Laurent<E> {
    type Output = Laurent<E>;
    fn sub(self, rhs: Self) -> Laurent<E> {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<E: Monomial> Neg for &Laurent<E> {
    type Output = Laurent<E>;
    fn neg(self) -> Laurent<E> {
        Laurent {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl<E: Monomial> Mul for &Laurent<E> {
    type Output = Laurent<E>;
    fn mul(self, rhs: Self) -> Laurent<E> {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1.times(*e2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl<E: Monomial> $tr for Laurent<E> {
            type Output = Laurent<E>;
            fn $m(self, rhs: Self) -> Laurent<E> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<E: Monomial> Neg for Laurent<E> {
    type Output = Laurent<E>;
    fn neg(self) -> Laurent<E> {
        -&self
    }
}

impl LaurentPoly1 {
    /// Builds `c_0 + c_1 x + ... + c_k x^k` from a dense coefficient list.
    pub fn from_dense<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, c)| (i as i64, c)),
        )
    }

    /// `(1 - x^k)`, the building block of every model denominator.
    pub fn one_minus_power(k: i64) -> Self {
        Self::from_terms([(0, 1), (k, -1)])
    }

    pub fn display_in(&self, var: &str) -> String {
        let mut s = String::new();
        write_terms(&mut s, self.terms(), |out, e| match e {
            0 => false,
            1 => {
                out.push_str(var);
                true
            }
            _ => {
                out.push_str(&format!("{var}^{e}"));
                true
            }
        });
        s
    }
}

impl fmt::Display for LaurentPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("z"))
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_terms(&mut s, self.terms(), |out, (a, z)| {
            out.push_str(&format!("a^{a}*z^{z}"));
            true
        });
        f.write_str(&s)
    }
}

/// Shared term printer: `write_mono` returns whether it emitted anything.
fn write_terms<'a, E, I, W>(out: &mut String, terms: I, mut write_mono: W)
where
    E: Copy,
    I: Iterator<Item = (E, &'a BigInt)>,
    W: FnMut(&mut String, E) -> bool,
{
    let mut first = true;
    for (e, c) in terms {
        let mag = c.abs();
        if first {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        first = false;
        let mut mono = String::new();
        let has_mono = write_mono(&mut mono, e);
        if !has_mono {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    if first {
        out.push('0');
    }
}

impl Serialize for LaurentPoly1 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for (e, c) in self.terms() {
            seq.serialize_element(&(e, c.to_string()))?;
        }
        seq.end()
    }
}

impl Serialize for LaurentPoly2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for ((a, z), c) in self.terms() {
            seq.serialize_element(&(a, z, c.to_string()))?;
        }
        seq.end()
    }
}

impl LaurentPoly2 {
    /// The unknot value `(a^-1 - a) / z`.
    pub fn unknot() -> Self {
        Self::from_terms([((-1, -1), 1), ((1, -1), -1)])
    }

    /// Embeds a z-polynomial at a-degree `a_exp`.
    pub fn from_z_part(a_exp: i64, part: &LaurentPoly1) -> Self {
        part.map_exponents(|z| (a_exp, z))
    }

    /// Lowest power of `a` present, with its coefficient as a z-polynomial.
    pub fn lowest_a_part(&self) -> Result<(i64, LaurentPoly1)> {
        let (a_min, _) = self.min_exp().ok_or(Error::ZeroPolynomial)?;
        let part = LaurentPoly1::from_terms(
            self.terms()
                .take_while(|((a, _), _)| *a == a_min)
                .map(|((_, z), c)| (z, c.clone())),
        );
        Ok((a_min, part))
    }

    /// Exact quotient by the unknot value `(a^-1 - a)/z`.
    ///
    /// Multiplying by `a z` turns the divisor into `1 - a^2`, which is
    /// divided out by long division from the lowest a-degree upwards.
    pub fn div_unknot(&self) -> Result<Self> {
        let mut rem = self.shift((1, 1));
        let mut quot = Self::zero();
        while let Some((a_min, _)) = rem.min_exp() {
            let (_, top) = rem.lowest_a_part()?;
            let a_max = rem.max_exp().map(|(a, _)| a).unwrap_or(a_min);
            if a_min + 2 > a_max {
                return Err(Error::NotDivisible);
            }
            let step = Self::from_z_part(a_min, &top);
            let divisor = Self::from_terms([((0, 0), 1), ((2, 0), -1)]);
            rem = &rem - &(&step * &divisor);
            quot = &quot + &step;
        }
        Ok(quot)
    }
}

/// A power series in `q` known exactly through `q^order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Zero-pads or cuts `coeffs` to exactly `order + 1` entries.
    pub fn new<C: Into<BigInt>>(coeffs: Vec<C>, order: usize) -> Self {
        let mut v: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        v.resize(order + 1, BigInt::zero());
        Self { coeffs: v }
    }

    /// Series whose order is the last index of `coeffs`.
    pub fn from_coeffs<C: Into<BigInt>>(coeffs: Vec<C>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Invalid(
                "series needs at least one coefficient".into(),
            ));
        }
        let order = coeffs.len() - 1;
        Ok(Self::new(coeffs, order))
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::<BigInt>::new(), order)
    }

    pub fn from_poly(p: &LaurentPoly1, order: usize) -> Result<Self> {
        if p.min_exp().is_some_and(|e| e < 0) {
            return Err(Error::NegativeExponent("polynomial"));
        }
        let mut out = Self::zero(order);
        for (e, c) in p.terms() {
            if (e as usize) <= order {
                out.coeffs[e as usize] = c.clone();
            }
        }
        Ok(out)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^d`; zero for negative `d`. Panics past the order.
    pub fn coeff(&self, d: i64) -> BigInt {
        if d < 0 {
            return BigInt::zero();
        }
        self.coeffs[d as usize].clone()
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise truncation order");
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn to_poly(&self) -> LaurentPoly1 {
        LaurentPoly1::from_dense(&self.coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] + &other.coeffs[i])
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, x) in self.coeffs.iter().enumerate().take(order + 1) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += x * y;
            }
        }
        Self { coeffs: out }
    }

    /// Product with a polynomial that is known exactly; keeps this order.
    pub fn mul_poly(&self, p: &LaurentPoly1) -> Result<Self> {
        Ok(self.mul(&Self::from_poly(p, self.order())?))
    }

    /// Degree of the last nonzero coefficient, if any.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Divides by a polynomial with nonzero constant term, order preserved.
    pub fn div_poly(&self, factor: &LaurentPoly1) -> Result<Self> {
        let f = Self::from_poly(factor, self.order())?;
        let f0 = factor.coeff(0);
        if f0.is_zero() {
            return Err(Error::ZeroConstantTerm(0));
        }
        let mut out: Vec<BigInt> = Vec::with_capacity(self.coeffs.len());
        for k in 0..self.coeffs.len() {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                if !f.coeffs[j].is_zero() {
                    acc -= &f.coeffs[j] * &out[k - j];
                }
            }
            let (q, r) = acc.div_rem(&f0);
            if !r.is_zero() {
                return Err(Error::NotIntegral(k));
            }
            out.push(q);
        }
        Ok(Self { coeffs: out })
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + O(q^{})",
            self.to_poly().display_in("q"),
            self.order() + 1
        )
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&crate::json::big_number(c))?;
        }
        seq.end()
    }
}

/// Expands `numerator / prod(denom_factors)` as a power series through `q^order`.
pub fn expand_rational(
    numerator: &LaurentPoly1,
    denom_factors: &[LaurentPoly1],
    order: usize,
) -> Result<TruncatedSeries> {
    for (i, f) in denom_factors.iter().enumerate() {
        if f.min_exp().is_some_and(|e| e < 0) {
            return Err(Error::NegativeExponent("denominator factor"));
        }
        if f.coeff(0).is_zero() {
            return Err(Error::ZeroConstantTerm(i));
        }
    }
    let mut series = TruncatedSeries::from_poly(numerator, order)
        .map_err(|_| Error::NegativeExponent("numerator"))?;
    for f in denom_factors {
        series = series.div_poly(f)?;
    }
    Ok(series)
}

/// Generalized binomial coefficient `C(m, k)` for any integer `m`, `k >= 0`.
pub fn binomial(m: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= m - i;
        den *= i + 1;
    }
    num / den
}

/// `[q^k] (1-q)^m` for any integer `m`.
pub fn one_minus_q_pow_coeff(m: i64, k: i64) -> BigInt {
    let c = binomial(m, k);
    if k % 2 == 0 {
        c
    } else {
        -c
    }
}

/// Truncated expansion of `(1-q)^m` for any integer `m`.
pub fn one_minus_q_pow(m: i64, order: usize) -> TruncatedSeries {
    TruncatedSeries::new(
        (0..=order as i64)
            .map(|k| one_minus_q_pow_coeff(m, k))
            .collect::<Vec<_>>(),
        order,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p1(terms: &[(i64, i64)]) -> LaurentPoly1 {
        LaurentPoly1::from_terms(terms.iter().copied())
    }

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn ring_examples() {
        let lhs = &p1(&[(0, 1), (1, -1)]) * &p1(&[(0, 1), (1, 1)]);
        assert_eq!(lhs, p1(&[(0, 1), (2, -1)]));
        assert!((&lhs * &LaurentPoly1::zero()).is_zero());

        let u = LaurentPoly2::from_terms([((-1, 0), 1), ((1, 0), -1)]);
        let sq = u.pow(2);
        assert_eq!(
            sq,
            LaurentPoly2::from_terms([((-2, 0), 1), ((0, 0), -2), ((2, 0), 1)])
        );
    }

    #[test]
    fn cancellation_leaves_no_zero_entries() {
        let p = p1(&[(3, 2)]);
        let q = &p - &p;
        assert!(q.is_zero());
        assert_eq!(q.len(), 0);
        assert_eq!(q, LaurentPoly1::zero());
    }

    #[test]
    fn printing() {
        assert_eq!(p1(&[(-1, 2), (1, 1)]).to_string(), "2*z^-1 + z");
        assert_eq!(
            p1(&[(0, -3), (2, 1), (5, -1)]).to_string(),
            "-3 + z^2 - z^5"
        );
        assert_eq!(LaurentPoly2::monomial((2, 0), 1).to_string(), "a^2*z^0");
        assert_eq!(LaurentPoly1::zero().to_string(), "0");
        let s = serde_json::to_string(&p1(&[(-1, 2), (1, 1)])).unwrap();
        assert_eq!(s, r#"[[-1,"2"],[1,"1"]]"#);
    }

    #[test]
    fn expand_rational_examples() {
        let one = LaurentPoly1::one();
        let a = expand_rational(
            &one,
            &[
                LaurentPoly1::one_minus_power(1),
                LaurentPoly1::one_minus_power(2),
            ],
            4,
        )
        .unwrap();
        assert_eq!(ints(&a), vec![1, 1, 2, 2, 3]);

        let g = expand_rational(&one, &[LaurentPoly1::one_minus_power(1)], 3).unwrap();
        assert_eq!(ints(&g), vec![1, 1, 1, 1]);

        // long-division oracle: c_n of 1/((1-q)^2(1-q^2)) is 1,2,4,6;
        // the numerator 1 - q + q^3 gives d_n = c_n - c_{n-1} + c_{n-3}
        let d = expand_rational(
            &p1(&[(0, 1), (1, -1), (3, 1)]),
            &[
                LaurentPoly1::one_minus_power(1),
                LaurentPoly1::one_minus_power(1),
                LaurentPoly1::one_minus_power(2),
            ],
            3,
        )
        .unwrap();
        assert_eq!(ints(&d), vec![1, 1, 2, 3]);
    }

    #[test]
    fn expand_rational_errors() {
        let r = expand_rational(&LaurentPoly1::one(), &[p1(&[(1, 1)])], 3);
        assert_eq!(r, Err(Error::ZeroConstantTerm(0)));
        let r = expand_rational(&LaurentPoly1::one(), &[p1(&[(0, 2), (1, 1)])], 3);
        assert_eq!(r, Err(Error::NotIntegral(0)));
        let r = expand_rational(&p1(&[(-1, 1)]), &[], 3);
        assert!(matches!(r, Err(Error::NegativeExponent(_))));
    }

    #[test]
    fn lowest_a_part_examples() {
        assert_eq!(
            LaurentPoly2::monomial((3, 1), 1).lowest_a_part().unwrap(),
            (3, p1(&[(1, 1)]))
        );
        let p = LaurentPoly2::from_terms([((-1, 0), 1), ((1, 0), 1)]);
        assert_eq!(p.lowest_a_part().unwrap(), (-1, LaurentPoly1::one()));
        assert_eq!(
            LaurentPoly2::zero().lowest_a_part(),
            Err(Error::ZeroPolynomial)
        );

        // a^2 (2 - a^2 + z^2) (a^-1 - a) / z
        //   = 2a z^-1 + a z - 3a^3 z^-1 - a^3 z + a^5 z^-1
        let trefoil = LaurentPoly2::from_terms([((2, 0), 2), ((4, 0), -1), ((2, 2), 1)]);
        let full = &trefoil * &LaurentPoly2::unknot();
        let expected = LaurentPoly2::from_terms([
            ((1, -1), 2),
            ((1, 1), 1),
            ((3, -1), -3),
            ((3, 1), -1),
            ((5, -1), 1),
        ]);
        assert_eq!(full, expected);
        assert_eq!(full.lowest_a_part().unwrap(), (1, p1(&[(-1, 2), (1, 1)])));
        assert_eq!(full.div_unknot().unwrap(), trefoil);
    }

    #[test]
    fn div_unknot_rejects_non_multiples() {
        assert_eq!(LaurentPoly2::one().div_unknot(), Err(Error::NotDivisible));
        let p = LaurentPoly2::from_terms([((0, 0), 1), ((2, 0), 1)]);
        assert_eq!(p.div_unknot(), Err(Error::NotDivisible));
        assert_eq!(LaurentPoly2::zero().div_unknot(), Ok(LaurentPoly2::zero()));
    }

    #[test]
    fn series_truncation_takes_minimum() {
        let a = TruncatedSeries::new(vec![1, 1, 1, 1, 1], 4);
        let b = TruncatedSeries::new(vec![1, -1], 2);
        assert_eq!(a.mul(&b).order(), 2);
        assert_eq!(ints(&a.mul(&b)), vec![1, 0, 0]);
        assert_eq!(a.add(&b).order(), 2);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial(-2, 3), BigInt::from(-4));
        assert_eq!(ints(&one_minus_q_pow(-2, 4)), vec![1, 2, 3, 4, 5]);
        assert_eq!(ints(&one_minus_q_pow(3, 4)), vec![1, -3, 3, -1, 0]);
    }
}
