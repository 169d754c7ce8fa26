//! Passage between Euler characteristics of Hilbert schemes of points and
//! the integers `n_h`.
//!
//! Globally, for a curve of arithmetic genus `g`,
//!
//! ```text
//! sum_d f_d q^d = sum_{h <= g} n_h q^(g-h) (1-q)^(2h-2)
//! ```
//!
//! and locally, for a germ with delta invariant `delta` and `b` branches,
//!
//! ```text
//! (1-q)^b sum_n chi(c^[n]) q^n = sum_{h <= delta} n_h q^(delta-h) (1-q)^(2h)
//! ```
//!
//! Both systems are unitriangular in the monomial basis, so the `n_h` are
//! recovered one at a time from the lowest coefficient upwards.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::json::big_array;
use crate::laurent::{one_minus_q_pow, one_minus_q_pow_coeff, TruncatedSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NhKind {
    Local,
    Global,
}

/// `n_h` for `h = low, low + 1, ..., low + values.len() - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NhVector {
    pub kind: NhKind,
    pub low: i64,
    pub values: Vec<BigInt>,
}

impl NhVector {
    pub fn new<C: Into<BigInt>>(kind: NhKind, low: i64, values: Vec<C>) -> Self {
        Self {
            kind,
            low,
            values: values.into_iter().map(Into::into).collect(),
        }
    }

    pub fn local<C: Into<BigInt>>(values: Vec<C>) -> Self {
        Self::new(NhKind::Local, 0, values)
    }

    pub fn high(&self) -> i64 {
        self.low + self.values.len() as i64 - 1
    }

    /// `n_h`, zero outside the stored range.
    pub fn get(&self, h: i64) -> BigInt {
        if h < self.low || h > self.high() {
            return BigInt::zero();
        }
        self.values[(h - self.low) as usize].clone()
    }

    /// `n_lo, ..., n_hi` with zeros outside the stored range.
    pub fn range(&self, lo: i64, hi: i64) -> Vec<BigInt> {
        (lo..=hi).map(|h| self.get(h)).collect()
    }

    /// Delta invariant of a local vector (its top index).
    pub fn delta(&self) -> i64 {
        self.high()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind,
            "low": self.low,
            "values": big_array(&self.values),
        })
    }
}

impl fmt::Display for NhVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(
            f,
            "(n_{}..n_{}) = ({})",
            self.low,
            self.high(),
            vals.join(", ")
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalCurveData {
    pub genus: usize,
    pub geometric_genus: usize,
    /// `chi(C^[n])` for `n = 0..=order`.
    pub hilb: TruncatedSeries,
}

impl GlobalCurveData {
    pub fn new(genus: usize, geometric_genus: usize, hilb: TruncatedSeries) -> Result<Self> {
        if geometric_genus > genus {
            return Err(Error::Invalid(format!(
                "geometric genus {geometric_genus} exceeds arithmetic genus {genus}"
            )));
        }
        if !hilb.coeff(0).is_one() {
            return Err(Error::Invalid("chi(C^[0]) must be 1".into()));
        }
        Ok(Self {
            genus,
            geometric_genus,
            hilb,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalGermData {
    pub delta: usize,
    pub branches: usize,
    /// `chi(c^[n])`; only `n = 0..=delta` is read.
    pub hilb: TruncatedSeries,
}

impl LocalGermData {
    pub fn new(delta: usize, branches: usize, hilb: TruncatedSeries) -> Result<Self> {
        if branches == 0 {
            return Err(Error::Invalid("a germ has at least one branch".into()));
        }
        if !hilb.coeff(0).is_one() {
            return Err(Error::Invalid("chi(c^[0]) must be 1".into()));
        }
        Ok(Self {
            delta,
            branches,
            hilb,
        })
    }

    /// Milnor's relation `mu = 2 delta + 1 - b`.
    pub fn milnor(&self) -> i64 {
        2 * self.delta as i64 + 1 - self.branches as i64
    }
}

/// Solves the global system for an arbitrary series.
///
/// The coefficients of `q^0..=q^order` determine exactly `n_g` down to
/// `n_{g - order}`, so the result covers `h = g - order ..= g`. Negative `h`
/// are kept: they vanish for actual curves but not for arbitrary series.
pub fn solve_global(genus: usize, f: &TruncatedSeries) -> Result<NhVector> {
    let g = genus as i64;
    let order = f.order();
    if order < genus {
        return Err(Error::InsufficientOrder {
            have: order,
            need: genus,
        });
    }
    // values[d] holds n_{g-d}
    let mut by_depth: Vec<BigInt> = Vec::with_capacity(order + 1);
    for d in 0..=order as i64 {
        let mut acc = f.coeff(d);
        for (depth, n) in by_depth.iter().enumerate() {
            let h = g - depth as i64;
            acc -= n * one_minus_q_pow_coeff(2 * h - 2, d - depth as i64);
        }
        by_depth.push(acc);
    }
    by_depth.reverse();
    Ok(NhVector::new(NhKind::Global, g - order as i64, by_depth))
}

pub fn nh_from_series_global(d: &GlobalCurveData) -> Result<NhVector> {
    solve_global(d.genus, &d.hilb)
}

/// `sum_h n_h q^(g-h) (1-q)^(2h-2)` through `q^order`, with `g` the top index.
pub fn series_from_nh(n: &NhVector, order: usize) -> Result<TruncatedSeries> {
    if n.kind != NhKind::Global {
        return Err(Error::Invalid(
            "series_from_nh expects a global vector".into(),
        ));
    }
    let g = n.high();
    Ok(sum_shifted_powers(n, order, |h| (g - h, 2 * h - 2)))
}

/// `(1-q)^b sum chi(c^[n]) q^n = sum_h n_h q^(delta-h) (1-q)^(2h)` through `q^order`.
pub fn local_polynomial(n: &NhVector, order: usize) -> TruncatedSeries {
    let delta = n.high();
    sum_shifted_powers(n, order, |h| (delta - h, 2 * h))
}

/// Inverse of [`nh_from_series_local`]: the local Hilbert series through `q^order`.
pub fn series_from_nh_local(
    n: &NhVector,
    branches: usize,
    order: usize,
) -> Result<TruncatedSeries> {
    if n.kind != NhKind::Local {
        return Err(Error::Invalid(
            "series_from_nh_local expects a local vector".into(),
        ));
    }
    let poly = local_polynomial(n, order);
    Ok(poly.mul(&one_minus_q_pow(-(branches as i64), order)))
}

fn sum_shifted_powers<F>(n: &NhVector, order: usize, shape: F) -> TruncatedSeries
where
    F: Fn(i64) -> (i64, i64),
{
    let mut out = vec![BigInt::zero(); order + 1];
    for (i, c) in n.values.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (shift, power) = shape(n.low + i as i64);
        for (d, slot) in out.iter_mut().enumerate() {
            let k = d as i64 - shift;
            if k >= 0 {
                *slot += c * one_minus_q_pow_coeff(power, k);
            }
        }
    }
    TruncatedSeries::new(out, order)
}

pub fn nh_from_series_local(d: &LocalGermData) -> Result<NhVector> {
    let delta = d.delta;
    if d.hilb.order() < delta {
        return Err(Error::InsufficientOrder {
            have: d.hilb.order(),
            need: delta,
        });
    }
    let lhs = d
        .hilb
        .truncate(delta)
        .mul(&one_minus_q_pow(d.branches as i64, delta));
    let dl = delta as i64;
    let mut by_depth: Vec<BigInt> = Vec::with_capacity(delta + 1);
    for k in 0..=dl {
        let mut acc = lhs.coeff(k);
        for (depth, n) in by_depth.iter().enumerate() {
            let h = dl - depth as i64;
            acc -= n * one_minus_q_pow_coeff(2 * h, k - depth as i64);
        }
        by_depth.push(acc);
    }
    by_depth.reverse();
    Ok(NhVector::new(NhKind::Local, 0, by_depth))
}

/// Global vector of a curve of geometric genus `geometric_genus` whose
/// singularities have the given local vectors.
pub fn combine_local(geometric_genus: usize, locals: &[NhVector]) -> NhVector {
    let mut acc: Vec<BigInt> = vec![BigInt::one()];
    for local in locals {
        let lo = local.low.min(0);
        let part = local.range(lo, local.high());
        let mut next = vec![BigInt::zero(); acc.len() + part.len() - 1];
        for (i, x) in acc.iter().enumerate() {
            for (j, y) in part.iter().enumerate() {
                next[i + j] += x * y;
            }
        }
        acc = next;
    }
    let low: i64 = geometric_genus as i64 + locals.iter().map(|l| l.low.min(0)).sum::<i64>();
    NhVector::new(NhKind::Global, low, acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowVanishing {
    pub ok: bool,
    /// The common constant `c`, which equals `n_0`; `None` if unconstrained.
    pub constant: Option<BigInt>,
}

/// Tests `f_d - f_(2g-2-d) = c (d + 1 - g)` for every `d` through the order.
pub fn check_low_vanishing(f: &TruncatedSeries, genus: usize) -> LowVanishing {
    let g = genus as i64;
    let order = f.order() as i64;
    if order < 2 * g - 2 {
        return LowVanishing {
            ok: false,
            constant: None,
        };
    }
    let mut constant: Option<BigInt> = None;
    for d in 0..=order {
        let mirror = 2 * g - 2 - d;
        let diff = f.coeff(d)
            - if mirror <= order {
                f.coeff(mirror)
            } else {
                BigInt::zero()
            };
        let weight = d + 1 - g;
        if weight == 0 {
            if !diff.is_zero() {
                return LowVanishing {
                    ok: false,
                    constant,
                };
            }
            continue;
        }
        let (c, r) = diff.div_rem(&BigInt::from(weight));
        if !r.is_zero() {
            return LowVanishing {
                ok: false,
                constant,
            };
        }
        match &constant {
            Some(prev) if *prev != c => {
                return LowVanishing {
                    ok: false,
                    constant,
                }
            }
            Some(_) => {}
            None => constant = Some(c),
        }
    }
    LowVanishing { ok: true, constant }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub top: BigInt,
    /// `(n_{g-1}, chi + 2g - 2)`; absent when `g = 0`.
    pub subtop: Option<(BigInt, BigInt)>,
    pub ok: bool,
}

/// Checks `n_g = 1` and `n_{g-1} = chi(C) + 2g - 2`.
pub fn identity_checks(d: &GlobalCurveData, topological_euler: i64) -> Result<IdentityReport> {
    let nh = nh_from_series_global(d)?;
    let g = d.genus as i64;
    let top = nh.get(g);
    let subtop = (g >= 1).then(|| (nh.get(g - 1), BigInt::from(topological_euler + 2 * g - 2)));
    let ok = top.is_one() && subtop.as_ref().is_none_or(|(a, b)| a == b);
    Ok(IdentityReport { top, subtop, ok })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::binomial;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    fn node() -> NhVector {
        NhVector::local(vec![1, 1])
    }

    fn cusp() -> NhVector {
        NhVector::local(vec![2, 1])
    }

    #[test]
    fn smooth_curves() {
        // Macdonald: sum q^n chi(C^[n]) = (1-q)^(2g-2)
        let d = GlobalCurveData::new(2, 2, one_minus_q_pow(2, 2)).unwrap();
        let n = nh_from_series_global(&d).unwrap();
        assert_eq!(ints(&n.range(0, 2)), vec![0, 0, 1]);

        let d = GlobalCurveData::new(0, 0, one_minus_q_pow(-2, 6)).unwrap();
        let n = nh_from_series_global(&d).unwrap();
        assert_eq!(n.get(0), BigInt::one());
        assert!(n.values.iter().filter(|c| !c.is_zero()).count() == 1);
    }

    #[test]
    fn rational_nodal_and_cuspidal_cubics() {
        for (local, expected) in [(node(), vec![1, 1]), (cusp(), vec![2, 1])] {
            // chi(C^[n]) from the stratification: (1-q)^(2g~ - 2 + b) * local series
            let b = if local == node() { 2 } else { 1 };
            let loc = series_from_nh_local(&local, b, 8).unwrap();
            let hilb = loc.mul(&one_minus_q_pow(-2 + b as i64, 8));
            let d = GlobalCurveData::new(1, 0, hilb).unwrap();
            let n = nh_from_series_global(&d).unwrap();
            assert_eq!(ints(&n.range(-7, 1)), [vec![0; 7], expected].concat());
        }
    }

    #[test]
    fn nodal_cubic_series() {
        let n = NhVector::new(NhKind::Global, 0, vec![1, 1]);
        let s = series_from_nh(&n, 5).unwrap();
        assert_eq!(ints(s.coeffs()), vec![1, 1, 2, 3, 4, 5]);
        let back = solve_global(1, &s).unwrap();
        assert_eq!(ints(&back.range(-4, 1)), vec![0, 0, 0, 0, 1, 1]);

        let top = NhVector::new(NhKind::Global, 0, vec![0, 0, 0, 1]);
        assert_eq!(series_from_nh(&top, 6).unwrap(), one_minus_q_pow(4, 6));
    }

    #[test]
    fn local_examples() {
        let node_data = LocalGermData::new(1, 2, TruncatedSeries::new(vec![1, 1], 1)).unwrap();
        assert_eq!(
            ints(&nh_from_series_local(&node_data).unwrap().values),
            vec![1, 1]
        );
        assert_eq!(node_data.milnor(), 1);
        let cusp_data = LocalGermData::new(1, 1, TruncatedSeries::new(vec![1, 1], 1)).unwrap();
        assert_eq!(
            ints(&nh_from_series_local(&cusp_data).unwrap().values),
            vec![2, 1]
        );
        assert_eq!(cusp_data.milnor(), 2);
        let smooth = LocalGermData::new(0, 1, TruncatedSeries::new(vec![1], 0)).unwrap();
        assert_eq!(
            ints(&nh_from_series_local(&smooth).unwrap().values),
            vec![1]
        );
    }

    #[test]
    fn insufficient_order_is_an_error() {
        let d = LocalGermData::new(3, 1, TruncatedSeries::new(vec![1, 1], 1)).unwrap();
        assert_eq!(
            nh_from_series_local(&d),
            Err(Error::InsufficientOrder { have: 1, need: 3 })
        );
        assert!(solve_global(4, &TruncatedSeries::new(vec![1], 2)).is_err());
        assert!(GlobalCurveData::new(1, 2, TruncatedSeries::new(vec![1], 1)).is_err());
        assert!(LocalGermData::new(1, 0, TruncatedSeries::new(vec![1], 1)).is_err());
    }

    #[test]
    fn combine_examples() {
        for k in 0..=6usize {
            let n = combine_local(0, &vec![node(); k]);
            for h in 0..=k as i64 {
                assert_eq!(n.get(h), binomial(k as i64, k as i64 - h));
            }
        }
        assert_eq!(combine_local(0, &[cusp()]).range(0, 1), cusp().values);
        let smooth = combine_local(3, &[]);
        assert_eq!(ints(&smooth.range(0, 3)), vec![0, 0, 0, 1]);
        let ab = combine_local(1, &[node(), cusp()]);
        let ba = combine_local(1, &[cusp(), node()]);
        assert_eq!(ab, ba);
        assert_eq!(ints(&ab.range(1, 3)), vec![2, 3, 1]);
    }

    #[test]
    fn low_vanishing() {
        let nodal = series_from_nh(&NhVector::new(NhKind::Global, 0, vec![1, 1]), 8).unwrap();
        assert_eq!(
            check_low_vanishing(&nodal, 1),
            LowVanishing {
                ok: true,
                constant: Some(BigInt::one())
            }
        );
        let smooth1 = TruncatedSeries::new(vec![1], 6);
        assert_eq!(
            check_low_vanishing(&smooth1, 1),
            LowVanishing {
                ok: true,
                constant: Some(BigInt::zero())
            }
        );
        let cuspidal = series_from_nh(&NhVector::new(NhKind::Global, 0, vec![2, 1]), 8).unwrap();
        assert_eq!(
            check_low_vanishing(&cuspidal, 1).constant,
            Some(BigInt::from(2))
        );
        // a nonzero n_{-1} breaks the criterion
        let bad = series_from_nh(&NhVector::new(NhKind::Global, -1, vec![1, 2, 1]), 8).unwrap();
        assert!(!check_low_vanishing(&bad, 1).ok);
    }

    #[test]
    fn identities() {
        let series = |v: Vec<i64>| series_from_nh(&NhVector::new(NhKind::Global, 0, v), 6).unwrap();
        let cusp_curve = GlobalCurveData::new(1, 0, series(vec![2, 1])).unwrap();
        assert!(identity_checks(&cusp_curve, 2).unwrap().ok);
        let node_curve = GlobalCurveData::new(1, 0, series(vec![1, 1])).unwrap();
        assert!(identity_checks(&node_curve, 1).unwrap().ok);
        assert!(!identity_checks(&node_curve, 2).unwrap().ok);
        let smooth3 = GlobalCurveData::new(3, 3, one_minus_q_pow(4, 6)).unwrap();
        let r = identity_checks(&smooth3, -4).unwrap();
        assert!(r.ok);
        assert_eq!(r.subtop.unwrap().0, BigInt::zero());
    }

    #[test]
    fn json_shape() {
        let v = NhVector::local(vec![5, 10, 6, 1]).to_json();
        assert_eq!(
            v.to_string(),
            r#"{"kind":"local","low":0,"values":[5,10,6,1]}"#
        );
    }
}
