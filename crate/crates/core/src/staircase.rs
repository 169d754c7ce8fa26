//! Monomial ideals of `C[[x, y]]` as staircases, the three non-reduced model
//! curves, and the ADE `n_h` tables obtained by truncating their series.
//!
//! Orientation: row `b` of a staircase collects the boxes `x^a y^b` outside
//! the ideal, so `row_lengths[b]` is the x-extent at height `y^b`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::genus_transform::{nh_from_series_local, LocalGermData, NhVector};
use crate::laurent::{binomial, expand_rational, LaurentPoly1, TruncatedSeries};

/// Young diagram of the monomials outside a finite-colength monomial ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Staircase {
    row_lengths: Vec<usize>,
}

impl Staircase {
    pub fn new(row_lengths: Vec<usize>) -> Result<Self> {
        if row_lengths.contains(&0) {
            return Err(Error::Invalid("staircase rows must be positive".into()));
        }
        if row_lengths.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid("staircase rows must weakly decrease".into()));
        }
        Ok(Self { row_lengths })
    }

    pub fn row_lengths(&self) -> &[usize] {
        &self.row_lengths
    }

    /// Colength of the ideal.
    pub fn size(&self) -> usize {
        self.row_lengths.iter().sum()
    }

    /// Whether `x^a y^b` lies outside the ideal.
    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.row_lengths.get(b).is_some_and(|&len| a < len)
    }
}

/// Boxes `(a, b)` whose monomial `x^a y^b` must lie in the ideal.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BoxConstraint {
    forbidden: BTreeSet<(usize, usize)>,
}

impl BoxConstraint {
    pub fn new(forbidden: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Self {
            forbidden: forbidden.into_iter().collect(),
        }
    }

    pub fn forbidden(&self) -> &BTreeSet<(usize, usize)> {
        &self.forbidden
    }

    pub fn admits(&self, s: &Staircase) -> bool {
        self.forbidden.iter().all(|&(a, b)| !s.contains(a, b))
    }

    /// Longest row allowed at height `b`. A monomial ideal containing
    /// `x^a y^b'` contains it times every `y^k`, so caps propagate upward.
    fn row_cap(&self, b: usize) -> usize {
        self.forbidden
            .iter()
            .filter(|&&(_, fb)| fb <= b)
            .map(|&(a, _)| a)
            .min()
            .unwrap_or(usize::MAX)
    }
}

fn count_rows(remaining: usize, prev: usize, row: usize, c: &BoxConstraint) -> u128 {
    if remaining == 0 {
        return 1;
    }
    let top = prev.min(remaining).min(c.row_cap(row));
    (1..=top)
        .map(|len| count_rows(remaining - len, len, row + 1, c))
        .sum()
}

/// Number of staircases of size `n` avoiding every forbidden box.
///
/// The search is split over the length of the first row.
pub fn count_staircases(n: usize, c: &BoxConstraint) -> u128 {
    if n == 0 {
        return 1;
    }
    let top = n.min(c.row_cap(0));
    (1..=top)
        .into_par_iter()
        .map(|len| count_rows(n - len, len, 1, c))
        .sum()
}

/// All admissible staircases of size `n`, rows in lexicographically
/// decreasing order.
pub fn enumerate_staircases(n: usize, c: &BoxConstraint) -> Vec<Staircase> {
    fn go(
        rem: usize,
        prev: usize,
        rows: &mut Vec<usize>,
        c: &BoxConstraint,
        out: &mut Vec<Staircase>,
    ) {
        if rem == 0 {
            out.push(Staircase {
                row_lengths: rows.clone(),
            });
            return;
        }
        let top = prev.min(rem).min(c.row_cap(rows.len()));
        for len in (1..=top).rev() {
            rows.push(len);
            go(rem - len, len, rows, c, out);
            rows.pop();
        }
    }
    let mut out = Vec::new();
    go(n, usize::MAX, &mut Vec::new(), c, &mut out);
    out
}

/// The torus-invariant curves `y^2 = 0`, `x y^2 = 0` and `y^3 = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Model {
    AInf,
    DInf,
    EInf,
}

impl Model {
    pub const ALL: [Model; 3] = [Model::AInf, Model::DInf, Model::EInf];

    pub fn constraint(self) -> BoxConstraint {
        match self {
            Model::AInf => BoxConstraint::new([(0, 2)]),
            Model::DInf => BoxConstraint::new([(1, 2)]),
            Model::EInf => BoxConstraint::new([(0, 3)]),
        }
    }

    /// Numerator and denominator factors of the closed-form series.
    pub fn closed_form(self) -> (LaurentPoly1, Vec<LaurentPoly1>) {
        let f = LaurentPoly1::one_minus_power;
        match self {
            Model::AInf => (LaurentPoly1::one(), vec![f(1), f(2)]),
            Model::DInf => (
                LaurentPoly1::from_terms([(0, 1), (1, -1), (3, 1)]),
                vec![f(1), f(1), f(2)],
            ),
            Model::EInf => (LaurentPoly1::one(), vec![f(1), f(2), f(3)]),
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::AInf => "A_inf",
            Model::DInf => "D_inf",
            Model::EInf => "E_inf",
        })
    }
}

impl FromStr for Model {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" | "ainf" | "a_inf" => Ok(Model::AInf),
            "d" | "dinf" | "d_inf" => Ok(Model::DInf),
            "e" | "einf" | "e_inf" => Ok(Model::EInf),
            _ => Err(Error::InvalidLabel(s.to_string())),
        }
    }
}

/// `sum_n chi(model^[n]) q^n` through `q^order`, from the closed form.
pub fn model_series(model: Model, order: usize) -> TruncatedSeries {
    let (num, den) = model.closed_form();
    expand_rational(&num, &den, order).expect("model denominators are monic")
}

/// The same series by counting torus-fixed points directly.
pub fn counted_series(model: Model, order: usize) -> TruncatedSeries {
    let c = model.constraint();
    TruncatedSeries::new(
        (0..=order)
            .map(|n| BigInt::from(count_staircases(n, &c)))
            .collect(),
        order,
    )
}

/// A simple singularity type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AdeType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl AdeType {
    pub fn new_a(n: usize) -> Result<Self> {
        if n >= 1 {
            Ok(AdeType::A(n))
        } else {
            Err(Error::InvalidLabel(format!("A{n}")))
        }
    }

    pub fn new_d(n: usize) -> Result<Self> {
        if n >= 4 {
            Ok(AdeType::D(n))
        } else {
            Err(Error::InvalidLabel(format!("D{n}")))
        }
    }

    /// Every type with index at most `max_index`.
    pub fn all_up_to(max_index: usize) -> Vec<AdeType> {
        let mut out: Vec<AdeType> = (1..=max_index).map(AdeType::A).collect();
        out.extend((4..=max_index).map(AdeType::D));
        out.extend(
            [AdeType::E6, AdeType::E7, AdeType::E8]
                .into_iter()
                .filter(|e| e.milnor() <= max_index),
        );
        out
    }

    /// Rank of the Dynkin diagram, which is also the Milnor number.
    pub fn milnor(self) -> usize {
        match self {
            AdeType::A(n) | AdeType::D(n) => n,
            AdeType::E6 => 6,
            AdeType::E7 => 7,
            AdeType::E8 => 8,
        }
    }

    /// `(delta, b)`, solved from `mu = 2 delta + 1 - b` with `mu` the index:
    /// `A_{2d-1}` has two branches, `A_{2d}` one; `D_n` is `x (y^2 + x^(n-2))`,
    /// three branches for even `n` and two for odd; `E_6` and `E_8` are
    /// unibranch, `E_7 = y (y^2 + x^3)` has two.
    pub fn delta_branches(self) -> (usize, usize) {
        let (delta, b) = match self {
            AdeType::A(n) if n % 2 == 1 => (n.div_ceil(2), 2),
            AdeType::A(n) => (n / 2, 1),
            AdeType::D(n) if n % 2 == 0 => ((n + 2) / 2, 3),
            AdeType::D(n) => (n.div_ceil(2), 2),
            AdeType::E6 => (3, 1),
            AdeType::E7 => (4, 2),
            AdeType::E8 => (4, 1),
        };
        assert_eq!(
            2 * delta + 1 - b,
            self.milnor(),
            "Milnor relation fails for {self}"
        );
        (delta, b)
    }

    pub fn delta(self) -> usize {
        self.delta_branches().0
    }

    pub fn branches(self) -> usize {
        self.delta_branches().1
    }

    /// The model curve agreeing with this germ modulo `(x, y)^delta`.
    pub fn model(self) -> Model {
        match self {
            AdeType::A(_) => Model::AInf,
            AdeType::D(_) => Model::DInf,
            AdeType::E6 | AdeType::E7 | AdeType::E8 => Model::EInf,
        }
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeType::A(n) => write!(f, "A{n}"),
            AdeType::D(n) => write!(f, "D{n}"),
            AdeType::E6 => f.write_str("E6"),
            AdeType::E7 => f.write_str("E7"),
            AdeType::E8 => f.write_str("E8"),
        }
    }
}

impl FromStr for AdeType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidLabel(s.to_string());
        let t = s.trim();
        let mut chars = t.chars();
        let family = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let idx: usize = chars
            .as_str()
            .trim_start_matches('_')
            .parse()
            .map_err(|_| bad())?;
        match (family, idx) {
            ('A', n) => AdeType::new_a(n).map_err(|_| bad()),
            ('D', n) => AdeType::new_d(n).map_err(|_| bad()),
            ('E', 6) => Ok(AdeType::E6),
            ('E', 7) => Ok(AdeType::E7),
            ('E', 8) => Ok(AdeType::E8),
            _ => Err(bad()),
        }
    }
}

/// `n_h` of a simple germ from the first `delta + 1` coefficients of its
/// model series.
pub fn ade_nh(t: AdeType) -> NhVector {
    let (delta, branches) = t.delta_branches();
    let hilb = model_series(t.model(), delta);
    let data = LocalGermData::new(delta, branches, hilb).expect("model series start at 1");
    nh_from_series_local(&data).expect("series has order delta")
}

/// Closed binomial expressions for `n_h` of a simple germ.
pub fn ade_closed_formula(t: AdeType, h: i64) -> Result<BigInt> {
    let delta = t.delta() as i64;
    if h < 0 || h > delta {
        return Err(Error::OutOfRange { h, delta });
    }
    let d = delta;
    let c = binomial;
    let table = |v: [i64; 5]| BigInt::from(v[h as usize]);
    Ok(match t {
        AdeType::A(n) if n % 2 == 1 => c(d + h, d - h),
        AdeType::A(_) => c(d + h + 1, d - h),
        AdeType::D(n) if n % 2 == 0 => {
            c(d + h - 3, d - h) + 2 * c(d + h - 3, d - h - 1) + c(d + h - 2, d - h - 2)
        }
        AdeType::D(_) => {
            c(d + h - 2, d - h) + 2 * c(d + h - 2, d - h - 1) + c(d + h - 1, d - h - 2)
        }
        AdeType::E6 => table([5, 10, 6, 1, 0]),
        AdeType::E7 => table([2, 11, 15, 7, 1]),
        AdeType::E8 => table([7, 21, 21, 8, 1]),
    })
}

/// `ade_closed_formula` for every `h` as a local vector.
pub fn ade_closed_nh(t: AdeType) -> NhVector {
    let values = (0..=t.delta() as i64)
        .map(|h| ade_closed_formula(t, h).expect("h in range"))
        .collect();
    NhVector::local::<BigInt>(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    /// Partitions of `n` into at most `k` parts by the textbook recurrence.
    fn partitions_at_most(n: usize, k: usize) -> u128 {
        if n == 0 {
            return 1;
        }
        if k == 0 {
            return 0;
        }
        // largest part bounded by k after conjugation
        (1..=k.min(n)).map(|p| partitions_at_most(n - p, p)).sum()
    }

    #[test]
    fn staircase_counts() {
        assert_eq!(count_staircases(3, &Model::AInf.constraint()), 2);
        for m in Model::ALL {
            assert_eq!(count_staircases(0, &m.constraint()), 1);
        }
        assert_eq!(count_staircases(3, &Model::DInf.constraint()), 3);
        let listed = enumerate_staircases(3, &Model::DInf.constraint());
        let rows: Vec<&[usize]> = listed.iter().map(|s| s.row_lengths()).collect();
        assert_eq!(rows, vec![&[3][..], &[2, 1][..], &[1, 1, 1][..]]);
    }

    #[test]
    fn enumeration_agrees_with_filter() {
        let c = BoxConstraint::new([(2, 1), (0, 4)]);
        let all = enumerate_staircases(9, &BoxConstraint::default());
        let kept = all.iter().filter(|s| c.admits(s)).count() as u128;
        assert_eq!(kept, count_staircases(9, &c));
        assert_eq!(all.len(), 30);
    }

    #[test]
    fn model_series_examples() {
        assert_eq!(
            ints(model_series(Model::AInf, 5).coeffs()),
            vec![1, 1, 2, 2, 3, 3]
        );
        assert_eq!(
            ints(model_series(Model::EInf, 5).coeffs()),
            vec![1, 1, 2, 3, 4, 5]
        );
        assert_eq!(
            ints(model_series(Model::DInf, 5).coeffs()),
            vec![1, 1, 2, 3, 5, 7]
        );
        for n in 0..=12 {
            assert_eq!(
                count_staircases(n, &Model::AInf.constraint()),
                partitions_at_most(n, 2)
            );
            assert_eq!(
                count_staircases(n, &Model::EInf.constraint()),
                partitions_at_most(n, 3)
            );
        }
    }

    #[test]
    fn ade_tables() {
        assert_eq!(ints(&ade_nh(AdeType::E6).values), vec![5, 10, 6, 1]);
        assert_eq!(ints(&ade_nh(AdeType::E7).values), vec![2, 11, 15, 7, 1]);
        assert_eq!(ints(&ade_nh(AdeType::E8).values), vec![7, 21, 21, 8, 1]);
        assert_eq!(ints(&ade_nh(AdeType::A(1)).values), vec![1, 1]);
        assert_eq!(ints(&ade_nh(AdeType::A(2)).values), vec![2, 1]);
    }

    #[test]
    fn closed_formula_examples() {
        assert_eq!(
            ade_closed_formula(AdeType::A(3), 1).unwrap(),
            BigInt::from(3)
        );
        assert_eq!(ints(&ade_closed_nh(AdeType::D(4)).values), vec![1, 3, 4, 1]);
        assert_eq!(ints(&ade_nh(AdeType::D(4)).values), vec![1, 3, 4, 1]);
        assert_eq!(ade_closed_formula(AdeType::E8, 4).unwrap(), BigInt::from(1));
        assert_eq!(
            ade_closed_formula(AdeType::E6, 4),
            Err(Error::OutOfRange { h: 4, delta: 3 })
        );
        assert!(ade_closed_formula(AdeType::A(4), -1).is_err());
    }

    #[test]
    fn labels() {
        assert_eq!("E6".parse::<AdeType>().unwrap(), AdeType::E6);
        assert_eq!("a_12".parse::<AdeType>().unwrap(), AdeType::A(12));
        assert_eq!("D5".parse::<AdeType>().unwrap(), AdeType::D(5));
        for bad in ["D3", "A0", "E9", "F4", "", "A"] {
            assert!(bad.parse::<AdeType>().is_err(), "{bad}");
        }
        assert_eq!(AdeType::D(7).to_string(), "D7");
    }

    #[test]
    fn delta_branch_table() {
        assert_eq!(AdeType::A(5).delta_branches(), (3, 2));
        assert_eq!(AdeType::A(6).delta_branches(), (3, 1));
        assert_eq!(AdeType::D(4).delta_branches(), (3, 3));
        assert_eq!(AdeType::D(5).delta_branches(), (3, 2));
        assert_eq!(AdeType::E7.delta_branches(), (4, 2));
    }

    #[test]
    fn staircase_validation() {
        assert!(Staircase::new(vec![2, 3]).is_err());
        assert!(Staircase::new(vec![2, 0]).is_err());
        let s = Staircase::new(vec![3, 1]).unwrap();
        assert_eq!(s.size(), 4);
        assert!(s.contains(2, 0) && !s.contains(1, 1));
    }
}
