//! Catalog of singularity germs and the comparison between the lowest
//! a-degree HOMFLY part of their links and `sum_h n_h z^(2h - b)`.

use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::braid::{milnor_from_braid, pinf_positive, BraidWord};
use crate::error::{Error, Result};
use crate::genus_transform::{series_from_nh_local, NhVector};
use crate::laurent::{one_minus_q_pow, LaurentPoly1};
use crate::staircase::{ade_nh, model_series, AdeType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Germ {
    Ade(AdeType),
    /// `x^p - y^q` with `gcd(p, q) = 1`.
    Torus {
        p: usize,
        q: usize,
    },
}

impl fmt::Display for Germ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Germ::Ade(t) => write!(f, "{t}"),
            Germ::Torus { p, q } => write!(f, "T({p},{q})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularityModel {
    pub name: String,
    pub germ: Germ,
    pub delta: usize,
    pub mu: usize,
    pub branches: usize,
    /// Positive braid whose closure is the link, when it is a torus link.
    pub link_braid: Option<BraidWord>,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl SingularityModel {
    pub fn ade(t: AdeType) -> Self {
        let (delta, branches) = t.delta_branches();
        // A_n: y^2 = x^(n+1) is T(2, n+1); E_6, E_8 are T(3,4), T(3,5)
        let link_braid = match t {
            AdeType::A(n) => Some(BraidWord::torus(2, n + 1)),
            AdeType::E6 => Some(BraidWord::torus(3, 4)),
            AdeType::E8 => Some(BraidWord::torus(3, 5)),
            AdeType::D(_) | AdeType::E7 => None,
        }
        .map(|w| w.expect("valid torus braid"));
        Self {
            name: t.to_string(),
            germ: Germ::Ade(t),
            delta,
            mu: t.milnor(),
            branches,
            link_braid,
        }
    }

    /// The unibranch germ `x^p - y^q`; `delta` is the number of gaps of
    /// the semigroup generated by `p` and `q`.
    pub fn torus(p: usize, q: usize) -> Result<Self> {
        if p < 2 || q < 2 || gcd(p, q) != 1 {
            return Err(Error::Invalid(format!(
                "x^{p} - y^{q} needs coprime exponents >= 2"
            )));
        }
        let delta = (p - 1) * (q - 1) / 2;
        Ok(Self {
            name: format!("x^{p} - y^{q}"),
            germ: Germ::Torus { p, q },
            delta,
            mu: 2 * delta,
            branches: 1,
            link_braid: Some(BraidWord::torus(p, q)?),
        })
    }

    /// Local `n_h` when the catalog knows them.
    pub fn local_nh(&self) -> Option<NhVector> {
        match self.germ {
            Germ::Ade(t) => Some(ade_nh(t)),
            Germ::Torus { .. } => None,
        }
    }

    /// `mu = 2 delta + 1 - b`, and `mu = w - n + 1` for the link braid.
    pub fn milnor_relations_hold(&self) -> bool {
        let milnor = self.mu as i64 == 2 * self.delta as i64 + 1 - self.branches as i64;
        let braid = match &self.link_braid {
            Some(w) if w.is_positive() => {
                let m = milnor_from_braid(w).expect("positive");
                m.mu == self.mu as i64
                    && m.delta(self.branches) == Some(self.delta as i64)
                    && crate::braid::closure_components(w) == self.branches
            }
            Some(_) | None => true,
        };
        milnor && braid
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "germ": self.germ.to_string(),
            "delta": self.delta,
            "mu": self.mu,
            "branches": self.branches,
            "braid": self.link_braid.as_ref().map(|w| json!({
                "strands": w.strands(),
                "word": w.to_string(),
            })),
            "nh": self.local_nh().map(|n| n.to_json()),
        })
    }
}

/// Torus germs outside the ADE list carried by the catalog.
pub const TORUS_GERMS: [(usize, usize); 3] = [(3, 7), (3, 8), (4, 5)];

pub fn catalog() -> Vec<SingularityModel> {
    let mut out: Vec<SingularityModel> = AdeType::all_up_to(12)
        .into_iter()
        .map(SingularityModel::ade)
        .collect();
    out.extend(
        TORUS_GERMS
            .iter()
            .map(|&(p, q)| SingularityModel::torus(p, q).expect("coprime")),
    );
    out
}

/// Looks a model up by ADE label (`E6`) or torus exponents (`T(4,5)`, `4,5`).
pub fn find_model(label: &str) -> Result<SingularityModel> {
    if let Ok(t) = label.parse::<AdeType>() {
        return Ok(SingularityModel::ade(t));
    }
    let inner = label
        .trim()
        .trim_start_matches(['T', 't'])
        .trim_start_matches('(')
        .trim_end_matches(')');
    let mut parts = inner.split(',').map(|s| s.trim().parse::<usize>());
    match (parts.next(), parts.next(), parts.next()) {
        (Some(Ok(p)), Some(Ok(q)), None) => SingularityModel::torus(p, q),
        _ => Err(Error::InvalidLabel(label.to_string())),
    }
}

/// `sum_h n_h z^(2h - b)`.
pub fn predicted_pinf(nh: &NhVector, branches: usize) -> LaurentPoly1 {
    LaurentPoly1::from_terms(
        nh.values
            .iter()
            .enumerate()
            .map(|(i, c)| (2 * (nh.low + i as i64) - branches as i64, c.clone())),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub name: String,
    pub pinf: LaurentPoly1,
    pub counts: Vec<u128>,
    /// Absent when the catalog has no `n_h` for the germ.
    pub predicted: Option<LaurentPoly1>,
}

impl ConjectureReport {
    pub fn holds(&self) -> Option<bool> {
        self.predicted.as_ref().map(|p| *p == self.pinf)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "pinf": self.pinf,
            "predicted": self.predicted,
            "counts": self.counts,
            "holds": self.holds(),
        })
    }
}

pub fn conjecture_check(m: &SingularityModel, budget: usize) -> Result<ConjectureReport> {
    let w = m.link_braid.as_ref().ok_or_else(|| {
        Error::Invalid(format!(
            "{} has no braid presentation in the catalog",
            m.name
        ))
    })?;
    let pinf = pinf_positive(w, budget)?;
    Ok(ConjectureReport {
        name: m.name.clone(),
        pinf: pinf.poly,
        counts: pinf.counts,
        predicted: m.local_nh().map(|n| predicted_pinf(&n, m.branches)),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBound {
    /// Reconstructed series agrees with the model curve through `q^delta`.
    pub matches_model: bool,
    /// Degree of `(1-q)^b * series` computed through `q^(2 delta + 5)`.
    pub degree: Option<usize>,
    pub ok: bool,
}

/// Rebuilds the local Hilbert series from `n_h` and checks that
/// `(1-q)^b` times it is a polynomial of degree at most `2 delta`.
pub fn degree_bound_check(m: &SingularityModel) -> Option<DegreeBound> {
    let nh = m.local_nh()?;
    let Germ::Ade(t) = m.germ else { return None };
    let order = 2 * m.delta + 5;
    let series = series_from_nh_local(&nh, m.branches, order).expect("local vector");
    let matches_model = series.truncate(m.delta) == model_series(t.model(), m.delta);
    let product = series.mul(&one_minus_q_pow(m.branches as i64, order));
    let degree = product.degree();
    let ok = matches_model
        && product.coeff(0) == BigInt::from(1)
        && degree.is_some_and(|d| d <= 2 * m.delta);
    Some(DegreeBound {
        matches_model,
        degree,
        ok,
    })
}
