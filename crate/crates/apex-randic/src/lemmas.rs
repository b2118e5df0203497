//! Scalar lemma functions and their grid audits.
//!
//! Five one- and two-parameter functions built from `1/sqrt(x)` differences
//! come with claimed monotonicity or positivity. The auditor evaluates them
//! exactly on rational grids and decides every claimed sign with
//! [`RadicalValue::sign`]; a failed claim is a reported finding with a
//! witness, never an error. Some of the claims do fail — see the audits.
//!
//! The constant `C = (1/sqrt(3) - 1/sqrt(2))² = 5/6 - (1/3)·sqrt(6)` appears
//! in L4–L6 and is also the extremal-family gap constant.

use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::radical::{big_ratio, RadicalValue, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LemmaId {
    /// f(x) = (1/√x - 1/√a)², x > a > 0 — claimed increasing in x.
    L2,
    /// f(x) = (1/√(x+1) - 1/√x)², x > 0 — claimed decreasing.
    L3,
    /// f(x) = (1/√x - 1/√a)² - C, integer a ≥ 2, x ≥ a+2 — claimed
    /// increasing and positive for x ≥ 4.
    L4,
    /// f(x) = (x-1)(1/√x - 1/√(x-1))² - C, x ≥ 4 — claimed positive.
    L5,
    /// f(x, m) = (x-1)(1/√m - 1/√(m-1))² - C, x ≥ m ≥ 4 — claimed positive.
    L6,
}

impl LemmaId {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "lemma2" | "l2" | "L2" => Some(LemmaId::L2),
            "lemma3" | "l3" | "L3" => Some(LemmaId::L3),
            "lemma4" | "l4" | "L4" => Some(LemmaId::L4),
            "lemma5" | "l5" | "L5" => Some(LemmaId::L5),
            "lemma6" | "l6" | "L6" => Some(LemmaId::L6),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            LemmaId::L2 => "lemma2",
            LemmaId::L3 => "lemma3",
            LemmaId::L4 => "lemma4",
            LemmaId::L5 => "lemma5",
            LemmaId::L6 => "lemma6",
        }
    }
}

/// Evaluation point: `x` plus the second parameter where the lemma has one
/// (`a` for L2/L4, `m` for L6).
#[derive(Clone, Debug)]
pub struct LemmaPoint {
    pub x: BigRational,
    pub second: Option<BigRational>,
}

impl LemmaPoint {
    pub fn x(x: BigRational) -> Self {
        LemmaPoint { x, second: None }
    }

    pub fn xa(x: BigRational, a: BigRational) -> Self {
        LemmaPoint { x, second: Some(a) }
    }

    fn describe(&self, id: LemmaId) -> String {
        match (&self.second, id) {
            (Some(a), LemmaId::L6) => format!("x={}, m={}", self.x, a),
            (Some(a), _) => format!("x={}, a={}", self.x, a),
            (None, _) => format!("x={}", self.x),
        }
    }
}

/// `C = (1/sqrt(3) - 1/sqrt(2))²`, expanded once.
pub fn gap_constant() -> &'static RadicalValue {
    static C: OnceLock<RadicalValue> = OnceLock::new();
    C.get_or_init(|| {
        let d = RadicalValue::inv_sqrt(3)
            .unwrap()
            .sub(&RadicalValue::inv_sqrt(2).unwrap());
        d.mul(&d)
    })
}

fn inv_sqrt_diff_squared(x: &BigRational, y: &BigRational) -> Result<RadicalValue> {
    let d = RadicalValue::inv_sqrt_rational(x)?.sub(&RadicalValue::inv_sqrt_rational(y)?);
    Ok(d.mul(&d))
}

/// Exact value of the lemma function at a rational point. Out-of-domain
/// points are rejected.
pub fn lemma_function(id: LemmaId, point: &LemmaPoint) -> Result<RadicalValue> {
    let x = &point.x;
    let dom = |msg: &str| Err(Error::Domain(format!("{}: {msg}", id.name())));
    match id {
        LemmaId::L2 => {
            let a = point.second.as_ref().ok_or_else(|| {
                Error::Usage("lemma2 needs a second parameter a".into())
            })?;
            if !a.is_positive() || x <= a {
                return dom("requires x > a > 0");
            }
            inv_sqrt_diff_squared(x, a)
        }
        LemmaId::L3 => {
            if !x.is_positive() {
                return dom("requires x > 0");
            }
            let x1 = x + BigRational::one();
            inv_sqrt_diff_squared(&x1, x)
        }
        LemmaId::L4 => {
            let a = point.second.as_ref().ok_or_else(|| {
                Error::Usage("lemma4 needs a second parameter a".into())
            })?;
            if !a.is_integer() || *a < big_ratio(2, 1) {
                return dom("requires integer a >= 2");
            }
            if *x < a + big_ratio(2, 1) {
                return dom("requires x >= a + 2");
            }
            Ok(inv_sqrt_diff_squared(x, a)?.sub(gap_constant()))
        }
        LemmaId::L5 => {
            if *x < big_ratio(4, 1) {
                return dom("requires x >= 4");
            }
            let xm1 = x - BigRational::one();
            let sq = inv_sqrt_diff_squared(x, &xm1)?;
            Ok(sq.scale(&xm1).sub(gap_constant()))
        }
        LemmaId::L6 => {
            let m = point.second.as_ref().ok_or_else(|| {
                Error::Usage("lemma6 needs a second parameter m".into())
            })?;
            if *m < big_ratio(4, 1) || x < m {
                return dom("requires x >= m >= 4");
            }
            let mm1 = m - BigRational::one();
            let sq = inv_sqrt_diff_squared(m, &mm1)?;
            let xm1 = x - BigRational::one();
            Ok(sq.scale(&xm1).sub(gap_constant()))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimKind {
    Positive,
    Increasing,
    Decreasing,
}

/// One audited claim: holds on the whole grid, or fails with the first
/// witness, its exact value and its sign.
#[derive(Clone, Debug, Serialize)]
pub struct ClaimAudit {
    pub kind: ClaimKind,
    pub verdict: &'static str,
    pub checked: usize,
    pub witness: Option<String>,
    pub value_exact: Option<String>,
    pub value_decimal: Option<String>,
}

impl ClaimAudit {
    pub fn holds(&self) -> bool {
        self.verdict == "holds-on-grid"
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaAudit {
    pub lemma: &'static str,
    pub grid: String,
    pub claims: Vec<ClaimAudit>,
}

impl LemmaAudit {
    pub fn all_hold(&self) -> bool {
        self.claims.iter().all(|c| c.holds())
    }
}

/// Rational grid `start, start+step, ..., <= end`.
#[derive(Clone, Debug)]
pub struct GridRange {
    pub start: BigRational,
    pub end: BigRational,
    pub step: BigRational,
}

impl GridRange {
    pub fn integers(start: i64, end: i64) -> Self {
        GridRange {
            start: big_ratio(start, 1),
            end: big_ratio(end, 1),
            step: big_ratio(1, 1),
        }
    }

    pub fn points(&self) -> Vec<BigRational> {
        let mut out = Vec::new();
        let mut x = self.start.clone();
        while x <= self.end {
            out.push(x.clone());
            x += &self.step;
        }
        out
    }
}

impl std::fmt::Display for GridRange {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.step.is_one() {
            write!(f, "{}..{}", self.start, self.end)
        } else {
            write!(f, "{}..{}:{}", self.start, self.end, self.step)
        }
    }
}

/// Grid audit of one lemma. `x_grid` drives the main variable; the secondary
/// parameter, where there is one, runs over its default range (`a` in 1..10
/// for L2, `a` in 2..4 for L4, `m` in 4..x for L6).
pub fn audit_lemma(id: LemmaId, x_grid: &GridRange) -> Result<LemmaAudit> {
    let claims = match id {
        LemmaId::L2 => vec![ClaimKind::Increasing],
        LemmaId::L3 => vec![ClaimKind::Decreasing],
        LemmaId::L4 => vec![ClaimKind::Increasing, ClaimKind::Positive],
        LemmaId::L5 | LemmaId::L6 => vec![ClaimKind::Positive],
    };

    // (series of points) per secondary-parameter value; monotonicity is
    // checked along each series, positivity at every point
    let series: Vec<Vec<LemmaPoint>> = match id {
        LemmaId::L2 => (1..=10)
            .map(|a| {
                let a = big_ratio(a, 1);
                x_grid
                    .points()
                    .into_iter()
                    .filter(|x| *x > a)
                    .map(|x| LemmaPoint::xa(x, a.clone()))
                    .collect()
            })
            .collect(),
        LemmaId::L3 => vec![x_grid
            .points()
            .into_iter()
            .filter(|x| x.is_positive())
            .map(LemmaPoint::x)
            .collect()],
        LemmaId::L4 => (2..=4)
            .map(|a| {
                let a = big_ratio(a, 1);
                let lo = &a + big_ratio(2, 1);
                x_grid
                    .points()
                    .into_iter()
                    .filter(|x| *x >= lo)
                    .map(|x| LemmaPoint::xa(x, a.clone()))
                    .collect()
            })
            .collect(),
        LemmaId::L5 => vec![x_grid
            .points()
            .into_iter()
            .filter(|x| *x >= big_ratio(4, 1))
            .map(LemmaPoint::x)
            .collect()],
        LemmaId::L6 => {
            let xs: Vec<_> = x_grid
                .points()
                .into_iter()
                .filter(|x| *x >= big_ratio(4, 1))
                .collect();
            // one series per m, x running over grid points >= m
            xs.clone()
                .into_iter()
                .map(|m| {
                    xs.iter()
                        .filter(|x| **x >= m)
                        .map(|x| LemmaPoint::xa(x.clone(), m.clone()))
                        .collect()
                })
                .collect()
        }
    };

    let mut audits = Vec::new();
    for kind in claims {
        let mut checked = 0usize;
        let mut witness: Option<(String, RadicalValue)> = None;
        'series: for s in &series {
            match kind {
                ClaimKind::Positive => {
                    for p in s {
                        let v = lemma_function(id, p)?;
                        checked += 1;
                        if v.sign() != Sign::Positive {
                            witness = Some((p.describe(id), v));
                            break 'series;
                        }
                    }
                }
                ClaimKind::Increasing | ClaimKind::Decreasing => {
                    for w in s.windows(2) {
                        let d = lemma_function(id, &w[1])?.sub(&lemma_function(id, &w[0])?);
                        checked += 1;
                        let want = if kind == ClaimKind::Increasing {
                            Sign::Positive
                        } else {
                            Sign::Negative
                        };
                        if d.sign() != want {
                            witness = Some((
                                format!("{} -> {}", w[0].describe(id), w[1].describe(id)),
                                d,
                            ));
                            break 'series;
                        }
                    }
                }
            }
        }
        audits.push(match witness {
            None => ClaimAudit {
                kind,
                verdict: "holds-on-grid",
                checked,
                witness: None,
                value_exact: None,
                value_decimal: None,
            },
            Some((point, v)) => ClaimAudit {
                kind,
                verdict: "fails",
                checked,
                witness: Some(point),
                value_exact: Some(v.to_string()),
                value_decimal: Some(v.decimal(12)),
            },
        });
    }

    Ok(LemmaAudit {
        lemma: id.name(),
        grid: x_grid.to_string(),
        claims: audits,
    })
}

/// Default x-grid used by the CLI when none is given.
pub fn default_grid(id: LemmaId) -> GridRange {
    match id {
        LemmaId::L2 => GridRange::integers(1, 60),
        LemmaId::L3 => GridRange::integers(1, 100),
        LemmaId::L4 => GridRange::integers(4, 30),
        LemmaId::L5 | LemmaId::L6 => GridRange::integers(4, 30),
    }
}
