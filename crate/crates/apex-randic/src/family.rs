//! The extremal family: k-apex trees (k >= 2) of order n >= 4k-1 whose
//! degrees are all 2 or 3 and which carry exactly two asymmetric edges.
//!
//! Such a graph is a cubic graph with one subdivided edge; its two asymmetric
//! edges both join degrees {2, 3}, so its gap is exactly
//! `C = (1/sqrt(3) - 1/sqrt(2))² = (5 - 2·sqrt(6))/6` and its Randić index is
//! `n/2 - C` — the conjectured maximum over all k-apex trees of that order.
//! This module holds the membership test, the closed-form value, explicit
//! constructions, and the empirical checkers for the two corollaries and the
//! conjecture itself. All strict inequalities are decided by exact sign.

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::apex::apex_number;
use crate::canon::canonical_code;
use crate::enumerate::{k_apex_trees, Guards};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lemmas::gap_constant;
use crate::radical::{RadicalValue, Sign};
use crate::randic::{randic_float, randic_value};

/// `n/2 - (5 - 2·sqrt(6))/6`, exactly. Total in n; whether the family is
/// nonempty at that order is a separate question.
pub fn extremal_value(n: i64) -> RadicalValue {
    RadicalValue::from_rational(BigRational::new(n.into(), 2.into())).sub(gap_constant())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MembershipVerdict {
    Member,
    OrderTooSmall,
    NotConnected,
    BadDegrees,
    WrongAsymmetricCount,
    WrongApexNumber,
}

/// Outcome of the membership test, with the first failed condition when the
/// graph is not a member.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyMembership {
    pub graph6: String,
    pub n: usize,
    pub k: usize,
    pub degrees_ok: bool,
    pub asym_count: usize,
    pub apex_k: Option<usize>,
    pub verdict: MembershipVerdict,
    /// exact `R(g) == extremal_value(n)`; recorded for members as a
    /// consistency assertion
    pub randic_matches_formula: Option<bool>,
}

/// Checks, in order: order >= 4k-1, connectivity, degrees ⊆ {2,3}, exactly
/// two asymmetric edges, apex number exactly k. Requires k >= 2.
pub fn family_membership(g: &Graph, k: usize) -> Result<FamilyMembership> {
    if k < 2 {
        return Err(Error::Domain("the family is defined for k >= 2".into()));
    }
    let spectrum = g.degree_pair_spectrum();
    let degrees_ok = g.vertices().all(|v| matches!(g.degree(v), 2 | 3));
    let asym_count = spectrum.asymmetric_edges();
    let mut out = FamilyMembership {
        graph6: canonical_code(g).as_graph6().to_string(),
        n: g.n(),
        k,
        degrees_ok,
        asym_count,
        apex_k: None,
        verdict: MembershipVerdict::Member,
        randic_matches_formula: None,
    };
    if g.n() < 4 * k - 1 {
        out.verdict = MembershipVerdict::OrderTooSmall;
        return Ok(out);
    }
    if !g.is_connected() {
        out.verdict = MembershipVerdict::NotConnected;
        return Ok(out);
    }
    if !degrees_ok {
        out.verdict = MembershipVerdict::BadDegrees;
        return Ok(out);
    }
    if asym_count != 2 {
        out.verdict = MembershipVerdict::WrongAsymmetricCount;
        return Ok(out);
    }
    let apex = apex_number(g)?.k;
    out.apex_k = Some(apex);
    if apex != k {
        out.verdict = MembershipVerdict::WrongApexNumber;
        return Ok(out);
    }
    let matches = randic_value(g) == extremal_value(g.n() as i64);
    out.randic_matches_formula = Some(matches);
    Ok(out)
}

/// Fast membership for graphs already known to be k-apex trees of order
/// n >= 4k-1 (the enumeration streams).
fn member_given_apex(g: &Graph) -> bool {
    g.vertices().all(|v| matches!(g.degree(v), 2 | 3))
        && g.degree_pair_spectrum().asymmetric_edges() == 2
}

#[derive(Clone, Debug)]
pub enum ConstructOutcome {
    Found(Graph),
    NotFound { searched: String },
}

/// Cubic graphs up to 14 vertices used as subdivision bases, ordered by
/// order then name.
fn cubic_catalog() -> Vec<(&'static str, Graph)> {
    vec![
        ("K4", Graph::complete(4).unwrap()),
        ("K3,3", Graph::complete_bipartite(3, 3).unwrap()),
        ("prism", Graph::circular_ladder(3).unwrap()),
        ("cube", Graph::circular_ladder(4).unwrap()),
        ("wagner", Graph::moebius_ladder(4).unwrap()),
        ("petersen", Graph::petersen()),
        ("cl5", Graph::circular_ladder(5).unwrap()),
        ("ml5", Graph::moebius_ladder(5).unwrap()),
        ("cl6", Graph::circular_ladder(6).unwrap()),
        ("ml6", Graph::moebius_ladder(6).unwrap()),
        ("heawood", Graph::heawood()),
        ("cl7", Graph::circular_ladder(7).unwrap()),
        ("ml7", Graph::moebius_ladder(7).unwrap()),
    ]
}

/// Find a family member for (k, n), or report what was searched.
///
/// k = 2 has the parametric answer K4 with one edge subdivided n-4 times;
/// for k >= 3 every catalog cubic base gets each of its edges subdivided to
/// order n and the result is membership-tested (the test recomputes the apex
/// number, so nothing is assumed about the base). A NotFound is a result,
/// not an error.
pub fn construct_member(k: usize, n: usize, guards: &Guards) -> Result<ConstructOutcome> {
    if k < 2 {
        return Err(Error::Domain("the family is defined for k >= 2".into()));
    }
    if n < 4 * k - 1 {
        return Err(Error::Domain(format!(
            "family members need order n >= 4k - 1 = {}",
            4 * k - 1
        )));
    }
    if k == 2 {
        let g = Graph::complete(4).unwrap().subdivide_edge(2, 3, n - 4)?;
        let membership = family_membership(&g, 2)?;
        if membership.verdict != MembershipVerdict::Member {
            return Err(Error::Internal(format!(
                "subdivided K4 failed membership at n = {n}: {:?}",
                membership.verdict
            )));
        }
        return Ok(ConstructOutcome::Found(g));
    }
    let mut tried = 0usize;
    for (name, base) in cubic_catalog() {
        if base.n() >= n {
            continue;
        }
        let times = n - base.n();
        for (u, v) in base.edges().collect::<Vec<_>>() {
            let g = base.subdivide_edge(u, v, times)?;
            tried += 1;
            if family_membership(&g, k)?.verdict == MembershipVerdict::Member {
                let _ = name;
                return Ok(ConstructOutcome::Found(g));
            }
        }
    }
    // fallback: exhaustive scan when the order is within the guard
    if n <= guards.max_n || guards.allow_large {
        if let Ok(stream) = k_apex_trees(k, n, guards) {
            for g in stream {
                tried += 1;
                if member_given_apex(&g) {
                    return Ok(ConstructOutcome::Found(g));
                }
            }
            return Ok(ConstructOutcome::NotFound {
                searched: format!(
                    "{tried} candidates: cubic catalog (13 bases <= 14 vertices) and the full \
                     {k}-apex enumeration at n = {n}"
                ),
            });
        }
    }
    Ok(ConstructOutcome::NotFound {
        searched: format!(
            "{tried} candidates from the cubic catalog (13 bases <= 14 vertices); exhaustive \
             {k}-apex enumeration at n = {n} is outside the guard"
        ),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ExactDecimal {
    pub exact: String,
    pub decimal: String,
}

impl ExactDecimal {
    pub fn of(v: &RadicalValue) -> Self {
        ExactDecimal {
            exact: v.to_string(),
            decimal: v.decimal(12),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ViolationEntry {
    pub graph6: String,
    pub value: ExactDecimal,
}

/// Outcome of one empirical claim audit over an enumerated range.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub params: String,
    pub scanned: usize,
    pub qualifying: usize,
    pub holds: bool,
    pub violations: Vec<ViolationEntry>,
    /// largest Randić value among qualifying graphs, if any qualified
    pub extreme: Option<ViolationEntry>,
    pub notes: Vec<String>,
}

struct ScanRow {
    key_graph6: String,
    value: RadicalValue,
    float: f64,
    member: bool,
    asym_count: usize,
    max_gap: usize,
    min_gap_asym: usize,
}

fn scan_rows(k: usize, n: usize, guards: &Guards) -> Result<Vec<ScanRow>> {
    let graphs: Vec<Graph> = k_apex_trees(k, n, guards)?.collect();
    Ok(graphs
        .par_iter()
        .map(|g| {
            let spectrum = g.degree_pair_spectrum();
            let gaps: Vec<usize> = spectrum
                .iter()
                .filter(|&((a, b), _)| a != b)
                .map(|((a, b), _)| b - a)
                .collect();
            ScanRow {
                key_graph6: canonical_code(g).as_graph6().to_string(),
                value: randic_value(g),
                float: randic_float(g),
                member: g.n() >= 4 * k - 1 && member_given_apex(g),
                asym_count: spectrum.asymmetric_edges(),
                max_gap: gaps.iter().copied().max().unwrap_or(0),
                min_gap_asym: gaps.iter().copied().min().unwrap_or(0),
            }
        })
        .collect())
}

/// Scan all k-apex trees of order n that have at least one asymmetric edge
/// of degree gap >= 2 ("not almost equal") and check the strict inequality
/// R(G) < extremal_value(n).
pub fn check_corollary_gap2(k: usize, n: usize, guards: &Guards) -> Result<VerificationReport> {
    let rows = scan_rows(k, n, guards)?;
    let bound = extremal_value(n as i64);
    let mut qualifying = 0usize;
    let mut violations = Vec::new();
    let mut extreme: Option<&ScanRow> = None;
    for row in &rows {
        if row.max_gap < 2 {
            continue;
        }
        qualifying += 1;
        if extreme.is_none_or(|e| row.value.cmp_value(&e.value) == std::cmp::Ordering::Greater) {
            extreme = Some(row);
        }
        if row.value.sub(&bound).sign() != Sign::Negative {
            violations.push(ViolationEntry {
                graph6: row.key_graph6.clone(),
                value: ExactDecimal::of(&row.value),
            });
        }
    }
    Ok(VerificationReport {
        claim: "corollary1".into(),
        params: format!("k={k}, n={n}"),
        scanned: rows.len(),
        qualifying,
        holds: violations.is_empty(),
        violations,
        extreme: extreme.map(|r| ViolationEntry {
            graph6: r.key_graph6.clone(),
            value: ExactDecimal::of(&r.value),
        }),
        notes: vec![
            "\"not almost equal\" read as degree gap >= 2 on some asymmetric edge".into(),
        ],
    })
}

/// Scan all k-apex trees of order n whose asymmetric edges all have degree
/// gap exactly 1 and number at least 2m-2 (2 <= m <= k+2), excluding exact
/// family members, and check R(G) < extremal_value(n).
pub fn check_corollary_many_asym(
    k: usize,
    n: usize,
    m: usize,
    guards: &Guards,
) -> Result<VerificationReport> {
    if !(2..=k + 2).contains(&m) {
        return Err(Error::Domain(format!(
            "m = {m} outside the stated range [2, k+2] = [2, {}]",
            k + 2
        )));
    }
    let rows = scan_rows(k, n, guards)?;
    let bound = extremal_value(n as i64);
    let mut qualifying = 0usize;
    let mut violations = Vec::new();
    let mut extreme: Option<&ScanRow> = None;
    for row in &rows {
        let all_gap_one = row.asym_count > 0 && row.min_gap_asym == 1 && row.max_gap == 1;
        if !all_gap_one || row.asym_count < 2 * m - 2 || row.member {
            continue;
        }
        qualifying += 1;
        if extreme.is_none_or(|e| row.value.cmp_value(&e.value) == std::cmp::Ordering::Greater) {
            extreme = Some(row);
        }
        if row.value.sub(&bound).sign() != Sign::Negative {
            violations.push(ViolationEntry {
                graph6: row.key_graph6.clone(),
                value: ExactDecimal::of(&row.value),
            });
        }
    }
    Ok(VerificationReport {
        claim: "corollary2".into(),
        params: format!("k={k}, n={n}, m={m}"),
        scanned: rows.len(),
        qualifying,
        holds: violations.is_empty(),
        violations,
        extreme: extreme.map(|r| ViolationEntry {
            graph6: r.key_graph6.clone(),
            value: ExactDecimal::of(&r.value),
        }),
        notes: vec![
            "\"almost equal\" read as degree gap exactly 1 on every asymmetric edge".into(),
            "exact family members excluded by hypothesis (they attain the bound)".into(),
            "stated range 2 <= m <= k+2 conflicts with the m >= 4 domain of the supporting \
             inequality; the stated range is accepted"
                .into(),
        ],
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub kind: String,
    pub graph6: String,
    pub value: ExactDecimal,
}

#[derive(Clone, Debug, Serialize)]
pub struct FloatCrossCheck {
    pub float_max: f64,
    pub within_tolerance: bool,
    pub argmax_matches: bool,
}

/// Exhaustive conjecture audit at one (k, n): exact maximum of R over all
/// k-apex trees of order n, full maximizer set, comparison against the
/// closed form and against the family-membership set, plus an independent
/// floating-point cross-check.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub k: usize,
    pub n: usize,
    pub scanned: usize,
    pub max_value: ExactDecimal,
    pub maximizers: Vec<String>,
    pub extremal_value: ExactDecimal,
    pub family_members: Vec<String>,
    pub family_empty: bool,
    pub conjecture_holds: bool,
    pub float_check: FloatCrossCheck,
    pub counterexamples: Vec<Counterexample>,
}

pub fn verify_conjecture(k: usize, n: usize, guards: &Guards) -> Result<ConjectureReport> {
    if k < 2 {
        return Err(Error::Domain("the conjecture concerns k >= 2".into()));
    }
    if n < 4 * k - 1 {
        return Err(Error::Domain(format!(
            "n = {n} is outside the conjecture's scope n >= 4k - 1 = {}",
            4 * k - 1
        )));
    }
    let rows = scan_rows(k, n, guards)?;
    if rows.is_empty() {
        return Err(Error::Domain(format!("no {k}-apex trees of order {n} exist")));
    }
    let bound = extremal_value(n as i64);

    let mut max = &rows[0].value;
    for row in &rows[1..] {
        if row.value.cmp_value(max) == std::cmp::Ordering::Greater {
            max = &row.value;
        }
    }
    let max = max.clone();
    let maximizers: Vec<String> = rows
        .iter()
        .filter(|r| r.value == max)
        .map(|r| r.key_graph6.clone())
        .collect();
    let family_members: Vec<String> = rows
        .iter()
        .filter(|r| r.member)
        .map(|r| r.key_graph6.clone())
        .collect();

    // independent float route
    let float_max = rows.iter().map(|r| r.float).fold(f64::NEG_INFINITY, f64::max);
    let float_argmax: Vec<String> = rows
        .iter()
        .filter(|r| r.float >= float_max - 1e-9)
        .map(|r| r.key_graph6.clone())
        .collect();
    let exact_max_f64: f64 = max.decimal(15).parse().unwrap();
    let float_check = FloatCrossCheck {
        float_max,
        within_tolerance: (float_max - exact_max_f64).abs() <= 1e-9,
        argmax_matches: float_argmax == maximizers,
    };

    let mut counterexamples = Vec::new();
    for row in &rows {
        match row.value.sub(&bound).sign() {
            Sign::Positive => counterexamples.push(Counterexample {
                kind: "exceeds_bound".into(),
                graph6: row.key_graph6.clone(),
                value: ExactDecimal::of(&row.value),
            }),
            Sign::Zero if !row.member => counterexamples.push(Counterexample {
                kind: "equality_outside_family".into(),
                graph6: row.key_graph6.clone(),
                value: ExactDecimal::of(&row.value),
            }),
            _ => {}
        }
    }

    let family_empty = family_members.is_empty();
    let conjecture_holds = if family_empty {
        // no member can attain the bound, so the maximum must stay strictly below
        max.sub(&bound).sign() == Sign::Negative
    } else {
        max == bound && maximizers == family_members
    };

    Ok(ConjectureReport {
        k,
        n,
        scanned: rows.len(),
        max_value: ExactDecimal::of(&max),
        maximizers,
        extremal_value: ExactDecimal::of(&bound),
        family_members,
        family_empty,
        conjecture_holds,
        float_check,
        counterexamples,
    })
}

/// One row of the scan-plot output.
#[derive(Clone, Debug, Serialize)]
pub struct ScanPlotRow {
    pub n: usize,
    pub count: usize,
    pub max_randic: String,
    pub extremal_value: String,
    pub gap_to_bound: String,
    /// "true" / "false" for in-scope orders, "n/a" below 4k-1
    pub conjecture: String,
}

pub fn scan_plot_row(k: usize, n: usize, guards: &Guards) -> Result<ScanPlotRow> {
    let bound = extremal_value(n as i64);
    let rows = scan_rows(k, n, guards)?;
    if rows.is_empty() {
        return Ok(ScanPlotRow {
            n,
            count: 0,
            max_randic: String::new(),
            extremal_value: bound.decimal(12),
            gap_to_bound: String::new(),
            conjecture: "n/a".into(),
        });
    }
    let mut max = &rows[0].value;
    for row in &rows[1..] {
        if row.value.cmp_value(max) == std::cmp::Ordering::Greater {
            max = &row.value;
        }
    }
    let conjecture = if n < 4 * k - 1 {
        "n/a".into()
    } else {
        verify_conjecture(k, n, guards)?.conjecture_holds.to_string()
    };
    Ok(ScanPlotRow {
        n,
        count: rows.len(),
        max_randic: max.decimal(12),
        extremal_value: bound.decimal(12),
        gap_to_bound: bound.sub(max).decimal(12),
        conjecture,
    })
}
