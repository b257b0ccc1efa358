//! Cross-validation harness: the enumeration oracle, the series
//! expansions, and the closed forms are checked against each other and
//! against embedded published sequence prefixes. The report also documents
//! two discrepancies in the source material's printed formulas, confirmed
//! computationally.

use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::series;
use crate::stats::{self, StatKind};
use crate::words;

/// Default exhaustive scope for triangle cross-checks.
pub const DEFAULT_TRIANGLE_SCOPE: usize = 12;
/// Default scope for total-sequence checks (no enumeration involved).
pub const DEFAULT_TOTALS_SCOPE: usize = 14;

// Sequence prefixes as displayed in the source material, identified by
// their OEIS numbers. No network access: these are vendored constants.
const A007051_COUNTS: [u64; 10] = [1, 2, 5, 14, 41, 122, 365, 1094, 3281, 9842];
const A056241_RUNS_ROWS: [&[u64]; 8] = [
    &[1],
    &[1, 1],
    &[1, 3, 1],
    &[1, 6, 6, 1],
    &[1, 10, 19, 10, 1],
    &[1, 15, 45, 45, 15, 1],
    &[1, 21, 90, 141, 90, 21, 1],
    &[1, 28, 161, 357, 357, 161, 28, 1],
];
// v_2(n, 0) for n = 4.. (first column of the 2-valley triangle)
const A052963_V2_COL0: [u64; 7] = [14, 40, 115, 331, 953, 2744, 7901];
// v(n, 0) for n = 1..
const A005183_V_COL0: [u64; 9] = [1, 2, 5, 13, 33, 81, 193, 449, 1025];
// v(n) for n = 4..
const A212337_V_TOTALS: [u64; 10] = [1, 8, 42, 184, 731, 2736, 9844, 34448, 118101, 398584];
// p_1(n, 0) for n = 1..
const A055588_P1_COL0: [u64; 9] = [1, 2, 4, 9, 22, 56, 145, 378, 988];
// p(n) for n = 3..; the printed listing duplicates 14760, so the embedded
// prefix keeps the printed terms with the duplicate dropped
const A261064_P_TOTALS: [u64; 9] = [1, 6, 26, 100, 363, 1274, 4372, 14760, 49205];
const P_TOTALS_AS_PRINTED: [u64; 10] = [1, 6, 26, 100, 363, 1274, 4372, 14760, 14760, 49205];
// t(n, 0) and t(n, 1) for n = 1..
const A369328_T_COL0: [u64; 8] = [1, 2, 4, 9, 23, 63, 176, 491];
const A290900_T_COL1: [u64; 8] = [0, 0, 1, 5, 17, 51, 149, 439];

/// First disagreement found by a check: where, what was expected (the
/// reference route), and what came out (the route under test).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub expected: String,
    pub got: String,
}

/// A single pass/fail entry of the report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub scope: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

/// A documented discrepancy in the source material, confirmed by
/// computation. Confirmed errata do not make a report red.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Erratum {
    pub id: String,
    pub detail: String,
    pub confirmed: bool,
}

/// The outcome of a verification run: checks sorted by id, plus errata.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub checks: Vec<Check>,
    pub errata: Vec<Erratum>,
}

impl CheckReport {
    /// Green means every check passed and every documented erratum was
    /// actually confirmed by the computation.
    pub fn is_green(&self) -> bool {
        self.checks.iter().all(|c| c.passed) && self.errata.iter().all(|e| e.confirmed)
    }

    fn finish(mut self) -> Self {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
        self.errata.sort_by(|a, b| a.id.cmp(&b.id));
        self
    }

    fn merge(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
        self.errata.extend(other.errata);
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("serializable report");
        text.push('\n');
        text
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let passed = self.checks.iter().filter(|c| c.passed).count();
        writeln!(out, "checks: {passed}/{} passed", self.checks.len()).expect("string write");
        for check in &self.checks {
            let verdict = if check.passed { "PASS" } else { "FAIL" };
            writeln!(out, "{verdict} {} ({})", check.id, check.scope).expect("string write");
            if let Some(ce) = &check.counterexample {
                let at = match ce.k {
                    Some(k) => format!("n={}, k={k}", ce.n),
                    None => format!("n={}", ce.n),
                };
                writeln!(
                    out,
                    "     at {at}: expected {}, got {}",
                    ce.expected, ce.got
                )
                .expect("string write");
            }
        }
        if !self.errata.is_empty() {
            writeln!(out, "errata (documented source discrepancies):").expect("string write");
            for erratum in &self.errata {
                let mark = if erratum.confirmed {
                    "CONFIRMED"
                } else {
                    "UNCONFIRMED"
                };
                writeln!(out, "{mark} {}: {}", erratum.id, erratum.detail).expect("string write");
            }
        }
        writeln!(
            out,
            "summary: {}",
            if self.is_green() { "GREEN" } else { "RED" }
        )
        .expect("string write");
        out
    }
}

fn check(id: String, scope: String, counterexample: Option<Counterexample>) -> Check {
    Check {
        id,
        scope,
        passed: counterexample.is_none(),
        counterexample,
    }
}

/// Cross-checks one statistic for all lengths up to `max_n`: enumeration
/// distribution against the expanded triangle, row sums against the word
/// count, triangle totals against the closed form and the total-sequence
/// expansion, and per-cell closed forms where published ones exist.
pub fn cross_check(kind: StatKind, max_n: usize) -> CheckReport {
    assert!(
        max_n <= words::DEFAULT_EXHAUSTIVE_CAP,
        "cross_check enumerates exhaustively; max_n must stay within the cap"
    );
    let max_k = max_n + 1;
    let tri = series::triangle(kind, max_n, max_k);
    let seq = series::total_sequence(kind, max_n);
    let scope = format!("n <= {max_n}");
    let mut report = CheckReport::default();

    let mut enum_vs_triangle = None;
    let mut row_sums = None;
    let mut totals = None;
    let mut cells = None;
    let mut has_cell_formula = false;
    for n in 1..=max_n {
        let dist =
            stats::distribution(n, kind, words::DEFAULT_EXHAUSTIVE_CAP).expect("within the cap");
        for k in 0..=max_k {
            let expected = BigInt::from(dist.count(k));
            if enum_vs_triangle.is_none() && &expected != tri.value(n, k) {
                enum_vs_triangle = Some(Counterexample {
                    n,
                    k: Some(k),
                    expected: expected.to_string(),
                    got: tri.value(n, k).to_string(),
                });
            }
            if cells.is_none() {
                if let Some(formula) = series::closed_form_count(kind, n, k) {
                    has_cell_formula = true;
                    if BigInt::from(formula.clone()) != *tri.value(n, k) {
                        cells = Some(Counterexample {
                            n,
                            k: Some(k),
                            expected: tri.value(n, k).to_string(),
                            got: formula.to_string(),
                        });
                    }
                }
            }
        }
        let count = BigInt::from(words::count_flattened(n));
        if row_sums.is_none() {
            let enum_sum = BigInt::from(dist.sum());
            let tri_sum = tri.row_sum(n);
            if enum_sum != count || tri_sum != count {
                row_sums = Some(Counterexample {
                    n,
                    k: None,
                    expected: count.to_string(),
                    got: format!("enumeration {enum_sum}, triangle {tri_sum}"),
                });
            }
        }
        if totals.is_none() {
            let tri_total = tri.row_total(n);
            let formula = BigInt::from(series::closed_form_total(kind, n));
            if tri_total != formula || tri_total != seq[n] {
                totals = Some(Counterexample {
                    n,
                    k: None,
                    expected: tri_total.to_string(),
                    got: format!("closed form {formula}, total gf {}", seq[n]),
                });
            }
        }
    }
    report.checks.push(check(
        format!("{kind}/enum-vs-triangle"),
        scope.clone(),
        enum_vs_triangle,
    ));
    report
        .checks
        .push(check(format!("{kind}/row-sums"), scope.clone(), row_sums));
    report
        .checks
        .push(check(format!("{kind}/totals"), scope.clone(), totals));
    if has_cell_formula {
        report
            .checks
            .push(check(format!("{kind}/cells-closed-form"), scope, cells));
    }
    report.finish()
}

/// Series-only totals check over a wider range than enumeration allows:
/// triangle row totals, the total-sequence expansion, and the closed form
/// must agree.
pub fn totals_check(kind: StatKind, max_n: usize) -> CheckReport {
    let tri = series::triangle(kind, max_n, max_n + 1);
    let seq = series::total_sequence(kind, max_n);
    let mut bad = None;
    for n in 1..=max_n {
        let tri_total = tri.row_total(n);
        let formula = BigInt::from(series::closed_form_total(kind, n));
        if tri_total != formula || tri_total != seq[n] {
            bad = Some(Counterexample {
                n,
                k: None,
                expected: tri_total.to_string(),
                got: format!("closed form {formula}, total gf {}", seq[n]),
            });
            break;
        }
    }
    CheckReport {
        checks: vec![check(
            format!("{kind}/totals-extended"),
            format!("n <= {max_n}"),
            bad,
        )],
        errata: Vec::new(),
    }
    .finish()
}

fn prefix_check(
    id: &str,
    scope: String,
    expected: &[u64],
    got: impl Iterator<Item = BigInt>,
    first_n: usize,
) -> Check {
    let mut bad = None;
    for (offset, (want, have)) in expected.iter().zip(got).enumerate() {
        if BigInt::from(*want) != have {
            bad = Some(Counterexample {
                n: first_n + offset,
                k: None,
                expected: want.to_string(),
                got: have.to_string(),
            });
            break;
        }
    }
    check(format!("oeis/{id}"), scope, bad)
}

/// Compares computed sequences against the embedded published prefixes.
pub fn oeis_check() -> CheckReport {
    let mut report = CheckReport::default();

    report.checks.push(prefix_check(
        "A007051",
        format!("f(n), n = 1..{}", A007051_COUNTS.len()),
        &A007051_COUNTS,
        (1..=A007051_COUNTS.len()).map(|n| BigInt::from(words::count_flattened(n))),
        1,
    ));

    // the runs triangle read by rows
    let runs = series::triangle(
        StatKind::Runs,
        A056241_RUNS_ROWS.len(),
        A056241_RUNS_ROWS.len(),
    );
    let expected_flat: Vec<u64> = A056241_RUNS_ROWS
        .iter()
        .flat_map(|row| row.iter().copied())
        .collect();
    let got_flat: Vec<BigInt> = (1..=A056241_RUNS_ROWS.len())
        .flat_map(|n| (1..=n).map(move |k| (n, k)))
        .map(|(n, k)| runs.value(n, k).clone())
        .collect();
    report.checks.push(prefix_check(
        "A056241",
        format!("runs triangle by rows, n = 1..{}", A056241_RUNS_ROWS.len()),
        &expected_flat,
        got_flat.into_iter(),
        1,
    ));

    let v2 = series::triangle(StatKind::EllValleys(2), 3 + A052963_V2_COL0.len(), 1);
    report.checks.push(prefix_check(
        "A052963",
        format!("2-val(n,0), n = 4..{}", 3 + A052963_V2_COL0.len()),
        &A052963_V2_COL0,
        (4..=3 + A052963_V2_COL0.len()).map(|n| v2.value(n, 0).clone()),
        4,
    ));

    let v = series::triangle(StatKind::Valleys, A005183_V_COL0.len(), 1);
    report.checks.push(prefix_check(
        "A005183",
        format!("val(n,0), n = 1..{}", A005183_V_COL0.len()),
        &A005183_V_COL0,
        (1..=A005183_V_COL0.len()).map(|n| v.value(n, 0).clone()),
        1,
    ));

    let v_totals = series::total_sequence(StatKind::Valleys, 3 + A212337_V_TOTALS.len());
    report.checks.push(prefix_check(
        "A212337",
        format!("val totals, n = 4..{}", 3 + A212337_V_TOTALS.len()),
        &A212337_V_TOTALS,
        v_totals[4..].iter().cloned(),
        4,
    ));

    let p1 = series::triangle(StatKind::EllPeaks(1), A055588_P1_COL0.len(), 1);
    report.checks.push(prefix_check(
        "A055588",
        format!("1-peak(n,0), n = 1..{}", A055588_P1_COL0.len()),
        &A055588_P1_COL0,
        (1..=A055588_P1_COL0.len()).map(|n| p1.value(n, 0).clone()),
        1,
    ));

    let p_totals = series::total_sequence(StatKind::Peaks, 2 + A261064_P_TOTALS.len());
    report.checks.push(prefix_check(
        "A261064",
        format!("peak totals, n = 3..{}", 2 + A261064_P_TOTALS.len()),
        &A261064_P_TOTALS,
        p_totals[3..].iter().cloned(),
        3,
    ));

    let t = series::triangle(StatKind::SymmetricPeaks, A369328_T_COL0.len(), 2);
    report.checks.push(prefix_check(
        "A369328",
        format!("symp(n,0), n = 1..{}", A369328_T_COL0.len()),
        &A369328_T_COL0,
        (1..=A369328_T_COL0.len()).map(|n| t.value(n, 0).clone()),
        1,
    ));
    report.checks.push(prefix_check(
        "A290900",
        format!("symp(n,1), n = 1..{}", A290900_T_COL1.len()),
        &A290900_T_COL1,
        (1..=A290900_T_COL1.len()).map(|n| t.value(n, 1).clone()),
        1,
    ));

    report.finish()
}

/// The two discrepancies between the printed material and the exact
/// computation, each re-confirmed from scratch. Anything else failing to
/// confirm would surface as `confirmed: false` and redden the report.
fn errata() -> Vec<Erratum> {
    // 1. The printed ℓ-valley total uses 3^(n−2ℓ) where the generating
    //    function forces 3^(n−ℓ−2). Confirm: the corrected form matches
    //    the triangle totals everywhere in scope, and the printed variant
    //    disagrees somewhere.
    let mut corrected_ok = true;
    let mut printed_diverges_at = None;
    for l in 1..=3usize {
        let tri = series::triangle(StatKind::EllValleys(l), 12, 13);
        for n in 1..=12 {
            let actual = tri.row_total(n);
            if actual != BigInt::from(series::closed_form_total(StatKind::EllValleys(l), n)) {
                corrected_ok = false;
            }
            if let Some(printed) = series::ell_valley_total_printed_variant(l, n) {
                if printed_diverges_at.is_none() && BigInt::from(printed.clone()) != actual {
                    printed_diverges_at = Some((l, n, printed, actual.clone()));
                }
            }
        }
    }
    let vl = match (&printed_diverges_at, corrected_ok) {
        (Some((l, n, printed, actual)), true) => Erratum {
            id: "ell-valley-total-exponent".into(),
            detail: format!(
                "printed total for ℓ-valleys uses 3^(n-2ℓ); the generating function \
                 x^(ℓ+3)/((1-x)(1-3x)²) forces 3^(n-ℓ-2): at ℓ={l}, n={n} the printed \
                 form gives {printed}, the actual total is {actual}"
            ),
            confirmed: true,
        },
        _ => Erratum {
            id: "ell-valley-total-exponent".into(),
            detail: "expected divergence between printed and corrected ℓ-valley totals \
                     did not reproduce"
                .into(),
            confirmed: false,
        },
    };

    // 2. The printed peak-total listing repeats 14760; the formula and the
    //    triangle give 49205 at the repeated position.
    let printed = &P_TOTALS_AS_PRINTED;
    let tri = series::triangle(StatKind::Peaks, 12, 13);
    let duplicated = printed[7] == printed[8];
    let proper_prefix = (0..8).all(|i| {
        let n = i + 3;
        BigInt::from(printed[i]) == tri.row_total(n)
            && printed[i]
                == u64::try_from(series::closed_form_total(StatKind::Peaks, n).clone())
                    .unwrap_or(u64::MAX)
    });
    let actual_n11: BigUint = series::closed_form_total(StatKind::Peaks, 11);
    let diverges = BigInt::from(actual_n11.clone()) != BigInt::from(printed[8])
        && tri.row_total(11) == BigInt::from(actual_n11.clone());
    let peaks = if duplicated && proper_prefix && diverges {
        Erratum {
            id: "peak-total-duplicate".into(),
            detail: format!(
                "printed peak totals repeat 14760 at n=10 and n=11; the formula and \
                 the triangle give {actual_n11} at n=11"
            ),
            confirmed: true,
        }
    } else {
        Erratum {
            id: "peak-total-duplicate".into(),
            detail: "expected duplicate in the printed peak totals did not reproduce".into(),
            confirmed: false,
        }
    };

    vec![vl, peaks]
}

/// Runs everything: cross-checks for every statistic (ℓ ∈ {1, 2, 3}),
/// extended totals, the published-prefix comparisons, and the errata
/// confirmations. Deterministic: identical inputs give identical reports.
pub fn full_report() -> CheckReport {
    let mut report = CheckReport::default();
    for kind in StatKind::all(3) {
        report.merge(cross_check(kind, DEFAULT_TRIANGLE_SCOPE));
        report.merge(totals_check(kind, DEFAULT_TOTALS_SCOPE));
    }
    report.merge(oeis_check());
    report.errata.extend(errata());
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn runs_cross_check_is_green() {
        let report = cross_check(StatKind::Runs, 8);
        assert!(report.is_green(), "{}", report.to_text());
        // row 8 of the runs triangle as displayed
        let tri = series::triangle(StatKind::Runs, 8, 8);
        let row: Vec<BigInt> = (1..=8).map(|k| tri.value(8, k).clone()).collect();
        let expected: Vec<BigInt> = [1u64, 28, 161, 357, 357, 161, 28, 1]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(row, expected);
    }

    #[test]
    fn short_peak_cross_check_is_green() {
        let report = cross_check(StatKind::EllPeaks(1), 6);
        assert!(report.is_green(), "{}", report.to_text());
        let tri = series::triangle(StatKind::EllPeaks(1), 6, 2);
        assert_eq!(tri.value(6, 2), &BigInt::from(8));
    }

    #[test]
    fn two_valley_cross_check_confirms_erratum() {
        let report = cross_check(StatKind::EllValleys(2), 10);
        assert!(report.is_green(), "{}", report.to_text());
        let errata = errata();
        assert!(errata
            .iter()
            .any(|e| e.id == "ell-valley-total-exponent" && e.confirmed));
    }

    #[test]
    fn oeis_prefixes_pass() {
        let report = oeis_check();
        assert!(report.is_green(), "{}", report.to_text());
        assert_eq!(report.checks.len(), 9);
    }

    #[test]
    fn totals_check_is_green() {
        for kind in StatKind::all(2) {
            let report = totals_check(kind, 14);
            assert!(report.is_green(), "{}", report.to_text());
        }
    }

    #[test]
    fn report_is_deterministic_and_ordered() {
        let a = oeis_check();
        let b = oeis_check();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.to_text(), b.to_text());
        let ids: Vec<&String> = a.checks.iter().map(|c| &c.id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn errata_are_exactly_two_and_confirmed() {
        let errata = errata();
        assert_eq!(errata.len(), 2);
        assert!(errata.iter().all(|e| e.confirmed), "{errata:?}");
    }
}
