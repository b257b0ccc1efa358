//! The ten statistics on flattened Catalan words and their
//! enumeration-backed distributions (the brute-force route that the series
//! and closed forms are checked against).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::words::{self, Word};

/// One of the ten statistics. The valley and peak families carry a plateau
/// length parameter `ℓ ≥ 1`.
///
/// An ℓ-valley is a factor `a b^ℓ (b+1)` with `a > b`; it is symmetric when
/// `a = b+1`. An ℓ-peak is a factor `a (a+1)^ℓ b` with `a ≥ b`; it is
/// symmetric when `a = b`. Plateaus are maximal, so a given plateau is an
/// ℓ-valley (or ℓ-peak) for exactly one ℓ.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum StatKind {
    /// Maximal strictly increasing factors.
    Runs,
    /// Maximal weakly increasing factors.
    WeakRuns,
    /// Maximal strictly decreasing factors.
    DescentRuns,
    /// Maximal weakly decreasing factors.
    WeakDescentRuns,
    /// Valleys whose bottom plateau has length exactly ℓ.
    EllValleys(usize),
    /// Valleys of any plateau length.
    Valleys,
    /// Valleys `(b+1) b^ℓ (b+1)`.
    SymmetricValleys,
    /// Peaks whose top plateau has length exactly ℓ.
    EllPeaks(usize),
    /// Peaks of any plateau length.
    Peaks,
    /// Peaks `a (a+1)^ℓ a`.
    SymmetricPeaks,
}

/// Errors from statistic-name parsing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StatKindError {
    UnknownStat(String),
    EllRequired(String),
    EllNotApplicable(String),
    EllZero,
}

impl fmt::Display for StatKindError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatKindError::UnknownStat(name) => write!(f, "unknown statistic {name:?}"),
            StatKindError::EllRequired(name) => {
                write!(f, "statistic {name:?} requires --ell")
            }
            StatKindError::EllNotApplicable(name) => {
                write!(f, "statistic {name:?} does not take --ell")
            }
            StatKindError::EllZero => write!(f, "ell must be at least 1"),
        }
    }
}

impl std::error::Error for StatKindError {}

impl StatKind {
    /// Parses a statistic name as used on the command line, attaching the
    /// ℓ parameter where the family needs one.
    pub fn parse(name: &str, ell: Option<usize>) -> Result<StatKind, StatKindError> {
        let kind = match name {
            "runs" => StatKind::Runs,
            "wruns" => StatKind::WeakRuns,
            "druns" => StatKind::DescentRuns,
            "wdruns" => StatKind::WeakDescentRuns,
            "val" => StatKind::Valleys,
            "symv" => StatKind::SymmetricValleys,
            "peak" => StatKind::Peaks,
            "symp" => StatKind::SymmetricPeaks,
            "ell-val" | "ell-peak" => {
                let l = ell.ok_or_else(|| StatKindError::EllRequired(name.to_string()))?;
                if l == 0 {
                    return Err(StatKindError::EllZero);
                }
                return Ok(if name == "ell-val" {
                    StatKind::EllValleys(l)
                } else {
                    StatKind::EllPeaks(l)
                });
            }
            other => return Err(StatKindError::UnknownStat(other.to_string())),
        };
        if ell.is_some() {
            return Err(StatKindError::EllNotApplicable(name.to_string()));
        }
        Ok(kind)
    }

    /// The family name without the ℓ parameter.
    pub fn base_name(&self) -> &'static str {
        match self {
            StatKind::Runs => "runs",
            StatKind::WeakRuns => "wruns",
            StatKind::DescentRuns => "druns",
            StatKind::WeakDescentRuns => "wdruns",
            StatKind::EllValleys(_) => "ell-val",
            StatKind::Valleys => "val",
            StatKind::SymmetricValleys => "symv",
            StatKind::EllPeaks(_) => "ell-peak",
            StatKind::Peaks => "peak",
            StatKind::SymmetricPeaks => "symp",
        }
    }

    /// The ℓ parameter for the indexed families.
    pub fn ell(&self) -> Option<usize> {
        match self {
            StatKind::EllValleys(l) | StatKind::EllPeaks(l) => Some(*l),
            _ => None,
        }
    }

    /// Smallest meaningful statistic value: run counts start at 1, valley
    /// and peak counts at 0. Distribution tables are indexed from here.
    pub fn k_start(&self) -> usize {
        match self {
            StatKind::Runs
            | StatKind::WeakRuns
            | StatKind::DescentRuns
            | StatKind::WeakDescentRuns => 1,
            _ => 0,
        }
    }

    /// All statistics, with ℓ ranging over `1..=max_ell` for the indexed
    /// families, in catalog order.
    pub fn all(max_ell: usize) -> Vec<StatKind> {
        let mut kinds = vec![
            StatKind::Runs,
            StatKind::WeakRuns,
            StatKind::DescentRuns,
            StatKind::WeakDescentRuns,
        ];
        kinds.extend((1..=max_ell).map(StatKind::EllValleys));
        kinds.push(StatKind::Valleys);
        kinds.push(StatKind::SymmetricValleys);
        kinds.extend((1..=max_ell).map(StatKind::EllPeaks));
        kinds.push(StatKind::Peaks);
        kinds.push(StatKind::SymmetricPeaks);
        kinds
    }
}

impl fmt::Display for StatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatKind::EllValleys(l) => write!(f, "{l}-val"),
            StatKind::EllPeaks(l) => write!(f, "{l}-peak"),
            other => write!(f, "{}", other.base_name()),
        }
    }
}

/// A maximal constant block `letters[start..=end]`.
struct Plateau {
    start: usize,
    end: usize,
    value: u32,
}

fn plateaus(a: &[u32]) -> Vec<Plateau> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < a.len() {
        let mut j = i;
        while j + 1 < a.len() && a[j + 1] == a[i] {
            j += 1;
        }
        out.push(Plateau {
            start: i,
            end: j,
            value: a[i],
        });
        i = j + 1;
    }
    out
}

impl Plateau {
    fn len(&self) -> usize {
        self.end - self.start + 1
    }

    /// `prev > value` and `next == value + 1`.
    fn is_valley(&self, a: &[u32]) -> bool {
        self.start > 0
            && self.end + 1 < a.len()
            && a[self.start - 1] > self.value
            && a[self.end + 1] == self.value + 1
    }

    /// `prev == value - 1` and `next < value`.
    fn is_peak(&self, a: &[u32]) -> bool {
        self.start > 0
            && self.end + 1 < a.len()
            && self.value >= 1
            && a[self.start - 1] == self.value - 1
            && a[self.end + 1] < self.value
    }
}

/// Number of occurrences of the statistic in `w`.
///
/// Well defined for any nonempty Catalan word; whether to insist on the
/// flattened property first is the caller's choice.
///
/// ```
/// use flatcat_core::{stats::statistic, StatKind, Word};
///
/// let w: Word = "012230123122".parse().unwrap();
/// assert_eq!(statistic(&w, StatKind::Runs), 5);
/// assert_eq!(statistic(&w, StatKind::WeakRuns), 3);
/// ```
pub fn statistic(w: &Word, kind: StatKind) -> usize {
    let a = w.letters();
    assert!(!a.is_empty(), "statistics are defined on nonempty words");
    let boundary = |p: fn(u32, u32) -> bool| 1 + a.windows(2).filter(|v| p(v[0], v[1])).count();
    match kind {
        StatKind::Runs => boundary(|x, y| x >= y),
        StatKind::WeakRuns => boundary(|x, y| x > y),
        StatKind::DescentRuns => boundary(|x, y| x <= y),
        StatKind::WeakDescentRuns => boundary(|x, y| x < y),
        StatKind::EllValleys(l) => {
            assert!(l >= 1, "ell must be at least 1");
            plateaus(a)
                .iter()
                .filter(|p| p.len() == l && p.is_valley(a))
                .count()
        }
        StatKind::Valleys => plateaus(a).iter().filter(|p| p.is_valley(a)).count(),
        StatKind::SymmetricValleys => plateaus(a)
            .iter()
            .filter(|p| p.is_valley(a) && a[p.start - 1] == p.value + 1)
            .count(),
        StatKind::EllPeaks(l) => {
            assert!(l >= 1, "ell must be at least 1");
            plateaus(a)
                .iter()
                .filter(|p| p.len() == l && p.is_peak(a))
                .count()
        }
        StatKind::Peaks => plateaus(a).iter().filter(|p| p.is_peak(a)).count(),
        StatKind::SymmetricPeaks => plateaus(a)
            .iter()
            .filter(|p| p.is_peak(a) && a[p.end + 1] + 1 == p.value)
            .count(),
    }
}

/// Errors from the exhaustive (enumeration-backed) operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StatsError {
    ZeroLength,
    /// `n` exceeds the exhaustive cap; closed forms and series still work.
    CapExceeded {
        n: usize,
        cap: usize,
    },
}

impl fmt::Display for StatsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatsError::ZeroLength => write!(f, "word length must be at least 1"),
            StatsError::CapExceeded { n, cap } => {
                write!(f, "length {n} exceeds the exhaustive cap of {cap}")
            }
        }
    }
}

impl std::error::Error for StatsError {}

/// How a statistic is distributed over all flattened Catalan words of one
/// length: `counts[k]` words attain value `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distribution {
    pub n: usize,
    pub kind: StatKind,
    counts: BTreeMap<usize, BigUint>,
}

impl Distribution {
    pub fn counts(&self) -> &BTreeMap<usize, BigUint> {
        &self.counts
    }

    /// Count at value `k` (zero when absent).
    pub fn count(&self, k: usize) -> BigUint {
        self.counts.get(&k).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Largest attained statistic value.
    pub fn max_k(&self) -> usize {
        self.counts.keys().next_back().copied().unwrap_or(0)
    }

    /// Number of words tallied; equals `count_flattened(n)`.
    pub fn sum(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// Total occurrences of the statistic, `Σ_k k · counts[k]`.
    pub fn total(&self) -> BigUint {
        self.counts.iter().map(|(&k, c)| BigUint::from(k) * c).sum()
    }
}

/// Distribution of one statistic over `Flat(C_n)` by full enumeration.
pub fn distribution(n: usize, kind: StatKind, cap: usize) -> Result<Distribution, StatsError> {
    Ok(distributions(n, &[kind], cap)?
        .pop()
        .expect("one kind requested"))
}

/// Distributions of several statistics in a single enumeration pass.
pub fn distributions(
    n: usize,
    kinds: &[StatKind],
    cap: usize,
) -> Result<Vec<Distribution>, StatsError> {
    if n == 0 {
        return Err(StatsError::ZeroLength);
    }
    if n > cap {
        return Err(StatsError::CapExceeded { n, cap });
    }
    let mut tallies: Vec<BTreeMap<usize, BigUint>> = vec![BTreeMap::new(); kinds.len()];
    for word in words::enumerate_flattened(n).expect("n >= 1") {
        for (kind, tally) in kinds.iter().zip(tallies.iter_mut()) {
            let k = statistic(&word, *kind);
            *tally.entry(k).or_insert_with(BigUint::zero) += BigUint::one();
        }
    }
    Ok(kinds
        .iter()
        .zip(tallies)
        .map(|(&kind, counts)| Distribution { n, kind, counts })
        .collect())
}

/// Total occurrences of the statistic over `Flat(C_n)`, by enumeration.
pub fn total(n: usize, kind: StatKind, cap: usize) -> Result<BigUint, StatsError> {
    Ok(distribution(n, kind, cap)?.total())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{count_flattened, enumerate_flattened, DEFAULT_EXHAUSTIVE_CAP};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn stat(s: &str, kind: StatKind) -> usize {
        statistic(&w(s), kind)
    }

    #[test]
    fn worked_example_statistics() {
        let s = "0122200122322334544";
        assert_eq!(stat(s, StatKind::Runs), 11);
        assert_eq!(stat(s, StatKind::WeakRuns), 4);
        assert_eq!(stat(s, StatKind::DescentRuns), 16);
        assert_eq!(stat(s, StatKind::WeakDescentRuns), 9);
        assert_eq!(stat(s, StatKind::EllValleys(1)), 0);
        assert_eq!(stat(s, StatKind::EllValleys(2)), 2);
        assert_eq!(stat(s, StatKind::EllValleys(3)), 0);
        assert_eq!(stat(s, StatKind::SymmetricValleys), 1);
        assert_eq!(stat(s, StatKind::EllPeaks(1)), 2);
        assert_eq!(stat(s, StatKind::EllPeaks(2)), 0);
        assert_eq!(stat(s, StatKind::EllPeaks(3)), 1);
        assert_eq!(stat(s, StatKind::EllPeaks(4)), 0);
        assert_eq!(stat(s, StatKind::SymmetricPeaks), 2);
        assert_eq!(stat(s, StatKind::Valleys), 2);
        assert_eq!(stat(s, StatKind::Peaks), 3);
    }

    #[test]
    fn run_statistics_examples() {
        let s = "012230123122";
        assert_eq!(stat(s, StatKind::Runs), 5);
        assert_eq!(stat(s, StatKind::WeakRuns), 3);
        assert_eq!(stat(s, StatKind::DescentRuns), 10);
    }

    #[test]
    fn single_letter_word() {
        for kind in [
            StatKind::Runs,
            StatKind::WeakRuns,
            StatKind::DescentRuns,
            StatKind::WeakDescentRuns,
        ] {
            assert_eq!(stat("0", kind), 1);
        }
        for kind in [
            StatKind::EllValleys(1),
            StatKind::Valleys,
            StatKind::SymmetricValleys,
            StatKind::EllPeaks(1),
            StatKind::Peaks,
            StatKind::SymmetricPeaks,
        ] {
            assert_eq!(stat("0", kind), 0);
        }
    }

    #[test]
    fn run_counts_match_block_segmentation() {
        // boundary counting must agree with explicitly segmenting maximal
        // runs, for each of the four run statistics
        fn segments(a: &[u32], keep: fn(u32, u32) -> bool) -> usize {
            let mut count = 1;
            for p in a.windows(2) {
                if !keep(p[0], p[1]) {
                    count += 1;
                }
            }
            count
        }
        for n in 1..=8 {
            for word in enumerate_flattened(n).unwrap() {
                let a = word.letters();
                assert_eq!(statistic(&word, StatKind::Runs), segments(a, |x, y| x < y));
                assert_eq!(
                    statistic(&word, StatKind::WeakRuns),
                    segments(a, |x, y| x <= y)
                );
                assert_eq!(
                    statistic(&word, StatKind::DescentRuns),
                    segments(a, |x, y| x > y)
                );
                assert_eq!(
                    statistic(&word, StatKind::WeakDescentRuns),
                    segments(a, |x, y| x >= y)
                );
            }
        }
    }

    #[test]
    fn run_identities_exhaustive() {
        for n in 1..=9 {
            for word in enumerate_flattened(n).unwrap() {
                let runs = statistic(&word, StatKind::Runs);
                let wruns = statistic(&word, StatKind::WeakRuns);
                let druns = statistic(&word, StatKind::DescentRuns);
                let wdruns = statistic(&word, StatKind::WeakDescentRuns);
                assert_eq!(runs + wdruns, n + 1);
                assert_eq!(druns, n + 1 - wruns);
            }
        }
    }

    #[test]
    fn single_weak_run_words_are_the_weakly_increasing_ones() {
        for n in 1..=8 {
            let single_run: Vec<Word> = enumerate_flattened(n)
                .unwrap()
                .filter(|word| statistic(word, StatKind::WeakRuns) == 1)
                .collect();
            let increasing: Vec<Word> = crate::words::enumerate_weakly_increasing(n)
                .unwrap()
                .collect();
            assert_eq!(single_run, increasing, "length {n}");
        }
    }

    #[test]
    fn valley_and_peak_sums_exhaustive() {
        for n in 1..=9 {
            for word in enumerate_flattened(n).unwrap() {
                let val = statistic(&word, StatKind::Valleys);
                let peak = statistic(&word, StatKind::Peaks);
                let val_sum: usize = (1..=n)
                    .map(|l| statistic(&word, StatKind::EllValleys(l)))
                    .sum();
                let peak_sum: usize = (1..=n)
                    .map(|l| statistic(&word, StatKind::EllPeaks(l)))
                    .sum();
                assert_eq!(val, val_sum);
                assert_eq!(peak, peak_sum);
                assert!(statistic(&word, StatKind::SymmetricValleys) <= val);
                assert!(statistic(&word, StatKind::SymmetricPeaks) <= peak);
            }
        }
    }

    #[test]
    fn distribution_examples() {
        let cap = DEFAULT_EXHAUSTIVE_CAP;
        let d = distribution(4, StatKind::Runs, cap).unwrap();
        assert_eq!(d.count(1), BigUint::from(1u32));
        assert_eq!(d.count(2), BigUint::from(6u32));
        assert_eq!(d.count(3), BigUint::from(6u32));
        assert_eq!(d.count(4), BigUint::from(1u32));
        assert_eq!(d.max_k(), 4);

        let d = distribution(6, StatKind::EllValleys(2), cap).unwrap();
        assert_eq!(d.count(0), BigUint::from(115u32));
        assert_eq!(d.count(1), BigUint::from(7u32));

        let d = distribution(4, StatKind::SymmetricPeaks, cap).unwrap();
        assert_eq!(d.count(0), BigUint::from(9u32));
        assert_eq!(d.count(1), BigUint::from(5u32));
    }

    #[test]
    fn distribution_row_sums() {
        for n in 1..=8 {
            for kind in StatKind::all(2) {
                let d = distribution(n, kind, DEFAULT_EXHAUSTIVE_CAP).unwrap();
                assert_eq!(d.sum(), count_flattened(n), "{kind} at n={n}");
            }
        }
    }

    #[test]
    fn total_examples() {
        let cap = DEFAULT_EXHAUSTIVE_CAP;
        assert_eq!(
            total(5, StatKind::Runs, cap).unwrap(),
            BigUint::from(123u32)
        );
        assert_eq!(
            total(6, StatKind::WeakRuns, cap).unwrap(),
            BigUint::from(222u32)
        );
        assert_eq!(
            total(7, StatKind::Valleys, cap).unwrap(),
            BigUint::from(184u32)
        );
    }

    #[test]
    fn cap_is_enforced() {
        let err = distribution(21, StatKind::Runs, DEFAULT_EXHAUSTIVE_CAP).unwrap_err();
        assert_eq!(err, StatsError::CapExceeded { n: 21, cap: 20 });
        assert!(err.to_string().contains("20"));
        assert!(matches!(
            distribution(0, StatKind::Runs, DEFAULT_EXHAUSTIVE_CAP),
            Err(StatsError::ZeroLength)
        ));
    }

    #[test]
    fn short_peak_words_of_length_six() {
        // the eight words of length 6 with exactly two short peaks
        let mut got: Vec<String> = enumerate_flattened(6)
            .unwrap()
            .filter(|word| statistic(word, StatKind::EllPeaks(1)) == 2)
            .map(|word| word.compact().unwrap())
            .collect();
        got.sort();
        let mut expected = vec![
            "001010", "010100", "010101", "010010", "010120", "010121", "012010", "012121",
        ];
        expected.sort_unstable();
        assert_eq!(got, expected);
    }

    #[test]
    fn two_valley_words_of_length_seven() {
        // the twelve words of length 7 with exactly two valleys
        let mut got: Vec<String> = enumerate_flattened(7)
            .unwrap()
            .filter(|word| statistic(word, StatKind::Valleys) == 2)
            .map(|word| word.compact().unwrap())
            .collect();
        got.sort();
        let mut expected = vec![
            "0010101", "0100101", "0101001", "0101010", "0101011", "0101012", "0101101", "0101201",
            "0101212", "0110101", "0120101", "0121212",
        ];
        expected.sort_unstable();
        assert_eq!(got, expected);
    }

    #[test]
    fn kind_parsing() {
        assert_eq!(StatKind::parse("runs", None), Ok(StatKind::Runs));
        assert_eq!(
            StatKind::parse("ell-val", Some(2)),
            Ok(StatKind::EllValleys(2))
        );
        assert_eq!(
            StatKind::parse("ell-peak", Some(1)),
            Ok(StatKind::EllPeaks(1))
        );
        assert!(matches!(
            StatKind::parse("ell-val", None),
            Err(StatKindError::EllRequired(_))
        ));
        assert!(matches!(
            StatKind::parse("ell-peak", Some(0)),
            Err(StatKindError::EllZero)
        ));
        assert!(matches!(
            StatKind::parse("runs", Some(2)),
            Err(StatKindError::EllNotApplicable(_))
        ));
        assert!(matches!(
            StatKind::parse("area", None),
            Err(StatKindError::UnknownStat(_))
        ));
        assert_eq!(StatKind::EllValleys(2).to_string(), "2-val");
        assert_eq!(StatKind::all(3).len(), 14);
    }
}
