//! Catalan and flattened Catalan words: values, validity, first-return
//! decomposition, streaming enumeration, and lattice diagrams.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

/// Default bound on word length for exhaustive (enumeration-backed)
/// operations. Closed forms and series expansion are not capped.
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 20;

/// Errors from word parsing, validation, and enumeration entry points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordError {
    /// The empty word was passed where a nonempty word is required.
    Empty,
    /// Enumeration was requested for length zero.
    ZeroLength,
    /// A token in the textual form did not parse as a nonnegative integer.
    InvalidLetter(String),
    /// The operation requires a Catalan word.
    NotCatalan,
    /// A highlight position lies outside `1..=len`.
    HighlightOutOfRange { position: usize, len: usize },
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordError::Empty => write!(f, "the empty word is not accepted here"),
            WordError::ZeroLength => write!(f, "word length must be at least 1"),
            WordError::InvalidLetter(tok) => write!(f, "invalid letter {tok:?}"),
            WordError::NotCatalan => write!(f, "not a Catalan word"),
            WordError::HighlightOutOfRange { position, len } => {
                write!(f, "highlight position {position} outside 1..={len}")
            }
        }
    }
}

impl std::error::Error for WordError {}

/// A word over the nonnegative integers.
///
/// The canonical text form is comma-separated decimal letters (`0,1,2,2`);
/// a compact digit string (`0122`) is accepted on input when every letter
/// is at most 9. Comparison is lexicographic on the letter sequence.
///
/// The empty word is representable because it occurs as a decomposition
/// value, but validators reject it and enumerators never yield it.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    /// True iff the word is nonempty, starts with 0, and each letter is at
    /// most one more than its predecessor.
    pub fn is_catalan(&self) -> bool {
        !self.letters.is_empty()
            && self.letters[0] == 0
            && self.letters.windows(2).all(|p| p[1] <= p[0] + 1)
    }

    /// True iff the word is Catalan and the leading letters of its maximal
    /// weak-ascent runs are weakly increasing.
    pub fn is_flattened(&self) -> bool {
        if !self.is_catalan() {
            return false;
        }
        let mut leader = self.letters[0];
        for p in self.letters.windows(2) {
            if p[1] < p[0] {
                // strict descent: a new weak run starts at p[1]
                if p[1] < leader {
                    return false;
                }
                leader = p[1];
            }
        }
        true
    }

    /// Compact digit-string form, available when every letter is at most 9.
    pub fn compact(&self) -> Option<String> {
        if self.letters.iter().all(|&a| a <= 9) {
            Some(
                self.letters
                    .iter()
                    .map(|&a| char::from(b'0' + a as u8))
                    .collect(),
            )
        } else {
            None
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for a in &self.letters {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, WordError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(WordError::Empty);
        }
        if s.contains(',') {
            let letters = s
                .split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    tok.parse::<u32>()
                        .map_err(|_| WordError::InvalidLetter(tok.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Word::new(letters))
        } else if s.bytes().all(|b| b.is_ascii_digit()) {
            Ok(Word::new(s.bytes().map(|b| u32::from(b - b'0')).collect()))
        } else {
            Err(WordError::InvalidLetter(s.to_string()))
        }
    }
}

/// Checks the Catalan condition on a raw letter sequence.
///
/// The empty sequence is a domain error; the empty word is only meaningful
/// internally as a decomposition value.
pub fn validate_catalan(letters: &[u32]) -> Result<bool, WordError> {
    if letters.is_empty() {
        return Err(WordError::Empty);
    }
    Ok(letters[0] == 0 && letters.windows(2).all(|p| p[1] <= p[0] + 1))
}

/// Checks whether `w` is a flattened Catalan word (Catalan, with weak-run
/// leaders in weakly increasing order).
pub fn validate_flattened(w: &Word) -> Result<bool, WordError> {
    if w.is_empty() {
        return Err(WordError::Empty);
    }
    Ok(w.is_flattened())
}

/// The pieces of the first-return decomposition `w = 0 (prime+1) rest`.
///
/// `rest` starts at the first return of the word to the letter 0; `prime`
/// is the block strictly above 0 that precedes it, shifted down by one.
/// Either part may be empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstReturnSplit {
    pub prime: Word,
    pub rest: Word,
}

impl FirstReturnSplit {
    /// Reassembles `0 (prime+1) rest`.
    pub fn recompose(&self) -> Word {
        let mut letters = Vec::with_capacity(1 + self.prime.len() + self.rest.len());
        letters.push(0);
        letters.extend(self.prime.letters().iter().map(|&a| a + 1));
        letters.extend_from_slice(self.rest.letters());
        Word::new(letters)
    }
}

/// Splits a nonempty Catalan word at its first return to 0.
///
/// Panics on the empty word; the Catalan precondition is debug-asserted.
pub fn first_return_decompose(w: &Word) -> FirstReturnSplit {
    assert!(
        !w.is_empty(),
        "first return decomposition requires a nonempty word"
    );
    debug_assert!(
        w.is_catalan(),
        "first return decomposition requires a Catalan word"
    );
    let letters = w.letters();
    match letters[1..].iter().position(|&a| a == 0) {
        None => FirstReturnSplit {
            prime: Word::new(letters[1..].iter().map(|&a| a - 1).collect()),
            rest: Word::empty(),
        },
        Some(p) => {
            let j = p + 1;
            FirstReturnSplit {
                prime: Word::new(letters[1..j].iter().map(|&a| a - 1).collect()),
                rest: Word::new(letters[j..].to_vec()),
            }
        }
    }
}

/// Number of flattened Catalan words of length `n`, that is `(3^(n-1)+1)/2`.
pub fn count_flattened(n: usize) -> BigUint {
    assert!(n >= 1, "flattened Catalan words have length at least 1");
    (BigUint::from(3u32).pow((n - 1) as u32) + BigUint::one()) / BigUint::from(2u32)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

/// Streaming lexicographic enumeration of the flattened Catalan words of a
/// fixed length. O(n) memory; every yielded word is flattened by
/// construction and none is skipped.
///
/// After any valid prefix, the admissible next letters form the contiguous
/// range `leader..=last+1`, where `leader` is the leading letter of the
/// current weak run: letters below the leader would break the flattened
/// condition and letters above `last+1` the Catalan condition, while
/// everything in between stays extendable (repeat the last letter).
#[derive(Clone, Debug)]
pub struct FlattenedWords {
    letters: Vec<u32>,
    leaders: Vec<u32>,
    state: IterState,
}

/// Enumerates `Flat(C_n)` in lexicographic order.
///
/// ```
/// use flatcat_core::words::enumerate_flattened;
///
/// let words: Vec<String> = enumerate_flattened(3)
///     .unwrap()
///     .map(|w| w.compact().unwrap())
///     .collect();
/// assert_eq!(words, ["000", "001", "010", "011", "012"]);
/// ```
pub fn enumerate_flattened(n: usize) -> Result<FlattenedWords, WordError> {
    if n == 0 {
        return Err(WordError::ZeroLength);
    }
    Ok(FlattenedWords {
        letters: vec![0; n],
        leaders: vec![0; n],
        state: IterState::Fresh,
    })
}

impl FlattenedWords {
    fn advance(&mut self) -> bool {
        let n = self.letters.len();
        for i in (1..n).rev() {
            let prev = self.letters[i - 1];
            if self.letters[i] <= prev {
                self.letters[i] += 1;
                self.leaders[i] = if self.letters[i] < prev {
                    self.letters[i]
                } else {
                    self.leaders[i - 1]
                };
                for j in i + 1..n {
                    self.letters[j] = self.leaders[j - 1];
                    self.leaders[j] = self.leaders[j - 1];
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for FlattenedWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        match self.state {
            IterState::Fresh => {
                self.state = IterState::Running;
                Some(Word::new(self.letters.clone()))
            }
            IterState::Running => {
                if self.advance() {
                    Some(Word::new(self.letters.clone()))
                } else {
                    self.state = IterState::Done;
                    None
                }
            }
            IterState::Done => None,
        }
    }
}

/// Streaming lexicographic enumeration of the weakly increasing Catalan
/// words of a fixed length (each step repeats the last letter or adds one);
/// there are `2^(n-1)` of them. These are exactly the flattened Catalan
/// words with a single weak run.
#[derive(Clone, Debug)]
pub struct WeaklyIncreasingWords {
    letters: Vec<u32>,
    state: IterState,
}

/// Enumerates the weakly increasing Catalan words of length `n` in
/// lexicographic order.
pub fn enumerate_weakly_increasing(n: usize) -> Result<WeaklyIncreasingWords, WordError> {
    if n == 0 {
        return Err(WordError::ZeroLength);
    }
    Ok(WeaklyIncreasingWords {
        letters: vec![0; n],
        state: IterState::Fresh,
    })
}

impl WeaklyIncreasingWords {
    fn advance(&mut self) -> bool {
        let n = self.letters.len();
        for i in (1..n).rev() {
            if self.letters[i] == self.letters[i - 1] {
                self.letters[i] += 1;
                for j in i + 1..n {
                    self.letters[j] = self.letters[j - 1];
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for WeaklyIncreasingWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        match self.state {
            IterState::Fresh => {
                self.state = IterState::Running;
                Some(Word::new(self.letters.clone()))
            }
            IterState::Running => {
                if self.advance() {
                    Some(Word::new(self.letters.clone()))
                } else {
                    self.state = IterState::Done;
                    None
                }
            }
            IterState::Done => None,
        }
    }
}

/// Output format for lattice diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

/// Horizontal unit segment from `(x, height)` to `(x+1, height)`; segment
/// `x` draws letter `x+1` of the word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HorizontalSegment {
    pub x: usize,
    pub height: u32,
}

/// Vertical connector at column `x` spanning heights `lo..=hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerticalStep {
    pub x: usize,
    pub lo: u32,
    pub hi: u32,
}

/// The lattice diagram of a Catalan word: one horizontal unit segment per
/// letter at its height, with vertical steps inserted wherever consecutive
/// letters differ so the diagram stays connected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeDiagram {
    horizontals: Vec<HorizontalSegment>,
    verticals: Vec<VerticalStep>,
}

impl LatticeDiagram {
    pub fn new(w: &Word) -> Result<Self, WordError> {
        if w.is_empty() {
            return Err(WordError::Empty);
        }
        if !w.is_catalan() {
            return Err(WordError::NotCatalan);
        }
        let a = w.letters();
        let horizontals = a
            .iter()
            .enumerate()
            .map(|(i, &h)| HorizontalSegment { x: i, height: h })
            .collect();
        let verticals = a
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p[0] != p[1])
            .map(|(i, p)| VerticalStep {
                x: i + 1,
                lo: p[0].min(p[1]),
                hi: p[0].max(p[1]),
            })
            .collect();
        Ok(LatticeDiagram {
            horizontals,
            verticals,
        })
    }

    /// One segment per letter of the word.
    pub fn horizontal_segments(&self) -> &[HorizontalSegment] {
        &self.horizontals
    }

    pub fn vertical_steps(&self) -> &[VerticalStep] {
        &self.verticals
    }

    pub fn width(&self) -> usize {
        self.horizontals.len()
    }

    pub fn max_height(&self) -> u32 {
        self.horizontals.iter().map(|s| s.height).max().unwrap_or(0)
    }
}

/// Draws the lattice diagram of a Catalan word.
///
/// `highlights` are 1-based letter positions; highlighted segments render
/// as `=` in ASCII and in red in SVG. Output is deterministic.
pub fn render_lattice(
    w: &Word,
    format: RenderFormat,
    highlights: &[usize],
) -> Result<String, WordError> {
    let diagram = LatticeDiagram::new(w)?;
    for &p in highlights {
        if p == 0 || p > diagram.width() {
            return Err(WordError::HighlightOutOfRange {
                position: p,
                len: diagram.width(),
            });
        }
    }
    Ok(match format {
        RenderFormat::Ascii => render_ascii(&diagram, highlights),
        RenderFormat::Svg => render_svg(&diagram, highlights),
    })
}

fn render_ascii(diagram: &LatticeDiagram, highlights: &[usize]) -> String {
    let n = diagram.width();
    let maxh = diagram.max_height() as usize;
    // char cell (row r, col 2x) holds the segment at height r; odd columns
    // hold the vertical steps covering the unit interval [r, r+1)
    let mut grid = vec![vec![' '; 2 * n - 1]; maxh + 1];
    for seg in diagram.horizontal_segments() {
        let mark = if highlights.contains(&(seg.x + 1)) {
            '='
        } else {
            '_'
        };
        grid[seg.height as usize][2 * seg.x] = mark;
    }
    for step in diagram.vertical_steps() {
        for r in step.lo..step.hi {
            grid[r as usize][2 * step.x - 1] = '|';
        }
    }
    let mut out = String::new();
    for row in grid.iter().rev() {
        let line: String = row.iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn render_svg(diagram: &LatticeDiagram, highlights: &[usize]) -> String {
    let n = diagram.width();
    let maxh = diagram.max_height() as usize;
    // y is flipped for screen orientation: point (x, h) lands at (x, maxh−h)
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1 -1 {} {}\">\n",
        n + 2,
        maxh + 2
    ));
    out.push_str("  <g stroke=\"black\" stroke-width=\"0.1\" stroke-linecap=\"square\">\n");
    for step in diagram.vertical_steps() {
        let top = maxh - step.hi as usize;
        let bot = maxh - step.lo as usize;
        out.push_str(&format!(
            "    <line x1=\"{0}\" y1=\"{top}\" x2=\"{0}\" y2=\"{bot}\"/>\n",
            step.x
        ));
    }
    for seg in diagram.horizontal_segments() {
        let y = maxh - seg.height as usize;
        let color = if highlights.contains(&(seg.x + 1)) {
            " stroke=\"red\""
        } else {
            ""
        };
        out.push_str(&format!(
            "    <line x1=\"{}\" y1=\"{y}\" x2=\"{}\" y2=\"{y}\"{color}/>\n",
            seg.x,
            seg.x + 1
        ));
    }
    out.push_str("  </g>\n</svg>\n");
    out
}
