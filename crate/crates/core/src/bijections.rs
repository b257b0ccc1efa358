//! Constructive correspondences for flattened Catalan words: the map ψ to
//! even compositions and its inverse, the map to order-consecutive
//! partitions, the map from dotted binary words, and the involution φ that
//! transports runs of ascents to runs of weak descents.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::words::{first_return_decompose, Word};

/// Errors from bijection entry points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BijectionError {
    /// The word is not a flattened Catalan word.
    NotFlattened,
    /// A composition part outside {0, 1, 2}.
    BadPart(String),
    /// The composition has odd sum, so it is outside the image of ψ.
    OddSum,
    /// No flattened word maps to the given composition.
    NoParse,
    /// A dotted binary word symbol outside {0, 1, .}.
    BadSymbol(char),
    /// Dotted binary words need an even number of dots.
    OddDotCount(usize),
    /// The constructed block sequence is not an order-consecutive
    /// partition; indicates a bug, not bad input.
    InvalidPartition(String),
}

impl fmt::Display for BijectionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BijectionError::NotFlattened => write!(f, "not a flattened Catalan word"),
            BijectionError::BadPart(tok) => {
                write!(f, "composition part {tok:?} is not 0, 1, or 2")
            }
            BijectionError::OddSum => write!(f, "composition sum must be even"),
            BijectionError::NoParse => {
                write!(f, "no flattened Catalan word maps to this composition")
            }
            BijectionError::BadSymbol(c) => {
                write!(f, "dotted binary word symbol {c:?} is not 0, 1, or .")
            }
            BijectionError::OddDotCount(d) => {
                write!(f, "dotted binary words need an even dot count, got {d}")
            }
            BijectionError::InvalidPartition(detail) => {
                write!(f, "not an order-consecutive partition: {detail}")
            }
        }
    }
}

impl std::error::Error for BijectionError {}

/// A composition into parts of size at most two, with 0 allowed. Images of
/// ψ have even sum and length one less than the word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<u8>,
}

impl Composition {
    pub fn new(parts: Vec<u8>) -> Result<Self, BijectionError> {
        if let Some(&bad) = parts.iter().find(|&&p| p > 2) {
            return Err(BijectionError::BadPart(bad.to_string()));
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for part in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = BijectionError;

    fn from_str(s: &str) -> Result<Self, BijectionError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Composition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| match tok.trim() {
                "0" => Ok(0),
                "1" => Ok(1),
                "2" => Ok(2),
                other => Err(BijectionError::BadPart(other.to_string())),
            })
            .collect::<Result<Vec<u8>, _>>()?;
        Ok(Composition { parts })
    }
}

/// ψ maps a flattened word of length n to a composition of an even number
/// into n−1 parts from {0, 1, 2}, by first-return decomposition: the
/// singleton maps to the empty composition, `0(w+1)` prepends 2 to ψ(w),
/// `0w` prepends 0, and `0(w+1)w'` yields `1 ψ(w) 1 ψ(w')`.
pub fn psi_composition(w: &Word) -> Result<Composition, BijectionError> {
    if !w.is_flattened() {
        return Err(BijectionError::NotFlattened);
    }
    let mut parts = Vec::with_capacity(w.len() - 1);
    psi_parts(w, &mut parts);
    Ok(Composition { parts })
}

fn psi_parts(w: &Word, out: &mut Vec<u8>) {
    if w.len() == 1 {
        return;
    }
    let split = first_return_decompose(w);
    match (split.prime.is_empty(), split.rest.is_empty()) {
        (false, true) => {
            out.push(2);
            psi_parts(&split.prime, out);
        }
        (true, false) => {
            out.push(0);
            psi_parts(&split.rest, out);
        }
        (false, false) => {
            out.push(1);
            psi_parts(&split.prime, out);
            out.push(1);
            psi_parts(&split.rest, out);
        }
        (true, true) => unreachable!("length-1 words are handled above"),
    }
}

/// Inverts ψ by recursive parsing. A leading 2 or 0 determines its case; a
/// leading 1 opens a `1 c₁ 1 c₂` split whose matching 1 is found by
/// backtracking over positions with an even-sum prefix, keeping only
/// splits whose first fragment parses to a weakly increasing word (the
/// split is unique in practice; the test suite audits that exhaustively).
pub fn psi_composition_inverse(c: &Composition) -> Result<Word, BijectionError> {
    if c.sum() % 2 != 0 {
        return Err(BijectionError::OddSum);
    }
    parse_psi(c.parts(), 1)
        .into_iter()
        .next()
        .ok_or(BijectionError::NoParse)
}

/// All flattened words mapping to `c` under ψ (bijectivity means at most
/// one; exposed so the uniqueness audit can count parses).
pub fn psi_composition_preimages(c: &Composition) -> Vec<Word> {
    parse_psi(c.parts(), usize::MAX)
}

fn parse_psi(parts: &[u8], limit: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if limit == 0 {
        return out;
    }
    match parts.first() {
        None => out.push(Word::new(vec![0])),
        Some(2) => {
            for inner in parse_psi(&parts[1..], limit) {
                let mut letters = Vec::with_capacity(inner.len() + 1);
                letters.push(0);
                letters.extend(inner.letters().iter().map(|&a| a + 1));
                out.push(Word::new(letters));
            }
        }
        Some(0) => {
            for inner in parse_psi(&parts[1..], limit) {
                let mut letters = Vec::with_capacity(inner.len() + 1);
                letters.push(0);
                letters.extend_from_slice(inner.letters());
                out.push(Word::new(letters));
            }
        }
        Some(1) => {
            let tail = &parts[1..];
            let mut prefix_sum = 0usize;
            for (i, &part) in tail.iter().enumerate() {
                if part == 1 && prefix_sum % 2 == 0 {
                    for w1 in parse_psi(&tail[..i], usize::MAX) {
                        if !is_weakly_increasing(&w1) {
                            continue;
                        }
                        for w2 in parse_psi(&tail[i + 1..], usize::MAX) {
                            let mut letters = Vec::with_capacity(w1.len() + w2.len() + 1);
                            letters.push(0);
                            letters.extend(w1.letters().iter().map(|&a| a + 1));
                            letters.extend_from_slice(w2.letters());
                            let candidate = Word::new(letters);
                            debug_assert!(candidate.is_flattened());
                            out.push(candidate);
                            if out.len() >= limit {
                                return out;
                            }
                        }
                    }
                }
                prefix_sum += part as usize;
            }
        }
        Some(_) => unreachable!("Composition guarantees parts in {{0,1,2}}"),
    }
    out.truncate(limit);
    out
}

fn is_weakly_increasing(w: &Word) -> bool {
    w.letters().windows(2).all(|p| p[0] <= p[1])
}

/// An ordered set partition of {1..n} whose blocks are listed by increasing
/// maxima and which admits some block order with every prefix union an
/// integer interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderConsecutivePartition {
    blocks: Vec<BTreeSet<usize>>,
}

impl OrderConsecutivePartition {
    /// Sorts the blocks by maxima and validates: nonempty pairwise-disjoint
    /// blocks covering {1..n}, and existence of a consecutive ordering.
    pub fn from_blocks(mut blocks: Vec<BTreeSet<usize>>) -> Result<Self, BijectionError> {
        if blocks.is_empty() || blocks.iter().any(BTreeSet::is_empty) {
            return Err(BijectionError::InvalidPartition("empty block".into()));
        }
        blocks.sort_by_key(|b| *b.iter().next_back().expect("nonempty block"));
        let n: usize = blocks.iter().map(BTreeSet::len).sum();
        let mut seen = vec![false; n + 1];
        for &e in blocks.iter().flatten() {
            if e == 0 || e > n || seen[e] {
                return Err(BijectionError::InvalidPartition(format!(
                    "elements do not form {{1..{n}}}"
                )));
            }
            seen[e] = true;
        }
        let partition = OrderConsecutivePartition { blocks };
        if !partition.has_consecutive_ordering() {
            return Err(BijectionError::InvalidPartition(
                "no block order has interval prefix unions".into(),
            ));
        }
        Ok(partition)
    }

    pub fn blocks(&self) -> &[BTreeSet<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(BTreeSet::len).sum()
    }

    /// Searches for an ordering of the blocks whose prefix unions are all
    /// intervals. The covered set is always an interval `lo..=hi`, so each
    /// step may only add a block that exactly fills a stretch immediately
    /// below `lo` and/or above `hi`.
    fn has_consecutive_ordering(&self) -> bool {
        fn extends(block: &BTreeSet<usize>, lo: usize, hi: usize) -> Option<(usize, usize)> {
            let &min = block.iter().next()?;
            let &max = block.iter().next_back()?;
            let (new_lo, new_hi) = (lo.min(min), hi.max(max));
            if new_hi - new_lo + 1 != (hi - lo + 1) + block.len() {
                return None;
            }
            if block.iter().any(|&e| lo <= e && e <= hi) {
                return None;
            }
            Some((new_lo, new_hi))
        }
        fn search(blocks: &[BTreeSet<usize>], used: &mut [bool], lo: usize, hi: usize) -> bool {
            if used.iter().all(|&u| u) {
                return true;
            }
            for (i, block) in blocks.iter().enumerate() {
                if used[i] {
                    continue;
                }
                if let Some((new_lo, new_hi)) = extends(block, lo, hi) {
                    used[i] = true;
                    if search(blocks, used, new_lo, new_hi) {
                        return true;
                    }
                    used[i] = false;
                }
            }
            false
        }
        let mut used = vec![false; self.blocks.len()];
        for (i, block) in self.blocks.iter().enumerate() {
            let &min = block.iter().next().expect("nonempty block");
            let &max = block.iter().next_back().expect("nonempty block");
            if max - min + 1 != block.len() {
                continue; // the opening block must itself be an interval
            }
            used[i] = true;
            if search(&self.blocks, &mut used, min, max) {
                return true;
            }
            used[i] = false;
        }
        false
    }
}

impl fmt::Display for OrderConsecutivePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in &self.blocks {
            write!(f, "{{")?;
            let mut first = true;
            for e in block {
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
                first = false;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// Maps a flattened word of length n with k runs of ascents to an
/// order-consecutive partition of {1..n} with k blocks.
///
/// By first-return decomposition: the singleton gives {1}; `0(w+1)` inserts
/// n into the last block of the image of w; `0w` appends the block {n};
/// and when both parts are nonempty the word splits instead as u·v with u
/// its first weak run — the image of u ends in a block containing both
/// |u|−1 and |u|, which is torn apart to splice in the shifted image of v.
pub fn psi_ocp(w: &Word) -> Result<OrderConsecutivePartition, BijectionError> {
    if !w.is_flattened() {
        return Err(BijectionError::NotFlattened);
    }
    OrderConsecutivePartition::from_blocks(ocp_blocks(w))
}

fn ocp_blocks(w: &Word) -> Vec<BTreeSet<usize>> {
    let n = w.len();
    if n == 1 {
        return vec![BTreeSet::from([1])];
    }
    let split = first_return_decompose(w);
    match (split.prime.is_empty(), split.rest.is_empty()) {
        (false, true) => {
            let mut blocks = ocp_blocks(&split.prime);
            blocks.last_mut().expect("nonempty image").insert(n);
            blocks
        }
        (true, false) => {
            let mut blocks = ocp_blocks(&split.rest);
            blocks.push(BTreeSet::from([n]));
            blocks
        }
        (false, false) => {
            // u = 0(prime+1) is exactly the first weak run of w
            let mut run = Vec::with_capacity(split.prime.len() + 1);
            run.push(0);
            run.extend(split.prime.letters().iter().map(|&a| a + 1));
            let m = run.len();
            let mut blocks = ocp_blocks(&Word::new(run));
            let last = blocks.pop().expect("nonempty image");
            debug_assert!(last.contains(&(m - 1)) && last.contains(&m));
            let mut torn: BTreeSet<usize> = last
                .iter()
                .copied()
                .filter(|&e| e != m - 1 && e != m)
                .collect();
            for block in ocp_blocks(&split.rest) {
                blocks.push(block.iter().map(|&e| e + m - 1).collect());
            }
            torn.insert(m - 1);
            torn.insert(n);
            blocks.push(torn);
            blocks
        }
        (true, true) => unreachable!("length-1 words are handled above"),
    }
}

/// A word over {0, 1, •} — a binary word with some symbols replaced by
/// dots. Text form uses `.` for the dot.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DottedBinaryWord {
    symbols: Vec<DottedSymbol>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DottedSymbol {
    Zero,
    One,
    Dot,
}

impl DottedBinaryWord {
    pub fn new(symbols: Vec<DottedSymbol>) -> Self {
        DottedBinaryWord { symbols }
    }

    pub fn symbols(&self) -> &[DottedSymbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn dot_count(&self) -> usize {
        self.symbols
            .iter()
            .filter(|&&s| s == DottedSymbol::Dot)
            .count()
    }
}

impl fmt::Display for DottedBinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            f.write_str(match s {
                DottedSymbol::Zero => "0",
                DottedSymbol::One => "1",
                DottedSymbol::Dot => ".",
            })?;
        }
        Ok(())
    }
}

impl FromStr for DottedBinaryWord {
    type Err = BijectionError;

    fn from_str(s: &str) -> Result<Self, BijectionError> {
        s.trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(DottedSymbol::Zero),
                '1' => Ok(DottedSymbol::One),
                '.' => Ok(DottedSymbol::Dot),
                other => Err(BijectionError::BadSymbol(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(DottedBinaryWord::new)
    }
}

/// Maps a binary word of length n−1 with 2k−2 dots to a flattened Catalan
/// word of length n with exactly k weak-ascent runs.
///
/// Prepend 0 and resolve the dots alternately to 1, 0, 1, 0, …; the
/// positions resolved to 0 start the k runs. Each run is lifted to a
/// weakly increasing word (a 1 steps up, a 0 stays), and run a+1 starts
/// above run a's leader by the number of 1s that run a has before its
/// resolved-1 dot — strictly fewer than the run's rises, so every junction
/// descends and the run leaders weakly increase.
pub fn f_dotted(u: &DottedBinaryWord) -> Result<Word, BijectionError> {
    let dots: Vec<usize> = u
        .symbols()
        .iter()
        .enumerate()
        .filter(|(_, &s)| s == DottedSymbol::Dot)
        .map(|(i, _)| i + 1) // v has a leading 0, so u's position i is v's index i+1
        .collect();
    if dots.len() % 2 != 0 {
        return Err(BijectionError::OddDotCount(dots.len()));
    }
    let n = u.len() + 1;
    let k = dots.len() / 2 + 1;
    let mut v = Vec::with_capacity(n);
    v.push(0u8);
    v.extend(u.symbols().iter().map(|s| match s {
        DottedSymbol::Zero | DottedSymbol::Dot => 0u8,
        DottedSymbol::One => 1u8,
    }));
    for (idx, &pos) in dots.iter().enumerate() {
        v[pos] = if idx % 2 == 0 { 1 } else { 0 };
    }
    // runs start at index 0 and at every second dot position
    let mut starts = Vec::with_capacity(k + 1);
    starts.push(0usize);
    starts.extend(dots.iter().skip(1).step_by(2).copied());
    starts.push(n);

    let mut letters = Vec::with_capacity(n);
    let mut shift = 0u32;
    for a in 0..k {
        let run = &v[starts[a]..starts[a + 1]];
        let mut height = shift;
        letters.push(height);
        for &bit in &run[1..] {
            height += u32::from(bit);
            letters.push(height);
        }
        if a + 1 < k {
            // ones in this run strictly before its resolved-1 dot
            let stop = dots[2 * a] - starts[a];
            shift += run[..stop].iter().map(|&b| u32::from(b)).sum::<u32>();
        }
    }
    let word = Word::new(letters);
    debug_assert!(word.is_flattened());
    Ok(word)
}

/// The involution on flattened words that swaps the roles of the two parts
/// of the first-return decomposition: `0(w+1) ↔ 0w` and, when both parts
/// are present, `0(1+w)w' → 0(1+φ(w))φ(w')`. It preserves length,
/// satisfies φ∘φ = id, and turns runs of ascents into runs of weak
/// descents.
pub fn phi(w: &Word) -> Result<Word, BijectionError> {
    if !w.is_flattened() {
        return Err(BijectionError::NotFlattened);
    }
    Ok(phi_word(w))
}

fn phi_word(w: &Word) -> Word {
    if w.len() == 1 {
        return Word::new(vec![0]);
    }
    let split = first_return_decompose(w);
    let mut letters = Vec::with_capacity(w.len());
    letters.push(0);
    match (split.prime.is_empty(), split.rest.is_empty()) {
        (false, true) => {
            letters.extend_from_slice(phi_word(&split.prime).letters());
        }
        (true, false) => {
            letters.extend(phi_word(&split.rest).letters().iter().map(|&a| a + 1));
        }
        (false, false) => {
            letters.extend(phi_word(&split.prime).letters().iter().map(|&a| a + 1));
            letters.extend_from_slice(phi_word(&split.rest).letters());
        }
        (true, true) => unreachable!("length-1 words are handled above"),
    }
    Word::new(letters)
}
