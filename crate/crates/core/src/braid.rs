//! Braid words on `m` strands and the permutations they induce.
//!
//! Letters are signed generator indices: `+i` is `σ_i`, `-i` is `σ_i⁻¹`.
//! Words are read bottom-to-top: the first letter is the lowest crossing.
//! This is the only composition convention used anywhere in the crate.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("braid group needs at least one strand")]
    NoStrands,
    #[error("letter {letter} out of range for {strands} strands (|letter| must be in 1..={max})", max = .strands - 1)]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("strand index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("cannot parse braid letter {0:?}")]
    Parse(String),
}

/// A word in the braid group `B_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for &letter in &letters {
            let idx = letter.unsigned_abs() as usize;
            if letter == 0 || idx >= strands {
                return Err(BraidError::LetterOutOfRange { letter, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, Vec::new())
    }

    pub fn strand_count(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self` below, `other` on top.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Cancels adjacent `σ_i σ_i⁻¹` pairs until none remain.
    ///
    /// Never applied implicitly: diagrams built from a word keep every letter.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    pub fn permutation(&self) -> Permutation {
        permutation(self)
    }

    /// Parses `1,1,-2` against a declared strand count.
    pub fn parse(strands: usize, text: &str) -> Result<Self, BraidError> {
        let text = text.trim();
        let mut letters = Vec::new();
        if !text.is_empty() {
            for tok in text.split(',') {
                let tok = tok.trim();
                let l = i32::from_str(tok).map_err(|_| BraidError::Parse(tok.to_string()))?;
                letters.push(l);
            }
        }
        Self::new(strands, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

pub fn compose(w1: &BraidWord, w2: &BraidWord) -> Result<BraidWord, BraidError> {
    w1.compose(w2)
}

/// `|a|` copies of `σ_i` (sign of `a`) on strands `i, i+1`.
pub fn twist_region(strands: usize, index: usize, twists: i32) -> Result<BraidWord, BraidError> {
    if index == 0 || index >= strands {
        return Err(BraidError::IndexOutOfRange { index, strands });
    }
    let letter = if twists >= 0 { index as i32 } else { -(index as i32) };
    BraidWord::new(strands, vec![letter; twists.unsigned_abs() as usize])
}

/// A permutation of `{1..m}`, stored zero-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Builds from one-based images; `images[i-1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut map = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return None;
            }
            seen[img - 1] = true;
            map.push(img - 1);
        }
        Some(Permutation(map))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// One-based image of one-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x + 1).collect()
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "permutation sizes differ");
        Permutation(other.0.iter().map(|&j| self.0[j]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.0.len()];
        let mut cycles = 0;
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
            }
        }
        cycles
    }

    fn swap_adjacent(&mut self, index: usize) {
        self.0.swap(index - 1, index);
    }
}

/// The permutation carried by a word, ignoring crossing signs.
///
/// Maps a top endpoint position to the bottom endpoint of the same strand,
/// so `permutation(w1·w2) = permutation(w1) ∘ permutation(w2)` with `w1`
/// below `w2`. For `[1,2]` on three strands this is `1→2→3→1`.
pub fn permutation(w: &BraidWord) -> Permutation {
    // Right-multiplying by a transposition swaps two slots of the image vector.
    let mut p = Permutation::identity(w.strands);
    for &l in &w.letters {
        p.swap_adjacent(l.unsigned_abs() as usize);
    }
    p
}
