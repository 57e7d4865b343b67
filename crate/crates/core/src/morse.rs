//! Morse embeddings as critical-event sequences, and width arithmetic.
//!
//! Only the bottom-to-top order of minima and maxima matters for width and
//! bridge number, so an embedding is stored as that order and nothing else.
//! A level between two consecutive events meets the knot in
//! `2·#minima − 2·#maxima` points counted below it.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MorseError {
    #[error("embedding has no critical points")]
    Empty,
    #[error("{minima} minima but {maxima} maxima")]
    Unbalanced { minima: usize, maxima: usize },
    #[error("level after event {index} has width {width}; every intermediate level must be positive")]
    NonPositiveLevel { index: usize, width: i64 },
    #[error("unknown event character {0:?} (expected 'm' or 'M')")]
    BadEvent(char),
    #[error("events {index} and {next} are not a (minimum, maximum) pair")]
    NotMinMaxPair { index: usize, next: usize },
    #[error("event index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("moving the minimum at {index} above the maximum would leave a level of width {width}")]
    MoveEmptiesLevel { index: usize, width: i64 },
    #[error("malformed thin-thick tuple: {0}")]
    MalformedTuple(String),
    #[error("thick width {0} must be a positive even integer")]
    BadThickWidth(i64),
}

/// A critical point of the height function restricted to the knot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Critical {
    Min,
    Max,
}

impl Critical {
    fn delta(self) -> i64 {
        match self {
            Critical::Min => 2,
            Critical::Max => -2,
        }
    }

    fn as_char(self) -> char {
        match self {
            Critical::Min => 'm',
            Critical::Max => 'M',
        }
    }
}

/// Critical events of an embedded knot, ordered bottom to top.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MorseEmbedding {
    events: Vec<Critical>,
}

impl MorseEmbedding {
    pub fn new(events: Vec<Critical>) -> Result<Self, MorseError> {
        if events.is_empty() {
            return Err(MorseError::Empty);
        }
        let minima = events.iter().filter(|e| **e == Critical::Min).count();
        let maxima = events.len() - minima;
        if minima != maxima {
            return Err(MorseError::Unbalanced { minima, maxima });
        }
        let mut w = 0;
        for (i, e) in events[..events.len() - 1].iter().enumerate() {
            w += e.delta();
            if w <= 0 {
                return Err(MorseError::NonPositiveLevel { index: i, width: w });
            }
        }
        Ok(MorseEmbedding { events })
    }

    /// `b` minima followed by `b` maxima.
    pub fn bridge_position(b: usize) -> Result<Self, MorseError> {
        let mut events = vec![Critical::Min; b];
        events.extend(std::iter::repeat_n(Critical::Max, b));
        Self::new(events)
    }

    pub fn events(&self) -> &[Critical] {
        &self.events
    }

    pub fn level_widths(&self) -> Vec<i64> {
        let mut w = 0;
        self.events[..self.events.len() - 1]
            .iter()
            .map(|e| {
                w += e.delta();
                w
            })
            .collect()
    }

    pub fn width(&self) -> i64 {
        self.level_widths().iter().sum()
    }

    pub fn bridge_number(&self) -> usize {
        self.events.iter().filter(|e| **e == Critical::Max).count()
    }

    pub fn thin_thick(&self) -> ThinThickTuple {
        let widths = self.level_widths();
        let mut thick = Vec::new();
        let mut thin = Vec::new();
        for (i, pair) in self.events.windows(2).enumerate() {
            match (pair[0], pair[1]) {
                (Critical::Min, Critical::Max) => thick.push(widths[i]),
                (Critical::Max, Critical::Min) => thin.push(widths[i]),
                _ => {}
            }
        }
        ThinThickTuple { thick, thin }
    }

    /// Slides the minimum at `index` above the maximum at `index + 1`.
    ///
    /// Keeps the bridge number and lowers the width by exactly 4.
    pub fn weak_reduction_move(&self, index: usize) -> Result<Self, MorseError> {
        if index + 1 >= self.events.len() {
            return Err(MorseError::IndexOutOfRange(index));
        }
        if (self.events[index], self.events[index + 1]) != (Critical::Min, Critical::Max) {
            return Err(MorseError::NotMinMaxPair { index, next: index + 1 });
        }
        let below: i64 = self.events[..index].iter().map(|e| e.delta()).sum();
        if below - 2 <= 0 {
            return Err(MorseError::MoveEmptiesLevel {
                index,
                width: below - 2,
            });
        }
        let mut events = self.events.clone();
        events.swap(index, index + 1);
        Ok(MorseEmbedding { events })
    }

    /// Indices where [`Self::weak_reduction_move`] applies.
    pub fn reducible_pairs(&self) -> Vec<usize> {
        let mut below = 0;
        let mut out = Vec::new();
        for (i, pair) in self.events.windows(2).enumerate() {
            if pair == [Critical::Min, Critical::Max] && below > 2 {
                out.push(i);
            }
            below += pair[0].delta();
        }
        out
    }
}

impl FromStr for MorseEmbedding {
    type Err = MorseError;

    /// Parses `mmMmMM`: `m` is a minimum, `M` a maximum.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let events = s
            .trim()
            .chars()
            .map(|c| match c {
                'm' => Ok(Critical::Min),
                'M' => Ok(Critical::Max),
                other => Err(MorseError::BadEvent(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(events)
    }
}

impl fmt::Display for MorseEmbedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.events.iter().try_for_each(|e| write!(f, "{}", e.as_char()))
    }
}

/// Widths of thick levels `a_1..a_m` and thin levels `b_1..b_{m-1}`, bottom to top.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThinThickTuple {
    thick: Vec<i64>,
    thin: Vec<i64>,
}

impl ThinThickTuple {
    pub fn new(thick: Vec<i64>, thin: Vec<i64>) -> Result<Self, MorseError> {
        let t = ThinThickTuple { thick, thin };
        t.check()?;
        Ok(t)
    }

    fn check(&self) -> Result<(), MorseError> {
        let bad = |msg: String| Err(MorseError::MalformedTuple(msg));
        if self.thick.is_empty() {
            return bad("no thick levels".into());
        }
        if self.thin.len() + 1 != self.thick.len() {
            return bad(format!(
                "{} thick levels need {} thin levels, got {}",
                self.thick.len(),
                self.thick.len() - 1,
                self.thin.len()
            ));
        }
        for &w in self.thick.iter().chain(&self.thin) {
            if w < 2 || w % 2 != 0 {
                return bad(format!("width {w} is not an even integer >= 2"));
            }
        }
        for (i, &b) in self.thin.iter().enumerate() {
            let (below, above) = (self.thick[i], self.thick[i + 1]);
            if below < b + 2 || above < b + 2 {
                return bad(format!(
                    "thin level {b} is not dominated by neighbouring thick levels {below}, {above}"
                ));
            }
        }
        Ok(())
    }

    pub fn thick(&self) -> &[i64] {
        &self.thick
    }

    pub fn thin(&self) -> &[i64] {
        &self.thin
    }

    /// Interleaved `(a_1, b_1, a_2, …, a_m)`.
    pub fn interleaved(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.thick.len() + self.thin.len());
        for (i, &a) in self.thick.iter().enumerate() {
            out.push(a);
            if let Some(&b) = self.thin.get(i) {
                out.push(b);
            }
        }
        out
    }

    /// Splits an interleaved sequence; odd positions are thin.
    pub fn from_interleaved(values: &[i64]) -> Result<Self, MorseError> {
        if values.len().is_multiple_of(2) {
            return Err(MorseError::MalformedTuple(format!(
                "interleaved tuple must have odd length, got {}",
                values.len()
            )));
        }
        let thick = values.iter().step_by(2).copied().collect();
        let thin = values.iter().skip(1).step_by(2).copied().collect();
        Self::new(thick, thin)
    }

    /// `½(Σ a_i² − Σ b_i²)`.
    pub fn width(&self) -> i64 {
        let sq = |v: &[i64]| v.iter().map(|x| x * x).sum::<i64>();
        (sq(&self.thick) - sq(&self.thin)) / 2
    }
}

impl FromStr for ThinThickTuple {
    type Err = MorseError;

    /// Parses `10,8,10,4,6`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let values = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| MorseError::MalformedTuple(format!("bad entry {:?}", t.trim())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_interleaved(&values)
    }
}

impl fmt::Display for ThinThickTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.interleaved().iter().map(i64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

pub fn level_widths(e: &MorseEmbedding) -> Vec<i64> {
    e.level_widths()
}

pub fn width(e: &MorseEmbedding) -> i64 {
    e.width()
}

pub fn bridge_number(e: &MorseEmbedding) -> usize {
    e.bridge_number()
}

pub fn thin_thick(e: &MorseEmbedding) -> ThinThickTuple {
    e.thin_thick()
}

pub fn width_from_tuple(t: &ThinThickTuple) -> i64 {
    t.width()
}

/// Any embedding with a thick level of width `a` has width at least `a²/2`.
pub fn thick_lower_bound(a: i64) -> Result<i64, MorseError> {
    if a < 2 || a % 2 != 0 {
        return Err(MorseError::BadThickWidth(a));
    }
    Ok(a * a / 2)
}

pub fn weak_reduction_move(e: &MorseEmbedding, index: usize) -> Result<MorseEmbedding, MorseError> {
    e.weak_reduction_move(index)
}

/// How a bound on `−χ` of a punctured sphere is stated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChiBound {
    /// `−χ ≥ value`
    AtLeast,
    /// `−χ > value`
    Exceeds,
}

/// Fewest punctures (an even count, since a knot meets a sphere evenly) of a
/// sphere whose `−χ = p − 2` satisfies the bound.
pub fn punctures_from_chi(neg_chi: i64, bound: ChiBound) -> i64 {
    let min_p = match bound {
        ChiBound::AtLeast => neg_chi + 2,
        ChiBound::Exceeds => neg_chi + 3,
    };
    let p = min_p.max(2);
    p + p.rem_euclid(2)
}
