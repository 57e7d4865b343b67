//! Bridge-number prediction for the sum of two tangles along a common
//! 2n-punctured sphere.

use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

/// Where a distance lower bound comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// `⌈n/(2(k−2))⌉` for a highly twisted 2k-plat.
    JohnsonMoriah { k: usize, rows: usize },
    /// `n/6` for the drilled 10-plat.
    DrilledPlat { rows: usize },
    /// Supplied by the caller, with a note on its source.
    Asserted(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceBound {
    pub value: Ratio<i64>,
    pub provenance: Provenance,
}

impl DistanceBound {
    pub fn asserted(value: i64, note: impl Into<String>) -> Self {
        DistanceBound {
            value: Ratio::from_integer(value),
            provenance: Provenance::Asserted(note.into()),
        }
    }

    pub fn is_certified(&self) -> bool {
        !matches!(self.provenance, Provenance::Asserted(_))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TangleError {
    #[error("tangle needs at least one strand")]
    NoStrands,
    #[error("a {beta}-bridge sphere cannot exist for a {strands}-strand tangle (needs beta >= n)")]
    BridgeBelowStrands { strands: u32, beta: u32 },
    #[error("distance lower bound must be nonnegative, got {0}")]
    NegativeDistance(Ratio<i64>),
    #[error("hypotheses failed: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Hypotheses(Vec<Hypothesis>),
}

/// A certificate for one side of the sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangleCert {
    strands: u32,
    bridge: u32,
    distance: DistanceBound,
}

impl TangleCert {
    pub fn new(strands: u32, bridge: u32, distance: DistanceBound) -> Result<Self, TangleError> {
        if strands == 0 {
            return Err(TangleError::NoStrands);
        }
        if bridge < strands {
            return Err(TangleError::BridgeBelowStrands { strands, beta: bridge });
        }
        if distance.value < Ratio::from_integer(0) {
            return Err(TangleError::NegativeDistance(distance.value));
        }
        Ok(TangleCert {
            strands,
            bridge,
            distance,
        })
    }

    pub fn strands(&self) -> u32 {
        self.strands
    }

    pub fn bridge(&self) -> u32 {
        self.bridge
    }

    pub fn distance(&self) -> &DistanceBound {
        &self.distance
    }
}

/// A named hypothesis of the bridge-number formula and its outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Hypothesis {
    StrandsMatch {
        n1: u32,
        n2: u32,
    },
    MoreThanOneStrand {
        n: u32,
    },
    BridgeExceedsStrands {
        side: u8,
        beta: u32,
        n: u32,
    },
    DistanceExceedsThreshold {
        side: u8,
        bound: Ratio<i64>,
        threshold: i64,
    },
}

impl Hypothesis {
    pub fn id(&self) -> &'static str {
        match self {
            Hypothesis::StrandsMatch { .. } => "strands-match",
            Hypothesis::MoreThanOneStrand { .. } => "n-greater-than-1",
            Hypothesis::BridgeExceedsStrands { .. } => "bridge-exceeds-n",
            Hypothesis::DistanceExceedsThreshold { .. } => "distance-exceeds-threshold",
        }
    }

    pub fn holds(&self) -> bool {
        match *self {
            Hypothesis::StrandsMatch { n1, n2 } => n1 == n2,
            Hypothesis::MoreThanOneStrand { n } => n > 1,
            Hypothesis::BridgeExceedsStrands { beta, n, .. } => beta > n,
            Hypothesis::DistanceExceedsThreshold { bound, threshold, .. } => bound > Ratio::from_integer(threshold),
        }
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hypothesis::StrandsMatch { n1, n2 } => write!(f, "{}: n1 = {n1}, n2 = {n2}", self.id()),
            Hypothesis::MoreThanOneStrand { n } => write!(f, "{}: n = {n}", self.id()),
            Hypothesis::BridgeExceedsStrands { side, beta, n } => {
                write!(f, "{} (side {side}): beta = {beta}, n = {n}", self.id())
            }
            Hypothesis::DistanceExceedsThreshold { side, bound, threshold } => {
                write!(f, "{} (side {side}): d >= {bound}, needs d > {threshold}", self.id())
            }
        }
    }
}

/// `2(β₁ + β₂ − n)` and whether some `β_i ≤ n` makes the formula inapplicable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Threshold {
    pub value: i64,
    pub bridge_warning: bool,
}

pub fn required_distance(t1: &TangleCert, t2: &TangleCert) -> Result<Threshold, TangleError> {
    if t1.strands != t2.strands {
        return Err(TangleError::Hypotheses(vec![Hypothesis::StrandsMatch {
            n1: t1.strands,
            n2: t2.strands,
        }]));
    }
    let n = t1.strands as i64;
    Ok(Threshold {
        value: 2 * (t1.bridge as i64 + t2.bridge as i64 - n),
        bridge_warning: t1.bridge <= t1.strands || t2.bridge <= t2.strands,
    })
}

/// Every hypothesis evaluated, in a fixed order.
pub fn check_hypotheses(t1: &TangleCert, t2: &TangleCert) -> Vec<Hypothesis> {
    let mut out = vec![Hypothesis::StrandsMatch {
        n1: t1.strands,
        n2: t2.strands,
    }];
    let n = t1.strands.min(t2.strands);
    out.push(Hypothesis::MoreThanOneStrand { n });
    for (side, t) in [(1u8, t1), (2, t2)] {
        out.push(Hypothesis::BridgeExceedsStrands {
            side,
            beta: t.bridge,
            n: t.strands,
        });
    }
    let threshold = 2 * (t1.bridge as i64 + t2.bridge as i64 - n as i64);
    for (side, t) in [(1u8, t1), (2, t2)] {
        out.push(Hypothesis::DistanceExceedsThreshold {
            side,
            bound: t.distance.value,
            threshold,
        });
    }
    out
}

/// `β₁ + β₂ − n` when every hypothesis holds; otherwise all failures.
///
/// A distance bound equal to the threshold counts as a failure.
pub fn predict_bridge_number(t1: &TangleCert, t2: &TangleCert) -> Result<u32, TangleError> {
    let failed: Vec<Hypothesis> = check_hypotheses(t1, t2).into_iter().filter(|h| !h.holds()).collect();
    if !failed.is_empty() {
        return Err(TangleError::Hypotheses(failed));
    }
    Ok(t1.bridge + t2.bridge - t1.strands)
}
