//! The knot family built from a drilled 10-plat, its candidate thin embedding,
//! the six strand-pair sub-knots, and the width case analysis.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::BraidWord;
use crate::diagram::{
    certify_nontrivial, is_alternating, is_reduced, kauffman_bracket, Certificate, DiagramError, PdDiagram,
};
use crate::morse::{thick_lower_bound, width_from_tuple, Critical, MorseEmbedding, ThinThickTuple};
use crate::plat::{b3_distance_bound, jm_distance, row_len, strand_arcs, PlatError, PlatSpec};

/// Columns of the plat (a 10-plat).
pub const K: usize = 5;
/// Rows must exceed this for the drilled distance bound to exceed 12.
pub const MIN_ROWS_EXCLUSIVE: usize = 72;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("parameters violate: {0}")]
    InvalidParams(String),
    #[error("strand pair must satisfy 1 <= i < j <= 4, got ({0}, {1})")]
    StrandPair(usize, usize),
    #[error("invalid parameter file: {0}")]
    Format(String),
    #[error(transparent)]
    Plat(#[from] PlatError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Braid word for one of the 2-strand tangles glued into the drilled spheres.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangleWord {
    pub strands: usize,
    pub letters: String,
}

impl TangleWord {
    pub fn braid(&self) -> Result<BraidWord, FamilyError> {
        BraidWord::parse(self.strands, &self.letters).map_err(|e| FamilyError::Format(e.to_string()))
    }
}

/// Twist matrix of the drilled 10-plat plus optional glued tangles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ParamsFile", into = "ParamsFile")]
pub struct FamilyParams {
    pub twists: Vec<Vec<i32>>,
    pub b1_word: Option<TangleWord>,
    pub b2_word: Option<TangleWord>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct ParamsFile {
    n: usize,
    twists: Vec<Vec<i32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    b1_word: Option<TangleWord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    b2_word: Option<TangleWord>,
}

impl TryFrom<ParamsFile> for FamilyParams {
    type Error = FamilyError;
    fn try_from(f: ParamsFile) -> Result<Self, FamilyError> {
        if f.n != f.twists.len() {
            return Err(FamilyError::Format(format!(
                "declared n = {} but {} rows of twists were given",
                f.n,
                f.twists.len()
            )));
        }
        Ok(FamilyParams {
            twists: f.twists,
            b1_word: f.b1_word,
            b2_word: f.b2_word,
        })
    }
}

impl From<FamilyParams> for ParamsFile {
    fn from(p: FamilyParams) -> Self {
        ParamsFile {
            n: p.twists.len(),
            twists: p.twists,
            b1_word: p.b1_word,
            b2_word: p.b2_word,
        }
    }
}

impl Default for FamilyParams {
    fn default() -> Self {
        Self::minimal(MIN_ROWS_EXCLUSIVE + 1)
    }
}

impl FamilyParams {
    /// Smallest admissible magnitudes (3 for odd slots, 4 for even) on `n` rows.
    pub fn minimal(n: usize) -> Self {
        let mut twists = vec![vec![3, 4, 3, 4], vec![-4, -4, 3, 3, -4], vec![4, 3, 3, 3]];
        for row in 4..=n {
            twists.push(if row % 2 == 0 { vec![-4; 5] } else { vec![4; 4] });
        }
        twists.truncate(n);
        FamilyParams {
            twists,
            b1_word: None,
            b2_word: None,
        }
    }

    pub fn n(&self) -> usize {
        self.twists.len()
    }

    pub fn plat_spec(&self) -> Result<PlatSpec, PlatError> {
        PlatSpec::new(K, self.twists.clone(), true)
    }

    pub fn from_toml(text: &str) -> Result<Self, FamilyError> {
        toml::from_str(text).map_err(|e| FamilyError::Format(e.to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("family parameters serialize")
    }

    fn get(&self, row: usize, col: usize) -> i32 {
        self.twists[row - 1][col - 1]
    }
}

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleResult {
    pub id: String,
    pub status: Status,
    pub kind: RuleKind,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// Whether a line was computed here or is an encoded topological fact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleKind {
    Computed,
    Encoded,
}

impl RuleResult {
    fn computed(id: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        RuleResult {
            id: id.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            kind: RuleKind::Computed,
            detail: detail.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for RuleResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        let kind = match self.kind {
            RuleKind::Computed => "computed",
            RuleKind::Encoded => "encoded",
        };
        write!(f, "{} {status} [{kind}] {}", self.id, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub rules: Vec<RuleResult>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.rules.iter().all(RuleResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RuleResult> {
        self.rules.iter().filter(|r| !r.passed())
    }

    pub fn rule(&self, id: &str) -> Option<&RuleResult> {
        self.rules.iter().find(|r| r.id == id)
    }
}

const ODD_SLOTS: [(usize, usize); 7] = [(1, 1), (1, 3), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4)];
const EVEN_SLOTS: [(usize, usize); 6] = [(1, 2), (1, 4), (2, 1), (2, 2), (2, 5), (3, 1)];

fn slot_list(slots: &[(usize, usize)]) -> String {
    slots
        .iter()
        .map(|(i, j)| format!("a[{i},{j}]"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn check_slots(
    p: &FamilyParams,
    id: &str,
    what: &str,
    slots: impl IntoIterator<Item = (usize, usize)>,
    ok: impl Fn(i32) -> bool,
) -> RuleResult {
    let bad: Vec<(usize, usize)> = slots.into_iter().filter(|&(i, j)| !ok(p.get(i, j))).collect();
    if bad.is_empty() {
        RuleResult::computed(id, true, what)
    } else {
        RuleResult::computed(id, false, format!("{what}; violated at {}", slot_list(&bad)))
    }
}

/// Evaluates every parameter rule. Rows 1–3 carry individual parity and sign
/// requirements; deeper rows alternate negative and positive even twists.
pub fn validate_params(p: &FamilyParams) -> ValidationReport {
    let mut rules = Vec::new();
    let n = p.n();
    let shape_bad: Vec<String> = p
        .twists
        .iter()
        .enumerate()
        .filter(|(i, row)| row.len() != row_len(K, i + 1))
        .map(|(i, row)| format!("row {} has {} entries, needs {}", i + 1, row.len(), row_len(K, i + 1)))
        .collect();
    let shape_ok = shape_bad.is_empty() && n >= 3;
    let detail = if n < 3 {
        format!("needs at least 3 rows, found {n}")
    } else if shape_bad.is_empty() {
        "odd rows hold 4 regions, even rows 5".into()
    } else {
        shape_bad.join("; ")
    };
    rules.push(RuleResult::computed("row-shape", shape_ok, detail));
    rules.push(RuleResult::computed(
        "rows-exceed-72",
        n > MIN_ROWS_EXCLUSIVE,
        format!("n = {n}, needs n > {MIN_ROWS_EXCLUSIVE}"),
    ));
    if !shape_ok {
        return ValidationReport { rules };
    }
    rules.push(check_slots(
        p,
        "odd-slots-odd-positive",
        &format!("{} odd and >= 3", slot_list(&ODD_SLOTS)),
        ODD_SLOTS,
        |a| a >= 3 && a % 2 == 1,
    ));
    rules.push(check_slots(
        p,
        "even-slots-even-large",
        &format!("{} even with |a| > 3", slot_list(&EVEN_SLOTS)),
        EVEN_SLOTS,
        |a| a % 2 == 0 && a.abs() > 3,
    ));
    rules.push(check_slots(p, "a21-negative", "a[2,1] < 0", [(2, 1)], |a| a < 0));
    rules.push(check_slots(p, "a22-negative", "a[2,2] < 0", [(2, 2)], |a| a < 0));
    rules.push(check_slots(p, "a31-positive", "a[3,1] > 0", [(3, 1)], |a| a > 0));
    let deep = |parity: usize| {
        (4..=n)
            .filter(move |i| i % 2 == parity)
            .flat_map(|i| (1..=row_len(K, i)).map(move |j| (i, j)))
    };
    rules.push(check_slots(
        p,
        "even-rows-negative-even",
        "rows i > 3, i even: a even and < -3",
        deep(0),
        |a| a % 2 == 0 && a < -3,
    ));
    rules.push(check_slots(
        p,
        "odd-rows-positive-even",
        "rows i > 4, i odd: a even and >= 4",
        deep(1),
        |a| a % 2 == 0 && a >= 4,
    ));
    let all = (1..=n).flat_map(|i| (1..=row_len(K, i)).map(move |j| (i, j)));
    rules.push(check_slots(p, "all-twists-at-least-3", "every |a| >= 3", all, |a| {
        a.abs() >= 3
    }));
    for (id, word) in [("tangle-b1-word", &p.b1_word), ("tangle-b2-word", &p.b2_word)] {
        rules.push(match word {
            None => RuleResult::computed(
                id,
                true,
                "absent; the tangle enters as an asserted distance certificate",
            ),
            Some(w) => match w.braid() {
                Ok(b) => RuleResult::computed(id, true, format!("{} letters on {} strands", b.len(), b.strand_count())),
                Err(e) => RuleResult::computed(id, false, e.to_string()),
            },
        });
    }
    ValidationReport { rules }
}

/// Five minima, a maximum, a minimum, three maxima, a minimum, three maxima.
pub fn candidate_embedding() -> MorseEmbedding {
    use Critical::{Max, Min};
    let mut events = vec![Min; 5];
    events.extend([Max, Min, Max, Max, Max, Min, Max, Max, Max]);
    MorseEmbedding::new(events).expect("candidate embedding is balanced")
}

/// The knot formed by strands `t_i`, `t_j` and the two connecting arcs, with
/// nugatory crossings removed and labels canonicalized.
pub fn build_kij(p: &FamilyParams, i: usize, j: usize) -> Result<PdDiagram, FamilyError> {
    if !(1 <= i && i < j && j <= 4) {
        return Err(FamilyError::StrandPair(i, j));
    }
    let report = validate_params(p);
    if let Some(bad) = report.failures().next() {
        return Err(FamilyError::InvalidParams(bad.to_string()));
    }
    let tangle = strand_arcs(&p.plat_spec()?)?;
    let raw = tangle.pair_knot(i, j)?;
    Ok(raw.reduce_nugatory().canonical())
}

/// All six strand pairs in order.
pub const PAIRS: [(usize, usize); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

/// One line of the width case analysis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseRecord {
    pub id: &'static str,
    pub description: &'static str,
    pub witness: ThinThickTuple,
    pub bound: i64,
}

fn tuple(thick: &[i64], thin: &[i64]) -> ThinThickTuple {
    ThinThickTuple::new(thick.to_vec(), thin.to_vec()).expect("witness tuples are valid")
}

/// Width lower bounds per case, each computed from its witness tuple.
pub fn case_table() -> Vec<CaseRecord> {
    let rows: [(&str, &str, &[i64], &[i64]); 7] = [
        (
            "case-1",
            "no thin level: the thick level has at least 14 punctures",
            &[14],
            &[],
        ),
        (
            "case-3a",
            "one thin level, isotopic to a drilled sphere",
            &[6, 12],
            &[4],
        ),
        (
            "case-3b",
            "one thin level with at least 16 punctures on a thick level",
            &[16],
            &[],
        ),
        (
            "case-4",
            "two or more thin levels, one of width at least 8",
            &[6, 10, 10],
            &[4, 8],
        ),
        (
            "case-5",
            "exactly two thin levels, both of width 4",
            &[6, 12, 6],
            &[4, 4],
        ),
        ("case-6", "three or more thin levels", &[6, 6, 10, 10], &[4, 4, 8]),
        ("case-7", "two thin levels of widths 4 and 6", &[6, 8, 12], &[4, 6]),
    ];
    rows.into_iter()
        .map(|(id, description, thick, thin)| {
            let witness = tuple(thick, thin);
            CaseRecord {
                id,
                description,
                bound: width_from_tuple(&witness),
                witness,
            }
        })
        .collect()
}

/// Structural rules the enumerator enforces; each can be switched off to
/// show it is needed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuleSet {
    /// A tuple without thin levels needs a thick level of width ≥ 14.
    pub no_thin_needs_14: bool,
    /// Tuples matching a case predicate must meet that case's bound.
    pub case_bounds: bool,
    /// Two thin levels of width 6 would be isotopic, so the embedding is not thin.
    pub no_two_thin_sixes: bool,
}

impl Default for RuleSet {
    fn default() -> Self {
        RuleSet {
            no_thin_needs_14: true,
            case_bounds: true,
            no_two_thin_sixes: true,
        }
    }
}

/// Case bounds whose predicate the tuple satisfies.
pub fn applicable_cases(t: &ThinThickTuple) -> Vec<(&'static str, i64)> {
    let table = case_table();
    let bound = |id: &str| table.iter().find(|r| r.id == id).map(|r| r.bound).unwrap_or(0);
    let thin = t.thin();
    let m = t.thick().len();
    let mut out = Vec::new();
    if m == 1 {
        out.push(("case-1", bound("case-1")));
    }
    if m == 2 && thin[0] == 4 {
        out.push(("case-3a", bound("case-3a")));
    }
    if m == 2 && thin[0] >= 6 {
        out.push(("case-3b", bound("case-3b")));
    }
    if m >= 3 && thin.iter().any(|&b| b >= 8) {
        out.push(("case-4", bound("case-4")));
    }
    if m == 3 && thin == [4, 4] {
        out.push(("case-5", bound("case-5")));
    }
    if m >= 4 {
        out.push(("case-6", bound("case-6")));
    }
    if m == 3 && (thin == [4, 6] || thin == [6, 4]) {
        out.push(("case-7", bound("case-7")));
    }
    out
}

/// Whether the tuple survives every enabled rule.
pub fn admissible(t: &ThinThickTuple, rules: &RuleSet) -> bool {
    if t.thin().iter().any(|&b| b < 4) || t.thick().iter().any(|&a| a < 6) {
        return false;
    }
    if rules.no_thin_needs_14 && t.thin().is_empty() && t.thick()[0] < 14 {
        return false;
    }
    if rules.no_two_thin_sixes && t.thin().iter().filter(|&&b| b == 6).count() >= 2 {
        return false;
    }
    if rules.case_bounds {
        let w = t.width();
        if applicable_cases(t).iter().any(|&(_, b)| w < b) {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub min_width: i64,
    pub attaining: Vec<ThinThickTuple>,
    pub examined: usize,
    pub admitted: usize,
}

pub fn enumerate_min_width(max_thick_levels: usize, max_entry: i64) -> Option<Enumeration> {
    enumerate_min_width_with(max_thick_levels, max_entry, &RuleSet::default())
}

/// Exhaustive search over even tuples with at most `max_thick_levels` thick
/// entries, all entries at most `max_entry`.
pub fn enumerate_min_width_with(max_thick_levels: usize, max_entry: i64, rules: &RuleSet) -> Option<Enumeration> {
    let mut best: Option<Enumeration> = None;
    let mut examined = 0;
    let mut admitted = 0;
    let mut seq = Vec::new();
    for m in 1..=max_thick_levels {
        grow(&mut seq, 2 * m - 1, max_entry, &mut |vals| {
            examined += 1;
            let Ok(t) = ThinThickTuple::from_interleaved(vals) else {
                return;
            };
            if !admissible(&t, rules) {
                return;
            }
            admitted += 1;
            let w = t.width();
            match &mut best {
                Some(b) if w > b.min_width => {}
                Some(b) if w == b.min_width => b.attaining.push(t),
                _ => {
                    best = Some(Enumeration {
                        min_width: w,
                        attaining: vec![t],
                        examined: 0,
                        admitted: 0,
                    })
                }
            }
        });
    }
    best.map(|mut b| {
        b.examined = examined;
        b.admitted = admitted;
        b
    })
}

/// Interleaved sequences of length `len`: thick entries from 6, thin from 4,
/// each thin entry at least 2 below both neighbours.
fn grow(seq: &mut Vec<i64>, len: usize, max_entry: i64, visit: &mut dyn FnMut(&[i64])) {
    if seq.len() == len {
        visit(seq);
        return;
    }
    let thick = seq.len().is_multiple_of(2);
    let (lo, hi) = if thick {
        (seq.last().map_or(6, |&b| (b + 2).max(6)), max_entry)
    } else {
        (4, seq.last().copied().unwrap_or(0) - 2)
    };
    let mut v = lo;
    while v <= hi {
        seq.push(v);
        grow(seq, len, max_entry, visit);
        seq.pop();
        v += 2;
    }
}

/// Per-item verification of the family's width claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub lines: Vec<RuleResult>,
    pub headline: String,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.lines
            .iter()
            .all(|l| l.status == Status::Pass || l.kind == RuleKind::Encoded)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        writeln!(f, "{}", self.headline)
    }
}

/// Topological facts the width argument relies on, entered as rules.
const ENCODED: [(&str, &str); 7] = [
    (
        "prime-thin-at-least-4",
        "K is prime, so every thin level has width >= 4",
    ),
    (
        "thick-at-least-6",
        "a thick level bounding a nontrivial tangle has width >= 6",
    ),
    (
        "essential-thin-dichotomy",
        "an essential thin level is isotopic to a drilled sphere or has -chi > 10",
    ),
    (
        "high-distance-thick-levels",
        "a thick level meeting the drilled plat compresses to its bridge sphere or has width >= 14",
    ),
    (
        "thin-sixes-isotopic",
        "two thin levels of width 6 are isotopic, so the embedding is not thin",
    ),
    (
        "tube-along-some-strand",
        "a width-6 thin level is a drilled sphere tubed along some strand t_i",
    ),
    (
        "strand-pair-knots-nontrivial",
        "knotted strand-pair arcs force the final case's thick level up",
    ),
];

/// The six strand-pair sub-knots and their certificates.
#[derive(Debug, Clone)]
pub struct KijCheck {
    pub pair: (usize, usize),
    pub crossings: usize,
    pub components: usize,
    pub reduced: bool,
    pub alternating: bool,
    pub certificate: Option<Certificate>,
    pub jones_nontrivial: bool,
    pub bracket_span: Option<i64>,
}

impl KijCheck {
    pub fn ok(&self) -> bool {
        self.components == 1
            && self.reduced
            && self.alternating
            && matches!(self.certificate, Some(Certificate::ReducedAlternating { .. }))
            && self.jones_nontrivial
            && self.bracket_span == Some(4 * self.crossings as i64)
    }
}

pub fn check_kij(p: &FamilyParams, i: usize, j: usize) -> Result<KijCheck, FamilyError> {
    let d = build_kij(p, i, j)?;
    let components = d.component_count();
    let mut check = KijCheck {
        pair: (i, j),
        crossings: d.crossing_count(),
        components,
        reduced: is_reduced(&d)?,
        alternating: is_alternating(&d)?,
        certificate: None,
        jones_nontrivial: false,
        bracket_span: None,
    };
    if components == 1 {
        let c = certify_nontrivial(&d)?;
        check.jones_nontrivial = c.jones_nontrivial();
        check.certificate = Some(c.certificate);
        check.bracket_span = kauffman_bracket(&d)?.span();
    }
    Ok(check)
}

/// Checks all six pairs concurrently; results come back in [`PAIRS`] order.
pub fn check_all_kij(p: &FamilyParams) -> Vec<Result<KijCheck, FamilyError>> {
    std::thread::scope(|s| {
        let handles: Vec<_> = PAIRS
            .iter()
            .map(|&(i, j)| s.spawn(move || check_kij(p, i, j)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("strand-pair check panicked"))
            .collect()
    })
}

pub const HEADLINE: &str = "w(K) = 78 confirmed (conditional on the topological lemmas encoded as constraints)";

pub fn verify_family(p: &FamilyParams) -> VerificationReport {
    let mut lines = Vec::new();
    let validation = validate_params(p);
    let params_ok = validation.passed();
    lines.extend(validation.rules);

    let n = p.n();
    let bound = b3_distance_bound(n);
    lines.push(RuleResult::computed(
        "drilled-distance-exceeds-12",
        bound > Ratio::from_integer(12),
        format!("d >= n/6 = {bound}"),
    ));
    let jm = jm_distance(K, n).unwrap_or(0);
    lines.push(RuleResult::computed(
        "plat-distance-exceeds-12",
        jm > 12,
        format!("ceil(n/(2(k-2))) = {jm}"),
    ));

    let k = candidate_embedding();
    let tt = k.thin_thick();
    lines.push(RuleResult::computed(
        "candidate-tuple",
        tt.to_string() == "10,8,10,4,6",
        format!("thin-thick tuple {tt}"),
    ));
    lines.push(RuleResult::computed(
        "candidate-width",
        k.width() == 78 && width_from_tuple(&tt) == 78,
        format!("level sum {} = tuple formula {}", k.width(), width_from_tuple(&tt)),
    ));
    lines.push(RuleResult::computed(
        "candidate-bridge-number",
        k.bridge_number() == 7,
        format!("{} maxima", k.bridge_number()),
    ));

    if params_ok {
        for (&(i, j), res) in PAIRS.iter().zip(check_all_kij(p)) {
            let id = format!("k{i}{j}-nontrivial");
            lines.push(match res {
                Ok(c) => RuleResult::computed(
                    id,
                    c.ok(),
                    format!(
                        "{} crossings, {} component(s), reduced {}, alternating {}, jones != 1 {}, span {:?}",
                        c.crossings, c.components, c.reduced, c.alternating, c.jones_nontrivial, c.bracket_span
                    ),
                ),
                Err(e) => RuleResult::computed(id, false, e.to_string()),
            });
        }
    } else {
        for (i, j) in PAIRS {
            lines.push(RuleResult {
                id: format!("k{i}{j}-nontrivial"),
                status: Status::Skip,
                kind: RuleKind::Computed,
                detail: "parameters invalid".into(),
            });
        }
    }

    let table = case_table();
    for r in &table {
        lines.push(RuleResult::computed(
            format!("{}-bound", r.id),
            r.bound == width_from_tuple(&r.witness),
            format!("{} -> {} ({})", r.witness, r.bound, r.description),
        ));
    }
    let c1 = thick_lower_bound(14).unwrap_or(0);
    lines.push(RuleResult::computed(
        "case-1-thick-bound",
        c1 == table[0].bound,
        format!("14^2/2 = {c1}"),
    ));
    let table_min = table.iter().map(|r| r.bound).min().unwrap_or(0);
    let en = enumerate_min_width(3, 20);
    let (en_ok, en_detail) = match &en {
        Some(e) => {
            let has = e.attaining.iter().any(|t| t.to_string() == "10,8,10,4,6");
            let list: Vec<String> = e.attaining.iter().map(|t| format!("({t})")).collect();
            (
                e.min_width == 78 && has && e.min_width == table_min,
                format!(
                    "min {} over {} admitted tuples, attained by {}; case table min {table_min}",
                    e.min_width,
                    e.admitted,
                    list.join(" ")
                ),
            )
        }
        None => (false, "no admissible tuple".to_string()),
    };
    lines.push(RuleResult::computed("enumerated-min-width", en_ok, en_detail));

    for (id, detail) in ENCODED {
        lines.push(RuleResult {
            id: id.into(),
            status: Status::Pass,
            kind: RuleKind::Encoded,
            detail: detail.into(),
        });
    }

    let ok = lines.iter().all(|l| l.status == Status::Pass);
    let headline = if ok {
        HEADLINE.to_string()
    } else {
        "w(K) = 78 NOT confirmed: see failing lines".to_string()
    };
    VerificationReport { lines, headline }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_params_validate() {
        let p = FamilyParams::default();
        assert_eq!(p.n(), 73);
        let r = validate_params(&p);
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn sign_and_row_rules_fail_by_name() {
        let mut p = FamilyParams::default();
        p.twists[1][0] = 4;
        let r = validate_params(&p);
        assert!(!r.rule("a21-negative").unwrap().passed());
        assert_eq!(r.failures().count(), 1);
        let r = validate_params(&FamilyParams::minimal(72));
        assert!(!r.rule("rows-exceed-72").unwrap().passed());
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn candidate_embedding_values() {
        let k = candidate_embedding();
        assert_eq!(k.thin_thick().to_string(), "10,8,10,4,6");
        assert_eq!(k.width(), 78);
        assert_eq!(k.bridge_number(), 7);
    }

    #[test]
    fn case_bounds() {
        let b: Vec<i64> = case_table().iter().map(|r| r.bound).collect();
        assert_eq!(b, vec![98, 82, 128, 78, 92, 88, 96]);
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_min_width(1, 20).unwrap().min_width, 98);
        let no_c1 = RuleSet {
            no_thin_needs_14: false,
            case_bounds: false,
            ..RuleSet::default()
        };
        assert_eq!(enumerate_min_width_with(3, 12, &no_c1).unwrap().min_width, 18);
    }

    #[test]
    fn params_toml_round_trip() {
        let mut p = FamilyParams::minimal(5);
        p.b1_word = Some(TangleWord {
            strands: 6,
            letters: "1,2,-3".into(),
        });
        let text = p.to_toml();
        assert_eq!(FamilyParams::from_toml(&text).unwrap(), p);
    }

    #[test]
    fn bad_pairs_rejected() {
        let p = FamilyParams::default();
        assert!(matches!(build_kij(&p, 2, 2), Err(FamilyError::StrandPair(2, 2))));
        assert!(matches!(build_kij(&p, 0, 1), Err(FamilyError::StrandPair(0, 1))));
    }
}
