//! Highly twisted 2k-plats, their closures as planar diagrams, and the
//! drilled tangle obtained from a 10-plat.
//!
//! Row 1 is the top row, next to the maxima. Odd rows hold `k − 1` twist
//! regions on strand pairs `(2j, 2j+1)`, even rows hold `k` regions on pairs
//! `(2j−1, 2j)`. The braid word runs bottom-to-top, so row `n` comes first.
//!
//! A positive letter `σ_p` is drawn with the strand rising from position `p`
//! to `p+1` passing over.

use std::collections::HashMap;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::{BraidError, BraidWord, Permutation};
use crate::diagram::{Crossing, DiagramError, Label, PdDiagram, UnionFind};

/// Top positions whose caps are drilled out to form the first boundary sphere.
pub const S1_POSITIONS: [usize; 4] = [3, 4, 5, 6];
/// Top positions whose caps are drilled out to form the second boundary sphere.
pub const S2_POSITIONS: [usize; 4] = [7, 8, 9, 10];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlatError {
    #[error("a 2k-plat here needs k >= 3, got k = {0}")]
    TooFewColumns(usize),
    #[error("declared n = {declared} rows but {found} rows of twists were given")]
    RowCount { declared: usize, found: usize },
    #[error("row {row} needs {expected} twist regions, found {found}")]
    RowLength { row: usize, expected: usize, found: usize },
    #[error("drilling needs a 10-plat (k = 5), got k = {0}")]
    DrillNeedsK5(usize),
    #[error("plat is not drilled")]
    NotDrilled,
    #[error("|a[{row},{col}]| = {value} is below 3")]
    TwistTooSmall { row: usize, col: usize, value: i32 },
    #[error("plat closure has {0} components, expected a knot")]
    MultiComponent(usize),
    #[error("braid needs an even number of strands, got {0}")]
    OddStrands(usize),
    #[error("drilled tangle is malformed: {0}")]
    TangleShape(String),
    #[error("strand index must be in 1..=4 and distinct, got ({0}, {1})")]
    StrandPair(usize, usize),
    #[error("invalid plat file: {0}")]
    Format(String),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// A 2k-plat with `n` rows of twist regions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PlatFile", into = "PlatFile")]
pub struct PlatSpec {
    k: usize,
    twists: Vec<Vec<i32>>,
    drilled: bool,
}

/// On-disk layout: `k`, `n`, `twists` (ragged, row-major, row 1 first), `drilled`.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct PlatFile {
    k: usize,
    n: usize,
    #[serde(default)]
    drilled: bool,
    twists: Vec<Vec<i32>>,
}

impl TryFrom<PlatFile> for PlatSpec {
    type Error = PlatError;
    fn try_from(f: PlatFile) -> Result<Self, PlatError> {
        if f.n != f.twists.len() {
            return Err(PlatError::RowCount {
                declared: f.n,
                found: f.twists.len(),
            });
        }
        PlatSpec::new(f.k, f.twists, f.drilled)
    }
}

impl From<PlatSpec> for PlatFile {
    fn from(p: PlatSpec) -> Self {
        PlatFile {
            k: p.k,
            n: p.twists.len(),
            drilled: p.drilled,
            twists: p.twists,
        }
    }
}

/// Number of twist regions in a row (1-based).
pub fn row_len(k: usize, row: usize) -> usize {
    if row % 2 == 1 {
        k - 1
    } else {
        k
    }
}

/// Braid generator index for region `col` (1-based) of `row`.
pub fn region_generator(row: usize, col: usize) -> usize {
    if row % 2 == 1 {
        2 * col
    } else {
        2 * col - 1
    }
}

impl PlatSpec {
    pub fn new(k: usize, twists: Vec<Vec<i32>>, drilled: bool) -> Result<Self, PlatError> {
        if k < 3 {
            return Err(PlatError::TooFewColumns(k));
        }
        for (i, row) in twists.iter().enumerate() {
            let expected = row_len(k, i + 1);
            if row.len() != expected {
                return Err(PlatError::RowLength {
                    row: i + 1,
                    expected,
                    found: row.len(),
                });
            }
        }
        if drilled && k != 5 {
            return Err(PlatError::DrillNeedsK5(k));
        }
        Ok(PlatSpec { k, twists, drilled })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.twists.len()
    }

    pub fn strands(&self) -> usize {
        2 * self.k
    }

    pub fn twists(&self) -> &[Vec<i32>] {
        &self.twists
    }

    /// `a[row][col]`, both 1-based.
    pub fn twist(&self, row: usize, col: usize) -> i32 {
        self.twists[row - 1][col - 1]
    }

    pub fn is_drilled(&self) -> bool {
        self.drilled
    }

    pub fn crossing_count(&self) -> usize {
        self.twists.iter().flatten().map(|a| a.unsigned_abs() as usize).sum()
    }

    /// First region with `|a| < 3`, if any.
    pub fn first_small_twist(&self) -> Option<(usize, usize, i32)> {
        self.twists
            .iter()
            .enumerate()
            .find_map(|(i, row)| row.iter().position(|a| a.abs() < 3).map(|j| (i + 1, j + 1, row[j])))
    }

    /// Distance bound for the drilled plat; requires `k = 5`, drilling and
    /// every `|a| ≥ 3`.
    pub fn b3_distance_bound(&self) -> Result<Ratio<i64>, PlatError> {
        if !self.drilled {
            return Err(PlatError::NotDrilled);
        }
        if let Some((row, col, value)) = self.first_small_twist() {
            return Err(PlatError::TwistTooSmall { row, col, value });
        }
        Ok(b3_distance_bound(self.n()))
    }

    pub fn from_toml(text: &str) -> Result<Self, PlatError> {
        toml::from_str(text).map_err(|e| PlatError::Format(e.to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("plat spec serializes")
    }
}

/// The plat's braid, bottom row first; regions within a row left to right.
pub fn plat_braid(p: &PlatSpec) -> BraidWord {
    let mut letters = Vec::with_capacity(p.crossing_count());
    for row in (1..=p.n()).rev() {
        for (j, &a) in p.twists[row - 1].iter().enumerate() {
            let g = region_generator(row, j + 1) as i32;
            let l = if a >= 0 { g } else { -g };
            letters.extend(std::iter::repeat_n(l, a.unsigned_abs() as usize));
        }
    }
    BraidWord::new(p.strands(), letters).expect("plat regions lie on valid strand pairs")
}

/// Components of the plat closure of `word` from its permutation and the
/// standard pairings `(1,2),(3,4),…` at top and bottom.
pub fn closure_component_count(word: &BraidWord) -> usize {
    let m = word.strand_count();
    let perm: Permutation = word.permutation();
    // nodes 0..m are top positions, m..2m bottom positions
    let mut uf = UnionFind::new(2 * m);
    for top in 1..=m {
        uf.union(top - 1, m + perm.apply(top) - 1);
    }
    for i in (0..m.saturating_sub(1)).step_by(2) {
        uf.union(i, i + 1);
        uf.union(m + i, m + i + 1);
    }
    (0..2 * m).filter(|&x| uf.find(x) == x).count()
}

/// Plat closure of `p` as a knot diagram with `Σ|a|` crossings.
pub fn plat_closure(p: &PlatSpec) -> Result<PdDiagram, PlatError> {
    plat_closure_of_word(&plat_braid(p))
}

/// Plat closure of an arbitrary braid on an even number of strands.
pub fn plat_closure_of_word(word: &BraidWord) -> Result<PdDiagram, PlatError> {
    let m = word.strand_count();
    if m % 2 == 1 {
        return Err(PlatError::OddStrands(m));
    }
    let components = closure_component_count(word);
    if components != 1 {
        return Err(PlatError::MultiComponent(components));
    }
    let built = build(word, &[]);
    Ok(PdDiagram::closed(built.crossings)?)
}

struct Built {
    crossings: Vec<Crossing>,
    /// Edge label at each open top position.
    open_top: Vec<(usize, Label)>,
}

/// Draws `word` with bottom caps everywhere and top caps on every pair not
/// listed in `open`; open top positions become boundary endpoints.
fn build(word: &BraidWord, open: &[usize]) -> Built {
    let m = word.strand_count();
    let mut next = 0usize;
    let mut fresh = || {
        next += 1;
        next - 1
    };
    let mut seg: Vec<usize> = (0..m).map(|_| fresh()).collect();
    let bottom = seg.clone();
    let mut raw: Vec<[usize; 4]> = Vec::with_capacity(word.len());
    for &l in word.letters() {
        let p = l.unsigned_abs() as usize - 1;
        let (el, er) = (seg[p], seg[p + 1]);
        let (fl, fr) = (fresh(), fresh());
        raw.push(if l > 0 { [er, fr, fl, el] } else { [el, er, fr, fl] });
        seg[p] = fl;
        seg[p + 1] = fr;
    }
    let mut uf = UnionFind::new(next);
    for i in (0..m).step_by(2) {
        uf.union(bottom[i], bottom[i + 1]);
        if !(open.contains(&(i + 1)) && open.contains(&(i + 2))) {
            uf.union(seg[i], seg[i + 1]);
        }
    }
    let mut labels: HashMap<usize, Label> = HashMap::new();
    let mut label_of = |s: usize, uf: &mut UnionFind| -> Label {
        let r = uf.find(s);
        let n = labels.len() as Label + 1;
        *labels.entry(r).or_insert(n)
    };
    let crossings = raw.iter().map(|x| Crossing(x.map(|s| label_of(s, &mut uf)))).collect();
    let open_top = open.iter().map(|&pos| (pos, label_of(seg[pos - 1], &mut uf))).collect();
    Built { crossings, open_top }
}

/// `⌈n / (2(k−2))⌉`, valid when every `|a| ≥ 3`.
pub fn jm_distance(k: usize, n: usize) -> Result<u64, PlatError> {
    if k < 3 {
        return Err(PlatError::TooFewColumns(k));
    }
    let d = 2 * (k as u64 - 2);
    Ok((n as u64).div_ceil(d))
}

/// `n/6`, the distance lower bound for the drilled 10-plat.
pub fn b3_distance_bound(n: usize) -> Ratio<i64> {
    Ratio::new(n as i64, 6)
}

/// One strand of the drilled tangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangleStrand {
    /// Top position of the endpoint on the first sphere.
    pub s1_position: usize,
    /// Top position of the other endpoint.
    pub end_position: usize,
    /// Crossings met, in order, as `(crossing index, entry slot)`.
    pub passages: Vec<(usize, usize)>,
}

impl TangleStrand {
    pub fn meets_both_spheres(&self) -> bool {
        S2_POSITIONS.contains(&self.end_position)
    }
}

/// The drilled 10-plat as an open diagram with its four strands.
#[derive(Debug, Clone)]
pub struct DrilledTangle {
    diagram: PdDiagram,
    strands: Vec<TangleStrand>,
    /// Boundary label at each open top position.
    endpoint_label: HashMap<usize, Label>,
    /// Strand index (0-based) carrying each crossing slot.
    slot_strand: Vec<[usize; 4]>,
}

/// Splits the drilled plat into its four strands, labelled left to right by
/// their endpoints on the first sphere.
pub fn strand_arcs(p: &PlatSpec) -> Result<DrilledTangle, PlatError> {
    if !p.drilled {
        return Err(PlatError::NotDrilled);
    }
    let open: Vec<usize> = S1_POSITIONS.iter().chain(&S2_POSITIONS).copied().collect();
    let built = build(&plat_braid(p), &open);
    let boundary: Vec<Label> = built.open_top.iter().map(|&(_, l)| l).collect();
    let endpoint_label: HashMap<usize, Label> = built.open_top.iter().copied().collect();
    let position_of: HashMap<Label, usize> = built.open_top.iter().map(|&(p, l)| (l, p)).collect();
    let diagram = PdDiagram::new(built.crossings, boundary)?;
    let paths = diagram.strands();
    if paths.len() != 4 {
        return Err(PlatError::TangleShape(format!(
            "expected 4 strands, found {} (closed loops are not allowed)",
            paths.len()
        )));
    }
    let mut slot_strand = vec![[usize::MAX; 4]; diagram.crossing_count()];
    let mut strands = Vec::with_capacity(4);
    for (t, path) in paths.into_iter().enumerate() {
        let (Some(&(v0, i0)), Some(&(v1, i1))) = (path.first(), path.last()) else {
            return Err(PlatError::TangleShape("a strand meets no crossing".into()));
        };
        let start = diagram.crossings()[v0].0[i0];
        let end = diagram.crossings()[v1].0[(i1 + 2) % 4];
        let (Some(&s), Some(&e)) = (position_of.get(&start), position_of.get(&end)) else {
            return Err(PlatError::TangleShape("a strand does not end on the boundary".into()));
        };
        for &(v, i) in &path {
            slot_strand[v][i] = t;
            slot_strand[v][(i + 2) % 4] = t;
        }
        strands.push(TangleStrand {
            s1_position: s,
            end_position: e,
            passages: path,
        });
    }
    if strands.iter().any(|s| !S1_POSITIONS.contains(&s.s1_position)) {
        return Err(PlatError::TangleShape(
            "a strand has no endpoint on the first sphere".into(),
        ));
    }
    Ok(DrilledTangle {
        diagram,
        strands,
        endpoint_label,
        slot_strand,
    })
}

impl DrilledTangle {
    pub fn diagram(&self) -> &PdDiagram {
        &self.diagram
    }

    pub fn strands(&self) -> &[TangleStrand] {
        &self.strands
    }

    /// 1-based strand index of each crossing's under and over strand.
    pub fn crossing_strands(&self, v: usize) -> (usize, usize) {
        (self.slot_strand[v][0] + 1, self.slot_strand[v][1] + 1)
    }

    /// Endpoint pairs joined by the connecting arcs on S1 and S2, in that order.
    pub fn connecting_arcs(&self, i: usize, j: usize) -> Result<[(usize, usize); 2], PlatError> {
        if i == j || !(1..=4).contains(&i) || !(1..=4).contains(&j) {
            return Err(PlatError::StrandPair(i, j));
        }
        let (a, b) = (&self.strands[i - 1], &self.strands[j - 1]);
        Ok([(a.s1_position, b.s1_position), (a.end_position, b.end_position)])
    }

    /// Knot formed by strands `i`, `j` and the connecting arcs, with all other
    /// strands erased. Nugatory crossings are kept.
    pub fn pair_knot(&self, i: usize, j: usize) -> Result<PdDiagram, PlatError> {
        let [(s1a, s1b), (s2a, s2b)] = self.connecting_arcs(i, j)?;
        if !(S2_POSITIONS.contains(&s2a) && S2_POSITIONS.contains(&s2b)) {
            return Err(PlatError::TangleShape("strand does not reach the second sphere".into()));
        }
        let keep = |t: usize| t + 1 == i || t + 1 == j;
        let mut merge: HashMap<Label, Label> = HashMap::new();
        fn root(m: &HashMap<Label, Label>, mut l: Label) -> Label {
            while let Some(&p) = m.get(&l) {
                l = p;
            }
            l
        }
        let join = |a: Label, b: Label, m: &mut HashMap<Label, Label>| {
            let (ra, rb) = (root(m, a), root(m, b));
            if ra != rb {
                m.insert(ra.max(rb), ra.min(rb));
            }
        };
        let mut kept = Vec::new();
        for (v, x) in self.diagram.crossings().iter().enumerate() {
            let under = keep(self.slot_strand[v][0]);
            let over = keep(self.slot_strand[v][1]);
            match (under, over) {
                (true, true) => kept.push(*x),
                (true, false) => join(x.0[0], x.0[2], &mut merge),
                (false, true) => join(x.0[1], x.0[3], &mut merge),
                (false, false) => {}
            }
        }
        join(self.endpoint_label[&s1a], self.endpoint_label[&s1b], &mut merge);
        join(self.endpoint_label[&s2a], self.endpoint_label[&s2b], &mut merge);
        let crossings = kept
            .into_iter()
            .map(|x| Crossing(x.0.map(|l| root(&merge, l))))
            .collect();
        Ok(PdDiagram::closed(crossings)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braid_examples() {
        let p = PlatSpec::new(3, vec![vec![3, 3]], false).unwrap();
        assert_eq!(plat_braid(&p).letters(), &[2, 2, 2, 4, 4, 4]);
        let empty = PlatSpec::new(3, vec![], false).unwrap();
        assert!(plat_braid(&empty).is_empty());
        let p = PlatSpec::new(5, vec![vec![4; 4], vec![4; 5]], false).unwrap();
        assert_eq!(plat_braid(&p).len(), 36);
    }

    #[test]
    fn row_lengths_validated() {
        assert!(matches!(
            PlatSpec::new(5, vec![vec![3; 5]], false),
            Err(PlatError::RowLength {
                row: 1,
                expected: 4,
                found: 5
            })
        ));
        assert!(matches!(
            PlatSpec::new(2, vec![], false),
            Err(PlatError::TooFewColumns(2))
        ));
        assert!(matches!(
            PlatSpec::new(4, vec![], true),
            Err(PlatError::DrillNeedsK5(4))
        ));
    }

    #[test]
    fn closure_examples() {
        let p = PlatSpec::new(3, vec![vec![0, 0]], false).unwrap();
        assert_eq!(plat_closure(&p), Err(PlatError::MultiComponent(3)));
        let p = PlatSpec::new(3, vec![vec![3, 1]], false).unwrap();
        let d = plat_closure(&p).unwrap();
        assert_eq!(d.crossing_count(), 4);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.reduce_nugatory().crossing_count(), 3);
    }

    #[test]
    fn jm_distance_examples() {
        assert_eq!(jm_distance(5, 73).unwrap(), 13);
        assert_eq!(jm_distance(5, 72).unwrap(), 12);
        assert_eq!(jm_distance(3, 1).unwrap(), 1);
        assert!(jm_distance(2, 5).is_err());
    }

    #[test]
    fn b3_bound_examples() {
        assert_eq!(b3_distance_bound(73), Ratio::new(73, 6));
        assert!(b3_distance_bound(73) > Ratio::from_integer(12));
        assert_eq!(b3_distance_bound(6), Ratio::from_integer(1));
        assert_eq!(b3_distance_bound(72), Ratio::from_integer(12));
        let undrilled = PlatSpec::new(5, vec![vec![3; 4]], false).unwrap();
        assert_eq!(undrilled.b3_distance_bound(), Err(PlatError::NotDrilled));
        let small = PlatSpec::new(5, vec![vec![3, 2, 3, 3]], true).unwrap();
        assert!(matches!(
            small.b3_distance_bound(),
            Err(PlatError::TwistTooSmall { col: 2, .. })
        ));
    }

    #[test]
    fn toml_round_trip() {
        let p = PlatSpec::new(3, vec![vec![3, -1], vec![2, 2, -4]], false).unwrap();
        let text = p.to_toml();
        assert_eq!(PlatSpec::from_toml(&text).unwrap(), p);
        let bad = "k = 3\nn = 2\ntwists = [[3, 1]]\n";
        assert!(matches!(PlatSpec::from_toml(bad), Err(PlatError::Format(_))));
    }

    #[test]
    fn undrilled_has_no_strands() {
        let p = PlatSpec::new(5, vec![vec![3; 4]], false).unwrap();
        assert!(matches!(strand_arcs(&p), Err(PlatError::NotDrilled)));
    }
}
