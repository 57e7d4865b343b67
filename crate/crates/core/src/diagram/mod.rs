//! Planar knot diagrams in PD notation and the invariants computed on them.
//!
//! Each crossing lists its four edge labels counterclockwise, starting from
//! the incoming under-strand, so slots 0 and 2 are the under-strand and slots
//! 1 and 3 the over-strand. The Kauffman bracket is normalized so that the
//! crossingless unknot has bracket 1; the Jones polynomial uses `t = A⁻⁴`.

mod bracket;
mod checks;
mod pd;

use std::collections::HashMap;

use thiserror::Error;

pub use bracket::{jones, kauffman_bracket, writhe};
pub use checks::{certify_nontrivial, is_alternating, is_reduced, nugatory_crossings, Certificate, Certification};
pub use pd::PdParseError;

pub type Label = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("edge label {label} appears {count} times (interior labels appear twice, boundary labels once)")]
    LabelCount { label: Label, count: usize },
    #[error("diagram is not planar: {faces} faces for {crossings} crossings and {components} connected pieces")]
    NotPlanar {
        faces: usize,
        crossings: usize,
        components: usize,
    },
    #[error("operation needs a closed diagram but it has {0} open endpoints")]
    Open(usize),
    #[error("operation needs a single component but the diagram has {0}")]
    MultiComponent(usize),
    #[error(transparent)]
    Parse(#[from] PdParseError),
}

/// One crossing: edge labels counterclockwise, under-strand in slots 0 and 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing(pub [Label; 4]);

impl Crossing {
    pub fn labels(&self) -> [Label; 4] {
        self.0
    }

    fn rotated_by_two(self) -> Crossing {
        let [a, b, c, d] = self.0;
        Crossing([c, d, a, b])
    }
}

/// A slot at a crossing: `(crossing index, slot 0..4)`.
pub(crate) type Slot = (usize, usize);

/// A 4-valent planar diagram, closed or with labelled open endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdDiagram {
    crossings: Vec<Crossing>,
    boundary: Vec<Label>,
}

impl PdDiagram {
    /// Validates label multiplicities and, for closed diagrams, planarity.
    pub fn new(crossings: Vec<Crossing>, boundary: Vec<Label>) -> Result<Self, DiagramError> {
        let d = PdDiagram { crossings, boundary };
        d.check_labels()?;
        if d.boundary.is_empty() {
            d.check_planar()?;
        }
        Ok(d)
    }

    pub fn closed(crossings: Vec<Crossing>) -> Result<Self, DiagramError> {
        Self::new(crossings, Vec::new())
    }

    /// The crossingless unknot.
    pub fn unknot() -> Self {
        PdDiagram {
            crossings: Vec::new(),
            boundary: Vec::new(),
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn boundary(&self) -> &[Label] {
        &self.boundary
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_closed(&self) -> bool {
        self.boundary.is_empty()
    }

    fn check_labels(&self) -> Result<(), DiagramError> {
        let mut counts: HashMap<Label, usize> = HashMap::new();
        for x in &self.crossings {
            for l in x.0 {
                *counts.entry(l).or_default() += 1;
            }
        }
        for &b in &self.boundary {
            let c = counts.get(&b).copied().unwrap_or(0);
            if c != 1 {
                return Err(DiagramError::LabelCount { label: b, count: c });
            }
            counts.remove(&b);
        }
        let mut bad: Vec<_> = counts.into_iter().filter(|&(_, c)| c != 2).collect();
        bad.sort_unstable();
        if let Some(&(label, count)) = bad.first() {
            return Err(DiagramError::LabelCount { label, count });
        }
        Ok(())
    }

    /// Both slots carrying each label (boundary labels have one).
    pub(crate) fn slot_map(&self) -> HashMap<Label, Vec<Slot>> {
        let mut map: HashMap<Label, Vec<Slot>> = HashMap::new();
        for (v, x) in self.crossings.iter().enumerate() {
            for (i, &l) in x.0.iter().enumerate() {
                map.entry(l).or_default().push((v, i));
            }
        }
        map
    }

    /// Euler characteristic check: `V − E + F = 1 + #pieces`.
    fn check_planar(&self) -> Result<(), DiagramError> {
        let n = self.crossings.len();
        if n == 0 {
            return Ok(());
        }
        let slots = self.slot_map();
        let other = |(v, i): Slot| -> Slot {
            let ends = &slots[&self.crossings[v].0[i]];
            if ends[0] == (v, i) {
                ends[1]
            } else {
                ends[0]
            }
        };
        let mut seen = vec![[false; 4]; n];
        let mut faces = 0;
        for v in 0..n {
            for i in 0..4 {
                if seen[v][i] {
                    continue;
                }
                faces += 1;
                let mut cur = (v, i);
                while !seen[cur.0][cur.1] {
                    seen[cur.0][cur.1] = true;
                    let (w, j) = other(cur);
                    cur = (w, (j + 1) % 4);
                }
            }
        }
        let pieces = self.graph_pieces();
        let edges = 2 * n;
        if n + faces != edges + 1 + pieces {
            return Err(DiagramError::NotPlanar {
                faces,
                crossings: n,
                components: pieces,
            });
        }
        Ok(())
    }

    /// Connected pieces of the underlying 4-valent graph.
    fn graph_pieces(&self) -> usize {
        let n = self.crossings.len();
        let mut uf = UnionFind::new(n);
        for ends in self.slot_map().values() {
            if ends.len() == 2 {
                uf.union(ends[0].0, ends[1].0);
            }
        }
        (0..n).filter(|&v| uf.find(v) == v).count()
    }

    /// Number of link components; the crossingless diagram counts as one.
    pub fn component_count(&self) -> usize {
        if self.crossings.is_empty() {
            return 1;
        }
        self.strands().len()
    }

    /// Each component or open strand as the sequence of `(crossing, entry slot)`
    /// passages along a chosen orientation.
    ///
    /// Open strands start at a boundary label; closed components start at the
    /// lowest-numbered unvisited crossing, entering along its slot 0.
    pub(crate) fn strands(&self) -> Vec<Vec<Slot>> {
        let slots = self.slot_map();
        let n = self.crossings.len();
        let mut visited = vec![[false; 4]; n];
        let mut out = Vec::new();
        let walk = |start: Slot, visited: &mut Vec<[bool; 4]>| {
            let mut path = Vec::new();
            let mut cur = start;
            loop {
                let (v, i) = cur;
                if visited[v][i] {
                    break;
                }
                let exit = (i + 2) % 4;
                visited[v][i] = true;
                visited[v][exit] = true;
                path.push(cur);
                let ends = &slots[&self.crossings[v].0[exit]];
                if ends.len() < 2 {
                    break;
                }
                cur = if ends[0] == (v, exit) { ends[1] } else { ends[0] };
            }
            path
        };
        for &b in &self.boundary {
            let start = slots[&b][0];
            if !visited[start.0][start.1] {
                out.push(walk(start, &mut visited));
            }
        }
        for v in 0..n {
            for i in [0, 1] {
                if !visited[v][i] {
                    out.push(walk((v, i), &mut visited));
                }
            }
        }
        out
    }

    pub(crate) fn require_closed_knot(&self) -> Result<(), DiagramError> {
        if !self.boundary.is_empty() {
            return Err(DiagramError::Open(self.boundary.len()));
        }
        let c = self.component_count();
        if c != 1 {
            return Err(DiagramError::MultiComponent(c));
        }
        Ok(())
    }

    /// Relabels edges `1..=2c` along the orientation and rotates each crossing
    /// so slot 0 is the incoming under-strand.
    pub fn canonical(&self) -> PdDiagram {
        if self.crossings.is_empty() {
            return self.clone();
        }
        let strands = self.strands();
        let mut relabel: HashMap<Label, Label> = HashMap::new();
        let mut next: Label = 1;
        for &b in &self.boundary {
            // open strands are labelled from their starting endpoint
            if let std::collections::hash_map::Entry::Vacant(e) = relabel.entry(b) {
                e.insert(next);
                next += 1;
            }
        }
        let mut entry_under = vec![None; self.crossings.len()];
        for path in &strands {
            for &(v, i) in path {
                let inl = self.crossings[v].0[i];
                relabel.entry(inl).or_insert_with(|| {
                    next += 1;
                    next - 1
                });
                let outl = self.crossings[v].0[(i + 2) % 4];
                relabel.entry(outl).or_insert_with(|| {
                    next += 1;
                    next - 1
                });
                if i % 2 == 0 {
                    entry_under[v] = Some(i);
                }
            }
        }
        let crossings = self
            .crossings
            .iter()
            .zip(&entry_under)
            .map(|(x, under)| {
                let x = if *under == Some(2) { x.rotated_by_two() } else { *x };
                Crossing(x.0.map(|l| relabel[&l]))
            })
            .collect();
        let boundary = self.boundary.iter().map(|l| relabel[l]).collect();
        PdDiagram { crossings, boundary }
    }

    /// Mirror image: every crossing switches which strand is over.
    pub fn mirror(&self) -> PdDiagram {
        let crossings = self
            .crossings
            .iter()
            .map(|x| {
                let [a, b, c, d] = x.0;
                Crossing([b, c, d, a])
            })
            .collect();
        PdDiagram {
            crossings,
            boundary: self.boundary.clone(),
        }
    }

    /// Removes every nugatory crossing, smoothing each so that the knot stays
    /// connected; the knot type is unchanged.
    pub fn reduce_nugatory(&self) -> PdDiagram {
        let mut d = self.clone();
        while let Some(&v) = nugatory_crossings(&d).first() {
            d = d.smooth_nugatory(v);
        }
        d
    }

    fn smooth_nugatory(&self, v: usize) -> PdDiagram {
        let labels = self.crossings[v].0;
        // Pieces hanging off v once it is deleted.
        let mut uf = UnionFind::new(4);
        let slots = self.slot_map();
        let mut piece_of: HashMap<usize, usize> = HashMap::new();
        let others = self.crossings.len();
        let mut graph = UnionFind::new(others);
        for ends in slots.values() {
            if ends.len() == 2 && ends[0].0 != v && ends[1].0 != v {
                graph.union(ends[0].0, ends[1].0);
            }
        }
        for i in 0..4 {
            for j in (i + 1)..4 {
                if labels[i] == labels[j] {
                    uf.union(i, j);
                }
            }
            let ends = &slots[&labels[i]];
            for &(w, _) in ends {
                if w != v {
                    let root = graph.find(w);
                    if let Some(&k) = piece_of.get(&root) {
                        uf.union(i, k);
                    } else {
                        piece_of.insert(root, i);
                    }
                }
            }
        }
        // Join slots lying in different pieces.
        let (p, q) = if uf.find(0) == uf.find(1) {
            ((0, 3), (1, 2))
        } else {
            ((0, 1), (2, 3))
        };
        let mut merge = LabelMerge::default();
        merge.join(labels[p.0], labels[p.1]);
        merge.join(labels[q.0], labels[q.1]);
        let crossings = self
            .crossings
            .iter()
            .enumerate()
            .filter(|&(w, _)| w != v)
            .map(|(_, x)| Crossing(x.0.map(|l| merge.resolve(l))))
            .collect();
        let boundary = self.boundary.iter().map(|&l| merge.resolve(l)).collect();
        PdDiagram { crossings, boundary }
    }
}

#[derive(Default)]
struct LabelMerge {
    parent: HashMap<Label, Label>,
}

impl LabelMerge {
    fn resolve(&self, mut l: Label) -> Label {
        while let Some(&p) = self.parent.get(&l) {
            l = p;
        }
        l
    }

    fn join(&mut self, a: Label, b: Label) {
        let (ra, rb) = (self.resolve(a), self.resolve(b));
        if ra != rb {
            self.parent.insert(ra.max(rb), ra.min(rb));
        }
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn trefoil() -> PdDiagram {
        PdDiagram::closed(vec![
            Crossing([1, 4, 2, 5]),
            Crossing([3, 6, 4, 1]),
            Crossing([5, 2, 6, 3]),
        ])
        .unwrap()
    }

    pub fn figure_eight() -> PdDiagram {
        PdDiagram::closed(vec![
            Crossing([4, 2, 5, 1]),
            Crossing([8, 6, 1, 5]),
            Crossing([6, 3, 7, 4]),
            Crossing([2, 7, 3, 8]),
        ])
        .unwrap()
    }

    pub fn positive_kink() -> PdDiagram {
        PdDiagram::closed(vec![Crossing([1, 1, 2, 2])]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn label_multiplicity_is_enforced() {
        let err = PdDiagram::closed(vec![Crossing([1, 2, 3, 4])]).unwrap_err();
        assert!(matches!(err, DiagramError::LabelCount { count: 1, .. }));
        let err = PdDiagram::closed(vec![Crossing([1, 1, 1, 2])]).unwrap_err();
        assert!(matches!(err, DiagramError::LabelCount { label: 1, count: 3 }));
        assert!(PdDiagram::new(vec![Crossing([1, 2, 2, 3])], vec![1, 3]).is_ok());
    }

    #[test]
    fn non_planar_code_is_rejected() {
        // Two crossings glued so that the rotation system has the wrong genus.
        let err = PdDiagram::closed(vec![Crossing([1, 2, 3, 4]), Crossing([1, 3, 2, 4])]).unwrap_err();
        assert!(matches!(err, DiagramError::NotPlanar { .. }));
    }

    #[test]
    fn components_and_strands() {
        assert_eq!(trefoil().component_count(), 1);
        assert_eq!(figure_eight().component_count(), 1);
        assert_eq!(PdDiagram::unknot().component_count(), 1);
        // Hopf link
        let hopf = PdDiagram::closed(vec![Crossing([1, 3, 2, 4]), Crossing([3, 1, 4, 2])]).unwrap();
        assert_eq!(hopf.component_count(), 2);
    }

    #[test]
    fn canonical_labels_follow_orientation() {
        let d = PdDiagram::closed(vec![
            Crossing([10, 40, 20, 50]),
            Crossing([30, 60, 40, 10]),
            Crossing([50, 20, 60, 30]),
        ])
        .unwrap();
        let c = d.canonical();
        assert_eq!(c, trefoil().canonical());
        let mut all: Vec<Label> = c.crossings().iter().flat_map(|x| x.0).collect();
        all.sort_unstable();
        assert_eq!(all, vec![1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6]);
    }

    #[test]
    fn kink_removal() {
        let r = positive_kink().reduce_nugatory();
        assert_eq!(r.crossing_count(), 0);
        assert_eq!(trefoil().reduce_nugatory().crossing_count(), 3);
    }
}
