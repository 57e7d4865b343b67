//! Alternation, reducedness and nontriviality certificates.

use super::bracket::jones;
use super::{DiagramError, PdDiagram};
use crate::poly::LaurentPoly;

/// True iff every component alternates over/under along its traversal.
/// The crossingless diagram counts as alternating.
pub fn is_alternating(d: &PdDiagram) -> Result<bool, DiagramError> {
    if !d.is_closed() {
        return Err(DiagramError::Open(d.boundary().len()));
    }
    Ok(d.strands().iter().all(|path| {
        let over: Vec<bool> = path.iter().map(|&(_, i)| i % 2 == 1).collect();
        (0..over.len()).all(|k| over[k] != over[(k + 1) % over.len()])
    }))
}

/// True iff no crossing is nugatory.
pub fn is_reduced(d: &PdDiagram) -> Result<bool, DiagramError> {
    if !d.is_closed() {
        return Err(DiagramError::Open(d.boundary().len()));
    }
    Ok(nugatory_crossings(d).is_empty())
}

/// Indices of nugatory crossings, ascending: crossings carrying a loop edge
/// or forming a cut vertex of the underlying 4-valent graph.
pub fn nugatory_crossings(d: &PdDiagram) -> Vec<usize> {
    let n = d.crossing_count();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut looped = vec![false; n];
    for ends in d.slot_map().values() {
        if let [(a, _), (b, _)] = ends[..] {
            if a == b {
                looped[a] = true;
            } else {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
    }
    let cut = articulation_points(&adj);
    (0..n).filter(|&v| looped[v] || cut[v]).collect()
}

/// Iterative low-link search; parallel edges are harmless for cut vertices.
fn articulation_points(adj: &[Vec<usize>]) -> Vec<bool> {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut cut = vec![false; n];
    let mut timer = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
            if let Some(&w) = adj[v].get(*next) {
                *next += 1;
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if parent != root && low[v] >= disc[parent] {
                        cut[parent] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            cut[root] = true;
        }
    }
    cut
}

/// The strongest available reason the knot is nontrivial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// A reduced alternating diagram with at least one crossing.
    ReducedAlternating {
        crossings: usize,
    },
    /// A Jones polynomial different from 1.
    JonesWitness {
        jones: LaurentPoly,
    },
    Inconclusive,
}

/// Both certificate branches, evaluated independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certification {
    pub certificate: Certificate,
    pub reduced_alternating: bool,
    pub jones: LaurentPoly,
}

impl Certification {
    pub fn jones_nontrivial(&self) -> bool {
        !self.jones.is_one()
    }

    /// A reduced alternating diagram with crossings must have Jones ≠ 1.
    pub fn branches_agree(&self) -> bool {
        !self.reduced_alternating || self.jones_nontrivial()
    }
}

pub fn certify_nontrivial(d: &PdDiagram) -> Result<Certification, DiagramError> {
    d.require_closed_knot()?;
    let reduced_alternating = d.crossing_count() >= 1 && is_reduced(d)? && is_alternating(d)?;
    let jones = jones(d)?;
    let certificate = if reduced_alternating {
        Certificate::ReducedAlternating {
            crossings: d.crossing_count(),
        }
    } else if !jones.is_one() {
        Certificate::JonesWitness { jones: jones.clone() }
    } else {
        Certificate::Inconclusive
    };
    Ok(Certification {
        certificate,
        reduced_alternating,
        jones,
    })
}
