//! Kauffman bracket by a frontier sweep over crossings, and the Jones
//! polynomial derived from it.
//!
//! Crossings are absorbed one at a time. A state records how the open edge
//! ends on the frontier are joined by the smoothings chosen so far; states
//! with the same joining are merged, so the cost grows with the number of
//! planar matchings on the frontier instead of `2^c`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{DiagramError, Label, PdDiagram};
use crate::poly::LaurentPoly;

/// Writhe under the traversal orientation of [`PdDiagram::strands`].
pub fn writhe(d: &PdDiagram) -> Result<i64, DiagramError> {
    d.require_closed_knot()?;
    Ok(crossing_signs(d).iter().sum())
}

pub(crate) fn crossing_signs(d: &PdDiagram) -> Vec<i64> {
    let n = d.crossing_count();
    let mut under = vec![0; n];
    let mut over = vec![0; n];
    for path in d.strands() {
        for (v, i) in path {
            if i % 2 == 0 {
                under[v] = i;
            } else {
                over[v] = i;
            }
        }
    }
    (0..n)
        .map(|v| match (under[v], over[v]) {
            (0, 3) | (2, 1) => 1,
            _ => -1,
        })
        .collect()
}

/// `⟨D⟩` normalized so the crossingless unknot is 1, with
/// `⟨X⟩ = A⟨(0,1)(2,3)⟩ + A⁻¹⟨(0,3)(1,2)⟩` in slot terms and circle factor
/// `−A² − A⁻²`.
pub fn kauffman_bracket(d: &PdDiagram) -> Result<LaurentPoly, DiagramError> {
    d.require_closed_knot()?;
    Ok(sweep(d))
}

/// Jones polynomial `V(t) = (−A)^(−3w)⟨D⟩` with `t = A⁻⁴`.
pub fn jones(d: &PdDiagram) -> Result<LaurentPoly, DiagramError> {
    let w = writhe(d)?;
    let bracket = kauffman_bracket(d)?;
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let f = &LaurentPoly::monomial(sign, -3 * w) * &bracket;
    Ok(f.compress_exponents(-4)
        .expect("bracket of a knot diagram times its writhe normalization lives in A^4Z"))
}

/// Dense Laurent polynomial in `A` whose exponents share a parity:
/// `coeffs[k]` multiplies `A^(lo + 2k)`.
#[derive(Clone, Debug)]
struct Dense {
    lo: i64,
    coeffs: Vec<BigInt>,
}

impl Dense {
    fn one() -> Self {
        Dense {
            lo: 0,
            coeffs: vec![BigInt::from(1)],
        }
    }

    /// Multiplies by `−A² − A⁻²`.
    fn times_delta(&self) -> Dense {
        let n = self.coeffs.len();
        let mut out = vec![BigInt::zero(); n + 2];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k] -= c;
            out[k + 2] -= c;
        }
        Dense {
            lo: self.lo - 2,
            coeffs: out,
        }
    }

    /// `self += src · A^shift`.
    fn add_shifted(&mut self, src: &Dense, shift: i64) {
        let src_lo = src.lo + shift;
        if self.coeffs.is_empty() {
            self.lo = src_lo;
            self.coeffs = src.coeffs.clone();
            return;
        }
        let new_lo = self.lo.min(src_lo);
        let self_hi = self.lo + 2 * self.coeffs.len() as i64;
        let src_hi = src_lo + 2 * src.coeffs.len() as i64;
        let new_len = ((self_hi.max(src_hi) - new_lo) / 2) as usize;
        if new_lo < self.lo {
            let pad = ((self.lo - new_lo) / 2) as usize;
            let mut v = vec![BigInt::zero(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.lo = new_lo;
        }
        self.coeffs.resize(new_len, BigInt::zero());
        let off = ((src_lo - self.lo) / 2) as usize;
        for (k, c) in src.coeffs.iter().enumerate() {
            self.coeffs[off + k] += c;
        }
    }

    fn into_poly(self) -> LaurentPoly {
        let lo = self.lo;
        LaurentPoly::from_terms(self.coeffs.into_iter().enumerate().map(|(k, c)| (lo + 2 * k as i64, c)))
    }
}

/// Absorption order: repeatedly take the crossing with the most labels already
/// on the frontier, lowest index first on ties.
fn sweep_order(d: &PdDiagram) -> Vec<usize> {
    let n = d.crossing_count();
    let slots = d.slot_map();
    let mut done = vec![false; n];
    let mut score = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by(|&a, &b| score[a].cmp(&score[b]).then(b.cmp(&a)))
            .expect("an unprocessed crossing remains");
        done[v] = true;
        order.push(v);
        for &l in &d.crossings()[v].0 {
            for &(w, _) in &slots[&l] {
                if !done[w] {
                    score[w] += 1;
                }
            }
        }
    }
    order
}

type Matching = Vec<(Label, Label)>;

/// Joins the frontier matching with one smoothing at a crossing.
///
/// Returns the new frontier matching and the number of circles closed.
fn absorb(state: &Matching, labels: [Label; 4], pairs: [(usize, usize); 2]) -> (Matching, u32) {
    let mut partner: HashMap<Label, Label> = HashMap::with_capacity(state.len() * 2);
    for &(a, b) in state {
        partner.insert(a, b);
        partner.insert(b, a);
    }
    // Small graph on the labels touched by this crossing.
    let mut edges: Vec<(Label, Label)> = Vec::with_capacity(6);
    for &(i, j) in &pairs {
        edges.push((labels[i], labels[j]));
    }
    let mut touched: Vec<Label> = Vec::with_capacity(8);
    for &l in &labels {
        if let Some(&p) = partner.get(&l) {
            if !touched.contains(&l) {
                touched.push(l);
                if !touched.contains(&p) {
                    touched.push(p);
                }
                edges.push((l.min(p), l.max(p)));
            }
        }
    }
    let mut incident: HashMap<Label, Vec<usize>> = HashMap::with_capacity(8);
    for (e, &(a, b)) in edges.iter().enumerate() {
        incident.entry(a).or_default().push(e);
        incident.entry(b).or_default().push(e);
    }
    let mut used = vec![false; edges.len()];
    let mut new_pairs = Vec::new();
    let walk = |start: Label, first: usize, used: &mut Vec<bool>| -> Label {
        let mut at = start;
        let mut e = first;
        loop {
            used[e] = true;
            let (a, b) = edges[e];
            at = if a == at { b } else { a };
            match incident[&at].iter().find(|&&f| !used[f]) {
                Some(&f) => e = f,
                None => return at,
            }
        }
    };
    let mut ends: Vec<Label> = incident
        .iter()
        .filter(|(_, es)| es.len() == 1)
        .map(|(&l, _)| l)
        .collect();
    ends.sort_unstable();
    for l in ends {
        let e = incident[&l][0];
        if used[e] {
            continue;
        }
        let other = walk(l, e, &mut used);
        new_pairs.push((l.min(other), l.max(other)));
    }
    let mut circles = 0;
    for e in 0..edges.len() {
        if !used[e] {
            circles += 1;
            let start = edges[e].0;
            walk(start, e, &mut used);
        }
    }
    let mut out: Matching = state
        .iter()
        .filter(|(a, b)| !touched.contains(a) && !touched.contains(b))
        .copied()
        .collect();
    out.extend(new_pairs);
    out.sort_unstable();
    (out, circles)
}

fn sweep(d: &PdDiagram) -> LaurentPoly {
    let n = d.crossing_count();
    if n == 0 {
        return LaurentPoly::one();
    }
    let order = sweep_order(d);
    let mut states: HashMap<Matching, Dense> = HashMap::new();
    states.insert(Vec::new(), Dense::one());
    let smoothings: [([(usize, usize); 2], i64); 2] = [([(0, 1), (2, 3)], 1), ([(0, 3), (1, 2)], -1)];
    for (step, &v) in order.iter().enumerate() {
        let last = step + 1 == n;
        let labels = d.crossings()[v].0;
        let mut next: HashMap<Matching, Dense> = HashMap::with_capacity(states.len() * 2);
        let mut keys: Vec<&Matching> = states.keys().collect();
        keys.sort_unstable();
        for key in keys {
            let poly = &states[key];
            for (pairs, shift) in smoothings {
                let (m, circles) = absorb(key, labels, pairs);
                let loops = if last { circles.saturating_sub(1) } else { circles };
                let mut term = poly.clone();
                for _ in 0..loops {
                    term = term.times_delta();
                }
                next.entry(m)
                    .or_insert_with(|| Dense {
                        lo: 0,
                        coeffs: Vec::new(),
                    })
                    .add_shifted(&term, shift);
            }
        }
        states = next;
    }
    debug_assert!(states.len() == 1 && states.contains_key(&Vec::new()));
    states.remove(&Vec::new()).map(Dense::into_poly).unwrap_or_default()
}
