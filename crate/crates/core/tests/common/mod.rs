//! Independent oracles and fixtures shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use knotwidth::braid::BraidWord;
use knotwidth::diagram::{Crossing, PdDiagram};
use knotwidth::morse::{Critical, MorseEmbedding};
use knotwidth::plat::{closure_component_count, plat_closure_of_word};
use knotwidth::LaurentPoly;
use rand::Rng;

/// Kauffman bracket by enumerating all `2^c` states.
///
/// Each state joins edge labels at every crossing, `(a,b)(c,d)` for the
/// A-smoothing and `(a,d)(b,c)` for the B-smoothing; the circles are the
/// resulting classes of labels.
pub fn brute_force_bracket(d: &PdDiagram) -> LaurentPoly {
    let xs: Vec<[u32; 4]> = d.crossings().iter().map(|x| x.0).collect();
    let c = xs.len();
    assert!(c <= 20, "brute force is limited to 20 crossings");
    if c == 0 {
        return LaurentPoly::one();
    }
    let mut labels: Vec<u32> = xs.iter().flatten().copied().collect();
    labels.sort_unstable();
    labels.dedup();
    let index = |l: u32| labels.binary_search(&l).unwrap();
    // delta^k expanded once per loop count
    let mut delta_pows: Vec<BTreeMap<i64, i128>> = vec![BTreeMap::from([(0, 1)])];
    for k in 1..=(2 * c + 1) {
        let prev = &delta_pows[k - 1];
        let mut next = BTreeMap::new();
        for (&e, &v) in prev {
            *next.entry(e + 2).or_insert(0) -= v;
            *next.entry(e - 2).or_insert(0) -= v;
        }
        delta_pows.push(next);
    }
    let mut total: BTreeMap<i64, i128> = BTreeMap::new();
    for state in 0u32..(1 << c) {
        let mut parent: Vec<usize> = (0..labels.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                x = p[x];
            }
            x
        }
        let join = |p: &mut Vec<usize>, a: u32, b: u32| {
            let (ra, rb) = (find(p, index(a)), find(p, index(b)));
            if ra != rb {
                p[ra] = rb;
            }
        };
        let mut a_count = 0i64;
        for (k, x) in xs.iter().enumerate() {
            if state >> k & 1 == 0 {
                a_count += 1;
                join(&mut parent, x[0], x[1]);
                join(&mut parent, x[2], x[3]);
            } else {
                join(&mut parent, x[0], x[3]);
                join(&mut parent, x[1], x[2]);
            }
        }
        let loops = (0..labels.len()).filter(|&i| find(&mut parent, i) == i).count();
        let shift = a_count - (c as i64 - a_count);
        for (&e, &v) in &delta_pows[loops - 1] {
            *total.entry(e + shift).or_insert(0) += v;
        }
    }
    LaurentPoly::from_terms(total.into_iter().map(|(e, v)| (e, v as i64)))
}

/// Level widths summed directly from the event list.
pub fn width_oracle(events: &[Critical]) -> i64 {
    let mut h = 0i64;
    let mut total = 0;
    for e in &events[..events.len() - 1] {
        h += if *e == Critical::Min { 2 } else { -2 };
        total += h;
    }
    total
}

/// Uniformly random step choices subject to every intermediate level being
/// nonempty; `len` must be even and at least 2.
pub fn random_embedding(rng: &mut impl Rng, len: usize) -> MorseEmbedding {
    let mut events = Vec::with_capacity(len);
    let mut h = 0usize;
    for i in 0..len {
        let remaining = len - i;
        let can_min = h + 1 < remaining;
        let can_max = h >= 2 || (h == 1 && remaining == 1);
        let up = match (can_min, can_max) {
            (true, true) => rng.random_bool(0.5),
            (true, false) => true,
            (false, _) => false,
        };
        if up {
            h += 1;
            events.push(Critical::Min);
        } else {
            h -= 1;
            events.push(Critical::Max);
        }
    }
    MorseEmbedding::new(events).expect("generator keeps every level nonempty")
}

/// All valid event sequences of exactly `len` events.
pub fn all_embeddings(len: usize) -> Vec<MorseEmbedding> {
    (0u32..(1 << len))
        .filter_map(|bits| {
            let events = (0..len)
                .map(|i| {
                    if bits >> i & 1 == 0 {
                        Critical::Min
                    } else {
                        Critical::Max
                    }
                })
                .collect();
            MorseEmbedding::new(events).ok()
        })
        .collect()
}

/// Twist knot with `m` half twists as the 4-plat `σ2^m σ1⁻¹ σ2`.
pub fn twist_knot(m: usize) -> PdDiagram {
    let mut letters = vec![2; m];
    letters.extend([-1, 2]);
    plat_closure_of_word(&BraidWord::new(4, letters).unwrap()).unwrap()
}

pub fn trefoil() -> PdDiagram {
    "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]".parse().unwrap()
}

pub fn figure_eight() -> PdDiagram {
    "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]".parse().unwrap()
}

/// Random plat braids whose closure is a knot, with `crossings` letters.
/// Needs `crossings >= strands/2 - 1` so that the caps can be connected.
pub fn random_knot_word(rng: &mut impl Rng, strands: usize, crossings: usize) -> BraidWord {
    assert!(
        2 * (crossings + 1) >= strands,
        "too few crossings to join {strands} strands"
    );
    for _ in 0..100_000 {
        let letters: Vec<i32> = (0..crossings)
            .map(|_| {
                let g = rng.random_range(1..strands) as i32;
                if rng.random_bool(0.5) {
                    g
                } else {
                    -g
                }
            })
            .collect();
        let w = BraidWord::new(strands, letters).unwrap();
        if closure_component_count(&w) == 1 {
            return w;
        }
    }
    panic!("no knot found with {crossings} crossings on {strands} strands");
}

/// Inserts `σ_g σ_g⁻¹` before position `at` (a Reidemeister II pair).
pub fn insert_r2(w: &BraidWord, at: usize, g: i32) -> BraidWord {
    let mut l = w.letters().to_vec();
    l.splice(at..at, [g, -g]);
    BraidWord::new(w.strand_count(), l).unwrap()
}

/// Replaces the first `σ_i σ_{i+1} σ_i` (any common sign) by `σ_{i+1} σ_i σ_{i+1}`.
pub fn apply_r3(w: &BraidWord) -> Option<BraidWord> {
    let l = w.letters();
    for k in 0..l.len().saturating_sub(2) {
        let (a, b, c) = (l[k], l[k + 1], l[k + 2]);
        if a == c && a.signum() == b.signum() && (b.abs() - a.abs()).abs() == 1 {
            let mut out = l.to_vec();
            out[k] = b;
            out[k + 1] = a;
            out[k + 2] = b;
            return Some(BraidWord::new(w.strand_count(), out).unwrap());
        }
    }
    None
}

pub fn crossing(a: u32, b: u32, c: u32, d: u32) -> Crossing {
    Crossing([a, b, c, d])
}
