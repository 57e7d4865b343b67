mod common;

use common::{all_embeddings, random_embedding, width_oracle};
use knotwidth::morse::{thin_thick, width, width_from_tuple, MorseEmbedding, ThinThickTuple};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn tuple_formula_matches_level_sum_exhaustively() {
    for len in (2..=16).step_by(2) {
        for e in all_embeddings(len) {
            let w = width_oracle(e.events());
            assert_eq!(width(&e), w, "{e}");
            assert_eq!(width_from_tuple(&thin_thick(&e)), w, "{e}");
        }
    }
}

#[test]
fn tuple_formula_matches_level_sum_randomly() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..2000 {
        let len = 2 * rng.random_range(1..=30);
        let e = random_embedding(&mut rng, len);
        assert_eq!(width_from_tuple(&thin_thick(&e)), width_oracle(e.events()));
    }
}

#[test]
fn thick_entries_bound_width_from_below() {
    for len in (2..=14).step_by(2) {
        for e in all_embeddings(len) {
            let t = thin_thick(&e);
            let max = t.thick().iter().max().unwrap();
            assert!(2 * t.width() >= max * max, "{e}");
        }
    }
}

#[test]
fn bridge_position_width() {
    for b in 1..=50 {
        let e = MorseEmbedding::bridge_position(b).unwrap();
        assert_eq!(e.width(), 2 * (b * b) as i64);
        assert_eq!(e.bridge_number(), b);
    }
}

#[test]
fn weak_reduction_lowers_width_by_four() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut applied = 0;
    while applied < 300 {
        let len = 2 * rng.random_range(3..=25);
        let e = random_embedding(&mut rng, len);
        let pairs = e.reducible_pairs();
        if pairs.is_empty() {
            continue;
        }
        let i = pairs[rng.random_range(0..pairs.len())];
        let r = e.weak_reduction_move(i).unwrap();
        assert_eq!(width_oracle(r.events()), width_oracle(e.events()) - 4);
        assert_eq!(r.bridge_number(), e.bridge_number());
        applied += 1;
    }
}

#[test]
fn serialization_round_trips() {
    for e in all_embeddings(10) {
        assert_eq!(e.to_string().parse::<MorseEmbedding>().unwrap(), e);
        let t = thin_thick(&e);
        assert_eq!(t.to_string().parse::<ThinThickTuple>().unwrap(), t);
    }
}
