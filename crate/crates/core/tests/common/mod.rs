#![allow(dead_code)]

use immaculate::{enumerate_compositions, Composition, SubscriptMatrix, WeakComposition};
use itertools::Itertools;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// All compositions with exactly `len` parts and size at most `max_size`.
pub fn compositions_up_to(max_size: u32, len: usize) -> Vec<Composition> {
    (1..=max_size).flat_map(|n| enumerate_compositions(n, len)).collect()
}

/// Independent oracle: some permutation picks only non-negative subscripts.
pub fn brute_force_surviving_term(m: &SubscriptMatrix) -> bool {
    let n = m.dim();
    (0..n).permutations(n).any(|p| p.iter().enumerate().all(|(r, &c)| m.get(r, c) >= 0))
}

pub fn random_composition(rng: &mut ChaCha8Rng, len: usize, max_part: u32) -> Composition {
    Composition::new((0..len).map(|_| rng.gen_range(1..=max_part)).collect()).unwrap()
}

pub fn random_partition(rng: &mut ChaCha8Rng, len: usize, max_part: u32) -> WeakComposition {
    let mut parts: Vec<u32> = (0..len).map(|_| rng.gen_range(1..=max_part)).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    WeakComposition::new(parts)
}
