//! Seeded random instances for self-tests.

use num_integer::Integer;
use rand::Rng;

use crate::solver::{validate, UkpInstance};

/// Upper limits for randomly generated instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeCaps {
    pub max_items: usize,
    pub max_component: u32,
    pub max_capacity: u64,
}

impl Default for SizeCaps {
    fn default() -> Self {
        Self {
            max_items: 4,
            max_component: 9,
            max_capacity: 30,
        }
    }
}

/// Draws `m` uniformly from `1..=max_items`, then items with components
/// uniform in `[1, max_component]`, rejecting non-primitive items and
/// repeated densities, then a capacity uniform in `[0, max_capacity]`.
///
/// `m` is clamped to the number of distinct primitive densities available.
pub fn random_instance<R: Rng + ?Sized>(rng: &mut R, caps: SizeCaps) -> UkpInstance {
    let c = caps.max_component.max(1);
    let available = (1..=c)
        .flat_map(|w| (1..=c).map(move |v| (w, v)))
        .filter(|(w, v)| w.gcd(v) == 1)
        .count();
    let m = rng.gen_range(1..=caps.max_items.max(1)).min(available);

    let mut items: Vec<(i64, i64)> = Vec::with_capacity(m);
    while items.len() < m {
        let w = rng.gen_range(1..=c) as i64;
        let v = rng.gen_range(1..=c) as i64;
        if w.gcd(&v) != 1 || items.iter().any(|&(iw, iv)| iv * w == v * iw) {
            continue;
        }
        items.push((w, v));
    }
    let capacity = rng.gen_range(0..=caps.max_capacity) as i64;
    validate(&items, capacity).expect("sampled items satisfy the instance conditions")
}
