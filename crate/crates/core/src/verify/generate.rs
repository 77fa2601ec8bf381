//! Seeded random spaces and belief structures.
//!
//! Every generator draws from a ChaCha8 stream seeded with the given `u64`,
//! so the same arguments always produce the same value.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decider::{Decider, DeciderKind, TableDecider};
use crate::error::{Error, Result};
use crate::evidence::BeliefStructure;
use crate::rational::Rational;
use crate::space::SApproxSpace;
use crate::universe::{ElementSet, Universe};

pub const MAX_RANDOM_U: usize = 8;
pub const MAX_RANDOM_W: usize = 5;
pub const MAX_RANDOM_DENOMINATOR: u32 = 36;

const W_LABELS: [&str; MAX_RANDOM_W] = ["a", "b", "c", "d", "e"];

fn check_size(what: &str, size: usize, cap: usize) -> Result<()> {
    if size == 0 {
        return Err(Error::InvalidArgument(format!("{what} must be at least 1")));
    }
    if size > cap {
        return Err(Error::SizeCap { size, cap });
    }
    Ok(())
}

/// `W = {a, b, …}` with `w_size` labels.
pub fn random_w(w_size: usize) -> Result<Universe> {
    check_size("w_size", w_size, MAX_RANDOM_W)?;
    Universe::new(W_LABELS[..w_size].iter().copied())
}

/// Keeps the inclusion-minimal masks, ascending.
fn minimal_masks(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_unstable();
    masks.dedup();
    masks
        .iter()
        .copied()
        .filter(|&m| !masks.iter().any(|&o| o != m && o & m == o))
        .collect()
}

/// A space over `U = {u1, …}` and `W = {a, b, …}` with every `T(x)` drawn
/// uniformly from the subsets of `W`.
///
/// Card-threshold deciders draw `k` from `1..=|W|`. Table deciders give each
/// distinct image an antichain of one to three nonempty sets, so the space is
/// partial monotone and no element is accepted on `∅`.
pub fn random_space(seed: u64, u_size: usize, w_size: usize, kind: DeciderKind) -> Result<SApproxSpace> {
    check_size("u_size", u_size, MAX_RANDOM_U)?;
    let w = random_w(w_size)?;
    let u = Universe::new((1..=u_size).map(|i| format!("u{i}")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let subsets = 1u64 << w_size;
    let t: Vec<ElementSet> = (0..u_size)
        .map(|_| w.set_from_mask(rng.gen_range(0..subsets)))
        .collect();
    let s = match kind {
        DeciderKind::Inclusion => Decider::Inclusion,
        DeciderKind::Intersects => Decider::Intersects,
        DeciderKind::CardThreshold => Decider::card_threshold(rng.gen_range(1..=w_size))?,
        DeciderKind::Table => {
            let mut images: Vec<ElementSet> = t.clone();
            images.sort();
            images.dedup();
            let entries = images
                .into_iter()
                .map(|a| {
                    let count = rng.gen_range(1..=3);
                    let picks = (0..count).map(|_| rng.gen_range(1..subsets)).collect();
                    let minimal = minimal_masks(picks).into_iter().map(|m| w.set_from_mask(m)).collect();
                    (a, minimal)
                })
                .collect::<Vec<_>>();
            Decider::Table(TableDecider::new(w.clone(), entries)?)
        }
    };
    SApproxSpace::new(u, w, t, s)
}

/// A belief structure on `W = {a, b, …}`; see [`random_belief_over`].
pub fn random_belief(seed: u64, w_size: usize, max_denominator: u32) -> Result<BeliefStructure> {
    random_belief_over(seed, &random_w(w_size)?, max_denominator)
}

/// One to four distinct nonempty focal sets whose masses are `cᵢ/d` for a
/// random composition `c₁ + … + c_k = d` with `k ≤ d ≤ max_denominator`.
pub fn random_belief_over(seed: u64, universe: &Universe, max_denominator: u32) -> Result<BeliefStructure> {
    check_size("universe size", universe.len(), crate::universe::MAX_ENUMERATION_WIDTH)?;
    check_size("max_denominator", max_denominator as usize, MAX_RANDOM_DENOMINATOR as usize)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nonempty = (1u64 << universe.len()) - 1;
    let k = rng.gen_range(1..=4u64.min(nonempty).min(u64::from(max_denominator)));
    let d = rng.gen_range(k..=u64::from(max_denominator));

    let mut masks: Vec<u64> = Vec::with_capacity(k as usize);
    while masks.len() < k as usize {
        let m = rng.gen_range(1..=nonempty);
        if !masks.contains(&m) {
            masks.push(m);
        }
    }
    // k - 1 distinct cut points in 1..d split d into k positive parts
    let mut cuts: Vec<u64> = sample(&mut rng, (d - 1) as usize, (k - 1) as usize)
        .into_iter()
        .map(|c| c as u64 + 1)
        .collect();
    cuts.sort_unstable();
    cuts.push(d);
    let mut prev = 0;
    let mut entries = Vec::with_capacity(k as usize);
    for (mask, cut) in masks.into_iter().zip(cuts) {
        let mass = Rational::new(i128::from(cut - prev), i128::from(d))?;
        entries.push((universe.set_from_mask(mask), mass));
        prev = cut;
    }
    BeliefStructure::new(universe.clone(), entries)
}

/// SplitMix64 of `master` and `trial`: the seed of one trial in a run.
pub fn trial_seed(master: u64, trial: u64) -> u64 {
    let mut z = master ^ trial.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
