//! Bounded check of the belief-function axioms.

use crate::error::{Error, Result};
use crate::evidence::mobius::{mobius, SetFunction};
use crate::rational::Rational;
use crate::universe::ElementSet;

/// A family `{X₁, …, X_ℓ}` for which
/// `f(∪ Xᵢ) ≥ Σ_{∅≠I} (−1)^{|I|+1} f(∩_{i∈I} Xᵢ)` fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyViolation {
    pub family: Vec<ElementSet>,
    /// `f(∪ Xᵢ)`.
    pub lhs: Rational,
    /// The inclusion-exclusion sum.
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub depth: usize,
    pub empty_is_zero: bool,
    pub whole_is_one: bool,
    /// Number of families of size ≤ `depth` violating the inequality.
    pub violations: usize,
    /// The violating family with the largest `rhs − lhs`; ties go to the
    /// smaller family, then to the lexicographically first mask tuple.
    pub worst: Option<FamilyViolation>,
    /// Möbius masses all ≥ 0, i.e. `f` is a belief function as long as the
    /// two boundary conditions hold.
    pub mobius_nonnegative: bool,
    /// Lowest-mask set carrying negative Möbius mass.
    pub negative_mass: Option<(ElementSet, Rational)>,
}

impl AxiomReport {
    /// Boundary conditions and every family inequality up to `depth`.
    pub fn passes(&self) -> bool {
        self.empty_is_zero && self.whole_is_one && self.violations == 0
    }

    pub fn is_belief_function(&self) -> bool {
        self.empty_is_zero && self.whole_is_one && self.mobius_nonnegative
    }
}

/// Largest `|W|` for which families of size up to `depth` are enumerated.
pub fn axiom_width_cap(depth: usize) -> usize {
    match depth {
        0 | 1 => crate::universe::MAX_ENUMERATION_WIDTH,
        2 => 10,
        _ => 4,
    }
}

/// Visits every strictly increasing `len`-tuple drawn from `0..n`.
fn for_each_combination(n: usize, len: usize, mut visit: impl FnMut(&[usize]) -> Result<()>) -> Result<()> {
    if len > n {
        return Ok(());
    }
    let mut idx: Vec<usize> = (0..len).collect();
    loop {
        visit(&idx)?;
        let Some(pos) = (0..len).rev().find(|&i| idx[i] != i + n - len) else {
            return Ok(());
        };
        idx[pos] += 1;
        for j in pos + 1..len {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Inclusion-exclusion sum `Σ_{∅≠I} (−1)^{|I|+1} f(∩_{i∈I} Xᵢ)` and the
/// value on the union.
pub(crate) fn family_sides(f: &SetFunction, masks: &[u64]) -> Result<(Rational, Rational)> {
    let full = f.universe().full_set().mask().expect("enumerable universe");
    let union = masks.iter().fold(0, |acc, m| acc | m);
    let mut rhs = Rational::ZERO;
    for pick in 1u32..1 << masks.len() {
        let meet = masks
            .iter()
            .enumerate()
            .filter(|(i, _)| pick & 1 << i != 0)
            .fold(full, |acc, (_, m)| acc & m);
        let term = f.value(meet);
        rhs = if pick.count_ones() % 2 == 1 {
            rhs.checked_add(term)?
        } else {
            rhs.checked_sub(term)?
        };
    }
    Ok((f.value(union), rhs))
}

/// Checks `f(∅) = 0`, `f(W) = 1` and the superadditivity inequality for all
/// families of at most `depth` distinct subsets, and separately whether the
/// Möbius inverse of `f` is non-negative.
pub fn check_belief_axioms(f: &SetFunction, depth: usize) -> Result<AxiomReport> {
    let w = f.universe();
    let cap = axiom_width_cap(depth);
    if w.len() > cap {
        return Err(Error::SizeCap { size: w.len(), cap });
    }
    let subsets = f.values().len();
    let mut violations = 0;
    let mut worst: Option<(Rational, FamilyViolation)> = None;
    for len in 1..=depth {
        for_each_combination(subsets, len, |idx| {
            let masks: Vec<u64> = idx.iter().map(|&i| i as u64).collect();
            let (lhs, rhs) = family_sides(f, &masks)?;
            if lhs < rhs {
                violations += 1;
                let gap = rhs.checked_sub(lhs)?;
                if worst.as_ref().is_none_or(|(g, _)| gap > *g) {
                    let family = masks.iter().map(|&m| w.set_from_mask(m)).collect();
                    worst = Some((gap, FamilyViolation { family, lhs, rhs }));
                }
            }
            Ok(())
        })?;
    }
    let masses = mobius(f)?;
    let negative_mass = masses.entries().find(|(_, v)| v.is_negative());
    Ok(AxiomReport {
        depth,
        empty_is_zero: f.value(0).is_zero(),
        whole_is_one: f.value((subsets - 1) as u64) == Rational::ONE,
        violations,
        worst: worst.map(|(_, v)| v),
        mobius_nonnegative: negative_mass.is_none(),
        negative_mass,
    })
}
