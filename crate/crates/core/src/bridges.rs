//! Constructions between S-approximation spaces and belief structures.
//!
//! - [`belief_from_space`]: Möbius inverse of the lower quality.
//! - [`space_from_belief`]: an inclusion-decider space whose qualities are
//!   the given belief and plausibility.
//! - [`induce_belief`]: carries a belief structure on `U` over to `W`
//!   through the inflection sets of a space.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::decider::Decider;
use crate::error::{Error, Result};
use crate::evidence::{mobius, BeliefStructure};
use crate::format::labels_of;
use crate::monotone::{check_partial_monotone, InflectionSet, MonotoneScope};
use crate::rational::Rational;
use crate::regions::lower_quality_function;
use crate::space::SApproxSpace;
use crate::universe::{ElementSet, Universe};

/// Whether unmet hypotheses abort the construction or are only reported.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    Strict,
    #[default]
    Permissive,
}

/// A problem found with a candidate mass function or its inputs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Diagnostic {
    NegativeMass { set: Vec<String>, value: Rational },
    MassOnEmptySet { value: Rational },
    MassSumNotOne { sum: Rational },
    /// A set in the declared support whose computed mass is zero.
    ZeroMassInSupport { set: Vec<String> },
    NotPartialMonotone { a: Vec<String>, x: Vec<String>, y: Vec<String> },
    Reducible { trivial: Vec<String> },
}

impl Diagnostic {
    /// Whether this diagnostic breaks the belief-structure invariants.
    pub fn invalidates(&self) -> bool {
        matches!(
            self,
            Diagnostic::NegativeMass { .. }
                | Diagnostic::MassOnEmptySet { .. }
                | Diagnostic::MassSumNotOne { .. }
        )
    }
}

/// A candidate mass function on `W`, its validity, and what is wrong with it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMassResult {
    w: Universe,
    entries: Vec<(ElementSet, Rational)>,
    valid: bool,
    diagnostics: Vec<Diagnostic>,
}

impl InducedMassResult {
    /// Assesses `entries` (ascending, one per set) and appends the mass
    /// diagnostics to `hypotheses`.
    fn assess(
        w: Universe,
        entries: Vec<(ElementSet, Rational)>,
        mut diagnostics: Vec<Diagnostic>,
    ) -> Result<InducedMassResult> {
        for (set, value) in &entries {
            if set.is_empty() && !value.is_zero() {
                diagnostics.push(Diagnostic::MassOnEmptySet { value: *value });
            } else if value.is_negative() {
                diagnostics.push(Diagnostic::NegativeMass {
                    set: labels_of(set),
                    value: *value,
                });
            }
        }
        let sum = Rational::try_sum(entries.iter().map(|(_, v)| *v))?;
        if sum != Rational::ONE {
            diagnostics.push(Diagnostic::MassSumNotOne { sum });
        }
        let valid = !diagnostics.iter().any(Diagnostic::invalidates);
        Ok(InducedMassResult {
            w,
            entries,
            valid,
            diagnostics,
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.w
    }

    /// Candidate masses in ascending set order (the declared support).
    pub fn entries(&self) -> &[(ElementSet, Rational)] {
        &self.entries
    }

    pub fn mass(&self, set: &ElementSet) -> Rational {
        self.entries
            .iter()
            .find(|(s, _)| s == set)
            .map_or(Rational::ZERO, |(_, v)| *v)
    }

    pub fn valid(&self) -> bool {
        self.valid
    }

    pub fn diagnostics(&self) -> &[Diagnostic] {
        &self.diagnostics
    }

    /// The validated structure, dropping zero-mass support entries.
    pub fn to_belief_structure(&self) -> Result<BeliefStructure> {
        BeliefStructure::new(
            self.w.clone(),
            self.entries
                .iter()
                .filter(|(_, v)| !v.is_zero())
                .cloned()
                .collect(),
        )
    }

    pub fn to_doc(&self) -> InducedMassDoc {
        InducedMassDoc {
            w: self.w.labels().to_vec(),
            m: self
                .entries
                .iter()
                .map(|(s, v)| crate::format::MassEntry {
                    set: labels_of(s),
                    value: *v,
                })
                .collect(),
            valid: self.valid,
            diagnostics: self.diagnostics.clone(),
        }
    }
}

/// `{"W": [...], "m": [...], "valid": bool, "diagnostics": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InducedMassDoc {
    #[serde(rename = "W")]
    pub w: Vec<String>,
    pub m: Vec<crate::format::MassEntry>,
    pub valid: bool,
    pub diagnostics: Vec<Diagnostic>,
}

/// Checks monotonicity and irreducibility, failing in strict mode and
/// collecting diagnostics otherwise. Returns the inflection set when the
/// space is monotone.
fn hypotheses(
    g: &SApproxSpace,
    mode: Mode,
    diagnostics: &mut Vec<Diagnostic>,
) -> Result<Option<InflectionSet>> {
    let report = check_partial_monotone(g, MonotoneScope::Space)?;
    if let Some(wit) = report.witness {
        if mode == Mode::Strict {
            return Err(Error::NotPartialMonotone {
                a: wit.a.to_string(),
                x: wit.x.to_string(),
                y: wit.y.to_string(),
            });
        }
        diagnostics.push(Diagnostic::NotPartialMonotone {
            a: labels_of(&wit.a),
            x: labels_of(&wit.x),
            y: labels_of(&wit.y),
        });
        return Ok(None);
    }
    let inflection = InflectionSet::compute(g)?;
    let trivial = inflection.trivial();
    if !trivial.is_empty() {
        let labels = labels_of(&trivial);
        if mode == Mode::Strict {
            return Err(Error::Reducible(labels));
        }
        diagnostics.push(Diagnostic::Reducible { trivial: labels });
    }
    Ok(Some(inflection))
}

/// `m(X) = Σ_{Y ⊆ X} (−1)^{|X∖Y|} q_lower(Y)`, keeping the sets with
/// `m(X) ≠ 0`.
///
/// Negative masses are reported, not hidden: whether they occur depends on
/// the decider, not only on monotonicity and irreducibility.
pub fn belief_from_space(g: &SApproxSpace, mode: Mode) -> Result<InducedMassResult> {
    g.w().check_enumerable()?;
    let mut diagnostics = Vec::new();
    hypotheses(g, mode, &mut diagnostics)?;
    let masses = mobius(&lower_quality_function(g)?)?;
    let entries = masses.entries().filter(|(_, v)| !v.is_zero()).collect();
    InducedMassResult::assess(g.w().clone(), entries, diagnostics)
}

/// Largest `U` that [`space_from_belief`] will materialize.
pub const MAX_CONSTRUCTED_UNIVERSE: usize = 1 << 20;

/// Inclusion-decider space over `U = {e1, …, ed}`, `d` the common
/// denominator of the masses. Focal sets are taken in ascending order and
/// each `X` receives the next `m(X)·d` labels, all mapped to `X`.
pub fn space_from_belief(bs: &BeliefStructure) -> Result<SApproxSpace> {
    let d = bs.common_denominator()?;
    let size = usize::try_from(d)
        .ok()
        .filter(|&n| n <= MAX_CONSTRUCTED_UNIVERSE)
        .ok_or(Error::SizeCap {
            size: usize::try_from(d).unwrap_or(usize::MAX),
            cap: MAX_CONSTRUCTED_UNIVERSE,
        })?;
    let u = Universe::new((1..=size).map(|i| format!("e{i}")))?;
    let mut t = Vec::with_capacity(size);
    for (set, mass) in bs.focal_elements() {
        let block = mass.checked_mul(Rational::integer(d))?;
        debug_assert_eq!(block.denom(), 1);
        for _ in 0..block.numer() {
            t.push(set.clone());
        }
    }
    SApproxSpace::new(u, bs.universe().clone(), t, Decider::Inclusion)
}

/// Spreads each focal mass of `bs_u` evenly over its elements, then each
/// element's share evenly over its inflection points:
///
/// `m′(Y) = Σ_{X} m(X)/|X| · Σ_{x ∈ X, Y ∈ IP(x)} 1/|IP(x)|`
///
/// The support is every set that is an inflection point of some element
/// of `U`; support sets that end up with zero mass are kept and flagged.
pub fn induce_belief(bs_u: &BeliefStructure, g: &SApproxSpace, mode: Mode) -> Result<InducedMassResult> {
    if bs_u.universe() != g.u() {
        return Err(Error::UniverseMismatch);
    }
    g.w().check_enumerable()?;
    let mut diagnostics = Vec::new();
    let Some(inflection) = hypotheses(g, mode, &mut diagnostics)? else {
        // inflection sets are undefined without monotonicity
        let wit = diagnostics.pop().expect("monotonicity diagnostic");
        let Diagnostic::NotPartialMonotone { a, x, y } = wit else {
            unreachable!()
        };
        return Err(Error::NotPartialMonotone {
            a: format!("{{{}}}", a.join(",")),
            x: format!("{{{}}}", x.join(",")),
            y: format!("{{{}}}", y.join(",")),
        });
    };
    let mut masses: BTreeMap<ElementSet, Rational> = inflection
        .support()
        .into_iter()
        .map(|s| (s, Rational::ZERO))
        .collect();
    for (focal, mass) in bs_u.focal_elements() {
        let share = mass.checked_div(Rational::integer(focal.len() as i128))?;
        for x in focal.indices() {
            let points = inflection.of(x);
            if points.is_empty() {
                continue;
            }
            let part = share.checked_div(Rational::integer(points.len() as i128))?;
            for y in points {
                let slot = masses.get_mut(y).expect("support covers every inflection point");
                *slot = slot.checked_add(part)?;
            }
        }
    }
    for (set, value) in &masses {
        if value.is_zero() {
            diagnostics.push(Diagnostic::ZeroMassInSupport { set: labels_of(set) });
        }
    }
    InducedMassResult::assess(g.w().clone(), masses.into_iter().collect(), diagnostics)
}
