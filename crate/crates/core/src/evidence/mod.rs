//! Belief structures over a finite frame, with belief and plausibility in
//! exact arithmetic.

mod axioms;
mod mobius;

pub use axioms::{axiom_width_cap, check_belief_axioms, AxiomReport, FamilyViolation};
pub use mobius::{mobius, zeta, SetFunction};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::{labels_of, BeliefDoc, MassEntry};
use crate::rational::Rational;
use crate::universe::{ElementSet, Universe};

/// Focal sets with their (positive) masses.
///
/// Invariants: no mass on `∅`, every mass positive, masses sum to exactly 1.
/// Focal sets are kept in ascending mask order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BeliefStructure {
    w: Universe,
    focal: Vec<(ElementSet, Rational)>,
}

/// `[Bel(X), Pl(X)]` and the ignorance `Pl(X) − Bel(X)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvidenceReading {
    pub bel: Rational,
    pub pl: Rational,
    pub ignorance: Rational,
}

impl BeliefStructure {
    pub fn new(w: Universe, entries: Vec<(ElementSet, Rational)>) -> Result<BeliefStructure> {
        let mut focal = Vec::with_capacity(entries.len());
        for (set, mass) in entries {
            if *set.universe() != w {
                return Err(Error::UniverseMismatch);
            }
            if set.is_empty() {
                return Err(Error::MassOnEmptySet);
            }
            if !mass.is_positive() {
                return Err(Error::NonPositiveMass {
                    set: set.to_string(),
                    value: mass.to_string(),
                });
            }
            focal.push((set, mass));
        }
        focal.sort_by(|a, b| a.0.cmp(&b.0));
        if let Some(pair) = focal.windows(2).find(|p| p[0].0 == p[1].0) {
            return Err(Error::DuplicateFocalSet(pair[0].0.to_string()));
        }
        let total = Rational::try_sum(focal.iter().map(|(_, m)| *m))?;
        if total != Rational::ONE {
            return Err(Error::MassSumNotOne(total.to_string()));
        }
        Ok(BeliefStructure { w, focal })
    }

    pub fn universe(&self) -> &Universe {
        &self.w
    }

    pub fn focal_elements(&self) -> &[(ElementSet, Rational)] {
        &self.focal
    }

    /// `m(X)`, zero for non-focal sets.
    pub fn mass(&self, x: &ElementSet) -> Rational {
        self.focal
            .iter()
            .find(|(s, _)| s == x)
            .map_or(Rational::ZERO, |(_, m)| *m)
    }

    /// Least common multiple of the mass denominators.
    pub fn common_denominator(&self) -> Result<i128> {
        self.focal.iter().try_fold(1i128, |acc, (_, m)| {
            let d = m.denom();
            let g = {
                let (mut a, mut b) = (acc, d);
                while b != 0 {
                    (a, b) = (b, a % b);
                }
                a
            };
            (acc / g).checked_mul(d).ok_or(Error::Overflow)
        })
    }

    pub fn bel(&self, x: &ElementSet) -> Result<Rational> {
        self.check(x)?;
        Rational::try_sum(
            self.focal
                .iter()
                .filter(|(y, _)| y.bits().is_subset(x.bits()))
                .map(|(_, m)| *m),
        )
    }

    pub fn pl(&self, x: &ElementSet) -> Result<Rational> {
        self.check(x)?;
        Rational::try_sum(
            self.focal
                .iter()
                .filter(|(y, _)| y.bits().intersects(x.bits()))
                .map(|(_, m)| *m),
        )
    }

    fn check(&self, x: &ElementSet) -> Result<()> {
        if *x.universe() == self.w {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub fn belief_function(&self) -> Result<SetFunction> {
        SetFunction::from_fn(self.w.clone(), |x| self.bel(x))
    }

    pub fn plausibility_function(&self) -> Result<SetFunction> {
        SetFunction::from_fn(self.w.clone(), |x| self.pl(x))
    }

    /// The full mass function, zero off the focal sets.
    pub fn mass_function(&self) -> Result<SetFunction> {
        SetFunction::from_fn(self.w.clone(), |x| Ok(self.mass(x)))
    }

    pub fn to_doc(&self) -> BeliefDoc {
        BeliefDoc {
            w: self.w.labels().to_vec(),
            m: self
                .focal
                .iter()
                .map(|(s, v)| MassEntry {
                    set: labels_of(s),
                    value: *v,
                })
                .collect(),
        }
    }

    pub fn from_doc(doc: &BeliefDoc) -> Result<BeliefStructure> {
        build_belief_structure(
            &doc.w,
            doc.m.iter().map(|e| (e.set.as_slice(), e.value)),
        )
    }
}

/// Validates labels and masses into a [`BeliefStructure`].
pub fn build_belief_structure<'a, W, I, S>(w_labels: W, mass_entries: I) -> Result<BeliefStructure>
where
    W: IntoIterator,
    W::Item: Into<String>,
    I: IntoIterator<Item = (&'a [S], Rational)>,
    S: AsRef<str> + 'a,
{
    let w = Universe::new(w_labels)?;
    let entries = mass_entries
        .into_iter()
        .map(|(labels, mass)| Ok((w.set(labels)?, mass)))
        .collect::<Result<Vec<_>>>()?;
    BeliefStructure::new(w, entries)
}

pub fn evaluate(bs: &BeliefStructure, x: &ElementSet) -> Result<EvidenceReading> {
    let bel = bs.bel(x)?;
    let pl = bs.pl(x)?;
    Ok(EvidenceReading {
        bel,
        pl,
        ignorance: pl.checked_sub(bel)?,
    })
}
