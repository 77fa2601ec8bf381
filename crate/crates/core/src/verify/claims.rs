//! Claim identifiers, reports, witnesses, and the per-instance checks.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bridges::{belief_from_space, induce_belief, space_from_belief, Diagnostic, Mode};
use crate::error::{Error, Result};
use crate::evidence::{check_belief_axioms, BeliefStructure, SetFunction};
use crate::format::{labels_of, BeliefDoc, SpaceDoc};
use crate::monotone::{check_partial_monotone, is_irreducible, MonotoneScope};
use crate::rational::Rational;
use crate::regions::{decompose, lower_approx, lower_quality_function, upper_approx, upper_quality_function};
use crate::space::SApproxSpace;
use crate::universe::{Bits, Universe};
use crate::verify::oracle::{naive_inflection_points, naive_mobius};

/// Largest `|W|` the suite enumerates pairs of subsets over.
pub const VERIFY_MAX_W: usize = 8;

/// Largest `|W|` for the family check (families of up to three subsets).
pub const FAMILY_MAX_W: usize = 4;

/// One checkable statement.
///
/// `Prop21(k)` is item `k` (1 to 15) of the list of approximation laws;
/// the rest concern qualities and belief structures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimId {
    Prop21(u8),
    P32,
    P33,
    P34,
    P35,
    P36,
    P37,
    T38,
    T39,
    T310,
}

impl ClaimId {
    /// Every claim, in report order.
    pub fn all() -> Vec<ClaimId> {
        (1..=15)
            .map(ClaimId::Prop21)
            .chain([
                ClaimId::P32,
                ClaimId::P33,
                ClaimId::P34,
                ClaimId::P35,
                ClaimId::P36,
                ClaimId::P37,
                ClaimId::T38,
                ClaimId::T39,
                ClaimId::T310,
            ])
            .collect()
    }

    fn needs_space(self) -> bool {
        self != ClaimId::T39
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClaimId::Prop21(k) => write!(f, "P2.1-{k}"),
            ClaimId::P32 => f.write_str("P3.2"),
            ClaimId::P33 => f.write_str("P3.3"),
            ClaimId::P34 => f.write_str("P3.4"),
            ClaimId::P35 => f.write_str("P3.5"),
            ClaimId::P36 => f.write_str("P3.6"),
            ClaimId::P37 => f.write_str("P3.7"),
            ClaimId::T38 => f.write_str("T3.8"),
            ClaimId::T39 => f.write_str("T3.9"),
            ClaimId::T310 => f.write_str("T3.10"),
        }
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<ClaimId> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("P2.1-") {
            // the canonical spelling only, so "P2.1-07" is rejected
            return match rest.parse::<u8>() {
                Ok(k @ 1..=15) if k.to_string() == rest => Ok(ClaimId::Prop21(k)),
                _ => Err(Error::UnknownClaim(s.to_string())),
            };
        }
        ClaimId::all()
            .into_iter()
            .find(|c| c.to_string() == s)
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

impl Serialize for ClaimId {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ClaimId {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a comma-separated claim list; `all` selects every claim.
pub fn parse_claims(list: &str) -> Result<Vec<ClaimId>> {
    if list.trim() == "all" {
        return Ok(ClaimId::all());
    }
    let mut claims = list
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect::<Result<Vec<ClaimId>>>()?;
    if claims.is_empty() {
        return Err(Error::InvalidArgument("no claims selected".into()));
    }
    claims.sort();
    claims.dedup();
    Ok(claims)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Holds,
    Counterexample,
    SkippedPrecondition,
}

/// What went wrong on the witness instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum Detail {
    /// The query sets `X` (and `Y`) at which an approximation law fails.
    Subsets { sets: Vec<Vec<String>> },
    /// `f(∪ Xᵢ) = lhs < rhs`, the inclusion-exclusion sum.
    Family {
        family: Vec<Vec<String>>,
        lhs: Rational,
        rhs: Rational,
    },
    NegativeMass { set: Vec<String>, value: Rational },
    /// A computed `quantity` at `set` differs from its reference value.
    Mismatch {
        quantity: String,
        set: Vec<String>,
        expected: Rational,
        actual: Rational,
    },
    Invalid { diagnostics: Vec<Diagnostic> },
    /// A structural guarantee of a construction does not hold.
    Hypothesis { failed: String },
}

/// Inputs that reproduce a counterexample, plus the failure seen on them.
///
/// `space` is present for every claim but T3.9. `belief` is the structure
/// on `W` for T3.9 and the structure on `U` for T3.10.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Witness {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<SpaceDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub belief: Option<BeliefDoc>,
    pub detail: Detail,
}

/// Result for one claim over all instances of a run.
///
/// `trials` counts every instance; `skipped` the ones that did not meet the
/// claim's hypotheses. The witness is from the first failing instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClaimReport {
    pub claim: ClaimId,
    pub status: ClaimStatus,
    pub trials: usize,
    pub skipped: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

pub(crate) enum Outcome {
    Holds,
    Skipped,
    Fails {
        detail: Detail,
        belief: Option<BeliefDoc>,
    },
}

impl Outcome {
    fn fails(detail: Detail) -> Outcome {
        Outcome::Fails { detail, belief: None }
    }
}

/// One input to the claim checks.
pub(crate) struct Instance {
    pub space: Option<SApproxSpace>,
    /// Input of the round-trip claim. When absent and `derive_belief` is
    /// set, the belief induced by `space` is used if it is valid.
    pub belief_w: Option<BeliefStructure>,
    pub derive_belief: bool,
    /// Inputs of the induction claim, all over the space's `U`.
    pub beliefs_u: Vec<BeliefStructure>,
}

/// Categorical structures on each singleton of `U` and on `U` itself.
pub(crate) fn categorical_beliefs(u: &Universe) -> Result<Vec<BeliefStructure>> {
    let mut sets: Vec<_> = (0..u.len()).map(|i| u.singleton(i)).collect();
    if u.len() > 1 {
        sets.push(u.full_set());
    }
    sets.into_iter()
        .map(|s| BeliefStructure::new(u.clone(), vec![(s, Rational::ONE)]))
        .collect()
}

/// Approximations, regions and qualities for every query set.
struct SpaceFacts<'a> {
    g: &'a SApproxSpace,
    n_u: usize,
    full: u64,
    lower: Vec<Bits>,
    upper: Vec<Bits>,
    pos: Vec<Bits>,
    neg: Vec<Bits>,
    q_lower: SetFunction,
    q_upper: SetFunction,
    monotone: bool,
    irreducible: bool,
}

impl<'a> SpaceFacts<'a> {
    fn new(g: &'a SApproxSpace) -> Result<SpaceFacts<'a>> {
        let w = g.w();
        if w.len() > VERIFY_MAX_W {
            return Err(Error::SizeCap {
                size: w.len(),
                cap: VERIFY_MAX_W,
            });
        }
        let len = 1u64 << w.len();
        let mut facts = SpaceFacts {
            g,
            n_u: g.u().len(),
            full: len - 1,
            lower: Vec::with_capacity(len as usize),
            upper: Vec::with_capacity(len as usize),
            pos: Vec::with_capacity(len as usize),
            neg: Vec::with_capacity(len as usize),
            q_lower: lower_quality_function(g)?,
            q_upper: upper_quality_function(g)?,
            monotone: check_partial_monotone(g, MonotoneScope::Space)?.holds,
            irreducible: false,
        };
        facts.irreducible = facts.monotone && is_irreducible(g)?;
        for m in 0..len {
            let x = w.set_from_mask(m);
            facts.lower.push(lower_approx(g, &x)?.bits().clone());
            facts.upper.push(upper_approx(g, &x)?.bits().clone());
            let regions = decompose(g, &x)?;
            facts.pos.push(regions.pos.bits().clone());
            facts.neg.push(regions.neg.bits().clone());
        }
        Ok(facts)
    }

    fn len(&self) -> u64 {
        self.full + 1
    }

    fn labels(&self, mask: u64) -> Vec<String> {
        labels_of(&self.g.w().set_from_mask(mask))
    }

    fn law_holds(&self, item: u8, x: u64, y: u64) -> bool {
        let (l, h, p, n) = (&self.lower, &self.upper, &self.pos, &self.neg);
        let (x, y) = (x as usize, y as usize);
        let sub = x & !y == 0;
        match item {
            1 => !sub || h[x].is_subset(&h[y]),
            2 => !sub || l[x].is_subset(&l[y]),
            3 => h[x].union(&h[y]).is_subset(&h[x | y]),
            4 => h[x & y].is_subset(&h[x].intersection(&h[y])),
            5 => l[x].union(&l[y]).is_subset(&l[x | y]),
            6 => l[x & y].is_subset(&l[x].intersection(&l[y])),
            7 => h[x] == l[self.full as usize ^ x].complement(self.n_u),
            8 => l[x] == h[self.full as usize ^ x].complement(self.n_u),
            9 => !sub || p[x].is_subset(&p[y]),
            10 => !sub || n[y].is_subset(&n[x]),
            11 => p[x].union(&p[y]).is_subset(&p[x | y]),
            12 => n[x | y].is_subset(&n[x].union(&n[y])),
            13 => p[x & y].is_subset(&p[x].intersection(&p[y])),
            14 => n[x].intersection(&n[y]).is_subset(&n[x & y]),
            15 => p[x].intersection(&n[y]).is_subset(&p[x].intersection(&n[x & y])),
            _ => unreachable!("law numbers are validated on parse"),
        }
    }

    /// Items 7 and 8 are identities of the definitions; the others need
    /// partial monotonicity.
    fn check_law(&self, item: u8) -> Outcome {
        let unary = matches!(item, 7 | 8);
        if !unary && !self.monotone {
            return Outcome::Skipped;
        }
        for x in 0..self.len() {
            if unary {
                if !self.law_holds(item, x, x) {
                    return Outcome::fails(Detail::Subsets { sets: vec![self.labels(x)] });
                }
                continue;
            }
            for y in 0..self.len() {
                if !self.law_holds(item, x, y) {
                    return Outcome::fails(Detail::Subsets {
                        sets: vec![self.labels(x), self.labels(y)],
                    });
                }
            }
        }
        Outcome::Holds
    }

    fn mismatch(&self, quantity: &str, mask: u64, expected: Rational, actual: Rational) -> Outcome {
        Outcome::fails(Detail::Mismatch {
            quantity: quantity.into(),
            set: self.labels(mask),
            expected,
            actual,
        })
    }

    fn check_duality(&self) -> Result<Outcome> {
        for x in 0..self.len() {
            let expected = Rational::ONE.checked_sub(self.q_upper.value(self.full ^ x))?;
            let actual = self.q_lower.value(x);
            if actual != expected {
                return Ok(self.mismatch("q_lower", x, expected, actual));
            }
        }
        Ok(Outcome::Holds)
    }

    fn check_boundary(&self, x: u64, expected: Rational) -> Outcome {
        if !self.irreducible {
            return Outcome::Skipped;
        }
        let actual = self.q_lower.value(x);
        if actual == expected {
            Outcome::Holds
        } else {
            self.mismatch("q_lower", x, expected, actual)
        }
    }

    fn check_families(&self) -> Result<Outcome> {
        if !self.irreducible || self.g.w().len() > FAMILY_MAX_W {
            return Ok(Outcome::Skipped);
        }
        let report = check_belief_axioms(&self.q_lower, 3)?;
        Ok(match report.worst {
            None => Outcome::Holds,
            Some(v) => Outcome::fails(Detail::Family {
                family: v.family.iter().map(labels_of).collect(),
                lhs: v.lhs,
                rhs: v.rhs,
            }),
        })
    }

    /// First negative mass of the brute-force Möbius inverse of `q_lower`.
    fn negative_mass(&self, masses: &SetFunction) -> Option<Outcome> {
        masses.entries().find(|(_, v)| v.is_negative()).map(|(s, v)| {
            Outcome::fails(Detail::NegativeMass {
                set: labels_of(&s),
                value: v,
            })
        })
    }

    fn check_masses(&self) -> Result<Outcome> {
        if !self.irreducible {
            return Ok(Outcome::Skipped);
        }
        let masses = naive_mobius(&self.q_lower)?;
        Ok(self.negative_mass(&masses).unwrap_or(Outcome::Holds))
    }

    /// `q_upper(X) = Σ_{Y ∩ X ≠ ∅} m(Y)` with `m` the masses of `q_lower`,
    /// after those masses are known to be non-negative.
    fn check_plausibility(&self) -> Result<Outcome> {
        if !self.irreducible {
            return Ok(Outcome::Skipped);
        }
        let masses = naive_mobius(&self.q_lower)?;
        if let Some(out) = self.negative_mass(&masses) {
            return Ok(out);
        }
        for x in 0..self.len() {
            let expected = Rational::try_sum((0..self.len()).filter(|y| y & x != 0).map(|y| masses.value(y)))?;
            let actual = self.q_upper.value(x);
            if actual != expected {
                return Ok(self.mismatch("q_upper", x, expected, actual));
            }
        }
        Ok(Outcome::Holds)
    }

    fn check_induced_masses(&self) -> Result<Outcome> {
        if !self.irreducible {
            return Ok(Outcome::Skipped);
        }
        let reference = naive_mobius(&self.q_lower)?;
        let result = belief_from_space(self.g, Mode::Strict)?;
        for x in 0..self.len() {
            let actual = result.mass(&self.g.w().set_from_mask(x));
            if actual != reference.value(x) {
                return Ok(self.mismatch("mass", x, reference.value(x), actual));
            }
        }
        if !result.valid() {
            return Ok(Outcome::fails(Detail::Invalid {
                diagnostics: result.diagnostics().to_vec(),
            }));
        }
        Ok(Outcome::Holds)
    }

    fn check_induction(&self, beliefs_u: &[BeliefStructure]) -> Result<Outcome> {
        if !self.irreducible || beliefs_u.is_empty() {
            return Ok(Outcome::Skipped);
        }
        let points = (0..self.n_u)
            .map(|x| naive_inflection_points(self.g, x))
            .collect::<Result<Vec<_>>>()?;
        for bs in beliefs_u {
            let result = induce_belief(bs, self.g, Mode::Strict)?;
            let reference = induced_by_summation(bs, &points, self.len())?;
            let failure = (|| {
                for y in 0..self.len() {
                    let actual = result.mass(&self.g.w().set_from_mask(y));
                    if actual != reference[y as usize] {
                        return Ok(Some(Detail::Mismatch {
                            quantity: "m'".into(),
                            set: self.labels(y),
                            expected: reference[y as usize],
                            actual,
                        }));
                    }
                }
                let sum = Rational::try_sum(result.entries().iter().map(|(_, v)| *v))?;
                if sum != Rational::ONE {
                    return Ok(Some(Detail::Mismatch {
                        quantity: "sum".into(),
                        set: Vec::new(),
                        expected: Rational::ONE,
                        actual: sum,
                    }));
                }
                if !result.valid() {
                    return Ok(Some(Detail::Invalid {
                        diagnostics: result.diagnostics().to_vec(),
                    }));
                }
                Ok::<_, Error>(None)
            })()?;
            if let Some(detail) = failure {
                return Ok(Outcome::Fails {
                    detail,
                    belief: Some(bs.to_doc()),
                });
            }
        }
        Ok(Outcome::Holds)
    }
}

/// The induced masses by direct summation over precomputed inflection
/// points, indexed by mask of `W`.
fn induced_by_summation(bs_u: &BeliefStructure, points: &[Vec<u64>], len: u64) -> Result<Vec<Rational>> {
    let mut out = vec![Rational::ZERO; len as usize];
    for (focal, mass) in bs_u.focal_elements() {
        let weight = mass.checked_div(Rational::integer(focal.len() as i128))?;
        for x in focal.indices() {
            for &y in &points[x] {
                let share = weight.checked_div(Rational::integer(points[x].len() as i128))?;
                out[y as usize] = out[y as usize].checked_add(share)?;
            }
        }
    }
    Ok(out)
}

/// Construction from `bs`, compared with `bs` on every subset.
fn check_round_trip(bs: &BeliefStructure) -> Result<Outcome> {
    let w = bs.universe();
    if w.len() > VERIFY_MAX_W {
        return Err(Error::SizeCap {
            size: w.len(),
            cap: VERIFY_MAX_W,
        });
    }
    let h = space_from_belief(bs)?;
    if !check_partial_monotone(&h, MonotoneScope::Space)?.holds {
        return Ok(Outcome::fails(Detail::Hypothesis {
            failed: "constructed space is not partial monotone".into(),
        }));
    }
    if !is_irreducible(&h)? {
        return Ok(Outcome::fails(Detail::Hypothesis {
            failed: "constructed space is reducible".into(),
        }));
    }
    let q_lower = lower_quality_function(&h)?;
    let q_upper = upper_quality_function(&h)?;
    let induced = belief_from_space(&h, Mode::Strict)?;
    for (x, set) in w.powerset()?.enumerate() {
        let checks = [
            ("bel", bs.bel(&set)?, q_lower.values()[x]),
            ("pl", bs.pl(&set)?, q_upper.values()[x]),
            ("mass", bs.mass(&set), induced.mass(&set)),
        ];
        for (quantity, expected, actual) in checks {
            if expected != actual {
                return Ok(Outcome::fails(Detail::Mismatch {
                    quantity: quantity.into(),
                    set: labels_of(&set),
                    expected,
                    actual,
                }));
            }
        }
    }
    if !induced.valid() {
        return Ok(Outcome::fails(Detail::Invalid {
            diagnostics: induced.diagnostics().to_vec(),
        }));
    }
    Ok(Outcome::Holds)
}

/// Checks each claim on one instance, in the order given.
pub(crate) fn run_instance(inst: &Instance, claims: &[ClaimId]) -> Result<Vec<(Outcome, Option<Witness>)>> {
    let facts = match &inst.space {
        Some(g) if claims.iter().any(|c| c.needs_space()) || inst.derive_belief => Some(SpaceFacts::new(g)?),
        _ => None,
    };
    let space_doc = inst.space.as_ref().map(SApproxSpace::to_doc);
    let mut out = Vec::with_capacity(claims.len());
    for &claim in claims {
        let mut round_trip_input = None;
        let outcome = match (claim, &facts) {
            (ClaimId::T39, _) => {
                let bs = match (&inst.belief_w, &facts) {
                    (Some(bs), _) => Some(bs.clone()),
                    (None, Some(f)) if inst.derive_belief && f.irreducible => {
                        let r = belief_from_space(f.g, Mode::Strict)?;
                        if r.valid() {
                            Some(r.to_belief_structure()?)
                        } else {
                            None
                        }
                    }
                    _ => None,
                };
                match bs {
                    Some(bs) => {
                        let outcome = check_round_trip(&bs)?;
                        round_trip_input = Some(bs.to_doc());
                        outcome
                    }
                    None => Outcome::Skipped,
                }
            }
            (_, None) => Outcome::Skipped,
            (ClaimId::Prop21(k), Some(f)) => f.check_law(k),
            (ClaimId::P32, Some(f)) => f.check_duality()?,
            (ClaimId::P33, Some(f)) => f.check_boundary(0, Rational::ZERO),
            (ClaimId::P34, Some(f)) => f.check_boundary(f.full, Rational::ONE),
            (ClaimId::P35, Some(f)) => f.check_families()?,
            (ClaimId::P36, Some(f)) => f.check_masses()?,
            (ClaimId::P37, Some(f)) => f.check_plausibility()?,
            (ClaimId::T38, Some(f)) => f.check_induced_masses()?,
            (ClaimId::T310, Some(f)) => f.check_induction(&inst.beliefs_u)?,
        };
        let witness = match &outcome {
            Outcome::Fails { detail, belief } => Some(Witness {
                space: if claim.needs_space() { space_doc.clone() } else { None },
                belief: belief.clone().or(round_trip_input),
                detail: detail.clone(),
            }),
            _ => None,
        };
        out.push((outcome, witness));
    }
    Ok(out)
}

/// Rebuilds the instance a witness describes.
pub(crate) fn instance_from_witness(claim: ClaimId, witness: &Witness) -> Result<Instance> {
    let space = witness.space.as_ref().map(SApproxSpace::from_doc).transpose()?;
    let belief = witness.belief.as_ref().map(BeliefStructure::from_doc).transpose()?;
    let missing = |what: &str| Error::InvalidArgument(format!("{claim} witness needs a {what}"));
    Ok(match claim {
        ClaimId::T39 => Instance {
            space: None,
            belief_w: Some(belief.ok_or_else(|| missing("belief"))?),
            derive_belief: false,
            beliefs_u: Vec::new(),
        },
        ClaimId::T310 => Instance {
            space: Some(space.ok_or_else(|| missing("space"))?),
            belief_w: None,
            derive_belief: false,
            beliefs_u: vec![belief.ok_or_else(|| missing("belief"))?],
        },
        _ => Instance {
            space: Some(space.ok_or_else(|| missing("space"))?),
            belief_w: None,
            derive_belief: false,
            beliefs_u: Vec::new(),
        },
    })
}
