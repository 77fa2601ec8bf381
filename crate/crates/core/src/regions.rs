//! Lower and upper approximations, the three decision regions, and the
//! qualities of approximation.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::evidence::SetFunction;
use crate::format::labels_of;
use crate::rational::Rational;
use crate::space::SApproxSpace;
use crate::universe::{Bits, ElementSet};

/// Positive, negative and boundary regions of `U` for one query set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionDecomposition {
    pub pos: ElementSet,
    pub neg: ElementSet,
    pub br: ElementSet,
    pub query: ElementSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QualityPair {
    pub q_lower: Rational,
    pub q_upper: Rational,
}

fn collect(g: &SApproxSpace, keep: impl Fn(&ElementSet) -> bool) -> ElementSet {
    let mut bits = Bits::empty(g.u().len());
    for (i, img) in g.images().iter().enumerate() {
        if keep(img) {
            bits.insert(i);
        }
    }
    ElementSet::from_bits(g.u().clone(), bits)
}

/// `{x ∈ U : S(T(x), X) = 1}`.
pub fn lower_approx(g: &SApproxSpace, x: &ElementSet) -> Result<ElementSet> {
    g.check_query(x)?;
    let s = g.decider();
    Ok(collect(g, |a| s.accepts_bits(a.bits(), x.bits())))
}

/// `{x ∈ U : S(T(x), Xᶜ) = 0}`.
pub fn upper_approx(g: &SApproxSpace, x: &ElementSet) -> Result<ElementSet> {
    g.check_query(x)?;
    let s = g.decider();
    let xc = x.complement();
    Ok(collect(g, |a| !s.accepts_bits(a.bits(), xc.bits())))
}

/// Splits `U` into POS / NEG / BR for `x`.
///
/// The regions are computed from the lower and upper approximations; in
/// debug builds they are also recomputed from the raw decider verdicts and
/// the two must agree.
pub fn decompose(g: &SApproxSpace, x: &ElementSet) -> Result<RegionDecomposition> {
    let lower = lower_approx(g, x)?;
    let upper = upper_approx(g, x)?;
    let pos = lower.intersection(&upper)?;
    let neg = lower.union(&upper)?.complement();
    let br = lower.symmetric_difference(&upper)?;
    let regions = RegionDecomposition {
        pos,
        neg,
        br,
        query: x.clone(),
    };
    debug_assert_eq!(regions, decompose_by_verdicts(g, x)?);
    Ok(regions)
}

/// The same regions, read directly off `S(T(x), X)` and `S(T(x), Xᶜ)`.
pub fn decompose_by_verdicts(g: &SApproxSpace, x: &ElementSet) -> Result<RegionDecomposition> {
    g.check_query(x)?;
    let s = g.decider();
    let xc = x.complement();
    let verdicts = |a: &ElementSet| {
        (
            s.accepts_bits(a.bits(), x.bits()),
            s.accepts_bits(a.bits(), xc.bits()),
        )
    };
    Ok(RegionDecomposition {
        pos: collect(g, |a| verdicts(a) == (true, false)),
        neg: collect(g, |a| verdicts(a) == (false, true)),
        br: collect(g, |a| {
            let (p, q) = verdicts(a);
            p == q
        }),
        query: x.clone(),
    })
}

/// `(|POS| / |U|, (|POS| + |BR|) / |U|)` in lowest terms.
pub fn quality(g: &SApproxSpace, x: &ElementSet) -> Result<QualityPair> {
    let r = decompose(g, x)?;
    let n = g.u().len() as i128;
    let pos = r.pos.len() as i128;
    let br = r.br.len() as i128;
    Ok(QualityPair {
        q_lower: Rational::new(pos, n)?,
        q_upper: Rational::new(pos + br, n)?,
    })
}

/// `X ↦ q_lower(X)` over the whole power set of `W`.
pub fn lower_quality_function(g: &SApproxSpace) -> Result<SetFunction> {
    let w = g.w();
    let values = w
        .powerset()?
        .map(|x| quality(g, &x).map(|q| q.q_lower))
        .collect::<Result<Vec<_>>>()?;
    SetFunction::new(w.clone(), values)
}

/// `X ↦ q_upper(X)` over the whole power set of `W`.
pub fn upper_quality_function(g: &SApproxSpace) -> Result<SetFunction> {
    let w = g.w();
    let values = w
        .powerset()?
        .map(|x| quality(g, &x).map(|q| q.q_upper))
        .collect::<Result<Vec<_>>>()?;
    SetFunction::new(w.clone(), values)
}

/// Label-array view used by the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegionsDoc {
    pub lower: Vec<String>,
    pub upper: Vec<String>,
    pub pos: Vec<String>,
    pub neg: Vec<String>,
    pub br: Vec<String>,
}

impl RegionsDoc {
    pub fn compute(g: &SApproxSpace, x: &ElementSet) -> Result<RegionsDoc> {
        let r = decompose(g, x)?;
        Ok(RegionsDoc {
            lower: labels_of(&lower_approx(g, x)?),
            upper: labels_of(&upper_approx(g, x)?),
            pos: labels_of(&r.pos),
            neg: labels_of(&r.neg),
            br: labels_of(&r.br),
        })
    }
}
