//! Partial monotonicity, inflection sets, trivial elements and reduction.
//!
//! Everything here enumerates `P(W)` and so requires
//! `|W| ≤ MAX_ENUMERATION_WIDTH`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::decider::Decider;
use crate::error::{Error, Result};
use crate::format::labels_of;
use crate::space::SApproxSpace;
use crate::universe::{Bits, ElementSet, Universe};

/// Which first arguments `A` of the decider a monotonicity check covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonotoneScope {
    /// Only the images `T(x)`; this is all any construction here relies on.
    Space,
    /// Every `A ⊆ W`. Table deciders are checked on their listed keys
    /// (unlisted keys reject everything and pass vacuously).
    Decider,
}

/// `S(A, X) = 1`, `X ⊆ Y`, `S(A, Y) = 0`, with `Y` covering `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneWitness {
    pub a: ElementSet,
    pub x: ElementSet,
    pub y: ElementSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneReport {
    pub holds: bool,
    pub witness: Option<MonotoneWitness>,
}

/// First `(X, Y)` in ascending `X`, then ascending added bit, where
/// `accept(X)` holds and `accept(Y)` fails for `Y = X ∪ {i}`.
///
/// A failure anywhere along a chain shows up on some covering pair, so
/// checking covers is enough.
pub(crate) fn monotonicity_violation(n: usize, accept: impl Fn(u64) -> bool) -> Option<(u64, u64)> {
    let verdicts: Vec<bool> = (0..1u64 << n).map(&accept).collect();
    for x in 0..1u64 << n {
        if !verdicts[x as usize] {
            continue;
        }
        for i in 0..n {
            let y = x | 1 << i;
            if y != x && !verdicts[y as usize] {
                return Some((x, y));
            }
        }
    }
    None
}

/// Masks with exactly `k` of the low `n` bits set, ascending.
fn masks_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let mut next = if k <= n { Some((1u64 << k) - 1) } else { None };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let low = cur & cur.wrapping_neg();
            let ripple = cur + low;
            let succ = (((ripple ^ cur) >> 2) / low) | ripple;
            (succ < limit).then_some(succ)
        };
        Some(cur)
    })
}

/// Minimal accepted masks of a monotone predicate, ascending by size and
/// then by mask. Candidates containing a known minimal set are skipped
/// without evaluating `accept`.
pub(crate) fn minimal_accepted(n: usize, accept: impl Fn(u64) -> bool) -> Vec<u64> {
    let mut found: Vec<u64> = Vec::new();
    for k in 0..=n {
        let before = found.len();
        for x in masks_of_size(n, k) {
            if found[..before].iter().any(|m| m & !x == 0) {
                continue;
            }
            if accept(x) {
                found.push(x);
            }
        }
    }
    found
}

fn image_predicate<'a>(s: &'a Decider, n: usize, a: &'a Bits) -> impl Fn(u64) -> bool + 'a {
    move |x| s.accepts_bits(a, &Bits::from_mask(n, x))
}

fn witness(w: &Universe, a: &Bits, x: u64, y: u64) -> MonotoneWitness {
    MonotoneWitness {
        a: ElementSet::from_bits(w.clone(), a.clone()),
        x: w.set_from_mask(x),
        y: w.set_from_mask(y),
    }
}

// Above this width the decider-scope sweep over every `A` of a built-in
// kind (4^n · n verdicts) is replaced by the kind's closed-form property.
const FULL_DECIDER_SWEEP_WIDTH: usize = 10;

pub fn check_partial_monotone(g: &SApproxSpace, scope: MonotoneScope) -> Result<MonotoneReport> {
    let w = g.w();
    w.check_enumerable()?;
    let n = w.len();
    let s = g.decider();
    let keys: Vec<Bits> = match (scope, s) {
        (MonotoneScope::Space, _) => {
            let mut images: Vec<Bits> = g.images().iter().map(|a| a.bits().clone()).collect();
            images.sort();
            images.dedup();
            images
        }
        (MonotoneScope::Decider, Decider::Table(t)) => t.keys().cloned().collect(),
        (MonotoneScope::Decider, Decider::CardThreshold(_)) => vec![Bits::empty(n)],
        (MonotoneScope::Decider, _) if n <= FULL_DECIDER_SWEEP_WIDTH => {
            (0..1u64 << n).map(|m| Bits::from_mask(n, m)).collect()
        }
        (MonotoneScope::Decider, _) => Vec::new(),
    };
    for a in &keys {
        if let Some((x, y)) = monotonicity_violation(n, image_predicate(s, n, a)) {
            return Ok(MonotoneReport {
                holds: false,
                witness: Some(witness(w, a, x, y)),
            });
        }
    }
    Ok(MonotoneReport {
        holds: true,
        witness: None,
    })
}

fn minimal_for_image(g: &SApproxSpace, a: &Bits) -> Result<Vec<u64>> {
    let n = g.w().len();
    let s = g.decider();
    if let Some((x, y)) = monotonicity_violation(n, image_predicate(s, n, a)) {
        let wit = witness(g.w(), a, x, y);
        return Err(Error::NotPartialMonotone {
            a: wit.a.to_string(),
            x: wit.x.to_string(),
            y: wit.y.to_string(),
        });
    }
    Ok(minimal_accepted(n, image_predicate(s, n, a)))
}

/// `IP_G(x)`: the minimal sets `X` with `S(T(x), X) = 1`.
///
/// Refuses spaces where `S(T(x), ·)` is not monotone.
pub fn inflection_points(g: &SApproxSpace, x: usize) -> Result<Vec<ElementSet>> {
    g.w().check_enumerable()?;
    let minimal = minimal_for_image(g, g.image(x).bits())?;
    Ok(minimal.into_iter().map(|m| g.w().set_from_mask(m)).collect())
}

/// `IP_G(x)` for every element of `U`, in `U` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InflectionSet {
    u: Universe,
    w: Universe,
    points: Vec<Vec<ElementSet>>,
}

impl InflectionSet {
    /// Elements sharing an image share one computation; distinct images
    /// are processed in parallel.
    pub fn compute(g: &SApproxSpace) -> Result<InflectionSet> {
        g.w().check_enumerable()?;
        let mut distinct: BTreeMap<&Bits, usize> = BTreeMap::new();
        for img in g.images() {
            let next = distinct.len();
            distinct.entry(img.bits()).or_insert(next);
        }
        let mut order: Vec<(&Bits, usize)> = distinct.iter().map(|(b, i)| (*b, *i)).collect();
        order.sort_by_key(|(_, i)| *i);
        let per_image = order
            .par_iter()
            .map(|(a, _)| minimal_for_image(g, a))
            .collect::<Result<Vec<_>>>()?;
        let points = g
            .images()
            .iter()
            .map(|img| {
                per_image[distinct[img.bits()]]
                    .iter()
                    .map(|&m| g.w().set_from_mask(m))
                    .collect()
            })
            .collect();
        Ok(InflectionSet {
            u: g.u().clone(),
            w: g.w().clone(),
            points,
        })
    }

    pub fn u(&self) -> &Universe {
        &self.u
    }

    pub fn w(&self) -> &Universe {
        &self.w
    }

    pub fn of(&self, index: usize) -> &[ElementSet] {
        &self.points[index]
    }

    /// `IP_G(x) = ∅` or `IP_G(x) = {∅}`.
    pub fn is_trivial(&self, index: usize) -> bool {
        match self.points[index].as_slice() {
            [] => true,
            [only] => only.is_empty(),
            _ => false,
        }
    }

    /// The flattened pairs `(x, X)` of `IS(G)`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, &ElementSet)> {
        self.points
            .iter()
            .enumerate()
            .flat_map(|(i, ps)| ps.iter().map(move |p| (i, p)))
    }

    /// Every set appearing as an inflection point, ascending.
    pub fn support(&self) -> Vec<ElementSet> {
        let mut all: Vec<ElementSet> = self.pairs().map(|(_, p)| p.clone()).collect();
        all.sort();
        all.dedup();
        all
    }

    pub fn trivial(&self) -> ElementSet {
        self.u
            .set_from_indices((0..self.points.len()).filter(|&i| self.is_trivial(i)))
    }
}

/// Serializes as `{"x": [[labels], ...], ...}` in `U` order.
impl Serialize for InflectionSet {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = ser.serialize_map(Some(self.points.len()))?;
        for (label, ps) in self.u.labels().iter().zip(&self.points) {
            let sets: Vec<Vec<String>> = ps.iter().map(labels_of).collect();
            map.serialize_entry(label, &sets)?;
        }
        map.end()
    }
}

/// Elements of `U` whose inflection points are `∅` or `{∅}`.
pub fn trivial_elements(g: &SApproxSpace) -> Result<ElementSet> {
    Ok(InflectionSet::compute(g)?.trivial())
}

pub fn is_irreducible(g: &SApproxSpace) -> Result<bool> {
    Ok(trivial_elements(g)?.is_empty())
}

/// Drops every trivial element of `U`. `W`, `S` and the remaining images
/// are unchanged.
///
/// Qualities are not preserved: `|U|` shrinks, so the ratios change even
/// though every non-trivial element keeps its verdicts.
pub fn reduce(g: &SApproxSpace) -> Result<SApproxSpace> {
    let trivial = trivial_elements(g)?;
    if trivial.is_empty() {
        return Ok(g.clone());
    }
    let keep = trivial.complement();
    if keep.is_empty() {
        return Err(Error::AllTrivial);
    }
    g.restrict(&keep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::{DeciderSpec, TableEntry};
    use crate::regions::{lower_approx, upper_approx};
    use crate::space::build_space;
    use crate::space::fixtures::{ex1, ex1_with_trivial, ex2};

    fn names(sets: &[ElementSet]) -> Vec<String> {
        sets.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn gosper_enumerates_each_size_in_order() {
        for n in 0..=6 {
            let mut all = Vec::new();
            for k in 0..=n {
                let masks: Vec<u64> = masks_of_size(n, k).collect();
                assert!(masks.windows(2).all(|w| w[0] < w[1]));
                assert!(masks.iter().all(|m| m.count_ones() as usize == k));
                all.extend(masks);
            }
            all.sort();
            assert_eq!(all, (0..1u64 << n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn violation_witness_on_non_monotone_predicate() {
        // accept exactly the sets of size one: {a} accepted, {a,b} rejected
        let found = monotonicity_violation(3, |x| x.count_ones() == 1);
        assert_eq!(found, Some((0b001, 0b011)));
        assert_eq!(monotonicity_violation(3, |x| x.count_ones() >= 1), None);
    }

    #[test]
    fn minimal_sets_of_monotone_predicates() {
        assert_eq!(minimal_accepted(3, |x| x.count_ones() >= 2), vec![0b011, 0b101, 0b110]);
        assert_eq!(minimal_accepted(3, |_| true), vec![0]);
        assert_eq!(minimal_accepted(3, |_| false), Vec::<u64>::new());
        assert_eq!(minimal_accepted(4, |x| x & 0b0110 == 0b0110 || x & 0b1000 != 0), vec![0b1000, 0b0110]);
    }

    #[test]
    fn partial_monotone_examples() {
        let rep = check_partial_monotone(&ex1(), MonotoneScope::Space).unwrap();
        assert!(rep.holds && rep.witness.is_none());
        assert!(check_partial_monotone(&ex2(), MonotoneScope::Space).unwrap().holds);
        assert!(check_partial_monotone(&ex1(), MonotoneScope::Decider).unwrap().holds);
        let table = build_space(
            ["x"],
            ["a", "b"],
            &[("x", vec!["a"])],
            &DeciderSpec::Table {
                entries: vec![TableEntry {
                    a: vec!["a".into()],
                    minimal: vec![vec!["a".into()]],
                }],
            },
        )
        .unwrap();
        assert!(check_partial_monotone(&table, MonotoneScope::Decider).unwrap().holds);
    }

    #[test]
    fn inflection_examples() {
        let g = ex1();
        assert_eq!(names(&inflection_points(&g, 0).unwrap()), ["{a}"]);
        assert_eq!(names(&inflection_points(&g, 1).unwrap()), ["{a,b}"]);
        let g = ex2();
        assert_eq!(
            names(&inflection_points(&g, 0).unwrap()),
            ["{a,b}", "{a,c}", "{b,c}"]
        );
    }

    #[test]
    fn inflection_set_json() {
        let is = InflectionSet::compute(&ex1_with_trivial()).unwrap();
        assert_eq!(
            crate::format::to_json(&is),
            r#"{"u1":[["a"]],"u2":[["a","b"]],"u3":[[]]}"#
        );
        assert_eq!(is.pairs().count(), 3);
        assert_eq!(names(&is.support()), ["{}", "{a}", "{a,b}"]);
    }

    #[test]
    fn trivial_element_examples() {
        assert!(trivial_elements(&ex1()).unwrap().is_empty());
        assert_eq!(trivial_elements(&ex1_with_trivial()).unwrap().labels(), ["u3"]);
        assert!(trivial_elements(&ex2()).unwrap().is_empty());
        // intersects with an empty image never accepts: IP = ∅
        let g = build_space(["x", "y"], ["a"], &[("x", vec![]), ("y", vec!["a"])], &DeciderSpec::Intersects)
            .unwrap();
        let is = InflectionSet::compute(&g).unwrap();
        assert!(is.of(0).is_empty());
        assert_eq!(is.trivial().labels(), ["x"]);
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&ex1()).unwrap(), ex1());
        assert_eq!(reduce(&ex1_with_trivial()).unwrap(), ex1());
        let lone = build_space(["x"], ["a"], &[("x", Vec::<&str>::new())], &DeciderSpec::Inclusion).unwrap();
        assert_eq!(reduce(&lone).unwrap_err(), Error::AllTrivial);
    }

    #[test]
    fn reduction_keeps_verdicts_of_surviving_elements() {
        let g = ex1_with_trivial();
        let r = reduce(&g).unwrap();
        assert_eq!(reduce(&r).unwrap(), r);
        assert!(trivial_elements(&r).unwrap().is_empty());
        for x in g.w().powerset().unwrap() {
            let keep = |s: ElementSet| -> Vec<String> {
                s.labels().into_iter().filter(|l| *l != "u3").map(String::from).collect()
            };
            let as_strings = |s: ElementSet| -> Vec<String> { s.labels().into_iter().map(String::from).collect() };
            assert_eq!(as_strings(lower_approx(&r, &x).unwrap()), keep(lower_approx(&g, &x).unwrap()));
            assert_eq!(as_strings(upper_approx(&r, &x).unwrap()), keep(upper_approx(&g, &x).unwrap()));
        }
    }

    #[test]
    fn enumeration_cap() {
        let w: Vec<String> = (0..21).map(|i| format!("w{i}")).collect();
        let g = build_space(["x"], w.clone(), &[("x", vec![w[0].clone()])], &DeciderSpec::Inclusion).unwrap();
        assert!(matches!(inflection_points(&g, 0), Err(Error::SizeCap { .. })));
        assert!(matches!(check_partial_monotone(&g, MonotoneScope::Space), Err(Error::SizeCap { .. })));
        assert!(matches!(reduce(&g), Err(Error::SizeCap { .. })));
    }
}
