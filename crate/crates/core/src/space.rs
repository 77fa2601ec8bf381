//! S-approximation spaces `(U, W, T, S)`.

use std::collections::HashSet;

use crate::decider::{Decider, TableDecider};
use crate::error::{Error, Result};
use crate::format::{labels_of, DeciderSpec, SpaceDoc, TableEntry};
use crate::universe::{ElementSet, Universe};

/// An immutable S-approximation space: a knowledge mapping `T` from the
/// elements of `U` to subsets of `W`, and a decider `S` over `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SApproxSpace {
    u: Universe,
    w: Universe,
    t: Vec<ElementSet>,
    s: Decider,
}

impl SApproxSpace {
    /// `t[i]` is the image of the `i`-th element of `u`.
    pub fn new(u: Universe, w: Universe, t: Vec<ElementSet>, s: Decider) -> Result<Self> {
        if t.len() != u.len() {
            let missing = u.labels()[t.len().min(u.len())..]
                .first()
                .cloned()
                .unwrap_or_default();
            return Err(Error::MissingMapping(missing));
        }
        if t.iter().any(|img| *img.universe() != w) {
            return Err(Error::UniverseMismatch);
        }
        if s.universe().is_some_and(|sw| *sw != w) {
            return Err(Error::UniverseMismatch);
        }
        Ok(SApproxSpace { u, w, t, s })
    }

    pub fn u(&self) -> &Universe {
        &self.u
    }

    pub fn w(&self) -> &Universe {
        &self.w
    }

    pub fn decider(&self) -> &Decider {
        &self.s
    }

    /// `T(x)` for the element at `index` in `U`.
    pub fn image(&self, index: usize) -> &ElementSet {
        &self.t[index]
    }

    pub fn image_of(&self, label: &str) -> Result<&ElementSet> {
        let i = self
            .u
            .index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
        Ok(&self.t[i])
    }

    pub fn images(&self) -> &[ElementSet] {
        &self.t
    }

    /// `S(T(x), X)` for the element at `index`.
    pub fn accepts(&self, index: usize, x: &ElementSet) -> Result<bool> {
        self.s.accepts(&self.t[index], x)
    }

    pub(crate) fn check_query(&self, x: &ElementSet) -> Result<()> {
        if *x.universe() == self.w {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    /// The subspace on the given elements of `U` (kept in their original
    /// order); `W` and `S` are unchanged.
    pub fn restrict(&self, keep: &ElementSet) -> Result<SApproxSpace> {
        if *keep.universe() != self.u {
            return Err(Error::UniverseMismatch);
        }
        let indices: Vec<usize> = keep.indices().collect();
        let u = Universe::new(indices.iter().map(|&i| self.u.label(i).to_string()))?;
        let t = indices.iter().map(|&i| self.t[i].clone()).collect();
        SApproxSpace::new(u, self.w.clone(), t, self.s.clone())
    }

    pub fn to_doc(&self) -> SpaceDoc {
        let s = match &self.s {
            Decider::Inclusion => DeciderSpec::Inclusion,
            Decider::Intersects => DeciderSpec::Intersects,
            Decider::CardThreshold(k) => DeciderSpec::CardThreshold { k: *k as i64 },
            Decider::Table(table) => DeciderSpec::Table {
                entries: table
                    .entries()
                    .map(|(a, ms)| TableEntry {
                        a: labels_of(&a),
                        minimal: ms.iter().map(labels_of).collect(),
                    })
                    .collect(),
            },
        };
        SpaceDoc {
            u: self.u.labels().to_vec(),
            w: self.w.labels().to_vec(),
            t: self
                .u
                .labels()
                .iter()
                .zip(&self.t)
                .map(|(x, img)| (x.clone(), labels_of(img)))
                .collect(),
            s,
        }
    }

    pub fn from_doc(doc: &SpaceDoc) -> Result<SApproxSpace> {
        build_space(&doc.u, &doc.w, &doc.t, &doc.s)
    }
}

impl DeciderSpec {
    /// Resolves labels against `w` and validates the decider.
    pub fn build(&self, w: &Universe) -> Result<Decider> {
        match self {
            DeciderSpec::Inclusion => Ok(Decider::Inclusion),
            DeciderSpec::Intersects => Ok(Decider::Intersects),
            DeciderSpec::CardThreshold { k } => {
                let k = usize::try_from(*k).map_err(|_| {
                    Error::MalformedDecider(format!("cardinality threshold {k} is not positive"))
                })?;
                Decider::card_threshold(k)
            }
            DeciderSpec::Table { entries } => {
                let resolved = entries
                    .iter()
                    .map(|e| {
                        let a = w.set(&e.a)?;
                        let ms = e.minimal.iter().map(|m| w.set(m)).collect::<Result<Vec<_>>>()?;
                        Ok((a, ms))
                    })
                    .collect::<Result<Vec<_>>>()?;
                TableDecider::new(w.clone(), resolved).map(Decider::Table)
            }
        }
    }
}

/// Validates and assembles a space from labels.
///
/// `t_map` must give exactly one image for every label of `U`, using only
/// labels of `W`.
pub fn build_space<U, W, K, V>(
    u_labels: U,
    w_labels: W,
    t_map: &[(K, Vec<V>)],
    decider: &DeciderSpec,
) -> Result<SApproxSpace>
where
    U: IntoIterator,
    U::Item: Into<String>,
    W: IntoIterator,
    W::Item: Into<String>,
    K: AsRef<str>,
    V: AsRef<str>,
{
    let u = Universe::new(u_labels)?;
    let w = Universe::new(w_labels)?;
    let mut images: Vec<Option<ElementSet>> = vec![None; u.len()];
    let mut seen = HashSet::new();
    for (key, targets) in t_map {
        let key = key.as_ref();
        let i = u
            .index_of(key)
            .ok_or_else(|| Error::UnknownLabel(key.to_string()))?;
        if !seen.insert(i) {
            return Err(Error::DuplicateLabel(key.to_string()));
        }
        images[i] = Some(w.set(targets)?);
    }
    let t = images
        .into_iter()
        .enumerate()
        .map(|(i, img)| img.ok_or_else(|| Error::MissingMapping(u.label(i).to_string())))
        .collect::<Result<Vec<_>>>()?;
    let s = decider.build(&w)?;
    SApproxSpace::new(u, w, t, s)
}
