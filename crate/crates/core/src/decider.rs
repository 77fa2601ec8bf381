//! Deciders: binary verdicts `S(A, X)` on pairs of subsets of `W`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::universe::{Bits, ElementSet, Universe};

/// The four built-in decider families. All of them are partial monotone:
/// `S(A, X) = 1` and `X ⊆ Y` imply `S(A, Y) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decider {
    /// `S(A, X) = 1` iff `A ⊆ X`.
    Inclusion,
    /// `S(A, X) = 1` iff `A ∩ X ≠ ∅`.
    Intersects,
    /// `S(A, X) = 1` iff `|X| ≥ k`, independently of `A`.
    CardThreshold(usize),
    Table(TableDecider),
}

/// Which family a decider belongs to, without its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DeciderKind {
    Inclusion,
    Intersects,
    CardThreshold,
    Table,
}

impl DeciderKind {
    pub const ALL: [DeciderKind; 4] = [
        DeciderKind::Inclusion,
        DeciderKind::Intersects,
        DeciderKind::CardThreshold,
        DeciderKind::Table,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DeciderKind::Inclusion => "subseteq",
            DeciderKind::Intersects => "intersects",
            DeciderKind::CardThreshold => "card_threshold",
            DeciderKind::Table => "table",
        }
    }
}

impl fmt::Display for DeciderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DeciderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "subseteq" | "inclusion" => Ok(DeciderKind::Inclusion),
            "intersects" => Ok(DeciderKind::Intersects),
            "card_threshold" => Ok(DeciderKind::CardThreshold),
            "table" => Ok(DeciderKind::Table),
            other => Err(Error::InvalidArgument(format!("unknown decider kind `{other}`"))),
        }
    }
}

/// A decider given by, for each listed `A`, the antichain of minimal sets it
/// accepts. `S(A, X) = 1` iff `X` contains one of them; unlisted `A` reject
/// everything.
#[derive(Clone, PartialEq, Eq)]
pub struct TableDecider {
    universe: Universe,
    entries: BTreeMap<Bits, Vec<Bits>>,
}

impl TableDecider {
    /// Builds a table, rejecting duplicate keys and any antichain holding two
    /// comparable (or equal) sets. Antichains are stored sorted by mask.
    pub fn new<I>(universe: Universe, entries: I) -> Result<TableDecider>
    where
        I: IntoIterator<Item = (ElementSet, Vec<ElementSet>)>,
    {
        let mut table = BTreeMap::new();
        for (a, minimal) in entries {
            if *a.universe() != universe {
                return Err(Error::UniverseMismatch);
            }
            let mut sets = Vec::with_capacity(minimal.len());
            for m in &minimal {
                if *m.universe() != universe {
                    return Err(Error::UniverseMismatch);
                }
                sets.push(m.bits().clone());
            }
            sets.sort();
            for (i, p) in sets.iter().enumerate() {
                for q in &sets[i + 1..] {
                    if p.is_subset(q) || q.is_subset(p) {
                        let show = |b: &Bits| ElementSet::from_bits(universe.clone(), b.clone());
                        return Err(Error::MalformedDecider(format!(
                            "antichain for A = {a} holds comparable sets {} and {}",
                            show(p),
                            show(q)
                        )));
                    }
                }
            }
            if table.insert(a.bits().clone(), sets).is_some() {
                return Err(Error::MalformedDecider(format!("A = {a} listed twice")));
            }
        }
        Ok(TableDecider {
            universe,
            entries: table,
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Listed keys with their antichains, in ascending key order.
    pub fn entries(&self) -> impl Iterator<Item = (ElementSet, Vec<ElementSet>)> + '_ {
        self.entries.iter().map(|(a, ms)| {
            (
                self.wrap(a),
                ms.iter().map(|m| self.wrap(m)).collect(),
            )
        })
    }

    pub(crate) fn keys(&self) -> impl Iterator<Item = &Bits> {
        self.entries.keys()
    }

    fn wrap(&self, bits: &Bits) -> ElementSet {
        ElementSet::from_bits(self.universe.clone(), bits.clone())
    }

    fn accepts_bits(&self, a: &Bits, x: &Bits) -> bool {
        self.entries
            .get(a)
            .is_some_and(|ms| ms.iter().any(|m| m.is_subset(x)))
    }
}

impl fmt::Debug for TableDecider {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.entries())
            .finish()
    }
}

impl Decider {
    pub fn card_threshold(k: usize) -> Result<Decider> {
        if k == 0 {
            return Err(Error::MalformedDecider(
                "cardinality threshold must be a positive integer".into(),
            ));
        }
        Ok(Decider::CardThreshold(k))
    }

    pub fn kind(&self) -> DeciderKind {
        match self {
            Decider::Inclusion => DeciderKind::Inclusion,
            Decider::Intersects => DeciderKind::Intersects,
            Decider::CardThreshold(_) => DeciderKind::CardThreshold,
            Decider::Table(_) => DeciderKind::Table,
        }
    }

    /// The universe a table decider is tied to; other kinds work over any.
    pub fn universe(&self) -> Option<&Universe> {
        match self {
            Decider::Table(t) => Some(t.universe()),
            _ => None,
        }
    }

    pub fn accepts(&self, a: &ElementSet, x: &ElementSet) -> Result<bool> {
        a.same_universe(x)?;
        if let Some(u) = self.universe() {
            if u != a.universe() {
                return Err(Error::UniverseMismatch);
            }
        }
        Ok(self.accepts_bits(a.bits(), x.bits()))
    }

    /// Operands are assumed to share the decider's universe.
    pub(crate) fn accepts_bits(&self, a: &Bits, x: &Bits) -> bool {
        match self {
            Decider::Inclusion => a.is_subset(x),
            Decider::Intersects => a.intersects(x),
            Decider::CardThreshold(k) => x.count() >= *k,
            Decider::Table(t) => t.accepts_bits(a, x),
        }
    }
}

/// `S(A, X)` as a bit.
pub fn eval_decider(s: &Decider, a: &ElementSet, x: &ElementSet) -> Result<u8> {
    s.accepts(a, x).map(u8::from)
}
