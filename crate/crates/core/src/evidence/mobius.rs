use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::universe::{ElementSet, Universe};

/// A rational-valued function on every subset of a universe, stored by mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFunction {
    universe: Universe,
    values: Vec<Rational>,
}

impl SetFunction {
    /// `values[m]` is the value on the subset with mask `m`.
    pub fn new(universe: Universe, values: Vec<Rational>) -> Result<SetFunction> {
        let expected = universe.powerset_len()?;
        if values.len() != expected {
            return Err(Error::IncompleteSetFunction {
                expected,
                got: values.len(),
            });
        }
        Ok(SetFunction { universe, values })
    }

    pub fn zero(universe: Universe) -> Result<SetFunction> {
        let len = universe.powerset_len()?;
        SetFunction::new(universe, vec![Rational::ZERO; len])
    }

    /// Builds from explicit `(set, value)` pairs, which must cover every
    /// subset exactly once.
    pub fn from_entries<I>(universe: Universe, entries: I) -> Result<SetFunction>
    where
        I: IntoIterator<Item = (ElementSet, Rational)>,
    {
        let expected = universe.powerset_len()?;
        let mut values: Vec<Option<Rational>> = vec![None; expected];
        for (set, value) in entries {
            if *set.universe() != universe {
                return Err(Error::UniverseMismatch);
            }
            let slot = &mut values[set.mask().expect("enumerable universe") as usize];
            if slot.replace(value).is_some() {
                return Err(Error::DuplicateSetFunctionEntry(set.to_string()));
            }
        }
        let got = values.iter().filter(|v| v.is_some()).count();
        if got != expected {
            return Err(Error::IncompleteSetFunction { expected, got });
        }
        SetFunction::new(universe, values.into_iter().flatten().collect())
    }

    pub fn from_fn(
        universe: Universe,
        mut f: impl FnMut(&ElementSet) -> Result<Rational>,
    ) -> Result<SetFunction> {
        let values = universe.powerset()?.map(|x| f(&x)).collect::<Result<Vec<_>>>()?;
        SetFunction::new(universe, values)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, mask: u64) -> Rational {
        self.values[mask as usize]
    }

    pub fn get(&self, set: &ElementSet) -> Result<Rational> {
        if *set.universe() != self.universe {
            return Err(Error::UniverseMismatch);
        }
        Ok(self.values[set.mask().expect("enumerable universe") as usize])
    }

    /// `(set, value)` pairs in ascending mask order.
    pub fn entries(&self) -> impl Iterator<Item = (ElementSet, Rational)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(|(m, v)| (self.universe.set_from_mask(m as u64), *v))
    }
}

/// Applies `step(lo, hi)` to every pair of masks differing in one bit,
/// one coordinate at a time.
fn lattice_sweep(
    values: &mut [Rational],
    step: impl Fn(Rational, Rational) -> Result<Rational>,
) -> Result<()> {
    let len = values.len();
    let mut bit = 1;
    while bit < len {
        for block in values.chunks_exact_mut(bit * 2) {
            let (lo, hi) = block.split_at_mut(bit);
            for (l, h) in lo.iter().zip(hi.iter_mut()) {
                *h = step(*l, *h)?;
            }
        }
        bit <<= 1;
    }
    Ok(())
}

/// `n(A) = Σ_{B ⊆ A} (−1)^{|A∖B|} f(B)`, by differencing along each
/// coordinate of the subset lattice (`n · 2ⁿ` subtractions).
pub fn mobius(f: &SetFunction) -> Result<SetFunction> {
    let mut values = f.values.clone();
    lattice_sweep(&mut values, |lo, hi| hi.checked_sub(lo))?;
    SetFunction::new(f.universe.clone(), values)
}

/// `z(A) = Σ_{B ⊆ A} n(B)`; inverse of [`mobius`].
pub fn zeta(n: &SetFunction) -> Result<SetFunction> {
    let mut values = n.values.clone();
    lattice_sweep(&mut values, |lo, hi| hi.checked_add(lo))?;
    SetFunction::new(n.universe.clone(), values)
}
