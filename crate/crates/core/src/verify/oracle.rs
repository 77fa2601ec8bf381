//! Brute-force re-computations used as references by the claim suite.
//!
//! Nothing here shares code with the fast paths it checks: each function
//! follows the defining formula over the full subset lattice.

use crate::error::Result;
use crate::evidence::{BeliefStructure, SetFunction};
use crate::rational::Rational;
use crate::space::SApproxSpace;

/// `n(A) = Σ_{B ⊆ A} (−1)^{|A∖B|} f(B)` as a double loop over masks.
pub fn naive_mobius(f: &SetFunction) -> Result<SetFunction> {
    let len = f.values().len() as u64;
    let mut out = Vec::with_capacity(len as usize);
    for a in 0..len {
        let mut sum = Rational::ZERO;
        for b in (0..len).filter(|b| b & !a == 0) {
            sum = if (a & !b).count_ones() % 2 == 0 {
                sum.checked_add(f.value(b))?
            } else {
                sum.checked_sub(f.value(b))?
            };
        }
        out.push(sum);
    }
    SetFunction::new(f.universe().clone(), out)
}

/// Masks `X` with `S(T(x), X) = 1` and `S(T(x), Y) = 0` for every proper
/// subset `Y`, ascending.
pub fn naive_inflection_points(g: &SApproxSpace, x: usize) -> Result<Vec<u64>> {
    let w = g.w();
    let len = w.powerset_len()? as u64;
    let accepted: Vec<bool> = (0..len)
        .map(|m| g.accepts(x, &w.set_from_mask(m)))
        .collect::<Result<_>>()?;
    Ok((0..len)
        .filter(|&m| accepted[m as usize])
        .filter(|&m| (0..len).all(|y| y == m || y & !m != 0 || !accepted[y as usize]))
        .collect())
}

/// `m′(Y)` for every mask `Y` of `W`, summed term by term:
/// `Σ_X m(X)/|X| · Σ_{x ∈ X, Y ∈ IP(x)} 1/|IP(x)|`.
pub fn naive_induced_masses(bs_u: &BeliefStructure, g: &SApproxSpace) -> Result<Vec<Rational>> {
    let len = g.w().powerset_len()?;
    let points = (0..g.u().len())
        .map(|x| naive_inflection_points(g, x))
        .collect::<Result<Vec<_>>>()?;
    let mut out = vec![Rational::ZERO; len];
    for (y, slot) in out.iter_mut().enumerate() {
        for (focal, mass) in bs_u.focal_elements() {
            let mut inner = Rational::ZERO;
            for x in focal.indices() {
                if points[x].contains(&(y as u64)) {
                    inner = inner.checked_add(Rational::new(1, points[x].len() as i128)?)?;
                }
            }
            let weight = mass.checked_div(Rational::integer(focal.len() as i128))?;
            *slot = slot.checked_add(weight.checked_mul(inner)?)?;
        }
    }
    Ok(out)
}
