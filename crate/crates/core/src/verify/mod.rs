//! Seeded generators and an exhaustive checker for the laws relating
//! approximation spaces and belief structures.
//!
//! Each claim is checked on one instance or on many seeded random ones.
//! A failure yields a [`Witness`] holding the inputs and the observed
//! failure; [`replay`] re-runs the check on those inputs.

mod claims;
pub mod generate;
pub mod oracle;

pub use claims::{
    parse_claims, ClaimId, ClaimReport, ClaimStatus, Detail, Witness, FAMILY_MAX_W, VERIFY_MAX_W,
};
pub use generate::{random_belief, random_belief_over, random_space, trial_seed};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bridges::space_from_belief;
use crate::decider::DeciderKind;
use crate::error::{Error, Result};
use crate::evidence::BeliefStructure;
use crate::space::SApproxSpace;
use claims::{categorical_beliefs, instance_from_witness, run_instance, Instance, Outcome};
use generate::{MAX_RANDOM_DENOMINATOR, MAX_RANDOM_U, MAX_RANDOM_W};

/// Seeded random trials. Trial `t` uses [`trial_seed`]`(seed, t)` and the
/// decider kind `kinds[t % kinds.len()]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomConfig {
    pub trials: usize,
    pub seed: u64,
    pub kinds: Vec<DeciderKind>,
}

impl RandomConfig {
    pub fn new(trials: usize, seed: u64) -> RandomConfig {
        RandomConfig {
            trials,
            seed,
            kinds: DeciderKind::ALL.to_vec(),
        }
    }
}

/// What the claims are checked on.
///
/// - `Space`: the space itself; the round trip uses its induced belief
///   when valid, induction uses categorical beliefs on `U`.
/// - `Belief`: the space built from it, plus the round trip on the belief.
/// - `Random`: per trial a random space, a random belief on `W`, and a
///   random belief on the space's `U`.
#[derive(Clone, Debug)]
pub enum VerifySource {
    Space(SApproxSpace),
    Belief(BeliefStructure),
    Random(RandomConfig),
}

/// The random instance of one trial.
pub fn random_instance(config: &RandomConfig, trial: usize) -> Result<(SApproxSpace, BeliefStructure, BeliefStructure)> {
    let seed = trial_seed(config.seed, trial as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let u_size = rng.gen_range(1..=MAX_RANDOM_U);
    let w_size = rng.gen_range(1..=MAX_RANDOM_W);
    let kind = config.kinds[trial % config.kinds.len()];
    let g = random_space(trial_seed(seed, 1), u_size, w_size, kind)?;
    let belief_w = random_belief(trial_seed(seed, 2), w_size, MAX_RANDOM_DENOMINATOR)?;
    let belief_u = random_belief_over(trial_seed(seed, 3), g.u(), MAX_RANDOM_DENOMINATOR)?;
    Ok((g, belief_w, belief_u))
}

fn space_instance(g: SApproxSpace) -> Result<Instance> {
    let beliefs_u = categorical_beliefs(g.u())?;
    Ok(Instance {
        space: Some(g),
        belief_w: None,
        derive_belief: true,
        beliefs_u,
    })
}

type InstanceOutcomes = Vec<(Outcome, Option<Witness>)>;

fn run_trials(config: &RandomConfig, claims: &[ClaimId], parallel: bool) -> Result<Vec<InstanceOutcomes>> {
    if config.kinds.is_empty() {
        return Err(Error::InvalidArgument("no decider kinds selected".into()));
    }
    let trial = |t: usize| {
        let (g, belief_w, belief_u) = random_instance(config, t)?;
        let inst = Instance {
            space: Some(g),
            belief_w: Some(belief_w),
            derive_belief: false,
            beliefs_u: vec![belief_u],
        };
        run_instance(&inst, claims)
    };
    if parallel {
        (0..config.trials).into_par_iter().map(trial).collect()
    } else {
        (0..config.trials).map(trial).collect()
    }
}

fn aggregate(claims: &[ClaimId], per_instance: &[InstanceOutcomes]) -> Vec<ClaimReport> {
    claims
        .iter()
        .enumerate()
        .map(|(i, &claim)| {
            let mut report = ClaimReport {
                claim,
                status: ClaimStatus::Holds,
                trials: per_instance.len(),
                skipped: 0,
                witness: None,
            };
            for outcomes in per_instance {
                match &outcomes[i] {
                    (Outcome::Skipped, _) => report.skipped += 1,
                    (Outcome::Fails { .. }, witness) if report.witness.is_none() => {
                        report.status = ClaimStatus::Counterexample;
                        report.witness = witness.clone();
                    }
                    _ => {}
                }
            }
            if report.witness.is_none() && report.skipped == report.trials {
                report.status = ClaimStatus::SkippedPrecondition;
            }
            report
        })
        .collect()
}

/// Checks `claims` against `source`. Reports come back in canonical claim
/// order, one per distinct claim.
///
/// Random trials run in parallel; results are gathered in trial order, so
/// the report does not depend on scheduling.
pub fn verify_claims(source: &VerifySource, claims: &[ClaimId]) -> Result<Vec<ClaimReport>> {
    let mut claims = claims.to_vec();
    claims.sort();
    claims.dedup();
    if claims.is_empty() {
        return Err(Error::InvalidArgument("no claims selected".into()));
    }
    let per_instance = match source {
        VerifySource::Space(g) => vec![run_instance(&space_instance(g.clone())?, &claims)?],
        VerifySource::Belief(bs) => {
            let g = space_from_belief(bs)?;
            let beliefs_u = categorical_beliefs(g.u())?;
            let inst = Instance {
                space: Some(g),
                belief_w: Some(bs.clone()),
                derive_belief: false,
                beliefs_u,
            };
            vec![run_instance(&inst, &claims)?]
        }
        VerifySource::Random(config) => run_trials(config, &claims, true)?,
    };
    Ok(aggregate(&claims, &per_instance))
}

/// Re-runs `claim` on the witness inputs. True when the same failure
/// is observed again.
pub fn replay(claim: ClaimId, witness: &Witness) -> Result<bool> {
    let inst = instance_from_witness(claim, witness)?;
    let (outcome, _) = run_instance(&inst, &[claim])?.remove(0);
    Ok(matches!(outcome, Outcome::Fails { detail, .. } if detail == witness.detail))
}

/// 2 when any report is a counterexample, 0 otherwise.
pub fn exit_code(reports: &[ClaimReport]) -> i32 {
    if reports.iter().any(|r| r.status == ClaimStatus::Counterexample) {
        2
    } else {
        0
    }
}
