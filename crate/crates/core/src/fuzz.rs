//! Seeded randomized harnesses: identity fuzzing and mutation
//! sensitivity.
//!
//! Determinism contract: every trial draws from a ChaCha stream keyed by
//! `(seed, trial index)`, so runs with the same seed are reproducible and
//! trials are independent of evaluation order.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::identity::{
    check_cassini, check_catalan, check_docagne_general, check_four_param, check_index_reduction,
    check_prop8, check_reduced_docagne, check_vajda, evaluate_from_witnesses, Det2, IdentityName,
    IdentityReport,
};
use crate::recurrence::{explicit_term, VarCoeffSpec};
use crate::value::RingValue;

/// Parameter ranges for the randomized identity suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzConfig {
    pub seed: u64,
    pub trials: u64,
    /// Bound on |x| and |y| (and on the variable coefficients u, v).
    pub coeff_max: i64,
    /// Bound on the absolute initial values.
    pub init_max: i64,
    /// Bound on every index parameter.
    pub index_max: u64,
}

impl FuzzConfig {
    pub fn new(seed: u64, trials: u64) -> Self {
        FuzzConfig {
            seed,
            trials,
            coeff_max: 9,
            init_max: 9,
            index_max: 25,
        }
    }
}

/// Outcome of a fuzz run. On a correct build `failures` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzSummary {
    pub seed: u64,
    pub trials: u64,
    /// Instances checked per identity.
    pub identities: BTreeMap<String, u64>,
    pub failures: Vec<IdentityReport>,
}

impl FuzzSummary {
    pub fn all_hold(&self) -> bool {
        self.failures.is_empty()
    }
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn nonzero(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    loop {
        let v = rng.random_range(-bound..=bound);
        if v != 0 {
            return v;
        }
    }
}

fn int_pair(rng: &mut ChaCha8Rng, bound: i64) -> (RingValue, RingValue) {
    (
        RingValue::int(rng.random_range(-bound..=bound)),
        RingValue::int(rng.random_range(-bound..=bound)),
    )
}

/// Runs every identity checker on `trials` random instances. Each trial
/// draws one coefficient pair and initial data, then exercises all eight
/// checkers with indices drawn inside their constraints.
pub fn run_fuzz(config: &FuzzConfig) -> Result<FuzzSummary> {
    let mut identities: BTreeMap<String, u64> = IdentityName::ALL
        .iter()
        .map(|id| (id.as_str().to_string(), 0))
        .collect();
    let mut failures = Vec::new();

    for trial in 0..config.trials {
        let mut rng = trial_rng(config.seed, trial);
        let x = RingValue::int(rng.random_range(-config.coeff_max..=config.coeff_max));
        let y = RingValue::int(nonzero(&mut rng, config.coeff_max));
        let b_init = int_pair(&mut rng, config.init_max);
        let c_init = int_pair(&mut rng, config.init_max);
        let max = config.index_max;

        let k = rng.random_range(0..=max) as usize;
        let m = rng.random_range(0..=max) as usize;
        let docagne = check_docagne_general(&x, &y, &b_init, &c_init, k, m)?;

        let k = rng.random_range(0..=max) as usize;
        let cassini = check_cassini(&x, &y, &b_init, &c_init, k)?;

        let k = rng.random_range(0..=max) as usize;
        let p = rng.random_range(0..=k as u64) as usize;
        let m = rng.random_range(0..=max) as usize;
        let reduction = check_index_reduction(&x, &y, &b_init, &c_init, k, m, p)?;

        let m = rng.random_range(0..=max) as usize;
        let reduced = check_reduced_docagne(&x, &y, &b_init, &c_init, m)?;

        let k = rng.random_range(0..=max / 2) as usize;
        let m = rng.random_range(k as u64..=max) as usize;
        let q = rng.random_range(0..=max / 2) as usize;
        let p = rng.random_range(q as u64..=max) as usize;
        let four = check_four_param(&x, &y, &b_init, k, m, p, q)?;

        let k = rng.random_range(0..=max / 2) as usize;
        let m = rng.random_range(0..=max / 2) as usize;
        let p = rng.random_range(0..=max / 2) as usize;
        let vajda = check_vajda(&x, &y, &b_init, k, m, p)?;

        let n = rng.random_range(0..=max) as usize;
        let r = rng.random_range(0..=n as u64) as usize;
        let catalan = check_catalan(&x, &y, n, r)?;

        let n = rng.random_range(0..=10u64) as usize;
        let k = rng.random_range(0..=(n + 2) as u64) as usize;
        let len = n + 3;
        let u: Vec<RingValue> = (0..len)
            .map(|_| RingValue::int(rng.random_range(-config.coeff_max..=config.coeff_max)))
            .collect();
        let v: Vec<RingValue> = (0..len)
            .map(|_| RingValue::int(nonzero(&mut rng, config.coeff_max)))
            .collect();
        let coeffs = VarCoeffSpec::new(u, v, (x.zero_like(), x.one_like()))?;
        let prop8 = check_prop8(&coeffs, &b_init, &c_init, k, n)?;

        for report in [
            docagne, prop8, cassini, reduction, reduced, four, vajda, catalan,
        ] {
            *identities
                .get_mut(report.identity.as_str())
                .expect("all identities preregistered") += 1;
            if !report.holds {
                failures.push(report);
            }
        }
    }

    Ok(FuzzSummary {
        seed: config.seed,
        trials: config.trials,
        identities,
        failures,
    })
}

/// Outcome of a mutation-sensitivity run: how many single-witness `+1`
/// perturbations flipped the verdict to false.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutationOutcome {
    pub identity: IdentityName,
    pub trials: u64,
    pub flipped: u64,
    /// Instances whose unperturbed check did not hold (always zero on a
    /// correct build).
    pub base_failures: u64,
}

struct MutationInstance {
    report: IdentityReport,
    y: RingValue,
    v_window: Option<Vec<RingValue>>,
}

/// Draws an instance whose witnesses are all nonzero (and whose initial
/// determinant is nonzero where the identity carries one), so that every
/// witness has a nonzero cofactor and a perturbation must move one side.
/// Degenerate draws are resampled; they verify nothing about the checker.
fn sample_mutation_instance(
    identity: IdentityName,
    rng: &mut ChaCha8Rng,
) -> Result<MutationInstance> {
    const ATTEMPTS: u32 = 10_000;
    for _ in 0..ATTEMPTS {
        let x = RingValue::int(rng.random_range(-9..=9i64));
        let y = RingValue::int(nonzero(rng, 9));
        let b_init = int_pair(rng, 9);
        let c_init = int_pair(rng, 9);

        let mut v_window = None;
        let report = match identity {
            IdentityName::Docagne => {
                let k = rng.random_range(1..=25usize);
                let m = rng.random_range(1..=25usize);
                check_docagne_general(&x, &y, &b_init, &c_init, k, m)?
            }
            IdentityName::Prop8 => {
                let n = rng.random_range(1..=10usize);
                let k = rng.random_range(1..=n + 1);
                let len = n + 3;
                let u: Vec<RingValue> = (0..len)
                    .map(|_| RingValue::int(rng.random_range(-5..=5i64)))
                    .collect();
                let v: Vec<RingValue> = (0..len)
                    .map(|_| RingValue::int(nonzero(rng, 5)))
                    .collect();
                let coeffs = VarCoeffSpec::new(u, v.clone(), (x.zero_like(), x.one_like()))?;
                v_window = Some(v);
                check_prop8(&coeffs, &b_init, &c_init, k, n)?
            }
            IdentityName::Cassini => {
                check_cassini(&x, &y, &b_init, &c_init, rng.random_range(1..=25usize))?
            }
            IdentityName::IndexReduction => {
                let k = rng.random_range(1..=25usize);
                let p = rng.random_range(1..=k);
                let mut m = rng.random_range(1..=25usize);
                if m == p {
                    m = p + 1;
                }
                check_index_reduction(&x, &y, &b_init, &c_init, k, m, p)?
            }
            IdentityName::ReducedDocagne => {
                let m = rng.random_range(2..=25usize);
                // The initial-pair cofactors carry a factor of the term
                // below a_m; keep it nonzero too.
                if explicit_term(&x, &y, m - 1)?.is_zero() {
                    continue;
                }
                check_reduced_docagne(&x, &y, &b_init, &c_init, m)?
            }
            IdentityName::FourParam => {
                let k = rng.random_range(1..=12usize);
                let m = rng.random_range(k + 1..=25);
                let q = rng.random_range(1..=12usize);
                let p = rng.random_range(q..=25);
                check_four_param(&x, &y, &b_init, k, m, p, q)?
            }
            IdentityName::Vajda => {
                let k = rng.random_range(1..=12usize);
                let m = rng.random_range(1..=12usize);
                let p = rng.random_range(1..=12usize);
                check_vajda(&x, &y, &b_init, k, m, p)?
            }
            IdentityName::Catalan => {
                let r = rng.random_range(1..=12usize);
                let n = rng.random_range(r + 1..=25);
                check_catalan(&x, &y, n, r)?
            }
        };

        if report.witnesses.values().any(RingValue::is_zero) {
            continue;
        }
        let needs_init_det = matches!(
            identity,
            IdentityName::Docagne
                | IdentityName::Prop8
                | IdentityName::Cassini
                | IdentityName::ReducedDocagne
        );
        if needs_init_det {
            let det0 = Det2::new(
                report.witnesses["b_0"].clone(),
                report.witnesses["b_1"].clone(),
                report.witnesses["c_0"].clone(),
                report.witnesses["c_1"].clone(),
            )
            .value()?;
            if det0.is_zero() {
                continue;
            }
        }
        return Ok(MutationInstance {
            report,
            y,
            v_window,
        });
    }
    Err(Error::IndexConstraint(
        "mutation sampling exhausted without a nondegenerate instance".into(),
    ))
}

/// Runs `trials` perturbation trials against one checker: draw a
/// nondegenerate instance, bump a uniformly chosen witness by one, and
/// re-evaluate both sides from the perturbed witness map.
pub fn mutation_trials(identity: IdentityName, seed: u64, trials: u64) -> Result<MutationOutcome> {
    let mut flipped = 0;
    let mut base_failures = 0;
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial);
        let instance = sample_mutation_instance(identity, &mut rng)?;
        if !instance.report.holds {
            base_failures += 1;
            continue;
        }
        let keys: Vec<String> = instance.report.witnesses.keys().cloned().collect();
        let chosen = &keys[rng.random_range(0..keys.len())];
        let mut witnesses = instance.report.witnesses.clone();
        let bumped = witnesses[chosen].add(&witnesses[chosen].one_like())?;
        witnesses.insert(chosen.clone(), bumped);
        let (lhs, rhs) = evaluate_from_witnesses(
            identity,
            &instance.y,
            &instance.report.params,
            &witnesses,
            instance.v_window.as_deref(),
        )?;
        if lhs != rhs {
            flipped += 1;
        }
    }
    Ok(MutationOutcome {
        identity,
        trials,
        flipped,
        base_failures,
    })
}
