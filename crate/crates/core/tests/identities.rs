//! Cross-module identity properties beyond the per-criterion acceptance
//! bounds.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use recur2_core::fuzz::{run_fuzz, FuzzConfig};
use recur2_core::identity::{
    check_cassini, check_catalan, check_docagne_general, check_four_param, check_vajda, recover_a,
};
use recur2_core::recurrence::{generate, RecurrenceSpec};
use recur2_core::value::RingValue;

/// Every checker holds across ten thousand seeded instances. A single
/// false verdict is a build-stopping failure.
#[test]
fn all_checkers_hold_on_ten_thousand_instances() {
    let summary = run_fuzz(&FuzzConfig::new(0xFACADE, 10_000)).unwrap();
    assert!(
        summary.all_hold(),
        "failures: {:?}",
        summary.failures.first()
    );
    for (identity, count) in &summary.identities {
        assert_eq!(*count, 10_000, "{identity}");
    }
}

/// The specialization chain holds on random instances, as exact value
/// equalities between report sides:
///
/// - the Cassini form is the m = 1 generalized d'Ocagne determinant
/// - Vajda with b = a at (m, p, k) = (r, r, n - r) is the Catalan form
/// - the four-parameter identity at p = q is the d'Ocagne form with
///   c = a, outer index k + p, and gap m - k
#[test]
fn specialization_chain_on_random_instances() {
    for trial in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5bec);
        rng.set_stream(trial);
        let x = RingValue::int(rng.random_range(-9..=9i64));
        let y = RingValue::int(loop {
            let v = rng.random_range(-9..=9i64);
            if v != 0 {
                break v;
            }
        });
        let b_init = (
            RingValue::int(rng.random_range(-9..=9i64)),
            RingValue::int(rng.random_range(-9..=9i64)),
        );
        let c_init = (
            RingValue::int(rng.random_range(-9..=9i64)),
            RingValue::int(rng.random_range(-9..=9i64)),
        );
        let canonical = (RingValue::int(0), RingValue::int(1));

        let k = rng.random_range(0..=15usize);
        let cassini = check_cassini(&x, &y, &b_init, &c_init, k).unwrap();
        let docagne = check_docagne_general(&x, &y, &b_init, &c_init, k, 1).unwrap();
        assert_eq!(cassini.lhs, docagne.lhs, "trial {trial}");
        assert_eq!(cassini.rhs, docagne.rhs, "trial {trial}");
        assert_eq!(cassini.holds, docagne.holds, "trial {trial}");

        let n = rng.random_range(0..=15usize);
        let r = rng.random_range(0..=n as u64) as usize;
        let catalan = check_catalan(&x, &y, n, r).unwrap();
        let vajda = check_vajda(&x, &y, &canonical, n - r, r, r).unwrap();
        assert_eq!(vajda.lhs, catalan.lhs, "trial {trial}");
        assert_eq!(vajda.rhs, catalan.rhs, "trial {trial}");

        let k = rng.random_range(0..=8usize);
        let m = rng.random_range(k as u64..=15) as usize;
        let p = rng.random_range(0..=8usize);
        let four = check_four_param(&x, &y, &b_init, k, m, p, p).unwrap();
        let renamed = check_docagne_general(&x, &y, &b_init, &canonical, k + p, m - k).unwrap();
        assert_eq!(four.lhs, renamed.lhs, "trial {trial}");
        assert_eq!(four.rhs, renamed.rhs, "trial {trial}");
        assert!(four.holds, "trial {trial}");
    }
}

/// Recovering the canonical term from two generated windows inverts the
/// determinant identity whenever the initial pair is nonsingular.
#[test]
fn recover_a_inverts_generation() {
    let mut done = 0;
    let mut trial = 0u64;
    while done < 300 {
        trial += 1;
        let mut rng = ChaCha8Rng::seed_from_u64(0xAE10);
        rng.set_stream(trial);
        let x = RingValue::int(rng.random_range(-9..=9i64));
        let y = RingValue::int(loop {
            let v = rng.random_range(-9..=9i64);
            if v != 0 {
                break v;
            }
        });
        let b_init = (
            RingValue::int(rng.random_range(-9..=9i64)),
            RingValue::int(rng.random_range(-9..=9i64)),
        );
        let c_init = (
            RingValue::int(rng.random_range(-9..=9i64)),
            RingValue::int(rng.random_range(-9..=9i64)),
        );
        let det0 = b_init
            .0
            .mul(&c_init.1)
            .unwrap()
            .sub(&b_init.1.mul(&c_init.0).unwrap())
            .unwrap();
        if det0.is_zero() {
            continue;
        }
        let k = rng.random_range(0..=12usize);
        let m = rng.random_range(0..=12usize);
        let hi = (k + m).max(1);
        let b = generate(
            &RecurrenceSpec::new(x.clone(), y.clone(), b_init).unwrap(),
            hi,
        )
        .unwrap();
        let c = generate(
            &RecurrenceSpec::new(x.clone(), y.clone(), c_init).unwrap(),
            hi,
        )
        .unwrap();
        let canonical = generate(
            &RecurrenceSpec::canonical(x.clone(), y.clone()).unwrap(),
            m.max(1),
        )
        .unwrap();
        let recovered = recover_a(&y, &b.values, &c.values, k, m).unwrap();
        assert_eq!(&recovered, canonical.at(m).unwrap(), "trial {trial}");
        done += 1;
    }
}
