//! Acceptance suite. Each test covers one release criterion at its stated
//! bound and prints a single PASS line; run with `-- --nocapture` to see
//! the lines on success.

use std::time::Instant;

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use recur2_core::catalog::{
    all_presets, get_preset, run_bindings, word_model_presets, PresetId, WordModel,
};
use recur2_core::error::Error;
use recur2_core::fuzz::mutation_trials;
use recur2_core::identity::{check_docagne_general, check_prop8, Det2, IdentityName};
use recur2_core::recurrence::{explicit_term, generate, RecurrenceSpec, VarCoeffSpec};
use recur2_core::value::{ExactInt, RingValue};
use recur2_core::words::{
    constraint_from_params, count_colored_tilings, enumerate_words, parse_constraint,
    build_automaton,
};

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

/// Generalized d'Ocagne over 10,000 seeded random instances.
#[test]
fn criterion_1_generalized_docagne_fuzz() {
    let started = Instant::now();
    let trials = 10_000u64;
    for trial in 0..trials {
        let mut rng = trial_rng(0xD0CA, trial);
        let x = RingValue::int(rng.random_range(-9..=9i64));
        let y = RingValue::int(nonzero(&mut rng, 9));
        let b_init = (
            RingValue::int(rng.random_range(-9..=9i64)),
            RingValue::int(rng.random_range(-9..=9i64)),
        );
        let c_init = (
            RingValue::int(rng.random_range(-9..=9i64)),
            RingValue::int(rng.random_range(-9..=9i64)),
        );
        let k = rng.random_range(0..=25usize);
        let m = rng.random_range(0..=25usize);
        let report = check_docagne_general(&x, &y, &b_init, &c_init, k, m).unwrap();
        assert!(
            report.holds,
            "trial {trial}: x={x} y={y} k={k} m={m} lhs={} rhs={}",
            report.lhs, report.rhs
        );
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "10k instances took {elapsed:?}"
    );
    println!(
        "acceptance criterion 1: PASS - generalized d'Ocagne held on {trials} random instances in {elapsed:?}"
    );
}

/// Variable-coefficient identity over 1,000 seeded instances, with the
/// shifted-product convention required to fail somewhere in the same
/// suite.
#[test]
fn criterion_2_variable_coefficient_identity() {
    let trials = 1_000u64;
    let mut shifted_product_counterexamples = 0u64;
    for trial in 0..trials {
        let mut rng = trial_rng(0x9208, trial);
        let n = rng.random_range(0..=13usize); // n + 2 <= 15
        let k = rng.random_range(0..=n + 2);
        let len = n + 3;
        let u: Vec<RingValue> = (0..len)
            .map(|_| RingValue::int(rng.random_range(-5..=5i64)))
            .collect();
        let v: Vec<RingValue> = (0..len)
            .map(|_| RingValue::int(nonzero(&mut rng, 5)))
            .collect();
        let b_init = (
            RingValue::int(rng.random_range(-9..=9i64)),
            RingValue::int(rng.random_range(-9..=9i64)),
        );
        let c_init = (
            RingValue::int(rng.random_range(-9..=9i64)),
            RingValue::int(rng.random_range(-9..=9i64)),
        );
        let coeffs = VarCoeffSpec::new(
            u,
            v.clone(),
            (RingValue::int(0), RingValue::int(1)),
        )
        .unwrap();
        let report = check_prop8(&coeffs, &b_init, &c_init, k, n).unwrap();
        assert!(report.holds, "trial {trial}: k={k} n={n}");

        // Same instance under the product shifted to v_1..v_k.
        let mut shifted = RingValue::int(if k % 2 == 0 { 1 } else { -1 });
        for v_j in v.iter().take(k + 1).skip(1) {
            shifted = shifted.mul(v_j).unwrap();
        }
        let det0 = Det2::new(
            report.witnesses["b_0"].clone(),
            report.witnesses["b_1"].clone(),
            report.witnesses["c_0"].clone(),
            report.witnesses["c_1"].clone(),
        )
        .value()
        .unwrap();
        let a_term = &report.witnesses[&format!("a_{}", n + 2 - k)];
        let shifted_rhs = shifted.mul(a_term).unwrap().mul(&det0).unwrap();
        if shifted_rhs != report.lhs {
            shifted_product_counterexamples += 1;
        }
    }
    assert!(
        shifted_product_counterexamples > 0,
        "the shifted product convention never failed; the negative test is vacuous"
    );

    // Pinned counterexample: hand-iterated windows where the shifted
    // product claims -3 against an actual determinant of -15.
    let coeffs = VarCoeffSpec::new(
        [1, 2, 3, 4].map(RingValue::int).to_vec(),
        [5, 1, 2].map(RingValue::int).to_vec(),
        (RingValue::int(0), RingValue::int(1)),
    )
    .unwrap();
    let report = check_prop8(
        &coeffs,
        &(RingValue::int(1), RingValue::int(0)),
        &(RingValue::int(0), RingValue::int(1)),
        1,
        1,
    )
    .unwrap();
    assert!(report.holds);
    assert_eq!(report.lhs, RingValue::int(-15));
    let literal = RingValue::int(-1)
        .mul(&RingValue::int(1)) // v_1
        .unwrap()
        .mul(&report.witnesses["a_2"])
        .unwrap();
    assert_eq!(literal, RingValue::int(-3));
    assert_ne!(literal, report.lhs);

    println!(
        "acceptance criterion 2: PASS - variable-coefficient identity held on {trials} instances; \
         shifted product broke on {shifted_product_counterexamples} of them"
    );
}

/// Explicit binomial formula against the iterated recurrence.
#[test]
fn criterion_3_explicit_formula() {
    for preset in all_presets() {
        let spec = RecurrenceSpec::canonical(preset.x.clone(), preset.y.clone()).unwrap();
        let window = generate(&spec, 64).unwrap();
        for n in 0..=64usize {
            assert_eq!(
                &explicit_term(&preset.x, &preset.y, n).unwrap(),
                window.at(n).unwrap(),
                "{} at {n}",
                preset.id
            );
        }
    }
    for trial in 0..200u64 {
        let mut rng = trial_rng(0xE791, trial);
        let x = RingValue::int(rng.random_range(-9..=9i64));
        let y = RingValue::int(nonzero(&mut rng, 9));
        let spec = RecurrenceSpec::canonical(x.clone(), y.clone()).unwrap();
        let window = generate(&spec, 64).unwrap();
        for n in 0..=64usize {
            assert_eq!(
                &explicit_term(&x, &y, n).unwrap(),
                window.at(n).unwrap(),
                "x={x} y={y} n={n}"
            );
        }
    }
    println!(
        "acceptance criterion 3: PASS - explicit formula matched the recurrence on 12 presets and \
         200 random coefficient pairs through n = 64"
    );
}

/// Every catalog identity binding holds exactly, and reproduces its
/// documented closed right-hand side, over the full stated ranges.
#[test]
fn criterion_4_catalog_bindings() {
    let started = Instant::now();
    let runs = run_bindings(None).unwrap();
    assert_eq!(runs.len(), 12);
    let mut total = 0usize;
    for run in &runs {
        let failing = run.reports.iter().filter(|r| !r.holds).count();
        assert_eq!(failing, 0, "binding {} has {failing} failures", run.binding);
        assert_eq!(
            run.expected_mismatches, 0,
            "binding {} deviated from its closed form",
            run.binding
        );
        total += run.reports.len();
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "bindings took {elapsed:?}");
    println!(
        "acceptance criterion 4: PASS - 12 bindings, {total} identity instances, all held with \
         their closed forms in {elapsed:?}"
    );
}

/// Exhaustive tiling walk: visits every colored tiling of a length-n
/// board and counts leaves one at a time.
fn walk_tilings(n: usize, colors1: u64, colors2: u64, count: &mut u64) {
    if n == 0 {
        *count += 1;
        return;
    }
    for _ in 0..colors1 {
        walk_tilings(n - 1, colors1, colors2, count);
    }
    if n >= 2 {
        for _ in 0..colors2 {
            walk_tilings(n - 2, colors1, colors2, count);
        }
    }
}

/// Oracle triangle: brute enumeration, automaton DP, and the recurrence
/// agree for n <= 12; DP alone extends to n = 500 and still satisfies the
/// recurrence.
#[test]
fn criterion_5_oracle_triangle() {
    for id in word_model_presets() {
        let preset = get_preset(id);
        let window = generate(&preset.spec(), 13).unwrap();
        let model = preset.word_model.as_ref().unwrap();
        for n in 0..=12usize {
            let brute = match model {
                WordModel::Words(constraint) => {
                    ExactInt::from(enumerate_words(constraint, n, 20_000_000).unwrap().len())
                }
                WordModel::Tilings { colors1, colors2 } => {
                    let mut count = 0u64;
                    walk_tilings(n, *colors1, *colors2, &mut count);
                    ExactInt::from(count)
                }
            };
            let dp = model.count(n);
            assert_eq!(brute, dp, "{id} at length {n}");
            assert_eq!(
                &RingValue::Int(dp),
                window.at(n + 1).unwrap(),
                "{id} at length {n}"
            );
        }

        // Long-range DP: counts through n = 500 satisfy the preset's own
        // recurrence with big-integer values.
        let counts: Vec<ExactInt> = match model {
            WordModel::Words(constraint) => build_automaton(constraint).count_lengths(500),
            WordModel::Tilings { colors1, colors2 } => (0..=500)
                .map(|n| count_colored_tilings(n, *colors1, *colors2))
                .collect(),
        };
        let (x, y) = match (&preset.x, &preset.y) {
            (RingValue::Int(x), RingValue::Int(y)) => (x.clone(), y.clone()),
            _ => unreachable!("word models only attach to integer presets"),
        };
        for n in 2..=500usize {
            assert_eq!(
                counts[n],
                &x * &counts[n - 1] + &y * &counts[n - 2],
                "{id} recurrence at {n}"
            );
        }
        assert!(counts[500] > ExactInt::zero());
    }
    println!(
        "acceptance criterion 5: PASS - enumeration, automaton DP and the recurrence agree to \
         n = 12 on all word/tiling presets; DP satisfies the recurrence to n = 500"
    );
}

/// Known-value spot checks for the closed-form presets.
#[test]
fn criterion_6_known_values() {
    let window = |id: PresetId, hi: usize| generate(&get_preset(id).spec(), hi).unwrap();

    let mersenne = window(PresetId::Mersenne, 5);
    assert_eq!(
        mersenne.values,
        [0, 1, 3, 7, 15, 31].map(RingValue::int).to_vec()
    );

    let q3 = window(PresetId::Q3Halved, 4);
    assert_eq!(q3.values, [0, 1, 4, 13, 40].map(RingValue::int).to_vec());

    let integers = window(PresetId::NonnegIntegers, 30);
    for n in 0..=30usize {
        assert_eq!(integers.at(n).unwrap(), &RingValue::int(n as i64));
    }

    let bisection = window(PresetId::FibBisection, 5);
    assert_eq!(
        bisection.values,
        [0, 1, 3, 8, 21, 55].map(RingValue::int).to_vec()
    );

    println!("acceptance criterion 6: PASS - known-value windows match");
}

/// Mutation sensitivity: at least 99% of 1,000 single-witness +1
/// perturbations flip each checker's verdict.
#[test]
fn criterion_7_mutation_sensitivity() {
    let mut rates = Vec::new();
    for identity in IdentityName::ALL {
        let outcome = mutation_trials(identity, 0x3167, 1_000).unwrap();
        assert_eq!(outcome.base_failures, 0, "{identity} base check failed");
        assert!(
            outcome.flipped >= 990,
            "{identity}: only {}/{} perturbations flipped",
            outcome.flipped,
            outcome.trials
        );
        rates.push(format!("{identity} {}/1000", outcome.flipped));
    }
    println!(
        "acceptance criterion 7: PASS - mutation flips per checker: {}",
        rates.join(", ")
    );
}

/// Constraint DSL: canonical re-emission on a valid corpus, and all five
/// documented error classes trigger.
#[test]
fn criterion_8_dsl_parser() {
    let valid_corpus = [
        "alphabet=3; forbid=01,02",
        "alphabet=2; evenrun=0",
        "alphabet=10",
        "alphabet = 4 ; forbid = 01 , 02 , 03",
        "alphabet=5; forbid=012,34; evenrun=0,4",
        "alphabet=2;forbid=01;evenrun=1",
        "alphabet=6; evenrun=5,4,3",
        "alphabet=3; forbid=02; forbid=01",
        "alphabet=1; evenrun=0",
        "alphabet=9; forbid=12345678,87654321",
    ];
    for spec in valid_corpus {
        let parsed = parse_constraint(spec).unwrap();
        let rendered = parsed.to_string();
        let reparsed = parse_constraint(&rendered).unwrap();
        assert_eq!(reparsed, parsed, "round trip for `{spec}`");
        assert_eq!(reparsed.to_string(), rendered, "canonical fixpoint for `{spec}`");
    }

    // 1. ParseError, with a byte position.
    match parse_constraint("alphabet=2; forbid=01,").unwrap_err() {
        Error::Parse { pos, .. } => assert_eq!(pos, 22),
        other => panic!("expected Parse, got {other:?}"),
    }
    // 2. LetterOutOfRange.
    assert!(matches!(
        parse_constraint("alphabet=2; forbid=21").unwrap_err(),
        Error::LetterOutOfRange { letter: 2, sigma: 2 }
    ));
    // 3. MissingAlphabet.
    assert!(matches!(
        parse_constraint("evenrun=0").unwrap_err(),
        Error::MissingAlphabet
    ));
    // 4. UnsupportedParams.
    assert!(matches!(
        constraint_from_params(2, -3).unwrap_err(),
        Error::UnsupportedParams { x: 2, y: -3 }
    ));
    // 5. CapExceeded.
    let wide = parse_constraint("alphabet=10").unwrap();
    assert!(matches!(
        enumerate_words(&wide, 8, 10_000).unwrap_err(),
        Error::CapExceeded { .. }
    ));

    println!(
        "acceptance criterion 8: PASS - DSL corpus re-emits canonically and all five error \
         classes trigger"
    );
}
