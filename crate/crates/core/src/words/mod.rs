//! Combinatorial oracles over restricted words: a constraint DSL, an
//! automaton-backed dynamic-programming counter, a brute-force enumerator,
//! parameter-derived constraints, and colored-tiling counts.
//!
//! Counting runs along two deliberately independent routes. The automaton
//! DP ([`count_words`]) is the production path; the enumerator
//! ([`enumerate_words`]) walks every candidate word and applies the
//! definition-level predicate [`WordConstraint::accepts`] directly, so the
//! two can cross-check each other.

pub mod automaton;
pub mod parse;

pub use automaton::{build_automaton, CountAutomaton};
pub use parse::{parse_constraint, WordConstraint};

use num_traits::One;

use crate::error::{Error, Result};
use crate::value::ExactInt;

/// Default candidate cap for [`enumerate_words`].
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// Exact number of words of length `n` that satisfy the constraint,
/// via the compiled automaton.
pub fn count_words(constraint: &WordConstraint, n: usize) -> ExactInt {
    build_automaton(constraint).count_length(n)
}

/// Every satisfying word of length `n`, in lexicographic order, as digit
/// strings. Brute force over all `sigma^n` candidates with the
/// definition-level predicate; refuses to start when the candidate count
/// exceeds `cap`.
pub fn enumerate_words(constraint: &WordConstraint, n: usize, cap: u64) -> Result<Vec<String>> {
    let sigma = constraint.alphabet_size();
    let candidates = ExactInt::from(sigma).pow(n as u32);
    if candidates > ExactInt::from(cap) {
        return Err(Error::CapExceeded {
            candidates: candidates.to_string(),
            cap,
        });
    }
    let mut accepted = Vec::new();
    let mut word = vec![0u8; n];
    loop {
        if constraint.accepts(&word) {
            accepted.push(word.iter().map(|&d| (b'0' + d) as char).collect());
        }
        // Odometer increment in lexicographic order.
        let mut i = n;
        while i > 0 {
            word[i - 1] += 1;
            if word[i - 1] < sigma {
                break;
            }
            word[i - 1] = 0;
            i -= 1;
        }
        if i == 0 {
            break;
        }
    }
    Ok(accepted)
}

/// The word model attached to a coefficient pair `(x, y)`:
///
/// - `y > 0`: alphabet of size `x + y` in which the `y` letters
///   `0..y-1` must appear in even-length runs only;
/// - `y < 0` with `-y < x`: alphabet of size `x` forbidding the factors
///   `0i` for `1 <= i <= -y`.
///
/// With these constraints the number of valid words of length `n` equals
/// the canonical sequence term `a[n+1]` for `(x, y)`.
pub fn constraint_from_params(x: i64, y: i64) -> Result<WordConstraint> {
    let unsupported = Err(Error::UnsupportedParams { x, y });
    if x <= 0 || y == 0 {
        return unsupported;
    }
    if y > 0 {
        let sigma = x + y;
        if sigma > 10 {
            return unsupported;
        }
        WordConstraint::new(sigma as u8, [], (0..y as u8).collect::<Vec<_>>())
    } else {
        if -y >= x || x > 10 {
            return unsupported;
        }
        let factors: Vec<Vec<u8>> = (1..=(-y) as u8).map(|i| vec![0, i]).collect();
        WordConstraint::new(x as u8, factors, [])
    }
}

/// Number of tilings of a 1 x `n` board by unit tiles in `colors1` colors
/// and dominoes in `colors2` colors: `t(n) = c1*t(n-1) + c2*t(n-2)` with
/// `t(0) = 1`, `t(1) = c1`. Equals the canonical term `a[n+1]` for the
/// coefficient pair `(c1, c2)`.
pub fn count_colored_tilings(n: usize, colors1: u64, colors2: u64) -> ExactInt {
    let c1 = ExactInt::from(colors1);
    let c2 = ExactInt::from(colors2);
    let mut prev = ExactInt::one(); // t(0)
    if n == 0 {
        return prev;
    }
    let mut current = c1.clone(); // t(1)
    for _ in 2..=n {
        let next = &c1 * &current + &c2 * &prev;
        prev = current;
        current = next;
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrence::{generate, RecurrenceSpec};
    use crate::value::RingValue;

    #[test]
    fn counts_match_sequences() {
        let c = parse_constraint("alphabet=3; forbid=01,02").unwrap();
        assert_eq!(count_words(&c, 3), ExactInt::from(15));
        let c = parse_constraint("alphabet=2; evenrun=0").unwrap();
        assert_eq!(count_words(&c, 4), ExactInt::from(5));
        let c = parse_constraint("alphabet=4").unwrap();
        assert_eq!(count_words(&c, 0), ExactInt::one());
    }

    #[test]
    fn enumeration_lists_words() {
        let c = parse_constraint("alphabet=2; forbid=01").unwrap();
        assert_eq!(
            enumerate_words(&c, 3, DEFAULT_ENUMERATION_CAP).unwrap(),
            vec!["000", "100", "110", "111"]
        );
        let c = parse_constraint("alphabet=2; evenrun=0").unwrap();
        assert_eq!(
            enumerate_words(&c, 2, DEFAULT_ENUMERATION_CAP).unwrap(),
            vec!["00", "11"]
        );
        assert_eq!(
            enumerate_words(&c, 0, DEFAULT_ENUMERATION_CAP).unwrap(),
            vec![""]
        );
    }

    #[test]
    fn enumeration_respects_cap() {
        let c = parse_constraint("alphabet=10").unwrap();
        let err = enumerate_words(&c, 9, 1_000_000).unwrap_err();
        assert_eq!(
            err,
            Error::CapExceeded {
                candidates: "1000000000".into(),
                cap: 1_000_000
            }
        );
    }

    #[test]
    fn enumeration_is_sorted_and_duplicate_free() {
        let c = parse_constraint("alphabet=3; forbid=00; evenrun=1").unwrap();
        let words = enumerate_words(&c, 6, DEFAULT_ENUMERATION_CAP).unwrap();
        for pair in words.windows(2) {
            assert!(pair[0] < pair[1]);
        }
        assert_eq!(count_words(&c, 6), ExactInt::from(words.len()));
    }

    #[test]
    fn params_with_positive_y() {
        // Pell: one even-run letter over three.
        let c = constraint_from_params(2, 1).unwrap();
        assert_eq!(c.to_string(), "alphabet=3; evenrun=0");
        assert_eq!(count_words(&c, 2), ExactInt::from(5));
        // Jacobsthal: two even-run letters over three.
        let c = constraint_from_params(1, 2).unwrap();
        assert_eq!(c.to_string(), "alphabet=3; evenrun=0,1");
        assert_eq!(count_words(&c, 2), ExactInt::from(3));
    }

    #[test]
    fn params_with_negative_y() {
        let c = constraint_from_params(3, -1).unwrap();
        assert_eq!(c.to_string(), "alphabet=3; forbid=01");
        assert_eq!(count_words(&c, 2), ExactInt::from(8));
        let c = constraint_from_params(4, -3).unwrap();
        assert_eq!(c.to_string(), "alphabet=4; forbid=01,02,03");
    }

    #[test]
    fn unsupported_params() {
        for (x, y) in [(0, 1), (2, 0), (2, -2), (2, -5), (8, 5), (11, -1), (-1, 1)] {
            assert_eq!(
                constraint_from_params(x, y).unwrap_err(),
                Error::UnsupportedParams { x, y }
            );
        }
    }

    #[test]
    fn params_counts_track_the_recurrence() {
        for (x, y) in [(1i64, 1i64), (2, 1), (1, 2), (3, -1), (3, -2), (4, -3), (2, -1)] {
            let c = constraint_from_params(x, y).unwrap();
            let spec = RecurrenceSpec::canonical(RingValue::int(x), RingValue::int(y)).unwrap();
            let window = generate(&spec, 10).unwrap();
            for n in 0..=9usize {
                assert_eq!(
                    &RingValue::Int(count_words(&c, n)),
                    window.at(n + 1).unwrap(),
                    "x={x} y={y} n={n}"
                );
            }
        }
    }

    #[test]
    fn tiling_counts() {
        assert_eq!(count_colored_tilings(0, 2, 2), ExactInt::one());
        assert_eq!(count_colored_tilings(2, 2, 2), ExactInt::from(6));
        assert_eq!(count_colored_tilings(3, 2, 2), ExactInt::from(16));
    }

    #[test]
    fn tilings_track_the_recurrence() {
        let spec = RecurrenceSpec::canonical(RingValue::int(2), RingValue::int(2)).unwrap();
        let window = generate(&spec, 13).unwrap();
        for n in 0..=12usize {
            assert_eq!(
                &RingValue::Int(count_colored_tilings(n, 2, 2)),
                window.at(n + 1).unwrap()
            );
        }
    }
}
