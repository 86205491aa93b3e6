//! Deterministic counting automaton for a [`WordConstraint`]: the product
//! of a factor-avoidance automaton (prefix states of the forbidden factors
//! closed under longest-proper-suffix fallback) and a run-parity tracker
//! for the even-run letters. Counting is a dynamic program that pushes
//! state-indexed big-integer counts one letter at a time.

use std::collections::HashMap;

use num_traits::Zero;

use crate::value::ExactInt;

use super::parse::WordConstraint;

/// Compiled automaton. Transitions are complete over non-rejecting moves:
/// for every `(state, letter)` there is exactly one successor or a reject.
/// A word is counted iff consuming it never rejects and the final state is
/// accepting (no even-run letter is mid-run with odd parity).
#[derive(Clone, Debug)]
pub struct CountAutomaton {
    sigma: u8,
    start: usize,
    /// `transitions[state][letter]`, `None` meaning reject.
    transitions: Vec<Vec<Option<usize>>>,
    accepting: Vec<bool>,
}

/// Factor-avoidance part: states are the proper prefixes of the forbidden
/// factors, transitions follow the trie edge or fall back along suffix
/// links, and any move that completes a factor rejects.
struct FactorAutomaton {
    /// `next[state][letter]`, `None` meaning a factor was completed.
    next: Vec<Vec<Option<usize>>>,
}

fn build_factor_automaton(constraint: &WordConstraint) -> FactorAutomaton {
    let sigma = constraint.alphabet_size() as usize;

    struct Node {
        children: Vec<Option<usize>>,
        fail: usize,
        terminal: bool,
    }
    let mut trie = vec![Node {
        children: vec![None; sigma],
        fail: 0,
        terminal: false,
    }];

    for factor in constraint.forbidden_factors() {
        let mut state = 0;
        for &letter in factor {
            let slot = letter as usize;
            state = match trie[state].children[slot] {
                Some(next) => next,
                None => {
                    trie.push(Node {
                        children: vec![None; sigma],
                        fail: 0,
                        terminal: false,
                    });
                    let next = trie.len() - 1;
                    trie[state].children[slot] = Some(next);
                    next
                }
            };
        }
        trie[state].terminal = true;
    }

    // Breadth-first suffix links; terminal status propagates along them.
    let mut queue = std::collections::VecDeque::new();
    for letter in 0..sigma {
        if let Some(child) = trie[0].children[letter] {
            queue.push_back(child);
        }
    }
    while let Some(state) = queue.pop_front() {
        if trie[trie[state].fail].terminal {
            trie[state].terminal = true;
        }
        for letter in 0..sigma {
            if let Some(child) = trie[state].children[letter] {
                let mut fallback = trie[state].fail;
                loop {
                    if let Some(next) = trie[fallback].children[letter] {
                        if next != child {
                            trie[child].fail = next;
                        }
                        break;
                    }
                    if fallback == 0 {
                        break;
                    }
                    fallback = trie[fallback].fail;
                }
                queue.push_back(child);
            }
        }
    }

    // Complete goto function; entering a terminal state rejects.
    let mut next = vec![vec![None; sigma]; trie.len()];
    let order: Vec<usize> = {
        // Root first, then breadth-first again so fallbacks are resolved.
        let mut order = vec![0];
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(state) = queue.pop_front() {
            for letter in 0..sigma {
                if let Some(child) = trie[state].children[letter] {
                    order.push(child);
                    queue.push_back(child);
                }
            }
        }
        order
    };
    for &state in &order {
        // Missing edges follow the suffix link's completed row; at the
        // root they stay put.
        let fallback = if state == 0 {
            vec![Some(0); sigma]
        } else {
            next[trie[state].fail].clone()
        };
        next[state] = trie[state]
            .children
            .iter()
            .zip(fallback)
            .map(|(&child, fallback)| match child.or(fallback) {
                Some(target) if trie[target].terminal => None,
                other => other,
            })
            .collect();
    }

    FactorAutomaton { next }
}

/// Run-parity component. State 0 is "no odd run pending"; state `1 + i`
/// means the current run of the i-th tracked letter has odd length so far.
/// Leaving a tracked letter while its run is odd rejects; extending it to
/// even length folds back to state 0.
struct ParityAutomaton {
    tracked: Vec<u8>,
}

impl ParityAutomaton {
    fn new(constraint: &WordConstraint) -> Self {
        ParityAutomaton {
            tracked: constraint.even_run_letters().collect(),
        }
    }

    fn step(&self, state: usize, letter: u8) -> Option<usize> {
        let entering = self
            .tracked
            .iter()
            .position(|&t| t == letter)
            .map(|i| i + 1);
        match state {
            0 => Some(entering.unwrap_or(0)),
            odd => {
                if self.tracked[odd - 1] == letter {
                    Some(0)
                } else {
                    // A different letter arrives while the run is odd.
                    None
                }
            }
        }
    }

    fn accepting(&self, state: usize) -> bool {
        state == 0
    }
}

/// Compiles the product automaton, keeping only states reachable from the
/// start.
pub fn build_automaton(constraint: &WordConstraint) -> CountAutomaton {
    let sigma = constraint.alphabet_size() as usize;
    let factor = build_factor_automaton(constraint);
    let parity = ParityAutomaton::new(constraint);

    let mut index: HashMap<(usize, usize), usize> = HashMap::new();
    let mut pairs = vec![(0usize, 0usize)];
    index.insert((0, 0), 0);
    let mut transitions: Vec<Vec<Option<usize>>> = Vec::new();

    let mut cursor = 0;
    while cursor < pairs.len() {
        let (f_state, p_state) = pairs[cursor];
        let mut row = Vec::with_capacity(sigma);
        for letter in 0..sigma {
            let target = match (
                factor.next[f_state][letter],
                parity.step(p_state, letter as u8),
            ) {
                (Some(f_next), Some(p_next)) => {
                    let key = (f_next, p_next);
                    let idx = *index.entry(key).or_insert_with(|| {
                        pairs.push(key);
                        pairs.len() - 1
                    });
                    Some(idx)
                }
                _ => None,
            };
            row.push(target);
        }
        transitions.push(row);
        cursor += 1;
    }

    let accepting = pairs
        .iter()
        .map(|&(_, p_state)| parity.accepting(p_state))
        .collect();

    CountAutomaton {
        sigma: constraint.alphabet_size(),
        start: 0,
        transitions,
        accepting,
    }
}

impl CountAutomaton {
    pub fn alphabet_size(&self) -> u8 {
        self.sigma
    }

    /// Number of reachable (non-rejecting) states.
    pub fn state_count(&self) -> usize {
        self.transitions.len()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    /// Successor of `state` on `letter`, or `None` for reject.
    pub fn step(&self, state: usize, letter: u8) -> Option<usize> {
        self.transitions[state][letter as usize]
    }

    /// Exact number of accepted words of length `n`, by one DP pass per
    /// letter position.
    pub fn count_length(&self, n: usize) -> ExactInt {
        self.count_lengths(n).pop().expect("nonempty")
    }

    /// Accepted-word counts for every length `0..=n_max` in one sweep.
    pub fn count_lengths(&self, n_max: usize) -> Vec<ExactInt> {
        let accepted_total = |counts: &[ExactInt]| -> ExactInt {
            counts
                .iter()
                .zip(&self.accepting)
                .filter(|(_, &accept)| accept)
                .map(|(count, _)| count.clone())
                .sum()
        };
        let mut counts = vec![ExactInt::zero(); self.state_count()];
        counts[self.start] = ExactInt::from(1);
        let mut totals = Vec::with_capacity(n_max + 1);
        totals.push(accepted_total(&counts));
        for _ in 0..n_max {
            let mut next = vec![ExactInt::zero(); self.state_count()];
            for (state, count) in counts.iter().enumerate() {
                if count.is_zero() {
                    continue;
                }
                for letter in 0..self.sigma as usize {
                    if let Some(target) = self.transitions[state][letter] {
                        next[target] += count;
                    }
                }
            }
            counts = next;
            totals.push(accepted_total(&counts));
        }
        totals
    }

    /// Runs the automaton over a full word.
    pub fn accepts(&self, word: &[u8]) -> bool {
        let mut state = self.start;
        for &letter in word {
            match self.step(state, letter) {
                Some(next) => state = next,
                None => return false,
            }
        }
        self.is_accepting(state)
    }
}
