//! Tracking of lexicographic constraints against a boundary sequence.
//!
//! The state is the length of the longest suffix of the word read so far that
//! is still a prefix of the boundary. Every shorter live match is a border of
//! that prefix, so one integer captures all pending comparisons.

use crate::words::BinaryWord;

/// Which side of the constraint the boundary sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Side {
    /// Every shift must be at least the boundary.
    Lower,
    /// Every shift must be at most the boundary.
    Upper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Step {
    Reject,
    /// `exhausted` is set when a match ran through every known boundary digit.
    Next {
        state: u16,
        exhausted: bool,
    },
}

#[derive(Clone, Debug)]
pub(crate) struct BoundaryAutomaton {
    table: Vec<[Step; 2]>,
}

fn borders(boundary: &[u8]) -> Vec<usize> {
    // fail[k] = longest proper border of boundary[..k]
    let mut fail = vec![0usize; boundary.len() + 1];
    let mut k = 0;
    for i in 1..boundary.len() {
        while k > 0 && boundary[i] != boundary[k] {
            k = fail[k];
        }
        if boundary[i] == boundary[k] {
            k += 1;
        }
        fail[i + 1] = k;
    }
    fail
}

fn transition(digits: &[u8], fail: &[usize], side: Side, state: usize, d: u8) -> Step {
    let mut next = None;
    let mut exhausted = false;
    let mut len = state;
    loop {
        let b = digits[len];
        let violated = match side {
            Side::Lower => d < b,
            Side::Upper => d > b,
        };
        if violated {
            return Step::Reject;
        }
        if d == b {
            if len + 1 == digits.len() {
                exhausted = true;
            } else if next.is_none() {
                next = Some(len + 1);
            }
        }
        if len == 0 {
            break;
        }
        len = fail[len];
    }
    Step::Next {
        state: next.unwrap_or(0) as u16,
        exhausted,
    }
}

impl BoundaryAutomaton {
    pub(crate) fn new(boundary: &BinaryWord, side: Side) -> Self {
        let digits = boundary.to_digits();
        let known = digits.len();
        assert!(
            known > 0 && known < u16::MAX as usize,
            "boundary length out of range"
        );
        let fail = borders(&digits);
        let table = (0..known)
            .map(|state| [0u8, 1].map(|d| transition(&digits, &fail, side, state, d)))
            .collect();
        Self { table }
    }

    #[inline]
    pub(crate) fn step(&self, state: u16, d: u8) -> Step {
        self.table[state as usize][d as usize]
    }
}
