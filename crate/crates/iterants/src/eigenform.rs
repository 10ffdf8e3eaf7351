//! Fixed points of recursive processes.
//!
//! The nested-box recursion encloses its input in one more box each step.
//! No finite expression is fixed by that step, but an expression carrying
//! a reentry marker — a leaf standing for the whole expression — is: one
//! more box around `[*]` unfolds to the same form. [`unfold`] produces the
//! finite truncations of the infinite nest.
//!
//! [`detect_orbit`] is the generic machinery for iterated maps: it records
//! a trajectory until it reaches a fixed point, closes a cycle, or exhausts
//! its bound. The map `x -> -1/x` oscillates `+1, -1, +1, ...` over the
//! rationals with no fixed point, while over the iterant algebra it fixes
//! `i` and `-i`.

use std::fmt;

use crate::error::Error;
use crate::Result;

/// An expression built from the empty form, enclosure in a box, and an
/// optional reentry marker standing for the whole expression.
///
/// Enclosure is unary, so every expression is a chain of boxes ending in
/// [`FormExpr::Empty`] or [`FormExpr::Reentry`]; the reentry marker can
/// only occur once, as the innermost leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormExpr {
    /// The void: no distinction drawn.
    Empty,
    /// One box around the inner expression.
    Enclose(Box<FormExpr>),
    /// The expression itself, re-entering its own space.
    Reentry,
}

impl FormExpr {
    /// Number of boxes around the innermost leaf.
    pub fn depth(&self) -> usize {
        match self {
            FormExpr::Empty | FormExpr::Reentry => 0,
            FormExpr::Enclose(inner) => 1 + inner.depth(),
        }
    }

    pub fn has_reentry(&self) -> bool {
        match self {
            FormExpr::Empty => false,
            FormExpr::Reentry => true,
            FormExpr::Enclose(inner) => inner.has_reentry(),
        }
    }

    /// Renders as nested brackets: `[]` is a box, `*` the reentry marker,
    /// and the empty form is the empty string.
    pub fn render(&self) -> String {
        match self {
            FormExpr::Empty => String::new(),
            FormExpr::Reentry => "*".to_string(),
            FormExpr::Enclose(inner) => format!("[{}]", inner.render()),
        }
    }

    /// Parses the bracket grammar accepted by [`FormExpr::render`].
    pub fn parse(text: &str) -> Result<FormExpr> {
        let s = text.trim();
        if s.is_empty() {
            return Ok(FormExpr::Empty);
        }
        if s == "*" {
            return Ok(FormExpr::Reentry);
        }
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected nested brackets, got {s:?}")))?;
        Ok(FormExpr::Enclose(Box::new(FormExpr::parse(inner)?)))
    }
}

impl fmt::Display for FormExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// One recursion step: enclose the expression in a box.
pub fn enclose(e: FormExpr) -> FormExpr {
    FormExpr::Enclose(Box::new(e))
}

/// `n` recursion steps applied to the empty form; depth is exactly `n`.
pub fn iterate_boxes(n: usize) -> FormExpr {
    let mut e = FormExpr::Empty;
    for _ in 0..n {
        e = enclose(e);
    }
    e
}

/// The finite token for the infinite nest: a box whose content is the
/// expression itself. Adding one more box leaves it invariant under
/// unfolding.
pub fn reentry_eigenform() -> FormExpr {
    enclose(FormExpr::Reentry)
}

/// Replaces the reentry leaf with `replacement`.
pub fn substitute(e: &FormExpr, replacement: &FormExpr) -> Result<FormExpr> {
    match e {
        FormExpr::Empty => Err(Error::NoReentry),
        FormExpr::Reentry => Ok(replacement.clone()),
        FormExpr::Enclose(inner) => Ok(enclose(substitute(inner, replacement)?)),
    }
}

/// Expands the self-reference `k` times: each step re-encloses the reentry
/// leaf in one box, so `k` boxes accumulate at the reentry site and the
/// result still contains the marker. Unfolds compose additively:
/// `unfold(unfold(e, a), b) = unfold(e, a + b)`.
pub fn unfold(e: &FormExpr, k: usize) -> Result<FormExpr> {
    let mut grown = FormExpr::Reentry;
    for _ in 0..k {
        grown = enclose(grown);
    }
    substitute(e, &grown)
}

/// How a recorded trajectory ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitStatus {
    /// `state[index + 1] = state[index]`.
    FixedPoint { index: usize },
    /// `state[start + period] = state[start]`, with the minimal period >= 2.
    Cycle { start: usize, period: usize },
    /// No repeat within the bound.
    Exhausted { bound: usize },
}

/// A recorded trajectory of an iterated map, ending at the first repeat
/// (included in the trajectory) or at the iteration bound.
#[derive(Debug, Clone, PartialEq)]
pub struct Orbit<S> {
    pub trajectory: Vec<S>,
    pub status: OrbitStatus,
}

/// Iterates `step` from `start`, comparing each new state against the full
/// history with the caller's equality. The first repeat closes the orbit:
/// period 1 is a fixed point, period >= 2 a cycle. Full-history comparison
/// yields the minimal period directly.
///
/// A step error (such as division by zero) is reported with the index at
/// which it occurred.
pub fn detect_orbit<S, E>(
    mut step: impl FnMut(&S) -> std::result::Result<S, E>,
    start: S,
    bound: usize,
    eq: impl Fn(&S, &S) -> bool,
) -> Result<Orbit<S>>
where
    E: fmt::Display,
{
    let mut trajectory = vec![start];
    for index in 0..bound {
        let next = step(trajectory.last().expect("nonempty")).map_err(|e| Error::OrbitStep {
            index,
            message: e.to_string(),
        })?;
        let repeat = trajectory.iter().position(|seen| eq(seen, &next));
        trajectory.push(next);
        if let Some(start_index) = repeat {
            let period = trajectory.len() - 1 - start_index;
            let status = if period == 1 {
                OrbitStatus::FixedPoint { index: start_index }
            } else {
                OrbitStatus::Cycle {
                    start: start_index,
                    period,
                }
            };
            return Ok(Orbit { trajectory, status });
        }
    }
    Ok(Orbit {
        trajectory,
        status: OrbitStatus::Exhausted { bound },
    })
}
