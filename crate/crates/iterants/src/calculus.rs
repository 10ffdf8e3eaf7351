//! Noncommutative discrete calculus on a uniform time grid.
//!
//! A time series `x(t)` lives on the grid `t = 0, dt, 2dt, ...`. The shift
//! operator `J` keeps track of the clock tick consumed by an observation:
//! `x(t) J = J x(t + dt)`, and the derivative is redefined to carry it,
//! `Dx(t) = J (x(t + dt) - x(t)) / dt`. Products of such operators commute
//! functions past `J` by shifting their time argument, so observing `x`
//! before or after `Dx` differ, and the difference is the exact identity
//!
//! ```text
//! [x, Dx] = J (dx)^2 / dt
//! ```
//!
//! which holds sample-exactly for every series on the exact backend. When
//! the increments are `±sqrt(K dt)` — a random walk — the right-hand side
//! is the constant `K` at every step, not merely on average.
//!
//! Grids are finite, so a shift past the last sample yields an invalid
//! sample; validity propagates through arithmetic and comparisons only
//! ever read samples valid on both sides.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::error::Error;
use crate::rng::SplitMix64;
use crate::scalar::{Backend, Scalar};
use crate::Result;

/// Uniform grid `t = 0, dt, ..., n_steps * dt` with `n_steps + 1` points.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeGrid {
    dt: Scalar,
    n_steps: usize,
}

impl TimeGrid {
    pub fn new(dt: Scalar, n_steps: usize) -> Result<TimeGrid> {
        if !dt.is_positive() {
            return Err(Error::NotPositive("dt"));
        }
        if n_steps == 0 {
            return Err(Error::NotPositive("n_steps"));
        }
        Ok(TimeGrid { dt, n_steps })
    }

    pub fn dt(&self) -> &Scalar {
        &self.dt
    }

    pub fn n_steps(&self) -> usize {
        self.n_steps
    }

    /// Number of grid points, `n_steps + 1`.
    pub fn len(&self) -> usize {
        self.n_steps + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn backend(&self) -> Backend {
        self.dt.backend()
    }

    /// The time `index * dt`.
    pub fn time_at(&self, index: usize) -> Scalar {
        let i = match self.backend() {
            Backend::Exact => Scalar::from_int(index as i64),
            Backend::Float => Scalar::from_f64(index as f64),
        };
        i.mul(&self.dt).expect("same backend")
    }
}

/// A sampled function of time. Samples past the data boundary are invalid
/// (`None`) and stay invalid through arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub struct TemporalFunction {
    grid: TimeGrid,
    samples: Vec<Option<Scalar>>,
}

impl TemporalFunction {
    /// A fully valid function; sample count must match the grid.
    pub fn new(grid: TimeGrid, samples: Vec<Scalar>) -> Result<TemporalFunction> {
        TemporalFunction::with_validity(grid, samples.into_iter().map(Some).collect())
    }

    pub fn with_validity(grid: TimeGrid, samples: Vec<Option<Scalar>>) -> Result<TemporalFunction> {
        if samples.len() != grid.len() {
            return Err(Error::GridTooShort {
                needed: grid.len(),
                actual: samples.len(),
            });
        }
        for s in samples.iter().flatten() {
            if s.backend() != grid.backend() {
                return Err(Error::BackendMismatch(s.backend(), grid.backend()));
            }
        }
        Ok(TemporalFunction { grid, samples })
    }

    pub fn constant(grid: TimeGrid, value: Scalar) -> Result<TemporalFunction> {
        let samples = vec![value; grid.len()];
        TemporalFunction::new(grid, samples)
    }

    pub fn zero(grid: TimeGrid) -> TemporalFunction {
        let value = Scalar::zero(grid.backend());
        TemporalFunction::constant(grid, value).expect("backend matches grid")
    }

    /// Samples `f(t)` at every grid point.
    pub fn sample(
        grid: TimeGrid,
        f: impl Fn(&Scalar) -> Result<Scalar>,
    ) -> Result<TemporalFunction> {
        let samples = (0..grid.len())
            .map(|i| f(&grid.time_at(i)))
            .collect::<Result<Vec<_>>>()?;
        TemporalFunction::new(grid, samples)
    }

    pub fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    pub fn samples(&self) -> &[Option<Scalar>] {
        &self.samples
    }

    pub fn get(&self, index: usize) -> Option<&Scalar> {
        self.samples.get(index).and_then(|s| s.as_ref())
    }

    pub fn backend(&self) -> Backend {
        self.grid.backend()
    }

    fn check_grid(&self, other: &TemporalFunction) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        Ok(())
    }

    /// The time shift `g(t) = f(t + dt)`. The last grid point runs out of
    /// data and is marked invalid.
    pub fn shift(&self) -> TemporalFunction {
        let mut samples: Vec<Option<Scalar>> = self.samples[1..].to_vec();
        samples.push(None);
        TemporalFunction {
            grid: self.grid.clone(),
            samples,
        }
    }

    /// `shift` applied `count` times.
    pub fn shift_by(&self, count: usize) -> TemporalFunction {
        let mut f = self.clone();
        for _ in 0..count.min(self.grid.len()) {
            f = f.shift();
        }
        f
    }

    fn zip(
        &self,
        other: &TemporalFunction,
        op: impl Fn(&Scalar, &Scalar) -> Result<Scalar>,
    ) -> Result<TemporalFunction> {
        self.check_grid(other)?;
        let samples = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| match (a, b) {
                (Some(a), Some(b)) => op(a, b).map(Some),
                _ => Ok(None),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TemporalFunction {
            grid: self.grid.clone(),
            samples,
        })
    }

    pub fn add(&self, other: &TemporalFunction) -> Result<TemporalFunction> {
        self.zip(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &TemporalFunction) -> Result<TemporalFunction> {
        self.zip(other, |a, b| a.sub(b))
    }

    /// Pointwise product.
    pub fn mul(&self, other: &TemporalFunction) -> Result<TemporalFunction> {
        self.zip(other, |a, b| a.mul(b))
    }

    pub fn scale(&self, s: &Scalar) -> Result<TemporalFunction> {
        let samples = self
            .samples
            .iter()
            .map(|v| v.as_ref().map(|a| a.mul(s)).transpose())
            .collect::<Result<Vec<_>>>()?;
        Ok(TemporalFunction {
            grid: self.grid.clone(),
            samples,
        })
    }

    pub fn neg(&self) -> TemporalFunction {
        TemporalFunction {
            grid: self.grid.clone(),
            samples: self
                .samples
                .iter()
                .map(|v| v.as_ref().map(Scalar::neg))
                .collect(),
        }
    }

    /// True when every valid sample is zero.
    pub fn is_zero(&self) -> bool {
        self.samples.iter().flatten().all(Scalar::is_zero)
    }

    /// CSV with header `t,x,valid`; invalid samples leave `x` empty.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,x,valid\n");
        for (i, sample) in self.samples.iter().enumerate() {
            let t = self.grid.time_at(i);
            match sample {
                Some(x) => writeln!(out, "{t},{x},true").expect("string write"),
                None => writeln!(out, "{t},,false").expect("string write"),
            }
        }
        out
    }
}

/// A finite sum of terms `J^k f_k(t)` over one grid.
///
/// The product follows from the commutation rule alone:
/// `(J^a f)(J^b g) = J^(a+b) (shift^b f) g`. Powers of `J` are
/// nonnegative; the clock only runs forward.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewElement {
    grid: TimeGrid,
    terms: BTreeMap<u32, TemporalFunction>,
}

impl SkewElement {
    pub fn zero(grid: TimeGrid) -> SkewElement {
        SkewElement {
            grid,
            terms: BTreeMap::new(),
        }
    }

    /// The multiplication operator by `f`, i.e. the term `J^0 f`.
    pub fn from_function(f: TemporalFunction) -> SkewElement {
        SkewElement::term(0, f)
    }

    /// The single term `J^power f`.
    pub fn term(power: u32, f: TemporalFunction) -> SkewElement {
        let grid = f.grid().clone();
        SkewElement {
            grid,
            terms: BTreeMap::from([(power, f)]),
        }
    }

    /// The bare shift operator `J`.
    pub fn j(grid: TimeGrid) -> SkewElement {
        let one = Scalar::one(grid.backend());
        SkewElement::term(
            1,
            TemporalFunction::constant(grid, one).expect("backend matches"),
        )
    }

    pub fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    pub fn terms(&self) -> &BTreeMap<u32, TemporalFunction> {
        &self.terms
    }

    pub fn coefficient(&self, power: u32) -> Option<&TemporalFunction> {
        self.terms.get(&power)
    }

    fn check_grid(&self, other: &SkewElement) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        Ok(())
    }

    fn accumulate(&mut self, power: u32, f: TemporalFunction) -> Result<()> {
        match self.terms.remove(&power) {
            Some(existing) => {
                self.terms.insert(power, existing.add(&f)?);
            }
            None => {
                self.terms.insert(power, f);
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &SkewElement) -> Result<SkewElement> {
        self.check_grid(other)?;
        let mut sum = self.clone();
        for (power, f) in &other.terms {
            sum.accumulate(*power, f.clone())?;
        }
        Ok(sum)
    }

    pub fn neg(&self) -> SkewElement {
        SkewElement {
            grid: self.grid.clone(),
            terms: self.terms.iter().map(|(p, f)| (*p, f.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &SkewElement) -> Result<SkewElement> {
        self.add(&other.neg())
    }

    /// Bilinear product; each left coefficient commutes past the right
    /// term's `J^b` by shifting `b` steps.
    pub fn mul(&self, other: &SkewElement) -> Result<SkewElement> {
        self.check_grid(other)?;
        let mut product = SkewElement::zero(self.grid.clone());
        for (a, f) in &self.terms {
            for (b, g) in &other.terms {
                let shifted = f.shift_by(*b as usize);
                product.accumulate(a + b, shifted.mul(g)?)?;
            }
        }
        Ok(product)
    }

    /// True when every valid sample of every term is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.values().all(TemporalFunction::is_zero)
    }

    /// JSON form `{"dt": ..., "terms": {"<power>": [samples...]}}` with
    /// invalid samples as `null`.
    pub fn to_json(&self) -> Result<Value> {
        let scalar = |s: &Scalar| -> Result<Value> {
            Ok(match s {
                Scalar::Exact(_) => Value::String(s.to_string()),
                Scalar::Float(x) => serde_json::Number::from_f64(*x)
                    .map(Value::Number)
                    .ok_or_else(|| Error::Parse(format!("non-finite float {x}")))?,
            })
        };
        let mut terms = serde_json::Map::new();
        for (power, f) in &self.terms {
            let samples = f
                .samples()
                .iter()
                .map(|v| v.as_ref().map_or(Ok(Value::Null), &scalar))
                .collect::<Result<Vec<_>>>()?;
            terms.insert(power.to_string(), Value::Array(samples));
        }
        Ok(json!({ "dt": scalar(self.grid.dt())?, "terms": terms }))
    }
}

/// The commutator `[a, b] = ab - ba`.
pub fn commutator(a: &SkewElement, b: &SkewElement) -> Result<SkewElement> {
    a.mul(b)?.sub(&b.mul(a)?)
}

/// The shifted discrete derivative `Dx = J (x(t + dt) - x(t)) / dt`, a
/// single term at `J^1`.
pub fn discrete_derivative(x: &TemporalFunction) -> Result<SkewElement> {
    if x.grid().len() < 2 {
        return Err(Error::GridTooShort {
            needed: 2,
            actual: x.grid().len(),
        });
    }
    let velocity = x
        .shift()
        .sub(x)?
        .scale(&Scalar::one(x.backend()).div(x.grid().dt())?)?;
    Ok(SkewElement::term(1, velocity))
}

/// One row of a commutator verification: both sides at a grid point where
/// both are valid.
#[derive(Debug, Clone, PartialEq)]
pub struct CommutatorRow {
    pub t: Scalar,
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub abs_dev: Scalar,
}

/// Per-sample comparison of `[x, Dx]` computed through the skew product
/// against the closed form `J (dx)^2 / dt`.
#[derive(Debug, Clone, PartialEq)]
pub struct CommutatorReport {
    pub rows: Vec<CommutatorRow>,
    pub max_abs_dev: Scalar,
}

impl CommutatorReport {
    /// True when every compared sample matched exactly.
    pub fn is_exact(&self) -> bool {
        self.max_abs_dev.is_zero()
    }

    /// CSV with header `t,lhs,rhs,abs_dev`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,lhs,rhs,abs_dev\n");
        for row in &self.rows {
            writeln!(out, "{},{},{},{}", row.t, row.lhs, row.rhs, row.abs_dev)
                .expect("string write");
        }
        out
    }
}

/// Computes `[x, Dx]` through the skew product, computes `J (dx)^2 / dt`
/// directly, and compares them at every sample valid on both sides.
pub fn verify_commutator_identity(x: &TemporalFunction) -> Result<CommutatorReport> {
    if x.grid().len() < 3 {
        return Err(Error::GridTooShort {
            needed: 3,
            actual: x.grid().len(),
        });
    }
    let position = SkewElement::from_function(x.clone());
    let lhs = commutator(&position, &discrete_derivative(x)?)?;

    // direct route: the squared increment over dt, as a single J term
    let increment = x.shift().sub(x)?;
    let rhs_coeff = increment
        .mul(&increment)?
        .scale(&Scalar::one(x.backend()).div(x.grid().dt())?)?;

    let zero = TemporalFunction::zero(x.grid().clone());
    let lhs_coeff = lhs.coefficient(1).unwrap_or(&zero);

    let mut rows = Vec::new();
    let mut max_abs_dev = Scalar::zero(x.backend());
    for i in 0..x.grid().len() {
        if let (Some(l), Some(r)) = (lhs_coeff.get(i), rhs_coeff.get(i)) {
            let abs_dev = l.sub(r)?.abs();
            if abs_dev.compare(&max_abs_dev)?.is_gt() {
                max_abs_dev = abs_dev.clone();
            }
            rows.push(CommutatorRow {
                t: x.grid().time_at(i),
                lhs: l.clone(),
                rhs: r.clone(),
                abs_dev,
            });
        }
    }

    // any term other than J^1 must vanish
    for (power, f) in lhs.terms() {
        if *power != 1 && !f.is_zero() {
            let worst = f
                .samples()
                .iter()
                .flatten()
                .map(Scalar::abs)
                .reduce(|a, b| {
                    if a.compare(&b).map(|o| o.is_lt()).unwrap_or(false) {
                        b
                    } else {
                        a
                    }
                })
                .unwrap_or_else(|| Scalar::zero(x.backend()));
            if worst.compare(&max_abs_dev)?.is_gt() {
                max_abs_dev = worst;
            }
        }
    }

    Ok(CommutatorReport { rows, max_abs_dev })
}

/// A seeded random walk with increments `±sqrt(K dt)`, so that
/// `(dx)^2 / dt = K` at every step. Signs come from one
/// [`SplitMix64`] bit per step; a fixed seed
/// reproduces the path bit for bit.
pub fn brownian_path(k: &Scalar, grid: &TimeGrid, seed: u64) -> Result<TemporalFunction> {
    let (Scalar::Float(k), Scalar::Float(dt)) = (k, grid.dt()) else {
        return Err(Error::FloatRequired("brownian_path"));
    };
    if *k <= 0.0 {
        return Err(Error::NotPositive("k"));
    }
    let step = (k * dt).sqrt();
    let mut rng = SplitMix64::new(seed);
    let mut samples = Vec::with_capacity(grid.len());
    let mut x = 0.0f64;
    samples.push(Scalar::from_f64(x));
    for _ in 0..grid.n_steps() {
        x += if rng.next_sign() { step } else { -step };
        samples.push(Scalar::from_f64(x));
    }
    TemporalFunction::new(grid.clone(), samples)
}

/// Unbiased sample variance of the endpoint `x(n_steps * dt)` over the
/// paths seeded `0..n_paths`. For a walk with increments `±sqrt(K dt)`
/// the expected value is `K * n_steps * dt`.
pub fn brownian_endpoint_variance(k: &Scalar, grid: &TimeGrid, n_paths: u64) -> Result<f64> {
    if n_paths < 2 {
        return Err(Error::NotPositive("n_paths"));
    }
    // Welford's running mean and sum of squared deviations; the seed order
    // is fixed, so the result is deterministic.
    let mut mean = 0.0f64;
    let mut m2 = 0.0f64;
    for seed in 0..n_paths {
        let path = brownian_path(k, grid, seed)?;
        let endpoint = path
            .get(grid.n_steps())
            .expect("walk samples are all valid")
            .to_f64();
        let count = (seed + 1) as f64;
        let delta = endpoint - mean;
        mean += delta / count;
        m2 += delta * (endpoint - mean);
    }
    Ok(m2 / (n_paths - 1) as f64)
}
