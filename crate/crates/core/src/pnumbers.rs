//! Exact partition numbers `p(k, r, n)` by exhaustive enumeration.
//!
//! `p(k, r, n)` is the least ground size `N` such that every coloring of the
//! `(r+1)`-subsets of `{0, …, N-1}` with `n` colors admits an end-homogeneous
//! witness of length `k`. Two readings of "witness" are supported: any
//! end-homogeneous sequence ([`Variant::Sequence`]) or a hiker's track
//! ([`Variant::Track`]). The counting argument over hiker's maps gives the
//! exclusive upper bound
//!
//! ```text
//! p(k, r, n) < r + 1 + Σ_{i=0}^{k-2} n^C(r+i, r)        (r >= 1)
//! ```
//!
//! computed by [`theorem9_bound`].
//!
//! Enumeration walks color vectors as an odometer whose least significant
//! digit is the last colex position, so coloring index order is the
//! lexicographic order of color vectors. Workers claim disjoint index blocks;
//! the smallest failing index is reported, which keeps results independent of
//! the number of workers.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::thread;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};

use crate::coloring::{subset_count, write_krt, Color, Coloring};
use crate::combinatorics::binomial;
use crate::homogeneity::WitnessSearch;
use crate::track::build_track;
use crate::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Any end-homogeneous sequence of length `k`.
    Sequence,
    /// Some hiker's track has at least `k` points.
    Track,
}

impl Variant {
    pub fn as_str(&self) -> &'static str {
        match self {
            Variant::Sequence => "sequence",
            Variant::Track => "track",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "seq" | "sequence" => Ok(Variant::Sequence),
            "track" => Ok(Variant::Track),
            other => Err(Error::InvalidParameters(format!("unknown variant {other:?}"))),
        }
    }
}

/// "Every `num_colors`-coloring of `[ground_size]^(arity+1)` has a witness of
/// length `target_length`."
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StatementSpec {
    pub ground_size: usize,
    pub arity: usize,
    pub num_colors: u32,
    pub target_length: usize,
    pub variant: Variant,
}

impl StatementSpec {
    pub fn validate(&self) -> Result<()> {
        if self.num_colors == 0 || self.target_length == 0 || self.ground_size < self.arity + 1 {
            return Err(Error::InvalidParameters(format!(
                "need n >= 1, k >= 1 and N >= r + 1 (got N={}, r={}, n={}, k={})",
                self.ground_size, self.arity, self.num_colors, self.target_length
            )));
        }
        Ok(())
    }

    /// `n^C(N, r+1)`.
    pub fn coloring_count(&self) -> BigUint {
        let positions = binomial(self.ground_size as u64, self.arity as u64 + 1);
        match positions.to_u32() {
            Some(e) => BigUint::from(self.num_colors).pow(e),
            // Only reachable with a single color; anything larger is astronomically big.
            None if self.num_colors == 1 => BigUint::from(1u32),
            None => BigUint::from(u64::MAX) + 1u32,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    /// Largest number of colorings a single statement may enumerate.
    pub budget: u64,
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            workers: thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatementOutcome {
    pub holds: bool,
    /// The lexicographically least coloring without a witness.
    pub counterexample: Option<Coloring>,
    /// Colorings up to and including the first counterexample, or all of them.
    pub colorings_checked: u64,
}

/// Witness test for one variant, with reusable buffers.
struct WitnessTest {
    variant: Variant,
    target: usize,
    search: WitnessSearch,
}

impl WitnessTest {
    fn new(variant: Variant, target: usize) -> Self {
        WitnessTest { variant, target, search: WitnessSearch::new(target) }
    }

    fn has_witness(&mut self, c: &Coloring) -> bool {
        match self.variant {
            Variant::Sequence => self.search.run(c),
            // A track to x has at most x + 1 points.
            Variant::Track => (self.target.saturating_sub(1)..c.ground_size())
                .rev()
                .any(|x| build_track(c, x).expect("destination is in range").points().len() >= self.target),
        }
    }
}

fn decode(mut index: u64, base: u64, digits: &mut [Color]) {
    for d in digits.iter_mut().rev() {
        *d = (index % base) as Color;
        index /= base;
    }
}

fn increment(base: Color, digits: &mut [Color]) {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return;
        }
        *d = 0;
    }
}

const BLOCK: u64 = 1 << 12;

fn scan(spec: &StatementSpec, total: u64, next_block: &AtomicU64, first_fail: &AtomicU64) {
    let positions = subset_count(spec.ground_size, spec.arity + 1).expect("checked by caller");
    let mut coloring = Coloring::new(spec.ground_size, spec.arity + 1, spec.num_colors, vec![0; positions])
        .expect("valid shape");
    let mut test = WitnessTest::new(spec.variant, spec.target_length);
    loop {
        let start = next_block.fetch_add(1, Ordering::Relaxed).saturating_mul(BLOCK);
        if start >= total || start >= first_fail.load(Ordering::Relaxed) {
            return;
        }
        let end = (start + BLOCK).min(total);
        decode(start, spec.num_colors as u64, coloring.colors_mut());
        for index in start..end {
            if index >= first_fail.load(Ordering::Relaxed) {
                return;
            }
            if !test.has_witness(&coloring) {
                first_fail.fetch_min(index, Ordering::Relaxed);
                break;
            }
            increment(spec.num_colors, coloring.colors_mut());
        }
    }
}

/// Decides the statement by enumerating every coloring.
///
/// Fails with [`Error::BudgetExceeded`] instead of sampling when the space is
/// larger than `opts.budget`.
pub fn statement_holds(spec: &StatementSpec, opts: &SearchOptions) -> Result<StatementOutcome> {
    spec.validate()?;
    let required = spec.coloring_count();
    let total = match required.to_u64() {
        Some(total) if total <= opts.budget => total,
        _ => {
            return Err(Error::BudgetExceeded {
                ground_size: spec.ground_size,
                required,
                budget: opts.budget,
                lower_bound: spec.ground_size.saturating_sub(1),
            })
        }
    };
    let positions = subset_count(spec.ground_size, spec.arity + 1)?;

    let next_block = AtomicU64::new(0);
    let first_fail = AtomicU64::new(u64::MAX);
    let workers = opts.workers.max(1).min(total.div_ceil(BLOCK) as usize);
    if workers <= 1 {
        scan(spec, total, &next_block, &first_fail);
    } else {
        thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| scan(spec, total, &next_block, &first_fail));
            }
        });
    }

    let fail = first_fail.into_inner();
    if fail == u64::MAX {
        return Ok(StatementOutcome { holds: true, counterexample: None, colorings_checked: total });
    }
    let mut colors = vec![0; positions];
    decode(fail, spec.num_colors as u64, &mut colors);
    let counterexample = Coloring::new(spec.ground_size, spec.arity + 1, spec.num_colors, colors)?;
    Ok(StatementOutcome { holds: false, counterexample: Some(counterexample), colorings_checked: fail + 1 })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PNumberReport {
    pub k: usize,
    pub r: usize,
    pub n: u32,
    pub variant: Variant,
    pub value: usize,
    /// Exclusive upper bound; `None` when `r = 0`.
    pub theorem9_bound: Option<BigUint>,
    /// A coloring of `[value-1]^(r+1)` with no witness, unless the scan
    /// started at `value`.
    pub counterexample: Option<Coloring>,
    /// Colorings enumerated at the deciding ground size.
    pub colorings_checked: u64,
    /// Colorings enumerated over the whole scan.
    pub total_colorings_checked: u64,
    pub elapsed: Duration,
}

/// Scans `N` upward from `max(k, r+1)` until the statement holds.
pub fn exact_p(k: usize, r: usize, n: u32, variant: Variant, opts: &SearchOptions) -> Result<PNumberReport> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidParameters(format!("need n >= 1 and k >= 1 (got k={k}, n={n})")));
    }
    let started = Instant::now();
    let bound = if r >= 1 { Some(theorem9_bound(k, r, n)?) } else { None };
    let start = k.max(r + 1);
    let mut total = 0;
    let mut previous: Option<Coloring> = None;
    let mut ground_size = start;

    let (value, checked) = if k <= r + 1 {
        // No index tuple fits in k points; [0, k) is a witness.
        (start, 0)
    } else {
        loop {
            let spec = StatementSpec { ground_size, arity: r, num_colors: n, target_length: k, variant };
            let outcome = statement_holds(&spec, opts)?;
            total += outcome.colorings_checked;
            if outcome.holds {
                break (ground_size, outcome.colorings_checked);
            }
            previous = outcome.counterexample;
            ground_size += 1;
        }
    };

    // With k = 1 the sum is empty and the bound r + 1 equals the value; the
    // strict inequality only has content from k = 2 on.
    if let (Some(bound), true) = (&bound, k >= 2) {
        if BigUint::from(value) >= *bound {
            return Err(Error::BoundViolated { value, bound: bound.clone() });
        }
    }
    Ok(PNumberReport {
        k,
        r,
        n,
        variant,
        value,
        theorem9_bound: bound,
        counterexample: previous,
        colorings_checked: checked,
        total_colorings_checked: total,
        elapsed: started.elapsed(),
    })
}

/// `B = r + 1 + Σ_{i=0}^{k-2} n^C(r+i, r)`, the exclusive bound on `p(k, r, n)`.
pub fn theorem9_bound(k: usize, r: usize, n: u32) -> Result<BigUint> {
    if r == 0 {
        return Err(Error::BoundUndefined);
    }
    if n == 0 || k == 0 {
        return Err(Error::InvalidParameters(format!("need n >= 1 and k >= 1 (got k={k}, n={n})")));
    }
    let mut sum = BigUint::from(r + 1);
    for i in 0..k.saturating_sub(1) {
        let exponent = binomial((r + i) as u64, r as u64)
            .to_u32()
            .ok_or_else(|| Error::InvalidParameters("bound exponent too large".into()))?;
        sum += BigUint::from(n).pow(exponent);
    }
    Ok(sum)
}

/// One cell of a bound-verification grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridRow {
    pub k: usize,
    pub r: usize,
    pub n: u32,
    pub variant: Variant,
    pub outcome: Result<PNumberReport>,
}

impl GridRow {
    /// `p` was computed and lies strictly below the bound (when one exists).
    pub fn ok(&self) -> bool {
        match &self.outcome {
            Ok(report) => report
                .theorem9_bound
                .as_ref()
                .is_none_or(|b| BigUint::from(report.value) < *b),
            Err(_) => false,
        }
    }

    /// The JSON-lines record for this cell. Wall-clock time is only included
    /// when asked for, so default output stays byte-reproducible.
    pub fn to_json(&self, with_timing: bool) -> Value {
        let bound = if self.r == 0 {
            Value::String("n/a (r=0)".into())
        } else {
            match theorem9_bound(self.k, self.r, self.n) {
                Ok(b) => Value::String(b.to_string()),
                Err(_) => Value::Null,
            }
        };
        let (p, krt, checked, elapsed) = match &self.outcome {
            Ok(report) => (
                json!(report.value),
                report.counterexample.as_ref().map_or(Value::Null, |c| Value::String(write_krt(c))),
                json!(report.colorings_checked),
                if with_timing { json!(report.elapsed.as_millis() as u64) } else { Value::Null },
            ),
            Err(_) => (Value::Null, Value::Null, Value::Null, Value::Null),
        };
        let mut row = json!({
            "k": self.k,
            "r": self.r,
            "n": self.n,
            "variant": self.variant.as_str(),
            "p": p,
            "bound": bound,
            "ok": self.ok(),
            "counterexample_krt": krt,
            "colorings_checked": checked,
            "elapsed_ms": elapsed,
        });
        if let Err(e) = &self.outcome {
            row["error"] = Value::String(e.to_string());
        }
        row
    }
}

/// Computes `p` and the bound for every cell; failing cells do not stop the rest.
pub fn verify_bound_grid(cells: &[(usize, usize, u32)], variant: Variant, opts: &SearchOptions) -> Vec<GridRow> {
    cells
        .iter()
        .map(|&(k, r, n)| GridRow { k, r, n, variant, outcome: exact_p(k, r, n, variant, opts) })
        .collect()
}
