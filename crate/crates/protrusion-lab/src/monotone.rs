//! Monotone Boolean functions, their positive CNF representations, and
//! Dedekind numbers.

use crate::error::{Error, Result};
use crate::graph::SubsetMask;

/// Largest variable count for full in-memory enumeration.
pub const ENUMERATION_LIMIT: usize = 5;
/// Largest variable count for Dedekind counting.
pub const DEDEKIND_LIMIT: usize = 6;

/// A monotone Boolean set-function on subsets of `[t]`, stored as a truth
/// table bitmask: bit `m` holds the output on the subset with mask `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonotoneBoolFunction {
    t: usize,
    table: u64,
}

impl MonotoneBoolFunction {
    pub fn new(t: usize, outputs: &[u8]) -> Result<Self> {
        if t > 6 || outputs.len() != 1 << t {
            return Err(Error::InvalidFunction(format!(
                "expected 2^{t} outputs, got {}",
                outputs.len()
            )));
        }
        let mut table = 0u64;
        for (m, &bit) in outputs.iter().enumerate() {
            if bit > 1 {
                return Err(Error::InvalidFunction(format!(
                    "output {bit} at mask {m} is not 0/1"
                )));
            }
            table |= (bit as u64) << m;
        }
        let f = MonotoneBoolFunction { t, table };
        if !f.is_monotone() {
            return Err(Error::InvalidFunction(
                "outputs are not monotone under subset inclusion".into(),
            ));
        }
        Ok(f)
    }

    pub(crate) fn from_table_unchecked(t: usize, table: u64) -> Self {
        MonotoneBoolFunction { t, table }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn value(&self, s: SubsetMask) -> bool {
        self.table >> s.bits() & 1 == 1
    }

    pub fn outputs(&self) -> Vec<u8> {
        (0..1u64 << self.t)
            .map(|m| (self.table >> m & 1) as u8)
            .collect()
    }

    pub fn is_constant(&self) -> bool {
        let full = full_table(self.t);
        self.table == 0 || self.table == full
    }

    pub fn is_constant_one(&self) -> bool {
        self.table == full_table(self.t)
    }

    fn is_monotone(&self) -> bool {
        for m in 0..1u64 << self.t {
            for i in 0..self.t {
                if m >> i & 1 == 1 {
                    let sub = m & !(1 << i);
                    if self.table >> sub & 1 == 1 && self.table >> m & 1 == 0 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn full_table(t: usize) -> u64 {
    if 1 << t == 64 {
        u64::MAX
    } else {
        (1u64 << (1 << t)) - 1
    }
}

/// All monotone Boolean functions of `t` variables, ordered by truth table.
pub fn enumerate_monotone_functions(t: usize) -> Result<Vec<MonotoneBoolFunction>> {
    if t > ENUMERATION_LIMIT {
        return Err(Error::BoundaryTooLarge {
            what: "monotone function enumeration",
            t,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut out = Vec::new();
    let masks = 1u64 << t;
    let mut table = vec![0u8; masks as usize];
    enumerate_rec(t, 0, &mut table, &mut out);
    out.sort_by_key(|f| f.table);
    Ok(out)
}

fn enumerate_rec(t: usize, m: u64, table: &mut Vec<u8>, out: &mut Vec<MonotoneBoolFunction>) {
    if m == 1 << t {
        let mut bits = 0u64;
        for (i, &b) in table.iter().enumerate() {
            bits |= (b as u64) << i;
        }
        out.push(MonotoneBoolFunction::from_table_unchecked(t, bits));
        return;
    }
    let mut forced_one = false;
    for i in 0..t {
        if m >> i & 1 == 1 && table[(m & !(1 << i)) as usize] == 1 {
            forced_one = true;
            break;
        }
    }
    if forced_one {
        table[m as usize] = 1;
        enumerate_rec(t, m + 1, table, out);
    } else {
        for b in 0..=1u8 {
            table[m as usize] = b;
            enumerate_rec(t, m + 1, table, out);
        }
        table[m as usize] = 0;
    }
}

/// The Dedekind number `M(t)`: how many monotone Boolean functions of `t`
/// variables exist. For `t = 6` this counts ordered pairs `f <= g` of
/// 5-variable monotone functions (fixing the last variable to 0 resp. 1
/// splits a 6-variable function into such a pair). The optional observer is
/// invoked periodically with the number of processed pairs.
pub fn dedekind(t: usize) -> Result<u64> {
    dedekind_with_progress(t, |_| {})
}

pub fn dedekind_with_progress(t: usize, mut progress: impl FnMut(u64)) -> Result<u64> {
    if t > DEDEKIND_LIMIT {
        return Err(Error::BoundaryTooLarge {
            what: "Dedekind number computation",
            t,
            limit: DEDEKIND_LIMIT,
        });
    }
    if t <= ENUMERATION_LIMIT {
        return Ok(enumerate_monotone_functions(t)?.len() as u64);
    }
    let fives = enumerate_monotone_functions(5)?;
    let tables: Vec<u64> = fives.iter().map(|f| f.table).collect();
    let mut count = 0u64;
    let mut processed = 0u64;
    for &f in &tables {
        for &g in &tables {
            if f & !g == 0 {
                count += 1;
            }
        }
        processed += tables.len() as u64;
        if processed % (1 << 22) < tables.len() as u64 {
            progress(processed);
        }
    }
    Ok(count)
}

/// A monotone CNF: clauses of positive literals, each a nonempty subset of
/// the labels `1..t` ordered for determinism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneCnf {
    t: usize,
    clauses: Vec<SubsetMask>,
}

impl MonotoneCnf {
    pub fn new(t: usize, clauses: Vec<SubsetMask>) -> Result<Self> {
        for c in &clauses {
            if c.t() != t || c.is_empty() {
                return Err(Error::InvalidFunction(
                    "clauses must be nonempty subsets of the variables".into(),
                ));
            }
        }
        let mut clauses = clauses;
        clauses.sort();
        Ok(MonotoneCnf { t, clauses })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn clauses(&self) -> &[SubsetMask] {
        &self.clauses
    }

    /// Evaluate the CNF on the subset of variables set to 1.
    pub fn value(&self, s: SubsetMask) -> bool {
        self.clauses.iter().all(|c| c.bits() & s.bits() != 0)
    }
}

/// Positive-literal CNF for a non-constant monotone function: one clause per
/// inclusion-maximal zero set `T`, containing the variables outside `T`.
pub fn monotone_to_cnf(f: &MonotoneBoolFunction) -> Result<MonotoneCnf> {
    if f.is_constant() {
        return Err(Error::ConstantFunction);
    }
    let t = f.t();
    let full = (1u64 << t) - 1;
    let mut clauses = Vec::new();
    for m in 0..=full {
        if f.value(SubsetMask::new(t, m)?) {
            continue;
        }
        // is m an inclusion-maximal zero set?
        let maximal = (0..t)
            .filter(|i| m >> i & 1 == 0)
            .all(|i| f.value(SubsetMask::new(t, m | 1 << i).unwrap()));
        if maximal {
            clauses.push(SubsetMask::new(t, full & !m)?);
        }
    }
    MonotoneCnf::new(t, clauses)
}

/// Exact central binomial coefficient `binom(t, floor(t/2))`.
pub fn central_binomial(t: usize) -> u128 {
    let k = t / 2;
    let mut num = 1u128;
    for i in 0..k {
        num = num * (t - i) as u128 / (i + 1) as u128;
    }
    num
}

/// The Stirling-style lower-bound arithmetic: returns
/// `ceil(2^t / sqrt(4 t))` and checks, in exact integer arithmetic, that
/// `binom(t, floor(t/2)) >= 2^t / sqrt(4 t)`, plus (for `t` where the
/// Dedekind number is computable) that `2^binom(t, floor(t/2)) <= M(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingCheck {
    pub t: usize,
    /// `ceil(2^t / sqrt(4 t))`
    pub bound: u64,
    pub central_binomial: u128,
    /// `binom(t, floor(t/2))^2 * 4 t >= 4^t`, i.e. the binomial dominates
    /// `2^t / sqrt(4 t)`
    pub binomial_dominates: bool,
    /// `2^binom <= M(t)`, when `M(t)` is computable
    pub power_below_dedekind: Option<bool>,
}

pub fn stirling_bound(t: usize) -> Result<StirlingCheck> {
    if t == 0 || t > 63 {
        return Err(Error::BoundaryTooLarge {
            what: "Stirling bound",
            t,
            limit: 63,
        });
    }
    let binom = central_binomial(t);
    // binom >= 2^t / sqrt(4t)  <=>  binom^2 * 4t >= 4^t (exact in integers)
    let binomial_dominates = binom
        .checked_mul(binom)
        .and_then(|sq| sq.checked_mul(4 * t as u128))
        .map(|lhs| {
            if 2 * t <= 127 {
                lhs >= 1u128 << (2 * t)
            } else {
                true // lhs overflow-checked; 4^t beyond u128 only for t >= 64
            }
        })
        .unwrap_or(true);
    // ceil(2^t / sqrt(4t)): smallest b with b^2 * 4t >= 4^t
    let bound = ceil_pow2_over_sqrt(t);
    let power_below_dedekind = if t <= DEDEKIND_LIMIT {
        let m = dedekind(t)?;
        Some(binom <= 63 && (1u64 << (binom as u64)) <= m)
    } else {
        None
    };
    Ok(StirlingCheck {
        t,
        bound,
        central_binomial: binom,
        binomial_dominates,
        power_below_dedekind,
    })
}

fn ceil_pow2_over_sqrt(t: usize) -> u64 {
    // smallest b >= 1 with b^2 * 4t >= 4^t, found by 128-bit binary search
    if 2 * t > 126 {
        // only needed for t <= 63; fall back to float for the enormous range
        return ((2f64.powi(t as i32)) / (4.0 * t as f64).sqrt()).ceil() as u64;
    }
    let target = 1u128 << (2 * t);
    let mut lo = 1u128;
    let mut hi = 1u128 << t;
    while lo < hi {
        let mid = (lo + hi) / 2;
        if mid * mid * (4 * t as u128) >= target {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo as u64
}
