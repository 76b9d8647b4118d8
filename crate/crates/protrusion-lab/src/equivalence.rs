//! Representative functions and the equivalence test for boundaried graphs.
//!
//! The normalized boundary function is a complete invariant: two graphs are
//! equivalent exactly when their normalized boundary functions agree, and
//! the achievable normalized functions are precisely the `t`-representative
//! functions (zero on the empty set, monotone, increasing by at most one per
//! added label). This module implements the function side of that story.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BoundariedGraph, SubsetMask};
use crate::monotone::MonotoneBoolFunction;
use crate::oracle::{boundary_function, normalize, BoundaryFunction};

/// Largest boundary size for exhaustive representative-function enumeration.
pub const ENUMERATION_LIMIT: usize = 4;

/// A function from boundary subsets to naturals satisfying the three
/// representative-function properties.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RepresentativeFunction {
    t: usize,
    values: Vec<u32>,
}

impl RepresentativeFunction {
    pub fn new(t: usize, values: Vec<u32>) -> Result<Self> {
        if t == 0 || values.len() != 1 << t {
            return Err(Error::NotRepresentative(format!(
                "expected 2^{t} values, got {}",
                values.len()
            )));
        }
        if let Err(reason) = check_representative(t, &values) {
            return Err(Error::NotRepresentative(reason));
        }
        Ok(RepresentativeFunction { t, values })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn value(&self, s: SubsetMask) -> u32 {
        self.values[s.bits() as usize]
    }

    pub fn as_boundary_function(&self) -> BoundaryFunction {
        BoundaryFunction::new(self.t, self.values.clone()).expect("valid by construction")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RepresentativeFunction = serde_json::from_str(text)?;
        RepresentativeFunction::new(raw.t, raw.values)
    }
}

fn check_representative(t: usize, values: &[u32]) -> std::result::Result<(), String> {
    if values[0] != 0 {
        return Err(format!("value {} on the empty set", values[0]));
    }
    for m in 1..1u64 << t {
        let mut min_sub = u32::MAX;
        for i in 0..t {
            if m >> i & 1 == 1 {
                let sub = values[(m & !(1 << i)) as usize];
                if sub > values[m as usize] {
                    return Err(format!(
                        "monotonicity violated between masks {} and {m}",
                        m & !(1 << i)
                    ));
                }
                min_sub = min_sub.min(sub);
            }
        }
        if values[m as usize] > 1 + min_sub {
            return Err(format!("bounded increase violated at mask {m}"));
        }
    }
    Ok(())
}

/// True iff the boundary function satisfies all three representative
/// properties.
pub fn is_representative(f: &BoundaryFunction) -> bool {
    check_representative(f.t(), f.values()).is_ok()
}

/// Outcome of the equivalence test: either the transposition constant, or a
/// witnessing boundary subset on which the normalized functions differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equivalence {
    Equivalent { delta: i64 },
    Nonequivalent { witness: SubsetMask },
}

/// Decide equivalence of two boundaried graphs by comparing normalized
/// boundary functions pointwise. Returns the transposition constant
/// (optimum shift) on success, or the lexicographically smallest differing
/// subset on failure.
pub fn equivalent(g: &BoundariedGraph, h: &BoundariedGraph) -> Result<Equivalence> {
    if g.t() != h.t() {
        return Err(Error::BoundaryMismatch {
            left: g.t(),
            right: h.t(),
        });
    }
    let fg = boundary_function(g)?;
    let fh = boundary_function(h)?;
    let ng = normalize(&fg)?;
    let nh = normalize(&fh)?;
    for (mask, (a, b)) in ng.values().iter().zip(nh.values()).enumerate() {
        if a != b {
            return Ok(Equivalence::Nonequivalent {
                witness: SubsetMask::new(g.t(), mask as u64)?,
            });
        }
    }
    Ok(Equivalence::Equivalent {
        delta: fg.values()[0] as i64 - fh.values()[0] as i64,
    })
}

/// The 0/1 table `f'(S) = f(S) - min over v in S of f(S - v)`, which pins
/// down a representative function completely.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedFunction {
    t: usize,
    bits: Vec<u8>,
}

impl DerivedFunction {
    pub fn new(t: usize, bits: Vec<u8>) -> Result<Self> {
        if t == 0 || bits.len() != 1 << t || bits[0] != 0 || bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidFunction(
                "derived function needs 2^t bits in {0,1} with bit 0 at the empty set".into(),
            ));
        }
        Ok(DerivedFunction { t, bits })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }
}

pub fn encode_derived(f: &RepresentativeFunction) -> DerivedFunction {
    let t = f.t();
    let mut bits = vec![0u8; 1 << t];
    for m in 1..1u64 << t {
        let mut min_sub = u32::MAX;
        for i in 0..t {
            if m >> i & 1 == 1 {
                min_sub = min_sub.min(f.values()[(m & !(1 << i)) as usize]);
            }
        }
        bits[m as usize] = (f.values()[m as usize] - min_sub) as u8;
    }
    DerivedFunction { t, bits }
}

/// Recursive inverse of [`encode_derived`]: `f*(S) = d(S) + min over v in S
/// of f*(S - v)`, `f*(empty) = 0`. Round-trips every representative
/// function; arbitrary bit tables may decode to a non-representative result,
/// so the output is a plain boundary function.
pub fn decode_derived(d: &DerivedFunction) -> BoundaryFunction {
    let t = d.t();
    let mut values = vec![0u32; 1 << t];
    for m in 1..1u64 << t {
        let mut min_sub = u32::MAX;
        for i in 0..t {
            if m >> i & 1 == 1 {
                min_sub = min_sub.min(values[(m & !(1 << i)) as usize]);
            }
        }
        values[m as usize] = d.bits[m as usize] as u32 + min_sub;
    }
    BoundaryFunction::new(t, values).expect("decode always yields a full table")
}

/// Complete, duplicate-free enumeration of all `t`-representative functions
/// in lexicographic order of their value vectors.
pub fn enumerate_representative_functions(t: usize) -> Result<Vec<RepresentativeFunction>> {
    if t == 0 || t > ENUMERATION_LIMIT {
        return Err(Error::BoundaryTooLarge {
            what: "representative function enumeration",
            t,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut values = vec![0u32; 1 << t];
    let mut out = Vec::new();
    enumerate_rec(t, 1, &mut values, &mut out);
    out.sort_by(|a, b| a.values.cmp(&b.values));
    Ok(out)
}

fn enumerate_rec(t: usize, m: u64, values: &mut Vec<u32>, out: &mut Vec<RepresentativeFunction>) {
    if m == 1 << t {
        out.push(RepresentativeFunction {
            t,
            values: values.clone(),
        });
        return;
    }
    let mut lo = 0u32;
    let mut hi = u32::MAX;
    for i in 0..t {
        if m >> i & 1 == 1 {
            let sub = values[(m & !(1 << i)) as usize];
            lo = lo.max(sub);
            hi = hi.min(sub + 1);
        }
    }
    for v in lo..=hi {
        values[m as usize] = v;
        enumerate_rec(t, m + 1, values, out);
    }
    values[m as usize] = 0;
}

/// Reinterpret a monotone Boolean function that is not constantly one as a
/// representative function (its 0/1 outputs already satisfy all three
/// properties).
pub fn monotone_to_representative(f: &MonotoneBoolFunction) -> Result<RepresentativeFunction> {
    if f.is_constant_one() {
        return Err(Error::NotRepresentative(
            "the constant-1 function violates the zero-on-empty-set property".into(),
        ));
    }
    let values: Vec<u32> = f.outputs().iter().map(|&b| b as u32).collect();
    RepresentativeFunction::new(f.t(), values)
}
