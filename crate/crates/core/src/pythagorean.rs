//! Primitive Pythagorean triples: generation by Euclid's formula, the
//! generator order, the angle order and the size audit.
//!
//! Everything here is integer-exact. Slopes are compared by cross products in
//! 128-bit arithmetic.

use crate::bounds;
use crate::error::{Error, Result};
use crate::geom::Point;
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// An integer triple with `x² + y² = ell²` and all components positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PythTriple {
    pub x: u64,
    pub y: u64,
    pub ell: u64,
}

impl PythTriple {
    pub fn new(x: u64, y: u64, ell: u64) -> Result<Self> {
        let ok = x > 0
            && y > 0
            && ell > 0
            && (x as u128) * (x as u128) + (y as u128) * (y as u128) == (ell as u128) * (ell as u128);
        if ok {
            Ok(PythTriple { x, y, ell })
        } else {
            Err(Error::Format(format!("({x}, {y}, {ell}) is not a Pythagorean triple with positive components")))
        }
    }

    /// The displacement `(x, y)` as a grid vector.
    pub fn offset(&self) -> Point {
        Point::new(self.x as i64, self.y as i64)
    }

    pub fn scaled(&self, k: u64) -> PythTriple {
        PythTriple { x: self.x * k, y: self.y * k, ell: self.ell * k }
    }

    pub fn max_component(&self) -> u64 {
        self.x.max(self.y).max(self.ell)
    }
}

/// Which of the two Euclid parametrisations produced a triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// `(m² − n², 2mn, m² + n²)`
    EqOne,
    /// `(2mn, m² − n², m² + n²)`
    EqOnePrime,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::EqOne => "eq1",
            Variant::EqOnePrime => "eq1prime",
        }
    }
}

/// Euclid parameters. Ordered lexicographically by `(m, n, variant)`, which is
/// exactly the generator order of the triples they produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GeneratorParams {
    pub m: u64,
    pub n: u64,
    pub variant: Variant,
}

impl GeneratorParams {
    pub fn new(m: u64, n: u64, variant: Variant) -> Result<Self> {
        if n == 0 || m <= n {
            return Err(Error::InvalidParams { m, n });
        }
        Ok(GeneratorParams { m, n, variant })
    }
}

/// Evaluate Euclid's formula. The result is not necessarily primitive.
pub fn euclid_triple(params: GeneratorParams) -> Result<PythTriple> {
    let GeneratorParams { m, n, variant } = params;
    if n == 0 || m <= n {
        return Err(Error::InvalidParams { m, n });
    }
    let overflow = || Error::Overflow(format!("Euclid triple for m={m}, n={n}"));
    let mm = m.checked_mul(m).ok_or_else(overflow)?;
    let nn = n * n;
    let diff = mm - nn;
    let twice = m.checked_mul(n).and_then(|p| p.checked_mul(2)).ok_or_else(overflow)?;
    let ell = mm.checked_add(nn).ok_or_else(overflow)?;
    Ok(match variant {
        Variant::EqOne => PythTriple { x: diff, y: twice, ell },
        Variant::EqOnePrime => PythTriple { x: twice, y: diff, ell },
    })
}

/// `gcd(x, y, ell) = 1`. For a Pythagorean triple this is the same as `gcd(x, y) = 1`.
pub fn is_primitive(t: PythTriple) -> bool {
    t.x.gcd(&t.y) == 1
}

/// Compare the angles `atan(y/x)` of two triples exactly.
pub fn slope_compare(a: PythTriple, b: PythTriple) -> Ordering {
    let lhs = a.y as u128 * b.x as u128;
    let rhs = b.y as u128 * a.x as u128;
    lhs.cmp(&rhs)
}

/// One entry of the generator-ordered sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratedTriple {
    pub triple: PythTriple,
    pub params: GeneratorParams,
}

/// The first `k` primitive triples in generator order together with the
/// permutation that sorts them by angle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleSequence {
    entries: Vec<GeneratedTriple>,
    angle_sorted: Vec<usize>,
}

impl TripleSequence {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in generator order; index 0 is the first triple.
    pub fn entries(&self) -> &[GeneratedTriple] {
        &self.entries
    }

    /// Indices into [`entries`](Self::entries), flattest slope first.
    pub fn angle_permutation(&self) -> &[usize] {
        &self.angle_sorted
    }

    pub fn angle_sorted(&self) -> impl Iterator<Item = &GeneratedTriple> + '_ {
        self.angle_sorted.iter().map(move |&i| &self.entries[i])
    }

    /// Angle-sorted triples as a vector.
    pub fn angle_sorted_triples(&self) -> Vec<PythTriple> {
        self.angle_sorted().map(|g| g.triple).collect()
    }
}

/// Sweep `(m, n, variant)` in generator order and keep the first `k`
/// primitive outputs.
pub fn first_k_primitive(k: usize) -> TripleSequence {
    let mut entries = Vec::with_capacity(k);
    let mut m: u64 = 2;
    'sweep: while entries.len() < k {
        for n in 1..m {
            for variant in [Variant::EqOne, Variant::EqOnePrime] {
                if entries.len() == k {
                    break 'sweep;
                }
                let params = GeneratorParams { m, n, variant };
                let triple = euclid_triple(params).expect("m > n > 0 by construction");
                if is_primitive(triple) {
                    entries.push(GeneratedTriple { triple, params });
                }
            }
        }
        m += 1;
    }
    let mut angle_sorted: Vec<usize> = (0..entries.len()).collect();
    angle_sorted.sort_by(|&a, &b| slope_compare(entries[a].triple, entries[b].triple));
    TripleSequence { entries, angle_sorted }
}

/// The first `k` primitive triples ordered by strictly increasing angle.
pub fn angle_sorted_prefix(k: usize) -> Vec<PythTriple> {
    first_k_primitive(k).angle_sorted_triples()
}

/// A size-bound failure at one index of the sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeViolation {
    /// 1-based index in generator order.
    pub index: usize,
    pub entry: GeneratedTriple,
    pub component_bound: u64,
    pub param_bound: u64,
}

/// Outcome of [`size_bound_audit`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SizeAudit {
    pub checked: usize,
    pub first_violation: Option<SizeViolation>,
    /// max over k of max(x_k, y_k, ℓ_k) / (2π²/3 · k)
    pub max_component_ratio: f64,
    /// max over k of m / (π/√3 · √k)
    pub max_param_ratio: f64,
    /// min over k of m / √k, the observed constant of the lower growth bound
    pub min_param_growth: f64,
}

impl SizeAudit {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Check every index of `seq` against the triple size bounds.
pub fn size_bound_audit(seq: &TripleSequence) -> SizeAudit {
    let scale = 2.0 * std::f64::consts::PI.powi(2) / 3.0;
    let param_scale = std::f64::consts::PI / 3f64.sqrt();
    let mut audit = SizeAudit {
        checked: 0,
        first_violation: None,
        max_component_ratio: 0.0,
        max_param_ratio: 0.0,
        min_param_growth: f64::INFINITY,
    };
    for (i, entry) in seq.entries().iter().enumerate() {
        let k = (i + 1) as u64;
        let component_bound = bounds::triple_component_bound(k);
        let param_bound = bounds::generator_param_bound(k);
        let comp = entry.triple.max_component();
        let GeneratorParams { m, n, .. } = entry.params;
        if audit.first_violation.is_none() && (comp > component_bound || m > param_bound || n > param_bound) {
            audit.first_violation = Some(SizeViolation { index: i + 1, entry: *entry, component_bound, param_bound });
        }
        let kf = k as f64;
        audit.max_component_ratio = audit.max_component_ratio.max(comp as f64 / (scale * kf));
        audit.max_param_ratio = audit.max_param_ratio.max(m as f64 / (param_scale * kf.sqrt()));
        audit.min_param_growth = audit.min_param_growth.min(m as f64 / kf.sqrt());
        audit.checked += 1;
    }
    audit
}
