//! Exact rational evaluation of the grid-size and distance bounds.
//!
//! π² enters every bound. It is replaced by a ten-digit rational: the upper
//! value makes a passing comparison a true pass, the lower one is used to
//! tell precision-marginal failures from real ones.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub const PI_SQ_DEN: u64 = 10_000_000_000;
/// 9.8696044011 ≥ π².
pub const PI_SQ_UPPER_NUM: u64 = 98_696_044_011;
/// 9.8696044010 ≤ π².
pub const PI_SQ_LOWER_NUM: u64 = 98_696_044_010;

/// Which side of π² to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PiSq {
    Upper,
    Lower,
}

impl PiSq {
    pub fn value(self) -> BigRational {
        let num = match self {
            PiSq::Upper => PI_SQ_UPPER_NUM,
            PiSq::Lower => PI_SQ_LOWER_NUM,
        };
        BigRational::new(BigInt::from(num), BigInt::from(PI_SQ_DEN))
    }
}

fn int(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// ceil(2π²/3 · k) with the upper π²: the largest component any of the first
/// `k` primitive triples may have.
pub fn triple_component_bound(k: u64) -> u64 {
    let num = 2 * PI_SQ_UPPER_NUM as u128 * k as u128;
    let den = 3 * PI_SQ_DEN as u128;
    num.div_ceil(den) as u64
}

/// ceil(π/√3 · √k) with the upper π²: the largest generator parameter among
/// the first `k` primitive triples.
pub fn generator_param_bound(k: u64) -> u64 {
    // Smallest c with 3·DEN·c² ≥ NUM·k.
    let target = PI_SQ_UPPER_NUM as u128 * k as u128;
    let den = 3 * PI_SQ_DEN as u128;
    let mut c = crate::geom::isqrt_u128(target / den);
    while den * c * c < target {
        c += 1;
    }
    c as u64
}

/// 2π²/3 · k, the length bound for any edge drawn with one of the first `k`
/// triples.
pub fn edge_scale(k: u64, pi: PiSq) -> BigRational {
    pi.value() * int(2) / int(3) * int(k)
}

/// 2·(π²/3 · k)², the distance bound for a canonical triangle.
pub fn triangle_term(k: u64, pi: PiSq) -> BigRational {
    let half = pi.value() / int(3) * int(k);
    &half * &half * int(2)
}

/// Side bound for stars on `n` vertices: (π²(n+2)+3)/3.
pub fn star_grid(n: u64, pi: PiSq) -> BigRational {
    (pi.value() * int(n + 2) + int(3)) / int(3)
}

/// Side bound for trees: 2π²/3 · t · d.
pub fn tree_grid(leaves: u64, depth: u64, pi: PiSq) -> BigRational {
    edge_scale(leaves, pi) * int(depth)
}

/// Distance bound of a subcactus: (d + O)·2π²/3·N + Δ·2(π²/3·N)², with `N`
/// the size of the whole triple budget.
pub fn cactus_distance(diameter: u64, cycles: u64, triangles: u64, budget: u64, pi: PiSq) -> BigRational {
    edge_scale(budget, pi) * int(diameter + cycles) + triangle_term(budget, pi) * int(triangles)
}

/// Side bound for cacti: the distance bound of the whole cactus with budget t + 2o.
pub fn cactus_grid(diameter: u64, leaves: u64, cycles: u64, triangles: u64, pi: PiSq) -> BigRational {
    cactus_distance(diameter, cycles, triangles, leaves + 2 * cycles, pi)
}

/// Distance bound from the origin of a canonically drawn cycle of length `len`.
pub fn cycle_distance(len: u64, budget: u64, pi: PiSq) -> BigRational {
    if len >= 4 {
        edge_scale(budget, pi) * int(len.div_ceil(2))
    } else {
        triangle_term(budget, pi)
    }
}

/// `√dist_sq ≤ bound`, decided without roots.
pub fn distance_within(dist_sq: u128, bound: &BigRational) -> bool {
    if bound.is_negative() {
        return false;
    }
    let lhs = BigInt::from(dist_sq) * bound.denom() * bound.denom();
    let rhs = bound.numer() * bound.numer();
    lhs <= rhs
}

pub fn length_within(len: u128, bound: &BigRational) -> bool {
    BigRational::from_integer(BigInt::from(len)) <= *bound
}

/// `dist_sq / bound²` as an exact rational; 1 when both are zero.
pub fn squared_slack(dist_sq: u128, bound: &BigRational) -> BigRational {
    if bound.is_zero() {
        return if dist_sq == 0 { BigRational::one() } else { BigRational::from_integer(BigInt::from(dist_sq)) };
    }
    BigRational::from_integer(BigInt::from(dist_sq)) / (bound * bound)
}

pub fn linear_slack(len: u128, bound: &BigRational) -> BigRational {
    if bound.is_zero() {
        return if len == 0 { BigRational::one() } else { BigRational::from_integer(BigInt::from(len)) };
    }
    BigRational::from_integer(BigInt::from(len)) / bound
}

/// Floor of a non-negative rational as `u128`, saturating.
pub fn floor_u128(r: &BigRational) -> u128 {
    if r.is_negative() {
        return 0;
    }
    let (q, _) = r.numer().div_rem(r.denom());
    q.to_u128().unwrap_or(u128::MAX)
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::INFINITY)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_square_brackets() {
        let pi2 = std::f64::consts::PI * std::f64::consts::PI;
        assert!(to_f64(&PiSq::Upper.value()) >= pi2);
        assert!(to_f64(&PiSq::Lower.value()) <= pi2);
    }

    #[test]
    fn component_bounds_at_small_indices() {
        // 2π²/3 ≈ 6.5797 and 8π²/3 ≈ 26.319.
        assert_eq!(triple_component_bound(1), 7);
        assert_eq!(triple_component_bound(4), 27);
        // π/√3 ≈ 1.8138, so √(π²/3 · 4) ≈ 3.628.
        assert_eq!(generator_param_bound(1), 2);
        assert_eq!(generator_param_bound(4), 4);
    }

    #[test]
    fn star_bound_at_thirteen() {
        // (15π² + 3)/3 ≈ 50.348
        let b = star_grid(13, PiSq::Upper);
        assert!(length_within(50, &b));
        assert!(!length_within(51, &b));
    }

    #[test]
    fn path_distance_bound() {
        // depth 2, one leaf: bound ≈ 13.159, squared ≈ 173.2.
        let b = tree_grid(1, 2, PiSq::Upper);
        assert!(distance_within(100, &b));
        assert!(distance_within(173, &b));
        assert!(!distance_within(174, &b));
    }

    #[test]
    fn triangle_bound_has_quadratic_term() {
        let b = cactus_grid(1, 0, 1, 1, PiSq::Upper);
        // 2π²/3·2·2 + 2(2π²/3)² ≈ 26.32 + 86.59
        let f = to_f64(&b);
        assert!((f - 112.90).abs() < 0.05, "{f}");
    }
}
