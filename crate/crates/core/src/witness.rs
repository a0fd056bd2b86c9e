//! Inverting `p1(x, y, z) = z(x(5y − 1) − y) − x` over positive integers.
//!
//! The search runs in four stages, stopping at the first hit:
//!
//! 1. `x = 1..=small_range`, solve for `(y, z)`;
//! 2. `y = 1..=small_range`, solve for `(x, z)`;
//! 3. `z = 1..=small_range`, solve for `(x, y)`;
//! 4. `x = small_range + 1 ..= xmax`, with `xmax = ⌊(√(5q + 1) + 1)/2⌋`.
//!
//! Each single-variable solve is a divisor enumeration:
//!
//! * fixed `x`: `z·((5x − 1)y − x) = q + x`
//! * fixed `y`: with `m = 5y − 1` and `W = mz − 1`, `W·(mx − y) = mq + y`
//! * fixed `z`: with `V = (5y − 1)z − 1`, `V·(5x − 1) = 5q + z + 1`
//!
//! Divisors are scanned in ascending order, which is ascending `y`, `z` and
//! `y` respectively, so the first hit is the smallest free variable.

use std::fmt;

use num_bigint::{BigInt, BigUint};

use crate::closedform::{Decomposition, MethodTag};
use crate::error::{Error, Result};
use crate::exactmath::{divisors, UnitTriple};

/// `(x, y, z)` with `p1(x, y, z) = q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct P1Witness {
    q: u64,
    x: u64,
    y: u64,
    z: u64,
}

/// `5(−x + (−y + x(−1 + 5y))z) + 1 == 5q + 1`
pub fn validate_solution(q: u64, x: u64, y: u64, z: u64) -> bool {
    let (q, x, y, z) = (
        BigInt::from(q),
        BigInt::from(x),
        BigInt::from(y),
        BigInt::from(z),
    );
    5 * (-&x + (-&y + &x * (-1 + 5 * &y)) * &z) + 1 == 5 * q + 1
}

impl P1Witness {
    /// Witness for `q = p1(x, y, z)`; fails if any argument is zero or the
    /// value does not fit a positive `u64`.
    pub fn new(x: u64, y: u64, z: u64) -> Result<Self> {
        if x == 0 || y == 0 || z == 0 {
            return Err(Error::InvalidInput(format!(
                "p1 arguments must be positive, got ({x}, {y}, {z})"
            )));
        }
        let (x1, y1, z1) = (x as i128, y as i128, z as i128);
        let q = x1
            .checked_mul(5 * y1 - 1)
            .and_then(|v| v.checked_sub(y1))
            .and_then(|a| a.checked_mul(z1))
            .and_then(|v| v.checked_sub(x1))
            .ok_or(Error::Overflow("p1(x, y, z)"))?;
        let q = u64::try_from(q)
            .ok()
            .filter(|&q| q >= 1)
            .ok_or_else(|| Error::Degenerate(format!("p1({x}, {y}, {z}) = {q} is not in 1..=u64::MAX")))?;
        Ok(Self { q, x, y, z })
    }

    /// Checks `p1(x, y, z) = q` and rebuilds the witness.
    pub fn from_parts(q: u64, x: u64, y: u64, z: u64) -> Result<Self> {
        if x == 0 || y == 0 || z == 0 || !validate_solution(q, x, y, z) {
            return Err(Error::InvalidInput(format!(
                "p1({x}, {y}, {z}) != {q}"
            )));
        }
        Ok(Self { q, x, y, z })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn x(&self) -> u64 {
        self.x
    }

    pub fn y(&self) -> u64 {
        self.y
    }

    pub fn z(&self) -> u64 {
        self.z
    }
}

impl fmt::Display for P1Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.q, self.x, self.y, self.z)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub small_range: u64,
    pub xmax_override: Option<u64>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            small_range: 3,
            xmax_override: None,
        }
    }
}

impl SearchBudget {
    /// `⌊(√a + 1)/2⌋` with `a = 5q + 1`, unless overridden.
    pub fn xmax(&self, q: u64) -> u64 {
        if let Some(x) = self.xmax_override {
            return x;
        }
        let a = 5u128 * q as u128 + 1;
        a.isqrt().div_ceil(2) as u64
    }
}

/// Which search stage produced a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    SmallX,
    SmallY,
    SmallZ,
    WideX,
}

fn checked(q: u64, x: u64, y: u64, z: u64) -> Option<P1Witness> {
    validate_solution(q, x, y, z).then_some(P1Witness { q, x, y, z })
}

/// Smallest `y` (then `z = (q + x)/((5x − 1)y − x)`) with `p1(x, y, z) = q`.
pub fn solve_fixed_x(q: u64, x: u64) -> Option<P1Witness> {
    if q == 0 || x == 0 {
        return None;
    }
    let n = q.checked_add(x)?;
    let m = 5u128 * x as u128 - 1;
    for d in divisors(n) {
        let num = d as u128 + x as u128;
        if !num.is_multiple_of(m) {
            continue;
        }
        let y = (num / m) as u64;
        if y == 0 {
            continue;
        }
        if let Some(w) = checked(q, x, y, n / d) {
            return Some(w);
        }
    }
    None
}

/// Smallest `z` (then `x`) with `p1(x, y, z) = q`.
pub fn solve_fixed_y(q: u64, y: u64) -> Option<P1Witness> {
    if q == 0 || y == 0 {
        return None;
    }
    let m = 5u128 * y as u128 - 1;
    let n = u64::try_from(m * q as u128 + y as u128).ok()?;
    for w in divisors(n) {
        let w128 = w as u128;
        if !(w128 + 1).is_multiple_of(m) {
            continue;
        }
        let z = ((w128 + 1) / m) as u64;
        let cof = (n / w) as u128 + y as u128;
        if z == 0 || !cof.is_multiple_of(m) {
            continue;
        }
        let x = (cof / m) as u64;
        if x == 0 {
            continue;
        }
        if let Some(found) = checked(q, x, y, z) {
            return Some(found);
        }
    }
    None
}

/// Smallest `y` (then `x`) with `p1(x, y, z) = q`.
pub fn solve_fixed_z(q: u64, z: u64) -> Option<P1Witness> {
    if q == 0 || z == 0 {
        return None;
    }
    let n = u64::try_from(5u128 * q as u128 + z as u128 + 1).ok()?;
    let five_z = 5u128 * z as u128;
    for v in divisors(n) {
        let num = v as u128 + z as u128 + 1;
        if !num.is_multiple_of(five_z) {
            continue;
        }
        let y = (num / five_z) as u64;
        let cof = n / v + 1;
        if y == 0 || cof % 5 != 0 {
            continue;
        }
        let x = cof / 5;
        if x == 0 {
            continue;
        }
        if let Some(found) = checked(q, x, y, z) {
            return Some(found);
        }
    }
    None
}

/// Runs the staged search and reports which stage hit.
pub fn find_witness(q: u64, budget: &SearchBudget) -> Option<(Stage, P1Witness)> {
    if q == 0 {
        return None;
    }
    let small = budget.small_range;
    (1..=small)
        .find_map(|x| solve_fixed_x(q, x).map(|w| (Stage::SmallX, w)))
        .or_else(|| (1..=small).find_map(|y| solve_fixed_y(q, y).map(|w| (Stage::SmallY, w))))
        .or_else(|| (1..=small).find_map(|z| solve_fixed_z(q, z).map(|w| (Stage::SmallZ, w))))
        .or_else(|| {
            (small.saturating_add(1)..=budget.xmax(q))
                .find_map(|x| solve_fixed_x(q, x).map(|w| (Stage::WideX, w)))
        })
}

/// First witness in stage order, or [`Error::NotFound`], a candidate
/// counterexample to `252ℕ* ⊆ p1(ℕ*³)` when `252 | q`.
pub fn invert_p1(q: u64, budget: &SearchBudget) -> Result<P1Witness> {
    if q == 0 {
        return Err(Error::InvalidInput("q must be >= 1".into()));
    }
    find_witness(q, budget)
        .map(|(_, w)| w)
        .ok_or(Error::NotFound { q })
}

/// `5/(5q + 1)` from a witness. With `A = x(5y − 1) − y` and
/// `B = (5y − 1)z − 1` the denominators are
/// `(A·B·(5xB − 5yz + 1), z·A·B, z·A)`.
pub fn expand_p1(w: &P1Witness) -> Result<Decomposition> {
    let a = w
        .q
        .checked_mul(5)
        .and_then(|v| v.checked_add(1))
        .ok_or(Error::Overflow("5q + 1"))?;
    let (x, y, z) = (BigInt::from(w.x), BigInt::from(w.y), BigInt::from(w.z));
    let big_a = &x * (5 * &y - 1) - &y;
    let big_b = (5 * &y - 1) * &z - 1;
    let tail = 5 * &x * &big_b - 5 * &y * &z + 1;
    let to_pos = |v: BigInt, what: &str| -> Result<BigUint> {
        v.to_biguint()
            .filter(|u| u.bits() > 0)
            .ok_or_else(|| Error::Degenerate(format!("{what} is not positive for witness {w}")))
    };
    let b = to_pos(&big_a * &big_b * tail, "b")?;
    let c = to_pos(&z * &big_a * &big_b, "c")?;
    let d = to_pos(&z * &big_a, "d")?;
    Decomposition::new(5, a, UnitTriple::new(b, c, d)?, MethodTag::P1Search, Some(*w))
}
