//! Closed-form decompositions of `r/a` by residue class.
//!
//! For `r = 5` the dispatch is fixed:
//!
//! 1. `a mod 5 ∈ {0, 2, 3, 4}`: the minimal-denominator forms, `k = ⌊a/5⌋`.
//! 2. `a = 5q + 1`, `q mod 12 ≠ 0`: one `p1` family (`C11`–`C15`) or one
//!    `c ∈ {2, 3}` family (`C21`–`C26`).
//! 3. `q = 12u`, `u mod 7 ≠ 0`: `U7_1`–`U7_6`.
//! 4. `u = 7v`, `v mod 3 ≠ 0`: `V3_1`, `V3_2`.
//! 5. `q ≡ 0 (mod 252)`: invert `p1` and expand the witness (`P1_SEARCH`).
//!
//! Formulas are written in their factored form. The family parameter `x`
//! starts at 0, so the smallest member of each class is covered too; every
//! triple is verified exactly before it is returned.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::exactmath::{verify_triple, UnitTriple};
use crate::witness::{expand_p1, invert_p1, P1Witness, SearchBudget};

macro_rules! method_tags {
    ($($variant:ident => $label:literal),* $(,)?) => {
        /// Which formula produced a decomposition.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum MethodTag {
            $($variant),*
        }

        impl MethodTag {
            pub const ALL: &'static [MethodTag] = &[$(MethodTag::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(MethodTag::$variant => $label),*
                }
            }
        }

        impl FromStr for MethodTag {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($label => Ok(MethodTag::$variant),)*
                    _ => Err(Error::InvalidInput(format!("unknown method tag {s:?}"))),
                }
            }
        }
    };
}

method_tags! {
    R4Mod0 => "R4_MOD0",
    R4Mod2 => "R4_MOD2",
    R4Mod3 => "R4_MOD3",
    R5Mod0 => "R5_MOD0",
    R5Mod2Even => "R5_MOD2_EVEN",
    R5Mod2Odd => "R5_MOD2_ODD",
    R5Mod3 => "R5_MOD3",
    R5Mod4 => "R5_MOD4",
    R6Mod0 => "R6_MOD0",
    R6Mod2 => "R6_MOD2",
    R6Mod3 => "R6_MOD3",
    R6Mod4 => "R6_MOD4",
    R6Mod5 => "R6_MOD5",
    C11 => "C11",
    C12 => "C12",
    C13 => "C13",
    C14 => "C14",
    C15 => "C15",
    C21 => "C21",
    C22 => "C22",
    C23 => "C23",
    C24 => "C24",
    C25 => "C25",
    C26 => "C26",
    U7_1 => "U7_1",
    U7_2 => "U7_2",
    U7_3 => "U7_3",
    U7_4 => "U7_4",
    U7_5 => "U7_5",
    U7_6 => "U7_6",
    V3_1 => "V3_1",
    V3_2 => "V3_2",
    P1Search => "P1_SEARCH",
    P2Family => "P2_FAMILY",
    P3Family => "P3_FAMILY",
}

impl fmt::Display for MethodTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A verified `r/a = 1/b + 1/c + 1/d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    r: u64,
    a: u64,
    triple: UnitTriple,
    method: MethodTag,
    witness: Option<P1Witness>,
}

impl Decomposition {
    /// Fails unless the triple satisfies `r/a` exactly and a witness is
    /// attached exactly when `method` is `P1_SEARCH`.
    pub fn new(
        r: u64,
        a: u64,
        triple: UnitTriple,
        method: MethodTag,
        witness: Option<P1Witness>,
    ) -> Result<Self> {
        if (method == MethodTag::P1Search) != witness.is_some() {
            return Err(Error::InvalidInput(format!(
                "witness must be present iff method is P1_SEARCH (method {method})"
            )));
        }
        if !verify_triple(r, a, &triple) {
            return Err(Error::NotAnIdentity {
                r,
                a,
                b: triple.b().to_string(),
                c: triple.c().to_string(),
                d: triple.d().to_string(),
            });
        }
        Ok(Self {
            r,
            a,
            triple,
            method,
            witness,
        })
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn triple(&self) -> &UnitTriple {
        &self.triple
    }

    pub fn method(&self) -> MethodTag {
        self.method
    }

    pub fn witness(&self) -> Option<&P1Witness> {
        self.witness.as_ref()
    }
}

fn n(v: u64) -> BigUint {
    BigUint::from(v)
}

/// `c0 + c1·x`
fn lin(c0: u64, c1: u64, x: &BigUint) -> BigUint {
    n(c0) + n(c1) * x
}

/// `c0 + c1·x + c2·x²`
fn quad(c0: u64, c1: u64, c2: u64, x: &BigUint) -> BigUint {
    n(c0) + n(c1) * x + n(c2) * x * x
}

fn closed(r: u64, a: u64, b: BigUint, c: BigUint, d: BigUint, tag: MethodTag) -> Result<Decomposition> {
    Decomposition::new(r, a, UnitTriple::new(b, c, d)?, tag, None)
}

fn check_a(a: u64) -> Result<()> {
    if a < 2 {
        return Err(Error::InvalidInput(format!("a must be >= 2, got {a}")));
    }
    Ok(())
}

/// `(k+1)², k(k+1)², k+1`: the `1/k` split shared by `r/(r·k)` for every `r`.
fn unit_split(k: &BigUint) -> (BigUint, BigUint, BigUint) {
    let k1 = k + 1u32;
    let sq = &k1 * &k1;
    (sq.clone(), k * &sq, k1)
}

/// `m(k+1)², m(k+1)²·tail, k+1`, the shape shared by `4/(4k+2)`,
/// `4/(4k+3)`, `6/(6k+3)`, `6/(6k+4)` and `6/(6k+5)`.
fn scaled_split(m: u64, k: &BigUint, tail: BigUint) -> (BigUint, BigUint, BigUint) {
    let k1 = k + 1u32;
    let head = n(m) * &k1 * &k1;
    let second = &head * tail;
    (head, second, k1)
}

/// `4/a` for `a mod 4 ∈ {0, 2, 3}`.
pub fn decompose_r4(a: u64) -> Result<Decomposition> {
    check_a(a)?;
    let k = n(a / 4);
    let (b, c, d, tag) = match a % 4 {
        0 => {
            let (b, c, d) = unit_split(&k);
            (b, c, d, MethodTag::R4Mod0)
        }
        2 => {
            let (b, c, d) = scaled_split(2, &k, lin(1, 2, &k));
            (b, c, d, MethodTag::R4Mod2)
        }
        3 => {
            let (b, c, d) = scaled_split(4, &k, lin(3, 4, &k));
            (b, c, d, MethodTag::R4Mod3)
        }
        _ => return Err(Error::UnsupportedResidue { r: 4, a }),
    };
    closed(4, a, b, c, d, tag)
}

/// `6/a` for `a mod 6 ∈ {0, 2, 3, 4, 5}`.
///
/// For `a = 6k` the three-term split of `1/k` is emitted rather than `1/k`
/// itself.
pub fn decompose_r6(a: u64) -> Result<Decomposition> {
    check_a(a)?;
    let kk = a / 6;
    let k = n(kk);
    let (b, c, d, tag) = match a % 6 {
        0 => {
            let (b, c, d) = unit_split(&k);
            (b, c, d, MethodTag::R6Mod0)
        }
        2 => {
            let v = quad(1, 4, 3, &k);
            (v.clone(), v, &k + 1u32, MethodTag::R6Mod2)
        }
        3 => {
            let (b, c, d) = scaled_split(2, &k, lin(1, 2, &k));
            (b, c, d, MethodTag::R6Mod3)
        }
        4 => {
            let (b, c, d) = scaled_split(3, &k, lin(2, 3, &k));
            (b, c, d, MethodTag::R6Mod4)
        }
        5 => {
            let (b, c, d) = scaled_split(6, &k, lin(5, 6, &k));
            (b, c, d, MethodTag::R6Mod5)
        }
        _ => return Err(Error::UnsupportedResidue { r: 6, a }),
    };
    closed(6, a, b, c, d, tag)
}

fn decompose5_not_one(a: u64) -> Result<Decomposition> {
    let kk = a / 5;
    let k = n(kk);
    let (b, c, d, tag) = match a % 5 {
        0 => {
            let (b, c, d) = unit_split(&k);
            (b, c, d, MethodTag::R5Mod0)
        }
        2 if kk.is_multiple_of(2) => {
            let q = n(kk / 2);
            (
                quad(1, 7, 10, &q),
                quad(2, 14, 20, &q),
                lin(1, 2, &q),
                MethodTag::R5Mod2Even,
            )
        }
        2 => {
            let q = n(kk / 2);
            (
                quad(7, 17, 10, &q),
                quad(14, 34, 20, &q),
                lin(2, 2, &q),
                MethodTag::R5Mod2Odd,
            )
        }
        3 => {
            let v = quad(3, 8, 5, &k);
            (v.clone(), v, &k + 1u32, MethodTag::R5Mod3)
        }
        4 => {
            let k1 = &k + 1u32;
            let c = n(5) * &k1 * &k1;
            (&c * lin(4, 5, &k), c, k1, MethodTag::R5Mod4)
        }
        _ => unreachable!("a ≡ 1 (mod 5) handled by caller"),
    };
    closed(5, a, b, c, d, tag)
}

/// `q mod 12 ≠ 0`; `x = ⌊q/12⌋` is the family parameter.
fn decompose5_mod12(a: u64, q: u64) -> Result<Decomposition> {
    let x = n(q / 12);
    let x = &x;
    use MethodTag::*;
    let (b, c, d, tag) = match q % 12 {
        2 => (
            n(3) * lin(1, 4, x) * lin(3, 16, x),
            n(3) * lin(3, 16, x) * lin(11, 60, x),
            n(3) * lin(1, 4, x),
            C11,
        ),
        5 => (
            n(6) * lin(1, 2, x) * lin(7, 16, x),
            n(6) * lin(7, 16, x) * lin(13, 30, x),
            n(3) * lin(2, 4, x),
            C12,
        ),
        8 => (
            n(3) * lin(3, 4, x) * lin(11, 16, x),
            n(3) * lin(11, 16, x) * lin(41, 60, x),
            n(3) * lin(3, 4, x),
            C13,
        ),
        6 => (
            lin(7, 12, x) * lin(8, 15, x),
            lin(7, 12, x) * lin(8, 15, x) * lin(31, 60, x),
            lin(7, 12, x),
            C14,
        ),
        10 => (
            lin(11, 12, x) * lin(13, 15, x),
            n(3) * lin(11, 12, x) * lin(13, 15, x) * lin(17, 20, x),
            lin(11, 12, x),
            C15,
        ),
        1 => (lin(6, 60, x), lin(3, 30, x), lin(3, 30, x), C21),
        9 => (lin(46, 60, x), lin(23, 30, x), lin(23, 30, x), C22),
        3 => (lin(16, 60, x), lin(8, 30, x), lin(8, 30, x), C23),
        11 => (lin(56, 60, x), lin(28, 30, x), lin(28, 30, x), C24),
        4 => (n(6) * lin(7, 20, x), lin(14, 40, x), lin(7, 20, x), C25),
        7 => (
            n(8) * lin(3, 5, x),
            n(24) * lin(3, 5, x),
            n(4) * lin(3, 5, x),
            C26,
        ),
        _ => unreachable!("q ≡ 0 (mod 12) handled by caller"),
    };
    closed(5, a, b, c, d, tag)
}

/// `q = 12u`, `u mod 7 ≠ 0`; `x = ⌊u/7⌋`.
fn decompose5_mod7(a: u64, u: u64) -> Result<Decomposition> {
    let x = n(u / 7);
    let x = &x;
    use MethodTag::*;
    let (b, c, d, tag) = match u % 7 {
        1 => (
            lin(14, 84, x),
            n(7) * lin(7, 48, x) * lin(61, 420, x),
            n(14) * lin(1, 6, x) * lin(7, 48, x),
            U7_1,
        ),
        // p4(x, 1) = 84x + 24 expanded at y = 1
        2 => (
            n(2) * lin(1, 3, x) * lin(121, 420, x),
            n(6) * lin(1, 3, x) * lin(9, 28, x) * lin(121, 420, x),
            n(3) * lin(9, 28, x),
            U7_2,
        ),
        3 => (
            lin(39, 84, x),
            n(3) * lin(13, 28, x) * lin(13, 30, x) * lin(181, 420, x),
            n(3) * lin(13, 28, x) * lin(13, 30, x),
            U7_3,
        ),
        4 => (
            quad(3038, 10353, 8820, x),
            lin(7, 12, x) * lin(62, 105, x) * lin(241, 420, x),
            lin(49, 84, x),
            U7_4,
        ),
        5 => (
            quad(1368, 3714, 2520, x),
            n(14) * lin(3, 4, x) * lin(43, 60, x) * lin(76, 105, x),
            lin(63, 84, x),
            U7_5,
        ),
        6 => (
            quad(1950, 4434, 2520, x),
            n(2) * lin(13, 15, x) * lin(25, 28, x) * lin(361, 420, x),
            lin(75, 84, x),
            U7_6,
        ),
        _ => unreachable!("u ≡ 0 (mod 7) handled by caller"),
    };
    closed(5, a, b, c, d, tag)
}

/// `q = 84v`, `v mod 3 ≠ 0`; `x = ⌊v/3⌋`.
fn decompose5_mod3(a: u64, v: u64) -> Result<Decomposition> {
    let x = n(v / 3);
    let x = &x;
    let (b, c, d, tag) = match v % 3 {
        1 => (
            lin(43, 126, x) * lin(47, 140, x) * lin(421, 1260, x),
            quad(4042, 23884, 35280, x),
            lin(86, 252, x),
            MethodTag::V3_1,
        ),
        2 => (
            lin(19, 28, x) * lin(841, 1260, x),
            n(2) * lin(19, 28, x) * lin(85, 126, x) * lin(841, 1260, x),
            lin(170, 252, x),
            MethodTag::V3_2,
        ),
        _ => unreachable!("v ≡ 0 (mod 3) handled by caller"),
    };
    closed(5, a, b, c, d, tag)
}

/// The dispatch level that handles `a`, without computing anything.
///
/// Exactly one tag is returned for every `a >= 2`; `P1_SEARCH` marks the
/// residual class `q ≡ 0 (mod 252)`.
pub fn dispatch5(a: u64) -> Result<MethodTag> {
    check_a(a)?;
    use MethodTag::*;
    Ok(match a % 5 {
        0 => R5Mod0,
        2 if (a / 5).is_multiple_of(2) => R5Mod2Even,
        2 => R5Mod2Odd,
        3 => R5Mod3,
        4 => R5Mod4,
        _ => {
            let q = a / 5;
            match q % 12 {
                2 => C11,
                5 => C12,
                8 => C13,
                6 => C14,
                10 => C15,
                1 => C21,
                9 => C22,
                3 => C23,
                11 => C24,
                4 => C25,
                7 => C26,
                _ => {
                    let u = q / 12;
                    match u % 7 {
                        1 => U7_1,
                        2 => U7_2,
                        3 => U7_3,
                        4 => U7_4,
                        5 => U7_5,
                        6 => U7_6,
                        _ => match (u / 7) % 3 {
                            1 => V3_1,
                            2 => V3_2,
                            _ => P1Search,
                        },
                    }
                }
            }
        }
    })
}

/// `5/a` for any `a >= 2`, searching for a `p1` witness only when
/// `a = 5q + 1` with `q ≡ 0 (mod 252)`.
pub fn decompose5(a: u64) -> Result<Decomposition> {
    decompose5_with_budget(a, &SearchBudget::default())
}

pub fn decompose5_with_budget(a: u64, budget: &SearchBudget) -> Result<Decomposition> {
    check_a(a)?;
    if a % 5 != 1 {
        return decompose5_not_one(a);
    }
    let q = a / 5;
    if !q.is_multiple_of(12) {
        return decompose5_mod12(a, q);
    }
    let u = q / 12;
    if !u.is_multiple_of(7) {
        return decompose5_mod7(a, u);
    }
    let v = u / 7;
    if !v.is_multiple_of(3) {
        return decompose5_mod3(a, v);
    }
    let w = invert_p1(q, budget)?;
    expand_p1(&w)
}

/// `r/a` for `r ∈ {4, 5, 6}`.
pub fn decompose(r: u64, a: u64) -> Result<Decomposition> {
    match r {
        4 => decompose_r4(a),
        5 => decompose5(a),
        6 => decompose_r6(a),
        _ => Err(Error::InvalidInput(format!("r must be 4, 5 or 6, got {r}"))),
    }
}

/// The six polynomials whose values index the `5q + 1` families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Poly {
    /// `z(x(5y − 1) − y) − x`
    P1,
    /// `x(5y − 3) − 2y + 1`
    P2,
    /// `x(10y − 7) − 6y + 4`
    P3,
    /// `−97 + 121y + 84x(5y − 4)`
    P4,
    /// `252x(5y − 4) + 421y − 337`
    P5,
    /// `252x(5y − 4) + 841y − 673`
    P6,
}

impl Poly {
    pub fn from_index(i: u8) -> Result<Self> {
        Ok(match i {
            1 => Poly::P1,
            2 => Poly::P2,
            3 => Poly::P3,
            4 => Poly::P4,
            5 => Poly::P5,
            6 => Poly::P6,
            _ => return Err(Error::InvalidInput(format!("polynomial index {i} not in 1..=6"))),
        })
    }

    pub fn arity(self) -> usize {
        if self == Poly::P1 {
            3
        } else {
            2
        }
    }

    fn name(self) -> &'static str {
        match self {
            Poly::P1 => "p1",
            Poly::P2 => "p2",
            Poly::P3 => "p3",
            Poly::P4 => "p4",
            Poly::P5 => "p5",
            Poly::P6 => "p6",
        }
    }

    fn check_args(self, args: &[u64]) -> Result<()> {
        if args.len() != self.arity() {
            return Err(Error::Arity {
                poly: self.name(),
                expected: self.arity(),
                got: args.len(),
            });
        }
        if args.contains(&0) {
            return Err(Error::InvalidInput(format!(
                "{} arguments must be positive, got {args:?}",
                self.name()
            )));
        }
        Ok(())
    }
}

/// Exact value of the polynomial at positive arguments; may be `<= 0`.
pub fn eval_p(poly: Poly, args: &[u64]) -> Result<BigInt> {
    poly.check_args(args)?;
    let v: Vec<BigInt> = args.iter().map(|&a| BigInt::from(a)).collect();
    let (x, y) = (&v[0], &v[1]);
    Ok(match poly {
        Poly::P1 => {
            let z = &v[2];
            z * (x * (5 * y - 1) - y) - x
        }
        Poly::P2 => x * (5 * y - 3) - 2 * y + 1,
        Poly::P3 => x * (10 * y - 7) - 6 * y + 4,
        Poly::P4 => -97 + 121 * y + 84 * x * (5 * y - 4),
        Poly::P5 => 252 * x * (5 * y - 4) + 421 * y - 337,
        Poly::P6 => 252 * x * (5 * y - 4) + 841 * y - 673,
    })
}

fn to_u64(v: &BigInt, what: &str) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::Degenerate(format!("{what} = {v} is not a positive u64")))
}

fn positive(v: BigInt, what: &str) -> Result<BigUint> {
    v.to_biguint()
        .filter(|u| *u > BigUint::from(0u32))
        .ok_or_else(|| Error::Degenerate(format!("{what} must be positive")))
}

/// Decomposition of `5/(5·p_i(args) + 1)` read off the expansion of
/// polynomial family `i ∈ {1, 2, 3}`.
pub fn expand_family(poly: Poly, args: &[u64]) -> Result<Decomposition> {
    poly.check_args(args)?;
    match poly {
        Poly::P1 => {
            let w = P1Witness::new(args[0], args[1], args[2])?;
            expand_p1(&w)
        }
        Poly::P2 | Poly::P3 => {
            let q = eval_p(poly, args)?;
            if q < BigInt::from(1) {
                return Err(Error::Degenerate(format!("{}{args:?} = {q} < 1", poly.name())));
            }
            let a = to_u64(&(5 * &q + 1), "5q + 1")?;
            let x = BigInt::from(args[0]);
            let y = BigInt::from(args[1]);
            let (b, c, d, tag) = if poly == Poly::P2 {
                // 5/((5x − 2)(5y − 3))
                let pair: BigInt = 10 * &x * &y - 5 * &x - 4 * &y + 2;
                (
                    (5 * &x - 2) * (10 * &y * &y - 11 * &y + 3),
                    pair.clone(),
                    pair,
                    MethodTag::P2Family,
                )
            } else {
                // 5/((5x − 3)(10y − 7))
                (
                    2 * (5 * &x - 3) * (30 * &y * &y - 41 * &y + 14),
                    30 * &x * &y - 20 * &x - 18 * &y + 12,
                    15 * &x * &y - 10 * &x - 9 * &y + 6,
                    MethodTag::P3Family,
                )
            };
            closed(
                5,
                a,
                positive(b, "b")?,
                positive(c, "c")?,
                positive(d, "d")?,
                tag,
            )
        }
        _ => Err(Error::InvalidInput(format!(
            "expand_family is defined for p1, p2, p3; got {}",
            poly.name()
        ))),
    }
}
