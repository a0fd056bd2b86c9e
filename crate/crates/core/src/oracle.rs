//! Brute-force enumeration of `r/a = 1/d' + 1/c' + 1/e` with
//! `d' <= c' <= e`, independent of the closed forms.
//!
//! `d'` runs over `⌊a/r⌋ + 1 ..= ⌊3a/r⌋` (the smallest of three unit
//! fractions summing to `r/a` is at least `r/(3a)`), `c'` over the range
//! where `1/c' < r/a − 1/d' <= 2/c'`, and `e` is solved exactly. Intended for
//! `a` up to about `10^5`.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::exactmath::{solve_d, verify_triple, UnitTriple};

/// Up to `max_results` triples (all when `None`), each sorted ascending and
/// the list in lexicographic order.
pub fn brute_force(r: u64, a: u64, max_results: Option<usize>) -> Result<Vec<UnitTriple>> {
    if r < 2 || a < 2 {
        return Err(Error::InvalidInput(format!(
            "brute_force needs r >= 2 and a >= 2, got r = {r}, a = {a}"
        )));
    }
    let limit = max_results.unwrap_or(usize::MAX);
    let mut out = Vec::new();
    if limit == 0 {
        return Ok(out);
    }
    let (r, a) = (r as u128, a as u128);
    let overflow = || Error::Overflow("brute_force bounds");

    for first in (a / r + 1)..=(3 * a / r) {
        // r/a − 1/first = rem_num / rem_den
        let rem_num = r * first - a;
        let rem_den = a.checked_mul(first).ok_or_else(overflow)?;
        let lo = first.max(rem_den / rem_num + 1);
        let hi = 2 * rem_den / rem_num;
        for second in lo..=hi {
            // e = rem_den·second / (rem_num·second − rem_den)
            let den = rem_num.checked_mul(second).ok_or_else(overflow)? - rem_den;
            let num = rem_den.checked_mul(second).ok_or_else(overflow)?;
            if num % den != 0 {
                continue;
            }
            let third = num / den;
            if third < second {
                continue;
            }
            let t = UnitTriple::new(
                BigUint::from(first),
                BigUint::from(second),
                BigUint::from(third),
            )?;
            debug_assert!(verify_triple(r as u64, a as u64, &t));
            out.push(t);
            if out.len() >= limit {
                return Ok(out);
            }
        }
    }
    Ok(out)
}

/// Like [`brute_force`] but completes each `(d', c')` pair through
/// [`solve_d`] in arbitrary precision. Much slower; used to cross-check the
/// fast path.
pub fn brute_force_bigint(r: u64, a: u64) -> Vec<UnitTriple> {
    let mut out = Vec::new();
    for first in (a / r + 1)..=(3 * a / r) {
        let rem_num = r * first - a;
        let rem_den = a * first;
        let lo = first.max(rem_den / rem_num + 1);
        let hi = 2 * rem_den / rem_num;
        for second in lo..=hi {
            let (f, s) = (BigUint::from(first), BigUint::from(second));
            if let Some(third) = solve_d(r, a, &f, &s) {
                if third >= s {
                    out.push(UnitTriple::new(f, s, third).expect("positive"));
                }
            }
        }
    }
    out
}
