//! The Shapley value.

use alloc::vec;
use alloc::vec::Vec;

use crate::coalition::Coalition;
use crate::error::Result;
use crate::game::{check_size, Game, MAX_PLAYERS};
use crate::rational::Rational;

/// Average marginal contribution over all orderings, computed from subset weights.
pub fn shapley_value(g: &(impl Game + ?Sized)) -> Result<Vec<Rational>> {
    let n = g.players();
    check_size(n, MAX_PLAYERS)?;
    let mut factorial = vec![1i64; n + 1];
    for k in 1..=n {
        factorial[k] = factorial[k - 1] * k as i64;
    }
    // weight of a coalition of size s not containing the player
    let weight: Vec<Rational> = (0..n)
        .map(|s| Rational::new(factorial[s] * factorial[n - s - 1], factorial[n]))
        .collect();
    let table = g.worth_table();
    let mut phi = vec![Rational::zero(); n];
    for bits in 0..1u32 << n {
        let s = Coalition(bits);
        let w = &weight.get(s.len()).cloned().unwrap_or_else(Rational::zero);
        for i in Coalition::full(n).difference(s).members() {
            let gain = &table[s.with(i).index()] - &table[s.index()];
            if !gain.is_zero() {
                phi[i] += w * &gain;
            }
        }
    }
    Ok(phi)
}
