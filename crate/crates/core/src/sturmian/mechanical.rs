use num_integer::Integer;
use num_traits::FromPrimitive;

use crate::error::{Error, Result};
use crate::word::Word;

/// Lower mechanical word of rational slope `p/q` and intercept
/// `rho_num/rho_den`: symbol `i` is
/// `floor((i + 1) p/q + rho) - floor(i p/q + rho)`, evaluated exactly.
pub fn mechanical_word<T>(p: T, q: T, rho_num: T, rho_den: T, len: usize) -> Result<Word>
where
    T: Integer + Clone + FromPrimitive + std::fmt::Display,
{
    if q.is_zero() || rho_den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let zero = T::zero();
    let in_unit_interval = if q > zero {
        p > zero && p < q
    } else {
        p < zero && p > q
    };
    if !in_unit_interval {
        return Err(Error::InvalidSlope {
            p: p.to_string(),
            q: q.to_string(),
        });
    }
    let den = q.clone() * rho_den.clone();
    let offset = rho_num * q;
    let floor_at = |i: usize| -> Result<T> {
        let i = T::from_usize(i).ok_or(Error::Overflow { k: i })?;
        Ok((p.clone() * i * rho_den.clone() + offset.clone()).div_floor(&den))
    };
    let mut symbols = Vec::with_capacity(len);
    let mut prev = floor_at(0)?;
    for i in 0..len {
        let next = floor_at(i + 1)?;
        let step = next.clone() - prev;
        symbols.push(if step.is_zero() { 0 } else { 1 });
        prev = next;
    }
    Ok(Word::new(symbols))
}
