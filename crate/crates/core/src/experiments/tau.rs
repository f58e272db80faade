//! Closed-form evaluation counts for edgeless graphs.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

/// `τ(n, k) = Σ_{i=1}^{n} (k+1)·C(i,k)·C(i,k+1)`, exactly.
///
/// Binomials are carried incrementally (`C(i+1,j) = C(i,j)·(i+1)/(i+1−j)`),
/// so large `n` costs one big multiply and divide per term.
pub fn tau_edgeless(n: u64, k: u64) -> BigUint {
    let mut total = BigUint::zero();
    if k == 0 || k + 1 > n {
        // C(i, k+1) = 0 for every i ≤ n
        return if k == 0 {
            // (k+1)·C(i,0)·C(i,1) = i
            BigUint::from(n) * BigUint::from(n + 1) / 2u32
        } else {
            total
        };
    }
    let mut lo = BigUint::from(k + 1); // C(k+1, k)
    let mut hi = BigUint::from(1u32); // C(k+1, k+1)
    let mut i = k + 1;
    loop {
        total += &lo * &hi;
        if i == n {
            break;
        }
        i += 1;
        lo = lo * i / (i - k);
        hi = hi * i / (i - k - 1);
    }
    total * (k + 1)
}

/// `log_base(x)`, or `None` for `x = 0` (printed as `-`).
pub fn log_base(x: &BigUint, base: u64) -> Option<f64> {
    if x.is_zero() {
        return None;
    }
    // keep 64 significant bits; the rest goes into the exponent
    let bits = x.bits();
    let shift = bits.saturating_sub(64);
    let top = (x >> shift).to_f64().expect("fits in f64");
    let ln = top.ln() + shift as f64 * std::f64::consts::LN_2;
    Some(ln / (base as f64).ln())
}
