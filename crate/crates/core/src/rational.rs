//! Small helpers around exact rational arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number with arbitrary-precision numerator and denominator.
pub type Q = BigRational;

/// The rational `value / 1`.
pub fn q(value: i64) -> Q {
    Q::from_integer(BigInt::from(value))
}

/// The rational `num / den`; panics when `den == 0`.
pub fn frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Converts an integer vector into a rational one.
pub fn to_q_vec(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

/// Returns the integer vector when every entry is integral.
pub fn to_int_vec(v: &[Q]) -> Option<Vec<i64>> {
    v.iter()
        .map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None })
        .collect()
}

/// Converts an integral rational into `i64`.
pub fn to_i64(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

/// Componentwise sum.
pub fn add(x: &[Q], y: &[Q]) -> Vec<Q> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

/// Componentwise difference.
pub fn sub(x: &[Q], y: &[Q]) -> Vec<Q> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

/// Scalar multiple.
pub fn scale(c: &Q, x: &[Q]) -> Vec<Q> {
    x.iter().map(|a| c * a).collect()
}

/// Negation.
pub fn neg(x: &[Q]) -> Vec<Q> {
    x.iter().map(|a| -a).collect()
}

/// The zero vector of length `n`.
pub fn zeros(n: usize) -> Vec<Q> {
    vec![Q::zero(); n]
}

/// True when every entry vanishes.
pub fn is_zero_vec(x: &[Q]) -> bool {
    x.iter().all(Zero::is_zero)
}

/// Formats a rational compactly (`3`, `-1/2`).
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Formats a rational vector as `[a, b, ...]`.
pub fn fmt_vec(x: &[Q]) -> String {
    let parts: Vec<String> = x.iter().map(fmt_q).collect();
    format!("[{}]", parts.join(", "))
}

/// Solves the square system `m · x = rhs` exactly, returning `None` when `m` is singular.
pub fn solve(m: &[Vec<Q>], rhs: &[Q]) -> Option<Vec<Q>> {
    let n = m.len();
    let mut aug: Vec<Vec<Q>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let p = aug[col][col].clone();
        for entry in aug[col].iter_mut() {
            *entry = &*entry / &p;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in col..=n {
                    let delta = &f * &aug[col][c];
                    aug[r][c] -= delta;
                }
            }
        }
    }
    Some(aug.into_iter().map(|mut row| row.pop().expect("augmented column")).collect())
}

/// A basis vector of the one-dimensional kernel of `m` (rows × cols), scaled to
/// the primitive integer vector with positive entries.  Returns `None` if the
/// kernel is not one-dimensional or has no positive generator.
pub fn positive_kernel_vector(m: &[Vec<i64>]) -> Option<Vec<i64>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<Q>> = m.iter().map(|r| to_q_vec(r)).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let pv = a[row][col].clone();
        for entry in a[row].iter_mut() {
            *entry = &*entry / &pv;
        }
        for r in 0..rows {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..cols {
                    let delta = &f * &a[row][c];
                    a[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    if free.len() != 1 {
        return None;
    }
    let f = free[0];
    let mut v = vec![Q::zero(); cols];
    v[f] = Q::one();
    for (r, &pc) in pivots.iter().enumerate() {
        v[pc] = -a[r][f].clone();
    }
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints
        .iter()
        .fold(BigInt::zero(), |acc, x| num_integer::Integer::gcd(&acc, x));
    let sign = if ints.iter().any(|x| x.is_negative()) { -BigInt::one() } else { BigInt::one() };
    let out: Option<Vec<i64>> = ints.iter().map(|x| (x * &sign / &g).to_i64()).collect();
    out.filter(|v| v.iter().all(|&x| x > 0))
}
