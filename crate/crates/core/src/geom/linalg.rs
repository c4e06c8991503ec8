//! Exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;
pub type Row = Vec<Q>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

/// Reduced row echelon form with zero rows removed.
pub fn rref(rows: &[Row]) -> Vec<Row> {
    let mut m: Vec<Row> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut lead = 0;
    for c in 0..cols {
        let Some(p) = (lead..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(lead, p);
        let inv = m[lead][c].recip();
        for x in m[lead].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != lead && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot = m[lead].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
        lead += 1;
        if lead == m.len() {
            break;
        }
    }
    m.truncate(lead);
    m
}

pub fn rank(rows: &[Row]) -> usize {
    rref(rows).len()
}

/// True when `row` lies in the span of the rows of the echelon basis `basis`.
pub fn in_span(basis: &[Row], row: &[Q]) -> bool {
    let mut r: Row = row.to_vec();
    for b in basis {
        let Some(c) = b.iter().position(|x| !x.is_zero()) else { continue };
        if !r[c].is_zero() {
            let f = r[c].clone() / &b[c];
            for (x, y) in r.iter_mut().zip(b) {
                *x -= &f * y;
            }
        }
    }
    r.iter().all(Zero::is_zero)
}

/// The unique solution of `a x = b` when `a` has full column rank and the
/// system is consistent.
pub fn solve_unique(a: &[Row], b: &[Q]) -> Option<Vec<Q>> {
    let cols = a.first()?.len();
    let aug: Vec<Row> = a.iter().zip(b).map(|(r, v)| r.iter().cloned().chain([v.clone()]).collect()).collect();
    let red = rref(&aug);
    let mut x = vec![Q::zero(); cols];
    let mut pivots = 0;
    for r in &red {
        let c = r.iter().position(|v| !v.is_zero())?;
        if c == cols {
            return None;
        }
        x[c] = r[cols].clone();
        pivots += 1;
    }
    (pivots == cols).then_some(x)
}

/// Scales a rational row to coprime integers, keeping signs.
pub fn integer_row(row: &[Q]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = row.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect();
    primitive(ints)
}

/// Divides by the gcd of the entries.
pub fn primitive(row: Vec<BigInt>) -> Vec<BigInt> {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return row;
    }
    row.into_iter().map(|x| x / &g).collect()
}

pub fn sign(x: &Q) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}
