//! Fourier–Motzkin elimination for homogeneous systems of equations and
//! strict inequalities with integer coefficients.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::linalg::primitive;

/// Decides whether some rational `x` has `e·x = 0` for every `e` in
/// `equalities` and `s·x > 0` for every `s` in `stricts`.
pub fn homogeneous_feasible(equalities: &[Vec<BigInt>], stricts: &[Vec<BigInt>]) -> bool {
    let mut eqs: Vec<Vec<BigInt>> = equalities.to_vec();
    let mut rows: Vec<Vec<BigInt>> = stricts.to_vec();
    while let Some(e) = eqs.pop() {
        let Some(j) = e.iter().position(|c| !c.is_zero()) else { continue };
        let e = if e[j].is_negative() { e.iter().map(|c| -c).collect() } else { e };
        let pivot = e[j].clone();
        let eliminate = |r: &Vec<BigInt>| -> Vec<BigInt> {
            if r[j].is_zero() {
                return r.clone();
            }
            primitive(r.iter().zip(&e).map(|(a, b)| &pivot * a - &r[j] * b).collect())
        };
        eqs = eqs.iter().map(eliminate).collect();
        rows = rows.iter().map(eliminate).collect();
    }
    let mut rows: BTreeSet<Vec<BigInt>> = rows.into_iter().collect();
    let vars = rows.iter().next().map_or(0, |r| r.len());
    for j in 0..vars {
        if rows.iter().any(|r| r.iter().all(Zero::is_zero)) {
            return false;
        }
        let (pos, rest): (Vec<_>, Vec<_>) = rows.into_iter().partition(|r| r[j].is_positive());
        let (neg, zero): (Vec<_>, Vec<_>) = rest.into_iter().partition(|r| r[j].is_negative());
        let mut next: BTreeSet<Vec<BigInt>> = zero.into_iter().collect();
        for p in &pos {
            for n in &neg {
                let a = -&n[j];
                let b = &p[j];
                next.insert(primitive(p.iter().zip(n).map(|(x, y)| &a * x + b * y).collect()));
            }
        }
        rows = next;
    }
    rows.is_empty()
}
