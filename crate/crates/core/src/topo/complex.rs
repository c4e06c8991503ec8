//! Simplicial complexes, order complexes of bounded posets, and integer
//! homology via Smith normal form.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::topo::FinitePoset;

/// Largest number of faces accepted by [`homology_evidence`].
pub const MAX_FACES: usize = 200_000;

/// A complex stored by its facets; vertices are `0..labels.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialComplex {
    pub labels: Vec<String>,
    /// Sorted vertex lists, sorted.
    pub facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Keeps only the inclusion-maximal faces among `faces`.
    pub fn from_faces(labels: Vec<String>, faces: Vec<Vec<usize>>) -> Self {
        let mut fs: Vec<Vec<usize>> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        fs.sort_by_key(|f| std::cmp::Reverse(f.len()));
        let mut facets: Vec<Vec<usize>> = Vec::new();
        for f in fs {
            if !facets.iter().any(|g| is_sub(&f, g)) {
                facets.push(f);
            }
        }
        facets.sort();
        SimplicialComplex { labels, facets }
    }

    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    /// Nonempty faces grouped by dimension, each sorted.
    pub fn faces_by_dim(&self, cap: usize) -> Result<Vec<Vec<Vec<usize>>>> {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        for f in &self.facets {
            let k = f.len();
            if k >= usize::BITS as usize - 1 {
                return Err(Error::CapExceeded { what: "facet size".into(), limit: 62, actual: k });
            }
            for mask in 1u64..(1u64 << k) {
                let face: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                seen.insert(face);
                if seen.len() > cap {
                    return Err(Error::CapExceeded { what: "faces in a complex".into(), limit: cap, actual: seen.len() });
                }
            }
        }
        let d = self.dim();
        let mut out = vec![Vec::new(); (d + 1).max(0) as usize];
        for f in seen {
            out[f.len() - 1].push(f);
        }
        Ok(out)
    }

    pub fn f_vector(&self) -> Result<Vec<usize>> {
        Ok(self.faces_by_dim(MAX_FACES)?.iter().map(Vec::len).collect())
    }

    pub fn euler_characteristic(&self) -> Result<i64> {
        Ok(self.f_vector()?.iter().enumerate().map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) }).sum())
    }
}

fn is_sub(a: &[usize], b: &[usize]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

/// Chains of `p` with its minimum and maximum removed.
pub fn order_complex(p: &FinitePoset) -> Result<SimplicialComplex> {
    let bottom = p.bottom().ok_or_else(|| Error::Precondition("poset has no minimum".into()))?;
    let top = p.top().ok_or_else(|| Error::Precondition("poset has no maximum".into()))?;
    let proper: Vec<usize> = (0..p.len()).filter(|&x| x != bottom && x != top).collect();
    let vid: HashMap<usize, usize> = proper.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let labels: Vec<String> = proper.iter().map(|&x| p.label(x).to_string()).collect();
    let mut facets = Vec::new();
    // maximal chains of the proper part: walk up covers from atoms to coatoms
    let mut stack: Vec<Vec<usize>> = p.upper_covers(bottom).iter().filter(|&&a| a != top).map(|&a| vec![a]).collect();
    while let Some(chain) = stack.pop() {
        let last = *chain.last().expect("nonempty");
        let ups: Vec<usize> = p.upper_covers(last).iter().copied().filter(|&u| u != top).collect();
        if ups.is_empty() {
            facets.push(chain.iter().map(|x| vid[x]).collect());
            if facets.len() > MAX_FACES {
                return Err(Error::CapExceeded { what: "maximal chains".into(), limit: MAX_FACES, actual: facets.len() });
            }
        }
        for u in ups {
            let mut next = chain.clone();
            next.push(u);
            stack.push(next);
        }
    }
    Ok(SimplicialComplex::from_faces(labels, facets))
}

/// Nonzero diagonal entries of the Smith normal form, positive and sorted
/// so that each divides the next.
pub fn smith_diagonal(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = min_entry(&m, t) else { break };
        m.swap(t, pr);
        for r in m.iter_mut() {
            r.swap(t, pc);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                let pivot_row = m[t].clone();
                for (x, y) in m[i][t..].iter_mut().zip(&pivot_row[t..]) {
                    *x -= &q * y;
                }
                if !m[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                for r in m[t..].iter_mut() {
                    let v = &q * &r[t];
                    r[j] -= v;
                }
                if !m[t][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                // the pivot must divide the rest, else fold a row in and retry
                let bad = (t + 1..rows).find(|&i| m[i][t + 1..].iter().any(|x| !x.mod_floor(&m[t][t]).is_zero()));
                match bad {
                    Some(i) => {
                        let row = m[i].clone();
                        for (x, y) in m[t].iter_mut().zip(&row) {
                            *x += y;
                        }
                    }
                    None => break,
                }
            }
            if let Some((pr, pc)) = min_entry_in_cross(&m, t) {
                m.swap(t, pr);
                for r in m.iter_mut() {
                    r.swap(t, pc);
                }
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}

/// Smith diagonal of a sparse integer matrix given by columns of
/// `(row, value)` pairs. Unit pivots are eliminated in place; whatever is
/// left goes through [`smith_diagonal`].
pub fn sparse_smith_diagonal(rows: usize, cols: Vec<Vec<(usize, i64)>>) -> Vec<BigInt> {
    let mut cols: Vec<BTreeMap<usize, i64>> =
        cols.into_iter().map(|c| c.into_iter().filter(|&(_, v)| v != 0).collect()).collect();
    let mut row_cols: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); rows];
    for (j, c) in cols.iter().enumerate() {
        for &r in c.keys() {
            row_cols[r].insert(j);
        }
    }
    let mut alive = vec![true; cols.len()];
    let mut units = 0usize;
    let mut progress = true;
    'passes: while progress {
        progress = false;
        for c in 0..cols.len() {
            if !alive[c] {
                continue;
            }
            let Some((r, s)) = cols[c]
                .iter()
                .filter(|(_, v)| v.abs() == 1)
                .min_by_key(|(r, _)| row_cols[**r].len())
                .map(|(&r, &v)| (r, v))
            else {
                continue;
            };
            let others: Vec<usize> = row_cols[r].iter().copied().filter(|&j| j != c).collect();
            let pivot = cols[c].clone();
            for j in others {
                let factor = cols[j][&r] * s;
                let mut updates = Vec::with_capacity(pivot.len());
                for (&i, &v) in &pivot {
                    let cur = cols[j].get(&i).copied().unwrap_or(0);
                    let Some(next) = factor.checked_mul(v).and_then(|p| cur.checked_sub(p)) else { break 'passes };
                    updates.push((i, next));
                }
                for (i, next) in updates {
                    if next == 0 {
                        cols[j].remove(&i);
                        row_cols[i].remove(&j);
                    } else {
                        cols[j].insert(i, next);
                        row_cols[i].insert(j);
                    }
                }
            }
            for &i in pivot.keys() {
                row_cols[i].remove(&c);
            }
            cols[c].clear();
            alive[c] = false;
            units += 1;
            progress = true;
        }
    }
    let live_cols: Vec<usize> = (0..cols.len()).filter(|&j| alive[j] && !cols[j].is_empty()).collect();
    let live_rows: Vec<usize> = (0..rows).filter(|&r| !row_cols[r].is_empty()).collect();
    let row_pos: HashMap<usize, usize> = live_rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let mut dense = vec![vec![BigInt::zero(); live_cols.len()]; live_rows.len()];
    for (jj, &j) in live_cols.iter().enumerate() {
        for (&r, &v) in &cols[j] {
            dense[row_pos[&r]][jj] = BigInt::from(v);
        }
    }
    let mut diag = vec![BigInt::one(); units];
    diag.extend(smith_diagonal(dense));
    diag
}

fn min_entry(m: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for (i, row) in m.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if !x.is_zero() && best.as_ref().is_none_or(|b| x.abs() < b.2) {
                if x.abs().is_one() {
                    return Some((i, j));
                }
                best = Some((i, j, x.abs()));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Smallest nonzero entry in row `t` or column `t` from `(t, t)` on.
fn min_entry_in_cross(m: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    let mut consider = |i: usize, j: usize, x: &BigInt| {
        if !x.is_zero() && best.as_ref().is_none_or(|b| x.abs() < b.2) {
            best = Some((i, j, x.abs()));
        }
    };
    for (i, row) in m.iter().enumerate().skip(t) {
        consider(i, t, &row[t]);
    }
    for (j, x) in m[t].iter().enumerate().skip(t) {
        consider(t, j, x);
    }
    best.map(|(i, j, _)| (i, j))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    /// Face counts by dimension, from vertices up.
    pub f_vector: Vec<usize>,
    pub euler_characteristic: i64,
    /// Reduced Betti numbers in dimensions `0..=dim`.
    pub reduced_betti: Vec<usize>,
    /// Torsion coefficients per dimension, as decimal strings.
    pub torsion: Vec<Vec<String>>,
}

impl HomologyReport {
    /// Homology of the `k`-sphere: one free class in degree `k`, nothing else.
    pub fn is_sphere(&self, k: usize) -> bool {
        let betti_ok = self.reduced_betti.iter().enumerate().all(|(i, &b)| b == usize::from(i == k));
        let euler = 1 + if k.is_multiple_of(2) { 1 } else { -1 };
        betti_ok && k < self.reduced_betti.len() && self.torsion.iter().all(Vec::is_empty) && self.euler_characteristic == euler
    }
}

/// Euler characteristic and reduced integer homology of a nonempty complex.
pub fn homology_evidence(c: &SimplicialComplex) -> Result<HomologyReport> {
    if c.facets.is_empty() {
        return Err(Error::Precondition("complex is empty".into()));
    }
    let faces = c.faces_by_dim(MAX_FACES)?;
    let f_vector: Vec<usize> = faces.iter().map(Vec::len).collect();
    let euler = f_vector.iter().enumerate().map(|(i, &n)| if i % 2 == 0 { n as i64 } else { -(n as i64) }).sum();
    let top = faces.len();
    // ranks[k] = rank of ∂_k : C_k → C_{k-1}, with C_{-1} = Z
    let mut ranks = vec![0usize; top + 1];
    let mut torsion = vec![Vec::new(); top];
    for k in 0..top {
        let d = if k == 0 {
            smith_diagonal(vec![vec![BigInt::one(); faces[0].len()]])
        } else {
            let index: HashMap<&Vec<usize>, usize> = faces[k - 1].iter().enumerate().map(|(i, f)| (f, i)).collect();
            let cols = faces[k]
                .iter()
                .map(|f| {
                    (0..f.len())
                        .map(|skip| {
                            let sub: Vec<usize> = f.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                            (index[&sub], if skip % 2 == 0 { 1 } else { -1 })
                        })
                        .collect()
                })
                .collect();
            sparse_smith_diagonal(faces[k - 1].len(), cols)
        };
        ranks[k] = d.len();
        if k >= 1 {
            torsion[k - 1] = d.iter().filter(|x| !x.is_one()).map(|x| x.to_string()).collect();
        }
    }
    let reduced_betti = (0..top).map(|k| f_vector[k] - ranks[k] - ranks[k + 1]).collect();
    Ok(HomologyReport { f_vector, euler_characteristic: euler, reduced_betti, torsion })
}
