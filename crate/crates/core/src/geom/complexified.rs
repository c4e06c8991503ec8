//! Complexified arrangements: the intersection lattice of the complex
//! hyperplanes and their real-part hypersurfaces, the resulting interval
//! greedoid, and its covectors.
//!
//! A point `x + iy` of `C^d` is stored as `(x, y)` in `Q^{2d}`. A subspace is
//! stored as the echelon basis of the linear forms vanishing on it.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use num_traits::Zero;

use super::arrangement::{real_covectors, RationalArrangement};
use super::linalg::{in_span, rref, Row, Q};
use crate::bits;
use crate::covec::{Sign, SignVector};
use crate::error::{Error, Result};
use crate::flats::{ig_from_semimodular_lattice, FlatLattice};
use crate::orient::{validate_oig, OrientedSystem};
use crate::setsys::SetSystem;
use crate::topo::FinitePoset;

pub const MAX_HYPERPLANES: usize = 6;

/// Annihilator basis of a subspace of `Q^{2d}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace(Vec<Row>);

impl Subspace {
    pub fn full() -> Self {
        Subspace(Vec::new())
    }

    pub fn codim(&self) -> usize {
        self.0.len()
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let rows: Vec<Row> = self.0.iter().chain(&other.0).cloned().collect();
        Subspace(rref(&rows))
    }

    pub fn contained_in(&self, other: &Subspace) -> bool {
        other.0.iter().all(|r| in_span(&self.0, r))
    }
}

/// Intersection lattice of a complexified arrangement. Elements `0..n` are
/// the complex hyperplanes, `n..2n` their real-part hypersurfaces.
#[derive(Clone, Debug)]
pub struct IntersectionLattice {
    pub subspaces: Vec<Subspace>,
    pub poset: FinitePoset,
}

pub fn ground_labels(n: usize) -> Vec<String> {
    (0..n).map(|e| format!("H{e}")).chain((0..n).map(|e| format!("H{e}R"))).collect()
}

fn generators(arr: &RationalArrangement) -> Vec<Subspace> {
    let d = arr.dim();
    let re = |f: &Row| -> Row { f.iter().cloned().chain(std::iter::repeat_n(Q::zero(), d)).collect() };
    let im = |f: &Row| -> Row { std::iter::repeat_n(Q::zero(), d).chain(f.iter().cloned()).collect() };
    let mut g: Vec<Subspace> = arr.forms().iter().map(|f| Subspace(rref(&[re(f), im(f)]))).collect();
    g.extend(arr.forms().iter().map(|f| Subspace(rref(&[im(f)]))));
    g
}

fn check_input(arr: &RationalArrangement) -> Result<()> {
    if !arr.is_essential() {
        return Err(Error::Precondition("arrangement is not essential".into()));
    }
    if arr.len() > MAX_HYPERPLANES {
        return Err(Error::CapExceeded { what: "hyperplanes in a complexified arrangement".into(), limit: MAX_HYPERPLANES, actual: arr.len() });
    }
    Ok(())
}

pub fn intersection_lattice(arr: &RationalArrangement) -> Result<IntersectionLattice> {
    check_input(arr)?;
    let gens = generators(arr);
    let mut subspaces: Vec<Subspace> = gens.clone();
    let mut index: HashMap<Subspace, usize> = HashMap::new();
    for (i, s) in subspaces.iter().enumerate() {
        if index.insert(s.clone(), i).is_some() {
            return Err(Error::Precondition("two hyperplanes coincide".into()));
        }
    }
    if let Entry::Vacant(e) = index.entry(Subspace::full()) {
        e.insert(subspaces.len());
        subspaces.push(Subspace::full());
    }
    let mut i = 0;
    while i < subspaces.len() {
        for g in &gens {
            let m = subspaces[i].intersect(g);
            if !index.contains_key(&m) {
                index.insert(m.clone(), subspaces.len());
                subspaces.push(m);
            }
        }
        i += 1;
    }
    let n = arr.len();
    let mut labels = ground_labels(n);
    labels.extend((2 * n..subspaces.len()).map(|k| format!("M{k}")));
    let poset = FinitePoset::from_leq(labels, |a, b| subspaces[a].contained_in(&subspaces[b]))?;
    Ok(IntersectionLattice { subspaces, poset })
}

/// The interval greedoid of a complexified arrangement, with closed-form
/// checks of `ξ` and `Γ` on every feasible set.
pub fn complexified_ig(arr: &RationalArrangement) -> Result<(SetSystem, IntersectionLattice)> {
    let lat = intersection_lattice(arr)?;
    let (sys, iso) = ig_from_semimodular_lattice(&lat.poset)?;
    let n = arr.len();
    if sys.ground().labels() != ground_labels(n).as_slice() {
        return Err(Error::Internal("meet-irreducibles are not the hyperplanes and their real parts".into()));
    }
    let flats = FlatLattice::new(&sys)?;
    for &x in sys.feasible() {
        let m = &lat.subspaces[iso[flats.flat_of_set(x)]];
        let inside = |h: usize| m.contained_in(&lat.subspaces[h]);
        let xi = (0..2 * n).filter(|&h| inside(h)).fold(0, |s, h| s | bits::bit(h));
        let gamma = (0..n).fold(0, |s, e| {
            let real = if inside(n + e) { 0 } else { bits::bit(n + e) };
            let complex = if inside(n + e) && !inside(e) { bits::bit(e) } else { 0 };
            s | real | complex
        });
        if xi != flats.xi(flats.flat_of_set(x)) || gamma != sys.gamma(x) {
            return Err(Error::Internal(format!("closed forms of ξ and Γ fail at {}", sys.format_set(x))));
        }
    }
    Ok((sys, lat))
}

/// All covectors `α_z`, enumerated from pairs of real faces: the imaginary
/// part's face `v`, then a face `u` of the forms vanishing on it.
pub fn complex_covectors(arr: &RationalArrangement) -> Result<Vec<SignVector>> {
    let n = arr.len();
    let mut out = Vec::new();
    for v in real_covectors(arr)? {
        let sub = arr.sub(v.zero());
        let zero_idx: Vec<usize> = bits::elems(v.zero()).collect();
        for u in real_covectors(&sub)? {
            let mut signs = vec![Sign::Zero; 2 * n];
            for e in 0..n {
                signs[n + e] = v.get(e);
                if v.get(e) != Sign::Zero {
                    signs[e] = Sign::One;
                }
            }
            for (k, &e) in zero_idx.iter().enumerate() {
                signs[e] = u.get(k);
            }
            out.push(SignVector::from_signs(&signs));
        }
    }
    out.sort();
    Ok(out)
}

pub fn complexified_oig(arr: &RationalArrangement) -> Result<OrientedSystem> {
    let (sys, _) = complexified_ig(arr)?;
    let cov = complex_covectors(arr)?;
    let oig = validate_oig(&sys, &cov)?;
    if !oig.passed() {
        return Err(Error::Internal("complexified covectors failed OIG validation".into()));
    }
    Ok(oig)
}

/// The pair `(α(H_e), α(H_e^ℜ))` takes one of five values.
pub fn pair_constraint_holds(v: &SignVector, n: usize) -> bool {
    (0..n).all(|e| {
        matches!(
            (v.get(e), v.get(n + e)),
            (Sign::Zero, Sign::Zero)
                | (Sign::Plus, Sign::Zero)
                | (Sign::Minus, Sign::Zero)
                | (Sign::One, Sign::Plus)
                | (Sign::One, Sign::Minus)
        )
    })
}
