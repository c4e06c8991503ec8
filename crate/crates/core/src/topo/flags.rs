//! Counting covector chains over chains of flats, and the embedding of the
//! underlying matroid's flats.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{Error, Result};
use crate::flats::{FlatId, FlatLattice};
use crate::orient::{restrict_oig, OrientedSystem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagCount {
    pub chain: Vec<FlatId>,
    pub observed: u64,
    pub predicted: u64,
}

impl FlagCount {
    pub fn agrees(&self) -> bool {
        self.observed == self.predicted
    }
}

/// Counts chains `α_1 > … > α_{k+1}` of covectors with `supp α_i = A_i`,
/// and the product over `i` of `Σ_{B ∈ [A_{i+1}, A_i]} |μ(B, A_i)|`.
pub fn flag_count(oig: &OrientedSystem, chain: &[FlatId]) -> Result<FlagCount> {
    let lat = oig.lattice();
    if chain.last() != Some(&lat.bottom()) {
        return Err(Error::Precondition("chain must end at the bottom flat".into()));
    }
    if let Some(&f) = chain.iter().find(|&&f| f >= lat.len()) {
        return Err(Error::Precondition(format!("no flat with id {f}")));
    }
    if chain.windows(2).any(|w| !lat.lt(w[1], w[0])) {
        return Err(Error::Precondition("chain is not strictly descending".into()));
    }
    let phi = lat.to_poset();
    let mut predicted = 1u64;
    for w in chain.windows(2) {
        let s: i64 = lat.interval(w[1], w[0]).iter().map(|&b| phi.mobius(b, w[0]).abs()).sum();
        predicted *= s as u64;
    }
    // counts of chains ending at each covector of the current level
    let mut counts: HashMap<usize, u64> = HashMap::new();
    let last = *chain.last().expect("nonempty");
    for (i, c) in oig.covectors().iter().enumerate() {
        if c.support == last {
            counts.insert(i, 1);
        }
    }
    for &level in chain.iter().rev().skip(1) {
        let mut next = HashMap::new();
        for (i, c) in oig.covectors().iter().enumerate() {
            if c.support != level {
                continue;
            }
            let n: u64 = counts.iter().filter(|(&j, _)| oig.covectors()[j].leq(c)).map(|(_, &k)| k).sum();
            if n > 0 {
                next.insert(i, n);
            }
        }
        counts = next;
    }
    Ok(FlagCount { chain: chain.to_vec(), observed: counts.values().sum(), predicted })
}

/// Every strictly descending chain of flats ending at the bottom.
pub fn descending_chains(lat: &FlatLattice) -> Vec<Vec<FlatId>> {
    let bottom = lat.bottom();
    let mut out = Vec::new();
    // chains are built bottom-up and reversed at the end
    let mut stack = vec![vec![bottom]];
    while let Some(c) = stack.pop() {
        let last = *c.last().expect("nonempty");
        for b in 0..lat.len() {
            if lat.lt(last, b) {
                let mut next = c.clone();
                next.push(b);
                stack.push(next);
            }
        }
        out.push(c.into_iter().rev().collect());
    }
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingReport {
    /// Images in the flat lattice of the flats of the underlying matroid.
    pub image: Vec<FlatId>,
    /// Flats expressible as meets of coatoms, the top included.
    pub coatom_meets: Vec<FlatId>,
    pub order_embedding: bool,
    pub meets_preserved: bool,
    pub image_is_coatom_meets: bool,
    pub mobius_vanishes_off_image: bool,
    pub mobius_agrees_on_image: bool,
    pub tope_sum: i64,
    pub underlying_tope_sum: i64,
}

impl EmbeddingReport {
    pub fn passed(&self) -> bool {
        self.order_embedding
            && self.meets_preserved
            && self.image_is_coatom_meets
            && self.mobius_vanishes_off_image
            && self.mobius_agrees_on_image
            && self.tope_sum == self.underlying_tope_sum
    }
}

/// Checks the embedding of the flats of the restriction to `Γ(∅)` into the
/// flat lattice and the Möbius identities it implies.
pub fn underlying_flat_embedding_checks(oig: &OrientedSystem) -> Result<EmbeddingReport> {
    let lat = oig.lattice();
    let w = lat.gamma(lat.top());
    let under = restrict_oig(oig, w)?;
    let ulat = under.oig.lattice();
    let image: Vec<FlatId> = ulat.flats().iter().map(|f| lat.flat_of_set(bits::expand(f.members[0], w))).collect();
    let k = ulat.len();
    let mut order_embedding = true;
    let mut meets_preserved = true;
    for a in 0..k {
        for b in 0..k {
            order_embedding &= ulat.leq(a, b) == lat.leq(image[a], image[b]);
            meets_preserved &= image[ulat.meet(a, b)] == lat.meet(image[a], image[b]);
        }
    }
    let coatoms: Vec<FlatId> = lat.lower_covers(lat.top()).to_vec();
    let mut coatom_meets = Vec::new();
    for a in 0..lat.len() {
        let above: Vec<FlatId> = coatoms.iter().copied().filter(|&c| lat.leq(a, c)).collect();
        let m = above.iter().fold(lat.top(), |m, &c| lat.meet(m, c));
        if m == a {
            coatom_meets.push(a);
        }
    }
    let mut img_sorted = image.clone();
    img_sorted.sort_unstable();
    img_sorted.dedup();
    let image_is_coatom_meets = img_sorted.len() == k && img_sorted == coatom_meets;
    let phi = lat.to_poset();
    let uphi = ulat.to_poset();
    let top = lat.top();
    let mobius_vanishes_off_image = (0..lat.len()).filter(|a| !img_sorted.contains(a)).all(|a| phi.mobius(a, top) == 0);
    let mobius_agrees_on_image = (0..k).all(|a| phi.mobius(image[a], top) == uphi.mobius(a, ulat.top()));
    let tope_sum = (0..lat.len()).map(|a| phi.mobius(a, top).abs()).sum();
    let underlying_tope_sum = (0..k).map(|a| uphi.mobius(a, ulat.top()).abs()).sum();
    Ok(EmbeddingReport {
        image,
        coatom_meets,
        order_embedding,
        meets_preserved,
        image_is_coatom_meets,
        mobius_vanishes_off_image,
        mobius_agrees_on_image,
        tope_sum,
        underlying_tope_sum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orient::oig_from_antimatroid;
    use crate::setsys::build_set_system;

    fn colinear() -> OrientedSystem {
        let s = build_set_system(
            &["x", "y", "z"],
            &[vec![], vec!["x"], vec!["z"], vec!["x", "y"], vec!["x", "z"], vec!["y", "z"], vec!["x", "y", "z"]],
        )
        .unwrap();
        oig_from_antimatroid(&s).unwrap()
    }

    fn flat(o: &OrientedSystem, labels: &[&str]) -> FlatId {
        o.lattice().flat_of_set(o.system().ground().parse_subset(labels).unwrap())
    }

    #[test]
    fn colinear_flag_examples() {
        let o = colinear();
        let top = o.lattice().top();
        let bot = o.lattice().bottom();
        let f = flag_count(&o, &[top, bot]).unwrap();
        assert_eq!((f.observed, f.predicted), (4, 4));
        let f = flag_count(&o, &[bot]).unwrap();
        assert_eq!((f.observed, f.predicted), (1, 1));
        let x = flat(&o, &["x"]);
        let f = flag_count(&o, &[top, x, bot]).unwrap();
        assert_eq!((f.observed, f.predicted), (8, 8));
        assert!(flag_count(&o, &[x, top, bot]).is_err());
        assert!(flag_count(&o, &[top, x]).is_err());
    }

    #[test]
    fn all_colinear_chains_agree() {
        let o = colinear();
        let chains = descending_chains(o.lattice());
        assert!(chains.iter().all(|c| c.last() == Some(&o.lattice().bottom())));
        for c in chains {
            assert!(flag_count(&o, &c).unwrap().agrees(), "chain {c:?}");
        }
    }

    #[test]
    fn colinear_embedding() {
        let o = colinear();
        let r = underlying_flat_embedding_checks(&o).unwrap();
        assert!(r.passed());
        let mut expected = vec![o.lattice().top(), flat(&o, &["x"]), flat(&o, &["z"]), flat(&o, &["x", "z"])];
        expected.sort_unstable();
        assert_eq!(r.coatom_meets, expected);
        assert_eq!(r.tope_sum, 4);
        let phi = o.lattice().to_poset();
        for a in [flat(&o, &["x", "y"]), flat(&o, &["y", "z"]), o.lattice().bottom()] {
            assert_eq!(phi.mobius(a, o.lattice().top()), 0);
        }
    }
}
