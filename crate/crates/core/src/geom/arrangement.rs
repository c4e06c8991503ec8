//! Real central arrangements: face sign vectors and oriented matroids of
//! vector configurations.

use num_traits::Zero;

use super::fm::homogeneous_feasible;
use super::linalg::{integer_row, rank, Row, Q};
use crate::bits::{self, ElemSet};
use crate::covec::{Sign, SignVector};
use crate::error::{Error, Result};
use crate::orient::{validate_oig, validate_om, OrientedSystem};
use crate::setsys::{GroundSet, SetSystem};

/// Largest number of forms accepted by face enumeration.
pub const MAX_FORMS: usize = 10;

/// Central arrangement of linear forms on `Q^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalArrangement {
    dim: usize,
    forms: Vec<Row>,
}

impl RationalArrangement {
    /// Rejects zero forms and proportional pairs.
    pub fn new(dim: usize, forms: Vec<Row>) -> Result<Self> {
        let arr = Self::unchecked(dim, forms)?;
        for (i, f) in arr.forms.iter().enumerate() {
            if f.iter().all(Zero::is_zero) {
                return Err(Error::Precondition(format!("form {i} is identically zero")));
            }
            for (j, g) in arr.forms[..i].iter().enumerate() {
                if rank(&[f.clone(), g.clone()]) < 2 {
                    return Err(Error::Precondition(format!("forms {j} and {i} are proportional")));
                }
            }
        }
        Ok(arr)
    }

    pub(crate) fn unchecked(dim: usize, forms: Vec<Row>) -> Result<Self> {
        if let Some((i, f)) = forms.iter().enumerate().find(|(_, f)| f.len() != dim) {
            return Err(Error::Dimension(format!("form {i} has {} coefficients, expected {dim}", f.len())));
        }
        Ok(RationalArrangement { dim, forms })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn forms(&self) -> &[Row] {
        &self.forms
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    /// True when the forms have no common nonzero kernel vector.
    pub fn is_essential(&self) -> bool {
        rank(&self.forms) == self.dim
    }

    pub fn sub(&self, keep: ElemSet) -> RationalArrangement {
        RationalArrangement { dim: self.dim, forms: bits::elems(keep).map(|i| self.forms[i].clone()).collect() }
    }
}

/// True when some point has the given sign under every form.
pub fn sign_feasible(arr: &RationalArrangement, sigma: &[Sign]) -> Result<bool> {
    if sigma.len() != arr.len() {
        return Err(Error::Dimension(format!("{} signs for {} forms", sigma.len(), arr.len())));
    }
    Ok(feasible_prefix(arr, sigma))
}

fn feasible_prefix(arr: &RationalArrangement, sigma: &[Sign]) -> bool {
    let mut eqs = Vec::new();
    let mut stricts = Vec::new();
    for (f, s) in arr.forms.iter().zip(sigma) {
        let r = integer_row(f);
        match s {
            Sign::Zero => eqs.push(r),
            Sign::Plus => stricts.push(r),
            Sign::Minus => stricts.push(r.into_iter().map(|c| -c).collect()),
            Sign::One => return false,
        }
    }
    homogeneous_feasible(&eqs, &stricts)
}

/// Every realizable sign vector, sorted. Prefixes are pruned as soon as
/// they become infeasible.
pub fn real_covectors(arr: &RationalArrangement) -> Result<Vec<SignVector>> {
    let n = arr.len();
    if n > MAX_FORMS {
        return Err(Error::CapExceeded { what: "forms in face enumeration".into(), limit: MAX_FORMS, actual: n });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    extend(arr, &mut prefix, &mut out);
    let mut vs: Vec<SignVector> = out.iter().map(|s: &Vec<Sign>| SignVector::from_signs(s)).collect();
    vs.sort();
    Ok(vs)
}

fn extend(arr: &RationalArrangement, prefix: &mut Vec<Sign>, out: &mut Vec<Vec<Sign>>) {
    let k = prefix.len();
    if k == arr.len() {
        out.push(prefix.clone());
        return;
    }
    let head = RationalArrangement { dim: arr.dim, forms: arr.forms[..=k].to_vec() };
    for s in [Sign::Zero, Sign::Plus, Sign::Minus] {
        prefix.push(s);
        if feasible_prefix(&head, prefix) {
            extend(arr, prefix, out);
        }
        prefix.pop();
    }
}

/// The oriented matroid of a vector configuration, as an oriented interval
/// greedoid on its independent sets.
pub fn om_from_vectors(vectors: &[Row], labels: Option<&[String]>) -> Result<OrientedSystem> {
    let dim = vectors.first().map_or(0, |v| v.len());
    if let Some(i) = vectors.iter().position(|v| v.iter().all(Zero::is_zero)) {
        return Err(Error::Precondition(format!("vector {i} is zero, a loop")));
    }
    let names: Vec<String> = match labels {
        Some(l) if l.len() == vectors.len() => l.to_vec(),
        Some(l) => return Err(Error::Malformed(format!("{} labels for {} vectors", l.len(), vectors.len()))),
        None => (0..vectors.len()).map(|i| format!("e{i}")).collect(),
    };
    let arr = RationalArrangement::unchecked(dim, vectors.to_vec())?;
    let covectors = real_covectors(&arr)?;
    let n = vectors.len();
    let independent = bits::subsets(bits::full(n))
        .filter(|&s| {
            let rows: Vec<Row> = bits::elems(s).map(|i| vectors[i].clone()).collect();
            rank(&rows) == rows.len()
        })
        .collect::<Vec<_>>();
    let sys = SetSystem::new(GroundSet::new(&names)?, independent)?;
    let oig = validate_oig(&sys, &covectors)?;
    if !oig.passed() {
        return Err(Error::Internal("vector oriented matroid failed OIG validation".into()));
    }
    if !validate_om(&covectors).passed {
        return Err(Error::Internal("vector oriented matroid failed OM validation".into()));
    }
    Ok(oig)
}

/// Signs of the forms at a point.
pub fn signs_at(arr: &RationalArrangement, x: &[Q]) -> SignVector {
    let signs: Vec<Sign> = arr
        .forms
        .iter()
        .map(|f| match super::linalg::sign(&super::linalg::dot(f, x)) {
            1 => Sign::Plus,
            -1 => Sign::Minus,
            _ => Sign::Zero,
        })
        .collect();
    SignVector::from_signs(&signs)
}

#[cfg(test)]
mod tests {
    use super::super::linalg::q;
    use super::*;
    use std::collections::BTreeSet;

    fn row(v: &[i64]) -> Row {
        v.iter().map(|&x| q(x)).collect()
    }

    fn three_lines() -> RationalArrangement {
        RationalArrangement::new(2, vec![row(&[-3, 1]), row(&[2, 1]), row(&[4, 1])]).unwrap()
    }

    fn signs(s: &str) -> Vec<Sign> {
        s.chars().map(|c| Sign::from_char(c).unwrap()).collect()
    }

    #[test]
    fn feasibility_examples() {
        let a = RationalArrangement::new(2, vec![row(&[1, 0]), row(&[0, 1]), row(&[1, 1])]).unwrap();
        assert!(sign_feasible(&a, &signs("000")).unwrap());
        assert!(!sign_feasible(&a, &signs("++-")).unwrap());
        assert!(sign_feasible(&a, &signs("+-+")).unwrap());
        assert!(sign_feasible(&a, &signs("+")).is_err());
        let one = RationalArrangement::new(1, vec![row(&[1])]).unwrap();
        assert!(sign_feasible(&one, &signs("+")).unwrap());
    }

    #[test]
    fn face_counts() {
        let cov = real_covectors(&three_lines()).unwrap();
        assert_eq!(cov.len(), 13);
        assert_eq!(cov.iter().filter(|v| v.zero() == 0).count(), 6);
        assert_eq!(cov.iter().filter(|v| bits::len(v.zero()) == 1).count(), 6);
        let one = RationalArrangement::new(1, vec![row(&[1])]).unwrap();
        let s: Vec<String> = real_covectors(&one).unwrap().iter().map(|v| v.to_string()).collect();
        assert_eq!(s, ["+", "-", "0"]);
        let empty = RationalArrangement::new(2, vec![]).unwrap();
        assert_eq!(real_covectors(&empty).unwrap().len(), 1);
    }

    #[test]
    fn faces_match_sampled_points() {
        // every sampled point lands on an enumerated face, and the topes are all hit
        let arr = three_lines();
        let faces: BTreeSet<SignVector> = real_covectors(&arr).unwrap().into_iter().collect();
        let mut hit = BTreeSet::new();
        for x in -12..=12 {
            for y in -12..=12 {
                let v = signs_at(&arr, &[q(x), q(y)]);
                assert!(faces.contains(&v));
                hit.insert(v);
            }
        }
        assert!(faces.iter().filter(|v| v.zero() == 0).all(|t| hit.contains(t)));
    }

    #[test]
    fn bad_arrangements() {
        assert!(RationalArrangement::new(2, vec![row(&[0, 0])]).is_err());
        assert!(RationalArrangement::new(2, vec![row(&[1, 2]), row(&[-2, -4])]).is_err());
        assert!(matches!(RationalArrangement::new(2, vec![row(&[1])]), Err(Error::Dimension(_))));
        let big = RationalArrangement::unchecked(1, vec![row(&[1]); 11]).unwrap();
        assert!(matches!(real_covectors(&big), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn vector_matroid() {
        let labels = vec!["x".to_string(), "y".into(), "z".into()];
        let om = om_from_vectors(&[row(&[-3, 1]), row(&[2, 1]), row(&[4, 1])], Some(&labels)).unwrap();
        assert_eq!(om.system().feasible().len(), 7);
        assert_eq!(om.len(), 13);
        assert_eq!(om.topes().len(), 6);
        let single = om_from_vectors(&[row(&[1])], None).unwrap();
        assert_eq!(single.sign_strings(), ["+", "-", "0"]);
        assert!(om_from_vectors(&[row(&[0, 0])], None).is_err());
    }
}
