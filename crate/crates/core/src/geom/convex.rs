//! Convex geometries of finite point sets.

use super::linalg::{rank, solve_unique, Row, Q};
use crate::bits::{self, ElemSet};
use crate::error::{Error, Result};
use crate::setsys::{check_axioms, AxiomClass, GroundSet, SetSystem};

use num_traits::{One, Signed};

pub const MAX_POINTS: usize = 12;
pub const MAX_DIM: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration {
    dim: usize,
    labels: Vec<String>,
    points: Vec<Row>,
}

impl PointConfiguration {
    pub fn new(dim: usize, labels: Vec<String>, points: Vec<Row>) -> Result<Self> {
        if labels.len() != points.len() {
            return Err(Error::Malformed(format!("{} labels for {} points", labels.len(), points.len())));
        }
        if let Some((i, p)) = points.iter().enumerate().find(|(_, p)| p.len() != dim) {
            return Err(Error::Dimension(format!("point {i} has {} coordinates, expected {dim}", p.len())));
        }
        for (i, p) in points.iter().enumerate() {
            if let Some(j) = points[..i].iter().position(|o| o == p) {
                return Err(Error::Malformed(format!("points {} and {} coincide", labels[j], labels[i])));
            }
        }
        GroundSet::new(&labels)?;
        Ok(PointConfiguration { dim, labels, points })
    }

    /// Labels `p0, p1, ...`.
    pub fn unlabeled(dim: usize, points: Vec<Row>) -> Result<Self> {
        let labels = (0..points.len()).map(|i| format!("p{i}")).collect();
        Self::new(dim, labels, points)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn points(&self) -> &[Row] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// The closure `A ↦ conv(A) ∩ E`, tabulated over all subsets, with its
/// antimatroid of complements of closed sets.
#[derive(Clone, Debug)]
pub struct ConvexGeometry {
    closure: Vec<ElemSet>,
    system: SetSystem,
}

impl ConvexGeometry {
    pub fn tau(&self, a: ElemSet) -> ElemSet {
        self.closure[a as usize]
    }

    pub fn is_closed(&self, a: ElemSet) -> bool {
        self.tau(a) == a
    }

    /// Points of `a` outside the hull of the others.
    pub fn ext(&self, a: ElemSet) -> ElemSet {
        bits::elems(a).filter(|&x| !bits::contains(self.tau(a & !bits::bit(x)), x)).fold(0, |m, x| m | bits::bit(x))
    }

    pub fn closed_sets(&self) -> Vec<ElemSet> {
        (0..self.closure.len() as u64).filter(|&a| self.is_closed(a)).collect()
    }

    pub fn system(&self) -> &SetSystem {
        &self.system
    }

    pub fn into_system(self) -> SetSystem {
        self.system
    }

    /// First failure of increasing, monotone or idempotent, if any.
    pub fn closure_violation(&self) -> Option<String> {
        let full = bits::full(self.system.n());
        for a in bits::subsets(full) {
            let t = self.tau(a);
            if !bits::is_subset(a, t) {
                return Some(format!("τ is not increasing at {}", self.system.format_set(a)));
            }
            if self.tau(t) != t {
                return Some(format!("τ is not idempotent at {}", self.system.format_set(a)));
            }
            for b in bits::subsets(a) {
                if !bits::is_subset(self.tau(b), t) {
                    return Some(format!("τ is not monotone at {}", self.system.format_set(a)));
                }
            }
        }
        None
    }

    /// First failure of anti-exchange over closed sets, if any.
    pub fn anti_exchange_violation(&self) -> Option<(ElemSet, usize, usize)> {
        let n = self.system.n();
        for x in self.closed_sets() {
            for a in 0..n {
                for b in 0..n {
                    if a == b || bits::contains(x, a) || bits::contains(x, b) {
                        continue;
                    }
                    let ta = self.tau(x | bits::bit(a));
                    let tb = self.tau(x | bits::bit(b));
                    if bits::contains(ta, b) && bits::contains(tb, a) {
                        return Some((x, a, b));
                    }
                }
            }
        }
        None
    }
}

/// Indices of the points of `pts` lying in the convex hull of `simplex`,
/// whose points are affinely independent.
fn points_in_simplex(pts: &[Row], simplex: &[usize]) -> ElemSet {
    let rows_count = pts[0].len() + 1;
    let a: Vec<Row> = (0..rows_count)
        .map(|r| {
            simplex
                .iter()
                .map(|&i| if r < rows_count - 1 { pts[i][r].clone() } else { Q::one() })
                .collect()
        })
        .collect();
    let mut inside = 0;
    for (k, p) in pts.iter().enumerate() {
        let b: Vec<Q> = p.iter().cloned().chain([Q::one()]).collect();
        if let Some(lambda) = solve_unique(&a, &b) {
            if lambda.iter().all(|l| !l.is_negative()) {
                inside |= bits::bit(k);
            }
        }
    }
    inside
}

fn affinely_independent(pts: &[Row], idx: &[usize]) -> bool {
    let base = &pts[idx[0]];
    let diffs: Vec<Row> = idx[1..].iter().map(|&i| pts[i].iter().zip(base).map(|(x, y)| x - y).collect()).collect();
    rank(&diffs) == diffs.len()
}

/// Builds the convex geometry of `points`. Hull membership uses
/// Carathéodory: a point lies in `conv(A)` iff it lies in the hull of an
/// affinely independent subset of `A` with at most `d + 1` points.
pub fn convex_geometry(points: &PointConfiguration) -> Result<ConvexGeometry> {
    let n = points.len();
    let d = points.dim();
    if d > MAX_DIM {
        return Err(Error::CapExceeded { what: "dimension for hull membership".into(), limit: MAX_DIM, actual: d });
    }
    if n > MAX_POINTS {
        return Err(Error::CapExceeded { what: "points in a convex geometry".into(), limit: MAX_POINTS, actual: n });
    }
    let pts = points.points();
    let mut simplices: Vec<(ElemSet, ElemSet)> = Vec::new();
    for s in bits::subsets(bits::full(n)) {
        let k = bits::len(s);
        if k == 0 || k > d + 1 {
            continue;
        }
        let idx: Vec<usize> = bits::elems(s).collect();
        if affinely_independent(pts, &idx) {
            simplices.push((s, points_in_simplex(pts, &idx)));
        }
    }
    let closure: Vec<ElemSet> = (0..1u64 << n)
        .map(|a| simplices.iter().filter(|(s, _)| bits::is_subset(*s, a)).fold(a, |m, (_, inside)| m | inside))
        .collect();
    let full = bits::full(n);
    let feasible: Vec<ElemSet> = (0..1u64 << n).filter(|&a| closure[a as usize] == a).map(|a| full & !a).collect();
    let system = SetSystem::new(GroundSet::new(points.labels())?, feasible)?;
    let geo = ConvexGeometry { closure, system };
    if let Some(msg) = geo.closure_violation() {
        return Err(Error::Internal(msg));
    }
    if let Some((x, a, b)) = geo.anti_exchange_violation() {
        return Err(Error::Internal(format!(
            "anti-exchange fails at {} with {} and {}",
            geo.system.format_set(x),
            geo.system.ground().label(a),
            geo.system.ground().label(b)
        )));
    }
    let report = check_axioms(&geo.system, AxiomClass::Antimatroid, false);
    if !report.passed {
        return Err(Error::Internal("complements of closed sets do not form an antimatroid".into()));
    }
    for &x in geo.system.feasible() {
        if geo.system.gamma(x) != geo.ext(full & !x) {
            return Err(Error::Internal(format!("Γ and ext disagree at {}", geo.system.format_set(x))));
        }
        let closed = full & !x;
        if geo.tau(geo.ext(closed)) != closed {
            return Err(Error::Internal(format!("closed set {} is not the hull of its extreme points", geo.system.format_set(closed))));
        }
    }
    Ok(geo)
}
