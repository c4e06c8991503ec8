//! Finite posets: order relation, covers, grading, Möbius function, lattice
//! operations and thinness.

use std::sync::OnceLock;

use crate::bits::BitSet;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct FinitePoset {
    labels: Vec<String>,
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
    rank: Option<Vec<usize>>,
    linear: Vec<usize>,
    mobius_rows: Vec<OnceLock<Vec<i64>>>,
}

impl FinitePoset {
    /// Builds a poset from an order predicate, which must be reflexive,
    /// antisymmetric and transitive.
    #[allow(clippy::needless_range_loop)]
    pub fn from_leq<F: Fn(usize, usize) -> bool>(labels: Vec<String>, leq: F) -> Result<Self> {
        let n = labels.len();
        let mut up = vec![BitSet::new(n); n];
        let mut down = vec![BitSet::new(n); n];
        for x in 0..n {
            for y in 0..n {
                if leq(x, y) {
                    up[x].insert(y);
                    down[y].insert(x);
                }
            }
        }
        for x in 0..n {
            if !up[x].contains(x) {
                return Err(Error::Malformed(format!("order is not reflexive at {}", labels[x])));
            }
            for y in up[x].iter() {
                if y != x && up[y].contains(x) {
                    return Err(Error::Malformed(format!("order is not antisymmetric on {}, {}", labels[x], labels[y])));
                }
                if !up[y].is_subset(&up[x]) {
                    return Err(Error::Malformed(format!("order is not transitive through {}", labels[y])));
                }
            }
        }
        Ok(Self::assemble(labels, up, down))
    }

    /// Builds a poset from cover pairs `(lower, upper)`; the order is their
    /// reflexive-transitive closure.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut succ = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::Malformed(format!("cover ({a},{b}) out of range")));
            }
            succ[a].push(b);
            indeg[b] += 1;
        }
        let mut order = Vec::with_capacity(n);
        let mut stack: Vec<usize> = (0..n).rev().filter(|&v| indeg[v] == 0).collect();
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in &succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        if order.len() != n {
            return Err(Error::Malformed("cover relation has a cycle".into()));
        }
        let mut up = vec![BitSet::new(n); n];
        for &v in order.iter().rev() {
            up[v].insert(v);
            for &w in &succ[v] {
                let row = up[w].clone();
                up[v].union_with(&row);
            }
        }
        let mut down = vec![BitSet::new(n); n];
        for (x, row) in up.iter().enumerate() {
            for y in row.iter() {
                down[y].insert(x);
            }
        }
        let p = Self::assemble(labels, up, down);
        for &(a, b) in covers {
            if !p.covers(a, b) {
                return Err(Error::Malformed(format!("({},{}) is not a cover", p.labels[a], p.labels[b])));
            }
        }
        Ok(p)
    }

    fn assemble(labels: Vec<String>, up: Vec<BitSet>, down: Vec<BitSet>) -> Self {
        let n = labels.len();
        let mut upper_covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
        for x in 0..n {
            for y in up[x].iter() {
                if y == x {
                    continue;
                }
                // x ⋖ y iff nothing strictly between
                let mut between = up[x].clone();
                between.intersect_with(&down[y]);
                if between.count() == 2 {
                    upper_covers[x].push(y);
                    lower_covers[y].push(x);
                }
            }
        }
        let mut linear: Vec<usize> = (0..n).collect();
        linear.sort_by_key(|&x| (down[x].count(), x));
        // longest chain from a minimal element
        let mut height = vec![0usize; n];
        for &y in &linear {
            height[y] = lower_covers[y].iter().map(|&x| height[x] + 1).max().unwrap_or(0);
        }
        let graded = (0..n).all(|x| upper_covers[x].iter().all(|&y| height[y] == height[x] + 1));
        let rank = graded.then_some(height);
        FinitePoset {
            labels,
            up,
            down,
            upper_covers,
            lower_covers,
            rank,
            linear,
            mobius_rows: (0..n).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.upper_covers[x].contains(&y)
    }

    /// `{y : x ≤ y}`
    pub fn up_set(&self, x: usize) -> &BitSet {
        &self.up[x]
    }

    /// `{y : y ≤ x}`
    pub fn down_set(&self, x: usize) -> &BitSet {
        &self.down[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    /// Rank from the minimal elements, present when the poset is graded.
    pub fn rank(&self) -> Option<&[usize]> {
        self.rank.as_deref()
    }

    pub fn rank_of(&self, x: usize) -> Option<usize> {
        self.rank.as_ref().map(|r| r[x])
    }

    /// A linear extension, by increasing down-set size.
    pub fn linear_extension(&self) -> &[usize] {
        &self.linear
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.lower_covers[x].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.upper_covers[x].is_empty()).collect()
    }

    pub fn bottom(&self) -> Option<usize> {
        match self.minimal_elements().as_slice() {
            [b] => Some(*b),
            _ => None,
        }
    }

    pub fn top(&self) -> Option<usize> {
        match self.maximal_elements().as_slice() {
            [t] => Some(*t),
            _ => None,
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.bottom().is_some() && self.top().is_some()
    }

    /// Elements of the closed interval `[x, y]`, in index order.
    pub fn interval(&self, x: usize, y: usize) -> Vec<usize> {
        let mut s = self.up[x].clone();
        s.intersect_with(&self.down[y]);
        s.iter().collect()
    }

    /// μ(x, y); zero when x ≰ y.
    pub fn mobius(&self, x: usize, y: usize) -> i64 {
        self.mobius_row(x)[y]
    }

    /// μ(x, ·) over all elements, computed once per `x`.
    pub fn mobius_row(&self, x: usize) -> &[i64] {
        self.mobius_rows[x].get_or_init(|| {
            let mut row = vec![0i64; self.len()];
            for &y in &self.linear {
                if !self.leq(x, y) {
                    continue;
                }
                row[y] = if y == x {
                    1
                } else {
                    -self.down[y].iter().filter(|&z| z != y && self.leq(x, z)).map(|z| row[z]).sum::<i64>()
                };
            }
            row
        })
    }

    /// Meet table, or an error naming a pair without a greatest lower bound.
    pub fn meet_table(&self) -> Result<Vec<Vec<usize>>> {
        self.bound_table(&self.down, "meet")
    }

    pub fn join_table(&self) -> Result<Vec<Vec<usize>>> {
        self.bound_table(&self.up, "join")
    }

    fn bound_table(&self, rel: &[BitSet], what: &str) -> Result<Vec<Vec<usize>>> {
        let n = self.len();
        let mut t = vec![vec![0; n]; n];
        for a in 0..n {
            for b in a..n {
                let mut common = rel[a].clone();
                common.intersect_with(&rel[b]);
                let m = common
                    .iter()
                    .find(|&m| rel[m] == common)
                    .ok_or_else(|| Error::NotALattice(format!("no {what} of {} and {}", self.labels[a], self.labels[b])))?;
                t[a][b] = m;
                t[b][a] = m;
            }
        }
        Ok(t)
    }

    /// First interval of length two that does not have exactly four
    /// elements, or `None` if the poset is thin. Errors if not graded.
    pub fn thinness_violation(&self) -> Result<Option<(usize, usize)>> {
        let rank = self.rank.as_ref().ok_or_else(|| Error::Precondition("poset is not graded".into()))?;
        for x in 0..self.len() {
            for y in self.up[x].iter() {
                if rank[y] == rank[x] + 2 && self.interval(x, y).len() != 4 {
                    return Ok(Some((x, y)));
                }
            }
        }
        Ok(None)
    }

    /// Bounded, graded, and every length-two interval is a diamond.
    pub fn is_thin(&self) -> Result<bool> {
        if !self.is_bounded() {
            return Err(Error::Precondition("poset is not bounded".into()));
        }
        Ok(self.thinness_violation()?.is_none())
    }

    /// Hasse diagram in DOT, drawn bottom to top.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph \"{name}\" {{\n  rankdir=BT;\n");
        for (i, l) in self.labels.iter().enumerate() {
            s.push_str(&format!("  n{i} [label=\"{}\"];\n", l.replace('"', "\\\"")));
        }
        for x in 0..self.len() {
            for &y in &self.upper_covers[x] {
                s.push_str(&format!("  n{x} -> n{y};\n"));
            }
        }
        s.push_str("}\n");
        s
    }
}

/// Boolean lattice on `k` atoms, elements indexed by bit mask.
pub fn boolean_lattice(k: usize) -> FinitePoset {
    let labels = (0..1usize << k)
        .map(|m| {
            let items: Vec<String> = (0..k).filter(|i| m >> i & 1 == 1).map(|i| format!("a{i}")).collect();
            format!("{{{}}}", items.join(","))
        })
        .collect();
    FinitePoset::from_leq(labels, |x, y| x & !y == 0).expect("subset order is a partial order")
}

/// The chain `0 < 1 < … < k-1`.
pub fn chain(k: usize) -> FinitePoset {
    FinitePoset::from_leq((0..k).map(|i| i.to_string()).collect(), |x, y| x <= y).expect("total order")
}
