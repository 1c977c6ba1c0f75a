//! Planar rook diagrams and their monoid structure.
//!
//! A diagram on `n` strands is an order-preserving partial injection from
//! bottom labels to top labels; those are exactly the rook diagrams drawable
//! without crossings, and there are `binomial(2n, n)` of them.

use std::fmt;

use crate::error::{Error, Result};

/// Hard cap for exhaustive enumeration (`binomial(12, 6) = 924` diagrams).
pub const ENUM_CAP: usize = 6;

/// An order-preserving partial injection `{1..n} -> {1..n}`, stored as edge
/// pairs `(bottom, top)` sorted by bottom label.
///
/// Invariant: bottom labels strictly increase along the list and so do top
/// labels; that single condition encodes planarity and rules out repeats.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PlanarDiagram {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl PlanarDiagram {
    /// Builds a diagram after validating labels and planarity.
    pub fn new(n: usize, mut edges: Vec<(usize, usize)>) -> Result<Self> {
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0].0 == w[1].0 || w[0].1 >= w[1].1 {
                return Err(Error::IndexOutOfRange(format!(
                    "edges {:?} and {:?} violate planarity",
                    w[0], w[1]
                )));
            }
        }
        for &(b, t) in &edges {
            if b < 1 || b > n || t < 1 || t > n {
                return Err(Error::IndexOutOfRange(format!(
                    "edge ({b}, {t}) outside 1..={n}"
                )));
            }
        }
        Ok(Self { n, edges })
    }

    /// Identity diagram: a vertical line at every label.
    pub fn identity(n: usize) -> Self {
        Self {
            n,
            edges: (1..=n).map(|i| (i, i)).collect(),
        }
    }

    /// The edgeless diagram.
    pub fn empty(n: usize) -> Self {
        Self { n, edges: vec![] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Top neighbor of a bottom label, if the label is edge-incident.
    pub fn image_of(&self, bottom: usize) -> Option<usize> {
        self.edges
            .binary_search_by_key(&bottom, |&(b, _)| b)
            .ok()
            .map(|i| self.edges[i].1)
    }

    /// Edge-incident bottom labels (the domain of the partial injection).
    pub fn bottom_support(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().map(|&(b, _)| b)
    }

    /// Stacks `self` on top of `other` and deletes edges that run into dead
    /// ends, i.e. composes the partial maps: the result sends `b` to `t` iff
    /// `other` sends `b` to some `j` and `self` sends `j` to `t`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let edges = other
            .edges
            .iter()
            .filter_map(|&(b, j)| self.image_of(j).map(|t| (b, t)))
            .collect();
        // composites of order-preserving injections are order-preserving
        Ok(Self { n: self.n, edges })
    }

    /// Appends `other` to the right, shifting its labels up by `self.n`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(b, t)| (b + self.n, t + self.n)));
        Self {
            n: self.n + other.n,
            edges,
        }
    }

    /// Number of vertical lines, edges of the form `(i, i)`.
    pub fn vertical_line_count(&self) -> usize {
        self.edges.iter().filter(|&&(b, t)| b == t).count()
    }

    pub fn has_edge(&self, bottom: usize, top: usize) -> bool {
        self.image_of(bottom) == Some(top)
    }
}

impl fmt::Display for PlanarDiagram {
    /// `n; b1->t1, b2->t2, ...` with sorted pairs; just `n;` when edgeless.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.n)?;
        for (i, (b, t)) in self.edges.iter().enumerate() {
            if i == 0 {
                write!(f, " {b}->{t}")?;
            } else {
                write!(f, ", {b}->{t}")?;
            }
        }
        Ok(())
    }
}

/// `binomial(n, k)` as an exact integer (sizes here stay tiny).
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// All `k`-element subsets of `{1..n}` in lexicographic order of sorted tuples.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}

/// All planar diagrams on `n` strands: choose `k` bottoms and `k` tops for
/// each `k`, paired in the unique order-preserving way.
pub fn enumerate_planar(n: usize) -> Result<Vec<PlanarDiagram>> {
    if n > ENUM_CAP {
        return Err(Error::CapExceeded { n, cap: ENUM_CAP });
    }
    let mut out = Vec::new();
    for k in 0..=n {
        for bottoms in combinations(n, k) {
            for tops in combinations(n, k) {
                let edges = bottoms.iter().copied().zip(tops.iter().copied()).collect();
                out.push(PlanarDiagram { n, edges });
            }
        }
    }
    Ok(out)
}

/// The six diagrams of `P_2` in their conventional order: empty, vertical at
/// 1, up-slash `1->2`, down-slash `2->1`, vertical at 2, identity.
pub fn p2_basis() -> [PlanarDiagram; 6] {
    let d = |edges: Vec<(usize, usize)>| PlanarDiagram { n: 2, edges };
    [
        d(vec![]),
        d(vec![(1, 1)]),
        d(vec![(1, 2)]),
        d(vec![(2, 1)]),
        d(vec![(2, 2)]),
        d(vec![(1, 1), (2, 2)]),
    ]
}
