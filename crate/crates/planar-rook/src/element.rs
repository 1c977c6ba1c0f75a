//! Elements of the planar rook algebra: finite formal sums of planar diagrams
//! with Laurent-polynomial coefficients, multiplied by the distributive law.

use std::collections::BTreeMap;
use std::fmt;

use crate::diagram::{p2_basis, PlanarDiagram};
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

/// An element of `CP_n`. Zero coefficients are pruned eagerly, so equality of
/// values is equality of term maps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    n: usize,
    terms: BTreeMap<PlanarDiagram, LaurentPoly>,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative identity, `1 * identity diagram`.
    pub fn identity(n: usize) -> Self {
        Self::from_diagram(PlanarDiagram::identity(n))
    }

    pub fn from_diagram(d: PlanarDiagram) -> Self {
        let n = d.n();
        let mut terms = BTreeMap::new();
        terms.insert(d, LaurentPoly::one());
        Self { n, terms }
    }

    pub fn from_terms(
        n: usize,
        it: impl IntoIterator<Item = (PlanarDiagram, LaurentPoly)>,
    ) -> Result<Self> {
        let mut out = Self::zero(n);
        for (d, c) in it {
            if d.n() != n {
                return Err(Error::SizeMismatch(n, d.n()));
            }
            out.accumulate(d, c);
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlanarDiagram, &LaurentPoly)> {
        self.terms.iter()
    }

    /// Coefficient of a diagram (zero when absent).
    pub fn coeff(&self, d: &PlanarDiagram) -> LaurentPoly {
        self.terms.get(d).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    fn accumulate(&mut self, d: PlanarDiagram, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&d) {
            Some(existing) => {
                *existing = existing.add_ref(&c);
                if existing.is_zero() {
                    self.terms.remove(&d);
                }
            }
            None => {
                self.terms.insert(d, c);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::SizeMismatch(self.n, rhs.n));
        }
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.accumulate(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.scale(&LaurentPoly::from_int(-1)))
    }

    pub fn scale(&self, by: &LaurentPoly) -> Self {
        if by.is_zero() {
            return Self::zero(self.n);
        }
        let mut out = Self::zero(self.n);
        for (d, c) in &self.terms {
            out.accumulate(d.clone(), c.mul_ref(by));
        }
        out
    }

    /// Bilinear extension of diagram composition.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::SizeMismatch(self.n, rhs.n));
        }
        let mut out = Self::zero(self.n);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &rhs.terms {
                let d = d1.compose(d2)?;
                out.accumulate(d, c1.mul_ref(c2));
            }
        }
        Ok(out)
    }

    /// Bilinear extension of the diagram tensor product.
    pub fn tensor(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.n + rhs.n);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &rhs.terms {
                out.accumulate(d1.tensor(d2), c1.mul_ref(c2));
            }
        }
        out
    }

    /// Applies a map to every coefficient, pruning any that become zero.
    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        let mut out = Self::zero(self.n);
        for (d, c) in &self.terms {
            out.accumulate(d.clone(), f(c));
        }
        out
    }
}

/// Places a two-strand element at strands `i, i+1` of `CP_n`, padding with
/// identity strands on both sides.
pub fn embed_p2(g: &AlgebraElement, i: usize, n: usize) -> Result<AlgebraElement> {
    if g.n() != 2 {
        return Err(Error::SizeMismatch(2, g.n()));
    }
    if i < 1 || i + 1 > n {
        return Err(Error::IndexOutOfRange(format!(
            "strand pair ({i}, {}) outside 1..={n}",
            i + 1
        )));
    }
    let left = AlgebraElement::identity(i - 1);
    let right = AlgebraElement::identity(n - i - 1);
    Ok(left.tensor(g).tensor(&right))
}

/// The element `sum coeffs[j] * d_{j+1}` of `CP_2` over the six-diagram basis.
pub fn p2_element(coeffs: &[LaurentPoly; 6]) -> AlgebraElement {
    let basis = p2_basis();
    AlgebraElement::from_terms(2, basis.into_iter().zip(coeffs.iter().cloned()))
        .expect("basis diagrams all live in P_2")
}

impl fmt::Display for AlgebraElement {
    /// One `coefficient * diagram` per line in diagram order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "({c}) * ({d})")?;
        }
        Ok(())
    }
}
