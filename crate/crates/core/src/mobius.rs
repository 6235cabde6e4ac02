use crate::arith::QuadElem;
use crate::error::{Error, Result};

/// The Möbius map `x ↦ (a·x + b)/(c·x + d)`, also read as the matrix
/// `(a b; c d)` acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mobius {
    pub a: QuadElem,
    pub b: QuadElem,
    pub c: QuadElem,
    pub d: QuadElem,
}

impl Mobius {
    pub fn new(a: QuadElem, b: QuadElem, c: QuadElem, d: QuadElem) -> Self {
        Mobius { a, b, c, d }
    }

    pub fn det(&self) -> QuadElem {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    /// Image of a finite point; errors when it is sent to infinity.
    pub fn apply(&self, x: &QuadElem) -> Result<QuadElem> {
        let num = &(&self.a * x) + &self.b;
        let den = &(&self.c * x) + &self.d;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        num.try_div(&den)
    }

    /// Matrix times column vector `(x, y)`.
    pub fn apply_vector(&self, x: &QuadElem, y: &QuadElem) -> (QuadElem, QuadElem) {
        (
            &(&self.a * x) + &(&self.b * y),
            &(&self.c * x) + &(&self.d * y),
        )
    }

    /// The adjugate, which is the inverse map.
    pub fn inverse(&self) -> Mobius {
        Mobius::new(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    pub fn compose(&self, inner: &Mobius) -> Mobius {
        Mobius::new(
            &(&self.a * &inner.a) + &(&self.b * &inner.c),
            &(&self.a * &inner.b) + &(&self.b * &inner.d),
            &(&self.c * &inner.a) + &(&self.d * &inner.c),
            &(&self.c * &inner.b) + &(&self.d * &inner.d),
        )
    }
}
