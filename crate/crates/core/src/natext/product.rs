use serde::{Deserialize, Serialize};

use crate::arith::{in_fundamental_wedge, Complex, DihedralElement, FloatComplex};
use crate::diamond::diamond_sets;
use crate::regions::{Carrier, Position, Region};

/// One term `g(Zpart × W_k)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProductTerm {
    #[serde(rename = "dih")]
    pub g: DihedralElement,
    pub zpart: Region,
    pub k: u8,
}

/// A finite union of product terms `⋃ g(Zpart × W_k)`, closed.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ProductSet {
    pub terms: Vec<ProductTerm>,
}

/// Whether `w` can lie in some `g(W_k)`: `g⁻¹(w)` must be in the closed
/// wedge. Used only to skip terms quickly.
fn near_wedge(rep: &FloatComplex) -> bool {
    let tol = 1e-9;
    rep.im >= -tol && rep.im <= rep.re + tol
}

impl ProductSet {
    /// All eight symmetric copies of `Z_k × W_k` for `k = 1..5`.
    pub fn symmetric(zparts: &[Region; 5]) -> Self {
        let parts: Vec<(u8, Region)> = (1..=5)
            .map(|k| (k, zparts[k as usize - 1].clone()))
            .collect();
        Self::symmetric_partial(&parts)
    }

    /// All eight symmetric copies of each `Zpart × W_k` listed.
    pub fn symmetric_partial(parts: &[(u8, Region)]) -> Self {
        let mut terms = Vec::with_capacity(parts.len() * 8);
        for g in DihedralElement::ALL {
            for (k, z) in parts {
                terms.push(ProductTerm {
                    g,
                    zpart: z.clone(),
                    k: *k,
                });
            }
        }
        ProductSet { terms }
    }

    /// Closed membership: some term has `g⁻¹(w) ∈ W_k` and
    /// `g⁻¹(z) ∈ Zpart`.
    pub fn contains<T: Carrier>(&self, z: &Complex<T>, w: &Complex<T>) -> bool {
        let sets = diamond_sets();
        self.terms.iter().any(|t| {
            let gi = t.g.inverse();
            let wr = gi.apply(w);
            near_wedge(&wr.to_float())
                && T::in_region(sets.w(t.k), &wr)
                && T::in_region(&t.zpart, &gi.apply(z))
        })
    }

    /// Membership with slack `eps` on both coordinates.
    pub fn contains_f64(&self, z: &FloatComplex, w: &FloatComplex, eps: f64) -> bool {
        let sets = diamond_sets();
        self.terms.iter().any(|t| {
            let gi = t.g.inverse();
            let wr = gi.apply(w);
            near_wedge(&wr)
                && sets.w(t.k).contains_f64(&wr, eps)
                && t.zpart.contains_f64(&gi.apply(z), eps)
        })
    }

    /// Three-valued membership: `Inside` if some term holds with margin
    /// `eps` on both coordinates, `Outside` if every term fails by more than
    /// `eps` on some coordinate, `Boundary` otherwise.
    pub fn position_f64(&self, z: &FloatComplex, w: &FloatComplex, eps: f64) -> Position {
        let sets = diamond_sets();
        let mut pos = Position::Outside;
        for t in &self.terms {
            let gi = t.g.inverse();
            let wr = gi.apply(w);
            if !near_wedge(&wr) {
                continue;
            }
            let zr = gi.apply(z);
            let wm = sets.w(t.k).classify_f64(&wr, eps);
            let zm = t.zpart.classify_f64(&zr, eps);
            match (wm, zm) {
                (Ok(true), Ok(true)) => return Position::Inside,
                (Ok(false), _) | (_, Ok(false)) => {}
                _ => pos = Position::Boundary,
            }
        }
        pos
    }

    /// Terms whose `W`-cell is `g(W_k)` with `g⁻¹(w)` in the half-open
    /// wedge; at most one cell unless `w` is on a cell boundary.
    pub fn terms_at(&self, w: &FloatComplex) -> impl Iterator<Item = &ProductTerm> + '_ {
        let w = w.clone();
        self.terms
            .iter()
            .filter(move |t| in_fundamental_wedge(&t.g.inverse().apply(&w)))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}
