use std::sync::OnceLock;

use num_rational::BigRational;

use crate::arith::{ratio, DihedralElement, RationalComplex};
use crate::regions::{Cell, HalfSpace, Region};

fn q(n: i64) -> BigRational {
    ratio(n, 1)
}

/// `{p·x + q·y + r ≤ 0}` with integer coefficients.
pub(crate) fn lin(p: i64, qq: i64, r: i64) -> HalfSpace {
    HalfSpace::linear(q(p), q(qq), q(r)).expect("nondegenerate")
}

/// The closed fundamental set and the five standard partition cells.
#[derive(Clone, Debug)]
pub struct DiamondSets {
    /// `|x| + |y| ≤ 1`
    pub phi: Region,
    /// The closed wedge `0 ≤ Im w ≤ Re w`.
    pub wedge: Cell,
    /// `W₁ … W₅` (index 0 holds `W₁`).
    pub w: [Region; 5],
}

impl DiamondSets {
    fn build() -> Self {
        let half = ratio(1, 2);
        let upper = RationalComplex::new(ratio(1, 2), ratio(1, 2));
        let lower = RationalComplex::new(ratio(1, 2), ratio(-1, 2));
        let wedge = vec![HalfSpace::im_ge(q(0)), lin(-1, 1, 0)];
        let cell = |extra: Vec<HalfSpace>| {
            let mut c = wedge.clone();
            c.extend(extra);
            Region::from(Cell::new(c))
        };
        DiamondSets {
            phi: Region::from(Cell::new(vec![
                lin(1, 1, -1),
                lin(1, -1, -1),
                lin(-1, 1, -1),
                lin(-1, -1, -1),
            ])),
            wedge: Cell::new(wedge.clone()),
            w: [
                cell(vec![lin(-1, 1, 1)]),
                cell(vec![
                    lin(1, -1, -1),
                    HalfSpace::disk_exterior(&upper, &half),
                ]),
                cell(vec![lin(-1, -1, 1), HalfSpace::disk(&upper, &half)]),
                cell(vec![lin(1, 1, -1), HalfSpace::disk_exterior(&lower, &half)]),
                cell(vec![HalfSpace::disk(&lower, &half)]),
            ],
        }
    }

    /// `W_k` for `k` in `1..=5`.
    pub fn w(&self, k: u8) -> &Region {
        &self.w[k as usize - 1]
    }

    /// `g(W_k)`.
    pub fn cell(&self, g: DihedralElement, k: u8) -> Region {
        self.w(k).dihedral_image(g)
    }

    /// All 40 cells `g(W_k)`, in the order `(g, k)` with `g` outermost.
    pub fn all_cells(&self) -> Vec<(DihedralElement, u8, Region)> {
        DihedralElement::ALL
            .iter()
            .flat_map(|&g| (1..=5).map(move |k| (g, k)))
            .map(|(g, k)| (g, k, self.cell(g, k)))
            .collect()
    }
}

/// The shared registry, built on first use.
pub fn diamond_sets() -> &'static DiamondSets {
    static SETS: OnceLock<DiamondSets> = OnceLock::new();
    SETS.get_or_init(DiamondSets::build)
}
