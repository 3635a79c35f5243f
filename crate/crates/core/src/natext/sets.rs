use std::sync::OnceLock;

use crate::arith::{ratio, RationalComplex};
use crate::regions::{Cell, HalfSpace, Region};

use super::product::ProductSet;

fn unit_disk(x: i64, y: i64) -> Region {
    Region::from(HalfSpace::disk(
        &RationalComplex::from_ints(x, y),
        &ratio(1, 1),
    ))
}

fn outside_unit(x: i64, y: i64) -> HalfSpace {
    HalfSpace::disk_exterior(&RationalComplex::from_ints(x, y), &ratio(1, 1))
}

fn unions(parts: Vec<Region>) -> Region {
    parts.iter().fold(Region::empty(), |acc, r| acc.union(r))
}

/// Static sets of the natural extension.
#[derive(Clone, Debug)]
pub struct NatExtSets {
    /// `Z₁ … Z₅` (index 0 holds `Z₁`).
    pub z: [Region; 5],
    /// The closed forms `A₁ … A₅` of the trapping region's parts.
    pub a: [Region; 5],
    /// `D♦ = ⋃_ξ ⋃_k ξ(Z_k × W_k)`.
    pub d: ProductSet,
    /// `V♦ = 𝔻̄ × S(Φ♦)`, as `𝔻̄ × (W₁ ∪ W₂)` over all symmetric copies.
    pub v: ProductSet,
}

impl NatExtSets {
    fn build() -> Self {
        let h = ratio(1, 2);
        let re_le_half = HalfSpace::re_le(h.clone());
        let z = [
            Cell::new(vec![
                re_le_half.clone(),
                HalfSpace::im_le(h.clone()),
                HalfSpace::im_ge(-h.clone()),
                outside_unit(1, 0),
            ]),
            Cell::new(vec![
                re_le_half.clone(),
                HalfSpace::im_le(h.clone()),
                outside_unit(1, 0),
            ]),
            Cell::new(vec![
                re_le_half.clone(),
                HalfSpace::im_le(h.clone()),
                outside_unit(0, 0),
            ]),
            Cell::new(vec![
                re_le_half.clone(),
                outside_unit(0, 0),
                outside_unit(0, 1),
            ]),
            Cell::new(vec![
                re_le_half,
                outside_unit(0, 0),
                outside_unit(0, 1),
                outside_unit(0, -1),
            ]),
        ]
        .map(Region::from);
        let left = || Region::from(HalfSpace::re_le(ratio(-1, 2)));
        let below = |t: (i64, i64)| Region::from(HalfSpace::im_le(ratio(t.0, t.1)));
        let above = |t: (i64, i64)| Region::from(HalfSpace::im_ge(ratio(t.0, t.1)));
        let a = [
            unions(vec![
                unit_disk(0, 0),
                unit_disk(-1, 1),
                unit_disk(-1, -1),
                left(),
            ]),
            unions(vec![
                unit_disk(0, 0),
                unit_disk(-1, 1),
                left(),
                below((-1, 2)),
            ]),
            unions(vec![
                unit_disk(-1, 0),
                unit_disk(0, -1),
                unit_disk(1, -2),
                left(),
                below((-3, 2)),
            ]),
            unions(vec![
                unit_disk(0, 2),
                unit_disk(-1, 1),
                unit_disk(-1, 0),
                unit_disk(0, -1),
                unit_disk(1, -2),
                left(),
                above((3, 2)),
                below((-3, 2)),
            ]),
            unions(vec![
                unit_disk(0, 2),
                unit_disk(0, -2),
                unit_disk(-1, 1),
                unit_disk(-1, -1),
                unit_disk(-1, 0),
                left(),
                above((3, 2)),
                below((-3, 2)),
            ]),
        ];
        let d = ProductSet::symmetric(&z);
        let disk = unit_disk(0, 0);
        let v = ProductSet::symmetric_partial(&[(1, disk.clone()), (2, disk)]);
        NatExtSets { z, a, d, v }
    }

    pub fn z(&self, k: u8) -> &Region {
        &self.z[k as usize - 1]
    }

    pub fn a(&self, k: u8) -> &Region {
        &self.a[k as usize - 1]
    }
}

/// The shared registry, built on first use.
pub fn natext_sets() -> &'static NatExtSets {
    static SETS: OnceLock<NatExtSets> = OnceLock::new();
    SETS.get_or_init(NatExtSets::build)
}
