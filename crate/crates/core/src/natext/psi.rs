use crate::arith::{ratio, RationalComplex};
use crate::diamond::partition_rows;
use crate::regions::{halfspace_contains, HalfSpace, Region};

use super::product::ProductSet;
use super::NatextError;

/// Iteration cap for [`build_psi`].
pub const MAX_PSI_ITERATIONS: usize = 10;

/// The trapping region `Ψ♦ = ⋃_{n≥0} F♦ⁿ(V♦)`.
///
/// Each `Z`-part is kept as a list of generalized disks, one list per
/// standard cell `W_k`; the full set is the symmetric product over those.
#[derive(Clone, Debug)]
pub struct PsiBuild {
    /// `parts[k-1]` are the disks and half-planes whose union is the
    /// `Z`-part over `W_k`.
    pub parts: [Vec<HalfSpace>; 5],
    /// The first `n` with `F♦ⁿ⁺¹(V♦) ⊆ ⋃_{m≤n} F♦ᵐ(V♦)`.
    pub stabilized_at: usize,
    /// Number of pieces over each `W_k` after each round, starting with
    /// `V♦` itself.
    pub history: Vec<[usize; 5]>,
}

impl PsiBuild {
    pub fn part(&self, k: u8) -> Region {
        self.parts[k as usize - 1]
            .iter()
            .fold(Region::empty(), |acc, h| {
                acc.union(&Region::from(h.clone()))
            })
    }

    pub fn product_set(&self) -> ProductSet {
        let parts: Vec<(u8, Region)> = (1..=5).map(|k| (k, self.part(k))).collect();
        ProductSet::symmetric_partial(&parts)
    }
}

/// Adds `h` unless an existing piece already contains it; drops existing
/// pieces that `h` contains. Returns whether `h` was added.
fn insert(acc: &mut Vec<HalfSpace>, h: HalfSpace) -> bool {
    if acc.iter().any(|p| halfspace_contains(p, &h)) {
        return false;
    }
    acc.retain(|p| !halfspace_contains(&h, p));
    acc.push(h);
    true
}

/// Forward-iterates `V♦` under `F♦` until no new piece appears.
///
/// A piece `P` over `W_k` is carried by the branch `h_k` of row `k` and
/// split over the image cells `ξ(W_j)`; by symmetry it suffices to record
/// `ξ⁻¹(h_k P)` over `W_j`. New pieces contained in a single existing
/// piece are discarded.
pub fn build_psi() -> Result<PsiBuild, NatextError> {
    let disk = HalfSpace::disk(&RationalComplex::zero(), &ratio(1, 1));
    let mut parts: [Vec<HalfSpace>; 5] = Default::default();
    let mut frontier: [Vec<HalfSpace>; 5] = Default::default();
    for k in [1, 2] {
        parts[k - 1].push(disk.clone());
        frontier[k - 1].push(disk.clone());
    }
    let mut history = vec![parts.clone().map(|p| p.len())];
    let rows = partition_rows();
    for round in 0..MAX_PSI_ITERATIONS {
        let mut next: [Vec<HalfSpace>; 5] = Default::default();
        for row in &rows {
            let h = row.branch.map();
            for piece in &frontier[row.k as usize - 1] {
                let moved = piece.moebius_image(&h);
                for cell in &row.image {
                    let q = moved.dihedral_image(cell.g.inverse());
                    let j = cell.k as usize - 1;
                    if insert(&mut parts[j], q.clone()) {
                        next[j].retain(|p| !halfspace_contains(&q, p));
                        next[j].push(q);
                    }
                }
            }
        }
        if next.iter().all(Vec::is_empty) {
            return Ok(PsiBuild {
                parts,
                stabilized_at: round,
                history,
            });
        }
        history.push(parts.clone().map(|p| p.len()));
        frontier = next;
    }
    Err(NatextError::NoStabilization {
        iterations: MAX_PSI_ITERATIONS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regions::Shape;

    #[test]
    fn stabilizes_with_unit_disks_and_half_planes() {
        let psi = build_psi().unwrap();
        assert_eq!(psi.stabilized_at, 4, "{:?}", psi.history);
        for h in psi.parts.iter().flatten() {
            match Shape::of(h) {
                Shape::Disk { r2, .. } => assert_eq!(r2, ratio(1, 1)),
                Shape::HalfPlane { .. } => {}
                other => panic!("unexpected piece {other:?}"),
            }
        }
    }
}
