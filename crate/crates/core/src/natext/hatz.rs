use serde::Serialize;

use crate::arith::DihedralElement;
use crate::diamond::{partition_rows, Branch};
use crate::regions::Region;

use super::sets::natext_sets;

/// One piece `ξ⁻¹(h_j Z_j)` of `Ẑ_k`: the part of `F♦(Z_j × W_j)` that
/// lands over the cell `ξ(W_k)`, pulled back by `ξ`.
#[derive(Clone, Debug, Serialize)]
pub struct HatZPiece {
    /// The row `j` the piece comes from.
    pub source: u8,
    pub branch: Branch,
    #[serde(rename = "dih")]
    pub xi: DihedralElement,
    #[serde(skip)]
    pub region: Region,
}

#[derive(Clone, Debug, Serialize)]
pub struct HatZ {
    pub k: u8,
    pub pieces: Vec<HatZPiece>,
    #[serde(skip)]
    pub region: Region,
}

/// `Ẑ_k`, read off the image table: every row `j` whose image contains a
/// cell `ξ(W_k)` contributes `ξ⁻¹(h_j Z_j)`.
pub fn hat_z(k: u8) -> HatZ {
    let sets = natext_sets();
    let mut pieces = Vec::new();
    for row in partition_rows() {
        let moved = sets.z(row.k).moebius_image(&row.branch.map());
        for cell in row.image.iter().filter(|c| c.k == k) {
            pieces.push(HatZPiece {
                source: row.k,
                branch: row.branch,
                xi: cell.g,
                region: moved.dihedral_image(cell.g.inverse()),
            });
        }
    }
    let region = pieces
        .iter()
        .fold(Region::empty(), |acc, p| acc.union(&p.region));
    HatZ { k, pieces, region }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn piece_counts() {
        let counts: Vec<usize> = (1..=5).map(|k| hat_z(k).pieces.len()).collect();
        assert_eq!(counts, vec![2, 3, 2, 3, 3]);
    }
}
