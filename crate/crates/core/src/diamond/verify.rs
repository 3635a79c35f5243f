use rayon::prelude::*;

use crate::arith::{DihedralElement, RationalComplex};
use crate::regions::{region_equal, region_sample, EqualityOptions, Rect, Region, RegionError};
use crate::report::{Status, SubCheck};

use super::map::{classify_cell, Branch, PartitionCell};
use super::sets::diamond_sets;

/// How `f♦` acts on `W_k` and which partition cells make up the image.
#[derive(Clone, Debug, PartialEq)]
pub struct PartitionRow {
    pub k: u8,
    pub branch: Branch,
    pub image: Vec<PartitionCell>,
}

/// The image table of `f♦` on the five standard cells.
pub fn partition_rows() -> Vec<PartitionRow> {
    use DihedralElement as D;
    let id = D::IDENTITY;
    let cells =
        |v: &[(DihedralElement, u8)]| v.iter().map(|&(g, k)| PartitionCell::new(g, k)).collect();
    vec![
        PartitionRow {
            k: 1,
            branch: Branch::TInv,
            image: cells(&[(id, 1), (id, 2), (id, 3), (id, 4), (id, 5)]),
        },
        PartitionRow {
            k: 2,
            branch: Branch::TInv,
            image: cells(&[(D::RHO, 2), (D::RHO, 3), (D::RHO, 4)]),
        },
        PartitionRow {
            k: 3,
            branch: Branch::TInv,
            image: cells(&[(D::RHO, 5), (D::IOTA, 5), (D::IOTA, 4)]),
        },
        PartitionRow {
            k: 4,
            branch: Branch::S,
            image: cells(&[(D::ETA, 2)]),
        },
        PartitionRow {
            k: 5,
            branch: Branch::S,
            image: cells(&[(D::ETA, 1)]),
        },
    ]
}

/// The branch of `f♦` on `W_k`.
pub fn cell_branch(k: u8) -> Branch {
    partition_rows()[k as usize - 1].branch
}

fn union(cells: &[PartitionCell]) -> Region {
    let sets = diamond_sets();
    cells
        .iter()
        .fold(Region::empty(), |acc, c| acc.union(&sets.cell(c.g, c.k)))
}

/// Region-equality checks for every row of the image table, then for
/// `Φ♦ = ⋃_ξ ξ(W₄ ∪ W₅)`.
pub fn verify_partition_lemma(opts: &EqualityOptions) -> Vec<SubCheck> {
    let sets = diamond_sets();
    let mut out: Vec<SubCheck> = partition_rows()
        .par_iter()
        .map(|row| {
            let lhs = sets.w(row.k).moebius_image(&row.branch.map());
            let rhs = union(&row.image);
            let names: Vec<String> = row.image.iter().map(|c| c.to_string()).collect();
            let name = format!("{}W{} = {}", row.branch, row.k, names.join(" + "));
            SubCheck::from_verdict(name, &region_equal(&lhs, &rhs, opts))
        })
        .collect();
    let folded = DihedralElement::ALL
        .iter()
        .fold(Region::empty(), |acc, &g| {
            acc.union(&sets.cell(g, 4)).union(&sets.cell(g, 5))
        });
    out.push(SubCheck::from_verdict(
        "Phi = union of g(W4) + g(W5)",
        &region_equal(&sets.phi, &folded, opts),
    ));
    out
}

/// Interior points of `W₂` land in `ρW₂ ∪ ρW₃ ∪ ρW₄` under `T⁻¹`.
pub fn check_w2_images(samples: usize, seed: u64, eps: f64) -> Result<SubCheck, RegionError> {
    let sets = diamond_sets();
    let pts = region_sample(sets.w(2), &Rect::square(4.0), samples, seed, eps)?;
    let allowed = &partition_rows()[1].image;
    let bad = pts.par_iter().find_first(|z| {
        let img = Branch::TInv.map().apply(*z).expect("translation");
        !allowed.contains(&classify_cell(&img).expect("nonzero"))
    });
    let name = "T^-1 of sampled W2 points classify into rho W2, rho W3, rho W4";
    Ok(match bad {
        None => SubCheck::new(name, Status::Pass, format!("{samples} points")),
        Some(z) => SubCheck::new(name, Status::Fail, "misclassified image").with_witness(
            z.to_string(),
            None,
            "",
        ),
    })
}

/// Cover, disjointness and equivariance of the 40 cells at seeded points.
///
/// Points within `eps` of a cell boundary are skipped. Every other point
/// must lie in the interior of exactly one cell `g(W_k)`, `classify_cell`
/// must return that cell, and `h(z)` must classify as `(h∘g, k)` for all
/// `h` in the symmetry group.
pub fn check_cover(samples: usize, seed: u64, eps: f64) -> SubCheck {
    let sets = diamond_sets();
    let cells = sets.all_cells();
    let pts =
        region_sample(&Region::plane(), &Rect::square(4.0), samples, seed, eps).expect("plane");
    let check = |z: &RationalComplex| -> Result<bool, String> {
        let f = z.to_float();
        let mut hit = None;
        for (g, k, r) in &cells {
            match r.classify_f64(&f, eps) {
                Err(_) => return Ok(false),
                Ok(true) if hit.is_some() => return Err("in two cells".into()),
                Ok(true) => hit = Some(PartitionCell::new(*g, *k)),
                Ok(false) => {}
            }
        }
        let cell = hit.ok_or("in no cell")?;
        if classify_cell(z).map_err(|e| e.to_string())? != cell {
            return Err(format!("classified differently from {cell}"));
        }
        for h in DihedralElement::ALL {
            let moved = classify_cell(&h.apply(z)).map_err(|e| e.to_string())?;
            if moved != PartitionCell::new(h.compose(cell.g), cell.k) {
                return Err(format!("{h} of the point classifies as {moved}"));
            }
        }
        Ok(true)
    };
    let results: Vec<Result<bool, String>> = pts.par_iter().map(check).collect();
    let name = "40 cells cover the plane once, equivariantly";
    match results.iter().position(|r| r.is_err()) {
        Some(i) => SubCheck::new(name, Status::Fail, results[i].clone().unwrap_err()).with_witness(
            pts[i].to_string(),
            None,
            "",
        ),
        None => {
            let used = results.iter().filter(|r| matches!(r, Ok(true))).count();
            SubCheck::new(
                name,
                Status::Pass,
                format!("{used} of {samples} points off the boundary tubes"),
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_hold_at_test_density() {
        for s in verify_partition_lemma(&EqualityOptions::quick()) {
            assert_eq!(s.status, Status::Pass, "{}: {}", s.name, s.detail);
        }
    }

    #[test]
    fn sampled_checks() {
        assert_eq!(check_w2_images(500, 7, 1e-9).unwrap().status, Status::Pass);
        let c = check_cover(2000, 3, 1e-9);
        assert_eq!(c.status, Status::Pass, "{}", c.detail);
    }
}
