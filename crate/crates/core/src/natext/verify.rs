use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::{DihedralElement, FloatComplex, RationalComplex};
use crate::diamond::{branch_of, diamond_sets, Branch};
use crate::regions::{
    certify_region_subset, halfspace_contains, region_equal, region_sample, EqualityOptions,
    HalfSpace, Position, Rect, Region, RegionError, Shape,
};
use crate::report::{Status, SubCheck};

use super::hatz::hat_z;
use super::map::{big_f_diamond, orbit_until_v};
use super::product::ProductSet;
use super::psi::{build_psi, PsiBuild};
use super::sets::natext_sets;

/// Box budget for exact subset certificates.
const CERTIFY_BOXES: usize = 200_000;

fn sample_rect() -> Rect {
    Rect::square(4.0)
}

/// Seeded interior points of a symmetric product set: `n` pairs spread
/// over the listed `Z`-parts, each moved by a random symmetry.
fn sample_product(
    parts: &[(u8, Region)],
    n: usize,
    seed: u64,
    eps: f64,
) -> Result<Vec<(RationalComplex, RationalComplex)>, RegionError> {
    let sets = diamond_sets();
    let per = n.div_ceil(parts.len());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(per * parts.len());
    for (i, (k, zpart)) in parts.iter().enumerate() {
        let s = seed.wrapping_mul(31).wrapping_add(2 * i as u64 + 1);
        let zs = region_sample(zpart, &sample_rect(), per, s, eps)?;
        let ws = region_sample(sets.w(*k), &sample_rect(), per, s.wrapping_add(1), eps)?;
        for (z, w) in zs.into_iter().zip(ws) {
            let g = DihedralElement::ALL[rng.gen_range(0..8)];
            out.push((g.apply(&z), g.apply(&w)));
        }
    }
    out.truncate(n);
    Ok(out)
}

fn pair_witness(check: SubCheck, z: &RationalComplex, w: &RationalComplex, note: &str) -> SubCheck {
    check.with_witness(z.to_string(), Some(w.to_string()), note)
}

/// `F♦` maps sampled interior points of `set` back into `set`.
fn forward_invariance(
    name: &str,
    set: &ProductSet,
    parts: &[(u8, Region)],
    samples: usize,
    seed: u64,
    eps: f64,
) -> SubCheck {
    let pts = match sample_product(parts, samples, seed, eps) {
        Ok(p) => p,
        Err(e) => return SubCheck::new(name, Status::Inconclusive, e.to_string()),
    };
    let bad = pts
        .par_iter()
        .find_first(|(z, w)| match big_f_diamond(z, w) {
            Ok((z1, w1)) => !set.contains(&z1, &w1),
            Err(_) => true,
        });
    match bad {
        None => SubCheck::new(name, Status::Pass, format!("{} points", pts.len())),
        Some((z, w)) => pair_witness(
            SubCheck::new(name, Status::Fail, "image left the set"),
            z,
            w,
            "preimage",
        ),
    }
}

enum Injective {
    Unique,
    Excluded,
    Failed(String),
}

/// Of the five branch inverses, exactly one may send the image point to a
/// preimage in `D♦` on which it is the branch used.
fn preimage_count(z: &RationalComplex, w: &RationalComplex, eps: f64) -> Injective {
    let Ok((z1, w1)) = big_f_diamond(z, w) else {
        return Injective::Failed("map undefined".into());
    };
    let d = &natext_sets().d;
    let mut inside = Vec::new();
    let mut ambiguous = false;
    for b in Branch::ALL {
        let inv = b.map().inverse();
        let (Ok(z0), Ok(w0)) = (inv.apply(&z1), inv.apply(&w1)) else {
            continue;
        };
        if branch_of(&w0) != b {
            continue;
        }
        match d.position_f64(&z0.to_float(), &w0.to_float(), eps) {
            Position::Inside => inside.push((b, z0, w0)),
            Position::Boundary => ambiguous = true,
            Position::Outside => {}
        }
    }
    match inside.as_slice() {
        [(_, z0, w0)] if z0 == z && w0 == w => Injective::Unique,
        [(b, ..)] => Injective::Failed(format!(
            "the only preimage is via {b}, not the original point"
        )),
        [] if ambiguous => Injective::Excluded,
        [] => Injective::Failed("original point not recovered".into()),
        many => Injective::Failed(format!("{} preimages in D", many.len())),
    }
}

/// Bijectivity of `F♦` on `D♦`: `Ẑ_k = Z_k`, the pieces of each `Ẑ_k` do
/// not overlap, forward invariance and injectivity at sampled points.
pub fn verify_bijectivity(
    opts: &EqualityOptions,
    samples: usize,
    seed: u64,
    eps: f64,
) -> Vec<SubCheck> {
    let sets = natext_sets();
    let mut out: Vec<SubCheck> = (1..=5u8)
        .into_par_iter()
        .map(|k| {
            let h = hat_z(k);
            SubCheck::from_verdict(
                format!("hatZ{k} = Z{k}"),
                &region_equal(&h.region, sets.z(k), opts),
            )
        })
        .collect();
    let overlaps: Vec<SubCheck> = (1..=5u8)
        .into_par_iter()
        .map(|k| {
            let h = hat_z(k);
            let name = format!("pieces of hatZ{k} are disjoint");
            let mut checks = Vec::new();
            for i in 0..h.pieces.len() {
                for j in i + 1..h.pieces.len() {
                    let meet = h.pieces[i].region.intersect(&h.pieces[j].region);
                    checks.push(SubCheck::from_verdict(
                        &name,
                        &region_equal(&meet, &Region::empty(), opts),
                    ));
                }
            }
            match checks.iter().find(|c| c.status != Status::Pass) {
                Some(c) => c.clone(),
                None => SubCheck::new(name, Status::Pass, format!("{} pairs", checks.len())),
            }
        })
        .collect();
    out.extend(overlaps);
    let zparts: Vec<(u8, Region)> = (1..=5).map(|k| (k, sets.z(k).clone())).collect();
    out.push(forward_invariance(
        "F maps D into D",
        &sets.d,
        &zparts,
        samples,
        seed,
        eps,
    ));

    let name = "F is injective on D";
    out.push(
        match sample_product(&zparts, samples, seed.wrapping_add(1), eps) {
            Err(e) => SubCheck::new(name, Status::Inconclusive, e.to_string()),
            Ok(pts) => {
                let res: Vec<Injective> = pts
                    .par_iter()
                    .map(|(z, w)| preimage_count(z, w, eps))
                    .collect();
                let excluded = res
                    .iter()
                    .filter(|r| matches!(r, Injective::Excluded))
                    .count();
                match res.iter().position(|r| matches!(r, Injective::Failed(_))) {
                    Some(i) => {
                        let Injective::Failed(why) = &res[i] else {
                            unreachable!()
                        };
                        pair_witness(
                            SubCheck::new(name, Status::Fail, why.clone()),
                            &pts[i].0,
                            &pts[i].1,
                            "",
                        )
                    }
                    None => SubCheck::new(
                        name,
                        Status::Pass,
                        format!("{} points, {excluded} in boundary tubes", pts.len()),
                    ),
                }
            }
        },
    );
    out
}

/// Checks on the trapping region: stabilization, the closed forms `A_k`,
/// `Z_k ⊆ A_k`, `V♦ ⊆ Ψ♦`, the shape of the pieces and forward invariance.
pub fn verify_psi(
    opts: &EqualityOptions,
    samples: usize,
    seed: u64,
    eps: f64,
) -> (Option<PsiBuild>, Vec<SubCheck>) {
    let psi = match build_psi() {
        Ok(p) => p,
        Err(e) => {
            return (
                None,
                vec![SubCheck::new("Psi stabilizes", Status::Fail, e.to_string())],
            )
        }
    };
    let sets = natext_sets();
    let mut out = vec![SubCheck::new(
        "Psi stabilizes at n = 4",
        Status::from_bool(psi.stabilized_at == 4),
        format!("stabilized at n = {}", psi.stabilized_at),
    )];
    let parts: Vec<(u8, Region)> = (1..=5).map(|k| (k, psi.part(k))).collect();
    let per_k: Vec<SubCheck> = (1..=5u8)
        .into_par_iter()
        .flat_map_iter(|k| {
            let part = &parts[k as usize - 1].1;
            [
                SubCheck::from_verdict(
                    format!("Psi part over W{k} = A{k}"),
                    &region_equal(part, sets.a(k), opts),
                ),
                SubCheck::from_certificate(
                    format!("Z{k} inside A{k}"),
                    &certify_region_subset(sets.z(k), sets.a(k), CERTIFY_BOXES),
                ),
            ]
        })
        .collect();
    out.extend(per_k);
    let disk = HalfSpace::disk(&RationalComplex::zero(), &crate::arith::ratio(1, 1));
    for k in [1u8, 2] {
        let name = format!("V inside Psi over W{k}");
        // The unit disk is itself a piece, so boundaries touch: try exact
        // single-piece containment before subdividing.
        out.push(
            match psi.parts[k as usize - 1]
                .iter()
                .find(|p| halfspace_contains(p, &disk))
            {
                Some(p) => SubCheck::new(name, Status::Pass, format!("contained in the piece {p}")),
                None => SubCheck::from_certificate(
                    name,
                    &certify_region_subset(
                        &Region::from(disk.clone()),
                        &parts[k as usize - 1].1,
                        CERTIFY_BOXES,
                    ),
                ),
            },
        );
    }
    let odd = psi.parts.iter().flatten().find(|h| match Shape::of(h) {
        Shape::Disk { r2, .. } => r2 != crate::arith::ratio(1, 1),
        Shape::HalfPlane { .. } => false,
        _ => true,
    });
    let name = "pieces are closed unit disks or half-planes";
    out.push(match odd {
        None => SubCheck::new(
            name,
            Status::Pass,
            format!("{} pieces", psi.parts.iter().flatten().count()),
        ),
        Some(h) => SubCheck::new(name, Status::Fail, h.to_string()),
    });
    out.push(forward_invariance(
        "F maps Psi into Psi",
        &psi.product_set(),
        &parts,
        samples,
        seed,
        eps,
    ));
    (Some(psi), out)
}

/// Random starts enter `V♦` within `entry` steps and then stay in `Ψ♦`
/// (up to `eps`) for `stay` further steps.
///
/// Starts are uniform in `[−5, 5]⁴` with `|z − w| > 0.1`.
pub fn check_trapping(
    pairs: usize,
    seed: u64,
    entry: usize,
    stay: usize,
    eps: f64,
) -> Vec<SubCheck> {
    let psi = match build_psi() {
        Ok(p) => p.product_set(),
        Err(e) => return vec![SubCheck::new("Psi stabilizes", Status::Fail, e.to_string())],
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rect = Rect::square(5.0);
    let mut starts = Vec::with_capacity(pairs);
    while starts.len() < pairs {
        let (z, w) = (rect.uniform(&mut rng), rect.uniform(&mut rng));
        if (z.clone() - w.clone()).abs() > 0.1 {
            starts.push((z, w));
        }
    }
    let run = |(z, w): &(FloatComplex, FloatComplex)| -> Result<usize, String> {
        let o = orbit_until_v(z, w, entry).map_err(|e| format!("entry: {e}"))?;
        let (mut z, mut w) = (o.z, o.w);
        for i in 0..stay {
            if !psi.contains_f64(&z, &w, eps) {
                return Err(format!("left Psi after {i} steps in"));
            }
            (z, w) = big_f_diamond(&z, &w).map_err(|e| e.to_string())?;
        }
        Ok(o.steps)
    };
    let res: Vec<Result<usize, String>> = starts.par_iter().map(run).collect();
    let entry_fail = res
        .iter()
        .position(|r| matches!(r, Err(e) if e.starts_with("entry")));
    let stay_fail = res
        .iter()
        .position(|r| matches!(r, Err(e) if !e.starts_with("entry")));
    let longest = res
        .iter()
        .filter_map(|r| r.as_ref().ok())
        .max()
        .copied()
        .unwrap_or(0);
    let report = |name: String, fail: Option<usize>, ok: String| match fail {
        None => SubCheck::new(name, Status::Pass, ok),
        Some(i) => SubCheck::new(name, Status::Fail, res[i].clone().unwrap_err()).with_witness(
            starts[i].0.to_string(),
            Some(starts[i].1.to_string()),
            "start",
        ),
    };
    vec![
        report(
            format!("orbits enter V within {entry} steps"),
            entry_fail,
            format!("{pairs} starts, longest entry {longest} steps"),
        ),
        report(
            format!("orbits stay in Psi for {stay} steps"),
            stay_fail,
            format!("{pairs} starts"),
        ),
    ]
}
