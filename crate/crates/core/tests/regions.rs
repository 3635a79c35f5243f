use cfdyn::arith::{ratio, DihedralElement, MoebiusMap, RationalComplex};
use cfdyn::regions::{
    certify_subset, region_equal, Cell, Certificate, Circline, EqualityOptions, HalfSpace,
    Position, Region,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn q(n: i64, d: i64) -> BigRational {
    ratio(n, d)
}

fn words() -> Vec<MoebiusMap> {
    let gens = [
        MoebiusMap::t(),
        MoebiusMap::t_inv(),
        MoebiusMap::u(),
        MoebiusMap::u_inv(),
        MoebiusMap::s(),
    ];
    let mut out = vec![MoebiusMap::identity()];
    let mut layer = vec![MoebiusMap::identity()];
    for _ in 0..3 {
        layer = layer
            .iter()
            .flat_map(|m| gens.iter().map(move |g| g.compose(m)))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// A rational point on the circle of centre `c` and radius `r`, from the
/// rational parametrisation of the unit circle.
fn on_circle(c: &RationalComplex, r: &BigRational, t: &BigRational) -> RationalComplex {
    let one = BigRational::from_integer(BigInt::from(1));
    let den = &one + t * t;
    let x = (&one - t * t) / &den;
    let y = (t * BigRational::from_integer(BigInt::from(2))) / &den;
    RationalComplex::new(&c.re + r * x, &c.im + r * y)
}

fn small() -> impl Strategy<Value = BigRational> {
    (-40i64..40, 1i64..9).prop_map(|(n, d)| q(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn moebius_images_carry_points_and_sides(
        cx in small(), cy in small(), r in (1i64..12, 1i64..5), t in small(),
        word in 0usize..156,
    ) {
        let m = &words()[word];
        let c = RationalComplex::new(cx, cy);
        let r = q(r.0, r.1);
        let disk = HalfSpace::disk(&c, &(&r * &r));
        let image = disk.moebius_image(m);
        let p = on_circle(&c, &r, &t);
        if let Ok(mp) = m.apply(&p) {
            prop_assert_eq!(image.position_exact(&mp), Position::Boundary);
        }
        // the centre is strictly inside; its image must be too
        if let Ok(mc) = m.apply(&c) {
            prop_assert_eq!(image.position_exact(&mc), Position::Inside);
        }
        // a point well outside stays outside
        let far = RationalComplex::new(&c.re + &r * q(3, 1), c.im.clone());
        if let Ok(mf) = m.apply(&far) {
            prop_assert_eq!(image.position_exact(&mf), Position::Outside);
        }
    }

    #[test]
    fn dihedral_images_match_pointwise(
        cx in small(), cy in small(), r in (1i64..12, 1i64..5), px in small(), py in small(), g in 0usize..8,
    ) {
        let g = DihedralElement::ALL[g];
        let h = HalfSpace::disk_exterior(&RationalComplex::new(cx, cy), &q(r.0 * r.0, r.1 * r.1));
        let p = RationalComplex::new(px, py);
        prop_assert_eq!(h.dihedral_image(g).position_exact(&g.apply(&p)), h.position_exact(&p));
    }

    #[test]
    fn lines_map_to_circlines_through_images(
        a in -5i64..6, b in -5i64..6, c in -9i64..10, s in small(), word in 0usize..156,
    ) {
        prop_assume!(a != 0 || b != 0);
        let line = Circline::line(q(a, 1), q(b, 1), q(c, 1)).unwrap();
        // a·x + b·y + c = 0, parametrised along (−b, a)
        let n2 = q(a * a + b * b, 1);
        let base = RationalComplex::new(q(-a * c, 1) / &n2, q(-b * c, 1) / &n2);
        let p = RationalComplex::new(&base.re - &s * q(b, 1), &base.im + &s * q(a, 1));
        prop_assert!(line.eval_exact(&p) == BigRational::from_integer(0.into()));
        let m = &words()[word];
        if let Ok(mp) = m.apply(&p) {
            let img = line.moebius_image(m);
            prop_assert!(img.eval_exact(&mp) == BigRational::from_integer(0.into()));
        }
    }
}

#[test]
fn s_is_an_involution_on_regions() {
    let r = Region::from(Cell::new(vec![
        HalfSpace::re_le(q(1, 2)),
        HalfSpace::disk_exterior(&RationalComplex::from_ints(1, 0), &q(1, 1)),
    ]));
    let back = r
        .moebius_image(&MoebiusMap::s())
        .moebius_image(&MoebiusMap::s());
    assert_eq!(back, r);
}

#[test]
fn complement_of_a_cell_is_the_union_of_complements() {
    let hs = vec![
        HalfSpace::re_le(q(1, 2)),
        HalfSpace::im_ge(q(-1, 3)),
        HalfSpace::disk_exterior(&RationalComplex::from_ints(0, 1), &q(1, 1)),
    ];
    let cell = Region::from(Cell::new(hs.clone()));
    let outside = hs.iter().fold(Region::empty(), |acc, h| {
        acc.union(&Region::from(h.complement()))
    });
    // exactly one of the two holds off the boundaries
    let opts = EqualityOptions::quick();
    assert!(region_equal(&cell.union(&outside), &Region::plane(), &opts).is_equal());
    assert!(region_equal(&cell.intersect(&outside), &Region::empty(), &opts).is_equal());
}

#[test]
fn certifier_proves_and_refutes() {
    let unit = HalfSpace::disk(&RationalComplex::from_ints(0, 0), &q(1, 1));
    let big = Region::from(HalfSpace::disk(&RationalComplex::from_ints(0, 0), &q(4, 1)));
    assert!(certify_subset(&Cell::new(vec![unit.clone()]), &big, 10_000).is_proven());
    let shifted = Region::from(HalfSpace::disk(&RationalComplex::from_ints(1, 0), &q(1, 1)));
    match certify_subset(&Cell::new(vec![unit]), &shifted, 10_000) {
        Certificate::Refuted { witness } => assert!(!shifted.contains_exact(&witness)),
        c => panic!("expected a refutation, got {c:?}"),
    }
}
