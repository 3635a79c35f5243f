//! The five figures: branch regions, the 40-cell partition, the products
//! `Z_k × W_k` with their images, the two pieces of `Ẑ₁`, and `Ψ♦` over `D♦`.

use cfdyn::arith::{ratio, RationalComplex};
use cfdyn::diamond::{diamond_sets, partition_rows, PartitionCell};
use cfdyn::natext::{build_psi, hat_z, natext_sets};
use cfdyn::regions::{Cell, HalfSpace, Rect, Region};
use clap::ValueEnum;

use crate::svg::{Panel, Style, SvgScene};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Figure {
    /// Where each branch of the map acts.
    Regions,
    /// The 40 cells `g(W_k)`.
    Partition,
    /// The products `Z_k × W_k` and their images.
    Dne,
    /// `Ẑ₁ = Z₁` as a union of two pieces.
    Z1hat,
    /// The trapping set over the bijectivity domain.
    Psi,
}

/// Fill colours for `W₁ … W₅`.
const PALETTE: [&str; 5] = ["#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1"];
const LIGHT: &str = "#c6dbef";
const DARK: &str = "#2171b5";
const VIEW: Rect = Rect::square(3.5);

fn lin(p: i64, q: i64, r: i64) -> HalfSpace {
    HalfSpace::linear(ratio(p, 1), ratio(q, 1), ratio(r, 1)).expect("nonzero normal")
}

pub fn render(figure: Figure) -> Result<String, CliError> {
    let scene = match figure {
        Figure::Regions => regions(),
        Figure::Partition => partition(),
        Figure::Dne => dne(),
        Figure::Z1hat => z1hat(),
        Figure::Psi => psi()?,
    };
    Ok(scene.to_svg())
}

fn regions() -> SvgScene {
    let mut p = Panel::new(20.0, 30.0, 560.0, VIEW).titled("branches of the map");
    // sectors, with the diamond painted over them
    let sectors = [
        (
            "T^-1",
            Cell::new(vec![lin(-1, 1, 0), lin(-1, -1, 0)]),
            (2.3, 0.0),
        ),
        (
            "U^-1",
            Cell::new(vec![lin(1, -1, 0), lin(-1, -1, 0)]),
            (0.0, 2.3),
        ),
        (
            "T",
            Cell::new(vec![lin(1, -1, 0), lin(1, 1, 0)]),
            (-2.3, 0.0),
        ),
        (
            "U",
            Cell::new(vec![lin(-1, 1, 0), lin(1, 1, 0)]),
            (0.0, -2.3),
        ),
    ];
    for (i, (name, cell, at)) in sectors.into_iter().enumerate() {
        p.region(
            Region::from(cell),
            Style::fill(PALETTE[i]).with_opacity(0.5),
            Some(name.into()),
        );
        p.label(at.0, at.1, name, 18.0);
    }
    p.region(
        diamond_sets().phi.clone(),
        Style::fill(PALETTE[4]).edged("#222222"),
        Some("S".into()),
    );
    p.label(0.0, 0.0, "S", 18.0);
    let mut s = SvgScene::new(600.0, 610.0);
    s.panels.push(p);
    s
}

fn partition() -> SvgScene {
    let sets = diamond_sets();
    let mut p = Panel::new(20.0, 30.0, 560.0, VIEW).titled("the 40 cells g(W_k)");
    for (g, k, region) in sets.all_cells() {
        let tag = PartitionCell::new(g, k).to_string();
        p.region(
            region,
            Style::fill(PALETTE[k as usize - 1]).edged("#ffffff"),
            Some(tag),
        );
    }
    let mut s = SvgScene::new(600.0, 610.0);
    s.panels.push(p);
    s
}

fn dne() -> SvgScene {
    let sets = natext_sets();
    let w = diamond_sets();
    let size = 150.0;
    let gap = 30.0;
    let mut s = SvgScene::new(4.0 * (size + gap) + gap, 5.0 * (size + gap) + gap);
    for row in partition_rows() {
        let k = row.k;
        let y = gap + (k - 1) as f64 * (size + gap);
        let h = row.branch.map();
        let color = PALETTE[k as usize - 1];
        let z = sets.z(k).clone();
        let wk = w.w(k).clone();
        let panels = [
            (format!("Z{k}"), z.clone()),
            (format!("W{k}"), wk.clone()),
            (format!("{} Z{k}", row.branch), z.moebius_image(&h)),
            (format!("{} W{k}", row.branch), wk.moebius_image(&h)),
        ];
        for (col, (title, region)) in panels.into_iter().enumerate() {
            let mut p = Panel::new(gap + col as f64 * (size + gap), y, size, VIEW).titled(title);
            p.region(region, Style::fill(color), None);
            if col == 3 {
                for cell in &row.image {
                    p.region(
                        w.cell(cell.g, cell.k),
                        Style::fill("none").edged("#333333").dashed(),
                        None,
                    );
                }
            }
            s.panels.push(p);
        }
    }
    s
}

fn z1hat() -> SvgScene {
    let h = hat_z(1);
    let mut p = Panel::new(20.0, 30.0, 560.0, VIEW).titled("Z1 as the union of two pieces");
    for (i, piece) in h.pieces.iter().enumerate() {
        let tag = format!(
            "{} of Z{} moved by {}",
            piece.branch, piece.source, piece.xi
        );
        p.region(
            piece.region.clone(),
            Style::fill(PALETTE[i]).with_opacity(0.8),
            Some(tag),
        );
    }
    p.region(
        natext_sets().z(1).clone(),
        Style::fill("none").edged("#222222").dashed(),
        None,
    );
    let mut s = SvgScene::new(600.0, 610.0);
    s.panels.push(p);
    s
}

fn psi() -> Result<SvgScene, CliError> {
    let built = build_psi().map_err(|e| CliError::Compute(e.to_string()))?;
    let sets = natext_sets();
    let w = diamond_sets();
    let size = 200.0;
    let small = 100.0;
    let gap = 30.0;
    let mut s = SvgScene::new(gap + size + gap + small + gap, 5.0 * (size + gap) + gap);
    let unit = Region::from(HalfSpace::disk(&RationalComplex::zero(), &ratio(1, 1)));
    for k in 1..=5u8 {
        let y = gap + (k - 1) as f64 * (size + gap);
        let mut p = Panel::new(gap, y, size, VIEW).titled(format!("over W{k}"));
        p.region(built.part(k), Style::fill(LIGHT), Some(format!("Psi{k}")));
        p.region(sets.z(k).clone(), Style::fill(DARK), Some(format!("D{k}")));
        p.outline(&unit, Style::stroke("#888888").dashed());
        s.panels.push(p);
        let mut q = Panel::new(
            gap + size + gap,
            y + (size - small) / 2.0,
            small,
            Rect::square(1.25),
        )
        .titled(format!("W{k}"));
        q.region(w.w(k).clone(), Style::fill(PALETTE[k as usize - 1]), None);
        q.region(w.phi.clone(), Style::fill("none").edged("#888888"), None);
        s.panels.push(q);
    }
    Ok(s)
}
