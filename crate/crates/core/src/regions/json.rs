use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::RationalComplex;

use super::region::{Cell, HalfSpace, Region, Side};

#[derive(Serialize, Deserialize)]
struct ConstraintJson {
    #[serde(rename = "A")]
    a: String,
    #[serde(rename = "B_re")]
    b_re: String,
    #[serde(rename = "B_im")]
    b_im: String,
    #[serde(rename = "C")]
    c: String,
    side: SideJson,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum SideJson {
    Le,
    Ge,
}

#[derive(Serialize, Deserialize)]
struct RegionJson {
    cells: Vec<Vec<ConstraintJson>>,
}

fn parse(s: &str) -> Result<BigRational, String> {
    BigRational::from_str(s).map_err(|_| format!("bad rational `{s}`"))
}

impl From<&HalfSpace> for ConstraintJson {
    fn from(h: &HalfSpace) -> Self {
        let b = &h.boundary;
        ConstraintJson {
            a: b.a().to_string(),
            b_re: b.b().re.to_string(),
            b_im: b.b().im.to_string(),
            c: b.c().to_string(),
            side: match h.side {
                Side::Le => SideJson::Le,
                Side::Ge => SideJson::Ge,
            },
        }
    }
}

impl TryFrom<ConstraintJson> for HalfSpace {
    type Error = String;
    fn try_from(j: ConstraintJson) -> Result<Self, String> {
        let h = HalfSpace::from_form(
            &parse(&j.a)?,
            &RationalComplex::new(parse(&j.b_re)?, parse(&j.b_im)?),
            &parse(&j.c)?,
        )
        .map_err(|e| e.to_string())?;
        Ok(match j.side {
            SideJson::Le => h,
            SideJson::Ge => h.complement(),
        })
    }
}

impl Serialize for Region {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RegionJson {
            cells: self
                .cells
                .iter()
                .map(|c| c.constraints.iter().map(ConstraintJson::from).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Region {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = RegionJson::deserialize(d)?;
        let mut cells = Vec::with_capacity(j.cells.len());
        for c in j.cells {
            let constraints = c
                .into_iter()
                .map(HalfSpace::try_from)
                .collect::<Result<Vec<_>, _>>()
                .map_err(serde::de::Error::custom)?;
            cells.push(Cell::new(constraints));
        }
        Ok(Region::new(cells))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn round_trip_and_shape() {
        let r = Region::from(Cell::new(vec![
            HalfSpace::re_le(ratio(1, 2)),
            HalfSpace::disk_exterior(&RationalComplex::from_ints(1, 0), &ratio(1, 1)),
        ]));
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(
            s,
            r#"{"cells":[[{"A":"0","B_re":"1","B_im":"0","C":"-1","side":"le"},{"A":"1","B_re":"-1","B_im":"0","C":"0","side":"ge"}]]}"#
        );
        let back: Region = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn fractions_are_accepted() {
        let s = r#"{"cells":[[{"A":"0","B_re":"1/2","B_im":"0","C":"-1/4","side":"le"}]]}"#;
        let r: Region = serde_json::from_str(s).unwrap();
        assert_eq!(r, Region::from(HalfSpace::re_le(ratio(1, 4))));
    }
}
