//! Serialization for the shared file formats. Arc and diagram payloads are
//! plain; representations carry rational entries as `p/q` strings under
//! arrow-name keys (`"a1"`, `"a1*"`, ...); witnesses bundle three
//! representations with the vertexwise inclusion and projection matrices.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraKind, AlgebraSpec, ArrowId};
use crate::arc::{Arc, EpsOrientation};
use crate::diagram::ArcDiagram;
use crate::error::{Error, Result};
use crate::ratmat::{rat_from_str, rat_to_string, RatMat};
use crate::rep::Representation;
use crate::witness::{CrossingTag, SesWitness};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ArcJson {
    pub n: usize,
    pub left: usize,
    pub pattern: String,
}

impl From<&Arc> for ArcJson {
    fn from(a: &Arc) -> ArcJson {
        ArcJson {
            n: a.n(),
            left: a.left(),
            pattern: a.pattern_string(),
        }
    }
}

impl TryFrom<&ArcJson> for Arc {
    type Error = Error;

    fn try_from(j: &ArcJson) -> Result<Arc> {
        Arc::from_str_pattern(j.left, &j.pattern, j.n)
    }
}

/// Diagram payload; arcs listed later-to-earlier.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DiagramJson {
    pub n: usize,
    pub arcs: Vec<ArcJson>,
}

impl From<&ArcDiagram> for DiagramJson {
    fn from(d: &ArcDiagram) -> DiagramJson {
        DiagramJson {
            n: d.n(),
            arcs: d.arcs().iter().map(ArcJson::from).collect(),
        }
    }
}

impl TryFrom<&DiagramJson> for ArcDiagram {
    type Error = Error;

    fn try_from(j: &DiagramJson) -> Result<ArcDiagram> {
        let arcs = j
            .arcs
            .iter()
            .map(Arc::try_from)
            .collect::<Result<Vec<_>>>()?;
        ArcDiagram::new(j.n, arcs)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RepJson {
    pub n: usize,
    pub dims: Vec<usize>,
    pub maps: BTreeMap<String, Vec<Vec<String>>>,
}

fn mat_to_rows(m: &RatMat) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| rat_to_string(m.get(r, c))).collect())
        .collect()
}

fn mat_from_rows(rows: &[Vec<String>], want_rows: usize, want_cols: usize) -> Result<RatMat> {
    let mut m = RatMat::zero(want_rows, want_cols);
    if rows.len() != want_rows {
        return Err(Error::ShapeMismatch(format!(
            "expected {want_rows} rows, found {}",
            rows.len()
        )));
    }
    for (r, row) in rows.iter().enumerate() {
        if row.len() != want_cols {
            return Err(Error::ShapeMismatch(format!(
                "expected {want_cols} columns, found {}",
                row.len()
            )));
        }
        for (c, ent) in row.iter().enumerate() {
            m.set(r, c, rat_from_str(ent)?);
        }
    }
    Ok(m)
}

impl From<&Representation> for RepJson {
    fn from(rep: &Representation) -> RepJson {
        let mut maps = BTreeMap::new();
        for arrow in ArrowId::all(rep.n()) {
            maps.insert(arrow.to_string(), mat_to_rows(rep.map(arrow)));
        }
        RepJson {
            n: rep.n(),
            dims: rep.dims().to_vec(),
            maps,
        }
    }
}

impl TryFrom<&RepJson> for Representation {
    type Error = Error;

    fn try_from(j: &RepJson) -> Result<Representation> {
        if j.dims.len() != j.n {
            return Err(Error::ShapeMismatch("dims length differs from n".into()));
        }
        let mut rep = Representation::zero(j.n, j.dims.clone());
        for arrow in ArrowId::all(j.n) {
            if let Some(rows) = j.maps.get(&arrow.to_string()) {
                let m = mat_from_rows(
                    rows,
                    j.dims[arrow.target() - 1],
                    j.dims[arrow.source() - 1],
                )?;
                rep.set_map(arrow, m);
            }
        }
        Ok(rep)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraJson {
    pub n: usize,
    pub mode: String,
    #[serde(default, skip_serializing_if = "Option::is_none", rename = "S")]
    pub s: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps: Option<String>,
}

impl From<&AlgebraSpec> for AlgebraJson {
    fn from(a: &AlgebraSpec) -> AlgebraJson {
        match a.kind() {
            AlgebraKind::PreprojectiveFamily { s } => AlgebraJson {
                n: a.n(),
                mode: "preproj".into(),
                s: Some(s.iter().copied().collect()),
                eps: None,
            },
            AlgebraKind::Hereditary { eps } => AlgebraJson {
                n: a.n(),
                mode: "hereditary".into(),
                s: None,
                eps: Some(eps.as_string()),
            },
        }
    }
}

impl TryFrom<&AlgebraJson> for AlgebraSpec {
    type Error = Error;

    fn try_from(j: &AlgebraJson) -> Result<AlgebraSpec> {
        match j.mode.as_str() {
            "preproj" => crate::algebra::algebra(j.n, j.s.clone().unwrap_or_default()),
            "hereditary" => {
                let eps = EpsOrientation::parse(j.eps.as_deref().unwrap_or(""))?;
                crate::algebra::hereditary_algebra(j.n, eps)
            }
            other => Err(Error::BadJson(format!("unknown algebra mode {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CrossingJson {
    Contested { node: usize },
    Nontrivial { i: usize, j: usize, from: String },
}

impl From<&CrossingTag> for CrossingJson {
    fn from(t: &CrossingTag) -> CrossingJson {
        match *t {
            CrossingTag::Contested { node } => CrossingJson::Contested { node },
            CrossingTag::Nontrivial { i, j, from_y_to_x } => CrossingJson::Nontrivial {
                i,
                j,
                from: if from_y_to_x { "y_to_x" } else { "x_to_y" }.into(),
            },
        }
    }
}

impl TryFrom<&CrossingJson> for CrossingTag {
    type Error = Error;

    fn try_from(j: &CrossingJson) -> Result<CrossingTag> {
        Ok(match j {
            CrossingJson::Contested { node } => CrossingTag::Contested { node: *node },
            CrossingJson::Nontrivial { i, j, from } => CrossingTag::Nontrivial {
                i: *i,
                j: *j,
                from_y_to_x: match from.as_str() {
                    "y_to_x" => true,
                    "x_to_y" => false,
                    other => return Err(Error::BadJson(format!("bad direction {other:?}"))),
                },
            },
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WitnessJson {
    pub x: RepJson,
    pub y: RepJson,
    pub e: RepJson,
    pub iota: Vec<Vec<Vec<String>>>,
    pub pi: Vec<Vec<Vec<String>>>,
    pub crossing: CrossingJson,
}

impl From<&SesWitness> for WitnessJson {
    fn from(w: &SesWitness) -> WitnessJson {
        WitnessJson {
            x: RepJson::from(&w.x),
            y: RepJson::from(&w.y),
            e: RepJson::from(&w.e),
            iota: w.iota.iter().map(mat_to_rows).collect(),
            pi: w.pi.iter().map(mat_to_rows).collect(),
            crossing: CrossingJson::from(&w.crossing),
        }
    }
}

impl TryFrom<&WitnessJson> for SesWitness {
    type Error = Error;

    fn try_from(j: &WitnessJson) -> Result<SesWitness> {
        let x = Representation::try_from(&j.x)?;
        let y = Representation::try_from(&j.y)?;
        let e = Representation::try_from(&j.e)?;
        let n = e.n();
        if j.iota.len() != n || j.pi.len() != n {
            return Err(Error::ShapeMismatch("wrong number of vertex maps".into()));
        }
        let iota = (1..=n)
            .map(|v| mat_from_rows(&j.iota[v - 1], e.dim(v), y.dim(v)))
            .collect::<Result<Vec<_>>>()?;
        let pi = (1..=n)
            .map(|v| mat_from_rows(&j.pi[v - 1], x.dim(v), e.dim(v)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SesWitness {
            x,
            y,
            e,
            iota,
            pi,
            crossing: CrossingTag::try_from(&j.crossing)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::preprojective;
    use crate::rep::brick_from_arc;
    use crate::witness::ses_cross_from;

    #[test]
    fn arc_json_shape() {
        let arc = Arc::from_str_pattern(0, "uoou", 6).unwrap();
        let j = serde_json::to_string(&ArcJson::from(&arc)).unwrap();
        assert_eq!(j, r#"{"n":6,"left":0,"pattern":"uoou"}"#);
        let back: ArcJson = serde_json::from_str(&j).unwrap();
        assert_eq!(Arc::try_from(&back).unwrap(), arc);
    }

    #[test]
    fn rep_json_round_trip() {
        let rep = brick_from_arc(&Arc::from_str_pattern(0, "ouu", 4).unwrap());
        let j = RepJson::from(&rep);
        assert_eq!(j.maps["a2"], vec![vec!["1".to_string()]]);
        let back = Representation::try_from(&j).unwrap();
        assert_eq!(back, rep);
    }

    #[test]
    fn algebra_json_round_trip() {
        let a = crate::algebra::algebra(4, [2, 3]).unwrap();
        let j = AlgebraJson::from(&a);
        assert_eq!(
            serde_json::to_string(&j).unwrap(),
            r#"{"n":4,"mode":"preproj","S":[2,3]}"#
        );
        assert_eq!(AlgebraSpec::try_from(&j).unwrap(), a);
        let h = crate::algebra::hereditary_algebra(3, EpsOrientation::parse("uo").unwrap())
            .unwrap();
        let hj = AlgebraJson::from(&h);
        assert_eq!(AlgebraSpec::try_from(&hj).unwrap(), h);
    }

    #[test]
    fn witness_json_round_trip_is_lossless() {
        let x = brick_from_arc(&Arc::from_str_pattern(1, "uou", 5).unwrap());
        let y = brick_from_arc(&Arc::from_str_pattern(0, "uuoo", 5).unwrap());
        let w = ses_cross_from(&x, &y, (1, 4), &preprojective(5)).unwrap();
        let j = WitnessJson::from(&w);
        let text = serde_json::to_string(&j).unwrap();
        let parsed: WitnessJson = serde_json::from_str(&text).unwrap();
        let back = SesWitness::try_from(&parsed).unwrap();
        assert_eq!(back, w);
    }
}
