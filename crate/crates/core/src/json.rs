//! JSON interchange for configurations, triangulations, polynomials,
//! matrices, specialization maps, and verification reports.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::config::{PointConfiguration, Simplex};
use crate::error::{Error, Result};
use crate::game::{Status, Term, VerificationReport};
use crate::poly::{PolyMatrix, SparsePoly};
use crate::resultant::SpecializationMap;
use crate::triangulation::{gkz_vector, HeightCertificate, Triangulation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigJson {
    pub dim: usize,
    pub points: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl ConfigJson {
    pub fn from_config(config: &PointConfiguration) -> Self {
        ConfigJson {
            dim: config.dim(),
            points: config.points().to_vec(),
            labels: Some(config.labels().to_vec()),
        }
    }

    pub fn into_config(self) -> Result<PointConfiguration> {
        for (index, p) in self.points.iter().enumerate() {
            if p.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    index,
                    expected: self.dim,
                    found: p.len(),
                });
            }
        }
        match self.labels {
            Some(labels) => PointConfiguration::new(self.points, labels),
            None => PointConfiguration::with_default_labels(self.points),
        }
    }
}

fn parse<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
}

fn render<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializing plain data cannot fail")
}

pub fn parse_config(text: &str) -> Result<PointConfiguration> {
    parse::<ConfigJson>(text)?.into_config()
}

pub fn config_to_json(config: &PointConfiguration) -> String {
    render(&ConfigJson::from_config(config))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationJson {
    pub simplices: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coherent: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub heights: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gkz: Option<Vec<u64>>,
}

impl TriangulationJson {
    /// `coherent` is `Some(cert.is_some())` when coherence was tested.
    pub fn new(
        config: &PointConfiguration,
        t: &Triangulation,
        coherent: Option<Option<&HeightCertificate>>,
    ) -> Self {
        TriangulationJson {
            simplices: t
                .simplices()
                .iter()
                .map(|s| s.vertices().iter().map(|&i| config.label(i).to_string()).collect())
                .collect(),
            coherent: coherent.map(|c| c.is_some()),
            heights: coherent
                .flatten()
                .map(|c| c.heights.iter().map(BigRational::to_string).collect()),
            gkz: Some(gkz_vector(config, t).0),
        }
    }

    pub fn to_triangulation(&self, config: &PointConfiguration) -> Result<Triangulation> {
        let simplices = self
            .simplices
            .iter()
            .map(|labels| {
                labels
                    .iter()
                    .map(|l| {
                        config
                            .index_of_label(l)
                            .ok_or_else(|| Error::InvalidTriangulation(format!("unknown label {l}")))
                    })
                    .collect::<Result<Vec<_>>>()
                    .map(Simplex::new)
            })
            .collect::<Result<Vec<_>>>()?;
        let t = Triangulation::new(simplices);
        t.validate(config)?;
        Ok(t)
    }

    pub fn heights(&self) -> Result<Option<Vec<BigRational>>> {
        self.heights
            .as_ref()
            .map(|hs| {
                hs.iter()
                    .map(|h| h.parse().map_err(|_| Error::Json(format!("bad rational {h:?}"))))
                    .collect()
            })
            .transpose()
    }
}

pub fn parse_triangulation(config: &PointConfiguration, text: &str) -> Result<Triangulation> {
    parse::<TriangulationJson>(text)?.to_triangulation(config)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coeff: String,
}

impl TermJson {
    fn new((exp, coeff): &Term) -> Self {
        TermJson {
            exp: exp.clone(),
            coeff: coeff.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    /// Terms are listed from the lexicographically largest exponent down.
    pub fn from_poly(p: &SparsePoly) -> Self {
        PolyJson {
            vars: p.vars().to_vec(),
            terms: p
                .terms()
                .rev()
                .map(|(e, c)| TermJson {
                    exp: e.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn to_poly(&self) -> Result<SparsePoly> {
        let distinct: BTreeSet<&String> = self.vars.iter().collect();
        if distinct.len() != self.vars.len() {
            return Err(Error::Json("repeated variable name".into()));
        }
        let terms = self
            .terms
            .iter()
            .map(|t| {
                if t.exp.len() != self.vars.len() {
                    return Err(Error::Json(format!(
                        "exponent {:?} does not match {} variables",
                        t.exp,
                        self.vars.len()
                    )));
                }
                let c: BigInt = t
                    .coeff
                    .parse()
                    .map_err(|_| Error::Json(format!("bad coefficient {:?}", t.coeff)))?;
                Ok((t.exp.clone(), c))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SparsePoly::from_terms(self.vars.clone(), terms))
    }
}

pub fn poly_to_json(p: &SparsePoly) -> String {
    render(&PolyJson::from_poly(p))
}

pub fn parse_poly(text: &str) -> Result<SparsePoly> {
    parse::<PolyJson>(text)?.to_poly()
}

/// Matrix entries may be polynomial objects, polynomial strings, or integers.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum EntryJson {
    Poly(PolyJson),
    Text(String),
    Int(i64),
}

impl EntryJson {
    fn to_poly(&self) -> Result<SparsePoly> {
        match self {
            EntryJson::Poly(p) => p.to_poly(),
            EntryJson::Text(s) => s.parse(),
            EntryJson::Int(k) => Ok(SparsePoly::from(*k)),
        }
    }
}

pub fn parse_matrix(text: &str) -> Result<PolyMatrix> {
    parse::<Vec<Vec<EntryJson>>>(text)?
        .iter()
        .map(|row| row.iter().map(EntryJson::to_poly).collect())
        .collect()
}

pub fn matrix_to_json(m: &PolyMatrix) -> String {
    let rows: Vec<Vec<PolyJson>> = m
        .iter()
        .map(|row| row.iter().map(PolyJson::from_poly).collect())
        .collect();
    render(&rows)
}

pub fn parse_specialization(text: &str) -> Result<SpecializationMap> {
    let raw: BTreeMap<String, String> = parse(text)?;
    let mut map = SpecializationMap::new();
    for (name, value) in raw {
        map = map.assign(&name, value.parse()?);
    }
    Ok(map)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub config: ConfigJson,
    pub status: String,
    pub matched: Vec<TermJson>,
    pub game_only: Vec<TermJson>,
    pub oracle_only: Vec<TermJson>,
    pub interior: Vec<TermJson>,
    pub secondary_matches_newton: bool,
}

impl ReportJson {
    pub fn new(config: &PointConfiguration, report: &VerificationReport) -> Self {
        let terms = |ts: &[Term]| ts.iter().map(TermJson::new).collect();
        ReportJson {
            config: ConfigJson::from_config(config),
            status: match report.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            }
            .to_string(),
            matched: terms(&report.matched),
            game_only: terms(&report.game_only),
            oracle_only: terms(&report.oracle_only),
            interior: terms(&report.interior),
            secondary_matches_newton: report.secondary_matches_newton,
        }
    }
}

pub fn report_to_json(config: &PointConfiguration, report: &VerificationReport) -> String {
    render(&ReportJson::new(config, report))
}

/// Pretty-prints any serializable value the way the other helpers do.
pub fn to_json<T: Serialize>(value: &T) -> String {
    render(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::{enumerate_triangulations, is_coherent, DEFAULT_CAP};

    #[test]
    fn config_round_trip() {
        let text = r#"{"dim": 1, "points": [[0],[1],[2]], "labels": ["a","b","c"]}"#;
        let c = parse_config(text).unwrap();
        assert_eq!(c, PointConfiguration::interval(2).unwrap());
        assert_eq!(parse_config(&config_to_json(&c)).unwrap(), c);
        let unlabeled = parse_config(r#"{"dim": 1, "points": [[0],[1],[2]]}"#).unwrap();
        assert_eq!(unlabeled, c);
    }

    #[test]
    fn config_errors() {
        assert!(matches!(parse_config("{"), Err(Error::Json(_))));
        assert_eq!(
            parse_config(r#"{"dim": 2, "points": [[0,0],[1]]}"#),
            Err(Error::DimensionMismatch { index: 1, expected: 2, found: 1 })
        );
        assert_eq!(
            parse_config(r#"{"dim": 1, "points": []}"#),
            Err(Error::EmptyConfiguration)
        );
    }

    #[test]
    fn triangulation_round_trip() {
        let c = PointConfiguration::interval(3).unwrap();
        for t in enumerate_triangulations(&c, DEFAULT_CAP).unwrap() {
            let cert = is_coherent(&c, &t);
            let j = TriangulationJson::new(&c, &t, Some(cert.as_ref()));
            assert_eq!(j.coherent, Some(true));
            let text = to_json(&j);
            assert_eq!(parse_triangulation(&c, &text).unwrap(), t);
            let back: TriangulationJson = serde_json::from_str(&text).unwrap();
            assert_eq!(back.heights().unwrap().unwrap(), cert.unwrap().heights);
        }
    }

    #[test]
    fn triangulation_json_shape() {
        let c = PointConfiguration::interval(2).unwrap();
        let t = Triangulation::new(vec![Simplex::new(vec![0, 2])]);
        let j = TriangulationJson::new(&c, &t, None);
        assert_eq!(
            serde_json::to_value(&j).unwrap(),
            serde_json::json!({"simplices": [["a", "c"]], "gkz": [2, 0, 2]})
        );
        let bad = r#"{"simplices": [["a","z"]]}"#;
        assert!(matches!(parse_triangulation(&c, bad), Err(Error::InvalidTriangulation(_))));
    }

    #[test]
    fn polynomial_round_trip() {
        let p: SparsePoly = "b^2 - 4*a*c".parse().unwrap();
        let text = poly_to_json(&p);
        assert_eq!(parse_poly(&text).unwrap(), p);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"vars": ["b","a","c"], "terms": [
                {"exp": [2,0,0], "coeff": "1"},
                {"exp": [0,1,1], "coeff": "-4"}
            ]})
        );
        assert!(parse_poly(r#"{"vars":["a"],"terms":[{"exp":[1,2],"coeff":"1"}]}"#).is_err());
        assert!(parse_poly(r#"{"vars":["a","a"],"terms":[]}"#).is_err());
        assert!(parse_poly(r#"{"vars":["a"],"terms":[{"exp":[1],"coeff":"x"}]}"#).is_err());
    }

    #[test]
    fn matrices_and_maps() {
        let m = parse_matrix(r#"[["a", 1], [{"vars":["b"],"terms":[{"exp":[1],"coeff":"2"}]}, "0"]]"#)
            .unwrap();
        assert_eq!(m[0][1], SparsePoly::one());
        assert_eq!(m[1][0], "2*b".parse().unwrap());
        let again = parse_matrix(&matrix_to_json(&m)).unwrap();
        assert_eq!(again, m);
        let map = parse_specialization(r#"{"a1": "a", "c2": "0", "b2": "2*a"}"#).unwrap();
        assert_eq!(map.assignments.len(), 3);
        assert_eq!(map.assignments["b2"], "2*a".parse().unwrap());
        assert!(parse_specialization(r#"{"a1": "a +"}"#).is_err());
    }
}
