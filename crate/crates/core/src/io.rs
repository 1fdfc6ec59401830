//! JSON interchange formats.
//!
//! Rationals are written as JSON integers when integral and as `"p/q"`
//! strings otherwise; on input both are accepted, floats are not.
//! Parse errors carry the JSON path and line of the offending value.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::de::{self, DeserializeOwned, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::discriminantal::StratumRecord;
use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational};
use crate::gale::{InvarianceCase, Partition, PointConfig};
use crate::monodromy::{MonodromyBraid, NilpotentRelations, RelationFamily, Section};
use crate::GenericArrangement;

/// A rational as it appears in JSON.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonRational(pub Rational);

impl Serialize for JsonRational {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let q = &self.0;
        if q.denom().is_one() {
            if let Some(i) = q.numer().to_i64() {
                return ser.serialize_i64(i);
            }
            return ser.serialize_str(&q.numer().to_string());
        }
        ser.serialize_str(&format!("{}/{}", q.numer(), q.denom()))
    }
}

impl<'de> Deserialize<'de> for JsonRational {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = JsonRational;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a \"p/q\" string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<JsonRational, E> {
                Ok(JsonRational(Rational::from_integer(v.into())))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<JsonRational, E> {
                Ok(JsonRational(Rational::from_integer(v.into())))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<JsonRational, E> {
                parse_rational(v).map(JsonRational).map_err(E::custom)
            }
        }
        de.deserialize_any(V)
    }
}

/// `"p"` or `"p/q"` with `q != 0`.
pub fn parse_rational(text: &str) -> std::result::Result<Rational, String> {
    let int = |s: &str| s.trim().parse::<BigInt>().map_err(|_| format!("invalid rational {text:?}"));
    match text.split_once('/') {
        None => Ok(Rational::from_integer(int(text)?)),
        Some((p, q)) => {
            let q = int(q)?;
            if q == BigInt::from(0) {
                return Err(format!("zero denominator in {text:?}"));
            }
            Ok(Rational::new(int(p)?, q))
        }
    }
}

pub fn rational_text(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn wrap(v: &[Rational]) -> Vec<JsonRational> {
    v.iter().cloned().map(JsonRational).collect()
}

fn unwrap(v: Vec<JsonRational>) -> Vec<Rational> {
    v.into_iter().map(|x| x.0).collect()
}

/// Deserializes with the failing path, line and column in the message.
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        Error::Parse(format!("at `{path}`: {}", e.into_inner()))
    })
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementFile {
    pub n: usize,
    pub k: usize,
    pub normals: Vec<Vec<JsonRational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offsets: Option<Vec<JsonRational>>,
}

impl From<&GenericArrangement> for ArrangementFile {
    fn from(a: &GenericArrangement) -> Self {
        ArrangementFile {
            n: a.n(),
            k: a.k(),
            normals: a.normals().row_vecs().iter().map(|r| wrap(r)).collect(),
            offsets: a.offsets().map(wrap),
        }
    }
}

impl ArrangementFile {
    pub fn into_arrangement(self) -> Result<GenericArrangement> {
        if self.normals.len() != self.n {
            return Err(Error::Parse(format!(
                "`n` is {} but {} normals are given",
                self.n,
                self.normals.len()
            )));
        }
        if let Some((i, r)) = self.normals.iter().enumerate().find(|(_, r)| r.len() != self.k) {
            return Err(Error::Parse(format!(
                "`normals[{i}]` has {} entries, expected k = {}",
                r.len(),
                self.k
            )));
        }
        let rows: Vec<Vec<Rational>> = self.normals.into_iter().map(unwrap).collect();
        GenericArrangement::new(Matrix::from_rows(self.k, rows)?, self.offsets.map(unwrap))
    }
}

pub fn arrangement_to_json(a: &GenericArrangement) -> String {
    to_json(&ArrangementFile::from(a))
}

pub fn arrangement_from_json(text: &str) -> Result<GenericArrangement> {
    from_json::<ArrangementFile>(text)?.into_arrangement()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub members: Vec<Vec<usize>>,
    pub multiplicity: usize,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
}

impl From<&StratumRecord> for CensusEntry {
    fn from(r: &StratumRecord) -> Self {
        CensusEntry {
            members: r.members.iter().map(|s| s.labels()).collect(),
            multiplicity: r.multiplicity(),
            kind: r.kind.as_str().to_string(),
            t: r.shape.map(|(t, _)| t),
            s: r.shape.map(|(_, s)| s),
        }
    }
}

pub fn census_to_json(census: &[StratumRecord]) -> String {
    to_json(&census.iter().map(CensusEntry::from).collect::<Vec<_>>())
}

/// Point configurations: `vectors` lists the `n` points, each of length `d`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub d: usize,
    pub n: usize,
    pub vectors: Vec<Vec<JsonRational>>,
}

impl From<&PointConfig> for ConfigFile {
    fn from(p: &PointConfig) -> Self {
        ConfigFile {
            d: p.d(),
            n: p.n(),
            vectors: p.points().iter().map(|v| wrap(v)).collect(),
        }
    }
}

impl ConfigFile {
    pub fn into_config(self) -> Result<PointConfig> {
        if self.vectors.len() != self.n {
            return Err(Error::Parse(format!(
                "`n` is {} but {} points are given",
                self.n,
                self.vectors.len()
            )));
        }
        if let Some((i, v)) = self.vectors.iter().enumerate().find(|(_, v)| v.len() != self.d) {
            return Err(Error::Parse(format!(
                "`vectors[{i}]` has {} entries, expected d = {}",
                v.len(),
                self.d
            )));
        }
        PointConfig::from_points(self.d, self.vectors.into_iter().map(unwrap).collect())
    }
}

pub fn config_to_json(p: &PointConfig) -> String {
    to_json(&ConfigFile::from(p))
}

pub fn config_from_json(text: &str) -> Result<PointConfig> {
    from_json::<ConfigFile>(text)?.into_config()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidEntry {
    pub s: String,
    pub block: Vec<usize>,
    pub word: Vec<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidFile {
    #[serde(rename = "N")]
    pub strands: usize,
    pub braids: Vec<BraidEntry>,
}

impl BraidFile {
    pub fn new(strands: usize, braids: &[MonodromyBraid]) -> Self {
        BraidFile {
            strands,
            braids: braids
                .iter()
                .map(|b| BraidEntry {
                    s: rational_text(&b.point.s),
                    block: b.block.clone(),
                    word: b.gamma.letters.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationEntry {
    pub family: RelationFamily,
    pub lhs: Vec<usize>,
    pub stratum: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCounts {
    #[serde(rename = "i")]
    pub good: usize,
    #[serde(rename = "ii")]
    pub dependent: usize,
    #[serde(rename = "iii")]
    pub simple: usize,
    pub simple_pairs: usize,
    pub total: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationsFile {
    pub n: usize,
    pub k: usize,
    pub counts: RelationCounts,
    pub relations: Vec<RelationEntry>,
}

impl RelationsFile {
    pub fn new(n: usize, k: usize, rel: &NilpotentRelations) -> Self {
        RelationsFile {
            n,
            k,
            counts: RelationCounts {
                good: rel.good.len(),
                dependent: rel.dependent.len(),
                simple: rel.simple.len(),
                simple_pairs: rel.simple_pairs(),
                total: rel.total(),
            },
            relations: rel
                .all()
                .map(|r| RelationEntry {
                    family: r.family,
                    lhs: r.lhs.labels(),
                    stratum: r.stratum.iter().map(|s| s.labels()).collect(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PlaneJson {
    pub a: Vec<JsonRational>,
    pub b: Vec<JsonRational>,
    pub c: Vec<JsonRational>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LineJson {
    pub set: Vec<usize>,
    pub slope: JsonRational,
    pub intercept: JsonRational,
}

#[derive(Clone, Debug, Serialize)]
pub struct PointJson {
    pub s: JsonRational,
    pub t: JsonRational,
    pub sets: Vec<Vec<usize>>,
}

/// A section: the plane `x = a·t + b·s + c`, its lines `t = slope·s +
/// intercept`, and the singular points sorted by `s`.
#[derive(Clone, Debug, Serialize)]
pub struct SectionFile {
    #[serde(rename = "N")]
    pub strands: usize,
    pub plane: PlaneJson,
    pub basepoint: JsonRational,
    pub lines: Vec<LineJson>,
    pub points: Vec<PointJson>,
}

impl From<&Section> for SectionFile {
    fn from(sec: &Section) -> Self {
        SectionFile {
            strands: sec.strand_count(),
            plane: PlaneJson {
                a: wrap(&sec.plane.a),
                b: wrap(&sec.plane.b),
                c: wrap(&sec.plane.c),
            },
            basepoint: JsonRational(sec.basepoint.clone()),
            lines: sec
                .lines
                .iter()
                .map(|l| LineJson {
                    set: l.set.labels(),
                    slope: JsonRational(l.slope.clone()),
                    intercept: JsonRational(l.intercept.clone()),
                })
                .collect(),
            points: sec
                .points
                .iter()
                .map(|p| PointJson {
                    s: JsonRational(p.s.clone()),
                    t: JsonRational(p.t.clone()),
                    sets: p.lines.iter().map(|&i| sec.lines[i].set.labels()).collect(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InvarianceEntry {
    pub seed: u64,
    pub constructed_positive: bool,
    pub original: Option<Vec<Vec<usize>>>,
    pub dual: Option<Vec<Vec<usize>>>,
    pub agrees: bool,
}

impl From<&InvarianceCase> for InvarianceEntry {
    fn from(c: &InvarianceCase) -> Self {
        let part = |p: &Option<Partition>| p.map(|g| g.iter().map(|s| s.labels()).collect());
        InvarianceEntry {
            seed: c.seed,
            constructed_positive: c.constructed_positive,
            original: part(&c.original),
            dual: part(&c.dual),
            agrees: c.agrees(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn rational_round_trip() {
        for q in [ratio(3, 1), ratio(-7, 4), ratio(0, 1)] {
            let s = serde_json::to_string(&JsonRational(q.clone())).unwrap();
            assert_eq!(from_json::<JsonRational>(&s).unwrap().0, q);
        }
        assert_eq!(serde_json::to_string(&JsonRational(ratio(-7, 4))).unwrap(), "\"-7/4\"");
        assert_eq!(serde_json::to_string(&JsonRational(ratio(5, 1))).unwrap(), "5");
        assert_eq!(from_json::<JsonRational>("\"6/4\"").unwrap().0, ratio(3, 2));
    }

    #[test]
    fn rejects_floats_and_bad_strings() {
        assert!(from_json::<JsonRational>("1.5").is_err());
        assert!(from_json::<JsonRational>("\"1/0\"").is_err());
        assert!(from_json::<JsonRational>("\"x\"").is_err());
    }

    #[test]
    fn arrangement_round_trip() {
        let a = GenericArrangement::new(
            Matrix::from_rows(2, vec![
                vec![ratio(1, 1), ratio(0, 1)],
                vec![ratio(0, 1), ratio(1, 1)],
                vec![ratio(1, 2), ratio(-3, 1)],
            ])
            .unwrap(),
            Some(vec![ratio(1, 1), ratio(2, 3), ratio(0, 1)]),
        )
        .unwrap();
        let text = arrangement_to_json(&a);
        assert_eq!(arrangement_from_json(&text).unwrap(), a);
    }

    #[test]
    fn error_has_path_and_line() {
        let text = "{\n  \"n\": 2,\n  \"k\": 1,\n  \"normals\": [[1], [2.5]]\n}";
        let Err(Error::Parse(msg)) = arrangement_from_json(text) else {
            panic!("expected a parse error");
        };
        assert!(msg.contains("normals[1][0]"), "{msg}");
        assert!(msg.contains("line 4"), "{msg}");
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let text = r#"{"n": 3, "k": 2, "normals": [[1, 0], [0, 1]]}"#;
        assert!(matches!(arrangement_from_json(text), Err(Error::Parse(_))));
        let text = r#"{"n": 2, "k": 2, "normals": [[1, 0], [0]]}"#;
        assert!(matches!(arrangement_from_json(text), Err(Error::Parse(_))));
    }

    #[test]
    fn config_round_trip() {
        let p = PointConfig::from_points(
            2,
            vec![vec![ratio(1, 1), ratio(0, 1)], vec![ratio(0, 1), ratio(1, 1)], vec![ratio(1, 3), ratio(1, 1)]],
        )
        .unwrap();
        assert_eq!(config_from_json(&config_to_json(&p)).unwrap(), p);
    }
}
