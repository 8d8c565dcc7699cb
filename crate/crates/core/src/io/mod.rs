//! Factorization and diagram documents (JSON) and SVG export.
//!
//! Coordinates are written as fractions of the torus side with exactly six
//! decimals, which is the resolution of [`UNIT`], so documents round-trip
//! without loss.

mod svg;

pub use svg::export_svg;

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::braid::BraidWord;
use crate::diagram::{Arc, BridgePoint, Color, Point, PointSign, TorusDiagram, UNIT};
use crate::error::{Error, Result};
use crate::quasipositive::{BandFactor, Factorization, Sign};

pub const FORMAT_VERSION: &str = "1.0";

/// A coordinate in units of `1 / UNIT`, written with six decimals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Coord(i64);

const DECIMALS: usize = 6;

impl Coord {
    fn text(self) -> String {
        let scale = 10i64.pow(DECIMALS as u32);
        debug_assert_eq!(scale, UNIT);
        let sign = if self.0 < 0 { "-" } else { "" };
        let v = self.0.unsigned_abs();
        format!("{sign}{}.{:06}", v / scale as u64, v % scale as u64)
    }

    fn parse(text: &str) -> std::result::Result<Self, String> {
        let bad = || format!("coordinate {text} is not a plain decimal");
        let (neg, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text),
        };
        let (int, frac) = body.split_once('.').unwrap_or((body, ""));
        if int.is_empty() || !int.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        if !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let (kept, extra) = frac.split_at(frac.len().min(DECIMALS));
        if extra.bytes().any(|b| b != b'0') {
            return Err(format!(
                "coordinate {text} has more than {DECIMALS} decimals"
            ));
        }
        let int: i64 = int.parse().map_err(|_| bad())?;
        let frac: i64 = format!("{kept:0<DECIMALS$}").parse().map_err(|_| bad())?;
        let v = int
            .checked_mul(UNIT)
            .and_then(|v| v.checked_add(frac))
            .ok_or_else(bad)?;
        Ok(Coord(if neg { -v } else { v }))
    }
}

impl Serialize for Coord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = serde_json::Number::from_str(&self.text()).map_err(serde::ser::Error::custom)?;
        n.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Coord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        Coord::parse(&n.to_string()).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FactorDoc {
    conjugator: Vec<i32>,
    exponent: i64,
    sign: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FactorizationDoc {
    format_version: String,
    strands: usize,
    factors: Vec<FactorDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointDoc {
    id: usize,
    x: Coord,
    y: Coord,
    sign: PointSign,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArcDoc {
    color: Color,
    endpoints: [usize; 2],
    vertices: Vec<[Coord; 2]>,
    wraps: Vec<[i64; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramDoc {
    format_version: String,
    strands: usize,
    bridge_points: Vec<PointDoc>,
    arcs: Vec<ArcDoc>,
    stabilization_count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    factorization: Option<FactorizationDoc>,
}

/// A diagram together with the factorization it was built from, if known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramDocument {
    pub diagram: TorusDiagram,
    pub factorization: Option<Factorization>,
}

fn syntax(e: serde_json::Error) -> Error {
    let text = e.to_string();
    let suffix = format!(" at line {} column {}", e.line(), e.column());
    Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: text.strip_suffix(&suffix).unwrap_or(&text).to_string(),
    }
}

fn check_version(v: &str) -> Result<()> {
    if v == FORMAT_VERSION {
        Ok(())
    } else {
        Err(Error::Document(format!(
            "unsupported format_version {v:?}, expected {FORMAT_VERSION:?}"
        )))
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("documents serialize");
    out.push('\n');
    out
}

fn factorization_doc(f: &Factorization) -> FactorizationDoc {
    FactorizationDoc {
        format_version: FORMAT_VERSION.to_string(),
        strands: f.strands(),
        factors: f
            .factors()
            .iter()
            .map(|b| FactorDoc {
                conjugator: b.conjugator().letters().to_vec(),
                exponent: b.exponent() as i64,
                sign: b.sign().as_i64(),
            })
            .collect(),
    }
}

fn factorization_from_doc(doc: FactorizationDoc) -> Result<Factorization> {
    check_version(&doc.format_version)?;
    let d = doc.strands;
    if d < 1 {
        return Err(Error::TooFewStrands { min: 1, got: d });
    }
    let factors = doc
        .factors
        .into_iter()
        .map(|f| {
            let exponent = u32::try_from(f.exponent)
                .ok()
                .filter(|&k| k >= 1)
                .ok_or(Error::BadExponent(f.exponent))?;
            let sign = Sign::from_i64(f.sign)?;
            let g = BraidWord::new(d, f.conjugator)?;
            BandFactor::new(g, exponent, sign)
        })
        .collect::<Result<Vec<_>>>()?;
    Factorization::new(d, factors)
}

/// Loads a factorization document. Letters, exponents and signs are checked;
/// the product is not.
pub fn parse_factorization(text: &str) -> Result<Factorization> {
    let doc: FactorizationDoc = serde_json::from_str(text).map_err(syntax)?;
    factorization_from_doc(doc)
}

pub fn serialize_factorization(f: &Factorization) -> String {
    to_json(&factorization_doc(f))
}

pub fn parse_diagram(text: &str) -> Result<DiagramDocument> {
    let doc: DiagramDoc = serde_json::from_str(text).map_err(syntax)?;
    check_version(&doc.format_version)?;
    let n = doc.bridge_points.len();
    let mut slots: Vec<Option<BridgePoint>> = vec![None; n];
    for p in doc.bridge_points {
        let slot = slots
            .get_mut(p.id)
            .ok_or_else(|| Error::Document(format!("bridge point id {} is not below {n}", p.id)))?;
        if slot.is_some() {
            return Err(Error::Document(format!(
                "duplicate bridge point id {}",
                p.id
            )));
        }
        *slot = Some(BridgePoint {
            position: Point::new(p.x.0, p.y.0),
            sign: p.sign,
        });
    }
    let points = slots
        .into_iter()
        .map(|p| p.expect("ids fill 0..n"))
        .collect();
    let arcs = doc
        .arcs
        .into_iter()
        .map(|a| Arc {
            color: a.color,
            endpoints: a.endpoints,
            vertices: a
                .vertices
                .iter()
                .map(|[x, y]| Point::new(x.0, y.0))
                .collect(),
            wraps: a.wraps.iter().map(|&[x, y]| (x, y)).collect(),
        })
        .collect();
    let diagram = TorusDiagram::new(doc.strands, points, arcs, doc.stabilization_count)?;
    let factorization = doc.factorization.map(factorization_from_doc).transpose()?;
    if let Some(f) = &factorization {
        if f.strands() != diagram.strands() {
            return Err(Error::StrandMismatch {
                left: diagram.strands(),
                right: f.strands(),
            });
        }
    }
    Ok(DiagramDocument {
        diagram,
        factorization,
    })
}

pub fn serialize_diagram(doc: &DiagramDocument) -> String {
    let diag = &doc.diagram;
    let out = DiagramDoc {
        format_version: FORMAT_VERSION.to_string(),
        strands: diag.strands(),
        bridge_points: diag
            .bridge_points()
            .iter()
            .enumerate()
            .map(|(id, p)| PointDoc {
                id,
                x: Coord(p.position.x),
                y: Coord(p.position.y),
                sign: p.sign,
            })
            .collect(),
        arcs: diag
            .arcs()
            .iter()
            .map(|a| ArcDoc {
                color: a.color,
                endpoints: a.endpoints,
                vertices: a
                    .vertices
                    .iter()
                    .map(|v| [Coord(v.x), Coord(v.y)])
                    .collect(),
                wraps: a.wraps.iter().map(|&(x, y)| [x, y]).collect(),
            })
            .collect(),
        stabilization_count: diag.stabilization_count(),
        factorization: doc.factorization.as_ref().map(factorization_doc),
    };
    to_json(&out)
}

/// Renders any serializable report as pretty JSON with a trailing newline.
pub fn report_json<T: Serialize>(value: &T) -> String {
    to_json(value)
}

/// Formats a braid word as a compact signed-integer list, e.g. `[1, -2]`.
pub fn letters_text(w: &BraidWord) -> String {
    let mut s = String::from("[");
    for (i, l) in w.letters().iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        write!(s, "{l}").expect("write to string");
    }
    s.push(']');
    s
}
