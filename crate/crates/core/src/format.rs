//! The structure-constants file format.
//!
//! A UTF-8 JSON object with keys, in canonical order: `name`, `dim`,
//! `cyclotomic_order`, `basis`, `unit`, `counit`, `mult`, `comult` and the
//! optional `antipode`. Tensor entries are `[i, j, k, scalar]` with the
//! conventions of [`crate::hopf`]; antipode row `i` holds the coordinates of
//! `S(e_i)`. A scalar is either a bare integer or
//! `{"num": [c_0, …, c_{φ(N)−1}], "den": d}` meaning `(Σ c_t ζ^t)/d`.
//!
//! [`to_canonical_string`] writes one entry per line, so that
//! parse-then-serialize is a fixed point.

use std::collections::HashSet;
use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use serde::de::{self, Deserializer, MapAccess, SeqAccess, Visitor};
use serde::Deserialize;
use serde_json::Value;

use crate::cyclofield::{CycField, CycNumber};
use crate::error::{Error, Result};
use crate::hopf::{HopfPresentation, StructEntry};
use crate::linalg::Mat;

/// Walks any JSON document and fails on a repeated key inside one object.
struct NoDuplicateKeys;

impl<'de> Deserialize<'de> for NoDuplicateKeys {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        d.deserialize_any(NoDupVisitor)
    }
}

struct NoDupVisitor;

impl<'de> Visitor<'de> for NoDupVisitor {
    type Value = NoDuplicateKeys;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("any JSON value")
    }

    fn visit_bool<E>(self, _: bool) -> std::result::Result<Self::Value, E> {
        Ok(NoDuplicateKeys)
    }
    fn visit_i64<E>(self, _: i64) -> std::result::Result<Self::Value, E> {
        Ok(NoDuplicateKeys)
    }
    fn visit_u64<E>(self, _: u64) -> std::result::Result<Self::Value, E> {
        Ok(NoDuplicateKeys)
    }
    fn visit_f64<E>(self, _: f64) -> std::result::Result<Self::Value, E> {
        Ok(NoDuplicateKeys)
    }
    fn visit_str<E>(self, _: &str) -> std::result::Result<Self::Value, E> {
        Ok(NoDuplicateKeys)
    }
    fn visit_unit<E>(self) -> std::result::Result<Self::Value, E> {
        Ok(NoDuplicateKeys)
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Self::Value, A::Error> {
        while seq.next_element::<NoDuplicateKeys>()?.is_some() {}
        Ok(NoDuplicateKeys)
    }

    fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<Self::Value, A::Error> {
        let mut seen = HashSet::new();
        while let Some(key) = map.next_key::<String>()? {
            if !seen.insert(key.clone()) {
                return Err(de::Error::custom(format!("duplicate key `{key}`")));
            }
            map.next_value::<NoDuplicateKeys>()?;
        }
        Ok(NoDuplicateKeys)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    name: String,
    dim: usize,
    cyclotomic_order: u32,
    basis: Vec<String>,
    unit: Vec<Value>,
    counit: Vec<Value>,
    mult: Vec<(usize, usize, usize, Value)>,
    comult: Vec<(usize, usize, usize, Value)>,
    #[serde(default)]
    antipode: Option<Vec<Vec<Value>>>,
}

fn bigint_of(v: &Value, what: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            n.to_string().parse::<BigInt>().map_err(|_| Error::Malformed(format!("{what}: {n} is not an integer")))
        }
        other => Err(Error::Malformed(format!("{what}: expected an integer, got {other}"))),
    }
}

/// Reads one scalar in the file's scalar syntax.
pub fn parse_scalar(field: &CycField, v: &Value) -> Result<CycNumber> {
    match v {
        Value::Number(_) => Ok(field.from_bigint(bigint_of(v, "scalar")?)),
        Value::Object(map) => {
            if map.len() != 2 || !map.contains_key("num") || !map.contains_key("den") {
                return Err(Error::Malformed(format!("scalar object must have exactly the keys num and den, got {v}")));
            }
            let num = match &map["num"] {
                Value::Array(items) => items.iter().map(|x| bigint_of(x, "num")).collect::<Result<Vec<_>>>()?,
                other => return Err(Error::Malformed(format!("num must be an array, got {other}"))),
            };
            let den = bigint_of(&map["den"], "den")?;
            field.from_parts(num, den).map_err(|e| match e {
                Error::DivisionByZero => Error::Malformed("den is zero".into()),
                e => e,
            })
        }
        other => Err(Error::Malformed(format!("bad scalar {other}"))),
    }
}

/// Writes one scalar: a bare integer when possible.
pub fn scalar_to_string(x: &CycNumber) -> String {
    if let Some(i) = x.as_integer() {
        return i.to_string();
    }
    let num: Vec<String> = x.numerators().iter().map(|c| c.to_string()).collect();
    format!("{{\"num\":[{}],\"den\":{}}}", num.join(","), x.denominator())
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

/// Parses a structure-constants document. Shapes, index ranges, duplicate
/// keys and duplicate tensor entries are all rejected; axioms are not
/// checked.
pub fn parse_hopf(text: &str) -> Result<HopfPresentation> {
    serde_json::from_str::<NoDuplicateKeys>(text).map_err(|e| Error::Malformed(e.to_string()))?;
    let raw: RawFile = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    let field = CycField::new(raw.cyclotomic_order)?;
    if raw.basis.len() != raw.dim {
        return Err(Error::Malformed(format!("dim is {} but basis has {} labels", raw.dim, raw.basis.len())));
    }
    let vector = |v: &[Value], what: &str| -> Result<Vec<CycNumber>> {
        if v.len() != raw.dim {
            return Err(Error::Malformed(format!("{what} has length {}, expected {}", v.len(), raw.dim)));
        }
        v.iter().map(|x| parse_scalar(&field, x)).collect()
    };
    let entries = |v: &[(usize, usize, usize, Value)], what: &str| -> Result<Vec<StructEntry>> {
        let mut seen = HashSet::new();
        v.iter()
            .map(|(i, j, k, x)| {
                if !seen.insert((*i, *j, *k)) {
                    return Err(Error::Malformed(format!("duplicate {what} entry [{i}, {j}, {k}]")));
                }
                Ok(StructEntry::new(*i, *j, *k, parse_scalar(&field, x)?))
            })
            .collect()
    };
    let antipode = match &raw.antipode {
        Some(rows) => {
            if rows.len() != raw.dim {
                return Err(Error::Malformed(format!("antipode has {} rows, expected {}", rows.len(), raw.dim)));
            }
            let images = rows.iter().map(|r| vector(r, "antipode row")).collect::<Result<Vec<_>>>()?;
            Some(Mat::from_columns(&field, raw.dim, &images))
        }
        None => None,
    };
    HopfPresentation::new(
        raw.name.clone(),
        &field,
        raw.basis.clone(),
        entries(&raw.mult, "mult")?,
        entries(&raw.comult, "comult")?,
        vector(&raw.unit, "unit")?,
        vector(&raw.counit, "counit")?,
        antipode,
    )
}

/// The canonical text of a presentation, ending in a newline.
pub fn to_canonical_string(h: &HopfPresentation) -> String {
    let mut out = String::new();
    let list = |v: &[CycNumber]| -> String {
        let parts: Vec<String> = v.iter().map(scalar_to_string).collect();
        format!("[{}]", parts.join(", "))
    };
    let tensor = |out: &mut String, key: &str, entries: &[StructEntry]| {
        if entries.is_empty() {
            let _ = write!(out, "  \"{key}\": []");
            return;
        }
        let _ = writeln!(out, "  \"{key}\": [");
        for (t, e) in entries.iter().enumerate() {
            let sep = if t + 1 == entries.len() { "" } else { "," };
            let _ = writeln!(out, "    [{}, {}, {}, {}]{sep}", e.i, e.j, e.k, scalar_to_string(&e.value));
        }
        let _ = write!(out, "  ]");
    };
    let labels: Vec<String> = h.basis_labels().iter().map(|l| json_string(l)).collect();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"name\": {},", json_string(h.name()));
    let _ = writeln!(out, "  \"dim\": {},", h.dim());
    let _ = writeln!(out, "  \"cyclotomic_order\": {},", h.cyclotomic_order());
    let _ = writeln!(out, "  \"basis\": [{}],", labels.join(", "));
    let _ = writeln!(out, "  \"unit\": {},", list(h.unit_coords()));
    let _ = writeln!(out, "  \"counit\": {},", list(h.counit_coords()));
    tensor(&mut out, "mult", h.mult_entries());
    out.push_str(",\n");
    tensor(&mut out, "comult", h.comult_entries());
    if let Some(s) = h.antipode() {
        out.push_str(",\n  \"antipode\": [\n");
        for i in 0..h.dim() {
            let sep = if i + 1 == h.dim() { "" } else { "," };
            let _ = writeln!(out, "    {}{sep}", list(&s.col(i)));
        }
        out.push_str("  ]");
    }
    out.push_str("\n}\n");
    out
}

/// A Cayley table written as a JSON array of rows.
pub fn parse_table(text: &str) -> Result<Vec<Vec<usize>>> {
    serde_json::from_str(text).map_err(|e| Error::Malformed(format!("Cayley table: {e}")))
}

pub fn read_hopf_file(path: &std::path::Path) -> Result<HopfPresentation> {
    parse_hopf(&std::fs::read_to_string(path)?)
}

pub fn write_hopf_file(path: &std::path::Path, h: &HopfPresentation) -> Result<()> {
    std::fs::write(path, to_canonical_string(h))?;
    Ok(())
}
