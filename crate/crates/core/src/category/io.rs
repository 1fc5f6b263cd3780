//! Category files: strict UTF-8 JSON, `schema_version` 1.
//!
//! A value is either a rational string `"p/q"` (or `"p"`) or an array of
//! `φ(n)` rational strings in power-basis order at the file's conductor `n`.
//! Bare JSON integers are also accepted where a value is expected.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use super::{CategoryData, FusionRing, Kind};
use crate::cyclotomic::{totient, CycloMatrix, Cyclotomic, Rational};
use crate::error::{Error, Result};

pub const SCHEMA_VERSION: u64 = 1;

/// Largest conductor accepted from a file.
const MAX_CONDUCTOR: u64 = 10_000;

const COMMON_FIELDS: &[&str] = &["schema_version", "name", "kind", "conductor", "rank", "labels"];
const MODULAR_FIELDS: &[&str] = &["s_matrix", "twists"];
const FUSION_FIELDS: &[&str] = &["fusion", "dims", "char_table"];

/// Encodes `v` at conductor `n`; the conductor of `v` must divide `n`.
pub fn encode_value(v: &Cyclotomic, n: u32) -> Value {
    match v.to_rational() {
        Some(q) => Value::String(ascii_rational(&q)),
        None => Value::Array(
            v.lift(n)
                .coeffs()
                .iter()
                .map(|c| Value::String(ascii_rational(c)))
                .collect(),
        ),
    }
}

/// Decodes a value at conductor `n`; `path` locates it for diagnostics.
pub fn decode_value(v: &Value, n: u32, path: &str) -> Result<Cyclotomic> {
    match v {
        Value::String(s) => Ok(Cyclotomic::from_rational(parse_rational(s, path)?)),
        Value::Number(k) => {
            let k = k
                .as_i64()
                .ok_or_else(|| Error::parse(path, format!("{k} is not an integer")))?;
            Ok(Cyclotomic::from_int(k))
        }
        Value::Array(items) => {
            let phi = totient(n);
            if items.len() != phi {
                return Err(Error::parse(
                    path,
                    format!(
                        "expected {phi} coefficients for conductor {n} (φ({n}) = {phi}), found {}",
                        items.len()
                    ),
                ));
            }
            let coeffs = items
                .iter()
                .enumerate()
                .map(|(k, c)| match c {
                    Value::String(s) => parse_rational(s, &format!("{path}[{k}]")),
                    Value::Number(x) => x
                        .as_i64()
                        .map(|x| Rational::from_integer(BigInt::from(x)))
                        .ok_or_else(|| Error::parse(format!("{path}[{k}]"), "not an integer")),
                    _ => Err(Error::parse(format!("{path}[{k}]"), "expected a rational string")),
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Cyclotomic::from_coeffs(n, &coeffs))
        }
        _ => Err(Error::parse(path, "expected a rational string or a coefficient array")),
    }
}

fn ascii_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn parse_rational(s: &str, path: &str) -> Result<Rational> {
    let bad = || Error::parse(path, format!("`{s}` is not a rational of the form p or p/q"));
    let t = s.trim();
    if t.is_empty() || t != s {
        return Err(bad());
    }
    match t.split_once('/') {
        None => BigInt::from_str(t).map(Rational::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p = BigInt::from_str(p).map_err(|_| bad())?;
            let q = BigInt::from_str(q).map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(Error::parse(path, format!("`{s}` has zero denominator")));
            }
            Ok(Rational::new(p, q))
        }
    }
}

pub fn from_json_str(text: &str) -> Result<CategoryData> {
    let root: Value = serde_json::from_str(text).map_err(|e| {
        Error::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string())
    })?;
    let obj = root
        .as_object()
        .ok_or_else(|| Error::parse("$", "top level must be an object"))?;

    let version = obj
        .get("schema_version")
        .ok_or_else(|| Error::parse("$.schema_version", "missing required field"))?
        .as_u64()
        .ok_or_else(|| Error::parse("$.schema_version", "expected a positive integer"))?;
    if version != SCHEMA_VERSION {
        return Err(Error::SchemaVersion { found: version });
    }

    let kind = match get_str(obj, "kind")? {
        "modular" => Kind::Modular,
        "fusion_ring" => Kind::FusionRing,
        other => {
            return Err(Error::parse(
                "$.kind",
                format!("expected \"modular\" or \"fusion_ring\", found \"{other}\""),
            ))
        }
    };
    let (allowed, forbidden) = match kind {
        Kind::Modular => (MODULAR_FIELDS, FUSION_FIELDS),
        Kind::FusionRing => (FUSION_FIELDS, MODULAR_FIELDS),
    };
    for key in obj.keys() {
        if forbidden.contains(&key.as_str()) {
            return Err(Error::parse(
                format!("$.{key}"),
                format!("field not allowed for kind \"{}\"", kind.as_str()),
            ));
        }
        if !COMMON_FIELDS.contains(&key.as_str()) && !allowed.contains(&key.as_str()) {
            return Err(Error::parse(format!("$.{key}"), "unknown field"));
        }
    }

    let name = get_str(obj, "name")?.to_string();
    let conductor = get_field(obj, "conductor")?
        .as_u64()
        .filter(|&n| (1..=MAX_CONDUCTOR).contains(&n))
        .ok_or_else(|| {
            Error::parse("$.conductor", format!("expected an integer in 1..={MAX_CONDUCTOR}"))
        })? as u32;
    let rank = get_field(obj, "rank")?
        .as_u64()
        .filter(|&r| r > 0)
        .ok_or_else(|| Error::parse("$.rank", "expected a positive integer"))? as usize;
    let labels = get_array(obj, "labels", "$.labels")?
        .iter()
        .enumerate()
        .map(|(i, l)| {
            l.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::parse(format!("$.labels[{i}]"), "expected a string"))
        })
        .collect::<Result<Vec<_>>>()?;
    if labels.len() != rank {
        return Err(Error::parse("$.labels", format!("expected {rank} labels, found {}", labels.len())));
    }

    match kind {
        Kind::Modular => {
            let s = decode_matrix(get_field(obj, "s_matrix")?, rank, conductor, "$.s_matrix")?;
            let twists = obj
                .get("twists")
                .map(|t| decode_vector(t, rank, conductor, "$.twists"))
                .transpose()?;
            CategoryData::from_modular(name, conductor, labels, s, twists)
        }
        Kind::FusionRing => {
            let tensor = decode_fusion(get_field(obj, "fusion")?, rank)?;
            let ring = FusionRing::new(labels, &tensor)?;
            let dims = decode_vector(get_field(obj, "dims")?, rank, conductor, "$.dims")?;
            let char_table = obj
                .get("char_table")
                .map(|t| decode_matrix(t, rank, conductor, "$.char_table"))
                .transpose()?;
            Ok(CategoryData::from_fusion_ring(name, conductor, ring, dims, char_table))
        }
    }
}

pub fn to_json_string(data: &CategoryData) -> String {
    let n = data.conductor;
    let mut obj = Map::new();
    obj.insert("schema_version".into(), json!(SCHEMA_VERSION));
    obj.insert("name".into(), json!(data.name));
    obj.insert("kind".into(), json!(data.kind().as_str()));
    obj.insert("conductor".into(), json!(n));
    obj.insert("rank".into(), json!(data.rank()));
    obj.insert("labels".into(), json!(data.ring.labels()));
    match &data.modular {
        Some(m) => {
            obj.insert("s_matrix".into(), encode_matrix(&m.s_matrix, n));
            if let Some(t) = &m.twists {
                obj.insert("twists".into(), Value::Array(t.iter().map(|x| encode_value(x, n)).collect()));
            }
        }
        None => {
            obj.insert("fusion".into(), json!(data.ring.tensor()));
            obj.insert(
                "dims".into(),
                Value::Array(data.pivotal.dims.iter().map(|x| encode_value(x, n)).collect()),
            );
            if let Some(a) = &data.char_table {
                obj.insert("char_table".into(), encode_matrix(a, n));
            }
        }
    }
    let mut text = serde_json::to_string_pretty(&Value::Object(obj)).expect("JSON values always serialize");
    text.push('\n');
    text
}

pub fn load(path: impl AsRef<Path>) -> Result<CategoryData> {
    from_json_str(&fs::read_to_string(path)?)
}

pub fn save(data: &CategoryData, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, to_json_string(data))?;
    Ok(())
}

fn get_field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::parse(format!("$.{key}"), "missing required field"))
}

fn get_str<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a str> {
    get_field(obj, key)?
        .as_str()
        .ok_or_else(|| Error::parse(format!("$.{key}"), "expected a string"))
}

fn get_array<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Vec<Value>> {
    as_array(get_field(obj, key)?, path)
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::parse(path, "expected an array"))
}

fn decode_vector(v: &Value, len: usize, n: u32, path: &str) -> Result<Vec<Cyclotomic>> {
    let items = as_array(v, path)?;
    if items.len() != len {
        return Err(Error::parse(path, format!("expected {len} entries, found {}", items.len())));
    }
    items
        .iter()
        .enumerate()
        .map(|(i, x)| decode_value(x, n, &format!("{path}[{i}]")))
        .collect()
}

fn decode_matrix(v: &Value, rank: usize, n: u32, path: &str) -> Result<CycloMatrix> {
    let rows = as_array(v, path)?;
    if rows.len() != rank {
        return Err(Error::parse(path, format!("expected {rank} rows, found {}", rows.len())));
    }
    let rows = rows
        .iter()
        .enumerate()
        .map(|(i, row)| decode_vector(row, rank, n, &format!("{path}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    Ok(CycloMatrix::from_rows(rows))
}

fn decode_fusion(v: &Value, rank: usize) -> Result<Vec<Vec<Vec<u32>>>> {
    let shape_err = |path: String, found: usize| {
        Error::parse(path, format!("expected {rank} entries, found {found}"))
    };
    let planes = as_array(v, "$.fusion")?;
    if planes.len() != rank {
        return Err(shape_err("$.fusion".into(), planes.len()));
    }
    let mut out = Vec::with_capacity(rank);
    for (i, plane) in planes.iter().enumerate() {
        let path = format!("$.fusion[{i}]");
        let rows = as_array(plane, &path)?;
        if rows.len() != rank {
            return Err(shape_err(path, rows.len()));
        }
        let mut m = Vec::with_capacity(rank);
        for (j, row) in rows.iter().enumerate() {
            let path = format!("$.fusion[{i}][{j}]");
            let entries = as_array(row, &path)?;
            if entries.len() != rank {
                return Err(shape_err(path, entries.len()));
            }
            let row = entries
                .iter()
                .enumerate()
                .map(|(k, x)| {
                    x.as_u64()
                        .and_then(|x| u32::try_from(x).ok())
                        .ok_or_else(|| {
                            Error::parse(format!("$.fusion[{i}][{j}][{k}]"), "expected a nonnegative integer")
                        })
                })
                .collect::<Result<Vec<_>>>()?;
            m.push(row);
        }
        out.push(m);
    }
    Ok(out)
}

fn encode_matrix(m: &CycloMatrix, n: u32) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(|x| encode_value(x, n)).collect()))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::super::{catalog_data, CATALOG_NAMES};
    use super::*;

    fn location(e: Error) -> String {
        match e {
            Error::Parse { location, .. } => location,
            other => panic!("expected a parse error, got {other}"),
        }
    }

    #[test]
    fn catalog_round_trips() {
        for name in CATALOG_NAMES {
            let data = catalog_data(name).unwrap();
            let back = from_json_str(&to_json_string(&data)).unwrap();
            assert_eq!(back, data, "{name}");
        }
    }

    #[test]
    fn missing_s_matrix() {
        let text = r#"{"schema_version":1,"name":"x","kind":"modular","conductor":1,"rank":1,"labels":["1"]}"#;
        assert_eq!(location(from_json_str(text).unwrap_err()), "$.s_matrix");
    }

    #[test]
    fn wrong_coefficient_count() {
        let text = r#"{"schema_version":1,"name":"x","kind":"modular","conductor":5,"rank":2,
            "labels":["1","t"],"s_matrix":[["1",["0","0","-1"]],[["0","0","-1","-1"],"-1"]]}"#;
        let loc = location(from_json_str(text).unwrap_err());
        assert_eq!(loc, "$.s_matrix[0][1]");
    }

    #[test]
    fn syntax_errors_carry_position() {
        let loc = location(from_json_str("{\n  \"schema_version\": 1,\n  oops\n}").unwrap_err());
        assert!(loc.starts_with("line 3"), "{loc}");
    }

    #[test]
    fn unknown_and_misplaced_fields() {
        let base = r#""schema_version":1,"name":"x","kind":"modular","conductor":1,"rank":1,"labels":["1"],"s_matrix":[["1"]]"#;
        let unknown = format!("{{{base},\"colour\":3}}");
        assert_eq!(location(from_json_str(&unknown).unwrap_err()), "$.colour");
        let misplaced = format!("{{{base},\"dims\":[\"1\"]}}");
        assert_eq!(location(from_json_str(&misplaced).unwrap_err()), "$.dims");
        assert!(from_json_str(&format!("{{{base}}}")).is_ok());
    }

    #[test]
    fn schema_version_mismatch() {
        let text = r#"{"schema_version":2,"name":"x","kind":"modular","conductor":1,"rank":1,"labels":["1"],"s_matrix":[["1"]]}"#;
        assert!(matches!(from_json_str(text), Err(Error::SchemaVersion { found: 2 })));
    }

    #[test]
    fn value_encoding() {
        assert_eq!(encode_value(&Cyclotomic::ratio(-3, 2), 5), json!("-3/2"));
        let g = -(Cyclotomic::zeta_pow(5, 2) + Cyclotomic::zeta_pow(5, 3));
        assert_eq!(encode_value(&g, 5), json!(["0", "0", "-1", "-1"]));
        assert_eq!(decode_value(&json!(["0", "0", "-1", "-1"]), 5, "$").unwrap(), g);
        assert!(decode_value(&json!("1/0"), 5, "$").is_err());
        assert!(decode_value(&json!("x"), 5, "$").is_err());
        assert_eq!(decode_value(&json!("4/6"), 1, "$").unwrap(), Cyclotomic::ratio(2, 3));
    }

    #[test]
    fn files_round_trip_on_disk() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("fib.json");
        let data = catalog_data("fibonacci").unwrap();
        save(&data, &path).unwrap();
        assert_eq!(load(&path).unwrap(), data);
        assert!(matches!(load(dir.path().join("missing.json")), Err(Error::Io(_))));
    }
}
