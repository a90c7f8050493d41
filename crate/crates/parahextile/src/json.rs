//! `parahextile/1` patch documents.
//!
//! Angles are written as exact `"num/den"` strings (`"72"` when whole);
//! coordinates use the shortest decimal that reads back to the same `f64`.

use parahextile_core::{
    make_hexagon, AngleDeg, BisectCase, BisectionSpec, Isometry, Patch, PatchKind, PatchMeta,
    PlacedTile, Point, TileProto,
};
use serde_json::{json, Map, Value};

pub const FORMAT: &str = "parahextile/1";

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DocError {
    #[error("parse error at {context}: {message}")]
    Parse { context: String, message: String },
    #[error("schema error: {0}")]
    Schema(String),
}

fn parse_err(context: impl Into<String>, message: impl Into<String>) -> DocError {
    DocError::Parse {
        context: context.into(),
        message: message.into(),
    }
}

fn angle_str(a: AngleDeg) -> String {
    a.to_string()
}

fn kind_name(k: PatchKind) -> &'static str {
    match k {
        PatchKind::Rotational => "rotational",
        PatchKind::Hole => "hole",
    }
}

pub fn to_value(patch: &Patch) -> Value {
    let hex = &patch.prototype;
    let bisection = match &patch.bisection {
        Some(b) => json!({ "case": b.case.to_string(), "t": b.t }),
        None => Value::Null,
    };
    let tiles: Vec<Value> = patch
        .tiles
        .iter()
        .map(|t| {
            json!({
                "id": t.id,
                "proto": t.proto.name(),
                "placement": {
                    "reflect": t.placement.reflect,
                    "rotation": angle_str(t.placement.rotation),
                    "translation": [t.placement.translation.x, t.placement.translation.y],
                },
            })
        })
        .collect();
    json!({
        "format": FORMAT,
        "prototype": { "a": angle_str(hex.a()), "b": angle_str(hex.b()), "c": angle_str(hex.c()) },
        "bisection": bisection,
        "meta": {
            "kind": kind_name(patch.meta.kind),
            "order": patch.meta.order,
            "depth": patch.meta.depth,
        },
        "tiles": tiles,
    })
}

pub fn to_json(patch: &Patch) -> String {
    let mut s =
        serde_json::to_string_pretty(&to_value(patch)).expect("patch values always serialize");
    s.push('\n');
    s
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value, DocError> {
    obj.get(key)
        .ok_or_else(|| parse_err(format!("field {path}.{key}"), "missing"))
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, DocError> {
    v.as_object()
        .ok_or_else(|| parse_err(format!("field {path}"), "expected an object"))
}

fn angle_field(obj: &Map<String, Value>, key: &str, path: &str) -> Result<AngleDeg, DocError> {
    let v = field(obj, key, path)?;
    let s = v
        .as_str()
        .ok_or_else(|| parse_err(format!("field {path}.{key}"), "expected an angle string"))?;
    s.parse()
        .map_err(|e| parse_err(format!("field {path}.{key}"), format!("{e}")))
}

fn uint_field(obj: &Map<String, Value>, key: &str, path: &str) -> Result<u32, DocError> {
    field(obj, key, path)?
        .as_u64()
        .and_then(|n| u32::try_from(n).ok())
        .ok_or_else(|| {
            parse_err(
                format!("field {path}.{key}"),
                "expected a non-negative integer",
            )
        })
}

fn float(v: &Value, path: &str) -> Result<f64, DocError> {
    v.as_f64()
        .ok_or_else(|| parse_err(format!("field {path}"), "expected a number"))
}

pub fn from_json(text: &str) -> Result<Patch, DocError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| {
        parse_err(
            format!("line {}, column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    from_value(&doc)
}

pub fn from_value(doc: &Value) -> Result<Patch, DocError> {
    let root = doc
        .as_object()
        .ok_or_else(|| DocError::Schema("document is not a JSON object".into()))?;
    match root.get("format").and_then(Value::as_str) {
        Some(FORMAT) => {}
        Some(other) => {
            return Err(DocError::Schema(format!(
                "unsupported format {other:?}, expected {FORMAT:?}"
            )))
        }
        None => return Err(DocError::Schema(format!("missing \"format\": {FORMAT:?}"))),
    }
    let proto = root
        .get("prototype")
        .ok_or_else(|| DocError::Schema("missing \"prototype\"".into()))?;
    let proto = object(proto, "prototype")?;
    let a = angle_field(proto, "a", "prototype")?;
    let b = angle_field(proto, "b", "prototype")?;
    let c = angle_field(proto, "c", "prototype")?;
    let prototype = make_hexagon(a, b).map_err(|e| parse_err("field prototype", e.to_string()))?;
    if prototype.c() != c {
        return Err(parse_err("field prototype.c", "angles must sum to 360"));
    }

    let bisection = match root.get("bisection") {
        None | Some(Value::Null) => None,
        Some(v) => {
            let obj = object(v, "bisection")?;
            let case = field(obj, "case", "bisection")?.as_str().ok_or_else(|| {
                parse_err("field bisection.case", "expected \"I\", \"II\" or \"III\"")
            })?;
            let case: BisectCase = case
                .parse()
                .map_err(|e| parse_err("field bisection.case", format!("{e}")))?;
            let t = float(field(obj, "t", "bisection")?, "bisection.t")?;
            Some(
                BisectionSpec::new(case, t)
                    .map_err(|e| parse_err("field bisection.t", e.to_string()))?,
            )
        }
    };

    let meta = object(field(root, "meta", "document")?, "meta")?;
    let kind = match field(meta, "kind", "meta")?.as_str() {
        Some("rotational") => PatchKind::Rotational,
        Some("hole") => PatchKind::Hole,
        _ => {
            return Err(parse_err(
                "field meta.kind",
                "expected \"rotational\" or \"hole\"",
            ))
        }
    };
    let meta = PatchMeta {
        kind,
        order: uint_field(meta, "order", "meta")?,
        depth: uint_field(meta, "depth", "meta")?,
    };

    let list = field(root, "tiles", "document")?
        .as_array()
        .ok_or_else(|| parse_err("field tiles", "expected an array"))?;
    let mut tiles = Vec::with_capacity(list.len());
    for (i, t) in list.iter().enumerate() {
        let path = format!("tiles[{i}]");
        let obj = object(t, &path)?;
        let id = uint_field(obj, "id", &path)?;
        let name = field(obj, "proto", &path)?.as_str().unwrap_or_default();
        let proto = TileProto::from_name(name).ok_or_else(|| {
            parse_err(
                format!("field {path}.proto"),
                format!("unknown prototype {name:?}"),
            )
        })?;
        if (proto == TileProto::Hexagon) == bisection.is_some() {
            return Err(parse_err(
                format!("field {path}.proto"),
                "piece type does not match the bisection setting",
            ));
        }
        let ppath = format!("{path}.placement");
        let pl = object(field(obj, "placement", &path)?, &ppath)?;
        let reflect = field(pl, "reflect", &ppath)?
            .as_bool()
            .ok_or_else(|| parse_err(format!("field {ppath}.reflect"), "expected a boolean"))?;
        let rotation = angle_field(pl, "rotation", &ppath)?;
        let tr = field(pl, "translation", &ppath)?
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| parse_err(format!("field {ppath}.translation"), "expected [x, y]"))?;
        let x = float(&tr[0], &format!("{ppath}.translation[0]"))?;
        let y = float(&tr[1], &format!("{ppath}.translation[1]"))?;
        tiles.push(PlacedTile {
            id,
            proto,
            placement: Isometry::new(reflect, rotation, Point::new(x, y)),
        });
    }
    let mut ids: Vec<u32> = tiles.iter().map(|t| t.id).collect();
    ids.sort_unstable();
    if ids.windows(2).any(|w| w[0] == w[1]) {
        return Err(parse_err("field tiles", "tile ids must be unique"));
    }
    Ok(Patch {
        prototype,
        bisection,
        tiles,
        meta,
    })
}
