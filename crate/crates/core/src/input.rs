//! JSON input documents and their validation.
//!
//! Three document types are accepted, dispatched on the `type` field:
//!
//! ```json
//! {"type":"coordinate","variables":["x","y"],"primes":[["x"],["y"]]}
//! {"type":"abstract","dim":4,"pairdim":[[4,2,2],[2,4,2],[2,2,4]]}
//! {"type":"projective","dim":2,"components":["Z1","Z2"],"inter_dim":[[2,0],[0,2]]}
//! ```
//!
//! Variables are named strings, mapped to indices in list order. Coordinate
//! primes that are duplicates or contain another prime are minimalized with a
//! warning; strict mode turns the warnings (and unknown keys) into errors.

use serde_json::{Map, Value};

use crate::arrangement::{
    minimalize, AbstractArrangement, CoordinateArrangement, VariableSet, MAX_VARS,
};
use crate::error::{Error, Result};
use crate::projective::ProjectiveVariety;

/// Environment variable overriding the variable-count cap.
pub const MAX_VARS_ENV: &str = "LYUBGRAPH_MAX_VARS";

#[derive(Clone, Debug)]
pub struct ParseOptions {
    pub strict: bool,
    pub max_vars: usize,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            strict: false,
            max_vars: MAX_VARS,
        }
    }
}

#[derive(Clone, Debug)]
pub enum InputDoc {
    Coordinate(CoordinateArrangement),
    Abstract(AbstractArrangement),
    Projective(ProjectiveVariety),
}

#[derive(Clone, Debug)]
pub struct ParsedInput {
    pub doc: InputDoc,
    pub warnings: Vec<String>,
}

/// Parses and validates one input document.
pub fn parse_document(text: &str, opts: &ParseOptions) -> Result<ParsedInput> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Json {
        message: e.to_string(),
    })?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::schema("$", "expected a JSON object"))?;
    let ty = obj
        .get("type")
        .ok_or_else(|| Error::schema("type", "missing field"))?
        .as_str()
        .ok_or_else(|| Error::schema("type", "expected a string"))?;

    let mut warnings = Vec::new();
    let doc = match ty {
        "coordinate" => {
            check_keys(obj, &["type", "variables", "primes"], opts, &mut warnings)?;
            InputDoc::Coordinate(parse_coordinate(obj, opts, &mut warnings)?)
        }
        "abstract" => {
            check_keys(obj, &["type", "dim", "pairdim"], opts, &mut warnings)?;
            InputDoc::Abstract(parse_abstract(obj)?)
        }
        "projective" => {
            check_keys(
                obj,
                &["type", "dim", "components", "inter_dim"],
                opts,
                &mut warnings,
            )?;
            InputDoc::Projective(parse_projective(obj)?)
        }
        other => {
            return Err(Error::schema(
                "type",
                format!(
                    "unknown input type {other:?} (expected coordinate, abstract, or projective)"
                ),
            ))
        }
    };
    Ok(ParsedInput { doc, warnings })
}

fn check_keys(
    obj: &Map<String, Value>,
    known: &[&str],
    opts: &ParseOptions,
    warnings: &mut Vec<String>,
) -> Result<()> {
    for key in obj.keys() {
        if !known.contains(&key.as_str()) {
            if opts.strict {
                return Err(Error::schema(key, "unknown key"));
            }
            warnings.push(format!("ignoring unknown key {key:?}"));
        }
    }
    Ok(())
}

fn get<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::schema(key, "missing field"))
}

fn as_array<'a>(value: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    value
        .as_array()
        .ok_or_else(|| Error::schema(path, "expected an array"))
}

fn as_str<'a>(value: &'a Value, path: &str) -> Result<&'a str> {
    value
        .as_str()
        .ok_or_else(|| Error::schema(path, "expected a string"))
}

/// Sanity ceiling on declared dimensions; the graph family is materialized
/// per threshold, so an absurd `dim` would otherwise exhaust memory.
pub const MAX_DIM: usize = 4096;

fn as_dim(value: &Value, path: &str) -> Result<usize> {
    let v = value
        .as_u64()
        .ok_or_else(|| Error::schema(path, "expected a non-negative integer"))?;
    if v > MAX_DIM as u64 {
        return Err(Error::schema(
            path,
            format!("{v} exceeds the supported maximum of {MAX_DIM}"),
        ));
    }
    Ok(v as usize)
}

fn parse_coordinate(
    obj: &Map<String, Value>,
    opts: &ParseOptions,
    warnings: &mut Vec<String>,
) -> Result<CoordinateArrangement> {
    let variables = as_array(get(obj, "variables")?, "variables")?;
    let mut labels = Vec::with_capacity(variables.len());
    for (k, v) in variables.iter().enumerate() {
        let name = as_str(v, &format!("variables[{k}]"))?;
        if labels.iter().any(|l| l == name) {
            return Err(Error::DuplicateVariable { name: name.into() });
        }
        labels.push(name.to_string());
    }
    let n = labels.len();
    if n == 0 {
        return Err(Error::schema("variables", "at least one variable required"));
    }
    if n > opts.max_vars.min(MAX_VARS) {
        return Err(Error::TooManyVariables {
            n,
            max: opts.max_vars.min(MAX_VARS),
        });
    }

    let primes_value = as_array(get(obj, "primes")?, "primes")?;
    if primes_value.is_empty() {
        return Err(Error::NoPrimes);
    }
    let full = VariableSet::full(n);
    let mut primes = Vec::with_capacity(primes_value.len());
    for (index, entry) in primes_value.iter().enumerate() {
        let names = as_array(entry, &format!("primes[{index}]"))?;
        let mut set = VariableSet::empty();
        for (k, v) in names.iter().enumerate() {
            let name = as_str(v, &format!("primes[{index}][{k}]"))?;
            let position = labels
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| Error::UnknownVariable { name: name.into() })?;
            set.insert(position);
        }
        if set.is_empty() {
            return Err(Error::EmptyPrime { index });
        }
        if set == full {
            return Err(Error::FullPrime { index });
        }
        primes.push(set);
    }

    // normalize to an antichain: report duplicates and containments, then
    // keep the inclusion-minimal members
    for i in 0..primes.len() {
        for j in 0..i {
            if primes[i] == primes[j] {
                if opts.strict {
                    return Err(Error::DuplicatePrime { index: i, first: j });
                }
                warnings.push(format!("primes[{i}] duplicates primes[{j}]; dropped"));
            }
        }
    }
    for i in 0..primes.len() {
        for j in 0..primes.len() {
            if i != j && primes[j] != primes[i] && primes[j].is_subset_of(primes[i]) {
                if opts.strict {
                    return Err(Error::ContainedPrime { outer: i, inner: j });
                }
                warnings.push(format!(
                    "primes[{i}] contains primes[{j}]; dropped by minimalization"
                ));
            }
        }
    }
    let minimal = minimalize(&primes);
    CoordinateArrangement::with_labels(labels, minimal)
}

fn parse_abstract(obj: &Map<String, Value>) -> Result<AbstractArrangement> {
    let dim = as_dim(get(obj, "dim")?, "dim")?;
    let rows = as_array(get(obj, "pairdim")?, "pairdim")?;
    let mut pairdim = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let row = as_array(row, &format!("pairdim[{i}]"))?;
        let mut out = Vec::with_capacity(row.len());
        for (j, v) in row.iter().enumerate() {
            out.push(as_dim(v, &format!("pairdim[{i}][{j}]"))?);
        }
        pairdim.push(out);
    }
    AbstractArrangement::new(dim, pairdim)
}

fn parse_projective(obj: &Map<String, Value>) -> Result<ProjectiveVariety> {
    let dim = as_dim(get(obj, "dim")?, "dim")?;
    let components = as_array(get(obj, "components")?, "components")?
        .iter()
        .enumerate()
        .map(|(k, v)| Ok(as_str(v, &format!("components[{k}]"))?.to_string()))
        .collect::<Result<Vec<_>>>()?;
    let rows = as_array(get(obj, "inter_dim")?, "inter_dim")?;
    let mut inter_dim = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let row = as_array(row, &format!("inter_dim[{i}]"))?;
        let mut out = Vec::with_capacity(row.len());
        for (j, v) in row.iter().enumerate() {
            let entry = v.as_i64().ok_or_else(|| {
                Error::schema(format!("inter_dim[{i}][{j}]"), "expected an integer")
            })?;
            out.push(entry);
        }
        inter_dim.push(out);
    }
    ProjectiveVariety::new(dim, components, inter_dim)
}

/// Renders a coordinate arrangement back into the input schema.
pub fn coordinate_to_value(arr: &CoordinateArrangement) -> Value {
    let labels = arr.labels();
    let primes: Vec<Value> = arr
        .primes()
        .iter()
        .map(|p| Value::Array(p.iter().map(|i| Value::String(labels[i].clone())).collect()))
        .collect();
    let mut obj = Map::new();
    obj.insert("type".into(), Value::String("coordinate".into()));
    obj.insert(
        "variables".into(),
        Value::Array(labels.into_iter().map(Value::String).collect()),
    );
    obj.insert("primes".into(), Value::Array(primes));
    Value::Object(obj)
}

/// Renders an abstract arrangement back into the input schema.
pub fn abstract_to_value(arr: &AbstractArrangement) -> Value {
    let mut obj = Map::new();
    obj.insert("type".into(), Value::String("abstract".into()));
    obj.insert("dim".into(), Value::from(arr.dim() as u64));
    obj.insert(
        "pairdim".into(),
        Value::Array(
            arr.rows()
                .iter()
                .map(|row| Value::Array(row.iter().map(|&v| Value::from(v as u64)).collect()))
                .collect(),
        ),
    );
    Value::Object(obj)
}

/// Renders a projective variety back into the input schema.
pub fn projective_to_value(x: &ProjectiveVariety) -> Value {
    let mut obj = Map::new();
    obj.insert("type".into(), Value::String("projective".into()));
    obj.insert("dim".into(), Value::from(x.dim() as u64));
    obj.insert(
        "components".into(),
        Value::Array(
            x.components()
                .iter()
                .map(|c| Value::String(c.clone()))
                .collect(),
        ),
    );
    obj.insert(
        "inter_dim".into(),
        Value::Array(
            x.rows()
                .iter()
                .map(|row| Value::Array(row.iter().map(|&v| Value::from(v)).collect()))
                .collect(),
        ),
    );
    Value::Object(obj)
}

#[cfg(test)]
mod tests {
    use super::*;

    const A6: &str = r#"{"type":"coordinate","variables":["x","y","z","w","u","v"],"primes":[["x","y"],["z","w"],["u","v"]]}"#;

    #[test]
    fn parses_the_coordinate_schema() {
        let parsed = parse_document(A6, &ParseOptions::default()).unwrap();
        let InputDoc::Coordinate(arr) = parsed.doc else {
            panic!("expected coordinate");
        };
        assert!(parsed.warnings.is_empty());
        assert_eq!(arr.n(), 6);
        assert_eq!(arr.prime_count(), 3);
        assert_eq!(arr.height().unwrap(), 2);
        assert_eq!(arr.dimension().unwrap(), 4);
        assert_eq!(arr.label(0), "x");
    }

    #[test]
    fn parses_abstract_and_projective() {
        let text = r#"{"type":"abstract","dim":4,"pairdim":[[4,2,2],[2,4,2],[2,2,4]]}"#;
        let parsed = parse_document(text, &ParseOptions::default()).unwrap();
        let InputDoc::Abstract(arr) = parsed.doc else {
            panic!("expected abstract");
        };
        assert_eq!(arr.dim(), 4);
        assert_eq!(arr.prime_count(), 3);

        let text =
            r#"{"type":"projective","dim":2,"components":["Z1","Z2"],"inter_dim":[[2,0],[0,2]]}"#;
        let parsed = parse_document(text, &ParseOptions::default()).unwrap();
        let InputDoc::Projective(x) = parsed.doc else {
            panic!("expected projective");
        };
        assert_eq!(x.dim(), 2);
        assert_eq!(x.component_count(), 2);
    }

    #[test]
    fn containments_are_minimalized_with_a_warning() {
        let text = r#"{"type":"coordinate","variables":["x","y","z","w"],"primes":[["x","y"],["x","y","z"],["z","w"]]}"#;
        let parsed = parse_document(text, &ParseOptions::default()).unwrap();
        let InputDoc::Coordinate(arr) = parsed.doc else {
            panic!("expected coordinate");
        };
        assert_eq!(arr.prime_count(), 2);
        assert_eq!(parsed.warnings.len(), 1);

        let strict = ParseOptions {
            strict: true,
            ..ParseOptions::default()
        };
        assert!(matches!(
            parse_document(text, &strict),
            Err(Error::ContainedPrime { .. })
        ));
    }

    #[test]
    fn duplicates_are_dropped_with_a_warning() {
        let text = r#"{"type":"coordinate","variables":["x","y","z","w"],"primes":[["x","y"],["z","w"],["y","x"]]}"#;
        let parsed = parse_document(text, &ParseOptions::default()).unwrap();
        let InputDoc::Coordinate(arr) = parsed.doc else {
            panic!("expected coordinate");
        };
        assert_eq!(arr.prime_count(), 2);
        assert_eq!(parsed.warnings.len(), 1);

        let strict = ParseOptions {
            strict: true,
            ..ParseOptions::default()
        };
        assert!(matches!(
            parse_document(text, &strict),
            Err(Error::DuplicatePrime { index: 2, first: 0 })
        ));
    }

    #[test]
    fn named_error_cases() {
        let unknown = r#"{"type":"coordinate","variables":["x","y"],"primes":[["q"]]}"#;
        assert!(matches!(
            parse_document(unknown, &ParseOptions::default()),
            Err(Error::UnknownVariable { .. })
        ));

        let empty = r#"{"type":"coordinate","variables":["x","y"],"primes":[[]]}"#;
        assert!(matches!(
            parse_document(empty, &ParseOptions::default()),
            Err(Error::EmptyPrime { index: 0 })
        ));

        let full = r#"{"type":"coordinate","variables":["x","y"],"primes":[["x","y"]]}"#;
        assert!(matches!(
            parse_document(full, &ParseOptions::default()),
            Err(Error::FullPrime { index: 0 })
        ));

        let dup_var = r#"{"type":"coordinate","variables":["x","x"],"primes":[["x"]]}"#;
        assert!(matches!(
            parse_document(dup_var, &ParseOptions::default()),
            Err(Error::DuplicateVariable { .. })
        ));
    }

    #[test]
    fn unknown_keys_follow_strictness() {
        let text = r#"{"type":"abstract","dim":2,"pairdim":[[2]],"note":"hi"}"#;
        let parsed = parse_document(text, &ParseOptions::default()).unwrap();
        assert_eq!(parsed.warnings.len(), 1);

        let strict = ParseOptions {
            strict: true,
            ..ParseOptions::default()
        };
        assert!(matches!(
            parse_document(text, &strict),
            Err(Error::Schema { .. })
        ));
    }

    #[test]
    fn syntax_errors_carry_location() {
        let err = parse_document("{\n  \"type\": }", &ParseOptions::default()).unwrap_err();
        let message = err.to_string();
        assert!(message.contains("line 2"), "{message}");
    }

    #[test]
    fn dimension_cap_is_enforced() {
        let text = r#"{"type":"abstract","dim":1000000000,"pairdim":[[1000000000]]}"#;
        let err = parse_document(text, &ParseOptions::default()).unwrap_err();
        assert!(err.to_string().contains("exceeds the supported maximum"));
    }

    #[test]
    fn empty_variable_list_is_rejected() {
        let text = r#"{"type":"coordinate","variables":[],"primes":[]}"#;
        let err = parse_document(text, &ParseOptions::default()).unwrap_err();
        assert!(matches!(err, Error::Schema { .. }));
    }

    #[test]
    fn variable_cap_is_enforced() {
        let opts = ParseOptions {
            max_vars: 3,
            ..ParseOptions::default()
        };
        let err = parse_document(A6, &opts).unwrap_err();
        assert!(matches!(err, Error::TooManyVariables { n: 6, max: 3 }));
    }

    #[test]
    fn roundtrip_through_values() {
        let parsed = parse_document(A6, &ParseOptions::default()).unwrap();
        let InputDoc::Coordinate(arr) = parsed.doc else {
            panic!("expected coordinate");
        };
        let text = serde_json::to_string(&coordinate_to_value(&arr)).unwrap();
        let reparsed = parse_document(&text, &ParseOptions::default()).unwrap();
        let InputDoc::Coordinate(back) = reparsed.doc else {
            panic!("expected coordinate");
        };
        assert_eq!(arr, back);
    }
}
