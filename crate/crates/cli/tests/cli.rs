//! End-to-end CLI tests: schema validity of every JSON document, golden-file
//! comparisons with timings zeroed, the exit-code contract, and seed
//! precedence.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

use polyabc_cli::run_command;

fn repo_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .canonicalize()
        .unwrap()
}

fn schema() -> Value {
    let text = std::fs::read_to_string(repo_root().join("docs/report-schema.json")).unwrap();
    serde_json::from_str(&text).unwrap()
}

// -- minimal JSON Schema checker (the subset the report schema uses) --

struct Validator {
    definitions: BTreeMap<String, Value>,
}

impl Validator {
    fn new(schema: &Value) -> Self {
        let definitions = schema["definitions"]
            .as_object()
            .map(|m| m.iter().map(|(k, v)| (k.clone(), v.clone())).collect())
            .unwrap_or_default();
        Validator { definitions }
    }

    fn resolve<'a>(&'a self, node: &'a Value) -> &'a Value {
        if let Some(r) = node.get("$ref").and_then(Value::as_str) {
            let name = r.strip_prefix("#/definitions/").expect("local ref");
            return self.definitions.get(name).expect("known ref");
        }
        node
    }

    fn type_matches(ty: &str, value: &Value) -> bool {
        match ty {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "integer" => value.is_i64() || value.is_u64(),
            "number" => value.is_number(),
            "boolean" => value.is_boolean(),
            "null" => value.is_null(),
            _ => false,
        }
    }

    fn check(&self, node: &Value, value: &Value, path: &str) -> Result<(), String> {
        let node = self.resolve(node);
        if let Some(one_of) = node.get("oneOf").and_then(Value::as_array) {
            let hits = one_of
                .iter()
                .filter(|branch| self.check(branch, value, path).is_ok())
                .count();
            if hits != 1 {
                return Err(format!("{path}: {hits} of {} oneOf branches match", one_of.len()));
            }
            return Ok(());
        }
        if let Some(ty) = node.get("type") {
            let ok = match ty {
                Value::String(t) => Self::type_matches(t, value),
                Value::Array(ts) => ts
                    .iter()
                    .filter_map(Value::as_str)
                    .any(|t| Self::type_matches(t, value)),
                _ => false,
            };
            if !ok {
                return Err(format!("{path}: type mismatch, expected {ty}"));
            }
        }
        if let Some(allowed) = node.get("enum").and_then(Value::as_array) {
            if !allowed.contains(value) {
                return Err(format!("{path}: {value} not in enum"));
            }
        }
        if let Some(obj) = value.as_object() {
            if let Some(required) = node.get("required").and_then(Value::as_array) {
                for key in required.iter().filter_map(Value::as_str) {
                    if !obj.contains_key(key) {
                        return Err(format!("{path}: missing required key {key:?}"));
                    }
                }
            }
            let props = node.get("properties").and_then(Value::as_object);
            if node.get("additionalProperties") == Some(&Value::Bool(false)) {
                let known = props.map(|p| p.keys().collect::<Vec<_>>()).unwrap_or_default();
                for key in obj.keys() {
                    if !known.contains(&key) {
                        return Err(format!("{path}: unexpected key {key:?}"));
                    }
                }
            }
            if let Some(props) = props {
                for (key, sub) in props {
                    if let Some(v) = obj.get(key) {
                        self.check(sub, v, &format!("{path}/{key}"))?;
                    }
                }
            }
        }
        if let Some(arr) = value.as_array() {
            if let Some(min) = node.get("minItems").and_then(Value::as_u64) {
                if (arr.len() as u64) < min {
                    return Err(format!("{path}: fewer than {min} items"));
                }
            }
            if let Some(max) = node.get("maxItems").and_then(Value::as_u64) {
                if (arr.len() as u64) > max {
                    return Err(format!("{path}: more than {max} items"));
                }
            }
            if let Some(items) = node.get("items") {
                for (i, v) in arr.iter().enumerate() {
                    self.check(items, v, &format!("{path}[{i}]"))?;
                }
            }
        }
        if let Some(min) = node.get("minimum").and_then(Value::as_i64) {
            if let Some(n) = value.as_i64() {
                if n < min {
                    return Err(format!("{path}: {n} below minimum {min}"));
                }
            }
        }
        Ok(())
    }
}

fn validate(doc: &Value) -> Result<(), String> {
    let schema = schema();
    Validator::new(&schema).check(&schema, doc, "#")
}

fn doc_value(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["polyabc"];
    argv.extend_from_slice(args);
    let (code, doc) = run_command(argv);
    (code, serde_json::to_value(&doc).unwrap())
}

fn zero_timings(doc: &mut Value) {
    doc["wall_time_ms"] = Value::from(0);
    if let Some(inner) = doc.pointer_mut("/result/report/wall_time_ms") {
        *inner = Value::from(0);
    }
}

const GOLDEN_CASES: &[(&str, &[&str])] = &[
    ("radical", &["radical", "--field", "q", "t^3 + t^2"]),
    ("div_radical", &["div-radical", "--field", "q", "t^3 + t^2"]),
    ("wronskian", &["wronskian", "--field", "q", "-a", "t^2", "-b", "t + 1"]),
    ("check_ms", &["check-ms", "--field", "fp:5", "-a", "-1", "-b", "-t^5", "-c", "(1+t)^5"]),
    ("check_ms_noncoprime", &["check-ms-noncoprime", "--field", "q", "-a", "t^2", "-b", "-t^2 + 1", "-c", "-1"]),
    ("check_flt", &["check-flt", "--field", "fp:5", "-n", "3", "-a", "1", "-b", "2", "-c", "4"]),
    ("check_catalan", &["check-catalan", "--field", "q", "-p", "3", "-q", "6", "-r", "2", "-w", "-1", "-a", "2", "-b", "1", "-c", "3"]),
    ("check_davenport", &["check-davenport", "--field", "q", "-f", "t^2", "-g", "t^3 + 1"]),
    ("check_davenport_prime", &["check-davenport-prime", "--field", "fp:2", "-f", "t^4", "-g", "t^6 + t"]),
    ("check_elliptic", &["check-elliptic", "--field", "q", "--x-num", "2", "--y-num", "3"]),
    ("descend", &["descend", "--field", "fp:3", "t^6 + 2*t^3 + 1"]),
    ("search", &["search", "--field", "fp:2", "--target", "ms", "--max-degree", "2"]),
    ("reproduce", &["reproduce"]),
    ("usage_error", &["radical", "--field", "zz", "t"]),
];

// regenerate with: cargo test -p polyabc-cli --test cli -- --ignored update_goldens
#[test]
#[ignore]
fn update_goldens() {
    let dir = repo_root().join("crates/cli/tests/golden");
    std::fs::create_dir_all(&dir).unwrap();
    for (name, args) in GOLDEN_CASES {
        let (_, mut doc) = doc_value(args);
        zero_timings(&mut doc);
        let text = serde_json::to_string_pretty(&doc).unwrap();
        std::fs::write(dir.join(format!("{name}.json")), text + "\n").unwrap();
    }
}

#[test]
fn golden_documents() {
    for (name, args) in GOLDEN_CASES {
        let (_, mut doc) = doc_value(args);
        zero_timings(&mut doc);
        let path = repo_root().join(format!("crates/cli/tests/golden/{name}.json"));
        let expected: Value =
            serde_json::from_str(&std::fs::read_to_string(&path).unwrap_or_else(|e| {
                panic!("missing golden file {}: {e}", path.display())
            }))
            .unwrap();
        assert_eq!(doc, expected, "golden mismatch for {name}");
    }
}

#[test]
fn every_document_is_schema_valid() {
    for (name, args) in GOLDEN_CASES {
        let (_, doc) = doc_value(args);
        validate(&doc).unwrap_or_else(|e| panic!("{name}: schema violation: {e}"));
    }
    // help text documents too
    let (code, doc) = doc_value(&["--help"]);
    assert_eq!(code, 0);
    validate(&doc).unwrap();
}

#[test]
fn exit_code_contract() {
    // 0: clean run
    let (code, _) = doc_value(&["radical", "--field", "q", "t^3 + t^2"]);
    assert_eq!(code, 0);
    // 1: library precondition rejected (shared factor t)
    let (code, doc) = doc_value(&[
        "check-davenport-prime", "--field", "fp:2", "-f", "t^4", "-g", "t^6 + t",
    ]);
    assert_eq!(code, 1);
    assert_eq!(doc["status"], "precondition_failed");
    // 1: literal outside the field
    let (code, _) = doc_value(&["radical", "--field", "fp:2", "1/2"]);
    assert_eq!(code, 1);
    // 2: malformed expression
    let (code, doc) = doc_value(&["radical", "--field", "q", "t^^2"]);
    assert_eq!(code, 2);
    assert!(doc["result"]["error"].as_str().unwrap().contains("offset 2"));
    // 2: malformed flags
    let (code, _) = doc_value(&["radical", "--field", "zz", "t"]);
    assert_eq!(code, 2);
    let (code, _) = doc_value(&["no-such-command"]);
    assert_eq!(code, 2);
    // 3: violations found (non-coprime bound fails in characteristic 3)
    let (code, doc) = doc_value(&[
        "search", "--field", "fp:3", "--target", "noncoprime", "--max-degree", "4",
    ]);
    assert_eq!(code, 3);
    assert_eq!(doc["status"], "theorem_violated");
}

#[test]
fn binary_exit_codes_match_library() {
    let bin = env!("CARGO_BIN_EXE_polyabc");
    let cases: &[(&[&str], i32)] = &[
        (&["radical", "--field", "q", "t^3 + t^2"], 0),
        (&["check-davenport-prime", "--field", "fp:2", "-f", "t^4", "-g", "t^6 + t"], 1),
        (&["radical", "--field", "q", "t^^2"], 2),
        (&["search", "--field", "fp:3", "--target", "noncoprime", "--max-degree", "4"], 3),
    ];
    for (args, expected) in cases {
        let out = Command::new(bin).args(*args).output().unwrap();
        assert_eq!(
            out.status.code(),
            Some(*expected),
            "exit code for {args:?}; stdout: {}",
            String::from_utf8_lossy(&out.stdout)
        );
    }
}

#[test]
fn seed_env_var_with_flag_precedence() {
    let bin = env!("CARGO_BIN_EXE_polyabc");
    let args = [
        "search", "--field", "fp:2", "--target", "ms", "--max-degree", "1", "--json",
    ];
    let seed_of = |cmd: &mut Command| {
        let out = cmd.output().unwrap();
        let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
        doc["result"]["report"]["config"]["seed"].as_u64().unwrap()
    };
    assert_eq!(seed_of(Command::new(bin).args(args).env_remove("POLYABC_SEED")), 0);
    assert_eq!(seed_of(Command::new(bin).args(args).env("POLYABC_SEED", "7")), 7);
    assert_eq!(
        seed_of(
            Command::new(bin)
                .args(args)
                .args(["--seed", "9"])
                .env("POLYABC_SEED", "7")
        ),
        9
    );
}

#[test]
fn human_output_is_plain() {
    let bin = env!("CARGO_BIN_EXE_polyabc");
    let out = Command::new(bin)
        .args(["radical", "--field", "q", "t^3 + t^2"])
        .output()
        .unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "t^2 + t");
}
