use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::CliError;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: String,
}

/// One invocation and its outcome.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub outcome: Result<Map<String, Value>, CliError>,
    pub seed: Option<u64>,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match &self.outcome {
            Ok(_) => 0,
            Err(e) => e.exit_code(),
        }
    }

    pub fn to_value(&self) -> Value {
        let mut out = Map::new();
        out.insert("command".into(), Value::String(self.command.clone()));
        out.insert("inputs".into(), Value::Object(self.inputs.clone()));
        match &self.outcome {
            Ok(r) => out.insert("result".into(), Value::Object(r.clone())),
            Err(e) => out.insert(
                "error".into(),
                serde_json::to_value(ErrorBody { kind: e.kind(), message: e.to_string() }).expect("serializable"),
            ),
        };
        out.insert("seed".into(), self.seed.map_or(Value::Null, |s| Value::String(s.to_string())));
        out.insert("version".into(), Value::String(VERSION.into()));
        Value::Object(out)
    }

    pub fn render(&self, pretty: bool) -> String {
        let v = self.to_value();
        if pretty {
            serde_json::to_string_pretty(&v).expect("serializable")
        } else {
            serde_json::to_string(&v).expect("serializable")
        }
    }
}

pub fn string<T: ToString>(x: T) -> Value {
    Value::String(x.to_string())
}

pub fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(xs.into_iter().map(string).collect())
}
