use std::io::Read;

use num_bigint::BigUint;

use super::CliError;
use crate::graph::{from_integer, graph_from_json, parse_catalog, FlexGraph};

/// Where a graph comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSource {
    Stdin,
    Integer { code: BigUint, vertex_count: usize },
    Catalog(String),
    File(String),
}

impl GraphSource {
    pub fn parse(text: &str) -> Result<GraphSource, CliError> {
        if text == "-" {
            return Ok(GraphSource::Stdin);
        }
        if let Some(rest) = text.strip_prefix("int:") {
            let bad = || CliError::Usage(format!("expected int:<n>:<vertex count>, got {text:?}"));
            let (n, k) = rest.split_once(':').ok_or_else(bad)?;
            return Ok(GraphSource::Integer {
                code: n.trim().parse().map_err(|_| bad())?,
                vertex_count: k.trim().parse().map_err(|_| bad())?,
            });
        }
        if let Some(name) = text.strip_prefix("catalog:") {
            return Ok(GraphSource::Catalog(name.to_string()));
        }
        Ok(GraphSource::File(text.to_string()))
    }
}

pub fn load_graph(text: &str, stdin: &mut dyn Read) -> Result<FlexGraph, CliError> {
    let input = |e: crate::graph::GraphError| CliError::Input(e.to_string());
    match GraphSource::parse(text)? {
        GraphSource::Stdin => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            graph_from_json(&s).map_err(input)
        }
        GraphSource::Integer { code, vertex_count } => from_integer(&code, vertex_count).map_err(input),
        GraphSource::Catalog(name) => parse_catalog(&name).map_err(input),
        GraphSource::File(path) => {
            let s = std::fs::read_to_string(&path).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
            graph_from_json(&s).map_err(input)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sources() {
        assert_eq!(GraphSource::parse("-").unwrap(), GraphSource::Stdin);
        assert_eq!(
            GraphSource::parse("int:7:3").unwrap(),
            GraphSource::Integer { code: BigUint::from(7u32), vertex_count: 3 }
        );
        assert!(GraphSource::parse("int:7").is_err());
        assert_eq!(GraphSource::parse("catalog:C4").unwrap(), GraphSource::Catalog("C4".into()));
        let mut empty: &[u8] = b"";
        assert!(load_graph("int:7:3", &mut empty).unwrap().is_complete());
        let mut json: &[u8] = br#"{"edges":[[0,1]]}"#;
        assert_eq!(load_graph("-", &mut json).unwrap().num_edges(), 1);
        assert!(matches!(load_graph("int:8:3", &mut empty), Err(CliError::Input(_))));
        assert!(matches!(load_graph("/nonexistent/g.json", &mut empty), Err(CliError::Io(_))));
    }
}
