use std::io::Write;
use std::path::Path;

use super::CliError;

/// Writes through a temporary file in the target directory, then renames.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", path.display()));
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(bytes).map_err(io)?;
    tmp.flush().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

/// Refuses documents that are not well-formed XML.
pub fn write_svg(path: &Path, doc: &str) -> Result<(), CliError> {
    roxmltree::Document::parse(doc).map_err(|e| CliError::Io(format!("refusing to write malformed SVG: {e}")))?;
    write_atomic(path, doc.as_bytes())
}

pub fn write_json(path: &Path, value: &serde_json::Value) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).expect("JSON value serializes");
    text.push('\n');
    write_atomic(path, text.as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{graph_from_json, parse_catalog, GraphJson};

    #[test]
    fn json_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        for name in ["C4", "Q1", "ThreePrism", "CompleteBipartite(2,3)"] {
            let g = parse_catalog(name).unwrap();
            let path = dir.path().join("g.json");
            write_json(&path, &serde_json::to_value(GraphJson::from(&g)).unwrap()).unwrap();
            assert_eq!(graph_from_json(&std::fs::read_to_string(&path).unwrap()).unwrap(), g);
        }
    }

    #[test]
    fn malformed_svg_and_bad_dir() {
        let dir = tempfile::tempdir().unwrap();
        assert!(write_svg(&dir.path().join("x.svg"), "<svg>").is_err());
        assert!(!dir.path().join("x.svg").exists());
        assert!(write_svg(&dir.path().join("missing/x.svg"), "<svg/>").is_err());
    }
}
