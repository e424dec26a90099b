use std::io::Read;
use std::path::{Path, PathBuf};

use fworm::graph::{decode_graph6, Graph};
use fworm::{Coloring, NamedGraph};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] fworm::Error),
}

fn io_error(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Reads one graph6 line from `path`, or from standard input for `None`/`-`.
pub fn load_graph(path: Option<&Path>) -> Result<Graph, CliError> {
    let mut buf = Vec::new();
    match path {
        Some(p) if p != Path::new("-") => buf = std::fs::read(p).map_err(io_error(p))?,
        _ => {
            std::io::stdin()
                .read_to_end(&mut buf)
                .map_err(io_error(Path::new("<stdin>")))?;
        }
    }
    let line = buf
        .split(|&b| b == b'\n')
        .find(|l| !l.iter().all(u8::is_ascii_whitespace));
    Ok(decode_graph6(line.unwrap_or(&[]))?)
}

/// A catalog name, or else a path to a graph6 file.
pub fn parse_graph_arg(arg: &str) -> Result<Graph, CliError> {
    match arg.parse::<NamedGraph>() {
        Ok(g) => Ok(g.build()),
        Err(_) if Path::new(arg).is_file() => load_graph(Some(Path::new(arg))),
        Err(e) => Err(CliError::Usage(e.to_string())),
    }
}

pub fn parse_pattern(name: &str) -> Result<Graph, CliError> {
    name.parse::<NamedGraph>()
        .map(NamedGraph::build)
        .map_err(|e| CliError::Usage(e.to_string()))
}

/// Accepts `{"colors": [...]}` or a bare array.
pub fn read_coloring(path: &Path) -> Result<Coloring, CliError> {
    let text = std::fs::read_to_string(path).map_err(io_error(path))?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    if value.is_array() {
        Ok(Coloring::new(serde_json::from_value(value)?))
    } else {
        Ok(serde_json::from_value(value)?)
    }
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(io_error(path))
}
