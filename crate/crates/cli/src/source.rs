use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use holokit::catalog::{self, Entry};
use holokit::holonomy::graph_arrangement;
use holokit::matroid::io::MatroidFile;
use holokit::matroid::{arrangement_of, ArrangementFile, Graph, Matroid, SetArrangement};

/// A loaded input, before it is viewed as a matroid, arrangement or graph.
pub enum Source {
    Arrangement(SetArrangement),
    Graph(Graph),
    Matroid(Matroid),
}

impl Source {
    /// `catalog:NAME` or a bare catalog name resolves to the catalog; anything
    /// else is a file: JSON (matroid or arrangement file) or an edge list.
    pub fn load(input: &str, validate: bool) -> Result<Source> {
        if let Some(name) = input.strip_prefix("catalog:") {
            return Ok(Self::from_entry(catalog::lookup(name)?));
        }
        if let Ok(entry) = catalog::lookup(input) {
            return Ok(Self::from_entry(entry));
        }
        let path = Path::new(input);
        let text = fs::read_to_string(path).with_context(|| format!("cannot read `{input}`"))?;
        Self::parse(&text, validate).with_context(|| format!("in `{input}`"))
    }

    pub fn parse(text: &str, validate: bool) -> Result<Source> {
        if !text.trim_start().starts_with('{') {
            return Ok(Source::Graph(Graph::parse_edge_list(text, validate)?));
        }
        let value: serde_json::Value = serde_json::from_str(text).context("invalid JSON")?;
        if value.get("type").is_some() {
            let file: MatroidFile =
                serde_json::from_value(value).context("invalid matroid file")?;
            Ok(Source::Matroid(file.into_matroid(validate)?))
        } else {
            let file: ArrangementFile =
                serde_json::from_value(value).context("invalid arrangement file")?;
            Ok(Source::Arrangement(file.into_arrangement()?))
        }
    }

    fn from_entry(entry: Entry) -> Source {
        match entry {
            Entry::Arrangement(a) => Source::Arrangement(a),
            Entry::Graph(g) => Source::Graph(g),
        }
    }

    pub fn matroid(self) -> Result<Matroid> {
        Ok(match self {
            Source::Arrangement(a) => Matroid::from_arrangement(&a),
            Source::Graph(g) => Matroid::graphic(g)?,
            Source::Matroid(m) => m,
        })
    }

    pub fn arrangement(self) -> Result<SetArrangement> {
        Ok(match self {
            Source::Arrangement(a) => a,
            Source::Graph(g) => graph_arrangement(&g)?,
            Source::Matroid(m) => arrangement_of(&m),
        })
    }

    pub fn graph(self) -> Result<Graph> {
        match self {
            Source::Graph(g) => Ok(g),
            _ => bail!("this command expects a graph (edge list or graph catalog name)"),
        }
    }

    pub fn as_graph(&self) -> Option<&Graph> {
        match self {
            Source::Graph(g) => Some(g),
            _ => None,
        }
    }
}
