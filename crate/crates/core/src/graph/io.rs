use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Digraph, Graph};
use crate::error::{Error, Result};

/// On-disk shape: `{"directed": bool, "n": int, "edges": [[u,v],...]}`; ids are positions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub directed: bool,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyGraph {
    Undirected(Graph),
    Directed(Digraph),
}

impl AnyGraph {
    pub fn from_json(s: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        file.try_into()
    }

    /// Compact JSON in edge-id order, so a parse/write round trip is byte-exact.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphFile::from(self)).expect("graph file serializes")
    }

    pub fn to_dot(&self) -> String {
        let (kw, op, n, edges) = match self {
            AnyGraph::Undirected(g) => ("graph", "--", g.vertex_count(), g.edges()),
            AnyGraph::Directed(d) => ("digraph", "->", d.vertex_count(), d.arcs()),
        };
        let mut out = format!("{kw} G {{\n");
        for v in 0..n {
            let _ = writeln!(out, "  {v};");
        }
        for (id, &(u, v)) in edges.iter().enumerate() {
            let _ = writeln!(out, "  {u} {op} {v} [label=\"{id}\"];");
        }
        out.push_str("}\n");
        out
    }

    pub fn is_directed(&self) -> bool {
        matches!(self, AnyGraph::Directed(_))
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            AnyGraph::Undirected(g) => g.vertex_count(),
            AnyGraph::Directed(d) => d.vertex_count(),
        }
    }

    pub fn into_graph(self) -> Result<Graph> {
        match self {
            AnyGraph::Undirected(g) => Ok(g),
            AnyGraph::Directed(_) => {
                Err(Error::InvalidGraph("expected an undirected graph".into()))
            }
        }
    }

    pub fn into_digraph(self) -> Result<Digraph> {
        match self {
            AnyGraph::Directed(d) => Ok(d),
            AnyGraph::Undirected(_) => Err(Error::InvalidGraph("expected a directed graph".into())),
        }
    }
}

impl From<&AnyGraph> for GraphFile {
    fn from(g: &AnyGraph) -> Self {
        let (directed, n, edges) = match g {
            AnyGraph::Undirected(g) => (false, g.vertex_count(), g.edges()),
            AnyGraph::Directed(d) => (true, d.vertex_count(), d.arcs()),
        };
        GraphFile {
            directed,
            n,
            edges: edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphFile> for AnyGraph {
    type Error = Error;

    fn try_from(f: GraphFile) -> Result<Self> {
        let edges = f.edges.into_iter().map(|[u, v]| (u, v)).collect();
        if f.directed {
            Digraph::new(f.n, edges).map(AnyGraph::Directed)
        } else {
            Graph::new(f.n, edges).map(AnyGraph::Undirected)
        }
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphFile::from(&AnyGraph::Undirected(self.clone())).serialize(s)
    }
}

impl Serialize for Digraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphFile::from(&AnyGraph::Directed(self.clone())).serialize(s)
    }
}

impl From<Graph> for AnyGraph {
    fn from(g: Graph) -> Self {
        AnyGraph::Undirected(g)
    }
}

impl From<Digraph> for AnyGraph {
    fn from(d: Digraph) -> Self {
        AnyGraph::Directed(d)
    }
}
