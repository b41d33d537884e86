//! Rauzy graphs: length-`n` factors as vertices, length-`(n+1)` factors as
//! edges from their prefix to their suffix.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::factors::factor_set;
use crate::substitution::Capacity;
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub label: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RauzyGraph {
    order: usize,
    vertices: Vec<Word>,
    edges: Vec<Edge>,
}

pub fn build_rauzy(order: usize, cap: Capacity) -> Result<RauzyGraph> {
    if order == 0 {
        return Err(Error::ZeroLength);
    }
    let vertices: Vec<Word> = factor_set(order, cap)?.words().iter().cloned().collect();
    let index = |w: Word| vertices.binary_search(&w).unwrap_or_else(|_| panic!("{w} is a factor but not a vertex"));
    let edges = factor_set(order + 1, cap)?
        .words()
        .iter()
        .map(|label| Edge {
            source: index(label.prefix(order)),
            target: index(label.suffix(order)),
            label: label.clone(),
        })
        .collect();
    Ok(RauzyGraph { order, vertices, edges })
}

/// Vertices with more than one outgoing (right) or incoming (left) edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchVertices {
    pub right: Vec<Word>,
    pub left: Vec<Word>,
}

/// A maximal path whose interior vertices have in- and out-degree 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub from: usize,
    pub to: usize,
    /// Vertices strictly between `from` and `to`.
    pub interior: usize,
}

impl RauzyGraph {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Vertices in alphabet order.
    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    /// Edges ordered by label.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_index(&self, w: &Word) -> Option<usize> {
        self.vertices.binary_search(w).ok()
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for e in &self.edges {
            deg[e.source] += 1;
        }
        deg
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for e in &self.edges {
            deg[e.target] += 1;
        }
        deg
    }

    pub fn branch_vertices(&self) -> BranchVertices {
        let pick = |deg: Vec<usize>| {
            deg.iter().zip(&self.vertices).filter(|(d, _)| **d >= 2).map(|(_, v)| v.clone()).collect()
        };
        BranchVertices { right: pick(self.out_degrees()), left: pick(self.in_degrees()) }
    }

    fn reachable(&self, forward: bool, undirected: bool) -> Vec<bool> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            let (s, t) = if forward { (e.source, e.target) } else { (e.target, e.source) };
            adj[s].push(t);
            if undirected {
                adj[t].push(s);
            }
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        seen
    }

    pub fn is_weakly_connected(&self) -> bool {
        self.reachable(true, true).into_iter().all(|s| s)
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.reachable(true, false).into_iter().all(|s| s) && self.reachable(false, false).into_iter().all(|s| s)
    }

    /// Splits the graph into maximal non-branching paths between branch
    /// vertices (those with in- or out-degree at least 2).
    ///
    /// Cycles without any branch vertex are reported with `from == to` and
    /// start at their smallest vertex.
    pub fn segments(&self) -> Vec<Segment> {
        let out = self.out_degrees();
        let inc = self.in_degrees();
        let is_branch = |v: usize| out[v] != 1 || inc[v] != 1;
        let mut next = vec![usize::MAX; self.vertices.len()];
        for e in &self.edges {
            if out[e.source] == 1 {
                next[e.source] = e.target;
            }
        }
        let mut visited = vec![false; self.vertices.len()];
        let mut segments = Vec::new();
        let walk = |from: usize, first: usize, visited: &mut Vec<bool>| {
            let mut interior = 0;
            let mut v = first;
            while !is_branch(v) && v != from {
                visited[v] = true;
                interior += 1;
                v = next[v];
            }
            Segment { from, to: v, interior }
        };
        for e in &self.edges {
            if is_branch(e.source) {
                segments.push(walk(e.source, e.target, &mut visited));
            }
        }
        for v in 0..self.vertices.len() {
            if !visited[v] && !is_branch(v) {
                visited[v] = true;
                segments.push(walk(v, next[v], &mut visited));
            }
        }
        segments
    }

    /// `order n: V=<vertices> E=<edges> right_branch=<count> left_branch=<count>`
    pub fn stats_line(&self) -> String {
        let branches = self.branch_vertices();
        format!(
            "order {}: V={} E={} right_branch={} left_branch={}",
            self.order,
            self.vertices.len(),
            self.edges.len(),
            branches.right.len(),
            branches.left.len()
        )
    }

    /// One line per segment: `<from> -> <to> interior=<count>`.
    pub fn segment_summary(&self) -> String {
        let mut out = String::new();
        for s in self.segments() {
            let _ = writeln!(out, "{} -> {} interior={}", self.vertices[s.from], self.vertices[s.to], s.interior);
        }
        out
    }

    /// Graphviz DOT text. Branch vertices are drawn as double circles.
    pub fn to_dot(&self) -> String {
        let out_deg = self.out_degrees();
        let in_deg = self.in_degrees();
        let mut dot = String::new();
        let _ = writeln!(dot, "digraph rauzy_{} {{", self.order);
        for (v, w) in self.vertices.iter().enumerate() {
            if out_deg[v] >= 2 || in_deg[v] >= 2 {
                let _ = writeln!(dot, "  \"{w}\" [shape=doublecircle];");
            } else {
                let _ = writeln!(dot, "  \"{w}\";");
            }
        }
        for e in &self.edges {
            let _ = writeln!(
                dot,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                self.vertices[e.source], self.vertices[e.target], e.label
            );
        }
        dot.push_str("}\n");
        dot
    }
}
