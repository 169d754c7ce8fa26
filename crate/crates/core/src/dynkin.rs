//! Independent vertex sets of Dynkin diagrams.
//!
//! A generic point of the stratum with `delta - h` nodes corresponds to a
//! choice of `delta - h` pairwise disjoint vanishing cycles, i.e. that many
//! vertices of the Dynkin diagram with no edge between them.

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::genus_transform::NhVector;
use crate::json::big_array;
use crate::staircase::AdeType;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for &(u, v) in &edges {
            if u >= vertices || v >= vertices {
                return Err(Error::Invalid(format!(
                    "edge ({u}, {v}) leaves the vertex set"
                )));
            }
            if u == v {
                return Err(Error::Invalid(format!("loop at {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::Invalid(format!("repeated edge ({u}, {v})")));
            }
        }
        Ok(Self { vertices, edges })
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        Self { vertices: n, edges }
    }

    /// A path with one extra leaf hung on vertex `at`.
    fn forked_path(len: usize, at: usize) -> Self {
        let mut g = Self::path(len);
        g.edges.push((at, len));
        g.vertices += 1;
        g
    }

    /// `A_n` is a path; `D_n` forks at the second vertex of an `(n-1)`-path;
    /// `E_n` forks at the third vertex of an `(n-1)`-path.
    pub fn dynkin(t: AdeType) -> Self {
        match t {
            AdeType::A(n) => Self::path(n),
            AdeType::D(n) => Self::forked_path(n - 1, 1),
            AdeType::E6 => Self::forked_path(5, 2),
            AdeType::E7 => Self::forked_path(6, 2),
            AdeType::E8 => Self::forked_path(7, 2),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }
}

fn poly_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    out
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Independence polynomial of a forest: entry `k` counts independent `k`-sets.
///
/// Each tree is rooted at its smallest vertex and vertices are eliminated
/// leaves-first, carrying the polynomials for "excluded" and "included".
pub fn independence_polynomial(g: &SimpleGraph) -> Result<Vec<BigInt>> {
    if g.edges.len() + component_count(g) != g.vertices {
        return Err(Error::Invalid("independent-set DP needs a forest".into()));
    }
    let adj = g.adjacency();
    let mut parent = vec![usize::MAX; g.vertices];
    let mut visited = vec![false; g.vertices];
    let mut order = Vec::with_capacity(g.vertices);
    let mut total = vec![BigInt::from(1)];
    for root in 0..g.vertices {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        order.clear();
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in &adj[v] {
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = v;
                    stack.push(w);
                }
            }
        }
        let one = vec![BigInt::from(1)];
        let mut excl: Vec<Vec<BigInt>> = vec![one.clone(); g.vertices];
        let mut incl: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(), BigInt::from(1)]; g.vertices];
        for &v in order.iter().rev() {
            if v == root {
                break;
            }
            let p = parent[v];
            let either = poly_add(&excl[v], &incl[v]);
            excl[p] = poly_mul(&excl[p], &either);
            incl[p] = poly_mul(&incl[p], &excl[v]);
        }
        total = poly_mul(&total, &poly_add(&excl[root], &incl[root]));
    }
    while total.len() > 1 && total.last().is_some_and(Zero::is_zero) {
        total.pop();
    }
    Ok(total)
}

fn component_count(g: &SimpleGraph) -> usize {
    let mut parent: Vec<usize> = (0..g.vertices).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut comps = g.vertices;
    for &(u, v) in &g.edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            comps -= 1;
        }
    }
    comps
}

pub fn independent_set_count(g: &SimpleGraph, k: usize) -> Result<BigInt> {
    Ok(independence_polynomial(g)?
        .get(k)
        .cloned()
        .unwrap_or_default())
}

/// `n_h` as the number of independent `(delta - h)`-sets of the diagram.
pub fn dynkin_nh(t: AdeType) -> NhVector {
    let poly = independence_polynomial(&SimpleGraph::dynkin(t)).expect("Dynkin diagrams are trees");
    let delta = t.delta();
    let values = (0..=delta)
        .map(|h| poly.get(delta - h).cloned().unwrap_or_default())
        .collect::<Vec<BigInt>>();
    NhVector::local(values)
}

pub fn count_table_json(t: AdeType) -> Value {
    let g = SimpleGraph::dynkin(t);
    let poly = independence_polynomial(&g).expect("Dynkin diagrams are trees");
    json!({
        "type": t.to_string(),
        "vertices": g.vertex_count(),
        "counts": big_array(&poly),
        "nh": dynkin_nh(t).to_json(),
    })
}
