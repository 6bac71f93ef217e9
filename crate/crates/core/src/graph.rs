//! Simple undirected graphs and the graph families studied here.
//!
//! Vertex ids follow a fixed layout per family so that labelings written to
//! disk stay meaningful across runs:
//!
//! | family                 | layout                                              |
//! |------------------------|-----------------------------------------------------|
//! | `P(m,k)`               | `u_i -> i`, `v_i -> m + i`                          |
//! | grid `l x m`           | `(r, c) -> r*m + c`; for two rows `u_i = (0,i)`, `v_i = (1,i)` |
//! | flower snark `J_m`     | `a_i -> i`, `b_i -> m+i`, `c_i -> 2m+i`, `d_i -> 3m+i` |
//! | block graphs `G`, `G'` | open `2 x w` grid laid out like a two-row grid      |
//!
//! In a block graph of width `w` the bottom row is the `u` row and the top row
//! is the `v` row. Column 0 holds `l_b`/`l_t`, column 1 holds `l_bi`/`l_ti`,
//! columns `2..w-2` hold `u_j`/`v_j`, column `w-2` holds `r_bi`/`r_ti` and
//! column `w-1` holds `r_b`/`r_t`.

use std::fmt;

use crate::error::{Error, Result};

/// Width of the full block graph `G` (boundary plus an 8-column center).
pub const BLOCK_WIDTH_FULL: usize = 12;
/// Width of the reduced block graph `G'` (boundary plus a 4-column center).
pub const BLOCK_WIDTH_REDUCED: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    GeneralizedPetersen { m: usize, k: usize },
    Grid { rows: usize, cols: usize },
    FlowerSnark { m: usize },
    BlockG,
    BlockGPrime,
    Raw,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockVariant {
    Full,
    Reduced,
}

impl BlockVariant {
    pub fn width(self) -> usize {
        match self {
            BlockVariant::Full => BLOCK_WIDTH_FULL,
            BlockVariant::Reduced => BLOCK_WIDTH_REDUCED,
        }
    }

    fn family(self) -> Family {
        match self {
            BlockVariant::Full => Family::BlockG,
            BlockVariant::Reduced => Family::BlockGPrime,
        }
    }
}

/// Human-readable vertex names, bijective with the ids of the owning graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexName {
    U(usize),
    V(usize),
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    Cell(usize, usize),
    LeftTop,
    LeftTopInner,
    LeftBottom,
    LeftBottomInner,
    RightTopInner,
    RightTop,
    RightBottomInner,
    RightBottom,
    Raw(usize),
}

impl fmt::Display for VertexName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexName::U(i) => write!(f, "u_{i}"),
            VertexName::V(i) => write!(f, "v_{i}"),
            VertexName::A(i) => write!(f, "a_{i}"),
            VertexName::B(i) => write!(f, "b_{i}"),
            VertexName::C(i) => write!(f, "c_{i}"),
            VertexName::D(i) => write!(f, "d_{i}"),
            VertexName::Cell(r, c) => write!(f, "x_{r}_{c}"),
            VertexName::LeftTop => f.write_str("l_t"),
            VertexName::LeftTopInner => f.write_str("l_ti"),
            VertexName::LeftBottom => f.write_str("l_b"),
            VertexName::LeftBottomInner => f.write_str("l_bi"),
            VertexName::RightTopInner => f.write_str("r_ti"),
            VertexName::RightTop => f.write_str("r_t"),
            VertexName::RightBottomInner => f.write_str("r_bi"),
            VertexName::RightBottom => f.write_str("r_b"),
            VertexName::Raw(i) => write!(f, "{i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    family: Family,
}

impl Graph {
    /// Builds a simple graph, rejecting self-loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)], family: Family) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::Parameter(format!("self-loop at vertex {a}")));
            }
            if adjacency[a].contains(&b) {
                return Err(Error::Parameter(format!("duplicate edge {a} {b}")));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self { adjacency, family })
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (a, list) in self.adjacency.iter().enumerate() {
            out.extend(list.iter().filter(|&&b| a < b).map(|&b| (a, b)));
        }
        out
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adjacency.iter().all(|l| l.len() == d)
    }

    pub fn is_cubic(&self) -> bool {
        self.is_regular(3)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    pub fn vertex_name(&self, v: usize) -> VertexName {
        match self.family {
            Family::GeneralizedPetersen { m, .. } => {
                if v < m {
                    VertexName::U(v)
                } else {
                    VertexName::V(v - m)
                }
            }
            Family::Grid { rows, cols } => {
                let (r, c) = (v / cols, v % cols);
                match (rows, r) {
                    (2, 0) => VertexName::U(c),
                    (2, _) => VertexName::V(c),
                    _ => VertexName::Cell(r, c),
                }
            }
            Family::FlowerSnark { m } => match v / m {
                0 => VertexName::A(v % m),
                1 => VertexName::B(v % m),
                2 => VertexName::C(v % m),
                _ => VertexName::D(v % m),
            },
            Family::BlockG => block_name(BLOCK_WIDTH_FULL, v),
            Family::BlockGPrime => block_name(BLOCK_WIDTH_REDUCED, v),
            Family::Raw => VertexName::Raw(v),
        }
    }

    pub fn vertex_id(&self, name: VertexName) -> Option<usize> {
        let id = match (self.family, name) {
            (Family::GeneralizedPetersen { m, .. }, VertexName::U(i)) if i < m => i,
            (Family::GeneralizedPetersen { m, .. }, VertexName::V(i)) if i < m => m + i,
            (Family::Grid { rows: 2, cols }, VertexName::U(i)) if i < cols => i,
            (Family::Grid { rows: 2, cols }, VertexName::V(i)) if i < cols => cols + i,
            (Family::Grid { rows, cols }, VertexName::Cell(r, c)) if rows != 2 && r < rows && c < cols => r * cols + c,
            (Family::FlowerSnark { m }, VertexName::A(i)) if i < m => i,
            (Family::FlowerSnark { m }, VertexName::B(i)) if i < m => m + i,
            (Family::FlowerSnark { m }, VertexName::C(i)) if i < m => 2 * m + i,
            (Family::FlowerSnark { m }, VertexName::D(i)) if i < m => 3 * m + i,
            (Family::BlockG, name) => block_id(BLOCK_WIDTH_FULL, name)?,
            (Family::BlockGPrime, name) => block_id(BLOCK_WIDTH_REDUCED, name)?,
            (Family::Raw, VertexName::Raw(i)) if i < self.n() => i,
            _ => return None,
        };
        Some(id)
    }
}

fn block_name(width: usize, v: usize) -> VertexName {
    let (row, col) = (v / width, v % width);
    let top = row == 1;
    match (col, top) {
        (0, false) => VertexName::LeftBottom,
        (0, true) => VertexName::LeftTop,
        (1, false) => VertexName::LeftBottomInner,
        (1, true) => VertexName::LeftTopInner,
        (c, false) if c == width - 2 => VertexName::RightBottomInner,
        (c, true) if c == width - 2 => VertexName::RightTopInner,
        (c, false) if c == width - 1 => VertexName::RightBottom,
        (c, true) if c == width - 1 => VertexName::RightTop,
        (c, false) => VertexName::U(c - 2),
        (c, true) => VertexName::V(c - 2),
    }
}

fn block_id(width: usize, name: VertexName) -> Option<usize> {
    let center = width - 4;
    let (row, col) = match name {
        VertexName::LeftBottom => (0, 0),
        VertexName::LeftTop => (1, 0),
        VertexName::LeftBottomInner => (0, 1),
        VertexName::LeftTopInner => (1, 1),
        VertexName::RightBottomInner => (0, width - 2),
        VertexName::RightTopInner => (1, width - 2),
        VertexName::RightBottom => (0, width - 1),
        VertexName::RightTop => (1, width - 1),
        VertexName::U(i) if i < center => (0, i + 2),
        VertexName::V(i) if i < center => (1, i + 2),
        _ => return None,
    };
    Some(row * width + col)
}

/// Ids of the block-graph boundary in constellation order
/// `<l_t, l_ti, l_b, l_bi, r_ti, r_t, r_bi, r_b>`.
pub fn block_boundary_ids(variant: BlockVariant) -> [usize; 8] {
    let w = variant.width();
    [w, w + 1, 0, 1, 2 * w - 2, 2 * w - 1, w - 2, w - 1]
}

/// Ids of the four exempt block-graph corners `l_t, l_b, r_t, r_b`.
pub fn block_corner_ids(variant: BlockVariant) -> [usize; 4] {
    let w = variant.width();
    [w, 0, 2 * w - 1, w - 1]
}

/// Ids of the block center `C` (full) or `C'` (reduced).
pub fn block_center_ids(variant: BlockVariant) -> Vec<usize> {
    let w = variant.width();
    (2..w - 2).flat_map(|c| [c, w + c]).collect()
}

pub fn build_petersen(m: usize, k: usize) -> Result<Graph> {
    if m < 3 || k == 0 || k >= m {
        return Err(Error::Parameter(format!("P({m},{k}) needs m >= 3 and 1 <= k <= m-1")));
    }
    if 2 * k == m {
        return Err(Error::Parameter(format!("P({m},{k}) has a doubled inner edge set and is not simple")));
    }
    let mut edges = Vec::with_capacity(3 * m);
    for i in 0..m {
        edges.push((i, (i + 1) % m));
        edges.push((m + i, m + (i + k) % m));
        edges.push((i, m + i));
    }
    Graph::from_edges(2 * m, &edges, Family::GeneralizedPetersen { m, k })
}

pub fn build_grid(rows: usize, cols: usize) -> Result<Graph> {
    if rows == 0 || cols == 0 {
        return Err(Error::Parameter(format!("grid {rows}x{cols} needs positive dimensions")));
    }
    Graph::from_edges(rows * cols, &grid_edges(rows, cols), Family::Grid { rows, cols })
}

fn grid_edges(rows: usize, cols: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    edges
}

pub fn build_flower_snark(m: usize) -> Result<Graph> {
    if m < 5 {
        return Err(Error::Parameter(format!("flower snark J_{m} needs m >= 5")));
    }
    let (a, b, c, d) = (0, m, 2 * m, 3 * m);
    let mut edges = Vec::with_capacity(6 * m);
    for i in 0..m {
        edges.extend([(a + i, b + i), (a + i, c + i), (a + i, d + i)]);
        edges.push((b + i, b + (i + 1) % m));
    }
    for i in 0..m - 1 {
        edges.push((c + i, c + i + 1));
        edges.push((d + i, d + i + 1));
    }
    edges.push((c + m - 1, d));
    edges.push((c, d + m - 1));
    Graph::from_edges(4 * m, &edges, Family::FlowerSnark { m })
}

pub fn build_block_graph(variant: BlockVariant) -> Graph {
    let w = variant.width();
    Graph::from_edges(2 * w, &grid_edges(2, w), variant.family()).expect("grid edges are simple")
}

pub fn complete_graph(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    Graph::from_edges(n, &edges, Family::Raw).expect("complete graph is simple")
}

/// Parses the `n m` header plus `m` lines of `a b` edge-list format.
/// Blank lines and lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(Error::Parse { line: 0, msg: "empty input".into() })?;
    let (n, m) = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let (a, b) = parse_pair(lineno, line)?;
        if a >= n || b >= n {
            return Err(Error::Parse { line: lineno, msg: format!("vertex out of range [0, {n})") });
        }
        edges.push((a, b));
    }
    if edges.len() != m {
        return Err(Error::Parse { line: hline, msg: format!("header announces {m} edges, found {}", edges.len()) });
    }
    Graph::from_edges(n, &edges, Family::Raw)
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize> {
        it.next()
            .ok_or_else(|| Error::Parse { line, msg: "expected two integers".into() })?
            .parse()
            .map_err(|e| Error::Parse { line, msg: format!("{e}") })
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(Error::Parse { line, msg: "trailing tokens".into() });
    }
    Ok(pair)
}

pub fn serialize_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (a, b) in edges {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}
