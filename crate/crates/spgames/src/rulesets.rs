//! Boards and concrete rulesets.
//!
//! A ruleset turns a board into a legal complex: enumerate every basic
//! position (one piece placed), decide pairwise compatibility, and take the
//! maximal pairwise-compatible sets as facets. All shipped rulesets have
//! pairwise-checkable legality, so facet enumeration is maximal-clique
//! enumeration over the compatibility graph.
//!
//! Shipped rulesets: two node-colouring games (`snort_complex`,
//! `col_complex`, both implementing the rule that a player may not place
//! adjacent to a piece of their *own* colour — see the README for why the
//! two names share one rule here), Domineering (`domineering_complex`), and
//! a Nim-style game where pieces are complete graphs placed on disjoint
//! vertex sets (`nim_pile_complex`).

use std::collections::BTreeSet;

use crate::complex::{LegalComplex, Player, Vertex};
use crate::impartial::ImpartialComplex;
use crate::{Error, Result};

/// A game board: either an explicit simple graph or a rectangular grid
/// with optionally removed cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Board {
    kind: BoardKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum BoardKind {
    Graph {
        count: usize,
        /// Normalized (low, high) pairs, 0-based.
        edges: BTreeSet<(u32, u32)>,
    },
    Grid {
        rows: usize,
        cols: usize,
        /// Removed cells, 0-based (row, col).
        removed: BTreeSet<(usize, usize)>,
    },
}

impl Board {
    /// A simple graph on `count` vertices with 0-based edges.
    pub fn graph(count: usize, edges: &[(u32, u32)]) -> Result<Board> {
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidArgument(format!(
                    "loop edge at vertex {}",
                    u + 1
                )));
            }
            if u as usize >= count || v as usize >= count {
                return Err(Error::InvalidArgument(format!(
                    "edge ({},{}) leaves the {count}-vertex board",
                    u + 1,
                    v + 1
                )));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Board {
            kind: BoardKind::Graph { count, edges: set },
        })
    }

    /// The path on `n` vertices.
    pub fn path(n: usize) -> Board {
        let edges: Vec<(u32, u32)> = (1..n).map(|i| (i as u32 - 1, i as u32)).collect();
        Board::graph(n, &edges).expect("paths are simple")
    }

    /// The cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Result<Board> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut edges: Vec<(u32, u32)> = (1..n).map(|i| (i as u32 - 1, i as u32)).collect();
        edges.push((n as u32 - 1, 0));
        Board::graph(n, &edges)
    }

    /// A rows×cols grid with the listed cells removed (1-based coordinates).
    pub fn grid(rows: usize, cols: usize, removed: &[(usize, usize)]) -> Result<Board> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument(
                "grids need at least one row and one column".into(),
            ));
        }
        let mut set = BTreeSet::new();
        for &(r, c) in removed {
            if r == 0 || c == 0 || r > rows || c > cols {
                return Err(Error::InvalidArgument(format!(
                    "removed cell ({r},{c}) is outside the {rows}x{cols} grid"
                )));
            }
            set.insert((r - 1, c - 1));
        }
        Ok(Board {
            kind: BoardKind::Grid {
                rows,
                cols,
                removed: set,
            },
        })
    }

    /// Parses `path:<n>`, `cycle:<n>`, `grid:<r>x<c>`, and
    /// `grid:<r>x<c>:mask=<r,c;r,c;...>` (mask cells are 1-based removed
    /// cells). Graph files are a separate step: read the file and call
    /// [`Board::parse_graph_text`].
    pub fn parse(spec: &str) -> Result<Board> {
        let bad = |msg: String| Error::InvalidArgument(msg);
        let (kind, rest) = spec
            .split_once(':')
            .ok_or_else(|| bad(format!("board spec '{spec}' has no ':'")))?;
        match kind {
            "path" => {
                let n = rest
                    .parse::<usize>()
                    .map_err(|_| bad(format!("bad path length '{rest}'")))?;
                Ok(Board::path(n))
            }
            "cycle" => {
                let n = rest
                    .parse::<usize>()
                    .map_err(|_| bad(format!("bad cycle length '{rest}'")))?;
                Board::cycle(n)
            }
            "grid" => {
                let (dims, mask) = match rest.split_once(':') {
                    Some((d, m)) => (d, Some(m)),
                    None => (rest, None),
                };
                let (r, c) = dims
                    .split_once('x')
                    .ok_or_else(|| bad(format!("grid size '{dims}' is not <rows>x<cols>")))?;
                let rows = r
                    .parse::<usize>()
                    .map_err(|_| bad(format!("bad row count '{r}'")))?;
                let cols = c
                    .parse::<usize>()
                    .map_err(|_| bad(format!("bad column count '{c}'")))?;
                let mut removed = Vec::new();
                if let Some(mask) = mask {
                    let cells = mask.strip_prefix("mask=").ok_or_else(|| {
                        bad(format!("expected 'mask=...' after grid size, got '{mask}'"))
                    })?;
                    for cell in cells.split(';').filter(|s| !s.is_empty()) {
                        let (r, c) = cell
                            .split_once(',')
                            .ok_or_else(|| bad(format!("mask cell '{cell}' is not <r>,<c>")))?;
                        let r = r
                            .trim()
                            .parse::<usize>()
                            .map_err(|_| bad(format!("bad mask row '{r}'")))?;
                        let c = c
                            .trim()
                            .parse::<usize>()
                            .map_err(|_| bad(format!("bad mask column '{c}'")))?;
                        removed.push((r, c));
                    }
                }
                Board::grid(rows, cols, &removed)
            }
            "graph" => Err(bad(
                "graph boards come from files; read the file and parse its text".into(),
            )),
            other => Err(bad(format!("unknown board kind '{other}'"))),
        }
    }

    /// Parses a graph file: first contentful line is the vertex count,
    /// each following line one `u v` edge with 1-based endpoints.
    /// `#` starts a comment.
    pub fn parse_graph_text(text: &str) -> Result<Board> {
        let mut count: Option<usize> = None;
        let mut edges: Vec<(u32, u32)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            if count.is_none() {
                count = Some(
                    line.parse::<usize>()
                        .map_err(|_| parse_err(format!("expected a vertex count, got '{line}'")))?,
                );
                continue;
            }
            let mut it = line.split_whitespace();
            let (u, v) = match (it.next(), it.next(), it.next()) {
                (Some(u), Some(v), None) => (u, v),
                _ => return Err(parse_err(format!("expected 'u v', got '{line}'"))),
            };
            let u = u
                .parse::<u32>()
                .map_err(|_| parse_err(format!("bad endpoint '{u}'")))?;
            let v = v
                .parse::<u32>()
                .map_err(|_| parse_err(format!("bad endpoint '{v}'")))?;
            if u == 0 || v == 0 {
                return Err(parse_err("vertices are numbered from 1".into()));
            }
            edges.push((u - 1, v - 1));
        }
        let count = count.ok_or(Error::Parse {
            line: 1,
            message: "empty graph file".into(),
        })?;
        Board::graph(count, &edges)
    }

    fn is_live(&self, r: usize, c: usize) -> bool {
        match &self.kind {
            BoardKind::Grid {
                rows,
                cols,
                removed,
            } => r < *rows && c < *cols && !removed.contains(&(r, c)),
            BoardKind::Graph { .. } => false,
        }
    }

    fn grid_spec(&self) -> Option<(usize, usize)> {
        match &self.kind {
            BoardKind::Grid { rows, cols, .. } => Some((*rows, *cols)),
            BoardKind::Graph { .. } => None,
        }
    }

    /// Playable sites: graph vertices, or live grid cells in row-major
    /// order.
    fn sites(&self) -> Vec<Site> {
        match &self.kind {
            BoardKind::Graph { count, .. } => {
                (0..*count).map(|i| Site::Vertex(i as u32)).collect()
            }
            BoardKind::Grid { rows, cols, .. } => {
                let mut out = Vec::new();
                for r in 0..*rows {
                    for c in 0..*cols {
                        if self.is_live(r, c) {
                            out.push(Site::Cell(r, c));
                        }
                    }
                }
                out
            }
        }
    }

    /// A stable 1-based label for a site: the vertex number, or the cell's
    /// row-major number in the full (unmasked) grid.
    fn site_label(&self, site: Site) -> usize {
        match (site, &self.kind) {
            (Site::Vertex(v), _) => v as usize + 1,
            (Site::Cell(r, c), BoardKind::Grid { cols, .. }) => r * cols + c + 1,
            (Site::Cell(..), BoardKind::Graph { .. }) => unreachable!("cells imply a grid"),
        }
    }

    fn sites_adjacent(&self, a: Site, b: Site) -> bool {
        match (&self.kind, a, b) {
            (BoardKind::Graph { edges, .. }, Site::Vertex(u), Site::Vertex(v)) => {
                edges.contains(&(u.min(v), u.max(v)))
            }
            (BoardKind::Grid { .. }, Site::Cell(r1, c1), Site::Cell(r2, c2)) => {
                r1.abs_diff(r2) + c1.abs_diff(c2) == 1
            }
            _ => unreachable!("sites come from this board"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Site {
    Vertex(u32),
    Cell(usize, usize),
}

/// One piece placed on the board: who owns it (None for impartial games),
/// which sites it covers, and the vertex name it contributes to the
/// complex.
#[derive(Clone, Debug)]
pub struct BasicPosition {
    pub name: String,
    pub owner: Option<Player>,
    pub footprint: BTreeSet<u32>,
}

/// All inclusion-maximal sets of pairwise-compatible positions, as sorted
/// index lists in deterministic order. `compatible` must be symmetric and
/// is never asked about a position and itself.
pub fn maximal_compatible_sets<F>(positions: &[BasicPosition], compatible: F) -> Vec<Vec<usize>>
where
    F: Fn(&BasicPosition, &BasicPosition) -> bool,
{
    let n = positions.len();
    let mut adjacency: Vec<BitSet> = (0..n).map(|_| BitSet::empty(n)).collect();
    for i in 0..n {
        for j in i + 1..n {
            if compatible(&positions[i], &positions[j]) {
                debug_assert!(
                    compatible(&positions[j], &positions[i]),
                    "compatibility must be symmetric"
                );
                adjacency[i].insert(j);
                adjacency[j].insert(i);
            }
        }
    }
    let mut out = Vec::new();
    let mut r = Vec::new();
    bron_kerbosch(
        &adjacency,
        &mut r,
        BitSet::all(n),
        BitSet::empty(n),
        &mut out,
    );
    out.sort();
    out
}

/// Pivoting clique enumeration; the pivot is the vertex covering the most
/// candidates, ties to the smallest index, so output is deterministic.
fn bron_kerbosch(
    adjacency: &[BitSet],
    r: &mut Vec<usize>,
    mut p: BitSet,
    mut x: BitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r.clone());
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .min_by_key(|&u| (usize::MAX - p.intersection_size(&adjacency[u]), u))
        .expect("p or x is nonempty");
    let candidates: Vec<usize> = p.difference(&adjacency[pivot]).iter().collect();
    for v in candidates {
        r.push(v);
        bron_kerbosch(
            adjacency,
            r,
            p.intersection(&adjacency[v]),
            x.intersection(&adjacency[v]),
            out,
        );
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

#[derive(Clone, PartialEq, Eq)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn empty(n: usize) -> BitSet {
        BitSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    fn all(n: usize) -> BitSet {
        let mut s = BitSet::empty(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn intersection(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    fn difference(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    fn intersection_size(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64)
                .filter(move |b| bits >> b & 1 == 1)
                .map(move |b| w * 64 + b)
        })
    }
}

fn complex_from_positions<F>(positions: Vec<BasicPosition>, compatible: F) -> LegalComplex
where
    F: Fn(&BasicPosition, &BasicPosition) -> bool,
{
    if positions.is_empty() {
        return LegalComplex::empty();
    }
    let cliques = maximal_compatible_sets(&positions, compatible);
    let universe: Vec<Vertex> = positions
        .iter()
        .map(|p| {
            Vertex::new(&p.name, p.owner.expect("partizan positions are owned"))
                .expect("ruleset names are valid")
        })
        .collect();
    let faces: Vec<Vec<Vertex>> = cliques
        .iter()
        .map(|clique| clique.iter().map(|&i| universe[i].clone()).collect())
        .collect();
    LegalComplex::new(universe, faces).expect("generated positions cannot collide")
}

/// Both players may place a stone on any empty site not adjacent to one of
/// their own stones; opposing stones may touch.
fn own_colour_barred(board: &Board) -> LegalComplex {
    let sites = board.sites();
    let mut positions = Vec::with_capacity(sites.len() * 2);
    for (k, &site) in sites.iter().enumerate() {
        let label = board.site_label(site);
        for (prefix, owner) in [('x', Player::Left), ('y', Player::Right)] {
            positions.push(BasicPosition {
                name: format!("{prefix}{label}"),
                owner: Some(owner),
                footprint: BTreeSet::from([k as u32]),
            });
        }
    }
    complex_from_positions(positions, |p, q| {
        let a = sites[*p.footprint.first().unwrap() as usize];
        let b = sites[*q.footprint.first().unwrap() as usize];
        a != b && !(p.owner == q.owner && board.sites_adjacent(a, b))
    })
}

/// The legal complex of the Snort-style colouring game on `board`; vertex
/// `x<i>`/`y<i>` is a Left/Right stone on board site `i`.
pub fn snort_complex(board: &Board) -> LegalComplex {
    own_colour_barred(board)
}

/// The legal complex of Col on `board`: no placement next to your own
/// colour. Same rule as [`snort_complex`]; both names are kept so each
/// ruleset's fixtures read naturally.
pub fn col_complex(board: &Board) -> LegalComplex {
    own_colour_barred(board)
}

/// Domineering: Left places vertical dominoes (`xV<r>_<c>`, anchored at
/// the top cell), Right horizontal ones (`yH<r>_<c>`, anchored at the left
/// cell); pieces may not overlap. The board must be a grid.
pub fn domineering_complex(board: &Board) -> Result<LegalComplex> {
    let (rows, cols) = board.grid_spec().ok_or_else(|| {
        Error::InvalidArgument("domineering needs a grid board".into())
    })?;
    let cell = |r: usize, c: usize| (r * cols + c) as u32;
    let mut positions = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if board.is_live(r, c) && board.is_live(r + 1, c) {
                positions.push(BasicPosition {
                    name: format!("xV{}_{}", r + 1, c + 1),
                    owner: Some(Player::Left),
                    footprint: BTreeSet::from([cell(r, c), cell(r + 1, c)]),
                });
            }
            if board.is_live(r, c) && board.is_live(r, c + 1) {
                positions.push(BasicPosition {
                    name: format!("yH{}_{}", r + 1, c + 1),
                    owner: Some(Player::Right),
                    footprint: BTreeSet::from([cell(r, c), cell(r, c + 1)]),
                });
            }
        }
    }
    Ok(complex_from_positions(positions, |p, q| {
        p.footprint.is_disjoint(&q.footprint)
    }))
}

/// A placement Nim pile of size `n`: either player may place a piece
/// covering any nonempty set of free board vertices (the piece `K_l`
/// covers `l` of them). Facets are the set partitions of the board, so the
/// game is the Nim heap `*n`.
pub fn nim_pile_complex(n: usize) -> Result<ImpartialComplex> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "a nim pile needs at least one vertex".into(),
        ));
    }
    if n > 10 {
        return Err(Error::InvalidArgument(format!(
            "nim pile of size {n} is beyond desk scale (max 10)"
        )));
    }
    let name = |block: &[u32]| {
        let mut s = format!("K{}", block.len());
        for v in block {
            s.push('_');
            s.push_str(&(v + 1).to_string());
        }
        s
    };
    let faces: Vec<Vec<String>> = set_partitions(n)
        .into_iter()
        .map(|partition| partition.iter().map(|block| name(block)).collect())
        .collect();
    ImpartialComplex::from_faces(faces)
}

/// All set partitions of `{0..n}`, each partition's blocks sorted by least
/// element, each block ascending.
fn set_partitions(n: usize) -> Vec<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    let mut current: Vec<Vec<u32>> = Vec::new();
    fn place(v: u32, n: u32, current: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        if v == n {
            out.push(current.clone());
            return;
        }
        for i in 0..current.len() {
            current[i].push(v);
            place(v + 1, n, current, out);
            current[i].pop();
        }
        current.push(vec![v]);
        place(v + 1, n, current, out);
        current.pop();
    }
    place(0, n as u32, &mut current, &mut out);
    out
}
