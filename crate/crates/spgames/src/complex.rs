//! Legal complexes: bipartitioned simplicial complexes whose faces are the
//! legal positions of a placement game.
//!
//! Vertices are basic positions. A name starting with `x` belongs to Left,
//! `y` to Right; the complex stores only the facets (maximal legal
//! positions) since every subset of a legal position is legal. Equality is
//! literal: two complexes are equal only if they have the same vertex
//! universe and the same facets, so the void complex `⟨⟩` and the complex
//! `⟨∅⟩` whose single facet is empty are distinct (they describe the same
//! game: no moves).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::{Error, Result};

/// The two players.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Player {
    Left,
    Right,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Left => Player::Right,
            Player::Right => Player::Left,
        }
    }

    /// The name prefix that marks a vertex as this player's.
    pub fn prefix(self) -> char {
        match self {
            Player::Left => 'x',
            Player::Right => 'y',
        }
    }
}

/// A basic position: one piece by one player.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    name: String,
    owner: Player,
}

impl Vertex {
    /// Builds a vertex, deriving the owner from the name prefix.
    pub fn from_name(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        validate_token(&name)?;
        let owner = match name.as_bytes()[0] {
            b'x' => Player::Left,
            b'y' => Player::Right,
            _ => {
                return Err(Error::VertexName {
                    name,
                    reason: "partizan names start with 'x' (Left) or 'y' (Right)".into(),
                })
            }
        };
        Ok(Vertex { name, owner })
    }

    /// Builds a vertex with an explicit owner, which must match the prefix.
    pub fn new(name: impl Into<String>, owner: Player) -> Result<Self> {
        let v = Vertex::from_name(name)?;
        if v.owner != owner {
            return Err(Error::ConflictingOwner { name: v.name });
        }
        Ok(v)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn owner(&self) -> Player {
        self.owner
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Checks the lexical rules shared by partizan and impartial vertex names.
pub(crate) fn validate_token(name: &str) -> Result<()> {
    let bad = |reason: &str| Error::VertexName {
        name: name.to_owned(),
        reason: reason.into(),
    };
    if name.is_empty() {
        return Err(bad("empty name"));
    }
    if name.chars().any(char::is_whitespace) {
        return Err(bad("contains whitespace"));
    }
    if name.contains('#') {
        return Err(bad("contains '#'"));
    }
    if name.contains('(') || name.contains(')') {
        return Err(bad("contains parentheses"));
    }
    Ok(())
}

/// Result of taking the link of a vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Link {
    /// The vertex lies on a facet; this is the position after claiming it.
    Position(LegalComplex),
    /// The vertex is in the universe but on no facet: claiming it is never
    /// legal, so it yields no move. Distinct from `Position` of `⟨∅⟩`.
    Illegal,
}

/// A legal complex: sorted vertex universe plus the antichain of facets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LegalComplex {
    /// Sorted by name, no duplicates.
    vertices: Vec<Vertex>,
    /// Each facet is a sorted index list into `vertices`; the facet list is
    /// sorted by (size, lexicographic) and is an antichain under inclusion.
    facets: Vec<Vec<u32>>,
}

impl LegalComplex {
    /// The void complex `⟨⟩`: no vertices, no faces.
    pub fn empty() -> Self {
        LegalComplex {
            vertices: Vec::new(),
            facets: Vec::new(),
        }
    }

    /// Normalizes an explicit universe plus a set of faces: deduplicates,
    /// keeps only inclusion-maximal faces, sorts everything.
    pub fn new(universe: Vec<Vertex>, faces: Vec<Vec<Vertex>>) -> Result<Self> {
        let mut by_name: BTreeMap<String, Player> = BTreeMap::new();
        {
            let mut add = |v: &Vertex| -> Result<()> {
                match by_name.get(v.name()) {
                    Some(&owner) if owner != v.owner() => Err(Error::ConflictingOwner {
                        name: v.name().to_owned(),
                    }),
                    Some(_) => Ok(()),
                    None => {
                        by_name.insert(v.name().to_owned(), v.owner());
                        Ok(())
                    }
                }
            };
            for v in &universe {
                add(v)?;
            }
            for face in &faces {
                for v in face {
                    add(v)?;
                }
            }
        }
        let vertices: Vec<Vertex> = by_name
            .into_iter()
            .map(|(name, owner)| Vertex { name, owner })
            .collect();
        let index_of = |name: &str| -> u32 {
            vertices
                .binary_search_by(|v| v.name.as_str().cmp(name))
                .expect("vertex indexed during normalization") as u32
        };
        let faces_idx: Vec<Vec<u32>> = faces
            .iter()
            .map(|face| {
                let mut ids: Vec<u32> = face.iter().map(|v| index_of(v.name())).collect();
                ids.sort_unstable();
                ids.dedup();
                ids
            })
            .collect();
        Ok(Self::from_indexed(vertices, faces_idx))
    }

    /// Normalizes faces given only by their vertices (universe = union).
    pub fn from_faces(faces: Vec<Vec<Vertex>>) -> Result<Self> {
        Self::new(Vec::new(), faces)
    }

    /// Convenience constructor from name lists; owners come from prefixes.
    pub fn from_names(faces: &[&[&str]]) -> Result<Self> {
        let faces = faces
            .iter()
            .map(|face| face.iter().map(|&name| Vertex::from_name(name)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_faces(faces)
    }

    /// Internal: assumes `vertices` sorted/deduped and face indices sorted;
    /// selects maximal faces and orders the facet list.
    fn from_indexed(vertices: Vec<Vertex>, faces: Vec<Vec<u32>>) -> Self {
        LegalComplex {
            vertices,
            facets: keep_maximal(faces),
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub(crate) fn vertex(&self, idx: u32) -> &Vertex {
        &self.vertices[idx as usize]
    }

    pub(crate) fn facet_index_sets(&self) -> &[Vec<u32>] {
        &self.facets
    }

    /// Facets as name lists, in canonical order.
    pub fn facets_as_names(&self) -> Vec<Vec<&str>> {
        self.facets
            .iter()
            .map(|f| f.iter().map(|&i| self.vertices[i as usize].name()).collect())
            .collect()
    }

    pub fn contains_vertex(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    fn index_of(&self, name: &str) -> Option<u32> {
        self.vertices
            .binary_search_by(|v| v.name.as_str().cmp(name))
            .ok()
            .map(|i| i as u32)
    }

    /// Indices of vertices that lie on at least one facet, ascending.
    pub(crate) fn active_vertex_indices(&self) -> Vec<u32> {
        let mut active = vec![false; self.vertices.len()];
        for facet in &self.facets {
            for &i in facet {
                active[i as usize] = true;
            }
        }
        (0..self.vertices.len() as u32)
            .filter(|&i| active[i as usize])
            .collect()
    }

    /// Names of vertices that lie on at least one facet (the legal moves).
    pub fn active_vertices(&self) -> Vec<&Vertex> {
        self.active_vertex_indices()
            .into_iter()
            .map(|i| &self.vertices[i as usize])
            .collect()
    }

    /// `max |facet| - 1`; −1 when there is no facet or only the empty one.
    pub fn dimension(&self) -> i32 {
        self.facets
            .iter()
            .map(|f| f.len() as i32 - 1)
            .max()
            .unwrap_or(-1)
    }

    /// True when all facets have the same size (vacuously for none).
    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(first) => self.facets.iter().all(|f| f.len() == first.len()),
        }
    }

    /// The position after the named vertex is claimed.
    pub fn link(&self, name: &str) -> Result<Link> {
        let idx = self.index_of(name).ok_or_else(|| Error::UnknownVertex {
            name: name.to_owned(),
        })?;
        Ok(self.link_by_index(idx))
    }

    /// Link of a vertex known to exist. Facets of the link are the facets
    /// through the vertex with the vertex removed; that family is already an
    /// antichain, so no maximality pass is needed.
    pub(crate) fn link_by_index(&self, idx: u32) -> Link {
        let mut faces: Vec<Vec<u32>> = Vec::new();
        for facet in &self.facets {
            if facet.binary_search(&idx).is_ok() {
                faces.push(facet.iter().copied().filter(|&i| i != idx).collect());
            }
        }
        if faces.is_empty() {
            return Link::Illegal;
        }
        let mut used = vec![false; self.vertices.len()];
        for face in &faces {
            for &i in face {
                used[i as usize] = true;
            }
        }
        let mut remap = vec![u32::MAX; self.vertices.len()];
        let mut vertices = Vec::new();
        for (i, vertex) in self.vertices.iter().enumerate() {
            if used[i] {
                remap[i] = vertices.len() as u32;
                vertices.push(vertex.clone());
            }
        }
        for face in &mut faces {
            for i in face.iter_mut() {
                *i = remap[*i as usize];
            }
        }
        sort_facets(&mut faces);
        Link::Position(LegalComplex { vertices, facets: faces })
    }

    /// Join: vertex-disjoint union of boards played simultaneously. Facets
    /// are pairwise unions; the product of two antichains on disjoint
    /// vertex sets is an antichain.
    pub fn join(&self, other: &LegalComplex) -> Result<LegalComplex> {
        let mut vertices: Vec<Vertex> = Vec::with_capacity(self.vertices.len() + other.vertices.len());
        let (mut i, mut j) = (0usize, 0usize);
        let mut remap_a = vec![0u32; self.vertices.len()];
        let mut remap_b = vec![0u32; other.vertices.len()];
        while i < self.vertices.len() || j < other.vertices.len() {
            let take_a = match (self.vertices.get(i), other.vertices.get(j)) {
                (Some(a), Some(b)) => {
                    if a.name == b.name {
                        return Err(Error::JoinCollision { name: a.name.clone() });
                    }
                    a.name < b.name
                }
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => unreachable!(),
            };
            if take_a {
                remap_a[i] = vertices.len() as u32;
                vertices.push(self.vertices[i].clone());
                i += 1;
            } else {
                remap_b[j] = vertices.len() as u32;
                vertices.push(other.vertices[j].clone());
                j += 1;
            }
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for fa in &self.facets {
            for fb in &other.facets {
                let mut union: Vec<u32> = fa
                    .iter()
                    .map(|&k| remap_a[k as usize])
                    .chain(fb.iter().map(|&k| remap_b[k as usize]))
                    .collect();
                union.sort_unstable();
                facets.push(union);
            }
        }
        sort_facets(&mut facets);
        Ok(LegalComplex { vertices, facets })
    }

    /// Swaps the players: every `x…` vertex becomes `y…` and vice versa.
    pub fn negate_labels(&self) -> LegalComplex {
        let renamed: Vec<Vertex> = self
            .vertices
            .iter()
            .map(|v| {
                let mut name = v.name.clone();
                let flip = match v.owner {
                    Player::Left => "y",
                    Player::Right => "x",
                };
                name.replace_range(0..1, flip);
                Vertex {
                    name,
                    owner: v.owner.opponent(),
                }
            })
            .collect();
        let mut order: Vec<u32> = (0..renamed.len() as u32).collect();
        order.sort_by(|&a, &b| renamed[a as usize].name.cmp(&renamed[b as usize].name));
        let mut remap = vec![0u32; renamed.len()];
        for (new_idx, &old_idx) in order.iter().enumerate() {
            remap[old_idx as usize] = new_idx as u32;
        }
        let vertices: Vec<Vertex> = order.iter().map(|&i| renamed[i as usize].clone()).collect();
        let mut facets: Vec<Vec<u32>> = self
            .facets
            .iter()
            .map(|f| {
                let mut g: Vec<u32> = f.iter().map(|&i| remap[i as usize]).collect();
                g.sort_unstable();
                g
            })
            .collect();
        sort_facets(&mut facets);
        LegalComplex { vertices, facets }
    }

    /// Parses the line-oriented text format (one facet per line, `#`
    /// comments, optional `vertices:` header, `()` for the empty facet).
    pub fn parse(text: &str) -> Result<LegalComplex> {
        let raw = tokenize(text)?;
        let mut universe = Vec::new();
        for (line, token) in &raw.header {
            universe.push(vertex_at_line(token, *line)?);
        }
        let mut faces = Vec::new();
        for (line, tokens) in &raw.faces {
            let face = tokens
                .iter()
                .map(|t| vertex_at_line(t, *line))
                .collect::<Result<Vec<_>>>()?;
            faces.push(face);
        }
        LegalComplex::new(universe, faces)
    }

    /// Canonical text form; `parse` round-trips it. The `vertices:` header
    /// appears only when some vertex lies on no facet.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let active = self.active_vertex_indices();
        if active.len() != self.vertices.len() {
            out.push_str("vertices:");
            for v in &self.vertices {
                out.push(' ');
                out.push_str(&v.name);
            }
            out.push('\n');
        }
        for facet in &self.facets {
            if facet.is_empty() {
                out.push_str("()\n");
            } else {
                let names: Vec<&str> = facet
                    .iter()
                    .map(|&i| self.vertices[i as usize].name())
                    .collect();
                out.push_str(&names.join(" "));
                out.push('\n');
            }
        }
        out
    }

    /// Splits the complex into independent components whose join rebuilds
    /// it: the facet set must be exactly the product of the per-component
    /// facet sets, which is verified before any split is reported.
    /// Vertices lying on no facet are dropped from the factors. Returns a
    /// single factor (the complex itself) when there is no split, and no
    /// factors at all when the only facet is the empty face.
    pub fn join_factors(&self) -> Vec<LegalComplex> {
        if self.facets.is_empty() {
            return vec![self.clone()];
        }
        let active = self.active_vertex_indices();
        if active.is_empty() {
            return Vec::new();
        }
        let n = active.len();
        let facet_count = self.facets.len();
        let mut pos = vec![usize::MAX; self.vertices.len()];
        for (i, &v) in active.iter().enumerate() {
            pos[v as usize] = i;
        }
        let words = n.div_ceil(64);
        let masks: Vec<Vec<u64>> = self
            .facets
            .iter()
            .map(|f| {
                let mut m = vec![0u64; words];
                for &v in f {
                    let p = pos[v as usize];
                    m[p / 64] |= 1 << (p % 64);
                }
                m
            })
            .collect();
        let mut containing = vec![0usize; n];
        for m in &masks {
            for (i, c) in containing.iter_mut().enumerate() {
                *c += (m[i / 64] >> (i % 64) & 1) as usize;
            }
        }

        // Two vertices are entangled when some combination of
        // (in facet, not in facet) never occurs for them together; group
        // entangled vertices with a union-find.
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut parent: Vec<usize> = (0..n).collect();
        for i in 0..n {
            for j in i + 1..n {
                if find(&mut parent, i) == find(&mut parent, j) {
                    continue;
                }
                let expected = (1 + usize::from(containing[i] < facet_count))
                    * (1 + usize::from(containing[j] < facet_count));
                let mut seen = [false; 4];
                let mut observed = 0;
                for m in &masks {
                    let a = (m[i / 64] >> (i % 64) & 1) as usize;
                    let b = (m[j / 64] >> (j % 64) & 1) as usize;
                    if !seen[a * 2 + b] {
                        seen[a * 2 + b] = true;
                        observed += 1;
                        if observed == expected {
                            break;
                        }
                    }
                }
                if observed < expected {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
        let mut blocks: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
        for i in 0..n {
            let root = find(&mut parent, i);
            blocks.entry(root).or_default().push(active[i]);
        }
        if blocks.len() == 1 {
            return vec![self.clone()];
        }

        let mut projections: Vec<(Vec<u32>, BTreeSet<Vec<u32>>)> = Vec::new();
        for verts in blocks.into_values() {
            let mut projs = BTreeSet::new();
            for f in &self.facets {
                let p: Vec<u32> = f
                    .iter()
                    .copied()
                    .filter(|v| verts.binary_search(v).is_ok())
                    .collect();
                projs.insert(p);
            }
            projections.push((verts, projs));
        }
        let mut product: u128 = 1;
        for (_, projs) in &projections {
            product = product.saturating_mul(projs.len() as u128);
            if product > facet_count as u128 {
                return vec![self.clone()];
            }
        }
        if product != facet_count as u128 {
            return vec![self.clone()];
        }

        projections
            .into_iter()
            .map(|(verts, projs)| {
                let vertices: Vec<Vertex> = verts
                    .iter()
                    .map(|&v| self.vertices[v as usize].clone())
                    .collect();
                let mut facets: Vec<Vec<u32>> = projs
                    .into_iter()
                    .map(|p| {
                        p.into_iter()
                            .map(|v| verts.binary_search(&v).unwrap() as u32)
                            .collect()
                    })
                    .collect();
                sort_facets(&mut facets);
                LegalComplex { vertices, facets }
            })
            .collect()
    }
}

impl fmt::Display for LegalComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn vertex_at_line(token: &str, line: usize) -> Result<Vertex> {
    Vertex::from_name(token).map_err(|e| Error::Parse {
        line,
        message: e.to_string(),
    })
}

/// Sorted-slice subset test.
pub(crate) fn is_subset(a: &[u32], b: &[u32]) -> bool {
    if a.len() > b.len() {
        return false;
    }
    let mut j = 0;
    'outer: for &x in a {
        while j < b.len() {
            match b[j].cmp(&x) {
                std::cmp::Ordering::Less => j += 1,
                std::cmp::Ordering::Equal => {
                    j += 1;
                    continue 'outer;
                }
                std::cmp::Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

/// Reduces a list of index faces (each sorted ascending) to its maximal
/// antichain, sorted by (size, lexicographic).
pub(crate) fn keep_maximal(mut faces: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    faces.sort_unstable();
    faces.dedup();
    // Longest first so every kept face only needs checking against
    // already-kept (equal-or-longer) ones.
    faces.sort_by(|a, b| b.len().cmp(&a.len()));
    let mut kept: Vec<Vec<u32>> = Vec::with_capacity(faces.len());
    for face in faces {
        if !kept.iter().any(|k| is_subset(&face, k)) {
            kept.push(face);
        }
    }
    sort_facets(&mut kept);
    kept
}

/// Canonical facet-list order: by size, then lexicographically.
pub(crate) fn sort_facets(facets: &mut [Vec<u32>]) {
    facets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
}

/// Tokenized form of the text format, shared with the impartial parser.
pub(crate) struct RawComplexText {
    /// (line, token) pairs from the `vertices:` header, if present.
    pub header: Vec<(usize, String)>,
    /// (line, tokens) per facet line; a `()` line yields an empty token list.
    pub faces: Vec<(usize, Vec<String>)>,
}

pub(crate) fn tokenize(text: &str) -> Result<RawComplexText> {
    let mut header: Vec<(usize, String)> = Vec::new();
    let mut saw_header = false;
    let mut faces: Vec<(usize, Vec<String>)> = Vec::new();
    for (i, raw_line) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw_line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vertices:") {
            if saw_header || !faces.is_empty() {
                return Err(Error::Parse {
                    line: line_no,
                    message: "'vertices:' header must be the first contentful line".into(),
                });
            }
            saw_header = true;
            for token in rest.split_whitespace() {
                header.push((line_no, token.to_owned()));
            }
            continue;
        }
        if line == "()" {
            faces.push((line_no, Vec::new()));
            continue;
        }
        let tokens: Vec<String> = line.split_whitespace().map(str::to_owned).collect();
        if tokens.iter().any(|t| t == "()") {
            return Err(Error::Parse {
                line: line_no,
                message: "'()' denotes the empty facet and must be alone on its line".into(),
            });
        }
        faces.push((line_no, tokens));
    }
    Ok(RawComplexText { header, faces })
}
