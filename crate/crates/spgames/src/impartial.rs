//! Impartial placement games: unlabeled legal complexes, Grundy values,
//! structural shortcuts, and a partizan cross-check.
//!
//! An impartial complex drops the ownership labels: both players may play
//! any open vertex. Values are nimbers, computed by the mex rule over
//! links. Three structural facts short-circuit evaluation when they apply:
//! every completed play fills a facet, so if all facets have even size the
//! second player always makes the last move (value 0); a pure complex with
//! facets of size s is 0 or * by the parity of s; and a disjoint union of
//! pure components is 0, *, or *2 by the parities of their dimensions.

use std::collections::HashMap;

use crate::complex::{keep_maximal, sort_facets, tokenize, validate_token, LegalComplex};
use crate::engine::EvalContext;
use crate::values::make_nimber;
use crate::{Error, Result};

/// A simplicial complex of legal positions with no ownership labels.
/// Vertex names are free-form tokens; facets form an antichain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ImpartialComplex {
    vertices: Vec<String>,
    facets: Vec<Vec<u32>>,
}

/// Result of playing a vertex of an impartial complex.
pub enum ImpartialLink {
    Position(ImpartialComplex),
    /// The vertex is in the universe but on no facet.
    Illegal,
}

impl ImpartialComplex {
    pub fn empty() -> ImpartialComplex {
        ImpartialComplex {
            vertices: Vec::new(),
            facets: Vec::new(),
        }
    }

    /// Builds a complex from a vertex universe and a list of faces; faces
    /// are closed downward, so only the maximal ones are kept.
    pub fn new(universe: Vec<String>, faces: Vec<Vec<String>>) -> Result<ImpartialComplex> {
        let mut vertices: Vec<String> = Vec::new();
        for name in universe
            .iter()
            .chain(faces.iter().flat_map(|f| f.iter()))
        {
            validate_token(name)?;
            vertices.push(name.clone());
        }
        vertices.sort();
        vertices.dedup();
        let index_of = |name: &str| -> u32 {
            vertices.binary_search_by(|v| v.as_str().cmp(name)).unwrap() as u32
        };
        let faces_idx: Vec<Vec<u32>> = faces
            .iter()
            .map(|f| {
                let mut idx: Vec<u32> = f.iter().map(|n| index_of(n)).collect();
                idx.sort_unstable();
                idx.dedup();
                idx
            })
            .collect();
        Ok(ImpartialComplex {
            facets: keep_maximal(faces_idx),
            vertices,
        })
    }

    pub fn from_faces(faces: Vec<Vec<String>>) -> Result<ImpartialComplex> {
        ImpartialComplex::new(Vec::new(), faces)
    }

    pub fn from_names(faces: &[&[&str]]) -> Result<ImpartialComplex> {
        ImpartialComplex::from_faces(
            faces
                .iter()
                .map(|f| f.iter().map(|s| (*s).to_owned()).collect())
                .collect(),
        )
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn facets_as_names(&self) -> Vec<Vec<&str>> {
        self.facets
            .iter()
            .map(|f| f.iter().map(|&i| self.vertices[i as usize].as_str()).collect())
            .collect()
    }

    pub(crate) fn facet_index_sets(&self) -> &[Vec<u32>] {
        &self.facets
    }

    /// Indices of vertices that lie on at least one facet.
    pub(crate) fn active_vertex_indices(&self) -> Vec<u32> {
        let mut active = vec![false; self.vertices.len()];
        for f in &self.facets {
            for &v in f {
                active[v as usize] = true;
            }
        }
        (0..self.vertices.len() as u32)
            .filter(|&i| active[i as usize])
            .collect()
    }

    pub fn dimension(&self) -> i32 {
        self.facets
            .iter()
            .map(|f| f.len() as i32 - 1)
            .max()
            .unwrap_or(-1)
    }

    /// All facets the same size.
    pub fn is_pure(&self) -> bool {
        self.facets
            .windows(2)
            .all(|w| w[0].len() == w[1].len())
    }

    pub fn contains_vertex(&self, name: &str) -> bool {
        self.vertices.binary_search_by(|v| v.as_str().cmp(name)).is_ok()
    }

    /// Plays a named vertex.
    pub fn link(&self, name: &str) -> Result<ImpartialLink> {
        match self.vertices.binary_search_by(|v| v.as_str().cmp(name)) {
            Ok(idx) => Ok(self.link_by_index(idx as u32)),
            Err(_) => Err(Error::UnknownVertex {
                name: name.to_owned(),
            }),
        }
    }

    pub(crate) fn link_by_index(&self, idx: u32) -> ImpartialLink {
        let mut faces: Vec<Vec<u32>> = Vec::new();
        for f in &self.facets {
            if let Ok(p) = f.binary_search(&idx) {
                let mut rest = f.clone();
                rest.remove(p);
                faces.push(rest);
            }
        }
        if faces.is_empty() {
            return ImpartialLink::Illegal;
        }
        // Facets through a common vertex stay an antichain after deletion.
        let mut used: Vec<u32> = faces.iter().flatten().copied().collect();
        used.sort_unstable();
        used.dedup();
        let mut remap = vec![0u32; self.vertices.len()];
        for (new_idx, &old_idx) in used.iter().enumerate() {
            remap[old_idx as usize] = new_idx as u32;
        }
        let vertices: Vec<String> = used
            .iter()
            .map(|&i| self.vertices[i as usize].clone())
            .collect();
        let mut facets: Vec<Vec<u32>> = faces
            .into_iter()
            .map(|f| f.into_iter().map(|v| remap[v as usize]).collect())
            .collect();
        sort_facets(&mut facets);
        ImpartialLink::Position(ImpartialComplex { vertices, facets })
    }

    /// Join: disjoint vertex sets, facets are pairwise unions. Playing the
    /// join is playing the two games as one (their disjunctive sum).
    pub fn join(&self, other: &ImpartialComplex) -> Result<ImpartialComplex> {
        let mut vertices = Vec::with_capacity(self.vertices.len() + other.vertices.len());
        let (mut i, mut j) = (0, 0);
        let mut from_self = Vec::with_capacity(self.vertices.len());
        let mut from_other = Vec::with_capacity(other.vertices.len());
        while i < self.vertices.len() || j < other.vertices.len() {
            let take_self = match (self.vertices.get(i), other.vertices.get(j)) {
                (Some(a), Some(b)) => {
                    if a == b {
                        return Err(Error::JoinCollision { name: a.clone() });
                    }
                    a < b
                }
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => unreachable!(),
            };
            if take_self {
                from_self.push(vertices.len() as u32);
                vertices.push(self.vertices[i].clone());
                i += 1;
            } else {
                from_other.push(vertices.len() as u32);
                vertices.push(other.vertices[j].clone());
                j += 1;
            }
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in &self.facets {
            for b in &other.facets {
                let mut f: Vec<u32> = a
                    .iter()
                    .map(|&v| from_self[v as usize])
                    .chain(b.iter().map(|&v| from_other[v as usize]))
                    .collect();
                f.sort_unstable();
                facets.push(f);
            }
        }
        sort_facets(&mut facets);
        Ok(ImpartialComplex { vertices, facets })
    }

    /// Parses the same text format as the partizan complexes, but with
    /// free-form vertex names.
    pub fn parse(text: &str) -> Result<ImpartialComplex> {
        let raw = tokenize(text)?;
        let check = |token: &String, line: usize| -> Result<String> {
            validate_token(token).map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?;
            Ok(token.clone())
        };
        let mut universe = Vec::new();
        for (line, token) in &raw.header {
            universe.push(check(token, *line)?);
        }
        let mut faces = Vec::new();
        for (line, tokens) in &raw.faces {
            let face = tokens
                .iter()
                .map(|t| check(t, *line))
                .collect::<Result<Vec<_>>>()?;
            faces.push(face);
        }
        ImpartialComplex::new(universe, faces)
    }

    /// Canonical text form; `parse` round-trips it.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let active = self.active_vertex_indices();
        if active.len() != self.vertices.len() {
            out.push_str("vertices:");
            for v in &self.vertices {
                out.push(' ');
                out.push_str(v);
            }
            out.push('\n');
        }
        for facet in &self.facets {
            if facet.is_empty() {
                out.push_str("()\n");
            } else {
                let names: Vec<&str> = facet
                    .iter()
                    .map(|&i| self.vertices[i as usize].as_str())
                    .collect();
                out.push_str(&names.join(" "));
                out.push('\n');
            }
        }
        out
    }

    /// The partizan complex that plays identically: each vertex splits into
    /// a Left and a Right copy, and a labeled set is legal when its
    /// underlying vertices are distinct and legal here.
    pub fn doubled_partizan(&self) -> LegalComplex {
        let mut universe = Vec::with_capacity(self.vertices.len() * 2);
        for name in &self.vertices {
            universe.push(crate::complex::Vertex::from_name(&format!("x{name}"))
                .expect("valid doubled name"));
            universe.push(crate::complex::Vertex::from_name(&format!("y{name}"))
                .expect("valid doubled name"));
        }
        let mut faces: Vec<Vec<crate::complex::Vertex>> = Vec::new();
        for f in &self.facets {
            for mask in 0u32..1 << f.len() {
                let face = f
                    .iter()
                    .enumerate()
                    .map(|(pos, &v)| {
                        let prefix = if mask >> pos & 1 == 0 { 'x' } else { 'y' };
                        crate::complex::Vertex::from_name(&format!(
                            "{prefix}{}",
                            self.vertices[v as usize]
                        ))
                        .expect("valid doubled name")
                    })
                    .collect();
                faces.push(face);
            }
        }
        LegalComplex::new(universe, faces).expect("doubled names cannot collide")
    }
}

/// Minimal excluded value: the least nonnegative integer not in the set.
pub fn mex(values: impl IntoIterator<Item = u32>) -> u32 {
    let mut seen: Vec<u32> = values.into_iter().collect();
    seen.sort_unstable();
    seen.dedup();
    let mut expected = 0;
    for v in seen {
        if v != expected {
            break;
        }
        expected += 1;
    }
    expected
}

/// Memoized Grundy evaluation.
pub struct GrundySolver {
    memo: HashMap<ImpartialComplex, u32>,
}

impl GrundySolver {
    pub fn new() -> GrundySolver {
        GrundySolver {
            memo: HashMap::new(),
        }
    }

    /// The Grundy value: mex over all moves, 0 with none.
    pub fn grundy(&mut self, c: &ImpartialComplex) -> u32 {
        if let Some(&g) = self.memo.get(c) {
            return g;
        }
        let mut options = Vec::new();
        for idx in c.active_vertex_indices() {
            if let ImpartialLink::Position(rest) = c.link_by_index(idx) {
                options.push(self.grundy(&rest));
            }
        }
        let g = mex(options);
        self.memo.insert(c.clone(), g);
        g
    }
}

impl Default for GrundySolver {
    fn default() -> GrundySolver {
        GrundySolver::new()
    }
}

/// Grundy value by structural shortcut alone, when one applies.
///
/// In order: all facets even-sized → 0 (every completed play has even
/// length); pure with facet size s → s mod 2; a disjoint union of pure
/// components → 0 if all component dimensions are odd, 1 if all are even,
/// 2 otherwise. Absent when no rule fires.
pub fn predict_structural(c: &ImpartialComplex) -> Option<u32> {
    explain_structural(c).map(|(_, g)| g)
}

/// Like [`predict_structural`], but also names the rule that fired.
pub fn explain_structural(c: &ImpartialComplex) -> Option<(&'static str, u32)> {
    let facets = c.facet_index_sets();
    if facets.iter().all(|f| f.len() % 2 == 0) {
        return Some(("every facet has even size", 0));
    }
    if c.is_pure() {
        return Some((
            "pure complex: facet size mod 2",
            (facets[0].len() % 2) as u32,
        ));
    }
    // Group facets into components by shared vertices.
    let n = facets.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut owner_of_vertex: HashMap<u32, usize> = HashMap::new();
    for (i, f) in facets.iter().enumerate() {
        for &v in f {
            match owner_of_vertex.get(&v) {
                Some(&j) => {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri.max(rj)] = ri.min(rj);
                }
                None => {
                    owner_of_vertex.insert(v, i);
                }
            }
        }
    }
    let mut component_sizes: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, f) in facets.iter().enumerate() {
        let root = find(&mut parent, i);
        component_sizes.entry(root).or_default().push(f.len());
    }
    let mut all_dims_odd = true;
    let mut all_dims_even = true;
    for sizes in component_sizes.values() {
        if sizes.windows(2).any(|w| w[0] != w[1]) {
            return None; // a component is not pure
        }
        // dimension = size - 1; odd dimension means even size
        if sizes[0] % 2 == 0 {
            all_dims_even = false;
        } else {
            all_dims_odd = false;
        }
    }
    Some(if all_dims_odd {
        ("disjoint pure components, all dimensions odd", 0)
    } else if all_dims_even {
        ("disjoint pure components, all dimensions even", 1)
    } else {
        ("disjoint pure components, mixed dimension parity", 2)
    })
}

/// Verifies the Grundy value against a full partizan evaluation of the
/// doubled complex: the doubled game must equal `*grundy(c)`.
pub fn grundy_value_crosscheck(ctx: &mut EvalContext, c: &ImpartialComplex) -> bool {
    let g = GrundySolver::new().grundy(c);
    let doubled = c.doubled_partizan();
    let game = ctx.game_from_complex(&doubled);
    let nimber = make_nimber(ctx, g);
    ctx.equal(game, nimber)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cx(faces: &[&[&str]]) -> ImpartialComplex {
        ImpartialComplex::from_names(faces).unwrap()
    }

    #[test]
    fn mex_basics() {
        assert_eq!(mex([]), 0);
        assert_eq!(mex([0, 1, 3]), 2);
        assert_eq!(mex([1, 2]), 0);
        assert_eq!(mex([2, 0, 0, 1]), 3);
    }

    #[test]
    fn grundy_of_tiny_complexes() {
        let mut solver = GrundySolver::new();
        assert_eq!(solver.grundy(&ImpartialComplex::empty()), 0);
        assert_eq!(solver.grundy(&cx(&[&[]])), 0);
        assert_eq!(solver.grundy(&cx(&[&["a"]])), 1);
        assert_eq!(solver.grundy(&cx(&[&["a", "b"]])), 0);
        // Two separate vertices: either move ends the game, so {0,0} = *.
        assert_eq!(solver.grundy(&cx(&[&["a"], &["b"]])), 1);
        // A path's worth of choices: {0, *} = *2.
        assert_eq!(solver.grundy(&cx(&[&["a"], &["b", "c"]])), 2);
    }

    #[test]
    fn structural_predictions() {
        assert_eq!(predict_structural(&cx(&[&["a", "b"], &["c", "d"]])), Some(0));
        assert_eq!(
            predict_structural(&cx(&[&["a", "b", "c", "d"], &["a", "b", "d", "e"]])),
            Some(0)
        );
        assert_eq!(
            predict_structural(&cx(&[&["a", "b", "c"], &["a", "b", "d"]])),
            Some(1)
        );
        // Disjoint unions of pure components.
        assert_eq!(
            predict_structural(&cx(&[&["a", "b"], &["c", "d", "e"]])),
            Some(2)
        );
        assert_eq!(predict_structural(&cx(&[&["a"], &["b", "c"]])), Some(2));
        // Mixed facet sizes within one component: no rule fires.
        assert_eq!(
            predict_structural(&cx(&[&["a", "b"], &["b", "c", "d"]])),
            None
        );
    }

    #[test]
    fn predictions_match_grundy() {
        let mut solver = GrundySolver::new();
        let cases = [
            cx(&[&["a", "b"], &["c", "d"]]),
            cx(&[&["a", "b", "c"], &["a", "b", "d"]]),
            cx(&[&["a", "b"], &["c", "d", "e"]]),
            cx(&[&["a"], &["b"], &["c", "d"]]),
        ];
        for c in &cases {
            if let Some(p) = predict_structural(c) {
                assert_eq!(p, solver.grundy(c), "on {}", c.to_text());
            }
        }
    }

    #[test]
    fn doubling_realizes_the_same_game() {
        let ctx = &mut crate::engine::EvalContext::new();
        let single = cx(&[&["1"]]);
        let doubled = single.doubled_partizan();
        assert_eq!(
            doubled.facets_as_names(),
            vec![vec!["x1"], vec!["y1"]],
            "a lone vertex doubles to one Left and one Right move"
        );
        assert!(grundy_value_crosscheck(ctx, &single));
        assert!(grundy_value_crosscheck(ctx, &cx(&[&["a", "b"]])));
        assert!(grundy_value_crosscheck(ctx, &cx(&[&["a"], &["b", "c"]])));
        assert!(grundy_value_crosscheck(ctx, &ImpartialComplex::empty()));
    }

    #[test]
    fn grundy_adds_over_joins_with_xor() {
        let mut solver = GrundySolver::new();
        let a = cx(&[&["a"], &["b", "c"]]); // *2
        let b = cx(&[&["d"]]); // *
        let joined = a.join(&b).unwrap();
        assert_eq!(solver.grundy(&joined), 2 ^ 1);
    }

    #[test]
    fn parse_and_render_round_trip() {
        let c = ImpartialComplex::parse("a b\nc\n").unwrap();
        assert_eq!(c.facets_as_names(), vec![vec!["c"], vec!["a", "b"]]);
        let text = c.to_text();
        assert_eq!(ImpartialComplex::parse(&text).unwrap(), c);
        assert!(ImpartialComplex::parse("a (b\n").is_err());
    }

    proptest! {
        /// Random small complexes: structural predictions agree with the
        /// computed Grundy value, and grundy(c) = 0 implies an even facet.
        #[test]
        fn structure_never_contradicts_grundy(
            faces in proptest::collection::vec(
                proptest::collection::btree_set(0u32..8, 1..4),
                1..5
            )
        ) {
            let named: Vec<Vec<String>> = faces
                .iter()
                .map(|f| f.iter().map(|v| format!("p{v}")).collect())
                .collect();
            let c = ImpartialComplex::from_faces(named).unwrap();
            let mut solver = GrundySolver::new();
            let g = solver.grundy(&c);
            if let Some(p) = predict_structural(&c) {
                prop_assert_eq!(p, g);
            }
            if g == 0 {
                prop_assert!(
                    c.facets_as_names().iter().any(|f| f.len() % 2 == 0),
                    "a zero position must have an even facet"
                );
            }
        }

        /// Renaming vertices cannot change the Grundy value.
        #[test]
        fn grundy_ignores_names(
            faces in proptest::collection::vec(
                proptest::collection::btree_set(0u32..6, 1..4),
                1..4
            ),
            salt in 0u32..1000
        ) {
            let named: Vec<Vec<String>> = faces
                .iter()
                .map(|f| f.iter().map(|v| format!("p{v}")).collect())
                .collect();
            let renamed: Vec<Vec<String>> = faces
                .iter()
                .map(|f| f.iter().map(|v| format!("q{}", (v * 7 + salt) % 97)).collect())
                .collect();
            // The rename p_v → q_{(7v+salt) mod 97} is injective on 0..6.
            let a = ImpartialComplex::from_faces(named).unwrap();
            let b = ImpartialComplex::from_faces(renamed).unwrap();
            let mut solver = GrundySolver::new();
            prop_assert_eq!(solver.grundy(&a), solver.grundy(&b));
        }
    }
}
