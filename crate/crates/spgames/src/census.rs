//! Exhaustive census of small labeled complexes and the values they
//! realize, stratified by exact dimension.
//!
//! The census enumerates every complex whose vertex universe equals the
//! union of its facets (an inactive vertex never changes a value), dedups
//! up to owner-preserving vertex relabeling, evaluates each class
//! representative, and tallies rendered values per exact dimension. Its
//! headline use is impossibility checking: e.g. no complex of dimension 1
//! is worth 1 or −1, and none of dimension 0 is worth 0.

use std::collections::{BTreeMap, HashSet};

use crate::complex::{LegalComplex, Player, Vertex};
use crate::engine::EvalContext;
use crate::values::{recognize, render_value, Notation};
use crate::{Error, Result};

/// What to enumerate: all complexes on at most `max_vertices` active
/// vertices with dimension at most `max_dimension`, evaluated on
/// `workers` threads.
#[derive(Clone, Copy, Debug)]
pub struct CensusRequest {
    pub max_vertices: usize,
    pub max_dimension: i32,
    pub workers: usize,
}

/// All iso-classes of one exact dimension: how many there are and how
/// often each rendered value occurs among them.
#[derive(Clone, Debug)]
pub struct CensusStratum {
    pub dimension: i32,
    pub class_count: usize,
    pub values: BTreeMap<String, usize>,
}

#[derive(Clone, Debug)]
pub struct CensusReport {
    pub max_vertices: usize,
    pub max_dimension: i32,
    /// Complexes enumerated before isomorphism reduction.
    pub labeled_count: usize,
    /// Strata in ascending dimension order, starting at −1.
    pub strata: Vec<CensusStratum>,
}

impl CensusReport {
    pub fn stratum(&self, dimension: i32) -> Option<&CensusStratum> {
        self.strata.iter().find(|s| s.dimension == dimension)
    }

    /// True when no class of exactly `dimension` renders to `value`.
    pub fn value_absent_at(&self, dimension: i32, value: &str) -> bool {
        self.stratum(dimension)
            .map_or(true, |s| !s.values.contains_key(value))
    }
}

/// Enumeration cost ceiling: refuse requests whose labeled count would
/// exceed this.
const LABELED_LIMIT: u64 = 500_000;

/// Antichain counts of the Boolean lattice on k points (Dedekind
/// numbers), an upper bound on face families over k active vertices.
const DEDEKIND: [u64; 6] = [2, 3, 6, 20, 168, 7581];

fn estimate_labeled(max_vertices: usize, max_dimension: i32) -> Option<u64> {
    let mut total: u64 = 2; // the two empty-universe complexes
    for k in 1..=max_vertices {
        let families: u64 = if max_dimension <= 0 {
            1
        } else if max_dimension == 1 {
            1u64.checked_shl((k * (k - 1) / 2) as u32)?
        } else {
            *DEDEKIND.get(k)?
        };
        total = total.checked_add((1u64 << k).checked_mul(families)?)?;
    }
    Some(total)
}

/// Runs the census. Refuses with [`Error::CensusBounds`] when the
/// request is estimated to enumerate more than half a million labeled
/// complexes.
pub fn run_census(request: &CensusRequest) -> Result<CensusReport> {
    if request.max_vertices > 6 {
        return Err(Error::CensusBounds(format!(
            "{} vertices: isomorphism reduction is factorial in the vertex count (max 6)",
            request.max_vertices
        )));
    }
    let estimate = estimate_labeled(request.max_vertices, request.max_dimension)
        .unwrap_or(u64::MAX);
    if estimate > LABELED_LIMIT {
        return Err(Error::CensusBounds(format!(
            "{} vertices at dimension ≤ {} means roughly {estimate} labeled complexes \
             (limit {LABELED_LIMIT})",
            request.max_vertices, request.max_dimension
        )));
    }

    let mut labeled_count = 2usize;
    let mut seen = HashSet::new();
    let mut representatives: Vec<(i32, LegalComplex)> = Vec::new();

    // The empty-universe complexes: no facets at all, and the single
    // empty facet. Same value, different complexes.
    representatives.push((-1, LegalComplex::empty()));
    representatives.push((
        -1,
        LegalComplex::from_faces(vec![vec![]]).expect("empty facet is valid"),
    ));

    let mut record = |owners: u32, facets: &[u32], k: usize| {
        labeled_count += 1;
        if seen.insert(canonical_key(owners, facets, k)) {
            representatives.push((dimension_of(facets), realize(owners, facets, k)));
        }
    };

    for k in 1..=request.max_vertices {
        let face_families = families_on(k, request.max_dimension);
        for owners in 0..1u32 << k {
            for facets in &face_families {
                record(owners, facets, k);
            }
        }
    }

    let strata = evaluate_representatives(representatives, request.workers.max(1));
    Ok(CensusReport {
        max_vertices: request.max_vertices,
        max_dimension: request.max_dimension,
        labeled_count,
        strata,
    })
}

/// All facet families on exactly `k` active vertices with dimension at
/// most `d`, as sorted lists of vertex bitmasks. A family is an
/// antichain of nonempty subsets of `0..k` whose union is everything.
fn families_on(k: usize, d: i32) -> Vec<Vec<u32>> {
    let full = (1u32 << k) - 1;
    if d <= 0 {
        // Isolated vertices only.
        return vec![(0..k).map(|i| 1u32 << i).collect()];
    }
    if d == 1 {
        // An arbitrary edge set; uncovered vertices are forced to be
        // singleton facets by maximality.
        let pairs: Vec<u32> = (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| 1u32 << i | 1u32 << j))
            .collect();
        let mut out = Vec::with_capacity(1 << pairs.len());
        for choice in 0..1u64 << pairs.len() {
            let mut facets: Vec<u32> = Vec::new();
            let mut covered = 0u32;
            for (idx, &pair) in pairs.iter().enumerate() {
                if choice >> idx & 1 == 1 {
                    facets.push(pair);
                    covered |= pair;
                }
            }
            for i in 0..k {
                if covered >> i & 1 == 0 {
                    facets.push(1u32 << i);
                }
            }
            facets.sort_unstable_by_key(|&m| sort_key(m));
            out.push(facets);
        }
        return out;
    }
    // General backtracking over candidate faces in fixed order.
    let max_size = (d + 1) as u32;
    let candidates: Vec<u32> = (1..=full)
        .filter(|m| m.count_ones() <= max_size)
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<u32> = Vec::new();
    fn step(
        next: usize,
        covered: u32,
        full: u32,
        candidates: &[u32],
        chosen: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if covered == full {
            let mut facets = chosen.clone();
            facets.sort_unstable_by_key(|&m| sort_key(m));
            out.push(facets);
        }
        for i in next..candidates.len() {
            let face = candidates[i];
            if chosen
                .iter()
                .any(|&f| f & face == f || f & face == face)
            {
                continue;
            }
            chosen.push(face);
            step(i + 1, covered | face, full, candidates, chosen, out);
            chosen.pop();
        }
    }
    step(0, 0, full, &candidates, &mut chosen, &mut out);
    out
}

/// Orders facet masks by (size, lowest members first), mirroring the
/// complex's canonical facet ordering. Reversing the bits makes the
/// lowest vertex the most significant comparison, and complementing
/// puts present-before-absent, giving lex order on sorted index lists.
fn sort_key(mask: u32) -> (u32, u32) {
    (mask.count_ones(), !mask.reverse_bits())
}

fn dimension_of(facets: &[u32]) -> i32 {
    facets
        .iter()
        .map(|m| m.count_ones() as i32 - 1)
        .max()
        .unwrap_or(-1)
}

/// Lexicographically least serialization of (owners, facets) over all
/// owner-preserving vertex relabelings — the isomorphism-class key.
fn canonical_key(owners: u32, facets: &[u32], k: usize) -> Vec<u8> {
    let mut perm: Vec<u32> = (0..k as u32).collect();
    let mut best: Option<Vec<u8>> = None;
    loop {
        let mut owners_p = 0u32;
        for (i, &target) in perm.iter().enumerate() {
            if owners >> i & 1 == 1 {
                owners_p |= 1 << target;
            }
        }
        let mut facets_p: Vec<u32> = facets
            .iter()
            .map(|&m| {
                let mut out = 0u32;
                for (i, &target) in perm.iter().enumerate() {
                    if m >> i & 1 == 1 {
                        out |= 1 << target;
                    }
                }
                out
            })
            .collect();
        facets_p.sort_unstable_by_key(|&m| sort_key(m));
        let mut bytes = Vec::with_capacity(2 + facets_p.len());
        bytes.push(k as u8);
        bytes.push(owners_p as u8);
        bytes.extend(facets_p.iter().map(|&m| m as u8));
        if best.as_ref().is_none_or(|b| bytes < *b) {
            best = Some(bytes);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.expect("at least the identity permutation ran")
}

/// Advances `perm` to its lexicographic successor; false when wrapped.
fn next_permutation(perm: &mut [u32]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        perm.sort_unstable();
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Builds the complex a (owners, facets) pair describes. Left vertices
/// are named `x<i+1>`, Right ones `y<i+1>`.
fn realize(owners: u32, facets: &[u32], k: usize) -> LegalComplex {
    let vertex = |i: usize| {
        if owners >> i & 1 == 1 {
            Vertex::new(format!("y{}", i + 1), Player::Right)
        } else {
            Vertex::new(format!("x{}", i + 1), Player::Left)
        }
        .expect("census names are valid")
    };
    let faces: Vec<Vec<Vertex>> = facets
        .iter()
        .map(|&m| (0..k).filter(|&i| m >> i & 1 == 1).map(vertex).collect())
        .collect();
    LegalComplex::from_faces(faces).expect("census families are valid")
}

fn evaluate_representatives(
    representatives: Vec<(i32, LegalComplex)>,
    workers: usize,
) -> Vec<CensusStratum> {
    let mut tallies: BTreeMap<i32, (usize, BTreeMap<String, usize>)> = BTreeMap::new();
    let chunks: Vec<Vec<(i32, LegalComplex)>> = {
        let mut cs: Vec<Vec<(i32, LegalComplex)>> = (0..workers).map(|_| Vec::new()).collect();
        for (idx, item) in representatives.into_iter().enumerate() {
            cs[idx % workers].push(item);
        }
        cs
    };
    let results: Vec<Vec<(i32, String)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .iter()
            .map(|chunk| {
                scope.spawn(move || {
                    let mut ctx = EvalContext::new();
                    chunk
                        .iter()
                        .map(|(dim, complex)| {
                            let value = ctx.value_of_complex(complex);
                            let descriptor = recognize(&mut ctx, value);
                            (*dim, render_value(&descriptor, Notation::Ascii))
                        })
                        .collect()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("census worker")).collect()
    });
    for (dim, value) in results.into_iter().flatten() {
        let entry = tallies.entry(dim).or_default();
        entry.0 += 1;
        *entry.1.entry(value).or_default() += 1;
    }
    tallies
        .into_iter()
        .map(|(dimension, (class_count, values))| CensusStratum {
            dimension,
            class_count,
            values,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_censuses_have_known_strata() {
        let report = run_census(&CensusRequest {
            max_vertices: 1,
            max_dimension: 0,
            workers: 1,
        })
        .unwrap();
        // Two empty-universe complexes plus x1 and y1.
        assert_eq!(report.labeled_count, 4);
        let dim0 = report.stratum(0).unwrap();
        assert_eq!(dim0.class_count, 2);
        assert_eq!(dim0.values.get("1"), Some(&1));
        assert_eq!(dim0.values.get("-1"), Some(&1));
        assert!(report.value_absent_at(0, "0"));

        let report = run_census(&CensusRequest {
            max_vertices: 2,
            max_dimension: 1,
            workers: 2,
        })
        .unwrap();
        // Exact-dimension-1 classes on ≤ 2 vertices: the three labelings
        // of a single edge up to swapping the endpoints.
        let dim1 = report.stratum(1).unwrap();
        assert_eq!(dim1.class_count, 3);
        assert_eq!(dim1.values.get("2"), Some(&1));
        assert_eq!(dim1.values.get("-2"), Some(&1));
        assert_eq!(dim1.values.get("0"), Some(&1));
        // Dimension 0 on ≤ 2 vertices: x, y, xx, xy, yy — five classes,
        // with the all-Left singleton and pair both worth 1.
        let dim0 = report.stratum(0).unwrap();
        assert_eq!(dim0.class_count, 5);
        assert_eq!(dim0.values.get("*"), Some(&1));
        assert_eq!(dim0.values.get("1"), Some(&2));
    }

    #[test]
    fn isomorphism_reduction_collapses_relabelings() {
        // On 3 vertices at dimension ≤ 1 there are 2^3 × 2^3 = 64
        // labeled complexes; classes are far fewer, and every value seen
        // in the labeled sweep survives in some class.
        let report = run_census(&CensusRequest {
            max_vertices: 3,
            max_dimension: 1,
            workers: 1,
        })
        .unwrap();
        assert_eq!(report.labeled_count, 2 + 2 + 8 + 64);
        let classes: usize = report.strata.iter().map(|s| s.class_count).sum();
        assert!(classes < report.labeled_count);
        // Path x1-y1 plus isolated x2 realizes 1/2 (and its negation).
        let dim1 = report.stratum(1).unwrap();
        assert_eq!(dim1.values.get("1/2"), Some(&1));
        assert_eq!(dim1.values.get("-1/2"), Some(&1));
    }

    #[test]
    fn dimension_strata_respect_impossibility() {
        let report = run_census(&CensusRequest {
            max_vertices: 4,
            max_dimension: 1,
            workers: 4,
        })
        .unwrap();
        assert!(report.value_absent_at(1, "1"));
        assert!(report.value_absent_at(1, "-1"));
        assert!(report.value_absent_at(0, "0"));
        // Dimension 0 realizes only 1, −1, and *.
        let dim0 = report.stratum(0).unwrap();
        let keys: Vec<&str> = dim0.values.keys().map(String::as_str).collect();
        assert_eq!(keys, vec!["*", "-1", "1"]);
    }

    #[test]
    fn higher_dimension_families_are_antichains() {
        let families = families_on(3, 2);
        // Every family covers all vertices and no facet contains another.
        for family in &families {
            let mut covered = 0u32;
            for (i, &a) in family.iter().enumerate() {
                covered |= a;
                for &b in &family[i + 1..] {
                    assert!(a & b != a || a == b);
                    assert!(a & b != b || a == b);
                }
            }
            assert_eq!(covered, 0b111);
        }
        // The full triangle is one of them.
        assert!(families.contains(&vec![0b111]));
        // Three singletons is another.
        assert!(families.contains(&vec![0b001, 0b010, 0b100]));
        // Sanity: strictly more families than the dimension-≤1 sweep.
        assert!(families.len() > families_on(3, 1).len());
    }

    #[test]
    fn oversized_requests_are_refused() {
        let err = run_census(&CensusRequest {
            max_vertices: 6,
            max_dimension: 1,
            workers: 1,
        })
        .unwrap_err();
        match err {
            Error::CensusBounds(msg) => assert!(msg.contains("limit")),
            other => panic!("expected CensusBounds, got {other:?}"),
        }
    }
}
