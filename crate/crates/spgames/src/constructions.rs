//! Generators for complexes realizing specific game values: integers (at
//! minimal and non-minimal dimensions), unit fractions and dyadic
//! rationals, switches, tinies, and a catalog of dimension-≤1 complexes
//! covering every value born by day 2.
//!
//! Each generator's value claim is pinned by tests that run the evaluation
//! engine over the emitted complex.

use crate::complex::{LegalComplex, Player, Vertex};
use crate::{Error, Result};

fn left(name: String) -> Vertex {
    Vertex::new(name, Player::Left).expect("generated names are valid")
}

fn right(name: String) -> Vertex {
    Vertex::new(name, Player::Right).expect("generated names are valid")
}

/// The simplex on `m` Left and `n` Right vertices: one facet
/// `{x1..xm, y1..yn}`. Every play fills the facet, so the value is the
/// mover-advantage count `m − n`.
pub fn integer_simplex(m: usize, n: usize) -> LegalComplex {
    let mut facet = Vec::with_capacity(m + n);
    facet.extend((1..=m).map(|i| left(format!("x{i}"))));
    facet.extend((1..=n).map(|i| right(format!("y{i}"))));
    LegalComplex::from_faces(vec![facet]).expect("a single facet cannot collide")
}

/// A complex of dimension exactly `k` whose value is the integer `n`,
/// for `k ≥ n + 1`: the full simplex on `x1..x(k+1)` together with every
/// `(n+1)`-subset of the `x`'s joined with a lone Right vertex `y`.
pub fn integer_at_dimension(n: usize, k: usize) -> Result<LegalComplex> {
    if k < n + 1 {
        return Err(Error::InvalidArgument(format!(
            "need dimension k ≥ n+1 to realize {n}, got k={k}"
        )));
    }
    if k > 10 {
        return Err(Error::InvalidArgument(format!(
            "dimension {k} is beyond desk scale (max 10)"
        )));
    }
    let xs: Vec<Vertex> = (1..=k + 1).map(|i| left(format!("x{i}"))).collect();
    let mut faces = vec![xs.clone()];
    for combo in combinations(k + 1, n + 1) {
        let mut face: Vec<Vertex> = combo.iter().map(|&i| xs[i].clone()).collect();
        face.push(right("y".into()));
        faces.push(face);
    }
    LegalComplex::from_faces(faces)
}

/// All `k`-subsets of `0..n`, lexicographic.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn step(next: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in next..n {
            current.push(v);
            step(v + 1, n, k, current, out);
            current.pop();
        }
    }
    step(0, n, k, &mut current, &mut out);
    out
}

/// A complex of dimension `q` with value `1/2^q`: facet `i` (for
/// `i = 1..2^q`) is `{x_i} ∪ S_i`, where `S_i` is the subset of
/// `{y1..yq}` reading the bits of `2^q − i`, so the subsets count down
/// from the full set to the empty set.
pub fn fraction_complex(q: u32) -> Result<LegalComplex> {
    if q > 16 {
        return Err(Error::InvalidArgument(format!(
            "fraction exponent {q} is beyond desk scale (max 16)"
        )));
    }
    let count = 1u64 << q;
    let mut faces = Vec::with_capacity(count as usize);
    for i in 1..=count {
        let mut face = vec![left(format!("x{i}"))];
        let bits = count - i;
        for b in 0..q {
            if bits >> b & 1 == 1 {
                face.push(right(format!("y{}", b + 1)));
            }
        }
        faces.push(face);
    }
    LegalComplex::from_faces(faces)
}

/// A complex with value `p/2^q`, built as the join of `|p|` renamed
/// copies of [`fraction_complex`]`(q)` (label-negated when `p < 0`).
/// Requires `p/2^q` in lowest terms.
pub fn dyadic_complex(p: i64, q: u32) -> Result<LegalComplex> {
    if q > 0 && p % 2 == 0 {
        return Err(Error::InvalidArgument(format!(
            "{p}/2^{q} is not in lowest terms"
        )));
    }
    if p.unsigned_abs() > 16 {
        return Err(Error::InvalidArgument(format!(
            "numerator {p} is beyond desk scale (max 16)"
        )));
    }
    let copies = p.unsigned_abs() as usize;
    let unit = fraction_complex(q)?;
    let mut joined = LegalComplex::from_faces(vec![vec![]]).expect("empty facet");
    for t in 1..=copies {
        let copy = if copies == 1 {
            unit.clone()
        } else {
            renamed(&unit, &format!("c{t}"))
        };
        joined = joined.join(&copy)?;
    }
    Ok(if p < 0 { joined.negate_labels() } else { joined })
}

/// The same complex with `suffix` appended to every vertex name.
fn renamed(c: &LegalComplex, suffix: &str) -> LegalComplex {
    let rename = |v: &Vertex| {
        Vertex::new(format!("{}{}", v.name(), suffix), v.owner()).expect("suffix keeps names valid")
    };
    let universe: Vec<Vertex> = (0..c.vertex_count() as u32)
        .map(|i| rename(c.vertex(i)))
        .collect();
    let faces: Vec<Vec<Vertex>> = c
        .facet_index_sets()
        .iter()
        .map(|f| f.iter().map(|&i| universe[i as usize].clone()).collect())
        .collect();
    LegalComplex::new(universe, faces).expect("renaming preserves validity")
}

/// Two disjoint simplices `{x0..xa}` and `{y0..yb}`, value `{a | −b}`
/// (which is `*` when `a = b = 0`). With `connected`, the extra face
/// `{x0,y0}` bridges them (needs `a, b ≥ 1`); the bridging moves are
/// dominated, so the value is unchanged.
pub fn switch_symmetric(a: usize, b: usize, connected: bool) -> Result<LegalComplex> {
    let xs: Vec<Vertex> = (0..=a).map(|i| left(format!("x{i}"))).collect();
    let ys: Vec<Vertex> = (0..=b).map(|i| right(format!("y{i}"))).collect();
    let mut faces = vec![xs.clone(), ys.clone()];
    if connected {
        if a == 0 || b == 0 {
            return Err(Error::InvalidArgument(
                "the connected form needs a ≥ 1 and b ≥ 1, else the bridge swallows a facet"
                    .into(),
            ));
        }
        faces.push(vec![xs[0].clone(), ys[0].clone()]);
    }
    LegalComplex::from_faces(faces)
}

/// The simplex `{x1..x(a+1)}` plus the face `{x1..xb, y}`, value `{a | b}`
/// for `a > b ≥ 0`.
pub fn switch_general(a: usize, b: usize) -> Result<LegalComplex> {
    if a <= b {
        return Err(Error::InvalidArgument(format!(
            "switch needs a > b ≥ 0, got a={a}, b={b}"
        )));
    }
    let xs: Vec<Vertex> = (1..=a + 1).map(|i| left(format!("x{i}"))).collect();
    let mut short: Vec<Vertex> = xs[..b].to_vec();
    short.push(right("y".into()));
    LegalComplex::from_faces(vec![xs, short])
}

/// A complex with value `+_n = {0 | {0 | −n}}` for `n ≥ 1`: the Right
/// simplex `{y1..y(n+2)}`, the edges `{x1,yi}`, and the isolated `{x2}`.
///
/// After Right plays some `yi`, the edge partners are gone, so `x1`
/// survives alongside the `n+1` remaining `y`'s minus the one played:
/// that link is `⟨{n+1 y's}, {x1}⟩ = {0 | −n}`. One fewer `y` and the
/// whole complex drops to `+_(n−1)`.
pub fn tiny_complex(n: usize) -> Result<LegalComplex> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "tiny subscripts start at 1".into(),
        ));
    }
    let ys: Vec<Vertex> = (1..=n + 2).map(|i| right(format!("y{i}"))).collect();
    let mut faces = vec![ys.clone()];
    for y in &ys {
        faces.push(vec![left("x1".into()), y.clone()]);
    }
    faces.push(vec![left("x2".into())]);
    LegalComplex::from_faces(faces)
}

/// One catalog complex and the value expression it evaluates to
/// (parseable by [`crate::values::parse_value`]).
pub struct CatalogEntry {
    pub expected: String,
    pub complex: LegalComplex,
}

/// Dimension-≤1 complexes realizing every value born by day 2 — twelve
/// witnesses plus their label-negated twins. Together with `1` and `-1`
/// (impossible at dimension 1, witnessed at dimension 0) these exhaust
/// the day-2 values.
pub fn birthday2_catalog() -> Vec<CatalogEntry> {
    let witnesses: Vec<(&str, &str, &[&[&str]])> = vec![
        ("2", "-2", &[&["x1", "x2"]]),
        ("0", "0", &[&["x1", "y1"]]),
        ("1*", "-1*", &[&["x1", "x2"], &["x1", "y1"]]),
        ("{1|-1}", "{1|-1}", &[&["x1", "x2"], &["y1", "y2"]]),
        (
            "{1|*}",
            "{*|-1}",
            &[&["x1", "x2"], &["x2", "y1"], &["y1", "y2"], &["y2", "x3"]],
        ),
        ("{1|0}", "{0|-1}", &[&["x1", "x2"], &["y1"]]),
        ("1/2", "-1/2", &[&["x1", "y1"], &["x2"]]),
        ("*", "*", &[&["x1", "y1"], &["x2"], &["y2"]]),
        (
            "*2",
            "*2",
            &[
                &["x1", "y1"],
                &["y1", "y2"],
                &["y2", "x2"],
                &["x2", "x3"],
                &["x3", "y3"],
                &["x4"],
                &["y4"],
            ],
        ),
        (
            ".^",
            ".v",
            &[
                &["x1", "y1"],
                &["y1", "y2"],
                &["y2", "x2"],
                &["x2", "x3"],
                &["x3", "y3"],
                &["x4"],
            ],
        ),
        (
            "{1|0,*}",
            "{0,*|-1}",
            &[
                &["x1", "x2"],
                &["x2", "y1"],
                &["y1", "y2"],
                &["y2", "x3"],
                &["y3"],
            ],
        ),
        (
            ".^*",
            ".v*",
            &[
                &["x1", "y1"],
                &["x1", "x2"],
                &["x2", "y1"],
                &["y2"],
                &["x3"],
            ],
        ),
    ];
    let mut out = Vec::with_capacity(witnesses.len() * 2);
    for (expected, _, faces) in &witnesses {
        out.push(CatalogEntry {
            expected: (*expected).into(),
            complex: LegalComplex::from_names(faces).expect("catalog fixtures are valid"),
        });
    }
    for (_, negated, faces) in &witnesses {
        out.push(CatalogEntry {
            expected: (*negated).into(),
            complex: LegalComplex::from_names(faces)
                .expect("catalog fixtures are valid")
                .negate_labels(),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::EvalContext;
    use crate::values::{build_value, parse_value, recognize, Dyadic, ValueDescriptor};

    fn value_of(ctx: &mut EvalContext, c: &LegalComplex) -> crate::engine::GameId {
        ctx.value_of_complex(c)
    }

    fn expect_number(ctx: &mut EvalContext, c: &LegalComplex, num: i64, exp: u32) {
        let v = value_of(ctx, c);
        assert_eq!(
            recognize(ctx, v),
            ValueDescriptor::Number(Dyadic::new(num, exp)),
            "complex {c:?} should be worth {num}/2^{exp}"
        );
    }

    #[test]
    fn simplexes_count_mover_advantage() {
        let ctx = &mut EvalContext::new();
        let three = integer_simplex(3, 0);
        assert_eq!(three.facets_as_names(), vec![vec!["x1", "x2", "x3"]]);
        expect_number(ctx, &three, 3, 0);

        let void_move = integer_simplex(0, 0);
        assert_eq!(void_move.facet_count(), 1);
        assert_eq!(void_move.dimension(), -1);
        expect_number(ctx, &void_move, 0, 0);

        expect_number(ctx, &integer_simplex(2, 3), -1, 0);
    }

    #[test]
    fn integers_at_higher_dimension() {
        let ctx = &mut EvalContext::new();
        let zero = integer_at_dimension(0, 1).unwrap();
        assert_eq!(
            zero.facets_as_names(),
            vec![vec!["x1", "x2"], vec!["x1", "y"], vec!["x2", "y"]]
        );
        expect_number(ctx, &zero, 0, 0);

        for (n, k) in [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)] {
            let c = integer_at_dimension(n, k).unwrap();
            assert_eq!(c.dimension(), k as i32);
            expect_number(ctx, &c, n as i64, 0);
        }
        assert!(integer_at_dimension(2, 2).is_err());
        assert!(integer_at_dimension(3, 2).is_err());
    }

    #[test]
    fn fractions_halve_each_step() {
        let ctx = &mut EvalContext::new();
        let unit = fraction_complex(0).unwrap();
        assert_eq!(unit.facets_as_names(), vec![vec!["x1"]]);
        expect_number(ctx, &unit, 1, 0);

        let half = fraction_complex(1).unwrap();
        assert_eq!(
            half.facets_as_names(),
            vec![vec!["x2"], vec!["x1", "y1"]]
        );
        expect_number(ctx, &half, 1, 1);

        for q in 2..=3u32 {
            let c = fraction_complex(q).unwrap();
            assert_eq!(c.facet_count(), 1 << q);
            assert_eq!(c.dimension(), q as i32);
            expect_number(ctx, &c, 1, q);
        }
    }

    #[test]
    fn dyadics_join_unit_fractions() {
        let ctx = &mut EvalContext::new();
        let one = dyadic_complex(1, 0).unwrap();
        assert_eq!(one.facets_as_names(), vec![vec!["x1"]]);

        expect_number(ctx, &dyadic_complex(3, 1).unwrap(), 3, 1);
        expect_number(ctx, &dyadic_complex(-1, 2).unwrap(), -1, 2);
        expect_number(ctx, &dyadic_complex(0, 0).unwrap(), 0, 0);
        expect_number(ctx, &dyadic_complex(-2, 0).unwrap(), -2, 0);
        assert!(dyadic_complex(2, 1).is_err());
    }

    #[test]
    fn switches_with_symmetric_stakes() {
        let ctx = &mut EvalContext::new();
        let pm1 = switch_symmetric(1, 1, false).unwrap();
        assert_eq!(
            pm1.facets_as_names(),
            vec![vec!["x0", "x1"], vec!["y0", "y1"]]
        );
        let v = value_of(ctx, &pm1);
        assert_eq!(
            recognize(ctx, v),
            ValueDescriptor::Switch {
                left: Dyadic::integer(1),
                right: Dyadic::integer(-1)
            }
        );

        let star = value_of(ctx, &switch_symmetric(0, 0, false).unwrap());
        assert_eq!(recognize(ctx, star), ValueDescriptor::Nimber(1));

        let lopsided = value_of(ctx, &switch_symmetric(2, 1, false).unwrap());
        assert_eq!(
            recognize(ctx, lopsided),
            ValueDescriptor::Switch {
                left: Dyadic::integer(2),
                right: Dyadic::integer(-1)
            }
        );

        // Bridging the two simplices adds only dominated moves.
        for (a, b) in [(1, 1), (2, 1)] {
            let open = value_of(ctx, &switch_symmetric(a, b, false).unwrap());
            let bridged = value_of(ctx, &switch_symmetric(a, b, true).unwrap());
            assert!(ctx.equal(open, bridged));
        }
        assert!(switch_symmetric(0, 1, true).is_err());
    }

    #[test]
    fn switches_with_general_stops() {
        let ctx = &mut EvalContext::new();
        let one_zero = switch_general(1, 0).unwrap();
        assert_eq!(
            one_zero.facets_as_names(),
            vec![vec!["y"], vec!["x1", "x2"]]
        );
        let v = value_of(ctx, &one_zero);
        assert_eq!(
            recognize(ctx, v),
            ValueDescriptor::Switch {
                left: Dyadic::integer(1),
                right: Dyadic::ZERO
            }
        );

        for (a, b) in [(2, 1), (3, 1), (3, 2), (4, 2)] {
            let v = value_of(ctx, &switch_general(a, b).unwrap());
            assert_eq!(
                recognize(ctx, v),
                ValueDescriptor::Switch {
                    left: Dyadic::integer(a as i64),
                    right: Dyadic::integer(b as i64)
                },
                "switch_general({a},{b})"
            );
            // {a|b} = b + {a-b|0}: translation by the common stop.
            let shifted = {
                let base = value_of(ctx, &switch_general(a - b, 0).unwrap());
                let b_game = crate::values::make_number(ctx, Dyadic::integer(b as i64));
                ctx.add(base, b_game)
            };
            assert!(ctx.equal(v, shifted));
        }
        assert!(switch_general(1, 1).is_err());
        assert!(switch_general(0, 1).is_err());
    }

    #[test]
    fn tiny_complexes_realize_tinies() {
        let ctx = &mut EvalContext::new();
        for n in 1..=2usize {
            let c = tiny_complex(n).unwrap();
            let v = value_of(ctx, &c);
            assert_eq!(
                recognize(ctx, v),
                ValueDescriptor::Tiny {
                    translation: Dyadic::ZERO,
                    subscript: Dyadic::integer(n as i64)
                },
                "tiny_complex({n})"
            );
            let neg = value_of(ctx, &c.negate_labels());
            assert_eq!(
                recognize(ctx, neg),
                ValueDescriptor::Miny {
                    translation: Dyadic::ZERO,
                    subscript: Dyadic::integer(n as i64)
                }
            );
        }
        assert!(tiny_complex(0).is_err());
    }

    #[test]
    fn catalog_covers_day_two() {
        let ctx = &mut EvalContext::new();
        let entries = birthday2_catalog();
        assert_eq!(entries.len(), 24);
        let mut seen = std::collections::BTreeSet::new();
        for entry in &entries {
            assert!(entry.complex.dimension() <= 1);
            let got = value_of(ctx, &entry.complex);
            let expected = build_value(ctx, &parse_value(&entry.expected).unwrap()).unwrap();
            let expected = ctx.canonical_form(expected);
            assert!(
                ctx.equal(got, expected),
                "catalog entry {} evaluates to {} instead",
                entry.expected,
                ctx.to_bracket(got, false),
            );
            seen.insert(got);
        }
        // The twelve primary witnesses hit twelve distinct values; the
        // twins add four more (eight values are self-negating or paired
        // within the list: 0, *, *2, and the symmetric switch).
        assert_eq!(seen.len(), 20);
    }
}
