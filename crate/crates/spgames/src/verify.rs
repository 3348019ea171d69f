//! The built-in regression suite: every headline claim the library makes,
//! checked end to end. The CLI's `verify-paper` command prints the result
//! table; the acceptance test target asserts every row passes.
//!
//! Checks are grouped into eleven numbered criteria (fixtures, witness
//! constructions, the impossibility census, ruleset regressions, seeded
//! property sweeps, SP-tree recognition, and the Col value property).
//! Each criterion is independent and builds its own evaluation context,
//! so single criteria can run in isolation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::census::{run_census, CensusRequest};
use crate::complex::{LegalComplex, Player, Vertex};
use crate::constructions::{
    birthday2_catalog, dyadic_complex, fraction_complex, integer_at_dimension, integer_simplex,
    switch_general, switch_symmetric, tiny_complex,
};
use crate::engine::{EvalContext, GameId, Outcome};
use crate::impartial::{grundy_value_crosscheck, predict_structural, GrundySolver, ImpartialComplex};
use crate::rulesets::{col_complex, domineering_complex, nim_pile_complex, snort_complex, Board};
use crate::values::{
    build_value, make_nimber, make_number, make_switch, make_tiny, make_up_star, parse_value,
    recognize, Dyadic, ValueDescriptor,
};

/// One verified claim: what was expected, what the code produced, and
/// whether they agree.
#[derive(Clone, Debug)]
pub struct Check {
    pub criterion: usize,
    pub name: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl Check {
    fn compare(
        criterion: usize,
        name: impl Into<String>,
        expected: impl Into<String>,
        got: impl Into<String>,
    ) -> Check {
        let expected = expected.into();
        let got = got.into();
        Check {
            criterion,
            name: name.into(),
            pass: expected == got,
            expected,
            got,
        }
    }

    /// Aggregates a sweep of same-shaped cases into one row.
    fn tally(criterion: usize, name: impl Into<String>, total: usize, failures: Vec<String>) -> Check {
        let expected = format!("{total}/{total} hold");
        let got = if failures.is_empty() {
            expected.clone()
        } else {
            format!(
                "{}/{} hold; e.g. {}",
                total - failures.len(),
                total,
                failures
                    .iter()
                    .take(3)
                    .cloned()
                    .collect::<Vec<_>>()
                    .join("; ")
            )
        };
        Check {
            criterion,
            name: name.into(),
            pass: failures.is_empty(),
            expected,
            got,
        }
    }
}

pub const CRITERION_COUNT: usize = 11;

pub fn criterion_title(n: usize) -> &'static str {
    match n {
        1 => "snort path-3 facets",
        2 => "day-2 value catalog",
        3 => "integer constructions",
        4 => "fraction and dyadic constructions",
        5 => "switch and tiny constructions",
        6 => "nim piles and grundy crosscheck",
        7 => "impossibility census",
        8 => "domineering regression",
        9 => "algebraic property sweeps",
        10 => "sp-tree recognition",
        11 => "col values on paths",
        _ => "unknown criterion",
    }
}

/// Runs one numbered criterion (1–11); unknown numbers yield no checks.
pub fn run_criterion(n: usize) -> Vec<Check> {
    match n {
        1 => criterion_snort_fixture(),
        2 => criterion_catalog(),
        3 => criterion_integers(),
        4 => criterion_fractions(),
        5 => criterion_switches_and_tinies(),
        6 => criterion_nim(),
        7 => criterion_census(),
        8 => criterion_domineering(),
        9 => criterion_properties(),
        10 => criterion_sp_tree(),
        11 => criterion_col(),
        _ => Vec::new(),
    }
}

pub fn run_all() -> Vec<Check> {
    (1..=CRITERION_COUNT).flat_map(run_criterion).collect()
}

/// Renders checks as an aligned claim / expected / got / status table.
pub fn format_table(checks: &[Check]) -> String {
    let width = |f: fn(&Check) -> usize, floor: usize| {
        checks.iter().map(f).max().unwrap_or(floor).max(floor)
    };
    let name_width = width(|c| c.name.len(), 5);
    let exp_width = width(|c| c.expected.len(), 8);
    let got_width = width(|c| c.got.len(), 3);
    let mut out = String::new();
    for check in checks {
        out.push_str(&format!(
            "{:>2}  {:<name_width$}  {:<exp_width$}  {:<got_width$}  {}\n",
            check.criterion,
            check.name,
            check.expected,
            check.got,
            if check.pass { "ok" } else { "FAIL" },
        ));
    }
    out
}

fn facet_string(c: &LegalComplex) -> String {
    let facets: Vec<String> = c
        .facets_as_names()
        .iter()
        .map(|f| format!("{{{}}}", f.join(",")))
        .collect();
    facets.join(" ")
}

fn criterion_snort_fixture() -> Vec<Check> {
    let c = snort_complex(&Board::path(3));
    vec![Check::compare(
        1,
        "snort(path:3) facets",
        "{x1,y3} {x3,y1} {x1,x3,y2} {x2,y1,y3}",
        facet_string(&c),
    )]
}

fn criterion_catalog() -> Vec<Check> {
    let ctx = &mut EvalContext::new();
    let entries = birthday2_catalog();
    let mut primary_failures = Vec::new();
    let mut twin_failures = Vec::new();
    for (idx, entry) in entries.iter().enumerate() {
        let got = ctx.value_of_complex(&entry.complex);
        let expected = parse_value(&entry.expected)
            .and_then(|expr| build_value(ctx, &expr))
            .expect("catalog expectations parse");
        let expected = ctx.canonical_form(expected);
        if got != expected {
            let msg = format!(
                "{} evaluated to {}",
                entry.expected,
                ctx.to_bracket(got, false)
            );
            if idx < entries.len() / 2 {
                primary_failures.push(msg);
            } else {
                twin_failures.push(msg);
            }
        }
    }
    let half = entries.len() / 2;
    vec![
        Check::tally(2, "twelve day-2 witnesses", half, primary_failures),
        Check::tally(2, "label-negated twins", half, twin_failures),
    ]
}

fn criterion_integers() -> Vec<Check> {
    let ctx = &mut EvalContext::new();
    let mut simplex_failures = Vec::new();
    let mut simplex_total = 0;
    for m in 0..=4usize {
        for n in 0..=4usize {
            simplex_total += 1;
            let v = ctx.value_of_complex(&integer_simplex(m, n));
            let expected = make_number(ctx, Dyadic::integer(m as i64 - n as i64));
            if v != expected {
                simplex_failures.push(format!(
                    "simplex({m},{n}) = {}",
                    ctx.to_bracket(v, false)
                ));
            }
        }
    }
    let mut dim_failures = Vec::new();
    let mut dim_total = 0;
    for n in 0..=3usize {
        for k in n + 1..=5 {
            dim_total += 1;
            let c = integer_at_dimension(n, k).expect("parameters in range");
            if c.dimension() != k as i32 {
                dim_failures.push(format!("({n},{k}) has dimension {}", c.dimension()));
                continue;
            }
            let v = ctx.value_of_complex(&c);
            let expected = make_number(ctx, Dyadic::integer(n as i64));
            if v != expected {
                dim_failures.push(format!("({n},{k}) = {}", ctx.to_bracket(v, false)));
            }
        }
    }
    vec![
        Check::tally(3, "integer_simplex(m,n) = m-n, m,n <= 4", simplex_total, simplex_failures),
        Check::tally(
            3,
            "integer_at_dimension(n,k) = n at dim k",
            dim_total,
            dim_failures,
        ),
    ]
}

fn criterion_fractions() -> Vec<Check> {
    let ctx = &mut EvalContext::new();
    let mut fraction_failures = Vec::new();
    for q in 0..=5u32 {
        let v = ctx.value_of_complex(&fraction_complex(q).expect("q in range"));
        let expected = make_number(ctx, Dyadic::new(1, q));
        if v != expected {
            fraction_failures.push(format!("fraction({q}) = {}", ctx.to_bracket(v, false)));
        }
    }
    let mut dyadic_failures = Vec::new();
    let mut dyadic_total = 0;
    for q in 0..=3u32 {
        for p in -5i64..=5 {
            if q > 0 && p % 2 == 0 {
                continue;
            }
            dyadic_total += 1;
            let v = ctx.value_of_complex(&dyadic_complex(p, q).expect("lowest terms"));
            let expected = make_number(ctx, Dyadic::new(p, q));
            if v != expected {
                dyadic_failures.push(format!("dyadic({p},{q}) = {}", ctx.to_bracket(v, false)));
            }
        }
    }
    vec![
        Check::tally(4, "fraction_complex(q) = 1/2^q, q <= 5", 6, fraction_failures),
        Check::tally(
            4,
            "dyadic_complex(p,q) = p/2^q, |p| <= 5, q <= 3",
            dyadic_total,
            dyadic_failures,
        ),
    ]
}

fn criterion_switches_and_tinies() -> Vec<Check> {
    let ctx = &mut EvalContext::new();
    let mut sym_failures = Vec::new();
    for a in 0..=4i64 {
        for b in 0..=4i64 {
            let c = switch_symmetric(a as usize, b as usize, false).expect("plain form");
            let v = ctx.value_of_complex(&c);
            let expected = if a == 0 && b == 0 {
                make_nimber(ctx, 1)
            } else {
                make_switch(ctx, Dyadic::integer(a), Dyadic::integer(-b)).expect("a > -b")
            };
            if v != expected {
                sym_failures.push(format!("sym({a},{b}) = {}", ctx.to_bracket(v, false)));
            }
        }
    }
    let mut gen_failures = Vec::new();
    let mut gen_total = 0;
    for a in 1..=4i64 {
        for b in 0..a {
            gen_total += 1;
            let c = switch_general(a as usize, b as usize).expect("a > b");
            let v = ctx.value_of_complex(&c);
            let expected =
                make_switch(ctx, Dyadic::integer(a), Dyadic::integer(b)).expect("a > b");
            if v != expected {
                gen_failures.push(format!("gen({a},{b}) = {}", ctx.to_bracket(v, false)));
            }
        }
    }
    let mut tiny_failures = Vec::new();
    for n in 1..=4i64 {
        let c = tiny_complex(n as usize).expect("n >= 1");
        let v = ctx.value_of_complex(&c);
        let expected = make_tiny(ctx, Dyadic::integer(n)).expect("n > 0");
        if v != expected {
            tiny_failures.push(format!("tiny({n}) = {}", ctx.to_bracket(v, false)));
        }
    }
    vec![
        Check::tally(5, "switch_symmetric(a,b) = {a|-b}, a,b <= 4", 25, sym_failures),
        Check::tally(5, "switch_general(a,b) = {a|b}, 4 >= a > b >= 0", gen_total, gen_failures),
        Check::tally(5, "tiny_complex(n) = +_n, n <= 4", 4, tiny_failures),
    ]
}

fn criterion_nim() -> Vec<Check> {
    let mut solver = GrundySolver::new();
    let mut grundy_failures = Vec::new();
    for n in 1..=5usize {
        let c = nim_pile_complex(n).expect("n in range");
        let g = solver.grundy(&c);
        if g != n as u32 {
            grundy_failures.push(format!("pile {n} has grundy {g}"));
        }
    }
    let ctx = &mut EvalContext::new();
    let mut cross_failures = Vec::new();
    for n in 1..=4usize {
        let c = nim_pile_complex(n).expect("n in range");
        if !grundy_value_crosscheck(ctx, &c) {
            cross_failures.push(format!("pile {n} fails the partizan crosscheck"));
        }
    }
    vec![
        Check::tally(6, "grundy(nim pile n) = n, n <= 5", 5, grundy_failures),
        Check::tally(6, "doubled-partizan crosscheck, n <= 4", 4, cross_failures),
    ]
}

fn criterion_census() -> Vec<Check> {
    let report = run_census(&CensusRequest {
        max_vertices: 5,
        max_dimension: 1,
        workers: 4,
    });
    let report = match report {
        Ok(r) => r,
        Err(e) => {
            return vec![Check::compare(7, "census ran", "ok", format!("error: {e}"))];
        }
    };
    let presence = |dim: i32, value: &str| -> String {
        match report.stratum(dim).and_then(|s| s.values.get(value)) {
            None => "absent".into(),
            Some(count) => format!("present in {count} classes"),
        }
    };
    vec![
        Check::compare(7, "value 1 at dimension 1", "absent", presence(1, "1")),
        Check::compare(7, "value -1 at dimension 1", "absent", presence(1, "-1")),
        Check::compare(7, "value 0 at dimension 0", "absent", presence(0, "0")),
    ]
}

fn board_value(
    ctx: &mut EvalContext,
    checks: &mut Vec<Check>,
    name: &str,
    board: Board,
    expected: &str,
) -> GameId {
    let c = domineering_complex(&board).expect("grid boards");
    let v = ctx.value_of_complex(&c);
    checks.push(Check::compare(8, name, expected, ctx.to_bracket(v, true)));
    v
}

fn criterion_domineering() -> Vec<Check> {
    let ctx = &mut EvalContext::new();
    let mut checks = Vec::new();
    board_value(ctx, &mut checks, "domineering 1x1", Board::grid(1, 1, &[]).unwrap(), "0");
    board_value(ctx, &mut checks, "domineering 2x1", Board::grid(2, 1, &[]).unwrap(), "1");
    board_value(ctx, &mut checks, "domineering 2x2", Board::grid(2, 2, &[]).unwrap(), "{1|-1}");
    let ell = board_value(
        ctx,
        &mut checks,
        "domineering L-board",
        Board::grid(3, 2, &[(1, 2), (2, 2)]).unwrap(),
        "1/2",
    );
    checks.push(Check::compare(
        8,
        "L-board canonical options",
        "{0|1}",
        ctx.to_bracket_expanded(ell),
    ));
    let plus = board_value(
        ctx,
        &mut checks,
        "domineering offset plus",
        Board::grid(4, 3, &[(1, 1), (1, 3), (2, 1), (3, 3), (4, 1), (4, 3)]).unwrap(),
        "{0|*}",
    );
    let up = make_up_star(ctx, 1, 0);
    checks.push(Check::compare(
        8,
        "offset plus is up",
        "equal",
        if plus == up { "equal" } else { "different" },
    ));
    let wide = domineering_complex(&Board::grid(2, 5, &[]).unwrap()).expect("grid");
    let raw = ctx.game_from_complex(&wide);
    let value = ctx.canonical_form(raw);
    checks.push(Check::compare(
        8,
        "domineering 2x5 value",
        "1/2",
        ctx.to_bracket(value, true),
    ));
    checks.push(Check::compare(
        8,
        "domineering 2x5 birthdays",
        "formal 5, value 2",
        format!(
            "formal {}, value {}",
            ctx.formal_birthday(raw),
            ctx.birthday(value)
        ),
    ));
    checks
}

fn random_game(ctx: &mut EvalContext, rng: &mut ChaCha8Rng, depth: u32) -> GameId {
    if depth == 0 || rng.gen_range(0..4) == 0 {
        match rng.gen_range(0..5) {
            0 => ctx.zero(),
            1 => {
                let num = rng.gen_range(-6..=6);
                let exp = rng.gen_range(0..=2);
                make_number(ctx, Dyadic::new(num, exp))
            }
            2 => make_nimber(ctx, rng.gen_range(0..=3)),
            3 => make_up_star(ctx, rng.gen_range(-2..=2), rng.gen_range(0..=1)),
            _ => {
                let a = Dyadic::integer(rng.gen_range(0..=2));
                let b = Dyadic::integer(rng.gen_range(-2..=-1));
                make_switch(ctx, a, b).expect("a > b")
            }
        }
    } else {
        let left = (0..rng.gen_range(0..=2))
            .map(|_| random_game(ctx, rng, depth - 1))
            .collect();
        let right = (0..rng.gen_range(0..=2))
            .map(|_| random_game(ctx, rng, depth - 1))
            .collect();
        ctx.intern(left, right)
    }
}

fn random_complex(rng: &mut ChaCha8Rng, suffix: &str) -> LegalComplex {
    let k = rng.gen_range(0..=5usize);
    let vertices: Vec<Vertex> = (0..k)
        .map(|i| {
            if rng.gen::<bool>() {
                Vertex::new(format!("x{}{}", i + 1, suffix), Player::Left)
            } else {
                Vertex::new(format!("y{}{}", i + 1, suffix), Player::Right)
            }
            .expect("generated names are valid")
        })
        .collect();
    // Always at least one face: a playable game's position set contains
    // the empty position, and the join/sum law needs that.
    let faces: Vec<Vec<Vertex>> = (0..rng.gen_range(1..=6))
        .map(|_| {
            let mask = rng.gen_range(0..1u32 << k);
            (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| vertices[i].clone())
                .collect()
        })
        .collect();
    LegalComplex::from_faces(faces).expect("one owner per name")
}

fn random_impartial(rng: &mut ChaCha8Rng) -> ImpartialComplex {
    let k = rng.gen_range(0..=5usize);
    let faces: Vec<Vec<String>> = (0..rng.gen_range(0..=6))
        .map(|_| {
            let mask = rng.gen_range(0..1u32 << k);
            (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| format!("v{}", i + 1))
                .collect()
        })
        .collect();
    ImpartialComplex::from_faces(faces).expect("plain names are valid")
}

const SWEEP_CASES: usize = 220;

fn criterion_properties() -> Vec<Check> {
    let mut checks = Vec::new();

    // Sums with the negation vanish.
    let ctx = &mut EvalContext::new();
    let rng = &mut ChaCha8Rng::seed_from_u64(101);
    let mut failures = Vec::new();
    for i in 0..SWEEP_CASES {
        let g = random_game(ctx, rng, 3);
        let neg = ctx.negate(g);
        let sum = ctx.add(g, neg);
        if ctx.outcome(sum) != Outcome::Second {
            failures.push(format!(
                "case {i}: G + (-G) is {}",
                ctx.outcome(sum).letter()
            ));
        }
    }
    checks.push(Check::tally(9, "G + (-G) = 0", SWEEP_CASES, failures));

    // Canonicalization is idempotent and value-preserving.
    let rng = &mut ChaCha8Rng::seed_from_u64(102);
    let mut failures = Vec::new();
    for i in 0..SWEEP_CASES {
        let g = random_game(ctx, rng, 3);
        let canon = ctx.canonical_form(g);
        if !ctx.equal(g, canon) {
            failures.push(format!("case {i}: canonical form changed the value"));
        } else if ctx.canonical_form(canon) != canon {
            failures.push(format!("case {i}: canonical form is not a fixpoint"));
        }
    }
    checks.push(Check::tally(
        9,
        "canonical_form idempotent, value-preserving",
        SWEEP_CASES,
        failures,
    ));

    // Order agrees with difference-game outcomes.
    let rng = &mut ChaCha8Rng::seed_from_u64(103);
    let mut failures = Vec::new();
    for i in 0..SWEEP_CASES {
        let g = random_game(ctx, rng, 2);
        let h = random_game(ctx, rng, 2);
        if ctx.leq(g, h) != ctx.leq_by_difference(g, h) {
            failures.push(format!("case {i}: leq disagrees with the difference game"));
        }
    }
    checks.push(Check::tally(
        9,
        "leq matches difference-game outcome",
        SWEEP_CASES,
        failures,
    ));

    // The join of complexes has the value of the sum of their games.
    let rng = &mut ChaCha8Rng::seed_from_u64(104);
    let mut failures = Vec::new();
    for i in 0..SWEEP_CASES {
        let a = random_complex(rng, "");
        let b = random_complex(rng, "b");
        let joined = a.join(&b).expect("names are disjoint");
        let va = ctx.value_of_complex(&a);
        let vb = ctx.value_of_complex(&b);
        let sum = ctx.add(va, vb);
        let sum = ctx.canonical_form(sum);
        let vj = ctx.value_of_complex(&joined);
        if vj != sum {
            failures.push(format!(
                "case {i}: join gives {}, sum gives {}",
                ctx.to_bracket(vj, false),
                ctx.to_bracket(sum, false)
            ));
        }
    }
    checks.push(Check::tally(9, "value(join) = value(sum)", SWEEP_CASES, failures));

    // The literal game tree is exactly one level taller than the complex.
    let rng = &mut ChaCha8Rng::seed_from_u64(105);
    let mut failures = Vec::new();
    for i in 0..SWEEP_CASES {
        let c = random_complex(rng, "");
        let g = ctx.game_from_complex(&c);
        let expected = (c.dimension() + 1) as u32;
        if ctx.formal_birthday(g) != expected {
            failures.push(format!(
                "case {i}: formal birthday {} at dimension {}",
                ctx.formal_birthday(g),
                c.dimension()
            ));
        }
    }
    checks.push(Check::tally(
        9,
        "formal_birthday = dimension + 1",
        SWEEP_CASES,
        failures,
    ));

    // Structural shortcut predictions agree with grundy values.
    let rng = &mut ChaCha8Rng::seed_from_u64(106);
    let mut solver = GrundySolver::new();
    let mut failures = Vec::new();
    let mut predicted = 0usize;
    for i in 0..SWEEP_CASES {
        let c = random_impartial(rng);
        if let Some(p) = predict_structural(&c) {
            predicted += 1;
            let g = solver.grundy(&c);
            if p != g {
                failures.push(format!("case {i}: predicted {p}, grundy {g}"));
            }
        }
    }
    checks.push(Check::tally(
        9,
        format!("structural prediction = grundy ({predicted} predicted)"),
        SWEEP_CASES,
        failures,
    ));

    // Nimber addition is XOR.
    let rng = &mut ChaCha8Rng::seed_from_u64(107);
    let mut failures = Vec::new();
    let mut total = 0;
    let xor_case = |ctx: &mut EvalContext, m: u32, n: u32, failures: &mut Vec<String>| {
        let gm = make_nimber(ctx, m);
        let gn = make_nimber(ctx, n);
        let sum = ctx.add(gm, gn);
        let sum = ctx.canonical_form(sum);
        if sum != make_nimber(ctx, m ^ n) {
            failures.push(format!("*{m} + *{n} is not *{}", m ^ n));
        }
    };
    for m in 0..=6 {
        for n in 0..=6 {
            total += 1;
            xor_case(ctx, m, n, &mut failures);
        }
    }
    for _ in 0..200 {
        total += 1;
        let m = rng.gen_range(0..=6);
        let n = rng.gen_range(0..=6);
        xor_case(ctx, m, n, &mut failures);
    }
    // A complex-level spot check: joined nim piles, grundy 3 xor 5 = 6.
    total += 1;
    let three = nim_pile_complex(3).expect("in range");
    let five = nim_pile_complex(5).expect("in range");
    let renamed: Vec<Vec<String>> = five
        .facets_as_names()
        .iter()
        .map(|f| f.iter().map(|n| format!("{n}b")).collect())
        .collect();
    let five = ImpartialComplex::from_faces(renamed).expect("renamed names are valid");
    let joined = three.join(&five).expect("names are disjoint");
    if solver.grundy(&joined) != 6 {
        failures.push(format!(
            "join of piles 3 and 5 has grundy {}",
            solver.grundy(&joined)
        ));
    }
    checks.push(Check::tally(9, "nimber addition is xor, m,n <= 6", total, failures));

    checks
}

fn criterion_sp_tree() -> Vec<Check> {
    let ctx = &mut EvalContext::new();
    let neg_half = make_number(ctx, Dyadic::new(-1, 1));
    let mut checks = vec![Check::compare(
        10,
        "canonical -1/2 is not an sp tree",
        "rejected",
        if ctx.sp_tree_check(neg_half) {
            "accepted"
        } else {
            "rejected"
        },
    )];
    let mut corpus: Vec<LegalComplex> = Vec::new();
    corpus.extend(birthday2_catalog().into_iter().map(|e| e.complex));
    for n in 0..=3 {
        corpus.push(snort_complex(&Board::path(n)));
        corpus.push(col_complex(&Board::path(n)));
    }
    corpus.push(domineering_complex(&Board::grid(2, 2, &[]).unwrap()).unwrap());
    corpus.push(domineering_complex(&Board::grid(3, 2, &[(1, 2), (2, 2)]).unwrap()).unwrap());
    for q in 0..=2 {
        corpus.push(fraction_complex(q).unwrap());
    }
    corpus.push(dyadic_complex(3, 1).unwrap());
    corpus.push(integer_simplex(2, 1));
    corpus.push(integer_at_dimension(1, 2).unwrap());
    corpus.push(switch_symmetric(1, 1, false).unwrap());
    corpus.push(switch_general(2, 1).unwrap());
    corpus.push(tiny_complex(1).unwrap());
    for n in 1..=3 {
        corpus.push(nim_pile_complex(n).unwrap().doubled_partizan());
    }
    let total = corpus.len();
    let mut failures = Vec::new();
    for (i, c) in corpus.iter().enumerate() {
        let g = ctx.game_from_complex(c);
        if !ctx.sp_tree_check(g) {
            failures.push(format!("corpus complex {i} rejected"));
        }
    }
    checks.push(Check::tally(10, "complex games pass the sp-tree check", total, failures));
    checks
}

fn criterion_col() -> Vec<Check> {
    let ctx = &mut EvalContext::new();
    let mut failures = Vec::new();
    for n in 1..=5usize {
        let c = col_complex(&Board::path(n));
        let v = ctx.value_of_complex(&c);
        let ok = match recognize(ctx, v) {
            ValueDescriptor::Number(_) => true,
            ValueDescriptor::Nimber(s) => s == 1,
            ValueDescriptor::NumberUpStar { ups, star, .. } => ups == 0 && star == 1,
            _ => false,
        };
        if !ok {
            failures.push(format!("path {n} is {}", ctx.to_bracket(v, false)));
        }
    }
    vec![Check::tally(
        11,
        "col on paths 1..5 is a number or number+*",
        5,
        failures,
    )]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_criterion_passes() {
        for n in 1..=CRITERION_COUNT {
            let checks = run_criterion(n);
            assert!(!checks.is_empty(), "criterion {n} produced no checks");
            for check in &checks {
                assert!(
                    check.pass,
                    "criterion {n} ({}) failed: {} expected {}, got {}",
                    criterion_title(n),
                    check.name,
                    check.expected,
                    check.got
                );
            }
        }
    }

    #[test]
    fn table_rendering_marks_failures() {
        let checks = vec![
            Check::compare(1, "a", "x", "x"),
            Check::compare(2, "b", "x", "y"),
        ];
        let table = format_table(&checks);
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].ends_with("ok"));
        assert!(lines[1].ends_with("FAIL"));
        assert!(lines[1].contains('y'));
    }
}
