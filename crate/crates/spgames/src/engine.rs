//! Hash-consed game forms and the canonical-form engine.
//!
//! Every literal game form is stored once in an arena and addressed by a
//! `GameId`; identical forms share an id, so literal equality is id
//! equality. All operations are memoized on ids. Canonicalization is an
//! explicit, separate step: `game_from_complex` keeps the literal game tree
//! a board produces (needed for formal birthdays and the option-commutation
//! check), while `value_of_complex` goes straight to canonical values and
//! may split a position into independent components first.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::complex::{LegalComplex, Link, Player};
use crate::values::Dyadic;

/// Handle to an interned game form.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GameId(u32);

/// Who wins under optimal play: `Left` or `Right` regardless of turn,
/// `First` the player to move, `Second` the player moved against.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Outcome {
    Left,
    Right,
    First,
    Second,
}

impl Outcome {
    /// The conventional one-letter name: L, R, N, or P.
    pub fn letter(self) -> char {
        match self {
            Outcome::Left => 'L',
            Outcome::Right => 'R',
            Outcome::First => 'N',
            Outcome::Second => 'P',
        }
    }

    fn rank_for_left(self) -> u8 {
        match self {
            Outcome::Right => 0,
            Outcome::First | Outcome::Second => 1,
            Outcome::Left => 2,
        }
    }
}

impl PartialOrd for Outcome {
    /// The outcome lattice order: R below everything, L above everything,
    /// N and P incomparable.
    fn partial_cmp(&self, other: &Outcome) -> Option<Ordering> {
        if self == other {
            return Some(Ordering::Equal);
        }
        let (a, b) = (self.rank_for_left(), other.rank_for_left());
        if a == b {
            None // N vs P
        } else {
            Some(a.cmp(&b))
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

struct Node {
    left: Box<[GameId]>,
    right: Box<[GameId]>,
    height: u32,
}

/// Arena plus memo tables. All game operations go through one context;
/// ids from different contexts must not be mixed.
pub struct EvalContext {
    nodes: Vec<Node>,
    intern: HashMap<(Box<[GameId]>, Box<[GameId]>), GameId>,
    outcome_memo: HashMap<GameId, Outcome>,
    leq_memo: HashMap<(GameId, GameId), bool>,
    negate_memo: HashMap<GameId, GameId>,
    add_memo: HashMap<(GameId, GameId), GameId>,
    canonical_memo: HashMap<GameId, GameId>,
    sp_memo: HashMap<GameId, bool>,
    game_memo: HashMap<LegalComplex, GameId>,
    value_memo: HashMap<LegalComplex, GameId>,
    zero: GameId,
}

impl EvalContext {
    pub fn new() -> EvalContext {
        let mut ctx = EvalContext {
            nodes: Vec::new(),
            intern: HashMap::new(),
            outcome_memo: HashMap::new(),
            leq_memo: HashMap::new(),
            negate_memo: HashMap::new(),
            add_memo: HashMap::new(),
            canonical_memo: HashMap::new(),
            sp_memo: HashMap::new(),
            game_memo: HashMap::new(),
            value_memo: HashMap::new(),
            zero: GameId(0),
        };
        ctx.zero = ctx.intern(Vec::new(), Vec::new());
        ctx
    }

    /// The game with no options.
    pub fn zero(&self) -> GameId {
        self.zero
    }

    /// Interns a game form; options are sorted and deduplicated.
    pub fn intern(&mut self, mut left: Vec<GameId>, mut right: Vec<GameId>) -> GameId {
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();
        let key = (left.into_boxed_slice(), right.into_boxed_slice());
        if let Some(&id) = self.intern.get(&key) {
            return id;
        }
        let height = key
            .0
            .iter()
            .chain(key.1.iter())
            .map(|&c| self.nodes[c.0 as usize].height + 1)
            .max()
            .unwrap_or(0);
        let id = GameId(u32::try_from(self.nodes.len()).expect("arena overflow"));
        self.nodes.push(Node {
            left: key.0.clone(),
            right: key.1.clone(),
            height,
        });
        self.intern.insert(key, id);
        id
    }

    /// Left and right options of a form.
    pub fn options(&self, g: GameId) -> (&[GameId], &[GameId]) {
        let n = &self.nodes[g.0 as usize];
        (&n.left, &n.right)
    }

    pub fn left_options(&self, g: GameId) -> &[GameId] {
        &self.nodes[g.0 as usize].left
    }

    pub fn right_options(&self, g: GameId) -> &[GameId] {
        &self.nodes[g.0 as usize].right
    }

    fn opts_cloned(&self, g: GameId) -> (Vec<GameId>, Vec<GameId>) {
        let n = &self.nodes[g.0 as usize];
        (n.left.to_vec(), n.right.to_vec())
    }

    /// Number of distinct forms interned so far.
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Height of the literal game tree: the longest line of play.
    pub fn formal_birthday(&self, g: GameId) -> u32 {
        self.nodes[g.0 as usize].height
    }

    /// Height of the canonical form.
    pub fn birthday(&mut self, g: GameId) -> u32 {
        let c = self.canonical_form(g);
        self.formal_birthday(c)
    }

    pub fn outcome(&mut self, g: GameId) -> Outcome {
        if let Some(&o) = self.outcome_memo.get(&g) {
            return o;
        }
        let (left, right) = self.opts_cloned(g);
        let left_first = left
            .iter()
            .any(|&gl| matches!(self.outcome(gl), Outcome::Left | Outcome::Second));
        let right_first = right
            .iter()
            .any(|&gr| matches!(self.outcome(gr), Outcome::Right | Outcome::Second));
        let o = match (left_first, right_first) {
            (true, true) => Outcome::First,
            (true, false) => Outcome::Left,
            (false, true) => Outcome::Right,
            (false, false) => Outcome::Second,
        };
        self.outcome_memo.insert(g, o);
        o
    }

    pub fn negate(&mut self, g: GameId) -> GameId {
        if let Some(&n) = self.negate_memo.get(&g) {
            return n;
        }
        let (left, right) = self.opts_cloned(g);
        let new_left = right.iter().map(|&x| self.negate(x)).collect();
        let new_right = left.iter().map(|&x| self.negate(x)).collect();
        let n = self.intern(new_left, new_right);
        self.negate_memo.insert(g, n);
        self.negate_memo.insert(n, g);
        n
    }

    /// Disjunctive sum, as a literal form: options are the moves in either
    /// summand with the other left in place.
    pub fn add(&mut self, g: GameId, h: GameId) -> GameId {
        if g == self.zero {
            return h;
        }
        if h == self.zero {
            return g;
        }
        let key = (g.min(h), g.max(h));
        if let Some(&s) = self.add_memo.get(&key) {
            return s;
        }
        let (gl, gr) = self.opts_cloned(g);
        let (hl, hr) = self.opts_cloned(h);
        let mut left = Vec::with_capacity(gl.len() + hl.len());
        let mut right = Vec::with_capacity(gr.len() + hr.len());
        for &x in &gl {
            left.push(self.add(x, h));
        }
        for &x in &hl {
            left.push(self.add(g, x));
        }
        for &x in &gr {
            right.push(self.add(x, h));
        }
        for &x in &hr {
            right.push(self.add(g, x));
        }
        let s = self.intern(left, right);
        self.add_memo.insert(key, s);
        s
    }

    /// `g ≤ h` as game values.
    pub fn leq(&mut self, g: GameId, h: GameId) -> bool {
        if g == h {
            return true;
        }
        if let Some(&b) = self.leq_memo.get(&(g, h)) {
            return b;
        }
        let (gl, _) = self.opts_cloned(g);
        let (_, hr) = self.opts_cloned(h);
        let ok = !gl.iter().any(|&x| self.leq(h, x)) && !hr.iter().any(|&y| self.leq(y, g));
        self.leq_memo.insert((g, h), ok);
        ok
    }

    pub fn geq(&mut self, g: GameId, h: GameId) -> bool {
        self.leq(h, g)
    }

    pub fn equal(&mut self, g: GameId, h: GameId) -> bool {
        self.leq(g, h) && self.leq(h, g)
    }

    pub fn greater(&mut self, g: GameId, h: GameId) -> bool {
        self.leq(h, g) && !self.leq(g, h)
    }

    pub fn less(&mut self, g: GameId, h: GameId) -> bool {
        self.leq(g, h) && !self.leq(h, g)
    }

    /// Confused: neither `g ≤ h` nor `g ≥ h`.
    pub fn incomparable(&mut self, g: GameId, h: GameId) -> bool {
        !self.leq(g, h) && !self.leq(h, g)
    }

    pub fn compare(&mut self, g: GameId, h: GameId) -> Option<Ordering> {
        match (self.leq(g, h), self.leq(h, g)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }

    /// `g ≤ h` decided by playing the difference `h - g`: a cross-check on
    /// the direct recursion.
    pub fn leq_by_difference(&mut self, g: GameId, h: GameId) -> bool {
        let neg = self.negate(g);
        let diff = self.add(h, neg);
        matches!(self.outcome(diff), Outcome::Left | Outcome::Second)
    }

    /// The unique simplest form of the same value: options canonicalized,
    /// reversible options bypassed, dominated options removed.
    pub fn canonical_form(&mut self, g: GameId) -> GameId {
        if let Some(&c) = self.canonical_memo.get(&g) {
            return c;
        }
        let (l0, r0) = self.opts_cloned(g);
        let mut left: Vec<GameId> = l0.iter().map(|&x| self.canonical_form(x)).collect();
        let mut right: Vec<GameId> = r0.iter().map(|&x| self.canonical_form(x)).collect();
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();
        let left = self.simplify_side(left, g, Player::Left);
        let right = self.simplify_side(right, g, Player::Right);
        let c = self.intern(left, right);
        self.canonical_memo.insert(g, c);
        self.canonical_memo.insert(c, c);
        c
    }

    /// One side of canonicalization. Bypassing a reversible option replaces
    /// it with options a full move-pair deeper, which can expose new
    /// reversible or dominated options, so bypassing runs to a fixpoint;
    /// domination then only deletes, which cannot create reversibility.
    fn simplify_side(&mut self, mut opts: Vec<GameId>, g: GameId, side: Player) -> Vec<GameId> {
        'rescan: loop {
            for i in 0..opts.len() {
                let x = opts[i];
                let through = match side {
                    Player::Left => self.right_options(x).to_vec(),
                    Player::Right => self.left_options(x).to_vec(),
                };
                let reversal = through.into_iter().find(|&t| match side {
                    Player::Left => self.leq(t, g),
                    Player::Right => self.leq(g, t),
                });
                if let Some(t) = reversal {
                    opts.swap_remove(i);
                    let replacements = match side {
                        Player::Left => self.left_options(t).to_vec(),
                        Player::Right => self.right_options(t).to_vec(),
                    };
                    opts.extend(replacements);
                    opts.sort_unstable();
                    opts.dedup();
                    continue 'rescan;
                }
            }
            break;
        }
        // An option is dominated when another option is at least as good
        // for this side; among equals (possible only transiently) keep the
        // lowest id.
        let snapshot = opts.clone();
        opts.retain(|&x| {
            !snapshot.iter().any(|&y| {
                if y == x {
                    return false;
                }
                let forward = match side {
                    Player::Left => self.leq(x, y),
                    Player::Right => self.leq(y, x),
                };
                if !forward {
                    return false;
                }
                let backward = match side {
                    Player::Left => self.leq(y, x),
                    Player::Right => self.leq(x, y),
                };
                !backward || y < x
            })
        });
        opts
    }

    /// The number a literal form spells in canonical shape, if any.
    pub fn literal_number(&self, g: GameId) -> Option<Dyadic> {
        let (l, r) = self.options(g);
        match (l.len(), r.len()) {
            (0, 0) => Some(Dyadic::ZERO),
            (1, 0) => {
                let a = self.literal_number(l[0])?;
                let n = a.as_integer()?;
                (n >= 0).then(|| Dyadic::integer(n + 1))
            }
            (0, 1) => {
                let b = self.literal_number(r[0])?;
                let n = b.as_integer()?;
                (n <= 0).then(|| Dyadic::integer(n - 1))
            }
            (1, 1) => {
                let a = self.literal_number(l[0])?;
                let b = self.literal_number(r[0])?;
                if a >= b {
                    return None;
                }
                let v = Dyadic::mean(a, b);
                if v.is_integer() {
                    return None;
                }
                let lower = Dyadic::new(v.numerator() - 1, v.exponent());
                let upper = Dyadic::new(v.numerator() + 1, v.exponent());
                (a == lower && b == upper).then_some(v)
            }
            _ => None,
        }
    }

    /// The index n when a literal form spells `*n` in canonical shape.
    pub fn literal_nimber(&self, g: GameId) -> Option<u32> {
        let (l, r) = self.options(g);
        if l != r {
            return None;
        }
        let mut seen = vec![false; l.len()];
        for &child in l {
            let idx = self.literal_nimber(child)? as usize;
            if idx >= seen.len() || seen[idx] {
                return None;
            }
            seen[idx] = true;
        }
        Some(l.len() as u32)
    }

    /// Best number Left can stop at moving first (canonical input).
    pub fn left_stop(&mut self, g: GameId) -> Option<Dyadic> {
        if let Some(d) = self.literal_number(g) {
            return Some(d);
        }
        let (l, _) = self.opts_cloned(g);
        l.iter().map(|&x| self.right_stop(x)).collect::<Option<Vec<_>>>()?.into_iter().max()
    }

    /// Best number Right can stop at moving first (canonical input).
    pub fn right_stop(&mut self, g: GameId) -> Option<Dyadic> {
        if let Some(d) = self.literal_number(g) {
            return Some(d);
        }
        let (_, r) = self.opts_cloned(g);
        r.iter().map(|&x| self.left_stop(x)).collect::<Option<Vec<_>>>()?.into_iter().min()
    }

    /// Whether every pair of consecutive moves by opposite players commutes
    /// literally, at every node of the form: whenever Left's move to A
    /// lets Right continue to Q, some direct Right move to B lets Left
    /// reach the same Q, and vice versa. Game trees of placement games
    /// always have this property; canonical forms often lose it.
    pub fn sp_tree_check(&mut self, g: GameId) -> bool {
        if let Some(&b) = self.sp_memo.get(&g) {
            return b;
        }
        let (left, right) = self.opts_cloned(g);
        let commutes_here = left.iter().all(|&a| {
            self.right_options(a)
                .iter()
                .all(|&q| right.iter().any(|&b| self.left_options(b).contains(&q)))
        }) && right.iter().all(|&b| {
            self.left_options(b)
                .iter()
                .all(|&q| left.iter().any(|&a| self.right_options(a).contains(&q)))
        });
        let ok = commutes_here
            && left.iter().chain(right.iter()).all(|&child| self.sp_tree_check(child));
        self.sp_memo.insert(g, ok);
        ok
    }

    /// The literal game tree of a position: one option per playable vertex,
    /// shared subpositions shared in the arena.
    pub fn game_from_complex(&mut self, c: &LegalComplex) -> GameId {
        if let Some(&id) = self.game_memo.get(c) {
            return id;
        }
        let mut left = Vec::new();
        let mut right = Vec::new();
        for idx in c.active_vertex_indices() {
            if let Link::Position(rest) = c.link_by_index(idx) {
                let sub = self.game_from_complex(&rest);
                match c.vertex(idx).owner() {
                    Player::Left => left.push(sub),
                    Player::Right => right.push(sub),
                }
            }
        }
        let id = self.intern(left, right);
        self.game_memo.insert(c.clone(), id);
        id
    }

    /// The canonical value of a position. Positions that are joins of
    /// independent components are evaluated component-wise and summed,
    /// which keeps product-shaped positions tractable.
    pub fn value_of_complex(&mut self, c: &LegalComplex) -> GameId {
        if let Some(&id) = self.value_memo.get(c) {
            return id;
        }
        let factors = c.join_factors();
        let id = if factors.len() != 1 {
            let mut acc = self.zero;
            for f in &factors {
                let v = self.value_of_complex(f);
                acc = self.add(acc, v);
            }
            self.canonical_form(acc)
        } else {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for idx in c.active_vertex_indices() {
                if let Link::Position(rest) = c.link_by_index(idx) {
                    let v = self.value_of_complex(&rest);
                    match c.vertex(idx).owner() {
                        Player::Left => left.push(v),
                        Player::Right => right.push(v),
                    }
                }
            }
            let raw = self.intern(left, right);
            self.canonical_form(raw)
        };
        self.value_memo.insert(c.clone(), id);
        id
    }

    /// Bracket form. Pretty mode replaces subgames that literally spell
    /// canonical numbers or nimbers with `0`, `3`, `-1/2`, `*`, `*2`
    /// tokens. Options print numbers first in order, then nimbers, then
    /// everything else.
    pub fn to_bracket(&self, g: GameId, pretty: bool) -> String {
        let mut cache = HashMap::new();
        self.bracket_inner(g, pretty, &mut cache)
    }

    /// One level of bracket with pretty-rendered options: shows the options
    /// of a game even when the game itself abbreviates to `0` or `1/2`.
    pub fn to_bracket_expanded(&self, g: GameId) -> String {
        let mut cache = HashMap::new();
        let (l, r) = self.opts_cloned(g);
        let left = self.ordered_renderings(&l, true, &mut cache).join(",");
        let right = self.ordered_renderings(&r, true, &mut cache).join(",");
        format!("{{{left}|{right}}}")
    }

    fn bracket_inner(
        &self,
        g: GameId,
        pretty: bool,
        cache: &mut HashMap<GameId, String>,
    ) -> String {
        if let Some(s) = cache.get(&g) {
            return s.clone();
        }
        let s = self.bracket_uncached(g, pretty, cache);
        cache.insert(g, s.clone());
        s
    }

    fn bracket_uncached(
        &self,
        g: GameId,
        pretty: bool,
        cache: &mut HashMap<GameId, String>,
    ) -> String {
        if pretty {
            if let Some(d) = self.literal_number(g) {
                return if d.is_integer() {
                    d.to_string()
                } else {
                    format!("{}/{}", d.numerator(), d.denominator())
                };
            }
            if let Some(n) = self.literal_nimber(g) {
                return match n {
                    1 => "*".to_owned(),
                    n => format!("*{n}"),
                };
            }
        }
        let (l, r) = self.opts_cloned(g);
        let left = self.ordered_renderings(&l, pretty, cache).join(",");
        let right = self.ordered_renderings(&r, pretty, cache).join(",");
        format!("{{{left}|{right}}}")
    }

    fn ordered_renderings(
        &self,
        opts: &[GameId],
        pretty: bool,
        cache: &mut HashMap<GameId, String>,
    ) -> Vec<String> {
        let mut decorated: Vec<(u8, Dyadic, u32, String)> = opts
            .iter()
            .map(|&o| {
                let text = self.bracket_inner(o, pretty, cache);
                if let Some(d) = self.literal_number(o) {
                    (0, d, 0, text)
                } else if let Some(n) = self.literal_nimber(o) {
                    (1, Dyadic::ZERO, n, text)
                } else {
                    (2, Dyadic::ZERO, 0, text)
                }
            })
            .collect();
        decorated.sort_by(|a, b| {
            a.0.cmp(&b.0)
                .then_with(|| a.1.cmp(&b.1))
                .then_with(|| a.2.cmp(&b.2))
                .then_with(|| a.3.cmp(&b.3))
        });
        decorated.into_iter().map(|(_, _, _, s)| s).collect()
    }
}

impl Default for EvalContext {
    fn default() -> EvalContext {
        EvalContext::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::values::{make_number, make_up_star};

    fn n(ctx: &mut EvalContext, v: i64) -> GameId {
        make_number(ctx, Dyadic::integer(v))
    }

    fn star(ctx: &mut EvalContext) -> GameId {
        let zero = ctx.zero();
        ctx.intern(vec![zero], vec![zero])
    }

    #[test]
    fn outcomes_of_the_basic_games() {
        let ctx = &mut EvalContext::new();
        let zero = ctx.zero();
        let s = star(ctx);
        let one = n(ctx, 1);
        let minus = n(ctx, -1);
        let up = make_up_star(ctx, 1, 0);
        assert_eq!(ctx.outcome(zero), Outcome::Second);
        assert_eq!(ctx.outcome(s), Outcome::First);
        assert_eq!(ctx.outcome(one), Outcome::Left);
        assert_eq!(ctx.outcome(minus), Outcome::Right);
        assert_eq!(ctx.outcome(up), Outcome::Left);
    }

    #[test]
    fn outcome_order_is_the_lattice() {
        use Outcome::*;
        assert!(Left > First);
        assert!(Left > Second);
        assert!(Right < First);
        assert!(Right < Second);
        assert_eq!(First.partial_cmp(&Second), None);
        assert_eq!(Left.partial_cmp(&Left), Some(Ordering::Equal));
    }

    #[test]
    fn interning_shares_identical_forms() {
        let ctx = &mut EvalContext::new();
        let a = star(ctx);
        let b = star(ctx);
        assert_eq!(a, b);
        let zero = ctx.zero();
        let c = ctx.intern(vec![zero, zero], vec![zero]);
        assert_eq!(c, a, "duplicate options collapse");
    }

    #[test]
    fn addition_has_literal_zero_identity() {
        let ctx = &mut EvalContext::new();
        let s = star(ctx);
        let zero = ctx.zero();
        assert_eq!(ctx.add(zero, s), s);
        assert_eq!(ctx.add(s, zero), s);
    }

    #[test]
    fn star_plus_star_is_zero_in_value() {
        let ctx = &mut EvalContext::new();
        let s = star(ctx);
        let sum = ctx.add(s, s);
        assert_ne!(sum, ctx.zero(), "the sum is a bigger literal form");
        assert_eq!(ctx.canonical_form(sum), ctx.zero());
        assert_eq!(ctx.outcome(sum), Outcome::Second);
    }

    #[test]
    fn negation_is_a_literal_involution() {
        let ctx = &mut EvalContext::new();
        let one = n(ctx, 1);
        let half = make_number(ctx, Dyadic::new(1, 1));
        let g = ctx.intern(vec![one], vec![half]);
        let neg = ctx.negate(g);
        assert_ne!(neg, g);
        assert_eq!(ctx.negate(neg), g);
    }

    #[test]
    fn comparison_basics() {
        let ctx = &mut EvalContext::new();
        let zero = ctx.zero();
        let one = n(ctx, 1);
        let s = star(ctx);
        let up = make_up_star(ctx, 1, 0);
        assert!(ctx.leq(zero, one));
        assert!(!ctx.leq(one, zero));
        assert!(ctx.incomparable(s, zero));
        assert!(ctx.greater(up, zero));
        assert!(ctx.incomparable(up, s));
        let two_up = make_up_star(ctx, 2, 0);
        assert!(ctx.greater(two_up, s));
        assert_eq!(ctx.compare(zero, one), Some(Ordering::Less));
        assert_eq!(ctx.compare(s, zero), None);
    }

    #[test]
    fn leq_matches_playing_the_difference() {
        let ctx = &mut EvalContext::new();
        let s = star(ctx);
        let one = n(ctx, 1);
        let up = make_up_star(ctx, 1, 0);
        let half = make_number(ctx, Dyadic::new(1, 1));
        let games = [ctx.zero(), s, one, up, half];
        for &g in &games {
            for &h in &games {
                assert_eq!(ctx.leq(g, h), ctx.leq_by_difference(g, h));
            }
        }
    }

    #[test]
    fn canonicalization_removes_a_dominated_option() {
        let ctx = &mut EvalContext::new();
        let zero = ctx.zero();
        let one = n(ctx, 1);
        let minus = n(ctx, -1);
        // {-1, 0 | 1}: Left's -1 is dominated by 0.
        let g = ctx.intern(vec![minus, zero], vec![one]);
        let c = ctx.canonical_form(g);
        let expected = ctx.intern(vec![zero], vec![one]);
        assert_eq!(c, expected);
    }

    #[test]
    fn canonicalization_bypasses_a_reversible_option() {
        let ctx = &mut EvalContext::new();
        let zero = ctx.zero();
        let one = n(ctx, 1);
        let s = star(ctx);
        // {1, * | 1}: Left's * reverses out through 0, leaving {1|1}.
        let g = ctx.intern(vec![one, s], vec![one]);
        let c = ctx.canonical_form(g);
        let expected = ctx.intern(vec![one], vec![one]);
        assert_eq!(c, expected);

        // {0 | 7}: Right's 7 reverses through 6 and onward to {0|} = 1.
        let seven = n(ctx, 7);
        let g = ctx.intern(vec![zero], vec![seven]);
        let one_again = ctx.canonical_form(g);
        assert_eq!(one_again, one);

        // {-1, 0, * | *, 1}: on the left, -1 and * both reverse out through
        // 0 (0 ≤ G here); on the right, 1 is dominated by *. What remains
        // is {0|*}, i.e. up.
        let minus = n(ctx, -1);
        let g = ctx.intern(vec![minus, zero, s], vec![s, one]);
        let c = ctx.canonical_form(g);
        let expected = ctx.intern(vec![zero], vec![s]);
        assert_eq!(c, expected);
        let up = make_up_star(ctx, 1, 0);
        assert_eq!(c, up);
    }

    #[test]
    fn canonicalization_is_idempotent_and_value_preserving() {
        let ctx = &mut EvalContext::new();
        let zero = ctx.zero();
        let one = n(ctx, 1);
        let s = star(ctx);
        let g = ctx.intern(vec![one, s, zero], vec![zero, s]);
        let c = ctx.canonical_form(g);
        assert_eq!(ctx.canonical_form(c), c);
        assert!(ctx.equal(g, c));
    }

    #[test]
    fn birthdays_distinguish_form_from_value() {
        let ctx = &mut EvalContext::new();
        let zero = ctx.zero();
        let seven = n(ctx, 7);
        let g = ctx.intern(vec![zero], vec![seven]);
        assert_eq!(ctx.formal_birthday(g), 8);
        assert_eq!(ctx.birthday(g), 1);
    }

    #[test]
    fn deep_game_trees_are_fine() {
        let ctx = &mut EvalContext::new();
        let deep = n(ctx, 80);
        let minus = ctx.negate(deep);
        let diff = ctx.add(deep, minus);
        assert_eq!(ctx.outcome(diff), Outcome::Second);
        assert_eq!(ctx.birthday(diff), 0);
        assert_eq!(ctx.formal_birthday(deep), 80);
    }

    #[test]
    fn stops_of_mixed_games() {
        let ctx = &mut EvalContext::new();
        let zero = ctx.zero();
        let one = n(ctx, 1);
        let s = star(ctx);
        let up_star = ctx.intern(vec![zero, s], vec![zero]);
        assert_eq!(ctx.left_stop(up_star), Some(Dyadic::ZERO));
        assert_eq!(ctx.right_stop(up_star), Some(Dyadic::ZERO));
        let g = ctx.intern(vec![one], vec![s]);
        assert_eq!(ctx.left_stop(g), Some(Dyadic::integer(1)));
        assert_eq!(ctx.right_stop(g), Some(Dyadic::ZERO));
    }

    #[test]
    fn option_commutation_check() {
        let ctx = &mut EvalContext::new();
        let zero = ctx.zero();
        let s = star(ctx);
        let one = n(ctx, 1);
        assert!(ctx.sp_tree_check(zero));
        assert!(ctx.sp_tree_check(s));
        assert!(ctx.sp_tree_check(one));
        // Canonical -1/2 = {-1|0}: Right's move to 0 strands Left's reply.
        let neg_half = make_number(ctx, Dyadic::new(-1, 1));
        assert!(!ctx.sp_tree_check(neg_half));
        // Canonical up fails too: after Right moves to *, Left's reply to 0
        // has no counterpart among Left's direct moves.
        let up = make_up_star(ctx, 1, 0);
        assert!(!ctx.sp_tree_check(up));
    }

    #[test]
    fn games_from_single_move_boards() {
        let ctx = &mut EvalContext::new();
        let c = LegalComplex::from_names(&[&["x1"]]).unwrap();
        let g = ctx.game_from_complex(&c);
        let one = n(ctx, 1);
        assert_eq!(g, one);

        let c = LegalComplex::from_names(&[&["x1"], &["y1"]]).unwrap();
        let g = ctx.game_from_complex(&c);
        let s = star(ctx);
        assert_eq!(g, s);
    }

    #[test]
    fn game_negation_matches_label_negation() {
        let ctx = &mut EvalContext::new();
        let c = LegalComplex::from_names(&[
            &["x1", "y2", "x3"],
            &["y1", "x2", "y3"],
            &["x1", "y3"],
            &["x3", "y1"],
        ])
        .unwrap();
        let g = ctx.game_from_complex(&c);
        let via_labels = ctx.game_from_complex(&c.negate_labels());
        let via_game = ctx.negate(g);
        assert_eq!(via_labels, via_game);
    }

    #[test]
    fn value_of_a_three_path_coloring_board() {
        let ctx = &mut EvalContext::new();
        // Path on three vertices where same-colour neighbours are barred;
        // the middle vertex is decisive and the whole thing is 0.
        let c = LegalComplex::from_names(&[
            &["x1", "y2", "x3"],
            &["y1", "x2", "y3"],
            &["x1", "y3"],
            &["x3", "y1"],
        ])
        .unwrap();
        let v = ctx.value_of_complex(&c);
        assert_eq!(v, ctx.zero());
    }

    #[test]
    fn component_split_matches_direct_evaluation() {
        let ctx = &mut EvalContext::new();
        let a = LegalComplex::from_names(&[&["x1"], &["y1"]]).unwrap();
        let b = LegalComplex::from_names(&[&["x2", "x3"]]).unwrap();
        let joined = a.join(&b).unwrap();
        let split = ctx.value_of_complex(&joined);
        let va = ctx.value_of_complex(&a);
        let vb = ctx.value_of_complex(&b);
        let sum = ctx.add(va, vb);
        let direct = ctx.canonical_form(sum);
        assert_eq!(split, direct);
    }

    #[test]
    fn bracket_rendering() {
        let ctx = &mut EvalContext::new();
        let zero = ctx.zero();
        let s = star(ctx);
        let one = n(ctx, 1);
        assert_eq!(ctx.to_bracket(zero, false), "{|}");
        assert_eq!(ctx.to_bracket(zero, true), "0");
        assert_eq!(ctx.to_bracket(s, false), "{{|}|{|}}");
        assert_eq!(ctx.to_bracket(s, true), "*");
        let g = ctx.intern(vec![one], vec![zero, s]);
        assert_eq!(ctx.to_bracket(g, true), "{1|0,*}");
        assert_eq!(ctx.to_bracket(g, false), "{{{|}|}|{|},{{|}|{|}}}");
        let half = make_number(ctx, Dyadic::new(1, 1));
        let h = ctx.intern(vec![half], vec![half]);
        assert_eq!(ctx.to_bracket(h, true), "{1/2|1/2}");
    }
}
