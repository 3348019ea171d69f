//! Exact game values: dyadic rationals, recognition of canonical forms as
//! named values, builders for those values, and text rendering.
//!
//! All arithmetic is exact. A value like `2+1/2.v*` reads: number part
//! `2+1/2`, one down (`.v`, with the multiplier digits omitted when the
//! multiple is 1), and a star. Switches render as `{a|b} = m±t` with the
//! `±` spelled `+-` in the default ASCII notation.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::engine::{EvalContext, GameId};
use crate::{Error, Result};

/// A dyadic rational `num / 2^exp` in lowest terms (`exp == 0` or `num` odd).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Dyadic {
    num: i64,
    exp: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: 0, exp: 0 };

    /// `num / 2^exp`, reduced.
    pub fn new(mut num: i64, mut exp: u32) -> Dyadic {
        if num == 0 {
            return Dyadic::ZERO;
        }
        while exp > 0 && num % 2 == 0 {
            num /= 2;
            exp -= 1;
        }
        Dyadic { num, exp }
    }

    pub fn integer(n: i64) -> Dyadic {
        Dyadic { num: n, exp: 0 }
    }

    pub fn numerator(self) -> i64 {
        self.num
    }

    pub fn exponent(self) -> u32 {
        self.exp
    }

    pub fn denominator(self) -> i64 {
        assert!(self.exp < 63, "denominator overflows i64");
        1i64 << self.exp
    }

    pub fn is_integer(self) -> bool {
        self.exp == 0
    }

    pub fn as_integer(self) -> Option<i64> {
        (self.exp == 0).then_some(self.num)
    }

    pub fn is_positive(self) -> bool {
        self.num > 0
    }

    pub fn is_negative(self) -> bool {
        self.num < 0
    }

    /// Exact midpoint of two dyadics; dyadics are closed under this.
    pub fn mean(a: Dyadic, b: Dyadic) -> Dyadic {
        let s = a + b;
        Dyadic::new(s.num, s.exp + 1)
    }

    fn widened(self, exp: u32) -> i128 {
        (self.num as i128) << (exp - self.exp)
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        let exp = self.exp.max(rhs.exp);
        let sum = self.widened(exp) + rhs.widened(exp);
        Dyadic::new(i64::try_from(sum).expect("dyadic overflow"), exp)
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: Dyadic) -> Dyadic {
        self + (-rhs)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            num: -self.num,
            exp: self.exp,
        }
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Dyadic) -> Ordering {
        let exp = self.exp.max(other.exp);
        self.widened(exp).cmp(&other.widened(exp))
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Dyadic) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Dyadic {
        Dyadic::integer(n)
    }
}

impl fmt::Display for Dyadic {
    /// `3`, `-1/2`, `2+1/2` (a leading `-` negates the whole mixed number).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            return write!(f, "{}", self.num);
        }
        let magnitude = self.num.unsigned_abs();
        let den = 1u64 << self.exp;
        let whole = magnitude >> self.exp;
        let frac = magnitude - (whole << self.exp);
        if self.num < 0 {
            f.write_str("-")?;
        }
        if whole > 0 {
            write!(f, "{whole}+")?;
        }
        write!(f, "{frac}/{den}")
    }
}

fn floor_div(a: i128, b: i128) -> i128 {
    a.div_euclid(b)
}

fn ceil_div(a: i128, b: i128) -> i128 {
    -((-a).div_euclid(b))
}

/// The simplest number strictly between `a` and `b`: the one with the
/// smallest power-of-two denominator, taking the integer closest to zero
/// when integers qualify.
pub fn simplest_between(a: Dyadic, b: Dyadic) -> Result<Dyadic> {
    if a >= b {
        return Err(Error::InvalidArgument(format!(
            "simplest_between requires a < b, got {a} and {b}"
        )));
    }
    for q in 0..=a.exp.max(b.exp) + 1 {
        let lo = floor_div((a.num as i128) << q, 1i128 << a.exp) + 1;
        let hi = ceil_div((b.num as i128) << q, 1i128 << b.exp) - 1;
        if lo <= hi {
            let p = if lo > 0 {
                lo
            } else if hi < 0 {
                hi
            } else {
                0
            };
            return Ok(Dyadic::new(
                i64::try_from(p).expect("dyadic overflow"),
                q,
            ));
        }
    }
    unreachable!("an interval of dyadics always contains a dyadic")
}

/// What a canonical game turned out to be.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValueDescriptor {
    Number(Dyadic),
    /// `*n`, n ≥ 1.
    Nimber(u32),
    /// `number + ups·↑ + star·*`, excluding plain numbers and plain nimbers.
    NumberUpStar {
        number: Dyadic,
        ups: i32,
        star: u32,
    },
    /// `{left|right}` with both options numbers and left > right.
    Switch { left: Dyadic, right: Dyadic },
    /// `translation + tiny(subscript)`, subscript > 0.
    Tiny {
        translation: Dyadic,
        subscript: Dyadic,
    },
    Miny {
        translation: Dyadic,
        subscript: Dyadic,
    },
    /// Anything else, as a pretty-printed canonical bracket form.
    Literal(String),
}

impl ValueDescriptor {
    /// Mean of a switch; numbers and infinitesimally-close games are their
    /// own mean.
    pub fn mean(&self) -> Option<Dyadic> {
        match self {
            ValueDescriptor::Number(d) => Some(*d),
            ValueDescriptor::NumberUpStar { number, .. } => Some(*number),
            ValueDescriptor::Switch { left, right } => Some(Dyadic::mean(*left, *right)),
            ValueDescriptor::Tiny { translation, .. }
            | ValueDescriptor::Miny { translation, .. } => Some(*translation),
            _ => None,
        }
    }

    /// Temperature of a switch of numbers.
    pub fn temperature(&self) -> Option<Dyadic> {
        match self {
            ValueDescriptor::Switch { left, right } => {
                let d = *left - *right;
                Some(Dyadic::new(d.num, d.exp + 1))
            }
            _ => None,
        }
    }
}

/// Output notation. `Ascii` spells `±` as `+-`; `Pretty` uses `±`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Notation {
    Ascii,
    Pretty,
}

/// Renders a descriptor: `-1/2`, `*2`, `2+1/2.v*`, `{1|-1} = 0±1`, `+_2`.
pub fn render_value(v: &ValueDescriptor, notation: Notation) -> String {
    match v {
        ValueDescriptor::Number(d) => d.to_string(),
        ValueDescriptor::Nimber(0) => "0".to_owned(),
        ValueDescriptor::Nimber(1) => "*".to_owned(),
        ValueDescriptor::Nimber(n) => format!("*{n}"),
        ValueDescriptor::NumberUpStar { number, ups, star } => {
            let mut s = String::new();
            if *number != Dyadic::ZERO {
                s.push_str(&number.to_string());
            }
            if *ups != 0 {
                if ups.unsigned_abs() != 1 {
                    s.push_str(&ups.unsigned_abs().to_string());
                }
                s.push('.');
                s.push(if *ups > 0 { '^' } else { 'v' });
            }
            match star {
                0 => {}
                1 => s.push('*'),
                n => s.push_str(&format!("*{n}")),
            }
            if s.is_empty() {
                s.push('0');
            }
            s
        }
        ValueDescriptor::Switch { left, right } => {
            let mean = v.mean().expect("switches have a mean");
            let temp = v.temperature().expect("switches have a temperature");
            let pm = match notation {
                Notation::Ascii => "+-",
                Notation::Pretty => "±",
            };
            format!("{{{left}|{right}}} = {mean}{pm}{temp}")
        }
        ValueDescriptor::Tiny {
            translation,
            subscript,
        } => {
            let prefix = if *translation == Dyadic::ZERO {
                String::new()
            } else {
                translation.to_string()
            };
            format!("{prefix}+_{subscript}")
        }
        ValueDescriptor::Miny {
            translation,
            subscript,
        } => {
            let prefix = if *translation == Dyadic::ZERO {
                String::new()
            } else {
                translation.to_string()
            };
            format!("{prefix}-_{subscript}")
        }
        ValueDescriptor::Literal(s) => s.clone(),
    }
}

/// The number a canonical game is, if it is one.
///
/// Errors when `g` is not in canonical form.
pub fn number_value(ctx: &mut EvalContext, g: GameId) -> Result<Option<Dyadic>> {
    if ctx.canonical_form(g) != g {
        return Err(Error::NotCanonical);
    }
    Ok(ctx.literal_number(g))
}

/// Builds the canonical form of a number.
pub fn make_number(ctx: &mut EvalContext, d: Dyadic) -> GameId {
    let id = make_number_form(ctx, d);
    ctx.canonical_form(id)
}

fn make_number_form(ctx: &mut EvalContext, d: Dyadic) -> GameId {
    match d.as_integer() {
        Some(n) if n >= 0 => (0..n).fold(ctx.zero(), |acc, _| ctx.intern(vec![acc], vec![])),
        Some(n) => (n..0).fold(ctx.zero(), |acc, _| ctx.intern(vec![], vec![acc])),
        None => {
            let left = make_number_form(ctx, Dyadic::new(d.num - 1, d.exp));
            let right = make_number_form(ctx, Dyadic::new(d.num + 1, d.exp));
            ctx.intern(vec![left], vec![right])
        }
    }
}

/// Builds the canonical form of `*n`.
pub fn make_nimber(ctx: &mut EvalContext, n: u32) -> GameId {
    let mut chain = vec![ctx.zero()];
    for _ in 0..n {
        let opts = chain.clone();
        chain.push(ctx.intern(opts.clone(), opts));
    }
    let id = chain[n as usize];
    ctx.canonical_form(id)
}

/// Builds the canonical form of `ups·↑ + star·*`.
pub fn make_up_star(ctx: &mut EvalContext, ups: i32, star: u32) -> GameId {
    let zero = ctx.zero();
    let one_star = make_nimber(ctx, 1);
    let unit = if ups >= 0 {
        ctx.intern(vec![zero], vec![one_star])
    } else {
        ctx.intern(vec![one_star], vec![zero])
    };
    let mut acc = zero;
    for _ in 0..ups.unsigned_abs() {
        acc = ctx.add(acc, unit);
    }
    if star > 0 {
        let nim = make_nimber(ctx, star);
        acc = ctx.add(acc, nim);
    }
    ctx.canonical_form(acc)
}

/// Builds the switch `{a|b}`; requires `a > b`.
pub fn make_switch(ctx: &mut EvalContext, a: Dyadic, b: Dyadic) -> Result<GameId> {
    if a <= b {
        return Err(Error::InvalidArgument(format!(
            "a switch needs left > right, got {a} and {b}"
        )));
    }
    let left = make_number(ctx, a);
    let right = make_number(ctx, b);
    let id = ctx.intern(vec![left], vec![right]);
    Ok(ctx.canonical_form(id))
}

/// Builds the tiny `{0 | {0 | -d}}`; requires `d > 0`.
pub fn make_tiny(ctx: &mut EvalContext, d: Dyadic) -> Result<GameId> {
    if !d.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "tiny subscripts are positive, got {d}"
        )));
    }
    let zero = ctx.zero();
    let neg = make_number(ctx, -d);
    let inner = ctx.intern(vec![zero], vec![neg]);
    let id = ctx.intern(vec![zero], vec![inner]);
    Ok(ctx.canonical_form(id))
}

/// Builds the miny `{{d | 0} | 0}`; requires `d > 0`.
pub fn make_miny(ctx: &mut EvalContext, d: Dyadic) -> Result<GameId> {
    let t = make_tiny(ctx, d)?;
    Ok(ctx.negate(t))
}

/// Recognition bound on up/down multiples.
pub const MAX_UPS: i32 = 8;
/// Recognition bound on nimber indices.
pub const MAX_NIMBER: u32 = 64;

/// Classifies a game by its canonical form. Tried in order: number, nimber,
/// number + ups + star, switch of two numbers, number-translated tiny or
/// miny, and otherwise the literal bracket form.
pub fn recognize(ctx: &mut EvalContext, g: GameId) -> ValueDescriptor {
    let c = ctx.canonical_form(g);
    if let Some(d) = ctx.literal_number(c) {
        return ValueDescriptor::Number(d);
    }
    if let Some(n) = ctx.literal_nimber(c) {
        if n <= MAX_NIMBER {
            return ValueDescriptor::Nimber(n);
        }
    }
    if let Some(v) = recognize_number_up_star(ctx, c) {
        return v;
    }
    if let Some(v) = recognize_switch(ctx, c) {
        return v;
    }
    if let Some(v) = recognize_tiny_or_miny(ctx, c) {
        return v;
    }
    ValueDescriptor::Literal(ctx.to_bracket(c, true))
}

fn recognize_number_up_star(ctx: &mut EvalContext, c: GameId) -> Option<ValueDescriptor> {
    let ls = ctx.left_stop(c)?;
    let rs = ctx.right_stop(c)?;
    if ls != rs {
        return None;
    }
    let base = make_number(ctx, ls);
    let neg_base = ctx.negate(base);
    let shifted = ctx.add(c, neg_base);
    let e = ctx.canonical_form(shifted);
    for magnitude in 0..=MAX_UPS {
        for k in [magnitude, -magnitude] {
            let oracle = make_up_star(ctx, k, 0);
            let neg_oracle = ctx.negate(oracle);
            let residue = ctx.add(e, neg_oracle);
            let f = ctx.canonical_form(residue);
            if let Some(m) = ctx.literal_nimber(f) {
                if m <= MAX_NIMBER && (k, m) != (0, 0) {
                    debug_assert!({
                        let built = make_up_star(ctx, k, m);
                        let whole = ctx.add(base, built);
                        ctx.equal(c, whole)
                    });
                    return Some(ValueDescriptor::NumberUpStar {
                        number: ls,
                        ups: k,
                        star: m,
                    });
                }
            }
            if k == 0 {
                break;
            }
        }
    }
    None
}

fn recognize_switch(ctx: &mut EvalContext, c: GameId) -> Option<ValueDescriptor> {
    let (l, r) = ctx.options(c);
    if l.len() != 1 || r.len() != 1 {
        return None;
    }
    let (l0, r0) = (l[0], r[0]);
    let a = ctx.literal_number(l0)?;
    let b = ctx.literal_number(r0)?;
    if a > b {
        Some(ValueDescriptor::Switch { left: a, right: b })
    } else {
        None
    }
}

fn recognize_tiny_or_miny(ctx: &mut EvalContext, c: GameId) -> Option<ValueDescriptor> {
    let (l, r) = ctx.options(c);
    if l.len() != 1 || r.len() != 1 {
        return None;
    }
    let (l0, r0) = (l[0], r[0]);
    // d + tiny(t): { d | { d | d-t } }
    if let Some(d) = ctx.literal_number(l0) {
        let (hl, hr) = ctx.options(r0);
        if hl.len() == 1 && hr.len() == 1 && hl[0] == l0 {
            if let Some(b) = ctx.literal_number(hr[0]) {
                if b < d {
                    debug_assert!({
                        let tiny = make_tiny(ctx, d - b).expect("positive subscript");
                        let base = make_number(ctx, d);
                        let whole = ctx.add(base, tiny);
                        ctx.equal(c, whole)
                    });
                    return Some(ValueDescriptor::Tiny {
                        translation: d,
                        subscript: d - b,
                    });
                }
            }
        }
    }
    // d + miny(t): { { d+t | d } | d }
    if let Some(d) = ctx.literal_number(r0) {
        let (hl, hr) = ctx.options(l0);
        if hl.len() == 1 && hr.len() == 1 && hr[0] == r0 {
            if let Some(b) = ctx.literal_number(hl[0]) {
                if b > d {
                    return Some(ValueDescriptor::Miny {
                        translation: d,
                        subscript: b - d,
                    });
                }
            }
        }
    }
    None
}

/// A parsed value expression: named parts build canonical forms, bracket
/// structure stays literal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValueExpr {
    Nus {
        number: Dyadic,
        ups: i32,
        star: u32,
    },
    Tiny(Dyadic),
    Miny(Dyadic),
    Brackets {
        left: Vec<ValueExpr>,
        right: Vec<ValueExpr>,
    },
}

/// Builds the game a value expression denotes.
pub fn build_value(ctx: &mut EvalContext, expr: &ValueExpr) -> Result<GameId> {
    match expr {
        ValueExpr::Nus { number, ups, star } => {
            let base = make_number(ctx, *number);
            let rest = make_up_star(ctx, *ups, *star);
            let sum = ctx.add(base, rest);
            Ok(ctx.canonical_form(sum))
        }
        ValueExpr::Tiny(d) => make_tiny(ctx, *d),
        ValueExpr::Miny(d) => make_miny(ctx, *d),
        ValueExpr::Brackets { left, right } => {
            let l = left
                .iter()
                .map(|e| build_value(ctx, e))
                .collect::<Result<Vec<_>>>()?;
            let r = right
                .iter()
                .map(|e| build_value(ctx, e))
                .collect::<Result<Vec<_>>>()?;
            Ok(ctx.intern(l, r))
        }
    }
}

/// Parses `3`, `-1/2`, `2+1/4`, `*`, `*2`, `.^`, `3.v`, `2.v*`, `+_1`,
/// `{0|-2}`, and nested bracket forms.
pub fn parse_value(text: &str) -> Result<ValueExpr> {
    let mut p = ValueParser {
        text: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos != p.text.len() {
        return Err(p.error("trailing input"));
    }
    Ok(expr)
}

struct ValueParser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> ValueParser<'a> {
    fn error(&self, message: &str) -> Error {
        Error::InvalidArgument(format!(
            "value expression, byte {}: {}",
            self.pos, message
        ))
    }

    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<ValueExpr> {
        self.skip_ws();
        match self.peek() {
            Some(b'{') => self.brackets(),
            Some(b'+') if self.text.get(self.pos + 1) == Some(&b'_') => {
                self.pos += 2;
                Ok(ValueExpr::Tiny(self.number()?))
            }
            Some(b'-') if self.text.get(self.pos + 1) == Some(&b'_') => {
                self.pos += 2;
                Ok(ValueExpr::Miny(self.number()?))
            }
            _ => self.nus(),
        }
    }

    fn brackets(&mut self) -> Result<ValueExpr> {
        if !self.eat(b'{') {
            return Err(self.error("expected '{'"));
        }
        let left = self.option_list(b'|')?;
        if !self.eat(b'|') {
            return Err(self.error("expected '|'"));
        }
        let right = self.option_list(b'}')?;
        if !self.eat(b'}') {
            return Err(self.error("expected '}'"));
        }
        Ok(ValueExpr::Brackets { left, right })
    }

    fn option_list(&mut self, terminator: u8) -> Result<Vec<ValueExpr>> {
        let mut items = Vec::new();
        self.skip_ws();
        if self.peek() == Some(terminator) {
            return Ok(items);
        }
        loop {
            items.push(self.expr()?);
            self.skip_ws();
            if !self.eat(b',') {
                return Ok(items);
            }
        }
    }

    /// `[number] [ups] [star]`, at least one part. A leading integer
    /// followed by `.` is an ups multiplier, per the value grammar.
    fn nus(&mut self) -> Result<ValueExpr> {
        let mut number = Dyadic::ZERO;
        let mut ups = 0i32;
        let mut star = 0u32;
        let mut any = false;

        let start = self.pos;
        if matches!(self.peek(), Some(b'-') | Some(b'0'..=b'9')) {
            let n = self.number()?;
            if self.peek() == Some(b'.') && n.is_integer() {
                // The digits were an ups multiplier.
                self.pos = start;
            } else {
                number = n;
                any = true;
            }
        }
        if matches!(self.peek(), Some(b'.') | Some(b'0'..=b'9')) {
            let mult_start = self.pos;
            let mult = if self.peek() == Some(b'.') {
                1u32
            } else {
                match self.integer() {
                    Ok(m) if self.peek() == Some(b'.') => u32::try_from(m)
                        .map_err(|_| self.error("ups multiplier out of range"))?,
                    _ => {
                        self.pos = mult_start;
                        0
                    }
                }
            };
            if mult > 0 && self.eat(b'.') {
                ups = match self.peek() {
                    Some(b'^') => mult as i32,
                    Some(b'v') => -(mult as i32),
                    _ => return Err(self.error("expected '^' or 'v' after '.'")),
                };
                self.pos += 1;
                any = true;
            }
        }
        if self.eat(b'*') {
            star = match self.peek() {
                Some(b'0'..=b'9') => {
                    let n = self.integer()?;
                    u32::try_from(n).map_err(|_| self.error("star index out of range"))?
                }
                _ => 1,
            };
            any = true;
        }
        if !any {
            return Err(self.error("expected a value"));
        }
        Ok(ValueExpr::Nus { number, ups, star })
    }

    fn integer(&mut self) -> Result<i64> {
        let negative = self.eat(b'-');
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected digits"));
        }
        let digits = std::str::from_utf8(&self.text[start..self.pos]).unwrap();
        let n: i64 = digits
            .parse()
            .map_err(|_| self.error("integer out of range"))?;
        Ok(if negative { -n } else { n })
    }

    /// `3`, `-1/2`, `2+1/2`, with the denominator either a power of two or
    /// `2^k`.
    fn number(&mut self) -> Result<Dyadic> {
        let negative = self.peek() == Some(b'-');
        let first = self.integer()?.unsigned_abs();
        let (whole, num) = if self.eat(b'+') {
            (first, self.integer()?.unsigned_abs())
        } else if self.peek() == Some(b'/') {
            (0, first)
        } else {
            let n = i64::try_from(first).map_err(|_| self.error("integer out of range"))?;
            return Ok(Dyadic::integer(if negative { -n } else { n }));
        };
        if !self.eat(b'/') {
            return Err(self.error("expected '/'"));
        }
        let exp = if self.eat(b'2') && self.eat(b'^') {
            u32::try_from(self.integer()?).map_err(|_| self.error("exponent out of range"))?
        } else {
            // Back up over the consumed '2', if any, and read a plain
            // power-of-two denominator.
            if self.text.get(self.pos.wrapping_sub(1)) == Some(&b'2')
                && !matches!(self.peek(), Some(b'0'..=b'9'))
            {
                1
            } else {
                if self.text.get(self.pos.wrapping_sub(1)) == Some(&b'2') {
                    self.pos -= 1;
                }
                let den = self.integer()?;
                if den <= 0 || den.count_ones() != 1 {
                    return Err(self.error("denominator must be a power of two"));
                }
                den.trailing_zeros()
            }
        };
        let magnitude = (whole as i128) * (1i128 << exp) + num as i128;
        let signed = if negative { -magnitude } else { magnitude };
        let num = i64::try_from(signed).map_err(|_| self.error("number out of range"))?;
        Ok(Dyadic::new(num, exp))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(num: i64, exp: u32) -> Dyadic {
        Dyadic::new(num, exp)
    }

    #[test]
    fn dyadics_reduce() {
        assert_eq!(d(4, 2), Dyadic::integer(1));
        assert_eq!(d(6, 2), d(3, 1));
        assert_eq!(d(0, 5), Dyadic::ZERO);
        assert_eq!(d(-4, 1), Dyadic::integer(-2));
    }

    #[test]
    fn dyadic_arithmetic() {
        assert_eq!(d(1, 1) + d(1, 1), Dyadic::integer(1));
        assert_eq!(d(1, 2) + d(1, 1), d(3, 2));
        assert_eq!(Dyadic::integer(2) - d(1, 1), d(3, 1));
        assert_eq!(Dyadic::mean(Dyadic::ZERO, Dyadic::integer(1)), d(1, 1));
        assert_eq!(Dyadic::mean(d(1, 2), d(1, 1)), d(3, 3));
        assert!(d(-1, 1) < Dyadic::ZERO);
        assert!(d(3, 2) < Dyadic::integer(1));
    }

    #[test]
    fn dyadic_display() {
        assert_eq!(Dyadic::integer(-3).to_string(), "-3");
        assert_eq!(d(-1, 1).to_string(), "-1/2");
        assert_eq!(d(5, 1).to_string(), "2+1/2");
        assert_eq!(d(-3, 1).to_string(), "-1+1/2");
        assert_eq!(d(5, 3).to_string(), "5/8");
        assert_eq!(Dyadic::ZERO.to_string(), "0");
    }

    #[test]
    fn simplest_number_in_an_interval() {
        let s = |a, b| simplest_between(a, b).unwrap();
        assert_eq!(s(Dyadic::ZERO, Dyadic::integer(1)), d(1, 1));
        assert_eq!(s(Dyadic::integer(-5), Dyadic::integer(5)), Dyadic::ZERO);
        assert_eq!(s(d(1, 1), d(3, 1)), Dyadic::integer(1));
        assert_eq!(s(d(1, 1), Dyadic::integer(1)), d(3, 2));
        assert_eq!(s(d(5, 3), d(3, 2)), d(11, 4));
        assert_eq!(s(Dyadic::integer(-1), Dyadic::ZERO), d(-1, 1));
        assert_eq!(s(Dyadic::integer(-2), Dyadic::integer(-1)), d(-3, 1));
        assert_eq!(s(Dyadic::integer(1), Dyadic::integer(2)), d(3, 1));
        assert_eq!(s(Dyadic::ZERO, Dyadic::integer(5)), Dyadic::integer(1));
        assert_eq!(s(Dyadic::integer(-5), Dyadic::integer(-1)), Dyadic::integer(-2));
        assert!(simplest_between(Dyadic::ZERO, Dyadic::ZERO).is_err());
    }

    #[test]
    fn rendering_named_values() {
        use ValueDescriptor::*;
        let r = |v: &ValueDescriptor| render_value(v, Notation::Ascii);
        assert_eq!(r(&Number(d(-1, 1))), "-1/2");
        assert_eq!(r(&Nimber(1)), "*");
        assert_eq!(r(&Nimber(3)), "*3");
        assert_eq!(
            r(&NumberUpStar { number: d(5, 1), ups: -1, star: 1 }),
            "2+1/2.v*"
        );
        assert_eq!(
            r(&NumberUpStar { number: Dyadic::ZERO, ups: 3, star: 0 }),
            "3.^"
        );
        assert_eq!(
            r(&NumberUpStar { number: Dyadic::ZERO, ups: 1, star: 1 }),
            ".^*"
        );
        assert_eq!(
            r(&NumberUpStar { number: Dyadic::integer(1), ups: 0, star: 1 }),
            "1*"
        );
        assert_eq!(
            r(&Switch { left: Dyadic::integer(1), right: Dyadic::integer(-1) }),
            "{1|-1} = 0+-1"
        );
        assert_eq!(
            render_value(
                &Switch { left: Dyadic::integer(1), right: Dyadic::ZERO },
                Notation::Pretty
            ),
            "{1|0} = 1/2±1/2"
        );
        assert_eq!(
            r(&Tiny { translation: Dyadic::ZERO, subscript: Dyadic::integer(2) }),
            "+_2"
        );
        assert_eq!(
            r(&Miny { translation: Dyadic::integer(1), subscript: d(1, 1) }),
            "1-_1/2"
        );
    }

    #[test]
    fn parsing_value_expressions() {
        let num = |n, e| ValueExpr::Nus {
            number: d(n, e),
            ups: 0,
            star: 0,
        };
        assert_eq!(parse_value("3").unwrap(), num(3, 0));
        assert_eq!(parse_value("-1/2").unwrap(), num(-1, 1));
        assert_eq!(parse_value("2+1/4").unwrap(), num(9, 2));
        assert_eq!(parse_value("1/2^3").unwrap(), num(1, 3));
        assert_eq!(
            parse_value("*").unwrap(),
            ValueExpr::Nus { number: Dyadic::ZERO, ups: 0, star: 1 }
        );
        assert_eq!(
            parse_value("*4").unwrap(),
            ValueExpr::Nus { number: Dyadic::ZERO, ups: 0, star: 4 }
        );
        assert_eq!(
            parse_value(".^").unwrap(),
            ValueExpr::Nus { number: Dyadic::ZERO, ups: 1, star: 0 }
        );
        assert_eq!(
            parse_value("3.v*").unwrap(),
            ValueExpr::Nus { number: Dyadic::ZERO, ups: -3, star: 1 }
        );
        assert_eq!(parse_value("+_1").unwrap(), ValueExpr::Tiny(Dyadic::integer(1)));
        assert_eq!(
            parse_value("{0|-2}").unwrap(),
            ValueExpr::Brackets {
                left: vec![num(0, 0)],
                right: vec![num(-2, 0)],
            }
        );
        assert_eq!(
            parse_value("{1,*|}").unwrap(),
            ValueExpr::Brackets {
                left: vec![
                    num(1, 0),
                    ValueExpr::Nus { number: Dyadic::ZERO, ups: 0, star: 1 }
                ],
                right: vec![],
            }
        );
        assert!(parse_value("").is_err());
        assert!(parse_value("{1|").is_err());
        assert!(parse_value("1/3").is_err());
        assert!(parse_value("1 2").is_err());
    }

    #[test]
    fn recognizing_canonical_values() {
        use ValueDescriptor::*;
        let ctx = &mut EvalContext::new();
        let zero = ctx.zero();
        assert_eq!(recognize(ctx, zero), Number(Dyadic::ZERO));

        let half = make_number(ctx, d(1, 1));
        assert_eq!(recognize(ctx, half), Number(d(1, 1)));

        let star2 = make_nimber(ctx, 2);
        assert_eq!(recognize(ctx, star2), Nimber(2));

        let up = make_up_star(ctx, 1, 0);
        assert_eq!(
            recognize(ctx, up),
            NumberUpStar { number: Dyadic::ZERO, ups: 1, star: 0 }
        );

        let one = make_number(ctx, Dyadic::integer(1));
        let star = make_nimber(ctx, 1);
        let one_star = ctx.add(one, star);
        assert_eq!(
            recognize(ctx, one_star),
            NumberUpStar { number: Dyadic::integer(1), ups: 0, star: 1 }
        );

        let down2_star = make_up_star(ctx, -2, 1);
        assert_eq!(
            recognize(ctx, down2_star),
            NumberUpStar { number: Dyadic::ZERO, ups: -2, star: 1 }
        );

        let sw = make_switch(ctx, Dyadic::integer(2), Dyadic::integer(-1)).unwrap();
        let got = recognize(ctx, sw);
        assert_eq!(
            got,
            Switch { left: Dyadic::integer(2), right: Dyadic::integer(-1) }
        );
        assert_eq!(got.mean(), Some(d(1, 1)));
        assert_eq!(got.temperature(), Some(d(3, 1)));

        let tiny2 = make_tiny(ctx, Dyadic::integer(2)).unwrap();
        assert_eq!(
            recognize(ctx, tiny2),
            Tiny { translation: Dyadic::ZERO, subscript: Dyadic::integer(2) }
        );
        let shifted = ctx.add(one, tiny2);
        assert_eq!(
            recognize(ctx, shifted),
            Tiny { translation: Dyadic::integer(1), subscript: Dyadic::integer(2) }
        );
        let miny = make_miny(ctx, d(1, 1)).unwrap();
        assert_eq!(
            recognize(ctx, miny),
            Miny { translation: Dyadic::ZERO, subscript: d(1, 1) }
        );

        // {1|*} fits no named family.
        let g = ctx.intern(vec![one], vec![star]);
        assert_eq!(recognize(ctx, g), Literal("{1|*}".to_owned()));
    }

    #[test]
    fn number_queries_demand_canonical_forms() {
        let ctx = &mut EvalContext::new();
        let zero = ctx.zero();
        let seven = make_number(ctx, Dyadic::integer(7));
        let g = ctx.intern(vec![zero], vec![seven]);
        assert!(matches!(number_value(ctx, g), Err(crate::Error::NotCanonical)));
        let c = ctx.canonical_form(g);
        assert_eq!(number_value(ctx, c).unwrap(), Some(Dyadic::integer(1)));
        let star = make_nimber(ctx, 1);
        assert_eq!(number_value(ctx, star).unwrap(), None);
    }

    #[test]
    fn built_values_check_out() {
        let ctx = &mut EvalContext::new();
        // Builders produce canonical forms.
        for d in [d(1, 1), d(-3, 2), Dyadic::integer(4), Dyadic::integer(-2)] {
            let g = make_number(ctx, d);
            assert_eq!(ctx.canonical_form(g), g);
            assert_eq!(ctx.literal_number(g), Some(d));
        }
        let n3 = make_nimber(ctx, 3);
        assert_eq!(ctx.canonical_form(n3), n3);
        assert_eq!(ctx.literal_nimber(n3), Some(3));
        // Negatives of builders match negated arguments.
        let t = make_tiny(ctx, Dyadic::integer(1)).unwrap();
        let m = make_miny(ctx, Dyadic::integer(1)).unwrap();
        assert_eq!(ctx.negate(t), m);
        assert!(make_switch(ctx, Dyadic::ZERO, Dyadic::ZERO).is_err());
        assert!(make_tiny(ctx, Dyadic::integer(-1)).is_err());
    }

    #[test]
    fn value_expressions_build_games() {
        let ctx = &mut EvalContext::new();
        let expr = parse_value("-1/2").unwrap();
        let g = build_value(ctx, &expr).unwrap();
        let expected = make_number(ctx, d(-1, 1));
        assert_eq!(g, expected);

        // Bracket structure stays literal: {-2|0} is worth -1 but is not
        // its canonical form.
        let expr = parse_value("{-2|0}").unwrap();
        let g = build_value(ctx, &expr).unwrap();
        let minus_one = make_number(ctx, Dyadic::integer(-1));
        assert_ne!(g, minus_one);
        assert!(ctx.equal(g, minus_one));

        let expr = parse_value("2.^*").unwrap();
        let g = build_value(ctx, &expr).unwrap();
        let expected = make_up_star(ctx, 2, 1);
        assert_eq!(g, expected);
    }
}
