//! Free-group words, monodromy words over {R, L, i}, the induced automorphism
//! of F₂ = ⟨x, y⟩, the relators of the bundle group, and Fox derivatives.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    X,
    Y,
    T,
}

impl Gen {
    pub const ALL: [Gen; 3] = [Gen::X, Gen::Y, Gen::T];

    pub fn name(self) -> &'static str {
        match self {
            Gen::X => "x",
            Gen::Y => "y",
            Gen::T => "t",
        }
    }
}

/// Freely reduced word: adjacent syllables have distinct generators and
/// nonzero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord {
    syllables: Vec<(Gen, i64)>,
}

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord::default()
    }

    pub fn generator(g: Gen) -> Self {
        GroupWord { syllables: vec![(g, 1)] }
    }

    pub fn from_syllables(it: impl IntoIterator<Item = (Gen, i64)>) -> Self {
        let mut w = GroupWord::identity();
        for (g, e) in it {
            w.push(g, e);
        }
        w
    }

    fn push(&mut self, g: Gen, e: i64) {
        if e == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some((h, f)) if *h == g => {
                *f += e;
                if *f == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((g, e)),
        }
    }

    pub fn syllables(&self) -> &[(Gen, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, counting `g^e` as |e| letters.
    pub fn len(&self) -> u64 {
        self.syllables.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    pub fn inverse(&self) -> Self {
        GroupWord { syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut w = self.clone();
        for &(g, e) in &o.syllables {
            w.push(g, e);
        }
        w
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = GroupWord::identity();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    pub fn exponent_sum(&self, g: Gen) -> i64 {
        self.syllables.iter().filter(|(h, _)| *h == g).map(|(_, e)| e).sum()
    }

    /// Exponent sums of x, y, t.
    pub fn abelianization(&self) -> [i64; 3] {
        [self.exponent_sum(Gen::X), self.exponent_sum(Gen::Y), self.exponent_sum(Gen::T)]
    }

    /// Cyclically reduced representative of the conjugacy class.
    pub fn cyclic_reduction(&self) -> Self {
        let mut s = self.syllables.clone();
        loop {
            if s.len() >= 2 && s[0].0 == s[s.len() - 1].0 {
                let (g, a) = s[0];
                let b = s.pop().unwrap().1;
                if a + b == 0 {
                    s.remove(0);
                } else {
                    s[0] = (g, a + b);
                }
                continue;
            }
            break;
        }
        GroupWord { syllables: s }
    }

    /// Whether two words are conjugate in the free group.
    pub fn is_conjugate_to(&self, o: &Self) -> bool {
        let a = self.cyclic_reduction().syllables;
        let b = o.cyclic_reduction().syllables;
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() || a.len() == 1 {
            return a == b;
        }
        (0..a.len()).any(|r| (0..a.len()).all(|i| a[(i + r) % a.len()] == b[i]))
    }

    /// Image under the homomorphism sending each generator to the given element.
    pub fn evaluate<G: GroupLike>(&self, images: &[G; 3]) -> G {
        let one = images[0].identity_like();
        self.syllables.iter().fold(one, |acc, &(g, e)| {
            let idx = Gen::ALL.iter().position(|&h| h == g).unwrap();
            acc.op(&images[idx].power(e))
        })
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .syllables
            .iter()
            .map(|&(g, e)| if e == 1 { g.name().to_string() } else { format!("{}^{e}", g.name()) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A group in which monodromy words can be evaluated.
pub trait GroupLike: Clone {
    fn op(&self, o: &Self) -> Self;
    fn inverse(&self) -> Self;
    fn identity_like(&self) -> Self;

    fn power(&self, e: i64) -> Self {
        let mut base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = self.identity_like();
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.op(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.op(&base);
            }
        }
        acc
    }
}

impl GroupLike for GroupWord {
    fn op(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn inverse(&self) -> Self {
        GroupWord::inverse(self)
    }
    fn identity_like(&self) -> Self {
        GroupWord::identity()
    }
    fn power(&self, e: i64) -> Self {
        self.pow(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    R,
    L,
    I,
}

impl Letter {
    pub fn symbol(self) -> &'static str {
        match self {
            Letter::R => "R",
            Letter::L => "L",
            Letter::I => "i",
        }
    }
}

/// Flattened monodromy word. Adjacent equal letters are merged, zero
/// exponents dropped, and exponents of `i` reduced mod 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonodromyWord {
    letters: Vec<(Letter, i64)>,
    source: String,
}

/// Longest flattened word accepted by the parser, counting `R^e` as |e| letters.
pub const MAX_WORD_LETTERS: u64 = 100_000;

impl MonodromyWord {
    pub fn from_letters(letters: impl IntoIterator<Item = (Letter, i64)>) -> Self {
        let letters = normalize(letters.into_iter().collect());
        let source = display_letters(&letters);
        MonodromyWord { letters, source }
    }

    pub fn letters(&self) -> &[(Letter, i64)] {
        &self.letters
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Canonical text of the flattened word.
    pub fn canonical(&self) -> String {
        display_letters(&self.letters)
    }
}

impl fmt::Display for MonodromyWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical())
    }
}

fn display_letters(letters: &[(Letter, i64)]) -> String {
    if letters.is_empty() {
        return "1".into();
    }
    letters
        .iter()
        .map(|&(l, e)| if e == 1 { l.symbol().to_string() } else { format!("{}^{e}", l.symbol()) })
        .collect::<Vec<_>>()
        .join(" ")
}

fn normalize(raw: Vec<(Letter, i64)>) -> Vec<(Letter, i64)> {
    let mut out: Vec<(Letter, i64)> = Vec::with_capacity(raw.len());
    for (l, e) in raw {
        let mut cur = (l, e);
        loop {
            if cur.0 == Letter::I {
                cur.1 = cur.1.rem_euclid(2);
            }
            if cur.1 == 0 {
                break;
            }
            match out.last() {
                Some(&(prev, f)) if prev == cur.0 => {
                    out.pop();
                    cur = (prev, f + cur.1);
                }
                _ => {
                    out.push(cur);
                    break;
                }
            }
        }
    }
    out
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    budget: u64,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn err<T>(&self, at: usize, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { offset: at, message: msg.into() })
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn exponent(&mut self) -> Result<Option<i64>> {
        if self.peek() != Some(b'^') {
            return Ok(None);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let start = {
            self.skip_ws();
            self.pos
        };
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(start, "expected digits after '^'");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let Ok(v) = text.parse::<i64>() else {
            return self.err(start, "exponent out of range");
        };
        Ok(Some(if neg { -v } else { v }))
    }

    fn charge(&mut self, at: usize, n: u64) -> Result<()> {
        if n > self.budget {
            return self.err(at, format!("word longer than {MAX_WORD_LETTERS} letters"));
        }
        self.budget -= n;
        Ok(())
    }

    fn word(&mut self, nested: bool) -> Result<Vec<(Letter, i64)>> {
        let mut out = Vec::new();
        loop {
            let at = {
                self.skip_ws();
                self.pos
            };
            match self.peek() {
                None if nested => return self.err(at, "unclosed '('"),
                None | Some(b')') => break,
                Some(c @ (b'R' | b'L' | b'i')) => {
                    self.pos += 1;
                    let letter = match c {
                        b'R' => Letter::R,
                        b'L' => Letter::L,
                        _ => Letter::I,
                    };
                    let e = self.exponent()?.unwrap_or(1);
                    self.charge(at, e.unsigned_abs().max(1))?;
                    out.push((letter, e));
                }
                Some(b'(') => {
                    self.pos += 1;
                    let inner = self.word(true)?;
                    if self.peek() != Some(b')') {
                        let p = self.pos;
                        return self.err(p, "expected ')'");
                    }
                    self.pos += 1;
                    let exp_at = self.pos;
                    let e = self.exponent()?.unwrap_or(1);
                    if e == 0 {
                        return self.err(exp_at, "zero exponent on a group gives an empty word");
                    }
                    let block: Vec<(Letter, i64)> = if e > 0 {
                        inner
                    } else {
                        inner.iter().rev().map(|&(l, k)| (l, -k)).collect()
                    };
                    let reps = e.unsigned_abs();
                    let block_len: u64 = block.iter().map(|(_, k)| k.unsigned_abs().max(1)).sum();
                    self.charge(at, block_len.saturating_mul(reps.saturating_sub(1)))?;
                    for _ in 0..reps {
                        out.extend_from_slice(&block);
                    }
                }
                Some(c) => {
                    return self.err(at, format!("unexpected character '{}'", c as char));
                }
            }
        }
        if out.is_empty() {
            let p = self.pos;
            return self.err(p, "expected R, L, i or '('");
        }
        Ok(out)
    }
}

pub fn parse_monodromy(text: &str) -> Result<MonodromyWord> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, budget: MAX_WORD_LETTERS };
    let raw = p.word(false)?;
    if let Some(c) = p.peek() {
        let at = p.pos;
        return p.err(at, format!("unexpected character '{}'", c as char));
    }
    Ok(MonodromyWord { letters: normalize(raw), source: text.to_string() })
}

/// Images (X, Y) of x, y under φ = g₁∘…∘g_m, starting from the given pair.
///
/// Letters are consumed left to right, each substituting into the current
/// images: R^e: (X, Y X^e), L^e: (X Y^e, Y), i: (X⁻¹, Y⁻¹).
pub fn apply_monodromy<G: GroupLike>(w: &MonodromyWord, x: &G, y: &G) -> (G, G) {
    let (mut a, mut b) = (x.clone(), y.clone());
    for &(l, e) in &w.letters {
        match l {
            Letter::R => b = b.op(&a.power(e)),
            Letter::L => a = a.op(&b.power(e)),
            Letter::I => {
                if e % 2 != 0 {
                    a = a.inverse();
                    b = b.inverse();
                }
            }
        }
    }
    (a, b)
}

pub fn word_to_automorphism(w: &MonodromyWord) -> (GroupWord, GroupWord) {
    apply_monodromy(w, &GroupWord::generator(Gen::X), &GroupWord::generator(Gen::Y))
}

/// R₁ = t x t⁻¹ φ(x)⁻¹ and R₂ = t y t⁻¹ φ(y)⁻¹.
pub fn relators(w: &MonodromyWord) -> (GroupWord, GroupWord) {
    let (px, py) = word_to_automorphism(w);
    relators_from_images(&px, &py)
}

pub fn relators_from_images(px: &GroupWord, py: &GroupWord) -> (GroupWord, GroupWord) {
    let t = GroupWord::generator(Gen::T);
    let conj = |g: Gen| t.mul(&GroupWord::generator(g)).mul(&t.inverse());
    (conj(Gen::X).mul(&px.inverse()), conj(Gen::Y).mul(&py.inverse()))
}

/// Element of the integral group ring Z[F₃].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: BTreeMap<GroupWord, i64>,
}

pub type FoxDerivative = GroupRingElement;

impl GroupRingElement {
    pub fn zero() -> Self {
        GroupRingElement::default()
    }

    pub fn word(w: GroupWord) -> Self {
        let mut e = GroupRingElement::zero();
        e.add_term(w, 1);
        e
    }

    pub fn one() -> Self {
        GroupRingElement::word(GroupWord::identity())
    }

    pub fn add_term(&mut self, w: GroupWord, c: i64) {
        if c == 0 {
            return;
        }
        let v = self.terms.get(&w).copied().unwrap_or(0) + c;
        if v == 0 {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, v);
        }
    }

    pub fn terms(&self) -> &BTreeMap<GroupWord, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), *c);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut r = GroupRingElement::zero();
        for (w, c) in &self.terms {
            r.add_term(w.clone(), c * k);
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = GroupRingElement::zero();
        for (u, a) in &self.terms {
            for (v, b) in &o.terms {
                r.add_term(u.mul(v), a * b);
            }
        }
        r
    }

    /// Sum of c·image(w) in a target ring.
    pub fn map_to<R>(&self, image: impl Fn(&GroupWord) -> R, scale: impl Fn(&R, i64) -> R, zero: R) -> R
    where
        R: std::ops::Add<Output = R>,
    {
        self.terms.iter().fold(zero, |acc, (w, c)| acc + scale(&image(w), *c))
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            let sign = if *c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let body = if mag == 1 { w.to_string() } else { format!("{mag}*{w}") };
            if first {
                write!(f, "{sign}{body}")?;
            } else {
                write!(f, " {sign} {body}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// ∂w/∂g with ∂(uv) = ∂u + u ∂v, ∂g = 1, ∂g⁻¹ = −g⁻¹.
pub fn fox_derivative(w: &GroupWord, g: Gen) -> FoxDerivative {
    let mut out = GroupRingElement::zero();
    let mut prefix = GroupWord::identity();
    for &(h, e) in w.syllables() {
        if h == g {
            if e > 0 {
                for k in 0..e {
                    out.add_term(prefix.mul(&GroupWord::from_syllables([(g, k)])), 1);
                }
            } else {
                for k in 1..=-e {
                    out.add_term(prefix.mul(&GroupWord::from_syllables([(g, -k)])), -1);
                }
            }
        }
        prefix = prefix.mul(&GroupWord::from_syllables([(h, e)]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gw(s: &[(Gen, i64)]) -> GroupWord {
        GroupWord::from_syllables(s.iter().copied())
    }

    use Gen::{T, X, Y};

    #[test]
    fn parse_examples() {
        let w = parse_monodromy("R L^4").unwrap();
        assert_eq!(w.letters(), &[(Letter::R, 1), (Letter::L, 4)]);
        let w = parse_monodromy("(RL)^2").unwrap();
        assert_eq!(w.letters(), &[(Letter::R, 1), (Letter::L, 1), (Letter::R, 1), (Letter::L, 1)]);
        let w = parse_monodromy("i L^2 R^2").unwrap();
        assert_eq!(w.letters(), &[(Letter::I, 1), (Letter::L, 2), (Letter::R, 2)]);
        assert_eq!(parse_monodromy("(RL)^3").unwrap().letters().len(), 6);
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!(parse_monodromy("R R^2 L").unwrap().letters(), &[(Letter::R, 3), (Letter::L, 1)]);
        assert_eq!(parse_monodromy("i^3 R").unwrap().letters(), &[(Letter::I, 1), (Letter::R, 1)]);
        assert_eq!(parse_monodromy("R i^2 R").unwrap().letters(), &[(Letter::R, 2)]);
        assert_eq!(parse_monodromy("R^-2").unwrap().letters(), &[(Letter::R, -2)]);
        assert_eq!(
            parse_monodromy("(R L^2)^-1").unwrap().letters(),
            &[(Letter::L, -2), (Letter::R, -1)]
        );
        assert!(parse_monodromy("R^0").unwrap().is_identity());
        assert_eq!(parse_monodromy(" ( R  L ) ^ 2 ").unwrap().canonical(), "R L R L");
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let off = |s: &str| match parse_monodromy(s) {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("expected a parse error for {s:?}, got {other:?}"),
        };
        assert_eq!(off(""), 0);
        assert_eq!(off("R x"), 2);
        assert_eq!(off("(RL)^0"), 4);
        assert_eq!(off("(RL"), 3);
        assert_eq!(off("R)"), 1);
        assert_eq!(off("R^"), 2);
        assert_eq!(off("()"), 1);
        assert!(matches!(parse_monodromy("(RL)^99999999"), Err(Error::Parse { .. })));
    }

    #[test]
    fn automorphism_examples() {
        let (px, py) = word_to_automorphism(&parse_monodromy("RL").unwrap());
        assert_eq!(px, gw(&[(X, 1), (Y, 1), (X, 1)]));
        assert_eq!(py, gw(&[(Y, 1), (X, 1)]));
        let (px, py) = word_to_automorphism(&parse_monodromy("i").unwrap());
        assert_eq!((px, py), (gw(&[(X, -1)]), gw(&[(Y, -1)])));
    }

    #[test]
    fn census_word_matches_printed_presentation_up_to_conjugacy() {
        let (px, py) = word_to_automorphism(&parse_monodromy("i L^2 R^2").unwrap());
        let printed_x = gw(&[(Y, -1), (X, -1), (Y, -1)]);
        let printed_y = gw(&[(Y, 1), (X, 1)]).mul(&printed_x.pow(3));
        assert_eq!(px.abelianization(), printed_x.abelianization());
        assert_eq!(py.abelianization(), printed_y.abelianization());
        assert!(px.is_conjugate_to(&printed_x));
        assert!(py.is_conjugate_to(&printed_y));
    }

    #[test]
    fn relator_examples() {
        let (r1, _) = relators(&parse_monodromy("RL").unwrap());
        assert_eq!(r1, gw(&[(T, 1), (X, 1), (T, -1), (X, -1), (Y, -1), (X, -1)]));
        let (_, r2) = relators(&parse_monodromy("R").unwrap());
        assert_eq!(r2, gw(&[(T, 1), (Y, 1), (T, -1), (X, -1), (Y, -1)]));
        let (r1, _) = relators(&parse_monodromy("R^0").unwrap());
        assert_eq!(r1, gw(&[(T, 1), (X, 1), (T, -1), (X, -1)]));
    }

    #[test]
    fn fox_examples() {
        let xy = gw(&[(X, 1), (Y, 1)]);
        assert_eq!(fox_derivative(&xy, X), GroupRingElement::one());
        assert_eq!(fox_derivative(&xy, Y), GroupRingElement::word(gw(&[(X, 1)])));
        assert_eq!(fox_derivative(&gw(&[(X, -1)]), X), GroupRingElement::word(gw(&[(X, -1)])).scale(-1));
        assert_eq!(fox_derivative(&xy, T), GroupRingElement::zero());
    }

    fn letter_matrix(l: Letter, e: i64) -> [[i64; 2]; 2] {
        let base = match l {
            Letter::R => [[1, 1], [0, 1]],
            Letter::L => [[1, 0], [1, 1]],
            Letter::I => [[-1, 0], [0, -1]],
        };
        let inv = |m: [[i64; 2]; 2]| [[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]];
        let b = if e < 0 { inv(base) } else { base };
        let mut acc = [[1, 0], [0, 1]];
        for _ in 0..e.unsigned_abs() {
            acc = mul2(acc, b);
        }
        acc
    }

    fn mul2(a: [[i64; 2]; 2], b: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
        [
            [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
            [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
        ]
    }

    fn monodromy_words() -> impl Strategy<Value = MonodromyWord> {
        proptest::collection::vec((0u8..3, -3i64..=3), 0..10).prop_map(|v| {
            MonodromyWord::from_letters(v.into_iter().map(|(l, e)| {
                (
                    match l {
                        0 => Letter::R,
                        1 => Letter::L,
                        _ => Letter::I,
                    },
                    e,
                )
            }))
        })
    }

    fn group_words() -> impl Strategy<Value = GroupWord> {
        proptest::collection::vec((0usize..3, -3i64..=3), 0..12)
            .prop_map(|v| GroupWord::from_syllables(v.into_iter().map(|(g, e)| (Gen::ALL[g], e))))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn abelianization_matches_matrix_columns(w in monodromy_words()) {
            let m = w.letters().iter().fold([[1, 0], [0, 1]], |acc, &(l, e)| mul2(acc, letter_matrix(l, e)));
            let (px, py) = word_to_automorphism(&w);
            let ax = px.abelianization();
            let ay = py.abelianization();
            prop_assert_eq!([ax[0], ax[1]], [m[0][0], m[1][0]]);
            prop_assert_eq!([ay[0], ay[1]], [m[0][1], m[1][1]]);
        }

        #[test]
        fn fox_fundamental_identity(w in group_words()) {
            let mut rhs = GroupRingElement::zero();
            for g in Gen::ALL {
                let gm1 = GroupRingElement::word(GroupWord::generator(g)).sub(&GroupRingElement::one());
                rhs = rhs.add(&fox_derivative(&w, g).mul(&gm1));
            }
            let lhs = GroupRingElement::word(w.clone()).sub(&GroupRingElement::one());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn reduction_is_idempotent(v in proptest::collection::vec((0usize..3, -3i64..=3), 0..16)) {
            let raw_len: u64 = v.iter().map(|(_, e)| e.unsigned_abs()).sum();
            let w = GroupWord::from_syllables(v.iter().map(|&(g, e)| (Gen::ALL[g], e)));
            let again = GroupWord::from_syllables(w.syllables().iter().copied());
            prop_assert_eq!(&again, &w);
            prop_assert!(w.len() <= raw_len);
            for pair in w.syllables().windows(2) {
                prop_assert!(pair[0].0 != pair[1].0);
            }
            prop_assert!(w.syllables().iter().all(|(_, e)| *e != 0));
        }

        #[test]
        fn parse_round_trips_canonical_text(w in monodromy_words()) {
            prop_assume!(!w.is_identity());
            let back = parse_monodromy(&w.canonical()).unwrap();
            prop_assert_eq!(back.letters(), w.letters());
        }
    }
}
