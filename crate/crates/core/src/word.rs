//! Free-group words over the indexed alphabets used throughout the crate.
//!
//! A [`Word`] is always freely reduced: every constructor cancels adjacent
//! inverse pairs, so structural equality is equality in the free group.
//!
//! Symbols carrying a coset index `m` (the `a`, `b`, `f`, `g` families and
//! custom families) can be shifted with [`Word::shift`]. A word whose
//! `m`-indices are read as offsets from a free parameter is a *template*;
//! instantiating it at `m` is just `shift(m)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A generator of one of the indexed families.
///
/// The derived ordering is lexicographic on (family, indices) and gives the
/// canonical column order of relation matrices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Symbol {
    /// Braid generator `σ_i`.
    Sigma(u32),
    /// Permutation generator `ρ_i`.
    Rho(u32),
    /// `a(m)`.
    A(i64),
    /// `b(m, ε)`.
    B(i64, u8),
    /// `c(l)`, `l >= 3`.
    C(u32),
    /// `f(m, ε)`; after the `f(m,1)` elimination only `ε = 0` survives.
    F(i64, u8),
    /// `g(m, l)`, `l >= 3`.
    G(i64, u32),
    /// A user family with one coset index.
    Custom(String, i64),
}

/// Family selector used by exponent sums and family-wide operations.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    Sigma,
    Rho,
    A,
    B,
    C,
    F,
    G,
    Custom(String),
}

impl Symbol {
    pub fn family(&self) -> Family {
        match self {
            Symbol::Sigma(_) => Family::Sigma,
            Symbol::Rho(_) => Family::Rho,
            Symbol::A(_) => Family::A,
            Symbol::B(..) => Family::B,
            Symbol::C(_) => Family::C,
            Symbol::F(..) => Family::F,
            Symbol::G(..) => Family::G,
            Symbol::Custom(name, _) => Family::Custom(name.clone()),
        }
    }

    /// The coset index `m`, for families that carry one.
    pub fn m_index(&self) -> Option<i64> {
        match *self {
            Symbol::A(m) | Symbol::B(m, _) | Symbol::F(m, _) | Symbol::G(m, _) => Some(m),
            Symbol::Custom(_, m) => Some(m),
            Symbol::Sigma(_) | Symbol::Rho(_) | Symbol::C(_) => None,
        }
    }

    /// Shift the coset index by `k`; symbols without one are returned unchanged.
    pub fn shift(&self, k: i64) -> Symbol {
        match self {
            Symbol::A(m) => Symbol::A(m + k),
            Symbol::B(m, e) => Symbol::B(m + k, *e),
            Symbol::F(m, e) => Symbol::F(m + k, *e),
            Symbol::G(m, l) => Symbol::G(m + k, *l),
            Symbol::Custom(name, m) => Symbol::Custom(name.clone(), m + k),
            other => other.clone(),
        }
    }

    /// If `self == pattern.shift(k)` for some `k`, return that `k`.
    pub fn match_shifted(&self, pattern: &Symbol) -> Option<i64> {
        match (self.m_index(), pattern.m_index()) {
            (Some(m), Some(p)) => {
                let k = m - p;
                (pattern.shift(k) == *self).then_some(k)
            }
            (None, None) => (self == pattern).then_some(0),
            _ => None,
        }
    }

    pub fn is_braid_generator(&self) -> bool {
        matches!(self, Symbol::Sigma(_) | Symbol::Rho(_))
    }

    /// Check the per-family index constraints.
    pub fn validate(&self) -> Result<()> {
        let ok = match self {
            Symbol::Sigma(i) | Symbol::Rho(i) => *i >= 1,
            Symbol::B(_, e) | Symbol::F(_, e) => *e <= 1,
            Symbol::C(l) | Symbol::G(_, l) => *l >= 3,
            Symbol::A(_) | Symbol::Custom(..) => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Parse(format!("index out of range in {self}")))
        }
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, template: bool) -> fmt::Result {
        let m = |x: i64| -> String {
            if !template {
                x.to_string()
            } else if x == 0 {
                "m".to_string()
            } else if x > 0 {
                format!("m+{x}")
            } else {
                format!("m{x}")
            }
        };
        match self {
            Symbol::Sigma(i) => write!(f, "s{i}"),
            Symbol::Rho(i) => write!(f, "r{i}"),
            Symbol::A(i) => write!(f, "a({})", m(*i)),
            Symbol::B(i, e) => write!(f, "b({},{e})", m(*i)),
            Symbol::C(l) => write!(f, "c({l})"),
            Symbol::F(i, e) => write!(f, "f({},{e})", m(*i)),
            Symbol::G(i, l) => write!(f, "g({},{l})", m(*i)),
            Symbol::Custom(name, i) => write!(f, "{name}({})", m(*i)),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, false)
    }
}

/// A symbol raised to `+1` or `-1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub symbol: Symbol,
    pub inverse: bool,
}

impl Letter {
    pub fn new(symbol: Symbol, inverse: bool) -> Self {
        Letter { symbol, inverse }
    }

    pub fn pos(symbol: Symbol) -> Self {
        Letter { symbol, inverse: false }
    }

    pub fn neg(symbol: Symbol) -> Self {
        Letter { symbol, inverse: true }
    }

    pub fn inv(&self) -> Letter {
        Letter {
            symbol: self.symbol.clone(),
            inverse: !self.inverse,
        }
    }

    pub fn exponent(&self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn cancels(&self, other: &Letter) -> bool {
        self.symbol == other.symbol && self.inverse != other.inverse
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol)?;
        if self.inverse {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// Cancel adjacent inverse pairs in one left-to-right stack pass.
pub fn free_reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for l in letters {
        if out.last().is_some_and(|top| top.cancels(l)) {
            out.pop();
        } else {
            out.push(l.clone());
        }
    }
    out
}

/// A freely reduced word.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<Letter>,
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shortlex: shorter words first, then letter by letter.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word {
            letters: free_reduce(&letters),
        }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub fn gen(symbol: Symbol) -> Self {
        Word {
            letters: vec![Letter::pos(symbol)],
        }
    }

    pub fn gen_inv(symbol: Symbol) -> Self {
        Word {
            letters: vec![Letter::neg(symbol)],
        }
    }

    /// `symbol^k`, spelled with `|k|` letters.
    pub fn power_of(symbol: Symbol, k: i64) -> Self {
        let l = Letter::new(symbol, k < 0);
        Word {
            letters: vec![l; k.unsigned_abs() as usize],
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(Letter::inv).collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Word::new(letters)
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend(base.letters.iter().cloned());
        }
        Word::new(letters)
    }

    /// `by · self · by⁻¹`.
    pub fn conjugate(&self, by: &Word) -> Word {
        let mut letters = by.letters.clone();
        letters.extend(self.letters.iter().cloned());
        letters.extend(by.inverse().letters);
        Word::new(letters)
    }

    pub fn shift(&self, k: i64) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .map(|l| Letter::new(l.symbol.shift(k), l.inverse))
                .collect(),
        }
    }

    pub fn contains(&self, symbol: &Symbol) -> bool {
        self.letters.iter().any(|l| &l.symbol == symbol)
    }

    /// Number of letters (of either sign) spelled with `symbol`.
    pub fn occurrences(&self, symbol: &Symbol) -> usize {
        self.letters.iter().filter(|l| &l.symbol == symbol).count()
    }

    pub fn exponent_sum(&self, family: &Family) -> i64 {
        self.letters
            .iter()
            .filter(|l| &l.symbol.family() == family)
            .map(Letter::exponent)
            .sum()
    }

    pub fn exponent_sum_of(&self, symbol: &Symbol) -> i64 {
        self.letters
            .iter()
            .filter(|l| &l.symbol == symbol)
            .map(Letter::exponent)
            .sum()
    }

    /// Exponent sum of every symbol occurring in the word.
    pub fn exponent_vector(&self) -> BTreeMap<Symbol, i64> {
        let mut out = BTreeMap::new();
        for l in &self.letters {
            *out.entry(l.symbol.clone()).or_insert(0) += l.exponent();
        }
        out
    }

    /// Distinct symbols, sorted.
    pub fn symbols(&self) -> Vec<Symbol> {
        let mut s: Vec<Symbol> = self.letters.iter().map(|l| l.symbol.clone()).collect();
        s.sort();
        s.dedup();
        s
    }

    /// Smallest and largest coset index occurring in the word.
    pub fn m_span(&self) -> Option<(i64, i64)> {
        let mut it = self.letters.iter().filter_map(|l| l.symbol.m_index());
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), m| (lo.min(m), hi.max(m))))
    }

    /// Replace every occurrence of `target` by `replacement` (inverted for
    /// inverse letters).
    pub fn substitute(&self, target: &Symbol, replacement: &Word) -> Result<Word> {
        if replacement.contains(target) {
            return Err(Error::CyclicSubstitution(target.clone()));
        }
        let inv = replacement.inverse();
        let mut letters = Vec::with_capacity(self.len());
        for l in &self.letters {
            if &l.symbol == target {
                let r = if l.inverse { &inv } else { replacement };
                letters.extend(r.letters.iter().cloned());
            } else {
                letters.push(l.clone());
            }
        }
        Ok(Word::new(letters))
    }

    /// Apply a family-wide rule `target(m+k) ↦ replacement.shift(k)`.
    pub fn apply_rule(&self, rule: &ShiftRule) -> Word {
        let mut letters = Vec::with_capacity(self.len());
        for l in &self.letters {
            match l.symbol.match_shifted(&rule.target) {
                Some(k) => {
                    let r = rule.replacement.shift(k);
                    let r = if l.inverse { r.inverse() } else { r };
                    letters.extend(r.letters);
                }
                None => letters.push(l.clone()),
            }
        }
        Word::new(letters)
    }

    /// Replace every letter by an arbitrary word; the result is reduced.
    pub fn map_letters(&self, mut f: impl FnMut(&Letter) -> Word) -> Word {
        let mut letters = Vec::with_capacity(self.len());
        for l in &self.letters {
            letters.extend(f(l).letters);
        }
        Word::new(letters)
    }

    /// Strip letters that cancel cyclically (`x w x⁻¹ -> w`).
    pub fn cyclically_reduced(&self) -> Word {
        let l = &self.letters;
        let mut i = 0;
        let mut j = l.len();
        while j >= i + 2 && l[i].cancels(&l[j - 1]) {
            i += 1;
            j -= 1;
        }
        Word {
            letters: l[i..j].to_vec(),
        }
    }

    pub fn rotate(&self, k: usize) -> Word {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        Word { letters }
    }

    /// Write the word with `m`-indices rendered as offsets from `m`.
    pub fn template_display(&self) -> TemplateDisplay<'_> {
        TemplateDisplay(self)
    }

    /// Parse the textual word syntax (`r1 s2 s1^-1 a(0)`), with integer indices only.
    pub fn parse(s: &str) -> Result<Word> {
        parse_word(s, &[])
    }
}

impl Mul for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

impl Mul for Word {
    type Output = Word;
    fn mul(self, rhs: Word) -> Word {
        self.concat(&rhs)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word::new(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

pub struct TemplateDisplay<'a>(&'a Word);

impl fmt::Display for TemplateDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.0.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            l.symbol.fmt_with(f, true)?;
            if l.inverse {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// Family-wide substitution `target(m) ↦ replacement(m)`, where the
/// replacement's coset indices are offsets from the target's.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftRule {
    pub target: Symbol,
    pub replacement: Word,
}

impl ShiftRule {
    /// Build a rule; rejects replacements that mention the target family at
    /// any shift.
    pub fn new(target: Symbol, replacement: Word) -> Result<Self> {
        if replacement
            .letters()
            .iter()
            .any(|l| l.symbol.match_shifted(&target).is_some())
        {
            return Err(Error::CyclicSubstitution(target));
        }
        Ok(ShiftRule { target, replacement })
    }

    pub fn apply(&self, w: &Word) -> Word {
        w.apply_rule(self)
    }
}

/// Substitute in a template and in its instantiations alike: a template is
/// a word whose coset indices are offsets, so this is [`Word::apply_rule`].
pub fn substitute_parametric(template: &Word, rule: &ShiftRule) -> Word {
    template.apply_rule(rule)
}

// ---------------------------------------------------------------------------
// Parsing

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
    vars: &'a [(char, i64)],
    saw_m: bool,
}

impl Cursor<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!(
            "{msg} at byte {} in `{}`",
            self.pos,
            String::from_utf8_lossy(self.s)
        ))
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.pos;
        if self.peek() == Some(b'-') || self.peek() == Some(b'+') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.err("expected integer"))
    }

    /// `int | var | var+int | var-int`
    fn expr(&mut self) -> Result<i64> {
        self.skip_ws();
        let base = match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {
                self.pos += 1;
                let v = c as char;
                if v == 'm' {
                    self.saw_m = true;
                }
                match self.vars.iter().find(|(name, _)| *name == v) {
                    Some((_, value)) => *value,
                    None if v == 'm' => 0,
                    None => return Err(self.err(&format!("unbound variable `{v}`"))),
                }
            }
            _ => return self.int(),
        };
        self.skip_ws();
        match self.peek() {
            Some(b'+') | Some(b'-') => {
                let off = self.int()?;
                Ok(base + off)
            }
            _ => Ok(base),
        }
    }

    fn args(&mut self) -> Result<Vec<i64>> {
        if !self.eat(b'(') {
            return Err(self.err("expected `(`"));
        }
        let mut out = vec![self.expr()?];
        loop {
            self.skip_ws();
            if self.eat(b',') {
                out.push(self.expr()?);
            } else if self.eat(b')') {
                return Ok(out);
            } else {
                return Err(self.err("expected `,` or `)`"));
            }
        }
    }

    fn strand(&mut self) -> Result<u32> {
        let v = if self.peek() == Some(b'(') {
            let a = self.args()?;
            if a.len() != 1 {
                return Err(self.err("expected one strand index"));
            }
            a[0]
        } else {
            self.int()?
        };
        u32::try_from(v).map_err(|_| self.err("negative strand index"))
    }

    fn symbol(&mut self) -> Result<Symbol> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic() || c == b'_') {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap_or("").to_string();
        let eps = |v: i64, cur: &Self| -> Result<u8> {
            u8::try_from(v)
                .ok()
                .filter(|e| *e <= 1)
                .ok_or_else(|| cur.err("epsilon must be 0 or 1"))
        };
        let sym = match name.as_str() {
            "s" => Symbol::Sigma(self.strand()?),
            "r" => Symbol::Rho(self.strand()?),
            "c" => Symbol::C(self.strand()?),
            "a" | "b" | "f" | "g" => {
                let a = self.args()?;
                match (name.as_str(), a.as_slice()) {
                    ("a", [m]) => Symbol::A(*m),
                    ("b", [m, e]) => Symbol::B(*m, eps(*e, self)?),
                    ("f", [m]) => Symbol::F(*m, 0),
                    ("f", [m, e]) => Symbol::F(*m, eps(*e, self)?),
                    ("g", [m, l]) => Symbol::G(*m, u32::try_from(*l).map_err(|_| self.err("negative strand index"))?),
                    _ => return Err(self.err("wrong number of indices")),
                }
            }
            "" => return Err(self.err("expected symbol")),
            _ => {
                let a = self.args()?;
                if a.len() != 1 {
                    return Err(self.err("custom families take one index"));
                }
                Symbol::Custom(name, a[0])
            }
        };
        sym.validate()?;
        Ok(sym)
    }

    fn word(&mut self) -> Result<Vec<Letter>> {
        let mut letters = Vec::new();
        loop {
            self.skip_ws();
            if self.peek().is_none() {
                return Ok(letters);
            }
            if self.eat(b'1') {
                // the identity may be spelled `1`
                continue;
            }
            let sym = self.symbol()?;
            let mut power = 1i64;
            if self.eat(b'^') {
                power = self.int()?;
            }
            let l = Letter::new(sym, power < 0);
            for _ in 0..power.unsigned_abs() {
                letters.push(l.clone());
            }
        }
    }
}

/// Parse a word, resolving single-letter index variables from `vars`.
/// An unbound `m` stands for offset 0, so `b(m+1,0)` parses as a template.
pub fn parse_word(s: &str, vars: &[(char, i64)]) -> Result<Word> {
    Ok(Word::new(parse_letters(s, vars)?.0))
}

/// Parse without reducing; also reports whether the variable `m` appeared.
pub fn parse_letters(s: &str, vars: &[(char, i64)]) -> Result<(Vec<Letter>, bool)> {
    let mut cur = Cursor {
        s: s.as_bytes(),
        pos: 0,
        vars,
        saw_m: false,
    };
    let letters = cur.word()?;
    Ok((letters, cur.saw_m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn cancellation() {
        assert_eq!(w("s1 s1^-1"), Word::empty());
        assert_eq!(w("r2 s3 s3^-1 r2"), w("r2 r2"));
        assert_eq!(w("r2 s3 s3^-1 r2").len(), 2);
    }

    #[test]
    fn inverse_and_conjugate() {
        assert_eq!(w("s1 r2").inverse(), w("r2^-1 s1^-1"));
        assert_eq!(Word::empty().inverse(), Word::empty());
        assert_eq!(w("s2").conjugate(&w("s1")), w("s1 s2 s1^-1"));
        assert_eq!(w("s2 r1").conjugate(&Word::empty()), w("s2 r1"));
    }

    #[test]
    fn substitution() {
        let word = w("b(0,1) c(3)");
        let r = w("f(0,0) a(0) f(1,0)^-1");
        assert_eq!(
            word.substitute(&Symbol::B(0, 1), &r).unwrap(),
            w("f(0,0) a(0) f(1,0)^-1 c(3)")
        );
        assert_eq!(word.substitute(&Symbol::A(7), &w("c(3)")).unwrap(), word);
        assert_eq!(
            word.substitute(&Symbol::C(3), &w("c(3) a(0)")),
            Err(Error::CyclicSubstitution(Symbol::C(3)))
        );
    }

    #[test]
    fn parametric_rule() {
        let rule = ShiftRule::new(Symbol::B(0, 0), parse_word("f(m,0)^-1 f(m+1,0)", &[]).unwrap()).unwrap();
        let t = parse_word("b(m,0)", &[]).unwrap();
        assert_eq!(substitute_parametric(&t, &rule).shift(2), w("f(2,0)^-1 f(3,0)"));
        let id = ShiftRule {
            target: Symbol::A(0),
            replacement: Word::gen(Symbol::A(0)),
        };
        let t = parse_word("a(m) b(m+1,0) a(m+2)^-1", &[]).unwrap();
        assert_eq!(t.apply_rule(&id), t);
        assert!(ShiftRule::new(Symbol::F(0, 0), parse_word("f(m+1,0)", &[]).unwrap()).is_err());
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(w("s1 s2 s1^-1").exponent_sum(&Family::Sigma), 1);
        assert_eq!(w("r1 r2 r1").exponent_sum(&Family::Rho), 3);
    }

    #[test]
    fn display_round_trip() {
        let src = "r1 s2 s1^-1 r1 a(-3) b(2,1)^-1 c(4) f(0,1) g(-1,3) x(5)";
        let word = w(src);
        assert_eq!(word.to_string(), src);
        assert_eq!(w(&word.to_string()), word);
        let t = parse_word("b(m+1,0) f(m-2,0)^-1 c(3)", &[]).unwrap();
        assert_eq!(t.template_display().to_string(), "b(m+1,0) f(m-2,0)^-1 c(3)");
    }

    #[test]
    fn parse_variables_and_powers() {
        let word = parse_word("g(m+1,i) a(m)^-1 g(m,i) f(m)^3", &[('m', 2), ('i', 4)]).unwrap();
        assert_eq!(word, w("g(3,4) a(2)^-1 g(2,4) f(2,0) f(2,0) f(2,0)"));
        assert!(Word::parse("b(0,2)").is_err());
        assert!(Word::parse("g(0,2)").is_err());
        assert!(Word::parse("q").is_err());
        assert_eq!(Word::parse("1").unwrap(), Word::empty());
    }

    #[test]
    fn cyclic_reduction() {
        assert_eq!(w("a(0) b(0,0) c(3) a(0)^-1").cyclically_reduced(), w("b(0,0) c(3)"));
        assert_eq!(w("a(0) a(0)").cyclically_reduced(), w("a(0) a(0)"));
    }
}
