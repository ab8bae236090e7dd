//! Presentations: the standard ones of `VBₙ` and `WBₙ`, the data model
//! shared with the derived subgroup presentations, window instantiation and
//! the text format.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{parse_letters, Letter, Symbol, Word};

/// One instance of the relator families `r₁ … r₈`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RelatorKind {
    /// `σᵢσⱼσᵢ⁻¹σⱼ⁻¹`, `i + 1 < j`.
    R1 { i: u32, j: u32 },
    /// `σᵢσᵢ₊₁σᵢσᵢ₊₁⁻¹σᵢ⁻¹σᵢ₊₁⁻¹`.
    R2 { i: u32 },
    /// `ρᵢ²`.
    R3 { i: u32 },
    /// `ρᵢρⱼρᵢρⱼ`, `i + 1 < j`.
    R4 { i: u32, j: u32 },
    /// `(ρᵢρᵢ₊₁)³`.
    R5 { i: u32 },
    /// `σᵢρⱼσᵢ⁻¹ρⱼ`, `|i − j| > 1`.
    R6 { i: u32, j: u32 },
    /// `ρᵢρᵢ₊₁σᵢρᵢ₊₁ρᵢσᵢ₊₁⁻¹`.
    R7 { i: u32 },
    /// `ρᵢσᵢ₊₁σᵢρᵢ₊₁σᵢ⁻¹σᵢ₊₁⁻¹` (welded only).
    R8 { i: u32 },
}

fn s(i: u32) -> Letter {
    Letter::pos(Symbol::Sigma(i))
}
fn si(i: u32) -> Letter {
    Letter::neg(Symbol::Sigma(i))
}
fn r(i: u32) -> Letter {
    Letter::pos(Symbol::Rho(i))
}

impl RelatorKind {
    pub fn word(&self) -> Word {
        use RelatorKind::*;
        let letters = match *self {
            R1 { i, j } => vec![s(i), s(j), si(i), si(j)],
            R2 { i } => vec![s(i), s(i + 1), s(i), si(i + 1), si(i), si(i + 1)],
            R3 { i } => vec![r(i), r(i)],
            R4 { i, j } => vec![r(i), r(j), r(i), r(j)],
            R5 { i } => (0..3).flat_map(|_| [r(i), r(i + 1)]).collect(),
            R6 { i, j } => vec![s(i), r(j), si(i), r(j)],
            R7 { i } => vec![r(i), r(i + 1), s(i), r(i + 1), r(i), si(i + 1)],
            R8 { i } => vec![r(i), s(i + 1), s(i), r(i + 1), si(i), si(i + 1)],
        };
        Word::new(letters)
    }

    pub fn family(&self) -> &'static str {
        use RelatorKind::*;
        match self {
            R1 { .. } => "r1",
            R2 { .. } => "r2",
            R3 { .. } => "r3",
            R4 { .. } => "r4",
            R5 { .. } => "r5",
            R6 { .. } => "r6",
            R7 { .. } => "r7",
            R8 { .. } => "r8",
        }
    }

    /// Largest strand index used.
    pub fn max_strand(&self) -> u32 {
        use RelatorKind::*;
        match *self {
            R1 { i, j } | R4 { i, j } | R6 { i, j } => i.max(j),
            R3 { i } => i,
            R2 { i } | R5 { i } | R7 { i } | R8 { i } => i + 1,
        }
    }
}

impl fmt::Display for RelatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use RelatorKind::*;
        match *self {
            R1 { i, j } | R4 { i, j } | R6 { i, j } => write!(f, "{}(i={i},j={j})", self.family()),
            R2 { i } | R3 { i } | R5 { i } | R7 { i } | R8 { i } => write!(f, "{}(i={i})", self.family()),
        }
    }
}

/// All relator instances of `VBₙ` (and `WBₙ` when `welded`), in family order.
pub fn relator_instances(n: u32, welded: bool) -> Result<Vec<RelatorKind>> {
    if n < 2 {
        return Err(Error::BadRank(n));
    }
    use RelatorKind::*;
    let top = n - 1;
    let far_pairs = || (1..=top).flat_map(move |i| (i + 2..=top).map(move |j| (i, j)));
    let mut out = Vec::new();
    out.extend(far_pairs().map(|(i, j)| R1 { i, j }));
    out.extend((1..top).map(|i| R2 { i }));
    out.extend((1..=top).map(|i| R3 { i }));
    out.extend(far_pairs().map(|(i, j)| R4 { i, j }));
    out.extend((1..top).map(|i| R5 { i }));
    out.extend(
        (1..=top)
            .flat_map(|i| (1..=top).map(move |j| (i, j)))
            .filter(|(i, j)| i.abs_diff(*j) > 1)
            .map(|(i, j)| R6 { i, j }),
    );
    out.extend((1..top).map(|i| R7 { i }));
    if welded {
        out.extend((1..top).map(|i| R8 { i }));
    }
    Ok(out)
}

/// Index domain of a generator family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Domain {
    All,
    Window(i64, i64),
}

impl Domain {
    pub fn contains(&self, m: i64) -> bool {
        match *self {
            Domain::All => true,
            Domain::Window(lo, hi) => lo <= m && m <= hi,
        }
    }
}

/// A generator declaration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum GenDecl {
    Concrete(Symbol),
    /// `pattern.shift(m)` for every `m` in the domain; `pattern` has index 0.
    Family {
        pattern: Symbol,
        domain: Domain,
    },
    /// A family of which only the members with index in `keep` are
    /// generators; the others are words in them. `up` expresses
    /// `pattern` through members of smaller index, `down` through members
    /// of larger index (both templates with offsets from `m`).
    Recursive {
        pattern: Symbol,
        keep: (i64, i64),
        up: Word,
        down: Word,
    },
}

impl GenDecl {
    pub fn family(pattern: Symbol) -> Self {
        GenDecl::Family {
            pattern,
            domain: Domain::All,
        }
    }

    /// Does the declaration produce `sym` as a generator or derived member?
    pub fn covers(&self, sym: &Symbol) -> bool {
        match self {
            GenDecl::Concrete(c) => c == sym,
            GenDecl::Family { pattern, domain } => sym.match_shifted(pattern).is_some_and(|k| domain.contains(k)),
            GenDecl::Recursive { pattern, .. } => sym.match_shifted(pattern).is_some(),
        }
    }

    pub fn pattern(&self) -> &Symbol {
        match self {
            GenDecl::Concrete(s) => s,
            GenDecl::Family { pattern, .. } | GenDecl::Recursive { pattern, .. } => pattern,
        }
    }
}

/// A relator; `parametric` relators are templates in `m` standing for
/// every shift.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relator {
    pub word: Word,
    pub parametric: bool,
    pub label: String,
}

impl Relator {
    pub fn concrete(word: Word, label: impl Into<String>) -> Self {
        Relator {
            word,
            parametric: false,
            label: label.into(),
        }
    }

    pub fn template(word: Word, label: impl Into<String>) -> Self {
        let parametric = word.m_span().is_some();
        Relator {
            word,
            parametric,
            label: label.into(),
        }
    }

    /// The values of `m` at which every index lands inside `[lo, hi]`.
    pub fn instance_range(&self, lo: i64, hi: i64) -> Option<(i64, i64)> {
        if !self.parametric {
            return None;
        }
        let (a, b) = self.word.m_span()?;
        let (from, to) = (lo - a, hi - b);
        (from <= to).then_some((from, to))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub name: String,
    pub generators: Vec<GenDecl>,
    pub relators: Vec<Relator>,
}

/// Which of the two braid-like groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Group {
    /// `VBₙ`.
    Virtual,
    /// `WBₙ`, with the extra family `r₈`.
    Welded,
}

impl Group {
    pub fn presentation(self, n: u32) -> Result<Presentation> {
        braid_like(n, self == Group::Welded)
    }

    pub fn short(self) -> &'static str {
        match self {
            Group::Virtual => "VB",
            Group::Welded => "WB",
        }
    }
}

impl std::str::FromStr for Group {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "vb" | "virtual" => Ok(Group::Virtual),
            "wb" | "welded" => Ok(Group::Welded),
            _ => Err(Error::Unknown(s.to_string())),
        }
    }
}

pub fn virtual_braid_presentation(n: u32) -> Result<Presentation> {
    braid_like(n, false)
}

pub fn welded_braid_presentation(n: u32) -> Result<Presentation> {
    braid_like(n, true)
}

fn braid_like(n: u32, welded: bool) -> Result<Presentation> {
    let rels = relator_instances(n, welded)?;
    let mut generators: Vec<GenDecl> = (1..n).map(|i| GenDecl::Concrete(Symbol::Sigma(i))).collect();
    generators.extend((1..n).map(|i| GenDecl::Concrete(Symbol::Rho(i))));
    Ok(Presentation {
        name: format!("{}{n}", if welded { "WB" } else { "VB" }),
        generators,
        relators: rels
            .iter()
            .map(|k| Relator::concrete(k.word(), k.to_string()))
            .collect(),
    })
}

const MAX_RECURSION: usize = 64;

impl Presentation {
    pub fn new(name: impl Into<String>) -> Self {
        Presentation {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn is_finite(&self) -> bool {
        self.generators.iter().all(|g| matches!(g, GenDecl::Concrete(_))) && self.relators.iter().all(|r| !r.parametric)
    }

    pub fn is_declared(&self, sym: &Symbol) -> bool {
        self.generators.iter().any(|g| g.covers(sym))
    }

    /// Check that every relator symbol is declared and no declaration repeats.
    pub fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for g in &self.generators {
            let key = match g {
                GenDecl::Concrete(s) => format!("{s}"),
                other => format!("family {}", Word::gen(other.pattern().clone()).template_display()),
            };
            if !seen.insert(key.clone()) {
                return Err(Error::ShapeMismatch(format!("duplicate generator declaration {key}")));
            }
        }
        for r in &self.relators {
            for sym in r.word.symbols() {
                if !self.is_declared(&sym) {
                    return Err(Error::ShapeMismatch(format!(
                        "relator `{}` uses undeclared {sym}",
                        r.word
                    )));
                }
            }
        }
        Ok(())
    }

    /// Concrete generator symbols (families excluded), in declaration order.
    pub fn concrete_generators(&self) -> Vec<Symbol> {
        self.generators
            .iter()
            .filter_map(|g| match g {
                GenDecl::Concrete(s) => Some(s.clone()),
                _ => None,
            })
            .collect()
    }

    pub fn relator_words(&self) -> Vec<Word> {
        self.relators.iter().map(|r| r.word.clone()).collect()
    }

    /// Rewrite members of recursive families outside their kept range
    /// in terms of kept members.
    pub fn resolve_recursive(&self, w: &Word) -> Result<Word> {
        let recs: Vec<_> = self
            .generators
            .iter()
            .filter_map(|g| match g {
                GenDecl::Recursive {
                    pattern,
                    keep,
                    up,
                    down,
                } => Some((pattern, *keep, up, down)),
                _ => None,
            })
            .collect();
        if recs.is_empty() {
            return Ok(w.clone());
        }
        let mut memo: BTreeMap<Symbol, Word> = BTreeMap::new();
        resolve_word(w, &recs, &mut memo, 0)
    }

    /// The finite presentation over the window `[lo, hi]`.
    ///
    /// Family members with index in the window become generators (for
    /// recursive families: the kept members only). A relator instance is
    /// kept when its indices outside recursive families all lie in the
    /// window (templates mentioning only recursive families are taken at
    /// every `m` in the window); recursive members are then resolved into
    /// kept generators.
    pub fn instantiate(&self, lo: i64, hi: i64) -> Result<Presentation> {
        if lo > hi {
            return Err(Error::EmptyWindow(lo, hi));
        }
        let mut generators = Vec::new();
        for g in &self.generators {
            match g {
                GenDecl::Concrete(s) => {
                    if s.m_index().is_none_or(|m| lo <= m && m <= hi) {
                        generators.push(GenDecl::Concrete(s.clone()));
                    }
                }
                GenDecl::Family { pattern, domain } => {
                    for m in lo..=hi {
                        if domain.contains(m) {
                            generators.push(GenDecl::Concrete(pattern.shift(m)));
                        }
                    }
                }
                GenDecl::Recursive { pattern, keep, .. } => {
                    for m in keep.0.max(lo)..=keep.1.min(hi) {
                        generators.push(GenDecl::Concrete(pattern.shift(m)));
                    }
                }
            }
        }
        let mut relators = Vec::new();
        let recursive: Vec<&Symbol> = self
            .generators
            .iter()
            .filter_map(|g| match g {
                GenDecl::Recursive { pattern, .. } => Some(pattern),
                _ => None,
            })
            .collect();
        for r in &self.relators {
            if r.parametric {
                // Members of recursive families resolve to kept generators,
                // so only the other indices have to fit in the window.
                let free: Vec<i64> = r
                    .word
                    .letters()
                    .iter()
                    .filter(|l| !recursive.iter().any(|p| l.symbol.match_shifted(p).is_some()))
                    .filter_map(|l| l.symbol.m_index())
                    .collect();
                let range = match (free.iter().min(), free.iter().max()) {
                    (Some(&a), Some(&b)) => (lo - a <= hi - b).then_some((lo - a, hi - b)),
                    _ => Some((lo, hi)),
                };
                if let Some((from, to)) = range {
                    for m in from..=to {
                        let word = self.resolve_recursive(&r.word.shift(m))?;
                        // resolution can reach past the window
                        if word.m_span().is_none_or(|_| escapes(&word, &generators).is_none()) {
                            relators.push(Relator::concrete(word, format!("{} @ m={m}", r.label)));
                        }
                    }
                }
            } else {
                let inside = r.word.m_span().is_none_or(|(a, b)| lo <= a && b <= hi);
                if inside {
                    let word = self.resolve_recursive(&r.word)?;
                    if escapes(&word, &generators).is_none() {
                        relators.push(Relator::concrete(word, r.label.clone()));
                    }
                }
            }
        }
        Ok(Presentation {
            name: format!("{} on [{lo},{hi}]", self.name),
            generators,
            relators,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if !self.name.is_empty() {
            out.push_str(&format!("# {}\n", self.name));
        }
        let decls: Vec<String> = self
            .generators
            .iter()
            .map(|g| match g {
                GenDecl::Concrete(s) => s.to_string(),
                GenDecl::Family { pattern, domain } => {
                    let p = Word::gen(pattern.clone()).template_display().to_string();
                    match domain {
                        Domain::All => format!("{p} for m in Z"),
                        Domain::Window(a, b) => format!("{p} for m in [{a},{b}]"),
                    }
                }
                GenDecl::Recursive { pattern, keep, .. } => {
                    let p = Word::gen(pattern.clone()).template_display().to_string();
                    format!("{p} for m in Z keep [{},{}]", keep.0, keep.1)
                }
            })
            .collect();
        out.push_str(&format!("generators: {}\n", decls.join(", ")));
        for g in &self.generators {
            if let GenDecl::Recursive { pattern, up, down, .. } = g {
                let p = Word::gen(pattern.clone()).template_display().to_string();
                out.push_str(&format!("up {p} = {}\n", up.template_display()));
                out.push_str(&format!("down {p} = {}\n", down.template_display()));
            }
        }
        for r in &self.relators {
            let body = if r.parametric {
                r.word.template_display().to_string()
            } else {
                r.word.to_string()
            };
            if r.label.is_empty() {
                out.push_str(&format!("{body}\n"));
            } else {
                out.push_str(&format!("{body}  # {}\n", r.label));
            }
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Presentation> {
        let mut p = Presentation::default();
        let mut pending: BTreeMap<String, (Option<Word>, Option<Word>)> = BTreeMap::new();
        for raw in text.lines() {
            let (body, comment) = match raw.find('#') {
                Some(k) => (&raw[..k], raw[k + 1..].trim()),
                None => (raw, ""),
            };
            let body = body.trim();
            if body.is_empty() {
                if p.generators.is_empty() && p.name.is_empty() && !comment.is_empty() {
                    p.name = comment.to_string();
                }
                continue;
            }
            if let Some(list) = body.strip_prefix("generators:") {
                for item in split_top_level(list) {
                    p.generators.push(parse_decl(item)?);
                }
            } else if let Some(rest) = body.strip_prefix("up ").or_else(|| body.strip_prefix("down ")) {
                let (lhs, rhs) = rest
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("expected `=` in `{body}`")))?;
                let key = lhs.trim().to_string();
                let (word, _) = parse_letters(rhs, &[])?;
                let slot = pending.entry(key).or_default();
                if body.starts_with("up") {
                    slot.0 = Some(Word::new(word));
                } else {
                    slot.1 = Some(Word::new(word));
                }
            } else {
                let (letters, saw_m) = parse_letters(body, &[])?;
                let word = Word::new(letters);
                p.relators.push(Relator {
                    parametric: saw_m && word.m_span().is_some(),
                    word,
                    label: comment.to_string(),
                });
            }
        }
        for g in &mut p.generators {
            if let GenDecl::Recursive { pattern, up, down, .. } = g {
                let key = Word::gen(pattern.clone()).template_display().to_string();
                let (u, d) = pending
                    .remove(&key)
                    .ok_or_else(|| Error::Parse(format!("missing up/down rules for {key}")))?;
                *up = u.ok_or_else(|| Error::Parse(format!("missing up rule for {key}")))?;
                *down = d.ok_or_else(|| Error::Parse(format!("missing down rule for {key}")))?;
            }
        }
        if let Some(key) = pending.keys().next() {
            return Err(Error::Parse(format!("rule for undeclared recursive family {key}")));
        }
        Ok(p)
    }
}

/// A coset-indexed symbol of `w` that is not among `gens`.
fn escapes(w: &Word, gens: &[GenDecl]) -> Option<Symbol> {
    w.symbols()
        .into_iter()
        .find(|s| s.m_index().is_some() && !gens.iter().any(|g| g.covers(s)))
}

fn resolve_word(
    w: &Word,
    recs: &[(&Symbol, (i64, i64), &Word, &Word)],
    memo: &mut BTreeMap<Symbol, Word>,
    depth: usize,
) -> Result<Word> {
    if depth > MAX_RECURSION {
        return Err(Error::ShapeMismatch(
            "recursive family definitions do not terminate".into(),
        ));
    }
    let mut out = Vec::with_capacity(w.len());
    for l in w.letters() {
        let resolved = resolve_symbol(&l.symbol, recs, memo, depth)?;
        match resolved {
            Some(r) => out.extend(if l.inverse { r.inverse() } else { r }.into_letters()),
            None => out.push(l.clone()),
        }
    }
    Ok(Word::new(out))
}

fn resolve_symbol(
    sym: &Symbol,
    recs: &[(&Symbol, (i64, i64), &Word, &Word)],
    memo: &mut BTreeMap<Symbol, Word>,
    depth: usize,
) -> Result<Option<Word>> {
    if let Some(w) = memo.get(sym) {
        return Ok(Some(w.clone()));
    }
    for (pattern, keep, up, down) in recs {
        if let Some(k) = sym.match_shifted(pattern) {
            let rule = if k > keep.1 {
                up
            } else if k < keep.0 {
                down
            } else {
                return Ok(None);
            };
            let w = resolve_word(&rule.shift(k), recs, memo, depth + 1)?;
            memo.insert(sym.clone(), w.clone());
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn split_top_level(list: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0usize);
    for (k, c) in list.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(list[start..k].trim());
                start = k + 1;
            }
            _ => {}
        }
    }
    out.push(list[start..].trim());
    out.retain(|s| !s.is_empty());
    out
}

fn parse_range(s: &str) -> Result<(i64, i64)> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected `[lo,hi]`, got `{s}`")))?;
    let (a, b) = inner
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("expected `[lo,hi]`, got `{s}`")))?;
    let p = |x: &str| {
        x.trim()
            .parse::<i64>()
            .map_err(|_| Error::Parse(format!("bad integer `{x}`")))
    };
    Ok((p(a)?, p(b)?))
}

fn parse_single(s: &str) -> Result<Symbol> {
    let (letters, _) = parse_letters(s, &[])?;
    match letters.as_slice() {
        [l] if !l.inverse => Ok(l.symbol.clone()),
        _ => Err(Error::Parse(format!("expected a single generator, got `{s}`"))),
    }
}

fn parse_decl(item: &str) -> Result<GenDecl> {
    let Some((sym, dom)) = item.split_once(" for m in ") else {
        return Ok(GenDecl::Concrete(parse_single(item)?));
    };
    let pattern = parse_single(sym)?;
    let dom = dom.trim();
    if let Some((all, keep)) = dom.split_once("keep") {
        if all.trim() != "Z" {
            return Err(Error::Parse(format!("recursive families range over Z, got `{all}`")));
        }
        return Ok(GenDecl::Recursive {
            pattern,
            keep: parse_range(keep)?,
            up: Word::empty(),
            down: Word::empty(),
        });
    }
    let domain = if dom == "Z" {
        Domain::All
    } else {
        let (a, b) = parse_range(dom)?;
        Domain::Window(a, b)
    };
    Ok(GenDecl::Family { pattern, domain })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset::phi;

    fn family_count(p: &Presentation, fam: &str) -> usize {
        p.relators.iter().filter(|r| r.label.starts_with(fam)).count()
    }

    #[test]
    fn vb3_shape() {
        let p = virtual_braid_presentation(3).unwrap();
        assert_eq!(p.generators.len(), 4);
        assert_eq!(p.relators.len(), 5);
        for (fam, k) in [
            ("r1", 0),
            ("r2", 1),
            ("r3", 2),
            ("r4", 0),
            ("r5", 1),
            ("r6", 0),
            ("r7", 1),
        ] {
            assert_eq!(family_count(&p, fam), k, "{fam}");
        }
    }

    #[test]
    fn vb2_is_rho_squared() {
        let p = virtual_braid_presentation(2).unwrap();
        assert_eq!(p.concrete_generators(), vec![Symbol::Sigma(1), Symbol::Rho(1)]);
        assert_eq!(p.relator_words(), vec![Word::parse("r1 r1").unwrap()]);
        assert_eq!(welded_braid_presentation(2).unwrap().relators, p.relators);
        assert_eq!(virtual_braid_presentation(1), Err(Error::BadRank(1)));
    }

    #[test]
    fn relators_lie_in_kernel() {
        for n in 2..=7 {
            let p = welded_braid_presentation(n).unwrap();
            p.validate().unwrap();
            for r in &p.relators {
                assert!(phi(&r.word).unwrap().is_identity(), "{}", r.label);
            }
            let v = virtual_braid_presentation(n).unwrap();
            assert_eq!(p.relators.len() - v.relators.len(), n as usize - 2);
        }
    }

    #[test]
    fn domains() {
        let rels = relator_instances(5, false).unwrap();
        assert!(rels.iter().all(|k| k.max_strand() <= 4));
        assert!(rels.contains(&RelatorKind::R6 { i: 4, j: 1 }));
        assert!(!rels.contains(&RelatorKind::R6 { i: 2, j: 3 }));
        assert!(!rels.contains(&RelatorKind::R1 { i: 2, j: 3 }));
    }

    fn vb3_prime() -> Presentation {
        Presentation::parse_text(
            "generators: a(m) for m in Z, f(m,0) for m in Z\n\
             f(m+1,0)^-1 f(m+2,0) f(m+3,0)^-1 f(m+2,0) f(m+1,0)^-1 f(m,0)  # f chain\n\
             a(m+1) f(m+1,0)^-1 f(m,0) a(m)^-1 f(m,0) f(m+1,0)^-1 a(m+1)^-1 f(m+1,0) f(m+2,0)^-1 f(m+1,0)  # a f ladder\n\
             f(m,0)^3  # f^3\n",
        )
        .unwrap()
    }

    #[test]
    fn window_instantiation() {
        let p = vb3_prime();
        let q = p.instantiate(0, 3).unwrap();
        assert_eq!(q.relators.iter().filter(|r| r.label.starts_with("f chain")).count(), 1);
        assert_eq!(q.relators.iter().filter(|r| r.label.starts_with("f^3")).count(), 4);
        assert!(q.is_finite());
        q.validate().unwrap();
        let one = Presentation::parse_text("generators: f(m,0) for m in Z\nf(m,0)^3\n").unwrap();
        let one = one.instantiate(0, 0).unwrap();
        assert_eq!(one.generators.len(), 1);
        assert_eq!(one.relators.len(), 1);
        assert_eq!(p.instantiate(1, 0), Err(Error::EmptyWindow(1, 0)));
    }

    #[test]
    fn instantiation_is_monotone() {
        let p = vb3_prime();
        let small = p.instantiate(-2, 2).unwrap();
        let big = p.instantiate(-3, 3).unwrap();
        for r in &small.relators {
            assert!(big.relators.contains(r));
        }
        for g in &small.generators {
            assert!(big.generators.contains(g));
        }
    }

    #[test]
    fn text_round_trip() {
        let p = vb3_prime();
        let again = Presentation::parse_text(&p.to_text()).unwrap();
        assert_eq!(again.relators, p.relators);
        assert_eq!(again.generators, p.generators);
        let v = virtual_braid_presentation(4).unwrap();
        assert_eq!(Presentation::parse_text(&v.to_text()).unwrap(), v);
    }

    #[test]
    fn recursive_family_resolves() {
        // x(m+1) = x(m) x(m-1) outside the kept pair
        let mut p = Presentation::new("fib");
        p.generators.push(GenDecl::Recursive {
            pattern: Symbol::Custom("x".into(), 0),
            keep: (0, 1),
            up: Word::parse("x(-1) x(-2)").unwrap(),
            down: Word::parse("x(1) x(2)^-1").unwrap(),
        });
        p.relators.push(Relator::template(Word::parse("x(0)^2").unwrap(), "sq"));
        let q = p.instantiate(-1, 2).unwrap();
        assert_eq!(q.generators.len(), 2);
        assert_eq!(q.relators[3].word, Word::parse("x(1) x(0) x(1) x(0)").unwrap());
        assert_eq!(q.relators[0].word, Word::parse("x(0) x(1)^-1 x(0) x(1)^-1").unwrap());
        let text = p.to_text();
        assert_eq!(Presentation::parse_text(&text).unwrap().generators, p.generators);
    }
}
