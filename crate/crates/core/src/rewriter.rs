//! The Reidemeister–Schreier rewriting map `τ` and the derived relation
//! families of the commutator subgroups.
//!
//! `τ` reads a kernel word letter by letter while tracking the running coset
//! `K`. A letter `x` contributes `S_{K,x}` and moves to `K·x`; a letter `x⁻¹`
//! contributes `S_{K·x⁻¹,x}⁻¹`. The raw output keeps the exact coset of
//! every token, so expanding it with the exact Schreier words gives back the
//! input word on the nose.
//!
//! ```
//! use vbraid::rewriter::tau;
//! use vbraid::Word;
//!
//! let w = Word::parse("r1 s2 s1 r2 s1^-1 s2^-1").unwrap();
//! assert_eq!(tau(&w).unwrap().to_string(), "b(0,1) a(1) f(2,1) b(0,0)^-1");
//! ```

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coset::{classify, closed_form, phi, schreier_word, Coset, SubgroupSymbol};
use crate::error::{Error, Result};
use crate::presets::{relator_instances, GenDecl, Group, Presentation, Relator, RelatorKind};
use crate::word::{Letter, ShiftRule, Symbol, Word};

/// One raw letter of `τ(w)`: the Schreier generator `S_{coset, gen}` to the
/// power `±1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RawToken {
    pub coset: Coset,
    pub gen: Symbol,
    pub inverse: bool,
}

impl RawToken {
    pub fn symbol(&self) -> SubgroupSymbol {
        classify(self.coset, &self.gen)
    }

    /// The exact Schreier word, inverted for inverse tokens.
    pub fn exact_word(&self) -> Word {
        let w = schreier_word(self.coset, &self.gen).expect("tokens only hold braid generators");
        if self.inverse {
            w.inverse()
        } else {
            w
        }
    }
}

/// Raw output of `τ`, before the trivial and `ρ₁²` tokens are dropped.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupWord {
    pub tokens: Vec<RawToken>,
    /// Coset reached after the last letter; identity for kernel words.
    pub end: Coset,
}

impl SubgroupWord {
    /// Map tokens to named symbols, drop `Trivial` and `Rho1Square`, reduce.
    pub fn normalize(&self) -> Word {
        self.tokens
            .iter()
            .filter_map(|t| match t.symbol() {
                SubgroupSymbol::Named(s) => Some(Letter::new(s, t.inverse)),
                SubgroupSymbol::Trivial | SubgroupSymbol::Rho1Square(_) => None,
            })
            .collect()
    }

    /// The token sequence with symbolic names, for display.
    pub fn symbols(&self) -> Vec<(SubgroupSymbol, bool)> {
        self.tokens.iter().map(|t| (t.symbol(), t.inverse)).collect()
    }
}

impl fmt::Display for SubgroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tokens.is_empty() {
            return write!(f, "1");
        }
        for (k, (s, inv)) in self.symbols().into_iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{s}{}", if inv { "^-1" } else { "" })?;
        }
        Ok(())
    }
}

/// Rewrite without checking kernel membership; the caller inspects `end`.
pub fn rewrite_unchecked(w: &Word) -> Result<SubgroupWord> {
    let mut cur = Coset::IDENTITY;
    let mut tokens = Vec::with_capacity(w.len());
    for l in w.letters() {
        let next = cur.act(l)?;
        let coset = if l.inverse { next } else { cur };
        tokens.push(RawToken {
            coset,
            gen: l.symbol.clone(),
            inverse: l.inverse,
        });
        cur = next;
    }
    Ok(SubgroupWord { tokens, end: cur })
}

/// `τ(w)` in raw form. Fails unless `φ(w)` is trivial.
pub fn rewrite_tau(w: &Word) -> Result<SubgroupWord> {
    let c = phi(w)?;
    if !c.is_identity() {
        return Err(Error::NotInKernel(c.i, c.eps));
    }
    rewrite_unchecked(w)
}

/// Normalized `τ(w)`.
pub fn tau(w: &Word) -> Result<Word> {
    Ok(rewrite_tau(w)?.normalize())
}

/// Expand a raw subgroup word: exact Schreier words when `raw`, closed
/// forms otherwise (trivial tokens vanish, `ρ₁²` tokens stay).
pub fn expand_subgroup_word(sw: &SubgroupWord, raw: bool) -> Word {
    if raw {
        return Word::new(sw.tokens.iter().flat_map(|t| t.exact_word().into_letters()).collect());
    }
    let mut out = Vec::new();
    for t in &sw.tokens {
        let s = t.symbol();
        if s == SubgroupSymbol::Trivial {
            continue;
        }
        let w = crate::coset::expand(&s).expect("non-trivial symbol");
        out.extend(if t.inverse { w.inverse() } else { w }.into_letters());
    }
    Word::new(out)
}

/// Expand a word over the named symbols through their closed forms.
/// Letters that are already braid generators are kept.
pub fn expand_word(w: &Word) -> Word {
    w.map_letters(|l| {
        if l.symbol.is_braid_generator() {
            return Word::new(vec![l.clone()]);
        }
        let e = closed_form(&l.symbol).unwrap_or_else(|_| Word::gen(l.symbol.clone()));
        if l.inverse {
            e.inverse()
        } else {
            e
        }
    })
}

/// The coset representative conjugator `σ₁ᵐρ₁ᵗ`.
pub fn conjugator(m: i64, twist: bool) -> Word {
    crate::coset::representative(Coset::new(m, twist as u8))
}

/// `τ(K r K⁻¹)` with `K = σ₁ᵐρ₁ᵗ`, normalized. Since σ₁-letters at even
/// cosets are trivial, this is the `m`-shift of the `m = 0` result.
pub fn derive_relation(r: &Word, m: i64, twist: bool) -> Result<Word> {
    tau(&r.conjugate(&conjugator(m, twist)))
}

/// The same relation obtained the way the lemmas do it: rewrite `r`, and
/// for the twisted coset conjugate the resulting subgroup word by `ρ₁`
/// through the closed forms (the conjugation rules), then shift by `m`.
pub fn derive_via_rules(r: &Word, m: i64, twist: bool) -> Result<Word> {
    let w0 = tau(r)?;
    let w = if twist { conjugate_by_rho1(&w0)? } else { w0 };
    Ok(w.shift(m))
}

/// `ρ₁ · w · ρ₁⁻¹` for a subgroup word `w`, rewritten back.
pub fn conjugate_by_rho1(w: &Word) -> Result<Word> {
    tau(&expand_word(w).conjugate(&Word::gen(Symbol::Rho(1))))
}

/// Which derivation to use for the assembled presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Route {
    /// Rewrite `K r K⁻¹` directly.
    Direct,
    /// Rewrite `r`, then apply the `ρ₁`-conjugation rules.
    Rules,
}

pub fn derive(route: Route, r: &Word, m: i64, twist: bool) -> Result<Word> {
    match route {
        Route::Direct => derive_relation(r, m, twist),
        Route::Rules => derive_via_rules(r, m, twist),
    }
}

// ---------------------------------------------------------------------------
// Canonical forms

fn min_rotation(w: &Word) -> Word {
    let c = w.cyclically_reduced();
    let cands = (0..c.len().max(1)).map(|k| c.rotate(k));
    let inv = c.inverse();
    let inv_cands = (0..inv.len().max(1)).map(|k| inv.rotate(k));
    cands.chain(inv_cands).min().unwrap_or_default()
}

/// Representative of `w` up to conjugation and inversion: the shortlex
/// least rotation of the cyclic reduction of `w` or `w⁻¹`.
pub fn canonical(w: &Word) -> Word {
    min_rotation(w)
}

/// Like [`canonical`], also identifying index shifts: the word is shifted
/// so that its least coset index is 0.
pub fn canonical_template(w: &Word) -> Word {
    let c = w.cyclically_reduced();
    let c = match c.m_span() {
        Some((lo, _)) => c.shift(-lo),
        None => c,
    };
    min_rotation(&c)
}

/// Equal up to conjugation and inversion.
pub fn cyclically_equal(u: &Word, v: &Word) -> bool {
    canonical(u) == canonical(v)
}

// ---------------------------------------------------------------------------
// Assembly

/// A derived relation family together with its provenance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedRelation {
    /// Canonical template.
    pub word: Word,
    pub relator: RelatorKind,
    pub twist: bool,
}

impl DerivedRelation {
    pub fn label(&self) -> String {
        format!("{}{}", self.relator, if self.twist { " twisted" } else { "" })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssembleOptions {
    pub route: Route,
    /// Replace `f(m,1)` by `f(m,0)⁻¹` everywhere.
    pub eliminate_f1: bool,
}

impl Default for AssembleOptions {
    fn default() -> Self {
        AssembleOptions {
            route: Route::Direct,
            eliminate_f1: true,
        }
    }
}

/// The rule `f(m,1) ↦ f(m,0)⁻¹`.
pub fn f1_rule() -> ShiftRule {
    ShiftRule::new(Symbol::F(0, 1), Word::gen_inv(Symbol::F(0, 0))).expect("acyclic")
}

/// All relation families of the commutator subgroup as canonical
/// templates, deduplicated, in first-derivation order.
pub fn derived_relations(group: Group, n: u32, opts: AssembleOptions) -> Result<Vec<DerivedRelation>> {
    let rule = f1_rule();
    let mut seen = BTreeMap::new();
    let mut out = Vec::new();
    for kind in relator_instances(n, group == Group::Welded)? {
        let r = kind.word();
        for twist in [false, true] {
            let mut w = derive(opts.route, &r, 0, twist)?;
            if opts.eliminate_f1 {
                w = w.apply_rule(&rule);
            }
            let key = canonical_template(&w);
            if key.is_empty() || seen.contains_key(&key) {
                continue;
            }
            seen.insert(key.clone(), ());
            out.push(DerivedRelation {
                word: key,
                relator: kind,
                twist,
            });
        }
    }
    Ok(out)
}

/// Generator families of the commutator subgroup of a rank-`n` group.
pub fn subgroup_generators(n: u32, eliminate_f1: bool) -> Vec<GenDecl> {
    let mut g = vec![GenDecl::family(Symbol::A(0))];
    if n >= 3 {
        g.push(GenDecl::family(Symbol::B(0, 0)));
        g.push(GenDecl::family(Symbol::B(0, 1)));
        g.push(GenDecl::family(Symbol::F(0, 0)));
        if !eliminate_f1 {
            g.push(GenDecl::family(Symbol::F(0, 1)));
        }
    }
    for l in 3..n {
        g.push(GenDecl::Concrete(Symbol::C(l)));
    }
    for l in 3..n {
        g.push(GenDecl::family(Symbol::G(0, l)));
    }
    g
}

/// The derived presentation of the commutator subgroup, parametric in `m`,
/// or instantiated on `window` when given.
pub fn assemble_derived_presentation(
    group: Group,
    n: u32,
    opts: AssembleOptions,
    window: Option<(i64, i64)>,
) -> Result<Presentation> {
    let rels = derived_relations(group, n, opts)?;
    let p = Presentation {
        name: format!("{}{n}'", group.short()),
        generators: subgroup_generators(n, opts.eliminate_f1),
        relators: rels
            .iter()
            .map(|d| Relator::template(d.word.clone(), d.label()))
            .collect(),
    };
    match window {
        Some((lo, hi)) => p.instantiate(lo, hi),
        None => Ok(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&w("r2 r2")).unwrap(), w("f(0,0) f(0,1)"));
        assert_eq!(tau(&w("s1 s3 s1^-1 s3^-1")).unwrap(), Word::empty());
        assert_eq!(tau(&Word::empty()).unwrap(), Word::empty());
        assert_eq!(
            tau(&w("r1 s2 s1 r2 s1^-1 s2^-1")).unwrap(),
            w("b(0,1) a(1) f(2,1) b(0,0)^-1")
        );
        assert_eq!(tau(&w("s1")), Err(Error::NotInKernel(1, 0)));
    }

    #[test]
    fn derive_examples() {
        let r2 = RelatorKind::R2 { i: 1 }.word();
        assert_eq!(derive_relation(&r2, 0, false).unwrap(), w("b(1,0) b(2,0)^-1 b(0,0)^-1"));
        let r6 = RelatorKind::R6 { i: 1, j: 3 }.word();
        assert_eq!(derive_relation(&r6, 0, false).unwrap(), w("g(1,3) a(0)^-1 g(0,3)"));
        for kind in relator_instances(5, true).unwrap() {
            let r = kind.word();
            let raw = rewrite_tau(&r).unwrap();
            assert_eq!(expand_subgroup_word(&raw, true), r);
        }
    }

    #[test]
    fn shift_equivariance() {
        for kind in relator_instances(4, true).unwrap() {
            let r = kind.word();
            for twist in [false, true] {
                let base = derive_relation(&r, 0, twist).unwrap();
                for m in -3..=3 {
                    assert_eq!(derive_relation(&r, m, twist).unwrap(), base.shift(m));
                }
            }
        }
    }

    #[test]
    fn twisted_r8_by_both_routes() {
        let r8 = RelatorKind::R8 { i: 2 }.word();
        let direct = derive_relation(&r8, 0, true).unwrap();
        let rules = derive_via_rules(&r8, 0, true).unwrap();
        assert_eq!(direct, w("f(0,1) c(3) b(1,0) g(2,3) b(1,1)^-1 c(3)^-1"));
        assert_eq!(rules, direct);
    }

    #[test]
    fn canonical_forms() {
        let u = w("a(0) b(1,0) c(3)");
        assert_eq!(canonical(&u), canonical(&w("c(3) a(0) b(1,0)")));
        assert_eq!(canonical(&u), canonical(&u.inverse()));
        assert_eq!(canonical_template(&u), canonical_template(&u.shift(5)));
        assert_ne!(canonical(&u), canonical(&u.shift(5)));
        assert_eq!(canonical(&w("a(0) b(0,0) a(0)^-1")), w("b(0,0)"));
    }

    #[test]
    fn vb3_families() {
        let rels = derived_relations(Group::Virtual, 3, AssembleOptions::default()).unwrap();
        let p = assemble_derived_presentation(Group::Virtual, 3, AssembleOptions::default(), None).unwrap();
        p.validate().unwrap();
        assert_eq!(p.relators.len(), rels.len());
        let q = assemble_derived_presentation(Group::Virtual, 3, AssembleOptions::default(), Some((0, 0))).unwrap();
        for r in &q.relators {
            assert!(r.word.m_span().is_none_or(|s| s == (0, 0)));
        }
    }
}
