//! Cosets of the commutator subgroup, the transversal `σ₁ⁱρ₁^ε`, and the
//! Schreier generators it induces.
//!
//! `VBₙ/VBₙ′ ≅ Z × Z₂` via `φ(σ_k) = (1,0)`, `φ(ρ_k) = (0,1)`, so a coset is
//! a pair `(i, ε)` and its representative is `σ₁ⁱρ₁^ε`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{Letter, Symbol, Word};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Coset {
    /// σ-degree.
    pub i: i64,
    /// ρ-parity, 0 or 1.
    pub eps: u8,
}

impl Coset {
    pub const IDENTITY: Coset = Coset { i: 0, eps: 0 };

    pub fn new(i: i64, eps: u8) -> Self {
        Coset { i, eps: eps & 1 }
    }

    /// The coset of `K·x^{±1}` where `K` lies in `self`.
    pub fn act(self, letter: &Letter) -> Result<Coset> {
        match letter.symbol {
            Symbol::Sigma(_) => Ok(Coset {
                i: self.i + letter.exponent(),
                eps: self.eps,
            }),
            Symbol::Rho(_) => Ok(Coset {
                i: self.i,
                eps: self.eps ^ 1,
            }),
            ref other => Err(Error::ForeignSymbol(other.clone())),
        }
    }

    pub fn is_identity(self) -> bool {
        self == Coset::IDENTITY
    }
}

impl fmt::Display for Coset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i, self.eps)
    }
}

/// The abelianization map `φ`: (σ-exponent sum, ρ-exponent sum mod 2).
pub fn phi(w: &Word) -> Result<Coset> {
    w.letters().iter().try_fold(Coset::IDENTITY, |c, l| c.act(l))
}

/// `σ₁ⁱρ₁^ε`, negative powers spelled with inverse letters.
pub fn representative(c: Coset) -> Word {
    let mut w = Word::power_of(Symbol::Sigma(1), c.i);
    if c.eps == 1 {
        w = w.concat(&Word::gen(Symbol::Rho(1)));
    }
    w
}

/// A Schreier generator as named in the case table, plus the internal
/// `ρ₁²`-conjugate that the raw rewriting keeps apart from true triviality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SubgroupSymbol {
    /// Freely trivial: `S_{(i,0),σ₁}` and `S_{(i,0),ρ₁}`.
    Trivial,
    /// `S_{(i,1),ρ₁} = σ₁ⁱρ₁²σ₁⁻ⁱ`, trivial only modulo `r₃`.
    Rho1Square(i64),
    /// One of `a(m)`, `b(m,ε)`, `c(l)`, `f(m,ε)`, `g(m,l)`.
    Named(Symbol),
}

impl fmt::Display for SubgroupSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgroupSymbol::Trivial => write!(f, "1"),
            SubgroupSymbol::Rho1Square(i) => write!(f, "rho1sq({i})"),
            SubgroupSymbol::Named(s) => write!(f, "{s}"),
        }
    }
}

fn strand_of(gen: &Symbol) -> Result<u32> {
    match gen {
        Symbol::Sigma(k) | Symbol::Rho(k) => Ok(*k),
        other => Err(Error::ForeignSymbol(other.clone())),
    }
}

/// Which named generator `S_{c, gen}` is.
pub fn schreier_generator(c: Coset, gen: &Symbol, n: u32) -> Result<SubgroupSymbol> {
    let k = strand_of(gen)?;
    if k == 0 || k >= n {
        return Err(Error::RankOutOfRange { symbol: gen.clone(), n });
    }
    Ok(classify(c, gen))
}

/// The case table without the rank check.
pub(crate) fn classify(c: Coset, gen: &Symbol) -> SubgroupSymbol {
    use SubgroupSymbol::*;
    match *gen {
        Symbol::Sigma(1) if c.eps == 0 => Trivial,
        Symbol::Sigma(1) => Named(Symbol::A(c.i)),
        Symbol::Sigma(2) => Named(Symbol::B(c.i, c.eps)),
        Symbol::Sigma(l) => Named(Symbol::C(l)),
        Symbol::Rho(1) if c.eps == 0 => Trivial,
        Symbol::Rho(1) => Rho1Square(c.i),
        Symbol::Rho(2) => Named(Symbol::F(c.i, c.eps)),
        Symbol::Rho(l) => Named(Symbol::G(c.i, l)),
        _ => unreachable!("classify is only called on braid generators"),
    }
}

/// The exact Schreier word `K·x·(overline{Kx})⁻¹` for `K = representative(c)`.
pub fn schreier_word(c: Coset, gen: &Symbol) -> Result<Word> {
    let next = c.act(&Letter::pos(gen.clone()))?;
    Ok(representative(c)
        .concat(&Word::gen(gen.clone()))
        .concat(&representative(next).inverse()))
}

fn conj_by_sigma1(i: i64, core: &str) -> Word {
    let core = Word::parse(core).expect("closed-form literal");
    core.conjugate(&Word::power_of(Symbol::Sigma(1), i))
}

/// The closed forms of the case table:
///
/// | symbol | word |
/// |---|---|
/// | `a(i)` | `σ₁ⁱ ρ₁σ₁ρ₁σ₁⁻¹ σ₁⁻ⁱ` |
/// | `b(i,ε)` | `σ₁ⁱ ρ₁^ε σ₂ ρ₁^ε σ₁⁻¹ σ₁⁻ⁱ` |
/// | `c(l)` | `σ_l σ₁⁻¹` |
/// | `f(i,ε)` | `σ₁ⁱ ρ₁^ε ρ₂ ρ₁^{ε+1} σ₁⁻ⁱ` |
/// | `g(i,l)` | `σ₁ⁱ ρ_l ρ₁ σ₁⁻ⁱ` |
///
/// These agree with [`schreier_word`] modulo `ρ₁² = 1` and the commuting
/// relations, not letter for letter.
pub fn closed_form(sym: &Symbol) -> Result<Word> {
    Ok(match *sym {
        Symbol::A(i) => conj_by_sigma1(i, "r1 s1 r1 s1^-1"),
        Symbol::B(i, 0) => conj_by_sigma1(i, "s2 s1^-1"),
        Symbol::B(i, _) => conj_by_sigma1(i, "r1 s2 r1 s1^-1"),
        Symbol::C(l) => Word::new(vec![Letter::pos(Symbol::Sigma(l)), Letter::neg(Symbol::Sigma(1))]),
        Symbol::F(i, 0) => conj_by_sigma1(i, "r2 r1"),
        Symbol::F(i, _) => conj_by_sigma1(i, "r1 r2 r1 r1"),
        Symbol::G(i, l) => Word::new(vec![Letter::pos(Symbol::Rho(l)), Letter::pos(Symbol::Rho(1))])
            .conjugate(&Word::power_of(Symbol::Sigma(1), i)),
        ref other => return Err(Error::ForeignSymbol(other.clone())),
    })
}

/// Expansion of a subgroup symbol as a word in `σ`/`ρ`.
///
/// Named symbols use [`closed_form`]; `Rho1Square(i)` is `σ₁ⁱρ₁²σ₁⁻ⁱ`.
pub fn expand(s: &SubgroupSymbol) -> Result<Word> {
    match s {
        SubgroupSymbol::Trivial => Err(Error::TrivialSymbol),
        SubgroupSymbol::Rho1Square(i) => Ok(conj_by_sigma1(*i, "r1 r1")),
        SubgroupSymbol::Named(sym) => closed_form(sym),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn phi_values() {
        assert_eq!(phi(&w("s2")).unwrap(), Coset::new(1, 0));
        assert_eq!(phi(&w("r3")).unwrap(), Coset::new(0, 1));
        assert_eq!(phi(&Word::empty()).unwrap(), Coset::IDENTITY);
        assert_eq!(phi(&w("r1^-1 s2^-1 s1^-1")).unwrap(), Coset::new(-2, 1));
        assert!(matches!(phi(&w("a(0)")), Err(Error::ForeignSymbol(_))));
    }

    #[test]
    fn representatives() {
        assert_eq!(representative(Coset::IDENTITY), Word::empty());
        assert_eq!(representative(Coset::new(0, 1)), w("r1"));
        assert_eq!(representative(Coset::new(-2, 1)), w("s1^-1 s1^-1 r1"));
        for i in -50..=50 {
            for e in 0..2 {
                let c = Coset::new(i, e);
                assert_eq!(phi(&representative(c)).unwrap(), c);
            }
        }
    }

    #[test]
    fn case_table() {
        let n = 6;
        assert_eq!(
            schreier_generator(Coset::new(4, 1), &Symbol::Sigma(1), n).unwrap(),
            SubgroupSymbol::Named(Symbol::A(4))
        );
        assert_eq!(
            schreier_generator(Coset::new(4, 0), &Symbol::Rho(1), n).unwrap(),
            SubgroupSymbol::Trivial
        );
        assert_eq!(
            schreier_generator(Coset::new(4, 1), &Symbol::Rho(1), n).unwrap(),
            SubgroupSymbol::Rho1Square(4)
        );
        assert_eq!(
            schreier_generator(Coset::new(5, 0), &Symbol::Sigma(4), n).unwrap(),
            SubgroupSymbol::Named(Symbol::C(4))
        );
        assert_eq!(
            schreier_generator(Coset::new(-1, 1), &Symbol::Rho(5), n).unwrap(),
            SubgroupSymbol::Named(Symbol::G(-1, 5))
        );
        assert!(matches!(
            schreier_generator(Coset::IDENTITY, &Symbol::Sigma(6), n),
            Err(Error::RankOutOfRange { .. })
        ));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form(&Symbol::C(3)).unwrap(), w("s3 s1^-1"));
        assert_eq!(closed_form(&Symbol::F(0, 0)).unwrap(), w("r2 r1"));
        assert_eq!(closed_form(&Symbol::A(0)).unwrap(), w("r1 s1 r1 s1^-1"));
        assert_eq!(expand(&SubgroupSymbol::Trivial), Err(Error::TrivialSymbol));
        for m in -10..=10 {
            for sym in [
                Symbol::A(m),
                Symbol::B(m, 0),
                Symbol::B(m, 1),
                Symbol::F(m, 0),
                Symbol::F(m, 1),
                Symbol::G(m, 4),
            ] {
                assert_eq!(phi(&closed_form(&sym).unwrap()).unwrap(), Coset::IDENTITY, "{sym}");
            }
        }
    }

    #[test]
    fn exact_words_lie_in_kernel() {
        for i in -5..=5 {
            for e in 0..2 {
                for g in [Symbol::Sigma(1), Symbol::Sigma(3), Symbol::Rho(1), Symbol::Rho(2)] {
                    let s = schreier_word(Coset::new(i, e), &g).unwrap();
                    assert!(phi(&s).unwrap().is_identity());
                }
            }
        }
        // freely trivial cases of the table
        assert!(schreier_word(Coset::new(3, 0), &Symbol::Sigma(1)).unwrap().is_empty());
        assert!(schreier_word(Coset::new(3, 0), &Symbol::Rho(1)).unwrap().is_empty());
    }
}
