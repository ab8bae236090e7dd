//! The Artin action of `WBₙ` on the free group `Fₙ = ⟨x₁, …, xₙ⟩`:
//!
//! - `σᵢ`: `xᵢ ↦ xᵢ xᵢ₊₁ xᵢ⁻¹`, `xᵢ₊₁ ↦ xᵢ`;
//! - `ρᵢ`: `xᵢ ↔ xᵢ₊₁`.
//!
//! Every relator of `VBₙ` and `WBₙ` acts trivially, so two words with
//! different actions are different group elements. The converse fails for
//! `VBₙ`; the action is only ever used to refute identities.

use std::fmt;

use crate::coset::closed_form;
use crate::error::{Error, Result};
use crate::word::{Letter, Symbol, Word};

fn x(k: u32) -> Symbol {
    Symbol::Custom("x".into(), k as i64)
}

/// An automorphism of `Fₙ`, stored as the images of `x₁ … xₙ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    images: Vec<Word>,
}

impl Automorphism {
    pub fn identity(n: u32) -> Self {
        Automorphism {
            images: (1..=n).map(|k| Word::gen(x(k))).collect(),
        }
    }

    pub fn rank(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn is_identity(&self) -> bool {
        *self == Automorphism::identity(self.rank())
    }

    /// Image of a free-group word.
    pub fn apply(&self, w: &Word) -> Word {
        w.map_letters(|l| {
            let img = match &l.symbol {
                Symbol::Custom(name, k) if name == "x" => self.images[*k as usize - 1].clone(),
                other => Word::gen(other.clone()),
            };
            if l.inverse {
                img.inverse()
            } else {
                img
            }
        })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            images: other.images.iter().map(|w| self.apply(w)).collect(),
        }
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    fn letter(l: &Letter, n: u32) -> Result<Automorphism> {
        let mut a = Automorphism::identity(n);
        let k = match l.symbol {
            Symbol::Sigma(k) | Symbol::Rho(k) => k,
            ref other => return Err(Error::ForeignSymbol(other.clone())),
        };
        if k == 0 || k >= n {
            return Err(Error::RankOutOfRange {
                symbol: l.symbol.clone(),
                n,
            });
        }
        let (i, j) = (k as usize - 1, k as usize);
        let (xi, xj) = (Word::gen(x(k)), Word::gen(x(k + 1)));
        match (&l.symbol, l.inverse) {
            (Symbol::Sigma(_), false) => {
                a.images[i] = xj.conjugate(&xi);
                a.images[j] = xi;
            }
            (Symbol::Sigma(_), true) => {
                a.images[i] = xj.clone();
                a.images[j] = xi.conjugate(&xj.inverse());
            }
            _ => a.images.swap(i, j),
        }
        Ok(a)
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, w) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "x({}) -> {}", k + 1, w)?;
        }
        Ok(())
    }
}

/// The (right) action of a word in `σ`, `ρ` and the named subgroup generators
/// (expanded through their closed forms).
pub fn action(w: &Word, n: u32) -> Result<Automorphism> {
    let mut acc = Automorphism::identity(n);
    for l in w.letters() {
        let step = if l.symbol.is_braid_generator() {
            Automorphism::letter(l, n)?
        } else {
            let e = closed_form(&l.symbol)?;
            action(&if l.inverse { e.inverse() } else { e }, n)?
        };
        acc = step.compose(&acc);
    }
    Ok(acc)
}

/// Do `u` and `v` act identically on `Fₙ`?
pub fn same_action(u: &Word, v: &Word, n: u32) -> Result<bool> {
    Ok(action(u, n)? == action(v, n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, parse_relation, Vars};
    use crate::presets::relator_instances;
    use crate::tietze::{run_script, ScriptId};

    #[test]
    fn welded_relators_act_trivially() {
        for n in 2..=5 {
            for r in relator_instances(n, true).unwrap() {
                assert!(action(&r.word(), n).unwrap().is_identity(), "{r}");
            }
        }
    }

    #[test]
    fn generators_act_nontrivially() {
        let s = action(&Word::parse("s1").unwrap(), 3).unwrap();
        assert_eq!(s.to_string(), "x(1) -> x(1) x(2) x(1)^-1, x(2) -> x(1), x(3) -> x(3)");
        let back = action(&Word::parse("s1 s1^-1").unwrap(), 3).unwrap();
        assert!(back.is_identity());
    }

    fn family_word(f: &catalog::Family, m: i64) -> Word {
        parse_relation(f.template, &Vars::default()).unwrap().shift(m)
    }

    #[test]
    fn stated_welded_shortcuts_fail() {
        for f in catalog::wb4_claimed_identities() {
            for m in -2..=2 {
                assert!(
                    !action(&family_word(&f, m), 4).unwrap().is_identity(),
                    "{} m={m}",
                    f.label
                );
            }
        }
        // no product of two f's is a(0)
        let a0 = Word::parse("a(0)").unwrap();
        for i in -3..=3 {
            for j in -3..=3 {
                for (x, y) in [(false, false), (true, false), (false, true), (true, true)] {
                    let w = Word::new(vec![Letter::new(Symbol::F(i, 0), x), Letter::new(Symbol::F(j, 0), y)]);
                    assert!(!same_action(&a0, &w, 3).unwrap(), "{w}");
                }
            }
        }
    }

    #[test]
    fn twisted_r8_statement_fails() {
        let engine = Word::parse("f(0,1) c(3) b(1,0) g(2,3) b(1,1)^-1 c(3)^-1").unwrap();
        let stated = Word::parse("f(0,1) c(3) f(1,0) a(1) g(2,3) b(1,1)^-1 c(3)^-1").unwrap();
        assert!(action(&engine, 4).unwrap().is_identity());
        assert!(!action(&stated, 4).unwrap().is_identity());
    }

    #[test]
    fn welded_three_families_hold() {
        for f in catalog::wb3_final().iter().chain([catalog::wb3_extra()].iter()) {
            assert!(action(&family_word(f, 0), 3).unwrap().is_identity(), "{}", f.label);
        }
    }

    #[test]
    fn welded_four_theorem_relations() {
        let hold: Vec<&str> = catalog::theorem_wb4()
            .iter()
            .filter(|f| action(&family_word(f, 0), 4).unwrap().is_identity())
            .map(|f| f.label)
            .collect();
        assert_eq!(hold, ["T1", "T2", "T6"]);
    }

    #[test]
    fn reduced_welded_relators_hold() {
        for (id, n) in [
            (ScriptId::Wb3Reduce, 3),
            (ScriptId::Wb4Reduce, 4),
            (ScriptId::WbnReduce, 5),
        ] {
            let p = run_script(id, n).unwrap().result.instantiate(-2, 2).unwrap();
            for w in p.relator_words() {
                assert!(action(&w, n).unwrap().is_identity(), "{id}: {w}");
            }
        }
    }

    #[test]
    fn forbidden_move_is_not_a_relation() {
        // the other mixed relation, ρ_{i+1} σᵢ σᵢ₊₁ = σᵢ σᵢ₊₁ ρᵢ, is not imposed
        let w = Word::parse("r2 s1 s2 r1 s2^-1 s1^-1").unwrap();
        assert!(!action(&w, 3).unwrap().is_identity());
    }
}
