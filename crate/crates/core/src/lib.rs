pub mod abelian;
pub mod artin;
pub mod catalog;
pub mod coset;
pub mod error;
pub mod presets;
pub mod report;
pub mod rewriter;
pub mod tietze;
pub mod verify;
pub mod word;

pub use coset::{Coset, SubgroupSymbol};
pub use error::{Error, Result};
pub use presets::{GenDecl, Group, Presentation, Relator, RelatorKind};
pub use word::{Family, Letter, ShiftRule, Symbol, Word};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/words.md")]
    mod words {}
    #[doc = include_str!("../../../book/src/presentations.md")]
    mod presentations {}
    #[doc = include_str!("../../../book/src/cosets.md")]
    mod cosets {}
    #[doc = include_str!("../../../book/src/rewriting.md")]
    mod rewriting {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/tietze.md")]
    mod tietze {}
    #[doc = include_str!("../../../book/src/abelianization.md")]
    mod abelianization {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}
