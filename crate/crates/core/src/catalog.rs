//! The relation families as they are stated, with the relator and
//! coset each is claimed to come from.
//!
//! Templates use the word syntax with the free index `m` and strand
//! variables `i, j, k, l`; `u = v` is read as the relator `u v⁻¹`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presets::RelatorKind;
use crate::word::{parse_word, Word};

/// Strand-variable assignment; unused variables are 0.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Vars {
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub l: u32,
}

impl Vars {
    fn get(&self, v: char) -> u32 {
        match v {
            'i' => self.i,
            'j' => self.j,
            'k' => self.k,
            'l' => self.l,
            _ => 0,
        }
    }

    fn set(mut self, v: char, x: u32) -> Self {
        match v {
            'i' => self.i = x,
            'j' => self.j = x,
            'k' => self.k = x,
            'l' => self.l = x,
            _ => {}
        }
        self
    }

    /// `i=3,j=5` for the variables `used`.
    pub fn describe(&self, used: &[char]) -> String {
        used.iter()
            .map(|v| format!("{v}={}", self.get(*v)))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Which strand assignments a family is stated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrandDomain {
    /// No strand variables; needs at least `min_n` strands.
    Fixed { min_n: u32 },
    /// `lo <= v <= n - 1 - slack`.
    Single { v: char, lo: u32, slack: u32 },
    /// `lo <= a`, `a + 1 < b <= n - 1`.
    FarPair { a: char, b: char, lo: u32 },
    /// `a, b ∈ [lo, n-1]`, `|a - b| > 1`.
    Apart { a: char, b: char, lo: u32 },
}

impl StrandDomain {
    pub fn vars(&self) -> Vec<char> {
        match *self {
            StrandDomain::Fixed { .. } => vec![],
            StrandDomain::Single { v, .. } => vec![v],
            StrandDomain::FarPair { a, b, .. } | StrandDomain::Apart { a, b, .. } => vec![a, b],
        }
    }

    pub fn enumerate(&self, n: u32) -> Vec<Vars> {
        let top = n.saturating_sub(1);
        let v0 = Vars::default();
        match *self {
            StrandDomain::Fixed { min_n } => {
                if n >= min_n {
                    vec![v0]
                } else {
                    vec![]
                }
            }
            StrandDomain::Single { v, lo, slack } => (lo..=top.saturating_sub(slack))
                .filter(|_| top >= slack)
                .map(|x| v0.set(v, x))
                .collect(),
            StrandDomain::FarPair { a, b, lo } => (lo..=top)
                .flat_map(|x| (x + 2..=top).map(move |y| v0.set(a, x).set(b, y)))
                .collect(),
            StrandDomain::Apart { a, b, lo } => (lo..=top)
                .flat_map(|x| (lo..=top).map(move |y| (x, y)))
                .filter(|(x, y)| x.abs_diff(*y) > 1)
                .map(|(x, y)| v0.set(a, x).set(b, y))
                .collect(),
        }
    }
}

/// Parse a template, resolving strand variables; `u = v` becomes `u v⁻¹`.
pub fn parse_relation(template: &str, vars: &Vars) -> Result<Word> {
    let bind = [
        ('i', vars.i as i64),
        ('j', vars.j as i64),
        ('k', vars.k as i64),
        ('l', vars.l as i64),
    ];
    match template.split_once('=') {
        Some((lhs, rhs)) => {
            let u = parse_word(lhs, &bind)?;
            let v = parse_word(rhs, &bind)?;
            Ok(u.concat(&v.inverse()))
        }
        None => parse_word(template, &bind),
    }
}

/// A relator of the braid-like group and the coset twist a family is
/// derived at.
#[derive(Clone, Copy)]
pub struct Source {
    pub relator: fn(&Vars) -> RelatorKind,
    pub twist: bool,
}

impl std::fmt::Debug for Source {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Source {{ twist: {} }}", self.twist)
    }
}

/// One stated relation family.
#[derive(Debug, Clone)]
pub struct Claim {
    pub lemma: &'static str,
    pub label: &'static str,
    pub template: &'static str,
    pub domain: StrandDomain,
    pub sources: Vec<Source>,
    pub note: Option<&'static str>,
}

impl Claim {
    pub fn word(&self, vars: &Vars) -> Result<Word> {
        parse_relation(self.template, vars)
    }
}

/// A stated relation family: one line of a presentation theorem or a displayed identity.
#[derive(Debug, Clone)]
pub struct Family {
    pub label: &'static str,
    pub template: &'static str,
    pub domain: StrandDomain,
}

impl Family {
    /// All strand instances for rank `n`, as templates in `m`.
    pub fn templates(&self, n: u32) -> Result<Vec<(Vars, Word)>> {
        self.domain
            .enumerate(n)
            .into_iter()
            .map(|v| Ok((v, parse_relation(self.template, &v)?)))
            .collect()
    }
}

const NONE3: StrandDomain = StrandDomain::Fixed { min_n: 3 };
const NONE4: StrandDomain = StrandDomain::Fixed { min_n: 4 };

fn src(relator: fn(&Vars) -> RelatorKind, twist: bool) -> Source {
    Source { relator, twist }
}

fn both(relator: fn(&Vars) -> RelatorKind) -> Vec<Source> {
    vec![src(relator, false), src(relator, true)]
}

fn claim(
    lemma: &'static str,
    label: &'static str,
    template: &'static str,
    domain: StrandDomain,
    sources: Vec<Source>,
) -> Claim {
    Claim {
        lemma,
        label,
        template,
        domain,
        sources,
        note: None,
    }
}

/// The identifiers accepted by [`claims`].
pub const LEMMAS: [&str; 10] = ["L3_1", "L3", "L5", "L7", "L8", "L8_1", "L10", "L12", "CON", "L5_2"];

/// Claimed families of a lemma (relation lemmas only; the conjugation
/// rules are in [`conjugation_rules`]).
pub fn claims(lemma: &str) -> Result<Vec<Claim>> {
    use RelatorKind::*;
    use StrandDomain::*;
    let j4 = Single {
        v: 'j',
        lo: 4,
        slack: 0,
    };
    let ij = FarPair { a: 'i', b: 'j', lo: 3 };
    let i3n = Single {
        v: 'i',
        lo: 3,
        slack: 1,
    };
    let i3 = Single {
        v: 'i',
        lo: 3,
        slack: 0,
    };
    let v = match lemma {
        "L3_1" | "CON" => vec![],
        "L3" => vec![
            claim(
                "L3",
                "b c b c",
                "b(m,0) c(j) b(m+1,0)^-1 c(j)^-1",
                j4,
                vec![src(|v| R1 { i: 2, j: v.j }, false)],
            ),
            claim(
                "L3",
                "c c c c",
                "c(i) c(j) c(i)^-1 c(j)^-1",
                ij,
                vec![src(|v| R1 { i: v.i, j: v.j }, false)],
            ),
            claim(
                "L3",
                "b a c a b c",
                "b(m,1) a(m)^-1 c(j) a(m+1) b(m+1,1)^-1 c(j)^-1",
                j4,
                vec![src(|v| R1 { i: 2, j: v.j }, true)],
            ),
            Claim {
                note: Some(
                    "the proof's display has a(0)^-1 in place of a(0) before the last c(j)^-1; the statement is used",
                ),
                ..claim(
                    "L3",
                    "c a c c a c",
                    "c(i) a(m)^-1 c(j) c(i)^-1 a(m) c(j)^-1",
                    ij,
                    vec![src(|v| R1 { i: v.i, j: v.j }, true)],
                )
            },
        ],
        "L5" => vec![
            claim(
                "L5",
                "b b b",
                "b(m+1,0) b(m+2,0)^-1 b(m,0)^-1",
                NONE3,
                vec![src(|_| R2 { i: 1 }, false)],
            ),
            claim(
                "L5",
                "b c b c b c",
                "b(m,0) c(3) b(m+2,0) c(3)^-1 b(m+1,0)^-1 c(3)^-1",
                NONE4,
                vec![src(|_| R2 { i: 2 }, false)],
            ),
            claim(
                "L5",
                "c braid",
                "c(i) c(i+1) c(i) c(i+1)^-1 c(i)^-1 c(i+1)^-1",
                i3n,
                vec![src(|v| R2 { i: v.i }, false)],
            ),
            claim(
                "L5",
                "a b a b a b",
                "a(m) b(m+1,1) a(m+2) b(m+2,1)^-1 a(m+1)^-1 b(m,1)^-1",
                NONE3,
                vec![src(|_| R2 { i: 1 }, true)],
            ),
            claim(
                "L5",
                "b a c twisted braid",
                "b(m,1) a(m)^-1 c(3) a(m+1) b(m+2,1) a(m+2)^-1 a(m+1)^-1 c(3)^-1 a(m) a(m+1) b(m+1,1)^-1 c(3)^-1",
                NONE4,
                vec![src(|_| R2 { i: 2 }, true)],
            ),
            claim(
                "L5",
                "c a twisted braid",
                "c(i) a(m)^-1 c(i+1) a(m)^-1 c(i) c(i+1)^-1 a(m) c(i)^-1 a(m) c(i+1)^-1",
                i3n,
                vec![src(|v| R2 { i: v.i }, true)],
            ),
        ],
        "L7" => vec![
            Claim {
                note: Some("the computation for i=2 writes rho3 rho3; the relator is rho2 rho2"),
                ..claim("L7", "f f", "f(m,0) f(m,1)", NONE3, both(|_| R3 { i: 2 }))
            },
            claim("L7", "g^2", "g(m,i) g(m,i)", i3, both(|v| R3 { i: v.i })),
        ],
        "L8" => vec![
            claim(
                "L8",
                "(f0 g)^2",
                "f(m,0) g(m,k) f(m,0) g(m,k)",
                Single {
                    v: 'k',
                    lo: 4,
                    slack: 0,
                },
                vec![src(|v| R4 { i: 2, j: v.k }, false)],
            ),
            claim(
                "L8",
                "(f1 g)^2",
                "f(m,1) g(m,k) f(m,1) g(m,k)",
                Single {
                    v: 'k',
                    lo: 4,
                    slack: 0,
                },
                vec![src(|v| R4 { i: 2, j: v.k }, true)],
            ),
            claim(
                "L8",
                "(g g)^2",
                "g(m,i) g(m,j) g(m,i) g(m,j)",
                ij,
                both(|v| R4 { i: v.i, j: v.j }),
            ),
        ],
        "L8_1" => vec![
            claim("L8_1", "f1^3", "f(m,1)^3", NONE3, vec![src(|_| R5 { i: 1 }, false)]),
            claim(
                "L8_1",
                "(f0 g3)^3",
                "f(m,0) g(m,3) f(m,0) g(m,3) f(m,0) g(m,3)",
                NONE4,
                vec![src(|_| R5 { i: 2 }, false)],
            ),
            claim(
                "L8_1",
                "(g g)^3",
                "g(m,i) g(m,i+1) g(m,i) g(m,i+1) g(m,i) g(m,i+1)",
                i3n,
                both(|v| R5 { i: v.i }),
            ),
            claim("L8_1", "f0^3", "f(m,0)^3", NONE3, vec![src(|_| R5 { i: 1 }, true)]),
            claim(
                "L8_1",
                "(f1 g3)^3",
                "f(m,1) g(m,3) f(m,1) g(m,3) f(m,1) g(m,3)",
                NONE4,
                vec![src(|_| R5 { i: 2 }, true)],
            ),
        ],
        "L10" => vec![
            claim(
                "L10",
                "g a g",
                "g(m+1,i) a(m)^-1 g(m,i)",
                i3,
                vec![src(|v| R6 { i: 1, j: v.i }, false)],
            ),
            Claim {
                note: Some("both forms are stated; the presentation theorem keeps only g(m+1,i) a(m)^-1 g(m,i)"),
                ..claim(
                    "L10",
                    "a g g",
                    "a(m) g(m+1,i) g(m,i)",
                    i3,
                    vec![src(|v| R6 { i: 1, j: v.i }, true)],
                )
            },
            claim(
                "L10",
                "b0 g b1 g",
                "b(m,0) g(m+1,j) b(m,1)^-1 g(m,j)",
                j4,
                vec![src(|v| R6 { i: 2, j: v.j }, false)],
            ),
            claim(
                "L10",
                "b1 g b0 g",
                "b(m,1) g(m+1,j) b(m,0)^-1 g(m,j)",
                j4,
                vec![src(|v| R6 { i: 2, j: v.j }, true)],
            ),
            claim(
                "L10",
                "c g c g",
                "c(k) g(m+1,l) c(k)^-1 g(m,l)",
                Apart { a: 'k', b: 'l', lo: 3 },
                both(|v| R6 { i: v.k, j: v.l }),
            ),
            claim(
                "L10",
                "c f0 c f1",
                "c(j) f(m+1,0) c(j)^-1 f(m,1)",
                j4,
                vec![src(|v| R6 { i: v.j, j: 2 }, false)],
            ),
            claim(
                "L10",
                "c f1 c f0",
                "c(j) f(m+1,1) c(j)^-1 f(m,0)",
                j4,
                vec![src(|v| R6 { i: v.j, j: 2 }, true)],
            ),
        ],
        "L12" => vec![
            claim(
                "L12",
                "f1 f0 b0",
                "f(m,1) f(m+1,0) b(m,0)^-1",
                NONE3,
                vec![src(|_| R7 { i: 1 }, false)],
            ),
            claim(
                "L12",
                "f0 a f1 b1",
                "f(m,0) a(m) f(m+1,1) b(m,1)^-1",
                NONE3,
                vec![src(|_| R7 { i: 1 }, true)],
            ),
            claim(
                "L12",
                "f0 g b0 g f1 c",
                "f(m,0) g(m,3) b(m,0) g(m+1,3) f(m+1,1) c(3)^-1",
                NONE4,
                vec![src(|_| R7 { i: 2 }, false)],
            ),
            claim(
                "L12",
                "f1 g b1 g f0 c",
                "f(m,1) g(m,3) b(m,1) g(m+1,3) f(m+1,0) c(3)^-1",
                NONE4,
                vec![src(|_| R7 { i: 2 }, true)],
            ),
            claim(
                "L12",
                "g g c g g c",
                "g(m,i) g(m,i+1) c(i) g(m+1,i+1) g(m+1,i) c(i+1)^-1",
                i3n,
                both(|v| R7 { i: v.i }),
            ),
        ],
        "L5_2" => vec![
            claim(
                "L5_2",
                "b1 a f1 b0",
                "b(m,1) a(m+1) f(m+2,1) b(m,0)^-1",
                NONE3,
                vec![src(|_| R8 { i: 1 }, false)],
            ),
            claim(
                "L5_2",
                "f0 c b1 g b0 c",
                "f(m,0) c(3) b(m+1,1) g(m+2,3) b(m+1,0)^-1 c(3)^-1",
                NONE4,
                vec![src(|_| R8 { i: 2 }, false)],
            ),
            claim(
                "L5_2",
                "g c c g c c",
                "g(m,i) c(i+1) c(i) g(m+2,i+1) c(i)^-1 c(i+1)^-1",
                i3n,
                vec![src(|v| R8 { i: v.i }, false)],
            ),
            claim(
                "L5_2",
                "b0 f0 a b1",
                "b(m,0) f(m+2,0) a(m+1)^-1 b(m,1)^-1",
                NONE3,
                vec![src(|_| R8 { i: 1 }, true)],
            ),
            Claim {
                note: Some(
                    "both derivation routes give b(m+1,0) where f(m+1,0) a(m+1) is stated; \
                     the two agree only if a(m+1) = f(m+1) f(m+2)",
                ),
                ..claim(
                    "L5_2",
                    "f1 c f0 a g b1 c",
                    "f(m,1) c(3) f(m+1,0) a(m+1) g(m+2,3) b(m+1,1)^-1 c(3)^-1",
                    NONE4,
                    vec![src(|_| R8 { i: 2 }, true)],
                )
            },
            claim(
                "L5_2",
                "g c a c a g a c a c",
                "g(m,i) c(i+1) a(m)^-1 c(i) a(m+1) g(m+2,i+1) a(m+1)^-1 c(i)^-1 a(m) c(i+1)^-1",
                i3n,
                vec![src(|v| R8 { i: v.i }, true)],
            ),
        ],
        other => return Err(Error::Unknown(other.to_string())),
    };
    Ok(v)
}

/// A stated conjugation rule `x^y = w`.
#[derive(Debug, Clone)]
pub struct ConjugationRule {
    pub lemma: &'static str,
    pub label: &'static str,
    /// The conjugated symbol, as a template.
    pub symbol: &'static str,
    /// The stated image.
    pub image: &'static str,
    pub domain: StrandDomain,
}

fn rule(lemma: &'static str, label: &'static str, symbol: &'static str, image: &'static str) -> ConjugationRule {
    ConjugationRule {
        lemma,
        label,
        symbol,
        image,
        domain: StrandDomain::Fixed { min_n: 3 },
    }
}

/// The `ρ₁`-conjugation rules (the `σ₁`-shift rules are checked separately).
pub fn conjugation_rules(lemma: &str) -> Result<Vec<ConjugationRule>> {
    let l3 = StrandDomain::Single {
        v: 'l',
        lo: 3,
        slack: 0,
    };
    let i3 = StrandDomain::Single {
        v: 'i',
        lo: 3,
        slack: 0,
    };
    Ok(match lemma {
        "L3_1" => vec![
            ConjugationRule {
                domain: StrandDomain::Fixed { min_n: 2 },
                ..rule("L3_1", "a0", "a(0)", "a(0)^-1")
            },
            rule("L3_1", "b00", "b(0,0)", "b(0,1) a(0)^-1"),
            rule("L3_1", "b01", "b(0,1)", "b(0,0) a(0)^-1"),
            rule("L3_1", "b10", "b(1,0)", "a(0) b(1,1) a(1)^-1 a(0)^-1"),
            rule("L3_1", "b20", "b(2,0)", "a(0) a(1) b(2,1) a(2)^-1 a(1)^-1 a(0)^-1"),
            ConjugationRule {
                domain: l3,
                ..rule("L3_1", "c", "c(l)", "c(l) a(0)^-1")
            },
            rule("L3_1", "f00", "f(0,0)", "f(0,1)"),
            rule("L3_1", "f01", "f(0,1)", "f(0,0)"),
            rule("L3_1", "f10", "f(1,0)", "a(0) f(1,1) a(0)^-1"),
            rule("L3_1", "f11", "f(1,1)", "a(0) f(1,0) a(0)^-1"),
            ConjugationRule {
                domain: i3,
                ..rule("L3_1", "g0", "g(0,i)", "g(0,i)")
            },
            ConjugationRule {
                domain: i3,
                ..rule("L3_1", "g1", "g(1,i)", "a(0) g(1,i) a(0)^-1")
            },
        ],
        "CON" => vec![
            ConjugationRule {
                domain: StrandDomain::Fixed { min_n: 2 },
                ..rule("CON", "a1", "a(1)", "a(0) a(1)^-1 a(0)^-1")
            },
            rule("CON", "f21", "f(2,1)", "a(0) a(1) f(2,0) a(1)^-1 a(0)^-1"),
            ConjugationRule {
                domain: i3,
                ..rule("CON", "g2", "g(2,i)", "a(0) a(1) g(2,i) a(1)^-1 a(0)^-1")
            },
        ],
        _ => vec![],
    })
}

/// Symbols whose `σ₁`-shift rule `x^{σ₁^{-m}} = x shifted by m` is stated.
pub const SHIFT_RULE_SYMBOLS: [&str; 8] = [
    "a(0)", "b(0,0)", "b(0,1)", "c(3)", "f(0,0)", "f(0,1)", "g(0,3)", "g(1,4)",
];

fn fam(label: &'static str, template: &'static str, domain: StrandDomain) -> Family {
    Family {
        label,
        template,
        domain,
    }
}

/// The relation families of the presentation theorem for `VBₙ′`.
pub fn theorem_vb() -> Vec<Family> {
    use StrandDomain::*;
    let j4 = Single {
        v: 'j',
        lo: 4,
        slack: 0,
    };
    let ij = FarPair { a: 'i', b: 'j', lo: 3 };
    let i3n = Single {
        v: 'i',
        lo: 3,
        slack: 1,
    };
    let i3 = Single {
        v: 'i',
        lo: 3,
        slack: 0,
    };
    vec![
        fam("b c b c", "b(m,0) c(j) b(m+1,0)^-1 c(j)^-1", j4),
        fam("c c c c", "c(i) c(j) c(i)^-1 c(j)^-1", ij),
        fam("b a c a b c", "b(m,1) a(m)^-1 c(j) a(m+1) b(m+1,1)^-1 c(j)^-1", j4),
        fam("c a c c a c", "c(i) a(m)^-1 c(j) c(i)^-1 a(m) c(j)^-1", ij),
        fam("b b b", "b(m+1,0) b(m+2,0)^-1 b(m,0)^-1", NONE3),
        fam("b c b c b c", "b(m,0) c(3) b(m+2,0) c(3)^-1 b(m+1,0)^-1 c(3)^-1", NONE4),
        fam("c braid", "c(i) c(i+1) c(i) c(i+1)^-1 c(i)^-1 c(i+1)^-1", i3n),
        fam(
            "a b a b a b",
            "a(m) b(m+1,1) a(m+2) b(m+2,1)^-1 a(m+1)^-1 b(m,1)^-1",
            NONE3,
        ),
        fam(
            "b a c twisted braid",
            "b(m,1) a(m)^-1 c(3) a(m+1) b(m+2,1) a(m+2)^-1 a(m+1)^-1 c(3)^-1 a(m) a(m+1) b(m+1,1)^-1 c(3)^-1",
            NONE4,
        ),
        fam(
            "c a twisted braid",
            "c(i) a(m)^-1 c(i+1) a(m)^-1 c(i) c(i+1)^-1 a(m) c(i)^-1 a(m) c(i+1)^-1",
            i3n,
        ),
        fam("g^2", "g(m,i)^2", i3),
        fam(
            "(f g)^2",
            "f(m) g(m,k) f(m) g(m,k)",
            Single {
                v: 'k',
                lo: 4,
                slack: 0,
            },
        ),
        fam("(g g)^2", "g(m,i) g(m,j) g(m,i) g(m,j)", ij),
        fam("f^3", "f(m)^3", NONE3),
        fam("(f g3)^3", "f(m) g(m,3) f(m) g(m,3) f(m) g(m,3)", NONE4),
        fam("(g g)^3", "g(m,i) g(m,i+1) g(m,i) g(m,i+1) g(m,i) g(m,i+1)", i3n),
        fam("g a g", "g(m+1,i) a(m)^-1 g(m,i)", i3),
        fam("b1 g b0 g", "b(m,1) g(m+1,j) b(m,0)^-1 g(m,j)", j4),
        fam(
            "c g c g",
            "c(k) g(m+1,l) c(k)^-1 g(m,l)",
            Apart { a: 'k', b: 'l', lo: 3 },
        ),
        fam("c f c f", "c(j) f(m+1) c(j)^-1 f(m)^-1", j4),
        fam("f f b0", "f(m)^-1 f(m+1) b(m,0)^-1", NONE3),
        fam("f a f b1", "f(m) a(m) f(m+1)^-1 b(m,1)^-1", NONE3),
        fam("f g b0 g f c", "f(m) g(m,3) b(m,0) g(m+1,3) f(m+1)^-1 c(3)^-1", NONE4),
        fam("f g b1 g f c", "f(m)^-1 g(m,3) b(m,1) g(m+1,3) f(m+1) c(3)^-1", NONE4),
        fam("g g c g g c", "g(m,i) g(m,i+1) c(i) g(m+1,i+1) g(m+1,i) c(i+1)^-1", i3n),
    ]
}

/// The `VB₃′` presentation before elimination; the fourth family is
/// printed with `f(m,0)^-1` where `b(m,0)^-1` is meant.
pub fn vb3_start() -> Vec<Family> {
    vec![
        fam("b b b", "b(m+1,0) b(m+2,0)^-1 b(m,0)^-1", NONE3),
        fam(
            "a b a b a b",
            "a(m) b(m+1,1) a(m+2) b(m+2,1)^-1 a(m+1)^-1 b(m,1)^-1",
            NONE3,
        ),
        fam("f^3", "f(m)^3", NONE3),
        fam("f f b0", "f(m)^-1 f(m+1) b(m,0)^-1", NONE3),
        fam("f a f b1", "f(m) a(m) f(m+1)^-1 b(m,1)^-1", NONE3),
    ]
}

/// The `VB₃′` presentation on `a(m), f(m)`.
pub fn vb3_final() -> Vec<Family> {
    vec![
        fam("f chain", "f(m+1)^-1 f(m+2) f(m+3)^-1 f(m+2) f(m+1)^-1 f(m)", NONE3),
        fam(
            "a f ladder",
            "a(m) f(m+1) a(m+1) f(m+2)^-1 a(m+2) f(m+3) a(m+2)^-1 f(m+2)^-1 a(m+1)^-1 f(m+1) a(m)^-1 f(m)^-1",
            NONE3,
        ),
        fam("f^3", "f(m)^3", NONE3),
    ]
}

/// The `WB₃′` presentation on `a(m), f(m)`.
pub fn wb3_final() -> Vec<Family> {
    let mut v = vb3_final();
    v.push(fam(
        "a f a f f f",
        "a(m) f(m+1)^-1 a(m+1) f(m+2)^-1 f(m+1)^-1 f(m)^-1",
        NONE3,
    ));
    v
}

/// The extra `WB₃′` family before the `f³` reduction.
pub fn wb3_extra() -> Family {
    fam(
        "f a f a f f f",
        "f(m) a(m) f(m+1)^-1 a(m+1) f(m+2)^-1 f(m+1)^-1 f(m)",
        NONE3,
    )
}

/// The relation list of the `WB₄′` presentation theorem.
pub fn theorem_wb4() -> Vec<Family> {
    vec![
        fam("T1", "f(m) f(m+1)^-1 f(m+2) = f(m+1) f(m+2)^-1 f(m+3)", NONE4),
        fam("T2", "f(m)^-1 f(m+1) c(3) f(m+2)^-1 f(m+3) = c(3) f(m+1)^-1 f(m+2) c(3)", NONE4),
        fam("T3", "f(m) f(m+1) = f(m+2) f(m+3)", NONE4),
        fam(
            "T4",
            "f(m)^-1 f(m+1)^-1 f(m)^-1 c(3) f(m+1) f(m+3)^-1 f(m+2) = c(3) f(m+1)^-1 f(m+2)^-1 f(m+1) f(m)^-1 c(3) f(m+1)",
            NONE4,
        ),
        fam(
            "T5",
            "f(m+2)^-1 f(m+1) c(3)^-1 f(m) c(3) f(m+1)^-1 f(m+2)^-1 f(m+1) c(3)^-1 f(m) c(3) f(m+1)^-1",
            NONE4,
        ),
        fam("T6", "f(m)^3", NONE4),
        fam(
            "T7",
            "f(m+2)^-1 f(m+1) c(3)^-1 f(m) c(3) f(m+1)^-1 f(m+2)^-1 f(m+1) f(m) c(3)^-1 f(m-1) c(3) f(m)^-1",
            NONE4,
        ),
        fam(
            "T8",
            "f(m-1) c(3)^-1 f(m-2) c(3) f(m-1)^-1 c(3)^-1 f(m-1) c(3) f(m)^-1 f(m+1)^-1 = c(3)^-1",
            NONE4,
        ),
        fam(
            "T9",
            "f(m) f(m-1) c(3)^-1 f(m-2) c(3) f(m-1)^-1 f(m)^-1 f(m+1)^-1 f(m) c(3)^-1 f(m-1) c(3) f(m)^-1 f(m+1) = c(3)",
            NONE4,
        ),
    ]
}

/// The two closed-form identities the `WB₄′` derivation arrives at.
pub fn wb4_claimed_identities() -> Vec<Family> {
    vec![
        fam(
            "g(m+2,3)",
            "g(m+2,3) = f(m+2)^-1 f(m+1) c(3)^-1 f(m) c(3) f(m+1)^-1",
            NONE4,
        ),
        fam("a(m)", "a(m) = f(m) f(m+1)", NONE3),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_templates_parse() {
        for id in LEMMAS {
            for c in claims(id).unwrap() {
                for v in c.domain.enumerate(7) {
                    c.word(&v).unwrap();
                }
            }
            for r in conjugation_rules(id).unwrap() {
                for v in r.domain.enumerate(7) {
                    parse_relation(r.symbol, &v).unwrap();
                    parse_relation(r.image, &v).unwrap();
                }
            }
        }
        for f in theorem_vb()
            .iter()
            .chain(&theorem_wb4())
            .chain(&wb3_final())
            .chain(&vb3_start())
        {
            f.templates(7).unwrap();
        }
    }

    #[test]
    fn theorem_has_25_families() {
        assert_eq!(theorem_vb().len(), 25);
        assert_eq!(theorem_wb4().len(), 9);
    }

    #[test]
    fn domains() {
        let d = StrandDomain::FarPair { a: 'i', b: 'j', lo: 3 };
        assert_eq!(d.enumerate(5), vec![]);
        assert_eq!(d.enumerate(6).len(), 1);
        let s = StrandDomain::Single {
            v: 'i',
            lo: 3,
            slack: 1,
        };
        assert_eq!(s.enumerate(4), vec![]);
        assert_eq!(s.enumerate(5).len(), 1);
        let a = StrandDomain::Apart { a: 'k', b: 'l', lo: 3 };
        assert_eq!(a.enumerate(6).len(), 2);
    }

    #[test]
    fn equations_become_relators() {
        let w = parse_relation("a(m) = f(m) f(m+1)", &Vars::default()).unwrap();
        assert_eq!(w, Word::parse("a(0) f(1,0)^-1 f(0,0)^-1").unwrap());
    }
}
