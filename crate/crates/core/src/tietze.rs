//! Tietze transformations on parametric presentations, and the scripted
//! reductions of the commutator subgroups.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::catalog::{parse_relation, Vars};
use crate::error::{Error, Result};
use crate::presets::{Domain, GenDecl, Group, Presentation, Relator};
use crate::rewriter::{assemble_derived_presentation, canonical, canonical_template, AssembleOptions};
use crate::word::{Letter, ShiftRule, Symbol, Word};

/// Solve the relator `w = 1` for the single occurrence of `target`.
///
/// For `u x v = 1` this is `x = u⁻¹ v⁻¹`, for `u x⁻¹ v = 1` it is `x = v u`.
pub fn solve_for(w: &Word, target: &Symbol) -> Result<Word> {
    let occ = w.occurrences(target);
    if occ != 1 {
        return Err(Error::NotSolvable {
            target: target.to_string(),
            occurrences: occ,
        });
    }
    let letters = w.letters();
    let p = letters
        .iter()
        .position(|l| &l.symbol == target)
        .expect("one occurrence");
    let u = Word::new(letters[..p].to_vec());
    let v = Word::new(letters[p + 1..].to_vec());
    Ok(if letters[p].inverse {
        v.concat(&u)
    } else {
        u.inverse().concat(&v.inverse())
    })
}

/// One step of a reduction script. Relators are named by a template; the
/// presentation must contain one with the same canonical template.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Step {
    /// Solve `using` for the one member of the `target` family it contains
    /// and substitute that expression for the whole family.
    Eliminate {
        target: Symbol,
        using: Word,
    },
    /// `using` contains the lowest and highest family members it mentions
    /// once each; keep the members `keep`, express the rest recursively.
    EliminateRecursive {
        target: Symbol,
        using: Word,
        keep: (i64, i64),
    },
    /// Given the relator `x^k` of a family, reduce powers of its members
    /// in every other relator to exponents in `(-k/2, k/2]`.
    ApplyKnownRelator {
        relator: Word,
    },
    DropFreelyTrivial,
    /// Drop relators equal to an earlier one up to rotation, inversion and
    /// (for templates) shift.
    DropDuplicates,
}

fn family_display(s: &Symbol) -> String {
    Word::gen(s.clone()).template_display().to_string()
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Eliminate { target, using } => {
                write!(
                    f,
                    "eliminate {} using {}",
                    family_display(target),
                    using.template_display()
                )
            }
            Step::EliminateRecursive { target, using, keep } => write!(
                f,
                "eliminate {} recursively, keeping m in [{}, {}], using {}",
                family_display(target),
                keep.0,
                keep.1,
                using.template_display()
            ),
            Step::ApplyKnownRelator { relator } => write!(f, "reduce powers using {}", relator.template_display()),
            Step::DropFreelyTrivial => write!(f, "drop freely trivial relators"),
            Step::DropDuplicates => write!(f, "drop duplicate relators"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranscriptEntry {
    pub step: usize,
    pub action: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub definition: Option<String>,
    pub generators: Vec<String>,
    pub generator_count: Option<usize>,
    pub relators: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct Run {
    pub start: Presentation,
    pub result: Presentation,
    pub transcript: Vec<TranscriptEntry>,
    /// The presentation after each step.
    pub snapshots: Vec<Presentation>,
}

/// The generators themselves, or `None` while an unrestricted family
/// remains.
pub fn generator_list(p: &Presentation) -> Option<Vec<Symbol>> {
    let mut out = Vec::new();
    for g in &p.generators {
        match g {
            GenDecl::Concrete(s) => out.push(s.clone()),
            GenDecl::Family {
                domain: Domain::All, ..
            } => return None,
            GenDecl::Family {
                pattern,
                domain: Domain::Window(lo, hi),
            } => out.extend((*lo..=*hi).map(|m| pattern.shift(m))),
            GenDecl::Recursive { pattern, keep, .. } => out.extend((keep.0..=keep.1).map(|m| pattern.shift(m))),
        }
    }
    Some(out)
}

/// Number of generators, or `None` while an unrestricted family remains.
pub fn generator_count(p: &Presentation) -> Option<usize> {
    generator_list(p).map(|g| g.len())
}

fn gen_display(g: &GenDecl) -> String {
    match g {
        GenDecl::Concrete(s) => s.to_string(),
        GenDecl::Family {
            pattern,
            domain: Domain::All,
        } => format!("{} for m in Z", family_display(pattern)),
        GenDecl::Family {
            pattern,
            domain: Domain::Window(a, b),
        } => {
            format!("{} for m in [{a},{b}]", family_display(pattern))
        }
        GenDecl::Recursive { pattern, keep, .. } => {
            format!("{} for m in [{},{}]", family_display(pattern), keep.0, keep.1)
        }
    }
}

fn relator_display(r: &Relator) -> String {
    if r.parametric {
        r.word.template_display().to_string()
    } else {
        r.word.to_string()
    }
}

fn find_relator(p: &Presentation, using: &Word, step: usize) -> Result<usize> {
    let key = canonical_template(using);
    p.relators
        .iter()
        .position(|r| canonical_template(&r.word) == key)
        .ok_or_else(|| Error::ScriptPreconditionFailed {
            step,
            reason: format!("no relator of the form {}", using.template_display()),
        })
}

fn members(w: &Word, pattern: &Symbol) -> Vec<i64> {
    w.letters()
        .iter()
        .filter_map(|l| l.symbol.match_shifted(pattern))
        .collect()
}

fn map_words(p: &mut Presentation, f: impl Fn(&Word) -> Word) {
    for r in &mut p.relators {
        let w = f(&r.word);
        *r = Relator {
            word: w.clone(),
            parametric: r.parametric && w.m_span().is_some(),
            label: r.label.clone(),
        };
    }
    for g in &mut p.generators {
        if let GenDecl::Recursive { up, down, .. } = g {
            *up = f(up);
            *down = f(down);
        }
    }
}

/// Reduce every maximal cyclic run of a symbol matching `pattern` modulo `k`.
pub fn reduce_powers(w: &Word, pattern: &Symbol, k: i64) -> Word {
    let c = w.cyclically_reduced();
    let letters = c.letters();
    if letters.is_empty() || k <= 0 {
        return c;
    }
    // Start at a run boundary so no run wraps around.
    let start = (0..letters.len()).find(|&i| {
        let prev = &letters[(i + letters.len() - 1) % letters.len()];
        prev.symbol != letters[i].symbol
    });
    let Some(start) = start else {
        // a single symbol: the word is a power of it
        let s = &letters[0].symbol;
        if s.match_shifted(pattern).is_none() {
            return c;
        }
        let e = c.exponent_sum_of(s);
        return Word::power_of(s.clone(), sym_mod(e, k));
    };
    let rotated = c.rotate(start);
    let mut out: Vec<Letter> = Vec::new();
    let mut run: Option<(Symbol, i64)> = None;
    let flush = |run: &mut Option<(Symbol, i64)>, out: &mut Vec<Letter>| {
        if let Some((s, e)) = run.take() {
            let e = if s.match_shifted(pattern).is_some() {
                sym_mod(e, k)
            } else {
                e
            };
            out.extend(Word::power_of(s, e).into_letters());
        }
    };
    for l in rotated.letters() {
        match &mut run {
            Some((s, e)) if *s == l.symbol => *e += l.exponent(),
            _ => {
                flush(&mut run, &mut out);
                run = Some((l.symbol.clone(), l.exponent()));
            }
        }
    }
    flush(&mut run, &mut out);
    Word::new(out).cyclically_reduced()
}

/// `e mod k` in `(-k/2, k/2]`.
fn sym_mod(e: i64, k: i64) -> i64 {
    let r = e.rem_euclid(k);
    if 2 * r > k {
        r - k
    } else {
        r
    }
}

/// Apply one step.
pub fn apply_step(p: &Presentation, step: &Step, index: usize) -> Result<(Presentation, Option<String>)> {
    let mut q = p.clone();
    let fail = |reason: String| Error::ScriptPreconditionFailed { step: index, reason };
    match step {
        Step::Eliminate { target, using } => {
            let at = find_relator(p, using, index)?;
            let gi = q
                .generators
                .iter()
                .position(|g| matches!(g, GenDecl::Family { pattern, domain: Domain::All } if target.match_shifted(pattern) == Some(0)))
                .ok_or_else(|| fail(format!("{} is not a generator family", family_display(target))))?;
            let w = &p.relators[at].word;
            let idx = members(w, target);
            if idx.len() != 1 {
                return Err(fail(format!(
                    "{} meets the family {} {} times",
                    w.template_display(),
                    family_display(target),
                    idx.len()
                )));
            }
            let member = target.shift(idx[0]);
            let expr = solve_for(w, &member)?.shift(-idx[0]);
            let rule = ShiftRule::new(target.clone(), expr.clone()).map_err(|e| fail(e.to_string()))?;
            q.relators.remove(at);
            q.generators.remove(gi);
            map_words(&mut q, |w| rule.apply(w));
            let def = format!("{} = {}", family_display(target), expr.template_display());
            Ok((q, Some(def)))
        }
        Step::EliminateRecursive { target, using, keep } => {
            let at = find_relator(p, using, index)?;
            let gi = q
                .generators
                .iter()
                .position(|g| matches!(g, GenDecl::Family { pattern, domain: Domain::All } if target.match_shifted(pattern) == Some(0)))
                .ok_or_else(|| fail(format!("{} is not a generator family", family_display(target))))?;
            let w = p.relators[at].word.clone();
            let idx = members(&w, target);
            let (lo, hi) = match (idx.iter().min(), idx.iter().max()) {
                (Some(&a), Some(&b)) if a < b => (a, b),
                _ => {
                    return Err(fail(format!(
                        "{} spans no range of {}",
                        w.template_display(),
                        family_display(target)
                    )))
                }
            };
            if keep.1 - keep.0 + 1 != hi - lo {
                return Err(fail(format!("keep range must have width {}", hi - lo)));
            }
            let up = solve_for(&w, &target.shift(hi))
                .map_err(|e| fail(e.to_string()))?
                .shift(-hi);
            let down = solve_for(&w, &target.shift(lo))
                .map_err(|e| fail(e.to_string()))?
                .shift(-lo);
            q.relators.remove(at);
            q.generators[gi] = GenDecl::Recursive {
                pattern: target.clone(),
                keep: *keep,
                up: up.clone(),
                down: down.clone(),
            };
            let def = format!(
                "{} = {}; {} = {}",
                family_display(target),
                up.template_display(),
                family_display(target),
                down.template_display()
            );
            Ok((q, Some(def)))
        }
        Step::ApplyKnownRelator { relator } => {
            let at = find_relator(p, relator, index)?;
            let w = &p.relators[at].word;
            let syms = w.symbols();
            let [s] = syms.as_slice() else {
                return Err(fail(format!(
                    "{} is not a power of one generator",
                    w.template_display()
                )));
            };
            let k = w.exponent_sum_of(s).abs();
            let pattern = s.shift(-s.m_index().unwrap_or(0));
            let key = canonical_template(w);
            for (i, r) in q.relators.iter_mut().enumerate() {
                if i == at || canonical_template(&r.word) == key {
                    continue;
                }
                let nw = reduce_powers(&r.word, &pattern, k);
                r.parametric = r.parametric && nw.m_span().is_some();
                r.word = nw;
            }
            Ok((q, None))
        }
        Step::DropFreelyTrivial => {
            q.relators.retain(|r| !r.word.cyclically_reduced().is_empty());
            Ok((q, None))
        }
        Step::DropDuplicates => {
            let mut seen = BTreeSet::new();
            q.relators.retain(|r| {
                let key = if r.parametric {
                    canonical_template(&r.word)
                } else {
                    canonical(&r.word)
                };
                seen.insert((r.parametric, key))
            });
            Ok((q, None))
        }
    }
}

/// Run `steps` on `p`, recording a transcript.
pub fn run_steps(p: Presentation, steps: &[Step]) -> Result<Run> {
    let mut cur = p.clone();
    let mut transcript = Vec::new();
    let mut snapshots = Vec::new();
    for (i, s) in steps.iter().enumerate() {
        let (next, definition) = apply_step(&cur, s, i + 1)?;
        cur = next;
        transcript.push(TranscriptEntry {
            step: i + 1,
            action: s.to_string(),
            definition,
            generators: cur.generators.iter().map(gen_display).collect(),
            generator_count: generator_count(&cur),
            relators: cur.relators.iter().map(relator_display).collect(),
        });
        snapshots.push(cur.clone());
    }
    Ok(Run {
        start: p,
        result: cur,
        transcript,
        snapshots,
    })
}

/// The preset reductions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ScriptId {
    #[serde(rename = "VB3_REDUCE")]
    Vb3Reduce,
    #[serde(rename = "VBN_REDUCE")]
    VbnReduce,
    #[serde(rename = "WB3_REDUCE")]
    Wb3Reduce,
    #[serde(rename = "WB4_REDUCE")]
    Wb4Reduce,
    #[serde(rename = "WBN_REDUCE")]
    WbnReduce,
}

impl ScriptId {
    pub const ALL: [ScriptId; 5] = [
        ScriptId::Vb3Reduce,
        ScriptId::VbnReduce,
        ScriptId::Wb3Reduce,
        ScriptId::Wb4Reduce,
        ScriptId::WbnReduce,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ScriptId::Vb3Reduce => "VB3_REDUCE",
            ScriptId::VbnReduce => "VBN_REDUCE",
            ScriptId::Wb3Reduce => "WB3_REDUCE",
            ScriptId::Wb4Reduce => "WB4_REDUCE",
            ScriptId::WbnReduce => "WBN_REDUCE",
        }
    }

    pub fn group(self) -> Group {
        match self {
            ScriptId::Vb3Reduce | ScriptId::VbnReduce => Group::Virtual,
            _ => Group::Welded,
        }
    }

    /// Ranks the script applies to.
    pub fn accepts(self, n: u32) -> bool {
        match self {
            ScriptId::Vb3Reduce | ScriptId::Wb3Reduce => n == 3,
            ScriptId::Wb4Reduce => n == 4,
            ScriptId::VbnReduce | ScriptId::WbnReduce => n >= 4,
        }
    }

    /// The script's natural rank when none is given.
    pub fn default_rank(self) -> u32 {
        match self {
            ScriptId::Vb3Reduce | ScriptId::Wb3Reduce => 3,
            ScriptId::Wb4Reduce | ScriptId::VbnReduce => 4,
            ScriptId::WbnReduce => 5,
        }
    }
}

impl fmt::Display for ScriptId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScriptId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ScriptId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unknown(s.to_string()))
    }
}

fn t(s: &str) -> Word {
    parse_relation(s, &Vars::default()).expect("script template")
}

fn ti(s: &str, i: u32) -> Word {
    parse_relation(s, &Vars { i, ..Vars::default() }).expect("script template")
}

fn elim(target: Symbol, using: &str) -> Step {
    Step::Eliminate {
        target,
        using: t(using),
    }
}

fn elim_rec(target: Symbol, using: Word, keep: (i64, i64)) -> Step {
    Step::EliminateRecursive { target, using, keep }
}

const F_RECURSION: &str = "f(m+1)^-1 f(m+2) f(m+3)^-1 f(m+2) f(m+1)^-1 f(m)";

fn eliminate_b() -> Vec<Step> {
    vec![
        elim(Symbol::B(0, 1), "f(m) a(m) f(m+1)^-1 b(m,1)^-1"),
        elim(Symbol::B(0, 0), "f(m)^-1 f(m+1) b(m,0)^-1"),
        Step::DropFreelyTrivial,
        Step::DropDuplicates,
    ]
}

/// The steps of a script at rank `n`.
pub fn script(id: ScriptId, n: u32) -> Result<Vec<Step>> {
    if !id.accepts(n) {
        return Err(Error::BadRank(n));
    }
    let mut s = eliminate_b();
    match id {
        ScriptId::Vb3Reduce => {}
        ScriptId::VbnReduce => {
            s.push(elim(Symbol::A(0), "g(m+1,3) a(m)^-1 g(m,3)"));
            s.push(elim_rec(Symbol::F(0, 0), t(F_RECURSION), (0, 2)));
            s.push(elim_rec(
                Symbol::G(0, 3),
                t("f(m) g(m,3) f(m)^-1 f(m+1) g(m+1,3) f(m+1)^-1 c(3)^-1"),
                (0, 0),
            ));
            for i in 3..n - 1 {
                s.push(elim_rec(
                    Symbol::G(0, i + 1),
                    ti("g(m,i) g(m,i+1) c(i) g(m+1,i+1) g(m+1,i) c(i+1)^-1", i),
                    (0, 0),
                ));
            }
            s.push(Step::DropFreelyTrivial);
            s.push(Step::DropDuplicates);
        }
        ScriptId::Wb3Reduce => {
            s.push(Step::ApplyKnownRelator { relator: t("f(m)^3") });
            s.push(Step::DropDuplicates);
            s.push(elim_rec(Symbol::F(0, 0), t(F_RECURSION), (0, 2)));
            s.push(elim_rec(
                Symbol::A(0),
                t("a(m) f(m+1)^-1 a(m+1) f(m+2)^-1 f(m+1)^-1 f(m)^-1"),
                (0, 0),
            ));
        }
        ScriptId::Wb4Reduce | ScriptId::WbnReduce => {
            for i in (3..n - 1).rev() {
                s.push(Step::Eliminate {
                    target: Symbol::G(0, i + 1),
                    using: ti("g(m,i) c(i+1) c(i) g(m+2,i+1) c(i)^-1 c(i+1)^-1", i),
                });
            }
            s.push(elim(
                Symbol::G(0, 3),
                "f(m) c(3) f(m+1) a(m+1) f(m+2)^-1 g(m+2,3) f(m+2)^-1 f(m+1) c(3)^-1",
            ));
            s.push(elim_rec(
                Symbol::A(0),
                t("f(m) a(m) f(m+1)^-1 a(m+1) f(m+2)^-1 f(m+1)^-1 f(m)"),
                (0, 0),
            ));
            s.push(elim_rec(Symbol::F(0, 0), t(F_RECURSION), (0, 2)));
            s.push(Step::ApplyKnownRelator { relator: t("f(m)^3") });
            s.push(Step::DropFreelyTrivial);
            s.push(Step::DropDuplicates);
        }
    }
    Ok(s)
}

/// The presentation a script starts from: the derived presentation of
/// the commutator subgroup with `f(m,1)` eliminated.
pub fn script_start(id: ScriptId, n: u32) -> Result<Presentation> {
    if !id.accepts(n) {
        return Err(Error::BadRank(n));
    }
    assemble_derived_presentation(id.group(), n, AssembleOptions::default(), None)
}

pub fn run_script(id: ScriptId, n: u32) -> Result<Run> {
    let steps = script(id, n)?;
    let mut run = run_steps(script_start(id, n)?, &steps)?;
    run.result.name = format!("{}{n}' reduced", id.group().short());
    Ok(run)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::verify::compare_templates;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn solving() {
        let r = w("a(0) b(0,1) c(3)");
        assert_eq!(solve_for(&r, &Symbol::B(0, 1)).unwrap(), w("a(0)^-1 c(3)^-1"));
        let r = w("a(0) b(0,1)^-1 c(3)");
        assert_eq!(solve_for(&r, &Symbol::B(0, 1)).unwrap(), w("c(3) a(0)"));
        assert!(matches!(
            solve_for(&w("a(0) a(0)"), &Symbol::A(0)),
            Err(Error::NotSolvable { occurrences: 2, .. })
        ));
    }

    #[test]
    fn powers() {
        let f = Symbol::F(0, 0);
        assert_eq!(reduce_powers(&w("f(0,0) a(0) f(0,0)"), &f, 3), w("a(0) f(0,0)^-1"));
        assert_eq!(reduce_powers(&w("f(1,0)^4"), &f, 3), w("f(1,0)"));
        assert_eq!(
            reduce_powers(&w("g(0,3)^-1 a(0)"), &Symbol::G(0, 3), 2),
            w("g(0,3) a(0)")
        );
    }

    #[test]
    fn script_names_round_trip() {
        for id in ScriptId::ALL {
            assert_eq!(id.name().parse::<ScriptId>().unwrap(), id);
        }
    }

    #[test]
    fn vbn_counts() {
        for n in 4..=6 {
            let run = run_script(ScriptId::VbnReduce, n).unwrap();
            assert_eq!(generator_count(&run.result), Some(2 * n as usize - 3), "n={n}");
        }
    }

    #[test]
    fn vb3_reaches_the_three_families() {
        let run = run_script(ScriptId::Vb3Reduce, 3).unwrap();
        let c = compare_templates(&run.result, &catalog::vb3_final(), 3).unwrap();
        assert!(c.equal(), "{c:?}");
        assert_eq!(generator_count(&run.result), None);
    }

    #[test]
    fn wb3_passes_through_the_four_families() {
        let run = run_script(ScriptId::Wb3Reduce, 3).unwrap();
        let before_recursion = run
            .transcript
            .iter()
            .position(|e| e.action.contains("recursively"))
            .unwrap();
        let c = compare_templates(&run.snapshots[before_recursion - 1], &catalog::wb3_final(), 3).unwrap();
        assert!(c.equal(), "{c:?}");
        let gens: Vec<String> = generator_list(&run.result)
            .unwrap()
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(gens, ["a(0)", "f(0,0)", "f(1,0)", "f(2,0)"]);
    }

    #[test]
    fn welded_counts() {
        assert_eq!(
            generator_count(&run_script(ScriptId::Wb4Reduce, 4).unwrap().result),
            Some(5)
        );
        assert_eq!(
            generator_count(&run_script(ScriptId::WbnReduce, 5).unwrap().result),
            Some(6)
        );
    }

    #[test]
    fn missing_relator_is_reported() {
        let p = script_start(ScriptId::Vb3Reduce, 3).unwrap();
        let step = elim(Symbol::A(0), "a(m) a(m+1)");
        assert!(matches!(
            apply_step(&p, &step, 1),
            Err(Error::ScriptPreconditionFailed { step: 1, .. })
        ));
    }
}
