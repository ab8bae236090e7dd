//! Exact abelianization of truncated presentations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presets::{GenDecl, Group, Presentation, Relator};
use crate::rewriter::{assemble_derived_presentation, AssembleOptions};
use crate::tietze::{run_script, ScriptId};
use crate::word::{Family, Symbol, Word};

/// A dense integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix");
            for (j, x) in r.iter().enumerate() {
                m.set(i, j, (*x).into());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Determinant by fraction-free elimination; square matrices only.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(dst, j) + q * self.get(src, j);
            self.set(dst, j, v);
        }
    }

    /// col[dst] += q * col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, dst) + q * self.get(i, src);
            self.set(i, dst, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `U·M·V = D`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub d: IntegerMatrix,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries, in order.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d.get(i, i).clone())
            .filter(|x| !x.is_zero())
            .collect()
    }
}

fn min_pivot(d: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows {
        for j in t..d.cols {
            let x = d.get(i, j);
            if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smith normal form, pivoting on entries of least absolute value.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let (r, c) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = IntegerMatrix::identity(r);
    let mut v = IntegerMatrix::identity(c);
    'outer: for t in 0..r.min(c) {
        // Each round moves the smallest entry of the block to (t, t) and
        // reduces its row and column; remainders feed the next round.
        loop {
            let Some((pi, pj)) = min_pivot(&d, t) else { break 'outer };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            let mut clean = true;
            for i in t + 1..r {
                let q = -d.get(i, t).div_floor(d.get(t, t));
                if !q.is_zero() {
                    d.add_row(i, t, &q);
                    u.add_row(i, t, &q);
                }
                clean &= d.get(i, t).is_zero();
            }
            for j in t + 1..c {
                let q = -d.get(t, j).div_floor(d.get(t, t));
                if !q.is_zero() {
                    d.add_col(j, t, &q);
                    v.add_col(j, t, &q);
                }
                clean &= d.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            // the pivot must divide the rest of the block
            let p = d.get(t, t).clone();
            match (t + 1..r).find(|&i| (t + 1..c).any(|j| !d.get(i, j).is_multiple_of(&p))) {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { d, u, v }
}

/// Torsion coefficients (each > 1, dividing the next) and free rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub torsion: Vec<u64>,
    pub free_rank: usize,
}

impl AbelianInvariants {
    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            k => parts.push(format!("Z^{k}")),
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Invariants of the abelian group presented by the rows of `m`.
pub fn invariants_of(m: &IntegerMatrix) -> Result<AbelianInvariants> {
    let diag = smith_normal_form(m).diagonal();
    let torsion = diag
        .iter()
        .filter(|x| !x.is_one())
        .map(|x| {
            x.to_u64()
                .ok_or_else(|| Error::ShapeMismatch(format!("invariant factor {x} too large")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AbelianInvariants {
        torsion,
        free_rank: m.cols - diag.len(),
    })
}

/// Exponent-sum matrix of a finite presentation; columns in symbol order.
pub fn relation_matrix(p: &Presentation) -> Result<(Vec<Symbol>, IntegerMatrix)> {
    if !p.is_finite() {
        return Err(Error::ParametricInput);
    }
    let gens: BTreeSet<Symbol> = p.concrete_generators().into_iter().collect();
    let cols: Vec<Symbol> = gens.into_iter().collect();
    let index: BTreeMap<&Symbol, usize> = cols.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut m = IntegerMatrix::zeros(p.relators.len(), cols.len());
    for (i, r) in p.relators.iter().enumerate() {
        for (s, e) in r.word.exponent_vector() {
            let j = *index
                .get(&s)
                .ok_or_else(|| Error::ShapeMismatch(format!("relator `{}` uses undeclared {s}", r.word)))?;
            m.set(i, j, BigInt::from(e));
        }
    }
    Ok((cols, m))
}

/// The largest index span of any relator template.
pub fn max_span(p: &Presentation) -> i64 {
    p.relators
        .iter()
        .filter(|r| r.parametric)
        .filter_map(|r| r.word.m_span())
        .map(|(a, b)| b - a)
        .max()
        .unwrap_or(0)
}

/// The script that reduces the commutator subgroup of `group` at rank `n`.
pub fn reduction_script(group: Group, n: u32) -> Option<ScriptId> {
    match (group, n) {
        (Group::Virtual, 3) => Some(ScriptId::Vb3Reduce),
        (Group::Virtual, n) if n >= 4 => Some(ScriptId::VbnReduce),
        (Group::Welded, 3) => Some(ScriptId::Wb3Reduce),
        (Group::Welded, 4) => Some(ScriptId::Wb4Reduce),
        (Group::Welded, n) if n >= 5 => Some(ScriptId::WbnReduce),
        _ => None,
    }
}

/// The parametric presentation of `G′` used for abelianization: the
/// derived one, or its scripted reduction when `reduced` is set.
pub fn commutator_presentation(group: Group, n: u32, reduced: bool) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::BadRank(n));
    }
    if reduced {
        if let Some(id) = reduction_script(group, n) {
            return Ok(run_script(id, n)?.result);
        }
    }
    assemble_derived_presentation(group, n, AssembleOptions::default(), None)
}

/// Invariants of a parametric presentation truncated to `[lo, hi]`.
pub fn window_invariants(p: &Presentation, lo: i64, hi: i64) -> Result<AbelianInvariants> {
    let (_, m) = relation_matrix(&p.instantiate(lo, hi)?)?;
    invariants_of(&m)
}

/// Abelian invariants of `G′` truncated to `window`.
pub fn abelian_invariants(group: Group, n: u32, window: (i64, i64), reduced: bool) -> Result<AbelianInvariants> {
    let (lo, hi) = window;
    if lo > hi {
        return Err(Error::EmptyWindow(lo, hi));
    }
    let derived = assemble_derived_presentation(group, n.max(2), AssembleOptions::default(), None)?;
    let needed = max_span(&derived) + 1;
    if hi - lo + 1 < needed {
        return Err(Error::WindowTooNarrow { lo, hi, needed });
    }
    let p = if reduced {
        commutator_presentation(group, n, true)?
    } else {
        derived
    };
    window_invariants(&p, lo, hi)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileRow {
    pub window: (i64, i64),
    pub invariants: AbelianInvariants,
    /// Change in free rank from the previous window.
    pub rank_delta: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Profile {
    pub rows: Vec<ProfileRow>,
    /// Torsion of the last window, if it equals the one before.
    pub stable_torsion: Option<Vec<u64>>,
    /// Rank change between the last two windows.
    pub rank_delta: i64,
    /// Free rank of the last window.
    pub last_rank: usize,
}

impl Profile {
    pub fn from_rows(rows: Vec<ProfileRow>) -> Result<Profile> {
        let [.., a, b] = rows.as_slice() else {
            return Err(Error::ShapeMismatch("a profile needs at least two windows".into()));
        };
        let stable_torsion = (a.invariants.torsion == b.invariants.torsion).then(|| b.invariants.torsion.clone());
        let rank_delta = b.invariants.free_rank as i64 - a.invariants.free_rank as i64;
        let last_rank = b.invariants.free_rank;
        Ok(Profile {
            rows,
            stable_torsion,
            rank_delta,
            last_rank,
        })
    }
}

/// Invariants of a parametric presentation over a list of windows.
pub fn presentation_profile(p: &Presentation, windows: &[(i64, i64)]) -> Result<Profile> {
    let mut rows: Vec<ProfileRow> = Vec::new();
    for &(lo, hi) in windows {
        let invariants = window_invariants(p, lo, hi)?;
        let rank_delta = rows
            .last()
            .map(|r| invariants.free_rank as i64 - r.invariants.free_rank as i64);
        rows.push(ProfileRow {
            window: (lo, hi),
            invariants,
            rank_delta,
        });
    }
    Profile::from_rows(rows)
}

pub fn stabilization_profile(group: Group, n: u32, windows: &[(i64, i64)], reduced: bool) -> Result<Profile> {
    if windows.len() < 2 {
        return Err(Error::ShapeMismatch("a profile needs at least two windows".into()));
    }
    for &w in windows {
        // span check only
        let derived = assemble_derived_presentation(group, n.max(2), AssembleOptions::default(), None)?;
        let needed = max_span(&derived) + 1;
        if w.1 - w.0 + 1 < needed {
            return Err(Error::WindowTooNarrow {
                lo: w.0,
                hi: w.1,
                needed,
            });
        }
    }
    let p = commutator_presentation(group, n, reduced)?;
    presentation_profile(&p, windows)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectVerdict {
    pub consistent_with_perfect: bool,
    pub profile: Profile,
}

pub fn check_perfect(group: Group, n: u32, windows: &[(i64, i64)]) -> Result<PerfectVerdict> {
    if n < 2 {
        return Err(Error::BadRank(n));
    }
    let profile = stabilization_profile(group, n, windows, false)?;
    let consistent_with_perfect = profile.stable_torsion.as_deref() == Some(&[]) && profile.rank_delta == 0;
    Ok(PerfectVerdict {
        consistent_with_perfect,
        profile,
    })
}

/// The quotient of a presentation on `a(m), f(m)` by all `f(m)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FKilled {
    pub quotient: Presentation,
    /// Every relator became freely trivial.
    pub free: bool,
}

pub fn f_killed_quotient(p: &Presentation) -> Result<FKilled> {
    for g in &p.generators {
        if !matches!(g.pattern().family(), Family::A | Family::F) {
            return Err(Error::ShapeMismatch(format!(
                "expected generators a(m), f(m) only, found {}",
                Word::gen(g.pattern().clone()).template_display()
            )));
        }
    }
    let kill = |w: &Word| {
        w.map_letters(|l| {
            if l.symbol.family() == Family::F {
                Word::empty()
            } else {
                Word::new(vec![l.clone()])
            }
        })
    };
    let relators: Vec<Relator> = p
        .relators
        .iter()
        .map(|r| Relator {
            word: kill(&r.word),
            ..r.clone()
        })
        .filter(|r| !r.word.cyclically_reduced().is_empty())
        .collect();
    let generators: Vec<GenDecl> = p
        .generators
        .iter()
        .filter(|g| g.pattern().family() == Family::A)
        .cloned()
        .collect();
    let free = relators.is_empty();
    Ok(FKilled {
        quotient: Presentation {
            name: format!("{} / <<f>>", p.name),
            generators,
            relators,
        },
        free,
    })
}

/// Invariants before and after one script step on one window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepCheck {
    pub step: usize,
    pub action: String,
    pub window: (i64, i64),
    pub before: AbelianInvariants,
    pub after: AbelianInvariants,
}

impl StepCheck {
    pub fn agrees(&self) -> bool {
        self.before == self.after
    }
}

/// Compare abelian invariants across every step of a script run.
pub fn cross_check_steps(run: &crate::tietze::Run, windows: &[(i64, i64)]) -> Result<Vec<StepCheck>> {
    let mut out = Vec::new();
    let mut prev = &run.start;
    for (entry, snap) in run.transcript.iter().zip(&run.snapshots) {
        for &(lo, hi) in windows {
            out.push(StepCheck {
                step: entry.step,
                action: entry.action.clone(),
                window: (lo, hi),
                before: window_invariants(prev, lo, hi)?,
                after: window_invariants(snap, lo, hi)?,
            });
        }
        prev = snap;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntegerMatrix {
        IntegerMatrix::from_rows(rows)
    }

    #[test]
    fn small_forms() {
        let s = smith_normal_form(&m(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
        let s = smith_normal_form(&IntegerMatrix::identity(3));
        assert_eq!(s.d, IntegerMatrix::identity(3));
        let inv = invariants_of(&m(&[vec![3]])).unwrap();
        assert_eq!(
            inv,
            AbelianInvariants {
                torsion: vec![3],
                free_rank: 0
            }
        );
        let inv = invariants_of(&IntegerMatrix::zeros(0, 7)).unwrap();
        assert_eq!(
            inv,
            AbelianInvariants {
                torsion: vec![],
                free_rank: 7
            }
        );
    }

    #[test]
    fn transforms_multiply_out() {
        let a = m(&[vec![4, 6, 2], vec![-2, 8, 10], vec![6, 0, 3], vec![1, 1, 1]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.u.mul(&a).mul(&s.v), s.d);
        assert!(s.u.det().abs().is_one());
        assert!(s.v.det().abs().is_one());
    }

    #[test]
    fn determinants() {
        assert_eq!(m(&[vec![1, 2], vec![3, 4]]).det(), BigInt::from(-2));
        assert_eq!(
            m(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 5]]).det(),
            BigInt::from(-5)
        );
        assert_eq!(m(&[vec![1, 2], vec![2, 4]]).det(), BigInt::zero());
    }

    #[test]
    fn relation_rows() {
        let mut p = Presentation::new("x");
        for k in 0..4 {
            p.generators.push(GenDecl::Concrete(Symbol::F(k, 0)));
        }
        p.relators.push(Relator::concrete(
            Word::parse("f(1,0)^-1 f(2,0) f(3,0)^-1 f(2,0) f(1,0)^-1 f(0,0)").unwrap(),
            "f chain",
        ));
        let (_, mat) = relation_matrix(&p).unwrap();
        let row: Vec<i64> = mat.row(0).iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(row, vec![1, -2, 2, -1]);
    }

    #[test]
    fn parametric_input_rejected() {
        let p = assemble_derived_presentation(Group::Virtual, 3, AssembleOptions::default(), None).unwrap();
        assert_eq!(relation_matrix(&p).unwrap_err(), Error::ParametricInput);
    }

    #[test]
    fn scripted_steps_keep_invariants() {
        let run = run_script(ScriptId::Vb3Reduce, 3).unwrap();
        let checks = cross_check_steps(&run, &[(-3, 3)]).unwrap();
        assert_eq!(checks.len(), run.transcript.len());
        assert!(checks.iter().all(StepCheck::agrees));
    }

    #[test]
    fn killing_f_frees_vb3() {
        let p = run_script(ScriptId::Vb3Reduce, 3).unwrap().result;
        let q = f_killed_quotient(&p.instantiate(-3, 3).unwrap()).unwrap();
        assert!(q.free);
        let (_, m) = relation_matrix(&q.quotient).unwrap();
        assert_eq!(
            invariants_of(&m).unwrap(),
            AbelianInvariants {
                torsion: vec![],
                free_rank: 7
            }
        );
        let q0 = f_killed_quotient(&p.instantiate(0, 0).unwrap()).unwrap();
        assert!(q0.free && q0.quotient.relators.is_empty());
        assert_eq!(q0.quotient.generators.len(), 1);
    }

    #[test]
    fn narrow_window() {
        assert!(matches!(
            abelian_invariants(Group::Virtual, 4, (0, 1), false),
            Err(Error::WindowTooNarrow { .. })
        ));
    }
}
