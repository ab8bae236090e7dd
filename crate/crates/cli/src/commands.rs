use anyhow::{bail, Result};
use serde::Serialize;
use serde_json::{json, Value};

use vbraid::abelian::{abelian_invariants, commutator_presentation, relation_matrix};
use vbraid::catalog;
use vbraid::report::{full_report, ReportConfig};
use vbraid::rewriter::{assemble_derived_presentation, AssembleOptions, Route};
use vbraid::tietze::{generator_list, run_script, ScriptId};
use vbraid::verify::{compare_with_theorem, verify_lemma, Equivalence, Verdict, VerificationReport};
use vbraid::{GenDecl, Group, Presentation};

use crate::{GroupArg, RouteArg};

pub enum Status {
    Pass,
    Mismatch,
}

pub struct Outcome {
    pub stem: String,
    pub text: String,
    pub json: Value,
    pub status: Status,
    pub warnings: Vec<String>,
}

impl Outcome {
    fn pass(stem: String, text: String, json: Value) -> Self {
        Outcome {
            stem,
            text,
            json,
            status: Status::Pass,
            warnings: Vec::new(),
        }
    }
}

/// Lemma ids that only concern the welded group.
const WELDED_ONLY: [&str; 2] = ["CON", "L5_2"];

fn group(g: GroupArg) -> Group {
    match g {
        GroupArg::Vb => Group::Virtual,
        GroupArg::Wb => Group::Welded,
    }
}

fn check_window((lo, hi): (i64, i64)) -> Result<()> {
    if lo > hi {
        bail!("empty window {lo}..{hi}");
    }
    Ok(())
}

#[derive(Serialize)]
struct RelatorJson {
    word: String,
    label: String,
}

fn presentation_json(p: &Presentation) -> Value {
    let generators: Vec<String> = p
        .generators
        .iter()
        .map(|g| match g {
            GenDecl::Concrete(s) => s.to_string(),
            other => {
                let single = Presentation {
                    generators: vec![other.clone()],
                    ..Presentation::default()
                };
                let line = single.to_text();
                line.lines()
                    .next()
                    .unwrap_or("")
                    .trim_start_matches("generators: ")
                    .to_string()
            }
        })
        .collect();
    let relators: Vec<RelatorJson> = p
        .relators
        .iter()
        .map(|r| RelatorJson {
            word: if r.parametric {
                r.word.template_display().to_string()
            } else {
                r.word.to_string()
            },
            label: r.label.clone(),
        })
        .collect();
    json!({ "name": p.name, "generators": generators, "relators": relators })
}

pub fn present(g: GroupArg, n: u32) -> Result<Outcome> {
    let g = group(g);
    let p = g.presentation(n)?;
    let text = format!(
        "{}{} relators, {} generators\n",
        p.to_text(),
        p.relators.len(),
        p.generators.len()
    );
    Ok(Outcome::pass(
        format!("present-{}{n}", g.short().to_lowercase()),
        text,
        presentation_json(&p),
    ))
}

fn lemma_ids(g: Group) -> Vec<&'static str> {
    catalog::LEMMAS
        .iter()
        .copied()
        .filter(|id| g == Group::Welded || !WELDED_ONLY.contains(id))
        .collect()
}

fn summarize(reports: &[VerificationReport]) -> (String, usize) {
    let mut text = String::new();
    let mut bad = 0;
    for r in reports {
        let m = r.count(Verdict::Mismatch);
        bad += m;
        text.push_str(&format!(
            "{} (n={}, m in [{},{}]): {} cases, {} exact, {} equal after normalization, {} MISMATCH\n",
            r.lemma,
            r.n,
            r.m_range.0,
            r.m_range.1,
            r.cases.len(),
            r.count(Verdict::Exact),
            r.count(Verdict::EqualAfterNormalization),
            m
        ));
        for c in &r.cases {
            if c.verdict != Verdict::Exact {
                let tier = c.tier.map_or("-", |t| t.as_str());
                text.push_str(&format!(
                    "  {} tier {tier}, {}: engine {} | stated {}\n",
                    c.params,
                    c.verdict.as_str(),
                    c.engine_word,
                    c.paper_word
                ));
                if let Some(note) = &c.note {
                    text.push_str(&format!("    note: {note}\n"));
                }
            }
        }
    }
    (text, bad)
}

pub fn derive(
    g: GroupArg,
    n: u32,
    window: Option<(i64, i64)>,
    route: RouteArg,
    keep_f1: bool,
    compare: bool,
) -> Result<Outcome> {
    let g = group(g);
    if let Some(w) = window {
        check_window(w)?;
    }
    let route = match route {
        RouteArg::Direct => Route::Direct,
        RouteArg::Rules => Route::Rules,
    };
    let opts = AssembleOptions {
        route,
        eliminate_f1: !keep_f1,
    };
    let p = assemble_derived_presentation(g, n, opts, window)?;
    let mut text = p.to_text();
    let mut json = json!({ "group": g.short(), "n": n, "window": window, "presentation": presentation_json(&p) });
    let mut status = Status::Pass;
    if compare {
        let range = window.unwrap_or((-2, 2));
        let reports: Vec<VerificationReport> = lemma_ids(g)
            .into_iter()
            .map(|id| verify_lemma(id, n, range))
            .collect::<vbraid::Result<_>>()?;
        let (summary, bad) = summarize(&reports);
        text.push_str(&format!(
            "\nstated relations over m in [{},{}]\n{summary}",
            range.0, range.1
        ));
        json["comparison"] = json!({ "reports": reports, "mismatches": bad });
        if g == Group::Virtual && n >= 3 {
            let strict = compare_with_theorem(n, range, Route::Rules, Equivalence::Canonical)?;
            let loose = compare_with_theorem(n, range, Route::Rules, Equivalence::GInvolution)?;
            text.push_str(&format!(
                "presentation theorem on [{},{}]: {} shared, {} derived only, {} stated only; equal with g(m,l)^-1 read as g(m,l): {}\n",
                range.0,
                range.1,
                strict.shared,
                strict.engine_only.len(),
                strict.stated_only.len(),
                loose.equal()
            ));
            json["theorem"] = json!({ "canonical": strict, "g_involution": loose });
        }
        if bad > 0 {
            status = Status::Mismatch;
        }
    }
    let stem = format!("derive-{}{n}", g.short().to_lowercase());
    Ok(Outcome {
        stem,
        text,
        json,
        status,
        warnings: Vec::new(),
    })
}

pub fn verify(lemma: &str, n: u32, m_range: (i64, i64)) -> Result<Outcome> {
    let ids: Vec<&str> = if lemma.eq_ignore_ascii_case("all") {
        catalog::LEMMAS.to_vec()
    } else {
        match catalog::LEMMAS.iter().find(|id| id.eq_ignore_ascii_case(lemma)) {
            Some(id) => vec![*id],
            None => bail!(
                "unknown lemma `{lemma}`; expected one of {} or ALL",
                catalog::LEMMAS.join(", ")
            ),
        }
    };
    let mut warnings = Vec::new();
    let reports: Vec<VerificationReport> = if m_range.0 > m_range.1 {
        warnings.push(format!(
            "m-range {}..{} is empty; no cases checked",
            m_range.0, m_range.1
        ));
        ids.iter()
            .map(|id| VerificationReport {
                lemma: id.to_string(),
                n,
                m_range,
                cases: Vec::new(),
            })
            .collect()
    } else {
        ids.iter()
            .map(|id| verify_lemma(id, n, m_range))
            .collect::<vbraid::Result<_>>()?
    };
    let (text, bad) = summarize(&reports);
    let json = json!({ "n": n, "m_range": m_range, "mismatches": bad, "reports": reports });
    let stem = format!("verify-{}-n{n}", if ids.len() == 1 { ids[0] } else { "ALL" });
    let status = if bad == 0 { Status::Pass } else { Status::Mismatch };
    Ok(Outcome {
        stem,
        text,
        json,
        status,
        warnings,
    })
}

pub fn tietze(script: &str, n: Option<u32>) -> Result<Outcome> {
    let id: ScriptId = script.parse()?;
    let n = n.unwrap_or(id.default_rank());
    if !id.accepts(n) {
        bail!("{id} does not apply to n={n}");
    }
    let run = run_script(id, n)?;
    let gens = generator_list(&run.result);
    let mut text = format!("{id} n={n}\n");
    for e in &run.transcript {
        text.push_str(&format!("{}. {}\n", e.step, e.action));
        if let Some(d) = &e.definition {
            text.push_str(&format!("   {d}\n"));
        }
        let count = e
            .generator_count
            .map_or("infinitely many".to_string(), |c| c.to_string());
        text.push_str(&format!("   {count} generators, {} relators\n", e.relators.len()));
    }
    text.push_str(&format!("\n{}", run.result.to_text()));
    let gen_names: Option<Vec<String>> = gens.as_ref().map(|g| g.iter().map(|s| s.to_string()).collect());
    match &gen_names {
        Some(g) => text.push_str(&format!("{} generators: {}\n", g.len(), g.join(", "))),
        None => text.push_str("infinitely many generators\n"),
    }
    let json = json!({
        "script": id.name(),
        "n": n,
        "transcript": run.transcript,
        "generator_count": gens.as_ref().map(Vec::len),
        "generators": gen_names,
        "result": presentation_json(&run.result),
    });
    Ok(Outcome::pass(
        format!("tietze-{}-n{n}", id.name().to_lowercase()),
        text,
        json,
    ))
}

pub fn abelianize(g: GroupArg, n: u32, window: (i64, i64), reduced: bool) -> Result<Outcome> {
    let g = group(g);
    check_window(window)?;
    let inv = abelian_invariants(g, n, window, reduced)?;
    let p = commutator_presentation(g, n, reduced)?.instantiate(window.0, window.1)?;
    let (_, m) = relation_matrix(&p)?;
    let text = format!(
        "{}{n}' on [{},{}]{}: {inv}\nrelation matrix {}x{}\n",
        g.short(),
        window.0,
        window.1,
        if reduced { " (reduced)" } else { "" },
        m.rows(),
        m.cols()
    );
    let json = json!({
        "group": g.short(),
        "n": n,
        "reduced": reduced,
        "torsion": inv.torsion,
        "free_rank": inv.free_rank,
        "window": [window.0, window.1],
        "matrix_dims": [m.rows(), m.cols()],
    });
    Ok(Outcome::pass(
        format!("abelianize-{}{n}", g.short().to_lowercase()),
        text,
        json,
    ))
}

pub fn report(seed: u64, tau_samples: usize, snf_samples: usize) -> Result<Outcome> {
    let cfg = ReportConfig {
        seed,
        tau_samples,
        snf_samples,
        ..ReportConfig::default()
    };
    let r = full_report(&cfg)?;
    let status = if r.passed() { Status::Pass } else { Status::Mismatch };
    Ok(Outcome {
        stem: "report".into(),
        text: format!("{r}\n"),
        json: serde_json::to_value(&r)?,
        status,
        warnings: Vec::new(),
    })
}
