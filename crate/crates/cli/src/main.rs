//! `coxlab` command line: theorem verification, census/recurrence
//! enumeration, single-element dossiers, and root-system checks.
//!
//! Exit codes: 0 all checks pass, 1 a mathematical disagreement was found,
//! 2 usage or validation error.

use clap::{Args, Parser, Subcommand};
use coxlab::{
    avoider_polynomial, bfs_by_length, bfs_full_group, check_dis_equals_height, check_tight_factor_condition,
    condition_b, condition_b_prime, contains_global_321, coxeter_length,
    degenerate_isomorphism_check, disarray, gap, is_tight, positive_roots_up_to_height,
    reduced_words, right_descents, root_system_for, verify_main_theorem, verify_recurrence,
    Element, Family, GroupSpec, RootVariant, Word, DEFAULT_BUDGET,
};
use serde::Serialize;
use serde_json::{json, Value};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "coxlab", about = "window-notation Coxeter group toolkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// group family: a | b | affa | affc
    #[arg(long)]
    family: String,
    /// window size / number of generators parameter
    #[arg(long)]
    n: usize,
    /// output format
    #[arg(long, default_value = "text")]
    format: String,
    /// cap on distinct elements visited (env COXLAB_BUDGET overrides the default)
    #[arg(long)]
    budget: Option<usize>,
    /// write json/csv output to this file instead of stdout
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the tightness / word-separation / 321-avoidance equivalence on
    /// every element up to a length bound
    Verify {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long, default_value_t = 8)]
        max_length: usize,
    },
    /// Census by length, the avoider length-generating polynomial, and (for
    /// the finite families) the recurrence cross-check
    Enumerate {
        #[command(flatten)]
        common: CommonOpts,
        /// length cutoff; required for the affine families
        #[arg(long)]
        max_length: Option<usize>,
    },
    /// Full dossier for one element, given as a window or a word
    Inspect {
        #[command(flatten)]
        common: CommonOpts,
        /// comma-separated window, e.g. -1,-2
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        /// generator letters, e.g. --word 1 0 1
        #[arg(long, num_args = 1..)]
        word: Option<Vec<usize>>,
        /// cap on the number of reduced words collected
        #[arg(long, default_value_t = 10_000)]
        word_cap: usize,
    },
    /// Positive-root table and the displacement/height identity
    Roots {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long, default_value_t = 6)]
        max_height: i64,
        /// rescaling of the end generators: short-zero | long-zero
        #[arg(long, default_value = "short-zero")]
        variant: String,
        /// verify dis(t)/2 = height for every root in the table
        #[arg(long)]
        check_dis: bool,
        /// verify the factor condition on height-cost-tight elements up to
        /// this length
        #[arg(long)]
        check_tight_factors: Option<usize>,
    },
}

#[derive(Debug)]
enum Format {
    Json,
    Csv,
    Text,
}

struct Run {
    spec: GroupSpec,
    format: Format,
    budget: usize,
    out: Option<std::path::PathBuf>,
    config: Value,
}

fn usage_err(msg: impl std::fmt::Display) -> String {
    msg.to_string()
}

impl CommonOpts {
    fn resolve(&self, extra: Value) -> Result<Run, String> {
        let family = Family::parse(&self.family).map_err(usage_err)?;
        let spec = GroupSpec::new(family, self.n).map_err(usage_err)?;
        let format = match self.format.as_str() {
            "json" => Format::Json,
            "csv" => Format::Csv,
            "text" => Format::Text,
            other => return Err(format!("unknown format {other:?}")),
        };
        let budget = match self.budget {
            Some(b) if b > 0 => b,
            Some(_) => return Err("budget must be positive".into()),
            None => match std::env::var("COXLAB_BUDGET") {
                Ok(v) => v
                    .parse::<usize>()
                    .map_err(|e| format!("COXLAB_BUDGET: {e}"))?,
                Err(_) => DEFAULT_BUDGET,
            },
        };
        let mut config = json!({
            "family": family.code(),
            "n": self.n,
            "format": self.format,
            "budget": budget,
        });
        if let Value::Object(extra) = extra {
            config.as_object_mut().unwrap().extend(extra);
        }
        Ok(Run {
            spec,
            format,
            budget,
            out: self.out.clone(),
            config,
        })
    }
}

/// Canonical JSON: round-trip through `Value` so the map keys come out
/// sorted and re-serializing a parsed report is byte-identical.
fn canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable report");
    serde_json::to_string_pretty(&v).expect("valid json value")
}

fn emit(run: &Run, json_value: &Value, csv: String, text: String) -> Result<(), String> {
    let body = match run.format {
        Format::Json => canonical_json(json_value),
        Format::Csv => csv,
        Format::Text => text,
    };
    match (&run.out, &run.format) {
        (Some(path), Format::Json | Format::Csv) => {
            std::fs::write(path, body + "\n").map_err(|e| format!("{}: {e}", path.display()))
        }
        _ => {
            println!("{body}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(all_pass) => {
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Verify { common, max_length } => cmd_verify(&common, max_length),
        Command::Enumerate { common, max_length } => cmd_enumerate(&common, max_length),
        Command::Inspect {
            common,
            window,
            word,
            word_cap,
        } => cmd_inspect(&common, window, word, word_cap),
        Command::Roots {
            common,
            max_height,
            variant,
            check_dis,
            check_tight_factors,
        } => cmd_roots(&common, max_height, &variant, check_dis, check_tight_factors),
    }
}

fn cmd_verify(common: &CommonOpts, max_length: usize) -> Result<bool, String> {
    let run = common.resolve(json!({"max_length": max_length}))?;
    let report = verify_main_theorem(run.spec, max_length, run.budget).map_err(usage_err)?;
    let iso = if run.spec.is_degenerate() {
        Some(degenerate_isomorphism_check(max_length, run.budget).map_err(usage_err)?)
    } else {
        None
    };
    let pass = report.pass() && iso.as_ref().is_none_or(|r| r.pass());

    let json_value = json!({
        "config": run.config,
        "report": report,
        "isomorphism": iso,
        "pass": pass,
    });
    let mut csv = String::from("length,count,tight,avoiding\n");
    for row in &report.layers {
        csv += &format!("{},{},{},{}\n", row.length, row.count, row.tight, row.avoiding);
    }
    let mut text = format!(
        "{} up to length {}: {} elements, {} disagreement(s)\n",
        run.spec,
        report.max_length,
        report.total,
        report.disagreements.len()
    );
    for d in &report.disagreements {
        text += &format!("  disagree at <{}> (length {})\n", d.window, d.length);
    }
    if report.all_uniformly_true {
        text += "all predicates uniformly true\n";
    }
    if let Some(iso) = &iso {
        text += &format!(
            "degenerate isomorphism: {} elements checked, {} mismatch(es)\n",
            iso.checked,
            iso.mismatches.len()
        );
    }
    text += if pass { "PASS" } else { "FAIL" };
    emit(&run, &json_value, csv, text)?;
    Ok(pass)
}

fn cmd_enumerate(common: &CommonOpts, max_length: Option<usize>) -> Result<bool, String> {
    let run = common.resolve(json!({"max_length": max_length}))?;
    let census = match max_length {
        Some(l) => bfs_by_length(run.spec, l, run.budget).map_err(usage_err)?,
        None => bfs_full_group(run.spec, run.budget).map_err(usage_err)?,
    };
    let avoiders = avoider_polynomial(&census);
    let recurrence = match run.spec.family() {
        Family::A | Family::B if census.saturated() => {
            Some(verify_recurrence(run.spec.family(), run.spec.rank(), run.budget).map_err(usage_err)?)
        }
        _ => None,
    };
    let pass = recurrence.as_ref().is_none_or(|r| r.pass);

    let layer_sizes: Vec<usize> = census.layers().iter().map(Vec::len).collect();
    let json_value = json!({
        "config": run.config,
        "layer_sizes": layer_sizes,
        "saturated": census.saturated(),
        "total": census.total(),
        "avoiders": avoiders,
        "recurrence": recurrence,
        "pass": pass,
    });
    let mut csv = String::from("length,elements,avoiding\n");
    for (l, size) in layer_sizes.iter().enumerate() {
        csv += &format!("{},{},{}\n", l, size, avoiders.poly.coefficient(l));
    }
    let mut text = format!(
        "{}: {} elements{}\navoiders by length: {}\navoiders at q=1: {}\n",
        run.spec,
        census.total(),
        if census.saturated() { "" } else { " (truncated)" },
        avoiders.poly,
        avoiders.poly.eval(1),
    );
    if let Some(rec) = &recurrence {
        text += &format!(
            "recurrence check: {}\n",
            if rec.pass { "agrees" } else { "MISMATCH" }
        );
    }
    text += if pass { "PASS" } else { "FAIL" };
    emit(&run, &json_value, csv, text)?;
    Ok(pass)
}

fn cmd_inspect(
    common: &CommonOpts,
    window: Option<String>,
    word: Option<Vec<usize>>,
    word_cap: usize,
) -> Result<bool, String> {
    let run = common.resolve(json!({"window": window, "word": word}))?;
    let w = match (&window, &word) {
        (Some(text), None) => Element::parse_window(run.spec, text).map_err(usage_err)?,
        (None, Some(letters)) => {
            coxlab::word_to_element(run.spec, &Word(letters.clone())).map_err(usage_err)?
        }
        _ => return Err("give exactly one of --window or --word".into()),
    };
    let length = coxeter_length(&w);
    let dis = disarray(&w);
    let witness = contains_global_321(&w);
    let words = reduced_words(&w, Some(word_cap));
    let descents: Vec<usize> = right_descents(&w).into_iter().collect();
    let b = condition_b(&w);
    let b_prime = run.spec.is_nondegenerate().then(|| condition_b_prime(&w));

    let json_value = json!({
        "config": run.config,
        "window": w.to_string(),
        "length": length,
        "disarray": dis,
        "gap": gap(&w),
        "tight": is_tight(&w),
        "condition_b": b,
        "condition_b_prime": b_prime,
        "witness": witness,
        "reduced_words": words.words.len(),
        "reduced_words_truncated": words.truncated,
        "descents": descents,
    });
    let csv = format!(
        "window,length,disarray,gap,tight,avoids_321\n\"{}\",{},{},{},{},{}\n",
        w,
        length,
        dis,
        gap(&w),
        is_tight(&w),
        witness.is_none()
    );
    let mut text = format!(
        "{} element <{}>\nlength {}, disarray {}, gap {} ({})\ncondition (B): {}",
        run.spec,
        w,
        length,
        dis,
        gap(&w),
        if is_tight(&w) { "tight" } else { "not tight" },
        b,
    );
    if let Some(bp) = b_prime {
        text += &format!("\ncondition (B'): {bp}");
    }
    match &witness {
        Some(t) => {
            text += &format!(
                "\n321 witness: positions ({}, {}, {}) with values ({}, {}, {})",
                t.i, t.j, t.k, t.wi, t.wj, t.wk
            )
        }
        None => text += "\n321 witness: none",
    }
    text += &format!(
        "\nreduced words: {}{}\nright descents: {descents:?}",
        words.words.len(),
        if words.truncated { "+ (capped)" } else { "" },
    );
    emit(&run, &json_value, csv, text)?;
    Ok(true)
}

fn cmd_roots(
    common: &CommonOpts,
    max_height: i64,
    variant: &str,
    check_dis: bool,
    check_tight_factors: Option<usize>,
) -> Result<bool, String> {
    let run = common.resolve(json!({
        "max_height": max_height,
        "variant": variant,
        "check_dis": check_dis,
        "check_tight_factors": check_tight_factors,
    }))?;
    let variant = RootVariant::parse(variant).map_err(usage_err)?;
    let rs = root_system_for(run.spec, variant);
    let roots = positive_roots_up_to_height(&rs, max_height, run.budget).map_err(usage_err)?;

    let mut pass = true;
    let dis_report = if check_dis {
        let r = check_dis_equals_height(&rs, max_height, run.budget).map_err(usage_err)?;
        pass &= r.pass();
        Some(r)
    } else {
        None
    };
    let factor_report = match check_tight_factors {
        Some(max_length) => {
            let census = bfs_by_length(run.spec, max_length, run.budget).map_err(usage_err)?;
            let r = check_tight_factor_condition(&rs, &census).map_err(usage_err)?;
            pass &= r.pass();
            Some(r)
        }
        None => None,
    };

    let rows: Vec<Value> = roots
        .iter()
        .map(|pr| {
            json!({
                "coeffs": pr.root.0,
                "height": pr.root.height(),
                "reflection_window": pr.reflection.to_string(),
                "witness_word": pr.witness.to_string(),
            })
        })
        .collect();
    let json_value = json!({
        "config": run.config,
        "roots": rows,
        "dis_height": dis_report,
        "tight_factors": factor_report,
        "pass": pass,
    });
    let mut csv = String::from("coeffs,height,reflection_window,witness_word\n");
    for pr in &roots {
        let coeffs: Vec<String> = pr.root.0.iter().map(i64::to_string).collect();
        csv += &format!(
            "\"{}\",{},\"{}\",\"{}\"\n",
            coeffs.join(" "),
            pr.root.height(),
            pr.reflection,
            pr.witness
        );
    }
    let mut text = format!(
        "{}: {} positive roots up to height {}\n",
        run.spec,
        roots.len(),
        max_height
    );
    for pr in &roots {
        text += &format!(
            "  {:?} height {}  t = <{}>\n",
            pr.root.0,
            pr.root.height(),
            pr.reflection
        );
    }
    if let Some(r) = &dis_report {
        text += &format!(
            "dis/2 = height: {} root(s) checked, {} mismatch(es)\n",
            r.roots_checked,
            r.mismatches.len()
        );
    }
    if let Some(r) = &factor_report {
        text += &format!(
            "tight-factor check: {} cost-tight of {} element(s), {} violation(s)\n",
            r.cost_tight,
            r.elements_checked,
            r.violations.len()
        );
    }
    text += if pass { "PASS" } else { "FAIL" };
    emit(&run, &json_value, csv, text)?;
    Ok(pass)
}
