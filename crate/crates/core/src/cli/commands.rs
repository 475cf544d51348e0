use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::braid::{
    check_a0_forms, check_braid_relations, check_t_conjugate_to_a, check_t_equals_a, delete_strand, gen_a, gen_a0,
    gen_t, infer_strands, is_brunnian, is_pure, is_trivial, parse_braid, sample_brun_generators, write_corpus, Braid,
    Corpus,
};
use crate::finite::{run_trial, InstanceParams, TrialReport, DEFAULT_FAT_BUDGET};
use crate::homotopy::{pi2_check, pi3_certificate};
use crate::rng::derive_seed;

use super::report::{persist, write_atomic, Envelope, Table, Timing};
use super::{
    BraidToolsArgs, BrunnianArgs, Command, Format, HomotopyArgs, Output, VerifyFiniteArgs, BUDGET_ENV,
    EXIT_CHECK_FAILED, EXIT_PASS, EXIT_USAGE,
};

/// A configuration problem; reported on stderr with exit code 2.
#[derive(Debug)]
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

/// A finished run: the envelope for JSON and its fixed-width rendering.
struct Outcome {
    envelope: Envelope,
    text: String,
}

pub(super) fn dispatch(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let (output, result) = match command {
        Command::VerifyFinite(a) => (&a.output, verify_finite(a)),
        Command::Brunnian(a) => (&a.output, brunnian(a)),
        Command::Homotopy(a) => (&a.output, homotopy(a)),
        Command::BraidTools(a) => match &a.print {
            Some(spec) => return print_generator(spec, &a.output, out, err),
            None => (&a.output, braid_tools(a)),
        },
    };
    match result {
        Ok(outcome) => emit(outcome, output, out, err),
        Err(Usage(msg)) => {
            let _ = writeln!(err, "{msg}");
            EXIT_USAGE
        }
    }
}

fn emit(outcome: Outcome, output: &Output, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let Outcome { envelope, text } = outcome;
    let written = match &output.out {
        Some(dir) => match persist(dir, &envelope) {
            Ok(path) => Some(path),
            Err(e) => {
                let _ = writeln!(err, "cannot write report to {}: {e}", dir.display());
                return EXIT_USAGE;
            }
        },
        None => None,
    };
    let shown = match output.format {
        Format::Json => serde_json::to_string_pretty(&envelope).expect("envelope serializes") + "\n",
        Format::Text => text,
    };
    let _ = out.write_all(shown.as_bytes());
    if let Some(path) = written {
        let _ = writeln!(err, "report written to {}", path.display());
    }
    if envelope.pass {
        EXIT_PASS
    } else {
        EXIT_CHECK_FAILED
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn budget() -> Result<u64, Usage> {
    match std::env::var(BUDGET_ENV) {
        Ok(s) => s.trim().parse().map_err(|_| Usage(format!("{BUDGET_ENV} must be a nonnegative integer, got `{s}`"))),
        Err(_) => Ok(DEFAULT_FAT_BUDGET),
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum TrialEntry {
    Done(TrialReport),
    Failed { seed: u64, n: usize, weight_cap: usize, error: String },
}

fn verify_finite(a: &VerifyFiniteArgs) -> Result<Outcome, Usage> {
    if let Some(n) = a.n {
        if !(2..=5).contains(&n) {
            return Err(Usage(format!("--n must lie in 2..=5, got {n}")));
        }
    }
    let params = InstanceParams { max_order: a.max_order, max_degree: a.max_degree, ..InstanceParams::default() };
    params.validate()?;
    let budget = budget()?;
    let shape = |k: usize| {
        let n = a.n.unwrap_or(if k.is_multiple_of(2) { 2 } else { 3 });
        (n, a.weight_cap.unwrap_or(2 * n))
    };
    if let Some(cap) = a.weight_cap {
        let smallest = a.n.unwrap_or(3);
        if cap < smallest {
            return Err(Usage(format!("--weight-cap {cap} is below n = {smallest}")));
        }
    }

    let start = Instant::now();
    let runs: Vec<(TrialEntry, u128)> = (0..a.trials)
        .into_par_iter()
        .map(|k| {
            let (n, cap) = shape(k);
            let seed = derive_seed(a.seed, k as u64);
            let t = Instant::now();
            let entry = match run_trial(seed, n, cap, budget, &params) {
                Ok(r) => TrialEntry::Done(r),
                Err(e) => TrialEntry::Failed { seed, n, weight_cap: cap, error: e.to_string() },
            };
            (entry, t.elapsed().as_millis())
        })
        .collect();
    let elapsed = start.elapsed().as_millis();

    let done: Vec<&TrialReport> = runs
        .iter()
        .filter_map(|(e, _)| match e {
            TrialEntry::Done(r) => Some(r),
            TrialEntry::Failed { .. } => None,
        })
        .collect();
    let count = |f: fn(&TrialReport) -> bool| done.iter().filter(|r| f(r)).count();
    let passed = count(|r| r.pass);
    let summary = json!({
        "trials": a.trials,
        "passed": passed,
        "errored": a.trials - done.len(),
        "stabilized": count(|r| r.stabilized),
        "fat_equals_symmetric": count(|r| r.checks.fat_equals_symmetric),
        "restricted_product": count(|r| r.checks.restricted_product),
        "distributivity": count(|r| r.checks.distributivity),
        "three_subgroup": count(|r| r.checks.three_subgroup),
        "connected_informational": count(|r| r.checks.connected),
    });
    let pass = passed == a.trials;

    let mut table = Table::default();
    table
        .row("trials", a.trials)
        .row("passed", format!("{passed}/{}", a.trials))
        .row("stabilized", &summary["stabilized"])
        .row("fat = symmetric", &summary["fat_equals_symmetric"])
        .row("restricted product", &summary["restricted_product"])
        .row("distributivity", &summary["distributivity"])
        .row("three-subgroup", &summary["three_subgroup"])
        .row("connected (info)", &summary["connected_informational"])
        .row("errored", &summary["errored"])
        .row("elapsed ms", elapsed);
    let mut text = table.render();
    text.push_str(&format!(
        "\n{:>20} {:>2} {:>4} {:>6} {:>6} {:>6} {:>5} {:>5}\n",
        "seed", "n", "|G|", "fat", "sym", "fix1", "conn", "pass"
    ));
    for (entry, _) in &runs {
        match entry {
            TrialEntry::Done(r) => text.push_str(&format!(
                "{:>20} {:>2} {:>4} {:>6} {:>6} {:>6} {:>5} {:>5}\n",
                r.seed,
                r.n,
                r.group_order,
                r.cardinalities.fat,
                r.cardinalities.symmetric,
                r.cardinalities.symmetric_fix1,
                r.checks.connected,
                r.pass
            )),
            TrialEntry::Failed { seed, n, error, .. } => text.push_str(&format!("{seed:>20} {n:>2} error: {error}\n")),
        }
    }

    let config = json!({
        "trials": a.trials,
        "n": a.n.map_or(json!("alternate 2,3"), |n| json!(n)),
        "seed": a.seed,
        "weight_cap": a.weight_cap.map_or(json!("2n"), |c| json!(c)),
        "budget": budget,
        "instance": to_value(&params),
    });
    let (entries, times): (Vec<TrialEntry>, Vec<u128>) = runs.into_iter().unzip();
    Ok(Outcome {
        envelope: Envelope {
            subcommand: "verify-finite",
            seed: a.seed,
            config,
            payload: json!({ "summary": summary, "trials": to_value(&entries) }),
            pass,
            timing: Timing::new(elapsed, times),
        },
        text,
    })
}

fn brunnian(a: &BrunnianArgs) -> Result<Outcome, Usage> {
    if let Some(word) = &a.check {
        return check_one(word, a.strands);
    }
    let start = Instant::now();
    let braids: Vec<Braid> = sample_brun_generators(a.n, a.conj_depth, a.seed, a.samples)?.collect();
    let verdicts: Vec<bool> = braids.par_iter().map(is_brunnian).collect();
    let elapsed = start.elapsed().as_millis();
    let brunnian = verdicts.iter().filter(|&&b| b).count();
    let failures: Vec<String> = braids.iter().zip(&verdicts).filter(|(_, &ok)| !ok).map(|(b, _)| b.to_text()).collect();
    let max_len = braids.iter().map(Braid::len).max().unwrap_or(0);
    if let Some(path) = &a.export {
        let corpus = Corpus { strands: a.n, seed: a.seed, braids };
        write_atomic(path, write_corpus(&corpus).as_bytes())
            .map_err(|e| Usage(format!("cannot export corpus to {}: {e}", path.display())))?;
    }
    let pass = brunnian == a.samples;
    let mut table = Table::default();
    table
        .row("strands", a.n)
        .row("conj depth", a.conj_depth)
        .row("brunnian", format!("{brunnian}/{}", a.samples))
        .row("longest word", max_len)
        .row("elapsed ms", elapsed);
    Ok(Outcome {
        envelope: Envelope {
            subcommand: "brunnian",
            seed: a.seed,
            config: json!({ "n": a.n, "samples": a.samples, "seed": a.seed, "conj_depth": a.conj_depth }),
            payload: json!({
                "samples": a.samples,
                "brunnian": brunnian,
                "max_word_length": max_len,
                "failures": failures,
            }),
            pass,
            timing: Timing::new(elapsed, Vec::new()),
        },
        text: table.render(),
    })
}

fn check_one(word: &str, strands: Option<usize>) -> Result<Outcome, Usage> {
    let strands = match strands {
        Some(n) if n >= 1 => n,
        Some(n) => return Err(Usage(format!("--strands must be at least 1, got {n}"))),
        None => infer_strands(word)?,
    };
    let b = parse_braid(word, strands)?;
    let deletions: Vec<bool> = (1..=strands).map(|j| delete_strand(&b, j).is_ok_and(|d| is_trivial(&d))).collect();
    let verdict = is_brunnian(&b);
    let mut table = Table::default();
    table
        .row("braid", b.to_text())
        .row("strands", strands)
        .row("pure", is_pure(&b))
        .row("trivial", is_trivial(&b))
        .row("deletions trivial", format!("{deletions:?}"))
        .row("brunnian", verdict);
    Ok(Outcome {
        envelope: Envelope {
            subcommand: "brunnian",
            seed: 0,
            config: json!({ "check": word, "strands": strands }),
            payload: json!({
                "braid": b.to_text(),
                "strands": strands,
                "pure": is_pure(&b),
                "trivial": is_trivial(&b),
                "deletions_trivial": deletions,
                "brunnian": verdict,
            }),
            pass: verdict,
            timing: Timing::new(0, Vec::new()),
        },
        text: table.render(),
    })
}

fn homotopy(a: &HomotopyArgs) -> Result<Outcome, Usage> {
    let start = Instant::now();
    let (payload, pass, mut table, samples) = match a.pi {
        2 => {
            let samples = a.samples.unwrap_or(1000);
            let r = pi2_check(a.seed, samples)?;
            let mut t = Table::default();
            t.row("m", r.m)
                .row("in R1", format!("{}/{}", r.in_r1, r.samples))
                .row("in R2", format!("{}/{}", r.in_r2, r.samples))
                .row("trivial commutators", format!("{}/{}", r.trivial_commutators, r.commutator_samples))
                .row("quotient rank", r.quotient_rank)
                .row("holds", r.holds);
            (to_value(&r), r.holds, t, samples)
        }
        3 => {
            let samples = a.samples.unwrap_or(500);
            let c = pi3_certificate(a.seed, samples, a.conj_depth)?;
            let mut t = Table::default();
            t.row("m", c.m)
                .row("witness", c.witness_word.to_text())
                .row("witness in intersection", c.in_intersection)
                .row("witness gamma level", c.gamma_level)
                .row("samples in intersection", format!("{}/{}", c.sample_pass_counts.in_intersection, c.samples))
                .row("samples in gamma3", format!("{}/{}", c.sample_pass_counts.in_gamma3, c.samples))
                .row("holds", c.holds);
            (to_value(&c), c.holds, t, samples)
        }
        _ => return Err(Usage("unsupported: certificates implemented for n ≤ 3".into())),
    };
    let elapsed = start.elapsed().as_millis();
    table.row("elapsed ms", elapsed);
    Ok(Outcome {
        envelope: Envelope {
            subcommand: "homotopy",
            seed: a.seed,
            config: json!({ "pi": a.pi, "samples": samples, "seed": a.seed, "conj_depth": a.conj_depth }),
            payload,
            pass,
            timing: Timing::new(elapsed, Vec::new()),
        },
        text: table.render(),
    })
}

fn braid_tools(a: &BraidToolsArgs) -> Result<Outcome, Usage> {
    if !a.identities {
        return Err(Usage("braid-tools needs --identities or --print".into()));
    }
    if a.max_n == 0 {
        return Err(Usage("--max-n must be at least 1".into()));
    }
    let start = Instant::now();
    let a0 = check_a0_forms(a.max_n);
    let t = check_t_equals_a(a.max_n);
    let relations = check_braid_relations(a.max_n);
    let conjugate = check_t_conjugate_to_a(a.max_n);
    let elapsed = start.elapsed().as_millis();
    let pass = a0.all_hold() && t.all_hold() && relations.all_hold();
    let mut table = Table::default();
    let frac = |x: &crate::braid::IdentityTally| format!("{}/{}", x.holding, x.checked);
    table
        .row("max strands", a.max_n)
        .row("A0 forms agree", frac(&a0))
        .row("t_i = A(i,n)", frac(&t))
        .row("braid relations", frac(&relations))
        .row("t_i conjugate to A(i,n) (info)", frac(&conjugate));
    let mut text = table.render();
    for f in a0.failures.iter().chain(&t.failures).chain(&relations.failures) {
        text.push_str(&format!("failed: {f}\n"));
    }
    Ok(Outcome {
        envelope: Envelope {
            subcommand: "braid-tools",
            seed: 0,
            config: json!({ "max_n": a.max_n }),
            payload: json!({
                "a0_forms": to_value(&a0),
                "t_equals_a": to_value(&t),
                "braid_relations": to_value(&relations),
                "t_conjugate_to_a_informational": to_value(&conjugate),
            }),
            pass,
            timing: Timing::new(elapsed, Vec::new()),
        },
        text,
    })
}

fn print_generator(spec: &[String], output: &Output, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let parsed: Result<Vec<(&str, Braid)>, Usage> = (|| {
        let nums = spec[1..].iter().map(|s| s.parse::<usize>()).collect::<Result<Vec<_>, _>>()?;
        Ok(match (spec[0].as_str(), nums.as_slice()) {
            ("A", &[i, j, n]) => vec![("A", gen_a(i, j, n)?)],
            ("t", &[i, n]) => vec![("t", gen_t(i, n)?)],
            ("A0", &[j, n]) => {
                let (p, s) = gen_a0(j, n)?;
                vec![("product", p), ("sigma", s)]
            }
            _ => return Err(Usage("--print expects `A i j n`, `t i n` or `A0 j n`".into())),
        })
    })();
    match parsed {
        Ok(words) => {
            let shown = match output.format {
                Format::Text => words.iter().map(|(_, b)| format!("{b}\n")).collect::<String>(),
                Format::Json => {
                    let map: serde_json::Map<String, Value> =
                        words.iter().map(|(k, b)| (k.to_string(), Value::String(b.to_text()))).collect();
                    serde_json::to_string_pretty(&json!({ "generator": spec, "words": map })).expect("serializes")
                        + "\n"
                }
            };
            let _ = out.write_all(shown.as_bytes());
            EXIT_PASS
        }
        Err(Usage(msg)) => {
            let _ = writeln!(err, "{msg}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::run;
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("commlab").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["verify-finite", "--bogus"]).0, EXIT_USAGE);
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["braid-tools"]).0, EXIT_USAGE);
        assert_eq!(call(&["braid-tools", "--print", "A", "2", "1", "3"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify-finite", "--n", "1"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_PASS);
    }

    #[test]
    fn print_generators() {
        assert_eq!(call(&["braid-tools", "--print", "A", "1", "2", "4"]).1, "s1 s1\n");
        assert_eq!(call(&["braid-tools", "--print", "t", "2", "3"]).1, "s2 s2\n");
        let (code, text, _) = call(&["braid-tools", "--print", "A0", "1", "1"]);
        assert_eq!((code, text.as_str()), (EXIT_PASS, "\n\n"));
    }

    #[test]
    fn unsupported_pi() {
        let (code, _, err) = call(&["homotopy", "--pi", "5"]);
        assert_eq!(code, EXIT_USAGE);
        assert_eq!(err.trim(), "unsupported: certificates implemented for n ≤ 3");
    }

    #[test]
    fn zero_trials_pass() {
        let (code, text, _) = call(&["verify-finite", "--trials", "0", "--format", "json"]);
        assert_eq!(code, EXIT_PASS);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["payload"]["summary"]["trials"], 0);
    }
}
