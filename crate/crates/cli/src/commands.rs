use std::io::{self, Read, Write};

use cayley_core::counting::{
    count_total_trees, count_trees_deg_v1, count_trees_with_degrees, deg_v1_distribution,
};
use cayley_core::enumeration::{
    enumerate_all_trees, enumerate_trees_with_degrees, prufer_decode, prufer_encode,
};
use cayley_core::sampling::{sample_tree_with_degrees, sample_uniform_tree, SamplerConfig};
use cayley_core::text::{parse_edge_lists_with_lines, parse_prufer_line};
use cayley_core::verifier::{Formulas, IdentityId, IdentityReport, Limits, Verifier};
use cayley_core::{DegreeSequence, ExactCount, LabeledTree};
use serde::Serialize;

use crate::args::{
    CountFormat, CountSubject, EnumerateArgs, PruferDirection, SampleArgs, TreeFormat, VerifyArgs,
    VerifyTarget,
};
use crate::error::CliError;
use crate::output::TreeSink;

#[derive(Debug, Serialize)]
struct CountRecord {
    subject: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    degrees: Option<String>,
    count: ExactCount,
}

pub fn count(subject: CountSubject, out: &mut impl Write) -> Result<(), CliError> {
    let distribution = matches!(subject, CountSubject::Degv1 { k: None, .. });
    let (records, format) = match subject {
        CountSubject::Total { n, format } => {
            let count = count_total_trees(n)?;
            (
                vec![CountRecord {
                    subject: "total",
                    n: Some(n),
                    k: None,
                    degrees: None,
                    count,
                }],
                format,
            )
        }
        CountSubject::Degrees { degrees, format } => {
            let d = DegreeSequence::new(degrees.0)?;
            let count = count_trees_with_degrees(&d);
            let text = d
                .degrees()
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",");
            let rec = CountRecord {
                subject: "degrees",
                n: Some(d.len()),
                k: None,
                degrees: Some(text),
                count,
            };
            (vec![rec], format)
        }
        CountSubject::Degv1 {
            n,
            k: Some(k),
            format,
        } => {
            let count = count_trees_deg_v1(n, k)?;
            (
                vec![CountRecord {
                    subject: "degv1",
                    n: Some(n),
                    k: Some(k),
                    degrees: None,
                    count,
                }],
                format,
            )
        }
        CountSubject::Degv1 { n, k: None, format } => {
            let rows = deg_v1_distribution(n)?
                .into_iter()
                .map(|r| CountRecord {
                    subject: "degv1",
                    n: Some(r.n),
                    k: Some(r.k),
                    degrees: None,
                    count: r.count,
                })
                .collect();
            (rows, format)
        }
    };
    let single = !distribution;
    match format {
        CountFormat::Text if single => writeln!(out, "{}", records[0].count)?,
        CountFormat::Text => {
            for r in &records {
                writeln!(out, "{} {}", r.k.unwrap_or_default(), r.count)?;
            }
        }
        CountFormat::Json if single => {
            serde_json::to_writer(&mut *out, &records[0]).map_err(io::Error::from)?;
            writeln!(out)?;
        }
        CountFormat::Json => {
            serde_json::to_writer(&mut *out, &records).map_err(io::Error::from)?;
            writeln!(out)?;
        }
        CountFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for r in &records {
                w.serialize(r).map_err(|e| CliError::Usage(e.to_string()))?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

pub fn enumerate(args: EnumerateArgs, out: impl Write) -> Result<(), CliError> {
    if args.count && args.format == TreeFormat::Csv {
        return Err(CliError::Usage(
            "--count cannot be combined with --format csv".into(),
        ));
    }
    if let Some(k) = args.deg_v1 {
        if args.n < 2 || k == 0 || k >= args.n {
            return Err(CliError::Usage(format!(
                "--deg-v1 must lie in 1..={} for n = {}",
                args.n.saturating_sub(1),
                args.n
            )));
        }
    }
    let trees: Box<dyn Iterator<Item = LabeledTree>> = match args.degrees {
        Some(degrees) => {
            let d = DegreeSequence::new(degrees.0)?;
            if d.len() != args.n {
                return Err(CliError::Usage(format!(
                    "--degrees lists {} vertices but n = {}",
                    d.len(),
                    args.n
                )));
            }
            Box::new(enumerate_trees_with_degrees(&d)?)
        }
        None => Box::new(enumerate_all_trees(args.n)?),
    };
    let trees = trees.filter(|t| args.deg_v1.is_none_or(|k| t.degree_of(1).ok() == Some(k)));
    let limit = args.limit.unwrap_or(u64::MAX);
    let mut sink = TreeSink::new(out, args.format);
    for t in trees.take(usize::try_from(limit).unwrap_or(usize::MAX)) {
        sink.write(&t)?;
    }
    sink.finish(args.count)?;
    Ok(())
}

pub fn prufer(
    direction: PruferDirection,
    mut input: impl Read,
    out: impl Write,
) -> Result<(), CliError> {
    let mut text = String::new();
    input.read_to_string(&mut text)?;
    match direction {
        PruferDirection::Encode { format } => {
            let trees = parse_edge_lists_with_lines(&text)?;
            for (line, t) in &trees {
                prufer_encode(t).map_err(|e| CliError::Usage(format!("line {line}: {e}")))?;
            }
            let mut sink = TreeSink::new(out, format);
            for (_, t) in &trees {
                sink.write(t)?;
            }
            sink.finish(false)?;
        }
        PruferDirection::Decode { n, format } => {
            let words = text
                .lines()
                .enumerate()
                .map(|(i, line)| parse_prufer_line(line, n, i + 1))
                .collect::<Result<Vec<_>, _>>()?;
            let mut sink = TreeSink::new(out, format);
            for w in &words {
                sink.write(&prufer_decode(w))?;
            }
            sink.finish(false)?;
        }
    }
    Ok(())
}

pub fn sample(args: SampleArgs, out: impl Write) -> Result<(), CliError> {
    let cfg = SamplerConfig {
        seed: args.seed,
        count: args.count,
    };
    let trees: Box<dyn Iterator<Item = LabeledTree>> = match (args.n, args.degrees) {
        (_, Some(degrees)) => {
            let d = DegreeSequence::new(degrees.0)?;
            if let Some(n) = args.n.filter(|&n| n != d.len()) {
                return Err(CliError::Usage(format!(
                    "--degrees lists {} vertices but n = {n}",
                    d.len()
                )));
            }
            Box::new(sample_tree_with_degrees(&d, cfg))
        }
        (Some(n), None) => Box::new(sample_uniform_tree(n, cfg)?),
        (None, None) => return Err(CliError::Usage("one of -n or --degrees is required".into())),
    };
    let mut sink = TreeSink::new(out, args.format);
    for t in trees {
        sink.write(&t)?;
    }
    sink.finish(false)?;
    Ok(())
}

#[derive(Debug, Serialize)]
struct VerifyError {
    identity_id: IdentityId,
    error: String,
}

#[derive(Debug, Serialize)]
struct VerifyDocument<'a> {
    status: &'static str,
    reports: &'a [IdentityReport],
    errors: Vec<VerifyError>,
}

fn selected(target: VerifyTarget) -> &'static [IdentityId] {
    use IdentityId::*;
    match target {
        VerifyTarget::All => &IdentityId::ALL,
        VerifyTarget::Theorem1 => &[Theorem1],
        VerifyTarget::DegV1Totality => &[DegV1Totality],
        VerifyTarget::Lemma1 => &[Lemma1],
        VerifyTarget::Recursion => &[Eq20Recursion],
        VerifyTarget::Collapse => &[BinomialCollapse],
        VerifyTarget::DoubleCount => &[DoubleCountPairs],
        VerifyTarget::L3 => &[L3Expansion],
        VerifyTarget::Supervertex => &[SupervertexMarginal],
        VerifyTarget::Prufer => &[PruferRoundtrip],
    }
}

fn run_check(v: &Verifier, id: IdentityId, limits: &Limits) -> cayley_core::Result<IdentityReport> {
    match id {
        IdentityId::Theorem1 => v.theorem1(limits.theorem1),
        IdentityId::DegV1Totality => v.deg_v1_totality(limits.deg_v1_totality),
        IdentityId::Lemma1 => v.lemma1(limits.lemma1),
        IdentityId::Eq20Recursion => v.recursion_and_collapse(limits.recursion).map(|[r, _]| r),
        IdentityId::BinomialCollapse => v.recursion_and_collapse(limits.recursion).map(|[_, c]| c),
        IdentityId::DoubleCountPairs => v.double_count(limits.double_count),
        IdentityId::L3Expansion => v.l3_expansion(limits.l3_k_max, limits.l3_m_max),
        IdentityId::SupervertexMarginal => v.supervertex_marginal(limits.l3_k_max, limits.l3_m_max),
        IdentityId::PruferRoundtrip => v.prufer_roundtrip(limits.prufer),
    }
}

/// Returns the process exit code: 0 when every selected identity passes,
/// 1 when any fails.
pub fn verify(args: VerifyArgs, out: &mut impl Write) -> Result<u8, CliError> {
    let formulas = match &args.inject_fault {
        Some(name) => {
            let id = IdentityId::parse(name)
                .ok_or_else(|| CliError::Usage(format!("unknown identity {name:?}")))?;
            Formulas::with_fault(id)
        }
        None => Formulas::default(),
    };
    let verifier = Verifier::new(formulas);
    let limits = args.max_n.map_or_else(Limits::default, Limits::uniform);

    let ids = selected(args.target);
    let results: Vec<(IdentityId, cayley_core::Result<IdentityReport>)> =
        if args.target == VerifyTarget::All {
            verifier.all(&limits)
        } else {
            ids.iter()
                .map(|&id| (id, run_check(&verifier, id, &limits)))
                .collect()
        };

    let mut reports = Vec::new();
    let mut errors = Vec::new();
    let mut first_error = None;
    for (id, r) in results {
        match r {
            Ok(r) => reports.push(r),
            Err(e) => {
                errors.push(VerifyError {
                    identity_id: id,
                    error: e.to_string(),
                });
                first_error.get_or_insert(e);
            }
        }
    }
    let all_pass = reports.iter().all(IdentityReport::passed) && errors.is_empty();

    if args.json {
        let doc = VerifyDocument {
            status: if all_pass { "PASS" } else { "FAIL" },
            reports: &reports,
            errors,
        };
        serde_json::to_writer_pretty(&mut *out, &doc).map_err(io::Error::from)?;
        writeln!(out)?;
    } else {
        write_table(out, &reports, &errors)?;
    }
    out.flush()?;

    if let Some(e) = first_error {
        return Err(e.into());
    }
    Ok(if all_pass { 0 } else { 1 })
}

fn write_table(
    out: &mut impl Write,
    reports: &[IdentityReport],
    errors: &[VerifyError],
) -> io::Result<()> {
    writeln!(
        out,
        "{:<22} {:<6} {:>8}  GRID",
        "IDENTITY", "STATUS", "CHECKED"
    )?;
    for r in reports {
        writeln!(
            out,
            "{:<22} {:<6} {:>8}  {}",
            r.identity_id.as_str(),
            r.status,
            r.checked,
            r.grid
        )?;
        for f in &r.failures {
            writeln!(
                out,
                "    counterexample: {}: expected {}, got {}",
                f.params, f.expected, f.got
            )?;
        }
    }
    for e in errors {
        writeln!(
            out,
            "{:<22} {:<6} {:>8}  {}",
            e.identity_id.as_str(),
            "ERROR",
            "-",
            e.error
        )?;
    }
    writeln!(out)?;
    for r in reports {
        writeln!(out, "{:<22} {}", r.identity_id.as_str(), r.formula)?;
    }
    Ok(())
}
