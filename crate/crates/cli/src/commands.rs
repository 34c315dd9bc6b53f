use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use cxcore::corpus::{
    generic_triangulation, graph_product, parse_sqc, serialize_dsc, serialize_sqc, standard_complex, STANDARD_NAMES,
};
use cxcore::curvature::{
    check_locally_6_large, check_npc, detect_vh, verify_certificate, Certificate, SixLargeOptions, Subject,
    VhPartition, DEFAULT_CLIQUE_CAP,
};
use cxcore::fundamental::{abelianization, enumerate_z2_covers, finite_cover, parse_labeling, pi1_presentation};
use cxcore::homology::homology_groups;
use cxcore::simplexify::{simplexify, triangulate_vh};
use cxcore::{CellComplex, DeltaComplex, SquareComplex};
use serde_json::{json, Value};

use crate::dot::{link_complex_dot, link_graph_dot};
use crate::input::{self, Complex, Loaded};
use crate::report::{describe, Report, Verdict};
use crate::{Cli, CliError, Command, Common};

struct Outcome {
    verdict: Verdict,
    certificates: Vec<Certificate>,
    data: Value,
    text: Vec<String>,
    /// A complex or DOT document, written to `--out` or standard output.
    artifact: Option<String>,
}

impl Outcome {
    fn pass(data: Value, text: Vec<String>) -> Outcome {
        Outcome { verdict: Verdict::Pass, certificates: Vec::new(), data, text, artifact: None }
    }

    fn checked(certificates: Vec<Certificate>, data: Value, mut text: Vec<String>) -> Outcome {
        let verdict = if certificates.is_empty() { Verdict::Pass } else { Verdict::Fail };
        text.extend(certificates.iter().map(describe));
        Outcome { verdict, certificates, data, text, artifact: None }
    }

    fn with_artifact(mut self, artifact: String) -> Outcome {
        self.artifact = Some(artifact);
        self
    }
}

fn check_name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::Npc => "npc",
        Command::Vh => "vh",
        Command::Link { .. } => "link",
        Command::Simplexify { .. } => "simplexify",
        Command::Sixlarge { .. } => "sixlarge",
        Command::Homology => "homology",
        Command::Euler => "euler",
        Command::Pi1 { .. } => "pi1",
        Command::Abel { .. } => "abel",
        Command::Cover { .. } => "cover",
        Command::Product { .. } => "product",
        Command::Corpus { .. } => "corpus",
    }
}

pub fn run(cli: Cli) -> u8 {
    let start = Instant::now();
    let mut report = Report::new(check_name(&cli.command));
    let common = &cli.common;
    let result = dispatch(&cli.command, common, &mut report);
    let mut text = Vec::new();
    let check = report.check.clone();
    let result = result.map(|mut o| {
        o.text.insert(0, format!("{check}: {}", verdict_word(o.verdict)));
        o
    });
    match result.and_then(|o| emit_artifact(common, o)) {
        Ok(outcome) => {
            report.verdict = outcome.verdict;
            report.certificates = outcome.certificates;
            report.data = outcome.data;
            text = outcome.text;
        }
        Err(e) => {
            report.verdict = Verdict::Error;
            report.error = Some(e.to_string());
        }
    }
    report.timing_ms = (start.elapsed().as_secs_f64() * 1e6).round() / 1e3;
    if common.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else if let Some(e) = &report.error {
        eprintln!("error: {e}");
    } else {
        for line in text {
            println!("{line}");
        }
    }
    report.verdict.exit_code()
}

fn verdict_word(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
        Verdict::Error => "error",
    }
}

/// Writes the artifact to `--out`; without `--out` and `--json` it goes to
/// standard output and the summary to standard error.
fn emit_artifact(common: &Common, mut o: Outcome) -> Result<Outcome, CliError> {
    let Some(artifact) = o.artifact.take() else {
        return Ok(o);
    };
    match &common.out {
        Some(path) => {
            std::fs::write(path, artifact).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        }
        None if !common.json => {
            print!("{artifact}");
            for line in o.text.drain(..) {
                eprintln!("{line}");
            }
        }
        None => {}
    }
    Ok(o)
}

fn load(common: &Common, report: &mut Report) -> Result<Loaded, CliError> {
    let loaded = input::load(common.input.as_deref(), common.corpus.as_deref())?;
    report.input_digest = Some(loaded.digest.clone());
    Ok(loaded)
}

fn square(loaded: Loaded, check: &str) -> Result<(SquareComplex, Option<VhPartition>), CliError> {
    match loaded.complex {
        Complex::Square { complex, partition } => Ok((complex, partition)),
        Complex::Delta(_) => Err(CliError::Usage(format!("`{check}` needs a square complex (SQC)"))),
    }
}

/// The partition from the document, or a detected one; swapped on request.
fn partition(
    x: &SquareComplex,
    given: Option<VhPartition>,
    swap: bool,
) -> Result<VhPartition, Certificate> {
    let p = match given {
        Some(p) => p,
        None => detect_vh(x)?.partition,
    };
    Ok(if swap { p.swapped() } else { p })
}

fn clique_cap() -> Result<usize, CliError> {
    match std::env::var("CXTOOL_CLIQUE_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("CXTOOL_CLIQUE_CAP must be a positive integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_CLIQUE_CAP),
    }
}

fn dispatch(command: &Command, common: &Common, report: &mut Report) -> Result<Outcome, CliError> {
    match command {
        Command::Validate { certificate } => validate(common, report, certificate.as_deref()),
        Command::Npc => {
            let (x, _) = square(load(common, report)?, "npc")?;
            let verdict = check_npc(&x);
            let links: Vec<Value> = (0..x.vertices().len())
                .map(|v| {
                    let l = x.vertex_link(v);
                    json!({
                        "vertex": x.vertices()[v],
                        "vertices": l.vertices.len(),
                        "edges": l.edges.len(),
                        "girth": l.girth(),
                    })
                })
                .collect();
            Ok(Outcome::checked(verdict.certificates, json!({ "links": links }), vec![]))
        }
        Command::Vh => {
            let (x, given) = square(load(common, report)?, "vh")?;
            match detect_vh(&x) {
                Ok(found) => {
                    let p = match given {
                        Some(p) => p,
                        None => found.partition,
                    };
                    let p = if common.vclass_swap { p.swapped() } else { p };
                    let vertical = p.vertical_names(&x);
                    let horizontal: Vec<String> =
                        p.swapped().vertical_names(&x);
                    let text = vec![
                        format!("vertical: {}", vertical.join(" ")),
                        format!("horizontal: {}", horizontal.join(" ")),
                        format!("free components: {}", found.free_components),
                    ];
                    let data = json!({
                        "vertical": vertical,
                        "horizontal": horizontal,
                        "free_components": found.free_components,
                    });
                    Ok(Outcome::pass(data, text))
                }
                Err(cert) => Ok(Outcome::checked(vec![cert], Value::Null, vec![])),
            }
        }
        Command::Link { vertex, dot } => {
            let loaded = load(common, report)?;
            match loaded.complex {
                Complex::Square { complex: x, .. } => {
                    let link = x.vertex_link_by_name(vertex)?;
                    let edges: Vec<Value> = (0..link.edges.len())
                        .map(|i| {
                            let e = link.edges[i];
                            json!({
                                "label": link.edge_label(&x, i),
                                "ends": [link.vertex_label(&x, e.ends.0), link.vertex_label(&x, e.ends.1)],
                            })
                        })
                        .collect();
                    let vertices: Vec<String> = (0..link.vertices.len()).map(|i| link.vertex_label(&x, i)).collect();
                    let text = vec![format!(
                        "{} vertices, {} edges, girth {}",
                        vertices.len(),
                        edges.len(),
                        link.girth().map_or("none".to_string(), |g| g.to_string())
                    )];
                    let data = json!({ "vertices": vertices, "edges": edges, "girth": link.girth() });
                    let out = Outcome::pass(data, text);
                    Ok(if *dot { out.with_artifact(link_graph_dot(&x, &link)) } else { out })
                }
                Complex::Delta(x) => {
                    let link = x.vertex_link_by_name(vertex)?;
                    let vertices: Vec<&str> = (0..link.complex.count(0)).map(|v| link.vertex_label(v)).collect();
                    let f = link.complex.f_vector();
                    let text = vec![format!("f-vector {f:?}")];
                    let data = json!({ "vertices": vertices, "f_vector": f });
                    let out = Outcome::pass(data, text);
                    Ok(if *dot { out.with_artifact(link_complex_dot(vertex, &link)) } else { out })
                }
            }
        }
        Command::Simplexify { hat, provenance } => {
            let (x, given) = square(load(common, report)?, "simplexify")?;
            let p = match partition(&x, given, common.vclass_swap) {
                Ok(p) => p,
                Err(cert) => return Ok(Outcome::checked(vec![cert], Value::Null, vec![])),
            };
            let s = if *hat { triangulate_vh(&x, &p)? } else { simplexify(&x, &p)? };
            if let Some(path) = provenance {
                let table: BTreeMap<String, Value> = s
                    .provenance
                    .records(&s.complex, &x)
                    .into_iter()
                    .map(|(name, r)| (name, serde_json::to_value(r).expect("record serializes")))
                    .collect();
                let text = serde_json::to_string_pretty(&table).expect("table serializes");
                std::fs::write(path, text + "\n")
                    .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            }
            let f = s.complex.f_vector();
            let euler = s.complex.euler_characteristic();
            let text = vec![format!("f-vector {f:?}, euler characteristic {euler}")];
            let data = json!({
                "complex": if *hat { "triangulation" } else { "simplexification" },
                "vertical": p.vertical_names(&x),
                "f_vector": f,
                "euler": euler,
            });
            Ok(Outcome::pass(data, text).with_artifact(serialize_dsc(&s.complex)))
        }
        Command::Sixlarge { all_simplices } => {
            let options = SixLargeOptions { clique_cap: clique_cap()?, all_simplices: *all_simplices };
            let x = match load(common, report)?.complex {
                Complex::Delta(x) => x,
                Complex::Square { complex, partition: given } => match partition(&complex, given, common.vclass_swap) {
                    Ok(p) => simplexify(&complex, &p)?.complex,
                    Err(cert) => return Ok(Outcome::checked(vec![cert], Value::Null, vec![])),
                },
            };
            let r = check_locally_6_large(&x, options)?;
            let text = vec![format!("{} links checked", r.checked)];
            let data = json!({ "checked": r.checked, "f_vector": x.f_vector() });
            Ok(Outcome::checked(r.certificates, data, text))
        }
        Command::Homology => {
            let x = delta_for_homology(load(common, report)?);
            let h = homology_groups(&x);
            let text = h.to_string().lines().map(str::to_string).collect();
            Ok(Outcome::pass(serde_json::to_value(&h).expect("profile serializes"), text))
        }
        Command::Euler => {
            let (f, euler) = match load(common, report)?.complex {
                Complex::Square { complex, .. } => (complex.f_vector(), complex.euler_characteristic()),
                Complex::Delta(x) => (x.f_vector(), x.euler_characteristic()),
            };
            let text = vec![format!("f-vector {f:?}, euler characteristic {euler}")];
            Ok(Outcome::pass(json!({ "f_vector": f, "euler": euler }), text))
        }
        Command::Pi1 { basepoint } | Command::Abel { basepoint } => {
            let (x, _) = square(load(common, report)?, "pi1")?;
            let base = match basepoint {
                Some(b) => b.clone(),
                None => x.vertices().first().cloned().ok_or_else(|| CliError::Input("complex has no vertices".into()))?,
            };
            let p = pi1_presentation(&x, &base)?;
            if matches!(command, Command::Pi1 { .. }) {
                let data = json!({ "basepoint": base, "presentation": p });
                Ok(Outcome::pass(data, vec![p.to_string()]))
            } else {
                let ab = abelianization(&p);
                Ok(Outcome::pass(json!({ "basepoint": base, "abelianization": ab }), vec![ab.to_string()]))
            }
        }
        Command::Cover { labels, fiber, enumerate } => {
            let (x, _) = square(load(common, report)?, "cover")?;
            if *enumerate {
                let covers = enumerate_z2_covers(&x)?;
                let text = covers
                    .iter()
                    .map(|c| {
                        let bits: String = c.flips.iter().map(|&f| if f { '1' } else { '0' }).collect();
                        format!("{bits} connected={} vh={}", c.connected, c.vh)
                    })
                    .collect();
                let edges: Vec<&str> = x.edges().iter().map(|e| e.id.as_str()).collect();
                return Ok(Outcome::pass(json!({ "edges": edges, "covers": covers }), text));
            }
            let Some(path) = labels else {
                return Err(CliError::Usage("cover needs --labels FILE or --enumerate".into()));
            };
            let labeling = parse_labeling(&input::read(path)?, &x, *fiber)?;
            let (cover, _) = finite_cover(&x, &labeling)?;
            let vh = detect_vh(&cover).ok();
            let data = json!({
                "fiber": fiber,
                "f_vector": cover.f_vector(),
                "connected": cover.is_connected(),
                "vh": vh.is_some(),
            });
            let text = vec![format!(
                "{}-sheeted cover, f-vector {:?}, connected {}, vh {}",
                fiber,
                cover.f_vector(),
                cover.is_connected(),
                vh.is_some()
            )];
            let sqc = serialize_sqc(&cover, vh.as_ref().map(|d| &d.partition));
            Ok(Outcome::pass(data, text).with_artifact(sqc))
        }
        Command::Product { left, right } => {
            let read_graph = |p: &Path| -> Result<SquareComplex, CliError> {
                let doc = parse_sqc(&input::read(p)?)?;
                if !doc.complex.squares().is_empty() {
                    return Err(CliError::Input(format!("{}: a graph has no squares", p.display())));
                }
                Ok(doc.complex)
            };
            let (g1, g2) = (read_graph(left)?, read_graph(right)?);
            let (x, p) = graph_product(&g1, &g2);
            let sqc = serialize_sqc(&x, Some(&p));
            report.input_digest = Some(input::digest(&sqc));
            let f = x.f_vector();
            Ok(Outcome::pass(json!({ "f_vector": f }), vec![format!("f-vector {f:?}")]).with_artifact(sqc))
        }
        Command::Corpus { name, list } => {
            if *list {
                let text = STANDARD_NAMES.iter().map(|s| s.to_string()).collect();
                return Ok(Outcome::pass(json!({ "names": STANDARD_NAMES }), text));
            }
            let Some(name) = name.as_deref().or(common.corpus.as_deref()) else {
                return Err(CliError::Usage("corpus needs a NAME or --list".into()));
            };
            let (x, p) = standard_complex(name)?;
            let sqc = serialize_sqc(&x, p.as_ref());
            report.input_digest = Some(input::digest(&sqc));
            let data = json!({ "name": name, "f_vector": x.f_vector(), "vh": p.is_some() });
            Ok(Outcome::pass(data, vec![]).with_artifact(sqc))
        }
    }
}

/// Square complexes are coned off square by square, so that complexes
/// without a VH structure also have homology.
fn delta_for_homology(loaded: Loaded) -> DeltaComplex {
    match loaded.complex {
        Complex::Delta(x) => x,
        Complex::Square { complex, .. } => generic_triangulation(&complex),
    }
}

fn is_delta_certificate(c: &Certificate) -> bool {
    matches!(
        c,
        Certificate::NotSimple { .. } | Certificate::MissingCliqueSimplex { .. } | Certificate::ChordlessCycle { .. }
    )
}

fn validate(common: &Common, report: &mut Report, certificate: Option<&Path>) -> Result<Outcome, CliError> {
    let loaded = load(common, report)?;
    let Some(path) = certificate else {
        let (kind, f) = match &loaded.complex {
            Complex::Square { complex, .. } => ("square", complex.f_vector()),
            Complex::Delta(x) => ("delta", x.f_vector()),
        };
        let text = vec![format!("valid {kind} complex, f-vector {f:?}")];
        return Ok(Outcome::pass(json!({ "kind": kind, "f_vector": f }), text));
    };
    let doc: Value = serde_json::from_str(&input::read(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let certs: Vec<Certificate> = serde_json::from_value(doc.get("certificates").cloned().unwrap_or(Value::Null))
        .map_err(|e| CliError::Input(format!("{}: bad certificates: {e}", path.display())))?;
    // delta certificates on a square input refer to its simplexification
    let star = match &loaded.complex {
        Complex::Square { complex, partition: given } if certs.iter().any(is_delta_certificate) => {
            partition(complex, given.clone(), common.vclass_swap)
                .ok()
                .map(|p| simplexify(complex, &p))
                .transpose()?
                .map(|s| s.complex)
        }
        _ => None,
    };
    let mut rejected = Vec::new();
    let mut results = Vec::new();
    for c in &certs {
        let subject = match (&loaded.complex, &star) {
            (Complex::Delta(x), _) => Subject::Delta(x),
            (Complex::Square { .. }, Some(s)) if is_delta_certificate(c) => Subject::Delta(s),
            (Complex::Square { complex, .. }, _) => Subject::Square(complex),
        };
        let r = verify_certificate(subject, c);
        results.push(json!({ "kind": c.kind(), "ok": r.is_ok(), "reason": r.clone().err() }));
        if let Err(reason) = r {
            rejected.push((c.clone(), reason));
        }
    }
    let text = vec![format!("{} of {} certificates verified", certs.len() - rejected.len(), certs.len())];
    let data = json!({ "verified": certs.len() - rejected.len(), "results": results });
    let mut out = Outcome::checked(rejected.iter().map(|(c, _)| c.clone()).collect(), data, text);
    out.text.extend(rejected.iter().map(|(_, r)| format!("rejected: {r}")));
    Ok(out)
}
