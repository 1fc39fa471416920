use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use fulkerson_core::ffamily::{
    covering_from_ffamily, find_ffamily, iterate_dot_sequence, verify_ffamily, MEMBER_NAMES,
};
use fulkerson_core::fulkerson::{
    enumerate_fulkerson_coverings, find_fr_triple, find_fulkerson_covering, is_proper, t_partition, verify_covering,
};
use fulkerson_core::generators;
use fulkerson_core::matchcolor::{enumerate_perfect_matchings, DEFAULT_PM_LIMIT};
use fulkerson_core::{
    Budget, CubicGraph, EdgeSet, FFamily, FRTriple, FulkersonCovering, Matching, PerfectMatching, SearchOutcome,
    Strategy,
};

use crate::error::{exit, CliError};
use crate::export::{to_dot, to_json};
use crate::files::{parse_certificates, parse_graph, write_certificates, write_graph, Certificate, CertificateKind};
use crate::recipe::parse_recipe;

pub type Outcome = Result<i32, CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_graph(path: &Path) -> Result<CubicGraph, CliError> {
    parse_graph(&read(path)?).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_certificates(path: &Path) -> Result<Vec<Certificate>, CliError> {
    parse_certificates(&read(path)?).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

fn out_err(e: std::io::Error) -> CliError {
    CliError::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    }
}

pub fn generate(name: &str, param: Option<usize>) -> Result<CubicGraph, CliError> {
    let need = |what: &str| param.ok_or_else(|| CliError::Usage(format!("`{name}` needs a parameter ({what})")));
    let none = || match param {
        Some(_) => Err(CliError::Usage(format!("`{name}` takes no parameter"))),
        None => Ok(()),
    };
    let bad = |e: fulkerson_core::Error| CliError::Usage(e.to_string());
    Ok(match name {
        "petersen" => none().map(|_| generators::petersen())?,
        "theta" => none().map(|_| generators::theta())?,
        "k4" => none().map(|_| generators::k4())?,
        "k33" => none().map(|_| generators::k33())?,
        "q3" | "cube" => none().map(|_| generators::cube_q3())?,
        "ten-vertex" => none().map(|_| generators::ten_vertex_c5_example())?,
        "cluster" => none().map(|_| generators::petersen_c5_cluster())?,
        "flower" => generators::flower_snark(need("odd k >= 3")?).map_err(bad)?,
        "goldberg" => generators::goldberg(need("odd k >= 3")?).map_err(bad)?,
        "doubled" => generators::doubled_matching_cycle(need("even length >= 4")?).map_err(bad)?,
        other => {
            return Err(CliError::Usage(format!(
                "unknown graph family {other:?}; expected one of {}",
                GRAPH_FAMILIES.join(", ")
            )))
        }
    })
}

pub const GRAPH_FAMILIES: [&str; 10] = [
    "petersen",
    "theta",
    "k4",
    "k33",
    "q3",
    "ten-vertex",
    "cluster",
    "flower <k>",
    "goldberg <k>",
    "doubled <m>",
];

pub fn cmd_gen(name: &str, param: Option<usize>, out: &mut dyn Write) -> Outcome {
    let g = generate(name, param)?;
    out.write_all(write_graph(&g).as_bytes()).map_err(out_err)?;
    Ok(exit::FOUND)
}

/// Result of checking one certificate: the problems found, and a summary
/// of what was checked.
struct Check {
    problems: Vec<String>,
    summary: String,
}

fn edge_set(g: &CubicGraph, ids: &[usize]) -> Result<EdgeSet, String> {
    EdgeSet::from_ids(g.edge_count(), ids.iter().copied()).map_err(|e| e.to_string())
}

fn perfect(g: &CubicGraph, ids: &[usize], what: &str) -> Result<PerfectMatching, String> {
    PerfectMatching::new(g, edge_set(g, ids)?).map_err(|e| format!("{what}: {e}"))
}

fn matching(g: &CubicGraph, ids: &[usize], what: &str) -> Result<Matching, String> {
    Matching::new(g, edge_set(g, ids)?).map_err(|e| format!("{what}: {e}"))
}

fn perfect_all(g: &CubicGraph, sets: &[Vec<usize>]) -> Result<Vec<PerfectMatching>, Vec<String>> {
    let mut ok = Vec::new();
    let mut bad = Vec::new();
    for (i, s) in sets.iter().enumerate() {
        match perfect(g, s, &format!("matching {}", i + 1)) {
            Ok(p) => ok.push(p),
            Err(e) => bad.push(e),
        }
    }
    if bad.is_empty() {
        Ok(ok)
    } else {
        Err(bad)
    }
}

fn check_certificate(g: &CubicGraph, cert: &Certificate) -> Check {
    let fail = |problems: Vec<String>| Check {
        problems,
        summary: String::new(),
    };
    if cert.graph_size() != (g.vertex_count(), g.edge_count()) {
        let (n, m) = cert.graph_size();
        return fail(vec![format!(
            "certificate is for a graph with {n} vertices and {m} edges, not {} and {}",
            g.vertex_count(),
            g.edge_count()
        )]);
    }
    match cert {
        Certificate::Covering { matchings, .. } => {
            let pms = match perfect_all(g, matchings) {
                Ok(p) => p,
                Err(bad) => return fail(bad),
            };
            let f = FulkersonCovering::new(pms).expect("six perfect matchings of one graph");
            let report = verify_covering(g, &f).expect("members already checked");
            let problems = report
                .violations()
                .into_iter()
                .map(|(e, c)| format!("edge {e} covered {c} times"))
                .collect();
            Check {
                problems,
                summary: format!(
                    "Fulkerson covering ({})",
                    if is_proper(&f) { "proper" } else { "not proper" }
                ),
            }
        }
        Certificate::FrTriple { matchings, .. } => {
            let pms = match perfect_all(g, matchings) {
                Ok(p) => p,
                Err(bad) => return fail(bad),
            };
            let [a, b, c]: [PerfectMatching; 3] = pms.try_into().expect("three matchings");
            match FRTriple::new(a, b, c) {
                Err(e) => fail(vec![e.to_string()]),
                Ok(t) => {
                    let p = t_partition(g, &t).expect("valid triple");
                    Check {
                        problems: Vec::new(),
                        summary: format!(
                            "FR-triple (|T0| = {}, |T1| = {}, |T2| = {})",
                            p.t0.len(),
                            p.t1.len(),
                            p.t2.len()
                        ),
                    }
                }
            }
        }
        Certificate::FFamily {
            matching: m,
            members,
            pairing,
            ..
        } => {
            let built = (|| -> Result<FFamily, String> {
                let m = perfect(g, m, "m")?;
                let mut ms = Vec::with_capacity(4);
                for (name, s) in MEMBER_NAMES.iter().zip(members) {
                    ms.push(matching(g, s, &format!("member {name}"))?);
                }
                let n = matching(g, pairing, "n")?;
                FFamily::new(g, m, ms.try_into().expect("four members"), n).map_err(|e| e.to_string())
            })();
            let fam = match built {
                Ok(f) => f,
                Err(e) => return fail(vec![e]),
            };
            let report = match verify_ffamily(g, &fam) {
                Ok(r) => r,
                Err(e) => return fail(vec![e.to_string()]),
            };
            if !report.is_valid() {
                return fail(report.violations.iter().map(|v| v.to_string()).collect());
            }
            match covering_from_ffamily(g, &fam) {
                Ok(f) => Check {
                    problems: Vec::new(),
                    summary: format!(
                        "F-family ({} cycles in G \\ M, induced covering {})",
                        report.cycles.len(),
                        if is_proper(&f) { "proper" } else { "not proper" }
                    ),
                },
                Err(e) => fail(vec![format!("family verifies but yields no covering: {e}")]),
            }
        }
    }
}

pub fn cmd_verify(graph: &Path, certificate: &Path, out: &mut dyn Write) -> Outcome {
    let g = load_graph(graph)?;
    let certs = load_certificates(certificate)?;
    let mut all_ok = true;
    for (i, c) in certs.iter().enumerate() {
        let check = check_certificate(&g, c);
        let head = format!("certificate {} ({})", i + 1, c.kind());
        if check.problems.is_empty() {
            writeln!(out, "{head}: valid {}", check.summary).map_err(out_err)?;
        } else {
            all_ok = false;
            writeln!(out, "{head}: INVALID").map_err(out_err)?;
            for p in &check.problems {
                writeln!(out, "  {p}").map_err(out_err)?;
            }
        }
    }
    Ok(if all_ok { exit::FOUND } else { exit::ABSENT })
}

/// Certificates found, and whether the search was cut short by the budget.
type Found = (Vec<Certificate>, bool);

fn outcome<T>(r: SearchOutcome<T>, to_cert: impl FnOnce(T) -> Certificate) -> Found {
    match r {
        SearchOutcome::Found(x) => (vec![to_cert(x)], false),
        SearchOutcome::NotFound => (Vec::new(), false),
        SearchOutcome::Unknown => (Vec::new(), true),
    }
}

fn all_fr_triples(g: &CubicGraph, budget: &Budget) -> Found {
    let e = enumerate_perfect_matchings(g, Some(DEFAULT_PM_LIMIT));
    let pms = &e.matchings;
    let mut out = Vec::new();
    for i in 0..pms.len() {
        for j in i + 1..pms.len() {
            let ij = pms[i].intersection(&pms[j]).expect("same graph");
            for k in j + 1..pms.len() {
                if !budget.tick() {
                    return (out, true);
                }
                if ij.is_disjoint(&pms[k]) {
                    let t = FRTriple::new(pms[i].clone(), pms[j].clone(), pms[k].clone()).expect("checked");
                    out.push(Certificate::from_triple(g, &t));
                }
            }
        }
    }
    (out, e.truncated)
}

fn all_families(g: &CubicGraph, budget: &Budget) -> Found {
    let e = enumerate_perfect_matchings(g, Some(DEFAULT_PM_LIMIT));
    let mut out = Vec::new();
    for m in &e.matchings {
        match find_ffamily(g, Some(m), budget) {
            SearchOutcome::Found(f) => out.push(Certificate::from_family(g, &f)),
            SearchOutcome::NotFound => {}
            SearchOutcome::Unknown => return (out, true),
        }
    }
    (out, e.truncated)
}

pub struct SearchArgs<'a> {
    pub graph: &'a Path,
    pub target: CertificateKind,
    pub strategy: Strategy,
    pub all: bool,
    pub budget: &'a Budget,
}

pub fn cmd_search(a: SearchArgs<'_>, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let g = load_graph(a.graph)?;
    let b = a.budget;
    let (certs, cut) = match (a.target, a.all) {
        (CertificateKind::FrTriple, false) => outcome(find_fr_triple(&g, b), |t| Certificate::from_triple(&g, &t)),
        (CertificateKind::FrTriple, true) => all_fr_triples(&g, b),
        (CertificateKind::Covering, false) => outcome(find_fulkerson_covering(&g, a.strategy, b), |f| {
            Certificate::from_covering(&g, &f)
        }),
        (CertificateKind::Covering, true) => {
            let (fs, complete) = enumerate_fulkerson_coverings(&g, usize::MAX, b);
            (
                fs.iter().map(|f| Certificate::from_covering(&g, f)).collect(),
                !complete,
            )
        }
        (CertificateKind::FFamily, false) => outcome(find_ffamily(&g, None, b), |f| Certificate::from_family(&g, &f)),
        (CertificateKind::FFamily, true) => all_families(&g, b),
    };
    if !certs.is_empty() {
        out.write_all(write_certificates(&certs).as_bytes()).map_err(out_err)?;
    }
    let what = a.target;
    if cut {
        writeln!(
            err,
            "search for {what} stopped: budget exhausted after {} certificate(s)",
            certs.len()
        )
        .map_err(out_err)?;
        return Ok(exit::BUDGET);
    }
    if certs.is_empty() {
        writeln!(err, "no {what} exists (exhaustive search)").map_err(out_err)?;
        return Ok(exit::ABSENT);
    }
    writeln!(err, "found {} {what} certificate(s)", certs.len()).map_err(out_err)?;
    Ok(exit::FOUND)
}

pub struct PipelineArgs<'a> {
    pub recipe: &'a Path,
    pub out_dir: Option<&'a Path>,
    pub emit_intermediate: bool,
    pub budget: &'a Budget,
}

pub fn cmd_pipeline(a: PipelineArgs<'_>, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    if a.emit_intermediate && a.out_dir.is_none() {
        return Err(CliError::Usage("--emit-intermediate needs --out <dir>".into()));
    }
    let recipe = parse_recipe(&read(a.recipe)?).map_err(|source| CliError::Parse {
        path: a.recipe.to_path_buf(),
        source,
    })?;
    let seq = iterate_dot_sequence(recipe.base, &recipe.steps, a.budget)?;
    if a.budget.is_exhausted() {
        return Err(CliError::Budget("pipeline".into()));
    }
    for (i, ((g, fam), spec)) in seq.stages.iter().skip(1).zip(&seq.specs).enumerate() {
        if let Some(v) = verify_ffamily(g, fam)?.violations.first() {
            return Err(fulkerson_core::Error::Step {
                step: i + 1,
                source: Box::new(fulkerson_core::Error::FamilyInvalid(v.to_string())),
            }
            .into());
        }
        writeln!(
            err,
            "step {}: {:?} with {} (e1 = {}, e2 = {}, e3 = {}) -> {} vertices, family verified",
            i + 1,
            recipe.steps[i].op,
            recipe.steps[i].graph,
            spec.e1,
            spec.e2,
            spec.e3,
            g.vertex_count()
        )
        .map_err(out_err)?;
    }
    let g = seq.graph();
    if !verify_covering(g, &seq.covering)?.is_valid() {
        return Err(fulkerson_core::Error::Invariant("pipeline covering does not verify".into()).into());
    }
    let fam_cert = Certificate::from_family(g, seq.family());
    let cov_cert = Certificate::from_covering(g, &seq.covering);
    match a.out_dir {
        None => {
            let text = format!("{}\n{}", write_graph(g), write_certificates(&[fam_cert, cov_cert]));
            out.write_all(text.as_bytes()).map_err(out_err)?;
        }
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|source| CliError::Io {
                path: dir.to_path_buf(),
                source,
            })?;
            if a.emit_intermediate {
                for (i, (gi, fi)) in seq.stages.iter().enumerate() {
                    write_file(&dir.join(format!("G{i}.graph")), &write_graph(gi))?;
                    write_file(
                        &dir.join(format!("G{i}.ffamily.cert")),
                        &Certificate::from_family(gi, fi).to_string(),
                    )?;
                }
            }
            write_file(&dir.join("final.graph"), &write_graph(g))?;
            write_file(&dir.join("final.ffamily.cert"), &fam_cert.to_string())?;
            write_file(&dir.join("final.covering.cert"), &cov_cert.to_string())?;
            writeln!(err, "wrote artifacts to {}", dir.display()).map_err(out_err)?;
        }
    }
    Ok(exit::FOUND)
}

pub fn cmd_export(graph: &Path, format: &str, certificate: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let render: fn(&fulkerson_core::MultiGraph, Option<&Certificate>) -> String = match format {
        "dot" => to_dot,
        "json" => to_json,
        other => {
            return Err(CliError::Usage(format!(
                "unknown format {other:?}; expected dot or json"
            )))
        }
    };
    let g = load_graph(graph)?;
    let cert = match certificate {
        None => None,
        Some(p) => {
            let mut cs = load_certificates(p)?;
            if cs.len() != 1 {
                return Err(CliError::Usage(format!(
                    "{}: expected exactly one certificate",
                    p.display()
                )));
            }
            let c = cs.remove(0);
            if c.graph_size() != (g.vertex_count(), g.edge_count()) {
                return Err(CliError::Usage("certificate does not belong to this graph".into()));
            }
            Some(c)
        }
    };
    out.write_all(render(&g, cert.as_ref()).as_bytes()).map_err(out_err)?;
    Ok(exit::FOUND)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen_covering() -> Certificate {
        let g = generators::petersen();
        let f = find_fulkerson_covering(&g, Strategy::Exact2Cover, &Budget::unlimited())
            .found()
            .unwrap();
        Certificate::from_covering(&g, &f)
    }

    #[test]
    fn covering_checks() {
        let g = generators::petersen();
        let c = petersen_covering();
        assert!(check_certificate(&g, &c).problems.is_empty());
        let Certificate::Covering { n, m, mut matchings } = c else {
            unreachable!()
        };
        matchings[1] = matchings[0].clone();
        let bad = Certificate::Covering { n, m, matchings };
        let r = check_certificate(&g, &bad);
        assert!(r.problems.iter().any(|p| p.contains("covered 3 times")));
        assert!(r.problems.iter().any(|p| p.contains("covered 1 times")));
    }

    #[test]
    fn wrong_graph_is_invalid() {
        let r = check_certificate(&generators::k4(), &petersen_covering());
        assert_eq!(r.problems.len(), 1);
    }

    #[test]
    fn non_matching_is_reported() {
        let g = generators::theta();
        let c = Certificate::FrTriple {
            n: 2,
            m: 3,
            matchings: vec![vec![0, 1], vec![1], vec![2]],
        };
        let r = check_certificate(&g, &c);
        assert!(r.problems[0].starts_with("matching 1"));
    }

    #[test]
    fn family_checks() {
        let g = generators::petersen();
        let fam = find_ffamily(&g, None, &Budget::unlimited()).found().unwrap();
        let c = Certificate::from_family(&g, &fam);
        assert!(check_certificate(&g, &c).problems.is_empty());
        let Certificate::FFamily {
            n,
            m,
            matching,
            members,
            ..
        } = c
        else {
            unreachable!()
        };
        let bad = Certificate::FFamily {
            n,
            m,
            matching,
            members,
            pairing: Vec::new(),
        };
        assert!(!check_certificate(&g, &bad).problems.is_empty());
    }

    #[test]
    fn generators_by_name() {
        assert_eq!(generate("flower", Some(5)).unwrap().vertex_count(), 20);
        assert!(matches!(generate("flower", Some(4)), Err(CliError::Usage(_))));
        assert!(matches!(generate("petersen", Some(1)), Err(CliError::Usage(_))));
        assert!(matches!(generate("dodecahedron", None), Err(CliError::Usage(_))));
    }
}
