use std::fmt::Write as _;
use std::fs;

use anyhow::{bail, Context, Result};
use holokit::catalog;
use holokit::holonomy::{
    self, compare_enveloping, decomposability_with, elimination_tower, exponent_scan,
    holonomy_presentation, ideal_j_dims, kohno_series, lfs_report, lfs_series,
    subalgebra_ideal_dims, verify_tower, DecompositionReport, PartitionReport, SeriesComparison,
    TowerCheck, Witness,
};
use holokit::lattice::{flats_lattice, os_hilbert_series, region_count};
use holokit::lie::{enveloping_series, EngineConfig, GradedDims};
use holokit::matroid::Graph;
use serde::Serialize;

use crate::source::Source;
use crate::{
    CatalogCmd, Cli, Command, Format, GraphCmd, HolonomyCmd, MatroidCmd, ScanCmd, VerifyCmd,
};

pub enum Outcome {
    Success,
    Mismatch,
}

const REGION_CAVEAT: &str =
    "note: this counts chambers only if the matroid is realized by a real hyperplane arrangement";

fn engine_config() -> Result<EngineConfig> {
    let mut config = EngineConfig::default();
    if let Ok(v) = std::env::var("HOLOKIT_MAX_WORDS") {
        config.max_words = v
            .trim()
            .parse()
            .with_context(|| format!("HOLOKIT_MAX_WORDS must be a positive integer, got `{v}`"))?;
    }
    Ok(config)
}

struct Out {
    format: Format,
}

impl Out {
    /// Prints `json` in JSON mode and `text()` otherwise.
    fn emit<T: Serialize>(&self, json: &T, text: impl FnOnce() -> String) -> Result<()> {
        match self.format {
            Format::Json => println!("{}", serde_json::to_string(json)?),
            Format::Text => {
                let t = text();
                print!("{t}");
                if !t.ends_with('\n') {
                    println!();
                }
            }
        }
        Ok(())
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let out = Out {
        format: cli.global.format,
    };
    let validate = !cli.global.no_validate;
    let load = |s: &str| Source::load(s, validate);
    match &cli.command {
        Command::Matroid(cmd) => matroid(cmd, &out, load),
        Command::Holonomy(cmd) => holonomy_cmd(cmd, &out, load),
        Command::Graph(cmd) => graph(cmd, &out, load),
        Command::Verify(cmd) => verify(cmd, &out, load),
        Command::Scan(ScanCmd::Exponents { dir }) => scan(dir, &out, validate),
        Command::Catalog(CatalogCmd::List) => {
            #[derive(Serialize)]
            struct Item {
                name: &'static str,
                description: &'static str,
            }
            let items: Vec<Item> = catalog::list()
                .into_iter()
                .map(|(name, description)| Item { name, description })
                .collect();
            out.emit(&items, || {
                let w = items.iter().map(|i| i.name.len()).max().unwrap_or(0);
                items
                    .iter()
                    .map(|i| format!("{:w$}  {}\n", i.name, i.description))
                    .collect()
            })?;
            Ok(Outcome::Success)
        }
    }
}

fn matroid(cmd: &MatroidCmd, out: &Out, load: impl Fn(&str) -> Result<Source>) -> Result<Outcome> {
    match cmd {
        MatroidCmd::Flats { source } => {
            let m = load(source)?.matroid()?;
            let summary = flats_lattice(&m).summary(m.ground());
            out.emit(&summary, || {
                let mut s = String::new();
                for f in &summary.flats {
                    let _ = writeln!(
                        s,
                        "rank {}  {{{}}}  mu={}",
                        f.rank,
                        f.elements.join(","),
                        f.mobius
                    );
                }
                s
            })?;
        }
        MatroidCmd::OsSeries { source } => {
            let p = os_hilbert_series(&load(source)?.matroid()?);
            out.emit(&p, || p.to_string())?;
        }
        MatroidCmd::Regions { source } => {
            let r = region_count(&load(source)?.matroid()?);
            out.emit(&r, || format!("{r}\n{REGION_CAVEAT}"))?;
        }
    }
    Ok(Outcome::Success)
}

fn dims_table(label: &str, dims: &GradedDims) -> String {
    let cells: Vec<(String, String)> = dims
        .dims
        .iter()
        .enumerate()
        .map(|(k, v)| ((k + 1).to_string(), v.to_string()))
        .collect();
    let head = "degree".len().max(label.len());
    let mut top = format!("{:head$}", "degree");
    let mut bottom = format!("{label:head$}");
    for (d, v) in &cells {
        let w = d.len().max(v.len());
        let _ = write!(top, "  {d:>w$}");
        let _ = write!(bottom, "  {v:>w$}");
    }
    format!("{top}\n{bottom}\n")
}

fn witness_lines(ws: &[Witness]) -> String {
    ws.iter()
        .map(|w| {
            format!(
                "  [{},[{},{}]]  in {{{}}}\n",
                w.x,
                w.y,
                w.z,
                w.block.join(",")
            )
        })
        .collect()
}

fn parse_parts(text: &str) -> Result<Vec<Vec<usize>>> {
    text.split(';')
        .map(|part| {
            part.split(',')
                .map(|k| {
                    k.trim()
                        .parse::<usize>()
                        .with_context(|| format!("bad block index `{k}` in --parts"))
                })
                .collect()
        })
        .collect()
}

fn holonomy_cmd(
    cmd: &HolonomyCmd,
    out: &Out,
    load: impl Fn(&str) -> Result<Source>,
) -> Result<Outcome> {
    let config = engine_config()?;
    match cmd {
        HolonomyCmd::Present { source } => {
            let h = holonomy_presentation(&load(source)?.arrangement()?);
            let report = h.report();
            out.emit(&report, || {
                let mut s = format!("generators: {}\n", report.generators.join(" "));
                let mut current = None;
                for (k, row) in report.relations.iter().enumerate() {
                    if k == 0 || row.block != current {
                        match row.block {
                            Some(b) => {
                                let _ = writeln!(s, "block {{{}}}:", report.blocks[b].join(","));
                            }
                            None => s.push_str("commutators:\n"),
                        }
                        current = row.block;
                    }
                    let _ = writeln!(s, "  {}", row.text);
                }
                s
            })?;
        }
        HolonomyCmd::Dims { source, degree } => {
            let h = holonomy_presentation(&load(source)?.arrangement()?);
            let dims = h.graded_dims(degree.max_degree, &config)?;
            out.emit(&dims, || dims_table("dim", &dims))?;
        }
        HolonomyCmd::Series { source, degree } => {
            let h = holonomy_presentation(&load(source)?.arrangement()?);
            let d = degree.max_degree;
            let series = enveloping_series(&h.graded_dims(d, &config)?, d);
            out.emit(&series, || series.format("t"))?;
        }
        HolonomyCmd::Decompose {
            source,
            max_degree,
            parts,
            block,
        } => {
            let h = holonomy_presentation(&load(source)?.arrangement()?);
            if let Some(parts) = parts {
                let report: PartitionReport =
                    ideal_j_dims(&h, &parse_parts(parts)?, *max_degree, &config)?;
                out.emit(&report, || {
                    let mut s = dims_table("dim J", &report.ideal_dims);
                    if report.bracket_test_vanishes {
                        s.push_str("bracket test: all [x,[y,z]] vanish\n");
                    } else {
                        s.push_str("bracket test: nonvanishing brackets\n");
                        s.push_str(&witness_lines(&report.witnesses));
                    }
                    s
                })?;
            } else if let Some(b) = block {
                let dims = subalgebra_ideal_dims(&h, *b, *max_degree, &config)?;
                out.emit(&dims, || dims_table("dim I_A", &dims))?;
            } else {
                let report: DecompositionReport = decomposability_with(&h, *max_degree, &config)?;
                out.emit(&report, || {
                    let mut s = format!(
                        "decomposable: {}\n",
                        if report.decomposable { "yes" } else { "no" }
                    );
                    if !report.witnesses.is_empty() {
                        s.push_str("nonvanishing brackets:\n");
                        s.push_str(&witness_lines(&report.witnesses));
                    }
                    s.push_str(&dims_table("dim I", &report.ideal_dims));
                    s
                })?;
            }
        }
    }
    Ok(Outcome::Success)
}

fn graph(cmd: &GraphCmd, out: &Out, load: impl Fn(&str) -> Result<Source>) -> Result<Outcome> {
    match cmd {
        GraphCmd::Lfs {
            edgefile,
            max_degree,
        } => {
            let g = load(edgefile)?.graph()?;
            let report = lfs_report(&g, *max_degree);
            out.emit(&report, || {
                let kappa: Vec<String> = report.clique_counts.iter().map(u64::to_string).collect();
                let exps: Vec<String> = report
                    .exponents
                    .iter()
                    .map(|(j, e)| format!("e{j}={e}"))
                    .collect();
                format!(
                    "clique counts: {}\nexponents: {}\nseries: {}\n",
                    kappa.join(" "),
                    exps.join(" "),
                    report.series.format("t")
                )
            })?;
        }
        GraphCmd::Tower { edgefile } => {
            let g = load(edgefile)?.graph()?;
            let tower = elimination_tower(&g)?;
            out.emit(&tower, || {
                let r: Vec<String> = tower.ranks.iter().map(u64::to_string).collect();
                format!("ranks: {}", r.join(","))
            })?;
        }
    }
    Ok(Outcome::Success)
}

fn comparison_text(c: &SeriesComparison) -> String {
    let mut s = format!(
        "computed:  {}\npredicted: {}\n",
        c.computed.format("t"),
        c.predicted.format("t")
    );
    match c.first_mismatch {
        None => s.push_str("match\n"),
        Some(d) => {
            let _ = writeln!(
                s,
                "mismatch at degree {d}: computed {}, predicted {}",
                c.computed.coeffs[d], c.predicted.coeffs[d]
            );
        }
    }
    s
}

fn outcome(matches: bool) -> Outcome {
    if matches {
        Outcome::Success
    } else {
        Outcome::Mismatch
    }
}

fn graph_presentation(g: &Graph) -> Result<holonomy::HolonomyPresentation> {
    Ok(holonomy_presentation(&holonomy::graph_arrangement(g)?))
}

fn verify(cmd: &VerifyCmd, out: &Out, load: impl Fn(&str) -> Result<Source>) -> Result<Outcome> {
    let config = engine_config()?;
    match cmd {
        VerifyCmd::Kohno { n, degree } => {
            if *n < 2 {
                bail!("-n must be at least 2");
            }
            let h = graph_presentation(&Graph::complete(*n))?;
            let c = compare_enveloping(&h, kohno_series(*n, degree.max_degree), &config)?;
            out.emit(&c, || comparison_text(&c))?;
            Ok(outcome(c.matches))
        }
        VerifyCmd::Lfs { edgefile, degree } => {
            let g = load(edgefile)?.graph()?;
            let h = graph_presentation(&g)?;
            let c = compare_enveloping(&h, lfs_series(&g, degree.max_degree), &config)?;
            out.emit(&c, || comparison_text(&c))?;
            Ok(outcome(c.matches))
        }
        VerifyCmd::Tower {
            source,
            ranks,
            degree,
        } => {
            let src = load(source)?;
            let ranks = match ranks {
                Some(r) => r.clone(),
                None => match src.as_graph() {
                    Some(g) => elimination_tower(g)?.ranks,
                    None => bail!("--ranks is required unless the input is a graph"),
                },
            };
            let h = holonomy_presentation(&src.arrangement()?);
            let check: TowerCheck = verify_tower(&h, &ranks, degree.max_degree, &config)?;
            out.emit(&check, || {
                let r: Vec<String> = check.ranks.iter().map(u64::to_string).collect();
                format!(
                    "ranks: {}\n{}",
                    r.join(","),
                    comparison_text(&check.comparison)
                )
            })?;
            Ok(outcome(check.matches()))
        }
    }
}

fn scan(dir: &str, out: &Out, validate: bool) -> Result<Outcome> {
    let mut paths: Vec<_> = fs::read_dir(dir)
        .with_context(|| format!("cannot read directory `{dir}`"))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    paths.sort();
    let mut graphs = Vec::with_capacity(paths.len());
    for p in paths {
        let name = p
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_default();
        let text =
            fs::read_to_string(&p).with_context(|| format!("cannot read `{}`", p.display()))?;
        let g = Source::parse(&text, validate)
            .and_then(Source::graph)
            .with_context(|| format!("in `{}`", p.display()))?;
        graphs.push((name, g));
    }
    let report = exponent_scan(&graphs);
    out.emit(&report, || {
        let mut s = String::new();
        for e in &report {
            let exps: Vec<String> = e
                .exponents
                .iter()
                .map(|(j, v)| format!("e{j}={v}"))
                .collect();
            let flag = if e.flagged.is_empty() {
                ""
            } else {
                "  <- non-positive exponent"
            };
            let _ = writeln!(s, "{}: {}{flag}", e.name, exps.join(" "));
        }
        let flagged = report.iter().filter(|e| !e.flagged.is_empty()).count();
        let _ = writeln!(
            s,
            "{} graphs, {flagged} with a non-positive exponent",
            report.len()
        );
        s
    })?;
    Ok(Outcome::Success)
}
