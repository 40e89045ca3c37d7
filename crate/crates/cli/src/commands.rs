use std::fmt::Write;

use anyhow::{bail, Context, Result};
use brauer_kit::algebra::{
    arrow_grading_of, cut_algebra, dimension_of, quiver_of, relations_of, serialize_qa, trivext_bigrading, trivial_extension_graph,
    Quiver,
};
use brauer_kit::batch::{analyze_cuts, Execution};
use brauer_kit::equivalence::{
    graded_tilting_summary, shift_equivalence, tilting_modules, tilting_summary, transformed_equivalence,
    triangular_split, Part, TriangularSplit, VertexShift, DEFAULT_TRANSFORM,
};
use brauer_kit::gentle::{ag_invariant, check_gentle, global_dimension, Witness};
use brauer_kit::graph::{
    admissible_cut_count, homogeneity, is_admissible_cut, serialize, surface_invariants, BrauerGraph,
    GradedBrauerGraph, SurfaceInvariants,
};
use brauer_kit::mutation::{grading_transport, maximal_sectors, sector_degrees, sector_move, subset_move, Sector};
use brauer_kit::Error;
use serde_json::{json, Value};

use crate::cli::{Command, MoveTarget, SplitArgs};
use crate::input;
use crate::registry;
use crate::report::*;

pub fn run(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Validate { graph } => validate(graph),
        Command::Vertices { graph } => vertices(graph),
        Command::Mutate { graph, target } => mutate(graph, target),
        Command::Sectors { graph, subset } => sectors(graph, subset),
        Command::SectorDegrees { graph, subset } => degrees(graph, subset),
        Command::Transport { graph, subset, target } => transport(graph, subset, target),
        Command::Algebra { graph, relations, dim, emit_dot } => algebra(graph, *relations, *dim, *emit_dot),
        Command::Cuts { graph, enumerate, check } => cuts(graph, *enumerate, check.as_deref()),
        Command::CutAlgebra { graph, cut } => {
            let gg = input::graph(graph)?;
            let c = cut.as_deref().map(|c| input::grading(gg.graph(), c)).transpose()?;
            let p = cut_algebra(gg.graph(), c.as_ref().unwrap_or(gg.grading()))?;
            Ok(Report::new(serialize_qa(&p), presentation_json(&p)))
        }
        Command::Trivext { algebra } => {
            let p = input::presentation(algebra)?;
            let (g, cut) = trivial_extension_graph(&p)?;
            let gg = GradedBrauerGraph::new(g, cut)?;
            Ok(Report::new(serialize(&gg), graph_json(&gg)))
        }
        Command::GentleCheck { algebra } => gentle_check(algebra),
        Command::Gldim { input, cut } => gldim(input, cut.as_deref()),
        Command::Ag { input, cut } => {
            let p = input::gentle(input, cut.as_deref())?;
            let ag = ag_invariant(&p)?;
            Ok(Report::new(pairs_text(&ag.pairs), json!({ "ag": ag.pairs })))
        }
        Command::ShiftEquiv { graph, first, second } => shift(graph, first, second),
        Command::TransformEquiv { graph, first, second, matrix, cuts } => {
            transform(graph, first, second, matrix.unwrap_or(DEFAULT_TRANSFORM), *cuts)
        }
        Command::Split(args) => split(args),
        Command::Tilting { split, graded } => tilting(split, *graded),
        Command::Surface { graph } => surface(graph),
        Command::Example { name, run } => registry::command(name, *run),
    }
}

fn names(graph: &BrauerGraph, hs: &[usize]) -> Vec<String> {
    graph.names_of(hs)
}

fn validate(arg: &str) -> Result<Report> {
    let gg = input::graph(arg)?;
    let g = gg.graph();
    let rank = gg.grading().rank();
    let homog = homogeneity(&gg);
    let cut = if rank == 1 { Some(is_admissible_cut(&gg)?) } else { None };
    let mut text = format!(
        "valid: {} half-edges, {} vertices, {} edges\n",
        g.len(),
        g.vertices().len(),
        g.edges().len()
    );
    match &homog {
        Some(d) => writeln!(text, "grading: rank {rank}, homogeneous of degree {}", degree(d))?,
        None => writeln!(text, "grading: rank {rank}, not homogeneous")?,
    }
    if let Some(c) = cut {
        writeln!(text, "admissible cut: {}", if c { "yes" } else { "no" })?;
    }
    let json = json!({
        "valid": true,
        "halfedges": g.len(),
        "vertices": g.vertices().len(),
        "edges": g.edges().len(),
        "rank": rank,
        "homogeneity": homog,
        "admissible_cut": cut,
    });
    Ok(Report::new(text, json))
}

fn vertices(arg: &str) -> Result<Report> {
    let gg = input::graph(arg)?;
    let g = gg.graph();
    let vs: Vec<Vec<String>> = g.vertices().iter().map(|o| names(g, o)).collect();
    let es: Vec<(String, Vec<String>)> = g.edges().iter().map(|e| (g.edge_name(e[0]), names(g, e))).collect();
    let mut text = String::from("vertices:\n");
    for v in &vs {
        writeln!(text, "  ({})", v.join(" "))?;
    }
    text.push_str("edges:\n");
    for (name, hs) in &es {
        writeln!(text, "  {name} = {}", hs.join(" "))?;
    }
    let json = json!({
        "vertices": vs,
        "edges": es.iter().map(|(n, hs)| json!({ "name": n, "halfedges": hs })).collect::<Vec<_>>(),
    });
    Ok(Report::new(text, json))
}

fn mutate(arg: &str, target: &MoveTarget) -> Result<Report> {
    let gg = input::graph(arg)?;
    let mut warnings = Vec::new();
    let moved = match (&target.sector, &target.subset) {
        (Some(s), _) => {
            let h = gg.graph().index_of(&s[0])?;
            let r: usize = s[1].parse().with_context(|| format!("sector length {:?} is not a number", s[1]))?;
            sector_move(&gg, Sector { h, r })?
        }
        (None, Some(list)) => subset_move(&gg, &input::subset(gg.graph(), list, &mut warnings)?)?,
        (None, None) => unreachable!("clap requires one target"),
    };
    Ok(Report::new(serialize(&moved), graph_json(&moved)).warn(warnings))
}

fn sectors(arg: &str, list: &str) -> Result<Report> {
    let gg = input::graph(arg)?;
    let g = gg.graph();
    let mut warnings = Vec::new();
    let subset = input::subset(g, list, &mut warnings)?;
    let dec = maximal_sectors(g, &subset)?;
    let mut text = String::new();
    let mut entries = Vec::new();
    for s in &dec.sectors {
        let run: Vec<String> = (0..=s.r).map(|i| g.name(g.sigma_pow(s.h, i as i64)).to_string()).collect();
        writeln!(text, "({}, {}): {}", g.name(s.h), s.r, run.join(" "))?;
        entries.push(json!({ "h": g.name(s.h), "r": s.r, "run": run }));
    }
    if !dec.saturated.is_empty() {
        writeln!(text, "saturated: {}", names(g, &dec.saturated).join(" "))?;
    }
    let json = json!({
        "subset": names(g, &subset),
        "sectors": entries,
        "saturated": names(g, &dec.saturated),
    });
    Ok(Report::new(text, json).warn(warnings))
}

fn degrees(arg: &str, list: &str) -> Result<Report> {
    let gg = input::graph(arg)?;
    let g = gg.graph();
    let mut warnings = Vec::new();
    let subset = input::subset(g, list, &mut warnings)?;
    let rep = sector_degrees(&gg, &subset)?;
    let mut text = String::new();
    for e in &rep.entries {
        writeln!(text, "α({}, {}) has degree {}", g.name(e.h), e.r, degree(&e.degree))?;
    }
    writeln!(text, "all zero: {}", if rep.all_zero { "yes" } else { "no" })?;
    let json = json!({
        "entries": rep.entries.iter().map(|e| json!({ "h": g.name(e.h), "r": e.r, "degree": e.degree })).collect::<Vec<_>>(),
        "saturated": names(g, &rep.saturated),
        "all_zero": rep.all_zero,
    });
    Ok(Report::new(text, json).warn(warnings))
}

fn transport(arg: &str, list: &str, target: &str) -> Result<Report> {
    let gg = input::graph(arg)?;
    let g = gg.graph();
    let mut warnings = Vec::new();
    let subset = input::subset(g, list, &mut warnings)?;
    let moved = subset_move(&gg, &subset)?;
    let target = input::grading(moved.graph(), target)?;
    let (text, json) = match grading_transport(g, &subset, &target)? {
        Some(delta) => {
            let mut text = String::from("delta:\n");
            for h in 0..g.len() {
                writeln!(text, "  {} = {}", g.name(h), degree(delta.degree(h)))?;
            }
            (text, json!({ "delta": grading_json(g, &delta) }))
        }
        None => ("absent: no integral grading moves onto the target".to_string(), json!({ "delta": null })),
    };
    Ok(Report::new(text, json).warn(warnings))
}

/// Paths are written right to left, as compositions.
fn path(graph: &BrauerGraph, travel: &[usize]) -> String {
    travel.iter().rev().map(|&h| graph.name(h)).collect::<Vec<_>>().join("·")
}

fn dot(q: &Quiver) -> String {
    let mut s = String::from("digraph quiver {\n");
    for v in q.vertices() {
        s.push_str(&format!("  {v:?};\n"));
    }
    for a in q.arrows() {
        s.push_str(&format!("  {:?} -> {:?} [label={:?}];\n", q.vertices()[a.source], q.vertices()[a.target], a.id));
    }
    s.push_str("}\n");
    s
}

fn algebra(arg: &str, relations: bool, dim: bool, emit_dot: bool) -> Result<Report> {
    let gg = input::graph(arg)?;
    let g = gg.graph();
    let q = quiver_of(g);
    let mut text = String::new();
    let mut json = json!({});
    if relations {
        let rel = relations_of(g);
        writeln!(text, "quiver: {} vertices, {} arrows", q.vertices().len(), q.arrows().len())?;
        for a in q.arrows() {
            writeln!(text, "  {}: {} -> {}", a.id, q.vertices()[a.source], q.vertices()[a.target])?;
        }
        text.push_str("type I:\n");
        for (x, y) in &rel.type_i {
            writeln!(text, "  {} = {}", path(g, x), path(g, y))?;
        }
        text.push_str("type II:\n");
        for p in &rel.type_ii {
            writeln!(text, "  {}", path(g, p))?;
        }
        text.push_str("type III:\n");
        for &(a, b) in &rel.type_iii {
            writeln!(text, "  {}", path(g, &[a, b]))?;
        }
        json["quiver"] = json!({
            "vertices": q.vertices(),
            "arrows": q.arrows().iter().map(|a| json!({
                "id": a.id,
                "source": q.vertices()[a.source],
                "target": q.vertices()[a.target],
            })).collect::<Vec<_>>(),
        });
        json["relations"] = json!({
            "type_i": rel.type_i.iter().map(|(x, y)| json!([names(g, x), names(g, y)])).collect::<Vec<_>>(),
            "type_ii": rel.type_ii.iter().map(|p| names(g, p)).collect::<Vec<_>>(),
            "type_iii": rel.type_iii.iter().map(|&(a, b)| names(g, &[a, b])).collect::<Vec<_>>(),
        });
    }
    if dim {
        let d = dimension_of(g);
        writeln!(text, "{d}")?;
        json["dimension"] = json!(d);
    }
    if emit_dot {
        let d = dot(&q);
        text.push_str(&d);
        json["dot"] = json!(d);
    }
    Ok(Report::new(text, json))
}

fn cuts(arg: &str, enumerate: bool, check: Option<&str>) -> Result<Report> {
    let gg = input::graph(arg)?;
    let g = gg.graph();
    if enumerate {
        let count = admissible_cut_count(g);
        let reports = analyze_cuts(g, Execution::Sequential)?;
        let mut text = format!("{count} admissible cuts\n");
        let mut rows = Vec::new();
        for r in &reports {
            let ones = degree_one(g, &r.cut);
            writeln!(
                text,
                "  {{{}}}  gldim {}  AG {}",
                ones.join(","),
                dimension_text(r.global_dimension.value),
                pairs_text(&r.ag.pairs)
            )?;
            rows.push(json!({
                "degree_one": ones,
                "global_dimension": dimension_json(r.global_dimension.value),
                "ag": r.ag.pairs,
            }));
        }
        return Ok(Report::new(text, json!({ "count": count_json(count), "cuts": rows })));
    }
    let arg = check.expect("clap requires a mode");
    let d = input::grading(g, arg)?;
    let candidate = GradedBrauerGraph::new(g.clone(), d.clone())?;
    let ok = is_admissible_cut(&candidate)?;
    let mut text = format!("admissible cut: {}\n", if ok { "yes" } else { "no" });
    let mut bad = Vec::new();
    for orbit in g.vertices() {
        let values: Vec<i64> = orbit.iter().map(|&h| d.degree(h)[0]).collect();
        let ones: Vec<usize> = orbit.iter().copied().filter(|&h| d.degree(h)[0] == 1).collect();
        if ones.len() != 1 || values.iter().any(|&x| x != 0 && x != 1) {
            writeln!(text, "  vertex ({}) has {} degree-one half-edges", names(g, &orbit).join(" "), ones.len())?;
            bad.push(json!({ "vertex": names(g, &orbit), "degree_one": names(g, &ones), "degrees": values }));
        }
    }
    Ok(Report::new(text, json!({ "admissible": ok, "degree_one": degree_one(g, &d), "violations": bad })))
}

fn gentle_check(arg: &str) -> Result<Report> {
    let p = input::presentation(arg)?;
    let diags: Vec<String> = check_gentle(&p).iter().map(ToString::to_string).collect();
    let text = if diags.is_empty() {
        "gentle".to_string()
    } else {
        let mut t = String::from("not gentle:\n");
        for d in &diags {
            writeln!(t, "  {d}")?;
        }
        t
    };
    Ok(Report::new(text, json!({ "gentle": diags.is_empty(), "problems": diags })))
}

fn gldim(arg: &str, cut: Option<&str>) -> Result<Report> {
    let p = input::gentle(arg, cut)?;
    let d = global_dimension(&p)?;
    let q = &p.quiver;
    let witness = match &d.witness {
        Witness::Cycle(c) => json!({ "cycle": c.iter().map(|&a| q.arrows()[a].id.clone()).collect::<Vec<_>>() }),
        Witness::Simple(v) => json!({ "simple": q.vertices()[*v] }),
        Witness::Empty => Value::Null,
    };
    Ok(Report::new(
        dimension_text(d.value),
        json!({ "global_dimension": dimension_json(d.value), "witness": witness }),
    ))
}

fn shift_report(q: &Quiver, found: Option<VertexShift>, extra: Value) -> Report {
    let (text, shift) = match found {
        Some(w) => {
            let mut t = String::from("shift equivalent:\n");
            for (v, s) in q.vertices().iter().zip(&w.shifts) {
                t.push_str(&format!("  {v}: {}\n", degree(s)));
            }
            (t, json!(w.shifts))
        }
        None => ("absent: no vertex shift relates the two gradings".to_string(), Value::Null),
    };
    let mut json = json!({ "vertices": q.vertices(), "shift": shift });
    if let (Value::Object(m), Value::Object(e)) = (&mut json, extra) {
        m.extend(e);
    }
    Report::new(text, json)
}

fn shift(arg: &str, first: &str, second: &str) -> Result<Report> {
    let gg = input::graph(arg)?;
    let g = gg.graph();
    let q = quiver_of(g);
    let d1 = arrow_grading_of(g, &input::grading(g, first)?)?;
    let d2 = arrow_grading_of(g, &input::grading(g, second)?)?;
    Ok(shift_report(&q, shift_equivalence(&q, &d1, &d2)?, json!({})))
}

fn transform(arg: &str, first: &str, second: &str, m: [[i64; 2]; 2], cuts: bool) -> Result<Report> {
    let gg = input::graph(arg)?;
    let g = gg.graph();
    let q = quiver_of(g);
    let (a, b) = (input::grading(g, first)?, input::grading(g, second)?);
    let (b1, b2) = if cuts { (trivext_bigrading(g, &a, &b)?, trivext_bigrading(g, &b, &a)?) } else { (a, b) };
    let (d1, d2) = (arrow_grading_of(g, &b1)?, arrow_grading_of(g, &b2)?);
    let found = transformed_equivalence(&q, &d1, &d2, m)?;
    let mut extra = json!({ "matrix": m });
    if cuts {
        extra["first"] = grading_json(g, &b1);
        extra["second"] = grading_json(g, &b2);
    }
    Ok(shift_report(&q, found, extra))
}

fn build_split(args: &SplitArgs) -> Result<(BrauerGraph, TriangularSplit)> {
    let gg = input::graph(&args.graph)?;
    let g = gg.graph().clone();
    let pairs = args.pairs.iter().map(|p| input::pair(&g, p)).collect::<Result<Vec<_>>>()?;
    let delta = args.delta.as_deref().map(|d| input::indices(&g, d)).transpose()?;
    let split = triangular_split(&g, &pairs, delta.as_deref())?;
    Ok((g, split))
}

fn side(q: &Quiver, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| q.vertices()[v].clone()).collect()
}

fn split(args: &SplitArgs) -> Result<Report> {
    let (g, s) = build_split(args)?;
    let q = quiver_of(&g);
    let connecting: Vec<[String; 2]> =
        s.connecting.iter().map(|&(a, b)| [g.name(a).to_string(), g.name(b).to_string()]).collect();
    let cuts = [degree_one(&g, &s.cuts.0), degree_one(&g, &s.cuts.1)];
    let mut text = String::new();
    writeln!(text, "plus: {}", side(&q, &s.plus).join(" "))?;
    writeln!(text, "minus: {}", side(&q, &s.minus).join(" "))?;
    for [a, b] in &connecting {
        writeln!(text, "connecting: {a} {b}")?;
    }
    let plural = if s.delta_choices == 1 { "" } else { "s" };
    writeln!(text, "delta: {} ({} choice{plural})", names(&g, &s.delta).join(" "), s.delta_choices)?;
    writeln!(text, "first cut: {{{}}}", cuts[0].join(","))?;
    writeln!(text, "second cut: {{{}}}", cuts[1].join(","))?;
    let json = json!({
        "plus": side(&q, &s.plus),
        "minus": side(&q, &s.minus),
        "connecting": connecting,
        "delta": names(&g, &s.delta),
        "delta_choices": count_json(s.delta_choices),
        "cuts": cuts,
    });
    Ok(Report::new(text, json))
}

fn tilting(args: &SplitArgs, graded: bool) -> Result<Report> {
    let (g, s) = build_split(args)?;
    let q = quiver_of(&g);
    let summary = if graded { graded_tilting_summary(&s) } else { tilting_summary(&s) };
    let rendered = summary.render();
    let mut text = format!("{rendered}\n");
    writeln!(text, "e⁺: {}", side(&q, &s.plus).join(" "))?;
    writeln!(text, "e⁻: {}", side(&q, &s.minus).join(" "))?;
    let summands: Vec<Value> = summary
        .summands
        .iter()
        .map(|x| {
            json!({
                "part": match x.part { Part::Plus => "plus", Part::MinusDual => "minus_dual" },
                "ar_power": x.ar_power,
                "shift": x.shift,
                "grade_shift": x.grade_shift,
            })
        })
        .collect();
    let mut json = json!({
        "summary": rendered,
        "graded": graded,
        "summands": summands,
        "plus": side(&q, &s.plus),
        "minus": side(&q, &s.minus),
    });
    if !graded {
        let modules = tilting_modules(&g, &s)?;
        writeln!(text, "modules: {}", modules.join(" ⊕ "))?;
        json["modules"] = json!(modules);
    }
    Ok(Report::new(text, json))
}

fn surface(arg: &str) -> Result<Report> {
    let gg = input::graph(arg)?;
    let comps: Vec<SurfaceInvariants> = match surface_invariants(gg.graph()) {
        Ok(s) => vec![s],
        Err(Error::Disconnected(parts)) => parts,
        Err(e) => bail!(e),
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    for s in &comps {
        writeln!(
            text,
            "vertices {} edges {} boundary {} euler {} genus {}",
            s.vertices, s.edges, s.boundary, s.euler, s.genus
        )?;
        rows.push(json!({
            "vertices": s.vertices,
            "edges": s.edges,
            "boundary": s.boundary,
            "euler": s.euler,
            "genus": s.genus,
        }));
    }
    Ok(Report::new(text, json!({ "components": rows })))
}
