//! Bundled fixtures and the worked examples built on them.

use std::fmt::Write;

use anyhow::{bail, Context, Result};
use clap::Parser;
use serde_json::{json, Value};

use crate::cli::Cli;
use crate::commands;
use crate::report::{pretty, Report};

const FIXTURES: &[(&str, &str)] = &[
    ("gamma-star.bg", include_str!("../fixtures/gamma-star.bg")),
    ("gamma-moved.bg", include_str!("../fixtures/gamma-moved.bg")),
    ("a3-line.bg", include_str!("../fixtures/a3-line.bg")),
    ("triangle.bg", include_str!("../fixtures/triangle.bg")),
    ("triangular.bg", include_str!("../fixtures/triangular.bg")),
    ("a3-star.qa", include_str!("../fixtures/a3-star.qa")),
    ("a3-rel.qa", include_str!("../fixtures/a3-rel.qa")),
    ("triangle-hereditary.qa", include_str!("../fixtures/triangle-hereditary.qa")),
    ("three-cycle.qa", include_str!("../fixtures/three-cycle.qa")),
];

pub fn fixture(name: &str) -> Option<&'static str> {
    FIXTURES.iter().find(|f| f.0 == name).map(|f| f.1)
}

/// Where a pinned value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    /// Stated in the worked example itself.
    Worked,
    /// Computed by this tool and pinned as a regression value.
    Computed,
}

impl Origin {
    fn label(self) -> &'static str {
        match self {
            Origin::Worked => "worked",
            Origin::Computed => "computed",
        }
    }
}

pub struct Example {
    pub name: &'static str,
    pub description: &'static str,
    pub steps: &'static [(Origin, &'static [&'static str])],
    pub expected: &'static str,
}

use Origin::{Computed, Worked};

macro_rules! expected {
    ($name:literal) => {
        include_str!(concat!("../fixtures/expected/", $name, ".json"))
    };
}

pub const EXAMPLES: &[Example] = &[
    Example {
        name: "ex-brauer-graph",
        description: "The running graph: its vertices, grading and surface",
        steps: &[
            (Worked, &["vertices", "@gamma-star.bg"]),
            (Worked, &["validate", "@gamma-star.bg"]),
            (Computed, &["surface", "@gamma-star.bg"]),
        ],
        expected: expected!("ex-brauer-graph"),
    },
    Example {
        name: "ex-quiver-relations",
        description: "Quiver, relations and dimension of the Brauer graph algebra",
        steps: &[
            (Worked, &["algebra", "@gamma-star.bg", "--relations"]),
            (Computed, &["algebra", "@gamma-star.bg", "--dim"]),
        ],
        expected: expected!("ex-quiver-relations"),
    },
    Example {
        name: "ex-graded-kauer",
        description: "Graded Kauer move along {1+,1-,4-,4+}; the two cut algebras are derived equivalent",
        steps: &[
            (Worked, &["mutate", "@gamma-star.bg", "--subset", "1+,1-,4-,4+"]),
            (Computed, &["sectors", "@gamma-star.bg", "--subset", "1+,1-,4-,4+"]),
            (Computed, &["shift-equiv", "@gamma-moved.bg", "@gamma-moved.bg", "1+,2+,3+,4+"]),
            (Computed, &["ag", "@gamma-star.bg"]),
            (Computed, &["ag", "@gamma-moved.bg", "--cut", "1+,2+,3+,4+"]),
        ],
        expected: expected!("ex-graded-kauer"),
    },
    Example {
        name: "ex-double-graded-kauer",
        description: "Transporting a cut back through the move; the AG invariants differ",
        steps: &[
            (Worked, &["transport", "@gamma-star.bg", "--subset", "1+,1-,4-,4+", "--target", "2+,1+,1-,4+"]),
            (Computed, &["ag", "@gamma-star.bg"]),
            (Computed, &["ag", "@gamma-moved.bg", "--cut", "2+,1+,1-,4+"]),
        ],
        expected: expected!("ex-double-graded-kauer"),
    },
    Example {
        name: "ex-non-gradue-bga",
        description: "Two cuts of the running graph related by a vertex shift",
        steps: &[
            (Worked, &["cut-algebra", "@gamma-star.bg", "--cut", "2+,2-"]),
            (Worked, &["shift-equiv", "@gamma-star.bg", "2+,2-", "1+,1-"]),
            (Computed, &["gldim", "@gamma-star.bg", "--cut", "2+,2-"]),
            (Computed, &["gldim", "@gamma-star.bg", "--cut", "1+,1-"]),
            (Computed, &["ag", "@gamma-star.bg", "--cut", "2+,2-"]),
            (Computed, &["ag", "@gamma-star.bg", "--cut", "1+,1-"]),
        ],
        expected: expected!("ex-non-gradue-bga"),
    },
    Example {
        name: "ex-gradue-bga",
        description: "No vertex shift, but the bigradings match under (x, y) -> (x + y, -y)",
        steps: &[
            (Computed, &["shift-equiv", "@gamma-star.bg", "2+,2-", "2-,1+"]),
            (Worked, &["transform-equiv", "@gamma-star.bg", "2+,2-", "2-,1+", "--cuts"]),
            (Computed, &["gldim", "@gamma-star.bg", "--cut", "2-,1+"]),
            (Computed, &["ag", "@gamma-star.bg", "--cut", "2+,2-"]),
            (Computed, &["ag", "@gamma-star.bg", "--cut", "2-,1+"]),
        ],
        expected: expected!("ex-gradue-bga"),
    },
    Example {
        name: "ex-cor-non-gradue-projectif",
        description: "A3 without relations and A3 with a relation share a trivial extension",
        steps: &[
            (Worked, &["trivext", "@a3-star.qa"]),
            (Worked, &["shift-equiv", "@a3-line.bg", "1+,1-,3+,3-", "2+,3+,1-,3-"]),
            (Computed, &["cut-algebra", "@a3-line.bg", "--cut", "2+,3+,1-,3-"]),
            (Computed, &["gldim", "@a3-rel.qa"]),
        ],
        expected: expected!("ex-cor-non-gradue-projectif"),
    },
    Example {
        name: "ex-cor-gradue-iso",
        description: "The hereditary triangle and the 3-cycle: bigradings matched by the default transform",
        steps: &[
            (Computed, &["trivext", "@triangle-hereditary.qa"]),
            (Worked, &["transform-equiv", "@triangle.bg", "2+,2-,1-", "2+,3-,1-", "--cuts"]),
            (Computed, &["gldim", "@three-cycle.qa"]),
        ],
        expected: expected!("ex-cor-gradue-iso"),
    },
    Example {
        name: "ex-triangular-matrix-algebra",
        description: "Splitting along (3+, 2-) and the resulting tilting object",
        steps: &[
            (Worked, &["split", "@triangular.bg", "--pair", "3+,2-", "--delta", "2+"]),
            (Worked, &["tilting", "@triangular.bg", "--pair", "3+,2-", "--delta", "2+"]),
            (Computed, &["tilting", "@triangular.bg", "--pair", "3+,2-", "--delta", "2+", "--graded"]),
        ],
        expected: expected!("ex-triangular-matrix-algebra"),
    },
];

pub fn find(name: &str) -> Option<&'static Example> {
    EXAMPLES.iter().find(|e| e.name == name)
}

fn command_line(args: &[&str]) -> String {
    format!("brauer-kit {}", args.join(" "))
}

/// Run every step and collect both renderings.
pub fn execute(ex: &Example) -> Result<Report> {
    let mut text = String::new();
    let mut steps = Vec::new();
    let mut warnings = Vec::new();
    for (origin, args) in ex.steps {
        let cli = Cli::try_parse_from(std::iter::once("brauer-kit").chain(args.iter().copied()))
            .with_context(|| format!("bad step in example {}", ex.name))?;
        let r = commands::run(&cli.command).with_context(|| command_line(args))?;
        writeln!(text, "$ {}", command_line(args))?;
        text.push_str(&r.text);
        warnings.extend(r.warnings);
        steps.push(json!({ "args": args, "origin": origin.label(), "output": r.json }));
    }
    Ok(Report::new(text, json!({ "example": ex.name, "steps": steps })).warn(warnings))
}

pub fn command(name: &str, run: bool) -> Result<Report> {
    if name == "list" {
        let mut text = String::new();
        for e in EXAMPLES {
            writeln!(text, "{:<30} {}", e.name, e.description)?;
        }
        let rows: Vec<Value> =
            EXAMPLES.iter().map(|e| json!({ "name": e.name, "description": e.description })).collect();
        return Ok(Report::new(text, json!({ "examples": rows })));
    }
    let Some(ex) = find(name) else {
        bail!("unknown example {name:?}; `example list` shows the registry");
    };
    if !run {
        let mut text = format!("{}\n", ex.description);
        for (origin, args) in ex.steps {
            writeln!(text, "  [{}] {}", origin.label(), command_line(args))?;
        }
        let steps: Vec<Value> =
            ex.steps.iter().map(|(o, a)| json!({ "args": a, "origin": o.label() })).collect();
        return Ok(Report::new(text, json!({ "name": ex.name, "description": ex.description, "steps": steps })));
    }
    let mut report = execute(ex)?;
    let got = pretty(&report.json);
    if got != ex.expected {
        let line = got.lines().zip(ex.expected.lines()).position(|(a, b)| a != b).map_or_else(
            || got.lines().count().min(ex.expected.lines().count()) + 1,
            |i| i + 1,
        );
        report.failure = Some(format!("example {name} no longer matches its pinned output (first difference at line {line})"));
    } else {
        report.text.push_str("matches the pinned output\n");
    }
    Ok(report)
}
