//! Command surface: group-spec files, commands and reports.
//!
//! Every command produces one [`Report`]; the text output is a rendering of
//! the same data as the JSON output. Exit status is 0 when no check failed,
//! 1 when some check failed and 2 when the command could not run.

mod spec;

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::Serialize;

use crate::check::{merge_by_id, Check, Status};
use crate::classify::{splitting_report_with, SplittingReport};
use crate::error::{Error, Result};
use crate::group::{close_group, ReflectionGroup, DEFAULT_ORDER_CAP};
use crate::invariants::{
    default_expansion_degree, extract_degrees, g_delta_checks, molien_series,
    verify_degree_identities, verify_molien_coefficients,
};
use crate::roots::{build_root_system, verify_axioms, RootSystem};
use crate::stabilizers::{
    is_generated_by_contained_reflections, isotropy, sample_vectors, verify_fixed_locus_equality,
    verify_inertia_decomposition, Subgroup,
};

pub use spec::{parse_group_spec, GroupSource, GroupSpec, SpecOptions};

/// Pseudo-random vectors added to the roots when sampling isotropy groups.
pub const ISOTROPY_RANDOM_SAMPLES: usize = 50;
/// Minimum number of vectors whose isotropy groups are checked.
pub const ISOTROPY_MIN_SAMPLES: usize = 100;
/// Seed for the sampled vectors.
pub const ISOTROPY_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Enumerate,
    Roots,
    Stabilizers,
    Classify,
    Molien,
    VerifyAll,
}

impl Command {
    pub const ALL: [Command; 6] = [
        Command::Enumerate,
        Command::Roots,
        Command::Stabilizers,
        Command::Classify,
        Command::Molien,
        Command::VerifyAll,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Enumerate => "enumerate",
            Command::Roots => "roots",
            Command::Stabilizers => "stabilizers",
            Command::Classify => "classify",
            Command::Molien => "molien",
            Command::VerifyAll => "verify-all",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown command {s}")))
    }
}

/// Command-line overrides of the group-spec options.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub json: bool,
    pub cap: Option<usize>,
    pub expansion: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct GroupSummary {
    pub name: String,
    pub field: String,
    pub dim: usize,
    pub order: usize,
    pub reflections: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub roots: Option<usize>,
    /// Size of each root class `Δ_i`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root_classes: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct DegreesData {
    pub expansion_degree: usize,
    pub numerator: String,
    pub denominator: String,
    /// Leading series coefficients (at most 25).
    pub series: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErrorInfo {
    pub code: String,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

/// Everything a command found, in a fixed field order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSummary>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub splitting: Option<SplittingReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degrees: Option<DegreesData>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
    pub summary: Summary,
}

impl Report {
    fn new(command: Command) -> Self {
        Report {
            command: command.name().into(),
            group: None,
            checks: Vec::new(),
            splitting: None,
            degrees: None,
            error: None,
            summary: Summary::default(),
        }
    }

    /// 0 when nothing failed, 1 on failed checks, 2 on errors.
    pub fn exit_code(&self) -> i32 {
        if self.error.is_some() {
            2
        } else if self.summary.failed > 0 {
            1
        } else {
            0
        }
    }

    fn finish(mut self) -> Self {
        let count = |s| self.checks.iter().filter(|c| c.status == s).count();
        self.summary = Summary {
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            skipped: count(Status::Skipped),
        };
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Human-readable rendering of the report.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "refltk {}", self.command);
        if let Some(g) = &self.group {
            let _ = writeln!(out, "group {} over {}, dim {}", g.name, g.field, g.dim);
            let _ = write!(out, "order {}, reflections {}", g.order, g.reflections);
            if let (Some(r), Some(c)) = (g.roots, &g.root_classes) {
                let _ = write!(out, ", roots {r} in classes {c:?}");
            }
            out.push('\n');
        }
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            let _ = writeln!(
                out,
                "{tag} {:<34} {:>8} cases  {}",
                c.id, c.examined, c.anchor
            );
            for w in &c.witnesses {
                let _ = writeln!(out, "     {w}");
            }
        }
        if let Some(s) = &self.splitting {
            let _ = writeln!(
                out,
                "classes of maximal subgroups: r = {} ({} subgroups)",
                s.r, s.total_maximal
            );
            for (i, c) in s.classes.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "  G{}: rank {}, |G| = {}, |N| = {}, class size {}, action image order {} ({})",
                    i + 1,
                    c.rank,
                    c.order,
                    c.normalizer_order,
                    c.class_size,
                    c.action_image_order,
                    c.action_encoding
                );
                let _ = writeln!(out, "      roots {}", c.generating_roots.join(" "));
            }
        }
        if let Some(d) = &self.degrees {
            let _ = writeln!(out, "molien series ({}) / ({})", d.numerator, d.denominator);
            if let Some(deg) = &d.degrees {
                let _ = writeln!(out, "degrees {deg:?}");
            }
        }
        if let Some(e) = &self.error {
            let _ = writeln!(out, "error [{}]: {}", e.code, e.message);
        }
        let _ = writeln!(
            out,
            "summary: {} passed, {} failed, {} skipped",
            self.summary.passed, self.summary.failed, self.summary.skipped
        );
        out
    }
}

/// Runs `command` on `spec`; errors are folded into the report.
pub fn run(command: Command, spec: &GroupSpec, flags: &Flags) -> Report {
    let mut report = Report::new(command);
    if let Err(e) = execute(command, spec, flags, &mut report) {
        report.error = Some(ErrorInfo {
            code: e.code().into(),
            message: e.to_string(),
        });
    }
    report.finish()
}

fn execute(command: Command, spec: &GroupSpec, flags: &Flags, report: &mut Report) -> Result<()> {
    let (space, gens) = spec.build()?;
    let cap = flags
        .cap
        .or(spec.options.order_cap)
        .unwrap_or(DEFAULT_ORDER_CAP);
    let w = close_group(&space, &gens, cap)?;
    report.group = Some(GroupSummary {
        name: spec.name(),
        field: space.field().to_string(),
        dim: space.dim(),
        order: w.order(),
        reflections: w.reflections().len(),
        roots: None,
        root_classes: None,
    });
    use Command::*;
    let wants = |c: Command| command == c || command == VerifyAll;
    if wants(Enumerate) {
        report.checks.extend(group_checks(&w));
    }
    if command == Enumerate {
        return Ok(());
    }
    let delta = build_root_system(&w);
    if let Some(g) = report.group.as_mut() {
        g.roots = Some(delta.len());
        g.root_classes = Some(delta.classes().iter().map(Vec::len).collect());
    }
    if wants(Roots) {
        report.checks.extend(verify_axioms(&delta, &w));
    }
    if wants(Stabilizers) {
        report.checks.extend(stabilizer_checks(&w, &delta)?);
    }
    if wants(Classify) {
        let split = splitting_report_with(&w, &delta);
        report.checks.extend(split.checks.iter().cloned());
        report.splitting = Some(split);
    }
    if wants(Molien) {
        let expansion = flags
            .expansion
            .or(spec.options.expansion_degree)
            .unwrap_or_else(|| default_expansion_degree(&w));
        invariant_checks(&w, &delta, expansion, report)?;
    }
    Ok(())
}

/// Closure sanity checks on an enumerated group.
pub fn group_checks(w: &ReflectionGroup) -> Vec<Check> {
    let mut closure = Check::new(
        "group.closure",
        "elements contain the identity and the generators and are closed under inverses",
    );
    closure.record(w.element(w.identity()).is_identity(), || {
        "identity missing".into()
    });
    for (k, g) in w.generators().iter().enumerate() {
        closure.record(w.index_of(g.element.matrix()).is_some(), || {
            format!("generator {k} missing")
        });
    }
    for i in 0..w.order() {
        closure.record(w.multiply(i, w.inverse(i)) == w.identity(), || {
            format!("{:?} has no inverse", w.element(i))
        });
    }

    let mut orth = Check::new(
        "group.orthogonal",
        "every element preserves the bilinear form",
    );
    for (i, g) in w.elements().iter().enumerate() {
        orth.record(w.space().is_orthogonal(g.matrix()).unwrap_or(false), || {
            format!("element {i}: {g:?}")
        });
    }

    let mut generated = Check::new(
        "group.reflection-generated",
        "the reflections of the group generate it",
    );
    let h = Subgroup::generated_by(w, &w.reflection_elements());
    generated.record(h.order() == w.order(), || {
        format!(
            "reflections generate {} of {} elements",
            h.order(),
            w.order()
        )
    });

    let mut stable = Check::new(
        "group.reflections-conjugation-stable",
        "conjugation by each generator permutes the reflections",
    );
    for &g in w.generator_indices() {
        for r in w.reflections() {
            let c = w.conjugate(g, r.element);
            stable.record(w.reflection_of_element(c).is_some(), || {
                format!(
                    "conjugate of reflection along {} is not a reflection",
                    r.root
                )
            });
        }
    }

    let mut lagrange = Check::new(
        "group.lagrange",
        "every element order divides the group order",
    );
    for i in 0..w.order() {
        let k = w.element_order(i);
        lagrange.record(w.order().is_multiple_of(k), || {
            format!("element {i} has order {k}")
        });
    }
    vec![closure, orth, generated, stable, lagrange]
}

/// Inertia decomposition at every root, fixed-locus equality, and
/// reflection generation of sampled isotropy groups.
pub fn stabilizer_checks(w: &ReflectionGroup, delta: &RootSystem) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for r in delta.roots() {
        merge_by_id(&mut checks, verify_inertia_decomposition(w, r)?);
    }
    checks.extend(verify_fixed_locus_equality(w, delta));
    let mut iso = Check::new(
        "isotropy.reflection-generated",
        "the isotropy group of each sampled vector is generated by the reflections it contains",
    );
    for v in sample_vectors(
        delta,
        ISOTROPY_RANDOM_SAMPLES,
        ISOTROPY_MIN_SAMPLES,
        ISOTROPY_SEED,
    ) {
        let h = isotropy(w, &v)?;
        iso.record(is_generated_by_contained_reflections(&h), || {
            format!("v = {v}: isotropy group of order {}", h.order())
        });
    }
    checks.push(iso);
    Ok(checks)
}

fn invariant_checks(
    w: &ReflectionGroup,
    delta: &RootSystem,
    expansion: usize,
    report: &mut Report,
) -> Result<()> {
    let data = molien_series(w, expansion)?;
    report.checks.push(verify_molien_coefficients(&data));
    let mut extracted = Check::new(
        "molien.degrees",
        "the Molien series factors as 1/∏(1 − t^d) over the extracted degrees",
    );
    let degrees = match extract_degrees(&data, w.dim()) {
        Ok(d) => {
            extracted.record(true, String::new);
            Some(d)
        }
        Err(e @ Error::NoDegreeFactorization(_)) => {
            extracted.record(false, || e.to_string());
            None
        }
        Err(e) => return Err(e),
    };
    report.checks.push(extracted);
    if let Some(d) = &degrees {
        report.checks.extend(verify_degree_identities(w, d));
    }
    report.checks.extend(g_delta_checks(w, delta));
    report.degrees = Some(DegreesData {
        expansion_degree: data.expansion_degree(),
        numerator: data.numerator.to_string(),
        denominator: data.denominator.to_string(),
        series: data
            .coefficients
            .iter()
            .take(25)
            .map(ToString::to_string)
            .collect(),
        degrees,
    });
    Ok(())
}
