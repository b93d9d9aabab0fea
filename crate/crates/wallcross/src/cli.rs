//! File formats and command implementations behind the `wallcross` binary.
//!
//! Two JSON input formats are understood:
//!
//! * a **manifold file** with the topological data of a four-manifold
//!   (`b1`, `b2_plus`, `chi`, `tau`, `c1L_squared`, the strict upper
//!   triangle of the triple-product matrix, and optional named curves);
//! * a **localization file** with a ring presentation, fixed components
//!   (orientation sign plus weighted line summands), optional degree-one
//!   insertions, and an evaluation mode `{"star": n}` or `{"star_star": l}`.
//!
//! Rationals travel as strings `"p"` or `"p/q"`; elements as lists of
//! `[[["label", exponent], …], "p/q"]` terms; indices are 1-based.  Reports
//! are serialized with a fixed field order and ordered maps, so a given
//! input always produces byte-identical output.
//!
//! Errors are classified for the process exit code: input that fails to
//! parse or validate (exit 1), structurally sound input whose hypotheses
//! the formulas reject — `b2_plus ≠ 1`, odd `b1`, a non-positive index
//! rank, non-unit weights in star modes (exit 2) — and disagreement
//! between evaluation routes that must coincide (exit 3).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{
    Algebra, AlgebraSpec, Element, ElementEncoding, GeneratorSpec, Parity, VolumeSpec,
};
use crate::equivariant::{
    localize_star, localize_star_star, EquivariantError, FixedComponent, LineSummand,
    LocalizationValue, Sign,
};
use crate::rational::{format_rational, parse_rational};
use crate::seiberg_witten::{
    expected_dimension, wall_crossing_general, wall_crossing_via_localization, CurveClass,
    ManifoldData, SwError, WallCrossingResult,
};

/// Command-level error, classified by exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    /// Malformed or invalid input (exit 1).
    #[error("{0}")]
    Validation(String),
    /// Input outside the hypotheses of the requested formula (exit 2).
    #[error("{0}")]
    Inapplicable(String),
    /// Evaluation routes that must agree did not (exit 3).
    #[error("routes disagree: closed_form gives {closed}, localization gives {localized}")]
    RouteDisagreement { closed: String, localized: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Inapplicable(_) => 2,
            CliError::RouteDisagreement { .. } => 3,
        }
    }
}

fn classify_sw(e: SwError) -> CliError {
    match e {
        SwError::B2PlusNotOne { .. }
        | SwError::OddB1 { .. }
        | SwError::RankParity { .. }
        | SwError::RankNotPositive { .. } => CliError::Inapplicable(e.to_string()),
        SwError::Equivariant(eq) => classify_equivariant(eq),
        other => CliError::Validation(other.to_string()),
    }
}

fn classify_equivariant(e: EquivariantError) -> CliError {
    match e {
        EquivariantError::NonUnitWeight { .. } => CliError::Inapplicable(e.to_string()),
        other => CliError::Validation(other.to_string()),
    }
}

// ---------------------------------------------------------------------------
// Manifold files

/// On-disk form of the topological data, with the strict upper triangle of
/// the triple-product matrix as 1-based `[i, j, "p/q"]` entries and named
/// integer curve classes.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldFile {
    pub b1: usize,
    pub b2_plus: u32,
    pub chi: i64,
    pub tau: i64,
    #[serde(rename = "c1L_squared")]
    pub c1l_squared: i64,
    #[serde(default)]
    pub triple_products: Vec<(usize, usize, String)>,
    #[serde(default)]
    pub curves: BTreeMap<String, Vec<i64>>,
}

/// A parsed manifold file: validated data plus the named curves.
#[derive(Debug, Clone)]
pub struct ManifoldInput {
    pub data: ManifoldData,
    pub curves: BTreeMap<String, CurveClass>,
}

/// Parses and validates a manifold file from JSON text.
pub fn parse_manifold(json: &str) -> Result<ManifoldInput, CliError> {
    let file: ManifoldFile = serde_json::from_str(json)
        .map_err(|e| CliError::Validation(format!("manifold file: {e}")))?;
    validate_manifold(file)
}

fn validate_manifold(file: ManifoldFile) -> Result<ManifoldInput, CliError> {
    let b1 = file.b1;
    let mut seen = std::collections::BTreeSet::new();
    let mut entries = Vec::with_capacity(file.triple_products.len());
    for (i, j, value) in &file.triple_products {
        if !(1 <= *i && i < j && *j <= b1) {
            return Err(CliError::Validation(format!(
                "triple_products entry ({i},{j}): indices must satisfy 1 <= i < j <= b1 = {b1}"
            )));
        }
        if !seen.insert((*i, *j)) {
            return Err(CliError::Validation(format!(
                "duplicate triple_products entry ({i},{j})"
            )));
        }
        let q = parse_rational(value)
            .map_err(|e| CliError::Validation(format!("triple_products ({i},{j}): {e}")))?;
        entries.push((*i, *j, q));
    }
    let data = ManifoldData::from_upper_entries(
        b1,
        file.b2_plus,
        file.chi,
        file.tau,
        file.c1l_squared,
        &entries,
    )
    .map_err(classify_sw)?;
    let mut curves = BTreeMap::new();
    for (name, coords) in file.curves {
        if coords.len() != b1 {
            return Err(CliError::Validation(format!(
                "curve {name:?} has {} coordinates, expected b1 = {b1}",
                coords.len()
            )));
        }
        curves.insert(name, CurveClass::new(coords));
    }
    Ok(ManifoldInput { data, curves })
}

// ---------------------------------------------------------------------------
// dim

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimFlags {
    pub b2_plus_is_one: bool,
    pub b1_even: bool,
    pub d_nonnegative: bool,
    pub rank_positive: bool,
}

/// Report of the `dim` command: the expected dimension, the index rank
/// when defined, and the applicability of the crossing formulas.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimReport {
    pub d: i64,
    pub r: Option<i64>,
    pub flags: DimFlags,
}

/// Expected dimension, index rank, and applicability flags.
pub fn run_dim(input: &ManifoldInput) -> Result<DimReport, CliError> {
    let m = &input.data;
    let d = expected_dimension(m).map_err(classify_sw)?;
    let numerator = d + 2 - m.b1() as i64;
    let r = (numerator.rem_euclid(2) == 0).then_some(numerator / 2);
    Ok(DimReport {
        d,
        r,
        flags: DimFlags {
            b2_plus_is_one: m.b2_plus() == 1,
            b1_even: m.b1() % 2 == 0,
            d_nonnegative: d >= 0,
            rank_positive: r.is_some_and(|r| r >= 1),
        },
    })
}

// ---------------------------------------------------------------------------
// crossing

/// Which evaluation route(s) a crossing request runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    ClosedForm,
    Localization,
    Both,
}

impl Route {
    pub fn parse(s: &str) -> Option<Route> {
        match s {
            "closed_form" => Some(Route::ClosedForm),
            "localization" => Some(Route::Localization),
            "both" => Some(Route::Both),
            _ => None,
        }
    }
}

/// Parses `+1`, `1`, or `-1` as an overall sign.
pub fn parse_sign(s: &str) -> Option<Sign> {
    match s {
        "+1" | "1" => Some(Sign::Plus),
        "-1" => Some(Sign::Minus),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignConventionReport {
    pub crossing_direction: String,
    pub global_sign: i8,
}

/// Report of the `crossing` command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingReport {
    pub d: i64,
    pub r: Option<i64>,
    pub k: usize,
    pub value: String,
    pub sign_convention: SignConventionReport,
    pub routes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
    pub gate: Option<String>,
    pub invariant_zero_on_both_sides: bool,
}

fn crossing_report(result: &WallCrossingResult, routes: Vec<String>, agreement: Option<bool>) -> CrossingReport {
    CrossingReport {
        d: result.d,
        r: result.r,
        k: result.k,
        value: format_rational(&result.value),
        sign_convention: SignConventionReport {
            crossing_direction: result.sign_convention.crossing_direction.to_owned(),
            global_sign: result.sign_convention.global_sign.as_i8(),
        },
        routes,
        agreement,
        gate: result.gate.map(|g| g.code().to_owned()),
        invariant_zero_on_both_sides: result.invariant_zero_on_both_sides,
    }
}

/// Wall-crossing value for the named curves (in the order given), under a
/// sign convention and via the requested route(s).  With `Route::Both` the
/// two values are compared and any disagreement is an error.
pub fn run_crossing(
    input: &ManifoldInput,
    curve_names: &[String],
    sign: Sign,
    route: Route,
) -> Result<CrossingReport, CliError> {
    let mut curves = Vec::with_capacity(curve_names.len());
    for name in curve_names {
        let curve = input.curves.get(name).ok_or_else(|| {
            CliError::Validation(format!("unknown curve name {name:?}"))
        })?;
        curves.push(curve.clone());
    }
    let m = &input.data;
    match route {
        Route::ClosedForm => {
            let result = wall_crossing_general(m, &curves, sign).map_err(classify_sw)?;
            Ok(crossing_report(&result, vec!["closed_form".into()], None))
        }
        Route::Localization => {
            let result =
                wall_crossing_via_localization(m, &curves, sign).map_err(classify_sw)?;
            Ok(crossing_report(&result, vec!["localization".into()], None))
        }
        Route::Both => {
            let closed = wall_crossing_general(m, &curves, sign).map_err(classify_sw)?;
            let localized =
                wall_crossing_via_localization(m, &curves, sign).map_err(classify_sw)?;
            if closed.value != localized.value {
                return Err(CliError::RouteDisagreement {
                    closed: format_rational(&closed.value),
                    localized: format_rational(&localized.value),
                });
            }
            Ok(crossing_report(
                &closed,
                vec!["closed_form".into(), "localization".into()],
                Some(true),
            ))
        }
    }
}

// ---------------------------------------------------------------------------
// localization files

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LocalizationFile {
    pub algebra: AlgebraFile,
    pub components: Vec<ComponentFile>,
    #[serde(default)]
    pub betas: Vec<ElementEncoding>,
    pub mode: ModeFile,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub generators: Vec<GeneratorFile>,
    #[serde(default)]
    pub volume: Option<VolumeFile>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorFile {
    pub label: String,
    pub degree: u32,
    /// Defaults to the parity of the degree.
    #[serde(default)]
    pub parity: Option<Parity>,
    /// A positive order, the string `"none"`, or absent — absent means
    /// order two for odd generators and no truncation for even ones.
    #[serde(default)]
    pub nilpotency: Option<NilpotencyFile>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum NilpotencyFile {
    Order(u32),
    Keyword(String),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VolumeFile {
    pub monomial: Vec<(String, u32)>,
    #[serde(default = "one_literal")]
    pub normalization: String,
}

fn one_literal() -> String {
    "1".to_owned()
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentFile {
    #[serde(default = "plus_one")]
    pub orientation_sign: i64,
    pub normal: Vec<SummandFile>,
}

fn plus_one() -> i64 {
    1
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SummandFile {
    pub weight: i64,
    pub c1: ElementEncoding,
}

/// Evaluation mode: `{"star": n}` integrates `u^{n+1}/ε` with alternating
/// sign; `{"star_star": l}` integrates `u^{l+1}·β₁⋯β_k/ε` without one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
pub enum ModeFile {
    #[serde(rename = "star")]
    Star(u32),
    #[serde(rename = "star_star")]
    StarStar(u32),
}

/// A parsed localization file, ready to evaluate.
#[derive(Debug, Clone)]
pub struct LocalizationInput {
    pub algebra: Algebra,
    pub components: Vec<FixedComponent>,
    pub betas: Vec<Element>,
    pub mode: ModeFile,
}

/// Parses and validates a localization file from JSON text.
pub fn parse_localization(json: &str) -> Result<LocalizationInput, CliError> {
    let file: LocalizationFile = serde_json::from_str(json)
        .map_err(|e| CliError::Validation(format!("localization file: {e}")))?;
    validate_localization(file)
}

fn validate_localization(file: LocalizationFile) -> Result<LocalizationInput, CliError> {
    let mut generators = Vec::with_capacity(file.algebra.generators.len());
    for g in &file.algebra.generators {
        let parity = g.parity.unwrap_or(Parity::of_degree(g.degree));
        let nilpotency = match &g.nilpotency {
            None => match parity {
                Parity::Odd => Some(2),
                Parity::Even => None,
            },
            Some(NilpotencyFile::Order(k)) => Some(*k),
            Some(NilpotencyFile::Keyword(word)) if word == "none" => None,
            Some(NilpotencyFile::Keyword(word)) => {
                return Err(CliError::Validation(format!(
                    "generator {:?}: nilpotency must be a positive order or \"none\", got {word:?}",
                    g.label
                )))
            }
        };
        generators.push(GeneratorSpec {
            label: g.label.clone(),
            degree: g.degree,
            parity,
            nilpotency,
        });
    }
    let mut spec = AlgebraSpec::new(generators);
    if let Some(v) = &file.algebra.volume {
        let normalization = parse_rational(&v.normalization)
            .map_err(|e| CliError::Validation(format!("volume normalization: {e}")))?;
        spec.volume = Some(VolumeSpec {
            monomial: v.monomial.clone(),
            normalization,
        });
    }
    let algebra =
        Algebra::new(spec).map_err(|e| CliError::Validation(format!("algebra: {e}")))?;

    let mut components = Vec::with_capacity(file.components.len());
    for (idx, c) in file.components.iter().enumerate() {
        let sign = Sign::from_int(c.orientation_sign).ok_or_else(|| {
            CliError::Validation(format!(
                "component {idx}: orientation_sign must be 1 or -1, got {}",
                c.orientation_sign
            ))
        })?;
        let mut summands = Vec::with_capacity(c.normal.len());
        for s in &c.normal {
            let c1 = algebra
                .element_from_encoding(&s.c1)
                .map_err(|e| CliError::Validation(format!("component {idx}: c1: {e}")))?;
            summands.push(LineSummand::new(s.weight, c1));
        }
        let component = FixedComponent::new(algebra.clone(), summands, sign)
            .map_err(|e| CliError::Validation(format!("component {idx}: {e}")))?;
        components.push(component);
    }

    let mut betas = Vec::with_capacity(file.betas.len());
    for (idx, enc) in file.betas.iter().enumerate() {
        let beta = algebra
            .element_from_encoding(enc)
            .map_err(|e| CliError::Validation(format!("beta {idx}: {e}")))?;
        betas.push(beta);
    }
    if !betas.is_empty() && matches!(file.mode, ModeFile::Star(_)) {
        return Err(CliError::Validation(
            "betas are only used by star_star mode".into(),
        ));
    }
    Ok(LocalizationInput {
        algebra,
        components,
        betas,
        mode: file.mode,
    })
}

/// Report of the `localize` command: the value at `u⁰` and every nonzero
/// coefficient left at other powers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalizeReport {
    pub value: String,
    pub residuals: BTreeMap<i64, String>,
}

/// Evaluates a localization file.
pub fn run_localize(input: &LocalizationInput) -> Result<LocalizeReport, CliError> {
    let outcome: LocalizationValue = match input.mode {
        ModeFile::Star(n) => {
            localize_star(&input.components, n).map_err(classify_equivariant)?
        }
        ModeFile::StarStar(l) => localize_star_star(&input.components, &input.betas, l)
            .map_err(classify_equivariant)?,
    };
    Ok(LocalizeReport {
        value: format_rational(&outcome.value),
        residuals: outcome
            .residuals
            .iter()
            .map(|(p, v)| (*p, format_rational(v)))
            .collect(),
    })
}

/// Serializes a report as pretty JSON with a fixed field order — the same
/// input always produces the same bytes.
pub fn to_stable_json<T: Serialize>(report: &T) -> String {
    serde_json::to_string_pretty(report).expect("reports are valid JSON data")
}
