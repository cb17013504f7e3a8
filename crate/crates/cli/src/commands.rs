//! Subcommand implementations. Each returns the rendered output; writing it
//! out is left to `main`.

use std::f64::consts::PI;
use std::fmt::Write as _;

use ovalkit::equidistants::{
    cusp_family_angles, cusp_parameters, make_cusp_family, trace_equidistant, EquidistantReport,
    EquidistantSupport,
};
use ovalkit::geometry::sample_curve_with;
use ovalkit::inequalities::{
    barbier_check, constant_width_area_identity, improved_isoperimetric_check, is_constant_width,
    CurveMetrics,
};
use ovalkit::stability::{phi, stability_check, wigner_type_curve};
use ovalkit::svg::{StrokeStyle, SvgFigure};
use ovalkit::sweep::{lambda_grid, sweep, SweepRow};
use ovalkit::{CurveSpec, Execution, FourierSupport};
use serde::Serialize;

use crate::error::CliError;
use crate::format::{describe_support, sig15, Quantity};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Svg,
}

/// Options shared by every subcommand.
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    /// Sample / quadrature panel count.
    pub samples: usize,
    /// Relative tolerance for constant-width detection.
    pub tol: f64,
}

impl Settings {
    /// Simpson needs an even panel count of at least 8.
    fn panels(&self) -> usize {
        let n = self.samples.max(8);
        n + n % 2
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialises");
    s.push('\n');
    s
}

fn unsupported(command: &str, format: Format) -> CliError {
    CliError::Usage(format!("{command} does not support --format {format:?}").to_lowercase())
}

// ---------------------------------------------------------------- analyze

#[derive(Serialize)]
struct AnalyzeMetrics {
    length: Quantity,
    area: Quantity,
    psi: Quantity,
    wigner_area: Quantity,
    classic_deficit: Quantity,
    improved_deficit: Quantity,
    phi: Quantity,
}

#[derive(Serialize)]
struct BarbierJson {
    width: f64,
    length: Quantity,
    residual: f64,
}

#[derive(Serialize)]
struct InequalityJson {
    holds: bool,
    equality: bool,
    margin: Quantity,
}

#[derive(Serialize)]
struct AnalyzeReport {
    schema: u32,
    command: &'static str,
    curve: CurveSpec,
    metrics: AnalyzeMetrics,
    constant_width: bool,
    barbier: Option<BarbierJson>,
    area_identity_residual: Option<f64>,
    improved_inequality: InequalityJson,
}

pub fn analyze(
    support: &FourierSupport,
    settings: &Settings,
    format: Format,
) -> Result<String, CliError> {
    let m = CurveMetrics::compute(support);
    let check = improved_isoperimetric_check(&m);
    let constant_width = is_constant_width(support, settings.tol);
    let (barbier, identity) = if constant_width {
        (
            barbier_check(support).ok(),
            constant_width_area_identity(support).ok(),
        )
    } else {
        (None, None)
    };
    let report = AnalyzeReport {
        schema: SCHEMA,
        command: "analyze",
        curve: support.to_spec(),
        metrics: AnalyzeMetrics {
            length: Quantity::new(m.length, 1),
            area: Quantity::new(m.area, 1),
            psi: Quantity::new(m.psi, 1),
            wigner_area: Quantity::new(m.wigner_area, 1),
            classic_deficit: Quantity::new(m.classic_deficit, 2),
            improved_deficit: Quantity::new(m.improved_deficit, 2),
            phi: Quantity::new(phi(support), 2),
        },
        constant_width,
        barbier: barbier.map(|b| BarbierJson {
            width: b.width,
            length: Quantity::new(b.length, 1),
            residual: b.residual,
        }),
        area_identity_residual: identity,
        improved_inequality: InequalityJson {
            holds: check.holds,
            equality: check.equality,
            margin: Quantity::new(check.margin, 2),
        },
    };
    match format {
        Format::Json => Ok(to_json(&report)),
        Format::Text => {
            let mut out = String::new();
            let r = &report.metrics;
            let _ = writeln!(out, "curve                  {}", describe_support(support));
            let _ = writeln!(out, "length L               {}", r.length.text());
            let _ = writeln!(out, "area A                 {}", r.area.text());
            let _ = writeln!(out, "psi                    {}", r.psi.text());
            let _ = writeln!(out, "wigner caustic area    {}", r.wigner_area.text());
            let _ = writeln!(out, "L^2 - 4 pi A           {}", r.classic_deficit.text());
            let _ = writeln!(out, "improved deficit       {}", r.improved_deficit.text());
            let _ = writeln!(out, "phi (fourier form)     {}", r.phi.text());
            let _ = writeln!(
                out,
                "constant width         {}",
                if constant_width { "yes" } else { "no" }
            );
            if let Some(b) = &report.barbier {
                let _ = writeln!(out, "width w                {}", sig15(b.width));
                let _ = writeln!(out, "barbier residual       {}", sig15(b.residual));
            }
            if let Some(r) = identity {
                let _ = writeln!(out, "area identity residual {}", sig15(r));
            }
            let status = match (check.holds, check.equality) {
                (true, true) => "holds with equality",
                (true, false) => "holds strictly",
                (false, _) => "VIOLATED",
            };
            let _ = writeln!(out, "improved inequality    {status}");
            Ok(out)
        }
        f => Err(unsupported("analyze", f)),
    }
}

// ------------------------------------------------------------ equidistant

#[derive(Serialize)]
struct EquidistantJson {
    schema: u32,
    command: &'static str,
    curve: CurveSpec,
    lambda: f64,
    is_wigner: bool,
    oriented_area: Quantity,
    length_estimate: f64,
    degenerate: bool,
    cusp_count: usize,
    cusp_thetas: Vec<Quantity>,
}

pub fn equidistant(
    support: &FourierSupport,
    lambda: f64,
    settings: &Settings,
    format: Format,
) -> Result<String, CliError> {
    let eq = EquidistantSupport::new(support.clone(), lambda);
    let r = EquidistantReport::compute(&eq, settings.panels());
    let report = EquidistantJson {
        schema: SCHEMA,
        command: "equidistant",
        curve: support.to_spec(),
        lambda,
        is_wigner: r.is_wigner,
        oriented_area: Quantity::new(r.oriented_area, 1),
        length_estimate: r.length_estimate,
        degenerate: r.degenerate,
        cusp_count: r.cusp_thetas.len(),
        cusp_thetas: r.cusp_thetas.iter().map(|&t| Quantity::new(t, 1)).collect(),
    };
    match format {
        Format::Json => Ok(to_json(&report)),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "curve              {}", describe_support(support));
            let _ = writeln!(out, "lambda             {}", sig15(lambda));
            if r.is_wigner {
                let _ = writeln!(out, "set                Wigner caustic (lambda = 1/2)");
            }
            let _ = writeln!(out, "oriented area      {}", report.oriented_area.text());
            let _ = writeln!(out, "length estimate    {}", sig15(r.length_estimate));
            if r.degenerate {
                let _ = writeln!(
                    out,
                    "cusps              degenerate (cusp condition vanishes identically)"
                );
            } else {
                let _ = writeln!(out, "cusps              {}", r.cusp_thetas.len());
                for t in &report.cusp_thetas {
                    let _ = writeln!(out, "  theta            {}", t.text());
                }
            }
            Ok(out)
        }
        f => Err(unsupported("equidistant", f)),
    }
}

// ------------------------------------------------------------------ sweep

/// Column order of the sweep CSV.
pub const SWEEP_COLUMNS: &str =
    "lambda,oriented_area,lower_bound,upper_bound,cusp_count,length_estimate";

#[derive(Serialize)]
struct SweepRowJson {
    lambda: f64,
    oriented_area: f64,
    lower_bound: f64,
    upper_bound: f64,
    cusp_count: Option<usize>,
    length_estimate: f64,
}

#[derive(Serialize)]
struct SweepJson {
    schema: u32,
    command: &'static str,
    curve: CurveSpec,
    columns: Vec<&'static str>,
    rows: Vec<SweepRowJson>,
}

pub fn parse_lambda_range(s: &str) -> Result<(f64, f64, usize), CliError> {
    let parts: Vec<&str> = s.split(':').collect();
    let bad = || CliError::Usage(format!("--lambda-range expects lo:hi:steps, got {s:?}"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let lo = parts[0].trim().parse().map_err(|_| bad())?;
    let hi = parts[1].trim().parse().map_err(|_| bad())?;
    let steps = parts[2].trim().parse().map_err(|_| bad())?;
    Ok((lo, hi, steps))
}

pub fn sweep_command(
    support: &FourierSupport,
    range: (f64, f64, usize),
    settings: &Settings,
    format: Format,
) -> Result<String, CliError> {
    let lambdas = lambda_grid(range.0, range.1, range.2)?;
    let rows = sweep(support, &lambdas, settings.panels(), Execution::default())?;
    match format {
        Format::Csv => {
            let mut out = String::new();
            let _ = writeln!(out, "{SWEEP_COLUMNS}");
            for r in &rows {
                let _ = writeln!(out, "{}", csv_row(r));
            }
            Ok(out)
        }
        Format::Json => Ok(to_json(&SweepJson {
            schema: SCHEMA,
            command: "sweep",
            curve: support.to_spec(),
            columns: SWEEP_COLUMNS.split(',').collect(),
            rows: rows
                .iter()
                .map(|r| SweepRowJson {
                    lambda: r.lambda,
                    oriented_area: r.oriented_area,
                    lower_bound: r.lower_bound,
                    upper_bound: r.upper_bound,
                    cusp_count: r.cusp_count,
                    length_estimate: r.length_estimate,
                })
                .collect(),
        })),
        f => Err(unsupported("sweep", f)),
    }
}

fn csv_row(r: &SweepRow) -> String {
    let cusps = r
        .cusp_count
        .map_or_else(|| "degenerate".to_owned(), |c| c.to_string());
    format!(
        "{},{},{},{},{},{}",
        sig15(r.lambda),
        sig15(r.oriented_area),
        sig15(r.lower_bound),
        sig15(r.upper_bound),
        cusps,
        sig15(r.length_estimate)
    )
}

// -------------------------------------------------------------- stability

#[derive(Serialize)]
struct StabilityJson {
    schema: u32,
    command: &'static str,
    curve: CurveSpec,
    wigner_type_curve: CurveSpec,
    phi: Quantity,
    d_inf: Quantity,
    d_2: Quantity,
    hausdorff_bound: Quantity,
    l2_bound: Quantity,
    margin_max: Quantity,
    margin_l2: Quantity,
    equality_class: &'static str,
}

pub fn stability(support: &FourierSupport, format: Format) -> Result<String, CliError> {
    let r = stability_check(support);
    let w = wigner_type_curve(support);
    let hausdorff = 4.0 * PI * PI * r.d_inf * r.d_inf;
    let l2 = 6.0 * PI * r.d_2 * r.d_2;
    let report = StabilityJson {
        schema: SCHEMA,
        command: "stability",
        curve: support.to_spec(),
        wigner_type_curve: w.to_spec(),
        phi: Quantity::new(r.phi, 2),
        d_inf: Quantity::plain(r.d_inf),
        d_2: Quantity::plain(r.d_2),
        hausdorff_bound: Quantity::new(hausdorff, 2),
        l2_bound: Quantity::new(l2, 2),
        margin_max: Quantity::new(r.margin_max, 2),
        margin_l2: Quantity::new(r.margin_l2, 2),
        equality_class: r.equality_class.as_str(),
    };
    match format {
        Format::Json => Ok(to_json(&report)),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "curve                   {}", describe_support(support));
            let _ = writeln!(out, "wigner type curve W     {}", describe_support(&w));
            let _ = writeln!(out, "phi                     {}", report.phi.text());
            let _ = writeln!(out, "d_inf(K, W)             {}", sig15(r.d_inf));
            let _ = writeln!(out, "d_2(K, W)               {}", sig15(r.d_2));
            let _ = writeln!(
                out,
                "4 pi^2 d_inf^2          {}",
                report.hausdorff_bound.text()
            );
            let _ = writeln!(out, "6 pi d_2^2              {}", report.l2_bound.text());
            let _ = writeln!(out, "margin (hausdorff)      {}", report.margin_max.text());
            let _ = writeln!(out, "margin (l2)             {}", report.margin_l2.text());
            let _ = writeln!(out, "equality class          {}", report.equality_class);
            Ok(out)
        }
        f => Err(unsupported("stability", f)),
    }
}

// ----------------------------------------------------------------- family

#[derive(Serialize)]
struct FamilyJson {
    schema: u32,
    command: &'static str,
    n: u32,
    curve: CurveSpec,
    constant_width: bool,
    width: f64,
    barbier_residual: f64,
    cusp_count: usize,
    expected_cusp_count: u32,
    max_angle_error: f64,
    cusp_thetas: Vec<Quantity>,
}

/// Returns `(report, curve spec JSON)`.
pub fn family(n: u32, settings: &Settings, format: Format) -> Result<(String, String), CliError> {
    if n == 0 {
        return Err(CliError::Usage(
            "family index must be at least 1".to_owned(),
        ));
    }
    let support = make_cusp_family(n);
    let barbier = barbier_check(&support)?;
    let found = cusp_parameters(&EquidistantSupport::new(support.clone(), 0.5))?;
    let expected = cusp_family_angles(n);
    let max_err = if found.len() == expected.len() {
        found
            .iter()
            .zip(&expected)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };
    let report = FamilyJson {
        schema: SCHEMA,
        command: "family",
        n,
        curve: support.to_spec(),
        constant_width: is_constant_width(&support, settings.tol),
        width: barbier.width,
        barbier_residual: barbier.residual,
        cusp_count: found.len(),
        expected_cusp_count: 2 * n + 1,
        max_angle_error: max_err,
        cusp_thetas: found.iter().map(|&t| Quantity::new(t, 1)).collect(),
    };
    let spec = to_json(&support.to_spec());
    let out = match format {
        Format::Json => to_json(&report),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "family member n         {n}");
            let _ = writeln!(
                out,
                "curve                   {}",
                describe_support(&support)
            );
            let _ = writeln!(
                out,
                "constant width          {}",
                if report.constant_width { "yes" } else { "no" }
            );
            let _ = writeln!(out, "width w                 {}", sig15(barbier.width));
            let _ = writeln!(out, "barbier residual        {}", sig15(barbier.residual));
            let _ = writeln!(
                out,
                "wigner caustic cusps    {} (expected {})",
                found.len(),
                2 * n + 1
            );
            let _ = writeln!(out, "max angle error         {}", sig15(max_err));
            for t in &report.cusp_thetas {
                let _ = writeln!(out, "  theta                 {}", t.text());
            }
            out
        }
        f => return Err(unsupported("family", f)),
    };
    Ok((out, spec))
}

// ----------------------------------------------------------------- render

const PALETTE: [&str; 6] = [
    "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
];

pub fn render(
    support: &FourierSupport,
    lambdas: &[f64],
    wigner_type: bool,
    settings: &Settings,
) -> String {
    let exec = Execution::default();
    let count = settings.samples.max(3);
    let mut fig = SvgFigure::new();
    fig.push(
        sample_curve_with(support, count, exec),
        StrokeStyle::solid("black", 2.0),
        Some("oval"),
    );
    if wigner_type {
        fig.push(
            sample_curve_with(&wigner_type_curve(support), count, exec),
            StrokeStyle::dashed("#555555", 1.5),
            Some("wigner-type-curve"),
        );
    }
    for (i, &l) in lambdas.iter().enumerate() {
        let eq = EquidistantSupport::new(support.clone(), l);
        let label = format!("equidistant-{}", sig15(l));
        fig.push(
            trace_equidistant(&eq, count, exec),
            StrokeStyle::solid(PALETTE[i % PALETTE.len()], 1.5),
            Some(&label),
        );
    }
    fig.render()
}
