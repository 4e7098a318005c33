//! The four subcommands: each maps a resolved config to an output document.

use radial2d::oracle::{
    boundary_ratios, build_operator, lowest_eigenvalue, quadrature_norm, residual_scan,
    QuadratureControls, BOUNDARY_LIMIT,
};
use radial2d::{ansatz, AngularMomentum, OracleReport, RadialEvaluator, RadialGrid};

use crate::config::{GridOverrides, RunConfig};
use crate::error::CliError;
use crate::output::{
    CoefficientsRow, ConfigEcho, Document, EvaluatorInfo, Rows, SampleRow, SpectrumRow, Summary,
    VerifyRow,
};

/// Verification accepts a state only when |quadrature norm − 1| stays below
/// this bound.
const NORM_LIMIT: f64 = 1e-6;
/// Eigenvalue bisection runs to 1e-12 relative to max(1, |E|); anything
/// looser would pollute the reported deltas, anything tighter buys nothing
/// against the O(h²) discretization error.
const EIGEN_TOL_SCALE: f64 = 1e-12;
/// The residual scan samples this many points across the span below,
/// measured in units of the wavefunction peak radius — the region where the
/// state actually lives.
const RESIDUAL_POINTS: usize = 50;
const RESIDUAL_SPAN: (f64, f64) = (0.25, 2.5);

/// A finished subcommand: the printable document plus the verification
/// outcome that decides the process exit status.
pub struct Outcome {
    pub document: Document,
    pub failed_rows: usize,
    pub total_rows: usize,
}

impl Outcome {
    fn clean(document: Document, total_rows: usize) -> Self {
        Outcome {
            document,
            failed_rows: 0,
            total_rows,
        }
    }
}

/// Closed-form energies E_m for m = 0..m_max.
pub fn spectrum(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let mut rows = Vec::with_capacity(cfg.m_max as usize + 1);
    for m in 0..=cfg.m_max {
        let energy = ansatz::energy(&cfg.spec, &cfg.context, AngularMomentum(m))?;
        rows.push(SpectrumRow { m, energy });
    }
    let total = rows.len();
    let document = Document::new(
        ConfigEcho::new("spectrum", cfg),
        Rows::Spectrum(rows),
        no_oracle_summary(),
    );
    Ok(Outcome::clean(document, total))
}

/// Matched ansatz coefficients (a, b, s) and the closed-form energy per m.
pub fn coefficients(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let mut rows = Vec::with_capacity(cfg.m_max as usize + 1);
    for m in 0..=cfg.m_max {
        let sol = ansatz::solve_coefficients(&cfg.spec, &cfg.context, AngularMomentum(m))?;
        rows.push(CoefficientsRow {
            m,
            a: sol.a,
            b: sol.b,
            s: sol.s,
            energy: sol.energy,
        });
    }
    let total = rows.len();
    let document = Document::new(
        ConfigEcho::new("coefficients", cfg),
        Rows::Coefficients(rows),
        no_oracle_summary(),
    );
    Ok(Outcome::clean(document, total))
}

/// Uniform samples of the normalized wavefunction ψ(ρ) for one m. Window
/// endpoints default to the automatic verification grid of the state, which
/// spans everything above 1e-11 of the wavefunction peak.
pub fn wavefunction(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let m = AngularMomentum(cfg.sampling.m);
    let evaluator = ansatz::wavefunction(&cfg.spec, &cfg.context, m)?;

    let (start, end) = match (cfg.sampling.rho_start, cfg.sampling.rho_end) {
        (Some(start), Some(end)) => (start, end),
        (start, end) => {
            let grid = RadialGrid::default_for(&cfg.spec, &cfg.context, m)?;
            (
                start.unwrap_or_else(|| grid.rho_min()),
                end.unwrap_or_else(|| grid.rho_max()),
            )
        }
    };
    if start >= end {
        return Err(CliError::Usage(format!(
            "rho-start = {start} must lie strictly below rho-end = {end}"
        )));
    }

    let samples = cfg.sampling.samples;
    let step = (end - start) / (samples - 1) as f64;
    let mut rows = Vec::with_capacity(samples);
    for i in 0..samples {
        // Land exactly on the requested endpoint despite rounding.
        let rho = if i + 1 == samples {
            end
        } else {
            start + step * i as f64
        };
        rows.push(SampleRow {
            rho,
            psi: evaluator.evaluate(rho)?,
        });
    }

    let config =
        ConfigEcho::new("wavefunction", cfg).with_sampling(cfg.sampling.m, start, end, samples);
    let document = Document::new(config, Rows::Wavefunction(rows), no_oracle_summary())
        .with_evaluator(EvaluatorInfo {
            norm: evaluator.norm(),
            s: evaluator.s(),
            alpha_or_kappa: evaluator.alpha_or_kappa(),
        });
    Ok(Outcome::clean(document, samples))
}

/// Closed form against the independent oracle, one report row per m. A row
/// fails — and the process exits 1 — when the relative energy delta exceeds
/// the tolerance, the quadrature norm drifts from 1, or the grid fails the
/// a-posteriori boundary-decay check.
pub fn verify(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let mut rows = Vec::with_capacity(cfg.m_max as usize + 1);
    let mut max_rel_delta: f64 = 0.0;
    let mut failed = 0usize;

    for m in 0..=cfg.m_max {
        let am = AngularMomentum(m);
        let closed = ansatz::energy(&cfg.spec, &cfg.context, am)?;
        let evaluator = ansatz::wavefunction(&cfg.spec, &cfg.context, am)?;
        let grid = verification_grid(cfg, am)?;

        let operator = build_operator(&cfg.spec, &cfg.context, am, &grid);
        let numeric = lowest_eigenvalue(&operator, EIGEN_TOL_SCALE * closed.abs().max(1.0))?;
        let norm = quadrature_norm(&evaluator, &QuadratureControls::default())?.value;
        let residual_max = residual_scan(
            &cfg.spec,
            &cfg.context,
            am,
            closed,
            &evaluator,
            &residual_points(&evaluator),
        )?;
        let (inner, outer) = boundary_ratios(&evaluator, &grid)?;

        let report = OracleReport::new(am, numeric, closed, grid, residual_max, norm);
        // Negated comparisons so that a NaN anywhere flags the row instead
        // of silently passing.
        let mut flags = Vec::new();
        if !(report.rel_delta <= cfg.tolerance) {
            flags.push("energy-delta");
        }
        if !((norm - 1.0).abs() <= NORM_LIMIT) {
            flags.push("norm");
        }
        if !(inner <= BOUNDARY_LIMIT && outer <= BOUNDARY_LIMIT) {
            flags.push("boundary");
        }
        if !flags.is_empty() {
            failed += 1;
        }
        max_rel_delta = max_rel_delta.max(report.rel_delta);
        rows.push(VerifyRow::new(&report, flags));
    }

    let total = rows.len();
    let document = Document::new(
        ConfigEcho::new("verify", cfg),
        Rows::Verify(rows),
        Summary {
            max_rel_delta: Some(max_rel_delta),
            pass: failed == 0,
        },
    );
    Ok(Outcome {
        document,
        failed_rows: failed,
        total_rows: total,
    })
}

fn no_oracle_summary() -> Summary {
    Summary {
        max_rel_delta: None,
        pass: true,
    }
}

/// The automatic grid for the state, with any user overrides substituted
/// component-wise (so `--grid-points 50` coarsens the automatic window
/// without moving its endpoints).
fn verification_grid(cfg: &RunConfig, m: AngularMomentum) -> Result<RadialGrid, CliError> {
    let auto = RadialGrid::default_for(&cfg.spec, &cfg.context, m)?;
    let GridOverrides {
        rho_min,
        rho_max,
        n_points,
    } = cfg.grid;
    if rho_min.is_none() && rho_max.is_none() && n_points.is_none() {
        return Ok(auto);
    }
    Ok(RadialGrid::new(
        rho_min.unwrap_or_else(|| auto.rho_min()),
        rho_max.unwrap_or_else(|| auto.rho_max()),
        n_points.unwrap_or_else(|| auto.n_points()),
    )?)
}

fn residual_points(evaluator: &RadialEvaluator) -> Vec<f64> {
    let peak = evaluator.peak_radius();
    let start = RESIDUAL_SPAN.0 * peak;
    let step = (RESIDUAL_SPAN.1 - RESIDUAL_SPAN.0) * peak / (RESIDUAL_POINTS - 1) as f64;
    (0..RESIDUAL_POINTS)
        .map(|i| start + step * i as f64)
        .collect()
}
