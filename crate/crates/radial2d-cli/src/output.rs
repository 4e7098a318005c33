//! Output documents and their JSON / CSV renderings.
//!
//! Both formats carry the same numeric values: every float is printed as its
//! shortest decimal string that round-trips exactly (17 significant digits at
//! most), so reports stay diffable and byte-identical across runs.

use radial2d::OracleReport;
use serde::Serialize;

use crate::config::{family_name, GridOverrides, OutputFormat, ParamSource, RunConfig};

/// Top-level report: the resolved configuration, the rows the subcommand
/// produced, and a machine-checkable summary.
#[derive(Debug, Serialize)]
pub struct Document {
    config: ConfigEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    evaluator: Option<EvaluatorInfo>,
    rows: Rows,
    summary: Summary,
}

impl Document {
    pub fn new(config: ConfigEcho, rows: Rows, summary: Summary) -> Self {
        Document {
            config,
            evaluator: None,
            rows,
            summary,
        }
    }

    /// Attach the closed-form evaluator header (wavefunction reports).
    #[must_use]
    pub fn with_evaluator(mut self, info: EvaluatorInfo) -> Self {
        self.evaluator = Some(info);
        self
    }

    /// Render in the requested format, trailing newline included.
    #[must_use]
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut text =
                    serde_json::to_string_pretty(self).expect("document serialization is total");
                text.push('\n');
                text
            }
            OutputFormat::Csv => self.render_csv(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        if let Some(info) = &self.evaluator {
            out.push_str(&format!(
                "# norm={} s={} alpha_or_kappa={}\n",
                fmt(info.norm),
                fmt(info.s),
                fmt(info.alpha_or_kappa)
            ));
        }
        match &self.rows {
            Rows::Spectrum(rows) => {
                out.push_str("m,energy\n");
                for row in rows {
                    out.push_str(&format!("{},{}\n", row.m, fmt(row.energy)));
                }
            }
            Rows::Coefficients(rows) => {
                out.push_str("m,a,b,s,energy\n");
                for row in rows {
                    out.push_str(&format!(
                        "{},{},{},{},{}\n",
                        row.m,
                        fmt(row.a),
                        fmt(row.b),
                        fmt(row.s),
                        fmt(row.energy)
                    ));
                }
            }
            Rows::Wavefunction(rows) => {
                out.push_str("rho,psi\n");
                for row in rows {
                    out.push_str(&format!("{},{}\n", fmt(row.rho), fmt(row.psi)));
                }
            }
            Rows::Verify(rows) => {
                out.push_str(
                    "m,numeric_energy,closed_form_energy,abs_delta,rel_delta,\
                     residual_max,norm_quadrature,rho_min,rho_max,n_points,spacing,flags\n",
                );
                for row in rows {
                    out.push_str(&format!(
                        "{},{},{},{},{},{},{},{},{},{},{},{}\n",
                        row.m,
                        fmt(row.numeric_energy),
                        fmt(row.closed_form_energy),
                        fmt(row.abs_delta),
                        fmt(row.rel_delta),
                        fmt(row.residual_max),
                        fmt(row.norm_quadrature),
                        fmt(row.grid.rho_min),
                        fmt(row.grid.rho_max),
                        row.grid.n_points,
                        fmt(row.grid.spacing),
                        row.flags.join(";")
                    ));
                }
            }
        }
        out
    }
}

/// The resolved configuration, echoed so a report is self-describing.
#[derive(Debug, Serialize)]
pub struct ConfigEcho {
    command: &'static str,
    family: &'static str,
    parameters: ParamEcho,
    mu: f64,
    hbar: f64,
    m_max: u32,
    tolerance: f64,
    grid: GridEcho,
    output: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rho_start: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rho_end: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    samples: Option<usize>,
}

impl ConfigEcho {
    pub fn new(command: &'static str, cfg: &RunConfig) -> Self {
        ConfigEcho {
            command,
            family: family_name(cfg.family),
            parameters: ParamEcho::from(cfg.source),
            mu: cfg.context.mu(),
            hbar: cfg.context.hbar(),
            m_max: cfg.m_max,
            tolerance: cfg.tolerance,
            grid: GridEcho::from(cfg.grid),
            output: cfg.output.name(),
            m: None,
            rho_start: None,
            rho_end: None,
            samples: None,
        }
    }

    /// Record the resolved sampling window (wavefunction reports).
    #[must_use]
    pub fn with_sampling(mut self, m: u32, rho_start: f64, rho_end: f64, samples: usize) -> Self {
        self.m = Some(m);
        self.rho_start = Some(rho_start);
        self.rho_end = Some(rho_end);
        self.samples = Some(samples);
        self
    }
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
enum ParamEcho {
    Molecular {
        source: &'static str,
        #[serde(rename = "De")]
        de: f64,
        re: f64,
    },
    Algebraic {
        source: &'static str,
        #[serde(rename = "A")]
        a: f64,
        #[serde(rename = "B")]
        b: f64,
        #[serde(rename = "C")]
        c: f64,
    },
}

impl From<ParamSource> for ParamEcho {
    fn from(source: ParamSource) -> Self {
        match source {
            ParamSource::Molecular { de, rho_e } => ParamEcho::Molecular {
                source: "molecular",
                de,
                re: rho_e,
            },
            ParamSource::Algebraic { a, b, c } => ParamEcho::Algebraic {
                source: "algebraic",
                a,
                b,
                c,
            },
        }
    }
}

#[derive(Debug, Serialize)]
struct GridEcho {
    rho_min: Option<f64>,
    rho_max: Option<f64>,
    grid_points: Option<usize>,
}

impl From<GridOverrides> for GridEcho {
    fn from(grid: GridOverrides) -> Self {
        GridEcho {
            rho_min: grid.rho_min,
            rho_max: grid.rho_max,
            grid_points: grid.n_points,
        }
    }
}

/// Closed-form evaluator header: normalization constant, power-law exponent,
/// and decay rate (α for pseudoharmonic states, κ for Kratzer states).
#[derive(Debug, Serialize)]
pub struct EvaluatorInfo {
    pub norm: f64,
    pub s: f64,
    pub alpha_or_kappa: f64,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Rows {
    Spectrum(Vec<SpectrumRow>),
    Coefficients(Vec<CoefficientsRow>),
    Wavefunction(Vec<SampleRow>),
    Verify(Vec<VerifyRow>),
}

#[derive(Debug, Serialize)]
pub struct SpectrumRow {
    pub m: u32,
    pub energy: f64,
}

#[derive(Debug, Serialize)]
pub struct CoefficientsRow {
    pub m: u32,
    pub a: f64,
    pub b: f64,
    pub s: f64,
    pub energy: f64,
}

#[derive(Debug, Serialize)]
pub struct SampleRow {
    pub rho: f64,
    pub psi: f64,
}

#[derive(Debug, Serialize)]
pub struct VerifyRow {
    pub m: u32,
    pub numeric_energy: f64,
    pub closed_form_energy: f64,
    pub abs_delta: f64,
    pub rel_delta: f64,
    pub residual_max: f64,
    pub norm_quadrature: f64,
    pub grid: GridRow,
    /// Failed checks: any of `energy-delta`, `norm`, `boundary`.
    pub flags: Vec<&'static str>,
}

impl VerifyRow {
    pub fn new(report: &OracleReport, flags: Vec<&'static str>) -> Self {
        VerifyRow {
            m: report.m,
            numeric_energy: report.numeric_energy,
            closed_form_energy: report.closed_form_energy,
            abs_delta: report.abs_delta,
            rel_delta: report.rel_delta,
            residual_max: report.residual_max,
            norm_quadrature: report.norm_quadrature,
            grid: GridRow {
                rho_min: report.grid.rho_min(),
                rho_max: report.grid.rho_max(),
                n_points: report.grid.n_points(),
                spacing: report.grid.spacing(),
            },
            flags,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct GridRow {
    pub rho_min: f64,
    pub rho_max: f64,
    pub n_points: usize,
    pub spacing: f64,
}

/// `pass` plus the worst relative energy deviation (null when the subcommand
/// ran no oracle comparison).
#[derive(Debug, Serialize)]
pub struct Summary {
    pub max_rel_delta: Option<f64>,
    pub pass: bool,
}

/// Shortest decimal string that parses back to exactly the same f64.
fn fmt(value: f64) -> String {
    format!("{value}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{CommonArgs, FamilyArg, SamplingArgs};

    fn sample_config() -> RunConfig {
        let args = CommonArgs {
            family: Some(FamilyArg::Pseudoharmonic),
            de: Some(2.0),
            re: Some(1.0),
            ..CommonArgs::default()
        };
        RunConfig::resolve(&args, &SamplingArgs::default()).expect("valid config")
    }

    #[test]
    fn shortest_roundtrip_formatting() {
        for &value in &[
            2.0,
            -2.0 / 9.0,
            0.857_763_884_960_706_8,
            1e-5,
            f64::MIN_POSITIVE,
        ] {
            let text = fmt(value);
            let back: f64 = text.parse().expect("parseable float");
            assert_eq!(back.to_bits(), value.to_bits(), "round-trip of {text}");
        }
    }

    #[test]
    fn json_document_shape() {
        let cfg = sample_config();
        let doc = Document::new(
            ConfigEcho::new("spectrum", &cfg),
            Rows::Spectrum(vec![SpectrumRow { m: 0, energy: 2.0 }]),
            Summary {
                max_rel_delta: None,
                pass: true,
            },
        );
        let text = doc.render(OutputFormat::Json);
        let value: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");
        assert_eq!(value["config"]["command"], "spectrum");
        assert_eq!(value["config"]["family"], "pseudoharmonic");
        assert_eq!(value["config"]["parameters"]["source"], "molecular");
        assert_eq!(value["config"]["parameters"]["De"], 2.0);
        assert_eq!(value["rows"][0]["energy"], 2.0);
        assert!(value["summary"]["max_rel_delta"].is_null());
        assert_eq!(value["summary"]["pass"], true);
        assert!(
            value.get("evaluator").is_none(),
            "spectrum reports carry no evaluator header"
        );
        assert!(text.ends_with('\n'), "report ends with a newline");
    }

    #[test]
    fn csv_mirrors_rows_with_header() {
        let cfg = sample_config();
        let doc = Document::new(
            ConfigEcho::new("spectrum", &cfg),
            Rows::Spectrum(vec![
                SpectrumRow { m: 0, energy: 2.0 },
                SpectrumRow {
                    m: 1,
                    energy: 2.472_135_954_999_579_4,
                },
            ]),
            Summary {
                max_rel_delta: None,
                pass: true,
            },
        );
        assert_eq!(
            doc.render(OutputFormat::Csv),
            "m,energy\n0,2\n1,2.4721359549995796\n"
        );
    }

    #[test]
    fn wavefunction_csv_carries_the_evaluator_comment() {
        let cfg = sample_config();
        let doc = Document::new(
            ConfigEcho::new("wavefunction", &cfg).with_sampling(0, 0.1, 5.0, 2),
            Rows::Wavefunction(vec![SampleRow { rho: 1.0, psi: 0.5 }]),
            Summary {
                max_rel_delta: None,
                pass: true,
            },
        )
        .with_evaluator(EvaluatorInfo {
            norm: 2.0,
            s: 2.0,
            alpha_or_kappa: 2.0,
        });
        let text = doc.render(OutputFormat::Csv);
        assert!(
            text.starts_with("# norm=2 s=2 alpha_or_kappa=2\nrho,psi\n"),
            "evaluator header first, then column header: {text}"
        );
    }

    #[test]
    fn verify_rows_flatten_the_grid_and_join_flags() {
        let report = OracleReport::new(
            radial2d::AngularMomentum(1),
            2.000_001,
            2.0,
            radial2d::RadialGrid::new(0.1, 10.0, 51).expect("valid grid"),
            1e-9,
            1.0,
        );
        let row = VerifyRow::new(&report, vec!["energy-delta", "boundary"]);
        let cfg = sample_config();
        let doc = Document::new(
            ConfigEcho::new("verify", &cfg),
            Rows::Verify(vec![row]),
            Summary {
                max_rel_delta: Some(5e-7),
                pass: false,
            },
        );

        let csv = doc.render(OutputFormat::Csv);
        let data_line = csv.lines().nth(1).expect("one data row");
        assert!(
            data_line.ends_with(",energy-delta;boundary"),
            "flags join with semicolons: {data_line}"
        );

        let json: serde_json::Value =
            serde_json::from_str(&doc.render(OutputFormat::Json)).expect("valid JSON");
        assert_eq!(json["rows"][0]["grid"]["n_points"], 51);
        assert_eq!(json["rows"][0]["flags"][1], "boundary");
        assert_eq!(json["summary"]["pass"], false);
    }

    #[test]
    fn csv_and_json_encode_identical_values() {
        let cfg = sample_config();
        let energy = 2.472_135_954_999_579_4;
        let doc = Document::new(
            ConfigEcho::new("spectrum", &cfg),
            Rows::Spectrum(vec![SpectrumRow { m: 1, energy }]),
            Summary {
                max_rel_delta: None,
                pass: true,
            },
        );
        let json: serde_json::Value =
            serde_json::from_str(&doc.render(OutputFormat::Json)).expect("valid JSON");
        let from_json = json["rows"][0]["energy"].as_f64().expect("float");
        let csv = doc.render(OutputFormat::Csv);
        let from_csv: f64 = csv
            .lines()
            .nth(1)
            .and_then(|line| line.split(',').nth(1))
            .expect("energy column")
            .parse()
            .expect("parseable float");
        assert_eq!(
            from_json.to_bits(),
            from_csv.to_bits(),
            "both formats must round-trip to the same f64"
        );
    }
}
