//! Command dispatch for the `gkz` binary, kept as a library so commands can
//! be driven from tests without spawning processes.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use gkz_core::game::{plucker_symbol, render_monomial};
use gkz_core::json::{
    parse_config, parse_specialization, poly_to_json, report_to_json, to_json,
    matrix_to_json, TriangulationJson,
};
use gkz_core::resultant::{symbolic_resultant, symbolic_sylvester_matrix};
use gkz_core::{
    all_game_terms, chow_monomial, ea_oracle, ea_univariate, enumerate_coherent_triangulations,
    enumerate_triangulations, gkz_vector, is_coherent, secondary_polytope, specialize,
    discriminant_univariate, verify_main_theorem, PointConfiguration, SparsePoly, Status,
    UnivariateSymbolic, DEFAULT_CAP,
};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Hull,
    Triangulate,
    Gkz,
    Game,
    Chow,
    Secondary,
    Resultant,
    Discriminant,
    Ea,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandRequest {
    pub command: Command,
    /// `None` reads standard input when the command needs a configuration.
    pub input_path: Option<PathBuf>,
    pub format: OutputFormat,
    pub cap: usize,
    pub include_noncoherent: bool,
    pub degree: Option<usize>,
    /// Degree of the second polynomial for `resultant`; defaults to `degree`.
    pub second_degree: Option<usize>,
    /// Emit the Sylvester matrix instead of its determinant.
    pub matrix: bool,
    pub specialize: Option<PathBuf>,
}

impl CommandRequest {
    pub fn new(command: Command) -> Self {
        CommandRequest {
            command,
            input_path: None,
            format: OutputFormat::Json,
            cap: DEFAULT_CAP,
            include_noncoherent: false,
            degree: None,
            second_degree: None,
            matrix: false,
            specialize: None,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] gkz_core::Error),
    #[error("{0} requires --degree")]
    MissingDegree(&'static str),
    #[error("--include-noncoherent only applies to triangulate and gkz")]
    NoncoherentNotApplicable,
}

/// Exit status and the text destined for stdout or stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

/// Runs a request, reading the configuration from its path or stdin.
pub fn run(request: &CommandRequest) -> Outcome {
    let input = || -> Result<String, CliError> {
        match &request.input_path {
            Some(path) => read_file(path),
            None => {
                let mut text = String::new();
                std::io::stdin()
                    .read_to_string(&mut text)
                    .map_err(|source| CliError::Io {
                        path: "<stdin>".into(),
                        source,
                    })?;
                Ok(text)
            }
        }
    };
    run_with(request, input)
}

/// Runs a request against configuration text supplied directly.
pub fn run_on_text(request: &CommandRequest, text: &str) -> Outcome {
    run_with(request, || Ok(text.to_string()))
}

fn run_with(request: &CommandRequest, input: impl FnOnce() -> Result<String, CliError>) -> Outcome {
    match dispatch(request, input) {
        Ok((stdout, passed)) => Outcome {
            exit_code: if passed { 0 } else { EXIT_FAIL },
            stdout: finish(stdout),
            stderr: String::new(),
        },
        Err(e) => Outcome {
            exit_code: EXIT_INPUT_ERROR,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn dispatch(
    req: &CommandRequest,
    input: impl FnOnce() -> Result<String, CliError>,
) -> Result<(String, bool), CliError> {
    if req.include_noncoherent && !matches!(req.command, Command::Triangulate | Command::Gkz) {
        return Err(CliError::NoncoherentNotApplicable);
    }
    let config = || -> Result<PointConfiguration, CliError> { Ok(parse_config(&input()?)?) };
    let out = match req.command {
        Command::Hull => hull(&config()?, req.format),
        Command::Triangulate => triangulate(&config()?, req)?,
        Command::Gkz => gkz(&config()?, req)?,
        Command::Game => game(&config()?, req)?,
        Command::Chow => chow(&config()?, req)?,
        Command::Secondary => secondary(&config()?, req)?,
        Command::Resultant => resultant_cmd(req)?,
        Command::Discriminant => {
            let d = req.degree.ok_or(CliError::MissingDegree("discriminant"))?;
            poly_output(&discriminant_univariate(d)?, req.format)
        }
        Command::Ea => match req.degree {
            Some(d) => poly_output(&ea_univariate(d)?, req.format),
            None => poly_output(&ea_oracle(&config()?)?, req.format),
        },
        Command::Verify => return verify(&config()?, req),
    };
    Ok((out, true))
}

fn finish(mut text: String) -> String {
    if !text.ends_with('\n') {
        text.push('\n');
    }
    text
}

fn labels_of(config: &PointConfiguration, indices: &[usize]) -> Vec<String> {
    indices.iter().map(|&i| config.label(i).to_string()).collect()
}

fn simplex_names(config: &PointConfiguration, t: &gkz_core::Triangulation) -> String {
    t.simplices()
        .iter()
        .map(|s| labels_of(config, s.vertices()).concat())
        .collect::<Vec<_>>()
        .join(" ")
}

fn tuple(v: &[u64]) -> String {
    let parts: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("({})", parts.join(","))
}

#[derive(Serialize)]
struct FaceJson {
    dim: usize,
    points: Vec<String>,
    normal: Vec<i64>,
    offset: i64,
}

#[derive(Serialize)]
struct HullJson {
    config: gkz_core::json::ConfigJson,
    vertices: Vec<String>,
    volume: u64,
    faces: Vec<FaceJson>,
}

fn hull(config: &PointConfiguration, format: OutputFormat) -> String {
    let faces = config.faces();
    match format {
        OutputFormat::Json => to_json(&HullJson {
            config: gkz_core::json::ConfigJson::from_config(config),
            vertices: labels_of(config, &config.vertices()),
            volume: config.lattice_volume(),
            faces: faces
                .iter()
                .map(|f| FaceJson {
                    dim: f.dim,
                    points: labels_of(config, &f.point_indices),
                    normal: f.supporting_normal.clone(),
                    offset: f.offset,
                })
                .collect(),
        }),
        OutputFormat::Text => {
            let mut s = String::new();
            writeln!(s, "configuration: {config}").unwrap();
            writeln!(s, "vertices: {}", labels_of(config, &config.vertices()).join(" ")).unwrap();
            writeln!(s, "normalized volume: {}", config.lattice_volume()).unwrap();
            writeln!(s, "faces: {}", faces.len()).unwrap();
            for f in &faces {
                writeln!(s, "  dim {}: {}", f.dim, labels_of(config, &f.point_indices).join(" ")).unwrap();
            }
            s
        }
    }
}

#[derive(Serialize)]
struct TriangulationsJson {
    count: usize,
    triangulations: Vec<TriangulationJson>,
}

fn triangulate(config: &PointConfiguration, req: &CommandRequest) -> Result<String, CliError> {
    let listed: Vec<_> = if req.include_noncoherent {
        enumerate_triangulations(config, req.cap)?
            .into_iter()
            .map(|t| {
                let cert = is_coherent(config, &t);
                (t, cert)
            })
            .collect()
    } else {
        enumerate_coherent_triangulations(config, req.cap)?
            .into_iter()
            .map(|(t, c)| (t, Some(c)))
            .collect()
    };
    Ok(match req.format {
        OutputFormat::Json => to_json(&TriangulationsJson {
            count: listed.len(),
            triangulations: listed
                .iter()
                .map(|(t, c)| TriangulationJson::new(config, t, Some(c.as_ref())))
                .collect(),
        }),
        OutputFormat::Text => {
            let mut s = format!("{} triangulations\n", listed.len());
            for (t, c) in &listed {
                let tag = if c.is_some() { "coherent" } else { "non-coherent" };
                writeln!(
                    s,
                    "{}  {}  {}",
                    simplex_names(config, t),
                    tag,
                    tuple(&gkz_vector(config, t).0)
                )
                .unwrap();
            }
            s
        }
    })
}

fn gkz(config: &PointConfiguration, req: &CommandRequest) -> Result<String, CliError> {
    let ts: Vec<_> = if req.include_noncoherent {
        enumerate_triangulations(config, req.cap)?
    } else {
        enumerate_coherent_triangulations(config, req.cap)?
            .into_iter()
            .map(|(t, _)| t)
            .collect()
    };
    Ok(match req.format {
        OutputFormat::Json => to_json(
            &ts.iter()
                .map(|t| TriangulationJson::new(config, t, None))
                .collect::<Vec<_>>(),
        ),
        OutputFormat::Text => ts
            .iter()
            .map(|t| format!("{}  {}\n", tuple(&gkz_vector(config, t).0), simplex_names(config, t)))
            .collect(),
    })
}

#[derive(Serialize)]
struct GameTermJson {
    coeff: String,
    exp: Vec<u64>,
    triangulation: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct GameJson {
    vars: Vec<String>,
    terms: Vec<GameTermJson>,
}

fn game(config: &PointConfiguration, req: &CommandRequest) -> Result<String, CliError> {
    let terms = all_game_terms(config, req.cap)?;
    Ok(match req.format {
        OutputFormat::Json => to_json(&GameJson {
            vars: config.labels().to_vec(),
            terms: terms
                .iter()
                .map(|t| GameTermJson {
                    coeff: t.coefficient.to_string(),
                    exp: t.exponents.0.clone(),
                    triangulation: TriangulationJson::new(config, &t.source, None).simplices,
                })
                .collect(),
        }),
        OutputFormat::Text => terms.iter().map(|t| format!("{}\n", t.render(config))).collect(),
    })
}

#[derive(Serialize)]
struct ChowFactorJson {
    simplex: Vec<String>,
    symbol: String,
    multiplicity: u64,
}

#[derive(Serialize)]
struct ChowJson {
    monomial: String,
    factors: Vec<ChowFactorJson>,
}

fn chow(config: &PointConfiguration, req: &CommandRequest) -> Result<String, CliError> {
    let monomials: Vec<_> = enumerate_coherent_triangulations(config, req.cap)?
        .iter()
        .map(|(t, _)| chow_monomial(config, t))
        .collect();
    Ok(match req.format {
        OutputFormat::Json => to_json(
            &monomials
                .iter()
                .map(|m| ChowJson {
                    monomial: m.render(config),
                    factors: m
                        .factors
                        .iter()
                        .map(|(s, &k)| ChowFactorJson {
                            simplex: labels_of(config, s.vertices()),
                            symbol: plucker_symbol(config, s),
                            multiplicity: k,
                        })
                        .collect(),
                })
                .collect::<Vec<_>>(),
        ),
        OutputFormat::Text => monomials.iter().map(|m| format!("{}\n", m.render(config))).collect(),
    })
}

#[derive(Serialize)]
struct SecondaryVertexJson {
    gkz: Vec<u64>,
    triangulation: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct SecondaryJson {
    labels: Vec<String>,
    vertices: Vec<SecondaryVertexJson>,
}

fn secondary(config: &PointConfiguration, req: &CommandRequest) -> Result<String, CliError> {
    let sp = secondary_polytope(config, req.cap)?;
    Ok(match req.format {
        OutputFormat::Json => to_json(&SecondaryJson {
            labels: config.labels().to_vec(),
            vertices: sp
                .vertices
                .iter()
                .map(|(g, t)| SecondaryVertexJson {
                    gkz: g.0.clone(),
                    triangulation: TriangulationJson::new(config, t, None).simplices,
                })
                .collect(),
        }),
        OutputFormat::Text => {
            let mut s = format!("{} vertices\n", sp.vertices.len());
            for (g, t) in &sp.vertices {
                writeln!(s, "{}  {}", tuple(&g.0), simplex_names(config, t)).unwrap();
            }
            s
        }
    })
}

fn resultant_cmd(req: &CommandRequest) -> Result<String, CliError> {
    let d = req.degree.ok_or(CliError::MissingDegree("resultant"))?;
    let f = UnivariateSymbolic::generic(d, "1")?;
    let g = UnivariateSymbolic::generic(req.second_degree.unwrap_or(d), "2")?;
    if req.matrix {
        let m = symbolic_sylvester_matrix(&f, &g);
        return Ok(match req.format {
            OutputFormat::Json => matrix_to_json(&m),
            OutputFormat::Text => m
                .iter()
                .map(|row| {
                    let cells: Vec<String> = row.iter().map(|e| format!("{e:>3}")).collect();
                    format!("{}\n", cells.join(" "))
                })
                .collect(),
        });
    }
    let mut r = symbolic_resultant(&f, &g);
    if let Some(path) = &req.specialize {
        let map = parse_specialization(&read_file(path)?)?;
        r = specialize(&r, &map)?;
    }
    Ok(poly_output(&r, req.format))
}

fn poly_output(p: &SparsePoly, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => poly_to_json(p),
        OutputFormat::Text => p.to_string(),
    }
}

fn verify(config: &PointConfiguration, req: &CommandRequest) -> Result<(String, bool), CliError> {
    let report = verify_main_theorem(config, req.cap)?;
    let passed = report.status == Status::Pass;
    let out = match req.format {
        OutputFormat::Json => report_to_json(config, &report),
        OutputFormat::Text => {
            let labels = config.labels();
            let mut s = format!("{}\n", if passed { "PASS" } else { "FAIL" });
            let sections = [
                ("matched", &report.matched),
                ("game only", &report.game_only),
                ("oracle only", &report.oracle_only),
                ("interior", &report.interior),
            ];
            for (name, terms) in sections {
                writeln!(s, "{name}: {}", terms.len()).unwrap();
                for (exp, c) in terms {
                    writeln!(s, "  {}·{}", c, render_monomial(exp, labels)).unwrap();
                }
            }
            writeln!(s, "secondary polytope matches Newton polytope: {}", report.secondary_matches_newton)
                .unwrap();
            s
        }
    };
    Ok((out, passed))
}
