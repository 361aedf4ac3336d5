//! Command-line front end.

mod input;
mod output;

pub use input::{load_graph, GraphSource};
pub use output::{write_atomic, write_json, write_svg};

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::algebra::{int, parse_rational, Rational};
use crate::graph::{automorphisms, graph_to_json, integer_encoding, triangle_components, Edge, Vertex};
use crate::motion::{
    analyze_motion, animation_svg, fix_edge, grid_motion, parse_zigzag, spatial_motion, DisplayMode, MotionError,
    ParametricMotion, SvgOptions, DEFAULT_COUPLING,
};
use crate::movable::{
    constant_distance_closure, has_injective_grid_construction, has_injective_spatial_embedding, movability_status,
    spatial_embedding, MovableError,
};
use crate::nac::{is_nac_coloring, isomorphism_classes, nac_colorings, NacColoring, NacError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("I/O error: {0}")]
    Io(String),
    #[error("{0}")]
    Infeasible(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Input(_) | CliError::Io(_) => EXIT_INPUT,
            CliError::Infeasible(_) => EXIT_INFEASIBLE,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<MovableError> for CliError {
    fn from(e: MovableError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<MotionError> for CliError {
    fn from(e: MotionError) -> Self {
        match e {
            MotionError::Disconnected | MotionError::ForeignColoring => CliError::Input(e.to_string()),
            MotionError::BadZigZag(_) | MotionError::InvalidOption(_) => CliError::Usage(e.to_string()),
            _ => CliError::Infeasible(e.to_string()),
        }
    }
}

const FORMATS: &str = "\
Graph input (INPUT):
  path/to/graph.json    {\"vertices\":[0,1,2],\"edges\":[[0,1],[1,2],[0,2]]}; \"vertices\" is optional
  -                     the same JSON read from standard input
  int:<n>:<k>           integer encoding on vertices 0..k-1; bit i marks the i-th pair of
                        (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
  catalog:<name>        a named graph, e.g. catalog:C4, catalog:Q1, catalog:CompleteBipartite(2,3)

Zig-zag base points: [[[x,y],...],[[x,y],...]]; the first list is rotated and indexed by blue
components, the second translates and is indexed by red components. Coordinates may be
integers, decimals or fractions such as 3/4.

Motion JSON: {\"parameter\":\"t\",\"display\":...,\"vertices\":{\"v\":{\"x\":{\"num\":[[p,q],...],\"den\":[...]},\"y\":...}}}
with ascending coefficients given as numerator/denominator pairs.

Exit codes: 0 success, 1 usage error, 2 invalid input or I/O failure, 3 infeasible request.
Environment: FLEXRIG_MAX_VERTICES overrides the vertex bound (16) of automorphism search.";

#[derive(Parser, Debug)]
#[command(name = "flexrig", version, about = "NAC-colorings, flexible labelings and motions of graphs", after_help = FORMATS)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Graph summaries
    #[command(subcommand)]
    Graph(GraphCmd),
    /// NAC-colorings
    #[command(subcommand)]
    Nac(NacCmd),
    /// Parametric motions
    #[command(subcommand)]
    Motion(MotionCmd),
    /// Movability verdict, or one of the individual tests
    Movable {
        input: String,
        /// Only test for an injective grid construction
        #[arg(long, conflicts_with = "spatial")]
        grid: bool,
        /// Only search for an injective spatial embedding
        #[arg(long)]
        spatial: bool,
        /// Print JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Constant distance closure trace
    Cdc {
        input: String,
        /// Print JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// List catalog graphs, or print one as JSON
    Catalog { name: Option<String> },
}

#[derive(Subcommand, Debug)]
enum GraphCmd {
    /// Vertices, edges and basic invariants
    Info {
        input: String,
        /// Print the graph as JSON instead
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum NacCmd {
    /// All NAC-colorings up to colour swap
    List {
        input: String,
        /// Print JSON instead of text
        #[arg(long)]
        json: bool,
        /// Name the colorings by isomorphism class (alpha1, alpha2, beta, ...)
        #[arg(long)]
        names: bool,
    },
    /// Decide whether the given red edges form a NAC-coloring
    Check {
        input: String,
        /// Red edges as JSON, e.g. [[0,1],[0,3]]
        #[arg(long)]
        red: String,
    },
    /// Isomorphism classes of NAC-colorings
    Classes {
        input: String,
        /// Print JSON instead of text
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DisplayArg {
    Trig,
    Rational,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Fix this edge: its first vertex at the origin, the second on the positive x-axis
    #[arg(long, value_name = "U,V")]
    fix_edge: Option<String>,
    /// Write an animated SVG
    #[arg(long, value_name = "FILE")]
    svg: Option<String>,
    /// Number of animation frames
    #[arg(long, default_value_t = 100)]
    frames: usize,
    /// Animation length in seconds
    #[arg(long, default_value = "10")]
    duration: String,
    /// Print the motion as JSON instead of the parametrization
    #[arg(long)]
    json: bool,
    /// Also print squared edge lengths and motion properties
    #[arg(long)]
    analyze: bool,
}

#[derive(Subcommand, Debug)]
enum MotionCmd {
    /// Grid construction from a NAC-coloring
    Grid {
        input: String,
        /// Index of the NAC-coloring in `nac list` order
        #[arg(long, default_value_t = 0)]
        nac: usize,
        /// Zig-zag base points (see --help)
        #[arg(long)]
        zigzag: Option<String>,
        #[arg(long, value_enum, default_value = "trig")]
        display: DisplayArg,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Motion from a spatial embedding of a pair of NAC-colorings
    Spatial {
        input: String,
        /// Indices of the two NAC-colorings; default is the first pair that works
        #[arg(long, value_name = "I,J")]
        pair: Option<String>,
        /// Coupling constant L, any rational with |L| not 0 or 1
        #[arg(long, default_value_t = DEFAULT_COUPLING.to_string())]
        coupling: String,
        #[command(flatten)]
        out: OutputArgs,
    },
}

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, stdin, stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn parse_pair(text: &str, what: &str) -> Result<(u32, u32), CliError> {
    let bad = || CliError::Usage(format!("{what} must look like 1,2, got {text:?}"));
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn parse_red(text: &str) -> Result<Vec<Edge>, CliError> {
    let pairs: Vec<[Vertex; 2]> =
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("--red must be a JSON edge list: {e}")))?;
    Ok(pairs.iter().map(|p| Edge::new(p[0], p[1])).collect())
}

fn nac_list_text(cs: &[NacColoring]) -> String {
    let items: Vec<String> = cs.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(",\n "))
}

fn dispatch(cmd: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        Command::Graph(GraphCmd::Info { input, json }) => {
            let g = load_graph(&input, stdin)?;
            if json {
                writeln!(out, "{}", graph_to_json(&g))?;
                return Ok(());
            }
            writeln!(out, "{g}")?;
            writeln!(out, "vertices: {}", g.num_vertices())?;
            writeln!(out, "edges: {}", g.num_edges())?;
            writeln!(out, "connected: {}", g.is_connected())?;
            writeln!(out, "triangle components: {}", triangle_components(&g).len())?;
            match automorphisms(&g) {
                Ok(a) => writeln!(out, "automorphisms: {}", a.len())?,
                Err(e) => writeln!(out, "automorphisms: skipped ({e})")?,
            }
            writeln!(out, "integer encoding: {}", integer_encoding(&g))?;
            writeln!(out, "has NAC-coloring: {}", !nac_colorings(&g, true).is_empty())?;
        }
        Command::Nac(NacCmd::List { input, json, names }) => {
            let g = load_graph(&input, stdin)?;
            let mut cs = nac_colorings(&g, false);
            if names {
                let classes = isomorphism_classes(&g, &cs).map_err(|e| CliError::Infeasible(e.to_string()))?;
                let named: Vec<NacColoring> = classes.into_iter().flat_map(|c| c.members).collect();
                cs = cs.iter().map(|c| named.iter().find(|n| *n == c).cloned().expect("member")).collect();
            }
            if json {
                let v: Vec<_> = cs.iter().map(NacColoring::to_json).collect();
                writeln!(out, "{}", serde_json::to_string(&v).expect("serializes"))?;
            } else {
                writeln!(out, "{}", nac_list_text(&cs))?;
            }
        }
        Command::Nac(NacCmd::Check { input, red }) => {
            let g = load_graph(&input, stdin)?;
            let red = parse_red(&red)?;
            let ok = is_nac_coloring(&g, &red).map_err(|e: NacError| CliError::Input(e.to_string()))?;
            writeln!(out, "{ok}")?;
        }
        Command::Nac(NacCmd::Classes { input, json }) => {
            let g = load_graph(&input, stdin)?;
            let cs = nac_colorings(&g, false);
            let classes = isomorphism_classes(&g, &cs).map_err(|e| CliError::Infeasible(e.to_string()))?;
            if json {
                let v: Vec<Vec<_>> =
                    classes.iter().map(|c| c.members.iter().map(NacColoring::to_json).collect()).collect();
                writeln!(out, "{}", serde_json::to_string(&v).expect("serializes"))?;
            } else {
                let parts: Vec<String> = classes
                    .iter()
                    .map(|c| {
                        let items: Vec<String> = c.members.iter().map(ToString::to_string).collect();
                        format!("[{}]", items.join(",\n  "))
                    })
                    .collect();
                writeln!(out, "[{}]", parts.join(",\n "))?;
            }
        }
        Command::Motion(MotionCmd::Grid { input, nac, zigzag, display, out: o }) => {
            let svg_opts = svg_options(&o)?;
            let zz = zigzag.as_deref().map(parse_zigzag).transpose()?;
            let fix = o.fix_edge.as_deref().map(|s| parse_pair(s, "--fix-edge")).transpose()?;
            let g = load_graph(&input, stdin)?;
            let cs = nac_colorings(&g, false);
            if cs.is_empty() {
                return Err(CliError::Infeasible("the graph has no NAC-coloring".into()));
            }
            let c = cs.get(nac).ok_or_else(|| {
                CliError::Infeasible(format!("NAC-coloring index {nac} out of range (there are {})", cs.len()))
            })?;
            let mut m = grid_motion(&g, c, zz.as_ref())?;
            if let Some((u, v)) = fix {
                m = fix_edge(&m, u, v)?;
            }
            let m = m.with_display(match display {
                DisplayArg::Trig => DisplayMode::Trig,
                DisplayArg::Rational => DisplayMode::Rational,
            });
            emit_motion(&m, &o, SvgOptions { nac: Some(c.clone()), ..svg_opts }, out)?;
        }
        Command::Motion(MotionCmd::Spatial { input, pair, coupling, out: o }) => {
            let svg_opts = svg_options(&o)?;
            let l: Rational = parse_rational(&coupling)
                .ok_or_else(|| CliError::Usage(format!("--coupling must be a rational, got {coupling:?}")))?;
            let pair = pair.as_deref().map(|s| parse_pair(s, "--pair")).transpose()?;
            let fix = o.fix_edge.as_deref().map(|s| parse_pair(s, "--fix-edge")).transpose()?;
            let g = load_graph(&input, stdin)?;
            let emb = match pair {
                Some((i, j)) => {
                    let cs = nac_colorings(&g, false);
                    let get = |k: u32| {
                        cs.get(k as usize).ok_or_else(|| {
                            CliError::Infeasible(format!(
                                "NAC-coloring index {k} out of range (there are {})",
                                cs.len()
                            ))
                        })
                    };
                    spatial_embedding(&g, get(i)?, get(j)?).ok_or_else(|| {
                        CliError::Infeasible(format!("NAC-colorings {i} and {j} give no spatial embedding"))
                    })?
                }
                None => {
                    has_injective_spatial_embedding(&g)?
                        .ok_or_else(|| {
                            CliError::Infeasible("no pair of NAC-colorings gives a spatial embedding".into())
                        })?
                        .embedding
                }
            };
            let mut m = spatial_motion(&g, &emb, &l)?;
            if let Some((u, v)) = fix {
                m = fix_edge(&m, u, v)?;
            }
            emit_motion(&m, &o, svg_opts, out)?;
        }
        Command::Movable { input, grid, spatial, json } => {
            let g = load_graph(&input, stdin)?;
            if grid {
                let c = has_injective_grid_construction(&g)?;
                if json {
                    let v = serde_json::json!({"injective_grid": c.is_some(), "coloring": c.map(|c| c.to_json())});
                    writeln!(out, "{v}")?;
                } else {
                    writeln!(out, "injective grid construction: {}", c.is_some())?;
                    if let Some(c) = c {
                        writeln!(out, "{c}")?;
                    }
                }
            } else if spatial {
                let w = has_injective_spatial_embedding(&g)?;
                if json {
                    let v = serde_json::json!({
                        "injective_spatial_embedding": w.is_some(),
                        "indices": w.as_ref().map(|w| [w.indices.0, w.indices.1]),
                        "colorings": w.as_ref().map(|w| [w.colorings.0.to_json(), w.colorings.1.to_json()]),
                    });
                    writeln!(out, "{v}")?;
                } else {
                    writeln!(out, "injective spatial embedding: {}", w.is_some())?;
                    if let Some(w) = w {
                        writeln!(out, "NAC-colorings {} and {}", w.indices.0, w.indices.1)?;
                        writeln!(out, "{}\n{}", w.colorings.0, w.colorings.1)?;
                    }
                }
            } else {
                let status = movability_status(&g)?;
                if json {
                    writeln!(out, "{}", status.to_json())?;
                } else {
                    writeln!(out, "{status}")?;
                }
            }
        }
        Command::Cdc { input, json } => {
            let g = load_graph(&input, stdin)?;
            let trace = constant_distance_closure(&g);
            if json {
                writeln!(out, "{}", trace.to_json())?;
            } else {
                writeln!(out, "{trace}")?;
            }
        }
        Command::Catalog { name } => match name {
            None => {
                for n in crate::graph::catalog_names() {
                    writeln!(out, "{n}")?;
                }
            }
            Some(n) => {
                let g = crate::graph::parse_catalog(&n).map_err(|e| CliError::Input(e.to_string()))?;
                writeln!(out, "{}", graph_to_json(&g))?;
            }
        },
    }
    Ok(())
}

fn svg_options(o: &OutputArgs) -> Result<SvgOptions, CliError> {
    if o.frames < 2 {
        return Err(CliError::Usage(format!("--frames must be at least 2, got {}", o.frames)));
    }
    let duration = parse_rational(&o.duration)
        .filter(|d| d > &int(0))
        .ok_or_else(|| CliError::Usage(format!("--duration must be a positive number, got {:?}", o.duration)))?;
    Ok(SvgOptions { frames: o.frames, duration_s: duration, ..Default::default() })
}

fn emit_motion(m: &ParametricMotion, o: &OutputArgs, svg: SvgOptions, out: &mut dyn Write) -> Result<(), CliError> {
    if let Some(path) = &o.svg {
        let doc = animation_svg(m, &svg)?;
        write_svg(std::path::Path::new(path), &doc)?;
    }
    if o.json {
        writeln!(out, "{}", m.to_json())?;
    } else {
        writeln!(out, "{}", m.parametrization())?;
    }
    if o.analyze {
        let a = analyze_motion(m);
        for (e, l) in &a.labeling {
            writeln!(out, "length^2 {e}: {}", crate::algebra::fmt_rational(l))?;
        }
        for e in &a.varying_edges {
            writeln!(out, "length^2 {e}: not constant")?;
        }
        writeln!(out, "flex: {}, nontrivial: {}, proper: {}", a.is_flex, a.nontrivial, a.proper)?;
    }
    Ok(())
}
