//! Command-line front end. [`run`] takes explicit streams so it can be
//! driven from tests; exit codes are 0 success, 1 negative verdict, 2 bad
//! input or usage.

use std::ffi::OsString;
use std::fmt::Display;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::algebra::{imbalance_vector, Labeling};
use crate::catalog;
use crate::constructions::{
    attach_ornaments, augment_imbalance_one, chain, construct_ddmog, disjoint_union_ddm, weighted_sum_shifted_ddm,
    weighted_sum_zero_shift_ddm, windmill,
};
use crate::dot::{export_dot, export_dot_unlabeled};
use crate::io::{parse, serialize, GraphDocument};
use crate::labeled::{LabeledGraph, Provenance};
use crate::search::{search_labeling, search_orientation, SearchConfig, SearchMode, SearchStatus};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "ddmog",
    version,
    about = "Difference distance magic labelings of oriented graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check whether a labeled graph is DDM and print its weights.
    Verify { file: PathBuf },
    /// Print the imbalance vector and graph imbalance.
    Imbalance { file: PathBuf },
    /// Bundled reference graphs.
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Build a DDM labeled graph.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Exhaustive search.
    #[command(subcommand)]
    Search(SearchCmd),
    /// Export to other formats.
    #[command(subcommand)]
    Export(ExportCmd),
}

#[derive(Debug, Args)]
struct Output {
    /// Write the result here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum CatalogCmd {
    List,
    Get {
        name: String,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Subcommand)]
enum ConstructCmd {
    /// Windmill of k four-wheels sharing a hub.
    Windmill {
        k: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Coalesce the top label of f1 with label 1 of the balanced f2.
    Chain {
        f1: PathBuf,
        f2: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Connected DDM graph of the given order (at least 5).
    Order {
        n: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Add one vertex to a DDM graph of imbalance 1.
    Augment {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Disjoint union of a DDM graph with balanced DDM graphs.
    Union {
        f1: PathBuf,
        #[arg(required = true)]
        rest: Vec<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Attach ell directed 4-cycles at the vertex labeled 2*ell.
    Ornaments {
        file: PathBuf,
        ell: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Weighted sum of g and h; the shift must be 0 or the order of h.
    Wsum {
        g: PathBuf,
        h: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        shift: i64,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Subcommand)]
enum SearchCmd {
    /// Search for DDM labelings of a fixed orientation.
    Labeling {
        file: PathBuf,
        #[arg(long, conflicts_with = "count")]
        all: bool,
        #[arg(long)]
        count: bool,
    },
    /// Decide whether the file's edges, read as undirected, can be oriented DDM.
    Orientation { file: PathBuf },
}

#[derive(Debug, Subcommand)]
enum ExportCmd {
    /// Graphviz DOT; labeled files show labels, otherwise vertex numbers.
    Dot {
        file: PathBuf,
        #[arg(long)]
        weights: bool,
        #[command(flatten)]
        out: Output,
    },
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

/// A failure already mapped to an exit code.
struct Failure(i32, String);

fn usage(msg: impl Display) -> Failure {
    Failure(EXIT_USAGE, msg.to_string())
}

type CmdResult = Result<i32, Failure>;

impl Io<'_> {
    fn read_text(&mut self, path: &Path) -> Result<String, Failure> {
        if path == Path::new("-") {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| usage(format!("stdin: {e}")))?;
            Ok(s)
        } else {
            std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
        }
    }

    fn read_doc(&mut self, path: &Path) -> Result<GraphDocument, Failure> {
        let text = self.read_text(path)?;
        parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
    }

    fn read_labeled(&mut self, path: &Path) -> Result<LabeledGraph, Failure> {
        let doc = self.read_doc(path)?;
        doc.to_labeled(Provenance::leaf("file", path.display().to_string()))
            .map_err(|e| usage(format!("{}: {e}", path.display())))
    }

    fn out(&mut self, s: impl Display) {
        let _ = write!(self.stdout, "{s}");
    }

    fn err(&mut self, s: impl Display) {
        let _ = write!(self.stderr, "{s}");
    }

    /// Writes `text` to the `-o` target or stdout.
    fn emit(&mut self, out: &Output, text: &str) -> Result<(), Failure> {
        match &out.output {
            Some(p) => std::fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
            None => {
                self.out(text);
                Ok(())
            }
        }
    }
}

fn join(xs: &[i64]) -> String {
    xs.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

fn verify(io: &mut Io, file: &Path) -> CmdResult {
    let lg = io.read_labeled(file)?;
    let v = lg.verify();
    io.out(format!("weights: {}\n", join(v.weights.as_slice())));
    if v.is_ddm {
        io.out("DDM\n");
        Ok(EXIT_OK)
    } else {
        if !v.is_standard_bijection {
            io.out("labels are not a bijection onto 1..n\n");
        }
        io.out("not DDM\n");
        Ok(EXIT_NEGATIVE)
    }
}

fn imbalance(io: &mut Io, file: &Path) -> CmdResult {
    let doc = io.read_doc(file)?;
    let imb = imbalance_vector(&doc.graph);
    io.out(format!("imbalance vector: {}\n", join(&imb.imbalances)));
    io.out(format!("graph imbalance: {}\n", imb.graph_imbalance));
    Ok(EXIT_OK)
}

fn catalog_cmd(io: &mut Io, cmd: &CatalogCmd) -> CmdResult {
    match cmd {
        CatalogCmd::List => {
            io.out(format!(
                "{:<28} {:>5} {:>5} {:>4} {:>9}\n",
                "name", "order", "edges", "ddm", "imbalance"
            ));
            for s in catalog::list() {
                io.out(format!(
                    "{:<28} {:>5} {:>5} {:>4} {:>9}\n",
                    s.name,
                    s.order,
                    s.edge_count,
                    if s.is_ddm { "yes" } else { "no" },
                    s.imbalance
                ));
            }
            Ok(EXIT_OK)
        }
        CatalogCmd::Get { name, out } => {
            let entry = catalog::get(name).map_err(usage)?;
            io.emit(out, &serialize(&entry.document))?;
            Ok(EXIT_OK)
        }
    }
}

fn construct(io: &mut Io, cmd: &ConstructCmd) -> CmdResult {
    let (lg, out) = match cmd {
        ConstructCmd::Windmill { k, out } => (windmill(*k).map_err(usage)?, out),
        ConstructCmd::Order { n, out } => (construct_ddmog(*n).map_err(usage)?, out),
        ConstructCmd::Chain { f1, f2, out } => {
            let (a, b) = (io.read_labeled(f1)?, io.read_labeled(f2)?);
            (chain(&a, &b).map_err(usage)?, out)
        }
        ConstructCmd::Augment { file, out } => {
            let a = io.read_labeled(file)?;
            (augment_imbalance_one(&a).map_err(usage)?, out)
        }
        ConstructCmd::Union { f1, rest, out } => {
            let a = io.read_labeled(f1)?;
            let rest = rest.iter().map(|p| io.read_labeled(p)).collect::<Result<Vec<_>, _>>()?;
            (disjoint_union_ddm(&a, &rest).map_err(usage)?, out)
        }
        ConstructCmd::Ornaments { file, ell, out } => {
            let a = io.read_labeled(file)?;
            (attach_ornaments(&a, *ell).map_err(usage)?, out)
        }
        ConstructCmd::Wsum { g, h, shift, out } => {
            let (a, b) = (io.read_labeled(g)?, io.read_labeled(h)?);
            let lg = if *shift == 0 {
                weighted_sum_zero_shift_ddm(&a, &b)
            } else if *shift == b.order() as i64 {
                weighted_sum_shifted_ddm(&a, &b)
            } else {
                return Err(usage(format!(
                    "--shift must be 0 or the order of h ({}), got {shift}",
                    b.order()
                )));
            };
            (lg.map_err(usage)?, out)
        }
    };
    let comments = lg
        .provenance
        .to_string()
        .lines()
        .map(str::to_string)
        .collect::<Vec<_>>();
    let doc = GraphDocument::from_labeled(&lg).with_comments(comments);
    io.emit(out, &serialize(&doc))?;
    let summary = format!(
        "order {}, edges {}, imbalance {}, DDM: {}\n",
        lg.order(),
        lg.graph.edge_count(),
        lg.imbalance(),
        if lg.is_ddm() { "yes" } else { "no" }
    );
    if out.output.is_some() {
        io.out(summary);
    } else {
        io.err(summary);
    }
    Ok(if lg.is_ddm() { EXIT_OK } else { EXIT_NEGATIVE })
}

fn search(io: &mut Io, cmd: &SearchCmd) -> CmdResult {
    match cmd {
        SearchCmd::Labeling { file, all, count } => {
            let doc = io.read_doc(file)?;
            let mode = if *all {
                SearchMode::All
            } else if *count {
                SearchMode::Count
            } else {
                SearchMode::First
            };
            let res = search_labeling(&doc.graph, &SearchConfig::with_mode(mode)).map_err(usage)?;
            for f in &res.labelings {
                io.out(format!("{f}\n"));
            }
            match mode {
                SearchMode::Count => io.out(format!("count: {}\n", res.count)),
                _ => io.out(format!("found: {}\n", res.labelings.len())),
            }
            io.err(format!("nodes explored: {}\n", res.nodes_explored));
            Ok(match res.status {
                SearchStatus::Found => EXIT_OK,
                _ => EXIT_NEGATIVE,
            })
        }
        SearchCmd::Orientation { file } => {
            let doc = io.read_doc(file)?;
            let res = search_orientation(doc.order(), &doc.graph.underlying_edges(), &SearchConfig::default())
                .map_err(usage)?;
            io.err(format!(
                "orientations examined: {}, labeling searches: {}\n",
                res.orientations_examined, res.labeling_searches
            ));
            match res.witness {
                Some((g, f)) => {
                    io.out("DDMO\n");
                    let lg = LabeledGraph::new(g, f, Provenance::leaf("search", "orientation witness"))
                        .expect("witness covers its graph");
                    io.out(serialize(&GraphDocument::from_labeled(&lg)));
                    Ok(EXIT_OK)
                }
                None => {
                    io.out("not DDMO\n");
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
    }
}

fn export(io: &mut Io, cmd: &ExportCmd) -> CmdResult {
    let ExportCmd::Dot { file, weights, out } = cmd;
    let doc = io.read_doc(file)?;
    let labeling: Option<Labeling> = doc.labeling().map_err(|e| usage(format!("{}: {e}", file.display())))?;
    let text = match labeling {
        Some(f) => {
            let lg = LabeledGraph::new(doc.graph, f, Provenance::leaf("file", "")).map_err(usage)?;
            export_dot(&lg, *weights)
        }
        None if *weights => return Err(usage("--weights needs a labeled file")),
        None => export_dot_unlabeled(&doc.graph),
    };
    io.emit(out, &text)?;
    Ok(EXIT_OK)
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut io = Io { stdin, stdout, stderr };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if e.use_stderr() {
                io.err(e.render());
            } else {
                io.out(e.render());
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Verify { file } => verify(&mut io, file),
        Command::Imbalance { file } => imbalance(&mut io, file),
        Command::Catalog(c) => catalog_cmd(&mut io, c),
        Command::Construct(c) => construct(&mut io, c),
        Command::Search(c) => search(&mut io, c),
        Command::Export(c) => export(&mut io, c),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            io.err(format!("error: {msg}\n"));
            code
        }
    }
}

/// Entry point for the binary: real process streams.
pub fn main_with_env() -> i32 {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(
        std::env::args_os(),
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}
