use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::ValueEnum;
use pcube::chem::{
    build_benzenoid, build_c4c8, system_indices, BenzenoidSpec, C4C8Spec, DirectionTag,
    PlanarSystem,
};
use pcube::indices::{
    cut_summary, partition_contributions, weighted_indices, IndexPair, VertexEdgeWeightedGraph,
};
use pcube::quotient::{validate_coarser, CoarserPartition};
use pcube::theta::recognize_partial_cube;
use pcube::treelin::tree_indices;
use pcube::{Error as CoreError, Graph, PartialCube, Recognition};
use serde::Serialize;

use crate::format::{CellFile, GraphFile, InputFile, Lattice};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// All-pairs distances.
    Brute,
    /// One term per Θ-class.
    Cut,
    /// Sum over quotient graphs of a class grouping.
    Partition,
}

/// How classes are grouped for `--method partition`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionSpec {
    Finest,
    Coarsest,
    /// One group per lattice direction; cell files only.
    Direction,
    /// Groups of class indices, e.g. `0,1;2`.
    Explicit(Vec<Vec<usize>>),
}

impl FromStr for PartitionSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "finest" => Ok(Self::Finest),
            "coarsest" => Ok(Self::Coarsest),
            "direction" => Ok(Self::Direction),
            _ => s
                .split(';')
                .map(|group| {
                    group
                        .split(',')
                        .map(|c| c.trim().parse::<usize>())
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()
                .map(Self::Explicit)
                .map_err(|_| {
                    format!(
                        "expected finest, coarsest, direction or groups like `0,1;2`, got `{s}`"
                    )
                }),
        }
    }
}

#[derive(Debug, Clone)]
pub struct IndexOptions {
    pub method: Method,
    /// `None` picks `direction` for cell files and `finest` otherwise.
    pub partition: Option<PartitionSpec>,
    pub verbose: bool,
}

/// One row of the verbose per-class table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRow {
    pub class: usize,
    pub size: usize,
    pub n1: u64,
    pub n2: u64,
    pub wiener: u64,
    pub szeged: u64,
}

/// One quotient graph's share of the partition method.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupRow {
    pub group: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub direction: Option<&'static str>,
    pub classes: Vec<usize>,
    pub wiener: u64,
    pub szeged: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub wiener: u64,
    pub szeged: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<ClassRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub groups: Option<Vec<GroupRow>>,
}

impl IndexReport {
    fn plain(p: IndexPair) -> Self {
        Self {
            wiener: p.wiener,
            szeged: p.szeged,
            classes: None,
            groups: None,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("wiener={}\nszeged={}\n", self.wiener, self.szeged);
        for c in self.classes.iter().flatten() {
            writeln!(
                out,
                "class={} size={} n1={} n2={} wiener={} szeged={}",
                c.class, c.size, c.n1, c.n2, c.wiener, c.szeged
            )
            .unwrap();
        }
        for g in self.groups.iter().flatten() {
            write!(out, "group={}", g.group).unwrap();
            if let Some(d) = g.direction {
                write!(out, " direction={d}").unwrap();
            }
            writeln!(
                out,
                " classes={} wiener={} szeged={}",
                join(&g.classes),
                g.wiener,
                g.szeged
            )
            .unwrap();
        }
        out
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn accept(g: &Graph) -> Result<PartialCube, CliError> {
    match recognize_partial_cube(g)? {
        Recognition::Accepted(pc) => Ok(pc),
        Recognition::Rejected(witness) => Err(CliError::NotPartialCube { witness }),
    }
}

fn class_rows(
    pc: &PartialCube,
    vw: Option<&[u64]>,
    ew: Option<&[u64]>,
) -> Result<Vec<ClassRow>, CliError> {
    Ok(cut_summary(pc, vw, ew)?
        .into_iter()
        .map(|s| ClassRow {
            class: s.class,
            size: s.class_size,
            n1: s.n1,
            n2: s.n2,
            wiener: s.wiener,
            szeged: s.szeged,
        })
        .collect())
}

fn total(pairs: impl IntoIterator<Item = IndexPair>) -> Result<IndexPair, CliError> {
    Ok(pairs
        .into_iter()
        .try_fold(IndexPair::default(), IndexPair::checked_add)?)
}

pub fn index(input: &InputFile, opts: &IndexOptions) -> Result<IndexReport, CliError> {
    match input {
        InputFile::Graph(f) => index_graph(f, opts),
        InputFile::Cells(c) => match c.lattice {
            Lattice::C4C8 => {
                index_system(&build_c4c8(&C4C8Spec::new(c.cells.iter().copied()))?, opts)
            }
            Lattice::Benzenoid => index_system(
                &build_benzenoid(&BenzenoidSpec::new(c.cells.iter().copied()))?,
                opts,
            ),
        },
    }
}

fn index_system<T: DirectionTag>(
    sys: &PlanarSystem<T>,
    opts: &IndexOptions,
) -> Result<IndexReport, CliError> {
    let by_direction = matches!(opts.partition, None | Some(PartitionSpec::Direction));
    if opts.method != Method::Partition || !by_direction {
        return index_graph(&GraphFile::unweighted(sys.graph.clone()), opts);
    }
    let report = system_indices(sys)?;
    let mut out = IndexReport::plain(report.total);
    if opts.verbose {
        let pc = accept(&sys.graph)?;
        let cp = pcube::chem::direction_partition(&sys.graph, &sys.tags, pc.theta())?;
        out.classes = Some(class_rows(&pc, None, None)?);
        out.groups = Some(
            report
                .contributions
                .iter()
                .enumerate()
                .map(|(i, c)| GroupRow {
                    group: i,
                    direction: Some(c.direction.name()),
                    classes: cp.group(i).to_vec(),
                    wiener: c.indices.wiener,
                    szeged: c.indices.szeged,
                })
                .collect(),
        );
    }
    Ok(out)
}

fn index_graph(f: &GraphFile, opts: &IndexOptions) -> Result<IndexReport, CliError> {
    let g = &f.graph;
    let vw = f.vertex_weights.as_deref();
    let ew = f.edge_weights.as_deref();
    match opts.method {
        Method::Brute => {
            let n = g.vertex_count();
            let m = g.edge_count();
            let gww = VertexEdgeWeightedGraph::new(
                g.clone(),
                vw.map_or_else(|| vec![1; n], <[u64]>::to_vec),
                ew.map_or_else(|| vec![1; m], <[u64]>::to_vec),
            )?;
            let mut out = IndexReport::plain(weighted_indices(&gww)?);
            if opts.verbose {
                // the table needs Θ-classes; a graph that is not a partial cube gets none
                if let Ok(Recognition::Accepted(pc)) = recognize_partial_cube(g) {
                    out.classes = Some(class_rows(&pc, vw, ew)?);
                }
            }
            Ok(out)
        }
        Method::Cut => {
            let pc = accept(g)?;
            let rows = class_rows(&pc, vw, ew)?;
            let mut out = IndexReport::plain(total(rows.iter().map(|r| IndexPair {
                wiener: r.wiener,
                szeged: r.szeged,
            }))?);
            if opts.verbose {
                out.classes = Some(rows);
            }
            Ok(out)
        }
        Method::Partition => {
            let pc = accept(g)?;
            let cp = match opts.partition.as_ref().unwrap_or(&PartitionSpec::Finest) {
                PartitionSpec::Finest => CoarserPartition::finest(pc.theta()),
                PartitionSpec::Coarsest => CoarserPartition::coarsest(pc.theta()),
                PartitionSpec::Explicit(groups) => validate_coarser(pc.theta(), groups)?,
                PartitionSpec::Direction => {
                    return Err(CliError::Usage(
                        "the direction partition needs a cell file; use finest, coarsest or explicit groups".into(),
                    ))
                }
            };
            let parts = partition_contributions(&pc, &cp, vw, ew)?;
            let mut out = IndexReport::plain(total(parts.iter().copied())?);
            if opts.verbose {
                out.classes = Some(class_rows(&pc, vw, ew)?);
                out.groups = Some(
                    parts
                        .iter()
                        .enumerate()
                        .map(|(i, p)| GroupRow {
                            group: i,
                            direction: None,
                            classes: cp.group(i).to_vec(),
                            wiener: p.wiener,
                            szeged: p.szeged,
                        })
                        .collect(),
                );
            }
            Ok(out)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecognizeReport {
    pub partial_cube: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class_sizes: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl RecognizeReport {
    pub fn to_text(&self) -> String {
        let mut out = format!("partial_cube={}\n", self.partial_cube);
        if let Some(r) = self.classes {
            writeln!(out, "classes={r}").unwrap();
        }
        if let Some(sizes) = &self.class_sizes {
            writeln!(out, "class_sizes={}", join(sizes)).unwrap();
        }
        if let Some(w) = self.witness {
            writeln!(out, "witness={w}").unwrap();
        }
        if let Some(d) = &self.detail {
            writeln!(out, "detail={d}").unwrap();
        }
        out
    }
}

/// Recognition answer. A negative answer is a result, not an error.
pub fn recognize(input: &InputFile) -> Result<RecognizeReport, CliError> {
    let g = input_graph(input)?;
    let rejected = |witness, detail| RecognizeReport {
        partial_cube: false,
        classes: None,
        class_sizes: None,
        witness: Some(witness),
        detail: Some(detail),
    };
    match recognize_partial_cube(&g) {
        Ok(Recognition::Accepted(pc)) => Ok(RecognizeReport {
            partial_cube: true,
            classes: Some(pc.class_count()),
            class_sizes: Some(pc.theta().classes().iter().map(Vec::len).collect()),
            witness: None,
            detail: None,
        }),
        Ok(Recognition::Rejected(w)) => Ok(rejected(w.kind(), w.to_string())),
        Err(e @ CoreError::Disconnected { .. }) => Ok(rejected("disconnected", e.to_string())),
        Err(e) => Err(e.into()),
    }
}

fn input_graph(input: &InputFile) -> Result<Graph, CliError> {
    Ok(match input {
        InputFile::Graph(f) => f.graph.clone(),
        InputFile::Cells(c) => match c.lattice {
            Lattice::C4C8 => build_c4c8(&C4C8Spec::new(c.cells.iter().copied()))?.graph,
            Lattice::Benzenoid => {
                build_benzenoid(&BenzenoidSpec::new(c.cells.iter().copied()))?.graph
            }
        },
    })
}

/// Weighted indices of a tree by the linear sweep.
pub fn tree_index(f: &GraphFile) -> Result<IndexReport, CliError> {
    let n = f.graph.vertex_count();
    let ones;
    let vw = match &f.vertex_weights {
        Some(w) => w.as_slice(),
        None => {
            ones = vec![1; n];
            &ones
        }
    };
    Ok(IndexReport::plain(tree_indices(
        &f.graph,
        vw,
        f.edge_weights.as_deref(),
    )?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Generated {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    #[serde(skip)]
    pub graph_text: String,
    #[serde(skip)]
    pub embed_text: String,
}

impl Generated {
    pub fn to_text(&self) -> String {
        format!(
            "vertices={}\nedges={}\nfaces={}\n",
            self.vertices, self.edges, self.faces
        )
    }

    /// Writes the graph file to `out` and the embedding to `out.embed`.
    pub fn write_to(&self, out: &Path) -> Result<(), CliError> {
        let embed = embed_path(out);
        for (path, text) in [
            (out.to_path_buf(), &self.graph_text),
            (embed, &self.embed_text),
        ] {
            std::fs::write(&path, text).map_err(|source| CliError::Io { path, source })?;
        }
        Ok(())
    }
}

pub fn embed_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".embed");
    PathBuf::from(s)
}

pub fn generate(cells: &CellFile) -> Result<Generated, CliError> {
    match cells.lattice {
        Lattice::C4C8 => Ok(render(
            &build_c4c8(&C4C8Spec::new(cells.cells.iter().copied()))?,
            cells.lattice,
        )),
        Lattice::Benzenoid => Ok(render(
            &build_benzenoid(&BenzenoidSpec::new(cells.cells.iter().copied()))?,
            cells.lattice,
        )),
    }
}

fn render<T: DirectionTag>(sys: &PlanarSystem<T>, lattice: Lattice) -> Generated {
    let mut embed = format!(
        "# {} lattice coordinates and edge directions\n",
        lattice.name()
    );
    for (v, (x, y)) in sys.coords.iter().enumerate() {
        writeln!(embed, "v {v} {x} {y}").unwrap();
    }
    for (e, tag) in sys.tags.iter().enumerate() {
        writeln!(embed, "d {e} {}", tag.name()).unwrap();
    }
    Generated {
        vertices: sys.graph.vertex_count(),
        edges: sys.graph.edge_count(),
        faces: sys.faces.len(),
        graph_text: GraphFile::unweighted(sys.graph.clone()).write(),
        embed_text: embed,
    }
}
