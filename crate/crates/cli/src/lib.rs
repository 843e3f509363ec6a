//! Document format and command dispatch behind the `hx` binary.
//!
//! A document is a JSON object describing a graph and, optionally, either a
//! unicyclizer or a list of 2-cell boundaries:
//!
//! ```json
//! {"vertices": 2, "edges": [[0,1],[0,1],[0,1]], "unicyclizer": [[1,-1,0]]}
//! ```
//!
//! Every command returns one JSON object. Integers that fit in 64 bits are
//! JSON numbers, larger ones strings; rationals are always `"p/q"` strings.

use std::fmt;
use std::str::FromStr;

use hx_core::complex::{ChainComplex, HomologyGroup};
use hx_core::linalg::rank;
use hx_core::oracle::{verify_all, verify_named, VerificationReport, CHECK_NAMES};
use hx_core::spanning::{spanning_trees, SpanningTree};
use hx_core::{IntMatrix, Multigraph, Unicyclization, DEFAULT_EDGE_CAP};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("malformed document at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid document: {0}")]
    Schema(String),
    #[error("invalid option: {0}")]
    Option(String),
    #[error(transparent)]
    Core(#[from] hx_core::Error),
}

/// On-disk description of a graph with an optional unicyclizer or faces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unicyclizer: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub faces: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_tree: Option<Vec<usize>>,
}

/// Parses and checks shapes and index ranges. Whether the unicyclizer
/// satisfies its axioms is left to the commands.
pub fn parse_document(text: &str) -> Result<ComplexDocument, CliError> {
    let doc: ComplexDocument = serde_json::from_str(text)
        .map_err(|e| CliError::Parse { line: e.line(), column: e.column(), message: e.to_string() })?;
    doc.check()?;
    Ok(doc)
}

pub fn serialize_document(doc: &ComplexDocument) -> String {
    serde_json::to_string(doc).expect("documents always serialize")
}

impl ComplexDocument {
    fn check(&self) -> Result<(), CliError> {
        if self.vertices == 0 {
            return Err(CliError::Schema("\"vertices\" must be at least 1".into()));
        }
        for (i, [t, h]) in self.edges.iter().enumerate() {
            if *t >= self.vertices || *h >= self.vertices {
                return Err(CliError::Schema(format!(
                    "edge {i} is [{t}, {h}] but vertices are numbered 0..{}",
                    self.vertices
                )));
            }
        }
        if self.unicyclizer.is_some() && self.faces.is_some() {
            return Err(CliError::Schema("give either \"unicyclizer\" or \"faces\", not both".into()));
        }
        for (field, cols) in [("unicyclizer", &self.unicyclizer), ("faces", &self.faces)] {
            for (c, col) in cols.iter().flatten().enumerate() {
                if col.len() != self.edges.len() {
                    return Err(CliError::Schema(format!(
                        "{field} column {c} has {} entries, expected one per edge ({})",
                        col.len(),
                        self.edges.len()
                    )));
                }
            }
        }
        if let Some(tree) = &self.basis_tree {
            if let Some(e) = tree.iter().find(|&&e| e >= self.edges.len()) {
                return Err(CliError::Schema(format!("basis_tree edge {e} out of range")));
            }
        }
        Ok(())
    }

    pub fn graph(&self) -> Result<Multigraph, CliError> {
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|&[t, h]| (t, h)).collect();
        Ok(Multigraph::from_pairs(self.vertices, &pairs)?)
    }

    fn columns(&self, cols: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_columns(self.edges.len(), cols).expect("column lengths checked on parse")
    }

    /// The unicyclizer as given, or the empty one when neither field is set.
    /// Faces are returned unfiltered.
    pub fn partial(&self) -> IntMatrix {
        match (&self.unicyclizer, &self.faces) {
            (Some(c), _) | (None, Some(c)) => self.columns(c),
            (None, None) => IntMatrix::zeros(self.edges.len(), 0),
        }
    }

    pub fn complex(&self) -> Result<ChainComplex, CliError> {
        Ok(ChainComplex::from_graph_and_faces(&self.graph()?, &self.partial())?)
    }

    pub fn unicyclization(&self, cap: usize) -> Result<Unicyclization, CliError> {
        let g = self.graph()?;
        let a = match &self.faces {
            Some(f) => Unicyclization::from_faces(g.clone(), &self.columns(f))?,
            None => Unicyclization::new(g.clone(), self.partial())?,
        };
        let a = match &self.basis_tree {
            Some(t) => a.rebase(&SpanningTree::new(&g, t.clone())?)?,
            None => a,
        };
        Ok(a.with_cap(cap))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    Trees,
    Cycletrees,
    Homology,
    Lambda,
    Winding,
    Split,
    Verify,
}

impl FromStr for Command {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "validate" => Self::Validate,
            "trees" => Self::Trees,
            "cycletrees" => Self::Cycletrees,
            "homology" => Self::Homology,
            "lambda" => Self::Lambda,
            "winding" => Self::Winding,
            "split" => Self::Split,
            "verify" => Self::Verify,
            other => return Err(CliError::Option(format!("unknown command {other:?}"))),
        })
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Validate => "validate",
            Self::Trees => "trees",
            Self::Cycletrees => "cycletrees",
            Self::Homology => "homology",
            Self::Lambda => "lambda",
            Self::Winding => "winding",
            Self::Split => "split",
            Self::Verify => "verify",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub dim: Option<usize>,
    pub chain: Option<String>,
    pub edge: Option<usize>,
    pub list: bool,
    pub raw_sign: bool,
    pub all: bool,
    pub checks: Vec<String>,
    pub seed: u64,
    pub cap: usize,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            dim: None,
            chain: None,
            edge: None,
            list: false,
            raw_sign: false,
            all: false,
            checks: Vec::new(),
            seed: 0,
            cap: DEFAULT_EDGE_CAP,
        }
    }
}

/// A command's JSON output and whether it counts as success.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub output: Value,
    pub success: bool,
}

impl Outcome {
    fn ok(output: Value) -> Self {
        Self { output, success: true }
    }
}

pub fn int_json(x: &BigInt) -> Value {
    x.to_i64().map_or_else(|| Value::String(x.to_string()), Value::from)
}

fn ints_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int_json).collect())
}

/// `"p/q"` in lowest terms with `q > 0`, including `q = 1`.
pub fn rational_string(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

fn homology_json(dim: usize, h: &HomologyGroup) -> Value {
    json!({"dim": dim, "rank": h.rank, "torsion": ints_json(&h.torsion)})
}

pub fn parse_chain(csv: &str, len: usize) -> Result<Vec<BigInt>, CliError> {
    let coeffs: Vec<BigInt> = csv
        .split(',')
        .map(|s| s.trim().parse::<BigInt>().map_err(|_| CliError::Option(format!("--chain entry {s:?} is not an integer"))))
        .collect::<Result<_, _>>()?;
    if coeffs.len() != len {
        return Err(CliError::Option(format!("--chain has {} entries, expected one per edge ({len})", coeffs.len())));
    }
    Ok(coeffs)
}

pub fn run(command: Command, doc: &ComplexDocument, opts: &Options) -> Result<Outcome, CliError> {
    match command {
        Command::Validate => validate(doc),
        Command::Trees => {
            let g = doc.graph()?;
            let trees = spanning_trees(&g, opts.cap)?;
            let mut out = json!({"k": trees.len()});
            if opts.list {
                out["trees"] = json!(trees.iter().map(SpanningTree::edges).collect::<Vec<_>>());
            }
            Ok(Outcome::ok(out))
        }
        Command::Cycletrees => {
            let a = doc.unicyclization(opts.cap)?;
            let items: Vec<Value> = a
                .cycletree_windings()?
                .iter()
                .map(|(ct, w)| json!({"edges": ct.edges(), "cycle": ints_json(ct.cycle()), "winding": int_json(w)}))
                .collect();
            Ok(Outcome::ok(json!({"count": items.len(), "cycletrees": items})))
        }
        Command::Homology => {
            let x = doc.complex()?;
            let out = match opts.dim {
                Some(d) => homology_json(d, &x.homology(d)?),
                None => {
                    let groups = (0..=x.top_dim()).map(|d| Ok(homology_json(d, &x.homology(d)?))).collect::<Result<Vec<_>, CliError>>()?;
                    json!({"homology": groups})
                }
            };
            Ok(Outcome::ok(out))
        }
        Command::Lambda => {
            let a = doc.unicyclization(opts.cap)?;
            let l = if opts.raw_sign { a.lambda_raw()? } else { a.lambda()? };
            Ok(Outcome::ok(json!({"lambda": ints_json(&l), "k": int_json(a.tree_number()), "tau": int_json(a.torsion())})))
        }
        Command::Winding => {
            let a = doc.unicyclization(opts.cap)?;
            let csv = opts.chain.as_deref().ok_or_else(|| CliError::Option("winding needs --chain".into()))?;
            let chain = parse_chain(csv, doc.edges.len())?;
            let is_cycle = a.graph().boundary(&chain).iter().all(Zero::is_zero);
            let value = if is_cycle {
                BigRational::from_integer(a.winding(&chain)?)
            } else {
                let rational: Vec<BigRational> = chain.iter().cloned().map(BigRational::from_integer).collect();
                a.extended_winding(&rational)?
            };
            Ok(Outcome::ok(json!({
                "value": rational_string(&value),
                "chain": ints_json(&chain),
                "method": if is_cycle { "determinant" } else { "extended" },
                "basis_tree": a.basis().tree().edges(),
            })))
        }
        Command::Split => {
            let a = doc.unicyclization(opts.cap)?;
            let sigma = opts.edge.ok_or_else(|| CliError::Option("split needs --edge".into()))?;
            let (mut with, mut without) = a.split_lambda(sigma)?;
            if !opts.raw_sign {
                let raw = a.lambda_raw()?;
                if raw.iter().rev().find(|x| !x.is_zero()).is_some_and(Signed::is_negative) {
                    for x in with.iter_mut().chain(without.iter_mut()) {
                        *x = -&*x;
                    }
                }
            }
            Ok(Outcome::ok(json!({
                "edge": sigma,
                "lambda_with": ints_json(&with),
                "lambda_without": ints_json(&without),
                "winding_difference": int_json(&a.winding_difference(sigma)?),
            })))
        }
        Command::Verify => {
            let a = doc.unicyclization(opts.cap)?;
            let report = verify(&a, opts)?;
            let success = report.overall;
            Ok(Outcome { output: serde_json::to_value(report).expect("reports serialize"), success })
        }
    }
}

fn verify(a: &Unicyclization, opts: &Options) -> Result<VerificationReport, CliError> {
    if opts.all || opts.checks.is_empty() {
        return Ok(verify_all(a, opts.seed));
    }
    let mut merged = VerificationReport::new(hx_core::oracle::describe(a), opts.seed);
    for name in &opts.checks {
        let report = verify_named(a, name, opts.seed).ok_or_else(|| {
            CliError::Option(format!("unknown check {name:?}; known checks: {}", CHECK_NAMES.join(", ")))
        })?;
        merged.merge(report);
    }
    Ok(merged)
}

/// Reports each axiom separately; failure of any is a validation failure.
fn validate(doc: &ComplexDocument) -> Result<Outcome, CliError> {
    let g = doc.graph()?;
    let connected = g.is_connected();
    let partial = match &doc.faces {
        Some(_) => match doc.unicyclization(usize::MAX) {
            Ok(a) => a.partial().clone(),
            Err(_) => doc.partial(),
        },
        None => doc.partial(),
    };
    let independent = rank(&partial) == partial.cols();
    let closed = partial.columns().all(|c| g.boundary(&c).iter().all(Zero::is_zero));
    let rank_one = connected
        && closed
        && ChainComplex::from_graph_and_faces(&g, &partial).and_then(|x| x.homology(1)).is_ok_and(|h| h.rank == 1);
    let built = doc.unicyclization(usize::MAX);
    let mut out = json!({
        "valid": built.is_ok(),
        "connected": connected,
        "axioms": {
            "independent_columns": independent,
            "columns_are_cycles": closed,
            "homology_rank_one": rank_one,
        },
        "columns": partial.cols(),
    });
    match built {
        Ok(a) => {
            out["tau"] = int_json(a.torsion());
            out["k"] = int_json(a.tree_number());
            Ok(Outcome::ok(out))
        }
        Err(e) => {
            out["error"] = Value::String(e.to_string());
            Ok(Outcome { output: out, success: false })
        }
    }
}
