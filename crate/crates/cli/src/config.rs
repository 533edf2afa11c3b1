use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use ymbeta::lie::{
    adjoint, parse_algebra, parse_representation, validate_algebra, validate_representation, LieAlgebraData,
    RepresentationData, SpecialUnitary,
};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Doc,
}

/// A built-in representation and how many copies of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepArg {
    pub name: String,
    pub multiplicity: usize,
}

impl FromStr for RepArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (name, mult) = s.split_once(':').unwrap_or((s, "1"));
        let multiplicity: usize = mult.parse().map_err(|_| format!("multiplicity {mult:?} is not a number"))?;
        if multiplicity == 0 {
            return Err("multiplicity must be positive".into());
        }
        if name.is_empty() {
            return Err("missing representation name".into());
        }
        Ok(Self { name: name.to_string(), multiplicity })
    }
}

/// `g0,λmin,λmax,n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingRequest {
    pub g0: f64,
    pub lambda_min: f64,
    pub lambda_max: f64,
    pub samples: usize,
}

impl FromStr for CouplingRequest {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [g0, lo, hi, n] = parts[..] else {
            return Err(format!("expected g0,lambda_min,lambda_max,n, got {s:?}"));
        };
        let num = |x: &str| x.parse::<f64>().map_err(|_| format!("{x:?} is not a number"));
        let req = Self {
            g0: num(g0)?,
            lambda_min: num(lo)?,
            lambda_max: num(hi)?,
            samples: n.parse().map_err(|_| format!("{n:?} is not a sample count"))?,
        };
        if !(req.g0 > 0.0 && req.lambda_min > 0.0 && req.lambda_max >= req.lambda_min) || req.samples == 0 {
            return Err("need g0 > 0, 0 < lambda_min <= lambda_max and n >= 1".into());
        }
        Ok(req)
    }
}

impl CouplingRequest {
    /// Logarithmically spaced scales from `lambda_min` to `lambda_max`.
    pub fn lambdas(&self) -> Vec<f64> {
        if self.samples == 1 {
            return vec![self.lambda_min];
        }
        let (a, b) = (self.lambda_min.ln(), self.lambda_max.ln());
        (0..self.samples).map(|i| (a + (b - a) * i as f64 / (self.samples - 1) as f64).exp()).collect()
    }
}

#[derive(Debug, Parser)]
#[command(name = "ymbeta", version, about = "One-loop beta coefficient of first-order Yang-Mills theory")]
pub struct Args {
    /// `su2` to `su5`, or a TOML algebra file.
    #[arg(long, default_value = "su3")]
    pub algebra: String,

    /// Built-in matter representation, repeatable: adjoint, fund or fundc.
    #[arg(long = "rep", value_name = "NAME:MULT")]
    pub reps: Vec<RepArg>,

    /// TOML representation file, repeatable.
    #[arg(long = "rep-file", value_name = "PATH")]
    pub rep_files: Vec<PathBuf>,

    /// Trivialization of the cohomology: action or ff.
    #[arg(long, default_value = ymbeta::cohomology::DEFAULT_FRAMING)]
    pub framing: String,

    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Tabulate the running coupling.
    #[arg(long = "run-coupling", value_name = "G0,LMIN,LMAX,N")]
    pub run_coupling: Option<CouplingRequest>,

    /// Run the reference-value suite instead of a single configuration.
    #[arg(long)]
    pub verify: bool,

    /// Worker threads for the library's parallel loops.
    #[arg(long)]
    pub threads: Option<usize>,
}

pub struct Matter {
    pub name: String,
    pub multiplicity: usize,
    pub rep: RepresentationData,
}

pub struct Loaded {
    pub algebra: LieAlgebraData,
    pub matter: Vec<Matter>,
}

fn builtin_rank(s: &str) -> Option<usize> {
    let n: usize = s.strip_prefix("su")?.trim_matches(|c| c == '(' || c == ')').parse().ok()?;
    (2..=5).contains(&n).then_some(n)
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.to_path_buf(), message: e.to_string() })
}

fn check_algebra(l: &LieAlgebraData) -> Result<(), CliError> {
    let report = validate_algebra(l).map_err(|e| CliError::Lie(e.to_string()))?;
    if report.is_empty() {
        Ok(())
    } else {
        Err(CliError::Lie(format!("algebra {} fails validation: {report}", l.name)))
    }
}

fn check_rep(l: &LieAlgebraData, r: &RepresentationData) -> Result<(), CliError> {
    let report = validate_representation(l, r).map_err(|e| CliError::Lie(e.to_string()))?;
    if report.is_empty() {
        Ok(())
    } else {
        Err(CliError::Lie(format!("representation {} fails validation: {report}", r.name)))
    }
}

impl Args {
    pub fn load(&self) -> Result<Loaded, CliError> {
        let builtin = builtin_rank(&self.algebra).map(SpecialUnitary::new);
        let algebra = match &builtin {
            Some(g) => g.algebra().clone(),
            None => {
                let path = Path::new(&self.algebra);
                if !path.exists() {
                    return Err(CliError::Usage(format!(
                        "--algebra {:?} is neither su2..su5 nor an existing file",
                        self.algebra
                    )));
                }
                parse_algebra(&read(path)?).map_err(|e| CliError::Format { path: path.to_path_buf(), message: e.to_string() })?
            }
        };
        check_algebra(&algebra)?;
        let mut matter = Vec::new();
        for shape in &self.reps {
            let rep = match &builtin {
                Some(g) => g.representation(&shape.name),
                None => (shape.name == "adjoint").then(|| adjoint(&algebra)),
            }
            .ok_or_else(|| CliError::Usage(format!("no built-in representation {:?} for {}", shape.name, algebra.name)))?;
            check_rep(&algebra, &rep)?;
            matter.push(Matter { name: shape.name.clone(), multiplicity: shape.multiplicity, rep });
        }
        for path in &self.rep_files {
            let rep = parse_representation(&read(path)?)
                .map_err(|e| CliError::Format { path: path.clone(), message: e.to_string() })?;
            check_rep(&algebra, &rep)?;
            matter.push(Matter { name: rep.name.clone(), multiplicity: 1, rep });
        }
        Ok(Loaded { algebra, matter })
    }
}

impl Loaded {
    pub fn total_matter(&self) -> RepresentationData {
        self.matter
            .iter()
            .fold(RepresentationData::zero(), |acc, m| acc.direct_sum(&m.rep.repeated(m.multiplicity)))
    }
}
