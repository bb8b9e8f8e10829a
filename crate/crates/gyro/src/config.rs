//! Run configuration: which suite, on which model, with which chain.

use std::fmt;
use std::path::{Path, PathBuf};

use gyro_core::finite::{product_table, CayleyTable};
use gyro_core::prenorm::DEFAULT_DEPTH;
use gyro_core::{EinsteinModel, LightSpeed, MobiusModel, ToleranceConfig};
use serde_json::Value;

use crate::error::CliError;
use crate::table_io::{load_table, table_from_value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Identities,
    StrongBase,
    Prenorm,
    Metric,
    Admissible,
    TableValidate,
    Subgyrogroups,
    Cosets,
    Search,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Axioms,
        Suite::Identities,
        Suite::StrongBase,
        Suite::Prenorm,
        Suite::Metric,
        Suite::Admissible,
        Suite::TableValidate,
        Suite::Subgyrogroups,
        Suite::Cosets,
        Suite::Search,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Identities => "identities",
            Suite::StrongBase => "strong-base",
            Suite::Prenorm => "prenorm",
            Suite::Metric => "metric",
            Suite::Admissible => "admissible",
            Suite::TableValidate => "table-validate",
            Suite::Subgyrogroups => "subgyrogroups",
            Suite::Cosets => "cosets",
            Suite::Search => "search",
        }
    }

    pub fn summary(self) -> &'static str {
        match self {
            Suite::Axioms => "identity, inverse, left gyroassociativity, gyration automorphism, loop property",
            Suite::Identities => "cancellation laws, closed-form vs derived gyration, gyro-triangle identity",
            Suite::StrongBase => "gyrations map centered balls onto themselves (mobius, einstein)",
            Suite::Prenorm => "prenorm of a neighborhood chain: symmetry, gyration invariance, subadditivity, sandwich",
            Suite::Metric => "quotient metric and pseudometric built from the prenorm",
            Suite::Admissible => "triple condition U(n+1) + (U(n+1) + U(n+1)) in U(n) of a chain",
            Suite::TableValidate => "exact axiom validation of a Cayley table",
            Suite::Subgyrogroups => "all subgyrogroups of a table, flagged for the L-property",
            Suite::Cosets => "left coset partitions by L-subgyrogroups",
            Suite::Search => "gyrogroups of a small order up to relabeling (--order, --max-results)",
        }
    }

    pub fn parse(s: &str) -> Result<Suite, CliError> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            CliError::usage(format!("unknown suite {s:?}; expected one of {}", names.join(", ")))
        })
    }

    /// Suites that only make sense on a Cayley table.
    pub fn needs_table(self) -> bool {
        matches!(self, Suite::TableValidate | Suite::Subgyrogroups | Suite::Cosets)
    }
}

/// `mobius | einstein | table:<path> | cyclic:<n> | klein | product:<A>,<B>`.
#[derive(Debug, Clone, PartialEq)]
pub enum ModelSpec {
    Mobius,
    Einstein,
    Cyclic(usize),
    Klein,
    Table(PathBuf),
    Product(Box<ModelSpec>, Box<ModelSpec>),
}

impl ModelSpec {
    pub fn parse(s: &str) -> Result<ModelSpec, CliError> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("product:") {
            let (a, b) = rest
                .split_once(',')
                .ok_or_else(|| CliError::usage(format!("product model needs two factors, got {s:?}")))?;
            let (a, b) = (ModelSpec::parse(a)?, ModelSpec::parse(b)?);
            if matches!(a, ModelSpec::Product(..)) || matches!(b, ModelSpec::Product(..)) {
                return Err(CliError::usage("nested product models are not supported"));
            }
            return Ok(ModelSpec::Product(Box::new(a), Box::new(b)));
        }
        if let Some(p) = s.strip_prefix("table:") {
            if p.is_empty() {
                return Err(CliError::usage("table: needs a path"));
            }
            return Ok(ModelSpec::Table(PathBuf::from(p)));
        }
        if let Some(n) = s.strip_prefix("cyclic:") {
            let n: usize = n
                .parse()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| CliError::usage(format!("cyclic:<n> needs a positive integer, got {n:?}")))?;
            return Ok(ModelSpec::Cyclic(n));
        }
        match s {
            "mobius" => Ok(ModelSpec::Mobius),
            "einstein" => Ok(ModelSpec::Einstein),
            "klein" => Ok(ModelSpec::Klein),
            _ => Err(CliError::usage(format!(
                "unknown model {s:?}; expected mobius, einstein, klein, cyclic:<n>, table:<path> or product:<A>,<B>"
            ))),
        }
    }
}

impl fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelSpec::Mobius => write!(f, "mobius"),
            ModelSpec::Einstein => write!(f, "einstein"),
            ModelSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            ModelSpec::Klein => write!(f, "klein"),
            ModelSpec::Table(p) => write!(f, "table:{}", p.display()),
            ModelSpec::Product(a, b) => write!(f, "product:{a},{b}"),
        }
    }
}

/// A model ready to run. Products of two tables become one table.
#[derive(Debug, Clone, PartialEq)]
pub enum Carrier {
    Mobius(MobiusModel),
    Einstein(EinsteinModel),
    Table(CayleyTable),
    Mixed(Box<Carrier>, Box<Carrier>),
}

impl Carrier {
    pub fn resolve(spec: &ModelSpec, tol: &ToleranceConfig) -> Result<Carrier, CliError> {
        Ok(match spec {
            ModelSpec::Mobius => Carrier::Mobius(MobiusModel::new(tol.boundary_margin)),
            ModelSpec::Einstein => Carrier::Einstein(EinsteinModel::new(LightSpeed::default(), tol.boundary_margin)),
            ModelSpec::Cyclic(n) => Carrier::Table(CayleyTable::cyclic(*n)?),
            ModelSpec::Klein => Carrier::Table(CayleyTable::klein()),
            ModelSpec::Table(p) => Carrier::Table(load_table(p)?),
            ModelSpec::Product(a, b) => match (Carrier::resolve(a, tol)?, Carrier::resolve(b, tol)?) {
                (Carrier::Table(x), Carrier::Table(y)) => Carrier::Table(product_table(&x, &y)?),
                (x, y) => Carrier::Mixed(Box::new(x), Box::new(y)),
            },
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ChainSpec {
    /// `U_n = {rapidity ≤ t0 · ratio^n}`.
    Radial { t0: f64, ratio: f64, depth: u32 },
    /// Explicit levels of a table; a single subgyrogroup gives the constant chain.
    Finite {
        table: Option<CayleyTable>,
        levels: Option<Vec<Vec<usize>>>,
        subgyrogroup: Option<Vec<usize>>,
        depth: u32,
    },
}

impl Default for ChainSpec {
    fn default() -> Self {
        ChainSpec::Radial {
            t0: 1.0,
            ratio: 0.25,
            depth: DEFAULT_DEPTH,
        }
    }
}

fn index_list(v: &Value, what: &str) -> Result<Vec<usize>, CliError> {
    v.as_array()
        .and_then(|a| a.iter().map(|x| x.as_u64().map(|k| k as usize)).collect::<Option<Vec<_>>>())
        .ok_or_else(|| CliError::usage(format!("chain field {what} must be a list of indices")))
}

impl ChainSpec {
    /// Parses a chain from inline JSON, or from a file when `spec` does not
    /// start with `{`. Relative table paths resolve against the chain file.
    pub fn parse(spec: &str) -> Result<ChainSpec, CliError> {
        let trimmed = spec.trim_start();
        let (text, origin, base) = if trimmed.starts_with('{') {
            (trimmed.to_string(), "--chain".to_string(), None)
        } else {
            let p = Path::new(spec);
            let text = std::fs::read_to_string(p).map_err(|e| CliError::Io {
                path: spec.to_string(),
                message: e.to_string(),
            })?;
            (text, spec.to_string(), p.parent().map(Path::to_path_buf))
        };
        let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Parse {
            path: origin.clone(),
            message: format!("invalid chain JSON: {e}"),
        })?;
        let obj = v.as_object().ok_or_else(|| CliError::usage("chain spec must be a JSON object"))?;
        let depth = match obj.get("depth") {
            None => DEFAULT_DEPTH,
            Some(d) => d
                .as_u64()
                .map(|d| d as u32)
                .ok_or_else(|| CliError::usage("chain field \"depth\" must be a positive integer"))?,
        };
        let number = |k: &str, default: f64| -> Result<f64, CliError> {
            match obj.get(k) {
                None => Ok(default),
                Some(x) => x.as_f64().ok_or_else(|| CliError::usage(format!("chain field \"{k}\" must be a number"))),
            }
        };
        match obj.get("kind").and_then(Value::as_str) {
            Some("radial_rapidity") => Ok(ChainSpec::Radial {
                t0: number("t0", 1.0)?,
                ratio: number("ratio", 0.25)?,
                depth,
            }),
            Some("finite_discrete") => {
                let table = match obj.get("table") {
                    None => None,
                    Some(Value::String(p)) => {
                        let p = PathBuf::from(p);
                        let p = match (&base, p.is_relative()) {
                            (Some(b), true) => b.join(p),
                            _ => p,
                        };
                        Some(load_table(&p)?)
                    }
                    Some(inline @ Value::Object(_)) => Some(table_from_value(inline, &origin)?),
                    Some(_) => return Err(CliError::usage("chain field \"table\" must be a path or a table object")),
                };
                let subgyrogroup = obj.get("subgyrogroup").map(|v| index_list(v, "\"subgyrogroup\"")).transpose()?;
                let levels = match obj.get("levels") {
                    None => None,
                    Some(Value::Array(ls)) => Some(ls.iter().map(|l| index_list(l, "\"levels\"")).collect::<Result<Vec<_>, _>>()?),
                    Some(_) => return Err(CliError::usage("chain field \"levels\" must be a list of index lists")),
                };
                Ok(ChainSpec::Finite {
                    table,
                    levels,
                    subgyrogroup,
                    depth,
                })
            }
            Some(k) => Err(CliError::usage(format!(
                "unknown chain kind {k:?}; expected radial_rapidity or finite_discrete"
            ))),
            None => Err(CliError::usage("chain spec needs a \"kind\"")),
        }
    }

    pub fn depth(&self) -> u32 {
        match self {
            ChainSpec::Radial { depth, .. } | ChainSpec::Finite { depth, .. } => *depth,
        }
    }
}

/// Everything a run depends on. Two runs with equal configs produce the
/// same report apart from its wall time.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub suite: Suite,
    pub model: Option<ModelSpec>,
    pub n_samples: u64,
    pub seed: u64,
    pub tol: ToleranceConfig,
    pub chain: Option<ChainSpec>,
    pub subgyrogroup: Option<Vec<usize>>,
    pub depth: Option<u32>,
    pub out: Option<PathBuf>,
    pub order: Option<usize>,
    pub max_results: Option<usize>,
}

impl RunConfig {
    pub fn new(suite: Suite) -> Self {
        Self {
            suite,
            model: None,
            n_samples: 10_000,
            seed: 42,
            tol: ToleranceConfig::default(),
            chain: None,
            subgyrogroup: None,
            depth: None,
            out: None,
            order: None,
            max_results: None,
        }
    }

    pub fn with_model(mut self, m: ModelSpec) -> Self {
        self.model = Some(m);
        self
    }

    pub fn with_samples(mut self, n: u64) -> Self {
        self.n_samples = n;
        self
    }

    /// The model to run on; continuous suites default to the Möbius disk.
    pub fn model_spec(&self) -> Result<Option<ModelSpec>, CliError> {
        match (&self.model, self.suite) {
            (Some(m), _) => Ok(Some(m.clone())),
            (None, Suite::Search) => Ok(None),
            (None, s) if s.needs_table() => Err(CliError::usage(format!("suite {} needs --model", s.name()))),
            (None, _) => Ok(Some(ModelSpec::Mobius)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn model_specs_round_trip() {
        for s in ["mobius", "einstein", "klein", "cyclic:5", "table:z4.json", "product:cyclic:2,klein", "product:mobius,cyclic:3"] {
            assert_eq!(ModelSpec::parse(s).unwrap().to_string(), s);
        }
        for bad in ["poincare", "cyclic:0", "cyclic:x", "table:", "product:mobius", "product:product:klein,klein,klein"] {
            assert!(matches!(ModelSpec::parse(bad), Err(CliError::Usage(_))), "{bad}");
        }
    }

    #[test]
    fn products_of_tables_collapse() {
        let tol = ToleranceConfig::default();
        let c = Carrier::resolve(&ModelSpec::parse("product:cyclic:2,cyclic:3").unwrap(), &tol).unwrap();
        assert!(matches!(c, Carrier::Table(t) if t.order() == 6));
        let c = Carrier::resolve(&ModelSpec::parse("product:cyclic:2,mobius").unwrap(), &tol).unwrap();
        assert!(matches!(c, Carrier::Mixed(..)));
    }

    #[test]
    fn chain_specs() {
        let c = ChainSpec::parse(r#"{"kind":"radial_rapidity","t0":2.0,"ratio":0.5,"depth":20}"#).unwrap();
        assert_eq!(c, ChainSpec::Radial { t0: 2.0, ratio: 0.5, depth: 20 });
        let c = ChainSpec::parse(r#"{"kind":"finite_discrete","subgyrogroup":[0,2]}"#).unwrap();
        assert!(matches!(c, ChainSpec::Finite { subgyrogroup: Some(ref h), depth: 24, .. } if h == &[0, 2]));
        let inline = r#"{"kind":"finite_discrete","table":{"order":2,"elements":["e","a"],"oplus":[[0,1],[1,0]]},"levels":[[0,1],[0]]}"#;
        assert!(matches!(ChainSpec::parse(inline).unwrap(), ChainSpec::Finite { table: Some(_), levels: Some(_), .. }));
        assert!(ChainSpec::parse(r#"{"kind":"spiral"}"#).is_err());
        assert!(ChainSpec::parse(r#"{"t0":1}"#).is_err());
        assert!(matches!(ChainSpec::parse("/nonexistent/chain.json"), Err(CliError::Io { .. })));
    }

    #[test]
    fn suites_by_name() {
        for s in Suite::ALL {
            assert_eq!(Suite::parse(s.name()).unwrap(), s);
        }
        assert!(Suite::parse("everything").is_err());
    }
}
