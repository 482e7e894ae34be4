use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::sync::Arc;

use anyhow::{bail, Context};
use bilax_core::bilax::{CheckConfig, Normalisation, PoolConfig, Suite};
use bilax_core::centre::Centre;
use bilax_core::group::{FiniteGroup, GroupSpec};
use bilax_core::rep::RepCategory;
use clap::{Args, ValueEnum};

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    /// Builtin group: z2, z3, z4, z2xz2, s3, d4, q8.
    #[arg(long, conflicts_with = "spec")]
    pub group: Option<String>,
    /// Group-spec JSON file with `name`, `order` and a multiplication `table`.
    #[arg(long)]
    pub spec: Option<PathBuf>,
    /// Largest accepted deviation.
    #[arg(long, default_value_t = 1e-8, allow_negative_numbers = true)]
    pub tol: f64,
    /// Seed for irreducible bases and the test pool.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest object dimension in the test pool; at least the group order.
    #[arg(long, default_value_t = 16, allow_negative_numbers = true)]
    pub cap: i64,
    /// Output file; stdout if omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteArg {
    Lax,
    Oplax,
    Braided,
    Lemmas,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Lax => Suite::Lax,
            SuiteArg::Oplax => Suite::Oplax,
            SuiteArg::Braided => Suite::Braided,
            SuiteArg::Lemmas => Suite::Lemmas,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NormalisationArg {
    /// `v1 ∘ u2 = id`.
    #[default]
    Inclusive,
    /// `u2` scaled by the global dimension.
    Coherent,
}

impl From<NormalisationArg> for Normalisation {
    fn from(n: NormalisationArg) -> Self {
        match n {
            NormalisationArg::Inclusive => Normalisation::Inclusive,
            NormalisationArg::Coherent => Normalisation::Coherent,
        }
    }
}

/// Validated run configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub group: FiniteGroup,
    pub tolerance: f64,
    pub seed: u64,
    pub cap: usize,
    pub out: Option<PathBuf>,
}

/// A usage problem: reported with exit code 2.
#[derive(Debug)]
pub struct UsageError(pub anyhow::Error);

impl RunConfig {
    pub fn from_args(args: &RunArgs) -> Result<Self, UsageError> {
        Self::load(args).map_err(UsageError)
    }

    fn load(args: &RunArgs) -> anyhow::Result<Self> {
        if !(args.tol.is_finite() && args.tol > 0.0) {
            bail!("--tol must be a positive number, got {}", args.tol);
        }
        let group = match (&args.group, &args.spec) {
            (Some(name), None) => FiniteGroup::builtin(name)?,
            (None, Some(path)) => {
                let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                let spec: GroupSpec =
                    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
                FiniteGroup::from_spec(&spec)?
            }
            _ => bail!("exactly one of --group or --spec is required"),
        };
        if args.cap < group.order() as i64 {
            bail!("--cap must be at least the group order {}, got {}", group.order(), args.cap);
        }
        Ok(Self {
            group,
            tolerance: args.tol,
            seed: args.seed,
            cap: args.cap as usize,
            out: args.out.clone(),
        })
    }

    pub fn centre(&self) -> anyhow::Result<Centre> {
        let cat = RepCategory::new(self.group.clone(), self.seed)?;
        Ok(Centre::new(Arc::new(cat))?)
    }

    pub fn pool(&self) -> PoolConfig {
        PoolConfig { cap: self.cap, seed: self.seed, ..PoolConfig::default() }
    }

    pub fn check(&self, normalisation: Normalisation) -> CheckConfig {
        CheckConfig { tolerance: self.tolerance, pool: self.pool(), normalisation, ..CheckConfig::default() }
    }

    /// Writes `json` to `--out`, or stdout.
    pub fn emit(&self, json: &str) -> anyhow::Result<()> {
        match &self.out {
            Some(path) => fs::write(path, format!("{json}\n")).with_context(|| format!("writing {}", path.display())),
            None => match writeln!(io::stdout().lock(), "{json}") {
                Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
                other => Ok(other?),
            },
        }
    }
}
