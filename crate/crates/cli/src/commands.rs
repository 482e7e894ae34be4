use std::collections::BTreeMap;

use bilax_core::bilax::{run, CoherenceReport, Pool, Suite};
use bilax_core::centre::{Centre, Obj};
use bilax_oracle::fibre_dims;
use clap::ValueEnum;
use serde::Serialize;

use crate::config::RunConfig;

/// Runs the selected suites and writes the report. Returns whether every
/// entry passed.
pub fn coherence(cfg: &RunConfig, suite: Suite, normalisation: bilax_core::bilax::Normalisation) -> anyhow::Result<bool> {
    let centre = cfg.centre()?;
    let report = run(&centre, &cfg.check(normalisation), suite)?;
    cfg.emit(&serde_json::to_string_pretty(&report)?)?;
    summarise(&report);
    Ok(report.all_pass())
}

/// One line per top-level check family on stderr.
fn summarise(report: &CoherenceReport) {
    let mut families: BTreeMap<&str, (usize, usize, f64)> = BTreeMap::new();
    for e in &report.entries {
        let family = e.id.split('.').next().unwrap_or(&e.id);
        let slot = families.entry(family).or_insert((0, 0, 0.0));
        slot.0 += 1;
        slot.1 += usize::from(!e.pass);
        slot.2 = slot.2.max(e.deviation);
    }
    for (family, (n, failed, worst)) in families {
        eprintln!("{family:<10} {n:>4} checks  {failed:>3} failing  max deviation {worst:.2e}");
    }
    let mut failing: Vec<&str> = report.failures().map(|e| e.id.as_str()).collect();
    failing.dedup();
    if failing.is_empty() {
        eprintln!("{}: all {} checks pass", report.group, report.entries.len());
    } else {
        eprintln!("{}: failing {}", report.group, failing.join(", "));
    }
}

#[derive(Serialize)]
struct Info {
    group: String,
    order: usize,
    irrep_dims: Vec<usize>,
    global_dim: f64,
    sym_unit_dim: usize,
    pool: Vec<PoolObject>,
    pi_ranks: Vec<PairValue>,
}

#[derive(Serialize)]
struct PoolObject {
    label: String,
    dim: usize,
}

#[derive(Serialize)]
struct PairValue {
    left: String,
    right: String,
    value: usize,
}

pub fn info(cfg: &RunConfig) -> anyhow::Result<()> {
    let centre = cfg.centre()?;
    let cat = centre.category();
    let pool = Pool::build(&centre, &cfg.pool())?;
    let mut pi_ranks = Vec::new();
    for c in pool.objects() {
        for d in pool.objects() {
            let value = centre.sym_tensor(c, d)?.object.dim();
            pi_ranks.push(PairValue { left: c.label().into(), right: d.label().into(), value });
        }
    }
    let info = Info {
        group: cfg.group.name().into(),
        order: cfg.group.order(),
        irrep_dims: cat.irreps().iter().map(|i| i.dim).collect(),
        global_dim: cat.global_dim(),
        sym_unit_dim: centre.sym_unit().dim(),
        pool: pool.objects().iter().map(|o| PoolObject { label: o.label().into(), dim: o.dim() }).collect(),
        pi_ranks,
    };
    cfg.emit(&serde_json::to_string_pretty(&info)?)
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Product {
    Sym,
    Conv,
}

#[derive(Serialize)]
struct Table {
    group: String,
    product: &'static str,
    /// Fibre dimensions are listed by group element index.
    objects: Vec<Row>,
    entries: Vec<TableEntry>,
}

#[derive(Serialize)]
struct Row {
    label: String,
    dim: usize,
    fibres: Vec<usize>,
}

#[derive(Serialize)]
struct TableEntry {
    left: String,
    right: String,
    dim: usize,
    /// Read off the half-braiding of the product.
    fibres: Vec<usize>,
    /// Predicted from the factors: `m_g n_g` for `sym`, `Σ_{ab=g} m_a n_b` for `conv`.
    predicted: Vec<usize>,
}

pub fn product_table(cfg: &RunConfig, product: Product) -> anyhow::Result<()> {
    let centre = cfg.centre()?;
    let pool = Pool::build(&centre, &cfg.pool())?;
    let g = &cfg.group;
    let rows: Vec<(Obj, Vec<usize>)> = pool.objects().iter().map(|o| (o.clone(), fibre_dims(&centre, o))).collect();
    let mut entries = Vec::new();
    for (c, fc) in &rows {
        for (d, fd) in &rows {
            let (object, predicted): (Obj, Vec<usize>) = match product {
                Product::Sym => (
                    centre.sym_tensor(c, d)?.object.clone(),
                    g.elements().map(|x| fc[x] * fd[x]).collect(),
                ),
                Product::Conv => {
                    let mut p = vec![0; g.order()];
                    for a in g.elements() {
                        for b in g.elements() {
                            p[g.mul(a, b)] += fc[a] * fd[b];
                        }
                    }
                    (centre.conv_tensor(c, d), p)
                }
            };
            entries.push(TableEntry {
                left: c.label().into(),
                right: d.label().into(),
                dim: object.dim(),
                fibres: fibres_of(&centre, &object),
                predicted,
            });
        }
    }
    let table = Table {
        group: g.name().into(),
        product: match product {
            Product::Sym => "sym",
            Product::Conv => "conv",
        },
        objects: rows
            .iter()
            .map(|(o, f)| Row { label: o.label().into(), dim: o.dim(), fibres: f.clone() })
            .collect(),
        entries,
    };
    cfg.emit(&serde_json::to_string_pretty(&table)?)
}

fn fibres_of(centre: &Centre, o: &Obj) -> Vec<usize> {
    if o.dim() == 0 {
        vec![0; centre.category().group().order()]
    } else {
        fibre_dims(centre, o)
    }
}
