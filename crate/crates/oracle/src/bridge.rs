//! Passing between half-braidings and gradings.

use std::sync::Arc;

use bilax_core::centre::{Centre, CentreObject, Obj};
use bilax_core::linalg::{c64, Matrix};
use bilax_core::rep::RepCategory;

use crate::error::{OracleError, Result};
use crate::yd::{convolution, fibrewise, YdModule};

const RECONSTRUCTION_TOL: f64 = 1e-8;
const RANK_TOL: f64 = 1e-7;

/// Reads the grading off the half-braiding. With `F_k = β_k ∘ flip` one has
/// `F_k = Σ_h P_h ⊗ ρ_k(h⁻¹)`, and character orthogonality isolates
/// `P_g = |G|⁻¹ Σ_k d_k tr_k[F_k (1 ⊗ ρ_k(g))]`. This is `β` evaluated on the
/// regular representation, written out over its simple summands.
pub fn to_yd(centre: &Centre, c: &CentreObject) -> Result<YdModule> {
    let group = Arc::new(centre.category().group().clone());
    let module = YdModule::new(group, c.underlying().actions().to_vec(), grading_of(centre, c))
        .map_err(|e| OracleError::ConversionFailure(format!("{}: {e}", c.label())))?;
    let dev = reconstruction_defect(centre, c, &module);
    if dev > RECONSTRUCTION_TOL {
        return Err(OracleError::ConversionFailure(format!(
            "{}: grading does not reproduce the half-braiding (deviation {dev:e})",
            c.label()
        )));
    }
    Ok(module)
}

/// The projectors `P_g` read off `β`, without any validation.
fn grading_of(centre: &Centre, c: &CentreObject) -> Vec<Matrix> {
    let cat = centre.category();
    let group = cat.group();
    let dv = c.dim();
    let order = group.order() as f64;
    let flips: Vec<Matrix> = (0..cat.num_simples())
        .map(|k| after_flip(c.beta(k), dv, cat.irreps()[k].dim))
        .collect();
    group
        .elements()
        .map(|g| {
            let mut p = Matrix::zeros(dv, dv);
            for (k, f) in flips.iter().enumerate() {
                let irrep = &cat.irreps()[k];
                let weight = c64(irrep.dim as f64 / order);
                p = &p + &twisted_trace(f, &irrep.matrices[g]).scale(weight);
            }
            p
        })
        .collect()
}

/// Fibre dimensions `tr P_g` read off `β` without validating the grading;
/// cheap enough for large products.
pub fn fibre_dims(centre: &Centre, c: &CentreObject) -> Vec<usize> {
    grading_of(centre, c).iter().map(|p| p.trace().re.round().max(0.0) as usize).collect()
}

/// Largest relative deviation between `β` and the half-braiding rebuilt from `m`.
fn reconstruction_defect(centre: &Centre, c: &CentreObject, m: &YdModule) -> f64 {
    let cat = centre.category();
    (0..cat.num_simples())
        .map(|k| beta_from_grading(cat, m, k).relative_deviation(c.beta(k)))
        .fold(0.0, f64::max)
}

/// `β_k = Σ_g (P_g ⊗ ρ_k(g⁻¹)) ∘ flip: k ⊗ V -> V ⊗ k`.
pub fn beta_from_grading(cat: &RepCategory, m: &YdModule, k: usize) -> Matrix {
    let group = cat.group();
    let irrep = &cat.irreps()[k];
    let (n, d) = (m.dim(), irrep.dim);
    // (P_g ⊗ ρ(g⁻¹)) ∘ flip, entry ((v, x), (y, w)) = Σ_g P_g[v, w] ρ(g⁻¹)[x, y].
    let mut out = Matrix::zeros(n * d, d * n);
    for g in group.elements() {
        let p = m.projector(g);
        let r = &irrep.matrices[group.inverse(g)];
        for v in 0..n {
            for w in 0..n {
                let pv = p.get(v, w);
                if pv == c64(0.0) {
                    continue;
                }
                for x in 0..d {
                    for y in 0..d {
                        let (row, col) = (v * d + x, y * n + w);
                        out.set(row, col, out.get(row, col) + pv * r.get(x, y));
                    }
                }
            }
        }
    }
    out
}

pub fn from_yd(centre: &Centre, m: &YdModule, label: impl Into<String>) -> Result<Obj> {
    let cat = centre.category();
    if cat.group().order() != m.group().order() {
        return Err(OracleError::InvalidModule("module over a different group".into()));
    }
    let rep = cat.object(m.actions().to_vec())?;
    let beta = (0..cat.num_simples()).map(|k| beta_from_grading(cat, m, k)).collect();
    Ok(centre.object(rep, beta, label)?)
}

/// `to_yd(from_yd(m))` against `m`.
pub fn round_trip_deviation(centre: &Centre, m: &YdModule) -> Result<f64> {
    let obj = from_yd(centre, m, "round trip")?;
    let back = to_yd(centre, &obj)?;
    Ok(m.group()
        .elements()
        .map(|g| {
            let p = back.projector(g).deviation(m.projector(g));
            p.max(back.action(g).deviation(m.action(g)))
        })
        .fold(0.0, f64::max))
}

/// Deviation between the grading of `c ⊗_c d` and the convolution of the
/// gradings of `c` and `d`. Both live on `V ⊗ W`, so the intertwiner is the
/// identity.
///
/// The factors are validated by [`to_yd`]; the product is only compared
/// against the convolution module (which is valid whenever its factors are)
/// and checked to reproduce its own half-braiding.
pub fn conv_agreement(centre: &Centre, c: &Obj, d: &Obj) -> Result<f64> {
    let expected = convolution(&to_yd(centre, c)?, &to_yd(centre, d)?);
    let product = centre.conv_tensor(c, d);
    let read = grading_of(centre, &product);
    let grading = expected
        .projectors()
        .iter()
        .zip(&read)
        .map(|(p, q)| p.deviation(q))
        .fold(0.0, f64::max);
    let action = expected
        .actions()
        .iter()
        .zip(product.underlying().actions())
        .map(|(p, q)| p.deviation(q))
        .fold(0.0, f64::max);
    Ok(grading.max(action).max(reconstruction_defect(centre, &product, &expected)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymAgreement {
    pub rank_pi: usize,
    pub fibre_dim: usize,
    /// Defect of `basis_f† ∘ inclusion_s` as a unitary graded isomorphism
    /// from `c ⊗_s d` to the fibrewise product.
    pub intertwiner_deviation: f64,
}

impl SymAgreement {
    pub fn holds(&self, tol: f64) -> bool {
        self.rank_pi == self.fibre_dim && self.intertwiner_deviation <= tol
    }
}

pub fn sym_agreement(centre: &Centre, c: &Obj, d: &Obj) -> Result<SymAgreement> {
    let (mc, md) = (to_yd(centre, c)?, to_yd(centre, d)?);
    let product = centre.sym_tensor(c, d)?;
    let fib = fibrewise(&mc, &md);
    let rank_pi = product.pi.rank(RANK_TOL);
    let fibre_dim = fib.module.dim();
    let intertwiner_deviation = if product.object.dim() != fibre_dim {
        f64::INFINITY
    } else {
        let ms = to_yd(centre, &product.object)?;
        let u = &fib.basis.adjoint() * &product.inclusion;
        let id = Matrix::identity(fibre_dim);
        let unitary = (&u.adjoint() * &u).deviation(&id).max((&u * &u.adjoint()).deviation(&id));
        unitary.max(ms.morphism_defect(&fib.module, &u))
    };
    Ok(SymAgreement { rank_pi, fibre_dim, intertwiner_deviation })
}

/// Agreement of both products with the oracle over every ordered pair.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PairAgreement {
    pub pairs: usize,
    pub rank_mismatches: Vec<String>,
    pub max_sym_deviation: f64,
    pub max_conv_deviation: f64,
}

impl PairAgreement {
    pub fn holds(&self, tol: f64) -> bool {
        self.rank_mismatches.is_empty() && self.max_sym_deviation <= tol && self.max_conv_deviation <= tol
    }
}

pub fn pair_agreement(centre: &Centre, objects: &[Obj]) -> Result<PairAgreement> {
    let mut out = PairAgreement::default();
    for c in objects {
        for d in objects {
            let sym = sym_agreement(centre, c, d)?;
            if sym.rank_pi != sym.fibre_dim {
                out.rank_mismatches.push(format!(
                    "({}, {}): rank {} vs fibrewise {}",
                    c.label(),
                    d.label(),
                    sym.rank_pi,
                    sym.fibre_dim
                ));
            }
            out.max_sym_deviation = out.max_sym_deviation.max(sym.intertwiner_deviation);
            out.max_conv_deviation = out.max_conv_deviation.max(conv_agreement(centre, c, d)?);
            out.pairs += 1;
        }
    }
    Ok(out)
}

/// `m ∘ flip` for the flip `X ⊗ Y -> Y ⊗ X`, `dim X = p`, `dim Y = q`.
fn after_flip(m: &Matrix, p: usize, q: usize) -> Matrix {
    Matrix::from_fn(m.rows(), p * q, |r, col| m.get(r, (col % q) * p + col / q))
}

/// `tr_2[f (1 ⊗ r)]` for `f` on `V ⊗ K`, `dim K = r.rows()`.
fn twisted_trace(f: &Matrix, r: &Matrix) -> Matrix {
    let d = r.rows();
    let n = f.rows() / d;
    Matrix::from_fn(n, n, |a, b| {
        let mut acc = c64(0.0);
        for x in 0..d {
            for y in 0..d {
                acc += f.get(a * d + x, b * d + y) * r.get(y, x);
            }
        }
        acc
    })
}
