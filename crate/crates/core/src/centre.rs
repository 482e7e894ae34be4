//! The Drinfeld centre Z(Rep(G)).
//!
//! A centre object is a representation `V` with a half-braiding
//! `β_X: X ⊗ V -> V ⊗ X`, stored on simples and extended to any `X` through
//! its isotypic decomposition. Products are cached by operand ids so that an
//! object built twice by the same route is the same object.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use once_cell::race::OnceBox;
use spin::Mutex;

use crate::error::{Error, Result};
use crate::linalg::{
    apply_local, apply_local_right, c64, partial_trace_first, split_idempotent, swap, Matrix,
    DEFAULT_TOLERANCE, RANK_THRESHOLD,
};
use crate::rep::{cap, cup, fresh_id, Rep, RepCategory, RepObject};
use crate::rng::Rng;

pub struct CentreObject {
    id: u64,
    label: String,
    underlying: Rep,
    /// `beta[k]: k ⊗ V -> V ⊗ k`.
    beta: Vec<Matrix>,
    beta_inv: OnceBox<Vec<Matrix>>,
}

pub type Obj = Arc<CentreObject>;

impl core::fmt::Debug for CentreObject {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("CentreObject")
            .field("label", &self.label)
            .field("dim", &self.dim())
            .finish()
    }
}

impl CentreObject {
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn underlying(&self) -> &Rep {
        &self.underlying
    }

    pub fn dim(&self) -> usize {
        self.underlying.dim()
    }

    pub fn beta(&self, k: usize) -> &Matrix {
        &self.beta[k]
    }

    pub fn betas(&self) -> &[Matrix] {
        &self.beta
    }

    pub fn beta_inv(&self, k: usize) -> &Matrix {
        &self.beta_inverses()[k]
    }

    fn beta_inverses(&self) -> &[Matrix] {
        self.beta_inv.get_or_init(|| {
            alloc::boxed::Box::new(
                self.beta
                    .iter()
                    .map(|b| b.inverse().unwrap_or_else(|_| Matrix::zeros(b.cols(), b.rows())))
                    .collect(),
            )
        })
    }
}

#[derive(Clone, Debug)]
pub struct CentreMorphism {
    pub source: Obj,
    pub target: Obj,
    pub mat: Matrix,
}

impl CentreMorphism {
    pub fn identity(c: &Obj) -> Self {
        Self {
            source: c.clone(),
            target: c.clone(),
            mat: Matrix::identity(c.dim()),
        }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &CentreMorphism) -> Result<CentreMorphism> {
        if first.target.id != self.source.id {
            return Err(Error::MorphismMismatch(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.source.label, self.target.label, first.source.label, first.target.label
            )));
        }
        Ok(Self {
            source: first.source.clone(),
            target: self.target.clone(),
            mat: self.mat.compose(&first.mat)?,
        })
    }

    pub fn scale(&self, z: crate::linalg::C64) -> Self {
        Self {
            source: self.source.clone(),
            target: self.target.clone(),
            mat: self.mat.scale(z),
        }
    }

    pub fn add(&self, other: &CentreMorphism) -> Result<CentreMorphism> {
        if self.source.id != other.source.id || self.target.id != other.target.id {
            return Err(Error::MorphismMismatch("sum of morphisms between different objects".into()));
        }
        Ok(Self {
            source: self.source.clone(),
            target: self.target.clone(),
            mat: self.mat.try_add(&other.mat)?,
        })
    }

    /// Relative deviation from `other`; infinite if the endpoints differ.
    pub fn deviation(&self, other: &CentreMorphism) -> f64 {
        if self.source.id != other.source.id || self.target.id != other.target.id {
            return f64::INFINITY;
        }
        self.mat.relative_deviation(&other.mat)
    }
}

/// `c ⊗_s d` as the image of `Π_{c,d}` inside `c ⊗_c d`.
#[derive(Clone, Debug)]
pub struct SymProduct {
    pub object: Obj,
    pub ambient: Obj,
    /// `▽: c ⊗_s d -> c ⊗_c d`.
    pub inclusion: Matrix,
    /// `△: c ⊗_c d -> c ⊗_s d`.
    pub projection: Matrix,
    pub pi: Matrix,
    /// Largest disagreement between the two routings of the half-braiding.
    pub route_deviation: f64,
}

/// Deviations reported by [`Centre::validate`].
#[derive(Clone, Debug, PartialEq)]
pub struct CentreValidation {
    pub equivariance: f64,
    pub min_singular_value: f64,
    pub unit: f64,
    pub multiplicativity: f64,
}

impl CentreValidation {
    pub fn is_valid(&self, tol: f64) -> bool {
        self.equivariance <= tol
            && self.min_singular_value > RANK_THRESHOLD
            && self.unit <= tol
            && self.multiplicativity <= tol
    }
}

pub struct Centre {
    cat: Arc<RepCategory>,
    tol: f64,
    unit_c: Obj,
    unit_s: Obj,
    unit_s_offsets: Vec<usize>,
    simples: Vec<Obj>,
    conv: Mutex<BTreeMap<(u64, u64), Obj>>,
    sym: Mutex<BTreeMap<(u64, u64), Arc<SymProduct>>>,
}

impl core::fmt::Debug for Centre {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Centre").field("category", &self.cat).finish()
    }
}

impl Centre {
    pub fn new(cat: Arc<RepCategory>) -> Result<Self> {
        Self::with_tolerance(cat, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(cat: Arc<RepCategory>, tol: f64) -> Result<Self> {
        let simples: Vec<Obj> = (0..cat.num_simples())
            .map(|k| from_symmetry(&cat, cat.simple(k).clone(), format!("A{k}")))
            .collect();
        let unit_c = simples[0].clone();
        let (unit_s, unit_s_offsets) = build_sym_unit(&cat);
        let centre = Self {
            cat,
            tol,
            unit_c,
            unit_s,
            unit_s_offsets,
            simples,
            conv: Mutex::new(BTreeMap::new()),
            sym: Mutex::new(BTreeMap::new()),
        };
        let check = centre.validate(&centre.unit_s);
        if !check.is_valid(tol.max(1e-8)) {
            return Err(Error::InvalidObject(format!("symmetric unit fails validation: {check:?}")));
        }
        Ok(centre)
    }

    pub fn category(&self) -> &Arc<RepCategory> {
        &self.cat
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    /// `𝕀_c`, the trivial representation.
    pub fn conv_unit(&self) -> &Obj {
        &self.unit_c
    }

    /// `𝕀_s = ⊕_i i ⊗ i*`.
    pub fn sym_unit(&self) -> &Obj {
        &self.unit_s
    }

    /// Offset of the block `i ⊗ i*` inside `𝕀_s`.
    pub fn sym_unit_offset(&self, i: usize) -> usize {
        self.unit_s_offsets[i]
    }

    /// Simple objects of Rep(G) with the symmetry as half-braiding.
    pub fn simple(&self, k: usize) -> &Obj {
        &self.simples[k]
    }

    // ----- objects -----

    /// A representation with the symmetry half-braiding (`A ⊂ Z(A)`).
    pub fn from_rep(&self, x: Rep, label: impl Into<String>) -> Obj {
        from_symmetry(&self.cat, x, label.into())
    }

    /// Validated centre object.
    pub fn object(&self, underlying: Rep, beta: Vec<Matrix>, label: impl Into<String>) -> Result<Obj> {
        if beta.len() != self.cat.num_simples() {
            return Err(Error::InvalidObject("one half-braiding component per simple".into()));
        }
        let obj = make_object(underlying, beta, label.into());
        let check = self.validate(&obj);
        if !check.is_valid(self.tol) {
            return Err(Error::InvalidObject(format!("{check:?}")));
        }
        Ok(obj)
    }

    pub fn object_unchecked(&self, underlying: Rep, beta: Vec<Matrix>, label: impl Into<String>) -> Obj {
        make_object(underlying, beta, label.into())
    }

    /// Transports `c` along a unitary change of basis `u`.
    pub fn conjugate(&self, c: &Obj, u: &Matrix, label: impl Into<String>) -> Obj {
        let underlying = self.cat.conjugate(&c.underlying, u);
        let beta = c
            .beta
            .iter()
            .enumerate()
            .map(|(k, b)| {
                let dk = self.cat.irreps()[k].dim;
                let left = apply_local(1, u, dk, b);
                apply_local_right(&left, dk, &u.adjoint(), 1)
            })
            .collect();
        make_object(underlying, beta, label.into())
    }

    pub fn validate(&self, c: &CentreObject) -> CentreValidation {
        let cat = &self.cat;
        let dv = c.dim();
        let mut equivariance: f64 = 0.0;
        let mut min_sv = f64::INFINITY;
        for (k, b) in c.beta.iter().enumerate() {
            let irr = &cat.irreps()[k];
            if b.shape() != (dv * irr.dim, irr.dim * dv) {
                equivariance = f64::INFINITY;
                continue;
            }
            for g in cat.group().elements() {
                let lhs = &c.underlying.action(g).tensor(&irr.matrices[g]) * b;
                let rhs = b * &irr.matrices[g].tensor(c.underlying.action(g));
                equivariance = equivariance.max(lhs.relative_deviation(&rhs));
            }
            if dv > 0 {
                min_sv = min_sv.min(b.singular_values().last().copied().unwrap_or(0.0));
            }
        }
        if equivariance.is_infinite() {
            return CentreValidation {
                equivariance,
                min_singular_value: 0.0,
                unit: f64::INFINITY,
                multiplicativity: f64::INFINITY,
            };
        }
        let unit = c.beta[0].deviation(&Matrix::identity(dv));
        let mut multiplicativity: f64 = 0.0;
        for i in 0..cat.num_simples() {
            for j in 0..cat.num_simples() {
                let dj = cat.irreps()[j].dim;
                let di = cat.irreps()[i].dim;
                let lhs = self.beta_on(c, cat.simple_pair(i, j));
                let inner = apply_local(di, &c.beta[j], 1, &Matrix::identity(di * dj * dv));
                let rhs = apply_local(1, &c.beta[i], dj, &inner);
                multiplicativity = multiplicativity.max(lhs.relative_deviation(&rhs));
            }
        }
        CentreValidation {
            equivariance,
            min_singular_value: if dv == 0 { f64::INFINITY } else { min_sv },
            unit,
            multiplicativity,
        }
    }

    /// `β_X: X ⊗ V -> V ⊗ X` for an arbitrary representation `X`.
    pub fn beta_on(&self, c: &CentreObject, x: &RepObject) -> Matrix {
        let dv = c.dim();
        let mut out = Matrix::zeros(dv * x.dim(), x.dim() * dv);
        for e in self.cat.decomposition(x) {
            let left = apply_local(dv, &e.iota, 1, &c.beta[e.irrep]);
            out = &out + &apply_local_right(&left, 1, &e.iota.adjoint(), dv);
        }
        out
    }

    /// `β_X⁻¹: V ⊗ X -> X ⊗ V`.
    pub fn beta_inv_on(&self, c: &CentreObject, x: &RepObject) -> Matrix {
        let dv = c.dim();
        let inverses = c.beta_inverses();
        let mut out = Matrix::zeros(x.dim() * dv, dv * x.dim());
        for e in self.cat.decomposition(x) {
            let left = apply_local(1, &e.iota, dv, &inverses[e.irrep]);
            out = &out + &apply_local_right(&left, dv, &e.iota.adjoint(), 1);
        }
        out
    }

    /// Largest relative defect of `f: c -> d` as a morphism in Z(A).
    pub fn z_defect(&self, f: &Matrix, c: &CentreObject, d: &CentreObject) -> f64 {
        if f.shape() != (d.dim(), c.dim()) {
            return f64::INFINITY;
        }
        let scale = f.max_abs().max(1.0);
        let mut worst = self.cat.is_equivariant(&c.underlying, &d.underlying, f) / scale;
        for k in 0..self.cat.num_simples() {
            let dk = self.cat.irreps()[k].dim;
            let lhs = apply_local(1, f, dk, &c.beta[k]);
            let rhs = apply_local_right(&d.beta[k], dk, f, 1);
            worst = worst.max(lhs.deviation(&rhs) / scale);
        }
        worst
    }

    pub fn morphism(&self, source: &Obj, target: &Obj, mat: Matrix) -> Result<CentreMorphism> {
        let defect = self.z_defect(&mat, source, target);
        if defect > self.tol {
            return Err(Error::MorphismMismatch(format!(
                "{} -> {} does not commute with the half-braidings (defect {defect:e})",
                source.label, target.label
            )));
        }
        Ok(CentreMorphism {
            source: source.clone(),
            target: target.clone(),
            mat,
        })
    }

    /// Basis of `Hom_Z(c, d)`.
    pub fn hom_z(&self, c: &Obj, d: &Obj) -> Vec<Matrix> {
        let candidates: Vec<Matrix> = self
            .cat
            .hom_basis(&c.underlying, &d.underlying)
            .into_iter()
            .map(|m| m.mat)
            .collect();
        if candidates.is_empty() {
            return Vec::new();
        }
        let mut defects: Vec<Matrix> = Vec::with_capacity(candidates.len());
        for f in &candidates {
            let mut parts = Vec::new();
            for k in 0..self.cat.num_simples() {
                let dk = self.cat.irreps()[k].dim;
                let lhs = apply_local(1, f, dk, &c.beta[k]);
                let rhs = apply_local_right(&d.beta[k], dk, f, 1);
                parts.extend((&lhs - &rhs).entries_row_major());
            }
            defects.push(Matrix::from_fn(parts.len(), 1, |r, _| parts[r]));
        }
        let rows = defects[0].rows();
        let system = Matrix::from_columns(rows, &defects);
        let kernel = system.kernel_basis(1e-8);
        (0..kernel.cols())
            .map(|col| {
                let mut m = Matrix::zeros(d.dim(), c.dim());
                for (l, f) in candidates.iter().enumerate() {
                    m = &m + &f.scale(kernel.get(l, col));
                }
                m
            })
            .collect()
    }

    /// Random element of `Hom_Z(c, d)`.
    pub fn random_morphism(&self, c: &Obj, d: &Obj, rng: &mut Rng) -> CentreMorphism {
        let mut mat = Matrix::zeros(d.dim(), c.dim());
        for b in self.hom_z(c, d) {
            mat = &mat + &b.scale(rng.complex());
        }
        CentreMorphism {
            source: c.clone(),
            target: d.clone(),
            mat,
        }
    }

    // ----- convolution product -----

    /// `c ⊗_c d` with `β_k = (id_V ⊗ β^W_k)(β^V_k ⊗ id_W)`.
    pub fn conv_tensor(&self, c: &Obj, d: &Obj) -> Obj {
        let key = (c.id, d.id);
        if let Some(hit) = self.conv.lock().get(&key) {
            return hit.clone();
        }
        let (dv, dw) = (c.dim(), d.dim());
        let underlying = self.cat.tensor(&c.underlying, &d.underlying);
        let beta = (0..self.cat.num_simples())
            .map(|k| {
                let first = c.beta[k].tensor(&Matrix::identity(dw));
                apply_local(dv, &d.beta[k], 1, &first)
            })
            .collect();
        let obj = make_object(underlying, beta, format!("({} ⊗c {})", c.label, d.label));
        self.conv.lock().entry(key).or_insert(obj).clone()
    }

    pub fn conv_tensor_mor(&self, f: &CentreMorphism, g: &CentreMorphism) -> CentreMorphism {
        CentreMorphism {
            source: self.conv_tensor(&f.source, &g.source),
            target: self.conv_tensor(&f.target, &g.target),
            mat: f.mat.tensor(&g.mat),
        }
    }

    /// Braiding `c ⊗_c d -> d ⊗_c c`, the half-braiding of `d` at `Φ(c)`.
    pub fn braiding(&self, c: &Obj, d: &Obj) -> CentreMorphism {
        CentreMorphism {
            source: self.conv_tensor(c, d),
            target: self.conv_tensor(d, c),
            mat: self.beta_on(d, &c.underlying),
        }
    }

    /// Inverse braiding `d ⊗_c c -> c ⊗_c d`.
    pub fn braiding_inv(&self, c: &Obj, d: &Obj) -> CentreMorphism {
        CentreMorphism {
            source: self.conv_tensor(d, c),
            target: self.conv_tensor(c, d),
            mat: self.beta_inv_on(d, &c.underlying),
        }
    }

    /// `(c ⊗_c d) ⊗_c e -> c ⊗_c (d ⊗_c e)`; the identity matrix.
    pub fn conv_associator(&self, c: &Obj, d: &Obj, e: &Obj) -> CentreMorphism {
        let source = self.conv_tensor(&self.conv_tensor(c, d), e);
        let target = self.conv_tensor(c, &self.conv_tensor(d, e));
        let n = source.dim();
        CentreMorphism {
            source,
            target,
            mat: Matrix::identity(n),
        }
    }

    pub fn conv_associator_inv(&self, c: &Obj, d: &Obj, e: &Obj) -> CentreMorphism {
        let a = self.conv_associator(c, d, e);
        CentreMorphism {
            source: a.target,
            target: a.source,
            mat: a.mat,
        }
    }

    /// `𝕀_c ⊗_c c -> c`.
    pub fn conv_left_unitor(&self, c: &Obj) -> CentreMorphism {
        CentreMorphism {
            source: self.conv_tensor(&self.unit_c, c),
            target: c.clone(),
            mat: Matrix::identity(c.dim()),
        }
    }

    pub fn conv_right_unitor(&self, c: &Obj) -> CentreMorphism {
        CentreMorphism {
            source: self.conv_tensor(c, &self.unit_c),
            target: c.clone(),
            mat: Matrix::identity(c.dim()),
        }
    }

    pub fn conv_left_unitor_inv(&self, c: &Obj) -> CentreMorphism {
        invert_identity(self.conv_left_unitor(c))
    }

    pub fn conv_right_unitor_inv(&self, c: &Obj) -> CentreMorphism {
        invert_identity(self.conv_right_unitor(c))
    }

    // ----- the idempotent and the symmetric product -----

    /// `Π_{c,d} = Σ_i (d_i/D) · tr_i[(s_{V,i} ⊗ id)(id_V ⊗ (β^W_i)⁻¹)(id_V ⊗ s_{i,W})(β^V_i ⊗ id)]`:
    /// a loop of colour `i` with `c` crossed through its half-braiding and `d`
    /// through the inverse of its half-braiding.
    pub fn idempotent_pi(&self, c: &CentreObject, d: &CentreObject) -> Matrix {
        let (dv, dw) = (c.dim(), d.dim());
        let n = dv * dw;
        let mut pi = Matrix::zeros(n, n);
        let inv_d = d.beta_inverses();
        for i in 0..self.cat.num_simples() {
            let di = self.cat.irreps()[i].dim;
            let f = apply_local(dv, &swap(di, dw), 1, &c.beta[i].tensor(&Matrix::identity(dw)));
            let g = apply_local(dv, &inv_d[i], 1, &f);
            let gf = apply_local(1, &swap(dv, di), dw, &g);
            let weight = c64(self.cat.qdim(i) / self.cat.global_dim());
            pi = &pi + &partial_trace_first(di, &gf).scale(weight);
        }
        pi
    }

    /// Half-braiding of `c ⊗_c d` at `k` with `c` crossed by `β^V` and `d` by
    /// the symmetry (`route = 0`), or `c` by the symmetry and `d` by `β^W` (`route = 1`).
    fn routed_crossing(&self, c: &CentreObject, d: &CentreObject, x: &RepObject, route: usize) -> Matrix {
        let (dv, dw, dx) = (c.dim(), d.dim(), x.dim());
        if route == 0 {
            let bv = self.beta_on(c, x);
            apply_local(dv, &swap(dx, dw), 1, &bv.tensor(&Matrix::identity(dw)))
        } else {
            let bw = self.beta_on(d, x);
            let first = swap(dx, dv).tensor(&Matrix::identity(dw));
            apply_local(dv, &bw, 1, &first)
        }
    }

    pub fn sym_tensor(&self, c: &Obj, d: &Obj) -> Result<Arc<SymProduct>> {
        let key = (c.id, d.id);
        if let Some(hit) = self.sym.lock().get(&key) {
            return Ok(hit.clone());
        }
        let ambient = self.conv_tensor(c, d);
        let pi = self.idempotent_pi(c, d);
        let split = split_idempotent(&pi, self.tol.max(1e-9))?;
        let (io, pr) = (split.inclusion, split.projection);
        let underlying = self.cat.restrict(&ambient.underlying, &io);
        let mut beta = Vec::with_capacity(self.cat.num_simples());
        let mut route_deviation: f64 = 0.0;
        for k in 0..self.cat.num_simples() {
            let dk = self.cat.irreps()[k].dim;
            let simple = self.cat.simple(k);
            let mut routes = [0, 1].map(|r| {
                let x = self.routed_crossing(c, d, simple, r);
                let x = apply_local_right(&x, dk, &io, 1);
                apply_local(1, &pr, dk, &x)
            });
            route_deviation = route_deviation.max(routes[0].relative_deviation(&routes[1]));
            beta.push(core::mem::replace(&mut routes[0], Matrix::zeros(0, 0)));
        }
        let object = make_object(underlying, beta, format!("({} ⊗s {})", c.label, d.label));
        let product = Arc::new(SymProduct {
            object,
            ambient,
            inclusion: io,
            projection: pr,
            pi,
            route_deviation,
        });
        Ok(self.sym.lock().entry(key).or_insert(product).clone())
    }

    /// `f ⊗_s g = △'(f ⊗ g)▽`.
    pub fn sym_tensor_mor(&self, f: &CentreMorphism, g: &CentreMorphism) -> Result<CentreMorphism> {
        let src = self.sym_tensor(&f.source, &g.source)?;
        let tgt = self.sym_tensor(&f.target, &g.target)?;
        let mat = &(&tgt.projection * &f.mat.tensor(&g.mat)) * &src.inclusion;
        Ok(CentreMorphism {
            source: src.object.clone(),
            target: tgt.object.clone(),
            mat,
        })
    }

    /// Symmetry `c ⊗_s d -> d ⊗_s c`, `△ ∘ s ∘ ▽`.
    pub fn sym_symmetry(&self, c: &Obj, d: &Obj) -> Result<CentreMorphism> {
        let src = self.sym_tensor(c, d)?;
        let tgt = self.sym_tensor(d, c)?;
        let mat = &(&tgt.projection * &swap(c.dim(), d.dim())) * &src.inclusion;
        Ok(CentreMorphism {
            source: src.object.clone(),
            target: tgt.object.clone(),
            mat,
        })
    }

    /// `(a ⊗_s b) ⊗_s c -> a ⊗_s (b ⊗_s c)`: include into `a ⊗ b ⊗ c`, then project.
    pub fn sym_associator(&self, a: &Obj, b: &Obj, c: &Obj) -> Result<CentreMorphism> {
        let ab = self.sym_tensor(a, b)?;
        let ab_c = self.sym_tensor(&ab.object, c)?;
        let bc = self.sym_tensor(b, c)?;
        let a_bc = self.sym_tensor(a, &bc.object)?;
        let include = &ab.inclusion.tensor(&Matrix::identity(c.dim())) * &ab_c.inclusion;
        let project = &a_bc.projection * &Matrix::identity(a.dim()).tensor(&bc.projection);
        Ok(CentreMorphism {
            source: ab_c.object.clone(),
            target: a_bc.object.clone(),
            mat: &project * &include,
        })
    }

    pub fn sym_associator_inv(&self, a: &Obj, b: &Obj, c: &Obj) -> Result<CentreMorphism> {
        let ab = self.sym_tensor(a, b)?;
        let ab_c = self.sym_tensor(&ab.object, c)?;
        let bc = self.sym_tensor(b, c)?;
        let a_bc = self.sym_tensor(a, &bc.object)?;
        let include = &Matrix::identity(a.dim()).tensor(&bc.inclusion) * &a_bc.inclusion;
        let project = &ab_c.projection * &ab.projection.tensor(&Matrix::identity(c.dim()));
        Ok(CentreMorphism {
            source: a_bc.object.clone(),
            target: ab_c.object.clone(),
            mat: &project * &include,
        })
    }

    /// `Σ_i (ev'_i ⊗ id_V)(id_i ⊗ (β^V_{i*})⁻¹ s_{i*,V})`: `𝕀_s ⊗ V -> V`.
    pub fn unit_cap_left(&self, c: &CentreObject) -> Matrix {
        let dv = c.dim();
        let n = self.unit_s.dim();
        let mut h = Matrix::zeros(dv, n * dv);
        for i in 0..self.cat.num_simples() {
            let di = self.cat.irreps()[i].dim;
            let twist = self.beta_inv_on(c, self.cat.simple_dual(i));
            let mono = &twist * &swap(di, dv);
            let blk = apply_local(1, &cap(di), dv, &Matrix::identity(di).tensor(&mono));
            h.add_block(0, self.unit_s_offsets[i] * dv, &blk);
        }
        h
    }

    /// `Σ_i (d_i/D)(id_i ⊗ s_{V,i*} β^V_{i*})(coev_i ⊗ id_V)`: `V -> 𝕀_s ⊗ V`.
    pub fn unit_cup_left(&self, c: &CentreObject) -> Matrix {
        let dv = c.dim();
        let n = self.unit_s.dim();
        let mut h = Matrix::zeros(n * dv, dv);
        for i in 0..self.cat.num_simples() {
            let di = self.cat.irreps()[i].dim;
            let mono = &swap(dv, di) * &self.beta_on(c, self.cat.simple_dual(i));
            let open = cup(di).tensor(&Matrix::identity(dv));
            let blk = apply_local(di, &mono, 1, &open);
            let weight = c64(self.cat.qdim(i) / self.cat.global_dim());
            h.add_block(self.unit_s_offsets[i] * dv, 0, &blk.scale(weight));
        }
        h
    }

    /// `Σ_i (id_V ⊗ ev'_i)((β^V_i s_{V,i}) ⊗ id_{i*})`: `V ⊗ 𝕀_s -> V`.
    pub fn unit_cap_right(&self, c: &CentreObject) -> Matrix {
        let dv = c.dim();
        let n = self.unit_s.dim();
        let mut h = Matrix::zeros(dv, dv * n);
        for i in 0..self.cat.num_simples() {
            let di = self.cat.irreps()[i].dim;
            let mono = &c.beta[i] * &swap(dv, di);
            let blk = apply_local(dv, &cap(di), 1, &mono.tensor(&Matrix::identity(di)));
            // Columns of V ⊗ 𝕀_s are (v, s); scatter the block columns (v, t) to (v, off + t).
            let off = self.unit_s_offsets[i];
            for v in 0..dv {
                for t in 0..di * di {
                    for r in 0..dv {
                        let z = blk.get(r, v * di * di + t);
                        h.set(r, v * n + off + t, h.get(r, v * n + off + t) + z);
                    }
                }
            }
        }
        h
    }

    /// `Σ_i (d_i/D)((s_{i,V} (β^V_i)⁻¹) ⊗ id_{i*})(id_V ⊗ coev_i)`: `V -> V ⊗ 𝕀_s`.
    pub fn unit_cup_right(&self, c: &CentreObject) -> Matrix {
        let dv = c.dim();
        let n = self.unit_s.dim();
        let inverses = c.beta_inverses();
        let mut h = Matrix::zeros(dv * n, dv);
        for i in 0..self.cat.num_simples() {
            let di = self.cat.irreps()[i].dim;
            let mono = &swap(di, dv) * &inverses[i];
            let open = Matrix::identity(dv).tensor(&cup(di));
            let blk = apply_local(1, &mono, di, &open);
            let weight = c64(self.cat.qdim(i) / self.cat.global_dim());
            let off = self.unit_s_offsets[i];
            for v in 0..dv {
                for t in 0..di * di {
                    for col in 0..dv {
                        let z = blk.get(v * di * di + t, col) * weight;
                        h.set(v * n + off + t, col, h.get(v * n + off + t, col) + z);
                    }
                }
            }
        }
        h
    }

    /// `λ_s: 𝕀_s ⊗_s c -> c`.
    pub fn sym_left_unitor(&self, c: &Obj) -> Result<CentreMorphism> {
        let p = self.sym_tensor(&self.unit_s, c)?;
        Ok(CentreMorphism {
            source: p.object.clone(),
            target: c.clone(),
            mat: &self.unit_cap_left(c) * &p.inclusion,
        })
    }

    pub fn sym_left_unitor_inv(&self, c: &Obj) -> Result<CentreMorphism> {
        let p = self.sym_tensor(&self.unit_s, c)?;
        Ok(CentreMorphism {
            source: c.clone(),
            target: p.object.clone(),
            mat: &p.projection * &self.unit_cup_left(c),
        })
    }

    /// `ρ_s: c ⊗_s 𝕀_s -> c`.
    pub fn sym_right_unitor(&self, c: &Obj) -> Result<CentreMorphism> {
        let p = self.sym_tensor(c, &self.unit_s)?;
        Ok(CentreMorphism {
            source: p.object.clone(),
            target: c.clone(),
            mat: &self.unit_cap_right(c) * &p.inclusion,
        })
    }

    pub fn sym_right_unitor_inv(&self, c: &Obj) -> Result<CentreMorphism> {
        let p = self.sym_tensor(c, &self.unit_s)?;
        Ok(CentreMorphism {
            source: c.clone(),
            target: p.object.clone(),
            mat: &p.projection * &self.unit_cup_right(c),
        })
    }

    // ----- lemma checks -----

    /// `Π_{c,c'}` commutes with the half-braiding of `c ⊗_c c'` (and its
    /// inverse) at an object `a` of Rep(G): the averaged loop lets the
    /// `a`-strand pass from one side of the ring to the other.
    pub fn cloaking_check(&self, c: &Obj, c2: &Obj, a: &RepObject) -> f64 {
        let amb = self.conv_tensor(c, c2);
        let pi = self.idempotent_pi(c, c2);
        let da = a.dim();
        let b = self.beta_on(&amb, a);
        let lhs = apply_local_right(&b, da, &pi, 1);
        let rhs = apply_local(1, &pi, da, &b);
        let bi = self.beta_inv_on(&amb, a);
        let lhs_inv = apply_local_right(&bi, 1, &pi, da);
        let rhs_inv = apply_local(da, &pi, 1, &bi);
        lhs.relative_deviation(&rhs).max(lhs_inv.relative_deviation(&rhs_inv))
    }

    /// Crossing an `A`-strand `x` over `△` (resp. under `▽`) agrees with
    /// crossing the two legs, through either leg's half-braiding.
    pub fn slicing_check(&self, c: &Obj, c2: &Obj, x: &RepObject) -> Result<f64> {
        let p = self.sym_tensor(c, c2)?;
        let dx = x.dim();
        let bs = self.beta_on(&p.object, x);
        let mut worst: f64 = 0.0;
        for route in 0..2 {
            let legs = self.routed_crossing(c, c2, x, route);
            // Projection side.
            let lhs = apply_local_right(&bs, dx, &p.projection, 1);
            let rhs = apply_local(1, &p.projection, dx, &legs);
            worst = worst.max(lhs.relative_deviation(&rhs));
            // Inclusion side.
            let lhs = apply_local(1, &p.inclusion, dx, &bs);
            let rhs = apply_local_right(&legs, dx, &p.inclusion, 1);
            worst = worst.max(lhs.relative_deviation(&rhs));
        }
        Ok(worst)
    }

    /// `Π_{𝕀_s, c}` equals the cup/cap composite through `c`.
    pub fn snapping_check(&self, c: &Obj) -> f64 {
        let pi = self.idempotent_pi(&self.unit_s, c);
        let snapped = &self.unit_cup_left(c) * &self.unit_cap_left(c);
        pi.relative_deviation(&snapped)
    }

    /// For `x, y` in `A ⊂ Z(A)` the braiding is the symmetry and the double crossing is trivial.
    pub fn transparency_check(&self, x: &Obj, y: &Obj) -> f64 {
        let b = self.braiding(x, y);
        let back = self.braiding(y, x);
        let double = &back.mat * &b.mat;
        let n = x.dim() * y.dim();
        double
            .deviation(&Matrix::identity(n))
            .max(b.mat.deviation(&swap(x.dim(), y.dim())))
    }
}

fn invert_identity(m: CentreMorphism) -> CentreMorphism {
    CentreMorphism {
        source: m.target,
        target: m.source,
        mat: m.mat,
    }
}

fn make_object(underlying: Rep, beta: Vec<Matrix>, label: String) -> Obj {
    Arc::new(CentreObject {
        id: fresh_id(),
        label,
        underlying,
        beta,
        beta_inv: OnceBox::new(),
    })
}

fn from_symmetry(cat: &RepCategory, x: Rep, label: String) -> Obj {
    let beta = cat
        .irreps()
        .iter()
        .map(|irr| swap(irr.dim, x.dim()))
        .collect();
    make_object(x, beta, label)
}

/// `𝕀_s = ⊕_i i ⊗ i*` with half-braiding
/// `β_a = Σ_{i,j} Σ_{φ ∈ B(ai,j)} φ ⊗ [(φ* ⊗ id_a)(id_{i*} ⊗ coev'_a)]`.
fn build_sym_unit(cat: &RepCategory) -> (Obj, Vec<usize>) {
    let n = cat.num_simples();
    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0);
    let blocks: Vec<Rep> = (0..n)
        .map(|i| cat.tensor(cat.simple(i), cat.simple_dual(i)))
        .collect();
    for b in &blocks {
        offsets.push(offsets.last().unwrap() + b.dim());
    }
    let total = offsets[n];
    let refs: Vec<&RepObject> = blocks.iter().map(|b| &**b).collect();
    let underlying = cat.direct_sum(&refs);
    let mut beta = Vec::with_capacity(n);
    for a in 0..n {
        let da = cat.irreps()[a].dim;
        let mut m = Matrix::zeros(total * da, da * total);
        for i in 0..n {
            let di = cat.irreps()[i].dim;
            for j in 0..n {
                for v in cat.fusion_basis(a, i, j) {
                    let star = cat.phi_star(a, i, v);
                    // i* -> j* ⊗ a
                    let bent = &star.tensor(&Matrix::identity(da)) * &Matrix::identity(di).tensor(&cup(da));
                    let local = v.phi.tensor(&bent);
                    for r in 0..local.rows() {
                        let (t, y) = (r / da, r % da);
                        let row = (offsets[j] + t) * da + y;
                        for col in 0..local.cols() {
                            let z = local.get(r, col);
                            if z.norm() == 0.0 {
                                continue;
                            }
                            let (y2, t2) = (col / (di * di), col % (di * di));
                            let target_col = y2 * total + offsets[i] + t2;
                            m.set(row, target_col, m.get(row, target_col) + z);
                        }
                    }
                }
            }
        }
        beta.push(m);
    }
    offsets.pop();
    (make_object(underlying, beta, String::from("Is")), offsets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::BUILTIN_GROUPS;

    fn centre(name: &str) -> Centre {
        Centre::new(Arc::new(RepCategory::builtin(name, 2).unwrap())).unwrap()
    }

    fn rank(m: &Matrix) -> usize {
        m.rank(RANK_THRESHOLD)
    }

    #[test]
    fn symmetric_unit_is_a_valid_centre_object() {
        for name in BUILTIN_GROUPS {
            let z = centre(name);
            let v = z.validate(z.sym_unit());
            assert!(v.is_valid(1e-9), "{name}: {v:?}");
            assert_eq!(z.sym_unit().dim(), z.category().group().order());
        }
    }

    #[test]
    fn a_objects_are_valid() {
        let z = centre("s3");
        for k in 0..3 {
            let v = z.validate(z.simple(k));
            assert_eq!(v.equivariance, 0.0);
            assert!(v.is_valid(1e-12));
        }
    }

    #[test]
    fn scaled_half_braiding_fails_multiplicativity() {
        let z = centre("z2");
        let c = z.simple(1);
        let beta: Vec<Matrix> = c.betas().iter().map(|b| b.scale(c64(2.0))).collect();
        let bad = z.object_unchecked(c.underlying().clone(), beta, "bad");
        let v = z.validate(&bad);
        assert!(v.min_singular_value > 1.0);
        assert!(v.unit > 0.5 || v.multiplicativity > 0.5);
        assert!(z.object(c.underlying().clone(), bad.betas().to_vec(), "bad").is_err());
    }

    #[test]
    fn pi_is_idempotent_with_expected_ranks() {
        let z = centre("z2");
        let is = z.sym_unit().clone();
        let pi = z.idempotent_pi(&is, &is);
        assert!((&pi * &pi).deviation(&pi) < 1e-12);
        assert_eq!(rank(&pi), 2);
        let ic = z.conv_unit().clone();
        assert!(z.idempotent_pi(&ic, &ic).approx_eq(&Matrix::identity(1), 1e-12));
        let s3 = centre("s3");
        let is = s3.sym_unit().clone();
        let pi = s3.idempotent_pi(&is, &is);
        assert!((&pi * &pi).deviation(&pi) < 1e-12);
        assert_eq!(rank(&pi), 6);
        assert!(s3.z_defect(&pi, &s3.conv_tensor(&is, &is), &s3.conv_tensor(&is, &is)) < 1e-10);
    }

    #[test]
    fn conv_products_are_valid() {
        let z = centre("s3");
        let is = z.sym_unit().clone();
        let v = z.simple(2).clone();
        let p = z.conv_tensor(&is, &v);
        assert!(z.validate(&p).is_valid(1e-10));
        assert_eq!(z.conv_tensor(&is, &is).dim(), 36);
        assert_eq!(z.conv_tensor(&is, &v).id(), p.id());
    }

    #[test]
    fn braiding_is_natural_and_invertible() {
        let z = centre("s3");
        let is = z.sym_unit().clone();
        let v = z.simple(2).clone();
        let b = z.braiding(&is, &v);
        let bi = z.braiding_inv(&is, &v);
        assert!((&bi.mat * &b.mat).approx_eq(&Matrix::identity(12), 1e-10));
        assert!(z.z_defect(&b.mat, &b.source, &b.target) < 1e-10);
        let mut rng = Rng::new(1);
        let f = z.random_morphism(&is, &is, &mut rng);
        assert!(z.z_defect(&f.mat, &is, &is) < 1e-9);
        let lhs = &b.mat * &f.mat.tensor(&Matrix::identity(2));
        let rhs = &Matrix::identity(2).tensor(&f.mat) * &b.mat;
        assert!(lhs.approx_eq(&rhs, 1e-9));
    }

    #[test]
    fn sym_products_have_agreeing_routes() {
        let z = centre("s3");
        let is = z.sym_unit().clone();
        let p = z.sym_tensor(&is, &is).unwrap();
        assert_eq!(p.object.dim(), 6);
        assert!(p.route_deviation < 1e-10);
        assert!(z.validate(&p.object).is_valid(1e-9));
        assert!((&p.projection * &p.inclusion).approx_eq(&Matrix::identity(6), 1e-10));
        assert!((&p.inclusion * &p.projection).approx_eq(&p.pi, 1e-10));
    }

    #[test]
    fn a_objects_meet_the_unit_in_one_fibre() {
        // Objects of Rep(Z/2) sit over the identity element; 𝕀_s has one
        // dimension over each element.
        let z = centre("z2");
        let is = z.sym_unit().clone();
        let eps = z.simple(1).clone();
        let p = z.sym_tensor(&eps, &eps).unwrap();
        assert_eq!(p.object.dim(), 1);
        let q = z.sym_tensor(&is, &eps).unwrap();
        assert_eq!(q.object.dim(), 1);
    }

    #[test]
    fn unitors_are_inverse_morphisms() {
        let z = centre("s3");
        let is = z.sym_unit().clone();
        let v = z.simple(2).clone();
        let x = z.conv_tensor(&is, &v);
        for c in [v.clone(), is.clone(), x] {
            for (l, li) in [
                (z.sym_left_unitor(&c).unwrap(), z.sym_left_unitor_inv(&c).unwrap()),
                (z.sym_right_unitor(&c).unwrap(), z.sym_right_unitor_inv(&c).unwrap()),
            ] {
                let n = c.dim();
                assert!((&l.mat * &li.mat).approx_eq(&Matrix::identity(n), 1e-9), "{}", c.label());
                let m = l.source.dim();
                assert!((&li.mat * &l.mat).approx_eq(&Matrix::identity(m), 1e-9));
                assert!(z.z_defect(&l.mat, &l.source, &l.target) < 1e-9, "{}", c.label());
            }
            assert!(z.snapping_check(&c) < 1e-9);
        }
    }

    #[test]
    fn associator_and_symmetry_are_centre_isomorphisms() {
        let z = centre("s3");
        let is = z.sym_unit().clone();
        let v = z.simple(2).clone();
        let a = z.sym_associator(&is, &v, &is).unwrap();
        let ai = z.sym_associator_inv(&is, &v, &is).unwrap();
        assert!(z.z_defect(&a.mat, &a.source, &a.target) < 1e-9);
        assert!((&ai.mat * &a.mat).approx_eq(&Matrix::identity(a.source.dim()), 1e-9));
        let s = z.sym_symmetry(&is, &v).unwrap();
        let s2 = z.sym_symmetry(&v, &is).unwrap();
        assert!(z.z_defect(&s.mat, &s.source, &s.target) < 1e-9);
        assert!((&s2.mat * &s.mat).approx_eq(&Matrix::identity(s.source.dim()), 1e-9));
    }

    #[test]
    fn lemmas_hold() {
        let z = centre("s3");
        let is = z.sym_unit().clone();
        let v = z.simple(2).clone();
        let x = z.conv_tensor(&is, &v);
        let cat = z.category().clone();
        let a = cat.direct_sum(&[cat.simple(1), cat.simple(2)]);
        for (c, d) in [(&is, &is), (&is, &v), (&x, &is), (&v, &v)] {
            assert!(z.cloaking_check(c, d, &a) < 1e-9);
            assert!(z.cloaking_check(c, d, cat.unit()) < 1e-12);
            assert!(z.slicing_check(c, d, &a).unwrap() < 1e-9, "{} {}", c.label(), d.label());
        }
        assert!(z.transparency_check(z.simple(2), z.simple(1)) < 1e-12);
    }
}
