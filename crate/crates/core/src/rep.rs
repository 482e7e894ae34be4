//! The symmetric fusion category Rep(G).
//!
//! Every representation is unitary. The dual of `X` acts by `ρ(g⁻¹)ᵀ`, so all
//! four duality maps are the flattened identity `Σ_a e_a ⊗ e_a` and the
//! pivotal structure is the identity.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicU64, Ordering};

use once_cell::race::OnceBox;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::irrep::{self, Irrep};
use crate::linalg::{
    apply_local, c64, gram_schmidt, swap, Matrix, C64, DEFAULT_TOLERANCE, ONE, ZERO,
};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

pub(crate) fn fresh_id() -> u64 {
    NEXT_ID.fetch_add(1, Ordering::Relaxed)
}

/// One copy of the simple `irrep` inside an object, as an isometry `k -> X`.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub irrep: usize,
    pub iota: Matrix,
}

pub struct RepObject {
    id: u64,
    dim: usize,
    action: Vec<Matrix>,
    decomposition: OnceBox<Vec<Embedding>>,
}

pub type Rep = Arc<RepObject>;

impl core::fmt::Debug for RepObject {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("RepObject")
            .field("id", &self.id)
            .field("dim", &self.dim)
            .finish()
    }
}

impl RepObject {
    fn build(dim: usize, action: Vec<Matrix>) -> Rep {
        Arc::new(Self {
            id: fresh_id(),
            dim,
            action,
            decomposition: OnceBox::new(),
        })
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, g: usize) -> &Matrix {
        &self.action[g]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }
}

#[derive(Clone, Debug)]
pub struct RepMorphism {
    pub source: Rep,
    pub target: Rep,
    pub mat: Matrix,
}

/// A basis element of `Hom(i ⊗ j, k)` with its transpose.
#[derive(Clone, Debug)]
pub struct FusionVertex {
    pub phi: Matrix,
    pub phi_t: Matrix,
}

pub struct RepCategory {
    group: FiniteGroup,
    irreps: Vec<Irrep>,
    duals: Vec<usize>,
    global_dim: f64,
    seed: u64,
    simples: Vec<Rep>,
    simple_duals: Vec<Rep>,
    pairs: Vec<Vec<Rep>>,
    /// `fusion[i][j][k]` spans `Hom(i ⊗ j, k)`.
    fusion: Vec<Vec<Vec<Vec<FusionVertex>>>>,
}

impl core::fmt::Debug for RepCategory {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("RepCategory")
            .field("group", &self.group.name())
            .field("simples", &self.irreps.len())
            .finish()
    }
}

impl RepCategory {
    pub fn new(group: FiniteGroup, seed: u64) -> Result<Self> {
        let irreps = irrep::irreps(&group, seed)?;
        let duals = (0..irreps.len()).map(|i| irrep::dual_index(&irreps, i)).collect();
        let global_dim = irrep::global_dimension(&irreps);
        let simples: Vec<Rep> = irreps
            .iter()
            .enumerate()
            .map(|(k, irr)| {
                let obj = RepObject::build(irr.dim, irr.matrices.clone());
                let _ = obj.decomposition.set(alloc::boxed::Box::new(vec![Embedding {
                    irrep: k,
                    iota: Matrix::identity(irr.dim),
                }]));
                obj
            })
            .collect();
        let mut cat = Self {
            group,
            irreps,
            duals,
            global_dim,
            seed,
            simples,
            simple_duals: Vec::new(),
            pairs: Vec::new(),
            fusion: Vec::new(),
        };
        cat.simple_duals = cat.simples.iter().map(|s| cat.dual(s)).collect();
        let n = cat.irreps.len();
        cat.pairs = (0..n)
            .map(|i| (0..n).map(|j| cat.tensor(&cat.simples[i], &cat.simples[j])).collect())
            .collect();
        let mut fusion = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let mut col = Vec::with_capacity(n);
                for k in 0..n {
                    col.push(cat.fusion_vertices(&cat.pairs[i][j], k)?);
                }
                row.push(col);
            }
            fusion.push(row);
        }
        cat.fusion = fusion;
        Ok(cat)
    }

    pub fn builtin(name: &str, seed: u64) -> Result<Self> {
        Self::new(FiniteGroup::builtin(name)?, seed)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn irreps(&self) -> &[Irrep] {
        &self.irreps
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn num_simples(&self) -> usize {
        self.irreps.len()
    }

    /// Quantum dimension `d_i`.
    pub fn qdim(&self, i: usize) -> f64 {
        self.irreps[i].dim as f64
    }

    pub fn twist(&self, i: usize) -> f64 {
        f64::from(self.irreps[i].twist)
    }

    /// `D = Σ_i d_i²`.
    pub fn global_dim(&self) -> f64 {
        self.global_dim
    }

    pub fn dual_index(&self, i: usize) -> usize {
        self.duals[i]
    }

    pub fn simple(&self, i: usize) -> &Rep {
        &self.simples[i]
    }

    /// The dual `i*` realised on the same space as `i`.
    pub fn simple_dual(&self, i: usize) -> &Rep {
        &self.simple_duals[i]
    }

    /// The object `i ⊗ j`, shared so its decomposition is computed once.
    pub fn simple_pair(&self, i: usize, j: usize) -> &Rep {
        &self.pairs[i][j]
    }

    pub fn unit(&self) -> &Rep {
        &self.simples[0]
    }

    pub fn fusion_mult(&self, i: usize, j: usize, k: usize) -> Result<usize> {
        irrep::fusion_mult(&self.group, &self.irreps[i], &self.irreps[j], &self.irreps[k])
    }

    // ----- objects -----

    /// Validates that `action` is a unitary homomorphism.
    pub fn object(&self, action: Vec<Matrix>) -> Result<Rep> {
        if action.len() != self.group.order() {
            return Err(Error::InvalidObject(format!(
                "{} action matrices for a group of order {}",
                action.len(),
                self.group.order()
            )));
        }
        let dim = action[0].rows();
        let id = Matrix::identity(dim);
        for g in self.group.elements() {
            if action[g].shape() != (dim, dim) {
                return Err(Error::InvalidObject("action matrices differ in shape".into()));
            }
            if (&action[g].adjoint() * &action[g]).deviation(&id) > DEFAULT_TOLERANCE {
                return Err(Error::InvalidObject(format!("action of {g} is not unitary")));
            }
            for h in self.group.elements() {
                let gh = self.group.mul(g, h);
                if (&action[g] * &action[h]).deviation(&action[gh]) > DEFAULT_TOLERANCE {
                    return Err(Error::InvalidObject(format!(
                        "action fails the homomorphism law at ({g}, {h})"
                    )));
                }
            }
        }
        Ok(RepObject::build(dim, action))
    }

    pub fn zero(&self) -> Rep {
        RepObject::build(0, vec![Matrix::zeros(0, 0); self.group.order()])
    }

    pub fn tensor(&self, x: &RepObject, y: &RepObject) -> Rep {
        let action = self
            .group
            .elements()
            .map(|g| x.action[g].tensor(&y.action[g]))
            .collect();
        RepObject::build(x.dim * y.dim, action)
    }

    pub fn dual(&self, x: &RepObject) -> Rep {
        let action = self
            .group
            .elements()
            .map(|g| x.action[self.group.inverse(g)].transpose())
            .collect();
        RepObject::build(x.dim, action)
    }

    pub fn direct_sum(&self, parts: &[&RepObject]) -> Rep {
        let dim = parts.iter().map(|p| p.dim).sum();
        let action = self
            .group
            .elements()
            .map(|g| {
                let mut m = Matrix::zeros(dim, dim);
                let mut off = 0;
                for p in parts {
                    m.set_block(off, off, &p.action[g]);
                    off += p.dim;
                }
                m
            })
            .collect();
        RepObject::build(dim, action)
    }

    /// `U ρ(g) U†` for a unitary `U`.
    pub fn conjugate(&self, x: &RepObject, u: &Matrix) -> Rep {
        let action = x.action.iter().map(|m| &(u * m) * &u.adjoint()).collect();
        RepObject::build(x.dim, action)
    }

    /// Restriction of `x` to the invariant subspace spanned by the orthonormal columns of `q`.
    pub fn restrict(&self, x: &RepObject, q: &Matrix) -> Rep {
        let qh = q.adjoint();
        let action = x.action.iter().map(|m| &(&qh * m) * q).collect();
        RepObject::build(q.cols(), action)
    }

    /// Orthonormal isotypic embeddings; computed once per object.
    pub fn decomposition<'a>(&self, x: &'a RepObject) -> &'a [Embedding] {
        x.decomposition
            .get_or_init(|| alloc::boxed::Box::new(self.compute_decomposition(x)))
    }

    fn compute_decomposition(&self, x: &RepObject) -> Vec<Embedding> {
        let n = self.group.order() as f64;
        let mut out = Vec::new();
        for (k, irr) in self.irreps.iter().enumerate() {
            let dk = irr.dim;
            let weight = c64(dk as f64 / n);
            let e = |a: usize| -> Matrix {
                let mut m = Matrix::zeros(x.dim, x.dim);
                for g in self.group.elements() {
                    let coeff = irr.matrices[g].get(a, 0).conj();
                    if coeff.norm() > 0.0 {
                        m = &m + &x.action[g].scale(coeff);
                    }
                }
                m.scale(weight)
            };
            let e00 = e(0);
            let mult = libm::round(e00.trace().re) as usize;
            if mult == 0 {
                continue;
            }
            let w = e00.column_space(0.5);
            let others: Vec<Matrix> = (0..dk).map(|a| if a == 0 { e00.clone() } else { e(a) }).collect();
            for r in 0..w.cols() {
                let wr = w.column(r);
                let cols: Vec<Matrix> = others.iter().map(|ea| ea * &wr).collect();
                out.push(Embedding {
                    irrep: k,
                    iota: Matrix::from_columns(x.dim, &cols),
                });
            }
        }
        out
    }

    // ----- morphisms -----

    pub fn is_equivariant(&self, source: &RepObject, target: &RepObject, f: &Matrix) -> f64 {
        if f.shape() != (target.dim, source.dim) {
            return f64::INFINITY;
        }
        self.group
            .elements()
            .map(|g| (&target.action[g] * f).deviation(&(f * &source.action[g])))
            .fold(0.0, f64::max)
    }

    pub fn morphism(&self, source: &Rep, target: &Rep, mat: Matrix) -> Result<RepMorphism> {
        let defect = self.is_equivariant(source, target, &mat);
        if defect > DEFAULT_TOLERANCE {
            return Err(Error::MorphismMismatch(format!(
                "map is not equivariant (defect {defect:e})"
            )));
        }
        Ok(RepMorphism {
            source: source.clone(),
            target: target.clone(),
            mat,
        })
    }

    /// Basis of `Hom(X, Y)`, orthonormal under `⟨f, g⟩ = tr(f g†)`.
    pub fn hom_basis(&self, x: &Rep, y: &Rep) -> Vec<RepMorphism> {
        let dx = self.decomposition(x);
        let dy = self.decomposition(y);
        let mut raw = Vec::new();
        for ex in dx {
            for ey in dy.iter().filter(|ey| ey.irrep == ex.irrep) {
                let norm = c64(1.0 / libm::sqrt(self.qdim(ex.irrep)));
                raw.push((&ey.iota * &ex.iota.adjoint()).scale(norm));
            }
        }
        gram_schmidt(&raw, 1e-6)
            .into_iter()
            .map(|mat| RepMorphism {
                source: x.clone(),
                target: y.clone(),
                mat,
            })
            .collect()
    }

    fn fusion_vertices(&self, ij: &Rep, k: usize) -> Result<Vec<FusionVertex>> {
        let basis: Vec<Matrix> = self
            .hom_basis(ij, &self.simples[k])
            .into_iter()
            .map(|m| m.mat)
            .collect();
        let transposes = transposes(&basis, self.irreps[k].dim)?;
        Ok(basis
            .into_iter()
            .zip(transposes)
            .map(|(phi, phi_t)| FusionVertex { phi, phi_t })
            .collect())
    }

    /// The chosen basis `B(ij, k)` with transposes.
    pub fn fusion_basis(&self, i: usize, j: usize, k: usize) -> &[FusionVertex] {
        &self.fusion[i][j][k]
    }

    /// `φ*: i* ⊗ a* -> j*` for `φ ∈ B(ai, j)`, obtained by bending both
    /// inputs of `φᵗ`: `φ*[k, (x, y)] = φᵗ[(y, x), k]`.
    pub fn phi_star(&self, a: usize, i: usize, vertex: &FusionVertex) -> Matrix {
        let (da, di) = (self.irreps[a].dim, self.irreps[i].dim);
        let dj = vertex.phi_t.cols();
        Matrix::from_fn(dj, di * da, |k, col| {
            let (x, y) = (col / da, col % da);
            vertex.phi_t.get(y * di + x, k)
        })
    }

    /// Pairs `(φ, φᵗ)` over all `k` and `φ ∈ B(ij, k)`, as maps on `i ⊗ j`.
    pub fn resolution_of_identity(&self, i: usize, j: usize) -> Vec<(usize, &FusionVertex)> {
        (0..self.num_simples())
            .flat_map(|k| self.fusion[i][j][k].iter().map(move |v| (k, v)))
            .collect()
    }

    pub fn resolution_defect(&self, i: usize, j: usize) -> f64 {
        let d = self.irreps[i].dim * self.irreps[j].dim;
        let mut sum = Matrix::zeros(d, d);
        for (_, v) in self.resolution_of_identity(i, j) {
            sum = &sum + &(&v.phi_t * &v.phi);
        }
        sum.deviation(&Matrix::identity(d))
    }

    /// Deviation of the identity on `k* ⊗ i` from
    /// `Σ_j Σ_{φ ∈ B(ij,k)} (d_j/d_k) (cap-φ-φᵗ-cup composite)`.
    pub fn rebracket_resolution_defect(&self, i: usize, k: usize) -> f64 {
        let (di, dk) = (self.irreps[i].dim, self.irreps[k].dim);
        let mut sum = Matrix::zeros(dk * di, dk * di);
        for j in 0..self.num_simples() {
            let dj = self.irreps[j].dim;
            let weight = self.qdim(j) / self.qdim(k);
            for v in &self.fusion[i][j][k] {
                let term = Matrix::from_fn(dk * di, dk * di, |row, col| {
                    let (x2, y2) = (row / di, row % di);
                    let (x, y) = (col / di, col % di);
                    let mut acc = ZERO;
                    for b in 0..dj {
                        acc += v.phi.get(x, y * dj + b) * v.phi_t.get(y2 * dj + b, x2);
                    }
                    acc
                });
                sum = &sum + &term.scale(c64(weight));
            }
        }
        sum.deviation(&Matrix::identity(dk * di))
    }

    /// Twist on an object, from the curl `(id ⊗ ev')(s ⊗ id)(id ⊗ coev)`.
    pub fn twist_of(&self, x: &RepObject) -> Matrix {
        let d = x.dim;
        let id = Matrix::identity(d);
        let open = id.tensor(&cup(d));
        let crossed = apply_local(1, &swap(d, d), d, &open);
        apply_local(d, &cap(d), 1, &crossed)
    }

    /// Deviation between `θ_k ∘ φ` and `φ ∘ (θ_i ⊗ θ_j)` for a vertex of `B(ij, k)`.
    pub fn twist_trick_check(&self, i: usize, j: usize, k: usize, vertex: &FusionVertex) -> f64 {
        let tk = self.twist_of(&self.simples[k]).scale(c64(self.twist(k)));
        let ti = self.twist_of(&self.simples[i]).scale(c64(self.twist(i)));
        let tj = self.twist_of(&self.simples[j]).scale(c64(self.twist(j)));
        let lhs = &tk * &vertex.phi;
        let rhs = &vertex.phi * &ti.tensor(&tj);
        lhs.relative_deviation(&rhs)
    }

    /// Closed loop `ev' ∘ coev` on `X`, equal to the quantum dimension.
    pub fn loop_value(&self, x: &RepObject) -> C64 {
        let d = x.dim;
        (&cap(d) * &apply_local(1, &swap(d, d), 1, &cup(d))).get(0, 0)
    }

    /// The unlabelled loop `Σ_i (d_i/D) d_i`.
    pub fn averaged_loop(&self) -> C64 {
        (0..self.num_simples())
            .map(|i| self.loop_value(&self.simples[i]) * c64(self.qdim(i) / self.global_dim))
            .fold(ZERO, |a, b| a + b)
    }
}

/// `ev: X* ⊗ X -> 1` (and `ev': X ⊗ X* -> 1`): row vector `Σ_a e_a ⊗ e_a`.
pub fn cap(d: usize) -> Matrix {
    Matrix::from_fn(1, d * d, |_, c| if c / d == c % d { ONE } else { ZERO })
}

/// `coev: 1 -> X ⊗ X*` (and `coev': 1 -> X* ⊗ X`).
pub fn cup(d: usize) -> Matrix {
    cap(d).transpose()
}

/// Symmetry `s_{X,Y}: X ⊗ Y -> Y ⊗ X`.
pub fn symmetry(x: &RepObject, y: &RepObject) -> Matrix {
    swap(x.dim, y.dim)
}

/// Dual-basis transposes under the composition pairing `φ ∘ ψᵗ = δ id_k`.
pub fn transposes(basis: &[Matrix], dk: usize) -> Result<Vec<Matrix>> {
    let n = basis.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let adj: Vec<Matrix> = basis.iter().map(|b| b.adjoint()).collect();
    let gram = Matrix::from_fn(n, n, |a, b| (&basis[a] * &adj[b]).trace() / c64(dk as f64));
    let sv = gram.singular_values();
    let sigma = sv.last().copied().unwrap_or(0.0);
    if sigma < 1e-8 * sv[0].max(1.0) {
        return Err(Error::SingularPairing { sigma });
    }
    let inv = gram.inverse().map_err(|_| Error::SingularPairing { sigma })?;
    Ok((0..n)
        .map(|m| {
            let mut t = Matrix::zeros(adj[0].rows(), adj[0].cols());
            for (l, a) in adj.iter().enumerate() {
                t = &t + &a.scale(inv.get(l, m));
            }
            t
        })
        .collect())
}

/// Zig-zag `(id ⊗ ev)(coev ⊗ id)` on a `d`-dimensional object.
pub fn zigzag(d: usize) -> Matrix {
    let id = Matrix::identity(d);
    &id.tensor(&cap(d)) * &cup(d).tensor(&id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::BUILTIN_GROUPS;
    use crate::rng::Rng;

    fn cat(name: &str) -> RepCategory {
        RepCategory::builtin(name, 11).unwrap()
    }

    #[test]
    fn hom_of_unit_is_one_dimensional() {
        let c = cat("z2");
        let basis = c.hom_basis(c.unit(), c.unit());
        assert_eq!(basis.len(), 1);
        assert!((basis[0].mat.get(0, 0).norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn hom_dimensions_match_fusion_multiplicities() {
        for name in ["z2", "s3", "q8"] {
            let c = cat(name);
            for i in 0..c.num_simples() {
                for j in 0..c.num_simples() {
                    let ij = c.tensor(c.simple(i), c.simple(j));
                    for k in 0..c.num_simples() {
                        let n = c.hom_basis(&ij, c.simple(k)).len();
                        assert_eq!(Ok(n), c.fusion_mult(i, j, k), "{name} {i} {j} {k}");
                    }
                }
            }
        }
    }

    #[test]
    fn hom_basis_is_equivariant_and_orthonormal() {
        let c = cat("s3");
        let v = c.simple(2);
        let vv = c.tensor(v, v);
        let basis = c.hom_basis(&vv, &vv);
        assert_eq!(basis.len(), 3);
        for (a, f) in basis.iter().enumerate() {
            assert!(c.is_equivariant(&vv, &vv, &f.mat) < 1e-10);
            for (b, g) in basis.iter().enumerate() {
                let ip = (&f.mat * &g.mat.adjoint()).trace();
                let want = if a == b { 1.0 } else { 0.0 };
                assert!((ip - c64(want)).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn decomposition_resolves_identity() {
        let c = cat("d4");
        let mut rng = Rng::new(3);
        let x = c.tensor(c.simple(4), c.simple(4));
        let u = rng.unitary(x.dim());
        let x = c.conjugate(&x, &u);
        let mut sum = Matrix::zeros(x.dim(), x.dim());
        for e in c.decomposition(&x) {
            let k = c.simple(e.irrep);
            assert!(c.is_equivariant(k, &x, &e.iota) < 1e-10);
            sum = &sum + &(&e.iota * &e.iota.adjoint());
        }
        assert!(sum.approx_eq(&Matrix::identity(x.dim()), 1e-10));
    }

    #[test]
    fn duality_maps_are_equivariant_and_zigzag() {
        for name in BUILTIN_GROUPS {
            let c = cat(name);
            for i in 0..c.num_simples() {
                let x = c.simple(i);
                let xd = c.simple_dual(i);
                let d = x.dim();
                let unit = c.unit();
                assert!(c.is_equivariant(&c.tensor(xd, x), unit, &cap(d)) < 1e-12);
                assert!(c.is_equivariant(&c.tensor(x, xd), unit, &cap(d)) < 1e-12);
                assert!(c.is_equivariant(unit, &c.tensor(x, xd), &cup(d)) < 1e-12);
                assert!(zigzag(d).approx_eq(&Matrix::identity(d), 0.0));
                assert!((c.loop_value(x) - c64(c.qdim(i))).norm() < 1e-12);
                assert!(c.twist_of(x).approx_eq(&Matrix::identity(d), 1e-12));
                let dual = c.simple(c.dual_index(i));
                assert_eq!(c.hom_basis(xd, dual).len(), 1);
            }
            assert!((c.averaged_loop() - ONE).norm() < 1e-12, "{name}");
        }
    }

    #[test]
    fn symmetry_is_involutive_and_natural() {
        let c = cat("s3");
        let mut rng = Rng::new(9);
        let x = c.direct_sum(&[c.simple(1), c.simple(2)]);
        let y = c.simple(2).clone();
        let s = symmetry(&x, &y);
        assert!((&symmetry(&y, &x) * &s).approx_eq(&Matrix::identity(6), 0.0));
        assert!(c.is_equivariant(&c.tensor(&x, &y), &c.tensor(&y, &x), &s) < 1e-12);
        let random_endo = |obj: &Rep, rng: &mut Rng| -> Matrix {
            let mut m = Matrix::zeros(obj.dim(), obj.dim());
            for b in c.hom_basis(obj, obj) {
                m = &m + &b.mat.scale(rng.complex());
            }
            m
        };
        let f = random_endo(&x, &mut rng);
        let g = random_endo(&y, &mut rng);
        let lhs = &g.tensor(&f) * &s;
        let rhs = &s * &f.tensor(&g);
        assert!(lhs.approx_eq(&rhs, 1e-12));
    }

    #[test]
    fn transposes_are_dual_bases_and_resolve_identity() {
        for name in BUILTIN_GROUPS {
            let c = cat(name);
            let n = c.num_simples();
            for i in 0..n {
                for j in 0..n {
                    assert!(c.resolution_defect(i, j) < 1e-9, "{name} {i} {j}");
                    for k in 0..n {
                        let b = c.fusion_basis(i, j, k);
                        for (p, v) in b.iter().enumerate() {
                            for (q, w) in b.iter().enumerate() {
                                let want = if p == q {
                                    Matrix::identity(c.irreps()[k].dim)
                                } else {
                                    Matrix::zeros(c.irreps()[k].dim, c.irreps()[k].dim)
                                };
                                assert!((&v.phi * &w.phi_t).approx_eq(&want, 1e-10));
                            }
                            assert!(c.twist_trick_check(i, j, k, v) < 1e-12);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn s3_standard_resolution_has_three_terms() {
        let c = cat("s3");
        assert_eq!(c.resolution_of_identity(2, 2).len(), 3);
    }

    #[test]
    fn bent_vertices_resolve_the_identity() {
        for name in BUILTIN_GROUPS {
            let c = cat(name);
            for i in 0..c.num_simples() {
                for k in 0..c.num_simples() {
                    assert!(c.rebracket_resolution_defect(i, k) < 1e-9, "{name} {i} {k}");
                }
            }
        }
    }

    #[test]
    fn phi_star_shapes_and_unit_case() {
        let c = cat("s3");
        let v = &c.fusion_basis(0, 2, 2)[0];
        let ps = c.phi_star(0, 2, v);
        assert_eq!(ps.shape(), (2, 2));
        // a = 1: φ is an isometry of i, φ* is its transpose-inverse.
        let prod = &ps * &v.phi.transpose();
        assert!(prod.approx_eq(&Matrix::identity(2), 1e-10));
        let w = &c.fusion_basis(2, 2, 1)[0];
        assert_eq!(c.phi_star(2, 2, w).shape(), (1, 4));
    }

    #[test]
    fn object_validation() {
        let c = cat("z2");
        let bad = vec![Matrix::identity(1), Matrix::scalar(c64(2.0))];
        assert!(c.object(bad).is_err());
        let good = vec![Matrix::identity(1), Matrix::scalar(c64(-1.0))];
        assert_eq!(c.object(good).unwrap().dim(), 1);
    }

    #[test]
    fn transposes_reject_degenerate_basis() {
        let b = vec![Matrix::identity(2), Matrix::identity(2)];
        assert!(matches!(transposes(&b, 2), Err(Error::SingularPairing { .. })));
    }
}
