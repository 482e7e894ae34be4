//! G-graded modules with a compatible G-action (conjugation-equivariant vector
//! bundles over G) and their two tensor products.

use std::sync::Arc;

use bilax_core::group::FiniteGroup;
use bilax_core::linalg::{apply_local, c64, Matrix};

use crate::error::{OracleError, Result};

const CHECK_TOL: f64 = 1e-8;
const RANK_TOL: f64 = 1e-7;

#[derive(Clone, Debug)]
pub struct YdModule {
    group: Arc<FiniteGroup>,
    action: Vec<Matrix>,
    /// `grading[g]` projects onto the fibre over `g`.
    grading: Vec<Matrix>,
}

impl YdModule {
    /// Checks the grading is a resolution of the identity by orthogonal
    /// idempotents and that `ρ(h) P_g ρ(h)⁻¹ = P_{hgh⁻¹}`.
    pub fn new(group: Arc<FiniteGroup>, action: Vec<Matrix>, grading: Vec<Matrix>) -> Result<Self> {
        let m = Self::unchecked(group, action, grading);
        let defect = m.defect();
        if defect > CHECK_TOL {
            return Err(OracleError::InvalidModule(format!("invariant defect {defect:e}")));
        }
        Ok(m)
    }

    pub(crate) fn unchecked(group: Arc<FiniteGroup>, action: Vec<Matrix>, grading: Vec<Matrix>) -> Self {
        Self { group, action, grading }
    }

    /// Largest violation of the module invariants. Idempotents summing to
    /// the identity whose ranks add up to the dimension are automatically
    /// mutually orthogonal, and the group laws only need checking on
    /// generators.
    pub fn defect(&self) -> f64 {
        let g = &self.group;
        let n = self.dim();
        let id = Matrix::identity(n);
        if self.action.len() != g.order() || self.grading.len() != g.order() {
            return f64::INFINITY;
        }
        let gens = generators(g);
        let mut worst: f64 = 0.0;
        let mut total = Matrix::zeros(n, n);
        let mut rank_sum = 0.0;
        for a in g.elements() {
            let (rho, p) = (&self.action[a], &self.grading[a]);
            total = &total + p;
            worst = worst.max((&rho.adjoint() * rho).deviation(&id));
            worst = worst.max((p * p).deviation(p));
            let tr = p.trace();
            worst = worst.max((tr.re - tr.re.round()).abs()).max(tr.im.abs());
            rank_sum += tr.re;
            for &s in &gens {
                worst = worst.max((rho * &self.action[s]).deviation(&self.action[g.mul(a, s)]));
                let moved = &(&self.action[s] * p) * &self.action[s].adjoint();
                worst = worst.max(moved.deviation(&self.grading[g.conjugate(s, a)]));
            }
        }
        worst.max(total.deviation(&id)).max((rank_sum - n as f64).abs())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.action.first().map_or(0, Matrix::rows)
    }

    pub fn action(&self, g: usize) -> &Matrix {
        &self.action[g]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    pub fn projector(&self, g: usize) -> &Matrix {
        &self.grading[g]
    }

    pub fn projectors(&self) -> &[Matrix] {
        &self.grading
    }

    pub fn fibre_dim(&self, g: usize) -> usize {
        self.grading[g].trace().re.round() as usize
    }

    /// Elements with a nonzero fibre.
    pub fn support(&self) -> Vec<usize> {
        self.group.elements().filter(|&g| self.fibre_dim(g) > 0).collect()
    }

    /// The trivial bundle: `rep` placed over the identity.
    pub fn trivial(group: Arc<FiniteGroup>, action: Vec<Matrix>) -> Result<Self> {
        let n = action.first().map_or(0, Matrix::rows);
        let e = group.identity();
        let grading = group
            .elements()
            .map(|g| if g == e { Matrix::identity(n) } else { Matrix::zeros(n, n) })
            .collect();
        Self::new(group, action, grading)
    }

    /// Functions on the conjugacy class `class` with values in `rep`:
    /// `h·(δ_k ⊗ x) = δ_{hkh⁻¹} ⊗ h·x`, graded by `k`.
    pub fn class_bundle(group: Arc<FiniteGroup>, class: usize, rep: &[Matrix]) -> Result<Self> {
        let members = group
            .conjugacy_classes()
            .get(class)
            .ok_or_else(|| OracleError::InvalidModule(format!("no conjugacy class {class}")))?
            .clone();
        let m = members.len();
        let dx = rep.first().map_or(0, Matrix::rows);
        let position = |k: usize| members.iter().position(|&x| x == k).expect("class is closed");
        let action = group
            .elements()
            .map(|h| {
                let mut perm = Matrix::zeros(m, m);
                for (i, &k) in members.iter().enumerate() {
                    perm.set(position(group.conjugate(h, k)), i, c64(1.0));
                }
                perm.tensor(&rep[h])
            })
            .collect();
        let grading = group
            .elements()
            .map(|g| {
                let mut p = Matrix::zeros(m, m);
                if let Some(i) = members.iter().position(|&x| x == g) {
                    p.set(i, i, c64(1.0));
                }
                p.tensor(&Matrix::identity(dx))
            })
            .collect();
        Self::new(group, action, grading)
    }

    /// Functions on G with the conjugation action, each point its own fibre.
    pub fn regular_bundle(group: Arc<FiniteGroup>) -> Result<Self> {
        let parts = (0..group.conjugacy_classes().len())
            .map(|c| Self::class_bundle(group.clone(), c, &vec![Matrix::identity(1); group.order()]))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::direct_sum(&parts.iter().collect::<Vec<_>>()))
    }

    pub fn direct_sum(parts: &[&YdModule]) -> YdModule {
        let group = parts[0].group.clone();
        let mut action: Vec<Matrix> = vec![Matrix::zeros(0, 0); group.order()];
        let mut grading = action.clone();
        for p in parts {
            for g in group.elements() {
                action[g] = action[g].direct_sum(&p.action[g]);
                grading[g] = grading[g].direct_sum(&p.grading[g]);
            }
        }
        YdModule::unchecked(group, action, grading)
    }

    /// Transport along a unitary change of basis `v ↦ u v`.
    pub fn conjugate(&self, u: &Matrix) -> YdModule {
        let tr = |m: &Matrix| &(u * m) * &u.adjoint();
        YdModule::unchecked(
            self.group.clone(),
            self.action.iter().map(tr).collect(),
            self.grading.iter().map(tr).collect(),
        )
    }

    /// `(ρ, P)` restricted along an isometry `basis` whose image is invariant.
    pub(crate) fn restrict(&self, basis: &Matrix) -> YdModule {
        let tr = |m: &Matrix| &(&basis.adjoint() * m) * basis;
        YdModule::unchecked(
            self.group.clone(),
            self.action.iter().map(tr).collect(),
            self.grading.iter().map(tr).collect(),
        )
    }

    /// Largest defect of `f: self -> other` as a map of graded modules.
    pub fn morphism_defect(&self, other: &YdModule, f: &Matrix) -> f64 {
        let scale = f.max_abs().max(1.0);
        self.group
            .elements()
            .map(|g| {
                let a = (&other.action[g] * f).deviation(&(f * &self.action[g]));
                let p = (&other.grading[g] * f).deviation(&(f * &self.grading[g]));
                a.max(p) / scale
            })
            .fold(0.0, f64::max)
    }

    /// Dimension of the space of graded equivariant maps `self -> other`.
    pub fn hom_dim(&self, other: &YdModule) -> usize {
        let (m, n) = (self.dim(), other.dim());
        if m == 0 || n == 0 {
            return 0;
        }
        // Row-major vec(X): vec(A X) = (A ⊗ I) vec X, vec(X B) = (I ⊗ Bᵀ) vec X.
        let mut gram = Matrix::zeros(n * m, n * m);
        let (im, inn) = (Matrix::identity(m), Matrix::identity(n));
        for g in self.group.elements() {
            for (a, b) in [(&other.action[g], &self.action[g]), (&other.grading[g], &self.grading[g])] {
                let c = &a.tensor(&im) - &inn.tensor(&b.transpose());
                gram = &gram + &(&c.adjoint() * &c);
            }
        }
        n * m - gram.rank(RANK_TOL)
    }

    /// Multiplicity of a simple module `s` in `self`.
    pub fn multiplicity(&self, s: &YdModule) -> usize {
        s.hom_dim(self)
    }
}

/// A generating set, chosen greedily in element order.
pub(crate) fn generators(group: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut reached = vec![group.identity()];
    for h in group.elements() {
        if !reached.contains(&h) {
            gens.push(h);
            reached = closure(group, &gens);
        }
    }
    gens
}

/// The subgroup generated by `gens`.
pub(crate) fn closure(group: &FiniteGroup, gens: &[usize]) -> Vec<usize> {
    let mut reached = vec![group.identity()];
    let mut i = 0;
    while i < reached.len() {
        for &s in gens {
            let y = group.mul(reached[i], s);
            if !reached.contains(&y) {
                reached.push(y);
            }
        }
        i += 1;
    }
    reached
}

/// A fibrewise product together with its embedding into `m ⊗ n`.
#[derive(Clone, Debug)]
pub struct Fibrewise {
    pub module: YdModule,
    /// Orthonormal columns spanning `⊕_g m_g ⊗ n_g` inside `m ⊗ n`.
    pub basis: Matrix,
}

/// `(m ⊗_f n)_g = m_g ⊗ n_g` with the diagonal action. The gradings need not
/// be orthogonal, so the fibres are spanned together as the image of
/// `Σ_g P_g ⊗ P_g` rather than block by block.
pub fn fibrewise(m: &YdModule, n: &YdModule) -> Fibrewise {
    let group = &m.group;
    let grading: Vec<Matrix> = group.elements().map(|g| m.grading[g].tensor(&n.grading[g])).collect();
    let mut diagonal = Matrix::zeros(m.dim() * n.dim(), m.dim() * n.dim());
    for p in &grading {
        diagonal = &diagonal + p;
    }
    let basis = diagonal.column_space(RANK_TOL);
    let ambient = YdModule::unchecked(
        group.clone(),
        group.elements().map(|g| m.action[g].tensor(&n.action[g])).collect(),
        grading,
    );
    Fibrewise { module: ambient.restrict(&basis), basis }
}

/// `(m ⊗_conv n)_g = ⊕_{ab=g} m_a ⊗ n_b` with the diagonal action.
pub fn convolution(m: &YdModule, n: &YdModule) -> YdModule {
    let group = m.group.clone();
    let dim = m.dim() * n.dim();
    let mut grading = vec![Matrix::zeros(dim, dim); group.order()];
    for a in group.elements() {
        for b in group.elements() {
            let g = group.mul(a, b);
            grading[g] = &grading[g] + &m.grading[a].tensor(&n.grading[b]);
        }
    }
    let action = group.elements().map(|g| m.action[g].tensor(&n.action[g])).collect();
    YdModule::unchecked(group, action, grading)
}

/// Defect of the canonical map
/// `(m ⊗_f n) ⊗_conv (m' ⊗_f n') -> (m ⊗_conv m') ⊗_f (n ⊗_conv n')`
/// as an isometric morphism of graded modules. The target is handled inside
/// `m ⊗ m' ⊗ n ⊗ n'` with grading `R_g ⊗ S_g`; intertwining all of these
/// forces the image into the fibrewise subspace.
pub fn inclusion_relation_check(m: &YdModule, m2: &YdModule, n: &YdModule, n2: &YdModule) -> f64 {
    let group = &m.group;
    let left_a = fibrewise(m, n);
    let left_b = fibrewise(m2, n2);
    let source = convolution(&left_a.module, &left_b.module);
    let (r, s) = (convolution(m, m2), convolution(n, n2));
    let map = shuffle_rows(&left_a.basis.tensor(&left_b.basis), [m.dim(), n.dim(), m2.dim(), n2.dim()]);
    let (dr, ds) = (r.dim(), s.dim());
    let both = |a: &Matrix, b: &Matrix, x: &Matrix| apply_local(1, a, ds, &apply_local(dr, b, 1, x));
    let scale = map.max_abs().max(1.0);
    let mut worst = (&map.adjoint() * &map).deviation(&Matrix::identity(source.dim()));
    for g in group.elements() {
        let graded = both(&r.grading[g], &s.grading[g], &map);
        worst = worst.max(graded.deviation(&(&map * &source.grading[g])) / scale);
    }
    for h in generators(group) {
        let moved = both(&r.action[h], &s.action[h], &map);
        worst = worst.max(moved.deviation(&(&map * &source.action[h])) / scale);
    }
    worst
}

/// Rows indexed by `m ⊗ n ⊗ m' ⊗ n'` reordered to `m ⊗ m' ⊗ n ⊗ n'`.
fn shuffle_rows(x: &Matrix, dims: [usize; 4]) -> Matrix {
    let [a, b, c, d] = dims;
    let mut out = Matrix::zeros(x.rows(), x.cols());
    for i in 0..a {
        for j in 0..b {
            for k in 0..c {
                for l in 0..d {
                    let from = ((i * b + j) * c + k) * d + l;
                    let to = ((i * c + k) * b + j) * d + l;
                    for col in 0..x.cols() {
                        out.set(to, col, x.get(from, col));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use bilax_core::linalg::leg_permutation;
    use bilax_core::rng::Rng;

    fn group(name: &str) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::builtin(name).unwrap())
    }

    #[test]
    fn shuffle_matches_leg_permutation() {
        let dims = [2, 3, 1, 2];
        let x = Rng::new(4).matrix(12, 3);
        let dense = &leg_permutation(&dims, &[0, 2, 1, 3]) * &x;
        assert!(shuffle_rows(&x, dims).deviation(&dense) < 1e-15);
    }

    #[test]
    fn overlapping_fibres_are_rejected() {
        let g = group("z2");
        let id = Matrix::identity(2);
        let half = id.scale(c64(0.5));
        let err = YdModule::new(g, vec![id.clone(), id], vec![half.clone(), half]);
        assert!(matches!(err, Err(OracleError::InvalidModule(_))));
    }

    #[test]
    fn grading_must_follow_conjugation() {
        let g = group("s3");
        let class = g.conjugacy_classes().iter().position(|c| c.len() == 3).unwrap();
        let ok = YdModule::class_bundle(g.clone(), class, &vec![Matrix::identity(1); 6]).unwrap();
        // Keep the grading, forget the permutation action.
        let broken = YdModule::unchecked(g, vec![Matrix::identity(3); 6], ok.projectors().to_vec());
        assert!(broken.defect() > 0.5);
    }

    #[test]
    fn products_have_expected_dimensions() {
        let g = group("s3");
        let reg = YdModule::regular_bundle(g.clone()).unwrap();
        assert_eq!(convolution(&reg, &reg).dim(), 36);
        assert_eq!(fibrewise(&reg, &reg).module.dim(), 6);
        assert!(fibrewise(&reg, &reg).module.defect() < 1e-10);
        assert!(convolution(&reg, &reg).defect() < 1e-10);
    }

    #[test]
    fn hom_dims_count_equivariant_graded_maps() {
        let g = group("z3");
        let reg = YdModule::regular_bundle(g.clone()).unwrap();
        let triv = YdModule::trivial(g, vec![Matrix::identity(1); 3]).unwrap();
        assert_eq!(reg.hom_dim(&reg), 3);
        assert_eq!(triv.hom_dim(&reg), 1);
        assert_eq!(reg.multiplicity(&triv), 1);
    }
}
