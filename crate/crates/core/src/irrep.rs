//! Complex irreducible representations, found by splitting the regular
//! representation with averaged random Hermitian operators.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{c64, Matrix, C64, ONE, ZERO};
use crate::rng::Rng;

const CHARACTER_TOLERANCE: f64 = 1e-6;
const SPLIT_ATTEMPTS: usize = 32;

#[derive(Clone, Debug)]
pub struct Irrep {
    pub dim: usize,
    /// `matrices[g]` is the unitary `ρ(g)`.
    pub matrices: Vec<Matrix>,
    /// Character value per conjugacy class.
    pub character: Vec<C64>,
    /// `+1` for every representation category of a finite group.
    pub twist: i8,
}

impl Irrep {
    pub fn quantum_dimension(&self) -> f64 {
        self.dim as f64
    }
}

/// All irreducible representations, the trivial one first, then by dimension
/// and character values. The basis of each irrep depends on `seed`.
pub fn irreps(group: &FiniteGroup, seed: u64) -> Result<Vec<Irrep>> {
    let mut rng = Rng::derive(seed, 0x1227);
    let n = group.order();
    let regular: Vec<Matrix> = group
        .elements()
        .map(|g| Matrix::from_fn(n, n, |r, c| if group.mul(g, c) == r { ONE } else { ZERO }))
        .collect();

    let mut pending = vec![regular];
    let mut found: Vec<Vec<Matrix>> = Vec::new();
    while let Some(rep) = pending.pop() {
        let norm = character_norm(group, &rep);
        if (norm - 1.0).abs() < CHARACTER_TOLERANCE {
            if !found.iter().any(|f| same_character(group, f, &rep)) {
                found.push(rep);
            }
            continue;
        }
        if norm < 1.0 {
            return Err(Error::ConvergenceFailure(format!(
                "subrepresentation with character norm {norm}"
            )));
        }
        pending.extend(split_once(group, &rep, &mut rng)?);
    }

    let mut out: Vec<Irrep> = found
        .into_iter()
        .map(|matrices| {
            let dim = matrices[0].rows();
            let character = group
                .conjugacy_classes()
                .iter()
                .map(|class| matrices[class[0]].trace())
                .collect();
            Irrep {
                dim,
                matrices,
                character,
                twist: 1,
            }
        })
        .collect();
    out.sort_by(compare_irreps);
    // The trivial representation is stored exactly.
    if let Some(first) = out.first_mut() {
        if first.dim == 1 && first.character.iter().all(|z| (z - ONE).norm() < CHARACTER_TOLERANCE) {
            first.matrices = vec![Matrix::identity(1); n];
            first.character = vec![ONE; group.conjugacy_classes().len()];
        }
    }

    let total: usize = out.iter().map(|i| i.dim * i.dim).sum();
    if total != n || out.len() != group.conjugacy_classes().len() {
        return Err(Error::ConvergenceFailure(format!(
            "found {} irreps with sum of squared dimensions {total}, expected {n}",
            out.len()
        )));
    }
    Ok(out)
}

fn character_norm(group: &FiniteGroup, rep: &[Matrix]) -> f64 {
    group
        .elements()
        .map(|g| rep[g].trace().norm_sqr())
        .sum::<f64>()
        / group.order() as f64
}

fn same_character(group: &FiniteGroup, a: &[Matrix], b: &[Matrix]) -> bool {
    a[0].rows() == b[0].rows()
        && group
            .elements()
            .all(|g| (a[g].trace() - b[g].trace()).norm() < CHARACTER_TOLERANCE)
}

/// Splits a reducible unitary representation along the eigenspaces of an
/// equivariant Hermitian operator.
fn split_once(group: &FiniteGroup, rep: &[Matrix], rng: &mut Rng) -> Result<Vec<Vec<Matrix>>> {
    let dim = rep[0].rows();
    let weight = c64(1.0 / group.order() as f64);
    for _ in 0..SPLIT_ATTEMPTS {
        let h = rng.hermitian(dim);
        let mut t = Matrix::zeros(dim, dim);
        for g in group.elements() {
            t = &t + &(&(&rep[g] * &h) * &rep[g].adjoint());
        }
        let t = t.scale(weight);
        let (values, vectors) = t.hermitian_eigen();
        let scale = values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        let mut clusters: Vec<(usize, usize)> = Vec::new();
        let mut start = 0;
        for k in 1..=dim {
            if k == dim || values[k] - values[k - 1] > 1e-6 * scale {
                clusters.push((start, k));
                start = k;
            }
        }
        if clusters.len() < 2 {
            continue;
        }
        return Ok(clusters
            .iter()
            .map(|&(a, b)| {
                let q = vectors.block(0, a, dim, b - a);
                let qh = q.adjoint();
                rep.iter().map(|m| &(&qh * m) * &q).collect()
            })
            .collect());
    }
    Err(Error::ConvergenceFailure(format!(
        "no splitting of a {dim}-dimensional representation after {SPLIT_ATTEMPTS} attempts"
    )))
}

fn is_trivial(irrep: &Irrep) -> bool {
    irrep.dim == 1 && irrep.character.iter().all(|z| (z - ONE).norm() < CHARACTER_TOLERANCE)
}

fn quantise(x: f64) -> i64 {
    libm::round(x / CHARACTER_TOLERANCE) as i64
}

fn compare_irreps(a: &Irrep, b: &Irrep) -> Ordering {
    is_trivial(b)
        .cmp(&is_trivial(a))
        .then(a.dim.cmp(&b.dim))
        .then_with(|| {
            for (x, y) in a.character.iter().zip(&b.character) {
                let ord = quantise(y.re)
                    .cmp(&quantise(x.re))
                    .then(quantise(y.im).cmp(&quantise(x.im)));
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            Ordering::Equal
        })
}

/// Class-weighted inner product `(1/|G|) Σ_g χ(g) conj(ψ(g))`.
pub fn character_inner(group: &FiniteGroup, chi: &[C64], psi: &[C64]) -> C64 {
    let mut acc = ZERO;
    for (class, (x, y)) in group.conjugacy_classes().iter().zip(chi.iter().zip(psi)) {
        acc += x * y.conj() * c64(class.len() as f64);
    }
    acc / c64(group.order() as f64)
}

/// Multiplicity of `k` in `i ⊗ j`.
pub fn fusion_mult(group: &FiniteGroup, i: &Irrep, j: &Irrep, k: &Irrep) -> Result<usize> {
    let product: Vec<C64> = i.character.iter().zip(&j.character).map(|(a, b)| a * b).collect();
    let value = character_inner(group, &product, &k.character);
    let rounded = libm::round(value.re);
    if (value - c64(rounded)).norm() > CHARACTER_TOLERANCE || rounded < 0.0 {
        return Err(Error::NonIntegral { value: value.re });
    }
    Ok(rounded as usize)
}

/// Index of the irrep whose character is the complex conjugate of `irreps[i]`.
pub fn dual_index(irreps: &[Irrep], i: usize) -> usize {
    irreps
        .iter()
        .position(|k| {
            k.dim == irreps[i].dim
                && k
                    .character
                    .iter()
                    .zip(&irreps[i].character)
                    .all(|(a, b)| (a - b.conj()).norm() < CHARACTER_TOLERANCE)
        })
        .expect("the dual of an irrep is an irrep")
}

/// `D = Σ_i d_i²`.
pub fn global_dimension(irreps: &[Irrep]) -> f64 {
    irreps.iter().map(|i| (i.dim * i.dim) as f64).sum()
}

/// Largest deviation from being a unitary, irreducible homomorphism.
pub fn irrep_defect(group: &FiniteGroup, irrep: &Irrep) -> f64 {
    let id = Matrix::identity(irrep.dim);
    let mut worst: f64 = 0.0;
    for g in group.elements() {
        let m = &irrep.matrices[g];
        worst = worst.max((&m.adjoint() * m).deviation(&id));
        for h in group.elements() {
            let gh = &irrep.matrices[group.mul(g, h)];
            worst = worst.max((m * &irrep.matrices[h]).deviation(gh));
        }
    }
    // Schur: the commutant is spanned by the identity.
    let d = irrep.dim;
    let mut rows = Vec::new();
    for g in group.elements() {
        let m = &irrep.matrices[g];
        rows.push(&m.tensor(&Matrix::identity(d)) - &Matrix::identity(d).tensor(&m.transpose()));
    }
    let mut stacked = Matrix::zeros(rows.len() * d * d, d * d);
    for (k, r) in rows.iter().enumerate() {
        stacked.set_block(k * d * d, 0, r);
    }
    let commutant = stacked.kernel_basis(crate::linalg::RANK_THRESHOLD).cols();
    if commutant != 1 {
        worst = f64::INFINITY;
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::BUILTIN_GROUPS;

    fn dims(name: &str) -> Vec<usize> {
        let g = FiniteGroup::builtin(name).unwrap();
        irreps(&g, 1).unwrap().iter().map(|i| i.dim).collect()
    }

    #[test]
    fn dimensions_of_builtins() {
        assert_eq!(dims("z2"), vec![1, 1]);
        assert_eq!(dims("s3"), vec![1, 1, 2]);
        assert_eq!(dims("d4"), vec![1, 1, 1, 1, 2]);
        assert_eq!(dims("q8"), vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn every_builtin_is_complete_and_valid() {
        for name in BUILTIN_GROUPS {
            let g = FiniteGroup::builtin(name).unwrap();
            let irr = irreps(&g, 3).unwrap();
            let total: usize = irr.iter().map(|i| i.dim * i.dim).sum();
            assert_eq!(total, g.order());
            assert_eq!(global_dimension(&irr), g.order() as f64);
            for i in &irr {
                assert!(irrep_defect(&g, i) < 1e-9, "{name}");
                assert_eq!(i.twist, 1);
            }
            for (a, x) in irr.iter().enumerate() {
                for (b, y) in irr.iter().enumerate() {
                    let ip = character_inner(&g, &x.character, &y.character);
                    let expect = if a == b { 1.0 } else { 0.0 };
                    assert!((ip - c64(expect)).norm() < 1e-9);
                }
                assert_eq!(dual_index(&irr, dual_index(&irr, a)), a);
            }
        }
    }

    #[test]
    fn z4_characters_are_dft() {
        let g = FiniteGroup::builtin("z4").unwrap();
        let irr = irreps(&g, 5).unwrap();
        // Each character is k -> i^{jk} for a distinct j.
        let mut js: Vec<usize> = irr
            .iter()
            .map(|i| {
                (0..4)
                    .find(|&j| {
                        (0..4).all(|k| {
                            let phase = core::f64::consts::FRAC_PI_2 * ((j * k) % 4) as f64;
                            let want = C64::new(libm::cos(phase), libm::sin(phase));
                            (i.character[g.class_of(k)] - want).norm() < 1e-9
                        })
                    })
                    .unwrap()
            })
            .collect();
        js.sort_unstable();
        assert_eq!(js, vec![0, 1, 2, 3]);
    }

    #[test]
    fn fusion_rules() {
        let z2 = FiniteGroup::builtin("z2").unwrap();
        let irr = irreps(&z2, 0).unwrap();
        assert_eq!(fusion_mult(&z2, &irr[1], &irr[1], &irr[0]), Ok(1));
        let s3 = FiniteGroup::builtin("s3").unwrap();
        let irr = irreps(&s3, 0).unwrap();
        let v = &irr[2];
        assert_eq!(fusion_mult(&s3, v, v, v), Ok(1));
        for (jj, j) in irr.iter().enumerate() {
            for (kk, k) in irr.iter().enumerate() {
                assert_eq!(fusion_mult(&s3, &irr[0], j, k), Ok(usize::from(jj == kk)));
            }
        }
    }

    #[test]
    fn ordering_does_not_depend_on_seed() {
        let g = FiniteGroup::builtin("d4").unwrap();
        let a = irreps(&g, 1).unwrap();
        let b = irreps(&g, 99).unwrap();
        for (x, y) in a.iter().zip(&b) {
            for (p, q) in x.character.iter().zip(&y.character) {
                assert!((p - q).norm() < 1e-9);
            }
        }
    }
}
