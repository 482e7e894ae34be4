//! Brute-force enumeration of simple graded modules from pairs
//! (conjugacy class, irreducible character of the centralizer).

use std::sync::Arc;

use bilax_core::group::FiniteGroup;
use bilax_core::linalg::{Matrix, C64};

use crate::error::{OracleError, Result};
use crate::yd::{closure, convolution, YdModule};

#[derive(Clone, Debug)]
pub struct SimpleYd {
    pub class: usize,
    /// `χ(h) = exp(2πi · character[h] / exponent)` on the centralizer of the
    /// first member of the class, indexed like `centralizer`.
    pub centralizer: Vec<usize>,
    pub character: Vec<usize>,
    pub exponent: usize,
    pub module: YdModule,
}

/// Number of orbits of `h ↦ khk⁻¹`, `k ∈ subgroup`, on `subgroup`.
pub fn conjugacy_class_count(group: &FiniteGroup, subgroup: &[usize]) -> usize {
    let mut seen = vec![false; group.order()];
    let mut count = 0;
    for &h in subgroup {
        if seen[h] {
            continue;
        }
        count += 1;
        for &k in subgroup {
            seen[group.conjugate(k, h)] = true;
        }
    }
    count
}

/// Number of simple graded modules: one per class and per irreducible
/// representation of the centralizer.
pub fn simple_count(group: &FiniteGroup) -> usize {
    group
        .conjugacy_classes()
        .iter()
        .map(|class| conjugacy_class_count(group, &group.centralizer(class[0])))
        .sum()
}

/// All simple modules, when every centralizer is abelian.
pub fn enumerate_simples(group: &Arc<FiniteGroup>) -> Result<Vec<SimpleYd>> {
    let mut out = Vec::new();
    for (class, members) in group.conjugacy_classes().iter().enumerate() {
        let cent = group.centralizer(members[0]);
        let abelian = cent.iter().all(|&a| cent.iter().all(|&b| group.mul(a, b) == group.mul(b, a)));
        if !abelian {
            return Err(OracleError::Unsupported(format!(
                "centralizer of class {class} is not abelian"
            )));
        }
        let exponent = cent.iter().map(|&h| group.element_order(h)).fold(1, lcm);
        for character in abelian_characters(group, &cent, exponent) {
            let module = induced(group, members, &cent, &character, exponent)?;
            out.push(SimpleYd { class, centralizer: cent.clone(), character, exponent, module });
        }
    }
    Ok(out)
}

/// `table[a][b][c]` is the multiplicity of `simples[c]` in `simples[a] ⊗_conv simples[b]`.
pub fn fusion_table(simples: &[SimpleYd]) -> Vec<Vec<Vec<usize>>> {
    simples
        .iter()
        .map(|a| {
            simples
                .iter()
                .map(|b| {
                    let product = convolution(&a.module, &b.module);
                    simples.iter().map(|c| product.multiplicity(&c.module)).collect()
                })
                .collect()
        })
        .collect()
}

/// When every product of two simples is a single simple with multiplicity
/// one, the resulting multiplication table on indices.
pub fn fusion_law(table: &[Vec<Vec<usize>>]) -> Option<Vec<Vec<usize>>> {
    table
        .iter()
        .map(|row| {
            row.iter()
                .map(|mults| {
                    let nonzero: Vec<usize> = (0..mults.len()).filter(|&c| mults[c] > 0).collect();
                    (nonzero.len() == 1 && mults[nonzero[0]] == 1).then(|| nonzero[0])
                })
                .collect()
        })
        .collect()
}

/// Whether a multiplication table is that of an elementary abelian 2-group:
/// commutative, with an identity, and every element its own inverse.
pub fn is_elementary_abelian_2(law: &[Vec<usize>]) -> bool {
    let n = law.len();
    let Some(unit) = (0..n).find(|&e| (0..n).all(|a| law[e][a] == a && law[a][e] == a)) else {
        return false;
    };
    let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| law[law[a][b]][c] == law[a][law[b][c]])));
    assoc && (0..n).all(|a| law[a][a] == unit && (0..n).all(|b| law[a][b] == law[b][a]))
}

/// Homomorphisms from an abelian subgroup to the `exponent`-th roots of
/// unity, found by assigning values to a greedy generating set and keeping
/// the consistent assignments.
fn abelian_characters(group: &FiniteGroup, sub: &[usize], exponent: usize) -> Vec<Vec<usize>> {
    let pos = |h: usize| sub.iter().position(|&x| x == h).expect("closed subgroup");
    let mut gens = Vec::new();
    let mut reached = vec![group.identity()];
    for &h in sub {
        if !reached.contains(&h) {
            gens.push(h);
            reached = closure(group, &gens);
        }
    }
    let mut out = Vec::new();
    let total = exponent.pow(gens.len() as u32);
    for code in 0..total {
        let values: Vec<usize> = (0..gens.len())
            .map(|i| (code / exponent.pow(i as u32)) % exponent)
            .collect();
        let mut chi: Vec<Option<usize>> = vec![None; sub.len()];
        chi[pos(group.identity())] = Some(0);
        let mut frontier = vec![group.identity()];
        while let Some(x) = frontier.pop() {
            let vx = chi[pos(x)].expect("visited");
            for (s, &v) in gens.iter().zip(&values) {
                let y = group.mul(x, *s);
                if chi[pos(y)].is_none() {
                    chi[pos(y)] = Some((vx + v) % exponent);
                    frontier.push(y);
                }
            }
        }
        let chi: Vec<usize> = chi.into_iter().map(|v| v.expect("generated")).collect();
        let hom = sub.iter().all(|&a| {
            sub.iter()
                .all(|&b| chi[pos(group.mul(a, b))] == (chi[pos(a)] + chi[pos(b)]) % exponent)
        });
        if hom {
            out.push(chi);
        }
    }
    out
}

/// Functions on the class twisted by `χ`: with `t_i g t_i⁻¹ = x_i`,
/// `h·e_i = χ(t_j⁻¹ h t_i) e_j` where `h x_i h⁻¹ = x_j`.
fn induced(
    group: &Arc<FiniteGroup>,
    members: &[usize],
    cent: &[usize],
    chi: &[usize],
    exponent: usize,
) -> Result<YdModule> {
    let g0 = members[0];
    let reps: Vec<usize> = members
        .iter()
        .map(|&x| group.elements().find(|&t| group.conjugate(t, g0) == x).expect("x is conjugate"))
        .collect();
    let m = members.len();
    let root = |k: usize| C64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / exponent as f64);
    let action = group
        .elements()
        .map(|h| {
            let mut rho = Matrix::zeros(m, m);
            for (i, &x) in members.iter().enumerate() {
                let j = members.iter().position(|&y| y == group.conjugate(h, x)).expect("class");
                let c = group.mul(group.mul(group.inverse(reps[j]), h), reps[i]);
                let k = cent.iter().position(|&y| y == c).expect("lands in the centralizer");
                rho.set(j, i, root(chi[k]));
            }
            rho
        })
        .collect();
    let grading = group
        .elements()
        .map(|g| {
            let mut p = Matrix::zeros(m, m);
            if let Some(i) = members.iter().position(|&x| x == g) {
                p.set(i, i, C64::new(1.0, 0.0));
            }
            p
        })
        .collect();
    YdModule::new(group.clone(), action, grading)
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(name: &str) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::builtin(name).unwrap())
    }

    #[test]
    fn counts_match_known_doubles() {
        for (name, n) in [("z2", 4), ("z3", 9), ("z2xz2", 16), ("s3", 8), ("d4", 22), ("q8", 22)] {
            assert_eq!(simple_count(&group(name)), n, "{name}");
        }
    }

    #[test]
    fn abelian_enumeration_matches_count() {
        for name in ["z2", "z3", "z4", "z2xz2"] {
            let g = group(name);
            let simples = enumerate_simples(&g).unwrap();
            assert_eq!(simples.len(), simple_count(&g), "{name}");
            for s in &simples {
                assert_eq!(s.module.hom_dim(&s.module), 1);
            }
        }
    }

    #[test]
    fn z3_simples_close_like_z3_squared_not_an_elementary_2_group() {
        let simples = enumerate_simples(&group("z3")).unwrap();
        let law = fusion_law(&fusion_table(&simples)).unwrap();
        assert_eq!(law.len(), 9);
        assert!(!is_elementary_abelian_2(&law));
    }

    #[test]
    fn nonabelian_centralizer_is_unsupported() {
        assert!(matches!(enumerate_simples(&group("s3")), Err(OracleError::Unsupported(_))));
    }
}
