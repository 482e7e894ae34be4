use std::sync::Arc;

use bilax_core::bilax::Bilax;
use bilax_core::centre::{Centre, CentreMorphism, Obj};
use bilax_core::linalg::{split_idempotent, Matrix};
use bilax_core::rep::RepCategory;
use bilax_core::rng::Rng;
use proptest::prelude::*;

const GROUPS: [&str; 4] = ["z2", "z3", "z2xz2", "s3"];

fn centre(name: &str) -> Centre {
    Centre::new(Arc::new(RepCategory::builtin(name, 7).unwrap())).unwrap()
}

/// A small object: a simple of Rep(G), `𝕀_s`, or `𝕀_s` in a random basis.
fn object(z: &Centre, rng: &mut Rng) -> Obj {
    let n = z.category().num_simples();
    match rng.below(3) {
        0 => z.simple(rng.below(n)).clone(),
        1 => z.sym_unit().clone(),
        _ => {
            let u = rng.unitary(z.sym_unit().dim());
            z.conjugate(z.sym_unit(), &u, "U(Is)")
        }
    }
}

fn morphism(z: &Centre, c: &Obj, d: &Obj, rng: &mut Rng) -> CentreMorphism {
    z.random_morphism(c, d, rng)
}

fn unitary_iso(c: &Obj, d: &Obj, u: Matrix) -> CentreMorphism {
    CentreMorphism { source: c.clone(), target: d.clone(), mat: u }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn oblique_idempotents_split(n in 2usize..7, seed in any::<u64>()) {
        let mut rng = Rng::new(seed);
        let r = 1 + rng.below(n - 1);
        let a = rng.matrix(n, r);
        let b = rng.matrix(r, n);
        let e = &(&a * &(&b * &a).inverse().unwrap()) * &b;
        let split = split_idempotent(&e, 1e-9).unwrap();
        prop_assert_eq!(split.sub_dim, r);
        prop_assert!((&split.projection * &split.inclusion).deviation(&Matrix::identity(r)) < 1e-8);
        prop_assert!((&split.inclusion * &split.projection).relative_deviation(&e) < 1e-8);
    }

    #[test]
    fn averaged_loop_is_an_idempotent_of_the_centre(g in 0..GROUPS.len(), seed in any::<u64>()) {
        let z = centre(GROUPS[g]);
        let mut rng = Rng::new(seed);
        let (c, d) = (object(&z, &mut rng), object(&z, &mut rng));
        let p = z.sym_tensor(&c, &d).unwrap();
        prop_assert!((&p.pi * &p.pi).relative_deviation(&p.pi) < 1e-9);
        prop_assert!(z.z_defect(&p.pi, &p.ambient, &p.ambient) < 1e-9);
        prop_assert!(p.route_deviation < 1e-9);
    }

    #[test]
    fn products_do_not_depend_on_the_basis(g in 0..GROUPS.len(), seed in any::<u64>()) {
        let z = centre(GROUPS[g]);
        let mut rng = Rng::new(seed);
        let (c, d) = (object(&z, &mut rng), object(&z, &mut rng));
        let u = rng.unitary(c.dim());
        let c2 = z.conjugate(&c, &u, "Uc");
        let iso = unitary_iso(&c, &c2, u);
        prop_assert!(z.z_defect(&iso.mat, &c, &c2) < 1e-9);
        let id = CentreMorphism::identity(&d);
        let conv = z.conv_tensor_mor(&iso, &id);
        prop_assert!(z.z_defect(&conv.mat, &conv.source, &conv.target) < 1e-9);
        let sym = z.sym_tensor_mor(&iso, &id).unwrap();
        prop_assert_eq!(sym.source.dim(), sym.target.dim());
        prop_assert!(z.z_defect(&sym.mat, &sym.source, &sym.target) < 1e-9);
        let back = unitary_iso(&c2, &c, iso.mat.adjoint());
        let round = z.sym_tensor_mor(&back, &id).unwrap().after(&sym).unwrap();
        prop_assert!(round.mat.deviation(&Matrix::identity(sym.source.dim())) < 1e-8);
    }

    #[test]
    fn sym_product_is_bilinear_and_functorial(g in 0..GROUPS.len(), seed in any::<u64>()) {
        let z = centre(GROUPS[g]);
        let mut rng = Rng::new(seed);
        let (a, b, c) = (object(&z, &mut rng), object(&z, &mut rng), object(&z, &mut rng));
        let d = object(&z, &mut rng);
        let f = morphism(&z, &a, &b, &mut rng);
        let f2 = morphism(&z, &a, &b, &mut rng);
        let g1 = morphism(&z, &c, &d, &mut rng);
        let lambda = rng.complex();
        let lhs = z.sym_tensor_mor(&f.add(&f2.scale(lambda)).unwrap(), &g1).unwrap();
        let rhs = z.sym_tensor_mor(&f, &g1).unwrap().add(&z.sym_tensor_mor(&f2, &g1).unwrap().scale(lambda)).unwrap();
        prop_assert!(lhs.deviation(&rhs) < 1e-8);
        let h = morphism(&z, &b, &a, &mut rng);
        let k = morphism(&z, &d, &c, &mut rng);
        let composite = z.sym_tensor_mor(&h.after(&f).unwrap(), &k.after(&g1).unwrap()).unwrap();
        let stepwise = z.sym_tensor_mor(&h, &k).unwrap().after(&z.sym_tensor_mor(&f, &g1).unwrap()).unwrap();
        prop_assert!(composite.deviation(&stepwise) < 1e-8);
    }

    #[test]
    fn conv_product_is_bilinear(g in 0..GROUPS.len(), seed in any::<u64>()) {
        let z = centre(GROUPS[g]);
        let mut rng = Rng::new(seed);
        let (a, b, c, d) = (object(&z, &mut rng), object(&z, &mut rng), object(&z, &mut rng), object(&z, &mut rng));
        let (f, f2, h) = (morphism(&z, &a, &b, &mut rng), morphism(&z, &a, &b, &mut rng), morphism(&z, &c, &d, &mut rng));
        let lambda = rng.complex();
        let lhs = z.conv_tensor_mor(&h, &f.add(&f2.scale(lambda)).unwrap());
        let rhs = z.conv_tensor_mor(&h, &f).add(&z.conv_tensor_mor(&h, &f2).scale(lambda)).unwrap();
        prop_assert!(lhs.deviation(&rhs) < 1e-9);
    }

    #[test]
    fn interchange_is_natural(g in 0..3usize, seed in any::<u64>()) {
        let z = centre(GROUPS[g]);
        let bilax = Bilax::new(&z).unwrap();
        let mut rng = Rng::new(seed);
        let n = z.category().num_simples();
        let pick = |rng: &mut Rng| if rng.below(2) == 0 { z.simple(rng.below(n)).clone() } else { z.sym_unit().clone() };
        let objs: Vec<Obj> = (0..4).map(|_| pick(&mut rng)).collect();
        let (c, c2, d, d2) = (&objs[0], &objs[1], &objs[2], &objs[3]);
        let fs: Vec<CentreMorphism> = objs.iter().map(|o| morphism(&z, o, o, &mut rng)).collect();
        let eta = bilax.eta(c, c2, d, d2).unwrap();
        let before = z.sym_tensor_mor(&z.conv_tensor_mor(&fs[0], &fs[1]), &z.conv_tensor_mor(&fs[2], &fs[3])).unwrap();
        let after = z.conv_tensor_mor(&z.sym_tensor_mor(&fs[0], &fs[2]).unwrap(), &z.sym_tensor_mor(&fs[1], &fs[3]).unwrap());
        let lhs = eta.after(&before).unwrap();
        let rhs = after.after(&eta).unwrap();
        let scale = lhs.mat.max_abs().max(1.0);
        prop_assert!(lhs.deviation(&rhs) / scale < 1e-8);
        let zeta = bilax.zeta(c, d, c2, d2).unwrap();
        prop_assert!(eta.after(&zeta).unwrap().mat.deviation(&Matrix::identity(zeta.mat.cols())) < 1e-9);
        prop_assert!(z.z_defect(&eta.mat, &eta.source, &eta.target) < 1e-9);
    }
}

#[test]
fn sym_unit_unitors_are_inverse() {
    let z = centre("s3");
    let is = z.sym_unit().clone();
    let l = z.sym_left_unitor(&is).unwrap();
    let li = z.sym_left_unitor_inv(&is).unwrap();
    assert!(l.after(&li).unwrap().mat.deviation(&Matrix::identity(is.dim())) < 1e-9);
    assert_eq!(z.sym_tensor(&is, &is).unwrap().object.dim(), 6);
}
