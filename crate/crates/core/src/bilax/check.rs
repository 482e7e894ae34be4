//! Diagram-by-diagram evaluation of the 2-fold monoidal axioms.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::pool::{describe, Pool, PoolConfig};
use super::report::CoherenceReport;
use super::{Bilax, Conv, Normalisation, Orientation, Roles, Sym};
use crate::centre::{Centre, CentreMorphism, Obj};
use crate::linalg::{c64, Matrix};
use crate::rng::Rng;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Lax,
    Oplax,
    Braided,
    Lemmas,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "lax" => Some(Suite::Lax),
            "oplax" => Some(Suite::Oplax),
            "braided" => Some(Suite::Braided),
            "lemmas" => Some(Suite::Lemmas),
            "all" => Some(Suite::All),
            _ => None,
        }
    }

    fn runs(self, part: Suite) -> bool {
        self == Suite::All || self == part
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckConfig {
    pub tolerance: f64,
    pub pool: PoolConfig,
    /// Sampled object tuples per diagram.
    pub instances: usize,
    pub normalisation: Normalisation,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            tolerance: 1e-8,
            pool: PoolConfig::default(),
            instances: 4,
            normalisation: Normalisation::default(),
        }
    }
}

/// Builds the compatibility morphisms and the pool, evaluates every diagram
/// of the selected suite and returns the sorted report. Diagram failures are
/// recorded in the report; only failure to build the machinery is an error.
pub fn run(centre: &Centre, config: &CheckConfig, suite: Suite) -> Result<CoherenceReport> {
    let bilax = Bilax::with_normalisation(centre, config.normalisation)?;
    let pool = Pool::build(centre, &config.pool)?;
    let conv = Conv(centre);
    let sym = Sym(centre);
    let mut ctx = Ctx {
        centre,
        bilax: &bilax,
        pool: &pool,
        instances: config.instances,
        seed: config.pool.seed,
        report: CoherenceReport::new(centre.category().group().name(), config.tolerance, config.pool.seed),
    };
    let lax = bilax.lax(&conv, &sym);
    let oplax = bilax.oplax(&conv, &sym);
    if suite.runs(Suite::Lax) {
        ctx.compatibility_morphisms(&lax);
        ctx.two_fold(&lax);
    }
    if suite.runs(Suite::Oplax) {
        ctx.compatibility_morphisms(&oplax);
        ctx.two_fold(&oplax);
        ctx.inclusivity();
    }
    if suite.runs(Suite::Braided) {
        ctx.braided(&lax);
        ctx.braided(&oplax);
        ctx.symmetry();
    }
    if suite.runs(Suite::Lemmas) {
        ctx.lemmas();
        ctx.bilinearity();
        ctx.sym_monoidal();
    }
    let mut report = ctx.report;
    report.finish();
    Ok(report)
}

struct Ctx<'a> {
    centre: &'a Centre,
    bilax: &'a Bilax<'a>,
    pool: &'a Pool,
    instances: usize,
    seed: u64,
    report: CoherenceReport,
}

fn id(c: &Obj) -> CentreMorphism {
    CentreMorphism::identity(c)
}

/// `fs[n-1] ∘ ... ∘ fs[0]`: the first morphism listed is applied first.
fn chain(fs: &[&CentreMorphism]) -> Result<CentreMorphism> {
    let mut acc = fs[0].clone();
    for f in &fs[1..] {
        acc = f.after(&acc)?;
    }
    Ok(acc)
}

fn dims(objs: &[&Obj]) -> usize {
    objs.iter().map(|o| o.dim().max(1)).product()
}

impl Ctx<'_> {
    fn units(&self, r: &Roles<'_>) -> (Obj, Obj) {
        (r.first.unit(), r.second.unit())
    }

    fn record(&mut self, id: &str, reference: &str, objects: String, outcome: Result<f64>) {
        self.report.record(id, reference, objects, outcome);
    }

    fn tuples(&self, key: &str, slots: usize, extra: usize) -> Vec<Vec<Obj>> {
        self.pool.sample(key, slots, self.instances, |t| dims(t) * extra)
    }

    fn rng(&self, key: &str) -> Rng {
        Rng::derive(self.seed, key.bytes().fold(7u64, |h, b| h.wrapping_mul(31).wrapping_add(u64::from(b))))
    }

    // ----- morphisms in the centre and naturality -----

    fn compatibility_morphisms(&mut self, r: &Roles<'_>) {
        let names = match r.orientation {
            Orientation::Lax => ["u0", "u1", "u2"],
            Orientation::Oplax => ["v0", "v1", "v2"],
        };
        for (name, m) in names.iter().zip([r.u0, r.u1, r.u2]) {
            let dev = self.centre.z_defect(&m.mat, &m.source, &m.target);
            let objects = format!("({} -> {})", m.source.label(), m.target.label());
            self.record(&format!("morphism.{name}"), "unit compatibility map is a morphism of the centre", objects, Ok(dev));
        }
        let inter = match r.orientation {
            Orientation::Lax => "eta",
            Orientation::Oplax => "zeta",
        };
        let key = format!("morphism.{inter}");
        for t in self.tuples(&key, 4, 1) {
            let out = r
                .interchange(&t[0], &t[1], &t[2], &t[3])
                .map(|m| self.centre.z_defect(&m.mat, &m.source, &m.target));
            self.record(&key, "interchange map is a morphism of the centre", describe(&refs(&t)), out);
        }
        let key = format!("natural.{inter}");
        let mut rng = self.rng(&key);
        for t in self.tuples(&key, 4, 1) {
            let out = self.naturality(r, &t, &mut rng);
            self.record(&key, "interchange map is natural in all four arguments", describe(&refs(&t)), out);
        }
    }

    fn naturality(&self, r: &Roles<'_>, t: &[Obj], rng: &mut Rng) -> Result<f64> {
        let f: Vec<CentreMorphism> = t.iter().map(|x| self.centre.random_morphism(x, x, rng)).collect();
        let (a, b, c, d) = (&t[0], &t[1], &t[2], &t[3]);
        let inter = r.interchange(a, b, c, d)?;
        let before = r.second.tensor_mor(&r.first.tensor_mor(&f[0], &f[1])?, &r.first.tensor_mor(&f[2], &f[3])?)?;
        let after = r.first.tensor_mor(&r.second.tensor_mor(&f[0], &f[2])?, &r.second.tensor_mor(&f[1], &f[3])?)?;
        let lhs = inter.after(&before)?;
        let rhs = after.after(&inter)?;
        Ok(lhs.deviation(&rhs))
    }

    // ----- the lax 2-fold axioms -----

    fn two_fold(&mut self, r: &Roles<'_>) {
        let tag = r.orientation.tag();
        self.unit_squares(r, tag);
        self.unitor_interchange(r, tag);
        self.unit_associativity(r, tag);
        self.hexagons(r, tag);
    }

    fn unit_squares(&mut self, r: &Roles<'_>, tag: &str) {
        let (i1, i2) = self.units(r);
        let u0 = r.u0;
        let objects = format!("({}, {})", i1.label(), i2.label());
        let cases: [(&str, &str, Result<f64>); 4] = [
            ("a.rho1", "unit map against the right unitor of the first product", (|| {
                let lhs = chain(&[&r.first.tensor_mor(u0, &id(&i1))?, &r.first.right_unitor(&i1)?])?;
                let rhs = chain(&[&r.first.right_unitor(&i2)?, u0])?;
                Ok(lhs.deviation(&rhs))
            })()),
            ("a.lambda1", "unit map against the left unitor of the first product", (|| {
                let lhs = chain(&[&r.first.tensor_mor(&id(&i1), u0)?, &r.first.left_unitor(&i1)?])?;
                let rhs = chain(&[&r.first.left_unitor(&i2)?, u0])?;
                Ok(lhs.deviation(&rhs))
            })()),
            ("a.lambda2", "unit map against the left unitor of the second product", (|| {
                let lhs = chain(&[&r.second.tensor_mor(&id(&i2), u0)?, &r.second.left_unitor(&i1)?])?;
                let rhs = chain(&[&r.second.left_unitor(&i2)?, u0])?;
                Ok(lhs.deviation(&rhs))
            })()),
            ("a.rho2", "unit map against the right unitor of the second product", (|| {
                let lhs = chain(&[&r.second.tensor_mor(u0, &id(&i2))?, &r.second.right_unitor(&i1)?])?;
                let rhs = chain(&[&r.second.right_unitor(&i2)?, u0])?;
                Ok(lhs.deviation(&rhs))
            })()),
        ];
        for (name, reference, out) in cases {
            self.record(&format!("{tag}.{name}"), reference, objects.clone(), out);
        }
    }

    fn unitor_interchange(&mut self, r: &Roles<'_>, tag: &str) {
        let (i1, i2) = self.units(r);
        let d2 = i2.dim() * i2.dim();
        // (b): the second product's unitors through u2 and the interchange.
        let key = format!("{tag}.b.left");
        for t in self.tuples(&key, 2, d2) {
            let (d, e) = (&t[0], &t[1]);
            let out = (|| {
                let de = r.first.tensor(d, e)?;
                let lhs = r.second.left_unitor(&de)?;
                let rhs = chain(&[
                    &r.second.tensor_mor(r.u2, &id(&de))?,
                    &r.interchange(&i2, &i2, d, e)?,
                    &r.first.tensor_mor(&r.second.left_unitor(d)?, &r.second.left_unitor(e)?)?,
                ])?;
                Ok(lhs.deviation(&rhs))
            })();
            self.record(&key, "left unitor of the second product through u2 and the interchange", describe(&refs(&t)), out);
        }
        let key = format!("{tag}.b.right");
        for t in self.tuples(&key, 2, d2) {
            let (d, e) = (&t[0], &t[1]);
            let out = (|| {
                let de = r.first.tensor(d, e)?;
                let lhs = r.second.right_unitor(&de)?;
                let rhs = chain(&[
                    &r.second.tensor_mor(&id(&de), r.u2)?,
                    &r.interchange(d, e, &i2, &i2)?,
                    &r.first.tensor_mor(&r.second.right_unitor(d)?, &r.second.right_unitor(e)?)?,
                ])?;
                Ok(lhs.deviation(&rhs))
            })();
            self.record(&key, "right unitor of the second product through u2 and the interchange", describe(&refs(&t)), out);
        }
        // (c): the first product's unitors through the interchange and u1.
        let d1 = i1.dim() * i1.dim();
        let key = format!("{tag}.c.left");
        for t in self.tuples(&key, 2, d1) {
            let (c, d) = (&t[0], &t[1]);
            let out = (|| {
                let cd = r.second.tensor(c, d)?;
                let lhs = chain(&[
                    &r.interchange(&i1, c, &i1, d)?,
                    &r.first.tensor_mor(r.u1, &id(&cd))?,
                    &r.first.left_unitor(&cd)?,
                ])?;
                let rhs = r.second.tensor_mor(&r.first.left_unitor(c)?, &r.first.left_unitor(d)?)?;
                Ok(lhs.deviation(&rhs))
            })();
            self.record(&key, "left unitor of the first product through the interchange and u1", describe(&refs(&t)), out);
        }
        let key = format!("{tag}.c.right");
        for t in self.tuples(&key, 2, d1) {
            let (c, d) = (&t[0], &t[1]);
            let out = (|| {
                let cd = r.second.tensor(c, d)?;
                let lhs = chain(&[
                    &r.interchange(c, &i1, d, &i1)?,
                    &r.first.tensor_mor(&id(&cd), r.u1)?,
                    &r.first.right_unitor(&cd)?,
                ])?;
                let rhs = r.second.tensor_mor(&r.first.right_unitor(c)?, &r.first.right_unitor(d)?)?;
                Ok(lhs.deviation(&rhs))
            })();
            self.record(&key, "right unitor of the first product through the interchange and u1", describe(&refs(&t)), out);
        }
    }

    fn unit_associativity(&mut self, r: &Roles<'_>, tag: &str) {
        let (i1, i2) = self.units(r);
        let out = (|| {
            let lhs = chain(&[&r.second.tensor_mor(r.u1, &id(&i1))?, r.u1])?;
            let rhs = chain(&[&r.second.associator(&i1, &i1, &i1)?, &r.second.tensor_mor(&id(&i1), r.u1)?, r.u1])?;
            Ok(lhs.deviation(&rhs))
        })();
        self.record(&format!("{tag}.d.u1"), "u1 is associative", format!("({})", i1.label()), out);
        let out = (|| {
            let lhs = chain(&[r.u2, &r.first.tensor_mor(r.u2, &id(&i2))?, &r.first.associator(&i2, &i2, &i2)?])?;
            let rhs = chain(&[r.u2, &r.first.tensor_mor(&id(&i2), r.u2)?])?;
            Ok(lhs.deviation(&rhs))
        })();
        self.record(&format!("{tag}.d.u2"), "u2 is coassociative", format!("({})", i2.label()), out);
    }

    fn hexagons(&mut self, r: &Roles<'_>, tag: &str) {
        let key = format!("{tag}.e");
        for t in self.tuples(&key, 6, 1) {
            let out = (|| {
                let [a, b, c, d, e, f] = [&t[0], &t[1], &t[2], &t[3], &t[4], &t[5]];
                let ac = r.second.tensor(a, c)?;
                let bd = r.second.tensor(b, d)?;
                let ce = r.second.tensor(c, e)?;
                let df = r.second.tensor(d, f)?;
                let ab = r.first.tensor(a, b)?;
                let cd = r.first.tensor(c, d)?;
                let ef = r.first.tensor(e, f)?;
                let lhs = chain(&[
                    &r.second.tensor_mor(&r.interchange(a, b, c, d)?, &id(&ef))?,
                    &r.interchange(&ac, &bd, e, f)?,
                    &r.first.tensor_mor(&r.second.associator(a, c, e)?, &r.second.associator(b, d, f)?)?,
                ])?;
                let rhs = chain(&[
                    &r.second.associator(&ab, &cd, &ef)?,
                    &r.second.tensor_mor(&id(&ab), &r.interchange(c, d, e, f)?)?,
                    &r.interchange(a, b, &ce, &df)?,
                ])?;
                Ok(lhs.deviation(&rhs))
            })();
            self.record(&key, "interchange against the associator of the second product", describe(&refs(&t)), out);
        }
        let key = format!("{tag}.f");
        for t in self.tuples(&key, 6, 1) {
            let out = (|| {
                let [a, b, c, d, e, f] = [&t[0], &t[1], &t[2], &t[3], &t[4], &t[5]];
                let ab = r.first.tensor(a, b)?;
                let de = r.first.tensor(d, e)?;
                let bc = r.first.tensor(b, c)?;
                let ef = r.first.tensor(e, f)?;
                let ad = r.second.tensor(a, d)?;
                let be = r.second.tensor(b, e)?;
                let cf = r.second.tensor(c, f)?;
                let lhs = chain(&[
                    &r.interchange(&ab, c, &de, f)?,
                    &r.first.tensor_mor(&r.interchange(a, b, d, e)?, &id(&cf))?,
                    &r.first.associator(&ad, &be, &cf)?,
                ])?;
                let rhs = chain(&[
                    &r.second.tensor_mor(&r.first.associator(a, b, c)?, &r.first.associator(d, e, f)?)?,
                    &r.interchange(a, &bc, d, &ef)?,
                    &r.first.tensor_mor(&id(&ad), &r.interchange(b, c, e, f)?)?,
                ])?;
                Ok(lhs.deviation(&rhs))
            })();
            self.record(&key, "interchange against the associator of the first product", describe(&refs(&t)), out);
        }
    }

    // ----- inclusivity -----

    fn inclusivity(&mut self) {
        let b = self.bilax;
        let ic = self.centre.conv_unit().clone();
        let is = self.centre.sym_unit().clone();
        let cases: [(&str, &str, String, Result<f64>); 5] = [
            ("inclusive.u0_v0", "v0 followed by u0 is the identity of the convolution unit", format!("({})", ic.label()),
                chain(&[&b.v0, &b.u0]).map(|m| m.deviation(&id(&ic)))),
            ("inclusive.u1_v2", "v2 followed by u1 is the identity of the convolution unit", format!("({})", ic.label()),
                chain(&[&b.v2, &b.u1]).map(|m| m.deviation(&id(&ic)))),
            ("inclusive.v2_u1", "u1 followed by v2 is the identity, so u1 and v2 are inverse", format!("({})", b.u1.source.label()),
                chain(&[&b.u1, &b.v2]).map(|m| m.deviation(&id(&b.u1.source)))),
            ("inclusive.v1_u2", "u2 followed by v1 is the identity of the symmetric unit", format!("({})", is.label()),
                chain(&[&b.u2, &b.v1]).map(|m| m.deviation(&id(&is)))),
            ("inclusive.loop", "v0, u2, v1, u0 in turn give the averaged loop, which is one", format!("({})", ic.label()),
                chain(&[&b.v0, &b.u2, &b.v1, &b.u0]).map(|m| m.deviation(&id(&ic)))),
        ];
        for (key, reference, objects, out) in cases {
            self.record(key, reference, objects, out);
        }
        let key = "inclusive.eta_zeta";
        for t in self.tuples(key, 4, 1) {
            let out = (|| {
                let (c, d, c2, d2) = (&t[0], &t[1], &t[2], &t[3]);
                let zeta = b.zeta(c, d, c2, d2)?;
                let eta = b.eta(c, c2, d, d2)?;
                Ok(eta.after(&zeta)?.deviation(&id(&zeta.source)))
            })();
            self.record(key, "zeta followed by eta is the identity", describe(&refs(&t)), out);
        }
    }

    // ----- braidings -----

    fn braided(&mut self, r: &Roles<'_>) {
        let tag = r.orientation.tag();
        let (i1, i2) = self.units(r);
        let out = (|| {
            let lhs = chain(&[r.u2, &r.first.braiding(&i2, &i2)?])?;
            Ok(lhs.deviation(r.u2))
        })();
        let what = format!("braiding of the {} product fixes the unit comultiplication", r.first.name());
        self.record(&format!("braided.{tag}.horizontal.unit"), &what, format!("({})", i2.label()), out);
        let out = (|| {
            let lhs = chain(&[&r.second.braiding(&i1, &i1)?, r.u1])?;
            Ok(lhs.deviation(r.u1))
        })();
        let what = format!("unit multiplication absorbs the braiding of the {} product", r.second.name());
        self.record(&format!("braided.{tag}.vertical.unit"), &what, format!("({})", i1.label()), out);

        let key = format!("braided.{tag}.horizontal.interchange");
        for t in self.tuples(&key, 4, 1) {
            let out = (|| {
                let (c, c2, d, d2) = (&t[0], &t[1], &t[2], &t[3]);
                let cd = r.second.tensor(c, d)?;
                let cd2 = r.second.tensor(c2, d2)?;
                let lhs = chain(&[&r.interchange(c, c2, d, d2)?, &r.first.braiding(&cd, &cd2)?])?;
                let rhs = chain(&[
                    &r.second.tensor_mor(&r.first.braiding(c, c2)?, &r.first.braiding(d, d2)?)?,
                    &r.interchange(c2, c, d2, d)?,
                ])?;
                Ok(lhs.deviation(&rhs))
            })();
            let what = format!("interchange commutes with the braiding of the {} product", r.first.name());
            self.record(&key, &what, describe(&refs(&t)), out);
        }
        let key = format!("braided.{tag}.vertical.interchange");
        for t in self.tuples(&key, 4, 1) {
            let out = (|| {
                let (c, c2, d, d2) = (&t[0], &t[1], &t[2], &t[3]);
                let cc = r.first.tensor(c, c2)?;
                let dd = r.first.tensor(d, d2)?;
                let lhs = chain(&[&r.second.braiding(&cc, &dd)?, &r.interchange(d, d2, c, c2)?])?;
                let rhs = chain(&[
                    &r.interchange(c, c2, d, d2)?,
                    &r.first.tensor_mor(&r.second.braiding(c, d)?, &r.second.braiding(c2, d2)?)?,
                ])?;
                Ok(lhs.deviation(&rhs))
            })();
            let what = format!("interchange commutes with the braiding of the {} product", r.second.name());
            self.record(&key, &what, describe(&refs(&t)), out);
        }
    }

    fn symmetry(&mut self) {
        let key = "braided.symmetric";
        for t in self.tuples(key, 2, 1) {
            let out = (|| {
                let s = self.centre.sym_symmetry(&t[0], &t[1])?;
                let back = self.centre.sym_symmetry(&t[1], &t[0])?;
                Ok(back.after(&s)?.deviation(&id(&s.source)))
            })();
            self.record(key, "symmetry of the symmetric product squares to the identity", describe(&refs(&t)), out);
        }
    }

    // ----- lemmas of the construction -----

    fn lemmas(&mut self) {
        let z = self.centre;
        let cat = z.category().clone();
        let n = cat.num_simples();
        let a_parts: Vec<&crate::rep::RepObject> = (1..n).map(|k| &**cat.simple(k)).collect();
        let a_obj = cat.direct_sum(&a_parts);
        let a_label = "A+";
        for t in self.tuples("lemma.pi", 2, 1) {
            let (c, d) = (&t[0], &t[1]);
            let objects = describe(&refs(&t));
            let pi = z.idempotent_pi(c, d);
            let amb = z.conv_tensor(c, d);
            self.record("lemma.pi.idempotent", "the averaged loop is idempotent", objects.clone(), Ok((&pi * &pi).relative_deviation(&pi)));
            self.record("lemma.pi.centre", "the averaged loop is an endomorphism in the centre", objects.clone(), Ok(z.z_defect(&pi, &amb, &amb)));
            let out = z.sym_tensor(c, d).map(|p| p.route_deviation);
            self.record("lemma.routes", "both routings give the same half-braiding on the image", objects.clone(), out);
            let out = z.sym_tensor(c, d).map(|p| {
                let v = z.validate(&p.object);
                v.equivariance.max(v.unit).max(v.multiplicativity)
            });
            self.record("lemma.sym_object", "the symmetric product is an object of the centre", objects, out);
        }
        for t in self.tuples("lemma.cloaking", 2, a_obj.dim()) {
            let objects = format!("{} at {a_label}", describe(&refs(&t)));
            let dev = z.cloaking_check(&t[0], &t[1], &a_obj).max(z.cloaking_check(&t[0], &t[1], cat.unit()));
            self.record("lemma.cloaking", "a strand of Rep(G) passes through the averaged loop", objects, Ok(dev));
        }
        for t in self.tuples("lemma.slicing", 2, a_obj.dim()) {
            let objects = format!("{} at {a_label}", describe(&refs(&t)));
            let out = z.slicing_check(&t[0], &t[1], &a_obj);
            self.record("lemma.slicing", "crossing the split maps equals crossing both legs", objects, out);
        }
        let is_dim = z.sym_unit().dim();
        for t in self.tuples("lemma.snapping", 1, is_dim * is_dim) {
            self.record("lemma.snapping", "the loop on the symmetric unit snaps to cup and cap", describe(&refs(&t)), Ok(z.snapping_check(&t[0])));
            let out = (|| {
                let mut worst: f64 = 0.0;
                for (l, li) in [
                    (z.sym_left_unitor(&t[0])?, z.sym_left_unitor_inv(&t[0])?),
                    (z.sym_right_unitor(&t[0])?, z.sym_right_unitor_inv(&t[0])?),
                ] {
                    worst = worst.max(l.after(&li)?.deviation(&id(&t[0])));
                    worst = worst.max(li.after(&l)?.deviation(&id(&l.source)));
                    worst = worst.max(z.z_defect(&l.mat, &l.source, &l.target));
                }
                Ok(worst)
            })();
            self.record("lemma.unitors", "unitors of the symmetric product are inverse isomorphisms", describe(&refs(&t)), out);
        }
        for i in 0..n {
            for j in 0..n {
                let (x, y) = (z.simple(i), z.simple(j));
                let objects = format!("({}, {})", x.label(), y.label());
                self.record("lemma.transparency", "objects of Rep(G) are transparent to each other", objects.clone(), Ok(z.transparency_check(x, y)));
                let pi = z.idempotent_pi(x, y);
                let unit_dev = pi.relative_deviation(&Matrix::identity(pi.rows()));
                self.record("lemma.products_agree", "on Rep(G) the two products agree", objects.clone(), Ok(unit_dev));
                self.record("lemma.fusion.resolution", "fusion vertices resolve the identity", objects.clone(), Ok(cat.resolution_defect(i, j)));
                self.record("lemma.fusion.rebracket", "bent fusion vertices resolve the identity of k* i", objects, Ok(cat.rebracket_resolution_defect(i, j)));
                for k in 0..n {
                    for (m, v) in cat.fusion_basis(i, j, k).iter().enumerate() {
                        let objects = format!("({}, {}, {}, #{m})", x.label(), y.label(), z.simple(k).label());
                        self.record("lemma.fusion.twist", "twists are natural on fusion vertices", objects, Ok(cat.twist_trick_check(i, j, k, v)));
                    }
                }
            }
        }
        let loop_dev = (cat.averaged_loop() - c64(1.0)).norm();
        self.record("lemma.averaged_loop", "the averaged loop of all simples is one", String::from("()"), Ok(loop_dev));
    }

    fn bilinearity(&mut self) {
        let z = self.centre;
        let conv = Conv(z);
        let sym = Sym(z);
        for (name, product) in [("conv", &conv as &dyn super::Monoidal), ("sym", &sym)] {
            let key = format!("bilinear.{name}");
            let mut rng = self.rng(&key);
            for t in self.tuples(&key, 2, 1) {
                let (c, d) = (&t[0], &t[1]);
                let f = z.random_morphism(c, c, &mut rng);
                let f2 = z.random_morphism(c, c, &mut rng);
                let g = z.random_morphism(d, d, &mut rng);
                let out = (|| {
                    let lhs = product.tensor_mor(&f.add(&f2)?, &g)?;
                    let rhs = product.tensor_mor(&f, &g)?.add(&product.tensor_mor(&f2, &g)?)?;
                    Ok(lhs.deviation(&rhs))
                })();
                let what = format!("the {name} product is additive in each argument");
                self.record(&key, &what, describe(&refs(&t)), out);
            }
        }
    }

    /// Pentagon and triangle for the symmetric product (the convolution
    /// product is strict).
    fn sym_monoidal(&mut self) {
        let z = self.centre;
        let key = "monoidal.sym.pentagon";
        for t in self.tuples(key, 4, 1) {
            let out = (|| {
                let [a, b, c, d] = [&t[0], &t[1], &t[2], &t[3]];
                let s = |x: &Obj, y: &Obj| z.sym_tensor(x, y).map(|p| p.object.clone());
                let ab = s(a, b)?;
                let bc = s(b, c)?;
                let cd = s(c, d)?;
                let lhs = chain(&[&z.sym_associator(&ab, c, d)?, &z.sym_associator(a, b, &cd)?])?;
                let rhs = chain(&[
                    &z.sym_tensor_mor(&z.sym_associator(a, b, c)?, &id(d))?,
                    &z.sym_associator(a, &bc, d)?,
                    &z.sym_tensor_mor(&id(a), &z.sym_associator(b, c, d)?)?,
                ])?;
                Ok(lhs.deviation(&rhs))
            })();
            self.record(key, "pentagon for the symmetric product", describe(&refs(&t)), out);
        }
        let key = "monoidal.sym.triangle";
        let is = z.sym_unit().clone();
        for t in self.tuples(key, 2, is.dim()) {
            let out = (|| {
                let (a, b) = (&t[0], &t[1]);
                let lhs = chain(&[&z.sym_associator(a, &is, b)?, &z.sym_tensor_mor(&id(a), &z.sym_left_unitor(b)?)?])?;
                let rhs = z.sym_tensor_mor(&z.sym_right_unitor(a)?, &id(b))?;
                Ok(lhs.deviation(&rhs))
            })();
            self.record(key, "triangle for the symmetric product", describe(&refs(&t)), out);
        }
        let key = "monoidal.sym.hexagon";
        for t in self.tuples(key, 3, 1) {
            let out = (|| {
                let [a, b, c] = [&t[0], &t[1], &t[2]];
                let s = |x: &Obj, y: &Obj| z.sym_tensor(x, y).map(|p| p.object.clone());
                let bc = s(b, c)?;
                let lhs = chain(&[
                    &z.sym_associator(a, b, c)?,
                    &z.sym_symmetry(a, &bc)?,
                    &z.sym_associator(b, c, a)?,
                ])?;
                let rhs = chain(&[
                    &z.sym_tensor_mor(&z.sym_symmetry(a, b)?, &id(c))?,
                    &z.sym_associator(b, a, c)?,
                    &z.sym_tensor_mor(&id(b), &z.sym_symmetry(a, c)?)?,
                ])?;
                Ok(lhs.deviation(&rhs))
            })();
            self.record(key, "hexagon for the symmetry of the symmetric product", describe(&refs(&t)), out);
        }
    }
}

fn refs(t: &[Obj]) -> Vec<&Obj> {
    t.iter().collect()
}
