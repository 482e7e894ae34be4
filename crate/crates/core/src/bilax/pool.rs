use alloc::format;
use alloc::vec::Vec;

use crate::centre::{Centre, Obj};
use crate::rng::Rng;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoolConfig {
    /// Largest object dimension admitted to the pool. Diagram instances are
    /// limited to a product of slot dimensions of at most `cap²`.
    pub cap: usize,
    /// Number of random `⊗_s` products added on top of the fixed objects.
    pub random_products: usize,
    pub seed: u64,
}

impl Default for PoolConfig {
    fn default() -> Self {
        Self {
            cap: 16,
            random_products: 4,
            seed: 0,
        }
    }
}

/// Test objects: the simples of Rep(G) embedded in the centre, `𝕀_s`, a
/// randomly conjugated copy of `𝕀_s`, pairwise `⊗_c` products and some random
/// `⊗_s` products, all of dimension at most `cap`.
pub struct Pool {
    objects: Vec<Obj>,
    budget: usize,
    seed: u64,
}

impl Pool {
    pub fn build(centre: &Centre, config: &PoolConfig) -> Result<Self> {
        let cat = centre.category();
        let cap = config.cap;
        let mut rng = Rng::derive(config.seed, 0x9001);
        let mut objects: Vec<Obj> = (0..cat.num_simples()).map(|k| centre.simple(k).clone()).collect();
        let is = centre.sym_unit().clone();
        objects.push(is.clone());
        let u = rng.unitary(is.dim());
        objects.push(centre.conjugate(&is, &u, "U(Is)"));

        // Pairwise ⊗_c products of non-unit base objects.
        let base: Vec<Obj> = objects[1..cat.num_simples()].iter().chain([&is]).cloned().collect();
        for (a, x) in base.iter().enumerate() {
            for y in &base[a..] {
                if x.dim() * y.dim() <= cap {
                    objects.push(centre.conv_tensor(x, y));
                }
            }
        }

        let mut added = 0;
        let mut attempts = 0;
        while added < config.random_products && attempts < 40 * config.random_products.max(1) {
            attempts += 1;
            let x = objects[rng.below(objects.len())].clone();
            let y = objects[rng.below(objects.len())].clone();
            if x.dim() * y.dim() > cap * cap {
                continue;
            }
            let p = centre.sym_tensor(&x, &y)?;
            let dim = p.object.dim();
            if dim == 0 || dim > cap || objects.iter().any(|o| o.label() == p.object.label()) {
                continue;
            }
            objects.push(p.object.clone());
            added += 1;
        }
        Ok(Self {
            objects,
            budget: cap * cap,
            seed: config.seed,
        })
    }

    pub fn objects(&self) -> &[Obj] {
        &self.objects
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// Up to `count` distinct tuples of `slots` pool objects, drawn from a
    /// stream keyed by `key`, whose `cost` (typically the product of all
    /// dimensions entering the diagram) is within the budget.
    pub fn sample(&self, key: &str, slots: usize, count: usize, cost: impl Fn(&[&Obj]) -> usize) -> Vec<Vec<Obj>> {
        let mut rng = Rng::derive(self.seed, fnv1a(key));
        let mut seen: Vec<Vec<usize>> = Vec::new();
        let mut out = Vec::new();
        let n = self.objects.len();
        for _ in 0..count * 40 {
            if out.len() == count {
                break;
            }
            let idx: Vec<usize> = (0..slots).map(|_| rng.below(n)).collect();
            if seen.contains(&idx) {
                continue;
            }
            seen.push(idx.clone());
            let tuple: Vec<&Obj> = idx.iter().map(|&i| &self.objects[i]).collect();
            if cost(&tuple) <= self.budget {
                out.push(tuple.into_iter().cloned().collect());
            }
        }
        out
    }
}

/// `"(a, b, c)"` from object labels.
pub fn describe(objects: &[&Obj]) -> alloc::string::String {
    let labels: Vec<&str> = objects.iter().map(|o| o.label()).collect();
    format!("({})", labels.join(", "))
}

fn fnv1a(key: &str) -> u64 {
    key.bytes()
        .fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ u64::from(b)).wrapping_mul(0x100_0000_01b3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::RepCategory;
    use alloc::string::String;
    use alloc::sync::Arc;

    fn centre(name: &str) -> Centre {
        Centre::new(Arc::new(RepCategory::builtin(name, 2).unwrap())).unwrap()
    }

    fn labels(p: &Pool) -> Vec<String> {
        p.objects().iter().map(|o| String::from(o.label())).collect()
    }

    #[test]
    fn pool_respects_the_cap_and_is_reproducible() {
        let z = centre("s3");
        let cfg = PoolConfig { cap: 12, ..PoolConfig::default() };
        let a = Pool::build(&z, &cfg).unwrap();
        let b = Pool::build(&z, &cfg).unwrap();
        assert_eq!(labels(&a), labels(&b));
        assert!(a.objects().iter().all(|o| o.dim() <= 12));
        assert_eq!(a.budget(), 144);
        assert!(labels(&a).iter().any(|l| l == "Is"));
    }

    #[test]
    fn samples_are_distinct_within_budget_and_keyed() {
        let z = centre("z3");
        let pool = Pool::build(&z, &PoolConfig::default()).unwrap();
        let cost = |t: &[&Obj]| t.iter().map(|o| o.dim()).product();
        let s = pool.sample("k", 3, 6, cost);
        assert_eq!(s.len(), 6);
        for t in &s {
            assert!(cost(&t.iter().collect::<Vec<_>>()) <= pool.budget());
        }
        let ids = |s: &Vec<Vec<Obj>>| s.iter().map(|t| t.iter().map(|o| o.id()).collect::<Vec<_>>()).collect::<Vec<_>>();
        assert_eq!(ids(&s), ids(&pool.sample("k", 3, 6, cost)));
        assert_ne!(ids(&s), ids(&pool.sample("other", 3, 6, cost)));
        let mut unique = ids(&s);
        unique.sort();
        unique.dedup();
        assert_eq!(unique.len(), 6);
    }

    #[test]
    fn describe_joins_labels() {
        let z = centre("z2");
        assert_eq!(describe(&[z.simple(0), z.sym_unit()]), "(A0, Is)");
    }
}
