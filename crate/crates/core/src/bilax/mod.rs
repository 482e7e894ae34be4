//! Compatibility morphisms between `⊗_c` and `⊗_s` and the coherence checker.
//!
//! The lax structure has `⊗_1 = ⊗_c`, `⊗_2 = ⊗_s`, interchange `η` and unit
//! maps `u0, u1, u2`. The oplax structure is checked as a lax one with the
//! roles of the products exchanged, `ζ` as interchange and `v0, v1, v2` as
//! unit maps.

mod check;
mod monoidal;
mod pool;
mod report;

pub use check::{run, CheckConfig, Suite};
pub use monoidal::{Conv, Monoidal, Sym};
pub use pool::{describe, Pool, PoolConfig};
pub use report::{CoherenceReport, ReportEntry};

use alloc::vec::Vec;

use crate::centre::{Centre, CentreMorphism, Obj};
use crate::linalg::{apply_local, c64, swap, Matrix};
use crate::rep::{cap, cup};
use crate::Result;

/// The eight compatibility morphisms of the centre (the interchange maps are
/// constructed on demand).
pub struct Bilax<'a> {
    centre: &'a Centre,
    pub u0: CentreMorphism,
    pub u1: CentreMorphism,
    pub u2: CentreMorphism,
    pub v0: CentreMorphism,
    pub v1: CentreMorphism,
    pub v2: CentreMorphism,
}

/// Overall scale of `u2` (the other maps are fixed by being morphisms of the
/// centre and by `u0 v0 = id`, `u1 v2 = id`, `η ζ = id`).
///
/// `Inclusive` gives `v1 ∘ u2 = id`; `Coherent` multiplies `u2` by `D`, which
/// makes the unitor diagram of the first kind commute but gives
/// `v1 ∘ u2 = D · id`. No choice satisfies both.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Normalisation {
    #[default]
    Inclusive,
    Coherent,
}

/// Which of the two structures a set of checks runs against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Orientation {
    Lax,
    Oplax,
}

impl Orientation {
    pub fn tag(self) -> &'static str {
        match self {
            Orientation::Lax => "lax",
            Orientation::Oplax => "oplax",
        }
    }
}

/// A lax 2-fold monoidal structure: products `first`, `second`, the
/// interchange `(a ⊗1 b) ⊗2 (c ⊗1 d) -> (a ⊗2 c) ⊗1 (b ⊗2 d)` and
/// `u0: I2 -> I1`, `u1: I1 ⊗2 I1 -> I1`, `u2: I2 -> I2 ⊗1 I2`.
pub struct Roles<'b> {
    pub orientation: Orientation,
    pub first: &'b dyn Monoidal,
    pub second: &'b dyn Monoidal,
    pub u0: &'b CentreMorphism,
    pub u1: &'b CentreMorphism,
    pub u2: &'b CentreMorphism,
    bilax: &'b Bilax<'b>,
}

impl Roles<'_> {
    pub fn interchange(&self, a: &Obj, b: &Obj, c: &Obj, d: &Obj) -> Result<CentreMorphism> {
        match self.orientation {
            Orientation::Lax => self.bilax.eta(a, b, c, d),
            Orientation::Oplax => self.bilax.zeta(a, b, c, d),
        }
    }
}

impl<'a> Bilax<'a> {
    pub fn new(centre: &'a Centre) -> Result<Self> {
        Self::with_normalisation(centre, Normalisation::default())
    }

    pub fn with_normalisation(centre: &'a Centre, normalisation: Normalisation) -> Result<Self> {
        let cat = centre.category();
        let n_simples = cat.num_simples();
        let is = centre.sym_unit().clone();
        let ic = centre.conv_unit().clone();
        let n = is.dim();
        let big_d = cat.global_dim();
        let u2_scale = match normalisation {
            Normalisation::Inclusive => 1.0 / big_d,
            Normalisation::Coherent => 1.0,
        };

        let mut u0 = Matrix::zeros(1, n);
        let mut v0 = Matrix::zeros(n, 1);
        let mut u2 = Matrix::zeros(n * n, n);
        let mut v1 = Matrix::zeros(n, n * n);
        for i in 0..n_simples {
            let di = cat.irreps()[i].dim;
            let off = centre.sym_unit_offset(i);
            u0.set_block(0, off, &cap(di));
            v0.set_block(off, 0, &cup(di).scale(c64(cat.qdim(i) / big_d)));
            // id_i ⊗ coev'_i ⊗ id_{i*} into the (i, i) block of 𝕀_s ⊗ 𝕀_s, and its cap.
            for a in 0..di {
                for b in 0..di {
                    let col = off + a * di + b;
                    for m in 0..di {
                        let row = (off + a * di + m) * n + off + m * di + b;
                        u2.set(row, col, c64(u2_scale));
                        v1.set(col, row, c64(big_d / cat.qdim(i)));
                    }
                }
            }
        }
        let is_is = centre.conv_tensor(&is, &is);
        let ic_ic = centre.sym_tensor(&ic, &ic)?;
        let mor = |source: &Obj, target: &Obj, mat: Matrix| CentreMorphism {
            source: source.clone(),
            target: target.clone(),
            mat,
        };
        let u1 = centre.conv_left_unitor(&ic).after(&mor(&ic_ic.object, &ic_ic.ambient, ic_ic.inclusion.clone()))?;
        let v2 = mor(&ic_ic.ambient, &ic_ic.object, ic_ic.projection.clone()).after(&centre.conv_left_unitor_inv(&ic))?;
        Ok(Self {
            centre,
            u0: mor(&is, &ic, u0),
            u1,
            u2: mor(&is, &is_is, u2),
            v0: mor(&ic, &is, v0),
            v1: mor(&is_is, &is, v1),
            v2,
        })
    }

    pub fn centre(&self) -> &'a Centre {
        self.centre
    }

    /// `η: (c ⊗c c') ⊗s (d ⊗c d') -> (c ⊗s d) ⊗c (c' ⊗s d')`: include, cross the
    /// middle strands by the symmetry, project both halves.
    pub fn eta(&self, c: &Obj, c2: &Obj, d: &Obj, d2: &Obj) -> Result<CentreMorphism> {
        let z = self.centre;
        let source = z.sym_tensor(&z.conv_tensor(c, c2), &z.conv_tensor(d, d2))?;
        let left = z.sym_tensor(c, d)?;
        let right = z.sym_tensor(c2, d2)?;
        let target = z.conv_tensor(&left.object, &right.object);
        let crossed = apply_local(c.dim(), &swap(c2.dim(), d.dim()), d2.dim(), &source.inclusion);
        let half = apply_local(c.dim() * d.dim(), &right.projection, 1, &crossed);
        let mat = apply_local(1, &left.projection, right.object.dim(), &half);
        Ok(CentreMorphism {
            source: source.object.clone(),
            target,
            mat,
        })
    }

    /// `ζ: (c ⊗s d) ⊗c (c' ⊗s d') -> (c ⊗c c') ⊗s (d ⊗c d')`, the reverse composite.
    pub fn zeta(&self, c: &Obj, d: &Obj, c2: &Obj, d2: &Obj) -> Result<CentreMorphism> {
        let z = self.centre;
        let left = z.sym_tensor(c, d)?;
        let right = z.sym_tensor(c2, d2)?;
        let source = z.conv_tensor(&left.object, &right.object);
        let target = z.sym_tensor(&z.conv_tensor(c, c2), &z.conv_tensor(d, d2))?;
        let opened = left.inclusion.tensor(&right.inclusion);
        let crossed = apply_local(c.dim(), &swap(d.dim(), c2.dim()), d2.dim(), &opened);
        Ok(CentreMorphism {
            source,
            target: target.object.clone(),
            mat: &target.projection * &crossed,
        })
    }

    pub fn lax<'b>(&'b self, conv: &'b Conv<'b>, sym: &'b Sym<'b>) -> Roles<'b>
    where
        'a: 'b,
    {
        Roles {
            orientation: Orientation::Lax,
            first: conv,
            second: sym,
            u0: &self.u0,
            u1: &self.u1,
            u2: &self.u2,
            bilax: self,
        }
    }

    pub fn oplax<'b>(&'b self, conv: &'b Conv<'b>, sym: &'b Sym<'b>) -> Roles<'b>
    where
        'a: 'b,
    {
        Roles {
            orientation: Orientation::Oplax,
            first: sym,
            second: conv,
            u0: &self.v0,
            u1: &self.v1,
            u2: &self.v2,
            bilax: self,
        }
    }

    /// All six unit maps with their names.
    pub fn unit_maps(&self) -> Vec<(&'static str, &CentreMorphism)> {
        alloc::vec![
            ("u0", &self.u0),
            ("u1", &self.u1),
            ("u2", &self.u2),
            ("v0", &self.v0),
            ("v1", &self.v1),
            ("v2", &self.v2),
        ]
    }
}
