//! The two monoidal structures on Z(Rep(G)) behind one interface, so the
//! 2-fold checks can be run with either product in either role.

use crate::centre::{Centre, CentreMorphism, Obj};
use crate::Result;

pub trait Monoidal {
    /// Short tag used in object labels and diagram ids.
    fn name(&self) -> &'static str;
    fn unit(&self) -> Obj;
    fn tensor(&self, c: &Obj, d: &Obj) -> Result<Obj>;
    fn tensor_mor(&self, f: &CentreMorphism, g: &CentreMorphism) -> Result<CentreMorphism>;
    /// `(a b) c -> a (b c)`.
    fn associator(&self, a: &Obj, b: &Obj, c: &Obj) -> Result<CentreMorphism>;
    fn left_unitor(&self, c: &Obj) -> Result<CentreMorphism>;
    fn right_unitor(&self, c: &Obj) -> Result<CentreMorphism>;
    /// `c d -> d c`.
    fn braiding(&self, c: &Obj, d: &Obj) -> Result<CentreMorphism>;
}

/// `⊗_c` with unit `𝕀_c` and the braiding of the centre.
pub struct Conv<'a>(pub &'a Centre);

/// `⊗_s` with unit `𝕀_s` and its symmetry.
pub struct Sym<'a>(pub &'a Centre);

impl Monoidal for Conv<'_> {
    fn name(&self) -> &'static str {
        "conv"
    }

    fn unit(&self) -> Obj {
        self.0.conv_unit().clone()
    }

    fn tensor(&self, c: &Obj, d: &Obj) -> Result<Obj> {
        Ok(self.0.conv_tensor(c, d))
    }

    fn tensor_mor(&self, f: &CentreMorphism, g: &CentreMorphism) -> Result<CentreMorphism> {
        Ok(self.0.conv_tensor_mor(f, g))
    }

    fn associator(&self, a: &Obj, b: &Obj, c: &Obj) -> Result<CentreMorphism> {
        Ok(self.0.conv_associator(a, b, c))
    }

    fn left_unitor(&self, c: &Obj) -> Result<CentreMorphism> {
        Ok(self.0.conv_left_unitor(c))
    }

    fn right_unitor(&self, c: &Obj) -> Result<CentreMorphism> {
        Ok(self.0.conv_right_unitor(c))
    }

    fn braiding(&self, c: &Obj, d: &Obj) -> Result<CentreMorphism> {
        Ok(self.0.braiding(c, d))
    }
}

impl Monoidal for Sym<'_> {
    fn name(&self) -> &'static str {
        "sym"
    }

    fn unit(&self) -> Obj {
        self.0.sym_unit().clone()
    }

    fn tensor(&self, c: &Obj, d: &Obj) -> Result<Obj> {
        Ok(self.0.sym_tensor(c, d)?.object.clone())
    }

    fn tensor_mor(&self, f: &CentreMorphism, g: &CentreMorphism) -> Result<CentreMorphism> {
        self.0.sym_tensor_mor(f, g)
    }

    fn associator(&self, a: &Obj, b: &Obj, c: &Obj) -> Result<CentreMorphism> {
        self.0.sym_associator(a, b, c)
    }

    fn left_unitor(&self, c: &Obj) -> Result<CentreMorphism> {
        self.0.sym_left_unitor(c)
    }

    fn right_unitor(&self, c: &Obj) -> Result<CentreMorphism> {
        self.0.sym_right_unitor(c)
    }

    fn braiding(&self, c: &Obj, d: &Obj) -> Result<CentreMorphism> {
        self.0.sym_symmetry(c, d)
    }
}
