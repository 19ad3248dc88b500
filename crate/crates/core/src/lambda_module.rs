//! Square presentations of finitely presented modules over `Z[t, t^-1]`.

use crate::error::{Error, Result};
use crate::laurent::{AlexanderClass, LaurentPoly};
use crate::matrix::{det_laurent, minors, LaurentMatrix};

/// A module given by a square relation matrix. The 0x0 matrix presents the zero module.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ModulePresentation {
    relations: LaurentMatrix,
}

impl ModulePresentation {
    pub fn new(relations: LaurentMatrix) -> Self {
        ModulePresentation { relations }
    }

    pub fn zero_module() -> Self {
        Self::new(LaurentMatrix::empty())
    }

    /// `Z[t, t^-1] / (p)`
    pub fn cyclic(p: LaurentPoly) -> Self {
        Self::new(LaurentMatrix::from_fn(1, |_, _| p.clone()))
    }

    pub fn relations(&self) -> &LaurentMatrix {
        &self.relations
    }

    pub fn size(&self) -> usize {
        self.relations.size()
    }

    /// Trivial iff the determinant is a unit, i.e. the zeroth Fitting ideal is the whole ring.
    pub fn is_trivial(&self) -> bool {
        det_laurent(&self.relations).is_unit()
    }

    /// Canonical generator of the order ideal.
    pub fn cyclic_class(&self) -> AlexanderClass {
        det_laurent(&self.relations).canonicalize()
    }

    /// Isomorphism test, decided only for presentations of size 0 or 1.
    pub fn same_cyclic_module(&self, other: &Self) -> Result<bool> {
        for m in [self, other] {
            if m.size() > 1 {
                return Err(Error::NotCyclicScope { size: m.size() });
            }
        }
        Ok(self.cyclic_class() == other.cyclic_class())
    }

    /// Generators of the `index`-th Fitting ideal: all `(size - index)`-minors,
    /// or `[1]` when `index == size`.
    pub fn fitting_generators(&self, index: usize) -> Result<Vec<LaurentPoly>> {
        let size = self.size();
        match index.cmp(&size) {
            std::cmp::Ordering::Greater => Err(Error::FittingIndexOutOfRange { index, size }),
            std::cmp::Ordering::Equal => Ok(vec![LaurentPoly::one()]),
            std::cmp::Ordering::Less => minors(&self.relations, size - index),
        }
    }

    /// The module with `t` replaced by `t^-1` in every relation.
    pub fn conjugate(&self) -> Self {
        Self::new(self.relations.map(LaurentPoly::invert_variable))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(s: &str) -> ModulePresentation {
        ModulePresentation::cyclic(s.parse().unwrap())
    }

    fn pres(s: &str) -> ModulePresentation {
        ModulePresentation::new(s.parse().unwrap())
    }

    #[test]
    fn triviality_examples() {
        assert!(ModulePresentation::zero_module().is_trivial());
        assert!(!cyc("t - 1").is_trivial());
        assert!(cyc("t^3").is_trivial());
        assert!(!cyc("0").is_trivial());
        assert!(!cyc("2").is_trivial());
    }

    #[test]
    fn cyclic_class_examples() {
        assert_eq!(cyc("t - 1").cyclic_class().to_string(), "t - 1");
        assert_eq!(
            pres("t-1,t;-1,-t+1").cyclic_class().to_string(),
            "t^2 - 3*t + 1"
        );
        assert_eq!(
            ModulePresentation::zero_module().cyclic_class(),
            AlexanderClass::one()
        );
    }

    #[test]
    fn same_cyclic_module_examples() {
        assert!(cyc("t - 1").same_cyclic_module(&cyc("1 - t")).unwrap());
        assert!(!ModulePresentation::zero_module()
            .same_cyclic_module(&cyc("t - 1"))
            .unwrap());
        assert!(!cyc("t^2 - 3t + 1")
            .same_cyclic_module(&cyc("t - 1"))
            .unwrap());
        assert!(ModulePresentation::zero_module()
            .same_cyclic_module(&cyc("-t^2"))
            .unwrap());
        assert_eq!(
            pres("t-1,t;-1,-t+1").same_cyclic_module(&cyc("t - 1")),
            Err(Error::NotCyclicScope { size: 2 })
        );
    }

    #[test]
    fn fitting_generator_examples() {
        let m = pres("t-1,t;-1,-t+1");
        assert_eq!(
            m.fitting_generators(0).unwrap(),
            vec![det_laurent(m.relations())]
        );
        assert_eq!(m.fitting_generators(2).unwrap(), vec![LaurentPoly::one()]);
        let entries: Vec<LaurentPoly> = m.relations().entries().to_vec();
        assert_eq!(m.fitting_generators(1).unwrap(), entries);
        assert_eq!(
            m.fitting_generators(3),
            Err(Error::FittingIndexOutOfRange { index: 3, size: 2 })
        );
        assert_eq!(
            ModulePresentation::zero_module()
                .fitting_generators(0)
                .unwrap(),
            vec![LaurentPoly::one()]
        );
    }

    #[test]
    fn conjugate_of_t_minus_one_is_the_same_module() {
        let m = cyc("t - 1");
        assert!(m.same_cyclic_module(&m.conjugate()).unwrap());
    }
}
