//! Executable checkers for the defining identities of the twisted algebra.
//!
//! Each check returns an [`IdentityReport`] carrying both sides and their
//! difference, so a failing property test localizes the arithmetic bug
//! instead of just reporting `false`.

use crate::element::{TwistParameter, WeylElement};
use crate::error::WeylError;

/// Outcome of comparing two element expressions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub holds: bool,
    pub lhs: WeylElement,
    pub rhs: WeylElement,
    /// lhs - rhs; zero exactly when the identity holds.
    pub discrepancy: WeylElement,
}

impl IdentityReport {
    pub fn compare(lhs: WeylElement, rhs: WeylElement) -> Result<Self, WeylError> {
        let discrepancy = lhs.sub(&rhs)?;
        Ok(IdentityReport {
            holds: discrepancy.is_zero(),
            lhs,
            rhs,
            discrepancy,
        })
    }
}

/// Checks alpha(a) * (b * c) == (a * b) * alpha(c) under the twisted product.
pub fn check_hom_associativity(
    a: &WeylElement,
    b: &WeylElement,
    c: &WeylElement,
    k: &TwistParameter,
) -> Result<IdentityReport, WeylError> {
    let lhs = a.alpha_pow(k, 1)?.yau_mul(&b.yau_mul(c, k)?, k)?;
    let rhs = a.yau_mul(b, k)?.yau_mul(&c.alpha_pow(k, 1)?, k)?;
    IdentityReport::compare(lhs, rhs)
}

/// Checks 1 * a == a * 1 == alpha(a): the identity of the untwisted algebra
/// acts as a weak unit. If the two-sided comparison fails, the report holds
/// the first failing pair.
pub fn check_weak_unit(a: &WeylElement, k: &TwistParameter) -> Result<IdentityReport, WeylError> {
    let one = WeylElement::one(a.n());
    let left = one.yau_mul(a, k)?;
    let right = a.yau_mul(&one, k)?;
    let twisted = a.alpha_pow(k, 1)?;
    let first = IdentityReport::compare(left, twisted.clone())?;
    if !first.holds {
        return Ok(first);
    }
    IdentityReport::compare(right, twisted)
}

/// Checks that the twisting map is multiplicative for the twisted product:
/// alpha(a * b) == alpha(a) * alpha(b).
pub fn check_morphism_of_twist(
    a: &WeylElement,
    b: &WeylElement,
    k: &TwistParameter,
) -> Result<IdentityReport, WeylError> {
    let lhs = a.yau_mul(b, k)?.alpha_pow(k, 1)?;
    let rhs = a.alpha_pow(k, 1)?.yau_mul(&b.alpha_pow(k, 1)?, k)?;
    IdentityReport::compare(lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn x(n: usize, i: usize) -> WeylElement {
        WeylElement::x_var(n, i)
    }

    fn y(n: usize, i: usize) -> WeylElement {
        WeylElement::y_var(n, i)
    }

    #[test]
    fn hom_associativity_on_generators() {
        let k = TwistParameter::new(vec![int(1)]);
        let r = check_hom_associativity(&x(1, 0), &y(1, 0), &x(1, 0), &k).unwrap();
        assert!(r.holds, "discrepancy: {:?}", r.discrepancy);
    }

    #[test]
    fn zero_twist_reduces_to_associativity() {
        let k = TwistParameter::zero(1);
        let a = x(1, 0).mul(&y(1, 0)).unwrap();
        let b = y(1, 0);
        let c = x(1, 0);
        let r = check_hom_associativity(&a, &b, &c, &k).unwrap();
        assert!(r.holds);
        // with k = 0 the twisted product is the plain product
        assert_eq!(a.yau_mul(&b, &k).unwrap(), a.mul(&b).unwrap());
    }

    #[test]
    fn weak_unit_absorbs() {
        let k = TwistParameter::new(vec![int(1)]);
        let b = y(1, 0);
        let c = x(1, 0).mul(&x(1, 0)).unwrap();
        let r = check_hom_associativity(&WeylElement::one(1), &b, &c, &k).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn weak_unit_examples() {
        // a = y, k = 3: both sides y + 3
        let k = TwistParameter::new(vec![int(3)]);
        let r = check_weak_unit(&y(1, 0), &k).unwrap();
        assert!(r.holds);
        assert_eq!(
            r.rhs,
            y(1, 0).add(&WeylElement::constant(1, int(3))).unwrap()
        );

        // a = 0
        let r = check_weak_unit(&WeylElement::zero(1), &k).unwrap();
        assert!(r.holds);
        assert!(r.lhs.is_zero());

        // a = yx, k = 1: both sides yx + x
        let k = TwistParameter::new(vec![int(1)]);
        let yx = y(1, 0).mul(&x(1, 0)).unwrap();
        let r = check_weak_unit(&yx, &k).unwrap();
        assert!(r.holds);
        assert_eq!(r.rhs, yx.add(&x(1, 0)).unwrap());
    }

    #[test]
    fn twist_is_morphism() {
        let k = TwistParameter::new(vec![int(1)]);
        assert!(
            check_morphism_of_twist(&x(1, 0), &y(1, 0), &k)
                .unwrap()
                .holds
        );
        let a = y(1, 0).mul(&x(1, 0)).unwrap();
        assert!(
            check_morphism_of_twist(&a, &WeylElement::one(1), &k)
                .unwrap()
                .holds
        );
        let k2 = TwistParameter::new(vec![int(2), int(-1)]);
        assert!(
            check_morphism_of_twist(&x(2, 0), &x(2, 1), &k2)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn dimension_error() {
        let k = TwistParameter::new(vec![int(1)]);
        assert!(check_hom_associativity(&x(2, 0), &x(2, 0), &x(2, 0), &k).is_err());
    }
}
