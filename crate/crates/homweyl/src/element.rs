//! Normal-form elements of the nth Weyl algebra and the twisted product.
//!
//! An element is stored as a finite map from x-exponent vectors to
//! coefficient polynomials in the y's, i.e. in the unique normal form with
//! all y's to the left of all x's. The generators satisfy
//! x_i y_i = y_i x_i + 1, with every other pair commuting.
//!
//! The product uses the closed-form reordering
//!
//! ```text
//! x^a y^b = sum_t C(a,t) C(b,t) t! y^(b-t) x^(a-t)
//! ```
//!
//! per variable pair, which avoids the intermediate swell of one-swap
//! rewriting. The one-swap rewriter lives in [`crate::oracle`] and the two
//! are checked against each other in the test suites.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::error::WeylError;
use crate::monomial::MultiIndex;
use crate::poly::{binomial_rational, factorial_rational, YPolynomial};
use crate::rational::Rational;

/// The vector k defining the twisting automorphism: x_i is fixed and
/// y_i maps to y_i + k_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistParameter(Vec<Rational>);

impl TwistParameter {
    pub fn new(k: Vec<Rational>) -> Self {
        TwistParameter(k)
    }

    /// The zero twist (the untwisted algebra).
    pub fn zero(n: usize) -> Self {
        TwistParameter(vec![Rational::zero(); n])
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Rational] {
        &self.0
    }

    pub fn component(&self, i: usize) -> &Rational {
        &self.0[i]
    }

    pub fn all_nonzero(&self) -> bool {
        self.0.iter().all(|k| !k.is_zero())
    }

    pub fn some_nonzero(&self) -> bool {
        self.0.iter().any(|k| !k.is_zero())
    }

    /// Position of the first nonzero component, if any.
    pub fn pivot(&self) -> Option<usize> {
        self.0.iter().position(|k| !k.is_zero())
    }
}

/// The degree data of a nonzero element: the graded-lex largest x-exponent,
/// its coefficient polynomial, and the largest y-exponent over all
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degrees {
    pub deg_x: MultiIndex,
    pub leading: YPolynomial,
    pub deg_y: MultiIndex,
}

/// An element of the nth Weyl algebra in normal form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct WeylElement {
    n: usize,
    terms: BTreeMap<MultiIndex, YPolynomial>,
}

impl WeylElement {
    pub fn zero(n: usize) -> Self {
        WeylElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        let mut e = Self::zero(n);
        e.add_term(MultiIndex::zero(n), YPolynomial::constant(n, c));
        e
    }

    /// The generator x_i (0-based position).
    pub fn x_var(n: usize, i: usize) -> Self {
        let mut e = Self::zero(n);
        e.add_term(
            MultiIndex::unit(n, i),
            YPolynomial::constant(n, Rational::one()),
        );
        e
    }

    /// The generator y_i (0-based position).
    pub fn y_var(n: usize, i: usize) -> Self {
        let mut e = Self::zero(n);
        e.add_term(MultiIndex::zero(n), YPolynomial::variable(n, i));
        e
    }

    /// The monomial c * y^gamma * x^l.
    pub fn monomial(n: usize, x_exp: MultiIndex, y_exp: MultiIndex, c: Rational) -> Self {
        let mut e = Self::zero(n);
        e.add_term(x_exp, YPolynomial::monomial(n, y_exp, c));
        e
    }

    /// Embeds a commutative polynomial in the y's as an element.
    pub fn from_y_poly(p: &YPolynomial) -> Self {
        let mut e = Self::zero(p.n());
        e.add_term(MultiIndex::zero(p.n()), p.clone());
        e
    }

    /// The monomial x^exponents.
    pub fn x_monomial(n: usize, exponents: MultiIndex) -> Self {
        Self::monomial(n, exponents, MultiIndex::zero(n), Rational::one())
    }

    /// The monomial y_i^e (0-based position).
    pub fn y_power(n: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0u32; n];
        exps[i] = e;
        Self::monomial(
            n,
            MultiIndex::zero(n),
            MultiIndex::new(exps),
            Rational::one(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<MultiIndex, YPolynomial> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&MultiIndex::zero(self.n))
                .and_then(YPolynomial::constant_value)
                .is_some_and(|c| c.is_one())
    }

    fn add_term(&mut self, x_exp: MultiIndex, poly: YPolynomial) {
        assert_eq!(x_exp.len(), self.n, "x-exponent length mismatch");
        assert_eq!(poly.n(), self.n, "coefficient dimension mismatch");
        if poly.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(x_exp) {
            Entry::Vacant(e) => {
                e.insert(poly);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add(&poly);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_same_n(&self, other: &WeylElement) -> Result<(), WeylError> {
        if self.n != other.n {
            return Err(WeylError::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    fn check_twist_n(&self, k: &TwistParameter) -> Result<(), WeylError> {
        if self.n != k.n() {
            return Err(WeylError::DimensionMismatch {
                expected: self.n,
                found: k.n(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &WeylElement) -> Result<WeylElement, WeylError> {
        self.check_same_n(other)?;
        let mut out = self.clone();
        for (l, p) in &other.terms {
            out.add_term(l.clone(), p.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &WeylElement) -> Result<WeylElement, WeylError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> WeylElement {
        WeylElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(l, p)| (l.clone(), p.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> WeylElement {
        if c.is_zero() {
            return WeylElement::zero(self.n);
        }
        WeylElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(l, p)| (l.clone(), p.scale(c)))
                .collect(),
        }
    }

    /// The associative normal-form product.
    pub fn mul(&self, other: &WeylElement) -> Result<WeylElement, WeylError> {
        self.check_same_n(other)?;
        let n = self.n;
        let mut out = WeylElement::zero(n);
        for (l, pl) in &self.terms {
            for (m, qm) in &other.terms {
                for (gamma, cq) in qm.terms() {
                    // move x^l across y^gamma
                    let bound = l.min(gamma);
                    for t in bound.iter_box() {
                        let mut weight = Rational::one();
                        for i in 0..n {
                            let ti = t.entry(i);
                            if ti == 0 {
                                continue;
                            }
                            weight *= binomial_rational(l.entry(i), ti)
                                * binomial_rational(gamma.entry(i), ti)
                                * factorial_rational(ti);
                        }
                        let y_part = gamma.checked_sub(&t).expect("t <= gamma");
                        let x_part = l.checked_sub(&t).expect("t <= l").add(m);
                        let contrib = pl.mul(&YPolynomial::monomial(n, y_part, cq * &weight));
                        out.add_term(x_part, contrib);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Sum of scalar multiples. Errors on an empty list (the ambient
    /// dimension would be undetermined) or mismatched dimensions.
    pub fn linear_combine(pairs: &[(Rational, WeylElement)]) -> Result<WeylElement, WeylError> {
        let first = pairs.first().ok_or(WeylError::EmptyInput)?;
        let mut out = WeylElement::zero(first.1.n);
        for (c, p) in pairs {
            out = out.add(&p.scale(c))?;
        }
        Ok(out)
    }

    /// Applies the e-th power of the twisting automorphism: substitutes
    /// y_i -> y_i + e * k_i in every coefficient polynomial.
    pub fn alpha_pow(&self, k: &TwistParameter, e: i64) -> Result<WeylElement, WeylError> {
        self.check_twist_n(k)?;
        if e == 0 {
            return Ok(self.clone());
        }
        let factor = Rational::from_integer(e.into());
        let offsets: Vec<Rational> = k.components().iter().map(|ki| ki * &factor).collect();
        let terms = self
            .terms
            .iter()
            .map(|(l, p)| (l.clone(), p.shift(&offsets)))
            .collect();
        Ok(WeylElement { n: self.n, terms })
    }

    /// The twisted (hom-associative) product a * b = alpha_k(ab).
    pub fn yau_mul(
        &self,
        other: &WeylElement,
        k: &TwistParameter,
    ) -> Result<WeylElement, WeylError> {
        self.check_twist_n(k)?;
        self.mul(other)?.alpha_pow(k, 1)
    }

    /// Degree data, `None` exactly for the zero element.
    pub fn degrees(&self) -> Option<Degrees> {
        let (deg_x, leading) = self.terms.iter().next_back()?;
        let deg_y = self
            .terms
            .values()
            .filter_map(YPolynomial::degree)
            .max()
            .expect("nonzero element has nonzero coefficients")
            .clone();
        Some(Degrees {
            deg_x: deg_x.clone(),
            leading: leading.clone(),
            deg_y,
        })
    }

    /// The set of x-exponent vectors with nonzero coefficient.
    pub fn support(&self) -> BTreeSet<MultiIndex> {
        self.terms.keys().cloned().collect()
    }

    /// True when every coefficient polynomial is a scalar, i.e. deg_y = 0.
    /// The zero element counts as constant-coefficient.
    pub fn has_constant_coefficients(&self) -> bool {
        self.terms.values().all(YPolynomial::is_constant)
    }

    /// Rewrites the element with coefficients on the right of the x's:
    /// p = sum_a x^a q_a. The returned map sends a to q_a.
    pub fn right_form(&self) -> BTreeMap<MultiIndex, YPolynomial> {
        let n = self.n;
        let mut slots: BTreeMap<MultiIndex, YPolynomial> = BTreeMap::new();
        for (l, pl) in &self.terms {
            for (gamma, c) in pl.terms() {
                // y^gamma x^l = sum_t (-1)^|t| C(l,t) C(gamma,t) t! x^(l-t) y^(gamma-t)
                let bound = l.min(gamma);
                for t in bound.iter_box() {
                    let mut weight = if t.total_degree() % 2 == 0 {
                        Rational::one()
                    } else {
                        -Rational::one()
                    };
                    for i in 0..n {
                        let ti = t.entry(i);
                        if ti == 0 {
                            continue;
                        }
                        weight *= binomial_rational(l.entry(i), ti)
                            * binomial_rational(gamma.entry(i), ti)
                            * factorial_rational(ti);
                    }
                    let x_part = l.checked_sub(&t).expect("t <= l");
                    let y_part = gamma.checked_sub(&t).expect("t <= gamma");
                    let slot = slots.entry(x_part).or_insert_with(|| YPolynomial::zero(n));
                    slot.add_term(y_part, c * &weight);
                }
            }
        }
        slots.retain(|_, p| !p.is_zero());
        slots
    }

    /// Rebuilds an element from its right-form slots: sum_a x^a q_a.
    pub fn from_right_form(
        n: usize,
        slots: &BTreeMap<MultiIndex, YPolynomial>,
    ) -> Result<WeylElement, WeylError> {
        let mut out = WeylElement::zero(n);
        for (a, q) in slots {
            let term = WeylElement::x_monomial(n, a.clone()).mul(&WeylElement::from_y_poly(q))?;
            out = out.add(&term)?;
        }
        Ok(out)
    }
}
