//! Sparse commutative polynomials in y_1..y_n over the rationals.
//!
//! These are the coefficient polynomials of a normal-form Weyl-algebra
//! element. Keys are kept in graded lexicographic order by the map itself,
//! zero coefficients are deleted eagerly, so equality is structural.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::monomial::MultiIndex;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct YPolynomial {
    n: usize,
    terms: BTreeMap<MultiIndex, Rational>,
}

impl YPolynomial {
    pub fn zero(n: usize) -> Self {
        YPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        let mut p = Self::zero(n);
        p.add_term(MultiIndex::zero(n), c);
        p
    }

    /// The variable y_i (0-based position).
    pub fn variable(n: usize, i: usize) -> Self {
        let mut p = Self::zero(n);
        p.add_term(MultiIndex::unit(n, i), Rational::from_integer(1.into()));
        p
    }

    pub fn monomial(n: usize, exponents: MultiIndex, c: Rational) -> Self {
        let mut p = Self::zero(n);
        p.add_term(exponents, c);
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<MultiIndex, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the polynomial is an element of the scalar field
    /// (including zero).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(MultiIndex::is_zero)
    }

    /// The scalar value if this polynomial is constant.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            let (k, v) = self.terms.iter().next().unwrap();
            if k.is_zero() {
                return Some(v.clone());
            }
        }
        None
    }

    /// Graded-lex largest exponent vector, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<&MultiIndex> {
        self.terms.keys().next_back()
    }

    /// Coefficient of the graded-lex leading monomial.
    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    pub fn add_term(&mut self, exponents: MultiIndex, c: Rational) {
        assert_eq!(exponents.len(), self.n, "exponent vector length mismatch");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exponents) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &YPolynomial) -> YPolynomial {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &YPolynomial) -> YPolynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> YPolynomial {
        YPolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> YPolynomial {
        if c.is_zero() {
            return YPolynomial::zero(self.n);
        }
        YPolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &YPolynomial) -> YPolynomial {
        assert_eq!(self.n, other.n);
        let mut out = YPolynomial::zero(self.n);
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                out.add_term(ka.add(kb), va * vb);
            }
        }
        out
    }

    /// Substitutes y_i -> y_i + offsets[i] for every variable.
    pub fn shift(&self, offsets: &[Rational]) -> YPolynomial {
        assert_eq!(offsets.len(), self.n);
        if offsets.iter().all(Zero::is_zero) {
            return self.clone();
        }
        let mut out = YPolynomial::zero(self.n);
        for (gamma, c) in &self.terms {
            let mut part = YPolynomial::constant(self.n, c.clone());
            for (i, &e) in gamma.entries().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if offsets[i].is_zero() {
                    let mut exps = MultiIndex::zero(self.n);
                    exps = exps.add(&power_at(self.n, i, e));
                    part = part.mul(&YPolynomial::monomial(
                        self.n,
                        exps,
                        Rational::from_integer(1.into()),
                    ));
                    continue;
                }
                // (y_i + o)^e expanded by the binomial theorem
                let mut expansion = YPolynomial::zero(self.n);
                for j in 0..=e {
                    let coeff = binomial_rational(e, j) * pow_rational(&offsets[i], e - j);
                    expansion.add_term(power_at(self.n, i, j), coeff);
                }
                part = part.mul(&expansion);
            }
            out = out.add(&part);
        }
        out
    }
}

fn power_at(n: usize, i: usize, e: u32) -> MultiIndex {
    let mut entries = vec![0u32; n];
    entries[i] = e;
    MultiIndex::new(entries)
}

pub(crate) fn binomial_rational(n: u32, k: u32) -> Rational {
    Rational::from_integer(num_integer::binomial(
        num_bigint::BigInt::from(n),
        num_bigint::BigInt::from(k),
    ))
}

pub(crate) fn factorial_rational(n: u32) -> Rational {
    let mut acc = num_bigint::BigInt::from(1);
    for i in 2..=i64::from(n) {
        acc *= i;
    }
    Rational::from_integer(acc)
}

fn pow_rational(r: &Rational, e: u32) -> Rational {
    let mut acc = Rational::from_integer(1.into());
    for _ in 0..e {
        acc *= r;
    }
    acc
}
