//! Canonical pretty-printer.
//!
//! Terms are emitted graded-lex descending by x-exponent, then graded-lex
//! descending by y-exponent within each coefficient, with negative
//! coefficients folded into the separators. The output is injective on
//! normal forms and parses back to the same element, so it doubles as the
//! wire format for CLI arguments and certificate payloads.

use num_traits::{One, Signed};

use crate::element::WeylElement;
use crate::monomial::MultiIndex;
use crate::poly::YPolynomial;
use crate::rational::{rational_to_string, Rational};

fn push_vars(factors: &mut Vec<String>, letter: char, exponents: &MultiIndex) {
    for (i, &e) in exponents.entries().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if e == 1 {
            factors.push(format!("{letter}{}", i + 1));
        } else {
            factors.push(format!("{letter}{}^{}", i + 1, e));
        }
    }
}

fn monomial_string(coeff_abs: &Rational, y_exp: &MultiIndex, x_exp: &MultiIndex) -> String {
    let mut factors = Vec::new();
    let bare = y_exp.is_zero() && x_exp.is_zero();
    if !coeff_abs.is_one() || bare {
        factors.push(rational_to_string(coeff_abs));
    }
    push_vars(&mut factors, 'y', y_exp);
    push_vars(&mut factors, 'x', x_exp);
    factors.join("*")
}

/// The canonical text form of an element.
pub fn print_canonical(p: &WeylElement) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (x_exp, poly) in p.terms().iter().rev() {
        for (y_exp, coeff) in poly.terms().iter().rev() {
            let negative = coeff.is_negative();
            if first {
                if negative {
                    out.push('-');
                }
                first = false;
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&monomial_string(&coeff.abs(), y_exp, x_exp));
        }
    }
    out
}

/// Canonical text form of a coefficient polynomial (no x part).
pub fn print_y_polynomial(p: &YPolynomial) -> String {
    print_canonical(&WeylElement::from_y_poly(p))
}

impl std::fmt::Display for WeylElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&print_canonical(self))
    }
}
