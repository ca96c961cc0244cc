//! Seeded random generation of elements and twists, shared by the
//! property suites and the CLI's randomized identity checker.

use rand::Rng;

use crate::element::{TwistParameter, WeylElement};
use crate::monomial::MultiIndex;
use crate::rational::Rational;

/// Bounds for random element generation.
#[derive(Debug, Clone, Copy)]
pub struct SampleConfig {
    pub n: usize,
    /// Cap on the total degree (x and y exponents together) of each term.
    pub max_total_degree: u32,
    pub max_terms: usize,
    /// Numerators are drawn from [-bound, bound], denominators from [1, bound].
    pub coefficient_bound: i64,
}

impl SampleConfig {
    pub fn new(n: usize) -> Self {
        SampleConfig {
            n,
            max_total_degree: 3,
            max_terms: 4,
            coefficient_bound: 10,
        }
    }
}

fn random_rational(rng: &mut impl Rng, bound: i64, nonzero: bool) -> Rational {
    let denom = rng.gen_range(1..=bound);
    let numer = loop {
        let v = rng.gen_range(-bound..=bound);
        if !nonzero || v != 0 {
            break v;
        }
    };
    Rational::new(numer.into(), denom.into())
}

/// Splits a random total degree across x- and y-exponent vectors.
fn random_term(rng: &mut impl Rng, cfg: &SampleConfig) -> (MultiIndex, MultiIndex) {
    let degree = rng.gen_range(0..=cfg.max_total_degree);
    let mut x_exp = vec![0u32; cfg.n];
    let mut y_exp = vec![0u32; cfg.n];
    for _ in 0..degree {
        let slot = rng.gen_range(0..2 * cfg.n);
        if slot < cfg.n {
            x_exp[slot] += 1;
        } else {
            y_exp[slot - cfg.n] += 1;
        }
    }
    (MultiIndex::new(x_exp), MultiIndex::new(y_exp))
}

/// A random element; may be zero.
pub fn random_element(rng: &mut impl Rng, cfg: &SampleConfig) -> WeylElement {
    let terms = rng.gen_range(0..=cfg.max_terms);
    let mut out = WeylElement::zero(cfg.n);
    for _ in 0..terms {
        let (x_exp, y_exp) = random_term(rng, cfg);
        let c = random_rational(rng, cfg.coefficient_bound, true);
        out = out
            .add(&WeylElement::monomial(cfg.n, x_exp, y_exp, c))
            .expect("uniform dimension");
    }
    out
}

pub fn random_nonzero_element(rng: &mut impl Rng, cfg: &SampleConfig) -> WeylElement {
    loop {
        let p = random_element(rng, cfg);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random element with all coefficients scalar (deg_y = 0); never zero.
pub fn random_constant_coefficient_element(rng: &mut impl Rng, cfg: &SampleConfig) -> WeylElement {
    let terms = rng.gen_range(1..=cfg.max_terms);
    let mut out = WeylElement::zero(cfg.n);
    for _ in 0..terms {
        let degree = rng.gen_range(0..=cfg.max_total_degree);
        let mut x_exp = vec![0u32; cfg.n];
        for _ in 0..degree {
            x_exp[rng.gen_range(0..cfg.n)] += 1;
        }
        let c = random_rational(rng, cfg.coefficient_bound, true);
        out = out
            .add(&WeylElement::monomial(
                cfg.n,
                MultiIndex::new(x_exp),
                MultiIndex::zero(cfg.n),
                c,
            ))
            .expect("uniform dimension");
    }
    if out.is_zero() {
        // terms cancelled; a plain constant keeps the invariant
        return WeylElement::one(cfg.n);
    }
    out
}

/// A random twist with every component nonzero.
pub fn random_nonzero_twist(rng: &mut impl Rng, n: usize, bound: i64) -> TwistParameter {
    TwistParameter::new((0..n).map(|_| random_rational(rng, bound, true)).collect())
}
