//! Membership certificates for one-sided ideals of the twisted algebra.
//!
//! A certificate is an expression tree over the generators of an
//! [`IdealPresentation`], built from the operations an ideal is closed
//! under: scalar combinations, twisted multiplication by ring elements,
//! and the twisting map. Evaluating the tree reproduces the claimed
//! member, so verification is a single exact equality check.
//!
//! `AlphaInv` is only sound when every twist component is nonzero (the
//! ideal is then invariant under the inverse twist as well); evaluation
//! rejects it otherwise.

use std::fmt;

use num_traits::One;
use serde_json::{json, Value};

use crate::element::{TwistParameter, WeylElement};
use crate::error::CertificateError;
use crate::parse::parse;
use crate::print::print_canonical;
use crate::rational::{rational_from_str, rational_to_string, Rational};

/// Which side the ideal is generated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

/// A one-sided ideal given by generators in the ambient twisted algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealPresentation {
    pub side: Side,
    pub n: usize,
    pub k: TwistParameter,
    pub generators: Vec<WeylElement>,
}

impl IdealPresentation {
    pub fn new(
        side: Side,
        n: usize,
        k: TwistParameter,
        generators: Vec<WeylElement>,
    ) -> Result<Self, CertificateError> {
        if k.n() != n {
            return Err(CertificateError::Presentation(format!(
                "twist has {} components, expected {n}",
                k.n()
            )));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.n() != n {
                return Err(CertificateError::Presentation(format!(
                    "generator {i} has n = {}, expected {n}",
                    g.n()
                )));
            }
            if g.is_zero() {
                return Err(CertificateError::Presentation(format!(
                    "generator {i} is zero"
                )));
            }
        }
        Ok(IdealPresentation {
            side,
            n,
            k,
            generators,
        })
    }
}

/// Witness that an element lies in the ideal of a presentation.
///
/// `StarGen(m, c)` denotes `m * c` for left presentations and `c * m` for
/// right ones, where `*` is the twisted product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Gen(usize),
    Add(Box<Certificate>, Box<Certificate>),
    Scale(Rational, Box<Certificate>),
    StarGen(WeylElement, Box<Certificate>),
    Alpha(Box<Certificate>),
    AlphaInv(Box<Certificate>),
}

impl Certificate {
    pub fn gen(i: usize) -> Self {
        Certificate::Gen(i)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(a: Certificate, b: Certificate) -> Self {
        Certificate::Add(Box::new(a), Box::new(b))
    }

    pub fn scale(c: Rational, inner: Certificate) -> Self {
        Certificate::Scale(c, Box::new(inner))
    }

    /// Scale, omitting the node when the factor is 1.
    pub fn scale_or_id(c: Rational, inner: Certificate) -> Self {
        if c.is_one() {
            inner
        } else {
            Certificate::Scale(c, Box::new(inner))
        }
    }

    pub fn star(m: WeylElement, inner: Certificate) -> Self {
        Certificate::StarGen(m, Box::new(inner))
    }

    pub fn alpha(inner: Certificate) -> Self {
        Certificate::Alpha(Box::new(inner))
    }

    pub fn alpha_inv(inner: Certificate) -> Self {
        Certificate::AlphaInv(Box::new(inner))
    }

    /// The inner difference step `alpha(c) - c` as a certificate.
    pub fn alpha_minus_id(inner: &Certificate) -> Self {
        Certificate::add(
            Certificate::alpha(inner.clone()),
            Certificate::scale(-Rational::one(), inner.clone()),
        )
    }

    /// The inner difference step `c - alpha(c)` as a certificate.
    pub fn id_minus_alpha(inner: &Certificate) -> Self {
        Certificate::add(
            inner.clone(),
            Certificate::scale(-Rational::one(), Certificate::alpha(inner.clone())),
        )
    }

    /// Recursively evaluates the tree over a presentation.
    pub fn evaluate(&self, pres: &IdealPresentation) -> Result<WeylElement, CertificateError> {
        match self {
            Certificate::Gen(i) => {
                pres.generators
                    .get(*i)
                    .cloned()
                    .ok_or(CertificateError::GeneratorIndex {
                        index: *i,
                        count: pres.generators.len(),
                    })
            }
            Certificate::Add(a, b) => Ok(a.evaluate(pres)?.add(&b.evaluate(pres)?)?),
            Certificate::Scale(c, inner) => Ok(inner.evaluate(pres)?.scale(c)),
            Certificate::StarGen(m, inner) => {
                let v = inner.evaluate(pres)?;
                let out = match pres.side {
                    Side::Left => m.yau_mul(&v, &pres.k)?,
                    Side::Right => v.yau_mul(m, &pres.k)?,
                };
                Ok(out)
            }
            Certificate::Alpha(inner) => Ok(inner.evaluate(pres)?.alpha_pow(&pres.k, 1)?),
            Certificate::AlphaInv(inner) => {
                if !pres.k.all_nonzero() {
                    return Err(CertificateError::UnsoundAlphaInv);
                }
                Ok(inner.evaluate(pres)?.alpha_pow(&pres.k, -1)?)
            }
        }
    }

    /// Substitutes every `Gen(i)` leaf with `replacements[i]`, turning a
    /// certificate over a new presentation into one over the presentation
    /// the replacements are stated in.
    pub fn substitute_generators(
        &self,
        replacements: &[Certificate],
    ) -> Result<Certificate, CertificateError> {
        match self {
            Certificate::Gen(i) => {
                replacements
                    .get(*i)
                    .cloned()
                    .ok_or(CertificateError::GeneratorIndex {
                        index: *i,
                        count: replacements.len(),
                    })
            }
            Certificate::Add(a, b) => Ok(Certificate::add(
                a.substitute_generators(replacements)?,
                b.substitute_generators(replacements)?,
            )),
            Certificate::Scale(c, inner) => Ok(Certificate::scale(
                c.clone(),
                inner.substitute_generators(replacements)?,
            )),
            Certificate::StarGen(m, inner) => Ok(Certificate::star(
                m.clone(),
                inner.substitute_generators(replacements)?,
            )),
            Certificate::Alpha(inner) => Ok(Certificate::alpha(
                inner.substitute_generators(replacements)?,
            )),
            Certificate::AlphaInv(inner) => Ok(Certificate::alpha_inv(
                inner.substitute_generators(replacements)?,
            )),
        }
    }

    /// Canonical nested JSON form. Element and scalar payloads use the
    /// canonical text format, so serialization round-trips bit-exactly.
    pub fn to_json(&self) -> Value {
        match self {
            Certificate::Gen(i) => json!({ "gen": i }),
            Certificate::Add(a, b) => json!({ "add": [a.to_json(), b.to_json()] }),
            Certificate::Scale(c, inner) => {
                json!({ "scale": [rational_to_string(c), inner.to_json()] })
            }
            Certificate::StarGen(m, inner) => {
                json!({ "star": [print_canonical(m), inner.to_json()] })
            }
            Certificate::Alpha(inner) => json!({ "alpha": inner.to_json() }),
            Certificate::AlphaInv(inner) => json!({ "alphainv": inner.to_json() }),
        }
    }

    /// Decodes the canonical JSON form; element payloads are parsed in the
    /// ambient algebra with `n` variable pairs.
    pub fn from_json(value: &Value, n: usize) -> Result<Certificate, CertificateError> {
        let obj = value
            .as_object()
            .ok_or_else(|| CertificateError::Malformed("expected an object".into()))?;
        if obj.len() != 1 {
            return Err(CertificateError::Malformed(
                "expected exactly one node tag".into(),
            ));
        }
        let (tag, payload) = obj.iter().next().unwrap();
        match tag.as_str() {
            "gen" => {
                let i = payload.as_u64().ok_or_else(|| {
                    CertificateError::Malformed("gen payload must be an index".into())
                })?;
                Ok(Certificate::Gen(i as usize))
            }
            "add" => {
                let arr = expect_pair(payload, "add")?;
                Ok(Certificate::add(
                    Certificate::from_json(&arr[0], n)?,
                    Certificate::from_json(&arr[1], n)?,
                ))
            }
            "scale" => {
                let arr = expect_pair(payload, "scale")?;
                let c_str = arr[0].as_str().ok_or_else(|| {
                    CertificateError::Malformed("scale payload must start with a scalar".into())
                })?;
                let c = rational_from_str(c_str).map_err(CertificateError::Malformed)?;
                Ok(Certificate::scale(c, Certificate::from_json(&arr[1], n)?))
            }
            "star" => {
                let arr = expect_pair(payload, "star")?;
                let m_str = arr[0].as_str().ok_or_else(|| {
                    CertificateError::Malformed("star payload must start with an element".into())
                })?;
                let m = parse(m_str, n)?;
                Ok(Certificate::star(m, Certificate::from_json(&arr[1], n)?))
            }
            "alpha" => Ok(Certificate::alpha(Certificate::from_json(payload, n)?)),
            "alphainv" => Ok(Certificate::alpha_inv(Certificate::from_json(payload, n)?)),
            other => Err(CertificateError::Malformed(format!(
                "unknown node tag {other:?}"
            ))),
        }
    }
}

fn expect_pair<'v>(payload: &'v Value, tag: &str) -> Result<&'v Vec<Value>, CertificateError> {
    match payload.as_array() {
        Some(arr) if arr.len() == 2 => Ok(arr),
        _ => Err(CertificateError::Malformed(format!(
            "{tag} payload must be a two-element array"
        ))),
    }
}

/// True iff the certificate evaluates exactly to `target`.
pub fn verify_membership(
    cert: &Certificate,
    pres: &IdealPresentation,
    target: &WeylElement,
) -> Result<bool, CertificateError> {
    Ok(cert.evaluate(pres)? == *target)
}

/// Rewrites `cert_over_new` (stated over a new generator list) into a
/// certificate over the old presentation, given certificates expressing
/// each new generator over the old one.
pub fn compose_presentation_change(
    certs_new_in_old: &[Certificate],
    cert_over_new: &Certificate,
) -> Result<Certificate, CertificateError> {
    cert_over_new.substitute_generators(certs_new_in_old)
}
