//! Constructive ideal transformations for the twisted algebra, every
//! output accompanied by membership certificates in both directions.
//!
//! The three stages:
//!
//! 1. [`flatten_leading`]: trade a generator for one with leading
//!    coefficient 1, by repeated `alpha(p) - p` difference steps.
//! 2. [`constant_generators`]: replace a single generator by finitely many
//!    generators whose coefficients are all scalars.
//! 3. [`principal_from_constant`]: pack constant-coefficient generators
//!    into one principal generator `t = q_1 + y_j q_2 + ... + y_j^(m-1) q_m`
//!    (pivot j = first nonzero twist component), recovering each q_i back
//!    from `t` through a difference chain.
//!
//! [`principal_from_two`] runs 2 and 3 end to end on a two-generator
//! presentation. Difference steps can stall on a twist-fixed nonconstant
//! coefficient (possible only for n >= 2, e.g. y1 + y2 with k = (1,-1));
//! that is reported as [`AlgorithmError::Stalled`] rather than repaired.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::cert::{Certificate, Side};
use crate::element::{TwistParameter, WeylElement};
use crate::error::{AlgorithmError, WeylError};
use crate::hom::IdentityReport;
use crate::monomial::MultiIndex;
use crate::poly::{factorial_rational, YPolynomial};
use crate::rational::Rational;

/// A replacement generator list with certificates both ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedGenerators {
    pub new_generators: Vec<WeylElement>,
    /// One certificate per new generator, over the old presentation.
    pub new_in_old: Vec<Certificate>,
    /// One certificate per old generator, over the new presentation.
    pub old_in_new: Vec<Certificate>,
}

/// The difference chain t, alpha(t) - t, ... used to recover the
/// individual generators from a principal generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceChain {
    /// t followed by its iterated differences; `steps[i+1] = alpha(steps[i]) - steps[i]`.
    pub steps: Vec<WeylElement>,
    /// The recovered generators, in the order they appear in t.
    pub extracted: Vec<WeylElement>,
}

fn check_twist(p: &WeylElement, k: &TwistParameter) -> Result<(), AlgorithmError> {
    if p.n() != k.n() {
        return Err(WeylError::DimensionMismatch {
            expected: p.n(),
            found: k.n(),
        }
        .into());
    }
    Ok(())
}

fn require_all_nonzero(k: &TwistParameter) -> Result<(), AlgorithmError> {
    for (i, c) in k.components().iter().enumerate() {
        if c.is_zero() {
            return Err(AlgorithmError::KComponentZero { index: i });
        }
    }
    Ok(())
}

/// Slot decomposition that matches the ideal side: coefficients to the
/// left of the x's for left ideals, to the right for right ideals.
fn sided_slots(p: &WeylElement, side: Side) -> BTreeMap<MultiIndex, YPolynomial> {
    match side {
        Side::Left => p.terms().clone(),
        Side::Right => p.right_form(),
    }
}

/// `r * p` for left ideals, `p * r` for right ideals.
fn sided_poly_mul(r: &YPolynomial, p: &WeylElement, side: Side) -> Result<WeylElement, WeylError> {
    let r = WeylElement::from_y_poly(r);
    match side {
        Side::Left => r.mul(p),
        Side::Right => p.mul(&r),
    }
}

/// Twisted product with a scalar, sided: `c * p` or `p * c`.
fn sided_scalar_star(
    c: &Rational,
    p: &WeylElement,
    k: &TwistParameter,
    side: Side,
) -> Result<WeylElement, WeylError> {
    let c = WeylElement::constant(p.n(), c.clone());
    match side {
        Side::Left => c.yau_mul(p, k),
        Side::Right => p.yau_mul(&c, k),
    }
}

/// Returns an element with the same x-degree as `p` but leading
/// coefficient 1, together with a certificate over the presentation `[p]`.
///
/// While the leading coefficient is nonconstant, `p` is replaced by
/// `alpha(p) - p`, which preserves the x-degree and strictly lowers the
/// degree of the leading coefficient; once the leading coefficient is a
/// scalar c, a final twisted product by 1/c normalizes it.
pub fn flatten_leading(
    p: &WeylElement,
    k: &TwistParameter,
    side: Side,
) -> Result<(WeylElement, Certificate), AlgorithmError> {
    check_twist(p, k)?;
    if p.is_zero() {
        return Err(AlgorithmError::ZeroInput);
    }
    if !k.some_nonzero() {
        return Err(AlgorithmError::AllKZero);
    }
    let target_deg = p.degrees().expect("nonzero").deg_x;
    let mut cur = p.clone();
    let mut cert = Certificate::gen(0);
    loop {
        let degs = cur.degrees().expect("stays nonzero");
        debug_assert_eq!(degs.deg_x, target_deg);
        if let Some(c) = degs.leading.constant_value() {
            if !c.is_one() {
                let inv = c.recip();
                cur = sided_scalar_star(&inv, &cur, k, side)?;
                cert = Certificate::star(WeylElement::constant(p.n(), inv), cert);
            }
            return Ok((cur, cert));
        }
        // a fixed nonconstant leading coefficient would cancel the whole
        // leading slot and drop deg_x
        let offsets: Vec<Rational> = k.components().to_vec();
        if degs.leading.shift(&offsets) == degs.leading {
            return Err(AlgorithmError::Stalled(format!(
                "leading coefficient {} at deg_x {} is fixed by the twist",
                crate::print::print_y_polynomial(&degs.leading),
                degs.deg_x,
            )));
        }
        cur = cur.alpha_pow(k, 1)?.sub(&cur)?;
        cert = Certificate::alpha_minus_id(&cert);
    }
}

/// Iterates `cur - alpha(cur)` until every coefficient is a scalar,
/// threading the certificate along. Errors with `Stalled` if a step
/// annihilates the element while it still has nonconstant coefficients.
fn difference_to_constant(
    start: &WeylElement,
    start_cert: &Certificate,
    k: &TwistParameter,
) -> Result<(WeylElement, Certificate), AlgorithmError> {
    let mut cur = start.clone();
    let mut cert = start_cert.clone();
    while !cur.has_constant_coefficients() {
        let next = cur.sub(&cur.alpha_pow(k, 1)?)?;
        if next.is_zero() {
            return Err(AlgorithmError::Stalled(format!(
                "difference step annihilated {}, which is fixed by the twist \
                 but has nonconstant coefficients",
                cur
            )));
        }
        cur = next;
        cert = Certificate::id_minus_alpha(&cert);
    }
    Ok((cur, cert))
}

/// Scales a nonzero constant-coefficient element so its leading scalar is
/// 1, returning the monic element and the removed factor.
fn monic_part(p: &WeylElement) -> Result<(WeylElement, Rational), AlgorithmError> {
    let degs = p.degrees().ok_or(AlgorithmError::ZeroInput)?;
    let c = degs
        .leading
        .constant_value()
        .ok_or_else(|| AlgorithmError::Internal("monic_part on nonconstant coefficients".into()))?;
    Ok((p.scale(&c.recip()), c))
}

/// Replaces the single generator `p` by finitely many generators whose
/// coefficients are all scalars, generating the same one-sided ideal.
/// Requires every twist component nonzero.
///
/// Each round extracts one constant-coefficient generator by difference
/// steps, then cancels one slot of the remainder against it, strictly
/// shrinking the support.
pub fn constant_generators(
    p: &WeylElement,
    k: &TwistParameter,
    side: Side,
) -> Result<CertifiedGenerators, AlgorithmError> {
    check_twist(p, k)?;
    if p.is_zero() {
        return Err(AlgorithmError::ZeroInput);
    }
    require_all_nonzero(k)?;

    let mut generators: Vec<WeylElement> = Vec::new();
    let mut new_in_old: Vec<Certificate> = Vec::new();
    // summands of p over the new generators, one per round
    let mut decomposition: Vec<Certificate> = Vec::new();

    let mut remainder = p.clone();
    let mut remainder_cert = Certificate::gen(0);
    while !remainder.is_zero() {
        let index = generators.len();
        if remainder.has_constant_coefficients() {
            let (q, c) = monic_part(&remainder)?;
            new_in_old.push(Certificate::scale_or_id(c.recip(), remainder_cert));
            decomposition.push(Certificate::scale_or_id(c, Certificate::gen(index)));
            generators.push(q);
            break;
        }
        let (extracted, extracted_cert) = difference_to_constant(&remainder, &remainder_cert, k)?;
        let (q, c) = monic_part(&extracted)?;
        let q_cert = Certificate::scale_or_id(c.recip(), extracted_cert);
        new_in_old.push(q_cert.clone());
        generators.push(q.clone());

        // cancel the graded-lex smallest slot of q against the remainder
        let q_slots = sided_slots(&q, side);
        let rem_slots = sided_slots(&remainder, side);
        let (slot, coeff) = q_slots.iter().next().expect("q is nonzero");
        let coeff = coeff.constant_value().expect("q has constant coefficients");
        let rem_poly = rem_slots.get(slot).ok_or_else(|| {
            AlgorithmError::Internal("extracted support escaped the remainder".into())
        })?;
        let ratio = rem_poly.scale(&coeff.recip());
        let multiple = sided_poly_mul(&ratio, &q, side)?;
        remainder = remainder.sub(&multiple)?;

        // ratio * q = alphainv(ratio) (star) q since alpha fixes q
        let ratio_star = WeylElement::from_y_poly(&ratio).alpha_pow(k, -1)?;
        remainder_cert = Certificate::add(
            remainder_cert,
            Certificate::scale(
                -Rational::one(),
                Certificate::star(ratio_star.clone(), q_cert),
            ),
        );
        decomposition.push(Certificate::star(ratio_star, Certificate::gen(index)));
    }

    let old_in_new = decomposition
        .into_iter()
        .reduce(Certificate::add)
        .expect("at least one round");
    Ok(CertifiedGenerators {
        new_generators: generators,
        new_in_old,
        old_in_new: vec![old_in_new],
    })
}

/// Validated, normalized input to the principal-generator construction:
/// monic distinct constant-coefficient generators, plus for each original
/// generator its position in the normalized list and the removed scalar
/// (`None` for original zeros, which are dropped).
struct NormalizedGenerators {
    monic: Vec<WeylElement>,
    origins: Vec<Option<(usize, Rational)>>,
}

fn normalize_generators(gens: &[WeylElement]) -> Result<NormalizedGenerators, AlgorithmError> {
    let mut monic: Vec<WeylElement> = Vec::new();
    let mut origins = Vec::with_capacity(gens.len());
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            origins.push(None);
            continue;
        }
        if !g.has_constant_coefficients() {
            return Err(AlgorithmError::NonConstantGenerator { index: i });
        }
        let (q, c) = monic_part(g)?;
        let pos = match monic.iter().position(|m| *m == q) {
            Some(pos) => pos,
            None => {
                monic.push(q);
                monic.len() - 1
            }
        };
        origins.push(Some((pos, c)));
    }
    if monic.is_empty() {
        return Err(AlgorithmError::EmptyInput);
    }
    Ok(NormalizedGenerators { monic, origins })
}

/// `y_pivot^e * q` for left ideals, `q * y_pivot^e` for right ideals.
fn pivot_power_times(
    q: &WeylElement,
    pivot: usize,
    e: u32,
    side: Side,
) -> Result<WeylElement, WeylError> {
    let power = WeylElement::y_power(q.n(), pivot, e);
    match side {
        Side::Left => power.mul(q),
        Side::Right => q.mul(&power),
    }
}

/// Recovers `q_i` and certificates over `[t]` from the packed generator,
/// peeling off the highest pivot power at each stage.
fn recover_generators(
    t: &WeylElement,
    monic: &[WeylElement],
    k: &TwistParameter,
    pivot: usize,
    side: Side,
) -> Result<Vec<Certificate>, AlgorithmError> {
    let n = t.n();
    let m = monic.len();
    let mut certs: Vec<Option<Certificate>> = vec![None; m];
    let mut t_cur = t.clone();
    let mut cert_cur = Certificate::gen(0);
    for i in (1..m).rev() {
        let mut d = t_cur.clone();
        let mut d_cert = cert_cur.clone();
        for _ in 0..i {
            d = d.alpha_pow(k, 1)?.sub(&d)?;
            d_cert = Certificate::alpha_minus_id(&d_cert);
        }
        // after i differences only the top summand survives, scaled by i! k^i
        let mut scalar = factorial_rational(i as u32);
        for _ in 0..i {
            scalar *= k.component(pivot);
        }
        if d != monic[i].scale(&scalar) {
            return Err(AlgorithmError::Internal(format!(
                "difference chain did not isolate generator {i}"
            )));
        }
        let q_cert = Certificate::scale_or_id(scalar.recip(), d_cert);
        certs[i] = Some(q_cert.clone());

        let multiple = pivot_power_times(&monic[i], pivot, i as u32, side)?;
        t_cur = t_cur.sub(&multiple)?;
        let power_pulled = WeylElement::y_power(n, pivot, i as u32).alpha_pow(k, -1)?;
        cert_cur = Certificate::add(
            cert_cur,
            Certificate::scale(-Rational::one(), Certificate::star(power_pulled, q_cert)),
        );
    }
    if t_cur != monic[0] {
        return Err(AlgorithmError::Internal(
            "difference chain residue is not the first generator".into(),
        ));
    }
    certs[0] = Some(cert_cur);
    Ok(certs.into_iter().map(Option::unwrap).collect())
}

/// Packs constant-coefficient generators into a single principal
/// generator, certifying each input over `[t]` (via the difference chain)
/// and `t` over the inputs. Duplicate and zero inputs are dropped after
/// scaling each generator monic; the remaining order is preserved.
pub fn principal_from_constant(
    gens: &[WeylElement],
    k: &TwistParameter,
    side: Side,
) -> Result<(WeylElement, DifferenceChain, CertifiedGenerators), AlgorithmError> {
    let first = gens.first().ok_or(AlgorithmError::EmptyInput)?;
    let n = first.n();
    for g in gens {
        if g.n() != n {
            return Err(WeylError::DimensionMismatch {
                expected: n,
                found: g.n(),
            }
            .into());
        }
    }
    if k.n() != n {
        return Err(WeylError::DimensionMismatch {
            expected: n,
            found: k.n(),
        }
        .into());
    }
    let pivot = k.pivot().ok_or(AlgorithmError::AllKZero)?;
    let normalized = normalize_generators(gens)?;
    let monic = &normalized.monic;
    let m = monic.len();

    let mut t = WeylElement::zero(n);
    for (i, q) in monic.iter().enumerate() {
        t = t.add(&pivot_power_times(q, pivot, i as u32, side)?)?;
    }

    let mut steps = vec![t.clone()];
    for _ in 1..m {
        let prev = steps.last().unwrap();
        steps.push(prev.alpha_pow(k, 1)?.sub(prev)?);
    }

    let monic_certs = recover_generators(&t, monic, k, pivot, side)?;

    let old_in_new = normalized
        .origins
        .iter()
        .map(|origin| match origin {
            Some((pos, c)) => Certificate::scale_or_id(c.clone(), monic_certs[*pos].clone()),
            None => Certificate::scale(Rational::zero(), Certificate::gen(0)),
        })
        .collect();

    // t = sum_i y_pivot^i q_i with q_i = (1/c) * (original generator)
    let mut summands = vec![None; m];
    for (orig, origin) in normalized.origins.iter().enumerate() {
        if let Some((pos, c)) = origin {
            if summands[*pos].is_none() {
                let power = WeylElement::y_power(n, pivot, *pos as u32).alpha_pow(k, -1)?;
                summands[*pos] = Some(Certificate::scale_or_id(
                    c.recip(),
                    Certificate::star(power, Certificate::gen(orig)),
                ));
            }
        }
    }
    let new_in_old = summands
        .into_iter()
        .map(|s| s.expect("every monic generator has an origin"))
        .reduce(Certificate::add)
        .expect("at least one generator");

    let chain = DifferenceChain {
        steps,
        extracted: monic.clone(),
    };
    let result = CertifiedGenerators {
        new_generators: vec![t.clone()],
        new_in_old: vec![new_in_old],
        old_in_new,
    };
    Ok((t, chain, result))
}

/// Full pipeline: constant generators for both inputs, a canonical merge
/// (monic, deduplicated, sorted graded-lex ascending by x-degree), then
/// the principal construction. Certifies `p` and `q` over `[t]` and `t`
/// over `[p, q]` by certificate composition. Requires every twist
/// component nonzero.
pub fn principal_from_two(
    p: &WeylElement,
    q: &WeylElement,
    k: &TwistParameter,
    side: Side,
) -> Result<(WeylElement, CertifiedGenerators), AlgorithmError> {
    check_twist(p, k)?;
    check_twist(q, k)?;
    if p.n() != q.n() {
        return Err(WeylError::DimensionMismatch {
            expected: p.n(),
            found: q.n(),
        }
        .into());
    }
    if p.is_zero() || q.is_zero() {
        return Err(AlgorithmError::ZeroInput);
    }
    require_all_nonzero(k)?;

    let cg_p = constant_generators(p, k, side)?;
    let cg_q = constant_generators(q, k, side)?;

    // collect (generator, certificate over [p, q])
    let mut combined: Vec<(WeylElement, Certificate)> = Vec::new();
    for (g, c) in cg_p.new_generators.iter().zip(&cg_p.new_in_old) {
        combined.push((g.clone(), c.clone()));
    }
    for (g, c) in cg_q.new_generators.iter().zip(&cg_q.new_in_old) {
        let over_pq = c.substitute_generators(&[Certificate::gen(1)])?;
        combined.push((g.clone(), over_pq));
    }
    combined.sort_by(|(a, _), (b, _)| {
        let da = a.degrees().expect("nonzero").deg_x;
        let db = b.degrees().expect("nonzero").deg_x;
        da.cmp(&db).then_with(|| a.cmp(b))
    });
    combined.dedup_by(|(a, _), (b, _)| a == b);

    let merged_gens: Vec<WeylElement> = combined.iter().map(|(g, _)| g.clone()).collect();
    let merged_certs: Vec<Certificate> = combined.into_iter().map(|(_, c)| c).collect();

    let (t, _chain, cg_t) = principal_from_constant(&merged_gens, k, side)?;

    let t_over_pq = cg_t.new_in_old[0].substitute_generators(&merged_certs)?;

    let position_of = |g: &WeylElement| -> Result<usize, AlgorithmError> {
        merged_gens
            .iter()
            .position(|m| m == g)
            .ok_or_else(|| AlgorithmError::Internal("merged generator lookup failed".into()))
    };
    let mut p_parts = Vec::with_capacity(cg_p.new_generators.len());
    for g in &cg_p.new_generators {
        p_parts.push(cg_t.old_in_new[position_of(g)?].clone());
    }
    let p_over_t = cg_p.old_in_new[0].substitute_generators(&p_parts)?;

    let mut q_parts = Vec::with_capacity(cg_q.new_generators.len());
    for g in &cg_q.new_generators {
        q_parts.push(cg_t.old_in_new[position_of(g)?].clone());
    }
    let q_over_t = cg_q.old_in_new[0].substitute_generators(&q_parts)?;

    let result = CertifiedGenerators {
        new_generators: vec![t.clone()],
        new_in_old: vec![t_over_pq],
        old_in_new: vec![p_over_t, q_over_t],
    };
    Ok((t, result))
}

/// Pulls generators of an untwisted-ideal presentation back through the
/// twist: a two-generator ideal of the plain algebra is generated in the
/// twisted algebra by the inverse-twist images of its generators.
pub fn hom_generators_from_assoc(
    gens: &[WeylElement],
    k: &TwistParameter,
) -> Result<Vec<WeylElement>, AlgorithmError> {
    require_all_nonzero(k)?;
    gens.iter()
        .map(|g| {
            check_twist(g, k)?;
            Ok(g.alpha_pow(k, -1)?)
        })
        .collect()
}

/// Checks alpha(p x^a) == alpha(p) x^a: the twist fixes pure x-monomials,
/// which is why monomial-generated ideals are twist-invariant.
pub fn alpha_invariance_witness(
    p: &WeylElement,
    a: &MultiIndex,
    k: &TwistParameter,
) -> Result<IdentityReport, WeylError> {
    let xa = WeylElement::x_monomial(p.n(), a.clone());
    let lhs = p.mul(&xa)?.alpha_pow(k, 1)?;
    let rhs = p.alpha_pow(k, 1)?.mul(&xa)?;
    IdentityReport::compare(lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cert::{verify_membership, IdealPresentation};
    use crate::parse::parse;
    use crate::rational::{int, ratio};

    fn k1(v: i64) -> TwistParameter {
        TwistParameter::new(vec![int(v)])
    }

    fn pres(side: Side, k: &TwistParameter, gens: &[WeylElement]) -> IdealPresentation {
        IdealPresentation::new(side, k.n(), k.clone(), gens.to_vec()).unwrap()
    }

    fn assert_two_way(
        cg: &CertifiedGenerators,
        old_gens: &[WeylElement],
        k: &TwistParameter,
        side: Side,
    ) {
        let old_pres = pres(side, k, old_gens);
        let new_pres = pres(side, k, &cg.new_generators);
        for (g, c) in cg.new_generators.iter().zip(&cg.new_in_old) {
            assert!(
                verify_membership(c, &old_pres, g).unwrap(),
                "new generator {g} fails over the old presentation"
            );
        }
        for (g, c) in old_gens.iter().zip(&cg.old_in_new) {
            assert!(
                verify_membership(c, &new_pres, g).unwrap(),
                "old generator {g} fails over the new presentation"
            );
        }
    }

    #[test]
    fn flatten_difference_step() {
        // p = yx + 1, k = 1: alpha(p) - p = x
        let p = parse("y1*x1 + 1", 1).unwrap();
        let (flat, cert) = flatten_leading(&p, &k1(1), Side::Left).unwrap();
        assert_eq!(flat, parse("x1", 1).unwrap());
        assert_eq!(cert, Certificate::alpha_minus_id(&Certificate::gen(0)));
        assert!(verify_membership(&cert, &pres(Side::Left, &k1(1), &[p]), &flat).unwrap());
    }

    #[test]
    fn flatten_constant_leading_scales() {
        // p = 3x^2: alpha fixes x^2, so p' = x^2 for any usable twist
        let p = parse("3*x1^2", 1).unwrap();
        for k in [k1(1), k1(-4)] {
            let (flat, cert) = flatten_leading(&p, &k, Side::Left).unwrap();
            assert_eq!(flat, parse("x1^2", 1).unwrap());
            let presentation = pres(Side::Left, &k, std::slice::from_ref(&p));
            assert!(verify_membership(&cert, &presentation, &flat).unwrap());
        }
    }

    #[test]
    fn flatten_pure_y() {
        // p = y, k = 1: one difference step reaches the constant 1
        let p = parse("y1", 1).unwrap();
        let (flat, cert) = flatten_leading(&p, &k1(1), Side::Left).unwrap();
        assert_eq!(flat, WeylElement::one(1));
        assert!(verify_membership(&cert, &pres(Side::Left, &k1(1), &[p]), &flat).unwrap());
    }

    #[test]
    fn flatten_preserves_deg_x_and_monic_leading() {
        let k = k1(1);
        for s in ["y1^2*x1^3 + y1*x1 + 5", "7*y1*x1 - y1^3", "2*y1^2 + y1"] {
            let p = parse(s, 1).unwrap();
            let (flat, cert) = flatten_leading(&p, &k, Side::Left).unwrap();
            let d_in = p.degrees().unwrap();
            let d_out = flat.degrees().unwrap();
            assert_eq!(d_in.deg_x, d_out.deg_x);
            assert_eq!(d_out.leading.constant_value(), Some(int(1)));
            assert!(verify_membership(&cert, &pres(Side::Left, &k, &[p]), &flat).unwrap());
        }
    }

    #[test]
    fn flatten_stalls_on_fixed_coefficient() {
        // (y1 + y2) x1 with k = (1, -1): the twist fixes y1 + y2
        let p = parse("(y1 + y2)*x1", 2).unwrap();
        let k = TwistParameter::new(vec![int(1), int(-1)]);
        assert!(matches!(
            flatten_leading(&p, &k, Side::Left),
            Err(AlgorithmError::Stalled(_))
        ));
    }

    #[test]
    fn flatten_input_errors() {
        assert!(matches!(
            flatten_leading(&WeylElement::zero(1), &k1(1), Side::Left),
            Err(AlgorithmError::ZeroInput)
        ));
        assert!(matches!(
            flatten_leading(&parse("y1", 1).unwrap(), &k1(0), Side::Left),
            Err(AlgorithmError::AllKZero)
        ));
    }

    #[test]
    fn constant_generators_single_slot() {
        // p = yx, k = 1 -> [x], with the worked certificates
        let p = parse("y1*x1", 1).unwrap();
        let cg = constant_generators(&p, &k1(1), Side::Left).unwrap();
        assert_eq!(cg.new_generators, vec![parse("x1", 1).unwrap()]);
        assert_eq!(
            cg.new_in_old[0],
            Certificate::scale(int(-1), Certificate::id_minus_alpha(&Certificate::gen(0)))
        );
        let y_minus_1 = parse("y1 - 1", 1).unwrap();
        assert_eq!(
            cg.old_in_new[0],
            Certificate::star(y_minus_1, Certificate::gen(0))
        );
        assert_two_way(&cg, &[p], &k1(1), Side::Left);
    }

    #[test]
    fn constant_generators_two_slots() {
        // p = x^2 + y, k = 1 -> [1, x^2]
        let p = parse("x1^2 + y1", 1).unwrap();
        let cg = constant_generators(&p, &k1(1), Side::Left).unwrap();
        assert_eq!(
            cg.new_generators,
            vec![WeylElement::one(1), parse("x1^2", 1).unwrap()]
        );
        assert_two_way(&cg, &[p], &k1(1), Side::Left);
    }

    #[test]
    fn constant_generators_already_constant() {
        let p = parse("x1^3", 1).unwrap();
        let cg = constant_generators(&p, &k1(1), Side::Left).unwrap();
        assert_eq!(cg.new_generators, vec![p.clone()]);
        assert_eq!(cg.new_in_old, vec![Certificate::gen(0)]);
        assert_eq!(cg.old_in_new, vec![Certificate::gen(0)]);
    }

    #[test]
    fn constant_generators_right_side() {
        let k = k1(1);
        for s in ["y1*x1", "x1^2 + y1", "x1*y1 + y1^2", "y1^2*x1 + x1 + 3"] {
            let p = parse(s, 1).unwrap();
            let cg = constant_generators(&p, &k, Side::Right).unwrap();
            for g in &cg.new_generators {
                assert!(g.has_constant_coefficients());
            }
            assert_two_way(&cg, &[p], &k, Side::Right);
        }
    }

    #[test]
    fn constant_generators_errors() {
        assert!(matches!(
            constant_generators(&WeylElement::zero(1), &k1(1), Side::Left),
            Err(AlgorithmError::ZeroInput)
        ));
        let k = TwistParameter::new(vec![int(1), int(0)]);
        assert!(matches!(
            constant_generators(&parse("y1", 2).unwrap(), &k, Side::Left),
            Err(AlgorithmError::KComponentZero { index: 1 })
        ));
        let stall = parse("(y1 + y2)*x1", 2).unwrap();
        let k = TwistParameter::new(vec![int(1), int(-1)]);
        assert!(matches!(
            constant_generators(&stall, &k, Side::Left),
            Err(AlgorithmError::Stalled(_))
        ));
    }

    #[test]
    fn principal_two_generators() {
        // gens [x^2, x], k = 1: t = x^2 + yx, chain recovers both
        let gens = vec![parse("x1^2", 1).unwrap(), parse("x1", 1).unwrap()];
        let (t, chain, cg) = principal_from_constant(&gens, &k1(1), Side::Left).unwrap();
        assert_eq!(t, parse("x1^2 + y1*x1", 1).unwrap());
        // alpha(t) - t = x recovers the second generator
        assert_eq!(chain.steps.len(), 2);
        assert_eq!(chain.steps[1], parse("x1", 1).unwrap());
        // t - (y - 1) * x = x^2 recovers the first
        let k = k1(1);
        let star = parse("y1 - 1", 1)
            .unwrap()
            .yau_mul(&parse("x1", 1).unwrap(), &k)
            .unwrap();
        assert_eq!(t.sub(&star).unwrap(), parse("x1^2", 1).unwrap());
        assert_two_way(&cg, &gens, &k, Side::Left);
    }

    #[test]
    fn principal_single_generator() {
        let gens = vec![parse("x1 + 2", 1).unwrap()];
        let (t, chain, cg) = principal_from_constant(&gens, &k1(1), Side::Left).unwrap();
        assert_eq!(t, gens[0]);
        assert_eq!(chain.steps, vec![t.clone()]);
        assert_two_way(&cg, &gens, &k1(1), Side::Left);
    }

    #[test]
    fn principal_three_generators_chain() {
        // gens [1, x, x^2], k = 1: t = 1 + yx + y^2 x^2,
        // t1 = x + (2y + 1) x^2, t2 = 2 x^2
        let gens = vec![
            WeylElement::one(1),
            parse("x1", 1).unwrap(),
            parse("x1^2", 1).unwrap(),
        ];
        let (t, chain, cg) = principal_from_constant(&gens, &k1(1), Side::Left).unwrap();
        assert_eq!(t, parse("1 + y1*x1 + y1^2*x1^2", 1).unwrap());
        assert_eq!(chain.steps.len(), 3);
        assert_eq!(chain.steps[1], parse("x1 + (2*y1 + 1)*x1^2", 1).unwrap());
        assert_eq!(chain.steps[2], parse("2*x1^2", 1).unwrap());
        for w in chain.steps.windows(2) {
            assert_eq!(w[1], w[0].alpha_pow(&k1(1), 1).unwrap().sub(&w[0]).unwrap());
        }
        assert_two_way(&cg, &gens, &k1(1), Side::Left);
    }

    #[test]
    fn principal_dedupes() {
        let x = parse("x1", 1).unwrap();
        let gens = vec![x.clone(), x.scale(&ratio(3, 2)), x.clone()];
        let (t, _, cg) = principal_from_constant(&gens, &k1(1), Side::Left).unwrap();
        assert_eq!(t, x);
        assert_two_way(&cg, &gens, &k1(1), Side::Left);
    }

    #[test]
    fn principal_drops_zero_generators() {
        // a zero input generator is dropped; its certificate over [t]
        // still evaluates to zero
        let x = parse("x1", 1).unwrap();
        let gens = vec![x.clone(), WeylElement::zero(1)];
        let (t, _, cg) = principal_from_constant(&gens, &k1(1), Side::Left).unwrap();
        assert_eq!(t, x);
        let new_pres = pres(Side::Left, &k1(1), &[t]);
        assert!(cg.old_in_new[1].evaluate(&new_pres).unwrap().is_zero());
    }

    #[test]
    fn principal_right_side() {
        let gens = vec![parse("x1^2", 1).unwrap(), parse("x1", 1).unwrap()];
        let (t, _, cg) = principal_from_constant(&gens, &k1(1), Side::Right).unwrap();
        assert_eq!(t, parse("x1^2 + x1*y1", 1).unwrap());
        assert_two_way(&cg, &gens, &k1(1), Side::Right);
    }

    #[test]
    fn principal_errors() {
        assert!(matches!(
            principal_from_constant(&[], &k1(1), Side::Left),
            Err(AlgorithmError::EmptyInput)
        ));
        assert!(matches!(
            principal_from_constant(&[parse("y1", 1).unwrap()], &k1(1), Side::Left),
            Err(AlgorithmError::NonConstantGenerator { index: 0 })
        ));
        assert!(matches!(
            principal_from_constant(&[parse("x1", 1).unwrap()], &k1(0), Side::Left),
            Err(AlgorithmError::AllKZero)
        ));
        assert!(matches!(
            principal_from_constant(&[WeylElement::zero(1)], &k1(1), Side::Left),
            Err(AlgorithmError::EmptyInput)
        ));
    }

    #[test]
    fn pivot_is_first_nonzero_component() {
        let k = TwistParameter::new(vec![int(0), int(2)]);
        let gens = vec![parse("x1", 2).unwrap(), parse("x2", 2).unwrap()];
        let (t, _, cg) = principal_from_constant(&gens, &k, Side::Left).unwrap();
        assert_eq!(t, parse("x1 + y2*x2", 2).unwrap());
        assert_two_way(&cg, &gens, &k, Side::Left);
    }

    #[test]
    fn two_to_one_passthrough() {
        let p = parse("x1", 1).unwrap();
        let q = parse("x1^2", 1).unwrap();
        let (t, cg) = principal_from_two(&p, &q, &k1(1), Side::Left).unwrap();
        assert_eq!(t, parse("x1 + y1*x1^2", 1).unwrap());
        assert_two_way(&cg, &[p, q], &k1(1), Side::Left);
    }

    #[test]
    fn two_to_one_duplicates() {
        let p = parse("x1", 1).unwrap();
        let (t, cg) = principal_from_two(&p, &p, &k1(1), Side::Left).unwrap();
        assert_eq!(t, p);
        assert_two_way(&cg, &[p.clone(), p], &k1(1), Side::Left);
    }

    #[test]
    fn two_to_one_full_pipeline() {
        // p = yx, q = x^2 + y, k = 1: constant generators {x} and {1, x^2},
        // merged and sorted to [1, x, x^2]
        let p = parse("y1*x1", 1).unwrap();
        let q = parse("x1^2 + y1", 1).unwrap();
        let (t, cg) = principal_from_two(&p, &q, &k1(1), Side::Left).unwrap();
        assert_eq!(t, parse("1 + y1*x1 + y1^2*x1^2", 1).unwrap());
        assert_two_way(&cg, &[p, q], &k1(1), Side::Left);
    }

    #[test]
    fn two_to_one_n2() {
        let k = TwistParameter::new(vec![int(1), int(1)]);
        let p = parse("y1*x1", 2).unwrap();
        let q = parse("x2^2 + y2", 2).unwrap();
        let (t, cg) = principal_from_two(&p, &q, &k, Side::Left).unwrap();
        assert_eq!(t, parse("1 + y1*x1 + y1^2*x2^2", 2).unwrap());
        assert_two_way(&cg, &[p, q], &k, Side::Left);
    }

    #[test]
    fn two_to_one_propagates_stall() {
        // the coefficient y1 - y2 is fixed by the twist (1, 1)
        let k = TwistParameter::new(vec![int(1), int(1)]);
        let p = parse("y1*x1 + y2", 2).unwrap();
        let q = parse("x1", 2).unwrap();
        assert!(matches!(
            principal_from_two(&p, &q, &k, Side::Left),
            Err(AlgorithmError::Stalled(_))
        ));
    }

    #[test]
    fn two_to_one_errors() {
        let x = parse("x1", 1).unwrap();
        assert!(matches!(
            principal_from_two(&x, &WeylElement::zero(1), &k1(1), Side::Left),
            Err(AlgorithmError::ZeroInput)
        ));
        assert!(matches!(
            principal_from_two(&x, &x, &k1(0), Side::Left),
            Err(AlgorithmError::KComponentZero { index: 0 })
        ));
    }

    #[test]
    fn hom_generator_transform() {
        let k = k1(1);
        assert_eq!(
            hom_generators_from_assoc(&[parse("y1", 1).unwrap()], &k).unwrap(),
            vec![parse("y1 - 1", 1).unwrap()]
        );
        assert_eq!(
            hom_generators_from_assoc(&[parse("x1", 1).unwrap()], &k).unwrap(),
            vec![parse("x1", 1).unwrap()]
        );
        assert!(matches!(
            hom_generators_from_assoc(&[parse("x1", 1).unwrap()], &k1(0)),
            Err(AlgorithmError::KComponentZero { index: 0 })
        ));
    }

    #[test]
    fn hom_generator_identity() {
        // a p + b q = alphainv(a) * alphainv(p) + alphainv(b) * alphainv(q)
        let k = k1(1);
        let (a, b) = (parse("x1", 1).unwrap(), parse("y1", 1).unwrap());
        let (p, q) = (parse("y1", 1).unwrap(), parse("x1", 1).unwrap());
        let direct = a.mul(&p).unwrap().add(&b.mul(&q).unwrap()).unwrap();
        let ai = a.alpha_pow(&k, -1).unwrap();
        let bi = b.alpha_pow(&k, -1).unwrap();
        let pi = p.alpha_pow(&k, -1).unwrap();
        let qi = q.alpha_pow(&k, -1).unwrap();
        let twisted = ai
            .yau_mul(&pi, &k)
            .unwrap()
            .add(&bi.yau_mul(&qi, &k).unwrap())
            .unwrap();
        assert_eq!(direct, twisted);
        // and both equal xy + yx = 2yx + 1
        assert_eq!(direct, parse("2*y1*x1 + 1", 1).unwrap());
    }

    #[test]
    fn monomial_ideal_invariance() {
        let k = k1(1);
        let r = alpha_invariance_witness(&parse("y1", 1).unwrap(), &MultiIndex::new(vec![2]), &k)
            .unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, parse("(y1 + 1)*x1^2", 1).unwrap());

        let r =
            alpha_invariance_witness(&WeylElement::one(1), &MultiIndex::new(vec![3]), &k).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, parse("x1^3", 1).unwrap());

        let k2 = TwistParameter::new(vec![int(2), int(-1)]);
        let r = alpha_invariance_witness(
            &parse("y1^2", 2).unwrap(),
            &MultiIndex::new(vec![1, 0]),
            &k2,
        )
        .unwrap();
        assert!(r.holds);
    }
}
