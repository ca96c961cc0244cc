//! Reference multiplication by one-swap rewriting.
//!
//! Elements are expanded into words over the generator alphabet and the
//! single relation x_i y_i -> y_i x_i + 1 (plus the commuting swaps) is
//! applied until every word is normal-ordered. Deliberately naive: this is
//! the independent oracle the closed-form product is validated against, so
//! it shares no code with [`WeylElement::mul`].

use crate::error::WeylError;
use crate::monomial::MultiIndex;
use crate::rational::Rational;
use crate::WeylElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Letter {
    X(usize),
    Y(usize),
}

/// True when the adjacent pair (a, b) is correctly ordered in a normal word:
/// all y's (ascending position) before all x's (ascending position).
fn ordered(a: Letter, b: Letter) -> bool {
    match (a, b) {
        (Letter::Y(i), Letter::Y(j)) => i <= j,
        (Letter::Y(_), Letter::X(_)) => true,
        (Letter::X(_), Letter::Y(_)) => false,
        (Letter::X(i), Letter::X(j)) => i <= j,
    }
}

/// Expands a normal-form element into coefficient-word pairs.
fn words_of(p: &WeylElement) -> Vec<(Rational, Vec<Letter>)> {
    let mut out = Vec::new();
    for (l, poly) in p.terms() {
        for (gamma, c) in poly.terms() {
            let mut word = Vec::new();
            for (i, &e) in gamma.entries().iter().enumerate() {
                for _ in 0..e {
                    word.push(Letter::Y(i));
                }
            }
            for (i, &e) in l.entries().iter().enumerate() {
                for _ in 0..e {
                    word.push(Letter::X(i));
                }
            }
            out.push((c.clone(), word));
        }
    }
    out
}

fn word_to_element(n: usize, coeff: Rational, word: &[Letter]) -> WeylElement {
    let mut x_exp = vec![0u32; n];
    let mut y_exp = vec![0u32; n];
    for &letter in word {
        match letter {
            Letter::X(i) => x_exp[i] += 1,
            Letter::Y(i) => y_exp[i] += 1,
        }
    }
    WeylElement::monomial(n, MultiIndex::new(x_exp), MultiIndex::new(y_exp), coeff)
}

/// Multiplies by concatenating words and rewriting to normal order.
/// Agrees with [`WeylElement::mul`]; used by tests and kept out of every
/// production code path.
pub fn mul_rewrite_oracle(a: &WeylElement, b: &WeylElement) -> Result<WeylElement, WeylError> {
    if a.n() != b.n() {
        return Err(WeylError::DimensionMismatch {
            expected: a.n(),
            found: b.n(),
        });
    }
    let n = a.n();
    let mut queue: Vec<(Rational, Vec<Letter>)> = Vec::new();
    for (ca, wa) in words_of(a) {
        for (cb, wb) in words_of(b) {
            let mut word = wa.clone();
            word.extend_from_slice(&wb);
            queue.push((&ca * &cb, word));
        }
    }
    let mut result = WeylElement::zero(n);
    'words: while let Some((coeff, word)) = queue.pop() {
        for p in 0..word.len().saturating_sub(1) {
            let (left, right) = (word[p], word[p + 1]);
            if ordered(left, right) {
                continue;
            }
            match (left, right) {
                (Letter::X(i), Letter::Y(j)) if i == j => {
                    // x_i y_i = y_i x_i + 1: branch into swap and deletion
                    let mut swapped = word.clone();
                    swapped.swap(p, p + 1);
                    let mut dropped = word.clone();
                    dropped.drain(p..=p + 1);
                    queue.push((coeff.clone(), swapped));
                    queue.push((coeff, dropped));
                }
                _ => {
                    // commuting pair, plain swap
                    let mut swapped = word;
                    swapped.swap(p, p + 1);
                    queue.push((coeff, swapped));
                }
            }
            continue 'words;
        }
        result = result.add(&word_to_element(n, coeff, &word))?;
    }
    Ok(result)
}
