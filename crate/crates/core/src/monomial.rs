//! Monomials with 16-bit exponents and the monomial orders used by the
//! Groebner engine: graded reverse lexicographic, lexicographic, and block
//! elimination orders.

use crate::error::{Error, Result};
use smallvec::SmallVec;
use std::cmp::Ordering;

/// Exponent vector with cached total degree. Exponents are 16-bit; additions
/// are checked and overflow is reported as an error.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: SmallVec<[u16; 16]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars);
        let mut exps = SmallVec::from_elem(0u16, nvars);
        exps[index] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial {
            exps: SmallVec::from_slice(exps),
            degree,
        }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(other.exps.iter()) {
            let e = a.checked_add(*b).ok_or_else(|| {
                Error::ExponentOverflow(format!("{} + {} exceeds 16 bits", a, b))
            })?;
            exps.push(e);
        }
        Ok(Monomial {
            exps,
            degree: self.degree + other.degree,
        })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.degree <= other.degree
            && self
                .exps
                .iter()
                .zip(other.exps.iter())
                .all(|(a, b)| a <= b)
    }

    /// Quotient `self / other`; caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        let exps: SmallVec<[u16; 16]> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a - b)
            .collect();
        Monomial {
            exps,
            degree: self.degree - other.degree,
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u16; 16]> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| *a.min(b))
            .collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u16; 16]> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| *a.max(b))
            .collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Extends the exponent vector with `extra` trailing zero exponents.
    pub fn extend_vars(&self, extra: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat(0).take(extra));
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    /// Extends with `extra` leading zero exponents.
    pub fn prepend_vars(&self, extra: usize) -> Monomial {
        let mut exps: SmallVec<[u16; 16]> = SmallVec::from_elem(0, extra);
        exps.extend_from_slice(&self.exps);
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    /// Restricts to the variables `range`, dropping the rest. The caller
    /// ensures the dropped exponents are zero when the result must represent
    /// the same monomial.
    pub fn project(&self, range: std::ops::Range<usize>) -> Monomial {
        Monomial::from_exps(&self.exps[range])
    }
}

/// A total order on monomials refining divisibility.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    /// Compares the first `k` exponents by grevlex, breaking ties by grevlex
    /// on the rest: an elimination order for the first `k` variables.
    BlockElimination(usize),
}

fn grevlex_cmp(a: &[u16], b: &[u16], deg_a: u32, deg_b: u32) -> Ordering {
    match deg_a.cmp(&deg_b) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // Equal degree: the larger monomial is the one whose last nonzero entry
    // of a - b is negative.
    for (x, y) in a.iter().zip(b.iter()).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

fn lex_cmp(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn block_degree(exps: &[u16]) -> u32 {
    exps.iter().map(|&e| e as u32).sum()
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match *self {
            MonomialOrder::GrevLex => grevlex_cmp(&a.exps, &b.exps, a.degree, b.degree),
            MonomialOrder::Lex => lex_cmp(&a.exps, &b.exps),
            MonomialOrder::BlockElimination(k) => {
                let (ah, at) = a.exps.split_at(k);
                let (bh, bt) = b.exps.split_at(k);
                match grevlex_cmp(ah, bh, block_degree(ah), block_degree(bh)) {
                    Ordering::Equal => {
                        grevlex_cmp(at, bt, block_degree(at), block_degree(bt))
                    }
                    ord => ord,
                }
            }
        }
    }

    /// File/CLI syntax: `grevlex`, `lex`, `elim:<k>`.
    pub fn parse(text: &str) -> Result<MonomialOrder> {
        let t = text.trim();
        match t {
            "grevlex" => Ok(MonomialOrder::GrevLex),
            "lex" => Ok(MonomialOrder::Lex),
            _ => {
                if let Some(k) = t.strip_prefix("elim:") {
                    let k: usize = k
                        .parse()
                        .map_err(|_| Error::domain(format!("bad elimination block `{k}`")))?;
                    Ok(MonomialOrder::BlockElimination(k))
                } else {
                    Err(Error::domain(format!(
                        "unknown order `{t}` (expected grevlex, lex, or elim:<k>)"
                    )))
                }
            }
        }
    }
}

impl std::fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MonomialOrder::GrevLex => write!(f, "grevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::BlockElimination(k) => write!(f, "elim:{k}"),
        }
    }
}
