//! Sparse exact multivariate polynomials in canonical form.
//!
//! A polynomial is a list of (coefficient, monomial) pairs, strictly
//! decreasing in the ring's monomial order, with no zero coefficients. Two
//! polynomials are equal iff their canonical term lists agree.

use crate::error::{Error, Result};
use crate::field::{Coeff, Field};
use crate::monomial::Monomial;
use crate::ring::PolyRing;
use crate::rng::SplitMix64;
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Coeff, Monomial)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(c, Monomial::one(ring.nvars))],
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, ring.field.one())
    }

    pub fn variable(ring: &Arc<PolyRing>, index: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(ring.field.one(), Monomial::var(ring.nvars, index))],
        }
    }

    pub fn term(ring: &Arc<PolyRing>, c: Coeff, m: Monomial) -> Self {
        assert_eq!(m.nvars(), ring.nvars);
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(c, m)],
        }
    }

    /// Canonicalizes an arbitrary term list: sorts descending, merges equal
    /// monomials, drops zeros.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<(Coeff, Monomial)>) -> Self {
        let order = ring.order;
        terms.sort_unstable_by(|a, b| order.cmp(&b.1, &a.1));
        let mut out: Vec<(Coeff, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            if let Some(last) = out.last_mut() {
                if last.1 == m {
                    last.0 = ring.field.add(&last.0, &c);
                    if last.0.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            if !c.is_zero() {
                out.push((c, m));
            }
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Wraps a term list that is already canonical (strictly decreasing
    /// monomials, nonzero coefficients). Debug builds verify the invariant.
    pub fn from_sorted_terms(ring: &Arc<PolyRing>, terms: Vec<(Coeff, Monomial)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| {
            ring.order.cmp(&w[0].1, &w[1].1) == Ordering::Greater
        }));
        debug_assert!(terms.iter().all(|(c, _)| !c.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Coeff, Monomial)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|(c, _)| c)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(_, m)| m)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    /// The zero polynomial counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((_, m0)) => {
                let d = m0.degree();
                self.terms.iter().all(|(_, m)| m.degree() == d)
            }
        }
    }

    pub fn check_same_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring.same(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "{} vs {}",
                self.ring, other.ring
            )))
        }
    }

    pub fn neg(&self) -> Polynomial {
        let f = &self.ring.field;
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(c, m)| (f.neg(c), m.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        Ok(self.merged(other, false))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        Ok(self.merged(other, true))
    }

    /// Linear merge of two canonical term lists.
    fn merged(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let f = &self.ring.field;
        let order = self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ca, ma) = &self.terms[i];
            let (cb, mb) = &other.terms[j];
            match order.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ca.clone(), ma.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_other { f.neg(cb) } else { cb.clone() };
                    out.push((c, mb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        f.sub(ca, cb)
                    } else {
                        f.add(ca, cb)
                    };
                    if !c.is_zero() {
                        out.push((c, ma.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for (cb, mb) in &other.terms[j..] {
            let c = if negate_other { f.neg(cb) } else { cb.clone() };
            out.push((c, mb.clone()));
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// Multiplies by a single term. Monomial multiplication preserves the
    /// term order, so the result is already canonical.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Result<Polynomial> {
        if c.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let f = &self.ring.field;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (ca, ma) in &self.terms {
            terms.push((f.mul(ca, c), ma.try_mul(m)?));
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let f = &self.ring.field;
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(ca, m)| (f.mul(ca, c), m.clone()))
                .collect(),
        }
    }

    /// `self - c * m * g`, the workhorse of polynomial reduction.
    pub fn sub_scaled(&self, c: &Coeff, m: &Monomial, g: &Polynomial) -> Result<Polynomial> {
        Ok(self.merged(&g.mul_term(c, m)?, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let f = &self.ring.field;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ca, ma) in &self.terms {
            for (cb, mb) in &other.terms {
                terms.push((f.mul(ca, cb), ma.try_mul(mb)?));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(result)
    }

    pub fn make_monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = self
                    .ring
                    .field
                    .inv(lc)
                    .expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Over Q, rescales to integer coefficients with content one (the sign
    /// of the leading coefficient is preserved); identity over GF(p). Basis
    /// computations use this to stop rational coefficient swell.
    pub fn primitive_part(&self) -> Polynomial {
        match self.ring.field {
            Field::Prime(_) => self.clone(),
            Field::Rationals => {
                use num_integer::Integer;
                use num_traits::{One, Zero};
                let mut den_lcm = num_bigint::BigInt::one();
                let mut num_gcd = num_bigint::BigInt::zero();
                for (c, _) in &self.terms {
                    if let Coeff::Rat(q) = c {
                        den_lcm = den_lcm.lcm(q.denom());
                        num_gcd = num_gcd.gcd(q.numer());
                    }
                }
                if num_gcd.is_zero() || (num_gcd.is_one() && den_lcm.is_one()) {
                    return self.clone();
                }
                let scale = num_rational::BigRational::new(den_lcm, num_gcd);
                self.scale(&Coeff::Rat(Box::new(scale)))
            }
        }
    }

    /// Exact quotient `self / divisor` when the division is exact in the
    /// polynomial ring; `None` otherwise.
    pub fn try_div_exact(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        self.check_same_ring(divisor)?;
        if divisor.is_zero() {
            return Ok(None);
        }
        let field = &self.ring.field;
        let dlc = divisor.leading_coeff().unwrap();
        let dlm = divisor.leading_monomial().unwrap();
        let mut rem = self.clone();
        let mut quotient: Vec<(Coeff, Monomial)> = Vec::new();
        while let (Some(rc), Some(rm)) = (rem.leading_coeff(), rem.leading_monomial()) {
            if !dlm.divides(rm) {
                return Ok(None);
            }
            let qc = field.div(rc, dlc)?;
            let qm = rm.div(dlm);
            rem = rem.sub_scaled(&qc, &qm, divisor)?;
            quotient.push((qc, qm));
        }
        Ok(Some(Polynomial::from_terms(&self.ring, quotient)))
    }

    /// Evaluates `self` at `images`, one per variable, all in a common target
    /// ring. For homogeneous inputs the images must be homogeneous of a
    /// common degree (graded substitution).
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars {
            return Err(Error::ArityMismatch {
                expected: self.ring.nvars,
                got: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.ring().clone(),
            None => unreachable!("rings have at least one variable"),
        };
        for img in images {
            if !img.ring().same(&target) {
                return Err(Error::RingMismatch(
                    "substitution images must share one ring".into(),
                ));
            }
            if img.ring().field != self.ring.field {
                return Err(Error::RingMismatch(
                    "substitution cannot change the coefficient field".into(),
                ));
            }
        }
        if self.is_homogeneous() && !self.is_zero() {
            let mut common: Option<u32> = None;
            for img in images {
                if img.is_zero() {
                    continue;
                }
                if !img.is_homogeneous() {
                    return Err(Error::domain(
                        "graded substitution needs homogeneous images",
                    ));
                }
                let d = img.degree().unwrap();
                match common {
                    None => common = Some(d),
                    Some(e) if e == d => {}
                    Some(e) => {
                        return Err(Error::domain(format!(
                            "graded substitution needs images of a common degree ({e} vs {d})"
                        )))
                    }
                }
            }
        }

        // Per-variable power cache.
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|img| vec![Polynomial::one(&target), img.clone()])
            .collect();
        let power = |var: usize, e: usize, powers: &mut Vec<Vec<Polynomial>>| -> Result<Polynomial> {
            while powers[var].len() <= e {
                let next = powers[var].last().unwrap().try_mul(&images[var])?;
                powers[var].push(next);
            }
            Ok(powers[var][e].clone())
        };

        let mut acc = Polynomial::zero(&target);
        for (c, m) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for v in 0..self.ring.nvars {
                let e = m.exponent(v) as usize;
                if e > 0 {
                    t = t.try_mul(&power(v, e, &mut powers)?)?;
                }
            }
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }

    /// d/dv for one variable, with the usual char-p rule.
    pub fn partial_derivative(&self, var: usize) -> Polynomial {
        assert!(var < self.ring.nvars);
        let f = &self.ring.field;
        let mut terms = Vec::new();
        for (c, m) in &self.terms {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            let coeff = f.mul(c, &f.from_i64(e as i64));
            if coeff.is_zero() {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] -= 1;
            terms.push((coeff, Monomial::from_exps(&exps)));
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    /// All partials, in variable order.
    pub fn partial_derivatives(&self) -> Vec<Polynomial> {
        (0..self.ring.nvars)
            .map(|v| self.partial_derivative(v))
            .collect()
    }

    /// Re-interprets the polynomial in a ring with the same field and
    /// variables but a different monomial order.
    pub fn with_ring(&self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        if ring.field != self.ring.field
            || ring.nvars != self.ring.nvars
            || ring.var_names != self.ring.var_names
        {
            return Err(Error::RingMismatch(
                "with_ring only changes the monomial order".into(),
            ));
        }
        Ok(Polynomial::from_terms(ring, self.terms.clone()))
    }

    /// Reduces a rational polynomial mod p, or lifts residues into Q.
    pub fn map_to_field(&self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        if ring.nvars != self.ring.nvars || ring.var_names != self.ring.var_names {
            return Err(Error::RingMismatch(
                "map_to_field preserves the variables".into(),
            ));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (c, m) in &self.terms {
            let c2 = match (c, ring.field) {
                (Coeff::Rat(q), Field::Prime(_)) => ring.field.from_big_rational(q)?,
                (Coeff::Fp(r), Field::Rationals) => ring.field.from_i64(*r as i64),
                (Coeff::Rat(q), Field::Rationals) => Coeff::Rat(q.clone()),
                (Coeff::Fp(r), Field::Prime(_)) => ring.field.from_i64(*r as i64),
            };
            terms.push((c2, m.clone()));
        }
        Ok(Polynomial::from_terms(ring, terms))
    }
}

/// `count` homogeneous degree-1 polynomials with PRNG coefficients;
/// fully determined by (ring, count, seed).
pub fn random_linear_forms(
    ring: &Arc<PolyRing>,
    count: usize,
    seed: u64,
) -> Vec<Polynomial> {
    let mut rng = SplitMix64::new(seed);
    let mut forms = Vec::with_capacity(count);
    for _ in 0..count {
        let mut terms = Vec::with_capacity(ring.nvars);
        for v in 0..ring.nvars {
            let c = match ring.field {
                Field::Prime(p) => ring.field.from_i64(rng.below(p as u64) as i64),
                // Small integers keep rational Groebner runs tractable.
                Field::Rationals => ring.field.from_i64(rng.below(100) as i64),
            };
            if !c.is_zero() {
                terms.push((c, Monomial::var(ring.nvars, v)));
            }
        }
        forms.push(Polynomial::from_terms(ring, terms));
    }
    forms
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = &self.ring.field;
        for (i, (c, m)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { field.neg(c) } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                let mut first = true;
                for v in 0..self.ring.nvars {
                    let e = m.exponent(v);
                    if e == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    write!(f, "{}", self.ring.var_names[v])?;
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
