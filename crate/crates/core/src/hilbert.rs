//! Hilbert polynomials of graded quotients, computed from the lead-term
//! ideal of a grevlex basis by the standard monomial-ideal pivot recursion,
//! plus the degree sieve for minimal homogeneous generators.

use crate::error::Result;
use crate::groebner::{groebner_basis_with, Budget};
use crate::ideal::Ideal;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;

/// Univariate polynomial in t with rational coefficients, stored in
/// ascending powers. Agrees with the Hilbert function of the quotient ring
/// for all t past the regularity bound.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HilbertPolynomial {
    coeffs: Vec<BigRational>,
}

impl HilbertPolynomial {
    fn normalized(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        HilbertPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        HilbertPolynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Degree in t, i.e. the projective dimension of the scheme; `None` for
    /// the zero polynomial (empty scheme).
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn eval(&self, t: i64) -> BigRational {
        let t = BigRational::from(BigInt::from(t));
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &t + c;
        }
        acc
    }

    /// (dimension, degree) of the projective scheme: deg = (dim)! times the
    /// leading coefficient.
    pub fn projective_degree(&self) -> Option<(usize, BigInt)> {
        let dim = self.degree()?;
        let mut fact = BigInt::one();
        for i in 1..=dim {
            fact *= BigInt::from(i);
        }
        let lead = self.coeffs.last().unwrap() * BigRational::from(fact);
        debug_assert!(lead.denom().is_one());
        Some((dim, lead.to_integer()))
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag_str = if mag.denom().is_one() {
                mag.numer().to_string()
            } else {
                format!("{}/{}", mag.numer(), mag.denom())
            };
            if e == 0 {
                write!(f, "{mag_str}")?;
            } else {
                if mag_str != "1" {
                    write!(f, "{mag_str}*")?;
                }
                write!(f, "t")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn poly_mul_i128(a: &[i128], b: &[i128]) -> Vec<i128> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(a: &mut Vec<i128>, b: &[i128], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (j, y) in b.iter().enumerate() {
        a[j + shift] += y;
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|k| k.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn memo_key(gens: &[Monomial]) -> Vec<Vec<u16>> {
    let mut key: Vec<Vec<u16>> = gens.iter().map(|m| m.exponents().to_vec()).collect();
    key.sort();
    key
}

/// Numerator of the Hilbert series of S/I over the denominator (1-t)^nvars,
/// for a monomial ideal I. Pivots on the variable occurring in the most
/// minimal generators.
fn hilbert_numerator(
    gens: Vec<Monomial>,
    memo: &mut HashMap<Vec<Vec<u16>>, Vec<i128>>,
) -> Vec<i128> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return vec![0];
    }
    let pairwise_coprime = (0..gens.len()).all(|i| {
        (i + 1..gens.len()).all(|j| gens[i].is_coprime(&gens[j]))
    });
    if pairwise_coprime {
        let mut acc = vec![1i128];
        for m in &gens {
            let d = m.degree() as usize;
            let mut factor = vec![0i128; d + 1];
            factor[0] = 1;
            factor[d] = -1;
            acc = poly_mul_i128(&acc, &factor);
        }
        return acc;
    }

    let key = memo_key(&gens);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }

    let nvars = gens[0].nvars();
    let mut counts = vec![0usize; nvars];
    for m in &gens {
        for v in 0..nvars {
            if m.exponent(v) > 0 {
                counts[v] += 1;
            }
        }
    }
    let pivot = (0..nvars).max_by_key(|&v| counts[v]).unwrap();
    debug_assert!(counts[pivot] >= 2);

    // I + (x): the pivot variable joins, generators containing it drop out.
    let mut plus: Vec<Monomial> = gens
        .iter()
        .filter(|m| m.exponent(pivot) == 0)
        .cloned()
        .collect();
    plus.push(Monomial::var(nvars, pivot));
    // I : x divides the pivot out of each generator once.
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            if m.exponent(pivot) > 0 {
                let mut exps = m.exponents().to_vec();
                exps[pivot] -= 1;
                Monomial::from_exps(&exps)
            } else {
                m.clone()
            }
        })
        .collect();

    let mut acc = hilbert_numerator(plus, memo);
    let colon_num = hilbert_numerator(colon, memo);
    poly_add_shifted(&mut acc, &colon_num, 1);
    memo.insert(key, acc.clone());
    acc
}

/// Extended binomial polynomial C(t + shift, k) in t, as exact rationals.
fn binomial_poly(shift: i64, k: usize) -> Vec<BigRational> {
    // Product (t + shift - i) for i = 0..k, divided by k!.
    let mut acc = vec![BigRational::one()];
    for i in 0..k {
        let c = BigRational::from(BigInt::from(shift - i as i64));
        // multiply acc by (t + c)
        let mut next = vec![BigRational::zero(); acc.len() + 1];
        for (e, a) in acc.iter().enumerate() {
            next[e] = &next[e] + a * &c;
            next[e + 1] = &next[e + 1] + a;
        }
        acc = next;
    }
    let mut fact = BigInt::one();
    for i in 1..=k {
        fact *= BigInt::from(i);
    }
    let inv = BigRational::new(BigInt::one(), fact);
    acc.into_iter().map(|c| c * &inv).collect()
}

/// Hilbert polynomial of the quotient ring R/I for a graded ideal I.
pub fn hilbert_polynomial(ideal: &Ideal, budget: &Budget) -> Result<HilbertPolynomial> {
    ideal.require_graded()?;
    let nvars = ideal.ring().nvars;
    let lead_terms: Vec<Monomial> = if ideal.is_zero_ideal() {
        Vec::new()
    } else {
        let gb = groebner_basis_with(ideal, MonomialOrder::GrevLex, budget)?;
        gb.leading_monomials()
    };
    let mut memo = HashMap::new();
    let numer = hilbert_numerator(lead_terms, &mut memo);

    // HP(t) = sum_j a_j * C(t + nvars - 1 - j, nvars - 1).
    let k = nvars - 1;
    let mut coeffs = vec![BigRational::zero(); k + 1];
    for (j, a) in numer.iter().enumerate() {
        if *a == 0 {
            continue;
        }
        let a = BigRational::from(BigInt::from(*a));
        let term = binomial_poly(k as i64 - j as i64, k);
        for (e, c) in term.iter().enumerate() {
            coeffs[e] = &coeffs[e] + c * &a;
        }
    }
    Ok(HilbertPolynomial::normalized(coeffs))
}

/// True iff the graded ideal cuts out the empty projective scheme,
/// equivalently its saturation at the irrelevant ideal is (1).
pub fn is_projectively_empty(ideal: &Ideal, budget: &Budget) -> Result<bool> {
    Ok(hilbert_polynomial(ideal, budget)?.is_zero())
}

/// Degrees of a minimal homogeneous generating set, by the degree sieve: a
/// candidate of degree e is redundant iff it lies in the ideal generated by
/// everything kept so far (all kept generators have degree <= e).
pub fn minimal_generator_degrees(ideal: &Ideal, budget: &Budget) -> Result<Vec<u32>> {
    ideal.require_graded()?;
    let mut candidates: Vec<Polynomial> = ideal.generators().to_vec();
    candidates.sort_by_key(|g| g.degree().unwrap_or(0));
    let mut kept: Vec<Polynomial> = Vec::new();
    let mut degrees = Vec::new();
    for cand in candidates {
        let redundant = if kept.is_empty() {
            false
        } else {
            let sub = Ideal::new(ideal.ring(), kept.clone())?;
            let gb = groebner_basis_with(&sub, MonomialOrder::GrevLex, budget)?;
            gb.contains(&cand)?
        };
        if !redundant {
            degrees.push(cand.degree().unwrap());
            kept.push(cand);
        }
    }
    degrees.sort_unstable();
    Ok(degrees)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::parse_ideal_file;

    fn hp(text: &str) -> HilbertPolynomial {
        let ideal = parse_ideal_file(text).unwrap();
        hilbert_polynomial(&ideal, &Budget::default()).unwrap()
    }

    #[test]
    fn hyperplane_in_p3() {
        let h = hp("ring: q; vars: x0,x1,x2,x3; order: grevlex\nx0\n");
        // (t+1)(t+2)/2
        assert_eq!(h.to_string(), "1/2*t^2 + 3/2*t + 1");
        assert_eq!(h.eval(3), BigRational::from(BigInt::from(10)));
        assert_eq!(h.projective_degree().unwrap(), (2, BigInt::one()));
    }

    #[test]
    fn empty_scheme_in_p3() {
        let h = hp("ring: q; vars: x0,x1,x2,x3; order: grevlex\nx0\nx1\nx2\nx3\n");
        assert!(h.is_zero());
    }

    #[test]
    fn twisted_cubic_hp() {
        let h = hp(
            "ring: q; vars: x0,x1,x2,x3; order: grevlex\nx0*x2 - x1^2\nx0*x3 - x1*x2\nx1*x3 - x2^2\n",
        );
        assert_eq!(h.to_string(), "3*t + 1");
        assert_eq!(h.projective_degree().unwrap(), (1, BigInt::from(3)));
    }

    #[test]
    fn full_ring_hp() {
        let h = hp("ring: q; vars: x0,x1; order: grevlex\n");
        assert_eq!(h.to_string(), "t + 1");
    }

    /// Brute-force Hilbert function: monomials of degree t avoiding all lead
    /// terms of the ideal's grevlex basis.
    fn brute_force_hf(ideal: &Ideal, t: u32) -> u64 {
        let gb = groebner_basis_with(ideal, MonomialOrder::GrevLex, &Budget::default()).unwrap();
        let lms = gb.leading_monomials();
        let nvars = ideal.ring().nvars;
        let mut count = 0u64;
        let mut exps = vec![0u16; nvars];
        fn rec(
            exps: &mut Vec<u16>,
            pos: usize,
            left: u32,
            lms: &[Monomial],
            count: &mut u64,
        ) {
            if pos + 1 == exps.len() {
                exps[pos] = left as u16;
                let m = Monomial::from_exps(exps);
                if !lms.iter().any(|l| l.divides(&m)) {
                    *count += 1;
                }
                return;
            }
            for e in 0..=left {
                exps[pos] = e as u16;
                rec(exps, pos + 1, left - e, lms, count);
            }
        }
        rec(&mut exps, 0, t, &lms, &mut count);
        count
    }

    #[test]
    fn hp_matches_brute_force_counting() {
        let cases = [
            "ring: q; vars: x0,x1,x2,x3; order: grevlex\nx0*x2 - x1^2\nx0*x3 - x1*x2\nx1*x3 - x2^2\n",
            "ring: q; vars: x,y,z; order: grevlex\nx^2*y\ny^3\nz^2\n",
            "ring: gf:32003; vars: a,b,c,d,e; order: grevlex\na*b - c^2\nb*d - e^2\n",
            "ring: q; vars: x,y,z,w; order: grevlex\nx^3 + y^3 + z^3 + w^3\n",
        ];
        for text in cases {
            let ideal = parse_ideal_file(text).unwrap();
            let h = hilbert_polynomial(&ideal, &Budget::default()).unwrap();
            // Compare in a window past the regularity index.
            for t in 6..10u32 {
                assert_eq!(
                    h.eval(t as i64),
                    BigRational::from(BigInt::from(brute_force_hf(&ideal, t))),
                    "mismatch at t={t} for {text}"
                );
            }
        }
    }

    #[test]
    fn minimal_generators_twisted_cubic() {
        let ideal = parse_ideal_file(
            "ring: q; vars: x0,x1,x2,x3; order: grevlex\nx0*x2 - x1^2\nx0*x3 - x1*x2\nx1*x3 - x2^2\n",
        )
        .unwrap();
        assert_eq!(
            minimal_generator_degrees(&ideal, &Budget::default()).unwrap(),
            vec![2, 2, 2]
        );
    }

    #[test]
    fn minimal_generators_drop_redundant_power() {
        let ideal = parse_ideal_file("ring: q; vars: x0,x1; order: grevlex\nx0\nx0^2\n").unwrap();
        assert_eq!(
            minimal_generator_degrees(&ideal, &Budget::default()).unwrap(),
            vec![1]
        );
    }

    #[test]
    fn projectively_empty_examples() {
        let all_vars = parse_ideal_file("ring: q; vars: x0,x1,x2; order: grevlex\nx0\nx1\nx2\n")
            .unwrap();
        assert!(is_projectively_empty(&all_vars, &Budget::default()).unwrap());
        let hyper = parse_ideal_file("ring: q; vars: x0,x1,x2; order: grevlex\nx0\n").unwrap();
        assert!(!is_projectively_empty(&hyper, &Budget::default()).unwrap());
    }

    #[test]
    fn fermat_cubic_is_smooth() {
        // Jacobian ideal of x0^3 + ... + x5^3 over GF(32003) is irrelevant.
        let ideal = parse_ideal_file(
            "ring: gf:32003; vars: x0,x1,x2,x3,x4,x5; order: grevlex\nx0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3\n",
        )
        .unwrap();
        let f = &ideal.generators()[0];
        let jac = crate::ideal::jacobian_ideal(f).unwrap();
        assert!(is_projectively_empty(&jac, &Budget::default()).unwrap());
    }
}
