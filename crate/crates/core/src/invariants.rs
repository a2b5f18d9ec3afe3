//! Closed-form numeric calculators for sheaf invariants on hypersurfaces:
//! graded Betti numbers of Steiner resolutions (with the triangular-system
//! oracle they must match), Euler characteristic polynomials of linear and
//! Steiner sheaves, monad Betti numbers, representation sizes, invariants of
//! the curves attached to determinantal surfaces, slope identities, pfaffian
//! size bounds, and the Riemann-Roch arithmetic on surfaces.
//!
//! Everything is exact integer arithmetic (i128 internally); there is no
//! floating point anywhere.

use crate::error::{Error, Result};
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

/// Extended binomial coefficient C(a, k) for possibly negative a, by the
/// polynomial a(a-1)...(a-k+1)/k!. C(a, k) = 0 for k < 0.
pub fn binomial(a: i64, k: i64) -> Result<i64> {
    if k < 0 {
        return Ok(0);
    }
    let mut num: i128 = 1;
    for i in 0..k {
        num = num
            .checked_mul((a - i) as i128)
            .ok_or(Error::IntegerOverflow("binomial numerator"))?;
    }
    let mut fact: i128 = 1;
    for i in 1..=k {
        fact *= i as i128;
    }
    let q = num / fact;
    debug_assert_eq!(num % fact, 0);
    i64::try_from(q).map_err(|_| Error::IntegerOverflow("binomial"))
}

fn check_nonneg(name: &str, v: i64) -> Result<()> {
    if v < 0 {
        Err(Error::domain(format!("{name} must be non-negative, got {v}")))
    } else {
        Ok(())
    }
}

/// The finite cohomological data the closed-form formulas consume.
#[derive(Clone, Debug, Serialize)]
pub struct CohomologyProfile {
    /// Ambient dimension.
    pub n_ambient: i64,
    /// Support dimension, at most the ambient dimension.
    pub n_support: i64,
    pub h0: i64,
    /// Quantum number: h^{n-1}(F(-n h)) for Steiner sheaves; for instanton
    /// sheaves h^1(F(-H)) and h^{N-1}(F(-N H)) both equal it.
    pub q: i64,
    pub rank: BigRational,
    pub chi: Option<i64>,
    pub h1_minus1: Option<i64>,
    pub hn1_minusn: Option<i64>,
}

impl CohomologyProfile {
    pub fn validate(&self) -> Result<()> {
        if self.n_support < 1 || self.n_support > self.n_ambient {
            return Err(Error::domain(format!(
                "need 1 <= n <= N, got n = {}, N = {}",
                self.n_support, self.n_ambient
            )));
        }
        check_nonneg("h0", self.h0)?;
        check_nonneg("q", self.q)?;
        if self.rank < BigRational::zero() {
            return Err(Error::domain("rank must be non-negative"));
        }
        if let Some(h) = self.h1_minus1 {
            check_nonneg("h1_minus1", h)?;
        }
        if let Some(h) = self.hn1_minusn {
            check_nonneg("hn1_minusn", h)?;
        }
        Ok(())
    }
}

/// Graded Betti numbers of the minimal free resolution of a Steiner sheaf
/// on an n-dimensional subscheme of P^N:
/// m_t = h0 * C(N-n, t) + q * C(N-n, t-1) for 0 <= t <= N-n+1.
pub fn steiner_betti(n_ambient: i64, n_support: i64, h0: i64, q: i64) -> Result<Vec<i64>> {
    if n_support < 1 || n_support > n_ambient {
        return Err(Error::domain(format!(
            "need 1 <= n <= N, got n = {n_support}, N = {n_ambient}"
        )));
    }
    check_nonneg("h0", h0)?;
    check_nonneg("q", q)?;
    let g = n_ambient - n_support;
    let mut out = Vec::with_capacity((g + 2) as usize);
    for t in 0..=g + 1 {
        out.push(h0 * binomial(g, t)? + q * binomial(g, t - 1)?);
    }
    Ok(out)
}

/// Independent oracle for `steiner_betti`: forward substitution through the
/// lower-triangular square system
/// sum_{i=1}^t (-1)^i m_{t-i} C(N+i, N) + m_t
///   = (-1)^t h0 C(n+t, n) + (-1)^{t+1} q C(n+t-1, n).
pub fn system_steiner_oracle(
    n_ambient: i64,
    n_support: i64,
    h0: i64,
    q: i64,
) -> Result<Vec<i64>> {
    if n_support < 1 || n_support > n_ambient {
        return Err(Error::domain(format!(
            "need 1 <= n <= N, got n = {n_support}, N = {n_ambient}"
        )));
    }
    check_nonneg("h0", h0)?;
    check_nonneg("q", q)?;
    let (nn, n) = (n_ambient, n_support);
    let rows = (nn - n + 1) as usize + 1;
    let mut m = Vec::with_capacity(rows);
    for t in 0..rows as i64 {
        let sign_t = if t % 2 == 0 { 1 } else { -1 };
        let mut rhs = sign_t * h0 * binomial(n + t, n)? - sign_t * q * binomial(n + t - 1, n)?;
        for i in 1..=t {
            let sign_i = if i % 2 == 0 { 1 } else { -1 };
            rhs -= sign_i * m[(t - i) as usize] * binomial(nn + i, nn)?;
        }
        m.push(rhs);
    }
    Ok(m)
}

/// Euler characteristic of a twisted linear sheaf:
/// chi(F(tH)) = (chi_F + (N+1) h1) C(N+t, N) - h1 C(N+t+1, N) - hN1 C(N+t-1, N).
pub fn chi_linear(n_ambient: i64, chi_f: i64, h1: i64, hn1: i64, t: i64) -> Result<i64> {
    if n_ambient < 1 {
        return Err(Error::domain("ambient dimension must be at least 1"));
    }
    let n = n_ambient;
    Ok((chi_f + (n + 1) * h1) * binomial(n + t, n)?
        - h1 * binomial(n + t + 1, n)?
        - hn1 * binomial(n + t - 1, n)?)
}

/// Euler characteristic of a twisted Steiner sheaf:
/// chi(F(tH)) = h0 C(N+t, N) - q C(N+t-1, N).
pub fn chi_steiner(n_ambient: i64, h0: i64, q: i64, t: i64) -> Result<i64> {
    if n_ambient < 1 {
        return Err(Error::domain("ambient dimension must be at least 1"));
    }
    let n = n_ambient;
    Ok(h0 * binomial(n + t, n)? - q * binomial(n + t - 1, n)?)
}

/// Betti numbers (m', m, m'') of the linear monad presenting a linear sheaf:
/// m' = h^{N-1}(F(-N)), m'' = h^1(F(-1)), m = rank + m' + m''. When chi is
/// supplied the identity m = chi + (N+1) m'' is cross-checked.
pub fn monad_betti(
    n_ambient: i64,
    rank: i64,
    h1m1: i64,
    hn1mn: i64,
    chi: Option<i64>,
) -> Result<(i64, i64, i64)> {
    if n_ambient < 1 {
        return Err(Error::domain("ambient dimension must be at least 1"));
    }
    check_nonneg("rank", rank)?;
    check_nonneg("h1m1", h1m1)?;
    check_nonneg("hn1mn", hn1mn)?;
    let m = rank + h1m1 + hn1mn;
    if let Some(chi) = chi {
        let alt = chi + (n_ambient + 1) * h1m1;
        if alt != m {
            return Err(Error::domain(format!(
                "inconsistent (rank, chi): rank route gives m = {m}, chi route gives {alt}"
            )));
        }
    }
    Ok((hn1mn, m, h1m1))
}

/// Size of a Steiner representation: rk(E) * d + 2q.
pub fn representation_size(d: i64, rk_e: i64, q: i64) -> Result<i64> {
    if d < 1 {
        return Err(Error::domain("degree must be at least 1"));
    }
    if rk_e < 1 {
        return Err(Error::domain("sheaf rank must be at least 1"));
    }
    check_nonneg("q", q)?;
    Ok(rk_e * d + 2 * q)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CurveInvariants {
    pub degree: i64,
    pub p_a: i64,
    pub self_intersection: i64,
}

/// Invariants of the curve attached to a size d + 2q determinantal
/// representation of a smooth degree-d surface:
/// deg = d(d+2q-1)/2,
/// p_a = (d+2q) C(d+q-2, 2) - q C(d+q-1, 2) - q C(d+q-3, 2) - C(d-1, 3),
/// C^2 = d q^2 + q(d^2-d-2) + C(d, 3),
/// with the adjunction identity p_a = 1 + (C^2 + (d-4) deg)/2 checked.
pub fn curve_invariants(d: i64, q: i64) -> Result<CurveInvariants> {
    if d < 2 {
        return Err(Error::domain("surface degree must be at least 2"));
    }
    check_nonneg("q", q)?;
    let two_deg = d * (d + 2 * q - 1);
    if two_deg % 2 != 0 {
        return Err(Error::DegreeMismatch(format!(
            "d(d+2q-1) = {two_deg} is odd: no representation with these parameters"
        )));
    }
    let degree = two_deg / 2;
    let p_a = (d + 2 * q) * binomial(d + q - 2, 2)?
        - q * binomial(d + q - 1, 2)?
        - q * binomial(d + q - 3, 2)?
        - binomial(d - 1, 3)?;
    let self_intersection = d * q * q + q * (d * d - d - 2) + binomial(d, 3)?;
    let adjunction = 1 + (self_intersection + (d - 4) * degree) / 2;
    if (self_intersection + (d - 4) * degree) % 2 != 0 || adjunction != p_a {
        return Err(Error::domain(format!(
            "adjunction identity violated: p_a = {p_a} but 1 + (C^2 + (d-4)deg)/2 = {adjunction}"
        )));
    }
    Ok(CurveInvariants {
        degree,
        p_a,
        self_intersection,
    })
}

/// Slope identity for Steiner bundles:
/// c1(F) H^{N-1} = rank/2 ((N+1) H^N + K_P H^{N-1}) + q.
pub fn slope_identity(n_ambient: i64, rank: i64, hn: i64, khn1: i64, q: i64) -> Result<i64> {
    if n_ambient < 1 {
        return Err(Error::domain("ambient dimension must be at least 1"));
    }
    check_nonneg("rank", rank)?;
    check_nonneg("q", q)?;
    let bracket = (n_ambient + 1) * hn + khn1;
    if (rank * bracket) % 2 != 0 {
        return Err(Error::domain(format!(
            "parity violation: rank * ((N+1)H^N + K H^{{N-1}}) = {} is odd",
            rank * bracket
        )));
    }
    Ok(rank * bracket / 2 + q)
}

/// Upper bound for the even size of a Steiner pfaffian representation of a
/// smooth degree-d surface: 2d for d <= 4, (10d^3 - 39d^2 + 35d + 12)/3 for
/// d >= 5, together with the quantum number realizing it; the identity
/// r = 2d + 2q is checked.
pub fn pfaffian_size_bound(d: i64) -> Result<(i64, i64)> {
    if d < 2 {
        return Err(Error::domain("surface degree must be at least 2"));
    }
    if d <= 4 {
        return Ok((2 * d, 0));
    }
    let r_num = 10 * d * d * d - 39 * d * d + 35 * d + 12;
    let q_num = 10 * d * d * d - 39 * d * d + 29 * d + 12;
    if r_num % 3 != 0 || q_num % 6 != 0 {
        return Err(Error::domain(
            "non-integral pfaffian bound: transcription bug",
        ));
    }
    let r = r_num / 3;
    let q = q_num / 6;
    if r != 2 * d + 2 * q {
        return Err(Error::domain(format!(
            "internal identity r = 2d + 2q violated: r = {r}, 2d + 2q = {}",
            2 * d + 2 * q
        )));
    }
    Ok((r, q))
}

/// The Macaulay-style bound exponent ch(f) = ceil(C(d+3, 3) / (3d + 1)); the
/// matrix-size bound it controls is d^(ch(f) - 1).
pub fn macaulay_char_bound(d: i64) -> Result<i64> {
    if d < 1 {
        return Err(Error::domain("degree must be at least 1"));
    }
    let num = binomial(d + 3, 3)?;
    let den = 3 * d + 1;
    Ok((num + den - 1) / den)
}

/// Hirzebruch-Riemann-Roch on a smooth surface:
/// chi(A) = rank * chi(O) + (c1^2 - K c1)/2 - c2.
pub fn rr_surface_chi(rank: i64, chi_o: i64, c1_sq: i64, k_c1: i64, c2: i64) -> Result<i64> {
    if (c1_sq - k_c1) % 2 != 0 {
        return Err(Error::domain(format!(
            "parity violation: c1^2 - K c1 = {} is odd",
            c1_sq - k_c1
        )));
    }
    Ok(rank * chi_o + (c1_sq - k_c1) / 2 - c2)
}
