//! Matrices of homogeneous forms: exact determinants (fraction-free Bareiss
//! with a memoized cofactor cross-check), pfaffians of skew-symmetric
//! matrices, minors ideals, and degeneracy loci.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::parse::parse_poly;
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use crate::rng::SplitMix64;
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Arc<PolyRing>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
    degree_profile: Option<(Vec<i64>, Vec<i64>)>,
}

impl std::fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{}x{} matrix over {}", self.rows, self.cols, self.ring)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.entry(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join("; "))?;
        }
        Ok(())
    }
}

impl PolyMatrix {
    pub fn new(
        ring: &Arc<PolyRing>,
        rows: usize,
        cols: usize,
        entries: Vec<Polynomial>,
    ) -> Result<PolyMatrix> {
        if rows == 0 || cols == 0 {
            return Err(Error::domain("matrix dimensions must be positive"));
        }
        if entries.len() != rows * cols {
            return Err(Error::domain(format!(
                "expected {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            if !e.ring().same(ring) {
                return Err(Error::RingMismatch("matrix entry in a foreign ring".into()));
            }
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
            degree_profile: None,
        })
    }

    /// Attaches a degree profile certifying entry (i, j) is homogeneous of
    /// degree rdeg(i) + cdeg(j); every nonzero entry is checked.
    pub fn with_degree_profile(
        mut self,
        row_degrees: Vec<i64>,
        col_degrees: Vec<i64>,
    ) -> Result<PolyMatrix> {
        if row_degrees.len() != self.rows || col_degrees.len() != self.cols {
            return Err(Error::domain("degree profile dimensions mismatch"));
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.entry(i, j);
                if e.is_zero() {
                    continue;
                }
                let want = row_degrees[i] + col_degrees[j];
                if !e.is_homogeneous() || e.degree().map(|d| d as i64) != Some(want) {
                    return Err(Error::DegreeMismatch(format!(
                        "entry ({i},{j}) = {e} is not homogeneous of degree {want}"
                    )));
                }
            }
        }
        self.degree_profile = Some((row_degrees, col_degrees));
        Ok(self)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn degree_profile(&self) -> Option<&(Vec<i64>, Vec<i64>)> {
        self.degree_profile.as_ref()
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.entry(i, j).clone());
            }
        }
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
            degree_profile: None,
        }
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Checks skew-symmetry (M^T = -M with zero diagonal).
    pub fn require_skew_symmetric(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        for i in 0..self.rows {
            if !self.entry(i, i).is_zero() {
                return Err(Error::NotSkewSymmetric(format!(
                    "diagonal entry ({i},{i}) = {} is nonzero",
                    self.entry(i, i)
                )));
            }
            for j in i + 1..self.cols {
                if *self.entry(j, i) != self.entry(i, j).neg() {
                    return Err(Error::NotSkewSymmetric(format!(
                        "entries ({i},{j}) and ({j},{i}) are not opposite"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Degrees of nonzero entries, deduplicated and sorted.
    pub fn entry_degrees(&self) -> Vec<u32> {
        let mut degs: Vec<u32> = self
            .entries
            .iter()
            .filter_map(|e| e.degree())
            .collect();
        degs.sort_unstable();
        degs.dedup();
        degs
    }

    /// All entries homogeneous of degree one.
    pub fn has_linear_entries(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.is_zero() || (e.is_homogeneous() && e.degree() == Some(1)))
    }
}

/// Exact determinant by fraction-free Bareiss elimination with column
/// pivoting by row swaps. Division by the previous pivot is exact in the
/// polynomial ring.
pub fn determinant(m: &PolyMatrix) -> Result<Polynomial> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let ring = m.ring.clone();
    if n == 1 {
        return Ok(m.entries[0].clone());
    }
    let mut a: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| (0..n).map(|j| m.entry(i, j).clone()).collect())
        .collect();
    let mut sign_flip = false;
    let mut prev = Polynomial::one(&ring);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return Ok(Polynomial::zero(&ring)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k]
                    .try_mul(&a[i][j])?
                    .sub(&a[i][k].try_mul(&a[k][j])?)?;
                a[i][j] = match num.try_div_exact(&prev)? {
                    Some(q) => q,
                    None => {
                        return Err(Error::domain(
                            "Bareiss division was not exact (corrupt input?)",
                        ))
                    }
                };
            }
            a[i][k] = Polynomial::zero(&ring);
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if sign_flip { det.neg() } else { det })
}

/// Cofactor expansion with memoization over column subsets; used as an
/// independent oracle against Bareiss for small sizes.
pub fn determinant_cofactor(m: &PolyMatrix) -> Result<Polynomial> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n > 20 {
        return Err(Error::domain("cofactor determinant limited to size 20"));
    }
    let ring = m.ring.clone();
    let mut memo: HashMap<u32, Polynomial> = HashMap::new();

    fn rec(
        m: &PolyMatrix,
        ring: &Arc<PolyRing>,
        mask: u32,
        memo: &mut HashMap<u32, Polynomial>,
    ) -> Result<Polynomial> {
        if mask == 0 {
            return Ok(Polynomial::one(ring));
        }
        if let Some(hit) = memo.get(&mask) {
            return Ok(hit.clone());
        }
        let row = m.rows() - mask.count_ones() as usize;
        let mut acc = Polynomial::zero(ring);
        let mut sign = false;
        for j in 0..m.cols() {
            if mask & (1 << j) == 0 {
                continue;
            }
            let e = m.entry(row, j);
            if !e.is_zero() {
                let sub = rec(m, ring, mask & !(1 << j), memo)?;
                let term = e.try_mul(&sub)?;
                acc = if sign { acc.sub(&term)? } else { acc.add(&term)? };
            }
            sign = !sign;
        }
        memo.insert(mask, acc.clone());
        Ok(acc)
    }

    rec(m, &ring, (1u32 << n) - 1, &mut memo)
}

/// Pfaffian of a skew-symmetric matrix of even size, by expansion along the
/// first remaining row with subset memoization. Sign convention:
/// pf([[0, a], [-a, 0]]) = a, so pf = a12 a34 - a13 a24 + a14 a23 at size 4,
/// and pf(M)^2 = det(M).
pub fn pfaffian(m: &PolyMatrix) -> Result<Polynomial> {
    m.require_skew_symmetric()?;
    let n = m.rows;
    if n % 2 != 0 {
        return Err(Error::OddSize(n));
    }
    if n > 20 {
        return Err(Error::domain("pfaffian expansion limited to size 20"));
    }
    let ring = m.ring.clone();
    let mut memo: HashMap<u32, Polynomial> = HashMap::new();

    fn rec(
        m: &PolyMatrix,
        ring: &Arc<PolyRing>,
        mask: u32,
        memo: &mut HashMap<u32, Polynomial>,
    ) -> Result<Polynomial> {
        if mask == 0 {
            return Ok(Polynomial::one(ring));
        }
        if let Some(hit) = memo.get(&mask) {
            return Ok(hit.clone());
        }
        let first = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << first);
        let mut acc = Polynomial::zero(ring);
        let mut positive = true; // position k = 2 carries +1
        let mut j_mask = rest;
        while j_mask != 0 {
            let j = j_mask.trailing_zeros() as usize;
            j_mask &= j_mask - 1;
            let e = m.entry(first, j);
            if !e.is_zero() {
                let sub = rec(m, ring, rest & !(1 << j), memo)?;
                let term = e.try_mul(&sub)?;
                acc = if positive { acc.add(&term)? } else { acc.sub(&term)? };
            }
            positive = !positive;
        }
        memo.insert(mask, acc.clone());
        Ok(acc)
    }

    rec(m, &ring, (1u32 << n) - 1, &mut memo)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k == 0 || k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Ideal generated by all size x size minors of the matrix, expanded exactly.
pub fn minors_ideal(m: &PolyMatrix, size: usize) -> Result<Ideal> {
    if size == 0 || size > m.rows.min(m.cols) {
        return Err(Error::domain(format!(
            "minor size {size} out of range for a {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let mut gens = Vec::new();
    for rows in combinations(m.rows, size) {
        for cols in combinations(m.cols, size) {
            let entries: Vec<Polynomial> = rows
                .iter()
                .flat_map(|&i| cols.iter().map(move |&j| m.entry(i, j).clone()))
                .collect();
            let sub = PolyMatrix::new(&m.ring, size, size, entries)?;
            gens.push(determinant(&sub)?);
        }
    }
    Ideal::new(&m.ring, gens)
}

/// Ideal of the degeneracy locus D_r(M) = { rank <= r }, cut by (r+1)-minors.
pub fn degeneracy_locus_ideal(m: &PolyMatrix, r: usize) -> Result<Ideal> {
    if r >= m.rows.min(m.cols) {
        return Err(Error::domain(format!(
            "degeneracy rank {r} must be below min(rows, cols) = {}",
            m.rows.min(m.cols)
        )));
    }
    minors_ideal(m, r + 1)
}

/// Random matrix of linear forms, deterministic in the seed.
pub fn random_linear_matrix(
    ring: &Arc<PolyRing>,
    rows: usize,
    cols: usize,
    seed: u64,
) -> Result<PolyMatrix> {
    let mut rng = SplitMix64::new(seed);
    let mut entries = Vec::with_capacity(rows * cols);
    for _ in 0..rows * cols {
        entries.push(random_linear_form(ring, &mut rng));
    }
    PolyMatrix::new(ring, rows, cols, entries)
}

/// Random skew-symmetric matrix of linear forms.
pub fn random_skew_linear_matrix(
    ring: &Arc<PolyRing>,
    size: usize,
    seed: u64,
) -> Result<PolyMatrix> {
    let mut rng = SplitMix64::new(seed);
    let zero = Polynomial::zero(ring);
    let mut entries = vec![zero; size * size];
    for i in 0..size {
        for j in i + 1..size {
            let f = random_linear_form(ring, &mut rng);
            entries[i * size + j] = f.clone();
            entries[j * size + i] = f.neg();
        }
    }
    PolyMatrix::new(ring, size, size, entries)
}

fn random_linear_form(ring: &Arc<PolyRing>, rng: &mut SplitMix64) -> Polynomial {
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
    Polynomial::from_terms(ring, terms)
}

/// Random constant (degree-0) square matrix; used by congruence tests.
pub fn random_constant_matrix(
    ring: &Arc<PolyRing>,
    size: usize,
    seed: u64,
) -> Result<PolyMatrix> {
    let mut rng = SplitMix64::new(seed);
    let mut entries = Vec::with_capacity(size * size);
    for _ in 0..size * size {
        let c = match ring.field {
            Field::Prime(p) => ring.field.from_i64(rng.below(p as u64) as i64),
            Field::Rationals => ring.field.from_i64(rng.below(19) as i64 - 9),
        };
        entries.push(Polynomial::constant(ring, c));
    }
    PolyMatrix::new(ring, size, size, entries)
}

/// Matrix product (exact).
pub fn mat_mul(a: &PolyMatrix, b: &PolyMatrix) -> Result<PolyMatrix> {
    if a.cols != b.rows {
        return Err(Error::domain("inner matrix dimensions differ"));
    }
    if !a.ring.same(&b.ring) {
        return Err(Error::RingMismatch("matrix product needs one ring".into()));
    }
    let mut entries = Vec::with_capacity(a.rows * b.cols);
    for i in 0..a.rows {
        for j in 0..b.cols {
            let mut acc = Polynomial::zero(&a.ring);
            for k in 0..a.cols {
                acc = acc.add(&a.entry(i, k).try_mul(b.entry(k, j))?)?;
            }
            entries.push(acc);
        }
    }
    PolyMatrix::new(&a.ring, a.rows, b.cols, entries)
}

/// Parses the matrix file format: an optional `ring:` header (required when
/// no external ring is supplied), a `rows: r; cols: c` line, then r lines of
/// `;`-separated polynomial expressions.
pub fn parse_matrix_file(text: &str, ring: Option<&Arc<PolyRing>>) -> Result<PolyMatrix> {
    let mut lines = text
        .lines()
        .map(|l| match l.find('#') {
            Some(i) => &l[..i],
            None => l,
        })
        .map(str::trim)
        .filter(|l| !l.is_empty());

    let mut first = lines
        .next()
        .ok_or_else(|| Error::domain("empty matrix file"))?;
    let ring = if first.starts_with("ring:") {
        let parsed = crate::ideal::parse_ring_header(first)?;
        if let Some(external) = ring {
            if !external.same(&parsed) {
                return Err(Error::RingMismatch(
                    "matrix file ring differs from the expected ring".into(),
                ));
            }
        }
        first = lines
            .next()
            .ok_or_else(|| Error::domain("missing `rows:` line"))?;
        parsed
    } else {
        ring.cloned()
            .ok_or_else(|| Error::domain("matrix file has no ring header and none was supplied"))?
    };

    let mut rows = None;
    let mut cols = None;
    for part in first.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (key, value) = part
            .split_once(':')
            .ok_or_else(|| Error::domain(format!("bad size component `{part}`")))?;
        let value: usize = value
            .trim()
            .parse()
            .map_err(|_| Error::domain(format!("bad size value in `{part}`")))?;
        match key.trim() {
            "rows" => rows = Some(value),
            "cols" => cols = Some(value),
            other => return Err(Error::domain(format!("unknown size key `{other}`"))),
        }
    }
    let rows = rows.ok_or_else(|| Error::domain("missing `rows:`"))?;
    let cols = cols.ok_or_else(|| Error::domain("missing `cols:`"))?;

    let mut entries = Vec::with_capacity(rows * cols);
    for _ in 0..rows {
        let line = lines
            .next()
            .ok_or_else(|| Error::domain("missing matrix row"))?;
        let cells: Vec<&str> = line.split(';').map(str::trim).collect();
        if cells.len() != cols {
            return Err(Error::domain(format!(
                "expected {cols} entries per row, got {}",
                cells.len()
            )));
        }
        for cell in cells {
            entries.push(parse_poly(&ring, cell)?);
        }
    }
    if lines.next().is_some() {
        return Err(Error::domain("trailing content after matrix rows"));
    }
    PolyMatrix::new(&ring, rows, cols, entries)
}

pub fn format_matrix_file(m: &PolyMatrix) -> String {
    let mut out = String::new();
    out.push_str(&crate::ideal::format_ring_header(&m.ring));
    out.push('\n');
    out.push_str(&format!("rows: {}; cols: {}\n", m.rows, m.cols));
    for i in 0..m.rows {
        let row: Vec<String> = (0..m.cols).map(|j| m.entry(i, j).to_string()).collect();
        out.push_str(&row.join("; "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elim::saturate;
    use crate::groebner::{groebner_basis, Budget};
    use crate::monomial::MonomialOrder;

    fn mat(text: &str) -> PolyMatrix {
        parse_matrix_file(text, None).unwrap()
    }

    #[test]
    fn generic_two_by_two() {
        let m = mat("ring: q; vars: x0,x1,x2,x3; order: grevlex\nrows: 2; cols: 2\nx0; x1\nx2; x3\n");
        let expected = parse_poly(m.ring(), "x0*x3 - x1*x2").unwrap();
        assert_eq!(determinant(&m).unwrap(), expected);
    }

    #[test]
    fn scalar_diagonal_power() {
        let m = mat(
            "ring: q; vars: x0; order: grevlex\nrows: 4; cols: 4\nx0; 0; 0; 0\n0; x0; 0; 0\n0; 0; x0; 0\n0; 0; 0; x0\n",
        );
        assert_eq!(determinant(&m).unwrap().to_string(), "x0^4");
    }

    #[test]
    fn bareiss_matches_cofactor_on_random_matrices() {
        let field = Field::prime(32003).unwrap();
        let ring = PolyRing::numbered(field, "x", 4, MonomialOrder::GrevLex).unwrap();
        for seed in 0..3u64 {
            let m = random_linear_matrix(&ring, 6, 6, seed).unwrap();
            assert_eq!(
                determinant(&m).unwrap(),
                determinant_cofactor(&m).unwrap()
            );
        }
    }

    #[test]
    fn pfaffian_base_case_sign() {
        let m = mat("ring: q; vars: x0; order: grevlex\nrows: 2; cols: 2\n0; x0\n-x0; 0\n");
        assert_eq!(pfaffian(&m).unwrap().to_string(), "x0");
    }

    #[test]
    fn pfaffian_quadric_surface() {
        // a12=x0, a13=x1, a14=0, a23=0, a24=x2, a34=x3: pf = x0 x3 - x1 x2.
        let m = mat(
            "ring: q; vars: x0,x1,x2,x3; order: grevlex\nrows: 4; cols: 4\n0; x0; x1; 0\n-x0; 0; 0; x2\n-x1; 0; 0; x3\n0; -x2; -x3; 0\n",
        );
        let expected = parse_poly(m.ring(), "x0*x3 - x1*x2").unwrap();
        assert_eq!(pfaffian(&m).unwrap(), expected);
    }

    #[test]
    fn pfaffian_squared_is_determinant() {
        let field = Field::prime(32003).unwrap();
        let ring = PolyRing::numbered(field, "x", 4, MonomialOrder::GrevLex).unwrap();
        for size in [2usize, 4, 6, 8] {
            for seed in 0..3u64 {
                let m = random_skew_linear_matrix(&ring, size, 1000 * size as u64 + seed).unwrap();
                let pf = pfaffian(&m).unwrap();
                assert_eq!(pf.try_mul(&pf).unwrap(), determinant(&m).unwrap());
            }
        }
    }

    #[test]
    fn pfaffian_rejects_bad_input() {
        let m = mat("ring: q; vars: x0; order: grevlex\nrows: 2; cols: 2\n0; x0\nx0; 0\n");
        assert!(matches!(pfaffian(&m), Err(Error::NotSkewSymmetric(_))));
        let odd = mat(
            "ring: q; vars: x0; order: grevlex\nrows: 3; cols: 3\n0; x0; x0\n-x0; 0; x0\n-x0; -x0; 0\n",
        );
        assert!(matches!(pfaffian(&odd), Err(Error::OddSize(3))));
    }

    #[test]
    fn pfaffian_congruence_covariance() {
        // pf(P^T M P) = det(P) pf(M) for constant P.
        let field = Field::prime(32003).unwrap();
        let ring = PolyRing::numbered(field, "x", 3, MonomialOrder::GrevLex).unwrap();
        for seed in 0..3u64 {
            let m = random_skew_linear_matrix(&ring, 6, seed).unwrap();
            let p = random_constant_matrix(&ring, 6, 77 + seed).unwrap();
            let congruent = mat_mul(&mat_mul(&p.transpose(), &m).unwrap(), &p).unwrap();
            let lhs = pfaffian(&congruent).unwrap();
            let rhs = pfaffian(&m).unwrap().try_mul(&determinant(&p).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn det_multiplicativity_and_block_triangular() {
        let field = Field::prime(32003).unwrap();
        let ring = PolyRing::numbered(field, "x", 2, MonomialOrder::GrevLex).unwrap();
        for seed in 0..4u64 {
            let a = random_constant_matrix(&ring, 5, seed).unwrap();
            let b = random_constant_matrix(&ring, 5, seed + 100).unwrap();
            let ab = mat_mul(&a, &b).unwrap();
            assert_eq!(
                determinant(&ab).unwrap(),
                determinant(&a).unwrap().try_mul(&determinant(&b).unwrap()).unwrap()
            );
        }
        // Block triangular: det = product of diagonal blocks.
        let m = mat(
            "ring: q; vars: x0,x1; order: grevlex\nrows: 3; cols: 3\nx0; x1; 5\n0; x1; x0\n0; 0; x0\n",
        );
        assert_eq!(determinant(&m).unwrap().to_string(), "x0^2*x1");
    }

    #[test]
    fn minors_examples() {
        let m = mat("ring: q; vars: x0,x1,x2,x3; order: grevlex\nrows: 2; cols: 2\nx0; x1\nx2; x3\n");
        let i = minors_ideal(&m, 2).unwrap();
        assert_eq!(i.generators().len(), 1);
        let expected = parse_poly(m.ring(), "x0*x3 - x1*x2").unwrap();
        assert_eq!(i.generators()[0], expected);

        let tc = mat(
            "ring: q; vars: x0,x1,x2,x3; order: grevlex\nrows: 2; cols: 3\nx0; x1; x2\nx1; x2; x3\n",
        );
        let twisted = minors_ideal(&tc, 2).unwrap();
        assert_eq!(twisted.generators().len(), 3);
        assert!(twisted.generators().iter().all(|g| g.degree() == Some(2)));

        let zero_row = mat(
            "ring: q; vars: x0,x1; order: grevlex\nrows: 2; cols: 2\nx0; x1\n0; 0\n",
        );
        assert!(minors_ideal(&zero_row, 2).unwrap().is_zero_ideal());
    }

    #[test]
    fn degeneracy_loci() {
        let m = mat("ring: q; vars: x0,x1,x2,x3; order: grevlex\nrows: 2; cols: 2\nx0; x1\nx2; x3\n");
        let d1 = degeneracy_locus_ideal(&m, 1).unwrap();
        let expected = parse_poly(m.ring(), "x0*x3 - x1*x2").unwrap();
        assert_eq!(d1.generators()[0], expected);
        let d0 = degeneracy_locus_ideal(&m, 0).unwrap();
        assert_eq!(d0.generators().len(), 4);
    }

    #[test]
    fn skew_degeneracy_drops_to_pfaffian_locus() {
        // For the 4x4 skew quadric matrix, D_2 = D_3 as sets: the saturated
        // 3-minors ideal equals the pfaffian ideal.
        let m = mat(
            "ring: q; vars: x0,x1,x2,x3; order: grevlex\nrows: 4; cols: 4\n0; x0; x1; 0\n-x0; 0; 0; x2\n-x1; 0; 0; x3\n0; -x2; -x3; 0\n",
        );
        let d2 = degeneracy_locus_ideal(&m, 2).unwrap();
        let sat = saturate(&d2, &Ideal::irrelevant(m.ring()), &Budget::default()).unwrap();
        let gb = groebner_basis(&sat, MonomialOrder::GrevLex).unwrap();
        let pf = pfaffian(&m).unwrap().make_monic();
        let pf_gb = groebner_basis(
            &Ideal::new(m.ring(), vec![pf]).unwrap(),
            MonomialOrder::GrevLex,
        )
        .unwrap();
        let a: Vec<String> = gb.basis().iter().map(|g| g.to_string()).collect();
        let b: Vec<String> = pf_gb.basis().iter().map(|g| g.to_string()).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn matrix_file_roundtrip() {
        let m = mat(
            "# comment\nring: gf:32003; vars: x0,x1; order: grevlex\nrows: 2; cols: 2\nx0 + x1; x1\n0; 2*x0\n",
        );
        let text = format_matrix_file(&m);
        let back = parse_matrix_file(&text, None).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn degree_profile_validation() {
        let ring = PolyRing::numbered(Field::Rationals, "x", 2, MonomialOrder::GrevLex).unwrap();
        let lin = random_linear_matrix(&ring, 2, 2, 3).unwrap();
        assert!(lin
            .clone()
            .with_degree_profile(vec![0, 0], vec![1, 1])
            .is_ok());
        assert!(lin.with_degree_profile(vec![0, 0], vec![1, 2]).is_err());
    }
}
