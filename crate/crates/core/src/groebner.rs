//! Buchberger engine: reduced Groebner bases, normal forms, and the
//! S-polynomial certificate replay.
//!
//! Pair selection is the normal (degree) strategy with sugar tie-breaking;
//! the coprimality criterion is applied at pair creation and the chain
//! criterion at pair extraction. Budgets bound the number of processed pairs
//! and the total live term count, so runaway computations fail fast instead
//! of exhausting the machine.

use crate::error::{Error, Result};
use crate::field::{Coeff, Field};
use crate::ideal::Ideal;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashSet};
use std::sync::Arc;

/// Resource limits for a single basis computation.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_pair_reductions: u64,
    pub max_terms: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pair_reductions: 2_000_000,
            max_terms: 80_000_000,
        }
    }
}

#[derive(Clone)]
pub struct GroebnerBasis {
    ideal: Ideal,
    ring: Arc<PolyRing>,
    basis: Vec<Polynomial>,
}

impl GroebnerBasis {
    /// The reduced basis: monic, autoreduced, sorted by increasing leading
    /// monomial. Unique for a fixed (ideal, order).
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// The ring carrying the basis order (same variables and field as the
    /// ideal's ring).
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].degree() == Some(0)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|g| g.leading_monomial().expect("basis elements nonzero").clone())
            .collect()
    }

    /// Ideal membership: NF(f) = 0.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(normal_form(f, self)?.is_zero())
    }

    /// Replays the Buchberger certificate: every S-polynomial of basis pairs
    /// reduces to zero against the basis.
    pub fn verify_certificate(&self, budget: &Budget) -> Result<bool> {
        let mut steps = 0u64;
        for i in 0..self.basis.len() {
            for j in i + 1..self.basis.len() {
                let s = s_polynomial_scaled(&self.basis[i], &self.basis[j])?;
                let (nf, used) = reduce_full(&s, &self.basis, budget, ReduceMode::Scaled)?;
                steps += used.max(1);
                if steps > budget.max_pair_reductions {
                    return Err(Error::BudgetExceeded(format!(
                        "certificate replay exceeded {} reduction steps",
                        budget.max_pair_reductions
                    )));
                }
                if !nf.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// S-polynomial of two nonzero polynomials in a common ring.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.check_same_ring(g)?;
    let field = &f.ring().field;
    let (lcf, lmf) = (f.leading_coeff().unwrap(), f.leading_monomial().unwrap());
    let (lcg, lmg) = (g.leading_coeff().unwrap(), g.leading_monomial().unwrap());
    let lcm = lmf.lcm(lmg);
    let a = f.mul_term(&field.inv(lcf)?, &lcm.div(lmf))?;
    let b = g.mul_term(&field.inv(lcg)?, &lcm.div(lmg))?;
    a.sub(&b)
}

/// Scalar multiple of the S-polynomial avoiding coefficient inverses:
/// lc(g) (lcm/lm(f)) f - lc(f) (lcm/lm(g)) g, kept primitive over Q.
fn s_polynomial_scaled(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let (lcf, lmf) = (f.leading_coeff().unwrap(), f.leading_monomial().unwrap());
    let (lcg, lmg) = (g.leading_coeff().unwrap(), g.leading_monomial().unwrap());
    let lcm = lmf.lcm(lmg);
    let a = f.mul_term(lcg, &lcm.div(lmf))?;
    let b = g.mul_term(lcf, &lcm.div(lmg))?;
    Ok(a.sub(&b)?.primitive_part())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum ReduceMode {
    /// True multivariate division: f - NF(f) lies in the ideal.
    Exact,
    /// Pseudo-reduction returning a scalar multiple of the normal form;
    /// inverse-free, with content control over Q. Valid wherever the result
    /// is only needed up to a nonzero scalar (basis building, zero tests).
    Scaled,
}

/// Full reduction against `divisors`: no term of the result is divisible by
/// any divisor leading monomial. Returns the result and the step count.
fn reduce_full(
    f: &Polynomial,
    divisors: &[Polynomial],
    budget: &Budget,
    mode: ReduceMode,
) -> Result<(Polynomial, u64)> {
    let ring = f.ring().clone();
    let field = ring.field;
    let lms: Vec<(&Monomial, &Coeff)> = divisors
        .iter()
        .map(|g| {
            (
                g.leading_monomial().expect("nonzero divisor"),
                g.leading_coeff().expect("nonzero divisor"),
            )
        })
        .collect();

    // Terms before the returned index are already in normal form; every
    // reduction step only introduces monomials strictly below the term it
    // cancels, so the scanned prefix stays intact.
    fn first_reducible(
        terms: &[(Coeff, Monomial)],
        from: usize,
        lms: &[(&Monomial, &Coeff)],
    ) -> Option<(usize, usize)> {
        for (idx, (_, m)) in terms.iter().enumerate().skip(from) {
            for (g_idx, (lm, _)) in lms.iter().enumerate() {
                if lm.divides(m) {
                    return Some((idx, g_idx));
                }
            }
        }
        None
    }

    let mut steps = 0u64;
    let mut poly = f.clone();
    let mut done = 0usize;
    while let Some((idx, g_idx)) = first_reducible(poly.terms(), done, &lms) {
        steps += 1;
        if steps > budget.max_pair_reductions {
            return Err(Error::BudgetExceeded(format!(
                "reduction exceeded {} steps",
                budget.max_pair_reductions
            )));
        }
        done = idx;
        let (c, m) = &poly.terms()[idx];
        let (lm, lc) = lms[g_idx];
        let q = m.div(lm);
        let c = c.clone();
        poly = match mode {
            ReduceMode::Exact => {
                let factor = field.div(&c, lc)?;
                poly.sub_scaled(&factor, &q, &divisors[g_idx])?
            }
            ReduceMode::Scaled => poly
                .scale(lc)
                .sub_scaled(&c, &q, &divisors[g_idx])?
                .primitive_part(),
        };
        if poly.num_terms() as u64 > budget.max_terms {
            return Err(Error::BudgetExceeded(format!(
                "term count exceeded {}",
                budget.max_terms
            )));
        }
    }
    Ok((poly, steps))
}

/// Normal form of `f` against a reduced basis. The input may be given in the
/// ideal's original order; it is re-sorted into the basis order and the
/// result is returned in `f`'s own ring.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    if f.ring().field != gb.ring.field || f.ring().var_names != gb.ring.var_names {
        return Err(Error::RingMismatch(
            "normal form needs the basis ring's variables and field".into(),
        ));
    }
    let g = f.with_ring(&gb.ring)?;
    let (nf, _) = reduce_full(&g, &gb.basis, &Budget::default(), ReduceMode::Exact)?;
    nf.with_ring(f.ring())
}

/// Repeatedly reduces each polynomial against the others until stable.
fn interreduce(polys: Vec<Polynomial>, budget: &Budget) -> Result<Vec<Polynomial>> {
    let mut list: Vec<Polynomial> = polys.into_iter().filter(|p| !p.is_zero()).collect();
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < list.len() {
            let current = list[i].clone();
            let others: Vec<Polynomial> = list
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, p)| p.clone())
                .collect();
            if others.is_empty() {
                break;
            }
            let (nf, _) = reduce_full(&current, &others, budget, ReduceMode::Scaled)?;
            let nf = normalize_for_basis(nf);
            if nf != current {
                changed = true;
                if nf.is_zero() {
                    list.remove(i);
                    continue;
                }
                list[i] = nf;
            }
            i += 1;
        }
        if !changed {
            break;
        }
    }
    Ok(list)
}

/// Monic over GF(p); integer-primitive over Q (monic only at the very end,
/// when the reduced basis is assembled).
fn normalize_for_basis(p: Polynomial) -> Polynomial {
    match p.ring().field {
        Field::Prime(_) => p.make_monic(),
        Field::Rationals => p.primitive_part(),
    }
}

#[derive(Clone, PartialEq, Eq)]
struct PairKey {
    deg: u32,
    sugar: u32,
    i: u32,
    j: u32,
}

impl Ord for PairKey {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.deg, self.sugar, self.i, self.j).cmp(&(other.deg, other.sugar, other.i, other.j))
    }
}

impl PartialOrd for PairKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct Engine {
    basis: Vec<Polynomial>,
    lms: Vec<Monomial>,
    sugars: Vec<u32>,
    pairs: BinaryHeap<std::cmp::Reverse<PairKey>>,
    pending: HashSet<(u32, u32)>,
    budget: Budget,
    pair_reductions: u64,
}

impl Engine {
    fn basis_terms(&self) -> u64 {
        self.basis.iter().map(|g| g.num_terms() as u64).sum()
    }

    fn add_element(&mut self, g: Polynomial) {
        let t = self.basis.len() as u32;
        let lm = g.leading_monomial().unwrap().clone();
        let sugar = g.degree().unwrap_or(0);
        for i in 0..self.basis.len() as u32 {
            let lmi = &self.lms[i as usize];
            // Coprimality criterion: such S-pairs reduce to zero.
            if lmi.is_coprime(&lm) {
                continue;
            }
            let lcm = lmi.lcm(&lm);
            let sugar_pair = (self.sugars[i as usize] + (lcm.degree() - lmi.degree()))
                .max(sugar + (lcm.degree() - lm.degree()));
            self.pairs.push(std::cmp::Reverse(PairKey {
                deg: lcm.degree(),
                sugar: sugar_pair,
                i,
                j: t,
            }));
            self.pending.insert((i, t));
        }
        self.basis.push(g);
        self.lms.push(lm);
        self.sugars.push(sugar);
    }

    /// Chain criterion in its late form: the pair (i, j) is dropped when some
    /// basis element k divides lcm(i, j) and both (i, k) and (j, k) have
    /// already been treated.
    fn chain_criterion(&self, i: u32, j: u32) -> bool {
        let lcm = self.lms[i as usize].lcm(&self.lms[j as usize]);
        for k in 0..self.basis.len() as u32 {
            if k == i || k == j {
                continue;
            }
            if !self.lms[k as usize].divides(&lcm) {
                continue;
            }
            let pik = (i.min(k), i.max(k));
            let pjk = (j.min(k), j.max(k));
            if !self.pending.contains(&pik) && !self.pending.contains(&pjk) {
                return true;
            }
        }
        false
    }

    fn run(&mut self) -> Result<()> {
        while let Some(std::cmp::Reverse(key)) = self.pairs.pop() {
            let (i, j) = (key.i, key.j);
            self.pending.remove(&(i, j));
            if self.chain_criterion(i, j) {
                continue;
            }
            self.pair_reductions += 1;
            if self.pair_reductions > self.budget.max_pair_reductions {
                return Err(Error::BudgetExceeded(format!(
                    "more than {} pair reductions",
                    self.budget.max_pair_reductions
                )));
            }
            let s = s_polynomial_scaled(&self.basis[i as usize], &self.basis[j as usize])?;
            let (nf, _) = reduce_full(&s, &self.basis, &self.budget, ReduceMode::Scaled)?;
            if nf.is_zero() {
                continue;
            }
            self.add_element(normalize_for_basis(nf));
            if self.basis_terms() > self.budget.max_terms {
                return Err(Error::BudgetExceeded(format!(
                    "basis grew past {} terms",
                    self.budget.max_terms
                )));
            }
        }
        Ok(())
    }
}

/// Reduced Groebner basis of `ideal` under `order` with default budgets.
pub fn groebner_basis(ideal: &Ideal, order: MonomialOrder) -> Result<GroebnerBasis> {
    groebner_basis_with(ideal, order, &Budget::default())
}

pub fn groebner_basis_with(
    ideal: &Ideal,
    order: MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis> {
    let ring = ideal.ring().with_order(order)?;
    let gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| g.with_ring(&ring))
        .collect::<Result<Vec<_>>>()?;
    let gens = interreduce(gens, budget)?;

    let mut engine = Engine {
        basis: Vec::new(),
        lms: Vec::new(),
        sugars: Vec::new(),
        pairs: BinaryHeap::new(),
        pending: HashSet::new(),
        budget: *budget,
        pair_reductions: 0,
    };
    for g in gens {
        engine.add_element(g);
    }
    engine.run()?;

    let basis = reduce_basis(engine.basis, &ring, budget)?;
    Ok(GroebnerBasis {
        ideal: ideal.clone(),
        ring,
        basis,
    })
}

/// Minimalizes and tail-reduces a basis into the unique reduced form.
fn reduce_basis(
    mut basis: Vec<Polynomial>,
    ring: &Arc<PolyRing>,
    budget: &Budget,
) -> Result<Vec<Polynomial>> {
    basis.retain(|g| !g.is_zero());
    // Minimalize: drop elements whose leading monomial is divisible by
    // another surviving leading monomial.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let lmi = basis[i].leading_monomial().unwrap().clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let lmj = basis[j].leading_monomial().unwrap();
            if lmj.divides(&lmi) && (lmj != &lmi || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Polynomial> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();

    // Tail-reduce each element against the others; leading monomials are
    // stable so a single pass suffices.
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let g = if others.is_empty() {
            minimal[i].clone()
        } else {
            reduce_full(&minimal[i], &others, budget, ReduceMode::Scaled)?.0
        };
        reduced.push(g.make_monic());
    }
    let order = ring.order;
    reduced.sort_by(|a, b| {
        order.cmp(
            a.leading_monomial().expect("nonzero"),
            b.leading_monomial().expect("nonzero"),
        )
    });
    Ok(reduced)
}
