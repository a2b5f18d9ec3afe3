//! Elimination-based operations: elimination ideals, kernels of graded ring
//! maps by the graph-ideal construction, ideal intersection, and saturation
//! via the single-auxiliary-variable (Rabinowitsch) trick per generator.

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis_with, Budget};
use crate::ideal::Ideal;
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use std::sync::Arc;

/// A variable name based on `base` that does not collide with `ring`.
fn fresh_var_name(ring: &PolyRing, base: &str) -> String {
    if ring.var_index(base).is_none() {
        return base.to_string();
    }
    for i in 0.. {
        let name = format!("{base}_{i}");
        if ring.var_index(&name).is_none() {
            return name;
        }
    }
    unreachable!()
}

/// Moves a polynomial of `src` into `product`, where the variables of `src`
/// occupy the index range starting at `at`.
fn lift_into(p: &Polynomial, product: &Arc<PolyRing>, at: usize) -> Polynomial {
    let before = at;
    let after = product.nvars - at - p.ring().nvars;
    let terms = p
        .terms()
        .iter()
        .map(|(c, m)| (c.clone(), m.prepend_vars(before).extend_vars(after)))
        .collect();
    Polynomial::from_terms(product, terms)
}

/// Selects the basis elements free of the first `k` variables and projects
/// them into `target` (whose variables are the last `nvars - k` of `ring`).
fn select_and_project(
    basis: &[Polynomial],
    k: usize,
    target: &Arc<PolyRing>,
) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    for g in basis {
        let free = g
            .terms()
            .iter()
            .all(|(_, m)| (0..k).all(|v| m.exponent(v) == 0));
        if free {
            let terms = g
                .terms()
                .iter()
                .map(|(c, m)| (c.clone(), m.project(k..m.nvars())))
                .collect();
            out.push(Polynomial::from_terms(target, terms));
        }
    }
    Ok(out)
}

/// Generators of the elimination ideal I ∩ k[x_k, ..., x_{n-1}], returned in
/// a fresh grevlex ring on the last `nvars - k` variables.
pub fn eliminate(ideal: &Ideal, k: usize, budget: &Budget) -> Result<Ideal> {
    let ring = ideal.ring();
    if k == 0 || k >= ring.nvars {
        return Err(Error::domain(format!(
            "elimination block {k} must satisfy 1 <= k < nvars = {}",
            ring.nvars
        )));
    }
    let gb = groebner_basis_with(ideal, MonomialOrder::BlockElimination(k), budget)?;
    let names: Vec<&String> = ring.var_names[k..].iter().collect();
    let target = PolyRing::new(ring.field, &names, MonomialOrder::GrevLex)?;
    let gens = select_and_project(gb.basis(), k, &target)?;
    Ideal::new(&target, gens)
}

/// Kernel of the ring map `target -> source/I` sending the i-th target
/// variable to `images[i]`, computed from the graph ideal
/// I + (z_i - images_i) by eliminating the source variables.
///
/// The images must be homogeneous of one common positive degree and I must
/// be graded, so the kernel is again graded.
pub fn ring_map_kernel(
    ideal: &Ideal,
    images: &[Polynomial],
    target: &Arc<PolyRing>,
    budget: &Budget,
) -> Result<Ideal> {
    let src = ideal.ring();
    ideal.require_graded()?;
    if images.len() != target.nvars {
        return Err(Error::ArityMismatch {
            expected: target.nvars,
            got: images.len(),
        });
    }
    if src.field != target.field {
        return Err(Error::RingMismatch(
            "kernel computation cannot change the field".into(),
        ));
    }
    let mut common: Option<u32> = None;
    for img in images {
        if !img.ring().same(src) {
            return Err(Error::RingMismatch(
                "images must live in the ideal's ring".into(),
            ));
        }
        if img.is_zero() {
            continue;
        }
        if !img.is_homogeneous() {
            return Err(Error::NotGraded(img.to_string()));
        }
        let d = img.degree().unwrap();
        match common {
            None => common = Some(d),
            Some(e) if e == d => {}
            Some(e) => {
                return Err(Error::domain(format!(
                    "images must share one degree ({e} vs {d})"
                )))
            }
        }
    }
    for name in &target.var_names {
        if src.var_index(name).is_some() {
            return Err(Error::domain(format!(
                "target variable `{name}` collides with a source variable"
            )));
        }
    }

    let k = src.nvars;
    let mut names: Vec<String> = src.var_names.clone();
    names.extend(target.var_names.iter().cloned());
    let product = PolyRing::new(src.field, &names, MonomialOrder::BlockElimination(k))?;

    let mut gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| lift_into(g, &product, 0))
        .collect();
    for (i, img) in images.iter().enumerate() {
        let z = Polynomial::variable(&product, k + i);
        gens.push(z.sub(&lift_into(img, &product, 0))?);
    }
    let graph = Ideal::new(&product, gens)?;
    let gb = groebner_basis_with(&graph, MonomialOrder::BlockElimination(k), budget)?;
    let kernel_gens = select_and_project(gb.basis(), k, target)?;
    Ideal::new(target, kernel_gens)
}

fn has_constant_generator(ideal: &Ideal) -> bool {
    ideal.generators().iter().any(|g| g.degree() == Some(0))
}

/// Ideal intersection via the auxiliary-variable trick:
/// I ∩ J = (t·I + (1-t)·J) ∩ k[x].
pub fn ideal_intersection(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<Ideal> {
    if !a.ring().same(b.ring()) {
        return Err(Error::RingMismatch(
            "intersection needs a common ring".into(),
        ));
    }
    if has_constant_generator(a) {
        return Ok(b.clone());
    }
    if has_constant_generator(b) {
        return Ok(a.clone());
    }
    if a.is_zero_ideal() {
        return Ok(a.clone());
    }
    if b.is_zero_ideal() {
        return Ok(b.clone());
    }
    let ring = a.ring();
    let t_name = fresh_var_name(ring, "t");
    let mut names = vec![t_name];
    names.extend(ring.var_names.iter().cloned());
    let product = PolyRing::new(ring.field, &names, MonomialOrder::BlockElimination(1))?;
    let t = Polynomial::variable(&product, 0);
    let one_minus_t = Polynomial::one(&product).sub(&t)?;
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(t.try_mul(&lift_into(g, &product, 1))?);
    }
    for g in b.generators() {
        gens.push(one_minus_t.try_mul(&lift_into(g, &product, 1))?);
    }
    let graph = Ideal::new(&product, gens)?;
    let gb = groebner_basis_with(&graph, MonomialOrder::BlockElimination(1), budget)?;
    let gens = select_and_project(gb.basis(), 1, ring)?;
    Ideal::new(ring, gens)
}

/// Saturation of I by a single polynomial: (I + (1 - t·g)) ∩ k[x].
fn saturate_single(ideal: &Ideal, g: &Polynomial, budget: &Budget) -> Result<Ideal> {
    let ring = ideal.ring();
    if g.degree() == Some(0) {
        // Units change nothing.
        return Ok(ideal.clone());
    }
    let t_name = fresh_var_name(ring, "t");
    let mut names = vec![t_name];
    names.extend(ring.var_names.iter().cloned());
    let product = PolyRing::new(ring.field, &names, MonomialOrder::BlockElimination(1))?;
    let t = Polynomial::variable(&product, 0);
    let mut gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|p| lift_into(p, &product, 1))
        .collect();
    gens.push(Polynomial::one(&product).sub(&t.try_mul(&lift_into(g, &product, 1))?)?);
    let graph = Ideal::new(&product, gens)?;
    let gb = groebner_basis_with(&graph, MonomialOrder::BlockElimination(1), budget)?;
    let sel = select_and_project(gb.basis(), 1, ring)?;
    Ideal::new(ring, sel)
}

/// I : J^∞, computed per generator of J and intersected.
pub fn saturate(ideal: &Ideal, by: &Ideal, budget: &Budget) -> Result<Ideal> {
    if !ideal.ring().same(by.ring()) {
        return Err(Error::RingMismatch("saturation needs a common ring".into()));
    }
    if has_constant_generator(ideal) {
        return Ok(Ideal::unit(ideal.ring()));
    }
    if by.is_zero_ideal() {
        // f · 0^m ⊆ I holds for every f.
        return Ok(Ideal::unit(ideal.ring()));
    }
    let mut result: Option<Ideal> = None;
    for g in by.generators() {
        let sat_g = saturate_single(ideal, g, budget)?;
        result = Some(match result {
            None => sat_g,
            Some(acc) => ideal_intersection(&acc, &sat_g, budget)?,
        });
    }
    Ok(result.expect("nonzero ideal has generators"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::groebner_basis;
    use crate::ideal::parse_ideal_file;
    use crate::parse::parse_poly;

    fn default_budget() -> Budget {
        Budget::default()
    }

    #[test]
    fn cuspidal_cubic_implicitization() {
        // (z0 - x^2, z1 - x^3), eliminating x, gives z0^3 - z1^2.
        let ideal =
            parse_ideal_file("ring: q; vars: x,z0,z1; order: grevlex\nz0 - x^2\nz1 - x^3\n")
                .unwrap();
        let out = eliminate(&ideal, 1, &default_budget()).unwrap();
        assert_eq!(out.generators().len(), 1);
        assert_eq!(out.generators()[0].to_string(), "z0^3 - z1^2");
        // Soundness: substituting the parametrization yields zero.
        let par = parse_ideal_file("ring: q; vars: x; order: grevlex\n").unwrap();
        let x = Polynomial::variable(par.ring(), 0);
        let images = [x.pow(2).unwrap(), x.pow(3).unwrap()];
        assert!(out.generators()[0].substitute(&images).unwrap().is_zero());
    }

    #[test]
    fn eliminate_trivial_cases() {
        let free = parse_ideal_file("ring: q; vars: x,z0; order: grevlex\nz0 - x\n").unwrap();
        let none = eliminate(&free, 1, &default_budget()).unwrap();
        assert!(none.is_zero_ideal());

        let both = parse_ideal_file("ring: q; vars: x,z0; order: grevlex\nx\nz0\n").unwrap();
        let z = eliminate(&both, 1, &default_budget()).unwrap();
        assert_eq!(z.generators().len(), 1);
        assert_eq!(z.generators()[0].to_string(), "z0");
    }

    #[test]
    fn veronese_conic_kernel() {
        let src = parse_ideal_file("ring: q; vars: s,t; order: grevlex\n").unwrap();
        let ring = src.ring();
        let s = Polynomial::variable(ring, 0);
        let t = Polynomial::variable(ring, 1);
        let images = [
            s.try_mul(&s).unwrap(),
            s.try_mul(&t).unwrap(),
            t.try_mul(&t).unwrap(),
        ];
        let target =
            PolyRing::new(ring.field, &["z0", "z1", "z2"], MonomialOrder::GrevLex).unwrap();
        let kernel = ring_map_kernel(&src, &images, &target, &default_budget()).unwrap();
        assert_eq!(kernel.generators().len(), 1);
        // The classical conic, monic in the leading monomial z1^2.
        let conic = parse_poly(&target, "z0*z2 - z1^2").unwrap();
        assert_eq!(kernel.generators()[0], conic.neg());
        // Soundness: every kernel generator maps into the source ideal.
        for g in kernel.generators() {
            assert!(g.substitute(&images).unwrap().is_zero());
        }
    }

    #[test]
    fn kernel_of_identity_like_map() {
        // I = (s), image (s): kernel is (z0).
        let src = parse_ideal_file("ring: q; vars: s; order: grevlex\ns\n").unwrap();
        let s = Polynomial::variable(src.ring(), 0);
        let target = PolyRing::new(src.ring().field, &["z0"], MonomialOrder::GrevLex).unwrap();
        let kernel = ring_map_kernel(&src, &[s], &target, &default_budget()).unwrap();
        assert_eq!(kernel.generators().len(), 1);
        assert_eq!(kernel.generators()[0].to_string(), "z0");
    }

    #[test]
    fn saturation_strips_embedded_component() {
        // (x0^2, x0 x1) : (x0, x1)^∞ = (x0).
        let i = parse_ideal_file("ring: q; vars: x0,x1; order: grevlex\nx0^2\nx0*x1\n").unwrap();
        let j = Ideal::irrelevant(i.ring());
        let sat = saturate(&i, &j, &default_budget()).unwrap();
        let gb = groebner_basis(&sat, MonomialOrder::GrevLex).unwrap();
        let printed: Vec<String> = gb.basis().iter().map(|g| g.to_string()).collect();
        assert_eq!(printed, vec!["x0"]);
    }

    #[test]
    fn saturation_of_unit_ideal() {
        let i = parse_ideal_file("ring: q; vars: x0,x1; order: grevlex\n1\n").unwrap();
        let j = Ideal::irrelevant(i.ring());
        let sat = saturate(&i, &j, &default_budget()).unwrap();
        assert!(has_constant_generator(&sat));
    }

    #[test]
    fn saturation_is_idempotent_and_contains_input() {
        let i = parse_ideal_file(
            "ring: gf:32003; vars: x0,x1,x2; order: grevlex\nx0^2*x2\nx0*x1^2\n",
        )
        .unwrap();
        let j = Ideal::irrelevant(i.ring());
        let once = saturate(&i, &j, &default_budget()).unwrap();
        let twice = saturate(&once, &j, &default_budget()).unwrap();
        let gb_once = groebner_basis(&once, MonomialOrder::GrevLex).unwrap();
        let gb_twice = groebner_basis(&twice, MonomialOrder::GrevLex).unwrap();
        let a: Vec<String> = gb_once.basis().iter().map(|g| g.to_string()).collect();
        let b: Vec<String> = gb_twice.basis().iter().map(|g| g.to_string()).collect();
        assert_eq!(a, b);
        for g in i.generators() {
            assert!(gb_once.contains(g).unwrap());
        }
    }

    #[test]
    fn intersection_principal_ideals() {
        // (x) ∩ (y) = (xy).
        let a = parse_ideal_file("ring: q; vars: x,y; order: grevlex\nx\n").unwrap();
        let b = parse_ideal_file("ring: q; vars: x,y; order: grevlex\ny\n").unwrap();
        let meet = ideal_intersection(&a, &b, &default_budget()).unwrap();
        let gb = groebner_basis(&meet, MonomialOrder::GrevLex).unwrap();
        let printed: Vec<String> = gb.basis().iter().map(|g| g.to_string()).collect();
        assert_eq!(printed, vec!["x*y"]);
    }

    #[test]
    fn elimination_output_soundness() {
        // Every generator of the eliminated ideal substitutes into the
        // source ideal (NF = 0 against the source basis).
        let ideal = parse_ideal_file(
            "ring: q; vars: x,z0,z1,z2; order: grevlex\nz0 - x^2\nz1 - x^3\nz2 - x^4\n",
        )
        .unwrap();
        let out = eliminate(&ideal, 1, &default_budget()).unwrap();
        assert!(!out.is_zero_ideal());
        let src_gb = groebner_basis(&ideal, MonomialOrder::GrevLex).unwrap();
        let ring = ideal.ring();
        for g in out.generators() {
            // Re-embed g into the source ring by padding the x variable.
            let lifted = Polynomial::from_terms(
                ring,
                g.terms()
                    .iter()
                    .map(|(c, m)| (c.clone(), m.prepend_vars(1)))
                    .collect(),
            );
            assert!(src_gb.contains(&lifted).unwrap());
        }
    }
}
