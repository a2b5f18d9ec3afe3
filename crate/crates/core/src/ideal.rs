//! Ideals: generator lists with a graded flag, plus the text file format
//! (`ring:` header, one polynomial per line, `#` comments).

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::MonomialOrder;
use crate::parse::parse_poly;
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
    graded: bool,
}

impl Ideal {
    /// Zero generators are dropped; the graded flag records whether every
    /// surviving generator is homogeneous.
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Polynomial>) -> Result<Ideal> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if !g.ring().same(ring) {
                return Err(Error::RingMismatch(format!(
                    "generator ring {} differs from ideal ring {}",
                    g.ring(),
                    ring
                )));
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        let graded = gens.iter().all(|g| g.is_homogeneous());
        Ok(Ideal {
            ring: ring.clone(),
            generators: gens,
            graded,
        })
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Ideal {
        Ideal {
            ring: ring.clone(),
            generators: Vec::new(),
            graded: true,
        }
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Ideal {
        Ideal {
            ring: ring.clone(),
            generators: vec![Polynomial::one(ring)],
            graded: true,
        }
    }

    /// The irrelevant maximal ideal (x_0, ..., x_{n-1}).
    pub fn irrelevant(ring: &Arc<PolyRing>) -> Ideal {
        Ideal {
            ring: ring.clone(),
            generators: (0..ring.nvars)
                .map(|i| Polynomial::variable(ring, i))
                .collect(),
            graded: true,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    pub fn require_graded(&self) -> Result<()> {
        if self.graded {
            Ok(())
        } else {
            let bad = self
                .generators
                .iter()
                .find(|g| !g.is_homogeneous())
                .map(|g| g.to_string())
                .unwrap_or_default();
            Err(Error::NotGraded(bad))
        }
    }

    /// Sum of two ideals in the same ring.
    pub fn plus(&self, other: &Ideal) -> Result<Ideal> {
        if !self.ring.same(&other.ring) {
            return Err(Error::RingMismatch("ideal sum needs a common ring".into()));
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn map_to_field(&self, ring: &Arc<PolyRing>) -> Result<Ideal> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.map_to_field(ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }
}

/// The ideal (F, dF/dv for all v) used by the Jacobian smoothness criterion.
/// F itself is kept for characteristic safety even though the Euler relation
/// makes it redundant when char does not divide deg F.
pub fn jacobian_ideal(f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::domain("jacobian ideal of the zero polynomial"));
    }
    if !f.is_homogeneous() {
        return Err(Error::NotGraded(f.to_string()));
    }
    let mut gens = vec![f.clone()];
    gens.extend(f.partial_derivatives());
    Ideal::new(f.ring(), gens)
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ideal(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses the ideal file format:
///
/// ```text
/// # optional comments
/// ring: gf:32003; vars: x0,x1,x2; order: grevlex
/// x0^2 + x1*x2
/// ```
pub fn parse_ideal_file(text: &str) -> Result<Ideal> {
    let mut ring: Option<Arc<PolyRing>> = None;
    let mut gens = Vec::new();
    for line in text.lines() {
        let line = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match &ring {
            None => ring = Some(parse_ring_header(line)?),
            Some(r) => gens.push(parse_poly(r, line)?),
        }
    }
    let ring = ring.ok_or_else(|| Error::domain("missing `ring:` header line"))?;
    Ideal::new(&ring, gens)
}

/// Parses a `ring: <field>; vars: <names>; order: <order>` header.
pub fn parse_ring_header(line: &str) -> Result<Arc<PolyRing>> {
    let mut field = None;
    let mut vars: Option<Vec<String>> = None;
    let mut order = None;
    for part in line.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (key, value) = part
            .split_once(':')
            .ok_or_else(|| Error::domain(format!("bad header component `{part}`")))?;
        let value = value.trim();
        match key.trim() {
            "ring" => field = Some(Field::parse(value)?),
            "vars" => {
                vars = Some(
                    value
                        .split(|c: char| c == ',' || c.is_whitespace())
                        .filter(|s| !s.is_empty())
                        .map(|s| s.to_string())
                        .collect(),
                )
            }
            "order" => order = Some(MonomialOrder::parse(value)?),
            other => return Err(Error::domain(format!("unknown header key `{other}`"))),
        }
    }
    let field = field.ok_or_else(|| Error::domain("header missing `ring:`"))?;
    let vars = vars.ok_or_else(|| Error::domain("header missing `vars:`"))?;
    let order = order.unwrap_or(MonomialOrder::GrevLex);
    PolyRing::new(field, &vars, order)
}

pub fn format_ring_header(ring: &PolyRing) -> String {
    format!(
        "ring: {}; vars: {}; order: {}",
        ring.field,
        ring.var_names.join(","),
        ring.order
    )
}

pub fn format_ideal_file(ideal: &Ideal) -> String {
    let mut out = String::new();
    out.push_str(&format_ring_header(ideal.ring()));
    out.push('\n');
    for g in ideal.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_roundtrip() {
        let text = "# twisted cubic\nring: q; vars: x0,x1,x2,x3; order: grevlex\nx0*x2 - x1^2\nx0*x3 - x1*x2\nx1*x3 - x2^2\n";
        let ideal = parse_ideal_file(text).unwrap();
        assert_eq!(ideal.generators().len(), 3);
        assert!(ideal.is_graded());
        let formatted = format_ideal_file(&ideal);
        let back = parse_ideal_file(&formatted).unwrap();
        assert_eq!(ideal, back);
    }

    #[test]
    fn graded_flag_detects_inhomogeneous() {
        let text = "ring: q; vars: x,y; order: lex\nx^2 + y\n";
        let ideal = parse_ideal_file(text).unwrap();
        assert!(!ideal.is_graded());
        assert!(ideal.require_graded().is_err());
    }

    #[test]
    fn jacobian_of_conic() {
        let ring = parse_ring_header("ring: q; vars: x0,x1,x2; order: grevlex").unwrap();
        let f = parse_poly(&ring, "x0^2 + x1^2 + x2^2").unwrap();
        let j = jacobian_ideal(&f).unwrap();
        // F plus three partials 2*x_i.
        assert_eq!(j.generators().len(), 4);
    }

    #[test]
    fn zero_generators_dropped() {
        let ring = parse_ring_header("ring: q; vars: x; order: grevlex").unwrap();
        let z = Polynomial::zero(&ring);
        let i = Ideal::new(&ring, vec![z]).unwrap();
        assert!(i.is_zero_ideal());
    }
}
