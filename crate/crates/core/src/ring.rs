//! Polynomial rings: a coefficient field, named variables, and a monomial order.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::MonomialOrder;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyRing {
    pub field: Field,
    pub nvars: usize,
    pub var_names: Vec<String>,
    pub order: MonomialOrder,
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(
        field: Field,
        var_names: &[S],
        order: MonomialOrder,
    ) -> Result<Arc<PolyRing>> {
        let names: Vec<String> = var_names.iter().map(|s| s.as_ref().to_string()).collect();
        if names.is_empty() {
            return Err(Error::domain("a ring needs at least one variable"));
        }
        for n in &names {
            if !is_identifier(n) {
                return Err(Error::domain(format!("`{n}` is not a valid identifier")));
            }
        }
        for i in 0..names.len() {
            for j in i + 1..names.len() {
                if names[i] == names[j] {
                    return Err(Error::domain(format!("duplicate variable `{}`", names[i])));
                }
            }
        }
        if let MonomialOrder::BlockElimination(k) = order {
            if k == 0 || k >= names.len() {
                return Err(Error::domain(format!(
                    "elimination block {k} must satisfy 1 <= k < nvars = {}",
                    names.len()
                )));
            }
        }
        Ok(Arc::new(PolyRing {
            field,
            nvars: names.len(),
            var_names: names,
            order,
        }))
    }

    /// Ring with variables `prefix0..prefix{n-1}`.
    pub fn numbered(
        field: Field,
        prefix: &str,
        n: usize,
        order: MonomialOrder,
    ) -> Result<Arc<PolyRing>> {
        let names: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
        PolyRing::new(field, &names, order)
    }

    /// Same ring under a different monomial order.
    pub fn with_order(self: &Arc<Self>, order: MonomialOrder) -> Result<Arc<PolyRing>> {
        if self.order == order {
            return Ok(self.clone());
        }
        PolyRing::new(self.field, &self.var_names, order)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.var_names.iter().position(|n| n == name)
    }

    /// Structural ring identity (pointer fast path first).
    pub fn same(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}[{}] ({})",
            self.field,
            self.var_names.join(","),
            self.order
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_bad_names() {
        assert!(PolyRing::new(Field::Rationals, &["x", "x"], MonomialOrder::GrevLex).is_err());
        assert!(PolyRing::new(Field::Rationals, &["1x"], MonomialOrder::GrevLex).is_err());
        assert!(PolyRing::new(Field::Rationals, &["x", "y"], MonomialOrder::GrevLex).is_ok());
    }

    #[test]
    fn elimination_block_bounds() {
        assert!(
            PolyRing::new(Field::Rationals, &["x", "y"], MonomialOrder::BlockElimination(2))
                .is_err()
        );
        assert!(
            PolyRing::new(Field::Rationals, &["x", "y"], MonomialOrder::BlockElimination(1))
                .is_ok()
        );
    }
}
