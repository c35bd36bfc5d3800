use std::fmt;
use std::sync::Arc;

use super::MonomialOrder;
use crate::coeff::{Field, FieldElem};
use crate::error::{Error, Result};

/// A polynomial ring `K[x_1, ..., x_n]` together with its term order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    field: Field,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: Field, vars: Vec<String>, order: MonomialOrder) -> Result<Arc<PolyRing>> {
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::InvalidRing("empty variable name".into()));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
            if field.generator_names().contains(v) {
                return Err(Error::InvalidRing(format!("variable `{v}` shadows a field generator")));
            }
        }
        if let MonomialOrder::Elimination(k) = order {
            if k > vars.len() {
                return Err(Error::InvalidRing(format!("elimination block {k} exceeds {} variables", vars.len())));
            }
        }
        Ok(Arc::new(PolyRing { field, vars, order }))
    }

    /// Grevlex ring over `field` in the named variables.
    pub fn grevlex(field: Field, vars: &[&str]) -> Result<Arc<PolyRing>> {
        PolyRing::new(field, vars.iter().map(|s| s.to_string()).collect(), MonomialOrder::Grevlex)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<PolyRing>> {
        PolyRing::new(self.field.clone(), self.vars.clone(), order)
    }

    pub fn with_field(&self, field: Field) -> Result<Arc<PolyRing>> {
        PolyRing::new(field, self.vars.clone(), self.order)
    }

    /// The ring with `count` fresh variables prepended and the elimination
    /// order for them.
    pub fn with_eliminated_prefix(&self, stem: &str, count: usize) -> Result<Arc<PolyRing>> {
        let mut vars = Vec::with_capacity(self.vars.len() + count);
        let mut idx = 0;
        while vars.len() < count {
            let name = format!("{stem}{idx}");
            idx += 1;
            if !self.vars.contains(&name) && !self.field.generator_names().contains(&name) {
                vars.push(name);
            }
        }
        vars.extend(self.vars.iter().cloned());
        PolyRing::new(self.field.clone(), vars, MonomialOrder::Elimination(count))
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.vars.join(","))
    }
}

/// A point of affine space, one coordinate per ring variable. Coordinates may
/// lie in an extension of the ring's coefficient field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    coords: Vec<FieldElem>,
}

impl Point {
    pub fn new(coords: Vec<FieldElem>) -> Self {
        Point { coords }
    }

    pub fn origin(ring: &PolyRing) -> Self {
        Point { coords: vec![ring.field().zero(); ring.arity()] }
    }

    pub fn coords(&self) -> &[FieldElem] {
        &self.coords
    }

    pub fn arity(&self) -> usize {
        self.coords.len()
    }

    pub fn neg(&self) -> Self {
        Point { coords: self.coords.iter().map(|c| -c).collect() }
    }

    /// The field containing every coordinate and the ring's field.
    pub fn common_field(&self, ring: &PolyRing) -> Result<Field> {
        let mut field = ring.field().clone();
        for c in &self.coords {
            let cf = c.field();
            if cf.contains(&field) {
                field = cf;
            } else if !field.contains(&cf) {
                return Err(Error::IncompatibleFields(cf.to_string(), field.to_string()));
            }
        }
        Ok(field)
    }

    pub(crate) fn check_arity(&self, ring: &PolyRing) -> Result<()> {
        if self.arity() != ring.arity() {
            return Err(Error::ArityMismatch { expected: ring.arity(), found: self.arity() });
        }
        Ok(())
    }

    /// Fails unless every coordinate lies in the ring's own field.
    pub(crate) fn check_rational(&self, ring: &PolyRing) -> Result<()> {
        self.check_arity(ring)?;
        for c in &self.coords {
            if &c.field() != ring.field() {
                return Err(Error::IncompatibleFields(c.field().to_string(), ring.field().to_string()));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}
