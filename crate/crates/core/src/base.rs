//! The braided monoidal linear base category, with optional rigidity data.

use std::ops::Deref;

use crate::category::{pairs, triples, CatError, LinearMonCat, Mor};
use crate::report::ValidationReport;
use crate::witness;

/// Left duals: `ev_i : i*⊗i → 1` and `coev_i : 1 → i⊗i*`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Duality {
    pub dual: Vec<usize>,
    pub ev: Vec<Mor>,
    pub coev: Vec<Mor>,
}

/// A finite strict skeletal braided monoidal linear category.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PresentedBase {
    name: String,
    cat: LinearMonCat,
    braiding: Vec<Mor>,
    duality: Option<Duality>,
    zero_object: Option<usize>,
}

impl Deref for PresentedBase {
    type Target = LinearMonCat;

    fn deref(&self) -> &LinearMonCat {
        &self.cat
    }
}

impl PresentedBase {
    /// Assembles a base category, rejecting structurally malformed data.
    ///
    /// `braiding` is row-major over object pairs. Axioms are not checked here;
    /// see [`validate_base`].
    pub fn new(
        name: impl Into<String>,
        cat: LinearMonCat,
        braiding: Vec<Mor>,
        duality: Option<Duality>,
        zero_object: Option<usize>,
    ) -> Result<Self, CatError> {
        let n = cat.len();
        if braiding.len() != n * n {
            return Err(CatError::Malformed(format!("expected {} braiding entries, got {}", n * n, braiding.len())));
        }
        for (u, v) in pairs(n) {
            let b = &braiding[u * n + v];
            if b.src != cat.tensor_obj(u, v) || b.dst != cat.tensor_obj(v, u) {
                return Err(CatError::Malformed(format!("braiding ({u},{v}) has wrong endpoints")));
            }
            cat.check_mor(b)?;
        }
        if let Some(d) = &duality {
            if d.dual.len() != n || d.ev.len() != n || d.coev.len() != n {
                return Err(CatError::Malformed("duality data must cover every object".into()));
            }
            for i in 0..n {
                let di = d.dual[i];
                if di >= n {
                    return Err(CatError::Malformed(format!("dual of {i} out of range")));
                }
                let (ev, coev) = (&d.ev[i], &d.coev[i]);
                if ev.src != cat.tensor_obj(di, i) || ev.dst != cat.unit() {
                    return Err(CatError::Malformed(format!("ev of {i} has wrong endpoints")));
                }
                if coev.src != cat.unit() || coev.dst != cat.tensor_obj(i, di) {
                    return Err(CatError::Malformed(format!("coev of {i} has wrong endpoints")));
                }
                cat.check_mor(ev)?;
                cat.check_mor(coev)?;
            }
        }
        if let Some(z) = zero_object {
            if z >= n {
                return Err(CatError::Malformed(format!("zero object {z} out of range")));
            }
        }
        Ok(PresentedBase { name: name.into(), cat, braiding, duality, zero_object })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn cat(&self) -> &LinearMonCat {
        &self.cat
    }

    pub fn duality(&self) -> Option<&Duality> {
        self.duality.as_ref()
    }

    pub fn zero_object(&self) -> Option<usize> {
        self.zero_object
    }

    pub fn is_zero_object(&self, v: usize) -> bool {
        self.zero_object == Some(v)
    }

    pub fn braid(&self, u: usize, v: usize) -> &Mor {
        &self.braiding[u * self.len() + v]
    }

    pub fn braiding(&self) -> &[Mor] {
        &self.braiding
    }

    /// A copy with one braiding component replaced, for mutation tests.
    pub fn with_braid(&self, u: usize, v: usize, b: Mor) -> Result<Self, CatError> {
        let mut braiding = self.braiding.clone();
        braiding[u * self.len() + v] = b;
        Self::new(self.name.clone(), self.cat.clone(), braiding, self.duality.clone(), self.zero_object)
    }

    /// A copy with different structure constants and the same braiding and duals.
    pub fn with_cat(&self, cat: LinearMonCat) -> Result<Self, CatError> {
        Self::new(self.name.clone(), cat, self.braiding.clone(), self.duality.clone(), self.zero_object)
    }

    pub fn renamed(&self, name: impl Into<String>) -> Self {
        PresentedBase { name: name.into(), ..self.clone() }
    }

    pub fn dual(&self, i: usize) -> Result<usize, CatError> {
        self.duality.as_ref().map(|d| d.dual[i]).ok_or(CatError::MissingDuality)
    }

    pub fn ev(&self, i: usize) -> Result<&Mor, CatError> {
        self.duality.as_ref().map(|d| &d.ev[i]).ok_or(CatError::MissingDuality)
    }

    pub fn coev(&self, i: usize) -> Result<&Mor, CatError> {
        self.duality.as_ref().map(|d| &d.coev[i]).ok_or(CatError::MissingDuality)
    }

    /// The rigid model `u*⊗v` of the internal hom `[u, v]`.
    pub fn internal_hom(&self, u: usize, v: usize) -> Result<usize, CatError> {
        Ok(self.tensor_obj(self.dual(u)?, v))
    }
}

/// Enumerates every braided monoidal axiom instance, plus zig-zags when duals
/// are present and the vanishing conditions on a designated zero object.
pub fn validate_base(base: &PresentedBase) -> ValidationReport {
    let mut rep = ValidationReport::new();
    let mon = base.validate_monoidal();
    let strict = mon.passed();
    rep.absorb("", mon);
    if !strict {
        return rep;
    }
    let n = base.len();
    for (u, v) in pairs(n) {
        rep.record(
            "braiding.invertible",
            "β_{u,v} invertible",
            base.is_invertible(base.braid(u, v)),
            witness!(u = u, v = v),
        );
    }
    for (u, u2) in pairs(n) {
        for (v, v2) in pairs(n) {
            if base.hom_dim(u, u2) * base.hom_dim(v, v2) == 0 {
                continue;
            }
            for (p, f) in base.basis(u, u2).iter().enumerate() {
                for (q, g) in base.basis(v, v2).iter().enumerate() {
                    let lhs = base.tensor(f, g).and_then(|x| base.compose(&x, base.braid(u2, v2)));
                    let rhs = base.tensor(g, f).and_then(|x| base.compose(base.braid(u, v), &x));
                    rep.record(
                        "braiding.naturality",
                        "(f⊗g)∘β_{u',v'} = β_{u,v}∘(g⊗f)",
                        matches!((lhs, rhs), (Ok(a), Ok(b)) if a == b),
                        witness!(objs = format!("{u},{u2},{v},{v2}"), basis = format!("{p},{q}")),
                    );
                }
            }
        }
    }
    for (u, v, w) in triples(n) {
        let b = |x, y| base.braid(x, y);
        let first = base
            .tensor(b(u, v), &base.id(w))
            .and_then(|x| base.tensor(&base.id(v), b(u, w)).and_then(|y| base.compose(&x, &y)));
        rep.record(
            "braiding.hexagon_left",
            "β_{u,vw} = (β_{u,v}⊗id_w)∘(id_v⊗β_{u,w})",
            matches!(first, Ok(x) if x == *b(u, base.tensor_obj(v, w))),
            witness!(u = u, v = v, w = w),
        );
        let second = base
            .tensor(&base.id(u), b(v, w))
            .and_then(|x| base.tensor(b(u, w), &base.id(v)).and_then(|y| base.compose(&x, &y)));
        rep.record(
            "braiding.hexagon_right",
            "β_{uv,w} = (id_u⊗β_{v,w})∘(β_{u,w}⊗id_v)",
            matches!(second, Ok(x) if x == *b(base.tensor_obj(u, v), w)),
            witness!(u = u, v = v, w = w),
        );
    }
    if let Some(d) = base.duality() {
        for i in 0..n {
            let di = d.dual[i];
            let left = base
                .tensor(&d.coev[i], &base.id(i))
                .and_then(|x| base.tensor(&base.id(i), &d.ev[i]).and_then(|y| base.compose(&x, &y)));
            rep.record(
                "duality.zigzag_object",
                "(coev_i⊗id_i)∘(id_i⊗ev_i) = id_i",
                matches!(left, Ok(x) if x == base.id(i)),
                witness!(i = i),
            );
            let right = base
                .tensor(&base.id(di), &d.coev[i])
                .and_then(|x| base.tensor(&d.ev[i], &base.id(di)).and_then(|y| base.compose(&x, &y)));
            rep.record(
                "duality.zigzag_dual",
                "(id_i*⊗coev_i)∘(ev_i⊗id_i*) = id_i*",
                matches!(right, Ok(x) if x == base.id(di)),
                witness!(i = i),
            );
        }
    }
    if let Some(z) = base.zero_object() {
        for x in 0..n {
            rep.record(
                "zero_object.homs",
                "dim V(z→x) = dim V(x→z) = 0",
                base.hom_dim(z, x) == 0 && base.hom_dim(x, z) == 0,
                witness!(x = x),
            );
            rep.record(
                "zero_object.absorbing",
                "z⊗x = x⊗z = z",
                base.tensor_obj(z, x) == z && base.tensor_obj(x, z) == z,
                witness!(x = x),
            );
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::int;

    #[test]
    fn svec_passes() {
        let rep = validate_base(&fixtures::svec());
        assert!(rep.passed(), "{rep}");
        for id in ["braiding.hexagon_left", "braiding.hexagon_right", "braiding.naturality", "duality.zigzag_object"] {
            assert!(rep.instances(id) > 0, "{id} not exercised");
        }
    }

    #[test]
    fn svec_braid_values() {
        let s = fixtures::svec();
        assert_eq!(*s.braid(0, 0), s.id(0));
        assert_eq!(*s.braid(1, 1), s.id(0).neg());
    }

    #[test]
    fn symmetric_sign_is_also_valid() {
        let s = fixtures::svec();
        let plus = s.with_braid(1, 1, s.id(0)).unwrap();
        assert!(validate_base(&plus).passed());
    }

    #[test]
    fn broken_unit_composition_fails_identity_axiom() {
        let s = fixtures::svec();
        let mut cat = s.cat().clone();
        cat.set_compose((0, 0, 0), (0, 0, 0), int(0)).unwrap();
        let rep = validate_base(&s.with_cat(cat).unwrap());
        assert!(rep.failed_checks().contains(&"compose.unit"));
    }

    #[test]
    fn internal_hom_table() {
        let s = fixtures::svec();
        assert_eq!(s.internal_hom(0, 1).unwrap(), 1);
        assert_eq!(s.internal_hom(1, 1).unwrap(), 0);
        for v in 0..2 {
            assert_eq!(s.internal_hom(s.unit(), v).unwrap(), v);
        }
        assert_eq!(fixtures::trivz().internal_hom(0, 0), Err(CatError::MissingDuality));
    }

    #[test]
    fn every_base_fixture_passes() {
        for b in [fixtures::triv(), fixtures::trivz(), fixtures::svec(), fixtures::zz22(), fixtures::dual_numbers(), fixtures::triv2()] {
            let rep = validate_base(&b);
            assert!(rep.passed(), "{}: {rep}", b.name());
        }
    }

    #[test]
    fn non_symmetric_fixture_is_non_symmetric() {
        let z = fixtures::zz22();
        let twice = z.compose(z.braid(1, 2), z.braid(2, 1)).unwrap();
        assert_ne!(twice, z.id(3));
    }

    #[test]
    fn wrong_braiding_endpoints_rejected() {
        let s = fixtures::svec();
        assert!(matches!(s.with_braid(0, 1, s.id(0)), Err(CatError::Malformed(_))));
    }
}
