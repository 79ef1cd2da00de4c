//! Categories, monoidal categories, functors, and transformations enriched
//! over a presented base category.
//!
//! Hom objects are single base objects. Every structure morphism is a base
//! morphism; the 1-graded morphisms `1 → 𝒜(a→b)` are also viewed as morphisms
//! `a → b` of the underlying ordinary category, with the same coefficients.

use std::sync::Arc;

use crate::base::PresentedBase;
use crate::category::{pairs, triples, CatError, LinearMonCat, Mor, OrdFunctor};
use crate::report::ValidationReport;
use crate::scalar::{is_invertible, solve, Matrix};
use crate::witness;

/// A category enriched over the base: hom objects, identities `j`, composition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VCat {
    name: String,
    base: Arc<PresentedBase>,
    object_names: Vec<String>,
    hom_obj: Vec<usize>,
    j: Vec<Mor>,
    comp: Vec<Mor>,
}

impl VCat {
    /// Assembles an enriched category; `comp` is indexed by `(a, b, c)` row-major.
    pub fn new(
        name: impl Into<String>,
        base: Arc<PresentedBase>,
        object_names: Vec<String>,
        hom_obj: Vec<Vec<usize>>,
        j: Vec<Mor>,
        comp: Vec<Mor>,
    ) -> Result<Self, CatError> {
        let n = object_names.len();
        if n == 0 {
            return Err(CatError::Malformed("no objects".into()));
        }
        if hom_obj.len() != n || hom_obj.iter().any(|r| r.len() != n) {
            return Err(CatError::Malformed(format!("hom object table must be {n}x{n}")));
        }
        let hom_obj: Vec<usize> = hom_obj.into_iter().flatten().collect();
        if let Some(&x) = hom_obj.iter().find(|&&x| x >= base.len()) {
            return Err(CatError::Malformed(format!("hom object {x} is not a base object")));
        }
        if j.len() != n || comp.len() != n * n * n {
            return Err(CatError::Malformed("identity or composition data has the wrong length".into()));
        }
        let c = VCat { name: name.into(), base, object_names, hom_obj, j, comp };
        let v = &*c.base;
        for a in 0..n {
            expect_shape(v, &c.j[a], v.unit(), c.hom(a, a), || format!("j at {a}"))?;
        }
        for (a, b, d) in triples(n) {
            let src = v.tensor_obj(c.hom(a, b), c.hom(b, d));
            expect_shape(v, c.comp(a, b, d), src, c.hom(a, d), || format!("composition at ({a},{b},{d})"))?;
        }
        Ok(c)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn base(&self) -> &Arc<PresentedBase> {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.object_names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.object_names.is_empty()
    }

    pub fn object_names(&self) -> &[String] {
        &self.object_names
    }

    pub fn object_name(&self, a: usize) -> &str {
        &self.object_names[a]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.object_names.iter().position(|n| n == name)
    }

    pub fn hom(&self, a: usize, b: usize) -> usize {
        self.hom_obj[a * self.len() + b]
    }

    pub fn hom_table(&self) -> Vec<Vec<usize>> {
        self.hom_obj.chunks(self.len()).map(<[usize]>::to_vec).collect()
    }

    pub fn j(&self, a: usize) -> &Mor {
        &self.j[a]
    }

    pub fn js(&self) -> &[Mor] {
        &self.j
    }

    pub fn comp(&self, a: usize, b: usize, c: usize) -> &Mor {
        let n = self.len();
        &self.comp[(a * n + b) * n + c]
    }

    pub fn comps(&self) -> &[Mor] {
        &self.comp
    }

    /// Dimension of the underlying hom space `V(1 → 𝒜(a→b))`.
    pub fn underlying_dim(&self, a: usize, b: usize) -> usize {
        self.base.hom_dim(self.base.unit(), self.hom(a, b))
    }

    /// Views an underlying morphism `a → b` as a base morphism `1 → 𝒜(a→b)`.
    pub fn as_graded(&self, f: &Mor) -> Mor {
        Mor::new(self.base.unit(), self.hom(f.src, f.dst), f.coeffs.clone())
    }

    /// Views a base morphism `1 → 𝒜(a→b)` as an underlying morphism `a → b`.
    pub fn as_underlying(&self, a: usize, b: usize, f: &Mor) -> Mor {
        Mor::new(a, b, f.coeffs.clone())
    }

    /// Composite of 1-graded morphisms `f ∈ 𝒜(a→b)`, `g ∈ 𝒜(b→c)`, as a
    /// base morphism `1 → 𝒜(a→c)`.
    pub fn graded_compose(&self, (a, b, c): (usize, usize, usize), f: &Mor, g: &Mor) -> Result<Mor, CatError> {
        let v = &*self.base;
        v.compose(&v.tensor(f, g)?, self.comp(a, b, c))
    }

    /// A copy with one composition morphism replaced, for mutation tests.
    pub fn with_comp(&self, (a, b, c): (usize, usize, usize), m: Mor) -> Result<Self, CatError> {
        let mut comp = self.comp.clone();
        let n = self.len();
        comp[(a * n + b) * n + c] = m;
        VCat::new(self.name.clone(), self.base.clone(), self.object_names.clone(), self.hom_table(), self.j.clone(), comp)
    }
}

fn expect_shape(
    v: &LinearMonCat,
    m: &Mor,
    src: usize,
    dst: usize,
    what: impl Fn() -> String,
) -> Result<(), CatError> {
    if m.src != src || m.dst != dst {
        return Err(CatError::Malformed(format!(
            "{} should map {} → {}, found {} → {}",
            what(),
            v.name(src),
            v.name(dst),
            v.name(m.src.min(v.len() - 1)),
            v.name(m.dst.min(v.len() - 1))
        )));
    }
    v.check_mor(m).map_err(|e| CatError::Malformed(format!("{}: {e}", what())))
}

/// An enriched category with a strict monoidal structure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VMonCat {
    vcat: VCat,
    unit: usize,
    tensor_table: Vec<usize>,
    tens: Vec<Mor>,
}

impl std::ops::Deref for VMonCat {
    type Target = VCat;

    fn deref(&self) -> &VCat {
        &self.vcat
    }
}

impl VMonCat {
    /// `tens` is indexed by `(a, b, c, d)` row-major and maps
    /// `𝒜(a→c)⊗𝒜(b→d) → 𝒜(ab→cd)`.
    pub fn new(vcat: VCat, unit: usize, tensor_table: Vec<Vec<usize>>, tens: Vec<Mor>) -> Result<Self, CatError> {
        let n = vcat.len();
        if unit >= n {
            return Err(CatError::Malformed(format!("unit object {unit} out of range")));
        }
        if tensor_table.len() != n || tensor_table.iter().any(|r| r.len() != n) {
            return Err(CatError::Malformed(format!("tensor table must be {n}x{n}")));
        }
        let tensor_table: Vec<usize> = tensor_table.into_iter().flatten().collect();
        if let Some(&x) = tensor_table.iter().find(|&&x| x >= n) {
            return Err(CatError::Malformed(format!("tensor table entry {x} out of range")));
        }
        if tens.len() != n * n * n * n {
            return Err(CatError::Malformed("tensor data has the wrong length".into()));
        }
        let c = VMonCat { vcat, unit, tensor_table, tens };
        let v = &**c.base();
        for (a, b) in pairs(n) {
            for (x, y) in pairs(n) {
                let src = v.tensor_obj(c.hom(a, x), c.hom(b, y));
                let dst = c.hom(c.tensor_obj(a, b), c.tensor_obj(x, y));
                expect_shape(v, c.tens(a, b, x, y), src, dst, || format!("tensor at ({a},{b},{x},{y})"))?;
            }
        }
        Ok(c)
    }

    pub fn vcat(&self) -> &VCat {
        &self.vcat
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn tensor_obj(&self, a: usize, b: usize) -> usize {
        self.tensor_table[a * self.len() + b]
    }

    pub fn tensor_table(&self) -> Vec<Vec<usize>> {
        self.tensor_table.chunks(self.len()).map(<[usize]>::to_vec).collect()
    }

    pub fn tens(&self, a: usize, b: usize, c: usize, d: usize) -> &Mor {
        let n = self.len();
        &self.tens[((a * n + b) * n + c) * n + d]
    }

    pub fn tens_all(&self) -> &[Mor] {
        &self.tens
    }

    /// Tensor of 1-graded morphisms `f ∈ 𝒜(a→c)`, `g ∈ 𝒜(b→d)`.
    pub fn graded_tensor(&self, (a, b, c, d): (usize, usize, usize, usize), f: &Mor, g: &Mor) -> Result<Mor, CatError> {
        let v = &**self.base();
        v.compose(&v.tensor(f, g)?, self.tens(a, b, c, d))
    }

    /// A copy with one tensor morphism replaced, for mutation tests.
    pub fn with_tens(&self, (a, b, c, d): (usize, usize, usize, usize), m: Mor) -> Result<Self, CatError> {
        let mut tens = self.tens.clone();
        let n = self.len();
        tens[((a * n + b) * n + c) * n + d] = m;
        VMonCat::new(self.vcat.clone(), self.unit, self.tensor_table(), tens)
    }

    /// The same structure morphisms read against another base with identical
    /// structure constants but possibly different braiding or duals.
    pub fn rebased(&self, base: Arc<PresentedBase>) -> Result<Self, CatError> {
        if base.cat() != self.base().cat() {
            return Err(CatError::Malformed("rebasing requires identical structure constants".into()));
        }
        let vcat = VCat { base, ..self.vcat.clone() };
        Ok(VMonCat { vcat, ..self.clone() })
    }

    pub fn renamed(&self, name: impl Into<String>) -> Self {
        let vcat = VCat { name: name.into(), ..self.vcat.clone() };
        VMonCat { vcat, ..self.clone() }
    }
}

/// Unit laws and associativity of enriched composition.
pub fn validate_vcat(c: &VCat) -> ValidationReport {
    let mut rep = ValidationReport::new();
    let v = &**c.base();
    let n = c.len();
    for (a, b) in pairs(n) {
        let h = c.hom(a, b);
        let left = v.tensor(c.j(a), &v.id(h)).and_then(|x| v.compose(&x, c.comp(a, a, b)));
        rep.record_eq("vcat.unit_left", "(j_a⊗id)∘comp_{a,a,b} = id", left, Ok(v.id(h)), witness!(a = a, b = b));
        let right = v.tensor(&v.id(h), c.j(b)).and_then(|x| v.compose(&x, c.comp(a, b, b)));
        rep.record_eq("vcat.unit_right", "(id⊗j_b)∘comp_{a,b,b} = id", right, Ok(v.id(h)), witness!(a = a, b = b));
    }
    for (a, b, x) in triples(n) {
        for d in 0..n {
            let lhs = v
                .tensor(c.comp(a, b, x), &v.id(c.hom(x, d)))
                .and_then(|m| v.compose(&m, c.comp(a, x, d)));
            let rhs = v
                .tensor(&v.id(c.hom(a, b)), c.comp(b, x, d))
                .and_then(|m| v.compose(&m, c.comp(a, b, d)));
            rep.record_eq(
                "vcat.assoc",
                "(comp_{a,b,c}⊗id)∘comp_{a,c,d} = (id⊗comp_{b,c,d})∘comp_{a,b,d}",
                lhs,
                rhs,
                witness!(a = a, b = b, c = x, d = d),
            );
        }
    }
    rep
}

/// Everything in [`validate_vcat`] plus the monoidal axioms, including the
/// braided interchange law.
pub fn validate_vmoncat(c: &VMonCat) -> ValidationReport {
    let mut rep = validate_vcat(c.vcat());
    let v = &**c.base();
    let n = c.len();
    let u = c.unit();
    for a in 0..n {
        rep.record(
            "vmoncat.unit_object",
            "1a = a = a1",
            c.tensor_obj(u, a) == a && c.tensor_obj(a, u) == a,
            witness!(a = a),
        );
    }
    for (a, b, d) in triples(n) {
        rep.record(
            "vmoncat.assoc_object",
            "(ab)c = a(bc)",
            c.tensor_obj(c.tensor_obj(a, b), d) == c.tensor_obj(a, c.tensor_obj(b, d)),
            witness!(a = a, b = b, c = d),
        );
    }
    if !rep.passed() {
        return rep;
    }
    let t = |a, b| c.tensor_obj(a, b);
    for (a, b) in pairs(n) {
        let h = c.hom(a, b);
        let left = v.tensor(c.j(u), &v.id(h)).and_then(|m| v.compose(&m, c.tens(u, a, u, b)));
        rep.record_eq("vmoncat.tensor_unit_left", "(j_1⊗id)∘⊗ = id", left, Ok(v.id(h)), witness!(a = a, b = b));
        let right = v.tensor(&v.id(h), c.j(u)).and_then(|m| v.compose(&m, c.tens(a, u, b, u)));
        rep.record_eq("vmoncat.tensor_unit_right", "(id⊗j_1)∘⊗ = id", right, Ok(v.id(h)), witness!(a = a, b = b));
        let ids = c.graded_tensor((a, b, a, b), c.j(a), c.j(b));
        rep.record_eq(
            "vmoncat.tensor_identity",
            "(j_a⊗j_b)∘⊗ = j_ab",
            ids,
            Ok(c.j(t(a, b)).clone()),
            witness!(a = a, b = b),
        );
    }
    for (a, b, x) in triples(n) {
        for (d, e, f) in triples(n) {
            let lhs = v
                .tensor(c.tens(a, b, d, e), &v.id(c.hom(x, f)))
                .and_then(|m| v.compose(&m, c.tens(t(a, b), x, t(d, e), f)));
            let rhs = v
                .tensor(&v.id(c.hom(a, d)), c.tens(b, x, e, f))
                .and_then(|m| v.compose(&m, c.tens(a, t(b, x), d, t(e, f))));
            rep.record_eq(
                "vmoncat.tensor_assoc",
                "(⊗⊗id)∘⊗ = (id⊗⊗)∘⊗",
                lhs,
                rhs,
                witness!(a = a, b = b, c = x, d = d, e = e, f = f),
            );
            rep.record_eq(
                "vmoncat.braided_interchange",
                "(⊗_{a,d,b,e}⊗⊗_{b,e,c,f})∘comp = (id⊗β⊗id)∘(comp⊗comp)∘⊗_{a,d,c,f}",
                interchange_lhs(c, [a, b, x, d, e, f]),
                interchange_rhs(c, [a, b, x, d, e, f]),
                witness!(a = a, b = b, c = x, d = d, e = e, f = f),
            );
        }
    }
    rep
}

/// Tensor then compose, from `𝒜(a→b)𝒜(d→e)𝒜(b→c)𝒜(e→f)` to `𝒜(ad→cf)`.
pub fn interchange_lhs(c: &VMonCat, [a, b, x, d, e, f]: [usize; 6]) -> Result<Mor, CatError> {
    let v = &**c.base();
    let t = |p, q| c.tensor_obj(p, q);
    let m = v.tensor(c.tens(a, d, b, e), c.tens(b, e, x, f))?;
    v.compose(&m, c.comp(t(a, d), t(b, e), t(x, f)))
}

/// Braid the middle strands, compose, then tensor.
pub fn interchange_rhs(c: &VMonCat, [a, b, x, d, e, f]: [usize; 6]) -> Result<Mor, CatError> {
    let v = &**c.base();
    let swap = v.tensor_all(&[&v.id(c.hom(a, b)), v.braid(c.hom(d, e), c.hom(b, x)), &v.id(c.hom(e, f))])?;
    let comps = v.tensor(c.comp(a, b, x), c.comp(d, e, f))?;
    v.compose_all(&[&swap, &comps, c.tens(a, d, x, f)])
}

/// A strictly unital lax monoidal enriched functor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VMonFunctor {
    name: String,
    source: Arc<VMonCat>,
    target: Arc<VMonCat>,
    object_map: Vec<usize>,
    components: Vec<Mor>,
    laxitor: Vec<Mor>,
    strong: bool,
}

impl VMonFunctor {
    /// `components` maps `𝒜(a→b) → ℬ(Ra→Rb)` and `laxitor` is `1 → ℬ(RaRb→R(ab))`,
    /// both row-major over `(a, b)`.
    pub fn new(
        name: impl Into<String>,
        source: Arc<VMonCat>,
        target: Arc<VMonCat>,
        object_map: Vec<usize>,
        components: Vec<Mor>,
        laxitor: Vec<Mor>,
        strong: bool,
    ) -> Result<Self, CatError> {
        if source.base() != target.base() {
            return Err(CatError::Malformed("source and target are enriched over different bases".into()));
        }
        let n = source.len();
        if object_map.len() != n || components.len() != n * n || laxitor.len() != n * n {
            return Err(CatError::Malformed("functor data does not match the source object count".into()));
        }
        if let Some(&x) = object_map.iter().find(|&&x| x >= target.len()) {
            return Err(CatError::Malformed(format!("object image {x} out of range")));
        }
        let f = VMonFunctor { name: name.into(), source, target, object_map, components, laxitor, strong };
        let v = &**f.source.base();
        let (s, t) = (&f.source, &f.target);
        for (a, b) in pairs(n) {
            let (ra, rb) = (f.obj(a), f.obj(b));
            expect_shape(v, f.component(a, b), s.hom(a, b), t.hom(ra, rb), || format!("component at ({a},{b})"))?;
            let lsrc = t.tensor_obj(ra, rb);
            let ldst = f.obj(s.tensor_obj(a, b));
            expect_shape(v, f.laxitor(a, b), v.unit(), t.hom(lsrc, ldst), || format!("laxitor at ({a},{b})"))?;
        }
        Ok(f)
    }

    pub fn identity(c: Arc<VMonCat>) -> Self {
        let n = c.len();
        let v = c.base().clone();
        let components = pairs(n).map(|(a, b)| v.id(c.hom(a, b))).collect();
        let laxitor = pairs(n).map(|(a, b)| c.j(c.tensor_obj(a, b)).clone()).collect();
        VMonFunctor {
            name: format!("id_{}", c.name()),
            source: c.clone(),
            target: c,
            object_map: (0..n).collect(),
            components,
            laxitor,
            strong: true,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(&self, name: impl Into<String>) -> Self {
        VMonFunctor { name: name.into(), ..self.clone() }
    }

    pub fn source(&self) -> &Arc<VMonCat> {
        &self.source
    }

    pub fn target(&self) -> &Arc<VMonCat> {
        &self.target
    }

    pub fn obj(&self, a: usize) -> usize {
        self.object_map[a]
    }

    pub fn object_map(&self) -> &[usize] {
        &self.object_map
    }

    pub fn component(&self, a: usize, b: usize) -> &Mor {
        &self.components[a * self.source.len() + b]
    }

    pub fn components(&self) -> &[Mor] {
        &self.components
    }

    pub fn laxitor(&self, a: usize, b: usize) -> &Mor {
        &self.laxitor[a * self.source.len() + b]
    }

    pub fn laxitors(&self) -> &[Mor] {
        &self.laxitor
    }

    pub fn is_strong(&self) -> bool {
        self.strong
    }

    /// A copy with one laxitor component replaced, for mutation tests.
    pub fn with_laxitor(&self, a: usize, b: usize, m: Mor) -> Result<Self, CatError> {
        let mut laxitor = self.laxitor.clone();
        laxitor[a * self.source.len() + b] = m;
        VMonFunctor::new(
            self.name.clone(),
            self.source.clone(),
            self.target.clone(),
            self.object_map.clone(),
            self.components.clone(),
            laxitor,
            self.strong,
        )
    }

    /// Image of a 1-graded morphism `f ∈ 𝒜(a→b)` as a base morphism `1 → ℬ(Ra→Rb)`.
    pub fn apply_graded(&self, f: &Mor, a: usize, b: usize) -> Result<Mor, CatError> {
        self.source.base().compose(f, self.component(a, b))
    }
}

/// Functoriality, unit preservation, and the laxitor axioms; strong functors
/// additionally need invertible laxitors in the underlying category.
pub fn validate_vmon_functor(f: &VMonFunctor) -> ValidationReport {
    let mut rep = ValidationReport::new();
    let (s, t) = (&**f.source(), &**f.target());
    let v = &**s.base();
    let n = s.len();
    let r = |a| f.obj(a);
    rep.record("functor.unit_object", "R(1) = 1", r(s.unit()) == t.unit(), vec![]);
    for (a, b, c) in triples(n) {
        let lhs = v.compose(s.comp(a, b, c), f.component(a, c));
        let rhs = v
            .tensor(f.component(a, b), f.component(b, c))
            .and_then(|m| v.compose(&m, t.comp(r(a), r(b), r(c))));
        rep.record_eq("functor.compose", "comp∘R = (R⊗R)∘comp", lhs, rhs, witness!(a = a, b = b, c = c));
    }
    for a in 0..n {
        let lhs = v.compose(s.j(a), f.component(a, a));
        rep.record_eq("functor.identity", "j_a∘R = j_Ra", lhs, Ok(t.j(r(a)).clone()), witness!(a = a));
        let u = s.unit();
        rep.record(
            "laxitor.unit",
            "ρ_{1,a} = ρ_{a,1} = j_Ra",
            f.laxitor(u, a) == t.j(r(a)) && f.laxitor(a, u) == t.j(r(a)),
            witness!(a = a),
        );
    }
    let st = |a, b| s.tensor_obj(a, b);
    let tt = |a, b| t.tensor_obj(a, b);
    for (a, b) in pairs(n) {
        for (c, d) in pairs(n) {
            // Both sides map 𝒜(a→c)⊗𝒜(b→d) to ℬ(RaRb → R(cd)).
            let lhs = v
                .compose(s.tens(a, b, c, d), f.component(st(a, b), st(c, d)))
                .and_then(|m| v.tensor(f.laxitor(a, b), &m))
                .and_then(|m| v.compose(&m, t.comp(tt(r(a), r(b)), r(st(a, b)), r(st(c, d)))));
            let rhs = v
                .tensor(f.component(a, c), f.component(b, d))
                .and_then(|m| v.compose(&m, t.tens(r(a), r(b), r(c), r(d))))
                .and_then(|m| v.tensor(&m, f.laxitor(c, d)))
                .and_then(|m| v.compose(&m, t.comp(tt(r(a), r(b)), tt(r(c), r(d)), r(st(c, d)))));
            rep.record_eq(
                "laxitor.naturality",
                "(ρ_{a,b}⊗(⊗∘R))∘comp = ((R⊗R)∘⊗⊗ρ_{c,d})∘comp",
                lhs,
                rhs,
                witness!(a = a, b = b, c = c, d = d),
            );
        }
    }
    for (a, b, c) in triples(n) {
        let lhs = t
            .graded_tensor((r(a), tt(r(b), r(c)), r(a), r(st(b, c))), t.j(r(a)), f.laxitor(b, c))
            .and_then(|m| {
                t.graded_compose(
                    (tt(r(a), tt(r(b), r(c))), tt(r(a), r(st(b, c))), r(st(a, st(b, c)))),
                    &m,
                    f.laxitor(a, st(b, c)),
                )
            });
        let rhs = t
            .graded_tensor((tt(r(a), r(b)), r(c), r(st(a, b)), r(c)), f.laxitor(a, b), t.j(r(c)))
            .and_then(|m| {
                t.graded_compose(
                    (tt(tt(r(a), r(b)), r(c)), tt(r(st(a, b)), r(c)), r(st(st(a, b), c))),
                    &m,
                    f.laxitor(st(a, b), c),
                )
            });
        rep.record_eq(
            "laxitor.assoc",
            "(id⊗ρ_{b,c})∘ρ_{a,bc} = (ρ_{a,b}⊗id)∘ρ_{ab,c}",
            lhs,
            rhs,
            witness!(a = a, b = b, c = c),
        );
    }
    if f.is_strong() {
        match underlying(t) {
            Ok(ut) => {
                for (a, b) in pairs(n) {
                    let m = t.as_underlying(tt(r(a), r(b)), r(st(a, b)), f.laxitor(a, b));
                    rep.record("laxitor.invertible", "ρ_{a,b} invertible", ut.is_invertible(&m), witness!(a = a, b = b));
                }
            }
            Err(_) => rep.record("laxitor.invertible", "ρ_{a,b} invertible", false, witness!(target = t.name())),
        }
    }
    rep
}

/// Composite `R` then `S`, with laxitor `(σ_{Ra,Rb}⊗S(ρ_{a,b}))∘comp`.
pub fn compose_functors(r: &VMonFunctor, s: &VMonFunctor) -> Result<VMonFunctor, CatError> {
    if r.target() != s.source() {
        return Err(CatError::ObjectMismatch(format!("{} does not end where {} starts", r.name(), s.name())));
    }
    let a = &**r.source();
    let b = &**r.target();
    let c = &**s.target();
    let v = &**a.base();
    let n = a.len();
    let object_map: Vec<usize> = (0..n).map(|x| s.obj(r.obj(x))).collect();
    let components = pairs(n)
        .map(|(x, y)| v.compose(r.component(x, y), s.component(r.obj(x), r.obj(y))))
        .collect::<Result<Vec<_>, _>>()?;
    let mut laxitor = Vec::with_capacity(n * n);
    for (x, y) in pairs(n) {
        let (rx, ry, rxy) = (r.obj(x), r.obj(y), r.obj(a.tensor_obj(x, y)));
        let s_rho = s.apply_graded(r.laxitor(x, y), b.tensor_obj(rx, ry), rxy)?;
        let src = c.tensor_obj(s.obj(rx), s.obj(ry));
        laxitor.push(c.graded_compose((src, s.obj(b.tensor_obj(rx, ry)), s.obj(rxy)), s.laxitor(rx, ry), &s_rho)?);
    }
    VMonFunctor::new(
        format!("{}.{}", r.name(), s.name()),
        r.source().clone(),
        s.target().clone(),
        object_map,
        components,
        laxitor,
        r.is_strong() && s.is_strong(),
    )
}

/// A 1-graded natural transformation between parallel functors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VTransform {
    name: String,
    source: Arc<VMonFunctor>,
    target: Arc<VMonFunctor>,
    components: Vec<Mor>,
}

impl VTransform {
    /// `components[a]` is a base morphism `1 → ℬ(Ra→Sa)`.
    pub fn new(
        name: impl Into<String>,
        source: Arc<VMonFunctor>,
        target: Arc<VMonFunctor>,
        components: Vec<Mor>,
    ) -> Result<Self, CatError> {
        if source.source() != target.source() || source.target() != target.target() {
            return Err(CatError::Malformed("transformation endpoints are not parallel".into()));
        }
        let b = source.target();
        let v = &**b.base();
        if components.len() != source.source().len() {
            return Err(CatError::Malformed("transformation needs one component per object".into()));
        }
        for (a, m) in components.iter().enumerate() {
            expect_shape(v, m, v.unit(), b.hom(source.obj(a), target.obj(a)), || format!("component at {a}"))?;
        }
        Ok(VTransform { name: name.into(), source, target, components })
    }

    pub fn identity(f: Arc<VMonFunctor>) -> Self {
        let b = f.target().clone();
        let components = (0..f.source().len()).map(|a| b.j(f.obj(a)).clone()).collect();
        VTransform { name: format!("id_{}", f.name()), source: f.clone(), target: f, components }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(&self, name: impl Into<String>) -> Self {
        VTransform { name: name.into(), ..self.clone() }
    }

    pub fn source(&self) -> &Arc<VMonFunctor> {
        &self.source
    }

    pub fn target(&self) -> &Arc<VMonFunctor> {
        &self.target
    }

    pub fn component(&self, a: usize) -> &Mor {
        &self.components[a]
    }

    pub fn components(&self) -> &[Mor] {
        &self.components
    }
}

/// Naturality and, when `monoidal`, compatibility with the laxitors.
pub fn validate_vtransform(t: &VTransform, monoidal: bool) -> ValidationReport {
    let mut rep = ValidationReport::new();
    let (r, s) = (&**t.source(), &**t.target());
    let a_cat = &**r.source();
    let b_cat = &**r.target();
    let v = &**a_cat.base();
    let n = a_cat.len();
    for (a, b) in pairs(n) {
        // Both sides map 𝒜(a→b) to ℬ(Ra → Sb).
        let lhs = v
            .tensor(t.component(a), s.component(a, b))
            .and_then(|m| v.compose(&m, b_cat.comp(r.obj(a), s.obj(a), s.obj(b))));
        let rhs = v
            .tensor(r.component(a, b), t.component(b))
            .and_then(|m| v.compose(&m, b_cat.comp(r.obj(a), r.obj(b), s.obj(b))));
        rep.record_eq("transform.naturality", "(θ_a⊗S)∘comp = (R⊗θ_b)∘comp", lhs, rhs, witness!(a = a, b = b));
    }
    if monoidal {
        let at = |x, y| a_cat.tensor_obj(x, y);
        let bt = |x, y| b_cat.tensor_obj(x, y);
        for (a, b) in pairs(n) {
            let ab = at(a, b);
            let lhs = b_cat.graded_compose((bt(r.obj(a), r.obj(b)), r.obj(ab), s.obj(ab)), r.laxitor(a, b), t.component(ab));
            let rhs = b_cat
                .graded_tensor((r.obj(a), r.obj(b), s.obj(a), s.obj(b)), t.component(a), t.component(b))
                .and_then(|m| b_cat.graded_compose((bt(r.obj(a), r.obj(b)), bt(s.obj(a), s.obj(b)), s.obj(ab)), &m, s.laxitor(a, b)));
            rep.record_eq("transform.monoidal", "ρ_{a,b}∘θ_ab = (θ_a⊗θ_b)∘σ_{a,b}", lhs, rhs, witness!(a = a, b = b));
        }
    }
    rep
}

/// `θ` then `φ`: `(θ∘φ)_a = (θ_a⊗φ_a)∘comp`.
pub fn vertical_compose(theta: &VTransform, phi: &VTransform) -> Result<VTransform, CatError> {
    if theta.target() != phi.source() {
        return Err(CatError::ObjectMismatch(format!("{} does not end where {} starts", theta.name(), phi.name())));
    }
    let (r, s, t) = (theta.source(), theta.target(), phi.target());
    let b = r.target();
    let components = (0..r.source().len())
        .map(|a| b.graded_compose((r.obj(a), s.obj(a), t.obj(a)), theta.component(a), phi.component(a)))
        .collect::<Result<Vec<_>, _>>()?;
    VTransform::new(format!("{}.{}", theta.name(), phi.name()), r.clone(), t.clone(), components)
}

/// Horizontal composite of `θ: R₁ ⇒ R₂` and `φ: S₁ ⇒ S₂`, with components
/// `φ_{R₁a}` followed by `S₂(θ_a)`.
pub fn horizontal_compose(theta: &VTransform, phi: &VTransform) -> Result<VTransform, CatError> {
    let (r1, r2) = (theta.source(), theta.target());
    let (s1, s2) = (phi.source(), phi.target());
    if r1.target() != s1.source() {
        return Err(CatError::ObjectMismatch(format!("{} and {} are not composable", theta.name(), phi.name())));
    }
    let c = s1.target();
    let mut components = Vec::with_capacity(r1.source().len());
    for a in 0..r1.source().len() {
        let s2_theta = s2.apply_graded(theta.component(a), r1.obj(a), r2.obj(a))?;
        let objs = (s1.obj(r1.obj(a)), s2.obj(r1.obj(a)), s2.obj(r2.obj(a)));
        components.push(c.graded_compose(objs, phi.component(r1.obj(a)), &s2_theta)?);
    }
    let src = Arc::new(compose_functors(r1, s1)?);
    let dst = Arc::new(compose_functors(r2, s2)?);
    VTransform::new(format!("{}*{}", theta.name(), phi.name()), src, dst, components)
}

/// The underlying ordinary monoidal category, with hom spaces `V(1 → 𝒜(a→b))`.
pub fn underlying(c: &VMonCat) -> Result<LinearMonCat, CatError> {
    let v = &**c.base();
    let n = c.len();
    let dims = (0..n).map(|a| (0..n).map(|b| c.underlying_dim(a, b)).collect()).collect();
    let mut out = LinearMonCat::skeleton(c.object_names().to_vec(), c.unit(), c.tensor_table(), dims)?;
    for a in 0..n {
        out.set_identity(a, c.j(a).coeffs.clone())?;
    }
    let unit = v.unit();
    for (a, b, x) in triples(n) {
        for (p, f) in v.basis(unit, c.hom(a, b)).iter().enumerate() {
            for (q, g) in v.basis(unit, c.hom(b, x)).iter().enumerate() {
                let m = c.graded_compose((a, b, x), f, g)?;
                for (k, coeff) in m.coeffs.into_iter().enumerate() {
                    out.set_compose((a, b, x), (p, q, k), coeff)?;
                }
            }
        }
    }
    for (a, b) in pairs(n) {
        for (x, d) in pairs(n) {
            // f: a → x and g: b → d give f⊗g: ab → xd.
            for (p, f) in v.basis(unit, c.hom(a, x)).iter().enumerate() {
                for (q, g) in v.basis(unit, c.hom(b, d)).iter().enumerate() {
                    let m = c.graded_tensor((a, b, x, d), f, g)?;
                    for (k, coeff) in m.coeffs.into_iter().enumerate() {
                        out.set_tensor((a, x, b, d), (p, q, k), coeff)?;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The underlying ordinary functor `R(f) = f∘R_{a→b}`.
pub fn underlying_functor(f: &VMonFunctor) -> Result<OrdFunctor, CatError> {
    let s = f.source();
    let v = &**s.base();
    let n = s.len();
    let mut action = Vec::with_capacity(n * n);
    for (a, b) in pairs(n) {
        let rows = f.target().underlying_dim(f.obj(a), f.obj(b));
        let cols = v
            .basis(v.unit(), s.hom(a, b))
            .iter()
            .map(|g| v.compose(g, f.component(a, b)).map(|m| m.coeffs))
            .collect::<Result<Vec<_>, _>>()?;
        action.push(Matrix::from_columns(rows, &cols)?);
    }
    Ok(OrdFunctor { object_map: f.object_map().to_vec(), action })
}

/// The trace `a ↦ 𝒜(1→a)` from the underlying category into the base, with
/// `Tr(f) = (id⊗f)∘comp_{1,a,b}`.
pub fn trace(c: &VMonCat) -> Result<OrdFunctor, CatError> {
    let v = &**c.base();
    let n = c.len();
    let u = c.unit();
    let mut action = Vec::with_capacity(n * n);
    for (a, b) in pairs(n) {
        let rows = v.hom_dim(c.hom(u, a), c.hom(u, b));
        let cols = v
            .basis(v.unit(), c.hom(a, b))
            .iter()
            .map(|f| trace_mor(c, a, b, f).map(|m| m.coeffs))
            .collect::<Result<Vec<_>, _>>()?;
        action.push(Matrix::from_columns(rows, &cols)?);
    }
    Ok(OrdFunctor { object_map: (0..n).map(|a| c.hom(u, a)).collect(), action })
}

/// `Tr(f)` for a 1-graded `f ∈ 𝒜(a→b)`, as a base morphism `𝒜(1→a) → 𝒜(1→b)`.
pub fn trace_mor(c: &VMonCat, a: usize, b: usize, f: &Mor) -> Result<Mor, CatError> {
    let v = &**c.base();
    let u = c.unit();
    v.compose(&v.tensor(&v.id(c.hom(u, a)), f)?, c.comp(u, a, b))
}

/// Evaluation `u⊗[u,v] → v`, contracting `u` against `u*` through the braiding.
pub fn evaluation(base: &PresentedBase, u: usize, v: usize) -> Result<Mor, CatError> {
    let du = base.dual(u)?;
    let swap = base.tensor(base.braid(u, du), &base.id(v))?;
    let ev = base.tensor(base.ev(u)?, &base.id(v))?;
    base.compose(&swap, &ev)
}

/// The adjunction `V(w → [u,v]) → V(uw → v)`, `h ↦ (id_u⊗h)∘ε_{u→v}`, as a matrix.
fn internal_hom_matrix(base: &PresentedBase, u: usize, w: usize, v: usize) -> Result<Matrix, CatError> {
    let hom = base.internal_hom(u, v)?;
    let eps = evaluation(base, u, v)?;
    let rows = base.hom_dim(base.tensor_obj(u, w), v);
    let cols = base
        .basis(w, hom)
        .iter()
        .map(|h| base.compose(&base.tensor(&base.id(u), h)?, &eps).map(|m| m.coeffs))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_columns(rows, &cols)?)
}

/// The inverse of the internal hom adjunction: the unique `h: w → [u,v]`
/// with `(id_u⊗h)∘ε_{u→v} = g` for `g: uw → v`.
pub fn internal_name(base: &PresentedBase, u: usize, w: usize, g: &Mor) -> Result<Mor, CatError> {
    let v = g.dst;
    if g.src != base.tensor_obj(u, w) {
        return Err(CatError::ObjectMismatch("morphism does not start at uw".into()));
    }
    let m = internal_hom_matrix(base, u, w, v)?;
    if !is_invertible(&m) {
        return Err(CatError::Malformed(format!(
            "internal hom adjunction is not bijective at ({}, {}, {})",
            base.cat().name(u),
            base.cat().name(w),
            base.cat().name(v)
        )));
    }
    let sol = solve(&m, &g.coeffs)?.ok_or_else(|| CatError::Malformed("internal hom adjunction has no solution".into()))?;
    Ok(Mor::new(w, base.internal_hom(u, v)?, sol))
}

/// The self-enrichment: hom objects `u*⊗v`, with identities, composition and
/// tensor defined through the internal hom adjunction.
pub fn self_enrichment(base: Arc<PresentedBase>) -> Result<VMonCat, CatError> {
    let b = &*base;
    let n = b.len();
    let h = |u, v| b.internal_hom(u, v);
    let mut hom_obj = vec![vec![0; n]; n];
    for (u, v) in pairs(n) {
        hom_obj[u][v] = h(u, v)?;
    }
    let j = (0..n).map(|v| internal_name(b, v, b.unit(), &b.id(v))).collect::<Result<Vec<_>, _>>()?;
    let mut comp = Vec::with_capacity(n * n * n);
    for (u, v, w) in triples(n) {
        let lhs = b.tensor(&evaluation(b, u, v)?, &b.id(h(v, w)?))?;
        let target = b.compose(&lhs, &evaluation(b, v, w)?)?;
        comp.push(internal_name(b, u, b.tensor_obj(h(u, v)?, h(v, w)?), &target)?);
    }
    let mut tens = Vec::with_capacity(n * n * n * n);
    for (u, w) in pairs(n) {
        for (v, x) in pairs(n) {
            let (huv, hwx) = (h(u, v)?, h(w, x)?);
            let swap = b.tensor_all(&[&b.id(u), b.braid(w, huv), &b.id(hwx)])?;
            let evs = b.tensor(&evaluation(b, u, v)?, &evaluation(b, w, x)?)?;
            let target = b.compose(&swap, &evs)?;
            tens.push(internal_name(b, b.tensor_obj(u, w), b.tensor_obj(huv, hwx), &target)?);
        }
    }
    let vcat = VCat::new(format!("Vhat_{}", b.name()), base.clone(), b.names().to_vec(), hom_obj, j, comp)?;
    VMonCat::new(vcat, b.unit(), b.tensor_table(), tens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::int;

    #[test]
    fn fixture_categories_validate() {
        for c in fixtures::enriched_fixtures() {
            let rep = validate_vmoncat(&c);
            assert!(rep.passed(), "{}: {rep}", c.name());
            assert!(rep.instances("vmoncat.braided_interchange") > 0);
        }
    }

    #[test]
    fn negated_composition_breaks_associativity() {
        let c = fixtures::vhat_svec();
        let m = c.comp(1, 0, 1).neg();
        let broken = c.vcat().with_comp((1, 0, 1), m).unwrap();
        let rep = validate_vcat(&broken);
        assert_eq!(rep.failed_checks(), vec!["vcat.assoc"]);
    }

    #[test]
    fn interchange_needs_the_sign() {
        let c = fixtures::vhat_svec();
        let b = c.base();
        let plus = Arc::new(b.with_braid(1, 1, b.id(0)).unwrap());
        let rep = validate_vmoncat(&c.rebased(plus).unwrap());
        assert!(rep.failed_checks().contains(&"vmoncat.braided_interchange"), "{rep}");
    }

    #[test]
    fn self_enrichment_homs_and_sign() {
        let c = fixtures::vhat_svec();
        for v in 0..2 {
            assert_eq!(c.hom(0, v), v);
        }
        assert_eq!(c.hom(1, 1), 0);
        // Moving the odd strand w = 1 past the odd hom object [0,1] costs a sign.
        let t = c.tens(0, 1, 1, 1);
        assert_eq!(t.coeffs, vec![int(-1)]);
        assert_eq!(c.tens(0, 0, 1, 0).coeffs, vec![int(1)]);
    }

    #[test]
    fn pointed_functors_validate() {
        for f in [fixtures::incl(), fixtures::proj(), fixtures::twist(), fixtures::dbl(), fixtures::id_functor(fixtures::pt2())] {
            let rep = validate_vmon_functor(&f);
            assert!(rep.passed(), "{}: {rep}", f.name());
            assert!(rep.instances("laxitor.invertible") > 0);
        }
    }

    #[test]
    fn scaled_unit_laxitor_fails() {
        let id = fixtures::id_functor(fixtures::pt2());
        let bad = id.with_laxitor(0, 1, Mor::new(0, 0, vec![int(2)])).unwrap();
        let rep = validate_vmon_functor(&bad);
        assert!(rep.failed_checks().contains(&"laxitor.unit"));
        assert!(rep.failed_checks().contains(&"laxitor.assoc"));
    }

    #[test]
    fn transforms() {
        assert!(validate_vtransform(&fixtures::sign(), true).passed());
        assert!(validate_vtransform(&fixtures::id_transform(fixtures::incl()), true).passed());
        let d = fixtures::double_x();
        assert!(validate_vtransform(&d, false).passed());
        let rep = validate_vtransform(&d, true);
        assert_eq!(rep.failed_checks(), vec!["transform.monoidal"]);
        assert!(rep.render().contains("a=1 b=1"));
    }

    #[test]
    fn functor_composition_units() {
        let f = fixtures::incl();
        let left = compose_functors(&VMonFunctor::identity(f.source().clone()), &f).unwrap();
        let right = compose_functors(&f, &VMonFunctor::identity(f.target().clone())).unwrap();
        for g in [left, right] {
            assert_eq!(g.renamed("incl"), *f);
        }
    }

    #[test]
    fn compositions_of_transforms() {
        let s = fixtures::sign();
        let id = VTransform::identity(s.source().clone());
        assert_eq!(vertical_compose(&id, &s).unwrap().components(), s.components());
        let h = horizontal_compose(&s, &s).unwrap();
        assert_eq!(h.component(1).coeffs, vec![int(1)]);
        assert!(validate_vtransform(&h, true).passed());
        let hid = horizontal_compose(&id, &id).unwrap();
        assert_eq!(hid.components(), id.components());
    }

    #[test]
    fn underlying_categories() {
        let u = underlying(&fixtures::vhat_svec()).unwrap();
        assert_eq!(u.hom_dim(0, 0), 1);
        assert_eq!(u.hom_dim(0, 1), 0);
        for c in [fixtures::vhat_svec(), fixtures::vhat_zz22(), fixtures::vhat_dual(), fixtures::pt4()] {
            let rep = underlying(&c).unwrap().validate_monoidal();
            assert!(rep.passed(), "{}: {rep}", c.name());
        }
        let id = underlying_functor(&VMonFunctor::identity(fixtures::pt2())).unwrap();
        assert_eq!(id, OrdFunctor::identity(&underlying(&fixtures::pt2()).unwrap()));
    }

    #[test]
    fn traces() {
        let p = fixtures::pt2();
        let tr = trace(&p).unwrap();
        assert_eq!(tr.obj(1), 1);
        assert!(p.base().is_zero_object(tr.obj(1)));
        let s = fixtures::vhat_svec();
        let tr = trace(&s).unwrap();
        assert_eq!(tr.object_map, vec![0, 1]);
        let mut rep = ValidationReport::new();
        tr.validate(&underlying(&s).unwrap(), s.base().cat(), &mut rep);
        assert!(rep.passed(), "{rep}");
    }
}
