//! Module tensor categories `(A, F^Z)`: an ordinary monoidal category with an
//! oplax, strictly unital braided functor from the base into its Drinfeld
//! center, together with their 1-cells and 2-cells.

use std::sync::Arc;

use crate::base::PresentedBase;
use crate::category::{pairs, triples, CatError, LinearMonCat, Mor, OrdFunctor};
use crate::report::ValidationReport;
use crate::scalar::Matrix;
use crate::witness;

/// Where a module tensor category came from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Computed from an enriched category with the given name.
    Computed { source: String, engine: String },
    /// Supplied directly.
    Given,
}

/// A 0-cell: `A`, the functor `F` (objects and a coefficient matrix per pair
/// of base objects), the oplaxitor `μ`, and the half-braidings `e`.
///
/// Data is indexed by base objects in the domain of `F` (nonzero objects);
/// entries for zero objects are absent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModTensCat {
    name: String,
    base: Arc<PresentedBase>,
    cat: LinearMonCat,
    f_obj: Vec<Option<usize>>,
    f_mor: Vec<Option<Matrix>>,
    mu: Vec<Option<Mor>>,
    e: Vec<Option<Mor>>,
    provenance: Provenance,
}

impl ModTensCat {
    /// Assembles a 0-cell, checking shapes. `f_mor` and `mu` are row-major over
    /// pairs of base objects, `e` over (object of `A`, base object).
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        base: Arc<PresentedBase>,
        cat: LinearMonCat,
        f_obj: Vec<Option<usize>>,
        f_mor: Vec<Option<Matrix>>,
        mu: Vec<Option<Mor>>,
        e: Vec<Option<Mor>>,
        provenance: Provenance,
    ) -> Result<Self, CatError> {
        let nv = base.len();
        let n = cat.len();
        if f_obj.len() != nv || f_mor.len() != nv * nv || mu.len() != nv * nv || e.len() != n * nv {
            return Err(CatError::Malformed("module tensor data does not match object counts".into()));
        }
        let live = |v: usize| !base.is_null(v);
        for (v, &fv) in f_obj.iter().enumerate() {
            match fv {
                Some(x) if x >= n => return Err(CatError::Malformed(format!("F({v}) out of range"))),
                Some(_) if !live(v) => return Err(CatError::Malformed(format!("F is defined on the zero object {v}"))),
                None if live(v) => return Err(CatError::Malformed(format!("F({v}) is missing"))),
                _ => {}
            }
        }
        let fo = |v: usize| f_obj[v].expect("checked above");
        for (u, v) in pairs(nv) {
            let k = u * nv + v;
            let defined = live(u) && live(v);
            match (&f_mor[k], defined) {
                (Some(m), true) => {
                    if m.cols() != base.hom_dim(u, v) || m.rows() != cat.hom_dim(fo(u), fo(v)) {
                        return Err(CatError::Malformed(format!("F on ({u},{v}) has wrong shape")));
                    }
                }
                (None, false) => {}
                _ => return Err(CatError::Malformed(format!("F on ({u},{v}) present exactly when both are nonzero"))),
            }
            let uv = base.tensor_obj(u, v);
            match (&mu[k], defined && live(uv)) {
                (Some(m), true) => {
                    if m.src != fo(uv) || m.dst != cat.tensor_obj(fo(u), fo(v)) {
                        return Err(CatError::Malformed(format!("μ at ({u},{v}) has wrong endpoints")));
                    }
                    cat.check_mor(m)?;
                }
                (None, false) => {}
                _ => return Err(CatError::Malformed(format!("μ at ({u},{v}) present exactly when defined"))),
            }
        }
        for a in 0..n {
            for v in 0..nv {
                match (&e[a * nv + v], live(v)) {
                    (Some(m), true) => {
                        if m.src != cat.tensor_obj(a, fo(v)) || m.dst != cat.tensor_obj(fo(v), a) {
                            return Err(CatError::Malformed(format!("e at ({a},{v}) has wrong endpoints")));
                        }
                        cat.check_mor(m)?;
                    }
                    (None, false) => {}
                    _ => return Err(CatError::Malformed(format!("e at ({a},{v}) present exactly when defined"))),
                }
            }
        }
        Ok(ModTensCat { name: name.into(), base, cat, f_obj, f_mor, mu, e, provenance })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn base(&self) -> &Arc<PresentedBase> {
        &self.base
    }

    /// The ordinary monoidal category `A`.
    pub fn cat(&self) -> &LinearMonCat {
        &self.cat
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Nonzero base objects, the domain of `F`.
    pub fn domain(&self) -> Vec<usize> {
        self.base.objects().filter(|&v| !self.base.is_null(v)).collect()
    }

    pub fn f_obj(&self, v: usize) -> Result<usize, CatError> {
        self.f_obj[v].ok_or_else(|| outside(&self.base, v))
    }

    pub fn f_obj_table(&self) -> &[Option<usize>] {
        &self.f_obj
    }

    pub fn f_mor_table(&self) -> &[Option<Matrix>] {
        &self.f_mor
    }

    pub fn mu_table(&self) -> &[Option<Mor>] {
        &self.mu
    }

    pub fn e_table(&self) -> &[Option<Mor>] {
        &self.e
    }

    /// `F(f)` for a base morphism between nonzero objects.
    pub fn f_mor(&self, f: &Mor) -> Result<Mor, CatError> {
        self.base.check_mor(f)?;
        let m = self.f_mor[f.src * self.base.len() + f.dst].as_ref().ok_or_else(|| outside(&self.base, f.src))?;
        Ok(Mor::new(self.f_obj(f.src)?, self.f_obj(f.dst)?, m.mul_vec(&f.coeffs)?))
    }

    /// `μ_{u,v} : F(uv) → F(u)F(v)`.
    pub fn mu(&self, u: usize, v: usize) -> Result<&Mor, CatError> {
        self.mu[u * self.base.len() + v]
            .as_ref()
            .ok_or_else(|| outside(&self.base, self.base.tensor_obj(u, v)))
    }

    /// `e_{a,F(v)} : a·F(v) → F(v)·a`.
    pub fn e(&self, a: usize, v: usize) -> Result<&Mor, CatError> {
        self.e[a * self.base.len() + v].as_ref().ok_or_else(|| outside(&self.base, v))
    }

    pub fn renamed(&self, name: impl Into<String>) -> Self {
        ModTensCat { name: name.into(), ..self.clone() }
    }

    pub fn with_provenance(&self, provenance: Provenance) -> Self {
        ModTensCat { provenance, ..self.clone() }
    }

    /// A copy with one oplaxitor component replaced, for mutation tests.
    pub fn with_mu(&self, u: usize, v: usize, m: Mor) -> Result<Self, CatError> {
        let mut mu = self.mu.clone();
        mu[u * self.base.len() + v] = Some(m);
        self.rebuilt(self.f_mor.clone(), mu, self.e.clone())
    }

    /// A copy with one half-braiding component replaced, for mutation tests.
    pub fn with_e(&self, a: usize, v: usize, m: Mor) -> Result<Self, CatError> {
        let mut e = self.e.clone();
        e[a * self.base.len() + v] = Some(m);
        self.rebuilt(self.f_mor.clone(), self.mu.clone(), e)
    }

    fn rebuilt(&self, f_mor: Vec<Option<Matrix>>, mu: Vec<Option<Mor>>, e: Vec<Option<Mor>>) -> Result<Self, CatError> {
        Self::new(
            self.name.clone(),
            self.base.clone(),
            self.cat.clone(),
            self.f_obj.clone(),
            f_mor,
            mu,
            e,
            self.provenance.clone(),
        )
    }

    /// Whether every `μ` is invertible, i.e. `F` is strong monoidal.
    pub fn is_tensored(&self) -> bool {
        self.mu.iter().flatten().all(|m| self.cat.is_invertible(m))
    }

    /// The half-braiding of `F(u)F(v)` with `a`: `(e_{a,Fu}⊗id)∘(id⊗e_{a,Fv})`.
    fn e_pair(&self, a: usize, u: usize, v: usize) -> Result<Mor, CatError> {
        let c = &self.cat;
        let (fu, fv) = (self.f_obj(u)?, self.f_obj(v)?);
        let first = c.tensor(self.e(a, u)?, &c.id(fv))?;
        let second = c.tensor(&c.id(fu), self.e(a, v)?)?;
        c.compose(&first, &second)
    }
}

fn outside(base: &PresentedBase, v: usize) -> CatError {
    CatError::ObjectMismatch(format!("base object {} is outside the domain of F", base.cat().name(v)))
}

/// Orientation in which `F` intertwines the base braiding with `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// `μ_{u,v}∘e_{Fu,Fv} = F(β_{u,v})∘μ_{v,u}`.
    Direct,
    /// `μ_{u,v}∘e_{Fv,Fu}⁻¹ = F(β_{u,v})∘μ_{v,u}`.
    Mirror,
}

/// Functoriality of `F`; naturality, coassociativity and strict counitality of
/// `μ`; the half-braiding axioms for `e`; centrality of `F(f)` and of `μ`;
/// and braided compatibility, recording which orientation holds.
pub fn validate_modtens_0cell(m: &ModTensCat) -> ValidationReport {
    let mut rep = ValidationReport::new();
    let c = m.cat();
    let v = &**m.base();
    let dom = m.domain();
    let fo = |x: usize| m.f_obj(x).expect("domain object");
    let one = v.unit();

    rep.record("modtens.unit_object", "F(1) = 1", m.f_obj(one) == Ok(c.unit()), witness!());
    for &x in &dom {
        rep.record_eq("modtens.f_identity", "F(id_v) = id_Fv", m.f_mor(&v.id(x)), Ok(c.id(fo(x))), witness!(v = x));
    }
    for &x in &dom {
        for &y in &dom {
            for &z in &dom {
                for (p, f) in v.basis(x, y).iter().enumerate() {
                    for (q, g) in v.basis(y, z).iter().enumerate() {
                        let lhs = v.compose(f, g).and_then(|fg| m.f_mor(&fg));
                        let rhs = m.f_mor(f).and_then(|a| m.f_mor(g).and_then(|b| c.compose(&a, &b)));
                        rep.record_eq(
                            "modtens.f_compose",
                            "F(f∘g) = F(f)∘F(g)",
                            lhs,
                            rhs,
                            witness!(objs = format!("{x},{y},{z}"), basis = format!("{p},{q}")),
                        );
                    }
                }
            }
        }
    }
    let live = |x: usize| !v.is_null(x);
    for &x in &dom {
        for (check, mu) in [("modtens.mu_unit_left", m.mu(one, x)), ("modtens.mu_unit_right", m.mu(x, one))] {
            rep.record_eq(check, "μ_{1,v} = μ_{v,1} = id", mu.cloned(), Ok(c.id(fo(x))), witness!(v = x));
        }
    }
    for (u, u2) in pairs(v.len()) {
        for (w, w2) in pairs(v.len()) {
            if ![u, u2, w, w2, v.tensor_obj(u, w), v.tensor_obj(u2, w2)].iter().all(|&x| live(x)) {
                continue;
            }
            for (p, f) in v.basis(u, u2).iter().enumerate() {
                for (q, g) in v.basis(w, w2).iter().enumerate() {
                    let lhs = v.tensor(f, g).and_then(|fg| m.f_mor(&fg)).and_then(|x| c.compose(&x, m.mu(u2, w2)?));
                    let rhs = m
                        .f_mor(f)
                        .and_then(|a| m.f_mor(g).and_then(|b| c.tensor(&a, &b)))
                        .and_then(|x| c.compose(m.mu(u, w)?, &x));
                    rep.record_eq(
                        "modtens.mu_naturality",
                        "F(f⊗g)∘μ = μ∘(F(f)⊗F(g))",
                        lhs,
                        rhs,
                        witness!(objs = format!("{u},{u2},{w},{w2}"), basis = format!("{p},{q}")),
                    );
                }
            }
        }
    }
    for (x, y, z) in triples(v.len()) {
        let (xy, yz, xyz) = (v.tensor_obj(x, y), v.tensor_obj(y, z), v.tensor_obj(v.tensor_obj(x, y), z));
        if ![x, y, z, xy, yz, xyz].iter().all(|&o| live(o)) {
            continue;
        }
        let lhs = c.tensor(m.mu(x, y).unwrap(), &c.id(fo(z))).and_then(|t| c.compose(m.mu(xy, z).unwrap(), &t));
        let rhs = c.tensor(&c.id(fo(x)), m.mu(y, z).unwrap()).and_then(|t| c.compose(m.mu(x, yz).unwrap(), &t));
        rep.record_eq(
            "modtens.mu_coassoc",
            "μ_{uv,w}∘(μ_{u,v}⊗id) = μ_{u,vw}∘(id⊗μ_{v,w})",
            lhs,
            rhs,
            witness!(u = x, v = y, w = z),
        );
    }
    for a in c.objects() {
        for &x in &dom {
            let e = m.e(a, x).expect("domain object");
            rep.record("modtens.e_invertible", "e_{a,Fv} invertible", c.is_invertible(e), witness!(a = a, v = x));
        }
    }
    for &x in &dom {
        rep.record_eq("modtens.e_unit", "e_{1,Fv} = id", m.e(c.unit(), x).cloned(), Ok(c.id(fo(x))), witness!(v = x));
    }
    for &x in &dom {
        let fx = fo(x);
        for (a, b) in pairs(c.len()) {
            for (p, g) in c.basis(a, b).iter().enumerate() {
                let lhs = c.tensor(g, &c.id(fx)).and_then(|t| c.compose(&t, m.e(b, x)?));
                let rhs = c.tensor(&c.id(fx), g).and_then(|t| c.compose(m.e(a, x)?, &t));
                rep.record_eq(
                    "modtens.e_naturality",
                    "(g⊗id)∘e_{b,Fv} = e_{a,Fv}∘(id⊗g)",
                    lhs,
                    rhs,
                    witness!(a = a, b = b, v = x, basis = p),
                );
            }
            let lhs = m.e(c.tensor_obj(a, b), x).cloned();
            let rhs = c
                .tensor(&c.id(a), m.e(b, x).unwrap())
                .and_then(|t| c.compose(&t, &c.tensor(m.e(a, x).unwrap(), &c.id(b))?));
            rep.record_eq(
                "modtens.e_multiplicative",
                "e_{ab,Fv} = (id_a⊗e_{b,Fv})∘(e_{a,Fv}⊗id_b)",
                lhs,
                rhs,
                witness!(a = a, b = b, v = x),
            );
        }
    }
    for &x in &dom {
        for &y in &dom {
            for (p, f) in v.basis(x, y).iter().enumerate() {
                for a in c.objects() {
                    let lhs = m.f_mor(f).and_then(|ff| c.compose(&c.tensor(&c.id(a), &ff)?, m.e(a, y)?));
                    let rhs = m.f_mor(f).and_then(|ff| c.compose(m.e(a, x)?, &c.tensor(&ff, &c.id(a))?));
                    rep.record_eq(
                        "modtens.centrality",
                        "(id_a⊗F(f))∘e_{a,Fv} = e_{a,Fu}∘(F(f)⊗id_a)",
                        lhs,
                        rhs,
                        witness!(u = x, v = y, basis = p, a = a),
                    );
                }
            }
        }
    }
    let mut direct = true;
    let mut mirror = true;
    let mut braided_instances = Vec::new();
    for &x in &dom {
        for &y in &dom {
            let xy = v.tensor_obj(x, y);
            if !live(xy) {
                continue;
            }
            for a in c.objects() {
                let lhs = c.tensor(m.mu(x, y).unwrap(), &c.id(a)).and_then(|t| c.compose(m.e(a, xy)?, &t));
                let rhs = m.e_pair(a, x, y).and_then(|t| c.compose(&c.tensor(&c.id(a), m.mu(x, y)?)?, &t));
                rep.record_eq(
                    "modtens.mu_central",
                    "e_{a,F(uv)}∘(μ⊗id_a) = (id_a⊗μ)∘e_{a,FuFv}",
                    lhs,
                    rhs,
                    witness!(u = x, v = y, a = a),
                );
            }
            let (fx, fy) = (fo(x), fo(y));
            let target = m.f_mor(v.braid(x, y)).and_then(|fb| c.compose(&fb, m.mu(y, x)?));
            let d = c.compose(m.mu(x, y).unwrap(), m.e(fx, y).unwrap());
            let mi = c
                .inverse(m.e(fy, x).unwrap())
                .ok_or_else(|| CatError::Malformed("e not invertible".into()))
                .and_then(|inv| c.compose(m.mu(x, y).unwrap(), &inv));
            let d_ok = matches!((&d, &target), (Ok(p), Ok(q)) if p == q);
            let m_ok = matches!((&mi, &target), (Ok(p), Ok(q)) if p == q);
            direct &= d_ok;
            mirror &= m_ok;
            braided_instances.push((x, y, d_ok || m_ok));
        }
    }
    let eq = "μ_{u,v}∘e_{Fu,Fv} = F(β_{u,v})∘μ_{v,u} (or the mirror with e⁻¹_{Fv,Fu})";
    for (x, y, ok) in braided_instances {
        rep.record("modtens.braided", eq, ok && (direct || mirror), witness!(u = x, v = y));
    }
    let orientation = match (direct, mirror) {
        (true, true) => "orientation=both",
        (true, false) => "orientation=direct",
        (false, true) => "orientation=mirror",
        (false, false) => "orientation=neither",
    };
    rep.note("modtens.braided", eq, orientation);
    rep
}

/// Which braided orientations a 0-cell satisfies, if any.
pub fn braided_orientations(m: &ModTensCat) -> Vec<Orientation> {
    let rep = validate_modtens_0cell(m);
    let notes = rep.notes("modtens.braided");
    let note = notes.first().map(String::as_str).unwrap_or("");
    match note {
        "orientation=both" => vec![Orientation::Direct, Orientation::Mirror],
        "orientation=direct" => vec![Orientation::Direct],
        "orientation=mirror" => vec![Orientation::Mirror],
        _ => vec![],
    }
}

/// A 1-cell `(R, ρ, r)`: a lax monoidal functor with laxitor
/// `ρ_{a,b} : R(a)R(b) → R(ab)` and action coherence `r_v : F_B(v) → R(F_A(v))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModTensCell1 {
    name: String,
    source: Arc<ModTensCat>,
    target: Arc<ModTensCat>,
    functor: OrdFunctor,
    rho: Vec<Mor>,
    r: Vec<Option<Mor>>,
    strong: bool,
}

impl ModTensCell1 {
    pub fn new(
        name: impl Into<String>,
        source: Arc<ModTensCat>,
        target: Arc<ModTensCat>,
        functor: OrdFunctor,
        rho: Vec<Mor>,
        r: Vec<Option<Mor>>,
        strong: bool,
    ) -> Result<Self, CatError> {
        if source.base() != target.base() {
            return Err(CatError::Malformed("1-cell endpoints have different bases".into()));
        }
        let (a, b) = (source.cat(), target.cat());
        functor.check_shape(a, b)?;
        let n = a.len();
        if rho.len() != n * n {
            return Err(CatError::Malformed("laxitor needs one entry per object pair".into()));
        }
        for (x, y) in pairs(n) {
            let m = &rho[x * n + y];
            if m.src != b.tensor_obj(functor.obj(x), functor.obj(y)) || m.dst != functor.obj(a.tensor_obj(x, y)) {
                return Err(CatError::Malformed(format!("laxitor at ({x},{y}) has wrong endpoints")));
            }
            b.check_mor(m)?;
        }
        let v = source.base();
        if r.len() != v.len() {
            return Err(CatError::Malformed("action coherence needs one entry per base object".into()));
        }
        for (x, rx) in r.iter().enumerate() {
            match (rx, v.is_null(x)) {
                (Some(m), false) => {
                    if m.src != target.f_obj(x)? || m.dst != functor.obj(source.f_obj(x)?) {
                        return Err(CatError::Malformed(format!("r at {x} has wrong endpoints")));
                    }
                    b.check_mor(m)?;
                }
                (None, true) => {}
                _ => return Err(CatError::Malformed(format!("r at {x} present exactly on nonzero objects"))),
            }
        }
        Ok(ModTensCell1 { name: name.into(), source, target, functor, rho, r, strong })
    }

    /// Identity functor, identity laxitor and identity action coherence.
    pub fn identity(m: Arc<ModTensCat>) -> Self {
        let c = m.cat();
        let n = c.len();
        let rho = pairs(n).map(|(a, b)| c.id(c.tensor_obj(a, b))).collect();
        let r = (0..m.base().len()).map(|v| m.f_obj(v).ok().map(|x| c.id(x))).collect();
        ModTensCell1 {
            name: format!("id_{}", m.name()),
            functor: OrdFunctor::identity(c),
            source: m.clone(),
            target: m,
            rho,
            r,
            strong: true,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(&self, name: impl Into<String>) -> Self {
        ModTensCell1 { name: name.into(), ..self.clone() }
    }

    pub fn source(&self) -> &Arc<ModTensCat> {
        &self.source
    }

    pub fn target(&self) -> &Arc<ModTensCat> {
        &self.target
    }

    pub fn functor(&self) -> &OrdFunctor {
        &self.functor
    }

    pub fn obj(&self, a: usize) -> usize {
        self.functor.obj(a)
    }

    pub fn apply(&self, f: &Mor) -> Result<Mor, CatError> {
        self.functor.apply(f)
    }

    pub fn rho(&self, a: usize, b: usize) -> &Mor {
        &self.rho[a * self.source.cat().len() + b]
    }

    pub fn rhos(&self) -> &[Mor] {
        &self.rho
    }

    pub fn r(&self, v: usize) -> Result<&Mor, CatError> {
        self.r[v].as_ref().ok_or_else(|| outside(self.source.base(), v))
    }

    pub fn rs(&self) -> &[Option<Mor>] {
        &self.r
    }

    pub fn is_strong(&self) -> bool {
        self.strong
    }

    /// A copy with one action-coherence component replaced, for mutation tests.
    pub fn with_r(&self, v: usize, m: Mor) -> Result<Self, CatError> {
        let mut r = self.r.clone();
        r[v] = Some(m);
        Self::new(self.name.clone(), self.source.clone(), self.target.clone(), self.functor.clone(), self.rho.clone(), r, self.strong)
    }
}

/// Lax monoidality of `(R, ρ)`, monoidal naturality of `r`, and the
/// half-braiding and action coherences.
pub fn validate_modtens_1cell(cell: &ModTensCell1) -> ValidationReport {
    let mut rep = ValidationReport::new();
    let (sa, sb) = (&**cell.source(), &**cell.target());
    let (a, b) = (sa.cat(), sb.cat());
    let v = &**sa.base();
    let n = a.len();
    let mut functor_rep = ValidationReport::new();
    cell.functor().validate(a, b, &mut functor_rep);
    rep.absorb("cell1", functor_rep);
    rep.record("cell1.unit_object", "R(1_A) = 1_B", cell.obj(a.unit()) == b.unit(), witness!());
    for x in 0..n {
        let rx = cell.obj(x);
        rep.record("cell1.laxitor_unit", "ρ_{1,a} = ρ_{a,1} = id", *cell.rho(a.unit(), x) == b.id(rx) && *cell.rho(x, a.unit()) == b.id(rx), witness!(a = x));
    }
    for (x, x2) in pairs(n) {
        for (y, y2) in pairs(n) {
            for (p, f) in a.basis(x, x2).iter().enumerate() {
                for (q, g) in a.basis(y, y2).iter().enumerate() {
                    let lhs = cell
                        .apply(f)
                        .and_then(|rf| b.tensor(&rf, &cell.apply(g)?))
                        .and_then(|t| b.compose(&t, cell.rho(x2, y2)));
                    let rhs = a.tensor(f, g).and_then(|fg| cell.apply(&fg)).and_then(|t| b.compose(cell.rho(x, y), &t));
                    rep.record_eq(
                        "cell1.laxitor_naturality",
                        "(R(f)⊗R(g))∘ρ = ρ∘R(f⊗g)",
                        lhs,
                        rhs,
                        witness!(objs = format!("{x},{x2},{y},{y2}"), basis = format!("{p},{q}")),
                    );
                }
            }
        }
    }
    for (x, y, z) in triples(n) {
        let (rx, rz) = (cell.obj(x), cell.obj(z));
        let (xy, yz) = (a.tensor_obj(x, y), a.tensor_obj(y, z));
        let lhs = b.tensor(cell.rho(x, y), &b.id(rz)).and_then(|t| b.compose(&t, cell.rho(xy, z)));
        let rhs = b.tensor(&b.id(rx), cell.rho(y, z)).and_then(|t| b.compose(&t, cell.rho(x, yz)));
        rep.record_eq(
            "cell1.laxitor_assoc",
            "(ρ_{a,b}⊗id)∘ρ_{ab,c} = (id⊗ρ_{b,c})∘ρ_{a,bc}",
            lhs,
            rhs,
            witness!(a = x, b = y, c = z),
        );
    }
    if cell.is_strong() {
        for (x, y) in pairs(n) {
            rep.record("cell1.laxitor_invertible", "ρ_{a,b} invertible", b.is_invertible(cell.rho(x, y)), witness!(a = x, b = y));
        }
    }
    let dom = sa.domain();
    let one = v.unit();
    rep.record_eq("cell1.r_unit", "r_1 = id", cell.r(one).cloned(), Ok(b.id(b.unit())), witness!());
    for &x in &dom {
        for &y in &dom {
            for (p, f) in v.basis(x, y).iter().enumerate() {
                let lhs = sb.f_mor(f).and_then(|fb| b.compose(&fb, cell.r(y)?));
                let rhs = sa.f_mor(f).and_then(|fa| cell.apply(&fa)).and_then(|t| b.compose(cell.r(x)?, &t));
                rep.record_eq(
                    "cell1.r_naturality",
                    "F_B(f)∘r_v = r_u∘R(F_A(f))",
                    lhs,
                    rhs,
                    witness!(u = x, v = y, basis = p),
                );
            }
        }
    }
    for &x in &dom {
        let fa = sa.f_obj(x).expect("domain object");
        for y in 0..n {
            let ry = cell.obj(y);
            let lhs = (|| {
                let e = sb.e(ry, x)?;
                let t = b.tensor(cell.r(x)?, &b.id(ry))?;
                b.compose_all(&[e, &t, cell.rho(fa, y)])
            })();
            let rhs = (|| {
                let t = b.tensor(&b.id(ry), cell.r(x)?)?;
                let re = cell.apply(sa.e(y, x)?)?;
                b.compose_all(&[&t, cell.rho(y, fa), &re])
            })();
            rep.record_eq(
                "cell1.half_braiding_coherence",
                "e_{Ra,F_B v}∘(r_v⊗id)∘ρ_{F_A v,a} = (id⊗r_v)∘ρ_{a,F_A v}∘R(e_{a,F_A v})",
                lhs,
                rhs,
                witness!(a = y, v = x),
            );
        }
    }
    for &x in &dom {
        for &y in &dom {
            let xy = v.tensor_obj(x, y);
            if v.is_null(xy) {
                continue;
            }
            let lhs = (|| {
                let rmu = cell.apply(sa.mu(x, y)?)?;
                b.compose(cell.r(xy)?, &rmu)
            })();
            let rhs = (|| {
                let (fx, fy) = (sa.f_obj(x)?, sa.f_obj(y)?);
                let rr = b.tensor(cell.r(x)?, cell.r(y)?)?;
                b.compose_all(&[sb.mu(x, y)?, &rr, cell.rho(fx, fy)])
            })();
            rep.record_eq(
                "cell1.action_coherence",
                "r_uv∘R(μ^A_{u,v}) = μ^B_{u,v}∘(r_u⊗r_v)∘ρ_{F_A u,F_A v}",
                lhs,
                rhs,
                witness!(u = x, v = y),
            );
        }
    }
    rep
}

/// Composite `R` then `S`: laxitor `σ_{Ra,Rb}∘S(ρ_{a,b})`, coherence `s_v∘S(r_v)`.
pub fn compose_cells1(c1: &ModTensCell1, c2: &ModTensCell1) -> Result<ModTensCell1, CatError> {
    if c1.target() != c2.source() {
        return Err(CatError::ObjectMismatch(format!("{} does not end where {} starts", c1.name(), c2.name())));
    }
    let a = c1.source().cat();
    let c = c2.target().cat();
    let functor = c1.functor().then(c2.functor())?;
    let rho = pairs(a.len())
        .map(|(x, y)| c.compose(c2.rho(c1.obj(x), c1.obj(y)), &c2.apply(c1.rho(x, y))?))
        .collect::<Result<Vec<_>, _>>()?;
    let r = (0..c1.source().base().len())
        .map(|v| match (c1.rs()[v].as_ref(), c2.rs()[v].as_ref()) {
            (Some(r1), Some(s)) => Ok(Some(c.compose(s, &c2.apply(r1)?)?)),
            _ => Ok(None),
        })
        .collect::<Result<Vec<_>, CatError>>()?;
    ModTensCell1::new(
        format!("{}.{}", c1.name(), c2.name()),
        c1.source().clone(),
        c2.target().clone(),
        functor,
        rho,
        r,
        c1.is_strong() && c2.is_strong(),
    )
}

/// A 2-cell: components `Θ_a : R(a) → S(a)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModTensCell2 {
    name: String,
    source: Arc<ModTensCell1>,
    target: Arc<ModTensCell1>,
    components: Vec<Mor>,
}

impl ModTensCell2 {
    pub fn new(
        name: impl Into<String>,
        source: Arc<ModTensCell1>,
        target: Arc<ModTensCell1>,
        components: Vec<Mor>,
    ) -> Result<Self, CatError> {
        if source.source() != target.source() || source.target() != target.target() {
            return Err(CatError::Malformed("2-cell endpoints are not parallel".into()));
        }
        let b = target.target().cat();
        if components.len() != source.source().cat().len() {
            return Err(CatError::Malformed("2-cell needs one component per object".into()));
        }
        for (a, m) in components.iter().enumerate() {
            if m.src != source.obj(a) || m.dst != target.obj(a) {
                return Err(CatError::Malformed(format!("2-cell component at {a} has wrong endpoints")));
            }
            b.check_mor(m)?;
        }
        Ok(ModTensCell2 { name: name.into(), source, target, components })
    }

    pub fn identity(c: Arc<ModTensCell1>) -> Self {
        let b = c.target().cat();
        let components = (0..c.source().cat().len()).map(|a| b.id(c.obj(a))).collect();
        ModTensCell2 { name: format!("id_{}", c.name()), source: c.clone(), target: c, components }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(&self, name: impl Into<String>) -> Self {
        ModTensCell2 { name: name.into(), ..self.clone() }
    }

    pub fn source(&self) -> &Arc<ModTensCell1> {
        &self.source
    }

    pub fn target(&self) -> &Arc<ModTensCell1> {
        &self.target
    }

    pub fn component(&self, a: usize) -> &Mor {
        &self.components[a]
    }

    pub fn components(&self) -> &[Mor] {
        &self.components
    }
}

/// Naturality, monoidality and the coherence `r_v∘Θ_{F_A v} = s_v`.
pub fn validate_modtens_2cell(t: &ModTensCell2) -> ValidationReport {
    let mut rep = ValidationReport::new();
    let (r, s) = (&**t.source(), &**t.target());
    let (a, b) = (r.source().cat(), r.target().cat());
    let n = a.len();
    for (x, y) in pairs(n) {
        for (p, f) in a.basis(x, y).iter().enumerate() {
            let lhs = r.apply(f).and_then(|rf| b.compose(&rf, t.component(y)));
            let rhs = s.apply(f).and_then(|sf| b.compose(t.component(x), &sf));
            rep.record_eq("cell2.naturality", "R(f)∘Θ_b = Θ_a∘S(f)", lhs, rhs, witness!(a = x, b = y, basis = p));
        }
    }
    for (x, y) in pairs(n) {
        let lhs = b.compose(r.rho(x, y), t.component(a.tensor_obj(x, y)));
        let rhs = b.tensor(t.component(x), t.component(y)).and_then(|m| b.compose(&m, s.rho(x, y)));
        rep.record_eq("cell2.monoidal", "ρ_{a,b}∘Θ_ab = (Θ_a⊗Θ_b)∘σ_{a,b}", lhs, rhs, witness!(a = x, b = y));
    }
    let src = r.source();
    for x in src.domain() {
        let lhs = src.f_obj(x).and_then(|fx| b.compose(r.r(x)?, t.component(fx)));
        rep.record_eq("cell2.action", "r_v∘Θ_{F_A v} = s_v", lhs, s.r(x).cloned(), witness!(v = x));
    }
    rep
}

/// `Θ` then `φ`, componentwise.
pub fn vertical_compose_cells2(theta: &ModTensCell2, phi: &ModTensCell2) -> Result<ModTensCell2, CatError> {
    if theta.target() != phi.source() {
        return Err(CatError::ObjectMismatch(format!("{} does not end where {} starts", theta.name(), phi.name())));
    }
    let b = theta.source().target().cat();
    let components = (0..theta.components().len())
        .map(|a| b.compose(theta.component(a), phi.component(a)))
        .collect::<Result<Vec<_>, _>>()?;
    ModTensCell2::new(format!("{}.{}", theta.name(), phi.name()), theta.source().clone(), phi.target().clone(), components)
}

/// Horizontal composite: `(Θφ)_a = φ_{R₁a}` followed by `S₂(Θ_a)`.
pub fn horizontal_compose_cells2(theta: &ModTensCell2, phi: &ModTensCell2) -> Result<ModTensCell2, CatError> {
    let (r1, r2) = (theta.source(), theta.target());
    let (s1, s2) = (phi.source(), phi.target());
    if r1.target() != s1.source() {
        return Err(CatError::ObjectMismatch(format!("{} and {} are not composable", theta.name(), phi.name())));
    }
    let c = s1.target().cat();
    let components = (0..theta.components().len())
        .map(|a| c.compose(phi.component(r1.obj(a)), &s2.apply(theta.component(a))?))
        .collect::<Result<Vec<_>, _>>()?;
    let src = Arc::new(compose_cells1(r1, s1)?);
    let dst = Arc::new(compose_cells1(r2, s2)?);
    ModTensCell2::new(format!("{}*{}", theta.name(), phi.name()), src, dst, components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivalence::{p0, Lifts};
    use crate::fixtures;
    use crate::scalar::int;

    #[test]
    fn computed_zero_cells_validate() {
        for c in fixtures::enriched_fixtures() {
            let m = p0(c.clone()).unwrap().modtens;
            let rep = validate_modtens_0cell(&m);
            assert!(rep.passed(), "{}: {rep}", c.name());
            assert_eq!(rep.notes("modtens.braided").len(), 1);
        }
    }

    #[test]
    fn non_symmetric_base_fixes_the_direct_orientation() {
        let m = p0(fixtures::vhat_zz22()).unwrap().modtens;
        assert_eq!(braided_orientations(&m), vec![Orientation::Direct]);
    }

    #[test]
    fn broken_coassociativity_is_located() {
        let m = p0(fixtures::vhat_zz22()).unwrap().modtens;
        let bad = m.with_mu(1, 2, m.mu(1, 2).unwrap().scale(&int(2))).unwrap();
        let rep = validate_modtens_0cell(&bad);
        assert!(rep.failed_checks().contains(&"modtens.mu_coassoc"), "{rep}");
        assert!(rep.render().contains("u=1 v=2"), "{}", rep.render());
    }

    #[test]
    fn flipped_half_braiding_breaks_centrality() {
        let m = p0(fixtures::vhat_triv2()).unwrap().modtens;
        let bad = m.with_e(1, 1, m.e(1, 1).unwrap().neg()).unwrap();
        assert!(validate_modtens_0cell(&bad).failed_checks().contains(&"modtens.centrality"));
    }

    #[test]
    fn one_cells() {
        let mut lifts = Lifts::new();
        for f in [fixtures::incl(), fixtures::proj(), fixtures::twist(), fixtures::dbl(), fixtures::id_functor(fixtures::pt2())] {
            let c = lifts.p1(&f).unwrap();
            let rep = validate_modtens_1cell(&c);
            assert!(rep.passed(), "{}: {rep}", f.name());
            assert!(rep.instances("cell1.half_braiding_coherence") > 0);
            assert!(rep.instances("cell1.action_coherence") > 0);
        }
        let id = ModTensCell1::identity(lifts.get(&fixtures::vhat_svec()).unwrap().modtens);
        assert!(validate_modtens_1cell(&id).passed());
    }

    #[test]
    fn scaled_action_coherence_fails() {
        let mut lifts = Lifts::new();
        let c = lifts.p1(&fixtures::incl()).unwrap();
        let bad = c.with_r(0, c.r(0).unwrap().scale(&int(2))).unwrap();
        assert!(validate_modtens_1cell(&bad).failed_checks().contains(&"cell1.action_coherence"));
    }

    #[test]
    fn two_cells() {
        let mut lifts = Lifts::new();
        for t in [fixtures::sign(), fixtures::sign4(), fixtures::dsign()] {
            let c = lifts.p2(&t).unwrap();
            assert!(validate_modtens_2cell(&c).passed(), "{}", t.name());
        }
        let c = lifts.p2(&fixtures::double_x()).unwrap();
        assert_eq!(validate_modtens_2cell(&c).failed_checks(), vec!["cell2.monoidal"]);
        let id = ModTensCell2::identity(Arc::new(lifts.p1(&fixtures::twist()).unwrap()));
        assert!(validate_modtens_2cell(&id).passed());
    }

    #[test]
    fn one_cell_composition_is_associative_and_unital() {
        let mut lifts = Lifts::new();
        let (i, t, d) = (
            lifts.p1(&fixtures::incl()).unwrap(),
            lifts.p1(&fixtures::twist()).unwrap(),
            lifts.p1(&fixtures::dbl()).unwrap(),
        );
        let left = compose_cells1(&compose_cells1(&i, &t).unwrap(), &d).unwrap();
        let right = compose_cells1(&i, &compose_cells1(&t, &d).unwrap()).unwrap();
        assert_eq!(left.functor(), right.functor());
        assert_eq!(left.rhos(), right.rhos());
        assert_eq!(left.rs(), right.rs());
        assert!(validate_modtens_1cell(&left).passed());
        let unit = ModTensCell1::identity(t.source().clone());
        let composed = compose_cells1(&unit, &t).unwrap();
        assert_eq!((composed.functor(), composed.rhos(), composed.rs()), (t.functor(), t.rhos(), t.rs()));
    }

    #[test]
    fn sign_squared_is_trivial_at_x() {
        let mut lifts = Lifts::new();
        let s = lifts.p2(&fixtures::sign()).unwrap();
        let h = horizontal_compose_cells2(&s, &s).unwrap();
        assert_eq!(h.component(1).coeffs, vec![int(1)]);
        let v = vertical_compose_cells2(&s, &s).unwrap();
        assert_eq!(v.component(1).coeffs, vec![int(1)]);
    }
}
