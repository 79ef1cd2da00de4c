//! The tensoring adjunction `A(a·F(v) → b) ≅ V(v → 𝒜(a→b))`.
//!
//! The left adjoint `F` is found by a deterministic representability search;
//! everything else (counit, `F` on morphisms, the oplaxitor `μ`, the
//! half-braidings `e`) is obtained by transporting explicit base morphisms
//! through the mate bijection.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::category::{pairs, triples, CatError, LinearMonCat, Mor};
use crate::enriched::{underlying, VMonCat};
use crate::report::ValidationReport;
use crate::scalar::{LinalgError, Matrix};
use crate::witness;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MateError {
    #[error("not weakly tensored: no representing object found for base object {0}")]
    NotWeaklyTensored(String),
    #[error("base object {0} is a zero object and lies outside the domain of the left adjoint")]
    OutsideDomain(String),
    #[error("mate correspondence is not bijective at ({a}, {v}, {b})")]
    NotBijective { a: String, v: String, b: String },
    #[error(transparent)]
    Cat(#[from] CatError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// The computed left adjoint of `x ↦ 𝒜(1→x)` together with its unit and the
/// mate matrices for every `(a, v, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorAdjunction {
    cat: Arc<VMonCat>,
    under: LinearMonCat,
    f_obj: Vec<Option<usize>>,
    eta: Vec<Option<Mor>>,
    bwd: Vec<Option<Matrix>>,
    fwd: Vec<Option<Matrix>>,
}

/// Base objects with a nonzero identity; zero objects have no image under `F`.
pub fn domain_objects(cat: &VMonCat) -> Vec<usize> {
    let v = cat.base();
    v.objects().filter(|&x| !v.is_null(x)).collect()
}

/// Candidate units for the representability search, in schedule order: the
/// basis vectors of `V(v → 𝒜(1→c))`, then their pairwise sums.
fn eta_schedule(dim: usize, src: usize, dst: usize) -> Vec<Mor> {
    if dim == 0 {
        return vec![Mor::zero(src, dst, 0)];
    }
    let basis: Vec<Mor> = (0..dim).map(|k| Mor::basis(src, dst, dim, k)).collect();
    let mut out = basis.clone();
    for i in 0..dim {
        for j in i + 1..dim {
            out.push(basis[i].add(&basis[j]));
        }
    }
    out
}

/// `g ↦ η∘(id⊗g)∘comp_{1,c,x}` from `A(c→x)` to `V(v → 𝒜(1→x))`.
fn representing_matrix(cat: &VMonCat, eta: &Mor, c: usize, x: usize) -> Result<Matrix, CatError> {
    let v = &**cat.base();
    let u = cat.unit();
    let rows = v.hom_dim(eta.src, cat.hom(u, x));
    let cols = v
        .basis(v.unit(), cat.hom(c, x))
        .iter()
        .map(|g| {
            let m = v.tensor(&v.id(cat.hom(u, c)), g)?;
            v.compose_all(&[eta, &m, cat.comp(u, c, x)]).map(|r| r.coeffs)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_columns(rows, &cols)?)
}

/// Searches, for each base object `v` in the domain, the first object `c` in
/// index order and the first unit `η` in the schedule making every induced map
/// `A(c→x) → V(v → 𝒜(1→x))` invertible.
pub fn compute_adjoint(cat: Arc<VMonCat>) -> Result<TensorAdjunction, MateError> {
    let under = underlying(&cat)?;
    let v = cat.base().clone();
    let n = cat.len();
    let nv = v.len();
    let u = cat.unit();
    let mut f_obj = vec![None; nv];
    let mut eta = vec![None; nv];
    for x in domain_objects(&cat) {
        'search: for c in 0..n {
            let dims_match = (0..n).all(|y| under.hom_dim(c, y) == v.hom_dim(x, cat.hom(u, y)));
            if !dims_match {
                continue;
            }
            let target = cat.hom(u, c);
            for candidate in eta_schedule(v.hom_dim(x, target), x, target) {
                let mut ok = true;
                for y in 0..n {
                    let m = representing_matrix(&cat, &candidate, c, y)?;
                    if !crate::scalar::is_invertible(&m) && !(m.rows() == 0 && m.cols() == 0) {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    f_obj[x] = Some(c);
                    eta[x] = Some(candidate);
                    break 'search;
                }
            }
        }
        if f_obj[x].is_none() {
            return Err(MateError::NotWeaklyTensored(v.cat().name(x).to_string()));
        }
    }
    let mut adj = TensorAdjunction { cat, under, f_obj, eta, bwd: Vec::new(), fwd: Vec::new() };
    adj.build_mate_matrices()?;
    Ok(adj)
}

impl TensorAdjunction {
    fn slot(&self, a: usize, v: usize, b: usize) -> usize {
        let (n, nv) = (self.cat.len(), self.cat.base().len());
        (a * nv + v) * n + b
    }

    fn build_mate_matrices(&mut self) -> Result<(), MateError> {
        let n = self.cat.len();
        let nv = self.cat.base().len();
        let mut bwd = vec![None; n * nv * n];
        let mut fwd = vec![None; n * nv * n];
        for v in domain_objects(&self.cat) {
            let fv = self.f_obj(v)?;
            for (a, b) in pairs(n) {
                let src = self.under.tensor_obj(a, fv);
                let rows = self.cat.base().hom_dim(v, self.cat.hom(a, b));
                let cols = self
                    .under
                    .basis(src, b)
                    .iter()
                    .map(|g| self.mate_bwd_formula(a, v, b, g).map(|m| m.coeffs))
                    .collect::<Result<Vec<_>, _>>()?;
                let m = Matrix::from_columns(rows, &cols)?;
                let inv = if m.rows() == 0 && m.cols() == 0 {
                    Some(Matrix::zeros(0, 0))
                } else {
                    m.inverse()
                };
                let inv = inv.ok_or_else(|| MateError::NotBijective {
                    a: self.cat.object_name(a).to_string(),
                    v: self.cat.base().cat().name(v).to_string(),
                    b: self.cat.object_name(b).to_string(),
                })?;
                let k = self.slot(a, v, b);
                bwd[k] = Some(m);
                fwd[k] = Some(inv);
            }
        }
        self.bwd = bwd;
        self.fwd = fwd;
        Ok(())
    }

    /// `η_v ∘ (j_a⊗id)∘⊗_{a,1,a,Fv} ∘ (id⊗g)∘comp_{a,aFv,b}`.
    fn mate_bwd_formula(&self, a: usize, v: usize, b: usize, g: &Mor) -> Result<Mor, MateError> {
        let c = &*self.cat;
        let base = &**c.base();
        let fv = self.f_obj(v)?;
        let afv = c.tensor_obj(a, fv);
        let whisker = base.compose(&base.tensor(c.j(a), &base.id(c.hom(c.unit(), fv)))?, c.tens(a, c.unit(), a, fv))?;
        let post = base.compose(&base.tensor(&base.id(c.hom(a, afv)), &c.as_graded(g))?, c.comp(a, afv, b))?;
        Ok(base.compose_all(&[self.eta(v)?, &whisker, &post])?)
    }

    pub fn cat(&self) -> &Arc<VMonCat> {
        &self.cat
    }

    /// The underlying monoidal category `A`.
    pub fn under(&self) -> &LinearMonCat {
        &self.under
    }

    pub fn domain(&self) -> Vec<usize> {
        domain_objects(&self.cat)
    }

    pub fn f_obj(&self, v: usize) -> Result<usize, MateError> {
        self.f_obj[v].ok_or_else(|| MateError::OutsideDomain(self.cat.base().cat().name(v).to_string()))
    }

    /// `F` on objects, `None` on zero objects.
    pub fn f_obj_table(&self) -> &[Option<usize>] {
        &self.f_obj
    }

    /// The unit `η_v : v → 𝒜(1→F(v))`.
    pub fn eta(&self, v: usize) -> Result<&Mor, MateError> {
        self.eta[v].as_ref().ok_or_else(|| MateError::OutsideDomain(self.cat.base().cat().name(v).to_string()))
    }

    fn matrix<'t>(&self, table: &'t [Option<Matrix>], a: usize, v: usize, b: usize) -> Result<&'t Matrix, MateError> {
        table[self.slot(a, v, b)]
            .as_ref()
            .ok_or_else(|| MateError::OutsideDomain(self.cat.base().cat().name(v).to_string()))
    }

    /// Mate of `f : v → 𝒜(a→b)`, a morphism `a·F(v) → b` of `A`.
    pub fn mate_fwd(&self, a: usize, v: usize, b: usize, f: &Mor) -> Result<Mor, MateError> {
        let base = self.cat.base();
        if f.src != v || f.dst != self.cat.hom(a, b) {
            return Err(CatError::ObjectMismatch(format!(
                "mate_fwd expects a morphism {} → 𝒜({}→{})",
                base.cat().name(v),
                self.cat.object_name(a),
                self.cat.object_name(b)
            ))
            .into());
        }
        base.check_mor(f)?;
        let coeffs = self.matrix(&self.fwd, a, v, b)?.mul_vec(&f.coeffs)?;
        Ok(Mor::new(self.under.tensor_obj(a, self.f_obj(v)?), b, coeffs))
    }

    /// Mate of `g : a·F(v) → b`, a base morphism `v → 𝒜(a→b)`.
    pub fn mate_bwd(&self, a: usize, v: usize, b: usize, g: &Mor) -> Result<Mor, MateError> {
        if g.src != self.under.tensor_obj(a, self.f_obj(v)?) || g.dst != b {
            return Err(CatError::ObjectMismatch(format!(
                "mate_bwd expects a morphism {}·F({}) → {}",
                self.cat.object_name(a),
                self.cat.base().cat().name(v),
                self.cat.object_name(b)
            ))
            .into());
        }
        self.under.check_mor(g)?;
        let coeffs = self.matrix(&self.bwd, a, v, b)?.mul_vec(&g.coeffs)?;
        Ok(Mor::new(v, self.cat.hom(a, b), coeffs))
    }

    /// `ε_{a→b} : a·F(𝒜(a→b)) → b`, the mate of the identity on the hom object.
    pub fn counit(&self, a: usize, b: usize) -> Result<Mor, MateError> {
        let h = self.cat.hom(a, b);
        self.mate_fwd(a, h, b, &self.cat.base().id(h))
    }

    /// `F(f)` for a base morphism `f : u → v`: the mate of `f∘η_v`.
    pub fn f_mor(&self, f: &Mor) -> Result<Mor, MateError> {
        let base = self.cat.base();
        let fv = self.f_obj(f.dst)?;
        let g = base.compose(f, self.eta(f.dst)?)?;
        self.mate_fwd(self.cat.unit(), f.src, fv, &g)
    }

    /// `μ_{u,v} : F(uv) → F(u)F(v)`, the mate of `(η_u⊗η_v)∘⊗`.
    pub fn oplaxitor(&self, u: usize, v: usize) -> Result<Mor, MateError> {
        let c = &*self.cat;
        let base = &**c.base();
        let (fu, fv) = (self.f_obj(u)?, self.f_obj(v)?);
        let one = c.unit();
        let g = base.compose(&base.tensor(self.eta(u)?, self.eta(v)?)?, c.tens(one, one, fu, fv))?;
        self.mate_fwd(one, base.tensor_obj(u, v), c.tensor_obj(fu, fv), &g)
    }

    /// `e_{a,F(v)} : a·F(v) → F(v)·a`, the mate of `(η_v⊗j_a)∘⊗`.
    pub fn half_braiding(&self, a: usize, v: usize) -> Result<Mor, MateError> {
        let c = &*self.cat;
        let base = &**c.base();
        let fv = self.f_obj(v)?;
        let g = base.compose(&base.tensor(self.eta(v)?, c.j(a))?, c.tens(c.unit(), a, fv, a))?;
        self.mate_fwd(a, v, c.tensor_obj(fv, a), &g)
    }

    /// Whether every oplaxitor component is invertible.
    pub fn is_tensored(&self) -> Result<bool, MateError> {
        let base = self.cat.base();
        for u in self.domain() {
            for v in self.domain() {
                if base.is_null(base.tensor_obj(u, v)) {
                    continue;
                }
                if !self.under.is_invertible(&self.oplaxitor(u, v)?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `Tr(f) = (id⊗f)∘comp` for `f ∈ A(b→c)`, viewed as `𝒜(a→b) → 𝒜(a→c)`.
    pub fn post(&self, a: usize, f: &Mor) -> Result<Mor, MateError> {
        let c = &*self.cat;
        let base = &**c.base();
        Ok(base.compose(&base.tensor(&base.id(c.hom(a, f.src)), &c.as_graded(f))?, c.comp(a, f.src, f.dst))?)
    }
}

/// Bijectivity of the mate correspondence on every basis vector, the unit
/// slots of `μ`, functoriality of `F`, and both triangle identities.
pub fn validate_adjunction(adj: &TensorAdjunction) -> ValidationReport {
    let mut rep = ValidationReport::new();
    let c = &**adj.cat();
    let base = &**c.base();
    let a_cat = adj.under();
    let n = c.len();
    let dom = adj.domain();
    for &v in &dom {
        for (a, b) in pairs(n) {
            for (k, f) in base.basis(v, c.hom(a, b)).iter().enumerate() {
                let back = adj.mate_fwd(a, v, b, f).and_then(|g| adj.mate_bwd(a, v, b, &g));
                rep.record_eq("mates.bwd_fwd", "mate(mate(f)) = f", back, Ok(f.clone()), witness!(a = a, v = v, b = b, basis = k));
            }
            let fv = adj.f_obj(v).expect("domain object");
            for (k, g) in a_cat.basis(a_cat.tensor_obj(a, fv), b).iter().enumerate() {
                let back = adj.mate_bwd(a, v, b, g).and_then(|f| adj.mate_fwd(a, v, b, &f));
                rep.record_eq("mates.fwd_bwd", "mate(mate(g)) = g", back, Ok(g.clone()), witness!(a = a, v = v, b = b, basis = k));
            }
        }
    }
    let one = base.unit();
    for &v in &dom {
        let fv = adj.f_obj(v).expect("domain object");
        for (check, mu) in [("oplaxitor.unit_left", adj.oplaxitor(one, v)), ("oplaxitor.unit_right", adj.oplaxitor(v, one))] {
            rep.record_eq(check, "μ_{1,v} = μ_{v,1} = id", mu, Ok(a_cat.id(fv)), witness!(v = v));
        }
        rep.record_eq("functor_f.identity", "F(id_v) = id_Fv", adj.f_mor(&base.id(v)), Ok(a_cat.id(fv)), witness!(v = v));
    }
    for &u in &dom {
        for &v in &dom {
            for &w in &dom {
                for f in base.basis(u, v) {
                    for g in base.basis(v, w) {
                        let lhs = base.compose(&f, &g).map_err(MateError::from).and_then(|fg| adj.f_mor(&fg));
                        let rhs = adj.f_mor(&f).and_then(|x| adj.f_mor(&g).and_then(|y| Ok(a_cat.compose(&x, &y)?)));
                        rep.record_eq("functor_f.compose", "F(f∘g) = F(f)∘F(g)", lhs, rhs, witness!(u = u, v = v, w = w));
                    }
                }
            }
        }
    }
    let u = c.unit();
    for &v in &dom {
        // F(η_v) followed by ε_{1→Fv} is the identity of F(v).
        let fv = adj.f_obj(v).expect("domain object");
        let trfv = c.hom(u, fv);
        if base.is_null(trfv) {
            continue;
        }
        let lhs = adj
            .f_mor(adj.eta(v).expect("domain object"))
            .and_then(|x| adj.counit(u, fv).and_then(|e| Ok(a_cat.compose(&x, &e)?)));
        rep.record_eq("adjunction.triangle_left", "F(η_v)∘ε_{1→Fv} = id", lhs, Ok(a_cat.id(fv)), witness!(v = v));
    }
    for x in 0..n {
        // η_{Tr x} followed by Tr(ε_{1→x}) is the identity of Tr(x).
        let trx = c.hom(u, x);
        if base.is_null(trx) {
            continue;
        }
        let lhs = adj
            .counit(u, x)
            .and_then(|e| adj.post(u, &e))
            .and_then(|te| Ok(base.compose(adj.eta(trx)?, &te)?));
        rep.record_eq("adjunction.triangle_right", "η_{Tr x}∘Tr(ε_{1→x}) = id", lhs, Ok(base.id(trx)), witness!(x = x));
    }
    rep
}

/// `(id_a⊗F(f))∘e_{a,F(v)} = e_{a,F(u)}∘(F(f)⊗id_a)` for every object `a`.
pub fn check_centrality(adj: &TensorAdjunction, f: &Mor) -> ValidationReport {
    check_centrality_with(adj, f, |a, v| adj.half_braiding(a, v))
}

/// [`check_centrality`] against an arbitrary half-braiding family.
pub fn check_centrality_with<E>(adj: &TensorAdjunction, f: &Mor, e: E) -> ValidationReport
where
    E: Fn(usize, usize) -> Result<Mor, MateError>,
{
    let mut rep = ValidationReport::new();
    let a_cat = adj.under();
    for a in 0..adj.cat().len() {
        let lhs = adj.f_mor(f).and_then(|ff| {
            let left = a_cat.tensor(&a_cat.id(a), &ff)?;
            Ok(a_cat.compose(&left, &e(a, f.dst)?)?)
        });
        let rhs = adj.f_mor(f).and_then(|ff| {
            let right = a_cat.tensor(&ff, &a_cat.id(a))?;
            Ok(a_cat.compose(&e(a, f.src)?, &right)?)
        });
        rep.record_eq(
            "centrality",
            "(id_a⊗F(f))∘e_{a,Fv} = e_{a,Fu}∘(F(f)⊗id_a)",
            lhs,
            rhs,
            witness!(a = a, u = f.src, v = f.dst),
        );
    }
    rep
}

/// A deliberate corruption of one side of the tensor mate lemma.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LemmaMutation {
    #[default]
    None,
    /// Replace the half-braiding crossing by an identity.
    DropHalfBraiding,
}

struct Sampler<'a> {
    adj: &'a TensorAdjunction,
    rng: ChaCha8Rng,
}

impl Sampler<'_> {
    fn obj(&mut self) -> usize {
        self.rng.gen_range(0..self.adj.cat().len())
    }

    fn vobj(&mut self) -> usize {
        let dom = self.adj.domain();
        dom[self.rng.gen_range(0..dom.len())]
    }

    fn vmor(&mut self, src: usize, dst: usize) -> Mor {
        self.adj.cat().base().random_mor(src, dst, &mut self.rng)
    }

    fn amor(&mut self, src: usize, dst: usize) -> Mor {
        self.adj.under().random_mor(src, dst, &mut self.rng)
    }

    /// Draws shapes until `accept` holds, giving up after a fixed number of tries.
    fn shape<const K: usize>(&mut self, draw: impl Fn(&mut Self) -> [usize; K], accept: impl Fn(&[usize; K]) -> bool) -> [usize; K] {
        let mut s = draw(self);
        for _ in 0..32 {
            if accept(&s) {
                break;
            }
            s = draw(self);
        }
        s
    }
}

/// Evaluates both sides of each mate lemma on `trials` seeded random inputs.
pub fn verify_mate_lemmas(adj: &TensorAdjunction, seed: u64, trials: usize) -> ValidationReport {
    verify_mate_lemmas_with(adj, seed, trials, LemmaMutation::None)
}

pub fn verify_mate_lemmas_with(adj: &TensorAdjunction, seed: u64, trials: usize, mutation: LemmaMutation) -> ValidationReport {
    let mut rep = ValidationReport::new();
    let mut s = Sampler { adj, rng: ChaCha8Rng::seed_from_u64(seed) };
    let c = &**adj.cat();
    let base = &**c.base();
    let a_cat = adj.under();
    let live = |x: usize| !base.is_null(x);
    for t in 0..trials {
        // Composition lemma, base side: mate(g1∘g2) = (id_a⊗F(g1))∘mate(g2).
        let [a, b, x, y] = s.shape(
            |s| [s.obj(), s.obj(), s.vobj(), s.vobj()],
            |&[a, b, x, y]| base.hom_dim(x, y) * base.hom_dim(y, c.hom(a, b)) > 0,
        );
        let (g1, g2) = (s.vmor(x, y), s.vmor(y, c.hom(a, b)));
        let lhs = base.compose(&g1, &g2).map_err(MateError::from).and_then(|g| adj.mate_fwd(a, x, b, &g));
        let rhs = adj.f_mor(&g1).and_then(|fg| {
            let left = a_cat.tensor(&a_cat.id(a), &fg)?;
            Ok(a_cat.compose(&left, &adj.mate_fwd(a, y, b, &g2)?)?)
        });
        rep.record_eq(
            "lemma.composition_base",
            "mate(g1∘g2) = F(g1)∘mate(g2)",
            lhs,
            rhs,
            witness!(seed = seed, trial = t, a = a, b = b, x = x, y = y),
        );

        // Composition lemma, category side: mate(f1∘f2) = mate(f1)∘R(f2).
        let [a, b, d, x] = s.shape(
            |s| [s.obj(), s.obj(), s.obj(), s.vobj()],
            |&[a, b, d, x]| {
                let fx = adj.f_obj(x).expect("domain object");
                a_cat.hom_dim(a_cat.tensor_obj(a, fx), b) * a_cat.hom_dim(b, d) > 0
            },
        );
        let fx = adj.f_obj(x).expect("domain object");
        let (f1, f2) = (s.amor(a_cat.tensor_obj(a, fx), b), s.amor(b, d));
        let lhs = a_cat.compose(&f1, &f2).map_err(MateError::from).and_then(|f| adj.mate_bwd(a, x, d, &f));
        let rhs = adj
            .mate_bwd(a, x, b, &f1)
            .and_then(|m| adj.post(a, &f2).and_then(|p| Ok(base.compose(&m, &p)?)));
        rep.record_eq(
            "lemma.composition_category",
            "mate(f1∘f2) = mate(f1)∘R(f2)",
            lhs,
            rhs,
            witness!(seed = seed, trial = t, a = a, b = b, c = d, x = x),
        );

        // Unit-counit mates: mate(f) = (id_a⊗F(f))∘ε_{a→b}, and mate(f) = f when v = 1.
        let [a, b, v] = s.shape(
            |s| [s.obj(), s.obj(), s.vobj()],
            |&[a, b, v]| live(c.hom(a, b)) && base.hom_dim(v, c.hom(a, b)) > 0,
        );
        if live(c.hom(a, b)) {
            let f = s.vmor(v, c.hom(a, b));
            let lhs = adj.mate_fwd(a, v, b, &f);
            let rhs = adj.f_mor(&f).and_then(|ff| {
                let left = a_cat.tensor(&a_cat.id(a), &ff)?;
                Ok(a_cat.compose(&left, &adj.counit(a, b)?)?)
            });
            rep.record_eq(
                "lemma.unit_counit",
                "mate(f) = (id_a⊗F(f))∘ε_{a→b}",
                lhs,
                rhs,
                witness!(seed = seed, trial = t, a = a, b = b, v = v),
            );
        }
        let f = s.vmor(base.unit(), c.hom(a, b));
        rep.record_eq(
            "lemma.unit_counit_trivial",
            "mate(f) = f for v = 1",
            adj.mate_fwd(a, base.unit(), b, &f),
            Ok(c.as_underlying(a, b, &f)),
            witness!(seed = seed, trial = t, a = a, b = b),
        );

        // Unit side: mate(g) = η_v∘(id⊗g)∘comp for g ∈ A(F(v)→x).
        let [x, v] = s.shape(|s| [s.obj(), s.vobj()], |&[x, v]| a_cat.hom_dim(adj.f_obj(v).expect("domain"), x) > 0);
        let fv = adj.f_obj(v).expect("domain object");
        let g = s.amor(fv, x);
        let rhs = base
            .tensor(&base.id(c.hom(c.unit(), fv)), &c.as_graded(&g))
            .map_err(MateError::from)
            .and_then(|m| Ok(base.compose_all(&[adj.eta(v)?, &m, c.comp(c.unit(), fv, x)])?));
        rep.record_eq(
            "lemma.unit_side",
            "mate(g) = η_v∘(id⊗g)∘comp",
            adj.mate_bwd(c.unit(), v, x, &g),
            rhs,
            witness!(seed = seed, trial = t, x = x, v = v),
        );

        // Mate of a composite through μ.
        let [a, b, d, u, v] = s.shape(
            |s| [s.obj(), s.obj(), s.obj(), s.vobj(), s.vobj()],
            |&[a, b, d, u, v]| {
                live(base.tensor_obj(u, v)) && base.hom_dim(u, c.hom(a, b)) * base.hom_dim(v, c.hom(b, d)) > 0
            },
        );
        if live(base.tensor_obj(u, v)) {
            let (f, g) = (s.vmor(u, c.hom(a, b)), s.vmor(v, c.hom(b, d)));
            let lhs = base
                .tensor(&f, &g)
                .and_then(|fg| base.compose(&fg, c.comp(a, b, d)))
                .map_err(MateError::from)
                .and_then(|m| adj.mate_fwd(a, base.tensor_obj(u, v), d, &m));
            let rhs = (|| -> Result<Mor, MateError> {
                let fv = adj.f_obj(v)?;
                let mu = a_cat.tensor(&a_cat.id(a), &adj.oplaxitor(u, v)?)?;
                let mf = a_cat.tensor(&adj.mate_fwd(a, u, b, &f)?, &a_cat.id(fv))?;
                Ok(a_cat.compose_all(&[&mu, &mf, &adj.mate_fwd(b, v, d, &g)?])?)
            })();
            rep.record_eq(
                "lemma.mate_of_composite",
                "mate((f⊗g)∘comp) = (id⊗μ)∘(mate(f)⊗id)∘mate(g)",
                lhs,
                rhs,
                witness!(seed = seed, trial = t, a = a, b = b, c = d, u = u, v = v),
            );
        }

        // Mate of a tensor product through μ and the half-braiding.
        let [a, b, x, d, u, v] = s.shape(
            |s| [s.obj(), s.obj(), s.obj(), s.obj(), s.vobj(), s.vobj()],
            |&[a, b, x, d, u, v]| {
                live(base.tensor_obj(u, v)) && base.hom_dim(u, c.hom(a, x)) * base.hom_dim(v, c.hom(b, d)) > 0
            },
        );
        if live(base.tensor_obj(u, v)) {
            let (f, g) = (s.vmor(u, c.hom(a, x)), s.vmor(v, c.hom(b, d)));
            let lhs = base
                .tensor(&f, &g)
                .and_then(|fg| base.compose(&fg, c.tens(a, b, x, d)))
                .map_err(MateError::from)
                .and_then(|m| adj.mate_fwd(c.tensor_obj(a, b), base.tensor_obj(u, v), c.tensor_obj(x, d), &m));
            let rhs = (|| -> Result<Mor, MateError> {
                let (fu, fv) = (adj.f_obj(u)?, adj.f_obj(v)?);
                let ab = a_cat.tensor_obj(a, b);
                let mu = a_cat.tensor(&a_cat.id(ab), &adj.oplaxitor(u, v)?)?;
                let crossing = match mutation {
                    LemmaMutation::None => adj.half_braiding(b, u)?,
                    LemmaMutation::DropHalfBraiding => a_cat.id(a_cat.tensor_obj(b, fu)),
                };
                let swap = a_cat.tensor_all(&[&a_cat.id(a), &crossing, &a_cat.id(fv)])?;
                let mates = a_cat.tensor(&adj.mate_fwd(a, u, x, &f)?, &adj.mate_fwd(b, v, d, &g)?)?;
                Ok(a_cat.compose_all(&[&mu, &swap, &mates])?)
            })();
            rep.record_eq(
                "lemma.mate_of_tensor",
                "mate((f⊗g)∘⊗) = (id⊗μ)∘(id⊗e_{b,Fu}⊗id)∘(mate(f)⊗mate(g))",
                lhs,
                rhs,
                witness!(seed = seed, trial = t, a = a, b = b, c = x, d = d, u = u, v = v),
            );
        }

        // Mates of F(f): (η_u⊗F(f))∘comp = f∘η_v.
        let [u, v] = s.shape(|s| [s.vobj(), s.vobj()], |&[u, v]| base.hom_dim(u, v) > 0);
        let f = s.vmor(u, v);
        let lhs = (|| -> Result<Mor, MateError> {
            let (fu, fv) = (adj.f_obj(u)?, adj.f_obj(v)?);
            let m = base.tensor(adj.eta(u)?, &c.as_graded(&adj.f_mor(&f)?))?;
            Ok(base.compose(&m, c.comp(c.unit(), fu, fv))?)
        })();
        let rhs = adj.eta(v).and_then(|e| Ok(base.compose(&f, e)?));
        rep.record_eq(
            "lemma.mates_of_f",
            "(η_u⊗F(f))∘comp = f∘η_v",
            lhs,
            rhs,
            witness!(seed = seed, trial = t, u = u, v = v),
        );
    }
    rep
}

/// Checks every lemma shape exhaustively on basis morphisms for the
/// composite-through-μ lemma; used to locate systematic failures.
pub fn exhaustive_composite_lemma(adj: &TensorAdjunction) -> ValidationReport {
    let mut rep = ValidationReport::new();
    let c = &**adj.cat();
    let base = &**c.base();
    let a_cat = adj.under();
    for (a, b, d) in triples(c.len()) {
        for u in adj.domain() {
            for v in adj.domain() {
                if base.is_null(base.tensor_obj(u, v)) {
                    continue;
                }
                for f in base.basis(u, c.hom(a, b)) {
                    for g in base.basis(v, c.hom(b, d)) {
                        let lhs = base
                            .tensor(&f, &g)
                            .and_then(|fg| base.compose(&fg, c.comp(a, b, d)))
                            .map_err(MateError::from)
                            .and_then(|m| adj.mate_fwd(a, base.tensor_obj(u, v), d, &m));
                        let rhs = (|| -> Result<Mor, MateError> {
                            let mu = a_cat.tensor(&a_cat.id(a), &adj.oplaxitor(u, v)?)?;
                            let mf = a_cat.tensor(&adj.mate_fwd(a, u, b, &f)?, &a_cat.id(adj.f_obj(v)?))?;
                            Ok(a_cat.compose_all(&[&mu, &mf, &adj.mate_fwd(b, v, d, &g)?])?)
                        })();
                        rep.record_eq(
                            "lemma.mate_of_composite",
                            "mate((f⊗g)∘comp) = (id⊗μ)∘(mate(f)⊗id)∘mate(g)",
                            lhs,
                            rhs,
                            witness!(a = a, b = b, c = d, u = u, v = v),
                        );
                    }
                }
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn self_enrichment_is_tensored_by_identity() {
        for c in [fixtures::vhat_triv(), fixtures::vhat_svec(), fixtures::vhat_zz22()] {
            let adj = compute_adjoint(c.clone()).unwrap();
            for v in adj.domain() {
                assert_eq!(adj.f_obj(v).unwrap(), v, "{}", c.name());
            }
            assert!(adj.is_tensored().unwrap());
            let rep = validate_adjunction(&adj);
            assert!(rep.passed(), "{}: {rep}", c.name());
        }
    }

    #[test]
    fn pointed_category_adjoint() {
        let adj = compute_adjoint(fixtures::pt2()).unwrap();
        assert_eq!(adj.f_obj(0).unwrap(), 0);
        assert!(matches!(adj.f_obj(1), Err(MateError::OutsideDomain(_))));
        assert!(adj.is_tensored().unwrap());
        assert!(validate_adjunction(&adj).passed());
    }

    #[test]
    fn lemmas_hold_on_fixtures() {
        for c in [fixtures::vhat_svec(), fixtures::vhat_zz22(), fixtures::vhat_dual(), fixtures::pt4()] {
            let adj = compute_adjoint(c.clone()).unwrap();
            let rep = verify_mate_lemmas(&adj, 7, 40);
            assert!(rep.passed(), "{}: {rep}", c.name());
            assert!(rep.instances("lemma.mate_of_tensor") > 0);
        }
    }

    #[test]
    fn dropping_the_half_braiding_is_detected() {
        let adj = compute_adjoint(fixtures::vhat_svec()).unwrap();
        let rep = verify_mate_lemmas_with(&adj, 3, 60, LemmaMutation::DropHalfBraiding);
        assert_eq!(rep.failed_checks(), vec!["lemma.mate_of_tensor"]);
    }

    #[test]
    fn half_braiding_is_central() {
        let adj = compute_adjoint(fixtures::vhat_zz22()).unwrap();
        let base = adj.cat().base().clone();
        for v in adj.domain() {
            let rep = check_centrality(&adj, &base.id(v));
            assert!(rep.passed());
        }
        // The half-braiding is the base braiding β_{a,v}, transported to the
        // underlying category by its internal name.
        for a in 0..4 {
            for v in 0..4 {
                let av = base.tensor_obj(a, v);
                let named = crate::enriched::internal_name(&base, av, base.unit(), base.braid(a, v)).unwrap();
                assert_eq!(adj.half_braiding(a, v).unwrap().coeffs, named.coeffs);
            }
        }
    }

    #[test]
    fn exhaustive_composite() {
        let adj = compute_adjoint(fixtures::vhat_dual()).unwrap();
        assert!(exhaustive_composite_lemma(&adj).passed());
    }
}
