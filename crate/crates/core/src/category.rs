//! Strict linear monoidal categories presented by structure constants.
//!
//! Objects are indices `0..n`. Each hom space `(i, j)` carries an implicit
//! ordered basis of size `hom_dim(i, j)`; morphisms are coefficient vectors
//! against it. Composition is written left to right: `compose(f, g)` is `f`
//! followed by `g`.
//!
//! The same type houses the base category and every underlying ordinary
//! category computed from an enriched one.

use num_traits::{One, Zero};
use rand::Rng;
use thiserror::Error;

use crate::report::ValidationReport;
use crate::scalar::{int, is_zero_vec, solve, LinalgError, Matrix, Scalar};
use crate::witness;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatError {
    #[error("object mismatch: {0}")]
    ObjectMismatch(String),
    #[error("malformed data: {0}")]
    Malformed(String),
    #[error("base category carries no duality data")]
    MissingDuality,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A morphism `src → dst`, as a coefficient vector in the hom-space basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mor {
    pub src: usize,
    pub dst: usize,
    pub coeffs: Vec<Scalar>,
}

impl Mor {
    pub fn new(src: usize, dst: usize, coeffs: Vec<Scalar>) -> Self {
        Mor { src, dst, coeffs }
    }

    pub fn zero(src: usize, dst: usize, dim: usize) -> Self {
        Mor { src, dst, coeffs: vec![Scalar::zero(); dim] }
    }

    pub fn basis(src: usize, dst: usize, dim: usize, k: usize) -> Self {
        let mut m = Self::zero(src, dst, dim);
        m.coeffs[k] = Scalar::one();
        m
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coeffs)
    }

    pub fn scale(&self, c: &Scalar) -> Mor {
        Mor { src: self.src, dst: self.dst, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Sum of two parallel morphisms.
    ///
    /// Panics when the morphisms are not parallel.
    pub fn add(&self, other: &Mor) -> Mor {
        assert!(
            self.src == other.src && self.dst == other.dst && self.coeffs.len() == other.coeffs.len(),
            "adding non-parallel morphisms"
        );
        Mor {
            src: self.src,
            dst: self.dst,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn neg(&self) -> Mor {
        self.scale(&-Scalar::one())
    }
}

/// A bilinear map `K^left × K^right → K^out` stored as a dense 3-tensor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bilinear {
    left: usize,
    right: usize,
    out: usize,
    data: Vec<Scalar>,
}

impl Bilinear {
    pub fn zero(left: usize, right: usize, out: usize) -> Self {
        Bilinear { left, right, out, data: vec![Scalar::zero(); left * right * out] }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.left, self.right, self.out)
    }

    pub fn get(&self, p: usize, q: usize, r: usize) -> &Scalar {
        &self.data[(p * self.right + q) * self.out + r]
    }

    pub fn set(&mut self, p: usize, q: usize, r: usize, x: Scalar) {
        self.data[(p * self.right + q) * self.out + r] = x;
    }

    /// Nonzero entries in lexicographic index order.
    pub fn nonzero(&self) -> impl Iterator<Item = ([usize; 3], &Scalar)> {
        let (right, out) = (self.right, self.out);
        self.data.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(move |(i, x)| {
            ([i / (right * out), (i / out) % right, i % out], x)
        })
    }

    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.out];
        for (p, xp) in x.iter().enumerate() {
            if xp.is_zero() {
                continue;
            }
            for (q, yq) in y.iter().enumerate() {
                if yq.is_zero() {
                    continue;
                }
                let w = xp * yq;
                let base = (p * self.right + q) * self.out;
                for (r, o) in out.iter_mut().enumerate() {
                    let c = &self.data[base + r];
                    if !c.is_zero() {
                        *o += &w * c;
                    }
                }
            }
        }
        out
    }
}

/// A strict linear monoidal category given by structure constants.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearMonCat {
    names: Vec<String>,
    unit: usize,
    tensor_table: Vec<usize>,
    hom_dims: Vec<usize>,
    identities: Vec<Vec<Scalar>>,
    compose: Vec<Bilinear>,
    tensor: Vec<Bilinear>,
}

impl LinearMonCat {
    /// A category with the given object data and all structure constants zero.
    pub fn skeleton(
        names: Vec<String>,
        unit: usize,
        tensor_table: Vec<Vec<usize>>,
        hom_dims: Vec<Vec<usize>>,
    ) -> Result<Self, CatError> {
        let n = names.len();
        if n == 0 {
            return Err(CatError::Malformed("no objects".into()));
        }
        if unit >= n {
            return Err(CatError::Malformed(format!("unit index {unit} out of range")));
        }
        let square = |t: &Vec<Vec<usize>>| t.len() == n && t.iter().all(|r| r.len() == n);
        if !square(&tensor_table) || !square(&hom_dims) {
            return Err(CatError::Malformed(format!("tables must be {n}x{n}")));
        }
        if let Some(bad) = tensor_table.iter().flatten().find(|&&x| x >= n) {
            return Err(CatError::Malformed(format!("tensor table entry {bad} out of range")));
        }
        let tensor_table: Vec<usize> = tensor_table.into_iter().flatten().collect();
        let hom_dims: Vec<usize> = hom_dims.into_iter().flatten().collect();
        let d = |i: usize, j: usize| hom_dims[i * n + j];
        let identities = (0..n).map(|i| vec![Scalar::zero(); d(i, i)]).collect();
        let mut compose = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    compose.push(Bilinear::zero(d(i, j), d(j, k), d(i, k)));
                }
            }
        }
        let mut tensor = Vec::with_capacity(n * n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let (s, t) = (tensor_table[i * n + k], tensor_table[j * n + l]);
                        tensor.push(Bilinear::zero(d(i, j), d(k, l), d(s, t)));
                    }
                }
            }
        }
        Ok(LinearMonCat { names, unit, tensor_table, hom_dims, identities, compose, tensor })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn objects(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn tensor_obj(&self, i: usize, j: usize) -> usize {
        self.tensor_table[i * self.len() + j]
    }

    pub fn tensor_table(&self) -> Vec<Vec<usize>> {
        self.tensor_table.chunks(self.len()).map(<[usize]>::to_vec).collect()
    }

    pub fn hom_dim(&self, i: usize, j: usize) -> usize {
        self.hom_dims[i * self.len() + j]
    }

    pub fn hom_dims(&self) -> Vec<Vec<usize>> {
        self.hom_dims.chunks(self.len()).map(<[usize]>::to_vec).collect()
    }

    /// An object with no nonzero endomorphisms; every hom space touching it vanishes.
    pub fn is_null(&self, i: usize) -> bool {
        self.hom_dim(i, i) == 0
    }

    pub fn compose_constants(&self, i: usize, j: usize, k: usize) -> &Bilinear {
        let n = self.len();
        &self.compose[(i * n + j) * n + k]
    }

    pub fn tensor_constants(&self, i: usize, j: usize, k: usize, l: usize) -> &Bilinear {
        let n = self.len();
        &self.tensor[((i * n + j) * n + k) * n + l]
    }

    pub fn set_identity(&mut self, i: usize, coeffs: Vec<Scalar>) -> Result<(), CatError> {
        if coeffs.len() != self.hom_dim(i, i) {
            return Err(CatError::Malformed(format!(
                "identity of object {i} needs {} coefficients, got {}",
                self.hom_dim(i, i),
                coeffs.len()
            )));
        }
        self.identities[i] = coeffs;
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    pub fn set_compose(
        &mut self,
        (i, j, k): (usize, usize, usize),
        (p, q, r): (usize, usize, usize),
        x: Scalar,
    ) -> Result<(), CatError> {
        let n = self.len();
        if i >= n || j >= n || k >= n {
            return Err(CatError::Malformed(format!("compose block ({i},{j},{k}) out of range")));
        }
        let b = &mut self.compose[(i * n + j) * n + k];
        let (l, rt, o) = b.dims();
        if p >= l || q >= rt || r >= o {
            return Err(CatError::Malformed(format!(
                "compose entry ({p},{q},{r}) out of range for block ({i},{j},{k})"
            )));
        }
        b.set(p, q, r, x);
        Ok(())
    }

    pub fn set_tensor(
        &mut self,
        (i, j, k, l): (usize, usize, usize, usize),
        (p, q, r): (usize, usize, usize),
        x: Scalar,
    ) -> Result<(), CatError> {
        let n = self.len();
        if i >= n || j >= n || k >= n || l >= n {
            return Err(CatError::Malformed(format!("tensor block ({i},{j},{k},{l}) out of range")));
        }
        let b = &mut self.tensor[((i * n + j) * n + k) * n + l];
        let (a, c, o) = b.dims();
        if p >= a || q >= c || r >= o {
            return Err(CatError::Malformed(format!(
                "tensor entry ({p},{q},{r}) out of range for block ({i},{j},{k},{l})"
            )));
        }
        b.set(p, q, r, x);
        Ok(())
    }

    pub fn id(&self, i: usize) -> Mor {
        Mor::new(i, i, self.identities[i].clone())
    }

    pub fn zero(&self, i: usize, j: usize) -> Mor {
        Mor::zero(i, j, self.hom_dim(i, j))
    }

    pub fn basis(&self, i: usize, j: usize) -> Vec<Mor> {
        let d = self.hom_dim(i, j);
        (0..d).map(|k| Mor::basis(i, j, d, k)).collect()
    }

    pub fn check_mor(&self, f: &Mor) -> Result<(), CatError> {
        if f.src >= self.len() || f.dst >= self.len() {
            return Err(CatError::Malformed(format!("morphism {}→{} out of range", f.src, f.dst)));
        }
        if f.coeffs.len() != self.hom_dim(f.src, f.dst) {
            return Err(CatError::Malformed(format!(
                "morphism {}→{} has {} coefficients, hom space has dimension {}",
                f.src,
                f.dst,
                f.coeffs.len(),
                self.hom_dim(f.src, f.dst)
            )));
        }
        Ok(())
    }

    /// `f` followed by `g`.
    pub fn compose(&self, f: &Mor, g: &Mor) -> Result<Mor, CatError> {
        if f.dst != g.src {
            return Err(CatError::ObjectMismatch(format!(
                "cannot compose {}→{} with {}→{}",
                self.name(f.src),
                self.name(f.dst),
                self.name(g.src),
                self.name(g.dst)
            )));
        }
        self.check_mor(f)?;
        self.check_mor(g)?;
        let b = self.compose_constants(f.src, f.dst, g.dst);
        Ok(Mor::new(f.src, g.dst, b.apply(&f.coeffs, &g.coeffs)))
    }

    /// Composes a nonempty chain left to right.
    pub fn compose_all(&self, chain: &[&Mor]) -> Result<Mor, CatError> {
        let (first, rest) = chain.split_first().expect("nonempty chain");
        rest.iter().try_fold((*first).clone(), |acc, g| self.compose(&acc, g))
    }

    pub fn tensor(&self, f: &Mor, g: &Mor) -> Result<Mor, CatError> {
        self.check_mor(f)?;
        self.check_mor(g)?;
        let b = self.tensor_constants(f.src, f.dst, g.src, g.dst);
        Ok(Mor::new(
            self.tensor_obj(f.src, g.src),
            self.tensor_obj(f.dst, g.dst),
            b.apply(&f.coeffs, &g.coeffs),
        ))
    }

    /// Tensors a nonempty list left to right.
    pub fn tensor_all(&self, factors: &[&Mor]) -> Result<Mor, CatError> {
        let (first, rest) = factors.split_first().expect("nonempty list");
        rest.iter().try_fold((*first).clone(), |acc, g| self.tensor(&acc, g))
    }

    /// Matrix of a linear map given by its action on the basis of `(i, j)`,
    /// with columns in the target hom space.
    pub fn matrix_of<F>(&self, i: usize, j: usize, rows: usize, mut f: F) -> Result<Matrix, CatError>
    where
        F: FnMut(&Mor) -> Result<Vec<Scalar>, CatError>,
    {
        let cols = self.basis(i, j).iter().map(&mut f).collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::from_columns(rows, &cols)?)
    }

    /// Two-sided inverse of `f`, if one exists.
    pub fn inverse(&self, f: &Mor) -> Option<Mor> {
        let (a, b) = (f.src, f.dst);
        let da = self.hom_dim(a, a);
        let db = self.hom_dim(b, b);
        let dinv = self.hom_dim(b, a);
        // Columns: images of basis g under g ↦ (f∘g, g∘f).
        let mut cols = Vec::with_capacity(dinv);
        for g in self.basis(b, a) {
            let mut col = self.compose(f, &g).ok()?.coeffs;
            col.extend(self.compose(&g, f).ok()?.coeffs);
            cols.push(col);
        }
        let m = Matrix::from_columns(da + db, &cols).ok()?;
        let mut rhs = self.id(a).coeffs;
        rhs.extend(self.id(b).coeffs);
        let sol = solve(&m, &rhs).ok()??;
        Some(Mor::new(b, a, sol))
    }

    pub fn is_invertible(&self, f: &Mor) -> bool {
        self.inverse(f).is_some()
    }

    /// A morphism with small random integer coefficients, occasionally halved.
    pub fn random_mor<R: Rng>(&self, i: usize, j: usize, rng: &mut R) -> Mor {
        let coeffs = (0..self.hom_dim(i, j))
            .map(|_| {
                let x = int(rng.gen_range(-3..=3));
                if rng.gen_bool(0.2) {
                    x / int(2)
                } else {
                    x
                }
            })
            .collect();
        Mor::new(i, j, coeffs)
    }

    /// Enumerates every monoidal-category axiom instance over basis morphisms.
    pub fn validate_monoidal(&self) -> ValidationReport {
        let mut rep = ValidationReport::new();
        let n = self.len();
        let u = self.unit;
        for a in 0..n {
            rep.record(
                "objects.unit",
                "1a = a = a1",
                self.tensor_obj(u, a) == a && self.tensor_obj(a, u) == a,
                witness!(a = a),
            );
            for b in 0..n {
                for c in 0..n {
                    let l = self.tensor_obj(self.tensor_obj(a, b), c);
                    let r = self.tensor_obj(a, self.tensor_obj(b, c));
                    rep.record("objects.assoc", "(ab)c = a(bc)", l == r, witness!(a = a, b = b, c = c));
                }
            }
        }
        if !rep.passed() {
            // Morphism-level checks assume strict object tables.
            return rep;
        }
        for i in 0..n {
            for j in 0..n {
                for (p, f) in self.basis(i, j).iter().enumerate() {
                    let left = self.compose(&self.id(i), f).map(|x| x == *f).unwrap_or(false);
                    let right = self.compose(f, &self.id(j)).map(|x| x == *f).unwrap_or(false);
                    rep.record("compose.unit", "id∘f = f = f∘id", left && right, witness!(i = i, j = j, basis = p));
                    let ul = self.tensor(&self.id(u), f).map(|x| x == *f).unwrap_or(false);
                    let ur = self.tensor(f, &self.id(u)).map(|x| x == *f).unwrap_or(false);
                    rep.record("tensor.unit", "id_1⊗f = f = f⊗id_1", ul && ur, witness!(i = i, j = j, basis = p));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        self.assoc_instances(&mut rep, i, j, k, l);
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let t = self.tensor(&self.id(i), &self.id(j)).map(|x| x == self.id(self.tensor_obj(i, j)));
                rep.record("tensor.identity", "id_i⊗id_j = id_ij", t.unwrap_or(false), witness!(i = i, j = j));
            }
        }
        for (i, j, k) in triples(n) {
            for (l, m, o) in triples(n) {
                if self.hom_dim(i, j) * self.hom_dim(j, k) * self.hom_dim(l, m) * self.hom_dim(m, o) == 0 {
                    continue;
                }
                for (p, f) in self.basis(i, j).iter().enumerate() {
                    for (q, f2) in self.basis(j, k).iter().enumerate() {
                        for (r, g) in self.basis(l, m).iter().enumerate() {
                            for (s, g2) in self.basis(m, o).iter().enumerate() {
                                let lhs = self.tensor(f, g).and_then(|a| {
                                    self.tensor(f2, g2).and_then(|b| self.compose(&a, &b))
                                });
                                let rhs = self.compose(f, f2).and_then(|a| {
                                    self.compose(g, g2).and_then(|b| self.tensor(&a, &b))
                                });
                                rep.record(
                                    "tensor.interchange",
                                    "(f⊗g)∘(f'⊗g') = (f∘f')⊗(g∘g')",
                                    matches!((lhs, rhs), (Ok(a), Ok(b)) if a == b),
                                    witness!(objs = format!("{i},{j},{k},{l},{m},{o}"), basis = format!("{p},{q},{r},{s}")),
                                );
                            }
                        }
                    }
                }
            }
        }
        for (i, j, k) in triples(n) {
            for (l, m, o) in triples(n) {
                // (f⊗g)⊗h = f⊗(g⊗h) for f: i→l, g: j→m, h: k→o.
                if self.hom_dim(i, l) * self.hom_dim(j, m) * self.hom_dim(k, o) == 0 {
                    continue;
                }
                for f in self.basis(i, l) {
                    for g in self.basis(j, m) {
                        for h in self.basis(k, o) {
                            let lhs = self.tensor(&f, &g).and_then(|x| self.tensor(&x, &h));
                            let rhs = self.tensor(&g, &h).and_then(|x| self.tensor(&f, &x));
                            rep.record(
                                "tensor.assoc",
                                "(f⊗g)⊗h = f⊗(g⊗h)",
                                matches!((lhs, rhs), (Ok(a), Ok(b)) if a == b),
                                witness!(objs = format!("{i},{j},{k},{l},{m},{o}")),
                            );
                        }
                    }
                }
            }
        }
        rep
    }

    fn assoc_instances(&self, rep: &mut ValidationReport, i: usize, j: usize, k: usize, l: usize) {
        if self.hom_dim(i, j) * self.hom_dim(j, k) * self.hom_dim(k, l) == 0 {
            return;
        }
        for (p, f) in self.basis(i, j).iter().enumerate() {
            for (q, g) in self.basis(j, k).iter().enumerate() {
                for (r, h) in self.basis(k, l).iter().enumerate() {
                    let lhs = self.compose(f, g).and_then(|x| self.compose(&x, h));
                    let rhs = self.compose(g, h).and_then(|x| self.compose(f, &x));
                    rep.record(
                        "compose.assoc",
                        "(f∘g)∘h = f∘(g∘h)",
                        matches!((lhs, rhs), (Ok(a), Ok(b)) if a == b),
                        witness!(objs = format!("{i},{j},{k},{l}"), basis = format!("{p},{q},{r}")),
                    );
                }
            }
        }
    }
}

pub(crate) fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
}

pub(crate) fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}

/// A linear functor between linear categories: an object map plus one matrix
/// per hom space, acting on coefficient vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrdFunctor {
    pub object_map: Vec<usize>,
    /// Row-major by `(a, b)`; the matrix maps `A(a→b)` into `B(Fa→Fb)`.
    pub action: Vec<Matrix>,
}

impl OrdFunctor {
    pub fn identity(cat: &LinearMonCat) -> Self {
        let action = pairs(cat.len()).map(|(a, b)| Matrix::identity(cat.hom_dim(a, b))).collect();
        OrdFunctor { object_map: cat.objects().collect(), action }
    }

    pub fn obj(&self, a: usize) -> usize {
        self.object_map[a]
    }

    pub fn matrix(&self, a: usize, b: usize) -> &Matrix {
        &self.action[a * self.object_map.len() + b]
    }

    pub fn apply(&self, f: &Mor) -> Result<Mor, CatError> {
        let coeffs = self.matrix(f.src, f.dst).mul_vec(&f.coeffs)?;
        Ok(Mor::new(self.obj(f.src), self.obj(f.dst), coeffs))
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &OrdFunctor) -> Result<OrdFunctor, CatError> {
        let n = self.object_map.len();
        let object_map = self.object_map.iter().map(|&a| other.obj(a)).collect();
        let action = pairs(n)
            .map(|(a, b)| other.matrix(self.obj(a), self.obj(b)).mul(self.matrix(a, b)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(OrdFunctor { object_map, action })
    }

    /// Checks shapes against a source and target category.
    pub fn check_shape(&self, src: &LinearMonCat, dst: &LinearMonCat) -> Result<(), CatError> {
        let n = src.len();
        if self.object_map.len() != n || self.action.len() != n * n {
            return Err(CatError::Malformed("functor data does not match source object count".into()));
        }
        if let Some(&x) = self.object_map.iter().find(|&&x| x >= dst.len()) {
            return Err(CatError::Malformed(format!("functor object image {x} out of range")));
        }
        for (a, b) in pairs(n) {
            let m = self.matrix(a, b);
            if m.cols() != src.hom_dim(a, b) || m.rows() != dst.hom_dim(self.obj(a), self.obj(b)) {
                return Err(CatError::Malformed(format!("functor matrix at ({a},{b}) has wrong shape")));
            }
        }
        Ok(())
    }

    /// Functoriality: identities and composites are preserved.
    pub fn validate(&self, src: &LinearMonCat, dst: &LinearMonCat, rep: &mut ValidationReport) {
        let n = src.len();
        for a in 0..n {
            let ok = self.apply(&src.id(a)).map(|x| x == dst.id(self.obj(a))).unwrap_or(false);
            rep.record("functor.identity", "R(id_a) = id_Ra", ok, witness!(a = a));
        }
        for (a, b, c) in triples(n) {
            for f in src.basis(a, b) {
                for g in src.basis(b, c) {
                    let lhs = src.compose(&f, &g).and_then(|x| self.apply(&x));
                    let rhs = self.apply(&f).and_then(|x| self.apply(&g).and_then(|y| dst.compose(&x, &y)));
                    rep.record(
                        "functor.compose",
                        "R(f∘g) = R(f)∘R(g)",
                        matches!((lhs, rhs), (Ok(x), Ok(y)) if x == y),
                        witness!(objs = format!("{a},{b},{c}")),
                    );
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    /// Two objects of a ℤ/2-graded line category, everything 1-dimensional on the diagonal.
    fn z2() -> LinearMonCat {
        let mut c = LinearMonCat::skeleton(
            vec!["0".into(), "1".into()],
            0,
            vec![vec![0, 1], vec![1, 0]],
            vec![vec![1, 0], vec![0, 1]],
        )
        .unwrap();
        for i in 0..2 {
            c.set_identity(i, vec![int(1)]).unwrap();
            c.set_compose((i, i, i), (0, 0, 0), int(1)).unwrap();
            for k in 0..2 {
                c.set_tensor((i, i, k, k), (0, 0, 0), int(1)).unwrap();
            }
        }
        c
    }

    #[test]
    fn compose_identity_and_scalars() {
        let c = z2();
        let f = Mor::new(0, 0, vec![int(2)]);
        let g = Mor::new(0, 0, vec![int(3)]);
        assert_eq!(c.compose(&c.id(0), &f).unwrap(), f);
        assert_eq!(c.compose(&f, &g).unwrap(), Mor::new(0, 0, vec![int(6)]));
        assert!(matches!(c.compose(&f, &c.id(1)), Err(CatError::ObjectMismatch(_))));
    }

    #[test]
    fn tensor_lands_in_product_object() {
        let c = z2();
        let f = Mor::new(1, 1, vec![int(2)]);
        let t = c.tensor(&f, &c.id(1)).unwrap();
        assert_eq!(t, Mor::new(0, 0, vec![int(2)]));
    }

    #[test]
    fn z2_lines_satisfy_monoidal_axioms() {
        let rep = z2().validate_monoidal();
        assert!(rep.passed(), "{rep}");
        assert!(rep.instances("tensor.interchange") > 0);
    }

    #[test]
    fn inverse_of_scalar() {
        let c = z2();
        let f = Mor::new(1, 1, vec![int(4)]);
        assert_eq!(c.inverse(&f).unwrap(), Mor::new(1, 1, vec![crate::scalar::ratio(1, 4)]));
        assert!(c.inverse(&c.zero(1, 1)).is_none());
    }

    #[test]
    fn broken_identity_is_located() {
        let mut c = z2();
        c.set_compose((0, 0, 0), (0, 0, 0), int(0)).unwrap();
        let rep = c.validate_monoidal();
        assert!(rep.failed_checks().contains(&"compose.unit"));
    }
}
