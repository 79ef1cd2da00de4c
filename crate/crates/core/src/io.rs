//! JSON documents for every artifact, and a workspace that resolves
//! cross-references by name.
//!
//! Every document is an object with a `kind` field. Objects are referred to by
//! name, scalars are `"p/q"` strings, and structure constants are stored
//! sparsely as `[[p, q, r], "x"]` pairs. Writing is canonical, so
//! load-then-save reproduces a saved file byte for byte.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::base::{Duality, PresentedBase};
use crate::category::{pairs, triples, CatError, LinearMonCat, Mor, OrdFunctor};
use crate::enriched::{VCat, VMonCat, VMonFunctor, VTransform};
use crate::equivalence::{p0, reconstruct, EquivError, Lifted};
use crate::fixtures;
use crate::grading::{FiniteGroup, GradingAssignment};
use crate::mates::TensorAdjunction;
use crate::modtens::{ModTensCat, ModTensCell1, ModTensCell2, Provenance};
use crate::report::ValidationReport;
use crate::scalar::{format_scalar, parse_scalar, LinalgError, Matrix, Scalar};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("{context}: {source}")]
    Json { context: String, source: serde_json::Error },
    #[error("unknown document kind `{0}`")]
    Kind(String),
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
    #[error("duplicate {kind} `{name}`")]
    Duplicate { kind: &'static str, name: String },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Cat(#[from] CatError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Equiv(#[from] EquivError),
}

type Coeffs = Vec<String>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MorEntry {
    pub objects: Vec<String>,
    pub coeffs: Coeffs,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObjEntry {
    pub object: String,
    pub coeffs: Coeffs,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatEntry {
    pub objects: Vec<String>,
    pub matrix: Vec<Coeffs>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObjMap {
    pub object: String,
    pub image: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Block {
    pub objects: Vec<String>,
    pub entries: Vec<([usize; 3], String)>,
}

/// An ordinary finite monoidal linear category.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatDoc {
    pub objects: Vec<String>,
    pub unit: String,
    pub tensor_table: Vec<Vec<String>>,
    pub hom_dims: Vec<Vec<usize>>,
    pub identities: Vec<Coeffs>,
    pub compose: Vec<Block>,
    pub tensor: Vec<Block>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DualityDoc {
    pub dual: Vec<String>,
    pub ev: Vec<Coeffs>,
    pub coev: Vec<Coeffs>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaseDoc {
    pub kind: String,
    pub name: String,
    #[serde(flatten)]
    pub cat: CatDoc,
    pub braiding: Vec<MorEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub duality: Option<DualityDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero_object: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VMonCatDoc {
    pub kind: String,
    pub name: String,
    pub base: String,
    pub objects: Vec<String>,
    pub hom_obj: Vec<Vec<String>>,
    pub j: Vec<Coeffs>,
    pub comp: Vec<MorEntry>,
    pub unit: String,
    pub tensor_table: Vec<Vec<String>>,
    pub tens: Vec<MorEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FunctorDoc {
    pub kind: String,
    pub name: String,
    pub source: String,
    pub target: String,
    pub object_map: Vec<ObjMap>,
    pub components: Vec<MorEntry>,
    pub laxitor: Vec<MorEntry>,
    pub strong: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransformDoc {
    pub kind: String,
    pub name: String,
    pub source: String,
    pub target: String,
    pub components: Vec<ObjEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProvenanceDoc {
    Computed { source: String, engine: String },
    Given,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModTensDoc {
    pub kind: String,
    pub name: String,
    pub base: String,
    pub provenance: ProvenanceDoc,
    pub category: CatDoc,
    pub f_obj: Vec<ObjMap>,
    pub f_mor: Vec<MatEntry>,
    pub mu: Vec<MorEntry>,
    pub e: Vec<MorEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cell1Doc {
    pub kind: String,
    pub name: String,
    pub source: String,
    pub target: String,
    pub object_map: Vec<ObjMap>,
    pub action: Vec<MatEntry>,
    pub rho: Vec<MorEntry>,
    pub r: Vec<ObjEntry>,
    pub strong: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cell2Doc {
    pub kind: String,
    pub name: String,
    pub source: String,
    pub target: String,
    pub components: Vec<ObjEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupDoc {
    pub elements: Vec<String>,
    pub mult: Vec<Vec<String>>,
    pub identity: String,
    pub inverse: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GradingDoc {
    pub kind: String,
    pub name: String,
    pub category: String,
    pub group: GroupDoc,
    pub degrees: Vec<ObjMap>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdjunctionDoc {
    pub kind: String,
    pub category: String,
    pub f_obj: Vec<ObjMap>,
    pub eta: Vec<ObjEntry>,
    pub mu: Vec<MorEntry>,
    pub e: Vec<MorEntry>,
    pub tensored: bool,
}

fn coeffs_out(xs: &[Scalar]) -> Coeffs {
    xs.iter().map(format_scalar).collect()
}

fn coeffs_in(xs: &[String]) -> Result<Vec<Scalar>, IoError> {
    Ok(xs.iter().map(|s| parse_scalar(s)).collect::<Result<_, _>>()?)
}

fn matrix_out(m: &Matrix) -> Vec<Coeffs> {
    m.to_rows().iter().map(|r| coeffs_out(r)).collect()
}

fn matrix_in(rows: &[Coeffs], shape: (usize, usize)) -> Result<Matrix, IoError> {
    let m = if rows.is_empty() {
        Matrix::zeros(0, shape.1)
    } else {
        Matrix::from_rows(rows.iter().map(|r| coeffs_in(r)).collect::<Result<_, _>>()?)?
    };
    if (m.rows(), m.cols()) != shape {
        return Err(IoError::Invalid(format!("matrix has shape {}x{}, expected {}x{}", m.rows(), m.cols(), shape.0, shape.1)));
    }
    Ok(m)
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

/// Name lookup within one object list.
struct Names<'a> {
    kind: &'static str,
    names: &'a [String],
}

impl Names<'_> {
    fn idx(&self, name: &str) -> Result<usize, IoError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| IoError::Unknown { kind: self.kind, name: name.to_string() })
    }

    fn all(&self, names: &[String]) -> Result<Vec<usize>, IoError> {
        names.iter().map(|n| self.idx(n)).collect()
    }
}

fn tuple<const K: usize>(names: &Names, objects: &[String]) -> Result<[usize; K], IoError> {
    let v = names.all(objects)?;
    v.try_into().map_err(|_| IoError::Invalid(format!("expected {K} objects, got {}", objects.len())))
}

fn cat_to_doc(c: &LinearMonCat) -> CatDoc {
    let nm = |i: usize| c.name(i).to_string();
    let n = c.len();
    let compose = triples(n)
        .filter_map(|(i, j, k)| {
            let entries: Vec<_> = c.compose_constants(i, j, k).nonzero().map(|(idx, x)| (idx, format_scalar(x))).collect();
            (!entries.is_empty()).then(|| Block { objects: vec![nm(i), nm(j), nm(k)], entries })
        })
        .collect();
    let mut tensor = Vec::new();
    for (i, j) in pairs(n) {
        for (k, l) in pairs(n) {
            let entries: Vec<_> = c.tensor_constants(i, j, k, l).nonzero().map(|(idx, x)| (idx, format_scalar(x))).collect();
            if !entries.is_empty() {
                tensor.push(Block { objects: vec![nm(i), nm(j), nm(k), nm(l)], entries });
            }
        }
    }
    CatDoc {
        objects: c.names().to_vec(),
        unit: nm(c.unit()),
        tensor_table: c.tensor_table().iter().map(|row| row.iter().map(|&x| nm(x)).collect()).collect(),
        hom_dims: c.hom_dims(),
        identities: (0..n).map(|i| coeffs_out(&c.id(i).coeffs)).collect(),
        compose,
        tensor,
    }
}

fn cat_from_doc(d: &CatDoc) -> Result<LinearMonCat, IoError> {
    let names = Names { kind: "object", names: &d.objects };
    let table = d.tensor_table.iter().map(|row| names.all(row)).collect::<Result<Vec<_>, _>>()?;
    let mut c = LinearMonCat::skeleton(d.objects.clone(), names.idx(&d.unit)?, table, d.hom_dims.clone())?;
    if d.identities.len() != d.objects.len() {
        return Err(IoError::Invalid("one identity per object expected".into()));
    }
    for (i, id) in d.identities.iter().enumerate() {
        c.set_identity(i, coeffs_in(id)?)?;
    }
    for b in &d.compose {
        let [i, j, k] = tuple::<3>(&names, &b.objects)?;
        for (idx, x) in &b.entries {
            c.set_compose((i, j, k), (idx[0], idx[1], idx[2]), parse_scalar(x)?)?;
        }
    }
    for b in &d.tensor {
        let [i, j, k, l] = tuple::<4>(&names, &b.objects)?;
        for (idx, x) in &b.entries {
            c.set_tensor((i, j, k, l), (idx[0], idx[1], idx[2]), parse_scalar(x)?)?;
        }
    }
    Ok(c)
}

pub fn base_to_doc(b: &PresentedBase) -> BaseDoc {
    let nm = |i: usize| b.cat().name(i).to_string();
    BaseDoc {
        kind: "base".into(),
        name: b.name().to_string(),
        cat: cat_to_doc(b.cat()),
        braiding: pairs(b.len())
            .map(|(u, v)| MorEntry { objects: vec![nm(u), nm(v)], coeffs: coeffs_out(&b.braid(u, v).coeffs) })
            .collect(),
        duality: b.duality().map(|d| DualityDoc {
            dual: d.dual.iter().map(|&i| nm(i)).collect(),
            ev: d.ev.iter().map(|m| coeffs_out(&m.coeffs)).collect(),
            coev: d.coev.iter().map(|m| coeffs_out(&m.coeffs)).collect(),
        }),
        zero_object: b.zero_object().map(nm),
    }
}

pub fn base_from_doc(d: &BaseDoc) -> Result<PresentedBase, IoError> {
    let cat = cat_from_doc(&d.cat)?;
    let names = Names { kind: "object", names: &d.cat.objects };
    let n = cat.len();
    let mut braiding: Vec<Option<Mor>> = vec![None; n * n];
    for e in &d.braiding {
        let [u, v] = tuple::<2>(&names, &e.objects)?;
        braiding[u * n + v] = Some(Mor::new(cat.tensor_obj(u, v), cat.tensor_obj(v, u), coeffs_in(&e.coeffs)?));
    }
    let braiding = braiding
        .into_iter()
        .enumerate()
        .map(|(k, b)| b.ok_or_else(|| IoError::Invalid(format!("braiding missing at ({}, {})", d.cat.objects[k / n], d.cat.objects[k % n]))))
        .collect::<Result<Vec<_>, _>>()?;
    let duality = match &d.duality {
        None => None,
        Some(dd) => {
            let dual = names.all(&dd.dual)?;
            if dd.ev.len() != n || dd.coev.len() != n || dual.len() != n {
                return Err(IoError::Invalid("duality data must cover every object".into()));
            }
            let ev = (0..n)
                .map(|i| Ok(Mor::new(cat.tensor_obj(dual[i], i), cat.unit(), coeffs_in(&dd.ev[i])?)))
                .collect::<Result<Vec<_>, IoError>>()?;
            let coev = (0..n)
                .map(|i| Ok(Mor::new(cat.unit(), cat.tensor_obj(i, dual[i]), coeffs_in(&dd.coev[i])?)))
                .collect::<Result<Vec<_>, IoError>>()?;
            Some(Duality { dual, ev, coev })
        }
    };
    let zero = d.zero_object.as_deref().map(|z| names.idx(z)).transpose()?;
    Ok(PresentedBase::new(d.name.clone(), cat, braiding, duality, zero)?)
}

pub fn vmoncat_to_doc(c: &VMonCat) -> VMonCatDoc {
    let v = c.base();
    let nm = |a: usize| c.object_name(a).to_string();
    let vn = |x: usize| v.cat().name(x).to_string();
    let n = c.len();
    let comp = triples(n)
        .filter(|&(a, b, x)| !c.comp(a, b, x).coeffs.is_empty())
        .map(|(a, b, x)| MorEntry { objects: vec![nm(a), nm(b), nm(x)], coeffs: coeffs_out(&c.comp(a, b, x).coeffs) })
        .collect();
    let mut tens = Vec::new();
    for (a, b) in pairs(n) {
        for (x, d) in pairs(n) {
            let m = c.tens(a, b, x, d);
            if !m.coeffs.is_empty() {
                tens.push(MorEntry { objects: vec![nm(a), nm(b), nm(x), nm(d)], coeffs: coeffs_out(&m.coeffs) });
            }
        }
    }
    VMonCatDoc {
        kind: "vcat".into(),
        name: c.name().to_string(),
        base: v.name().to_string(),
        objects: c.object_names().to_vec(),
        hom_obj: c.hom_table().iter().map(|row| row.iter().map(|&x| vn(x)).collect()).collect(),
        j: (0..n).map(|a| coeffs_out(&c.j(a).coeffs)).collect(),
        comp,
        unit: nm(c.unit()),
        tensor_table: c.tensor_table().iter().map(|row| row.iter().map(|&x| nm(x)).collect()).collect(),
        tens,
    }
}

pub fn vmoncat_from_doc(d: &VMonCatDoc, base: Arc<PresentedBase>) -> Result<VMonCat, IoError> {
    let names = Names { kind: "object", names: &d.objects };
    let vnames = Names { kind: "base object", names: base.names() };
    let n = d.objects.len();
    let hom_obj = d.hom_obj.iter().map(|row| vnames.all(row)).collect::<Result<Vec<_>, _>>()?;
    if hom_obj.len() != n || hom_obj.iter().any(|r| r.len() != n) {
        return Err(IoError::Invalid("hom_obj must be square over the objects".into()));
    }
    let hom = |a: usize, b: usize| hom_obj[a][b];
    if d.j.len() != n {
        return Err(IoError::Invalid("one unit j per object expected".into()));
    }
    let j = (0..n)
        .map(|a| Ok(Mor::new(base.unit(), hom(a, a), coeffs_in(&d.j[a])?)))
        .collect::<Result<Vec<_>, IoError>>()?;
    let mut comp_given = BTreeMap::new();
    for e in &d.comp {
        comp_given.insert(tuple::<3>(&names, &e.objects)?, coeffs_in(&e.coeffs)?);
    }
    let comp = triples(n)
        .map(|(a, b, x)| {
            let src = base.tensor_obj(hom(a, b), hom(b, x));
            Mor::new(src, hom(a, x), comp_given.remove(&[a, b, x]).unwrap_or_default())
        })
        .collect();
    let table = d.tensor_table.iter().map(|row| names.all(row)).collect::<Result<Vec<_>, _>>()?;
    let mut tens_given = BTreeMap::new();
    for e in &d.tens {
        tens_given.insert(tuple::<4>(&names, &e.objects)?, coeffs_in(&e.coeffs)?);
    }
    let mut tens = Vec::with_capacity(n * n * n * n);
    for (a, b) in pairs(n) {
        for (x, y) in pairs(n) {
            if table.len() != n || table.iter().any(|r| r.len() != n) {
                return Err(IoError::Invalid("tensor_table must be square over the objects".into()));
            }
            let src = base.tensor_obj(hom(a, x), hom(b, y));
            tens.push(Mor::new(src, hom(table[a][b], table[x][y]), tens_given.remove(&[a, b, x, y]).unwrap_or_default()));
        }
    }
    let unit = names.idx(&d.unit)?;
    let vcat = VCat::new(d.name.clone(), base, d.objects.clone(), hom_obj, j, comp)?;
    Ok(VMonCat::new(vcat, unit, table, tens)?)
}

fn object_map_out(src: &[String], dst: &[String], map: &[usize]) -> Vec<ObjMap> {
    map.iter().enumerate().map(|(a, &b)| ObjMap { object: src[a].clone(), image: dst[b].clone() }).collect()
}

fn object_map_in(src: &Names, dst: &Names, entries: &[ObjMap]) -> Result<Vec<usize>, IoError> {
    let mut map = vec![None; src.names.len()];
    for e in entries {
        map[src.idx(&e.object)?] = Some(dst.idx(&e.image)?);
    }
    map.into_iter()
        .enumerate()
        .map(|(a, m)| m.ok_or_else(|| IoError::Invalid(format!("object map misses {}", src.names[a]))))
        .collect()
}

fn pair_entries<T>(
    names: &Names,
    entries: &[T],
    objects: impl Fn(&T) -> &[String],
) -> Result<BTreeMap<[usize; 2], usize>, IoError> {
    let mut out = BTreeMap::new();
    for (k, e) in entries.iter().enumerate() {
        if out.insert(tuple::<2>(names, objects(e))?, k).is_some() {
            return Err(IoError::Invalid(format!("repeated entry for {:?}", objects(e))));
        }
    }
    Ok(out)
}

pub fn functor_to_doc(f: &VMonFunctor) -> FunctorDoc {
    let (s, t) = (f.source(), f.target());
    let n = s.len();
    let nm = |a: usize| s.object_name(a).to_string();
    FunctorDoc {
        kind: "functor".into(),
        name: f.name().to_string(),
        source: s.name().to_string(),
        target: t.name().to_string(),
        object_map: object_map_out(s.object_names(), t.object_names(), f.object_map()),
        components: pairs(n)
            .filter(|&(a, b)| !f.component(a, b).coeffs.is_empty())
            .map(|(a, b)| MorEntry { objects: vec![nm(a), nm(b)], coeffs: coeffs_out(&f.component(a, b).coeffs) })
            .collect(),
        laxitor: pairs(n)
            .filter(|&(a, b)| !f.laxitor(a, b).coeffs.is_empty())
            .map(|(a, b)| MorEntry { objects: vec![nm(a), nm(b)], coeffs: coeffs_out(&f.laxitor(a, b).coeffs) })
            .collect(),
        strong: f.is_strong(),
    }
}

pub fn functor_from_doc(d: &FunctorDoc, s: Arc<VMonCat>, t: Arc<VMonCat>) -> Result<VMonFunctor, IoError> {
    let sn = Names { kind: "object", names: s.object_names() };
    let tn = Names { kind: "object", names: t.object_names() };
    let object_map = object_map_in(&sn, &tn, &d.object_map)?;
    let v = s.base();
    let n = s.len();
    let comps = pair_entries(&sn, &d.components, |e| &e.objects)?;
    let laxs = pair_entries(&sn, &d.laxitor, |e| &e.objects)?;
    let mut components = Vec::with_capacity(n * n);
    let mut laxitor = Vec::with_capacity(n * n);
    for (a, b) in pairs(n) {
        let (ra, rb) = (object_map[a], object_map[b]);
        let c = comps.get(&[a, b]).map(|&k| coeffs_in(&d.components[k].coeffs)).transpose()?;
        components.push(Mor::new(s.hom(a, b), t.hom(ra, rb), c.unwrap_or_default()));
        let l = laxs.get(&[a, b]).map(|&k| coeffs_in(&d.laxitor[k].coeffs)).transpose()?;
        let dst = t.hom(t.tensor_obj(ra, rb), object_map[s.tensor_obj(a, b)]);
        laxitor.push(Mor::new(v.unit(), dst, l.unwrap_or_default()));
    }
    Ok(VMonFunctor::new(d.name.clone(), s, t, object_map, components, laxitor, d.strong)?)
}

fn obj_entries_out(names: &[String], ms: &[Mor]) -> Vec<ObjEntry> {
    ms.iter().enumerate().map(|(a, m)| ObjEntry { object: names[a].clone(), coeffs: coeffs_out(&m.coeffs) }).collect()
}

fn obj_entries_in(names: &Names, entries: &[ObjEntry]) -> Result<Vec<Option<Vec<Scalar>>>, IoError> {
    let mut out = vec![None; names.names.len()];
    for e in entries {
        let a = names.idx(&e.object)?;
        if out[a].replace(coeffs_in(&e.coeffs)?).is_some() {
            return Err(IoError::Invalid(format!("repeated entry for {}", e.object)));
        }
    }
    Ok(out)
}

pub fn transform_to_doc(t: &VTransform) -> TransformDoc {
    TransformDoc {
        kind: "transform".into(),
        name: t.name().to_string(),
        source: t.source().name().to_string(),
        target: t.target().name().to_string(),
        components: obj_entries_out(t.source().source().object_names(), t.components()),
    }
}

pub fn transform_from_doc(d: &TransformDoc, r: Arc<VMonFunctor>, s: Arc<VMonFunctor>) -> Result<VTransform, IoError> {
    let a = r.source().clone();
    let names = Names { kind: "object", names: a.object_names() };
    let given = obj_entries_in(&names, &d.components)?;
    let b = r.target();
    let components = given
        .into_iter()
        .enumerate()
        .map(|(x, c)| Mor::new(b.base().unit(), b.hom(r.obj(x), s.obj(x)), c.unwrap_or_default()))
        .collect();
    Ok(VTransform::new(d.name.clone(), r, s, components)?)
}

pub fn modtens_to_doc(m: &ModTensCat) -> ModTensDoc {
    let v = m.base();
    let c = m.cat();
    let vn = |x: usize| v.cat().name(x).to_string();
    let nv = v.len();
    let f_obj = m.domain().into_iter().map(|x| ObjMap { object: vn(x), image: c.name(m.f_obj(x).expect("domain")).to_string() }).collect();
    let f_mor = pairs(nv)
        .filter_map(|(x, y)| m.f_mor_table()[x * nv + y].as_ref().map(|mat| MatEntry { objects: vec![vn(x), vn(y)], matrix: matrix_out(mat) }))
        .collect();
    let mu = pairs(nv)
        .filter_map(|(x, y)| m.mu_table()[x * nv + y].as_ref().map(|mu| MorEntry { objects: vec![vn(x), vn(y)], coeffs: coeffs_out(&mu.coeffs) }))
        .collect();
    let mut e = Vec::new();
    for a in c.objects() {
        for x in 0..nv {
            if let Some(m) = &m.e_table()[a * nv + x] {
                e.push(MorEntry { objects: vec![c.name(a).to_string(), vn(x)], coeffs: coeffs_out(&m.coeffs) });
            }
        }
    }
    ModTensDoc {
        kind: "modtens".into(),
        name: m.name().to_string(),
        base: v.name().to_string(),
        provenance: match m.provenance() {
            Provenance::Computed { source, engine } => ProvenanceDoc::Computed { source: source.clone(), engine: engine.clone() },
            Provenance::Given => ProvenanceDoc::Given,
        },
        category: cat_to_doc(c),
        f_obj,
        f_mor,
        mu,
        e,
    }
}

pub fn modtens_from_doc(d: &ModTensDoc, base: Arc<PresentedBase>) -> Result<ModTensCat, IoError> {
    let c = cat_from_doc(&d.category)?;
    let vnames = Names { kind: "base object", names: base.names() };
    let names = Names { kind: "object", names: &d.category.objects };
    let nv = base.len();
    let mut f_obj = vec![None; nv];
    for e in &d.f_obj {
        f_obj[vnames.idx(&e.object)?] = Some(names.idx(&e.image)?);
    }
    let fdim = |x: usize, y: usize| -> Result<usize, IoError> {
        match (f_obj[x], f_obj[y]) {
            (Some(a), Some(b)) => Ok(c.hom_dim(a, b)),
            _ => Err(IoError::Invalid(format!("F undefined on {} or {}", base.cat().name(x), base.cat().name(y)))),
        }
    };
    let mut f_mor = vec![None; nv * nv];
    for e in &d.f_mor {
        let [x, y] = tuple::<2>(&vnames, &e.objects)?;
        f_mor[x * nv + y] = Some(matrix_in(&e.matrix, (fdim(x, y)?, base.hom_dim(x, y)))?);
    }
    let fo = |x: usize| f_obj[x].ok_or_else(|| IoError::Invalid(format!("F undefined on {}", base.cat().name(x))));
    let mut mu = vec![None; nv * nv];
    for e in &d.mu {
        let [x, y] = tuple::<2>(&vnames, &e.objects)?;
        let src = fo(base.tensor_obj(x, y))?;
        mu[x * nv + y] = Some(Mor::new(src, c.tensor_obj(fo(x)?, fo(y)?), coeffs_in(&e.coeffs)?));
    }
    let mut e_tab = vec![None; c.len() * nv];
    for e in &d.e {
        let objs: [&String; 2] = match e.objects.as_slice() {
            [a, x] => [a, x],
            _ => return Err(IoError::Invalid("half-braiding entries name an object and a base object".into())),
        };
        let (a, x) = (names.idx(objs[0])?, vnames.idx(objs[1])?);
        let fx = fo(x)?;
        e_tab[a * nv + x] = Some(Mor::new(c.tensor_obj(a, fx), c.tensor_obj(fx, a), coeffs_in(&e.coeffs)?));
    }
    let provenance = match &d.provenance {
        ProvenanceDoc::Computed { source, engine } => Provenance::Computed { source: source.clone(), engine: engine.clone() },
        ProvenanceDoc::Given => Provenance::Given,
    };
    Ok(ModTensCat::new(d.name.clone(), base, c, f_obj, f_mor, mu, e_tab, provenance)?)
}

pub fn cell1_to_doc(c: &ModTensCell1) -> Cell1Doc {
    let (a, b) = (c.source().cat(), c.target().cat());
    let n = a.len();
    let nm = |x: usize| a.name(x).to_string();
    let v = c.source().base();
    Cell1Doc {
        kind: "cell1".into(),
        name: c.name().to_string(),
        source: c.source().name().to_string(),
        target: c.target().name().to_string(),
        object_map: object_map_out(a.names(), b.names(), &c.functor().object_map),
        action: pairs(n)
            .filter(|&(x, y)| a.hom_dim(x, y) > 0)
            .map(|(x, y)| MatEntry { objects: vec![nm(x), nm(y)], matrix: matrix_out(c.functor().matrix(x, y)) })
            .collect(),
        rho: pairs(n)
            .filter(|&(x, y)| !c.rho(x, y).coeffs.is_empty())
            .map(|(x, y)| MorEntry { objects: vec![nm(x), nm(y)], coeffs: coeffs_out(&c.rho(x, y).coeffs) })
            .collect(),
        r: c.rs()
            .iter()
            .enumerate()
            .filter_map(|(x, r)| r.as_ref().map(|m| ObjEntry { object: v.cat().name(x).to_string(), coeffs: coeffs_out(&m.coeffs) }))
            .collect(),
        strong: c.is_strong(),
    }
}

pub fn cell1_from_doc(d: &Cell1Doc, s: Arc<ModTensCat>, t: Arc<ModTensCat>) -> Result<ModTensCell1, IoError> {
    let (a, b) = (s.cat(), t.cat());
    let an = Names { kind: "object", names: a.names() };
    let bn = Names { kind: "object", names: b.names() };
    let vn = Names { kind: "base object", names: s.base().names() };
    let object_map = object_map_in(&an, &bn, &d.object_map)?;
    let n = a.len();
    let acts = pair_entries(&an, &d.action, |e| &e.objects)?;
    let rhos = pair_entries(&an, &d.rho, |e| &e.objects)?;
    let mut action = Vec::with_capacity(n * n);
    let mut rho = Vec::with_capacity(n * n);
    for (x, y) in pairs(n) {
        let (rx, ry) = (object_map[x], object_map[y]);
        let shape = (b.hom_dim(rx, ry), a.hom_dim(x, y));
        action.push(match acts.get(&[x, y]) {
            Some(&k) => matrix_in(&d.action[k].matrix, shape)?,
            None => Matrix::zeros(shape.0, shape.1),
        });
        let coeffs = rhos.get(&[x, y]).map(|&k| coeffs_in(&d.rho[k].coeffs)).transpose()?;
        rho.push(Mor::new(b.tensor_obj(rx, ry), object_map[a.tensor_obj(x, y)], coeffs.unwrap_or_default()));
    }
    let functor = OrdFunctor { object_map: object_map.clone(), action };
    let given = obj_entries_in(&vn, &d.r)?;
    let mut r = Vec::with_capacity(given.len());
    for (x, coeffs) in given.into_iter().enumerate() {
        r.push(match coeffs {
            Some(cs) => Some(Mor::new(t.f_obj(x)?, object_map[s.f_obj(x)?], cs)),
            None => None,
        });
    }
    Ok(ModTensCell1::new(d.name.clone(), s, t, functor, rho, r, d.strong)?)
}

pub fn cell2_to_doc(t: &ModTensCell2) -> Cell2Doc {
    Cell2Doc {
        kind: "cell2".into(),
        name: t.name().to_string(),
        source: t.source().name().to_string(),
        target: t.target().name().to_string(),
        components: obj_entries_out(t.source().source().cat().names(), t.components()),
    }
}

pub fn cell2_from_doc(d: &Cell2Doc, r: Arc<ModTensCell1>, s: Arc<ModTensCell1>) -> Result<ModTensCell2, IoError> {
    let names = Names { kind: "object", names: r.source().cat().names() };
    let components = obj_entries_in(&names, &d.components)?
        .into_iter()
        .enumerate()
        .map(|(x, c)| Mor::new(r.obj(x), s.obj(x), c.unwrap_or_default()))
        .collect();
    Ok(ModTensCell2::new(d.name.clone(), r, s, components)?)
}

pub fn grading_to_doc(name: &str, category: &str, objects: &[String], g: &GradingAssignment) -> GradingDoc {
    let el = |i: usize| g.group.elements[i].clone();
    GradingDoc {
        kind: "grading".into(),
        name: name.to_string(),
        category: category.to_string(),
        group: GroupDoc {
            elements: g.group.elements.clone(),
            mult: g.group.mult.iter().map(|row| row.iter().map(|&x| el(x)).collect()).collect(),
            identity: el(g.group.identity),
            inverse: g.group.inverse.iter().map(|&x| el(x)).collect(),
        },
        degrees: g.degree.iter().enumerate().map(|(a, &d)| ObjMap { object: objects[a].clone(), image: el(d) }).collect(),
    }
}

pub fn grading_from_doc(d: &GradingDoc, objects: &[String]) -> Result<GradingAssignment, IoError> {
    let gn = Names { kind: "group element", names: &d.group.elements };
    let mult = d.group.mult.iter().map(|row| gn.all(row)).collect::<Result<Vec<_>, _>>()?;
    let group = FiniteGroup::new(d.group.elements.clone(), mult, gn.idx(&d.group.identity)?, gn.all(&d.group.inverse)?)?;
    let on = Names { kind: "object", names: objects };
    let degree = object_map_in(&on, &gn, &d.degrees)?;
    Ok(GradingAssignment::new(group, degree)?)
}

pub fn adjunction_to_doc(adj: &TensorAdjunction) -> AdjunctionDoc {
    let c = adj.cat();
    let v = c.base();
    let vn = |x: usize| v.cat().name(x).to_string();
    let dom = adj.domain();
    let mut mu = Vec::new();
    for &x in &dom {
        for &y in &dom {
            if let Ok(m) = adj.oplaxitor(x, y) {
                mu.push(MorEntry { objects: vec![vn(x), vn(y)], coeffs: coeffs_out(&m.coeffs) });
            }
        }
    }
    let mut e = Vec::new();
    for a in 0..c.len() {
        for &x in &dom {
            let m = adj.half_braiding(a, x).expect("domain object");
            e.push(MorEntry { objects: vec![c.object_name(a).to_string(), vn(x)], coeffs: coeffs_out(&m.coeffs) });
        }
    }
    AdjunctionDoc {
        kind: "adjunction".into(),
        category: c.name().to_string(),
        f_obj: dom
            .iter()
            .map(|&x| ObjMap { object: vn(x), image: c.object_name(adj.f_obj(x).expect("domain")).to_string() })
            .collect(),
        eta: dom.iter().map(|&x| ObjEntry { object: vn(x), coeffs: coeffs_out(&adj.eta(x).expect("domain").coeffs) }).collect(),
        mu,
        e,
        tensored: adj.is_tensored().unwrap_or(false),
    }
}

/// A validation report as JSON, with the same entries as the text form.
pub fn report_to_json(rep: &ValidationReport) -> String {
    #[derive(Serialize)]
    struct Doc {
        kind: &'static str,
        passed: bool,
        entries: Vec<crate::report::Entry>,
    }
    to_json(&Doc { kind: "report", passed: rep.passed(), entries: rep.entries() })
}

/// A grading together with the name of the category it grades.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGrading {
    pub name: String,
    pub category: String,
    pub grading: GradingAssignment,
}

/// Any single artifact.
#[derive(Debug, Clone)]
pub enum Artifact {
    Base(Arc<PresentedBase>),
    VMonCat(Arc<VMonCat>),
    Functor(Arc<VMonFunctor>),
    Transform(Arc<VTransform>),
    ModTens(Arc<ModTensCat>),
    Cell1(Arc<ModTensCell1>),
    Cell2(Arc<ModTensCell2>),
    Grading(Arc<NamedGrading>),
}

impl Artifact {
    pub fn name(&self) -> &str {
        match self {
            Artifact::Base(x) => x.name(),
            Artifact::VMonCat(x) => x.name(),
            Artifact::Functor(x) => x.name(),
            Artifact::Transform(x) => x.name(),
            Artifact::ModTens(x) => x.name(),
            Artifact::Cell1(x) => x.name(),
            Artifact::Cell2(x) => x.name(),
            Artifact::Grading(x) => &x.name,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Artifact::Base(_) => "base",
            Artifact::VMonCat(_) => "vcat",
            Artifact::Functor(_) => "functor",
            Artifact::Transform(_) => "transform",
            Artifact::ModTens(_) => "modtens",
            Artifact::Cell1(_) => "cell1",
            Artifact::Cell2(_) => "cell2",
            Artifact::Grading(_) => "grading",
        }
    }

    /// Canonical JSON text.
    pub fn to_json(&self, ws: &Workspace) -> String {
        match self {
            Artifact::Base(x) => to_json(&base_to_doc(x)),
            Artifact::VMonCat(x) => to_json(&vmoncat_to_doc(x)),
            Artifact::Functor(x) => to_json(&functor_to_doc(x)),
            Artifact::Transform(x) => to_json(&transform_to_doc(x)),
            Artifact::ModTens(x) => to_json(&modtens_to_doc(x)),
            Artifact::Cell1(x) => to_json(&cell1_to_doc(x)),
            Artifact::Cell2(x) => to_json(&cell2_to_doc(x)),
            Artifact::Grading(g) => {
                let objects = ws.grading_objects(&g.category).unwrap_or_default();
                to_json(&grading_to_doc(&g.name, &g.category, &objects, &g.grading))
            }
        }
    }
}

pub fn adjunction_to_json(adj: &TensorAdjunction) -> String {
    to_json(&adjunction_to_doc(adj))
}

/// Artifacts indexed by kind and name.
#[derive(Debug, Clone, Default)]
pub struct Workspace {
    pub bases: BTreeMap<String, Arc<PresentedBase>>,
    pub cats: BTreeMap<String, Arc<VMonCat>>,
    pub functors: BTreeMap<String, Arc<VMonFunctor>>,
    pub transforms: BTreeMap<String, Arc<VTransform>>,
    pub modtens: BTreeMap<String, Arc<ModTensCat>>,
    pub cells1: BTreeMap<String, Arc<ModTensCell1>>,
    pub cells2: BTreeMap<String, Arc<ModTensCell2>>,
    pub gradings: BTreeMap<String, Arc<NamedGrading>>,
}

fn lookup<T: Clone>(map: &BTreeMap<String, T>, kind: &'static str, name: &str) -> Result<T, IoError> {
    map.get(name).cloned().ok_or_else(|| IoError::Unknown { kind, name: name.to_string() })
}

fn insert_new<T: PartialEq>(map: &mut BTreeMap<String, T>, kind: &'static str, name: &str, x: T) -> Result<(), IoError> {
    match map.get(name) {
        Some(old) if *old == x => Ok(()),
        Some(_) => Err(IoError::Duplicate { kind, name: name.to_string() }),
        None => {
            map.insert(name.to_string(), x);
            Ok(())
        }
    }
}

fn parse<T: for<'de> Deserialize<'de>>(v: &Value, context: &str) -> Result<T, IoError> {
    serde_json::from_value(v.clone()).map_err(|source| IoError::Json { context: context.to_string(), source })
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds an artifact; re-adding an equal artifact under the same name is a no-op.
    pub fn insert(&mut self, a: Artifact) -> Result<(), IoError> {
        let name = a.name().to_string();
        match a {
            Artifact::Base(x) => insert_new(&mut self.bases, "base", &name, x),
            Artifact::VMonCat(x) => {
                self.insert(Artifact::Base(x.base().clone()))?;
                insert_new(&mut self.cats, "vcat", &name, x)
            }
            Artifact::Functor(x) => {
                self.insert(Artifact::VMonCat(x.source().clone()))?;
                self.insert(Artifact::VMonCat(x.target().clone()))?;
                insert_new(&mut self.functors, "functor", &name, x)
            }
            Artifact::Transform(x) => {
                self.insert(Artifact::Functor(x.source().clone()))?;
                self.insert(Artifact::Functor(x.target().clone()))?;
                insert_new(&mut self.transforms, "transform", &name, x)
            }
            Artifact::ModTens(x) => {
                self.insert(Artifact::Base(x.base().clone()))?;
                insert_new(&mut self.modtens, "modtens", &name, x)
            }
            Artifact::Cell1(x) => {
                self.insert(Artifact::ModTens(x.source().clone()))?;
                self.insert(Artifact::ModTens(x.target().clone()))?;
                insert_new(&mut self.cells1, "cell1", &name, x)
            }
            Artifact::Cell2(x) => {
                self.insert(Artifact::Cell1(x.source().clone()))?;
                self.insert(Artifact::Cell1(x.target().clone()))?;
                insert_new(&mut self.cells2, "cell2", &name, x)
            }
            Artifact::Grading(x) => insert_new(&mut self.gradings, "grading", &name, x),
        }
    }

    /// Parses JSON documents in any order and resolves their references.
    pub fn from_documents(docs: &[(String, Value)]) -> Result<Self, IoError> {
        let mut by_kind: BTreeMap<String, Vec<(&str, &Value)>> = BTreeMap::new();
        for (origin, v) in docs {
            let kind = v
                .get("kind")
                .and_then(Value::as_str)
                .ok_or_else(|| IoError::Invalid(format!("{origin}: document has no `kind`")))?;
            if !["base", "vcat", "functor", "transform", "modtens", "cell1", "cell2", "grading"].contains(&kind) {
                return Err(IoError::Kind(kind.to_string()));
            }
            by_kind.entry(kind.to_string()).or_default().push((origin, v));
        }
        let docs_of = |k: &str| by_kind.get(k).cloned().unwrap_or_default();
        let mut ws = Workspace::new();
        for (o, v) in docs_of("base") {
            let b = base_from_doc(&parse::<BaseDoc>(v, o)?)?;
            let name = b.name().to_string();
            insert_new(&mut ws.bases, "base", &name, Arc::new(b))?;
        }
        for (o, v) in docs_of("vcat") {
            let d: VMonCatDoc = parse(v, o)?;
            let c = vmoncat_from_doc(&d, lookup(&ws.bases, "base", &d.base)?)?;
            insert_new(&mut ws.cats, "vcat", &d.name, Arc::new(c))?;
        }
        for (o, v) in docs_of("functor") {
            let d: FunctorDoc = parse(v, o)?;
            let f = functor_from_doc(&d, lookup(&ws.cats, "vcat", &d.source)?, lookup(&ws.cats, "vcat", &d.target)?)?;
            insert_new(&mut ws.functors, "functor", &d.name, Arc::new(f))?;
        }
        for (o, v) in docs_of("transform") {
            let d: TransformDoc = parse(v, o)?;
            let t = transform_from_doc(&d, lookup(&ws.functors, "functor", &d.source)?, lookup(&ws.functors, "functor", &d.target)?)?;
            insert_new(&mut ws.transforms, "transform", &d.name, Arc::new(t))?;
        }
        for (o, v) in docs_of("modtens") {
            let d: ModTensDoc = parse(v, o)?;
            let m = modtens_from_doc(&d, lookup(&ws.bases, "base", &d.base)?)?;
            insert_new(&mut ws.modtens, "modtens", &d.name, Arc::new(m))?;
        }
        for (o, v) in docs_of("cell1") {
            let d: Cell1Doc = parse(v, o)?;
            let c = cell1_from_doc(&d, lookup(&ws.modtens, "modtens", &d.source)?, lookup(&ws.modtens, "modtens", &d.target)?)?;
            insert_new(&mut ws.cells1, "cell1", &d.name, Arc::new(c))?;
        }
        for (o, v) in docs_of("cell2") {
            let d: Cell2Doc = parse(v, o)?;
            let t = cell2_from_doc(&d, lookup(&ws.cells1, "cell1", &d.source)?, lookup(&ws.cells1, "cell1", &d.target)?)?;
            insert_new(&mut ws.cells2, "cell2", &d.name, Arc::new(t))?;
        }
        for (o, v) in docs_of("grading") {
            let d: GradingDoc = parse(v, o)?;
            let objects = ws
                .grading_objects(&d.category)
                .ok_or_else(|| IoError::Unknown { kind: "category", name: d.category.clone() })?;
            let g = grading_from_doc(&d, &objects)?;
            let ng = NamedGrading { name: d.name.clone(), category: d.category.clone(), grading: g };
            insert_new(&mut ws.gradings, "grading", &d.name, Arc::new(ng))?;
        }
        Ok(ws)
    }

    /// Loads files and directories (non-recursively, in sorted order).
    /// References that none of them define are looked up as
    /// `<name>.<ext>` (lower case) next to the files that mention them.
    pub fn load(paths: &[PathBuf]) -> Result<Self, IoError> {
        let mut files = Vec::new();
        for p in paths {
            if p.is_dir() {
                let rd = std::fs::read_dir(p).map_err(|source| IoError::Read { path: p.clone(), source })?;
                let mut entries: Vec<PathBuf> = rd.filter_map(|e| e.ok().map(|e| e.path())).filter(|q| q.is_file()).collect();
                entries.sort();
                files.extend(entries);
            } else {
                files.push(p.clone());
            }
        }
        let mut docs: Vec<(PathBuf, Value)> = Vec::new();
        for f in files {
            let v = read_json(&f)?;
            docs.push((f, v));
        }
        let mut k = 0;
        while k < docs.len() {
            let (path, v) = (docs[k].0.clone(), docs[k].1.clone());
            k += 1;
            let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
            for (exts, name) in references(&v) {
                let defined = docs.iter().any(|(_, d)| {
                    d.get("name").and_then(Value::as_str) == Some(name.as_str())
                        && exts.iter().any(|e| d.get("kind").and_then(Value::as_str) == Some(kind_of_ext(e)))
                });
                if defined {
                    continue;
                }
                if let Some(found) = exts.iter().map(|e| dir.join(format!("{}.{e}", safe_name(&name)))).find(|c| c.is_file()) {
                    if !docs.iter().any(|(q, _)| *q == found) {
                        let v = read_json(&found)?;
                        docs.push((found, v));
                    }
                }
            }
        }
        let docs: Vec<(String, Value)> = docs.into_iter().map(|(p, v)| (p.display().to_string(), v)).collect();
        Self::from_documents(&docs)
    }

    /// Writes every artifact into `dir` under its conventional file name.
    pub fn write_dir(&self, dir: &Path) -> Result<Vec<PathBuf>, IoError> {
        std::fs::create_dir_all(dir).map_err(|source| IoError::Read { path: dir.to_path_buf(), source })?;
        let mut out = Vec::new();
        for a in self.artifacts() {
            let path = dir.join(file_name(&a));
            std::fs::write(&path, a.to_json(self)).map_err(|source| IoError::Read { path: path.clone(), source })?;
            out.push(path);
        }
        Ok(out)
    }

    /// Objects of the enriched or module tensor category called `name`.
    pub fn grading_objects(&self, name: &str) -> Option<Vec<String>> {
        self.cats
            .get(name)
            .map(|c| c.object_names().to_vec())
            .or_else(|| self.modtens.get(name).map(|m| m.cat().names().to_vec()))
    }

    /// Every artifact, in kind order and then name order.
    pub fn artifacts(&self) -> Vec<Artifact> {
        let mut out: Vec<Artifact> = Vec::new();
        out.extend(self.bases.values().cloned().map(Artifact::Base));
        out.extend(self.cats.values().cloned().map(Artifact::VMonCat));
        out.extend(self.functors.values().cloned().map(Artifact::Functor));
        out.extend(self.transforms.values().cloned().map(Artifact::Transform));
        out.extend(self.modtens.values().cloned().map(Artifact::ModTens));
        out.extend(self.cells1.values().cloned().map(Artifact::Cell1));
        out.extend(self.cells2.values().cloned().map(Artifact::Cell2));
        out.extend(self.gradings.values().cloned().map(Artifact::Grading));
        out
    }

    /// The enriched side of a module tensor category: the named source of a
    /// computed one, or a reconstruction of a given one. Fails unless `P0` of
    /// the result reproduces `m` exactly.
    pub fn lift_of(&self, m: &Arc<ModTensCat>) -> Result<Lifted, IoError> {
        let cat = match m.provenance() {
            Provenance::Computed { source, .. } => lookup(&self.cats, "vcat", source)?,
            Provenance::Given => Arc::new(reconstruct(m)?),
        };
        let l = p0(cat)?;
        let mut computed = (*l.modtens).clone();
        if matches!(m.provenance(), Provenance::Given) {
            computed = computed.with_provenance(Provenance::Given);
        }
        if computed.renamed(m.name()) != **m {
            return Err(IoError::Invalid(format!("{} differs from the module tensor category computed from its source", m.name())));
        }
        Ok(Lifted { modtens: m.clone(), ..l })
    }
}

pub fn read_json(path: &Path) -> Result<Value, IoError> {
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read { path: path.to_path_buf(), source })?;
    serde_json::from_str(&text).map_err(|source| IoError::Json { context: path.display().to_string(), source })
}

fn kind_of_ext(ext: &str) -> &'static str {
    match ext {
        "base" => "base",
        "vcat" => "vcat",
        "fun" => "functor",
        "nat" => "transform",
        "modtens" => "modtens",
        "cell1" => "cell1",
        "cell2" => "cell2",
        _ => "grading",
    }
}

fn ext_of_kind(kind: &str) -> &'static str {
    match kind {
        "base" => "base",
        "vcat" => "vcat",
        "functor" => "fun",
        "transform" => "nat",
        "modtens" => "modtens",
        "cell1" => "cell1",
        "cell2" => "cell2",
        _ => "grading",
    }
}

/// Names a document refers to, with the file extensions that may define them.
fn references(v: &Value) -> Vec<(Vec<&'static str>, String)> {
    let field = |k: &str| v.get(k).and_then(Value::as_str).map(str::to_string);
    let mut out = Vec::new();
    let mut push = |exts: &[&'static str], name: Option<String>| {
        if let Some(n) = name {
            out.push((exts.to_vec(), n));
        }
    };
    match v.get("kind").and_then(Value::as_str).unwrap_or("") {
        "vcat" => push(&["base"], field("base")),
        "functor" => {
            push(&["vcat"], field("source"));
            push(&["vcat"], field("target"));
        }
        "transform" => {
            push(&["fun"], field("source"));
            push(&["fun"], field("target"));
        }
        "modtens" => {
            push(&["base"], field("base"));
            let src = v.pointer("/provenance/computed/source").and_then(Value::as_str).map(str::to_string);
            push(&["vcat"], src);
        }
        "cell1" => {
            push(&["modtens"], field("source"));
            push(&["modtens"], field("target"));
        }
        "cell2" => {
            push(&["cell1"], field("source"));
            push(&["cell1"], field("target"));
        }
        "grading" => push(&["vcat", "modtens"], field("category")),
        _ => {}
    }
    out
}

fn safe_name(name: &str) -> String {
    name.to_lowercase().chars().map(|c| if c.is_alphanumeric() || c == '_' || c == '-' || c == '.' { c } else { '_' }).collect()
}

/// Conventional file name of an artifact, `<name>.<ext>` in lower case.
pub fn file_name(a: &Artifact) -> String {
    format!("{}.{}", safe_name(a.name()), ext_of_kind(a.kind()))
}

fn grading(name: &str, category: &str, group: FiniteGroup, degree: Vec<usize>) -> Artifact {
    let grading = GradingAssignment::new(group, degree).expect("valid degree map");
    Artifact::Grading(Arc::new(NamedGrading { name: name.into(), category: category.into(), grading }))
}

/// The shipped fixture set: bases, enriched categories, functors,
/// transformations and gradings. Every artifact in it validates.
pub fn fixture_workspace() -> Workspace {
    let mut ws = Workspace::new();
    let mut artifacts = Vec::new();
    for b in [fixtures::triv(), fixtures::svec(), fixtures::zz22(), fixtures::trivz(), fixtures::dual_numbers(), fixtures::triv2()] {
        artifacts.push(Artifact::Base(Arc::new(b)));
    }
    artifacts.extend(fixtures::enriched_fixtures().into_iter().map(Artifact::VMonCat));
    for c in [fixtures::unit_cat(), fixtures::pt2(), fixtures::pt4()] {
        artifacts.push(Artifact::Functor(fixtures::id_functor(c)));
    }
    for f in [fixtures::incl(), fixtures::proj(), fixtures::twist(), fixtures::dbl()] {
        artifacts.push(Artifact::Functor(f));
    }
    for t in [fixtures::sign(), fixtures::sign4(), fixtures::dsign(), fixtures::double_x()] {
        artifacts.push(Artifact::Transform(t));
    }
    artifacts.push(grading("PT2_Z2", "PT2", FiniteGroup::cyclic(2), vec![0, 1]));
    artifacts.push(grading("PT4_Z4", "PT4", FiniteGroup::cyclic(4), vec![0, 1, 2, 3]));
    artifacts.push(grading("UNIT_TRIVIAL", "UNIT", FiniteGroup::trivial(), vec![0]));
    for a in artifacts {
        ws.insert(a).expect("fixture names are unique");
    }
    ws
}

/// Deliberately invalid artifacts: SVEC with a broken braiding and PT2 graded
/// with `deg(x) = e`.
pub fn negative_workspace() -> Workspace {
    let mut ws = Workspace::new();
    for a in [
        Artifact::Base(Arc::new(fixtures::svec_broken())),
        Artifact::VMonCat(fixtures::pt2()),
        grading("PT2_MISGRADED", "PT2", FiniteGroup::cyclic(2), vec![0, 0]),
    ] {
        ws.insert(a).expect("fixture names are unique");
    }
    ws
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivalence::Lifts;

    fn roundtrip_text(ws: &Workspace) {
        let docs: Vec<(String, Value)> = ws
            .artifacts()
            .iter()
            .rev()
            .map(|a| (file_name(a), serde_json::from_str(&a.to_json(ws)).unwrap()))
            .collect();
        let back = Workspace::from_documents(&docs).unwrap();
        let before: Vec<String> = ws.artifacts().iter().map(|a| a.to_json(ws)).collect();
        let after: Vec<String> = back.artifacts().iter().map(|a| a.to_json(&back)).collect();
        assert_eq!(before, after);
    }

    #[test]
    fn fixtures_roundtrip_byte_exact() {
        let ws = fixture_workspace();
        roundtrip_text(&ws);
        let back = Workspace::from_documents(
            &ws.artifacts().iter().map(|a| (file_name(a), serde_json::from_str(&a.to_json(&ws)).unwrap())).collect::<Vec<_>>(),
        )
        .unwrap();
        for (k, c) in &ws.cats {
            assert_eq!(**c, *back.cats[k]);
        }
        for (k, f) in &ws.functors {
            assert_eq!(**f, *back.functors[k]);
        }
        for (k, b) in &ws.bases {
            assert_eq!(**b, *back.bases[k]);
        }
    }

    #[test]
    fn computed_cells_roundtrip() {
        let mut ws = fixture_workspace();
        let mut lifts = Lifts::new();
        for f in [fixtures::incl(), fixtures::twist(), fixtures::dbl()] {
            ws.insert(Artifact::Cell1(Arc::new(lifts.p1(&f).unwrap()))).unwrap();
        }
        for t in [fixtures::sign(), fixtures::dsign()] {
            ws.insert(Artifact::Cell2(Arc::new(lifts.p2(&t).unwrap()))).unwrap();
        }
        for c in fixtures::enriched_fixtures() {
            ws.insert(Artifact::ModTens(lifts.get(&c).unwrap().modtens.clone())).unwrap();
        }
        roundtrip_text(&ws);
    }

    #[test]
    fn computed_modtens_lifts_to_its_source() {
        let ws = fixture_workspace();
        let m = p0(fixtures::pt2()).unwrap().modtens;
        let l = ws.lift_of(&m).unwrap();
        assert_eq!(*l.cat, *fixtures::pt2());
        let given = Arc::new(m.with_provenance(Provenance::Given));
        assert_eq!(ws.lift_of(&given).unwrap().modtens, given);
    }

    #[test]
    fn unknown_references_are_named() {
        let f = functor_to_doc(&fixtures::incl());
        let docs = vec![("incl".to_string(), serde_json::to_value(f).unwrap())];
        let err = Workspace::from_documents(&docs).unwrap_err();
        assert!(err.to_string().contains("UNIT"), "{err}");
    }

    #[test]
    fn malformed_scalars_are_rejected() {
        let mut v = serde_json::to_value(base_to_doc(&fixtures::svec())).unwrap();
        v["identities"][0][0] = Value::from("1/0");
        assert!(Workspace::from_documents(&[("svec".into(), v)]).is_err());
    }
}
