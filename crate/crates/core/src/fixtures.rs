//! Desk-scale fixtures used by tests, the CLI, and the shipped fixture files.

use std::sync::Arc;

use num_traits::One;

use crate::base::{Duality, PresentedBase};
use crate::category::{pairs, LinearMonCat, Mor};
use crate::enriched::{self_enrichment, VCat, VMonCat, VMonFunctor, VTransform};
use crate::scalar::{int, Scalar};

fn names(ns: &[&str]) -> Vec<String> {
    ns.iter().map(|s| s.to_string()).collect()
}

/// Vector spaces graded by a finite abelian group, one simple line per
/// element, with braiding `β_{g,h} = sign(g,h)·id`.
///
/// `mult` is the group table with identity at index 0 and `inv` the inverse
/// table; every line is its own dual up to the group inverse.
fn graded_lines(
    name: &str,
    object_names: &[&str],
    mult: &[Vec<usize>],
    inv: &[usize],
    sign: impl Fn(usize, usize) -> i64,
) -> PresentedBase {
    let n = object_names.len();
    let homs = (0..n).map(|i| (0..n).map(|j| usize::from(i == j)).collect()).collect();
    let mut cat = LinearMonCat::skeleton(names(object_names), 0, mult.to_vec(), homs).expect("valid skeleton");
    for i in 0..n {
        cat.set_identity(i, vec![Scalar::one()]).expect("identity");
        cat.set_compose((i, i, i), (0, 0, 0), Scalar::one()).expect("compose");
        for k in 0..n {
            cat.set_tensor((i, i, k, k), (0, 0, 0), Scalar::one()).expect("tensor");
        }
    }
    let braiding = (0..n)
        .flat_map(|g| (0..n).map(move |h| (g, h)))
        .map(|(g, h)| {
            let o = mult[g][h];
            Mor::new(o, o, vec![int(sign(g, h))])
        })
        .collect();
    let duality = Duality {
        dual: inv.to_vec(),
        ev: (0..n).map(|_| Mor::new(0, 0, vec![Scalar::one()])).collect(),
        coev: (0..n).map(|_| Mor::new(0, 0, vec![Scalar::one()])).collect(),
    };
    PresentedBase::new(name, cat, braiding, Some(duality), None).expect("valid base")
}

/// One object with one-dimensional endomorphisms.
pub fn triv() -> PresentedBase {
    graded_lines("TRIV", &["1"], &[vec![0]], &[0], |_, _| 1)
}

/// Super vector spaces: `ℤ/2`-graded lines with `β_{1,1} = −1`.
pub fn svec() -> PresentedBase {
    let mult = vec![vec![0, 1], vec![1, 0]];
    graded_lines("SVEC", &["0", "1"], &mult, &[0, 1], |g, h| if g == 1 && h == 1 { -1 } else { 1 })
}

/// `ℤ/2×ℤ/2`-graded lines with the non-symmetric braiding `β_{g,h} = (−1)^{g₁h₂}`.
///
/// Object `g₁ + 2g₂` is the line of degree `(g₁, g₂)`.
pub fn zz22() -> PresentedBase {
    let mult: Vec<Vec<usize>> = (0..4).map(|g| (0..4).map(|h| g ^ h).collect()).collect();
    graded_lines("ZZ22", &["00", "10", "01", "11"], &mult, &[0, 1, 2, 3], |g, h| {
        if g & 1 == 1 && h & 2 == 2 {
            -1
        } else {
            1
        }
    })
}

/// The trivial base together with a zero object `z`.
pub fn trivz() -> PresentedBase {
    let mut cat = LinearMonCat::skeleton(
        names(&["1", "z"]),
        0,
        vec![vec![0, 1], vec![1, 1]],
        vec![vec![1, 0], vec![0, 0]],
    )
    .expect("valid skeleton");
    cat.set_identity(0, vec![Scalar::one()]).expect("identity");
    cat.set_compose((0, 0, 0), (0, 0, 0), Scalar::one()).expect("compose");
    cat.set_tensor((0, 0, 0, 0), (0, 0, 0), Scalar::one()).expect("tensor");
    let braiding = vec![
        Mor::new(0, 0, vec![Scalar::one()]),
        Mor::new(1, 1, vec![]),
        Mor::new(1, 1, vec![]),
        Mor::new(1, 1, vec![]),
    ];
    PresentedBase::new("TRIVZ", cat, braiding, None, Some(1)).expect("valid base")
}

/// One object whose endomorphism algebra is the dual numbers `ℚ[ε]/ε²`.
pub fn dual_numbers() -> PresentedBase {
    let mut cat =
        LinearMonCat::skeleton(names(&["1"]), 0, vec![vec![0]], vec![vec![2]]).expect("valid skeleton");
    cat.set_identity(0, vec![Scalar::one(), int(0)]).expect("identity");
    for (p, q) in [(0, 0), (0, 1), (1, 0)] {
        cat.set_compose((0, 0, 0), (p, q, p + q), Scalar::one()).expect("compose");
        cat.set_tensor((0, 0, 0, 0), (p, q, p + q), Scalar::one()).expect("tensor");
    }
    let one = Mor::new(0, 0, vec![Scalar::one(), int(0)]);
    let duality = Duality { dual: vec![0], ev: vec![one.clone()], coev: vec![one.clone()] };
    PresentedBase::new("DUAL", cat, vec![one], Some(duality), None).expect("valid base")
}

/// Two isomorphic copies `1, x` of the unit line with `x⊗x = 1`: every hom
/// space is one-dimensional, so distinct objects have nonzero homs.
pub fn triv2() -> PresentedBase {
    let mult = vec![vec![0, 1], vec![1, 0]];
    let mut cat = LinearMonCat::skeleton(names(&["1", "x"]), 0, mult, vec![vec![1, 1], vec![1, 1]]).expect("valid skeleton");
    for i in 0..2 {
        cat.set_identity(i, vec![Scalar::one()]).expect("identity");
    }
    for (i, j) in pairs(2) {
        for k in 0..2 {
            cat.set_compose((i, j, k), (0, 0, 0), Scalar::one()).expect("compose");
        }
        for (k, l) in pairs(2) {
            cat.set_tensor((i, j, k, l), (0, 0, 0), Scalar::one()).expect("tensor");
        }
    }
    let braiding = pairs(2).map(|(u, v)| Mor::new(u ^ v, u ^ v, vec![Scalar::one()])).collect();
    let one = Mor::new(0, 0, vec![Scalar::one()]);
    let duality = Duality { dual: vec![0, 1], ev: vec![one.clone(), one.clone()], coev: vec![one.clone(), one] };
    PresentedBase::new("TRIV2", cat, braiding, Some(duality), None).expect("valid base")
}

fn vhat(base: PresentedBase) -> Arc<VMonCat> {
    Arc::new(self_enrichment(Arc::new(base)).expect("rigid base fixture"))
}

pub fn vhat_triv() -> Arc<VMonCat> {
    vhat(triv())
}

pub fn vhat_svec() -> Arc<VMonCat> {
    vhat(svec())
}

pub fn vhat_zz22() -> Arc<VMonCat> {
    vhat(zz22())
}

pub fn vhat_dual() -> Arc<VMonCat> {
    vhat(dual_numbers())
}

pub fn vhat_triv2() -> Arc<VMonCat> {
    vhat(triv2())
}

/// Every enriched monoidal fixture.
pub fn enriched_fixtures() -> Vec<Arc<VMonCat>> {
    vec![vhat_triv(), vhat_svec(), vhat_zz22(), vhat_dual(), vhat_triv2(), unit_cat(), pt2(), pt4()]
}

/// Cyclic group `ℤ/n` as a pointed category over [`trivz`]: every object has
/// endomorphisms `1_𝒱`, distinct objects have the zero object as hom, and all
/// structure constants are 1.
fn pointed_cyclic(name: &str, object_names: &[&str]) -> Arc<VMonCat> {
    let base = Arc::new(trivz());
    let n = object_names.len();
    let (one, z) = (0, 1);
    let hom = |a: usize, b: usize| if a == b { one } else { z };
    let hom_obj = (0..n).map(|a| (0..n).map(|b| hom(a, b)).collect()).collect();
    let scalar = |src: usize, dst: usize| {
        if src == one && dst == one {
            Mor::new(one, one, vec![Scalar::one()])
        } else {
            Mor::new(src, dst, vec![])
        }
    };
    let j = (0..n).map(|_| scalar(one, one)).collect();
    let mut comp = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                comp.push(scalar(base.tensor_obj(hom(a, b), hom(b, c)), hom(a, c)));
            }
        }
    }
    let mult = |a: usize, b: usize| (a + b) % n;
    let mut tens = Vec::with_capacity(n * n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    tens.push(scalar(base.tensor_obj(hom(a, c), hom(b, d)), hom(mult(a, b), mult(c, d))));
                }
            }
        }
    }
    let table = (0..n).map(|a| (0..n).map(|b| mult(a, b)).collect()).collect();
    let vcat = VCat::new(name, base, names(object_names), hom_obj, j, comp).expect("valid pointed category");
    Arc::new(VMonCat::new(vcat, 0, table, tens).expect("valid pointed category"))
}

/// Two objects `{1, x}` with `x⊗x = 1`.
pub fn pt2() -> Arc<VMonCat> {
    pointed_cyclic("PT2", &["1", "x"])
}

/// The one-object category over [`trivz`].
pub fn unit_cat() -> Arc<VMonCat> {
    pointed_cyclic("UNIT", &["1"])
}

/// Four objects `x^k` with `x^4 = 1`.
pub fn pt4() -> Arc<VMonCat> {
    pointed_cyclic("PT4", &["1", "x", "x2", "x3"])
}

/// A functor between pointed categories given by a group homomorphism on
/// objects and a normalized 2-cocycle `laxitor(a, b)` of scalars.
fn pointed_functor(
    name: &str,
    source: Arc<VMonCat>,
    target: Arc<VMonCat>,
    object_map: Vec<usize>,
    laxitor: impl Fn(usize, usize) -> Scalar,
    strong: bool,
) -> VMonFunctor {
    let n = source.len();
    let components = pairs(n)
        .map(|(a, b)| {
            let (src, dst) = (source.hom(a, b), target.hom(object_map[a], object_map[b]));
            if a == b {
                Mor::new(src, dst, vec![Scalar::one()])
            } else {
                Mor::new(src, dst, vec![])
            }
        })
        .collect();
    let lax = pairs(n).map(|(a, b)| Mor::new(0, 0, vec![laxitor(a, b)])).collect();
    VMonFunctor::new(name, source, target, object_map, components, lax, strong).expect("valid pointed functor")
}

/// The inclusion of the unit category into PT2.
pub fn incl() -> Arc<VMonFunctor> {
    Arc::new(pointed_functor("incl", unit_cat(), pt2(), vec![0], |_, _| Scalar::one(), true))
}

/// The projection PT2 → UNIT collapsing `x` to `1`.
pub fn proj() -> Arc<VMonFunctor> {
    Arc::new(pointed_functor("proj", pt2(), unit_cat(), vec![0, 0], |_, _| Scalar::one(), true))
}

/// The identity on PT2 with laxitor 2 at `(x, x)`: a strong functor with a
/// nontrivial laxitor.
pub fn twist() -> Arc<VMonFunctor> {
    Arc::new(pointed_functor("twist", pt2(), pt2(), vec![0, 1], |a, b| int(if a == 1 && b == 1 { 2 } else { 1 }), true))
}

/// PT2 → PT4 sending `x` to `x2`.
pub fn dbl() -> Arc<VMonFunctor> {
    Arc::new(pointed_functor("dbl", pt2(), pt4(), vec![0, 2], |_, _| Scalar::one(), true))
}

pub fn id_functor(c: Arc<VMonCat>) -> Arc<VMonFunctor> {
    Arc::new(VMonFunctor::identity(c))
}

/// A transformation between functors into a pointed category, with scalar
/// components.
fn scalar_transform(name: &str, source: Arc<VMonFunctor>, target: Arc<VMonFunctor>, values: &[i64]) -> VTransform {
    let components = values.iter().map(|&x| Mor::new(0, 0, vec![int(x)])).collect();
    VTransform::new(name, source, target, components).expect("valid transformation")
}

/// `θ_1 = 1`, `θ_x = −1` on the identity of PT2.
pub fn sign() -> Arc<VTransform> {
    let id = id_functor(pt2());
    Arc::new(scalar_transform("sign", id.clone(), id, &[1, -1]))
}

/// `θ_{x^k} = (−1)^k` on the identity of PT4.
pub fn sign4() -> Arc<VTransform> {
    let id = id_functor(pt4());
    Arc::new(scalar_transform("sign4", id.clone(), id, &[1, -1, 1, -1]))
}

/// `φ_1 = 1`, `φ_x = −1` on [`dbl`].
pub fn dsign() -> Arc<VTransform> {
    let d = dbl();
    Arc::new(scalar_transform("dsign", d.clone(), d, &[1, -1]))
}

/// A non-monoidal transformation on the identity of PT2: `θ_x = 2`.
pub fn double_x() -> Arc<VTransform> {
    let id = id_functor(pt2());
    Arc::new(scalar_transform("double_x", id.clone(), id, &[1, 2]))
}

pub fn id_transform(f: Arc<VMonFunctor>) -> Arc<VTransform> {
    Arc::new(VTransform::identity(f))
}

/// SVEC with `β_{1,1} = 2`, which breaks the hexagons.
pub fn svec_broken() -> PresentedBase {
    svec()
        .with_braid(1, 1, Mor::new(0, 0, vec![int(2)]))
        .expect("same shape")
        .renamed("SVEC_BROKEN")
}
