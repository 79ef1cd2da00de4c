//! Finite groups, gradings by them, and the graded validators on both sides.

use crate::category::{pairs, triples, CatError};
use crate::enriched::VMonCat;
use crate::modtens::{ModTensCat, ModTensCell1};
use crate::report::ValidationReport;
use crate::witness;

/// A finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    pub elements: Vec<String>,
    pub mult: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Rejects tables that are not square or that index out of range; the group
    /// axioms themselves are checked by [`validate_group`].
    pub fn new(elements: Vec<String>, mult: Vec<Vec<usize>>, identity: usize, inverse: Vec<usize>) -> Result<Self, CatError> {
        let n = elements.len();
        let square = mult.len() == n && mult.iter().all(|row| row.len() == n && row.iter().all(|&x| x < n));
        if !square || inverse.len() != n || inverse.iter().any(|&x| x >= n) || identity >= n {
            return Err(CatError::Malformed("group table does not match its element list".into()));
        }
        Ok(FiniteGroup { elements, mult, identity, inverse })
    }

    /// `ℤ/n` with elements named `0, …, n-1`.
    pub fn cyclic(n: usize) -> Self {
        FiniteGroup {
            elements: (0..n).map(|k| k.to_string()).collect(),
            mult: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
            identity: 0,
            inverse: (0..n).map(|a| (n - a) % n).collect(),
        }
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }
}

/// Associativity, identity and inverses, by enumeration.
pub fn validate_group(g: &FiniteGroup) -> ValidationReport {
    let mut rep = ValidationReport::new();
    let n = g.order();
    for (a, b, c) in triples(n) {
        rep.record("group.assoc", "(ab)c = a(bc)", g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)), witness!(a = a, b = b, c = c));
    }
    for a in 0..n {
        rep.record("group.identity", "ea = ae = a", g.mul(g.identity, a) == a && g.mul(a, g.identity) == a, witness!(a = a));
        let inv = g.inverse[a];
        rep.record(
            "group.inverse",
            "a⁻¹a = aa⁻¹ = e",
            g.mul(inv, a) == g.identity && g.mul(a, inv) == g.identity,
            witness!(a = a),
        );
    }
    rep
}

/// A degree for every object of a category.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradingAssignment {
    pub group: FiniteGroup,
    pub degree: Vec<usize>,
}

impl GradingAssignment {
    pub fn new(group: FiniteGroup, degree: Vec<usize>) -> Result<Self, CatError> {
        if degree.iter().any(|&d| d >= group.order()) {
            return Err(CatError::Malformed("degree outside the group".into()));
        }
        Ok(GradingAssignment { group, degree })
    }

    pub fn deg(&self, a: usize) -> usize {
        self.degree[a]
    }
}

fn check_degrees(
    rep: &mut ValidationReport,
    g: &GradingAssignment,
    n: usize,
    unit: usize,
    tensor: impl Fn(usize, usize) -> usize,
) -> bool {
    rep.absorb("", validate_group(&g.group));
    if g.degree.len() != n {
        rep.record("graded.shape", "one degree per object", false, witness!(objects = n, degrees = g.degree.len()));
        return false;
    }
    let grp = &g.group;
    rep.record("graded.unit_degree", "deg(1) = e", g.deg(unit) == grp.identity, witness!());
    for (a, b) in pairs(n) {
        rep.record(
            "graded.multiplicative",
            "deg(ab) = deg(a)deg(b)",
            g.deg(tensor(a, b)) == grp.mul(g.deg(a), g.deg(b)),
            witness!(a = a, b = b),
        );
    }
    true
}

/// Degree multiplicativity, vanishing of homs between different grades, and
/// faithfulness: every grade contains a pair of objects with a nonzero hom.
pub fn validate_graded_vmoncat(c: &VMonCat, g: &GradingAssignment) -> ValidationReport {
    let mut rep = ValidationReport::new();
    let n = c.len();
    if !check_degrees(&mut rep, g, n, c.unit(), |a, b| c.tensor_obj(a, b)) {
        return rep;
    }
    let base = c.base();
    for (a, b) in pairs(n) {
        if g.deg(a) != g.deg(b) {
            rep.record(
                "graded.cross_homs_zero",
                "𝒜(a→b) = 0 when deg(a) ≠ deg(b)",
                base.is_zero_object(c.hom(a, b)),
                witness!(a = a, b = b),
            );
        }
    }
    for h in 0..g.group.order() {
        let inhabited = pairs(n).any(|(a, b)| g.deg(a) == h && g.deg(b) == h && !base.is_zero_object(c.hom(a, b)));
        rep.record("graded.faithful", "some 𝒜(a→b) ≠ 0 with a, b in grade g", inhabited, witness!(grade = g.group.elements[h]));
    }
    rep
}

/// Degree multiplicativity on `A`, vanishing cross-grade homs, faithfulness,
/// and `F(v)` in the trivial grade for every base object in its domain.
pub fn validate_graded_modtens(m: &ModTensCat, g: &GradingAssignment) -> ValidationReport {
    let mut rep = ValidationReport::new();
    let c = m.cat();
    let n = c.len();
    if !check_degrees(&mut rep, g, n, c.unit(), |a, b| c.tensor_obj(a, b)) {
        return rep;
    }
    for (a, b) in pairs(n) {
        if g.deg(a) != g.deg(b) {
            rep.record("graded.cross_homs_zero", "A(a→b) = 0 when deg(a) ≠ deg(b)", c.hom_dim(a, b) == 0, witness!(a = a, b = b));
        }
    }
    for h in 0..g.group.order() {
        let inhabited = pairs(n).any(|(a, b)| g.deg(a) == h && g.deg(b) == h && c.hom_dim(a, b) > 0);
        rep.record("graded.faithful", "some A(a→b) ≠ 0 with a, b in grade g", inhabited, witness!(grade = g.group.elements[h]));
    }
    for v in m.domain() {
        let fv = m.f_obj(v).expect("domain object");
        rep.record("graded.f_trivial", "F(v) ∈ A_e", g.deg(fv) == g.group.identity, witness!(v = v));
    }
    rep
}

/// A 1-cell between graded 0-cells preserves degrees.
pub fn validate_graded_cell1(c: &ModTensCell1, source: &GradingAssignment, target: &GradingAssignment) -> ValidationReport {
    let mut rep = ValidationReport::new();
    rep.record("graded.same_group", "both sides graded by the same group", source.group == target.group, witness!());
    if source.group != target.group {
        return rep;
    }
    for a in 0..c.source().cat().len() {
        rep.record("graded.preserves_degree", "deg(R(a)) = deg(a)", target.deg(c.obj(a)) == source.deg(a), witness!(a = a));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivalence::{p0, Lifts};
    use crate::fixtures;
    use crate::modtens::compose_cells1;

    fn z2_grading(degrees: Vec<usize>) -> GradingAssignment {
        GradingAssignment::new(FiniteGroup::cyclic(2), degrees).unwrap()
    }

    #[test]
    fn cyclic_groups_validate() {
        for n in [1, 2, 3, 4] {
            assert!(validate_group(&FiniteGroup::cyclic(n)).passed());
        }
    }

    #[test]
    fn broken_associativity_is_located() {
        let mut g = FiniteGroup::cyclic(3);
        g.mult[1][1] = 0;
        let rep = validate_group(&g);
        assert!(rep.failed_checks().contains(&"group.assoc"));
        assert!(rep.render().contains("a=1 b=1"), "{}", rep.render());
    }

    #[test]
    fn pt2_grading() {
        let pt2 = fixtures::pt2();
        let g = z2_grading(vec![0, 1]);
        let rep = validate_graded_vmoncat(&pt2, &g);
        assert!(rep.passed(), "{rep}");
        assert!(validate_graded_modtens(&p0(pt2.clone()).unwrap().modtens, &g).passed());
        let bad = validate_graded_vmoncat(&pt2, &z2_grading(vec![0, 0]));
        assert_eq!(bad.failed_checks(), vec!["graded.faithful"]);
        assert!(bad.render().contains("grade=1"));
    }

    #[test]
    fn trivial_group_always_grades() {
        for c in fixtures::enriched_fixtures() {
            let g = GradingAssignment::new(FiniteGroup::trivial(), vec![0; c.len()]).unwrap();
            assert!(validate_graded_modtens(&p0(c.clone()).unwrap().modtens, &g).passed());
        }
        let unit = fixtures::unit_cat();
        let g = GradingAssignment::new(FiniteGroup::trivial(), vec![0]).unwrap();
        assert!(validate_graded_vmoncat(&unit, &g).passed());
    }

    #[test]
    fn self_enrichment_is_not_graded_by_its_objects() {
        let m = p0(fixtures::vhat_svec()).unwrap().modtens;
        let rep = validate_graded_modtens(&m, &z2_grading(vec![0, 1]));
        assert!(rep.failed_checks().contains(&"graded.f_trivial"));
    }

    #[test]
    fn graded_cells_compose() {
        let mut lifts = Lifts::new();
        let g2 = z2_grading(vec![0, 1]);
        let t = lifts.p1(&fixtures::twist()).unwrap();
        let id = lifts.p1(&fixtures::id_functor(fixtures::pt2())).unwrap();
        assert!(validate_graded_cell1(&t, &g2, &g2).passed());
        let tt = compose_cells1(&t, &id).unwrap();
        assert!(validate_graded_cell1(&tt, &g2, &g2).passed());
        let g4 = GradingAssignment::new(FiniteGroup::cyclic(2), vec![0, 1, 0, 1]).unwrap();
        let d = lifts.p1(&fixtures::dbl()).unwrap();
        assert!(validate_graded_cell1(&d, &g2, &g4).failed_checks().contains(&"graded.preserves_degree"));
    }
}
