use serde::ser::{Serialize, Serializer};

use super::has_half_modulus;
use crate::characters::{char_sum, order_two_characters};
use crate::designs::BuildingSetFamily;
use crate::error::{Error, Result};
use crate::group::{
    abelian_invariants, is_transversal, stabilizer, subgroups_of_order, two_group_chain, Elem,
    ElementSet, FinAbGroup, Subgroup,
};

/// `E = a H1 u b H2` with `|H1| = |H2| = |E|/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeI {
    pub a: Elem,
    pub b: Elem,
    pub h1: Subgroup,
    pub h2: Subgroup,
}

/// `E = H E'` with `|H| = |E|/8` and `|E'| = 8`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeII {
    pub h: Subgroup,
    pub e_prime: ElementSet,
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub group: FinAbGroup,
    pub type_i: Option<TypeI>,
    pub type_ii: Option<TypeII>,
    pub neither: bool,
    pub stabilizer_order: usize,
    /// whether the character split found the type-I witness
    pub fast_path: bool,
}

#[derive(serde::Serialize)]
struct TypeIRepr {
    a: Vec<u32>,
    b: Vec<u32>,
    h1: Vec<Vec<u32>>,
    h2: Vec<Vec<u32>>,
}

#[derive(serde::Serialize)]
struct TypeIIRepr {
    h: Vec<Vec<u32>>,
    e_prime: Vec<Vec<u32>>,
}

#[derive(serde::Serialize)]
struct ReportRepr {
    group: String,
    type_i: Option<TypeIRepr>,
    type_ii: Option<TypeIIRepr>,
    neither: bool,
    stabilizer_order: usize,
    fast_path: bool,
}

impl Serialize for ClassificationReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let g = &self.group;
        ReportRepr {
            group: g.descriptor(),
            type_i: self.type_i.as_ref().map(|w| TypeIRepr {
                a: g.exps(w.a),
                b: g.exps(w.b),
                h1: w.h1.generator_exps(),
                h2: w.h2.generator_exps(),
            }),
            type_ii: self.type_ii.as_ref().map(|w| TypeIIRepr {
                h: w.h.generator_exps(),
                e_prime: w.e_prime.to_exps(),
            }),
            neither: self.neither,
            stabilizer_order: self.stabilizer_order,
            fast_path: self.fast_path,
        }
        .serialize(s)
    }
}

impl TypeI {
    pub fn reconstruct(&self) -> ElementSet {
        self.h1
            .coset(self.a)
            .to_set()
            .union(&self.h2.coset(self.b).to_set())
            .expect("same group")
    }
}

impl TypeII {
    pub fn reconstruct(&self) -> ElementSet {
        let g = self.h.group();
        ElementSet::new(
            g,
            self.e_prime
                .elements()
                .iter()
                .flat_map(|&x| self.h.elements().iter().map(move |&y| g.mul(x, y))),
        )
    }
}

fn split_witness(e: &ElementSet, first: &ElementSet, second: &ElementSet) -> Option<TypeI> {
    let c1 = first.as_coset()?;
    let c2 = second.as_coset()?;
    let (c1, c2) = if c1.to_set().contains(e.elements()[0]) { (c1, c2) } else { (c2, c1) };
    Some(TypeI {
        a: c1.rep,
        b: c2.rep,
        h1: c1.subgroup,
        h2: c2.subgroup,
    })
}

/// Type I via kernels of order-2 characters that cut `E` in half.
pub fn type_i_fast(e: &ElementSet) -> Result<Option<TypeI>> {
    let g = e.group();
    if e.len() < 2 || !e.len().is_multiple_of(2) {
        return Ok(None);
    }
    for phi in order_two_characters(g) {
        let s = char_sum(&phi, e)?.to_complex();
        if s.re.abs() > 0.5 {
            continue;
        }
        let (inside, outside): (Vec<Elem>, Vec<Elem>) =
            e.elements().iter().partition(|&&x| phi.phase(x) == 0);
        let a = ElementSet::new(g, inside);
        let b = ElementSet::new(g, outside);
        if let Some(w) = split_witness(e, &a, &b) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Type I by enumerating subgroups `H1` of order `|E|/2` inside
/// `e0^{-1} E`, `e0` the smallest element of `E`.
pub fn type_i_complete(e: &ElementSet) -> Result<Option<TypeI>> {
    let g = e.group();
    if e.len() < 2 || !e.len().is_multiple_of(2) {
        return Ok(None);
    }
    let e0 = e.elements()[0];
    let s = e.translate(g.inv(e0));
    for h1 in subgroups_of_order(g, e.len() / 2, Some(&s)) {
        let first = h1.coset(e0).to_set();
        let rest = e.minus(&first);
        if let Some(w) = split_witness(e, &first, &rest) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Type II via the stabilizer: some subgroup of order `|E|/8` fixes `E`
/// iff the stabilizer has at least that order.
pub fn type_ii(e: &ElementSet) -> Result<(usize, Option<TypeII>)> {
    let stab = stabilizer(e)?;
    let order = stab.order();
    if !e.len().is_multiple_of(8) || order < e.len() / 8 {
        return Ok((order, None));
    }
    let want = e.len() / 8;
    let h = two_group_chain(&stab)?
        .into_iter()
        .find(|m| m.order() == want)
        .expect("chain passes through every power of two up to |stab|");
    let mut reps = Vec::new();
    let mut covered = ElementSet::new(e.group(), []);
    for &x in e.elements() {
        if !covered.contains(x) {
            reps.push(x);
            covered = covered.union(&h.coset(x).to_set())?;
        }
    }
    Ok((
        order,
        Some(TypeII {
            h,
            e_prime: ElementSet::new(e.group(), reps),
        }),
    ))
}

/// Classifies a transversal `E` of `N` into types I and II.
pub fn classify_transversal(e: &ElementSet, n: &Subgroup) -> Result<ClassificationReport> {
    e.group().check_same(n.group())?;
    e.group().require_two_group()?;
    if !is_transversal(e, n) {
        return Err(Error::PreconditionViolation("E is not a transversal of N".into()));
    }
    let (stabilizer_order, t2) = type_ii(e)?;
    let fast = type_i_fast(e)?;
    let fast_path = fast.is_some();
    let t1 = match fast {
        Some(w) => Some(w),
        None => type_i_complete(e)?,
    };
    if let Some(w) = &t1 {
        if w.reconstruct() != *e || w.h1.order() * 2 != e.len() || w.h2.order() * 2 != e.len() {
            return Err(Error::LemmaViolation("type I witness does not rebuild E".into()));
        }
    }
    if let Some(w) = &t2 {
        if w.reconstruct() != *e || w.e_prime.len() != 8 {
            return Err(Error::LemmaViolation("type II witness does not rebuild E".into()));
        }
    }
    Ok(ClassificationReport {
        group: e.group().clone(),
        neither: t1.is_none() && t2.is_none(),
        type_i: t1,
        type_ii: t2,
        stabilizer_order,
        fast_path,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct TypeIStructure {
    pub h1_meets_n_trivially: bool,
    pub h2_meets_n_trivially: bool,
    pub h1n_equals_h2n: bool,
    pub ab_outside_h1n: bool,
    pub n_in_join: bool,
    pub cap_order: usize,
    pub expected_cap_order: usize,
    pub h1_mod_cap: Vec<u32>,
    pub h2_mod_cap: Vec<u32>,
    pub n_type: Vec<u32>,
    pub holds: bool,
}

/// The structural consequences of a type-I decomposition under the
/// half-modulus property.
pub fn type_i_structure_report(e: &ElementSet, n: &Subgroup, w: &TypeI) -> Result<TypeIStructure> {
    let g = e.group();
    g.check_same(n.group())?;
    if w.reconstruct() != *e {
        return Err(Error::InvalidArgument("witness does not rebuild E".into()));
    }
    if !has_half_modulus(e)? {
        return Err(Error::HypothesisNotMet(
            "some nonprincipal character sum has modulus other than |E|/2 or 0".into(),
        ));
    }
    let h1n = w.h1.join(n)?;
    let h2n = w.h2.join(n)?;
    let cap = w.h1.intersect(&w.h2)?;
    let join = w.h1.join(&w.h2)?;
    let expected_cap_order = e.len() / (2 * n.order());
    let h1_mod_cap = abelian_invariants(&w.h1, Some(&cap))?;
    let h2_mod_cap = abelian_invariants(&w.h2, Some(&cap))?;
    let n_type = abelian_invariants(n, None)?;
    let mut r = TypeIStructure {
        h1_meets_n_trivially: w.h1.intersect(n)?.is_trivial(),
        h2_meets_n_trivially: w.h2.intersect(n)?.is_trivial(),
        h1n_equals_h2n: h1n == h2n,
        ab_outside_h1n: !h1n.contains(g.div(w.b, w.a)),
        n_in_join: n.is_subgroup_of(&join),
        cap_order: cap.order(),
        expected_cap_order,
        holds: false,
        h1_mod_cap,
        h2_mod_cap,
        n_type,
    };
    r.holds = r.h1_meets_n_trivially
        && r.h2_meets_n_trivially
        && r.h1n_equals_h2n
        && r.ab_outside_h1n
        && r.n_in_join
        && r.cap_order == r.expected_cap_order
        && r.h1_mod_cap == r.n_type
        && r.h2_mod_cap == r.n_type;
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct OrthogonalityReport {
    pub subgroups: usize,
    pub pairwise_trivial: bool,
    pub products_agree: bool,
    pub meet_n_trivially: bool,
    pub holds: bool,
}

/// Pairwise `H_s n H_t = 1` and `N H_s = N H_t = H_s H_t`.
pub fn orthogonality_of(n: &Subgroup, hs: &[Subgroup]) -> Result<OrthogonalityReport> {
    let mut pairwise_trivial = true;
    let mut products_agree = true;
    let mut meet_n_trivially = true;
    let nh: Vec<Subgroup> = hs.iter().map(|h| n.join(h)).collect::<Result<_>>()?;
    for (s, hs_) in hs.iter().enumerate() {
        if !hs_.intersect(n)?.is_trivial() {
            meet_n_trivially = false;
        }
        for t in s + 1..hs.len() {
            if !hs_.intersect(&hs[t])?.is_trivial() {
                pairwise_trivial = false;
            }
            if nh[s] != nh[t] || hs_.join(&hs[t])? != nh[s] {
                products_agree = false;
            }
        }
    }
    Ok(OrthogonalityReport {
        subgroups: hs.len(),
        pairwise_trivial,
        products_agree,
        meet_n_trivially,
        holds: pairwise_trivial && products_agree && meet_n_trivially,
    })
}

/// Classifies every block and checks the witnessing subgroups pairwise.
pub fn spread_orthogonality_check(f: &BuildingSetFamily) -> Result<OrthogonalityReport> {
    let mut hs = Vec::new();
    for (i, b) in f.blocks.iter().enumerate() {
        let r = classify_transversal(b, &f.n)?;
        let w = r
            .type_i
            .ok_or_else(|| Error::PreconditionViolation(format!("block {i} is not of type I")))?;
        hs.push(w.h1);
        hs.push(w.h2);
    }
    orthogonality_of(&f.n, &hs)
}
