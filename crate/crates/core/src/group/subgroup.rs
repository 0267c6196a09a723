use std::collections::HashSet;

use super::snf::smith;
use super::{Elem, FinAbGroup};
use crate::error::{Error, Result};

/// A subgroup stored as its full sorted element list.
#[derive(Clone, Debug)]
pub struct Subgroup {
    group: FinAbGroup,
    elements: Vec<Elem>,
    generators: Vec<Elem>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    pub fn trivial(group: &FinAbGroup) -> Self {
        Subgroup {
            group: group.clone(),
            elements: vec![group.identity()],
            generators: Vec::new(),
        }
    }

    pub fn whole(group: &FinAbGroup) -> Self {
        let gens: Vec<Elem> = (0..group.rank()).map(|j| group.basis(j)).collect();
        Subgroup {
            group: group.clone(),
            elements: group.elements().collect(),
            generators: gens,
        }
    }

    /// Checks closure of an explicit element list.
    pub fn from_elements(group: &FinAbGroup, elems: &[Elem]) -> Result<Self> {
        let set = ElementSet::new(group, elems.iter().copied());
        set.as_subgroup()
            .ok_or_else(|| Error::InvalidSubgroup("element list is not closed".into()))
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.group.order() / self.order()
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.group == other.group && self.elements.iter().all(|&e| other.contains(e))
    }

    pub fn as_set(&self) -> ElementSet {
        ElementSet {
            group: self.group.clone(),
            elements: self.elements.clone(),
        }
    }

    pub fn intersect(&self, other: &Subgroup) -> Result<Subgroup> {
        self.group.check_same(&other.group)?;
        let elems: Vec<Elem> = self
            .elements
            .iter()
            .copied()
            .filter(|&e| other.contains(e))
            .collect();
        Ok(with_generators(&self.group, elems))
    }

    /// The product `HK`, i.e. the subgroup generated by both.
    pub fn join(&self, other: &Subgroup) -> Result<Subgroup> {
        self.group.check_same(&other.group)?;
        let mut gens = self.generators.clone();
        gens.extend_from_slice(&other.generators);
        Ok(subgroup_generate(&self.group, &gens))
    }

    pub fn coset(&self, rep: Elem) -> Coset {
        Coset {
            rep,
            subgroup: self.clone(),
        }
    }

    /// Smallest element of the coset `eH`.
    pub fn coset_key(&self, e: Elem) -> Elem {
        self.elements
            .iter()
            .map(|&h| self.group.mul(e, h))
            .min()
            .expect("subgroups are nonempty")
    }

    /// True if every element squares to the identity.
    pub fn is_elementary_two(&self) -> bool {
        self.elements
            .iter()
            .all(|&e| self.group.pow(e, 2) == self.group.identity())
    }

    pub fn exponent(&self) -> u32 {
        self.elements
            .iter()
            .fold(1, |l, &e| super::lcm(l, self.group.order_of(e)))
    }

    pub fn generator_exps(&self) -> Vec<Vec<u32>> {
        self.generators.iter().map(|&g| self.group.exps(g)).collect()
    }
}

/// A subset of a group without multiplicities, sorted by element index.
#[derive(Clone, Debug)]
pub struct ElementSet {
    group: FinAbGroup,
    elements: Vec<Elem>,
}

impl PartialEq for ElementSet {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.elements == other.elements
    }
}

impl Eq for ElementSet {}

impl ElementSet {
    pub fn new(group: &FinAbGroup, elems: impl IntoIterator<Item = Elem>) -> Self {
        let mut elements: Vec<Elem> = elems.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        ElementSet {
            group: group.clone(),
            elements,
        }
    }

    pub fn from_exps(group: &FinAbGroup, tuples: &[Vec<u32>]) -> Result<Self> {
        let elems = tuples
            .iter()
            .map(|t| group.elem(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(group, elems))
    }

    pub fn whole(group: &FinAbGroup) -> Self {
        Self::new(group, group.elements())
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    pub fn to_exps(&self) -> Vec<Vec<u32>> {
        self.elements.iter().map(|&e| self.group.exps(e)).collect()
    }

    /// `gE`
    pub fn translate(&self, g: Elem) -> ElementSet {
        ElementSet::new(
            &self.group,
            self.elements.iter().map(|&e| self.group.mul(g, e)),
        )
    }

    pub fn intersect_subgroup(&self, h: &Subgroup) -> Result<ElementSet> {
        self.group.check_same(h.group())?;
        Ok(ElementSet {
            group: self.group.clone(),
            elements: self
                .elements
                .iter()
                .copied()
                .filter(|&e| h.contains(e))
                .collect(),
        })
    }

    pub fn minus(&self, other: &ElementSet) -> ElementSet {
        ElementSet {
            group: self.group.clone(),
            elements: self
                .elements
                .iter()
                .copied()
                .filter(|&e| !other.contains(e))
                .collect(),
        }
    }

    pub fn union(&self, other: &ElementSet) -> Result<ElementSet> {
        self.group.check_same(&other.group)?;
        Ok(ElementSet::new(
            &self.group,
            self.elements.iter().chain(&other.elements).copied(),
        ))
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        self.group == other.group && self.elements.iter().all(|&e| other.contains(e))
    }

    /// The set as a subgroup, if it is closed under multiplication.
    pub fn as_subgroup(&self) -> Option<Subgroup> {
        if !self.contains(self.group.identity()) {
            return None;
        }
        // closure under products suffices for a finite nonempty set
        let g = &self.group;
        for &a in &self.elements {
            for &b in &self.elements {
                if !self.contains(g.mul(a, b)) {
                    return None;
                }
            }
        }
        Some(with_generators(g, self.elements.clone()))
    }

    /// The set as a coset `rep * H`, if it is one. `rep` is the smallest
    /// element of the set.
    pub fn as_coset(&self) -> Option<Coset> {
        let &rep = self.elements.first()?;
        let shifted = self.translate(self.group.inv(rep));
        let h = shifted.as_subgroup()?;
        Some(Coset { rep, subgroup: h })
    }
}

/// The coset `rep * subgroup`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coset {
    pub rep: Elem,
    pub subgroup: Subgroup,
}

impl Coset {
    pub fn to_set(&self) -> ElementSet {
        self.subgroup.as_set().translate(self.rep)
    }

    pub fn len(&self) -> usize {
        self.subgroup.order()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// `<H, g>` as a sorted element list, given `H` sorted.
fn adjoin(group: &FinAbGroup, h: &[Elem], g: Elem) -> Vec<Elem> {
    if h.binary_search(&g).is_ok() {
        return h.to_vec();
    }
    let mut out = h.to_vec();
    let mut rep = g;
    while h.binary_search(&rep).is_err() {
        out.extend(h.iter().map(|&x| group.mul(rep, x)));
        rep = group.mul(rep, g);
    }
    out.sort_unstable();
    out
}

/// Picks an irredundant generating list for a known subgroup.
fn with_generators(group: &FinAbGroup, elements: Vec<Elem>) -> Subgroup {
    let mut cur = vec![group.identity()];
    let mut gens = Vec::new();
    for &e in &elements {
        if cur.len() == elements.len() {
            break;
        }
        if cur.binary_search(&e).is_err() {
            cur = adjoin(group, &cur, e);
            gens.push(e);
        }
    }
    Subgroup {
        group: group.clone(),
        elements,
        generators: gens,
    }
}

/// Smallest subgroup containing `gens`.
pub fn subgroup_generate(group: &FinAbGroup, gens: &[Elem]) -> Subgroup {
    let mut cur = vec![group.identity()];
    let mut kept = Vec::new();
    for &g in gens {
        if cur.binary_search(&g).is_err() {
            cur = adjoin(group, &cur, g);
            kept.push(g);
        }
    }
    Subgroup {
        group: group.clone(),
        elements: cur,
        generators: kept,
    }
}

/// All subgroups of the given order, optionally only those contained in
/// `within`. Depth-first over generator candidates, deduplicated on the
/// element set. Output is sorted by element list.
pub fn subgroups_of_order(
    group: &FinAbGroup,
    order: usize,
    within: Option<&ElementSet>,
) -> Vec<Subgroup> {
    if order == 0 || !group.order().is_multiple_of(order) {
        return Vec::new();
    }
    let candidates: Vec<Elem> = match within {
        Some(w) => w
            .elements()
            .iter()
            .copied()
            .filter(|&e| e != group.identity())
            .collect(),
        None => group.elements().skip(1).collect(),
    };
    let allowed = |h: &[Elem]| within.is_none_or(|w| h.iter().all(|&e| w.contains(e)));
    if within.is_some_and(|w| !w.contains(group.identity())) {
        return Vec::new();
    }

    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    let mut found = Vec::new();
    let mut stack = vec![vec![group.identity()]];
    seen.insert(stack[0].clone());
    while let Some(h) = stack.pop() {
        if h.len() == order {
            found.push(h);
            continue;
        }
        for &g in &candidates {
            if h.binary_search(&g).is_ok() {
                continue;
            }
            let next = adjoin(group, &h, g);
            if next.len() > order || !order.is_multiple_of(next.len()) || !allowed(&next) {
                continue;
            }
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    found.sort();
    found
        .into_iter()
        .map(|elems| with_generators(group, elems))
        .collect()
}

/// A chain `1 = M_0 < M_1 < ... < M_r = N` with every step of index 2.
pub fn two_group_chain(n: &Subgroup) -> Result<Vec<Subgroup>> {
    let g = n.group();
    if !n.order().is_power_of_two() {
        return Err(Error::UnsupportedGroup("subgroup is not a 2-group".into()));
    }
    let mut chain = vec![Subgroup::trivial(g)];
    while chain.last().unwrap().order() < n.order() {
        let m = chain.last().unwrap();
        let step = n
            .elements()
            .iter()
            .copied()
            .find(|&x| !m.contains(x) && m.contains(g.pow(x, 2)))
            .expect("a nontrivial 2-group quotient has an involution");
        let mut gens = m.generators().to_vec();
        gens.push(step);
        chain.push(subgroup_generate(g, &gens));
    }
    Ok(chain)
}

/// Whether `E` meets every coset of `N` exactly once.
pub fn is_transversal(e: &ElementSet, n: &Subgroup) -> bool {
    if e.group() != n.group() || e.len() * n.order() != e.group().order() {
        return false;
    }
    let mut keys: Vec<Elem> = e.elements().iter().map(|&x| n.coset_key(x)).collect();
    keys.sort_unstable();
    keys.windows(2).all(|w| w[0] != w[1])
}

/// `{g : gE = E}`.
pub fn stabilizer(e: &ElementSet) -> Result<Subgroup> {
    let g = e.group();
    let Some(&e0) = e.elements().first() else {
        return Err(Error::InvalidArgument("stabilizer of the empty set".into()));
    };
    let inv0 = g.inv(e0);
    let mut stab: Vec<Elem> = e
        .elements()
        .iter()
        .map(|&x| g.mul(x, inv0))
        .filter(|&s| e.elements().iter().all(|&x| e.contains(g.mul(s, x))))
        .collect();
    stab.sort_unstable();
    Ok(with_generators(g, stab))
}

/// Invariant factors (prime-power form) of `A/B`, ordered by prime then by
/// decreasing size. `B` defaults to the trivial subgroup.
pub fn abelian_invariants(a: &Subgroup, b: Option<&Subgroup>) -> Result<Vec<u32>> {
    let g = a.group();
    let trivial;
    let b = match b {
        Some(b) => {
            if !b.is_subgroup_of(a) {
                return Err(Error::InvalidSubgroup("B is not contained in A".into()));
            }
            b
        }
        None => {
            trivial = Subgroup::trivial(g);
            &trivial
        }
    };
    let mut q = (a.order() / b.order()) as u32;
    let mut out = Vec::new();
    let mut p = 2u32;
    while q > 1 {
        if !q.is_multiple_of(p) {
            p += 1;
            continue;
        }
        while q.is_multiple_of(p) {
            q /= p;
        }
        // s_k = log_p |{x in A/B : x^{p^k} = 1}|
        let mut s = vec![0u32];
        let mut pk = 1i64;
        loop {
            pk *= p as i64;
            let count = a
                .elements()
                .iter()
                .filter(|&&x| b.contains(g.pow(x, pk)))
                .count()
                / b.order();
            let sk = log_exact(count as u32, p);
            if sk == *s.last().unwrap() {
                break;
            }
            s.push(sk);
        }
        // number of cyclic factors of order >= p^k is s_k - s_{k-1}
        let top = s.len() - 1;
        let mut parts = Vec::new();
        for k in (1..=top).rev() {
            let ge_k = s[k] - s[k - 1];
            let ge_k1 = if k < top { s[k + 1] - s[k] } else { 0 };
            for _ in 0..(ge_k - ge_k1) {
                parts.push(p.pow(k as u32));
            }
        }
        out.extend(parts);
    }
    Ok(out)
}

fn log_exact(mut x: u32, p: u32) -> u32 {
    let mut k = 0;
    while x > 1 {
        debug_assert_eq!(x % p, 0);
        x /= p;
        k += 1;
    }
    k
}

/// The canonical quotient `G/H` with its projection table.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FinAbGroup,
    pub source: FinAbGroup,
    pub kernel: Subgroup,
    table: Vec<Elem>,
}

impl Quotient {
    pub fn project(&self, e: Elem) -> Elem {
        self.table[e.idx()]
    }

    /// Image of a set together with the largest fiber size.
    pub fn project_set(&self, e: &ElementSet) -> Result<(ElementSet, usize)> {
        self.source.check_same(e.group())?;
        let mut imgs: Vec<Elem> = e.elements().iter().map(|&x| self.project(x)).collect();
        imgs.sort_unstable();
        let mut max_mult = 0;
        let mut run = 0;
        for i in 0..imgs.len() {
            run = if i > 0 && imgs[i] == imgs[i - 1] { run + 1 } else { 1 };
            max_mult = max_mult.max(run);
        }
        Ok((ElementSet::new(&self.group, imgs), max_mult))
    }

    pub fn project_subgroup(&self, h: &Subgroup) -> Result<Subgroup> {
        self.source.check_same(h.group())?;
        let gens: Vec<Elem> = h.generators().iter().map(|&x| self.project(x)).collect();
        Ok(subgroup_generate(&self.group, &gens))
    }
}

/// `G/H` presented canonically: cyclic factors of prime-power order, by
/// prime and then by decreasing size.
pub fn quotient(g: &FinAbGroup, h: &Subgroup) -> Result<Quotient> {
    if h.group() != g {
        return Err(Error::InvalidSubgroup("subgroup of a different group".into()));
    }
    let r = g.rank();
    let mut rel: Vec<Vec<i128>> = (0..r)
        .map(|j| {
            (0..r)
                .map(|k| if j == k { g.factors()[j] as i128 } else { 0 })
                .collect()
        })
        .collect();
    for &x in h.generators() {
        rel.push(g.exps(x).into_iter().map(i128::from).collect());
    }
    let s = smith(rel, r);

    // (column of Q, modulus of that column, prime-power component)
    let mut comps: Vec<(usize, i128, u32, u32)> = Vec::new();
    for (i, &d) in s.diag.iter().enumerate() {
        if d <= 1 {
            continue;
        }
        let mut rest = d as u32;
        let mut p = 2u32;
        while rest > 1 {
            if rest.is_multiple_of(p) {
                let mut pa = 1;
                while rest.is_multiple_of(p) {
                    rest /= p;
                    pa *= p;
                }
                comps.push((i, d, p, pa));
            }
            p += 1;
        }
    }
    comps.sort_by(|a, b| a.2.cmp(&b.2).then(b.3.cmp(&a.3)));
    let factors: Vec<u32> = comps.iter().map(|c| c.3).collect();
    let qg = FinAbGroup::new(&factors)?;

    let mut table = Vec::with_capacity(g.order());
    let mut ex = vec![0u32; r];
    let mut qx = vec![0u32; factors.len()];
    for e in g.elements() {
        g.exps_into(e, &mut ex);
        for (slot, &(col, d, _, pa)) in comps.iter().enumerate() {
            let v: i128 = (0..r).map(|k| ex[k] as i128 * s.q[k][col]).sum();
            qx[slot] = (v.rem_euclid(d) as u32) % pa;
        }
        table.push(qg.elem_reduced(&qx));
    }
    debug_assert_eq!(qg.order() * h.order(), g.order());
    Ok(Quotient {
        group: qg,
        source: g.clone(),
        kernel: h.clone(),
        table,
    })
}

/// Permutations of the elements of a 2-group induced by elementary
/// automorphisms: `x_i -> x_i + c x_j` with `c` the least multiplier
/// keeping orders compatible, and `x_i -> u x_i` for unit generators `u`.
pub fn automorphism_generators(group: &FinAbGroup) -> Result<Vec<Vec<Elem>>> {
    group.require_two_group()?;
    let f = group.factors().to_vec();
    let r = f.len();
    let identity = || -> Vec<Vec<u32>> {
        (0..r)
            .map(|k| {
                let mut row = vec![0u32; r];
                row[k] = 1;
                row
            })
            .collect()
    };
    let mut images = Vec::new();
    for i in 0..r {
        for j in (0..r).filter(|&j| j != i) {
            let mut im = identity();
            im[i][j] = (f[j] / f[i]).max(1);
            images.push(im);
        }
        let units: &[u32] = match f[i] {
            2 => &[],
            4 => &[3],
            n => &[n - 1, 5],
        };
        for &u in units {
            let mut im = identity();
            im[i][i] = u;
            images.push(im);
        }
    }
    let ex: Vec<Vec<u32>> = group.elements().map(|x| group.exps(x)).collect();
    Ok(images
        .iter()
        .map(|im| {
            ex.iter()
                .map(|a| {
                    let mut out = vec![0i64; r];
                    for (k, &ak) in a.iter().enumerate() {
                        for (t, o) in out.iter_mut().enumerate() {
                            *o += ak as i64 * im[k][t] as i64;
                        }
                    }
                    group.elem_mod(&out)
                })
                .collect()
        })
        .collect())
}

/// One subgroup of the given order per orbit of the group generated by
/// [`automorphism_generators`], with the orbit size. Representatives are
/// the least element lists of their orbits.
pub fn subgroup_orbit_representatives(group: &FinAbGroup, order: usize) -> Result<Vec<(Subgroup, usize)>> {
    let gens = automorphism_generators(group)?;
    let all = subgroups_of_order(group, order, None);
    let index: std::collections::HashMap<&[Elem], usize> =
        all.iter().enumerate().map(|(i, h)| (h.elements(), i)).collect();
    let mut seen = vec![false; all.len()];
    let mut out = Vec::new();
    for start in 0..all.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = vec![start];
        let mut size = 0;
        while let Some(i) = queue.pop() {
            size += 1;
            for p in &gens {
                let mut img: Vec<Elem> = all[i].elements().iter().map(|x| p[x.idx()]).collect();
                img.sort_unstable();
                let j = *index
                    .get(img.as_slice())
                    .ok_or_else(|| Error::InvalidArgument("automorphism image is not a subgroup".into()))?;
                if !seen[j] {
                    seen[j] = true;
                    queue.push(j);
                }
            }
        }
        out.push((all[start].clone(), size));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{frattini, socle};

    fn grp(f: &[u32]) -> FinAbGroup {
        FinAbGroup::new(f).unwrap()
    }

    fn check_closed(h: &Subgroup) {
        let g = h.group();
        assert!(h.contains(g.identity()));
        for &a in h.elements() {
            assert!(h.contains(g.inv(a)));
            for &b in h.elements() {
                assert!(h.contains(g.mul(a, b)));
            }
        }
        assert_eq!(g.order() % h.order(), 0);
    }

    #[test]
    fn generate_examples() {
        let g = grp(&[4, 4]);
        let h = subgroup_generate(&g, &[g.elem(&[2, 0]).unwrap(), g.elem(&[0, 2]).unwrap()]);
        assert_eq!(h.order(), 4);
        check_closed(&h);

        let g3 = grp(&[4, 4, 4]);
        let squares: Vec<Elem> = g3.elements().map(|x| g3.pow(x, 2)).collect();
        let phi = subgroup_generate(&g3, &squares);
        assert_eq!(phi.order(), 8);
        assert_eq!(phi.generators().len(), 3);
    }

    #[test]
    fn quotient_examples() {
        let g = grp(&[4, 4, 4]);
        let q = quotient(&g, &socle(&g).unwrap()).unwrap();
        assert_eq!(q.group.factors(), &[2, 2, 2]);

        let z4 = grp(&[4]);
        let h = subgroup_generate(&z4, &[Elem(2)]);
        let q = quotient(&z4, &h).unwrap();
        assert_eq!(q.group.factors(), &[2]);
    }

    #[test]
    fn quotient_is_a_homomorphism_with_the_right_kernel() {
        let g = grp(&[4, 2, 4, 3]);
        let h = subgroup_generate(&g, &[g.elem(&[1, 1, 2, 0]).unwrap(), g.elem(&[0, 0, 0, 1]).unwrap()]);
        let q = quotient(&g, &h).unwrap();
        assert_eq!(q.group.order() * h.order(), g.order());
        for a in g.elements() {
            for b in g.elements().step_by(7) {
                assert_eq!(q.project(g.mul(a, b)), q.group.mul(q.project(a), q.project(b)));
            }
        }
        let kernel: Vec<Elem> = g
            .elements()
            .filter(|&x| q.project(x) == q.group.identity())
            .collect();
        assert_eq!(kernel, h.elements());
        // surjective
        let mut img: Vec<Elem> = g.elements().map(|x| q.project(x)).collect();
        img.sort();
        img.dedup();
        assert_eq!(img.len(), q.group.order());
    }

    #[test]
    fn quotient_rejects_foreign_subgroup() {
        let g = grp(&[4]);
        let other = grp(&[4]);
        assert!(quotient(&g, &Subgroup::trivial(&other)).is_err());
    }

    #[test]
    fn transversal_examples() {
        let g = grp(&[2, 2]);
        let n = subgroup_generate(&g, &[g.elem(&[0, 1]).unwrap()]);
        let e = ElementSet::from_exps(&g, &[vec![0, 0], vec![1, 0]]).unwrap();
        assert!(is_transversal(&e, &n));
        assert!(!is_transversal(&n.as_set(), &n));

        let g = grp(&[4, 4]);
        let n = subgroup_generate(&g, &[g.elem(&[1, 0]).unwrap()]);
        assert!(!is_transversal(&n.as_set(), &n));
    }

    #[test]
    fn stabilizer_examples() {
        let g = grp(&[2, 2, 2]);
        let h = subgroup_generate(&g, &[Elem(1), Elem(2)]);
        assert_eq!(stabilizer(&h.as_set()).unwrap(), h);
        assert_eq!(stabilizer(&ElementSet::whole(&g)).unwrap().order(), 8);
        // {000, 001, 010, 100}: not a union of cosets of any nontrivial subgroup
        let e = ElementSet::new(&g, [Elem(0), Elem(1), Elem(2), Elem(4)]);
        assert!(stabilizer(&e).unwrap().is_trivial());
    }

    #[test]
    fn enumerates_subgroups_of_z2_cubed() {
        let g = grp(&[2, 2, 2]);
        assert_eq!(subgroups_of_order(&g, 2, None).len(), 7);
        assert_eq!(subgroups_of_order(&g, 4, None).len(), 7);
        assert_eq!(subgroups_of_order(&g, 8, None).len(), 1);
        let g = grp(&[4, 2]);
        // Z4xZ2: three subgroups of order 2, three of order 4
        assert_eq!(subgroups_of_order(&g, 2, None).len(), 3);
        assert_eq!(subgroups_of_order(&g, 4, None).len(), 3);
        for h in subgroups_of_order(&g, 4, None) {
            check_closed(&h);
        }
    }

    #[test]
    fn invariants_of_subquotients() {
        let g = grp(&[4, 4, 2]);
        let whole = Subgroup::whole(&g);
        assert_eq!(abelian_invariants(&whole, None).unwrap(), vec![4, 4, 2]);
        let phi = frattini(&g).unwrap();
        assert_eq!(abelian_invariants(&whole, Some(&phi)).unwrap(), vec![2, 2, 2]);
        let g = grp(&[4, 3, 5]);
        assert_eq!(
            abelian_invariants(&Subgroup::whole(&g), None).unwrap(),
            vec![4, 3, 5]
        );
    }

    #[test]
    fn chain_steps_have_index_two() {
        let g = grp(&[4, 4, 2]);
        let chain = two_group_chain(&Subgroup::whole(&g)).unwrap();
        assert_eq!(chain.len(), 6);
        for w in chain.windows(2) {
            assert!(w[0].is_subgroup_of(&w[1]));
            assert_eq!(w[1].order(), 2 * w[0].order());
        }
    }

    #[test]
    fn coset_recognition() {
        let g = grp(&[4, 2]);
        let e = ElementSet::from_exps(&g, &[vec![1, 0], vec![3, 0]]).unwrap();
        let c = e.as_coset().unwrap();
        assert_eq!(c.subgroup.order(), 2);
        assert_eq!(c.to_set(), e);
        let not = ElementSet::from_exps(&g, &[vec![1, 0], vec![2, 0]]).unwrap();
        assert!(not.as_coset().is_none());
    }

    #[test]
    fn automorphisms_are_bijective_homomorphisms() {
        for f in [&[2, 2, 2][..], &[4, 2], &[8, 4, 2], &[4, 4]] {
            let g = grp(f);
            for p in automorphism_generators(&g).unwrap() {
                let mut sorted = p.clone();
                sorted.sort_unstable();
                assert_eq!(sorted, g.elements().collect::<Vec<_>>());
                for a in g.elements() {
                    for b in g.elements() {
                        assert_eq!(p[g.mul(a, b).idx()], g.mul(p[a.idx()], p[b.idx()]));
                    }
                }
            }
        }
    }

    #[test]
    fn subgroup_orbits() {
        let g = grp(&[2, 2, 2]);
        let reps = subgroup_orbit_representatives(&g, 2).unwrap();
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].1, 7);

        // <(2,0)> is the square subgroup; <(0,1)> and <(2,1)> are swapped
        let g = grp(&[4, 2]);
        let sizes: Vec<usize> = subgroup_orbit_representatives(&g, 2).unwrap().iter().map(|r| r.1).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 3);
        assert_eq!(sizes.len(), 2);

        let g = grp(&[4, 4, 2]);
        for order in [2, 4, 8, 16] {
            let total: usize = subgroup_orbit_representatives(&g, order).unwrap().iter().map(|r| r.1).sum();
            assert_eq!(total, subgroups_of_order(&g, order, None).len());
        }
    }
}
