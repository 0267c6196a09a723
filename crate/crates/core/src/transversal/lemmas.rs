use serde::Serialize;

use super::{all_sums_divisible, has_half_modulus};
use crate::characters::{all_sums_exact, char_sum, order_two_characters, Character};
use crate::error::{Error, Result};
use crate::group::{frattini, is_transversal, Coset, Elem, ElementSet, Subgroup};

/// Finds a coset of a subgroup of order `|E|/4` inside `E` by cutting `E`
/// along the kernel of an order-2 character `phi` with `|phi(E)| = |E|/2`.
pub fn extract_coset_e2(e: &ElementSet, phi: Option<&Character>) -> Result<Coset> {
    let g = e.group();
    g.require_two_group()?;
    if e.is_empty() || !e.len().is_multiple_of(4) {
        return Err(Error::HypothesisNotMet(format!("|E| = {} is not a multiple of 4", e.len())));
    }
    if !all_sums_divisible(e, (e.len() / 2) as i64)? {
        return Err(Error::HypothesisNotMet("some chi(E) is not divisible by |E|/2".into()));
    }
    let half = (e.len() / 2) as f64;
    let qualifies = |c: &Character| -> Result<bool> {
        Ok(c.order() == 2 && (char_sum(c, e)?.to_complex().re.abs() - half).abs() < 0.5)
    };
    let phi = match phi {
        Some(c) => {
            g.check_same(c.group())?;
            if !qualifies(c)? {
                return Err(Error::HypothesisNotMet("phi does not have |phi(E)| = |E|/2".into()));
            }
            c.clone()
        }
        None => {
            let mut found = None;
            for c in order_two_characters(g) {
                if qualifies(&c)? {
                    found = Some(c);
                    break;
                }
            }
            found.ok_or_else(|| {
                Error::HypothesisNotMet("no order-2 character has |phi(E)| = |E|/2".into())
            })?
        }
    };
    let (inside, outside): (Vec<Elem>, Vec<Elem>) =
        e.elements().iter().partition(|&&x| phi.phase(x) == 0);
    let small = if inside.len() == e.len() / 4 { inside } else { outside };
    let part = ElementSet::new(g, small);
    let coset = part
        .as_coset()
        .ok_or_else(|| Error::LemmaViolation("the quarter of E cut out by phi is not a coset".into()))?;
    debug_assert!(coset.to_set().is_subset_of(e));
    Ok(coset)
}

/// `Phi(N)`, the subgroup of squares of `N`.
pub fn frattini_of(n: &Subgroup) -> Subgroup {
    let g = n.group();
    let sq: Vec<Elem> = n.generators().iter().map(|&x| g.pow(x, 2)).collect();
    crate::group::subgroup_generate(g, &sq)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cz43Report {
    pub ratio: usize,
    pub bound_ok: bool,
}

/// `|(N n Phi(G)) / Phi(N)|` for a transversal `E` of `N` with every
/// `chi(E)` divisible by `|E|/2`.
pub fn cz43_check(e: &ElementSet, n: &Subgroup) -> Result<Cz43Report> {
    let g = e.group();
    g.check_same(n.group())?;
    if !is_transversal(e, n) {
        return Err(Error::HypothesisNotMet("E is not a transversal of N".into()));
    }
    if e.len() < 2 || !all_sums_divisible(e, (e.len() / 2) as i64)? {
        return Err(Error::HypothesisNotMet("some chi(E) is not divisible by |E|/2".into()));
    }
    let cap = n.intersect(&frattini(g)?)?;
    let phin = frattini_of(n);
    let ratio = cap.order() / phin.order();
    Ok(Cz43Report {
        ratio,
        bound_ok: ratio <= 4,
    })
}

/// An order-2 character with `|phi(E)| = |E|/2` for `E` of size `2^{m+1}`
/// in a group of order `2^{2m+1}` and exponent at most 4.
pub fn eg_find_order2(e: &ElementSet) -> Result<Character> {
    let g = e.group();
    if !g.is_two_group() || !g.exponent_divides_four() {
        return Err(Error::PreconditionViolation("G must be a 2-group of exponent at most 4".into()));
    }
    if !e.len().is_power_of_two() || e.len() < 4 {
        return Err(Error::PreconditionViolation(format!("|E| = {} is not 2^(m+1)", e.len())));
    }
    let m = e.len().trailing_zeros() - 1;
    if m < 3 {
        return Err(Error::PreconditionViolation(format!("needs m >= 3, got m = {m}")));
    }
    if g.order() != 1 << (2 * m + 1) {
        return Err(Error::PreconditionViolation(format!("|G| = {} is not 2^{}", g.order(), 2 * m + 1)));
    }
    if !has_half_modulus(e)? {
        return Err(Error::PreconditionViolation("moduli are not all 2^m or 0".into()));
    }
    let sums = all_sums_exact(e)?;
    let half = (e.len() / 2) as i64;
    order_two_characters(g)
        .into_iter()
        .find(|c| sums[c.index()].re.abs() == half)
        .ok_or_else(|| Error::LemmaViolation("no order-2 character reaches |E|/2".into()))
}

#[derive(Clone, Debug)]
pub struct CongReport {
    pub part: ElementSet,
    pub ok: bool,
}

/// Restricts `E` to an index-2 subgroup `K` and checks that every
/// character sum of `E n K` is divisible by `l`.
pub fn cong_restrict(e: &ElementSet, k: &Subgroup, l: i64) -> Result<CongReport> {
    let g = e.group();
    g.check_same(k.group())?;
    if k.index() != 2 {
        return Err(Error::InvalidSubgroup(format!("K has index {}, not 2", k.index())));
    }
    if l <= 0 {
        return Err(Error::InvalidArgument("l must be positive".into()));
    }
    if !all_sums_divisible(e, 2 * l)? {
        return Err(Error::HypothesisNotMet(format!("some chi(E) is not divisible by {}", 2 * l)));
    }
    let part = e.intersect_subgroup(k)?;
    // every character of K is a restriction of one of G
    let ok = all_sums_divisible(&part, l)?;
    Ok(CongReport { part, ok })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::enumerate_characters;
    use crate::designs::{construct_building_sets, SylowType};
    use crate::group::{subgroup_generate, FinAbGroup};

    fn grp(f: &[u32]) -> FinAbGroup {
        FinAbGroup::new(f).unwrap()
    }

    #[test]
    fn e2_on_small_instance() {
        let g = grp(&[2, 2, 2]);
        let e = ElementSet::from_exps(&g, &[vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 1]])
            .unwrap();
        let phi = Character::new(&g, &[0, 0, 1]).unwrap();
        let c = extract_coset_e2(&e, Some(&phi)).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.rep, g.elem(&[1, 1, 1]).unwrap());
    }

    #[test]
    fn e2_rejects_subgroups() {
        let g = grp(&[2, 2, 2, 2]);
        let h = subgroup_generate(&g, &[g.basis(0), g.basis(1), g.basis(2)]);
        assert!(matches!(extract_coset_e2(&h.as_set(), None), Err(Error::HypothesisNotMet(_))));
    }

    #[test]
    fn e2_on_constructed_blocks() {
        let f = construct_building_sets(3, SylowType::Z4).unwrap();
        for b in &f.blocks {
            let c = extract_coset_e2(b, None).unwrap();
            assert_eq!(c.len(), 4);
            assert!(c.to_set().is_subset_of(b));
        }
    }

    #[test]
    fn cz43_examples() {
        let g = grp(&[2, 2, 2]);
        let n = subgroup_generate(&g, &[g.basis(0)]);
        let e = subgroup_generate(&g, &[g.basis(1), g.basis(2)]).as_set();
        assert_eq!(cz43_check(&e, &n).unwrap().ratio, 1);

        let g = grp(&[4, 4]);
        let n = subgroup_generate(&g, &[g.basis(0)]);
        let e = subgroup_generate(&g, &[g.basis(1)]).as_set();
        let r = cz43_check(&e, &n).unwrap();
        assert_eq!(r, Cz43Report { ratio: 1, bound_ok: true });

        for s in [SylowType::Ea, SylowType::Z4] {
            let f = construct_building_sets(3, s).unwrap();
            for b in &f.blocks {
                assert!(cz43_check(b, &f.n).unwrap().bound_ok);
            }
        }
    }

    #[test]
    fn eg_examples() {
        let f = construct_building_sets(3, SylowType::Z4).unwrap();
        for b in &f.blocks {
            let phi = eg_find_order2(b).unwrap();
            assert_eq!(phi.order(), 2);
            let s = char_sum(&phi, b).unwrap().exact().unwrap();
            assert_eq!(s.re.abs(), 8);
        }
        let f = construct_building_sets(2, SylowType::Ea).unwrap();
        assert!(matches!(eg_find_order2(&f.blocks[0]), Err(Error::PreconditionViolation(_))));
    }

    #[test]
    fn cong_examples() {
        let g = grp(&[4, 2]);
        let whole = ElementSet::whole(&g);
        for phi in crate::characters::order_two_characters(&g) {
            let k = phi.kernel();
            let r = cong_restrict(&whole, &k, 4).unwrap();
            assert!(r.ok);
            assert_eq!(r.part, k.as_set());
        }
        let f = construct_building_sets(3, SylowType::Ea).unwrap();
        let k = enumerate_characters(&f.group)
            .into_iter()
            .find(|c| c.order() == 2)
            .unwrap()
            .kernel();
        assert!(cong_restrict(&f.blocks[0], &k, 4).unwrap().ok);

        let bad = ElementSet::new(&g, [Elem(0), Elem(1), Elem(2)]);
        assert!(matches!(
            cong_restrict(&bad, &crate::characters::order_two_characters(&g)[0].kernel(), 1),
            Err(Error::HypothesisNotMet(_))
        ));
        assert!(matches!(
            cong_restrict(&whole, &Subgroup::trivial(&g), 1),
            Err(Error::InvalidSubgroup(_))
        ));
    }
}
