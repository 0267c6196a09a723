//! Desarguesian spreads in `GF(2^m)^2`.

use serde::Serialize;

use super::gf2m::Gf2m;
use crate::characters::order_two_characters;
use crate::error::{Error, Result};
use crate::group::{Elem, FinAbGroup, Subgroup};

/// The `2^m + 1` one-dimensional subspaces of `GF(2^m)^2`, realized in
/// `Z2^{2m}`. Bits `0..m` of a coordinate mask hold `a`, bits `m..2m` hold
/// `b` in the pair `(a, b)`.
///
/// Member `j < 2^m` is `{(a, j a)}`; the last member is `{(0, b)}`.
#[derive(Clone, Debug)]
pub struct SpreadFamily {
    pub field: Gf2m,
    pub ambient: Subgroup,
    pub members: Vec<Subgroup>,
    /// coordinate masks of each member's elements, parallel to `members`
    pub member_masks: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpreadCheck {
    pub members: usize,
    pub pairwise_trivial: bool,
    pub covers: bool,
    pub hyperplanes: usize,
    pub hyperplanes_with_one_member: usize,
}

impl SpreadCheck {
    pub fn ok(&self) -> bool {
        self.pairwise_trivial && self.covers && self.hyperplanes == self.hyperplanes_with_one_member
    }
}

pub fn mask_to_elem(g: &FinAbGroup, mask: u32) -> Elem {
    let ex: Vec<u32> = (0..g.rank()).map(|i| (mask >> i) & 1).collect();
    g.elem(&ex).expect("mask fits the group")
}

pub fn gf2m_spread(m: u32, poly: Option<u32>) -> Result<SpreadFamily> {
    if !(1..=6).contains(&m) {
        return Err(Error::OutOfRange(format!("spread needs 1 <= m <= 6, got {m}")));
    }
    let field = Gf2m::new(m, poly)?;
    let g = FinAbGroup::new(&vec![2; 2 * m as usize])?;
    let q = field.size();
    let mut member_masks = Vec::with_capacity(q as usize + 1);
    for s in 0..q {
        member_masks.push((0..q).map(|a| a | (field.mul(s, a) << m)).collect::<Vec<u32>>());
    }
    member_masks.push((0..q).map(|b| b << m).collect());
    let members = member_masks
        .iter()
        .map(|ms| {
            let els: Vec<Elem> = ms.iter().map(|&x| mask_to_elem(&g, x)).collect();
            Subgroup::from_elements(&g, &els)
        })
        .collect::<Result<Vec<_>>>()?;
    let fam = SpreadFamily {
        field,
        ambient: Subgroup::whole(&g),
        members,
        member_masks,
    };
    let check = check_spread(&fam.members)?;
    if !check.ok() {
        return Err(Error::LemmaViolation(format!("spread invariants fail: {check:?}")));
    }
    Ok(fam)
}

/// Checks the spread invariants for subgroups of an elementary abelian
/// group, enumerating every hyperplane.
pub fn check_spread(members: &[Subgroup]) -> Result<SpreadCheck> {
    let g = members
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty spread".into()))?
        .group()
        .clone();
    if g.factors().iter().any(|&n| n != 2) {
        return Err(Error::UnsupportedGroup(format!(
            "spreads live in elementary abelian groups, not {}",
            g.descriptor()
        )));
    }
    for h in members {
        g.check_same(h.group())?;
    }
    let mut pairwise_trivial = true;
    for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            if a.intersect(b)?.order() != 1 {
                pairwise_trivial = false;
            }
        }
    }
    let mut seen = vec![false; g.order()];
    for h in members {
        for &x in h.elements() {
            seen[x.idx()] = true;
        }
    }
    let covers = seen.iter().all(|&s| s);
    let hyper = order_two_characters(&g);
    let mut with_one = 0;
    for c in &hyper {
        let mut count = 0;
        for h in members {
            if c.is_principal_on(h)? {
                count += 1;
            }
        }
        if count == 1 {
            with_one += 1;
        }
    }
    Ok(SpreadCheck {
        members: members.len(),
        pairwise_trivial,
        covers,
        hyperplanes: hyper.len(),
        hyperplanes_with_one_member: with_one,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_spreads() {
        let s = gf2m_spread(1, None).unwrap();
        assert_eq!(s.members.len(), 3);
        assert!(s.members.iter().all(|h| h.order() == 2));

        let s = gf2m_spread(3, None).unwrap();
        assert_eq!(s.members.len(), 9);
        assert!(s.members.iter().all(|h| h.order() == 8));
        let c = check_spread(&s.members).unwrap();
        assert_eq!(c.hyperplanes, 63);
        assert!(c.ok());
    }

    #[test]
    fn broken_spread_is_detected() {
        let s = gf2m_spread(2, None).unwrap();
        let mut members = s.members.clone();
        members[1] = members[0].clone();
        let c = check_spread(&members).unwrap();
        assert!(!c.pairwise_trivial);
        assert!(!c.ok());
    }

    #[test]
    fn out_of_range() {
        assert!(gf2m_spread(0, None).is_err());
        assert!(gf2m_spread(7, None).is_err());
        assert!(matches!(gf2m_spread(2, Some(0b101)), Err(Error::InvalidField(_))));
    }
}
