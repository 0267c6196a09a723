//! Finite abelian groups given as a product of cyclic factors.
//!
//! Elements are addressed by a mixed-radix index over the factor orders,
//! with the *last* factor varying fastest, so sorting indices sorts the
//! exponent tuples lexicographically. Every dense table in the crate uses
//! this order.

mod descriptor;
mod snf;
mod subgroup;

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use subgroup::{
    abelian_invariants, automorphism_generators, is_transversal, quotient, stabilizer,
    subgroup_generate, subgroup_orbit_representatives, subgroups_of_order, two_group_chain, Coset,
    ElementSet, Quotient, Subgroup,
};

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

/// Index of an element in its group's canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(pub u32);

impl Elem {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

struct GroupInner {
    id: u64,
    factors: Vec<u32>,
    /// `strides[j]` is the index weight of coordinate `j`.
    strides: Vec<u32>,
    order: u32,
    exponent: u32,
}

/// A finite abelian group `Z_{n_0} x ... x Z_{n_{r-1}}`.
///
/// Cloning is cheap. Two handles compare equal only if they come from the
/// same construction; derived objects check this to avoid mixing indices
/// from unrelated groups.
#[derive(Clone)]
pub struct FinAbGroup(Arc<GroupInner>);

impl PartialEq for FinAbGroup {
    fn eq(&self, other: &Self) -> bool {
        self.0.id == other.0.id
    }
}

impl Eq for FinAbGroup {}

impl fmt::Debug for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinAbGroup({})", self.descriptor())
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

/// Largest group order handled. Dense tables are indexed by `u32`.
pub const MAX_ORDER: u64 = 1 << 24;

impl FinAbGroup {
    /// Builds the group with the given cyclic factor orders.
    pub fn new(factors: &[u32]) -> Result<Self> {
        if let Some(&bad) = factors.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidDescriptor(format!(
                "factor order {bad} is smaller than 2"
            )));
        }
        let mut order: u64 = 1;
        for &n in factors {
            order *= n as u64;
            if order > MAX_ORDER {
                return Err(Error::InvalidDescriptor(format!(
                    "group order exceeds {MAX_ORDER}"
                )));
            }
        }
        let mut strides = vec![0u32; factors.len()];
        let mut acc = 1u32;
        for j in (0..factors.len()).rev() {
            strides[j] = acc;
            acc *= factors[j];
        }
        let exponent = factors.iter().fold(1u32, |l, &n| lcm(l, n));
        Ok(FinAbGroup(Arc::new(GroupInner {
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            factors: factors.to_vec(),
            strides,
            order: order as u32,
            exponent,
        })))
    }

    /// Parses descriptors such as `Z4^3` or `Z4xZ2^5xZ5`.
    pub fn parse(descriptor: &str) -> Result<Self> {
        Self::new(&descriptor::parse(descriptor)?)
    }

    /// Canonical descriptor string, with runs of equal factors collapsed.
    pub fn descriptor(&self) -> String {
        descriptor::format(&self.0.factors)
    }

    pub fn factors(&self) -> &[u32] {
        &self.0.factors
    }

    pub fn rank(&self) -> usize {
        self.0.factors.len()
    }

    pub fn order(&self) -> usize {
        self.0.order as usize
    }

    pub fn exponent(&self) -> u32 {
        self.0.exponent
    }

    pub fn id(&self) -> u64 {
        self.0.id
    }

    pub fn is_two_group(&self) -> bool {
        self.0.factors.iter().all(|n| n.is_power_of_two())
    }

    /// True when every character value lies in `{1, i, -1, -i}`.
    pub fn exponent_divides_four(&self) -> bool {
        4 % self.0.exponent == 0
    }

    pub fn same(&self, other: &FinAbGroup) -> bool {
        self == other
    }

    pub(crate) fn check_same(&self, other: &FinAbGroup) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub(crate) fn require_two_group(&self) -> Result<()> {
        if self.is_two_group() {
            Ok(())
        } else {
            Err(Error::UnsupportedGroup(format!(
                "{} is not a 2-group",
                self.descriptor()
            )))
        }
    }

    #[inline]
    pub fn identity(&self) -> Elem {
        Elem(0)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.0.order).map(Elem)
    }

    /// Exponent tuple of an element.
    pub fn exps(&self, e: Elem) -> Vec<u32> {
        let mut out = vec![0u32; self.rank()];
        self.exps_into(e, &mut out);
        out
    }

    #[inline]
    pub fn exps_into(&self, e: Elem, out: &mut [u32]) {
        let mut rest = e.0;
        for j in (0..self.0.factors.len()).rev() {
            let n = self.0.factors[j];
            out[j] = rest % n;
            rest /= n;
        }
    }

    /// Element with the given exponent tuple; components must be reduced.
    pub fn elem(&self, exps: &[u32]) -> Result<Elem> {
        if exps.len() != self.rank() {
            return Err(Error::InvalidArgument(format!(
                "exponent tuple has length {}, group rank is {}",
                exps.len(),
                self.rank()
            )));
        }
        for (j, (&x, &n)) in exps.iter().zip(&self.0.factors).enumerate() {
            if x >= n {
                return Err(Error::InvalidArgument(format!(
                    "exponent {x} at position {j} is not reduced mod {n}"
                )));
            }
        }
        Ok(self.elem_reduced(exps))
    }

    /// Element with the given exponents, reducing each modulo its factor.
    pub fn elem_mod(&self, exps: &[i64]) -> Elem {
        let mut idx = 0u32;
        for (j, &x) in exps.iter().enumerate() {
            let n = self.0.factors[j] as i64;
            idx += (x.rem_euclid(n) as u32) * self.0.strides[j];
        }
        Elem(idx)
    }

    #[inline]
    fn elem_reduced(&self, exps: &[u32]) -> Elem {
        Elem(
            exps.iter()
                .zip(&self.0.strides)
                .map(|(&x, &s)| x * s)
                .sum(),
        )
    }

    /// The generator of the `j`-th cyclic factor.
    pub fn basis(&self, j: usize) -> Elem {
        Elem(self.0.strides[j])
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let (mut ra, mut rb) = (a.0, b.0);
        let mut out = 0u32;
        for j in (0..self.0.factors.len()).rev() {
            let n = self.0.factors[j];
            let s = (ra % n + rb % n) % n;
            out += s * self.0.strides[j];
            ra /= n;
            rb /= n;
        }
        Elem(out)
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        let mut ra = a.0;
        let mut out = 0u32;
        for j in (0..self.0.factors.len()).rev() {
            let n = self.0.factors[j];
            let x = ra % n;
            out += ((n - x) % n) * self.0.strides[j];
            ra /= n;
        }
        Elem(out)
    }

    /// `a * b^{-1}`
    #[inline]
    pub fn div(&self, a: Elem, b: Elem) -> Elem {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Elem, t: i64) -> Elem {
        let mut ra = a.0;
        let mut out = 0u32;
        for j in (0..self.0.factors.len()).rev() {
            let n = self.0.factors[j];
            let x = (ra % n) as i64;
            let y = (x * t.rem_euclid(n as i64)).rem_euclid(n as i64) as u32;
            out += y * self.0.strides[j];
            ra /= n;
        }
        Elem(out)
    }

    /// Smallest positive `s` with `a^s = 1`.
    pub fn order_of(&self, a: Elem) -> u32 {
        let mut ra = a.0;
        let mut ord = 1u32;
        for j in (0..self.0.factors.len()).rev() {
            let n = self.0.factors[j];
            let x = ra % n;
            ord = lcm(ord, n / gcd(x, n));
            ra /= n;
        }
        ord
    }

    /// Splits the group into its 2-part and odd part.
    ///
    /// Fails unless every factor is a power of two or odd.
    pub fn sylow_split(&self) -> Result<SylowSplit> {
        let mut two_pos = Vec::new();
        let mut odd_pos = Vec::new();
        for (j, &n) in self.0.factors.iter().enumerate() {
            if n.is_power_of_two() {
                two_pos.push(j);
            } else if n % 2 == 1 {
                odd_pos.push(j);
            } else {
                return Err(Error::InvalidDecomposition(format!(
                    "factor Z{n} mixes the 2-part with an odd part"
                )));
            }
        }
        if odd_pos.is_empty() {
            return Err(Error::InvalidDecomposition(format!(
                "{} has no odd part",
                self.descriptor()
            )));
        }
        let two: Vec<u32> = two_pos.iter().map(|&j| self.0.factors[j]).collect();
        let odd: Vec<u32> = odd_pos.iter().map(|&j| self.0.factors[j]).collect();
        Ok(SylowSplit {
            whole: self.clone(),
            two: FinAbGroup::new(&two)?,
            odd: FinAbGroup::new(&odd)?,
            two_pos,
            odd_pos,
        })
    }

    /// Direct product `self x other`, factors concatenated.
    pub fn product(&self, other: &FinAbGroup) -> Result<FinAbGroup> {
        let mut f = self.0.factors.clone();
        f.extend_from_slice(&other.0.factors);
        FinAbGroup::new(&f)
    }
}

/// `G = K x H` with `K` the Sylow 2-subgroup and `H` the odd part.
#[derive(Clone, Debug)]
pub struct SylowSplit {
    pub whole: FinAbGroup,
    pub two: FinAbGroup,
    pub odd: FinAbGroup,
    two_pos: Vec<usize>,
    odd_pos: Vec<usize>,
}

impl SylowSplit {
    pub fn split(&self, e: Elem) -> (Elem, Elem) {
        let ex = self.whole.exps(e);
        let k: Vec<u32> = self.two_pos.iter().map(|&j| ex[j]).collect();
        let h: Vec<u32> = self.odd_pos.iter().map(|&j| ex[j]).collect();
        (self.two.elem_reduced(&k), self.odd.elem_reduced(&h))
    }

    pub fn join(&self, k: Elem, h: Elem) -> Elem {
        let kx = self.two.exps(k);
        let hx = self.odd.exps(h);
        let mut ex = vec![0u32; self.whole.rank()];
        for (i, &j) in self.two_pos.iter().enumerate() {
            ex[j] = kx[i];
        }
        for (i, &j) in self.odd_pos.iter().enumerate() {
            ex[j] = hx[i];
        }
        self.whole.elem_reduced(&ex)
    }
}

/// An element bound to its group, for checked arithmetic across API
/// boundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub group: FinAbGroup,
    pub elem: Elem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementOps {
    pub product: Vec<u32>,
    pub inverse: Vec<u32>,
    pub power: Vec<u32>,
    pub order: u32,
}

impl GroupElement {
    pub fn new(group: &FinAbGroup, exps: &[u32]) -> Result<Self> {
        Ok(GroupElement {
            group: group.clone(),
            elem: group.elem(exps)?,
        })
    }

    pub fn exps(&self) -> Vec<u32> {
        self.group.exps(self.elem)
    }

    pub fn mul(&self, other: &GroupElement) -> Result<GroupElement> {
        self.group.check_same(&other.group)?;
        Ok(GroupElement {
            group: self.group.clone(),
            elem: self.group.mul(self.elem, other.elem),
        })
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement {
            group: self.group.clone(),
            elem: self.group.inv(self.elem),
        }
    }

    pub fn pow(&self, t: i64) -> GroupElement {
        GroupElement {
            group: self.group.clone(),
            elem: self.group.pow(self.elem, t),
        }
    }

    pub fn order(&self) -> u32 {
        self.group.order_of(self.elem)
    }
}

/// Product `gh`, inverse and `t`-th power of `g`, and the order of `g`.
pub fn element_ops(g: &GroupElement, h: &GroupElement, t: i64) -> Result<ElementOps> {
    let product = g.mul(h)?;
    Ok(ElementOps {
        product: product.exps(),
        inverse: g.inverse().exps(),
        power: g.pow(t).exps(),
        order: g.order(),
    })
}

/// Frattini subgroup (squares) and socle (elements of order at most 2) of
/// a 2-group.
pub fn frattini_and_socle(g: &FinAbGroup) -> Result<(Subgroup, Subgroup)> {
    g.require_two_group()?;
    Ok((frattini(g)?, socle(g)?))
}

pub fn frattini(g: &FinAbGroup) -> Result<Subgroup> {
    g.require_two_group()?;
    let gens: Vec<Elem> = (0..g.rank()).map(|j| g.pow(g.basis(j), 2)).collect();
    Ok(subgroup_generate(g, &gens))
}

pub fn socle(g: &FinAbGroup) -> Result<Subgroup> {
    g.require_two_group()?;
    let gens: Vec<Elem> = (0..g.rank())
        .map(|j| g.pow(g.basis(j), (g.factors()[j] / 2) as i64))
        .collect();
    Ok(subgroup_generate(g, &gens))
}

pub(crate) fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u32, b: u32) -> u32 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}
