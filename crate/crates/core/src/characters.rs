//! The dual group and character sums.
//!
//! A character is stored by its images on the basis generators: component
//! `j` means `chi(b_j) = exp(2 pi i images[j] / n_j)`. Characters are
//! indexed by the same mixed-radix order as elements, so the principal
//! character comes first.
//!
//! Sums over sets are exact Gaussian integers whenever the group exponent
//! divides 4; otherwise they are complex doubles. For 2-groups of larger
//! exponent, [`norm_sq_two_group`] evaluates `|chi(E)|^2` exactly in the
//! cyclotomic ring.

use num_complex::{Complex, Complex64};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::{socle, subgroup_generate, Elem, ElementSet, FinAbGroup, Subgroup};

pub type Gaussian = Complex<i64>;

/// A character value or character sum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CycloValue {
    Exact(Gaussian),
    Approx(Complex64),
}

impl CycloValue {
    pub fn is_exact(&self) -> bool {
        matches!(self, CycloValue::Exact(_))
    }

    pub fn to_complex(&self) -> Complex64 {
        match *self {
            CycloValue::Exact(z) => Complex64::new(z.re as f64, z.im as f64),
            CycloValue::Approx(z) => z,
        }
    }

    pub fn exact(&self) -> Option<Gaussian> {
        match *self {
            CycloValue::Exact(z) => Some(z),
            CycloValue::Approx(_) => None,
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.to_complex().norm_sqr()
    }

    /// Componentwise divisibility; `None` for approximate values.
    pub fn divisible_by(&self, l: i64) -> Option<bool> {
        self.exact().map(|z| z.re % l == 0 && z.im % l == 0)
    }
}

#[derive(Serialize)]
struct CycloRepr {
    re: f64,
    im: f64,
    exact: bool,
}

impl Serialize for CycloValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let z = self.to_complex();
        CycloRepr {
            re: z.re,
            im: z.im,
            exact: self.is_exact(),
        }
        .serialize(s)
    }
}

/// `i^k`
#[inline]
pub fn i_pow(k: u32) -> Gaussian {
    match k % 4 {
        0 => Gaussian::new(1, 0),
        1 => Gaussian::new(0, 1),
        2 => Gaussian::new(-1, 0),
        _ => Gaussian::new(0, -1),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    group: FinAbGroup,
    images: Vec<u32>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CharacterRepr(pub Vec<u32>);

impl Character {
    pub fn new(group: &FinAbGroup, images: &[u32]) -> Result<Self> {
        // same validation as an exponent tuple
        group.elem(images)?;
        Ok(Character {
            group: group.clone(),
            images: images.to_vec(),
        })
    }

    pub fn principal(group: &FinAbGroup) -> Self {
        Character {
            group: group.clone(),
            images: vec![0; group.rank()],
        }
    }

    pub fn from_index(group: &FinAbGroup, idx: usize) -> Self {
        Character {
            group: group.clone(),
            images: group.exps(Elem(idx as u32)),
        }
    }

    pub fn index(&self) -> usize {
        self.group.elem_mod(
            &self.images.iter().map(|&x| x as i64).collect::<Vec<_>>(),
        )
        .idx()
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_principal(&self) -> bool {
        self.images.iter().all(|&x| x == 0)
    }

    /// `chi(g) = exp(2 pi i phase / L)` with `L` the group exponent.
    pub fn phase(&self, g: Elem) -> u32 {
        let l = self.group.exponent();
        let ex = self.group.exps(g);
        phase_of(&self.images, &ex, self.group.factors(), l)
    }

    pub fn value(&self, g: Elem) -> CycloValue {
        let l = self.group.exponent();
        let p = self.phase(g);
        if self.group.exponent_divides_four() {
            CycloValue::Exact(i_pow(p * (4 / l)))
        } else {
            CycloValue::Approx(unit(p, l))
        }
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Character) -> Result<Character> {
        self.group.check_same(&other.group)?;
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .zip(self.group.factors())
            .map(|((&a, &b), &n)| (a + b) % n)
            .collect();
        Ok(Character {
            group: self.group.clone(),
            images,
        })
    }

    pub fn order(&self) -> u32 {
        self.images
            .iter()
            .zip(self.group.factors())
            .fold(1, |acc, (&x, &n)| crate::group::lcm(acc, n / crate::group::gcd(x, n)))
    }

    pub fn is_principal_on(&self, h: &Subgroup) -> Result<bool> {
        self.group.check_same(h.group())?;
        Ok(h.generators().iter().all(|&g| self.phase(g) == 0))
    }

    /// Membership in the Frattini subgroup of the dual: principal on every
    /// element of order at most 2.
    pub fn in_frattini_dual(&self) -> Result<bool> {
        let soc = socle(&self.group)?;
        self.is_principal_on(&soc)
    }

    pub fn kernel(&self) -> Subgroup {
        let elems: Vec<Elem> = self.group.elements().filter(|&g| self.phase(g) == 0).collect();
        Subgroup::from_elements(&self.group, &elems).expect("kernels are subgroups")
    }

    pub fn restrict(&self, h: &Subgroup) -> Result<RestrictedCharacter> {
        self.group.check_same(h.group())?;
        Ok(RestrictedCharacter {
            subgroup: h.clone(),
            phases: h.elements().iter().map(|&g| self.phase(g)).collect(),
        })
    }
}

#[inline]
fn phase_of(images: &[u32], ex: &[u32], factors: &[u32], l: u32) -> u32 {
    let mut p = 0u32;
    for j in 0..factors.len() {
        p += images[j] * ex[j] * (l / factors[j]);
    }
    p % l
}

fn unit(p: u32, l: u32) -> Complex64 {
    let t = std::f64::consts::TAU * p as f64 / l as f64;
    Complex64::new(t.cos(), t.sin())
}

/// All characters, principal first.
pub fn enumerate_characters(g: &FinAbGroup) -> Vec<Character> {
    (0..g.order()).map(|i| Character::from_index(g, i)).collect()
}

/// Characters of order exactly 2.
pub fn order_two_characters(g: &FinAbGroup) -> Vec<Character> {
    (0..g.order())
        .map(|i| Character::from_index(g, i))
        .filter(|c| c.order() == 2)
        .collect()
}

/// All subgroups of index 2, one per character of order 2.
pub fn index_two_subgroups(g: &FinAbGroup) -> Vec<Subgroup> {
    order_two_characters(g).iter().map(Character::kernel).collect()
}

/// Characters principal on `h`.
pub fn annihilator(h: &Subgroup) -> Vec<Character> {
    let g = h.group();
    (0..g.order())
        .map(|i| Character::from_index(g, i))
        .filter(|c| h.generators().iter().all(|&x| c.phase(x) == 0))
        .collect()
}

/// A character of a subgroup `H`, given by its phases on the elements of
/// `H` in sorted order (units of `1/L`, `L` the exponent of the ambient
/// group).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedCharacter {
    pub subgroup: Subgroup,
    pub phases: Vec<u32>,
}

impl RestrictedCharacter {
    pub fn principal(h: &Subgroup) -> Self {
        RestrictedCharacter {
            subgroup: h.clone(),
            phases: vec![0; h.order()],
        }
    }
}

/// All extensions of a character of `H` to the ambient group, ordered by
/// character index. There are `|G/H|` of them.
pub fn restrict_extend(chi_h: &RestrictedCharacter, g: &FinAbGroup) -> Result<Vec<Character>> {
    let h = &chi_h.subgroup;
    if h.group() != g {
        return Err(Error::InvalidSubgroup("H is not a subgroup of G".into()));
    }
    if chi_h.phases.len() != h.order() {
        return Err(Error::InvalidArgument("phase list does not match |H|".into()));
    }
    let agrees = |c: &Character| {
        h.elements()
            .iter()
            .zip(&chi_h.phases)
            .all(|(&x, &p)| c.phase(x) == p % g.exponent())
    };
    let base = (0..g.order())
        .map(|i| Character::from_index(g, i))
        .find(|c| agrees(c))
        .ok_or_else(|| Error::InvalidArgument("phases do not define a character of H".into()))?;
    let mut out: Vec<Character> = annihilator(h)
        .iter()
        .map(|a| base.mul(a).expect("same group"))
        .collect();
    out.sort_by_key(Character::index);
    Ok(out)
}

/// A character nontrivial on both `g1` and `g2`.
pub fn joint_nontrivial_character(g: &FinAbGroup, g1: Elem, g2: Elem) -> Result<Character> {
    if g1 == g.identity() || g2 == g.identity() {
        return Err(Error::InvalidArgument("both elements must be nonidentity".into()));
    }
    (0..g.order())
        .map(|i| Character::from_index(g, i))
        .find(|c| c.phase(g1) != 0 && c.phase(g2) != 0)
        .ok_or_else(|| Error::LemmaViolation("no character is nontrivial on both".into()))
}

/// `sum_{g in E} chi(g)`
pub fn char_sum(chi: &Character, e: &ElementSet) -> Result<CycloValue> {
    chi.group.check_same(e.group())?;
    let g = &chi.group;
    let l = g.exponent();
    let mut ex = vec![0u32; g.rank()];
    if g.exponent_divides_four() {
        let mut acc = Gaussian::new(0, 0);
        for &x in e.elements() {
            g.exps_into(x, &mut ex);
            acc += i_pow(phase_of(&chi.images, &ex, g.factors(), l) * (4 / l));
        }
        Ok(CycloValue::Exact(acc))
    } else {
        let mut acc = Complex64::new(0.0, 0.0);
        for &x in e.elements() {
            g.exps_into(x, &mut ex);
            acc += unit(phase_of(&chi.images, &ex, g.factors(), l), l);
        }
        Ok(CycloValue::Approx(acc))
    }
}

/// Precomputed digit tables for evaluating many characters on one set.
pub struct SetEvaluator {
    group: FinAbGroup,
    /// element digits scaled by `L / n_j`, row-major
    scaled: Vec<u32>,
    len: usize,
}

impl SetEvaluator {
    pub fn new(e: &ElementSet) -> Self {
        let g = e.group();
        let l = g.exponent();
        let r = g.rank();
        let mut scaled = Vec::with_capacity(e.len() * r);
        let mut ex = vec![0u32; r];
        for &x in e.elements() {
            g.exps_into(x, &mut ex);
            for j in 0..r {
                scaled.push(ex[j] * (l / g.factors()[j]));
            }
        }
        SetEvaluator {
            group: g.clone(),
            scaled,
            len: e.len(),
        }
    }

    /// Phases of each set element under the character with index `c`.
    #[inline]
    pub fn phases(&self, c_images: &[u32], out: &mut Vec<u32>) {
        let r = self.group.rank();
        let l = self.group.exponent();
        out.clear();
        for k in 0..self.len {
            let row = &self.scaled[k * r..(k + 1) * r];
            let mut p = 0u32;
            for j in 0..r {
                p += c_images[j] * row[j];
            }
            out.push(p % l);
        }
    }

    /// Exact sum; requires exponent dividing 4.
    #[inline]
    pub fn exact_sum(&self, c_images: &[u32]) -> Gaussian {
        let r = self.group.rank();
        let q = 4 / self.group.exponent();
        let mut counts = [0i64; 4];
        for k in 0..self.len {
            let row = &self.scaled[k * r..(k + 1) * r];
            let mut p = 0u32;
            for j in 0..r {
                p += c_images[j] * row[j];
            }
            counts[((p * q) % 4) as usize] += 1;
        }
        Gaussian::new(counts[0] - counts[2], counts[1] - counts[3])
    }

    pub fn approx_sum(&self, c_images: &[u32]) -> Complex64 {
        let l = self.group.exponent();
        let mut buf = Vec::with_capacity(self.len);
        self.phases(c_images, &mut buf);
        buf.iter().map(|&p| unit(p, l)).sum()
    }
}

/// `chi(E)` for every character, exact. Indexed by character index.
pub fn all_sums_exact(e: &ElementSet) -> Result<Vec<Gaussian>> {
    let g = e.group();
    if !g.exponent_divides_four() {
        return Err(Error::UnsupportedGroup(format!(
            "exact Gaussian sums need exponent dividing 4, {} has exponent {}",
            g.descriptor(),
            g.exponent()
        )));
    }
    let ev = SetEvaluator::new(e);
    let mut imgs = vec![0u32; g.rank()];
    Ok(g.elements()
        .map(|c| {
            g.exps_into(c, &mut imgs);
            ev.exact_sum(&imgs)
        })
        .collect())
}

/// `chi(E)` for every character in double precision.
pub fn all_sums_approx(e: &ElementSet) -> Vec<Complex64> {
    let g = e.group();
    let ev = SetEvaluator::new(e);
    let mut imgs = vec![0u32; g.rank()];
    g.elements()
        .map(|c| {
            g.exps_into(c, &mut imgs);
            ev.approx_sum(&imgs)
        })
        .collect()
}

/// `chi(E)` for every character in the representation the group supports.
pub fn all_sums(e: &ElementSet) -> Vec<CycloValue> {
    match all_sums_exact(e) {
        Ok(v) => v.into_iter().map(CycloValue::Exact).collect(),
        Err(_) => all_sums_approx(e).into_iter().map(CycloValue::Approx).collect(),
    }
}

/// An element of `Z[zeta_L]` for `L` a power of two, in the power basis
/// `1, zeta, ..., zeta^{L/2 - 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloTwo {
    l: u32,
    coeffs: Vec<i64>,
}

impl CycloTwo {
    pub fn zero(l: u32) -> Self {
        assert!(l.is_power_of_two());
        CycloTwo {
            l,
            coeffs: vec![0; (l / 2).max(1) as usize],
        }
    }

    /// `self += zeta^p`
    pub fn add_root(&mut self, p: u32) {
        let p = p % self.l;
        if self.l == 1 {
            self.coeffs[0] += 1;
            return;
        }
        let half = self.l / 2;
        if p < half {
            self.coeffs[p as usize] += 1;
        } else {
            self.coeffs[(p - half) as usize] -= 1;
        }
    }

    pub fn conj(&self) -> Self {
        let mut out = CycloTwo::zero(self.l);
        let half = (self.l / 2).max(1);
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            // zeta^{-k} = zeta^{L-k}
            let p = (self.l - k as u32) % self.l;
            if self.l == 1 || p < half {
                out.coeffs[(p % half) as usize] += c;
            } else {
                out.coeffs[(p - half) as usize] -= c;
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![0i64; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let k = i + j;
                // zeta^{L/2} = -1
                if k < n || self.l <= 2 {
                    out[k % n] += a * b;
                } else {
                    out[k - n] -= a * b;
                }
            }
        }
        CycloTwo {
            l: self.l,
            coeffs: out,
        }
    }

    /// The value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }
}

/// `|chi(E)|^2` for every character of a 2-group, exactly. Entries are
/// `None` where the squared modulus is irrational.
pub fn norm_sq_two_group(e: &ElementSet) -> Result<Vec<Option<i64>>> {
    let g = e.group();
    g.require_two_group()?;
    if g.exponent_divides_four() {
        return Ok(all_sums_exact(e)?
            .into_iter()
            .map(|z| Some(z.norm_sqr()))
            .collect());
    }
    let l = g.exponent();
    let ev = SetEvaluator::new(e);
    let mut imgs = vec![0u32; g.rank()];
    let mut buf = Vec::new();
    Ok(g.elements()
        .map(|c| {
            g.exps_into(c, &mut imgs);
            ev.phases(&imgs, &mut buf);
            let mut v = CycloTwo::zero(l);
            for &p in &buf {
                v.add_root(p);
            }
            v.mul(&v.conj()).as_integer()
        })
        .collect())
}

/// Subgroup generated by the images of a character's basis generators'
/// kernel; convenience for tests and reports.
pub fn kernel_of(chi: &Character) -> Subgroup {
    chi.kernel()
}

/// Subgroup generated by elements on which every listed character is
/// trivial.
pub fn common_kernel(g: &FinAbGroup, chars: &[Character]) -> Subgroup {
    let elems: Vec<Elem> = g
        .elements()
        .filter(|&x| chars.iter().all(|c| c.phase(x) == 0))
        .collect();
    subgroup_generate(g, &elems)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{frattini_and_socle, subgroups_of_order};

    fn grp(f: &[u32]) -> FinAbGroup {
        FinAbGroup::new(f).unwrap()
    }

    #[test]
    fn enumerate_examples() {
        let g = grp(&[4, 2]);
        let chars = enumerate_characters(&g);
        assert_eq!(chars.len(), 8);
        assert!(chars[0].is_principal());
        // dual has the same order statistics as Z4 x Z2
        let mut orders: Vec<u32> = chars.iter().map(Character::order).collect();
        let mut elem_orders: Vec<u32> = g.elements().map(|x| g.order_of(x)).collect();
        orders.sort();
        elem_orders.sort();
        assert_eq!(orders, elem_orders);
        for x in g.elements() {
            assert_eq!(chars[0].value(x), CycloValue::Exact(Gaussian::new(1, 0)));
        }
    }

    #[test]
    fn frattini_of_dual_in_z4_cubed() {
        // oracle: count characters trivial on every x with x^2 = 1
        let g = grp(&[4, 4, 4]);
        let involutions: Vec<Elem> = g.elements().filter(|&x| g.pow(x, 2) == g.identity()).collect();
        let count = enumerate_characters(&g)
            .iter()
            .filter(|c| involutions.iter().all(|&x| c.phase(x) == 0))
            .count();
        assert_eq!(count, 8);
        let via_tool = enumerate_characters(&g)
            .iter()
            .filter(|c| c.in_frattini_dual().unwrap())
            .count();
        assert_eq!(via_tool, 8);
    }

    #[test]
    fn orthogonality() {
        for f in [&[4, 2][..], &[4, 4], &[2, 2, 2], &[8, 2], &[3, 4]] {
            let g = grp(f);
            let whole = ElementSet::whole(&g);
            for c in enumerate_characters(&g) {
                let s = char_sum(&c, &whole).unwrap().to_complex();
                let expect = if c.is_principal() { g.order() as f64 } else { 0.0 };
                assert!((s.re - expect).abs() < 1e-9 && s.im.abs() < 1e-9);
            }
        }
    }

    #[test]
    fn subgroup_sums_are_order_or_zero() {
        let g = grp(&[4, 2, 2]);
        for h in subgroups_of_order(&g, 4, None) {
            for c in enumerate_characters(&g) {
                let s = char_sum(&c, &h.as_set()).unwrap().exact().unwrap();
                if c.is_principal_on(&h).unwrap() {
                    assert_eq!(s, Gaussian::new(4, 0));
                } else {
                    assert_eq!(s, Gaussian::new(0, 0));
                }
            }
        }
    }

    #[test]
    fn character_tools_examples() {
        let g = grp(&[4]);
        let p = Character::principal(&g);
        assert_eq!(p.order(), 1);
        assert!(p.in_frattini_dual().unwrap());
        let c = Character::new(&g, &[1]).unwrap();
        assert_eq!(c.order(), 4);
        assert!(!c.in_frattini_dual().unwrap());

        let g = grp(&[4, 4]);
        let small = enumerate_characters(&g).iter().filter(|c| c.order() <= 2).count();
        assert_eq!(small, 4);

        let odd = grp(&[4, 3]);
        assert!(Character::principal(&odd).in_frattini_dual().is_err());
    }

    #[test]
    fn extensions_from_index_four_subgroup() {
        let g = grp(&[4, 2, 2]);
        let h = subgroups_of_order(&g, 4, None).remove(0);
        for c in enumerate_characters(&g) {
            let r = c.restrict(&h).unwrap();
            let ext = restrict_extend(&r, &g).unwrap();
            assert_eq!(ext.len(), 4);
            assert!(ext.contains(&c));
            for e in &ext {
                assert_eq!(e.restrict(&h).unwrap(), r);
            }
        }
        let ext = restrict_extend(&RestrictedCharacter::principal(&h), &g).unwrap();
        assert_eq!(ext, annihilator(&h));
    }

    #[test]
    fn restriction_is_surjective() {
        // every character of H (as an abstract group) has an extension:
        // the number of distinct restrictions equals |H|.
        let g = grp(&[4, 4, 2]);
        let (phi, _) = frattini_and_socle(&g).unwrap();
        let mut seen: Vec<Vec<u32>> = enumerate_characters(&g)
            .iter()
            .map(|c| c.restrict(&phi).unwrap().phases)
            .collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), phi.order());
    }

    #[test]
    fn bad_restricted_character_is_rejected() {
        let g = grp(&[4]);
        let h = Subgroup::whole(&g);
        let bogus = RestrictedCharacter {
            subgroup: h,
            phases: vec![0, 1, 1, 1],
        };
        assert!(restrict_extend(&bogus, &g).is_err());
    }

    #[test]
    fn joint_nontrivial_examples() {
        let g = grp(&[4]);
        let x = g.elem(&[1]).unwrap();
        let c = joint_nontrivial_character(&g, x, x).unwrap();
        assert_ne!(c.phase(x), 0);

        let g = grp(&[2, 2]);
        let (x, y) = (g.elem(&[1, 0]).unwrap(), g.elem(&[0, 1]).unwrap());
        let c = joint_nontrivial_character(&g, x, y).unwrap();
        assert_eq!(c.images(), &[1, 1]);
        assert!(joint_nontrivial_character(&g, g.identity(), y).is_err());
    }

    #[test]
    fn cyclotomic_norms_match_floats() {
        let g = grp(&[8, 2]);
        let e = ElementSet::new(&g, [Elem(0), Elem(1), Elem(2), Elem(5), Elem(11)]);
        let exact = norm_sq_two_group(&e).unwrap();
        let approx = all_sums_approx(&e);
        for (x, z) in exact.iter().zip(&approx) {
            if let Some(n) = x {
                assert!((*n as f64 - z.norm_sqr()).abs() < 1e-9);
            }
        }
        // a single element always has |chi|^2 = 1
        let one = ElementSet::new(&g, [Elem(3)]);
        assert!(norm_sq_two_group(&one).unwrap().iter().all(|&n| n == Some(1)));
    }

    #[test]
    fn approximate_values_have_unit_modulus() {
        let g = grp(&[4, 5]);
        for c in enumerate_characters(&g) {
            for x in g.elements() {
                let v = c.value(x);
                assert!(!v.is_exact());
                assert!((v.to_complex().norm() - 1.0).abs() < 1e-12);
            }
        }
    }
}
