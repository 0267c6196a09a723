//! Integer group ring `Z[G]` and the difference-set criteria.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::characters::{all_sums_approx, all_sums_exact, Character, CycloValue, Gaussian};
use crate::error::{Error, Result};
use crate::group::{Elem, ElementSet, FinAbGroup};

/// A formal sum `sum_g a_g g`, dense over the canonical element order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingElement {
    group: FinAbGroup,
    coeffs: Vec<i64>,
}

impl GroupRingElement {
    pub fn zero(group: &FinAbGroup) -> Self {
        GroupRingElement {
            group: group.clone(),
            coeffs: vec![0; group.order()],
        }
    }

    pub fn from_coeffs(group: &FinAbGroup, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::InvalidArgument(format!(
                "expected {} coefficients, got {}",
                group.order(),
                coeffs.len()
            )));
        }
        Ok(GroupRingElement {
            group: group.clone(),
            coeffs,
        })
    }

    pub fn from_set(e: &ElementSet) -> Self {
        let mut x = Self::zero(e.group());
        for &g in e.elements() {
            x.coeffs[g.idx()] = 1;
        }
        x
    }

    /// `n * 1`
    pub fn scalar(group: &FinAbGroup, n: i64) -> Self {
        let mut x = Self::zero(group);
        x.coeffs[0] = n;
        x
    }

    /// The sum of all group elements.
    pub fn whole(group: &FinAbGroup) -> Self {
        GroupRingElement {
            group: group.clone(),
            coeffs: vec![1; group.order()],
        }
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, g: Elem) -> i64 {
        self.coeffs[g.idx()]
    }

    pub fn support(&self) -> impl Iterator<Item = (Elem, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (Elem(i as u32), c))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.group.check_same(&other.group)?;
        Ok(GroupRingElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.group.check_same(&other.group)?;
        Ok(GroupRingElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, n: i64) -> Self {
        GroupRingElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|a| a * n).collect(),
        }
    }
}

/// `XY`, accumulated from the sparser operand's support.
pub fn convolve(x: &GroupRingElement, y: &GroupRingElement) -> Result<GroupRingElement> {
    x.group.check_same(&y.group)?;
    let g = &x.group;
    let xs: Vec<(Elem, i64)> = x.support().collect();
    let ys: Vec<(Elem, i64)> = y.support().collect();
    let mut out = GroupRingElement::zero(g);
    for &(a, ca) in &xs {
        for &(b, cb) in &ys {
            out.coeffs[g.mul(a, b).idx()] += ca * cb;
        }
    }
    Ok(out)
}

/// `X^{(t)} = sum_g a_g g^t`
pub fn involute_power(x: &GroupRingElement, t: i64) -> GroupRingElement {
    let g = &x.group;
    let mut out = GroupRingElement::zero(g);
    for (a, c) in x.support() {
        out.coeffs[g.pow(a, t).idx()] += c;
    }
    out
}

/// Difference-set parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamSet {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub q: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<u32>,
}

impl ParamSet {
    /// Fails unless `lambda (v - 1) = k (k - 1)`.
    pub fn new(v: u64, k: u64, lambda: u64) -> Result<Self> {
        let lhs = (lambda as u128) * (v as u128).saturating_sub(1);
        let rhs = (k as u128) * (k as u128).saturating_sub(1);
        if v == 0 || k == 0 || k > v || lhs != rhs {
            return Err(Error::InvalidArgument(format!(
                "({v}, {k}, {lambda}) violates lambda(v-1) = k(k-1)"
            )));
        }
        Ok(ParamSet {
            v,
            k,
            lambda,
            q: None,
            n: None,
            m: None,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientAt {
    pub element: Vec<u32>,
    pub coefficient: i64,
}

/// Two nonidentity elements whose coefficients in `DD^{(-1)}` differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DsetWitness {
    pub first: CoefficientAt,
    pub second: CoefficientAt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DsetVerdict {
    pub verdict: bool,
    pub v: u64,
    pub k: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<DsetWitness>,
}

impl DsetVerdict {
    pub fn params(&self) -> Option<ParamSet> {
        if !self.verdict {
            return None;
        }
        ParamSet::new(self.v, self.k, self.lambda?).ok()
    }
}

/// Decides whether `D` is a difference set by computing `DD^{(-1)}`.
pub fn is_difference_set(d: &ElementSet) -> Result<DsetVerdict> {
    if d.is_empty() {
        return Err(Error::InvalidArgument("D must be nonempty".into()));
    }
    let g = d.group();
    let x = GroupRingElement::from_set(d);
    let prod = convolve(&x, &involute_power(&x, -1))?;
    let v = g.order() as u64;
    let k = d.len() as u64;
    debug_assert_eq!(prod.coeffs[0], k as i64);
    if g.order() == 1 {
        return Ok(DsetVerdict {
            verdict: true,
            v,
            k,
            lambda: Some(0),
            witness: None,
        });
    }
    let lam = prod.coeffs[1];
    let bad = prod.coeffs[2..].iter().position(|&c| c != lam).map(|i| i + 2);
    Ok(match bad {
        None => DsetVerdict {
            verdict: true,
            v,
            k,
            lambda: Some(lam as u64),
            witness: None,
        },
        Some(j) => DsetVerdict {
            verdict: false,
            v,
            k,
            lambda: None,
            witness: Some(DsetWitness {
                first: CoefficientAt {
                    element: g.exps(Elem(1)),
                    coefficient: lam,
                },
                second: CoefficientAt {
                    element: g.exps(Elem(j as u32)),
                    coefficient: prod.coeffs[j],
                },
            }),
        },
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriterionReport {
    pub holds: bool,
    pub exact: bool,
    /// largest `| |chi(D)|^2 - (k - lambda) |` over nonprincipal characters
    pub max_deviation: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_character: Option<Vec<u32>>,
}

pub const FLOAT_TOLERANCE: f64 = 1e-6;

/// `|chi(D)|^2 = k - lambda` for every nonprincipal character.
pub fn dset_character_criterion(d: &ElementSet, k: i64, lambda: i64) -> CriterionReport {
    let g = d.group();
    let target = k - lambda;
    match all_sums_exact(d) {
        Ok(sums) => {
            let mut worst = 0i64;
            let mut witness = None;
            for (c, z) in sums.iter().enumerate().skip(1) {
                let dev = (z.norm_sqr() - target).abs();
                if dev > worst {
                    worst = dev;
                    witness.get_or_insert_with(|| g.exps(Elem(c as u32)));
                }
            }
            CriterionReport {
                holds: worst == 0,
                exact: true,
                max_deviation: worst as f64,
                witness_character: witness,
            }
        }
        Err(_) => {
            let sums = all_sums_approx(d);
            let mut worst = 0.0f64;
            let mut witness = None;
            for (c, z) in sums.iter().enumerate().skip(1) {
                let dev = (z.norm_sqr() - target as f64).abs();
                if dev > FLOAT_TOLERANCE && witness.is_none() {
                    witness = Some(g.exps(Elem(c as u32)));
                }
                worst = worst.max(dev);
            }
            CriterionReport {
                holds: worst <= FLOAT_TOLERANCE,
                exact: false,
                max_deviation: worst,
                witness_character: witness,
            }
        }
    }
}

/// The fibers `E_h = {k : (k, h) in D}` of a subset of `K x H`, indexed by
/// the elements of the odd part `H`.
pub fn fibers(d: &ElementSet) -> Result<(crate::group::SylowSplit, Vec<ElementSet>)> {
    let split = d.group().sylow_split()?;
    let mut buckets: Vec<Vec<Elem>> = vec![Vec::new(); split.odd.order()];
    for &x in d.elements() {
        let (k, h) = split.split(x);
        buckets[h.idx()].push(k);
    }
    let sets = buckets
        .into_iter()
        .map(|b| ElementSet::new(&split.two, b))
        .collect();
    Ok((split, sets))
}

/// `chi(E_h)` recovered by Fourier inversion over the odd part:
/// `chi(E_h) = |H|^{-1} sum_phi conj(phi(h)) (chi phi)(D)`.
///
/// The inversion runs in floating point. When `K` has exponent dividing 4
/// the result is rounded to the nearest Gaussian integer and checked
/// against the direct fiber sum.
pub fn fiber_fourier(d: &ElementSet, chi: &Character, h: Elem) -> Result<CycloValue> {
    let split = d.group().sylow_split()?;
    if !chi.group().same(&split.two) {
        return Err(Error::InvalidDecomposition(
            "character must belong to the Sylow 2-subgroup of D's group".into(),
        ));
    }
    if h.idx() >= split.odd.order() {
        return Err(Error::OutOfRange(format!("{} is not an element of the odd part", h.0)));
    }
    let gw = d.group();
    let odd = &split.odd;
    let mut acc = Complex64::new(0.0, 0.0);
    for phi in crate::characters::enumerate_characters(odd) {
        // (chi, phi) as a character of the whole group
        let joined = split.join(Elem(chi.index() as u32), Elem(phi.index() as u32));
        let cw = Character::from_index(gw, joined.idx());
        let s = crate::characters::char_sum(&cw, d)?.to_complex();
        let ph = phi.value(h).to_complex().conj();
        acc += ph * s;
    }
    acc /= odd.order() as f64;
    if split.two.exponent_divides_four() {
        let z = Gaussian::new(acc.re.round() as i64, acc.im.round() as i64);
        let err = (acc - Complex64::new(z.re as f64, z.im as f64)).norm();
        let (_, fib) = fibers(d)?;
        let direct = crate::characters::char_sum(chi, &fib[h.idx()])?;
        if err > FLOAT_TOLERANCE || direct.exact() != Some(z) {
            return Err(Error::LemmaViolation(format!(
                "Fourier inversion gave {acc} but the fiber sum is {:?}",
                direct
            )));
        }
        Ok(CycloValue::Exact(z))
    } else {
        Ok(CycloValue::Approx(acc))
    }
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let (mut r, mut e) = (q, 0);
    while r % p == 0 {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p, e))
}

/// McFarland parameters for `q` a prime power:
/// `v = q^n ((q^n - 1)/(q - 1) + 1)`, `k = q^{n-1} (q^n - 1)/(q - 1)`,
/// `lambda = q^{n-1} (q^{n-1} - 1)/(q - 1)`.
pub fn mcfarland_params(q: u64, n: u32) -> Result<ParamSet> {
    let (p, e) = prime_power(q)
        .ok_or_else(|| Error::InvalidArgument(format!("{q} is not a prime power")))?;
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let overflow = || Error::OutOfRange(format!("parameters for q={q}, n={n} overflow"));
    let qn = q.checked_pow(n).ok_or_else(overflow)?;
    let qn1 = q.checked_pow(n - 1).ok_or_else(overflow)?;
    let r = (qn - 1) / (q - 1);
    let r1 = (qn1 - 1) / (q - 1);
    let v = qn.checked_mul(r + 1).ok_or_else(overflow)?;
    let k = qn1.checked_mul(r).ok_or_else(overflow)?;
    let lambda = qn1.checked_mul(r1).ok_or_else(overflow)?;
    let mut ps = ParamSet::new(v, k, lambda)?;
    ps.q = Some(q);
    ps.n = Some(n);
    if p == 2 {
        ps.m = Some(e);
    }
    Ok(ps)
}

/// `(2^{2m+1}(2^{m-1}+1), 2^m(2^m+1), 2^m)`
pub fn two_power_params(m: u32) -> Result<ParamSet> {
    if !(1..=20).contains(&m) {
        return Err(Error::OutOfRange(format!("m = {m}")));
    }
    let v = (1u64 << (2 * m + 1)) * ((1u64 << (m - 1)) + 1);
    let k = (1u64 << m) * ((1u64 << m) + 1);
    let mut ps = ParamSet::new(v, k, 1 << m)?;
    ps.q = Some(1 << m);
    ps.n = Some(2);
    ps.m = Some(m);
    Ok(ps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(f: &[u32]) -> FinAbGroup {
        FinAbGroup::new(f).unwrap()
    }

    #[test]
    fn convolution_examples() {
        let g = grp(&[4, 2]);
        let a = g.elem(&[1, 0]).unwrap();
        let b = g.elem(&[3, 1]).unwrap();
        let x = GroupRingElement::from_set(&ElementSet::new(&g, [a]));
        let y = GroupRingElement::from_set(&ElementSet::new(&g, [b]));
        let xy = convolve(&x, &y).unwrap();
        assert_eq!(xy.support().collect::<Vec<_>>(), vec![(g.mul(a, b), 1)]);

        let whole = GroupRingElement::whole(&g);
        assert_eq!(convolve(&whole, &whole).unwrap(), whole.scale(8));
    }

    #[test]
    fn squares_of_the_whole_group() {
        // G^{(2)} = |G/Phi| Phi
        let g = grp(&[4, 4, 2]);
        let sq = involute_power(&GroupRingElement::whole(&g), 2);
        let phi = crate::group::frattini(&g).unwrap();
        let expect = GroupRingElement::from_set(&phi.as_set()).scale(phi.index() as i64);
        assert_eq!(sq, expect);
    }

    #[test]
    fn involution_examples() {
        let g = grp(&[4]);
        let x = GroupRingElement::from_set(&ElementSet::new(&g, [Elem(0), Elem(1)]));
        let inv = involute_power(&x, -1);
        assert_eq!(inv, GroupRingElement::from_set(&ElementSet::new(&g, [Elem(0), Elem(3)])));
        assert_eq!(involute_power(&x, 1), x);
    }

    #[test]
    fn difference_set_examples() {
        let g = grp(&[2]);
        let r = is_difference_set(&ElementSet::new(&g, [Elem(1)])).unwrap();
        assert!(r.verdict);
        assert_eq!((r.v, r.k, r.lambda), (2, 1, Some(0)));

        let g = grp(&[4]);
        let r = is_difference_set(&ElementSet::new(&g, [Elem(0), Elem(2)])).unwrap();
        assert!(!r.verdict);
        let w = r.witness.unwrap();
        assert_eq!((w.first.element.clone(), w.first.coefficient), (vec![1], 0));
        assert_eq!((w.second.element.clone(), w.second.coefficient), (vec![2], 2));

        // the (7,3,1) Singer set
        let g = grp(&[7]);
        let d = ElementSet::new(&g, [Elem(1), Elem(2), Elem(4)]);
        let r = is_difference_set(&d).unwrap();
        assert_eq!(r.params().unwrap(), ParamSet::new(7, 3, 1).unwrap());
        assert!(dset_character_criterion(&d, 3, 1).holds);
    }

    #[test]
    fn subgroup_fails_character_criterion() {
        let g = grp(&[4, 4]);
        let h = crate::group::frattini(&g).unwrap();
        let r = dset_character_criterion(&h.as_set(), 4, 4);
        assert!(!r.holds);
        assert!(r.exact);
    }

    #[test]
    fn mcfarland_examples() {
        let p = mcfarland_params(8, 2).unwrap();
        assert_eq!((p.v, p.k, p.lambda, p.m), (640, 72, 8, Some(3)));
        let p = mcfarland_params(2, 1).unwrap();
        assert_eq!((p.v, p.k, p.lambda), (4, 1, 0));
        let p = mcfarland_params(4, 2).unwrap();
        assert_eq!((p.v, p.k, p.lambda), (96, 20, 4));
        let p = mcfarland_params(3, 2).unwrap();
        assert_eq!((p.v, p.k, p.lambda, p.m), (45, 12, 3, None));
        assert!(mcfarland_params(6, 2).is_err());
        assert!(mcfarland_params(1, 2).is_err());
        for m in 1..=8 {
            let a = mcfarland_params(1 << m, 2).unwrap();
            let b = two_power_params(m).unwrap();
            assert_eq!((a.v, a.k, a.lambda), (b.v, b.k, b.lambda));
        }
    }

    #[test]
    fn param_identity_is_enforced() {
        assert!(ParamSet::new(7, 3, 1).is_ok());
        assert!(ParamSet::new(7, 3, 2).is_err());
    }
}
