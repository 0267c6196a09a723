//! `(2^{m+1}, 2^m, 2^{m-1})` building sets: construction, verification,
//! assembly into difference sets and back.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::spread::gf2m_spread;
use crate::characters::{norm_sq_two_group, Character};
use crate::error::{Error, Result};
use crate::group::{quotient, subgroup_generate, Coset, Elem, ElementSet, FinAbGroup, Subgroup};
use crate::group_ring::{convolve, involute_power, GroupRingElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SylowType {
    /// `Z2^{2m+1}`
    Ea,
    /// `Z4 x Z2^{2m-1}`
    Z4,
}

impl FromStr for SylowType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ea" => Ok(SylowType::Ea),
            "z4" => Ok(SylowType::Z4),
            _ => Err(Error::InvalidArgument(format!("unknown Sylow type {s:?}, expected ea or z4"))),
        }
    }
}

impl fmt::Display for SylowType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SylowType::Ea => "ea",
            SylowType::Z4 => "z4",
        })
    }
}

/// Where a family came from, carried through serialization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub source: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sylow: Option<SylowType>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub field_poly: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pairing: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub t: Option<Vec<u32>>,
}

#[derive(Clone, Debug)]
pub struct BuildingSetFamily {
    pub group: FinAbGroup,
    pub m: u32,
    pub n: Subgroup,
    pub blocks: Vec<ElementSet>,
    pub provenance: Option<Provenance>,
}

impl PartialEq for BuildingSetFamily {
    fn eq(&self, other: &Self) -> bool {
        // structural: families read back from JSON live in a fresh group
        self.group.factors() == other.group.factors()
            && self.m == other.m
            && self.n.elements() == other.n.elements()
            && self.blocks.len() == other.blocks.len()
            && self.blocks.iter().zip(&other.blocks).all(|(a, b)| a.elements() == b.elements())
    }
}

/// A constructed family together with the spread it came from.
#[derive(Clone, Debug)]
pub struct Construction {
    pub family: BuildingSetFamily,
    /// spread members embedded in `G2`, `members[0] = N`
    pub members: Vec<Subgroup>,
    pub ambient: Subgroup,
    pub t: Elem,
}

fn check_m(m: u32) -> Result<()> {
    if !(2..=5).contains(&m) {
        return Err(Error::OutOfRange(format!("construction needs 2 <= m <= 5, got {m}")));
    }
    Ok(())
}

pub fn construct_building_sets(m: u32, sylow: SylowType) -> Result<BuildingSetFamily> {
    Ok(construct_with_poly(m, sylow, None)?.family)
}

/// `N = H_0` and `E_i = H_{2i-1} u t H_{2i}` over the spread `H_0..H_{2^m}`.
pub fn construct_with_poly(m: u32, sylow: SylowType, poly: Option<u32>) -> Result<Construction> {
    check_m(m)?;
    let spread = gf2m_spread(m, poly)?;
    let r = 2 * m as usize;
    let amb = spread.ambient.group().clone();
    let elem_mask = |e: Elem| -> u32 {
        amb.exps(e).iter().enumerate().fold(0, |acc, (i, &b)| acc | (b << i))
    };

    let (g2, table, t) = match sylow {
        SylowType::Ea => {
            let g2 = FinAbGroup::new(&vec![2; r + 1])?;
            let table: Vec<Elem> = (0..1u32 << r)
                .map(|mask| {
                    let ex: Vec<u32> = (0..=r).map(|i| if i < r { (mask >> i) & 1 } else { 0 }).collect();
                    g2.elem(&ex).expect("in range")
                })
                .collect();
            let t = g2.basis(r);
            (g2, table, t)
        }
        SylowType::Z4 => {
            let mut f = vec![4u32];
            f.extend(std::iter::repeat_n(2, r - 1));
            let g2 = FinAbGroup::new(&f)?;
            let s = elem_mask(spread.members[1].elements()[1]);
            // extend s to a basis of GF(2)^{2m} greedily with unit vectors
            let mut basis = vec![s];
            for i in 0..r {
                if basis.len() == r {
                    break;
                }
                let cand = 1u32 << i;
                if !in_span(&basis, cand) {
                    basis.push(cand);
                }
            }
            let mut images = vec![g2.elem_mod(&[2])];
            images.extend((1..r).map(|k| g2.basis(k)));
            let mut table = vec![g2.identity(); 1 << r];
            for combo in 0..1u32 << r {
                let mut mask = 0;
                let mut img = g2.identity();
                for (k, &b) in basis.iter().enumerate() {
                    if combo >> k & 1 == 1 {
                        mask ^= b;
                        img = g2.mul(img, images[k]);
                    }
                }
                table[mask as usize] = img;
            }
            let t = g2.basis(0);
            (g2, table, t)
        }
    };

    let embed = |h: &Subgroup| -> Result<Subgroup> {
        let els: Vec<Elem> = h.elements().iter().map(|&e| table[elem_mask(e) as usize]).collect();
        Subgroup::from_elements(&g2, &els)
    };
    let members = spread.members.iter().map(embed).collect::<Result<Vec<_>>>()?;
    let ambient = embed(&spread.ambient)?;
    let n = members[0].clone();
    let blocks: Vec<ElementSet> = (1..=(1usize << (m - 1)))
        .map(|i| {
            let a = members[2 * i - 1].as_set();
            let b = members[2 * i].as_set().translate(t);
            a.union(&b).expect("same group")
        })
        .collect();
    let provenance = Provenance {
        source: "spread".into(),
        sylow: Some(sylow),
        field_poly: Some(spread.field.poly()),
        pairing: Some("consecutive".into()),
        t: Some(g2.exps(t)),
    };
    Ok(Construction {
        family: BuildingSetFamily {
            group: g2,
            m,
            n,
            blocks,
            provenance: Some(provenance),
        },
        members,
        ambient,
        t,
    })
}

fn in_span(basis: &[u32], v: u32) -> bool {
    let mut rows: Vec<u32> = Vec::new();
    for &b in basis {
        let mut x = b;
        for &r in &rows {
            x = x.min(x ^ r);
        }
        if x != 0 {
            rows.push(x);
            rows.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    let mut x = v;
    for &r in &rows {
        x = x.min(x ^ r);
    }
    x == 0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub condition: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub block: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub character: Option<Vec<u32>>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub verdict: bool,
    pub characters_checked: usize,
    pub violation_count: usize,
    pub violations: Vec<Violation>,
}

const MAX_REPORTED: usize = 32;

/// Checks the three building-set conditions exactly over every character.
pub fn verify_building_sets(f: &BuildingSetFamily) -> Result<VerifyReport> {
    let g = &f.group;
    g.require_two_group()?;
    g.check_same(f.n.group())?;
    for b in &f.blocks {
        g.check_same(b.group())?;
    }
    let m = f.m;
    if m == 0 || m > 12 {
        return Err(Error::OutOfRange(format!("m = {m}")));
    }
    let mut violations = Vec::new();
    let mut count = 0usize;
    let mut push = |v: Violation| {
        count += 1;
        if violations.len() < MAX_REPORTED {
            violations.push(v);
        }
    };

    let k = 1usize << (m + 1);
    let n_mod = 1i64 << m;
    if f.blocks.len() != 1 << (m - 1) {
        push(Violation {
            condition: "i".into(),
            block: None,
            character: None,
            detail: format!("expected {} blocks, found {}", 1 << (m - 1), f.blocks.len()),
        });
    }
    if f.n.order() * k != g.order() {
        push(Violation {
            condition: "i".into(),
            block: None,
            character: None,
            detail: format!("|G| = {} is not |N| * {k} = {}", g.order(), f.n.order() * k),
        });
    }
    for (i, b) in f.blocks.iter().enumerate() {
        if b.len() != k {
            push(Violation {
                condition: "i".into(),
                block: Some(i),
                character: None,
                detail: format!("block has {} elements, expected {k}", b.len()),
            });
        }
    }

    let norms: Vec<Vec<Option<i64>>> = f
        .blocks
        .iter()
        .map(norm_sq_two_group)
        .collect::<Result<_>>()?;
    let target = n_mod * n_mod;
    for c in 1..g.order() {
        let chi = Character::from_index(g, c);
        let on_n = chi.is_principal_on(&f.n)?;
        let col = norms.iter().map(|v| v[c]);
        if on_n {
            for (i, x) in col.enumerate() {
                if x != Some(0) {
                    push(Violation {
                        condition: "ii".into(),
                        block: Some(i),
                        character: Some(chi.images().to_vec()),
                        detail: format!("character trivial on N has nonzero sum on block, |sum|^2 = {x:?}"),
                    });
                }
            }
        } else {
            let full: Vec<usize> = col
                .clone()
                .enumerate()
                .filter(|(_, x)| *x == Some(target))
                .map(|(i, _)| i)
                .collect();
            let other: Vec<usize> = col
                .enumerate()
                .filter(|(_, x)| *x != Some(target) && *x != Some(0))
                .map(|(i, _)| i)
                .collect();
            if full.len() != 1 || !other.is_empty() {
                push(Violation {
                    condition: "iii".into(),
                    block: other.first().or(full.get(1)).copied(),
                    character: Some(chi.images().to_vec()),
                    detail: format!(
                        "{} blocks reach modulus {n_mod}, {} have another nonzero modulus",
                        full.len(),
                        other.len()
                    ),
                });
            }
        }
    }
    Ok(VerifyReport {
        verdict: count == 0,
        characters_checked: g.order(),
        violation_count: count,
        violations,
    })
}

/// `D = N x {1} + sum_i E_i x {h_i}` with `h_i` the nonidentity elements of
/// the odd group in index order.
pub fn assemble_difference_set(f: &BuildingSetFamily, odd: &FinAbGroup) -> Result<ElementSet> {
    let want = (1usize << (f.m - 1)) + 1;
    if odd.order() != want || odd.factors().iter().any(|n| n % 2 == 0) {
        return Err(Error::InvalidArgument(format!(
            "odd group must have odd order {want}, got {}",
            odd.descriptor()
        )));
    }
    let report = verify_building_sets(f)?;
    if !report.verdict {
        return Err(Error::PreconditionViolation(format!(
            "family fails verification ({} violations)",
            report.violation_count
        )));
    }
    let whole = f.group.product(odd)?;
    let split = whole.sylow_split()?;
    let mut elems = Vec::new();
    for &x in f.n.elements() {
        elems.push(split.join(x, odd.identity()));
    }
    for (i, b) in f.blocks.iter().enumerate() {
        let h = Elem(i as u32 + 1);
        for &x in b.elements() {
            elems.push(split.join(x, h));
        }
    }
    Ok(ElementSet::new(&whole, elems))
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub family: BuildingSetFamily,
    /// the fiber of size `2^m`, a coset of `N`
    pub e0: Coset,
    /// odd-part element carrying `E_0`
    pub e0_label: Vec<u32>,
    pub fiber_sizes: Vec<usize>,
}

/// Splits a difference set in `K x H` into its fibers over the odd part.
pub fn decompose_difference_set(d: &ElementSet) -> Result<Decomposition> {
    let bad = |s: String| Error::NotMcFarlandShaped(s);
    let m = (1..=12u32)
        .find(|&m| (1usize << m) * ((1usize << m) + 1) == d.len())
        .ok_or_else(|| bad(format!("|D| = {} is not 2^m (2^m + 1)", d.len())))?;
    let (split, fibers) = crate::group_ring::fibers(d)?;
    if split.two.order() != 1 << (2 * m + 1) || split.odd.order() != (1 << (m - 1)) + 1 {
        return Err(bad(format!(
            "group {} does not have order 2^{} * {}",
            d.group().descriptor(),
            2 * m + 1,
            (1 << (m - 1)) + 1
        )));
    }
    split.two.require_two_group()?;
    let sizes: Vec<usize> = fibers.iter().map(ElementSet::len).collect();
    let small: Vec<usize> = (0..sizes.len()).filter(|&i| sizes[i] == 1 << m).collect();
    if small.len() != 1 {
        return Err(bad(format!("expected one fiber of size {}, fiber sizes {sizes:?}", 1 << m)));
    }
    let i0 = small[0];
    if let Some(j) = (0..sizes.len()).find(|&j| j != i0 && sizes[j] != 1 << (m + 1)) {
        return Err(bad(format!("fiber {j} has size {}, expected {}", sizes[j], 1 << (m + 1))));
    }
    let e0 = fibers[i0]
        .as_coset()
        .ok_or_else(|| bad("the fiber of size 2^m is not a coset".into()))?;
    let blocks: Vec<ElementSet> = fibers
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != i0)
        .map(|(_, f)| f.clone())
        .collect();
    let family = BuildingSetFamily {
        group: split.two.clone(),
        m,
        n: e0.subgroup.clone(),
        blocks,
        provenance: Some(Provenance {
            source: "decomposition".into(),
            sylow: None,
            field_poly: None,
            pairing: None,
            t: None,
        }),
    };
    let report = verify_building_sets(&family)?;
    if !report.verdict {
        return Err(bad(format!(
            "fibers fail the building-set conditions ({} violations)",
            report.violation_count
        )));
    }
    Ok(Decomposition {
        family,
        e0_label: split.odd.exps(Elem(i0 as u32)),
        e0,
        fiber_sizes: sizes,
    })
}

#[derive(Clone, Debug)]
pub struct QuotientFamily {
    pub family: BuildingSetFamily,
    /// largest multiplicity of any image point of any block
    pub max_multiplicity: usize,
    pub report: VerifyReport,
}

/// Pushes a family forward to `G2/H` for `H <= N`.
pub fn quotient_building_sets(f: &BuildingSetFamily, h: &Subgroup) -> Result<QuotientFamily> {
    f.group.check_same(h.group())?;
    if !h.is_subgroup_of(&f.n) {
        return Err(Error::InvalidSubgroup("H is not contained in N".into()));
    }
    let q = quotient(&f.group, h)?;
    let mut max_mult = 1;
    let mut blocks = Vec::new();
    for b in &f.blocks {
        let (img, mult) = q.project_set(b)?;
        max_mult = max_mult.max(mult);
        blocks.push(img);
    }
    let family = BuildingSetFamily {
        group: q.group.clone(),
        m: f.m,
        n: q.project_subgroup(&f.n)?,
        blocks,
        provenance: Some(Provenance {
            source: format!("quotient by a subgroup of order {}", h.order()),
            sylow: f.provenance.as_ref().and_then(|p| p.sylow),
            field_poly: f.provenance.as_ref().and_then(|p| p.field_poly),
            pairing: None,
            t: None,
        }),
    };
    let report = verify_building_sets(&family)?;
    Ok(QuotientFamily {
        family,
        max_multiplicity: max_mult,
        report,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumWitness {
    pub element: Vec<u32>,
    pub lhs: i64,
    pub rhs: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumIdentityReport {
    pub holds: bool,
    /// `log2 |N|`
    pub n: u32,
    pub identity_coefficient: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<SumWitness>,
}

/// Compares `sum_k E_k E_k^{(-1)}` with `2^{2m} + 2^{2m-n} (G - N)`.
pub fn sum_identity_check(f: &BuildingSetFamily) -> Result<SumIdentityReport> {
    let g = &f.group;
    let n_log = f.n.order().trailing_zeros();
    if !f.n.order().is_power_of_two() || n_log > 2 * f.m {
        return Err(Error::InvalidArgument(format!("|N| = {} does not fit m = {}", f.n.order(), f.m)));
    }
    let mut lhs = GroupRingElement::zero(g);
    for b in &f.blocks {
        let x = GroupRingElement::from_set(b);
        lhs = lhs.add(&convolve(&x, &involute_power(&x, -1))?)?;
    }
    let c = 1i64 << (2 * f.m - n_log);
    let mut rhs = GroupRingElement::whole(g)
        .sub(&GroupRingElement::from_set(&f.n.as_set()))?
        .scale(c);
    rhs = rhs.add(&GroupRingElement::scalar(g, 1 << (2 * f.m)))?;
    let witness = (0..g.order()).find(|&i| lhs.coeffs()[i] != rhs.coeffs()[i]).map(|i| SumWitness {
        element: g.exps(Elem(i as u32)),
        lhs: lhs.coeffs()[i],
        rhs: rhs.coeffs()[i],
    });
    Ok(SumIdentityReport {
        holds: witness.is_none(),
        n: n_log,
        identity_coefficient: lhs.coeffs()[0],
        witness,
    })
}

/// Off-identity coefficients of `E_i E_i^{(-1)}` equal to `|E_i|`, i.e.
/// nonidentity `x` with `x E_i = E_i`. Returns `(block, element)` pairs.
pub fn full_translate_coefficients(f: &BuildingSetFamily) -> Result<Vec<(usize, Vec<u32>)>> {
    let mut out = Vec::new();
    for (i, b) in f.blocks.iter().enumerate() {
        let x = GroupRingElement::from_set(b);
        let prod = convolve(&x, &involute_power(&x, -1))?;
        for (e, c) in prod.support().skip(1) {
            if c == b.len() as i64 && e != f.group.identity() {
                out.push((i, f.group.exps(e)));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SubgroupJson {
    pub generators: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyJson {
    pub group: String,
    pub m: u32,
    #[serde(rename = "N")]
    pub n: SubgroupJson,
    pub blocks: Vec<Vec<Vec<u32>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub provenance: Option<Provenance>,
}

impl BuildingSetFamily {
    pub fn to_json(&self) -> FamilyJson {
        FamilyJson {
            group: self.group.descriptor(),
            m: self.m,
            n: SubgroupJson {
                generators: self.n.generator_exps(),
            },
            blocks: self.blocks.iter().map(ElementSet::to_exps).collect(),
            provenance: self.provenance.clone(),
        }
    }

    pub fn from_json(j: &FamilyJson) -> Result<Self> {
        let group = FinAbGroup::parse(&j.group)?;
        let gens = j
            .n
            .generators
            .iter()
            .map(|t| group.elem(t))
            .collect::<Result<Vec<_>>>()?;
        let n = subgroup_generate(&group, &gens);
        let blocks = j
            .blocks
            .iter()
            .map(|b| {
                let s = ElementSet::from_exps(&group, b)?;
                if s.len() != b.len() {
                    return Err(Error::Format("block lists an element twice".into()));
                }
                Ok(s)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BuildingSetFamily {
            group,
            m: j.m,
            n,
            blocks,
            provenance: j.provenance.clone(),
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DifferenceSetJson {
    pub group: String,
    pub elements: Vec<Vec<u32>>,
}

impl DifferenceSetJson {
    pub fn from_set(d: &ElementSet) -> Self {
        DifferenceSetJson {
            group: d.group().descriptor(),
            elements: d.to_exps(),
        }
    }

    pub fn to_set(&self) -> Result<ElementSet> {
        let g = FinAbGroup::parse(&self.group)?;
        ElementSet::from_exps(&g, &self.elements)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::is_transversal;

    #[test]
    fn constructed_shapes() {
        let f = construct_building_sets(3, SylowType::Ea).unwrap();
        assert_eq!(f.group.factors(), &[2; 7]);
        assert_eq!(f.n.order(), 8);
        assert_eq!(f.blocks.len(), 4);
        assert!(f.blocks.iter().all(|b| b.len() == 16 && is_transversal(b, &f.n)));

        let f = construct_building_sets(3, SylowType::Z4).unwrap();
        assert_eq!(f.group.descriptor(), "Z4xZ2^5");
        assert!(f.blocks.iter().all(|b| b.len() == 16 && is_transversal(b, &f.n)));

        let f = construct_building_sets(2, SylowType::Ea).unwrap();
        assert_eq!((f.group.order(), f.blocks.len()), (32, 2));
        assert!(construct_building_sets(1, SylowType::Ea).is_err());
        assert!(construct_building_sets(6, SylowType::Ea).is_err());
    }

    #[test]
    fn constructions_verify() {
        for m in 2..=4 {
            for s in [SylowType::Ea, SylowType::Z4] {
                let f = construct_building_sets(m, s).unwrap();
                let r = verify_building_sets(&f).unwrap();
                assert!(r.verdict, "m={m} {s}: {:?}", r.violations);
            }
        }
    }

    #[test]
    fn z4_t_squares_into_first_member() {
        let c = construct_with_poly(3, SylowType::Z4, None).unwrap();
        let g = &c.family.group;
        let s = g.mul(c.t, c.t);
        assert!(s != g.identity() && c.members[1].contains(s));
        assert_eq!(g.order_of(c.t), 4);
    }

    #[test]
    fn perturbations_fail() {
        let f = construct_building_sets(3, SylowType::Ea).unwrap();
        // move one element into another N-coset
        let mut bad = f.clone();
        let b = &bad.blocks[0];
        let x = b.elements()[3];
        let y = (0..f.group.order() as u32)
            .map(Elem)
            .find(|&y| !b.contains(y) && f.n.coset_key(y) != f.n.coset_key(x))
            .unwrap();
        let mut els: Vec<Elem> = b.elements().iter().copied().filter(|&e| e != x).collect();
        els.push(y);
        bad.blocks[0] = ElementSet::new(&f.group, els);
        let r = verify_building_sets(&bad).unwrap();
        assert!(!r.verdict);
        assert!(r.violations.iter().any(|v| v.character.is_some()));

        let mut dup = f.clone();
        dup.blocks[1] = dup.blocks[0].clone();
        let r = verify_building_sets(&dup).unwrap();
        assert!(!r.verdict);
        assert!(r.violations.iter().any(|v| v.condition == "iii"));
    }

    #[test]
    fn assemble_and_decompose() {
        let f = construct_building_sets(3, SylowType::Z4).unwrap();
        let odd = FinAbGroup::new(&[5]).unwrap();
        let d = assemble_difference_set(&f, &odd).unwrap();
        assert_eq!((d.group().order(), d.len()), (640, 72));
        let dec = decompose_difference_set(&d).unwrap();
        assert_eq!(dec.family, f);
        let mut sizes = dec.fiber_sizes.clone();
        sizes.sort();
        assert_eq!(sizes, vec![8, 16, 16, 16, 16]);
        assert!(assemble_difference_set(&f, &FinAbGroup::new(&[3]).unwrap()).is_err());
    }

    #[test]
    fn sum_identity_and_perturbation() {
        let f = construct_building_sets(3, SylowType::Ea).unwrap();
        let r = sum_identity_check(&f).unwrap();
        assert!(r.holds);
        assert_eq!(r.identity_coefficient, 64);
        let mut dup = f.clone();
        dup.blocks[1] = dup.blocks[0].clone();
        let r = sum_identity_check(&dup).unwrap();
        assert!(!r.holds);
        assert!(r.witness.is_some());
    }

    #[test]
    fn quotient_by_frattini_of_n() {
        let f = construct_building_sets(3, SylowType::Z4).unwrap();
        let trivial = Subgroup::trivial(&f.group);
        let q = quotient_building_sets(&f, &trivial).unwrap();
        assert!(q.report.verdict);
        assert_eq!(q.family.group.order(), 128);

        let h = subgroup_generate(&f.group, &f.n.generators()[..1]);
        let q = quotient_building_sets(&f, &h).unwrap();
        assert!(q.report.verdict);
        assert_eq!(q.max_multiplicity, 1);
        assert!(q.family.blocks.iter().all(|b| b.len() == 16));
        assert_eq!(q.family.n.order(), 4);
        assert!(sum_identity_check(&q.family).unwrap().holds);

        let outside = subgroup_generate(&f.group, &[f.blocks[0].elements()[1]]);
        if !outside.is_subgroup_of(&f.n) {
            assert!(matches!(quotient_building_sets(&f, &outside), Err(Error::InvalidSubgroup(_))));
        }
    }

    #[test]
    fn json_round_trip() {
        let f = construct_building_sets(2, SylowType::Z4).unwrap();
        let s = serde_json::to_string(&f.to_json()).unwrap();
        let back = BuildingSetFamily::from_json(&serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(back, f);
    }
}
