//! Enumeration of normalized transversals with the half-modulus property.
//!
//! A transversal `E` of `N` containing `1` is built up through a chain
//! `N = M_0 > M_1 > ... > M_r = 1` of index-2 steps. At level `j` each
//! coset representative is known modulo `M_j`; moving to `M_{j+1}` gives
//! every representative two lifts. The image of a solution in `G/M_j` is a
//! solution there, and its sums under characters trivial on `M_j` are the
//! sums of `E` itself, so checking at each level only the characters that
//! become visible there loses nothing.

use crate::characters::{CycloTwo, Gaussian};
use crate::error::{Error, Result};
use crate::group::{two_group_chain, Elem, ElementSet, FinAbGroup, Subgroup};

#[derive(Clone, Debug)]
pub struct LiftOutcome {
    pub solutions: Vec<ElementSet>,
    /// partial and complete assignments whose new characters were checked
    pub nodes_checked: u64,
}

/// Exact phase table `phase[c][g]` in units of `1/L`.
struct PhaseTable {
    order: usize,
    l: u32,
    phases: Vec<u8>,
}

impl PhaseTable {
    fn new(g: &FinAbGroup) -> Self {
        let n = g.order();
        let l = g.exponent();
        let ex: Vec<Vec<u32>> = g.elements().map(|x| g.exps(x)).collect();
        let mut phases = vec![0u8; n * n];
        for c in 0..n {
            for x in 0..n {
                let mut p = 0u32;
                for j in 0..g.rank() {
                    p += ex[c][j] * ex[x][j] * (l / g.factors()[j]);
                }
                phases[c * n + x] = (p % l) as u8;
            }
        }
        PhaseTable { order: n, l, phases }
    }

    #[inline]
    fn get(&self, c: usize, x: Elem) -> u32 {
        self.phases[c * self.order + x.idx()] as u32
    }

    /// `|chi_c(S)|^2`, `None` if irrational.
    fn norm_sq(&self, c: usize, set: &[Elem]) -> Option<i64> {
        if self.l <= 4 {
            let q = 4 / self.l;
            let mut cnt = [0i64; 4];
            for &x in set {
                cnt[(self.get(c, x) * q) as usize % 4] += 1;
            }
            Some(Gaussian::new(cnt[0] - cnt[2], cnt[1] - cnt[3]).norm_sqr())
        } else {
            let mut v = CycloTwo::zero(self.l);
            for &x in set {
                v.add_root(self.get(c, x));
            }
            v.mul(&v.conj()).as_integer()
        }
    }
}

fn coset_reps(n: &Subgroup) -> Vec<Elem> {
    let g = n.group();
    let mut seen = vec![false; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if !seen[x.idx()] {
            reps.push(x);
            for &y in n.elements() {
                seen[g.mul(x, y).idx()] = true;
            }
        }
    }
    reps
}

fn half_modulus_ok(t: &PhaseTable, c: usize, set: &[Elem], target: i64) -> bool {
    matches!(t.norm_sq(c, set), Some(x) if x == 0 || x == target)
}

/// All transversals `E` of `N` with `1 in E` and `|chi(E)| in {|E|/2, 0}`
/// for every nonprincipal `chi`.
pub fn half_modulus_transversals(n: &Subgroup) -> Result<LiftOutcome> {
    let g = n.group().clone();
    g.require_two_group()?;
    let k = n.index();
    if k > 24 {
        return Err(Error::OutOfRange(format!("{k} cosets is beyond the enumerator's reach")));
    }
    let table = PhaseTable::new(&g);
    let target = (k * k / 4) as i64;
    let odd_size = k % 2 == 1;

    // M_0 = N down to M_r = 1
    let mut chain = two_group_chain(n)?;
    chain.reverse();
    let r = chain.len() - 1;
    let steps: Vec<Elem> = (1..=r)
        .map(|j| {
            *chain[j - 1]
                .elements()
                .iter()
                .find(|&&x| !chain[j].contains(x))
                .expect("index-2 step")
        })
        .collect();
    // characters by the first level at which they become visible
    let mut level_chars: Vec<Vec<usize>> = vec![Vec::new(); r + 1];
    for c in 1..g.order() {
        let trivial_on = |m: &Subgroup| m.generators().iter().all(|&x| table.get(c, x) == 0);
        if trivial_on(&chain[0]) {
            level_chars[0].push(c);
            continue;
        }
        let j = (1..=r).find(|&j| trivial_on(&chain[j])).expect("trivial on 1");
        level_chars[j].push(c);
    }

    let mut out = LiftOutcome {
        solutions: Vec::new(),
        nodes_checked: 0,
    };
    let reps = coset_reps(n);
    out.nodes_checked += 1;
    if odd_size || !level_chars[0].iter().all(|&c| half_modulus_ok(&table, c, &reps, target)) {
        // the base level is the whole quotient, so this only fails in degenerate cases
        return Ok(out);
    }
    if r == 0 {
        out.solutions.push(ElementSet::new(&g, reps));
        return Ok(out);
    }

    let mut stack: Vec<(usize, Vec<Elem>)> = vec![(1, reps)];
    while let Some((j, cur)) = stack.pop() {
        let u = steps[j - 1];
        let children = if table.l <= 4 {
            expand_split(&g, &table, &cur, u, &level_chars[j], target)
        } else {
            expand_plain(&g, &table, &cur, u, &level_chars[j], target)
        };
        out.nodes_checked += 1u64 << (k - 1);
        if j == r {
            out.solutions.extend(children.into_iter().map(|s| ElementSet::new(&g, s)));
        } else {
            stack.extend(children.into_iter().map(|s| (j + 1, s)));
        }
    }
    out.solutions.sort_by(|a, b| a.elements().cmp(b.elements()));
    Ok(out)
}

/// Every lift of `cur` by `u` (the first element kept) that passes the
/// characters in `chars`.
fn expand_plain(
    g: &FinAbGroup,
    table: &PhaseTable,
    cur: &[Elem],
    u: Elem,
    chars: &[usize],
    target: i64,
) -> Vec<Vec<Elem>> {
    let k = cur.len();
    let mut buf = cur.to_vec();
    let mut children = Vec::new();
    for mask in 0u32..(1 << (k - 1)) {
        for i in 1..k {
            buf[i] = if mask >> (i - 1) & 1 == 1 { g.mul(cur[i], u) } else { cur[i] };
        }
        if chars.iter().all(|&c| half_modulus_ok(table, c, &buf, target)) {
            children.push(buf.clone());
        }
    }
    children
}

/// Same result as [`expand_plain`] for exponent dividing 4: the lift bits
/// are split into a low and a high half, partial sums are tabulated per
/// half, and the halves are joined on the first character's value.
fn expand_split(
    g: &FinAbGroup,
    table: &PhaseTable,
    cur: &[Elem],
    u: Elem,
    chars: &[usize],
    target: i64,
) -> Vec<Vec<Elem>> {
    let k = cur.len();
    if chars.is_empty() || k < 3 {
        return expand_plain(g, table, cur, u, chars, target);
    }
    let q = 4 / table.l;
    let lifted: Vec<Elem> = cur.iter().map(|&x| g.mul(x, u)).collect();
    let root = |c: usize, x: Elem| -> (i32, i32) {
        match (table.get(c, x) * q) % 4 {
            0 => (1, 0),
            1 => (0, 1),
            2 => (-1, 0),
            _ => (0, -1),
        }
    };
    let lo_bits = (k - 1) / 2;
    let hi_bits = k - 1 - lo_bits;
    // sums[c][mask] over the elements a half controls, one bit at a time
    let half_sums = |c: usize, first: usize, bits: usize, with_base: bool| -> Vec<(i32, i32)> {
        let mut s = vec![(0, 0); 1 << bits];
        let mut base = if with_base { root(c, cur[0]) } else { (0, 0) };
        let mut delta = Vec::with_capacity(bits);
        for t in 0..bits {
            let (r0, r1) = (root(c, cur[first + t]), root(c, lifted[first + t]));
            base.0 += r0.0;
            base.1 += r0.1;
            delta.push((r1.0 - r0.0, r1.1 - r0.1));
        }
        s[0] = base;
        for mask in 1usize..1 << bits {
            let t = mask.trailing_zeros() as usize;
            let prev = s[mask & (mask - 1)];
            s[mask] = (prev.0 + delta[t].0, prev.1 + delta[t].1);
        }
        s
    };
    // tables are built on first use; most pairs fail on the first few characters
    let mut tables: Vec<Option<(Vec<(i32, i32)>, Vec<(i32, i32)>)>> = vec![None; chars.len()];
    let lo0 = half_sums(chars[0], 1, lo_bits, true);
    let hi0 = half_sums(chars[0], 1 + lo_bits, hi_bits, false);
    let mut by_value: Vec<((i32, i32), u32)> = hi0.iter().enumerate().map(|(m, &v)| (v, m as u32)).collect();
    by_value.sort_unstable();
    let r = (target as f64).sqrt() as i32 + 1;
    let mut zs = vec![(0, 0)];
    for a in -r..=r {
        for b in -r..=r {
            if (a * a + b * b) as i64 == target && target != 0 {
                zs.push((a, b));
            }
        }
    }
    let ok = |s: (i32, i32)| {
        let n = (s.0 as i64).pow(2) + (s.1 as i64).pow(2);
        n == 0 || n == target
    };
    let mut masks = Vec::new();
    for (lm, &a0) in lo0.iter().enumerate() {
        for &z in &zs {
            let want = (z.0 - a0.0, z.1 - a0.1);
            let from = by_value.partition_point(|e| e.0 < want);
            for &(v, hm) in &by_value[from..] {
                if v != want {
                    break;
                }
                let mut good = true;
                for t in 1..chars.len() {
                    let (lo, hi) = tables[t].get_or_insert_with(|| {
                        (half_sums(chars[t], 1, lo_bits, true), half_sums(chars[t], 1 + lo_bits, hi_bits, false))
                    });
                    let (a, b) = (lo[lm], hi[hm as usize]);
                    if !ok((a.0 + b.0, a.1 + b.1)) {
                        good = false;
                        break;
                    }
                }
                if good {
                    masks.push((hm << lo_bits) | lm as u32);
                }
            }
        }
    }
    masks.sort_unstable();
    masks
        .into_iter()
        .map(|mask| {
            (0..k)
                .map(|i| if i > 0 && mask >> (i - 1) & 1 == 1 { lifted[i] } else { cur[i] })
                .collect()
        })
        .collect()
}

/// Same contract as [`half_modulus_transversals`], by listing every
/// normalized transversal. Used to validate the lifting search.
pub fn brute_force_transversals(n: &Subgroup) -> Result<LiftOutcome> {
    let g = n.group().clone();
    g.require_two_group()?;
    let k = n.index();
    let total = (n.order() as u64).checked_pow(k as u32 - 1);
    if total.is_none_or(|t| t > 50_000_000) {
        return Err(Error::OutOfRange("too many transversals to list".into()));
    }
    let table = PhaseTable::new(&g);
    let target = (k * k / 4) as i64;
    let reps = coset_reps(n);
    let mut out = LiftOutcome {
        solutions: Vec::new(),
        nodes_checked: 0,
    };
    let mut digits = vec![0usize; k];
    let mut set = vec![Elem(0); k];
    loop {
        for i in 0..k {
            set[i] = if i == 0 { reps[0] } else { g.mul(reps[i], n.elements()[digits[i]]) };
        }
        out.nodes_checked += 1;
        if k.is_multiple_of(2) && (1..g.order()).all(|c| half_modulus_ok(&table, c, &set, target)) {
            out.solutions.push(ElementSet::new(&g, set.clone()));
        }
        let mut i = 1;
        while i < k {
            digits[i] += 1;
            if digits[i] < n.order() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        if i >= k {
            break;
        }
    }
    out.solutions.sort_by(|a, b| a.elements().cmp(b.elements()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::subgroups_of_order;
    use crate::transversal::has_half_modulus;

    #[test]
    fn lifting_agrees_with_brute_force() {
        for f in [&[4, 2, 2][..], &[4, 4], &[8, 2], &[2, 2, 2, 2], &[4, 2, 2, 2]] {
            let g = FinAbGroup::new(f).unwrap();
            for idx in [2usize, 4] {
                for n in subgroups_of_order(&g, g.order() / idx, None) {
                    let a = half_modulus_transversals(&n).unwrap();
                    let b = brute_force_transversals(&n).unwrap();
                    assert_eq!(a.solutions, b.solutions, "{f:?} N={:?}", n.elements());
                    for s in &a.solutions {
                        assert!(has_half_modulus(s).unwrap());
                        assert!(s.contains(g.identity()));
                    }
                }
            }
        }
    }

    #[test]
    fn trivial_n_gives_the_whole_quotient() {
        let g = FinAbGroup::new(&[2, 2]).unwrap();
        let n = Subgroup::trivial(&g);
        let r = half_modulus_transversals(&n).unwrap();
        // the whole group has all nonprincipal sums 0
        assert_eq!(r.solutions.len(), 1);
    }
}
