//! Smith normal form over the integers, tracking column operations.
//!
//! Used to present `Z^r / L` as a direct sum of cyclic groups, where `L`
//! is the row lattice of a relation matrix.

/// Result of reducing a relation matrix `A` to `P A Q = diag(d)`.
///
/// The map `x -> ((x Q)_i mod d_i)` is an isomorphism
/// `Z^r / rowspace(A) -> sum_i Z/d_i`.
pub(super) struct Smith {
    pub diag: Vec<i128>,
    pub q: Vec<Vec<i128>>,
}

pub(super) fn smith(mut a: Vec<Vec<i128>>, cols: usize) -> Smith {
    let rows = a.len();
    let mut q: Vec<Vec<i128>> = (0..cols)
        .map(|i| (0..cols).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut diag = vec![0i128; cols];

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = min_entry(&a, t, cols) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, &mut q, t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                let f = a[i][t] / a[t][t];
                if f != 0 {
                    for j in t..cols {
                        a[i][j] -= f * a[t][j];
                    }
                }
                if a[i][t] != 0 {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                let f = a[t][j] / a[t][t];
                if f != 0 {
                    add_col(&mut a, &mut q, j, t, -f);
                }
                if a[t][j] != 0 {
                    dirty = true;
                }
            }
            if dirty {
                let (pi, pj) = min_entry(&a, t, cols).expect("pivot row is nonzero");
                a.swap(t, pi);
                swap_cols(&mut a, &mut q, t, pj);
                continue;
            }
            // Pivot must divide the remaining block.
            let p = a[t][t];
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        a[t][j] += a[i][j];
                    }
                }
                None => break,
            }
        }
        if a[t][t] < 0 {
            for j in t..cols {
                a[t][j] = -a[t][j];
            }
        }
        diag[t] = a[t][t];
    }
    Smith { diag, q }
}

fn min_entry(a: &[Vec<i128>], t: usize, cols: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, i128)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, &v) in row.iter().enumerate().take(cols).skip(t) {
            if v != 0 && best.is_none_or(|(_, _, b)| v.abs() < b) {
                best = Some((i, j, v.abs()));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn swap_cols(a: &mut [Vec<i128>], q: &mut [Vec<i128>], x: usize, y: usize) {
    if x == y {
        return;
    }
    for row in a.iter_mut() {
        row.swap(x, y);
    }
    for row in q.iter_mut() {
        row.swap(x, y);
    }
}

/// column `dst += f * column src`
fn add_col(a: &mut [Vec<i128>], q: &mut [Vec<i128>], dst: usize, src: usize, f: i128) {
    for row in a.iter_mut() {
        row[dst] += f * row[src];
    }
    for row in q.iter_mut() {
        row[dst] += f * row[src];
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonalizes_small_lattice() {
        // Z4 x Z4 modulo <(2, 2)>  ~  Z4 x Z2
        let a = vec![vec![4, 0], vec![0, 4], vec![2, 2]];
        let s = smith(a, 2);
        let mut d: Vec<i128> = s.diag.clone();
        d.sort();
        assert_eq!(d, vec![2, 4]);
    }

    #[test]
    fn projection_kills_relations() {
        let a = vec![vec![4, 0, 0], vec![0, 2, 0], vec![0, 0, 6], vec![2, 1, 3]];
        let s = smith(a.clone(), 3);
        for row in &a {
            for (i, &d) in s.diag.iter().enumerate() {
                let v: i128 = (0..3).map(|k| row[k] * s.q[k][i]).sum();
                if d != 0 {
                    assert_eq!(v.rem_euclid(d), 0);
                }
            }
        }
        let order: i128 = s.diag.iter().product();
        assert_eq!(order, 4 * 2 * 6 / 2);
    }
}
