use crate::error::{Error, Result};

/// Parses `Z4^3`, `Z4xZ2^5xZ5` and similar into factor orders.
pub(super) fn parse(s: &str) -> Result<Vec<u32>> {
    let bad = |why: &str| Error::InvalidDescriptor(format!("{s:?}: {why}"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad("empty descriptor"));
    }
    let mut factors = Vec::new();
    for term in compact.split(['x', 'X', '*']) {
        let body = term
            .strip_prefix('Z')
            .or_else(|| term.strip_prefix('z'))
            .ok_or_else(|| bad("each factor must look like Z<n> or Z<n>^<k>"))?;
        let (n, k) = match body.split_once('^') {
            Some((n, k)) => (n, k.parse::<u32>().map_err(|_| bad("bad repetition count"))?),
            None => (body, 1),
        };
        let n: u32 = n.parse().map_err(|_| bad("bad factor order"))?;
        if n < 2 {
            return Err(bad("factor orders must be at least 2"));
        }
        if k == 0 {
            return Err(bad("repetition count must be positive"));
        }
        factors.extend(std::iter::repeat_n(n, k as usize));
    }
    Ok(factors)
}

pub(super) fn format(factors: &[u32]) -> String {
    if factors.is_empty() {
        return "Z1".to_string();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < factors.len() {
        let n = factors[i];
        let mut j = i;
        while j < factors.len() && factors[j] == n {
            j += 1;
        }
        if j - i == 1 {
            parts.push(format!("Z{n}"));
        } else {
            parts.push(format!("Z{n}^{}", j - i));
        }
        i = j;
    }
    parts.join("x")
}
