//! Mixed-radix tuple indexing shared by the table-based structures.

/// All tuples with `t[i] < sizes[i]`, in row-major order (last coordinate fastest).
pub fn tuples(sizes: &[usize]) -> Vec<Vec<usize>> {
    let total: usize = sizes.iter().product();
    let mut out = Vec::with_capacity(total);
    if total == 0 {
        return out;
    }
    let mut cur = vec![0; sizes.len()];
    loop {
        out.push(cur.clone());
        if !advance(&mut cur, sizes) {
            return out;
        }
    }
}

/// Steps `cur` to the next tuple in row-major order; returns `false` after the last one.
pub fn advance(cur: &mut [usize], sizes: &[usize]) -> bool {
    for i in (0..cur.len()).rev() {
        cur[i] += 1;
        if cur[i] < sizes[i] {
            return true;
        }
        cur[i] = 0;
    }
    false
}

/// Row-major index of `t` among tuples with the given coordinate sizes.
pub fn encode(t: &[usize], sizes: &[usize]) -> usize {
    t.iter().zip(sizes).fold(0, |acc, (&x, &s)| acc * s + x)
}

/// Inverse of [`encode`].
pub fn decode(mut idx: usize, sizes: &[usize]) -> Vec<usize> {
    let mut t = vec![0; sizes.len()];
    for i in (0..sizes.len()).rev() {
        t[i] = idx % sizes[i];
        idx /= sizes[i];
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples_round_trip() {
        let sizes = [2, 3, 1];
        let all = tuples(&sizes);
        assert_eq!(all.len(), 6);
        for (i, t) in all.iter().enumerate() {
            assert_eq!(encode(t, &sizes), i);
            assert_eq!(&decode(i, &sizes), t);
        }
        assert_eq!(tuples(&[]), vec![Vec::<usize>::new()]);
        assert!(tuples(&[2, 0]).is_empty());
    }
}
