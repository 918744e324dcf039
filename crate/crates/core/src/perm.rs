//! Permutations of `0..k` with their signs.

/// Every permutation of `0..k` in lexicographic order, paired with its sign (±1).
pub fn permutations(k: usize) -> Vec<(Vec<usize>, i8)> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    let mut used = vec![false; k];
    fn go(k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i8)>) {
        if cur.len() == k {
            out.push((cur.clone(), sign(cur)));
            return;
        }
        for x in 0..k {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                go(k, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    go(k, &mut cur, &mut used, &mut out);
    out
}

/// Sign of a permutation given in one-line notation, from its inversion count.
pub fn sign(perm: &[usize]) -> i8 {
    let inversions = (0..perm.len())
        .flat_map(|a| (a + 1..perm.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| perm[a] > perm[b])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `(-1)^{C(h,2)}`.
pub fn binomial_sign(h: usize) -> i8 {
    if (h * h.saturating_sub(1) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_signs() {
        assert_eq!(permutations(0), vec![(vec![], 1)]);
        let p3 = permutations(3);
        assert_eq!(p3.len(), 6);
        assert_eq!(p3.iter().map(|(_, s)| *s as i32).sum::<i32>(), 0);
        assert_eq!(sign(&[1, 0, 2]), -1);
        assert_eq!(sign(&[1, 2, 0]), 1);
        assert_eq!(
            (0..6).map(binomial_sign).collect::<Vec<_>>(),
            [1, 1, -1, -1, 1, 1]
        );
    }
}
