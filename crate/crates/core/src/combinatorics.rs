//! Lah and Stirling numbers, and set-partition enumeration.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Unsigned Lah number `L(n, k)`: partitions of `[n]` into `k` nonempty
/// linearly ordered blocks.
///
/// Recurrence `L(n, k) = (n - 1 + k) L(n - 1, k) + L(n - 1, k - 1)`.
pub fn lah(n: usize, k: usize) -> BigUint {
    triangle(n, k, |m, j| BigUint::from(m - 1 + j))
}

/// Unsigned Stirling number of the first kind: permutations of `[n]` with
/// `k` cycles. `s(n, k) = (n - 1) s(n - 1, k) + s(n - 1, k - 1)`.
pub fn stirling1(n: usize, k: usize) -> BigUint {
    triangle(n, k, |m, _| BigUint::from(m - 1))
}

/// Stirling number of the second kind: partitions of `[n]` into `k` blocks.
/// `S(n, k) = k S(n - 1, k) + S(n - 1, k - 1)`.
pub fn stirling2(n: usize, k: usize) -> BigUint {
    triangle(n, k, |_, j| BigUint::from(j))
}

/// Shared row recurrence `T(m, j) = w(m, j) T(m-1, j) + T(m-1, j-1)` with
/// `T(0, 0) = 1`.
fn triangle(n: usize, k: usize, weight: impl Fn(usize, usize) -> BigUint) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut row = vec![BigUint::zero(); n + 1];
    row[0] = BigUint::one();
    for m in 1..=n {
        for j in (1..=m.min(n)).rev() {
            let prev = core::mem::take(&mut row[j]);
            row[j] = weight(m, j) * prev + &row[j - 1];
        }
        row[0] = BigUint::zero();
    }
    row[k].clone()
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// All set partitions of `elements` into exactly `blocks` nonempty blocks.
///
/// Blocks come out ordered by their smallest element, and partitions in
/// restricted-growth-string order.
pub fn set_partitions<T: Copy>(elements: &[T], blocks: usize) -> Vec<Vec<Vec<T>>> {
    let mut out = Vec::new();
    let mut assignment = Vec::with_capacity(elements.len());
    rgs(elements.len(), blocks, 0, &mut assignment, &mut |a| {
        let mut parts: Vec<Vec<T>> = vec![Vec::new(); blocks];
        for (pos, &b) in a.iter().enumerate() {
            parts[b].push(elements[pos]);
        }
        out.push(parts);
    });
    out
}

fn rgs(len: usize, blocks: usize, used: usize, a: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if a.len() == len {
        if used == blocks {
            emit(a);
        }
        return;
    }
    // not enough positions left to open the remaining blocks
    if blocks - used > len - a.len() {
        return;
    }
    for b in 0..used {
        a.push(b);
        rgs(len, blocks, used, a, emit);
        a.pop();
    }
    if used < blocks {
        a.push(used);
        rgs(len, blocks, used + 1, a, emit);
        a.pop();
    }
}

/// All permutations of `items`, in lexicographic order of positions.
pub fn permutations<T: Copy>(items: &[T]) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut used = vec![false; items.len()];
    let mut cur = Vec::with_capacity(items.len());
    permute(items, &mut used, &mut cur, &mut out);
    out
}

fn permute<T: Copy>(items: &[T], used: &mut [bool], cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
    if cur.len() == items.len() {
        out.push(cur.clone());
        return;
    }
    for k in 0..items.len() {
        if !used[k] {
            used[k] = true;
            cur.push(items[k]);
            permute(items, used, cur, out);
            cur.pop();
            used[k] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn diagonals_are_one() {
        for n in 0..8 {
            assert_eq!(lah(n, n), u(1));
            assert_eq!(stirling1(n, n), u(1));
            assert_eq!(stirling2(n, n), u(1));
        }
    }

    #[test]
    fn known_values() {
        assert_eq!(lah(4, 2), u(36));
        assert_eq!(lah(4, 1), u(24));
        assert_eq!(lah(5, 2), u(240));
        assert_eq!(lah(3, 0), u(0));
        assert_eq!(lah(0, 0), u(1));
        assert_eq!(stirling1(4, 1), u(6));
        assert_eq!(stirling1(4, 2), u(11));
        assert_eq!(stirling2(4, 2), u(7));
        assert_eq!(stirling2(3, 2), u(3));
        assert_eq!(lah(3, 5), u(0));
    }

    #[test]
    fn partition_counts_match_stirling2() {
        let e: Vec<u8> = (1..=6).collect();
        for b in 0..=6 {
            assert_eq!(BigUint::from(set_partitions(&e, b).len()), stirling2(6, b));
        }
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(&[1, 2, 3, 4]).len(), 24);
        assert_eq!(permutations::<u8>(&[]).len(), 1);
    }
}
