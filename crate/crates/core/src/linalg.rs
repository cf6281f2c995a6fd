//! Row reduction over `Z_p`.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * b as u128 % p as u128) as u64;
        }
        b = (b as u128 * b as u128 % p as u128) as u64;
        e >>= 1;
    }
    r
}

/// Inverse of `a` modulo the prime `p`.
pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        None
    } else {
        Some(pow_mod(a, p - 2, p))
    }
}

/// Reduced row echelon form mod the prime `p`; returns the rank.
pub fn rref_mod_p(rows: &mut Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    for r in rows.iter_mut() {
        for v in r.iter_mut() {
            *v %= p;
        }
    }
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][col], p).expect("nonzero pivot");
        for v in rows[rank].iter_mut() {
            *v = *v * inv % p;
        }
        let pivot_row = rows[rank].clone();
        for (i, r) in rows.iter_mut().enumerate() {
            if i == rank || r[col] == 0 {
                continue;
            }
            let f = r[col];
            for (v, &q) in r.iter_mut().zip(&pivot_row) {
                *v = (*v + (p - f) * q) % p;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn rank_mod_p(rows: &[Vec<u64>], p: u64) -> usize {
    let mut m = rows.to_vec();
    rref_mod_p(&mut m, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        assert_eq!(rank_mod_p(&[vec![1, 2], vec![2, 4]], 5), 1);
        assert_eq!(rank_mod_p(&[vec![1, 2], vec![2, 4]], 3), 1);
        assert_eq!(rank_mod_p(&[vec![1, 1], vec![1, 4]], 3), 1);
        assert_eq!(rank_mod_p(&[vec![1, 1], vec![1, 4]], 5), 2);
        assert_eq!(rank_mod_p(&[], 5), 0);
    }

    #[test]
    fn inverses() {
        for p in [2, 3, 5, 7, 11] {
            for a in 1..p {
                assert_eq!(a * inv_mod(a, p).unwrap() % p, 1);
            }
        }
        assert!(is_prime(5) && !is_prime(9) && !is_prime(1));
    }
}
