//! Lexicographic (Lehmer) ranking of small permutations.

use crate::perm::Permutation;

/// Largest `n` whose factorial fits comfortably in a `u64` rank.
pub const MAX_RANK_N: usize = 20;

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Rank of 0-based images among all permutations of `0..len` in
/// lexicographic order.
pub fn rank_images(images: &[u8]) -> u64 {
    let n = images.len();
    debug_assert!(n <= MAX_RANK_N);
    let mut used: u32 = 0;
    let mut rank: u64 = 0;
    for &v in images {
        let below = (!used & ((1u32 << v) - 1)).count_ones() as u64;
        // Horner form of Σ c_x · (n-1-x)!
        rank = rank * (n as u64 - used.count_ones() as u64) + below;
        used |= 1 << v;
    }
    rank
}

/// Inverse of [`rank_images`]; writes the permutation into `out`.
pub fn unrank_images(mut rank: u64, out: &mut [u8]) {
    let n = out.len();
    debug_assert!(n <= MAX_RANK_N);
    // Lehmer digits, least significant last.
    let mut digits = [0u8; MAX_RANK_N];
    for x in (0..n).rev() {
        let base = (n - x) as u64;
        digits[x] = (rank % base) as u8;
        rank /= base;
    }
    let mut free: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    for x in 0..n {
        let mut d = digits[x];
        let mut bits = free;
        while d > 0 {
            bits &= bits - 1;
            d -= 1;
        }
        let v = bits.trailing_zeros();
        out[x] = v as u8;
        free &= !(1 << v);
    }
}

pub fn rank(pi: &Permutation) -> u64 {
    let images: Vec<u8> = pi.images().iter().map(|&v| v as u8).collect();
    rank_images(&images)
}

pub fn unrank(n: usize, rank: u64) -> Permutation {
    let mut out = vec![0u8; n];
    unrank_images(rank, &mut out);
    Permutation::from_images_unchecked(out.into_iter().map(usize::from).collect())
}
