//! Closed-form diameter bounds and the tabled diameter.

use crate::distance::table::distance_table;
use crate::error::{Error, Result};

/// Smallest `n` for which `⌊(2n-2)/3⌋` is proven to bound the diameter.
pub const ERIKSSON_MIN_N: usize = 9;

/// `(n+2)/2` for even `n`, `(n+3)/2` for odd `n`; defined for `n ≥ 3`.
pub fn lower_bound_diameter(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::out_of_range("n", n as i64, ">= 3"));
    }
    Ok(if n.is_multiple_of(2) { (n + 2) / 2 } else { (n + 3) / 2 })
}

/// `⌊(2n-2)/3⌋` without the range check.
pub fn eriksson_upper_bound_permissive(n: usize) -> usize {
    (2 * n).saturating_sub(2) / 3
}

/// `⌊(2n-2)/3⌋`, which bounds the diameter for `n ≥ 9`.
pub fn eriksson_upper_bound(n: usize) -> Result<usize> {
    if n < ERIKSSON_MIN_N {
        return Err(Error::out_of_range("n", n as i64, format!(">= {ERIKSSON_MIN_N}")));
    }
    Ok(eriksson_upper_bound_permissive(n))
}

/// The maximum distance over `Sym_n`, from the distance table.
pub fn exact_diameter(n: usize) -> Result<usize> {
    Ok(distance_table(n)?.diameter() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lower_bound_examples() {
        assert_eq!(lower_bound_diameter(10).unwrap(), 6);
        assert_eq!(lower_bound_diameter(13).unwrap(), 8);
        assert_eq!(lower_bound_diameter(4).unwrap(), 3);
        assert!(lower_bound_diameter(2).is_err());
    }

    #[test]
    fn upper_bound_examples() {
        assert_eq!(eriksson_upper_bound(9).unwrap(), 5);
        assert_eq!(eriksson_upper_bound(15).unwrap(), 9);
        assert_eq!(eriksson_upper_bound(12).unwrap(), 7);
        assert!(matches!(eriksson_upper_bound(8), Err(Error::OutOfRange { .. })));
        assert_eq!(eriksson_upper_bound_permissive(8), 4);
        assert_eq!(eriksson_upper_bound_permissive(1), 0);
    }

    #[test]
    fn diameters_of_small_tables() {
        assert_eq!(exact_diameter(1).unwrap(), 0);
        assert_eq!(exact_diameter(3).unwrap(), 2);
        assert_eq!(exact_diameter(4).unwrap(), 3);
        assert_eq!(exact_diameter(6).unwrap(), 4);
    }
}
