//! Published values of `sz(n)`, used as reference data by the reports
//! and as the `1..=186` table behind the splitting and density bounds.

use crate::table::{SzEntry, SzTable};

/// Exact values `sz(1), ..., sz(186)` (index `n - 1`).
pub const SZ_EXACT: [u64; 186] = [
    1, 2, 2, 3, 4, 4, 4, 4, 5, 5, 6, 6, 7, 8, 8, 8, 8, 8, 8, 9,
    9, 9, 9, 10, 10, 11, 11, 11, 11, 12, 12, 13, 13, 13, 13, 14, 14, 14, 14, 15,
    16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 17, 17, 17, 18, 18, 18, 18, 19, 19, 19,
    19, 19, 20, 20, 20, 20, 20, 20, 20, 20, 21, 21, 21, 22, 22, 22, 22, 22, 22, 22,
    22, 23, 23, 24, 24, 24, 24, 24, 24, 24, 24, 25, 25, 25, 26, 26, 26, 26, 26, 27,
    27, 27, 27, 28, 28, 28, 28, 28, 28, 28, 29, 29, 29, 30, 30, 30, 30, 30, 30, 30,
    31, 32, 32, 32, 32, 32, 32, 32, 32, 32, 32, 32, 32, 32, 32, 32, 33, 33, 33, 33,
    33, 33, 33, 33, 34, 34, 34, 34, 34, 35, 35, 35, 35, 35, 35, 35, 36, 36, 36, 36,
    36, 36, 37, 37, 38, 38, 38, 38, 39, 39, 39, 39, 39, 40, 40, 40, 40, 40, 40, 40,
    40, 40, 40, 40, 40, 40,
];

/// Published `(n, lower, upper)` brackets for `187 <= n <= 250`.
pub const SZ_BRACKETS: [(u64, u64, u64); 64] = [
    (187, 40, 41),
    (188, 40, 42),
    (189, 40, 42),
    (190, 40, 43),
    (191, 40, 44),
    (192, 40, 44),
    (193, 40, 44),
    (194, 41, 44),
    (195, 41, 45),
    (196, 41, 45),
    (197, 41, 46),
    (198, 41, 46),
    (199, 41, 47),
    (200, 41, 47),
    (201, 41, 48),
    (202, 41, 48),
    (203, 41, 48),
    (204, 42, 48),
    (205, 42, 48),
    (206, 42, 49),
    (207, 42, 49),
    (208, 42, 49),
    (209, 43, 49),
    (210, 43, 49),
    (211, 43, 50),
    (212, 43, 50),
    (213, 43, 51),
    (214, 43, 51),
    (215, 44, 51),
    (216, 44, 51),
    (217, 44, 51),
    (218, 44, 51),
    (219, 44, 51),
    (220, 44, 52),
    (221, 44, 52),
    (222, 44, 52),
    (223, 44, 53),
    (224, 44, 53),
    (225, 44, 54),
    (226, 44, 54),
    (227, 45, 55),
    (228, 45, 55),
    (229, 45, 55),
    (230, 45, 56),
    (231, 45, 56),
    (232, 45, 56),
    (233, 46, 56),
    (234, 46, 56),
    (235, 46, 56),
    (236, 46, 56),
    (237, 46, 57),
    (238, 46, 57),
    (239, 47, 57),
    (240, 47, 58),
    (241, 47, 58),
    (242, 47, 58),
    (243, 47, 58),
    (244, 47, 58),
    (245, 47, 58),
    (246, 47, 59),
    (247, 48, 59),
    (248, 48, 59),
    (249, 48, 60),
    (250, 48, 60),
];

/// Table with the exact values for `1..=186` and the brackets for
/// `187..=250`, already normalized.
pub fn known_table() -> SzTable {
    let mut t = SzTable::from_exact(&SZ_EXACT, "published exact");
    for &(n, lo, hi) in SZ_BRACKETS.iter() {
        t.set(SzEntry::bounded(n, lo, hi, "published lower", "published upper"));
    }
    t.normalize();
    t
}

/// Exact published value, if `n` is in `1..=186`.
pub fn sz_exact(n: u64) -> Option<u64> {
    (1..=186).contains(&n).then(|| SZ_EXACT[n as usize - 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_is_consistent() {
        let t = known_table();
        assert_eq!(t.check(), Ok(()));
        assert_eq!(t.exact_prefix(), 186);
        assert_eq!(sz_exact(100), Some(27));
        assert_eq!(t.lower(204), Some(42));
        for w in SZ_EXACT.windows(2) {
            assert!(w[1] == w[0] || w[1] == w[0] + 1);
        }
    }
}
