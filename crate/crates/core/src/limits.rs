/// Size caps guarding the exhaustive generators and counters.
///
/// Every cap is inclusive. The defaults keep each individual operation in the
/// sub-second to few-second range on a laptop.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest path length accepted by the path generator.
    pub max_path_len: usize,
    /// Largest length accepted by the full symmetric-group generator.
    pub max_full_perm_len: usize,
    /// Largest length accepted by the centrosymmetric generator.
    pub max_centrosymmetric_len: usize,
    /// Largest path length for which a memoized inverse table may be built.
    pub max_inverse_table_len: usize,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        max_path_len: 12,
        max_full_perm_len: 10,
        max_centrosymmetric_len: 13,
        max_inverse_table_len: 11,
    };

    /// One cap applied to every generator.
    pub fn uniform(max_n: usize) -> Limits {
        Limits {
            max_path_len: max_n,
            max_full_perm_len: max_n,
            max_centrosymmetric_len: max_n,
            max_inverse_table_len: max_n,
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::DEFAULT
    }
}
