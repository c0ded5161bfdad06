/// Resource bounds shared by every exhaustive construction.
///
/// Exceeding a bound yields [`crate::Error::ResourceLimit`] instead of an
/// unbounded search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest lattice size accepted by `enumerate_lattices`.
    pub enum_size: usize,
    /// Maximum number of sup-maps a hom enumeration may produce.
    pub hom_maps: usize,
    /// Largest carrier that may be materialized with full join/meet tables.
    pub table_elements: usize,
    /// Largest carrier for the unitless anti-isomorphism search.
    pub search_carrier: usize,
    /// Largest universe for the relational Frobenius search.
    pub rel_size: usize,
    /// Largest lattice for the brute-force totally-below relation.
    pub totally_below_size: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enum_size: 7,
            hom_maps: 100_000,
            table_elements: 4096,
            search_carrier: 24,
            rel_size: 8,
            totally_below_size: 20,
        }
    }
}
