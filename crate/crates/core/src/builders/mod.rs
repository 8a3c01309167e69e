//! Exact character tables of `S_n`, `A_n`, `SL_2(q)`, `PSL_2(q)` and `PGL_2(q)`.

mod alternating;
mod partition;
mod rank_one;
mod symmetric;

pub use alternating::{alt_classes, build_alt_table, restrict_sym_to_alt, AltClass};
pub use partition::{factorial, partitions, CycleType, Partition, PartitionParseError};
pub use rank_one::{build_pgl2_table, build_psl2_table, build_sl2_table, MAX_Q, MIN_Q};
pub use symmetric::{
    build_sym_table, character_name, mn_value, restrict_to_previous_sym, sym_classes,
    sym_values, young_perm_character, MAX_SYM_DEGREE,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error("{what} = {value} outside {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: u64,
        min: u64,
        max: u64,
    },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: u32, found: u32 },
}
