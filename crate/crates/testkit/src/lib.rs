//! Ground truth for arbor-core: exhaustive oracles, generators built from the
//! constructive characterizations, and small-graph enumeration.

pub mod enumerate;
pub mod generate;
pub mod oracle;
pub mod random;

pub use generate::{gen_kl_pinch, gen_kv, gen_mader, gen_pinch_2k, Generated, PRNG_NAME};
