//! File formats and the result cache.

pub mod cache;
pub mod complex_file;
pub mod ideal_file;

pub use cache::{cache_key, Cache, CacheDescriptor};
pub use complex_file::{parse_complex, print_complex};
pub use ideal_file::{parse_ideal, parse_polynomial, print_ideal, IdealFile, ParseOptions};
