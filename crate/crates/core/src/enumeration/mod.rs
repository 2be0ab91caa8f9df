//! Counting, radix-order ranking, smallest-word languages and decimation.

mod count;
mod decimate;
mod min_words;
mod profile;
mod system;

pub use count::{count_words_up_to, densities, density, CountTable};
pub use decimate::{decimate, decimate_with_budget};
pub use min_words::{min_words, min_words_with_budget, strip_first, DEFAULT_STATE_BUDGET};
pub use system::NumerationSystem;
