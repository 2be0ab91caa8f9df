//! Text formats: polynomials, automata and bundle manifests.

mod dfa_text;
mod manifest;
mod poly;

pub use dfa_text::{parse_dfa, read_dfa, render_dfa, write_dfa};
pub use manifest::{load_bundle, save_bundle, LoadedBundle, Manifest, RECOGNIZER_FILE, SYSTEM_FILE};
pub use poly::parse_polynomial;
