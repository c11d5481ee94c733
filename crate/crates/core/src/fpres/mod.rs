//! Finitely presented groups: words, presentations, Tietze simplification
//! with generator tracking, copower and Peiffer relators, and Todd–Coxeter
//! coset enumeration realizing finite presentations as permutation groups.

mod present;
mod presentation;
mod tietze;
mod todd_coxeter;
mod word;

pub use present::{copower_presentation, peiffer_relators, presentation_of, GroupWords};
pub use presentation::{format_word, parse_word, Presentation};
pub use tietze::{tietze_simplify, TietzeTrace};
pub use todd_coxeter::{evaluate_word, todd_coxeter, CosetTable, DEFAULT_MAX_COSETS};
pub use word::{Letter, Word};
