//! Factor language of the substitution `a -> axa, x -> y, y -> z, z -> x`.
//!
//! The crate generates the words `tau^n(a)` and prefixes of their limit,
//! the one-sided fixed point; enumerates its factors by brute force;
//! evaluates the exact complexity function and right-special factor
//! classification and checks them against that enumeration; builds Rauzy
//! graphs; and generates the relators of Lysenok's presentation, whose
//! substitution `kappa` is the same map over `{a, b, c, d}`.

pub mod closed_form;
pub mod error;
pub mod factors;
pub mod presentation;
pub mod rauzy;
pub mod scan;
pub mod substitution;
pub mod word;

pub use closed_form::{
    complexity_delta, complexity_delta_formula, complexity_formula, render_complexity_table, right_special_formula,
    verify_range, ComplexityProfile, Construction, Regime, SpecialWordReport, TableFormat, VerificationReport,
};
pub use error::{Error, Result};
pub use factors::{
    bispecial_oracle, complexity_oracle, extension_records, extensions, factor_set, is_factor, left_special_oracle,
    right_special_oracle, sufficient_power, ExtensionRecord, FactorSet,
};
pub use presentation::{kappa, lysenok_relators, relator, tau_kappa_bridge, RelatorFamily};
pub use rauzy::{build_rauzy, RauzyGraph};
pub use substitution::{eta_prefix, tau, tau_n_a, tau_n_x, Capacity, FixedPointPrefix, Relabeling, Substitution};
pub use word::{Alphabet, Letter, LetterSet, Word};
