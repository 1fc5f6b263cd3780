//! Exact computation with fusion and modular categories through their
//! class-function calculus.
//!
//! Scalars are [`Cyclotomic`] numbers. A [`Category`] is validated
//! [`CategoryData`]; everything else (characters, conjugacy classes,
//! subcategories, gradings, centralizers) is computed from it on demand.
//!
//! ```
//! use fusioncat::{catalog_get, Cyclotomic};
//!
//! let fib = catalog_get("fibonacci").unwrap();
//! let conj = fib.conjugacy_data().unwrap();
//! assert_eq!(conj.sizes[1], fib.dim(1) * fib.dim(1));
//! assert_eq!(*fib.dim(1), -(Cyclotomic::zeta_pow(5, 2) + Cyclotomic::zeta_pow(5, 3)));
//! ```

pub mod category;
pub mod centralizer;
pub mod character;
pub mod check;
pub mod cyclotomic;
pub mod error;
pub mod lattice;
pub mod suite;

pub use category::{
    catalog_data, catalog_get, decode_value, encode_value, from_json_str, load, save, to_json_string, validate,
    verlinde_fusion, Category, CategoryData, FusionRing, Kind, ModularData, PivotalData, CATALOG_NAMES,
};
pub use centralizer::CentralizerResult;
pub use character::{ce_mul, identity_suite, CentralElement, ClassFunction, ClassSumProduct, ConjugacyData};
pub use check::{all_passed, Check, Status};
pub use cyclotomic::{format_approx, format_rational, CycloMatrix, Cyclotomic, Rational};
pub use error::{ArithmeticError, Error, Result};
pub use lattice::{FusionSubcategory, GradingData, MeetJoin, PrimeIndexReport, SubcatInvariants};
pub use suite::verify;
