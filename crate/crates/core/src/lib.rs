pub mod central;
pub mod check;
pub mod error;
pub mod linalg;
pub mod meataxe;
pub mod modules;
pub mod poly;
pub mod scalar;
pub mod series;
pub mod smodule;
pub mod symmetric;
pub mod tensor;
pub mod uh;
pub mod univariate;
pub mod wgen;
pub mod yangian;

pub use central::{core, CoreData};
pub use check::Check;
pub use error::{Error, Result};
pub use linalg::{Matrix, Span};
pub use meataxe::{ModuleType, Simplicity};
pub use modules::{build_v, Label, RootVector, SuperModule};
pub use poly::{Monomial, MultiPoly, MAX_VARS};
pub use scalar::GaussianRational;
pub use series::RationalSeries;
pub use smodule::SModuleSpec;
pub use tensor::{split_embed, FlipConvention, TensorElement};
pub use uh::UhElement;
pub use univariate::UniPoly;
pub use yangian::{GammaF, YGen, YModule, YangianImages};
