//! Exact calculus of Weil-Deligne representations.
//!
//! * [`wd`]: symbolic Frobenius-semisimple representations as multisets of `Sp_s(X)`.
//! * [`matrix_wd`]: explicit `(phi, N)` pairs over the rationals with the
//!   multiplicative Jordan decomposition and conversion to the symbolic form.
//! * [`purity`]: weight filtrations, purity verdicts, primitive decompositions,
//!   reconstruction of the monodromy operator, summands and filtration splitting.
//! * [`segments`]: Iwahori-spherical representations of `GL_n` given by segments,
//!   their Weil-Deligne parameters, Iwahori dimensions, `Red^(h)` and strata classes.
//! * [`bruhat`]: brute-force double coset counts over small finite fields.
//! * [`specseq`]: the `E_1` page of the weight spectral sequence and its abutment.
//! * [`verify`]: the verification sweeps behind `wdcalc verify`.
//! * [`cli`]: the `wdcalc` command line front end.

pub mod bruhat;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod matrix_wd;
pub mod purity;
pub mod rational;
pub mod segments;
pub mod specseq;
pub mod verify;
pub mod wd;

pub use error::{Error, Result};
pub use linalg::{Poly, RatMatrix};
pub use matrix_wd::MatrixWD;
pub use rational::Q;
pub use wd::{AtomRep, IndecompWD, ResidueCard, SymbolicWD, VirtualWD, WeightProfile};
