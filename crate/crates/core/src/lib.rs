//! Exact computer algebra for projective Schur Q-functions and the
//! radial-part differential operators that have them as eigenfunctions.

pub mod error;
pub mod laplace;
pub mod linalg;
pub mod partition;
pub mod pfaffian;
pub mod poly;
pub mod qsym;
pub mod ratfunc;
pub mod rational;
pub mod spectra;
pub mod verify;

pub use error::{AlgebraError, OperatorError, SymError};
pub use laplace::Operator;
pub use partition::{OddCycleType, StrictPartition};
pub use poly::{Assign, Monomial, Polynomial};
pub use ratfunc::{FactorId, RationalFunction};
pub use rational::Rational;
