//! Exact computer algebra for the Koszul isomorphism between the enveloping
//! algebra `U(gl(n))` and the polynomial algebra `Z[M_{n,n}]`.
//!
//! * [`tableau`]: partitions, Young tableaux, standard/costandard enumerations.
//! * [`poly`]: sparse integer polynomials in the entries `(i|j)`, bitableaux and polarizations.
//! * [`uea`]: `U(gl(n))` in PBW normal form.
//! * [`koszul`]: the Koszul map and its inverse.
//! * [`capelli`]: column Capelli bitableaux, their Laplace expansions and central elements.
//! * [`oracle`]: superpolarizations on an auxiliary supersymmetric algebra, used
//!   as an independent check of the Capelli constructions.
//! * [`verify`]: named verification suites.

pub mod capelli;
pub mod error;
pub mod koszul;
pub mod oracle;
pub mod perm;
pub mod poly;
pub mod rank;
pub mod tableau;
pub mod uea;
pub mod verify;

pub use error::{Error, Result};
pub use poly::{Monomial, Poly, Var};
pub use tableau::{Letter, Partition, Tableau};
pub use uea::{Generator, PbwMonomial, UeaElement};
