//! Multivariate resultants of homogeneous polynomial systems, computed as the
//! quotient of two determinants built from a Bezoutian block and Sylvester
//! blocks.

pub mod bezoutian;
pub mod combinat;
pub mod linalg;
pub mod macaulay;
pub mod ring;
pub mod verify;
