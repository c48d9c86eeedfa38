//! Symmetric special biserial algebras, their string complexes and
//! Auslander-Reiten rim towers, computed with exact linear algebra.

pub mod field;
pub mod linalg;
pub mod pathalg;
pub mod fixtures;
pub mod classify;
pub mod strings;
pub mod homalg;
pub mod arcomp;
pub mod io;
pub mod cli;
