//! Runs every code block of the guide in `book/` as a doctest.
//!
//! mdbook cannot test snippets against workspace crates on its own, so each
//! chapter is attached to a module here and `cargo test --doc` does the
//! work. One module per chapter keeps failures attributable.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/pell.md")]
pub mod pell {}

#[doc = include_str!("../../../book/src/lattice.md")]
pub mod lattice {}

#[doc = include_str!("../../../book/src/blowup.md")]
pub mod blowup {}

#[doc = include_str!("../../../book/src/linkage.md")]
pub mod linkage {}

#[doc = include_str!("../../../book/src/catalogs.md")]
pub mod catalogs {}

#[doc = include_str!("../../../book/src/verdicts.md")]
pub mod verdicts {}
