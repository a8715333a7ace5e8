//! Text and JSON front end for `coxtype-core`: the datum grammar, report
//! records, generated classification tables and the cross-check of the
//! characterizations of Coxeter type.

pub mod check;
pub mod grammar;
pub mod records;
pub mod tables;
