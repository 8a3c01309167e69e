//! Exact character tables, McKay graphs and verification suites for
//! diameter bounds of finite (quasi-)simple groups.

pub mod bounds;
pub mod builders;
pub mod chartable;
pub mod exactnum;
pub mod mckay;
