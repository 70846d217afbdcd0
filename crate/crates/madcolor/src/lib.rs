//! Exact toolkit for r-dynamic list coloring of graphs with bounded maximum
//! average degree: exact mad computation, exact and list chromatic solvers,
//! reducible-configuration matching, discharging ledgers, and constructive
//! colorings.

pub mod configs;
pub mod constructive;
pub mod discharging;
pub mod generators;
pub mod graph;
pub mod io;
pub mod mad;
pub mod rational;
pub mod solver;
