//! Dense-graph splitting with exact rational arithmetic, together with
//! brute-force minor containment and extremal-function tooling for small
//! graphs.
//!
//! * [`graph`]: simple graphs, family constructors, text format.
//! * [`fractional`]: points of `[0,1]^V`, the potentials and balance test.
//! * [`splitter`]: the constructive two-part split with an audit trace.
//! * [`minor`]: exact minor containment, circumference, disjoint cycles.
//! * [`extremal`]: `ex_m(n, H)` tables, lower-bound constructions, probes.
//! * [`cli`]: the command-line front end.

pub mod fractional;
pub mod cli;
pub mod extremal;
pub mod graph;
pub mod minor;
pub mod splitter;
