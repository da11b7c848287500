pub mod arith;
pub mod character;
pub mod derivations;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod liealg;
pub mod matrix;
pub mod pipeline;
pub mod poly;
pub mod repmod;
pub mod series;
