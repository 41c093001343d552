//! Expression shell and benchmark harness for `symkern`.

pub mod bench;
pub mod lw;
pub mod parser;
pub mod repl;
pub mod session;

pub use bench::{bench_run, BenchRecord};
pub use parser::{parse, ParsedInput};
pub use session::Session;
