use std::io;
use std::process::ExitCode;

use bernlab_core::generators::BernoulliCache;

fn main() -> ExitCode {
    let mut cache = BernoulliCache::new();
    let code = bernlab::cli::run(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock(), &mut cache);
    ExitCode::from(code as u8)
}
