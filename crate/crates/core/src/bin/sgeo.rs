use std::io::{self, Write};

fn main() {
    let stdin = io::stdin();
    let mut input = stdin.lock();
    let mut out = io::stdout().lock();
    let code = strong_geodetic::cli::run(std::env::args_os(), &mut input, &mut out, &mut io::stderr());
    let _ = out.flush();
    std::process::exit(code);
}
