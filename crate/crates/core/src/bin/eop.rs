use std::io::{self, Write};

fn main() {
    let stdin = io::stdin();
    let mut input = stdin.lock();
    let mut out = io::BufWriter::new(io::stdout().lock());
    let code =
        eop_core::cli::main_with(std::env::args_os(), &mut input, &mut out, &mut io::stderr());
    let _ = out.flush();
    drop(out);
    std::process::exit(code);
}
