use std::io;

fn main() {
    let code = sl2_crystal::cli::run(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(code);
}
