use std::io;

fn main() {
    let code = {
        let mut out = io::stdout().lock();
        let mut err = io::stderr().lock();
        hq_euler::cli::main_with_args(std::env::args_os(), &mut out, &mut err)
    };
    std::process::exit(code);
}
