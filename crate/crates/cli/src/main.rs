use std::process::ExitCode;

fn main() -> ExitCode {
    dimagma::main_with_args(std::env::args_os())
}
