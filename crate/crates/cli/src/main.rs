use std::process::ExitCode;

fn main() -> ExitCode {
    geocalc_cli::main_impl()
}
