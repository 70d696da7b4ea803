use std::process::ExitCode;

fn main() -> ExitCode {
    raytrace::cli::main_with_args(std::env::args_os())
}
