use std::process::ExitCode;

fn main() -> ExitCode {
    sphere_sets::cli::main_entry()
}
