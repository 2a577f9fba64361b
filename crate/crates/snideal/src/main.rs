use std::process::ExitCode;

fn main() -> ExitCode {
    snideal::cli::main()
}
