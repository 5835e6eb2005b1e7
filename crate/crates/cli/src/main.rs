use qag_cli::commands::{emit, run_args};

fn main() {
    std::process::exit(emit(&run_args(std::env::args_os())));
}
