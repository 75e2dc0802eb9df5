use std::process::ExitCode;

fn main() -> ExitCode {
    match lattice_building::cli::run(std::env::args_os()) {
        Ok(doc) => {
            print!("{doc}");
            ExitCode::SUCCESS
        }
        Err(msg) => {
            eprintln!("{}", msg.trim_end());
            ExitCode::from(2)
        }
    }
}
