use clap::Parser;

use theta_hecke::cli::{execute, Cli};
use theta_hecke::{catch, install_quiet_hook};

fn main() {
    let cli = Cli::parse();
    install_quiet_hook();
    match catch(|| execute(cli)) {
        Ok(out) => {
            print!("{}", out.stdout);
            std::process::exit(out.code);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
