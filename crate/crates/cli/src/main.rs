use std::process::ExitCode;

fn main() -> ExitCode {
    let out = gx_cli::run(std::env::args().collect());
    if out.exit_code == 2 {
        eprint!("{}", out.report);
        if !out.report.ends_with('\n') {
            eprintln!();
        }
    } else {
        print!("{}", out.report);
    }
    ExitCode::from(out.exit_code as u8)
}
