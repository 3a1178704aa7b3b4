use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let json = polyabc_cli::wants_json(&argv);
    let (code, doc) = polyabc_cli::run_command(argv);
    if json {
        println!("{}", doc.to_json());
    } else {
        println!("{}", doc.to_text());
    }
    ExitCode::from(code as u8)
}
