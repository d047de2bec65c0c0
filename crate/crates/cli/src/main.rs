use std::io::Write;

fn main() -> anyhow::Result<()> {
    let out = tauslice_cli::run_command(std::env::args_os());
    if out.code == 2 {
        eprint!("{}", out.text);
    } else {
        std::io::stdout().write_all(out.text.as_bytes())?;
    }
    std::process::exit(out.code);
}
