//! `hopfforge` — command-line front end. Subcommands are added alongside
//! the library modules they expose; run with `--help` for the current set.

fn main() -> anyhow::Result<()> {
    eprintln!("hopfforge: command set under construction");
    std::process::exit(2);
}
