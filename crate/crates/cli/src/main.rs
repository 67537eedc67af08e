use std::io::Write;

use clap::Parser;
use dpcodes_cli::{config::thread_count, run, Cli};

fn main() {
    let cli = Cli::parse();
    if let Some(n) = thread_count(cli.threads) {
        // only fails if a pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let out = run(&cli);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.stdout.as_bytes());
    let _ = stdout.flush();
    std::process::exit(out.code);
}
