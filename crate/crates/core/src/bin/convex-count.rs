use std::io::Write;

fn main() {
    let (out, code) = convex_count::cli::run(std::env::args_os());
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    if code == convex_count::cli::EXIT_USAGE {
        eprint!("{out}");
    } else {
        let _ = lock.write_all(out.as_bytes());
    }
    let _ = lock.flush();
    std::process::exit(code);
}
