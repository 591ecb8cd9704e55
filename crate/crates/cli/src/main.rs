fn main() {
    let (out, code) = punctual_cli::run(std::env::args());
    println!("{out}");
    std::process::exit(code);
}
