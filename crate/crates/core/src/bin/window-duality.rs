fn main() {
    let argv: Vec<String> = std::env::args().collect();
    std::process::exit(window_duality::cli::run(&argv));
}
