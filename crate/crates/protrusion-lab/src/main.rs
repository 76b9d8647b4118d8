fn main() { std::process::exit(protrusion_lab::cli::run(std::env::args().skip(1).collect())); }
