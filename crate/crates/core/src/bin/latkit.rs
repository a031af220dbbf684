fn main() {
    std::process::exit(latkit::cli::cli_main(std::env::args_os()));
}
