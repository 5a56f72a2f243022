fn main() -> std::process::ExitCode {
    wbmfdfa::cli::run()
}
