fn main() {
    std::process::exit(gyro::cli::run(std::env::args_os()));
}
