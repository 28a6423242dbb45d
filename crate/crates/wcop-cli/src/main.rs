fn main() {
    std::process::exit(wcop_cli::main_entry(std::env::args_os()) as i32);
}
