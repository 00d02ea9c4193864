fn main() {
    std::process::exit(hybrid_bsp_bench::main_with_args(std::env::args_os()));
}
