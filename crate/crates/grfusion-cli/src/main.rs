fn main() {
    // die quietly when the output pipe closes, e.g. `grfusion table | head`
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(grfusion_cli::app::run());
}
