//! Drives the command line in-process and prints a markdown report.
fn main() {
    let args = ["qginv", "--format", "markdown", "rootsys", "--type", "E6", "--q", "0.5"];
    let (mut out, mut err) = (std::io::stdout(), std::io::stderr());
    std::process::exit(qginv::cli::run(args, &mut out, &mut err));
}
