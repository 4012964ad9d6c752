//! Driving the command-line interface in-process.
//!
//! Run with `cargo run --example command_line`. The same commands work
//! through the binary, e.g. `cargo run -- hom --p "(z-1)^2" --q "(z-1)*(z-2)"`.

use virasoro::cli::run_command;

fn main() {
    let vn = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/vn.json");
    let commands: [&[&str]; 7] = [
        &["normal-order", "d(2)*d(-2)"],
        &["hom", "--p", "(z-1)^2", "--q", "(z-1)*(z-2)"],
        &["whittaker", vn, "--psi", "1,1", "--level", "4"],
        &["--format", "json", "decompose", "--factors", "1:2,2:1"],
        &["extract-wxi", "d[-2]w[0] + w[5]", "--xi", "7/2"],
        &["validate-n", vn],
        &["normal-order", "d(1,2)"],
    ];
    for args in commands {
        let out = run_command(std::iter::once("virasoro").chain(args.iter().copied()));
        println!("$ virasoro {}", args.join(" "));
        print!("{}{}", out.stdout, out.stderr);
        println!("(exit {})\n", out.status);
    }
}
