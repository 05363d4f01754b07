//! Drives the command-line front end in-process.

use qgalois::cli::run;

fn main() {
    let sessions: [&[&str]; 5] = [
        &["nf", "U", "(E1 + F1)^2"],
        &["delta", "E1 E2"],
        &["--json", "eps", "K1 - 3 E2"],
        &["serre", "Alambda", "upper", "1", "2"],
        &["verify", "sigma-rho"],
    ];
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    for args in sessions {
        println!("$ qgalois {}", args.join(" "));
        let code = run(std::iter::once("qgalois").chain(args.iter().copied()), &mut out, &mut err);
        println!("(exit {code})\n");
    }
}
