use psdef::verify::{verify_paper, Status, VerifyOptions};

fn main() {
    let cache = std::env::temp_dir().join("psdef-example-cache");
    let opts = VerifyOptions { cache_dir: Some(cache), ..Default::default() };
    let report = verify_paper(&opts).expect("verification runs");
    for c in &report.checks {
        let mark = match c.status {
            Status::Pass => "ok  ",
            Status::Fail => "FAIL",
            Status::Skipped => "skip",
        };
        println!("{mark} {:<36} {}", c.id, c.computed);
    }
    println!("{} passed, {} failed, {} skipped", report.passed, report.failed, report.skipped);
    std::process::exit(report.exit_code());
}
