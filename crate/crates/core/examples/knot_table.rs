//! Loads the bundled knot table through its consistency gates and prints
//! the checks the `fwm-table` suite runs.

use untwist::cli::{bundled_table, table_checks};

fn main() -> untwist::Result<()> {
    let entries = bundled_table()?;
    for e in &entries {
        println!(
            "{:<5} c = {} b = {}  P = {}",
            e.record.name, e.record.crossing_number, e.record.braid_index, e.homfly
        );
    }
    for c in table_checks(&entries, 20)? {
        println!("{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
    }
    Ok(())
}
