// Recomputes the published table of semigroups with negative Eliahou
// number and reports every cell that disagrees.
//
//     cargo run --example published_table

use nsg::sweep::compare_table1;

pub fn run_example() -> nsg::Result<()> {
    for row in compare_table1()? {
        if row.all_match() {
            println!("{:<24} all six columns match", row.spec.to_string());
            continue;
        }
        println!("{:<24} differs:", row.spec.to_string());
        for cell in row.mismatches() {
            println!(
                "    {:<14} published {:>6}  computed {:>6}",
                cell.column,
                cell.published,
                cell.computed.map_or("-".into(), |c| c.to_string())
            );
        }
    }
    Ok(())
}

fn main() -> nsg::Result<()> {
    run_example()
}
