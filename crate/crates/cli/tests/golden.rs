use scatalan::bisnomial::bisnomial_row;
use scatalan::catalan::{triangle_row_direct, triangle_row_recurrence};
use scatalan::paths::count_paths;
use scatalan::Natural;
use scatalan_cli::export::parse_csv;

fn table(name: &str) -> Vec<Vec<Natural>> {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    parse_csv(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn printed_catalan_table_differs_only_at_four_seven() {
    let printed = table("table2.csv");
    let mut differences = Vec::new();
    for (n, row) in printed.iter().enumerate() {
        let computed = triangle_row_direct(n as u32);
        assert_eq!(row.len(), computed.entries().len());
        for (k, v) in row.iter().enumerate() {
            if *v != computed.get(k as i64) {
                differences.push((n, k, v.clone(), computed.get(k as i64)));
            }
        }
    }
    assert_eq!(
        differences,
        vec![(4, 7, Natural::from(405u32), Natural::from(406u32))]
    );
}

#[test]
fn four_seven_is_forced() {
    let n = 406u32;
    // difference of Pascal row 8 at 19 and 20: 728 - 322
    let pascal = bisnomial_row(3, 8).unwrap();
    assert_eq!(pascal.get(19) - pascal.get(20), Natural::from(n));
    // recurrence from row 3: 96 + 2*64 + 3*35 + 4*15 + 3*5 + 2*1 + 0
    assert_eq!(96 + 2 * 64 + 3 * 35 + 4 * 15 + 3 * 5 + 2, n);
    assert_eq!(triangle_row_recurrence(4).get(7), Natural::from(n));
    assert_eq!(count_paths(4, 7), Natural::from(n));
    // row 4 must sum to the central coefficient (8, 12)_3 = 8092
    let printed_sum: u32 = [
        364, 1000, 1400, 1505, 1351, 1044, 700, 405, 202, 84, 28, 7, 1,
    ]
    .iter()
    .sum();
    assert_eq!(pascal.get(12), Natural::from(printed_sum + 1));
}

#[test]
fn pascal_table_matches_as_printed() {
    let printed = table("table1.csv");
    for (n, row) in printed.iter().enumerate() {
        assert_eq!(row.as_slice(), bisnomial_row(3, n as u32).unwrap().coeffs());
    }
}
