mod common;

#[test]
fn parse_print_round_trip_500() {
    if let Err(e) = common::roundtrip::run(500) {
        panic!("{e}");
    }
}
