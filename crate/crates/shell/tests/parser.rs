use proptest::prelude::*;
use symkern_shell::parse;
use symkern_shell::Session;

#[test]
fn documented_inputs() {
    let mut s = Session::new();
    assert_eq!(s.eval_str("2048*z^11").unwrap().to_string(), "2048*z^11");
    assert_eq!(s.eval_str("sin(23/2*Pi)").unwrap().to_string(), "-1");
    assert_eq!(s.eval_str("2^3^2").unwrap().to_string(), "512");
    assert_eq!(s.eval_str("-2^2").unwrap().to_string(), "-4");
    assert_eq!(parse("x +").error_position(), Some(4));
}

proptest! {
    #[test]
    fn arbitrary_input_never_panics(src in "[ -~]{0,40}") {
        let parsed = parse(&src);
        if let Some(pos) = parsed.error_position() {
            prop_assert!(pos >= 1 && pos <= src.chars().count() + 1, "position {} in {:?}", pos, src);
        }
    }

    #[test]
    fn token_soup_never_panics(toks in prop::collection::vec(prop::sample::select(vec![
        "x", "1", "2/3", "0.5", "+", "-", "*", "/", "^", "(", ")", "[", "]", ",", "==", "<", "%", "sin", "I", " ",
    ]), 0..16)) {
        let src = toks.concat();
        let mut s = Session::new();
        let _ = s.run(&src);
    }
}
