use infhecke_core::expr::{parse, parse_element};
use infhecke_core::sl2::Hz;
use infhecke_core::Poly;

const CORPUS: &[&str] = &[
    "e", "f", "h", "x", "y", "Delta", "t", "0", "1", "-1",
    "1/2", "-3/4", "e + f", "e - f", "e*f", "f*e", "e*f*h", "h^2", "h^0", "x^3",
    "e*y^2 + h*x*y - f*x^2", "[Delta, x]", "[Delta, y]", "[e, f]", "[x, y]", "[[e, f], x]", "[e, [f, x]]",
    "(e + f)^2", "(e - f)*(e + f)", "-(e + f)", "-e*f", "-e^2", "(-e)^2", "2*e - 3*f + 1/2*h",
    "e - (f - h)", "e - f - h", "(e*f)*h", "e*(f*h)", "-(-1/2)", "x - -y", "x * -1",
    "Delta^2 - 2*Delta + 1", "(Delta - 2)*(Delta + 3)", "[Delta^2, x] - [Delta, x]*Delta", "t^2",
    "[t, e]", "[t, x]", "1/3*(x*y - y*x)", "(((e)))", "[e, f]^2", "-[x, y]", "h*h - 2*h + 4*e*f",
    "y*y*x*x - x*x*y*y", "(1/2)^3*h", "e^2*f^2 - f^2*e^2",
];

#[test]
fn corpus_is_large_enough() {
    assert!(CORPUS.len() >= 50);
}

#[test]
fn print_parse_round_trip() {
    for s in CORPUS {
        let ast = parse(s).unwrap_or_else(|e| panic!("{s}: {e}"));
        let printed = ast.to_string();
        assert_eq!(parse(&printed).unwrap(), ast, "{s} printed as {printed}");
    }
}

#[test]
fn printed_form_evaluates_the_same() {
    for z in [Poly::zero(), Poly::var(), Poly::from_ints(&[1, 0, 1])] {
        let hz = Hz::new(&z);
        let p = hz.presentation();
        for s in CORPUS {
            let a = parse_element(s, p).unwrap();
            let b = parse_element(&parse(s).unwrap().to_string(), p).unwrap();
            assert_eq!(a, b, "{s}");
            assert_eq!(parse_element(&a.to_string(), p).unwrap(), a, "normal form of {s}");
        }
    }
}

#[test]
fn whitespace_is_insignificant() {
    assert_eq!(parse("e*y^2+h*x*y-f*x^2").unwrap(), parse("  e * y ^ 2 + h*x*y - f * x^2 ").unwrap());
}
