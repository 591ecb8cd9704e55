use proptest::prelude::*;
use punctual::rings::{Domain, Elem, MultiPoly, UniPoly};
use punctual::sample;
use punctual_cli::parse::{parse_multi, parse_uni};
use punctual_cli::run;
use rand::Rng;
use serde_json::Value;

fn function_field_elem(d: &Domain, r: &mut impl Rng) -> Elem {
    let k = d.base_field();
    let u = d.var("u").unwrap();
    let num = sample::poly(&k, r.gen_range(0..=2), r);
    let den = sample::unit_poly(&k, 2, r);
    num.eval_in(&u).checked_div(&den.eval_in(&u)).unwrap()
}

fn random_uni(d: &Domain, r: &mut impl Rng) -> UniPoly {
    let deg = r.gen_range(0..=4);
    let coeffs = (0..=deg)
        .map(|_| {
            if d.is_base_field() || d.is_finite() {
                sample::elem(d, r, 7)
            } else {
                function_field_elem(d, r)
            }
        })
        .collect();
    UniPoly::new(d, coeffs)
}

fn domains() -> Vec<Domain> {
    ["QQ", "GF(7)", "GF(2^3)", "QQ(u)", "GF(3)(u)"].iter().map(|s| s.parse().unwrap()).collect()
}

fn output(args: &[&str]) -> (Value, i32) {
    let (out, code) = run(std::iter::once("punctual").chain(args.iter().copied()));
    (serde_json::from_str(&out).unwrap(), code)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 60, ..ProptestConfig::default() })]

    #[test]
    fn printed_polynomials_reparse(seed in any::<u64>(), which in 0usize..5) {
        let d = domains().swap_remove(which);
        let p = random_uni(&d, &mut sample::rng(seed));
        let text = p.to_string();
        let back = parse_uni(&text, &d).unwrap();
        prop_assert_eq!(&back, &p, "{}", text);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn printed_ebasis_polynomials_reparse(seed in any::<u64>(), n in 1usize..4) {
        let q = Domain::rationals();
        let e = sample::ebasis_poly(&q, n, 3, &mut sample::rng(seed));
        let vars = punctual::sympoly::ebasis_vars(n);
        let back: MultiPoly = parse_multi(&e.to_string(), &q, &vars).unwrap();
        prop_assert_eq!(&back, e.poly());
    }

    #[test]
    fn reports_are_stable(seed in any::<u64>()) {
        let f = sample::family(&Domain::rationals(), 2, &mut sample::rng(seed)).to_string();
        let a = run(["punctual", "check", "--family", f.as_str()]);
        let b = run(["punctual", "check", "--family", f.as_str()]);
        prop_assert_eq!(a, b);
    }
}

#[test]
fn exit_codes_and_error_kinds() {
    let (v, code) = output(&["classify", "--family", "x - 1"]);
    assert_eq!((v["error"]["kind"].as_str(), code), (Some("NotInHilb"), 1));
    assert!(v.get("result").is_none());
    let (v, code) = output(&["norms", "--family", "x + z", "--g", "1"]);
    assert_eq!((v["error"]["kind"].as_str(), code), (Some("UnknownVariable"), 2));
    let (v, code) = output(&["check", "--domain", "ZZ", "--family", "x"]);
    assert_eq!((v["error"]["kind"].as_str(), code), (Some("DomainParseError"), 2));
    let (v, code) = output(&["check"]);
    assert_eq!((v["error"]["kind"].as_str(), code), (Some("UsageError"), 2));
    let (v, code) = output(&["check", "--family", "2*x - 1"]);
    assert_eq!((v["error"]["kind"].as_str(), code), (Some("NotMonic"), 1));
    let (v, code) = output(&["point-test", "--domain", "QQ[u]", "--point", "u"]);
    assert_eq!((v["error"]["kind"].as_str(), code), (Some("UnsupportedDomain"), 1));
    let (v, code) = output(&["ideal-gen", "--gens", "0"]);
    assert_eq!((v["error"]["kind"].as_str(), code), (Some("ZeroIdeal"), 1));
    let (v, code) = output(&["ebasis", "--n", "2", "--g", "t1 - t2"]);
    assert_eq!((v["error"]["kind"].as_str(), code), (Some("NotSymmetric"), 1));
}

#[test]
fn report_layout() {
    let (v, _) = output(&["verify", "--seed", "11", "--cases", "2"]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["command", "inputs", "result", "seed", "version"]);
    assert_eq!(v["seed"], "11");
    assert_eq!(v["result"]["all_passed"], true);
    let (pretty, _) = run(["punctual", "check", "--family", "x", "--pretty"]);
    assert!(pretty.contains("\n  \"command\": \"check\""));
}
