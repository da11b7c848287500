use algebroid_web::{covariant_json, fibre_json, hilbert_json};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn covariant() {
    let v = parse(covariant_json(3, 20, "").unwrap());
    assert_eq!(v["series_text"], "(1 - t + t^2)/((1 - t)^2*(1 - t^4))");
    assert!(covariant_json(5, 10, "").is_err());
    assert!(covariant_json(2, 10, "0:1").is_err());
}

#[test]
fn hilbert() {
    let v = parse(hilbert_json("vars: x,y,z\nideal: z^2 - x^2*y", 6).unwrap());
    assert_eq!(v["weights"], serde_json::json!([1, 2, 2]));
    assert_eq!(v["dimension"], 2);
    assert!(hilbert_json("vars: x\nideal: x +", 4).is_err());
}

#[test]
fn fibre() {
    let v = parse(fibre_json("vars: x,y,z\nideal: x^2 + y^2 + z^2").unwrap());
    assert_eq!(v["fingerprint"]["dim"], 4);
    assert_eq!(v["fingerprint"]["solvable"], false);
}
