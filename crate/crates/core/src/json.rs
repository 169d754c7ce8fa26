use num_bigint::BigInt;
use serde_json::{Number, Value};

/// A JSON number carrying every digit of `c`.
pub fn big_number(c: &BigInt) -> Value {
    let n: Number = c
        .to_string()
        .parse()
        .expect("decimal integer is a valid JSON number");
    Value::Number(n)
}

pub fn big_array(cs: &[BigInt]) -> Value {
    Value::Array(cs.iter().map(big_number).collect())
}
