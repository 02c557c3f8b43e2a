//! Canonical JSON: object keys sorted, every float written with 17
//! significant digits in exponent form, integers as integers.

use std::io;

use serde::Serialize;
use serde_json::ser::{Formatter, Serializer};

struct Canonical;

impl Formatter for Canonical {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{}", format_float(value))
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }
}

/// 17 significant digits; parses back to the same `f64`.
pub fn format_float(value: f64) -> String {
    format!("{value:.16e}")
}

/// Canonical serialization of `value`, terminated by a newline.
pub fn to_canonical<T: Serialize>(value: &T) -> serde_json::Result<String> {
    // Going through `Value` sorts object keys.
    let tree = serde_json::to_value(value)?;
    let mut out = Vec::new();
    let mut ser = Serializer::with_formatter(&mut out, Canonical);
    tree.serialize(&mut ser)?;
    out.push(b'\n');
    Ok(String::from_utf8(out).expect("serde_json writes UTF-8"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde::Deserialize;

    #[derive(Serialize, Deserialize)]
    struct Sample {
        zeta: f64,
        alpha: Vec<f64>,
        count: usize,
        maybe: Option<f64>,
    }

    #[test]
    fn sorted_keys_and_fixed_floats() {
        let s = Sample {
            zeta: 0.1,
            alpha: vec![1.0, -7.0 / 3.0],
            count: 3,
            maybe: None,
        };
        let out = to_canonical(&s).unwrap();
        assert_eq!(
            out,
            "{\"alpha\":[1.0000000000000000e0,-2.3333333333333335e0],\"count\":3,\"maybe\":null,\"zeta\":1.0000000000000001e-1}\n"
        );
        let back: Sample = serde_json::from_str(&out).unwrap();
        assert_eq!(to_canonical(&back).unwrap(), out);
    }

    #[test]
    fn floats_round_trip() {
        let mut rng = elasticity_core::SplitMix64::new(1, 0);
        for _ in 0..10000 {
            let v = f64::from_bits(rng.next_u64());
            if v.is_finite() {
                assert_eq!(format_float(v).parse::<f64>().unwrap(), v);
            }
        }
    }
}
