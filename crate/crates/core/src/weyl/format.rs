//! Text and JSON renderings of Weyl elements.

use serde::{Deserialize, Serialize};

use super::WeylElement;
use crate::scalar::Scalar;

/// One term as it appears in reports.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermRecord {
    pub coeff: Scalar,
    pub pos: Vec<u8>,
    pub r: u8,
    pub inv: u8,
    pub der: Vec<u8>,
}

fn power(name: &str, e: u8) -> Option<String> {
    match e {
        0 => None,
        1 => Some(name.to_string()),
        e => Some(format!("{name}^{e}")),
    }
}

impl WeylElement {
    /// `coeff * x^a y^b r^e (x2)^-m d1^c d2^d` terms joined by ` + `.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let sig = self.signature();
        let parts: Vec<String> = self
            .terms()
            .map(|(m, c)| {
                let mut factors: Vec<String> = Vec::new();
                for (k, &e) in m.pos.iter().enumerate() {
                    factors.extend(power(&sig.positions()[k], e));
                }
                factors.extend(power("r", m.radial));
                if m.inv > 0 {
                    factors.push(format!("(x2)^-{}", m.inv));
                }
                for (k, &e) in m.der.iter().enumerate() {
                    factors.extend(power(&sig.derivatives()[k], e));
                }
                if factors.is_empty() {
                    c.to_string()
                } else {
                    format!("{} * {}", c, factors.join(" "))
                }
            })
            .collect();
        parts.join(" + ")
    }

    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms()
            .map(|(m, c)| TermRecord {
                coeff: c.clone(),
                pos: m.pos.to_vec(),
                r: m.radial,
                inv: m.inv,
                der: m.der.to_vec(),
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_records()).unwrap_or(serde_json::Value::Null)
    }

    /// Inverse of [`WeylElement::to_records`] for a known signature.
    pub fn from_records(sig: &super::Sig, records: &[TermRecord]) -> crate::Result<Self> {
        WeylElement::from_terms(
            sig,
            records.iter().map(|t| {
                (
                    super::Monomial { pos: t.pos.iter().copied().collect(), radial: t.r, inv: t.inv, der: t.der.iter().copied().collect() },
                    t.coeff.clone(),
                )
            }),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::Signature;

    #[test]
    fn text_form() {
        let s = Signature::new("h", &["z", "zb"], &["d", "db"]);
        let z = WeylElement::position(&s, 0);
        let d = WeylElement::derivative(&s, 0);
        let e = (&z * &d).scale(&Scalar::frac(1, 2));
        assert_eq!(e.to_text(), "1/2 * z d");
        assert_eq!(WeylElement::zero(&s).to_text(), "0");
        let r = Signature::radial("rad", &["x1", "x2", "x3"], &["d1", "d2", "d3"]);
        let ri = WeylElement::r_inv(&r).unwrap();
        assert_eq!(ri.to_text(), "1 * r (x2)^-1");
    }

    #[test]
    fn records_round_trip() {
        let s = Signature::new("h", &["z", "zb"], &["d", "db"]);
        let e = &(&WeylElement::position(&s, 0) * &WeylElement::derivative(&s, 1)).scale(&Scalar::i())
            + &WeylElement::one(&s);
        let json = serde_json::to_string(&e.to_records()).unwrap();
        let back: Vec<TermRecord> = serde_json::from_str(&json).unwrap();
        assert_eq!(WeylElement::from_records(&s, &back).unwrap(), e);
    }
}
