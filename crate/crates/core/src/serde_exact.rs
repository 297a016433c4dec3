//! Serde adapters that write rationals as `"p/q"` strings, so nothing is ever
//! rounded through a JSON number.

pub mod rational {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use crate::algebra::Rational;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        crate::parse_rational(&s).map_err(D::Error::custom)
    }
}

pub mod poly {
    use serde::{de::Error as _, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    use crate::algebra::Poly;

    /// Ascending coefficient list.
    pub fn serialize<S: Serializer>(p: &Poly, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(p.coeffs().len()))?;
        for c in p.coeffs() {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Poly, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| crate::parse_rational(s))
            .collect::<Result<Vec<_>, _>>()
            .map(Poly::new)
            .map_err(D::Error::custom)
    }
}
