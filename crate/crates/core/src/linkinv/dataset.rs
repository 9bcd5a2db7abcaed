use serde_json::json;

use crate::error::{Error, Result};
use crate::polycore::format::poly_json_value;
use crate::polycore::{Exponent, Polynomial};

/// A named reduced superpolynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperPolyEntry {
    pub key: String,
    pub poly: Polynomial,
    pub source: String,
}

impl SuperPolyEntry {
    /// Polynomial JSON with `key` and `source` fields added.
    pub fn to_json(&self) -> String {
        let mut value = json!({ "key": self.key, "source": self.source });
        let obj = value.as_object_mut().expect("object literal");
        if let serde_json::Value::Object(poly) = poly_json_value(&self.poly) {
            obj.extend(poly);
        }
        value.to_string()
    }
}

/// `a^k (tq)^{-k/2} (t^k + q t^{k-1} + … + q^k + a (t^{k-1} + … + q^{k-1}))`,
/// the reduced superpolynomial of the `(2, 2k+1)` torus knot.
pub fn torus2_family(k: u32) -> Polynomial {
    assert!(k >= 1, "k must be positive");
    let k = k as i32;
    let row = |deg: i32| -> Polynomial { (0..=deg).map(|i| Polynomial::qat(i, 0, deg - i)).sum() };
    let body = &row(k) + &(&Polynomial::a() * &row(k - 1));
    // a^k (tq)^{-k/2}: q and t each get -2k quarter units
    body.shift(Exponent::units(-2 * k, 4 * k, -2 * k))
}

fn prefactor(k: i32, body: &str) -> Polynomial {
    let body: Polynomial = body.parse().expect("dataset literal parses");
    body.shift(Exponent::units(-2 * k, 4 * k, -2 * k))
}

const T34: &str = "t^3 + q t^2 + q t + q^2 t + q^3 \
    + a t^2 + a t + a q t + a q + a q^2 + a^2";

const T35: &str = "t^4 + q t^3 + q t^2 + q^2 t^2 + q^2 t + q^3 t + q^4 \
    + a t^3 + a t^2 + a q t^2 + 2 a q t + a q^2 t + a q^2 + a q^3 \
    + a^2 q + a^2 t";

const T45: &str = "t^6 + q t^5 + q t^4 + q t^3 + q^2 t^4 + q^3 t^2 + q^2 t^3 \
    + q^2 t^2 + q^3 t + q^3 t^3 + q^4 t^2 + q^4 t + q^5 t + q^6 \
    + a t^5 + a t^4 + a t^3 + a q t^4 + a q^2 t^3 + 2 a q t^3 + 2 a q t^2 + a q t \
    + 2 a q^2 t^2 + 2 a q^2 t + 2 a q^3 t + a q^3 t^2 + a q^4 t + a q^3 + a q^4 + a q^5 \
    + a^2 t^3 + a^2 t^2 + a^2 t + a^2 q t^2 + a^2 q t + a^2 q^2 t + a^2 q + a^2 q^2 + a^2 q^3 \
    + a^3";

const SOURCE_TABLE: &str = "hand-computed table of reduced superpolynomials of torus knots";

/// Keys listed by `dataset --list`. Any `T(2,m)` with odd `m ≥ 3` is also
/// accepted by [`dataset_get`].
pub const DATASET_KEYS: &[&str] = &[
    "unknot", "T(2,3)", "T(2,5)", "T(2,7)", "T(3,4)", "T(3,5)", "T(4,5)",
];

fn parse_torus(key: &str) -> Option<(u32, u32)> {
    let inner = key.trim().strip_prefix("T(")?.strip_suffix(')')?;
    let (a, b) = inner.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

pub fn dataset_get(key: &str) -> Result<SuperPolyEntry> {
    let entry = |key: String, poly: Polynomial, source: &str| SuperPolyEntry {
        key,
        poly,
        source: source.to_string(),
    };
    if key.trim() == "unknot" {
        return Ok(entry("unknot".into(), Polynomial::one(), "reduced unknot"));
    }
    let unknown = || Error::UnknownLink(key.to_string());
    let (n, m) = parse_torus(key).ok_or_else(unknown)?;
    let name = format!("T({n},{m})");
    match (n, m) {
        (2, m) if m >= 3 && m % 2 == 1 => Ok(entry(
            name,
            torus2_family((m - 1) / 2),
            "two-strand torus knot family formula",
        )),
        (3, 4) => Ok(entry(name, prefactor(3, T34), SOURCE_TABLE)),
        (3, 5) => Ok(entry(name, prefactor(4, T35), SOURCE_TABLE)),
        (4, 5) => Ok(entry(name, prefactor(6, T45), SOURCE_TABLE)),
        _ => Err(unknown()),
    }
}

pub fn dataset_list() -> Vec<SuperPolyEntry> {
    DATASET_KEYS
        .iter()
        .map(|k| dataset_get(k).expect("listed key"))
        .collect()
}
