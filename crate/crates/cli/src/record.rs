use num_bigint::BigInt;
use pierik_core::{Coefficient, Engine, Partition, Space};
use serde::{Deserialize, Serialize};

/// One computed coefficient, as written to JSON output and the cache.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientRecord {
    pub space: Space,
    pub lambda: Partition,
    pub p: i64,
    pub nu: Partition,
    #[serde(with = "pierik_core::json_int")]
    pub coefficient: BigInt,
    pub engine: Engine,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl From<Coefficient> for CoefficientRecord {
    fn from(c: Coefficient) -> Self {
        Self {
            space: c.space,
            lambda: c.lambda,
            p: c.p,
            nu: c.nu,
            coefficient: c.value,
            engine: c.engine,
            elapsed_ms: None,
        }
    }
}

impl CoefficientRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    /// Canonical order: `(|λ|, λ, |ν|, ν)`, then engine.
    pub fn sort_key(&self) -> (&Partition, &Partition, Engine) {
        (&self.lambda, &self.nu, self.engine)
    }
}
