//! Shared fixtures and deterministic random generators for the acceptance
//! suite.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ivnsoft::{parse_dataset, Interval, IvnNumber, IvnSoftSet, ParseMode, Scalar, ThresholdSet};

pub const TABLE1: &str = include_str!("../../../../datasets/table1.json");
pub const TABLE4: &str = include_str!("../../../../datasets/table4.json");
pub const TABLE5: &str = include_str!("../../../../datasets/table5.json");
pub const TABLE6: &str = include_str!("../../../../datasets/table6.json");
pub const TABLE7: &str = include_str!("../../../../datasets/table7.json");
pub const TABLE8: &str = include_str!("../../../../datasets/table8.json");
pub const TABLE9: &str = include_str!("../../../../datasets/table9.json");
pub const TABLE10: &str = include_str!("../../../../datasets/table10.json");
pub const TABLE11: &str = include_str!("../../../../datasets/table11.json");
pub const TABLE12: &str = include_str!("../../../../datasets/table12.json");
pub const DIVERGENCES: &str = include_str!("../../../../datasets/divergences.json");

pub fn dataset_path(name: &str) -> String {
    format!("{}/../../datasets/{name}", env!("CARGO_MANIFEST_DIR"))
}

pub fn load_strict(text: &str) -> IvnSoftSet {
    parse_dataset(text, ParseMode::Strict).expect("fixture parses strictly")
}

pub fn load_lenient(text: &str) -> IvnSoftSet {
    parse_dataset(text, ParseMode::Lenient).expect("fixture parses leniently")
}

pub fn sc(text: &str) -> Scalar {
    Scalar::parse(text).expect("scalar literal")
}

pub fn iv(lo: &str, hi: &str) -> Interval {
    Interval::new(sc(lo), sc(hi)).expect("interval literal")
}

pub fn num(t: (&str, &str), i: (&str, &str), f: (&str, &str)) -> IvnNumber {
    IvnNumber::new(iv(t.0, t.1), iv(i.0, i.1), iv(f.0, f.1))
}

/// One divergence entry from the documented-divergence file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divergence {
    pub table: String,
    pub parameter: String,
    pub object: Option<String>,
    pub component: Option<String>,
    pub printed: Vec<String>,
    pub computed: Vec<String>,
}

pub fn load_divergences() -> Vec<Divergence> {
    let root: serde_json::Value = serde_json::from_str(DIVERGENCES).expect("divergences.json");
    let entries = root["entries"].as_array().expect("entries array");
    entries
        .iter()
        .map(|entry| {
            let list = |key: &str| -> Vec<String> {
                match &entry[key] {
                    serde_json::Value::Array(items) => items
                        .iter()
                        .map(|x| x.as_str().expect("endpoint text").to_string())
                        .collect(),
                    serde_json::Value::String(s) => vec![s.clone()],
                    other => panic!("unexpected {key}: {other:?}"),
                }
            };
            Divergence {
                table: entry["table"].as_str().expect("table").to_string(),
                parameter: entry["parameter"].as_str().expect("parameter").to_string(),
                object: entry["object"].as_str().map(str::to_string),
                component: entry["component"].as_str().map(str::to_string),
                printed: list("printed"),
                computed: list("computed"),
            }
        })
        .collect()
}

/// Deterministic generator over the 0.05 degree grid.
pub struct Gen {
    rng: ChaCha8Rng,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn below(&mut self, n: usize) -> usize {
        (self.rng.next_u32() as usize) % n
    }

    /// A degree k/20 for k in 0..=20.
    pub fn scalar(&mut self) -> Scalar {
        Scalar::ratio(self.below(21) as i64, 20)
    }

    pub fn interval(&mut self) -> Interval {
        let a = self.scalar();
        let b = self.scalar();
        if a <= b {
            Interval::new(a, b).unwrap()
        } else {
            Interval::new(b, a).unwrap()
        }
    }

    pub fn number(&mut self) -> IvnNumber {
        IvnNumber::new(self.interval(), self.interval(), self.interval())
    }

    /// Universe and parameter sizes, each 1..=6.
    pub fn dims(&mut self) -> (usize, usize) {
        (1 + self.below(6), 1 + self.below(6))
    }

    pub fn soft_set(&mut self, objects: usize, parameters: usize) -> IvnSoftSet {
        let universe = (1..=objects).map(|i| format!("u{i}")).collect::<Vec<_>>();
        let params = (1..=parameters)
            .map(|i| format!("x{i}"))
            .collect::<Vec<_>>();
        let cells = (0..objects * parameters).map(|_| self.number()).collect();
        IvnSoftSet::new(universe, params, cells).unwrap()
    }

    pub fn threshold(&mut self, parameters: &[String]) -> ThresholdSet {
        let cuts = parameters.iter().map(|_| self.number()).collect();
        ThresholdSet::explicit(parameters.to_vec(), cuts).unwrap()
    }
}
