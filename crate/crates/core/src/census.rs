//! Exhaustive classification runs over all pairs of compositions of `n`.

use std::io::{self, Write};
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::compositions::{enumerate_compositions, Composition, WeakComposition};
use crate::error::{Error, Result};
use crate::ndet;
use crate::par::{self, Execution};
use crate::predicates::{classify_with_cap, ClassKind};
use crate::skew_matrix::build_matrix;

/// One classified pair. Field order is the output column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub alpha: String,
    pub beta: String,
    pub class: String,
    pub certificate: Option<String>,
    pub terms: usize,
    /// Wall time for the pair; `None` unless timing was requested, so that
    /// untimed runs are byte-for-byte reproducible.
    pub micros: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CensusFormat {
    JsonLines,
    Csv,
}

impl FromStr for CensusFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json-lines" | "jsonl" => Ok(CensusFormat::JsonLines),
            "csv" => Ok(CensusFormat::Csv),
            other => Err(Error::Parse(format!("unknown format `{other}`"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CensusConfig {
    pub n: u32,
    pub length: usize,
    pub partitions_only: bool,
    pub exec: Execution,
    pub timing: bool,
    pub dim_cap: usize,
}

impl CensusConfig {
    pub fn new(n: u32, length: usize) -> Self {
        CensusConfig {
            n,
            length,
            partitions_only: false,
            exec: Execution::default(),
            timing: false,
            dim_cap: 7,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub records: Vec<CensusRecord>,
    /// Counts indexed like [`ClassKind::ALL`].
    pub counts: [usize; 4],
}

impl Census {
    pub fn count(&self, kind: ClassKind) -> usize {
        self.counts[ClassKind::ALL.iter().position(|&k| k == kind).expect("listed")]
    }

    pub fn summary(&self) -> String {
        let mut s = format!("rows={}", self.records.len());
        for (k, c) in ClassKind::ALL.iter().zip(self.counts) {
            s.push_str(&format!(" {k}={c}"));
        }
        s
    }
}

/// Every `(alpha, beta)` with both compositions of `n` into `length` parts,
/// `beta` restricted to partitions when asked; lexicographic in `alpha`, then `beta`.
pub fn census_pairs(n: u32, length: usize, partitions_only: bool) -> Vec<(Composition, Composition)> {
    let all: Vec<Composition> = enumerate_compositions(n, length).collect();
    let betas: Vec<&Composition> =
        all.iter().filter(|b| !partitions_only || b.is_partition()).collect();
    all.iter()
        .flat_map(|a| betas.iter().map(move |&b| (a.clone(), b.clone())))
        .collect()
}

/// Classify one pair and count the terms of its exact expansion.
pub fn census_record(alpha: &Composition, beta: &Composition, timing: bool, cap: usize) -> Result<CensusRecord> {
    let start = Instant::now();
    let beta_w = WeakComposition::from(beta);
    let class = classify_with_cap(alpha, &beta_w, cap)?;
    let terms = match &class.expansion {
        Some(e) => e.term_count(),
        None => ndet::ndet_laplace_with_cap(&build_matrix(alpha, &beta_w)?, cap)?.term_count(),
    };
    let consistent = match class.kind {
        ClassKind::AllZeroPreCancellation | ClassKind::ZeroAfterCancellation => terms == 0,
        ClassKind::ProvablyNonzero | ClassKind::NonzeroTermExists => terms > 0,
    };
    if !consistent {
        return Err(Error::InvariantViolation(format!(
            "{alpha}/{beta} classified {} but expansion has {terms} terms",
            class.kind
        )));
    }
    let certificate = match class.kind {
        ClassKind::NonzeroTermExists | ClassKind::ProvablyNonzero => {
            class.certificate.as_ref().map(ToString::to_string)
        }
        _ => None,
    };
    Ok(CensusRecord {
        alpha: alpha.to_string(),
        beta: beta.to_string(),
        class: class.kind.token().to_string(),
        certificate,
        terms,
        micros: timing.then(|| start.elapsed().as_micros() as u64),
    })
}

pub fn run_census(cfg: &CensusConfig) -> Result<Census> {
    if cfg.length > cfg.dim_cap {
        return Err(Error::DimensionCap { dim: cfg.length, cap: cfg.dim_cap });
    }
    let pairs = census_pairs(cfg.n, cfg.length, cfg.partitions_only);
    let records = par::map_collect(cfg.exec, &pairs, |(a, b)| {
        census_record(a, b, cfg.timing, cfg.dim_cap)
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let mut counts = [0; 4];
    for r in &records {
        let kind = ClassKind::from_token(&r.class).expect("token produced by classify");
        counts[ClassKind::ALL.iter().position(|&k| k == kind).expect("listed")] += 1;
    }
    Ok(Census { records, counts })
}

pub fn write_records<W: Write>(records: &[CensusRecord], format: CensusFormat, out: W) -> io::Result<()> {
    match format {
        CensusFormat::JsonLines => {
            let mut out = io::BufWriter::new(out);
            for r in records {
                serde_json::to_writer(&mut out, r)?;
                out.write_all(b"\n")?;
            }
            out.flush()
        }
        CensusFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["alpha", "beta", "class", "certificate", "terms", "micros"])?;
            for r in records {
                w.serialize((
                    &r.alpha,
                    &r.beta,
                    &r.class,
                    r.certificate.as_deref().unwrap_or(""),
                    r.terms,
                    r.micros.map(|m| m.to_string()).unwrap_or_default(),
                ))?;
            }
            w.flush()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::predicates::classify;

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn pairs_for_four_two_partitions() {
        let pairs = census_pairs(4, 2, true);
        let shown: Vec<String> = pairs.iter().map(|(a, b)| format!("{a}/{b}")).collect();
        assert_eq!(shown, ["1,3/2,2", "1,3/3,1", "2,2/2,2", "2,2/3,1", "3,1/2,2", "3,1/3,1"]);
    }

    #[test]
    fn census_matches_per_pair_classification() {
        let mut cfg = CensusConfig::new(4, 2);
        cfg.partitions_only = true;
        let census = run_census(&cfg).unwrap();
        assert_eq!(census.records.len(), 6);
        for r in &census.records {
            let c = classify(&comp(&r.alpha), &r.beta.parse().unwrap()).unwrap();
            assert_eq!(r.class, c.kind.token());
        }
        assert_eq!(census.counts.iter().sum::<usize>(), 6);
    }

    #[test]
    fn single_part() {
        let census = run_census(&CensusConfig::new(2, 1)).unwrap();
        assert_eq!(census.records.len(), 1);
        let r = &census.records[0];
        assert_eq!((r.alpha.as_str(), r.beta.as_str()), ("2", "2"));
        assert_eq!(r.class, "PROVABLY_NONZERO");
        assert_eq!(r.terms, 1);
    }

    #[test]
    fn empty_when_length_exceeds_n() {
        let census = run_census(&CensusConfig::new(2, 3)).unwrap();
        assert!(census.records.is_empty());
        assert_eq!(
            census.summary(),
            "rows=0 ALL_ZERO_PRE_CANCELLATION=0 NONZERO_TERM_EXISTS=0 PROVABLY_NONZERO=0 ZERO_AFTER_CANCELLATION=0"
        );
    }

    #[test]
    fn cap_is_enforced() {
        let mut cfg = CensusConfig::new(9, 8);
        cfg.dim_cap = 7;
        assert_eq!(run_census(&cfg), Err(Error::DimensionCap { dim: 8, cap: 7 }));
    }

    #[test]
    fn execution_modes_produce_identical_records() {
        let mut cfg = CensusConfig::new(7, 3);
        cfg.exec = Execution::Sequential;
        let a = run_census(&cfg).unwrap();
        cfg.exec = Execution::Parallel;
        let b = run_census(&cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn output_formats() {
        let census = run_census(&CensusConfig::new(2, 1)).unwrap();
        let mut buf = Vec::new();
        write_records(&census.records, CensusFormat::JsonLines, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "{\"alpha\":\"2\",\"beta\":\"2\",\"class\":\"PROVABLY_NONZERO\",\"certificate\":\"1->1\",\"terms\":1,\"micros\":null}\n"
        );
        let mut buf = Vec::new();
        write_records(&census.records, CensusFormat::Csv, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "alpha,beta,class,certificate,terms,micros\n2,2,PROVABLY_NONZERO,1->1,1,\n"
        );
        assert_eq!("csv".parse::<CensusFormat>().unwrap(), CensusFormat::Csv);
        assert!("xml".parse::<CensusFormat>().is_err());
    }

    #[test]
    fn json_lines_parse_back() {
        let census = run_census(&CensusConfig::new(5, 2)).unwrap();
        let mut buf = Vec::new();
        write_records(&census.records, CensusFormat::JsonLines, &mut buf).unwrap();
        let back: Vec<CensusRecord> = String::from_utf8(buf)
            .unwrap()
            .lines()
            .map(|l| serde_json::from_str(l).unwrap())
            .collect();
        assert_eq!(back, census.records);
    }
}
