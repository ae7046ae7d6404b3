//! Range surveys: classify every m in 1..=m_max, serialize the records,
//! and aggregate family coverage.
//!
//! Classification is split across worker threads in contiguous m-chunks
//! and merged back in order, so the output is byte-identical for any
//! worker count.  Serialization is single-threaded after the merge.

use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;

use crate::arith::SpfTable;
use crate::error::Error;
use crate::family::{list_families, match_m};
use crate::tame::{certificate_to_triple, classify, ClassificationRecord, Verdict};

/// One record per m in 1..=m_max with 24m+1 prime, ascending.
pub fn classify_range(
    m_max: u64,
    workers: usize,
    spf: &SpfTable,
) -> Result<Vec<ClassificationRecord>, Error> {
    if m_max == 0 {
        return Err(Error::Domain("empty range: m_max = 0".into()));
    }
    if spf.limit() < 18 * m_max {
        return Err(Error::Range(format!(
            "sieve limit {} below 18 * m_max = {}",
            spf.limit(),
            18 * m_max
        )));
    }
    let workers = workers.max(1).min(m_max as usize);
    let chunk = m_max.div_ceil(workers as u64);
    let mut parts: Vec<Result<Vec<ClassificationRecord>, Error>> =
        Vec::with_capacity(workers);
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers as u64)
            .map(|w| {
                let lo = 1 + w * chunk;
                let hi = ((w + 1) * chunk).min(m_max);
                s.spawn(move || {
                    let mut v = Vec::new();
                    for m in lo..=hi {
                        let rec = classify(m, spf)?;
                        // Only prime n = 24m+1 yields a record.
                        if rec.verdict != Verdict::Composite {
                            v.push(rec);
                        }
                    }
                    Ok(v)
                })
            })
            .collect();
        for h in handles {
            parts.push(h.join().expect("worker panicked"));
        }
    });
    let mut out = Vec::with_capacity(m_max as usize);
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

/// One line of the JSONL survey output.  Certificate and triple fields
/// are null except on tame rows.
#[derive(Debug, Clone, Serialize)]
pub struct SurveyRow {
    pub m: u64,
    pub n: u64,
    pub verdict: &'static str,
    pub k: Option<u64>,
    pub im1: Option<u64>,
    pub im2: Option<u64>,
    pub n1: Option<u64>,
    pub n2: Option<u64>,
    pub n3: Option<u64>,
    pub family_matches: Vec<String>,
}

/// Builds the serialized form of one record.  `with_families` controls
/// the (comparatively expensive) catalog inversion per tame row.
pub fn survey_row(rec: &ClassificationRecord, with_families: bool) -> Result<SurveyRow, Error> {
    let mut row = SurveyRow {
        m: rec.m,
        n: rec.n,
        verdict: match rec.verdict {
            Verdict::Composite => "composite",
            Verdict::TamePrime(_) => "tame",
            Verdict::WildPrime => "wild",
        },
        k: None,
        im1: None,
        im2: None,
        n1: None,
        n2: None,
        n3: None,
        family_matches: Vec::new(),
    };
    if let Verdict::TamePrime(cert) = rec.verdict {
        let t = certificate_to_triple(&cert)?;
        row.k = Some(cert.k);
        row.im1 = Some(cert.im1);
        row.im2 = Some(cert.im2);
        row.n1 = Some(t.n1);
        row.n2 = Some(t.n2);
        row.n3 = Some(t.n3);
        if with_families {
            row.family_matches = match_m(rec.m).iter().map(|i| i.label()).collect();
        }
    }
    Ok(row)
}

/// One JSON object per line, in record order.
pub fn write_jsonl<W: Write>(
    records: &[ClassificationRecord],
    with_families: bool,
    mut out: W,
) -> Result<(), Error> {
    for rec in records {
        let row = survey_row(rec, with_families)?;
        serde_json::to_writer(&mut out, &row).map_err(|e| Error::Parse(e.to_string()))?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyCount {
    pub family_id: String,
    pub congruence: String,
    pub member_count: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CoverageReport {
    pub m_max: u64,
    pub prime_count: u64,
    pub tame_count: u64,
    pub wild_count: u64,
    pub wild_list: Vec<u64>,
    /// Tame primes hit per catalog row, catalog order.
    pub per_family: Vec<FamilyCount>,
    /// Tame primes matched by no catalog row at all.
    pub uncovered: Vec<u64>,
}

impl CoverageReport {
    /// Fraction of primes in range that are tame, to four decimals.
    pub fn tame_ratio(&self) -> String {
        if self.prime_count == 0 {
            return "0.0000".into();
        }
        format!("{:.4}", self.tame_count as f64 / self.prime_count as f64)
    }

    pub fn render_text(&self) -> String {
        let mut s = format!(
            "m <= {}: {} primes, {} tame, {} wild (tame ratio {})\n",
            self.m_max,
            self.prime_count,
            self.tame_count,
            self.wild_count,
            self.tame_ratio()
        );
        if !self.wild_list.is_empty() {
            let w: Vec<String> = self.wild_list.iter().map(u64::to_string).collect();
            s.push_str(&format!("wild m: {}\n", w.join(", ")));
        }
        if !self.uncovered.is_empty() {
            let u: Vec<String> = self.uncovered.iter().map(u64::to_string).collect();
            s.push_str(&format!("tame but matched by no family: {}\n", u.join(", ")));
        }
        s
    }
}

/// Classifies the range and inverts the catalog on every tame prime.
pub fn coverage(m_max: u64, workers: usize, spf: &SpfTable) -> Result<CoverageReport, Error> {
    let records = classify_range(m_max, workers, spf)?;
    coverage_from_records(m_max, &records)
}

pub fn coverage_from_records(
    m_max: u64,
    records: &[ClassificationRecord],
) -> Result<CoverageReport, Error> {
    let mut prime_count = 0;
    let mut tame_count = 0;
    let mut wild_list = Vec::new();
    let mut counts: BTreeMap<&'static str, u64> = BTreeMap::new();
    let mut uncovered = Vec::new();
    for rec in records {
        match rec.verdict {
            Verdict::Composite => continue,
            Verdict::TamePrime(_) => {
                prime_count += 1;
                tame_count += 1;
                let hits = match_m(rec.m);
                if hits.is_empty() {
                    uncovered.push(rec.m);
                }
                // A family counts each m once, however many assignments
                // reach it.
                let mut seen: Vec<&str> = Vec::new();
                for h in hits {
                    if !seen.contains(&h.family) {
                        seen.push(h.family);
                        *counts.entry(h.family).or_insert(0) += 1;
                    }
                }
            }
            Verdict::WildPrime => {
                prime_count += 1;
                wild_list.push(rec.m);
            }
        }
    }
    let per_family = list_families()
        .iter()
        .map(|d| FamilyCount {
            family_id: d.id.to_string(),
            congruence: d.congruence.to_string(),
            member_count: counts.get(d.id).copied().unwrap_or(0),
        })
        .collect();
    Ok(CoverageReport {
        m_max,
        prime_count,
        tame_count,
        wild_count: wild_list.len() as u64,
        wild_list,
        per_family,
        uncovered,
    })
}

/// CSV, one row per catalog family, catalog order.
pub fn write_family_csv<W: Write>(report: &CoverageReport, mut out: W) -> Result<(), Error> {
    writeln!(out, "family_id,congruence,member_count")?;
    for f in &report.per_family {
        // Congruence strings contain no commas today; quote defensively.
        writeln!(out, "{},\"{}\",{}", f.family_id, f.congruence, f.member_count)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(m_max: u64) -> SpfTable {
        SpfTable::new(18 * m_max).unwrap()
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let spf = table(300);
        let base = classify_range(300, 1, &spf).unwrap();
        for workers in [2, 3, 7, 64] {
            assert_eq!(classify_range(300, workers, &spf).unwrap(), base);
        }
        let mut a = Vec::new();
        let mut b = Vec::new();
        write_jsonl(&base, true, &mut a).unwrap();
        write_jsonl(&classify_range(300, 5, &spf).unwrap(), true, &mut b).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn small_range_counts() {
        let spf = table(100);
        let rep = coverage(100, 4, &spf).unwrap();
        assert_eq!(rep.wild_list, vec![17, 24]);
        assert_eq!(rep.prime_count, rep.tame_count + rep.wild_count);
        let f31a = rep
            .per_family
            .iter()
            .find(|f| f.family_id == "F3.1a")
            .unwrap();
        assert!(f31a.member_count > 0);
    }

    #[test]
    fn jsonl_shape() {
        let spf = table(20);
        let recs = classify_range(20, 1, &spf).unwrap();
        let mut buf = Vec::new();
        write_jsonl(&recs, true, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        // Prime n = 24m+1 for m in {3,4,8,10,13,14,17,18,19}.
        assert_eq!(text.lines().count(), 9);
        // m = 4 (n = 97) is tame and matched by at least one family.
        let line4 = text.lines().nth(1).unwrap();
        let v: serde_json::Value = serde_json::from_str(line4).unwrap();
        assert_eq!(v["m"], 4);
        assert_eq!(v["n"], 97);
        assert_eq!(v["verdict"], "tame");
        assert_eq!(v["n1"], 28);
        assert!(!v["family_matches"].as_array().unwrap().is_empty());
        // m = 17 is wild: nulls everywhere.
        let line17 = text.lines().nth(6).unwrap();
        let v: serde_json::Value = serde_json::from_str(line17).unwrap();
        assert_eq!(v["verdict"], "wild");
        assert!(v["k"].is_null());

        let rep = coverage_from_records(20, &recs).unwrap();
        let mut csv = Vec::new();
        write_family_csv(&rep, &mut csv).unwrap();
        let csv = String::from_utf8(csv).unwrap();
        assert!(csv.starts_with("family_id,congruence,member_count\n"));
        assert_eq!(csv.lines().count(), 54); // header + 53 rows
    }

    #[test]
    fn rejects_undersized_sieve() {
        let spf = SpfTable::new(100).unwrap();
        assert!(classify_range(50, 1, &spf).is_err());
        assert!(classify_range(0, 1, &spf).is_err());
    }
}
