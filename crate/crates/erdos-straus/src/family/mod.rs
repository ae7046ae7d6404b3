//! Congruence-class solution families.
//!
//! Each catalog row describes an infinite two- or three-parameter family
//! of tame certificates: the last parameter (the *multiplier*) ranges
//! over an arithmetic progression and `m` is affine in it, so a family
//! covers a full congruence class of `m` values.  All rows share the
//! construction `n = 24m+1`, `k = g - 6m`, `n1 = g`, `n2 = g*n/im1`,
//! `n3 = g*n/im2`.
//!
//! The catalog is data, not code: [`catalog::CATALOG`] holds the 53 rows
//! and `data/catalog.tsv` is the same table serialized for consumption
//! outside this crate.  [`reconcile`] audits the rows and the published
//! reference values they were transcribed from.

pub mod catalog;
pub mod reconcile;

use crate::arith::SolutionTriple;
use crate::error::Error;
use crate::tame::{certificate_to_triple, TameCertificate};

/// One named integer parameter of a family row.
pub struct ParamSpec {
    pub name: &'static str,
    pub min: i64,
    /// Residue-class restriction on this parameter alone (e.g. s not
    /// congruent to 2 mod 3), if any.
    pub filter: Option<fn(i64) -> bool>,
}

impl ParamSpec {
    pub fn accepts(&self, v: i64) -> bool {
        v >= self.min && self.filter.map_or(true, |f| f(v))
    }
}

/// A catalog row.  Formula fields are evaluated only at assignments
/// passing `admissible` (some rows divide by 3 or 6, exact only on the
/// admissible multiplier progression).
pub struct FamilyDescriptor {
    pub id: &'static str,
    /// Non-multiplier parameters, in display order.
    pub params: &'static [ParamSpec],
    pub multiplier: ParamSpec,
    /// Joint side condition coupling the parameters and the multiplier
    /// (identically true for most rows).
    pub admissible: fn(&[i64], i64) -> bool,
    pub m: fn(&[i64], i64) -> i64,
    pub g: fn(&[i64], i64) -> i64,
    pub im1: fn(&[i64], i64) -> i64,
    pub im2: fn(&[i64], i64) -> i64,
    /// Formula sources as printed in `data/catalog.tsv`.
    pub m_src: &'static str,
    pub g_src: &'static str,
    pub im1_src: &'static str,
    pub im2_src: &'static str,
    /// Side conditions in human-readable form ("" if none).
    pub side: &'static str,
    /// The residue condition on m that characterizes the family.
    pub congruence: &'static str,
}

/// A validated concrete member of a family.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct FamilyInstance {
    pub family: &'static str,
    /// Parameter values in descriptor order, multiplier last.
    pub assignment: Vec<(&'static str, i64)>,
    pub m: u64,
    pub n: u64,
    pub g: u64,
    pub k: u64,
    pub im1: u64,
    pub im2: u64,
    pub triple: SolutionTriple,
}

impl FamilyInstance {
    pub fn certificate(&self) -> TameCertificate {
        TameCertificate::new(self.m, self.k, self.im1, self.im2)
    }

    /// Compact rendering like `F3.1a(r=0,c=0)`.
    pub fn label(&self) -> String {
        let args: Vec<String> = self
            .assignment
            .iter()
            .map(|(n, v)| format!("{n}={v}"))
            .collect();
        format!("{}({})", self.family, args.join(","))
    }
}

pub fn list_families() -> &'static [FamilyDescriptor] {
    catalog::CATALOG
}

pub fn family_by_id(id: &str) -> Result<&'static FamilyDescriptor, Error> {
    catalog::CATALOG
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| Error::UnknownFamily(id.to_string()))
}

/// How far to scan for the first admissible multipliers.  Every side
/// condition in the catalog is a residue condition of period at most 30,
/// so a window of this size either finds the progression or proves the
/// assignment infeasible.
const MULT_SCAN: i64 = 512;

/// First `count` admissible multiplier values for a fixed non-multiplier
/// assignment, ascending.  Admissible multipliers always form an
/// arithmetic progression (the side conditions are linear congruences),
/// so an empty or short result means the assignment is infeasible.
pub fn admissible_multipliers(
    desc: &FamilyDescriptor,
    params: &[i64],
    count: usize,
) -> Vec<i64> {
    let mut out = Vec::with_capacity(count);
    let mut c = desc.multiplier.min;
    let mut scanned = 0;
    while out.len() < count && scanned < MULT_SCAN {
        if desc.multiplier.accepts(c) && (desc.admissible)(params, c) {
            out.push(c);
        }
        c += 1;
        scanned += 1;
    }
    out
}

/// Evaluates a row without domain validation.  Used by the
/// reconciliation audit, which must be able to evaluate published
/// assignments even when they violate a side condition.
pub fn eval_raw(desc: &FamilyDescriptor, params: &[i64], mult: i64) -> (i64, i64, i64, i64) {
    (
        (desc.m)(params, mult),
        (desc.g)(params, mult),
        (desc.im1)(params, mult),
        (desc.im2)(params, mult),
    )
}

/// Validated instantiation.  Checks the parameter domains and side
/// conditions, then the split identity `4g - n = im1 + im2` and the
/// divisibility of both summands; a failure of the latter two is a
/// catalog defect, not a caller error, and is reported as such.
pub fn instantiate(
    desc: &FamilyDescriptor,
    params: &[i64],
    mult: i64,
) -> Result<FamilyInstance, Error> {
    if params.len() != desc.params.len() {
        return Err(Error::Domain(format!(
            "{} takes {} parameters plus a multiplier, got {}",
            desc.id,
            desc.params.len(),
            params.len()
        )));
    }
    for (spec, &v) in desc.params.iter().zip(params) {
        if !spec.accepts(v) {
            return Err(Error::Domain(format!(
                "{}: parameter {} = {v} outside domain",
                desc.id, spec.name
            )));
        }
    }
    if !desc.multiplier.accepts(mult) || !(desc.admissible)(params, mult) {
        return Err(Error::Domain(format!(
            "{}: multiplier {} = {mult} inadmissible",
            desc.id, desc.multiplier.name
        )));
    }
    let (m, g, im1, im2) = eval_raw(desc, params, mult);
    if m < 1 {
        return Err(Error::Domain(format!("{}: m = {m} below 1", desc.id)));
    }
    let (m, g, im1, im2) = (m as u64, g as u64, im1 as u64, im2 as u64);
    let n = 24 * m + 1;
    if g <= 6 * m {
        return Err(Error::Domain(format!(
            "{}: g = {g} not above 6m = {}",
            desc.id,
            6 * m
        )));
    }
    let k = g - 6 * m;
    if 4 * g - n != im1 + im2 {
        return Err(Error::Domain(format!(
            "{}: catalog defect: 4g - n = {} but im1 + im2 = {}",
            desc.id,
            4 * g - n,
            im1 + im2
        )));
    }
    let cert = TameCertificate::new(m, k, im1, im2);
    let triple = certificate_to_triple(&cert)?;
    let mut assignment: Vec<(&'static str, i64)> = desc
        .params
        .iter()
        .zip(params)
        .map(|(s, &v)| (s.name, v))
        .collect();
    assignment.push((desc.multiplier.name, mult));
    Ok(FamilyInstance {
        family: desc.id,
        assignment,
        m,
        n,
        g,
        k,
        im1: cert.im1,
        im2: cert.im2,
        triple,
    })
}

/// Walks every non-multiplier assignment of `desc` whose minimal
/// reachable m does not exceed `m_bound`, invoking `f` with the
/// assignment and its first two admissible multipliers.
///
/// Termination and completeness rest on the minimal m being (weakly)
/// monotone in each parameter: the walk breaks a parameter after a few
/// consecutive values whose whole subtree starts beyond the bound.
fn walk_assignments(
    desc: &FamilyDescriptor,
    m_bound: i64,
    f: &mut dyn FnMut(&[i64], &[i64]),
) {
    fn rec(
        desc: &FamilyDescriptor,
        idx: usize,
        vals: &mut Vec<i64>,
        m_bound: i64,
        f: &mut dyn FnMut(&[i64], &[i64]),
    ) -> Option<i64> {
        if idx == desc.params.len() {
            let mults = admissible_multipliers(desc, vals, 2);
            if mults.is_empty() {
                return None;
            }
            let min_m = (desc.m)(vals, mults[0]);
            if min_m <= m_bound {
                f(vals, &mults);
            }
            return Some(min_m);
        }
        let spec = &desc.params[idx];
        let mut v = spec.min;
        let mut subtree_min: Option<i64> = None;
        let mut over = 0; // consecutive values starting beyond the bound
        let mut infeasible = 0; // consecutive values with no admissible multiplier
        loop {
            if spec.filter.map_or(true, |flt| flt(v)) {
                vals.push(v);
                let sub = rec(desc, idx + 1, vals, m_bound, f);
                vals.pop();
                match sub {
                    Some(mm) => {
                        infeasible = 0;
                        subtree_min = Some(subtree_min.map_or(mm, |s: i64| s.min(mm)));
                        if mm > m_bound {
                            over += 1;
                            if over >= 3 {
                                break;
                            }
                        } else {
                            over = 0;
                        }
                    }
                    None => {
                        infeasible += 1;
                        if infeasible >= 16 {
                            break;
                        }
                    }
                }
            }
            v += 1;
        }
        subtree_min
    }
    rec(desc, 0, &mut Vec::new(), m_bound, f);
}

/// All members of the family with `1 <= m <= m_max`, deduplicated by
/// certificate, ascending m.
pub fn members_up_to(desc: &FamilyDescriptor, m_max: u64) -> Vec<FamilyInstance> {
    let mut out: Vec<FamilyInstance> = Vec::new();
    walk_assignments(desc, m_max as i64, &mut |params, mults| {
        // Ascend the multiplier progression; m is strictly increasing
        // along it.
        let step = if mults.len() == 2 { mults[1] - mults[0] } else { 1 };
        let mut c = mults[0];
        loop {
            if !(desc.admissible)(params, c) {
                break; // progression assumption violated; stop safely
            }
            let m = (desc.m)(params, c);
            if m > m_max as i64 {
                break;
            }
            if m >= 1 {
                if let Ok(inst) = instantiate(desc, params, c) {
                    out.push(inst);
                }
            }
            c += step;
        }
    });
    out.sort_by_key(|i| (i.m, i.k, i.im1, i.im2, i.assignment.clone()));
    out.dedup_by_key(|i| (i.m, i.k, i.im1, i.im2));
    out
}

/// Every (family, assignment) across the whole catalog whose evaluated m
/// equals the input.  Inverts the affine multiplier dependence exactly:
/// for each non-multiplier assignment, m lies on the progression
/// `m(c0) + j * (m(c1) - m(c0))`.
pub fn match_m(m: u64) -> Vec<FamilyInstance> {
    let mut out = Vec::new();
    for desc in catalog::CATALOG {
        walk_assignments(desc, m as i64, &mut |params, mults| {
            let offset = (desc.m)(params, mults[0]);
            let target = m as i64;
            let c = if target == offset {
                Some(mults[0])
            } else if mults.len() == 2 && target > offset {
                let step = (desc.m)(params, mults[1]) - offset;
                if step > 0 && (target - offset) % step == 0 {
                    Some(mults[0] + (target - offset) / step * (mults[1] - mults[0]))
                } else {
                    None
                }
            } else {
                None
            };
            if let Some(c) = c {
                if let Ok(inst) = instantiate(desc, params, c) {
                    if inst.m == m {
                        out.push(inst);
                    }
                }
            }
        });
    }
    out.sort_by(|a, b| (a.family, &a.assignment).cmp(&(b.family, &b.assignment)));
    out.dedup_by(|a, b| a.family == b.family && a.assignment == b.assignment);
    out
}

/// The catalog as a versioned plain-text table, one row per family.
/// `data/catalog.tsv` in the repository is exactly this rendering.
pub fn render_catalog_table() -> String {
    let mut s = String::new();
    s.push_str("# family catalog v1\n");
    s.push_str("# id\tparams\tmultiplier\tm\tg\tim1\tim2\tside_conditions\tcongruence\n");
    for d in catalog::CATALOG {
        let params: Vec<String> = d
            .params
            .iter()
            .map(|p| format!("{}>={}", p.name, p.min))
            .collect();
        s.push_str(&format!(
            "{}\t{}\t{}>={}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            d.id,
            params.join(","),
            d.multiplier.name,
            d.multiplier.min,
            d.m_src,
            d.g_src,
            d.im1_src,
            d.im2_src,
            if d.side.is_empty() { "-" } else { d.side },
            d.congruence,
        ));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::is_prime;

    #[test]
    fn catalog_has_53_rows() {
        assert_eq!(catalog::CATALOG.len(), 53);
        let f31a = family_by_id("F3.1a").unwrap();
        assert_eq!((f31a.im2)(&[0], 0), 1);
        let f613 = family_by_id("F6.13").unwrap();
        assert_eq!((f613.im2)(&[1], 3), 23 * 8 - 1);
        assert!(family_by_id("F9.9").is_err());
    }

    #[test]
    fn instantiate_reference_points() {
        let i = instantiate(family_by_id("F3.1a").unwrap(), &[0], 0).unwrap();
        assert_eq!((i.m, i.n), (4, 97));
        assert_eq!((i.triple.n1, i.triple.n2, i.triple.n3), (28, 194, 2716));

        let i = instantiate(family_by_id("F4.1").unwrap(), &[3, 2], 0).unwrap();
        assert_eq!((i.m, i.n), (1302, 31249));
        assert_eq!(
            (i.triple.n1, i.triple.n2, i.triple.n3),
            (7844, 3312394, 4624852)
        );

        let i = instantiate(family_by_id("F4.3").unwrap(), &[1, 0], 7).unwrap();
        assert_eq!((i.m, i.n), (635, 15241));
        assert_eq!(
            (i.triple.n1, i.triple.n2, i.triple.n3),
            (3822, 2240427, 2773862)
        );

        let i = instantiate(family_by_id("F6.1").unwrap(), &[2], 0).unwrap();
        assert_eq!((i.m, i.n), (314, 7537));
        assert_eq!(
            (i.triple.n1, i.triple.n2, i.triple.n3),
            (1920, 113055, 964736)
        );
    }

    #[test]
    fn instantiate_rejects_bad_input() {
        let d = family_by_id("F3.2a").unwrap();
        assert!(instantiate(d, &[2], 0).is_err()); // s = 2 violates s % 3 != 2
        assert!(instantiate(d, &[2, 0], 0).is_err()); // arity
        let d = family_by_id("F4.3").unwrap();
        assert!(instantiate(d, &[0, 0], 0).is_err()); // multiplier below 1
        let d = family_by_id("F6.3").unwrap();
        assert!(instantiate(d, &[2], 1).is_err()); // 3 ∤ 2c(2^5-1) at r=2, c=1
    }

    #[test]
    fn members_small_ranges() {
        // Distinct certificates can land on the same m (e.g. m = 8 from
        // both s = 0 and s = 1); compare the distinct m values.
        let mut ms: Vec<u64> = members_up_to(family_by_id("F3.2a").unwrap(), 20)
            .into_iter()
            .filter(|i| is_prime(i.n))
            .map(|i| i.m)
            .collect();
        ms.dedup();
        assert_eq!(ms, vec![3, 8, 13, 18]);

        let f31a = members_up_to(family_by_id("F3.1a").unwrap(), 30);
        let r0: Vec<u64> = f31a
            .iter()
            .filter(|i| i.assignment[0].1 == 0 && is_prime(i.n))
            .map(|i| i.m)
            .collect();
        assert_eq!(&r0[..3], &[4, 18, 25]);

        assert!(members_up_to(family_by_id("F4.3").unwrap(), 0).is_empty());
    }

    #[test]
    fn match_reference_points() {
        let hits = match_m(4);
        assert!(hits
            .iter()
            .any(|i| i.family == "F3.1a" && i.assignment == [("r", 0), ("c", 0)]));
        let hits = match_m(10);
        assert!(hits
            .iter()
            .any(|i| i.family == "F3.1b" && i.assignment == [("r", 0), ("c", 0)]));
        assert!(match_m(2).is_empty());
    }

    #[test]
    fn match_inverts_instantiate() {
        for desc in catalog::CATALOG {
            for inst in members_up_to(desc, 400) {
                let hits = match_m(inst.m);
                assert!(
                    hits.iter()
                        .any(|h| h.family == inst.family && h.assignment == inst.assignment),
                    "{} not recovered by match_m({})",
                    inst.label(),
                    inst.m
                );
            }
        }
    }

    #[test]
    fn congruence_progression_holds() {
        // m must land on an arithmetic progression of the multiplier for
        // every row; offset and step from the first two admissible
        // multipliers.
        for desc in catalog::CATALOG {
            let base: Vec<i64> = desc
                .params
                .iter()
                .map(|p| {
                    let mut v = p.min;
                    while !p.accepts(v) {
                        v += 1;
                    }
                    v
                })
                .collect();
            // Some rows have no admissible multiplier at the minimal
            // first parameter (the congruence is insoluble there); step
            // the first parameter until the progression appears.
            let mut params = base.clone();
            let mut mults = Vec::new();
            for off in 0..8 {
                params[0] = base[0] + off;
                if !desc.params[0].accepts(params[0]) {
                    continue;
                }
                mults = admissible_multipliers(desc, &params, 5);
                if mults.len() >= 2 {
                    break;
                }
            }
            assert!(mults.len() >= 2, "{}: no multiplier progression", desc.id);
            let m0 = (desc.m)(&params, mults[0]);
            let step = (desc.m)(&params, mults[1]) - m0;
            assert!(step > 0, "{}: m not increasing in multiplier", desc.id);
            for (j, &c) in mults.iter().enumerate() {
                assert_eq!(
                    (desc.m)(&params, c),
                    m0 + j as i64 * step,
                    "{}: m not affine over the progression",
                    desc.id
                );
            }
        }
    }

    #[test]
    fn catalog_table_matches_shipped_file() {
        let shipped = include_str!("../../data/catalog.tsv");
        assert_eq!(render_catalog_table(), shipped);
    }
}
