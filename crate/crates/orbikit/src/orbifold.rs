//! Orbifold datum candidates over a fusion category and the eight
//! polynomial constraints characterising genuine orbifold data.
//!
//! A candidate consists of a finite label set B, a t-assignment sending
//! each triple (a; b, c) in B^3 to a category object or to zero, two
//! sparse scalar tables f and g indexed by (a; b, c, d; p, q; i) with
//! B-labels a..q and a category object i, squared weights psi^2 per label
//! and a single squared weight phi^2. Entries of f and g are stored only
//! where the t-support allows them; an absent key reads as exact zero.
//!
//! f support at key (a; bcd; pq; i) requires nonzero t-objects with
//! N^i(t(a;b,p), t(p;c,d)) = N^i(t(a;q,d), t(q;b,c)) = 1, and g support
//! mirrors it with N^i(t(a;p,d), t(p;b,c)) = N^i(t(a;b,q), t(q;c,d)) = 1.
//!
//! The conditions are labelled O1..O8. Sums over B inside O4..O7 are
//! restricted to labels whose dimension denominators are nonzero; term
//! evaluation multiplies support-carrying factors first so a vanishing
//! t-object kills a summand before any quantum dimension is inverted.

use crate::cyclotomic::Cyclo;
use crate::fusion::{CheckReport, FusionCategoryData, Obj, MAX_VIOLATIONS};
use std::collections::HashMap;
use thiserror::Error;

/// Index into a datum's label set B.
pub type BIdx = usize;

/// A t-assignment value: a category object, or None for the zero object.
pub type TObj = Option<Obj>;

/// Key (a, b, c, d, p, q, i) of an f or g entry; the first six are
/// B-labels, the last is a category object.
pub type FgKey = (BIdx, BIdx, BIdx, BIdx, BIdx, BIdx, Obj);

#[derive(Debug, Error)]
pub enum OrbifoldError {
    #[error("label index {0} out of range")]
    BadLabel(usize),
    #[error("object index {0} out of range")]
    BadObject(usize),
    #[error("psi^2 must be nonzero for label {0}")]
    PsiZero(String),
    #[error("phi^2 must be nonzero")]
    PhiZero,
    #[error("{table} key {key} lies outside the t-support")]
    KeyNotSupported { table: &'static str, key: String },
    #[error("duplicate {table} key {key}")]
    DuplicateKey { table: &'static str, key: String },
    #[error("f block at {0} is not square ({1}x{2}), so g cannot be derived")]
    NonSquareBlock(String, usize, usize),
    #[error("f block at {0} is singular, so g cannot be derived")]
    SingularBlock(String),
    #[error("datum has no distinguished unit label")]
    NoIota,
    #[error("required f entry {0} is zero or absent, cannot normalise")]
    MissingUnitalEntry(String),
    #[error("the two unital gauge prescriptions disagree at the unit triple")]
    UnitTripleClash,
    #[error("datum is not unital after normalisation; it likely fails O1")]
    NormalizationFailed,
    #[error("gauge scalar at triple {0} is off the t-support")]
    GaugeOffSupport(String),
    #[error("gauge scalar at triple {0} must be nonzero")]
    GaugeZero(String),
    #[error("rescale factor must be nonzero")]
    RescaleZero,
}

/// One of the eight defining conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    O1,
    O2,
    O3,
    O4,
    O5,
    O6,
    O7,
    O8,
}

impl Condition {
    pub const ALL: [Condition; 8] = [
        Condition::O1,
        Condition::O2,
        Condition::O3,
        Condition::O4,
        Condition::O5,
        Condition::O6,
        Condition::O7,
        Condition::O8,
    ];

    /// Cheap-to-expensive ordering used for fail-fast scans.
    pub const FAST_ORDER: [Condition; 8] = [
        Condition::O8,
        Condition::O2,
        Condition::O3,
        Condition::O4,
        Condition::O5,
        Condition::O6,
        Condition::O7,
        Condition::O1,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            Condition::O1 => "O1",
            Condition::O2 => "O2",
            Condition::O3 => "O3",
            Condition::O4 => "O4",
            Condition::O5 => "O5",
            Condition::O6 => "O6",
            Condition::O7 => "O7",
            Condition::O8 => "O8",
        }
    }

    pub fn parse(s: &str) -> Option<Condition> {
        match s.trim().to_ascii_uppercase().as_str() {
            "O1" => Some(Condition::O1),
            "O2" => Some(Condition::O2),
            "O3" => Some(Condition::O3),
            "O4" => Some(Condition::O4),
            "O5" => Some(Condition::O5),
            "O6" => Some(Condition::O6),
            "O7" => Some(Condition::O7),
            "O8" => Some(Condition::O8),
            _ => None,
        }
    }
}

/// Raw input for [`OrbifoldDatum::new`].
#[derive(Clone)]
pub struct DatumInput {
    pub labels: Vec<String>,
    pub iota: Option<BIdx>,
    /// Nonzero t-assignments as ((a, b, c), object).
    pub t: Vec<((BIdx, BIdx, BIdx), Obj)>,
    pub f: Vec<(FgKey, Cyclo)>,
    pub g: Vec<(FgKey, Cyclo)>,
    pub psi2: Vec<Cyclo>,
    pub phi2: Cyclo,
}

/// An orbifold datum candidate, validated against a category's fusion
/// support at construction time.
#[derive(Clone)]
pub struct OrbifoldDatum {
    labels: Vec<String>,
    iota: Option<BIdx>,
    nb: usize,
    t: Vec<TObj>,
    f: HashMap<FgKey, Cyclo>,
    g: HashMap<FgKey, Cyclo>,
    psi2: Vec<Cyclo>,
    phi2: Cyclo,
}

// F entry with zero-object propagation: any None argument reads as 0.
pub(crate) fn f_t(
    cat: &FusionCategoryData,
    i: TObj,
    j: TObj,
    k: TObj,
    l: TObj,
    p: TObj,
    q: TObj,
) -> Cyclo {
    match (i, j, k, l, p, q) {
        (Some(i), Some(j), Some(k), Some(l), Some(p), Some(q)) => cat.f_sym(i, j, k, l, p, q),
        _ => Cyclo::zero(),
    }
}

pub(crate) fn g_t(
    cat: &FusionCategoryData,
    i: TObj,
    j: TObj,
    k: TObj,
    l: TObj,
    q: TObj,
    p: TObj,
) -> Cyclo {
    match (i, j, k, l, q, p) {
        (Some(i), Some(j), Some(k), Some(l), Some(q), Some(p)) => cat.g_sym(i, j, k, l, q, p),
        _ => Cyclo::zero(),
    }
}

pub(crate) fn r_t(cat: &FusionCategoryData, i: TObj, j: TObj, k: TObj) -> Cyclo {
    match (i, j, k) {
        (Some(i), Some(j), Some(k)) => cat.r_sym(i, j, k),
        _ => Cyclo::zero(),
    }
}

pub(crate) fn rinv_t(cat: &FusionCategoryData, i: TObj, j: TObj, k: TObj) -> Cyclo {
    match (i, j, k) {
        (Some(i), Some(j), Some(k)) => cat.rinv_sym(i, j, k),
        _ => Cyclo::zero(),
    }
}

pub(crate) fn n_t(cat: &FusionCategoryData, x: TObj, y: TObj, channel: TObj) -> u8 {
    match (x, y, channel) {
        (Some(x), Some(y), Some(c)) => cat.n(x, y, c),
        _ => 0,
    }
}

impl OrbifoldDatum {
    pub fn new(input: DatumInput, cat: &FusionCategoryData) -> Result<OrbifoldDatum, OrbifoldError> {
        let nb = input.labels.len();
        let ni = cat.object_count();
        if let Some(io) = input.iota {
            if io >= nb {
                return Err(OrbifoldError::BadLabel(io));
            }
        }
        if input.psi2.len() != nb {
            return Err(OrbifoldError::BadLabel(input.psi2.len()));
        }
        let mut t = vec![None; nb * nb * nb];
        for &((a, b, c), o) in &input.t {
            for x in [a, b, c] {
                if x >= nb {
                    return Err(OrbifoldError::BadLabel(x));
                }
            }
            if o >= ni {
                return Err(OrbifoldError::BadObject(o));
            }
            t[(a * nb + b) * nb + c] = Some(o);
        }
        for (lbl, v) in input.labels.iter().zip(&input.psi2) {
            if v.is_zero() {
                return Err(OrbifoldError::PsiZero(lbl.clone()));
            }
        }
        if input.phi2.is_zero() {
            return Err(OrbifoldError::PhiZero);
        }
        let mut datum = OrbifoldDatum {
            labels: input.labels,
            iota: input.iota,
            nb,
            t,
            f: HashMap::new(),
            g: HashMap::new(),
            psi2: input.psi2,
            phi2: input.phi2,
        };
        for (key, val) in input.f {
            let (a, b, c, d, p, q, i) = key;
            for x in [a, b, c, d, p, q] {
                if x >= nb {
                    return Err(OrbifoldError::BadLabel(x));
                }
            }
            if i >= ni {
                return Err(OrbifoldError::BadObject(i));
            }
            if !datum.f_key_supported(cat, key) {
                return Err(OrbifoldError::KeyNotSupported {
                    table: "f",
                    key: datum.fg_key_string(key),
                });
            }
            if datum.f.insert(key, val).is_some() {
                return Err(OrbifoldError::DuplicateKey { table: "f", key: datum.fg_key_string(key) });
            }
        }
        for (key, val) in input.g {
            let (a, b, c, d, p, q, i) = key;
            for x in [a, b, c, d, p, q] {
                if x >= nb {
                    return Err(OrbifoldError::BadLabel(x));
                }
            }
            if i >= ni {
                return Err(OrbifoldError::BadObject(i));
            }
            if !datum.g_key_supported(cat, key) {
                return Err(OrbifoldError::KeyNotSupported {
                    table: "g",
                    key: datum.fg_key_string(key),
                });
            }
            if datum.g.insert(key, val).is_some() {
                return Err(OrbifoldError::DuplicateKey { table: "g", key: datum.fg_key_string(key) });
            }
        }
        Ok(datum)
    }

    fn fg_key_string(&self, (a, b, c, d, p, q, i): FgKey) -> String {
        format!(
            "(a={} bcd={},{},{} pq={},{} i={})",
            self.labels[a], self.labels[b], self.labels[c], self.labels[d], self.labels[p], self.labels[q], i
        )
    }

    pub fn f_key_supported(&self, cat: &FusionCategoryData, (a, b, c, d, p, q, i): FgKey) -> bool {
        n_t(cat, self.t(a, b, p), self.t(p, c, d), Some(i)) == 1
            && n_t(cat, self.t(a, q, d), self.t(q, b, c), Some(i)) == 1
    }

    pub fn g_key_supported(&self, cat: &FusionCategoryData, (a, b, c, d, p, q, i): FgKey) -> bool {
        n_t(cat, self.t(a, p, d), self.t(p, b, c), Some(i)) == 1
            && n_t(cat, self.t(a, b, q), self.t(q, c, d), Some(i)) == 1
    }

    pub fn label_count(&self) -> usize {
        self.nb
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_by_name(&self, s: &str) -> Option<BIdx> {
        self.labels.iter().position(|l| l == s)
    }

    pub fn iota(&self) -> Option<BIdx> {
        self.iota
    }

    pub fn t(&self, a: BIdx, b: BIdx, c: BIdx) -> TObj {
        self.t[(a * self.nb + b) * self.nb + c]
    }

    /// f entry, exact zero when absent.
    pub fn f_val(&self, a: BIdx, b: BIdx, c: BIdx, d: BIdx, p: BIdx, q: BIdx, i: Obj) -> Cyclo {
        self.f.get(&(a, b, c, d, p, q, i)).cloned().unwrap_or_else(Cyclo::zero)
    }

    /// g entry, exact zero when absent.
    pub fn g_val(&self, a: BIdx, b: BIdx, c: BIdx, d: BIdx, p: BIdx, q: BIdx, i: Obj) -> Cyclo {
        self.g.get(&(a, b, c, d, p, q, i)).cloned().unwrap_or_else(Cyclo::zero)
    }

    pub fn psi2(&self, b: BIdx) -> &Cyclo {
        &self.psi2[b]
    }

    pub fn phi2(&self) -> &Cyclo {
        &self.phi2
    }

    pub fn f_entries(&self) -> impl Iterator<Item = (&FgKey, &Cyclo)> {
        self.f.iter()
    }

    pub fn g_entries(&self) -> impl Iterator<Item = (&FgKey, &Cyclo)> {
        self.g.iter()
    }

    pub fn t_entries(&self) -> Vec<((BIdx, BIdx, BIdx), Obj)> {
        let mut out = Vec::new();
        for a in 0..self.nb {
            for b in 0..self.nb {
                for c in 0..self.nb {
                    if let Some(o) = self.t(a, b, c) {
                        out.push(((a, b, c), o));
                    }
                }
            }
        }
        out
    }

    /// Checks one condition, collecting up to the default violation cap.
    pub fn check_condition(&self, cat: &FusionCategoryData, cond: Condition) -> CheckReport {
        self.check_condition_capped(cat, cond, MAX_VIOLATIONS)
    }

    /// Checks one condition with an explicit violation cap; cap 1 aborts
    /// at the first failure.
    pub fn check_condition_capped(&self, cat: &FusionCategoryData, cond: Condition, cap: usize) -> CheckReport {
        match cond {
            Condition::O1 => self.check_o1(cat, cap),
            Condition::O2 => self.check_o2_o3(cat, cap, true),
            Condition::O3 => self.check_o2_o3(cat, cap, false),
            Condition::O4 => self.check_o4(cat, cap),
            Condition::O5 => self.check_o5(cat, cap),
            Condition::O6 => self.check_o6(cat, cap),
            Condition::O7 => self.check_o7(cat, cap),
            Condition::O8 => self.check_o8(cat, cap),
        }
    }

    /// Runs the given conditions in order with full reports.
    pub fn check_all(&self, cat: &FusionCategoryData, conds: &[Condition]) -> Vec<CheckReport> {
        conds.iter().map(|&c| self.check_condition(cat, c)).collect()
    }

    /// Fail-fast verdict over all eight conditions, cheapest first.
    pub fn verify_fast(&self, cat: &FusionCategoryData) -> Result<(), CheckReport> {
        for cond in Condition::FAST_ORDER {
            let rep = self.check_condition_capped(cat, cond, 1);
            if !rep.passed() {
                return Err(rep);
            }
        }
        Ok(())
    }

    fn bl(&self, x: BIdx) -> String {
        self.labels[x].clone()
    }

    fn check_o1(&self, cat: &FusionCategoryData, cap: usize) -> CheckReport {
        let mut rep = CheckReport::with_cap("O1", cap);
        let nb = self.nb;
        let ni = cat.object_count();
        let objs: Vec<Obj> = cat.objects().collect();
        'outer: for a in 0..nb {
            for b in 0..nb {
                for c in 0..nb {
                    for d in 0..nb {
                        for e in 0..nb {
                            for p in 0..nb {
                                for q in 0..nb {
                                    for r in 0..nb {
                                        for s in 0..nb {
                                            let t_are = self.t(a, r, e);
                                            let t_abp = self.t(a, b, p);
                                            if t_are.is_none() || t_abp.is_none() {
                                                // every instance vanishes on both sides
                                                rep.checked += (ni * ni * ni) as u64;
                                                continue;
                                            }
                                            let t_rsd = self.t(r, s, d);
                                            let t_sbc = self.t(s, b, c);
                                            let t_pcq = self.t(p, c, q);
                                            let t_qde = self.t(q, d, e);
                                            let t_asq = self.t(a, s, q);
                                            let f1: Vec<Cyclo> =
                                                objs.iter().map(|&i| self.f_val(a, s, d, e, q, r, i)).collect();
                                            let f2: Vec<Cyclo> =
                                                objs.iter().map(|&j| self.f_val(a, b, c, q, p, s, j)).collect();
                                            // per-x data for the right hand side
                                            let rhs_x: Vec<(TObj, TObj, Vec<Cyclo>, Vec<Cyclo>, Vec<Cyclo>)> = (0..nb)
                                                .map(|x| {
                                                    (
                                                        self.t(r, b, x),
                                                        self.t(x, c, d),
                                                        objs.iter().map(|&m| self.f_val(p, c, d, e, q, x, m)).collect(),
                                                        objs.iter().map(|&l| self.f_val(a, b, x, e, p, r, l)).collect(),
                                                        objs.iter().map(|&k| self.f_val(r, b, c, d, x, s, k)).collect(),
                                                    )
                                                })
                                                .collect();
                                            let lhs_dead = f1.iter().all(Cyclo::is_zero)
                                                || f2.iter().all(Cyclo::is_zero);
                                            let rhs_dead = rhs_x.iter().all(|(_, _, f3, f4, f5)| {
                                                f3.iter().all(Cyclo::is_zero)
                                                    || f4.iter().all(Cyclo::is_zero)
                                                    || f5.iter().all(Cyclo::is_zero)
                                            });
                                            if lhs_dead && rhs_dead {
                                                rep.checked += (ni * ni * ni) as u64;
                                                continue;
                                            }
                                            for &g_ in &objs {
                                                for &k_ in &objs {
                                                    for &m_ in &objs {
                                                        let mut lhs = Cyclo::zero();
                                                        if !lhs_dead {
                                                            for &i in &objs {
                                                                if f1[i].is_zero() {
                                                                    continue;
                                                                }
                                                                let v1 = f_t(cat, t_are, t_rsd, t_sbc, Some(g_), Some(k_), Some(i));
                                                                if v1.is_zero() {
                                                                    continue;
                                                                }
                                                                let v2 = rinv_t(cat, t_sbc, Some(i), Some(g_));
                                                                if v2.is_zero() {
                                                                    continue;
                                                                }
                                                                for &j in &objs {
                                                                    if f2[j].is_zero() {
                                                                        continue;
                                                                    }
                                                                    let v3 = f_t(cat, t_sbc, t_asq, t_qde, Some(g_), Some(i), Some(j));
                                                                    if v3.is_zero() {
                                                                        continue;
                                                                    }
                                                                    let v4 = g_t(cat, t_abp, t_pcq, t_qde, Some(g_), Some(j), Some(m_));
                                                                    if v4.is_zero() {
                                                                        continue;
                                                                    }
                                                                    let v5 = r_t(cat, t_asq, t_sbc, Some(j));
                                                                    if v5.is_zero() {
                                                                        continue;
                                                                    }
                                                                    lhs = lhs + v1.clone() * v4 * v3 * v5 * v2.clone() * &f1[i] * &f2[j];
                                                                }
                                                            }
                                                        }
                                                        let mut rhs = Cyclo::zero();
                                                        for (x, (t_rbx, t_xcd, f3, f4, f5)) in rhs_x.iter().enumerate() {
                                                            if f3[m_].is_zero() || f5[k_].is_zero() {
                                                                continue;
                                                            }
                                                            for &l in &objs {
                                                                if f4[l].is_zero() {
                                                                    continue;
                                                                }
                                                                let w1 = f_t(cat, t_are, *t_rbx, *t_xcd, Some(g_), Some(k_), Some(l));
                                                                if w1.is_zero() {
                                                                    continue;
                                                                }
                                                                let w2 = g_t(cat, t_abp, self.t(p, x, e), *t_xcd, Some(g_), Some(l), Some(m_));
                                                                if w2.is_zero() {
                                                                    continue;
                                                                }
                                                                rhs = rhs + w1 * w2 * &f3[m_] * &f4[l] * &f5[k_];
                                                            }
                                                        }
                                                        if lhs.is_zero() && rhs.is_zero() {
                                                            rep.checked += 1;
                                                            continue;
                                                        }
                                                        let idx = vec![
                                                            format!(
                                                                "(a,b,c,d,e,p,q,r,s)=({},{},{},{},{},{},{},{},{})",
                                                                self.bl(a), self.bl(b), self.bl(c), self.bl(d), self.bl(e),
                                                                self.bl(p), self.bl(q), self.bl(r), self.bl(s)
                                                            ),
                                                            format!("(g,k,m)=({},{},{})", cat.name(g_), cat.name(k_), cat.name(m_)),
                                                        ];
                                                        if !rep.record(idx, lhs, rhs) {
                                                            break 'outer;
                                                        }
                                                    }
                                                }
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        rep
    }

    fn check_o2_o3(&self, cat: &FusionCategoryData, cap: usize, is_o2: bool) -> CheckReport {
        let mut rep = CheckReport::with_cap(if is_o2 { "O2" } else { "O3" }, cap);
        let nb = self.nb;
        'outer: for a in 0..nb {
            for b in 0..nb {
                for c in 0..nb {
                    for d in 0..nb {
                        for i in cat.objects() {
                            for p in 0..nb {
                                for r in 0..nb {
                                    let mut lhs = Cyclo::zero();
                                    for q in 0..nb {
                                        let term = if is_o2 {
                                            self.f_val(a, b, c, d, q, r, i) * self.g_val(a, b, c, d, p, q, i)
                                        } else {
                                            self.g_val(a, b, c, d, q, r, i) * self.f_val(a, b, c, d, p, q, i)
                                        };
                                        lhs = lhs + term;
                                    }
                                    let n = if is_o2 {
                                        n_t(cat, self.t(a, p, d), self.t(p, b, c), Some(i))
                                    } else {
                                        n_t(cat, self.t(a, b, p), self.t(p, c, d), Some(i))
                                    };
                                    let rhs = if p == r && n == 1 { Cyclo::one() } else { Cyclo::zero() };
                                    if lhs.is_zero() && rhs.is_zero() {
                                        rep.checked += 1;
                                        continue;
                                    }
                                    let idx = vec![format!(
                                        "(a,b,c,d;i;p,r)=({},{},{},{};{};{},{})",
                                        self.bl(a), self.bl(b), self.bl(c), self.bl(d),
                                        cat.name(i), self.bl(p), self.bl(r)
                                    )];
                                    if !rep.record(idx, lhs, rhs) {
                                        break 'outer;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        rep
    }

    fn check_o4(&self, cat: &FusionCategoryData, cap: usize) -> CheckReport {
        let mut rep = CheckReport::with_cap("O4", cap);
        let nb = self.nb;
        let objs: Vec<Obj> = cat.objects().collect();
        'outer: for a in 0..nb {
            for b in 0..nb {
                for bp in 0..nb {
                    for c in 0..nb {
                        for p in 0..nb {
                            for q in 0..nb {
                                for &m_ in &objs {
                                    let mut lhs = Cyclo::zero();
                                    for d in 0..nb {
                                        let t_aqd = match self.t(a, q, d) {
                                            Some(o) => o,
                                            None => continue,
                                        };
                                        let t_pcd = self.t(p, c, d);
                                        let t_qbc = self.t(q, b, c);
                                        let t_qbpc = self.t(q, bp, c);
                                        let t_abp2 = self.t(a, b, p);
                                        let t_abpp = self.t(a, bp, p);
                                        let mut inner = Cyclo::zero();
                                        for &j in &objs {
                                            let fj = self.f_val(a, b, c, d, p, q, j);
                                            if fj.is_zero() {
                                                continue;
                                            }
                                            let v1 = f_t(cat, t_pcd, Some(m_), t_qbc, Some(j), t_abp2, Some(t_aqd));
                                            if v1.is_zero() {
                                                continue;
                                            }
                                            let v2 = r_t(cat, t_pcd, t_abp2, Some(j));
                                            if v2.is_zero() {
                                                continue;
                                            }
                                            // f support guarantees t(a;b,p) is nonzero here
                                            let wj = cat.qdim(j) * &(fj * v1 * v2)
                                                / cat.qdim(t_aqd);
                                            for &i in &objs {
                                                let gi = self.g_val(a, bp, c, d, q, p, i);
                                                if gi.is_zero() {
                                                    continue;
                                                }
                                                let v3 = g_t(cat, t_pcd, Some(m_), t_qbpc, Some(i), Some(t_aqd), t_abpp);
                                                if v3.is_zero() {
                                                    continue;
                                                }
                                                let v4 = rinv_t(cat, t_abpp, t_pcd, Some(i));
                                                if v4.is_zero() {
                                                    continue;
                                                }
                                                let abp = t_abp2.expect("support");
                                                let term = &wj * &(gi * v3 * v4) * cat.qdim(i) / cat.qdim(abp);
                                                inner = inner + term;
                                            }
                                        }
                                        if !inner.is_zero() {
                                            let w = self.psi2(b) * self.psi2(d) / (self.psi2(q) * self.psi2(p));
                                            lhs = lhs + w * inner;
                                        }
                                    }
                                    let rhs = if b == bp && n_t(cat, Some(m_), self.t(q, b, c), self.t(a, b, p)) == 1 {
                                        Cyclo::one()
                                    } else {
                                        Cyclo::zero()
                                    };
                                    if lhs.is_zero() && rhs.is_zero() {
                                        rep.checked += 1;
                                        continue;
                                    }
                                    let idx = vec![format!(
                                        "(a,b,b',c,p,q;m)=({},{},{},{},{},{};{})",
                                        self.bl(a), self.bl(b), self.bl(bp), self.bl(c),
                                        self.bl(p), self.bl(q), cat.name(m_)
                                    )];
                                    if !rep.record(idx, lhs, rhs) {
                                        break 'outer;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        rep
    }

    fn check_o5(&self, cat: &FusionCategoryData, cap: usize) -> CheckReport {
        let mut rep = CheckReport::with_cap("O5", cap);
        let nb = self.nb;
        let objs: Vec<Obj> = cat.objects().collect();
        'outer: for a in 0..nb {
            for c in 0..nb {
                for d in 0..nb {
                    for dp in 0..nb {
                        for p in 0..nb {
                            for q in 0..nb {
                                for &m_ in &objs {
                                    let mut lhs = Cyclo::zero();
                                    for b in 0..nb {
                                        let t_abq = match self.t(a, b, q) {
                                            Some(o) => o,
                                            None => continue,
                                        };
                                        let t_pbc = self.t(p, b, c);
                                        let t_qcd = self.t(q, c, d);
                                        let t_qcdp = self.t(q, c, dp);
                                        let t_apd = self.t(a, p, d);
                                        let t_apdp = self.t(a, p, dp);
                                        let mut inner = Cyclo::zero();
                                        for &j in &objs {
                                            let gj = self.g_val(a, b, c, d, p, q, j);
                                            if gj.is_zero() {
                                                continue;
                                            }
                                            let v1 = f_t(cat, t_pbc, Some(m_), t_qcd, Some(j), t_apd, Some(t_abq));
                                            if v1.is_zero() {
                                                continue;
                                            }
                                            let v2 = rinv_t(cat, t_pbc, t_apd, Some(j));
                                            if v2.is_zero() {
                                                continue;
                                            }
                                            let wj = cat.qdim(j) * &(gj * v1 * v2) / cat.qdim(t_abq);
                                            for &i in &objs {
                                                let fi = self.f_val(a, b, c, dp, q, p, i);
                                                if fi.is_zero() {
                                                    continue;
                                                }
                                                let v3 = g_t(cat, t_pbc, Some(m_), t_qcdp, Some(i), Some(t_abq), t_apdp);
                                                if v3.is_zero() {
                                                    continue;
                                                }
                                                let v4 = r_t(cat, t_apdp, t_pbc, Some(i));
                                                if v4.is_zero() {
                                                    continue;
                                                }
                                                // g support guarantees t(a;p,d) nonzero once gj != 0
                                                let apd = t_apd.expect("support");
                                                let term = &wj * &(fi * v3 * v4) * cat.qdim(i) / cat.qdim(apd);
                                                inner = inner + term;
                                            }
                                        }
                                        if !inner.is_zero() {
                                            let w = self.psi2(b) * self.psi2(d) / (self.psi2(p) * self.psi2(q));
                                            lhs = lhs + w * inner;
                                        }
                                    }
                                    let rhs = if d == dp && n_t(cat, Some(m_), self.t(q, c, d), self.t(a, p, d)) == 1 {
                                        Cyclo::one()
                                    } else {
                                        Cyclo::zero()
                                    };
                                    if lhs.is_zero() && rhs.is_zero() {
                                        rep.checked += 1;
                                        continue;
                                    }
                                    let idx = vec![format!(
                                        "(a,c,d,d',p,q;m)=({},{},{},{},{},{};{})",
                                        self.bl(a), self.bl(c), self.bl(d), self.bl(dp),
                                        self.bl(p), self.bl(q), cat.name(m_)
                                    )];
                                    if !rep.record(idx, lhs, rhs) {
                                        break 'outer;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        rep
    }

    fn check_o6(&self, cat: &FusionCategoryData, cap: usize) -> CheckReport {
        let mut rep = CheckReport::with_cap("O6", cap);
        let nb = self.nb;
        let objs: Vec<Obj> = cat.objects().collect();
        'outer: for a in 0..nb {
            for ap in 0..nb {
                for b in 0..nb {
                    for d in 0..nb {
                        for p in 0..nb {
                            for q in 0..nb {
                                for &m_ in &objs {
                                    let mut lhs = Cyclo::zero();
                                    for c in 0..nb {
                                        let t_qbc = match self.t(q, b, c) {
                                            Some(o) => o,
                                            None => continue,
                                        };
                                        let t_aqd = self.t(a, q, d);
                                        let t_apqd = self.t(ap, q, d);
                                        let t_pcd = self.t(p, c, d);
                                        let t_abp2 = self.t(a, b, p);
                                        let t_apbp = self.t(ap, b, p);
                                        let mut inner = Cyclo::zero();
                                        for &j in &objs {
                                            let fj = self.f_val(a, b, c, d, p, q, j);
                                            if fj.is_zero() {
                                                continue;
                                            }
                                            let v1 = g_t(cat, t_aqd, Some(m_), t_pcd, Some(j), t_abp2, Some(t_qbc));
                                            if v1.is_zero() {
                                                continue;
                                            }
                                            let wj = cat.qdim(j) * &(fj * v1) / cat.qdim(t_qbc);
                                            for &i in &objs {
                                                let gi = self.g_val(ap, b, c, d, q, p, i);
                                                if gi.is_zero() {
                                                    continue;
                                                }
                                                let v2 = f_t(cat, t_apqd, Some(m_), t_pcd, Some(i), Some(t_qbc), t_apbp);
                                                if v2.is_zero() {
                                                    continue;
                                                }
                                                let abp = t_abp2.expect("support");
                                                let term = &wj * &(gi * v2) * cat.qdim(i) / cat.qdim(abp);
                                                inner = inner + term;
                                            }
                                        }
                                        if !inner.is_zero() {
                                            let w = self.psi2(a) * self.psi2(c) / (self.psi2(q) * self.psi2(p));
                                            lhs = lhs + w * inner;
                                        }
                                    }
                                    let rhs = if a == ap && n_t(cat, self.t(a, q, d), Some(m_), self.t(a, b, p)) == 1 {
                                        Cyclo::one()
                                    } else {
                                        Cyclo::zero()
                                    };
                                    if lhs.is_zero() && rhs.is_zero() {
                                        rep.checked += 1;
                                        continue;
                                    }
                                    let idx = vec![format!(
                                        "(a,a',b,d,p,q;m)=({},{},{},{},{},{};{})",
                                        self.bl(a), self.bl(ap), self.bl(b), self.bl(d),
                                        self.bl(p), self.bl(q), cat.name(m_)
                                    )];
                                    if !rep.record(idx, lhs, rhs) {
                                        break 'outer;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        rep
    }

    fn check_o7(&self, cat: &FusionCategoryData, cap: usize) -> CheckReport {
        let mut rep = CheckReport::with_cap("O7", cap);
        let nb = self.nb;
        let objs: Vec<Obj> = cat.objects().collect();
        'outer: for b in 0..nb {
            for c in 0..nb {
                for cp in 0..nb {
                    for d in 0..nb {
                        for p in 0..nb {
                            for q in 0..nb {
                                for &m_ in &objs {
                                    let mut lhs = Cyclo::zero();
                                    for a in 0..nb {
                                        let t_abq = match self.t(a, b, q) {
                                            Some(o) => o,
                                            None => continue,
                                        };
                                        let t_apd = self.t(a, p, d);
                                        let t_qcd = self.t(q, c, d);
                                        let t_qcpd = self.t(q, cp, d);
                                        let t_pbc = self.t(p, b, c);
                                        let t_pbcp = self.t(p, b, cp);
                                        let mut inner = Cyclo::zero();
                                        for &j in &objs {
                                            let gj = self.g_val(a, b, c, d, p, q, j);
                                            if gj.is_zero() {
                                                continue;
                                            }
                                            let v1 = f_t(cat, t_apd, Some(m_), t_qcd, Some(j), t_pbc, Some(t_abq));
                                            if v1.is_zero() {
                                                continue;
                                            }
                                            let wj = cat.qdim(j) * &(gj * v1) / cat.qdim(t_abq);
                                            for &i in &objs {
                                                let fi = self.f_val(a, b, cp, d, q, p, i);
                                                if fi.is_zero() {
                                                    continue;
                                                }
                                                let v2 = g_t(cat, t_apd, Some(m_), t_qcpd, Some(i), Some(t_abq), t_pbcp);
                                                if v2.is_zero() {
                                                    continue;
                                                }
                                                // g support guarantees t(p;b,c) nonzero once gj != 0
                                                let pbc = t_pbc.expect("support");
                                                let term = &wj * &(fi * v2) * cat.qdim(i) / cat.qdim(pbc);
                                                inner = inner + term;
                                            }
                                        }
                                        if !inner.is_zero() {
                                            let w = self.psi2(a) * self.psi2(c) / (self.psi2(p) * self.psi2(q));
                                            lhs = lhs + w * inner;
                                        }
                                    }
                                    let rhs = if c == cp && n_t(cat, Some(m_), self.t(q, c, d), self.t(p, b, c)) == 1 {
                                        Cyclo::one()
                                    } else {
                                        Cyclo::zero()
                                    };
                                    if lhs.is_zero() && rhs.is_zero() {
                                        rep.checked += 1;
                                        continue;
                                    }
                                    let idx = vec![format!(
                                        "(b,c,c',d,p,q;m)=({},{},{},{},{},{};{})",
                                        self.bl(b), self.bl(c), self.bl(cp), self.bl(d),
                                        self.bl(p), self.bl(q), cat.name(m_)
                                    )];
                                    if !rep.record(idx, lhs, rhs) {
                                        break 'outer;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        rep
    }

    fn check_o8(&self, cat: &FusionCategoryData, cap: usize) -> CheckReport {
        let mut rep = CheckReport::with_cap("O8", cap);
        let nb = self.nb;
        'outer: for a in 0..nb {
            let target = self.psi2(a) / self.phi2();
            let mut sums = [Cyclo::zero(), Cyclo::zero(), Cyclo::zero()];
            for b in 0..nb {
                for c in 0..nb {
                    let w = self.psi2(b) * self.psi2(c);
                    for (which, t) in [self.t(a, b, c), self.t(b, c, a), self.t(c, a, b)].into_iter().enumerate() {
                        if let Some(o) = t {
                            sums[which] = &sums[which] + &(&w * cat.qdim(o));
                        }
                    }
                }
            }
            for (which, s) in sums.into_iter().enumerate() {
                let idx = vec![format!("a={} cyclic form {}", self.bl(a), which + 1)];
                if !rep.record(idx, s, target.clone()) {
                    break 'outer;
                }
            }
        }
        rep
    }

    /// Recomputes g as the blockwise inverse of f. For each block
    /// (a, b, c, d, i) the row set P and column set Q are read off the
    /// t-support; the f block must be square and invertible.
    pub fn derive_g(&self, cat: &FusionCategoryData) -> Result<OrbifoldDatum, OrbifoldError> {
        let nb = self.nb;
        let mut g: HashMap<FgKey, Cyclo> = HashMap::new();
        for a in 0..nb {
            for b in 0..nb {
                for c in 0..nb {
                    for d in 0..nb {
                        for i in cat.objects() {
                            let ps: Vec<BIdx> = (0..nb)
                                .filter(|&p| n_t(cat, self.t(a, b, p), self.t(p, c, d), Some(i)) == 1)
                                .collect();
                            let qs: Vec<BIdx> = (0..nb)
                                .filter(|&q| n_t(cat, self.t(a, q, d), self.t(q, b, c), Some(i)) == 1)
                                .collect();
                            if ps.is_empty() && qs.is_empty() {
                                continue;
                            }
                            let blk = format!(
                                "(a={} bcd={},{},{} i={})",
                                self.bl(a), self.bl(b), self.bl(c), self.bl(d), cat.name(i)
                            );
                            if ps.len() != qs.len() {
                                return Err(OrbifoldError::NonSquareBlock(blk, ps.len(), qs.len()));
                            }
                            let m: Vec<Vec<Cyclo>> = ps
                                .iter()
                                .map(|&p| qs.iter().map(|&q| self.f_val(a, b, c, d, p, q, i)).collect())
                                .collect();
                            let minv = invert_matrix(&m).ok_or(OrbifoldError::SingularBlock(blk))?;
                            for (qi, &qv) in qs.iter().enumerate() {
                                for (pi, &pv) in ps.iter().enumerate() {
                                    let v = minv[qi][pi].clone();
                                    if !v.is_zero() {
                                        g.insert((a, b, c, d, qv, pv, i), v);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        let mut out = self.clone();
        out.g = g;
        Ok(out)
    }

    /// Applies a gauge transform. Scalars are given per nonzero t-triple;
    /// missing triples default to 1, off-support or zero scalars are
    /// rejected. psi and phi are untouched, and every check verdict is
    /// invariant under this action.
    pub fn gauge_transform(
        &self,
        lambda: &HashMap<(BIdx, BIdx, BIdx), Cyclo>,
    ) -> Result<OrbifoldDatum, OrbifoldError> {
        for (&(a, b, c), v) in lambda {
            if a >= self.nb || b >= self.nb || c >= self.nb || self.t(a, b, c).is_none() {
                return Err(OrbifoldError::GaugeOffSupport(format!("({},{},{})", a, b, c)));
            }
            if v.is_zero() {
                return Err(OrbifoldError::GaugeZero(format!("({},{},{})", a, b, c)));
            }
        }
        let lam = |a: BIdx, b: BIdx, c: BIdx| -> Cyclo {
            lambda.get(&(a, b, c)).cloned().unwrap_or_else(Cyclo::one)
        };
        let mut out = self.clone();
        for (&(a, b, c, d, p, q, i), v) in &self.f {
            let scale = lam(a, q, d) * lam(q, b, c) / (lam(a, b, p) * lam(p, c, d));
            out.f.insert((a, b, c, d, p, q, i), v * &scale);
        }
        for (&(a, b, c, d, p, q, i), v) in &self.g {
            let scale = lam(a, b, q) * lam(q, c, d) / (lam(a, p, d) * lam(p, b, c));
            out.g.insert((a, b, c, d, p, q, i), v * &scale);
        }
        Ok(out)
    }

    /// The one-parameter rescaling of the underlying datum that scales
    /// its two structure morphisms by xi and its inverse. On the scalar
    /// tables this leaves f and g fixed and moves only the weights:
    /// psi^2 -> xi^(-1) psi^2 and phi^2 -> xi phi^2. All conditions and
    /// derived invariants are unchanged.
    pub fn rescale(&self, xi: &Cyclo) -> Result<OrbifoldDatum, OrbifoldError> {
        if xi.is_zero() {
            return Err(OrbifoldError::RescaleZero);
        }
        let mut out = self.clone();
        let xinv = xi.inv();
        for v in &mut out.psi2 {
            *v = &*v * &xinv;
        }
        out.phi2 = &out.phi2 * xi;
        Ok(out)
    }

    /// True when the three unital families of f entries are all 1 on the
    /// t-support. Requires a distinguished unit label.
    pub fn is_unital(&self, _cat: &FusionCategoryData) -> Result<bool, OrbifoldError> {
        let io = self.iota.ok_or(OrbifoldError::NoIota)?;
        for a in 0..self.nb {
            for b in 0..self.nb {
                for c in 0..self.nb {
                    let i = match self.t(a, b, c) {
                        Some(o) => o,
                        None => continue,
                    };
                    let checks = [
                        self.f_val(a, io, b, c, a, b, i),
                        self.f_val(a, b, io, c, c, b, i),
                        self.f_val(a, b, c, io, c, a, i),
                    ];
                    if checks.iter().any(|v| !v.is_one()) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Gauge transform to the unital normalisation in which inserting the
    /// unit label in any of the three positions gives f = 1. Succeeds on
    /// data satisfying O1; returns the transformed datum.
    pub fn normalize_unital(&self, cat: &FusionCategoryData) -> Result<OrbifoldDatum, OrbifoldError> {
        let io = self.iota.ok_or(OrbifoldError::NoIota)?;
        let unit = cat.unit();
        let mut lambda: HashMap<(BIdx, BIdx, BIdx), Cyclo> = HashMap::new();
        for b in 0..self.nb {
            if self.t(b, b, io).is_none() {
                continue;
            }
            let v = self.f_val(b, b, io, io, io, b, unit);
            let inv = v
                .checked_inv()
                .ok_or_else(|| OrbifoldError::MissingUnitalEntry(self.fg_key_string((b, b, io, io, io, b, unit))))?;
            lambda.insert((b, b, io), inv);
        }
        for e in 0..self.nb {
            if self.t(e, io, e).is_none() {
                continue;
            }
            let v = self.f_val(e, io, io, e, e, io, unit);
            if v.is_zero() {
                return Err(OrbifoldError::MissingUnitalEntry(self.fg_key_string((e, io, io, e, e, io, unit))));
            }
            match lambda.get(&(e, io, e)) {
                Some(existing) if *existing != v => return Err(OrbifoldError::UnitTripleClash),
                _ => {
                    lambda.insert((e, io, e), v);
                }
            }
        }
        let out = self.gauge_transform(&lambda)?;
        if !out.is_unital(cat)? {
            return Err(OrbifoldError::NormalizationFailed);
        }
        Ok(out)
    }
}

/// Exact inverse of a square matrix over the cyclotomic field, None if
/// singular. Gauss-Jordan with first-nonzero pivoting.
pub fn invert_matrix(m: &[Vec<Cyclo>]) -> Option<Vec<Vec<Cyclo>>> {
    let n = m.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut a: Vec<Vec<Cyclo>> = m.to_vec();
    let mut inv: Vec<Vec<Cyclo>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Cyclo::one() } else { Cyclo::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let pv = a[col][col].clone();
        let pinv = pv.inv();
        for j in 0..n {
            a[col][j] = &a[col][j] * &pinv;
            inv[col][j] = &inv[col][j] * &pinv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..n {
                let t = &a[col][j] * &factor;
                a[r][j] = &a[r][j] - &t;
                let t = &inv[col][j] * &factor;
                inv[r][j] = &inv[r][j] - &t;
            }
        }
    }
    Some(inv)
}

/// The one-label datum living on the unit object: B = {iota}, t = unit,
/// f = g = 1 on the single supported key, psi^2 = phi^2 = 1. This is an
/// orbifold datum in any category, with orbifold category the ambient one.
pub fn trivial_datum(cat: &FusionCategoryData) -> OrbifoldDatum {
    let unit = cat.unit();
    let key = (0, 0, 0, 0, 0, 0, unit);
    OrbifoldDatum::new(
        DatumInput {
            labels: vec!["iota".to_string()],
            iota: Some(0),
            t: vec![((0, 0, 0), unit)],
            f: vec![(key, Cyclo::one())],
            g: vec![(key, Cyclo::one())],
            psi2: vec![Cyclo::one()],
            phi2: Cyclo::one(),
        },
        cat,
    )
    .expect("trivial datum is always valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ising::build_ising;

    #[test]
    fn trivial_datum_satisfies_all_conditions() {
        let cat = build_ising(0, 1).unwrap();
        let datum = trivial_datum(&cat);
        for cond in Condition::ALL {
            let rep = datum.check_condition(&cat, cond);
            assert!(rep.passed(), "{} failed: {:?}", cond.label(), rep.violations.first());
        }
        assert!(datum.verify_fast(&cat).is_ok());
        assert!(datum.is_unital(&cat).unwrap());
    }

    #[test]
    fn trivial_datum_g_derivation_and_gauge() {
        let cat = build_ising(3, -1).unwrap();
        let datum = trivial_datum(&cat);
        let derived = datum.derive_g(&cat).unwrap();
        assert_eq!(derived.g_val(0, 0, 0, 0, 0, 0, cat.unit()), Cyclo::one());
        // a gauge scalar on the one supported triple rescales f and g in
        // opposite directions
        let mut lam = HashMap::new();
        lam.insert((0, 0, 0), Cyclo::ratio(3, 2));
        let g = datum.gauge_transform(&lam).unwrap();
        // on the single key the f scale is lam(aqd) lam(qbc) / (lam(abp) lam(pcd)) = 1
        assert_eq!(g.f_val(0, 0, 0, 0, 0, 0, cat.unit()), Cyclo::one());
        for cond in Condition::ALL {
            assert!(g.check_condition(&cat, cond).passed());
        }
        let r = datum.rescale(&Cyclo::ratio(5, 7)).unwrap();
        for cond in Condition::ALL {
            assert!(r.check_condition(&cat, cond).passed());
        }
        assert_eq!(r.psi2(0), &Cyclo::ratio(7, 5));
        assert_eq!(r.phi2(), &Cyclo::ratio(5, 7));
        assert!(datum.rescale(&Cyclo::zero()).is_err());
    }

    #[test]
    fn constructor_rejects_unsupported_keys() {
        let cat = build_ising(0, 1).unwrap();
        let bad = DatumInput {
            labels: vec!["iota".to_string()],
            iota: Some(0),
            t: vec![((0, 0, 0), crate::ising::UNIT)],
            // sigma is not a channel of unit x unit
            f: vec![((0, 0, 0, 0, 0, 0, crate::ising::SIGMA), Cyclo::one())],
            g: vec![],
            psi2: vec![Cyclo::one()],
            phi2: Cyclo::one(),
        };
        assert!(matches!(
            OrbifoldDatum::new(bad, &cat),
            Err(OrbifoldError::KeyNotSupported { .. })
        ));
        let zero_psi = DatumInput {
            labels: vec!["iota".to_string()],
            iota: Some(0),
            t: vec![((0, 0, 0), crate::ising::UNIT)],
            f: vec![],
            g: vec![],
            psi2: vec![Cyclo::zero()],
            phi2: Cyclo::one(),
        };
        assert!(matches!(OrbifoldDatum::new(zero_psi, &cat), Err(OrbifoldError::PsiZero(_))));
    }

    #[test]
    fn matrix_inverse_exact() {
        let m = vec![
            vec![Cyclo::from_int(2), Cyclo::one()],
            vec![Cyclo::one(), Cyclo::one()],
        ];
        let inv = invert_matrix(&m).unwrap();
        assert_eq!(inv[0][0], Cyclo::one());
        assert_eq!(inv[0][1], Cyclo::from_int(-1));
        assert_eq!(inv[1][0], Cyclo::from_int(-1));
        assert_eq!(inv[1][1], Cyclo::from_int(2));
        let sing = vec![
            vec![Cyclo::one(), Cyclo::one()],
            vec![Cyclo::one(), Cyclo::one()],
        ];
        assert!(invert_matrix(&sing).is_none());
    }
}
