//! Multiplicity-free braided fusion category data and structural checks.
//!
//! Objects are indices into a name table. Fusion coefficients N_ij^k take
//! values in {0, 1}. Associator data is held as sparse maps from index
//! tuples to exact scalars; an absent key reads as exact zero. Two
//! families are stored:
//!
//! - `F[(i,j,k,l,p,q)]`, where p ranges over fuse(j,k) with l in
//!   fuse(i,p), and q over fuse(i,j) with l in fuse(q,k);
//! - `G[(i,j,k,l,q,p)]`, the blockwise inverse, with the index roles
//!   swapped (first lower index of type q, second of type p).
//!
//! Braiding scalars `R[(i,j,k)]` and their inverses are kept as separate
//! tables so no implicit inversion happens during checks.

use crate::cyclotomic::Cyclo;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::HashMap;
use thiserror::Error;

/// Object index into a category's name table.
pub type Obj = usize;

/// Key (i, j, k, l, a, b) for an F or G entry. For F, a is the p-type
/// index and b the q-type one; for G the roles are reversed.
pub type FKey = (Obj, Obj, Obj, Obj, Obj, Obj);

/// Key (i, j, k) for a braiding scalar with k in fuse(i, j).
pub type RKey = (Obj, Obj, Obj);

/// Raw input for [`FusionCategoryData::new`]. Fields use object indices;
/// name translation for documents lives in the json module.
#[derive(Clone)]
pub struct CategoryInput {
    pub names: Vec<String>,
    pub unit: Obj,
    pub dual: Vec<Obj>,
    pub fusion: Vec<(Obj, Obj, Obj)>,
    pub f: Vec<(FKey, Cyclo)>,
    pub g: Vec<(FKey, Cyclo)>,
    pub r: Vec<(RKey, Cyclo)>,
    pub rinv: Vec<(RKey, Cyclo)>,
    pub twist: Vec<Cyclo>,
    pub qdim: Vec<Cyclo>,
}

#[derive(Debug, Error)]
pub enum FusionDataError {
    #[error("object index {0} out of range")]
    BadObject(usize),
    #[error("unit axiom violated for objects ({0}, {1})")]
    UnitAxiom(usize, usize),
    #[error("dual pairing missing for object {0}")]
    DualPairing(usize),
    #[error("{table} key {key:?} not allowed by fusion")]
    DisallowedKey { table: &'static str, key: String },
    #[error("{table} entry {key:?} with a unit leg must be 1")]
    UnitLeg { table: &'static str, key: String },
    #[error("duplicate {table} key {key}")]
    DuplicateKey { table: &'static str, key: String },
    #[error("table {0} has wrong length")]
    BadLength(&'static str),
    #[error("quantum dimensions incompatible with fusion at ({0}, {1})")]
    QdimFusion(usize, usize),
    #[error("global dimension is not a perfect square rational, cannot take exact root")]
    AnomalyRoot,
}

/// One failed identity instance, with both sides evaluated exactly.
#[derive(Clone, Debug)]
pub struct Violation {
    pub indices: Vec<String>,
    pub lhs: Cyclo,
    pub rhs: Cyclo,
}

/// Outcome of scanning one identity family over all its free indices.
/// Collection stops after [`MAX_VIOLATIONS`] failures; `truncated` marks
/// that the scan ended early.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub label: String,
    pub checked: u64,
    pub violations: Vec<Violation>,
    pub truncated: bool,
    cap: usize,
}

pub const MAX_VIOLATIONS: usize = 100;

impl CheckReport {
    pub fn new(label: &str) -> CheckReport {
        CheckReport::with_cap(label, MAX_VIOLATIONS)
    }

    /// Report that stops collecting after `cap` violations; cap 1 gives a
    /// fail-fast scan.
    pub fn with_cap(label: &str, cap: usize) -> CheckReport {
        CheckReport {
            label: label.to_string(),
            checked: 0,
            violations: Vec::new(),
            truncated: false,
            cap: cap.max(1),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty() && !self.truncated
    }

    /// Records one instance; returns false once the violation cap is hit
    /// so scans can stop early.
    pub fn record(&mut self, indices: Vec<String>, lhs: Cyclo, rhs: Cyclo) -> bool {
        self.checked += 1;
        if lhs != rhs {
            self.violations.push(Violation { indices, lhs, rhs });
            if self.violations.len() >= self.cap {
                self.truncated = true;
                return false;
            }
        }
        true
    }
}

/// A multiplicity-free braided fusion category with chosen F/G data,
/// braiding, twists and quantum dimensions.
#[derive(Clone)]
pub struct FusionCategoryData {
    names: Vec<String>,
    unit: Obj,
    dual: Vec<Obj>,
    n_table: Vec<bool>,
    f: HashMap<FKey, Cyclo>,
    g: HashMap<FKey, Cyclo>,
    r: HashMap<RKey, Cyclo>,
    rinv: HashMap<RKey, Cyclo>,
    twist: Vec<Cyclo>,
    qdim: Vec<Cyclo>,
}

impl FusionCategoryData {
    pub fn new(input: CategoryInput) -> Result<FusionCategoryData, FusionDataError> {
        let n = input.names.len();
        let check_obj = |o: Obj| if o < n { Ok(()) } else { Err(FusionDataError::BadObject(o)) };
        check_obj(input.unit)?;
        if input.dual.len() != n {
            return Err(FusionDataError::BadLength("dual"));
        }
        if input.twist.len() != n {
            return Err(FusionDataError::BadLength("twist"));
        }
        if input.qdim.len() != n {
            return Err(FusionDataError::BadLength("qdim"));
        }
        let mut n_table = vec![false; n * n * n];
        for &(i, j, k) in &input.fusion {
            check_obj(i)?;
            check_obj(j)?;
            check_obj(k)?;
            n_table[(i * n + j) * n + k] = true;
        }
        let mut cat = FusionCategoryData {
            names: input.names,
            unit: input.unit,
            dual: input.dual,
            n_table,
            f: HashMap::new(),
            g: HashMap::new(),
            r: HashMap::new(),
            rinv: HashMap::new(),
            twist: input.twist,
            qdim: input.qdim,
        };
        for i in 0..n {
            for j in 0..n {
                // unit column and row of the fusion table are Kronecker deltas
                if (cat.n(cat.unit, i, j) == 1) != (i == j) || (cat.n(i, cat.unit, j) == 1) != (i == j) {
                    return Err(FusionDataError::UnitAxiom(i, j));
                }
            }
            if cat.n(i, cat.dual[i], cat.unit) != 1 || cat.n(cat.dual[i], i, cat.unit) != 1 {
                return Err(FusionDataError::DualPairing(i));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let lhs: Cyclo = (0..n)
                    .filter(|&k| cat.n(i, j, k) == 1)
                    .map(|k| cat.qdim[k].clone())
                    .fold(Cyclo::zero(), |a, b| a + b);
                if lhs != &cat.qdim[i] * &cat.qdim[j] {
                    return Err(FusionDataError::QdimFusion(i, j));
                }
            }
        }

        for (key, val) in input.f {
            let (i, j, k, l, p, q) = key;
            for o in [i, j, k, l, p, q] {
                check_obj(o)?;
            }
            if !cat.f_key_allowed(key) {
                return Err(FusionDataError::DisallowedKey { table: "F", key: format!("{:?}", key) });
            }
            if (i == cat.unit || j == cat.unit || k == cat.unit) && !val.is_one() {
                return Err(FusionDataError::UnitLeg { table: "F", key: format!("{:?}", key) });
            }
            if cat.f.insert(key, val).is_some() {
                return Err(FusionDataError::DuplicateKey { table: "F", key: format!("{:?}", key) });
            }
        }
        for (key, val) in input.g {
            let (i, j, k, l, q, p) = key;
            for o in [i, j, k, l, q, p] {
                check_obj(o)?;
            }
            if !cat.g_key_allowed(key) {
                return Err(FusionDataError::DisallowedKey { table: "G", key: format!("{:?}", key) });
            }
            if (i == cat.unit || j == cat.unit || k == cat.unit) && !val.is_one() {
                return Err(FusionDataError::UnitLeg { table: "G", key: format!("{:?}", key) });
            }
            if cat.g.insert(key, val).is_some() {
                return Err(FusionDataError::DuplicateKey { table: "G", key: format!("{:?}", key) });
            }
        }
        for (table, entries, map) in [("R", input.r, &mut cat.r), ("Rinv", input.rinv, &mut cat.rinv)] {
            for (key, val) in entries {
                let (i, j, k) = key;
                if i >= n || j >= n || k >= n {
                    return Err(FusionDataError::BadObject(i.max(j).max(k)));
                }
                if !cat.n_table[(i * n + j) * n + k] {
                    return Err(FusionDataError::DisallowedKey { table, key: format!("{:?}", key) });
                }
                if (i == cat.unit || j == cat.unit) && !val.is_one() {
                    return Err(FusionDataError::UnitLeg { table, key: format!("{:?}", key) });
                }
                if map.insert(key, val).is_some() {
                    return Err(FusionDataError::DuplicateKey { table, key: format!("{:?}", key) });
                }
            }
        }
        cat.fill_unit_entries();
        Ok(cat)
    }

    // Unit-leg associator and braiding entries are 1 in the normalised
    // gauge; fill any the input left out so sparse inputs stay small.
    fn fill_unit_entries(&mut self) {
        let n = self.names.len();
        let u = self.unit;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if i != u && j != u && k != u {
                        continue;
                    }
                    for l in 0..n {
                        for p in self.fuse(j, k) {
                            if self.n(i, p, l) == 0 {
                                continue;
                            }
                            for q in self.fuse(i, j) {
                                if self.n(q, k, l) == 0 {
                                    continue;
                                }
                                self.f.entry((i, j, k, l, p, q)).or_insert_with(Cyclo::one);
                                self.g.entry((i, j, k, l, q, p)).or_insert_with(Cyclo::one);
                            }
                        }
                    }
                }
                if i == u || j == u {
                    for k in self.fuse(i, j) {
                        self.r.entry((i, j, k)).or_insert_with(Cyclo::one);
                        self.rinv.entry((i, j, k)).or_insert_with(Cyclo::one);
                    }
                }
            }
        }
    }

    fn f_key_allowed(&self, (i, j, k, l, p, q): FKey) -> bool {
        self.n(j, k, p) == 1 && self.n(i, p, l) == 1 && self.n(i, j, q) == 1 && self.n(q, k, l) == 1
    }

    fn g_key_allowed(&self, (i, j, k, l, q, p): FKey) -> bool {
        self.n(i, j, q) == 1 && self.n(q, k, l) == 1 && self.n(j, k, p) == 1 && self.n(i, p, l) == 1
    }

    pub fn object_count(&self) -> usize {
        self.names.len()
    }

    pub fn objects(&self) -> std::ops::Range<Obj> {
        0..self.names.len()
    }

    pub fn name(&self, i: Obj) -> &str {
        &self.names[i]
    }

    pub fn object_by_name(&self, s: &str) -> Option<Obj> {
        self.names.iter().position(|n| n == s)
    }

    pub fn unit(&self) -> Obj {
        self.unit
    }

    pub fn dual(&self, i: Obj) -> Obj {
        self.dual[i]
    }

    pub fn n(&self, i: Obj, j: Obj, k: Obj) -> u8 {
        let n = self.names.len();
        u8::from(self.n_table[(i * n + j) * n + k])
    }

    pub fn fuse(&self, i: Obj, j: Obj) -> Vec<Obj> {
        (0..self.names.len()).filter(|&k| self.n(i, j, k) == 1).collect()
    }

    /// F entry, exact zero when absent.
    pub fn f_sym(&self, i: Obj, j: Obj, k: Obj, l: Obj, p: Obj, q: Obj) -> Cyclo {
        self.f.get(&(i, j, k, l, p, q)).cloned().unwrap_or_else(Cyclo::zero)
    }

    /// G entry, exact zero when absent. First lower index of q-type,
    /// second of p-type.
    pub fn g_sym(&self, i: Obj, j: Obj, k: Obj, l: Obj, q: Obj, p: Obj) -> Cyclo {
        self.g.get(&(i, j, k, l, q, p)).cloned().unwrap_or_else(Cyclo::zero)
    }

    pub fn r_sym(&self, i: Obj, j: Obj, k: Obj) -> Cyclo {
        self.r.get(&(i, j, k)).cloned().unwrap_or_else(Cyclo::zero)
    }

    pub fn rinv_sym(&self, i: Obj, j: Obj, k: Obj) -> Cyclo {
        self.rinv.get(&(i, j, k)).cloned().unwrap_or_else(Cyclo::zero)
    }

    pub fn twist(&self, i: Obj) -> &Cyclo {
        &self.twist[i]
    }

    pub fn qdim(&self, i: Obj) -> &Cyclo {
        &self.qdim[i]
    }

    pub fn f_entries(&self) -> impl Iterator<Item = (&FKey, &Cyclo)> {
        self.f.iter()
    }

    pub fn g_entries(&self) -> impl Iterator<Item = (&FKey, &Cyclo)> {
        self.g.iter()
    }

    pub fn r_entries(&self) -> impl Iterator<Item = (&RKey, &Cyclo)> {
        self.r.iter()
    }

    pub fn rinv_entries(&self) -> impl Iterator<Item = (&RKey, &Cyclo)> {
        self.rinv.iter()
    }

    /// Sum of squared quantum dimensions.
    pub fn global_dimension(&self) -> Cyclo {
        self.objects().map(|i| self.qdim(i) * self.qdim(i)).fold(Cyclo::zero(), |a, b| a + b)
    }

    /// Multiplicative central charge: sum of d_i^2 theta_i over the
    /// positive square root of the global dimension. The root is taken
    /// exactly and only for perfect-square rational global dimensions.
    pub fn anomaly(&self) -> Result<Cyclo, FusionDataError> {
        let dim = self.global_dimension();
        let root = exact_sqrt_rational(&dim).ok_or(FusionDataError::AnomalyRoot)?;
        let num = self
            .objects()
            .map(|i| self.qdim(i) * self.qdim(i) * self.twist(i))
            .fold(Cyclo::zero(), |a, b| a + b);
        Ok(num / root)
    }

    /// Blockwise inverse test: for every admissible (i, j, k, l) the F and
    /// G blocks must compose to identity in both orders.
    pub fn check_fg_inverse(&self) -> CheckReport {
        let mut rep = CheckReport::new("FG");
        'outer: for i in self.objects() {
            for j in self.objects() {
                for k in self.objects() {
                    for l in self.objects() {
                        let ps: Vec<Obj> = self
                            .fuse(j, k)
                            .into_iter()
                            .filter(|&p| self.n(i, p, l) == 1)
                            .collect();
                        let qs: Vec<Obj> = self
                            .fuse(i, j)
                            .into_iter()
                            .filter(|&q| self.n(q, k, l) == 1)
                            .collect();
                        if ps.is_empty() && qs.is_empty() {
                            continue;
                        }
                        for (ai, &a) in ps.iter().enumerate() {
                            for (bi, &b) in ps.iter().enumerate() {
                                let sum = qs
                                    .iter()
                                    .map(|&q| self.f_sym(i, j, k, l, a, q) * self.g_sym(i, j, k, l, q, b))
                                    .fold(Cyclo::zero(), |x, y| x + y);
                                let want = if ai == bi { Cyclo::one() } else { Cyclo::zero() };
                                let idx = vec![
                                    format!("block=({},{},{},{})", self.name(i), self.name(j), self.name(k), self.name(l)),
                                    format!("FG p={} p'={}", self.name(a), self.name(b)),
                                ];
                                if !rep.record(idx, sum, want) {
                                    break 'outer;
                                }
                            }
                        }
                        for (ai, &a) in qs.iter().enumerate() {
                            for (bi, &b) in qs.iter().enumerate() {
                                let sum = ps
                                    .iter()
                                    .map(|&p| self.g_sym(i, j, k, l, a, p) * self.f_sym(i, j, k, l, p, b))
                                    .fold(Cyclo::zero(), |x, y| x + y);
                                let want = if ai == bi { Cyclo::one() } else { Cyclo::zero() };
                                let idx = vec![
                                    format!("block=({},{},{},{})", self.name(i), self.name(j), self.name(k), self.name(l)),
                                    format!("GF q={} q'={}", self.name(a), self.name(b)),
                                ];
                                if !rep.record(idx, sum, want) {
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
            }
        }
        rep
    }

    /// Pentagon identity over all nine free object indices, reading
    /// absent F entries as zero:
    /// F(s,d,e;a)[q,r] F(b,c,q;a)[p,s]
    ///   = sum_x F(c,d,e;p)[q,x] F(b,x,e;a)[p,r] F(b,c,d;r)[x,s].
    pub fn check_pentagon(&self) -> CheckReport {
        let mut rep = CheckReport::new("pentagon");
        let objs: Vec<Obj> = self.objects().collect();
        'outer: for &a in &objs {
            for &b in &objs {
                for &c in &objs {
                    for &d in &objs {
                        for &e in &objs {
                            for &p in &objs {
                                for &q in &objs {
                                    for &r in &objs {
                                        for &s in &objs {
                                            let lhs = self.f_sym(s, d, e, a, q, r) * self.f_sym(b, c, q, a, p, s);
                                            let rhs = objs
                                                .iter()
                                                .map(|&x| {
                                                    self.f_sym(c, d, e, p, q, x)
                                                        * self.f_sym(b, x, e, a, p, r)
                                                        * self.f_sym(b, c, d, r, x, s)
                                                })
                                                .fold(Cyclo::zero(), |u, v| u + v);
                                            if lhs.is_zero() && rhs.is_zero() {
                                                rep.checked += 1;
                                                continue;
                                            }
                                            let idx = vec![format!(
                                                "(a..s)=({},{},{},{},{},{},{},{},{})",
                                                self.name(a), self.name(b), self.name(c), self.name(d), self.name(e),
                                                self.name(p), self.name(q), self.name(r), self.name(s)
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
            }
        }
        rep
    }

    /// Both hexagon identities (with R and with its inverse):
    /// R(c,a;e) F(a,c,b;d)[f,e] R(c,b;f)
    ///   = sum_g F(c,a,b;d)[g,e] R(c,g;d) F(a,b,c;d)[f,g].
    pub fn check_hexagon(&self) -> CheckReport {
        let mut rep = CheckReport::new("hexagon");
        let objs: Vec<Obj> = self.objects().collect();
        'outer: for &a in &objs {
            for &b in &objs {
                for &c in &objs {
                    for &d in &objs {
                        for &e in &objs {
                            for &f in &objs {
                                for (tag, pos) in [("R", true), ("Rinv", false)] {
                                    let rr = |x: Obj, y: Obj, z: Obj| {
                                        if pos { self.r_sym(x, y, z) } else { self.rinv_sym(x, y, z) }
                                    };
                                    let lhs = rr(c, a, e) * self.f_sym(a, c, b, d, f, e) * rr(c, b, f);
                                    let rhs = objs
                                        .iter()
                                        .map(|&g| {
                                            self.f_sym(c, a, b, d, g, e) * rr(c, g, d) * self.f_sym(a, b, c, d, f, g)
                                        })
                                        .fold(Cyclo::zero(), |u, v| u + v);
                                    if lhs.is_zero() && rhs.is_zero() {
                                        rep.checked += 1;
                                        continue;
                                    }
                                    let idx = vec![format!(
                                        "{} (a,b,c,d,e,f)=({},{},{},{},{},{})",
                                        tag,
                                        self.name(a), self.name(b), self.name(c),
                                        self.name(d), self.name(e), self.name(f)
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

    /// Twists must be compatible with braiding on every fusion channel:
    /// R(i,j;k) Rinv(j,i;k) = 1 and theta_k = theta_i theta_j R(i,j;k) R(j,i;k).
    pub fn check_twist_braiding(&self) -> CheckReport {
        let mut rep = CheckReport::new("twist");
        'outer: for i in self.objects() {
            for j in self.objects() {
                for k in self.fuse(i, j) {
                    let prod = self.r_sym(i, j, k) * self.rinv_sym(i, j, k);
                    let idx = vec![format!("RRinv ({},{};{})", self.name(i), self.name(j), self.name(k))];
                    if !rep.record(idx, prod, Cyclo::one()) {
                        break 'outer;
                    }
                    let lhs = self.twist(k).clone();
                    let rhs = self.twist(i) * self.twist(j) * self.r_sym(i, j, k) * self.r_sym(j, i, k);
                    let idx = vec![format!("theta ({},{};{})", self.name(i), self.name(j), self.name(k))];
                    if !rep.record(idx, lhs, rhs) {
                        break 'outer;
                    }
                }
            }
        }
        rep
    }
}

/// Exact positive square root of a nonnegative perfect-square rational,
/// None for anything else.
pub fn exact_sqrt_rational(x: &Cyclo) -> Option<Cyclo> {
    let r = x.as_rational()?;
    if r < num_rational::BigRational::zero() {
        return None;
    }
    let num: BigInt = r.numer().sqrt();
    let den: BigInt = r.denom().sqrt();
    if &(&num * &num) == r.numer() && &(&den * &den) == r.denom() {
        Some(Cyclo::from_rational(num_rational::BigRational::new(num, den)))
    } else {
        None
    }
}
