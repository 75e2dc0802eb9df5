//! Maximal chains of diagonal modules, their canonical periodic segments,
//! classification, simplices and adjacency.
//!
//! A chain is stored as one period of entries. An entry flagged `run`
//! belongs to a run group: the maximal block of consecutive run entries,
//! which repeats under global scaling by `t1` for every integer power.
//! The whole segment repeats under the global `period`. Since chains are
//! stable under scaling, a chain is the union of the scaling orbits of its
//! entries and is determined by its set of classes.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::{ideal_includes, Full, Gamma, IdealClass, PartialInfinite, Principal};
use crate::lattice::{
    components_include, components_to_string, normalize, permutations, permute_components,
    translate_components, Config, LatticeClass,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ChainType {
    P1I,
    P1II,
    P1III,
    P2I,
    P2II,
    P2III,
    P2IV,
    P2V,
    D5I,
    /// The inner-boundary chain of the rank-2 apartment.
    D5II,
    /// A boundary point of the rank-2 apartment.
    D5IV,
    /// The tree of `PGL(2)` over a rank-one field.
    Euclid,
    /// A boundary point of that tree.
    EuclidBoundary,
}

use ChainType::*;

impl ChainType {
    pub const ALL: [ChainType; 13] = [
        P1I, P1II, P1III, P2I, P2II, P2III, P2IV, P2V, D5I, D5II, D5IV, Euclid, EuclidBoundary,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            P1I => "P1-i",
            P1II => "P1-ii",
            P1III => "P1-iii",
            P2I => "P2-i",
            P2II => "P2-ii",
            P2III => "P2-iii",
            P2IV => "P2-iv",
            P2V => "P2-v",
            D5I => "D5-i",
            D5II => "D5-ii",
            D5IV => "D5-iv",
            Euclid => "E",
            EuclidBoundary => "E-boundary",
        }
    }

    pub fn from_tag(tag: &str) -> Option<ChainType> {
        Self::ALL.into_iter().find(|t| t.tag() == tag)
    }

    pub fn config(&self) -> Config {
        match self {
            P1I | P1II | P1III => Config::new(3, 1),
            P2I | P2II | P2III | P2IV | P2V => Config::new(3, 2),
            D5I | D5II | D5IV => Config::new(2, 2),
            Euclid | EuclidBoundary => Config::new(2, 1),
        }
    }

    pub fn for_config(config: Config) -> Vec<ChainType> {
        Self::ALL
            .into_iter()
            .filter(|t| t.config() == config)
            .collect()
    }

    /// Dimension of the simplex spanned by one chain of this type.
    pub fn simplex_dim(&self) -> usize {
        match self {
            P1I | P2I | P2II | P2III => 2,
            P1II | P2IV | D5I | D5II | Euclid => 1,
            P1III | P2V | D5IV | EuclidBoundary => 0,
        }
    }

    pub fn canonical(&self) -> ChainSegment {
        let o = Principal(Gamma::d2(0, 0));
        let mm = Principal(Gamma::d2(1, 0));
        let oc = PartialInfinite(0);
        let mc = PartialInfinite(1);
        let k = Full;
        let o1 = Principal(Gamma::d1(0));
        let m1 = Principal(Gamma::d1(1));
        let t1 = Gamma::d2(1, 0);
        let t2 = Gamma::d2(0, 1);
        let t = Gamma::d1(1);
        let (period, entries) = match self {
            P2I => (t1, vec![mem(&[o, o, o]), mem(&[mm, o, o]), mem(&[mm, mm, o])]),
            P2II => (
                t2,
                vec![
                    ins(&[oc, oc, oc]),
                    run(&[o, o, oc]),
                    run(&[mm, o, oc]),
                    ins(&[mc, mc, oc]),
                    run(&[mc, mc, o]),
                ],
            ),
            P2III => (
                t2,
                vec![
                    ins(&[oc, oc, oc]),
                    run(&[o, oc, oc]),
                    ins(&[mc, oc, oc]),
                    run(&[mc, o, oc]),
                    ins(&[mc, mc, oc]),
                    run(&[mc, mc, o]),
                ],
            ),
            P2IV => (t1, vec![mem(&[o, o, k]), mem(&[mm, o, k])]),
            P2V => (t1, vec![mem(&[o, k, k])]),
            P1I => (t, vec![mem(&[o1, o1, o1]), mem(&[o1, o1, m1]), mem(&[o1, m1, m1])]),
            P1II => (t, vec![mem(&[o1, o1, k]), mem(&[m1, o1, k])]),
            P1III => (t, vec![mem(&[o1, k, k])]),
            D5I => (t1, vec![mem(&[o, o]), mem(&[mm, o])]),
            D5II => (
                t2,
                vec![ins(&[oc, oc]), run(&[o, oc]), ins(&[mc, oc]), run(&[mc, o])],
            ),
            D5IV => (t1, vec![mem(&[o, k])]),
            Euclid => (t, vec![mem(&[o1, o1]), mem(&[m1, o1])]),
            EuclidBoundary => (t, vec![mem(&[o1, k])]),
        };
        ChainSegment {
            config: self.config(),
            entries,
            period,
        }
    }
}

impl fmt::Display for ChainType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Marker {
    Member,
    /// A module placed in the segment to mark a limit of a run; it is not a
    /// vertex of the chain's simplex.
    Inserted,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChainEntry {
    pub comps: Vec<IdealClass>,
    pub marker: Marker,
    pub run: bool,
}

fn mem(c: &[IdealClass]) -> ChainEntry {
    ChainEntry {
        comps: c.to_vec(),
        marker: Marker::Member,
        run: false,
    }
}

fn ins(c: &[IdealClass]) -> ChainEntry {
    ChainEntry {
        comps: c.to_vec(),
        marker: Marker::Inserted,
        run: false,
    }
}

fn run(c: &[IdealClass]) -> ChainEntry {
    ChainEntry {
        comps: c.to_vec(),
        marker: Marker::Member,
        run: true,
    }
}

/// One period of a maximal chain, from the largest module down.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChainSegment {
    pub config: Config,
    pub entries: Vec<ChainEntry>,
    pub period: Gamma,
}

/// A module of a finite piece of a chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expanded {
    pub comps: Vec<IdealClass>,
    pub marker: Marker,
    /// Index of the block (single entry or run group) within the period,
    /// offset by the period number so blocks of different periods differ.
    pub block: i64,
    pub run: bool,
}

impl ChainSegment {
    /// `out[perm[k]] = entry[k]`, then componentwise translation by `tau`.
    pub fn transform(&self, perm: &[usize], tau: &[Gamma]) -> Result<ChainSegment> {
        let entries = self
            .entries
            .iter()
            .map(|e| {
                Ok(ChainEntry {
                    comps: translate_components(&permute_components(&e.comps, perm), tau)?,
                    ..e.clone()
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ChainSegment {
            config: self.config,
            entries,
            period: self.period,
        })
    }

    /// The same chain read from entry `k`: the first `k` entries move to
    /// the end, scaled by the period. `k` may not split a run group.
    pub fn reindexed(&self, k: usize) -> Result<ChainSegment> {
        let k = k % self.entries.len().max(1);
        if k > 0 && self.entries[k].run && self.entries[k - 1].run {
            return Err(Error::Semantic("cannot reindex inside a run group".into()));
        }
        let mut entries = self.entries[k..].to_vec();
        for e in &self.entries[..k] {
            entries.push(ChainEntry {
                comps: crate::lattice::scale_components(&e.comps, &self.period)?,
                ..e.clone()
            });
        }
        Ok(ChainSegment {
            entries,
            ..self.clone()
        })
    }

    fn classes_with(&self, marker: Marker) -> Result<BTreeSet<LatticeClass>> {
        self.entries
            .iter()
            .filter(|e| e.marker == marker)
            .map(|e| normalize(e.comps.clone(), self.config))
            .collect()
    }

    /// Classes of the member modules: the vertices of the chain's simplex.
    pub fn member_classes(&self) -> Result<BTreeSet<LatticeClass>> {
        self.classes_with(Marker::Member)
    }

    pub fn inserted_classes(&self) -> Result<BTreeSet<LatticeClass>> {
        self.classes_with(Marker::Inserted)
    }

    pub fn contains_class(&self, l: &LatticeClass) -> Result<bool> {
        Ok(self.member_classes()?.contains(l))
    }

    /// Run groups as index ranges into `entries`, plus single entries.
    fn blocks(&self) -> Vec<(bool, std::ops::Range<usize>)> {
        let mut out: Vec<(bool, std::ops::Range<usize>)> = Vec::new();
        for (i, e) in self.entries.iter().enumerate() {
            match out.last_mut() {
                Some((true, r)) if e.run && r.end == i => r.end = i + 1,
                _ => out.push((e.run, i..i + 1)),
            }
        }
        out
    }

    /// The modules of periods `periods` in decreasing order, each run group
    /// unrolled over the `t1`-powers in `-span..=span`.
    pub fn expand(&self, periods: std::ops::RangeInclusive<i64>, span: i64) -> Result<Vec<Expanded>> {
        let step = Gamma::unit_step(self.config.dim);
        let mut out = Vec::new();
        if self.config.dim == 2 && self.period == step {
            // the t1-period repeats inside every power of t2: one block per
            // power of t2, separated by infinite gaps
            let t2 = Gamma::outer_step(2);
            for p in periods {
                for s in -span..=span {
                    let g = t2.scale(p) + step.scale(s);
                    for e in &self.entries {
                        out.push(Expanded {
                            comps: crate::lattice::scale_components(&e.comps, &g)?,
                            marker: e.marker,
                            block: p,
                            run: true,
                        });
                    }
                }
            }
            return Ok(out);
        }
        let blocks = self.blocks();
        let nb = blocks.len() as i64;
        for p in periods {
            let base = self.period.scale(p);
            for (bi, (is_run, range)) in blocks.iter().enumerate() {
                let block = p * nb + bi as i64;
                let shifts: Vec<i64> = if *is_run { (-span..=span).collect() } else { vec![0] };
                for s in shifts {
                    let g = base + step.scale(s);
                    for e in &self.entries[range.clone()] {
                        out.push(Expanded {
                            comps: crate::lattice::scale_components(&e.comps, &g)?,
                            marker: e.marker,
                            block,
                            run: *is_run,
                        });
                    }
                }
            }
        }
        Ok(out)
    }

    /// Checks that a finite piece of the chain is strictly decreasing
    /// under componentwise inclusion.
    pub fn is_totally_ordered(&self) -> Result<bool> {
        let ex = self.expand(-2..=2, 3)?;
        for w in ex.windows(2) {
            if w[0].comps == w[1].comps || !components_include(&w[0].comps, &w[1].comps)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The segment in text form, one period followed by its scaled first
    /// module. Inserted modules are quoted and run groups bracketed.
    pub fn display_entries(&self) -> Vec<String> {
        let dim = self.config.dim;
        let mut out = Vec::new();
        for (is_run, range) in self.blocks() {
            let texts: Vec<String> = self.entries[range]
                .iter()
                .map(|e| {
                    let s = components_to_string(&e.comps, dim);
                    match e.marker {
                        Marker::Inserted => format!("\"{s}\""),
                        Marker::Member => s,
                    }
                })
                .collect();
            if is_run {
                out.push(format!("[{}]*", texts.join(" > ")));
            } else {
                out.extend(texts);
            }
        }
        out
    }
}

impl fmt::Display for ChainSegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ; period {}", self.display_entries().join(" > "), self.period)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    P,
    Q,
    F,
}

fn kind(c: &IdealClass) -> Kind {
    match c {
        Principal(_) => Kind::P,
        PartialInfinite(_) => Kind::Q,
        Full => Kind::F,
    }
}

fn same_kinds(a: &[IdealClass], b: &[IdealClass]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| kind(x) == kind(y))
}

fn outer_of(c: &IdealClass) -> i64 {
    match c {
        Principal(g) => g.outer(),
        PartialInfinite(j) => *j,
        Full => 0,
    }
}

/// The componentwise translation carrying `from` onto `to` (equal kinds);
/// partially infinite and full positions get the smallest choice.
fn matching_tau(to: &[IdealClass], from: &[IdealClass], dim: u8) -> Vec<Gamma> {
    to.iter()
        .zip(from)
        .map(|(a, b)| match (a, b) {
            (Principal(x), Principal(y)) => *x - *y,
            (PartialInfinite(x), PartialInfinite(y)) => Gamma::d2(0, x - y),
            _ => Gamma::zero(dim),
        })
        .collect()
}

fn check_class_config(l: &LatticeClass, config: Config) -> Result<()> {
    config.check_same(&l.config())
}

/// Whether `l` can only sit in chains as an inserted module.
fn insertable(l: &LatticeClass) -> bool {
    let c = l.config();
    c.dim == 2 && !l.is_vertex() && l.components().iter().all(|x| kind(x) == Kind::Q)
}

/// All maximal chains of the apartment containing a representative of `l`,
/// one segment per distinct chain.
pub fn chains_through(l: &LatticeClass) -> Result<Vec<(ChainType, ChainSegment)>> {
    let config = l.config();
    config.check_supported()?;
    let as_inserted = insertable(l);
    if !l.is_vertex() && !as_inserted {
        return Err(Error::NotVertex(l.to_string()));
    }
    let wanted = if as_inserted {
        Marker::Inserted
    } else {
        Marker::Member
    };
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for t in ChainType::for_config(config) {
        let canon = t.canonical();
        for perm in permutations(config.m) {
            for e in canon.entries.iter().filter(|e| e.marker == wanted) {
                let moved = permute_components(&e.comps, &perm);
                if !same_kinds(&moved, l.components()) {
                    continue;
                }
                let tau = matching_tau(l.components(), &moved, config.dim);
                let seg = canon.transform(&perm, &tau)?;
                let key = (t, seg.member_classes()?, seg.inserted_classes()?);
                if seen.insert(key) {
                    out.push((t, seg));
                }
            }
        }
    }
    Ok(out)
}

fn preferred_type(l: &LatticeClass) -> Option<ChainType> {
    let c = l.config();
    Some(match (c.m, c.dim, l.type_code().as_str()) {
        (3, 2, "222") => P2I,
        (3, 2, "221") | (3, 2, "111") => P2II,
        (3, 2, "211") => P2III,
        (3, 2, "220") => P2IV,
        (3, 2, "200") => P2V,
        (3, 1, "111") => P1I,
        (3, 1, "110") => P1II,
        (3, 1, "100") => P1III,
        (2, 2, "22") => D5I,
        (2, 2, "21") | (2, 2, "11") => D5II,
        (2, 2, "20") => D5IV,
        (2, 1, "11") => Euclid,
        (2, 1, "10") => EuclidBoundary,
        _ => return None,
    })
}

/// The canonical maximal chain through `l`: the preferred type for its
/// vertex type, first permutation in lexicographic order, `l` itself as
/// the matching module.
pub fn maximal_chain_through(l: &LatticeClass) -> Result<(ChainType, ChainSegment)> {
    let t = preferred_type(l).ok_or_else(|| Error::NotVertex(l.to_string()))?;
    chains_through(l)?
        .into_iter()
        .find(|(u, _)| *u == t)
        .ok_or_else(|| Error::NotVertex(l.to_string()))
}

/// All types whose canonical segment matches `seg` up to the apartment's
/// Weyl action, global scaling and reindexing.
pub fn matching_types(seg: &ChainSegment) -> Result<Vec<ChainType>> {
    let config = seg.config;
    config.check_supported()?;
    if !seg.is_totally_ordered()? {
        return Ok(Vec::new());
    }
    let members = seg.member_classes()?;
    let inserted = seg.inserted_classes()?;
    let mut out = Vec::new();
    'types: for t in ChainType::for_config(config) {
        let canon = t.canonical();
        if canon.period != seg.period && canon.period != -seg.period {
            continue;
        }
        for perm in permutations(config.m) {
            for s in seg.entries.iter().filter(|e| e.marker == Marker::Member) {
                for a in canon.entries.iter().filter(|e| e.marker == Marker::Member) {
                    let moved = permute_components(&a.comps, &perm);
                    if !same_kinds(&moved, &s.comps) {
                        continue;
                    }
                    let tau = matching_tau(&s.comps, &moved, config.dim);
                    let cand = canon.transform(&perm, &tau)?;
                    if cand.member_classes()? == members && cand.inserted_classes()? == inserted {
                        out.push(t);
                        continue 'types;
                    }
                }
            }
        }
    }
    Ok(out)
}

pub fn classify_chain(seg: &ChainSegment) -> Result<ChainType> {
    let types = matching_types(seg)?;
    match types.as_slice() {
        [t] => Ok(*t),
        [] => Err(Error::Unclassified),
        _ => Err(Error::Semantic(format!(
            "segment matches several types: {}",
            types.iter().map(|t| t.tag()).collect::<Vec<_>>().join(", ")
        ))),
    }
}

/// A nondegenerate simplex given by its vertex classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassSimplex {
    pub vertices: Vec<LatticeClass>,
    pub dim: usize,
}

/// The simplex spanned by the member classes of one period. Inserted
/// modules are skipped.
pub fn simplices_from_chain(t: ChainType, seg: &ChainSegment) -> Result<Vec<ClassSimplex>> {
    if !matching_types(seg)?.contains(&t) {
        return Err(Error::TypeMismatch(t.tag().to_string()));
    }
    let vertices: Vec<LatticeClass> = seg.member_classes()?.into_iter().collect();
    let dim = vertices.len() - 1;
    if dim != t.simplex_dim() {
        return Err(Error::TypeMismatch(t.tag().to_string()));
    }
    Ok(vec![ClassSimplex { vertices, dim }])
}

/// Whether two vertex classes lie on a common maximal chain.
///
/// Both classes must be images of member modules `a`, `b` of one canonical
/// segment under the same permutation and componentwise translation `τ`,
/// up to a global scaling `γ` of the second. Each position constrains
/// `τ_k` and then `γ`: fully when both modules are principal there, only
/// in the outer coordinate when a partially infinite module is involved.
pub fn adjacent(l1: &LatticeClass, l2: &LatticeClass) -> Result<bool> {
    let config = l1.config();
    check_class_config(l2, config)?;
    config.check_supported()?;
    for l in [l1, l2] {
        if !l.is_vertex() {
            return Err(Error::NotVertex(l.to_string()));
        }
    }
    if l1 == l2 {
        return Ok(true);
    }
    for t in ChainType::for_config(config) {
        let canon = t.canonical();
        let members: Vec<&ChainEntry> = canon
            .entries
            .iter()
            .filter(|e| e.marker == Marker::Member)
            .collect();
        for perm in permutations(config.m) {
            for (ia, a) in members.iter().enumerate() {
                let ea = permute_components(&a.comps, &perm);
                if !same_kinds(&ea, l1.components()) {
                    continue;
                }
                for (ib, b) in members.iter().enumerate() {
                    if ia == ib {
                        continue;
                    }
                    let eb = permute_components(&b.comps, &perm);
                    if same_kinds(&eb, l2.components())
                        && solvable(l1.components(), &ea, l2.components(), &eb)
                    {
                        return Ok(true);
                    }
                }
            }
        }
    }
    Ok(false)
}

fn solvable(l1: &[IdealClass], ea: &[IdealClass], l2: &[IdealClass], eb: &[IdealClass]) -> bool {
    let mut exact: Option<Gamma> = None;
    let mut outer: Option<i64> = None;
    for k in 0..l1.len() {
        if kind(&ea[k]) == Kind::F {
            continue;
        }
        let tau_outer = outer_of(&l1[k]) - outer_of(&ea[k]);
        match (&ea[k], &eb[k], &l2[k]) {
            (Principal(a), Principal(b), Principal(c)) => {
                let tau = match l1[k] {
                    Principal(x) => x - *a,
                    _ => return false,
                };
                let g = *b + tau - *c;
                if exact.is_some_and(|e| e != g) {
                    return false;
                }
                exact = Some(g);
            }
            _ => {
                let g = outer_of(&eb[k]) + tau_outer - outer_of(&l2[k]);
                if outer.is_some_and(|o| o != g) {
                    return false;
                }
                outer = Some(g);
            }
        }
    }
    match (exact, outer) {
        (Some(e), Some(o)) => e.outer() == o,
        _ => true,
    }
}

fn ideal_options(dim: u8, window: i64) -> Vec<IdealClass> {
    let mut v = Vec::new();
    match dim {
        1 => v.extend((-window..=window).map(|i| Principal(Gamma::d1(i)))),
        _ => {
            for j in -window..=window {
                for i in -window..=window {
                    v.push(Principal(Gamma::d2(i, j)));
                }
            }
            v.extend((-window..=window).map(PartialInfinite));
        }
    }
    v.push(Full);
    v
}

/// Every diagonal module between `hi` and `lo` with exponents in
/// `[-window, window]`.
pub fn enumerate_intermediate(
    hi: &[IdealClass],
    lo: &[IdealClass],
    window: i64,
    config: Config,
) -> Result<Vec<Vec<IdealClass>>> {
    config.check_supported()?;
    for c in hi.iter().chain(lo) {
        c.check_dim(config.dim)?;
    }
    if hi.len() != config.m || lo.len() != config.m {
        return Err(Error::RankMismatch {
            expected: config.m,
            got: hi.len().min(lo.len()),
        });
    }
    if !components_include(hi, lo)? {
        return Err(Error::NotNested);
    }
    let opts = ideal_options(config.dim, window);
    let mut per: Vec<Vec<IdealClass>> = Vec::new();
    for k in 0..config.m {
        let mut v = Vec::new();
        for c in &opts {
            if ideal_includes(&hi[k], c)? && ideal_includes(c, &lo[k])? {
                v.push(*c);
            }
        }
        per.push(v);
    }
    let mut out: Vec<Vec<IdealClass>> = vec![Vec::new()];
    for choices in per {
        out = out
            .into_iter()
            .flat_map(|p| {
                choices.iter().map(move |c| {
                    let mut q = p.clone();
                    q.push(*c);
                    q
                })
            })
            .collect();
    }
    Ok(out)
}

/// Componentwise translation bringing a nested pair next to the origin.
fn recentre(hi: &[IdealClass], lo: &[IdealClass], dim: u8) -> Result<(Vec<IdealClass>, Vec<IdealClass>)> {
    let tau: Vec<Gamma> = hi
        .iter()
        .zip(lo)
        .map(|(a, b)| match (a, b) {
            (Principal(g), _) | (Full, Principal(g)) => -*g,
            (PartialInfinite(j), _) | (Full, PartialInfinite(j)) => -Gamma::d2(0, *j),
            _ => Gamma::zero(dim),
        })
        .collect();
    Ok((translate_components(hi, &tau)?, translate_components(lo, &tau)?))
}

/// Checks that no module lies strictly between consecutive modules of the
/// chain. Gaps between a run group and its limit are infinite by design
/// and skipped.
pub fn check_saturated(seg: &ChainSegment, window: i64) -> Result<std::result::Result<(), String>> {
    let ex = seg.expand(-1..=1, 2)?;
    let dim = seg.config.dim;
    for w in ex.windows(2) {
        let (x, y) = (&w[0], &w[1]);
        if x.block != y.block && (x.run || y.run) {
            continue;
        }
        if x.comps == y.comps || !components_include(&x.comps, &y.comps)? {
            return Ok(Err(format!(
                "{} does not strictly contain {}",
                components_to_string(&x.comps, dim),
                components_to_string(&y.comps, dim)
            )));
        }
        let (hi, lo) = recentre(&x.comps, &y.comps, dim)?;
        let between = enumerate_intermediate(&hi, &lo, window, seg.config)?;
        if let Some(z) = between.iter().find(|z| **z != hi && **z != lo) {
            return Ok(Err(format!(
                "{} lies between {} and {}",
                components_to_string(z, dim),
                components_to_string(&hi, dim),
                components_to_string(&lo, dim)
            )));
        }
    }
    Ok(Ok(()))
}

/// Every vertex class with exponents in `[-bound, bound]`.
pub fn vertex_classes_in_box(config: Config, bound: i64) -> Result<Vec<LatticeClass>> {
    config.check_supported()?;
    let opts = ideal_options(config.dim, bound);
    let mut out = BTreeSet::new();
    let mut idx = vec![0usize; config.m];
    loop {
        let comps: Vec<IdealClass> = idx.iter().map(|&i| opts[i]).collect();
        if comps.iter().any(|c| !c.is_full()) {
            let l = normalize(comps.clone(), config)?;
            if l.components() == comps.as_slice() && l.is_vertex() {
                out.insert(l);
            }
        }
        let mut k = 0;
        loop {
            if k == config.m {
                return Ok(out.into_iter().collect());
            }
            idx[k] += 1;
            if idx[k] < opts.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Brute-force maximality: every vertex class in the box whose module is
/// comparable with a long piece of the chain already belongs to it.
pub fn check_maximal(seg: &ChainSegment, bound: i64) -> Result<std::result::Result<(), LatticeClass>> {
    let ex = seg.expand(-4..=4, 4)?;
    let members = seg.member_classes()?;
    for v in vertex_classes_in_box(seg.config, bound)? {
        if members.contains(&v) {
            continue;
        }
        let mut comparable = true;
        for e in &ex {
            if !components_include(v.components(), &e.comps)?
                && !components_include(&e.comps, v.components())?
            {
                comparable = false;
                break;
            }
        }
        if comparable {
            return Ok(Err(v));
        }
    }
    Ok(Ok(()))
}
