//! Diagonal lattice classes `⟨a_1 e_1 ⊕ … ⊕ a_m e_m⟩` modulo scaling.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::{ideal_translate, oclosure, Full, Gamma, IdealClass, PartialInfinite, Principal};

/// Group rank `m` and field dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Config {
    pub m: usize,
    pub dim: u8,
}

impl Config {
    pub const fn new(m: usize, dim: u8) -> Self {
        Config { m, dim }
    }

    /// The four affine configurations handled by lattice classes.
    pub const AFFINE: [Config; 4] = [
        Config::new(2, 1),
        Config::new(2, 2),
        Config::new(3, 1),
        Config::new(3, 2),
    ];

    pub fn check_supported(&self) -> Result<()> {
        if (self.m == 2 || self.m == 3) && (self.dim == 1 || self.dim == 2) {
            Ok(())
        } else {
            Err(Error::Unsupported {
                m: self.m,
                dim: self.dim,
            })
        }
    }

    pub fn zero(&self) -> Gamma {
        Gamma::zero(self.dim)
    }

    pub fn check_same(&self, other: &Config) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        if self.m != other.m {
            return Err(Error::RankMismatch {
                expected: self.m,
                got: other.m,
            });
        }
        Ok(())
    }
}

/// A diagonal lattice class in canonical form.
///
/// The first principal component has exponent zero; failing that, the
/// first partially infinite component is `P(0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeClass {
    config: Config,
    comps: Vec<IdealClass>,
}

/// The scaling that brings `comps` to canonical form.
fn anchor_shift(comps: &[IdealClass], dim: u8) -> Option<Gamma> {
    comps
        .iter()
        .find_map(|c| match c {
            Principal(g) => Some(-*g),
            _ => None,
        })
        .or_else(|| {
            comps.iter().find_map(|c| match c {
                PartialInfinite(j) => Some(Gamma::d2(0, -j)),
                _ => None,
            })
        })
        .map(|g| if g.dim() == dim { g } else { Gamma::zero(dim) })
}

/// Multiplies every component by the same monomial.
pub fn scale_components(comps: &[IdealClass], g: &Gamma) -> Result<Vec<IdealClass>> {
    comps.iter().map(|c| ideal_translate(c, g)).collect()
}

/// Componentwise translation by `tau`.
pub fn translate_components(comps: &[IdealClass], tau: &[Gamma]) -> Result<Vec<IdealClass>> {
    if comps.len() != tau.len() {
        return Err(Error::RankMismatch {
            expected: comps.len(),
            got: tau.len(),
        });
    }
    comps
        .iter()
        .zip(tau)
        .map(|(c, g)| ideal_translate(c, g))
        .collect()
}

/// Componentwise `⊇`.
pub fn components_include(a: &[IdealClass], b: &[IdealClass]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::RankMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    for (x, y) in a.iter().zip(b) {
        if !crate::gamma::ideal_includes(x, y)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All permutations of `0..m` in lexicographic order.
pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for k in 0..used.len() {
            if !used[k] {
                used[k] = true;
                cur.push(k);
                go(cur, used, out);
                cur.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(m), &mut vec![false; m], &mut out);
    out
}

/// Moves component `k` to position `perm[k]`.
pub fn permute_components<T: Copy>(comps: &[T], perm: &[usize]) -> Vec<T> {
    let mut out = comps.to_vec();
    for (k, &p) in perm.iter().enumerate() {
        out[p] = comps[k];
    }
    out
}

/// Canonical representative of the class of `comps`.
pub fn normalize(comps: Vec<IdealClass>, config: Config) -> Result<LatticeClass> {
    config.check_supported()?;
    if comps.len() != config.m {
        return Err(Error::RankMismatch {
            expected: config.m,
            got: comps.len(),
        });
    }
    for c in &comps {
        c.check_dim(config.dim)?;
    }
    let shift = anchor_shift(&comps, config.dim).ok_or(Error::AllFull)?;
    let comps = scale_components(&comps, &shift)?;
    Ok(LatticeClass { config, comps })
}

/// Stratum of a vertex class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Stratum {
    /// `Δ0[2]` in dim 2, `Δ0[1]` in dim 1.
    Inner,
    /// `Δ0[1]` in dim 2.
    InnerBoundary,
    /// `Δ0[0]`.
    Boundary,
}

impl Stratum {
    pub fn name(&self, dim: u8) -> &'static str {
        match (self, dim) {
            (Stratum::Inner, _) => "inner",
            (Stratum::InnerBoundary, _) => "inner-boundary",
            (Stratum::Boundary, 2) => "external",
            (Stratum::Boundary, _) => "boundary",
        }
    }

    pub fn label(&self, dim: u8) -> &'static str {
        match (self, dim) {
            (Stratum::Inner, 2) => "Δ0[2]",
            (Stratum::Inner, _) => "Δ0[1]",
            (Stratum::InnerBoundary, _) => "Δ0[1]",
            (Stratum::Boundary, _) => "Δ0[0]",
        }
    }
}

/// Sorted grade string of a class together with its stratum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TypeSignature {
    pub code: String,
    /// `None` for codes outside the vertex table.
    pub stratum: Option<Stratum>,
}

impl TypeSignature {
    pub fn is_vertex(&self) -> bool {
        self.stratum.is_some()
    }

    /// Bracket label used for dim-1 types (`[1]`, `[0]a`, `[0]b`).
    pub fn label(&self, config: Config) -> String {
        match (config.m, config.dim, self.code.as_str()) {
            (3, 1, "111") => "[1]".into(),
            (3, 1, "110") => "[0]a".into(),
            (3, 1, "100") => "[0]b".into(),
            (2, 1, "11") => "[1]".into(),
            (2, 1, "10") => "[0]".into(),
            _ => self.code.clone(),
        }
    }
}

fn stratum_of(config: Config, code: &str) -> Option<Stratum> {
    use Stratum::*;
    match (config.m, config.dim, code) {
        (3, 2, "222") | (2, 2, "22") | (3, 1, "111") | (2, 1, "11") => Some(Inner),
        (3, 2, "221") | (3, 2, "211") | (2, 2, "21") => Some(InnerBoundary),
        (3, 2, "220") | (3, 2, "200") | (2, 2, "20") => Some(Boundary),
        (3, 1, "110") | (3, 1, "100") | (2, 1, "10") => Some(Boundary),
        _ => None,
    }
}

impl LatticeClass {
    pub fn new(comps: Vec<IdealClass>, config: Config) -> Result<Self> {
        normalize(comps, config)
    }

    pub fn config(&self) -> Config {
        self.config
    }

    pub fn components(&self) -> &[IdealClass] {
        &self.comps
    }

    pub fn type_code(&self) -> String {
        let mut g: Vec<u8> = self.comps.iter().map(|c| c.grade(self.config.dim)).collect();
        g.sort_unstable_by(|a, b| b.cmp(a));
        g.iter().map(|d| char::from(b'0' + d)).collect()
    }

    pub fn vertex_type(&self) -> Result<TypeSignature> {
        self.config.check_supported()?;
        let code = self.type_code();
        let stratum = stratum_of(self.config, &code);
        Ok(TypeSignature { code, stratum })
    }

    pub fn is_vertex(&self) -> bool {
        stratum_of(self.config, &self.type_code()).is_some()
    }

    pub fn stratum(&self) -> Option<Stratum> {
        stratum_of(self.config, &self.type_code())
    }

    /// Largest absolute exponent over all components.
    pub fn radius(&self) -> i64 {
        self.comps
            .iter()
            .map(|c| match c {
                Principal(g) => g.coords().iter().map(|x| x.abs()).max().unwrap_or(0),
                PartialInfinite(j) => j.abs(),
                Full => 0,
            })
            .max()
            .unwrap_or(0)
    }

    /// Componentwise translation followed by normalization.
    pub fn act_translate(&self, tau: &[Gamma]) -> Result<LatticeClass> {
        if tau.len() != self.config.m {
            return Err(Error::RankMismatch {
                expected: self.config.m,
                got: tau.len(),
            });
        }
        for g in tau {
            if g.dim() != self.config.dim {
                return Err(Error::DimMismatch {
                    expected: self.config.dim,
                    got: g.dim(),
                });
            }
        }
        normalize(translate_components(&self.comps, tau)?, self.config)
    }

    /// Moves component `k` to position `perm[k]`.
    pub fn permute(&self, perm: &[usize]) -> Result<LatticeClass> {
        let mut seen = vec![false; self.config.m];
        if perm.len() != self.config.m || perm.iter().any(|&p| p >= seen.len() || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::BadPermutation(perm.to_vec()));
        }
        normalize(permute_components(&self.comps, perm), self.config)
    }

    /// The projection to the building over the rank-one field `(K, 𝒪)`.
    pub fn project_pi(&self) -> Result<LatticeClass> {
        if self.config.dim != 2 {
            return Err(Error::WrongDim {
                required: 2,
                got: self.config.dim,
            });
        }
        let comps = self.comps.iter().map(oclosure).collect::<Result<Vec<_>>>()?;
        normalize(comps, Config::new(self.config.m, 1))
    }

    /// Collapses each one-parameter boundary family onto a single vertex.
    pub fn compactify(&self) -> Result<Compactified> {
        if self.config != Config::new(3, 1) {
            return Err(Error::Unsupported {
                m: self.config.m,
                dim: self.config.dim,
            });
        }
        let sig = self.vertex_type()?;
        match sig.stratum {
            None => Err(Error::NotVertex(self.to_string())),
            Some(Stratum::Inner) => Ok(Compactified {
                class: self.clone(),
                family_index: None,
            }),
            Some(_) => {
                let fulls = self.comps.iter().filter(|c| c.is_full()).count();
                if fulls == 2 {
                    return Ok(Compactified {
                        class: self.clone(),
                        family_index: None,
                    });
                }
                let family_index = self.comps.iter().find_map(|c| match c {
                    Principal(g) if !g.is_zero() => Some(g.outer()),
                    _ => None,
                });
                let comps = self
                    .comps
                    .iter()
                    .map(|c| match c {
                        Principal(_) => IdealClass::unit(1),
                        other => *other,
                    })
                    .collect();
                Ok(Compactified {
                    class: normalize(comps, self.config)?,
                    family_index: Some(family_index.unwrap_or(0)),
                })
            }
        }
    }

    /// True when every exponent lies in `[-n, n]`.
    pub fn in_window(&self, n: i64) -> bool {
        self.radius() <= n
    }
}

/// Image of a vertex under the compactification map, with the index of
/// the boundary family it came from.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Compactified {
    pub class: LatticeClass,
    pub family_index: Option<i64>,
}

/// Prints an ideal in the lattice grammar.
pub fn ideal_to_string(c: &IdealClass, dim: u8) -> String {
    match (c, dim) {
        (Full, 1) => "F".into(),
        (Full, _) => "K".into(),
        (Principal(g), 1) if g.outer() == 0 => "O1".into(),
        (Principal(g), 1) => format!("m^{}", g.outer()),
        (Principal(g), _) => match g.coords() {
            [0, 0] => "O".into(),
            [1, 0] => "M".into(),
            [i, j] => format!("P({i},{j})"),
            _ => format!("P{g}"),
        },
        (PartialInfinite(0), _) => "Oc".into(),
        (PartialInfinite(1), _) => "Mc".into(),
        (PartialInfinite(j), _) => format!("Q({j})"),
    }
}

pub fn components_to_string(comps: &[IdealClass], dim: u8) -> String {
    let parts: Vec<String> = comps.iter().map(|c| ideal_to_string(c, dim)).collect();
    format!("<{}>", parts.join("|"))
}

impl fmt::Display for LatticeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&components_to_string(&self.comps, self.config.dim))
    }
}

/// One component of a ray base point: an exponent, or the full field.
pub type RayBase = Option<Gamma>;

/// Limit of `base + t·direction` as `t → ∞`.
///
/// Components moving with the lex-maximal direction survive; the others
/// grow without bound and become partially infinite (when they move at
/// the same `t2`-rate) or the whole field.
pub fn ray_limit(base: &[RayBase], direction: &[Gamma], config: Config) -> Result<LatticeClass> {
    config.check_supported()?;
    if base.len() != config.m || direction.len() != config.m {
        return Err(Error::RankMismatch {
            expected: config.m,
            got: base.len().min(direction.len()),
        });
    }
    for (b, d) in base.iter().zip(direction) {
        if d.dim() != config.dim || b.is_some_and(|g| g.dim() != config.dim) {
            return Err(Error::DimMismatch {
                expected: config.dim,
                got: d.dim(),
            });
        }
        if b.is_none() && !d.is_zero() {
            return Err(Error::InvalidRay(
                "full components must carry zero direction".into(),
            ));
        }
    }
    let live: Vec<usize> = (0..config.m).filter(|&k| base[k].is_some()).collect();
    if live.is_empty() {
        return Err(Error::AllFull);
    }
    let d_max = live.iter().map(|&k| direction[k]).max().expect("nonempty");
    if live.iter().all(|&k| direction[k] == d_max) {
        return Err(Error::ConstantDirection);
    }
    let i0 = *live.iter().find(|&&k| direction[k] == d_max).expect("attained");
    let anchor = base[i0].expect("live");
    let comps = (0..config.m)
        .map(|k| match base[k] {
            None => Full,
            Some(b) if direction[k] == d_max => Principal(b - anchor),
            Some(b) => {
                if config.dim == 2 && direction[k].outer() == d_max.outer() {
                    PartialInfinite((b - anchor).outer())
                } else {
                    Full
                }
            }
        })
        .collect();
    normalize(comps, config)
}
