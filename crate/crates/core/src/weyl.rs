//! The affine Weyl group `N/T` as permutations extended by translations.
//!
//! An element `(σ, e)` sends a diagonal class `⊕ a_k e_k` to the class with
//! component `a_k · t^{e[σ(k)]}` at position `σ(k)`. Translations are kept
//! modulo the diagonal, with the first coordinate zero.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gamma::Gamma;
use crate::lattice::{permute_components, Config, LatticeClass};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeylElement {
    config: Config,
    perm: Vec<usize>,
    trans: Vec<Gamma>,
}

fn check_perm(perm: &[usize], m: usize) -> Result<()> {
    let mut seen = vec![false; m];
    if perm.len() != m || perm.iter().any(|&p| p >= m || std::mem::replace(&mut seen[p], true)) {
        return Err(Error::BadPermutation(perm.to_vec()));
    }
    Ok(())
}

fn check_gammas(gs: &[Gamma], config: Config) -> Result<()> {
    if gs.len() != config.m {
        return Err(Error::RankMismatch {
            expected: config.m,
            got: gs.len(),
        });
    }
    for g in gs {
        if g.dim() != config.dim {
            return Err(Error::DimMismatch {
                expected: config.dim,
                got: g.dim(),
            });
        }
    }
    Ok(())
}

/// Period of a permutation.
pub fn perm_order(perm: &[usize]) -> usize {
    let mut ord = 1;
    let mut seen = vec![false; perm.len()];
    for s in 0..perm.len() {
        let mut len = 0;
        let mut k = s;
        while !seen[k] {
            seen[k] = true;
            k = perm[k];
            len += 1;
        }
        if len > 0 {
            ord = lcm(ord, len);
        }
    }
    ord
}

fn lcm(a: usize, b: usize) -> usize {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

/// Result of `weyl_order`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Order {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{k}"),
            Order::Infinite => f.write_str("infinite"),
        }
    }
}

impl WeylElement {
    pub fn new(config: Config, perm: Vec<usize>, trans: Vec<Gamma>) -> Result<Self> {
        config.check_supported()?;
        check_perm(&perm, config.m)?;
        check_gammas(&trans, config)?;
        let base = trans[0];
        let trans = trans.into_iter().map(|g| g - base).collect();
        Ok(WeylElement { config, perm, trans })
    }

    pub fn identity(config: Config) -> Result<Self> {
        Self::new(config, (0..config.m).collect(), vec![config.zero(); config.m])
    }

    pub fn translation(config: Config, trans: Vec<Gamma>) -> Result<Self> {
        Self::new(config, (0..config.m).collect(), trans)
    }

    /// The transposition of coordinates `i - 1` and `i`, for `1 ≤ i < m`.
    pub fn s(config: Config, i: usize) -> Result<Self> {
        if i == 0 || i >= config.m {
            return Err(Error::Semantic(format!("s{i} needs 1 ≤ i < {}", config.m)));
        }
        let mut perm: Vec<usize> = (0..config.m).collect();
        perm.swap(i - 1, i);
        Self::new(config, perm, vec![config.zero(); config.m])
    }

    /// The monomial matrix swapping the outer basis vectors with entries
    /// `t^{-1}` and `t`, where `t = t1` for `k = 1` and `t = t2` for `k = 2`.
    pub fn w(config: Config, k: u8) -> Result<Self> {
        config.check_supported()?;
        let t = match (k, config.dim) {
            (1, 1) => Gamma::d1(1),
            (1, 2) => Gamma::d2(1, 0),
            (2, 2) => Gamma::d2(0, 1),
            (2, d) => return Err(Error::WrongDim { required: 2, got: d }),
            _ => return Err(Error::Semantic(format!("no generator w{k}"))),
        };
        let m = config.m;
        let mut perm: Vec<usize> = (0..m).collect();
        perm.swap(0, m - 1);
        let mut vals = vec![config.zero(); m];
        vals[0] = -t;
        vals[m - 1] = t;
        weyl_from_monomial(config, &perm, &vals)
    }

    pub fn config(&self) -> Config {
        self.config
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn trans(&self) -> &[Gamma] {
        &self.trans
    }

    pub fn is_identity(&self) -> bool {
        self.is_translation() && self.trans.iter().all(Gamma::is_zero)
    }

    pub fn is_translation(&self) -> bool {
        self.perm.iter().enumerate().all(|(k, &p)| k == p)
    }

    /// Projection onto the symmetric group.
    pub fn project(&self) -> Vec<usize> {
        self.perm.clone()
    }

    pub fn inverse(&self) -> WeylElement {
        let m = self.config.m;
        let mut inv = vec![0; m];
        for (k, &p) in self.perm.iter().enumerate() {
            inv[p] = k;
        }
        // (σ, e)^{-1} = (σ^{-1}, -σ^{-1}(e))
        let moved = permute_components(&self.trans, &inv);
        let trans = moved.into_iter().map(|g| -g).collect();
        WeylElement::new(self.config, inv, trans).expect("inverse of a valid element")
    }

    /// The translation part in sum-zero form, when the coordinate sum is
    /// divisible by `m`.
    pub fn to_sum_zero(&self) -> Option<Vec<Gamma>> {
        let m = self.config.m as i64;
        let total = self.trans.iter().fold(self.config.zero(), |a, &g| a + g);
        if total.coords().iter().any(|c| c % m != 0) {
            return None;
        }
        let d = Gamma::from_coords(&total.coords().iter().map(|c| c / m).collect::<Vec<_>>()).ok()?;
        Some(self.trans.iter().map(|&g| g - d).collect())
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let perm: Vec<String> = self.perm.iter().map(|p| (p + 1).to_string()).collect();
        let trans: Vec<String> = self.trans.iter().map(|g| g.to_string()).collect();
        write!(f, "[{}] T({})", perm.join(","), trans.join(";"))
    }
}

/// The class in `N/T` of the monomial matrix with valuation `vals[k]` at
/// row `perm[k]`, column `k`.
pub fn weyl_from_monomial(config: Config, perm: &[usize], vals: &[Gamma]) -> Result<WeylElement> {
    config.check_supported()?;
    check_perm(perm, config.m)?;
    check_gammas(vals, config)?;
    WeylElement::new(config, perm.to_vec(), permute_components(vals, perm))
}

/// Product chosen so that `act(uv, L) = act(u, act(v, L))`.
pub fn weyl_mul(u: &WeylElement, v: &WeylElement) -> Result<WeylElement> {
    u.config.check_same(&v.config)?;
    let perm: Vec<usize> = v.perm.iter().map(|&k| u.perm[k]).collect();
    let moved = permute_components(&v.trans, &u.perm);
    let trans = u.trans.iter().zip(moved).map(|(&a, b)| a + b).collect();
    WeylElement::new(u.config, perm, trans)
}

pub fn act(w: &WeylElement, l: &LatticeClass) -> Result<LatticeClass> {
    w.config.check_same(&l.config())?;
    l.permute(&w.perm)?.act_translate(&w.trans)
}

pub fn weyl_pow(w: &WeylElement, k: usize) -> Result<WeylElement> {
    let mut acc = WeylElement::identity(w.config)?;
    for _ in 0..k {
        acc = weyl_mul(&acc, w)?;
    }
    Ok(acc)
}

pub fn weyl_order(w: &WeylElement) -> Order {
    let cap = perm_order(&w.perm);
    let mut acc = w.clone();
    for k in 1..=cap {
        if acc.is_identity() {
            return Order::Finite(k);
        }
        acc = weyl_mul(&acc, w).expect("same configuration");
    }
    Order::Infinite
}

/// Fixed locus of an involution on the line apartment `x_i = ⟨O ⊕ m^i⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FixedLocus {
    Vertex(i64),
    /// Midpoint of the edge between `x_i` and `x_{i+1}`.
    EdgeMidpoint(i64),
}

impl fmt::Display for FixedLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixedLocus::Vertex(i) => write!(f, "x_{i}"),
            FixedLocus::EdgeMidpoint(i) => write!(f, "midpoint(x_{i}, x_{})", i + 1),
        }
    }
}

/// `w(x_i) = x_{c - i}` with `c = e_2 - e_1`, so the fixed index is `c / 2`.
pub fn involution_fixed_point(w: &WeylElement) -> Result<Option<FixedLocus>> {
    let config = w.config;
    if config != Config::new(2, 1) {
        return Err(Error::Unsupported {
            m: config.m,
            dim: config.dim,
        });
    }
    if w.is_translation() {
        return Ok(None);
    }
    if weyl_order(w) != Order::Finite(2) {
        return Err(Error::NotInvolution);
    }
    let c = (w.trans[1] - w.trans[0]).outer();
    Ok(Some(if c.rem_euclid(2) == 0 {
        FixedLocus::Vertex(c / 2)
    } else {
        FixedLocus::EdgeMidpoint(c.div_euclid(2))
    }))
}

/// Embeds a rank-two element into rank three acting on coordinates `p`
/// and `q`, fixing the third.
pub fn embed_rank2(w: &WeylElement, p: usize, q: usize) -> Result<WeylElement> {
    if w.config.m != 2 || p == q || p > 2 || q > 2 {
        return Err(Error::Semantic("embedding needs a rank-two element and two distinct coordinates < 3".into()));
    }
    let config = Config::new(3, w.config.dim);
    let slots = [p, q];
    let mut perm = vec![0, 1, 2];
    let mut trans = vec![config.zero(); 3];
    for k in 0..2 {
        perm[slots[k]] = slots[w.perm[k]];
        trans[slots[k]] = w.trans[k];
    }
    WeylElement::new(config, perm, trans)
}

/// The standard generators: every `s_i`, then `w1` and (in dim 2) `w2`.
pub fn generators(config: Config) -> Result<Vec<WeylElement>> {
    let mut out = Vec::new();
    for i in 1..config.m {
        out.push(WeylElement::s(config, i)?);
    }
    out.push(WeylElement::w(config, 1)?);
    if config.dim == 2 {
        out.push(WeylElement::w(config, 2)?);
    }
    Ok(out)
}

/// Distinct products of at most `radius` generators.
pub fn generator_ball(config: Config, radius: usize) -> Result<Vec<WeylElement>> {
    let gens = generators(config)?;
    let mut ball: BTreeSet<WeylElement> = BTreeSet::from([WeylElement::identity(config)?]);
    let mut frontier: Vec<WeylElement> = ball.iter().cloned().collect();
    for _ in 0..radius {
        let mut next = Vec::new();
        for u in &frontier {
            for g in &gens {
                let x = weyl_mul(u, g)?;
                if ball.insert(x.clone()) {
                    next.push(x);
                }
            }
        }
        frontier = next;
    }
    Ok(ball.into_iter().collect())
}
