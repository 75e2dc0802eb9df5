//! Spherical buildings of `PGL(2)` and `PGL(3)` over prime fields `F_q`.
//!
//! Points are lines of `F_q^m`, stored as vectors whose first nonzero
//! coordinate is 1. For `m = 3` planes are stored by their normal covector
//! in the same form, and a point lies on a plane when the dot product
//! vanishes.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};

pub type Vector = Vec<u64>;

pub fn check_modulus(q: u64) -> Result<()> {
    let prime = q >= 2 && (2..q).take_while(|d| d * d <= q).all(|d| q % d != 0);
    if prime && q <= 13 {
        Ok(())
    } else {
        Err(Error::BadModulus(q))
    }
}

fn inverse(a: u64, q: u64) -> u64 {
    let mut r = 1;
    for _ in 0..q - 2 {
        r = r * a % q;
    }
    r
}

/// Scales `v` so that its first nonzero coordinate is 1.
pub fn canonical(v: &[u64], q: u64) -> Option<Vector> {
    let lead = *v.iter().find(|&&x| x % q != 0)?;
    let inv = inverse(lead % q, q);
    Some(v.iter().map(|x| x % q * inv % q).collect())
}

fn dot(a: &[u64], b: &[u64], q: u64) -> u64 {
    a.iter().zip(b).map(|(x, y)| x * y % q).sum::<u64>() % q
}

fn cross(a: &[u64], b: &[u64], q: u64) -> Vector {
    let s = |x: u64, y: u64| (x + q * q - y) % q;
    vec![
        s(a[1] * b[2] % q, a[2] * b[1] % q),
        s(a[2] * b[0] % q, a[0] * b[2] % q),
        s(a[0] * b[1] % q, a[1] * b[0] % q),
    ]
}

/// All lines of `F_q^m` in lexicographic order of their representatives.
pub fn enum_points(m: usize, q: u64) -> Result<Vec<Vector>> {
    check_modulus(q)?;
    if m != 2 && m != 3 {
        return Err(Error::Unsupported { m, dim: 0 });
    }
    let mut out = Vec::new();
    let mut v = vec![0u64; m];
    loop {
        if canonical(&v, q).as_deref() == Some(v.as_slice()) {
            out.push(v.clone());
        }
        let mut k = m;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            v[k] += 1;
            if v[k] < q {
                break;
            }
            v[k] = 0;
        }
    }
}

/// Incidence graph of points and planes of `P^2(F_q)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlagComplex {
    pub q: u64,
    pub points: Vec<Vector>,
    pub planes: Vec<Vector>,
    /// `(point index, plane index)` pairs with the point on the plane.
    pub flags: Vec<(usize, usize)>,
}

impl FlagComplex {
    pub fn vertex_count(&self) -> usize {
        self.points.len() + self.planes.len()
    }

    /// The complex with the roles of points and planes exchanged.
    pub fn dual(&self) -> FlagComplex {
        let mut flags: Vec<(usize, usize)> = self.flags.iter().map(|&(a, b)| (b, a)).collect();
        flags.sort_unstable();
        FlagComplex {
            q: self.q,
            points: self.planes.clone(),
            planes: self.points.clone(),
            flags,
        }
    }

    pub fn point_index(&self, v: &[u64]) -> Option<usize> {
        let c = canonical(v, self.q)?;
        self.points.iter().position(|p| *p == c)
    }

    pub fn plane_index(&self, v: &[u64]) -> Option<usize> {
        let c = canonical(v, self.q)?;
        self.planes.iter().position(|p| *p == c)
    }
}

pub fn flag_complex(q: u64) -> Result<FlagComplex> {
    let points = enum_points(3, q)?;
    let planes = points.clone();
    let mut flags = Vec::new();
    for (i, p) in points.iter().enumerate() {
        for (j, h) in planes.iter().enumerate() {
            if dot(p, h, q) == 0 {
                flags.push((i, j));
            }
        }
    }
    Ok(FlagComplex {
        q,
        points,
        planes,
        flags,
    })
}

/// The apartment of a basis: its coordinate lines and, for `m = 3`, the
/// planes spanned by pairs of basis vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SphericalApartment {
    pub m: usize,
    pub q: u64,
    pub points: Vec<Vector>,
    pub planes: Vec<Vector>,
    pub flags: Vec<(Vector, Vector)>,
}

fn det(basis: &[Vector], q: u64) -> u64 {
    match basis.len() {
        2 => (basis[0][0] * basis[1][1] % q + q - basis[0][1] * basis[1][0] % q) % q,
        _ => dot(&basis[0], &cross(&basis[1], &basis[2], q), q),
    }
}

pub fn spherical_apartment(basis: &[Vector], q: u64) -> Result<SphericalApartment> {
    check_modulus(q)?;
    let m = basis.len();
    if !(m == 2 || m == 3) || basis.iter().any(|b| b.len() != m) {
        return Err(Error::Unsupported { m, dim: 0 });
    }
    let basis: Vec<Vector> = basis.iter().map(|b| b.iter().map(|x| x % q).collect()).collect();
    if det(&basis, q) == 0 {
        return Err(Error::SingularBasis(q));
    }
    let points: Vec<Vector> = basis.iter().map(|b| canonical(b, q).expect("nonzero")).collect();
    if m == 2 {
        return Ok(SphericalApartment {
            m,
            q,
            points,
            planes: Vec::new(),
            flags: Vec::new(),
        });
    }
    let pairs = [(0, 1), (0, 2), (1, 2)];
    let planes: Vec<Vector> = pairs
        .iter()
        .map(|&(a, b)| canonical(&cross(&basis[a], &basis[b], q), q).expect("independent"))
        .collect();
    let mut flags = Vec::new();
    for (pi, &(a, b)) in pairs.iter().enumerate() {
        flags.push((points[a].clone(), planes[pi].clone()));
        flags.push((points[b].clone(), planes[pi].clone()));
    }
    flags.sort();
    Ok(SphericalApartment {
        m,
        q,
        points,
        planes,
        flags,
    })
}

/// Whether the given incidences form one cycle of length `n` in the
/// bipartite point-plane graph.
pub fn is_cycle<P: Ord + Clone, H: Ord + Clone>(edges: &[(P, H)], n: usize) -> bool {
    if edges.len() != n {
        return false;
    }
    let mut adj: BTreeMap<(bool, usize), Vec<(bool, usize)>> = BTreeMap::new();
    let ps: Vec<P> = edges.iter().map(|e| e.0.clone()).collect::<BTreeSet<_>>().into_iter().collect();
    let hs: Vec<H> = edges.iter().map(|e| e.1.clone()).collect::<BTreeSet<_>>().into_iter().collect();
    for (p, h) in edges {
        let a = (false, ps.binary_search(p).expect("present"));
        let b = (true, hs.binary_search(h).expect("present"));
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    if adj.len() != n || adj.values().any(|v| v.len() != 2) {
        return false;
    }
    let start = *adj.keys().next().expect("nonempty");
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for y in &adj[&x] {
            if seen.insert(*y) {
                stack.push(*y);
            }
        }
    }
    seen.len() == n
}

/// The spherical building realizing the link of an inner vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Residue {
    Points { q: u64, points: Vec<Vector> },
    Flags(FlagComplex),
}

impl Residue {
    pub fn new(m: usize, q: u64) -> Result<Residue> {
        match m {
            2 => Ok(Residue::Points {
                q,
                points: enum_points(2, q)?,
            }),
            3 => Ok(Residue::Flags(flag_complex(q)?)),
            _ => Err(Error::Unsupported { m, dim: 0 }),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            Residue::Points { points, .. } => points.len(),
            Residue::Flags(f) => f.vertex_count(),
        }
    }

    pub fn edge_count(&self) -> usize {
        match self {
            Residue::Points { .. } => 0,
            Residue::Flags(f) => f.flags.len(),
        }
    }
}
