//! Finite windows of an apartment as simplicial complexes.
//!
//! Only nondegenerate simplices are stored. A window is the full
//! subcomplex on the vertex classes of the exponent box, so a smaller
//! window always sits inside a larger one.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::chain::{chains_through, vertex_classes_in_box, ChainType};
use crate::error::{Error, Result};
use crate::gamma::{Gamma, IdealClass, Principal};
use crate::lattice::{ray_limit, Config, LatticeClass, Stratum};
use crate::spherical::Residue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ApartmentSpec {
    pub config: Config,
    /// Largest absolute exponent of a vertex.
    pub bound: i64,
    pub include_inner_boundary: bool,
    pub include_external: bool,
}

impl ApartmentSpec {
    /// Every stratum included.
    pub fn new(config: Config, bound: i64) -> Self {
        ApartmentSpec {
            config,
            bound,
            include_inner_boundary: true,
            include_external: true,
        }
    }

    pub fn inner_only(config: Config, bound: i64) -> Self {
        ApartmentSpec {
            include_inner_boundary: false,
            include_external: false,
            ..Self::new(config, bound)
        }
    }

    fn admits(&self, s: Stratum) -> bool {
        match s {
            Stratum::Inner => true,
            Stratum::InnerBoundary => self.include_inner_boundary,
            Stratum::Boundary => self.include_external,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub class: LatticeClass,
    pub stratum: Stratum,
    pub type_code: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simplex {
    /// Sorted vertex ids.
    pub vertices: Vec<usize>,
    /// Types of the maximal chains spanning exactly this simplex.
    pub chain_types: Vec<ChainType>,
}

impl Simplex {
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    pub spec: ApartmentSpec,
    pub vertices: Vec<Vertex>,
    /// Sorted by dimension, then vertex ids.
    pub simplices: Vec<Simplex>,
    index: BTreeMap<LatticeClass, usize>,
}

/// All faces of a vertex set obtained by deleting vertices, itself included.
fn faces_of(vs: &[usize]) -> Vec<Vec<usize>> {
    let n = vs.len();
    (1u32..(1 << n))
        .map(|mask| (0..n).filter(|k| mask & (1 << k) != 0).map(|k| vs[k]).collect())
        .collect()
}

impl Window {
    fn assemble(spec: ApartmentSpec, vertices: Vec<Vertex>, spans: BTreeMap<Vec<usize>, BTreeSet<ChainType>>) -> Window {
        let index = vertices.iter().enumerate().map(|(k, v)| (v.class.clone(), k)).collect();
        let mut all: BTreeMap<Vec<usize>, BTreeSet<ChainType>> = (0..vertices.len()).map(|k| (vec![k], BTreeSet::new())).collect();
        for (vs, types) in spans {
            for f in faces_of(&vs) {
                all.entry(f).or_default();
            }
            all.entry(vs).or_default().extend(types);
        }
        let mut simplices: Vec<Simplex> = all
            .into_iter()
            .map(|(vertices, t)| Simplex {
                vertices,
                chain_types: t.into_iter().collect(),
            })
            .collect();
        simplices.sort_by(|a, b| (a.dim(), &a.vertices).cmp(&(b.dim(), &b.vertices)));
        Window {
            spec,
            vertices,
            simplices,
            index,
        }
    }

    pub fn vertex_id(&self, l: &LatticeClass) -> Option<usize> {
        self.index.get(l).copied()
    }

    pub fn contains_simplex(&self, vs: &[usize]) -> bool {
        let mut key = vs.to_vec();
        key.sort_unstable();
        self.simplices.binary_search_by(|s| (s.dim(), &s.vertices).cmp(&(key.len() - 1, &key))).is_ok()
    }

    pub fn simplices_of_dim(&self, d: usize) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter().filter(move |s| s.dim() == d)
    }

    /// Every face of every stored simplex is stored.
    pub fn is_closed(&self) -> bool {
        self.simplices
            .iter()
            .all(|s| faces_of(&s.vertices).iter().all(|f| self.contains_simplex(f)))
    }

    pub fn counts(&self) -> [usize; 3] {
        let mut c = [0; 3];
        for s in &self.simplices {
            c[s.dim()] += 1;
        }
        c
    }

    pub fn stratum_counts(&self) -> BTreeMap<Stratum, usize> {
        let mut out = BTreeMap::new();
        for v in &self.vertices {
            *out.entry(v.stratum).or_default() += 1;
        }
        out
    }

    /// One connected cycle through all vertices, with no higher simplices.
    pub fn is_cycle(&self) -> bool {
        let n = self.vertices.len();
        if n < 3 || self.counts() != [n, n, 0] || (0..n).any(|v| self.neighbours(v).len() != 2) {
            return false;
        }
        let mut seen = BTreeSet::from([0]);
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for y in self.neighbours(x) {
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen.len() == n
    }

    fn vertex(&self, v: usize) -> Result<&Vertex> {
        self.vertices.get(v).ok_or(Error::NoSuchVertex(v))
    }

    /// Ids of the vertices sharing an edge with `v`.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        self.simplices_of_dim(1)
            .filter(|s| s.vertices.contains(&v))
            .map(|s| if s.vertices[0] == v { s.vertices[1] } else { s.vertices[0] })
            .collect()
    }
}

pub fn build_apartment(spec: ApartmentSpec) -> Result<Window> {
    spec.config.check_supported()?;
    if spec.bound < 1 {
        return Err(Error::BadBound(spec.bound));
    }
    let mut vertices: Vec<Vertex> = vertex_classes_in_box(spec.config, spec.bound)?
        .into_iter()
        .filter_map(|class| {
            let stratum = class.stratum()?;
            spec.admits(stratum).then(|| Vertex {
                type_code: class.type_code(),
                stratum,
                class,
            })
        })
        .collect();
    vertices.sort_by_cached_key(|v| (v.stratum, v.class.to_string()));
    let index: BTreeMap<LatticeClass, usize> =
        vertices.iter().enumerate().map(|(k, v)| (v.class.clone(), k)).collect();
    let mut spans: BTreeMap<Vec<usize>, BTreeSet<ChainType>> = BTreeMap::new();
    for v in &vertices {
        for (t, seg) in chains_through(&v.class)? {
            // a chain leaving the window still leaves its trace as a face,
            // so the window is the full subcomplex on its vertices
            let members = seg.member_classes()?;
            let mut ids: Vec<usize> = members.iter().filter_map(|c| index.get(c).copied()).collect();
            ids.sort_unstable();
            let entry = spans.entry(ids.clone()).or_default();
            if ids.len() == members.len() {
                entry.insert(t);
            }
        }
    }
    Ok(Window::assemble(spec, vertices, spans))
}

/// Vertex classes of every simplex through `l`.
fn star_classes(l: &LatticeClass) -> Result<BTreeSet<LatticeClass>> {
    let mut out = BTreeSet::new();
    for (_, seg) in chains_through(l)? {
        out.extend(seg.member_classes()?);
    }
    Ok(out)
}

/// The simplices `σ` with `v ∉ σ` and `σ ∪ {v}` stored, on their own
/// vertex set.
pub fn link(w: &Window, v: usize) -> Result<Window> {
    let vx = w.vertex(v)?;
    if vx.stratum != Stratum::Inner {
        return Err(Error::NotInner(vx.class.to_string()));
    }
    if star_classes(&vx.class)?.iter().any(|c| w.vertex_id(c).is_none()) {
        return Err(Error::TruncatedStar(v));
    }
    let mut spans: BTreeMap<Vec<usize>, BTreeSet<ChainType>> = BTreeMap::new();
    for s in w.simplices.iter().filter(|s| s.vertices.contains(&v) && s.dim() > 0) {
        let rest: Vec<usize> = s.vertices.iter().copied().filter(|&x| x != v).collect();
        spans.entry(rest).or_default();
    }
    let kept: BTreeSet<usize> = spans.keys().flatten().copied().collect();
    let renum: BTreeMap<usize, usize> = kept.iter().enumerate().map(|(k, &old)| (old, k)).collect();
    let vertices = kept.iter().map(|&k| w.vertices[k].clone()).collect();
    let spans = spans
        .into_keys()
        .map(|vs| (vs.iter().map(|x| renum[x]).collect(), BTreeSet::new()))
        .collect();
    Ok(Window::assemble(w.spec, vertices, spans))
}

/// The spherical building over `F_q` realizing the link of an inner vertex.
pub fn link_residue(l: &LatticeClass, q: u64) -> Result<Residue> {
    if l.stratum() != Some(Stratum::Inner) {
        return Err(Error::NotInner(l.to_string()));
    }
    Residue::new(l.config().m, q)
}

/// What a simplex becomes under the projection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Collapse {
    Point,
    Edge,
    Isomorphic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectedSimplex {
    /// Index into the source window's simplices.
    pub source: usize,
    /// Sorted vertex ids in the image window.
    pub image: Vec<usize>,
    pub collapse: Collapse,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    pub image: Window,
    /// Image vertex id of every source vertex.
    pub vertex_map: Vec<usize>,
    pub simplices: Vec<ProjectedSimplex>,
}

/// Pushes a dim-2 window forward along the projection to dim 1.
pub fn project_window(w: &Window) -> Result<Projection> {
    let config = w.spec.config;
    if config.dim != 2 {
        return Err(Error::WrongDim {
            required: 2,
            got: config.dim,
        });
    }
    let target_config = Config::new(config.m, 1);
    let images: Vec<LatticeClass> = w.vertices.iter().map(|v| v.class.project_pi()).collect::<Result<_>>()?;
    let mut vertices: Vec<Vertex> = images
        .iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .map(|c| {
            let stratum = c.stratum().ok_or_else(|| Error::NotVertex(c.to_string()))?;
            Ok(Vertex {
                class: c.clone(),
                stratum,
                type_code: c.type_code(),
            })
        })
        .collect::<Result<_>>()?;
    vertices.sort_by_cached_key(|v| (v.stratum, v.class.to_string()));
    let index: BTreeMap<&LatticeClass, usize> = vertices.iter().enumerate().map(|(k, v)| (&v.class, k)).collect();
    let vertex_map: Vec<usize> = images.iter().map(|c| index[c]).collect();
    let mut spans = BTreeMap::new();
    let mut projected = Vec::with_capacity(w.simplices.len());
    for (k, s) in w.simplices.iter().enumerate() {
        let image: Vec<usize> = s
            .vertices
            .iter()
            .map(|&v| vertex_map[v])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let collapse = match image.len() {
            n if n == s.vertices.len() => Collapse::Isomorphic,
            1 => Collapse::Point,
            _ => Collapse::Edge,
        };
        spans.entry(image.clone()).or_insert_with(BTreeSet::new);
        projected.push(ProjectedSimplex {
            source: k,
            image,
            collapse,
        });
    }
    let spec = ApartmentSpec {
        config: target_config,
        ..w.spec
    };
    Ok(Projection {
        image: Window::assemble(spec, vertices, spans),
        vertex_map,
        simplices: projected,
    })
}

fn inner_exponents(w: &Window, v: usize) -> Result<Vec<Gamma>> {
    let vx = w.vertex(v)?;
    if vx.stratum != Stratum::Inner {
        return Err(Error::NotInner(vx.class.to_string()));
    }
    Ok(vx
        .class
        .components()
        .iter()
        .map(|c| match c {
            Principal(g) => *g,
            _ => unreachable!("inner vertices are principal"),
        })
        .collect())
}

fn class_id(w: &Window, comps: Vec<IdealClass>) -> Result<Option<usize>> {
    Ok(w.vertex_id(&LatticeClass::new(comps, w.spec.config)?))
}

/// The straight vertex sequences through an inner vertex obtained by moving
/// one component: three for `m = 3`, one for `m = 2`.
///
/// In dim 2 each line runs through the `t2`-blocks of the moving
/// component. Inside block `n` the component takes the values `P(i, n)` in
/// increasing `i`; the block opens with the limit as `i → -∞` and closes
/// with the limit as `i → +∞`, both inner-boundary classes.
pub fn pgl2_lines(w: &Window, v: usize) -> Result<Vec<Vec<usize>>> {
    let base = inner_exponents(w, v)?;
    let config = w.spec.config;
    let reach = 3 * w.spec.bound + 1;
    let moving: Vec<usize> = if config.m == 2 { vec![1] } else { (0..config.m).collect() };
    let mut lines = Vec::new();
    for k in moving {
        let mut seq = Vec::new();
        let mut push = |id: Option<usize>| {
            if let Some(id) = id {
                if seq.last() != Some(&id) {
                    seq.push(id);
                }
            }
        };
        let at = |g: Gamma| -> Vec<IdealClass> {
            let mut c: Vec<IdealClass> = base.iter().map(|&b| Principal(b)).collect();
            c[k] = Principal(g);
            c
        };
        match config.dim {
            1 => {
                for i in -reach..=reach {
                    push(class_id(w, at(base[k] + Gamma::d1(i)))?);
                }
            }
            _ => {
                let step = Gamma::unit_step(2);
                for n in -reach..=reach {
                    let origin = Gamma::d2(0, n);
                    let ray = |dir: Gamma| -> Result<Option<usize>> {
                        let mut b: Vec<Option<Gamma>> = base.iter().map(|&g| Some(g)).collect();
                        b[k] = Some(origin);
                        let mut d = vec![config.zero(); config.m];
                        d[k] = dir;
                        Ok(w.vertex_id(&ray_limit(&b, &d, config)?))
                    };
                    push(ray(-step)?);
                    for i in -reach..=reach {
                        push(class_id(w, at(Gamma::d2(i, n)))?);
                    }
                    push(ray(step)?);
                }
            }
        }
        lines.push(seq);
    }
    Ok(lines)
}

/// Convergence of a ray from an inner vertex to the boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Convergence {
    pub from: usize,
    pub direction: Vec<Gamma>,
    pub target: LatticeClass,
    pub target_id: Option<usize>,
}

/// For every inner vertex and component, the limits of the rays moving that
/// component alone by `±t` (dim 1) or by `±t1` and `±t2` (dim 2).
pub fn annotate_boundary(w: &Window) -> Result<Vec<Convergence>> {
    let config = w.spec.config;
    let mut steps = vec![Gamma::unit_step(config.dim)];
    if config.dim == 2 {
        steps.push(Gamma::outer_step(2));
    }
    let mut out = Vec::new();
    for (v, vx) in w.vertices.iter().enumerate() {
        if vx.stratum != Stratum::Inner {
            continue;
        }
        let base: Vec<Option<Gamma>> = inner_exponents(w, v)?.into_iter().map(Some).collect();
        for k in 0..config.m {
            for s in &steps {
                for dir in [*s, -*s] {
                    let mut direction = vec![config.zero(); config.m];
                    direction[k] = dir;
                    let target = ray_limit(&base, &direction, config)?;
                    out.push(Convergence {
                        from: v,
                        target_id: w.vertex_id(&target),
                        direction,
                        target,
                    });
                }
            }
        }
    }
    Ok(out)
}
