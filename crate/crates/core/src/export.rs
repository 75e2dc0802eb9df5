//! JSON, DOT, SVG and plain-text renderings.
//!
//! Every renderer walks vertices and simplices in window order, so equal
//! inputs give byte-identical output.

use std::fmt::Write as _;

use serde::Serialize;

use crate::complex::{annotate_boundary, Collapse, Convergence, Projection, Window};
use crate::error::Result;
use crate::gamma::{Full, IdealClass, PartialInfinite, Principal};
use crate::lattice::{LatticeClass, Stratum};
use crate::spherical::Residue;

/// The JSON schema of `window_json`.
pub const WINDOW_SCHEMA: &str = include_str!("../schema/window.schema.json");

#[derive(Serialize)]
struct ConfigDoc {
    m: usize,
    dim: u8,
}

#[derive(Serialize)]
struct VertexDoc {
    id: usize,
    lattice: String,
    stratum: &'static str,
    #[serde(rename = "type")]
    type_code: String,
}

#[derive(Serialize)]
struct SimplexDoc {
    vertices: Vec<usize>,
    dim: usize,
    chain_types: Vec<&'static str>,
}

#[derive(Serialize)]
struct ConvergenceDoc {
    from: usize,
    direction: Vec<String>,
    target: String,
    target_id: Option<usize>,
}

#[derive(Serialize)]
struct WindowDoc {
    config: ConfigDoc,
    bound: i64,
    counts: [usize; 3],
    vertices: Vec<VertexDoc>,
    simplices: Vec<SimplexDoc>,
    convergence: Vec<ConvergenceDoc>,
}

fn window_doc(w: &Window, convergence: &[Convergence]) -> WindowDoc {
    let dim = w.spec.config.dim;
    WindowDoc {
        config: ConfigDoc {
            m: w.spec.config.m,
            dim,
        },
        bound: w.spec.bound,
        counts: w.counts(),
        vertices: w
            .vertices
            .iter()
            .enumerate()
            .map(|(id, v)| VertexDoc {
                id,
                lattice: v.class.to_string(),
                stratum: v.stratum.name(dim),
                type_code: v.type_code.clone(),
            })
            .collect(),
        simplices: w
            .simplices
            .iter()
            .map(|s| SimplexDoc {
                vertices: s.vertices.clone(),
                dim: s.dim(),
                chain_types: s.chain_types.iter().map(|t| t.tag()).collect(),
            })
            .collect(),
        convergence: convergence
            .iter()
            .map(|c| ConvergenceDoc {
                from: c.from,
                direction: c.direction.iter().map(|g| g.to_string()).collect(),
                target: c.target.to_string(),
                target_id: c.target_id,
            })
            .collect(),
    }
}

fn pretty<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("serializable");
    s.push('\n');
    s
}

/// The window with its boundary convergence annotations.
pub fn window_json(w: &Window) -> Result<String> {
    Ok(pretty(&window_doc(w, &annotate_boundary(w)?)))
}

/// A window without annotations, as used for links and projections.
pub fn plain_window_json(w: &Window) -> String {
    pretty(&window_doc(w, &[]))
}

fn colour(s: Stratum) -> &'static str {
    match s {
        Stratum::Inner => "black",
        Stratum::InnerBoundary => "blue",
        Stratum::Boundary => "red",
    }
}

pub fn window_dot(w: &Window) -> String {
    let mut out = String::from("graph apartment {\n");
    for (id, v) in w.vertices.iter().enumerate() {
        let _ = writeln!(out, "  v{id} [label=\"{}\", color={}];", v.class, colour(v.stratum));
    }
    for s in w.simplices_of_dim(1) {
        let _ = writeln!(out, "  v{} -- v{};", s.vertices[0], s.vertices[1]);
    }
    out.push_str("}\n");
    out
}

pub fn window_text(w: &Window) -> String {
    let c = w.spec.config;
    let mut out = String::new();
    let [v, e, t] = w.counts();
    let _ = writeln!(out, "m={} dim={} N={}", c.m, c.dim, w.spec.bound);
    let _ = writeln!(out, "vertices={v} edges={e} triangles={t}");
    for (s, n) in w.stratum_counts() {
        let _ = writeln!(out, "{}={n}", s.name(c.dim));
    }
    for (id, vx) in w.vertices.iter().enumerate() {
        let _ = writeln!(out, "{id} {} {} {}", vx.class, vx.type_code, vx.stratum.name(c.dim));
    }
    out
}

/// Planar coordinates: the component exponents against unit vectors summing
/// to zero. In dim 2 each `t2`-block is a big cell of side `2N + 3`, a
/// partially infinite component sits just past the left end of its block,
/// and a full component is pushed beyond the window.
fn position(l: &LatticeClass, bound: i64) -> (f64, f64) {
    let config = l.config();
    let h = 3f64.sqrt() / 2.0;
    let units: &[(f64, f64)] = if config.m == 2 {
        &[(-1.0, 0.0), (1.0, 0.0)]
    } else {
        &[(-1.5, -h), (1.0, 0.0), (0.5, h)]
    };
    let big = if config.dim == 2 { 2 * bound + 3 } else { 1 };
    let far = (bound + 2) * big;
    let value = |c: &IdealClass| -> i64 {
        match c {
            Principal(g) if config.dim == 2 => g.outer() * big + g.inner(),
            Principal(g) => g.outer(),
            PartialInfinite(j) => j * big - bound - 1,
            Full => -far,
        }
    };
    l.components().iter().zip(units).fold((0.0, 0.0), |(x, y), (c, u)| {
        let v = value(c) as f64;
        (x + v * u.0, y + v * u.1)
    })
}

/// Draws the window: faces, edges, one `node` circle per vertex, and dotted
/// convergence lines from the rim of the inner part to boundary vertices.
pub fn window_svg(w: &Window) -> Result<String> {
    let scale = 40.0;
    let pos: Vec<(f64, f64)> = w
        .vertices
        .iter()
        .map(|v| {
            let (x, y) = position(&v.class, w.spec.bound);
            (x * scale, -y * scale)
        })
        .collect();
    let (mut x0, mut y0, mut x1, mut y1) = (0f64, 0f64, 0f64, 0f64);
    for &(x, y) in &pos {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let pad = scale;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.3} {:.3} {:.3} {:.3}\">",
        x0 - pad,
        y0 - pad,
        x1 - x0 + 2.0 * pad,
        y1 - y0 + 2.0 * pad
    );
    out.push_str("<style>.face{fill:#eee}.edge{stroke:#444}.convergence{stroke:#888;stroke-dasharray:3,3}.node{stroke:none}</style>\n");
    for s in w.simplices_of_dim(2) {
        let pts: Vec<String> = s.vertices.iter().map(|&v| format!("{:.3},{:.3}", pos[v].0, pos[v].1)).collect();
        let _ = writeln!(out, "<polygon class=\"face\" points=\"{}\"/>", pts.join(" "));
    }
    for s in w.simplices_of_dim(1) {
        let (a, b) = (pos[s.vertices[0]], pos[s.vertices[1]]);
        let _ = writeln!(
            out,
            "<line class=\"edge\" x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\"/>",
            a.0, a.1, b.0, b.1
        );
    }
    for c in annotate_boundary(w)? {
        let Some(t) = c.target_id else { continue };
        let next = w.vertices[c.from].class.act_translate(&c.direction)?;
        if w.vertex_id(&next).is_some() || w.vertices[t].stratum == Stratum::Inner {
            continue;
        }
        let (a, b) = (pos[c.from], pos[t]);
        let _ = writeln!(
            out,
            "<line class=\"convergence\" x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\"/>",
            a.0, a.1, b.0, b.1
        );
    }
    for (v, vx) in w.vertices.iter().enumerate() {
        let _ = writeln!(
            out,
            "<circle class=\"node\" cx=\"{:.3}\" cy=\"{:.3}\" r=\"4\" fill=\"{}\"><title>{}</title></circle>",
            pos[v].0,
            pos[v].1,
            colour(vx.stratum),
            xml_escape(&vx.class.to_string())
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn collapse_name(c: Collapse) -> &'static str {
    match c {
        Collapse::Point => "point",
        Collapse::Edge => "edge",
        Collapse::Isomorphic => "isomorphic",
    }
}

#[derive(Serialize)]
struct ProjectedDoc {
    simplex: Vec<usize>,
    image: Vec<usize>,
    collapse: &'static str,
}

#[derive(Serialize)]
struct ProjectionDoc {
    source: WindowDoc,
    image: WindowDoc,
    vertex_map: Vec<usize>,
    simplices: Vec<ProjectedDoc>,
}

pub fn projection_json(source: &Window, p: &Projection) -> String {
    pretty(&ProjectionDoc {
        source: window_doc(source, &[]),
        image: window_doc(&p.image, &[]),
        vertex_map: p.vertex_map.clone(),
        simplices: p
            .simplices
            .iter()
            .map(|s| ProjectedDoc {
                simplex: source.simplices[s.source].vertices.clone(),
                image: s.image.clone(),
                collapse: collapse_name(s.collapse),
            })
            .collect(),
    })
}

pub fn projection_text(source: &Window, p: &Projection) -> String {
    let mut out = String::new();
    let mut tally = std::collections::BTreeMap::new();
    for s in &p.simplices {
        let src = &source.simplices[s.source];
        let tag = src.chain_types.first().map_or("face", |t| t.tag());
        *tally.entry((src.dim(), tag, collapse_name(s.collapse))).or_insert(0usize) += 1;
    }
    let [v, e, t] = p.image.counts();
    let _ = writeln!(out, "image vertices={v} edges={e} triangles={t}");
    for ((d, tag, c), n) in tally {
        let _ = writeln!(out, "dim={d} {tag} -> {c}: {n}");
    }
    out
}

#[derive(Serialize)]
struct ResidueDoc<'a> {
    m: usize,
    q: u64,
    points: &'a [Vec<u64>],
    planes: &'a [Vec<u64>],
    flags: &'a [(usize, usize)],
}

fn residue_doc(r: &Residue) -> ResidueDoc<'_> {
    match r {
        Residue::Points { q, points } => ResidueDoc {
            m: 2,
            q: *q,
            points,
            planes: &[],
            flags: &[],
        },
        Residue::Flags(f) => ResidueDoc {
            m: 3,
            q: f.q,
            points: &f.points,
            planes: &f.planes,
            flags: &f.flags,
        },
    }
}

pub fn residue_json(r: &Residue) -> String {
    pretty(&residue_doc(r))
}

fn vector(v: &[u64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(":")
}

pub fn residue_dot(r: &Residue) -> String {
    let d = residue_doc(r);
    let mut out = String::from("graph residue {\n");
    for (k, p) in d.points.iter().enumerate() {
        let _ = writeln!(out, "  p{k} [label=\"[{}]\"];", vector(p));
    }
    for (k, h) in d.planes.iter().enumerate() {
        let _ = writeln!(out, "  h{k} [label=\"({})\", shape=box];", vector(h));
    }
    for (p, h) in d.flags {
        let _ = writeln!(out, "  p{p} -- h{h};");
    }
    out.push_str("}\n");
    out
}

pub fn residue_text(r: &Residue) -> String {
    let d = residue_doc(r);
    format!(
        "m={} q={} points={} planes={} flags={}\n",
        d.m,
        d.q,
        d.points.len(),
        d.planes.len(),
        d.flags.len()
    )
}
